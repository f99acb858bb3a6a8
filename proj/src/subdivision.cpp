#include "nsset/subdivision.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsset {

BarrattResult barratt(Complex x) {
    SharpResult s = sharp(std::move(x));
    NerveResult n = nerve(s.poset);
    return {std::move(s), std::move(n)};
}

int BDeltaTables::element_of_subset(const std::vector<int>& subset) const {
    int offset = 0;
    for (int d = 0; d + 1 < static_cast<int>(subset.size()); ++d) offset += delta->count(d);
    return offset + subset_rank(n, subset);
}

const std::vector<int>& BDeltaTables::subset_of_element(int e) const {
    return element_subsets[static_cast<size_t>(e)];
}

const BDeltaTables& bdelta(int n) {
    static std::vector<std::unique_ptr<BDeltaTables>> cache;
    if (static_cast<int>(cache.size()) <= n) cache.resize(static_cast<size_t>(n) + 1);
    auto& slot = cache[static_cast<size_t>(n)];
    if (!slot) {
        auto t = std::make_unique<BDeltaTables>();
        t->n = n;
        t->delta = standard_simplex(n);
        t->sharp = sharp(t->delta);
        t->nerve = nerve(t->sharp.poset);
        for (SimplexId e : t->sharp.elements)
            t->element_subsets.push_back(subsets_of_size(n, e.dim + 1)[static_cast<size_t>(e.index)]);
        slot = std::move(t);
    }
    return *slot;
}

namespace {

// B(dDelta[n]) with its chain table; the face poset of dDelta[n] indexes
// proper subsets exactly like Delta[n] does in dimensions below n.
struct BoundaryTables {
    Complex boundary;
    SharpResult sharp_result;
    NerveResult nerve_result;
};

const BoundaryTables& bboundary(int n) {
    static std::vector<std::unique_ptr<BoundaryTables>> cache;
    if (static_cast<int>(cache.size()) <= n) cache.resize(static_cast<size_t>(n) + 1);
    auto& slot = cache[static_cast<size_t>(n)];
    if (!slot) {
        auto t = std::make_unique<BoundaryTables>();
        t->boundary = standard_boundary(n);
        t->sharp_result = sharp(t->boundary);
        t->nerve_result = nerve(t->sharp_result.poset);
        slot = std::move(t);
    }
    return *slot;
}

// The inclusion B(dDelta[n]) -> B(Delta[n]): a chain of proper subsets is
// the same chain one poset over.
SimpMap boundary_nerve_inclusion(int n) {
    const BoundaryTables& bt = bboundary(n);
    const BDeltaTables& dt = bdelta(n);
    const FinSimpSet& src = *bt.nerve_result.complex;
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(src.dim()) + 1);
    for (int m = 0; m <= src.dim(); ++m)
        for (int i = 0; i < src.count(m); ++i) {
            std::vector<int> target_chain;
            for (int e : bt.nerve_result.chain_of({m, i})) {
                SimplexId face = bt.sharp_result.elements[static_cast<size_t>(e)];
                target_chain.push_back(
                    dt.element_of_subset(subsets_of_size(n, face.dim + 1)[static_cast<size_t>(face.index)]));
            }
            images[static_cast<size_t>(m)].push_back(nondegenerate(dt.nerve.index_of(target_chain)));
        }
    return SimpMap(bt.nerve_result.complex, dt.nerve.complex, std::move(images));
}

}  // namespace

SdResult sd(Complex x) {
    SdResult out{empty_complex(), x, {}, {}};
    out.cells.resize(static_cast<size_t>(x->dim() < 0 ? 0 : x->dim() + 1));
    if (x->empty()) return out;

    // Stage 0: the vertex skeleton is its own subdivision.
    {
        SimpSetBuilder builder;
        for (int i = 0; i < x->count(0); ++i) builder.add_vertex(x->label({0, i}));
        out.sd = builder.build(false);
        for (int i = 0; i < x->count(0); ++i)
            out.cells[0].push_back(SimpMap(bdelta(0).nerve.complex, out.sd, {{nondegenerate({0, i})}}));
    }

    for (int n = 1; n <= x->dim(); ++n) {
        if (x->count(n) == 0) continue;
        const BDeltaTables& dt = bdelta(n);
        const BoundaryTables& bt = bboundary(n);
        SimpMap incl = boundary_nerve_inclusion(n);

        // Attaching map per nondegenerate n-cell: the subdivision of the
        // restriction of its representing map to the boundary.
        std::vector<SimpMap> attach;
        const FinSimpSet& bsrc = *bt.nerve_result.complex;
        for (int ci = 0; ci < x->count(n); ++ci) {
            std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(bsrc.dim()) + 1);
            for (int m = 0; m <= bsrc.dim(); ++m)
                for (int i = 0; i < bsrc.count(m); ++i) {
                    std::vector<std::vector<int>> subsets;
                    for (int e : bt.nerve_result.chain_of({m, i})) {
                        SimplexId fe = bt.sharp_result.elements[static_cast<size_t>(e)];
                        subsets.push_back(subsets_of_size(n, fe.dim + 1)[static_cast<size_t>(fe.index)]);
                    }
                    // Drop the smallest vertex missing from the top subset.
                    int j = 0;
                    {
                        const auto& top = subsets.back();
                        while (j < static_cast<int>(top.size()) && top[static_cast<size_t>(j)] == j) ++j;
                    }
                    const NormalSimplex& face = x->face({n, ci}, j);
                    const BDeltaTables& ft = bdelta(face.base.dim);
                    std::vector<int> weak_chain;
                    for (auto& subset : subsets) {
                        std::vector<int> shifted;
                        shifted.reserve(subset.size());
                        for (int v : subset) shifted.push_back(v < j ? v : v - 1);
                        auto [epi, mono] =
                            epi_mono_factor(compose(face.degeneracy, Operator(n - 1, std::move(shifted))));
                        weak_chain.push_back(ft.element_of_subset(mono.images()));
                    }
                    NormalSimplex in_cell = ft.nerve.normal_form(weak_chain);
                    images[static_cast<size_t>(m)].push_back(
                        out.cells[static_cast<size_t>(face.base.dim)][static_cast<size_t>(face.base.index)].apply(
                            in_cell));
                }
            attach.emplace_back(bt.nerve_result.complex, out.sd, std::move(images));
        }

        std::vector<Complex> boundary_parts(static_cast<size_t>(x->count(n)), bt.nerve_result.complex);
        std::vector<Complex> full_parts(static_cast<size_t>(x->count(n)), dt.nerve.complex);
        CoproductResult a_side = coproduct(boundary_parts);
        CoproductResult c_side = coproduct(full_parts);
        std::vector<SimpMap> inclusion_legs;
        for (int ci = 0; ci < x->count(n); ++ci)
            inclusion_legs.push_back(compose_maps(c_side.injections[static_cast<size_t>(ci)], incl));
        SimpMap f = cotuple(a_side, attach);
        SimpMap g = cotuple(a_side, inclusion_legs);
        PushoutResult p = pushout(f, g);

        for (int d = 0; d < n; ++d)
            for (auto& cell : out.cells[static_cast<size_t>(d)]) cell = compose_maps(p.left, cell);
        for (int ci = 0; ci < x->count(n); ++ci)
            out.cells[static_cast<size_t>(n)].push_back(
                compose_maps(p.right, c_side.injections[static_cast<size_t>(ci)]));
        out.sd = p.apex;
    }

    // Witnesses: the first cell simplex mapping onto each nondegenerate
    // simplex of Sd X, in canonical cell order.
    out.witness.resize(static_cast<size_t>(out.sd->dim()) + 1);
    for (int m = 0; m <= out.sd->dim(); ++m)
        out.witness[static_cast<size_t>(m)].assign(static_cast<size_t>(out.sd->count(m)),
                                                   {SimplexId{-1, -1}, SimplexId{-1, -1}});
    for (int d = 0; d <= x->dim(); ++d)
        for (int ci = 0; ci < x->count(d); ++ci) {
            const SimpMap& cell = out.cells[static_cast<size_t>(d)][static_cast<size_t>(ci)];
            const FinSimpSet& bsrc = cell.source();
            for (int m = 0; m <= bsrc.dim(); ++m)
                for (int i = 0; i < bsrc.count(m); ++i) {
                    NormalSimplex img = cell.apply(SimplexId{m, i});
                    if (img.is_degenerate()) continue;
                    auto& slot =
                        out.witness[static_cast<size_t>(img.base.dim)][static_cast<size_t>(img.base.index)];
                    if (slot.first.dim < 0) slot = {SimplexId{d, ci}, SimplexId{m, i}};
                }
        }
    for (int m = 0; m <= out.sd->dim(); ++m)
        for (const auto& w : out.witness[static_cast<size_t>(m)])
            if (w.first.dim < 0) throw std::logic_error("sd: simplex not covered by any cell");
    out.sd->validate();
    return out;
}

SdResult sd_iterated(Complex x, int iterations, Complex* intermediate) {
    if (iterations < 1) throw std::invalid_argument("sd_iterated: need at least one iteration");
    SdResult r = sd(std::move(x));
    for (int k = 1; k < iterations; ++k) {
        if (intermediate) *intermediate = r.sd;
        r = sd(r.sd);
    }
    return r;
}

namespace {

// Image of a witness chain under the sharp of an operator-precomposition,
// normalized inside B(Delta[target]).
NormalSimplex push_chain_through(SimplexId witness_cell, SimplexId witness_chain, const Operator& op,
                                 const BDeltaTables& target_tables) {
    const BDeltaTables& dt = bdelta(witness_cell.dim);
    std::vector<int> weak_chain;
    for (int e : dt.nerve.chain_of(witness_chain)) {
        auto [epi, mono] = epi_mono_factor(compose(op, Operator(dt.n, dt.subset_of_element(e))));
        weak_chain.push_back(target_tables.element_of_subset(mono.images()));
    }
    return target_tables.nerve.normal_form(weak_chain);
}

}  // namespace

SimpMap sd_map(const SimpMap& f, const SdResult& sx, const SdResult& sy) {
    if (!structural_equal(f.source(), *sx.base) || !structural_equal(f.target(), *sy.base))
        throw std::invalid_argument("sd_map: subdivision tables do not match the map");
    const FinSimpSet& src = *sx.sd;
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(src.dim()) + 1);
    for (int m = 0; m <= src.dim(); ++m)
        for (int i = 0; i < src.count(m); ++i) {
            auto [cell, chain] = sx.witness[static_cast<size_t>(m)][static_cast<size_t>(i)];
            NormalSimplex fx = f.apply(cell);
            NormalSimplex in_cell = push_chain_through(cell, chain, fx.degeneracy, bdelta(fx.base.dim));
            images[static_cast<size_t>(m)].push_back(
                sy.cells[static_cast<size_t>(fx.base.dim)][static_cast<size_t>(fx.base.index)].apply(in_cell));
        }
    return SimpMap(sx.sd, sy.sd, std::move(images));
}

SimpMap b_map(const SdResult& sx) {
    BarrattResult bx = barratt(sx.base);
    const FinSimpSet& src = *sx.sd;
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(src.dim()) + 1);
    for (int m = 0; m <= src.dim(); ++m)
        for (int i = 0; i < src.count(m); ++i) {
            auto [cell, chain] = sx.witness[static_cast<size_t>(m)][static_cast<size_t>(i)];
            const BDeltaTables& dt = bdelta(cell.dim);
            std::vector<int> weak_chain;
            for (int e : dt.nerve.chain_of(chain))
                weak_chain.push_back(
                    bx.sharp.index_of(sx.base->act(cell, Operator(cell.dim, dt.subset_of_element(e))).base));
            images[static_cast<size_t>(m)].push_back(bx.nerve.normal_form(weak_chain));
        }
    SimpMap out(sx.sd, bx.nerve.complex, std::move(images));
    require_valid(out, "b_map");
    return out;
}

SimpMap last_vertex(const SdResult& sx) {
    const FinSimpSet& src = *sx.sd;
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(src.dim()) + 1);
    for (int m = 0; m <= src.dim(); ++m)
        for (int i = 0; i < src.count(m); ++i) {
            auto [cell, chain] = sx.witness[static_cast<size_t>(m)][static_cast<size_t>(i)];
            const BDeltaTables& dt = bdelta(cell.dim);
            std::vector<int> maxima;
            for (int e : dt.nerve.chain_of(chain)) maxima.push_back(dt.subset_of_element(e).back());
            images[static_cast<size_t>(m)].push_back(sx.base->act(cell, Operator(cell.dim, std::move(maxima))));
        }
    SimpMap out(sx.sd, sx.base, std::move(images));
    require_valid(out, "last_vertex");
    return out;
}

Subcomplex sd_subcomplex(const SdResult& sx, const Subcomplex& a) {
    if (!structural_equal(*a.ambient, *sx.base))
        throw std::invalid_argument("sd_subcomplex: subcomplex does not live in the base");
    Materialized m = materialize(a);
    SdResult sa = sd(m.complex);
    return map_image(sd_map(m.inclusion, sa, sx));
}

}  // namespace nsset
