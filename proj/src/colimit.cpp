#include "nsset/colimit.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace nsset {

namespace {

// A surjection [n] -> [d] is determined by the positions where its value
// increases, so members pack exactly into 64 bits at this scale.
uint64_t pack_member(int origin, const NormalSimplex& s) {
    uint64_t mask = 0;
    const auto& im = s.degeneracy.images();
    for (size_t i = 1; i < im.size(); ++i)
        if (im[i] > im[i - 1]) mask |= uint64_t{1} << (i - 1);
    return (uint64_t(origin) << 63) | (uint64_t(s.base.dim + 1) << 56) | (mask << 40) |
           uint64_t(static_cast<uint32_t>(s.base.index));
}

struct DegreeTable {
    std::vector<std::pair<int, NormalSimplex>> entries;  // (origin, simplex)
    std::unordered_map<uint64_t, int> index;
    std::vector<int> parent;
    std::vector<char> root_degenerate;

    void add(int origin, const FinSimpSet& x, int degree) {
        for (auto& s : x.simplices_of_degree(degree)) {
            index.emplace(pack_member(origin, s), static_cast<int>(entries.size()));
            entries.push_back({origin, s});
        }
    }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;  // keep the smallest entry as root
    }
    int lookup(int origin, const NormalSimplex& s) const {
        auto it = index.find(pack_member(origin, s));
        if (it == index.end()) throw std::logic_error("pushout: member not in table");
        return it->second;
    }
};

}  // namespace

CoproductResult coproduct(const std::vector<Complex>& parts) {
    int dim = -1;
    for (const auto& p : parts) dim = std::max(dim, p->dim());
    std::vector<std::vector<int>> offsets(parts.size());
    SimpSetBuilder builder;
    // Dimension-major over all parts so ids stay canonical.
    for (int n = 0; n <= dim; ++n) {
        for (size_t pi = 0; pi < parts.size(); ++pi) {
            const FinSimpSet& x = *parts[pi];
            offsets[pi].resize(static_cast<size_t>(dim) + 1, 0);
            if (n > x.dim()) continue;
            if (x.count(n) > 0) offsets[pi][static_cast<size_t>(n)] = builder.count(n);
            for (int i = 0; i < x.count(n); ++i) {
                if (n == 0) {
                    builder.add_vertex(x.label({0, i}));
                } else {
                    std::vector<NormalSimplex> faces;
                    for (int j = 0; j <= n; ++j) {
                        NormalSimplex f = x.face({n, i}, j);
                        f.base.index += offsets[pi][static_cast<size_t>(f.base.dim)];
                        faces.push_back(f);
                    }
                    builder.add_simplex(n, std::move(faces), x.label({n, i}));
                }
            }
        }
    }
    Complex apex = builder.build(false);
    CoproductResult out{apex, {}};
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        const FinSimpSet& x = *parts[pi];
        std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(x.dim()) + 1);
        for (int n = 0; n <= x.dim(); ++n)
            for (int i = 0; i < x.count(n); ++i)
                images[static_cast<size_t>(n)].push_back(
                    nondegenerate({n, i + offsets[pi][static_cast<size_t>(n)]}));
        out.injections.emplace_back(parts[pi], apex, std::move(images));
    }
    return out;
}

SimpMap cotuple(const CoproductResult& cp, const std::vector<SimpMap>& maps) {
    if (maps.size() != cp.injections.size()) throw std::invalid_argument("cotuple: arity mismatch");
    if (maps.empty()) throw std::invalid_argument("cotuple: need at least one component");
    const Complex& target = maps.front().target_ptr();
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(cp.complex->dim()) + 1);
    for (int n = 0; n <= cp.complex->dim(); ++n)
        images[static_cast<size_t>(n)].resize(static_cast<size_t>(cp.complex->count(n)),
                                              nondegenerate({0, 0}));
    for (size_t pi = 0; pi < maps.size(); ++pi) {
        if (!structural_equal(maps[pi].source(), cp.injections[pi].source()))
            throw std::invalid_argument("cotuple: component source mismatch");
        const FinSimpSet& x = maps[pi].source();
        for (int n = 0; n <= x.dim(); ++n)
            for (int i = 0; i < x.count(n); ++i) {
                SimplexId in_coproduct = cp.injections[pi].apply(SimplexId{n, i}).base;
                images[static_cast<size_t>(in_coproduct.dim)][static_cast<size_t>(in_coproduct.index)] =
                    maps[pi].apply(SimplexId{n, i});
            }
    }
    return SimpMap(cp.complex, target, std::move(images));
}

PushoutResult pushout(const SimpMap& f, const SimpMap& g) {
    if (!structural_equal(f.source(), g.source()))
        throw std::invalid_argument("pushout: legs do not share a source");
    const FinSimpSet& a = f.source();
    const FinSimpSet& b = f.target();
    const FinSimpSet& c = g.target();
    int top = std::max(b.dim(), c.dim());

    std::vector<DegreeTable> tables(static_cast<size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        DegreeTable& t = tables[static_cast<size_t>(n)];
        t.add(0, b, n);
        t.add(1, c, n);
        t.parent.resize(t.entries.size());
        for (size_t e = 0; e < t.entries.size(); ++e) t.parent[e] = static_cast<int>(e);
        for (const auto& s : a.simplices_of_degree(n))
            t.unite(t.lookup(0, f.apply(s)), t.lookup(1, g.apply(s)));
        t.root_degenerate.assign(t.entries.size(), 0);
        for (size_t e = 0; e < t.entries.size(); ++e)
            if (t.entries[e].second.is_degenerate())
                t.root_degenerate[static_cast<size_t>(t.find(static_cast<int>(e)))] = 1;
    }

    // Apex ids for nondegenerate classes, ordered by smallest member.
    std::vector<std::vector<int>> apex_index(static_cast<size_t>(top) + 1);
    std::vector<std::vector<int>> apex_roots(static_cast<size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        DegreeTable& t = tables[static_cast<size_t>(n)];
        apex_index[static_cast<size_t>(n)].assign(t.entries.size(), -1);
        for (size_t e = 0; e < t.entries.size(); ++e) {
            int root = t.find(static_cast<int>(e));
            if (root != static_cast<int>(e) || t.root_degenerate[static_cast<size_t>(root)]) continue;
            apex_index[static_cast<size_t>(n)][e] = static_cast<int>(apex_roots[static_cast<size_t>(n)].size());
            apex_roots[static_cast<size_t>(n)].push_back(static_cast<int>(e));
        }
    }

    // Normal forms per entry, degrees ascending.
    std::vector<std::vector<NormalSimplex>> nf(static_cast<size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        DegreeTable& t = tables[static_cast<size_t>(n)];
        nf[static_cast<size_t>(n)].assign(t.entries.size(), nondegenerate({0, 0}));
        std::vector<char> done(t.entries.size(), 0);
        for (size_t e = 0; e < t.entries.size(); ++e) {
            int root = t.find(static_cast<int>(e));
            if (done[static_cast<size_t>(root)]) {
                nf[static_cast<size_t>(n)][e] = nf[static_cast<size_t>(n)][static_cast<size_t>(root)];
                continue;
            }
            NormalSimplex value = nondegenerate({0, 0});
            if (!t.root_degenerate[static_cast<size_t>(root)]) {
                value = nondegenerate({n, apex_index[static_cast<size_t>(n)][static_cast<size_t>(root)]});
            } else {
                // Pick any degenerate member, peel one elementary degeneracy,
                // and reuse the lower degree's normal form.
                int chosen = -1;
                for (size_t m = 0; m < t.entries.size(); ++m)
                    if (t.find(static_cast<int>(m)) == root && t.entries[m].second.is_degenerate()) {
                        chosen = static_cast<int>(m);
                        break;
                    }
                const auto& [origin, s] = t.entries[static_cast<size_t>(chosen)];
                const auto& im = s.degeneracy.images();
                int i = 0;
                while (im[static_cast<size_t>(i)] != im[static_cast<size_t>(i) + 1]) ++i;
                std::vector<int> tau = im;
                tau.erase(tau.begin() + i);
                int parent_entry =
                    tables[static_cast<size_t>(n - 1)].lookup(origin, {s.base, Operator(s.base.dim, std::move(tau))});
                const NormalSimplex& lower = nf[static_cast<size_t>(n - 1)][static_cast<size_t>(parent_entry)];
                value = {lower.base, compose(lower.degeneracy, Operator::degeneracy(i, n))};
            }
            nf[static_cast<size_t>(n)][static_cast<size_t>(root)] = value;
            nf[static_cast<size_t>(n)][e] = value;
            done[static_cast<size_t>(root)] = 1;
        }
    }

    // Assemble the apex.
    SimpSetBuilder builder;
    std::array<const FinSimpSet*, 2> origins{&b, &c};
    for (int n = 0; n <= top; ++n) {
        DegreeTable& t = tables[static_cast<size_t>(n)];
        for (int root : apex_roots[static_cast<size_t>(n)]) {
            const auto& [origin, s] = t.entries[static_cast<size_t>(root)];
            if (n == 0) {
                builder.add_vertex(origins[static_cast<size_t>(origin)]->label(s.base));
            } else {
                std::vector<NormalSimplex> faces;
                faces.reserve(static_cast<size_t>(n) + 1);
                for (int j = 0; j <= n; ++j) {
                    NormalSimplex face = origins[static_cast<size_t>(origin)]->face(s.base, j);
                    int entry = tables[static_cast<size_t>(n - 1)].lookup(origin, face);
                    faces.push_back(nf[static_cast<size_t>(n - 1)][static_cast<size_t>(entry)]);
                }
                builder.add_simplex(n, std::move(faces), origins[static_cast<size_t>(origin)]->label(s.base));
            }
        }
    }
    Complex apex = builder.build(false);

    auto leg = [&](int origin, const Complex& from) {
        std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(from->dim()) + 1);
        for (int n = 0; n <= from->dim(); ++n)
            for (int i = 0; i < from->count(n); ++i) {
                int entry = tables[static_cast<size_t>(n)].lookup(origin, nondegenerate({n, i}));
                images[static_cast<size_t>(n)].push_back(nf[static_cast<size_t>(n)][static_cast<size_t>(entry)]);
            }
        return SimpMap(from, apex, std::move(images));
    };
    return {apex, leg(0, f.target_ptr()), leg(1, g.target_ptr())};
}

PushoutResult collapse(Complex x, const Subcomplex& a) {
    if (!structural_equal(*x, *a.ambient))
        throw std::invalid_argument("collapse: subcomplex does not live in the given complex");
    if (a.member_count() == 0)
        throw std::invalid_argument("collapse: empty subcomplex (the quotient would be X + point)");
    Materialized m = materialize(a);
    return pushout(m.inclusion, terminal_map(m.complex));
}

SimpMap pushout_induced_map(const PushoutResult& p, const SimpMap& u, const SimpMap& v) {
    if (!structural_equal(u.source(), p.left.source()) || !structural_equal(v.source(), p.right.source()) ||
        !structural_equal(u.target(), v.target()))
        throw std::invalid_argument("pushout_induced_map: cocone shape mismatch");
    const FinSimpSet& apex = *p.apex;
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(apex.dim()) + 1);
    std::vector<std::vector<char>> assigned(static_cast<size_t>(apex.dim()) + 1);
    for (int n = 0; n <= apex.dim(); ++n) {
        images[static_cast<size_t>(n)].assign(static_cast<size_t>(apex.count(n)), nondegenerate({0, 0}));
        assigned[static_cast<size_t>(n)].assign(static_cast<size_t>(apex.count(n)), 0);
    }
    auto record = [&](const SimpMap& leg, const SimpMap& cocone) {
        const FinSimpSet& src = leg.source();
        for (int n = 0; n <= src.dim(); ++n)
            for (int i = 0; i < src.count(n); ++i) {
                NormalSimplex in_apex = leg.apply(SimplexId{n, i});
                if (in_apex.is_degenerate()) continue;
                images[static_cast<size_t>(in_apex.base.dim)][static_cast<size_t>(in_apex.base.index)] =
                    cocone.apply(SimplexId{n, i});
                assigned[static_cast<size_t>(in_apex.base.dim)][static_cast<size_t>(in_apex.base.index)] = 1;
            }
    };
    record(p.left, u);
    record(p.right, v);
    for (int n = 0; n <= apex.dim(); ++n)
        for (int i = 0; i < apex.count(n); ++i)
            if (!assigned[static_cast<size_t>(n)][static_cast<size_t>(i)])
                throw std::logic_error("pushout_induced_map: apex simplex not covered by a leg");
    SimpMap induced(p.apex, u.target_ptr(), std::move(images));
    if (!(compose_maps(induced, p.left) == u) || !(compose_maps(induced, p.right) == v))
        throw std::logic_error("pushout_induced_map: cocone does not commute with the legs");
    return induced;
}

SimpMap factor_through_surjection(const SimpMap& e, const SimpMap& g) {
    if (!structural_equal(e.source(), g.source()))
        throw std::invalid_argument("factor_through_surjection: sources differ");
    const FinSimpSet& q = e.target();
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(q.dim()) + 1);
    for (int n = 0; n <= q.dim(); ++n)
        images[static_cast<size_t>(n)].assign(static_cast<size_t>(q.count(n)), nondegenerate({0, 0}));
    for (int n = 0; n <= q.dim(); ++n) {
        std::vector<char> assigned(static_cast<size_t>(q.count(n)), 0);
        int remaining = q.count(n);
        for (const auto& s : e.source().simplices_of_degree(n)) {
            if (remaining == 0) break;
            NormalSimplex image = e.apply(s);
            if (image.is_degenerate() || assigned[static_cast<size_t>(image.base.index)]) continue;
            images[static_cast<size_t>(n)][static_cast<size_t>(image.base.index)] = g.apply(s);
            assigned[static_cast<size_t>(image.base.index)] = 1;
            --remaining;
        }
        if (remaining != 0)
            throw std::logic_error("factor_through_surjection: map is not degreewise surjective");
    }
    SimpMap h(e.target_ptr(), g.target_ptr(), std::move(images));
    if (!(compose_maps(h, e) == g))
        throw std::logic_error("factor_through_surjection: no well-defined factorization");
    return h;
}

namespace {

uint64_t pair_key(SimplexId base, const std::vector<int>& sig, const std::vector<int>& tim) {
    uint64_t smask = 0, tmask = 0;
    for (size_t i = 1; i < sig.size(); ++i) {
        if (sig[i] > sig[i - 1]) smask |= uint64_t{1} << (i - 1);
        if (tim[i] > tim[i - 1]) tmask |= uint64_t{1} << (i - 1);
    }
    return (uint64_t(base.dim + 1) << 59) | (uint64_t(tim[0]) << 58) | (tmask << 45) | (smask << 32) |
           uint64_t(static_cast<uint32_t>(base.index));
}

NormalSimplex pair_normal_form_impl(const std::unordered_map<uint64_t, SimplexId>& index,
                                    const NormalSimplex& s, const Operator& t) {
    if (t.target_dim() != 1 || t.source_dim() != s.degree())
        throw std::invalid_argument("pair_normal_form: interval component mismatch");
    int n = s.degree();
    const auto& sig = s.degeneracy.images();
    const auto& tim = t.images();
    std::vector<int> joint(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        joint[static_cast<size_t>(i)] =
            joint[static_cast<size_t>(i) - 1] +
            ((sig[static_cast<size_t>(i)] > sig[static_cast<size_t>(i) - 1] ||
              tim[static_cast<size_t>(i)] > tim[static_cast<size_t>(i) - 1])
                 ? 1
                 : 0);
    int k = joint.back();
    std::vector<int> sig_base(static_cast<size_t>(k) + 1), t_base(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= n; ++i) {
        sig_base[static_cast<size_t>(joint[static_cast<size_t>(i)])] = sig[static_cast<size_t>(i)];
        t_base[static_cast<size_t>(joint[static_cast<size_t>(i)])] = tim[static_cast<size_t>(i)];
    }
    auto it = index.find(pair_key(s.base, sig_base, t_base));
    if (it == index.end()) throw std::logic_error("pair_normal_form: unknown base pair");
    return {it->second, Operator(k, std::move(joint))};
}

}  // namespace

NormalSimplex ProductResult::pair_normal_form(const NormalSimplex& s, const Operator& t) const {
    return pair_normal_form_impl(pair_index, s, t);
}

ProductResult product_with_interval(Complex x) {
    Complex interval = standard_simplex(1);
    std::vector<std::vector<std::pair<NormalSimplex, Operator>>> pairs;
    std::unordered_map<uint64_t, SimplexId> pair_index;
    SimpSetBuilder builder;

    auto jointly_injective = [](const std::vector<int>& sig, const std::vector<int>& tim) {
        for (size_t i = 1; i < sig.size(); ++i)
            if (sig[i] == sig[i - 1] && tim[i] == tim[i - 1]) return false;
        return true;
    };

    for (int n = 0; n <= x->dim() + 1; ++n) {
        pairs.emplace_back();
        for (int d = 0; d <= std::min(n, x->dim()); ++d) {
            auto surjections = all_surjections(n, d);
            for (int idx = 0; idx < x->count(d); ++idx) {
                for (const auto& sigma : surjections) {
                    for (const auto& t : all_operators(n, 1)) {
                        if (!jointly_injective(sigma.images(), t.images())) continue;
                        SimplexId id;
                        if (n == 0) {
                            id = builder.add_vertex();
                        } else {
                            std::vector<NormalSimplex> faces;
                            faces.reserve(static_cast<size_t>(n) + 1);
                            for (int j = 0; j <= n; ++j) {
                                Operator delta = Operator::face(j, n);
                                NormalSimplex sx = x->act(NormalSimplex{{d, idx}, sigma}, delta);
                                faces.push_back(pair_normal_form_impl(pair_index, sx, compose(t, delta)));
                            }
                            id = builder.add_simplex(n, std::move(faces));
                        }
                        pairs.back().push_back({NormalSimplex{{d, idx}, sigma}, t});
                        pair_index.emplace(pair_key({d, idx}, sigma.images(), t.images()), id);
                    }
                }
            }
        }
    }
    Complex product = builder.build(false);

    std::vector<std::vector<NormalSimplex>> im_base(static_cast<size_t>(product->dim()) + 1);
    std::vector<std::vector<NormalSimplex>> im_int(static_cast<size_t>(product->dim()) + 1);
    for (int n = 0; n <= product->dim(); ++n) {
        for (const auto& [sx, t] : pairs[static_cast<size_t>(n)]) {
            im_base[static_cast<size_t>(n)].push_back(sx);
            if (t.images().front() == t.images().back()) {
                im_int[static_cast<size_t>(n)].push_back(
                    {{0, t.images().front()},
                     n == 0 ? Operator::identity(0) : Operator(0, std::vector<int>(static_cast<size_t>(n) + 1, 0))});
            } else {
                im_int[static_cast<size_t>(n)].push_back({{1, 0}, t});
            }
        }
    }
    SimpMap proj_base(product, x, std::move(im_base));
    SimpMap proj_interval(product, interval, std::move(im_int));

    auto make_inj = [&](int end) {
        std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(x->dim()) + 1);
        for (int d = 0; d <= x->dim(); ++d)
            for (int idx = 0; idx < x->count(d); ++idx) {
                std::vector<int> tim(static_cast<size_t>(d) + 1, end);
                auto it = pair_index.find(pair_key({d, idx}, Operator::identity(d).images(), tim));
                if (it == pair_index.end()) throw std::logic_error("product: end inclusion pair missing");
                images[static_cast<size_t>(d)].push_back(nondegenerate(it->second));
            }
        return SimpMap(x, product, std::move(images));
    };
    SimpMap inj0 = make_inj(0);
    SimpMap inj1 = make_inj(1);

    return {product, x, std::move(proj_base), std::move(proj_interval), std::move(inj0), std::move(inj1),
            std::move(pairs), std::move(pair_index)};
}

SimpMap map_times_interval(const SimpMap& f, const ProductResult& px, const ProductResult& py) {
    if (!structural_equal(f.source(), *px.base) || !structural_equal(f.target(), *py.base))
        throw std::invalid_argument("map_times_interval: product tables do not match the map");
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(px.product->dim()) + 1);
    for (int n = 0; n <= px.product->dim(); ++n)
        for (const auto& [sx, t] : px.pairs[static_cast<size_t>(n)])
            images[static_cast<size_t>(n)].push_back(py.pair_normal_form(f.apply(sx), t));
    return SimpMap(px.product, py.product, std::move(images));
}

bool is_cartesian_square(const SimpMap& top, const SimpMap& left, const SimpMap& right,
                         const SimpMap& bottom, int max_degree) {
    if (!structural_equal(top.source(), left.source()) ||
        !structural_equal(top.target(), right.source()) ||
        !structural_equal(left.target(), bottom.source()) ||
        !structural_equal(right.target(), bottom.target()))
        throw std::invalid_argument("is_cartesian_square: shape mismatch");
    for (int n = 0; n <= max_degree; ++n) {
        // A_n -> B_n x_{D_n} C_n must be a bijection.
        std::map<std::pair<NormalSimplex, NormalSimplex>, int> fiber_product;
        for (const auto& b : left.target().simplices_of_degree(n))
            for (const auto& c : right.source().simplices_of_degree(n))
                if (bottom.apply(b) == right.apply(c)) fiber_product[{b, c}] = 0;
        for (const auto& a : top.source().simplices_of_degree(n)) {
            auto it = fiber_product.find({left.apply(a), top.apply(a)});
            if (it == fiber_product.end()) return false;  // square does not even commute
            it->second++;
        }
        for (const auto& [pair, hits] : fiber_product)
            if (hits != 1) return false;
    }
    return true;
}

}  // namespace nsset
