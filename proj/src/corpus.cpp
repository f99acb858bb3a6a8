#include "nsset/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsset {

uint64_t SplitMix::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int SplitMix::below(int n) {
    if (n <= 0) throw std::invalid_argument("SplitMix::below: empty range");
    return static_cast<int>(next() % static_cast<uint64_t>(n));
}

namespace {

SimpMap boundary_inclusion_map(int n) {
    Complex b = standard_boundary(n);
    Complex d = standard_simplex(n);
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(b->dim()) + 1);
    for (int m = 0; m <= b->dim(); ++m)
        for (int i = 0; i < b->count(m); ++i)
            images[static_cast<size_t>(m)].push_back(nondegenerate({m, i}));
    return SimpMap(b, d, std::move(images));
}

// Assemble a random map by assigning generator images dimension by
// dimension among the face-compatible candidates.  With `embed_only` the
// candidates are restricted to nondegenerate images and the result must be
// degreewise injective, which keeps attachments nonsingular.
std::optional<SimpMap> try_random_map(SplitMix& rng, const Complex& source, const Complex& target,
                                      bool embed_only = false) {
    if (target->empty() && !source->empty()) return std::nullopt;
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(source->dim()) + 1);
    for (int n = 0; n <= source->dim(); ++n) {
        auto members = target->simplices_of_degree(n);
        for (int i = 0; i < source->count(n); ++i) {
            std::vector<NormalSimplex> candidates;
            for (const auto& cand : members) {
                if (embed_only && cand.is_degenerate()) continue;
                bool ok = true;
                for (int j = 0; n >= 1 && j <= n && ok; ++j) {
                    const NormalSimplex& face = source->face({n, i}, j);
                    NormalSimplex pushed = {
                        images[static_cast<size_t>(face.base.dim)][static_cast<size_t>(face.base.index)].base,
                        compose(images[static_cast<size_t>(face.base.dim)][static_cast<size_t>(face.base.index)]
                                    .degeneracy,
                                face.degeneracy)};
                    if (!(target->act(cand, Operator::face(j, n)) == pushed)) ok = false;
                }
                if (ok) candidates.push_back(cand);
            }
            if (candidates.empty()) return std::nullopt;
            images[static_cast<size_t>(n)].push_back(
                candidates[static_cast<size_t>(rng.below(static_cast<int>(candidates.size())))]);
        }
    }
    SimpMap f(source, target, std::move(images));
    if (!validate_map(f)) return std::nullopt;
    if (embed_only && !is_degreewise_injective(f)) return std::nullopt;
    return f;
}

// The attachments inherit vertex-set labels from the standard simplices;
// they mean nothing after gluing, so corpus output drops them.
Complex strip_labels(const Complex& x) {
    SimpSetBuilder builder;
    for (int n = 0; n <= x->dim(); ++n)
        for (int i = 0; i < x->count(n); ++i) {
            if (n == 0) {
                builder.add_vertex();
            } else {
                std::vector<NormalSimplex> faces;
                for (int j = 0; j <= n; ++j) faces.push_back(x->face({n, i}, j));
                builder.add_simplex(n, std::move(faces));
            }
        }
    return builder.build(false);
}

}  // namespace

Complex corpus_complex(uint64_t seed, int max_dim, int max_cells) {
    if (max_dim < 1 || max_dim > 3) throw std::invalid_argument("corpus: max_dim must be in [1, 3]");
    if (max_cells < 1 || max_cells > 12) throw std::invalid_argument("corpus: max_cells must be in [1, 12]");
    SplitMix rng(seed * 0x100000001b3ULL + 0xcbf29ce484222325ULL);
    bool embed_only = rng.below(2) == 0;
    Complex cur;
    int seed_dim = 0;
    for (int d = 1; d <= max_dim; ++d)
        if ((1 << (d + 1)) - 1 <= max_cells) seed_dim = d;
    if (seed_dim >= 1 && rng.below(3) == 0) {
        // seed with a standard simplex so higher cells have something to
        // attach onto
        cur = standard_simplex(1 + rng.below(seed_dim));
    } else {
        SimpSetBuilder seed_builder;
        int start_vertices = 1 + rng.below(3);
        for (int v = 0; v < start_vertices; ++v) seed_builder.add_vertex();
        cur = seed_builder.build();
    }
    int attempts = 4 * max_cells;
    while (cur->total_nondegenerate() < max_cells && attempts-- > 0) {
        int d = 1 + rng.below(max_dim);
        if (cur->total_nondegenerate() + 1 > max_cells) break;
        Complex boundary = standard_boundary(d);
        auto attach = try_random_map(rng, boundary, cur, embed_only);
        if (!attach) continue;
        PushoutResult p = pushout(*attach, boundary_inclusion_map(d));
        if (p.apex->total_nondegenerate() > max_cells) continue;
        cur = p.apex;
    }
    return strip_labels(cur);
}

std::vector<Complex> corpus_complexes(const CorpusSpec& spec) {
    std::vector<Complex> out;
    SplitMix seeds(spec.seed);
    for (int k = 0; k < spec.count; ++k) out.push_back(corpus_complex(seeds.next(), spec.max_dim, spec.max_cells));
    return out;
}

Subcomplex random_subcomplex(SplitMix& rng, Complex x) {
    std::vector<SimplexId> generators;
    for (int n = 0; n <= x->dim(); ++n)
        for (int i = 0; i < x->count(n); ++i)
            if (rng.below(3) == 0) generators.push_back({n, i});
    if (generators.empty() && x->count(0) > 0) generators.push_back({0, rng.below(x->count(0))});
    return subcomplex_closure(std::move(x), generators);
}

Subcomplex random_eden(SplitMix& rng, Complex x) {
    int nv = x->count(0);
    std::vector<char> flags(static_cast<size_t>(nv), 0);
    for (int i = 0; i < nv; ++i) flags[static_cast<size_t>(i)] = rng.below(3) == 0 ? 1 : 0;
    // eden closure: the zeroth vertex of any edge ending in the set joins it
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < x->count(1); ++i) {
            int head = x->vertex_of({1, i}, 1).index;
            int tail = x->vertex_of({1, i}, 0).index;
            if (flags[static_cast<size_t>(head)] && !flags[static_cast<size_t>(tail)]) {
                flags[static_cast<size_t>(tail)] = 1;
                changed = true;
            }
        }
    }
    Subcomplex a = full_subcomplex(std::move(x), flags);
    if (!is_eden(a)) throw std::logic_error("random_eden: closure failed to produce an eden");
    return a;
}

Subcomplex random_nonempty_eden(SplitMix& rng, Complex x) {
    for (int tries = 0; tries < 8; ++tries) {
        Subcomplex a = random_eden(rng, x);
        if (a.member_count() > 0) return a;
    }
    return whole_subcomplex(std::move(x));
}

SimpMap random_map(SplitMix& rng, Complex source, Complex target) {
    for (int tries = 0; tries < 4; ++tries) {
        auto f = try_random_map(rng, source, target);
        if (f) return *f;
    }
    if (source->empty()) return SimpMap(source, target, {});
    if (target->count(0) == 0) throw std::invalid_argument("random_map: empty target");
    return constant_map(source, target, {0, rng.below(target->count(0))});
}

FinPoset random_poset(SplitMix& rng, int max_size) {
    int size = 1 + rng.below(max_size);
    FinPoset p(size);
    for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b)
            if (rng.below(3) == 0) p.set_leq(a, b);
    // transitive closure (pairs only go upward, so this stays a poset)
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b)
                if (p.leq(a, b))
                    for (int c = b + 1; c < size; ++c)
                        if (p.leq(b, c) && !p.leq(a, c)) {
                            p.set_leq(a, c);
                            changed = true;
                        }
    }
    p.validate();
    return p;
}

}  // namespace nsset
