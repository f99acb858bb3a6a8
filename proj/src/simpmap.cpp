#include "nsset/simpmap.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nsset {

SimpMap::SimpMap(Complex source, Complex target, std::vector<std::vector<NormalSimplex>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (!source_ || !target_) throw std::invalid_argument("simp map: null complex");
    if (static_cast<int>(images_.size()) != source_->dim() + 1)
        throw std::invalid_argument("simp map: image table has wrong number of dimensions");
    for (int n = 0; n <= source_->dim(); ++n) {
        const auto& row = images_[static_cast<size_t>(n)];
        if (static_cast<int>(row.size()) != source_->count(n))
            throw std::invalid_argument("simp map: image row has wrong size");
        for (const auto& img : row) {
            if (img.degree() != n) throw std::invalid_argument("simp map: image degree mismatch");
            if (!img.degeneracy.is_surjective())
                throw std::invalid_argument("simp map: image degeneracy not surjective");
            if (img.base.dim != img.degeneracy.target_dim() || img.base.dim < 0 ||
                img.base.dim > target_->dim() || img.base.index < 0 ||
                img.base.index >= target_->count(img.base.dim))
                throw std::invalid_argument("simp map: image base not in target");
        }
    }
}

SimpMap SimpMap::identity(Complex x) {
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(x->dim()) + 1);
    for (int n = 0; n <= x->dim(); ++n)
        for (int i = 0; i < x->count(n); ++i)
            images[static_cast<size_t>(n)].push_back(nondegenerate({n, i}));
    return SimpMap(x, x, std::move(images));
}

NormalSimplex SimpMap::apply(SimplexId x) const {
    if (x.dim < 0 || x.dim > source_->dim() || x.index < 0 || x.index >= source_->count(x.dim))
        throw std::out_of_range("simp map apply: unknown simplex id");
    return images_[static_cast<size_t>(x.dim)][static_cast<size_t>(x.index)];
}

NormalSimplex SimpMap::apply(const NormalSimplex& s) const {
    NormalSimplex img = apply(s.base);
    return {img.base, compose(img.degeneracy, s.degeneracy)};
}

bool operator==(const SimpMap& a, const SimpMap& b) {
    return structural_equal(a.source(), b.source()) && structural_equal(a.target(), b.target()) &&
           a.images_ == b.images_;
}

bool validate_map(const SimpMap& f) {
    const FinSimpSet& src = f.source();
    const FinSimpSet& tgt = f.target();
    for (int n = 1; n <= src.dim(); ++n) {
        for (int i = 0; i < src.count(n); ++i) {
            SimplexId x{n, i};
            NormalSimplex img = f.apply(x);
            for (int j = 0; j <= n; ++j) {
                NormalSimplex via_target = tgt.act(img, Operator::face(j, n));
                NormalSimplex via_source = f.apply(src.face(x, j));
                if (!(via_target == via_source)) return false;
            }
        }
    }
    return true;
}

void require_valid(const SimpMap& f, const char* what) {
    if (!validate_map(f)) throw std::logic_error(std::string(what) + ": map fails face compatibility");
}

SimpMap compose_maps(const SimpMap& g, const SimpMap& f) {
    if (!structural_equal(f.target(), g.source()))
        throw std::invalid_argument("compose_maps: middle objects differ");
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(f.source().dim()) + 1);
    for (int n = 0; n <= f.source().dim(); ++n)
        for (int i = 0; i < f.source().count(n); ++i)
            images[static_cast<size_t>(n)].push_back(g.apply(f.apply(SimplexId{n, i})));
    return SimpMap(f.source_ptr(), g.target_ptr(), std::move(images));
}

bool is_degreewise_injective(const SimpMap& f) {
    for (int n = 0; n <= f.source().dim(); ++n) {
        std::set<SimplexId> seen;
        for (int i = 0; i < f.source().count(n); ++i) {
            NormalSimplex img = f.apply(SimplexId{n, i});
            if (img.is_degenerate()) return false;
            if (!seen.insert(img.base).second) return false;
        }
    }
    return true;
}

bool degreewise_injective_oracle(const SimpMap& f, int max_degree) {
    for (int n = 0; n <= max_degree; ++n) {
        std::set<NormalSimplex> seen;
        for (const auto& s : f.source().simplices_of_degree(n))
            if (!seen.insert(f.apply(s)).second) return false;
    }
    return true;
}

bool is_degreewise_surjective(const SimpMap& f) {
    // Every nondegenerate target simplex must be the nondegenerate part of
    // the image of some source simplex of the same degree; higher degrees
    // follow by applying degeneracies.
    for (int n = 0; n <= f.target().dim(); ++n) {
        std::vector<char> hit(static_cast<size_t>(f.target().count(n)), 0);
        for (const auto& s : f.source().simplices_of_degree(n)) {
            NormalSimplex img = f.apply(s);
            if (!img.is_degenerate()) hit[static_cast<size_t>(img.base.index)] = 1;
        }
        for (char h : hit)
            if (!h) return false;
    }
    return true;
}

bool is_isomorphism(const SimpMap& f) {
    if (f.source().counts() != f.target().counts()) return false;
    for (int n = 0; n <= f.source().dim(); ++n) {
        std::vector<char> hit(static_cast<size_t>(f.target().count(n)), 0);
        for (int i = 0; i < f.source().count(n); ++i) {
            NormalSimplex img = f.apply(SimplexId{n, i});
            if (img.is_degenerate()) return false;
            if (hit[static_cast<size_t>(img.base.index)]) return false;
            hit[static_cast<size_t>(img.base.index)] = 1;
        }
    }
    return validate_map(f);
}

SimpMap invert_isomorphism(const SimpMap& f) {
    if (!is_isomorphism(f)) throw std::invalid_argument("invert_isomorphism: not an isomorphism");
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(f.target().dim()) + 1);
    for (int n = 0; n <= f.target().dim(); ++n)
        images[static_cast<size_t>(n)].resize(static_cast<size_t>(f.target().count(n)),
                                              nondegenerate({0, 0}));
    for (int n = 0; n <= f.source().dim(); ++n)
        for (int i = 0; i < f.source().count(n); ++i) {
            NormalSimplex img = f.apply(SimplexId{n, i});
            images[static_cast<size_t>(n)][static_cast<size_t>(img.base.index)] = nondegenerate({n, i});
        }
    SimpMap inv(f.target_ptr(), f.source_ptr(), std::move(images));
    require_valid(inv, "invert_isomorphism");
    return inv;
}

SimpMap representing_map(Complex x_owner, SimplexId x) {
    Complex delta = standard_simplex(x.dim);
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(x.dim) + 1);
    for (int m = 0; m <= x.dim; ++m) {
        const auto& subsets = subsets_of_size(x.dim, m + 1);
        for (const auto& subset : subsets)
            images[static_cast<size_t>(m)].push_back(x_owner->act(x, Operator(x.dim, subset)));
    }
    return SimpMap(delta, std::move(x_owner), std::move(images));
}

SimpMap operator_simplex_map(const Operator& a) {
    int m = a.source_dim();
    int n = a.target_dim();
    Complex src = standard_simplex(m);
    Complex tgt = standard_simplex(n);
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(m) + 1);
    for (int d = 0; d <= m; ++d) {
        const auto& subsets = subsets_of_size(m, d + 1);
        for (const auto& subset : subsets) {
            auto [epi, mono] = epi_mono_factor(compose(a, Operator(m, subset)));
            int base_index = subset_rank(n, mono.images());
            images[static_cast<size_t>(d)].push_back({{mono.source_dim(), base_index}, epi});
        }
    }
    return SimpMap(src, tgt, std::move(images));
}

SimpMap terminal_map(Complex x) {
    Complex point = standard_simplex(0);
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(x->dim()) + 1);
    for (int n = 0; n <= x->dim(); ++n)
        for (int i = 0; i < x->count(n); ++i)
            images[static_cast<size_t>(n)].push_back(
                {{0, 0}, n == 0 ? Operator::identity(0) : Operator(0, std::vector<int>(static_cast<size_t>(n) + 1, 0))});
    return SimpMap(std::move(x), point, std::move(images));
}

SimpMap initial_map(Complex x) {
    return SimpMap(empty_complex(), std::move(x), {});
}

SimpMap constant_map(Complex x, Complex y, SimplexId vertex_in_y) {
    if (vertex_in_y.dim != 0) throw std::invalid_argument("constant_map: target simplex must be a vertex");
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(x->dim()) + 1);
    for (int n = 0; n <= x->dim(); ++n)
        for (int i = 0; i < x->count(n); ++i)
            images[static_cast<size_t>(n)].push_back(
                {vertex_in_y, n == 0 ? Operator::identity(0) : Operator(0, std::vector<int>(static_cast<size_t>(n) + 1, 0))});
    return SimpMap(std::move(x), std::move(y), std::move(images));
}

}  // namespace nsset
