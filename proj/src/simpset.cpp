#include "nsset/simpset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nsset {

NormalSimplex nondegenerate(SimplexId x) { return {x, Operator::identity(x.dim)}; }

int FinSimpSet::count(int n) const {
    if (n < 0 || n > dim()) return 0;
    return counts_[static_cast<size_t>(n)];
}

int FinSimpSet::total_nondegenerate() const {
    int total = 0;
    for (int c : counts_) total += c;
    return total;
}

const NormalSimplex& FinSimpSet::face(SimplexId x, int j) const {
    if (x.dim < 1 || x.dim > dim() || x.index < 0 || x.index >= count(x.dim))
        throw std::out_of_range("face: unknown simplex id");
    if (j < 0 || j > x.dim) throw std::out_of_range("face: index out of range");
    return face_table_[static_cast<size_t>(x.dim)][static_cast<size_t>(x.index)][static_cast<size_t>(j)];
}

NormalSimplex FinSimpSet::act(SimplexId x, const Operator& a) const {
    if (a.target_dim() != x.dim) throw std::invalid_argument("act: operator target does not match simplex dim");
    auto [epi, mono] = epi_mono_factor(a);
    if (mono.is_identity()) return {x, epi};
    // Peel the largest omitted index; the face table entry may be degenerate,
    // so renormalize through the recursion.
    int q = x.dim;
    int largest_missing = -1;
    {
        std::vector<char> hit(static_cast<size_t>(q) + 1, 0);
        for (int v : mono.images()) hit[static_cast<size_t>(v)] = 1;
        for (int v = q; v >= 0; --v)
            if (!hit[static_cast<size_t>(v)]) { largest_missing = v; break; }
    }
    std::vector<int> shifted;
    shifted.reserve(mono.images().size());
    for (int v : mono.images()) shifted.push_back(v < largest_missing ? v : v - 1);
    const NormalSimplex& f = face(x, largest_missing);
    NormalSimplex inner = act(f.base, compose(f.degeneracy, Operator(q - 1, std::move(shifted))));
    return {inner.base, compose(inner.degeneracy, epi)};
}

NormalSimplex FinSimpSet::act(const NormalSimplex& s, const Operator& a) const {
    if (a.target_dim() != s.degree()) throw std::invalid_argument("act: operator target does not match degree");
    return act(s.base, compose(s.degeneracy, a));
}

SimplexId FinSimpSet::vertex_of(SimplexId x, int t) const {
    return act(x, Operator::vertex(t, x.dim)).base;
}

bool FinSimpSet::is_embedded(SimplexId x) const {
    std::vector<SimplexId> verts;
    verts.reserve(static_cast<size_t>(x.dim) + 1);
    for (int t = 0; t <= x.dim; ++t) verts.push_back(vertex_of(x, t));
    std::sort(verts.begin(), verts.end());
    return std::adjacent_find(verts.begin(), verts.end()) == verts.end();
}

bool FinSimpSet::is_nonsingular() const {
    for (int n = 1; n <= dim(); ++n)
        for (int i = 0; i < count(n); ++i)
            if (!is_embedded({n, i})) return false;
    return true;
}

std::vector<NormalSimplex> FinSimpSet::simplices_of_degree(int n) const {
    std::vector<NormalSimplex> out;
    for (int d = 0; d <= std::min(n, dim()); ++d) {
        auto surjections = all_surjections(n, d);
        for (int i = 0; i < count(d); ++i)
            for (const auto& s : surjections) out.push_back({{d, i}, s});
    }
    return out;
}

const std::string& FinSimpSet::label(SimplexId x) const {
    static const std::string kEmpty;
    if (x.dim < 0 || x.dim > dim() || x.index < 0 || x.index >= count(x.dim)) return kEmpty;
    const auto& row = labels_[static_cast<size_t>(x.dim)];
    return row.empty() ? kEmpty : row[static_cast<size_t>(x.index)];
}

void FinSimpSet::set_label(SimplexId x, std::string text) {
    auto& row = labels_[static_cast<size_t>(x.dim)];
    if (row.empty()) row.resize(static_cast<size_t>(count(x.dim)));
    row[static_cast<size_t>(x.index)] = std::move(text);
}

void FinSimpSet::validate() const {
    if (!counts_.empty() && counts_.back() == 0)
        throw std::logic_error("validate: trailing dimension with zero simplices");
    for (int c : counts_)
        if (c < 0) throw std::logic_error("validate: negative count");
    for (int n = 1; n <= dim(); ++n) {
        for (int i = 0; i < count(n); ++i) {
            const auto& faces = face_table_[static_cast<size_t>(n)][static_cast<size_t>(i)];
            if (static_cast<int>(faces.size()) != n + 1)
                throw std::logic_error("validate: wrong face count");
            for (const auto& f : faces) {
                if (f.degree() != n - 1) throw std::logic_error("validate: face degree mismatch");
                if (!f.degeneracy.is_surjective()) throw std::logic_error("validate: face degeneracy not surjective");
                if (f.base.dim != f.degeneracy.target_dim())
                    throw std::logic_error("validate: face base dim mismatch");
                if (f.base.dim < 0 || f.base.dim > dim() || f.base.index < 0 || f.base.index >= count(f.base.dim))
                    throw std::logic_error("validate: face base not a simplex");
            }
        }
    }
    // Simplicial identities: for i < j the two elementary-face routes agree,
    // i.e. x . (delta_j o delta_i) = x . (delta_i o delta_{j-1}).
    for (int n = 2; n <= dim(); ++n) {
        for (int idx = 0; idx < count(n); ++idx) {
            SimplexId x{n, idx};
            for (int j = 1; j <= n; ++j) {
                for (int i = 0; i < j; ++i) {
                    NormalSimplex via_j = act(face(x, j), Operator::face(i, n - 1));
                    NormalSimplex via_i = act(face(x, i), Operator::face(j - 1, n - 1));
                    if (!(via_j == via_i)) throw std::logic_error("validate: simplicial identity fails");
                }
            }
        }
    }
}

SimplexId SimpSetBuilder::add_vertex(std::string label) {
    if (set_.counts_.empty()) {
        set_.counts_.push_back(0);
        set_.face_table_.emplace_back();
        set_.labels_.emplace_back();
    }
    int index = set_.counts_[0]++;
    if (!label.empty()) {
        auto& row = set_.labels_[0];
        row.resize(static_cast<size_t>(set_.counts_[0]));
        row[static_cast<size_t>(index)] = std::move(label);
    } else if (!set_.labels_[0].empty()) {
        set_.labels_[0].resize(static_cast<size_t>(set_.counts_[0]));
    }
    return {0, index};
}

SimplexId SimpSetBuilder::add_simplex(int dim, std::vector<NormalSimplex> faces, std::string label) {
    if (dim < 1) throw std::invalid_argument("add_simplex: dim must be >= 1 (use add_vertex)");
    if (static_cast<int>(faces.size()) != dim + 1)
        throw std::invalid_argument("add_simplex: need dim+1 faces");
    if (static_cast<int>(set_.counts_.size()) < dim + 1) {
        set_.counts_.resize(static_cast<size_t>(dim) + 1, 0);
        set_.face_table_.resize(static_cast<size_t>(dim) + 1);
        set_.labels_.resize(static_cast<size_t>(dim) + 1);
    }
    for (const auto& f : faces) {
        if (f.degree() != dim - 1) throw std::invalid_argument("add_simplex: face degree mismatch");
        if (f.base.dim > dim - 1 || f.base.index < 0 || f.base.index >= count(f.base.dim))
            throw std::invalid_argument("add_simplex: face base not yet added");
    }
    int index = set_.counts_[static_cast<size_t>(dim)]++;
    set_.face_table_[static_cast<size_t>(dim)].push_back(std::move(faces));
    auto& row = set_.labels_[static_cast<size_t>(dim)];
    if (!label.empty()) {
        row.resize(static_cast<size_t>(set_.counts_[static_cast<size_t>(dim)]));
        row[static_cast<size_t>(index)] = std::move(label);
    } else if (!row.empty()) {
        row.resize(static_cast<size_t>(set_.counts_[static_cast<size_t>(dim)]));
    }
    return {dim, index};
}

int SimpSetBuilder::count(int n) const {
    if (n < 0 || n >= static_cast<int>(set_.counts_.size())) return 0;
    return set_.counts_[static_cast<size_t>(n)];
}

Complex SimpSetBuilder::build(bool validate) {
    while (!set_.counts_.empty() && set_.counts_.back() == 0) {
        set_.counts_.pop_back();
        set_.face_table_.pop_back();
        set_.labels_.pop_back();
    }
    auto out = std::make_shared<FinSimpSet>(std::move(set_));
    set_ = FinSimpSet();
    if (validate) out->validate();
    return out;
}

bool structural_equal(const FinSimpSet& a, const FinSimpSet& b) {
    if (&a == &b) return true;
    if (a.counts() != b.counts()) return false;
    for (int n = 1; n <= a.dim(); ++n)
        for (int i = 0; i < a.count(n); ++i)
            for (int j = 0; j <= n; ++j)
                if (!(a.face({n, i}, j) == b.face({n, i}, j))) return false;
    return true;
}

namespace {

void enumerate_subsets(int n, int size, int start, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v <= n; ++v) {
        cur.push_back(v);
        enumerate_subsets(n, size, v + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<std::vector<int>>& subsets_of_size(int n, int size) {
    static std::vector<std::vector<std::vector<std::vector<int>>>> cache;
    if (n < 0 || size < 1 || size > n + 1) {
        static const std::vector<std::vector<int>> kEmpty;
        return kEmpty;
    }
    if (static_cast<int>(cache.size()) <= n) cache.resize(static_cast<size_t>(n) + 1);
    auto& per_n = cache[static_cast<size_t>(n)];
    if (static_cast<int>(per_n.size()) <= size) per_n.resize(static_cast<size_t>(size) + 1);
    auto& slot = per_n[static_cast<size_t>(size)];
    if (slot.empty()) {
        std::vector<int> cur;
        enumerate_subsets(n, size, 0, cur, slot);
    }
    return slot;
}

int subset_rank(int n, const std::vector<int>& subset) {
    const auto& all = subsets_of_size(n, static_cast<int>(subset.size()));
    auto it = std::lower_bound(all.begin(), all.end(), subset);
    if (it == all.end() || *it != subset) throw std::invalid_argument("subset_rank: not a subset of [n]");
    return static_cast<int>(it - all.begin());
}

namespace {

// Shared construction for Delta[n], its boundary, and its horns: keep the
// strictly increasing subsets of [n] that the chosen kind admits.
Complex build_from_subsets(int n, StandardKind kind, int k) {
    SimpSetBuilder builder;
    // id_map[m] maps the rank of an (m+1)-subset within Delta[n] to the local index (or -1).
    std::vector<std::vector<int>> id_map(static_cast<size_t>(n) + 1);
    auto admits = [&](const std::vector<int>& subset) {
        int size = static_cast<int>(subset.size());
        if (kind == StandardKind::simplex) return true;
        if (size == n + 1) return false;
        if (kind == StandardKind::horn && size == n) {
            bool omits_only_k = true;
            for (int i = 0, v = 0; v <= n; ++v) {
                if (i < size && subset[static_cast<size_t>(i)] == v) { ++i; continue; }
                if (v != k) omits_only_k = false;
            }
            if (omits_only_k) return false;
        }
        return true;
    };
    for (int m = 0; m <= n; ++m) {
        const auto& subsets = subsets_of_size(n, m + 1);
        id_map[static_cast<size_t>(m)].assign(subsets.size(), -1);
        for (size_t r = 0; r < subsets.size(); ++r) {
            const auto& subset = subsets[r];
            if (!admits(subset)) continue;
            std::ostringstream label;
            for (int v : subset) label << v;
            if (m == 0) {
                id_map[m][r] = builder.add_vertex(label.str()).index;
            } else {
                std::vector<NormalSimplex> faces;
                faces.reserve(static_cast<size_t>(m) + 1);
                for (int j = 0; j <= m; ++j) {
                    std::vector<int> sub = subset;
                    sub.erase(sub.begin() + j);
                    int rank = subset_rank(n, sub);
                    int base_index = id_map[static_cast<size_t>(m - 1)][static_cast<size_t>(rank)];
                    faces.push_back({{m - 1, base_index}, Operator::identity(m - 1)});
                }
                id_map[static_cast<size_t>(m)][r] = builder.add_simplex(m, std::move(faces), label.str()).index;
            }
        }
    }
    return builder.build();
}

}  // namespace

Complex standard_simplex(int n) {
    if (n < 0) throw std::invalid_argument("standard_simplex: n must be >= 0");
    return build_from_subsets(n, StandardKind::simplex, -1);
}

Complex standard_boundary(int n) {
    if (n < 0) throw std::invalid_argument("standard_boundary: n must be >= 0");
    if (n == 0) return empty_complex();
    return build_from_subsets(n, StandardKind::boundary, -1);
}

Complex standard_horn(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("standard_horn: need 0 <= k <= n, n > 0");
    return build_from_subsets(n, StandardKind::horn, k);
}

Complex empty_complex() {
    SimpSetBuilder builder;
    return builder.build();
}

Complex standard(StandardKind kind, int n, int k) {
    switch (kind) {
        case StandardKind::simplex: return standard_simplex(n);
        case StandardKind::boundary: return standard_boundary(n);
        case StandardKind::horn: return standard_horn(n, k);
    }
    throw std::invalid_argument("standard: unknown kind");
}

std::vector<int> f_vector(const FinSimpSet& x) { return x.counts(); }

long long euler_characteristic(const FinSimpSet& x) {
    long long chi = 0;
    int sign = 1;
    for (int n = 0; n <= x.dim(); ++n, sign = -sign) chi += sign * static_cast<long long>(x.count(n));
    return chi;
}

}  // namespace nsset
