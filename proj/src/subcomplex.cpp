#include "nsset/subcomplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsset {

namespace {

std::vector<std::vector<char>> blank_flags(const FinSimpSet& x, char fill) {
    std::vector<std::vector<char>> flags(static_cast<size_t>(x.dim()) + 1);
    for (int n = 0; n <= x.dim(); ++n)
        flags[static_cast<size_t>(n)].assign(static_cast<size_t>(x.count(n)), fill);
    return flags;
}

}  // namespace

int Subcomplex::member_count() const {
    int total = 0;
    for (const auto& row : member)
        for (char m : row) total += m ? 1 : 0;
    return total;
}

std::vector<SimplexId> Subcomplex::members() const {
    std::vector<SimplexId> out;
    for (int n = 0; n < static_cast<int>(member.size()); ++n)
        for (int i = 0; i < static_cast<int>(member[static_cast<size_t>(n)].size()); ++i)
            if (member[static_cast<size_t>(n)][static_cast<size_t>(i)]) out.push_back({n, i});
    return out;
}

Subcomplex empty_subcomplex(Complex ambient) {
    Subcomplex a;
    a.member = blank_flags(*ambient, 0);
    a.ambient = std::move(ambient);
    return a;
}

Subcomplex whole_subcomplex(Complex ambient) {
    Subcomplex a;
    a.member = blank_flags(*ambient, 1);
    a.ambient = std::move(ambient);
    return a;
}

Subcomplex subcomplex_closure(Complex ambient, const std::vector<SimplexId>& generators) {
    Subcomplex a = empty_subcomplex(std::move(ambient));
    std::vector<SimplexId> queue = generators;
    while (!queue.empty()) {
        SimplexId s = queue.back();
        queue.pop_back();
        auto& slot = a.member[static_cast<size_t>(s.dim)][static_cast<size_t>(s.index)];
        if (slot) continue;
        slot = 1;
        for (int j = 0; s.dim >= 1 && j <= s.dim; ++j) queue.push_back(a.ambient->face(s, j).base);
    }
    return a;
}

bool is_face_closed(const Subcomplex& a) {
    for (SimplexId s : a.members())
        for (int j = 0; s.dim >= 1 && j <= s.dim; ++j)
            if (!a.contains(a.ambient->face(s, j).base)) return false;
    return true;
}

Subcomplex full_subcomplex(Complex ambient, const std::vector<char>& vertex_flags) {
    if (static_cast<int>(vertex_flags.size()) != ambient->count(0))
        throw std::invalid_argument("full_subcomplex: wrong vertex flag count");
    Subcomplex a = empty_subcomplex(ambient);
    for (int n = 0; n <= ambient->dim(); ++n)
        for (int i = 0; i < ambient->count(n); ++i) {
            bool all_in = true;
            for (int t = 0; t <= n && all_in; ++t)
                if (!vertex_flags[static_cast<size_t>(ambient->vertex_of({n, i}, t).index)]) all_in = false;
            a.member[static_cast<size_t>(n)][static_cast<size_t>(i)] = all_in ? 1 : 0;
        }
    return a;
}

Materialized materialize(const Subcomplex& a) {
    if (!is_face_closed(a)) throw std::invalid_argument("materialize: not face closed");
    const FinSimpSet& x = *a.ambient;
    std::vector<std::vector<SimplexId>> to_sub(static_cast<size_t>(x.dim()) + 1);
    SimpSetBuilder builder;
    for (int n = 0; n <= x.dim(); ++n) {
        to_sub[static_cast<size_t>(n)].assign(static_cast<size_t>(x.count(n)), SimplexId{-1, -1});
        for (int i = 0; i < x.count(n); ++i) {
            if (!a.contains({n, i})) continue;
            SimplexId sub;
            if (n == 0) {
                sub = builder.add_vertex(x.label({n, i}));
            } else {
                std::vector<NormalSimplex> faces;
                faces.reserve(static_cast<size_t>(n) + 1);
                for (int j = 0; j <= n; ++j) {
                    const NormalSimplex& f = x.face({n, i}, j);
                    faces.push_back({to_sub[static_cast<size_t>(f.base.dim)][static_cast<size_t>(f.base.index)],
                                     f.degeneracy});
                }
                sub = builder.add_simplex(n, std::move(faces), x.label({n, i}));
            }
            to_sub[static_cast<size_t>(n)][static_cast<size_t>(i)] = sub;
        }
    }
    Complex sub = builder.build(false);
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(sub->dim()) + 1);
    for (int n = 0; n <= x.dim(); ++n)
        for (int i = 0; i < x.count(n); ++i) {
            SimplexId s = to_sub[static_cast<size_t>(n)][static_cast<size_t>(i)];
            if (s.dim < 0) continue;
            auto& row = images[static_cast<size_t>(s.dim)];
            if (static_cast<int>(row.size()) <= s.index) row.resize(static_cast<size_t>(s.index) + 1, nondegenerate({0, 0}));
            row[static_cast<size_t>(s.index)] = nondegenerate({n, i});
        }
    return {sub, SimpMap(sub, a.ambient, std::move(images)), std::move(to_sub)};
}

Subcomplex map_image(const SimpMap& f) {
    Subcomplex out = empty_subcomplex(f.target_ptr());
    for (int n = 0; n <= f.source().dim(); ++n)
        for (int i = 0; i < f.source().count(n); ++i) {
            SimplexId b = f.apply(SimplexId{n, i}).base;
            out.member[static_cast<size_t>(b.dim)][static_cast<size_t>(b.index)] = 1;
        }
    return out;
}

bool is_full(const Subcomplex& a) {
    const FinSimpSet& x = *a.ambient;
    if (x.count(0) == 0) return true;
    std::vector<char> vertex_flags(static_cast<size_t>(x.count(0)), 0);
    for (int i = 0; i < x.count(0); ++i)
        vertex_flags[static_cast<size_t>(i)] = a.contains({0, i}) ? 1 : 0;
    for (int n = 0; n <= x.dim(); ++n)
        for (int i = 0; i < x.count(n); ++i) {
            bool all_in = true;
            for (int t = 0; t <= n && all_in; ++t)
                if (!vertex_flags[static_cast<size_t>(x.vertex_of({n, i}, t).index)]) all_in = false;
            if (all_in && !a.contains({n, i})) return false;
        }
    return true;
}

bool is_eden(const Subcomplex& a) {
    if (!is_full(a)) return false;
    const FinSimpSet& x = *a.ambient;
    for (int i = 0; i < x.count(1); ++i)
        if (a.contains(x.vertex_of({1, i}, 1)) && !a.contains({1, i})) return false;
    return true;
}

bool is_abyss(const Subcomplex& a) {
    if (!is_full(a)) return false;
    const FinSimpSet& x = *a.ambient;
    for (int i = 0; i < x.count(1); ++i)
        if (a.contains(x.vertex_of({1, i}, 0)) && !a.contains({1, i})) return false;
    return true;
}

bool eden_last_vertex_oracle(const Subcomplex& a) {
    const FinSimpSet& x = *a.ambient;
    for (int n = 0; n <= x.dim(); ++n)
        for (int i = 0; i < x.count(n); ++i)
            if (a.contains(x.vertex_of({n, i}, n)) && !a.contains({n, i})) return false;
    return true;
}

bool abyss_zeroth_vertex_oracle(const Subcomplex& a) {
    const FinSimpSet& x = *a.ambient;
    for (int n = 0; n <= x.dim(); ++n)
        for (int i = 0; i < x.count(n); ++i)
            if (a.contains(x.vertex_of({n, i}, 0)) && !a.contains({n, i})) return false;
    return true;
}

SimpMap eden_characteristic(const Subcomplex& a) {
    if (!is_eden(a)) throw std::invalid_argument("eden_characteristic: subset is not an eden");
    const FinSimpSet& x = *a.ambient;
    Complex interval = standard_simplex(1);
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(x.dim()) + 1);
    for (int n = 0; n <= x.dim(); ++n)
        for (int i = 0; i < x.count(n); ++i) {
            std::vector<int> labels(static_cast<size_t>(n) + 1);
            for (int t = 0; t <= n; ++t)
                labels[static_cast<size_t>(t)] = a.contains(x.vertex_of({n, i}, t)) ? 0 : 1;
            for (int t = 0; t < n; ++t)
                if (labels[static_cast<size_t>(t)] > labels[static_cast<size_t>(t + 1)])
                    throw std::logic_error("eden_characteristic: labels not monotone");
            bool constant = labels.front() == labels.back();
            if (constant) {
                images[static_cast<size_t>(n)].push_back(
                    {{0, labels.front()},
                     n == 0 ? Operator::identity(0) : Operator(0, std::vector<int>(static_cast<size_t>(n) + 1, 0))});
            } else {
                images[static_cast<size_t>(n)].push_back({{1, 0}, Operator(1, std::move(labels))});
            }
        }
    SimpMap chi(a.ambient, interval, std::move(images));
    require_valid(chi, "eden_characteristic");
    // The defining square must be cartesian: the 0-fiber is exactly A.
    Subcomplex fiber = end_fiber(chi, 0);
    if (!(fiber.member == a.member)) throw std::logic_error("eden_characteristic: fiber differs from subset");
    return chi;
}

Subcomplex end_fiber(const SimpMap& chi, int end) {
    if (end != 0 && end != 1) throw std::invalid_argument("end_fiber: end must be 0 or 1");
    if (!structural_equal(chi.target(), *standard_simplex(1)))
        throw std::invalid_argument("end_fiber: target is not Delta[1]");
    const FinSimpSet& x = chi.source();
    Subcomplex out = empty_subcomplex(chi.source_ptr());
    for (int n = 0; n <= x.dim(); ++n)
        for (int i = 0; i < x.count(n); ++i) {
            NormalSimplex img = chi.apply(SimplexId{n, i});
            out.member[static_cast<size_t>(n)][static_cast<size_t>(i)] =
                (img.base == SimplexId{0, end}) ? 1 : 0;
        }
    if (!is_face_closed(out)) throw std::logic_error("end_fiber: fiber not face closed");
    // Degreewise cartesianness: in every degree up to dim+2, the simplices
    // mapping to the degenerate end vertex are exactly the fiber's.
    for (int n = 0; n <= x.dim() + 2; ++n) {
        for (const auto& s : x.simplices_of_degree(n)) {
            bool to_end = chi.apply(s).base == SimplexId{0, end};
            bool in_fiber = out.contains(s.base);
            if (to_end != in_fiber) throw std::logic_error("end_fiber: square is not cartesian");
        }
    }
    return out;
}

Subcomplex complement_full(const Subcomplex& a) {
    const FinSimpSet& x = *a.ambient;
    std::vector<char> flags(static_cast<size_t>(x.count(0)));
    for (int i = 0; i < x.count(0); ++i)
        flags[static_cast<size_t>(i)] = a.contains({0, i}) ? 0 : 1;
    return full_subcomplex(a.ambient, flags);
}

Subcomplex intersect(const Subcomplex& a, const Subcomplex& b) {
    if (!structural_equal(*a.ambient, *b.ambient))
        throw std::invalid_argument("intersect: different ambient complexes");
    Subcomplex out = a;
    for (size_t n = 0; n < out.member.size(); ++n)
        for (size_t i = 0; i < out.member[n].size(); ++i)
            out.member[n][i] = out.member[n][i] && b.member[n][i];
    return out;
}

}  // namespace nsset
