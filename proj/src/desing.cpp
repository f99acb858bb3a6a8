#include "nsset/desing.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace nsset {

namespace {

// The degeneracy operator [n] -> [n-(j-i)] collapsing the interval [i..j]
// to i.
Operator interval_collapse(int n, int i, int j) {
    std::vector<int> im(static_cast<size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) im[static_cast<size_t>(t)] = t <= i ? t : (t <= j ? i : t - (j - i));
    return Operator(n - (j - i), std::move(im));
}

// First (or last) repeated vertex pair of a nondegenerate simplex, in
// canonical (dim, index, i, j) order.
bool find_collapse_site(const FinSimpSet& x, bool last, DesingStep& out) {
    bool found = false;
    for (int n = 1; n <= x.dim(); ++n) {
        for (int idx = 0; idx < x.count(n); ++idx) {
            std::vector<SimplexId> verts;
            verts.reserve(static_cast<size_t>(n) + 1);
            for (int t = 0; t <= n; ++t) verts.push_back(x.vertex_of({n, idx}, t));
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (verts[static_cast<size_t>(i)] == verts[static_cast<size_t>(j)]) {
                        out = {{n, idx}, i, j};
                        found = true;
                        if (!last) return true;
                    }
        }
    }
    return found;
}

}  // namespace

DesingResult desingularize(Complex x, bool reverse_tiebreak) {
    Complex cur = x;
    SimpMap eta = SimpMap::identity(x);
    std::vector<DesingStep> steps;
    DesingStep site{{0, 0}, 0, 0};
    while (find_collapse_site(*cur, reverse_tiebreak, site)) {
        int n = site.simplex.dim;
        Operator rho = interval_collapse(n, site.i, site.j);
        PushoutResult p = pushout(representing_map(cur, site.simplex), operator_simplex_map(rho));
        eta = compose_maps(p.left, eta);
        cur = p.apex;
        steps.push_back(site);
    }
    cur->validate();
    if (!cur->is_nonsingular()) throw std::logic_error("desingularize: loop ended on a singular complex");
    if (!is_degreewise_surjective(eta)) throw std::logic_error("desingularize: eta not surjective");
    return {cur, std::move(eta), std::move(steps)};
}

bool desing_oracle_guard(const FinSimpSet& x) { return x.total_nondegenerate() <= 6 && x.dim() <= 2; }

namespace {

// ---- Congruence enumeration for the oracle ----------------------------

struct MemberSpace {
    int max_degree;
    std::vector<std::vector<NormalSimplex>> members;         // per degree
    std::vector<std::map<NormalSimplex, int>> member_index;  // per degree
    // action[n][m][op][member] = index of member . op in degree m
    std::vector<std::vector<std::vector<std::vector<int>>>> action;
    std::vector<std::vector<Operator>> ops;  // ops[m][n] flattened below
    std::vector<std::vector<std::vector<Operator>>> op_list;  // [n][m] -> operators [m]->[n]

    explicit MemberSpace(const FinSimpSet& x) {
        max_degree = x.dim() + 2;
        members.resize(static_cast<size_t>(max_degree) + 1);
        member_index.resize(static_cast<size_t>(max_degree) + 1);
        for (int n = 0; n <= max_degree; ++n) {
            members[static_cast<size_t>(n)] = x.simplices_of_degree(n);
            for (size_t i = 0; i < members[static_cast<size_t>(n)].size(); ++i)
                member_index[static_cast<size_t>(n)][members[static_cast<size_t>(n)][i]] = static_cast<int>(i);
        }
        op_list.resize(static_cast<size_t>(max_degree) + 1);
        action.resize(static_cast<size_t>(max_degree) + 1);
        for (int n = 0; n <= max_degree; ++n) {
            op_list[static_cast<size_t>(n)].resize(static_cast<size_t>(max_degree) + 1);
            action[static_cast<size_t>(n)].resize(static_cast<size_t>(max_degree) + 1);
            for (int m = 0; m <= max_degree; ++m) {
                op_list[static_cast<size_t>(n)][static_cast<size_t>(m)] = all_operators(m, n);
                auto& per_op = action[static_cast<size_t>(n)][static_cast<size_t>(m)];
                for (const auto& a : op_list[static_cast<size_t>(n)][static_cast<size_t>(m)]) {
                    std::vector<int> row;
                    row.reserve(members[static_cast<size_t>(n)].size());
                    for (const auto& s : members[static_cast<size_t>(n)])
                        row.push_back(member_index[static_cast<size_t>(m)].at(x.act(s, a)));
                    per_op.push_back(std::move(row));
                }
            }
        }
    }
};

// A congruence as per-degree class labels, canonically renumbered.
using Partition = std::vector<std::vector<int>>;

Partition discrete_partition(const MemberSpace& space) {
    Partition p(space.members.size());
    for (size_t n = 0; n < space.members.size(); ++n) {
        p[n].resize(space.members[n].size());
        for (size_t i = 0; i < p[n].size(); ++i) p[n][i] = static_cast<int>(i);
    }
    return p;
}

void canonicalize(Partition& p) {
    for (auto& row : p) {
        std::map<int, int> relabel;
        for (int& v : row) {
            auto [it, fresh] = relabel.emplace(v, static_cast<int>(relabel.size()));
            v = it->second;
        }
    }
}

// Close a partition under the operator action; `pending` carries extra
// generating pairs beyond the partition's own classes.
void saturate(const MemberSpace& space, Partition& p,
              std::vector<std::tuple<int, int, int>> pending) {
    std::vector<std::vector<int>> parent(p.size());
    for (size_t n = 0; n < p.size(); ++n) {
        parent[n].resize(p[n].size());
        for (size_t i = 0; i < p[n].size(); ++i) parent[n][i] = static_cast<int>(i);
        std::map<int, int> first_of_label;
        for (size_t i = 0; i < p[n].size(); ++i) {
            auto [it, fresh] = first_of_label.emplace(p[n][i], static_cast<int>(i));
            if (!fresh) pending.push_back({static_cast<int>(n), it->second, static_cast<int>(i)});
        }
    }
    auto find = [&](int n, int a) {
        while (parent[static_cast<size_t>(n)][static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(n)][static_cast<size_t>(a)] =
                parent[static_cast<size_t>(n)][static_cast<size_t>(parent[static_cast<size_t>(n)][static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(n)][static_cast<size_t>(a)];
        }
        return a;
    };
    while (!pending.empty()) {
        auto [n, a, b] = pending.back();
        pending.pop_back();
        int ra = find(n, a);
        int rb = find(n, b);
        if (ra == rb) continue;
        if (ra > rb) std::swap(ra, rb);
        parent[static_cast<size_t>(n)][static_cast<size_t>(rb)] = ra;
        // Action compatibility: the merged roots' images must merge too.
        for (int m = 0; m <= space.max_degree; ++m)
            for (const auto& row : space.action[static_cast<size_t>(n)][static_cast<size_t>(m)])
                pending.push_back({m, row[static_cast<size_t>(ra)], row[static_cast<size_t>(rb)]});
    }
    for (size_t n = 0; n < p.size(); ++n)
        for (size_t i = 0; i < p[n].size(); ++i) p[n][i] = find(static_cast<int>(n), static_cast<int>(i));
    canonicalize(p);
}

bool quotient_nonsingular(const MemberSpace& space, const Partition& p) {
    // A class is degenerate iff it has a degenerate member.  A quotient is
    // singular iff some nondegenerate class of degree n >= 1 has two equal
    // vertex classes.
    for (size_t n = 1; n < p.size(); ++n) {
        if (p[n].empty()) continue;
        int classes = *std::max_element(p[n].begin(), p[n].end()) + 1;
        std::vector<char> degenerate(static_cast<size_t>(classes), 0);
        std::vector<int> representative(static_cast<size_t>(classes), -1);
        for (size_t i = 0; i < p[n].size(); ++i) {
            if (space.members[n][i].is_degenerate()) degenerate[static_cast<size_t>(p[n][i])] = 1;
            else if (representative[static_cast<size_t>(p[n][i])] < 0)
                representative[static_cast<size_t>(p[n][i])] = static_cast<int>(i);
        }
        for (int c = 0; c < classes; ++c) {
            if (degenerate[static_cast<size_t>(c)] || representative[static_cast<size_t>(c)] < 0) continue;
            int rep = representative[static_cast<size_t>(c)];
            std::set<int> vertex_classes;
            for (int t = 0; t <= static_cast<int>(n); ++t) {
                const auto& ops = space.op_list[n][0];
                // vertex operator eps_t is the operator with image {t}
                int op_index = t;  // all_operators(0, n) lists (0), (1), ..., (n)
                (void)ops;
                int v = space.action[n][0][static_cast<size_t>(op_index)][static_cast<size_t>(rep)];
                vertex_classes.insert(p[0][static_cast<size_t>(v)]);
            }
            if (static_cast<int>(vertex_classes.size()) != static_cast<int>(n) + 1) return false;
        }
    }
    return true;
}

Complex quotient_complex(const FinSimpSet& x, const MemberSpace& space, const Partition& p) {
    int top = x.dim();
    // apex ids per degree for nondegenerate classes, ordered by smallest member
    std::vector<std::vector<int>> apex_of_class(p.size());
    std::vector<std::vector<NormalSimplex>> nf(p.size());
    SimpSetBuilder builder;
    for (int n = 0; n <= top; ++n) {
        int classes = p[static_cast<size_t>(n)].empty()
                          ? 0
                          : *std::max_element(p[static_cast<size_t>(n)].begin(), p[static_cast<size_t>(n)].end()) + 1;
        std::vector<char> degenerate(static_cast<size_t>(classes), 0);
        std::vector<int> first_member(static_cast<size_t>(classes), -1);
        for (size_t i = 0; i < p[static_cast<size_t>(n)].size(); ++i) {
            int c = p[static_cast<size_t>(n)][i];
            if (space.members[static_cast<size_t>(n)][i].is_degenerate()) degenerate[static_cast<size_t>(c)] = 1;
            if (first_member[static_cast<size_t>(c)] < 0) first_member[static_cast<size_t>(c)] = static_cast<int>(i);
        }
        apex_of_class[static_cast<size_t>(n)].assign(static_cast<size_t>(classes), -1);
        nf[static_cast<size_t>(n)].assign(p[static_cast<size_t>(n)].size(), nondegenerate({0, 0}));
        // first pass: create nondegenerate classes in order of first member
        for (size_t i = 0; i < p[static_cast<size_t>(n)].size(); ++i) {
            int c = p[static_cast<size_t>(n)][i];
            if (degenerate[static_cast<size_t>(c)] || apex_of_class[static_cast<size_t>(n)][static_cast<size_t>(c)] >= 0 ||
                first_member[static_cast<size_t>(c)] != static_cast<int>(i))
                continue;
            const NormalSimplex& rep = space.members[static_cast<size_t>(n)][i];
            if (n == 0) {
                apex_of_class[0][static_cast<size_t>(c)] = builder.add_vertex().index;
            } else {
                std::vector<NormalSimplex> faces;
                for (int j = 0; j <= n; ++j) {
                    NormalSimplex face = x.act(rep, Operator::face(j, n));
                    int fi = space.member_index[static_cast<size_t>(n - 1)].at(face);
                    faces.push_back(nf[static_cast<size_t>(n - 1)][static_cast<size_t>(fi)]);
                }
                apex_of_class[static_cast<size_t>(n)][static_cast<size_t>(c)] =
                    builder.add_simplex(n, std::move(faces)).index;
            }
        }
        // second pass: normal forms for every member of this degree
        for (size_t i = 0; i < p[static_cast<size_t>(n)].size(); ++i) {
            int c = p[static_cast<size_t>(n)][i];
            if (!degenerate[static_cast<size_t>(c)]) {
                nf[static_cast<size_t>(n)][i] =
                    nondegenerate({n, apex_of_class[static_cast<size_t>(n)][static_cast<size_t>(c)]});
                continue;
            }
            // peel one elementary degeneracy from a degenerate member of the class
            int chosen = -1;
            for (size_t m = 0; m < p[static_cast<size_t>(n)].size(); ++m)
                if (p[static_cast<size_t>(n)][m] == c && space.members[static_cast<size_t>(n)][m].is_degenerate()) {
                    chosen = static_cast<int>(m);
                    break;
                }
            const NormalSimplex& s = space.members[static_cast<size_t>(n)][static_cast<size_t>(chosen)];
            const auto& im = s.degeneracy.images();
            int k = 0;
            while (im[static_cast<size_t>(k)] != im[static_cast<size_t>(k) + 1]) ++k;
            std::vector<int> tau = im;
            tau.erase(tau.begin() + k);
            int parent_index = space.member_index[static_cast<size_t>(n - 1)].at(
                {s.base, Operator(s.base.dim, std::move(tau))});
            const NormalSimplex& lower = nf[static_cast<size_t>(n - 1)][static_cast<size_t>(parent_index)];
            NormalSimplex value{lower.base, compose(lower.degeneracy, Operator::degeneracy(k, n))};
            for (size_t m = 0; m < p[static_cast<size_t>(n)].size(); ++m)
                if (p[static_cast<size_t>(n)][m] == c) nf[static_cast<size_t>(n)][m] = value;
        }
    }
    return builder.build();
}

}  // namespace

Complex desing_oracle(Complex x) {
    if (!desing_oracle_guard(*x)) throw std::invalid_argument("desing_oracle: input exceeds the size guard");
    MemberSpace space(*x);
    Partition discrete = discrete_partition(space);

    std::set<Partition> seen;
    std::vector<Partition> nonsingular;
    std::queue<Partition> frontier;
    frontier.push(discrete);
    seen.insert(discrete);
    size_t budget = 200000;
    while (!frontier.empty()) {
        Partition p = frontier.front();
        frontier.pop();
        if (quotient_nonsingular(space, p)) {
            // Coarsenings cannot refine the meet, so stop exploring here.
            nonsingular.push_back(p);
            continue;
        }
        for (size_t n = 0; n < p.size(); ++n)
            for (size_t a = 0; a < p[n].size(); ++a)
                for (size_t b = a + 1; b < p[n].size(); ++b) {
                    if (p[n][a] == p[n][b]) continue;
                    Partition child = p;
                    saturate(space, child, {{static_cast<int>(n), static_cast<int>(a), static_cast<int>(b)}});
                    if (seen.insert(child).second) {
                        frontier.push(child);
                        if (seen.size() > budget)
                            throw std::invalid_argument("desing_oracle: congruence lattice exceeds budget");
                    }
                }
    }
    if (nonsingular.empty()) throw std::logic_error("desing_oracle: no nonsingular quotient found");

    // Meet: related iff related in every recorded nonsingular congruence.
    Partition meet = discrete;
    for (size_t n = 0; n < meet.size(); ++n) {
        std::map<std::vector<int>, int> key_class;
        for (size_t i = 0; i < meet[n].size(); ++i) {
            std::vector<int> key;
            key.reserve(nonsingular.size());
            for (const auto& q : nonsingular) key.push_back(q[n][i]);
            auto [it, fresh] = key_class.emplace(std::move(key), static_cast<int>(key_class.size()));
            meet[n][i] = it->second;
        }
    }
    // The intersection of congruences is a congruence; saturation is a no-op
    // but cheap to assert.
    Partition check = meet;
    saturate(space, check, {});
    if (!(check == meet)) throw std::logic_error("desing_oracle: meet failed to be a congruence");
    if (!quotient_nonsingular(space, meet))
        throw std::logic_error("desing_oracle: meet quotient is singular");
    return quotient_complex(*x, space, meet);
}

SimpMap desing_map(const SimpMap& f, const DesingResult& dx, const DesingResult& dy) {
    if (!structural_equal(f.source(), dx.eta.source()) || !structural_equal(f.target(), dy.eta.source()))
        throw std::invalid_argument("desing_map: desingularizations do not match the map");
    return factor_through_surjection(dx.eta, compose_maps(dy.eta, f));
}

CollapseReport verify_collapse_structure(Complex x, const Subcomplex& a) {
    if (!x->is_nonsingular())
        throw std::invalid_argument("verify_collapse_structure: ambient must be nonsingular");
    if (!is_eden(a)) throw std::invalid_argument("verify_collapse_structure: subset must be an eden");
    if (a.member_count() == 0)
        throw std::invalid_argument("verify_collapse_structure: empty eden has no collapse");

    CollapseReport report;
    Subcomplex v = complement_full(a);
    Materialized mv = materialize(v);
    report.v_vertices = mv.complex->count(0);

    PushoutResult quotient = collapse(x, a);
    DesingResult d = desingularize(quotient.apex);
    report.dxa = d.dx;

    SimpMap j_tilde = compose_maps(d.eta, compose_maps(quotient.left, mv.inclusion));
    report.v_injective = is_degreewise_injective(j_tilde);

    Subcomplex v_image = map_image(j_tilde);
    report.v_abyss = report.v_injective && is_abyss(v_image);

    // The collapsed point is an eden whose characteristic map has V as the
    // opposite fiber.
    SimplexId point = d.eta.apply(quotient.right.apply(SimplexId{0, 0}).base).base;
    Subcomplex point_sub = subcomplex_closure(d.dx, {point});
    bool fibers = is_eden(point_sub);
    if (fibers) {
        SimpMap chi = eden_characteristic(point_sub);
        fibers = end_fiber(chi, 0).member == point_sub.member &&
                 end_fiber(chi, 1).member == v_image.member;
    }
    report.fibers_match = fibers;

    bool bij = quotient.apex->count(0) == d.dx->count(0);
    if (bij) {
        std::set<int> hit;
        for (int i = 0; i < quotient.apex->count(0); ++i)
            hit.insert(d.eta.apply(SimplexId{0, i}).base.index);
        bij = static_cast<int>(hit.size()) == quotient.apex->count(0);
    }
    report.degree0_bijective = bij;
    return report;
}

}  // namespace nsset
