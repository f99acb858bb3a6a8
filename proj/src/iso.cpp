#include <algorithm>
#include <map>
#include <vector>

#include "nsset/simpmap.hpp"

namespace nsset {

namespace {

// Invariants used to cut the vertex search: incidence roles per dimension
// and directed edge multiplicities between vertex pairs.
struct VertexData {
    std::vector<std::vector<std::pair<int, int>>> signature;  // sorted (dim, position) roles
    std::vector<std::map<int, int>> out_edges;                // v -> (w -> multiplicity)
    std::vector<std::map<int, int>> in_edges;
};

VertexData vertex_data(const FinSimpSet& x) {
    VertexData data;
    int nv = x.count(0);
    data.signature.resize(static_cast<size_t>(nv));
    data.out_edges.resize(static_cast<size_t>(nv));
    data.in_edges.resize(static_cast<size_t>(nv));
    for (int n = 1; n <= x.dim(); ++n)
        for (int i = 0; i < x.count(n); ++i)
            for (int t = 0; t <= n; ++t) {
                int v = x.vertex_of({n, i}, t).index;
                data.signature[static_cast<size_t>(v)].push_back({n, t});
            }
    for (auto& sig : data.signature) std::sort(sig.begin(), sig.end());
    for (int i = 0; i < x.count(1); ++i) {
        int a = x.vertex_of({1, i}, 0).index;
        int b = x.vertex_of({1, i}, 1).index;
        data.out_edges[static_cast<size_t>(a)][b]++;
        data.in_edges[static_cast<size_t>(b)][a]++;
    }
    return data;
}

struct IsoSearch {
    const FinSimpSet& x;
    const FinSimpSet& y;
    VertexData dx, dy;
    // assignment[n][i] = target index or -1
    std::vector<std::vector<int>> assignment;
    std::vector<std::vector<char>> used;
    std::vector<int> vertex_order;
    // face-key lookup for target simplices of each dimension >= 1
    std::vector<std::map<std::vector<NormalSimplex>, std::vector<int>>> y_by_faces;

    explicit IsoSearch(const FinSimpSet& x_, const FinSimpSet& y_) : x(x_), y(y_) {
        dx = vertex_data(x);
        dy = vertex_data(y);
        assignment.resize(static_cast<size_t>(x.dim()) + 1);
        used.resize(static_cast<size_t>(x.dim()) + 1);
        for (int n = 0; n <= x.dim(); ++n) {
            assignment[static_cast<size_t>(n)].assign(static_cast<size_t>(x.count(n)), -1);
            used[static_cast<size_t>(n)].assign(static_cast<size_t>(y.count(n)), 0);
        }
        y_by_faces.resize(static_cast<size_t>(x.dim()) + 1);
        for (int n = 1; n <= y.dim(); ++n)
            for (int i = 0; i < y.count(n); ++i) {
                std::vector<NormalSimplex> key;
                for (int j = 0; j <= n; ++j) key.push_back(y.face({n, i}, j));
                y_by_faces[static_cast<size_t>(n)][std::move(key)].push_back(i);
            }
        // Vertices in breadth-first order from the rarest signature class so
        // adjacency constraints bite early.
        int nv = x.count(0);
        std::vector<char> seen(static_cast<size_t>(nv), 0);
        std::map<std::vector<std::pair<int, int>>, int> class_size;
        for (int v = 0; v < nv; ++v) class_size[dx.signature[static_cast<size_t>(v)]]++;
        auto rarity = [&](int v) { return class_size[dx.signature[static_cast<size_t>(v)]]; };
        while (static_cast<int>(vertex_order.size()) < nv) {
            int best = -1;
            for (int v = 0; v < nv; ++v)
                if (!seen[static_cast<size_t>(v)] && (best == -1 || rarity(v) < rarity(best))) best = v;
            std::vector<int> queue{best};
            seen[static_cast<size_t>(best)] = 1;
            while (!queue.empty()) {
                int v = queue.front();
                queue.erase(queue.begin());
                vertex_order.push_back(v);
                std::vector<int> next;
                for (const auto& [w, mult] : dx.out_edges[static_cast<size_t>(v)])
                    if (!seen[static_cast<size_t>(w)]) next.push_back(w);
                for (const auto& [w, mult] : dx.in_edges[static_cast<size_t>(v)])
                    if (!seen[static_cast<size_t>(w)]) next.push_back(w);
                std::sort(next.begin(), next.end(), [&](int a, int b) { return rarity(a) < rarity(b); });
                for (int w : next) {
                    if (!seen[static_cast<size_t>(w)]) {
                        seen[static_cast<size_t>(w)] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
    }

    bool vertex_compatible(int v, int cand, int assigned_upto) {
        if (dx.signature[static_cast<size_t>(v)] != dy.signature[static_cast<size_t>(cand)]) return false;
        for (int t = 0; t < assigned_upto; ++t) {
            int u = vertex_order[static_cast<size_t>(t)];
            int mu = assignment[0][static_cast<size_t>(u)];
            auto count_in = [](const std::map<int, int>& m, int key) {
                auto it = m.find(key);
                return it == m.end() ? 0 : it->second;
            };
            if (count_in(dx.out_edges[static_cast<size_t>(u)], v) !=
                count_in(dy.out_edges[static_cast<size_t>(mu)], cand))
                return false;
            if (count_in(dx.in_edges[static_cast<size_t>(u)], v) !=
                count_in(dy.in_edges[static_cast<size_t>(mu)], cand))
                return false;
        }
        return true;
    }

    NormalSimplex push(const NormalSimplex& s) const {
        int mapped = assignment[static_cast<size_t>(s.base.dim)][static_cast<size_t>(s.base.index)];
        return {{s.base.dim, mapped}, s.degeneracy};
    }

    bool search_dim(int n, int i) {
        if (n > x.dim()) return true;
        if (i == x.count(n)) return search_dim(n + 1, 0);
        if (n == 0) {
            int v = vertex_order[static_cast<size_t>(i)];
            for (int cand = 0; cand < y.count(0); ++cand) {
                if (used[0][static_cast<size_t>(cand)]) continue;
                if (!vertex_compatible(v, cand, i)) continue;
                assignment[0][static_cast<size_t>(v)] = cand;
                used[0][static_cast<size_t>(cand)] = 1;
                if (search_dim(0, i + 1)) return true;
                assignment[0][static_cast<size_t>(v)] = -1;
                used[0][static_cast<size_t>(cand)] = 0;
            }
            return false;
        }
        std::vector<NormalSimplex> key;
        for (int j = 0; j <= n; ++j) key.push_back(push(x.face({n, i}, j)));
        auto it = y_by_faces[static_cast<size_t>(n)].find(key);
        if (it == y_by_faces[static_cast<size_t>(n)].end()) return false;
        for (int cand : it->second) {
            if (used[static_cast<size_t>(n)][static_cast<size_t>(cand)]) continue;
            assignment[static_cast<size_t>(n)][static_cast<size_t>(i)] = cand;
            used[static_cast<size_t>(n)][static_cast<size_t>(cand)] = 1;
            if (search_dim(n, i + 1)) return true;
            assignment[static_cast<size_t>(n)][static_cast<size_t>(i)] = -1;
            used[static_cast<size_t>(n)][static_cast<size_t>(cand)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<SimpMap> are_isomorphic(Complex x, Complex y) {
    if (x->counts() != y->counts()) return std::nullopt;
    if (x->empty()) return SimpMap(x, y, {});
    IsoSearch search(*x, *y);
    if (!search.search_dim(0, 0)) return std::nullopt;
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(x->dim()) + 1);
    for (int n = 0; n <= x->dim(); ++n)
        for (int i = 0; i < x->count(n); ++i)
            images[static_cast<size_t>(n)].push_back(
                nondegenerate({n, search.assignment[static_cast<size_t>(n)][static_cast<size_t>(i)]}));
    SimpMap witness(std::move(x), std::move(y), std::move(images));
    require_valid(witness, "are_isomorphic witness");
    return witness;
}

}  // namespace nsset
