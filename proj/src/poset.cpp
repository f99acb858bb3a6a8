#include "nsset/poset.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace nsset {

FinPoset::FinPoset(int size) : size_(size) {
    if (size < 0) throw std::invalid_argument("poset: negative size");
    matrix_.assign(static_cast<size_t>(size), std::vector<char>(static_cast<size_t>(size), 0));
    for (int i = 0; i < size; ++i) matrix_[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
}

FinPoset::FinPoset(int size, const std::vector<std::pair<int, int>>& strict_pairs) : FinPoset(size) {
    for (auto [a, b] : strict_pairs) set_leq(a, b);
    validate();
}

void FinPoset::set_leq(int a, int b) {
    if (a < 0 || a >= size_ || b < 0 || b >= size_) throw std::out_of_range("poset: element out of range");
    matrix_[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
}

std::vector<std::pair<int, int>> FinPoset::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
            if (a != b && leq(a, b)) out.push_back({a, b});
    return out;
}

std::vector<std::pair<int, int>> FinPoset::hasse_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : pairs()) {
        bool covering = true;
        for (int c = 0; c < size_ && covering; ++c)
            if (c != a && c != b && leq(a, c) && leq(c, b)) covering = false;
        if (covering) out.push_back({a, b});
    }
    return out;
}

void FinPoset::validate() const {
    for (int a = 0; a < size_; ++a) {
        if (!leq(a, a)) throw std::logic_error("poset: relation not reflexive");
        for (int b = 0; b < size_; ++b) {
            if (a != b && leq(a, b) && leq(b, a)) throw std::logic_error("poset: relation not antisymmetric");
            for (int c = 0; c < size_; ++c)
                if (leq(a, b) && leq(b, c) && !leq(a, c)) throw std::logic_error("poset: relation not transitive");
        }
    }
}

FinPoset FinPoset::chain(int n) {
    FinPoset p(n + 1);
    for (int a = 0; a <= n; ++a)
        for (int b = a; b <= n; ++b) p.set_leq(a, b);
    return p;
}

FinPoset FinPoset::antichain(int n) { return FinPoset(n); }

bool MonotoneMap::validate() const {
    if (static_cast<int>(images.size()) != source.size()) return false;
    for (int v : images)
        if (v < 0 || v >= target.size()) return false;
    for (int a = 0; a < source.size(); ++a)
        for (int b = 0; b < source.size(); ++b)
            if (source.leq(a, b) &&
                !target.leq(images[static_cast<size_t>(a)], images[static_cast<size_t>(b)]))
                return false;
    return true;
}

MonotoneMap identity_monotone(const FinPoset& p) {
    std::vector<int> im(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) im[static_cast<size_t>(i)] = i;
    return {p, p, std::move(im)};
}

MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner) {
    if (!(inner.target == outer.source)) throw std::invalid_argument("compose: poset mismatch");
    std::vector<int> im;
    im.reserve(inner.images.size());
    for (int v : inner.images) im.push_back(outer.images[static_cast<size_t>(v)]);
    return {inner.source, outer.target, std::move(im)};
}

bool is_sieve(const FinPoset& p, const std::vector<char>& subset) {
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(a, b) && subset[static_cast<size_t>(b)] && !subset[static_cast<size_t>(a)])
                return false;
    return true;
}

bool is_cosieve(const FinPoset& p, const std::vector<char>& subset) {
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(a, b) && subset[static_cast<size_t>(a)] && !subset[static_cast<size_t>(b)])
                return false;
    return true;
}

FinPoset product_with_chain1(const FinPoset& p) {
    int n = p.size();
    FinPoset out(2 * n);
    for (int e = 0; e <= 1; ++e)
        for (int f = e; f <= 1; ++f)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (p.leq(a, b)) out.set_leq(e * n + a, f * n + b);
    return out;
}

SimplexId NerveResult::index_of(const std::vector<int>& chain) const {
    auto it = index_.find(chain);
    if (it == index_.end()) throw std::invalid_argument("nerve: unknown chain");
    return it->second;
}

NormalSimplex NerveResult::normal_form(const std::vector<int>& weak_chain) const {
    std::vector<int> dedup;
    std::vector<int> collapse;
    collapse.reserve(weak_chain.size());
    for (int v : weak_chain) {
        if (dedup.empty() || dedup.back() != v) dedup.push_back(v);
        collapse.push_back(static_cast<int>(dedup.size()) - 1);
    }
    return {index_of(dedup), Operator(static_cast<int>(dedup.size()) - 1, std::move(collapse))};
}

NerveResult nerve(const FinPoset& p) {
    NerveResult out;
    // Strict chains by DFS, collected per length, lexicographically ordered
    // because starts and extensions are scanned in increasing order.
    std::vector<std::vector<int>> above(static_cast<size_t>(p.size()));
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (a != b && p.leq(a, b)) above[static_cast<size_t>(a)].push_back(b);

    std::vector<int> chain;
    auto dfs = [&](auto&& self, int last) -> void {
        size_t len = chain.size();
        if (out.chains.size() < len) out.chains.resize(len);
        out.chains[len - 1].push_back(chain);
        for (int next : above[static_cast<size_t>(last)]) {
            chain.push_back(next);
            self(self, next);
            chain.pop_back();
        }
    };
    for (int start = 0; start < p.size(); ++start) {
        chain = {start};
        dfs(dfs, start);
    }
    // The DFS emits chains of each length in lexicographic order already;
    // keep the invariant explicit.
    for (auto& per_dim : out.chains)
        if (!std::is_sorted(per_dim.begin(), per_dim.end()))
            std::sort(per_dim.begin(), per_dim.end());

    SimpSetBuilder builder;
    for (size_t d = 0; d < out.chains.size(); ++d) {
        for (size_t i = 0; i < out.chains[d].size(); ++i) {
            const auto& c = out.chains[d][i];
            if (d == 0) {
                out.index_[c] = builder.add_vertex();
            } else {
                std::vector<NormalSimplex> faces;
                faces.reserve(d + 1);
                for (size_t j = 0; j <= d; ++j) {
                    std::vector<int> sub = c;
                    sub.erase(sub.begin() + static_cast<long>(j));
                    faces.push_back(nondegenerate(out.index_.at(sub)));
                }
                out.index_[c] = builder.add_simplex(static_cast<int>(d), std::move(faces));
            }
        }
    }
    out.complex = builder.build(false);
    return out;
}

SimpMap nerve_map(const MonotoneMap& g, const NerveResult& np, const NerveResult& nq) {
    const FinSimpSet& src = *np.complex;
    std::vector<std::vector<NormalSimplex>> images(static_cast<size_t>(src.dim()) + 1);
    for (int n = 0; n <= src.dim(); ++n)
        for (int i = 0; i < src.count(n); ++i) {
            const auto& chain = np.chain_of({n, i});
            std::vector<int> mapped;
            mapped.reserve(chain.size());
            for (int v : chain) mapped.push_back(g.images[static_cast<size_t>(v)]);
            images[static_cast<size_t>(n)].push_back(nq.normal_form(mapped));
        }
    return SimpMap(np.complex, nq.complex, std::move(images));
}

int SharpResult::index_of(SimplexId x) const {
    int offset = 0;
    for (int d = 0; d < x.dim; ++d) offset += ambient->count(d);
    return offset + x.index;
}

SharpResult sharp(Complex x) {
    SharpResult out;
    out.ambient = x;
    for (int n = 0; n <= x->dim(); ++n)
        for (int i = 0; i < x->count(n); ++i) out.elements.push_back({n, i});
    int size = static_cast<int>(out.elements.size());
    FinPoset p(size);
    // Immediate faces; the full face relation is their transitive closure.
    // Antisymmetry is automatic because faces strictly drop dimension.
    std::vector<std::vector<int>> below(static_cast<size_t>(size));
    for (int e = 0; e < size; ++e) {
        SimplexId s = out.elements[static_cast<size_t>(e)];
        if (s.dim == 0) continue;
        for (int j = 0; j <= s.dim; ++j) {
            SimplexId b = x->face(s, j).base;
            below[static_cast<size_t>(e)].push_back(out.index_of(b));
        }
    }
    std::vector<char> seen(static_cast<size_t>(size));
    for (int e = 0; e < size; ++e) {
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<int> queue{e};
        seen[static_cast<size_t>(e)] = 1;
        while (!queue.empty()) {
            int m = queue.back();
            queue.pop_back();
            p.set_leq(m, e);
            for (int l : below[static_cast<size_t>(m)])
                if (!seen[static_cast<size_t>(l)]) {
                    seen[static_cast<size_t>(l)] = 1;
                    queue.push_back(l);
                }
        }
    }
    out.poset = std::move(p);
    return out;
}

MonotoneMap sharp_map(const SimpMap& f, const SharpResult& sx, const SharpResult& sy) {
    std::vector<int> images;
    images.reserve(sx.elements.size());
    for (SimplexId e : sx.elements) images.push_back(sy.index_of(f.apply(e).base));
    MonotoneMap out{sx.poset, sy.poset, std::move(images)};
    if (!out.validate()) throw std::logic_error("sharp_map: image not monotone");
    return out;
}

PcResult pc(const FinSimpSet& x) {
    int nv = x.count(0);
    std::vector<std::vector<int>> succ(static_cast<size_t>(nv));
    for (int i = 0; i < x.count(1); ++i) {
        int a = x.vertex_of({1, i}, 0).index;
        int b = x.vertex_of({1, i}, 1).index;
        succ[static_cast<size_t>(a)].push_back(b);
    }
    // Tarjan strongly connected components.
    std::vector<int> number(static_cast<size_t>(nv), -1), low(static_cast<size_t>(nv), -1),
        on_stack(static_cast<size_t>(nv), 0), comp(static_cast<size_t>(nv), -1);
    std::vector<int> stack;
    int counter = 0, comp_count = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        number[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = counter++;
        stack.push_back(v);
        on_stack[static_cast<size_t>(v)] = 1;
        for (int w : succ[static_cast<size_t>(v)]) {
            if (number[static_cast<size_t>(w)] == -1) {
                self(self, w);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
            } else if (on_stack[static_cast<size_t>(w)]) {
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], number[static_cast<size_t>(w)]);
            }
        }
        if (low[static_cast<size_t>(v)] == number[static_cast<size_t>(v)]) {
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[static_cast<size_t>(w)] = 0;
                comp[static_cast<size_t>(w)] = comp_count;
                if (w == v) break;
            }
            ++comp_count;
        }
    };
    for (int v = 0; v < nv; ++v)
        if (number[static_cast<size_t>(v)] == -1) dfs(dfs, v);

    // Canonical class order: by minimal original vertex.
    std::vector<int> rep(static_cast<size_t>(comp_count), nv);
    for (int v = 0; v < nv; ++v)
        rep[static_cast<size_t>(comp[static_cast<size_t>(v)])] =
            std::min(rep[static_cast<size_t>(comp[static_cast<size_t>(v)])], v);
    std::vector<int> order(static_cast<size_t>(comp_count));
    for (int c = 0; c < comp_count; ++c) order[static_cast<size_t>(c)] = c;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return rep[static_cast<size_t>(a)] < rep[static_cast<size_t>(b)]; });
    std::vector<int> renumber(static_cast<size_t>(comp_count));
    for (int pos = 0; pos < comp_count; ++pos) renumber[static_cast<size_t>(order[static_cast<size_t>(pos)])] = pos;

    PcResult out;
    out.class_of_vertex.resize(static_cast<size_t>(nv));
    out.representative.resize(static_cast<size_t>(comp_count));
    for (int v = 0; v < nv; ++v)
        out.class_of_vertex[static_cast<size_t>(v)] = renumber[static_cast<size_t>(comp[static_cast<size_t>(v)])];
    for (int c = 0; c < comp_count; ++c)
        out.representative[static_cast<size_t>(renumber[static_cast<size_t>(c)])] = rep[static_cast<size_t>(c)];

    // Reachability between classes gives the partial order.
    FinPoset p(comp_count);
    for (int v = 0; v < nv; ++v) {
        std::vector<char> seen(static_cast<size_t>(nv), 0);
        std::vector<int> queue{v};
        seen[static_cast<size_t>(v)] = 1;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            p.set_leq(out.class_of_vertex[static_cast<size_t>(v)], out.class_of_vertex[static_cast<size_t>(u)]);
            for (int w : succ[static_cast<size_t>(u)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    queue.push_back(w);
                }
        }
    }
    p.validate();
    out.poset = std::move(p);
    return out;
}

namespace {

struct PosetIsoSearch {
    const FinPoset& p;
    const FinPoset& q;
    std::vector<int> assignment;
    std::vector<char> used;
    std::vector<std::array<int, 4>> sig_p, sig_q;
    std::vector<int> order;

    PosetIsoSearch(const FinPoset& p_, const FinPoset& q_) : p(p_), q(q_) {
        assignment.assign(static_cast<size_t>(p.size()), -1);
        used.assign(static_cast<size_t>(q.size()), 0);
        sig_p = signatures(p);
        sig_q = signatures(q);
        order.resize(static_cast<size_t>(p.size()));
        for (int i = 0; i < p.size(); ++i) order[static_cast<size_t>(i)] = i;
        std::map<std::array<int, 4>, int> freq;
        for (const auto& s : sig_p) freq[s]++;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return freq[sig_p[static_cast<size_t>(a)]] < freq[sig_p[static_cast<size_t>(b)]];
        });
    }

    static std::vector<std::array<int, 4>> signatures(const FinPoset& r) {
        std::vector<std::array<int, 4>> out(static_cast<size_t>(r.size()));
        auto hasse = r.hasse_pairs();
        for (int a = 0; a < r.size(); ++a) {
            int down = 0, up = 0;
            for (int b = 0; b < r.size(); ++b) {
                if (b == a) continue;
                if (r.leq(b, a)) ++down;
                if (r.leq(a, b)) ++up;
            }
            out[static_cast<size_t>(a)] = {down, up, 0, 0};
        }
        for (auto [x, y] : hasse) {
            out[static_cast<size_t>(y)][2]++;
            out[static_cast<size_t>(x)][3]++;
        }
        return out;
    }

    bool search(int pos) {
        if (pos == p.size()) return true;
        int a = order[static_cast<size_t>(pos)];
        for (int cand = 0; cand < q.size(); ++cand) {
            if (used[static_cast<size_t>(cand)]) continue;
            if (sig_p[static_cast<size_t>(a)] != sig_q[static_cast<size_t>(cand)]) continue;
            bool ok = true;
            for (int t = 0; t < pos && ok; ++t) {
                int b = order[static_cast<size_t>(t)];
                int mb = assignment[static_cast<size_t>(b)];
                if (p.leq(a, b) != q.leq(cand, mb) || p.leq(b, a) != q.leq(mb, cand)) ok = false;
            }
            if (!ok) continue;
            assignment[static_cast<size_t>(a)] = cand;
            used[static_cast<size_t>(cand)] = 1;
            if (search(pos + 1)) return true;
            assignment[static_cast<size_t>(a)] = -1;
            used[static_cast<size_t>(cand)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<MonotoneMap> poset_iso(const FinPoset& p, const FinPoset& q) {
    if (p.size() != q.size()) return std::nullopt;
    PosetIsoSearch search(p, q);
    if (!search.search(0)) return std::nullopt;
    MonotoneMap out{p, q, search.assignment};
    if (!out.validate()) throw std::logic_error("poset_iso: witness not monotone");
    return out;
}

}  // namespace nsset
