#include "nsset/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nsset {

IMatrix IMatrix::identity(int n) {
    IMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
    return m;
}

IMatrix multiply(const IMatrix& x, const IMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("multiply: shape mismatch");
    IMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                if (y.at(k, j).is_zero()) continue;
                out.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        }
    return out;
}

namespace {

struct SnfWorker {
    IMatrix m;
    bool track_rows, track_cols;
    IMatrix u, uinv, v, vinv;

    SnfWorker(IMatrix mat, bool rows, bool cols)
        : m(std::move(mat)),
          track_rows(rows),
          track_cols(cols),
          u(rows ? IMatrix::identity(m.rows) : IMatrix()),
          uinv(rows ? IMatrix::identity(m.rows) : IMatrix()),
          v(cols ? IMatrix::identity(m.cols) : IMatrix()),
          vinv(cols ? IMatrix::identity(m.cols) : IMatrix()) {}

    void row_swap(int r1, int r2) {
        if (r1 == r2) return;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
        if (track_rows) {
            for (int c = 0; c < u.cols; ++c) std::swap(u.at(r1, c), u.at(r2, c));
            for (int r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, r1), uinv.at(r, r2));
        }
    }
    void col_swap(int c1, int c2) {
        if (c1 == c2) return;
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
        if (track_cols) {
            for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, c1), v.at(r, c2));
            for (int c = 0; c < vinv.cols; ++c) std::swap(vinv.at(c1, c), vinv.at(c2, c));
        }
    }
    // row r1 += q * row r2
    void row_add(int r1, int r2, const BigInt& q) {
        if (q.is_zero()) return;
        for (int c = 0; c < m.cols; ++c)
            if (!m.at(r2, c).is_zero()) m.at(r1, c) += q * m.at(r2, c);
        if (track_rows) {
            for (int c = 0; c < u.cols; ++c)
                if (!u.at(r2, c).is_zero()) u.at(r1, c) += q * u.at(r2, c);
            for (int r = 0; r < uinv.rows; ++r)
                if (!uinv.at(r, r1).is_zero()) uinv.at(r, r2) -= q * uinv.at(r, r1);
        }
    }
    // col c1 += q * col c2
    void col_add(int c1, int c2, const BigInt& q) {
        if (q.is_zero()) return;
        for (int r = 0; r < m.rows; ++r)
            if (!m.at(r, c2).is_zero()) m.at(r, c1) += q * m.at(r, c2);
        if (track_cols) {
            for (int r = 0; r < v.rows; ++r)
                if (!v.at(r, c2).is_zero()) v.at(r, c1) += q * v.at(r, c2);
            for (int c = 0; c < vinv.cols; ++c)
                if (!vinv.at(c1, c).is_zero()) vinv.at(c2, c) -= q * vinv.at(c1, c);
        }
    }
    void row_negate(int r) {
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = -m.at(r, c);
        if (track_rows) {
            for (int c = 0; c < u.cols; ++c) u.at(r, c) = -u.at(r, c);
            for (int rr = 0; rr < uinv.rows; ++rr) uinv.at(rr, r) = -uinv.at(rr, r);
        }
    }

    bool find_pivot(int t, int& pr, int& pc) {
        bool found = false;
        for (int r = t; r < m.rows; ++r)
            for (int c = t; c < m.cols; ++c) {
                const BigInt& val = m.at(r, c);
                if (val.is_zero()) continue;
                if (!found || BigInt::compare_abs(val, m.at(pr, pc)) < 0) {
                    pr = r;
                    pc = c;
                    found = true;
                }
            }
        return found;
    }

    void clear_position(int t) {
        while (true) {
            int pr = t, pc = t;
            if (!find_pivot(t, pr, pc)) return;
            row_swap(t, pr);
            col_swap(t, pc);
            bool dirty = false;
            for (int r = t + 1; r < m.rows; ++r) {
                if (m.at(r, t).is_zero()) continue;
                BigInt q = m.at(r, t) / m.at(t, t);
                row_add(r, t, -q);
                if (!m.at(r, t).is_zero()) dirty = true;
            }
            for (int c = t + 1; c < m.cols; ++c) {
                if (m.at(t, c).is_zero()) continue;
                BigInt q = m.at(t, c) / m.at(t, t);
                col_add(c, t, -q);
                if (!m.at(t, c).is_zero()) dirty = true;
            }
            if (!dirty) {
                bool clean = true;
                for (int r = t + 1; r < m.rows && clean; ++r)
                    if (!m.at(r, t).is_zero()) clean = false;
                for (int c = t + 1; c < m.cols && clean; ++c)
                    if (!m.at(t, c).is_zero()) clean = false;
                if (clean) {
                    if (m.at(t, t).sign() < 0) row_negate(t);
                    return;
                }
            }
        }
    }
};

}  // namespace

SmithNormalForm smith_normal_form(IMatrix mat, bool want_row_ops, bool want_col_ops) {
    SnfWorker w(std::move(mat), want_row_ops, want_col_ops);
    int limit = std::min(w.m.rows, w.m.cols);
    auto diagonalize = [&] {
        for (int t = 0; t < limit; ++t) {
            w.clear_position(t);
            if (w.m.at(t, t).is_zero()) break;
        }
    };
    diagonalize();
    // Divisibility chain: fold each offender into its predecessor's column
    // and re-diagonalize until the chain holds.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int t = 0; t + 1 < limit; ++t) {
            const BigInt& a = w.m.at(t, t);
            const BigInt& b = w.m.at(t + 1, t + 1);
            if (a.is_zero() || b.is_zero()) continue;
            if ((b % a).is_zero()) continue;
            w.col_add(t, t + 1, BigInt(1));
            diagonalize();
            changed = true;
            break;
        }
    }
    for (int t = 0; t < limit; ++t)
        if (w.m.at(t, t).sign() < 0) w.row_negate(t);
    SmithNormalForm out;
    out.rank = 0;
    for (int t = 0; t < limit; ++t) {
        if (w.m.at(t, t).is_zero()) continue;
        ++out.rank;
        out.divisors.push_back(w.m.at(t, t));
    }
    for (size_t i = 0; i + 1 < out.divisors.size(); ++i)
        if (!(out.divisors[i + 1] % out.divisors[i]).is_zero())
            throw std::logic_error("smith_normal_form: divisibility chain failed");
    out.d = std::move(w.m);
    if (want_row_ops) {
        out.u = std::move(w.u);
        out.uinv = std::move(w.uinv);
    }
    if (want_col_ops) {
        out.v = std::move(w.v);
        out.vinv = std::move(w.vinv);
    }
    return out;
}

void ChainComplex::validate() const {
    for (size_t n = 1; n + 1 < boundary.size(); ++n) {
        IMatrix dd = multiply(boundary[n], boundary[n + 1]);
        for (const BigInt& v : dd.a)
            if (!v.is_zero()) throw std::logic_error("chains: dd != 0");
    }
}

ChainComplex chains(const FinSimpSet& x) {
    ChainComplex out;
    int top = std::max(x.dim(), 0);
    out.ranks.resize(static_cast<size_t>(top) + 1, 0);
    for (int n = 0; n <= x.dim(); ++n) out.ranks[static_cast<size_t>(n)] = x.count(n);
    out.boundary.resize(static_cast<size_t>(top) + 1);
    out.boundary[0] = IMatrix(0, x.count(0));
    for (int n = 1; n <= x.dim(); ++n) {
        IMatrix d(x.count(n - 1), x.count(n));
        for (int i = 0; i < x.count(n); ++i) {
            int sign = 1;
            for (int j = 0; j <= n; ++j, sign = -sign) {
                const NormalSimplex& f = x.face({n, i}, j);
                if (f.is_degenerate()) continue;
                d.at(f.base.index, i) += BigInt(sign);
            }
        }
        out.boundary[static_cast<size_t>(n)] = std::move(d);
    }
    out.validate();
    return out;
}

std::string HomologyGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (betti > 0) {
        os << "Z";
        if (betti > 1) os << "^" << betti;
        first = false;
    }
    for (long long t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string HomologyProfile::to_string() const {
    std::ostringstream os;
    for (size_t n = 0; n < groups.size(); ++n)
        os << "H_" << n << " = " << groups[n].to_string() << "\n";
    if (groups.empty()) os << "H_* = 0\n";
    return os.str();
}

HomologyProfile homology(const FinSimpSet& x) {
    HomologyProfile out;
    if (x.empty()) return out;
    ChainComplex c = chains(x);
    int top = x.dim();
    std::vector<int> rank_d(static_cast<size_t>(top) + 2, 0);
    std::vector<std::vector<long long>> torsion(static_cast<size_t>(top) + 2);
    for (int n = 1; n <= top; ++n) {
        SmithNormalForm snf = smith_normal_form(c.boundary[static_cast<size_t>(n)], false, false);
        rank_d[static_cast<size_t>(n)] = snf.rank;
        for (const BigInt& d : snf.divisors)
            if (BigInt::compare_abs(d, BigInt(1)) > 0) torsion[static_cast<size_t>(n)].push_back(d.to_longlong());
    }
    out.groups.resize(static_cast<size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        out.groups[static_cast<size_t>(n)].betti =
            c.ranks[static_cast<size_t>(n)] - rank_d[static_cast<size_t>(n)] - rank_d[static_cast<size_t>(n) + 1];
        out.groups[static_cast<size_t>(n)].torsion = torsion[static_cast<size_t>(n) + 1];
        std::sort(out.groups[static_cast<size_t>(n)].torsion.begin(),
                  out.groups[static_cast<size_t>(n)].torsion.end());
    }
    while (!out.groups.empty() && out.groups.back().trivial()) out.groups.pop_back();
    return out;
}

IMatrix chain_map_matrix(const SimpMap& f, int degree) {
    IMatrix m(f.target().count(degree), f.source().count(degree));
    for (int i = 0; i < f.source().count(degree); ++i) {
        NormalSimplex img = f.apply(SimplexId{degree, i});
        if (!img.is_degenerate()) m.at(img.base.index, i) = BigInt(1);
    }
    return m;
}

namespace {

struct KernelData {
    IMatrix basis;      // ranks x k, columns span ker(boundary_n) over Z
    IMatrix vinv;       // inverse of the SNF column transform
    std::vector<int> kernel_cols;
    IMatrix relations;  // k x r: image of boundary_{n+1} in kernel coordinates
};

KernelData kernel_data(const ChainComplex& c, int n) {
    int rank_n = n < static_cast<int>(c.ranks.size()) ? c.ranks[static_cast<size_t>(n)] : 0;
    IMatrix d = n < static_cast<int>(c.boundary.size()) ? c.boundary[static_cast<size_t>(n)] : IMatrix(0, rank_n);
    SmithNormalForm snf = smith_normal_form(std::move(d), false, true);
    KernelData out;
    out.vinv = std::move(*snf.vinv);
    for (int cidx = 0; cidx < rank_n; ++cidx) {
        bool zero = cidx >= snf.rank;
        if (zero) out.kernel_cols.push_back(cidx);
    }
    out.basis = IMatrix(rank_n, static_cast<int>(out.kernel_cols.size()));
    for (int r = 0; r < rank_n; ++r)
        for (size_t j = 0; j < out.kernel_cols.size(); ++j)
            out.basis.at(r, static_cast<int>(j)) = snf.v->at(r, out.kernel_cols[j]);
    // relations: boundary_{n+1} columns in kernel coordinates
    IMatrix next = (n + 1) < static_cast<int>(c.boundary.size()) ? c.boundary[static_cast<size_t>(n) + 1]
                                                                 : IMatrix(rank_n, 0);
    IMatrix coords = multiply(out.vinv, next);
    for (int r = 0; r < snf.rank; ++r)
        for (int cc = 0; cc < coords.cols; ++cc)
            if (!coords.at(r, cc).is_zero())
                throw std::logic_error("kernel_data: boundary image escapes the kernel");
    out.relations = IMatrix(static_cast<int>(out.kernel_cols.size()), coords.cols);
    for (size_t j = 0; j < out.kernel_cols.size(); ++j)
        for (int cc = 0; cc < coords.cols; ++cc)
            out.relations.at(static_cast<int>(j), cc) = coords.at(out.kernel_cols[j], cc);
    return out;
}

HomologyGroup group_of_relations(const IMatrix& relations) {
    SmithNormalForm snf = smith_normal_form(relations, false, false);
    HomologyGroup g;
    g.betti = relations.rows - snf.rank;
    for (const BigInt& d : snf.divisors)
        if (BigInt::compare_abs(d, BigInt(1)) > 0) g.torsion.push_back(d.to_longlong());
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

}  // namespace

InducedHomologyMap homology_of_map(const SimpMap& f) {
    require_valid(f, "homology_of_map");
    InducedHomologyMap out;
    ChainComplex cx = chains(f.source());
    ChainComplex cy = chains(f.target());
    int top = std::max(f.source().dim(), f.target().dim());
    out.all_iso = true;
    for (int n = 0; n <= top; ++n) {
        KernelData kx = kernel_data(cx, n);
        KernelData ky = kernel_data(cy, n);
        HomologyGroup gx = group_of_relations(kx.relations);
        HomologyGroup gy = group_of_relations(ky.relations);
        out.source_profile.groups.push_back(gx);
        out.target_profile.groups.push_back(gy);

        IMatrix mapped = multiply(chain_map_matrix(f, n), kx.basis);
        IMatrix coords = multiply(ky.vinv, mapped);
        // mapped kernel vectors stay in the kernel (chain map property)
        IMatrix z(static_cast<int>(ky.kernel_cols.size()), coords.cols);
        {
            std::vector<char> is_kernel_row(static_cast<size_t>(coords.rows), 0);
            for (size_t j = 0; j < ky.kernel_cols.size(); ++j)
                is_kernel_row[static_cast<size_t>(ky.kernel_cols[j])] = 1;
            for (int r = 0; r < coords.rows; ++r) {
                if (is_kernel_row[static_cast<size_t>(r)]) continue;
                for (int c = 0; c < coords.cols; ++c)
                    if (!coords.at(r, c).is_zero())
                        throw std::logic_error("homology_of_map: image escapes the kernel");
            }
            for (size_t j = 0; j < ky.kernel_cols.size(); ++j)
                for (int c = 0; c < coords.cols; ++c)
                    z.at(static_cast<int>(j), c) = coords.at(ky.kernel_cols[j], c);
        }
        // Isomorphism test: equal finitely generated groups plus surjectivity;
        // a surjection between isomorphic finitely generated abelian groups
        // is an isomorphism.
        bool iso = gx == gy;
        if (iso) {
            IMatrix stacked(z.rows, z.cols + ky.relations.cols);
            for (int r = 0; r < z.rows; ++r) {
                for (int c = 0; c < z.cols; ++c) stacked.at(r, c) = z.at(r, c);
                for (int c = 0; c < ky.relations.cols; ++c)
                    stacked.at(r, z.cols + c) = ky.relations.at(r, c);
            }
            SmithNormalForm snf = smith_normal_form(std::move(stacked), false, false);
            iso = snf.rank == z.rows;
            for (const BigInt& d : snf.divisors)
                if (BigInt::compare_abs(d, BigInt(1)) != 0) iso = false;
        }
        out.matrices.push_back(std::move(z));
        out.iso.push_back(iso);
        if (!iso) out.all_iso = false;
    }
    while (!out.source_profile.groups.empty() && out.source_profile.groups.back().trivial())
        out.source_profile.groups.pop_back();
    while (!out.target_profile.groups.empty() && out.target_profile.groups.back().trivial())
        out.target_profile.groups.pop_back();
    return out;
}

}  // namespace nsset
