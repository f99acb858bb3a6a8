#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsset/bigint.hpp"
#include "nsset/simpmap.hpp"

namespace nsset {

struct IMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> a;

    IMatrix() = default;
    IMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}
    static IMatrix identity(int n);

    BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    const BigInt& at(int r, int c) const {
        return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
    }
    friend bool operator==(const IMatrix& x, const IMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

IMatrix multiply(const IMatrix& x, const IMatrix& y);

// u * m * v = d with d diagonal, nonnegative, each entry dividing the next,
// and u, v unimodular (witnessed by explicit integer inverses).
struct SmithNormalForm {
    IMatrix d;
    std::optional<IMatrix> u, uinv;
    std::optional<IMatrix> v, vinv;
    int rank = 0;
    std::vector<BigInt> divisors;  // nonzero diagonal entries
};

SmithNormalForm smith_normal_form(IMatrix m, bool want_row_ops = true, bool want_col_ops = true);

// Normalized integer chains: one generator per nondegenerate simplex,
// boundary with alternating signs, degenerate faces dropped.
struct ChainComplex {
    std::vector<int> ranks;
    std::vector<IMatrix> boundary;  // boundary[n] : C_n -> C_{n-1}; boundary[0] has 0 rows

    void validate() const;  // dd = 0
};

ChainComplex chains(const FinSimpSet& x);

struct HomologyGroup {
    long long betti = 0;
    std::vector<long long> torsion;  // sorted, each >= 2, each dividing the next

    friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
        return a.betti == b.betti && a.torsion == b.torsion;
    }
    bool trivial() const { return betti == 0 && torsion.empty(); }
    std::string to_string() const;
};

struct HomologyProfile {
    std::vector<HomologyGroup> groups;  // trailing trivial groups trimmed

    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
        return a.groups == b.groups;
    }
    std::string to_string() const;
};

HomologyProfile homology(const FinSimpSet& x);

// The chain map of f on homology, expressed in kernel-lattice bases, with
// a per-degree isomorphism verdict.
struct InducedHomologyMap {
    std::vector<IMatrix> matrices;  // degree n: coordinates of mapped kernel basis
    std::vector<bool> iso;
    bool all_iso = false;
    HomologyProfile source_profile;
    HomologyProfile target_profile;
};

InducedHomologyMap homology_of_map(const SimpMap& f);

IMatrix chain_map_matrix(const SimpMap& f, int degree);

}  // namespace nsset
