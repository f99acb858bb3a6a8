#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nsset/simpmap.hpp"

namespace nsset {

// A finite poset: elements 0..size-1 with a reflexive, antisymmetric,
// transitive relation stored as a boolean matrix.
class FinPoset {
public:
    FinPoset() = default;
    explicit FinPoset(int size);
    FinPoset(int size, const std::vector<std::pair<int, int>>& strict_pairs);

    int size() const { return size_; }
    bool leq(int a, int b) const { return matrix_[static_cast<size_t>(a)][static_cast<size_t>(b)] != 0; }
    void set_leq(int a, int b);

    // Strict pairs (a, b) with a <= b, a != b, sorted lexicographically.
    std::vector<std::pair<int, int>> pairs() const;
    // Covering pairs only (transitive reduction).
    std::vector<std::pair<int, int>> hasse_pairs() const;

    void validate() const;  // throws std::logic_error when not a poset

    static FinPoset chain(int n);      // [n] = {0 < 1 < ... < n}
    static FinPoset antichain(int n);  // n incomparable elements

    friend bool operator==(const FinPoset& a, const FinPoset& b) {
        return a.size_ == b.size_ && a.matrix_ == b.matrix_;
    }

private:
    int size_ = 0;
    std::vector<std::vector<char>> matrix_;
};

struct MonotoneMap {
    FinPoset source;
    FinPoset target;
    std::vector<int> images;

    bool validate() const;
    friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
        return a.source == b.source && a.target == b.target && a.images == b.images;
    }
};

MonotoneMap identity_monotone(const FinPoset& p);
MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner);

bool is_sieve(const FinPoset& p, const std::vector<char>& subset);
bool is_cosieve(const FinPoset& p, const std::vector<char>& subset);

// P x [1], element (p, e) stored at index e * P.size() + p.
FinPoset product_with_chain1(const FinPoset& p);

// The nerve: nondegenerate n-simplices are strictly increasing chains of
// n+1 elements, ordered lexicographically; faces drop a chain entry.
struct NerveResult {
    Complex complex;
    std::vector<std::vector<std::vector<int>>> chains;  // [dim][index] -> element list

    const std::vector<int>& chain_of(SimplexId s) const {
        return chains[static_cast<size_t>(s.dim)][static_cast<size_t>(s.index)];
    }
    SimplexId index_of(const std::vector<int>& chain) const;
    // Normal form in the nerve of a weakly increasing element sequence.
    NormalSimplex normal_form(const std::vector<int>& weak_chain) const;

private:
    friend NerveResult nerve(const FinPoset& p);
    std::map<std::vector<int>, SimplexId> index_;
};

NerveResult nerve(const FinPoset& p);
SimpMap nerve_map(const MonotoneMap& g, const NerveResult& np, const NerveResult& nq);

// The face poset X#: elements are the nondegenerate simplices in canonical
// order (dimension-major), y <= x iff y is a face of x.
struct SharpResult {
    FinPoset poset;
    std::vector<SimplexId> elements;
    Complex ambient;

    int index_of(SimplexId x) const;
};

SharpResult sharp(Complex x);
MonotoneMap sharp_map(const SimpMap& f, const SharpResult& sx, const SharpResult& sy);

// Poset reflection of the categorification: vertices under edge
// reachability with strongly connected classes collapsed.  Class
// representatives are the minimal vertex indices, and classes are ordered
// by representative.
struct PcResult {
    FinPoset poset;
    std::vector<int> class_of_vertex;
    std::vector<int> representative;
};

PcResult pc(const FinSimpSet& x);

std::optional<MonotoneMap> poset_iso(const FinPoset& p, const FinPoset& q);

}  // namespace nsset
