#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nsset/delta.hpp"

namespace nsset {

// Identifies a nondegenerate simplex inside one FinSimpSet: dimension plus
// position in that dimension's canonical ordering.
struct SimplexId {
    int dim = 0;
    int index = 0;

    friend bool operator==(const SimplexId& a, const SimplexId& b) {
        return a.dim == b.dim && a.index == b.index;
    }
    friend bool operator<(const SimplexId& a, const SimplexId& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.index < b.index;
    }
};

// Eilenberg-Zilber normal form of an arbitrary simplex: nondegenerate base
// plus a surjective degeneracy operator [ambient] -> [base.dim].
struct NormalSimplex {
    SimplexId base;
    Operator degeneracy;

    int degree() const { return degeneracy.source_dim(); }
    bool is_degenerate() const { return !degeneracy.is_identity(); }

    friend bool operator==(const NormalSimplex& a, const NormalSimplex& b) {
        return a.base == b.base && a.degeneracy == b.degeneracy;
    }
    friend bool operator<(const NormalSimplex& a, const NormalSimplex& b) {
        if (!(a.base == b.base)) return a.base < b.base;
        return a.degeneracy < b.degeneracy;
    }
};

NormalSimplex nondegenerate(SimplexId x);

// A finite simplicial set presented by its nondegenerate simplices and a
// face table in normal form.  Immutable after construction.
class FinSimpSet {
public:
    FinSimpSet() = default;

    int dim() const { return static_cast<int>(counts_.size()) - 1; }
    int count(int n) const;
    const std::vector<int>& counts() const { return counts_; }
    int total_nondegenerate() const;
    bool empty() const { return counts_.empty(); }

    const NormalSimplex& face(SimplexId x, int j) const;

    // Right action s . a in normal form.
    NormalSimplex act(const NormalSimplex& s, const Operator& a) const;
    NormalSimplex act(SimplexId x, const Operator& a) const;

    SimplexId vertex_of(SimplexId x, int t) const;

    bool is_embedded(SimplexId x) const;
    bool is_nonsingular() const;

    // All degree-n simplices as normal forms, in canonical order
    // (base dim, base index, degeneracy).
    std::vector<NormalSimplex> simplices_of_degree(int n) const;

    const std::string& label(SimplexId x) const;
    void set_label(SimplexId x, std::string text);

    // Structural checks: well-formed face entries plus the simplicial
    // identities.  Throws std::logic_error on failure.
    void validate() const;

private:
    friend class SimpSetBuilder;
    std::vector<int> counts_;
    // face_table_[n][i][j] for n >= 1; dimension 0 has no entry.
    std::vector<std::vector<std::vector<NormalSimplex>>> face_table_;
    std::vector<std::vector<std::string>> labels_;
};

using Complex = std::shared_ptr<const FinSimpSet>;

class SimpSetBuilder {
public:
    SimplexId add_vertex(std::string label = "");
    SimplexId add_simplex(int dim, std::vector<NormalSimplex> faces, std::string label = "");
    int count(int n) const;
    // Builds the complex; structural validation is optional because hot
    // paths (pushout renormalization) construct tables that are consistent
    // by construction and revalidated in tests.
    Complex build(bool validate = true);

private:
    FinSimpSet set_;
};

bool structural_equal(const FinSimpSet& a, const FinSimpSet& b);

Complex standard_simplex(int n);
Complex standard_boundary(int n);
Complex standard_horn(int n, int k);
Complex empty_complex();

enum class StandardKind { simplex, boundary, horn };
Complex standard(StandardKind kind, int n, int k = -1);

std::vector<int> f_vector(const FinSimpSet& x);
long long euler_characteristic(const FinSimpSet& x);

// Nondegenerate m-faces of the standard n-simplex are strictly increasing
// subsets of [n] in lexicographic order; these convert between the subset
// (as a face operator's image list) and its canonical index.
int subset_rank(int n, const std::vector<int>& subset);
const std::vector<std::vector<int>>& subsets_of_size(int n, int size);

}  // namespace nsset
