#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsset {

// A morphism [m] -> [n] of the simplex category: a monotone map stored as
// its image list (i0, ..., im).  Operators act on simplices on the right.
class Operator {
public:
    Operator(int target_dim, std::vector<int> images);

    static Operator identity(int n);
    // delta_j : [n-1] -> [n], the face operator omitting j.
    static Operator face(int j, int n);
    // sigma_i : [n] -> [n-1], the degeneracy operator repeating i.
    static Operator degeneracy(int i, int n);
    // eps_j : [0] -> [n], the vertex operator picking j.
    static Operator vertex(int j, int n);

    int source_dim() const { return static_cast<int>(images_.size()) - 1; }
    int target_dim() const { return target_dim_; }
    int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    bool is_injective() const;   // strictly increasing images
    bool is_surjective() const;  // hits every element of [target_dim]

    // Smallest section of a surjective operator: each output index maps to
    // its least preimage.
    Operator minimal_section() const;

    std::string to_string() const;  // "m n : i0 i1 ... im"

    friend bool operator==(const Operator& a, const Operator& b) {
        return a.target_dim_ == b.target_dim_ && a.images_ == b.images_;
    }
    friend bool operator<(const Operator& a, const Operator& b);

private:
    int target_dim_;
    std::vector<int> images_;
};

enum class OperatorKind { face, degeneracy, vertex };

// The standard elementary operators; throws std::out_of_range for a bad index.
Operator elementary(OperatorKind kind, int index, int dim);

// Pointwise composite outer . inner; requires inner.target_dim == outer.source_dim.
Operator compose(const Operator& outer, const Operator& inner);

// Unique factorization a = mono . epi with epi surjective and mono injective.
struct EpiMonoFactorization {
    Operator epi;
    Operator mono;
};
EpiMonoFactorization epi_mono_factor(const Operator& a);

Operator parse_operator(const std::string& text);

// Enumerations, in lexicographic order of image lists.
std::vector<Operator> all_operators(int m, int n);
std::vector<Operator> all_surjections(int m, int n);
std::vector<Operator> all_injections(int m, int n);
std::vector<Operator> all_sections(const Operator& epi);

}  // namespace nsset
