#pragma once

#include <cstdint>
#include <optional>

#include "nsset/colimit.hpp"
#include "nsset/poset.hpp"

namespace nsset {

// Deterministic generation of small test complexes: random simplices are
// attached along random validated boundary maps.  Bitwise reproducible per
// seed.
struct CorpusSpec {
    uint64_t seed = 0;
    int max_dim = 3;    // <= 3
    int max_cells = 12; // <= 12
    int count = 1;
};

class SplitMix {
public:
    explicit SplitMix(uint64_t seed) : state_(seed) {}
    uint64_t next();
    // uniform in [0, n)
    int below(int n);

private:
    uint64_t state_;
};

Complex corpus_complex(uint64_t seed, int max_dim = 3, int max_cells = 12);
std::vector<Complex> corpus_complexes(const CorpusSpec& spec);

Subcomplex random_subcomplex(SplitMix& rng, Complex x);
// A (possibly empty) eden: the eden closure of a random vertex set.
Subcomplex random_eden(SplitMix& rng, Complex x);
// A nonempty eden, falling back to the whole complex.
Subcomplex random_nonempty_eden(SplitMix& rng, Complex x);

// A random simplicial map assembled dimension by dimension; falls back to
// a constant map when the random walk dead-ends.
SimpMap random_map(SplitMix& rng, Complex source, Complex target);

FinPoset random_poset(SplitMix& rng, int max_size);

}  // namespace nsset
