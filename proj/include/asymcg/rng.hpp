#pragma once

#include <cstdint>
#include <random>

#include "asymcg/hom_class.hpp"
#include "asymcg/subtree.hpp"
#include "asymcg/tree_pair.hpp"
#include "asymcg/word.hpp"

namespace asymcg {

/// Deterministic seeded source. Bounded draws use modulo reduction on
/// mt19937_64 output so sequences are identical across platforms (the
/// standard distributions are implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::size_t>(hi - lo + 1)));
    }
    bool coin() { return (next() & 1) != 0; }

  private:
    std::mt19937_64 gen_;
};

FiniteSubtree random_subtree(Rng& rng, std::size_t vertices);

EdgeAddress random_edge(Rng& rng, std::size_t max_depth);

/// Reduced random element of V with trees of at most `max_vertices` vertices.
TreePairElement random_tree_pair(Rng& rng, std::size_t max_vertices);

/// Reduced random circular element (leaf bijection a rotation).
TreePairElement random_circular(Rng& rng, std::size_t max_vertices);

HomClass random_hom_class(Rng& rng, std::size_t max_terms, long long coeff_bound,
                          std::size_t max_depth);

struct WordProfile {
    std::size_t max_tokens = 8;
    long long max_exponent = 3;
    std::size_t max_depth = 2; // of sampled edge addresses
    bool twists_only = false;  // restrict to the trivial-V-image alphabet
};

Word random_word(Rng& rng, const WordProfile& profile);

} // namespace asymcg
