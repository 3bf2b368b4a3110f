#pragma once

// Defining relations of the singular braid monoid and a seeded random
// rewriter. Pairs produced by rewriting are equal by construction, which is
// how the fuzz suites and the benchmark know their ground truth.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sbraid/singular.hpp"

namespace sbraid {

struct Relation {
  std::string family;  // "free", "braid", "far", "tau-omega", "tau-sigma", "tau-xi", ...
  SingularWord lhs;
  SingularWord rhs;
};

/// The relations over σ_i^{±1} and τ_1:
///   σ_i σ_i⁻¹ = 1, braid and far commutation,
///   σ_2 σ_1² σ_2 τ_1 = τ_1 σ_2 σ_1² σ_2,
///   σ_i τ_1 = τ_1 σ_i (i ≠ 2),
///   ξ τ_1 ξ τ_1 = τ_1 ξ τ_1 ξ with ξ = σ_2 σ_3 σ_1 σ_2 (n ≥ 4).
std::vector<Relation> presentation_relations(int strands);

/// Consequences of those relations used to move the other τ_i:
/// σ_i^{±1} τ_i = τ_i σ_i^{±1}, far commutation of τ_i with σ_j and τ_j,
/// and σ_i σ_j τ_i = τ_j σ_i σ_j for |i − j| = 1.
std::vector<Relation> singular_relations(int strands);

struct RewriteOptions {
  /// Only τ_1 in generated words, and only the presentation relations.
  bool tau_one_only = false;
  /// Probability of planting a relation side into a generated word.
  double plant_probability = 0.3;
};

class RelationRewriter {
 public:
  RelationRewriter(int strands, std::uint64_t seed, RewriteOptions options = {});

  int strands() const { return strands_; }
  std::mt19937_64& engine() { return rng_; }

  /// Uniform random word with exactly `singular` τ letters among `length`.
  SingularWord random_word(int length, int singular);
  /// random_word plus, sometimes, planted relation sides.
  SingularWord random_word_with_plants(int length, int singular);
  SingularWord random_braid(int length);

  /// Applies `moves` random relation moves; the result equals w in SB_n.
  SingularWord rewrite(const SingularWord& w, int moves);
  /// One random move; false if the chosen kind had no applicable site.
  bool try_move(SingularWord& w);

  /// Inserts σ_i^{±2} somewhere: never equal to w.
  SingularWord insert_pure_square(const SingularWord& w);
  /// Replaces a τ letter by c τ c⁻¹ for a random pure generator c. Equal to
  /// w exactly when c commutes with that τ in place.
  SingularWord conjugate_tau(const SingularWord& w);

 private:
  int uniform(int lo, int hi);
  SingularLetter random_sigma();

  int strands_;
  RewriteOptions options_;
  std::mt19937_64 rng_;
  std::vector<Relation> relations_;
};

}  // namespace sbraid
