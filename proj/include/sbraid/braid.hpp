#pragma once

// Braid group arithmetic: words over the Artin generators, their images in
// the symmetric group, the left-greedy Garside normal form and the Schreier
// transversal of the pure braid subgroup.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sbraid {

inline constexpr int kMaxStrands = 16;

/// Bijection of {1..n}. The image of p is the end position of the strand
/// that starts at position p. Words act left to right, so the permutation of
/// uv is "u then v".
class Permutation {
 public:
  Permutation() : Permutation(1) {}
  explicit Permutation(int n);

  /// Builds from 1-based images; throws unless they form a bijection.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }
  /// The transposition of positions i and i+1.
  static Permutation transposition(int n, int i);
  /// The permutation of the half twist Δ_n, p ↦ n+1-p.
  static Permutation reversal(int n);

  int size() const { return n_; }
  /// 1-based image of the 1-based position p.
  int operator()(int p) const { return img_[p - 1] + 1; }

  /// Apply *this first, then next.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// "312" style for n < 10, comma separated otherwise.
  std::string one_line() const;
  /// "1↦3 2↦1 3↦2".
  std::string mapsto_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend struct PermAccess;
  std::uint8_t n_ = 1;
  std::array<std::uint8_t, kMaxStrands> img_{};  // 0-based images, rest zero
};

/// σ_index^sign.
struct BraidLetter {
  int index = 1;
  int sign = 1;

  BraidLetter inverse() const { return {index, -sign}; }
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
  friend auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<BraidLetter> letters);
  /// Signed indices: {1, -2} is σ1 σ2⁻¹.
  BraidWord(int strands, std::initializer_list<int> signed_indices);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(BraidLetter letter);
  void append(const BraidWord& other);
  BraidWord inverse() const;

  friend BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

/// Δ^inf · A_1 ⋯ A_ℓ with every A_i a proper non-trivial permutation braid,
/// stored as its permutation, and every adjacent pair left-weighted.
struct GarsideNormalForm {
  int strands = 2;
  long inf = 0;
  std::vector<Permutation> factors;

  /// "Δ^k | p_1 | p_2 | …" with the factors in one-line notation.
  std::string key() const;

  friend bool operator==(const GarsideNormalForm&,
                         const GarsideNormalForm&) = default;
  friend auto operator<=>(const GarsideNormalForm&,
                          const GarsideNormalForm&) = default;
};

BraidWord free_reduce(const BraidWord& w);
Permutation permutation_of(const BraidWord& w);

GarsideNormalForm normal_form(const BraidWord& w);
/// The identity element's normal form.
GarsideNormalForm identity_form(int strands);
/// Normal form of the product x·y.
GarsideNormalForm multiply(const GarsideNormalForm& x,
                           const GarsideNormalForm& y);
/// Right multiplication by a single letter, in place.
void multiply_letter(GarsideNormalForm& x, BraidLetter letter);
/// Positive word realizing the normal form (Δ^inf is expanded; a negative
/// power yields inverse letters).
BraidWord to_word(const GarsideNormalForm& nf);

/// True iff the two words are the same element of B_n.
bool braid_equal(const BraidWord& u, const BraidWord& v);

/// Left-weightedness of a pair of permutation braids (S(b) ⊆ F(a)).
bool left_weighted(const Permutation& a, const Permutation& b);

/// A positive reduced word for the permutation braid of p.
BraidWord permutation_braid(const Permutation& p);

/// Schreier representative: the product M_{n-1,j_{n-1}} ⋯ M_{1,j_1} of
/// blocks M_{i,j} = σ_i σ_{i+1} ⋯ σ_j (empty block when j = i-1) whose
/// permutation is p.
BraidWord transversal_rep(const Permutation& p);

// Named braid words.
BraidWord word_M(int strands, int i, int j);
BraidWord word_a(int strands, int k, int j);
BraidWord word_delta(int strands);
BraidWord word_center(int strands);

/// Operation counts collected per thread; the bench reads them.
struct OpCounters {
  std::uint64_t normal_forms = 0;
  std::uint64_t eta_expansions = 0;
};
OpCounters& op_counters();

}  // namespace sbraid
