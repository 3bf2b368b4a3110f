#pragma once

// Singular braid words, the singular generators X_{k,j} of the pure singular
// group, and the alternating Britton form β_0 X_{L_1} β_1 ⋯ X_{L_s} β_s.

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "sbraid/braid.hpp"

namespace sbraid {

/// σ_index^sign or τ_index. Singular letters always carry exponent +1.
struct SingularLetter {
  enum class Kind : std::uint8_t { sigma, tau };

  Kind kind = Kind::sigma;
  int index = 1;
  int sign = 1;

  static SingularLetter sigma(int index, int sign = 1) {
    return {Kind::sigma, index, sign};
  }
  static SingularLetter tau(int index) { return {Kind::tau, index, 1}; }

  bool is_tau() const { return kind == Kind::tau; }

  friend bool operator==(const SingularLetter&,
                         const SingularLetter&) = default;
};

class SingularWord {
 public:
  explicit SingularWord(int strands);
  SingularWord(int strands, std::vector<SingularLetter> letters);
  /// Embeds a braid word.
  explicit SingularWord(const BraidWord& w);

  int strands() const { return strands_; }
  const std::vector<SingularLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// Number of τ letters.
  int degree() const;

  void push_back(SingularLetter letter);
  void append(const SingularWord& other);
  void append(const BraidWord& other);

  /// The σ-only word; throws UnsupportedInput if a τ is present.
  BraidWord to_braid() const;

  friend SingularWord operator*(const SingularWord& lhs,
                                const SingularWord& rhs);
  friend bool operator==(const SingularWord&, const SingularWord&) = default;

 private:
  int strands_;
  std::vector<SingularLetter> letters_;
};

SingularWord operator*(const SingularWord& lhs, const BraidWord& rhs);
SingularWord operator*(const BraidWord& lhs, const SingularWord& rhs);

/// The stable letter X_{k,j}, 1 ≤ k ≤ j ≤ n−1, whose singular point joins
/// strands k and j+1.
struct XLabel {
  int k = 1;
  int j = 1;

  static XLabel from_strands(int a, int b);
  int low_strand() const { return k; }
  int high_strand() const { return j + 1; }
  /// True when the two labels have a strand in common.
  bool shares_strand(const XLabel& other) const;
  std::string to_string() const;

  friend bool operator==(const XLabel&, const XLabel&) = default;
  friend auto operator<=>(const XLabel&, const XLabel&) = default;
};

struct BrittonForm {
  int strands = 2;
  std::vector<BraidWord> segments;  // letters.size() + 1 pure braid words
  std::vector<XLabel> letters;

  explicit BrittonForm(int n) : strands(n), segments{BraidWord(n)} {}
  BrittonForm(int n, std::vector<BraidWord> segs, std::vector<XLabel> labels);

  int degree() const { return static_cast<int>(letters.size()); }
  /// "β0 ; X[k,j] ; β1 ; …"
  std::string serialize() const;
};

/// Image in the symmetric group, τ_k contributing the transposition s_k.
Permutation perm_image(const SingularWord& w);

/// Label of a singular point between positions k and k+1 after a prefix
/// whose permutation is prefix_perm.
XLabel label_of_letter(const Permutation& prefix_perm, int k);

// Generator words.
SingularWord x_expansion(int strands, const XLabel& label);

/// Named generators accepted by generator_expansion: a(k,j), X(k,j),
/// M(i,j), Delta, c.
struct GeneratorName {
  enum class Kind { a, X, M, Delta, c };
  Kind kind;
  int first = 0;
  int second = 0;

  /// Parses "a(1,2)", "X(1,1)", "M(2,3)", "Delta", "c".
  static GeneratorName parse(const std::string& text);
};

SingularWord generator_expansion(int strands, const GeneratorName& name);

struct SingularFactor {
  BraidWord before;
  XLabel label;
  BraidWord after;
};

/// Writes u·τ_k·v⁻¹ (required pure) as before·X_label·after with both braid
/// words pure. The result is certified by comparing η images.
SingularFactor factor_singular(const BraidWord& u, int k, const BraidWord& v);

BrittonForm to_britton_form(const SingularWord& w);
SingularWord expand_britton(const BrittonForm& b);
std::map<XLabel, int> degree_vector(const BrittonForm& b);

}  // namespace sbraid
