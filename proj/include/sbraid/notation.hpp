#pragma once

// Token syntax for braid and singular braid words:
//
//   word := term*            terms separated by whitespace or '.'
//   term := ('s' | 't') index ('^' integer)?  |  'e'
//
// "s1^-2" is two letters σ1⁻¹; 'e' is the empty word. Unicode input such as
// "σ₁⁻¹ τ₂" is folded to the ASCII form before parsing.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sbraid/braid.hpp"
#include "sbraid/error.hpp"
#include "sbraid/singular.hpp"

namespace sbraid {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ParsedTerm {
  char kind = 's';  // 's' or 't'
  int index = 1;
  int exponent = 1;
  std::size_t offset = 0;  // byte offset in the original text

  /// A singular term with non-positive exponent. It parses, but no command
  /// that needs a singular word accepts it.
  bool flagged() const { return kind == 't' && exponent <= 0; }
};

/// Folds σ, τ, subscript digits and superscript exponents to ASCII.
std::string normalize_unicode(std::string_view text);

std::vector<ParsedTerm> parse_terms(std::string_view text, int strands);
/// Throws UnsupportedInput when a flagged term is present.
SingularWord to_singular_word(const std::vector<ParsedTerm>& terms, int strands);
SingularWord parse_word(std::string_view text, int strands);
/// Throws UnsupportedInput when a singular term is present.
BraidWord parse_braid_word(std::string_view text, int strands);
/// Symmetric group image of the terms, flagged ones included.
Permutation permutation_of_terms(const std::vector<ParsedTerm>& terms,
                                 int strands);

/// Canonical token form: runs of equal letters collapse to powers,
/// "s2 s1^2 s2 t1". The empty word formats as "".
std::string format_word(const SingularWord& w);
std::string format_word(const BraidWord& w);

}  // namespace sbraid
