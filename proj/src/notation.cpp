#include "sbraid/notation.hpp"

#include <cctype>
#include <limits>
#include <utility>

namespace sbraid {

namespace {

struct Folded {
  std::string text;
  std::vector<std::size_t> origin;  // byte offset in the input per char
};

Folded fold(std::string_view in) {
  static const std::pair<std::string_view, char> kSubscripts[] = {
      {"₀", '0'}, {"₁", '1'}, {"₂", '2'}, {"₃", '3'}, {"₄", '4'},
      {"₅", '5'}, {"₆", '6'}, {"₇", '7'}, {"₈", '8'}, {"₉", '9'}};
  static const std::pair<std::string_view, char> kSuperscripts[] = {
      {"⁰", '0'}, {"¹", '1'}, {"²", '2'}, {"³", '3'}, {"⁴", '4'},
      {"⁵", '5'}, {"⁶", '6'}, {"⁷", '7'}, {"⁸", '8'}, {"⁹", '9'},
      {"⁻", '-'}};
  Folded out;
  bool in_superscript = false;
  std::size_t i = 0;
  auto emit = [&](char c, std::size_t at) {
    out.text.push_back(c);
    out.origin.push_back(at);
  };
  while (i < in.size()) {
    const std::string_view rest = in.substr(i);
    bool matched = false;
    if (rest.starts_with("σ") || rest.starts_with("τ")) {
      emit(rest.starts_with("σ") ? 's' : 't', i);
      i += std::string_view("σ").size();
      in_superscript = false;
      continue;
    }
    for (const auto& [glyph, c] : kSubscripts) {
      if (rest.starts_with(glyph)) {
        emit(c, i);
        i += glyph.size();
        in_superscript = false;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (const auto& [glyph, c] : kSuperscripts) {
      if (rest.starts_with(glyph)) {
        if (!in_superscript) emit('^', i);
        emit(c, i);
        i += glyph.size();
        in_superscript = true;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    emit(in[i], i);
    ++i;
    in_superscript = false;
  }
  return out;
}

bool is_separator(char c) {
  return c == '.' || std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

void push_run(std::string& out, const std::string& token, int count) {
  if (!out.empty()) out += ' ';
  out += token;
  if (count != 1) out += "^" + std::to_string(count);
}

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& what)
    : Error("syntax error at offset " + std::to_string(position) + ": " + what),
      position_(position) {}

std::string normalize_unicode(std::string_view text) { return fold(text).text; }

std::vector<ParsedTerm> parse_terms(std::string_view text, int strands) {
  const Folded folded = fold(text);
  const std::string& s = folded.text;
  auto origin = [&](std::size_t at) {
    return at < folded.origin.size() ? folded.origin[at] : text.size();
  };
  auto read_int = [&](std::size_t& at, long limit) {
    const std::size_t start = at;
    long value = 0;
    while (at < s.size() && is_digit(s[at])) {
      value = value * 10 + (s[at] - '0');
      if (value > limit) throw ParseError(origin(start), "number too large");
      ++at;
    }
    if (at == start) throw ParseError(origin(start), "expected digits");
    return value;
  };

  std::vector<ParsedTerm> terms;
  std::size_t at = 0;
  while (at < s.size()) {
    const char c = s[at];
    if (is_separator(c)) {
      ++at;
      continue;
    }
    if (c == 'e') {
      ++at;
      continue;
    }
    if (c != 's' && c != 't') {
      throw ParseError(origin(at), std::string("unexpected character '") + c +
                                       "', expected 's', 't' or 'e'");
    }
    ParsedTerm term;
    term.kind = c;
    term.offset = origin(at);
    ++at;
    const int index = static_cast<int>(read_int(at, 1'000'000));
    if (index < 1 || index > strands - 1) {
      throw IndexOutOfRange("generator index " + std::to_string(index) +
                            " at offset " + std::to_string(term.offset) +
                            " outside [1, " + std::to_string(strands - 1) +
                            "]");
    }
    term.index = index;
    if (at < s.size() && s[at] == '^') {
      ++at;
      int sign = 1;
      if (at < s.size() && (s[at] == '-' || s[at] == '+')) {
        sign = s[at] == '-' ? -1 : 1;
        ++at;
      }
      term.exponent = sign * static_cast<int>(read_int(at, 1'000'000));
    }
    if (at < s.size() && !is_separator(s[at]) && s[at] != 's' &&
        s[at] != 't' && s[at] != 'e') {
      throw ParseError(origin(at), std::string("unexpected character '") +
                                       s[at] + "' after term");
    }
    terms.push_back(term);
  }
  return terms;
}

SingularWord to_singular_word(const std::vector<ParsedTerm>& terms,
                              int strands) {
  SingularWord w(strands);
  for (const auto& t : terms) {
    if (t.flagged()) {
      throw UnsupportedInput("singular letter t" + std::to_string(t.index) +
                             " with exponent " + std::to_string(t.exponent) +
                             " at offset " + std::to_string(t.offset) +
                             ": only positive singular exponents are supported");
    }
    const int count = t.exponent < 0 ? -t.exponent : t.exponent;
    for (int r = 0; r < count; ++r) {
      w.push_back(t.kind == 't'
                      ? SingularLetter::tau(t.index)
                      : SingularLetter::sigma(t.index, t.exponent < 0 ? -1 : 1));
    }
  }
  return w;
}

SingularWord parse_word(std::string_view text, int strands) {
  return to_singular_word(parse_terms(text, strands), strands);
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  const auto terms = parse_terms(text, strands);
  for (const auto& t : terms) {
    if (t.kind == 't') {
      throw UnsupportedInput("singular letter at offset " +
                             std::to_string(t.offset) +
                             " in a word that must be a braid");
    }
  }
  return to_singular_word(terms, strands).to_braid();
}

Permutation permutation_of_terms(const std::vector<ParsedTerm>& terms,
                                 int strands) {
  Permutation p(strands);
  for (const auto& t : terms) {
    if (t.exponent % 2 != 0) {
      p = p.then(Permutation::transposition(strands, t.index));
    }
  }
  return p;
}

std::string format_word(const SingularWord& w) {
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t end = i;
    while (end < ls.size() && ls[end] == ls[i]) ++end;
    const int count = static_cast<int>(end - i);
    const std::string token =
        std::string(ls[i].is_tau() ? "t" : "s") + std::to_string(ls[i].index);
    push_run(out, token, ls[i].sign < 0 ? -count : count);
    i = end;
  }
  return out;
}

std::string format_word(const BraidWord& w) {
  return format_word(SingularWord(w));
}

}  // namespace sbraid
