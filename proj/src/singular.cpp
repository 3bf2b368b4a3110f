#include "sbraid/singular.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sbraid/error.hpp"
#include "sbraid/group_ring.hpp"
#include "sbraid/notation.hpp"

namespace sbraid {

namespace {

void check_index(int n, int i) {
  if (i < 1 || i > n - 1) {
    throw IndexOutOfRange("generator index " + std::to_string(i) +
                          " outside [1, " + std::to_string(n - 1) + "]");
  }
}

void check_label(int n, int k, int j) {
  if (k < 1 || k > j || j > n - 1) {
    throw IndexOutOfRange("label (" + std::to_string(k) + "," +
                          std::to_string(j) + ") needs 1 <= k <= j <= " +
                          std::to_string(n - 1));
  }
}

// σ_{b-1} ⋯ σ_{a+1}: carries strand b next to strand a.
BraidWord approach_word(int n, const XLabel& label) {
  BraidWord out(n);
  for (int q = label.j; q > label.k; --q) out.push_back({q, 1});
  return out;
}

// A braid R with R⁻¹ σ_a R = σ_k and permutation rho, where rho carries the
// positions {a, a+1} onto {k, k+1}. Strands a, a+1 travel as one cable; the
// remaining strands are sorted around it with positive crossings.
BraidWord cable_braid(int n, int a, const Permutation& rho, int k) {
  const bool ok = (rho(a) == k || rho(a) == k + 1) &&
                  (rho(a + 1) == k || rho(a + 1) == k + 1);
  if (!ok) {
    throw CertificationFailure("cable target does not preserve the singular pair");
  }
  const int objects = n - 1;
  auto object_of = [](int position, int cable) {
    if (position < cable) return position;
    if (position <= cable + 1) return cable;
    return position - 1;
  };
  auto position_of = [](int object, int cable) {
    return object <= cable ? object : object + 1;
  };
  // Target object position for every starting object.
  std::vector<int> target(static_cast<std::size_t>(objects) + 1);
  for (int o = 1; o <= objects; ++o) {
    target[o] = object_of(rho(position_of(o, a)), k);
  }
  std::vector<int> at(static_cast<std::size_t>(objects) + 1);
  for (int o = 1; o <= objects; ++o) at[o] = o;

  BraidWord out(n);
  int cable = a;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 1; i < objects; ++i) {
      if (target[at[i]] <= target[at[i + 1]]) continue;
      std::swap(at[i], at[i + 1]);
      swapped = true;
      if (i + 1 < cable) {
        out.push_back({i, 1});
      } else if (i > cable) {
        out.push_back({i + 1, 1});
      } else if (i + 1 == cable) {
        out.push_back({i, 1});
        out.push_back({i + 1, 1});
        cable = i;
      } else {
        out.push_back({cable + 1, 1});
        out.push_back({cable, 1});
        cable = cable + 1;
      }
    }
  }
  if (rho(a) == k + 1) out.push_back({k, 1});
  if (permutation_of(out) != rho) {
    throw CertificationFailure("cable braid has the wrong permutation");
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// SingularWord

SingularWord::SingularWord(int strands) : strands_(strands) {
  if (strands < 2 || strands > kMaxStrands) {
    throw IndexOutOfRange("strand count " + std::to_string(strands) +
                          " outside [2, " + std::to_string(kMaxStrands) + "]");
  }
}

SingularWord::SingularWord(int strands, std::vector<SingularLetter> letters)
    : SingularWord(strands) {
  for (const auto& l : letters) push_back(l);
}

SingularWord::SingularWord(const BraidWord& w) : SingularWord(w.strands()) {
  letters_.reserve(w.size());
  for (const auto& l : w.letters()) {
    letters_.push_back(SingularLetter::sigma(l.index, l.sign));
  }
}

int SingularWord::degree() const {
  return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                        [](const auto& l) { return l.is_tau(); }));
}

void SingularWord::push_back(SingularLetter letter) {
  check_index(strands_, letter.index);
  if (letter.is_tau() && letter.sign != 1) {
    throw UnsupportedInput("singular letters must have exponent +1");
  }
  if (!letter.is_tau() && letter.sign != 1 && letter.sign != -1) {
    throw Error("letter sign must be ±1");
  }
  letters_.push_back(letter);
}

void SingularWord::append(const SingularWord& other) {
  if (other.strands_ != strands_) throw StrandMismatch(strands_, other.strands_);
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

void SingularWord::append(const BraidWord& other) {
  if (other.strands() != strands_) throw StrandMismatch(strands_, other.strands());
  for (const auto& l : other.letters()) {
    letters_.push_back(SingularLetter::sigma(l.index, l.sign));
  }
}

BraidWord SingularWord::to_braid() const {
  BraidWord out(strands_);
  for (const auto& l : letters_) {
    if (l.is_tau()) throw UnsupportedInput("word contains a singular letter");
    out.push_back({l.index, l.sign});
  }
  return out;
}

SingularWord operator*(const SingularWord& lhs, const SingularWord& rhs) {
  SingularWord out = lhs;
  out.append(rhs);
  return out;
}

SingularWord operator*(const SingularWord& lhs, const BraidWord& rhs) {
  SingularWord out = lhs;
  out.append(rhs);
  return out;
}

SingularWord operator*(const BraidWord& lhs, const SingularWord& rhs) {
  SingularWord out(lhs);
  out.append(rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Labels and Britton forms

XLabel XLabel::from_strands(int a, int b) {
  if (a == b) throw Error("a singular point joins two distinct strands");
  if (a > b) std::swap(a, b);
  return {a, b - 1};
}

bool XLabel::shares_strand(const XLabel& other) const {
  return k == other.k || k == other.j + 1 || j + 1 == other.k || j == other.j;
}

std::string XLabel::to_string() const {
  return "X[" + std::to_string(k) + "," + std::to_string(j) + "]";
}

BrittonForm::BrittonForm(int n, std::vector<BraidWord> segs,
                         std::vector<XLabel> labels)
    : strands(n), segments(std::move(segs)), letters(std::move(labels)) {
  if (segments.size() != letters.size() + 1) {
    throw Error("a Britton form needs exactly one more segment than letters");
  }
  for (const auto& s : segments) {
    if (s.strands() != n) throw StrandMismatch(n, s.strands());
  }
  for (const auto& l : letters) check_label(n, l.k, l.j);
}

std::string BrittonForm::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) out += " ; " + letters[i - 1].to_string() + " ; ";
    const std::string seg = format_word(segments[i]);
    out += seg.empty() ? "e" : seg;
  }
  return out;
}

Permutation perm_image(const SingularWord& w) {
  Permutation p(w.strands());
  for (const auto& l : w.letters()) {
    p = p.then(Permutation::transposition(w.strands(), l.index));
  }
  return p;
}

XLabel label_of_letter(const Permutation& prefix_perm, int k) {
  check_index(prefix_perm.size(), k);
  const Permutation back = prefix_perm.inverse();
  return XLabel::from_strands(back(k), back(k + 1));
}

SingularWord x_expansion(int strands, const XLabel& label) {
  check_label(strands, label.k, label.j);
  SingularWord out(strands);
  for (int q = label.j; q >= label.k; --q) out.push_back(SingularLetter::sigma(q));
  out.push_back(SingularLetter::tau(label.k));
  for (int q = label.k + 1; q <= label.j; ++q) {
    out.push_back(SingularLetter::sigma(q, -1));
  }
  return out;
}

GeneratorName GeneratorName::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "Delta" || s == "Δ") return {Kind::Delta};
  if (s == "c") return {Kind::c};
  if (s.size() >= 6 && (s[0] == 'a' || s[0] == 'X' || s[0] == 'M') &&
      s[1] == '(' && s.back() == ')') {
    const auto comma = s.find(',');
    if (comma != std::string::npos) {
      try {
        std::size_t used1 = 0;
        std::size_t used2 = 0;
        const std::string lhs = s.substr(2, comma - 2);
        const std::string rhs = s.substr(comma + 1, s.size() - comma - 2);
        const int first = std::stoi(lhs, &used1);
        const int second = std::stoi(rhs, &used2);
        if (used1 == lhs.size() && used2 == rhs.size()) {
          const Kind kind = s[0] == 'a' ? Kind::a : s[0] == 'X' ? Kind::X : Kind::M;
          return {kind, first, second};
        }
      } catch (const std::exception&) {
      }
    }
  }
  throw Error("unknown generator name '" + text + "'");
}

SingularWord generator_expansion(int strands, const GeneratorName& name) {
  switch (name.kind) {
    case GeneratorName::Kind::a:
      check_label(strands, name.first, name.second);
      return SingularWord(word_a(strands, name.first, name.second));
    case GeneratorName::Kind::X:
      return x_expansion(strands, {name.first, name.second});
    case GeneratorName::Kind::M:
      check_label(strands, name.first, name.second);
      return SingularWord(word_M(strands, name.first, name.second));
    case GeneratorName::Kind::Delta:
      return SingularWord(word_delta(strands));
    case GeneratorName::Kind::c:
      return SingularWord(word_center(strands));
  }
  throw Error("unreachable generator kind");
}

SingularFactor factor_singular(const BraidWord& u, int k, const BraidWord& v) {
  const int n = u.strands();
  if (v.strands() != n) throw StrandMismatch(n, v.strands());
  check_index(n, k);
  const Permutation pu = permutation_of(u);
  const Permutation total = pu.then(Permutation::transposition(n, k))
                                .then(permutation_of(v).inverse());
  if (!total.is_identity()) {
    throw NotPure("u·τ_k·v⁻¹ is not a pure singular braid");
  }

  const XLabel label = label_of_letter(pu, k);
  const int a = label.k;
  const BraidWord approach = approach_word(n, label);
  const Permutation rho = permutation_of(approach).inverse().then(pu);
  const BraidWord cable = cable_braid(n, a, rho, k);

  const BraidWord sigma_a(n, {a});
  const BraidWord sigma_k(n, {k});
  if (!braid_equal(sigma_a * cable, cable * sigma_k)) {
    throw CertificationFailure("cable braid does not carry σ_a to σ_k");
  }

  const BraidWord carrier = approach * cable;
  SingularFactor out{free_reduce(u * carrier.inverse()), label,
                     free_reduce(approach * sigma_a.inverse() * cable * v.inverse())};

  SingularWord source(u);
  source.push_back(SingularLetter::tau(k));
  source.append(v.inverse());
  const SingularWord rebuilt = out.before * x_expansion(n, label) * out.after;
  if (!gr_equal(eta(rebuilt), eta(source))) {
    throw CertificationFailure("factorization of " + format_word(source) +
                               " fails the η certificate");
  }
  return out;
}

BrittonForm to_britton_form(const SingularWord& w) {
  const int n = w.strands();
  if (!perm_image(w).is_identity()) {
    throw NotPure("word " + format_word(w) + " is not a pure singular braid");
  }
  std::vector<BraidWord> segments;
  std::vector<XLabel> labels;
  // prefix: the word so far with every τ replaced by σ.
  BraidWord prefix(n);
  BraidWord pending(n);
  for (const auto& letter : w.letters()) {
    if (!letter.is_tau()) {
      prefix.push_back({letter.index, letter.sign});
      continue;
    }
    // τ-factor prefix·σ_k⁻¹·τ_k·prefix⁻¹, pure by construction.
    BraidWord u = prefix;
    u.push_back({letter.index, -1});
    const SingularFactor f = factor_singular(u, letter.index, prefix);
    segments.push_back(free_reduce(pending * f.before));
    labels.push_back(f.label);
    pending = f.after;
    prefix.push_back({letter.index, 1});
  }
  segments.push_back(free_reduce(pending * prefix));
  return BrittonForm(n, std::move(segments), std::move(labels));
}

SingularWord expand_britton(const BrittonForm& b) {
  SingularWord out(b.strands);
  for (std::size_t i = 0; i < b.segments.size(); ++i) {
    if (i > 0) out.append(x_expansion(b.strands, b.letters[i - 1]));
    out.append(b.segments[i]);
  }
  return out;
}

std::map<XLabel, int> degree_vector(const BrittonForm& b) {
  std::map<XLabel, int> out;
  for (const auto& l : b.letters) ++out[l];
  return out;
}

}  // namespace sbraid
