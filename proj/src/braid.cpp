#include "sbraid/braid.hpp"

#include <algorithm>
#include <sstream>

#include "sbraid/error.hpp"

namespace sbraid {

struct PermAccess {
  static std::uint8_t* data(Permutation& p) { return p.img_.data(); }
  static const std::uint8_t* data(const Permutation& p) {
    return p.img_.data();
  }
};

namespace {

void check_strands(int n) {
  if (n < 2 || n > kMaxStrands) {
    throw IndexOutOfRange("strand count " + std::to_string(n) +
                          " outside [2, " + std::to_string(kMaxStrands) + "]");
  }
}

void check_index(int n, int i) {
  if (i < 1 || i > n - 1) {
    throw IndexOutOfRange("generator index " + std::to_string(i) +
                          " outside [1, " + std::to_string(n - 1) + "]");
  }
}

// Simple-element helpers on 0-based image arrays. Generator i swaps the
// positions i-1 and i.

bool finishes_with(const Permutation& a, int i) {
  const auto* img = PermAccess::data(a);
  int left = -1;
  int right = -1;
  for (int p = 0; p < a.size(); ++p) {
    if (img[p] == i - 1) left = p;
    if (img[p] == i) right = p;
  }
  return left > right;
}

bool starts_with(const Permutation& b, int i) {
  const auto* img = PermAccess::data(b);
  return img[i - 1] > img[i];
}

// a ← a·σ_i
void append_generator(Permutation& a, int i) {
  auto* img = PermAccess::data(a);
  for (int p = 0; p < a.size(); ++p) {
    if (img[p] == i - 1) {
      img[p] = static_cast<std::uint8_t>(i);
    } else if (img[p] == i) {
      img[p] = static_cast<std::uint8_t>(i - 1);
    }
  }
}

// b ← σ_i⁻¹·b, valid when b starts with σ_i.
void drop_leading_generator(Permutation& b, int i) {
  auto* img = PermAccess::data(b);
  std::swap(img[i - 1], img[i]);
}

// Conjugation by Δ: σ_i ↦ σ_{n-i}.
Permutation flip(const Permutation& p) {
  Permutation out = p;
  const int n = p.size();
  const auto* src = PermAccess::data(p);
  auto* dst = PermAccess::data(out);
  for (int q = 0; q < n; ++q) {
    dst[q] = static_cast<std::uint8_t>(n - 1 - src[n - 1 - q]);
  }
  return out;
}

// Makes (a, b) left-weighted by moving leading generators of b onto a.
// Returns whether anything moved.
bool make_left_weighted(Permutation& a, Permutation& b) {
  bool changed = false;
  const int n = a.size();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < n; ++i) {
      if (starts_with(b, i) && !finishes_with(a, i)) {
        append_generator(a, i);
        drop_leading_generator(b, i);
        moved = changed = true;
      }
    }
  }
  return changed;
}

void flip_all(GarsideNormalForm& nf) {
  for (auto& f : nf.factors) f = flip(f);
}

void push_simple(GarsideNormalForm& nf, const Permutation& s) {
  if (s.is_identity()) return;
  if (s == Permutation::reversal(nf.strands)) {
    flip_all(nf);
    ++nf.inf;
    return;
  }
  auto& fs = nf.factors;
  fs.push_back(s);
  for (std::size_t i = fs.size() - 1; i > 0; --i) {
    if (!make_left_weighted(fs[i - 1], fs[i])) break;
  }
  std::erase_if(fs, [](const Permutation& p) { return p.is_identity(); });
  const Permutation delta = Permutation::reversal(nf.strands);
  std::size_t leading = 0;
  while (leading < fs.size() && fs[leading] == delta) ++leading;
  if (leading > 0) {
    fs.erase(fs.begin(), fs.begin() + static_cast<long>(leading));
    nf.inf += static_cast<long>(leading);
  }
}

// Δ·σ_i⁻¹ as a permutation braid.
Permutation delta_without(int n, int i) {
  return Permutation::reversal(n).then(Permutation::transposition(n, i));
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(int n) : n_(static_cast<std::uint8_t>(n)) {
  if (n < 1 || n > kMaxStrands) {
    throw IndexOutOfRange("permutation size " + std::to_string(n) +
                          " outside [1, " + std::to_string(kMaxStrands) + "]");
  }
  for (int p = 0; p < n; ++p) img_[p] = static_cast<std::uint8_t>(p);
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  Permutation out(n);
  std::array<bool, kMaxStrands> seen{};
  for (int p = 0; p < n; ++p) {
    const int q = images[p];
    if (q < 1 || q > n || seen[q - 1]) {
      throw Error("not a permutation of 1.." + std::to_string(n));
    }
    seen[q - 1] = true;
    out.img_[p] = static_cast<std::uint8_t>(q - 1);
  }
  return out;
}

Permutation Permutation::transposition(int n, int i) {
  check_index(n, i);
  Permutation out(n);
  std::swap(out.img_[i - 1], out.img_[i]);
  return out;
}

Permutation Permutation::reversal(int n) {
  Permutation out(n);
  for (int p = 0; p < n; ++p) out.img_[p] = static_cast<std::uint8_t>(n - 1 - p);
  return out;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.n_ != n_) throw StrandMismatch(n_, next.n_);
  Permutation out(n_);
  for (int p = 0; p < n_; ++p) out.img_[p] = next.img_[img_[p]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(n_);
  for (int p = 0; p < n_; ++p) out.img_[img_[p]] = static_cast<std::uint8_t>(p);
  return out;
}

bool Permutation::is_identity() const {
  for (int p = 0; p < n_; ++p) {
    if (img_[p] != p) return false;
  }
  return true;
}

std::string Permutation::one_line() const {
  std::string out;
  for (int p = 0; p < n_; ++p) {
    if (n_ >= 10 && p > 0) out += ',';
    out += std::to_string(img_[p] + 1);
  }
  return out;
}

std::string Permutation::mapsto_string() const {
  std::string out;
  for (int p = 0; p < n_; ++p) {
    if (p > 0) out += ' ';
    out += std::to_string(p + 1) + "↦" + std::to_string(img_[p] + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// BraidWord

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (const auto& l : letters_) {
    check_index(strands, l.index);
    if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be ±1");
  }
}

BraidWord::BraidWord(int strands, std::initializer_list<int> signed_indices)
    : BraidWord(strands) {
  for (int s : signed_indices) push_back({s < 0 ? -s : s, s < 0 ? -1 : 1});
}

void BraidWord::push_back(BraidLetter letter) {
  check_index(strands_, letter.index);
  letters_.push_back(letter);
}

void BraidWord::append(const BraidWord& other) {
  if (other.strands_ != strands_) throw StrandMismatch(strands_, other.strands_);
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

BraidWord BraidWord::inverse() const {
  BraidWord out(strands_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(it->inverse());
  }
  return out;
}

BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs) {
  BraidWord out = lhs;
  out.append(rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Free group and symmetric group images

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p(w.strands());
  for (const auto& l : w.letters()) append_generator(p, l.index);
  return p;
}

// ---------------------------------------------------------------------------
// Garside normal form

std::string GarsideNormalForm::key() const {
  std::ostringstream out;
  out << "Δ^" << inf;
  for (const auto& f : factors) out << " | " << f.one_line();
  return out.str();
}

GarsideNormalForm identity_form(int strands) {
  check_strands(strands);
  return GarsideNormalForm{strands, 0, {}};
}

void multiply_letter(GarsideNormalForm& x, BraidLetter letter) {
  check_index(x.strands, letter.index);
  if (letter.sign > 0) {
    push_simple(x, Permutation::transposition(x.strands, letter.index));
  } else {
    flip_all(x);
    --x.inf;
    push_simple(x, delta_without(x.strands, letter.index));
  }
}

GarsideNormalForm normal_form(const BraidWord& w) {
  ++op_counters().normal_forms;
  const int n = w.strands();
  GarsideNormalForm nf = identity_form(n);
  // Every σ_i⁻¹ is Δ⁻¹·(Δσ_i⁻¹); all the Δ⁻¹ are pulled to the front first,
  // conjugating each simple factor once per Δ⁻¹ it crosses.
  long negatives = std::count_if(w.letters().begin(), w.letters().end(),
                                 [](const BraidLetter& l) { return l.sign < 0; });
  nf.inf = -negatives;
  for (const auto& l : w.letters()) {
    Permutation simple = l.sign > 0 ? Permutation::transposition(n, l.index)
                                    : delta_without(n, l.index);
    if (l.sign < 0) --negatives;
    if (negatives % 2 != 0) simple = flip(simple);
    push_simple(nf, simple);
  }
  return nf;
}

GarsideNormalForm multiply(const GarsideNormalForm& x,
                           const GarsideNormalForm& y) {
  if (x.strands != y.strands) throw StrandMismatch(x.strands, y.strands);
  GarsideNormalForm out = x;
  out.inf += y.inf;
  if (y.inf % 2 != 0) flip_all(out);
  for (const auto& f : y.factors) push_simple(out, f);
  return out;
}

BraidWord permutation_braid(const Permutation& p) {
  // Bubble sort of the end positions; each swap is one positive crossing.
  const int n = p.size();
  std::vector<int> at(static_cast<std::size_t>(n));  // strand currently at position
  for (int q = 1; q <= n; ++q) at[q - 1] = q;
  BraidWord out(n);
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 1; i < n; ++i) {
      if (p(at[i - 1]) > p(at[i])) {
        std::swap(at[i - 1], at[i]);
        out.push_back({i, 1});
        swapped = true;
      }
    }
  }
  return out;
}

BraidWord to_word(const GarsideNormalForm& nf) {
  BraidWord out(nf.strands);
  const BraidWord delta = word_delta(nf.strands);
  const BraidWord delta_inv = delta.inverse();
  for (long k = 0; k < (nf.inf < 0 ? -nf.inf : nf.inf); ++k) {
    out.append(nf.inf < 0 ? delta_inv : delta);
  }
  for (const auto& f : nf.factors) out.append(permutation_braid(f));
  return out;
}

bool braid_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw StrandMismatch(u.strands(), v.strands());
  if (permutation_of(u) != permutation_of(v)) return false;
  return normal_form(u) == normal_form(v);
}

bool left_weighted(const Permutation& a, const Permutation& b) {
  for (int i = 1; i < a.size(); ++i) {
    if (starts_with(b, i) && !finishes_with(a, i)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Transversal and named words

BraidWord transversal_rep(const Permutation& p) {
  const int n = p.size();
  check_strands(n);
  // Peel the block for level 1 off the right end first: w·M_{1,j}⁻¹ fixes
  // position 1 exactly when j + 1 = p(1).
  std::vector<BraidWord> blocks;
  Permutation rest = p;
  for (int level = 1; level < n; ++level) {
    const int j = rest(level) - 1;
    BraidWord block = word_M(n, level, j);
    rest = rest.then(permutation_of(block).inverse());
    blocks.push_back(std::move(block));
  }
  BraidWord out(n);
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) out.append(*it);
  return out;
}

BraidWord word_M(int strands, int i, int j) {
  BraidWord out(strands);
  if (j == i - 1) return out;
  check_index(strands, i);
  check_index(strands, j);
  if (j < i) throw IndexOutOfRange("M(i,j) needs i <= j");
  for (int q = i; q <= j; ++q) out.push_back({q, 1});
  return out;
}

BraidWord word_a(int strands, int k, int j) {
  check_index(strands, k);
  check_index(strands, j);
  if (k > j) throw IndexOutOfRange("a(k,j) needs k <= j");
  BraidWord out(strands);
  for (int q = k; q < j; ++q) out.push_back({q, 1});
  out.push_back({j, 1});
  out.push_back({j, 1});
  for (int q = j - 1; q >= k; --q) out.push_back({q, -1});
  return out;
}

BraidWord word_delta(int strands) {
  BraidWord out(strands);
  for (int top = strands - 1; top >= 1; --top) {
    for (int q = 1; q <= top; ++q) out.push_back({q, 1});
  }
  return out;
}

BraidWord word_center(int strands) {
  BraidWord out(strands);
  for (int k = 1; k < strands; ++k) {
    for (int j = strands - 1; j >= k; --j) out.append(word_a(strands, k, j));
  }
  return out;
}

OpCounters& op_counters() {
  thread_local OpCounters counters;
  return counters;
}

}  // namespace sbraid
