#include "sbraid/word_problem.hpp"

#include <algorithm>
#include <utility>

#include <json.hpp>

#include "sbraid/error.hpp"
#include "sbraid/group_ring.hpp"

namespace sbraid {

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::braid_match: return "braid-normal-form-match";
    case Certificate::recursion_success: return "recursion-success";
    case Certificate::braid_mismatch: return "braid-normal-form-mismatch";
    case Certificate::permutation_mismatch: return "permutation-mismatch";
    case Certificate::degree_mismatch: return "degree-mismatch";
    case Certificate::trace_mismatch: return "trace-mismatch";
    case Certificate::strand_clash: return "strand-clash";
    case Certificate::condition1_failure: return "condition-1-failure";
    case Certificate::condition2_failure: return "condition-2-failure";
    case Certificate::condition3_failure: return "condition-3-failure";
  }
  return "unknown";
}

bool certifies_equal(Certificate c) {
  return c == Certificate::braid_match || c == Certificate::recursion_success;
}

std::string Verdict::to_json() const {
  nlohmann::json j;
  j["equal"] = equal;
  j["certificate"] = to_string(certificate);
  j["steps"] = steps;
  return j.dump();
}

bool check_commutation_eta(const SingularWord& x, const SingularWord& y) {
  if (x.strands() != y.strands()) throw StrandMismatch(x.strands(), y.strands());
  if (x.degree() + y.degree() > 2) {
    throw UnsupportedInput(
        "η decides equality only up to two singular letters");
  }
  return gr_equal(eta(x * y), eta(y * x));
}

bool commutes_via_frz(const BraidWord& beta, int j, int k) {
  const int n = beta.strands();
  const BraidWord sj(n, {j});
  const BraidWord sk(n, {k});
  return braid_equal(sj * beta, beta * sk);
}

bool x_commutes_with_pure(const XLabel& label, const BraidWord& w) {
  const int n = w.strands();
  if (!permutation_of(w).is_identity()) {
    throw NotPure("x_commutes_with_pure needs a pure braid");
  }
  // X_{k,j} = A σ_k τ_k A⁻¹ with A = σ_j ⋯ σ_{k+1}; conjugate w by A and
  // test against σ_k.
  BraidWord approach(n);
  for (int q = label.j; q > label.k; --q) approach.push_back({q, 1});
  const BraidWord conj = free_reduce(approach.inverse() * w * approach);
  return commutes_via_frz(conj, label.k, label.k);
}

std::vector<XLabel> trace_normal_form(const std::vector<XLabel>& labels) {
  std::vector<XLabel> rest = labels;
  std::vector<XLabel> out;
  out.reserve(labels.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool movable = true;
      for (std::size_t q = 0; q < i && movable; ++q) {
        movable = !rest[q].shares_strand(rest[i]);
      }
      if (movable && (best == rest.size() || rest[i] < rest[best])) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<long>(best));
  }
  return out;
}

bool trace_filter(const BrittonForm& b1, const BrittonForm& b2) {
  return trace_normal_form(b1.letters) == trace_normal_form(b2.letters);
}

Verdict decide_sgp(const BrittonForm& b1, const BrittonForm& b2,
                   const DecideOptions& options) {
  if (b1.strands != b2.strands) throw StrandMismatch(b1.strands, b2.strands);
  const int n = b1.strands;
  BrittonForm lhs = b1;
  BrittonForm rhs = b2;
  int steps = 0;
  auto verdict = [&steps](bool equal, Certificate c) {
    return Verdict{equal, c, steps};
  };

  for (;;) {
    if (options.filters && lhs.degree() != rhs.degree()) {
      return verdict(false, Certificate::degree_mismatch);
    }
    if (lhs.degree() == 0 && rhs.degree() == 0) {
      if (!braid_equal(lhs.segments[0], rhs.segments[0])) {
        return verdict(false, Certificate::braid_mismatch);
      }
      return verdict(true, steps == 0 ? Certificate::braid_match
                                      : Certificate::recursion_success);
    }
    if (lhs.degree() == 0) std::swap(lhs, rhs);
    if (rhs.degree() == 0) {
      // The last stable letter of lhs has nothing to pinch against.
      return verdict(false, Certificate::condition1_failure);
    }

    // Shape: lhs = α_1 Y_1 ⋯ α_m Y_m, rhs = Z_1 β_1 ⋯ Z_r β_r, obtained by
    // multiplying both sides by rhs's leading segment inverse on the left
    // and lhs's trailing segment inverse on the right.
    const BraidWord lead_inv = rhs.segments.front().inverse();
    const BraidWord trail_inv = lhs.segments.back().inverse();
    lhs.segments.front() = free_reduce(lead_inv * lhs.segments.front());
    lhs.segments.back() = BraidWord(n);
    rhs.segments.front() = BraidWord(n);
    rhs.segments.back() = free_reduce(rhs.segments.back() * trail_inv);

    const XLabel y = lhs.letters.back();
    const int r = rhs.degree();
    int j = r;
    while (j >= 1 && rhs.letters[static_cast<std::size_t>(j - 1)] != y) --j;
    if (j == 0) return verdict(false, Certificate::condition1_failure);

    const SingularWord y_word = x_expansion(n, y);
    BraidWord tail = rhs.segments[static_cast<std::size_t>(r)];
    for (int i = r; i > j; --i) {
      const XLabel z = rhs.letters[static_cast<std::size_t>(i - 1)];
      if (options.filters && z.shares_strand(y)) {
        return verdict(false, Certificate::strand_clash);
      }
      const SingularWord conj = tail * y_word * tail.inverse();
      if (!check_commutation_eta(x_expansion(n, z), conj)) {
        return verdict(false, Certificate::condition2_failure);
      }
      tail = free_reduce(rhs.segments[static_cast<std::size_t>(i - 1)] * tail);
    }
    if (!x_commutes_with_pure(y, tail)) {
      return verdict(false, Certificate::condition3_failure);
    }

    lhs.letters.pop_back();
    lhs.segments.pop_back();
    const auto jj = static_cast<std::size_t>(j);
    rhs.segments[jj - 1] = free_reduce(rhs.segments[jj - 1] * rhs.segments[jj]);
    rhs.segments.erase(rhs.segments.begin() + static_cast<long>(jj));
    rhs.letters.erase(rhs.letters.begin() + static_cast<long>(jj - 1));
    ++steps;
  }
}

Verdict decide_equal(const SingularWord& w1, const SingularWord& w2,
                     const DecideOptions& options) {
  if (w1.strands() != w2.strands()) throw StrandMismatch(w1.strands(), w2.strands());
  if (options.filters && w1.degree() != w2.degree()) {
    return {false, Certificate::degree_mismatch, 0};
  }
  const Permutation p = perm_image(w1);
  if (p != perm_image(w2)) return {false, Certificate::permutation_mismatch, 0};

  const BraidWord coset_inv = transversal_rep(p).inverse();
  const BrittonForm b1 = to_britton_form(w1 * coset_inv);
  const BrittonForm b2 = to_britton_form(w2 * coset_inv);
  if (options.filters) {
    if (degree_vector(b1) != degree_vector(b2)) {
      return {false, Certificate::degree_mismatch, 0};
    }
    if (!trace_filter(b1, b2)) return {false, Certificate::trace_mismatch, 0};
  }
  return decide_sgp(b1, b2, options);
}

}  // namespace sbraid
