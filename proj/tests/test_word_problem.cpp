#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "sbraid/error.hpp"
#include "sbraid/group_ring.hpp"
#include "sbraid/notation.hpp"
#include "sbraid/presentation.hpp"
#include "sbraid/word_problem.hpp"

using namespace sbraid;

namespace {

SingularWord sw(const char* text, int n) { return parse_word(text, n); }

BrittonForm bf(int n, std::vector<XLabel> labels) {
  std::vector<BraidWord> segs(labels.size() + 1, BraidWord(n));
  return BrittonForm(n, segs, labels);
}

struct Pair {
  SingularWord lhs;
  SingularWord rhs;
  bool truth;
};

// u τ v against u c τ c⁻¹ v. The two are equal exactly when c commutes with
// that τ, a question η settles, whatever the degree of u and v.
Pair conjugation_pair(RelationRewriter& rw, int length, int degree) {
  const int n = rw.strands();
  auto& rng = rw.engine();
  const SingularWord w = rw.random_word(length, std::max(degree, 1));
  std::vector<std::size_t> taus;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.letters()[i].is_tau()) taus.push_back(i);
  const std::size_t at = taus[rng() % taus.size()];
  BraidWord c(n);
  switch (rng() % 4) {
    case 0: {
      const int i = 1 + static_cast<int>(rng() % (n - 1));
      c = BraidWord(n, {i, i});
      break;
    }
    case 1:
      c = oracle::random_pure(rng, n, 1);
      break;
    case 2: {
      // A pure braid on strands away from the τ's own pair, often commuting.
      const int i = w.letters()[at].index;
      c = BraidWord(n, {i, i});
      c.append(oracle::random_pure(rng, n, 1));
      break;
    }
    default:
      c = word_center(n);
      c.append(BraidWord(n, {1, 1}));
  }
  if (rng() % 2) c = c.inverse();
  const SingularWord tau(n, {w.letters()[at]});
  const bool truth = gr_equal(eta(c * tau), eta(tau * c));
  std::vector<SingularLetter> l(w.letters().begin(), w.letters().begin() + static_cast<long>(at));
  for (const auto& x : c.letters()) l.push_back(SingularLetter::sigma(x.index, x.sign));
  l.push_back(w.letters()[at]);
  const BraidWord c_inv = c.inverse();
  for (const auto& x : c_inv.letters()) l.push_back(SingularLetter::sigma(x.index, x.sign));
  l.insert(l.end(), w.letters().begin() + static_cast<long>(at) + 1, w.letters().end());
  SingularWord w2(n, l);
  w2 = rw.rewrite(w2, 6);
  return {w, w2, truth};
}

}  // namespace

TEST_CASE("certificate names") {
  CHECK(to_string(Certificate::braid_match) == "braid-normal-form-match");
  CHECK(to_string(Certificate::condition3_failure) == "condition-3-failure");
  CHECK(certifies_equal(Certificate::recursion_success));
  CHECK_FALSE(certifies_equal(Certificate::strand_clash));
  const Verdict v{true, Certificate::recursion_success, 2};
  CHECK(v.to_json() == R"({"certificate":"recursion-success","equal":true,"steps":2})");
}

TEST_CASE("check_commutation_eta examples") {
  CHECK(check_commutation_eta(sw("t1", 3), sw("s1", 3)));
  CHECK(check_commutation_eta(sw("t1", 3), sw("s2 s1^2 s2", 3)));
  CHECK_FALSE(check_commutation_eta(sw("t1", 3), sw("s2^2", 3)));
  CHECK_THROWS_AS(check_commutation_eta(sw("t1 t1", 3), sw("t2", 3)), UnsupportedInput);
  CHECK_THROWS_AS(check_commutation_eta(sw("t1", 3), sw("t1", 4)), StrandMismatch);
}

TEST_CASE("commutes_via_frz examples") {
  CHECK(commutes_via_frz(BraidWord(3, {1}), 1, 1));
  const BraidWord d = word_delta(3);
  CHECK(commutes_via_frz(d * d, 1, 1));
  CHECK_FALSE(commutes_via_frz(BraidWord(3, {2, 2}), 1, 1));
  // Δ carries σ1 to σ2.
  CHECK(commutes_via_frz(d, 1, 2));
}

TEST_CASE("x_commutes_with_pure examples") {
  CHECK(x_commutes_with_pure({1, 1}, BraidWord(3, {1, 1})));
  CHECK(x_commutes_with_pure({1, 1}, BraidWord(3)));
  CHECK_FALSE(x_commutes_with_pure({1, 1}, BraidWord(3, {2, 2})));
  CHECK_THROWS_AS(x_commutes_with_pure({1, 1}, BraidWord(3, {1})), NotPure);
}

TEST_CASE("x_commutes_with_pure agrees with η") {
  std::mt19937_64 rng(61);
  int yes = 0;
  for (int t = 0; t < 600; ++t) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % (n - 1));
    const int j = k + static_cast<int>(rng() % (n - k));
    const XLabel label{k, j};
    BraidWord w = oracle::random_pure(rng, n, 1 + static_cast<int>(rng() % 2));
    if (t % 3 == 0) w = word_a(n, k, j) * word_center(n);  // commutes
    const bool frz = x_commutes_with_pure(label, w);
    CHECK(frz == check_commutation_eta(x_expansion(n, label), SingularWord(w)));
    yes += frz;
  }
  CHECK(yes > 150);
}

TEST_CASE("trace_filter examples") {
  CHECK(trace_filter(bf(5, {{1, 1}, {3, 3}}), bf(5, {{3, 3}, {1, 1}})));
  CHECK_FALSE(trace_filter(bf(4, {{1, 1}, {1, 2}}), bf(4, {{1, 2}, {1, 1}})));
  CHECK(trace_filter(bf(3, {}), bf(3, {})));
  CHECK(trace_normal_form({{3, 3}, {1, 1}, {2, 3}}) ==
        std::vector<XLabel>{{1, 1}, {3, 3}, {2, 3}});
}

TEST_CASE("decide_sgp examples") {
  const SingularWord lhs = sw("s2 s1^2 s2 t1", 3);
  const SingularWord rhs = sw("t1 s2 s1^2 s2", 3);
  const BraidWord coset = transversal_rep(perm_image(lhs)).inverse();
  const Verdict v = decide_sgp(to_britton_form(lhs * coset), to_britton_form(rhs * coset));
  CHECK(v.equal);
  CHECK(v.certificate == Certificate::recursion_success);
  CHECK(v.steps == 1);

  const BrittonForm b = to_britton_form(sw("t1 s2 t2 s1 s2 s1", 3) * BraidWord(3, {-1, -2, -1, -1}));
  CHECK(decide_sgp(b, b).equal);

  const SingularWord x = sw("t1 s2^2", 3);
  const SingularWord y = sw("s2^2 t1", 3);
  const BraidWord c2 = transversal_rep(perm_image(x)).inverse();
  const Verdict u = decide_sgp(to_britton_form(x * c2), to_britton_form(y * c2));
  CHECK_FALSE(u.equal);
  CHECK(u.certificate == Certificate::condition3_failure);
  CHECK_FALSE(gr_equal(eta(x), eta(y)));
}

TEST_CASE("decide_equal examples") {
  const Verdict a = decide_equal(sw("s2 s1^2 s2 t1", 3), sw("t1 s2 s1^2 s2", 3));
  CHECK(a.equal);
  const Verdict b = decide_equal(sw("s2 s3 s1 s2 t1 s2 s3 s1 s2 t1", 4),
                                 sw("t1 s2 s3 s1 s2 t1 s2 s3 s1 s2", 4));
  CHECK(b.equal);
  CHECK(b.steps == 2);
  const Verdict c = decide_equal(sw("t1", 3), sw("t2", 3));
  CHECK_FALSE(c.equal);
  CHECK(c.certificate == Certificate::permutation_mismatch);

  CHECK(decide_equal(sw("s1 s2 s1", 3), sw("s2 s1 s2", 3)).certificate ==
        Certificate::braid_match);
  CHECK(decide_equal(sw("s1", 3), sw("s1^-1", 3)).certificate ==
        Certificate::braid_mismatch);
  CHECK(decide_equal(sw("t1 t1", 3), sw("s1 s1", 3)).certificate ==
        Certificate::degree_mismatch);
  // Same labels, same permutation, different order of two clashing labels.
  const Verdict d = decide_equal(sw("t1 s2 t2 s2^-1", 3), sw("s2 t2 s2^-1 t1", 3));
  CHECK_FALSE(d.equal);
  CHECK_THROWS_AS(decide_equal(sw("t1", 3), sw("t1", 4)), StrandMismatch);
}

TEST_CASE("decide_equal on a degree-two word without filters reaches condition 1") {
  DecideOptions off;
  off.filters = false;
  const Verdict v = decide_equal(sw("t1 t1", 3), sw("s1 s1", 3), off);
  CHECK_FALSE(v.equal);
  CHECK(v.certificate == Certificate::condition1_failure);
}

TEST_CASE("reflexivity, symmetry and right multiplication") {
  for (int n = 3; n <= 5; ++n) {
    RelationRewriter rw(n, 67 + static_cast<std::uint64_t>(n));
    for (int t = 0; t < 80; ++t) {
      const Pair p = conjugation_pair(rw, 16, 1 + t % 4);
      const Verdict self = decide_equal(p.lhs, p.lhs);
      CHECK(self.equal);
      const Verdict fwd = decide_equal(p.lhs, p.rhs);
      const Verdict bwd = decide_equal(p.rhs, p.lhs);
      CHECK(fwd.equal == bwd.equal);
      const SingularWord s(oracle::random_braid(rw.engine(), n, 6));
      CHECK(decide_equal(p.lhs * s, p.rhs * s).equal == fwd.equal);
      CHECK(decide_equal(s * p.lhs, s * p.rhs).equal == fwd.equal);
    }
  }
}

TEST_CASE("degree at most two: decide_equal matches η") {
  std::map<Certificate, int> seen;
  int equal = 0;
  int total = 0;
  for (int n = 3; n <= 5; ++n) {
    RelationRewriter rw(n, 71 + static_cast<std::uint64_t>(n));
    auto& rng = rw.engine();
    for (int t = 0; t < 250; ++t) {
      const int deg = static_cast<int>(rng() % 3);
      SingularWord w1 = rw.random_word_with_plants(4 + static_cast<int>(rng() % 20), deg);
      SingularWord w2(n);
      switch (t % 4) {
        case 0: w2 = rw.rewrite(w1, 10); break;
        case 1: w2 = rw.rewrite(rw.conjugate_tau(w1), 4); break;
        case 2: w2 = rw.rewrite(rw.insert_pure_square(w1), 4); break;
        default: {
          // Unrelated word with the same permutation and degree.
          const SingularWord r = rw.random_word(static_cast<int>(w1.size()), deg);
          w2 = r * transversal_rep(perm_image(r)).inverse() * transversal_rep(perm_image(w1));
        }
      }
      const Verdict v = decide_equal(w1, w2);
      CHECK(v.equal == gr_equal(eta(w1), eta(w2)));
      CHECK(v.equal == certifies_equal(v.certificate));
      ++seen[v.certificate];
      equal += v.equal;
      ++total;
    }
  }
  CHECK(total >= 500);
  CHECK(equal > total / 5);
  CHECK(equal < total - total / 5);
  CHECK(seen.size() >= 5);
}

TEST_CASE("conjugation pairs of any degree are decided correctly") {
  int equal = 0;
  int total = 0;
  for (int n = 3; n <= 5; ++n) {
    RelationRewriter rw(n, 79 + static_cast<std::uint64_t>(n));
    for (int t = 0; t < 120; ++t) {
      const Pair p = conjugation_pair(rw, 20, 1 + t % 6);
      const Verdict v = decide_equal(p.lhs, p.rhs);
      CAPTURE(format_word(p.lhs));
      CAPTURE(format_word(p.rhs));
      CHECK(v.equal == p.truth);
      if (v.equal) CHECK(gr_equal(eta(p.lhs), eta(p.rhs)));
      equal += v.equal;
      ++total;
    }
  }
  CHECK(equal > total / 5);
  CHECK(equal < total - total / 5);
}

TEST_CASE("rewritten pairs are decided equal") {
  int total = 0;
  for (int n = 3; n <= 5; ++n) {
    for (bool tau_one : {true, false}) {
      RewriteOptions opt;
      opt.tau_one_only = tau_one;
      RelationRewriter rw(n, 83 + static_cast<std::uint64_t>(n) * 2 + tau_one, opt);
      for (int t = 0; t < 60; ++t) {
        const SingularWord w = rw.random_word_with_plants(4 + t % 16, t % 5);
        const SingularWord w2 = rw.rewrite(w, 1 + t % 20);
        const Verdict v = decide_equal(w, w2);
        CAPTURE(format_word(w));
        CAPTURE(format_word(w2));
        CHECK(v.equal);
        CHECK(gr_equal(eta(w), eta(w2)));
        ++total;
      }
    }
  }
  CHECK(total >= 360);
}

TEST_CASE("filters never change a verdict") {
  DecideOptions off;
  off.filters = false;
  std::map<Certificate, int> filtered;
  for (int n = 3; n <= 4; ++n) {
    RelationRewriter rw(n, 89 + static_cast<std::uint64_t>(n));
    auto& rng = rw.engine();
    for (int t = 0; t < 150; ++t) {
      const int deg = static_cast<int>(rng() % 4);
      const SingularWord w1 = rw.random_word(10, deg);
      SingularWord w2(n);
      switch (t % 3) {
        case 0: w2 = rw.rewrite(rw.conjugate_tau(w1), 3); break;
        case 1: w2 = rw.random_word(10, static_cast<int>(rng() % 4)); break;
        default: {
          // Same permutation, labels shuffled.
          const SingularWord r = rw.random_word(10, deg);
          w2 = r * transversal_rep(perm_image(r)).inverse() * transversal_rep(perm_image(w1));
        }
      }
      const Verdict on = decide_equal(w1, w2);
      const Verdict bare = decide_equal(w1, w2, off);
      CHECK(on.equal == bare.equal);
      ++filtered[on.certificate];
    }
  }
  CHECK(filtered[Certificate::degree_mismatch] > 0);
  CHECK(filtered[Certificate::trace_mismatch] + filtered[Certificate::strand_clash] > 0);
}
