#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sbraid/braid.hpp"
#include "sbraid/error.hpp"
#include "sbraid/notation.hpp"
#include "sbraid/presentation.hpp"

using namespace sbraid;

namespace {

Permutation perm(std::initializer_list<int> images) {
  return Permutation::from_images(images);
}

// Applies one random braid-group relation (either direction) or a free
// insertion/cancellation to w. Always returns a word equal to w.
BraidWord braid_move(std::mt19937_64& rng, const BraidWord& w) {
  const int n = w.strands();
  std::vector<BraidLetter> l = w.letters();
  const int kind = static_cast<int>(rng() % 4);
  const auto pos = [&](std::size_t width) -> std::size_t {
    return l.size() + 1 > width ? rng() % (l.size() + 1 - width) : 0;
  };
  if (kind == 0) {
    const int i = 1 + static_cast<int>(rng() % (n - 1));
    const int s = rng() % 2 ? 1 : -1;
    const std::size_t at = pos(0);
    l.insert(l.begin() + static_cast<long>(at), {BraidLetter{i, s}, BraidLetter{i, -s}});
    return BraidWord(n, l);
  }
  // Scan from a random offset for the first applicable site.
  const std::size_t start = l.empty() ? 0 : rng() % l.size();
  for (std::size_t off = 0; off < l.size(); ++off) {
    const std::size_t p = (start + off) % l.size();
    if (kind == 1 && p + 1 < l.size() && l[p].index == l[p + 1].index &&
        l[p].sign == -l[p + 1].sign) {
      l.erase(l.begin() + static_cast<long>(p), l.begin() + static_cast<long>(p) + 2);
      return BraidWord(n, l);
    }
    if (kind == 2 && p + 1 < l.size() && std::abs(l[p].index - l[p + 1].index) >= 2) {
      std::swap(l[p], l[p + 1]);
      return BraidWord(n, l);
    }
    if (kind == 3 && p + 2 < l.size() && l[p] == l[p + 2] &&
        std::abs(l[p].index - l[p + 1].index) == 1 && l[p].sign == l[p + 1].sign) {
      const BraidLetter a = l[p], b = l[p + 1];
      l[p] = b;
      l[p + 1] = a;
      l[p + 2] = b;
      return BraidWord(n, l);
    }
  }
  return w;
}

}  // namespace

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce(BraidWord(3, {1, -1})).empty());
  CHECK(free_reduce(BraidWord(3)).empty());
  CHECK(free_reduce(BraidWord(3, {1, 2, -2, 1})) == BraidWord(3, {1, 1}));
  CHECK(braid_equal(free_reduce(BraidWord(3, {1, 2, -2, 1})), BraidWord(3, {1, 2, -2, 1})));
  CHECK(free_reduce(BraidWord(3, {1, 2, -2, -1, 2})) == BraidWord(3, {2}));
}

TEST_CASE("free_reduce leaves no cancelling pair") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const BraidWord w = oracle::random_braid(rng, 4, 30);
    const BraidWord r = free_reduce(w);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      CHECK_FALSE(r.letters()[i] == r.letters()[i + 1].inverse());
    }
    CHECK(oracle::burau(r) == oracle::burau(w));
  }
}

TEST_CASE("permutation_of examples") {
  CHECK(permutation_of(BraidWord(3)).is_identity());
  CHECK(permutation_of(BraidWord(2, {1})) == perm({2, 1}));
  const Permutation p = permutation_of(BraidWord(3, {1, 2}));
  CHECK(p == perm({3, 1, 2}));
  CHECK(p.mapsto_string() == "1↦3 2↦1 3↦2");
  CHECK(p(1) == 3);
  CHECK(p(2) == 1);
  CHECK(p(3) == 2);
}

TEST_CASE("permutation_of agrees with strand tracking and is a homomorphism") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const BraidWord u = oracle::random_braid(rng, n, static_cast<int>(rng() % 20));
    const BraidWord v = oracle::random_braid(rng, n, static_cast<int>(rng() % 20));
    const BraidWord uv = u * v;
    std::vector<int> swaps;
    for (const auto& l : uv.letters()) swaps.push_back(l.index);
    const auto tracked = oracle::track(n, swaps);
    const Permutation p = permutation_of(u * v);
    for (int s = 1; s <= n; ++s) CHECK(p(s) == tracked[static_cast<std::size_t>(s - 1)]);
    CHECK(p == permutation_of(u).then(permutation_of(v)));
  }
}

TEST_CASE("Permutation basics") {
  CHECK(Permutation::reversal(4) == perm({4, 3, 2, 1}));
  CHECK(perm({3, 1, 2}).inverse() == perm({2, 3, 1}));
  CHECK(perm({3, 1, 2}).one_line() == "312");
  CHECK_THROWS_AS(perm({1, 1, 2}), Error);
  std::vector<int> big(11);
  std::iota(big.begin(), big.end(), 1);
  std::swap(big[0], big[10]);
  CHECK(Permutation::from_images(big).one_line() == "11,2,3,4,5,6,7,8,9,10,1");
}

TEST_CASE("normal_form examples") {
  const GarsideNormalForm d = normal_form(BraidWord(3, {1, 2, 1}));
  CHECK(d.inf == 1);
  CHECK(d.factors.empty());
  CHECK(d.key() == "Δ^1");

  const GarsideNormalForm e = normal_form(BraidWord(3));
  CHECK(e.inf == 0);
  CHECK(e.factors.empty());
  CHECK(e == identity_form(3));

  const GarsideNormalForm inv = normal_form(BraidWord(3, {-1}));
  CHECK(inv.inf == -1);
  REQUIRE(inv.factors.size() == 1);
  CHECK(inv.factors[0] == permutation_of(BraidWord(3, {1, 2})));
  CHECK(inv.key() == "Δ^-1 | 312");
}

TEST_CASE("every reduced positive word for the reversal has normal form Δ") {
  // Brute force over all positive words of length 3 on three strands.
  int found = 0;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c) {
        const BraidWord w(3, {a, b, c});
        if (permutation_of(w) != Permutation::reversal(3)) continue;
        ++found;
        const auto nf = normal_form(w);
        CHECK(nf.inf == 1);
        CHECK(nf.factors.empty());
      }
  CHECK(found == 2);
}

TEST_CASE("braid_equal examples") {
  CHECK(braid_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  CHECK(braid_equal(BraidWord(3, {1, -1}), BraidWord(3)));
  CHECK_FALSE(braid_equal(BraidWord(3, {1}), BraidWord(3, {2})));
  CHECK_THROWS_AS(braid_equal(BraidWord(3), BraidWord(4)), StrandMismatch);
}

TEST_CASE("normal form factors are left-weighted proper simples") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto nf = normal_form(oracle::random_braid(rng, n, 40));
    for (std::size_t i = 0; i < nf.factors.size(); ++i) {
      CHECK_FALSE(nf.factors[i].is_identity());
      CHECK(nf.factors[i] != Permutation::reversal(n));
      if (i + 1 < nf.factors.size()) {
        CHECK(oracle::left_weighted(nf.factors[i], nf.factors[i + 1]));
        CHECK(left_weighted(nf.factors[i], nf.factors[i + 1]));
      }
    }
  }
}

TEST_CASE("left_weighted agrees with the length criterion on all pairs, n = 4") {
  std::vector<int> img{1, 2, 3, 4};
  std::vector<Permutation> all;
  do {
    all.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  for (const auto& a : all)
    for (const auto& b : all) CHECK(left_weighted(a, b) == oracle::left_weighted(a, b));
}

TEST_CASE("normal form round trip and Burau agreement") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const BraidWord w = oracle::random_braid(rng, n, 30);
    const auto nf = normal_form(w);
    const BraidWord back = to_word(nf);
    CHECK(normal_form(back) == nf);
    CHECK(oracle::burau(back) == oracle::burau(w));
  }
}

TEST_CASE("multiply and multiply_letter match concatenation") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const BraidWord u = oracle::random_braid(rng, n, 15);
    const BraidWord v = oracle::random_braid(rng, n, 15);
    CHECK(multiply(normal_form(u), normal_form(v)) == normal_form(u * v));
    GarsideNormalForm x = normal_form(u);
    for (const auto& l : v.letters()) multiply_letter(x, l);
    CHECK(x == normal_form(u * v));
  }
}

TEST_CASE("normal form is invariant under relation moves") {
  std::mt19937_64 rng(17);
  int trials = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);  // 2..6
    BraidWord w = oracle::random_braid(rng, n, 20);
    const auto key = normal_form(w).key();
    for (int m = 0; m < 10; ++m) w = braid_move(rng, w);
    CHECK(normal_form(w).key() == key);
    ++trials;
  }
  CHECK(trials >= 1000);
}

TEST_CASE("w times its inverse is trivial") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const BraidWord w = oracle::random_braid(rng, n, 25);
    CHECK(normal_form(w * w.inverse()) == identity_form(n));
    CHECK(normal_form(w.inverse() * w) == identity_form(n));
  }
}

TEST_CASE("braid_equal agrees with the Burau oracle on three strands") {
  std::mt19937_64 rng(23);
  int equal = 0;
  for (int t = 0; t < 2000; ++t) {
    const BraidWord u = oracle::random_braid(rng, 3, static_cast<int>(rng() % 8));
    const BraidWord v = oracle::random_braid(rng, 3, static_cast<int>(rng() % 8));
    const bool eq = braid_equal(u, v);
    CHECK(eq == (oracle::burau(u) == oracle::burau(v)));
    equal += eq;
  }
  CHECK(equal > 20);
}

TEST_CASE("transversal examples") {
  CHECK(transversal_rep(Permutation(3)).empty());
  CHECK(transversal_rep(perm({2, 1})) == BraidWord(2, {1}));
  CHECK(transversal_rep(perm({3, 1, 2})) == BraidWord(3, {1, 2}));
}

TEST_CASE("transversal is a bijection onto chain products, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    // Every chain M_{n-1,j_{n-1}} ⋯ M_{1,j_1}, enumerated directly.
    std::map<Permutation, BraidWord> chains;
    std::vector<int> choice(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) choice[static_cast<std::size_t>(i - 1)] = i - 1;
    for (;;) {
      BraidWord w(n);
      for (int i = n - 1; i >= 1; --i) {
        for (int q = i; q <= choice[static_cast<std::size_t>(i - 1)]; ++q) w.push_back({q, 1});
      }
      const bool fresh = chains.emplace(permutation_of(w), w).second;
      CHECK(fresh);
      int i = 1;
      while (i < n && ++choice[static_cast<std::size_t>(i - 1)] > n - 1) {
        choice[static_cast<std::size_t>(i - 1)] = i - 1;
        ++i;
      }
      if (i == n) break;
    }
    long fact = 1;
    for (int q = 2; q <= n; ++q) fact *= q;
    CHECK(static_cast<long>(chains.size()) == fact);
    for (const auto& [p, w] : chains) {
      CHECK(transversal_rep(p) == w);
      CHECK(permutation_of(transversal_rep(p)) == p);
    }
  }
}

TEST_CASE("named words") {
  CHECK(word_a(3, 1, 1) == BraidWord(3, {1, 1}));
  CHECK(word_a(4, 1, 3) == BraidWord(4, {1, 2, 3, 3, -2, -1}));
  CHECK(word_M(4, 2, 3) == BraidWord(4, {2, 3}));
  CHECK(word_M(4, 2, 1).empty());
  CHECK(permutation_of(word_delta(5)) == Permutation::reversal(5));
  const BraidWord c3 = word_a(3, 1, 2) * word_a(3, 1, 1) * word_a(3, 2, 2);
  CHECK(word_center(3) == c3);
  CHECK_THROWS_AS(word_a(3, 2, 1), IndexOutOfRange);
  CHECK_THROWS_AS(word_a(3, 1, 3), IndexOutOfRange);
}

TEST_CASE("the center generator is the full twist and is central, n = 3, 4, 5") {
  for (int n = 3; n <= 5; ++n) {
    const BraidWord c = word_center(n);
    CHECK(permutation_of(c).is_identity());
    CHECK(normal_form(c).inf == 2);
    CHECK(normal_form(c).factors.empty());
    for (int i = 1; i < n; ++i) {
      const BraidWord s(n, {i});
      CHECK(braid_equal(c * s, s * c));
      CHECK(oracle::burau(c * s) == oracle::burau(s * c));
    }
  }
}
