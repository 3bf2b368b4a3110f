#include "sbraid/presentation.hpp"

#include <algorithm>

#include "sbraid/error.hpp"

namespace sbraid {

namespace {

using L = SingularLetter;

SingularWord word(int n, std::initializer_list<L> letters) {
  return SingularWord(n, std::vector<L>(letters));
}

// σ2 σ1² σ2
SingularWord omega(int n) {
  return word(n, {L::sigma(2), L::sigma(1), L::sigma(1), L::sigma(2)});
}

// σ2 σ3 σ1 σ2
SingularWord xi(int n) {
  return word(n, {L::sigma(2), L::sigma(3), L::sigma(1), L::sigma(2)});
}

// Sign variants of the braid-group relations, all consequences of the
// presentation, so that rewriting reaches words with inverse letters.
std::vector<Relation> braid_variants(int n) {
  std::vector<Relation> out;
  for (int i = 1; i + 1 < n; ++i) {
    const int k = i + 1;
    out.push_back({"braid", word(n, {L::sigma(i, -1), L::sigma(k, -1), L::sigma(i, -1)}),
                   word(n, {L::sigma(k, -1), L::sigma(i, -1), L::sigma(k, -1)})});
    out.push_back({"braid", word(n, {L::sigma(i), L::sigma(k), L::sigma(i, -1)}),
                   word(n, {L::sigma(k, -1), L::sigma(i), L::sigma(k)})});
    out.push_back({"braid", word(n, {L::sigma(k), L::sigma(i), L::sigma(k, -1)}),
                   word(n, {L::sigma(i, -1), L::sigma(k), L::sigma(i)})});
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          if (si == 1 && sj == 1) continue;
          out.push_back({"far", word(n, {L::sigma(i, si), L::sigma(j, sj)}),
                         word(n, {L::sigma(j, sj), L::sigma(i, si)})});
        }
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    if (i == 2) continue;
    out.push_back({"tau-sigma", word(n, {L::sigma(i, -1), L::tau(1)}),
                   word(n, {L::tau(1), L::sigma(i, -1)})});
  }
  return out;
}

}  // namespace

std::vector<Relation> presentation_relations(int n) {
  std::vector<Relation> out;
  for (int i = 1; i < n; ++i) {
    out.push_back({"free", word(n, {L::sigma(i), L::sigma(i, -1)}), SingularWord(n)});
    out.push_back({"free", word(n, {L::sigma(i, -1), L::sigma(i)}), SingularWord(n)});
  }
  for (int i = 1; i + 1 < n; ++i) {
    out.push_back({"braid", word(n, {L::sigma(i), L::sigma(i + 1), L::sigma(i)}),
                   word(n, {L::sigma(i + 1), L::sigma(i), L::sigma(i + 1)})});
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      out.push_back({"far", word(n, {L::sigma(i), L::sigma(j)}),
                     word(n, {L::sigma(j), L::sigma(i)})});
    }
  }
  if (n >= 3) {
    SingularWord lhs = omega(n);
    lhs.push_back(L::tau(1));
    SingularWord rhs = word(n, {L::tau(1)});
    rhs.append(omega(n));
    out.push_back({"tau-omega", lhs, rhs});
  }
  for (int i = 1; i < n; ++i) {
    if (i == 2) continue;
    out.push_back({"tau-sigma", word(n, {L::sigma(i), L::tau(1)}),
                   word(n, {L::tau(1), L::sigma(i)})});
  }
  if (n >= 4) {
    const SingularWord x = xi(n);
    const SingularWord t = word(n, {L::tau(1)});
    out.push_back({"tau-xi", x * t * x * t, t * x * t * x});
  }
  return out;
}

std::vector<Relation> singular_relations(int n) {
  std::vector<Relation> out;
  for (int i = 1; i < n; ++i) {
    for (int s : {1, -1}) {
      out.push_back({"tau-own-sigma", word(n, {L::sigma(i, s), L::tau(i)}),
                     word(n, {L::tau(i), L::sigma(i, s)})});
    }
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) >= 2) {
        for (int s : {1, -1}) {
          out.push_back({"tau-far-sigma", word(n, {L::sigma(j, s), L::tau(i)}),
                         word(n, {L::tau(i), L::sigma(j, s)})});
        }
        if (j > i) {
          out.push_back({"tau-far-tau", word(n, {L::tau(i), L::tau(j)}),
                         word(n, {L::tau(j), L::tau(i)})});
        }
      }
      if (std::abs(i - j) == 1) {
        out.push_back({"tau-braid", word(n, {L::sigma(i), L::sigma(j), L::tau(i)}),
                       word(n, {L::tau(j), L::sigma(i), L::sigma(j)})});
      }
    }
  }
  return out;
}

RelationRewriter::RelationRewriter(int strands, std::uint64_t seed,
                                   RewriteOptions options)
    : strands_(strands), options_(options), rng_(seed) {
  relations_ = presentation_relations(strands);
  auto variants = braid_variants(strands);
  relations_.insert(relations_.end(), variants.begin(), variants.end());
  if (!options_.tau_one_only) {
    auto extra = singular_relations(strands);
    relations_.insert(relations_.end(), extra.begin(), extra.end());
  }
}

int RelationRewriter::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

SingularLetter RelationRewriter::random_sigma() {
  return L::sigma(uniform(1, strands_ - 1), uniform(0, 1) == 0 ? 1 : -1);
}

SingularWord RelationRewriter::random_word(int length, int singular) {
  length = std::max(length, singular);
  std::vector<bool> is_tau(static_cast<std::size_t>(length), false);
  std::fill(is_tau.begin(), is_tau.begin() + singular, true);
  std::shuffle(is_tau.begin(), is_tau.end(), rng_);
  SingularWord out(strands_);
  for (bool t : is_tau) {
    if (t) {
      out.push_back(L::tau(options_.tau_one_only ? 1 : uniform(1, strands_ - 1)));
    } else {
      out.push_back(random_sigma());
    }
  }
  return out;
}

SingularWord RelationRewriter::random_word_with_plants(int length, int singular) {
  const bool plant =
      std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < options_.plant_probability;
  if (!plant) return random_word(length, singular);
  std::vector<const SingularWord*> sides;
  for (const auto& r : relations_) {
    for (const SingularWord* s : {&r.lhs, &r.rhs}) {
      if (!s->empty() && s->degree() <= singular) sides.push_back(s);
    }
  }
  const SingularWord& side =
      *sides[static_cast<std::size_t>(uniform(0, static_cast<int>(sides.size()) - 1))];
  const int rest_len = std::max(0, length - static_cast<int>(side.size()));
  SingularWord base = random_word(rest_len, singular - side.degree());
  const int at = uniform(0, static_cast<int>(base.size()));
  std::vector<SingularLetter> letters = base.letters();
  letters.insert(letters.begin() + at, side.letters().begin(), side.letters().end());
  return SingularWord(strands_, std::move(letters));
}

SingularWord RelationRewriter::random_braid(int length) {
  return random_word(length, 0);
}

bool RelationRewriter::try_move(SingularWord& w) {
  std::vector<SingularLetter> letters = w.letters();
  const int roll = uniform(0, 99);

  if (roll < 10 && strands_ >= 3) {
    // τ_1 ↦ ω⁻¹ τ_1 ω: a free insertion followed by the ω relation.
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (letters[i] == L::tau(1)) sites.push_back(i);
    }
    if (sites.empty()) return false;
    const std::size_t at =
        sites[static_cast<std::size_t>(uniform(0, static_cast<int>(sites.size()) - 1))];
    const SingularWord om = omega(strands_);
    std::vector<SingularLetter> repl;
    for (auto it = om.letters().rbegin(); it != om.letters().rend(); ++it) {
      repl.push_back(L::sigma(it->index, -it->sign));
    }
    repl.push_back(L::tau(1));
    repl.insert(repl.end(), om.letters().begin(), om.letters().end());
    letters.erase(letters.begin() + static_cast<long>(at));
    letters.insert(letters.begin() + static_cast<long>(at), repl.begin(), repl.end());
    w = SingularWord(strands_, std::move(letters));
    return true;
  }

  if (roll < 35) {
    // Free insertion.
    const SingularLetter s = random_sigma();
    const int at = uniform(0, static_cast<int>(letters.size()));
    letters.insert(letters.begin() + at, {s, L::sigma(s.index, -s.sign)});
    w = SingularWord(strands_, std::move(letters));
    return true;
  }

  // Any occurrence of any non-empty relation side, in either direction.
  struct Site {
    std::size_t at;
    const SingularWord* from;
    const SingularWord* to;
  };
  std::vector<Site> sites;
  for (const auto& r : relations_) {
    for (int dir = 0; dir < 2; ++dir) {
      const SingularWord& from = dir == 0 ? r.lhs : r.rhs;
      const SingularWord& to = dir == 0 ? r.rhs : r.lhs;
      if (from.empty() || from.size() > letters.size()) continue;
      for (std::size_t i = 0; i + from.size() <= letters.size(); ++i) {
        if (std::equal(from.letters().begin(), from.letters().end(),
                       letters.begin() + static_cast<long>(i))) {
          sites.push_back({i, &from, &to});
        }
      }
    }
  }
  if (sites.empty()) return false;
  const Site& site =
      sites[static_cast<std::size_t>(uniform(0, static_cast<int>(sites.size()) - 1))];
  const auto at = static_cast<long>(site.at);
  letters.erase(letters.begin() + at,
                letters.begin() + at + static_cast<long>(site.from->size()));
  letters.insert(letters.begin() + at, site.to->letters().begin(),
                 site.to->letters().end());
  w = SingularWord(strands_, std::move(letters));
  return true;
}

SingularWord RelationRewriter::rewrite(const SingularWord& w, int moves) {
  SingularWord out = w;
  int done = 0;
  int attempts = 0;
  while (done < moves && attempts < 50 * (moves + 1)) {
    ++attempts;
    if (try_move(out)) ++done;
  }
  return out;
}

SingularWord RelationRewriter::insert_pure_square(const SingularWord& w) {
  std::vector<SingularLetter> letters = w.letters();
  const SingularLetter s = random_sigma();
  const int at = uniform(0, static_cast<int>(letters.size()));
  letters.insert(letters.begin() + at, {s, s});
  return SingularWord(strands_, std::move(letters));
}

SingularWord RelationRewriter::conjugate_tau(const SingularWord& w) {
  std::vector<std::size_t> taus;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.letters()[i].is_tau()) taus.push_back(i);
  }
  if (taus.empty()) return insert_pure_square(w);
  const std::size_t at =
      taus[static_cast<std::size_t>(uniform(0, static_cast<int>(taus.size()) - 1))];
  const int k = uniform(1, strands_ - 1);
  const int j = uniform(k, strands_ - 1);
  BraidWord c = word_a(strands_, k, j);
  if (uniform(0, 1) == 1) c = c.inverse();
  std::vector<SingularLetter> letters = w.letters();
  const SingularLetter tau = letters[at];
  std::vector<SingularLetter> repl;
  for (const auto& l : c.letters()) repl.push_back(L::sigma(l.index, l.sign));
  repl.push_back(tau);
  const BraidWord c_inv = c.inverse();
  for (const auto& l : c_inv.letters()) repl.push_back(L::sigma(l.index, l.sign));
  letters.erase(letters.begin() + static_cast<long>(at));
  letters.insert(letters.begin() + static_cast<long>(at), repl.begin(), repl.end());
  return SingularWord(strands_, std::move(letters));
}

}  // namespace sbraid
