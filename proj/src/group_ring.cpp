#include "sbraid/group_ring.hpp"

#include <sstream>

#include "sbraid/error.hpp"
#include "sbraid/singular.hpp"

namespace sbraid {

namespace {

void check_same(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.strands() != y.strands()) throw StrandMismatch(x.strands(), y.strands());
}

}  // namespace

GroupRingElement::GroupRingElement(int strands) : strands_(strands) {}

GroupRingElement::GroupRingElement(const GarsideNormalForm& nf,
                                   Coefficient coeff)
    : strands_(nf.strands) {
  if (coeff != 0) terms_.emplace(nf, std::move(coeff));
}

GroupRingElement GroupRingElement::of_braid(const BraidWord& w) {
  return GroupRingElement(normal_form(w));
}

GroupRingElement GroupRingElement::one(int strands) {
  return GroupRingElement(identity_form(strands));
}

Coefficient GroupRingElement::coefficient(const GarsideNormalForm& nf) const {
  auto it = terms_.find(nf);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void GroupRingElement::add_term(const GarsideNormalForm& nf,
                                const Coefficient& coeff) {
  if (nf.strands != strands_) throw StrandMismatch(strands_, nf.strands);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(nf, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string GroupRingElement::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [nf, c] : terms_) {
    if (!first) out << ' ';
    first = false;
    out << (c < 0 ? "−" : "+") << (c < 0 ? Coefficient(-c) : c) << "·["
        << nf.key() << ']';
  }
  return out.str();
}

GroupRingElement gr_combine(const GroupRingElement& x,
                            const GroupRingElement& y,
                            const Coefficient& scalar) {
  check_same(x, y);
  GroupRingElement out = x;
  if (scalar == 0) return out;
  for (const auto& [nf, c] : y.terms()) out.add_term(nf, scalar * c);
  return out;
}

GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y) {
  check_same(x, y);
  GroupRingElement out(x.strands());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      out.add_term(multiply(kx, ky), cx * cy);
    }
  }
  return out;
}

bool gr_equal(const GroupRingElement& x, const GroupRingElement& y) {
  check_same(x, y);
  return x.terms() == y.terms();
}

GroupRingElement operator+(const GroupRingElement& x,
                           const GroupRingElement& y) {
  return gr_combine(x, y, 1);
}

GroupRingElement operator-(const GroupRingElement& x,
                           const GroupRingElement& y) {
  return gr_combine(x, y, -1);
}

GroupRingElement operator*(const GroupRingElement& x,
                           const GroupRingElement& y) {
  return gr_mul(x, y);
}

GroupRingElement eta(const SingularWord& w) {
  ++op_counters().eta_expansions;
  const int n = w.strands();
  // Multiply letter by letter so that terms which coincide merge early.
  GroupRingElement::Terms current{{identity_form(n), Coefficient(1)}};
  for (const auto& letter : w.letters()) {
    if (!letter.is_tau()) {
      GroupRingElement::Terms next;
      for (auto& [nf, c] : current) {
        GarsideNormalForm key = nf;
        multiply_letter(key, {letter.index, letter.sign});
        next.emplace(std::move(key), std::move(c));
      }
      current = std::move(next);
      continue;
    }
    GroupRingElement acc(n);
    for (const auto& [nf, c] : current) {
      GarsideNormalForm up = nf;
      multiply_letter(up, {letter.index, 1});
      acc.add_term(up, c);
      GarsideNormalForm down = nf;
      multiply_letter(down, {letter.index, -1});
      acc.add_term(down, -c);
    }
    current = acc.terms();
  }
  GroupRingElement out(n);
  for (const auto& [nf, c] : current) out.add_term(nf, c);
  return out;
}

}  // namespace sbraid
