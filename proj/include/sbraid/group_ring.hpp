#pragma once

// The integral group ring ZB_n, with terms keyed by Garside normal forms,
// and the desingularization map η: τ_i ↦ σ_i − σ_i⁻¹, σ_i ↦ σ_i.

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sbraid/braid.hpp"

namespace sbraid {

class SingularWord;

using Coefficient = boost::multiprecision::cpp_int;

class GroupRingElement {
 public:
  using Terms = std::map<GarsideNormalForm, Coefficient>;

  /// The zero element.
  explicit GroupRingElement(int strands);
  /// coeff · [nf]
  GroupRingElement(const GarsideNormalForm& nf, Coefficient coeff = 1);
  /// 1 · [w]
  static GroupRingElement of_braid(const BraidWord& w);
  static GroupRingElement one(int strands);

  int strands() const { return strands_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of [nf]; zero when absent.
  Coefficient coefficient(const GarsideNormalForm& nf) const;

  /// Adds coeff·[nf], pruning a resulting zero.
  void add_term(const GarsideNormalForm& nf, const Coefficient& coeff);

  /// "+3·[key] −1·[key] …"; "0" for the zero element.
  std::string render() const;

  friend bool operator==(const GroupRingElement&,
                         const GroupRingElement&) = default;

 private:
  int strands_;
  Terms terms_;
};

/// x + scalar·y
GroupRingElement gr_combine(const GroupRingElement& x,
                            const GroupRingElement& y,
                            const Coefficient& scalar);
GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y);
bool gr_equal(const GroupRingElement& x, const GroupRingElement& y);

GroupRingElement operator+(const GroupRingElement& x,
                           const GroupRingElement& y);
GroupRingElement operator-(const GroupRingElement& x,
                           const GroupRingElement& y);
GroupRingElement operator*(const GroupRingElement& x,
                           const GroupRingElement& y);

/// Image of a singular word. Has at most 2^degree terms.
GroupRingElement eta(const SingularWord& w);

}  // namespace sbraid
