#pragma once

#include <functional>
#include <map>
#include <string>

#include "twistinv/rational.hpp"
#include "twistinv/weight.hpp"

namespace twistinv {

enum class LatticeTag { FullTorus, FixedSublattice };

// An element of the group algebra k[X(T)] (or of k[X(A)] when tagged):
// a finitely supported map weight -> exact rational. Multiplication obeys
// e^a * e^b = e^{a+b}. No zero coefficients are ever stored.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(size_t rank, LatticeTag tag = LatticeTag::FullTorus)
      : rank_(rank), tag_(tag) {}

  static GroupAlgebraElement monomial(const Weight& exp, const Rat& coeff,
                                      LatticeTag tag = LatticeTag::FullTorus);
  static GroupAlgebraElement constant(size_t rank, const Rat& c,
                                      LatticeTag tag = LatticeTag::FullTorus);

  size_t rank() const { return rank_; }
  LatticeTag tag() const { return tag_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const std::map<Weight, Rat>& terms() const { return terms_; }

  Rat coeff(const Weight& exp) const;
  void add_term(const Weight& exp, const Rat& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const Rat& c) const;
  GroupAlgebraElement operator-() const;
  bool operator==(const GroupAlgebraElement& o) const;

  // Applies a lattice map to every exponent.
  GroupAlgebraElement map_exponents(const std::function<Weight(const Weight&)>& f) const;

  // Exact division; returns false when o does not divide *this.
  // On success *quotient holds this / o.
  bool divide_exact(const GroupAlgebraElement& o, GroupAlgebraElement* quotient) const;

  // True iff *this = c * e^mu * o for a nonzero rational c and lattice
  // point mu; reports the unit parts when requested.
  bool equals_up_to_monomial_unit(const GroupAlgebraElement& o, Rat* unit = nullptr,
                                  Weight* shift = nullptr) const;

  // True iff *this = c * o for a nonzero rational c.
  bool equals_up_to_rational_unit(const GroupAlgebraElement& o, Rat* unit = nullptr) const;

  std::string to_string() const;  // deterministic, sorted by exponent

 private:
  size_t rank_ = 0;
  LatticeTag tag_ = LatticeTag::FullTorus;
  std::map<Weight, Rat> terms_;
};

}  // namespace twistinv
