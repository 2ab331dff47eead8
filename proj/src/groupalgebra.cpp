#include "twistinv/groupalgebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace twistinv {

GroupAlgebraElement GroupAlgebraElement::monomial(const Weight& exp, const Rat& coeff,
                                                  LatticeTag tag) {
  GroupAlgebraElement e(exp.size(), tag);
  e.add_term(exp, coeff);
  return e;
}

GroupAlgebraElement GroupAlgebraElement::constant(size_t rank, const Rat& c, LatticeTag tag) {
  return monomial(Weight(rank, 0), c, tag);
}

Rat GroupAlgebraElement::coeff(const Weight& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rat(0) : it->second;
}

void GroupAlgebraElement::add_term(const Weight& exp, const Rat& c) {
  if (exp.size() != rank_) throw std::invalid_argument("add_term: rank mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("group algebra rank mismatch");
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("group algebra rank mismatch");
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  r += o;
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  r -= o;
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("group algebra rank mismatch");
  GroupAlgebraElement r(rank_, tag_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Rat& c) const {
  GroupAlgebraElement r(rank_, tag_);
  if (c == 0) return r;
  for (auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const { return *this * Rat(-1); }

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
  return rank_ == o.rank_ && terms_ == o.terms_;
}

GroupAlgebraElement GroupAlgebraElement::map_exponents(
    const std::function<Weight(const Weight&)>& f) const {
  GroupAlgebraElement r;
  bool first = true;
  for (auto& [e, c] : terms_) {
    Weight fe = f(e);
    if (first) {
      r = GroupAlgebraElement(fe.size(), tag_);
      first = false;
    }
    r.add_term(fe, c);
  }
  if (first) r = GroupAlgebraElement(rank_, tag_);
  return r;
}

bool GroupAlgebraElement::divide_exact(const GroupAlgebraElement& o,
                                       GroupAlgebraElement* quotient) const {
  if (rank_ != o.rank_) throw std::invalid_argument("group algebra rank mismatch");
  if (o.is_zero()) return false;
  if (is_zero()) {
    if (quotient) *quotient = GroupAlgebraElement(rank_, tag_);
    return true;
  }
  // Newton polytopes add under multiplication, so any quotient exponent is
  // confined to the componentwise box [min(this)-min(o), max(this)-max(o)];
  // shifts outside the box witness non-divisibility and bound the loop.
  Weight lo(rank_), hi(rank_);
  {
    Weight tmin = terms_.begin()->first, tmax = tmin;
    for (auto& [e, c] : terms_)
      for (size_t i = 0; i < rank_; ++i) {
        tmin[i] = std::min(tmin[i], e[i]);
        tmax[i] = std::max(tmax[i], e[i]);
      }
    Weight omin = o.terms_.begin()->first, omax = omin;
    for (auto& [e, c] : o.terms_)
      for (size_t i = 0; i < rank_; ++i) {
        omin[i] = std::min(omin[i], e[i]);
        omax[i] = std::max(omax[i], e[i]);
      }
    lo = tmin - omin;
    hi = tmax - omax;
  }
  GroupAlgebraElement rem = *this;
  GroupAlgebraElement q(rank_, tag_);
  const auto& lead = *o.terms_.rbegin();  // lex-leading divisor term
  while (!rem.is_zero()) {
    const auto& top = *rem.terms_.rbegin();
    Weight shift = top.first - lead.first;
    for (size_t i = 0; i < rank_; ++i)
      if (shift[i] < lo[i] || shift[i] > hi[i]) return false;
    Rat c = top.second / lead.second;
    GroupAlgebraElement t = monomial(shift, c, tag_);
    q += t;
    rem -= t * o;  // strictly lowers the lex-leading remainder term
  }
  if (quotient) *quotient = q;
  return true;
}

bool GroupAlgebraElement::equals_up_to_monomial_unit(const GroupAlgebraElement& o, Rat* unit,
                                                     Weight* shift) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (terms_.size() != o.terms_.size()) return false;
  const auto& a = *terms_.rbegin();
  const auto& b = *o.terms_.rbegin();
  Weight mu = a.first - b.first;
  Rat c = a.second / b.second;
  for (auto& [e, v] : o.terms_)
    if (coeff(e + mu) != c * v) return false;
  if (unit) *unit = c;
  if (shift) *shift = mu;
  return true;
}

bool GroupAlgebraElement::equals_up_to_rational_unit(const GroupAlgebraElement& o,
                                                     Rat* unit) const {
  Rat c;
  Weight mu;
  if (!equals_up_to_monomial_unit(o, &c, &mu)) return false;
  if (!is_zero() && !twistinv::is_zero(mu)) return false;
  if (unit) *unit = c;
  return true;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c) << "*e[";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "]";
  }
  return os.str();
}

}  // namespace twistinv
