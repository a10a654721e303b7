#include "hitchin/laurent.hpp"

#include <stdexcept>

namespace hitchin {

LaurentPoly::LaurentPoly(const Poly& p) : min_(0), c_(p.coeffs()) { normalize(); }

LaurentPoly LaurentPoly::monomial(int k, const Rational& c) {
  LaurentPoly r;
  if (c == 0) return r;
  r.min_ = k;
  r.c_ = {c};
  return r;
}

void LaurentPoly::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    min_ = 0;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
  min_ += static_cast<int>(lead);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw std::domain_error("min_exp of zero Laurent polynomial");
  return min_;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw std::domain_error("max_exp of zero Laurent polynomial");
  return min_ + static_cast<int>(c_.size()) - 1;
}

Rational LaurentPoly::coeff(int k) const {
  if (is_zero() || k < min_ || k > max_exp()) return Rational(0);
  return c_[static_cast<std::size_t>(k - min_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  int lo = std::min(min_, o.min_);
  int hi = std::max(max_exp(), o.max_exp());
  std::vector<Rational> v(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (int k = min_; k <= max_exp(); ++k) v[static_cast<std::size_t>(k - lo)] = coeff(k);
  for (int k = o.min_; k <= o.max_exp(); ++k) v[static_cast<std::size_t>(k - lo)] += o.coeff(k);
  min_ = lo;
  c_ = std::move(v);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.min_ = a.min_ + b.min_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

LaurentPoly operator*(const Rational& s, LaurentPoly p) {
  if (s == 0) return LaurentPoly();
  for (auto& x : p.c_) x *= s;
  return p;
}

LaurentPoly LaurentPoly::part_at_least(int k) const {
  LaurentPoly r;
  if (is_zero() || max_exp() < k) return r;
  int lo = std::max(k, min_);
  r.min_ = lo;
  r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(lo - min_), c_.end());
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::part_at_most(int k) const {
  LaurentPoly r;
  if (is_zero() || min_ > k) return r;
  int hi = std::min(k, max_exp());
  r.min_ = min_;
  r.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(hi - min_ + 1));
  r.normalize();
  return r;
}

bool LaurentPoly::supported_in(int lo, int hi) const {
  if (is_zero()) return true;
  return min_exp() >= lo && max_exp() <= hi;
}

Poly LaurentPoly::nonnegative_part() const {
  LaurentPoly p = part_at_least(0);
  if (p.is_zero()) return Poly();
  std::vector<Rational> v(static_cast<std::size_t>(p.max_exp() + 1), Rational(0));
  for (int k = p.min_exp(); k <= p.max_exp(); ++k) v[static_cast<std::size_t>(k)] = p.coeff(k);
  return Poly(std::move(v));
}

}  // namespace hitchin
