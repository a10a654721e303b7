#include "hitchin/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hitchin {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_[e] = Rational(1);
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable arity mismatch");
  MultiPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly operator*(const Rational& s, MultiPoly p) {
  if (s == 0) return MultiPoly(p.nvars_);
  for (auto& [e, c] : p.terms_) c = s * c;
  return p;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  MultiPoly acc = constant(nvars_, 1);
  MultiPoly b = *this;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return acc;
}

MultiPoly MultiPoly::remap(int new_nvars, const std::vector<int>& var_map) const {
  if (static_cast<int>(var_map.size()) != nvars_) throw std::invalid_argument("remap arity mismatch");
  MultiPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(new_nvars, 0);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      int j = var_map[i];
      if (j < 0 || j >= new_nvars) throw std::out_of_range("remap target out of range");
      ne[j] += e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_) throw std::invalid_argument("name arity mismatch");
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    Rational ac = abs(c);
    bool any_var = false;
    for (int i = 0; i < nvars_; ++i) any_var = any_var || e[i] > 0;
    if (ac != 1 || !any_var) os << rational_to_string(ac);
    bool need_star = (ac != 1);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace hitchin
