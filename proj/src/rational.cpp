#include "hitchin/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hitchin {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = 0;
  auto scan_int = [&]() {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0) throw std::invalid_argument("malformed rational literal: " + s);
    return s.substr(start, pos - start);
  };
  std::string num = scan_int();
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = scan_int();
  }
  if (pos != s.size()) throw std::invalid_argument("malformed rational literal: " + s);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(Integer(num), d);
}

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer n = numerator(r), d = denominator(r);
  Integer sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace hitchin
