#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <string>

namespace hitchin {

namespace mp = boost::multiprecision;

using Integer  = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;
using Cplx     = std::complex<double>;

// Parses "p", "-p" or "p/q" (q > 0 after normalisation).
// Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

// Canonical form: "p" for integers, "p/q" with q > 1 otherwise.
std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

// Exact square root when r is a perfect square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace hitchin
