#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace chromacode {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "num/den", "num", or a decimal-free integer string.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);
double to_double(const Rational& r);

Rational sum(const std::vector<Rational>& values);

}  // namespace chromacode
