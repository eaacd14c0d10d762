#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace multiassoc {

using Rational = mpq_class;
using Integer = mpz_class;

// integers bare, otherwise p/q in lowest terms
std::string format_rational(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace multiassoc
