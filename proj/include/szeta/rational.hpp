#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "szeta/tableaux.hpp"

namespace szeta {

using Rational = mpq_class;
using RationalTableau = Tableau<Rational>;

// base^(-s) for integer s
Rational inv_power(const Rational& base, int s);

// accepts "3", "-1/2", "0.25"
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// exact height-n truncation of the Schur-Hurwitz sum for integer exponents and rational shifts
Rational schur_truncated_exact(const IntTableau& s, const RationalTableau& x, long n);

}  // namespace szeta
