#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qc {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace qc
