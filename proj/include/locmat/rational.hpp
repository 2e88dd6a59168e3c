#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace locmat {

using Rational = mpq_class;

/// Accepts `p`, `p/q` and finite decimals such as `-0.25`. The result is
/// canonical (lowest terms, positive denominator).
Rational parse_rational(std::string_view text);

/// `p` for integers, `p/q` otherwise.
std::string format_rational(const Rational& value);

}  // namespace locmat
