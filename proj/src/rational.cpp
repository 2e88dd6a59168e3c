#include "locmat/rational.hpp"

#include <cctype>
#include <string>

#include "locmat/error.hpp"

namespace locmat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num)) throw ParseError("bad numerator in '" + std::string(text) + "'", 0);
    if (!all_digits(den)) {
      throw ParseError("bad denominator in '" + std::string(text) + "'", slash + 1);
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    result = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw ParseError("bad decimal '" + std::string(text) + "'", 0);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    std::string digits = std::string(whole) + std::string(frac);
    result = Rational(mpz_class(digits, 10), scale);
  } else {
    if (!all_digits(body)) throw ParseError("bad number '" + std::string(text) + "'", 0);
    result = Rational(mpz_class(std::string(body), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace locmat
