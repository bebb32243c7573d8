#include "hooklab/rational.hpp"

#include <stdexcept>

namespace hooklab {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  if (s.front() == '+') {
    s.remove_prefix(1);
  }
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1));
  }
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) {
    return r.get_num().get_str();
  }
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

mpz_class height(const Rational& r) {
  mpz_class n = abs(r.get_num());
  return n > r.get_den() ? n : mpz_class(r.get_den());
}

}  // namespace hooklab
