#include "vnat/rational.hpp"

#include <limits>
#include <stdexcept>

namespace vnat {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto check_digits = [&](std::string_view part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start == part.size()) throw std::invalid_argument("malformed rational: " + std::string(text));
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  check_digits(num, true);
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  Integer n(num_str);
  Integer d(1);
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    check_digits(den, false);
    d = Integer(std::string(den));
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Integer binomial(std::int64_t m, std::int64_t i) {
  if (i < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (std::int64_t t = 0; t < i; ++t) {
    num *= Integer(static_cast<long>(m - t));
    den *= Integer(static_cast<long>(t + 1));
  }
  return num / den;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac_part(const Rational& e) {
  Rational r = e - Rational(floor(e));
  r.canonicalize();
  return r;
}

}  // namespace vnat
