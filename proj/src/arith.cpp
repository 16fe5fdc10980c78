#include "untwist/arith.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "untwist/error.hpp"

namespace untwist {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

std::string to_string(const BigRational& q) {
  BigRational c(q);
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt parse_integer(std::string_view text) {
  if (!is_integer_text(text)) throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  return BigInt(std::string(text), 10);
}

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_text(num_text) || !is_integer_text(den_text) || den_text.front() == '-')
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  BigInt den = parse_integer(den_text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  BigRational q(parse_integer(num_text), den);
  q.canonicalize();
  return q;
}

BigRational mod2(const BigRational& q) {
  BigInt twice_den = 2 * q.get_den();
  BigInt k;
  mpz_fdiv_q(k.get_mpz_t(), q.get_num_mpz_t(), twice_den.get_mpz_t());
  BigRational r = q - BigRational(2 * k);
  return r;
}

bool is_even_integer(const BigRational& q) {
  return q.get_den() == 1 && mpz_even_p(q.get_num_mpz_t());
}

std::int64_t to_int64(const BigInt& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t()))
    throw Error(ErrorKind::InvalidArgument, "integer out of 64-bit range: " + z.get_str());
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return z.get_si();
}

}  // namespace untwist
