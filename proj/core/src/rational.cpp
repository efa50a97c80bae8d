#include "freeimm/rational.hpp"

#include <cctype>

#include "freeimm/error.hpp"

namespace freeimm {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw ValidationError({"malformed rational \"" + std::string(text) + "\""});
  }
  BigInt d = parse_integer(den);
  if (d == 0) throw ValidationError({"zero denominator in \"" + std::string(text) + "\""});
  return make_rational(parse_integer(num), d);
}

int sign(const Rational& r) { return sgn(r); }
int sign(const BigInt& z) { return sgn(z); }

bool is_canonical(const Rational& r) {
  if (r.get_den() <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return g == 1;
}

}  // namespace freeimm
