#include "freeimm/weierstrass.hpp"

#include <vector>

#include "freeimm/error.hpp"

namespace freeimm {

Rational WeierstrassForm::operator()(const Rational& t) const {
  Rational d = 1 + t * t;
  Rational den = 1;
  for (int i = 0; i < denom_power; ++i) den *= d;
  return numerator(t) / den;
}

WeierstrassForm reduce(WeierstrassForm w) {
  static const RatPoly one_plus_t2 = RatPoly::one_plus_t2_pow(1);
  if (w.numerator.is_zero()) return {RatPoly{}, 0};
  while (w.denom_power > 0) {
    auto [q, r] = divmod(w.numerator, one_plus_t2);
    if (!r.is_zero()) break;
    w.numerator = std::move(q);
    --w.denom_power;
  }
  return w;
}

WeierstrassForm to_weierstrass(const TrigPoly& a) {
  const int n = a.max_frequency();
  // cos kz = C_k(t)/(1+t^2)^k, sin kz = S_k(t)/(1+t^2)^k, built by angle addition.
  const RatPoly c1{1, 0, -1};
  const RatPoly s1{0, 2};
  std::vector<RatPoly> powers(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) powers[static_cast<std::size_t>(k)] = RatPoly::one_plus_t2_pow(k);

  RatPoly num = a.constant() * powers[static_cast<std::size_t>(n)];
  RatPoly ck = c1;
  RatPoly sk = s1;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      RatPoly next_c = c1 * ck - s1 * sk;
      RatPoly next_s = s1 * ck + c1 * sk;
      ck = std::move(next_c);
      sk = std::move(next_s);
    }
    const auto& lift = powers[static_cast<std::size_t>(n - k)];
    Rational ak = a.cos_coeff(k);
    Rational bk = a.sin_coeff(k);
    if (ak != 0) num += (ak * ck) * lift;
    if (bk != 0) num += (bk * sk) * lift;
  }
  return reduce({std::move(num), n});
}

TrigPoly from_weierstrass(const WeierstrassForm& w) {
  const int n = w.denom_power;
  if (w.numerator.degree() > 2 * n) {
    throw Error("numerator degree exceeds 2N; not the image of a trig polynomial");
  }
  if (w.numerator.is_zero()) return {};
  // With h = z/2: t^j / (1+t^2)^N = sin^j h cos^(2N-j) h. Work in h, then halve
  // every frequency (only even ones survive).
  const std::size_t top = static_cast<std::size_t>(2 * n);
  std::vector<TrigPoly> sin_pow(top + 1), cos_pow(top + 1);
  sin_pow[0] = 1;
  cos_pow[0] = 1;
  for (std::size_t i = 1; i <= top; ++i) {
    sin_pow[i] = sin_pow[i - 1] * TrigPoly::sin(1);
    cos_pow[i] = cos_pow[i - 1] * TrigPoly::cos(1);
  }
  TrigPoly in_h;
  for (int j = 0; j <= w.numerator.degree(); ++j) {
    Rational c = w.numerator.coeff(j);
    if (c == 0) continue;
    in_h += c * (sin_pow[static_cast<std::size_t>(j)] * cos_pow[top - static_cast<std::size_t>(j)]);
  }
  TrigPoly::Coeffs cs, ss;
  for (const auto& [k, v] : in_h.cos_coeffs()) {
    if (k % 2 != 0) throw Error("odd half-angle frequency in Weierstrass inverse");
    cs.emplace(k / 2, v);
  }
  for (const auto& [k, v] : in_h.sin_coeffs()) {
    if (k % 2 != 0) throw Error("odd half-angle frequency in Weierstrass inverse");
    ss.emplace(k / 2, v);
  }
  return TrigPoly(in_h.constant(), std::move(cs), std::move(ss));
}

LimitSign value_at_infinity_sign(const WeierstrassForm& w) {
  if (w.numerator.is_zero() || w.numerator.degree() < 2 * w.denom_power) return LimitSign::ZeroLimit;
  return sign(w.numerator.leading()) > 0 ? LimitSign::Positive : LimitSign::Negative;
}

}  // namespace freeimm
