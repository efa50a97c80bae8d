#include "freeimm/rat_poly.hpp"

#include <sstream>

#include "freeimm/error.hpp"

namespace freeimm {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::one_plus_t2_pow(int n) {
  // binomial expansion of (1+t^2)^n
  std::vector<Rational> v(static_cast<std::size_t>(2 * n) + 1);
  BigInt binom = 1;
  for (int k = 0; k <= n; ++k) {
    v[static_cast<std::size_t>(2 * k)] = binom;
    binom = binom * (n - k) / (k + 1);
  }
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& RatPoly::leading() const {
  if (is_zero()) throw ZeroPolynomial();
  return coeffs_.back();
}

Rational RatPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

double RatPoly::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const Rational inv_lead = 1 / b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = r[static_cast<std::size_t>(k + db)] * inv_lead;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(k + j)] -= f * bc[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly rem(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a;
  RatPoly y = b;
  while (!y.is_zero()) {
    RatPoly r = rem(x, y);
    x = std::move(y);
    y = primitive_part(r).first;
  }
  if (x.is_zero()) return x;
  return x * (1 / x.leading());
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  RatPoly g = gcd(p, p.derivative());
  RatPoly q = divmod(p, g).first;
  return q * (1 / q.leading());
}

std::pair<RatPoly, Rational> primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {p, Rational(1)};
  BigInt den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  BigInt num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    BigInt n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale = make_rational(den_lcm, num_gcd);
  return {p * scale, scale};
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.to_string(); }

}  // namespace freeimm
