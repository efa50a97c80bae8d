#include "freeimm/trig_poly.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "freeimm/error.hpp"

namespace freeimm {

namespace {

void add_to(TrigPoly::Coeffs& m, int k, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = m.try_emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) m.erase(it);
  }
}

void prune_map(TrigPoly::Coeffs& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second == 0) {
      it = m.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

TrigPoly::TrigPoly(Rational constant, Coeffs cos_coeffs, Coeffs sin_coeffs)
    : constant_(std::move(constant)), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
  for (const auto& m : {std::cref(cos_), std::cref(sin_)}) {
    for (const auto& [k, v] : m.get()) {
      if (k < 1) throw Error("trig polynomial frequencies must be >= 1");
    }
  }
  prune();
}

TrigPoly TrigPoly::cos(int k, const Rational& c) {
  if (k == 0) return TrigPoly(c);
  return TrigPoly(0, {{k, c}}, {});
}

TrigPoly TrigPoly::sin(int k, const Rational& c) {
  if (k == 0) return {};
  return TrigPoly(0, {}, {{k, c}});
}

void TrigPoly::prune() {
  prune_map(cos_);
  prune_map(sin_);
}

Rational TrigPoly::cos_coeff(int k) const {
  auto it = cos_.find(k);
  return it == cos_.end() ? Rational(0) : it->second;
}

Rational TrigPoly::sin_coeff(int k) const {
  auto it = sin_.find(k);
  return it == sin_.end() ? Rational(0) : it->second;
}

int TrigPoly::max_frequency() const {
  int f = 0;
  if (!cos_.empty()) f = std::max(f, cos_.rbegin()->first);
  if (!sin_.empty()) f = std::max(f, sin_.rbegin()->first);
  return f;
}

TrigPoly TrigPoly::derivative() const {
  TrigPoly d;
  for (const auto& [k, a] : cos_) d.sin_.emplace(k, -a * k);
  for (const auto& [k, b] : sin_) d.cos_.emplace(k, b * k);
  return d;
}

Rational TrigPoly::eval_weierstrass(const Rational& t0) const {
  const int n = max_frequency();
  Rational value = constant_;
  if (n == 0) return value;
  const Rational denom = 1 + t0 * t0;
  const Rational c1 = (1 - t0 * t0) / denom;
  const Rational s1 = 2 * t0 / denom;
  // cos kz = 2 cos z cos (k-1)z - cos (k-2)z, likewise for sin.
  Rational c_prev = 1, c_cur = c1;
  Rational s_prev = 0, s_cur = s1;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      Rational c_next = 2 * c1 * c_cur - c_prev;
      Rational s_next = 2 * c1 * s_cur - s_prev;
      c_prev = std::move(c_cur);
      c_cur = std::move(c_next);
      s_prev = std::move(s_cur);
      s_cur = std::move(s_next);
    }
    if (auto it = cos_.find(k); it != cos_.end()) value += it->second * c_cur;
    if (auto it = sin_.find(k); it != sin_.end()) value += it->second * s_cur;
  }
  return value;
}

Rational TrigPoly::eval_at_pi() const {
  Rational value = constant_;
  for (const auto& [k, a] : cos_) {
    if (k % 2 == 0) {
      value += a;
    } else {
      value -= a;
    }
  }
  return value;
}

double TrigPoly::evaluate(double z) const {
  double value = constant_.get_d();
  for (const auto& [k, a] : cos_) value += a.get_d() * std::cos(k * z);
  for (const auto& [k, b] : sin_) value += b.get_d() * std::sin(k * z);
  return value;
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly r = *this;
  r.constant_ = -r.constant_;
  for (auto& [k, v] : r.cos_) v = -v;
  for (auto& [k, v] : r.sin_) v = -v;
  return r;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  constant_ += o.constant_;
  for (const auto& [k, v] : o.cos_) add_to(cos_, k, v);
  for (const auto& [k, v] : o.sin_) add_to(sin_, k, v);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
  constant_ -= o.constant_;
  for (const auto& [k, v] : o.cos_) add_to(cos_, k, -v);
  for (const auto& [k, v] : o.sin_) add_to(sin_, k, -v);
  return *this;
}

TrigPoly& TrigPoly::operator*=(const Rational& c) {
  if (c == 0) return *this = TrigPoly();
  constant_ *= c;
  for (auto& [k, v] : cos_) v *= c;
  for (auto& [k, v] : sin_) v *= c;
  return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  // Dense accumulation indexed by frequency, then pruned.
  const int n = a.max_frequency() + b.max_frequency();
  std::vector<Rational> cs(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> ss(static_cast<std::size_t>(n) + 1);

  auto add_cos = [&](int k, const Rational& v) { cs[static_cast<std::size_t>(std::abs(k))] += v; };
  auto add_sin = [&](int k, const Rational& v) {
    // sin(-k z) = -sin(k z); sin 0 = 0
    if (k > 0) {
      ss[static_cast<std::size_t>(k)] += v;
    } else if (k < 0) {
      ss[static_cast<std::size_t>(-k)] -= v;
    }
  };

  // constant terms
  add_cos(0, a.constant_ * b.constant_);
  for (const auto& [k, v] : b.cos_) add_cos(k, a.constant_ * v);
  for (const auto& [k, v] : b.sin_) add_sin(k, a.constant_ * v);
  for (const auto& [k, v] : a.cos_) add_cos(k, b.constant_ * v);
  for (const auto& [k, v] : a.sin_) add_sin(k, b.constant_ * v);

  for (const auto& [i, x] : a.cos_) {
    for (const auto& [j, y] : b.cos_) {
      Rational h = x * y / 2;  // cos i cos j = (cos(i-j) + cos(i+j))/2
      add_cos(i - j, h);
      add_cos(i + j, h);
    }
    for (const auto& [j, y] : b.sin_) {
      Rational h = x * y / 2;  // cos i sin j = (sin(i+j) - sin(i-j))/2
      add_sin(i + j, h);
      add_sin(i - j, -h);
    }
  }
  for (const auto& [i, x] : a.sin_) {
    for (const auto& [j, y] : b.cos_) {
      Rational h = x * y / 2;  // sin i cos j = (sin(i+j) + sin(i-j))/2
      add_sin(i + j, h);
      add_sin(i - j, h);
    }
    for (const auto& [j, y] : b.sin_) {
      Rational h = x * y / 2;  // sin i sin j = (cos(i-j) - cos(i+j))/2
      add_cos(i - j, h);
      add_cos(i + j, -h);
    }
  }

  TrigPoly r;
  r.constant_ = cs[0];
  for (int k = 1; k <= n; ++k) {
    if (cs[static_cast<std::size_t>(k)] != 0) r.cos_.emplace(k, cs[static_cast<std::size_t>(k)]);
    if (ss[static_cast<std::size_t>(k)] != 0) r.sin_.emplace(k, ss[static_cast<std::size_t>(k)]);
  }
  return r;
}

std::string TrigPoly::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, const std::string& fn, int k) {
    if (c == 0) return;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (fn.empty()) {
      os << mag.get_str();
      return;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << fn << "(";
    if (k != 1) os << k;
    os << var << ")";
  };
  term(constant_, "", 0);
  const int n = max_frequency();
  for (int k = 1; k <= n; ++k) {
    term(cos_coeff(k), "cos", k);
    term(sin_coeff(k), "sin", k);
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TrigPoly& p) { return os << p.to_string(); }

}  // namespace freeimm
