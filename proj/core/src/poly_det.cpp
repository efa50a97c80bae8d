#include "freeimm/poly_det.hpp"

#include <algorithm>
#include <utility>

#include "freeimm/error.hpp"

namespace freeimm {

namespace {

// Dense polynomial over Z, trimmed; empty = 0.
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

ZPoly sub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a / d where d divides a exactly in Z[t].
ZPoly div_exact(ZPoly a, const ZPoly& d) {
  if (d.empty()) throw ZeroPolynomial();
  if (a.empty()) return {};
  if (a.size() < d.size()) throw Error("inexact polynomial division in Bareiss step");
  const std::size_t dd = d.size() - 1;
  ZPoly q(a.size() - dd);
  BigInt f;
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_divexact(f.get_mpz_t(), a[k + dd].get_mpz_t(), d[dd].get_mpz_t());
    if (f == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) mpz_submul(a[k + j].get_mpz_t(), f.get_mpz_t(), d[j].get_mpz_t());
    q[k] = f;
  }
  trim(q);
  return q;
}

}  // namespace

RatPoly bareiss_determinant(const Matrix<RatPoly>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionMismatch("determinant of a non-square matrix");
  }
  if (n == 0) return RatPoly::constant(1);

  // Row i is multiplied by scale[i] (positive) to land in Z[t].
  Rational total_scale = 1;
  std::vector<std::vector<ZPoly>> a(n, std::vector<ZPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    BigInt den_lcm = 1;
    for (const auto& e : m[i]) {
      for (const auto& c : e.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
      }
    }
    total_scale *= den_lcm;
    for (std::size_t j = 0; j < n; ++j) {
      ZPoly z;
      z.reserve(m[i][j].coeffs().size());
      for (const auto& c : m[i][j].coeffs()) z.push_back(c.get_num() * (den_lcm / c.get_den()));
      a[i][j] = std::move(z);
    }
  }

  int det_sign = 1;
  ZPoly prev{BigInt(1)};
  for (std::size_t k = 0; k < n; ++k) {
    // pivot: nonzero entry of lowest degree in column k
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].empty()) continue;
      if (piv == n || a[i][k].size() < a[piv][k].size()) piv = i;
    }
    if (piv == n) return {};
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det_sign = -det_sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ZPoly num = mul(a[k][k], a[i][j]);
        if (!a[i][k].empty() && !a[k][j].empty()) num = sub(std::move(num), mul(a[i][k], a[k][j]));
        a[i][j] = div_exact(std::move(num), prev);
      }
      a[i][k].clear();
    }
    prev = a[k][k];
  }

  std::vector<Rational> coeffs;
  coeffs.reserve(a[n - 1][n - 1].size());
  for (auto& c : a[n - 1][n - 1]) coeffs.emplace_back(c * det_sign);
  return RatPoly(std::move(coeffs)) * (1 / total_scale);
}

TrigDeterminant trig_determinant(const Matrix<TrigPoly>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionMismatch("determinant of a non-square matrix");
  }
  Matrix<RatPoly> cleared(n, std::vector<RatPoly>(n));
  int power = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int row_n = 0;
    for (const auto& e : m[i]) row_n = std::max(row_n, e.max_frequency());
    power += row_n;
    for (std::size_t j = 0; j < n; ++j) {
      WeierstrassForm w = to_weierstrass(m[i][j]);
      cleared[i][j] = w.numerator * RatPoly::one_plus_t2_pow(row_n - w.denom_power);
    }
  }
  RatPoly det = bareiss_determinant(cleared);
  TrigDeterminant out;
  out.cleared_power = power;
  out.form = reduce({std::move(det), power});
  out.value = from_weierstrass(out.form);
  return out;
}

}  // namespace freeimm
