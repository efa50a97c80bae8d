#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freeimm/rat_poly.hpp"

namespace freeimm {

/// S0 = p, S1 = p', S_{i+1} = -rem(S_{i-1}, S_i), stopping at the last
/// nonzero remainder. Terms from S2 on are rescaled by positive rationals to
/// primitive integer form; sign variations are unaffected.
struct SturmChain {
  std::vector<RatPoly> terms;

  std::vector<int> degrees() const;
  std::size_t size() const { return terms.size(); }
};

/// Where sign variations are counted: -inf, +inf or a finite rational.
struct ChainPoint {
  enum class Kind { MinusInfinity, PlusInfinity, Finite };
  Kind kind = Kind::Finite;
  Rational value;

  static ChainPoint minus_infinity() { return {Kind::MinusInfinity, {}}; }
  static ChainPoint plus_infinity() { return {Kind::PlusInfinity, {}}; }
  static ChainPoint at(Rational a) { return {Kind::Finite, std::move(a)}; }
};

struct SignTableRow {
  int index = 0;
  int degree = 0;
  int sign_minus_inf = 0;
  int sign_plus_inf = 0;

  friend bool operator==(const SignTableRow&, const SignTableRow&) = default;
};

enum class SignVerdict { PositiveOnR, NegativeOnR, PositiveOnInterval, NegativeOnInterval, HasRoots };

std::string to_string(SignVerdict v);
SignVerdict sign_verdict_from_string(const std::string& s);

struct SignDomain {
  /// Empty means all of R; otherwise the closed interval [a, b].
  std::optional<std::pair<Rational, Rational>> interval;

  static SignDomain all_reals() { return {}; }
  static SignDomain closed(Rational a, Rational b) { return {std::make_pair(std::move(a), std::move(b))}; }
  bool is_all_reals() const { return !interval.has_value(); }
};

struct PositivityCertificate {
  RatPoly polynomial;
  SignDomain domain;
  int v_low = 0;   // V(-inf) or V(a)
  int v_high = 0;  // V(+inf) or V(b)
  int real_root_count = 0;
  Rational sample_point;
  Rational sample_value;
  Rational leading_coefficient;
  SignVerdict verdict = SignVerdict::HasRoots;

  bool is_sign_definite() const { return verdict != SignVerdict::HasRoots; }
  /// +1 / -1 when sign-definite, 0 otherwise.
  int definite_sign() const;
};

SturmChain sturm_sequence(const RatPoly& p);

int sign_variations(const SturmChain& chain, const ChainPoint& at);

/// Number of distinct real roots.
int count_real_roots(const RatPoly& p);

/// Distinct roots in (a, b). Requires a < b and p(a), p(b) != 0.
int count_roots_in_interval(const RatPoly& p, const Rational& a, const Rational& b);

PositivityCertificate certify_sign(const RatPoly& p, const SignDomain& domain);

std::vector<SignTableRow> sign_table(const SturmChain& chain);

/// Plain aligned text, one row per chain term ("i | deg | sign(-inf) | sign(+inf)").
std::string render_sign_table(const std::vector<SignTableRow>& rows);

}  // namespace freeimm
