#include <gtest/gtest.h>

#include "freeimm/collar.hpp"
#include "freeimm/error.hpp"
#include "freeimm/fixtures.hpp"
#include "freeimm/json_io.hpp"
#include "freeimm/sturm.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace freeimm;

namespace {

RatPoly published(const char* name, const char* field = "numerator") {
  const Json doc = Json::parse(fixture_text(name));
  return rat_poly_from_json(doc.at("published").at(field));
}

}  // namespace

TEST(Sturm, SmallChains) {
  const SturmChain a = sturm_sequence(RatPoly{-1, 0, 1});
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a.terms[1], (RatPoly{0, 2}));
  EXPECT_EQ(a.terms[2], (RatPoly{1}));
  const SturmChain b = sturm_sequence(RatPoly{1, 0, 1});
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b.terms[2], (RatPoly{-1}));
  EXPECT_THROW(sturm_sequence(RatPoly()), ZeroPolynomial);
}

TEST(Sturm, FirstTermsAreExact) {
  const RatPoly p({Rational(1, 3), Rational(-5, 2), Rational(0), Rational(7, 4)});
  const SturmChain c = sturm_sequence(p);
  EXPECT_EQ(c.terms[0], p);
  EXPECT_EQ(c.terms[1], p.derivative());
}

TEST(Sturm, Variations) {
  const SturmChain c = sturm_sequence(RatPoly{-1, 0, 1});
  EXPECT_EQ(sign_variations(c, ChainPoint::minus_infinity()), 2);
  EXPECT_EQ(sign_variations(c, ChainPoint::plus_infinity()), 0);
  // zero entries are skipped: at t = 0 the chain is (-1, 0, 1)
  EXPECT_EQ(sign_variations(c, ChainPoint::at(0)), 1);
}

TEST(Sturm, RootCounts) {
  EXPECT_EQ(count_real_roots(RatPoly{1, 0, 1}), 0);
  EXPECT_EQ(count_real_roots(RatPoly{1, -2, 0, 18, 31}), 0);
  EXPECT_EQ(count_real_roots(published("t3")), 0);
  EXPECT_EQ(count_roots_in_interval(RatPoly{-1, 0, 1}, 0, 2), 1);
  EXPECT_THROW(count_roots_in_interval(RatPoly{-1, 0, 1}, 1, 2), EndpointIsRoot);
  EXPECT_THROW(count_real_roots(RatPoly()), ZeroPolynomial);
  // a double root is counted once
  EXPECT_EQ(count_real_roots(RatPoly{1, -2, 1}), 1);
}

TEST(Sturm, CollarPolynomialsHaveNoRootsOnUnitInterval) {
  const CollarProfile p = reference_collar_profile();
  EXPECT_EQ(count_roots_in_interval(published("collar", "K"), 0, 1), 0);
  EXPECT_EQ(count_roots_in_interval(p.a, 0, 1), 0);
}

TEST(Sturm, T4AndT5Chains) {
  const SturmChain c4 = sturm_sequence(published("t4"));
  ASSERT_EQ(c4.size(), 23u);
  for (int i = 0; i < 23; ++i) EXPECT_EQ(c4.degrees()[static_cast<std::size_t>(i)], 22 - i);
  EXPECT_EQ(sign_variations(c4, ChainPoint::minus_infinity()), 11);
  EXPECT_EQ(sign_variations(c4, ChainPoint::plus_infinity()), 11);
  const SturmChain c5 = sturm_sequence(published("t5"));
  EXPECT_EQ(sign_variations(c5, ChainPoint::minus_infinity()), 15);
  EXPECT_EQ(sign_variations(c5, ChainPoint::plus_infinity()), 15);
}

TEST(Sturm, SignTables) {
  const auto rows = sign_table(sturm_sequence(RatPoly{-1, 0, 1}));
  const std::vector<SignTableRow> expected{{0, 2, 1, 1}, {1, 1, -1, 1}, {2, 0, 1, 1}};
  EXPECT_EQ(rows, expected);
  for (const char* name : {"t4", "t5"}) {
    const Json doc = Json::parse(fixture_text(name));
    EXPECT_EQ(to_json(sign_table(sturm_sequence(published(name)))), doc.at("published").at("sign_table")) << name;
  }
}

TEST(Sturm, RenderedTableIsAligned) {
  const std::string text = render_sign_table(sign_table(sturm_sequence(RatPoly{-1, 0, 1})));
  EXPECT_NE(text.find(" 0 |       2 |              + | +"), std::string::npos) << text;
}

TEST(Sturm, CertifySign) {
  const auto c = certify_sign(RatPoly{1, -2, 0, 18, 31}, SignDomain::all_reals());
  EXPECT_EQ(c.verdict, SignVerdict::PositiveOnR);
  EXPECT_EQ(c.sample_value, 1);
  EXPECT_EQ(c.leading_coefficient, 31);
  const auto q = certify_sign(published("t4"), SignDomain::all_reals());
  EXPECT_EQ(q.verdict, SignVerdict::NegativeOnR);
  EXPECT_EQ(q.sample_value, -160);
  const auto r = certify_sign(RatPoly{-1, 0, 1}, SignDomain::all_reals());
  EXPECT_EQ(r.verdict, SignVerdict::HasRoots);
  EXPECT_EQ(r.real_root_count, 2);
  EXPECT_EQ(r.real_root_count, r.v_low - r.v_high);
  const auto s = certify_sign(RatPoly{-1, 2}, SignDomain::closed(0, 1));
  EXPECT_EQ(s.verdict, SignVerdict::HasRoots);
  EXPECT_THROW(certify_sign(RatPoly{-1, 0, 1}, SignDomain::closed(-1, 0)), EndpointIsRoot);
  const auto neg = certify_sign(RatPoly{-3, 1}, SignDomain::closed(0, 2));
  EXPECT_EQ(neg.verdict, SignVerdict::NegativeOnInterval);
}

TEST(Sturm, VerdictStringsRoundTrip) {
  for (auto v : {SignVerdict::PositiveOnR, SignVerdict::NegativeOnR, SignVerdict::PositiveOnInterval,
                 SignVerdict::NegativeOnInterval, SignVerdict::HasRoots}) {
    EXPECT_EQ(sign_verdict_from_string(to_string(v)), v);
  }
}

TEST(SturmProperty, MatchesIsolationOracle) {
  const auto r = oracle::sturm_vs_isolation(11, 300);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_GE(r.cases, 200);
}

TEST(SturmProperty, IntegerCoefficientOracle) {
  oracle::Gen g(12);
  int cases = 0;
  for (int i = 0; i < 250; ++i) {
    std::vector<Rational> c;
    const int d = static_cast<int>(g.integer(1, 8));
    for (int k = 0; k <= d; ++k) c.push_back(Rational(g.integer(-20, 20)));
    const RatPoly p(std::move(c));
    if (p.degree() < 1) continue;
    ++cases;
    EXPECT_EQ(count_real_roots(p), oracle::isolate_real_roots(p)) << p;
    EXPECT_EQ(count_real_roots(p), count_real_roots(squarefree_part(p))) << p;
  }
  EXPECT_GE(cases, 200);
}

TEST(SturmProperty, IntervalAdditivity) {
  oracle::Gen g(13);
  int cases = 0;
  while (cases < 200) {
    const RatPoly p = g.poly_with_roots(8);
    if (p.degree() < 1) continue;
    Rational a = g.rational(6, 4), c = g.rational(6, 4), b = g.rational(6, 4);
    if (a > c) std::swap(a, c);
    if (c > b) std::swap(c, b);
    if (a > c) std::swap(a, c);
    if (a == c || c == b || p(a) == 0 || p(b) == 0 || p(c) == 0) continue;
    ++cases;
    EXPECT_EQ(count_roots_in_interval(p, a, b), count_roots_in_interval(p, a, c) + count_roots_in_interval(p, c, b));
  }
}

TEST(SturmProperty, DegreesStrictlyDecrease) {
  oracle::Gen g(14);
  for (int i = 0; i < 200; ++i) {
    const RatPoly p = g.poly(8);
    if (p.is_zero()) continue;
    const auto d = sturm_sequence(p).degrees();
    for (std::size_t k = 1; k < d.size(); ++k) EXPECT_LT(d[k], d[k - 1]);
  }
}
