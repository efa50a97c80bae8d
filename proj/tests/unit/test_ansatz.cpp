#include <gtest/gtest.h>

#include "freeimm/ansatz.hpp"
#include "freeimm/error.hpp"
#include "freeimm/fixtures.hpp"
#include "freeimm/json_io.hpp"
#include "freeimm/registry.hpp"
#include "freeimm/weierstrass.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace freeimm;

namespace {

Matrix<int> blockdiag(const std::vector<int>& w, bool fixed) {
  const std::size_t n = 2 * w.size() + (fixed ? 1 : 0);
  Matrix<int> m(n, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < w.size(); ++j) {
    m[2 * j][2 * j + 1] = -w[j];
    m[2 * j + 1][2 * j] = w[j];
  }
  return m;
}

std::vector<std::string> labels(const std::vector<DerivativeIndex>& v) {
  std::vector<std::string> out;
  for (const auto& d : v) out.push_back(d.label());
  return out;
}

AnsatzSpec t2_with_loop(std::vector<TrigPoly> loop) {
  AnsatzSpec s = builtin_spec("t2");
  s.loop = std::move(loop);
  return s;
}

}  // namespace

TEST(Generators, T2AndT3) {
  const auto x = generator_matrices(builtin_spec("t2").weight_set);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x[0], blockdiag({1, 2}, true));
  const auto y = generator_matrices(builtin_spec("t3").weight_set);
  ASSERT_EQ(y.size(), 2u);
  EXPECT_EQ(y[0], blockdiag({1, 0, 1, 1}, true));
  EXPECT_EQ(y[1], blockdiag({0, 1, 1, -1}, true));
}

TEST(Generators, ZeroWeightKillsBlock) {
  WeightSet ws{1, {{0}, {3}}, false};
  const std::vector<Rational> v{1, 2, 3, 4};
  const auto out = apply_generator<Rational>(ws, 0, v);
  EXPECT_EQ(out, (std::vector<Rational>{0, 0, -12, 9}));
}

TEST(Generators, Commute) {
  const WeightSet ws = builtin_spec("t4").weight_set;
  oracle::Gen g(41);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> v;
    for (int i = 0; i < ws.target_dim(); ++i) v.push_back(g.rational());
    for (int i = 0; i < ws.k; ++i) {
      for (int j = 0; j < ws.k; ++j) {
        const auto a = apply_generator<Rational>(ws, i, apply_generator<Rational>(ws, j, v));
        const auto b = apply_generator<Rational>(ws, j, apply_generator<Rational>(ws, i, v));
        EXPECT_EQ(a, b);
      }
    }
  }
}

TEST(WeightSet, Validation) {
  WeightSet dup{1, {{1}, {1}}, true};
  try {
    dup.validate();
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("weights pairwise distinct violated"), std::string::npos);
  }
  WeightSet ragged{2, {{1, 0}, {1}}, false};
  EXPECT_THROW(ragged.validate(), Error);
  WeightSet odd_index{1, {{1}, {2}}, true, 1};
  EXPECT_THROW(odd_index.validate(), Error);
  EXPECT_EQ((WeightSet{1, {{1}, {2}}, true}.target_dim()), 5);
}

TEST(Columns, CanonicalAndLexicographic) {
  EXPECT_EQ(labels(column_indices(1, 2, {})), (std::vector<std::string>{"x1", "z", "x1x1", "x1z", "zz"}));
  EXPECT_EQ(labels(column_indices(2, 2, {})),
            (std::vector<std::string>{"x1", "x2", "z", "x1x1", "x1x2", "x2x2", "x1z", "x2z", "zz"}));
  EXPECT_EQ(labels(column_indices(2, 2, {OrderingKind::Lexicographic, {}})),
            (std::vector<std::string>{"x1", "x2", "z", "x1x1", "x1x2", "x1z", "x2x2", "x2z", "zz"}));
  const auto k3 = labels(column_indices(1, 3, {}));
  ASSERT_EQ(k3.size(), 9u);
  EXPECT_EQ(std::vector<std::string>(k3.end() - 4, k3.end()),
            (std::vector<std::string>{"x1x1x1", "x1x1z", "x1zz", "zzz"}));
}

TEST(Columns, ExplicitOrderingMustBePermutation) {
  ColumnOrdering ok{OrderingKind::Explicit,
                    {DerivativeIndex::parse("z", 1), DerivativeIndex::parse("x1", 1), DerivativeIndex::parse("zz", 1),
                     DerivativeIndex::parse("x1z", 1), DerivativeIndex::parse("x1x1", 1)}};
  EXPECT_EQ(column_indices(1, 2, ok).size(), 5u);
  ColumnOrdering bad = ok;
  bad.explicit_columns.pop_back();
  EXPECT_THROW(column_indices(1, 2, bad), ValidationError);
  EXPECT_THROW(DerivativeIndex::parse("y1", 1), ValidationError);
  EXPECT_THROW(DerivativeIndex::parse("x3", 2), ValidationError);
}

TEST(Columns, CountIsCriticalDimension) {
  for (int k = 0; k <= 4; ++k) {
    for (int order = 1; order <= 4; ++order) {
      EXPECT_EQ(static_cast<long>(column_indices(k, order, {}).size()), critical_dimension(k + 1, order));
    }
  }
  EXPECT_EQ(critical_dimension(2, 2), 5);
  EXPECT_EQ(critical_dimension(4, 2), 14);
  EXPECT_EQ(critical_dimension(5, 2), 20);
  EXPECT_EQ(critical_dimension(2, 3), 9);
  EXPECT_EQ(critical_dimension(2, 6), 27);
}

TEST(DerivativeFamily, Shapes) {
  const auto t2 = derivative_family(builtin_spec("t2"));
  EXPECT_EQ(t2.dimension, 5);
  EXPECT_EQ(labels(t2.ordering), (std::vector<std::string>{"x1", "z", "x1x1", "x1z", "zz"}));
  EXPECT_EQ(derivative_family(builtin_spec("t4")).columns.size(), 14u);
  EXPECT_EQ(derivative_family(builtin_spec("kfree3")).columns.size(), 9u);
  AnsatzSpec short_loop = builtin_spec("t2");
  short_loop.loop.pop_back();
  EXPECT_THROW(derivative_family(short_loop), DimensionMismatch);
}

TEST(OsculatingDet, Examples) {
  EXPECT_EQ(osculating_det(derivative_family(builtin_spec("circle"))), TrigPoly(1));
  const TrigPoly d = TrigPoly(-12) + TrigPoly::cos(1, 15) + TrigPoly::sin(1, -4) + TrigPoly::cos(2, -4) +
                     TrigPoly::sin(2, Rational(5, 2));
  EXPECT_EQ(osculating_det(derivative_family(builtin_spec("t2"))), d);
  const AnsatzSpec constant = t2_with_loop({TrigPoly(2), TrigPoly(1), TrigPoly(0), TrigPoly(1), TrigPoly(0)});
  EXPECT_TRUE(osculating_det(derivative_family(constant)).is_zero());
}

TEST(OsculatingDet, PermutationParity) {
  AnsatzSpec s = builtin_spec("t3");
  const TrigPoly lex = osculating_det(derivative_family(s));
  s.ordering = {};
  const TrigPoly canonical = osculating_det(derivative_family(s));
  // canonical and lexicographic order differ by one transposition at k = 2
  EXPECT_EQ(canonical, -lex);
  EXPECT_EQ(to_weierstrass(lex).numerator(0), Rational(45, 2));
}

TEST(OsculatingDet, ColumnSwapNegates) {
  const auto fam = derivative_family(builtin_spec("t2"));
  auto swapped = fam;
  std::swap(swapped.columns[0], swapped.columns[4]);
  EXPECT_EQ(osculating_det(swapped), -osculating_det(fam));
}

TEST(OsculatingDet, FullMatrixAgreesAtTheOrigin) {
  for (const char* name : {"t2", "t3", "t4", "kfree3"}) {
    const AnsatzSpec spec = builtin_spec(name);
    const auto fam = derivative_family(spec);
    const TrigPoly d = osculating_det(fam);
    const std::vector<Rational> sx(static_cast<std::size_t>(spec.weight_set.k), Rational(1, 3));
    for (const Rational& t : {Rational(0), Rational(2), Rational(-3, 7)}) {
      EXPECT_EQ(oracle::gauss_determinant(oracle::full_osculating_matrix(spec, sx, t, fam.ordering)),
                d.eval_weierstrass(t))
          << name;
    }
  }
}

TEST(AnsatzProperty, XIndependence) {
  const auto r = oracle::x_independence(42, 220);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_GE(r.cases, 200);
}

TEST(Obstruction, Examples) {
  const auto m6 = obstruction_check(6, std::nullopt);
  EXPECT_FALSE(m6.passes);
  EXPECT_EQ(m6.summary(), "fails: floor(q_m/2)=13 < 15");
  const auto m7 = obstruction_check(7, std::nullopt);
  EXPECT_FALSE(m7.passes);
  EXPECT_EQ(m7.blocks, 17);
  EXPECT_EQ(m7.required_blocks, 21);
  for (int m = 2; m <= 5; ++m) {
    const auto r = obstruction_check(m, builtin_weight_set(m));
    EXPECT_TRUE(r.passes) << r.summary();
    EXPECT_EQ(r.quadratic_rank, (m - 1) * m / 2);
  }
  const auto m5 = obstruction_check(5, builtin_weight_set(5));
  EXPECT_EQ(m5.blocks, 10);
  // rank deficiency: weights on a line
  WeightSet line{2, {{1, 0}, {2, 0}, {3, 0}}, false};
  const auto bad = obstruction_check(3, line);
  EXPECT_TRUE(bad.count_ok);
  EXPECT_FALSE(bad.rank_ok);
  EXPECT_FALSE(bad.passes);
  WeightSet wrong_k{1, {{1}, {2}}, true};
  EXPECT_THROW(obstruction_check(3, wrong_k), DimensionMismatch);
}

TEST(Extended, ReducedMatrixOfPublishedInstance) {
  const Json doc = Json::parse(fixture_text("t4-extended"));
  const ExtendedAnsatzSpec spec = extended_spec_from_json(doc.at("spec"));
  const ReducedMatrix m = extended_reduced_matrix(spec);
  ASSERT_EQ(m.entries.size(), 10u);
  EXPECT_EQ(m.column_labels.front(), "x1");
  EXPECT_EQ(m.column_labels.back(), "uv");
  const TrigDeterminant det = trig_determinant(m.entries);
  const RatPoly n = rat_poly_from_json(doc.at("published").at("numerator"));
  EXPECT_EQ(det.form.numerator, Rational(76544) * n);
  EXPECT_EQ(det.form.denom_power, 6);
  EXPECT_EQ(companion_determinant(spec), -1);
}

TEST(Extended, ZeroLogDerivativesGiveConstantDeterminant) {
  const Json doc = Json::parse(fixture_text("t4-extended"));
  ExtendedAnsatzSpec spec = extended_spec_from_json(doc.at("spec"));
  for (auto& q : spec.logderivs) q = TrigPoly();
  spec.mu = {1, 2, 3, 4, 5};
  EXPECT_TRUE(trig_determinant(extended_reduced_matrix(spec).entries).value.is_constant());
}

TEST(Extended, StructureErrors) {
  const Json doc = Json::parse(fixture_text("t4-extended"));
  ExtendedAnsatzSpec spec = extended_spec_from_json(doc.at("spec"));
  ExtendedAnsatzSpec fewer = spec;
  fewer.mu.pop_back();
  EXPECT_THROW(extended_reduced_matrix(fewer), StructureError);
  ExtendedAnsatzSpec wrong_count = spec;
  wrong_count.weight_set.weights.pop_back();
  wrong_count.mu.pop_back();
  wrong_count.logderivs.pop_back();
  EXPECT_THROW(extended_reduced_matrix(wrong_count), StructureError);
  ExtendedAnsatzSpec flat = spec;
  flat.companion_u = {TrigPoly::cos(1), TrigPoly::cos(1)};
  EXPECT_THROW(companion_determinant(flat), StructureError);
}
