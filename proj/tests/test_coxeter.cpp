#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "slp/coxeter.hpp"
#include "slp/errors.hpp"

using namespace slp;

namespace {

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "D2", "D3", "D4",
                                         "I2:3", "I2:5", "I2:7", "I2:12", "H3", "A1xI2:5", "A1xA2"};

Vector rational_vector(const RootSystem& rs, std::initializer_list<int> v) {
  Vector out;
  for (int x : v) out.push_back(rs.field().from_rational(x));
  return out;
}

} // namespace

TEST(CoxeterType, ParseSpellings) {
  EXPECT_EQ(CoxeterType::parse("A2").to_string(), "A2");
  EXPECT_EQ(CoxeterType::parse("I2:5").to_string(), "I2(5)");
  EXPECT_EQ(CoxeterType::parse("I2(5)").to_string(), "I2(5)");
  EXPECT_EQ(CoxeterType::parse("I2_5").to_string(), "I2(5)");
  EXPECT_EQ(CoxeterType::parse("G2").to_string(), "I2(6)");
  EXPECT_EQ(CoxeterType::parse("A1xB2").factors.size(), 2u);
}

TEST(CoxeterType, RejectsUnsupported) {
  EXPECT_THROW(CoxeterType::parse("H4"), UnsupportedType);
  EXPECT_THROW(CoxeterType::parse("E6"), UnsupportedType);
  EXPECT_THROW(CoxeterType::parse("A5"), UnsupportedType);
  EXPECT_THROW(CoxeterType::parse("I2:31"), UnsupportedType);
  EXPECT_THROW(CoxeterType::parse("I2:2"), UnsupportedType);
  EXPECT_THROW(CoxeterType::parse("I2:5xH3"), UnsupportedType);  // two irrational fields
  EXPECT_THROW(CoxeterType::parse("Z9"), UnsupportedType);
}

TEST(CoxeterType, GroupOrdersAndDegrees) {
  struct Row {
    const char* type;
    long long order;
    int reflections;
    std::vector<int> degrees;
  };
  const std::vector<Row> rows = {
      {"A2", 6, 3, {2, 3}},       {"A3", 24, 6, {2, 3, 4}},   {"A4", 120, 10, {2, 3, 4, 5}},
      {"B2", 8, 4, {2, 4}},       {"B3", 48, 9, {2, 4, 6}},   {"D4", 192, 12, {2, 4, 4, 6}},
      {"I2:7", 14, 7, {2, 7}},    {"H3", 120, 15, {2, 6, 10}},
  };
  for (const auto& r : rows) {
    const auto t = CoxeterType::parse(r.type);
    EXPECT_EQ(static_cast<long long>(t.group_order()), r.order) << r.type;
    EXPECT_EQ(t.reflection_count(), r.reflections) << r.type;
    EXPECT_EQ(t.degrees(), r.degrees) << r.type;
  }
}

TEST(RootSystem, SpecificCounts) {
  auto a2 = build_root_system("A2");
  EXPECT_EQ(a2->positive_roots().size(), 3u);
  EXPECT_EQ(a2->degrees(), (std::vector<int>{2, 3}));
  auto i7 = build_root_system("I2:7");
  EXPECT_EQ(i7->positive_roots().size(), 7u);
  auto h3 = build_root_system("H3");
  EXPECT_EQ(h3->positive_roots().size(), 15u);
}

TEST(RootSystem, DihedralRootsAreRotations) {
  const int m = 7;
  auto rs = build_root_system("I2:" + std::to_string(m));
  for (int k = 0; k < m; ++k) {
    const Vector& b = rs->positive_roots()[static_cast<size_t>(k)];
    EXPECT_NEAR(b[0].approx(), std::cos(k * M_PI / m), 1e-12) << k;
    EXPECT_EQ(rs->inner(b, b), rs->field().one());
  }
  EXPECT_EQ(rs->simple_root_position(0), 0);
  EXPECT_EQ(rs->simple_root_position(1), m - 1);
}

class RootSystemProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(RootSystemProperties, ReflectionsAreInvolutionsPermutingRoots) {
  auto rs = build_root_system(GetParam());
  const NumberField& f = rs->field();
  const Matrix id = identity_matrix(rs->dimension(), f);
  const int n = rs->reflection_count();
  for (int k = 0; k < n; ++k) {
    const Matrix& s = rs->reflections()[static_cast<size_t>(k)];
    const Vector& b = rs->positive_roots()[static_cast<size_t>(k)];
    ASSERT_EQ(s * s, id);
    Vector neg = b;
    for (auto& x : neg) x = -x;
    ASSERT_EQ(s * b, neg);
    std::vector<bool> hit(2 * static_cast<size_t>(n), false);
    for (const auto& r : rs->positive_roots()) {
      const int idx = rs->root_index(s * r);
      ASSERT_GE(idx, 0);
      hit[static_cast<size_t>(idx)] = true;
      Vector minus = r;
      for (auto& x : minus) x = -x;
      const int jdx = rs->root_index(s * minus);
      ASSERT_GE(jdx, 0);
      hit[static_cast<size_t>(jdx)] = true;
    }
    ASSERT_EQ(std::count(hit.begin(), hit.end(), true), 2 * n);
  }
}

TEST_P(RootSystemProperties, WeightDuality) {
  auto rs = build_root_system(GetParam());
  for (int i = 0; i < rs->rank(); ++i)
    for (int j = 0; j < rs->rank(); ++j) {
      const FieldElement p = rs->coroot_pairing(rs->fundamental_weights()[static_cast<size_t>(i)], j);
      EXPECT_EQ(p, i == j ? rs->field().one() : rs->field().zero());
      const FieldElement d = dot(rs->simple_dual_forms()[static_cast<size_t>(i)], rs->simple_roots()[static_cast<size_t>(j)]);
      EXPECT_EQ(d, i == j ? rs->field().one() : rs->field().zero());
    }
}

TEST_P(RootSystemProperties, GroupCensusMatchesPoincare) {
  auto rs = build_root_system(GetParam());
  const auto g = enumerate_group(*rs);
  const auto census = g.length_census();
  const auto poincare = poincare_polynomial(*rs);
  ASSERT_EQ(census.size(), poincare.size());
  for (size_t d = 0; d < census.size(); ++d) EXPECT_EQ(census[d], poincare[d]) << "degree " << d;
  EXPECT_EQ(g.size(), rs->type().group_order());
  EXPECT_EQ(g.max_length(), rs->reflection_count());
  EXPECT_EQ(std::accumulate(poincare.begin(), poincare.end(), 0LL), static_cast<long long>(rs->type().group_order()));
  for (size_t d = 0; d < poincare.size(); ++d) EXPECT_EQ(poincare[d], poincare[poincare.size() - 1 - d]);
}

TEST_P(RootSystemProperties, GroupOperationsConsistent) {
  auto rs = build_root_system(GetParam());
  const auto g = enumerate_group(*rs);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<size_t> pick(0, g.size() - 1);
  for (int t = 0; t < 30; ++t) {
    const size_t a = pick(rng), b = pick(rng);
    EXPECT_EQ(g[g.multiply(a, b)].matrix, g[a].matrix * g[b].matrix);
    EXPECT_EQ(g.multiply(a, g.inverse(a)), 0u);
    Matrix w = identity_matrix(rs->dimension(), rs->field());
    for (int s : g[a].word) w = w * rs->simple_reflection(s);
    EXPECT_EQ(w, g[a].matrix);
    EXPECT_EQ(static_cast<int>(g[a].word.size()), g[a].length);
  }
}

TEST_P(RootSystemProperties, ChamberRepresentativeIsDominant) {
  auto rs = build_root_system(GetParam());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Vector l = random_form(*rs, rng);
    const auto cr = chamber_representative(*rs, l);
    ASSERT_TRUE(is_dominant(*rs, cr.form));
    ASSERT_EQ(act_on_form(cr.w_inverse, l), cr.form);
    ASSERT_EQ(cr.w * cr.w_inverse, identity_matrix(rs->dimension(), rs->field()));
  }
}

TEST_P(RootSystemProperties, CriterionIsEquivariant) {
  auto rs = build_root_system(GetParam());
  const auto g = enumerate_group(*rs);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<size_t> pick(0, g.size() - 1);
  for (int t = 0; t < 40; ++t) {
    Vector l = random_form(*rs, rng, 2);
    if (t % 2) l = project_to_mirror(*rs, l, static_cast<int>(t % rs->reflection_count()));
    const auto& w = g[pick(rng)];
    const Vector moved = act_on_form(inverse(w.matrix, rs->field()), l);
    ASSERT_EQ(sle_criterion(*rs, l), sle_criterion(*rs, moved));
  }
}

INSTANTIATE_TEST_SUITE_P(Types, RootSystemProperties, ::testing::ValuesIn(kTypes),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return s;
                         });

TEST(Poincare, Examples) {
  EXPECT_EQ(poincare_polynomial(*build_root_system("A2")), (std::vector<long long>{1, 2, 2, 1}));
  EXPECT_EQ(poincare_polynomial(*build_root_system("A3")), (std::vector<long long>{1, 3, 5, 6, 5, 3, 1}));
  for (int m = 3; m <= 12; ++m) {
    const auto p = poincare_polynomial(*build_root_system("I2:" + std::to_string(m)));
    ASSERT_EQ(p.size(), static_cast<size_t>(m) + 1);
    for (int d = 1; d < m; ++d) EXPECT_EQ(p[static_cast<size_t>(d)], 2);
  }
}

TEST(GroupEnumeration, Examples) {
  EXPECT_EQ(enumerate_group(*build_root_system("A2")).length_census(), (std::vector<int>{1, 2, 2, 1}));
  EXPECT_EQ(enumerate_group(*build_root_system("I2:5")).length_census(), (std::vector<int>{1, 2, 2, 2, 2, 1}));
  const auto h3 = enumerate_group(*build_root_system("H3"));
  EXPECT_EQ(h3.size(), 120u);
  EXPECT_EQ(h3.max_length(), 15);
}

TEST(GroupEnumeration, BudgetExceeded) {
  EXPECT_THROW(enumerate_group(*build_root_system("H3"), 50), BudgetExceeded);
}

TEST(ReflectionCriterion, TypeAExamples) {
  auto rs = build_root_system("A2");
  // Positive root x1 - x2 is the first root whose mirror contains a1 = a2.
  int root = -1;
  for (int k = 0; k < rs->reflection_count(); ++k)
    if (rs->positive_roots()[static_cast<size_t>(k)] == rational_vector(*rs, {1, -1, 0})) root = k;
  ASSERT_GE(root, 0);
  EXPECT_TRUE(is_fixed_by_reflection(*rs, rational_vector(*rs, {1, 1, -2}), root));
  EXPECT_TRUE(sle_criterion(*rs, rational_vector(*rs, {1, 0, -1})));
  EXPECT_FALSE(sle_criterion(*rs, rational_vector(*rs, {1, 1, -2})));
  for (int k = 0; k < rs->reflection_count(); ++k)
    EXPECT_FALSE(is_fixed_by_reflection(*rs, rs->positive_roots()[static_cast<size_t>(k)], k));
  EXPECT_THROW(is_fixed_by_reflection(*rs, rational_vector(*rs, {1, 0}), 0), DimensionMismatch);
}

TEST(ReflectionCriterion, ChamberInteriorIsGeneric) {
  for (const char* t : {"I2:5", "H3", "B3"}) {
    auto rs = build_root_system(t);
    Vector l = rs->zero_vector();
    for (const auto& w : rs->weight_forms())
      for (size_t i = 0; i < l.size(); ++i) l[i] += w[i];
    for (int k = 0; k < rs->reflection_count(); ++k) EXPECT_FALSE(is_fixed_by_reflection(*rs, l, k)) << t;
    EXPECT_TRUE(sle_criterion(*rs, l)) << t;
    EXPECT_TRUE(is_dominant(*rs, l));
  }
}

TEST(ChamberRepresentative, Examples) {
  auto a2 = build_root_system("A2");
  const auto dominant = chamber_representative(*a2, rational_vector(*a2, {1, 0, -1}));
  EXPECT_TRUE(dominant.word.empty());
  const auto cr = chamber_representative(*a2, rational_vector(*a2, {-1, 0, 1}));
  EXPECT_EQ(cr.form, rational_vector(*a2, {1, 0, -1}));
  EXPECT_EQ(cr.word.size(), 3u);

  auto i5 = build_root_system("I2:5");
  Vector l = i5->zero_vector();
  for (const auto& w : i5->weight_forms())
    for (size_t i = 0; i < l.size(); ++i) l[i] -= w[i];
  const auto r = chamber_representative(*i5, l);
  for (int j = 0; j < 2; ++j) EXPECT_EQ(dot(r.form, i5->simple_roots()[static_cast<size_t>(j)]).sign(), 1);
  EXPECT_EQ(r.word.size(), 5u);
}
