#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "slp/dihedral.hpp"
#include "slp/lefschetz.hpp"
#include "slp/parabolic.hpp"

using namespace slp;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::ostringstream&)> check;
};

std::vector<std::vector<int>> proper_subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask + 1 < (1 << rank); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < rank; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

bool hilbert_reproduction(std::ostringstream& note) {
  std::vector<std::string> types{"A2", "A3", "B2", "B3", "D4", "H3"};
  for (int m = 3; m <= 12; ++m) types.push_back("I2:" + std::to_string(m));
  int ok = 0;
  for (const auto& t : types) {
    auto ring = build_ring(t);
    const auto h = ring->hilbert_function();
    const auto p = poincare_polynomial(ring->root_system());
    ok += std::vector<long long>(h.begin(), h.end()) == p;
  }
  note << ok << "/" << types.size() << " rings";
  return ok == static_cast<int>(types.size());
}

bool equivalence_suite(std::ostringstream& note) {
  int cases = 0, bad = 0, top_bad = 0;
  for (const char* t : {"A2", "A3", "B2", "B3", "I2:5", "I2:6", "I2:7"}) {
    auto ring = build_ring(t);
    const auto& rs = ring->root_system();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      const Vector l = random_form(rs, rng);
      ++cases;
      bad += is_sle(*ring, l).result != sle_criterion(rs, l);
    }
    for (int k = 0; k < rs.reflection_count(); ++k) {
      const Vector l = project_to_mirror(rs, random_form(rs, rng), k);
      ++cases;
      bad += is_sle(*ring, l).result != sle_criterion(rs, l);
      top_bad += top_power_nonzero(*ring, l);
    }
  }
  note << cases << " forms, " << bad << " disagreements, " << top_bad << " mirror forms with nonzero top power";
  return bad == 0 && top_bad == 0;
}

bool discriminant_theorem(std::ostringstream& note) {
  int pairs = 0, bad = 0;
  for (int m = 3; m <= 30; ++m) {
    const NumberField& f = NumberField::two_cos_pi_over(m);
    for (int k = 1; k <= m - 2; ++k) {
      ++pairs;
      const auto d = dihedral::discriminant(m, k);
      const auto p = dihedral::pieri_matrices(m, k);
      bool same = true;
      for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{2, -3}}) {
        const FieldElement fa = f.from_rational(a), fb = f.from_rational(b);
        same = same && determinant(dihedral::assembled_matrix(p, fa, fb)) == dihedral::mult_determinant(m, k, fa, fb);
      }
      bad += !(d.sign < 0 && d.factorization_holds && same);
    }
  }
  note << pairs << " (m, k) pairs, " << bad << " failures";
  return bad == 0;
}

bool power_identity(std::ostringstream& note) {
  int ok = 0;
  for (int m = 2; m <= 10; ++m) ok += dihedral::power_identity_check(m);
  note << ok << "/9 orders";
  return ok == 9;
}

bool h3_rows(std::ostringstream& note) {
  struct Row {
    int level, total;
    std::array<int, 6> classes;
  };
  const std::array<Row, 2> rows{{{0, 84, {82, 1, 1, 0, 0, 0}}, {7, 88, {86, 1, 1, 0, 0, 0}}}};
  auto ring = build_ring("H3");
  const auto dets = symbolic_determinants(*ring, h3_table_weights(ring->root_system()), {0, 7});
  bool pass = true;
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& ld = dets[i];
    if (!ld.f) return false;
    const SignTable t = sign_table(normalize_global_sign(*ld.f, 1));
    bool classes = true;
    for (size_t c = 0; c < 6; ++c) classes = classes && t.counts[c] == rows[i].classes[c];
    pass = pass && t.total == rows[i].total && t.all_positive();
    note << (i ? "; " : "") << "f" << ld.level << " " << t.total << " terms " << (t.all_positive() ? "positive" : "not positive")
         << (classes ? ", classes match" : ", classes differ");
  }
  return pass;
}

bool parabolic_suite(std::ostringstream& note) {
  int subsets = 0, cases = 0, bad = 0;
  for (const char* t : {"A2", "A3", "B2", "B3"}) {
    auto ring = build_ring(t);
    const auto& rs = ring->root_system();
    const auto group = enumerate_group(rs);
    std::mt19937_64 rng(7);
    for (const auto& s : proper_subsets(rs.rank())) {
      ++subsets;
      const auto pd = parabolic_data(rs, s);
      const auto inv = invariant_basis(*ring, pd);
      const auto census = minimal_coset_census(rs, group, pd);
      bad += inv.hilbert_function() != census;
      for (int i = 0; i < 30; ++i) {
        const Vector l = random_parabolic_form(rs, pd, rng);
        ++cases;
        bad += is_sle_parabolic(*ring, pd, inv, l).result != sle_criterion_parabolic(rs, pd, l);
      }
      for (int k = 0; k < rs.reflection_count(); ++k) {
        if (root_in_parabolic(rs, pd.subset, k)) continue;
        const Vector l = mirror_parabolic_form(rs, pd, k, rng);
        ++cases;
        bad += is_sle_parabolic(*ring, pd, inv, l).result != sle_criterion_parabolic(rs, pd, l);
      }
    }
  }
  note << subsets << " subsets, " << cases << " forms, " << bad << " failures";
  return bad == 0;
}

bool oracle_cross_check(std::ostringstream& note) {
  int cases = 0, bad = 0;
  for (int m : {5, 6, 7}) {
    auto ring = build_ring("I2:" + std::to_string(m));
    const NumberField& f = ring->field();
    std::mt19937_64 rng(static_cast<unsigned>(m));
    std::uniform_int_distribution<int> c(-5, 5);
    for (int k = 1; k <= m - 2; ++k)
      for (int p = 0; p < 20; ++p) {
        int a = c(rng), b = c(rng);
        if (p == 0) a = b = 0;
        const FieldElement fa = f.from_rational(a), fb = f.from_rational(b);
        const bool closed = !determinant(dihedral::assembled_matrix(dihedral::pieri_matrices(m, k), fa, fb)).is_zero();
        const bool quotient = !dihedral::coinvariant_level_determinant(*ring, k, fa, fb).is_zero();
        ++cases;
        bad += closed != quotient;
      }
  }
  note << cases << " pairs, " << bad << " disagreements";
  return bad == 0;
}

bool property_suites(std::ostringstream& note) {
  int failures = 0;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int m : {5, 7, 8, 12}) {
    const NumberField& f = NumberField::two_cos_pi_over(m);
    auto random = [&] {
      FieldElement x = f.zero(), g = f.one();
      for (int i = 0; i < f.degree(); ++i, g *= f.generator()) x += f.from_rational(c(rng)) / f.from_rational(1 + (c(rng) + 9) % 4) * g;
      return x;
    };
    for (int i = 0; i < 1000; ++i) {
      const FieldElement a = random(), b = random(), d = random();
      failures += !((a + b) + d == a + (b + d) && a * (b + d) == a * b + a * d && a * b == b * a);
      failures += (a * b).sign() != a.sign() * b.sign();
      if (!a.is_zero()) failures += !(a * a.inverse()).is_one();
    }
  }
  int rings = 0;
  for (const char* t : {"A2", "A3", "B2", "B3", "D4", "H3", "I2:5", "I2:7", "I2:12"}) {
    auto ring = build_ring(t);
    ++rings;
    for (int d = 0; d <= ring->socle_degree(); ++d) failures += determinant(ring->poincare_pairing(d)).is_zero();
    failures += !ring->is_antiinvariant_top();
    const int n = ring->nvars();
    std::uniform_int_distribution<int> pick(0, n - 1), deg(0, std::min(ring->socle_degree() + 2, 8));
    auto random_poly = [&] {
      PolynomialBuilder b(n);
      for (int term = 0; term < 4; ++term) {
        Monomial mono;
        for (int e = deg(rng); e > 0; --e) {
          const int v = pick(rng);
          mono.set(v, mono[v] + 1);
        }
        b.add(mono, ring->field().from_rational(c(rng)));
      }
      return b.build();
    };
    for (int i = 0; i < 200; ++i) {
      const Polynomial p = random_poly(), q = random_poly();
      const Polynomial np = ring->normal_form(p);
      failures += !(ring->normal_form(np) == np);
      failures += !(ring->normal_form(p + q) == np + ring->normal_form(q));
    }
  }
  note << "4 fields x 1000 triples, " << rings << " rings, " << failures << " failures";
  return failures == 0;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Hilbert vectors equal Poincare polynomials", hilbert_reproduction},
      {2, "direct test agrees with the reflection criterion", equivalence_suite},
      {3, "dihedral discriminants negative, closed form equals assembled", discriminant_theorem},
      {4, "power identity for m = 2..10", power_identity},
      {5, "H3 levels 0 and 7: totals and sign classes", h3_rows},
      {6, "parabolic invariants: dimensions and criterion agreement", parabolic_suite},
      {7, "Pieri determinants agree with the quotient ring", oracle_cross_check},
      {8, "field, pairing, normal form and top-degree properties", property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream note;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  [%d] %s  (%s; %.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), note.str().c_str(), secs);
    std::fflush(stdout);
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
