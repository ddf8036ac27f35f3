#include "slp/dihedral.hpp"

#include <functional>
#include <unordered_map>

#include "slp/errors.hpp"

namespace slp::dihedral {

namespace {

void check_level(int m, int k) {
  if (m < 3) throw LevelOutOfRange("I2(m) needs m >= 3");
  if (k < 1 || k > m - 2)
    throw LevelOutOfRange("level " + std::to_string(k) + " outside 1.." + std::to_string(m - 2) + " for m = " +
                          std::to_string(m));
}

std::vector<int> alternating_word(int first, int length) {
  std::vector<int> w;
  for (int i = 0; i < length; ++i) w.push_back((first + i) % 2);
  return w;
}

// Exponent vectors of up to 12 variables packed 5 bits apiece.
using Packed = std::uint64_t;
constexpr int kBits = 5;

} // namespace

FieldElement p_value(int m, int k) {
  const FieldElement c = two_cos_pi(m);
  const NumberField& f = NumberField::two_cos_pi_over(m);
  if (k < 0) return -p_value(m, -k);
  FieldElement prev = f.zero(), cur = f.one();
  if (k == 0) return prev;
  for (int j = 1; j < k; ++j) {
    FieldElement next = c * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

int BruhatDiagram::node_a(int k) const {
  if (k == 0) return 0;
  if (k == m) return 2 * m - 1;
  return k;
}

int BruhatDiagram::node_b(int k) const {
  if (k == 0) return 0;
  if (k == m) return 2 * m - 1;
  return m - 1 + k;
}

BruhatDiagram bruhat_diagram(int m) {
  if (m < 3) throw LevelOutOfRange("I2(m) needs m >= 3");
  BruhatDiagram d;
  d.m = m;
  d.nodes.push_back({"e", {}, 0});
  for (int k = 1; k < m; ++k) d.nodes.push_back({"a" + std::to_string(k), alternating_word(0, k), k});
  for (int k = 1; k < m; ++k) d.nodes.push_back({"b" + std::to_string(k), alternating_word(1, k), k});
  d.nodes.push_back({"w0", alternating_word(0, m), m});
  auto is_simple = [m](int r) { return r == 0 || r == m - 1; };
  for (int k = 0; k < m; ++k) {
    d.edges.push_back({d.node_a(k), d.node_a(k + 1), k, is_simple(k)});
    d.edges.push_back({d.node_b(k), d.node_b(k + 1), m - k - 1, is_simple(m - k - 1)});
  }
  for (int k = 1; k <= m - 2; ++k) {
    d.edges.push_back({d.node_a(k), d.node_b(k + 1), m - 1, true});
    d.edges.push_back({d.node_b(k), d.node_a(k + 1), 0, true});
  }
  return d;
}

bool verify_bruhat_diagram(const BruhatDiagram& d, const RootSystem& rs, const GroupElementSet& group) {
  std::vector<Matrix> mats;
  for (const auto& node : d.nodes) {
    Matrix w = identity_matrix(rs.dimension(), rs.field());
    for (int s : node.word) w = w * rs.simple_reflection(s);
    auto idx = group.find(w);
    if (!idx || group[*idx].length != node.length) return false;
    mats.push_back(std::move(w));
  }
  for (const auto& e : d.edges) {
    const Matrix& s = rs.reflections().at(static_cast<size_t>(e.root));
    if (!(s * mats[static_cast<size_t>(e.from)] == mats[static_cast<size_t>(e.to)])) return false;
    if (d.nodes[static_cast<size_t>(e.to)].length != d.nodes[static_cast<size_t>(e.from)].length + 1) return false;
    const bool simple = e.root == rs.simple_root_position(0) || e.root == rs.simple_root_position(1);
    if (simple != e.simple) return false;
  }
  return true;
}

PieriMatrices pieri_matrices(int m, int k) {
  check_level(m, k);
  const NumberField& f = NumberField::two_cos_pi_over(m);
  PieriMatrices p;
  p.m = m;
  p.k = k;
  p.pk = p_value(m, k);
  p.pk1 = p_value(m, k + 1);
  p.x1 = Matrix(2, 2, f.zero());
  p.x1(0, 0) = p.pk;
  p.x1(0, 1) = f.one();
  p.x1(1, 1) = p.pk1;
  p.x2 = Matrix(2, 2, f.zero());
  p.x2(0, 0) = p.pk1;
  p.x2(1, 0) = f.one();
  p.x2(1, 1) = p.pk;
  return p;
}

Matrix assembled_matrix(const PieriMatrices& p, const FieldElement& a, const FieldElement& b) {
  return a * p.x1 + b * p.x2;
}

FieldElement mult_determinant(int m, int k, const FieldElement& a, const FieldElement& b) {
  check_level(m, k);
  const FieldElement pk = p_value(m, k), pk1 = p_value(m, k + 1);
  const FieldElement one = pk.field()->one();
  return (a * a + b * b) * pk * pk1 + a * b * (pk * pk + pk1 * pk1 - one);
}

DiscriminantReport discriminant(int m, int k) {
  check_level(m, k);
  const FieldElement p = p_value(m, k), q = p_value(m, k + 1);
  const FieldElement one = p.field()->one();
  DiscriminantReport r;
  const FieldElement middle = p * p + q * q - one;
  r.value = middle * middle - (p * q * p * q) * Rational(4);
  r.factors = {p + q + one, p + q - one, p - q + one, p - q - one};
  FieldElement product = one;
  for (size_t i = 0; i < 4; ++i) {
    r.factor_signs[i] = r.factors[i].sign();
    product *= r.factors[i];
  }
  r.factorization_holds = product == r.value;
  r.sign = r.value.sign();
  return r;
}

bool power_identity_check(int m) {
  if (m < 1) throw LevelOutOfRange("power identity needs m >= 1");
  if (m > 12) throw BudgetExceeded("power identity expansion is limited to m <= 12");
  std::vector<std::int64_t> fact(static_cast<size_t>(m) + 1, 1);
  for (int i = 1; i <= m; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * i;

  std::unordered_map<Packed, std::int64_t> rhs;
  std::vector<int> support, exps;
  // Adds sign * (sum_{i in support} u_i)^m by enumerating compositions of m.
  auto expand = [&](int sign) {
    const size_t s = support.size();
    exps.assign(s, 0);
    std::function<void(size_t, int, std::int64_t)> rec = [&](size_t pos, int left, std::int64_t denom) {
      if (pos + 1 == s) {
        exps[pos] = left;
        Packed key = 0;
        for (size_t j = 0; j < s; ++j)
          key |= static_cast<Packed>(exps[j]) << (kBits * support[j]);
        rhs[key] += sign * (fact[static_cast<size_t>(m)] / (denom * fact[static_cast<size_t>(left)]));
        return;
      }
      for (int e = 0; e <= left; ++e) {
        exps[pos] = e;
        rec(pos + 1, left - e, denom * fact[static_cast<size_t>(e)]);
      }
    };
    rec(0, m, 1);
  };
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    support.clear();
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) support.push_back(i);
    expand(support.size() % 2 ? -1 : 1);
  }
  Packed all_ones = 0;
  for (int i = 0; i < m; ++i) all_ones |= Packed{1} << (kBits * i);
  rhs[all_ones] -= (m % 2 ? -1 : 1) * fact[static_cast<size_t>(m)];
  for (const auto& [key, coeff] : rhs)
    if (coeff != 0) return false;
  return true;
}

FieldElement coinvariant_level_determinant(const CoinvariantRing& ring, int k, const FieldElement& a,
                                           const FieldElement& b) {
  const RootSystem& rs = ring.root_system();
  if (rs.type().factors.size() != 1 || rs.type().factors[0].family != Family::I2)
    throw UnsupportedType("coinvariant level determinant needs a dihedral ring");
  check_level(rs.type().factors[0].param, k);
  const auto& w = rs.weight_forms();
  Vector form(2);
  for (size_t i = 0; i < 2; ++i) form[i] = a * w[0][i] + b * w[1][i];
  return determinant(ring.linear_map(form, k));
}

} // namespace slp::dihedral
