#include "slp/coinvariant.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "slp/errors.hpp"

namespace slp {

namespace {

struct CriticalPair {
  size_t i, j;
  Monomial lcm;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
  // Both inputs are monic.
  Polynomial s = f.times_term(lcm / f.leading().mono, f.leading().coeff.field()->one());
  s.subtract_multiple(g, lcm / g.leading().mono, g.leading().coeff.field()->one());
  return s;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int v = 0; v < kMaxVariables; ++v)
    if (a[v] > 0 && b[v] > 0) return false;
  return true;
}

std::mutex& memo_mutex() {
  static std::mutex mu;
  return mu;
}

} // namespace

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis) {
  Polynomial rem = p;
  PolynomialBuilder done(p.nvars());
  while (!rem.is_zero()) {
    const Term top = rem.leading();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis)
      if (g.leading().mono.divides(top.mono)) {
        divisor = &g;
        break;
      }
    if (divisor) {
      rem.subtract_multiple(*divisor, top.mono / divisor->leading().mono, top.coeff / divisor->leading().coeff);
    } else {
      done.add(top.mono, top.coeff);
      rem -= Polynomial::monomial(p.nvars(), top.mono, top.coeff);
    }
  }
  return done.build();
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators, int max_degree, GroebnerStats* stats) {
  GroebnerStats local;
  std::vector<Polynomial> g;
  std::vector<bool> live;
  std::vector<CriticalPair> pairs;
  std::map<int, std::vector<Polynomial>> pending;
  for (auto& f : generators) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw DimensionMismatch("Groebner engine expects homogeneous generators");
    if (f.degree() <= max_degree) pending[f.degree()].push_back(std::move(f));
  }

  auto insert = [&](Polynomial f) {
    const Monomial& lm = f.leading().mono;
    // Gebauer-Moeller: drop old pairs whose lcm is strictly refined through the new element.
    std::erase_if(pairs, [&](const CriticalPair& p) {
      return lm.divides(p.lcm) && !(g[p.i].leading().mono.lcm(lm) == p.lcm) &&
             !(g[p.j].leading().mono.lcm(lm) == p.lcm);
    });
    const size_t k = g.size();
    for (size_t i = 0; i < k; ++i) {
      if (!live[i]) continue;
      const Monomial& li = g[i].leading().mono;
      Monomial l = li.lcm(lm);
      ++local.pairs_considered;
      if (coprime(li, lm) || l.degree() > max_degree) continue;
      pairs.push_back({i, k, l});
    }
    for (size_t i = 0; i < k; ++i)
      if (live[i] && lm.divides(g[i].leading().mono)) live[i] = false;
    g.push_back(std::move(f));
    live.push_back(true);
  };

  for (int d = 0; d <= max_degree; ++d) {
    std::vector<Polynomial> todo;
    if (auto it = pending.find(d); it != pending.end()) todo = std::move(it->second);
    std::vector<CriticalPair> now;
    std::erase_if(pairs, [&](const CriticalPair& p) {
      if (p.lcm.degree() != d) return false;
      now.push_back(p);
      return true;
    });
    for (const auto& p : now) todo.push_back(s_polynomial(g[p.i], g[p.j], p.lcm));
    local.pairs_reduced += now.size();
    for (const auto& f : todo) {
      std::vector<Polynomial> active;
      for (size_t i = 0; i < g.size(); ++i) active.push_back(g[i]);
      Polynomial r = reduce(f, active);
      if (!r.is_zero()) insert(r.monic());
    }
  }

  // Inter-reduce: minimal leading terms, then tails.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = g[j].leading().mono;
      const Monomial& b = g[i].leading().mono;
      if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term& lead = minimal[i].leading();
    Polynomial tail = minimal[i] - Polynomial::monomial(minimal[i].nvars(), lead.mono, lead.coeff);
    reduced.push_back((Polynomial::monomial(minimal[i].nvars(), lead.mono, lead.coeff) + reduce(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& a, const Polynomial& b) { return grevlex_less(a.leading().mono, b.leading().mono); });
  local.basis_size = reduced.size();
  if (stats) *stats = local;
  return reduced;
}

// ---------------------------------------------------------------------------

CoinvariantRingPtr build_ring(RootSystemPtr rs) {
  if (rs->type().group_order() > kDefaultGroupBudget)
    throw BudgetExceeded("quotient dimension " + std::to_string(rs->type().group_order()) + " exceeds " +
                         std::to_string(kDefaultGroupBudget));
  if (rs->dimension() > kMaxAmbientDimension)
    throw BudgetExceeded(std::to_string(rs->dimension()) + " variables exceed " + std::to_string(kMaxAmbientDimension));
  std::shared_ptr<CoinvariantRing> ring(new CoinvariantRing());
  ring->rs_ = rs;
  ring->invariants_ = fundamental_invariants(*rs);
  for (int i = 0; i < rs->rank(); ++i)
    for (const auto& g : ring->invariants_.generators)
      if (act_by_inverse(rs->simple_reflection(i), g) != g)
        throw NotInvariant(rs->type().to_string() + ": generator " + g.to_string() + " is moved by s" + std::to_string(i + 1));
  const int m = rs->reflection_count();
  ring->groebner_ = groebner_basis(ring->invariants_.generators, m + 1, &ring->stats_);

  const int n = rs->dimension();
  auto standard = [&](const Monomial& u) {
    return std::none_of(ring->groebner_.begin(), ring->groebner_.end(),
                        [&](const Polynomial& g) { return g.leading().mono.divides(u); });
  };
  std::vector<std::vector<Monomial>> levels{{Monomial()}};
  while (static_cast<int>(levels.size()) <= m + 1) {
    std::vector<Monomial> next;
    for (const Monomial& b : levels.back())
      for (int v = 0; v < n; ++v) {
        Monomial u = b * Monomial::variable(v);
        if (standard(u)) next.push_back(u);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  const auto expected = poincare_polynomial(*rs);
  bool ok = levels.size() == expected.size();
  for (size_t d = 0; ok && d < levels.size(); ++d) ok = static_cast<long long>(levels[d].size()) == expected[d];
  if (!ok) {
    std::string got, want;
    for (const auto& l : levels) got += (got.empty() ? "" : ",") + std::to_string(l.size());
    for (long long e : expected) want += (want.empty() ? "" : ",") + std::to_string(e);
    throw HilbertMismatch(rs->type().to_string() + ": Hilbert function (" + got + ") differs from Poincare polynomial (" +
                          want + ")");
  }
  ring->socle_ = static_cast<int>(levels.size()) - 1;
  ring->basis_ = std::move(levels);
  ring->index_.resize(ring->basis_.size());
  for (size_t d = 0; d < ring->basis_.size(); ++d)
    for (size_t j = 0; j < ring->basis_[d].size(); ++j) ring->index_[d].emplace(ring->basis_[d][j], static_cast<int>(j));

  const NumberField& f = rs->field();
  ring->var_maps_.assign(static_cast<size_t>(n), {});
  for (int v = 0; v < n; ++v) {
    for (int d = 0; d < ring->socle_; ++d) {
      const auto& src = ring->basis_[static_cast<size_t>(d)];
      Matrix mat(ring->hilbert(d + 1), static_cast<int>(src.size()), f.zero());
      for (size_t j = 0; j < src.size(); ++j) {
        const Monomial u = src[j] * Monomial::variable(v);
        const Polynomial r = reduce(Polynomial::monomial(n, u, f.one()), ring->groebner_);
        for (const auto& t : r.terms())
          mat(ring->index_[static_cast<size_t>(d + 1)].at(t.mono), static_cast<int>(j)) = t.coeff;
      }
      ring->var_maps_[static_cast<size_t>(v)].push_back(std::move(mat));
    }
  }
  return ring;
}

const std::vector<Monomial>& CoinvariantRing::basis(int d) const {
  static const std::vector<Monomial> none;
  return d < 0 || d > socle_ ? none : basis_[static_cast<size_t>(d)];
}

std::vector<int> CoinvariantRing::hilbert_function() const {
  std::vector<int> h;
  for (const auto& b : basis_) h.push_back(static_cast<int>(b.size()));
  return h;
}

size_t CoinvariantRing::dimension() const {
  size_t s = 0;
  for (const auto& b : basis_) s += b.size();
  return s;
}

const Vector& CoinvariantRing::monomial_coordinates(const Monomial& m) const {
  const int d = m.degree();
  if (d > socle_) return empty_;
  {
    std::lock_guard lock(memo_mutex());
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  }
  Vector v(static_cast<size_t>(hilbert(d)), field().zero());
  if (auto it = index_[static_cast<size_t>(d)].find(m); it != index_[static_cast<size_t>(d)].end()) {
    v[static_cast<size_t>(it->second)] = field().one();
  } else {
    int var = 0;
    while (m[var] == 0) ++var;
    Monomial rest = m;
    rest.set(var, m[var] - 1);
    v = var_maps_[static_cast<size_t>(var)][static_cast<size_t>(d - 1)] * monomial_coordinates(rest);
  }
  std::lock_guard lock(memo_mutex());
  return memo_.emplace(m, std::move(v)).first->second;
}

Vector CoinvariantRing::coordinates(const Polynomial& p, int d) const {
  Vector out(static_cast<size_t>(hilbert(d)), field().zero());
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != d) throw DegreeOutOfRange("polynomial is not homogeneous of degree " + std::to_string(d));
    const Vector& c = monomial_coordinates(t.mono);
    for (size_t j = 0; j < c.size(); ++j)
      if (!c[j].is_zero()) out[j] += t.coeff * c[j];
  }
  return out;
}

Polynomial CoinvariantRing::from_coordinates(const Vector& v, int d) const {
  PolynomialBuilder b(nvars());
  const auto& B = basis(d);
  for (size_t j = 0; j < v.size() && j < B.size(); ++j) b.add(B[j], v[j]);
  return b.build();
}

Polynomial CoinvariantRing::normal_form(const Polynomial& p) const {
  std::map<int, Vector> by_degree;
  for (const auto& t : p.terms()) {
    const int d = t.mono.degree();
    if (d > socle_) continue;
    auto [it, fresh] = by_degree.try_emplace(d, Vector(static_cast<size_t>(hilbert(d)), field().zero()));
    const Vector& c = monomial_coordinates(t.mono);
    for (size_t j = 0; j < c.size(); ++j)
      if (!c[j].is_zero()) it->second[j] += t.coeff * c[j];
  }
  Polynomial out(nvars());
  for (const auto& [d, v] : by_degree) out += from_coordinates(v, d);
  return out;
}

const Matrix& CoinvariantRing::variable_map(int var, int d) const {
  if (var < 0 || var >= nvars()) throw DimensionMismatch("variable index out of range");
  if (d < 0 || d >= socle_) throw DegreeOutOfRange("no variable map from degree " + std::to_string(d));
  return var_maps_[static_cast<size_t>(var)][static_cast<size_t>(d)];
}

Matrix CoinvariantRing::linear_map(const Vector& form, int d) const {
  if (static_cast<int>(form.size()) != nvars()) throw DimensionMismatch("linear form has the wrong number of coefficients");
  if (d < 0 || d >= socle_) throw DegreeOutOfRange("no multiplication map from degree " + std::to_string(d));
  Matrix out(hilbert(d + 1), hilbert(d), field().zero());
  for (int v = 0; v < nvars(); ++v) {
    const FieldElement& c = form[static_cast<size_t>(v)];
    if (c.is_zero()) continue;
    const Matrix& x = var_maps_[static_cast<size_t>(v)][static_cast<size_t>(d)];
    for (int r = 0; r < out.rows(); ++r)
      for (int col = 0; col < out.cols(); ++col)
        if (!x(r, col).is_zero()) out(r, col) += c * x(r, col);
  }
  return out;
}

MultiplicationMap CoinvariantRing::multiplication_matrix(const Vector& form, int i, int k) const {
  if (k < 0 || i < 0 || i + k > socle_)
    throw DegreeOutOfRange("multiplication R_" + std::to_string(i) + " -> R_" + std::to_string(i + k) +
                           " leaves 0.." + std::to_string(socle_));
  MultiplicationMap out{i, i + k, identity_matrix(hilbert(i), field())};
  for (int d = i; d < i + k; ++d) out.matrix = linear_map(form, d) * out.matrix;
  return out;
}

MultiplicationMap CoinvariantRing::multiplication_matrix(const Polynomial& g, int i, int k) const {
  if (g.is_zero()) {
    if (k < 0 || i < 0 || i + k > socle_) throw DegreeOutOfRange("multiplication degree out of range");
    return {i, i + k, k == 0 ? identity_matrix(hilbert(i), field()) : Matrix(hilbert(i + k), hilbert(i), field().zero())};
  }
  if (g.degree() == 1 && g.is_homogeneous()) {
    Vector form = g.linear_coefficients();
    for (auto& c : form) c += field().zero();
    return multiplication_matrix(form, i, k);
  }
  if (!g.is_homogeneous()) throw DegreeOutOfRange("multiplier must be homogeneous");
  const int j = i + k * g.degree();
  if (k < 0 || i < 0 || j > socle_) throw DegreeOutOfRange("multiplication degree out of range");
  const Polynomial gk = g.pow(static_cast<unsigned>(k));
  MultiplicationMap out{i, j, Matrix(hilbert(j), hilbert(i), field().zero())};
  const auto& src = basis(i);
  for (size_t c = 0; c < src.size(); ++c)
    out.matrix.set_column(static_cast<int>(c), coordinates(gk.times_term(src[c], field().one()), j));
  return out;
}

Matrix CoinvariantRing::poincare_pairing(int d) const {
  if (d < 0 || d > socle_) throw DegreeOutOfRange("pairing degree out of range");
  const auto& left = basis(d);
  const auto& right = basis(socle_ - d);
  Matrix g(static_cast<int>(left.size()), static_cast<int>(right.size()), field().zero());
  for (size_t a = 0; a < left.size(); ++a)
    for (size_t b = 0; b < right.size(); ++b) g(static_cast<int>(a), static_cast<int>(b)) = monomial_coordinates(left[a] * right[b])[0];
  return g;
}

Matrix CoinvariantRing::action_matrix(const Matrix& g, int d) const {
  const Matrix g_inverse = inverse(g, field());
  const auto& src = basis(d);
  Matrix out(hilbert(d), hilbert(d), field().zero());
  for (size_t c = 0; c < src.size(); ++c) {
    const Polynomial moved = act_by_inverse(g_inverse, Polynomial::monomial(nvars(), src[c], field().one()));
    out.set_column(static_cast<int>(c), coordinates(moved, d));
  }
  return out;
}

bool CoinvariantRing::is_antiinvariant_top() const {
  for (int i = 0; i < rs_->rank(); ++i) {
    const Matrix a = action_matrix(rs_->simple_reflection(i), socle_);
    if (!(a(0, 0) == -field().one())) return false;
  }
  return true;
}

} // namespace slp
