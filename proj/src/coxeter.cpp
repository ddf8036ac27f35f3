#include "slp/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "slp/errors.hpp"

namespace slp {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

const char* family_letter(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::I2: return "I2";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
  }
  return "?";
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

int parse_int(const std::string& s, const std::string& context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit))
    throw UnsupportedType("cannot parse type '" + context + "'");
  return std::stoi(s);
}

IrreducibleType parse_factor(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw UnsupportedType("empty type component");
  const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  const std::string rest = s.substr(1);
  switch (head) {
    case 'A': return {Family::A, parse_int(rest, s)};
    case 'B': return {Family::B, parse_int(rest, s)};
    case 'D': return {Family::D, parse_int(rest, s)};
    case 'G':
      if (rest != "2") throw UnsupportedType("unknown type '" + s + "'");
      return {Family::I2, 6};
    case 'H': {
      const int n = parse_int(rest, s);
      if (n == 3) return {Family::H3, 3};
      if (n == 4) return {Family::H4, 4};
      throw UnsupportedType("unknown type '" + s + "'");
    }
    case 'I': {
      if (rest.size() < 2 || rest[0] != '2') throw UnsupportedType("cannot parse type '" + s + "'");
      std::string m = rest.substr(1);
      if (m.front() == ':' || m.front() == '_') {
        m = m.substr(1);
      } else if (m.front() == '(' && m.back() == ')') {
        m = m.substr(1, m.size() - 2);
      } else {
        throw UnsupportedType("cannot parse type '" + s + "'");
      }
      return {Family::I2, parse_int(trim(m), s)};
    }
    default: throw UnsupportedType("unknown type '" + s + "'");
  }
}

// Realization of one irreducible factor in local coordinates.
struct LocalRealization {
  int dimension = 0;
  Matrix gram;
  std::vector<Vector> simple;
};

Vector unit(int n, int i, const NumberField& f) {
  Vector v(static_cast<size_t>(n), f.zero());
  v[static_cast<size_t>(i)] = f.one();
  return v;
}

LocalRealization realize(const IrreducibleType& t, const NumberField& f) {
  LocalRealization r;
  r.dimension = t.ambient_dimension();
  const int n = r.dimension;
  r.gram = identity_matrix(n, f);
  auto e = [&](int i) { return unit(n, i, f); };
  auto diff = [&](int i, int j) {
    Vector v = e(i);
    v[static_cast<size_t>(j)] = -f.one();
    return v;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < t.param; ++i) r.simple.push_back(diff(i, i + 1));
      break;
    case Family::B:
      for (int i = 0; i + 1 < t.param; ++i) r.simple.push_back(diff(i, i + 1));
      r.simple.push_back(e(t.param - 1));
      break;
    case Family::D: {
      for (int i = 0; i + 1 < t.param; ++i) r.simple.push_back(diff(i, i + 1));
      Vector last = e(t.param - 2);
      last[static_cast<size_t>(t.param - 1)] = f.one();
      r.simple.push_back(last);
      break;
    }
    case Family::I2: {
      // Coordinates (x, y / sin theta); beta(k theta) = (cos k theta, p_k).
      const FieldElement c = two_cos_pi(t.param);
      r.gram(1, 1) = f.one() - c * c * Rational(1, 4);
      r.simple.push_back(e(0));
      r.simple.push_back(Vector{c * Rational(-1, 2), f.one()});
      break;
    }
    case Family::H3: {
      // x1 - tau x2 - tau^2 x3 has length 2 tau; all roots of H3 share one orbit.
      const FieldElement tau = f.generator();
      const FieldElement h = (tau * Rational(2)).inverse();
      r.simple.push_back(Vector{h, -(tau * h), -(tau * tau * h)});
      r.simple.push_back(e(1));
      r.simple.push_back(e(2));
      break;
    }
    case Family::H4: throw UnsupportedType("H4 is not supported");
  }
  return r;
}

const NumberField* factor_field(const IrreducibleType& t) {
  switch (t.family) {
    case Family::I2: return &NumberField::two_cos_pi_over(t.param);
    case Family::H3: return &NumberField::golden();
    default: return &NumberField::rationals();
  }
}

} // namespace

// ---------------------------------------------------------------------------
// Types

int IrreducibleType::rank() const {
  switch (family) {
    case Family::I2: return 2;
    case Family::H3: return 3;
    case Family::H4: return 4;
    default: return param;
  }
}

int IrreducibleType::ambient_dimension() const { return family == Family::A ? param + 1 : rank(); }

std::uint64_t IrreducibleType::group_order() const {
  switch (family) {
    case Family::A: return factorial(param + 1);
    case Family::B: return (std::uint64_t{1} << param) * factorial(param);
    case Family::D: return (std::uint64_t{1} << (param - 1)) * factorial(param);
    case Family::I2: return 2 * static_cast<std::uint64_t>(param);
    case Family::H3: return 120;
    case Family::H4: return 14400;
  }
  return 0;
}

std::vector<int> IrreducibleType::degrees() const {
  std::vector<int> d;
  switch (family) {
    case Family::A:
      for (int i = 2; i <= param + 1; ++i) d.push_back(i);
      break;
    case Family::B:
      for (int i = 1; i <= param; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < param; ++i) d.push_back(2 * i);
      d.insert(std::upper_bound(d.begin(), d.end(), param), param);
      break;
    case Family::I2: d = {2, param}; break;
    case Family::H3: d = {2, 6, 10}; break;
    case Family::H4: d = {2, 12, 20, 30}; break;
  }
  return d;
}

int IrreducibleType::reflection_count() const {
  int n = 0;
  for (int d : degrees()) n += d - 1;
  return n;
}

bool IrreducibleType::crystallographic() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::D: return true;
    case Family::I2: return param == 3 || param == 4 || param == 6;
    default: return false;
  }
}

std::string IrreducibleType::to_string() const {
  if (family == Family::I2) return "I2(" + std::to_string(param) + ")";
  if (family == Family::H3 || family == Family::H4) return family_letter(family);
  return family_letter(family) + std::to_string(param);
}

CoxeterType CoxeterType::parse(const std::string& text) {
  CoxeterType t;
  std::string token;
  auto flush = [&] {
    t.factors.push_back(parse_factor(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == 'x' || ch == 'X' || ch == '*') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  validate(t);
  return t;
}

int CoxeterType::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank();
  return r;
}

int CoxeterType::ambient_dimension() const {
  int r = 0;
  for (const auto& f : factors) r += f.ambient_dimension();
  return r;
}

std::uint64_t CoxeterType::group_order() const {
  std::uint64_t o = 1;
  for (const auto& f : factors) o *= f.group_order();
  return o;
}

int CoxeterType::reflection_count() const {
  int r = 0;
  for (const auto& f : factors) r += f.reflection_count();
  return r;
}

std::vector<int> CoxeterType::degrees() const {
  std::vector<int> d;
  for (const auto& f : factors) {
    auto fd = f.degrees();
    d.insert(d.end(), fd.begin(), fd.end());
  }
  return d;
}

bool CoxeterType::crystallographic() const {
  return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.crystallographic(); });
}

std::string CoxeterType::to_string() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i].to_string();
  return s;
}

void validate(const CoxeterType& t) {
  if (t.factors.empty()) throw UnsupportedType("empty Coxeter type");
  const NumberField* field = nullptr;
  for (const auto& f : t.factors) {
    const std::string name = f.to_string();
    switch (f.family) {
      case Family::A:
        if (f.param < 1 || f.param > 4) throw UnsupportedType(name + " is outside the supported range A1..A4");
        break;
      case Family::B:
        if (f.param < 2 || f.param > 3) throw UnsupportedType(name + " is outside the supported range B2..B3");
        break;
      case Family::D:
        if (f.param < 2 || f.param > 4) throw UnsupportedType(name + " is outside the supported range D2..D4");
        break;
      case Family::I2:
        if (f.param < 3 || f.param > 30) throw UnsupportedType(name + " is outside the supported range I2(3)..I2(30)");
        break;
      case Family::H3: break;
      case Family::H4: throw UnsupportedType("H4 is not supported");
    }
    const NumberField* ff = factor_field(f);
    if (ff->degree() > 1) {
      if (field && field != ff) throw UnsupportedType("factors of " + t.to_string() + " need different number fields");
      field = ff;
    }
  }
  if (t.group_order() > kDefaultGroupBudget)
    throw UnsupportedType("group order of " + t.to_string() + " exceeds " + std::to_string(kDefaultGroupBudget));
  if (t.ambient_dimension() > kMaxAmbientDimension)
    throw UnsupportedType(t.to_string() + " needs more than " + std::to_string(kMaxAmbientDimension) + " coordinates");
}

// ---------------------------------------------------------------------------
// Root systems

bool vector_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), structural_less);
}

FieldElement dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
  FieldElement s;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

FieldElement RootSystem::inner(const Vector& u, const Vector& v) const { return dot(u, gram_ * v); }

Vector RootSystem::form_of(const Vector& v) const { return gram_ * v; }

Vector RootSystem::vector_of(const Vector& form) const { return gram_inverse_ * form; }

FieldElement RootSystem::coroot_pairing(const Vector& v, int j) const {
  const Vector& a = simple_[static_cast<size_t>(j)];
  return inner(v, a) * Rational(2) / inner(a, a);
}

Vector RootSystem::simple_coordinates(const Vector& v) const {
  Vector c;
  for (int i = 0; i < rank(); ++i) {
    const Vector& a = simple_[static_cast<size_t>(i)];
    c.push_back(inner(v, weights_[static_cast<size_t>(i)]) * Rational(2) / inner(a, a));
  }
  return c;
}

Vector RootSystem::form_from_weight_coordinates(const Vector& a) const {
  if (static_cast<int>(a.size()) != rank()) throw DimensionMismatch("expected one coordinate per simple root");
  Vector form = zero_vector();
  for (size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < dimension_; ++j) form[static_cast<size_t>(j)] += a[i] * weight_forms_[i][static_cast<size_t>(j)];
  return form;
}

Vector RootSystem::zero_vector() const { return Vector(static_cast<size_t>(dimension_), field_->zero()); }

int RootSystem::root_index(const Vector& v) const {
  auto it = root_lookup_.find(v);
  return it == root_lookup_.end() ? -1 : it->second;
}

const Matrix& RootSystem::simple_reflection(int i) const {
  return reflections_[static_cast<size_t>(simple_position_[static_cast<size_t>(i)])];
}

Matrix reflection_matrix(const RootSystem& rs, const Vector& beta) {
  const int n = rs.dimension();
  const Vector g = rs.form_of(beta);
  const FieldElement scale = rs.inner(beta, beta).inverse() * Rational(2);
  Matrix s = identity_matrix(n, rs.field());
  for (int i = 0; i < n; ++i) {
    if (beta[static_cast<size_t>(i)].is_zero()) continue;
    const FieldElement bi = scale * beta[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j)
      if (!g[static_cast<size_t>(j)].is_zero()) s(i, j) -= bi * g[static_cast<size_t>(j)];
  }
  return s;
}

RootSystemPtr build_root_system(const CoxeterType& t) {
  validate(t);
  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->type_ = t;
  rs->field_ = &NumberField::rationals();
  for (const auto& f : t.factors)
    if (factor_field(f)->degree() > 1) rs->field_ = factor_field(f);
  const NumberField& field = *rs->field_;
  rs->dimension_ = t.ambient_dimension();
  rs->gram_ = Matrix(rs->dimension_, rs->dimension_, field.zero());
  int coord = 0;
  for (const auto& f : t.factors) {
    const LocalRealization local = realize(f, field);
    RootSystem::Block block{coord, coord + local.dimension, rs->rank(), rs->rank() + static_cast<int>(local.simple.size())};
    for (int i = 0; i < local.dimension; ++i)
      for (int j = 0; j < local.dimension; ++j) rs->gram_(coord + i, coord + j) = local.gram(i, j);
    for (const Vector& a : local.simple) {
      Vector v = rs->zero_vector();
      for (int i = 0; i < local.dimension; ++i) v[static_cast<size_t>(coord + i)] = a[static_cast<size_t>(i)];
      rs->simple_.push_back(std::move(v));
    }
    rs->blocks_.push_back(block);
    coord += local.dimension;
  }
  rs->finish();
  return rs;
}

void RootSystem::finish() {
  const NumberField& f = *field_;
  const int r = rank();
  gram_inverse_ = inverse(gram_, f);

  Matrix cartan(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      cartan(i, j) = inner(simple_[static_cast<size_t>(i)], simple_[static_cast<size_t>(j)]) * Rational(2) /
                     inner(simple_[static_cast<size_t>(j)], simple_[static_cast<size_t>(j)]);
  const Matrix cinv = inverse(cartan, f);
  weights_.clear();
  for (int i = 0; i < r; ++i) {
    Vector w = zero_vector();
    for (int k = 0; k < r; ++k)
      for (int c = 0; c < dimension_; ++c) w[static_cast<size_t>(c)] += cinv(i, k) * simple_[static_cast<size_t>(k)][static_cast<size_t>(c)];
    weights_.push_back(std::move(w));
  }
  weight_forms_.clear();
  dual_forms_.clear();
  for (int i = 0; i < r; ++i) {
    weight_forms_.push_back(form_of(weights_[static_cast<size_t>(i)]));
    const FieldElement scale = inner(simple_[static_cast<size_t>(i)], simple_[static_cast<size_t>(i)]).inverse() * Rational(2);
    Vector d = weight_forms_.back();
    for (auto& x : d) x = x * scale;
    dual_forms_.push_back(std::move(d));
  }

  // All roots as the orbit of the simple roots under the simple reflections.
  std::vector<Matrix> simple_refl;
  for (const Vector& a : simple_) simple_refl.push_back(reflection_matrix(*this, a));
  std::map<Vector, int, bool (*)(const Vector&, const Vector&)> seen(vector_less);
  std::vector<Vector> roots;
  std::deque<Vector> queue;
  for (const Vector& a : simple_)
    if (seen.emplace(a, 0).second) {
      roots.push_back(a);
      queue.push_back(a);
    }
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const Matrix& s : simple_refl) {
      Vector w = s * v;
      if (seen.emplace(w, 0).second) {
        roots.push_back(w);
        queue.push_back(std::move(w));
        if (roots.size() > 4 * static_cast<size_t>(type_.reflection_count()))
          throw std::logic_error("root orbit of " + type_.to_string() + " is not finite");
      }
    }
  }

  struct Candidate {
    Vector root;
    int block;
    double key;
  };
  std::vector<Candidate> positives;
  for (const Vector& v : roots) {
    const Vector c = simple_coordinates(v);
    int s = 0;
    for (const auto& x : c)
      if (!x.is_zero()) {
        s = x.sign();
        break;
      }
    if (s <= 0) continue;
    int block = 0;
    for (size_t b = 0; b < blocks_.size(); ++b)
      for (int k = blocks_[b].coord_begin; k < blocks_[b].coord_end; ++k)
        if (!v[static_cast<size_t>(k)].is_zero()) block = static_cast<int>(b);
    double key = 0;
    if (type_.factors[static_cast<size_t>(block)].family == Family::I2) {
      key = -v[static_cast<size_t>(blocks_[static_cast<size_t>(block)].coord_begin)].approx();
    } else {
      for (const auto& x : c) key += x.approx();
    }
    positives.push_back({v, block, key});
  }
  std::stable_sort(positives.begin(), positives.end(), [](const Candidate& a, const Candidate& b) {
    if (a.block != b.block) return a.block < b.block;
    if (std::abs(a.key - b.key) > 1e-9) return a.key < b.key;
    return vector_less(a.root, b.root);
  });
  positive_.clear();
  for (auto& p : positives) positive_.push_back(std::move(p.root));
  if (static_cast<int>(positive_.size()) != type_.reflection_count() || roots.size() != 2 * positive_.size())
    throw std::logic_error("root system of " + type_.to_string() + " has an unexpected number of roots");

  root_lookup_ = decltype(root_lookup_)(vector_less);
  const size_t n = positive_.size();
  for (size_t i = 0; i < n; ++i) {
    root_lookup_.emplace(positive_[i], static_cast<int>(i));
    Vector neg = positive_[i];
    for (auto& x : neg) x = -x;
    root_lookup_.emplace(std::move(neg), static_cast<int>(i + n));
  }
  simple_position_.clear();
  for (const Vector& a : simple_) simple_position_.push_back(root_index(a));

  reflections_.clear();
  const Matrix id = identity_matrix(dimension_, f);
  for (const Vector& b : positive_) {
    Matrix s = reflection_matrix(*this, b);
    Vector neg = b;
    for (auto& x : neg) x = -x;
    if (!(s * s == id) || !(s * b == neg)) throw std::logic_error("reflection is not an involution negating its root");
    reflections_.push_back(std::move(s));
  }
}

// ---------------------------------------------------------------------------
// Group enumeration

namespace {

std::vector<int> root_permutation(const RootSystem& rs, const Matrix& m) {
  const size_t n = rs.positive_roots().size();
  std::vector<int> perm(2 * n);
  for (size_t r = 0; r < 2 * n; ++r) {
    Vector v = rs.positive_roots()[r % n];
    if (r >= n)
      for (auto& x : v) x = -x;
    const int idx = rs.root_index(m * v);
    if (idx < 0) throw std::logic_error("matrix does not permute the roots");
    perm[r] = idx;
  }
  return perm;
}

} // namespace

GroupElementSet enumerate_subgroup(const RootSystem& rs, const std::vector<int>& simple_indices,
                                   std::uint64_t budget) {
  for (int i : simple_indices)
    if (i < 0 || i >= rs.rank()) throw DimensionMismatch("simple reflection index out of range");
  GroupElementSet set;
  set.rs_ = &rs;
  set.generators_ = simple_indices;
  std::sort(set.generators_.begin(), set.generators_.end());
  set.generators_.erase(std::unique(set.generators_.begin(), set.generators_.end()), set.generators_.end());

  const size_t n = rs.positive_roots().size();
  std::vector<std::vector<int>> gen_perms;
  for (int i : set.generators_) gen_perms.push_back(root_permutation(rs, rs.simple_reflection(i)));

  std::vector<int> id(2 * n);
  std::iota(id.begin(), id.end(), 0);
  set.elements_.push_back({identity_matrix(rs.dimension(), rs.field()), 0, {}});
  set.perms_.push_back(id);
  set.index_.emplace(id, 0);
  for (size_t head = 0; head < set.elements_.size(); ++head) {
    for (size_t g = 0; g < set.generators_.size(); ++g) {
      std::vector<int> p(2 * n);
      for (size_t r = 0; r < 2 * n; ++r) p[r] = gen_perms[g][static_cast<size_t>(set.perms_[head][r])];
      if (set.index_.count(p)) continue;
      if (set.elements_.size() >= budget)
        throw BudgetExceeded("group enumeration exceeded " + std::to_string(budget) + " elements");
      GroupElement e;
      const int s = set.generators_[g];
      e.matrix = rs.simple_reflection(s) * set.elements_[head].matrix;
      e.word.push_back(s);
      e.word.insert(e.word.end(), set.elements_[head].word.begin(), set.elements_[head].word.end());
      e.length = 0;
      for (size_t r = 0; r < n; ++r)
        if (static_cast<size_t>(p[r]) >= n) ++e.length;
      if (e.length != static_cast<int>(e.word.size())) throw std::logic_error("length disagrees with reduced word");
      set.index_.emplace(p, set.elements_.size());
      set.perms_.push_back(std::move(p));
      set.elements_.push_back(std::move(e));
    }
  }
  return set;
}

GroupElementSet enumerate_group(const RootSystem& rs, std::uint64_t budget) {
  if (rs.type().group_order() > budget)
    throw BudgetExceeded("group of order " + std::to_string(rs.type().group_order()) + " exceeds budget " +
                         std::to_string(budget));
  std::vector<int> all(static_cast<size_t>(rs.rank()));
  std::iota(all.begin(), all.end(), 0);
  return enumerate_subgroup(rs, all, budget);
}

int GroupElementSet::max_length() const {
  int m = 0;
  for (const auto& e : elements_) m = std::max(m, e.length);
  return m;
}

size_t GroupElementSet::longest_index() const {
  size_t best = 0;
  for (size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].length > elements_[best].length) best = i;
  return best;
}

std::vector<int> GroupElementSet::length_census() const {
  std::vector<int> c(static_cast<size_t>(max_length()) + 1, 0);
  for (const auto& e : elements_) ++c[static_cast<size_t>(e.length)];
  return c;
}

size_t GroupElementSet::multiply(size_t g, size_t h) const {
  const auto& pg = perms_[g];
  const auto& ph = perms_[h];
  std::vector<int> p(pg.size());
  for (size_t r = 0; r < p.size(); ++r) p[r] = pg[static_cast<size_t>(ph[r])];
  auto it = index_.find(p);
  if (it == index_.end()) throw std::logic_error("product left the enumerated set");
  return it->second;
}

size_t GroupElementSet::inverse(size_t g) const {
  const auto& pg = perms_[g];
  std::vector<int> p(pg.size());
  for (size_t r = 0; r < p.size(); ++r) p[static_cast<size_t>(pg[r])] = static_cast<int>(r);
  return index_.at(p);
}

std::optional<size_t> GroupElementSet::find(const Matrix& m) const {
  if (!rs_) return std::nullopt;
  const auto perm = root_permutation(*rs_, m);
  auto it = index_.find(perm);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Poincare polynomials and criterion predicates

std::vector<long long> poincare_polynomial(const std::vector<int>& degrees) {
  std::vector<long long> p{1};
  for (int d : degrees) {
    std::vector<long long> q(p.size() + static_cast<size_t>(d) - 1, 0);
    for (size_t i = 0; i < p.size(); ++i)
      for (int j = 0; j < d; ++j) q[i + static_cast<size_t>(j)] += p[i];
    p = std::move(q);
  }
  return p;
}

std::vector<long long> poincare_polynomial(const RootSystem& rs) { return poincare_polynomial(rs.degrees()); }

FieldElement form_root_pairing(const Vector& form, const Vector& root) { return dot(form, root); }

bool is_fixed_by_reflection(const RootSystem& rs, const Vector& form, int positive_root_index) {
  if (static_cast<int>(form.size()) != rs.dimension())
    throw DimensionMismatch("form has " + std::to_string(form.size()) + " coordinates, expected " +
                            std::to_string(rs.dimension()));
  return form_root_pairing(form, rs.positive_roots().at(static_cast<size_t>(positive_root_index))).is_zero();
}

bool sle_criterion(const RootSystem& rs, const Vector& form) {
  for (const auto& f : rs.type().factors)
    if (f.family == Family::H4) throw UnsupportedType("the reflection criterion is not established for H4");
  for (int i = 0; i < rs.reflection_count(); ++i)
    if (is_fixed_by_reflection(rs, form, i)) return false;
  return true;
}

Vector act_on_form(const Matrix& w_inverse, const Vector& form) { return transpose(w_inverse) * form; }

bool is_dominant(const RootSystem& rs, const Vector& form) {
  for (const Vector& a : rs.simple_roots())
    if (form_root_pairing(form, a).sign() < 0) return false;
  return true;
}

ChamberRepresentative chamber_representative(const RootSystem& rs, const Vector& form) {
  if (static_cast<int>(form.size()) != rs.dimension()) throw DimensionMismatch("form dimension mismatch");
  ChamberRepresentative out;
  out.w = identity_matrix(rs.dimension(), rs.field());
  out.w_inverse = out.w;
  out.form = form;
  for (auto& x : out.form) x += rs.field().zero();
  const int limit = rs.reflection_count();
  for (int step = 0; step <= limit; ++step) {
    int bad = -1;
    for (int i = 0; i < rs.rank() && bad < 0; ++i)
      if (form_root_pairing(out.form, rs.simple_roots()[static_cast<size_t>(i)]).sign() < 0) bad = i;
    if (bad < 0) return out;
    const Matrix& s = rs.simple_reflection(bad);
    out.form = transpose(s) * out.form;
    out.w = s * out.w;
    out.w_inverse = out.w_inverse * s;
    out.word.insert(out.word.begin(), bad);
  }
  throw std::logic_error("chamber descent did not terminate");
}

Vector random_form(const RootSystem& rs, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  Vector v = rs.zero_vector();
  for (auto& x : v) x = rs.field().from_rational(dist(rng));
  return v;
}

Vector project_to_mirror(const RootSystem& rs, const Vector& form, int positive_root_index) {
  const Vector& b = rs.positive_roots().at(static_cast<size_t>(positive_root_index));
  const FieldElement t = dot(form, b) / dot(b, b);
  Vector out = form;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= t * b[i];
  return out;
}

} // namespace slp
