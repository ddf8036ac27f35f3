#include "slp/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "slp/errors.hpp"

namespace slp {

Monomial Monomial::variable(int i, int power) {
  Monomial m;
  m.set(i, power);
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (exps.size() > kMaxVariables) throw DimensionMismatch("too many variables");
  Monomial m;
  for (size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
  return m;
}

void Monomial::set(int i, int value) {
  if (i < 0 || i >= kMaxVariables) throw DimensionMismatch("variable index out of range");
  if (value < 0 || value > 255) throw DegreeOutOfRange("exponent out of range");
  degree_ += value - e_[static_cast<size_t>(i)];
  e_[static_cast<size_t>(i)] = static_cast<std::uint8_t>(value);
}

bool Monomial::divides(const Monomial& other) const {
  for (size_t i = 0; i < kMaxVariables; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (size_t i = 0; i < kMaxVariables; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  r.degree_ = 0;
  for (auto x : r.e_) r.degree_ += x;
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (size_t i = 0; i < kMaxVariables; ++i) {
    int s = a.e_[i] + b.e_[i];
    if (s > 255) throw DegreeOutOfRange("exponent overflow");
    r.e_[i] = static_cast<std::uint8_t>(s);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (size_t i = 0; i < kMaxVariables; ++i) r.e_[i] = static_cast<std::uint8_t>(a.e_[i] - b.e_[i]);
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  for (size_t i = kMaxVariables; i-- > 0;) {
    if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i];
  }
  return false;
}

std::uint64_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : e_) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < kMaxVariables; ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << "*";
    os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
    if (e_[i] > 1) os << "^" << static_cast<int>(e_[i]);
    first = false;
  }
  return first ? "1" : os.str();
}

std::vector<std::string> default_variable_names(int nvars, const std::string& stem) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

// ---------------------------------------------------------------------------

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_less(b.mono, a.mono); }

} // namespace

Polynomial::Polynomial(int nvars, std::vector<Term> terms) : nvars_(nvars) {
  PolynomialBuilder b(nvars);
  for (auto& t : terms) b.add(t.mono, t.coeff);
  *this = b.build();
}

Polynomial Polynomial::constant(int nvars, const FieldElement& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::variable(int nvars, int i, const NumberField& field) {
  return monomial(nvars, Monomial::variable(i), field.one());
}

Polynomial Polynomial::linear_form(std::span<const FieldElement> coeffs) {
  Polynomial p(static_cast<int>(coeffs.size()));
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) p.terms_.push_back({Monomial::variable(static_cast<int>(i)), coeffs[i]});
  // x_1 > x_2 > ... in grevlex, so insertion order is already descending.
  return p;
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m, const FieldElement& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, {}}, term_greater);
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return {};
}

namespace {

template <typename Combine>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, Combine combine,
                              bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grevlex_less(b[j].mono, a[i].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grevlex_less(a[i].mono, b[j].mono)) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      FieldElement c = combine(a[i].coeff, b[j].coeff);
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  nvars_ = std::max(nvars_, b.nvars_);
  terms_ = merge_terms(terms_, b.terms_, [](const FieldElement& x, const FieldElement& y) { return x + y; },
                       false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  nvars_ = std::max(nvars_, b.nvars_);
  terms_ = merge_terms(terms_, b.terms_, [](const FieldElement& x, const FieldElement& y) { return x - y; },
                       true);
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  PolynomialBuilder builder(std::max(a.nvars_, b.nvars_));
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) builder.add(s.mono * t.mono, s.coeff * t.coeff);
  return builder.build();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElement& c) const {
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

void Polynomial::subtract_multiple(const Polynomial& other, const Monomial& m, const FieldElement& c) {
  *this -= other.times_term(m, c);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(nvars_);
  const NumberField* field = terms_.empty() ? nullptr : terms_.front().coeff.field();
  if (field == nullptr) {
    if (e == 0) throw DivisionByZero("0^0 of a field-less polynomial");
    return result;
  }
  result = constant(nvars_, field->one());
  Polynomial base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * terms_.front().coeff.inverse();
}

Polynomial Polynomial::derivative(int var) const {
  PolynomialBuilder builder(nvars_);
  for (const auto& t : terms_) {
    const int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    builder.add(m, t.coeff * Rational(e));
  }
  return builder.build();
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (static_cast<int>(images.size()) < nvars_) throw DimensionMismatch("substitution needs one image per variable");
  const int out_vars = images.empty() ? 0 : images.front().nvars();
  // Cache powers of each image; they are reused across terms. Entry k holds image^(k+1).
  std::vector<std::vector<Polynomial>> powers(static_cast<size_t>(nvars_));
  auto power = [&](int var, int e) -> const Polynomial& {
    auto& cache = powers[static_cast<size_t>(var)];
    const auto& img = images[static_cast<size_t>(var)];
    if (cache.empty()) cache.push_back(img);
    while (static_cast<int>(cache.size()) < e) cache.push_back(cache.back() * img);
    return cache[static_cast<size_t>(e - 1)];
  };
  PolynomialBuilder builder(out_vars);
  for (const auto& t : terms_) {
    Polynomial acc = constant(out_vars, t.coeff);
    for (int v = 0; v < nvars_ && !acc.is_zero(); ++v) {
      int e = t.mono[v];
      if (e == 0) continue;
      acc = acc * power(v, e);
    }
    builder.add(acc);
  }
  return builder.build();
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  FieldElement acc;
  for (const auto& t : terms_) {
    FieldElement v = t.coeff;
    for (int i = 0; i < nvars_; ++i)
      if (t.mono[i] > 0) v *= point[static_cast<size_t>(i)].pow(static_cast<unsigned>(t.mono[i]));
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Term& lead = divisor.leading();
  const FieldElement lead_inv = lead.coeff.inverse();
  Polynomial remainder = *this;
  PolynomialBuilder quotient(std::max(nvars_, divisor.nvars_));
  while (!remainder.is_zero()) {
    const Term& top = remainder.leading();
    if (!lead.mono.divides(top.mono)) throw NotExact("divisor does not divide polynomial");
    Monomial q = top.mono / lead.mono;
    FieldElement c = top.coeff * lead_inv;
    quotient.add(q, c);
    remainder.subtract_multiple(divisor, q, c);
  }
  return quotient.build();
}

std::vector<FieldElement> Polynomial::linear_coefficients() const {
  std::vector<FieldElement> out(static_cast<size_t>(nvars_));
  for (const auto& t : terms_) {
    if (t.mono.degree() != 1) continue;
    for (int i = 0; i < nvars_; ++i)
      if (t.mono[i] == 1) out[static_cast<size_t>(i)] = t.coeff;
  }
  return out;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool compound = !t.coeff.is_rational();
    const bool negative = !first && !compound && t.coeff.sign() < 0;
    const std::string c = (negative ? -t.coeff : t.coeff).to_string();
    if (!first) os << (negative ? " - " : " + ");
    if (t.mono.degree() == 0) {
      os << (compound ? "(" + c + ")" : c);
    } else {
      if (compound) os << "(" << c << ")*";
      else if (c == "-1") os << "-";
      else if (c != "1") os << c << "*";
      os << t.mono.to_string(names);
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

void PolynomialBuilder::add(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  terms_.push_back({m, c});
}

void PolynomialBuilder::add(const Polynomial& p) {
  for (const auto& t : p.terms()) terms_.push_back(t);
}

Polynomial PolynomialBuilder::build() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) out.back().coeff += t.coeff;
    else out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coeff.is_zero(); }),
            out.end());
  terms_.clear();
  Polynomial p(nvars_);
  p.terms_ = std::move(out);
  return p;
}

} // namespace slp
