#include "slp/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>

#include "slp/errors.hpp"

namespace slp {

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    bool neg = s[0] == '-';
    std::string digits = s.substr(neg || s[0] == '+' ? 1 : 0);
    dot = digits.find('.');
    std::string whole = digits.substr(0, dot), frac = digits.substr(dot + 1);
    if ((whole + frac).empty() ||
        !std::all_of(whole.begin(), whole.end(), ::isdigit) ||
        !std::all_of(frac.begin(), frac.end(), ::isdigit))
      throw std::invalid_argument("bad rational '" + text + "'");
    Integer num(whole.empty() ? "0" : whole);
    Integer den = 1;
    for (char ch : frac) {
      num = num * 10 + (ch - '0');
      den *= 10;
    }
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  Rational q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw std::invalid_argument("bad rational '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPolynomial::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : Rational(0);
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPolynomial::evaluate(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return inv * *this;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return RationalPolynomial(std::move(r));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return RationalPolynomial(std::move(r));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return RationalPolynomial(std::move(r));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& a) {
  std::vector<Rational> r(a.c_);
  for (auto& x : r) x *= s;
  return RationalPolynomial(std::move(r));
}

void RationalPolynomial::divmod(const RationalPolynomial& a, const RationalPolynomial& b,
                                RationalPolynomial& quotient, RationalPolynomial& remainder) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  int db = b.degree();
  if (a.degree() < db) {
    quotient = {};
    remainder = a;
    return;
  }
  std::vector<Rational> q(static_cast<size_t>(a.degree() - db + 1));
  Rational lead_inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational t = r[static_cast<size_t>(k)] * lead_inv;
    if (t == 0) continue;
    q[static_cast<size_t>(k - db)] = t;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= t * b.c_[static_cast<size_t>(j)];
  }
  quotient = RationalPolynomial(std::move(q));
  remainder = RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    RationalPolynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

int sgn(const Rational& q) { return sgn(q.get_num()) > 0 ? 1 : (q == 0 ? 0 : -1); }

int sign_variations(const std::vector<RationalPolynomial>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(p.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

} // namespace

int RationalPolynomial::count_real_roots(const Rational& lo, const Rational& hi) const {
  if (degree() < 1) return 0;
  std::vector<RationalPolynomial> chain{*this, derivative()};
  while (!chain.back().is_zero()) {
    RationalPolynomial q, r;
    divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.is_zero()) break;
    chain.push_back(Rational(-1) * r);
  }
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (i == 0 || a != 1) os << a.get_str() << (i > 0 ? "*" : "");
    if (i > 0) os << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Factor search and cyclotomic helpers

namespace {

using Complex = std::complex<long double>;

std::vector<Complex> numeric_roots(const std::vector<long double>& monic_coeffs) {
  const int n = static_cast<int>(monic_coeffs.size()) - 1;
  auto eval = [&](Complex z) {
    Complex acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * z + monic_coeffs[static_cast<size_t>(i)];
    return acc;
  };
  long double radius = 1;
  for (int i = 0; i < n; ++i)
    radius = std::max(radius, 1 + std::fabs(monic_coeffs[static_cast<size_t>(i)]));
  std::vector<Complex> z(static_cast<size_t>(n));
  const Complex seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[static_cast<size_t>(i)] = std::pow(seed, i) * (radius / 2);
  for (int iter = 0; iter < 2000; ++iter) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      Complex denom = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
      if (std::abs(denom) == 0) denom = 1e-30L;
      Complex step = eval(z[static_cast<size_t>(i)]) / denom;
      z[static_cast<size_t>(i)] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-17L) break;
  }
  return z;
}

} // namespace

RationalPolynomial find_rational_factor(const RationalPolynomial& f_in) {
  RationalPolynomial f = f_in.monic();
  const int n = f.degree();
  if (n <= 1) return {};
  if (n > 24) throw UnsupportedType("irreducibility check limited to degree 24");

  // g(x) = D^n f(x/D) is a monic integer polynomial whose factors map back to f's.
  Integer denom_lcm = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> gc(static_cast<size_t>(n) + 1);
  Integer pow_d = 1;
  for (int i = n; i >= 0; --i) {
    gc[static_cast<size_t>(i)] = f[i] * Rational(pow_d);
    pow_d *= denom_lcm;
  }
  RationalPolynomial g(gc);

  long double norm2 = 0;
  std::vector<long double> gl(gc.size());
  for (size_t i = 0; i < gc.size(); ++i) {
    gl[i] = static_cast<long double>(gc[i].get_d());
    norm2 += gl[i] * gl[i];
  }
  // Mignotte: coefficients of a degree-d factor are bounded by C(d, j) * ||g||_2.
  if (std::sqrt(norm2) * std::pow(2.0L, n / 2) > 1e13L)
    throw UnsupportedType("polynomial coefficients too large for factor certification");

  const auto roots = numeric_roots(gl);
  auto back_to_f = [&](const RationalPolynomial& h) {
    const int d = h.degree();
    std::vector<Rational> out(static_cast<size_t>(d) + 1);
    Integer scale = 1;
    for (int i = 0; i <= d; ++i) {
      out[static_cast<size_t>(i)] = h[i] * Rational(scale);
      scale *= denom_lcm;
    }
    return RationalPolynomial(out).monic();
  };

  for (int d = 1; d <= n / 2; ++d) {
    std::vector<int> idx(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      std::vector<Complex> prod{Complex(1)};
      for (int i : idx) {
        std::vector<Complex> next(prod.size() + 1, Complex(0));
        for (size_t k = 0; k < prod.size(); ++k) {
          next[k + 1] += prod[k];
          next[k] -= prod[k] * roots[static_cast<size_t>(i)];
        }
        prod = std::move(next);
      }
      bool candidate = true;
      std::vector<Rational> hc(prod.size());
      for (size_t k = 0; k < prod.size() && candidate; ++k) {
        long double re = prod[k].real(), im = prod[k].imag();
        long double rounded = std::nearbyint(re);
        if (std::fabs(im) > 1e-4L || std::fabs(re - rounded) > 1e-4L) candidate = false;
        else hc[k] = Rational(static_cast<double>(rounded));
      }
      if (candidate) {
        RationalPolynomial h(hc), q, r;
        RationalPolynomial::divmod(g, h, q, r);
        if (r.is_zero()) return back_to_f(h);
      }
      int pos = d - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - d + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int k = pos + 1; k < d; ++k) idx[static_cast<size_t>(k)] = idx[static_cast<size_t>(k - 1)] + 1;
    }
  }
  return {};
}

namespace {

RationalPolynomial cyclotomic(int n) {
  static std::mutex mu;
  static std::map<int, RationalPolynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  c[0] = -1;
  c.back() = 1;
  RationalPolynomial p(std::move(c));
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    RationalPolynomial q, r;
    RationalPolynomial::divmod(p, cyclotomic(d), q, r);
    p = q;
  }
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

} // namespace

RationalPolynomial chebyshev_v(int k) {
  RationalPolynomial prev({Rational(2)});
  if (k == 0) return prev;
  RationalPolynomial cur({Rational(0), Rational(1)});
  const RationalPolynomial x = cur;
  for (int j = 1; j < k; ++j) {
    RationalPolynomial next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RationalPolynomial two_cos_pi_minpoly(int m) {
  if (m < 2) throw UnsupportedType("2cos(pi/m) needs m >= 2");
  RationalPolynomial phi = cyclotomic(2 * m);
  const int h = phi.degree() / 2;
  RationalPolynomial psi({phi[h]});
  for (int j = 1; j <= h; ++j) psi = psi + phi[h + j] * chebyshev_v(j);
  return psi.monic();
}

// ---------------------------------------------------------------------------
// NumberField

class FieldRegistry {
public:
  static FieldRegistry& instance() {
    static FieldRegistry r;
    return r;
  }
  const NumberField& add(RationalPolynomial minpoly, Rational lo, Rational hi, std::string name) {
    auto field = std::unique_ptr<NumberField>(
        new NumberField(std::move(minpoly), std::move(lo), std::move(hi), std::move(name)));
    std::lock_guard lock(mu_);
    fields_.push_back(std::move(field));
    return *fields_.back();
  }
  std::mutex mu_;
  std::map<int, const NumberField*> two_cos_;

private:
  std::deque<std::unique_ptr<NumberField>> fields_;
};

NumberField::NumberField(RationalPolynomial minpoly, Rational lo, Rational hi, std::string name)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)), name_(std::move(name)) {
  if (degree() == 1) {
    lo_ = hi_ = -minpoly_[0];
  } else {
    // Shrink the isolating interval once so most sign queries finish without bisection.
    const int lo_sign = sgn(minpoly_.evaluate(lo_));
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, 62);
    const Rational target(Integer(1), den);
    while (hi_ - lo_ > target) {
      Rational mid = (lo_ + hi_) / 2;
      int s = sgn(minpoly_.evaluate(mid));
      if (s == 0) {
        lo_ = hi_ = mid;
        break;
      }
      (s == lo_sign ? lo_ : hi_) = mid;
    }
  }
  approx_generator_ = Rational((lo_ + hi_) / 2).get_d();
}

const NumberField& NumberField::create(const RationalPolynomial& minpoly, const Rational& lo,
                                       const Rational& hi, std::string generator_name) {
  if (minpoly.degree() < 1) throw NotIrreducible("minimal polynomial must have degree >= 1");
  if (minpoly.leading() != 1) throw NotIrreducible("minimal polynomial must be monic");
  if (lo >= hi) throw NotIsolating("interval endpoints out of order");
  if (RationalPolynomial::gcd(minpoly, minpoly.derivative()).degree() > 0)
    throw NotIrreducible("minimal polynomial is not squarefree: " + minpoly.to_string());
  if (auto factor = find_rational_factor(minpoly); !factor.is_zero())
    throw NotIrreducible(minpoly.to_string() + " has factor " + factor.to_string());
  const Rational flo = minpoly.evaluate(lo), fhi = minpoly.evaluate(hi);
  if (flo == 0 || fhi == 0 || sgn(flo) == sgn(fhi))
    throw NotIsolating("no sign change of " + minpoly.to_string() + " on [" + lo.get_str() + ", " +
                       hi.get_str() + "]");
  if (minpoly.count_real_roots(lo, hi) != 1)
    throw NotIsolating("interval contains more than one root of " + minpoly.to_string());
  return FieldRegistry::instance().add(minpoly, lo, hi, std::move(generator_name));
}

const NumberField& NumberField::rationals() {
  static const NumberField& q =
      create(RationalPolynomial({Rational(-1), Rational(1)}), Rational(0), Rational(2), "1");
  return q;
}

const NumberField& NumberField::golden() {
  static const NumberField& f = create(RationalPolynomial({Rational(-1), Rational(-1), Rational(1)}),
                                       Rational(1), Rational(2), "tau");
  return f;
}

const NumberField& NumberField::two_cos_pi_over(int m) {
  auto& reg = FieldRegistry::instance();
  {
    std::lock_guard lock(reg.mu_);
    if (auto it = reg.two_cos_.find(m); it != reg.two_cos_.end()) return *it->second;
  }
  RationalPolynomial minpoly = two_cos_pi_minpoly(m);
  const NumberField* field = nullptr;
  if (minpoly.degree() == 1) {
    field = &rationals();
  } else {
    const double value = 2 * std::cos(std::numbers::pi / m);
    const Rational centre(value), radius(1, 8 * m * m);
    field = &create(minpoly, centre - radius, centre + radius, "c");
  }
  std::lock_guard lock(reg.mu_);
  reg.two_cos_.emplace(m, field);
  return *field;
}

FieldElement two_cos_pi(int m) {
  const NumberField& f = NumberField::two_cos_pi_over(m);
  if (f.degree() >= 2) return f.generator();
  return f.from_rational(-two_cos_pi_minpoly(m)[0]);
}

FieldElement NumberField::zero() const {
  return FieldElement(this, std::vector<Rational>(static_cast<size_t>(degree())));
}

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::generator() const {
  if (degree() == 1) return from_rational(-minpoly_[0]);
  auto e = zero();
  e.c_[1] = 1;
  return e;
}

FieldElement NumberField::from_rational(const Rational& q) const {
  auto e = zero();
  e.c_[0] = q;
  e.c_[0].canonicalize();
  return e;
}

FieldElement NumberField::from_coeffs(std::vector<Rational> coeffs) const {
  return from_polynomial(RationalPolynomial(std::move(coeffs)));
}

FieldElement NumberField::from_polynomial(const RationalPolynomial& p) const {
  RationalPolynomial q, r;
  RationalPolynomial::divmod(p, minpoly_, q, r);
  auto e = zero();
  for (int i = 0; i <= r.degree(); ++i) e.c_[static_cast<size_t>(i)] = r[i];
  return e;
}

namespace {

struct Interval {
  Rational lo, hi;
};

Interval interval_eval(const std::vector<Rational>& c, const Rational& lo, const Rational& hi) {
  Interval acc{c.back(), c.back()};
  for (size_t k = c.size() - 1; k-- > 0;) {
    Rational p1 = acc.lo * lo, p2 = acc.lo * hi, p3 = acc.hi * lo, p4 = acc.hi * hi;
    acc.lo = std::min({p1, p2, p3, p4}) + c[k];
    acc.hi = std::max({p1, p2, p3, p4}) + c[k];
  }
  return acc;
}

} // namespace

int NumberField::sign(const FieldElement& a) const {
  if (a.is_zero()) return 0;
  if (degree() == 1) return sgn(a.c_[0]);
  Rational lo = lo_, hi = hi_;
  const int lo_sign = sgn(minpoly_.evaluate(lo));
  while (true) {
    Interval img = interval_eval(a.c_, lo, hi);
    if (img.lo > 0) return 1;
    if (img.hi < 0) return -1;
    Rational mid = (lo + hi) / 2;
    (sgn(minpoly_.evaluate(mid)) == lo_sign ? lo : hi) = mid;
  }
}

double NumberField::approx(const FieldElement& a) const {
  double acc = 0;
  for (auto it = a.c_.rbegin(); it != a.c_.rend(); ++it) acc = acc * approx_generator_ + it->get_d();
  return acc;
}

// ---------------------------------------------------------------------------
// FieldElement

Rational FieldElement::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : Rational(0);
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElement::is_rational() const {
  return c_.size() <= 1 || std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

int FieldElement::sign() const { return field_ ? field_->sign(*this) : 0; }
double FieldElement::approx() const { return field_ ? field_->approx(*this) : 0.0; }

const NumberField* FieldElement::adopt(const FieldElement& b) {
  if (b.field_ == nullptr || b.field_ == field_) return field_;
  if (field_ == nullptr) {
    field_ = b.field_;
    c_.assign(static_cast<size_t>(field_->degree()), Rational(0));
    return field_;
  }
  throw FieldMismatch("elements belong to different number fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  adopt(b);
  for (size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  adopt(b);
  for (size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.field_ == nullptr || b.field_ == nullptr) {
    FieldElement z;
    z.field_ = a.field_ ? a.field_ : b.field_;
    if (z.field_) z.c_.assign(static_cast<size_t>(z.field_->degree()), Rational(0));
    return z;
  }
  if (a.field_ != b.field_) throw FieldMismatch("elements belong to different number fields");
  const size_t n = a.c_.size();
  if (n == 1) return FieldElement(a.field_, {a.c_[0] * b.c_[0]});
  std::vector<Rational> prod(2 * n - 1);
  for (size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  const auto& f = a.field_->minpoly().coeffs();
  for (size_t k = 2 * n - 2; k >= n; --k) {
    if (prod[k] == 0) continue;
    const Rational t = prod[k];
    for (size_t j = 0; j < n; ++j) prod[k - n + j] -= t * f[j];
    prod[k] = 0;
  }
  prod.resize(n);
  return FieldElement(a.field_, std::move(prod));
}

FieldElement& FieldElement::operator*=(const FieldElement& b) { return *this = *this * b; }

FieldElement& FieldElement::operator*=(const Rational& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

FieldElement operator-(FieldElement a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  if (c_.size() == 1) return FieldElement(field_, {1 / c_[0]});
  // Extended Euclid: s*a + t*f = 1 in Q[x].
  RationalPolynomial r0 = field_->minpoly(), r1(c_);
  RationalPolynomial s0, s1({Rational(1)});
  while (!r1.is_zero()) {
    RationalPolynomial q, r;
    RationalPolynomial::divmod(r0, r1, q, r);
    RationalPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since the minimal polynomial is irreducible.
  return field_->from_polynomial((1 / r0[0]) * s0);
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  if (b.is_zero()) throw DivisionByZero("field division by zero");
  return *this = *this * b.inverse();
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result = field_ ? field_->one() : FieldElement();
  FieldElement base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_) return false;
  const size_t n = std::max(a.c_.size(), b.c_.size());
  for (size_t i = 0; i < n; ++i)
    if (a.coeff(static_cast<int>(i)) != b.coeff(static_cast<int>(i))) return false;
  return true;
}

bool structural_less(const FieldElement& a, const FieldElement& b) {
  const size_t n = std::max(a.c_.size(), b.c_.size());
  for (size_t i = 0; i < n; ++i) {
    Rational x = a.coeff(static_cast<int>(i)), y = b.coeff(static_cast<int>(i));
    if (x != y) return x < y;
  }
  return false;
}

std::string FieldElement::to_string() const {
  if (c_.size() <= 1 || is_rational()) return c_.empty() ? "0" : c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = abs(c_[i]);
    os << (first ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + "));
    if (i == 0 || a != 1) os << a.get_str() << (i > 0 ? "*" : "");
    if (i > 0) os << field_->generator_name() << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

} // namespace slp
