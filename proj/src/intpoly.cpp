#include "algebase/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "algebase/error.hpp"

namespace algebase {

namespace {
const mpz_class kZero = 0;
}

IntPoly IntPoly::constant(mpz_class v) {
  IntPoly p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

IntPoly IntPoly::monomial(mpz_class coeff, std::size_t k) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(k, kZero);
    p.c_.push_back(std::move(coeff));
  }
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const mpz_class& IntPoly::leading() const {
  if (c_.empty()) fail(ErrorKind::domain, "leading coefficient of the zero polynomial");
  return c_.back();
}

mpz_class IntPoly::height() const {
  mpz_class h = 0;
  for (const auto& v : c_) {
    mpz_class a = abs(v);
    if (a > h) h = a;
  }
  return h;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

mpz_class IntPoly::eval_scaled(const mpz_class& num, const mpz_class& den) const {
  // Horner on den^d p(num/den): acc_{k} = acc_{k+1} * num + c_k * den^(d-k)
  if (c_.empty()) return 0;
  mpz_class acc = c_.back();
  mpz_class dpow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    dpow *= den;
    acc = acc * num + c_[i] * dpow;
  }
  return acc;
}

int IntPoly::sign_at(const mpq_class& x) const {
  mpz_class v = eval_scaled(x.get_num(), x.get_den());
  return sgn(v);
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * mpz_class(static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reciprocal() const {
  if (c_.empty()) fail(ErrorKind::domain, "reciprocal of the zero polynomial");
  std::vector<mpz_class> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (c_.empty() || k == 0) return *this;
  std::vector<mpz_class> r(c_.size() + k, kZero);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
  return IntPoly(std::move(r));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (c_.empty()) return IntPoly();
  mpz_class g = content();
  if (sgn(c_.back()) < 0) g = -g;
  std::vector<mpz_class> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  IntPoly p;
  p.c_ = std::move(r);
  return p;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const mpz_class& s) {
  if (s == 0) return IntPoly();
  std::vector<mpz_class> r(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    mpz_class a = abs(c_[i]);
    bool neg = sgn(c_[i]) < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::vector<std::string> IntPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(v.get_str());
  return out;
}

IntPoly IntPoly::from_coeff_strings(const std::vector<std::string>& strs) {
  std::vector<mpz_class> c;
  c.reserve(strs.size());
  for (const auto& s : strs) {
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
      fail(ErrorKind::parse, "invalid decimal integer '" + s + "' in coefficient list");
    c.push_back(std::move(v));
  }
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t max_degree;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorKind::parse, "syntax error at position " + std::to_string(pos) + ": " + msg);
  }

  mpz_class read_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) error("expected an integer");
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  }

  std::size_t read_exponent() {
    mpz_class e = read_integer();
    if (e > static_cast<unsigned long>(max_degree))
      fail(ErrorKind::parse, "exponent " + e.get_str() + " exceeds the maximum degree " +
                                 std::to_string(max_degree));
    return e.get_ui();
  }

  // term := INT ['*'? x ['^' INT]] | x ['^' INT]
  void read_term(int sign, std::map<std::size_t, mpz_class>& acc) {
    skip_ws();
    mpz_class coeff = 1;
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = read_integer();
      have_coeff = true;
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      if (!have_coeff) error("'*' without a coefficient");
      ++pos;
      skip_ws();
    }
    std::size_t expo = 0;
    if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
      ++pos;
      expo = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        expo = read_exponent();
      }
    } else if (!have_coeff) {
      error("expected a term");
    }
    acc[expo] += sign * coeff;
  }

  IntPoly run() {
    std::map<std::size_t, mpz_class> acc;
    skip_ws();
    if (pos >= text.size()) error("empty input");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = (text[pos] == '-') ? -1 : 1;
      ++pos;
    }
    read_term(sign, acc);
    while (!at_end()) {
      char op = peek();
      if (op != '+' && op != '-') error("expected '+' or '-'");
      ++pos;
      read_term(op == '-' ? -1 : 1, acc);
    }
    std::size_t top = 0;
    for (const auto& [e, c] : acc)
      if (c != 0 && e > top) top = e;
    std::vector<mpz_class> coeffs(top + 1, mpz_class(0));
    for (auto& [e, c] : acc) coeffs[e] = std::move(c);
    return IntPoly(std::move(coeffs));
  }
};

} // namespace

IntPoly parse_poly(std::string_view text, std::size_t max_degree) {
  Parser p{text, 0, max_degree};
  return p.run();
}

// ---------------------------------------------------------------------------
// Division

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& s) {
  if (!s.is_monic()) fail(ErrorKind::domain, "divmod_monic requires a monic divisor");
  int ds = s.degree();
  if (p.degree() < ds) return {IntPoly(), p};
  std::vector<mpz_class> rem(p.coeffs());
  std::vector<mpz_class> quo(p.degree() - ds + 1, mpz_class(0));
  for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(ds);) {
    if (rem[i] == 0) continue;
    mpz_class c = rem[i];
    quo[i - ds] = c;
    for (int j = 0; j <= ds; ++j) rem[i - ds + j] -= c * s.coeff(j);
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly mod_monic(const IntPoly& p, const IntPoly& s) {
  return divmod_monic(p, s).second;
}

std::optional<IntPoly> try_div_exact(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) fail(ErrorKind::domain, "division by the zero polynomial");
  if (p.is_zero()) return IntPoly();
  if (p.degree() < q.degree()) return std::nullopt;
  std::vector<mpz_class> rem(p.coeffs());
  int dq = q.degree();
  std::vector<mpz_class> quo(p.degree() - dq + 1, mpz_class(0));
  const mpz_class& lq = q.leading();
  for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(dq);) {
    if (rem[i] == 0) continue;
    mpz_class c, r;
    mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), lq.get_mpz_t());
    if (r != 0) return std::nullopt;
    quo[i - dq] = c;
    for (int j = 0; j <= dq; ++j) rem[i - dq + j] -= c * q.coeff(j);
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(quo));
}

IntPoly div_exact(const IntPoly& p, const IntPoly& q) {
  auto r = try_div_exact(p, q);
  if (!r) fail(ErrorKind::domain, "inexact polynomial division");
  return *r;
}

// ---------------------------------------------------------------------------
// Pseudo-division, gcd, resultant

namespace {

// lc(B)^(deg A - deg B + 1) * A = Q*B + R with deg R < deg B. The scaling
// must be applied in full (even on zero top coefficients) for the
// subresultant divisions downstream to stay exact.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  int da = a.degree(), db = b.degree();
  if (da < db) return a;
  std::vector<mpz_class> rem(a.coeffs());
  const mpz_class& lb = b.leading();
  for (int i = da; i >= db; --i) {
    mpz_class top = rem[i];
    for (int j = 0; j < i; ++j) rem[j] *= lb;
    rem[i] = 0;
    if (top != 0)
      for (int j = 0; j < db; ++j) rem[i - db + j] -= top * b.coeff(j);
  }
  rem.resize(db > 0 ? db : 0);
  return IntPoly(std::move(rem));
}

} // namespace

IntPoly gcd_primitive(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero())
    fail(ErrorKind::domain, "gcd of two zero polynomials");
  if (p.is_zero()) return q.primitive_part();
  if (q.is_zero()) return p.primitive_part();
  IntPoly a = p.primitive_part();
  IntPoly b = q.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive_part();
}

mpz_class resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero())
    fail(ErrorKind::domain, "resultant of the zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) return 1;
  if (p.degree() == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), p.coeff(0).get_mpz_t(), static_cast<unsigned long>(q.degree()));
    return r;
  }
  if (q.degree() == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), q.coeff(0).get_mpz_t(), static_cast<unsigned long>(p.degree()));
    return r;
  }

  // Subresultant chain (fraction-free), standard sign bookkeeping.
  IntPoly a = p, b = q;
  mpz_class ca = a.content(), cb = b.content();
  a = div_exact(a, IntPoly::constant(ca));
  b = div_exact(b, IntPoly::constant(cb));
  mpz_class t, tmp;
  mpz_pow_ui(t.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(b.degree()));
  mpz_pow_ui(tmp.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(a.degree()));
  t *= tmp;

  int s = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2) && (b.degree() % 2)) s = -s;
    std::swap(a, b);
  }
  mpz_class g = 1, h = 1;
  while (b.degree() > 0) {
    unsigned long delta = static_cast<unsigned long>(a.degree() - b.degree());
    if ((a.degree() % 2) && (b.degree() % 2)) s = -s;
    IntPoly r = pseudo_rem(a, b);
    a = b;
    // b = r / (g * h^delta)
    mpz_class hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), delta);
    hd *= g;
    b = div_exact(r, IntPoly::constant(hd));
    g = a.leading();
    // h = g^delta / h^(delta-1), exact
    if (delta > 0) {
      mpz_class gnum, hden;
      mpz_pow_ui(gnum.get_mpz_t(), g.get_mpz_t(), delta);
      mpz_pow_ui(hden.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), gnum.get_mpz_t(), hden.get_mpz_t());
    }
  }
  if (b.is_zero()) return 0;
  // res = s * t * lc(b)^deg(a) / h^(deg(a)-1)
  unsigned long da = static_cast<unsigned long>(a.degree());
  mpz_class num, den, res;
  mpz_pow_ui(num.get_mpz_t(), b.coeff(0).get_mpz_t(), da);
  if (da >= 1) {
    mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), da - 1);
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    res = 1;
  }
  res *= t;
  if (s < 0) res = -res;
  return res;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

unsigned long euler_phi(unsigned long k) {
  unsigned long result = k;
  unsigned long n = k;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic(unsigned long k) {
  if (k == 0) fail(ErrorKind::domain, "cyclotomic index must be >= 1");
  static std::mutex mu;
  static std::map<unsigned long, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  // x^k - 1 divided by Phi_d for every proper divisor d of k.
  std::vector<mpz_class> xn(k + 1, mpz_class(0));
  xn[0] = -1;
  xn[k] = 1;
  IntPoly num(std::move(xn));
  for (unsigned long d = 1; d * d <= k; ++d) {
    if (k % d != 0) continue;
    if (d != k) num = div_exact(num, cyclotomic(d));
    unsigned long e = k / d;
    if (e != d && e != k) num = div_exact(num, cyclotomic(e));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(k, std::move(num)).first->second;
}

} // namespace algebase
