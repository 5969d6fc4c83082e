#include "gia/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "gia/errors.hpp"

namespace gia {

namespace {

void trim_poly(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  trim_poly(r);
  return r;
}

// a = q*b + r
void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim_poly(a);
  if (b.empty()) throw DomainError("polynomial division by zero");
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const mpq_class& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    mpq_class f = a.back() / lead;
    q[shift] = f;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim_poly(a);
  }
  trim_poly(q);
  r = std::move(a);
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim_poly(a);
  return a;
}

struct CycloCache {
  std::mutex mu;
  std::map<int, QPoly> phi;
};

CycloCache& cache() {
  static CycloCache c;
  return c;
}

const QPoly& phi_poly(int n) {
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.phi.find(n);
    if (it != c.phi.end()) return it->second;
  }
  QPoly p = cyclotomic_polynomial(n);
  std::lock_guard<std::mutex> lock(c.mu);
  return c.phi.emplace(n, std::move(p)).first->second;
}

// Reduces p modulo the monic polynomial m, returning exactly deg(m) coefficients.
std::vector<mpq_class> reduce_mod(QPoly p, const QPoly& m) {
  const size_t d = m.size() - 1;
  for (size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    mpq_class f = p[k];
    for (size_t j = 0; j <= d; ++j) p[k - d + j] -= f * m[j];
  }
  p.resize(d, 0);
  return p;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw DomainError("euler_phi requires n >= 1");
  int r = n, m = n;
  for (int p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  if (m > 1) r -= r / m;
  return r;
}

QPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic polynomial requires N >= 1, got " + std::to_string(n));
  QPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    QPoly q, r;
    poly_divmod(num, cyclotomic_polynomial(d), q, r);
    if (!r.empty()) throw DomainError("cyclotomic recursion left a remainder");
    num = std::move(q);
  }
  return num;
}

CycRational::CycRational() : order_(1), c_{0} {}
CycRational::CycRational(long long v) : order_(1), c_{mpq_class(mpz_class(std::to_string(v)))} {}
CycRational::CycRational(const mpq_class& v) : order_(1), c_{v} {}

CycRational::CycRational(int order, std::vector<mpq_class> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  const QPoly& m = phi_poly(order);
  if (c_.size() != m.size() - 1) c_ = reduce_mod(std::move(c_), m);
  for (auto& x : c_) x.canonicalize();
}

CycRational CycRational::root_of_unity(int n, long long k) {
  if (n < 1) throw DomainError("root of unity order must be positive");
  long long e = ((k % n) + n) % n;
  QPoly p(static_cast<size_t>(e) + 1, 0);
  p[e] = 1;
  return CycRational(n, reduce_mod(std::move(p), phi_poly(n)));
}

CycRational CycRational::embed(int m) const {
  if (m < 1 || m % order_ != 0)
    throw DomainError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                      std::to_string(m) + ")");
  if (m == order_) return *this;
  const size_t step = static_cast<size_t>(m / order_);
  QPoly p(c_.empty() ? 1 : (c_.size() - 1) * step + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return CycRational(m, reduce_mod(std::move(p), phi_poly(m)));
}

bool CycRational::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycRational::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class CycRational::rational_value() const {
  if (!is_rational()) throw DomainError("value " + str() + " is not rational");
  return c_.empty() ? mpq_class(0) : c_[0];
}

CycRational& CycRational::operator+=(const CycRational& o) {
  if (o.order_ != order_) {
    int l = std::lcm(order_, o.order_);
    if (l != order_) *this = embed(l);
    if (l != o.order_) return *this += o.embed(l);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycRational& CycRational::operator-=(const CycRational& o) { return *this += -o; }

CycRational CycRational::operator-() const {
  CycRational r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycRational& CycRational::operator*=(const CycRational& o) {
  if (o.order_ != order_) {
    int l = std::lcm(order_, o.order_);
    if (l != order_) *this = embed(l);
    if (l != o.order_) return *this *= o.embed(l);
  }
  if (order_ <= 2) {
    c_[0] *= o.c_[0];
    return *this;
  }
  QPoly a(c_.begin(), c_.end()), b(o.c_.begin(), o.c_.end());
  QPoly p = poly_mul(a, b);
  c_ = reduce_mod(std::move(p), phi_poly(order_));
  return *this;
}

CycRational CycRational::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta_" + std::to_string(order_) + ")");
  if (order_ <= 2) return CycRational(order_, {1 / c_[0]});
  // Extended Euclid: find s with s*a = 1 mod Phi_N.
  QPoly a(c_.begin(), c_.end());
  trim_poly(a);
  QPoly r0 = phi_poly(order_), r1 = a;
  QPoly s0, s1{1};
  while (!(r1.size() == 1)) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw DomainError("non-invertible element in cyclotomic field");
  }
  mpq_class c = r1[0];
  for (auto& x : s1) x /= c;
  return CycRational(order_, reduce_mod(std::move(s1), phi_poly(order_)));
}

bool operator==(const CycRational& a, const CycRational& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  int l = std::lcm(a.order_, b.order_);
  return a.embed(l).c_ == b.embed(l).c_;
}

std::string CycRational::str() const {
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class mag = abs(c_[i]);
    bool neg = c_[i] < 0;
    std::string term;
    if (i == 0) {
      term = mag.get_str();
    } else {
      term = (mag == 1 ? std::string() : mag.get_str() + "*") + "z" + std::to_string(order_) + "^" +
             std::to_string(i);
    }
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  CycRational parse() {
    CycRational v = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar '" + std::string(s_) + "' at column " + std::to_string(p_ + 1) + ": " +
                     what + " (expected rational, z<N>^<k>, combined with + - *)");
  }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    size_t b = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (b == p_) fail("expected digits");
    return std::string(s_.substr(b, p_ - b));
  }
  CycRational expr() {
    CycRational v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  CycRational term() {
    CycRational v = factor();
    while (eat('*')) v *= factor();
    return v;
  }
  CycRational factor() {
    if (eat('-')) return -factor();
    if (eat('(')) {
      CycRational v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    skip();
    if (p_ < s_.size() && s_[p_] == 'z') {
      ++p_;
      int n = std::stoi(digits());
      if (n < 1) fail("root order must be positive");
      long long k = 1;
      if (eat('^')) {
        bool neg = eat('-');
        k = std::stoll(digits());
        if (neg) k = -k;
      }
      return CycRational::root_of_unity(n, k);
    }
    std::string num = digits();
    if (eat('/')) {
      std::string den = digits();
      mpz_class nz(num), dz(den);
      if (dz == 0) fail("zero denominator");
      mpq_class q(nz, dz);
      q.canonicalize();
      return CycRational(q);
    }
    return CycRational(mpq_class(mpz_class(num)));
  }

  std::string_view s_;
  size_t p_ = 0;
};

}  // namespace

CycRational CycRational::parse(std::string_view text) {
  return ScalarParser(text).parse();
}

bool root_of_unity_exponent(const CycRational& x, int n, int& k) {
  for (int e = 0; e < n; ++e)
    if (CycRational::root_of_unity(n, e) == x) {
      k = e;
      return true;
    }
  return false;
}

}  // namespace gia
