#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gia {

// Dense polynomial over Q, lowest degree first, no trailing zeros (zero polynomial is empty).
using QPoly = std::vector<mpq_class>;

// The N-th cyclotomic polynomial, by exact division of x^N - 1 by Phi_d over proper divisors d.
QPoly cyclotomic_polynomial(int n);
int euler_phi(int n);

// Exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).
// Values of different orders combine in Q(zeta_lcm).
class CycRational {
 public:
  CycRational();  // zero
  CycRational(long long v);  // NOLINT: rationals convert implicitly
  CycRational(const mpq_class& v);  // NOLINT
  CycRational(int order, std::vector<mpq_class> coeffs);

  static CycRational root_of_unity(int n, long long k);

  int order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  // The same value written in Q(zeta_m); m must be a multiple of order().
  CycRational embed(int m) const;

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // requires is_rational()

  CycRational inverse() const;

  CycRational& operator+=(const CycRational& o);
  CycRational& operator-=(const CycRational& o);
  CycRational& operator*=(const CycRational& o);
  CycRational& operator/=(const CycRational& o) { return *this *= o.inverse(); }

  friend CycRational operator+(CycRational a, const CycRational& b) { return a += b; }
  friend CycRational operator-(CycRational a, const CycRational& b) { return a -= b; }
  friend CycRational operator*(CycRational a, const CycRational& b) { return a *= b; }
  friend CycRational operator/(CycRational a, const CycRational& b) { return a /= b; }
  CycRational operator-() const;

  friend bool operator==(const CycRational& a, const CycRational& b);

  // "0", "3/2", "1/2 + z4^1", "-z6^1".
  std::string str() const;
  static CycRational parse(std::string_view text);

 private:
  int order_ = 1;
  std::vector<mpq_class> c_;
};

// The exponent k in [0, n) with zeta_n^k == x, if x is an n-th root of unity.
bool root_of_unity_exponent(const CycRational& x, int n, int& k);

}  // namespace gia
