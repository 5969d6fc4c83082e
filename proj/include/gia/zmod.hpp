#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Linear algebra over the ring Z_N: diagonalization by Smith-form elimination,
// Howell echelon forms for canonical coset representatives, and
// lexicographically smallest solutions of A x = b.
namespace gia::zmod {

using Vec = std::vector<std::int64_t>;

inline std::int64_t residue(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

struct Bezout {
  std::int64_t g, s, t;  // s*a + t*b = g >= 0
};
Bezout xgcd(std::int64_t a, std::int64_t b);

// A unit u of Z_N with u*a = gcd(a, N) (mod N).
std::int64_t normalizing_unit(std::int64_t a, std::int64_t n);

// Dense rows x cols matrix with entries reduced mod N.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::int64_t modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t modulus() const { return n_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  // Adds v to entry (r, c), reducing mod N.
  void add(std::size_t r, std::size_t c, std::int64_t v);

  Vec apply(std::span<const std::int64_t> x) const;

 private:
  std::size_t rows_, cols_;
  std::int64_t n_;
  Vec data_;
};

// Echelon basis of a Z_N-submodule with the Howell property: the elements whose
// first j coordinates vanish are spanned by the rows with pivot column >= j.
class Howell {
 public:
  Howell(std::size_t dim, std::int64_t modulus);
  Howell(std::size_t dim, std::int64_t modulus, const std::vector<Vec>& generators);

  void add(Vec v);

  // Lexicographically smallest element of v + span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;

  std::size_t dim() const { return dim_; }
  std::int64_t modulus() const { return n_; }
  // Number of elements of the span (may be huge; saturates at UINT64_MAX).
  std::uint64_t size() const;
  // Pivot rows in column order, with pivot entries dividing N.
  std::vector<Vec> rows() const;
  // Calls f on every element of the span, in a deterministic order.
  // Returns false (and stops) if f returns false.
  template <class F>
  bool for_each(F&& f) const;

 private:
  void insert(Vec v, std::size_t from_col);

  std::size_t dim_;
  std::int64_t n_;
  std::vector<std::optional<Vec>> pivot_;  // pivot_[j]: row with first nonzero at j
};

struct SolveResult {
  Vec particular;          // lexicographically smallest solution
  std::vector<Vec> kernel; // generators of the solution module of A x = 0
};

// Solves A x = b over Z_N. Returns nothing when insoluble.
std::optional<SolveResult> solve(const Matrix& a, std::span<const std::int64_t> b);
// Generators of {x : A x = 0}.
std::vector<Vec> kernel(const Matrix& a);

template <class F>
bool Howell::for_each(F&& f) const {
  std::vector<std::size_t> cols;
  std::vector<std::int64_t> bound;
  for (std::size_t j = 0; j < dim_; ++j)
    if (pivot_[j]) {
      cols.push_back(j);
      bound.push_back(n_ / (*pivot_[j])[j]);
    }
  std::vector<std::int64_t> coeff(cols.size(), 0);
  Vec v(dim_, 0);
  while (true) {
    if (!f(static_cast<const Vec&>(v))) return false;
    std::size_t i = cols.size();
    while (true) {
      if (i == 0) return true;
      --i;
      const Vec& row = *pivot_[cols[i]];
      for (std::size_t c = 0; c < dim_; ++c) v[c] = residue(v[c] + row[c], n_);
      if (++coeff[i] < bound[i]) break;
      coeff[i] = 0;  // undo the bound additions of this row
      for (std::size_t c = 0; c < dim_; ++c)
        v[c] = residue(v[c] - bound[i] % n_ * row[c], n_);
    }
  }
}

}  // namespace gia::zmod
