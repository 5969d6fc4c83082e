#include "gia/zmod.hpp"

#include <limits>
#include <numeric>
#include <utility>

#include "gia/errors.hpp"
#include <tuple>

namespace gia::zmod {

Bezout xgcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t normalizing_unit(std::int64_t a, std::int64_t n) {
  a = residue(a, n);
  if (a == 0 || n == 1) return 1;
  std::int64_t g = std::gcd(a, n);
  std::int64_t a1 = a / g, n1 = n / g;
  std::int64_t u = n1 == 1 ? 1 : residue(xgcd(a1, n1).s, n1);
  while (std::gcd(u, n) != 1) u += n1;
  return residue(u, n);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::int64_t modulus)
    : rows_(rows), cols_(cols), n_(modulus), data_(rows * cols, 0) {
  if (modulus < 1) throw DomainError("modulus must be positive");
}

void Matrix::add(std::size_t r, std::size_t c, std::int64_t v) {
  auto& x = (*this)(r, c);
  x = residue(x + v, n_);
}

Vec Matrix::apply(std::span<const std::int64_t> x) const {
  if (x.size() != cols_) throw DomainError("dimension mismatch in Matrix::apply");
  Vec y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = residue(acc + (*this)(r, c) * residue(x[c], n_), n_);
    y[r] = acc;
  }
  return y;
}

// ---------------------------------------------------------------- Howell

Howell::Howell(std::size_t dim, std::int64_t modulus) : dim_(dim), n_(modulus), pivot_(dim) {
  if (modulus < 1) throw DomainError("modulus must be positive");
}

Howell::Howell(std::size_t dim, std::int64_t modulus, const std::vector<Vec>& generators)
    : Howell(dim, modulus) {
  for (const auto& g : generators) add(g);
}

void Howell::add(Vec v) {
  if (v.size() != dim_) throw DomainError("generator has wrong dimension");
  for (auto& x : v) x = residue(x, n_);
  insert(std::move(v), 0);
}

void Howell::insert(Vec v, std::size_t from_col) {
  for (std::size_t j = from_col; j < dim_; ++j) {
    if (v[j] == 0) continue;
    if (!pivot_[j]) {
      std::int64_t u = normalizing_unit(v[j], n_);
      for (auto& x : v) x = residue(x * u, n_);
      std::int64_t g = v[j];
      Vec extra(dim_);
      bool nonzero = false;
      for (std::size_t c = 0; c < dim_; ++c) {
        extra[c] = residue((n_ / g) * v[c], n_);
        nonzero |= extra[c] != 0;
      }
      pivot_[j] = std::move(v);
      if (nonzero) insert(std::move(extra), j + 1);
      return;
    }
    Vec& p = *pivot_[j];
    std::int64_t g = p[j];
    if (v[j] % g == 0) {
      std::int64_t q = v[j] / g;
      for (std::size_t c = j; c < dim_; ++c) v[c] = residue(v[c] - q * p[c], n_);
      continue;
    }
    auto [d, s, t] = xgcd(g, v[j]);
    std::int64_t pg = g / d, vg = v[j] / d;
    Vec np(dim_), other(dim_);
    for (std::size_t c = 0; c < dim_; ++c) {
      np[c] = residue(s * p[c] + t * v[c], n_);
      other[c] = residue(vg * p[c] - pg * v[c], n_);
    }
    std::int64_t u = normalizing_unit(np[j], n_);
    for (auto& x : np) x = residue(x * u, n_);
    std::int64_t ng = np[j];
    Vec extra(dim_);
    bool nonzero = false;
    for (std::size_t c = 0; c < dim_; ++c) {
      extra[c] = residue((n_ / ng) * np[c], n_);
      nonzero |= extra[c] != 0;
    }
    p = std::move(np);
    if (nonzero) insert(std::move(extra), j + 1);
    insert(std::move(other), j + 1);
    return;
  }
}

Vec Howell::reduce(Vec v) const {
  if (v.size() != dim_) throw DomainError("vector has wrong dimension");
  for (auto& x : v) x = residue(x, n_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!pivot_[j] || v[j] == 0) continue;
    const Vec& p = *pivot_[j];
    std::int64_t q = v[j] / p[j];
    if (q == 0) continue;
    for (std::size_t c = j; c < dim_; ++c) v[c] = residue(v[c] - q * p[c], n_);
  }
  return v;
}

bool Howell::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (auto x : r)
    if (x) return false;
  return true;
}

std::uint64_t Howell::size() const {
  std::uint64_t s = 1;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!pivot_[j]) continue;
    std::uint64_t f = static_cast<std::uint64_t>(n_ / (*pivot_[j])[j]);
    if (s > std::numeric_limits<std::uint64_t>::max() / f) return std::numeric_limits<std::uint64_t>::max();
    s *= f;
  }
  return s;
}

std::vector<Vec> Howell::rows() const {
  std::vector<Vec> out;
  for (const auto& p : pivot_)
    if (p) out.push_back(*p);
  return out;
}

// ---------------------------------------------------------------- Smith-form solve

namespace {

struct Diagonalized {
  std::vector<std::int64_t> diag;  // pivots g_t | N, t < rank
  Matrix v;                        // column transform: x = V x'
  Vec rhs;                         // transformed right-hand side
};

// Reduces A to diagonal form U A V with deterministic pivots: among the remaining
// entries, the one with the smallest gcd(entry, N), first in row-major order.
Diagonalized diagonalize(Matrix a, Vec b) {
  const std::size_t m = a.rows(), n = a.cols();
  const std::int64_t N = a.modulus();
  Matrix v(n, n, N);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1 % N;
  std::vector<std::int64_t> diag;

  auto row_combine = [&](std::size_t r1, std::size_t r2, std::int64_t a11, std::int64_t a12,
                         std::int64_t a21, std::int64_t a22, std::size_t from) {
    for (std::size_t c = from; c < n; ++c) {
      std::int64_t x = a(r1, c), y = a(r2, c);
      a(r1, c) = residue(a11 * x + a12 * y, N);
      a(r2, c) = residue(a21 * x + a22 * y, N);
    }
    std::int64_t x = b[r1], y = b[r2];
    b[r1] = residue(a11 * x + a12 * y, N);
    b[r2] = residue(a21 * x + a22 * y, N);
  };
  auto col_combine = [&](std::size_t c1, std::size_t c2, std::int64_t a11, std::int64_t a21,
                         std::int64_t a12, std::int64_t a22, std::size_t from) {
    // new c1 = a11*c1 + a21*c2, new c2 = a12*c1 + a22*c2
    for (std::size_t r = from; r < m; ++r) {
      std::int64_t x = a(r, c1), y = a(r, c2);
      a(r, c1) = residue(a11 * x + a21 * y, N);
      a(r, c2) = residue(a12 * x + a22 * y, N);
    }
    for (std::size_t r = 0; r < n; ++r) {
      std::int64_t x = v(r, c1), y = v(r, c2);
      v(r, c1) = residue(a11 * x + a21 * y, N);
      v(r, c2) = residue(a12 * x + a22 * y, N);
    }
  };
  auto normalize_pivot = [&](std::size_t t) {
    std::int64_t u = normalizing_unit(a(t, t), N);
    if (u == 1) return;
    for (std::size_t c = t; c < n; ++c) a(t, c) = residue(a(t, c) * u, N);
    b[t] = residue(b[t] * u, N);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pr = m, pc = n;
    std::int64_t best = N;
    for (std::size_t r = t; r < m && best != 1; ++r)
      for (std::size_t c = t; c < n; ++c) {
        std::int64_t x = a(r, c);
        if (!x) continue;
        std::int64_t g = std::gcd(x, N);
        if (g < best) {
          best = g;
          pr = r;
          pc = c;
          if (g == 1) break;
        }
      }
    if (pr == m) break;
    if (pr != t) {
      for (std::size_t c = t; c < n; ++c) std::swap(a(t, c), a(pr, c));
      std::swap(b[t], b[pr]);
    }
    if (pc != t) {
      for (std::size_t r = t; r < m; ++r) std::swap(a(r, t), a(r, pc));
      for (std::size_t r = 0; r < n; ++r) std::swap(v(r, t), v(r, pc));
    }
    normalize_pivot(t);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        std::int64_t y = a(r, t);
        if (!y) continue;
        std::int64_t g = a(t, t);
        if (y % g == 0) {
          std::int64_t q = y / g;
          for (std::size_t c = t; c < n; ++c)
            if (a(t, c)) a(r, c) = residue(a(r, c) - q * a(t, c), N);
          b[r] = residue(b[r] - q * b[t], N);
        } else {
          auto [d, s, u] = xgcd(g, y);
          row_combine(t, r, s, u, y / d, -(g / d), t);
          normalize_pivot(t);
        }
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        std::int64_t y = a(t, c);
        if (!y) continue;
        std::int64_t g = a(t, t);
        if (y % g == 0) {
          std::int64_t q = y / g;
          col_combine(c, t, 1, -q, 0, 1, t);  // c -= q * t
        } else {
          auto [d, s, u] = xgcd(g, y);
          col_combine(t, c, s, u, y / d, -(g / d), t);
          normalize_pivot(t);
          clean = false;
        }
      }
      for (std::size_t r = t + 1; r < m && clean; ++r)
        if (a(r, t)) clean = false;
    }
    diag.push_back(a(t, t));
  }
  return {std::move(diag), std::move(v), std::move(b)};
}

std::vector<Vec> kernel_from(const Diagonalized& d, std::size_t n, std::int64_t N) {
  std::vector<Vec> out;
  for (std::size_t t = 0; t < n; ++t) {
    std::int64_t scale = t < d.diag.size() ? N / d.diag[t] : 1;
    if (scale % N == 0) continue;
    Vec col(n);
    bool nonzero = false;
    for (std::size_t r = 0; r < n; ++r) {
      col[r] = residue(d.v(r, t) * scale, N);
      nonzero |= col[r] != 0;
    }
    if (nonzero) out.push_back(std::move(col));
  }
  return out;
}

}  // namespace

std::optional<SolveResult> solve(const Matrix& a, std::span<const std::int64_t> b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side has wrong dimension");
  const std::int64_t N = a.modulus();
  Vec rhs(b.begin(), b.end());
  for (auto& x : rhs) x = residue(x, N);
  Diagonalized d = diagonalize(a, std::move(rhs));
  const std::size_t n = a.cols(), rank = d.diag.size();
  for (std::size_t r = rank; r < a.rows(); ++r)
    if (d.rhs[r] != 0) return std::nullopt;
  Vec xp(n, 0);
  for (std::size_t t = 0; t < rank; ++t) {
    if (d.rhs[t] % d.diag[t] != 0) return std::nullopt;
    xp[t] = d.rhs[t] / d.diag[t];
  }
  Vec x(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t acc = 0;
    for (std::size_t t = 0; t < rank; ++t) acc = residue(acc + d.v(r, t) * xp[t], N);
    x[r] = acc;
  }
  SolveResult out;
  out.kernel = kernel_from(d, n, N);
  Howell h(n, N, out.kernel);
  out.particular = h.reduce(std::move(x));
  return out;
}

std::vector<Vec> kernel(const Matrix& a) {
  Diagonalized d = diagonalize(a, Vec(a.rows(), 0));
  return kernel_from(d, a.cols(), a.modulus());
}

}  // namespace gia::zmod
