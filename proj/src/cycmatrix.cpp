#include "gia/cycmatrix.hpp"

#include <sstream>

#include "gia/errors.hpp"

namespace gia {

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CycMatrix CycMatrix::identity(std::size_t n) {
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
  CycMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const CycRational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
    }
  return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum shape mismatch");
  CycMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const { return *this + o.scaled(-1); }

CycMatrix CycMatrix::scaled(const CycRational& s) const {
  CycMatrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

CycMatrix CycMatrix::pow(unsigned k) const {
  if (rows_ != cols_) throw DomainError("power of a non-square matrix");
  CycMatrix r = identity(rows_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

CycMatrix CycMatrix::kron(const CycMatrix& o) const {
  CycMatrix r(rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const CycRational& a = (*this)(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l) r(i * o.rows_ + k, j * o.cols_ + l) = a * o(k, l);
    }
  return r;
}

bool CycMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<CycRational>>& m, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    CycRational inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      CycRational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::vector<std::vector<CycRational>> as_rows(const CycMatrix& a) {
  std::vector<std::vector<CycRational>> m(a.rows(), std::vector<CycRational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

}  // namespace

std::size_t CycMatrix::rank() const {
  auto m = as_rows(*this);
  return rref(m, cols_).size();
}

std::vector<std::vector<CycRational>> CycMatrix::nullspace() const {
  auto m = as_rows(*this);
  auto piv = rref(m, cols_);
  std::vector<bool> is_piv(cols_, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<CycRational>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_piv[f]) continue;
    std::vector<CycRational> v(cols_);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<CycMatrix> CycMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  std::vector<std::vector<CycRational>> m(n, std::vector<CycRational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (*this)(i, j);
    m[i][n + i] = 1;
  }
  auto piv = rref(m, 2 * n);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  CycMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = m[i][n + j];
  return r;
}

std::string CycMatrix::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).str();
    out << "]";
  }
  out << "]";
  return out.str();
}

bool Echelon::add(std::vector<CycRational> v) {
  if (v.size() != dim_) throw DomainError("echelon vector has wrong dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    CycRational f = v[p];
    for (std::size_t j = p; j < dim_; ++j)
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
  }
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  CycRational inv = v[p].inverse();
  for (std::size_t j = p; j < dim_; ++j) v[j] *= inv;
  // keep earlier rows reduced at the new pivot so later reductions stay single-pass
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    CycRational f = row[p];
    for (std::size_t j = p; j < dim_; ++j)
      if (!v[j].is_zero()) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace gia
