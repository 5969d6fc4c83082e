#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gia/cyclotomic.hpp"

namespace gia {

// Dense matrix over the cyclotomic rationals.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols);

  static CycMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix scaled(const CycRational& s) const;
  CycMatrix transpose() const;
  CycMatrix pow(unsigned k) const;
  CycMatrix kron(const CycMatrix& o) const;

  bool is_zero() const;
  bool operator==(const CycMatrix& o) const;

  std::size_t rank() const;
  // Basis of {x : A x = 0}, each vector with a 1 in its free pivot position.
  std::vector<std::vector<CycRational>> nullspace() const;
  std::optional<CycMatrix> inverse() const;

  // Row-major nested lists in the scalar text syntax.
  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<CycRational> data_;
};

// Incremental row echelon form for rank tests on a growing set of vectors.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}
  // Adds v; returns false when v was already in the span.
  bool add(std::vector<CycRational> v);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<CycRational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace gia
