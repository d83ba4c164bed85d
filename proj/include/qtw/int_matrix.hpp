#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qtw/numeric.hpp"

namespace qtw {

// Dense integer matrix with arbitrary-precision entries.  All arithmetic is
// exact; unimodular transforms keep exact inverses alongside.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<std::int64_t>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  IntMatrix transposed() const;
  std::vector<BigInt> apply(const std::vector<BigInt>& v) const;  // matrix * column

  // Exact determinant (fraction-free expansion); square matrices only.
  BigInt determinant() const;
  bool is_unimodular() const;

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> e_;
};

struct SmithNormalForm {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // rows x cols, diagonal, d_i | d_{i+1}, d_i >= 0
  IntMatrix v;  // cols x cols, unimodular
  // u_inv and v_inv are maintained alongside so that lattice bookkeeping
  // never needs a matrix inversion: u * u_inv = I, v * v_inv = I.
  IntMatrix u_inv;
  IntMatrix v_inv;

  std::vector<std::int64_t> diagonal() const;
};

// U * M * V = D with U, V unimodular and D diagonal with successive
// divisibility.  Pivoting is deterministic: the minimal-|value| nonzero entry
// wins, ties broken by smallest (row, col).
SmithNormalForm smith_normal_form(const IntMatrix& m);

// Solves A * x = b exactly over the integers via a precomputed SNF of A.
// Throws Error when no integer solution exists.
std::vector<BigInt> solve_integer(const SmithNormalForm& snf_of_a, const std::vector<BigInt>& b);

}  // namespace qtw
