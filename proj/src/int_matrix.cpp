#include "qtw/int_matrix.hpp"

#include <sstream>

#include "qtw/error.hpp"

namespace qtw {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  e_.resize(rows_ * cols_);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("IntMatrix: ragged initializer");
    std::size_t j = 0;
    for (auto x : r) at(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<std::int64_t>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("IntMatrix: size mismatch in product");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("IntMatrix: size mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("IntMatrix: size mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& v) const {
  if (v.size() != cols_) throw Error("IntMatrix: vector size mismatch");
  std::vector<BigInt> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error("IntMatrix: determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; divisions are exact.
  IntMatrix a = *this;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = t / prev;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : BigInt(-a.at(n - 1, n - 1));
}

bool IntMatrix::is_unimodular() const {
  if (rows_ != cols_) return false;
  BigInt d = determinant();
  return d == 1 || d == -1;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<std::int64_t> SmithNormalForm::diagonal() const {
  std::vector<std::int64_t> out;
  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt& x = d.at(i, i);
    if (x > INT64_MAX) throw OverflowError("SNF diagonal entry exceeds int64");
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

namespace {

struct Work {
  IntMatrix a, u, v, u_inv, v_inv;

  // Row ops touch (a, u) and mirror inversely on u_inv; column ops touch
  // (a, v) and mirror on v_inv.
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    for (std::size_t r = 0; r < u_inv.rows(); ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    for (std::size_t c = 0; c < v_inv.cols(); ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {  // row_dst += k*row_src
    if (k == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(dst, c) += k * a.at(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += k * u.at(src, c);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv.at(r, src) -= k * u_inv.at(r, dst);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {  // col_dst += k*col_src
    if (k == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, dst) += k * a.at(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, dst) += k * v.at(r, src);
    for (std::size_t c = 0; c < v_inv.cols(); ++c) v_inv.at(src, c) -= k * v_inv.at(dst, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    for (std::size_t r = 0; r < u_inv.rows(); ++r) u_inv.at(r, i) = -u_inv.at(r, i);
  }
};

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  Work w{m, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(rows),
         IntMatrix::identity(cols)};
  std::size_t t = 0;
  std::size_t steps = std::min(rows, cols);
  while (t < steps) {
    // Deterministic pivot: minimal |value| among nonzero entries of the
    // trailing submatrix, ties by (row, col).
    bool found = false;
    std::size_t pi = t, pj = t;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const BigInt& x = w.a.at(i, j);
        if (x == 0) continue;
        BigInt ax = abs_big(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.a.at(i, t) == 0) continue;
        BigInt q = w.a.at(i, t) / w.a.at(t, t);  // truncated: |remainder| < |pivot|
        w.add_row(i, t, -q);
        if (w.a.at(i, t) != 0) {
          w.swap_rows(t, i);  // strictly smaller pivot
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.a.at(t, j) == 0) continue;
        BigInt q = w.a.at(t, j) / w.a.at(t, t);
        w.add_col(j, t, -q);
        if (w.a.at(t, j) != 0) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide the rest of the submatrix; if not, fold the
      // offending row in and re-eliminate.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.add_row(t, i, 1);
            clean = false;
          }
    }
    if (w.a.at(t, t) < 0) w.negate_row(t);
    ++t;
  }
  // Diagonal already satisfies divisibility by the folding step above; assert.
  for (std::size_t i = 0; i + 1 < t; ++i)
    if (w.a.at(i + 1, i + 1) % w.a.at(i, i) != 0)
      throw Error("SNF internal error: divisibility chain broken");
  return SmithNormalForm{std::move(w.u), std::move(w.a), std::move(w.v), std::move(w.u_inv),
                         std::move(w.v_inv)};
}

std::vector<BigInt> solve_integer(const SmithNormalForm& s, const std::vector<BigInt>& b) {
  // A = U^-1 D V^-1, so A x = b  <=>  D (V^-1 x) = U b.
  std::vector<BigInt> c = s.u.apply(b);
  std::size_t rank = std::min(s.d.rows(), s.d.cols());
  std::vector<BigInt> y(s.d.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const BigInt di = i < rank ? s.d.at(i, i) : BigInt(0);
    if (di == 0) {
      if (c[i] != 0) throw Error("solve_integer: inconsistent system");
    } else {
      if (c[i] % di != 0) throw Error("solve_integer: no integral solution");
      y[i] = c[i] / di;
    }
  }
  return s.v.apply(y);
}

}  // namespace qtw
