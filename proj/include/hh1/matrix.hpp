#pragma once

#include <cstddef>
#include <vector>

#include "hh1/field.hpp"

namespace hh1 {

using Vec = std::vector<FieldElem>;

// Dense matrix; all entries share one field.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), field_(Field::rationals()) {}
  Matrix(std::size_t rows, std::size_t cols, const Field& f)
      : rows_(rows), cols_(cols), field_(f), a_(rows * cols, f.zero()) {}

  static Matrix identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f) {
    Matrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldElem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const FieldElem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec row(std::size_t r) const {
    Vec v(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    return v;
  }
  Vec col(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
  }
  void set_row(std::size_t r, const Vec& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!(a_[i] == o.a_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    Matrix m(rows_, cols_, field_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix m(rows_, cols_, field_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
  }
  Matrix scaled(const FieldElem& c) const {
    Matrix m(rows_, cols_, field_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
  }
  Matrix transposed() const {
    Matrix m(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
  }

  Vec apply(const Vec& x) const {  // matrix * column vector
    Vec y(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
      FieldElem s = field_.zero();
      for (std::size_t c = 0; c < cols_; ++c)
        if (!at(r, c).is_zero() && !x[c].is_zero()) s += at(r, c) * x[c];
      y[r] = s;
    }
    return y;
  }

  FieldElem trace() const {
    FieldElem s = field_.zero();
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += at(i, i);
    return s;
  }

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<FieldElem> a_;
};

inline Vec zero_vec(std::size_t n, const Field& f) { return Vec(n, f.zero()); }

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec vec_scaled(const Vec& a, const FieldElem& c) {
  Vec r(a);
  for (auto& x : r) x = x * c;
  return r;
}

inline void vec_axpy(Vec& y, const FieldElem& c, const Vec& x) {  // y += c*x
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

}  // namespace hh1
