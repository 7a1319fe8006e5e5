#include "rhosym/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "rhosym/error.hpp"

namespace rhosym {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::zero_operator: return "ZeroOperator";
    case ErrorCode::zero_vector: return "ZeroVector";
    case ErrorCode::zero_base_point: return "ZeroBasePoint";
    case ErrorCode::unsupported_dimension: return "UnsupportedDimension";
    case ErrorCode::construction_failed: return "ConstructionFailed";
    case ErrorCode::shift_failed: return "ShiftFailed";
    case ErrorCode::bad_sequence: return "BadSequence";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), entries_(rows * cols), field_(field) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, Field field)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), field_(field) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::shape_mismatch, "entry count does not match rows*cols");
  }
  if (field_ == Field::real) {
    for (const auto& e : entries_) {
      if (e.imag() != 0.0) throw Error(ErrorCode::invalid_argument, "real matrix with imaginary entry");
    }
  }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::shape_mismatch, "ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  Matrix m(r, c, std::move(entries), Field::complex);
  return m.settle_field();
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols, Field field) { return Matrix(rows, cols, field); }

Matrix Matrix::diagonal(std::span<const Scalar> values) {
  Matrix m(values.size(), values.size(), Field::complex);
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m.settle_field();
}

Matrix Matrix::diagonal(std::initializer_list<Scalar> values) {
  return diagonal(std::span<const Scalar>(values.begin(), values.size()));
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns.front().size();
  Matrix m(n, columns.size(), Field::complex);
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m.settle_field();
}

Matrix Matrix::outer(std::span<const Scalar> u, std::span<const Scalar> v) {
  Matrix m(u.size(), v.size(), Field::complex);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  }
  return m.settle_field();
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, std::span<const Scalar> values) {
  if (values.size() != rows_) throw Error(ErrorCode::shape_mismatch, "column length");
  for (std::size_t i = 0; i < rows_; ++i) {
    (*this)(i, j) = values[i];
    if (values[i].imag() != 0.0) field_ = Field::complex;
  }
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  Matrix m(rows_, count, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

Matrix Matrix::hermitian_part() const {
  if (!is_square()) throw Error(ErrorCode::shape_mismatch, "hermitian part of non-square matrix");
  Matrix h(rows_, cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    h(i, i) = (*this)(i, i).real();
    for (std::size_t j = i + 1; j < cols_; ++j) {
      const Scalar v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double Matrix::frobenius() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Scalar e) { return e == Scalar{}; });
}

bool Matrix::has_only_finite_entries() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Scalar e) { return std::isfinite(e.real()) && std::isfinite(e.imag()); });
}

Matrix& Matrix::settle_field() {
  const bool real = std::all_of(entries_.begin(), entries_.end(), [](Scalar e) { return e.imag() == 0.0; });
  field_ = real ? Field::real : Field::complex;
  return *this;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::shape_mismatch, "matrix sum");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  field_ = join(field_, other.field_);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::shape_mismatch, "matrix difference");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  field_ = join(field_, other.field_);
  return *this;
}

Matrix& Matrix::operator*=(Scalar s) {
  for (auto& e : entries_) e *= s;
  if (s.imag() != 0.0) field_ = Field::complex;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::shape_mismatch, "matrix product");
  Matrix c(a.rows_, b.cols_, join(a.field_, b.field_));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar aik = a(i, k);
      if (aik == Scalar{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Vector operator*(const Matrix& a, std::span<const Scalar> x) {
  if (a.cols_ != x.size()) throw Error(ErrorCode::shape_mismatch, "matrix-vector product");
  Vector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Scalar s{};
    for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Scalar inner(std::span<const Scalar> u, std::span<const Scalar> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::shape_mismatch, "inner product");
  Scalar s{};
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * std::conj(v[i]);
  return s;
}

double norm2(std::span<const Scalar> v) {
  double s = 0.0;
  for (const auto& e : v) s += std::norm(e);
  return std::sqrt(s);
}

Vector scaled(std::span<const Scalar> v, Scalar s) {
  Vector out(v.begin(), v.end());
  for (auto& e : out) e *= s;
  return out;
}

Vector axpy(std::span<const Scalar> a, Scalar s, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::shape_mismatch, "axpy");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
  return out;
}

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector e(n);
  e.at(k) = 1.0;
  return e;
}

}  // namespace rhosym
