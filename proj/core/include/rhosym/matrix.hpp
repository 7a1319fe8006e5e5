#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rhosym {

using Scalar = std::complex<double>;
using Vector = std::vector<Scalar>;

/// Scalar field of the underlying Hilbert space.
enum class Field { real, complex };

inline Field join(Field a, Field b) {
  return (a == Field::complex || b == Field::complex) ? Field::complex : Field::real;
}

/// Dense row-major operator on a finite-dimensional Hilbert space.
///
/// Entries are always stored as complex numbers. A matrix tagged Field::real
/// has identically zero imaginary parts; arithmetic results carry the joined
/// field of their operands.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::real);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, Field field);

  /// Builds from nested rows; the field is inferred from the imaginary parts.
  static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix identity(std::size_t n, Field field = Field::real);
  static Matrix zeros(std::size_t rows, std::size_t cols, Field field = Field::real);
  static Matrix diagonal(std::span<const Scalar> values);
  static Matrix diagonal(std::initializer_list<Scalar> values);
  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(std::span<const Vector> columns);
  /// The rank-one operator z ↦ ⟨z, v⟩ u.
  static Matrix outer(std::span<const Scalar> u, std::span<const Scalar> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }
  Field field() const noexcept { return field_; }

  Scalar operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const Scalar> entries() const noexcept { return entries_; }

  Vector column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const Scalar> values);
  /// Columns [first, first + count) as a rows×count matrix.
  Matrix columns(std::size_t first, std::size_t count) const;

  Matrix adjoint() const;
  Matrix hermitian_part() const;  // (M + M*)/2

  double max_abs() const;
  double frobenius() const;
  bool is_zero() const;
  bool has_only_finite_entries() const;

  /// Re-tags as real when every imaginary part is exactly zero.
  Matrix& settle_field();
  /// Re-tags as complex (no-op on the entries).
  Matrix& promote() {
    field_ = Field::complex;
    return *this;
  }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Scalar s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Scalar s) { return a *= s; }
  friend Matrix operator*(Scalar s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Scalar> x);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
  Field field_ = Field::real;
};

/// ⟨u, v⟩ = Σ u_i conj(v_i): linear in the first slot.
Scalar inner(std::span<const Scalar> u, std::span<const Scalar> v);
double norm2(std::span<const Scalar> v);
Vector scaled(std::span<const Scalar> v, Scalar s);
/// a + s·b
Vector axpy(std::span<const Scalar> a, Scalar s, std::span<const Scalar> b);
Vector unit_vector(std::size_t n, std::size_t k);

}  // namespace rhosym
