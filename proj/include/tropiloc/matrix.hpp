#pragma once

/**
 * @file matrix.hpp
 * @brief Dense (max,+) vectors and matrices.
 *
 * Vectors are column vectors unless an operation documents otherwise; the
 * row vectors produced by conjugate_transpose() share the TropVector type.
 */

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "tropiloc/scalar.hpp"

namespace tropiloc {

class TropVector {
 public:
  TropVector() = default;
  /// n entries, all bottom.
  explicit TropVector(std::size_t n) : entries_(n) {}
  explicit TropVector(std::vector<ExtendedScalar> entries) : entries_(std::move(entries)) {}
  /// Finite entries from reals.
  static TropVector from_reals(std::span<const double> values);
  TropVector(std::initializer_list<ExtendedScalar> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  ExtendedScalar operator[](std::size_t i) const { return entries_[i]; }
  ExtendedScalar& operator[](std::size_t i) { return entries_[i]; }
  std::span<const ExtendedScalar> entries() const { return entries_; }

  /// No entry is bottom.
  bool is_regular() const;
  /// Every entry is bottom.
  bool is_zero() const;

  /// Real values (-infinity for bottom entries).
  std::vector<double> values() const;

  friend bool operator==(const TropVector&, const TropVector&) = default;

 private:
  std::vector<ExtendedScalar> entries_;
};

class TropMatrix {
 public:
  TropMatrix() = default;
  /// rows x cols, all bottom.
  TropMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Row-major nested initializer; rows must have equal length.
  TropMatrix(std::initializer_list<std::initializer_list<ExtendedScalar>> rows);

  static TropMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  ExtendedScalar operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  ExtendedScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  /// Column j has no finite entry.
  bool is_zero_column(std::size_t j) const;
  bool has_zero_column() const;

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtendedScalar> entries_;
};

/// Componentwise tropical sum. Shapes must agree.
TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b);
TropVector vec_add(const TropVector& a, const TropVector& b);

/// Tropical product (n x k) (k x m) -> (n x m).
TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);
/// A x for a column vector x.
TropVector mat_vec(const TropMatrix& a, const TropVector& x);
/// x A for a row vector x.
TropVector vec_mat(const TropVector& x, const TropMatrix& a);
/// Row vector times column vector.
ExtendedScalar dot(const TropVector& row, const TropVector& col);

/// Scalar multiple (ordinary shift of every finite entry).
TropVector scale(ExtendedScalar c, const TropVector& x);

/// Multiplicative conjugate transpose: finite entries negated, bottom kept.
/// Throws DomainError for the zero vector.
TropVector conjugate_transpose(const TropVector& x);

/// Componentwise order; sizes must agree.
bool leq(const TropVector& a, const TropVector& b);
bool leq(const TropMatrix& a, const TropMatrix& b);

/// tr A: tropical sum of the diagonal.
ExtendedScalar trace(const TropMatrix& a);

/// Tr(A) = tr A + tr A^2 + ... + tr A^n, evaluated from matrix powers.
ExtendedScalar trace_of_powers(const TropMatrix& a);

struct ClosureResult {
  /// Tr(A); the maximum cycle weight of A.
  ExtendedScalar trace;
  /// A* = I + A + ... + A^{n-1}; present iff trace <= 0.
  std::optional<TropMatrix> star;
};

/// Computes Tr(A) and, when Tr(A) <= 0, the Kleene star via an O(n^3)
/// all-pairs relaxation. When a positive cycle is detected Tr(A) is
/// evaluated from powers instead.
ClosureResult trace_and_closure(const TropMatrix& a);

std::ostream& operator<<(std::ostream& os, const TropVector& x);
std::ostream& operator<<(std::ostream& os, const TropMatrix& a);

}  // namespace tropiloc
