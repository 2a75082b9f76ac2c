#include "tropiloc/matrix.hpp"

#include <ostream>
#include <string>

#include "tropiloc/errors.hpp"

namespace tropiloc {

namespace {

void require_same_size(const TropVector& a, const TropVector& b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": vector sizes " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()) + " differ");
  }
}

void require_same_shape(const TropMatrix& a, const TropMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": matrix shapes differ");
  }
}

void require_square(const TropMatrix& a, const char* what) {
  if (!a.is_square()) throw DimensionError(std::string(what) + ": square matrix required");
}

}  // namespace

TropVector TropVector::from_reals(std::span<const double> values) {
  std::vector<ExtendedScalar> entries;
  entries.reserve(values.size());
  for (double v : values) entries.emplace_back(v);
  return TropVector(std::move(entries));
}

bool TropVector::is_regular() const {
  for (auto x : entries_) {
    if (x.is_bottom()) return false;
  }
  return true;
}

bool TropVector::is_zero() const {
  for (auto x : entries_) {
    if (x.is_finite()) return false;
  }
  return true;
}

std::vector<double> TropVector::values() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (auto x : entries_) out.push_back(x.value());
  return out;
}

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<ExtendedScalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("TropMatrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = ExtendedScalar::one();
  return out;
}

bool TropMatrix::is_zero_column(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, j).is_finite()) return false;
  }
  return true;
}

bool TropMatrix::has_zero_column() const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if (is_zero_column(j)) return true;
  }
  return false;
}

TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b) {
  require_same_shape(a, b, "mat_add");
  TropMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

TropVector vec_add(const TropVector& a, const TropVector& b) {
  require_same_size(a, b, "vec_add");
  TropVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  }
  TropMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const ExtendedScalar ail = a(i, l);
      if (ail.is_bottom()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += ail * b(l, j);
    }
  }
  return out;
}

TropVector mat_vec(const TropMatrix& a, const TropVector& x) {
  if (a.cols() != x.size()) throw DimensionError("mat_vec: shape mismatch");
  TropVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ExtendedScalar acc;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

TropVector vec_mat(const TropVector& x, const TropMatrix& a) {
  if (a.rows() != x.size()) throw DimensionError("vec_mat: shape mismatch");
  TropVector out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    ExtendedScalar acc;
    for (std::size_t i = 0; i < a.rows(); ++i) acc += x[i] * a(i, j);
    out[j] = acc;
  }
  return out;
}

ExtendedScalar dot(const TropVector& row, const TropVector& col) {
  require_same_size(row, col, "dot");
  ExtendedScalar acc;
  for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * col[i];
  return acc;
}

TropVector scale(ExtendedScalar c, const TropVector& x) {
  TropVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return out;
}

TropVector conjugate_transpose(const TropVector& x) {
  if (x.is_zero()) throw DomainError("conjugate_transpose: zero vector");
  TropVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i].is_bottom() ? ExtendedScalar::bottom() : x[i].inverse();
  }
  return out;
}

bool leq(const TropVector& a, const TropVector& b) {
  require_same_size(a, b, "leq");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] <= b[i])) return false;
  }
  return true;
}

bool leq(const TropMatrix& a, const TropMatrix& b) {
  require_same_shape(a, b, "leq");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) <= b(i, j))) return false;
    }
  }
  return true;
}

ExtendedScalar trace(const TropMatrix& a) {
  require_square(a, "trace");
  ExtendedScalar acc;
  for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
  return acc;
}

ExtendedScalar trace_of_powers(const TropMatrix& a) {
  require_square(a, "trace_of_powers");
  TropMatrix power = a;
  ExtendedScalar acc = trace(power);
  for (std::size_t k = 2; k <= a.rows(); ++k) {
    power = mat_mul(power, a);
    acc += trace(power);
  }
  return acc;
}

namespace {

TropMatrix star_from_powers(const TropMatrix& a) {
  const std::size_t n = a.rows();
  TropMatrix acc = TropMatrix::identity(n);
  TropMatrix power = TropMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = mat_mul(power, a);
    acc = mat_add(acc, power);
  }
  return acc;
}

}  // namespace

ClosureResult trace_and_closure(const TropMatrix& a) {
  require_square(a, "trace_and_closure");
  const std::size_t n = a.rows();
  if (n == 0) throw DimensionError("trace_and_closure: empty matrix");

  // Longest-path relaxation; valid while no cycle has positive weight.
  TropMatrix paths = a;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const ExtendedScalar through = paths(i, k);
      if (through.is_bottom()) continue;
      for (std::size_t j = 0; j < n; ++j) paths(i, j) += through * paths(k, j);
    }
  }

  ExtendedScalar cycle;
  for (std::size_t i = 0; i < n; ++i) cycle += paths(i, i);

  if (cycle <= ExtendedScalar::one()) {
    for (std::size_t i = 0; i < n; ++i) paths(i, i) += ExtendedScalar::one();
    return {cycle, std::move(paths)};
  }

  // Positive cycle: report the exact Tr(A). Rounding may in principle place
  // the relaxation and the power sums on different sides of zero.
  const ExtendedScalar tr = trace_of_powers(a);
  if (tr <= ExtendedScalar::one()) return {tr, star_from_powers(a)};
  return {tr, std::nullopt};
}

std::ostream& operator<<(std::ostream& os, const TropVector& x) {
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const TropMatrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace tropiloc
