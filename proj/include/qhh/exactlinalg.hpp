#pragma once

// Exact linear algebra over ℚ for boundary matrices and small systems.

#include "qhh/qscalar.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qhh::linalg {

using Vector = std::vector<Rational>;
using DenseMatrix = std::vector<Vector>;  // row-major

class SparseExactMatrix {
 public:
  SparseExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }

  /// Adds to the entry; zero results are erased. Throws std::out_of_range.
  void add(std::size_t row, std::size_t col, const Rational& value);
  Rational at(std::size_t row, std::size_t col) const;
  const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const { return entries_; }

  SparseExactMatrix transposed() const;
  /// Keeps the listed rows and columns, in the given order.
  SparseExactMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  DenseMatrix to_dense() const;
  static SparseExactMatrix from_dense(const DenseMatrix& m, std::size_t cols);

  bool is_zero() const { return entries_.empty(); }
  friend SparseExactMatrix operator*(const SparseExactMatrix& a, const SparseExactMatrix& b);
  /// [a | b], same row count.
  static SparseExactMatrix hconcat(const SparseExactMatrix& a, const SparseExactMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

enum class PivotRule {
  /// Among candidate rows take the entry with the fewest numerator plus
  /// denominator bits.
  smallest_entry,
  /// Take the first candidate row.
  first_nonzero,
};

/// Exact rank over ℚ by sparse Gaussian elimination.
std::size_t rank(const SparseExactMatrix& m, PivotRule rule = PivotRule::smallest_entry);
/// cols − rank.
std::size_t kernel_dimension(const SparseExactMatrix& m);

/// Row-reduced echelon form of a dense matrix; returns the pivot columns.
std::vector<std::size_t> rref(DenseMatrix& m);
std::size_t rank(const DenseMatrix& m);

/// Basis of the null space {v : m v = 0}, one vector per free column.
std::vector<Vector> kernel_basis(const DenseMatrix& m, std::size_t cols);
std::vector<Vector> kernel_basis(const SparseExactMatrix& m);

struct AffineSolution {
  Vector particular;
  std::vector<Vector> kernel;
};

/// All solutions of a x = b, or nullopt when inconsistent.
std::optional<AffineSolution> solve(const DenseMatrix& a, const Vector& b, std::size_t cols);

Vector multiply(const SparseExactMatrix& m, const Vector& v);

}  // namespace qhh::linalg
