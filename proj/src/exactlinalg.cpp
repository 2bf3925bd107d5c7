#include "qhh/exactlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhh::linalg {

void SparseExactMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
  if (sgn(value) == 0) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) entries_.erase(it);
  }
}

Rational SparseExactMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index outside the matrix");
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational(0) : it->second;
}

SparseExactMatrix SparseExactMatrix::transposed() const {
  SparseExactMatrix t(cols_, rows_);
  for (const auto& [key, value] : entries_) t.entries_.emplace(std::make_pair(key.second, key.first), value);
  return t;
}

SparseExactMatrix SparseExactMatrix::submatrix(const std::vector<std::size_t>& rows,
                                               const std::vector<std::size_t>& cols) const {
  std::map<std::size_t, std::size_t> row_map;
  std::map<std::size_t, std::size_t> col_map;
  for (std::size_t k = 0; k < rows.size(); ++k) row_map[rows[k]] = k;
  for (std::size_t k = 0; k < cols.size(); ++k) col_map[cols[k]] = k;
  SparseExactMatrix sub(rows.size(), cols.size());
  for (const auto& [key, value] : entries_) {
    auto r = row_map.find(key.first);
    auto c = col_map.find(key.second);
    if (r != row_map.end() && c != col_map.end()) sub.add(r->second, c->second, value);
  }
  return sub;
}

DenseMatrix SparseExactMatrix::to_dense() const {
  DenseMatrix d(rows_, Vector(cols_, Rational(0)));
  for (const auto& [key, value] : entries_) d[key.first][key.second] = value;
  return d;
}

SparseExactMatrix SparseExactMatrix::from_dense(const DenseMatrix& m, std::size_t cols) {
  SparseExactMatrix s(m.size(), cols);
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) s.add(r, c, m[r][c]);
  }
  return s;
}

SparseExactMatrix operator*(const SparseExactMatrix& a, const SparseExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> b_rows;
  for (const auto& [key, value] : b.entries_) b_rows[key.first].emplace_back(key.second, value);
  SparseExactMatrix r(a.rows_, b.cols_);
  for (const auto& [key, value] : a.entries_) {
    auto it = b_rows.find(key.second);
    if (it == b_rows.end()) continue;
    for (const auto& [col, bv] : it->second) r.add(key.first, col, Rational(value * bv));
  }
  return r;
}

SparseExactMatrix SparseExactMatrix::hconcat(const SparseExactMatrix& a, const SparseExactMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat row mismatch");
  SparseExactMatrix r(a.rows_, a.cols_ + b.cols_);
  r.entries_ = a.entries_;
  for (const auto& [key, value] : b.entries_) r.entries_.emplace(std::make_pair(key.first, key.second + a.cols_), value);
  return r;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

std::size_t entry_size(const Rational& v) {
  return mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2);
}

/// row ← row − factor · pivot_row
void axpy(SparseRow& row, const Rational& factor, const SparseRow& pivot_row) {
  SparseRow out;
  out.reserve(row.size() + pivot_row.size());
  auto a = row.begin();
  auto b = pivot_row.begin();
  while (a != row.end() || b != pivot_row.end()) {
    if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, Rational(-factor * b->second));
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
}

}  // namespace

std::size_t rank(const SparseExactMatrix& m, PivotRule rule) {
  // Eliminate over the shorter dimension's vectors.
  const bool by_rows = m.rows() <= m.cols();
  std::vector<SparseRow> rows(by_rows ? m.rows() : m.cols());
  for (const auto& [key, value] : m.entries()) {
    auto r = by_rows ? key.first : key.second;
    auto c = by_rows ? key.second : key.first;
    rows[r].emplace_back(c, value);
  }
  for (auto& row : rows) std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }), rows.end());

  std::size_t r = 0;
  while (!rows.empty()) {
    // Pivot column: leading column that is smallest among all rows.
    std::size_t col = rows.front().front().first;
    for (const auto& row : rows) col = std::min(col, row.front().first);
    std::size_t pivot = rows.size();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].front().first != col) continue;
      if (pivot == rows.size()) {
        pivot = k;
        if (rule == PivotRule::first_nonzero) break;
      } else if (entry_size(rows[k].front().second) < entry_size(rows[pivot].front().second) ||
                 (entry_size(rows[k].front().second) == entry_size(rows[pivot].front().second) &&
                  rows[k].size() < rows[pivot].size())) {
        pivot = k;
      }
    }
    SparseRow pivot_row = std::move(rows[pivot]);
    rows.erase(rows.begin() + static_cast<long>(pivot));
    Rational inv = Rational(1) / pivot_row.front().second;
    for (auto& row : rows) {
      if (row.front().first != col) continue;
      Rational factor = row.front().second * inv;
      axpy(row, factor, pivot_row);
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& x) { return x.empty(); }), rows.end());
    ++r;
  }
  return r;
}

std::size_t kernel_dimension(const SparseExactMatrix& m) { return m.cols() - rank(m); }

std::vector<std::size_t> rref(DenseMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = m.size();
    for (std::size_t r = row; r < m.size(); ++r) {
      if (sgn(m[r][col]) != 0 && (pivot == m.size() || entry_size(m[r][col]) < entry_size(m[pivot][col]))) pivot = r;
    }
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    Rational inv = Rational(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const DenseMatrix& m) {
  DenseMatrix copy = m;
  return rref(copy).size();
}

std::vector<Vector> kernel_basis(const DenseMatrix& m, std::size_t cols) {
  DenseMatrix reduced = m;
  for (const auto& row : reduced) {
    if (row.size() != cols) throw std::invalid_argument("ragged dense matrix");
  }
  auto pivots = rref(reduced);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -reduced[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> kernel_basis(const SparseExactMatrix& m) { return kernel_basis(m.to_dense(), m.cols()); }

std::optional<AffineSolution> solve(const DenseMatrix& a, const Vector& b, std::size_t cols) {
  if (a.size() != b.size()) throw std::invalid_argument("right-hand side length mismatch");
  DenseMatrix augmented = a;
  for (std::size_t r = 0; r < augmented.size(); ++r) {
    if (augmented[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    augmented[r].push_back(b[r]);
  }
  auto pivots = rref(augmented);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  AffineSolution solution;
  solution.particular.assign(cols, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) solution.particular[pivots[k]] = augmented[k][cols];
  solution.kernel = kernel_basis(a, cols);
  return solution;
}

Vector multiply(const SparseExactMatrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("vector length mismatch");
  Vector out(m.rows(), Rational(0));
  for (const auto& [key, value] : m.entries()) out[key.first] += value * v[key.second];
  return out;
}

}  // namespace qhh::linalg
