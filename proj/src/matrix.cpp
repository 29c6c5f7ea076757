#include "pkarr/matrix.hpp"

#include <numeric>

#include "pkarr/errors.hpp"

namespace pkarr {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  Matrix m(0, rows.empty() ? 0 : rows.front().size());
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && entries_.empty() && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) {
    throw InputError("row length " + std::to_string(values.size()) + " does not match " +
                     std::to_string(cols_) + " columns");
  }
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

RowEchelon row_reduce(const Matrix& m, std::span<const std::size_t> column_order) {
  std::vector<std::size_t> order;
  if (column_order.empty()) {
    order.resize(m.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
  } else {
    if (column_order.size() != m.cols()) throw InputError("column order has wrong length");
    order.assign(column_order.begin(), column_order.end());
  }

  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col : order) {
    if (next_row == a.rows()) break;
    std::size_t p = next_row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != next_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(next_row, c));
    }
    const Rational inv = 1 / a(next_row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(next_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == next_row || sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (sgn(a(next_row, c)) != 0) a(r, c) -= f * a(next_row, c);
      }
    }
    pivots.push_back(col);
    ++next_row;
  }

  RowEchelon out;
  out.reduced = Matrix(0, a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.reduced.append_row(a.row(r));
  out.pivots = std::move(pivots);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

bool in_span(std::span<const Rational> v, const Matrix& basis_rows) {
  if (v.size() != basis_rows.cols()) throw InputError("in_span: dimension mismatch");
  Matrix augmented = basis_rows;
  const std::size_t before = rank(basis_rows);
  augmented.append_row(v);
  return rank(augmented) == before;
}

std::optional<Vector> solve_in_basis(std::span<const Rational> target, const Matrix& generators) {
  if (target.size() != generators.cols()) throw InputError("solve_in_basis: dimension mismatch");
  // Columns of the system matrix are the generator rows; augment with target.
  const std::size_t k = generators.rows();
  Matrix system(generators.cols(), k + 1);
  for (std::size_t i = 0; i < generators.cols(); ++i) {
    for (std::size_t j = 0; j < k; ++j) system(i, j) = generators(j, i);
    system(i, k) = target[i];
  }
  const RowEchelon e = row_reduce(system);
  Vector x(k);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == k) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, k);
  }
  return x;
}

}  // namespace pkarr
