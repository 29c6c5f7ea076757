#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pkarr/rational.hpp"

namespace pkarr {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws InputError if the rows are ragged.
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Reduced row echelon form. Pivots are chosen in the column order given by
/// `column_order` (all columns, identity order when empty); within a column
/// the first nonzero row is used.
struct RowEchelon {
  Matrix reduced;                     // nonzero rows only, one per pivot
  std::vector<std::size_t> pivots;    // pivot column of each row
};

RowEchelon row_reduce(const Matrix& m, std::span<const std::size_t> column_order = {});

std::size_t rank(const Matrix& m);

/// True iff `v` lies in the row span of `basis_rows`.
bool in_span(std::span<const Rational> v, const Matrix& basis_rows);

/// One exact solution x of generators^T * x = target, i.e. target expressed
/// as a combination of the generator rows. Free variables are set to zero;
/// pivots follow the first-nonzero rule, so the result is deterministic.
std::optional<Vector> solve_in_basis(std::span<const Rational> target, const Matrix& generators);

}  // namespace pkarr
