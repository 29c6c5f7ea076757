#pragma once

#include <vector>

#include "pkarr/wonder.hpp"

namespace pkarr {

/// Reduces degree-2 monomials using only the ring presentation: the span of
/// g_L * (sum of g_L' over L' inside H) for every generator L and hyperplane
/// H, plus every non-nested monomial. Independent of the projection table.
///
/// Construction row-reduces the relation matrix once with the non-basic
/// monomials as preferred pivots. Throws InternalError unless the pivots are
/// exactly the non-basic monomials, i.e. unless the basic monomials form a
/// basis of the quotient.
class PresentationOracle {
 public:
  explicit PresentationOracle(const WonderfulModel& model);

  /// Dimension of the degree-4 part of the quotient ring.
  int quotient_dimension() const { return quotient_dimension_; }
  int monomial_count() const { return static_cast<int>(pairs_.size()); }
  int relation_count() const { return relation_count_; }

  H4Class reduce(int a, int b) const;

 private:
  int column_of(int a, int b) const;

  const WonderfulModel& model_;
  std::vector<std::pair<int, int>> pairs_;  // column -> monomial
  std::vector<int> basis_of_column_;        // Delta_2 position, or -1
  std::vector<H4Class> reduced_;            // per column
  int quotient_dimension_ = 0;
  int relation_count_ = 0;
};

struct TableMismatch {
  int a = 0;
  int b = 0;
  MonomialType type = MonomialType::zero;
  H4Class table;
  H4Class oracle;
};

struct TableComparison {
  int monomials = 0;
  int quotient_dimension = 0;
  int delta2 = 0;
  std::vector<TableMismatch> mismatches;
  bool pass() const { return mismatches.empty() && quotient_dimension == delta2; }
};

/// reduce_monomial against the oracle on every unordered pair over G.
TableComparison compare_table_with_oracle(const WonderfulModel& model);

}  // namespace pkarr
