#include "pkarr/oracle.hpp"

#include "pkarr/errors.hpp"

namespace pkarr {

PresentationOracle::PresentationOracle(const WonderfulModel& model) : model_(model) {
  const int g = model.g_size();
  for (int a = 0; a < g; ++a) {
    for (int c = a; c < g; ++c) pairs_.emplace_back(a, c);
  }
  const std::size_t cols = pairs_.size();

  basis_of_column_.assign(cols, -1);
  std::vector<std::size_t> nonbasic;
  std::vector<std::size_t> basic;
  for (std::size_t col = 0; col < cols; ++col) {
    const auto [a, c] = pairs_[col];
    using Kind = BasicMonomial::Kind;
    std::optional<int> idx;
    if (a == c) {
      idx = model.basis_index({Kind::square, a, a});
    } else {
      idx = model.basis_index({Kind::transverse, a, c});
      if (!idx) idx = model.basis_index({Kind::chain, a, c});
      if (!idx) idx = model.basis_index({Kind::chain, c, a});
    }
    if (idx) {
      basis_of_column_[col] = *idx;
      basic.push_back(col);
    } else {
      nonbasic.push_back(col);
    }
  }

  Matrix relations(0, cols);
  Vector row(cols);
  for (std::size_t col = 0; col < cols; ++col) {
    const auto [a, c] = pairs_[col];
    if (model.is_nested_pair(a, c)) continue;
    std::fill(row.begin(), row.end(), Rational(0));
    row[col] = 1;
    relations.append_row(row);
  }
  const int hyperplanes = model.lattice().arrangement().size();
  for (int l = 0; l < g; ++l) {
    for (int h = 0; h < hyperplanes; ++h) {
      const int gh = model.g_hyperplane(h);
      std::fill(row.begin(), row.end(), Rational(0));
      for (int m = 0; m < g; ++m) {
        if (model.inside(m, gh)) row[static_cast<std::size_t>(column_of(l, m))] += 1;
      }
      relations.append_row(row);
    }
  }
  relation_count_ = static_cast<int>(relations.rows());

  std::vector<std::size_t> order = nonbasic;
  order.insert(order.end(), basic.begin(), basic.end());
  const RowEchelon e = row_reduce(relations, order);

  quotient_dimension_ = static_cast<int>(cols - e.pivots.size());
  if (e.pivots.size() != nonbasic.size() ||
      !std::equal(e.pivots.begin(), e.pivots.end(), nonbasic.begin())) {
    throw InternalError("presentation quotient has dimension " +
                        std::to_string(quotient_dimension_) + " but the basic monomial count is " +
                        std::to_string(model.delta2().size()) +
                        ", or the basic monomials are dependent");
  }

  reduced_.resize(cols);
  for (std::size_t col : basic) reduced_[col].add(basis_of_column_[col], 1);
  // Row r reads e_{pivot} + sum_j R[r][j] e_j = 0 modulo relations, with j
  // ranging over basic columns only.
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    H4Class cls;
    for (std::size_t col : basic) {
      const Rational& v = e.reduced(r, col);
      if (sgn(v) != 0) cls.add(basis_of_column_[col], -v);
    }
    reduced_[e.pivots[r]] = std::move(cls);
  }
}

int PresentationOracle::column_of(int a, int b) const {
  if (a > b) std::swap(a, b);
  const int g = model_.g_size();
  // Row-major over the upper triangle.
  return a * g - a * (a - 1) / 2 + (b - a);
}

H4Class PresentationOracle::reduce(int a, int b) const {
  return reduced_[static_cast<std::size_t>(column_of(a, b))];
}

TableComparison compare_table_with_oracle(const WonderfulModel& model) {
  const PresentationOracle oracle(model);
  TableComparison out;
  out.quotient_dimension = oracle.quotient_dimension();
  out.delta2 = static_cast<int>(model.delta2().size());
  for (int a = 0; a < model.g_size(); ++a) {
    for (int b = a; b < model.g_size(); ++b) {
      ++out.monomials;
      H4Class table = model.reduce_monomial(a, b);
      H4Class expected = oracle.reduce(a, b);
      if (!(table == expected)) {
        out.mismatches.push_back({a, b, model.classify(a, b), std::move(table), std::move(expected)});
      }
    }
  }
  return out;
}

}  // namespace pkarr
