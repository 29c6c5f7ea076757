#include "pkarr/generators.hpp"

#include <algorithm>
#include <random>

#include "pkarr/errors.hpp"

namespace pkarr {

namespace {

std::vector<std::int64_t> unit(int len, int i) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(len), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

std::vector<std::int64_t> braid_normal(int k, int i, int j) {
  // Coordinates x_1..x_{k-1}; x_k is gauged to zero.
  auto v = unit(k - 1, i - 1);
  if (j < k) v[static_cast<std::size_t>(j - 1)] = -1;
  return v;
}

// Every choice of `size` rows out of `rows` has full rank.
bool all_subsets_independent(const std::vector<std::vector<std::int64_t>>& rows, int size) {
  const int k = static_cast<int>(rows.size());
  std::vector<bool> pick(static_cast<std::size_t>(k), false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    Matrix m(0, rows.front().size());
    for (int i = 0; i < k; ++i) {
      if (!pick[static_cast<std::size_t>(i)]) continue;
      Vector row;
      for (auto x : rows[static_cast<std::size_t>(i)]) row.emplace_back(static_cast<long>(x));
      m.append_row(row);
    }
    if (static_cast<int>(rank(m)) != size) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

}  // namespace

Arrangement gen_braid(int k) {
  if (k < 3) throw InputError("braid arrangement needs k >= 3");
  std::vector<Hyperplane> hs;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) hs.emplace_back(braid_normal(k, i, j));
  }
  return Arrangement(k - 2, std::move(hs));
}

std::vector<std::pair<int, int>> braid_labels(int k) {
  const Arrangement arr = gen_braid(k);
  std::vector<std::pair<int, int>> labels;
  for (const auto& h : arr.hyperplanes()) {
    std::vector<int> support;
    for (int c = 0; c < k - 1; ++c) {
      if (h.normal()[static_cast<std::size_t>(c)] != 0) support.push_back(c + 1);
    }
    labels.emplace_back(support[0], support.size() == 2 ? support[1] : k);
  }
  return labels;
}

Arrangement gen_bm(int m) {
  if (m < 2) throw InputError("type B arrangement needs m >= 2");
  std::vector<Hyperplane> hs;
  for (int i = 0; i < m; ++i) {
    hs.emplace_back(unit(m, i));
    for (int j = i + 1; j < m; ++j) {
      auto plus = unit(m, i);
      plus[static_cast<std::size_t>(j)] = 1;
      auto minus = unit(m, i);
      minus[static_cast<std::size_t>(j)] = -1;
      hs.emplace_back(std::move(plus));
      hs.emplace_back(std::move(minus));
    }
  }
  return Arrangement(m - 1, std::move(hs));
}

Arrangement gen_seven_lines() {
  std::vector<Hyperplane> hs;
  for (std::vector<std::int64_t> v : {std::vector<std::int64_t>{1, 0, 0},
                                      {0, 1, 0},
                                      {0, 0, 1},
                                      {1, 1, 1},
                                      {-1, 1, 1},
                                      {1, -1, 1},
                                      {1, 1, -1}}) {
    hs.emplace_back(std::move(v));
  }
  return Arrangement(2, std::move(hs));
}

Arrangement gen_generic(int n, int k, std::uint64_t seed) {
  if (n < 1) throw InputError("generic arrangement needs n >= 1");
  if (k < n + 1) throw InputError("generic arrangement needs k >= n+1 hyperplanes");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  std::vector<std::vector<std::int64_t>> rows;
  while (static_cast<int>(rows.size()) < k) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n + 1));
    for (auto& x : v) x = entry(rng);
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) continue;
    rows.push_back(std::move(v));
    if (static_cast<int>(rows.size()) >= n + 1 && !all_subsets_independent(rows, n + 1)) {
      rows.pop_back();
    } else if (static_cast<int>(rows.size()) < n + 1 &&
               !all_subsets_independent(rows, static_cast<int>(rows.size()))) {
      rows.pop_back();
    }
  }
  std::vector<Hyperplane> hs;
  for (auto& r : rows) hs.emplace_back(std::move(r));
  return Arrangement(n, std::move(hs));
}

Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi, long denom) {
  if (!(lo < hi) || denom < 1) throw InputError("random_rational needs lo < hi and denom >= 1");
  std::uniform_int_distribution<long> den(2, denom > 2 ? denom : 2);
  const long q = den(rng);
  std::uniform_int_distribution<long> p(1, q - 1);
  return lo + (hi - lo) * (Rational(p(rng)) / q);
}

std::vector<Rational> random_simplex_point(std::mt19937_64& rng, int count, const Rational& total) {
  if (count < 1 || sgn(total) <= 0) throw InputError("random_simplex_point needs count >= 1, total > 0");
  std::uniform_int_distribution<long> part(1, 60);
  std::vector<Rational> out;
  Rational sum = 0;
  for (int i = 0; i < count; ++i) {
    out.emplace_back(part(rng));
    sum += out.back();
  }
  for (auto& x : out) x = x * total / sum;
  return out;
}

std::vector<Rational> random_unit_weights(std::mt19937_64& rng, int count) {
  std::vector<Rational> out;
  for (int i = 0; i < count; ++i) out.push_back(random_rational(rng, 0, 1));
  return out;
}

}  // namespace pkarr
