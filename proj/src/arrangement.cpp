#include "pkarr/arrangement.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pkarr/errors.hpp"

namespace pkarr {

Hyperplane::Hyperplane(std::vector<std::int64_t> normal) : normal_(std::move(normal)) {
  std::int64_t g = 0;
  for (auto x : normal_) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) throw InputError("hyperplane normal is the zero vector");
  const auto lead = std::find_if(normal_.begin(), normal_.end(), [](auto x) { return x != 0; });
  const std::int64_t scale = *lead < 0 ? -g : g;
  for (auto& x : normal_) x /= scale;
}

Vector Hyperplane::rational_normal() const {
  Vector v;
  v.reserve(normal_.size());
  for (auto x : normal_) v.emplace_back(static_cast<long>(x));
  return v;
}

Arrangement::Arrangement(int dim, std::vector<Hyperplane> hyperplanes)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)) {
  if (dim_ < 1) throw InputError("projective dimension must be at least 1");
  for (const auto& h : hyperplanes_) {
    if (static_cast<int>(h.normal().size()) != dim_ + 1) {
      throw InputError("normal has " + std::to_string(h.normal().size()) +
                       " entries, expected " + std::to_string(dim_ + 1));
    }
  }
  std::sort(hyperplanes_.begin(), hyperplanes_.end());
  if (std::adjacent_find(hyperplanes_.begin(), hyperplanes_.end()) != hyperplanes_.end()) {
    throw InputError("duplicate hyperplane in arrangement");
  }
}

Matrix Arrangement::normal_matrix(const IndexSet& subset) const {
  Matrix m(0, static_cast<std::size_t>(dim_ + 1));
  for (int i : subset) m.append_row((*this)[i].rational_normal());
  return m;
}

Matrix Arrangement::normal_matrix() const {
  IndexSet all(hyperplanes_.size());
  std::iota(all.begin(), all.end(), 0);
  return normal_matrix(all);
}

namespace {

// v lies in the span of an RREF system iff clearing the pivot entries leaves 0.
bool reduces_to_zero(const Vector& v, const RowEchelon& e) {
  Vector w = v;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const Rational f = w[e.pivots[r]];
    if (sgn(f) == 0) continue;
    const auto row = e.reduced.row(r);
    for (std::size_t c = 0; c < w.size(); ++c) w[c] -= f * row[c];
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) == 0; });
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Flat closure(const Arrangement& arr, const IndexSet& subset) {
  if (subset.empty()) throw InputError("closure of an empty hyperplane set");
  const RowEchelon e = row_reduce(arr.normal_matrix(subset));
  Flat f;
  f.rank = static_cast<int>(e.pivots.size());
  for (int i = 0; i < arr.size(); ++i) {
    if (contains(subset, i) || reduces_to_zero(arr[i].rational_normal(), e)) f.closure.push_back(i);
  }
  return f;
}

std::vector<IndexSet> matroid_components(const Matrix& normals) {
  const int n = static_cast<int>(normals.rows());
  std::vector<int> basis;
  Matrix basis_rows(0, normals.cols());
  std::vector<int> dependent;
  for (int i = 0; i < n; ++i) {
    if (basis_rows.rows() > 0 && in_span(normals.row(static_cast<std::size_t>(i)), basis_rows)) {
      dependent.push_back(i);
    } else {
      basis.push_back(i);
      basis_rows.append_row(normals.row(static_cast<std::size_t>(i)));
    }
  }

  UnionFind uf(n);
  for (int i : dependent) {
    const auto coeffs = solve_in_basis(normals.row(static_cast<std::size_t>(i)), basis_rows);
    for (std::size_t j = 0; j < coeffs->size(); ++j) {
      if (sgn((*coeffs)[j]) != 0) uf.unite(i, basis[j]);
    }
  }

  std::vector<IndexSet> blocks;
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int root = uf.find(i);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[root])].push_back(i);
  }
  return blocks;
}

bool is_essential(const Arrangement& arr) {
  return arr.size() > 0 && static_cast<int>(rank(arr.normal_matrix())) == arr.dim() + 1;
}

bool is_irreducible(const Arrangement& arr) {
  return arr.size() > 0 && matroid_components(arr.normal_matrix()).size() == 1;
}

Localization localize(const Arrangement& arr, const Flat& flat) {
  std::vector<Hyperplane> hs;
  for (int i : flat.closure) hs.push_back(arr[i]);
  // Sorted order of a sub-list of a sorted list is preserved.
  return {Arrangement(arr.dim(), std::move(hs)), flat.closure};
}

Arrangement essentialize(const Arrangement& arr, std::vector<int>* order) {
  const Matrix normals = arr.normal_matrix();
  Matrix basis_rows(0, normals.cols());
  for (std::size_t i = 0; i < normals.rows(); ++i) {
    if (basis_rows.rows() == 0 || !in_span(normals.row(i), basis_rows)) {
      basis_rows.append_row(normals.row(i));
    }
  }
  const int r = static_cast<int>(basis_rows.rows());
  if (r < 2) throw InputError("essentialize needs normals of rank at least 2");

  std::vector<std::pair<Hyperplane, int>> tagged;
  for (std::size_t i = 0; i < normals.rows(); ++i) {
    const Vector coeffs = *solve_in_basis(normals.row(i), basis_rows);
    Integer lcm = 1;
    for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<std::int64_t> ints;
    for (const auto& c : coeffs) {
      const Integer v = c.get_num() * (lcm / c.get_den());
      if (!v.fits_slong_p()) throw InputError("essentialized normal overflows 64-bit integers");
      ints.push_back(v.get_si());
    }
    tagged.emplace_back(Hyperplane(std::move(ints)), static_cast<int>(i));
  }
  std::sort(tagged.begin(), tagged.end());
  std::vector<Hyperplane> hs;
  if (order) order->clear();
  for (auto& [h, i] : tagged) {
    hs.push_back(h);
    if (order) order->push_back(i);
  }
  return Arrangement(r - 1, std::move(hs));
}

bool is_subset(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool contains(const IndexSet& set, int value) {
  return std::binary_search(set.begin(), set.end(), value);
}

}  // namespace pkarr
