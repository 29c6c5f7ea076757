#pragma once

#include <cstdint>
#include <vector>

#include "pkarr/matrix.hpp"

namespace pkarr {

/// Sorted, duplicate-free hyperplane indices.
using IndexSet = std::vector<int>;

/// A projective hyperplane given by the integer normal of its linear form,
/// stored in canonical form: gcd 1, first nonzero entry positive.
class Hyperplane {
 public:
  /// Throws InputError for the zero vector.
  explicit Hyperplane(std::vector<std::int64_t> normal);

  const std::vector<std::int64_t>& normal() const { return normal_; }
  Vector rational_normal() const;

  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;

 private:
  std::vector<std::int64_t> normal_;
};

/// Hyperplanes in CP^n, sorted by canonical normal. Indices into this order
/// are the hyperplane identities used everywhere else.
class Arrangement {
 public:
  /// Canonicalizes and sorts. Throws InputError on wrong normal length or on
  /// two normals that agree up to scale.
  Arrangement(int dim, std::vector<Hyperplane> hyperplanes);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(hyperplanes_.size()); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](int i) const { return hyperplanes_[static_cast<std::size_t>(i)]; }

  /// Rows are the normals of `subset` (all hyperplanes when omitted).
  Matrix normal_matrix(const IndexSet& subset) const;
  Matrix normal_matrix() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  int dim_;
  std::vector<Hyperplane> hyperplanes_;
};

/// An intersection subspace, identified with the set of hyperplanes that
/// contain it. rank = codimension; rank n+1 is the empty subspace.
struct Flat {
  IndexSet closure;
  int rank = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
};

/// Flat spanned by `subset`: every hyperplane whose normal lies in the span
/// of the subset's normals. Throws InputError on an empty subset.
Flat closure(const Arrangement& arr, const IndexSet& subset);

/// Finest direct-sum splitting of the row configuration, as blocks of row
/// indices. Blocks are sorted, and ordered by their smallest element.
std::vector<IndexSet> matroid_components(const Matrix& normals);

bool is_essential(const Arrangement& arr);
bool is_irreducible(const Arrangement& arr);

/// Hyperplanes through a flat, in ambient coordinates.
struct Localization {
  Arrangement arrangement;
  IndexSet ambient_index;  // position i of the localization is hyperplane ambient_index[i]
};

Localization localize(const Arrangement& arr, const Flat& flat);

/// Rewrites the normals in coordinates of their own span, producing an
/// essential arrangement in CP^{r-1} where r is the rank of the normals.
/// `order` receives, for each hyperplane of the result, the index of the
/// input hyperplane it came from.
Arrangement essentialize(const Arrangement& arr, std::vector<int>* order = nullptr);

/// Set helpers on sorted index sets.
bool is_subset(const IndexSet& small, const IndexSet& big);
bool contains(const IndexSet& set, int value);

}  // namespace pkarr
