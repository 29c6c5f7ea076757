#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pkarr/arrangement.hpp"

namespace pkarr {

/// All flats of an arrangement with irreducibility marks. The bottom element
/// (the whole space) is implicit; the empty subspace is present exactly when
/// the arrangement is essential.
///
/// Flats are stored sorted by rank, then by closure, and addressed by their
/// position in that order.
class IntersectionLattice {
 public:
  explicit IntersectionLattice(Arrangement arr);

  const Arrangement& arrangement() const { return arr_; }
  int dim() const { return arr_.dim(); }
  int size() const { return static_cast<int>(flats_.size()); }

  const Flat& flat(int i) const { return flats_[static_cast<std::size_t>(i)]; }
  const std::vector<Flat>& flats() const { return flats_; }
  int rank(int i) const { return flat(i).rank; }
  bool irreducible(int i) const { return irreducible_[static_cast<std::size_t>(i)]; }
  /// Matroid components of the localized normal configuration, as blocks of
  /// ambient hyperplane indices.
  const std::vector<IndexSet>& components(int i) const {
    return components_[static_cast<std::size_t>(i)];
  }

  std::optional<int> find(const IndexSet& closure) const;
  /// Index of the rank-1 flat {H}.
  int hyperplane_flat(int h) const { return hyperplane_flat_[static_cast<std::size_t>(h)]; }
  /// Index of the empty subspace, if the arrangement is essential.
  std::optional<int> empty_flat() const { return empty_; }
  bool essential() const { return empty_.has_value(); }

  /// Subspace containment: flat a is contained in flat b (closure of b is a
  /// subset of the closure of a). Reflexive.
  bool subspace_of(int a, int b) const;
  /// The subspace intersection of two flats: the flat spanned by the union
  /// of their closures.
  int meet(int a, int b) const;
  /// Number of hyperplanes through a rank-2 flat. Throws InputError otherwise.
  int multiplicity(int i) const;

  std::vector<int> flats_of_rank(int r) const;
  int count_of_rank(int r) const;

 private:
  Arrangement arr_;
  std::vector<Flat> flats_;
  std::vector<bool> irreducible_;
  std::vector<std::vector<IndexSet>> components_;
  std::map<IndexSet, int> index_;
  std::vector<int> hyperplane_flat_;
  std::optional<int> empty_;
};

/// Builds the lattice by level saturation. Throws InputError on an empty
/// arrangement.
IntersectionLattice build_lattice(const Arrangement& arr);

}  // namespace pkarr
