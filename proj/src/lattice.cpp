#include "pkarr/lattice.hpp"

#include <algorithm>
#include <set>

#include "pkarr/errors.hpp"

namespace pkarr {

namespace {

bool flat_order(const Flat& a, const Flat& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.closure < b.closure;
}

}  // namespace

IntersectionLattice::IntersectionLattice(Arrangement arr) : arr_(std::move(arr)) {
  if (arr_.size() == 0) throw InputError("arrangement has no hyperplanes");

  std::vector<Flat> level;
  for (int h = 0; h < arr_.size(); ++h) level.push_back(closure(arr_, {h}));
  std::set<IndexSet> seen;
  for (const auto& f : level) seen.insert(f.closure);
  flats_ = level;

  while (!level.empty()) {
    std::vector<Flat> next;
    for (const auto& f : level) {
      for (int h = 0; h < arr_.size(); ++h) {
        if (contains(f.closure, h)) continue;
        IndexSet grown = f.closure;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), h), h);
        Flat g = closure(arr_, grown);
        if (seen.insert(g.closure).second) next.push_back(std::move(g));
      }
    }
    flats_.insert(flats_.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(flats_.begin(), flats_.end(), flat_order);

  hyperplane_flat_.assign(static_cast<std::size_t>(arr_.size()), -1);
  for (int i = 0; i < size(); ++i) {
    const Flat& f = flats_[static_cast<std::size_t>(i)];
    index_.emplace(f.closure, i);
    components_.push_back(matroid_components(arr_.normal_matrix(f.closure)));
    for (auto& block : components_.back()) {
      for (int& k : block) k = f.closure[static_cast<std::size_t>(k)];
    }
    irreducible_.push_back(components_.back().size() == 1);
    if (f.rank == 1) hyperplane_flat_[static_cast<std::size_t>(f.closure.front())] = i;
    if (f.rank == arr_.dim() + 1) empty_ = i;
  }
}

std::optional<int> IntersectionLattice::find(const IndexSet& closure) const {
  const auto it = index_.find(closure);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool IntersectionLattice::subspace_of(int a, int b) const {
  return is_subset(flat(b).closure, flat(a).closure);
}

int IntersectionLattice::meet(int a, int b) const {
  IndexSet u;
  std::set_union(flat(a).closure.begin(), flat(a).closure.end(), flat(b).closure.begin(),
                 flat(b).closure.end(), std::back_inserter(u));
  if (const auto hit = find(u)) return *hit;
  return *find(closure(arr_, u).closure);
}

int IntersectionLattice::multiplicity(int i) const {
  if (rank(i) != 2) throw InputError("multiplicity is defined for rank-2 flats only");
  return static_cast<int>(flat(i).closure.size());
}

std::vector<int> IntersectionLattice::flats_of_rank(int r) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (rank(i) == r) out.push_back(i);
  }
  return out;
}

int IntersectionLattice::count_of_rank(int r) const {
  return static_cast<int>(flats_of_rank(r).size());
}

IntersectionLattice build_lattice(const Arrangement& arr) { return IntersectionLattice(arr); }

}  // namespace pkarr
