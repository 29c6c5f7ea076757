#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pkarr/lattice.hpp"

namespace pkarr {

/// A degree-2 basic monomial of the minimal wonderful model. Operands are
/// indices into the model's list of irreducible subspaces (G-indices).
///  square:     g_a^2, r(a) >= 3 (a == b)
///  chain:      g_a * g_b, a strictly inside b with rank gap >= 2, r(b) >= 2
///  transverse: g_a * g_b, reducible intersection, both ranks >= 2, a < b
struct BasicMonomial {
  enum class Kind { square, chain, transverse };
  Kind kind;
  int a;
  int b;

  friend auto operator<=>(const BasicMonomial&, const BasicMonomial&) = default;
};

/// Sparse rational vector over a fixed ordered basis (positions into the
/// basis list). Zero coordinates are never stored.
class SparseClass {
 public:
  void add(int key, const Rational& c);
  void add(const SparseClass& other, const Rational& scale = 1);
  Rational at(int key) const;
  const std::map<int, Rational>& coords() const { return coords_; }
  bool zero() const { return coords_.empty(); }

  friend bool operator==(const SparseClass&, const SparseClass&) = default;

 private:
  std::map<int, Rational> coords_;
};

/// Degree-4 class over the basic monomial basis (keys index delta2()).
using H4Class = SparseClass;

/// Degree-2 class over {pi^*h} and {g_L : L nonempty, irreducible, rank >= 2}.
struct H2Class {
  Rational pullback_h = 0;
  SparseClass gamma;  // keyed by G-index

  friend bool operator==(const H2Class&, const H2Class&) = default;
};

/// Formal linear combination of generators before reduction.
struct FormalH2 {
  Rational pullback_h = 0;
  std::map<int, Rational> gamma;  // keyed by G-index
};

/// Formal combination of degree-2 monomials, keyed by the G-index pair
/// (smaller index first).
using FormalH4 = std::map<std::pair<int, int>, Rational>;
void add_monomial(FormalH4& sum, int a, int b, const Rational& c);

enum class MonomialType { zero, basic, m1, m2, m3, m4, m5, m6, m7 };
std::string to_string(MonomialType t);

/// Degree <= 2 cohomology of the minimal wonderful model of an essential,
/// irreducible arrangement in CP^n, n >= 2. Immutable after construction.
class WonderfulModel {
 public:
  /// Throws InputError for non-essential or reducible arrangements, or n < 2.
  explicit WonderfulModel(IntersectionLattice lat);

  const IntersectionLattice& lattice() const { return lat_; }
  int dim() const { return lat_.dim(); }

  // Irreducible subspaces, in lattice order (rank, then closure). The empty
  // subspace is the last element.
  int g_size() const { return static_cast<int>(g_flats_.size()); }
  int g_flat(int g) const { return g_flats_[static_cast<std::size_t>(g)]; }
  int g_rank(int g) const { return lat_.rank(g_flat(g)); }
  std::optional<int> g_of_flat(int flat) const;
  int g_empty() const { return g_size() - 1; }
  int g_hyperplane(int h) const;
  bool is_hyperplane(int g) const { return g_rank(g) == 1; }

  /// Subspace containment L_a within L_b (reflexive).
  bool inside(int a, int b) const { return lat_.subspace_of(g_flat(a), g_flat(b)); }
  bool strictly_inside(int a, int b) const { return a != b && inside(a, b); }
  /// Incomparable with an intersection that is not irreducible.
  bool reducible_intersection(int a, int b) const;
  /// {L_a, L_b} is a nested set; a == b allowed.
  bool is_nested_pair(int a, int b) const;
  /// B(L_a, L_b) for L_a within L_b.
  int b(int a, int b) const;

  /// g_L with r(L) >= 2, as G-indices.
  const std::vector<int>& delta1() const { return delta1_; }
  const std::vector<BasicMonomial>& delta2() const { return delta2_; }
  std::optional<int> basis_index(const BasicMonomial& m) const;

  MonomialType classify(int a, int b) const;
  /// Coordinates of g_a * g_b in the basic monomial basis.
  H4Class reduce_monomial(int a, int b) const;
  H4Class reduce(const FormalH4& sum) const;
  H2Class reduce_h2(const FormalH2& c) const;

  /// "g[closure]" with the closure listed as comma-separated indices.
  std::string generator_name(int g) const;
  /// "g[...]²" or "g[...]*g[...]".
  std::string key_name(int basis_index) const;

 private:
  void build_basis();

  IntersectionLattice lat_;
  std::vector<int> g_flats_;
  std::vector<int> g_of_flat_;  // -1 for reducible flats
  std::vector<int> g_of_hyperplane_;
  std::vector<int> b_cache_;    // g_size^2, INT_MIN where undefined
  std::vector<int> delta1_;
  std::vector<BasicMonomial> delta2_;
  std::map<BasicMonomial, int> delta2_index_;
};

}  // namespace pkarr
