#pragma once

#include <vector>

#include "pkarr/lattice.hpp"
#include "pkarr/rational.hpp"

namespace pkarr {

/// An arrangement with one rational weight a_H per hyperplane, aligned with
/// the arrangement's hyperplane order. Cone angles are 2*pi*(1 - a_H).
class WeightedArrangement {
 public:
  /// Throws InputError when the weight count differs from the hyperplane
  /// count. Range violations are not rejected here; see out_of_range().
  WeightedArrangement(Arrangement base, std::vector<Rational> weights);

  const Arrangement& base() const { return base_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(int h) const { return weights_[static_cast<std::size_t>(h)]; }
  Rational total() const;

  /// Hyperplanes whose weight is outside the open interval (0,1).
  std::vector<int> out_of_range() const;

  friend bool operator==(const WeightedArrangement&, const WeightedArrangement&) = default;

 private:
  Arrangement base_;
  std::vector<Rational> weights_;
};

/// Sum of a_H over the hyperplanes containing the flat.
Rational weight_through(const std::vector<Rational>& a, const Flat& flat);

/// a_L = (1/r(L)) * sum of a_H over H containing L.
Rational a_of_flat(const std::vector<Rational>& a, const Flat& flat);

/// B(L1, L2) = #{L' irreducible : L1 in L' and L' covers L2} - 1, for flats
/// with L1 contained in L2 (as subspaces). Throws InputError otherwise.
int b_coeff(const IntersectionLattice& lat, int l1, int l2);

/// Which published expression of the quadratic form to evaluate.
enum class QuadraticFormula {
  primary,      // sum of a_{L'}^2 - (1/2) sum B(L,H) a_H^2 - (r/2) a_L^2
  alternative,  // C(r,2) a_L^2 - sum a_{L'}^2 - sum over reducible pairs a_H a_H'
};

/// Hirzebruch quadratic form Q_L of the localization at an irreducible flat
/// L of rank >= 3 (L may be the empty subspace). Throws InputError otherwise.
Rational hirzebruch_q(const IntersectionLattice& lat, const std::vector<Rational>& a, int flat,
                      QuadraticFormula formula = QuadraticFormula::primary);

/// Same as hirzebruch_q but 0 for irreducible flats of rank 1 or 2, where the
/// form vanishes identically.
Rational hirzebruch_q_or_zero(const IntersectionLattice& lat, const std::vector<Rational>& a,
                              int flat, QuadraticFormula formula = QuadraticFormula::primary);

/// Number of hyperplanes through a rank-2 flat.
int multiplicity(const IntersectionLattice& lat, int flat);

}  // namespace pkarr
