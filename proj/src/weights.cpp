#include "pkarr/weights.hpp"

#include "pkarr/errors.hpp"

namespace pkarr {

WeightedArrangement::WeightedArrangement(Arrangement base, std::vector<Rational> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != base_.size()) {
    throw InputError("got " + std::to_string(weights_.size()) + " weights for " +
                     std::to_string(base_.size()) + " hyperplanes");
  }
}

Rational WeightedArrangement::total() const {
  Rational s = 0;
  for (const auto& w : weights_) s += w;
  return s;
}

std::vector<int> WeightedArrangement::out_of_range() const {
  std::vector<int> bad;
  for (int h = 0; h < base_.size(); ++h) {
    if (sgn(weight(h)) <= 0 || weight(h) >= 1) bad.push_back(h);
  }
  return bad;
}

Rational weight_through(const std::vector<Rational>& a, const Flat& flat) {
  Rational s = 0;
  for (int h : flat.closure) s += a[static_cast<std::size_t>(h)];
  return s;
}

Rational a_of_flat(const std::vector<Rational>& a, const Flat& flat) {
  return weight_through(a, flat) / flat.rank;
}

int b_coeff(const IntersectionLattice& lat, int l1, int l2) {
  if (!lat.subspace_of(l1, l2)) throw InputError("b_coeff: first flat is not inside the second");
  int count = 0;
  for (int m : lat.flats_of_rank(lat.rank(l2) + 1)) {
    if (lat.irreducible(m) && lat.subspace_of(l1, m) && lat.subspace_of(m, l2)) ++count;
  }
  return count - 1;
}

namespace {

void require_eligible(const IntersectionLattice& lat, int flat) {
  if (!lat.irreducible(flat)) throw InputError("quadratic form needs an irreducible flat");
  if (lat.rank(flat) < 3) throw InputError("quadratic form needs a flat of rank >= 3");
}

}  // namespace

Rational hirzebruch_q(const IntersectionLattice& lat, const std::vector<Rational>& a, int flat,
                      QuadraticFormula formula) {
  require_eligible(lat, flat);
  const Flat& l = lat.flat(flat);
  const Rational a_l = a_of_flat(a, l);

  Rational irreducible_squares = 0;  // sum over irreducible rank-2 flats through L
  Rational reducible_products = 0;   // sum over reducible rank-2 flats through L
  for (int m : lat.flats_of_rank(2)) {
    if (!lat.subspace_of(flat, m)) continue;
    if (lat.irreducible(m)) {
      const Rational a_m = a_of_flat(a, lat.flat(m));
      irreducible_squares += a_m * a_m;
    } else {
      const auto& c = lat.flat(m).closure;
      reducible_products += a[static_cast<std::size_t>(c[0])] * a[static_cast<std::size_t>(c[1])];
    }
  }

  if (formula == QuadraticFormula::alternative) {
    const int r = l.rank;
    return Rational(r * (r - 1)) / 2 * a_l * a_l - irreducible_squares - reducible_products;
  }

  Rational b_terms = 0;
  for (int h : l.closure) {
    const Rational& a_h = a[static_cast<std::size_t>(h)];
    b_terms += b_coeff(lat, flat, lat.hyperplane_flat(h)) * a_h * a_h;
  }
  return irreducible_squares - b_terms / 2 - Rational(l.rank) / 2 * a_l * a_l;
}

Rational hirzebruch_q_or_zero(const IntersectionLattice& lat, const std::vector<Rational>& a,
                              int flat, QuadraticFormula formula) {
  if (lat.irreducible(flat) && lat.rank(flat) < 3) return 0;
  return hirzebruch_q(lat, a, flat, formula);
}

int multiplicity(const IntersectionLattice& lat, int flat) { return lat.multiplicity(flat); }

}  // namespace pkarr
