#pragma once

#include <string>
#include <vector>

#include "pkarr/wonder.hpp"

namespace pkarr {

enum class PairKind {
  equal,       // c_2(A_L) = r(r-1)/2 * a_L^2
  chain,       // L strictly inside M: 2 c_2(A_L, A_M) = r_M (r_L - 1) a_L a_M
  transverse,  // reducible intersection: 2 c_2(A_L, A_M) = r_L r_M a_L a_M
};

/// Second Chern polynomial of the residue endomorphisms attached to a pair of
/// subspaces. For `equal` only r_l and a_l are used.
Rational chern2_pair(PairKind kind, int r_l, int r_m, const Rational& a_l, const Rational& a_m);

/// (n+1) pi^*h - sum over nonempty irreducible L of r_L a_L g_L, reduced.
H2Class eta(const WonderfulModel& model, const std::vector<Rational>& a);

/// C(n+1,2) pi^*h^2 minus the residue expansion of c_2, reduced to basic
/// monomials.
H4Class omega_ohtsuki(const WonderfulModel& model, const std::vector<Rational>& a);
/// Closed-form coordinates of omega_ohtsuki in terms of Q_L and B.
H4Class omega_closed_form(const WonderfulModel& model, const std::vector<Rational>& a);

/// Parabolic second Chern character of the weighted pullback tangent
/// bundle, reduced to basic monomials.
H4Class parch2(const WonderfulModel& model, const std::vector<Rational>& a);
/// Closed-form coordinates of parch2.
H4Class parch2_closed_form(const WonderfulModel& model, const std::vector<Rational>& a);

struct CoeffEntry {
  int key = -1;  // position in delta2()
  std::string name;
  Rational computed;
  Rational closed_form;
  bool compared = true;  // false when the comparison was skipped
  bool equal = true;
};

struct CoeffReport {
  std::vector<CoeffEntry> entries;
  bool all_equal() const;
  int mismatches() const;
};

CoeffReport compare(const WonderfulModel& model, const H4Class& computed,
                    const H4Class& closed_form, bool skip_empty_square);

struct IdentityReport {
  CoeffReport omega;
  CoeffReport parch2;
};

/// Compares both classes against their closed forms. Without the CY
/// constraint the g_empty^2 coordinate is reported but not compared; with it
/// the weights must sum to n+1 (InputError otherwise).
IdentityReport verify_identities(const WonderfulModel& model, const std::vector<Rational>& a,
                                 bool constrain_cy);

}  // namespace pkarr
