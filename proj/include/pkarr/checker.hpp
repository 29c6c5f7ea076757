#pragma once

#include <vector>

#include "pkarr/lattice.hpp"
#include "pkarr/weights.hpp"

namespace pkarr {

struct CyResult {
  bool pass = false;
  Rational sum;
  Rational target;  // n + 1
};

struct KltViolation {
  int flat = -1;
  Flat subspace;
  Rational sum;  // total weight through the flat
  int rank = 0;
};

struct KltResult {
  bool pass = false;
  int checked = 0;  // number of flats scanned
  std::vector<KltViolation> violations;
};

struct QuadraticValue {
  int flat = -1;
  Flat subspace;
  bool empty_subspace = false;
  Rational value;
};

struct QuadraticResult {
  bool pass = false;
  std::vector<QuadraticValue> values;
};

struct ReportMeta {
  int dim = 0;
  int hyperplanes = 0;
  bool essential = false;
  bool irreducible = false;
  std::vector<int> flats_per_rank;        // index r holds the count of rank-r flats
  std::vector<int> irreducible_per_rank;  // same, irreducible flats only
};

/// Outcome of the three combinatorial conditions. verdict is their
/// conjunction; listings are ordered by rank, then by closure.
struct CheckReport {
  CyResult cy;
  KltResult klt;
  QuadraticResult quadratic;
  bool verdict = false;
  ReportMeta meta;
};

enum class KltScope { all_flats, irreducible_only };

/// Total weight equals n + 1 exactly.
CyResult check_cy(const IntersectionLattice& lat, const std::vector<Rational>& a);

/// Strict inequality sum_{H >= L} a_H < r(L) on every nonempty proper flat.
KltResult check_klt(const IntersectionLattice& lat, const std::vector<Rational>& a,
                    KltScope scope = KltScope::all_flats);

/// Q_L(a) = 0 for every irreducible flat of rank >= 3, the empty subspace
/// included when it is irreducible. Both formulas are evaluated; a
/// disagreement throws InternalError.
QuadraticResult check_quadratic(const IntersectionLattice& lat, const std::vector<Rational>& a);

ReportMeta describe(const IntersectionLattice& lat);

/// Runs every condition. Throws InputError listing the offending hyperplanes
/// when some weight is outside (0,1).
CheckReport check_theorem(const IntersectionLattice& lat, const std::vector<Rational>& a);
CheckReport check_theorem(const WeightedArrangement& w);

/// Weights a_i + a_j on the hyperplane x_i = x_j of gen_braid(a.size()), in
/// arrangement order. Requires every a_i in (0,1) and sum 1; throws
/// InputError otherwise.
std::vector<Rational> braid_weights(const std::vector<Rational>& a);

/// Every hyperplane gets (n+1)/N. Throws InputError for a non-essential
/// arrangement.
std::vector<Rational> uniform_reflection_weights(const Arrangement& arr);

}  // namespace pkarr
