#include "pkarr/checker.hpp"

#include "pkarr/errors.hpp"
#include "pkarr/generators.hpp"

namespace pkarr {

CyResult check_cy(const IntersectionLattice& lat, const std::vector<Rational>& a) {
  CyResult out;
  out.sum = 0;
  for (const auto& x : a) out.sum += x;
  out.target = lat.dim() + 1;
  out.pass = out.sum == out.target;
  return out;
}

KltResult check_klt(const IntersectionLattice& lat, const std::vector<Rational>& a,
                    KltScope scope) {
  KltResult out;
  for (int i = 0; i < lat.size(); ++i) {
    const Flat& f = lat.flat(i);
    if (f.rank > lat.dim()) continue;  // the empty subspace is not constrained
    if (scope == KltScope::irreducible_only && !lat.irreducible(i)) continue;
    ++out.checked;
    const Rational s = weight_through(a, f);
    if (s >= f.rank) out.violations.push_back({i, f, s, f.rank});
  }
  out.pass = out.violations.empty();
  return out;
}

QuadraticResult check_quadratic(const IntersectionLattice& lat, const std::vector<Rational>& a) {
  QuadraticResult out;
  out.pass = true;
  for (int i = 0; i < lat.size(); ++i) {
    if (!lat.irreducible(i) || lat.rank(i) < 3) continue;
    const Rational q = hirzebruch_q(lat, a, i, QuadraticFormula::primary);
    const Rational q_alt = hirzebruch_q(lat, a, i, QuadraticFormula::alternative);
    if (q != q_alt) {
      throw InternalError("quadratic form formulas disagree: " + to_string(q) + " vs " +
                          to_string(q_alt));
    }
    out.values.push_back({i, lat.flat(i), lat.empty_flat() == i, q});
    if (sgn(q) != 0) out.pass = false;
  }
  return out;
}

ReportMeta describe(const IntersectionLattice& lat) {
  ReportMeta m;
  m.dim = lat.dim();
  m.hyperplanes = lat.arrangement().size();
  m.essential = lat.essential();
  m.irreducible = is_irreducible(lat.arrangement());
  m.flats_per_rank.assign(static_cast<std::size_t>(lat.dim() + 2), 0);
  m.irreducible_per_rank.assign(static_cast<std::size_t>(lat.dim() + 2), 0);
  for (int i = 0; i < lat.size(); ++i) {
    ++m.flats_per_rank[static_cast<std::size_t>(lat.rank(i))];
    if (lat.irreducible(i)) ++m.irreducible_per_rank[static_cast<std::size_t>(lat.rank(i))];
  }
  return m;
}

CheckReport check_theorem(const IntersectionLattice& lat, const std::vector<Rational>& a) {
  const WeightedArrangement w(lat.arrangement(), a);
  if (const auto bad = w.out_of_range(); !bad.empty()) {
    std::string msg = "weights outside (0,1) at hyperplane";
    for (int h : bad) msg += " " + std::to_string(h) + " (" + to_string(w.weight(h)) + ")";
    throw InputError(msg);
  }
  CheckReport r;
  r.cy = check_cy(lat, a);
  r.klt = check_klt(lat, a);
  r.quadratic = check_quadratic(lat, a);
  r.verdict = r.cy.pass && r.klt.pass && r.quadratic.pass;
  r.meta = describe(lat);
  return r;
}

CheckReport check_theorem(const WeightedArrangement& w) {
  return check_theorem(build_lattice(w.base()), w.weights());
}

std::vector<Rational> braid_weights(const std::vector<Rational>& a) {
  const int k = static_cast<int>(a.size());
  if (k < 3) throw InputError("braid weights need at least 3 parameters");
  Rational total = 0;
  for (const auto& x : a) {
    if (sgn(x) <= 0 || x >= 1) throw InputError("braid parameter " + to_string(x) + " not in (0,1)");
    total += x;
  }
  if (total != 1) throw InputError("braid parameters sum to " + to_string(total) + ", expected 1");
  std::vector<Rational> w;
  for (auto [i, j] : braid_labels(k)) {
    w.push_back(a[static_cast<std::size_t>(i - 1)] + a[static_cast<std::size_t>(j - 1)]);
  }
  return w;
}

std::vector<Rational> uniform_reflection_weights(const Arrangement& arr) {
  if (!is_essential(arr)) throw InputError("uniform reflection weights need an essential arrangement");
  const Rational each = Rational(arr.dim() + 1) / arr.size();
  return std::vector<Rational>(static_cast<std::size_t>(arr.size()), each);
}

}  // namespace pkarr
