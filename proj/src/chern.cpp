#include "pkarr/chern.hpp"

#include "pkarr/errors.hpp"
#include "pkarr/weights.hpp"

namespace pkarr {

Rational chern2_pair(PairKind kind, int r_l, int r_m, const Rational& a_l, const Rational& a_m) {
  if (r_l < 1 || (kind != PairKind::equal && r_m < 1)) {
    throw InputError("chern2_pair: ranks must be positive");
  }
  switch (kind) {
    case PairKind::equal: return Rational(r_l * (r_l - 1)) / 2 * a_l * a_l;
    case PairKind::chain: return Rational(r_m * (r_l - 1)) * a_l * a_m;
    case PairKind::transverse: return Rational(r_l * r_m) * a_l * a_m;
  }
  return 0;
}

namespace {

Rational a_of(const WonderfulModel& model, const std::vector<Rational>& a, int g) {
  return a_of_flat(a, model.lattice().flat(model.g_flat(g)));
}

Rational q_of(const WonderfulModel& model, const std::vector<Rational>& a, int g) {
  return hirzebruch_q(model.lattice(), a, model.g_flat(g));
}

void check_weight_count(const WonderfulModel& model, const std::vector<Rational>& a) {
  if (static_cast<int>(a.size()) != model.lattice().arrangement().size()) {
    throw InputError("weight count does not match the arrangement");
  }
}

// Closed forms share their shape and differ in the sign of the chain term.
H4Class closed_form(const WonderfulModel& model, const std::vector<Rational>& a, int chain_sign) {
  check_weight_count(model, a);
  H4Class out;
  const auto& basis = model.delta2();
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
    const BasicMonomial& m = basis[static_cast<std::size_t>(k)];
    switch (m.kind) {
      case BasicMonomial::Kind::square: out.add(k, q_of(model, a, m.a)); break;
      case BasicMonomial::Kind::chain:
        if (model.g_rank(m.b) >= 3) out.add(k, chain_sign * 2 * model.b(m.a, m.b) * q_of(model, a, m.b));
        break;
      case BasicMonomial::Kind::transverse: break;
    }
  }
  return out;
}

}  // namespace

H2Class eta(const WonderfulModel& model, const std::vector<Rational>& a) {
  check_weight_count(model, a);
  FormalH2 sum;
  sum.pullback_h = model.dim() + 1;
  for (int g = 0; g < model.g_size(); ++g) {
    if (g == model.g_empty()) continue;
    sum.gamma[g] -= model.g_rank(g) * a_of(model, a, g);
  }
  return model.reduce_h2(sum);
}

H4Class omega_ohtsuki(const WonderfulModel& model, const std::vector<Rational>& a) {
  check_weight_count(model, a);
  const int n = model.dim();
  const int e = model.g_empty();
  FormalH4 sum;
  add_monomial(sum, e, e, Rational(n * (n + 1)) / 2);
  for (int l = 0; l < model.g_size(); ++l) {
    if (l == e) continue;
    const int rl = model.g_rank(l);
    const Rational al = a_of(model, a, l);
    if (rl >= 2) add_monomial(sum, l, l, -chern2_pair(PairKind::equal, rl, rl, al, al));
    for (int m = 0; m < model.g_size(); ++m) {
      if (m == e || m == l) continue;
      const int rm = model.g_rank(m);
      const Rational am = a_of(model, a, m);
      if (model.strictly_inside(l, m)) {
        add_monomial(sum, l, m, -chern2_pair(PairKind::chain, rl, rm, al, am));
      } else if (l < m && model.reducible_intersection(l, m)) {
        add_monomial(sum, l, m, -chern2_pair(PairKind::transverse, rl, rm, al, am));
      }
    }
  }
  return model.reduce(sum);
}

H4Class omega_closed_form(const WonderfulModel& model, const std::vector<Rational>& a) {
  return closed_form(model, a, -1);
}

H4Class parch2(const WonderfulModel& model, const std::vector<Rational>& a) {
  check_weight_count(model, a);
  const int e = model.g_empty();
  FormalH4 sum;
  add_monomial(sum, e, e, -Rational(model.dim() + 1) / 2);
  for (int l = 0; l < model.g_size(); ++l) {
    if (l == e) continue;
    const Rational al = a_of(model, a, l);
    add_monomial(sum, l, l, Rational(model.g_rank(l)) / 2 * al * al);
    for (int m = 0; m < model.g_size(); ++m) {
      if (m == e || !model.strictly_inside(l, m)) continue;
      add_monomial(sum, l, m, model.g_rank(m) * al * a_of(model, a, m));
    }
  }
  return model.reduce(sum);
}

H4Class parch2_closed_form(const WonderfulModel& model, const std::vector<Rational>& a) {
  return closed_form(model, a, +1);
}

bool CoeffReport::all_equal() const { return mismatches() == 0; }

int CoeffReport::mismatches() const {
  int bad = 0;
  for (const auto& e : entries) {
    if (e.compared && !e.equal) ++bad;
  }
  return bad;
}

CoeffReport compare(const WonderfulModel& model, const H4Class& computed,
                    const H4Class& closed_form, bool skip_empty_square) {
  CoeffReport r;
  const auto empty_square = model.basis_index(
      {BasicMonomial::Kind::square, model.g_empty(), model.g_empty()});
  for (int k = 0; k < static_cast<int>(model.delta2().size()); ++k) {
    CoeffEntry e;
    e.key = k;
    e.name = model.key_name(k);
    e.computed = computed.at(k);
    e.closed_form = closed_form.at(k);
    e.compared = !(skip_empty_square && empty_square == k);
    e.equal = e.computed == e.closed_form;
    r.entries.push_back(std::move(e));
  }
  return r;
}

IdentityReport verify_identities(const WonderfulModel& model, const std::vector<Rational>& a,
                                 bool constrain_cy) {
  check_weight_count(model, a);
  if (constrain_cy) {
    Rational total = 0;
    for (const auto& x : a) total += x;
    if (total != model.dim() + 1) {
      throw InputError("CY-constrained verification needs weights summing to " +
                       std::to_string(model.dim() + 1) + ", got " + to_string(total));
    }
  }
  IdentityReport r;
  r.omega = compare(model, omega_ohtsuki(model, a), omega_closed_form(model, a), !constrain_cy);
  r.parch2 = compare(model, parch2(model, a), parch2_closed_form(model, a), !constrain_cy);
  return r;
}

}  // namespace pkarr
