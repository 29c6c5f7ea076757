#include "pkarr/wonder.hpp"

#include <climits>

#include "pkarr/errors.hpp"
#include "pkarr/weights.hpp"

namespace pkarr {

void SparseClass::add(int key, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = coords_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) coords_.erase(it);
  }
}

void SparseClass::add(const SparseClass& other, const Rational& scale) {
  if (sgn(scale) == 0) return;
  for (const auto& [k, v] : other.coords_) add(k, v * scale);
}

Rational SparseClass::at(int key) const {
  const auto it = coords_.find(key);
  return it == coords_.end() ? Rational(0) : it->second;
}

void add_monomial(FormalH4& sum, int a, int b, const Rational& c) {
  if (sgn(c) == 0) return;
  if (a > b) std::swap(a, b);
  auto [it, inserted] = sum.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) sum.erase(it);
  }
}

std::string to_string(MonomialType t) {
  switch (t) {
    case MonomialType::zero: return "zero";
    case MonomialType::basic: return "basic";
    case MonomialType::m1: return "M1";
    case MonomialType::m2: return "M2";
    case MonomialType::m3: return "M3";
    case MonomialType::m4: return "M4";
    case MonomialType::m5: return "M5";
    case MonomialType::m6: return "M6";
    case MonomialType::m7: return "M7";
  }
  return "?";
}

WonderfulModel::WonderfulModel(IntersectionLattice lat) : lat_(std::move(lat)) {
  if (lat_.dim() < 2) throw InputError("wonderful model cohomology needs n >= 2");
  if (!lat_.essential()) throw InputError("wonderful model needs an essential arrangement");
  if (!lat_.irreducible(*lat_.empty_flat())) {
    throw InputError("wonderful model needs an irreducible arrangement");
  }
  g_of_flat_.assign(static_cast<std::size_t>(lat_.size()), -1);
  for (int i = 0; i < lat_.size(); ++i) {
    if (!lat_.irreducible(i)) continue;
    g_of_flat_[static_cast<std::size_t>(i)] = static_cast<int>(g_flats_.size());
    g_flats_.push_back(i);
  }
  for (int h = 0; h < lat_.arrangement().size(); ++h) {
    g_of_hyperplane_.push_back(g_of_flat_[static_cast<std::size_t>(lat_.hyperplane_flat(h))]);
  }

  const int n = g_size();
  b_cache_.assign(static_cast<std::size_t>(n * n), INT_MIN);
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      if (inside(a, c)) b_cache_[static_cast<std::size_t>(a * n + c)] = b_coeff(lat_, g_flat(a), g_flat(c));
    }
  }
  build_basis();
}

std::optional<int> WonderfulModel::g_of_flat(int flat) const {
  const int g = g_of_flat_[static_cast<std::size_t>(flat)];
  if (g < 0) return std::nullopt;
  return g;
}

int WonderfulModel::g_hyperplane(int h) const { return g_of_hyperplane_[static_cast<std::size_t>(h)]; }

bool WonderfulModel::reducible_intersection(int a, int b) const {
  if (inside(a, b) || inside(b, a)) return false;
  return !lat_.irreducible(lat_.meet(g_flat(a), g_flat(b)));
}

bool WonderfulModel::is_nested_pair(int a, int b) const {
  return a == b || inside(a, b) || inside(b, a) || reducible_intersection(a, b);
}

int WonderfulModel::b(int a, int c) const {
  const int v = b_cache_[static_cast<std::size_t>(a * g_size() + c)];
  if (v == INT_MIN) throw InputError("B(L1, L2) needs L1 inside L2");
  return v;
}

void WonderfulModel::build_basis() {
  for (int g = 0; g < g_size(); ++g) {
    if (g_rank(g) >= 2) delta1_.push_back(g);
  }
  for (int a = 0; a < g_size(); ++a) {
    if (g_rank(a) >= 3) delta2_.push_back({BasicMonomial::Kind::square, a, a});
  }
  for (int a = 0; a < g_size(); ++a) {
    for (int c = 0; c < g_size(); ++c) {
      if (strictly_inside(a, c) && g_rank(c) >= 2 && g_rank(a) - g_rank(c) >= 2) {
        delta2_.push_back({BasicMonomial::Kind::chain, a, c});
      }
    }
  }
  for (int a = 0; a < g_size(); ++a) {
    for (int c = a + 1; c < g_size(); ++c) {
      if (g_rank(a) >= 2 && g_rank(c) >= 2 && reducible_intersection(a, c)) {
        delta2_.push_back({BasicMonomial::Kind::transverse, a, c});
      }
    }
  }
  for (int i = 0; i < static_cast<int>(delta2_.size()); ++i) {
    delta2_index_.emplace(delta2_[static_cast<std::size_t>(i)], i);
  }
}

std::optional<int> WonderfulModel::basis_index(const BasicMonomial& m) const {
  const auto it = delta2_index_.find(m);
  if (it == delta2_index_.end()) return std::nullopt;
  return it->second;
}

MonomialType WonderfulModel::classify(int a, int c) const {
  if (!is_nested_pair(a, c)) return MonomialType::zero;
  if (a == c) {
    if (g_rank(a) >= 3) return MonomialType::basic;
    return g_rank(a) == 1 ? MonomialType::m1 : MonomialType::m2;
  }
  if (reducible_intersection(a, c)) {
    const int hyperplanes = int{is_hyperplane(a)} + int{is_hyperplane(c)};
    if (hyperplanes == 0) return MonomialType::basic;
    return hyperplanes == 1 ? MonomialType::m6 : MonomialType::m7;
  }
  if (inside(c, a)) std::swap(a, c);  // now L_a strictly inside L_c
  const int small_rank = g_rank(a);
  const int big_rank = g_rank(c);
  if (big_rank == 1) return small_rank >= 3 ? MonomialType::m4 : MonomialType::m5;
  return small_rank - big_rank == 1 ? MonomialType::m3 : MonomialType::basic;
}

H4Class WonderfulModel::reduce_monomial(int a, int c) const {
  using Kind = BasicMonomial::Kind;
  const MonomialType type = classify(a, c);
  H4Class out;
  if (type == MonomialType::zero) return out;
  if (type == MonomialType::basic) {
    BasicMonomial key{Kind::square, a, a};
    if (a != c) {
      if (reducible_intersection(a, c)) {
        key = {Kind::transverse, std::min(a, c), std::max(a, c)};
      } else {
        key = inside(a, c) ? BasicMonomial{Kind::chain, a, c} : BasicMonomial{Kind::chain, c, a};
      }
    }
    out.add(*basis_index(key), 1);
    return out;
  }

  // Orient the operands: `lo` is the smaller subspace (or the non-hyperplane
  // factor for the transverse types), `hi` the other.
  int lo = a;
  int hi = c;
  if (type == MonomialType::m3 || type == MonomialType::m4 || type == MonomialType::m5) {
    if (inside(hi, lo)) std::swap(lo, hi);
  } else if (type == MonomialType::m6) {
    if (is_hyperplane(lo)) std::swap(lo, hi);
  }

  for (int k = 0; k < static_cast<int>(delta2_.size()); ++k) {
    const BasicMonomial& m = delta2_[static_cast<std::size_t>(k)];
    const int x = m.a;
    const int y = m.b;
    Rational v = 0;
    switch (type) {
      case MonomialType::m1: {  // g_H^2
        const int h = lo;
        if (m.kind == Kind::square && strictly_inside(x, h)) v = -b(x, h);
        if (m.kind == Kind::chain && strictly_inside(y, h)) v = 2 * b(x, y) * b(y, h);
        break;
      }
      case MonomialType::m2: {  // g_L^2, r(L) = 2
        if (m.kind == Kind::square && strictly_inside(x, lo)) v = -1;
        if (m.kind == Kind::chain && inside(y, lo)) v = 2 * b(x, y);
        break;
      }
      case MonomialType::m3: {  // g_L'' g_L', L'' covered by L'
        if (m.kind == Kind::chain && y == hi && strictly_inside(x, lo)) v = -1;
        break;
      }
      case MonomialType::m4: {  // g_L' g_H, r(L') >= 3
        const int h = hi;
        if (m.kind == Kind::square && x == lo) v = -1;
        if (m.kind == Kind::chain) {
          if (y == lo) v += b(x, y);
          if (x == lo && strictly_inside(y, h)) v -= 1;
          if (strictly_inside(x, lo) && strictly_inside(lo, y) && g_rank(lo) - g_rank(y) == 1 &&
              strictly_inside(y, h)) {
            v += 1;
          }
        }
        break;
      }
      case MonomialType::m5: {  // g_L' g_H, r(L') = 2
        if (m.kind == Kind::square && strictly_inside(x, lo)) v = 1;
        if (m.kind == Kind::chain) {
          if (y == lo) v = -b(x, y);
          if (strictly_inside(y, lo)) v = -2 * b(x, y);
        }
        break;
      }
      case MonomialType::m6: {  // g_L' g_H, reducible intersection
        const int h = hi;
        if (m.kind == Kind::chain && y == lo && strictly_inside(x, h)) v = -1;
        if (m.kind == Kind::transverse) {
          if (x == lo && strictly_inside(y, h)) v -= 1;
          if (y == lo && strictly_inside(x, h)) v -= 1;
        }
        break;
      }
      case MonomialType::m7: {  // g_H g_H', reducible intersection
        const int h1 = lo;
        const int h2 = hi;
        if (m.kind == Kind::square && inside(x, h1) && inside(x, h2)) v = 1;
        if (m.kind == Kind::chain) {
          if (inside(y, h1) && inside(y, h2)) v -= 2 * b(x, y);
          if (inside(y, h2) && inside(x, h1) && reducible_intersection(y, h1)) v += 1;
          if (inside(y, h1) && inside(x, h2) && reducible_intersection(y, h2)) v += 1;
        }
        if (m.kind == Kind::transverse) {
          if (inside(x, h1) && inside(y, h2)) v += 1;
          if (inside(y, h1) && inside(x, h2)) v += 1;
        }
        break;
      }
      default:
        break;
    }
    out.add(k, v);
  }
  return out;
}

H4Class WonderfulModel::reduce(const FormalH4& sum) const {
  H4Class out;
  for (const auto& [pair, c] : sum) out.add(reduce_monomial(pair.first, pair.second), c);
  return out;
}

H2Class WonderfulModel::reduce_h2(const FormalH2& c) const {
  H2Class out;
  out.pullback_h = c.pullback_h;
  for (const auto& [g, coeff] : c.gamma) {
    if (g == g_empty()) {
      out.pullback_h -= coeff;
    } else if (is_hyperplane(g)) {
      out.pullback_h += coeff;
      for (int l = 0; l < g_size(); ++l) {
        if (l != g_empty() && g_rank(l) >= 2 && strictly_inside(l, g)) out.gamma.add(l, -coeff);
      }
    } else {
      out.gamma.add(g, coeff);
    }
  }
  return out;
}

std::string WonderfulModel::generator_name(int g) const {
  std::string s = "g[";
  const auto& closure = lat_.flat(g_flat(g)).closure;
  for (std::size_t i = 0; i < closure.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(closure[i]);
  }
  return s + "]";
}

std::string WonderfulModel::key_name(int basis_index) const {
  const BasicMonomial& m = delta2_[static_cast<std::size_t>(basis_index)];
  if (m.kind == BasicMonomial::Kind::square) return generator_name(m.a) + "²";
  return generator_name(m.a) + "*" + generator_name(m.b);
}

}  // namespace pkarr
