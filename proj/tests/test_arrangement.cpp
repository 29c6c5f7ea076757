#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "pkarr/errors.hpp"
#include "pkarr/generators.hpp"
#include "pkarr/lattice.hpp"

using namespace pkarr;

namespace {

// Stirling numbers of the second kind: flats of the braid arrangement on k
// letters of rank r are set partitions of {1..k} into k - r blocks.
long stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Every nonempty subset's closure, deduplicated, counted by rank.
std::map<int, int> brute_force_ranks(const Arrangement& arr) {
  std::set<IndexSet> seen;
  std::map<int, int> counts;
  const int n = arr.size();
  for (long mask = 1; mask < (1L << n); ++mask) {
    IndexSet s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1L << i)) s.push_back(i);
    }
    const Flat f = closure(arr, s);
    if (seen.insert(f.closure).second) ++counts[f.rank];
  }
  return counts;
}

int index_of_pair(int k, int i, int j) {
  const auto labels = braid_labels(k);
  for (std::size_t h = 0; h < labels.size(); ++h) {
    if (labels[h] == std::pair{i, j}) return static_cast<int>(h);
  }
  FAIL("no such braid hyperplane");
  return -1;
}

std::vector<int> rank2_multiplicities(const IntersectionLattice& lat) {
  std::vector<int> out;
  for (int i : lat.flats_of_rank(2)) out.push_back(lat.multiplicity(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("hyperplane canonical form") {
  CHECK(Hyperplane({2, 4, -6}).normal() == std::vector<std::int64_t>{1, 2, -3});
  CHECK(Hyperplane({0, -3, 6}).normal() == std::vector<std::int64_t>{0, 1, -2});
  CHECK_THROWS_AS(Hyperplane({0, 0, 0}), InputError);
}

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(Arrangement(2, {Hyperplane({1, 0, 0}), Hyperplane({-2, 0, 0})}), InputError);
  CHECK_THROWS_AS(Arrangement(2, {Hyperplane({1, 0})}), InputError);
  CHECK_THROWS_AS(Arrangement(0, {Hyperplane({1})}), InputError);
  const Arrangement a(1, {Hyperplane({1, 1}), Hyperplane({0, 1}), Hyperplane({1, 0})});
  CHECK(std::is_sorted(a.hyperplanes().begin(), a.hyperplanes().end()));
}

TEST_CASE("closure examples on braid A4") {
  const Arrangement a4 = gen_braid(4);
  const int h12 = index_of_pair(4, 1, 2);
  const int h13 = index_of_pair(4, 1, 3);
  const int h23 = index_of_pair(4, 2, 3);
  const int h34 = index_of_pair(4, 3, 4);
  CHECK(closure(a4, {h12}) == Flat{{h12}, 1});
  IndexSet triple{h12, h13, h23};
  std::sort(triple.begin(), triple.end());
  CHECK(closure(a4, {h12, h13}) == Flat{triple, 2});
  IndexSet dbl{h12, h34};
  std::sort(dbl.begin(), dbl.end());
  CHECK(closure(a4, {std::min(h12, h34), std::max(h12, h34)}) == Flat{dbl, 2});
  CHECK_THROWS_AS(closure(a4, {}), InputError);
}

TEST_CASE("braid lattices match set-partition counts and brute force") {
  for (int k = 3; k <= 6; ++k) {
    const Arrangement arr = gen_braid(k);
    CHECK(arr.size() == binomial(k, 2));
    CHECK(arr.dim() == k - 2);
    const IntersectionLattice lat(arr);
    for (int r = 1; r <= k - 1; ++r) {
      CHECK(lat.count_of_rank(r) == stirling2(k, k - r));
      int irreducible = 0;
      for (int i : lat.flats_of_rank(r)) irreducible += lat.irreducible(i) ? 1 : 0;
      // one nontrivial block of size r + 1
      CHECK(irreducible == binomial(k, r + 1));
    }
    if (k <= 5) {
      const auto brute = brute_force_ranks(arr);
      for (const auto& [r, c] : brute) CHECK(lat.count_of_rank(r) == c);
    }
  }
}

TEST_CASE("braid A4 and A5 lattice shape") {
  const IntersectionLattice a4(gen_braid(4));
  CHECK(a4.count_of_rank(1) == 6);
  CHECK(rank2_multiplicities(a4) == std::vector<int>{2, 2, 2, 3, 3, 3, 3});
  CHECK(a4.essential());
  CHECK(a4.irreducible(*a4.empty_flat()));

  const IntersectionLattice a5(gen_braid(5));
  int g = 0;
  for (int i = 0; i < a5.size(); ++i) g += a5.irreducible(i) ? 1 : 0;
  CHECK(g == 26);
  CHECK(a5.count_of_rank(4) == 1);
}

TEST_CASE("B3 and seven lines multiplicities") {
  const Arrangement b3 = gen_bm(3);
  CHECK(b3.size() == 9);
  const IntersectionLattice lb3(b3);
  auto m = rank2_multiplicities(lb3);
  CHECK(std::count(m.begin(), m.end(), 4) == 3);
  CHECK(std::count(m.begin(), m.end(), 3) == 4);
  CHECK(std::count(m.begin(), m.end(), 2) == 6);
  CHECK(gen_bm(2).size() == 4);

  const Arrangement seven = gen_seven_lines();
  CHECK(seven.size() == 7);
  m = rank2_multiplicities(IntersectionLattice(seven));
  CHECK(std::count(m.begin(), m.end(), 3) == 6);
  CHECK(std::count(m.begin(), m.end(), 2) == 3);
  CHECK(m.size() == 9);

  // Coordinate vertices are double points.
  const IntersectionLattice ls(seven);
  for (int i : ls.flats_of_rank(2)) {
    bool coordinate_only = true;
    for (int h : ls.flat(i).closure) {
      const auto& v = seven.hyperplanes()[static_cast<std::size_t>(h)].normal();
      coordinate_only = coordinate_only && std::count(v.begin(), v.end(), 0) == 2;
    }
    if (coordinate_only) CHECK(ls.multiplicity(i) == 2);
  }
}

TEST_CASE("seven lines: the four forms pull back the conic under squaring") {
  // Polynomials in x, y, z as exponent triple -> integer coefficient.
  using Poly = std::map<std::array<int, 3>, long>;
  auto mul = [](const Poly& p, const Poly& q) {
    Poly out;
    for (const auto& [e1, c1] : p) {
      for (const auto& [e2, c2] : q) {
        out[{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}] += c1 * c2;
      }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  };
  Poly product;
  product[{0, 0, 0}] = 1;
  int forms = 0;
  const Arrangement seven = gen_seven_lines();
  for (const auto& h : seven.hyperplanes()) {
    const auto& v = h.normal();
    if (std::count(v.begin(), v.end(), 0) != 0) continue;
    Poly linear;
    linear[{1, 0, 0}] = v[0];
    linear[{0, 1, 0}] = v[1];
    linear[{0, 0, 1}] = v[2];
    product = mul(product, linear);
    ++forms;
  }
  REQUIRE(forms == 4);
  // X^2 + Y^2 + Z^2 - 2XY - 2YZ - 2ZX with X = x^2, Y = y^2, Z = z^2.
  Poly conic;
  conic[{4, 0, 0}] = 1;
  conic[{0, 4, 0}] = 1;
  conic[{0, 0, 4}] = 1;
  conic[{2, 2, 0}] = -2;
  conic[{0, 2, 2}] = -2;
  conic[{2, 0, 2}] = -2;
  Poly neg;
  for (const auto& [e, c] : conic) neg[e] = -c;
  CHECK((product == conic || product == neg));
}

TEST_CASE("generic arrangements") {
  const Arrangement g = gen_generic(2, 4, 1);
  CHECK(g == gen_generic(2, 4, 1));
  const IntersectionLattice lat(g);
  CHECK(rank2_multiplicities(lat) == std::vector<int>(6, 2));
  CHECK(lat.essential());
  CHECK(lat.irreducible(*lat.empty_flat()));
  // every n+1 normals independent
  const Arrangement g3 = gen_generic(3, 7, 2);
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c)
        for (int d = c + 1; d < 7; ++d) CHECK(rank(g3.normal_matrix({a, b, c, d})) == 4);

  const IntersectionLattice tri(gen_generic(2, 3, 5));
  CHECK(tri.essential());
  CHECK_FALSE(tri.irreducible(*tri.empty_flat()));
  CHECK_THROWS_AS(gen_generic(2, 2, 0), InputError);
}

TEST_CASE("essential and irreducible flags") {
  CHECK(is_essential(gen_braid(4)));
  CHECK(is_irreducible(gen_braid(4)));
  const Arrangement pencil(2, {Hyperplane({1, 0, 0}), Hyperplane({0, 1, 0}), Hyperplane({1, 1, 0})});
  CHECK_FALSE(is_essential(pencil));
  CHECK_FALSE(IntersectionLattice(pencil).empty_flat().has_value());
  const Arrangement triangle(2, {Hyperplane({1, 0, 0}), Hyperplane({0, 1, 0}), Hyperplane({0, 0, 1})});
  CHECK(is_essential(triangle));
  CHECK_FALSE(is_irreducible(triangle));
  const Arrangement single(2, {Hyperplane({1, 2, 3})});
  const IntersectionLattice ls(single);
  CHECK(ls.size() == 1);
  CHECK_FALSE(ls.essential());
}

TEST_CASE("matroid components") {
  CHECK(matroid_components(Matrix::from_rows({{1, 0}, {0, 1}})).size() == 2);
  CHECK(matroid_components(Matrix::from_rows({{1, 0}, {0, 1}, {1, 1}})).size() == 1);
  const auto blocks = matroid_components(
      Matrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  CHECK(blocks == std::vector<IndexSet>{{0, 2, 4}, {1, 3, 5}});
}

TEST_CASE("matroid components do not depend on row order") {
  for (const Arrangement& arr : {gen_braid(5), gen_bm(3), gen_seven_lines(), gen_bm(4)}) {
    const IntersectionLattice lat(arr);
    for (int i = 0; i < lat.size(); ++i) {
      const IndexSet& cl = lat.flat(i).closure;
      IndexSet rev(cl.rbegin(), cl.rend());
      const auto fwd = matroid_components(arr.normal_matrix(cl));
      const auto bwd = matroid_components(arr.normal_matrix(rev));
      std::set<IndexSet> a;
      std::set<IndexSet> b;
      for (const auto& blk : fwd) {
        IndexSet s;
        for (int j : blk) s.push_back(cl[static_cast<std::size_t>(j)]);
        std::sort(s.begin(), s.end());
        a.insert(s);
      }
      for (const auto& blk : bwd) {
        IndexSet s;
        for (int j : blk) s.push_back(rev[static_cast<std::size_t>(j)]);
        std::sort(s.begin(), s.end());
        b.insert(s);
      }
      CHECK(a == b);
    }
  }
}

TEST_CASE("rank-2 flats: irreducible iff multiplicity at least 3") {
  for (const Arrangement& arr : {gen_braid(5), gen_bm(3), gen_bm(4), gen_seven_lines(), gen_generic(3, 6, 1)}) {
    const IntersectionLattice lat(arr);
    for (int i : lat.flats_of_rank(2)) CHECK(lat.irreducible(i) == (lat.multiplicity(i) >= 3));
  }
  const IntersectionLattice a4(gen_braid(4));
  CHECK_THROWS_AS(a4.multiplicity(a4.hyperplane_flat(0)), InputError);
}

TEST_CASE("closure is idempotent and monotone") {
  std::mt19937_64 rng(17);
  for (const Arrangement& arr : {gen_bm(3), gen_braid(5), gen_seven_lines()}) {
    std::uniform_int_distribution<int> pick(0, arr.size() - 1);
    for (int t = 0; t < 100; ++t) {
      std::set<int> s;
      const int size = 1 + t % 4;
      while (static_cast<int>(s.size()) < size) s.insert(pick(rng));
      IndexSet small(s.begin(), s.end());
      const Flat f = closure(arr, small);
      CHECK(closure(arr, f.closure) == f);
      CHECK(is_subset(small, f.closure));
      s.insert(pick(rng));
      const Flat g = closure(arr, IndexSet(s.begin(), s.end()));
      CHECK(is_subset(f.closure, g.closure));
      CHECK(g.rank >= f.rank);
    }
  }
}

TEST_CASE("lattice order and meet") {
  const IntersectionLattice lat(gen_braid(5));
  for (int a = 0; a < lat.size(); ++a) {
    CHECK(lat.subspace_of(a, a));
    for (int b = 0; b < lat.size(); ++b) {
      const int m = lat.meet(a, b);
      CHECK(lat.subspace_of(m, a));
      CHECK(lat.subspace_of(m, b));
      if (a + 1 < lat.size()) CHECK(lat.rank(a) <= lat.rank(a + 1));
    }
  }
}

TEST_CASE("localization") {
  const Arrangement a4 = gen_braid(4);
  const IntersectionLattice lat(a4);
  for (int i = 0; i < lat.size(); ++i) {
    const Flat& f = lat.flat(i);
    const Localization loc = localize(a4, f);
    CHECK(loc.arrangement.size() == static_cast<int>(f.closure.size()));
    CHECK(loc.ambient_index == f.closure);
    if (f.rank == 2) CHECK(is_irreducible(loc.arrangement) == (f.closure.size() == 3));
    if (f.rank == 1) CHECK(loc.arrangement.size() == 1);
  }
  CHECK(localize(a4, lat.flat(*lat.empty_flat())).arrangement.size() == 6);

  for (const Arrangement& arr : {gen_braid(5), gen_bm(4)}) {
    const IntersectionLattice l(arr);
    for (int i = 0; i < l.size(); ++i) {
      if (l.rank(i) < 2) continue;
      const Arrangement ess = essentialize(localize(arr, l.flat(i)).arrangement);
      CHECK(ess.dim() == l.rank(i) - 1);
      CHECK(is_essential(ess));
      CHECK(is_irreducible(ess) == l.irreducible(i));
    }
  }
}
