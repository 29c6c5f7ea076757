#include <doctest.h>

#include "pkarr/errors.hpp"
#include "pkarr/oracle.hpp"
#include "blowup.hpp"
#include "suite.hpp"

using namespace pkarr;

namespace {

using Kind = BasicMonomial::Kind;

int g_of_pair(const WonderfulModel& m, int k, int i, int j) {
  const auto labels = braid_labels(k);
  const auto h = std::find(labels.begin(), labels.end(), std::pair{i, j}) - labels.begin();
  return m.g_hyperplane(static_cast<int>(h));
}

int g_of_block(const WonderfulModel& m, int k, std::vector<int> block) {
  const auto labels = braid_labels(k);
  IndexSet closure;
  for (std::size_t h = 0; h < labels.size(); ++h) {
    const bool in = std::find(block.begin(), block.end(), labels[h].first) != block.end() &&
                    std::find(block.begin(), block.end(), labels[h].second) != block.end();
    if (in) closure.push_back(static_cast<int>(h));
  }
  return *m.g_of_flat(*m.lattice().find(closure));
}

}  // namespace

TEST_CASE("model preconditions") {
  CHECK_THROWS_AS(WonderfulModel(IntersectionLattice(gen_braid(3))), InputError);
  const Arrangement pencil(2, {Hyperplane({1, 0, 0}), Hyperplane({0, 1, 0}), Hyperplane({1, 1, 0})});
  CHECK_THROWS_AS(WonderfulModel(IntersectionLattice(pencil)), InputError);
  CHECK_THROWS_AS(WonderfulModel(IntersectionLattice(gen_generic(2, 3, 0))), InputError);
}

TEST_CASE("basis sizes") {
  const WonderfulModel a4{IntersectionLattice(gen_braid(4))};
  CHECK(a4.g_size() == 11);
  CHECK(a4.delta1().size() == 5);
  CHECK(a4.delta2().size() == 1);

  const WonderfulModel a5{IntersectionLattice(gen_braid(5))};
  CHECK(a5.g_size() == 26);
  CHECK(a5.delta2().size() == 16);
  int squares = 0;
  int chains = 0;
  for (const auto& m : a5.delta2()) {
    squares += m.kind == Kind::square ? 1 : 0;
    chains += m.kind == Kind::chain ? 1 : 0;
    if (m.kind == Kind::chain) {
      CHECK(m.a == a5.g_empty());
      CHECK(a5.g_rank(m.b) == 2);
    }
  }
  CHECK(squares == 6);
  CHECK(chains == 10);

  for (const auto& s : suite::planar()) {
    const WonderfulModel m{IntersectionLattice(s.arrangement)};
    CHECK_MESSAGE(m.delta2().size() == 1, s.name);
    CHECK(PresentationOracle(m).quotient_dimension() == 1);
  }
}

TEST_CASE("nested pairs and classification on braid A4 and A5") {
  const WonderfulModel a4{IntersectionLattice(gen_braid(4))};
  const int t123 = g_of_block(a4, 4, {1, 2, 3});
  const int t124 = g_of_block(a4, 4, {1, 2, 4});
  CHECK_FALSE(a4.is_nested_pair(t123, t124));
  CHECK(a4.classify(t123, t124) == MonomialType::zero);
  const int h12 = g_of_pair(a4, 4, 1, 2);
  const int h34 = g_of_pair(a4, 4, 3, 4);
  CHECK(a4.reducible_intersection(h12, h34));
  CHECK(a4.classify(h12, h34) == MonomialType::m7);
  CHECK(a4.classify(h12, h12) == MonomialType::m1);
  CHECK(a4.classify(t123, t123) == MonomialType::m2);
  CHECK(a4.classify(t123, h12) == MonomialType::m5);
  CHECK(a4.classify(a4.g_empty(), a4.g_empty()) == MonomialType::basic);
  CHECK(a4.classify(t123, h34) == MonomialType::zero);

  const WonderfulModel a5{IntersectionLattice(gen_braid(5))};
  const int p = g_of_block(a5, 5, {1, 2, 3, 4});
  CHECK(a5.classify(a5.g_empty(), p) == MonomialType::m3);
  CHECK(a5.classify(p, g_of_pair(a5, 5, 1, 2)) == MonomialType::m4);
  CHECK(a5.classify(g_of_block(a5, 5, {1, 2, 3}), g_of_pair(a5, 5, 4, 5)) == MonomialType::m6);
  CHECK(a5.classify(a5.g_empty(), g_of_block(a5, 5, {1, 2, 3})) == MonomialType::basic);
}

TEST_CASE("braid A4 reductions") {
  const WonderfulModel a4{IntersectionLattice(gen_braid(4))};
  const int e = *a4.basis_index({Kind::square, a4.g_empty(), a4.g_empty()});
  const int t = g_of_block(a4, 4, {1, 2, 3});
  const int h12 = g_of_pair(a4, 4, 1, 2);
  const int h34 = g_of_pair(a4, 4, 3, 4);
  CHECK(a4.reduce_monomial(t, t).coords() == std::map<int, Rational>{{e, -1}});
  CHECK(a4.reduce_monomial(h12, h12).coords() == std::map<int, Rational>{{e, -1}});
  CHECK(a4.reduce_monomial(h12, h34).coords() == std::map<int, Rational>{{e, 1}});
}

TEST_CASE("table agrees with the presentation oracle") {
  for (const auto& s : suite::all()) {
    const WonderfulModel m{IntersectionLattice(s.arrangement)};
    const TableComparison c = compare_table_with_oracle(m);
    CHECK_MESSAGE(c.quotient_dimension == static_cast<int>(m.delta2().size()), s.name);
    CHECK_MESSAGE(c.mismatches.empty(), s.name);
  }
}

TEST_CASE("table agrees with the oracle on braid A6, where the M1 chain term is live") {
  const WonderfulModel m{IntersectionLattice(gen_braid(6))};
  CHECK(m.delta2().size() == 127);
  const TableComparison c = compare_table_with_oracle(m);
  CHECK(c.quotient_dimension == 127);
  CHECK(c.mismatches.empty());
}

TEST_CASE("n = 2: table and oracle agree with blowup intersection numbers") {
  for (const auto& s : suite::planar()) {
    const WonderfulModel m{IntersectionLattice(s.arrangement)};
    const PresentationOracle oracle(m);
    const blowup::Surface surface(m);
    const int e = *m.basis_index({Kind::square, m.g_empty(), m.g_empty()});
    for (int a = 0; a < m.g_size(); ++a) {
      for (int b = a; b < m.g_size(); ++b) {
        const Rational expected = surface.dot(a, b);
        CHECK_MESSAGE(m.reduce_monomial(a, b).at(e) == expected, s.name);
        CHECK_MESSAGE(oracle.reduce(a, b).at(e) == expected, s.name);
      }
    }
  }
}

TEST_CASE("table is symmetric and satisfies the linear relations") {
  for (const auto& s : suite::all()) {
    const WonderfulModel m{IntersectionLattice(s.arrangement)};
    for (int a = 0; a < m.g_size(); ++a) {
      for (int b = 0; b < m.g_size(); ++b) {
        CHECK(m.reduce_monomial(a, b) == m.reduce_monomial(b, a));
        if (!m.is_nested_pair(a, b)) CHECK(m.reduce_monomial(a, b).zero());
      }
    }
    for (int l = 0; l < m.g_size(); ++l) {
      for (int h = 0; h < s.arrangement.size(); ++h) {
        FormalH4 rel;
        for (int x = 0; x < m.g_size(); ++x) {
          if (m.inside(x, m.g_hyperplane(h))) add_monomial(rel, l, x, 1);
        }
        CHECK_MESSAGE(m.reduce(rel).zero(), s.name);
      }
    }
  }
}

TEST_CASE("basic monomials reduce to themselves") {
  const WonderfulModel m{IntersectionLattice(gen_braid(5))};
  const PresentationOracle oracle(m);
  for (int k = 0; k < static_cast<int>(m.delta2().size()); ++k) {
    const BasicMonomial& b = m.delta2()[static_cast<std::size_t>(k)];
    CHECK(m.classify(b.a, b.b) == MonomialType::basic);
    CHECK(m.reduce_monomial(b.a, b.b).coords() == std::map<int, Rational>{{k, 1}});
    CHECK(oracle.reduce(b.a, b.b).coords() == std::map<int, Rational>{{k, 1}});
  }
}

TEST_CASE("degree-2 reduction") {
  const WonderfulModel a4{IntersectionLattice(gen_braid(4))};
  const int h12 = g_of_pair(a4, 4, 1, 2);
  H2Class c = a4.reduce_h2({0, {{h12, 1}}});
  CHECK(c.pullback_h == 1);
  CHECK(c.gamma.coords() ==
        std::map<int, Rational>{{g_of_block(a4, 4, {1, 2, 3}), -1}, {g_of_block(a4, 4, {1, 2, 4}), -1}});
  c = a4.reduce_h2({0, {{a4.g_empty(), 1}}});
  CHECK(c.pullback_h == -1);
  CHECK(c.gamma.zero());
  for (int h = 0; h < 6; ++h) {
    FormalH2 rel;
    for (int x = 0; x < a4.g_size(); ++x) {
      if (a4.inside(x, a4.g_hyperplane(h))) rel.gamma[x] += 1;
    }
    const H2Class r = a4.reduce_h2(rel);
    CHECK(r.pullback_h == 0);
    CHECK(r.gamma.zero());
  }
}

TEST_CASE("names") {
  const WonderfulModel a4{IntersectionLattice(gen_braid(4))};
  CHECK(a4.generator_name(a4.g_empty()) == "g[0,1,2,3,4,5]");
  CHECK(a4.key_name(0) == "g[0,1,2,3,4,5]²");
}
