#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "pkarr/arrangement.hpp"
#include "pkarr/rational.hpp"

namespace pkarr {

/// Essential braid arrangement in CP^{k-2}: hyperplanes x_i = x_j for
/// 1 <= i < j <= k in the gauge x_k = 0. Throws InputError for k < 3.
Arrangement gen_braid(int k);

/// The pair {i, j} (1-based, i < j) labelling each hyperplane of gen_braid(k),
/// in arrangement order.
std::vector<std::pair<int, int>> braid_labels(int k);

/// Reflection hyperplanes x_i = 0, x_i = x_j, x_i = -x_j in CP^{m-1}.
/// Throws InputError for m < 2.
Arrangement gen_bm(int m);

/// x, y, z, x+y+z, -x+y+z, x-y+z, x+y-z in CP^2.
Arrangement gen_seven_lines();

/// k hyperplanes in CP^n with every n+1 normals independent, drawn
/// deterministically from `seed`. Throws InputError for k < n+1.
Arrangement gen_generic(int n, int k, std::uint64_t seed);

/// Rational in the open interval (lo, hi) with denominator at most `denom`.
Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi, long denom = 97);

/// `count` positive rationals summing exactly to `total`.
std::vector<Rational> random_simplex_point(std::mt19937_64& rng, int count, const Rational& total);

/// `count` rationals in (0, 1), no sum constraint.
std::vector<Rational> random_unit_weights(std::mt19937_64& rng, int count);

}  // namespace pkarr
