#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pkarr {

// gmpxx keeps results of arithmetic canonical (reduced, positive
// denominator); every constructor path below canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q", "p" or "-p/q". Throws InputError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

}  // namespace pkarr
