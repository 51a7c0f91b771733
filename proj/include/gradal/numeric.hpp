#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gradal {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational p/q with q > 0 and gcd(p, q) = 1.
Rat make_rat(const Int &num, const Int &den = 1);

/// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Int &x);
std::string to_string(const Rat &x);

/// Parses "p" or "p/q" (optional leading sign). Throws Error(ParseError).
Rat parse_rat(std::string_view text);

bool is_integer(const Rat &x);

/// Floor division and non-negative remainder for b != 0.
Int floor_div(const Int &a, const Int &b);
Int mod_floor(const Int &a, const Int &b);

Int gcd(const Int &a, const Int &b);
Int lcm(const Int &a, const Int &b);

/// Extended gcd: returns g = gcd(a,b) >= 0 with s*a + t*b = g.
struct Bezout {
    Int g, s, t;
};
Bezout xgcd(const Int &a, const Int &b);

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

std::string to_string(const IntVec &v);

} // namespace gradal
