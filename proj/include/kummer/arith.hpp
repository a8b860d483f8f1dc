#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "kummer/rational.hpp"

namespace kummer {

struct PrimePower {
    Int prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Sorted by prime, empty for m = 1.
using Factorization = std::vector<PrimePower>;

Factorization factorize(Int m);

// Number of distinct prime divisors; rho(1) = 0.
int rho(Int m);

Int euler_phi(Int m);

// Value of a mod m in [0, m).
Int mod_floor(Int a, Int m);

Int power_mod(Int base, Int exp, Int m);

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) > 1.
Int mod_inverse(Int a, Int m);

// Whether c^2 = num/den (mod m) is solvable for some integer c. The value
// num/den is read modulo m, so den must be a unit mod m. Every value is a
// residue mod 1 and mod 2.
bool is_quadratic_residue(Int num, Int den, Int m);

// Split w = w_plus * w_minus where w_plus collects the full prime-power
// contribution of every prime of w that also divides t1.
std::pair<Int, Int> split_w(Int w, Int t1);

struct invalid_profile_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Derived quantities of a polarisation profile (n, d, t):
//   G = gcd(2d, 2n+2),  d1 = 2d/G,  n1 = (2n+2)/G,
//   g = G/t,  w = gcd(g, t),  g1 = g/w,  t1 = t/w,  w = w_plus * w_minus.
struct ProfileInvariants {
    Int n, d, t;
    Int big_g, d1, n1, g, w, g1, t1, w_plus, w_minus;
};

// Requires n >= 2, d >= 1 and t a positive divisor of gcd(2d, 2n+2);
// anything else throws invalid_profile_error.
ProfileInvariants derive_profile(Int n, Int d, Int t);

}  // namespace kummer
