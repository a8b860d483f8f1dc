#include "kummer/arith.hpp"

#include <numeric>
#include <tuple>

namespace kummer {

Factorization factorize(Int m) {
    if (m < 1) throw std::domain_error("factorize requires a positive integer");
    Factorization out;
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        out.push_back({p, e});
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

int rho(Int m) {
    return static_cast<int>(factorize(m).size());
}

Int euler_phi(Int m) {
    Wide phi = 1;
    for (const auto& [p, e] : factorize(m)) {
        Wide pe = p - 1;
        for (int i = 1; i < e; ++i) pe = wide_mul(pe, p);
        phi = wide_mul(phi, pe);
    }
    return narrow(phi);
}

Int mod_floor(Int a, Int m) {
    if (m < 1) throw std::domain_error("mod_floor requires a positive modulus");
    const Int r = a % m;
    return r < 0 ? r + m : r;
}

Int power_mod(Int base, Int exp, Int m) {
    if (m < 1) throw std::domain_error("power_mod requires a positive modulus");
    if (exp < 0) throw std::domain_error("power_mod requires a nonnegative exponent");
    Wide acc = 1;
    Wide b = mod_floor(base, m);
    while (exp) {
        if (exp & 1) acc = acc * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<Int>(acc);
}

Int mod_inverse(Int a, Int m) {
    if (m < 1) throw std::domain_error("mod_inverse requires a positive modulus");
    if (m == 1) return 0;
    Int r0 = m, r1 = mod_floor(a, m);
    Int s0 = 0, s1 = 1;
    while (r1) {
        const Int q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        s0 -= q * s1; std::swap(s0, s1);
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: argument is not a unit");
    return mod_floor(s0, m);
}

namespace {

// Euler criterion; v must not be divisible by the odd prime p.
bool legendre_is_one(Int v, Int p) {
    return power_mod(v, (p - 1) / 2, p) == 1;
}

// Solvability of c^2 = v (mod p^k) for 0 <= v < p^k.
bool square_exists_mod_prime_power(Int v, Int p, int k) {
    if (v == 0) return true;
    int e = 0;
    while (v % p == 0) { v /= p; ++e; }
    if (e % 2) return false;
    const int j = k - e;  // j >= 1 here, else v would have reduced to 0
    if (p == 2) {
        if (j == 1) return true;
        if (j == 2) return v % 4 == 1;
        return v % 8 == 1;
    }
    return legendre_is_one(v, p);
}

}  // namespace

bool is_quadratic_residue(Int num, Int den, Int m) {
    if (m < 1) throw std::domain_error("is_quadratic_residue requires a positive modulus");
    const Int d = mod_floor(den, m);
    if (std::gcd(d, m) != 1)
        throw std::domain_error("is_quadratic_residue: denominator is not a unit mod m");
    if (m <= 2) return true;
    const Int v = narrow(Wide(mod_floor(num, m)) * mod_inverse(d, m) % m);
    for (const auto& [p, k] : factorize(m)) {
        Int pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        if (!square_exists_mod_prime_power(v % pk, p, k)) return false;
    }
    return true;
}

std::pair<Int, Int> split_w(Int w, Int t1) {
    if (w < 1 || t1 < 1) throw std::domain_error("split_w requires positive arguments");
    Int plus = 1;
    for (const auto& [p, e] : factorize(w)) {
        if (t1 % p) continue;
        for (int i = 0; i < e; ++i) plus = narrow(wide_mul(plus, p));
    }
    return {plus, w / plus};
}

ProfileInvariants derive_profile(Int n, Int d, Int t) {
    if (n < 2) throw invalid_profile_error("profile requires n >= 2");
    if (d < 1) throw invalid_profile_error("profile requires d >= 1");
    const Int two_d = narrow(2 * Wide(d));
    const Int order = narrow(2 * Wide(n) + 2);
    const Int big_g = std::gcd(two_d, order);
    if (t < 1 || big_g % t != 0)
        throw invalid_profile_error(
            "profile requires t to be a positive divisor of gcd(2d, 2n+2)");
    ProfileInvariants p;
    p.n = n;
    p.d = d;
    p.t = t;
    p.big_g = big_g;
    p.d1 = two_d / big_g;
    p.n1 = order / big_g;
    p.g = big_g / t;
    p.w = std::gcd(p.g, t);
    p.g1 = p.g / p.w;
    p.t1 = t / p.w;
    std::tie(p.w_plus, p.w_minus) = split_w(p.w, p.t1);
    return p;
}

}  // namespace kummer
