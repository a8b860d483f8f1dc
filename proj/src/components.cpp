#include "kummer/components.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kummer {

Int count_embedding_orbit_classes(Int n) {
    if (n < 2) throw std::domain_error("requires n >= 2");
    return Int(1) << (rho(n + 1) - 1);
}

Int count_marked_components(Int n) {
    if (n < 2) throw std::domain_error("requires n >= 2");
    return Int(1) << (rho(n + 1) + 1);
}

bool isotropy_holds(Int n, Int d, Int t, Int c) {
    derive_profile(n, d, t);
    const Wide lhs = wide_add(2 * Wide(d), wide_mul(wide_mul(c, c), 2 * Wide(n) + 2));
    const Wide mod = wide_mul(2, wide_mul(t, t));
    return lhs % mod == 0;
}

bool congruence_eq2_holds(Int n, Int d, Int t, Int c) {
    const ProfileInvariants p = derive_profile(n, d, t);
    const Wide lhs = wide_mul(p.g1, wide_add(p.d1, wide_mul(wide_mul(c, c), p.n1)));
    return lhs % (2 * Wide(p.t1)) == 0;
}

Int count_components_oracle(Int n, Int d, Int t) {
    derive_profile(n, d, t);
    Int raw = 0;
    for (Int c = 0; c < t; ++c)
        if (std::gcd(c, t) == 1 && isotropy_holds(n, d, t, c)) ++raw;
    if (t <= 2) return raw;
    if (raw % 2) throw internal_error("solution set is not symmetric under negation");
    return raw / 2;
}

std::vector<Int> component_class_representatives(Int n, Int d, Int t) {
    derive_profile(n, d, t);
    std::vector<Int> reps;
    for (Int c = 0; c < t; ++c) {
        if (std::gcd(c, t) != 1 || !isotropy_holds(n, d, t, c)) continue;
        if (t <= 2 || 2 * c < t) reps.push_back(c);
    }
    return reps;
}

std::string_view branch_label(Branch b) {
    switch (b) {
        case Branch::T1a: return "T1a";
        case Branch::T1b: return "T1b";
        case Branch::T1c: return "T1c";
        case Branch::T2: return "T2";
        case Branch::T3a: return "T3a";
        case Branch::T3b: return "T3b";
        case Branch::T3c: return "T3c";
        case Branch::T3d: return "T3d";
        case Branch::ZERO: return "ZERO";
    }
    throw internal_error("unknown branch");
}

namespace {

// The four condition sets; gcd guards come first so the residue tests are
// well posed.
bool cond_a(const ProfileInvariants& p) {
    return p.g1 % 2 == 0 && std::gcd(p.d1, p.t1) == 1 && std::gcd(p.n1, p.t1) == 1 &&
           is_quadratic_residue(-p.d1, p.n1, p.t1);
}

bool cond_b(const ProfileInvariants& p) {
    return p.g1 % 2 != 0 && p.t1 % 2 != 0 && p.d1 % 2 != 0 &&
           std::gcd(p.d1, p.t1) == 1 && std::gcd(p.n1, 2 * p.t1) == 1 &&
           is_quadratic_residue(-p.d1, p.n1, 2 * p.t1);
}

bool cond_c(const ProfileInvariants& p) {
    return p.g1 % 2 != 0 && p.t1 % 2 != 0 && p.w % 2 != 0 && p.d1 % 2 == 0 &&
           std::gcd(p.d1, p.t1) == 1 && std::gcd(p.n1, 2 * p.t1) == 1 &&
           is_quadratic_residue(-p.d1, 4 * p.n1, p.t1);
}

bool cond_d(const ProfileInvariants& p) {
    return p.g1 % 2 != 0 && p.t1 % 2 == 0 && std::gcd(p.d1, p.t1) == 1 &&
           std::gcd(p.n1, 2 * p.t1) == 1 && is_quadratic_residue(-p.d1, p.n1, 2 * p.t1);
}

// w_plus(t1) phi(w_minus(t1)) 2^(rho_arg - 1), evaluated exactly.
Int positive_count(const ProfileInvariants& p, int rho_arg) {
    const Wide doubled =
        wide_mul(wide_mul(p.w_plus, euler_phi(p.w_minus)), Wide(1) << rho_arg);
    if (doubled % 2)
        throw internal_error("closed-form count is not an integer");
    return narrow(doubled / 2);
}

}  // namespace

CountResult count_components_closed_form(Int n, Int d, Int t) {
    const ProfileInvariants p = derive_profile(n, d, t);
    if (t > 2) {
        if (cond_a(p)) return {positive_count(p, rho(p.t1)), Branch::T1a};
        if (cond_b(p)) return {positive_count(p, rho(p.t1)), Branch::T1b};
        if (cond_c(p)) return {positive_count(p, rho(p.t1)), Branch::T1c};
        if (cond_d(p)) return {positive_count(p, rho(p.t1 / 2)), Branch::T2};
        return {0, Branch::ZERO};
    }
    if (cond_a(p)) return {1, Branch::T3a};
    if (cond_b(p)) return {1, Branch::T3b};
    if (cond_c(p)) return {1, Branch::T3c};
    if (cond_d(p)) return {1, Branch::T3d};
    return {0, Branch::ZERO};
}

PairClass build_pair_lattice(Int n, Int d, Int t, Int c) {
    derive_profile(n, d, t);
    c = mod_floor(c, t);
    if (std::gcd(c, t) != 1)
        throw std::domain_error("pair lattice requires c coprime to t");
    if (!isotropy_holds(n, d, t, c))
        throw std::domain_error("pair lattice requires the congruence to hold");
    const Int order = narrow(2 * Wide(n) + 2);
    // Basis (x, s), x = (l + c s)/t: integrality of the Gram matrix is the
    // congruence itself.
    const Wide xx = wide_add(2 * Wide(d), wide_mul(wide_mul(c, c), order));
    const Wide xs = wide_mul(c, order);
    if (xx % (Wide(t) * t) != 0 || xs % t != 0)
        throw internal_error("pair lattice Gram matrix is not integral");
    PairClass out;
    out.n = n;
    out.d = d;
    out.t = t;
    out.c = c;
    out.gram << narrow(xx / (Wide(t) * t)), narrow(xs / t),
                narrow(xs / t), order;
    out.l << t, -c;
    return out;
}

Int inner2(const Mat2& gram, const Vec2& v, const Vec2& w) {
    Wide acc = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            acc = wide_add(acc, wide_mul(wide_mul(v(i), gram(i, j)), w(j)));
    return narrow(acc);
}

Int det2(const Mat2& gram) {
    return narrow(wide_sub(wide_mul(gram(0, 0), gram(1, 1)), wide_mul(gram(0, 1), gram(1, 0))));
}

namespace {

void require_positive_definite(const Mat2& gram) {
    if (gram(0, 1) != gram(1, 0))
        throw std::domain_error("Gram matrix must be symmetric");
    if (gram(0, 0) <= 0 || det2(gram) <= 0)
        throw std::domain_error("Gram matrix must be positive definite");
}

Int isqrt_floor(Wide x) {
    if (x < 0) return 0;
    Int r = static_cast<Int>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && wide_mul(r, r) > x) --r;
    while (wide_mul(r + 1, r + 1) <= x) ++r;
    return r;
}

}  // namespace

std::vector<Vec2> vectors_of_norm(const Mat2& gram, Int norm) {
    require_positive_definite(gram);
    std::vector<Vec2> out;
    if (norm <= 0) return out;
    const Int det = det2(gram);
    // In a positive-definite plane, (v, v) = N bounds each coordinate:
    // a^2 <= N g11 / det and b^2 <= N g00 / det.
    const Int amax = isqrt_floor(wide_mul(norm, gram(1, 1)) / det);
    const Int bmax = isqrt_floor(wide_mul(norm, gram(0, 0)) / det);
    for (Int a = -amax; a <= amax; ++a)
        for (Int b = -bmax; b <= bmax; ++b) {
            Vec2 v;
            v << a, b;
            if (inner2(gram, v, v) == norm) out.push_back(v);
        }
    return out;
}

bool marked_pairs_isometric(const Mat2& gram_a, const Vec2& l_a,
                            const Mat2& gram_b, const Vec2& l_b) {
    require_positive_definite(gram_a);
    require_positive_definite(gram_b);
    if (det2(gram_a) != det2(gram_b)) return false;
    if (inner2(gram_a, l_a, l_a) != inner2(gram_b, l_b, l_b)) return false;
    // A marked isometry is exactly a pair of basis images (x, w) in the
    // second lattice with the Gram matrix of the first, spanning everything,
    // and carrying the coordinates of l_a to l_b.
    const auto xs = vectors_of_norm(gram_b, gram_a(0, 0));
    const auto ws = vectors_of_norm(gram_b, gram_a(1, 1));
    for (const Vec2& x : xs)
        for (const Vec2& w : ws) {
            if (inner2(gram_b, x, w) != gram_a(0, 1)) continue;
            const Wide span = wide_sub(wide_mul(x(0), w(1)), wide_mul(x(1), w(0)));
            if (span != 1 && span != -1) continue;
            Vec2 image;
            image(0) = narrow(wide_add(wide_mul(l_a(0), x(0)), wide_mul(l_a(1), w(0))));
            image(1) = narrow(wide_add(wide_mul(l_a(0), x(1)), wide_mul(l_a(1), w(1))));
            if (image(0) == l_b(0) && image(1) == l_b(1)) return true;
        }
    return false;
}

bool pairs_isometric(const PairClass& a, const PairClass& b) {
    return marked_pairs_isometric(a.gram, a.l, b.gram, b.l);
}

std::vector<PairClass> enumerate_component_classes(Int n, Int d, Int t) {
    std::vector<PairClass> out;
    for (Int c : component_class_representatives(n, d, t))
        out.push_back(build_pair_lattice(n, d, t, c));
    return out;
}

Vec2 orthogonal_complement_generator(const Mat2& gram, const Vec2& l) {
    require_positive_definite(gram);
    if (l(0) == 0 && l(1) == 0)
        throw std::domain_error("orthogonal complement of the zero vector");
    Vec2 pairings;
    for (int i = 0; i < 2; ++i) {
        Wide acc = 0;
        for (int j = 0; j < 2; ++j) acc = wide_add(acc, wide_mul(gram(i, j), l(j)));
        pairings(i) = narrow(acc);
    }
    Vec2 out;
    out << -pairings(1), pairings(0);
    const Int g = std::gcd(out(0), out(1));
    out /= g;  // g > 0: a definite form pairs a nonzero vector nontrivially
    if (out(0) < 0 || (out(0) == 0 && out(1) < 0)) out = -out;
    return out;
}

}  // namespace kummer
