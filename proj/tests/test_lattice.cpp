#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kummer/lattice.hpp"

using namespace kummer;

namespace {

Vec7 vec(Int a, Int b, Int c, Int d, Int e, Int f, Int g) {
    Vec7 v;
    v << a, b, c, d, e, f, g;
    return v;
}

Vec7 image_of(const IntegerIsometry& g, const Vec7& v) {
    Vec7 out = Vec7::Zero();
    for (int j = 0; j < 7; ++j) out += v(j) * g.matrix().col(j);
    return out;
}

// Pool of reflection vectors for the given lattice; squares -2 and +2,
// including two that mix delta with the hyperbolic part.
std::vector<Vec7> reflection_pool(const KummerLattice& L) {
    const Int n = L.n();
    return {
        KummerLattice::e(1) - KummerLattice::f(1),
        KummerLattice::e(2) - KummerLattice::f(2),
        KummerLattice::e(3) - KummerLattice::f(3),
        KummerLattice::e(1) + KummerLattice::f(1),
        KummerLattice::e(2) + KummerLattice::f(2),
        KummerLattice::e(1) - KummerLattice::f(1) + 3 * KummerLattice::e(2),
        KummerLattice::e(2) + KummerLattice::f(2) + 5 * KummerLattice::e(3),
        KummerLattice::e(1) + n * KummerLattice::f(1) + KummerLattice::delta(),
        KummerLattice::e(1) + (n + 2) * KummerLattice::f(1) + KummerLattice::delta(),
    };
}

IntegerIsometry random_reflection_word(const KummerLattice& L, std::mt19937_64& rng,
                                       int length) {
    const auto pool = reflection_pool(L);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    IntegerIsometry out(L, Mat7::Identity());
    for (int i = 0; i < length; ++i)
        out = compose(L, reflection(L, pool[pick(rng)]), out);
    return out;
}

// Isometry of the n = 11 lattice sending delta to 24 e1 + 24 f1 + 7 delta;
// it multiplies the discriminant generator by 7, which is neither 1 nor
// -1 modulo 24.
Mat7 multiplier_seven() {
    Mat7 m;
    m << 3, 4, 0, 0, 0, 0, 24,
         4, 3, 0, 0, 0, 0, 24,
         0, 0, 1, 0, 0, 0, 0,
         0, 0, 0, 1, 0, 0, 0,
         0, 0, 0, 0, 1, 0, 0,
         0, 0, 0, 0, 0, 1, 0,
         1, 1, 0, 0, 0, 0, 7;
    return m;
}

}  // namespace

TEST_CASE("lattice shape") {
    const KummerLattice L(2);
    CHECK(L.n() == 2);
    CHECK(L.discriminant_order() == 6);
    CHECK(L.gram()(0, 1) == 1);
    CHECK(L.gram()(1, 0) == 1);
    CHECK(L.gram()(0, 0) == 0);
    CHECK(L.gram()(6, 6) == -6);
    CHECK(L.gram()(0, 6) == 0);
    CHECK(determinant(L.gram()) == 6);  // (det U)^3 * (-2-2n) = 2n+2
    CHECK(determinant(KummerLattice(10).gram()) == 22);
    CHECK_THROWS_AS(KummerLattice(1), std::domain_error);
}

TEST_CASE("inner products of basis vectors") {
    const KummerLattice L(2);
    CHECK(inner(L, KummerLattice::e(1), KummerLattice::f(1)) == 1);
    CHECK(inner(L, KummerLattice::e(1), KummerLattice::e(1)) == 0);
    CHECK(inner(L, KummerLattice::e(1), KummerLattice::f(2)) == 0);
    CHECK(inner(L, KummerLattice::delta(), KummerLattice::delta()) == -6);
    CHECK(inner(L, vec(3, 3, 0, 0, 0, 0, 1), vec(3, 3, 0, 0, 0, 0, 1)) == 12);
}

TEST_CASE("inner products overflow loudly") {
    const KummerLattice L(2);
    const Int big = Int(1) << 62;
    CHECK_THROWS_AS(inner(L, vec(big, big, 0, 0, 0, 0, 0),
                          vec(big, big, 0, 0, 0, 0, 0)),
                    std::overflow_error);
    CHECK_THROWS_AS(inner(L, vec(0, 0, 0, 0, 0, 0, big),
                          vec(0, 0, 0, 0, 0, 0, big)),
                    std::overflow_error);
}

TEST_CASE("primitivity and divisibility") {
    const KummerLattice L(2);
    CHECK(is_primitive(KummerLattice::e(1)));
    CHECK_FALSE(is_primitive(2 * KummerLattice::e(1)));
    CHECK(is_primitive(vec(2, 0, 0, 0, 0, 0, 3)));
    CHECK(divisibility(L, KummerLattice::e(1)) == 1);
    CHECK(divisibility(L, KummerLattice::delta()) == 6);
    CHECK(divisibility(L, vec(2, 0, 0, 0, 0, 0, 1)) == 2);
    CHECK(divisibility(L, 3 * KummerLattice::e(1)) == 3);
    CHECK_THROWS_AS(divisibility(L, Vec7::Zero()), std::domain_error);
}

TEST_CASE("orbit invariants on known vectors") {
    const KummerLattice L(2);

    const OrbitInvariant a = orbit_invariant(L, vec(3, 3, 0, 0, 0, 0, 1));
    CHECK(a.square == 12);
    CHECK(a.div == 3);
    CHECK(a.disc.residue == 2);
    CHECK(a.disc.q_value == Rational(4, 3));

    const OrbitInvariant b = orbit_invariant(L, KummerLattice::delta());
    CHECK(b.square == -6);
    CHECK(b.div == 6);
    CHECK(b.disc.residue == 1);
    CHECK(b.disc.q_value == Rational(11, 6));

    // Same square, divisibility and form value as delta in the n = 11
    // lattice, but a different residue: a genuinely distinct orbit.
    const KummerLattice M(11);
    const OrbitInvariant c = orbit_invariant(M, vec(24, 24, 0, 0, 0, 0, 7));
    CHECK(c.square == -24);
    CHECK(c.div == 24);
    CHECK(c.disc.residue == 7);
    CHECK(c.disc.q_value == orbit_invariant(M, KummerLattice::delta()).disc.q_value);
    CHECK(c.disc.residue != orbit_invariant(M, KummerLattice::delta()).disc.residue);

    CHECK_THROWS_AS(orbit_invariant(L, 2 * KummerLattice::e(1)), std::domain_error);
    CHECK_THROWS_AS(orbit_invariant(L, KummerLattice::e(1)), std::domain_error);
}

TEST_CASE("isometry recognition") {
    const KummerLattice L(2);
    CHECK(is_isometry(L, Mat7::Identity()));
    CHECK(is_isometry(L, -Mat7::Identity()));
    Mat7 swap = Mat7::Identity();
    swap(0, 0) = swap(1, 1) = 0;
    swap(0, 1) = swap(1, 0) = 1;  // e1 <-> f1
    CHECK(is_isometry(L, swap));
    CHECK_FALSE(is_isometry(L, 2 * Mat7::Identity()));
    CHECK_THROWS_AS(IntegerIsometry(L, 2 * Mat7::Identity()), std::domain_error);
}

TEST_CASE("determinant is exact") {
    CHECK(determinant(Mat7::Identity()) == 1);
    CHECK(determinant(-Mat7::Identity()) == -1);
    CHECK(determinant(Mat7::Zero()) == 0);
    Mat7 perm = Mat7::Zero();
    for (int i = 0; i < 7; ++i) perm(i, (i + 1) % 7) = 1;  // 7-cycle, even
    CHECK(determinant(perm) == 1);
    Mat7 tri = Mat7::Identity();
    tri(0, 0) = -3;
    tri(3, 3) = 5;
    tri(0, 6) = 1000;
    tri(2, 5) = -77;
    CHECK(determinant(tri) == -15);
}

TEST_CASE("reflections act by the even-lattice formulas") {
    const KummerLattice L(2);

    // square -2: x -> x + (x, u) u swaps e1 and f1 and fixes the rest
    const Vec7 u = KummerLattice::e(1) - KummerLattice::f(1);
    CHECK(inner(L, u, u) == -2);
    const IntegerIsometry r = reflection(L, u);
    CHECK(image_of(r, KummerLattice::e(1)) == KummerLattice::f(1));
    CHECK(image_of(r, KummerLattice::f(1)) == KummerLattice::e(1));
    CHECK(image_of(r, KummerLattice::e(2)) == KummerLattice::e(2));
    CHECK(image_of(r, KummerLattice::delta()) == KummerLattice::delta());
    CHECK(image_of(r, u) == -u);
    CHECK(determinant(r.matrix()) == -1);
    CHECK(chi(L, r) == 1);

    // square +2: x -> -x + (x, u) u is minus a true reflection, so it
    // fixes u itself and negates the orthogonal complement
    const Vec7 v = KummerLattice::e(1) + KummerLattice::f(1);
    CHECK(inner(L, v, v) == 2);
    const IntegerIsometry s = reflection(L, v);
    CHECK(image_of(s, KummerLattice::e(1)) == KummerLattice::f(1));
    CHECK(image_of(s, KummerLattice::f(1)) == KummerLattice::e(1));
    CHECK(image_of(s, KummerLattice::e(2)) == -KummerLattice::e(2));
    CHECK(image_of(s, KummerLattice::delta()) == -KummerLattice::delta());
    CHECK(image_of(s, v) == v);
    CHECK(determinant(s.matrix()) == 1);
    CHECK(chi(L, s) == -1);

    CHECK_THROWS_AS(reflection(L, KummerLattice::e(1)), std::domain_error);
    CHECK_THROWS_AS(reflection(L, KummerLattice::e(1) + 2 * KummerLattice::f(1)),
                    std::domain_error);
}

TEST_CASE("reflections are involutive isometries for every pool vector") {
    for (Int n : {2, 3, 5, 11}) {
        const KummerLattice L(n);
        for (const Vec7& u : reflection_pool(L)) {
            const Int square = inner(L, u, u);
            REQUIRE((square == 2 || square == -2));
            const IntegerIsometry r = reflection(L, u);
            const Vec7 expected = square == -2 ? Vec7(-u) : u;
            REQUIRE(image_of(r, u) == expected);
            REQUIRE(compose(L, r, r).matrix() == Mat7::Identity());
            REQUIRE(orientation_sign(L, r) == 1);
            REQUIRE(determinant(r.matrix()) * chi(L, r) == -1);
            REQUIRE_FALSE(is_monodromy(L, r.matrix()));
        }
    }
}

TEST_CASE("orientation signs") {
    const KummerLattice L(2);
    const IntegerIsometry id(L, Mat7::Identity());
    const IntegerIsometry neg(L, -Mat7::Identity());
    CHECK(orientation_sign(L, id) == 1);
    CHECK(orientation_sign(L, neg) == -1);
    CHECK(orientation_sign(L, reflection(L, KummerLattice::e(1) - KummerLattice::f(1))) == 1);
    CHECK(orientation_sign(L, reflection(L, KummerLattice::e(1) + KummerLattice::f(1))) == 1);
}

TEST_CASE("orientation sign is multiplicative") {
    std::mt19937_64 rng(97);
    const KummerLattice L(3);
    const IntegerIsometry neg(L, -Mat7::Identity());
    for (int trial = 0; trial < 50; ++trial) {
        const IntegerIsometry a = random_reflection_word(L, rng, 1 + int(rng() % 4));
        const IntegerIsometry b =
            trial % 2 ? random_reflection_word(L, rng, 1 + int(rng() % 4)) : neg;
        const int expected = orientation_sign(L, a) * orientation_sign(L, b);
        REQUIRE(orientation_sign(L, compose(L, a, b)) == expected);
    }
}

TEST_CASE("discriminant action") {
    const KummerLattice L(2);
    CHECK(discriminant_action(L, IntegerIsometry(L, Mat7::Identity())) ==
          DiscriminantAction::plus_id);
    CHECK(discriminant_action(L, IntegerIsometry(L, -Mat7::Identity())) ==
          DiscriminantAction::minus_id);
    CHECK(discriminant_action(L, reflection(L, KummerLattice::e(1) + KummerLattice::f(1))) ==
          DiscriminantAction::minus_id);

    const KummerLattice M(11);
    const IntegerIsometry seven(M, multiplier_seven());
    CHECK(discriminant_action(M, seven) == DiscriminantAction::other);
    CHECK_FALSE(in_w(M, seven));
    CHECK_THROWS_AS(chi(M, seven), std::domain_error);
    CHECK_FALSE(is_monodromy(M, multiplier_seven()));
}

TEST_CASE("membership in W and the monodromy group") {
    const KummerLattice L(2);

    CHECK(in_w(L, IntegerIsometry(L, Mat7::Identity())));
    CHECK(is_monodromy(L, Mat7::Identity()));

    // -id reverses orientation, so it is rejected before any sign bookkeeping
    const IntegerIsometry neg(L, -Mat7::Identity());
    CHECK(orientation_sign(L, neg) == -1);
    CHECK_FALSE(in_w(L, neg));
    CHECK_FALSE(is_monodromy(L, -Mat7::Identity()));
    CHECK_THROWS_AS(chi(L, neg), std::domain_error);

    // single reflections of either square fail det * chi = 1
    const IntegerIsometry r2 = reflection(L, KummerLattice::e(1) - KummerLattice::f(1));
    const IntegerIsometry s2 = reflection(L, KummerLattice::e(1) + KummerLattice::f(1));
    CHECK(in_w(L, r2));
    CHECK(in_w(L, s2));
    CHECK_FALSE(is_monodromy(L, r2.matrix()));
    CHECK_FALSE(is_monodromy(L, s2.matrix()));

    // products of two reflections land in the monodromy group
    const IntegerIsometry rr =
        compose(L, r2, reflection(L, KummerLattice::e(2) - KummerLattice::f(2)));
    CHECK(is_monodromy(L, rr.matrix()));
    const IntegerIsometry rs = compose(L, r2, s2);
    CHECK(is_monodromy(L, rs.matrix()));

    // non-isometries are rejected, not errored
    CHECK_FALSE(is_monodromy(L, 2 * Mat7::Identity()));
}

TEST_CASE("parity of determinant times chi along reflection words") {
    std::mt19937_64 rng(5150);
    for (Int n : {2, 5, 11}) {
        const KummerLattice L(n);
        for (int trial = 0; trial < 40; ++trial) {
            const int k = 1 + int(rng() % 6);
            const IntegerIsometry g = random_reflection_word(L, rng, k);
            REQUIRE(in_w(L, g));
            const Int parity = determinant(g.matrix()) * chi(L, g);
            REQUIRE(parity == (k % 2 ? -1 : 1));
            REQUIRE(is_monodromy(L, g.matrix()) == (k % 2 == 0));
        }
    }
}

TEST_CASE("compose and inverse") {
    const KummerLattice L(5);
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const IntegerIsometry g = random_reflection_word(L, rng, 1 + int(rng() % 5));
        const IntegerIsometry h = inverse(L, g);
        CHECK(compose(L, g, h).matrix() == Mat7::Identity());
        CHECK(compose(L, h, g).matrix() == Mat7::Identity());
    }
    const IntegerIsometry r = reflection(L, KummerLattice::e(1) - KummerLattice::f(1));
    CHECK(inverse(L, r).matrix() == r.matrix());
}

TEST_CASE("orbit invariants are preserved by monodromy words") {
    std::mt19937_64 rng(8128);
    for (Int n : {2, 3, 7}) {
        const KummerLattice L(n);
        std::uniform_int_distribution<Int> coord(-6, 6);
        int tested = 0;
        while (tested < 60) {
            Vec7 v;
            for (int i = 0; i < 7; ++i) v(i) = coord(rng);
            if (!is_primitive(v) || inner(L, v, v) == 0) continue;
            const IntegerIsometry g = random_reflection_word(L, rng, 2 * (1 + int(rng() % 3)));
            REQUIRE(is_monodromy(L, g.matrix()));
            REQUIRE(orbit_invariant(L, image_of(g, v)) == orbit_invariant(L, v));
            ++tested;
        }
    }
}
