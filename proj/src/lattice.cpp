#include "kummer/lattice.hpp"

#include <numeric>

namespace kummer {

KummerLattice::KummerLattice(Int n) : n_(n) {
    if (n < 2) throw std::domain_error("lattice requires n >= 2");
    order_ = narrow(2 * Wide(n) + 2);
    gram_ = Mat7::Zero();
    for (int b = 0; b < 3; ++b) {
        gram_(2 * b, 2 * b + 1) = 1;
        gram_(2 * b + 1, 2 * b) = 1;
    }
    gram_(6, 6) = -order_;
}

Vec7 KummerLattice::basis(int i) {
    Vec7 v = Vec7::Zero();
    v(i) = 1;
    return v;
}

Vec7 KummerLattice::e(int i) { return basis(2 * (i - 1)); }
Vec7 KummerLattice::f(int i) { return basis(2 * (i - 1) + 1); }
Vec7 KummerLattice::delta() { return basis(6); }

Int inner(const KummerLattice& L, const Vec7& v, const Vec7& w) {
    Wide acc = 0;
    for (int b = 0; b < 3; ++b) {
        acc = wide_add(acc, wide_mul(v(2 * b), w(2 * b + 1)));
        acc = wide_add(acc, wide_mul(v(2 * b + 1), w(2 * b)));
    }
    acc = wide_sub(acc, wide_mul(wide_mul(v(6), w(6)), L.discriminant_order()));
    return narrow(acc);
}

bool is_primitive(const Vec7& v) {
    Int g = 0;
    for (int i = 0; i < 7; ++i) g = std::gcd(g, v(i));
    return g == 1;
}

Int divisibility(const KummerLattice& L, const Vec7& v) {
    if (v.isZero()) throw std::domain_error("divisibility of the zero vector");
    // Pairings with the basis are the entries of Gram * v.
    Int g = 0;
    for (int i = 0; i < 7; ++i) g = std::gcd(g, inner(L, v, KummerLattice::basis(i)));
    return g;
}

OrbitInvariant orbit_invariant(const KummerLattice& L, const Vec7& v) {
    if (!is_primitive(v)) throw std::domain_error("orbit invariant requires a primitive vector");
    const Int square = inner(L, v, v);
    if (square == 0) throw std::domain_error("orbit invariant requires nonzero square");
    const Int div = divisibility(L, v);
    const Int order = L.discriminant_order();
    // [v / div] = a * (order / div) times the generator [delta / order],
    // where a is the delta-coordinate; div divides (v, delta) = -a * order,
    // and div | order, so the multiple is integral.
    const Wide prod = wide_mul(v(6), order / div);
    Int r = static_cast<Int>(((prod % order) + order) % order);
    r = std::min(r, order - r);
    const Rational q = mod_two(Rational(narrow(-wide_mul(r, r)), order));
    return {square, div, DiscriminantClass{r, q}};
}

bool is_isometry(const KummerLattice& L, const Mat7& m) {
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j)
            if (inner(L, m.col(i), m.col(j)) != L.gram()(i, j)) return false;
    return true;
}

IntegerIsometry::IntegerIsometry(const KummerLattice& L, const Mat7& m) : m_(m) {
    if (!is_isometry(L, m))
        throw std::domain_error("matrix does not preserve the bilinear form");
}

Int determinant(const Mat7& m) {
    // Bareiss fraction-free elimination; every division is exact.
    Wide a[7][7];
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) a[i][j] = m(i, j);
    int sign = 1;
    Wide prev = 1;
    for (int k = 0; k < 6; ++k) {
        if (a[k][k] == 0) {
            int r = k + 1;
            while (r < 7 && a[r][k] == 0) ++r;
            if (r == 7) return 0;
            for (int j = k; j < 7; ++j) std::swap(a[k][j], a[r][j]);
            sign = -sign;
        }
        for (int i = k + 1; i < 7; ++i)
            for (int j = k + 1; j < 7; ++j)
                a[i][j] = wide_sub(wide_mul(a[k][k], a[i][j]),
                                   wide_mul(a[i][k], a[k][j])) / prev;
        prev = a[k][k];
    }
    return sign * narrow(a[6][6]);
}

namespace {

Vec7 apply(const Mat7& m, const Vec7& v) {
    Vec7 out;
    for (int i = 0; i < 7; ++i) {
        Wide acc = 0;
        for (int j = 0; j < 7; ++j) acc = wide_add(acc, wide_mul(m(i, j), v(j)));
        out(i) = narrow(acc);
    }
    return out;
}

}  // namespace

int orientation_sign(const KummerLattice& L, const IntegerIsometry& g) {
    Vec7 p[3];
    for (int i = 1; i <= 3; ++i) p[i - 1] = KummerLattice::e(i) + KummerLattice::f(i);
    Wide b[3][3];
    for (int i = 0; i < 3; ++i) {
        const Vec7 gp = apply(g.matrix(), p[i]);
        for (int j = 0; j < 3; ++j) b[i][j] = inner(L, gp, p[j]);
    }
    const Wide det = wide_sub(
        wide_add(wide_mul(b[0][0], wide_sub(wide_mul(b[1][1], b[2][2]), wide_mul(b[1][2], b[2][1]))),
                 wide_mul(b[0][2], wide_sub(wide_mul(b[1][0], b[2][1]), wide_mul(b[1][1], b[2][0])))),
        wide_mul(b[0][1], wide_sub(wide_mul(b[1][0], b[2][2]), wide_mul(b[1][2], b[2][0]))));
    if (det == 0)
        throw std::logic_error("orientation: isometry degenerate on the positive 3-space");
    return det > 0 ? 1 : -1;
}

DiscriminantAction discriminant_action(const KummerLattice& L, const IntegerIsometry& g) {
    const Int order = L.discriminant_order();
    const Vec7 image = g.matrix().col(6);  // image of delta
    // div(delta) = order, so every pairing of the image with the lattice is
    // divisible by order; the U-block coordinates are such pairings.
    for (int i = 0; i < 6; ++i)
        if (image(i) % order != 0)
            throw std::logic_error("discriminant action: image of delta is not divisible");
    const Int a = mod_floor(image(6), order);
    if (a == 1) return DiscriminantAction::plus_id;
    if (a == order - 1) return DiscriminantAction::minus_id;
    return DiscriminantAction::other;
}

bool in_w(const KummerLattice& L, const IntegerIsometry& g) {
    return orientation_sign(L, g) == 1 &&
           discriminant_action(L, g) != DiscriminantAction::other;
}

int chi(const KummerLattice& L, const IntegerIsometry& g) {
    if (!in_w(L, g)) throw std::domain_error("chi is defined only on W");
    return discriminant_action(L, g) == DiscriminantAction::plus_id ? 1 : -1;
}

bool is_monodromy(const KummerLattice& L, const Mat7& m) {
    if (!is_isometry(L, m)) return false;
    const IntegerIsometry g(L, m);
    if (!in_w(L, g)) return false;
    return determinant(m) * chi(L, g) == 1;
}

IntegerIsometry reflection(const KummerLattice& L, const Vec7& u) {
    const Int s = inner(L, u, u);
    if (s != 2 && s != -2)
        throw std::domain_error("reflection requires a vector of square 2 or -2");
    Mat7 m;
    for (int j = 0; j < 7; ++j) {
        const Int pairing = inner(L, KummerLattice::basis(j), u);
        for (int i = 0; i < 7; ++i) {
            const Wide base = (s == -2 ? (i == j) : -(i == j));
            m(i, j) = narrow(wide_add(base, wide_mul(pairing, u(i))));
        }
    }
    return IntegerIsometry(L, m);
}

IntegerIsometry compose(const KummerLattice& L, const IntegerIsometry& a,
                        const IntegerIsometry& b) {
    Mat7 m;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            Wide acc = 0;
            for (int k = 0; k < 7; ++k)
                acc = wide_add(acc, wide_mul(a.matrix()(i, k), b.matrix()(k, j)));
            m(i, j) = narrow(acc);
        }
    return IntegerIsometry(L, m);
}

IntegerIsometry inverse(const KummerLattice& L, const IntegerIsometry& g) {
    // From M^T G M = G: M^{-1} = G^{-1} M^T G, and G^{-1} acts by swapping
    // each U pair and dividing the last row by -(2n+2).
    const Int order = L.discriminant_order();
    const Mat7& m = g.matrix();
    Mat7 tg;  // M^T G
    for (int i = 0; i < 7; ++i) {
        for (int b = 0; b < 3; ++b) {
            tg(i, 2 * b) = m(2 * b + 1, i);
            tg(i, 2 * b + 1) = m(2 * b, i);
        }
        tg(i, 6) = narrow(wide_mul(-order, m(6, i)));
    }
    Mat7 inv;
    for (int b = 0; b < 3; ++b) {
        inv.row(2 * b) = tg.row(2 * b + 1);
        inv.row(2 * b + 1) = tg.row(2 * b);
    }
    for (int j = 0; j < 7; ++j) {
        if (tg(6, j) % order != 0)
            throw std::logic_error("inverse: delta row is not divisible");
        inv(6, j) = -(tg(6, j) / order);
    }
    return IntegerIsometry(L, inv);
}

}  // namespace kummer
