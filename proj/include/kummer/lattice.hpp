#pragma once

#include <Eigen/Core>

#include "kummer/arith.hpp"
#include "kummer/rational.hpp"

namespace kummer {

using Vec7 = Eigen::Matrix<Int, 7, 1>;
using Mat7 = Eigen::Matrix<Int, 7, 7>;

// The rank-7 even lattice 3U + <-2-2n> of signature (3, 4), in the fixed
// basis (e1, f1, e2, f2, e3, f3, delta) with (ei, fi) = 1 and
// (delta, delta) = -2-2n. Requires n >= 2.
class KummerLattice {
public:
    explicit KummerLattice(Int n);

    Int n() const { return n_; }
    // Order of the discriminant group, which is cyclic generated by
    // [delta / (2n+2)].
    Int discriminant_order() const { return order_; }
    const Mat7& gram() const { return gram_; }

    static Vec7 basis(int i);        // i in 0..6
    static Vec7 e(int i);            // i in 1..3
    static Vec7 f(int i);            // i in 1..3
    static Vec7 delta();

private:
    Int n_, order_;
    Mat7 gram_;
};

Int inner(const KummerLattice& L, const Vec7& v, const Vec7& w);

bool is_primitive(const Vec7& v);

// gcd of the pairings (v, x) over x in the lattice; v must be nonzero.
Int divisibility(const KummerLattice& L, const Vec7& v);

// Element of the discriminant group, named by the normalised residue
// r in [0, n+1] of the generator multiple (classes r and 2n+2-r are
// swapped by -id and carry the same quadratic form value).
struct DiscriminantClass {
    Int residue;
    Rational q_value;  // value of the discriminant form in [0, 2)
    friend bool operator==(const DiscriminantClass&, const DiscriminantClass&) = default;
};

// Complete invariant of the monodromy orbit of a primitive vector of
// nonzero square: the square, the divisibility, and the class of
// v/div(v) in the discriminant group.
struct OrbitInvariant {
    Int square;
    Int div;
    DiscriminantClass disc;
    friend bool operator==(const OrbitInvariant&, const OrbitInvariant&) = default;
};

OrbitInvariant orbit_invariant(const KummerLattice& L, const Vec7& v);

bool is_isometry(const KummerLattice& L, const Mat7& m);

// Integral matrix checked to preserve the bilinear form.
class IntegerIsometry {
public:
    IntegerIsometry(const KummerLattice& L, const Mat7& m);
    const Mat7& matrix() const { return m_; }

private:
    Mat7 m_;
};

// Exact determinant by fraction-free elimination; -1 or +1 for isometries.
Int determinant(const Mat7& m);

// Sign of the action on a fixed positive-definite 3-space, spanned by
// e1+f1, e2+f2, e3+f3. A positive-definite 3-space is maximal for
// signature (3, 4), so this detects orientation reversal.
int orientation_sign(const KummerLattice& L, const IntegerIsometry& g);

enum class DiscriminantAction { plus_id, minus_id, other };

DiscriminantAction discriminant_action(const KummerLattice& L, const IntegerIsometry& g);

// Orientation-preserving isometries acting as +-id on the discriminant
// group.
bool in_w(const KummerLattice& L, const IntegerIsometry& g);

// Sign of the discriminant action; defined only on W.
int chi(const KummerLattice& L, const IntegerIsometry& g);

// Monodromy = elements of W with det * chi = 1. False for any matrix
// that is not an isometry.
bool is_monodromy(const KummerLattice& L, const Mat7& m);

// Reflection in a vector of square -2 (x -> x + (x,u)u) or square +2
// (x -> -x + (x,u)u). Both preserve orientation; the first has
// det = -1, chi = +1, the second det = +1, chi = -1.
IntegerIsometry reflection(const KummerLattice& L, const Vec7& u);

IntegerIsometry compose(const KummerLattice& L, const IntegerIsometry& a,
                        const IntegerIsometry& b);

IntegerIsometry inverse(const KummerLattice& L, const IntegerIsometry& g);

}  // namespace kummer
