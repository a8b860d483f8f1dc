#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "kummer/arith.hpp"

namespace kummer {

using Vec2 = Eigen::Matrix<Int, 2, 1>;
using Mat2 = Eigen::Matrix<Int, 2, 2>;

// Number of orbits of primitive embeddings of the polarised sublattice,
// 2^(rho(n+1) - 1).
Int count_embedding_orbit_classes(Int n);

// Number of connected components of the marked polarised moduli space,
// 2^(rho(n+1) + 1). Always divisible by 4.
Int count_marked_components(Int n);

// The defining congruence: 2d + c^2 (2n+2) = 0 (mod 2 t^2).
bool isotropy_holds(Int n, Int d, Int t, Int c);

// Equivalent reduced form: g1 (d1 + c^2 n1) = 0 (mod 2 t1).
bool congruence_eq2_holds(Int n, Int d, Int t, Int c);

// Component count by direct solution counting: residues c mod t coprime
// to t satisfying the congruence, with c and -c identified when t > 2.
Int count_components_oracle(Int n, Int d, Int t);

// The surviving representatives, each the smaller element of its pair
// {c, t - c}, in increasing order.
std::vector<Int> component_class_representatives(Int n, Int d, Int t);

enum class Branch { T1a, T1b, T1c, T2, T3a, T3b, T3c, T3d, ZERO };

std::string_view branch_label(Branch b);

struct CountResult {
    Int count;
    Branch branch;
    friend bool operator==(const CountResult&, const CountResult&) = default;
};

// Component count in closed form, together with the case that produced
// it. Counts of the t > 2 cases are w_plus(t1) phi(w_minus(t1)) 2^(rho-1)
// with rho taken at t1 (cases T1a, T1b, T1c) or t1/2 (case T2); the halved
// power is evaluated exactly and integrality is checked.
CountResult count_components_closed_form(Int n, Int d, Int t);

// Positive-definite rank-2 lattice T with a marked vector l of square 2d,
// presented in the basis (x, s) where x = (l + c s)/t and s is primitive
// isotropic-free of square 2n+2. det gram = 4 d (n+1) / t^2.
struct PairClass {
    Int n, d, t, c;
    Mat2 gram;
    Vec2 l;  // coordinates of the marked vector: (t, -c)
};

PairClass build_pair_lattice(Int n, Int d, Int t, Int c);

Int inner2(const Mat2& gram, const Vec2& v, const Vec2& w);
Int det2(const Mat2& gram);

// All vectors of the given positive norm in a positive-definite rank-2
// lattice, in lexicographic coordinate order.
std::vector<Vec2> vectors_of_norm(const Mat2& gram, Int norm);

// Whether some isometry of the two positive-definite lattices carries the
// first marked vector to the second. Decided completely by enumerating
// basis images of matching Gram matrix.
bool marked_pairs_isometric(const Mat2& gram_a, const Vec2& l_a,
                            const Mat2& gram_b, const Vec2& l_b);

bool pairs_isometric(const PairClass& a, const PairClass& b);

// One pair lattice per component class, in increasing order of the
// representative c.
std::vector<PairClass> enumerate_component_classes(Int n, Int d, Int t);

// Primitive generator of the rank-1 sublattice orthogonal to l; sign is
// normalised so the first nonzero coordinate is positive.
Vec2 orthogonal_complement_generator(const Mat2& gram, const Vec2& l);

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace kummer
