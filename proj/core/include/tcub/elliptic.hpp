#pragma once

#include <cstdint>

#include "tcub/klein.hpp"

namespace tcub {

struct EllipticCoeffs {
    Fq g2, g3;
};

// g2(L) = 3 z5 J + 15/4 I^2 and g3(L) = -(11 I^3 + 2 J^2 + 14 J z5^3)/8 for
// the curve T^2 = 4S^3 - g2 S - g3; cross-checked against 3 I(D_L), J(D_L)
EllipticCoeffs curve_coeffs(const Line& l);

// number of projective points, 1 + sum over s of (1 + chi(4s^3 - g2 s - g3))
// with chi the quadratic character, chi(0) = 0; requires a squarefree cubic
uint64_t count_points(Fq g2, Fq g3);

// affine point or the point at infinity on T^2 = 4S^3 - g2 S - g3
struct ECPoint {
    bool infinity = true;
    Fq x, y;
    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        return a.infinity == b.infinity && (a.infinity || (a.x == b.x && a.y == b.y));
    }
};

ECPoint ec_neg(const ECPoint& p);
ECPoint ec_double(Fq g2, const ECPoint& p);
ECPoint ec_add(Fq g2, const ECPoint& p, const ECPoint& q);
bool ec_on_curve(Fq g2, Fq g3, const ECPoint& p);

// the flex point (3I/4, (J - z5^3)/2); asserted to lie on the curve and to be
// 3-torsion under the chord-tangent group law
ECPoint torsion_witness(const Line& l);

struct EllipticData {
    Fq g2, g3;
    uint64_t e_count = 0;
    ECPoint witness;
};
EllipticData elliptic_data(const Line& l);

// #E is an orbit invariant: equal counts for l and g.l
bool orbit_invariance_check(const Line& l, const GL2& g);

} // namespace tcub
