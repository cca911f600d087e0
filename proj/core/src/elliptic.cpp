#include "tcub/elliptic.hpp"

#include "tcub/incidence.hpp"

namespace tcub {

EllipticCoeffs curve_coeffs(const Line& l) {
    if (!line_nature(l).generic)
        fail(Errc::NonGenericLine, "the elliptic curve is attached to generic lines");
    const Field& f = l.field();
    BinaryForm phi = l.quartic();
    Fq I = inv_I(phi), J = inv_J(phi), z5 = l.z5();
    Fq g2 = f.el(3) * z5 * J + f.frac(15, 4) * I * I;
    Fq g3 = f.frac(-1, 8) * (f.el(11) * I.pow(3) + f.el(2) * J * J + f.el(14) * J * z5.pow(3));
    BinaryForm D = d_quartic(l);
    if (g2 != f.el(3) * inv_I(D) || g3 != inv_J(D))
        fail(Errc::SingularForm, "internal: g2/g3 routes disagree");
    return {g2, g3};
}

uint64_t count_points(Fq g2, Fq g3) {
    const Field& f = g2.field();
    // squarefree <=> g2^3 != 27 g3^2
    if (g2.pow(3) == f.el(27) * g3 * g3)
        fail(Errc::SingularCurve, "the cubic 4S^3 - g2 S - g3 has a repeated root");
    uint64_t count = 1; // point at infinity
    for (uint64_t v = 0; v < f.q(); ++v) {
        Fq s = f.from_index(v);
        Fq rhs = f.el(4) * s.pow(3) - g2 * s - g3;
        if (rhs.is_zero())
            count += 1;
        else if (f.is_square(rhs))
            count += 2;
    }
    return count;
}

ECPoint ec_neg(const ECPoint& p) {
    if (p.infinity) return p;
    return ECPoint{false, p.x, -p.y};
}

bool ec_on_curve(Fq g2, Fq g3, const ECPoint& p) {
    if (p.infinity) return true;
    const Field& f = g2.field();
    return p.y * p.y == f.el(4) * p.x.pow(3) - g2 * p.x - g3;
}

ECPoint ec_double(Fq g2, const ECPoint& p) {
    if (p.infinity) return p;
    const Field& f = g2.field();
    if (p.y.is_zero()) return ECPoint{}; // 2-torsion
    Fq m = (f.el(12) * p.x * p.x - g2) / (f.el(2) * p.y);
    Fq x3 = m * m / f.el(4) - f.el(2) * p.x;
    Fq y3 = -(p.y + m * (x3 - p.x));
    return ECPoint{false, x3, y3};
}

ECPoint ec_add(Fq g2, const ECPoint& p, const ECPoint& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    const Field& f = g2.field();
    if (p.x == q.x) {
        if (p.y == -q.y) return ECPoint{};
        return ec_double(g2, p);
    }
    Fq m = (q.y - p.y) / (q.x - p.x);
    Fq x3 = m * m / f.el(4) - p.x - q.x;
    Fq y3 = -(p.y + m * (x3 - p.x));
    return ECPoint{false, x3, y3};
}

ECPoint torsion_witness(const Line& l) {
    EllipticCoeffs c = curve_coeffs(l);
    const Field& f = l.field();
    BinaryForm phi = l.quartic();
    Fq I = inv_I(phi), J = inv_J(phi);
    ECPoint w{false, f.el(3) * I / f.el(4), (J - l.z5().pow(3)) / f.el(2)};
    if (w.y.is_zero())
        fail(Errc::OsculatingLine, "internal: witness with T = 0 would mean J = z5^3");
    if (!ec_on_curve(c.g2, c.g3, w))
        fail(Errc::SingularCurve, "internal: witness point not on the curve");
    if (ec_double(c.g2, w) != ec_neg(w))
        fail(Errc::SingularCurve, "internal: witness point is not 3-torsion");
    return w;
}

EllipticData elliptic_data(const Line& l) {
    EllipticCoeffs c = curve_coeffs(l);
    return EllipticData{c.g2, c.g3, count_points(c.g2, c.g3), torsion_witness(l)};
}

bool orbit_invariance_check(const Line& l, const GL2& g) {
    EllipticCoeffs a = curve_coeffs(l);
    EllipticCoeffs b = curve_coeffs(act_on_line(g, l));
    return count_points(a.g2, a.g3) == count_points(b.g2, b.g3);
}

} // namespace tcub
