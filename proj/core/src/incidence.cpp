#include "tcub/incidence.hpp"

#include <algorithm>

#include "tcub/elliptic.hpp"

namespace tcub {

const char* to_string(NongenericClass c) {
    switch (c) {
    case NongenericClass::Secant: return "secant";
    case NongenericClass::RealAxis: return "real_axis";
    case NongenericClass::Tangent: return "tangent";
    case NongenericClass::ImaginarySecant: return "imaginary_secant";
    case NongenericClass::ImaginaryAxis: return "imaginary_axis";
    case NongenericClass::OsculatingUnisecant: return "osculating_unisecant";
    case NongenericClass::Unisecant51: return "unisecant_51";
    case NongenericClass::External51: return "external_51";
    case NongenericClass::Unisecant52: return "unisecant_52";
    case NongenericClass::External52: return "external_52";
    }
    return "?";
}

BinaryForm h_form(const Line& l, Fq s, Fq t) {
    if (s.is_zero() && t.is_zero()) fail(Errc::ZeroDirection, "(s,t) must be a point of PG(1,q)");
    if (line_nature(l).in_osculating)
        fail(Errc::OsculatingLine, "h is undefined for lines inside an osculating plane");
    const Field& f = l.field();
    std::array<Fq, 3> v{s * s, s * t, t * t};
    auto al = m_z(l) * v; // h = al0 X^2 + al1 XY + al2 Y^2
    std::array<Fq, 3> b2{al[2], al[1] / f.el(-2), al[0]};
    return BinaryForm(2, b2);
}

BinaryForm d_quartic_raw(std::span<const Fq> z) {
    const Field& f = z[0].field();
    std::array<Fq, 5> d{
        -z[5] * z[0] + (z[1] * z[1] - z[0] * z[2]),
        -z[5] * z[1] + (z[1] * z[2] - z[0] * z[3]) / f.el(2),
        -z[5] * z[2] + (f.el(3) * z[2] * z[2] - z[0] * z[4] - f.el(2) * z[1] * z[3]) / f.el(6),
        -z[5] * z[3] + (z[2] * z[3] - z[1] * z[4]) / f.el(2),
        -z[5] * z[4] + (z[3] * z[3] - z[2] * z[4]),
    };
    return BinaryForm(4, d);
}

BinaryForm d_quartic(const Line& l) {
    if (line_nature(l).in_osculating)
        fail(Errc::OsculatingLine, "D_L is undefined for lines inside an osculating plane");
    const Field& f = l.field();
    Mat<3> M = m_z(l);
    Mat<3> a2inv = Mat<3>::zero(f);
    a2inv.a[0][2] = a2inv.a[2][0] = f.one();
    a2inv.a[1][1] = f.frac(-1, 2);
    Mat<3> N = M * a2inv * M;
    Fq mh = f.frac(-1, 2);
    // -1/2 (X^2 XY Y^2) N (X^2 XY Y^2)^T, collected by monomial
    std::array<Fq, 5> mono{
        mh * N.a[2][2],                                  // Y^4
        mh * f.el(2) * N.a[1][2],                        // Y^3 X
        mh * (f.el(2) * N.a[0][2] + N.a[1][1]),          // Y^2 X^2
        mh * f.el(2) * N.a[0][1],                        // Y X^3
        mh * N.a[0][0],                                  // X^4
    };
    BinaryForm viaMatrix = BinaryForm::from_monomials(mono);
    BinaryForm viaExpansion = d_quartic_raw(l.z());
    if (viaMatrix != viaExpansion) fail(Errc::SingularForm, "internal: D_L routes disagree");
    return viaMatrix;
}

int eta(const Line& l) {
    if (!line_nature(l).generic) fail(Errc::NonGenericLine, "eta is defined for generic lines");
    switch (factor_type(l.quartic())) {
    case FactorType::F4: return 4;
    case FactorType::F2: return 2;
    case FactorType::F1: return 1;
    default: return 0;
    }
}

uint64_t nu(const Line& l) {
    if (!line_nature(l).generic) fail(Errc::NonGenericLine, "nu is defined for generic lines");
    const Field& f = l.field();
    BinaryForm D = d_quartic(l);
    uint64_t count = 0;
    for (const auto& [s, t] : pg1_points(f)) {
        Fq v = D.eval(s, t);
        if (!v.is_zero() && f.is_square(v)) ++count;
    }
    return count;
}

IncidenceProfile decompose_generic(const Line& l) {
    if (!line_nature(l).generic)
        fail(Errc::NonGenericLine, "closed-form decomposition needs a generic line");
    uint64_t q = l.field().q();
    uint64_t et = uint64_t(eta(l));
    uint64_t nv = nu(l);
    if (nv < et || nv + et > q + 1 || (nv - et) % 3 || (2 * nv + et) % 3)
        fail(Errc::IntegralityViolation, "nu/eta do not satisfy the generic-count identities");
    IncidenceProfile out;
    out.counts = {0, et, (nv - et) / 3, q + 1 - nv - et, (2 * nv + et) / 3};
    out.eta = int(et);
    out.nu = nv;
    // elliptic route: same counts through #E
    EllipticCoeffs ec = curve_coeffs(l);
    uint64_t ne = count_points(ec.g2, ec.g3);
    out.e_count = ne;
    if (ne < 3 * et || ne % 3 || (ne + et) % 2 || (ne - 3 * et) % 6)
        fail(Errc::IntegralityViolation, "elliptic count violates the divisibility identities");
    std::array<uint64_t, 5> viaE{0, et, (ne - 3 * et) / 6, q + 1 - (ne + et) / 2, ne / 3};
    if (viaE != out.counts)
        fail(Errc::IntegralityViolation, "nu route and elliptic route disagree");
    return out;
}

IncidenceProfile brute_decompose(const Line& l) {
    const Field& f = l.field();
    auto [u, v] = l.pencil_basis();
    IncidenceProfile out;
    for (const auto& [mu_, nu_] : pg1_points(f)) {
        BinaryForm pt = u * mu_ + v * nu_;
        out.counts[size_t(point_classify(PointP3(pt)) - 1)]++;
    }
    if (!line_nature(l).in_osculating) {
        IncidenceProfile::Diagnostics d;
        for (const auto& [s, t] : pg1_points(f)) {
            BinaryForm cubic = mul_forms(linear_power(s, t, 1), h_form(l, s, t));
            switch (cubic_pattern(cubic)) {
            case CubicPattern::Cube: d.a1++; break;
            case CubicPattern::SquareTimesLinear: d.a2++; break;
            case CubicPattern::ThreeRational: d.a33++; break;
            case CubicPattern::OneRationalPlusQuadratic: d.a31++; break;
            case CubicPattern::IrreducibleCubic:
                fail(Errc::UnclassifiableLine, "internal: osculating cubic has a rational factor");
            }
        }
        if (out.counts[0] != d.a1 || 2 * out.counts[1] != d.a2 || 3 * out.counts[2] != d.a33 ||
            out.counts[3] != d.a31)
            fail(Errc::IntegralityViolation, "internal: osculating diagnostics disagree with counts");
        out.diag = d;
    }
    return out;
}

NongenericClass classify_nongeneric(const Line& l) {
    BinaryForm phi = l.quartic();
    if (!discriminant(phi).is_zero())
        fail(Errc::NonGenericLine, "line is generic");
    RootData rd = rational_roots(phi);
    std::vector<int> mults;
    for (auto& [pt, m] : rd.roots) mults.push_back(m);
    std::sort(mults.rbegin(), mults.rend());
    bool meets = line_nature(l).meets_cubic; // J = -z5^3
    if (mults == std::vector<int>{4}) return NongenericClass::Tangent;
    if (mults == std::vector<int>{3, 1}) return NongenericClass::OsculatingUnisecant;
    if (mults == std::vector<int>{2, 2})
        return meets ? NongenericClass::Secant : NongenericClass::RealAxis;
    if (mults.empty() && rd.remaining_degree == 4)
        return meets ? NongenericClass::ImaginarySecant : NongenericClass::ImaginaryAxis;
    if (mults == std::vector<int>{2} && rd.remaining_degree == 2)
        return meets ? NongenericClass::Unisecant51 : NongenericClass::External51;
    if (mults == std::vector<int>{2, 1, 1})
        return meets ? NongenericClass::Unisecant52 : NongenericClass::External52;
    fail(Errc::UnclassifiableLine, "degenerate quartic matches none of the ten classes");
}

std::array<uint64_t, 5> nongeneric_table_row(NongenericClass c, uint64_t q, int mu) {
    uint64_t m = uint64_t(mu + 1) / 2; // 1 if mu=+1 else 0
    switch (c) {
    case NongenericClass::Secant:
        return {2, 0, m * (q - 1) / 3, (1 - m) * (q - 1), 2 * m * (q - 1) / 3};
    case NongenericClass::RealAxis: return {0, 2, q - 1, 0, 0};
    case NongenericClass::Tangent: return {1, q, 0, 0, 0};
    case NongenericClass::ImaginarySecant:
        return {0, 0, (1 - m) * (q + 1) / 3, m * (q + 1), 2 * (1 - m) * (q + 1) / 3};
    case NongenericClass::ImaginaryAxis: return {0, 0, 0, q + 1, 0};
    case NongenericClass::OsculatingUnisecant: return {1, 1, (q - 1) / 2, (q - 1) / 2, 0};
    case NongenericClass::Unisecant51:
        return {1, 0, uint64_t(int64_t(q) - mu) / 6, uint64_t(int64_t(q) + mu) / 2,
                uint64_t(int64_t(q) - mu) / 3};
    case NongenericClass::External51: return {0, 1, (q - 1) / 2, (q + 1) / 2, 0};
    case NongenericClass::Unisecant52:
        return {1, 2, uint64_t(int64_t(q) - mu - 6) / 6, uint64_t(int64_t(q) + mu - 2) / 2,
                uint64_t(int64_t(q) - mu) / 3};
    case NongenericClass::External52: return {0, 3, (q - 3) / 2, (q - 1) / 2, 0};
    }
    fail(Errc::UnclassifiableLine, "unreachable");
}

IncidenceProfile decompose_nongeneric(const Line& l) {
    NongenericClass c = classify_nongeneric(l);
    IncidenceProfile out;
    out.counts = nongeneric_table_row(c, l.field().q(), l.field().mu());
    return out;
}

IncidenceProfile decompose(const Line& l) {
    return line_nature(l).generic ? decompose_generic(l) : decompose_nongeneric(l);
}

std::array<uint64_t, 5> planes_through_line_decompose(const Line& l) {
    return decompose(l.dual()).counts;
}

} // namespace tcub
