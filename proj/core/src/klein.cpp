#include "tcub/klein.hpp"

namespace tcub {

PointP3::PointP3(const BinaryForm& cubic) : f_(cubic.normalized()) {
    if (cubic.degree() != 3) fail(Errc::DegreeMismatch, "points of PG(3,q) are cubic forms");
}

int point_classify(const PointP3& p) {
    switch (cubic_pattern(p.cubic())) {
    case CubicPattern::Cube: return 1;
    case CubicPattern::SquareTimesLinear: return 2;
    case CubicPattern::ThreeRational: return 3;
    case CubicPattern::OneRationalPlusQuadratic: return 4;
    case CubicPattern::IrreducibleCubic: return 5;
    }
    fail(Errc::UnclassifiableLine, "unreachable");
}

int plane_classify(const Plane& pl) { return point_classify(pl.dual_point()); }

Plane polar_dual_point(const PointP3& p) { return Plane(p); }

Line Line::from_coords(std::span<const Fq> z) {
    if (z.size() != 6) fail(Errc::DegreeMismatch, "a line needs 6 coordinates");
    Line l;
    int lead = -1;
    for (int i = 0; i < 6; ++i) {
        l.z_[size_t(i)] = z[size_t(i)];
        if (lead < 0 && !z[size_t(i)].is_zero()) lead = i;
    }
    if (lead < 0) fail(Errc::ZeroForm, "zero 6-tuple is not a line");
    Fq s = l.z_[size_t(lead)].inv();
    for (auto& v : l.z_) v = v * s;
    const Field& f = l.z_[0].field();
    Fq lhs = (l.z_[0] * l.z_[4] - f.el(4) * l.z_[1] * l.z_[3] + f.el(3) * l.z_[2] * l.z_[2]) / f.el(3);
    if (lhs != l.z_[5] * l.z_[5])
        fail(Errc::NotOnQuadric, "coordinates violate the Klein quadric equation");
    return l;
}

Line Line::from_pencil(const BinaryForm& u, const BinaryForm& v) {
    if (u.degree() != 3 || v.degree() != 3)
        fail(Errc::DegreeMismatch, "a pencil is spanned by cubic forms");
    const Field& f = u.field();
    Fq p[4][4];
    bool nonzero = false;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            p[i][j] = u[i] * v[j] - u[j] * v[i];
            if (!p[i][j].is_zero()) nonzero = true;
        }
    if (!nonzero) fail(Errc::DependentForms, "pencil generators are linearly dependent");
    std::array<Fq, 6> z;
    z[0] = p[0][1];
    z[1] = p[0][2] / f.el(2);
    z[3] = p[1][3] / f.el(2);
    z[4] = p[2][3];
    Fq third = p[0][3] / f.el(3);
    z[2] = (third + p[1][2]) / f.el(2);
    z[5] = (third - p[1][2]) / f.el(2);
    return from_coords(z);
}

std::array<Fq, 6> Line::plucker() const {
    const Field& f = field();
    return {z_[0], f.el(2) * z_[1], f.el(3) * (z_[2] + z_[5]),
            z_[2] - z_[5], f.el(2) * z_[3], z_[4]};
}

BinaryForm Line::quartic() const {
    return BinaryForm(4, std::span<const Fq>(z_.data(), 5));
}

Line Line::dual() const {
    std::array<Fq, 6> z = z_;
    z[5] = -z[5];
    return from_coords(z);
}

std::pair<BinaryForm, BinaryForm> Line::pencil_basis() const {
    // rows of the antisymmetric Plucker matrix span the line
    const Field& f = field();
    auto p = plucker();
    Fq P[4][4];
    for (auto& row : P)
        for (auto& e : row) e = f.zero();
    int idx = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            P[i][j] = p[size_t(idx)];
            P[j][i] = -p[size_t(idx)];
            ++idx;
        }
    int first = -1;
    for (int i = 0; i < 4 && first < 0; ++i)
        for (int j = 0; j < 4; ++j)
            if (!P[i][j].is_zero()) {
                first = i;
                break;
            }
    std::vector<Fq> u(P[first], P[first] + 4);
    for (int r = first + 1; r < 4; ++r) {
        // independent iff some 2x2 minor with u is nonzero
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!(u[size_t(i)] * P[r][j] - u[size_t(j)] * P[r][i]).is_zero()) {
                    std::vector<Fq> v(P[r], P[r] + 4);
                    return {BinaryForm(3, u), BinaryForm(3, v)};
                }
    }
    fail(Errc::DependentForms, "internal: Plucker matrix has rank < 2");
}

LineNature line_nature(const Line& l) {
    BinaryForm phi = l.quartic();
    Fq J = inv_J(phi);
    Fq z53 = l.z5().pow(3);
    return LineNature{!discriminant(phi).is_zero(), J == -z53, J == z53};
}

Mat<3> m_z(const Line& l) {
    const Field& f = l.field();
    Mat<3> m = m_phi(l.quartic());
    Mat<3> a2 = omega_matrix_2(f);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.a[size_t(i)][size_t(j)] += l.z5() * a2.a[size_t(i)][size_t(j)];
    return m;
}

Mat<6> g5_tilde(const GL2& g) {
    const Field& f = g.a.field();
    Fq dinv = g.det().inv();
    if (g.det().is_zero()) fail(Errc::SingularMatrix, "group element must be invertible");
    Mat<5> m4 = action_matrix_4(g);
    Mat<6> m = Mat<6>::zero(f);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m.a[size_t(i)][size_t(j)] = dinv * m4.a[size_t(i)][size_t(j)];
    m.a[5][5] = dinv.pow(3);
    return m;
}

Line act_on_line(const GL2& g, const Line& l) {
    auto r = g5_tilde(g) * l.z();
    Line out = Line::from_coords(r);
#ifndef NDEBUG
    auto [u, v] = l.pencil_basis();
    Line viaPencil = Line::from_pencil(act_matrix(g, u), act_matrix(g, v));
    assert(out == viaPencil);
#endif
    return out;
}

std::vector<std::array<Fq, 2>> pg1_points(const Field& f) {
    std::vector<std::array<Fq, 2>> out;
    out.reserve(f.q() + 1);
    out.push_back({f.zero(), f.one()});
    for (uint64_t v = 0; v < f.q(); ++v) out.push_back({f.one(), f.from_index(v)});
    return out;
}

std::vector<PointP3> pg3_points(const Field& f) {
    std::vector<PointP3> out;
    uint64_t q = f.q();
    out.reserve(q * q * q + q * q + q + 1);
    std::array<Fq, 4> c;
    for (int lead = 0; lead < 4; ++lead) {
        for (int i = 0; i < lead; ++i) c[size_t(i)] = f.zero();
        c[size_t(lead)] = f.one();
        uint64_t free = 3 - uint64_t(lead);
        uint64_t total = 1;
        for (uint64_t i = 0; i < free; ++i) total *= q;
        for (uint64_t code = 0; code < total; ++code) {
            uint64_t rest = code;
            for (int i = lead + 1; i < 4; ++i) {
                c[size_t(i)] = f.from_index(rest % q);
                rest /= q;
            }
            out.push_back(PointP3(BinaryForm(3, c)));
        }
    }
    return out;
}

std::vector<Line> klein_points(const Field& f) {
    std::vector<Line> out;
    uint64_t q = f.q();
    out.reserve((q * q + 1) * (q * q + q + 1));
    std::array<Fq, 6> z;
    for (int lead = 0; lead < 6; ++lead) {
        for (int i = 0; i < lead; ++i) z[size_t(i)] = f.zero();
        z[size_t(lead)] = f.one();
        uint64_t free = 5 - uint64_t(lead);
        uint64_t total = 1;
        for (uint64_t i = 0; i < free; ++i) total *= q;
        for (uint64_t code = 0; code < total; ++code) {
            uint64_t rest = code;
            for (int i = lead + 1; i < 6; ++i) {
                z[size_t(i)] = f.from_index(rest % q);
                rest /= q;
            }
            Fq lhs = (z[0] * z[4] - f.el(4) * z[1] * z[3] + f.el(3) * z[2] * z[2]) / f.el(3);
            if (lhs == z[5] * z[5]) out.push_back(Line::from_coords(z));
        }
    }
    return out;
}

} // namespace tcub
