#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tcub/forms.hpp"

namespace tcub {

// Point of PG(3,q) = P(V_3): a nonzero cubic form up to scalar, stored with
// the first nonzero coordinate normalized to 1.
class PointP3 {
public:
    explicit PointP3(const BinaryForm& cubic);
    const BinaryForm& cubic() const { return f_; }
    friend bool operator==(const PointP3& a, const PointP3& b) { return a.f_ == b.f_; }

private:
    BinaryForm f_;
};

// orbit index 1..5 of a point, keyed by the factor pattern of its cubic
int point_classify(const PointP3& p);

// A plane of PG(3,q), held as its polar-dual point under Omega_3.
class Plane {
public:
    explicit Plane(PointP3 dual_point) : dual_(std::move(dual_point)) {}
    const PointP3& dual_point() const { return dual_; }

private:
    PointP3 dual_;
};

int plane_classify(const Plane& pl);

struct LineNature {
    bool generic;
    bool meets_cubic;     // J(phi) = -z5^3 (meets C over the closure)
    bool in_osculating;   // J(phi) = +z5^3
};

// A line of PG(3,q): a projective 6-tuple (z0,...,z5) in the E5 basis on the
// Klein quadric, canonically scaled (first nonzero coordinate = 1).
class Line {
public:
    // validates the Klein equation I(phi) = z5^2 (fail-fast)
    static Line from_coords(std::span<const Fq> z);
    // from two independent cubic forms via Plucker coordinates
    static Line from_pencil(const BinaryForm& u, const BinaryForm& v);

    const std::array<Fq, 6>& z() const { return z_; }
    Fq operator[](int i) const { return z_[size_t(i)]; }
    const Field& field() const { return z_[0].field(); }

    // (p01, p02, p03, p12, p13, p23)
    std::array<Fq, 6> plucker() const;
    // the associated quartic (z0..z4 in B_4) and its square root z5 of I
    BinaryForm quartic() const;
    Fq z5() const { return z_[5]; }
    // polar dual: identical z0..z4, negated z5
    Line dual() const;
    // a spanning pair of cubic forms, reconstructed from the Plucker matrix
    std::pair<BinaryForm, BinaryForm> pencil_basis() const;

    friend bool operator==(const Line& a, const Line& b) { return a.z_ == b.z_; }
    friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }

private:
    Line() = default;
    std::array<Fq, 6> z_;
};

LineNature line_nature(const Line& l);

// Gram matrix z5 A_2 + M_phi of the bilinear form attached to the line
Mat<3> m_z(const Line& l);

// block matrix det(g)^-1 diag(g_4, det(g)^-2) acting on E5 coordinates
Mat<6> g5_tilde(const GL2& g);

// action on lines through g5_tilde (re-canonicalized); in debug builds,
// cross-checked against the pencil route
Line act_on_line(const GL2& g, const Line& l);

Plane polar_dual_point(const PointP3& p);

// enumeration helpers (canonical representatives, deterministic order)
std::vector<std::array<Fq, 2>> pg1_points(const Field& f);
std::vector<PointP3> pg3_points(const Field& f);
std::vector<Line> klein_points(const Field& f);

} // namespace tcub
