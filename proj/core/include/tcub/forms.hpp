#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tcub/field.hpp"
#include "tcub/mat.hpp"

namespace tcub {

// Binary form of degree m in {1,...,4}, stored in B_m coordinates
// (z_0,...,z_m):  the basis vector b_i is (-1)^i C(m,i) Y^{m-i} X^i, so e.g.
// for m = 4 the form is z0 Y^4 - 4 z1 Y^3X + 6 z2 Y^2X^2 - 4 z3 YX^3 + z4 X^4.
class BinaryForm {
public:
    BinaryForm(int degree, std::span<const Fq> coords);

    int degree() const { return deg_; }
    const Field& field() const { return z_[0].field(); }
    const Field* field_ptr() const { return z_[0].field_ptr(); }
    Fq operator[](int i) const { return z_[size_t(i)]; }
    Fq& operator[](int i) { return z_[size_t(i)]; }
    std::span<const Fq> coords() const { return {z_.data(), size_t(deg_ + 1)}; }
    bool is_zero() const;

    // monomial coefficients c_i of Y^{m-i} X^i, low i first
    std::vector<Fq> to_monomials() const;
    static BinaryForm from_monomials(std::span<const Fq> mono);

    // value at the point (X,Y) = (s,t)
    Fq eval(Fq s, Fq t) const;

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.deg_ == b.deg_ && a.coords_equal(b);
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    BinaryForm operator*(Fq s) const;
    BinaryForm operator+(const BinaryForm& o) const;

    // projective normalization: first nonzero coordinate scaled to 1
    BinaryForm normalized() const;

private:
    bool coords_equal(const BinaryForm& b) const;
    int deg_;
    std::array<Fq, 5> z_;
};

// (Xt - Ys)^m
BinaryForm linear_power(Fq s, Fq t, int m);
// product of forms (degrees add, capped at 4)
BinaryForm mul_forms(const BinaryForm& a, const BinaryForm& b);

struct GL2 {
    Fq a, b, c, d;
    Fq det() const { return a * d - b * c; }
    GL2 inverse() const;
    static GL2 identity(const Field& f);
    friend GL2 operator*(const GL2& x, const GL2& y) {
        return GL2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                   x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

// matrix of Omega_m in the B_m basis
Mat<2> omega_matrix_1(const Field& f);
Mat<3> omega_matrix_2(const Field& f);
Mat<4> omega_matrix_3(const Field& f);
Mat<5> omega_matrix_4(const Field& f);

// matrix g_m of the action on V_m w.r.t. B_m (includes the det^-m factor)
Mat<2> action_matrix_1(const GL2& g);
Mat<3> action_matrix_2(const GL2& g);
Mat<4> action_matrix_3(const GL2& g);
Mat<5> action_matrix_4(const GL2& g);

// (g.f)(X,Y) = det(g)^-m f(dX - bY, aY - cX), by direct substitution
BinaryForm act_substitution(const GL2& g, const BinaryForm& f);
// same, by the explicit matrix g_m
BinaryForm act_matrix(const GL2& g, const BinaryForm& f);
// checked action: both routes computed, must agree
BinaryForm act(const GL2& g, const BinaryForm& f);

// f^T A_m h; degrees must match
Fq omega_pair(const BinaryForm& f, const BinaryForm& h);

// apolar invariant (z0 z4 - 4 z1 z3 + 3 z2^2)/3
Fq inv_I(const BinaryForm& quartic);
// catalecticant, det(M_phi)/4; cross-checked against the Hankel determinant
Fq inv_J(const BinaryForm& quartic);
// I^3 - J^2
Fq discriminant(const BinaryForm& quartic);

Mat<3> m_phi(const BinaryForm& quartic);

// absolute invariant, defined by j * (I^3 - J^2) = 1728 I^3; requires disc != 0
Fq j_invariant(const BinaryForm& quartic);

// j of a cross-ratio; lambda in {0,1} rejected.  Satisfies
// 1 - 1728/j = ((l+1)(l-2)(l-1/2))^2 / (l^2-l+1)^3, with the harmonic values
// {-1, 2, 1/2} mapping to 1728 and {-w, -w^2} mapping to 0.
Fq j_of_lambda(Fq lambda);

enum class FactorType { F4, F2, F1, F4Prime, F2Prime };
const char* to_string(FactorType t);

enum class CubicPattern {
    Cube,
    SquareTimesLinear,
    ThreeRational,
    OneRationalPlusQuadratic,
    IrreducibleCubic,
};
const char* to_string(CubicPattern p);

// rational projective roots with multiplicities, plus the degree of the
// rational-root-free cofactor; scans all q+1 points of PG(1,q)
struct RootData {
    std::vector<std::pair<std::array<Fq, 2>, int>> roots;
    int remaining_degree;
};
RootData rational_roots(const BinaryForm& f);

// factorization type over F_q of a squarefree quartic (disc != 0)
FactorType factor_type(const BinaryForm& quartic);
// factor pattern of a nonzero cubic form
CubicPattern cubic_pattern(const BinaryForm& cubic);

} // namespace tcub
