#include "tcub/forms.hpp"

#include <algorithm>

#include "tcub/poly.hpp"

namespace tcub {

namespace {
constexpr int kBinom[5][5] = {
    {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};

int64_t basis_scalar(int m, int i) {
    // b_i = (-1)^i C(m,i) Y^{m-i} X^i
    return (i % 2 ? -1 : 1) * kBinom[m][i];
}
} // namespace

BinaryForm::BinaryForm(int degree, std::span<const Fq> coords) : deg_(degree) {
    if (degree < 1 || degree > 4 || coords.size() != size_t(degree + 1))
        fail(Errc::DegreeMismatch, "binary form degree must be 1..4 with matching coordinates");
    for (size_t i = 0; i < coords.size(); ++i) z_[i] = coords[i];
    for (size_t i = coords.size(); i < z_.size(); ++i) z_[i] = coords[0].field().zero();
}

bool BinaryForm::is_zero() const {
    for (int i = 0; i <= deg_; ++i)
        if (!z_[size_t(i)].is_zero()) return false;
    return true;
}

bool BinaryForm::coords_equal(const BinaryForm& b) const {
    for (int i = 0; i <= deg_; ++i)
        if (z_[size_t(i)] != b.z_[size_t(i)]) return false;
    return true;
}

std::vector<Fq> BinaryForm::to_monomials() const {
    const Field& f = field();
    std::vector<Fq> c(size_t(deg_ + 1));
    for (int i = 0; i <= deg_; ++i) c[size_t(i)] = z_[size_t(i)] * f.el(basis_scalar(deg_, i));
    return c;
}

BinaryForm BinaryForm::from_monomials(std::span<const Fq> mono) {
    int m = int(mono.size()) - 1;
    const Field& f = mono[0].field();
    std::vector<Fq> z(mono.size());
    for (int i = 0; i <= m; ++i) z[size_t(i)] = mono[size_t(i)] / f.el(basis_scalar(m, i));
    return BinaryForm(m, z);
}

Fq BinaryForm::eval(Fq s, Fq t) const {
    std::vector<Fq> c = to_monomials();
    const Field& f = field();
    Fq acc = f.zero();
    Fq spow = f.one();
    std::vector<Fq> tpow(size_t(deg_ + 1));
    tpow[0] = f.one();
    for (int i = 1; i <= deg_; ++i) tpow[size_t(i)] = tpow[size_t(i - 1)] * t;
    for (int i = 0; i <= deg_; ++i) {
        acc += c[size_t(i)] * tpow[size_t(deg_ - i)] * spow;
        spow = spow * s;
    }
    return acc;
}

BinaryForm BinaryForm::operator*(Fq s) const {
    std::vector<Fq> z(coords().begin(), coords().end());
    for (Fq& v : z) v = v * s;
    return BinaryForm(deg_, z);
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (deg_ != o.deg_) fail(Errc::DegreeMismatch, "adding forms of different degrees");
    std::vector<Fq> z(coords().begin(), coords().end());
    for (int i = 0; i <= deg_; ++i) z[size_t(i)] += o[i];
    return BinaryForm(deg_, z);
}

BinaryForm BinaryForm::normalized() const {
    for (int i = 0; i <= deg_; ++i)
        if (!z_[size_t(i)].is_zero()) return *this * z_[size_t(i)].inv();
    fail(Errc::ZeroForm, "cannot normalize the zero form");
}

BinaryForm linear_power(Fq s, Fq t, int m) {
    const Field& f = s.field();
    // (Xt - Ys)^m = sum C(m,i) (Xt)^i (-Ys)^{m-i}
    std::vector<Fq> mono(size_t(m + 1), f.zero());
    for (int i = 0; i <= m; ++i) {
        Fq c = f.el(kBinom[m][i]) * t.pow(uint64_t(i)) * (-s).pow(uint64_t(m - i));
        mono[size_t(i)] = c;
    }
    return BinaryForm::from_monomials(mono);
}

BinaryForm mul_forms(const BinaryForm& a, const BinaryForm& b) {
    const Field& f = a.field();
    std::vector<Fq> ca = a.to_monomials(), cb = b.to_monomials();
    std::vector<Fq> out(ca.size() + cb.size() - 1, f.zero());
    for (size_t i = 0; i < ca.size(); ++i)
        for (size_t j = 0; j < cb.size(); ++j) out[i + j] += ca[i] * cb[j];
    return BinaryForm::from_monomials(out);
}

GL2 GL2::inverse() const {
    Fq dt = det();
    if (dt.is_zero()) fail(Errc::SingularMatrix, "singular 2x2 matrix");
    Fq di = dt.inv();
    return GL2{d * di, -b * di, -c * di, a * di};
}

GL2 GL2::identity(const Field& f) { return GL2{f.one(), f.zero(), f.zero(), f.one()}; }

Mat<2> omega_matrix_1(const Field& f) {
    Mat<2> m = Mat<2>::zero(f);
    m.a[0][1] = f.one();
    m.a[1][0] = f.el(-1);
    return m;
}
Mat<3> omega_matrix_2(const Field& f) {
    Mat<3> m = Mat<3>::zero(f);
    m.a[0][2] = m.a[2][0] = f.one();
    m.a[1][1] = f.el(-2);
    return m;
}
Mat<4> omega_matrix_3(const Field& f) {
    Mat<4> m = Mat<4>::zero(f);
    m.a[0][3] = f.one();
    m.a[1][2] = f.el(-3);
    m.a[2][1] = f.el(3);
    m.a[3][0] = f.el(-1);
    return m;
}
Mat<5> omega_matrix_4(const Field& f) {
    Mat<5> m = Mat<5>::zero(f);
    m.a[0][4] = m.a[4][0] = f.one();
    m.a[1][3] = m.a[3][1] = f.el(-4);
    m.a[2][2] = f.el(6);
    return m;
}

Mat<2> action_matrix_1(const GL2& g) {
    Fq di = g.det().inv();
    Mat<2> m;
    m.a = {{{g.a * di, g.b * di}, {g.c * di, g.d * di}}};
    return m;
}

Mat<3> action_matrix_2(const GL2& g) {
    const Field& f = g.a.field();
    Fq di = (g.det() * g.det()).inv();
    Fq a = g.a, b = g.b, c = g.c, d = g.d, two = f.el(2);
    Mat<3> m;
    m.a = {{{a * a, two * a * b, b * b},
            {a * c, a * d + b * c, b * d},
            {c * c, two * c * d, d * d}}};
    return m.scaled(di);
}

Mat<4> action_matrix_3(const GL2& g) {
    const Field& f = g.a.field();
    Fq di = g.det().pow(3).inv();
    Fq a = g.a, b = g.b, c = g.c, d = g.d;
    Fq ad = a * d, bc = b * c, two = f.el(2), three = f.el(3);
    Mat<4> m;
    m.a = {{{a * a * a, three * a * a * b, three * a * b * b, b * b * b},
            {a * a * c, a * (ad + two * bc), b * (bc + two * ad), b * b * d},
            {a * c * c, c * (bc + two * ad), d * (ad + two * bc), b * d * d},
            {c * c * c, three * c * c * d, three * c * d * d, d * d * d}}};
    return m.scaled(di);
}

Mat<5> action_matrix_4(const GL2& g) {
    const Field& f = g.a.field();
    Fq di = g.det().pow(4).inv();
    Fq a = g.a, b = g.b, c = g.c, d = g.d;
    Fq ad = a * d, bc = b * c;
    Fq two = f.el(2), three = f.el(3), four = f.el(4), six = f.el(6);
    Mat<5> m;
    m.a = {{{a * a * a * a, four * a * a * a * b, six * a * a * b * b, four * a * b * b * b,
             b * b * b * b},
            {a * a * a * c, a * a * (ad + three * bc), three * a * b * (ad + bc),
             b * b * (bc + three * ad), b * b * b * d},
            {a * a * c * c, two * a * c * (bc + ad), (ad + bc) * (ad + bc) + two * a * b * c * d,
             two * b * d * (ad + bc), d * d * b * b},
            {c * c * c * a, c * c * (bc + three * ad), three * c * d * (ad + bc),
             d * d * (ad + three * bc), d * d * d * b},
            {c * c * c * c, four * c * c * c * d, six * c * c * d * d, four * c * d * d * d,
             d * d * d * d}}};
    return m.scaled(di);
}

BinaryForm act_substitution(const GL2& g, const BinaryForm& f) {
    const Field& F = f.field();
    if (g.det().is_zero()) fail(Errc::SingularMatrix, "group element must be invertible");
    int m = f.degree();
    std::vector<Fq> mono = f.to_monomials();
    // substitute X -> dX - bY, Y -> aY - cX and collect by X-power
    std::vector<Fq> out(size_t(m + 1), F.zero());
    for (int i = 0; i <= m; ++i) {
        if (mono[size_t(i)].is_zero()) continue;
        // (aY - cX)^{m-i} (dX - bY)^i
        for (int jj = 0; jj <= m - i; ++jj) {
            for (int l = 0; l <= i; ++l) {
                Fq coef = F.el(kBinom[m - i][jj] * kBinom[i][l]) * (-g.c).pow(uint64_t(jj)) *
                          g.a.pow(uint64_t(m - i - jj)) * g.d.pow(uint64_t(l)) *
                          (-g.b).pow(uint64_t(i - l));
                out[size_t(jj + l)] += mono[size_t(i)] * coef;
            }
        }
    }
    Fq di = g.det().pow(uint64_t(m)).inv();
    for (Fq& v : out) v = v * di;
    return BinaryForm::from_monomials(out);
}

namespace {
template <int N>
BinaryForm apply(const Mat<N>& M, const BinaryForm& f) {
    std::array<Fq, N> v;
    for (int i = 0; i < N; ++i) v[size_t(i)] = f[i];
    auto r = M * v;
    return BinaryForm(N - 1, std::span<const Fq>(r.data(), r.size()));
}
} // namespace

BinaryForm act_matrix(const GL2& g, const BinaryForm& f) {
    if (g.det().is_zero()) fail(Errc::SingularMatrix, "group element must be invertible");
    switch (f.degree()) {
    case 1: return apply(action_matrix_1(g), f);
    case 2: return apply(action_matrix_2(g), f);
    case 3: return apply(action_matrix_3(g), f);
    default: return apply(action_matrix_4(g), f);
    }
}

BinaryForm act(const GL2& g, const BinaryForm& f) {
    BinaryForm bymat = act_matrix(g, f);
    BinaryForm bysub = act_substitution(g, f);
    if (bymat != bysub) fail(Errc::SingularMatrix, "internal: action routes disagree");
    return bymat;
}

Fq omega_pair(const BinaryForm& f, const BinaryForm& h) {
    if (f.degree() != h.degree()) fail(Errc::DegreeMismatch, "omega pairing needs equal degrees");
    const Field& F = f.field();
    auto pair = [&](const auto& A) {
        Fq acc = F.zero();
        int n = f.degree() + 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += f[i] * A.a[size_t(i)][size_t(j)] * h[j];
        return acc;
    };
    switch (f.degree()) {
    case 1: return pair(omega_matrix_1(F));
    case 2: return pair(omega_matrix_2(F));
    case 3: return pair(omega_matrix_3(F));
    default: return pair(omega_matrix_4(F));
    }
}

Fq inv_I(const BinaryForm& q) {
    if (q.degree() != 4) fail(Errc::DegreeMismatch, "I is defined for quartics");
    const Field& f = q.field();
    return (q[0] * q[4] - f.el(4) * q[1] * q[3] + f.el(3) * q[2] * q[2]) / f.el(3);
}

Mat<3> m_phi(const BinaryForm& q) {
    if (q.degree() != 4) fail(Errc::DegreeMismatch, "M_phi is defined for quartics");
    const Field& f = q.field();
    Fq m2 = f.el(-2);
    Mat<3> m;
    m.a = {{{q[4], m2 * q[3], q[2]},
            {m2 * q[3], f.el(4) * q[2], m2 * q[1]},
            {q[2], m2 * q[1], q[0]}}};
    return m;
}

Fq inv_J(const BinaryForm& q) {
    const Field& f = q.field();
    Fq byM = det(m_phi(q)) / f.el(4);
    Mat<3> hankel;
    hankel.a = {{{q[0], q[1], q[2]}, {q[1], q[2], q[3]}, {q[2], q[3], q[4]}}};
    Fq byH = det(hankel);
    if (byM != byH) fail(Errc::SingularForm, "internal: catalecticant routes disagree");
    return byM;
}

Fq discriminant(const BinaryForm& q) {
    Fq I = inv_I(q), J = inv_J(q);
    return I * I * I - J * J;
}

Fq j_invariant(const BinaryForm& q) {
    Fq I = inv_I(q);
    Fq D = discriminant(q);
    if (D.is_zero()) fail(Errc::SingularForm, "j-invariant requires nonzero discriminant");
    return q.field().el(1728) * I * I * I / D;
}

Fq j_of_lambda(Fq lambda) {
    const Field& f = lambda.field();
    if (lambda.is_zero() || lambda == f.one())
        fail(Errc::BadLambda, "cross-ratio 0 and 1 are degenerate");
    Fq num = f.el(256) * (lambda * lambda - lambda + f.one()).pow(3);
    Fq den = lambda * lambda * (lambda - f.one()).pow(2);
    return num / den;
}

const char* to_string(FactorType t) {
    switch (t) {
    case FactorType::F4: return "F4";
    case FactorType::F2: return "F2";
    case FactorType::F1: return "F1";
    case FactorType::F4Prime: return "F4'";
    case FactorType::F2Prime: return "F2'";
    }
    return "?";
}

const char* to_string(CubicPattern p) {
    switch (p) {
    case CubicPattern::Cube: return "Cube";
    case CubicPattern::SquareTimesLinear: return "SquareTimesLinear";
    case CubicPattern::ThreeRational: return "ThreeRational";
    case CubicPattern::OneRationalPlusQuadratic: return "OneRationalPlusQuadratic";
    case CubicPattern::IrreducibleCubic: return "IrreducibleCubic";
    }
    return "?";
}

namespace {

// divide the monomial coefficient vector by (Xt - Ys); exact by construction
std::vector<Fq> divide_linear(const Field& F, const std::vector<Fq>& co, Fq s, Fq t) {
    int deg = int(co.size()) - 1;
    std::vector<Fq> g(size_t(deg), F.zero());
    std::vector<Fq> rem = co;
    if (!t.is_zero()) {
        Fq ti = t.inv();
        for (int i = deg - 1; i >= 0; --i) {
            g[size_t(i)] = ti * rem[size_t(i + 1)];
            rem[size_t(i)] += g[size_t(i)] * s;
        }
    } else {
        Fq si = (-s).inv();
        for (int i = 0; i < deg; ++i) g[size_t(i)] = si * rem[size_t(i)];
    }
    return g;
}

Fq eval_mono(const Field& F, const std::vector<Fq>& co, Fq s, Fq t) {
    int deg = int(co.size()) - 1;
    Fq acc = F.zero();
    for (int i = 0; i <= deg; ++i) acc += co[size_t(i)] * t.pow(uint64_t(deg - i)) * s.pow(uint64_t(i));
    return acc;
}

} // namespace

RootData rational_roots(const BinaryForm& f) {
    if (f.is_zero()) fail(Errc::ZeroForm, "root pattern of the zero form");
    const Field& F = f.field();
    std::vector<Fq> co = f.to_monomials();
    RootData out;
    auto try_point = [&](Fq s, Fq t) {
        int mult = 0;
        while (int(co.size()) > 1 && eval_mono(F, co, s, t).is_zero()) {
            co = divide_linear(F, co, s, t);
            ++mult;
        }
        if (mult) out.roots.push_back({{s, t}, mult});
    };
    try_point(F.zero(), F.one());
    for (uint64_t v = 0; v < F.q(); ++v) try_point(F.one(), F.from_index(v));
    out.remaining_degree = int(co.size()) - 1;
    return out;
}

FactorType factor_type(const BinaryForm& quartic) {
    if (quartic.degree() != 4) fail(Errc::DegreeMismatch, "factor type is for quartics");
    if (quartic.is_zero()) fail(Errc::ZeroForm, "factor type of the zero form");
    if (discriminant(quartic).is_zero())
        fail(Errc::SingularForm, "factor type requires nonzero discriminant");
    RootData rd = rational_roots(quartic);
    int r = 0;
    for (auto& [pt, mult] : rd.roots) r += mult;
    switch (r) {
    case 4: return FactorType::F4;
    case 2: return FactorType::F2;
    case 1: return FactorType::F1;
    case 0: break;
    default: fail(Errc::SingularForm, "internal: impossible rational root count");
    }
    // no rational roots: F4' iff the dehomogenization splits over F_{q^2}
    const Field& F = quartic.field();
    FieldPtr fp = F.shared_from_this();
    std::vector<Fq> mono = quartic.to_monomials();
    UniPoly dehom(fp, mono); // p(L) = phi(L, 1), degree 4 since (1,0) is not a root
    UniPoly x = UniPoly::x(fp);
    UniPoly frob2 = poly_powmod(x, F.q() * F.q(), dehom);
    UniPoly g = poly_gcd(frob2 - x, dehom);
    return g.degree() == 4 ? FactorType::F4Prime : FactorType::F2Prime;
}

CubicPattern cubic_pattern(const BinaryForm& cubic) {
    if (cubic.degree() != 3) fail(Errc::DegreeMismatch, "cubic pattern is for cubics");
    RootData rd = rational_roots(cubic);
    std::vector<int> mults;
    for (auto& [pt, m] : rd.roots) mults.push_back(m);
    std::sort(mults.rbegin(), mults.rend());
    if (mults == std::vector<int>{3}) return CubicPattern::Cube;
    if (mults == std::vector<int>{2, 1}) return CubicPattern::SquareTimesLinear;
    if (mults == std::vector<int>{1, 1, 1}) return CubicPattern::ThreeRational;
    if (mults == std::vector<int>{1} && rd.remaining_degree == 2)
        return CubicPattern::OneRationalPlusQuadratic;
    if (mults.empty() && rd.remaining_degree == 3) return CubicPattern::IrreducibleCubic;
    fail(Errc::UnclassifiableLine, "internal: impossible cubic factor pattern");
}

} // namespace tcub
