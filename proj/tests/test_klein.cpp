#include <doctest.h>

#include "tcub/klein.hpp"
#include "tcub/sampling.hpp"

using namespace tcub;

namespace {
Line line_of(const FieldPtr& f, std::vector<int64_t> lifts) {
    std::vector<Fq> z;
    for (int64_t v : lifts) z.push_back(f->el(v));
    return Line::from_coords(z);
}
BinaryForm bf(const FieldPtr& f, std::vector<int64_t> lifts) {
    std::vector<Fq> c;
    for (int64_t v : lifts) c.push_back(f->el(v));
    return BinaryForm(int(c.size()) - 1, c);
}
} // namespace

TEST_CASE("the secant line through Y^3 and X^3") {
    FieldPtr f = Field::make(7);
    BinaryForm u = bf(f, {1, 0, 0, 0});  // Y^3
    BinaryForm v = bf(f, {0, 0, 0, -1}); // X^3
    Line l = Line::from_pencil(u, v);
    CHECK(l == line_of(f, {0, 0, 1, 0, 0, 1}));
    CHECK(Line::from_pencil(v, u) == l); // antisymmetry absorbed by scaling
    LineNature n = line_nature(l);
    CHECK(n.meets_cubic);
    CHECK(!n.in_osculating);
    CHECK(!n.generic);
    // phi = X^2Y^2-proportional with z5 = 1
    CHECK(l.quartic() == bf(f, {0, 0, 1, 0, 0}));
    CHECK(l.z5() == f->one());
    CHECK_THROWS_AS(Line::from_pencil(u, u * f->el(3)), MathError);
}

TEST_CASE("pencil invariance under change of basis") {
    FieldPtr f = Field::make(11);
    Sampler rng(11);
    for (int it = 0; it < 60; ++it) {
        Line l = rng.line(*f);
        auto [u, v] = l.pencil_basis();
        GL2 c = rng.gl2(*f);
        CHECK(Line::from_pencil(u * c.a + v * c.b, u * c.c + v * c.d) == l);
    }
}

TEST_CASE("Klein equation is validated at construction") {
    FieldPtr f = Field::make(7);
    CHECK_THROWS_WITH_AS(line_of(f, {1, 0, 0, 0, 1, 0}), doctest::Contains("NotOnQuadric"),
                         MathError);
    CHECK_THROWS_AS(line_of(f, {0, 0, 0, 0, 0, 0}), MathError);
    // tangent representative: phi proportional to X^4, z5 = 0
    Line tan = line_of(f, {0, 0, 0, 0, 1, 0});
    CHECK(tan.quartic() == bf(f, {0, 0, 0, 0, 1}));
    CHECK(tan.z5().is_zero());
    LineNature n = line_nature(tan);
    CHECK(n.meets_cubic);
    CHECK(n.in_osculating);
}

TEST_CASE("line count equals the Klein-point count") {
    CHECK(klein_points(*Field::make(5)).size() == 806);
    CHECK(klein_points(*Field::make(7)).size() == 2850);
}

TEST_CASE("polar duality") {
    FieldPtr f = Field::make(7);
    Line secant = line_of(f, {0, 0, 1, 0, 0, 1});
    Line axis = line_of(f, {0, 0, 1, 0, 0, -1});
    CHECK(secant.dual() == axis);
    CHECK(secant.dual().dual() == secant);
    CHECK(line_nature(axis).in_osculating);
    Sampler rng(12);
    for (int it = 0; it < 40; ++it) {
        Line l = rng.line(*f);
        CHECK(l.dual().dual() == l);
        GL2 g = rng.gl2(*f);
        CHECK(act_on_line(g, l.dual()) == act_on_line(g, l).dual());
        // a line through a rational point of the twisted cubic dualizes into
        // an osculating plane
        if (line_nature(l).meets_cubic) {
            bool dualInOsc = line_nature(l.dual()).in_osculating;
            CHECK(dualInOsc);
        }
    }
}

TEST_CASE("dual of a line through a cubic point lies in the osculating plane there") {
    FieldPtr f = Field::make(7);
    Sampler rng(16);
    auto pts = pg1_points(*f);
    for (int it = 0; it < 30; ++it) {
        // build a line through the cubic point (Xt-Ys)^3
        auto [s, t] = pts[rng.uniform(pts.size())];
        BinaryForm cube = linear_power(s, t, 3);
        Line l = [&] {
            while (true) {
                try {
                    return Line::from_pencil(cube, rng.form(*f, 3));
                } catch (const MathError&) {
                }
            }
        }();
        CHECK(line_nature(l).meets_cubic);
        // every member of the dual pencil is divisible by (Xt-Ys)
        auto [u, v] = l.dual().pencil_basis();
        for (const auto& [a, b] : pts) {
            BinaryForm member = u * a + v * b;
            if (member.is_zero()) continue;
            CHECK(member.eval(s, t).is_zero());
        }
    }
}

TEST_CASE("point classification and the q=7 census sizes") {
    FieldPtr f = Field::make(7);
    Fq e = f->nonsquare();
    CHECK(point_classify(PointP3(bf(f, {0, 0, 0, -1}))) == 1); // X^3
    std::vector<Fq> m{f->zero(), f->zero(), f->one(), f->zero()};
    CHECK(point_classify(PointP3(BinaryForm::from_monomials(m))) == 2); // X^2 Y
    std::vector<Fq> m2{f->zero(), f->el(-1), f->one(), f->zero()};
    CHECK(point_classify(PointP3(BinaryForm::from_monomials(m2))) == 3); // XY(X-Y)
    std::vector<Fq> m3{f->zero(), -e, f->zero(), f->one()};
    CHECK(point_classify(PointP3(BinaryForm::from_monomials(m3))) == 4); // X(X^2-eY^2)

    std::array<uint64_t, 5> sizes{};
    for (const PointP3& p : pg3_points(*f)) sizes[size_t(point_classify(p) - 1)]++;
    CHECK(sizes == std::array<uint64_t, 5>{8, 56, 56, 168, 112});
    CHECK(sizes[0] + sizes[1] + sizes[2] + sizes[3] + sizes[4] == 400);
}

TEST_CASE("plane classification is dual point classification") {
    FieldPtr f = Field::make(7);
    PointP3 p(bf(f, {0, 0, 0, -1}));
    CHECK(plane_classify(polar_dual_point(p)) == 1);
    std::vector<Fq> m2{f->zero(), f->el(-1), f->one(), f->zero()};
    PointP3 p3(BinaryForm::from_monomials(m2));
    CHECK(plane_classify(polar_dual_point(p3)) == 3);
}

TEST_CASE("M_z structure") {
    FieldPtr f = Field::make(7);
    Line secant = line_of(f, {0, 0, 1, 0, 0, 1});
    Mat<3> m = m_z(secant);
    Mat<3> want = Mat<3>::zero(*f);
    want.a[0][2] = want.a[2][0] = f->el(2);
    want.a[1][1] = f->el(2);
    CHECK(m == want);
    // z5 = 0 reduces M_z to M_phi
    Line tan = line_of(f, {0, 0, 0, 0, 1, 0});
    CHECK(m_z(tan) == m_phi(tan.quartic()));
    // degenerate exactly on osculating lines
    Sampler rng(13);
    for (int it = 0; it < 60; ++it) {
        Line l = rng.line(*f);
        CHECK(det(m_z(l)).is_zero() == line_nature(l).in_osculating);
    }
}

TEST_CASE("line action: raw scaling laws and orbit preservation") {
    FieldPtr f = Field::make(7);
    Sampler rng(14);
    Line secant = line_of(f, {0, 0, 1, 0, 0, 1});
    for (int it = 0; it < 50; ++it) {
        GL2 g = rng.gl2(*f);
        CHECK(line_nature(act_on_line(g, secant)).meets_cubic);
        Line l = rng.line(*f);
        CHECK(act_on_line(GL2::identity(*f), l) == l);
        // raw action: phi coordinates transform by det^-1 g4, z5 by det^-3
        auto zg = g5_tilde(g) * l.z();
        BinaryForm phiImage(4, std::span<const Fq>(zg.data(), 5));
        CHECK(phiImage == act(g, l.quartic()) * g.det().inv());
        CHECK(zg[5] == l.z5() / g.det().pow(3));
        // group action at the projective level
        GL2 h = rng.gl2(*f);
        CHECK(act_on_line(g * h, l) == act_on_line(g, act_on_line(h, l)));
    }
}

TEST_CASE("every Klein point at q=5 comes from a pencil") {
    FieldPtr f = Field::make(5);
    for (const Line& l : klein_points(*f)) {
        auto [u, v] = l.pencil_basis();
        CHECK(Line::from_pencil(u, v) == l);
    }
}

TEST_CASE("a pencil holds a doubly-divisible form exactly over roots of phi") {
    FieldPtr f = Field::make(5);
    Sampler rng(15);
    auto pts = pg1_points(*f);
    for (int it = 0; it < 25; ++it) {
        Line l = rng.line(*f);
        auto [u, v] = l.pencil_basis();
        for (const auto& [s, t] : pts) {
            bool hasSquare = false;
            for (const auto& [a, b] : pts) {
                BinaryForm member = u * a + v * b;
                if (member.is_zero()) continue;
                // divisible by (Xt-Ys)^2?
                RootData rd = rational_roots(member);
                for (const auto& [pt, mult] : rd.roots)
                    if (mult >= 2 && pt[0] == s && pt[1] == t) hasSquare = true;
            }
            CHECK(hasSquare == l.quartic().eval(s, t).is_zero());
        }
    }
}
