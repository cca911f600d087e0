#include <doctest.h>

#include "tcub/poly.hpp"
#include "tcub/sampling.hpp"

using namespace tcub;

namespace {
UniPoly from_ints(const FieldPtr& f, std::vector<int64_t> v) {
    std::vector<Fq> c;
    for (int64_t x : v) c.push_back(f->el(x));
    return UniPoly(f, c);
}
} // namespace

TEST_CASE("gcd basics") {
    FieldPtr f = Field::make(7);
    UniPoly a = from_ints(f, {-1, 0, 1}); // x^2 - 1
    UniPoly b = from_ints(f, {-1, 1});    // x - 1
    CHECK(poly_gcd(a, b) == b.monic());
    CHECK(poly_gcd(a, UniPoly(f)) == a.monic());
    UniPoly scaled = a * from_ints(f, {3});
    CHECK(poly_gcd(scaled, UniPoly(f)) == a.monic()); // gcd(f,0) is monic
}

TEST_CASE("powmod: Frobenius acts as negation on a nonresidue root") {
    FieldPtr f = Field::make(7);
    UniPoly m = from_ints(f, {-3, 0, 1}); // x^2 - eps with eps = 3
    UniPoly frob = poly_powmod(UniPoly::x(f), 7, m);
    UniPoly minusX = from_ints(f, {0, -1});
    CHECK(frob == minusX);
    CHECK_THROWS_AS(poly_powmod(UniPoly::x(f), 3, UniPoly(f)), MathError);
}

TEST_CASE("powmod against a repeated-squaring oracle") {
    FieldPtr f = Field::make(11);
    Sampler rng(3);
    for (int it = 0; it < 30; ++it) {
        std::vector<Fq> mc;
        for (int i = 0; i < 3; ++i) mc.push_back(rng.fq(*f));
        mc.push_back(f->one());
        UniPoly m(f, mc);
        std::vector<Fq> bc;
        for (int i = 0; i < 3; ++i) bc.push_back(rng.fq(*f));
        UniPoly base(f, bc);
        uint64_t e = rng.uniform(1000);
        UniPoly direct = UniPoly::constant(f, f->one());
        for (uint64_t i = 0; i < e; ++i) direct = UniPoly::divmod(direct * base, m).second;
        CHECK(poly_powmod(base, e, m) == direct);
    }
}

TEST_CASE("x^(q^2) - x detects the roots living in GF(q^2)") {
    FieldPtr f = Field::make(7);
    FieldPtr ext = Field::make(7, 2);
    Sampler rng(5);
    for (int it = 0; it < 25; ++it) {
        std::vector<Fq> c;
        int deg = 2 + int(rng.uniform(3));
        for (int i = 0; i < deg; ++i) c.push_back(rng.fq(*f));
        c.push_back(f->one());
        UniPoly poly(f, c);
        UniPoly g = poly_gcd(poly_powmod(UniPoly::x(f), 49, poly) - UniPoly::x(f), poly);
        // count roots of poly over GF(49), with multiplicity capped by gcd degree
        UniPoly lift(ext);
        {
            std::vector<Fq> lc;
            for (Fq v : poly.coeffs()) lc.push_back(ext->from_index(v.index()));
            lift = UniPoly(ext, lc);
        }
        int roots = 0;
        for (uint64_t v = 0; v < ext->q(); ++v)
            if (lift.eval(ext->from_index(v)).is_zero()) ++roots;
        // g collects each distinct GF(q^2)-root exactly once
        CHECK(g.degree() == roots);
    }
}

TEST_CASE("irreducibility test agrees with root counting for cubics") {
    FieldPtr f = Field::make(5);
    for (uint64_t a = 0; a < 5; ++a)
        for (uint64_t b = 0; b < 5; ++b) {
            UniPoly p = from_ints(f, {int64_t(a), int64_t(b), 0, 1}); // x^3 + bx + a
            bool hasRoot = false;
            for (uint64_t v = 0; v < 5; ++v)
                if (p.eval(f->from_index(v)).is_zero()) hasRoot = true;
            CHECK(p.is_irreducible() == !hasRoot);
        }
}
