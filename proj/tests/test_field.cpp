#include <doctest.h>

#include <set>

#include "tcub/poly.hpp"
#include "tcub/sampling.hpp"

using namespace tcub;

TEST_CASE("prime field construction and basic constants") {
    FieldPtr f = Field::make(7);
    CHECK(f->q() == 7);
    CHECK(f->k() == 1);
    CHECK(f->el(10).index() == 3);
    CHECK(f->el(-1).index() == 6);
    CHECK(f->frac(1, 4).index() == 2);
    CHECK(f->spec_string() == "7");
    CHECK(f->mu() == 1);
    CHECK(Field::make(5)->mu() == -1);
}

TEST_CASE("construction error precedence") {
    CHECK_THROWS_WITH_AS(Field::make(3), doctest::Contains("BadCharacteristic"), MathError);
    CHECK_THROWS_WITH_AS(Field::make(2, 5), doctest::Contains("BadCharacteristic"), MathError);
    CHECK_THROWS_WITH_AS(Field::parse("9"), doctest::Contains("BadCharacteristic"), MathError);
    CHECK_THROWS_WITH_AS(Field::parse("4"), doctest::Contains("FieldTooSmall"), MathError);
    CHECK_THROWS_WITH_AS(Field::parse("6"), doctest::Contains("NotPrime"), MathError);
    CHECK_THROWS_WITH_AS(Field::parse("25"), doctest::Contains("NotPrime"), MathError);
    try {
        Field::make(3);
        CHECK(false);
    } catch (const MathError& e) {
        CHECK(e.code() == Errc::BadCharacteristic);
    }
}

TEST_CASE("GF(25) gets the deterministic least irreducible modulus") {
    FieldPtr f = Field::make(5, 2);
    // lexicographically least monic irreducible over GF(5): 1 + x + x^2
    CHECK(f->modulus() == std::vector<uint64_t>{1, 1, 1});
    CHECK(f->spec_string() == "5^2/1,1,1");

    // oracle: no roots in GF(5), and x^25 - x is divisible by the modulus
    FieldPtr base = Field::make(5);
    UniPoly mod = UniPoly::from_lifts(base, f->modulus());
    for (uint64_t v = 0; v < 5; ++v) CHECK(!mod.eval(base->from_index(v)).is_zero());
    UniPoly frob = poly_powmod(UniPoly::x(base), 25, mod);
    CHECK((frob - UniPoly::x(base)).is_zero());

    CHECK_THROWS_WITH_AS(Field::make(5, 2, std::vector<uint64_t>{4, 0, 1}),
                         doctest::Contains("ReducibleModulus"), MathError); // x^2-4=(x-2)(x+2)
    // an explicit irreducible modulus is accepted and distinct from the default
    FieldPtr g = Field::parse("5^2/2,0,1"); // x^2 + 2
    CHECK(g->q() == 25);
    CHECK(g != f);
}

TEST_CASE("field axioms and Frobenius on random samples") {
    Sampler rng(17);
    for (const FieldPtr& f : {Field::make(7), Field::make(11), Field::make(5, 2), Field::make(5, 3)}) {
        for (int i = 0; i < 200; ++i) {
            Fq a = rng.fq(*f), b = rng.fq(*f), c = rng.fq(*f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == f->zero());
            if (!a.is_zero()) {
                CHECK(a * a.inv() == f->one());
                CHECK(a.pow(f->q() - 1) == f->one());
            }
            CHECK(a.pow(f->q()) == a);
        }
    }
}

TEST_CASE("squares: counts, Euler criterion, norm test, canonical roots") {
    for (const FieldPtr& f : {Field::make(7), Field::make(13), Field::make(5, 2)}) {
        uint64_t squares = 0;
        for (uint64_t v = 1; v < f->q(); ++v)
            if (f->is_square(f->from_index(v))) ++squares;
        CHECK(squares == (f->q() - 1) / 2);
        for (uint64_t v = 0; v < f->q(); ++v) {
            Fq x = f->from_index(v);
            if (auto r = f->sqrt(x)) {
                CHECK(*r * *r == x);
                CHECK(f->sqrt(x) == r); // deterministic
            }
            if (!x.is_zero()) {
                bool euler = x.pow((f->q() - 1) / 2) == f->one();
                CHECK(euler == f->is_square(x));
            }
        }
    }
    // norm-based test for the extension field
    FieldPtr e = Field::make(5, 2);
    FieldPtr base = Field::make(5);
    for (uint64_t v = 1; v < e->q(); ++v) {
        Fq x = e->from_index(v);
        Fq n = x.pow((e->q() - 1) / (5 - 1)); // norm to GF(5)
        REQUIRE(n.index() < 5);
        CHECK(e->is_square(x) == base->is_square(base->from_index(n.index())));
    }
}

TEST_CASE("canonical representatives") {
    FieldPtr f = Field::make(7);
    CHECK(f->sqrt(f->el(2))->index() == 3); // roots {3,4}, least is 3
    CHECK(f->sqrt(f->zero())->index() == 0);
    CHECK(!f->sqrt(f->el(3)).has_value());
    CHECK(f->nonsquare().index() == 3);
    CHECK(f->cube_root_of_unity()->index() == 2); // 2 and 4, least is 2
    CHECK(!Field::make(5)->cube_root_of_unity().has_value());

    // k > 1: canonical order is lexicographic on coefficient tuples
    FieldPtr e = Field::make(5, 2);
    Fq a = e->from_coeffs(std::vector<uint64_t>{0, 1}); // x
    Fq b = e->from_coeffs(std::vector<uint64_t>{1, 0}); // 1
    CHECK(e->canonical_less(a, b)); // (0,1) < (1,0)
    CHECK(!e->canonical_less(b, a));
}

TEST_CASE("field spec round trip and interning") {
    CHECK(Field::parse("7") == Field::make(7));
    CHECK(Field::parse("5^2") == Field::make(5, 2));
    CHECK(Field::parse(Field::make(5, 3)->spec_string()) == Field::make(5, 3));
    CHECK_THROWS_AS(Field::parse("abc"), MathError);

    // polynomial-typed modulus builds the same interned field
    FieldPtr base = Field::make(5);
    UniPoly mod(base, {base->one(), base->one(), base->one()});
    CHECK(Field::make(5, 2, mod) == Field::make(5, 2));
}
