#include <doctest.h>

#include "tcub/census.hpp"

using namespace tcub;

TEST_CASE("point census closed forms") {
    CHECK(point_census(Field::make(5)) == std::array<uint64_t, 5>{6, 30, 20, 60, 40});
    CHECK(point_census(Field::make(7)) == std::array<uint64_t, 5>{8, 56, 56, 168, 112});
    CHECK_THROWS_WITH_AS(point_census(Field::make(17)), doctest::Contains("BoundExceeded"),
                         MathError);
}

TEST_CASE("line census at q=5") {
    OrbitCensus c = line_census(Field::make(5), 2);
    CHECK(c.line_count == 806);
    CHECK(c.orbits.size() == 16);
    CHECK(c.generic_orbits == 6);
    CHECK(c.generic_histogram == std::map<uint64_t, uint64_t>{{1, 2}, {2, 4}});
    CHECK(c.label_splits.empty());
    for (const auto& ch : c.checks) {
        CAPTURE(ch.name);
        CHECK(ch.pass);
    }
    // orbit profile sums and representative membership
    uint64_t total = 0;
    for (const auto& o : c.orbits) {
        total += o.size;
        CHECK(o.profile.total() == 6);
    }
    CHECK(total == 806);
}

TEST_CASE("census is deterministic across worker counts") {
    OrbitCensus a = line_census(Field::make(7), 1);
    OrbitCensus b = line_census(Field::make(7), 4);
    REQUIRE(a.orbits.size() == b.orbits.size());
    for (size_t i = 0; i < a.orbits.size(); ++i) {
        CHECK(a.orbits[i].rep == b.orbits[i].rep);
        CHECK(a.orbits[i].size == b.orbits[i].size);
    }
}

TEST_CASE("line census at q=7 matches the orbit-count table") {
    OrbitCensus c = line_census(Field::make(7), 0);
    CHECK(c.generic_orbits == 12);
    CHECK(c.generic_histogram ==
          std::map<uint64_t, uint64_t>{{1, 2}, {2, 6}, {3, 2}, {4, 1}, {12, 1}});
    // the F1 pair at j=0 is the only label split at q=7
    REQUIRE(c.label_splits.size() == 1);
    CHECK(c.label_splits[0].second == 2);
    for (const auto& ch : c.checks) {
        CAPTURE(ch.name);
        CHECK(ch.pass);
    }
}

TEST_CASE("j-set census at small q") {
    JSetCensus a = j_set_census(Field::make(5));
    CHECK(a.j4 == 0);
    CHECK(a.j2 == 1);
    CHECK(a.j1 == 2);
    CHECK(a.j4p == 0);
    CHECK(a.j2p == 0);
    CHECK(a.j1p == 1);
    JSetCensus b = j_set_census(Field::make(7));
    CHECK(b.j4 == 0);
    CHECK(b.j2 == 3);
    CHECK(b.j1 == 2);
    CHECK(b.j4p == 0);
    CHECK(b.j2p == 1);
    CHECK(b.j1p == 1);
    // 1728 = 6 mod 7 is never attained; 1 is (frozen from the brute force)
    CHECK(b.J2 == std::vector<uint64_t>{2, 4, 5});
    CHECK(b.J1 == std::vector<uint64_t>{1, 3});
    for (const auto& ch : b.checks) {
        CAPTURE(ch.name);
        CHECK(ch.pass);
    }
}

TEST_CASE("verify_all at q=5 passes with a full battery") {
    Report r = verify_all(Field::make(5), 42, 2);
    CHECK(r.q == 5);
    CHECK(r.checks.size() >= 20);
    for (const auto& ch : r.checks) {
        CAPTURE(ch.name);
        CAPTURE(ch.detail);
        CHECK(ch.pass);
    }
    CHECK(r.all_pass());
}

TEST_CASE("field guards reject the excluded small and bad-characteristic cases") {
    CHECK_THROWS_WITH_AS(Field::parse("4"), doctest::Contains("FieldTooSmall"), MathError);
    CHECK_THROWS_WITH_AS(Field::parse("3^2"), doctest::Contains("BadCharacteristic"), MathError);
}
