#pragma once

#include <map>
#include <string>
#include <vector>

#include "tcub/incidence.hpp"

namespace tcub {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // populated on failure (and for a few informative passes)
};

struct Report {
    std::string field_spec;
    uint64_t q = 0;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// exhaustive classification of the q^3+q^2+q+1 points; sizes must match the
// closed forms (q+1, q(q+1), (q^3-q)/6, q(q^2-1)/2, (q^3-q)/3)
std::array<uint64_t, 5> point_census(const FieldPtr& f, uint64_t bound = 13);

struct LineOrbit {
    std::array<Fq, 6> rep; // least canonical member
    uint64_t size = 0;
    bool generic = false;
    std::optional<FactorType> ftype;       // generic only
    std::optional<Fq> j;                   // generic only
    std::optional<Fq> r;                   // J/z5^3, when z5 != 0
    std::optional<NongenericClass> cls;    // non-generic only
    IncidenceProfile profile;              // formula route
};

struct OrbitCensus {
    FieldPtr field;
    std::array<uint64_t, 5> point_orbit_sizes{};
    uint64_t line_count = 0;
    std::vector<LineOrbit> orbits;                    // sorted by canonical rep
    uint64_t generic_orbits = 0;
    std::map<uint64_t, uint64_t> generic_histogram;   // divisor d -> #orbits of size |G|/d
    // labels carried by more than one orbit, with their multiplicities
    std::vector<std::pair<std::string, uint64_t>> label_splits;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// true orbits by exhaustive group action over all q^3-q elements of PGL2(q)
OrbitCensus line_census(const FieldPtr& f, unsigned threads = 0, uint64_t bound = 13);

struct JSetCensus {
    uint64_t j4 = 0, j2 = 0, j1 = 0;      // |J_4|, |J_2|, |J_1|
    uint64_t j4p = 0, j2p = 0, j1p = 0;   // |J_4^+|, |J_2^+|, |J_1^+|
    std::vector<uint64_t> J4, J2, J1;     // sorted value lifts
    std::vector<CheckResult> checks;
};

// enumerates the restricted cross-ratio sets in F_q, F_{q^2}, F_{q^3} and
// their j-images; verifies the cardinality formulas and the partition
JSetCensus j_set_census(const FieldPtr& f, uint64_t bound = 13);

// expected |J_i^+| from the closed forms
uint64_t expected_j1_plus(uint64_t q);
uint64_t expected_j2_plus(uint64_t q);
uint64_t expected_j4_plus(uint64_t q);

// all q^3 - q elements of PGL2(q), one normalized lift each
std::vector<GL2> pgl2_elements(const Field& f);

// randomized exact identities (equivariances, two-route agreements, ...)
std::vector<CheckResult> algebraic_identity_suite(const FieldPtr& f, uint64_t seed, int trials);

// formula decomposition == brute force on every generic line (exhaustive for
// q <= 7, else on `samples` uniformly drawn generic lines)
CheckResult check_generic_decomposition(const FieldPtr& f, uint64_t seed, uint64_t samples);

// ten representatives + every non-generic line against the table
std::vector<CheckResult> check_nongeneric_all(const FieldPtr& f);

// nu identity, divisibility, Hasse, witness, orbit/twist invariance of #E
std::vector<CheckResult> elliptic_identity_checks(const FieldPtr& f, uint64_t seed,
                                                  uint64_t samples, const OrbitCensus* census);

// planes through each line vs exhaustive plane classification (q <= 7)
CheckResult check_duality_planes(const FieldPtr& f);
// every Klein point is reachable from a pencil and round-trips (q <= 7)
CheckResult check_klein_surjectivity(const FieldPtr& f);
// group closure of one representative per point orbit (q <= 7)
CheckResult check_point_orbit_closure(const FieldPtr& f);

// full verification battery: censuses, incidence formulas vs brute force,
// elliptic identities, and the randomized algebraic identity suite
Report verify_all(const FieldPtr& f, uint64_t seed = 0, unsigned threads = 0,
                  uint64_t bound = 13);

} // namespace tcub
