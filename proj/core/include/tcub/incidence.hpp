#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "tcub/klein.hpp"

namespace tcub {

// Decomposition of the q+1 points of a line into the five point orbits,
// plus diagnostics where they are defined.
struct IncidenceProfile {
    std::array<uint64_t, 5> counts{};
    std::optional<int> eta;
    std::optional<uint64_t> nu;
    std::optional<uint64_t> e_count; // generic lines only
    struct Diagnostics {
        uint64_t a1 = 0, a2 = 0, a33 = 0, a31 = 0;
    };
    std::optional<Diagnostics> diag; // lines not inside an osculating plane

    uint64_t total() const { return counts[0] + counts[1] + counts[2] + counts[3] + counts[4]; }
    friend bool operator==(const IncidenceProfile& a, const IncidenceProfile& b) {
        return a.counts == b.counts;
    }
};

// The ten orbits of non-generic lines.
enum class NongenericClass {
    Secant,              // O1
    RealAxis,            // O1 dual
    Tangent,             // O2
    ImaginarySecant,     // O3
    ImaginaryAxis,       // O3 dual
    OsculatingUnisecant, // O4
    Unisecant51,         // O51
    External51,          // O51 dual
    Unisecant52,         // O52
    External52,          // O52 dual
};
const char* to_string(NongenericClass c);

// The quadratic h with (Xt-Ys)h the unique point of L in the osculating
// plane at (s,t).  L must not lie inside an osculating plane.
BinaryForm h_form(const Line& l, Fq s, Fq t);

// Discriminant quartic D_L, computed both from the matrix formula
// -1/2 (X2 XY Y2) Mz A2^-1 Mz (...)^T and from its polynomial expansion;
// the two routes must agree.
BinaryForm d_quartic(const Line& l);

// expansion route on a raw (not canonicalized) coordinate 6-tuple;
// quadratic in z, so rescaling z by t rescales the result by t^2
BinaryForm d_quartic_raw(std::span<const Fq> z);

// number of rational linear factors of phi_L (0, 1, 2 or 4); generic lines only
int eta(const Line& l);
// number of points of PG(1,q) where D_L is a nonzero square; generic lines only
uint64_t nu(const Line& l);

// closed-form decomposition of a generic line (both the nu route and the
// elliptic-count route, asserted equal; exact divisibility enforced)
IncidenceProfile decompose_generic(const Line& l);

// independent oracle: enumerate the q+1 points from a pencil basis and
// classify each; also tallies the osculating-plane diagnostics when defined
IncidenceProfile brute_decompose(const Line& l);

// which of the ten non-generic orbits contains l
NongenericClass classify_nongeneric(const Line& l);

// closed-form table row for a non-generic class, with q and mu substituted
std::array<uint64_t, 5> nongeneric_table_row(NongenericClass c, uint64_t q, int mu);

IncidenceProfile decompose_nongeneric(const Line& l);

// dispatcher: formula route for any line
IncidenceProfile decompose(const Line& l);

// Problem-2 answer by duality: the point decomposition of the dual line
std::array<uint64_t, 5> planes_through_line_decompose(const Line& l);

} // namespace tcub
