#pragma once

#include <random>

#include "tcub/klein.hpp"

namespace tcub {

// Deterministic sampling for randomized property checks.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    uint64_t uniform(uint64_t n) { return std::uniform_int_distribution<uint64_t>(0, n - 1)(rng_); }

    Fq fq(const Field& f) { return f.from_index(uniform(f.q())); }

    Fq fq_nonzero(const Field& f) { return f.from_index(1 + uniform(f.q() - 1)); }

    GL2 gl2(const Field& f) {
        while (true) {
            GL2 g{fq(f), fq(f), fq(f), fq(f)};
            if (!g.det().is_zero()) return g;
        }
    }

    BinaryForm form(const Field& f, int deg) {
        while (true) {
            std::vector<Fq> z;
            for (int i = 0; i <= deg; ++i) z.push_back(fq(f));
            BinaryForm out(deg, z);
            if (!out.is_zero()) return out;
        }
    }

    Line line(const Field& f) {
        while (true) {
            BinaryForm u = form(f, 3), v = form(f, 3);
            try {
                return Line::from_pencil(u, v);
            } catch (const MathError&) {
                // dependent generators; retry
            }
        }
    }

    Line generic_line(const Field& f) {
        while (true) {
            Line l = line(f);
            if (line_nature(l).generic) return l;
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace tcub
