#pragma once

#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcub/errors.hpp"

namespace tcub {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Element of GF(p^k), stored as the canonical index sum(c_i p^i) of its
// polynomial-basis coefficients.  Carries a borrowed pointer to its field;
// fields are interned and live for the whole process.
class Fq {
public:
    Fq() = default;
    Fq(const Field* f, uint32_t v) : f_(f), v_(v) {}

    const Field& field() const { assert(f_); return *f_; }
    const Field* field_ptr() const { return f_; }
    uint32_t index() const { return v_; }
    bool is_zero() const;

    Fq operator-() const;
    Fq inv() const;
    Fq pow(uint64_t e) const;

    friend Fq operator+(Fq a, Fq b);
    friend Fq operator-(Fq a, Fq b);
    friend Fq operator*(Fq a, Fq b);
    friend Fq operator/(Fq a, Fq b);
    Fq& operator+=(Fq o) { return *this = *this + o; }
    Fq& operator-=(Fq o) { return *this = *this - o; }
    Fq& operator*=(Fq o) { return *this = *this * o; }
    Fq& operator/=(Fq o) { return *this = *this / o; }

    friend bool operator==(Fq a, Fq b) { return a.f_ == b.f_ && a.v_ == b.v_; }
    friend bool operator!=(Fq a, Fq b) { return !(a == b); }

private:
    const Field* f_ = nullptr;
    uint32_t v_ = 0;
};

// GF(p^k), char >= 5, q > 4.  Immutable after construction; all tables are
// built once and shared read-only across threads.
class Field : public std::enable_shared_from_this<Field> {
public:
    // Deterministic construction; interned on (p, k, modulus).  When the
    // modulus is omitted for k > 1, the lexicographically least monic
    // irreducible of degree k over GF(p) is selected (coefficient tuples
    // compared low-degree first).
    static FieldPtr make(uint64_t p, unsigned k = 1,
                         std::span<const uint64_t> modulus = {});
    // modulus given as a polynomial over GF(p)
    static FieldPtr make(uint64_t p, unsigned k, const class UniPoly& modulus);
    // "p", "p^k" or "p^k/c0,c1,...,ck" (modulus lifts, low-to-high, monic).
    static FieldPtr parse(std::string_view spec);

    uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    uint64_t q() const { return q_; }
    // q mod 3, as the sign mu in {+1,-1}
    int mu() const { return q_ % 3 == 1 ? 1 : -1; }
    // modulus coefficient lifts, low-to-high (size k+1, monic); empty for k=1
    const std::vector<uint64_t>& modulus() const { return modulus_; }
    std::string spec_string() const;

    Fq zero() const { return Fq(this, 0); }
    Fq one() const { return Fq(this, one_); }
    // embedding of the rational integer n (reduced mod p)
    Fq el(int64_t n) const;
    // a/b with both reduced mod p
    Fq frac(int64_t a, int64_t b) const { return el(a) / el(b); }
    Fq from_index(uint64_t v) const;
    Fq from_coeffs(std::span<const uint64_t> c) const;
    // polynomial-basis coefficient lifts, low-to-high (size k)
    std::vector<uint64_t> coeffs(Fq x) const;

    // canonical total order: coefficient tuples compared lexicographically
    // on integer lifts, constant term first (plain value order when k = 1)
    bool canonical_less(Fq a, Fq b) const;

    bool is_square(Fq x) const { assert(x.field_ptr() == this); return sqrt_[x.index()] != kNoSqrt; }
    // least square root in canonical order; absent for non-squares
    std::optional<Fq> sqrt(Fq x) const;
    // canonically least non-square
    Fq nonsquare() const { return Fq(this, nonsquare_); }
    // canonically least primitive cube root of unity; present iff q = 1 mod 3
    std::optional<Fq> cube_root_of_unity() const;

    // index-level arithmetic
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;

    // all q elements in index order (index order == canonical order iff k = 1)
    uint64_t size() const { return q_; }

    ~Field() = default;
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field() = default;
    void build_tables();

    uint64_t p_ = 0, q_ = 0;
    unsigned k_ = 0;
    uint32_t one_ = 1;
    std::vector<uint64_t> modulus_;     // lifts, size k+1, monic (k>1 only)
    std::vector<uint32_t> inv_;         // size q (k=1 only)
    std::vector<uint32_t> exp_, log_;   // k>1 only
    static constexpr uint32_t kNoSqrt = UINT32_MAX;
    std::vector<uint32_t> sqrt_;        // least root, or kNoSqrt
    uint32_t nonsquare_ = 0;
    uint32_t omega_ = 0;                // 0 when absent (0 is never a cube root of 1)
};

inline bool Fq::is_zero() const { return v_ == 0; }

inline Fq operator+(Fq a, Fq b) {
    assert(a.f_ == b.f_ && a.f_);
    return Fq(a.f_, a.f_->add(a.v_, b.v_));
}
inline Fq operator-(Fq a, Fq b) {
    assert(a.f_ == b.f_ && a.f_);
    return Fq(a.f_, a.f_->sub(a.v_, b.v_));
}
inline Fq operator*(Fq a, Fq b) {
    assert(a.f_ == b.f_ && a.f_);
    return Fq(a.f_, a.f_->mul(a.v_, b.v_));
}
inline Fq operator/(Fq a, Fq b) {
    assert(a.f_ == b.f_ && a.f_);
    return Fq(a.f_, a.f_->mul(a.v_, b.f_->inv(b.v_)));
}
inline Fq Fq::operator-() const { assert(f_); return Fq(f_, f_->neg(v_)); }
inline Fq Fq::inv() const { assert(f_); return Fq(f_, f_->inv(v_)); }
inline Fq Fq::pow(uint64_t e) const { assert(f_); return Fq(f_, f_->pow(v_, e)); }

// integer lift string: the canonical index (residue when k = 1)
std::string to_string(Fq x);

} // namespace tcub
