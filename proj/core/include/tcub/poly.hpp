#pragma once

#include <vector>

#include "tcub/field.hpp"

namespace tcub {

// Univariate polynomial over a field, coefficients low-to-high, normalized so
// the leading coefficient is nonzero (the zero polynomial has no coefficients).
class UniPoly {
public:
    explicit UniPoly(FieldPtr f) : f_(std::move(f)) {}
    UniPoly(FieldPtr f, std::vector<Fq> coeffs);
    static UniPoly x(const FieldPtr& f);
    static UniPoly constant(const FieldPtr& f, Fq c);
    // lifts reduced mod p
    static UniPoly from_lifts(const FieldPtr& f, std::span<const uint64_t> lifts);

    const FieldPtr& field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; } // -1 for zero
    Fq coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[size_t(i)] : f_->zero(); }
    const std::vector<Fq>& coeffs() const { return c_; }
    Fq leading() const;

    UniPoly monic() const;
    Fq eval(Fq x) const;
    UniPoly derivative() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    // quotient/remainder; divisor must be nonzero
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

    bool is_irreducible() const;

private:
    FieldPtr f_;
    std::vector<Fq> c_;
    void trim();
};

// monic gcd; gcd(f, 0) = monic(f)
UniPoly poly_gcd(UniPoly a, UniPoly b);
// base^e mod m by square-and-multiply; m must be nonzero (ZeroModulus)
UniPoly poly_powmod(const UniPoly& base, uint64_t e, const UniPoly& m);

// lexicographically least monic irreducible of degree k over the prime field,
// returned as coefficient lifts low-to-high (size k+1)
std::vector<uint64_t> least_irreducible(const FieldPtr& prime_field, unsigned k);

} // namespace tcub
