#include "tcub/poly.hpp"

namespace tcub {

UniPoly::UniPoly(FieldPtr f, std::vector<Fq> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::x(const FieldPtr& f) {
    return UniPoly(f, {f->zero(), f->one()});
}

UniPoly UniPoly::constant(const FieldPtr& f, Fq c) {
    return UniPoly(f, {c});
}

UniPoly UniPoly::from_lifts(const FieldPtr& f, std::span<const uint64_t> lifts) {
    std::vector<Fq> c;
    c.reserve(lifts.size());
    for (uint64_t v : lifts) c.push_back(f->el(int64_t(v % f->p())));
    return UniPoly(f, std::move(c));
}

Fq UniPoly::leading() const {
    if (c_.empty()) fail(Errc::ZeroForm, "zero polynomial has no leading coefficient");
    return c_.back();
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    Fq li = leading().inv();
    std::vector<Fq> out;
    out.reserve(c_.size());
    for (Fq v : c_) out.push_back(v * li);
    return UniPoly(f_, std::move(out));
}

Fq UniPoly::eval(Fq x) const {
    Fq acc = f_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Fq> out;
    for (size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * f_->el(int64_t(i)));
    return UniPoly(f_, std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Fq> out(std::max(a.c_.size(), b.c_.size()), a.f_->zero());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = (i < a.c_.size() ? a.c_[i] : a.f_->zero()) + (i < b.c_.size() ? b.c_[i] : a.f_->zero());
    return UniPoly(a.f_, std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Fq> out(std::max(a.c_.size(), b.c_.size()), a.f_->zero());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = (i < a.c_.size() ? a.c_[i] : a.f_->zero()) - (i < b.c_.size() ? b.c_[i] : a.f_->zero());
    return UniPoly(a.f_, std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.f_);
    std::vector<Fq> out(a.c_.size() + b.c_.size() - 1, a.f_->zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(a.f_, std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) fail(Errc::ZeroModulus, "division by the zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(a.f_), a};
    std::vector<Fq> rem = a.c_;
    std::vector<Fq> quo(size_t(a.degree() - b.degree()) + 1, a.f_->zero());
    Fq li = b.leading().inv();
    for (int d = a.degree(); d >= b.degree(); --d) {
        Fq c = rem[size_t(d)] * li;
        if (c.is_zero()) continue;
        quo[size_t(d - b.degree())] = c;
        for (int i = 0; i <= b.degree(); ++i)
            rem[size_t(d - b.degree() + i)] -= c * b.c_[size_t(i)];
    }
    return {UniPoly(a.f_, std::move(quo)), UniPoly(a.f_, std::move(rem))};
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = UniPoly::divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

UniPoly poly_powmod(const UniPoly& base, uint64_t e, const UniPoly& m) {
    if (m.is_zero()) fail(Errc::ZeroModulus, "powmod with zero modulus");
    UniPoly r = UniPoly::constant(base.field(), base.field()->one());
    UniPoly b = UniPoly::divmod(base, m).second;
    while (e) {
        if (e & 1) r = UniPoly::divmod(r * b, m).second;
        b = UniPoly::divmod(b * b, m).second;
        e >>= 1;
    }
    return r;
}

bool UniPoly::is_irreducible() const {
    int n = degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    uint64_t p = f_->p();
    UniPoly xp = UniPoly::x(f_);
    // x^{p^n} = x mod f, and gcd(x^{p^{n/r}} - x, f) = 1 for prime r | n
    auto frob_pow = [&](unsigned times) {
        UniPoly acc = xp;
        for (unsigned i = 0; i < times; ++i) acc = poly_powmod(acc, p, *this);
        return acc;
    };
    UniPoly full = frob_pow(unsigned(n));
    if (!(full - xp).is_zero()) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r) continue;
        bool rp = true;
        for (int d = 2; d * d <= r; ++d)
            if (r % d == 0) rp = false;
        if (!rp) continue;
        UniPoly g = poly_gcd(frob_pow(unsigned(n / r)) - xp, *this);
        if (g.degree() != 0) return false;
    }
    return true;
}

std::vector<uint64_t> least_irreducible(const FieldPtr& prime_field, unsigned k) {
    uint64_t p = prime_field->p();
    // enumerate coefficient tuples (c0,...,c_{k-1}) in lexicographic order
    std::vector<uint64_t> c(k, 0);
    while (true) {
        std::vector<Fq> cs;
        for (uint64_t v : c) cs.push_back(prime_field->el(int64_t(v)));
        cs.push_back(prime_field->one());
        if (UniPoly(prime_field, cs).is_irreducible()) {
            std::vector<uint64_t> out = c;
            out.push_back(1);
            return out;
        }
        int pos = int(k) - 1;
        while (pos >= 0 && c[size_t(pos)] == p - 1) c[size_t(pos--)] = 0;
        if (pos < 0) fail(Errc::ReducibleModulus, "no irreducible polynomial found");
        ++c[size_t(pos)];
    }
}

} // namespace tcub
