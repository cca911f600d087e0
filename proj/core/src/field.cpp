#include "tcub/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>

#include "tcub/poly.hpp"

namespace tcub {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::BadCharacteristic: return "BadCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroModulus: return "ZeroModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::SingularForm: return "SingularForm";
    case Errc::ZeroForm: return "ZeroForm";
    case Errc::BadLambda: return "BadLambda";
    case Errc::DependentForms: return "DependentForms";
    case Errc::NotOnQuadric: return "NotOnQuadric";
    case Errc::OsculatingLine: return "OsculatingLine";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::NonGenericLine: return "NonGenericLine";
    case Errc::IntegralityViolation: return "IntegralityViolation";
    case Errc::UnclassifiableLine: return "UnclassifiableLine";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

constexpr uint64_t kMaxQ = 1u << 20; // table-based arithmetic; desk scale

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// n = r^e with r prime, e >= 1?  returns r, else 0
uint64_t prime_power_base(uint64_t n) {
    if (n < 2) return 0;
    for (uint64_t r = 2; r * r <= n; ++r) {
        if (n % r) continue;
        uint64_t m = n;
        while (m % r == 0) m /= r;
        return m == 1 ? r : 0;
    }
    return n; // prime
}

struct InternKey {
    uint64_t p;
    unsigned k;
    std::vector<uint64_t> mod;
    bool operator<(const InternKey& o) const {
        return std::tie(p, k, mod) < std::tie(o.p, o.k, o.mod);
    }
};

std::map<InternKey, FieldPtr>& intern_cache() {
    static std::map<InternKey, FieldPtr> cache;
    return cache;
}
std::mutex& intern_mutex() {
    static std::mutex m;
    return m;
}

// digits of v in base p, low first, padded to k
inline void digits_of(uint64_t v, uint64_t p, unsigned k, uint32_t* out) {
    for (unsigned i = 0; i < k; ++i) {
        out[i] = uint32_t(v % p);
        v /= p;
    }
}

} // namespace

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (k_ == 1) {
        uint64_t s = uint64_t(a) + b;
        return uint32_t(s >= p_ ? s - p_ : s);
    }
    uint32_t da[8], db[8];
    digits_of(a, p_, k_, da);
    digits_of(b, p_, k_, db);
    uint64_t v = 0, pw = 1;
    for (unsigned i = 0; i < k_; ++i) {
        uint64_t s = uint64_t(da[i]) + db[i];
        if (s >= p_) s -= p_;
        v += s * pw;
        pw *= p_;
    }
    return uint32_t(v);
}

uint32_t Field::neg(uint32_t a) const {
    if (k_ == 1) return a == 0 ? 0 : uint32_t(p_ - a);
    uint32_t da[8];
    digits_of(a, p_, k_, da);
    uint64_t v = 0, pw = 1;
    for (unsigned i = 0; i < k_; ++i) {
        v += (da[i] ? p_ - da[i] : 0) * pw;
        pw *= p_;
    }
    return uint32_t(v);
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (k_ == 1) return uint32_t(uint64_t(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    if (k_ == 1) return inv_[a];
    return exp_[uint32_t(q_ - 1) - log_[a]];
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? one_ : 0;
    if (k_ > 1) return exp_[uint64_t(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
    uint64_t r = 1, b = a;
    while (e) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return uint32_t(r);
}

Fq Field::el(int64_t n) const {
    int64_t r = n % int64_t(p_);
    if (r < 0) r += int64_t(p_);
    return Fq(this, uint32_t(r));
}

Fq Field::from_index(uint64_t v) const {
    if (v >= q_) fail(Errc::ParseError, "element index out of range");
    return Fq(this, uint32_t(v));
}

Fq Field::from_coeffs(std::span<const uint64_t> c) const {
    if (c.size() > k_) fail(Errc::ParseError, "too many coefficients for this field");
    uint64_t v = 0, pw = 1;
    for (unsigned i = 0; i < k_; ++i) {
        v += (i < c.size() ? c[i] % p_ : 0) * pw;
        pw *= p_;
    }
    return Fq(this, uint32_t(v));
}

std::vector<uint64_t> Field::coeffs(Fq x) const {
    assert(x.field_ptr() == this);
    std::vector<uint64_t> out(k_);
    uint64_t v = x.index();
    for (unsigned i = 0; i < k_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
    return out;
}

bool Field::canonical_less(Fq a, Fq b) const {
    if (k_ == 1) return a.index() < b.index();
    uint64_t va = a.index(), vb = b.index();
    for (unsigned i = 0; i < k_; ++i) {
        uint64_t ca = va % p_, cb = vb % p_;
        if (ca != cb) return ca < cb;
        va /= p_;
        vb /= p_;
    }
    return false;
}

std::optional<Fq> Field::sqrt(Fq x) const {
    assert(x.field_ptr() == this);
    uint32_t r = sqrt_[x.index()];
    if (r == kNoSqrt) return std::nullopt;
    return Fq(this, r);
}

std::optional<Fq> Field::cube_root_of_unity() const {
    if (omega_ == 0) return std::nullopt;
    return Fq(this, omega_);
}

void Field::build_tables() {
    one_ = 1;
    if (k_ > 1) {
        // exp/log w.r.t. a multiplicative generator, plus Zech logs for addition
        std::vector<uint64_t> primes;
        uint64_t m = q_ - 1;
        for (uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                primes.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) primes.push_back(m);

        // polynomial multiplication mod the modulus, index-level (slow path,
        // used only while bootstrapping the tables)
        auto raw_mul = [&](uint32_t a, uint32_t b) -> uint32_t {
            uint32_t da[8], db[8];
            digits_of(a, p_, k_, da);
            digits_of(b, p_, k_, db);
            uint64_t prod[16] = {0};
            for (unsigned i = 0; i < k_; ++i)
                if (da[i])
                    for (unsigned j = 0; j < k_; ++j)
                        prod[i + j] = (prod[i + j] + uint64_t(da[i]) * db[j]) % p_;
            for (int d = int(2 * k_ - 2); d >= int(k_); --d) {
                uint64_t c = prod[d];
                if (!c) continue;
                prod[d] = 0;
                for (unsigned i = 0; i < k_; ++i) {
                    uint64_t t = prod[d - k_ + i] + (p_ - modulus_[i] % p_) * c % p_;
                    prod[d - k_ + i] = t % p_;
                }
            }
            uint64_t v = 0, pw = 1;
            for (unsigned i = 0; i < k_; ++i) {
                v += prod[i] * pw;
                pw *= p_;
            }
            return uint32_t(v);
        };
        auto raw_pow = [&](uint32_t a, uint64_t e) {
            uint32_t r = 1, b = a;
            while (e) {
                if (e & 1) r = raw_mul(r, b);
                b = raw_mul(b, b);
                e >>= 1;
            }
            return r;
        };
        uint32_t gen = 0;
        for (uint64_t cand = 1; cand < q_; ++cand) {
            bool ok = raw_pow(uint32_t(cand), q_ - 1) == 1;
            for (uint64_t r : primes)
                if (ok && raw_pow(uint32_t(cand), (q_ - 1) / r) == 1) ok = false;
            if (ok) {
                gen = uint32_t(cand);
                break;
            }
        }
        assert(gen);
        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        uint32_t cur = 1;
        for (uint64_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = cur;
            exp_[i + (q_ - 1)] = cur;
            log_[cur] = uint32_t(i);
            cur = raw_mul(cur, gen);
        }
    } else {
        inv_.assign(q_, 0);
        inv_[1] = 1;
        for (uint64_t i = 2; i < q_; ++i)
            inv_[i] = uint32_t(p_ - (p_ / i) * inv_[p_ % i] % p_);
    }

    sqrt_.assign(q_, kNoSqrt);
    for (uint64_t y = 0; y < q_; ++y) {
        uint32_t x = mul(uint32_t(y), uint32_t(y));
        if (sqrt_[x] == kNoSqrt || canonical_less(Fq(this, uint32_t(y)), Fq(this, sqrt_[x])))
            sqrt_[x] = uint32_t(y);
    }

    // canonically least nonsquare / primitive cube root of unity
    std::vector<uint32_t> order(q_);
    for (uint64_t i = 0; i < q_; ++i) order[i] = uint32_t(i);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return canonical_less(Fq(this, a), Fq(this, b));
    });
    nonsquare_ = 0;
    for (uint32_t v : order)
        if (sqrt_[v] == kNoSqrt) {
            nonsquare_ = v;
            break;
        }
    assert(nonsquare_ != 0);
    omega_ = 0;
    if ((q_ - 1) % 3 == 0) {
        for (uint32_t v : order) {
            if (v == 0 || v == one_) continue;
            if (add(add(mul(v, v), v), one_) == 0) {
                omega_ = v;
                break;
            }
        }
        assert(omega_ != 0);
    }
}

FieldPtr Field::make(uint64_t p, unsigned k, std::span<const uint64_t> modulus) {
    if (p == 2 || p == 3) fail(Errc::BadCharacteristic, "characteristic 2 and 3 are excluded");
    if (k < 1) fail(Errc::FieldTooSmall, "extension degree must be at least 1");
    uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > kMaxQ / std::max<uint64_t>(p, 1)) fail(Errc::BoundExceeded, "field too large for table-based arithmetic");
        q *= p;
    }
    if (q <= 4) fail(Errc::FieldTooSmall, "q > 4 is required");
    if (!is_prime_u64(p)) {
        if (uint64_t r = prime_power_base(p); r == 2 || r == 3)
            fail(Errc::BadCharacteristic, "characteristic 2 and 3 are excluded");
        fail(Errc::NotPrime, "p must be prime (write p^k for prime powers)");
    }

    std::vector<uint64_t> mod;
    if (k > 1) {
        FieldPtr base = Field::make(p, 1);
        if (!modulus.empty()) {
            if (modulus.size() != k + 1) fail(Errc::ReducibleModulus, "modulus must have degree k");
            mod.assign(modulus.begin(), modulus.end());
            for (auto& c : mod) c %= p;
            if (mod[k] != 1) fail(Errc::ReducibleModulus, "modulus must be monic");
            std::vector<Fq> cs;
            for (auto c : mod) cs.push_back(base->el(int64_t(c)));
            if (!UniPoly(base, cs).is_irreducible()) fail(Errc::ReducibleModulus, "modulus is reducible");
        } else {
            mod = least_irreducible(base, k);
        }
    }

    InternKey key{p, k, mod};
    std::lock_guard<std::mutex> lock(intern_mutex());
    auto& cache = intern_cache();
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->k_ = k;
    f->q_ = q;
    f->modulus_ = mod;
    f->build_tables();
    cache[key] = f;
    return f;
}

FieldPtr Field::make(uint64_t p, unsigned k, const UniPoly& modulus) {
    std::vector<uint64_t> lifts;
    for (Fq c : modulus.coeffs()) lifts.push_back(c.index());
    return make(p, k, lifts);
}

FieldPtr Field::parse(std::string_view spec) {
    auto parse_u64 = [](std::string_view s) -> uint64_t {
        uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            fail(Errc::ParseError, "bad field spec number: '" + std::string(s) + "'");
        return v;
    };
    size_t caret = spec.find('^');
    if (caret == std::string_view::npos) return make(parse_u64(spec));
    uint64_t p = parse_u64(spec.substr(0, caret));
    std::string_view rest = spec.substr(caret + 1);
    size_t slash = rest.find('/');
    if (slash == std::string_view::npos) return make(p, unsigned(parse_u64(rest)));
    unsigned k = unsigned(parse_u64(rest.substr(0, slash)));
    std::vector<uint64_t> mod;
    std::string_view coeffs = rest.substr(slash + 1);
    while (!coeffs.empty()) {
        size_t comma = coeffs.find(',');
        mod.push_back(parse_u64(coeffs.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        coeffs = coeffs.substr(comma + 1);
    }
    return make(p, k, mod);
}

std::string Field::spec_string() const {
    std::string s = std::to_string(p_);
    if (k_ > 1) {
        s += "^" + std::to_string(k_) + "/";
        for (size_t i = 0; i < modulus_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(modulus_[i]);
        }
    }
    return s;
}

std::string to_string(Fq x) { return std::to_string(x.index()); }

} // namespace tcub
