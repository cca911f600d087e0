#include "tcub/census.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace tcub {

namespace {

std::string profile_str(const std::array<uint64_t, 5>& c) {
    std::ostringstream os;
    os << "(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << "," << c[4] << ")";
    return os.str();
}

void check_bound(const Field& f, uint64_t bound) {
    if (f.q() > bound)
        fail(Errc::BoundExceeded,
             "q = " + std::to_string(f.q()) + " exceeds the census bound " + std::to_string(bound));
}

} // namespace

std::array<uint64_t, 5> point_census(const FieldPtr& f, uint64_t bound) {
    check_bound(*f, bound);
    std::array<uint64_t, 5> sizes{};
    for (const PointP3& p : pg3_points(*f)) sizes[size_t(point_classify(p) - 1)]++;
    return sizes;
}

std::vector<GL2> pgl2_elements(const Field& f) {
    std::vector<GL2> out;
    uint64_t q = f.q();
    out.reserve(q * q * q);
    std::array<Fq, 4> t;
    for (int lead = 0; lead < 4; ++lead) {
        for (int i = 0; i < lead; ++i) t[size_t(i)] = f.zero();
        t[size_t(lead)] = f.one();
        uint64_t total = 1;
        for (int i = lead + 1; i < 4; ++i) total *= q;
        for (uint64_t code = 0; code < total; ++code) {
            uint64_t rest = code;
            for (int i = lead + 1; i < 4; ++i) {
                t[size_t(i)] = f.from_index(rest % q);
                rest /= q;
            }
            GL2 g{t[0], t[1], t[2], t[3]};
            if (!g.det().is_zero()) out.push_back(g);
        }
    }
    return out;
}

namespace {

// label used for the orbit-refinement check
struct OrbitLabel {
    bool generic = false;
    int ftype = -1;
    uint64_t j = 0;
    bool has_r = false;
    uint64_t r = 0;
    int cls = -1;
    bool operator==(const OrbitLabel&) const = default;
    bool operator<(const OrbitLabel& o) const {
        return std::tie(generic, ftype, j, has_r, r, cls) <
               std::tie(o.generic, o.ftype, o.j, o.has_r, o.r, o.cls);
    }
    std::string str() const {
        std::ostringstream os;
        if (!generic) return std::string("nongeneric:") + std::to_string(cls);
        os << "generic:" << ftype << ":j=" << j << ":r=" << (has_r ? std::to_string(r) : "-");
        return os.str();
    }
};

OrbitLabel label_of(const Line& l) {
    OrbitLabel lab;
    lab.generic = line_nature(l).generic;
    if (lab.generic) {
        BinaryForm phi = l.quartic();
        lab.ftype = int(factor_type(phi));
        lab.j = j_invariant(phi).index();
        if (!l.z5().is_zero()) {
            lab.has_r = true;
            lab.r = (inv_J(phi) / l.z5().pow(3)).index();
        }
    } else {
        lab.cls = int(classify_nongeneric(l));
    }
    return lab;
}

uint64_t key_of(const std::array<Fq, 6>& z, uint64_t q) {
    uint64_t k = 0;
    for (int i = 0; i < 6; ++i) k = k * q + z[size_t(i)].index();
    return k;
}

// visited marker with concurrent insert-if-absent: flat byte array while q^6
// fits in memory comfortably, hash map otherwise
class VisitedSet {
public:
    explicit VisitedSet(uint64_t q) {
        uint64_t keyspace = 1;
        bool fits = true;
        for (int i = 0; i < 6; ++i) {
            if (keyspace > kFlatLimit / q) {
                fits = false;
                break;
            }
            keyspace *= q;
        }
        if (fits && keyspace <= kFlatLimit) flat_ = std::make_unique<std::atomic<uint8_t>[]>(keyspace);
        if (flat_)
            for (uint64_t i = 0; i < keyspace; ++i) flat_[i].store(0, std::memory_order_relaxed);
    }
    bool seen(uint64_t k) {
        if (flat_) return flat_[k].load(std::memory_order_relaxed) != 0;
        std::lock_guard<std::mutex> lock(mu_);
        return map_.count(k) != 0;
    }
    // returns true when this caller owns the key (0 -> owner transition)
    bool claim(uint64_t k) {
        if (flat_) {
            uint8_t expected = 0;
            return flat_[k].compare_exchange_strong(expected, 2, std::memory_order_acq_rel);
        }
        std::lock_guard<std::mutex> lock(mu_);
        return map_.emplace(k, 2).second;
    }
    void mark(uint64_t k) {
        if (flat_) {
            flat_[k].store(1, std::memory_order_relaxed);
            return;
        }
        std::lock_guard<std::mutex> lock(mu_);
        map_.emplace(k, 1);
    }

private:
    static constexpr uint64_t kFlatLimit = uint64_t(1) << 26;
    std::unique_ptr<std::atomic<uint8_t>[]> flat_;
    std::mutex mu_;
    std::unordered_map<uint64_t, uint8_t> map_;
};

std::array<Fq, 6> canonicalize(std::array<Fq, 6> z) {
    for (int i = 0; i < 6; ++i) {
        if (!z[size_t(i)].is_zero()) {
            Fq s = z[size_t(i)].inv();
            for (auto& v : z) v = v * s;
            return z;
        }
    }
    fail(Errc::ZeroForm, "internal: zero image under the line action");
}

bool tuple_canonical_less(const Field& f, const std::array<Fq, 6>& a, const std::array<Fq, 6>& b) {
    for (int i = 0; i < 6; ++i) {
        if (a[size_t(i)] == b[size_t(i)]) continue;
        return f.canonical_less(a[size_t(i)], b[size_t(i)]);
    }
    return false;
}

} // namespace

OrbitCensus line_census(const FieldPtr& fp, unsigned threads, uint64_t bound) {
    const Field& f = *fp;
    check_bound(f, bound);
    uint64_t q = f.q();
    int mu = f.mu();
    uint64_t gorder = q * q * q - q;

    OrbitCensus out;
    out.field = fp;
    out.point_orbit_sizes = point_census(fp, bound);

    std::vector<Line> lines = klein_points(f);
    out.line_count = lines.size();

    std::vector<GL2> group = pgl2_elements(f);
    std::vector<Mat<6>> mats;
    mats.reserve(group.size());
    for (const GL2& g : group) mats.push_back(g5_tilde(g));

    VisitedSet visited(q);

    struct Rec {
        std::array<Fq, 6> rep;
        uint64_t size;
        bool labels_ok;
    };
    unsigned nthreads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::vector<Rec>> found(nthreads);
    std::atomic<size_t> cursor{0};
    std::exception_ptr workerError;
    std::mutex errorMu;

    auto worker = [&](unsigned tid) {
        std::vector<std::array<Fq, 6>> members;
        while (true) {
            size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
            if (i >= lines.size()) break;
            const auto& z0 = lines[i].z();
            if (visited.seen(key_of(z0, q))) continue;
            members.clear();
            for (const auto& M : mats) members.push_back(canonicalize(M * z0));
            std::sort(members.begin(), members.end(),
                      [&](const auto& a, const auto& b) { return key_of(a, q) < key_of(b, q); });
            members.erase(std::unique(members.begin(), members.end()), members.end());
            // least member in the canonical tuple order is the representative
            std::array<Fq, 6> rep = members[0];
            for (const auto& m : members)
                if (tuple_canonical_less(f, m, rep)) rep = m;
            if (!visited.claim(key_of(rep, q))) continue; // another worker owns this orbit
            OrbitLabel lab = label_of(Line::from_coords(rep));
            bool labels_ok = true;
            for (const auto& m : members) {
                if (m != rep) visited.mark(key_of(m, q));
                if (!(label_of(Line::from_coords(m)) == lab)) labels_ok = false;
            }
            found[tid].push_back(Rec{rep, members.size(), labels_ok});
        }
    };
    auto guarded = [&](unsigned tid) {
        try {
            worker(tid);
        } catch (...) {
            std::lock_guard<std::mutex> lock(errorMu);
            if (!workerError) workerError = std::current_exception();
            cursor.store(lines.size(), std::memory_order_relaxed); // drain the queue
        }
    };
    if (nthreads == 1) {
        guarded(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(guarded, t);
        for (auto& th : pool) th.join();
    }
    if (workerError) std::rethrow_exception(workerError);

    std::vector<Rec> recs;
    for (auto& v : found) recs.insert(recs.end(), v.begin(), v.end());
    std::sort(recs.begin(), recs.end(),
              [&](const Rec& a, const Rec& b) { return key_of(a.rep, q) < key_of(b.rep, q); });

    bool labels_ok = true;
    uint64_t member_total = 0;
    std::map<OrbitLabel, uint64_t> by_label;
    for (const Rec& r : recs) {
        Line rep = Line::from_coords(r.rep);
        LineOrbit o;
        o.rep = r.rep;
        o.size = r.size;
        member_total += r.size;
        o.generic = line_nature(rep).generic;
        if (o.generic) {
            BinaryForm phi = rep.quartic();
            o.ftype = factor_type(phi);
            o.j = j_invariant(phi);
            if (!rep.z5().is_zero()) o.r = inv_J(phi) / rep.z5().pow(3);
        } else {
            o.cls = classify_nongeneric(rep);
            if (!rep.z5().is_zero()) o.r = inv_J(rep.quartic()) / rep.z5().pow(3);
        }
        o.profile = decompose(rep);
        out.orbits.push_back(std::move(o));
        labels_ok &= r.labels_ok;
        by_label[label_of(rep)]++;
        if (line_nature(rep).generic) {
            out.generic_orbits++;
            out.generic_histogram[gorder / r.size]++;
        }
    }

    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.checks.push_back(CheckResult{name, pass, pass ? "" : detail});
    };

    // point orbit sizes
    std::array<uint64_t, 5> wantPts{q + 1, q * (q + 1), (q * q * q - q) / 6, q * (q * q - 1) / 2,
                                    (q * q * q - q) / 3};
    add("point_orbit_sizes", out.point_orbit_sizes == wantPts,
        "got " + profile_str(out.point_orbit_sizes) + " want " + profile_str(wantPts));
    add("point_total",
        out.point_orbit_sizes[0] + out.point_orbit_sizes[1] + out.point_orbit_sizes[2] +
                out.point_orbit_sizes[3] + out.point_orbit_sizes[4] ==
            q * q * q + q * q + q + 1);
    add("line_count", out.line_count == (q * q + 1) * (q * q + q + 1),
        "got " + std::to_string(out.line_count));
    add("orbit_partition", member_total == out.line_count,
        "orbit sizes sum to " + std::to_string(member_total));
    add("generic_orbit_count", out.generic_orbits == uint64_t(int64_t(2 * q) - 3 + mu),
        "got " + std::to_string(out.generic_orbits) + " want " +
            std::to_string(int64_t(2 * q) - 3 + mu));

    bool divides = true;
    for (const auto& o : out.orbits)
        if (gorder % o.size) divides = false;
    add("orbit_sizes_divide_group", divides);

    // histogram totals row
    std::map<uint64_t, uint64_t> wantHist;
    auto put = [&](uint64_t d, uint64_t n) {
        if (n) wantHist[d] = n;
    };
    put(1, uint64_t(int64_t(q) - mu) / 3);
    put(2, q - 1);
    put(3, uint64_t(1 + mu));
    put(4, uint64_t(int64_t(2 * q) - 10 - (1 + mu) / 2) / 3);
    put(12, uint64_t(1 + mu) / 2);
    add("generic_size_histogram", out.generic_histogram == wantHist);

    // histogram split by j-class
    uint64_t j1728 = 1728 % q;
    std::map<uint64_t, uint64_t> histMid, hist1728, hist0;
    for (const auto& o : out.orbits) {
        if (!o.generic) continue;
        uint64_t d = gorder / o.size;
        uint64_t jv = o.j->index();
        (jv == 0 ? hist0 : jv == j1728 ? hist1728 : histMid)[d]++;
    }
    std::map<uint64_t, uint64_t> wantMid, want1728, want0;
    auto put2 = [](std::map<uint64_t, uint64_t>& m, uint64_t d, uint64_t n) {
        if (n) m[d] = n;
    };
    put2(wantMid, 1, 2 * expected_j1_plus(q));
    put2(wantMid, 2, 4 * expected_j2_plus(q));
    put2(wantMid, 4, 8 * expected_j4_plus(q));
    bool pm1mod12 = (q % 12 == 1 || q % 12 == 11);
    if (pm1mod12)
        put2(want1728, 4, 4);
    else
        put2(want1728, 2, 2);
    put2(want0, 2, uint64_t(1 - mu));
    put2(want0, 3, uint64_t(1 + mu));
    put2(want0, 4, uint64_t(1 + mu) / 2);
    put2(want0, 12, uint64_t(1 + mu) / 2);
    add("histogram_by_j_class", histMid == wantMid && hist1728 == want1728 && hist0 == want0);

    // ten non-generic orbits with the expected classes and sizes
    std::map<NongenericClass, uint64_t> ngSizes;
    uint64_t ngCount = 0;
    for (const auto& o : out.orbits)
        if (!o.generic) {
            ngCount++;
            ngSizes[*o.cls] += 0; // ensure key
            ngSizes[*o.cls] = o.size;
        }
    add("nongeneric_orbit_count", ngCount == 10, "got " + std::to_string(ngCount));
    std::map<NongenericClass, uint64_t> wantNg{
        {NongenericClass::Tangent, q + 1},
        {NongenericClass::OsculatingUnisecant, q * q + q},
        {NongenericClass::Secant, (q * q + q) / 2},
        {NongenericClass::RealAxis, (q * q + q) / 2},
        {NongenericClass::ImaginarySecant, (q * q - q) / 2},
        {NongenericClass::ImaginaryAxis, (q * q - q) / 2},
        {NongenericClass::Unisecant51, (q * q * q - q) / 2},
        {NongenericClass::External51, (q * q * q - q) / 2},
        {NongenericClass::Unisecant52, (q * q * q - q) / 2},
        {NongenericClass::External52, (q * q * q - q) / 2},
    };
    add("nongeneric_orbit_sizes", ngSizes == wantNg);

    // the canonical representatives of the ten classes land in orbits of the
    // matching class
    Fq e = f.nonsquare();
    Fq z0 = f.zero(), z1 = f.one();
    auto mk = [&](std::initializer_list<Fq> t) {
        std::vector<Fq> v(t);
        return Line::from_coords(v);
    };
    std::vector<std::pair<Line, NongenericClass>> classReps{
        {mk({z0, z0, z0, z0, z1, z0}), NongenericClass::Tangent},
        {mk({z0, z0, z0, z1, z0, z0}), NongenericClass::OsculatingUnisecant},
        {mk({z0, z0, z1, z0, z0, z1}), NongenericClass::Secant},
        {mk({z0, z0, z1, z0, z0, -z1}), NongenericClass::RealAxis},
        {mk({e * e, z0, -e / f.el(3), z0, z1, f.el(2) * e / f.el(3)}), NongenericClass::ImaginarySecant},
        {mk({e * e, z0, -e / f.el(3), z0, z1, f.el(-2) * e / f.el(3)}), NongenericClass::ImaginaryAxis},
        {mk({z0, z0, e, z0, f.el(-6), e}), NongenericClass::Unisecant51},
        {mk({z0, z0, e, z0, f.el(-6), -e}), NongenericClass::External51},
        {mk({z0, z0, f.el(2), f.el(3), z0, f.el(2)}), NongenericClass::Unisecant52},
        {mk({z0, z0, f.el(2), f.el(3), z0, f.el(-2)}), NongenericClass::External52},
    };
    bool repsOk = true;
    for (const auto& [rep, cls] : classReps) {
        if (classify_nongeneric(rep) != cls) repsOk = false;
        // membership: the rep's orbit representative appears in the census
        std::array<Fq, 6> least = rep.z();
        for (const auto& M : mats) {
            auto img = canonicalize(M * rep.z());
            if (tuple_canonical_less(f, img, least)) least = img;
        }
        bool foundRep = false;
        for (const auto& o : out.orbits)
            if (o.rep == least && !o.generic && *o.cls == cls) foundRep = true;
        if (!foundRep) repsOk = false;
    }
    add("nongeneric_rep_membership", repsOk);

    add("label_invariance", labels_ok);

    // labels carried by several orbits: F4' values split three ways (one
    // quartic-form class per cross-ratio pair under the smaller symmetry
    // group), and the two F1 orbits at j = 0 share a label since z5 = 0
    // leaves no r to separate them
    bool splitsOk = true;
    for (const auto& [lab, n] : by_label) {
        if (n <= 1) continue;
        out.label_splits.push_back({lab.str(), n});
        bool f4p = lab.generic && lab.ftype == int(FactorType::F4Prime) && n == 3;
        bool f1z = lab.generic && lab.ftype == int(FactorType::F1) && lab.j == 0 && n == 2;
        if (!f4p && !f1z) splitsOk = false;
    }
    add("label_splits", splitsOk);

    return out;
}

uint64_t expected_j1_plus(uint64_t q) { return uint64_t(int64_t(q) - (q % 3 == 1 ? 1 : -1)) / 6; }

uint64_t expected_j2_plus(uint64_t q) {
    switch (q % 12) {
    case 1: return (q - 1) / 4;
    case 7: return (q - 3) / 4;
    case 5: return (q - 5) / 4;
    default: return (q - 3) / 4; // q = 11 mod 12
    }
}

uint64_t expected_j4_plus(uint64_t q) {
    switch (q % 12) {
    case 1: return (q - 13) / 12;
    case 5: return (q - 5) / 12;
    case 7: return (q - 7) / 12;
    default: return (q - 11) / 12;
    }
}

JSetCensus j_set_census(const FieldPtr& fp, uint64_t bound) {
    const Field& f = *fp;
    check_bound(f, bound);
    if (f.k() != 1)
        fail(Errc::BoundExceeded, "the j-set census needs a prime base field");
    uint64_t q = f.q();
    int mu = f.mu();
    FieldPtr f2 = Field::make(f.p(), 2);
    FieldPtr f3 = Field::make(f.p(), 3);

    JSetCensus out;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.checks.push_back(CheckResult{name, pass, pass ? "" : detail});
    };

    auto exceptional = [](const Field& ext) {
        std::vector<Fq> bad{ext.el(-1), ext.el(2), ext.el(2).inv()};
        if (auto w = ext.cube_root_of_unity()) {
            bad.push_back(-*w);
            bad.push_back(-(*w * *w));
        }
        return bad;
    };
    auto is_exceptional = [&](const std::vector<Fq>& bad, Fq x) {
        for (Fq b : bad)
            if (b == x) return true;
        return false;
    };
    // j of a subfield-valued cross-ratio, as a base-field lift
    auto j_down = [&](Fq lambda, const Field& ext) -> uint64_t {
        Fq j = j_of_lambda(lambda);
        if (j.index() >= ext.p())
            fail(Errc::IntegralityViolation, "internal: j-image not in the base field");
        return j.index();
    };

    std::vector<uint64_t> J4, J2, J1;
    {
        auto bad = exceptional(f);
        for (uint64_t v = 2; v < q; ++v) {
            Fq lam = f.from_index(v);
            if (is_exceptional(bad, lam)) continue;
            J4.push_back(j_down(lam, f));
        }
    }
    {
        const Field& e = *f2;
        auto bad = exceptional(e);
        for (uint64_t v = 0; v < e.q(); ++v) {
            Fq lam = e.from_index(v);
            if (lam == e.one() || lam.is_zero()) continue;
            if (lam.pow(q + 1) != e.one()) continue;
            if (is_exceptional(bad, lam)) continue;
            J2.push_back(j_down(lam, e));
        }
    }
    {
        const Field& e = *f3;
        auto bad = exceptional(e);
        for (uint64_t v = 0; v < e.q(); ++v) {
            Fq lam = e.from_index(v);
            if (lam.is_zero() || lam == e.one()) continue;
            if (lam.pow(q + 1) - lam.pow(q) + e.one() != e.zero()) continue;
            if (is_exceptional(bad, lam)) continue;
            J1.push_back(j_down(lam, e));
        }
    }
    auto dedup = [](std::vector<uint64_t>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(J4);
    dedup(J2);
    dedup(J1);
    out.J4 = J4;
    out.J2 = J2;
    out.J1 = J1;
    out.j4 = J4.size();
    out.j2 = J2.size();
    out.j1 = J1.size();

    uint64_t want4 = uint64_t(int64_t(q) - 6 - mu) / 6;
    uint64_t want2 = uint64_t(int64_t(q) - 2 + mu) / 2;
    uint64_t want1 = uint64_t(int64_t(q) - mu) / 3;
    add("j_set_sizes", out.j4 == want4 && out.j2 == want2 && out.j1 == want1,
        "got (" + std::to_string(out.j4) + "," + std::to_string(out.j2) + "," +
            std::to_string(out.j1) + ") want (" + std::to_string(want4) + "," +
            std::to_string(want2) + "," + std::to_string(want1) + ")");

    // disjoint, and the union is F_q minus {0, 1728}
    std::vector<uint64_t> all;
    all.insert(all.end(), J4.begin(), J4.end());
    all.insert(all.end(), J2.begin(), J2.end());
    all.insert(all.end(), J1.begin(), J1.end());
    std::sort(all.begin(), all.end());
    bool disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();
    std::vector<uint64_t> target;
    for (uint64_t v = 0; v < q; ++v)
        if (v != 0 && v != 1728 % q) target.push_back(v);
    add("j_set_partition", disjoint && all == target);

    Fq t1728 = f.el(1728);
    auto plus_count = [&](const std::vector<uint64_t>& J) {
        uint64_t n = 0;
        for (uint64_t v : J) {
            Fq r = f.from_index(v);
            if (f.is_square(r / (r - t1728))) ++n;
        }
        return n;
    };
    out.j4p = plus_count(J4);
    out.j2p = plus_count(J2);
    out.j1p = plus_count(J1);
    add("j_plus_sizes",
        out.j4p == expected_j4_plus(q) && out.j2p == expected_j2_plus(q) &&
            out.j1p == expected_j1_plus(q),
        "got (" + std::to_string(out.j4p) + "," + std::to_string(out.j2p) + "," +
            std::to_string(out.j1p) + ")");

    return out;
}

} // namespace tcub
