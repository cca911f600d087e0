#include <algorithm>
#include <set>
#include <sstream>

#include "tcub/census.hpp"
#include "tcub/elliptic.hpp"
#include "tcub/sampling.hpp"

namespace tcub {

namespace {

std::string line_str(const Line& l) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 6; ++i) os << (i ? "," : "") << l[i].index();
    os << ")";
    return os.str();
}

CheckResult make_check(const std::string& name, bool pass, const std::string& detail = "") {
    return CheckResult{name, pass, pass ? "" : detail};
}

template <int N>
bool mats_equal(const Mat<N>& a, const Mat<N>& b) {
    return a.a == b.a;
}

} // namespace

std::vector<CheckResult> algebraic_identity_suite(const FieldPtr& fp, uint64_t seed, int trials) {
    const Field& f = *fp;
    Sampler rng(seed);
    struct Tally {
        const char* name;
        int fails = 0;
        explicit Tally(const char* n) : name(n) {}
    };
    Tally t_act{"act_routes_agree"}, t_group{"act_group_action"}, t_ver{"act_veronese"},
        t_omega{"omega_equivariance"}, t_ij{"ij_equivariance"}, t_jinv{"j_orbit_invariance"},
        t_ft{"factor_type_invariance"}, t_mphi{"mphi_equivariance"}, t_mz{"mz_equivariance"},
        t_detmz{"det_mz_identity"}, t_dgl{"d_quartic_equivariance"},
        t_droutes{"d_quartic_routes"}, t_dinv{"d_quartic_invariants"},
        t_heval{"h_eval_identity"}, t_hdisc{"h_disc_identity"},
        t_pencil{"pencil_invariance"}, t_actline{"act_line_pencil_agree"},
        t_dualcomm{"act_dual_commute"}, t_dualortho{"dual_orthocomplement"},
        t_profinv{"profile_orbit_invariance"};

    auto conj_g2 = [&](const GL2& g, const Mat<3>& M) {
        Mat<3> gi = action_matrix_2(g.inverse());
        return gi.transposed() * M * gi;
    };

    for (int it = 0; it < trials; ++it) {
        GL2 g = rng.gl2(f);
        Fq dt = g.det();

        // form-level identities, all degrees
        for (int m = 1; m <= 4; ++m) {
            BinaryForm fa = rng.form(f, m);
            BinaryForm byM = act_matrix(g, fa);
            if (byM != act_substitution(g, fa)) t_act.fails++;
            GL2 h = rng.gl2(f);
            if (act_matrix(g * h, fa) != act_matrix(g, act_matrix(h, fa))) t_group.fails++;
            BinaryForm fb = rng.form(f, m);
            if (omega_pair(byM, act_matrix(g, fb)) != omega_pair(fa, fb) / dt.pow(uint64_t(m)))
                t_omega.fails++;
        }
        {
            Fq s = rng.fq(f), t = rng.fq(f);
            if (s.is_zero() && t.is_zero()) t = f.one();
            BinaryForm lin = linear_power(s, t, 1);
            for (int m = 2; m <= 4; ++m) {
                BinaryForm pw = linear_power(s, t, m);
                BinaryForm gl = act_matrix(g, lin);
                // g acts multiplicatively: g.(l^m) = (g1.l)^m exactly
                BinaryForm powImage = mul_forms(gl, gl);
                for (int i = 2; i < m; ++i) powImage = mul_forms(powImage, gl);
                if (act_matrix(g, pw) != powImage) t_ver.fails++;
            }
        }

        // quartic invariants
        BinaryForm phi = rng.form(f, 4);
        BinaryForm gphi = act_matrix(g, phi);
        if (inv_I(gphi) != inv_I(phi) / dt.pow(4) || inv_J(gphi) != inv_J(phi) / dt.pow(6))
            t_ij.fails++;
        if (!discriminant(phi).is_zero()) {
            if (j_invariant(gphi) != j_invariant(phi)) t_jinv.fails++;
            if (factor_type(gphi) != factor_type(phi)) t_ft.fails++;
        }
        if (!mats_equal(m_phi(gphi), conj_g2(g, m_phi(phi)).scaled(dt.pow(4).inv())))
            t_mphi.fails++;

        // line-level identities on a random line (raw action for equivariance)
        Line l = rng.line(f);
        std::array<Fq, 6> zg = g5_tilde(g) * l.z();
        {
            BinaryForm phig(4, std::span<const Fq>(zg.data(), 5));
            Mat<3> mzg = m_phi(phig);
            Mat<3> a2 = omega_matrix_2(f);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    mzg.a[size_t(i)][size_t(j)] += zg[5] * a2.a[size_t(i)][size_t(j)];
            if (!mats_equal(mzg, conj_g2(g, m_z(l)).scaled(dt.pow(5).inv()))) t_mz.fails++;
        }
        {
            BinaryForm phiL = l.quartic();
            if (det(m_z(l)) != f.el(4) * (inv_J(phiL) - l.z5().pow(3))) t_detmz.fails++;
        }
        if (d_quartic_raw(zg) * dt.pow(4) != act_matrix(g, d_quartic_raw(l.z()))) t_dgl.fails++;

        LineNature nat = line_nature(l);
        if (!nat.in_osculating) {
            try {
                BinaryForm D = d_quartic(l); // asserts matrix route == expansion route
                auto pts = pg1_points(f);
                for (int rep = 0; rep < 3; ++rep) {
                    auto [s, t] = pts[rng.uniform(pts.size())];
                    BinaryForm h = h_form(l, s, t);
                    if (h.eval(s, t) != l.quartic().eval(s, t)) t_heval.fails++;
                    // disc(h) for h = aX^2 + bXY + cY^2 in B_2 coords (c, -b/2, a)
                    Fq a = h[2], b = f.el(-2) * h[1], c = h[0];
                    if (b * b - f.el(4) * a * c != f.el(4) * D.eval(s, t)) t_hdisc.fails++;
                }
            } catch (const MathError&) {
                t_droutes.fails++;
            }
        }
        if (nat.generic) {
            BinaryForm phiL = l.quartic();
            Fq I = inv_I(phiL), J = inv_J(phiL), z5 = l.z5();
            BinaryForm D = d_quartic(l);
            bool ok = inv_I(D) == J * z5 + f.frac(5, 4) * I * I &&
                      inv_J(D) == f.frac(-1, 8) * (f.el(11) * I.pow(3) + f.el(2) * J * J +
                                                   f.el(14) * J * z5.pow(3));
            if (!ok) t_dinv.fails++;
        }

        // pencil invariance and action compatibility
        auto [u, v] = l.pencil_basis();
        {
            GL2 c = rng.gl2(f); // invertible change of pencil basis
            BinaryForm u2 = u * c.a + v * c.b;
            BinaryForm v2 = u * c.c + v * c.d;
            if (Line::from_pencil(u2, v2) != l) t_pencil.fails++;
        }
        Line gl = act_on_line(g, l);
        if (gl != Line::from_pencil(act_matrix(g, u), act_matrix(g, v))) t_actline.fails++;
        if (act_on_line(g, l.dual()) != gl.dual()) t_dualcomm.fails++;
        LineNature ngl = line_nature(gl);
        if (ngl.generic != nat.generic || ngl.meets_cubic != nat.meets_cubic ||
            ngl.in_osculating != nat.in_osculating)
            t_profinv.fails++;
        if (decompose(gl).counts != decompose(l).counts) t_profinv.fails++;

        // dual line via the Omega_3 orthocomplement of the pencil
        if (it % 8 == 0) {
            Mat<4> a3 = omega_matrix_3(f);
            std::array<Fq, 4> ru{}, rv{};
            for (int j = 0; j < 4; ++j) {
                Fq su = f.zero(), sv = f.zero();
                for (int i = 0; i < 4; ++i) {
                    su += u[i] * a3.a[size_t(i)][size_t(j)];
                    sv += v[i] * a3.a[size_t(i)][size_t(j)];
                }
                ru[size_t(j)] = su;
                rv[size_t(j)] = sv;
            }
            // kernel of the 2x4 system (ru, rv) by enumeration of PG(3,q)
            std::optional<BinaryForm> first;
            std::optional<Line> ortho;
            for (const PointP3& p : pg3_points(f)) {
                const BinaryForm& cand = p.cubic();
                Fq d1 = f.zero(), d2 = f.zero();
                for (int i = 0; i < 4; ++i) {
                    d1 += ru[size_t(i)] * cand[i];
                    d2 += rv[size_t(i)] * cand[i];
                }
                if (!d1.is_zero() || !d2.is_zero()) continue;
                if (!first) {
                    first = cand;
                    continue;
                }
                try {
                    ortho = Line::from_pencil(*first, cand);
                    break;
                } catch (const MathError&) {
                    // dependent candidate; keep looking
                }
            }
            if (!ortho || *ortho != l.dual()) t_dualortho.fails++;
        }
    }

    std::vector<CheckResult> out;
    for (Tally* t : {&t_act, &t_group, &t_ver, &t_omega, &t_ij, &t_jinv, &t_ft, &t_mphi, &t_mz,
                     &t_detmz, &t_dgl, &t_droutes, &t_dinv, &t_heval, &t_hdisc, &t_pencil,
                     &t_actline, &t_dualcomm, &t_dualortho, &t_profinv})
        out.push_back(make_check(t->name, t->fails == 0,
                                 std::to_string(t->fails) + " failures in " +
                                     std::to_string(trials) + " trials"));
    return out;
}

CheckResult check_generic_decomposition(const FieldPtr& fp, uint64_t seed, uint64_t samples) {
    const Field& f = *fp;
    uint64_t bad = 0, n = 0;
    std::string firstBad;
    auto test = [&](const Line& l) {
        if (!line_nature(l).generic) return;
        ++n;
        IncidenceProfile a = decompose_generic(l);
        IncidenceProfile b = brute_decompose(l);
        if (!(a == b)) {
            if (!bad) firstBad = line_str(l);
            ++bad;
        }
    };
    if (f.q() <= 7) {
        for (const Line& l : klein_points(f)) test(l);
    } else {
        Sampler rng(seed);
        while (n < samples) test(rng.generic_line(f));
    }
    return make_check("generic_decomposition", bad == 0,
                      std::to_string(bad) + "/" + std::to_string(n) +
                          " generic lines disagree with brute force, first " + firstBad);
}

std::vector<CheckResult> check_nongeneric_all(const FieldPtr& fp) {
    const Field& f = *fp;
    uint64_t q = f.q();
    int mu = f.mu();
    std::vector<CheckResult> out;

    // the ten representatives, their classes, and the table against brute force
    Fq e = f.nonsquare();
    Fq z0 = f.zero(), z1 = f.one();
    auto mk = [&](std::initializer_list<Fq> t) {
        std::vector<Fq> v(t);
        return Line::from_coords(v);
    };
    std::vector<std::pair<Line, NongenericClass>> reps{
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
    std::string repDetail;
    for (const auto& [l, cls] : reps) {
        bool ok = classify_nongeneric(l) == cls &&
                  brute_decompose(l).counts == nongeneric_table_row(cls, q, mu) &&
                  decompose_nongeneric(l).counts == nongeneric_table_row(cls, q, mu);
        if (!ok) {
            repsOk = false;
            repDetail += std::string(to_string(cls)) + " ";
        }
    }
    out.push_back(make_check("nongeneric_representatives", repsOk, "bad classes: " + repDetail));

    // every non-generic line against the table
    uint64_t bad = 0, n = 0;
    std::string firstBad;
    for (const Line& l : klein_points(f)) {
        if (line_nature(l).generic) continue;
        ++n;
        if (decompose_nongeneric(l).counts != brute_decompose(l).counts) {
            if (!bad) firstBad = line_str(l);
            ++bad;
        }
    }
    out.push_back(make_check("nongeneric_table_vs_brute", bad == 0,
                             std::to_string(bad) + "/" + std::to_string(n) +
                                 " non-generic lines disagree, first " + firstBad));
    return out;
}

std::vector<CheckResult> elliptic_identity_checks(const FieldPtr& fp, uint64_t seed,
                                                  uint64_t samples, const OrbitCensus* census) {
    const Field& f = *fp;
    uint64_t q = f.q();
    Sampler rng(seed);
    uint64_t badNu = 0, badDiv = 0, badHasse = 0, badWitness = 0, n = 0;

    auto test = [&](const Line& l) {
        if (!line_nature(l).generic) return;
        ++n;
        EllipticCoeffs c = curve_coeffs(l);
        uint64_t ne = count_points(c.g2, c.g3);
        uint64_t et = uint64_t(eta(l));
        if (2 * nu(l) + et != ne) ++badNu;
        if (ne % 3) ++badDiv;
        int64_t dev = int64_t(ne) - int64_t(q + 1);
        if (uint64_t(dev * dev) > 4 * q) ++badHasse;
        try {
            (void)torsion_witness(l);
        } catch (const MathError&) {
            ++badWitness;
        }
    };
    if (q <= 7) {
        for (const Line& l : klein_points(f)) test(l);
    } else {
        while (n < samples) test(rng.generic_line(f));
    }

    std::vector<CheckResult> out;
    out.push_back(make_check("elliptic_nu_identity", badNu == 0,
                             std::to_string(badNu) + "/" + std::to_string(n)));
    out.push_back(make_check("elliptic_count_div3", badDiv == 0,
                             std::to_string(badDiv) + "/" + std::to_string(n)));
    out.push_back(make_check("elliptic_hasse_bound", badHasse == 0,
                             std::to_string(badHasse) + "/" + std::to_string(n)));
    out.push_back(make_check("elliptic_torsion_witness", badWitness == 0,
                             std::to_string(badWitness) + "/" + std::to_string(n)));

    // #E constant on orbits: 50 random group elements per generic orbit
    bool invOk = true, twistOk = true;
    if (census) {
        for (const auto& o : census->orbits) {
            if (!o.generic) continue;
            Line rep = Line::from_coords(o.rep);
            EllipticCoeffs c = curve_coeffs(rep);
            uint64_t ne = count_points(c.g2, c.g3);
            for (int i = 0; i < 50; ++i) {
                GL2 g = rng.gl2(f);
                Line img = act_on_line(g, rep);
                EllipticCoeffs ci = curve_coeffs(img);
                if (count_points(ci.g2, ci.g3) != ne) invOk = false;
            }
            Fq lam = rng.fq_nonzero(f);
            if (count_points(c.g2 * lam.pow(4), c.g3 * lam.pow(6)) != ne) twistOk = false;
        }
    } else {
        for (uint64_t i = 0; i < std::min<uint64_t>(samples, 50); ++i) {
            Line l = rng.generic_line(f);
            EllipticCoeffs c = curve_coeffs(l);
            uint64_t ne = count_points(c.g2, c.g3);
            GL2 g = rng.gl2(f);
            if (!orbit_invariance_check(l, g)) invOk = false;
            Fq lam = rng.fq_nonzero(f);
            if (count_points(c.g2 * lam.pow(4), c.g3 * lam.pow(6)) != ne) twistOk = false;
        }
    }
    out.push_back(make_check("e_count_orbit_invariance", invOk));
    out.push_back(make_check("e_count_twist_invariance", twistOk));
    return out;
}

CheckResult check_duality_planes(const FieldPtr& fp) {
    const Field& f = *fp;
    Mat<4> a3 = omega_matrix_3(f);
    std::vector<PointP3> pts = pg3_points(f);
    uint64_t bad = 0, n = 0;
    for (const Line& l : klein_points(f)) {
        ++n;
        auto [u, v] = l.pencil_basis();
        std::array<uint64_t, 5> tally{};
        for (const PointP3& p : pts) {
            Fq d1 = f.zero(), d2 = f.zero();
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    d1 += u[i] * a3.a[size_t(i)][size_t(j)] * p.cubic()[j];
                    d2 += v[i] * a3.a[size_t(i)][size_t(j)] * p.cubic()[j];
                }
            if (d1.is_zero() && d2.is_zero())
                tally[size_t(plane_classify(polar_dual_point(p)) - 1)]++;
        }
        if (tally != planes_through_line_decompose(l)) ++bad;
    }
    return make_check("duality_planes", bad == 0,
                      std::to_string(bad) + "/" + std::to_string(n) + " lines disagree");
}

CheckResult check_klein_surjectivity(const FieldPtr& fp) {
    uint64_t bad = 0, count = 0;
    for (const Line& l : klein_points(*fp)) {
        ++count;
        auto [u, v] = l.pencil_basis();
        if (Line::from_pencil(u, v) != l) ++bad;
    }
    uint64_t q = fp->q();
    bool countOk = count == (q * q + 1) * (q * q + q + 1);
    return make_check("klein_surjectivity", bad == 0 && countOk,
                      std::to_string(bad) + " round-trip failures of " + std::to_string(count));
}

CheckResult check_point_orbit_closure(const FieldPtr& fp) {
    const Field& f = *fp;
    // orbit reps by class
    std::array<std::optional<PointP3>, 5> rep;
    std::array<std::set<uint64_t>, 5> classified;
    uint64_t q = f.q();
    auto key = [&](const BinaryForm& b) {
        uint64_t k = 0;
        for (int i = 0; i < 4; ++i) k = k * q + b[i].index();
        return k;
    };
    for (const PointP3& p : pg3_points(f)) {
        int c = point_classify(p);
        if (!rep[size_t(c - 1)]) rep[size_t(c - 1)] = p;
        classified[size_t(c - 1)].insert(key(p.cubic()));
    }
    std::vector<GL2> group = pgl2_elements(f);
    bool ok = true;
    for (int c = 0; c < 5; ++c) {
        std::set<uint64_t> orbit;
        for (const GL2& g : group)
            orbit.insert(key(act_matrix(g, rep[size_t(c)]->cubic()).normalized()));
        if (orbit != classified[size_t(c)]) ok = false;
    }
    return make_check("point_orbit_closure", ok);
}

Report verify_all(const FieldPtr& fp, uint64_t seed, unsigned threads, uint64_t bound) {
    const Field& f = *fp;
    Report rep;
    rep.field_spec = f.spec_string();
    rep.q = f.q();

    OrbitCensus census = line_census(fp, threads, bound);
    rep.checks.insert(rep.checks.end(), census.checks.begin(), census.checks.end());

    JSetCensus js = j_set_census(fp, bound);
    rep.checks.insert(rep.checks.end(), js.checks.begin(), js.checks.end());

    rep.checks.push_back(check_generic_decomposition(fp, seed, 10000));
    auto ng = check_nongeneric_all(fp);
    rep.checks.insert(rep.checks.end(), ng.begin(), ng.end());

    auto el = elliptic_identity_checks(fp, seed + 1, f.q() <= 7 ? 0 : 10000, &census);
    rep.checks.insert(rep.checks.end(), el.begin(), el.end());

    auto alg = algebraic_identity_suite(fp, seed + 2, 300);
    rep.checks.insert(rep.checks.end(), alg.begin(), alg.end());

    if (f.q() <= 7) {
        rep.checks.push_back(check_duality_planes(fp));
        rep.checks.push_back(check_klein_surjectivity(fp));
        rep.checks.push_back(check_point_orbit_closure(fp));
    }
    return rep;
}

} // namespace tcub
