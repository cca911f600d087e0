// Command-line front end: classify points/lines, decompose incidences,
// count elliptic-curve points, run the census and the verification battery.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 mathematical-domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcub/census.hpp"
#include "tcub/elliptic.hpp"

using json = nlohmann::ordered_json;
using namespace tcub;

namespace {

Fq parse_element(const Field& f, const std::string& tok) {
    auto parse_int = [](const std::string& s) -> int64_t {
        size_t pos = 0;
        int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) fail(Errc::ParseError, "bad coordinate '" + s + "'");
        return v;
    };
    if (size_t slash = tok.find('/'); slash != std::string::npos) {
        int64_t num = parse_int(tok.substr(0, slash));
        int64_t den = parse_int(tok.substr(slash + 1));
        if (den % int64_t(f.p()) == 0) fail(Errc::DivisionByZero, "zero denominator in '" + tok + "'");
        return f.frac(num, den);
    }
    int64_t v = parse_int(tok);
    if (v >= 0 && uint64_t(v) < f.q()) return f.from_index(uint64_t(v));
    return f.el(v);
}

std::vector<Fq> parse_coords(const Field& f, const std::string& csv, size_t expect) {
    std::vector<Fq> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_element(f, tok));
    if (out.size() != expect)
        fail(Errc::ParseError, "expected " + std::to_string(expect) + " coordinates, got " +
                                   std::to_string(out.size()));
    return out;
}

Line parse_line(const Field& f, const std::string& zcsv, const std::string& pencil) {
    if (!zcsv.empty() && !pencil.empty())
        fail(Errc::ParseError, "give either --z or --pencil, not both");
    if (!zcsv.empty()) return Line::from_coords(parse_coords(f, zcsv, 6));
    if (!pencil.empty()) {
        size_t colon = pencil.find(':');
        if (colon == std::string::npos) fail(Errc::ParseError, "--pencil needs u:v");
        BinaryForm u(3, parse_coords(f, pencil.substr(0, colon), 4));
        BinaryForm v(3, parse_coords(f, pencil.substr(colon + 1), 4));
        return Line::from_pencil(u, v);
    }
    fail(Errc::ParseError, "a line is required (--z or --pencil)");
}

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream os(outPath, std::ios::binary);
        if (!os) fail(Errc::ParseError, "cannot open output file " + outPath);
        os << text;
        if (!text.empty() && text.back() != '\n') os << '\n';
    }
}

json line_json(const Line& l) {
    json j;
    json z = json::array(), pl = json::array(), phi = json::array();
    for (int i = 0; i < 6; ++i) z.push_back(l[i].index());
    for (Fq p : l.plucker()) pl.push_back(p.index());
    for (int i = 0; i < 5; ++i) phi.push_back(l[i].index());
    j["z"] = z;
    j["plucker"] = pl;
    j["phi"] = phi;
    j["z5"] = l.z5().index();
    LineNature n = line_nature(l);
    j["nature"] = {{"generic", n.generic},
                   {"meets_cubic", n.meets_cubic},
                   {"in_osculating", n.in_osculating}};
    return j;
}

json profile_json(const Line& l, const IncidenceProfile& p) {
    json j;
    j["counts"] = p.counts;
    j["eta"] = p.eta ? json(*p.eta) : json(nullptr);
    j["nu"] = p.nu ? json(*p.nu) : json(nullptr);
    j["e_count"] = p.e_count ? json(*p.e_count) : json(nullptr);
    j["orbit_class"] =
        line_nature(l).generic ? "generic" : to_string(classify_nongeneric(l));
    return j;
}

std::string csv_cell(const std::optional<std::string>& s) { return s ? *s : ""; }

std::string census_csv(const OrbitCensus& c) {
    std::ostringstream os;
    os << "orbit_id,size,generic,factor_type,j,r,c1,c2,c3,c4,c5,e_count\n";
    size_t id = 0;
    for (const auto& o : c.orbits) {
        os << id++ << "," << o.size << "," << (o.generic ? 1 : 0) << ","
           << csv_cell(o.ftype ? std::optional<std::string>(to_string(*o.ftype)) : std::nullopt)
           << ","
           << csv_cell(o.j ? std::optional<std::string>(std::to_string(o.j->index()))
                           : std::nullopt)
           << ","
           << csv_cell(o.r ? std::optional<std::string>(std::to_string(o.r->index()))
                           : std::nullopt);
        for (uint64_t v : o.profile.counts) os << "," << v;
        os << ","
           << csv_cell(o.profile.e_count
                           ? std::optional<std::string>(std::to_string(*o.profile.e_count))
                           : std::nullopt)
           << "\n";
    }
    return os.str();
}

json checks_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.pass) e["detail"] = c.detail;
        arr.push_back(e);
    }
    return arr;
}

struct TablesData {
    uint64_t q;
    int mu;
    json to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
};

json TablesData::to_json() const {
    json j;
    j["q"] = q;
    j["mu"] = mu;
    j["generic_orbits"] = int64_t(2 * q) - 3 + mu;
    j["generic_size_histogram"] = {{"G", (int64_t(q) - mu) / 3},
                                   {"G/2", q - 1},
                                   {"G/3", 1 + mu},
                                   {"G/4", (int64_t(2 * q) - 10 - (1 + mu) / 2) / 3},
                                   {"G/12", (1 + mu) / 2}};
    j["j_sets"] = {{"J4", (int64_t(q) - 6 - mu) / 6},     {"J2", (int64_t(q) - 2 + mu) / 2},
                   {"J1", (int64_t(q) - mu) / 3},         {"J4_plus", expected_j4_plus(q)},
                   {"J2_plus", expected_j2_plus(q)},      {"J1_plus", expected_j1_plus(q)}};
    json rows = json::array();
    const std::pair<NongenericClass, uint64_t> classes[] = {
        {NongenericClass::Secant, (q * q + q) / 2},
        {NongenericClass::RealAxis, (q * q + q) / 2},
        {NongenericClass::Tangent, q + 1},
        {NongenericClass::ImaginarySecant, (q * q - q) / 2},
        {NongenericClass::ImaginaryAxis, (q * q - q) / 2},
        {NongenericClass::OsculatingUnisecant, q * q + q},
        {NongenericClass::Unisecant51, (q * q * q - q) / 2},
        {NongenericClass::External51, (q * q * q - q) / 2},
        {NongenericClass::Unisecant52, (q * q * q - q) / 2},
        {NongenericClass::External52, (q * q * q - q) / 2},
    };
    for (const auto& [cls, size] : classes) {
        json r;
        r["class"] = to_string(cls);
        r["counts"] = nongeneric_table_row(cls, q, mu);
        r["orbit_size"] = size;
        rows.push_back(r);
    }
    j["nongeneric"] = rows;
    return j;
}

std::string TablesData::to_csv() const {
    std::ostringstream os;
    os << "class,c1,c2,c3,c4,c5,orbit_size\n";
    json j = to_json();
    for (const auto& r : j["nongeneric"]) {
        os << r["class"].get<std::string>();
        for (const auto& c : r["counts"]) os << "," << c.get<uint64_t>();
        os << "," << r["orbit_size"].get<uint64_t>() << "\n";
    }
    return os.str();
}

std::string TablesData::to_text() const {
    json j = to_json();
    std::ostringstream os;
    os << "q = " << q << "  (mu = " << (mu > 0 ? "+1" : "-1") << ")\n";
    os << "generic orbits: " << j["generic_orbits"].get<int64_t>() << "\n";
    os << "orbit sizes |G|/d: ";
    for (auto& [k, v] : j["generic_size_histogram"].items()) os << k << ":" << v << " ";
    os << "\nj-set sizes: ";
    for (auto& [k, v] : j["j_sets"].items()) os << k << "=" << v << " ";
    os << "\nnon-generic incidence (c1..c5, orbit size):\n";
    for (const auto& r : j["nongeneric"]) {
        os << "  " << r["class"].get<std::string>() << ": ";
        for (const auto& c : r["counts"]) os << c.get<uint64_t>() << " ";
        os << " (" << r["orbit_size"].get<uint64_t>() << ")\n";
    }
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted-cubic incidence toolkit"};
    app.require_subcommand(1);

    std::string fieldSpec, zcsv, pencil, cubic, quartic, format = "json", outPath, tablesPath;
    unsigned threads = 0;
    uint64_t seed = 0, bound = 13;
    bool check = false;

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--field", fieldSpec, "field spec: p, p^k or p^k/c0,...,ck")->required();
        cmd->add_option("--format", format, "json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", outPath, "write output to a file");
    };

    auto* cp = app.add_subcommand("classify-point", "orbit of a point of PG(3,q)");
    addCommon(cp);
    cp->add_option("--cubic", cubic, "B_3 coordinates c0,c1,c2,c3")->required();

    auto* cl = app.add_subcommand("classify-line", "coordinates, nature and class of a line");
    addCommon(cl);
    cl->add_option("--z", zcsv, "E_5 coordinates z0,...,z5");
    cl->add_option("--pencil", pencil, "pencil basis u0,u1,u2,u3:v0,v1,v2,v3");
    cl->add_option("--quartic", quartic,
                   "B_4 coordinates z0,...,z4: classify the form and list its line lifts");

    auto* inc = app.add_subcommand("incidence", "decompose the points of a line into orbits");
    addCommon(inc);
    inc->add_option("--z", zcsv, "E_5 coordinates z0,...,z5");
    inc->add_option("--pencil", pencil, "pencil basis u:v");
    inc->add_flag("--check", check, "also run the brute-force oracle and compare");

    auto* el = app.add_subcommand("elliptic", "elliptic-curve data of a generic line");
    addCommon(el);
    el->add_option("--z", zcsv, "E_5 coordinates z0,...,z5");
    el->add_option("--pencil", pencil, "pencil basis u:v");

    auto* ce = app.add_subcommand("census", "exhaustive orbit census with built-in checks");
    addCommon(ce);
    ce->add_option("--tables", tablesPath, "write per-orbit CSV table to a file");
    ce->add_option("--threads", threads, "worker threads (default: all cores)");
    ce->add_option("--bound", bound, "largest admissible q (default 13)");

    auto* tb = app.add_subcommand("tables", "closed-form tables for an admissible q");
    addCommon(tb);

    auto* ve = app.add_subcommand("verify", "full verification battery");
    addCommon(ve);
    ve->add_option("--seed", seed, "seed for randomized property sampling");
    ve->add_option("--threads", threads, "worker threads (default: all cores)");
    ve->add_option("--bound", bound, "largest admissible q (default 13)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        FieldPtr f = Field::parse(fieldSpec);

        if (cp->parsed()) {
            PointP3 p(BinaryForm(3, parse_coords(*f, cubic, 4)));
            int orbit = point_classify(p);
            if (format == "json") {
                json j;
                j["orbit"] = "O" + std::to_string(orbit);
                j["pattern"] = to_string(cubic_pattern(p.cubic()));
                emit(j.dump(), outPath);
            } else {
                emit("O" + std::to_string(orbit), outPath);
            }
            return 0;
        }

        if (cl->parsed() && !quartic.empty()) {
            BinaryForm phi(4, parse_coords(*f, quartic, 5));
            if (phi.is_zero()) fail(Errc::ZeroForm, "the zero form is not a projective point");
            json j;
            j["I"] = inv_I(phi).index();
            j["J"] = inv_J(phi).index();
            j["disc"] = discriminant(phi).index();
            bool squarefree = !discriminant(phi).is_zero();
            j["j"] = squarefree ? json(j_invariant(phi).index()) : json(nullptr);
            j["factor_type"] = squarefree ? json(to_string(factor_type(phi))) : json(nullptr);
            json lifts = json::array();
            if (auto z5 = f->sqrt(inv_I(phi))) {
                std::vector<Fq> z(phi.coords().begin(), phi.coords().end());
                z.push_back(*z5);
                lifts.push_back(line_json(Line::from_coords(z)));
                if (!z5->is_zero()) {
                    z[5] = -*z5;
                    lifts.push_back(line_json(Line::from_coords(z)));
                }
            }
            j["lifts"] = lifts;
            emit(format == "text" ? std::string(squarefree ? to_string(factor_type(phi)) : "singular")
                                  : j.dump(),
                 outPath);
            return 0;
        }

        if (cl->parsed()) {
            Line l = parse_line(*f, zcsv, pencil);
            json j = line_json(l);
            LineNature n = line_nature(l);
            if (n.generic) {
                BinaryForm phi = l.quartic();
                j["orbit_class"] = "generic";
                j["factor_type"] = to_string(factor_type(phi));
                j["j"] = j_invariant(phi).index();
            } else {
                j["orbit_class"] = to_string(classify_nongeneric(l));
            }
            if (format == "text") {
                emit(j["orbit_class"].get<std::string>(), outPath);
            } else {
                emit(j.dump(), outPath);
            }
            return 0;
        }

        if (inc->parsed()) {
            Line l = parse_line(*f, zcsv, pencil);
            IncidenceProfile p = decompose(l);
            json j = profile_json(l, p);
            bool ok = true;
            if (check) {
                IncidenceProfile b = brute_decompose(l);
                ok = (b.counts == p.counts);
                j["brute_counts"] = b.counts;
                j["check"] = ok;
            }
            if (format == "text") {
                std::ostringstream os;
                os << "counts:";
                for (uint64_t c : p.counts) os << " " << c;
                emit(os.str(), outPath);
            } else {
                emit(j.dump(), outPath);
            }
            return ok ? 0 : 1;
        }

        if (el->parsed()) {
            Line l = parse_line(*f, zcsv, pencil);
            EllipticData d = elliptic_data(l);
            uint64_t q = f->q();
            int64_t dev = int64_t(d.e_count) - int64_t(q + 1);
            json j;
            j["g2"] = d.g2.index();
            j["g3"] = d.g3.index();
            j["count"] = d.e_count;
            j["hasse_ok"] = uint64_t(dev * dev) <= 4 * q;
            j["div3"] = d.e_count % 3 == 0;
            j["witness"] = {{"S", d.witness.x.index()}, {"T", d.witness.y.index()}};
            emit(format == "text"
                     ? "g2=" + std::to_string(d.g2.index()) + " g3=" + std::to_string(d.g3.index()) +
                           " count=" + std::to_string(d.e_count)
                     : j.dump(),
                 outPath);
            return 0;
        }

        if (ce->parsed()) {
            OrbitCensus c = line_census(f, threads, bound);
            JSetCensus js = j_set_census(f, bound);
            json j;
            j["field"] = f->spec_string();
            j["q"] = f->q();
            j["mu"] = f->mu();
            j["lines"] = c.line_count;
            j["orbits"] = c.orbits.size();
            j["generic_orbits"] = c.generic_orbits;
            j["point_orbit_sizes"] = c.point_orbit_sizes;
            json splits = json::array();
            for (const auto& [lab, n] : c.label_splits)
                splits.push_back({{"label", lab}, {"orbits", n}});
            j["label_splits"] = splits;
            j["j_sets"] = {{"J4", js.j4},       {"J2", js.j2},       {"J1", js.j1},
                           {"J4_plus", js.j4p}, {"J2_plus", js.j2p}, {"J1_plus", js.j1p}};
            std::vector<CheckResult> allChecks = c.checks;
            allChecks.insert(allChecks.end(), js.checks.begin(), js.checks.end());
            j["checks"] = checks_json(allChecks);
            bool pass = true;
            for (const auto& ch : allChecks) pass = pass && ch.pass;
            j["all_pass"] = pass;
            emit(j.dump(), outPath);
            if (!tablesPath.empty()) {
                std::ofstream os(tablesPath, std::ios::binary);
                if (!os) fail(Errc::ParseError, "cannot open " + tablesPath);
                os << census_csv(c);
            }
            return pass ? 0 : 1;
        }

        if (tb->parsed()) {
            TablesData t{f->q(), f->mu()};
            if (format == "csv")
                emit(t.to_csv(), outPath);
            else if (format == "text")
                emit(t.to_text(), outPath);
            else
                emit(t.to_json().dump(), outPath);
            return 0;
        }

        if (ve->parsed()) {
            Report r = verify_all(f, seed, threads, bound);
            json j;
            j["field"] = r.field_spec;
            j["q"] = r.q;
            j["checks"] = checks_json(r.checks);
            j["all_pass"] = r.all_pass();
            if (format == "text") {
                std::ostringstream os;
                for (const auto& c : r.checks)
                    os << (c.pass ? "PASS " : "FAIL ") << c.name
                       << (c.pass || c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
                os << (r.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
                emit(os.str(), outPath);
            } else {
                emit(j.dump(), outPath);
            }
            return r.all_pass() ? 0 : 1;
        }
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
