#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(TCUB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("golden outputs are byte-stable") {
    auto a = run_cli("incidence --field 7 --z 0,0,0,0,1,0");
    CHECK(a.exit_code == 0);
    CHECK(a.out ==
          "{\"counts\":[1,7,0,0,0],\"eta\":null,\"nu\":null,\"e_count\":null,"
          "\"orbit_class\":\"tangent\"}\n");
    auto b = run_cli("incidence --field 7 --z 0,0,0,0,1,0");
    CHECK(a.out == b.out);

    auto c = run_cli("classify-point --field 7 --cubic 0,0,0,1 --format text");
    CHECK(c.exit_code == 0);
    CHECK(c.out == "O1\n");

    auto d = run_cli("elliptic --field 7 --z 1,0,0,0,3,1");
    CHECK(d.exit_code == 0);
    CHECK(d.out ==
          "{\"g2\":2,\"g3\":3,\"count\":12,\"hasse_ok\":true,\"div3\":true,"
          "\"witness\":{\"S\":6,\"T\":3}}\n");

    auto e = run_cli("classify-line --field 7 --pencil 1,0,0,0:0,0,0,-1 --format text");
    CHECK(e.exit_code == 0);
    CHECK(e.out == "secant\n");
}

TEST_CASE("incidence --check compares with the oracle") {
    auto r = run_cli("incidence --field 7 --z 0,0,1,0,0,1 --check");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"check\":true") != std::string::npos);
    CHECK(r.out.find("\"brute_counts\":[2,0,2,0,4]") != std::string::npos);
}

TEST_CASE("fractions parse in-field") {
    auto r = run_cli("classify-line --field 7 --z 0,1/4,0,-1/4,0,1/12");
    // I = 1/12 and z5 = 1/12: 1/144 vs 1/12... not on the quadric -> exit 3
    CHECK(r.exit_code == 3);
    auto ok = run_cli("incidence --field 7 --quartic dummy --z 0,0,1,0,0,1");
    CHECK(ok.exit_code == 2); // unknown flag
}

TEST_CASE("verify exits zero on a clean field") {
    auto r = run_cli("verify --field 5 --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"all_pass\":true") != std::string::npos);
}

TEST_CASE("tables emit the closed forms") {
    auto r = run_cli("tables --field 7 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("class,c1,c2,c3,c4,c5,orbit_size\n") == 0);
    CHECK(r.out.find("tangent,1,7,0,0,0,8\n") != std::string::npos);
    CHECK(r.out.find("unisecant_51,1,0,1,4,2,168\n") != std::string::npos);
    auto twice = run_cli("tables --field 7 --format csv");
    CHECK(r.out == twice.out);
}

TEST_CASE("exit codes: usage 2, domain 3") {
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("incidence --z 0,0,1,0,0,1").exit_code == 2); // missing --field
    CHECK(run_cli("verify --field 9").exit_code == 3);          // characteristic 3
    CHECK(run_cli("verify --field 4").exit_code == 3);          // too small
    CHECK(run_cli("incidence --field 7 --z 1,1,1,1,1,1").exit_code == 3); // off the quadric
}
