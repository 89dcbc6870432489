#include <doctest.h>

#include <chenruan/report.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace chenruan;

namespace {
int run_cli(const std::string& args) {
    std::string cmd = std::string(CHENRUAN_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

TEST_CASE("json reports are byte-identical across runs") {
    Fan fan = Fan::mirror_quintic();
    ReportBundle a = run_report(fan, rat(1), "mirror-quintic", 2);
    ReportBundle b = run_report(fan, rat(1), "mirror-quintic", 1);
    CHECK(a.document.dump(2) == b.document.dump(2));
    CHECK(a.all_pass());
}

TEST_CASE("smooth fixture report is empty but clean") {
    Fan fan = Fan::projective_space();
    ReportBundle rb = run_report(fan, rat(1), "projective-space", 1);
    CHECK(rb.all_pass());
    CHECK(rb.document["periods"].empty());
    CHECK(rb.document["sectors"]["census"]["ordered_nonzero"] == 0);
}

TEST_CASE("fan file loading and diagnostics") {
    std::string good = "/tmp/chenruan_fan_good.json";
    {
        std::ofstream out(good);
        out << R"({"dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]})";
    }
    Fan fan = load_fan_file(good);
    CHECK(fan.dim() == 2);
    CHECK(fan.max_cones().size() == 3);

    std::string malformed = "/tmp/chenruan_fan_bad.json";
    {
        std::ofstream out(malformed);
        out << R"({"dim": 2, "rays": [[1,0)";
    }
    CHECK_THROWS_WITH_AS(load_fan_file(malformed), doctest::Contains("parse error"), std::invalid_argument);

    std::string wrong_field = "/tmp/chenruan_fan_field.json";
    {
        std::ofstream out(wrong_field);
        out << R"({"dim": 2, "rays": [[1.5, 0]], "max_cones": []})";
    }
    CHECK_THROWS_WITH_AS(load_fan_file(wrong_field), doctest::Contains("integers"), std::invalid_argument);
    CHECK_THROWS_AS(load_fan_file("/tmp/chenruan_no_such_file.json"), std::invalid_argument);
}

TEST_CASE("cli exit codes: 0 pass, 2 input error") {
    CHECK(run_cli("triangle-check") == 0);
    CHECK(run_cli("periods --k 2") == 0);
    CHECK(run_cli("periods --k 9") == 2);
    CHECK(run_cli("cupprod --psi -5") == 2);       // degenerate parameter
    CHECK(run_cli("cupprod --psi 1/0") == 2);      // bad rational
    CHECK(run_cli("sectors --fan /tmp/chenruan_no_such_file.json") == 2);
    CHECK(run_cli("report --fixture no-such-fixture") == 2);
    CHECK(run_cli("nonsense-subcommand") == 2);
}

TEST_CASE("cli machine output round trips as deterministic json") {
    std::string p1 = "/tmp/chenruan_cli_a.json", p2 = "/tmp/chenruan_cli_b.json";
    REQUIRE(run_cli("localize --json " + p1) == 0);
    REQUIRE(run_cli("localize --json " + p2) == 0);
    std::string a = slurp(p1), b = slurp(p2);
    CHECK(!a.empty());
    CHECK(a == b);
    json doc = json::parse(a);
    CHECK(doc["sum"] == "1");
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("cli sector run on the smooth fixture") {
    CHECK(run_cli("sectors --fixture projective-space") == 0);
}

TEST_CASE("singular non-builtin fans report their sectors without smooth goldens") {
    // a two-face of index two carries one box point, giving twisted sectors
    Fan fan(3, {{1, 0, 0}, {1, 2, 0}, {0, 0, 1}}, {{0, 1, 2}});
    CHECK_FALSE(fan.smooth());
    ReportBundle rb = run_report(fan, rat(1), "synthetic-singular", 1);
    CHECK(rb.all_pass()); // no golden is pinned for this fixture
    CHECK(rb.document["sectors"]["twisted_sectors"].get<long>() == 3);
    // the flat two-dimensional case really has none: curves miss fixed points
    Fan wp2(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}});
    ReportBundle rb2 = run_report(wp2, rat(1), "weighted-plane", 1);
    CHECK(rb2.all_pass());
    CHECK(rb2.document["sectors"]["twisted_sectors"].get<long>() == 0);
}

TEST_CASE("cli consumes fan files end to end") {
    std::string path = "/tmp/chenruan_fan_cli.json";
    {
        std::ofstream out(path);
        out << R"({"dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]})";
    }
    CHECK(run_cli("sectors --fan " + path) == 0);
    CHECK(run_cli("report --fan " + path) == 0);
    std::remove(path.c_str());
}
