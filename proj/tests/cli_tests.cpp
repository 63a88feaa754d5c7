#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "run_command.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string g_cli;
std::string g_golden_dir;

std::string quiet(const std::string& args) { return g_cli + " " + args + " 2>/dev/null"; }

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE_MESSAGE(f.good(), "missing file: " << path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

using Json = nlohmann::json;

} // namespace

TEST_CASE("sum json matches the checked-in golden bytes") {
    const CommandResult r = run_command(quiet("sum --n 2,2 --s 2 --method all"));
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == read_file(g_golden_dir + "/sum_2x2_s2_all.json"));
}

TEST_CASE("sum trivial cases") {
    const CommandResult ones = run_command(quiet("sum --n 3,3 --s 1"));
    CHECK(ones.exit_code == 0);
    const Json j = Json::parse(ones.stdout_text);
    CHECK(j["entries"].size() == 9);
    for (const auto& e : j["entries"]) CHECK(e["value"] == "1");
    CHECK(j["total"] == "9");

    const CommandResult zero = run_command(quiet("sum --n 2,2 --s 0"));
    CHECK(zero.exit_code == 0);
    const Json z = Json::parse(zero.stdout_text);
    for (const auto& e : z["entries"]) CHECK(e["value"] == "0");
    CHECK(z["total"] == "0");
    CHECK(z["agreement"] == true);
}

TEST_CASE("per-method timings go to stderr, not into the report") {
    const CommandResult r = run_command(g_cli + " sum --n 2,2 --s 2 2>/tmp/widthone_cli_err.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("ns") == std::string::npos);
    const std::string err = read_file("/tmp/widthone_cli_err.txt");
    CHECK(err.find("tableaux") != std::string::npos);
    CHECK(err.find("ns") != std::string::npos);
    std::remove("/tmp/widthone_cli_err.txt");
}

TEST_CASE("sum csv and plain formats") {
    const CommandResult csv = run_command(quiet("sum --n 1,2 --s 1 --format csv"));
    CHECK(csv.exit_code == 0);
    CHECK(csv.stdout_text == "x_1,x_2,value\n1,1,1\n1,2,1\n");

    const CommandResult plain = run_command(quiet("--format plain sum --n 1,2 --s 1"));
    CHECK(plain.exit_code == 0);
    CHECK(plain.stdout_text ==
          "n=(1,2) s=1 method=all agreement=true\n(1,1) 1\n(1,2) 1\ntotal 2\n");
}

TEST_CASE("output lands in --out unchanged") {
    const std::string path = "/tmp/widthone_cli_out.json";
    const CommandResult r = run_command(quiet("sum --n 2,2 --s 2 --method all --out " + path));
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.empty());
    CHECK(read_file(path) == read_file(g_golden_dir + "/sum_2x2_s2_all.json"));
    std::remove(path.c_str());
}

TEST_CASE("eulerian subcommand") {
    const CommandResult r = run_command(quiet("eulerian --p 1,1,1"));
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.stdout_text);
    CHECK(j["coeffs"] == Json::array({"1", "4", "1"}));
    CHECK(j["method"] == "closed");

    const CommandResult zero = run_command(quiet("eulerian --p 0"));
    CHECK(Json::parse(zero.stdout_text)["coeffs"] == Json::array({"1"}));

    const CommandResult both = run_command(quiet("eulerian --p 2,2 --method all"));
    CHECK(both.exit_code == 0);
    CHECK(Json::parse(both.stdout_text)["coeffs"] == Json::array({"1", "4", "1"}));
}

TEST_CASE("hvector subcommand") {
    const CommandResult r = run_command(quiet("hvector --x 2,2"));
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.stdout_text);
    CHECK(j["f"] == Json::array({"1", "4", "5", "2"}));
    CHECK(j["h"] == Json::array({"1", "1"}));
    CHECK(j["facet_count"] == "2");
    CHECK(j["lemma_ok"] == true);

    const CommandResult bad = run_command(quiet("hvector --x 0,2"));
    CHECK(bad.exit_code == 2);
}

TEST_CASE("enumerate subcommand") {
    const CommandResult r = run_command(quiet("enumerate --n 2,2 --s 2"));
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.stdout_text);
    CHECK(j["count"] == "9");
    CHECK(j["members"].size() == 9);
    for (const auto& member : j["members"]) {
        long long total = 0;
        for (const auto& e : member) total += std::stoll(e["value"].get<std::string>());
        CHECK(total == 2);
    }
}

TEST_CASE("guard violations exit 3 with a machine-readable object") {
    const CommandResult r = run_command(quiet("enumerate --n 30,30,30,30 --s 5"));
    CHECK(r.exit_code == 3);
    const Json j = Json::parse(r.stdout_text);
    CHECK(j["error"]["type"] == "guard");
    CHECK(j["error"]["guard"] == "max_enum");
    CHECK(j["error"]["limit"] == "1000000");

    const CommandResult sum = run_command(quiet("sum --n 2,2 --s 2 --method oracle --max-enum 5"));
    CHECK(sum.exit_code == 3);
    CHECK(Json::parse(sum.stdout_text)["error"]["guard"] == "max_enum");
}

TEST_CASE("environment variables override the guards") {
    const CommandResult blocked =
        run_command("WIDTHONE_MAX_ENUM=8 " + quiet("enumerate --n 2,2 --s 2"));
    CHECK(blocked.exit_code == 3);
    CHECK(Json::parse(blocked.stdout_text)["error"]["limit"] == "8");

    const CommandResult allowed =
        run_command("WIDTHONE_MAX_ENUM=9 " + quiet("enumerate --n 2,2 --s 2"));
    CHECK(allowed.exit_code == 0);

    const CommandResult entries =
        run_command("WIDTHONE_MAX_ENTRIES=3 " + quiet("sum --n 2,2 --s 1"));
    CHECK(entries.exit_code == 3);
    CHECK(Json::parse(entries.stdout_text)["error"]["guard"] == "max_tensor_entries");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_command(quiet("sum --n 2,2")).exit_code == 2);          // missing --s
    CHECK(run_command(quiet("sum --n 2,2 --s -1")).exit_code == 2);   // negative sum
    CHECK(run_command(quiet("sum --n 2,2 --s 1 --method bogus")).exit_code == 2);
    CHECK(run_command(quiet("bogus")).exit_code == 2);                // unknown subcommand
    CHECK(run_command(quiet("")).exit_code == 2);                     // subcommand required

    const CommandResult shape = run_command(quiet("sum --n 0,2 --s 1"));
    CHECK(shape.exit_code == 2);
    CHECK(Json::parse(shape.stdout_text)["error"]["type"] == "usage");
}

TEST_CASE("help exits clean") {
    CHECK(run_command(quiet("--help")).exit_code == 0);
    CHECK(run_command(quiet("sum --help")).exit_code == 0);
}

TEST_CASE("verify subcommand gates on the suite") {
    const CommandResult ok = run_command(quiet("verify --max-d 2 --max-n 2 --max-s 2 --L 4"));
    CHECK(ok.exit_code == 0);
    const Json j = Json::parse(ok.stdout_text);
    CHECK(j["all_passed"] == true);
    CHECK(j["checks"].size() == 20);

    const CommandResult bad =
        run_command(quiet("verify --max-d 2 --max-n 2 --max-s 2 --L 4 --inject-fault"));
    CHECK(bad.exit_code == 4);
    const Json jb = Json::parse(bad.stdout_text);
    CHECK(jb["all_passed"] == false);
    int failed = 0;
    for (const auto& c : jb["checks"]) {
        if (c["pass"] == false) {
            ++failed;
            CHECK(c["name"] == "sum.mass_identity");
            CHECK(c["detail"].get<std::string>().find("expected") != std::string::npos);
        }
    }
    CHECK(failed == 1);
}

TEST_CASE("bench emits the pinned csv columns with matching digests") {
    const CommandResult r =
        run_command(quiet("bench --cell 2,2:3 --cell 2,3:2 --reps 2 --warmup 0 --compare-serial"));
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.stdout_text);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "n,s,method,median_ns,result_digest");
    int rows = 0;
    std::string digest_2x2, digest_2x3;
    while (std::getline(lines, line)) {
        ++rows;
        std::vector<std::string> cols;
        std::istringstream ls(line);
        std::string col;
        while (std::getline(ls, col, ',')) cols.push_back(col);
        REQUIRE(cols.size() == 5);
        std::string& seen = (cols[0] == "2x2") ? digest_2x2 : digest_2x3;
        if (seen.empty()) seen = cols[4];
        CHECK(seen == cols[4]);
    }
    CHECK(rows == 10); // tableaux, hpoly, two serial references, oracle; twice
    CHECK(digest_2x2 != digest_2x3);
}

TEST_CASE("bench with an explicitly empty grid prints only the header") {
    const CommandResult r = run_command(quiet("bench --no-default"));
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "n,s,method,median_ns,result_digest\n");
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: cli_tests <widthone-binary> <golden-dir>\n");
        return 1;
    }
    g_cli = argv[1];
    g_golden_dir = argv[2];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv); // doctest flags are not used here
    return ctx.run();
}
