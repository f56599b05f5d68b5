#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(ARCTIC_CLI) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("curve csv output") {
    std::string out = "/tmp/cli_curve.csv";
    REQUIRE(run_cli("curve --alpha 0.3 --R 8 --Q 0 --samples 100 --format csv --out " + out) == 0);
    auto text = slurp(out);
    CHECK(text.rfind("branch,w,x,y\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') > 50);
    std::remove(out.c_str());
}

TEST_CASE("curve json output carries regime metadata") {
    std::string out = "/tmp/cli_curve.json";
    REQUIRE(run_cli("curve --alpha 0.3 --R 8 --Q 0 --samples 50 --format json --out " + out) == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["metadata"]["regime"] == "I");
    CHECK(j["metadata"]["alpha"] == 0.3);
    CHECK(j["branches"].size() >= 1);
    std::remove(out.c_str());
}

TEST_CASE("probs csv has one row per vertex") {
    std::string out = "/tmp/cli_probs.csv";
    REQUIRE(run_cli("probs --alpha 0.4 --N 8 --r 5 --s 2 --format csv --out " + out) == 0);
    auto text = slurp(out);
    CHECK(std::count(text.begin(), text.end(), '\n') == 8 * 8 + 1);
    std::remove(out.c_str());
}

TEST_CASE("sample svg renders") {
    std::string out = "/tmp/cli_sample.svg";
    REQUIRE(run_cli("sample --alpha 0.5 --N 16 --r 9 --s 5 --seed 7 --format svg --out " + out) ==
            0);
    auto text = slurp(out);
    CHECK(text.rfind("<svg", 0) == 0);
    std::remove(out.c_str());
}

TEST_CASE("configuration errors exit with code 2") {
    CHECK(run_cli("curve --alpha 0.3") == 2);                       // no geometry at all
    CHECK(run_cli("curve --alpha 0.3 --R 2 --N 8 --r 5 --s 2") == 2);  // both forms
    CHECK(run_cli("probs --alpha 0.3 --N 8 --r 2 --s 5") == 2);     // invalid (N,r,s)
    CHECK(run_cli("probs --alpha 0.3 --R 2") == 2);                 // lattice required
    CHECK(run_cli("curve --alpha 0.3 --R 2 --format tsv") == 2);    // unknown format
}
