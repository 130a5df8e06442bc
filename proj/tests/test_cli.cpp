// End-to-end tests of the experiment runner, driven through the real binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

const std::string kBin = GRAPHONLAB_CLI_BIN;
const fs::path kConfigDir = GRAPHONLAB_CONFIG_DIR;

int run_cli(const std::string& args, std::string* stdout_capture = nullptr) {
    fs::path tmp = fs::temp_directory_path() / "glab_cli_stdout.txt";
    std::string cmd = kBin + " " + args + " > " + tmp.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    if (stdout_capture) {
        std::ifstream in(tmp);
        std::ostringstream ss;
        ss << in.rdbuf();
        *stdout_capture = ss.str();
    }
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("glab_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("list prints the scenario names") {
    std::string out;
    CHECK(run_cli("list", &out) == 0);
    CHECK(out ==
          "winding-torus\npadic\ntruncation\npurity\nfrucht\ngraphing-check\nimage-limits\n");
}

TEST_CASE("every bundled config runs and writes its artifacts") {
    const std::vector<std::pair<std::string, std::vector<std::string>>> expected = {
        {"winding-torus", {"winding_densities.csv", "winding_meta.json"}},
        {"padic", {"padic_hausdorff.csv"}},
        {"truncation", {"truncation.json", "spectrum.csv"}},
        {"purity", {"purity.json"}},
        {"frucht", {"frucht_graph.json", "frucht_result.json"}},
        {"graphing-check", {"graphing_check.json"}},
        {"image-limits", {"image_limits.csv"}},
    };
    for (const auto& [name, files] : expected) {
        CAPTURE(name);
        auto dir = fresh_dir(name);
        int rc = run_cli("run " + (kConfigDir / (name + ".json")).string() + " --out-dir " +
                         dir.string());
        CHECK(rc == 0);
        for (const auto& f : files) {
            CAPTURE(f);
            CHECK(fs::exists(dir / f));
        }
    }
}

TEST_CASE("outputs are byte-identical across repeated runs") {
    for (const std::string name : {"purity", "truncation", "padic"}) {
        CAPTURE(name);
        auto a = fresh_dir(name + "_a");
        auto b = fresh_dir(name + "_b");
        std::string cfg = (kConfigDir / (name + ".json")).string();
        REQUIRE(run_cli("run " + cfg + " --out-dir " + a.string() + " --seed 7") == 0);
        REQUIRE(run_cli("run " + cfg + " --out-dir " + b.string() + " --seed 7") == 0);
        for (const auto& entry : fs::directory_iterator(a)) {
            auto f = entry.path().filename();
            CAPTURE(f.string());
            CHECK(slurp(a / f) == slurp(b / f));
        }
    }
}

TEST_CASE("the seed changes stochastic outputs") {
    auto a = fresh_dir("purity_s1");
    auto b = fresh_dir("purity_s2");
    std::string cfg = (kConfigDir / "purity.json").string();
    REQUIRE(run_cli("run " + cfg + " --out-dir " + a.string() + " --seed 1") == 0);
    REQUIRE(run_cli("run " + cfg + " --out-dir " + b.string() + " --seed 2") == 0);
    CHECK(slurp(a / "purity.json") != slurp(b / "purity.json"));
}

TEST_CASE("validation failures exit with code 2") {
    auto dir = fresh_dir("bad");
    SUBCASE("missing config file") {
        CHECK(run_cli("run " + (dir / "nope.json").string()) == 2);
    }
    SUBCASE("malformed JSON") {
        std::ofstream(dir / "broken.json") << "{not json";
        CHECK(run_cli("run " + (dir / "broken.json").string()) == 2);
    }
    SUBCASE("unknown scenario") {
        std::ofstream(dir / "unknown.json") << R"({"scenario":"warp-drive"})";
        CHECK(run_cli("run " + (dir / "unknown.json").string() + " --out-dir " + dir.string()) ==
              2);
    }
    SUBCASE("invalid scenario parameters") {
        std::ofstream(dir / "badparam.json")
            << R"({"scenario":"padic","params":{"p":4},"out_dir":")" << dir.string() << R"("})";
        CHECK(run_cli("run " + (dir / "badparam.json").string()) == 2);
    }
}

TEST_CASE("padic CSV holds the exact dyadic distances") {
    auto dir = fresh_dir("padic_values");
    REQUIRE(run_cli("run " + (kConfigDir / "padic.json").string() + " --out-dir " +
                    dir.string()) == 0);
    CHECK(slurp(dir / "padic_hausdorff.csv") ==
          "m,d_h\n1,0.25\n2,0.125\n3,0.0625\n4,0.03125\n5,0.015625\n6,0.0078125\n");
}
