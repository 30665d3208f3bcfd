#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace std;
namespace fs = std::filesystem;

namespace {

int run(const string& args) {
    string cmd = string(EUORIENT_CLI_PATH) + " " + args + " >cli_out.tmp 2>cli_err.tmp";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

string slurp(const string& path) {
    ifstream f(path);
    stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("compute writes a series file and reruns are byte-identical across prime sets") {
    fs::remove_all("cli_t1");
    fs::remove_all("cli_t2");
    REQUIRE(run("compute --model general --terms 12 --out cli_t1 --manifest") == 0);
    REQUIRE(fs::exists("cli_t1/general_series.json"));
    REQUIRE(fs::exists("cli_t1/manifest.json"));
    // disjoint prime set via a different bound
    REQUIRE(run("compute --model general --terms 12 --prime-bound 536870912 --out cli_t2") == 0);
    CHECK(slurp("cli_t1/general_series.json") == slurp("cli_t2/general_series.json"));
    CHECK(slurp("cli_t1/manifest.json").find("sha256") != string::npos);
}

TEST_CASE("fourvalent compute emits the oracle-checked low terms") {
    fs::remove_all("cli_t3");
    REQUIRE(run("compute --model fourvalent --terms 4 --out cli_t3 --dumps") == 0);
    string body = slurp("cli_t3/fourvalent_series.json");
    CHECK(body.find("\"1\"") != string::npos);
    CHECK(body.find("\"8\"") != string::npos);
    bool have_dump = false;
    for (const auto& e : fs::directory_iterator("cli_t3"))
        if (e.path().string().find(".dump") != string::npos) have_dump = true;
    CHECK(have_dump);
}

TEST_CASE("oracle subcommand exits 0 on agreement") {
    CHECK(run("oracle --model general --oracle-max 3") == 0);
    CHECK(run("oracle --model fourvalent --oracle-max 1") == 0);
    CHECK(run("oracle --model eulerian-maps --oracle-max 4") == 0);
}

TEST_CASE("analyze emits the CSV bundle with headers") {
    fs::remove_all("cli_t4");
    fs::remove_all("cli_t4_out");
    REQUIRE(run("compute --model general --terms 24 --out cli_t4") == 0);
    REQUIRE(run("analyze cli_t4/general_series.json --mu 4pi --out cli_t4_out "
                "--extend 120 --precision 120") == 0);
    for (const char* f : {"ratios.csv", "intercepts.csv", "alpha.csv", "threepoint.csv",
                          "beta.csv", "singularities.csv", "extension.csv", "summary.txt"})
        CHECK(fs::exists(string("cli_t4_out/") + f));
    CHECK(slurp("cli_t4_out/ratios.csv").rfind("n,r_n,1/n", 0) == 0);
    CHECK(slurp("cli_t4_out/intercepts.csv").rfind("n,l_n,", 0) == 0);
    CHECK(slurp("cli_t4_out/extension.csv").rfind("n,mean,stddev", 0) == 0);
}

TEST_CASE("exit codes distinguish configuration errors") {
    CHECK(run("compute --model general --terms 0") == 3);
    CHECK(run("analyze does_not_exist.json") == 3);
}
