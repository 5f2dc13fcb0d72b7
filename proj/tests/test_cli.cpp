#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "nilhom/kostant.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += "'";
    cmd += NILHOM_CLI_PATH;
    cmd += "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(status != -1);
    RunResult res;
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = std::move(out);
    return res;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string temp_path(const std::string& tag) {
    return "/tmp/nilhom_cli_" + tag + "_" + std::to_string(getpid());
}

}  // namespace

TEST_CASE("paper format reproduces the golden table") {
    auto res = run_cli("homology sp --n 2 --k 2 --format paper");
    CHECK(res.code == 0);
    CHECK(res.out == read_file(std::string(NILHOM_FIXTURES_DIR) + "/sp_2_2_table.txt"));
}

TEST_CASE("json is the default format") {
    auto res = run_cli("homology sp --n 1 --k 1");
    CHECK(res.code == 0);
    auto parsed = nlohmann::json::parse(res.out);
    CHECK(parsed["family"] == "sp");
    CHECK(parsed["rows"].size() == 4);
    CHECK(res.out.back() == '\n');
}

TEST_CASE("tsv format emits one line per row") {
    auto res = run_cli("homology o --m 3 --k 1 --format tsv");
    CHECK(res.code == 0);
    size_t expected = nilhom::homology_table_o(3, 1).rows.size();
    CHECK(static_cast<size_t>(std::count(res.out.begin(), res.out.end(), '\n')) == expected);
    std::istringstream lines(res.out);
    std::string line;
    while (std::getline(lines, line))
        CHECK(std::count(line.begin(), line.end(), '\t') == 3);
}

TEST_CASE("general linear rows carry both mixed labels") {
    auto res = run_cli("homology gl --n 1 --k 1 --l 1");
    CHECK(res.code == 0);
    auto parsed = nlohmann::json::parse(res.out);
    REQUIRE(parsed["rows"].size() == 6);
    for (const auto& row : parsed["rows"]) {
        CHECK(row.contains("f_label"));
        CHECK(row["v_label"].contains("alpha"));
        CHECK(row["v_label"].contains("beta"));
    }
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("homology sp --n 2").code == 2);
    CHECK(run_cli("homology sp --n 0 --k 1").code == 2);
    CHECK(run_cli("homology sp --n 9 --k 9").code == 2);
    CHECK(run_cli("homology sp --n 1 --k 1 --format nope").code == 2);
    CHECK(run_cli("homology xx --n 1 --k 1").code == 2);
    CHECK(run_cli("modrule sp --lambda nope --n 1").code == 2);
    CHECK(run_cli("modrule sp --lambda [2,3] --n 1").code == 2);
    CHECK(run_cli("verify oracle --family sp --n 1").code == 2);
    CHECK(run_cli("nonsense").code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("homology --help").code == 0);
    CHECK(run_cli("verify oracle --help").code == 0);
}

TEST_CASE("modification rule subcommand") {
    auto res = run_cli("modrule sp --lambda [1,1,1] --n 1");
    CHECK(res.code == 0);
    auto parsed = nlohmann::json::parse(res.out);
    CHECK(parsed["family"] == "sp");
    CHECK(parsed["border"]["index"] == 1);
    CHECK(parsed["weyl"]["index"] == 1);
    CHECK(parsed["agree"] == true);
    CHECK(parsed["border"]["reduced"] == nlohmann::json::array({1}));
    REQUIRE(parsed["border"]["strips"].size() == 1);
    CHECK(parsed["border"]["strips"][0]["columns"] == 1);

    res = run_cli("modrule sp --lambda [6,5,5,3,2,1,1] --n 1");
    parsed = nlohmann::json::parse(res.out);
    CHECK(parsed["border"]["index"] == "inf");
    CHECK(parsed["border"]["reduced"].is_null());
    CHECK(parsed["agree"] == true);

    res = run_cli("modrule o --lambda [2,1] --m 1");
    CHECK(res.code == 0);
    parsed = nlohmann::json::parse(res.out);
    CHECK(parsed["index"] == 1);
    CHECK(parsed["associated"] == true);
    CHECK(parsed["reduced"] == nlohmann::json::array());

    res = run_cli("modrule o --lambda [1,1] --m 1");
    parsed = nlohmann::json::parse(res.out);
    CHECK(parsed["index"] == "inf");
    CHECK(parsed["associated"] == false);
}

TEST_CASE("verification suites pass") {
    for (const std::string args :
         {"verify counts --max-n 2 --max-k 2", "verify defs-agree --n 1 --k 1",
          "verify oracle --family sp --n 1 --k 1", "verify oracle --family o --m 2 --k 1",
          "verify heisenberg --max-n 3", "verify free2step --max-k 2",
          "verify euler --family gl --n 1 --k 1 --l 1", "verify lengths --max-rank 2"}) {
        auto res = run_cli(args);
        INFO("args: ", args);
        CHECK(res.code == 0);
        auto parsed = nlohmann::json::parse(res.out);
        CHECK(parsed["ok"] == true);
        CHECK(parsed["checks"].is_array());
        CHECK_FALSE(parsed["checks"].empty());
        for (const auto& check : parsed["checks"]) CHECK(check["ok"] == true);
    }
}

TEST_CASE("structure dump file") {
    std::string path = temp_path("dump");
    auto res = run_cli("verify oracle --family o --m 1 --k 1 --dump-structure '" + path + "'");
    CHECK(res.code == 0);
    auto dump = nlohmann::json::parse(read_file(path));
    CHECK(dump["family"] == "o");
    CHECK(dump["params"]["m"] == 1);
    CHECK(dump["basis"].size() == 1);
    std::remove(path.c_str());
}

TEST_CASE("output file matches stdout") {
    auto direct = run_cli("homology sp --n 1 --k 2");
    std::string path = temp_path("table");
    auto redirected = run_cli("homology sp --n 1 --k 2 -o '" + path + "'");
    CHECK(redirected.code == 0);
    CHECK(redirected.out.empty());
    CHECK(read_file(path) == direct.out);
    std::remove(path.c_str());

    CHECK(run_cli("homology sp --n 1 --k 1 -o /nonexistent/dir/file").code == 2);
}

TEST_CASE("output is byte-stable across worker counts") {
    auto one = run_cli("verify oracle --family sp --n 1 --k 2", "NILHOM_THREADS=1");
    auto four = run_cli("verify oracle --family sp --n 1 --k 2", "NILHOM_THREADS=4");
    CHECK(one.code == 0);
    CHECK(four.code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("coset listing") {
    auto res = run_cli("wp sp --n 1 --k 1");
    CHECK(res.code == 0);
    CHECK(res.out == "(-2, 1)  3\n(-1, 2)  2\n(1, 2)  1\n(2, 1)  0\n");
    CHECK(run_cli("wp sp --n 1 --k 1 --brute").out == res.out);

    res = run_cli("wp o --m 1 --k 1");
    CHECK(res.code == 0);
    CHECK(res.out == "(-1/2)  1\n(1/2)  0\n");

    res = run_cli("wp gl --n 1 --k 1 --l 1");
    CHECK(res.code == 0);
    CHECK(std::count(res.out.begin(), res.out.end(), '\n') == 6);
}
