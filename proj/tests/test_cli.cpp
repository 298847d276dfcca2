// CLI integration tests: exit codes, output formats, caching, and
// determinism, exercised through the installed binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef QSERIES_BIN
#error "QSERIES_BIN must point at the qseries binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    std::string err_path = std::filesystem::temp_directory_path() /
                           ("qseries_cli_err_" + std::to_string(counter++));
    std::string cmd = std::string(QSERIES_BIN) + " " + args + " 2>" + err_path;
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream ef(err_path);
    std::stringstream ss;
    ss << ef.rdbuf();
    r.err = ss.str();
    std::filesystem::remove(err_path);
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

// strip the trailing (timing) column from each verify row
std::string drop_last_column(const std::string& s) {
    std::stringstream in(s), out;
    std::string line;
    while (std::getline(in, line)) {
        size_t tab = line.rfind('\t');
        out << (tab == std::string::npos ? line : line.substr(0, tab)) << '\n';
    }
    return out.str();
}

} // namespace

TEST_CASE("expand families") {
    RunResult r = run("expand --family B3 --upto 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n\tvalue\n0\t1\n1\t3\n2\t9\n3\t13\n4\t24\n5\t27\n");

    RunResult eta = run("expand --eta 3:9,1:-3 --upto 5");
    CHECK(eta.exit_code == 0);
    CHECK(eta.out == r.out);

    RunResult via_family = run("expand --family eta:3:9,1:-3 --upto 5");
    CHECK(via_family.exit_code == 0);
    CHECK(via_family.out == r.out);

    RunResult a3 = run("expand --family a3 --upto 3");
    CHECK(a3.out == "n\tvalue\n0\t1\n1\t1\n2\t2\n3\t0\n");

    RunResult a3k = run("expand --family a3k:3 --upto 5");
    CHECK(a3k.out == r.out); // a3k:3 is B3

    RunResult csv = run("expand --family a3 --upto 2 --format csv");
    CHECK(csv.out == "n,value\n0,1\n1,1\n2,2\n");
}

TEST_CASE("expand usage errors name the offending token") {
    RunResult r = run("expand --eta 3:x --upto 5");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("3:x") != std::string::npos);

    r = run("expand --family nosuch --upto 5");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("nosuch") != std::string::npos);

    r = run("expand --upto 5");
    CHECK(r.exit_code == 2);

    r = run("expand --family B3 --eta 1:1 --upto 5");
    CHECK(r.exit_code == 2);

    r = run("expand --family B3"); // missing required --upto
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify exit codes and filtering") {
    RunResult r = run("verify --order 0");
    CHECK(r.exit_code == 2);

    r = run("verify --order 60 --filter omega*");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 4); // header + 3 omega relations
    CHECK(r.out.rfind("id\tverdict\tmismatch\tms\n", 0) == 0);

    r = run("verify --order 60 --filter om[ega");
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify runs the full catalog") {
    RunResult r = run("verify --order 80");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 84); // header + 83 entries
    CHECK(r.out.find("fail") == std::string::npos);
}

TEST_CASE("scan emits claim rows") {
    RunResult r = run("scan --family B3 --max-step 12 --order 600");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("step\tresidue\tmodulus\tevidence\tstatus\n", 0) == 0);
    CHECK(r.out.find("6\t4\t24\t") != std::string::npos);
    CHECK(r.out.find("8\t3\t13\t") != std::string::npos);

    // order too small for the requested evidence
    r = run("scan --family B3 --max-step 12 --order 60 --min-evidence 10");
    CHECK(r.exit_code == 1);

    r = run("scan --family B3 --max-step 0 --order 60");
    CHECK(r.exit_code == 2);
}

TEST_CASE("omega methods agree") {
    RunResult theta = run("omega -k 3 --upto 200 --method theta");
    RunResult enumd = run("omega -k 3 --upto 200 --method enumerate");
    CHECK(theta.exit_code == 0);
    CHECK(theta.out == enumd.out);
    for (int k = 1; k <= 2; ++k) {
        std::string base = "omega -k " + std::to_string(k) + " --upto 200";
        CHECK(run(base + " --method theta").out ==
              run(base + " --method enumerate").out);
    }
    CHECK(run("omega -k 3 --upto 5 --method enumerate").out.find("5\t96") !=
          std::string::npos);
    CHECK(run("omega -k 3 --upto 5 --method nope").exit_code == 2);
}

TEST_CASE("oracle rows") {
    RunResult r = run("oracle --t 3 -k 3 --upto 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n\tvalue\n0\t1\n1\t3\n2\t9\n3\t13\n4\t24\n5\t27\n6\t50\n");
    CHECK(run("oracle --t 1 -k 3 --upto 6").exit_code == 2);
}

TEST_CASE("json-lines round-trips with stable keys") {
    RunResult r = run("expand --family B3 --upto 4 --format json-lines");
    CHECK(r.exit_code == 0);
    std::stringstream ss(r.out);
    std::string line;
    int n = 0;
    while (std::getline(ss, line)) {
        nlohmann::json row = nlohmann::json::parse(line);
        CHECK(row.size() == 2);
        CHECK(row["n"] == n);
        CHECK(row["value"].is_string());
        ++n;
    }
    CHECK(n == 5);

    r = run("verify --order 40 --filter lemid1 --format json-lines");
    nlohmann::json row = nlohmann::json::parse(r.out);
    CHECK(row["id"] == "lemid1");
    CHECK(row["verdict"] == "pass");
    CHECK(row["mismatch"].is_null());
    CHECK(row["ms"].is_number());

    r = run("scan --family B3 --max-step 8 --order 400 --format json-lines");
    std::stringstream ss2(r.out);
    bool saw_64 = false;
    while (std::getline(ss2, line)) {
        nlohmann::json claim = nlohmann::json::parse(line);
        CHECK(claim.contains("step"));
        CHECK(claim.contains("residue"));
        CHECK(claim.contains("modulus"));
        CHECK(claim.contains("evidence"));
        CHECK(claim.contains("status"));
        if (claim["step"] == 6 && claim["residue"] == 4) {
            saw_64 = true;
            CHECK(claim["modulus"] == "24");
            CHECK(claim["status"] == "verified-to-order");
        }
    }
    CHECK(saw_64);
}

TEST_CASE("cache hits are byte-identical to recomputation") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "qseries_cache_test";
    std::filesystem::remove_all(dir);
    std::string flag = " --cache-dir " + dir.string();

    RunResult cold = run("expand --family B3 --upto 64" + flag);
    CHECK(cold.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "B3.o64.qs"));

    RunResult warm = run("expand --family B3 --upto 64" + flag);
    CHECK(warm.exit_code == 0);
    CHECK(warm.out == cold.out);

    // same result as an uncached run
    CHECK(run("expand --family B3 --upto 64").out == cold.out);

    // eta specs cache under their canonical name
    RunResult eta = run("expand --eta 3:9,1:-3 --upto 32" + flag);
    CHECK(eta.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "eta_1_-3_3_9.o32.qs"));
    CHECK(run("expand --eta 1:-3,3:9 --upto 32" + flag).out == eta.out);

    // QSERIES_CACHE env fallback
    std::filesystem::path env_dir =
        std::filesystem::temp_directory_path() / "qseries_cache_env";
    std::filesystem::remove_all(env_dir);
    std::string env_cmd = "QSERIES_CACHE=" + env_dir.string() + " " +
                          QSERIES_BIN + " expand --family a3 --upto 16 >/dev/null 2>&1";
    CHECK(std::system(env_cmd.c_str()) == 0);
    CHECK(std::filesystem::exists(env_dir / "a3.o16.qs"));

    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(env_dir);
}

TEST_CASE("corrupt cache entries are recomputed, not trusted") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "qseries_cache_corrupt";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "a3.o8.qs") << "garbage\n";
    RunResult r = run("expand --family a3 --upto 8 --cache-dir " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == run("expand --family a3 --upto 8").out);
    std::filesystem::remove_all(dir);
}

TEST_CASE("determinism of verify and scan output") {
    std::string v1 = drop_last_column(run("verify --order 90").out);
    std::string v2 = drop_last_column(run("verify --order 90").out);
    CHECK(v1 == v2);

    std::string s1 = run("scan --family B3 --max-step 18 --order 700").out;
    std::string s2 = run("scan --family B3 --max-step 18 --order 700").out;
    CHECK(s1 == s2);
}
