// Black-box tests of the command-line tool. The binary path arrives as
// argv[1]; commands run through popen with stderr folded into stdout.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

int g_failures = 0;
std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + g_binary + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& what) {
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++g_failures;
}

void test_exit_codes() {
    expect(run("pt-series --nmax 3").exit_code == 0, "pt-series exits 0 on success");
    expect(run("resolve --diagram 4,2,1 --d 4 --b 7").exit_code == 0,
           "resolve exits 0 on success");
    expect(run("resolve --diagram 1,2,3 --d 4 --b 7").exit_code == 2,
           "non-decreasing diagram exits 2");
    expect(run("resolve --diagram 4,2,1 --d 2 --b 7").exit_code == 2,
           "too many rows exits 2");
    expect(run("bogus-subcommand").exit_code == 2, "unknown subcommand exits 2");
    expect(run("pt-series").exit_code == 2, "missing required flag exits 2");
    expect(run("ext-quiver --v0 1 --v1 0 --m 2 --d 1").exit_code == 2,
           "violated precondition exits 2");
}

void test_determinism() {
    const RunResult a = run("sod --a 5 --b 2 --d 3");
    const RunResult b = run("sod --a 5 --b 2 --d 3");
    expect(a.exit_code == 0 && a.output == b.output,
           "identical flags give byte-identical output");
}

void test_resolve_steps() {
    const RunResult r = run("resolve --diagram 4,2,1 --d 4 --b 7");
    if (r.exit_code != 0) {
        expect(false, "resolve runs");
        return;
    }
    const auto j = nlohmann::json::parse(r.output);
    const auto& steps = j.at("steps");
    bool ok = steps.size() == 4;
    const std::vector<std::vector<int>> deltas{{4, 2, 1, 1}, {4, 2, 2, 2},
                                               {4, 3, 3, 2}, {4, 4, 3, 2}};
    const std::vector<long long> s{1, 3, 5, 6};
    const std::vector<std::string> mult{"7", "35", "21", "7"};
    for (size_t i = 0; ok && i < 4; ++i)
        ok = steps[i].at("delta").get<std::vector<int>>() == deltas[i] &&
             steps[i].at("s").get<long long>() == s[i] &&
             steps[i].at("mult").get<std::string>() == mult[i];
    expect(ok, "resolve emits the worked steps with s and mult");
}

void test_resolve_empty() {
    const RunResult r = run("resolve --diagram \"\" --d 1 --b 0");
    bool ok = r.exit_code == 0;
    if (ok) ok = nlohmann::json::parse(r.output).at("steps").empty();
    expect(ok, "empty diagram with b=0 resolves to zero steps");
}

void test_ext_quiver_values() {
    const RunResult r = run("ext-quiver --v0 4 --v1 3 --m 2 --d 1");
    bool ok = r.exit_code == 0;
    if (ok) {
        const auto j = nlohmann::json::parse(r.output);
        ok = j.at("a") == 8 && j.at("b") == 6 && j.at("c") == 4 && j.at("C") == 9;
    }
    expect(ok, "ext-quiver reports {a:8, b:6, c:4, C:9}");
}

void test_sod_summands() {
    const RunResult r = run("sod --a 3 --b 0 --d 1");
    bool ok = r.exit_code == 0;
    if (ok) {
        const auto j = nlohmann::json::parse(r.output);
        int l1 = 0, l0 = 0;
        for (const auto& s : j)
            (s.at("l").get<int>() == 1 ? l1 : l0) += 1;
        ok = j.size() == 4 && l1 == 3 && l0 == 1;
    }
    expect(ok, "sod --a 3 --b 0 --d 1 lists three j-summands plus the l=0 child");
}

void test_walls_empty() {
    const RunResult r = run("walls --v0 0 --v1 0");
    bool ok = r.exit_code == 0;
    if (ok) ok = nlohmann::json::parse(r.output).empty();
    expect(ok, "walls of the zero vector is the empty list");
}

void test_pt_series_rows() {
    const RunResult r = run("pt-series --nmax 0");
    bool ok = r.exit_code == 0;
    if (ok) {
        const auto j = nlohmann::json::parse(r.output);
        const auto& rows = j.at("rows");
        ok = rows.size() == 1 && rows[0].at("n") == 0 && rows[0].at("beta") == 0 &&
             rows[0].at("P") == "1" && rows[0].at("a") == "1" &&
             j.at("crosscheck").at("pass") == true;
    }
    expect(ok, "pt-series --nmax 0 emits the single row (0,0,1,1)");
}

void test_csv_json_agree() {
    const RunResult jr = run("pt-series --nmax 4 --bmax 3");
    const RunResult cr = run("--format csv pt-series --nmax 4 --bmax 3");
    bool ok = jr.exit_code == 0 && cr.exit_code == 0;
    if (ok) {
        const auto j = nlohmann::json::parse(jr.output);
        std::string expected = "n,beta,P,a\n";
        for (const auto& row : j.at("rows"))
            expected += std::to_string(row.at("n").get<int>()) + "," +
                        std::to_string(row.at("beta").get<int>()) + "," +
                        row.at("P").get<std::string>() + "," +
                        row.at("a").get<std::string>() + "\n";
        ok = cr.output == expected;
    }
    expect(ok, "csv and json pt-series outputs carry identical numbers");
}

void test_env_format() {
    const RunResult r = run("pt-series --nmax 2", "CONIFOLD_FORMAT=csv");
    expect(r.exit_code == 0 && r.output.rfind("n,beta,P,a\n", 0) == 0,
           "CONIFOLD_FORMAT sets the default output format");
}

void test_window_check() {
    const RunResult r = run("window-check --v0 6 --v1 4 --m 2 --d 2");
    bool ok = r.exit_code == 0;
    if (ok) {
        const auto j = nlohmann::json::parse(r.output);
        ok = j.at("pass") == true && j.at("failures").empty() &&
             j.at("checks").get<long long>() > 0;
    }
    expect(ok, "window-check emits a passing certificate and exits 0");
}

void test_wallcross() {
    const RunResult r = run("wallcross --v0 2 --v1 1 --m 2");
    bool ok = r.exit_code == 0;
    if (ok) {
        const auto j = nlohmann::json::parse(r.output);
        int l1 = 0;
        for (const auto& s : j)
            if (s.at("l") == 1) ++l1;
        ok = l1 == 2;  // binomial(2,1) copies
    }
    expect(ok, "wallcross at v=s_2 lists binomial(m,1) summands");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-conifold-binary>\n";
        return 2;
    }
    g_binary = argv[1];

    test_exit_codes();
    test_determinism();
    test_resolve_steps();
    test_resolve_empty();
    test_ext_quiver_values();
    test_sod_summands();
    test_walls_empty();
    test_pt_series_rows();
    test_csv_json_agree();
    test_env_format();
    test_window_check();
    test_wallcross();

    if (g_failures == 0) {
        std::printf("all cli checks passed\n");
        return 0;
    }
    std::printf("%d cli check(s) failed\n", g_failures);
    return 1;
}
