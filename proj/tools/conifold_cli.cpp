// Command-line front end: every subcommand wraps one library computation and
// emits a machine-readable report. Exit codes: 0 success, 1 verification
// failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "conifold/json_io.hpp"

using namespace conifold;

namespace {

struct Output {
    std::string format = "json";  // json | csv | pretty
    std::string path;             // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw CLI::ValidationError("--output", "cannot open " + path);
        f << text;
    }
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string table_csv(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream ss;
    for (size_t i = 0; i < header.size(); ++i) ss << (i ? "," : "") << csv_escape(header[i]);
    ss << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) ss << (i ? "," : "") << csv_escape(row[i]);
        ss << "\n";
    }
    return ss.str();
}

std::string table_pretty(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> w(header.size());
    for (size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
    std::ostringstream ss;
    auto line = [&](const std::vector<std::string>& r) {
        for (size_t i = 0; i < r.size(); ++i) {
            ss << r[i] << std::string(w[i] - r[i].size(), ' ');
            ss << (i + 1 < r.size() ? "  " : "");
        }
        ss << "\n";
    };
    line(header);
    line([&] {
        std::vector<std::string> sep;
        for (size_t x : w) sep.push_back(std::string(x, '-'));
        return sep;
    }());
    for (const auto& row : rows) line(row);
    return ss.str();
}

std::string render(const Output& out, const json& j,
                   const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    if (out.format == "json") return j.dump(2) + "\n";
    if (out.format == "csv") return table_csv(header, rows);
    return table_pretty(header, rows);
}

std::vector<std::vector<std::string>> jseq_row_fields(const JSequence& js) {
    std::ostringstream v;
    for (size_t i = 0; i < js.values().size(); ++i) v << (i ? " " : "") << js.values()[i];
    return {{v.str()}};
}

int run_pt_series(const Output& out, int nmax, int bmax) {
    const Exp2 box{nmax, bmax};
    const Series2 pt = pt_product(box);
    const CrosscheckReport report = crosscheck(box);

    std::vector<std::vector<std::string>> rows;
    json jrows = json::array();
    for (int n = 0; n <= nmax; ++n)
        for (int beta = 0; beta <= std::min(bmax, n); ++beta) {
            const Int p = pt.coeff(n, beta);
            const Int a = a_coeff(n, beta);
            jrows.push_back(json{
                {"n", n}, {"beta", beta}, {"P", p.str()}, {"a", a.str()}});
            rows.push_back({std::to_string(n), std::to_string(beta), p.str(), a.str()});
        }
    json j{{"rows", jrows}, {"crosscheck", to_json(report)}};
    out.emit(render(out, j, {"n", "beta", "P", "a"}, rows));
    return report.pass ? 0 : 1;
}

int run_resolve(const Output& out, const std::string& diagram, int d, int b) {
    const Resolution res = resolve(parse_diagram(diagram), d, b);
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < res.steps.size(); ++i) {
        std::ostringstream delta;
        const auto& r = res.steps[i].delta.rows();
        for (size_t k = 0; k < r.size(); ++k) delta << (k ? " " : "") << r[k];
        rows.push_back({std::to_string(i + 1), delta.str(),
                        std::to_string(res.steps[i].s), res.steps[i].mult.str()});
    }
    out.emit(render(out, to_json(res), {"step", "delta", "s", "mult"}, rows));
    return 0;
}

int run_sod(const Output& out, int a, int b, int d, int c) {
    const auto summands = sod_summands(make_flip_setup(a, b, d), c);
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < summands.size(); ++i) {
        rows.push_back({std::to_string(i), std::to_string(summands[i].l),
                        jseq_row_fields(summands[i].jseq)[0][0],
                        "B_" + std::to_string(summands[i].child_c) + "(" +
                            std::to_string(summands[i].child_d) + ")"});
    }
    out.emit(render(out, to_json(summands), {"order", "l", "jseq", "child"}, rows));
    return 0;
}

int run_wallcross(const Output& out, long long v0, long long v1, int m) {
    const auto summands = conifold_sod({v0, v1}, m);
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < summands.size(); ++i) {
        rows.push_back({std::to_string(i), std::to_string(summands[i].l),
                        jseq_row_fields(summands[i].jseq)[0][0],
                        "(" + std::to_string(summands[i].child.first) + "," +
                            std::to_string(summands[i].child.second) + ")",
                        std::to_string(summands[i].twists.shift)});
    }
    out.emit(render(out, to_json(summands), {"order", "l", "jseq", "child", "shift"}, rows));
    return 0;
}

int run_window_check(const Output& out, long long v0, long long v1, int m, int d) {
    const WallWindowSetup setup = make_wall_window_setup({v0, v1}, m, d);
    const KoszulSweep sweep = sweep_koszul_block(setup);
    json failures = json::array();
    for (const auto& cert : sweep.failures) failures.push_back(to_json(cert));
    json j{{"pass", sweep.pass},
           {"checks", sweep.checks},
           {"setup", json{{"v0", v0}, {"v1", v1}, {"m", m}, {"d", d},
                          {"ext_quiver", to_json(setup.derived)}}},
           {"failures", failures}};
    std::vector<std::vector<std::string>> rows{
        {sweep.pass ? "pass" : "fail", std::to_string(sweep.checks),
         std::to_string(sweep.failures.size())}};
    out.emit(render(out, j, {"result", "checks", "failures"}, rows));
    return sweep.pass ? 0 : 1;
}

int run_walls(const Output& out, long long v0, long long v1) {
    const auto walls = relevant_walls({v0, v1});
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& [wall, lmax] : walls) {
        json jw = to_json(wall);
        jw["l_max"] = lmax;
        arr.push_back(jw);
        rows.push_back({"W", std::to_string(wall.m), std::to_string(lmax)});
    }
    out.emit(render(out, arr, {"family", "m", "l_max"}, rows));
    return 0;
}

int run_ext_quiver(const Output& out, long long v0, long long v1, int m, int d) {
    const ExtQuiverData q = ext_quiver_data({v0, v1}, m, d);
    std::vector<std::vector<std::string>> rows{
        {std::to_string(q.a), std::to_string(q.b), std::to_string(q.c),
         std::to_string(q.C), q.valid ? "true" : "false"}};
    out.emit(render(out, to_json(q), {"a", "b", "c", "C", "valid"}, rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wall-crossing combinatorics for the resolved conifold"};
    app.require_subcommand(1);

    Output out;
    if (const char* env = std::getenv("CONIFOLD_FORMAT")) out.format = env;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    app.add_option("--output", out.path, "Write output to a file instead of stdout");

    int nmax = 0, bmax = -1;
    auto* pt = app.add_subcommand("pt-series",
                                  "PT / DT product table with the three-way crosscheck");
    pt->add_option("--nmax", nmax, "Highest q-degree")->required();
    pt->add_option("--bmax", bmax, "Highest t-degree (default nmax)");

    std::string diagram;
    int rd = 0, rb = 0;
    auto* rs = app.add_subcommand("resolve", "Column-filling resolution of a Young diagram");
    rs->add_option("--diagram", diagram, "Comma-separated row lengths, descending")
        ->required();
    rs->add_option("--d", rd, "Target column height")->required();
    rs->add_option("--b", rb, "Wedge-space dimension bound")->required();

    int sa = 0, sb = 0, sd = 0, sc = -1;
    auto* sod = app.add_subcommand("sod", "Semiorthogonal summands of a window W_c(d)");
    sod->add_option("--a", sa)->required();
    sod->add_option("--b", sb)->required();
    sod->add_option("--d", sd)->required();
    sod->add_option("--c", sc, "Window parameter (default a)");

    long long wv0 = 0, wv1 = 0;
    int wm = 0;
    auto* wc = app.add_subcommand("wallcross", "Wall-crossing summands at W_m");
    wc->add_option("--v0", wv0)->required();
    wc->add_option("--v1", wv1)->required();
    wc->add_option("--m", wm)->required();

    long long kv0 = 0, kv1 = 0;
    int km = 0, kd = 0;
    auto* wk = app.add_subcommand("window-check",
                                  "Exhaustive Koszul window verification at a polystable point");
    wk->add_option("--v0", kv0)->required();
    wk->add_option("--v1", kv1)->required();
    wk->add_option("--m", km)->required();
    wk->add_option("--d", kd)->required();

    long long lv0 = 0, lv1 = 0;
    auto* wl = app.add_subcommand("walls", "Walls relevant to a dimension vector");
    wl->add_option("--v0", lv0)->required();
    wl->add_option("--v1", lv1)->required();

    long long ev0 = 0, ev1 = 0;
    int em = 0, ed = 0;
    auto* eq = app.add_subcommand("ext-quiver", "Ext-quiver dimensions at a polystable point");
    eq->add_option("--v0", ev0)->required();
    eq->add_option("--v1", ev1)->required();
    eq->add_option("--m", em)->required();
    eq->add_option("--d", ed)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (pt->parsed()) return run_pt_series(out, nmax, bmax < 0 ? nmax : bmax);
        if (rs->parsed()) return run_resolve(out, diagram, rd, rb);
        if (sod->parsed()) return run_sod(out, sa, sb, sd, sc < 0 ? sa : sc);
        if (wc->parsed()) return run_wallcross(out, wv0, wv1, wm);
        if (wk->parsed()) return run_window_check(out, kv0, kv1, km, kd);
        if (wl->parsed()) return run_walls(out, lv0, lv1);
        if (eq->parsed()) return run_ext_quiver(out, ev0, ev1, em, ed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
