#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "pointmod/catalog.hpp"
#include "pointmod/error.hpp"
#include "pointmod/fforacle.hpp"
#include "pointmod/genfun.hpp"
#include "pointmod/io.hpp"
#include "pointmod/polyomino.hpp"
#include "pointmod/qseries.hpp"

using namespace pointmod;

namespace {

enum Exit : int { kPass = 0, kMismatch = 1, kUsage = 2, kBudget = 3, kInvalidModule = 4, kUnsupported = 5 };

constexpr int kSeriesOrderCap = 12;

unsigned default_threads() {
    if (const char* env = std::getenv("THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring THREADS=" << env << " (not a positive integer)\n";
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int exit_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ResourceBudgetExceeded:
        case ErrorCode::CapExceeded: return kBudget;
        case ErrorCode::NotCommuting:
        case ErrorCode::NotNilpotent:
        case ErrorCode::ShapeMismatch:
        case ErrorCode::FieldMismatch: return kInvalidModule;
        case ErrorCode::UnsupportedLength:
        case ErrorCode::IrrationalParameter: return kUnsupported;
        default: return kUsage;
    }
}

int cmd_series(const std::string& which, int order, const std::string& format) {
    MotiveSeries s = which == "feit-fine" ? feit_fine_series(order)
                     : which == "punctual" ? punctual_series(order)
                                           : hilb_punctual_series(order);
    if (format == "json") {
        print_json(Json{{"schemaVersion", kSchemaVersion}, {"series", which}, {"order", order}, {"coefficients", series_to_json(s)}});
    } else {
        for (int i = 0; i <= order; ++i) std::cout << "t^" << i << ": " << s[i].to_string() << "\n";
    }
    return kPass;
}

int cmd_verify_tables(const std::vector<int>& ns) {
    Json checks = Json::array();
    bool ok = true;
    for (int n : ns) {
        const auto report = verify_stratification(n);
        Json rows = Json::array();
        for (const auto& row : report.rows) {
            rows.push_back(Json{{"label", row.label}, {"r", row.r}, {"class", row.summand.to_string()}});
        }
        checks.push_back(Json{{"check", "stratification n=" + std::to_string(n)},
                              {"expected", report.expected.to_string()},
                              {"actual", report.total.to_string()},
                              {"match", report.ok},
                              {"rows", rows}});
        ok = ok && report.ok;

        const Motive r1 = strata_classes(n).at(1);
        const Motive structure = stratum_structure_sheaves(n);
        checks.push_back(Json{{"check", "structure sheaf stratum n=" + std::to_string(n)},
                              {"expected", structure.to_string()},
                              {"actual", r1.to_string()},
                              {"match", r1 == structure}});
        ok = ok && r1 == structure;
    }
    const auto pair = solve_distinct_pair_contribution();
    const Motive expected_pair = Motive::parse("L(L^2 + 1)/(L + 1)");
    const Motive expected_xi = Motive::parse("(L^3 - L^2)/(L + 1)");
    const bool pair_ok = pair.total == expected_pair && pair.xi == expected_xi;
    checks.push_back(Json{{"check", "distinct pair contribution"},
                          {"expected", expected_pair.to_string()},
                          {"actual", pair.total.to_string()},
                          {"xi", pair.xi.to_string()},
                          {"match", pair_ok}});
    ok = ok && pair_ok;
    print_json(Json{{"schemaVersion", kSchemaVersion}, {"target", "tables"}, {"pass", ok}, {"checks", checks}});
    if (!ok) {
        for (const auto& c : checks) {
            if (!c["match"].get<bool>()) {
                std::cerr << "first failing check: " << c["check"].get<std::string>() << "\n";
                break;
            }
        }
    }
    return ok ? kPass : kMismatch;
}

int cmd_verify_finite_field(int n, int q, bool all_pairs, const OracleOptions& opts) {
    if (n < 1 || n > 4) throw Error(ErrorCode::InvalidArgument, "--n must be between 1 and 4");
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t count = all_pairs ? count_commuting_pairs(static_cast<std::size_t>(n), static_cast<std::uint32_t>(q), opts)
                                          : count_commuting_nilpotent_pairs(static_cast<std::size_t>(n), static_cast<std::uint32_t>(q), opts);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    const MotiveSeries s = all_pairs ? feit_fine_series(n) : punctual_series(n);
    const mpq_class expected = s[n].specialize(mpq_class(q)) * mpq_class(gl_order(static_cast<unsigned>(n), static_cast<std::uint64_t>(q)));
    const bool match = expected == mpq_class(count);
    print_json(Json{{"schemaVersion", kSchemaVersion},
                    {"target", "finite-field"},
                    {"pairs", all_pairs ? "commuting" : "commuting-nilpotent"},
                    {"n", n},
                    {"q", q},
                    {"count", count},
                    {"expected", expected.get_str()},
                    {"match", match},
                    {"threads", opts.threads},
                    {"elapsedMs", elapsed.count()}});
    return match ? kPass : kMismatch;
}

int cmd_verify_qseries(int max_area) {
    const auto counts = count_by_area_and_columns(max_area);
    const BivariateSeries f = parallelogram_gf(max_area, max_area);
    const QSeries at_one = specialize_t_one(f);
    Json area = Json::array();
    bool ok = true;
    for (int a = 0; a <= max_area; ++a) {
        std::uint64_t total = 0;
        for (auto c : counts[static_cast<std::size_t>(a)]) total += c;
        const bool m = at_one[a] == mpq_class(total);
        ok = ok && m;
        area.push_back(Json{{"area", a}, {"expected", total}, {"actual", at_one[a].get_str()}, {"match", m}});
    }
    std::size_t joint_checked = 0, joint_bad = 0;
    for (int a = 0; a <= max_area; ++a) {
        for (int c = 0; c <= max_area; ++c) {
            ++joint_checked;
            if (f.coefficient(c, a) != mpq_class(counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)])) ++joint_bad;
        }
    }
    ok = ok && joint_bad == 0;
    print_json(Json{{"schemaVersion", kSchemaVersion},
                    {"target", "qseries"},
                    {"maxArea", max_area},
                    {"pass", ok},
                    {"byArea", area},
                    {"jointCoefficientsChecked", joint_checked},
                    {"jointMismatches", joint_bad}});
    return ok ? kPass : kMismatch;
}

int cmd_classify(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot read " << path << "\n";
        return kUsage;
    }
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        std::cerr << "invalid JSON in " << path << ": " << e.what() << "\n";
        return kUsage;
    }
    const ModulePresentation m = module_from_json(doc);
    const Json report = classification_report(m);
    if (format == "json") {
        print_json(report);
    } else {
        std::cout << "label: " << report["label"].get<std::string>() << "\n";
        for (const auto& p : report["parameters"]) std::cout << "parameter: " << p.get<std::string>() << "\n";
        std::cout << "r: " << report["r"] << "\nendDim: " << report["endDim"] << "\nautMotive: "
                  << report["autMotive"].get<std::string>() << "\n";
    }
    return kPass;
}

int cmd_polyomino_enumerate(int area, int cap, const std::string& format) {
    const auto diagrams = enumerate_parallelogram(area, cap);
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& d : diagrams) {
            Json rows = Json::array();
            for (const auto& r : d.rows()) rows.push_back(Json::array({r.first, r.last}));
            arr.push_back(Json{{"rows", rows}, {"columns", d.columns()}});
        }
        print_json(Json{{"schemaVersion", kSchemaVersion}, {"area", area}, {"count", diagrams.size()}, {"diagrams", arr}});
    } else {
        std::cout << diagrams_csv(diagrams);
    }
    return kPass;
}

int cmd_polyomino_gf(int max_area, int cap, const std::string& format) {
    if (max_area > cap) throw Error(ErrorCode::CapExceeded, "area " + std::to_string(max_area) + " exceeds the cap");
    if (max_area < 1) throw Error(ErrorCode::InvalidArgument, "--max-area must be at least 1");
    const BivariateSeries f = parallelogram_gf(max_area, max_area);
    const QSeries at_one = specialize_t_one(f);
    if (format == "json") {
        Json coeffs = Json::array();
        for (int a = 0; a <= max_area; ++a) coeffs.push_back(at_one[a].get_str());
        Json table = Json::array();
        for (int a = 0; a <= max_area; ++a) {
            for (int c = 0; c <= max_area; ++c) {
                if (f.coefficient(c, a) != 0) table.push_back(Json{{"area", a}, {"columns", c}, {"count", f.coefficient(c, a).get_str()}});
            }
        }
        print_json(Json{{"schemaVersion", kSchemaVersion}, {"maxArea", max_area}, {"F1", coeffs}, {"table", table}});
    } else {
        std::cout << "F(1;q):";
        for (int a = 0; a <= max_area; ++a) std::cout << (a ? ", " : " ") << at_one[a].get_str();
        std::cout << "\narea,columns,count\n";
        for (int a = 0; a <= max_area; ++a) {
            for (int c = 0; c <= max_area; ++c) {
                if (f.coefficient(c, a) != 0) std::cout << a << "," << c << "," << f.coefficient(c, a).get_str() << "\n";
            }
        }
    }
    return kPass;
}

int cmd_polyomino_fixed(int n, int cap, const std::string& format) {
    const auto multisets = enumerate_fixed_modules(n, cap);
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& parts : multisets) {
            Json j = Json::array();
            for (const auto& d : parts) j.push_back(d.to_string());
            arr.push_back(j);
        }
        print_json(Json{{"schemaVersion", kSchemaVersion}, {"n", n}, {"count", multisets.size()}, {"modules", arr}});
    } else {
        for (const auto& parts : multisets) {
            std::string line;
            for (const auto& d : parts) line += (line.empty() ? "" : " + ") + d.to_string();
            std::cout << line << "\n";
        }
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification and motivic counting of finite-length modules over k[x,y]"};
    app.require_subcommand(1);
    unsigned threads = default_threads();
    app.add_option("--threads", threads, "Worker threads (default: THREADS env or all cores)")->check(CLI::PositiveNumber);

    std::string format = "text";
    const auto formats = CLI::IsMember({"text", "json"});

    // series
    auto* series = app.add_subcommand("series", "Coefficients of a generating series");
    std::string which;
    int order = 4;
    series->add_option("which", which, "feit-fine | punctual | hilb")->required()->check(CLI::IsMember({"feit-fine", "punctual", "hilb"}));
    series->add_option("--order", order, "Truncation order")->check(CLI::Range(0, kSeriesOrderCap));
    series->add_option("--format", format, "text | json")->check(formats);

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-check tables, point counts or q-series");
    std::string target;
    std::vector<int> ns;
    int q = 2;
    int max_area = 10;
    bool all_pairs = false;
    std::uint64_t budget = OracleOptions{}.budget;
    verify->add_option("target", target, "tables | finite-field | qseries")->required()->check(CLI::IsMember({"tables", "finite-field", "qseries"}));
    verify->add_option("--n", ns, "Module length(s)")->check(CLI::Range(1, 4));
    verify->add_option("--q", q, "Prime field size")->check(CLI::Range(2, 255));
    verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--budget", budget, "Cap on enumerated candidates")->check(CLI::PositiveNumber);
    verify->add_flag("--all-pairs", all_pairs, "Count all commuting pairs (Feit-Fine) instead of nilpotent ones");
    verify->add_option("--max-area", max_area, "Largest area for the q-series check")->check(CLI::Range(1, kDefaultAreaCap));

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Classify a module given as JSON");
    std::string path;
    std::string classify_format = "json";
    classify_cmd->add_option("path", path, "Module JSON file")->required();
    classify_cmd->add_option("--format", classify_format, "json | text")->check(formats);

    // polyomino
    auto* poly = app.add_subcommand("polyomino", "Parallelogram polyominoes and torus-fixed modules");
    poly->require_subcommand(1);
    int cap = kDefaultAreaCap;
    int area = 4, fixed_n = 3, gf_area = 10;
    auto* enumerate = poly->add_subcommand("enumerate", "List parallelogram polyominoes of an area (CSV)");
    enumerate->add_option("--area", area, "Area")->required();
    enumerate->add_option("--cap", cap, "Area cap");
    enumerate->add_option("--format", format, "text | json")->check(formats);
    auto* gf = poly->add_subcommand("gf", "Generating function F(t;q) and F(1;q)");
    gf->add_option("--max-area", gf_area, "Largest area");
    gf->add_option("--cap", cap, "Area cap");
    gf->add_option("--format", format, "text | json")->check(formats);
    auto* fixed = poly->add_subcommand("fixed", "Torus-fixed modules as multisets of polyominoes");
    fixed->add_option("--n", fixed_n, "Length")->required();
    fixed->add_option("--cap", cap, "Area cap");
    fixed->add_option("--format", format, "text | json")->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*series) return cmd_series(which, order, format);
        if (*verify) {
            if (target == "tables") {
                if (ns.empty()) ns = {2, 3, 4};
                for (int n : ns) {
                    if (n < 2) throw Error(ErrorCode::InvalidArgument, "tables exist for n = 2, 3, 4");
                }
                return cmd_verify_tables(ns);
            }
            if (target == "finite-field") {
                if (ns.size() != 1) throw Error(ErrorCode::InvalidArgument, "verify finite-field needs exactly one --n");
                return cmd_verify_finite_field(ns.front(), q, all_pairs, OracleOptions{threads, budget});
            }
            return cmd_verify_qseries(max_area);
        }
        if (*classify_cmd) return cmd_classify(path, classify_format);
        if (*enumerate) return cmd_polyomino_enumerate(area, cap, format);
        if (*gf) return cmd_polyomino_gf(gf_area, cap, format);
        if (*fixed) return cmd_polyomino_fixed(fixed_n, cap, format);
    } catch (const Error& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return exit_for(e);
    }
    return kUsage;
}
