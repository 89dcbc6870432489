#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include <chenruan/report.hpp>

using namespace chenruan;

namespace {

int thread_count_from_env() {
    if (const char* env = std::getenv("CHENRUAN_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void write_output(const json& doc, const std::string& json_path) {
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::invalid_argument("cannot write JSON output to " + json_path);
        out << doc.dump(2) << "\n";
    }
}

Fan resolve_fan(const std::string& fixture, const std::string& fan_file) {
    if (!fan_file.empty()) return load_fan_file(fan_file);
    auto builtin = Fan::builtin(fixture);
    if (!builtin) throw std::invalid_argument("unknown builtin fixture: " + fixture);
    return *builtin;
}

void print_goldens(const ReportBundle& rb) {
    for (const auto& g : rb.goldens) {
        std::cout << (g.pass ? "pass  " : "FAIL  ") << g.id << "  expected " << g.expected << "  got " << g.actual
                  << "\n";
    }
}

int finish(const ReportBundle& rb, const std::string& json_path) {
    write_output(rb.document, json_path);
    return rb.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact orbifold cohomology computations for Calabi-Yau toric hypersurfaces"};
    app.require_subcommand(1);
    int threads = thread_count_from_env();

    std::string fixture = "mirror-quintic", fan_file, json_path, psi_str = "1", order_name = "grevlex";
    int opt_k = 1, opt_n = 1;

    auto* cmd_sectors = app.add_subcommand("sectors", "Enumerate tricyclic sectors and the census");
    cmd_sectors->add_option("--fixture", fixture, "builtin fan name");
    cmd_sectors->add_option("--fan", fan_file, "fan file (JSON)");
    cmd_sectors->add_option("--json", json_path, "write JSON output to this path");

    auto* cmd_periods = app.add_subcommand("periods", "Solve the period matrix for one cover type");
    cmd_periods->add_option("--k", opt_k, "cover type (1, 2 or 3)")->required();
    cmd_periods->add_option("--json", json_path, "write JSON output to this path");

    auto* cmd_obs = app.add_subcommand("obstruction", "Obstruction-action eigen analysis");
    cmd_obs->add_option("--n", opt_n, "tangent twist (1..4)")->required();
    cmd_obs->add_option("--k", opt_k, "cover type (1..4)")->required();
    cmd_obs->add_option("--json", json_path, "write JSON output to this path");

    auto* cmd_loc = app.add_subcommand("localize", "Fixed-point localization on the sector surface");
    cmd_loc->add_option("--json", json_path, "write JSON output to this path");

    auto* cmd_cup = app.add_subcommand("cupprod", "Middle-cohomology residue pairing");
    cmd_cup->add_option("--psi", psi_str, "family parameter (rational)")->required();
    cmd_cup->add_option("--order", order_name, "monomial order: grevlex or lex");
    cmd_cup->add_option("--json", json_path, "write JSON output to this path");

    auto* cmd_tri = app.add_subcommand("triangle-check", "Hyperbolic triangle-group relations");
    cmd_tri->add_option("--json", json_path, "write JSON output to this path");

    auto* cmd_rep = app.add_subcommand("report", "Run every computation and the golden checks");
    cmd_rep->add_option("--fixture", fixture, "builtin fan name");
    cmd_rep->add_option("--fan", fan_file, "fan file (JSON)");
    cmd_rep->add_option("--psi", psi_str, "family parameter (rational)");
    cmd_rep->add_option("--json", json_path, "write JSON output to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_sectors->parsed()) {
            Fan fan = resolve_fan(fixture, fan_file);
            ReportBundle rb;
            rb.document["metadata"] = {{"fixture", fan_file.empty() ? fixture : fan_file},
                                       {"version", kToolVersion}};
            rb.document["sectors"] =
                report_detail::sectors_section(rb, fan, fan.same_rays(Fan::mirror_quintic()), true);
            const auto& census = rb.document["sectors"]["census"];
            std::cout << "sector census: ordered nonzero " << census["ordered_nonzero"] << " (type i "
                      << census["type_i"] << ", type ii " << census["type_ii"] << "), curve sectors "
                      << census["curve_sectors"] << "\n";
            print_goldens(rb);
            return finish(rb, json_path);
        }
        if (cmd_periods->parsed()) {
            if (opt_k < 1 || opt_k > 3) throw std::invalid_argument("periods: --k must be 1, 2 or 3");
            ReportBundle rb;
            rb.document = report_detail::periods_section(rb, opt_k);
            std::cout << "period solutions for k=" << opt_k << ":\n";
            for (const auto& s : rb.document["solutions"])
                std::cout << "  p=" << s["p"].get<std::string>() << " q=" << s["q"].get<std::string>()
                          << " s=" << s["s"].get<std::string>() << (s["imP_posdef"].get<bool>() ? "  [Im P > 0]" : "")
                          << "\n";
            print_goldens(rb);
            return finish(rb, json_path);
        }
        if (cmd_obs->parsed()) {
            if (opt_k == 4) {
                ReportBundle rb;
                rb.document = {{"n", opt_n}, {"k", 4}, {"invariant_rank", 0},
                               {"note", "rational cover: rank-zero bundle, no eigen analysis"}};
                std::cout << "k=4: rank-zero obstruction bundle\n";
                return finish(rb, json_path);
            }
            if (opt_n < 1 || opt_n > 4 || opt_k < 1) throw std::invalid_argument("obstruction: bad --n/--k");
            PeriodSolveResult pr = solve_period_matrix(monodromy_h1_action(opt_k));
            ObstructionAction act = build_obstruction_matrix(opt_n, opt_k, pr.period());
            long rank = invariant_rank(act);
            ReportBundle rb;
            json mj = json::array();
            for (const auto& row : act.matrix) {
                json r = json::array();
                for (const auto& x : row) r.push_back(fmt_complex(x.embed()));
                mj.push_back(r);
            }
            rb.document = {{"n", opt_n}, {"k", opt_k}, {"invariant_rank", rank}, {"matrix_embedding", mj}};
            std::cout << "obstruction action (n=" << opt_n << ", k=" << opt_k << "): invariant rank " << rank
                      << "\n";
            return finish(rb, json_path);
        }
        if (cmd_loc->parsed()) {
            ReportBundle rb;
            rb.document = report_detail::localization_section(rb);
            std::cout << "localization sum: " << rb.document["sum"].get<std::string>() << "\n";
            print_goldens(rb);
            return finish(rb, json_path);
        }
        if (cmd_cup->parsed()) {
            MonoOrder order = MonoOrder::grevlex();
            if (order_name == "lex") order = MonoOrder::lex();
            else if (order_name != "grevlex") throw std::invalid_argument("cupprod: --order must be grevlex or lex");
            ReportBundle rb;
            rb.document = report_detail::cupprod_section(rb, rat_parse(psi_str), order);
            std::cout << "residue constant c = " << rb.document["c"].get<std::string>() << "\n";
            print_goldens(rb);
            return finish(rb, json_path);
        }
        if (cmd_tri->parsed()) {
            ReportBundle rb;
            rb.document = report_detail::triangle_section(rb);
            for (const auto& c : rb.document["relations"])
                std::cout << (c["pass"].get<bool>() ? "pass  " : "FAIL  ") << c["name"].get<std::string>()
                          << "  defect " << c["defect"].get<double>() << "\n";
            return finish(rb, json_path);
        }
        if (cmd_rep->parsed()) {
            Fan fan = resolve_fan(fixture, fan_file);
            ReportBundle rb = run_report(fan, rat_parse(psi_str), fan_file.empty() ? fixture : fan_file, threads);
            print_goldens(rb);
            std::cout << (rb.all_pass() ? "all golden checks passed" : "GOLDEN CHECK FAILURES") << "\n";
            return finish(rb, json_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
