#include "c2mot/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "c2mot/chart.hpp"
#include "c2mot/expr.hpp"
#include "c2mot/realization.hpp"
#include "c2mot/verify.hpp"

namespace c2mot {

namespace {

// Thrown for malformed flag combinations that CLI11 cannot see.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RO2Degree pair_of(const std::vector<int>& v) { return {v.at(0), v.size() > 1 ? v[1] : 0}; }

MotDegree query_degree(const RingId& ring, const std::vector<int>& deg, const std::vector<int>& wt) {
    const RO2Degree d = pair_of(deg);
    const RO2Degree w = wt.empty() ? RO2Degree{} : pair_of(wt);
    if (is_integral(ring)) {
        if (d.p != 0 || w.p != 0) throw UsageError(fmt::format("ring {} takes integer degrees", to_string(ring)));
        return integral_bidegree(d.a, w.a);
    }
    if (is_topological(ring) && !wt.empty() && (w.a != 0 || w.p != 0))
        throw UsageError(fmt::format("ring {} has no weight", to_string(ring)));
    return {d, w};
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

Element realize(const RingId& ring, const Element& x) {
    using K = RingId::Kind;
    switch (ring.kind) {
    case K::motivic: return re_point(std::get<MotElem>(x));
    case K::ec2mot: return re_ec2(std::get<EC2MotElem>(x));
    case K::tildemot: return re_tilde(std::get<TildeMotElem>(x));
    case K::bc2: return re_bc2(std::get<BC2Elem>(x));
    default: break;
    }
    throw UsageError(fmt::format("realization is defined on motivic, ec2mot, tildemot and bc2, not {}", to_string(ring)));
}

int cmd_verify(const std::string& suite, int window, std::uint64_t seed, int trials, const std::string& report_path,
               bool no_report, std::ostream& out, std::ostream& err) {
    if (suite != "all" && !is_suite_name(suite)) {
        err << fmt::format("unknown suite '{}'\n", suite);
        return kExitUsage;
    }
    if (window < 0) {
        err << "window must be >= 0\n";
        return kExitUsage;
    }
    if (trials < 1) {
        err << "trials must be >= 1\n";
        return kExitUsage;
    }
    const Window w = Window::symmetric(window);
    std::vector<Report> reports;
    if (suite == "all")
        for (const auto& name : suite_names()) reports.push_back(run_suite(name, w, seed, trials));
    else
        reports.push_back(run_suite(suite, w, seed, trials));

    std::size_t failures = 0;
    for (const auto& r : reports) {
        out << fmt::format("{}: {} checks, {} failures\n", r.suite, r.checks.size(), r.failures());
        std::size_t shown = 0;
        for (const auto& c : r.checks) {
            if (c.pass()) continue;
            if (++shown > 20) {
                out << "  ...\n";
                break;
            }
            out << fmt::format("  FAIL {} @ {}: expected {}, actual {}\n", c.name, c.location, c.expected, c.actual);
        }
        failures += r.failures();
    }
    out << (failures == 0 ? std::string("all checks passed\n") : fmt::format("{} failures\n", failures));
    if (!no_report) {
        std::ofstream file(report_path);
        if (!file) {
            err << fmt::format("cannot write report to {}\n", report_path);
            return kExitUsage;
        }
        file << to_json(reports, w, seed, trials).dump(2) << '\n';
    }
    return failures == 0 ? kExitOk : kExitFailures;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Calculator and verification harness for C2-equivariant Bredon and motivic cohomology rings"};
    app.require_subcommand(1);
    const std::string ring_help =
        "pt, ec2top, tildetop, b<i>, motivic, ec2mot, tildemot, bc2, cfield, topbc2";

    std::string ring_name;
    std::vector<int> deg, wt;
    auto* dim = app.add_subcommand("dim", "Dimension and monomial basis in one degree");
    dim->add_option("--ring", ring_name, ring_help)->required();
    dim->add_option("--deg", deg, "a [p]")->required()->expected(1, 2);
    dim->add_option("--wt", wt, "b [q]")->expected(1, 2);

    std::string lhs, rhs;
    auto* mul = app.add_subcommand("mul", "Product of two elements");
    mul->add_option("--ring", ring_name, ring_help)->required();
    mul->add_option("lhs", lhs)->required();
    mul->add_option("rhs", rhs)->required();

    std::string expr_text;
    auto* print = app.add_subcommand("print", "Parse an element and print its canonical form");
    print->add_option("--ring", ring_name, ring_help)->required();
    print->add_option("expr", expr_text)->required();

    auto* degree_cmd = app.add_subcommand("degree", "Degree of a homogeneous element");
    degree_cmd->add_option("--ring", ring_name, ring_help)->required();
    degree_cmd->add_option("expr", expr_text)->required();

    auto* realize_cmd = app.add_subcommand("realize", "Betti realization of an element");
    realize_cmd->add_option("--ring", ring_name, "motivic, ec2mot, tildemot or bc2")->required();
    realize_cmd->add_option("expr", expr_text)->required();

    std::vector<int> window_box;
    std::string format = "ascii";
    bool plane = false;
    auto* chart = app.add_subcommand("chart", "Dimension chart over a window");
    chart->add_option("--ring", ring_name, ring_help);
    chart->add_flag("--plane", plane, "Weight plane labelled by region");
    chart->add_option("--wt", wt, "b q (fixed weight for motivic rings)")->expected(1, 2);
    chart->add_option("--window", window_box, "xmin xmax ymin ymax")->required()->expected(4);
    chart->add_option("--format", format, "ascii, json or csv")->check(CLI::IsMember({"ascii", "json", "csv"}));

    std::string suite;
    int window = 8;
    std::uint64_t seed = 1;
    int trials = 1000;
    std::string report_path = "verify_report.json";
    bool no_report = false;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", suite, "figures, vanishing, exactness, ring, realization, p1 or all")->required();
    verify->add_option("--window", window, "Half-width N of the window [-N, N] on every axis");
    verify->add_option("--seed", seed, "Seed of the randomized ring-axiom checks");
    verify->add_option("--trials", trials, "Random trials per ring-axiom check");
    verify->add_option("--report", report_path, "JSON report path");
    verify->add_flag("--no-report", no_report, "Skip the JSON report");

    std::vector<std::string> argv_store{"c2mot"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(suite, window, seed, trials, report_path, no_report, out, err);

        if (*chart) {
            const ChartWindow box{window_box[0], window_box[1], window_box[2], window_box[3]};
            if (box.x_min > box.x_max || box.y_min > box.y_max) throw UsageError("window has an axis with min > max");
            if (plane) {
                if (!ring_name.empty()) throw UsageError("--plane takes no --ring");
                if (format == "csv") throw UsageError("the weight plane is available as ascii or json");
                const auto p = build_plane(box);
                out << (format == "json" ? to_json(p).dump(2) + "\n" : render_ascii(p));
                return kExitOk;
            }
            if (ring_name.empty()) throw UsageError("chart needs --ring or --plane");
            const RingId ring = parse_ring_id(ring_name);
            if (!wt.empty() && (is_topological(ring) || is_integral(ring)))
                throw UsageError(fmt::format("ring {} takes no --wt", to_string(ring)));
            const auto c = build_chart(ring, box, wt.empty() ? RO2Degree{} : pair_of(wt));
            if (format == "json")
                out << to_json(c).dump(2) << '\n';
            else if (format == "csv")
                out << render_csv(c);
            else
                out << render_ascii(c);
            return kExitOk;
        }

        const RingId ring = parse_ring_id(ring_name);
        if (*dim) {
            const auto basis = basis_at(ring, query_degree(ring, deg, wt));
            out << basis.size() << ':' << (basis.empty() ? "" : " " + join(basis, ", ")) << '\n';
            return kExitOk;
        }
        if (*mul) {
            out << print_canonical(multiply(parse(ring, lhs), parse(ring, rhs))) << '\n';
            return kExitOk;
        }
        if (*print) {
            out << print_canonical(parse(ring, expr_text)) << '\n';
            return kExitOk;
        }
        if (*degree_cmd) {
            const auto d = degree_of(parse(ring, expr_text));
            out << (d ? (is_integral(ring) ? fmt::format("({}, {})", d->deg.a, d->wt.a)
                         : is_topological(ring) ? to_string(d->deg)
                                                : to_string(*d))
                      : std::string("zero (every degree)"))
                << '\n';
            return kExitOk;
        }
        if (*realize_cmd) {
            out << print_canonical(realize(ring, parse(ring, expr_text))) << '\n';
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const ConstraintError& e) {
        err << "constraint violated: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace c2mot
