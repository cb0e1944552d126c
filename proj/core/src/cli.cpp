#include "coverhfk/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "coverhfk/errors.hpp"
#include "coverhfk/report.hpp"
#include "coverhfk/verify.hpp"

namespace coverhfk::cli {

namespace {

std::string echo(const std::vector<std::string>& args) {
    std::string s = "coverhfk";
    for (const auto& a : args) s += " " + a;
    return s;
}

std::vector<std::int64_t> parse_chars(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoll(tok));
    }
    return out;
}

void emit(const report::json& doc, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << doc.dump(2) << "\n";
    else
        out << report::render_table(doc);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"knot Floer data of two-bridge knots and their cyclic branched covers"};
    app.require_subcommand(1);

    std::string format = "table";
    long long seed = 0;  // accepted for interface stability; everything is deterministic
    int jobs = 1;
    app.add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
    app.add_option("--seed", seed);
    app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    long long p1 = 0, q1 = 0, p2 = 0, q2 = 0;
    int m = 2;
    std::string chars_arg;

    CLI::App* info = app.add_subcommand("info", "normalization, continued fraction, signature, alexander");
    info->add_option("p", p1)->required();
    info->add_option("q", q1)->required();

    CLI::App* base = app.add_subcommand("base", "generators and hat-HFK of the base knot");
    base->add_option("p", p1)->required();
    base->add_option("q", q1)->required();

    CLI::App* cover = app.add_subcommand("cover", "Spin-c class summaries of the branched cover");
    cover->add_option("p", p1)->required();
    cover->add_option("q", q1)->required();
    cover->add_option("--m", m)->check(CLI::PositiveNumber);

    CLI::App* torsion = app.add_subcommand("torsion", "Turaev torsion numerator and twisted polynomials");
    torsion->add_option("p", p1)->required();
    torsion->add_option("q", q1)->required();
    torsion->add_option("--m", m)->check(CLI::PositiveNumber);
    torsion->add_option("--chars", chars_arg);

    int pres_m = 1;
    CLI::App* pres = app.add_subcommand("presentation", "group presentations in letter format");
    pres->add_option("p", p1)->required();
    pres->add_option("q", q1)->required();
    pres->add_option("--m", pres_m)->check(CLI::PositiveNumber);

    CLI::App* compare = app.add_subcommand("compare", "base invariants and cover fingerprints of two knots");
    compare->add_option("p1", p1)->required();
    compare->add_option("q1", q1)->required();
    compare->add_option("p2", p2)->required();
    compare->add_option("q2", q2)->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "full invariant sweep");
    long long max_p = 99;
    verify_cmd->add_option("--max-p", max_p)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--m", m)->check(CLI::PositiveNumber);

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const std::string cmd = echo(args);
        if (info->parsed()) {
            emit(report::info_report(normalize(p1, q1), cmd), format, out);
        } else if (base->parsed()) {
            emit(report::base_report(normalize(p1, q1), cmd), format, out);
        } else if (cover->parsed()) {
            emit(report::cover_report(normalize(p1, q1), m, cmd), format, out);
        } else if (torsion->parsed()) {
            std::optional<std::vector<std::int64_t>> chars;
            if (!chars_arg.empty()) chars = parse_chars(chars_arg);
            emit(report::torsion_report(normalize(p1, q1), m, chars, cmd), format, out);
        } else if (pres->parsed()) {
            TwoBridgeKnot k = normalize(p1, q1);
            Presentation b = two_bridge_presentation(k);
            out << (pres_m == 1 ? b : lift_presentation(b, pres_m)).text();
        } else if (compare->parsed()) {
            emit(report::compare_report(normalize(p1, q1), normalize(p2, q2), cmd), format, out);
        } else if (verify_cmd->parsed()) {
            verify::Options opt;
            opt.max_p = max_p;
            opt.m = m;
            opt.jobs = jobs;
            verify::Report r = verify::run_verification(opt);
            if (format == "json") {
                report::json doc;
                doc["command"] = cmd;
                doc["version"] = report::kVersion;
                doc["kind"] = "verify";
                doc["knots"] = r.knots;
                report::json checks = report::json::object();
                for (const auto& [name, cnt] : r.checks) checks[name] = cnt;
                doc["checks"] = checks;
                report::json fails = report::json::array();
                for (const auto& f : r.failures) fails.push_back(f);
                doc["failures"] = fails;
                doc["ok"] = r.ok();
                out << doc.dump(2) << "\n";
            } else {
                out << verify::render(r);
            }
            return r.ok() ? 0 : 1;
        }
        return 0;
    } catch (const InvalidParameters& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfiniteH1& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace coverhfk::cli
