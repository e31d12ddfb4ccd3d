// Command-line front end: loads a problem file, dispatches to the
// resolution/periodicity engines, and prints tables or JSON reports.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tatecalc/problem.hpp"
#include "tatecalc/report.hpp"

namespace {

using namespace tate;

struct Options {
    std::string problem;
    std::string module_name;
    std::string with_name;
    std::string suite;
    std::string format = "table";
    std::int64_t steps = 8;
    std::int64_t from = -6;
    std::int64_t to = 6;
    std::uint64_t seed = 0;
    unsigned max_period = 6;
    std::size_t pairs = 20;
};

Json report_head(const Options& opt, const std::string& command, const Problem& prob) {
    Json j;
    j["tool"] = "tatecalc";
    j["version"] = kVersion;
    j["command"] = command;
    j["problem"] = opt.problem;
    j["seed"] = opt.seed;
    j["ring"] = ring_json(*prob.ring);
    return j;
}

void emit(const Options& opt, const Json& j, const std::string& table) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table;
}

int cmd_invariant(const Options& opt, const std::string& command) {
    Problem prob = load_problem(opt.problem);
    const FinModule& M = prob.module(opt.module_name);
    InvariantReport rep{InvariantReport::Kind::betti, 0, {}, ""};
    std::string label;

    if (command == "resolve") {
        rep = betti_report(minimal_resolution(M, static_cast<std::size_t>(opt.steps)));
        label = "beta";
    } else if (command == "tate-betti") {
        CompleteResolution T =
            complete_resolution(M, static_cast<int>(opt.from), static_cast<int>(opt.to));
        rep = tate_betti_report(T);
        label = "beta-hat";
    } else if (command == "bass") {
        rep = bass_numbers(M, static_cast<std::size_t>(opt.steps));
        label = "mu";
    } else if (command == "tate-bass") {
        rep = tate_bass(M, static_cast<int>(opt.from), static_cast<int>(opt.to));
        label = "mu-hat";
    } else {
        const FinModule& N = prob.module(opt.with_name);
        if (command == "ext-hat")
            rep = ext_hat(M, N, static_cast<int>(opt.from), static_cast<int>(opt.to));
        else
            rep = tor_hat(M, N, static_cast<int>(opt.from), static_cast<int>(opt.to));
        label = command == "ext-hat" ? "ext-hat" : "tor-hat";
    }

    Json j = report_head(opt, command, prob);
    j["module"] = opt.module_name;
    if (!opt.with_name.empty()) j["with"] = opt.with_name;
    j["result"] = invariant_json(rep);

    std::ostringstream table;
    table << ring_table(*prob.ring) << "module " << opt.module_name << " (dim "
          << M.dim() << ")\n"
          << invariant_table(label, rep);
    emit(opt, j, table.str());
    return 0;
}

int cmd_dual(const Options& opt) {
    Problem prob = load_problem(opt.problem);
    const FinModule& M = prob.module(opt.module_name);
    FinModule Mv = matlis_dual(M);
    FinModule Mvv = matlis_dual(Mv);
    // the canonical evaluation map is the identity in coordinates
    bool canonical = Mvv.dim() == M.dim();
    for (std::size_t v = 0; v < M.algebra()->num_vars() && canonical; ++v)
        canonical = Mvv.action(v) == M.action(v);

    Json j = report_head(opt, "dual", prob);
    j["module"] = opt.module_name;
    j["result"]["dim"] = M.dim();
    j["result"]["dual_dim"] = Mv.dim();
    j["result"]["double_dual_canonical_iso"] = canonical;

    std::ostringstream table;
    table << ring_table(*prob.ring) << "module " << opt.module_name << " (dim " << M.dim()
          << "), Matlis dual dim " << Mv.dim() << "\n"
          << "double dual equals the module via the canonical map: "
          << (canonical ? "yes" : "NO") << "\n";
    emit(opt, j, table.str());
    return canonical ? 0 : 1;
}

int cmd_periodicity(const Options& opt, bool window_given) {
    Problem prob = load_problem(opt.problem);
    const FinModule& M = prob.module(opt.module_name);

    std::optional<PeriodicityCertificate> cert;
    std::string complex_kind;
    if (window_given) {
        CompleteResolution T =
            complete_resolution(M, static_cast<int>(opt.from), static_cast<int>(opt.to));
        cert = detect_complex_periodicity(T, opt.max_period, opt.seed);
        complex_kind = "complete resolution on [" + std::to_string(opt.from) + ", " +
                       std::to_string(opt.to) + "]";
    } else {
        Resolution res = minimal_resolution(M, static_cast<std::size_t>(opt.steps));
        cert = detect_complex_periodicity(res, opt.max_period, opt.seed);
        complex_kind = "minimal resolution, " + std::to_string(opt.steps) + " steps";
    }

    Json j = report_head(opt, "periodicity", prob);
    j["module"] = opt.module_name;
    j["complex"] = complex_kind;
    j["max_period"] = opt.max_period;
    if (cert)
        j["result"] = certificate_json(*cert);
    else
        j["result"] = "not found (no claim of aperiodicity)";

    std::ostringstream table;
    table << ring_table(*prob.ring) << "module " << opt.module_name << ", " << complex_kind
          << "\n";
    if (cert)
        table << "periodic: n0 = " << cert->n0 << ", period s = " << cert->s
              << " (syzygy isomorphism certified, first chunk checked)\n";
    else
        table << "no certificate found with s <= " << opt.max_period
              << " (this does not prove aperiodicity)\n";
    emit(opt, j, table.str());
    return 0;
}

int cmd_verify(const Options& opt) {
    Problem prob = load_problem(opt.problem);
    SuiteReport rep = run_suite(opt.suite, prob.ring, opt.seed, opt.pairs);

    Json j = report_head(opt, "verify", prob);
    j["pairs"] = opt.pairs;
    j["result"] = suite_json(rep);

    std::ostringstream table;
    table << ring_table(*prob.ring) << "suite " << rep.name << ": " << status_name(rep.status)
          << "\n";
    if (!rep.note.empty()) table << "  " << rep.note << "\n";
    for (const auto& line : rep.lines) table << "  " << line << "\n";
    emit(opt, j, table.str());
    return rep.status == SuiteStatus::fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti, Tate-Betti, Bass and Tate-Bass invariants of modules over "
                 "Artinian local algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("problem", opt.problem, "problem file (JSON)")->required();
        sub->add_option("--format", opt.format, "output format: table | json")
            ->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--seed", opt.seed, "seed for randomized searches");
        return sub;
    };

    auto* resolve = add_common(app.add_subcommand("resolve", "minimal free resolution"));
    resolve->add_option("--module", opt.module_name)->required();
    resolve->add_option("--steps", opt.steps);

    auto* tb = add_common(app.add_subcommand("tate-betti", "Tate-Betti numbers"));
    tb->add_option("--module", opt.module_name)->required();
    tb->add_option("--from", opt.from);
    tb->add_option("--to", opt.to);

    auto* bass = add_common(app.add_subcommand("bass", "Bass numbers (two routes)"));
    bass->add_option("--module", opt.module_name)->required();
    bass->add_option("--steps", opt.steps);

    auto* tbass = add_common(app.add_subcommand("tate-bass", "Tate-Bass numbers"));
    tbass->add_option("--module", opt.module_name)->required();
    tbass->add_option("--from", opt.from);
    tbass->add_option("--to", opt.to);

    auto* eh = add_common(app.add_subcommand("ext-hat", "Tate cohomology dimensions"));
    eh->add_option("--module", opt.module_name)->required();
    eh->add_option("--with", opt.with_name)->required();
    eh->add_option("--from", opt.from);
    eh->add_option("--to", opt.to);

    auto* th = add_common(app.add_subcommand("tor-hat", "Tate homology dimensions"));
    th->add_option("--module", opt.module_name)->required();
    th->add_option("--with", opt.with_name)->required();
    th->add_option("--from", opt.from);
    th->add_option("--to", opt.to);

    auto* dual = add_common(app.add_subcommand("dual", "Matlis dual of a module"));
    dual->add_option("--module", opt.module_name)->required();

    auto* per = add_common(app.add_subcommand("periodicity", "complex periodicity certificate"));
    per->add_option("--module", opt.module_name)->required();
    per->add_option("--steps", opt.steps);
    per->add_option("--from", opt.from);
    per->add_option("--to", opt.to);
    per->add_option("--max-period", opt.max_period);

    auto* verify = add_common(app.add_subcommand("verify", "run a verification suite"));
    verify->add_option("--suite", opt.suite)->required();
    verify->add_option("--pairs", opt.pairs, "number of random instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "dual") return cmd_dual(opt);
        if (name == "periodicity")
            return cmd_periodicity(opt, sub->count("--from") > 0 || sub->count("--to") > 0);
        if (name == "verify") return cmd_verify(opt);
        return cmd_invariant(opt, name);
    } catch (const tate::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tate::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
