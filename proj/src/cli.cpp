#include "approxlab/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "approxlab/cayley.hpp"
#include "approxlab/covering.hpp"
#include "approxlab/io.hpp"
#include "approxlab/laws.hpp"

namespace approxlab::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Sink {
    std::ostream& fallback;
    std::ofstream file;
    explicit Sink(const std::string& path, std::ostream& fb) : fallback(fb) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw Error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file.is_open() ? file : fallback; }
};

std::map<std::string, std::string> parse_params(const std::string& s) {
    std::map<std::string, std::string> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        auto eq = cur.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value in --params");
        out[cur.substr(0, eq)] = cur.substr(eq + 1);
        cur.clear();
    };
    for (char c : s) {
        if (c == ',') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

struct Options {
    std::uint64_t seed = 1;
    std::size_t budget = kDefaultBudget;
    int jobs = 1;
    std::string out_path;

    std::string group, set_path, gens_path, kind, spec, law, params, l2_mode = "printed",
                cheeger_mode = "exact";
    bool tripling = false;
    int power_m = 3, trials = 100, iters = 2000;
    std::int64_t probe_p = 5;
    double epsilon = 0.1;
};

int cmd_stats(const Options& o, std::ostream& out) {
    Group g(parse_group(o.group));
    ElementSet A = read_set_file(o.set_path, g);
    DoublingStats st = doubling_stats(A, o.tripling, o.budget);
    out << "size,doubling_num,doubling_den,tripling_num,tripling_den,symmetric,has_identity\n";
    out << st.size << ',' << st.doubling.get_num() << ',' << st.doubling.get_den() << ',';
    if (st.tripling)
        out << st.tripling->get_num() << ',' << st.tripling->get_den();
    else
        out << ',';
    out << ',' << (st.symmetric ? 1 : 0) << ',' << (st.contains_identity ? 1 : 0) << "\n";
    return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
    Group g(parse_group(o.group));
    ElementSet A = read_set_file(o.set_path, g);
    CoverCertificate cert = o.kind == "ruzsa" ? ruzsa_cover(A, o.budget)
                                              : certify_approx_group(A, o.budget);
    VerifyResult v = verify_certificate(A, cert, o.power_m, o.budget);
    out << "kind=" << o.kind << "\n";
    out << "K=" << to_frac_string(cert.bound_K) << "\n";
    out << "X_size=" << cert.X.size() << "\n";
    out << "status=" << (v.ok ? "ok" : "violated") << "\n";
    if (v.witness) out << "witness=" << g.format_element(*v.witness) << "\n";
    out << "# X elements\n";
    for (const auto& x : cert.X.members()) out << g.format_element(x) << "\n";
    bool size_ok = Rational(static_cast<unsigned long>(cert.X.size())) <= cert.bound_K;
    return (v.ok && size_ok) ? kExitOk : kExitViolated;
}

int cmd_gen(const Options& o, std::ostream& out, bool have_out_file) {
    QL2Mode mode = o.l2_mode == "symmetric" ? QL2Mode::Symmetric : QL2Mode::AsPrinted;
    std::optional<Group> g;
    if (!o.group.empty()) g.emplace(parse_group(o.group));
    StructuredSpec spec = [&] {
        if (!g) {
            // only the box spec carries its own ambient group
            if (o.spec.rfind("box", 0) != 0) throw ParseError("--group is required for this spec");
            return parse_structured_spec(o.spec, Group(GroupDescriptor::int_lattice(1)), mode);
        }
        return parse_structured_spec(o.spec, *g, mode);
    }();
    ElementSet s = expand(spec, o.budget);
    (void)have_out_file;
    out << "# group: " << s.group().desc().name() << "\n";
    for (const auto& e : s.members()) out << s.group().format_element(e) << "\n";
    return kExitOk;
}

int cmd_laws_run(const Options& o, std::ostream& out) {
    LawSweepConfig cfg;
    cfg.law = o.law;
    cfg.trials = static_cast<std::uint64_t>(o.trials);
    cfg.seed = o.seed;
    cfg.params = parse_params(o.params);
    cfg.budget = o.budget;
    cfg.jobs = o.jobs;
    auto reports = run_law_sweep(cfg);
    out << report_csv_header() << "\n";
    bool violated = false, budget_hit = false;
    for (const auto& r : reports) {
        out << report_csv_row(r) << "\n";
        violated |= r.status == LawStatus::Violated;
        budget_hit |= r.status == LawStatus::BudgetExceededStatus;
    }
    if (violated) return kExitViolated;
    if (budget_hit) return kExitBudget;
    return kExitOk;
}

int cmd_cayley_build(const Options& o, std::ostream& out, bool have_out_file) {
    Group g(parse_group(o.group));
    ElementSet S = read_set_file(o.gens_path, g);
    CayleyGraph cg = build_cayley(g, S);
    auto emit_edges = [&](std::ostream& os) {
        for (std::uint32_t i = 0; i < cg.size(); ++i)
            for (std::uint32_t j : cg.adjacency[i])
                if (i < j) os << i << ' ' << j << "\n";
    };
    auto emit_map = [&](std::ostream& os) {
        for (std::uint32_t i = 0; i < cg.size(); ++i)
            os << i << ' ' << g.format_element(cg.vertices[i]) << "\n";
    };
    if (have_out_file) {
        std::ofstream mf(o.out_path + ".map");
        if (!mf) throw Error("cannot open vertex map file");
        emit_edges(out);
        emit_map(mf);
    } else {
        out << "# edges\n";
        emit_edges(out);
        out << "# vertex map\n";
        emit_map(out);
    }
    return kExitOk;
}

int cmd_cayley_cheeger(const Options& o, std::ostream& out) {
    Group g(parse_group(o.group));
    ElementSet S = read_set_file(o.gens_path, g);
    CayleyGraph cg = build_cayley(g, S);
    CheegerMode mode = o.cheeger_mode == "heuristic" ? CheegerMode::Heuristic : CheegerMode::Exact;
    CheegerResult r = cheeger(cg, mode, o.jobs, o.seed, o.iters);
    out << "mode=" << (mode == CheegerMode::Exact ? "exact" : "heuristic_upper_bound") << "\n";
    out << "h=" << to_frac_string(r.value) << "\n";
    out << "witness=";
    for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? " " : "") << r.witness[i];
    out << "\n";
    return kExitOk;
}

int cmd_cayley_probe(const Options& o, std::ostream& out) {
    auto rows = sl2_growth_probe(o.probe_p, o.trials, o.seed, o.epsilon);
    out << probe_csv_header() << "\n";
    for (const auto& r : rows) out << probe_csv_row(r) << "\n";
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"approxlab: exact product-set arithmetic and approximate-group verification"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--budget", o.budget, "element budget");
    app.add_option("--jobs", o.jobs, "worker threads (output independent of the value)");
    app.add_option("--out", o.out_path, "output file (default: stdout)");

    auto* stats = app.add_subcommand("stats", "doubling statistics for a set file");
    stats->fallthrough();
    stats->add_option("--group", o.group)->required();
    stats->add_option("--set", o.set_path)->required();
    stats->add_flag("--tripling", o.tripling);

    auto* certify = app.add_subcommand("certify", "covering certificates with verification");
    certify->fallthrough();
    certify->add_option("--group", o.group)->required();
    certify->add_option("--set", o.set_path)->required();
    certify->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"ruzsa", "approx"}));
    certify->add_option("--power", o.power_m);

    auto* gen = app.add_subcommand("gen", "expand a structured-set spec to an element file");
    gen->fallthrough();
    gen->add_option("--spec", o.spec)->required();
    gen->add_option("--group", o.group);
    gen->add_option("--l2-mode", o.l2_mode)->check(CLI::IsMember({"printed", "symmetric"}));

    auto* laws = app.add_subcommand("laws", "verified-inequality sweeps");
    laws->fallthrough();
    auto* laws_run = laws->add_subcommand("run", "run one law sweep");
    laws_run->fallthrough();
    laws_run->add_option("--law", o.law)->required();
    laws_run->add_option("--trials", o.trials);
    laws_run->add_option("--params", o.params);
    laws->require_subcommand(1);

    auto* cay = app.add_subcommand("cayley", "Cayley graphs, Cheeger constants, growth probe");
    cay->fallthrough();
    cay->require_subcommand(1);
    auto* cb = cay->add_subcommand("build", "export edge list and vertex map");
    cb->fallthrough();
    cb->add_option("--group", o.group)->required();
    cb->add_option("--gens", o.gens_path)->required();
    auto* cc = cay->add_subcommand("cheeger", "vertex Cheeger constant");
    cc->fallthrough();
    cc->add_option("--group", o.group)->required();
    cc->add_option("--gens", o.gens_path)->required();
    cc->add_flag_callback("--exact", [&o] { o.cheeger_mode = "exact"; });
    cc->add_flag_callback("--heuristic", [&o] { o.cheeger_mode = "heuristic"; });
    cc->add_option("--iters", o.iters);
    auto* cp = cay->add_subcommand("probe", "SL2 product-growth probe (exploratory)");
    cp->fallthrough();
    cp->add_option("--p", o.probe_p)->required();
    cp->add_option("--trials", o.trials);
    cp->add_option("--epsilon", o.epsilon);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        Sink sink(o.out_path, out);
        const bool have_out_file = !o.out_path.empty();
        if (stats->parsed()) return cmd_stats(o, sink.stream());
        if (certify->parsed()) return cmd_certify(o, sink.stream());
        if (gen->parsed()) return cmd_gen(o, sink.stream(), have_out_file);
        if (laws->parsed()) return cmd_laws_run(o, sink.stream());
        if (cb->parsed()) return cmd_cayley_build(o, sink.stream(), have_out_file);
        if (cc->parsed()) return cmd_cayley_cheeger(o, sink.stream());
        if (cp->parsed()) return cmd_cayley_probe(o, sink.stream());
        err << "no subcommand\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace approxlab::cli
