#include "dpsq/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dpsq/detect.hpp"
#include "dpsq/discharge.hpp"
#include "dpsq/dp.hpp"
#include "dpsq/enumerate.hpp"
#include "dpsq/errors.hpp"
#include "dpsq/generate.hpp"
#include "dpsq/io.hpp"
#include "dpsq/mad.hpp"
#include "dpsq/reduce.hpp"

namespace dpsq {

namespace {

int parse_param(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("bad generator parameter '" + s + "'");
    long v = std::stol(s);
    if (v > 1000000) throw input_error("generator parameter too large");
    return (int)v;
}

// graph from --gen tokens, or from a file path ("-" = stdin)
Generated load_graph(const std::vector<std::string>& gen_args,
                     const std::string& path, std::istream* in) {
    if (!gen_args.empty()) {
        if (path != "-")
            throw input_error("give either -i or --gen, not both");
        std::vector<int> params;
        for (std::size_t i = 1; i < gen_args.size(); i++)
            params.push_back(parse_param(gen_args[i]));
        return generate(gen_args[0], params);
    }
    if (path == "-") {
        if (!in) throw input_error("no input stream available, use -i or --gen");
        return {read_graph(*in), {}};
    }
    std::ifstream f(path);
    if (!f) throw input_error("cannot open '" + path + "'");
    return {read_graph(f), {}};
}

std::string status_word(LemmaReport::Status s) {
    switch (s) {
        case LemmaReport::Status::verified: return "VERIFIED";
        case LemmaReport::Status::refuted: return "REFUTED";
        case LemmaReport::Status::budget: return "BUDGET";
    }
    return "?";
}

void print_lemma(std::ostream& out, const LemmaReport& rep) {
    out << "LEMMA " << rep.lemma_id << " " << status_word(rep.status)
        << " n_covers=" << rep.n_covers << " certificate=" << rep.certificate;
    if (!rep.iso_note.empty()) out << " iso=" << rep.iso_note;
    out << "\n";
    if (rep.counterexample) {
        if (!rep.counterexample_label.empty())
            out << "c variant " << rep.counterexample_label << "\n";
        write_cover(out, *rep.counterexample);
    }
}

int lemma_exit(LemmaReport::Status s) {
    if (s == LemmaReport::Status::refuted) return 1;
    if (s == LemmaReport::Status::budget) return 3;
    return 0;
}

void print_occurrences(std::ostream& out, const std::vector<Occurrence>& occs) {
    for (const Occurrence& o : occs) {
        out << "OCC " << o.kind;
        for (int v : o.vertices) out << " " << v + 1;
        out << "\n";
    }
}

int run_sweep(std::ostream& out, int k, int max_n, int sample, std::uint64_t seed,
              const Budget& budget) {
    if (k != 5 && k != 6) throw input_error("sweep: k must be 5 or 6");
    Rational bound = k == 5 ? Rational(9, 4) : Rational(12, 5);
    DpOptions opts;
    opts.budget = budget;
    std::uint64_t total = 0;
    for (int n = 1; n <= max_n; n++) {
        std::vector<Graph> graphs;
        if (sample > 0) {
            if (n >= 2)
                for (int i = 0; i < sample; i++)
                    graphs.push_back(random_subcubic(
                        n, seed * 1000003ull + (std::uint64_t)n * 1009ull + i, 1));
        } else {
            graphs = enumerate_subcubic(n, std::max(max_n, budget.enum_max_n));
        }
        int checked = 0;
        for (const Graph& g : graphs) {
            if (!(mad_exact(g) < bound)) continue;
            checked++;
            DpResult res = is_dp_k_colorable(square(g), k, opts);
            if (!res.colorable) {
                out << "COUNTEREXAMPLE k=" << k << " n=" << n << "\n";
                write_graph(out, g);
                write_cover(out, *res.witness);
                return 1;
            }
        }
        total += checked;
        out << "SWEEP k=" << k << " n=" << n << " checked=" << checked << " of "
            << graphs.size() << (sample > 0 ? " sampled" : "") << "\n";
    }
    out << "SWEEP k=" << k << " PASS checked=" << total << "\n";
    return 0;
}

int run_audit(std::ostream& out, const Graph& g, int k) {
    TheoremAudit ta = audit_theorem(g, k);
    if (!ta.applicable) {
        print_occurrences(out, ta.blocking);
        out << "AUDIT k=" << k << " applicable=no verdict=pass\n";
        return 0;
    }
    StructureAudit sa = audit_minimal_structure(g, k);
    for (const StructureViolation& v : sa.violations) {
        out << "VIOLATION v=" << v.vertex + 1 << " profile=";
        for (std::size_t i = 0; i < v.profile.size(); i++)
            out << (i ? "," : "") << v.profile[i];
        out << "\n";
    }
    bool pass = ta.passed && sa.passed;
    out << "AUDIT k=" << k << " applicable=yes min_final=" << ta.min_final.str()
        << " bound=" << ta.bound.str() << " mad=" << ta.mad_value.str()
        << " structure=" << (sa.passed ? "ok" : "bad")
        << " verdict=" << (pass ? "pass" : "fail") << "\n";
    return pass ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, std::istream* in) {
    CLI::App app{"exact toolkit for DP-coloring squares of subcubic graphs"};
    app.require_subcommand(1);

    std::string path = "-";
    std::vector<std::string> gen_args;
    int k = 0;
    std::string rule, cover_path, lemma_id;
    int max_n = 0, sample = 0;
    std::uint64_t seed = 0;
    std::string gen_name;
    std::vector<std::string> gen_params;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("-i,--input", path, "graph file, '-' for stdin");
        cmd->add_option("--gen", gen_args, "generator name and parameters")
            ->expected(-1);
    };

    CLI::App* c_square = app.add_subcommand("square", "print the square of the graph");
    add_input(c_square);
    CLI::App* c_girth = app.add_subcommand("girth", "print the girth (or inf)");
    add_input(c_girth);
    CLI::App* c_mad = app.add_subcommand("mad", "print the exact maximum average degree");
    add_input(c_mad);
    CLI::App* c_dpcheck =
        app.add_subcommand("dp-check", "is the graph DP-k-colorable?");
    add_input(c_dpcheck);
    c_dpcheck->add_option("-k", k, "list size")->required();
    CLI::App* c_dpchrom =
        app.add_subcommand("dp-chromatic", "print the DP chromatic number");
    add_input(c_dpchrom);
    CLI::App* c_transversal =
        app.add_subcommand("transversal", "find a transversal of a cover");
    add_input(c_transversal);
    c_transversal->add_option("--cover", cover_path, "cover file")->required();
    CLI::App* c_gen = app.add_subcommand("gen", "print a named graph");
    c_gen->add_option("name", gen_name, "generator name")->required();
    c_gen->add_option("params", gen_params, "generator parameters");
    CLI::App* c_detect =
        app.add_subcommand("detect", "list k-reducible configurations");
    add_input(c_detect);
    c_detect->add_option("-k", k, "5 or 6")->required();
    CLI::App* c_vl = app.add_subcommand("verify-lemma", "check one reducibility claim");
    c_vl->add_option("id", lemma_id, "lemma id, e.g. 5red:1")->required();
    CLI::App* c_va = app.add_subcommand("verify-all", "check every reducibility claim");
    (void)c_va;
    CLI::App* c_sweep = app.add_subcommand(
        "sweep", "enumerate subcubic graphs below the mad bound and DP-check squares");
    c_sweep->add_option("-k", k, "5 or 6")->required();
    c_sweep->add_option("--max-n", max_n, "largest vertex count")->required();
    c_sweep->add_option("--sample", sample, "random graphs per size instead of all");
    c_sweep->add_option("--seed", seed, "seed for sampled sweeps");
    CLI::App* c_discharge = app.add_subcommand("discharge", "run R1/R2 and print charges");
    add_input(c_discharge);
    c_discharge->add_option("--rule", rule, "R1 or R2")->required();
    CLI::App* c_audit =
        app.add_subcommand("audit", "theorem-shaped counting audit for one graph");
    add_input(c_audit);
    c_audit->add_option("-k", k, "5 or 6")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Budget budget = Budget::from_env();
    try {
        if (c_square->parsed()) {
            write_graph(out, square(load_graph(gen_args, path, in).g));
            return 0;
        }
        if (c_girth->parsed()) {
            auto g = girth(load_graph(gen_args, path, in).g);
            if (g)
                out << *g << "\n";
            else
                out << "inf\n";
            return 0;
        }
        if (c_mad->parsed()) {
            out << mad_exact(load_graph(gen_args, path, in).g).str() << "\n";
            return 0;
        }
        if (c_dpcheck->parsed()) {
            DpOptions opts;
            opts.budget = budget;
            DpResult res = is_dp_k_colorable(load_graph(gen_args, path, in).g, k, opts);
            if (res.colorable) {
                out << "colorable\n";
                return 0;
            }
            out << "not-colorable\n";
            write_cover(out, *res.witness);
            return 1;
        }
        if (c_dpchrom->parsed()) {
            DpOptions opts;
            opts.budget = budget;
            out << dp_chromatic(load_graph(gen_args, path, in).g, opts) << "\n";
            return 0;
        }
        if (c_transversal->parsed()) {
            Graph g = load_graph(gen_args, path, in).g;
            std::ifstream f(cover_path);
            if (!f) throw input_error("cannot open '" + cover_path + "'");
            Cover c = read_cover(f, g);
            auto t = find_transversal(c, budget.max_nodes);
            if (!t) {
                out << "no-transversal\n";
                return 1;
            }
            write_transversal(out, *t);
            return 0;
        }
        if (c_gen->parsed()) {
            std::vector<int> params;
            for (const std::string& p : gen_params) params.push_back(parse_param(p));
            Generated gen = generate(gen_name, params);
            write_graph(out, gen.g, &gen.boundary);
            return 0;
        }
        if (c_detect->parsed()) {
            auto occs = detect_reducible(load_graph(gen_args, path, in).g, k);
            print_occurrences(out, occs);
            out << "TOTAL " << occs.size() << "\n";
            return 0;
        }
        if (c_vl->parsed()) {
            LemmaReport rep = verify_lemma(lemma_id, budget);
            print_lemma(out, rep);
            return lemma_exit(rep.status);
        }
        if (c_va->parsed()) {
            int worst = 0;
            for (const std::string& id : all_lemma_ids()) {
                LemmaReport rep = verify_lemma(id, budget);
                print_lemma(out, rep);
                int e = lemma_exit(rep.status);
                if (e == 1 || (e == 3 && worst != 1)) worst = e;
            }
            return worst;
        }
        if (c_sweep->parsed()) return run_sweep(out, k, max_n, sample, seed, budget);
        if (c_discharge->parsed()) {
            ChargeLedger ledger = discharge(load_graph(gen_args, path, in).g, rule);
            for (int v = 0; v < (int)ledger.initial.size(); v++)
                out << "v " << v + 1 << " init=" << ledger.initial[v].str()
                    << " final=" << ledger.final_charge[v].str() << "\n";
            out << "MIN " << min_final_charge(ledger).str() << "\n";
            return 0;
        }
        if (c_audit->parsed()) return run_audit(out, load_graph(gen_args, path, in).g, k);
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

} // namespace dpsq
