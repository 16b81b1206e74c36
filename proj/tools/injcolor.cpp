#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "injcolor/discharging.hpp"
#include "injcolor/exact.hpp"
#include "injcolor/generators.hpp"
#include "injcolor/io.hpp"
#include "injcolor/reduction.hpp"
#include "injcolor/report.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

bool verbose_env()
{
    const char* v = std::getenv("INJCOLOR_VERBOSE");
    return v && std::string(v) != "0";
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const inj::RunReport& rep, bool json)
{
    if (json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text(verbose_env());
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

inj::RunReport base_report(const std::string& path, const inj::Graph& g)
{
    inj::RunReport rep;
    rep.input = path;
    rep.n = g.num_vertices();
    rep.m = g.num_edges();
    rep.max_degree = g.max_degree();
    return rep;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"injective edge-coloring toolkit"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit machine-readable reports");

    std::string file, coloring_file, out_file;
    std::uint64_t budget = inj::kDefaultSearchBudget;
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    std::string gadget_kind;
    int batch_count = 0, batch_size = 20;
    std::uint64_t batch_seed = 1;

    auto* c_mad = app.add_subcommand("mad", "exact maximum average degree");
    c_mad->add_option("file", file)->required();

    auto* c_elig = app.add_subcommand("eligible", "check the theorem hypotheses");
    c_elig->add_option("file", file)->required();

    auto* c_exact = app.add_subcommand("exact", "exact injective chromatic index");
    c_exact->add_option("file", file)->required();
    c_exact->add_option("--budget", budget, "search node budget");

    auto* c_color = app.add_subcommand("color", "constructive 7-coloring");
    c_color->add_option("file", file)->required();
    c_color->add_option("--out", out_file, "write the coloring to this file");

    auto* c_val = app.add_subcommand("validate", "check a coloring file");
    c_val->add_option("file", file)->required();
    c_val->add_option("coloring", coloring_file)->required();

    auto* c_audit = app.add_subcommand("audit", "discharging audit");
    c_audit->add_option("file", file)->required();

    auto* c_gen = app.add_subcommand("gen", "generate a graph document");
    auto* opt_rand = c_gen->add_option("--random", gen_n, "random eligible graph size");
    c_gen->add_option("--seed", gen_seed, "random seed");
    auto* opt_gadget = c_gen->add_option("--gadget", gadget_kind,
        "configuration kind name");
    opt_rand->excludes(opt_gadget);

    auto* c_batch = app.add_subcommand("batch", "theorem harness over random graphs");
    c_batch->add_option("--count", batch_count)->required();
    c_batch->add_option("--size", batch_size);
    c_batch->add_option("--seed", batch_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c_mad->parsed()) {
            auto g = inj::parse_edge_list(slurp(file));
            Timer t;
            auto rep = base_report(file, g);
            auto dw = inj::mad_exact(g);
            rep.mad = dw.mad;
            rep.seconds = t.seconds();
            emit(rep, json);
            return 0;
        }
        if (c_elig->parsed()) {
            auto g = inj::parse_edge_list(slurp(file));
            Timer t;
            auto rep = base_report(file, g);
            auto er = inj::is_eligible(g);
            rep.mad = er.mad;
            rep.eligible = er.eligible;
            rep.seconds = t.seconds();
            emit(rep, json);
            return 0;
        }
        if (c_exact->parsed()) {
            auto g = inj::parse_edge_list(slurp(file));
            Timer t;
            auto rep = base_report(file, g);
            auto res = inj::chi_injective_exact(g, budget);
            rep.chi_exact = res.chi;
            rep.chi_is_exact = res.exact;
            rep.chi_lower = res.lower_bound;
            rep.chi_upper = res.upper_bound;
            rep.seconds = t.seconds();
            emit(rep, json);
            return 0;
        }
        if (c_color->parsed()) {
            auto g = inj::parse_edge_list(slurp(file));
            Timer t;
            auto rep = base_report(file, g);
            auto er = inj::is_eligible(g);
            rep.mad = er.mad;
            rep.eligible = er.eligible;
            if (!er.eligible) {
                rep.seconds = t.seconds();
                emit(rep, json);
                std::cerr << "not eligible: max degree " << er.max_degree << ", mad "
                          << inj::to_string(er.mad) << " (needs degree <= 4, mad < 8/3)\n";
                return kExitUsage;
            }
            auto col = inj::color_constructive(g);
            inj::ConflictGraph cg(g);
            auto vr = inj::validate(cg, col);
            rep.constructive_colors = col.colors_used();
            rep.coloring_valid = vr.valid();
            rep.seconds = t.seconds();
            if (!out_file.empty()) {
                std::ofstream out(out_file);
                out << inj::emit_coloring(g, col);
            } else if (!json) {
                std::cout << inj::emit_coloring(g, col);
            }
            emit(rep, json);
            return vr.valid() ? 0 : kExitInvalid;
        }
        if (c_val->parsed()) {
            auto g = inj::parse_edge_list(slurp(file));
            Timer t;
            auto rep = base_report(file, g);
            auto col = inj::parse_coloring(g, slurp(coloring_file), 7);
            inj::ConflictGraph cg(g);
            auto vr = inj::validate(cg, col);
            rep.coloring_valid = vr.valid();
            rep.seconds = t.seconds();
            emit(rep, json);
            if (!vr.valid() && !json) {
                for (auto [e, f] : vr.conflicts) {
                    auto [a, b] = g.edge_ends(e);
                    auto [c, d] = g.edge_ends(f);
                    std::cerr << "conflict: edges " << a + 1 << "-" << b + 1 << " and "
                              << c + 1 << "-" << d + 1 << " share color "
                              << col.get(e) << "\n";
                }
                if (!vr.total)
                    std::cerr << vr.uncolored.size() << " edge(s) uncolored\n";
            }
            return vr.valid() ? 0 : kExitInvalid;
        }
        if (c_audit->parsed()) {
            auto g = inj::parse_edge_list(slurp(file));
            Timer t;
            auto rep = base_report(file, g);
            auto core = inj::derive_core(g);
            auto audit = inj::audit_charges(core);
            inj::Rational min_charge(1000000);
            for (const auto& [v, c] : audit.charges.charges)
                min_charge = std::min(min_charge, c.final_charge());
            if (audit.charges.charges.empty())
                min_charge = inj::Rational(0);
            rep.min_final_charge = min_charge;
            rep.deficiency_count = static_cast<int>(audit.deficiencies.size());
            rep.unexplained_count = static_cast<int>(audit.unexplained.size());
            rep.seconds = t.seconds();
            emit(rep, json);
            if (!audit.ok()) {
                std::cerr << "unexplained deficiencies at:";
                for (auto v : audit.unexplained)
                    std::cerr << " " << v + 1;
                std::cerr << "\n";
                return kExitInvalid;
            }
            return 0;
        }
        if (c_gen->parsed()) {
            if (*opt_rand) {
                auto g = inj::gen_random_eligible(gen_n, gen_seed);
                std::cout << inj::emit_edge_list(g);
                return 0;
            }
            if (*opt_gadget) {
                auto kind = inj::kind_from_name(gadget_kind);
                if (!kind) {
                    std::cerr << "unknown kind '" << gadget_kind << "'; one of:";
                    for (int i = 0; i < inj::kNumConfigKinds; ++i)
                        std::cerr << " "
                                  << inj::kind_name(static_cast<inj::ConfigKind>(i));
                    std::cerr << "\n";
                    return kExitUsage;
                }
                auto gr = inj::gen_gadget(*kind);
                std::cout << "c gadget " << inj::kind_name(*kind) << "\n";
                for (const auto& [role, v] : gr.expected.witness)
                    std::cout << "c role " << role << " " << v + 1 << "\n";
                std::cout << inj::emit_edge_list(gr.graph);
                return 0;
            }
            std::cerr << "gen: need --random or --gadget\n";
            return kExitUsage;
        }
        if (c_batch->parsed()) {
            Timer t;
            int failures = 0;
            int max_colors = 0;
            for (int i = 0; i < batch_count; ++i) {
                auto g = inj::gen_random_eligible(batch_size, batch_seed + i);
                auto col = inj::color_constructive(g);
                inj::ConflictGraph cg(g);
                auto vr = inj::validate(cg, col);
                bool ok = vr.valid() && col.colors_used() <= 7;
                if (!ok)
                    ++failures;
                max_colors = std::max(max_colors, col.colors_used());
            }
            if (json) {
                nlohmann::json j;
                j["count"] = batch_count;
                j["size"] = batch_size;
                j["seed"] = batch_seed;
                j["failures"] = failures;
                j["max_colors"] = max_colors;
                j["seconds"] = t.seconds();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "graphs: " << batch_count << "  failures: " << failures
                          << "  max colors: " << max_colors << "  time: " << t.seconds()
                          << "s\n";
            }
            return failures == 0 ? 0 : kExitInvalid;
        }
    } catch (const inj::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
