// Command-line surface: generation runs, the oracle enumerator,
// certification and certificate verification, homogeneous-C5 reduction,
// ring-decomposition claim audits, and catalog management.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource budget exceeded. Graphs travel as graph6 lines on
// stdin/stdout; diagnostics go to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "critgraph/canon.hpp"
#include "critgraph/certify.hpp"
#include "critgraph/claims.hpp"
#include "critgraph/colour.hpp"
#include "critgraph/critical.hpp"
#include "critgraph/detect.hpp"
#include "critgraph/generate.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/named.hpp"
#include "critgraph/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

critgraph::PatternFamily family_from_options(const std::string& csv, const std::string& file) {
    if (!file.empty()) return critgraph::load_family_file(file);
    return critgraph::parse_family(csv);
}

critgraph::Graph parse_graph_arg(const std::string& arg) {
    try {
        return critgraph::build_named(arg);
    } catch (const std::invalid_argument&) {
    }
    return critgraph::decode_graph6(arg);
}

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return read_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_stream(in);
}

std::vector<critgraph::Graph> graphs_from_text(const std::string& text) {
    std::vector<critgraph::Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(critgraph::decode_graph6(line));
    }
    return out;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    out << text;
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    return v ? std::strtoull(v, nullptr, 10) : fallback;
}

double env_double(const char* name, double fallback) {
    const char* v = std::getenv(name);
    return v ? std::strtod(v, nullptr) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace critgraph;

    CLI::App app{"k-vertex-critical H-free graph toolkit"};
    app.require_subcommand(1);

    // generate -----------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "seeded exhaustive generation of k-vertex-critical graphs");
    int gen_k = 5;
    std::string gen_family = "p6,bull", gen_family_file, gen_seed = "k1", gen_seed_file;
    int gen_max_order = 0, gen_workers = 1, gen_lemma3_cap = 2;
    std::vector<std::string> gen_disable, gen_enable;
    std::uint64_t gen_max_nodes = 0, gen_ckpt_interval = 500000;
    double gen_max_seconds = 0;
    std::string gen_output, gen_checkpoint, gen_resume;
    gen->add_option("--k", gen_k, "target criticality");
    gen->add_option("--family", gen_family, "comma list of named forbidden patterns (may be empty)");
    gen->add_option("--family-file", gen_family_file, "file of name<TAB>graph6 pattern lines");
    gen->add_option("--seed", gen_seed, "seed graph: a named graph or a graph6 literal");
    gen->add_option("--seed-file", gen_seed_file, "file with one graph6 seed line");
    gen->add_option("--max-order", gen_max_order, "stop extending at this order (0 = unbounded)");
    gen->add_option("--workers", gen_workers, "worker threads for the search");
    gen->add_option("--disable-rule", gen_disable,
                    "disable a pruning rule: iso-dedup|family-free|colour-bound|comparable-forcing");
    gen->add_option("--enable-rule", gen_enable, "enable an optional rule: lemma3-forcing");
    gen->add_option("--lemma3-cap", gen_lemma3_cap, "set-size cap for lemma3 forcing");
    gen->add_option("--max-nodes", gen_max_nodes, "node budget, 0 = unlimited");
    gen->add_option("--max-seconds", gen_max_seconds, "wall budget, 0 = unlimited");
    gen->add_option("--output", gen_output, "output file (default stdout)");
    gen->add_option("--checkpoint", gen_checkpoint, "checkpoint file path");
    gen->add_option("--checkpoint-interval", gen_ckpt_interval, "nodes between checkpoints");
    gen->add_option("--resume", gen_resume, "resume from a checkpoint file");

    // oracle -------------------------------------------------------------
    auto* ora = app.add_subcommand("oracle", "independent brute-force enumeration (small orders)");
    int ora_k = 5, ora_max_order = 8;
    std::string ora_family = "p6,bull", ora_family_file, ora_output;
    ora->add_option("--k", ora_k, "target criticality");
    ora->add_option("--family", ora_family, "comma list of named forbidden patterns");
    ora->add_option("--family-file", ora_family_file, "file of name<TAB>graph6 pattern lines");
    ora->add_option("--max-order", ora_max_order, "enumerate all graphs up to this order (<= 10)")->required();
    ora->add_option("--output", ora_output, "output file (default stdout)");

    // certify ------------------------------------------------------------
    auto* cer = app.add_subcommand("certify", "certifying 4-colourability decision");
    std::string cer_catalog, cer_input, cer_output, cer_family = "p6,bull";
    cer->add_option("--catalog", cer_catalog, "catalog file of name<TAB>canonical-graph6 lines")->required();
    cer->add_option("--input", cer_input, "file with one graph6 line (default stdin)");
    cer->add_option("--output", cer_output, "certificate file (default stdout)");
    cer->add_option("--family", cer_family, "family the catalog certifies");

    // verify -------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "re-verify a certificate against a graph");
    std::string ver_catalog, ver_graph, ver_cert, ver_family = "p6,bull";
    ver->add_option("--catalog", ver_catalog, "catalog file")->required();
    ver->add_option("--graph", ver_graph, "file with one graph6 line (default stdin)");
    ver->add_option("--cert", ver_cert, "certificate file")->required();
    ver->add_option("--family", ver_family, "family the catalog certifies");

    // reduce -------------------------------------------------------------
    auto* red = app.add_subcommand("reduce", "replace homogeneous C5s by K3s until none remains");
    std::string red_input, red_output;
    red->add_option("--input", red_input, "graph6 lines (default stdin)");
    red->add_option("--output", red_output, "output file (default stdout)");

    // audit --------------------------------------------------------------
    auto* aud = app.add_subcommand("audit", "ring decomposition claim audit");
    std::string aud_input, aud_ring;
    bool aud_all = false;
    aud->add_option("--input", aud_input, "file with one graph6 line (default stdin)");
    aud->add_option("--ring", aud_ring, "comma list of five vertices in cycle order (default: first induced C5)");
    aud->add_flag("--all", aud_all, "audit every induced C5 and report the worst status per claim");

    // catalog ------------------------------------------------------------
    auto* cat = app.add_subcommand("catalog", "catalog management");
    cat->require_subcommand(1);
    auto* cat_check = cat->add_subcommand("check", "re-verify catalog invariants");
    std::string catc_path, catc_family = "p6,bull";
    int catc_k = 5;
    cat_check->add_option("--catalog", catc_path, "catalog file")->required();
    cat_check->add_option("--k", catc_k, "criticality every member must have");
    cat_check->add_option("--family", catc_family, "family every member must avoid");
    auto* cat_make = cat->add_subcommand("make", "name graph6 lines into a catalog file");
    std::string catm_input, catm_output, catm_family = "p6,bull", catm_prefix = "g";
    int catm_k = 5;
    cat_make->add_option("--input", catm_input, "graph6 lines (default stdin)");
    cat_make->add_option("--output", catm_output, "catalog file (default stdout)");
    cat_make->add_option("--k", catm_k, "criticality every member must have");
    cat_make->add_option("--family", catm_family, "family every member must avoid");
    cat_make->add_option("--prefix", catm_prefix, "name prefix for entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            GenerationTask task;
            task.k = gen_k;
            task.family = family_from_options(gen_family, gen_family_file);
            if (!gen_seed_file.empty()) {
                const auto graphs = graphs_from_text(read_input(gen_seed_file));
                if (graphs.size() != 1) throw std::invalid_argument("seed file must hold exactly one graph6 line");
                task.seed = graphs[0];
            } else {
                task.seed = parse_graph_arg(gen_seed);
            }
            if (gen_max_order > 0) task.max_order = gen_max_order;
            task.workers = gen_workers;
            task.lemma3_cap = gen_lemma3_cap;
            task.max_nodes = env_u64("CRITGRAPH_MAX_NODES", gen_max_nodes);
            task.max_seconds = env_double("CRITGRAPH_MAX_SECONDS", gen_max_seconds);
            task.checkpoint_path = gen_checkpoint;
            task.checkpoint_interval = gen_ckpt_interval;
            task.resume_path = gen_resume;
            for (const std::string& r : gen_disable) {
                if (r == "iso-dedup") task.pruning.iso_dedup = false;
                else if (r == "family-free") task.pruning.family_free = false;
                else if (r == "colour-bound") task.pruning.colour_bound = false;
                else if (r == "comparable-forcing") task.pruning.comparable_forcing = false;
                else throw std::invalid_argument("unknown rule: " + r);
            }
            for (const std::string& r : gen_enable) {
                if (r == "lemma3-forcing") task.pruning.lemma3_forcing = true;
                else throw std::invalid_argument("unknown rule: " + r);
            }
            const GenerationResult res = generate(task);
            std::ostringstream out;
            for (const std::string& f : res.outputs) out << f << '\n';
            write_output(gen_output, out.str());
            std::cerr << res.stats.to_key_values();
            return res.stats.exhaustive ? kExitOk : kExitBudget;
        }

        if (ora->parsed()) {
            const PatternFamily family = family_from_options(ora_family, ora_family_file);
            const auto graphs = oracle_enumerate(ora_k, family, ora_max_order);
            std::ostringstream out;
            for (const Graph& g : graphs) out << canonical_form(g) << '\n';
            write_output(ora_output, out.str());
            std::cerr << "outputs=" << graphs.size() << '\n';
            return kExitOk;
        }

        if (cer->parsed()) {
            const PatternFamily family = parse_family(cer_family);
            const Catalog catalog = Catalog::load_file(cer_catalog, 5, family);
            const auto graphs = graphs_from_text(read_input(cer_input));
            if (graphs.size() != 1) throw std::invalid_argument("certify expects exactly one graph6 line");
            Certificate cert;
            try {
                cert = certify_4colourable(graphs[0], catalog, family);
            } catch (const NotFamilyFreeError& e) {
                std::cerr << e.what() << '\n';
                return kExitUsage;
            } catch (const IncompleteCatalogError& e) {
                std::cerr << e.what() << '\n';
                return kExitVerifyFail;
            }
            write_output(cer_output, serialize_certificate(cert));
            std::cerr << (cert.verdict == Certificate::Verdict::four_colourable ? "four_colourable"
                                                                                : "not_four_colourable")
                      << '\n';
            return kExitOk;
        }

        if (ver->parsed()) {
            const PatternFamily family = parse_family(ver_family);
            const Catalog catalog = Catalog::load_file(ver_catalog, 5, family);
            const auto graphs = graphs_from_text(read_input(ver_graph));
            if (graphs.size() != 1) throw std::invalid_argument("verify expects exactly one graph6 line");
            const auto cert = parse_certificate(read_input(ver_cert));
            if (!cert) {
                std::cout << "reject\n";
                return kExitVerifyFail;
            }
            const bool ok = verify_certificate(graphs[0], *cert, catalog);
            std::cout << (ok ? "ok" : "fail") << '\n';
            return ok ? kExitOk : kExitVerifyFail;
        }

        if (red->parsed()) {
            const auto graphs = graphs_from_text(read_input(red_input));
            std::ostringstream out;
            for (const Graph& g : graphs) {
                const ReduceResult r = reduce_homogeneous_c5(g);
                out << canonical_form(r.graph) << '\n';
                std::cerr << "steps=" << r.steps << '\n';
            }
            write_output(red_output, out.str());
            return kExitOk;
        }

        if (aud->parsed()) {
            const auto graphs = graphs_from_text(read_input(aud_input));
            if (graphs.size() != 1) throw std::invalid_argument("audit expects exactly one graph6 line");
            const Graph& g = graphs[0];
            std::vector<std::array<int, 5>> rings;
            if (!aud_ring.empty()) {
                std::array<int, 5> ring{};
                std::istringstream ss(aud_ring);
                std::string item;
                int idx = 0;
                while (std::getline(ss, item, ',')) {
                    if (idx >= 5) throw std::invalid_argument("--ring needs exactly five vertices");
                    ring[idx++] = std::stoi(item);
                }
                if (idx != 5) throw std::invalid_argument("--ring needs exactly five vertices");
                rings.push_back(ring);
            } else if (aud_all) {
                rings = all_induced_c5(g);
            } else {
                if (auto ring = find_induced_c5(g)) rings.push_back(*ring);
            }
            if (rings.empty()) {
                std::cerr << "no induced C5\n";
                return kExitOk;
            }
            ClaimReport merged = audit_claims(g, rings[0]);
            for (std::size_t i = 1; i < rings.size(); ++i) {
                const ClaimReport rep = audit_claims(g, rings[i]);
                for (std::size_t j = 0; j < rep.size(); ++j) {
                    const auto rank = [](ClaimStatus s) {
                        switch (s) {
                            case ClaimStatus::violated: return 3;
                            case ClaimStatus::assume_violated: return 2;
                            case ClaimStatus::not_applicable: return 1;
                            default: return 0;
                        }
                    };
                    if (rank(rep[j].status) > rank(merged[j].status)) merged[j] = rep[j];
                }
            }
            std::cout << format_claim_report(merged);
            std::cerr << "rings_audited=" << rings.size() << '\n';
            return kExitOk;
        }

        if (cat_check->parsed()) {
            const PatternFamily family = parse_family(catc_family);
            try {
                const Catalog catalog = Catalog::load_file(catc_path, catc_k, family);
                std::cerr << "catalog ok: " << catalog.entries().size() << " entries\n";
                return kExitOk;
            } catch (const CatalogError& e) {
                std::cerr << e.what() << '\n';
                return kExitVerifyFail;
            }
        }

        if (cat_make->parsed()) {
            const PatternFamily family = parse_family(catm_family);
            const auto graphs = graphs_from_text(read_input(catm_input));
            std::vector<Graph> canon;
            canon.reserve(graphs.size());
            for (const Graph& g : graphs) canon.push_back(canonical_relabel(g));
            Catalog catalog = Catalog::from_graphs(canon, catm_k, family);
            std::ostringstream out;
            int idx = 0;
            for (const CatalogEntry& e : catalog.entries())
                out << catm_prefix << ++idx << '\t' << e.form << '\n';
            write_output(catm_output, out.str());
            std::cerr << "entries=" << catalog.entries().size() << '\n';
            return kExitOk;
        }
    } catch (const CatalogError& e) {
        std::cerr << e.what() << '\n';
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
