// potc: total colorings of circle-drawable graphs.
//
// Subcommands: color, verify, chi, find-config, check-embedding, gen,
// enum, paper-suite. Exit codes: 0 success, 1 verification or coloring
// failure, 2 graph outside the supported class, 3 input/output trouble.

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "potc/coloring.hpp"
#include "potc/configuration.hpp"
#include "potc/corpus.hpp"
#include "potc/dot.hpp"
#include "potc/embedding.hpp"
#include "potc/engine.hpp"
#include "potc/io.hpp"
#include "potc/oracle.hpp"
#include "potc/suite.hpp"

namespace {

using potc::Graph;
using potc::TotalColoring;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitNotInClass = 2;
constexpr int kExitBadInput = 3;

// Everything a run leaves behind besides its exit code. Timings stay out
// so that identical invocations produce identical report files.
struct RunState {
    int code = kExitOk;
    std::string command;
    std::string input_digest;
    std::string outcome = "ok";
    nlohmann::json extra = nlohmann::json::object();
};

std::string violation_text(const potc::Violation& v) {
    auto element = [](const potc::ElementRef& el) {
        std::ostringstream os;
        if (el.is_edge)
            os << "edge (" << el.u << "," << el.v << ")";
        else
            os << "vertex " << el.u;
        return os.str();
    };
    std::ostringstream os;
    switch (v.kind) {
        case potc::ViolationKind::adjacent_vertices:
            os << "adjacent-vertices: " << element(v.a) << " and " << element(v.b)
               << " share a color";
            break;
        case potc::ViolationKind::incident_edges:
            os << "incident-edges: " << element(v.a) << " and " << element(v.b)
               << " share a color";
            break;
        case potc::ViolationKind::edge_endpoint:
            os << "edge-endpoint: " << element(v.a) << " matches " << element(v.b);
            break;
        case potc::ViolationKind::color_out_of_range:
            os << "color-out-of-range: " << element(v.a);
            break;
        case potc::ViolationKind::unknown_element:
            os << "unknown-element: " << element(v.a) << " is not in the graph";
            break;
    }
    return os.str();
}

void emit_text(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        potc::write_text_file(path, text);
}

int run_color(RunState& st, const std::string& input,
              const std::string& embedding_path, int M,
              const std::string& output, const std::string& dot_path) {
    const std::string text = potc::read_text_file(input);
    st.input_digest = potc::fnv1a_hex(text);
    std::istringstream in(text);
    Graph g = potc::read_edge_list(in);

    std::optional<potc::CircularEmbedding> emb;
    if (!embedding_path.empty()) {
        emb = potc::read_embedding_file(embedding_path);
        potc::EmbeddingReport er = potc::validate_embedding(g, *emb);
        if (!er.valid) {
            std::cerr << "embedding rejected: chord (" << er.chord.first << ","
                      << er.chord.second << ") in circle " << er.block
                      << " is crossed " << er.crossings << " times\n";
            st.outcome = "embedding-rejected";
            return kExitVerifyFailed;
        }
    }

    potc::EngineReport rep;
    TotalColoring col;
    if (M >= 0) {
        if (M < 5 || M < g.max_degree()) {
            std::cerr << "error: -M must be at least 5 and at least the "
                         "maximum degree (" << g.max_degree() << ")\n";
            st.outcome = "bad-palette-bound";
            return kExitBadInput;
        }
        col = potc::total_color(g, M, rep);
    } else if (g.max_degree() >= 5) {
        col = potc::total_color(g, g.max_degree(), rep);
    } else {
        col = potc::total_color_auto(g);
    }

    if (!potc::verify_total_coloring(g, col).valid()) {
        std::cerr << "internal error: produced coloring failed verification\n";
        st.outcome = "invalid-coloring";
        return kExitVerifyFailed;
    }

    emit_text(output, potc::write_coloring(col));
    if (!dot_path.empty())
        potc::write_text_file(dot_path,
                              potc::export_dot(g, &col, emb ? &*emb : nullptr));

    std::cerr << "colored " << g.vertex_count() << " vertices and "
              << g.edge_count() << " edges with " << col.distinct_colors_used()
              << " of " << col.palette_size << " colors\n";
    st.extra["palette"] = col.palette_size;
    st.extra["colors_used"] = col.distinct_colors_used();
    st.extra["divergences"] = rep.divergences;
    return kExitOk;
}

int run_verify(RunState& st, const std::string& input,
               const std::string& coloring_path) {
    const std::string text = potc::read_text_file(input);
    st.input_digest = potc::fnv1a_hex(text);
    std::istringstream in(text);
    Graph g = potc::read_edge_list(in);
    TotalColoring col = potc::read_coloring_file(coloring_path);

    potc::VerifyResult res = potc::verify_total_coloring(g, col);
    st.extra["violations"] = nlohmann::json::array();
    for (const potc::Violation& v : res.violations) {
        std::cout << violation_text(v) << "\n";
        st.extra["violations"].push_back(violation_text(v));
    }
    if (!res.valid()) {
        st.outcome = "invalid-coloring";
        return kExitVerifyFailed;
    }
    std::cout << "valid\n";
    return kExitOk;
}

int run_chi(RunState& st, const std::string& input, int max_elements,
            const std::string& output) {
    const std::string text = potc::read_text_file(input);
    st.input_digest = potc::fnv1a_hex(text);
    std::istringstream in(text);
    Graph g = potc::read_edge_list(in);

    potc::OracleOptions opt;
    opt.max_elements = max_elements;
    const int k = potc::total_chromatic_number(g, opt);
    auto witness = potc::is_k_total_colorable(g, k, opt);
    if (!witness) throw std::logic_error("no witness at the reported value");

    std::cout << k << "\n";
    if (output.empty())
        std::cout << potc::write_coloring(*witness);
    else
        potc::write_text_file(output, potc::write_coloring(*witness));
    st.extra["chromatic_total_number"] = k;
    return kExitOk;
}

int run_find_config(RunState& st, const std::string& input) {
    const std::string text = potc::read_text_file(input);
    st.input_digest = potc::fnv1a_hex(text);
    std::istringstream in(text);
    Graph g = potc::read_edge_list(in);

    auto found = potc::find_configuration(g);
    nlohmann::json out;
    if (!found) {
        out["variant"] = "none";
        out["vertices"] = nlohmann::json::array();
        std::cout << out.dump(2) << "\n";
        st.outcome = "not-in-class";
        st.extra["witness"] = out;
        return kExitNotInClass;
    }
    if (!potc::validate_configuration(g, *found))
        throw std::logic_error("search returned an invalid witness");
    out["variant"] = potc::configuration_variant(*found);
    out["vertices"] = potc::configuration_vertices(*found);
    std::cout << out.dump(2) << "\n";
    st.extra["witness"] = out;
    return kExitOk;
}

int run_check_embedding(RunState& st, const std::string& input,
                        const std::string& embedding_path) {
    const std::string text = potc::read_text_file(input);
    st.input_digest = potc::fnv1a_hex(text);
    std::istringstream in(text);
    Graph g = potc::read_edge_list(in);
    potc::CircularEmbedding emb = potc::read_embedding_file(embedding_path);

    potc::EmbeddingReport er = potc::validate_embedding(g, emb);
    if (!er.valid) {
        std::cout << "invalid: chord (" << er.chord.first << ","
                  << er.chord.second << ") in circle " << er.block
                  << " is crossed " << er.crossings << " times\n";
        st.outcome = "invalid-embedding";
        return kExitVerifyFailed;
    }
    std::cout << "valid\n";
    return kExitOk;
}

int run_gen(RunState& st, int n, std::uint64_t seed, bool maximal,
            double density, bool no_outer_cycle, const std::string& prefix) {
    potc::GeneratorSpec spec;
    spec.n = n;
    spec.seed = seed;
    spec.maximal = maximal;
    spec.density = density;
    spec.outer_cycle = !no_outer_cycle;
    potc::GeneratedGraph gen = potc::random_pseudo_outerplanar(spec);

    const std::string list_path = prefix + ".txt";
    const std::string emb_path = prefix + ".embedding.json";
    potc::write_text_file(list_path, potc::write_edge_list(gen.graph));
    potc::write_text_file(emb_path, potc::write_embedding(gen.embedding));
    std::cout << "wrote " << list_path << " and " << emb_path << " ("
              << gen.graph.vertex_count() << " vertices, "
              << gen.graph.edge_count() << " edges)\n";
    st.input_digest = potc::fnv1a_hex(potc::write_edge_list(gen.graph));
    st.extra["vertices"] = gen.graph.vertex_count();
    st.extra["edges"] = gen.graph.edge_count();
    return kExitOk;
}

int run_enum(RunState& st, int n, const std::string& out_dir) {
    if (n < 0 || n > 9) {
        std::cerr << "error: enum supports up to nine vertices\n";
        st.outcome = "bad-bound";
        return kExitBadInput;
    }
    std::filesystem::create_directories(out_dir);
    long long index = 0;
    potc::enumerate_pseudo_outerplanar(n, [&](const Graph& g) {
        std::ostringstream name;
        name << "g" << std::setw(6) << std::setfill('0') << index << ".txt";
        potc::write_text_file(
            (std::filesystem::path(out_dir) / name.str()).string(),
            potc::write_edge_list(g));
        ++index;
        return true;
    });
    std::cout << "wrote " << index << " graphs to " << out_dir << "\n";
    st.extra["count"] = index;
    return kExitOk;
}

int run_paper_suite(RunState& st, std::uint64_t seed, bool quick, int only) {
    potc::SuiteOptions opt;
    opt.seed = seed;
    opt.quick = quick;
    opt.only = only;
    std::vector<potc::CriterionResult> results =
        potc::run_acceptance(opt, std::cout);

    st.extra["criteria"] = nlohmann::json::array();
    bool all_passed = !results.empty();
    for (const potc::CriterionResult& cr : results) {
        all_passed = all_passed && cr.passed;
        st.extra["criteria"].push_back({{"id", cr.id},
                                        {"name", cr.name},
                                        {"passed", cr.passed},
                                        {"detail", cr.detail},
                                        {"rerun", cr.rerun}});
    }
    if (!all_passed) {
        st.outcome = "criteria-failed";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"total colorings of circle-drawable graphs"};
    app.require_subcommand(1);

    std::string report_path;
    app.add_option("--report", report_path, "write a JSON run report here");

    RunState st;

    // color
    auto* color = app.add_subcommand("color", "color a graph, palette M+1");
    std::string color_input, color_embedding, color_output, color_dot;
    int color_m = -1;
    color->add_option("--input", color_input, "edge-list file")->required();
    color->add_option("--embedding", color_embedding, "embedding JSON to check");
    color->add_option("-M", color_m, "palette bound, defaults to max(degree, 5)");
    color->add_option("--output", color_output, "coloring JSON target");
    color->add_option("--dot", color_dot, "Graphviz output file");
    color->callback([&] {
        st.command = "potc color --input " + color_input +
                     (color_embedding.empty() ? "" : " --embedding " + color_embedding) +
                     (color_m < 0 ? "" : " -M " + std::to_string(color_m));
        st.code = run_color(st, color_input, color_embedding, color_m,
                            color_output, color_dot);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "check a coloring file");
    std::string verify_input, verify_coloring;
    verify->add_option("--input", verify_input, "edge-list file")->required();
    verify->add_option("--coloring", verify_coloring, "coloring JSON")->required();
    verify->callback([&] {
        st.command =
            "potc verify --input " + verify_input + " --coloring " + verify_coloring;
        st.code = run_verify(st, verify_input, verify_coloring);
    });

    // chi
    auto* chi = app.add_subcommand("chi", "exact smallest palette");
    std::string chi_input, chi_output;
    int chi_max_elements = 45;
    chi->add_option("--input", chi_input, "edge-list file")->required();
    chi->add_option("--max-elements", chi_max_elements,
                    "refuse graphs with more vertices plus edges than this");
    chi->add_option("--output", chi_output,
                    "witness coloring JSON target, stdout when omitted");
    chi->callback([&] {
        st.command = "potc chi --input " + chi_input + " --max-elements " +
                     std::to_string(chi_max_elements);
        st.code = run_chi(st, chi_input, chi_max_elements, chi_output);
    });

    // find-config
    auto* fc = app.add_subcommand("find-config",
                                  "search for a reducible local structure");
    std::string fc_input;
    fc->add_option("--input", fc_input, "edge-list file")->required();
    fc->callback([&] {
        st.command = "potc find-config --input " + fc_input;
        st.code = run_find_config(st, fc_input);
    });

    // check-embedding
    auto* ce = app.add_subcommand("check-embedding",
                                  "validate a circular drawing");
    std::string ce_input, ce_embedding;
    ce->add_option("--input", ce_input, "edge-list file")->required();
    ce->add_option("--embedding", ce_embedding, "embedding JSON")->required();
    ce->callback([&] {
        st.command = "potc check-embedding --input " + ce_input +
                     " --embedding " + ce_embedding;
        st.code = run_check_embedding(st, ce_input, ce_embedding);
    });

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random member graph");
    int gen_n = 10;
    std::uint64_t gen_seed = 1;
    bool gen_maximal = false, gen_no_rim = false;
    double gen_density = 0.5;
    std::string gen_prefix = "graph";
    gen->add_option("-n", gen_n, "vertex count")->required();
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_flag("--maximal", gen_maximal, "attempt every candidate chord");
    gen->add_option("--density", gen_density,
                    "fraction of candidate chords attempted");
    gen->add_flag("--no-outer-cycle", gen_no_rim, "skip the boundary cycle");
    gen->add_option("--out", gen_prefix, "output path prefix");
    gen->callback([&] {
        std::ostringstream cmd;
        cmd << "potc gen -n " << gen_n << " --seed " << gen_seed;
        if (gen_maximal) cmd << " --maximal";
        cmd << " --out " << gen_prefix;
        st.command = cmd.str();
        st.code = run_gen(st, gen_n, gen_seed, gen_maximal, gen_density,
                          gen_no_rim, gen_prefix);
    });

    // enum
    auto* en = app.add_subcommand("enum", "write every member graph up to n");
    int enum_n = 6;
    std::string enum_dir;
    en->add_option("-n", enum_n, "vertex bound, at most nine")->required();
    en->add_option("--out-dir", enum_dir, "output directory")->required();
    en->callback([&] {
        st.command = "potc enum -n " + std::to_string(enum_n) + " --out-dir " +
                     enum_dir;
        st.code = run_enum(st, enum_n, enum_dir);
    });

    // paper-suite
    auto* suite = app.add_subcommand("paper-suite", "run the acceptance battery");
    std::uint64_t suite_seed = 42;
    bool suite_quick = false;
    int suite_only = 0;
    suite->add_option("--seed", suite_seed, "seed for the randomized criterion");
    suite->add_flag("--quick", suite_quick, "smaller corpora, same checks");
    suite->add_option("--only", suite_only, "run a single criterion: 1..6");
    suite->callback([&] {
        std::ostringstream cmd;
        cmd << "potc paper-suite --seed " << suite_seed;
        if (suite_quick) cmd << " --quick";
        if (suite_only != 0) cmd << " --only " << suite_only;
        st.command = cmd.str();
        st.code = run_paper_suite(st, suite_seed, suite_quick, suite_only);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        st.outcome = "usage-error";
        st.code = kExitBadInput;
    } catch (const potc::format_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        st.outcome = "format-error";
        st.code = kExitBadInput;
    } catch (const potc::embedding_mismatch_error& e) {
        std::cerr << "embedding error: " << e.what() << "\n";
        st.outcome = "format-error";
        st.code = kExitBadInput;
    } catch (const potc::element_cap_error& e) {
        std::cerr << "too large for exact search: " << e.what() << "\n";
        st.outcome = "too-large";
        st.code = kExitBadInput;
    } catch (const potc::not_pseudo_outerplanar_error& e) {
        std::cerr << "graph rejected: " << e.what() << "\n";
        st.outcome = "not-in-class";
        st.code = kExitNotInClass;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        st.outcome = "error";
        st.code = kExitBadInput;
    }

    if (!report_path.empty()) {
        nlohmann::json report;
        report["command"] = st.command;
        report["input_digest"] = st.input_digest;
        report["outcome"] = st.outcome;
        for (auto& [key, value] : st.extra.items()) report[key] = value;
        try {
            potc::write_text_file(report_path, report.dump(2) + "\n");
        } catch (const std::exception& e) {
            std::cerr << "report error: " << e.what() << "\n";
            if (st.code == kExitOk) st.code = kExitBadInput;
        }
    }
    return st.code;
}
