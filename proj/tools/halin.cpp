// Command-line front end: recognition, wheel analysis, chromatic
// classification, coloring, corpus generation and the BFS-versus-oracle
// comparison harness. Exit codes: 0 = clean answer (including "not Halin"),
// 2 = input error, 3 = bound or retry-budget error, 4 = internal consistency
// failure.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "halin/report.hpp"

namespace fs = std::filesystem;
using namespace halin;

namespace {

struct InputError : Error {
    using Error::Error;
};

struct GlobalOpts {
    bool json = false;
    bool quiet = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string indent_block(const std::string& block, const std::string& prefix) {
    std::string out;
    std::size_t pos = 0;
    while (pos < block.size()) {
        std::size_t nl = block.find('\n', pos);
        if (nl == std::string::npos) nl = block.size();
        out += prefix + block.substr(pos, nl - pos) + "\n";
        pos = nl + 1;
    }
    return out;
}

void emit(const GlobalOpts& opts, const Json& doc, const std::string& text) {
    if (opts.json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

void append_warnings(const GlobalOpts& opts, Json& doc, std::string& text,
                     const std::vector<std::string>& warnings) {
    if (opts.quiet) {
        doc["warnings"] = Json::array();
        return;
    }
    doc["warnings"] = warnings;
    for (const std::string& w : warnings) text += "warning: " + w + "\n";
}

// ---------------------------------------------------------------- recognize

int cmd_recognize(const GlobalOpts& opts, const std::string& input, bool with_oracle,
                  int max_oracle_n) {
    Graph g = parse_edge_list(read_input(input));
    RecognitionReport bfs = recognize_bfs(g);
    std::vector<std::string> warnings;
    if (with_oracle && max_oracle_n > kDefaultOracleBound)
        warnings.push_back("oracle bound raised to " + std::to_string(max_oracle_n) +
                           "; spanning-tree enumeration is exponential");

    Json doc;
    doc["command"] = "recognize";
    doc["input"] = input;
    doc["vertices"] = g.vertex_count();
    doc["edges"] = g.edge_count();
    doc["bfs"] = report_to_json(bfs);
    std::string text;
    text += "command: recognize\n";
    text += "input: " + input + "\n";
    text += "vertices: " + std::to_string(g.vertex_count()) + "\n";
    text += "edges: " + std::to_string(g.edge_count()) + "\n";
    text += "bfs:\n" + indent_block(report_to_text(bfs), "  ");

    if (with_oracle) {
        RecognitionReport oracle = recognize_oracle(g, max_oracle_n);
        doc["oracle"] = report_to_json(oracle);
        doc["agreement"] = bfs.verdict == oracle.verdict;
        text += "oracle:\n" + indent_block(report_to_text(oracle), "  ");
        text += std::string("agreement: ") +
                (bfs.verdict == oracle.verdict ? "true" : "false") + "\n";
    }
    append_warnings(opts, doc, text, warnings);
    emit(opts, doc, text);
    return 0;
}

// -------------------------------------------------------------------- color

int cmd_color(const GlobalOpts& opts, const std::string& input, bool fallback4,
              const std::string& dot_path) {
    Graph g = parse_edge_list(read_input(input));
    RecognitionReport bfs = recognize_bfs(g);

    Json doc;
    doc["command"] = "color";
    doc["input"] = input;
    std::string text;
    text += "command: color\n";
    text += "input: " + input + "\n";
    std::vector<std::string> warnings;

    if (bfs.verdict != Verdict::Halin) {
        doc["halin"] = false;
        doc["reason"] = bfs.reason;
        doc["chi"] = nullptr;
        doc["coloring"] = nullptr;
        text += "halin: false\n";
        text += "reason: " + bfs.reason + "\n";
        text += "chi: none\n";
        text += "coloring: none\n";
        append_warnings(opts, doc, text, warnings);
        emit(opts, doc, text);
        return 0;
    }

    const HalinCertificate& cert = *bfs.certificate;
    OrientedRepresentation rep = orient_representation(g, cert);
    int chi = chromatic_number_halin(g, cert);
    auto witness = find_odd_wheel(g);

    doc["halin"] = true;
    doc["chi"] = chi;
    doc["odd_wheel"] = witness ? witness_to_json(*witness) : Json(nullptr);
    text += "halin: true\n";
    text += "chi: " + std::to_string(chi) + "\n";
    text += "odd_wheel: " + (witness ? witness_to_text(*witness) : "none") + "\n";

    std::optional<Coloring> coloring;
    if (chi == 3) {
        coloring = three_color_wheel_free(g, rep);
    } else if (fallback4) {
        coloring = four_color_exact(g, rep);
    } else {
        warnings.push_back("chromatic number is 4; rerun with --fallback-4 for a coloring");
    }

    if (coloring) {
        ProperCheck check = verify_proper(g, *coloring);
        if (!check.proper) throw InternalError("coloring failed verification before emission");
        doc["colors_used"] = check.colors_used;
        doc["coloring"] = coloring_to_json(*coloring);
        text += "colors_used: " + std::to_string(check.colors_used) + "\n";
        text += "coloring:\n" + indent_block(coloring_to_text(*coloring), "  ");
        if (!dot_path.empty()) {
            std::ofstream out(dot_path, std::ios::binary);
            if (!out) throw InputError("cannot write '" + dot_path + "'");
            out << to_dot(g, *coloring);
        }
    } else {
        doc["colors_used"] = nullptr;
        doc["coloring"] = nullptr;
        text += "colors_used: none\n";
        text += "coloring: none\n";
        if (!dot_path.empty()) warnings.push_back("no coloring produced; DOT file not written");
    }
    append_warnings(opts, doc, text, warnings);
    emit(opts, doc, text);
    return 0;
}

// ---------------------------------------------------------------- chromatic

int cmd_chromatic(const GlobalOpts& opts, const std::string& input) {
    Graph g = parse_edge_list(read_input(input));
    RecognitionReport bfs = recognize_bfs(g);

    Json doc;
    doc["command"] = "chromatic";
    doc["input"] = input;
    std::string text = "command: chromatic\ninput: " + input + "\n";
    if (bfs.verdict != Verdict::Halin) {
        doc["halin"] = false;
        doc["reason"] = bfs.reason;
        doc["chi"] = nullptr;
        text += "halin: false\nreason: " + bfs.reason + "\nchi: none\n";
    } else {
        int chi = chromatic_number_halin(g, *bfs.certificate);
        doc["halin"] = true;
        doc["chi"] = chi;
        text += "halin: true\nchi: " + std::to_string(chi) + "\n";
    }
    emit(opts, doc, text);
    return 0;
}

// ------------------------------------------------------------------- wheels

int cmd_wheels(const GlobalOpts& opts, const std::string& input) {
    Graph g = parse_edge_list(read_input(input));
    auto witness = find_odd_wheel(g);
    Json doc;
    doc["command"] = "wheels";
    doc["input"] = input;
    doc["odd_wheel"] = witness ? witness_to_json(*witness) : Json(nullptr);
    std::string text = "command: wheels\ninput: " + input + "\n";
    text += "odd_wheel: " + (witness ? witness_to_text(*witness) : "none") + "\n";
    emit(opts, doc, text);
    return 0;
}

// ----------------------------------------------------------------- generate

std::string params_hash(int internal, int max_children, bool odd_wheel_free) {
    SplitMix64 rng((static_cast<std::uint64_t>(internal) << 32) ^
                   (static_cast<std::uint64_t>(max_children) << 8) ^
                   (odd_wheel_free ? 1 : 0));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(rng.next()));
    return buf;
}

int cmd_generate(const GlobalOpts& opts, int internal, int max_children, std::uint64_t seed,
                 int count, bool odd_wheel_free, const std::string& out_dir, int max_oracle_n) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir))
        throw InputError("cannot create output directory '" + out_dir + "'");

    const std::string hash = params_hash(internal, max_children, odd_wheel_free);
    Json manifest;
    manifest["params"] = {{"internal", internal},
                          {"max_children", max_children},
                          {"base_seed", seed},
                          {"count", count},
                          {"odd_wheel_free", odd_wheel_free}};
    Json instances = Json::array();
    std::string text = "command: generate\n";
    text += "out: " + out_dir + "\n";

    for (int i = 0; i < count; ++i) {
        GeneratorParams params;
        params.target_internal = internal;
        params.max_children = max_children;
        params.seed = seed + static_cast<std::uint64_t>(i);
        params.require_odd_wheel_free = odd_wheel_free;
        GeneratedInstance inst = generate_halin(params);

        std::string name = hash + "_s" + std::to_string(params.seed) + ".edges";
        std::ofstream out(fs::path(out_dir) / name, std::ios::binary);
        if (!out) throw InputError("cannot write '" + name + "'");
        out << to_edge_list(inst.graph);

        std::string oracle = "skipped";
        if (inst.graph.vertex_count() <= max_oracle_n)
            oracle = std::string(
                to_string(recognize_oracle(inst.graph, max_oracle_n).verdict));
        bool wheel = find_odd_wheel(inst.graph).has_value();

        instances.push_back({{"file", name},
                             {"seed", params.seed},
                             {"vertices", inst.graph.vertex_count()},
                             {"edges", inst.graph.edge_count()},
                             {"oracle", oracle},
                             {"odd_wheel", wheel}});
        text += name + ": n=" + std::to_string(inst.graph.vertex_count()) +
                " m=" + std::to_string(inst.graph.edge_count()) + " oracle=" + oracle +
                " odd_wheel=" + (wheel ? "true" : "false") + "\n";
    }
    manifest["instances"] = std::move(instances);
    {
        std::ofstream out(fs::path(out_dir) / "manifest.json", std::ios::binary);
        if (!out) throw InputError("cannot write manifest.json");
        out << manifest.dump(2) << "\n";
    }

    Json doc = manifest;
    doc["command"] = "generate";
    doc["out"] = out_dir;
    text += "written: " + std::to_string(count) + " instance(s) + manifest.json\n";
    std::vector<std::string> warnings;
    if (max_oracle_n > kDefaultOracleBound)
        warnings.push_back("oracle bound raised to " + std::to_string(max_oracle_n) +
                           "; spanning-tree enumeration is exponential");
    append_warnings(opts, doc, text, warnings);
    emit(opts, doc, text);
    return 0;
}

// ------------------------------------------------------------------ compare

int cmd_compare(const GlobalOpts& opts, const std::string& dir, int max_n) {
    if (!fs::is_directory(dir)) throw InputError("'" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".edges")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("empty corpus: no .edges files in '" + dir + "'");

    Json rows = Json::array();
    std::string table;
    int oracle_runs = 0, agreements = 0, false_negatives = 0, false_positives = 0;
    int chromatic_checked = 0, chromatic_consistent = 0;

    for (const fs::path& file : files) {
        Graph g = parse_edge_list(read_input(file.string()));
        RecognitionReport bfs = recognize_bfs(g);
        bool bfs_halin = bfs.verdict == Verdict::Halin;
        if (bfs_halin && !verify_certificate(g, *bfs.certificate).ok) ++false_positives;

        Json row;
        row["file"] = file.filename().string();
        row["vertices"] = g.vertex_count();
        row["edges"] = g.edge_count();
        row["bfs"] = to_string(bfs.verdict);
        std::string line = file.filename().string() + ": n=" +
                           std::to_string(g.vertex_count()) + " m=" +
                           std::to_string(g.edge_count()) + " bfs=" +
                           std::string(to_string(bfs.verdict));

        if (g.vertex_count() <= max_n) {
            RecognitionReport oracle = recognize_oracle(g, max_n);
            bool oracle_halin = oracle.verdict == Verdict::Halin;
            ++oracle_runs;
            bool agree = bfs_halin == oracle_halin;
            if (agree) ++agreements;
            if (oracle_halin && !bfs_halin) ++false_negatives;
            row["oracle"] = to_string(oracle.verdict);
            row["agree"] = agree;
            line += " oracle=" + std::string(to_string(oracle.verdict)) +
                    " agree=" + (agree ? "true" : "false");

            if (oracle_halin && g.vertex_count() <= 12) {
                int chi_class = chromatic_number_halin(g, *oracle.certificate);
                int chi_brute = brute_force_chromatic(g);
                bool ok = chi_class == chi_brute;
                ++chromatic_checked;
                if (ok) ++chromatic_consistent;
                row["chi_class"] = chi_class;
                row["chi_brute"] = chi_brute;
                row["chi_agree"] = ok;
                line += " chi_class=" + std::to_string(chi_class) +
                        " chi_brute=" + std::to_string(chi_brute) +
                        " chi_agree=" + (ok ? "true" : "false");
            } else {
                row["chi_class"] = nullptr;
                row["chi_brute"] = nullptr;
                row["chi_agree"] = nullptr;
            }
        } else {
            row["oracle"] = "skipped";
            row["agree"] = nullptr;
            row["chi_class"] = nullptr;
            row["chi_brute"] = nullptr;
            row["chi_agree"] = nullptr;
            line += " oracle=skipped";
        }
        rows.push_back(std::move(row));
        table += line + "\n";
    }

    Json summary;
    summary["files"] = files.size();
    summary["oracle_runs"] = oracle_runs;
    summary["agreements"] = agreements;
    summary["bfs_false_negatives"] = false_negatives;
    summary["bfs_false_positives"] = false_positives;
    summary["chromatic_checked"] = chromatic_checked;
    summary["chromatic_consistent"] = chromatic_consistent;

    Json doc;
    doc["command"] = "compare";
    doc["corpus"] = dir;
    doc["rows"] = std::move(rows);
    doc["summary"] = summary;

    std::vector<std::string> warnings;
    if (max_n > kDefaultOracleBound)
        warnings.push_back("oracle bound raised to " + std::to_string(max_n) +
                           "; spanning-tree enumeration is exponential");
    std::string text = "command: compare\ncorpus: " + dir + "\n" + table;
    text += "files: " + std::to_string(files.size()) + "\n";
    text += "oracle_runs: " + std::to_string(oracle_runs) + "\n";
    text += "agreements: " + std::to_string(agreements) + "\n";
    text += "bfs_false_negatives: " + std::to_string(false_negatives) + "\n";
    text += "bfs_false_positives: " + std::to_string(false_positives) + "\n";
    text += "chromatic_checked: " + std::to_string(chromatic_checked) + "\n";
    text += "chromatic_consistent: " + std::to_string(chromatic_consistent) + "\n";
    append_warnings(opts, doc, text, warnings);
    emit(opts, doc, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Halin graph recognition, chromatic classification and 3-coloring"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_flag("--json", opts.json, "emit a JSON document instead of text");
    app.add_flag("--quiet", opts.quiet, "suppress warnings");

    std::string input = "-";
    bool with_oracle = false;
    int max_oracle_n = kDefaultOracleBound;
    bool fallback4 = false;
    std::string dot_path;
    int internal = 1, max_children = 3, count = 1;
    std::uint64_t seed = 0;
    bool odd_wheel_free = false;
    std::string out_dir = ".";
    std::string corpus_dir;
    int compare_max_n = kDefaultOracleBound;

    CLI::App* recognize = app.add_subcommand("recognize", "test whether a graph is Halin");
    recognize->add_option("input", input, "edge-list file, or '-' for stdin");
    recognize->add_flag("--oracle", with_oracle, "also run the spanning-tree oracle");
    recognize->add_option("--max-oracle-n", max_oracle_n, "oracle vertex bound")
        ->capture_default_str();

    CLI::App* color = app.add_subcommand("color", "classify and 3-color a Halin graph");
    color->add_option("input", input, "edge-list file, or '-' for stdin");
    color->add_flag("--fallback-4", fallback4, "emit an exact 4-coloring when chi is 4");
    color->add_option("--dot", dot_path, "write the colored graph as DOT to this path");

    CLI::App* chromatic = app.add_subcommand("chromatic", "chromatic classification only");
    chromatic->add_option("input", input, "edge-list file, or '-' for stdin");

    CLI::App* wheels = app.add_subcommand("wheels", "find an induced odd wheel");
    wheels->add_option("input", input, "edge-list file, or '-' for stdin");

    CLI::App* generate = app.add_subcommand("generate", "generate Halin instances");
    generate->add_option("--internal", internal, "internal tree vertices")->required();
    generate->add_option("--max-children", max_children, "max children per expansion")
        ->capture_default_str();
    generate->add_option("--seed", seed, "base seed; instance i uses seed+i")
        ->capture_default_str();
    generate->add_option("--count", count, "number of instances")->capture_default_str();
    generate->add_flag("--odd-wheel-free", odd_wheel_free,
                       "rejection-sample until no induced odd wheel remains");
    generate->add_option("--out", out_dir, "output directory")->capture_default_str();
    generate->add_option("--max-oracle-n", max_oracle_n,
                         "oracle bound for manifest verdicts")
        ->capture_default_str();

    CLI::App* compare = app.add_subcommand("compare", "BFS-versus-oracle harness over a corpus");
    compare->add_option("corpus", corpus_dir, "directory of .edges files")->required();
    compare->add_option("--max-n", compare_max_n, "oracle vertex bound")->capture_default_str();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (recognize->parsed()) return cmd_recognize(opts, input, with_oracle, max_oracle_n);
        if (color->parsed()) return cmd_color(opts, input, fallback4, dot_path);
        if (chromatic->parsed()) return cmd_chromatic(opts, input);
        if (wheels->parsed()) return cmd_wheels(opts, input);
        if (generate->parsed())
            return cmd_generate(opts, internal, max_children, seed, count, odd_wheel_free,
                                out_dir, max_oracle_n);
        if (compare->parsed()) return cmd_compare(opts, corpus_dir, compare_max_n);
    } catch (const EmptyCandidateSet& e) {
        std::cout << "error: " << e.what() << "\n";
        std::cout << "partial_coloring:\n";
        const auto& partial = e.partial_coloring();
        for (std::size_t v = 0; v < partial.size(); ++v)
            if (partial[v] > 0) std::cout << "  " << v << " " << partial[v] << "\n";
        return 4;
    } catch (const PreconditionViolated& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const RetryExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
