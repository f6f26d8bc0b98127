// Command line for the type-B Grassmannian toolkit: lengths, covering moves,
// box-row codec, duality, cover graphs, and the oracle cross-check.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 verification
// mismatch, 4 resource bound exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bgrass/bgrass.hpp"

namespace {

std::string format_vector(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

// parse "2 5 6 | -8 -7 -4 -1 3"; the rank is the number of entries, and a
// '|' marker, when present, must sit after position k
bgrass::GrassmannPerm read_grassmannian(const std::string& text, int k) {
    std::istringstream in(text);
    std::string tok;
    int n = 0;
    while (in >> tok)
        if (tok != "|") ++n;
    if (n == 0)
        throw bgrass::ParseError("no entries in permutation input");
    const auto parsed = bgrass::parse_oneline_marked(text, n);
    if (parsed.bar && *parsed.bar != k)
        throw bgrass::ValidationError("'|' marker after position " + std::to_string(*parsed.bar) +
                                      " does not match --k " + std::to_string(k));
    return bgrass::from_signed(parsed.perm, k);
}

int run_length(const std::string& perm, int k) {
    const auto g = read_grassmannian(perm, k);
    const auto p = bgrass::partition_pair(g);
    std::cout << "length = " << bgrass::length_grass(g) << "\n"
              << "alpha = " << format_vector(p.alpha) << "\n"
              << "lambda = " << format_vector(p.lambda) << "\n"
              << "mu = " << format_vector(p.mu) << "\n"
              << "d = " << format_vector(p.d) << "\n";
    return 0;
}

int run_enumerate(int n, int k, const std::string& format) {
    if (n > 14)
        throw bgrass::ResourceLimitError("enumeration is limited to n <= 14");
    const auto all = bgrass::enumerate_grassmannians(n, k);
    if (format == "text") {
        for (const auto& g : all)
            std::cout << g.to_string() << "\n";
    } else if (format == "maya") {
        for (const auto& g : all)
            std::cout << bgrass::to_maya(g).to_ascii() << "\n";
    } else if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& g : all)
            j.push_back(g.to_json());
        std::cout << j.dump(2) << "\n";
    } else {
        throw bgrass::ValidationError("unknown format '" + format +
                                      "' (expected text, maya or json)");
    }
    return 0;
}

int run_covered_by(const std::string& perm, int k) {
    for (const auto& e : bgrass::covered_by(read_grassmannian(perm, k)))
        std::cout << to_string(e.type) << "  " << e.lower.to_string() << "\n";
    return 0;
}

int run_covers(const std::string& perm, int k) {
    for (const auto& e : bgrass::covers_of(read_grassmannian(perm, k)))
        std::cout << to_string(e.type) << "  " << e.upper.to_string() << "\n";
    return 0;
}

int run_classify(const std::string& upper, const std::string& lower, int k) {
    const auto t = bgrass::classify(read_grassmannian(upper, k), read_grassmannian(lower, k));
    std::cout << (t ? to_string(*t) : "none") << "\n";
    return 0;
}

int run_dual(const std::string& perm, int k) {
    std::cout << bgrass::dual(read_grassmannian(perm, k)).to_string() << "\n";
    return 0;
}

int run_maya_encode(const std::string& perm, int k, bool unicode) {
    const auto m = bgrass::to_maya(read_grassmannian(perm, k));
    std::cout << (unicode ? m.to_unicode() : m.to_ascii()) << "\n";
    return 0;
}

int run_maya_decode(const std::string& row) {
    std::cout << bgrass::from_maya(bgrass::MayaDiagram::from_ascii(row)).to_string() << "\n";
    return 0;
}

int run_graph(int n, int k, const std::string& dot_path, const std::string& json_path,
              int bound, const bgrass::DotStyle& style) {
    const auto g = bgrass::build_graph(n, k, bound);
    {
        std::ofstream out(dot_path);
        if (!out)
            throw bgrass::Error("cannot write " + dot_path);
        out << bgrass::export_dot(g, style);
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out)
            throw bgrass::Error("cannot write " + json_path);
        out << bgrass::export_json(g);
    }
    std::cout << "graph n=" << n << " k=" << k << ": " << g.nodes.size() << " nodes, "
              << g.edges.size() << " edges\n";
    std::cout << "wrote " << dot_path << "\n";
    if (!json_path.empty())
        std::cout << "wrote " << json_path << "\n";
    return 0;
}

// Rebuild every quotient two ways -- block moves vs. reflection oracle --
// and compare the edge sets exactly.
int run_verify(int max_n, int bound, const std::string& cache_dir) {
    if (max_n < 1)
        throw bgrass::ValidationError("--max-n must be positive");
    if (!cache_dir.empty())
        std::filesystem::create_directories(cache_dir);
    bool all_ok = true;
    for (int n = 1; n <= max_n; ++n) {
        bgrass::FullGroupTable table = [&] {
            if (!cache_dir.empty()) {
                const std::string path =
                    cache_dir + "/fullgroup_n" + std::to_string(n) + ".json";
                if (auto cached = bgrass::load_table(path, n))
                    return std::move(*cached);
                auto fresh = bgrass::build_full_group(n, bound);
                bgrass::save_table(fresh, path);
                return fresh;
            }
            return bgrass::build_full_group(n, bound);
        }();
        for (int k = 0; k <= n; ++k) {
            using Pair = std::pair<std::string, std::string>;
            std::set<Pair> from_moves;
            std::size_t nodes = 0;
            for (const auto& g : bgrass::enumerate_grassmannians(n, k)) {
                ++nodes;
                for (const auto& e : bgrass::covered_by(g))
                    from_moves.emplace(e.lower.to_string(), e.upper.to_string());
            }
            std::set<Pair> from_oracle;
            for (const auto& [lo, hi] : bgrass::quotient_cover_oracle(table, k))
                from_oracle.emplace(lo.to_string(), hi.to_string());
            const bool ok = from_moves == from_oracle;
            std::cout << "n=" << n << " k=" << k << ": nodes=" << nodes
                      << " moves=" << from_moves.size() << " oracle=" << from_oracle.size()
                      << (ok ? " ok" : " MISMATCH") << "\n";
            if (!ok) {
                all_ok = false;
                auto report = [](const std::set<Pair>& a, const std::set<Pair>& b,
                                 const char* label) {
                    int shown = 0;
                    for (const auto& p : a)
                        if (!b.count(p)) {
                            std::cout << "  " << label << ": " << p.first << "  <  "
                                      << p.second << "\n";
                            if (++shown == 20) {
                                std::cout << "  ...\n";
                                break;
                            }
                        }
                };
                report(from_moves, from_oracle, "only from moves");
                report(from_oracle, from_moves, "only from oracle");
            }
        }
    }
    std::cout << (all_ok ? "VERIFY OK" : "VERIFY FAILED") << "\n";
    return all_ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed k-Grassmannian permutations: lengths, covers, box rows and graphs"};
    app.require_subcommand(1);

    std::string perm, perm2, format = "text", dot_path, json_path, cache_dir, maya_row;
    int n = 0, k = 0, max_n = 0;
    int graph_bound = bgrass::kDefaultGraphRankBound;
    int oracle_bound = bgrass::kDefaultOracleRankBound;
    bool unicode = false;
    bgrass::DotStyle style;

    auto* cmd_length = app.add_subcommand("length", "length and block data of an element");
    cmd_length->add_option("--k", k, "number of unbarred leading positions")->required();
    cmd_length->add_option("perm", perm, "one-line notation, '|' optional")->required();

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list a whole quotient in lex order");
    cmd_enumerate->add_option("--n", n, "rank")->required();
    cmd_enumerate->add_option("--k", k, "quotient index")->required();
    cmd_enumerate->add_option("--format", format, "text, maya or json (default text)");

    auto* cmd_covered_by = app.add_subcommand("covered-by", "elements covered by the argument");
    cmd_covered_by->add_option("--k", k, "quotient index")->required();
    cmd_covered_by->add_option("perm", perm, "one-line notation")->required();

    auto* cmd_covers = app.add_subcommand("covers", "elements covering the argument");
    cmd_covers->add_option("--k", k, "quotient index")->required();
    cmd_covers->add_option("perm", perm, "one-line notation")->required();

    auto* cmd_classify = app.add_subcommand("classify", "type of the covering pair w' <| w");
    cmd_classify->add_option("--k", k, "quotient index")->required();
    cmd_classify->add_option("w", perm, "the upper element w")->required();
    cmd_classify->add_option("w2", perm2, "the candidate covered element w'")->required();

    auto* cmd_dual = app.add_subcommand("dual", "the dual element (lambda and v exchanged)");
    cmd_dual->add_option("--k", k, "quotient index")->required();
    cmd_dual->add_option("perm", perm, "one-line notation")->required();

    auto* cmd_maya = app.add_subcommand("maya", "box-row codec");
    cmd_maya->require_subcommand(1);
    auto* cmd_encode = cmd_maya->add_subcommand("encode", "element to box row");
    cmd_encode->add_option("--k", k, "quotient index")->required();
    cmd_encode->add_option("perm", perm, "one-line notation")->required();
    cmd_encode->add_flag("--unicode", unicode, "print the display symbols instead of ascii");
    auto* cmd_decode = cmd_maya->add_subcommand("decode", "box row to element");
    cmd_decode->add_option("row", maya_row, "string over o, b, x")->required();

    auto* cmd_graph = app.add_subcommand("graph", "export the full cover graph of a quotient");
    cmd_graph->add_option("--n", n, "rank")->required();
    cmd_graph->add_option("--k", k, "quotient index")->required();
    cmd_graph->add_option("--dot", dot_path, "output path for Graphviz")->required();
    cmd_graph->add_option("--json", json_path, "optional output path for JSON");
    cmd_graph->add_option("--bound", graph_bound, "largest allowed rank (default 10)");
    cmd_graph->add_option("--style-b1", style.b1, "edge attributes for B1 covers");
    cmd_graph->add_option("--style-b2", style.b2, "edge attributes for B2 covers");
    cmd_graph->add_option("--style-b3", style.b3, "edge attributes for B3 covers");
    cmd_graph->add_option("--style-b4", style.b4, "edge attributes for B4 covers");
    cmd_graph->add_flag("--duality-links", style.duality_links,
                        "overlay undirected links between dual elements");

    auto* cmd_verify = app.add_subcommand(
        "verify", "cross-check the covering moves against the reflection oracle");
    cmd_verify->add_option("--max-n", max_n, "check every quotient up to this rank")->required();
    cmd_verify->add_option("--bound", oracle_bound, "oracle rank guard (default 6)");
    cmd_verify->add_option("--cache", cache_dir, "directory for cached group tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_length->parsed()) return run_length(perm, k);
        if (cmd_enumerate->parsed()) return run_enumerate(n, k, format);
        if (cmd_covered_by->parsed()) return run_covered_by(perm, k);
        if (cmd_covers->parsed()) return run_covers(perm, k);
        if (cmd_classify->parsed()) return run_classify(perm, perm2, k);
        if (cmd_dual->parsed()) return run_dual(perm, k);
        if (cmd_encode->parsed()) return run_maya_encode(perm, k, unicode);
        if (cmd_decode->parsed()) return run_maya_decode(maya_row);
        if (cmd_graph->parsed()) return run_graph(n, k, dot_path, json_path, graph_bound, style);
        if (cmd_verify->parsed()) return run_verify(max_n, oracle_bound, cache_dir);
    } catch (const bgrass::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const bgrass::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
