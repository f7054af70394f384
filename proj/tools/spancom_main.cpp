// spancom command line: generate uni-cyclic graphs, list/count spanning
// trees, emit JSON reports and run the closed-form verification sweep.
// Talks to the library exclusively through the C API.

#include <spancom.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct OwnedString {
    char* value = nullptr;

    ~OwnedString() { spancom_string_free(value); }

    std::string str() const { return value == nullptr ? std::string() : value; }
};

struct OwnedGraph {
    spancom_graph* handle = nullptr;

    ~OwnedGraph() { spancom_graph_free(handle); }
};

int report_failure(spancom_status status) {
    std::cerr << "error: " << spancom_status_name(status) << ": "
              << spancom_last_error() << '\n';
    return kExitInputError;
}

bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        out = buffer.str();
        return true;
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return false;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    out = buffer.str();
    return true;
}

bool load_graph(const std::string& path, OwnedGraph& graph) {
    std::string text;
    if (!read_input(path, text)) {
        return false;
    }
    const spancom_status status = spancom_graph_parse(text.c_str(), &graph.handle);
    if (status != SPANCOM_OK) {
        report_failure(status);
        return false;
    }
    return true;
}

int run_gen(int n, int m, const std::string& shape, const std::string& output) {
    OwnedGraph graph;
    spancom_status status = spancom_unicyclic_gen(n, m, shape.c_str(), &graph.handle);
    if (status != SPANCOM_OK) {
        return report_failure(status);
    }
    OwnedString text;
    status = spancom_graph_serialize(graph.handle, &text.value);
    if (status != SPANCOM_OK) {
        return report_failure(status);
    }
    if (output == "-") {
        std::cout << text.str();
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write '" << output << "'\n";
            return kExitInputError;
        }
        file << text.str();
    }
    std::cerr << "n=" << n << " m=" << m << '\n';
    return kExitOk;
}

int run_trees(const std::string& input, bool count_only) {
    OwnedGraph graph;
    if (!load_graph(input, graph)) {
        return kExitInputError;
    }
    if (count_only) {
        OwnedString count;
        const spancom_status status = spancom_trees_count(graph.handle, &count.value);
        if (status != SPANCOM_OK) {
            return report_failure(status);
        }
        std::cout << count.str() << '\n';
        return kExitOk;
    }
    OwnedString listing;
    const spancom_status status = spancom_trees_list(graph.handle, &listing.value);
    if (status != SPANCOM_OK) {
        return report_failure(status);
    }
    const std::string text = listing.str();
    std::cout << text;
    std::size_t lines = 0;
    for (char c : text) {
        lines += c == '\n';
    }
    std::cout << "count " << lines << '\n';
    return kExitOk;
}

int run_report(const std::string& input, bool closed_form, int n, int m) {
    OwnedString json;
    spancom_status status = SPANCOM_OK;
    if (closed_form) {
        status = spancom_report_closed_json(n, m, &json.value);
    } else {
        OwnedGraph graph;
        if (!load_graph(input, graph)) {
            return kExitInputError;
        }
        status = spancom_report_graph_json(graph.handle, &json.value);
    }
    if (status != SPANCOM_OK) {
        return report_failure(status);
    }
    std::cout << json.str();
    return kExitOk;
}

int run_verify(int n_max, int expand_to, bool as_json) {
    int all_pass = 0;
    OwnedString json;
    const spancom_status status =
        spancom_verify_json(n_max, expand_to, &all_pass, &json.value);
    if (status != SPANCOM_OK) {
        return report_failure(status);
    }
    if (as_json) {
        std::cout << json.str();
        return all_pass == 1 ? kExitOk : kExitVerifyFailed;
    }

    const auto doc = nlohmann::json::parse(json.str());
    std::size_t failed_cells = 0;
    for (const auto& cell : doc.at("cells")) {
        const auto& params = cell.at("params");
        std::ostringstream where;
        where << "n=" << params.at("n").get<int>() << " m=" << params.at("m").get<int>()
              << " " << params.at("attachment").get<std::string>();
        if (cell.at("overall").get<bool>()) {
            std::cout << "ok   " << where.str() << '\n';
            continue;
        }
        ++failed_cells;
        std::string names;
        for (const auto& check : cell.at("checks")) {
            if (!check.at("match").get<bool>()) {
                names += names.empty() ? "" : ",";
                names += check.at("name").get<std::string>();
            }
        }
        std::cout << "FAIL " << where.str() << ": " << names << '\n';
    }
    const std::size_t total = doc.at("cells").size();
    std::cout << "verify: " << (total - failed_cells) << "/" << total
              << " cells passed\n";
    return all_pass == 1 ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanning simplicial complexes of connected graphs"};
    app.require_subcommand(1);

    // gen
    int gen_n = 0;
    int gen_m = 0;
    std::string gen_shape = "chain";
    std::string gen_output = "-";
    CLI::App* gen = app.add_subcommand(
        "gen", "generate a uni-cyclic graph U_{n,m} as an edge list");
    gen->add_option("n,--n", gen_n, "vertex (= edge) count")->required();
    gen->add_option("m,--m", gen_m, "cycle length");
    gen->add_option("attachment,--attachment", gen_shape,
                    "chain | star | seed:<K> (default chain)");
    gen->add_option("-o,--output", gen_output, "output path ('-' for stdout)");

    // trees
    std::string trees_input = "-";
    bool trees_count_only = false;
    CLI::App* trees =
        app.add_subcommand("trees", "list the spanning trees of a graph");
    trees->add_option("input,--input", trees_input,
                      "edge-list path ('-' for stdin)");
    trees->add_flag("--count-only", trees_count_only,
                    "print only the matrix-tree count");

    // report
    std::string report_input = "-";
    bool report_closed = false;
    int report_n = 0;
    int report_m = 0;
    CLI::App* report = app.add_subcommand(
        "report", "JSON report: f/h-vectors, Hilbert series, shiftedness, shelling");
    report->add_option("--input", report_input, "edge-list path ('-' for stdin)");
    report->add_flag("--closed-form", report_closed,
                     "evaluate the U_{n,m} closed forms instead of a graph");
    report->add_option("n,--n", report_n, "n for --closed-form");
    report->add_option("m,--m", report_m, "m for --closed-form");

    // verify
    int verify_n_max = 9;
    int verify_expand = 12;
    bool verify_json = false;
    CLI::App* verify = app.add_subcommand(
        "verify", "sweep closed forms against enumeration oracles");
    verify->add_option("n_max,--n-max", verify_n_max,
                       "largest n in the sweep (default 9)");
    verify->add_option("--expand-to", verify_expand,
                       "compare Hilbert function values up to this degree");
    verify->add_flag("--json", verify_json, "emit the full JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    if (gen->parsed()) {
        if (gen_m == 0) {
            gen_m = gen_n; // default: the pure cycle C_n
        }
        return run_gen(gen_n, gen_m, gen_shape, gen_output);
    }
    if (trees->parsed()) {
        return run_trees(trees_input, trees_count_only);
    }
    if (report->parsed()) {
        if (report_closed && (report_n == 0 || report_m == 0)) {
            std::cerr << "error: --closed-form needs n and m\n";
            return kExitInputError;
        }
        return run_report(report_input, report_closed, report_n, report_m);
    }
    if (verify->parsed()) {
        return run_verify(verify_n_max, verify_expand, verify_json);
    }
    return kExitInputError;
}
