#include "spancom/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "spancom/simplicial.hpp"
#include "spancom/sr_algebra.hpp"
#include "spancom/unicyclic_formulas.hpp"

namespace spancom {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json decimal_array(const std::vector<BigInt>& values) {
    ordered_json arr = ordered_json::array();
    for (const BigInt& v : values) {
        arr.push_back(to_decimal(v));
    }
    return arr;
}

ordered_json face_list(const std::vector<Face>& faces) {
    ordered_json arr = ordered_json::array();
    for (const Face& f : faces) {
        arr.push_back(f);
    }
    return arr;
}

// f/h/Hilbert block shared by both report modes.
void fill_algebra(ordered_json& doc, const FVector& f, const HVector& h_raw,
                  const HilbertSeries& series) {
    doc["f_vector"] = decimal_array(f.entries);
    doc["h_vector_raw"] = decimal_array(h_raw.entries);
    doc["h_vector"] = decimal_array(h_raw.normalized().entries);
    doc["hilbert_numerator"] = decimal_array(series.numerator.coeffs);
    doc["pole_order"] = series.pole_order;
}

std::string render(const ordered_json& doc) {
    return doc.dump(2) + "\n";
}

std::string tree_set_to_string(const SpanningTreeSet& s) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < s.trees.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << '{';
        for (std::size_t j = 0; j < s.trees[i].size(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << s.trees[i][j];
        }
        out << '}';
    }
    out << ']';
    return out.str();
}

std::string vector_to_string(const std::vector<BigInt>& values) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << to_decimal(values[i]);
    }
    out << ']';
    return out.str();
}

std::string series_to_string(const HilbertSeries& s) {
    return vector_to_string(s.numerator.coeffs) + "/(1-t)^" +
           std::to_string(s.pole_order);
}

} // namespace

std::string report_graph_json(const Graph& g) {
    ordered_json doc;
    doc["mode"] = "graph";
    doc["vertices"] = g.vertex_count();
    doc["edges"] = g.edge_count();
    try {
        const SimplicialComplex complex = spanning_complex(g);
        const FVector f = f_vector(complex);
        const HVector h_raw = h_from_f(f, complex.dimension());
        const HilbertSeries series = series_from_f(f);
        fill_algebra(doc, f, h_raw, series);
        doc["shifted"] = is_shifted(complex);
        const ShellingSearch shelling = find_shelling_order(complex);
        if (shelling.status == ShellabilityStatus::found) {
            ordered_json arr = ordered_json::array();
            for (int index : shelling.order) {
                arr.push_back(index + 1); // 1-based facet positions
            }
            doc["shelling_order"] = arr;
        } else {
            doc["shelling_order"] = nullptr;
        }
        doc["minimal_nonfaces"] = face_list(minimal_nonfaces(complex));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::too_large) {
            throw;
        }
        for (const char* key : {"f_vector", "h_vector_raw", "h_vector",
                                "hilbert_numerator", "pole_order", "shifted",
                                "shelling_order", "minimal_nonfaces"}) {
            doc[key] = "skipped";
        }
    }
    return render(doc);
}

std::string report_closed_json(int n, int m) {
    const UnicyclicParams params{n, m};
    ordered_json doc;
    doc["mode"] = "closed_form";
    doc["n"] = n;
    doc["m"] = m;
    fill_algebra(doc, f_closed(params), h_closed(params), hilbert_closed(params));
    for (const char* key : {"shifted", "shelling_order", "minimal_nonfaces"}) {
        doc[key] = "skipped";
    }
    return render(doc);
}

namespace {

class CheckTimer {
public:
    CheckTimer() : start_(std::chrono::steady_clock::now()) {}

    long long elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

VerifyCheck make_check(const std::string& name, const CheckTimer& timer,
                       std::string closed, std::string oracle, bool extra_ok = true) {
    VerifyCheck check;
    check.name = name;
    check.closed_form_value = std::move(closed);
    check.oracle_value = std::move(oracle);
    check.match = extra_ok && check.closed_form_value == check.oracle_value;
    check.elapsed_ms = timer.elapsed_ms();
    return check;
}

VerifyCell verify_cell(int n, int m, const std::string& shape, int expand_to) {
    VerifyCell cell;
    cell.n = n;
    cell.m = m;
    cell.attachment = shape;

    const std::vector<int> attachment =
        shape == "chain" ? attachment_chain(n, m) : attachment_star(n, m);
    const UnicyclicGraph u = make_unicyclic(n, m, attachment);
    const UnicyclicParams params{n, m};

    {
        CheckTimer timer;
        const SpanningTreeSet closed = unicyclic_spanning_trees(u);
        const SpanningTreeSet oracle = enumerate_spanning_trees(u.base);
        cell.checks.push_back(make_check(
            "spanning_trees", timer, tree_set_to_string(closed),
            tree_set_to_string(oracle), static_cast<int>(closed.trees.size()) == m));
    }
    {
        CheckTimer timer;
        cell.checks.push_back(make_check(
            "kirchhoff_count", timer, std::to_string(m),
            to_decimal(count_spanning_trees_kirchhoff(u.base))));
    }

    const SimplicialComplex complex = spanning_complex(u.base);
    const FVector f_oracle = f_vector(complex);
    const FVector f_formula = f_closed(params);

    {
        CheckTimer timer;
        bool prefix_full = f_formula.dimension() == n - 2;
        for (int i = 0; prefix_full && i <= m - 2; ++i) {
            prefix_full = f_formula.entries[static_cast<std::size_t>(i)] == binom(n, i + 1);
        }
        cell.checks.push_back(make_check("f_vector", timer,
                                         vector_to_string(f_formula.entries),
                                         vector_to_string(f_oracle.entries),
                                         prefix_full));
    }
    {
        CheckTimer timer;
        const HVector h_formula = h_closed(params);
        const HVector h_oracle = h_from_f(f_oracle, complex.dimension());
        cell.checks.push_back(make_check("h_vector", timer,
                                         vector_to_string(h_formula.entries),
                                         vector_to_string(h_oracle.entries)));
    }

    const HilbertSeries series_formula = hilbert_closed(params);
    {
        CheckTimer timer;
        const HilbertSeries series_oracle = series_from_f(f_oracle);
        const bool numerator_is_h =
            series_formula.numerator.coeffs == h_closed(params).normalized().entries;
        cell.checks.push_back(make_check("hilbert_series", timer,
                                         series_to_string(series_formula),
                                         series_to_string(series_oracle),
                                         numerator_is_h));
    }
    {
        CheckTimer timer;
        const std::vector<BigInt> expanded = expand_series(series_formula, expand_to);
        std::vector<BigInt> direct;
        direct.reserve(static_cast<std::size_t>(expand_to) + 1);
        for (int j = 0; j <= expand_to; ++j) {
            direct.push_back(hilbert_function_direct(complex, j));
        }
        cell.checks.push_back(make_check("hilbert_expansion", timer,
                                         vector_to_string(expanded),
                                         vector_to_string(direct)));
    }
    {
        CheckTimer timer;
        cell.checks.push_back(make_check("h_sum", timer,
                                         to_decimal(h_closed(params).sum()),
                                         std::to_string(m)));
    }
    {
        CheckTimer timer;
        cell.checks.push_back(
            make_check("shifted", timer, "true",
                       is_shifted(complex) ? "true" : "false"));
    }
    {
        CheckTimer timer;
        const ShellingSearch search = find_shelling_order(complex);
        cell.checks.push_back(
            make_check("shelling_order", timer, "found",
                       search.status == ShellabilityStatus::found ? "found"
                                                                  : "missing"));
    }

    cell.overall = true;
    for (const VerifyCheck& check : cell.checks) {
        cell.overall = cell.overall && check.match;
    }
    return cell;
}

} // namespace

VerifyReport run_verification(int n_max, int expand_to) {
    if (n_max < 3) {
        raise(ErrorCode::bad_params, "verify: n_max must be at least 3");
    }
    if (expand_to < 0) {
        raise(ErrorCode::bad_params, "verify: expand_to must be nonnegative");
    }
    VerifyReport report;
    report.n_max = n_max;
    report.expand_to = expand_to;
    report.overall = true;
    for (int n = 3; n <= n_max; ++n) {
        for (int m = 3; m <= n; ++m) {
            for (const char* shape : {"chain", "star"}) {
                report.cells.push_back(verify_cell(n, m, shape, expand_to));
                report.overall = report.overall && report.cells.back().overall;
            }
        }
    }
    return report;
}

std::string verify_report_json(const VerifyReport& report) {
    ordered_json doc;
    doc["mode"] = "verify";
    doc["n_max"] = report.n_max;
    doc["expand_to"] = report.expand_to;
    ordered_json cells = ordered_json::array();
    for (const VerifyCell& cell : report.cells) {
        ordered_json jcell;
        jcell["params"] = {{"n", cell.n}, {"m", cell.m}, {"attachment", cell.attachment}};
        ordered_json checks = ordered_json::array();
        for (const VerifyCheck& check : cell.checks) {
            ordered_json jcheck;
            jcheck["name"] = check.name;
            jcheck["closed_form_value"] = check.closed_form_value;
            jcheck["oracle_value"] = check.oracle_value;
            jcheck["match"] = check.match;
            jcheck["elapsed_ms"] = check.elapsed_ms;
            checks.push_back(jcheck);
        }
        jcell["checks"] = checks;
        jcell["overall"] = cell.overall;
        cells.push_back(jcell);
    }
    doc["cells"] = cells;
    doc["overall"] = report.overall;
    return render(doc);
}

} // namespace spancom
