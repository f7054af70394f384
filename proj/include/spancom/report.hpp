#pragma once

#include <string>
#include <vector>

#include "spancom/graph.hpp"

namespace spancom {

// JSON summaries with a fixed key order; identical inputs produce
// byte-identical documents. Potentially-large integers (f/h/Hilbert
// coefficients, tree counts) are decimal strings, small structural fields
// plain numbers.

// Full report for a concrete graph: the complex is enumerated, so every
// field that trips the N <= kEnumerationGuard guard is reported as the
// string "skipped" instead of aborting the document.
std::string report_graph_json(const Graph& g);

// Closed-form report for U_{n,m}: f/h/Hilbert come from the formulas (no
// size limit); enumeration-only fields are "skipped".
std::string report_closed_json(int n, int m);

struct VerifyCheck {
    std::string name;
    std::string closed_form_value;
    std::string oracle_value;
    bool match = false;
    long long elapsed_ms = 0;
};

struct VerifyCell {
    int n = 0;
    int m = 0;
    std::string attachment; // "chain" or "star"
    std::vector<VerifyCheck> checks;
    bool overall = false;
};

struct VerifyReport {
    int n_max = 0;
    int expand_to = 0;
    std::vector<VerifyCell> cells;
    bool overall = false;
};

// Sweeps every 3 <= m <= n <= n_max with chain and star attachments and
// compares each closed form against its enumeration oracle.
VerifyReport run_verification(int n_max, int expand_to);

std::string verify_report_json(const VerifyReport& report);

} // namespace spancom
