#include "spancom.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "spancom/graph.hpp"
#include "spancom/report.hpp"
#include "spancom/spanning_trees.hpp"

struct spancom_graph {
    spancom::Graph graph;
};

namespace {

thread_local std::string t_last_error;

spancom_status status_from(spancom::ErrorCode code) {
    using spancom::ErrorCode;
    switch (code) {
        case ErrorCode::ok: return SPANCOM_OK;
        case ErrorCode::self_loop: return SPANCOM_ERR_SELF_LOOP;
        case ErrorCode::duplicate_edge: return SPANCOM_ERR_DUPLICATE_EDGE;
        case ErrorCode::vertex_out_of_range: return SPANCOM_ERR_VERTEX_OUT_OF_RANGE;
        case ErrorCode::not_unicyclic: return SPANCOM_ERR_NOT_UNICYCLIC;
        case ErrorCode::bad_cycle_length: return SPANCOM_ERR_BAD_CYCLE_LENGTH;
        case ErrorCode::bad_attachment: return SPANCOM_ERR_BAD_ATTACHMENT;
        case ErrorCode::disconnected: return SPANCOM_ERR_DISCONNECTED;
        case ErrorCode::too_large: return SPANCOM_ERR_TOO_LARGE;
        case ErrorCode::not_canonical: return SPANCOM_ERR_NOT_CANONICAL;
        case ErrorCode::empty_input: return SPANCOM_ERR_EMPTY_INPUT;
        case ErrorCode::label_out_of_range: return SPANCOM_ERR_LABEL_OUT_OF_RANGE;
        case ErrorCode::not_pure: return SPANCOM_ERR_NOT_PURE;
        case ErrorCode::not_permutation: return SPANCOM_ERR_NOT_PERMUTATION;
        case ErrorCode::zero_numerator: return SPANCOM_ERR_ZERO_NUMERATOR;
        case ErrorCode::bad_params: return SPANCOM_ERR_BAD_PARAMS;
        case ErrorCode::negative_upper: return SPANCOM_ERR_NEGATIVE_UPPER;
        case ErrorCode::parse_error: return SPANCOM_ERR_PARSE;
        case ErrorCode::invalid_argument: return SPANCOM_ERR_INVALID_ARGUMENT;
        case ErrorCode::internal_error: return SPANCOM_ERR_INTERNAL;
    }
    return SPANCOM_ERR_INTERNAL;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
spancom_status guarded(Fn&& body) {
    try {
        body();
        t_last_error.clear();
        return SPANCOM_OK;
    } catch (const spancom::Error& e) {
        t_last_error = e.what();
        return status_from(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return SPANCOM_ERR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return SPANCOM_ERR_INTERNAL;
    }
}

spancom_status require(bool condition, const char* message) {
    if (condition) {
        return SPANCOM_OK;
    }
    t_last_error = message;
    return SPANCOM_ERR_INVALID_ARGUMENT;
}

char* copy_out(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

} // namespace

extern "C" {

spancom_status spancom_graph_build(int vertex_count, const int* endpoints,
                                   int edge_count, spancom_graph** out) {
    if (auto st = require(out != nullptr, "null output handle"); st != SPANCOM_OK) {
        return st;
    }
    if (auto st = require(edge_count >= 0, "negative edge count"); st != SPANCOM_OK) {
        return st;
    }
    if (auto st = require(edge_count == 0 || endpoints != nullptr,
                          "null endpoint array");
        st != SPANCOM_OK) {
        return st;
    }
    return guarded([&] {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<std::size_t>(edge_count));
        for (int k = 0; k < edge_count; ++k) {
            pairs.emplace_back(endpoints[2 * k], endpoints[2 * k + 1]);
        }
        *out = new spancom_graph{spancom::build_graph(vertex_count, pairs)};
    });
}

spancom_status spancom_graph_parse(const char* text, spancom_graph** out) {
    if (auto st = require(text != nullptr && out != nullptr, "null argument");
        st != SPANCOM_OK) {
        return st;
    }
    return guarded([&] { *out = new spancom_graph{spancom::parse_edge_list(text)}; });
}

spancom_status spancom_unicyclic_make(int n, int m, const int* attachment,
                                      int attachment_len, spancom_graph** out) {
    if (auto st = require(out != nullptr, "null output handle"); st != SPANCOM_OK) {
        return st;
    }
    if (auto st = require(attachment_len >= 0 &&
                              (attachment_len == 0 || attachment != nullptr),
                          "null attachment array");
        st != SPANCOM_OK) {
        return st;
    }
    return guarded([&] {
        std::vector<int> parents(attachment, attachment + attachment_len);
        *out = new spancom_graph{spancom::make_unicyclic(n, m, parents).base};
    });
}

spancom_status spancom_unicyclic_gen(int n, int m, const char* shape,
                                     spancom_graph** out) {
    if (auto st = require(shape != nullptr && out != nullptr, "null argument");
        st != SPANCOM_OK) {
        return st;
    }
    return guarded([&] {
        const std::string spec(shape);
        std::vector<int> parents;
        if (spec == "chain") {
            parents = spancom::attachment_chain(n, m);
        } else if (spec == "star") {
            parents = spancom::attachment_star(n, m);
        } else if (spec.rfind("seed:", 0) == 0) {
            std::size_t used = 0;
            unsigned long seed = 0;
            try {
                seed = std::stoul(spec.substr(5), &used);
            } catch (const std::exception&) {
                spancom::raise(spancom::ErrorCode::bad_params,
                               "gen: malformed seed in '" + spec + "'");
            }
            if (used != spec.size() - 5) {
                spancom::raise(spancom::ErrorCode::bad_params,
                               "gen: malformed seed in '" + spec + "'");
            }
            parents = spancom::attachment_seeded(n, m, seed);
        } else {
            spancom::raise(spancom::ErrorCode::bad_params,
                           "gen: unknown shape '" + spec +
                               "' (expected chain, star or seed:<K>)");
        }
        *out = new spancom_graph{spancom::make_unicyclic(n, m, parents).base};
    });
}

void spancom_graph_free(spancom_graph* g) {
    delete g;
}

int spancom_graph_vertex_count(const spancom_graph* g) {
    return g == nullptr ? -1 : g->graph.vertex_count();
}

int spancom_graph_edge_count(const spancom_graph* g) {
    return g == nullptr ? -1 : g->graph.edge_count();
}

spancom_status spancom_graph_is_connected(const spancom_graph* g, int* out) {
    if (auto st = require(g != nullptr && out != nullptr, "null argument");
        st != SPANCOM_OK) {
        return st;
    }
    return guarded([&] { *out = spancom::is_connected(g->graph) ? 1 : 0; });
}

spancom_status spancom_graph_serialize(const spancom_graph* g, char** out) {
    if (auto st = require(g != nullptr && out != nullptr, "null argument");
        st != SPANCOM_OK) {
        return st;
    }
    return guarded([&] { *out = copy_out(spancom::serialize_edge_list(g->graph)); });
}

spancom_status spancom_trees_list(const spancom_graph* g, char** out) {
    if (auto st = require(g != nullptr && out != nullptr, "null argument");
        st != SPANCOM_OK) {
        return st;
    }
    return guarded([&] {
        const spancom::SpanningTreeSet trees =
            spancom::enumerate_spanning_trees(g->graph);
        std::ostringstream text;
        for (const std::vector<int>& tree : trees.trees) {
            for (std::size_t i = 0; i < tree.size(); ++i) {
                if (i > 0) {
                    text << ' ';
                }
                text << tree[i];
            }
            text << '\n';
        }
        *out = copy_out(text.str());
    });
}

spancom_status spancom_trees_count(const spancom_graph* g, char** out) {
    if (auto st = require(g != nullptr && out != nullptr, "null argument");
        st != SPANCOM_OK) {
        return st;
    }
    return guarded([&] {
        *out = copy_out(
            spancom::to_decimal(spancom::count_spanning_trees_kirchhoff(g->graph)));
    });
}

spancom_status spancom_report_graph_json(const spancom_graph* g, char** out) {
    if (auto st = require(g != nullptr && out != nullptr, "null argument");
        st != SPANCOM_OK) {
        return st;
    }
    return guarded([&] { *out = copy_out(spancom::report_graph_json(g->graph)); });
}

spancom_status spancom_report_closed_json(int n, int m, char** out) {
    if (auto st = require(out != nullptr, "null output"); st != SPANCOM_OK) {
        return st;
    }
    return guarded([&] { *out = copy_out(spancom::report_closed_json(n, m)); });
}

spancom_status spancom_verify_json(int n_max, int expand_to, int* all_pass,
                                   char** out) {
    if (auto st = require(all_pass != nullptr && out != nullptr, "null argument");
        st != SPANCOM_OK) {
        return st;
    }
    return guarded([&] {
        const spancom::VerifyReport report =
            spancom::run_verification(n_max, expand_to);
        *all_pass = report.overall ? 1 : 0;
        *out = copy_out(spancom::verify_report_json(report));
    });
}

void spancom_string_free(char* s) {
    std::free(s);
}

const char* spancom_status_name(spancom_status status) {
    switch (status) {
        case SPANCOM_OK: return "ok";
        case SPANCOM_ERR_SELF_LOOP: return "self_loop";
        case SPANCOM_ERR_DUPLICATE_EDGE: return "duplicate_edge";
        case SPANCOM_ERR_VERTEX_OUT_OF_RANGE: return "vertex_out_of_range";
        case SPANCOM_ERR_NOT_UNICYCLIC: return "not_unicyclic";
        case SPANCOM_ERR_BAD_CYCLE_LENGTH: return "bad_cycle_length";
        case SPANCOM_ERR_BAD_ATTACHMENT: return "bad_attachment";
        case SPANCOM_ERR_DISCONNECTED: return "disconnected";
        case SPANCOM_ERR_TOO_LARGE: return "too_large";
        case SPANCOM_ERR_NOT_CANONICAL: return "not_canonical";
        case SPANCOM_ERR_EMPTY_INPUT: return "empty_input";
        case SPANCOM_ERR_LABEL_OUT_OF_RANGE: return "label_out_of_range";
        case SPANCOM_ERR_NOT_PURE: return "not_pure";
        case SPANCOM_ERR_NOT_PERMUTATION: return "not_permutation";
        case SPANCOM_ERR_ZERO_NUMERATOR: return "zero_numerator";
        case SPANCOM_ERR_BAD_PARAMS: return "bad_params";
        case SPANCOM_ERR_NEGATIVE_UPPER: return "negative_upper";
        case SPANCOM_ERR_PARSE: return "parse_error";
        case SPANCOM_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case SPANCOM_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* spancom_last_error(void) {
    return t_last_error.c_str();
}

} // extern "C"
