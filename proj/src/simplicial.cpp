#include "spancom/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace spancom {

namespace {

void check_ground_guard(int ground_size, const char* who) {
    if (ground_size > kEnumerationGuard) {
        raise(ErrorCode::too_large,
              std::string(who) + ": ground set of size " + std::to_string(ground_size) +
                  " exceeds the guard of " + std::to_string(kEnumerationGuard));
    }
}

void check_labels(int ground_size, const Face& f, const char* who) {
    for (int label : f) {
        if (label < 1 || label > ground_size) {
            raise(ErrorCode::label_out_of_range,
                  std::string(who) + ": label " + std::to_string(label) +
                      " outside 1.." + std::to_string(ground_size));
        }
    }
}

std::uint32_t to_mask(const Face& f) {
    std::uint32_t mask = 0;
    for (int label : f) {
        mask |= std::uint32_t{1} << (label - 1);
    }
    return mask;
}

Face from_mask(std::uint32_t mask) {
    Face f;
    while (mask != 0) {
        const int bit = std::countr_zero(mask);
        f.push_back(bit + 1);
        mask &= mask - 1;
    }
    return f;
}

bool face_order(const Face& a, const Face& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

std::vector<std::uint32_t> facet_masks(const SimplicialComplex& c) {
    std::vector<std::uint32_t> masks;
    masks.reserve(c.facets().size());
    for (const Face& f : c.facets()) {
        masks.push_back(to_mask(f));
    }
    return masks;
}

// Downward closure of the facets as a mask set (includes the empty face).
std::unordered_set<std::uint32_t> face_closure(const SimplicialComplex& c,
                                               const char* who) {
    check_ground_guard(c.ground_size(), who);
    std::unordered_set<std::uint32_t> faces;
    std::vector<std::uint32_t> stack = facet_masks(c);
    for (std::uint32_t mask : stack) {
        faces.insert(mask);
    }
    faces.insert(0);
    while (!stack.empty()) {
        const std::uint32_t mask = stack.back();
        stack.pop_back();
        std::uint32_t rest = mask;
        while (rest != 0) {
            const std::uint32_t bit = rest & (~rest + 1);
            rest &= rest - 1;
            const std::uint32_t child = mask ^ bit;
            if (faces.insert(child).second) {
                stack.push_back(child);
            }
        }
    }
    return faces;
}

} // namespace

SimplicialComplex::SimplicialComplex(int ground_size, std::vector<Face> facets)
    : ground_size_(ground_size), facets_(std::move(facets)) {}

SimplicialComplex SimplicialComplex::from_facets(int ground_size,
                                                 std::vector<Face> candidates) {
    if (ground_size < 0) {
        raise(ErrorCode::invalid_argument, "from_facets: negative ground size");
    }
    bool any_nonempty = false;
    for (Face& f : candidates) {
        check_labels(ground_size, f, "from_facets");
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        any_nonempty |= !f.empty();
    }
    if (!any_nonempty) {
        raise(ErrorCode::empty_input, "from_facets: no nonempty facet candidate");
    }

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    std::vector<Face> kept;
    for (const Face& f : candidates) {
        const bool dominated = std::any_of(
            candidates.begin(), candidates.end(), [&](const Face& other) {
                return other.size() > f.size() &&
                       std::includes(other.begin(), other.end(), f.begin(), f.end());
            });
        if (!dominated) {
            kept.push_back(f);
        }
    }
    return SimplicialComplex(ground_size, std::move(kept));
}

int SimplicialComplex::dimension() const {
    std::size_t largest = 0;
    for (const Face& f : facets_) {
        largest = std::max(largest, f.size());
    }
    return static_cast<int>(largest) - 1;
}

bool SimplicialComplex::pure() const {
    for (const Face& f : facets_) {
        if (f.size() != facets_.front().size()) {
            return false;
        }
    }
    return true;
}

std::vector<int> SimplicialComplex::unused_elements() const {
    std::vector<bool> used(static_cast<std::size_t>(ground_size_) + 1, false);
    for (const Face& f : facets_) {
        for (int label : f) {
            used[static_cast<std::size_t>(label)] = true;
        }
    }
    std::vector<int> out;
    for (int label = 1; label <= ground_size_; ++label) {
        if (!used[static_cast<std::size_t>(label)]) {
            out.push_back(label);
        }
    }
    return out;
}

SimplicialComplex spanning_complex(const Graph& g) {
    SpanningTreeSet trees = enumerate_spanning_trees(g);
    return SimplicialComplex::from_facets(trees.ground_size, std::move(trees.trees));
}

bool contains_face(const SimplicialComplex& c, const Face& f) {
    check_labels(c.ground_size(), f, "contains_face");
    Face probe = f;
    std::sort(probe.begin(), probe.end());
    probe.erase(std::unique(probe.begin(), probe.end()), probe.end());
    return std::any_of(c.facets().begin(), c.facets().end(), [&](const Face& facet) {
        return std::includes(facet.begin(), facet.end(), probe.begin(), probe.end());
    });
}

std::vector<Face> faces_of_dim(const SimplicialComplex& c, int dim) {
    if (dim < -1) {
        raise(ErrorCode::invalid_argument, "faces_of_dim: dimension below -1");
    }
    if (dim == -1) {
        return {Face{}};
    }
    const auto closure = face_closure(c, "faces_of_dim");
    std::vector<Face> out;
    for (std::uint32_t mask : closure) {
        if (std::popcount(mask) == dim + 1) {
            out.push_back(from_mask(mask));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FVector f_vector(const SimplicialComplex& c) {
    const auto closure = face_closure(c, "f_vector");
    const int d = c.dimension();
    std::vector<BigInt> entries(static_cast<std::size_t>(d) + 1, BigInt(0));
    for (std::uint32_t mask : closure) {
        const int size = std::popcount(mask);
        if (size > 0) {
            entries[static_cast<std::size_t>(size - 1)] += 1;
        }
    }
    FVector f{std::move(entries)};
    validate_f_vector(f, c.ground_size());
    return f;
}

void validate_f_vector(const FVector& f, int ground_size) {
    const int d = f.dimension();
    for (int i = 0; i <= d; ++i) {
        if (f.entries[static_cast<std::size_t>(i)] < 1) {
            throw std::logic_error("f-vector: level " + std::to_string(i) + " is empty");
        }
    }
    // a full level forces all lower levels full
    for (int t = d; t >= 1; --t) {
        if (f.entries[static_cast<std::size_t>(t)] == binom(ground_size, t + 1)) {
            for (int i = 0; i < t; ++i) {
                if (f.entries[static_cast<std::size_t>(i)] != binom(ground_size, i + 1)) {
                    throw std::logic_error(
                        "f-vector: level " + std::to_string(t) +
                        " is full but level " + std::to_string(i) + " is not");
                }
            }
            break;
        }
    }
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
    check_ground_guard(c.ground_size(), "minimal_nonfaces");
    const std::uint32_t full =
        c.ground_size() == 0 ? 0
                             : (std::uint32_t{1} << c.ground_size()) - 1;

    // S is a non-face iff it meets every facet complement, so the minimal
    // non-faces are the minimal transversals of those complements.
    std::vector<std::uint32_t> complements;
    for (std::uint32_t facet : facet_masks(c)) {
        complements.push_back(full & ~facet);
    }

    auto minimalize = [](std::vector<std::uint32_t>& sets) {
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        std::vector<std::uint32_t> kept;
        for (std::uint32_t s : sets) {
            const bool has_subset =
                std::any_of(kept.begin(), kept.end(),
                            [&](std::uint32_t t) { return (t & ~s) == 0; });
            if (!has_subset) {
                kept.push_back(s);
            }
        }
        sets = std::move(kept);
    };

    std::vector<std::uint32_t> transversals{0};
    for (std::uint32_t complement : complements) {
        if (complement == 0) {
            return {}; // a facet covers the whole ground set: full simplex
        }
        std::vector<std::uint32_t> next;
        for (std::uint32_t t : transversals) {
            if ((t & complement) != 0) {
                next.push_back(t);
                continue;
            }
            std::uint32_t rest = complement;
            while (rest != 0) {
                const std::uint32_t bit = rest & (~rest + 1);
                rest &= rest - 1;
                next.push_back(t | bit);
            }
        }
        minimalize(next);
        transversals = std::move(next);
    }

    std::vector<Face> out;
    out.reserve(transversals.size());
    for (std::uint32_t mask : transversals) {
        out.push_back(from_mask(mask));
    }
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

std::optional<ShiftViolation> shifted_violation(const SimplicialComplex& c) {
    const auto closure = face_closure(c, "is_shifted");
    std::vector<Face> faces;
    faces.reserve(closure.size());
    for (std::uint32_t mask : closure) {
        faces.push_back(from_mask(mask));
    }
    std::sort(faces.begin(), faces.end(), face_order);

    const int ground = c.ground_size();
    for (const Face& face : faces) {
        const std::uint32_t mask = to_mask(face);
        for (int i : face) {
            for (int j = i + 1; j <= ground; ++j) {
                const std::uint32_t jbit = std::uint32_t{1} << (j - 1);
                if ((mask & jbit) != 0) {
                    continue; // j already in the face: holds by closure
                }
                const std::uint32_t swapped =
                    (mask ^ (std::uint32_t{1} << (i - 1))) | jbit;
                if (!closure.contains(swapped)) {
                    return ShiftViolation{face, i, j};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_shifted(const SimplicialComplex& c) {
    return !shifted_violation(c).has_value();
}

namespace {

std::vector<std::uint32_t> ordered_facet_masks(const SimplicialComplex& c,
                                               const std::vector<int>& order) {
    if (!c.pure()) {
        raise(ErrorCode::not_pure, "shelling: complex is not pure");
    }
    const std::size_t q = c.facets().size();
    if (order.size() != q) {
        raise(ErrorCode::not_permutation,
              "shelling: order has " + std::to_string(order.size()) + " entries for " +
                  std::to_string(q) + " facets");
    }
    std::vector<bool> seen(q, false);
    for (int index : order) {
        if (index < 0 || static_cast<std::size_t>(index) >= q ||
            seen[static_cast<std::size_t>(index)]) {
            raise(ErrorCode::not_permutation,
                  "shelling: order is not a permutation of the facet indices");
        }
        seen[static_cast<std::size_t>(index)] = true;
    }
    const auto masks = facet_masks(c);
    std::vector<std::uint32_t> ordered;
    ordered.reserve(q);
    for (int index : order) {
        ordered.push_back(masks[static_cast<std::size_t>(index)]);
    }
    return ordered;
}

// Can `candidate` extend the prefix? The witness condition (some l with
// |candidate \ F_l| = 1 and candidate n F_j inside candidate n F_l) holds
// for F_j exactly when some x in candidate \ F_j has candidate \ {x}
// covered by an earlier facet, so two linear passes suffice.
bool extends_shelling(const std::vector<std::uint32_t>& prefix,
                      std::uint32_t candidate) {
    std::uint32_t droppable = 0;
    for (std::uint32_t fl : prefix) {
        const std::uint32_t diff = candidate & ~fl;
        if (std::popcount(diff) == 1) {
            droppable |= diff;
        }
    }
    for (std::uint32_t fj : prefix) {
        if ((droppable & ~fj) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

bool is_shelling_order(const SimplicialComplex& c, const std::vector<int>& order) {
    const auto masks = ordered_facet_masks(c, order);
    std::vector<std::uint32_t> prefix;
    for (std::uint32_t mask : masks) {
        if (!prefix.empty() && !extends_shelling(prefix, mask)) {
            return false;
        }
        prefix.push_back(mask);
    }
    return true;
}

bool is_shelling_order_pure_intersection(const SimplicialComplex& c,
                                         const std::vector<int>& order) {
    const auto masks = ordered_facet_masks(c, order);
    const int facet_size = static_cast<int>(c.facets().front().size());
    for (std::size_t k = 1; k < masks.size(); ++k) {
        std::vector<std::uint32_t> intersections;
        for (std::size_t j = 0; j < k; ++j) {
            intersections.push_back(masks[k] & masks[j]);
        }
        std::sort(intersections.begin(), intersections.end());
        intersections.erase(std::unique(intersections.begin(), intersections.end()),
                            intersections.end());
        // every maximal intersection must have codimension 1 in F_k
        for (std::uint32_t s : intersections) {
            const bool maximal = std::none_of(
                intersections.begin(), intersections.end(), [&](std::uint32_t t) {
                    return t != s && (s & ~t) == 0;
                });
            if (maximal && std::popcount(s) != facet_size - 1) {
                return false;
            }
        }
    }
    return true;
}

ShellingSearch find_shelling_order(const SimplicialComplex& c) {
    if (!c.pure()) {
        raise(ErrorCode::not_pure, "find_shelling_order: complex is not pure");
    }
    const int q = c.facet_count();
    std::vector<int> order(static_cast<std::size_t>(q));
    std::iota(order.begin(), order.end(), 0);

    if (q <= kExhaustiveShellingFacets) {
        do {
            if (is_shelling_order(c, order)) {
                return {ShellabilityStatus::found, order};
            }
        } while (std::next_permutation(order.begin(), order.end()));
        return {ShellabilityStatus::not_shellable, {}};
    }

    // Greedy: keep appending the first facet that extends the prefix. Failure
    // proves nothing.
    const auto masks = facet_masks(c);
    std::vector<bool> used(static_cast<std::size_t>(q), false);
    std::vector<std::uint32_t> prefix;
    std::vector<int> chosen;
    for (int step = 0; step < q; ++step) {
        int picked = -1;
        for (int i = 0; i < q; ++i) {
            if (used[static_cast<std::size_t>(i)]) {
                continue;
            }
            if (prefix.empty() ||
                extends_shelling(prefix, masks[static_cast<std::size_t>(i)])) {
                picked = i;
                break;
            }
        }
        if (picked < 0) {
            return {ShellabilityStatus::unknown, {}};
        }
        used[static_cast<std::size_t>(picked)] = true;
        prefix.push_back(masks[static_cast<std::size_t>(picked)]);
        chosen.push_back(picked);
    }
    return {ShellabilityStatus::found, chosen};
}

} // namespace spancom
