#pragma once

#include <optional>
#include <vector>

#include "spancom/bigint.hpp"
#include "spancom/graph.hpp"
#include "spancom/spanning_trees.hpp"

namespace spancom {

// A face is a sorted, duplicate-free list of ground labels from [N].
// The empty face {} has dimension -1.
using Face = std::vector<int>;

// Facet-list simplicial complex over the labeled ground set [N].
// Facets are mutually incomparable under inclusion and kept in lex order.
class SimplicialComplex {
public:
    // Drops dominated candidates (subsets of others) and duplicates. Input
    // labels must lie in [1, ground_size] and at least one candidate must be
    // nonempty.
    static SimplicialComplex from_facets(int ground_size, std::vector<Face> candidates);

    int ground_size() const { return ground_size_; }
    const std::vector<Face>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }
    int dimension() const; // max facet size - 1
    bool pure() const;     // all facets of equal size

    // Ground labels appearing in no facet. The type allows them; spanning
    // complexes never produce any.
    std::vector<int> unused_elements() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int ground_size, std::vector<Face> facets);

    int ground_size_;
    std::vector<Face> facets_;
};

// The complex on the edge labels of g whose facets are the spanning trees.
SimplicialComplex spanning_complex(const Graph& g);

// True iff f is a subset of some facet; the empty face is always contained.
bool contains_face(const SimplicialComplex& c, const Face& f);

// All faces of the given dimension, sorted lex; dim = -1 yields { {} }.
std::vector<Face> faces_of_dim(const SimplicialComplex& c, int dim);

struct FVector {
    std::vector<BigInt> entries; // entries[i] = number of i-dimensional faces

    int dimension() const { return static_cast<int>(entries.size()) - 1; }

    friend bool operator==(const FVector&, const FVector&) = default;
};

FVector f_vector(const SimplicialComplex& c);

// Internal consistency check run on every computed f-vector: a full level
// f_t = C(N, t+1) forces full levels below it. Violations are bugs.
void validate_f_vector(const FVector& f, int ground_size);

// Inclusion-minimal non-faces (the exponent sets of the squarefree monomials
// generating the Stanley-Reisner ideal), sorted by size then lex.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c);

struct ShiftViolation {
    Face face;
    int removed = 0; // i in the face
    int added = 0;   // j > removed with j not in the face

    friend bool operator==(const ShiftViolation&, const ShiftViolation&) = default;
};

// Shiftedness under the fixed labeling: for every face F, i in F and j > i
// outside F, (F \ {i}) u {j} must again be a face. Returns the first
// violation scanning faces by increasing size then lex (i, then j ascending),
// or nullopt when shifted.
std::optional<ShiftViolation> shifted_violation(const SimplicialComplex& c);
bool is_shifted(const SimplicialComplex& c);

// Shelling check for pure complexes; order holds 0-based facet indices.
// This form tests the pairwise witness condition: for each k and j < k there
// is l < k with |F_k \ F_l| = 1 and F_k n F_j contained in F_k n F_l.
bool is_shelling_order(const SimplicialComplex& c, const std::vector<int>& order);

// Equivalent formulation via the intersection subcomplex: every maximal
// intersection of F_k with an earlier facet has size |F_k| - 1.
bool is_shelling_order_pure_intersection(const SimplicialComplex& c,
                                         const std::vector<int>& order);

enum class ShellabilityStatus {
    found,         // order holds a shelling
    not_shellable, // exhaustive search ruled every order out
    unknown,       // greedy attempt failed; nothing proven
};

struct ShellingSearch {
    ShellabilityStatus status = ShellabilityStatus::unknown;
    std::vector<int> order; // valid when status == found
};

// Exhaustive over all facet permutations up to this many facets; greedy above.
inline constexpr int kExhaustiveShellingFacets = 8;

ShellingSearch find_shelling_order(const SimplicialComplex& c);

} // namespace spancom
