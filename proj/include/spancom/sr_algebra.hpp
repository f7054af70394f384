#pragma once

#include <vector>

#include "spancom/bigint.hpp"
#include "spancom/simplicial.hpp"

namespace spancom {

// Dense integer polynomial, coefficient of t^i at index i. Kept trimmed:
// a zero polynomial has no coefficients.
struct Polynomial {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    BigInt eval_one() const;
    void trim();

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial one_minus_t_power(int exponent);          // (1-t)^e
Polynomial divexact_one_minus_t(const Polynomial& p); // requires p(1) == 0

struct HVector {
    // h_0..h_r; the raw transform output carries indices up to d+1 and may
    // end in zeros.
    std::vector<BigInt> entries;

    // Strips trailing zeros so that h(1) != 0 (ZeroNumerator when the whole
    // vector vanishes).
    HVector normalized() const;
    BigInt sum() const;

    friend bool operator==(const HVector&, const HVector&) = default;
};

struct HilbertSeries {
    Polynomial numerator;
    int pole_order = 0; // D in numerator / (1-t)^D

    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

// f -> h transform for a d-dimensional complex, raw indices 0..d+1:
//   h_k = sum_{i=0}^{k} (-1)^{k-i} C(d+1-i, k-i) f_{i-1},   f_{-1} = 1.
HVector h_from_f(const FVector& f, int d);

// Exact rational function 1 + sum_i f_i t^{i+1}/(1-t)^{i+1}, assembled over
// the common denominator (1-t)^{d+1} and then normalized.
HilbertSeries series_from_f(const FVector& f);

// Cancels (1-t) factors while numerator(1) == 0 (and pole_order > 0),
// decrementing pole_order each time.
HilbertSeries normalize(HilbertSeries series);

// Independent counting oracle for dim_k k[Delta]_j: the number of degree-j
// monomials whose support is a face, accumulated face by face
// (stars-and-bars: C(j-1, |F|-1) monomials per nonempty face F).
BigInt hilbert_function_direct(const SimplicialComplex& c, int degree);

// Coefficients of t^0..t^J of numerator * sum_j C(j+D-1, D-1) t^j.
std::vector<BigInt> expand_series(const HilbertSeries& series, int max_degree);

} // namespace spancom
