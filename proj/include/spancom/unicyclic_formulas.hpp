#pragma once

#include "spancom/sr_algebra.hpp"

namespace spancom {

// Parameters of U_{n,m}: n vertices (= n edges), one cycle of length m.
struct UnicyclicParams {
    int n = 0;
    int m = 0; // 3 <= m <= n

    friend bool operator==(const UnicyclicParams&, const UnicyclicParams&) = default;
};

// Closed forms for Delta_s(U_{n,m}); exact for arbitrary parameters, no
// enumeration guard. The correction terms use the shared binomial convention,
// so each is a single formula across both index ranges.

// dim = n-2 and f_i = C(n, i+1) - C(n-m, i-m+1).
FVector f_closed(const UnicyclicParams& p);

// Raw h-vector, indices 0..n-1:
//   h_k = sum_{i=0}^{k} (-1)^{k-i} C(n-1-i, k-i) [C(n,i) - C(n-m, i-m)].
HVector h_closed(const UnicyclicParams& p);

// Hilbert series of k[Delta_s(U_{n,m})], assembled from the per-dimension
// face counts over (1-t)^{n-1} and normalized.
HilbertSeries hilbert_closed(const UnicyclicParams& p);

} // namespace spancom
