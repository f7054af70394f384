#include "spancom/unicyclic_formulas.hpp"

namespace spancom {

namespace {

void check_params(const UnicyclicParams& p, const char* who) {
    if (p.m < 3 || p.m > p.n) {
        raise(ErrorCode::bad_params,
              std::string(who) + ": need 3 <= m <= n, got m = " + std::to_string(p.m) +
                  ", n = " + std::to_string(p.n));
    }
}

} // namespace

FVector f_closed(const UnicyclicParams& p) {
    check_params(p, "f_closed");
    const int n = p.n;
    const int m = p.m;
    // Faces are the edge subsets avoiding the cycle; the correction term is
    // zero until the subset is large enough to contain it.
    std::vector<BigInt> entries(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i <= n - 2; ++i) {
        entries[static_cast<std::size_t>(i)] = binom(n, i + 1) - binom(n - m, i - m + 1);
    }
    FVector f{std::move(entries)};
    validate_f_vector(f, n);
    return f;
}

HVector h_closed(const UnicyclicParams& p) {
    check_params(p, "h_closed");
    const int n = p.n;
    const int m = p.m;
    std::vector<BigInt> h(static_cast<std::size_t>(n));
    for (int k = 0; k <= n - 1; ++k) {
        BigInt sum = 0;
        for (int i = 0; i <= k; ++i) {
            const BigInt f_prev = binom(n, i) - binom(n - m, i - m);
            const BigInt term = binom(n - 1 - i, k - i) * f_prev;
            if ((k - i) % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        h[static_cast<std::size_t>(k)] = sum;
    }
    return HVector{std::move(h)};
}

HilbertSeries hilbert_closed(const UnicyclicParams& p) {
    check_params(p, "hilbert_closed");
    const int n = p.n;
    const int m = p.m;
    // Assemble from the per-range face counts (full levels up to m-2, the
    // corrected tail above) rather than reusing the merged f_closed entries.
    std::vector<BigInt> counts(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i <= m - 2; ++i) {
        counts[static_cast<std::size_t>(i)] = binom(n, i + 1);
    }
    for (int i = m - 1; i <= n - 2; ++i) {
        counts[static_cast<std::size_t>(i)] = binom(n, i + 1) - binom(n - m, i - m + 1);
    }
    return series_from_f(FVector{std::move(counts)});
}

} // namespace spancom
