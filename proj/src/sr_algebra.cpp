#include "spancom/sr_algebra.hpp"

#include <algorithm>

namespace spancom {

BigInt Polynomial::eval_one() const {
    BigInt sum = 0;
    for (const BigInt& c : coeffs) {
        sum += c;
    }
    return sum;
}

void Polynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) {
        coeffs.pop_back();
    }
}

Polynomial one_minus_t_power(int exponent) {
    if (exponent < 0) {
        raise(ErrorCode::invalid_argument, "one_minus_t_power: negative exponent");
    }
    Polynomial p;
    p.coeffs.resize(static_cast<std::size_t>(exponent) + 1);
    for (int i = 0; i <= exponent; ++i) {
        BigInt c = binom(exponent, i);
        p.coeffs[static_cast<std::size_t>(i)] = (i % 2 == 0) ? c : -c;
    }
    return p;
}

Polynomial divexact_one_minus_t(const Polynomial& p) {
    if (p.eval_one() != 0) {
        raise(ErrorCode::internal_error,
              "divexact_one_minus_t: polynomial is not divisible by 1-t");
    }
    // p = (1-t) q gives q_i = p_0 + ... + p_i.
    Polynomial q;
    if (p.degree() < 1) {
        return q; // the zero polynomial
    }
    q.coeffs.resize(static_cast<std::size_t>(p.degree()));
    BigInt running = 0;
    for (int i = 0; i < p.degree(); ++i) {
        running += p.coeffs[static_cast<std::size_t>(i)];
        q.coeffs[static_cast<std::size_t>(i)] = running;
    }
    q.trim();
    return q;
}

HVector HVector::normalized() const {
    std::vector<BigInt> out = entries;
    while (!out.empty() && out.back() == 0) {
        out.pop_back();
    }
    if (out.empty()) {
        raise(ErrorCode::zero_numerator, "h-vector: all entries vanish");
    }
    return HVector{std::move(out)};
}

BigInt HVector::sum() const {
    BigInt total = 0;
    for (const BigInt& h : entries) {
        total += h;
    }
    return total;
}

HVector h_from_f(const FVector& f, int d) {
    if (f.dimension() != d) {
        raise(ErrorCode::invalid_argument,
              "h_from_f: f-vector has dimension " + std::to_string(f.dimension()) +
                  ", expected " + std::to_string(d));
    }
    auto f_at = [&](int i) -> BigInt {
        return i < 0 ? BigInt(1) : f.entries[static_cast<std::size_t>(i)];
    };
    std::vector<BigInt> h(static_cast<std::size_t>(d) + 2);
    for (int k = 0; k <= d + 1; ++k) {
        BigInt sum = 0;
        for (int i = 0; i <= k; ++i) {
            const BigInt term = binom(d + 1 - i, k - i) * f_at(i - 1);
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

HilbertSeries series_from_f(const FVector& f) {
    const int d = f.dimension();
    // 1/(1)^0 contributes (1-t)^{d+1}; dimension i contributes
    // f_i t^{i+1} (1-t)^{d-i}, all over the common pole (1-t)^{d+1}.
    Polynomial numerator = one_minus_t_power(d + 1);
    numerator.coeffs.resize(static_cast<std::size_t>(d) + 2);
    for (int i = 0; i <= d; ++i) {
        const Polynomial factor = one_minus_t_power(d - i);
        for (int j = 0; j <= d - i; ++j) {
            numerator.coeffs[static_cast<std::size_t>(i + 1 + j)] +=
                f.entries[static_cast<std::size_t>(i)] *
                factor.coeffs[static_cast<std::size_t>(j)];
        }
    }
    numerator.trim();
    return normalize(HilbertSeries{std::move(numerator), d + 1});
}

HilbertSeries normalize(HilbertSeries series) {
    series.numerator.trim();
    if (series.numerator.is_zero()) {
        raise(ErrorCode::zero_numerator, "normalize: numerator is identically zero");
    }
    while (series.pole_order > 0 && series.numerator.eval_one() == 0) {
        series.numerator = divexact_one_minus_t(series.numerator);
        --series.pole_order;
    }
    return series;
}

BigInt hilbert_function_direct(const SimplicialComplex& c, int degree) {
    if (degree < 0) {
        raise(ErrorCode::invalid_argument, "hilbert_function_direct: negative degree");
    }
    if (degree == 0) {
        return 1;
    }
    // Count monomials of the given degree face by face: a nonempty face F
    // supports exactly C(degree-1, |F|-1) of them.
    BigInt total = 0;
    for (int dim = 0; dim <= c.dimension(); ++dim) {
        for (const Face& face : faces_of_dim(c, dim)) {
            total += binom(degree - 1, static_cast<int>(face.size()) - 1);
        }
    }
    return total;
}

std::vector<BigInt> expand_series(const HilbertSeries& series, int max_degree) {
    if (max_degree < 0) {
        raise(ErrorCode::invalid_argument, "expand_series: negative degree bound");
    }
    const int pole = series.pole_order;
    const auto& num = series.numerator.coeffs;
    std::vector<BigInt> out(static_cast<std::size_t>(max_degree) + 1, BigInt(0));
    for (int j = 0; j <= max_degree; ++j) {
        if (pole == 0) {
            if (j <= series.numerator.degree()) {
                out[static_cast<std::size_t>(j)] = num[static_cast<std::size_t>(j)];
            }
            continue;
        }
        BigInt sum = 0;
        const int top = std::min(j, series.numerator.degree());
        for (int k = 0; k <= top; ++k) {
            sum += num[static_cast<std::size_t>(k)] * binom(j - k + pole - 1, pole - 1);
        }
        out[static_cast<std::size_t>(j)] = sum;
    }
    return out;
}

} // namespace spancom
