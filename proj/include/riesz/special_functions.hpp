#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace riesz {

/// Associated Legendre functions in the Ferrers convention, no
/// Condon-Shortley phase: P_1^1(t) = +sqrt(1-t^2).
///
/// Index conventions used throughout:
///   - P_n^0 is the Legendre polynomial P_n,
///   - P_n^{-1} := -P_n^1 / (n(n+1)),
///   - P_n^l := 0 for l >= n+1.
///
/// The phase flag exists only as a debug toggle: flipping it breaks
/// monogenicity of the basis polynomials, which the monogenicity command
/// uses as a convention detector.
struct LegendreConvention {
    bool condon_shortley_phase = false;
};

inline double legendre_p(int n, int l, double t,
                         LegendreConvention conv = {}) {
    if (n < 0 || l < -1) throw std::invalid_argument("legendre_p: bad index");
    if (n == 0 && l == -1)
        throw std::invalid_argument("legendre_p: P_0^{-1} is undefined");
    if (std::abs(t) > 1.0)
        throw std::domain_error("legendre_p: |t| > 1");
    if (l >= n + 1) return 0.0;
    if (l == -1)
        return -legendre_p(n, 1, t, conv) / (static_cast<double>(n) * (n + 1));

    // seed P_l^l = (2l-1)!! (1-t^2)^{l/2}, then recur upward in degree
    const double s2 = std::max(0.0, (1.0 - t) * (1.0 + t));
    double pll = 1.0;
    for (int k = 1; k <= l; ++k) pll *= 2 * k - 1;
    pll *= std::pow(s2, 0.5 * l);
    if (conv.condon_shortley_phase && (l & 1)) pll = -pll;
    if (n == l) return pll;

    double p_prev = pll;
    double p = (2 * l + 1) * t * pll;
    for (int k = l + 2; k <= n; ++k) {
        const double next = ((2 * k - 1) * t * p - (k - 1 + l) * p_prev) / (k - l);
        p_prev = p;
        p = next;
    }
    return p;
}

/// Table of P_n^l(t) for 0 <= n <= n_max, 0 <= l <= n, filled column-wise
/// by the same recurrences as legendre_p. Used by the batch basis
/// evaluator; entries with l > n read as zero, l = -1 via the P_n^1 rule.
class LegendreTable {
public:
    LegendreTable(int n_max, double t, LegendreConvention conv = {})
        : n_max_(n_max), values_((n_max + 1) * (n_max + 2) / 2, 0.0) {
        const double s2 = std::max(0.0, (1.0 - t) * (1.0 + t));
        double pll = 1.0;
        for (int l = 0; l <= n_max; ++l) {
            if (l > 0) {
                pll *= (2 * l - 1) * std::sqrt(s2);
                if (conv.condon_shortley_phase) pll = -pll;
            }
            at(l, l) = pll;
            if (l + 1 <= n_max) at(l + 1, l) = (2 * l + 1) * t * pll;
            for (int k = l + 2; k <= n_max; ++k) {
                at(k, l) = ((2 * k - 1) * t * at(k - 1, l) -
                            (k - 1 + l) * at(k - 2, l)) /
                           (k - l);
            }
        }
    }

    double operator()(int n, int l) const {
        if (l >= n + 1) return 0.0;
        if (l == -1) return -(*this)(n, 1) / (static_cast<double>(n) * (n + 1));
        return values_[static_cast<size_t>(n) * (n + 1) / 2 + l];
    }

    int n_max() const { return n_max_; }

private:
    double& at(int n, int l) {
        return values_[static_cast<size_t>(n) * (n + 1) / 2 + l];
    }
    int n_max_;
    std::vector<double> values_;
};

/// cos(k phi) = T_k(cos phi), valid for every integer k.
inline double cheb_cos(int k, double phi) { return std::cos(k * phi); }

/// sin(k phi) = sin(phi) U_{k-1}(cos phi), valid for every integer k.
/// The trigonometric form subsumes the negative-index Chebyshev factors
/// appearing at l = 0 (T_{l-1}, U_{l-2}) without a rho = 0 singularity.
inline double cheb_sin(int k, double phi) { return std::sin(k * phi); }

/// (n+1+l)! / (n+1-l)! for 0 <= l <= n+1, as an iterative product of the
/// 2l integers in (n+1-l, n+1+l]. Falls back to lgamma for n > 20 where
/// the product would lose headroom.
inline double factorial_ratio(int n, int l) {
    if (n < 0 || l < 0 || l > n + 1)
        throw std::invalid_argument("factorial_ratio: need 0 <= l <= n+1");
    if (l == 0) return 1.0;
    if (n > 20)
        return std::exp(std::lgamma(n + 2.0 + l) - std::lgamma(n + 2.0 - l));
    double prod = 1.0;
    for (int j = n + 2 - l; j <= n + 1 + l; ++j) prod *= j;
    return prod;
}

}  // namespace riesz
