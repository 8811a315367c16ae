#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "riesz/quaternion.hpp"
#include "riesz/special_functions.hpp"

namespace riesz {

enum class Family { X, Y };

inline char family_char(Family f) { return f == Family::X ? 'X' : 'Y'; }

/// Address of one homogeneous monogenic polynomial: family X or Y,
/// degree n, order m. Valid ranges: X with 0 <= m <= n+1, Y with
/// 1 <= m <= n+1. The order m = n+1 marks the hyperholomorphic constants.
struct BasisIndex {
    Family family = Family::X;
    int n = 0;
    int m = 0;

    bool operator==(const BasisIndex&) const = default;

    bool valid() const {
        if (n < 0 || m > n + 1) return false;
        return family == Family::X ? m >= 0 : m >= 1;
    }
    bool is_hyperholomorphic_constant() const { return m == n + 1; }
};

inline std::string to_string(const BasisIndex& idx) {
    return std::string(1, family_char(idx.family)) + "(" +
           std::to_string(idx.n) + "," + std::to_string(idx.m) + ")";
}

inline void require_valid(const BasisIndex& idx) {
    if (!idx.valid())
        throw std::invalid_argument("invalid basis index " + to_string(idx));
}

/// Canonical enumeration of the degree-n block: X with m = 0..n+1, then
/// Y with m = 1..n+1; 2n+3 indices.
inline std::vector<BasisIndex> enumerate_basis(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_basis: n < 0");
    std::vector<BasisIndex> out;
    out.reserve(2 * n + 3);
    for (int m = 0; m <= n + 1; ++m) out.push_back({Family::X, n, m});
    for (int m = 1; m <= n + 1; ++m) out.push_back({Family::Y, n, m});
    return out;
}

/// All indices of degree <= n_max, degree blocks in order.
inline std::vector<BasisIndex> enumerate_basis_up_to(int n_max) {
    std::vector<BasisIndex> out;
    for (int n = 0; n <= n_max; ++n)
        for (const auto& idx : enumerate_basis(n)) out.push_back(idx);
    return out;
}

/// Number of indices of degree < n (flat offset of the degree-n block).
constexpr int degree_block_offset(int n) { return n * (n + 2); }

/// Number of indices of degree <= n_max.
constexpr int basis_count(int n_max) { return (n_max + 1) * (n_max + 3); }

/// Position of idx in the canonical flat enumeration.
inline int flat_index(const BasisIndex& idx) {
    require_valid(idx);
    const int base = degree_block_offset(idx.n);
    return idx.family == Family::X ? base + idx.m
                                   : base + (idx.n + 2) + (idx.m - 1);
}

/// Spherical coordinates of a point of R^3: cos(theta) = x0/|x|,
/// (x1, x2) = rho (cos phi, sin phi) with rho = r sin(theta).
struct SphericalPoint {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;

    static SphericalPoint from_point(const Point3& p) {
        SphericalPoint s;
        s.r = norm(p);
        if (s.r == 0.0) return s;
        const double t = std::clamp(p.x0 / s.r, -1.0, 1.0);
        s.theta = std::acos(t);
        s.phi = std::atan2(p.x2, p.x1);
        return s;
    }

    Point3 to_point() const {
        const double st = std::sin(theta);
        return {r * std::cos(theta), r * st * std::cos(phi),
                r * st * std::sin(phi)};
    }
};

namespace detail {

inline double pow_int(double x, int n) {
    double acc = 1.0;
    for (int k = 0; k < n; ++k) acc *= x;
    return acc;
}

/// Angular assembly of X_n^l from Legendre values at t = cos(theta).
/// The radial factor r^n is applied by the caller.
inline ReducedQuaternion assemble_x(int n, int l, double p_l, double p_lp1,
                                    double p_lm1, double phi) {
    double sc_part = 0.5 * (n + l + 1) * p_l * cheb_cos(l, phi);
    double e1_part = 0.25 * p_lp1 * cheb_cos(l + 1, phi);
    double e2_part = 0.25 * p_lp1 * cheb_sin(l + 1, phi);
    const double c = static_cast<double>(n + l + 1) * (n + l);
    if (c != 0.0) {
        e1_part -= 0.25 * c * p_lm1 * cheb_cos(l - 1, phi);
        e2_part += 0.25 * c * p_lm1 * cheb_sin(l - 1, phi);
    }
    return {sc_part, e1_part, e2_part};
}

/// Angular assembly of Y_n^m; mirrors assemble_x with the sine-led scalar
/// part and the sign conventions of the Y display.
inline ReducedQuaternion assemble_y(int n, int m, double p_m, double p_mp1,
                                    double p_mm1, double phi) {
    double sc_part = 0.5 * (n + m + 1) * p_m * cheb_sin(m, phi);
    double e1_part = 0.25 * p_mp1 * cheb_sin(m + 1, phi);
    double e2_part = -0.25 * p_mp1 * cheb_cos(m + 1, phi);
    const double c = static_cast<double>(n + m + 1) * (n + m);
    if (c != 0.0) {
        e1_part -= 0.25 * c * p_mm1 * cheb_sin(m - 1, phi);
        e2_part -= 0.25 * c * p_mm1 * cheb_cos(m - 1, phi);
    }
    return {sc_part, e1_part, e2_part};
}

}  // namespace detail

/// Value of the (unnormalized) basis polynomial at p. On the x0-axis the
/// angular factors are evaluated at phi = 0, which realizes the polynomial
/// limit; at p = 0 the value is 0 for n >= 1 and the constant for n = 0.
inline ReducedQuaternion eval_basis(const BasisIndex& idx, const Point3& p,
                                    LegendreConvention conv = {}) {
    require_valid(idx);
    const int n = idx.n;
    const int m = idx.m;
    const double r = norm(p);
    if (r == 0.0 && n >= 1) return {};

    double t = 1.0;
    double phi = 0.0;
    if (r > 0.0) {
        t = std::clamp(p.x0 / r, -1.0, 1.0);
        phi = std::atan2(p.x2, p.x1);
    }
    const double rn = detail::pow_int(r, n);

    const double p_m = legendre_p(n, m, t, conv);
    const double p_mp1 = legendre_p(n, m + 1, t, conv);
    // the (n+m+1)(n+m)-weighted term vanishes identically at n = 0, m = 0;
    // P_0^{-1} must not be touched in that case
    const double c = static_cast<double>(n + m + 1) * (n + m);
    const double p_mm1 = (c != 0.0) ? legendre_p(n, m - 1, t, conv) : 0.0;

    const ReducedQuaternion ang =
        idx.family == Family::X
            ? detail::assemble_x(n, m, p_m, p_mp1, p_mm1, phi)
            : detail::assemble_y(n, m, p_m, p_mp1, p_mm1, phi);
    return ang * rn;
}

/// Right-hand side of the pointwise modulus estimate at |x| = r:
///   (1/2)(n+1) sqrt((n+1+m)!/(n+1-m)!) r^n,
/// the same expression for both families.
inline double pointwise_bound(const BasisIndex& idx, double r) {
    require_valid(idx);
    return 0.5 * (idx.n + 1) * std::sqrt(factorial_ratio(idx.n, idx.m)) *
           detail::pow_int(r, idx.n);
}

/// Image of one basis polynomial under the hypercomplex derivative
/// (1/2 Dbar): a scalar multiple of the basis polynomial one degree down.
struct HyperderivativeImage {
    double factor = 0.0;
    BasisIndex lower;
};

/// Exact hypercomplex derivative: for m <= n it is (n+m+1) times the
/// same-family index (n-1, m); hyperholomorphic constants (m = n+1) and
/// the degree-0 elements map to zero (nullopt).
inline std::optional<HyperderivativeImage> exact_hyperderivative(
    const BasisIndex& idx) {
    require_valid(idx);
    if (idx.n == 0 || idx.is_hyperholomorphic_constant()) return std::nullopt;
    return HyperderivativeImage{static_cast<double>(idx.n + idx.m + 1),
                                {idx.family, idx.n - 1, idx.m}};
}

/// Evaluates every basis polynomial of degree <= n_max at one point in the
/// canonical flat order. One Legendre table and one trig sweep are shared
/// across the whole block, which is what the quadrature loops need.
class BasisBatchEvaluator {
public:
    explicit BasisBatchEvaluator(int n_max, LegendreConvention conv = {})
        : n_max_(n_max),
          conv_(conv),
          cos_table_(n_max + 3),
          sin_table_(n_max + 3),
          powers_(n_max + 1) {
        if (n_max < 0) throw std::invalid_argument("BasisBatchEvaluator: n_max < 0");
    }

    int n_max() const { return n_max_; }

    /// Values in canonical order (size basis_count(n_max)).
    void eval(const Point3& p, std::vector<ReducedQuaternion>& out) {
        out.assign(basis_count(n_max_), ReducedQuaternion{});
        const double r = norm(p);
        double t = 1.0;
        double phi = 0.0;
        if (r > 0.0) {
            t = std::clamp(p.x0 / r, -1.0, 1.0);
            phi = std::atan2(p.x2, p.x1);
        }
        const LegendreTable leg(n_max_ + 2, t, conv_);
        for (int k = 0; k < n_max_ + 3; ++k) {
            cos_table_[k] = std::cos(k * phi);
            sin_table_[k] = std::sin(k * phi);
        }
        powers_[0] = 1.0;
        for (int n = 1; n <= n_max_; ++n) powers_[n] = powers_[n - 1] * r;

        for (int n = 0; n <= n_max_; ++n) {
            const double rn = powers_[n];
            if (r == 0.0 && n >= 1) continue;
            const int base = degree_block_offset(n);
            for (int m = 0; m <= n + 1; ++m) {
                const double c = static_cast<double>(n + m + 1) * (n + m);
                const double p_mm1 = (c != 0.0) ? leg_at(leg, n, m - 1) : 0.0;
                const ReducedQuaternion ang = assemble(
                    n, m, leg_at(leg, n, m), leg_at(leg, n, m + 1), p_mm1);
                out[base + m] = ang * rn;
                if (m >= 1) {
                    const ReducedQuaternion angy = assemble_y_cached(
                        n, m, leg_at(leg, n, m), leg_at(leg, n, m + 1), p_mm1);
                    out[base + (n + 2) + (m - 1)] = angy * rn;
                }
            }
        }
    }

    std::vector<ReducedQuaternion> eval(const Point3& p) {
        std::vector<ReducedQuaternion> out;
        eval(p, out);
        return out;
    }

private:
    static double leg_at(const LegendreTable& leg, int n, int l) {
        return leg(n, l);
    }

    ReducedQuaternion assemble(int n, int m, double p_m, double p_mp1,
                               double p_mm1) const {
        double sc_part = 0.5 * (n + m + 1) * p_m * cos_k(m);
        double e1_part = 0.25 * p_mp1 * cos_k(m + 1);
        double e2_part = 0.25 * p_mp1 * sin_k(m + 1);
        const double c = static_cast<double>(n + m + 1) * (n + m);
        if (c != 0.0) {
            e1_part -= 0.25 * c * p_mm1 * cos_k(m - 1);
            e2_part += 0.25 * c * p_mm1 * sin_k(m - 1);
        }
        return {sc_part, e1_part, e2_part};
    }

    ReducedQuaternion assemble_y_cached(int n, int m, double p_m, double p_mp1,
                                        double p_mm1) const {
        double sc_part = 0.5 * (n + m + 1) * p_m * sin_k(m);
        double e1_part = 0.25 * p_mp1 * sin_k(m + 1);
        double e2_part = -0.25 * p_mp1 * cos_k(m + 1);
        const double c = static_cast<double>(n + m + 1) * (n + m);
        if (c != 0.0) {
            e1_part -= 0.25 * c * p_mm1 * sin_k(m - 1);
            e2_part -= 0.25 * c * p_mm1 * cos_k(m - 1);
        }
        return {sc_part, e1_part, e2_part};
    }

    double cos_k(int k) const { return k >= 0 ? cos_table_[k] : cos_table_[-k]; }
    double sin_k(int k) const { return k >= 0 ? sin_table_[k] : -sin_table_[-k]; }

    int n_max_;
    LegendreConvention conv_;
    std::vector<double> cos_table_;
    std::vector<double> sin_table_;
    std::vector<double> powers_;
};

}  // namespace riesz
