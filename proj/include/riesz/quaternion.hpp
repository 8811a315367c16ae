#pragma once

#include <cmath>

namespace riesz {

/// Quaternion on the basis {1, e1, e2, e3} with e1*e2 = e3 = -e2*e1.
struct Quaternion {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double s, double x, double y, double z)
        : a0(s), a1(x), a2(y), a3(z) {}

    constexpr Quaternion operator+(const Quaternion& b) const {
        return {a0 + b.a0, a1 + b.a1, a2 + b.a2, a3 + b.a3};
    }
    constexpr Quaternion operator-(const Quaternion& b) const {
        return {a0 - b.a0, a1 - b.a1, a2 - b.a2, a3 - b.a3};
    }
    constexpr Quaternion operator-() const { return {-a0, -a1, -a2, -a3}; }
    constexpr Quaternion operator*(double s) const {
        return {a0 * s, a1 * s, a2 * s, a3 * s};
    }
    constexpr Quaternion operator/(double s) const {
        return {a0 / s, a1 / s, a2 / s, a3 / s};
    }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

/// Hamilton product under the multiplication table
///   e1^2 = e2^2 = e3^2 = -1, e1 e2 = e3, e2 e3 = e1, e3 e1 = e2.
constexpr Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
    return {a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3,
            a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2,
            a.a0 * b.a2 - a.a1 * b.a3 + a.a2 * b.a0 + a.a3 * b.a1,
            a.a0 * b.a3 + a.a1 * b.a2 - a.a2 * b.a1 + a.a3 * b.a0};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return quat_mul(a, b);
}

constexpr double sc(const Quaternion& q) { return q.a0; }
constexpr Quaternion vec(const Quaternion& q) { return {0.0, q.a1, q.a2, q.a3}; }
constexpr Quaternion conj(const Quaternion& q) { return {q.a0, -q.a1, -q.a2, -q.a3}; }

inline double norm(const Quaternion& q) {
    return std::sqrt(q.a0 * q.a0 + q.a1 * q.a1 + q.a2 * q.a2 + q.a3 * q.a3);
}

inline constexpr Quaternion kQuatOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kE1{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kE2{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kE3{0.0, 0.0, 0.0, 1.0};

/// Element of A = span{1, e1, e2}; doubles as a point of R^3.
/// A is a real subspace of H, not a subalgebra: products of reduced
/// quaternions are formed through the Quaternion embedding.
struct ReducedQuaternion {
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;

    constexpr ReducedQuaternion() = default;
    constexpr ReducedQuaternion(double s, double x, double y)
        : x0(s), x1(x), x2(y) {}

    constexpr ReducedQuaternion operator+(const ReducedQuaternion& b) const {
        return {x0 + b.x0, x1 + b.x1, x2 + b.x2};
    }
    constexpr ReducedQuaternion operator-(const ReducedQuaternion& b) const {
        return {x0 - b.x0, x1 - b.x1, x2 - b.x2};
    }
    constexpr ReducedQuaternion operator-() const { return {-x0, -x1, -x2}; }
    constexpr ReducedQuaternion operator*(double s) const {
        return {x0 * s, x1 * s, x2 * s};
    }
    constexpr ReducedQuaternion operator/(double s) const {
        return {x0 / s, x1 / s, x2 / s};
    }
    constexpr ReducedQuaternion& operator+=(const ReducedQuaternion& b) {
        x0 += b.x0;
        x1 += b.x1;
        x2 += b.x2;
        return *this;
    }

    constexpr operator Quaternion() const { return {x0, x1, x2, 0.0}; }
};

constexpr ReducedQuaternion operator*(double s, const ReducedQuaternion& x) {
    return x * s;
}

using Point3 = ReducedQuaternion;

constexpr double sc(const ReducedQuaternion& x) { return x.x0; }
constexpr ReducedQuaternion vec(const ReducedQuaternion& x) {
    return {0.0, x.x1, x.x2};
}
constexpr ReducedQuaternion conj(const ReducedQuaternion& x) {
    return {x.x0, -x.x1, -x.x2};
}

inline double norm(const ReducedQuaternion& x) {
    return std::sqrt(x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2);
}

constexpr double norm_sq(const ReducedQuaternion& x) {
    return x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2;
}

/// Sc(conj(a) b); the pointwise integrand of the real L2 inner product.
/// For A-valued arguments it reduces to the Euclidean dot product.
constexpr double sc_dot(const ReducedQuaternion& a, const ReducedQuaternion& b) {
    return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2;
}

}  // namespace riesz
