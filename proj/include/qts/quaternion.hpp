#pragma once

#include <cmath>
#include <ostream>

namespace qts {

struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
};

enum class EtaAxis { i, j, k };

// Hamilton product, ij = k.
constexpr Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion quat_conj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

// -eta * conj(a) * eta. For a unit axis this keeps w and the eta component
// and flips the sign of the other two, which we apply directly so that the
// involution is exact in floating point.
constexpr Quaternion quat_eta_conj(const Quaternion& a, EtaAxis eta) {
    switch (eta) {
    case EtaAxis::i: return {a.w, -a.x, a.y, a.z};
    case EtaAxis::j: return {a.w, a.x, -a.y, a.z};
    case EtaAxis::k: return {a.w, a.x, a.y, -a.z};
    }
    return a;
}

constexpr Quaternion eta_unit(EtaAxis eta) {
    switch (eta) {
    case EtaAxis::i: return {0, 1, 0, 0};
    case EtaAxis::j: return {0, 0, 1, 0};
    case EtaAxis::k: return {0, 0, 0, 1};
    }
    return {};
}

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return quat_mul(a, b); }
constexpr Quaternion operator*(double s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }

constexpr double norm2(const Quaternion& a) { return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z; }
inline double abs(const Quaternion& a) { return std::sqrt(norm2(a)); }

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = 0.0) {
    return std::abs(a.w - b.w) <= tol && std::abs(a.x - b.x) <= tol &&
           std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

char axis_name(EtaAxis eta);
EtaAxis parse_axis(char c);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

} // namespace qts
