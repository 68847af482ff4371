#pragma once

#include <Eigen/Dense>

#include "qlgraph/gain_graph.hpp"

namespace qlgraph {

/// Inputs are accepted as normalized within this distance of unit norm...
inline constexpr double kNormTolerance = 1e-10;
/// ...and renormalized when they are at most this far off; otherwise rejected.
inline constexpr double kRenormalizeTolerance = 1e-6;

struct JonesVector {
    Complex x{1.0, 0.0};
    Complex y{0.0, 0.0};
};

struct Quaternion {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;

    double norm_squared() const noexcept { return a * a + b * b + c * c + d * d; }
    Quaternion conjugate() const noexcept { return {a, -b, -c, -d}; }
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) noexcept;
    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

struct SU2Element {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();

    /// Checks unitarity and det = 1 within `tol`.
    bool is_valid(double tol = kNormTolerance) const;
    friend SU2Element operator*(const SU2Element& x, const SU2Element& y) { return {x.m * y.m}; }
};

/// Returns a copy scaled to unit norm, or throws ValidationError when the
/// input is further than kRenormalizeTolerance from unit norm.
JonesVector normalized(const JonesVector& j);
Quaternion normalized(const Quaternion& q);

/// (x, y) = (a + bi, c + di) -> q = a + bi + cj + dk.
Quaternion jones_to_quaternion(const JonesVector& j);
JonesVector quaternion_to_jones(const Quaternion& q);

/// ((a + di, -b - ci), (b - ci, a - di)).
SU2Element quaternion_to_su2(const Quaternion& q);
Quaternion su2_to_quaternion(const SU2Element& u);

/// ((alpha, -conj(beta)), (beta, conj(alpha))).
SU2Element state_to_su2(Complex alpha, Complex beta);
SU2Element state_to_su2(const Eigen::Vector2cd& projection);

}  // namespace qlgraph
