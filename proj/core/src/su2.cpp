#include "qlgraph/su2.hpp"

#include <cmath>
#include <sstream>

#include "qlgraph/errors.hpp"

namespace qlgraph {

namespace {

double checked_scale(double norm_squared, const char* what) {
    const double norm = std::sqrt(norm_squared);
    if (std::abs(norm - 1.0) <= kNormTolerance) {
        return 1.0;
    }
    if (std::abs(norm - 1.0) <= kRenormalizeTolerance) {
        return 1.0 / norm;
    }
    std::ostringstream msg;
    msg << what << " has norm " << norm << ", expected 1";
    throw ValidationError(msg.str());
}

}  // namespace

Quaternion operator*(const Quaternion& p, const Quaternion& q) noexcept {
    return {
        p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
        p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
        p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
        p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a,
    };
}

bool SU2Element::is_valid(double tol) const {
    const Eigen::Matrix2cd gram = m.adjoint() * m;
    if ((gram - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > tol) {
        return false;
    }
    return std::abs(m.determinant() - Complex(1.0, 0.0)) <= tol;
}

JonesVector normalized(const JonesVector& j) {
    const double s = checked_scale(std::norm(j.x) + std::norm(j.y), "Jones vector");
    return {j.x * s, j.y * s};
}

Quaternion normalized(const Quaternion& q) {
    const double s = checked_scale(q.norm_squared(), "quaternion");
    return {q.a * s, q.b * s, q.c * s, q.d * s};
}

Quaternion jones_to_quaternion(const JonesVector& j) {
    const auto n = normalized(j);
    return {n.x.real(), n.x.imag(), n.y.real(), n.y.imag()};
}

JonesVector quaternion_to_jones(const Quaternion& q) {
    const auto n = normalized(q);
    return {Complex(n.a, n.b), Complex(n.c, n.d)};
}

SU2Element quaternion_to_su2(const Quaternion& q) {
    const auto n = normalized(q);
    SU2Element u;
    u.m << Complex(n.a, n.d), Complex(-n.b, -n.c),
           Complex(n.b, -n.c), Complex(n.a, -n.d);
    return u;
}

Quaternion su2_to_quaternion(const SU2Element& u) {
    if (!u.is_valid(kRenormalizeTolerance)) {
        throw ValidationError("matrix is not an SU(2) element");
    }
    const Complex p = u.m(0, 0);
    const Complex r = u.m(1, 0);
    return normalized(Quaternion{p.real(), r.real(), -r.imag(), p.imag()});
}

SU2Element state_to_su2(Complex alpha, Complex beta) {
    const double s = checked_scale(std::norm(alpha) + std::norm(beta), "state");
    alpha *= s;
    beta *= s;
    SU2Element u;
    u.m << alpha, -std::conj(beta),
           beta, std::conj(alpha);
    return u;
}

SU2Element state_to_su2(const Eigen::Vector2cd& projection) {
    return state_to_su2(projection(0), projection(1));
}

}  // namespace qlgraph
