#pragma once

#include <cmath>

namespace loewner {

/// Symmetric real 2x2 matrix [[a11, a12], [a12, a22]].
struct Sym2 {
    double a11 = 0.0;
    double a12 = 0.0;
    double a22 = 0.0;

    static constexpr Sym2 identity(double s = 1.0) { return {s, 0.0, s}; }
    static constexpr Sym2 diag(double d1, double d2) { return {d1, 0.0, d2}; }

    constexpr double trace() const { return a11 + a22; }
    constexpr double det() const { return a11 * a22 - a12 * a12; }
    bool finite() const { return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a22); }

    friend constexpr bool operator==(const Sym2&, const Sym2&) = default;
};

constexpr Sym2 operator+(const Sym2& a, const Sym2& b) { return {a.a11 + b.a11, a.a12 + b.a12, a.a22 + b.a22}; }
constexpr Sym2 operator-(const Sym2& a, const Sym2& b) { return {a.a11 - b.a11, a.a12 - b.a12, a.a22 - b.a22}; }
constexpr Sym2 operator-(const Sym2& a) { return {-a.a11, -a.a12, -a.a22}; }
constexpr Sym2 operator*(double s, const Sym2& a) { return {s * a.a11, s * a.a12, s * a.a22}; }

/// Frobenius norm (off-diagonal counted twice).
inline double frobenius(const Sym2& m) { return std::sqrt(m.a11 * m.a11 + 2.0 * m.a12 * m.a12 + m.a22 * m.a22); }

inline double max_abs_entry(const Sym2& m) { return std::fmax(std::fabs(m.a11), std::fmax(std::fabs(m.a12), std::fabs(m.a22))); }

/// Eigen-representation lambda*u*u^T + mu*v*v^T with u = (cos phi, sin phi), v = (-sin phi, cos phi).
struct SpectralDecomp {
    double lambda = 0.0;  // larger eigenvalue
    double mu = 0.0;      // smaller eigenvalue
    double phi = 0.0;     // angle of u, in [-pi/2, pi/2]
};

/// Closed-form eigensolve. Isotropic input gets phi = 0.
SpectralDecomp eigendecompose(const Sym2& m);

Sym2 compose(const SpectralDecomp& d);

/// Matrix exponential of t*m through the eigenbasis of m.
Sym2 exp_scaled(const Sym2& m, double t);

/// Principal logarithm of a symmetric positive definite matrix.
/// Throws DomainError when an eigenvalue is <= 1e-300.
Sym2 log_spd(const Sym2& m);

/// Integer power through the eigenbasis.
Sym2 power(const Sym2& m, int p);

/// a <=_L b, i.e. the smallest eigenvalue of b - a is >= -tol.
bool loewner_leq(const Sym2& a, const Sym2& b, double tol = 0.0);

inline double min_eigenvalue(const Sym2& m) { return eigendecompose(m).mu; }
inline double max_eigenvalue(const Sym2& m) { return eigendecompose(m).lambda; }

/// Matrix product of two symmetric matrices, returned as a full row-major 2x2.
struct Mat2 {
    double m00, m01, m10, m11;
};
Mat2 multiply(const Sym2& a, const Sym2& b);

}  // namespace loewner
