#include "loewner/sym2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>

#include "loewner/errors.hpp"

namespace loewner {

SpectralDecomp eigendecompose(const Sym2& m)
{
    const double mean = 0.5 * (m.a11 + m.a22);
    const double half_diff = 0.5 * (m.a11 - m.a22);
    // + 0.0 maps a negative zero to +0 so atan2 never returns -pi for a diagonal input
    const double off = m.a12 + 0.0;
    const double radius = std::hypot(half_diff, off);

    SpectralDecomp d;
    if (off == 0.0) {
        // diagonal input: read the eigenvalues off directly, mean +- radius can be off by an ulp
        d.lambda = std::max(m.a11, m.a22);
        d.mu = std::min(m.a11, m.a22);
        d.phi = m.a11 >= m.a22 ? 0.0 : 0.5 * std::atan2(0.0, -1.0);
        return d;
    }
    d.lambda = mean + radius;
    d.mu = mean - radius;
    d.phi = radius == 0.0 ? 0.0 : 0.5 * std::atan2(off, half_diff);
    return d;
}

Sym2 compose(const SpectralDecomp& d)
{
    // reduce by quarter turns so axis-aligned angles give exact 0 / +-1 instead of cos(pi/2) ~ 6e-17
    constexpr double quarter = std::numbers::pi / 2;
    const double k = std::nearbyint(d.phi / quarter);
    const double r = d.phi - k * quarter;
    double c = std::cos(r);
    double s = std::sin(r);
    switch (((static_cast<long long>(k) % 4) + 4) % 4) {
    case 1: std::tie(c, s) = std::pair{-s, c}; break;
    case 2: std::tie(c, s) = std::pair{-c, -s}; break;
    case 3: std::tie(c, s) = std::pair{s, -c}; break;
    default: break;
    }
    return {d.lambda * c * c + d.mu * s * s, (d.lambda - d.mu) * c * s, d.lambda * s * s + d.mu * c * c};
}

Sym2 exp_scaled(const Sym2& m, double t)
{
    SpectralDecomp d = eigendecompose(m);
    d.lambda = std::exp(t * d.lambda);
    d.mu = std::exp(t * d.mu);
    return compose(d);
}

Sym2 log_spd(const Sym2& m)
{
    constexpr double kMinEigen = 1e-300;
    SpectralDecomp d = eigendecompose(m);
    if (!(d.mu > kMinEigen))
        throw DomainError("log_spd: matrix is not positive definite (smallest eigenvalue " + std::to_string(d.mu) + ")");
    d.lambda = std::log(d.lambda);
    d.mu = std::log(d.mu);
    return compose(d);
}

Sym2 power(const Sym2& m, int p)
{
    SpectralDecomp d = eigendecompose(m);
    d.lambda = std::pow(d.lambda, p);
    d.mu = std::pow(d.mu, p);
    return compose(d);
}

bool loewner_leq(const Sym2& a, const Sym2& b, double tol)
{
    return eigendecompose(b - a).mu >= -tol;
}

Mat2 multiply(const Sym2& a, const Sym2& b)
{
    return {a.a11 * b.a11 + a.a12 * b.a12, a.a11 * b.a12 + a.a12 * b.a22,
            a.a12 * b.a11 + a.a22 * b.a12, a.a12 * b.a12 + a.a22 * b.a22};
}

}  // namespace loewner
