#pragma once

// Arbitrary-precision evaluation of (1/m) log sum exp(m X_i) for symmetric 2x2 inputs.
//
// Uses the trace/deviator closed forms
//   exp(A) = e^t (cosh(s) I + sinh(s)/s (A - tI)),
//   log(S) = (l1 + l2)/2 I + (l1 - l2)/(2s) (S - tI),  l1 = ln(t + s), l2 = ln(det S) - l1,
// with t = tr/2 and s the deviator norm, so no eigenvectors are involved. The working
// precision is chosen from m and the eigenvalue spread so that the smallest eigenvalue of the
// sum survives cancellation.

#include <algorithm>
#include <cmath>
#include <span>

#include <boost/multiprecision/mpfr.hpp>

#include "loewner/sym2.hpp"

namespace testing_support {

namespace mp = boost::multiprecision;

inline loewner::Sym2 precise_log_sum_exp(std::span<const loewner::Sym2> xs, double m)
{
    using Real = mp::mpfr_float;

    double hi = -1e300, lo = 1e300;
    for (const auto& x : xs) {
        const double t = 0.5 * (x.a11 + x.a22);
        const double s = std::hypot(0.5 * (x.a11 - x.a22), x.a12);
        hi = std::max(hi, t + s);
        lo = std::min(lo, t - s);
    }
    const double bits = 2.0 * m * (hi - lo) / std::log(2.0) + 256.0;
    const unsigned digits10 = static_cast<unsigned>(bits * 0.30103) + 20;
    const unsigned saved = Real::default_precision();
    Real::default_precision(digits10);

    Real s11 = 0, s12 = 0, s22 = 0;
    const Real mm = m;
    for (const auto& x : xs) {
        const Real a11 = mm * Real(x.a11), a12 = mm * Real(x.a12), a22 = mm * Real(x.a22);
        const Real t = (a11 + a22) / 2;
        const Real d = (a11 - a22) / 2;
        const Real s = mp::sqrt(d * d + a12 * a12);
        const Real et = mp::exp(t);
        const Real ch = mp::cosh(s);
        const Real sh_s = s == 0 ? Real(1) : Real(mp::sinh(s) / s);
        s11 += et * (ch + sh_s * d);
        s22 += et * (ch - sh_s * d);
        s12 += et * sh_s * a12;
    }

    const Real t = (s11 + s22) / 2;
    const Real d = (s11 - s22) / 2;
    const Real s = mp::sqrt(d * d + s12 * s12);
    const Real det = s11 * s22 - s12 * s12;
    const Real l1 = mp::log(t + s);
    const Real l2 = mp::log(det) - l1;
    const Real mean = (l1 + l2) / 2;
    const Real k = s == 0 ? Real(0) : Real((l1 - l2) / (2 * s));

    loewner::Sym2 out{static_cast<double>((mean + k * d) / mm), static_cast<double>(k * s12 / mm),
                      static_cast<double>((mean - k * d) / mm)};
    Real::default_precision(saved);
    return out;
}

/// Richardson extrapolation of the finite-m values at m and 2m. For separated spectra the
/// finite-m error is a/m plus terms that decay exponentially in m, which this removes.
inline loewner::Sym2 precise_les_limit(std::span<const loewner::Sym2> xs, double m)
{
    const loewner::Sym2 a = precise_log_sum_exp(xs, m);
    const loewner::Sym2 b = precise_log_sum_exp(xs, 2.0 * m);
    return 2.0 * b - a;
}

}  // namespace testing_support
