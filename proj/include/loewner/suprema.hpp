#pragma once

#include <span>
#include <utility>
#include <vector>

#include "loewner/sym2.hpp"

namespace loewner {

/// Numerical criteria for the exact log-exp supremum.
struct LesTolerance {
    /// Two eigenvalues closer than this count as equal when deciding whether
    /// the top eigenvalue is attained in more than one direction.
    double eigen_tie = 1e-9;
    /// Eigenvectors with |sin(angle difference)| below this are parallel.
    double parallel = 1e-9;
};

/// Spectral data of an exact log-exp supremum before composition.
struct LesSelection {
    double lambda1 = 0.0;  // largest eigenvalue over the multiset
    double mu = 0.0;       // eigenvalue assigned to the direction orthogonal to u1
    double phi = 0.0;      // angle of u1
    std::size_t top = 0;   // index of the first item attaining lambda1
};

/// True when the selection is exactly the spectrum of item `top`, so that item can be returned verbatim.
inline bool selects_top_item(const LesSelection& s, std::span<const SpectralDecomp> spectra)
{
    return s.mu == spectra[s.top].mu;
}

/// Selects (lambda1, u1, mu) from pre-computed item spectra.
///
/// lambda1 is the global maximum eigenvalue with eigenvector u1. If lambda1 is also
/// attained (within tol.eigen_tie) along a direction not parallel to u1 the result is
/// isotropic, mu = lambda1. Otherwise mu is the largest eigenvalue, over every eigenpair
/// of every item, whose eigenvector is not parallel to u1. Throws UsageError when empty.
LesSelection les_select(std::span<const SpectralDecomp> spectra, const LesTolerance& tol = {});

Sym2 compose(const LesSelection& s);

/// Exact log-exp supremum: the m -> infinity limit of (1/m) log sum exp(m X_i).
Sym2 les_exact(std::span<const Sym2> xs, const LesTolerance& tol = {});

/// Dual infimum: -les_exact({-X}).
Sym2 les_inf(std::span<const Sym2> xs, const LesTolerance& tol = {});

/// (1/m) log sum exp(m X_i) at finite scale m > 0, evaluated after a spectral shift by the
/// largest eigenvalue and with the small eigenvalue of the sum kept in the log domain, so
/// neither overflow nor underflow occurs for any m.
Sym2 les_approx(std::span<const Sym2> xs, double m);

/// les_approx dual: -les_approx({-X}, m).
Sym2 les_approx_inf(std::span<const Sym2> xs, double m);

/// Direct evaluation with exp_scaled / log_spd and no shift. Overflows to a non-finite
/// matrix (or throws DomainError) once m * eigenvalue leaves double range. Diagnostic only.
Sym2 les_approx_unshifted(std::span<const Sym2> xs, double m);

/// Loewner upper bound of minimal trace.
Sym2 trace_sup(std::span<const Sym2> xs);
Sym2 trace_inf(std::span<const Sym2> xs);

namespace detail {
/// Minimal-trace bound by enumerating every support set of size <= 3 over all items.
/// O(n^4); used to cross-check the active-set solver.
Sym2 trace_sup_exhaustive(std::span<const Sym2> xs);
}  // namespace detail

bool verify_upper_bound(const Sym2& s, std::span<const Sym2> xs, double tol);
bool verify_lower_bound(const Sym2& s, std::span<const Sym2> xs, double tol);

/// s^p >=_L X^p for every item. All inputs must be positive semidefinite (DomainError
/// otherwise) and p >= 1 (UsageError otherwise).
bool verify_p_power_membership(const Sym2& s, std::span<const Sym2> xs, int p, double tol);

/// Ordered eigenvalue pair (lambda, mu), lambda >= mu.
std::pair<double, double> lex_phi(const Sym2& m);

/// Lexicographic order on eigenvalue pairs: a < a' or (a == a' and b <= b'), with
/// equality in the first component taken up to tol.
bool lex_precedes(std::pair<double, double> lhs, std::pair<double, double> rhs, double tol = 0.0);

/// Aggregation back-end selector shared by the morphology operators.
struct SupMethod {
    enum class Kind { LesExact, LesApprox, Trace };

    Kind kind = Kind::LesExact;
    double scale = 1e4;  // m, LesApprox only
    LesTolerance tol{};

    static SupMethod les_exact(LesTolerance t = {}) { return {Kind::LesExact, 1e4, t}; }
    static SupMethod les_approx(double m);
    static SupMethod trace() { return {Kind::Trace, 1e4, {}}; }
};

Sym2 supremum(std::span<const Sym2> xs, const SupMethod& method);
Sym2 infimum(std::span<const Sym2> xs, const SupMethod& method);

}  // namespace loewner
