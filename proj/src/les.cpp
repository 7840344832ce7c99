#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "loewner/errors.hpp"
#include "loewner/suprema.hpp"

namespace loewner {

namespace {

constexpr double kRoundingCross = 1e-12;

void require_nonempty(std::size_t n, const char* what)
{
    if (n == 0)
        throw UsageError(std::string(what) + ": empty multiset");
}

std::vector<Sym2> negated(std::span<const Sym2> xs)
{
    std::vector<Sym2> out(xs.size());
    std::transform(xs.begin(), xs.end(), out.begin(), [](const Sym2& x) { return -x; });
    return out;
}

}  // namespace

LesSelection les_select(std::span<const SpectralDecomp> spectra, const LesTolerance& tol)
{
    require_nonempty(spectra.size(), "les_exact");

    std::size_t top = 0;
    for (std::size_t i = 1; i < spectra.size(); ++i)
        if (spectra[i].lambda > spectra[top].lambda)
            top = i;

    const double lambda1 = spectra[top].lambda;
    const double ux = std::cos(spectra[top].phi);
    const double uy = std::sin(spectra[top].phi);

    double mu = -std::numeric_limits<double>::infinity();
    bool tied = false;
    auto consider = [&](double value, double dx, double dy) {
        if (std::fabs(ux * dy - uy * dx) < tol.parallel)
            return;
        if (value >= lambda1 - tol.eigen_tie)
            tied = true;
        mu = std::max(mu, value);
    };
    for (const SpectralDecomp& d : spectra) {
        const double c = std::cos(d.phi);
        const double s = std::sin(d.phi);
        consider(d.lambda, c, s);
        consider(d.mu, -s, c);
    }
    // Every item contributes two orthogonal eigenpairs, so at least one is never parallel
    // to u1 and mu is always finite here.
    return {lambda1, tied ? lambda1 : mu, spectra[top].phi, top};
}

Sym2 compose(const LesSelection& s)
{
    return compose(SpectralDecomp{s.lambda1, s.mu, s.phi});
}

Sym2 les_exact(std::span<const Sym2> xs, const LesTolerance& tol)
{
    require_nonempty(xs.size(), "les_exact");
    std::vector<SpectralDecomp> spectra(xs.size());
    std::transform(xs.begin(), xs.end(), spectra.begin(), [](const Sym2& x) { return eigendecompose(x); });
    const LesSelection sel = les_select(spectra, tol);
    return selects_top_item(sel, spectra) ? xs[sel.top] : compose(sel);
}

Sym2 les_inf(std::span<const Sym2> xs, const LesTolerance& tol)
{
    require_nonempty(xs.size(), "les_inf");
    return -les_exact(negated(xs), tol);
}

Sym2 les_approx(std::span<const Sym2> xs, double m)
{
    require_nonempty(xs.size(), "les_approx");
    if (!(m > 0.0) || !std::isfinite(m))
        throw UsageError("les_approx: scale m must be positive and finite");
    if (xs.size() == 1)
        return xs[0];

    struct Term {
        double log_weight;
        double dx, dy;
    };
    std::vector<Term> terms;
    terms.reserve(2 * xs.size());

    double shift = -std::numeric_limits<double>::infinity();
    std::vector<SpectralDecomp> spectra(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        spectra[i] = eigendecompose(xs[i]);
        shift = std::max(shift, spectra[i].lambda);
    }
    for (const SpectralDecomp& d : spectra) {
        const double c = std::cos(d.phi);
        const double s = std::sin(d.phi);
        terms.push_back({m * (d.lambda - shift), c, s});
        terms.push_back({m * (d.mu - shift), -s, c});
    }

    // sum_k w_k d_k d_k^T = (T/2) I + [[alpha, beta], [beta, -alpha]], all weights <= 1.
    double total = 0.0, alpha = 0.0, beta = 0.0;
    for (const Term& t : terms) {
        const double w = std::exp(t.log_weight);
        total += w;
        alpha += 0.5 * w * (t.dx * t.dx - t.dy * t.dy);
        beta += w * t.dx * t.dy;
    }
    const double big = 0.5 * total + std::hypot(alpha, beta);
    const double log_big = std::log(big);

    // det = sum_{j<k} w_j w_k (d_j x d_k)^2, accumulated as a log-sum-exp so the small
    // eigenvalue det / big survives even when it underflows as a plain number.
    std::vector<double> pair_logs;
    pair_logs.reserve(terms.size() * (terms.size() - 1) / 2);
    double pair_max = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < terms.size(); ++j) {
        for (std::size_t k = j + 1; k < terms.size(); ++k) {
            const double cross = terms[j].dx * terms[k].dy - terms[j].dy * terms[k].dx;
            // Directions recovered from equal-hue colours differ only by rounding in atan2. At large
            // m that noise alone would dominate the determinant, so treat it as exactly parallel.
            if (std::fabs(cross) < kRoundingCross)
                continue;
            const double v = terms[j].log_weight + terms[k].log_weight + std::log(cross * cross);
            pair_logs.push_back(v);
            pair_max = std::max(pair_max, v);
        }
    }
    double acc = 0.0;
    for (double v : pair_logs)
        acc += std::exp(v - pair_max);
    const double log_det = pair_max + std::log(acc);
    const double log_small = log_det - log_big;

    const double psi = (alpha == 0.0 && beta == 0.0) ? 0.0 : 0.5 * std::atan2(beta, alpha);
    const Sym2 logm = compose(SpectralDecomp{log_big, log_small, psi});
    return Sym2::identity(shift) + (1.0 / m) * logm;
}

Sym2 les_approx_inf(std::span<const Sym2> xs, double m)
{
    return -les_approx(negated(xs), m);
}

Sym2 les_approx_unshifted(std::span<const Sym2> xs, double m)
{
    require_nonempty(xs.size(), "les_approx_unshifted");
    if (!(m > 0.0))
        throw UsageError("les_approx_unshifted: scale m must be positive");
    Sym2 sum{};
    for (const Sym2& x : xs)
        sum = sum + exp_scaled(x, m);
    if (!sum.finite())
        return sum;
    return (1.0 / m) * log_spd(sum);
}

SupMethod SupMethod::les_approx(double m)
{
    if (!(m > 0.0) || !std::isfinite(m))
        throw UsageError("les-approx scale must be positive and finite");
    return {Kind::LesApprox, m, {}};
}

Sym2 supremum(std::span<const Sym2> xs, const SupMethod& method)
{
    switch (method.kind) {
    case SupMethod::Kind::LesExact: return les_exact(xs, method.tol);
    case SupMethod::Kind::LesApprox: return les_approx(xs, method.scale);
    case SupMethod::Kind::Trace: return trace_sup(xs);
    }
    return {};
}

Sym2 infimum(std::span<const Sym2> xs, const SupMethod& method)
{
    switch (method.kind) {
    case SupMethod::Kind::LesExact: return les_inf(xs, method.tol);
    case SupMethod::Kind::LesApprox: return les_approx_inf(xs, method.scale);
    case SupMethod::Kind::Trace: return trace_inf(xs);
    }
    return {};
}

}  // namespace loewner
