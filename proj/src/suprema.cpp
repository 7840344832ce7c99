#include <algorithm>
#include <cmath>

#include "loewner/errors.hpp"
#include "loewner/suprema.hpp"

namespace loewner {

bool verify_upper_bound(const Sym2& s, std::span<const Sym2> xs, double tol)
{
    return std::all_of(xs.begin(), xs.end(), [&](const Sym2& x) { return loewner_leq(x, s, tol); });
}

bool verify_lower_bound(const Sym2& s, std::span<const Sym2> xs, double tol)
{
    return std::all_of(xs.begin(), xs.end(), [&](const Sym2& x) { return loewner_leq(s, x, tol); });
}

bool verify_p_power_membership(const Sym2& s, std::span<const Sym2> xs, int p, double tol)
{
    if (p < 1)
        throw UsageError("verify_p_power_membership: p must be a positive integer");
    constexpr double kPsdSlack = 1e-12;
    auto require_psd = [](const Sym2& m) {
        if (min_eigenvalue(m) < -kPsdSlack)
            throw DomainError("verify_p_power_membership: input is not positive semidefinite");
    };
    require_psd(s);
    for (const Sym2& x : xs)
        require_psd(x);

    const Sym2 sp = power(s, p);
    return std::all_of(xs.begin(), xs.end(), [&](const Sym2& x) { return loewner_leq(power(x, p), sp, tol); });
}

std::pair<double, double> lex_phi(const Sym2& m)
{
    const SpectralDecomp d = eigendecompose(m);
    return {d.lambda, d.mu};
}

bool lex_precedes(std::pair<double, double> lhs, std::pair<double, double> rhs, double tol)
{
    if (std::fabs(lhs.first - rhs.first) <= tol)
        return lhs.second <= rhs.second + tol;
    return lhs.first < rhs.first;
}

}  // namespace loewner
