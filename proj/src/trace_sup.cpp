// Minimal-trace Loewner upper bound for symmetric 2x2 matrices.
//
// X maps to the plane point p(X) = ((a11 - a22) / 2, a12) and height h(X) = (a11 + a22) / 2.
// Its eigenvalues are h +- |p|, so Y >=_L X  <=>  h(Y) - h(X) >= |p(Y) - p(X)|. Minimising
// tr Y = 2 h(Y) over the upper bounds is therefore
//
//     min_q  max_i  h_i + |q - p_i|,
//
// the smallest circle enclosing the circles (p_i, h_i + const). The optimum is fixed by a
// support set of at most three items; candidates for a given support set have closed forms.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "loewner/errors.hpp"
#include "loewner/suprema.hpp"

namespace loewner {

namespace {

struct Site {
    double x, y, h;
};

struct Cover {
    double x, y, value;
};

Site to_site(const Sym2& m)
{
    return {0.5 * (m.a11 - m.a22), m.a12, 0.5 * (m.a11 + m.a22)};
}

Sym2 from_cover(const Cover& c)
{
    return {c.value + c.x, c.y, c.value - c.x};
}

double scale_of(std::span<const Site> sites)
{
    double s = 1.0;
    for (const Site& p : sites)
        s = std::max({s, std::fabs(p.x), std::fabs(p.y), std::fabs(p.h)});
    return s;
}

double reach(const Site& p, double x, double y)
{
    return p.h + std::hypot(x - p.x, y - p.y);
}

bool better(const Cover& a, const Cover& b)
{
    if (a.value != b.value)
        return a.value < b.value;
    if (a.x != b.x)
        return a.x < b.x;
    return a.y < b.y;
}

std::optional<Cover> cover_two(const Site& a, const Site& b)
{
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double d = std::hypot(dx, dy);
    if (d == 0.0)
        return std::nullopt;
    // point at distance t from a on the segment with h_a + t = h_b + d - t
    const double t = 0.5 * (b.h - a.h + d);
    if (t < 0.0 || t > d)
        return std::nullopt;
    return Cover{a.x + t * dx / d, a.y + t * dy / d, a.h + t};
}

// Points q with h_a + |q - p_a| = h_b + |q - p_b| = h_c + |q - p_c| = R.
// Relative to a: with rho = R - h_a, P = p - p_a, H = h - h_a,
//   P_j . q' = rho H_j + (|P_j|^2 - H_j^2) / 2  (j = b, c),   |q'| = rho.
int cover_three(const Site& a, const Site& b, const Site& c, double scale, std::array<Cover, 2>& out)
{
    const double bx = b.x - a.x, by = b.y - a.y, bh = b.h - a.h;
    const double cx = c.x - a.x, cy = c.y - a.y, ch = c.h - a.h;
    const double det = bx * cy - by * cx;
    if (std::fabs(det) <= 1e-14 * scale * scale)
        return 0;  // collinear sites: optimum then has a support of size <= 2

    const double rb = 0.5 * (bx * bx + by * by - bh * bh);
    const double rc = 0.5 * (cx * cx + cy * cy - ch * ch);
    // q' = rho * g + f
    const double gx = (bh * cy - ch * by) / det;
    const double gy = (ch * bx - bh * cx) / det;
    const double fx = (rb * cy - rc * by) / det;
    const double fy = (rc * bx - rb * cx) / det;

    const double qa = gx * gx + gy * gy - 1.0;
    const double qb = 2.0 * (gx * fx + gy * fy);
    const double qc = fx * fx + fy * fy;

    std::array<double, 2> roots{};
    int nroots = 0;
    if (std::fabs(qa) <= 1e-14) {
        if (qb != 0.0)
            roots[nroots++] = -qc / qb;
    } else {
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc < 0.0)
            return 0;
        const double sq = std::sqrt(disc);
        // stable quadratic roots
        const double tmp = -0.5 * (qb + std::copysign(sq, qb));
        if (tmp != 0.0) {
            roots[nroots++] = tmp / qa;
            roots[nroots++] = qc / tmp;
        } else {
            roots[nroots++] = 0.0;
        }
    }

    const double slack = 1e-12 * scale;
    int n = 0;
    for (int i = 0; i < nroots; ++i) {
        const double rho = roots[i];
        if (!std::isfinite(rho) || rho < -slack || rho - bh < -slack || rho - ch < -slack)
            continue;
        out[n++] = Cover{a.x + rho * gx + fx, a.y + rho * gy + fy, a.h + rho};
    }
    return n;
}

bool covers(const Cover& c, std::span<const Site> sites, double slack)
{
    return std::all_of(sites.begin(), sites.end(), [&](const Site& p) { return reach(p, c.x, c.y) <= c.value + slack; });
}

// Best cover of `sites` by enumerating all support sets of size 1..3 drawn from `pool`.
Cover best_cover(std::span<const Site> pool, std::span<const Site> sites, double scale)
{
    const double slack = 1e-11 * scale;
    std::optional<Cover> best;
    auto offer = [&](const Cover& c) {
        if (covers(c, sites, slack) && (!best || better(c, *best)))
            best = c;
    };

    const std::size_t n = pool.size();
    for (std::size_t i = 0; i < n; ++i)
        offer({pool[i].x, pool[i].y, pool[i].h});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (auto c = cover_two(pool[i], pool[j]))
                offer(*c);
    std::array<Cover, 2> three{};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const int found = cover_three(pool[i], pool[j], pool[k], scale, three);
                for (int r = 0; r < found; ++r)
                    offer(three[r]);
            }

    if (!best) {
        // Only reachable through rounding in degenerate configurations: fall back to the
        // highest site's centre with the radius that covers everything.
        const Site& top = *std::max_element(pool.begin(), pool.end(), [](const Site& a, const Site& b) { return a.h < b.h; });
        double value = top.h;
        for (const Site& p : sites)
            value = std::max(value, reach(p, top.x, top.y));
        best = Cover{top.x, top.y, value};
    }
    return *best;
}

std::vector<Site> support_of(const Cover& c, std::span<const Site> pool, double scale)
{
    std::vector<Site> out;
    const double slack = 1e-9 * scale;
    for (const Site& p : pool)
        if (reach(p, c.x, c.y) >= c.value - slack)
            out.push_back(p);
    return out;
}

Cover solve_active_set(std::span<const Site> sites, double scale)
{
    const double slack = 1e-11 * scale;
    std::size_t top = 0;
    for (std::size_t i = 1; i < sites.size(); ++i)
        if (sites[i].h > sites[top].h)
            top = i;

    std::vector<Site> basis{sites[top]};
    Cover cur{sites[top].x, sites[top].y, sites[top].h};

    // Each round adds the worst violator and re-solves on at most four sites; the optimum
    // value strictly increases, so the loop terminates. The cap guards against rounding cycles.
    for (int round = 0; round < 64 + 4 * static_cast<int>(sites.size()); ++round) {
        std::size_t worst = sites.size();
        double worst_excess = slack;
        for (std::size_t i = 0; i < sites.size(); ++i) {
            const double excess = reach(sites[i], cur.x, cur.y) - cur.value;
            if (excess > worst_excess) {
                worst_excess = excess;
                worst = i;
            }
        }
        if (worst == sites.size())
            return cur;

        std::vector<Site> pool = basis;
        pool.push_back(sites[worst]);
        cur = best_cover(pool, pool, scale);
        basis = support_of(cur, pool, scale);
        if (basis.empty())
            basis = pool;
        if (basis.size() > 3)
            basis.resize(3);
    }
    return best_cover(sites, sites, scale);
}

std::vector<Site> sites_of(std::span<const Sym2> xs)
{
    std::vector<Site> sites(xs.size());
    std::transform(xs.begin(), xs.end(), sites.begin(), to_site);
    return sites;
}

std::vector<Sym2> negated(std::span<const Sym2> xs)
{
    std::vector<Sym2> out(xs.size());
    std::transform(xs.begin(), xs.end(), out.begin(), [](const Sym2& x) { return -x; });
    return out;
}

}  // namespace

Sym2 trace_sup(std::span<const Sym2> xs)
{
    if (xs.empty())
        throw UsageError("trace_sup: empty multiset");
    const std::vector<Site> sites = sites_of(xs);
    return from_cover(solve_active_set(sites, scale_of(sites)));
}

Sym2 trace_inf(std::span<const Sym2> xs)
{
    if (xs.empty())
        throw UsageError("trace_inf: empty multiset");
    return -trace_sup(negated(xs));
}

namespace detail {

Sym2 trace_sup_exhaustive(std::span<const Sym2> xs)
{
    if (xs.empty())
        throw UsageError("trace_sup: empty multiset");
    const std::vector<Site> sites = sites_of(xs);
    return from_cover(best_cover(sites, sites, scale_of(sites)));
}

}  // namespace detail

}  // namespace loewner
