#include "wavecoh/roots.hpp"

#include <algorithm>
#include <cstddef>

#include "wavecoh/errors.hpp"

namespace wavecoh {

namespace {

// Evaluate p and p' together at z.
void eval_with_derivative(const Poly<Cplx>& p, const Cplx& z, Cplx& val, Cplx& der) {
    const auto& c = p.coeffs();
    mpfr_prec_t prec = z.re.prec();
    val = Cplx(prec);
    der = Cplx(prec);
    for (std::size_t i = c.size(); i-- > 0;) {
        der = der * z + val;
        val = val * z + c[i];
    }
}

// Fujiwara-style bound: all roots lie within 2 * max_k |c_{n-k}/c_n|^{1/k}.
BigFloat root_radius(const Poly<Cplx>& p) {
    long n = p.degree();
    BigFloat lead = abs(p.leading());
    BigFloat r(1.0, 64);
    for (long k = 1; k <= n; ++k) {
        BigFloat m = abs(p.coeff(static_cast<std::size_t>(n - k))) / lead;
        if (m.is_zero()) continue;
        BigFloat cand = pow(m, BigFloat(1.0, 64) / static_cast<long>(k));
        r = max(r, cand);
    }
    return r * 2L;
}

} // namespace

std::vector<RootCluster> complex_roots(const Poly<Cplx>& poly, const PrecisionContext& ctx) {
    if (poly.is_zero()) throw std::domain_error("complex_roots: zero polynomial");
    const mpfr_prec_t prec = ctx.mantissa_bits;

    // Deflate exact zero roots (structural trailing zeros).
    std::vector<Cplx> c(poly.coeffs().begin(), poly.coeffs().end());
    std::size_t zero_order = 0;
    while (zero_order < c.size() - 1 && c[zero_order].is_zero()) ++zero_order;
    Poly<Cplx> work(std::vector<Cplx>(c.begin() + static_cast<long>(zero_order), c.end()));

    const long n = work.degree();
    BigFloat scale = coeff_scale(work);
    BigFloat residual_target = ctx.zero_tolerance * scale;

    std::vector<Cplx> z;
    if (n > 0) {
        BigFloat r0 = root_radius(work);
        BigFloat two_pi = BigFloat::pi(prec) * 2L;
        for (long k = 0; k < n; ++k) {
            // start angle offset breaks conjugate symmetry
            BigFloat angle = two_pi * static_cast<long>(k) / n + BigFloat(0.4, prec);
            z.push_back(unit_dir(angle) * r0);
        }

        // Iterate until every correction stalls at the rounding floor; a
        // residual-only stop would freeze multiple roots while they are
        // still ~2^(-bits/2) apart.
        const int max_iters = 800;
        BigFloat step_floor = BigFloat::pow2(-static_cast<long>(prec) + 8, prec);
        for (int iter = 0; iter < max_iters; ++iter) {
            bool all_stalled = true;
            for (long i = 0; i < n; ++i) {
                Cplx val(prec), der(prec);
                eval_with_derivative(work, z[static_cast<std::size_t>(i)], val, der);
                if (val.is_zero()) continue;
                if (abs(der).is_zero()) { // saddle hit: nudge off it
                    z[static_cast<std::size_t>(i)] += Cplx(1e-3, 1e-3, prec);
                    all_stalled = false;
                    continue;
                }
                Cplx newton = val / der;
                Cplx repulsion(prec);
                for (long j = 0; j < n; ++j) {
                    if (j == i) continue;
                    Cplx d = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
                    repulsion += Cplx(1.0, 0.0, prec) / d;
                }
                Cplx denom = Cplx(1.0, 0.0, prec) - newton * repulsion;
                Cplx step = newton / denom;
                z[static_cast<std::size_t>(i)] -= step;
                if (abs(step) > step_floor * (abs(z[static_cast<std::size_t>(i)]) + 1L))
                    all_stalled = false;
            }
            if (all_stalled) break;
        }
    }

    // Cluster numerically coincident locations. Simultaneous iteration can
    // only separate an m-fold root to about 2^(-bits/m), so the merge radius
    // is wider than zero_tolerance by a small safety factor.
    BigFloat cluster_radius = max(ctx.zero_tolerance,
                                  BigFloat::pow2(-static_cast<long>(prec) / 2 + 16, prec));
    std::vector<RootCluster> clusters;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (long i = 0; i < n; ++i) {
        if (used[static_cast<std::size_t>(i)]) continue;
        std::vector<std::size_t> members{static_cast<std::size_t>(i)};
        used[static_cast<std::size_t>(i)] = true;
        for (long j = i + 1; j < n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            BigFloat d = abs(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            BigFloat local = cluster_radius * (abs(z[static_cast<std::size_t>(i)]) + 1L);
            if (d <= local) {
                members.push_back(static_cast<std::size_t>(j));
                used[static_cast<std::size_t>(j)] = true;
            }
        }
        Cplx center(prec);
        for (std::size_t m : members) center += z[m];
        center = center / static_cast<long>(members.size());
        // Multiplicity-aware Newton polish: z -= m p(z)/p'(z).
        for (int it = 0; it < 4; ++it) {
            Cplx val(prec), der(prec);
            eval_with_derivative(work, center, val, der);
            if (val.is_zero() || abs(der).is_zero()) break;
            center -= (val / der) * static_cast<long>(members.size());
        }
        clusters.push_back({center, static_cast<int>(members.size())});
    }

    if (zero_order > 0) {
        clusters.push_back({Cplx(prec), static_cast<int>(zero_order)});
    }

    // Residual acceptance: |p(z)| <= zero_tolerance * max|coefficients|.
    BigFloat full_scale = coeff_scale(poly);
    for (const auto& cl : clusters) {
        Cplx val = poly(cl.location);
        if (!(abs(val) <= ctx.zero_tolerance * full_scale)) {
            throw NonConvergence("complex_roots: residual " + abs(val).to_string() +
                                 " above tolerance at " + std::to_string(ctx.mantissa_bits) +
                                 " bits; raise precision");
        }
    }

    std::sort(clusters.begin(), clusters.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.location.re != b.location.re) return a.location.re < b.location.re;
        return a.location.im < b.location.im;
    });
    return clusters;
}

std::vector<Cplx> roots_with_multiplicity(const std::vector<RootCluster>& clusters) {
    std::vector<Cplx> out;
    for (const auto& cl : clusters)
        for (int k = 0; k < cl.order; ++k) out.push_back(cl.location);
    return out;
}

} // namespace wavecoh
