#include "wavecoh/pole_expansion.hpp"

#include <algorithm>

#include "wavecoh/errors.hpp"

namespace wavecoh {

namespace {

// Truncated product c = a*b (mod t^len).
std::vector<Cplx> series_mul(const std::vector<Cplx>& a, const std::vector<Cplx>& b, std::size_t len,
                             mpfr_prec_t prec) {
    std::vector<Cplx> c(len, Cplx(prec));
    for (std::size_t i = 0; i < a.size() && i < len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Truncated reciprocal of a series with a[0] != 0.
std::vector<Cplx> series_inv(const std::vector<Cplx>& a, std::size_t len, mpfr_prec_t prec) {
    std::vector<Cplx> r(len, Cplx(prec));
    Cplx inv0 = Cplx(1.0, 0.0, prec) / a[0];
    r[0] = inv0;
    for (std::size_t k = 1; k < len; ++k) {
        Cplx acc(prec);
        for (std::size_t j = 1; j <= k; ++j)
            if (j < a.size()) acc += a[j] * r[k - j];
        r[k] = -inv0 * acc;
    }
    return r;
}

} // namespace

PoleExpansion::PoleExpansion(Poly<Cplx> head, std::vector<PoleTerms> poles)
    : head_(std::move(head)), poles_(std::move(poles)) {
    normalize();
}

void PoleExpansion::normalize() {
    for (auto& p : poles_) {
        while (!p.coef.empty() && p.coef.back().is_zero()) p.coef.pop_back();
    }
    poles_.erase(std::remove_if(poles_.begin(), poles_.end(),
                                [](const PoleTerms& p) { return p.coef.empty(); }),
                 poles_.end());
    std::sort(poles_.begin(), poles_.end(), [](const PoleTerms& a, const PoleTerms& b) {
        if (a.z.re != b.z.re) return a.z.re < b.z.re;
        return a.z.im < b.z.im;
    });
}

Cplx PoleExpansion::eval(const Cplx& x) const {
    Cplx acc = head_(x);
    for (const auto& p : poles_) {
        Cplx inv = Cplx(1.0, 0.0, x.re.prec()) / (x - p.z);
        Cplx powk = inv;
        for (std::size_t k = 0; k < p.coef.size(); ++k) {
            acc += p.coef[k] * powk;
            powk = powk * inv;
        }
    }
    return acc;
}

BigFloat PoleExpansion::scale() const {
    BigFloat m = coeff_scale(head_);
    for (const auto& p : poles_)
        for (const auto& c : p.coef) m = max(m, abs(c));
    return m;
}

PoleExpansion PoleExpansion::add(const PoleExpansion& a, const PoleExpansion& b, const BigFloat& tol) {
    std::vector<PoleTerms> poles = a.poles_;
    for (const auto& pb : b.poles_) {
        bool merged = false;
        for (auto& pa : poles) {
            if (abs(pa.z - pb.z) <= tol * (abs(pa.z) + 1L)) {
                if (pb.coef.size() > pa.coef.size()) pa.coef.resize(pb.coef.size(), Cplx(pa.z.re.prec()));
                for (std::size_t k = 0; k < pb.coef.size(); ++k) pa.coef[k] += pb.coef[k];
                merged = true;
                break;
            }
        }
        if (!merged) poles.push_back(pb);
    }
    return PoleExpansion(a.head_ + b.head_, std::move(poles));
}

PoleExpansion PoleExpansion::sub(const PoleExpansion& a, const PoleExpansion& b, const BigFloat& tol) {
    return add(a, b.scaled(Cplx(-1.0, 0.0, tol.prec())), tol);
}

PoleExpansion PoleExpansion::scaled(const Cplx& s) const {
    PoleExpansion r;
    r.head_ = head_ * s;
    r.poles_ = poles_;
    for (auto& p : r.poles_)
        for (auto& c : p.coef) c = c * s;
    r.normalize();
    return r;
}

PoleExpansion PoleExpansion::pruned(const BigFloat& abs_tol) const {
    PoleExpansion r;
    r.head_ = head_;
    for (const auto& p : poles_) {
        PoleTerms keep{p.z, {}};
        keep.coef = p.coef;
        for (auto& c : keep.coef)
            if (abs(c) <= abs_tol) c = Cplx(p.z.re.prec());
        r.poles_.push_back(std::move(keep));
    }
    r.normalize();
    return r;
}

PoleExpansion PoleExpansion::single_term(const Cplx& z, int order, const Cplx& c) {
    PoleTerms p{z, std::vector<Cplx>(static_cast<std::size_t>(order), Cplx(z.re.prec()))};
    p.coef[static_cast<std::size_t>(order - 1)] = c;
    return PoleExpansion(Poly<Cplx>(), {std::move(p)});
}

std::pair<Poly<Cplx>, Poly<Cplx>> PoleExpansion::to_fraction() const {
    mpfr_prec_t prec = 256;
    if (!poles_.empty()) prec = poles_[0].z.re.prec();
    Poly<Cplx> den = Poly<Cplx>::constant(Cplx(1.0, 0.0, prec));
    for (const auto& p : poles_) {
        Poly<Cplx> lin({-p.z, Cplx(1.0, 0.0, prec)});
        for (int k = 0; k < p.max_order(); ++k) den = den * lin;
    }
    Poly<Cplx> num = head_ * den;
    for (const auto& p : poles_) {
        // den / (x - z)^k times the coefficient, for each order k
        Poly<Cplx> lin({-p.z, Cplx(1.0, 0.0, prec)});
        Poly<Cplx> reduced = den;
        for (int k = 1; k <= p.max_order(); ++k) {
            reduced = divmod(reduced, lin).first;
            num = num + reduced * p.coefficient(k);
        }
    }
    return {num, den};
}

PoleExpansion partial_fractions(const Poly<Cplx>& numerator,
                                const std::vector<RootCluster>& denominator_roots,
                                const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.mantissa_bits;
    for (std::size_t i = 0; i < denominator_roots.size(); ++i)
        for (std::size_t j = i + 1; j < denominator_roots.size(); ++j) {
            BigFloat d = abs(denominator_roots[i].location - denominator_roots[j].location);
            if (d <= ctx.zero_tolerance * (abs(denominator_roots[i].location) + 1L))
                throw IllConditioned("partial_fractions: denominator roots closer than zero_tolerance");
        }

    if (denominator_roots.empty()) return PoleExpansion(numerator);

    Poly<Cplx> den = Poly<Cplx>::constant(Cplx(1.0, 0.0, prec));
    for (const auto& r : denominator_roots) {
        Poly<Cplx> lin({-r.location, Cplx(1.0, 0.0, prec)});
        for (int k = 0; k < r.order; ++k) den = den * lin;
    }

    auto [head, rem] = divmod(numerator, den);

    std::vector<PoleTerms> poles;
    for (std::size_t i = 0; i < denominator_roots.size(); ++i) {
        const Cplx& z = denominator_roots[i].location;
        const std::size_t m = static_cast<std::size_t>(denominator_roots[i].order);

        // rem(z+t) / prod_{j!=i} (z+t-z_j)^{m_j} as a series in t, to t^{m-1};
        // coefficient of 1/(x-z)^k is the series coefficient at t^{m-k}.
        std::vector<Cplx> num_series(m, Cplx(prec));
        {
            // Horner shift of rem to base point z, truncated to degree m-1.
            std::vector<Cplx> acc; // polynomial in t, lowest degree first
            for (long k = rem.degree(); k >= 0; --k) {
                // acc = acc * (t + z) + rem_k
                std::vector<Cplx> next(std::min(acc.size() + 1, m), Cplx(prec));
                for (std::size_t s = 0; s < acc.size(); ++s) {
                    if (s + 1 < next.size()) next[s + 1] += acc[s];
                    next[s] += acc[s] * z;
                }
                next[0] += rem.coeff(static_cast<std::size_t>(k));
                acc = std::move(next);
            }
            for (std::size_t s = 0; s < acc.size() && s < m; ++s) num_series[s] = acc[s];
        }

        std::vector<Cplx> g{Cplx(1.0, 0.0, prec)};
        for (std::size_t j = 0; j < denominator_roots.size(); ++j) {
            if (j == i) continue;
            // (z - z_j + t)^{m_j} truncated
            std::vector<Cplx> factor{z - denominator_roots[j].location, Cplx(1.0, 0.0, prec)};
            for (int k = 0; k < denominator_roots[j].order; ++k) g = series_mul(g, factor, m, prec);
        }
        std::vector<Cplx> ginv = series_inv(g, m, prec);
        std::vector<Cplx> s = series_mul(num_series, ginv, m, prec);

        PoleTerms terms{z, std::vector<Cplx>(m, Cplx(prec))};
        for (std::size_t k = 1; k <= m; ++k) terms.coef[k - 1] = s[m - k];
        poles.push_back(std::move(terms));
    }

    return PoleExpansion(std::move(head), std::move(poles));
}

PoleExpansion apply_D(const PoleExpansion& q, const CubicWeight& w) {
    const mpfr_prec_t prec = w.prec();
    Poly<Cplx> head = derivative(q.head()) + w.h_prime_poly() * q.head();

    std::vector<PoleTerms> poles;
    for (const auto& p : q.poles()) {
        const Cplx& z = p.z;
        const Cplx two_z = z * 2L;
        const Cplx hp_at_z = w.h_prime(z);
        const int m = p.max_order();

        PoleTerms out{z, std::vector<Cplx>(static_cast<std::size_t>(m) + 1, Cplx(prec))};
        auto bump = [&](int order, const Cplx& v) {
            if (order >= 1) out.coef[static_cast<std::size_t>(order - 1)] += v;
        };

        for (int k = 1; k <= m; ++k) {
            const Cplx a = p.coefficient(k);
            if (a.is_zero()) continue;
            // (a/(x-z)^k)' = -k a/(x-z)^{k+1}
            bump(k + 1, a * static_cast<long>(-k));
            // h'(x) a/(x-z)^k = a [ (x-z)^{2-k} + 2z (x-z)^{1-k} + h'(z) (x-z)^{-k} ]
            bump(k, a * hp_at_z);
            if (k >= 2) bump(k - 1, a * two_z);
            else head = head + Poly<Cplx>({a * two_z}); // k=1: constant 2z*a
            if (k >= 3) bump(k - 2, a);
            else if (k == 2) head = head + Poly<Cplx>({a});
            else head = head + Poly<Cplx>({-a * z, a}); // k=1: a*(x-z)
        }
        poles.push_back(std::move(out));
    }

    return PoleExpansion(std::move(head), std::move(poles));
}

} // namespace wavecoh
