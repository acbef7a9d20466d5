#ifndef WAVECOH_POLE_EXPANSION_HPP
#define WAVECOH_POLE_EXPANSION_HPP

#include <vector>

#include "wavecoh/poly.hpp"
#include "wavecoh/precision.hpp"
#include "wavecoh/roots.hpp"
#include "wavecoh/weight.hpp"

namespace wavecoh {

/// All terms at one pole location: coef[k-1] multiplies 1/(x-z)^k.
struct PoleTerms {
    Cplx z;
    std::vector<Cplx> coef;

    int max_order() const { return static_cast<int>(coef.size()); }
    Cplx coefficient(int order) const {
        return (order >= 1 && order <= max_order()) ? coef[static_cast<std::size_t>(order - 1)]
                                                    : Cplx(z.re.prec());
    }
};

/// Rational function in partial-fraction form: polynomial part plus pole
/// terms at pairwise-distinct locations. This is the working representation
/// for everything the map D touches.
class PoleExpansion {
public:
    PoleExpansion() = default;
    explicit PoleExpansion(Poly<Cplx> head) : head_(std::move(head)) {}
    PoleExpansion(Poly<Cplx> head, std::vector<PoleTerms> poles);

    const Poly<Cplx>& head() const { return head_; }
    const std::vector<PoleTerms>& poles() const { return poles_; }
    bool pole_free() const { return poles_.empty(); }

    Cplx eval(const Cplx& x) const;

    /// Largest magnitude among head and pole coefficients.
    BigFloat scale() const;

    /// Merge-aware sum; locations within tol*(1+|z|) are identified.
    static PoleExpansion add(const PoleExpansion& a, const PoleExpansion& b, const BigFloat& tol);
    static PoleExpansion sub(const PoleExpansion& a, const PoleExpansion& b, const BigFloat& tol);
    PoleExpansion scaled(const Cplx& s) const;

    /// Drop pole coefficients of magnitude <= abs_tol (and empty poles).
    PoleExpansion pruned(const BigFloat& abs_tol) const;

    /// Single term c/(x-z)^k.
    static PoleExpansion single_term(const Cplx& z, int order, const Cplx& c);

    /// num/den over the common denominator prod (x-z)^order.
    std::pair<Poly<Cplx>, Poly<Cplx>> to_fraction() const;

private:
    void normalize();

    Poly<Cplx> head_;
    std::vector<PoleTerms> poles_;
};

/// Partial-fraction decomposition of numerator / prod (x-z_i)^{order_i}.
/// Requires pairwise distinct pole locations (separation above
/// zero_tolerance), otherwise IllConditioned. The polynomial part is the
/// quotient of the long division; recombining reproduces the input within
/// the round-trip tolerance.
PoleExpansion partial_fractions(const Poly<Cplx>& numerator,
                                const std::vector<RootCluster>& denominator_roots,
                                const PrecisionContext& ctx);

/// q |-> q' + h'(x) q, re-expanded in closed form: around each pole,
/// h'(x) = (x-z)^2 + 2z(x-z) + (z^2+a), so the pole order rises by exactly
/// one (absent cancellation) and byproducts land at lower orders and in the
/// polynomial part.
PoleExpansion apply_D(const PoleExpansion& q, const CubicWeight& w);

} // namespace wavecoh

#endif
