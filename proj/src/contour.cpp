#include "wavecoh/contour.hpp"

#include <cmath>

#include "wavecoh/errors.hpp"

namespace wavecoh {

namespace {

constexpr double kClearanceBase = 0.1;

double clearance(const Cplx& z) { return kClearanceBase * (1.0 + abs(z).to_double()); }

struct GuardedPole {
    Cplx z;
    double delta;
};

// Clearance per pole, capped at 0.45x the nearest-neighbor distance so the
// detour discs stay pairwise disjoint (disjoint discs cut any leg in
// disjoint chords). Dense root sets of high-degree wave polynomials need
// this; the uncapped formula would make neighbouring discs overlap.
std::vector<GuardedPole> guard_poles(const std::vector<Cplx>& poles) {
    std::vector<GuardedPole> out;
    for (std::size_t i = 0; i < poles.size(); ++i) {
        double d = clearance(poles[i]);
        for (std::size_t j = 0; j < poles.size(); ++j) {
            if (j == i) continue;
            double sep = abs(poles[i] - poles[j]).to_double();
            if (sep > 0.0) d = std::min(d, 0.45 * sep);
        }
        out.push_back({poles[i], d});
    }
    return out;
}

BigFloat pi_frac(long num, long den, mpfr_prec_t prec) {
    return BigFloat::pi(prec) * num / den;
}

// Append the piece of the path from P to Q, detouring around poles whose
// clearance disc meets the open segment. Intervals are assumed disjoint
// (poles further apart than their clearances).
void append_leg(std::vector<ContourSegment>& out, const Cplx& P, const Cplx& Q,
                const std::vector<GuardedPole>& poles, mpfr_prec_t prec) {
    struct Detour {
        double t_in, t_out;
        Cplx entry, exit, z;
    };
    Cplx dirv = Q - P;
    BigFloat len2 = dirv.re * dirv.re + dirv.im * dirv.im;
    if (len2.is_zero()) return;

    std::vector<Detour> detours;
    for (const GuardedPole& gp : poles) {
        const Cplx& z = gp.z;
        BigFloat delta(gp.delta, prec);
        // projection parameter of z on the segment
        Cplx rel = z - P;
        BigFloat t = (rel.re * dirv.re + rel.im * dirv.im) / len2;
        Cplx foot = P + dirv * t;
        BigFloat d = abs(z - foot);
        if (!(d < delta)) continue;
        BigFloat halfchord = sqrt(delta * delta - d * d) / sqrt(len2);
        double t_in = (t - halfchord).to_double();
        double t_out = (t + halfchord).to_double();
        if (t_out <= 0.0 || t_in >= 1.0) continue; // disc misses the traversed part
        if (t_in < 0.0 || t_out > 1.0)
            throw IllConditioned("contour leg endpoint inside a pole clearance disc");
        Detour det;
        det.t_in = t_in;
        det.t_out = t_out;
        det.entry = P + dirv * (t - halfchord);
        det.exit = P + dirv * (t + halfchord);
        det.z = z;
        detours.push_back(det);
    }
    std::sort(detours.begin(), detours.end(),
              [](const Detour& a, const Detour& b) { return a.t_in < b.t_in; });
    for (std::size_t i = 0; i + 1 < detours.size(); ++i)
        if (detours[i].t_out > detours[i + 1].t_in)
            throw IllConditioned("overlapping pole detours: poles denser than their clearance");

    Cplx current = P;
    for (const auto& det : detours) {
        out.push_back({ContourSegment::Kind::Line, current, det.entry, Cplx(prec),
                       BigFloat(0.0, prec), BigFloat(0.0, prec), BigFloat(0.0, prec)});
        BigFloat phi0 = arg(det.entry - det.z);
        BigFloat phi1 = arg(det.exit - det.z);
        BigFloat radius = abs(det.entry - det.z);
        // swing the short way; when the pole sits dead on the line take the
        // left side
        BigFloat dphi = phi1 - phi0;
        BigFloat pi = BigFloat::pi(prec);
        if (dphi > pi) dphi -= pi * 2L;
        if (dphi < -pi) dphi += pi * 2L;
        if (abs(abs(dphi) - pi) < BigFloat(1e-9, prec)) dphi = pi;
        ContourSegment arc;
        arc.kind = ContourSegment::Kind::Arc;
        arc.center = det.z;
        arc.radius = radius;
        arc.phi0 = phi0;
        arc.phi1 = phi0 + dphi;
        out.push_back(arc);
        current = det.exit;
    }
    out.push_back({ContourSegment::Kind::Line, current, Q, Cplx(prec), BigFloat(0.0, prec),
                   BigFloat(0.0, prec), BigFloat(0.0, prec)});
}

// Corner point of the polyline. The origin unless a pole crowds it, in which
// case the corner moves to the first candidate outside every clearance disc,
// on the far side of the sector's wedge.
Cplx pick_junction(int j, const std::vector<GuardedPole>& poles, mpfr_prec_t prec) {
    double worst = 0.0;
    for (const GuardedPole& gp : poles) {
        double need = 1.5 * gp.delta;
        double have = abs(gp.z).to_double();
        if (have < need) worst = std::max(worst, need);
    }
    if (worst == 0.0) return Cplx(prec);

    double base = M_PI * (2.0 / 3.0 + 2.0 * j / 3.0) + M_PI; // opposite the wedge bisector
    for (double mag : {1.0, 1.7, 2.6, 3.6}) {
        for (double off : {0.0, 0.45, -0.45, 0.9, -0.9}) {
            Cplx cand = unit_dir(BigFloat(base + off, prec)) * BigFloat(mag * worst, prec);
            bool ok = true;
            for (const GuardedPole& gp : poles)
                if (abs(cand - gp.z).to_double() < 1.1 * gp.delta) ok = false;
            if (ok) return cand;
        }
    }
    throw IllConditioned("no admissible junction point: poles crowd the origin");
}

void guard_waypoint(Cplx& w, const std::vector<GuardedPole>& poles) {
    for (int pass = 0; pass < 8; ++pass) {
        bool moved = false;
        for (const GuardedPole& gp : poles) {
            double need = 1.15 * gp.delta;
            if (abs(w - gp.z).to_double() < need) {
                Cplx away = w - gp.z;
                double mag = abs(away).to_double();
                if (mag < 1e-12) away = Cplx(1.0, 0.5, w.re.prec());
                w = gp.z + away * BigFloat(need * 1.1 / std::max(mag, 1e-12), w.re.prec());
                moved = true;
            }
        }
        if (!moved) return;
    }
    throw IllConditioned("could not keep waypoint clear of poles");
}

} // namespace

BigFloat incoming_angle(int j, mpfr_prec_t prec) { return pi_frac(1 + 2 * j, 3, prec); }
BigFloat outgoing_angle(int j, mpfr_prec_t prec) { return pi_frac(3 + 2 * j, 3, prec); }

bool Sector::contains(const Cplx& z) const {
    double lo = M_PI * (-1.0 / 6.0 + 2.0 * j / 3.0);
    double hi = M_PI * (5.0 / 6.0 + 2.0 * j / 3.0);
    double th = arg(z).to_double();
    for (int k = -1; k <= 1; ++k) {
        double t = th + 2.0 * M_PI * k;
        if (lo < t && t < hi) return true;
    }
    return false;
}

Cplx Sector::bisector(mpfr_prec_t prec) const { return unit_dir(pi_frac(1 + 2 * j, 3, prec)); }

double truncation_radius(double a_mag, double u_bound, double decay_bits,
                         const std::vector<Cplx>& poles) {
    double target = decay_bits * std::log(2.0);
    double c = a_mag + u_bound;
    // increasing for r > sqrt(c); bisect upward
    double lo = std::sqrt(c) + 1e-9;
    double hi = std::cbrt(3.0 * target) + 2.0 * std::sqrt(c + 1.0) + 2.0;
    auto f = [&](double r) { return r * r * r / 3.0 - c * r; };
    while (f(hi) < target) hi *= 1.5;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < target) lo = mid;
        else hi = mid;
    }
    double r = hi * 1.02;
    for (const Cplx& z : poles) r = std::max(r, abs(z).to_double() * 1.2 + 1.0);
    return r;
}

Contour build_contour(int j, const std::vector<Cplx>& poles, const CubicWeight& w,
                      const PrecisionContext& ctx, double u_bound) {
    const mpfr_prec_t prec = ctx.mantissa_bits;
    Contour c;
    c.j = j;
    double radius = truncation_radius(abs(w.a).to_double(), u_bound,
                                      static_cast<double>(ctx.mantissa_bits) + 32.0, poles);
    c.truncation_radius = BigFloat(radius, prec);

    Cplx far_in = unit_dir(incoming_angle(j, prec)) * c.truncation_radius;
    Cplx far_out = unit_dir(outgoing_angle(j, prec)) * c.truncation_radius;
    std::vector<GuardedPole> guarded = guard_poles(poles);
    Cplx junction = pick_junction(j, guarded, prec);

    append_leg(c.segments, far_in, junction, guarded, prec);
    append_leg(c.segments, junction, far_out, guarded, prec);
    return c;
}

Contour build_half_contour(int j, const Cplx& x, const std::vector<Cplx>& poles,
                           const CubicWeight& w, const PrecisionContext& ctx) {
    const mpfr_prec_t prec = ctx.mantissa_bits;
    std::vector<GuardedPole> guarded = guard_poles(poles);
    for (const GuardedPole& gp : guarded)
        if (abs(x - gp.z).to_double() < gp.delta)
            throw IllConditioned("half-contour endpoint inside a pole clearance disc");

    Contour c;
    c.j = j;
    c.endpoint = x;
    double radius = truncation_radius(abs(w.a).to_double(), 0.0,
                                      static_cast<double>(ctx.mantissa_bits) + 32.0, poles);
    radius = std::max(radius, abs(x).to_double() * 1.2 + 1.0);
    c.truncation_radius = BigFloat(radius, prec);

    Cplx far_in = unit_dir(incoming_angle(j, prec)) * c.truncation_radius;

    // When x sits close to the incoming ray, the chord from the far point is
    // itself admissible; routing through the origin would retrace the ray
    // and cancel catastrophically.
    double th_in = M_PI * (1.0 / 3.0 + 2.0 * j / 3.0);
    double dth = std::abs(std::remainder(arg(x).to_double() - th_in, 2.0 * M_PI));
    if (dth < M_PI / 6.0 && abs(x).to_double() > 1e-9) {
        append_leg(c.segments, far_in, x, guarded, prec);
        return c;
    }

    Cplx junction = pick_junction(j, guarded, prec);
    append_leg(c.segments, far_in, junction, guarded, prec);
    append_leg(c.segments, junction, x, guarded, prec);
    return c;
}

Contour build_contour_variant(int j, const std::vector<Cplx>& poles, const CubicWeight& w,
                              const PrecisionContext& ctx, double u_bound) {
    const mpfr_prec_t prec = ctx.mantissa_bits;
    Contour c;
    c.j = j;
    double radius = truncation_radius(abs(w.a).to_double(), u_bound,
                                      static_cast<double>(ctx.mantissa_bits) + 32.0, poles);
    c.truncation_radius = BigFloat(radius, prec);

    double th_in = M_PI * (1.0 / 3.0 + 2.0 * j / 3.0);
    double th_out = M_PI * (1.0 + 2.0 * j / 3.0);
    Cplx far_in = unit_dir(incoming_angle(j, prec)) * c.truncation_radius;
    Cplx far_out = unit_dir(outgoing_angle(j, prec)) * c.truncation_radius;
    Cplx w1 = unit_dir(BigFloat(th_in - 0.25, prec)) * BigFloat(0.9, prec);
    Cplx w2 = unit_dir(BigFloat(th_out + 0.3, prec)) * BigFloat(0.7, prec);
    std::vector<GuardedPole> guarded = guard_poles(poles);
    guard_waypoint(w1, guarded);
    guard_waypoint(w2, guarded);

    append_leg(c.segments, far_in, w1, guarded, prec);
    append_leg(c.segments, w1, w2, guarded, prec);
    append_leg(c.segments, w2, far_out, guarded, prec);
    return c;
}

QuadratureResult integrate_along(const Contour& contour, const Integrand& f,
                                 const BigFloat& abs_tol, long max_panels,
                                 const PrecisionContext& ctx) {
    QuadratureResult total;
    total.value = Cplx(ctx.mantissa_bits);
    total.error_estimate = BigFloat(0.0, ctx.mantissa_bits);
    if (contour.segments.empty()) return total;
    BigFloat per_segment = abs_tol / static_cast<long>(contour.segments.size());
    long per_budget = max_panels / static_cast<long>(contour.segments.size()) + 16;
    for (const auto& seg : contour.segments) {
        if (seg.kind == ContourSegment::Kind::Line)
            total += integrate_segment(f, seg.a, seg.b, per_segment, per_budget, ctx);
        else
            total += integrate_arc(f, seg.center, seg.radius, seg.phi0, seg.phi1, per_segment,
                                   per_budget, ctx);
    }
    return total;
}

BigFloat contour_mass(const Contour& contour, const Integrand& f, const PrecisionContext& ctx) {
    BigFloat mass(0.0, ctx.mantissa_bits);
    for (const auto& seg : contour.segments) {
        if (seg.kind == ContourSegment::Kind::Line) {
            // split long legs so the one-pass estimate sees the peak near the
            // origin rather than averaging it away
            Cplx mid = (seg.a + seg.b) / 2L;
            mass += segment_mass(f, seg.a, mid, ctx);
            mass += segment_mass(f, mid, seg.b, ctx);
        } else {
            mass += arc_mass(f, seg.center, seg.radius, seg.phi0, seg.phi1, ctx);
        }
    }
    return mass;
}

} // namespace wavecoh
