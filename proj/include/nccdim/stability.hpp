#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "nccdim/curve.hpp"
#include "nccdim/error.hpp"
#include "nccdim/kclass.hpp"
#include "nccdim/rational.hpp"

namespace nccdim {

// Parameters of the central charge Z(E) = -deg(E) + (beta + iH) rk(E).
struct StabParams {
    Rational beta;
    Rational h;

    static StabParams make(Rational beta, Rational h) {
        if (!(h > Rational(0)))
            throw ValidationError("StabParams", "H > 0",
                                  "H = " + h.to_string() + " is not positive");
        StabParams p;
        p.beta = beta;
        p.h = std::move(h);
        return p;
    }
};

struct ChargeValue {
    Rational re;
    Rational im;

    friend bool operator==(const ChargeValue& a, const ChargeValue& b) noexcept {
        return a.re == b.re && a.im == b.im;
    }
};

inline ChargeValue central_charge(const StabParams& p, const KClass& a) {
    ChargeValue z;
    z.re = -a.degree + p.beta * Rational(a.rank);
    z.im = p.h * Rational(a.rank);
    return z;
}

// Comparison tolerance for the floating-point phase quantities below.
inline constexpr double kPhaseTolerance = 1e-12;

namespace detail {
// arccot valued in (0, pi).
inline double arccot(double x) noexcept { return std::atan2(1.0, x); }

inline void check_heart_effective(const KClass& a, const char* op) {
    if (!heart_effective(a))
        throw ValidationError(op, "rank > 0, or rank = 0 with degree > 0",
                              "class is not in the heart's effective cone");
}
} // namespace detail

// Phase in (0, 1]: torsion classes sit at exactly 1, positive-rank classes
// at (1/pi) arccot((beta - mu)/H).
inline double phase(const StabParams& p, const KClass& a) {
    detail::check_heart_effective(a, "phase");
    if (a.rank == 0) return 1.0;
    const double x = ((p.beta - a.degree / Rational(a.rank)) / p.h).to_double();
    return detail::arccot(x) / M_PI;
}

// Support constant min{1/e_i^2}, with the empty minimum taken as 1.
inline Rational support_lower_bound(const CurveSignature& sig) {
    if (sig.stacky_count() == 0) return Rational(1);
    const int emax = sig.orders().back();
    return Rational(1, static_cast<std::int64_t>(emax) * emax);
}

struct SupportReport {
    std::uint64_t checked = 0;
    Rational min_ratio;
    bool ok = false;
    // Lexicographically first vector attaining min_ratio, in coordinate
    // order (rank, coarse degree, flattened locals).
    std::vector<std::int64_t> argmin;
};

// Verifies |Z_{0,1}(v)|^2 >= min{1/e_i^2} * ||v||^2 over every nonzero
// Chen-Ruan vector with coordinates in [0, bound], in exact arithmetic
// (squares throughout, no roots). min_ratio is the least squared ratio
// |Z|^2 / ||v||^2 encountered.
inline SupportReport check_support(const CurveSignature& sig, int bound) {
    if (bound < 1)
        throw ValidationError("check_support", "bound >= 1",
                              "bound " + std::to_string(bound) + " below 1");
    const int dims = cr_rank(sig);
    const std::int64_t lambda = sig.orders_lcm();
    if (lambda > 1000000)
        throw ValidationError("check_support", "lcm(e_i) <= 10^6",
                              "lcm " + std::to_string(lambda) + " too large for exact enumeration");
    {
        double count = 1.0;
        for (int t = 0; t < dims; ++t) count *= static_cast<double>(bound) + 1.0;
        if (count > 2147483648.0)
            throw ValidationError("check_support", "(bound+1)^cr_rank <= 2^31",
                                  "enumeration of " + std::to_string(count) + " vectors is too large");
    }

    // Weight of coordinate k in deg(E)*lambda: the coarse degree counts
    // with weight lambda and local coordinate j at point i with j*lambda/e_i.
    std::vector<std::int64_t> deg_weight(static_cast<std::size_t>(dims), 0);
    deg_weight[1] = lambda;
    {
        std::size_t k = 2;
        for (int i = 0; i < sig.stacky_count(); ++i)
            for (int j = 1; j < sig.order_at(i); ++j)
                deg_weight[k++] = static_cast<std::int64_t>(j) * (lambda / sig.order_at(i));
    }

    SupportReport rep;
    const Rational c = support_lower_bound(sig);
    rep.ok = true;

    std::vector<std::int64_t> v(static_cast<std::size_t>(dims), 0);
    using I = __int128;
    I best_num = 0, best_den = 0; // ratio numerator/denominator, den = ||v||^2 * lambda^2
    bool have_best = false;
    const I lambda2 = I(lambda) * lambda;

    // Odometer in lexicographic order, last coordinate fastest.
    for (;;) {
        int k = dims - 1;
        while (k >= 0 && v[static_cast<std::size_t>(k)] == bound) {
            v[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
        ++v[static_cast<std::size_t>(k)];

        ++rep.checked;
        I deg_scaled = 0; // deg * lambda
        I norm2 = 0;
        for (int t = 0; t < dims; ++t) {
            const std::int64_t x = v[static_cast<std::size_t>(t)];
            deg_scaled += I(deg_weight[static_cast<std::size_t>(t)]) * x;
            norm2 += I(x) * x;
        }
        const I rank_scaled = I(v[0]) * lambda;
        const I z2 = deg_scaled * deg_scaled + rank_scaled * rank_scaled; // |Z|^2 * lambda^2
        const I den = norm2 * lambda2;
        if (!have_best || z2 * best_den < best_num * den) {
            have_best = true;
            best_num = z2;
            best_den = den;
            rep.argmin = v;
        }
    }
    rep.min_ratio = Rational::reduce(best_num, best_den);
    rep.ok = rep.min_ratio >= c;
    return rep;
}

namespace detail {
// (1/pi) |arccot(x - t) - arccot(x)|.
inline double phase_gap_at(double x, double t) noexcept {
    return std::fabs(arccot(x - t) - arccot(x)) / M_PI;
}
} // namespace detail

// Phase displacement of a class under tensoring by the canonical bundle:
// zero on torsion, otherwise (1/pi)|arccot(x - d/H) - arccot(x)| at
// x = (beta - mu)/H with d = deg(omega).
inline double serre_twist_phase_gap(const StabParams& p, const KClass& a, const CurveSignature& sig) {
    detail::check_heart_effective(a, "serre_twist_phase_gap");
    if (a.rank == 0) return 0.0;
    const double x = ((p.beta - a.degree / Rational(a.rank)) / p.h).to_double();
    const double t = (omega_degree(sig) / p.h).to_double();
    return detail::phase_gap_at(x, t);
}

// Deterministic sampled supremum of the twist phase gap over
// x in [-1e6, 1e6]. The grid concentrates around x = t/2, where the gap
// peaks, and a nonzero seed adds uniformly drawn sample points.
inline double sampled_sup_phase_gap(const Rational& d, double h, std::uint64_t seed = 0) {
    if (!(h > 0.0))
        throw ValidationError("sampled_sup_phase_gap", "H > 0", "nonpositive H");
    const double t = std::fabs(d.to_double()) / h;
    double sup = 0.0;
    auto probe = [&](double x) {
        if (x < -1e6 || x > 1e6) return;
        const double g = detail::phase_gap_at(x, t);
        if (g > sup) sup = g;
    };
    const double center = t / 2.0;
    probe(center);
    for (double delta = 1e-9; delta <= 1e3; delta *= 10.0) {
        probe(center - delta);
        probe(center + delta);
    }
    for (int k = -60; k <= 60; ++k) probe(static_cast<double>(k) * (1e6 / 60.0));
    if (seed != 0) {
        std::uint64_t state = seed;
        for (int k = 0; k < 1024; ++k) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            const double u = static_cast<double>(state >> 11) / 9007199254740992.0;
            probe((2.0 * u - 1.0) * 1e6);
        }
    }
    return sup;
}

// Least H above which every twist phase gap stays below eps:
// |d| / (2 tan(pi eps / 2)), and 0 when d = 0 (any H works). The sup of
// the gap over x is attained at x = t/2 with value (2/pi) arctan(t/2),
// which yields the closed form; it is re-checked here against the sampled
// supremum just above the returned value.
inline double min_h_for_omega(const Rational& d, const Rational& eps) {
    if (!(eps > Rational(0)) || !(eps < Rational(1)))
        throw ValidationError("min_h_for_omega", "0 < eps < 1",
                              "eps = " + eps.to_string() + " out of range");
    if (d.is_zero()) return 0.0;
    const double e = eps.to_double();
    const double h = std::fabs(d.to_double()) / (2.0 * std::tan(M_PI * e / 2.0));
    const double sup = sampled_sup_phase_gap(d, h * (1.0 + 1e-6));
    if (!(sup < e))
        throw InternalError("min_h_for_omega: sampled sup does not drop below eps above the bound");
    return h;
}

inline double min_h_for_epsilon(const CurveSignature& sig, const Rational& eps) {
    return min_h_for_omega(omega_degree(sig), eps);
}

// Dimension of the stability space carved out by the Chen-Ruan lattice.
inline int stab_space_dim(const CurveSignature& sig) { return cr_rank(sig); }

} // namespace nccdim
