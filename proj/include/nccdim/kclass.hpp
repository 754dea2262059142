#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nccdim/curve.hpp"
#include "nccdim/divisor.hpp"
#include "nccdim/error.hpp"
#include "nccdim/rational.hpp"

namespace nccdim {

// Numerical K-theory class in alpha-coordinates: rank, exact orbifold
// degree, and per stacky point the character multiplicities m_1..m_{e-1}.
// The multiplicity of the trivial character (index 0) is implicit: it is
// rank minus the sum of the stored entries. Negative entries are allowed
// (virtual classes).
struct KClass {
    std::int64_t rank = 0;
    Rational degree;
    std::vector<std::vector<std::int64_t>> locals;

    static KClass zero(const CurveSignature& sig) {
        KClass a;
        a.locals.reserve(static_cast<std::size_t>(sig.stacky_count()));
        for (int e : sig.orders())
            a.locals.emplace_back(static_cast<std::size_t>(e - 1), 0);
        return a;
    }

    // Class of the structure sheaf.
    static KClass trivial(const CurveSignature& sig) {
        KClass a = zero(sig);
        a.rank = 1;
        return a;
    }

    int order_at(std::size_t i) const { return static_cast<int>(locals[i].size()) + 1; }

    bool is_zero() const noexcept {
        if (rank != 0 || !degree.is_zero()) return false;
        for (const auto& v : locals)
            for (std::int64_t m : v)
                if (m != 0) return false;
        return true;
    }

    bool shape_matches(const KClass& other) const noexcept {
        if (locals.size() != other.locals.size()) return false;
        for (std::size_t i = 0; i < locals.size(); ++i)
            if (locals[i].size() != other.locals[i].size()) return false;
        return true;
    }

    friend bool operator==(const KClass& a, const KClass& b) noexcept {
        return a.rank == b.rank && a.degree == b.degree && a.locals == b.locals;
    }
    friend bool operator!=(const KClass& a, const KClass& b) noexcept { return !(a == b); }
};

// Lies in the heart's effective cone for the purposes of phases and HN
// data: positive rank, or torsion (rank 0) of positive degree.
inline bool heart_effective(const KClass& a) noexcept {
    return a.rank > 0 || (a.rank == 0 && a.degree > Rational(0));
}

// All character multiplicities nonnegative, including the implicit index 0.
inline bool is_effective(const KClass& a) noexcept {
    if (a.rank < 0) return false;
    for (const auto& v : a.locals) {
        std::int64_t sum = 0;
        for (std::int64_t m : v) {
            if (m < 0) return false;
            sum += m;
        }
        if (a.rank - sum < 0) return false;
    }
    return true;
}

namespace detail {
// sum_i ((sum_j j*m_ij) mod e_i) / e_i — the fractional part the local
// characters force on the degree.
inline Rational fractional_degree_part(const KClass& a) {
    Rational frac(0);
    for (std::size_t i = 0; i < a.locals.size(); ++i) {
        const std::int64_t e = a.order_at(i);
        std::int64_t s = 0;
        for (std::size_t j = 0; j < a.locals[i].size(); ++j)
            s += static_cast<std::int64_t>(j + 1) * a.locals[i][j];
        frac += Rational(euclid_mod(s, e), e);
    }
    return frac;
}

inline void check_shapes(const KClass& a, const KClass& b, const char* op) {
    if (!a.shape_matches(b))
        throw ValidationError(op, "operands share one signature",
                              "local character shapes differ");
}

inline void check_shape_against(const KClass& a, const CurveSignature& sig, const char* op) {
    if (static_cast<int>(a.locals.size()) != sig.stacky_count())
        throw ValidationError(op, "class shaped by the signature",
                              "class has " + std::to_string(a.locals.size()) +
                                  " local vectors, signature has " +
                                  std::to_string(sig.stacky_count()) + " stacky points");
    for (std::size_t i = 0; i < a.locals.size(); ++i)
        if (a.order_at(i) != sig.orders()[i])
            throw ValidationError(op, "class shaped by the signature",
                                  "local vector " + std::to_string(i) + " has length " +
                                      std::to_string(a.locals[i].size()) + ", expected " +
                                      std::to_string(sig.orders()[i] - 1));
}
} // namespace detail

// degree minus the local fractional part must be an integer; this is the
// degree of the pushed-forward determinant on the coarse curve.
inline bool integrality_holds(const KClass& a) {
    return (a.degree - detail::fractional_degree_part(a)).is_integer();
}

inline void validate_kclass(const KClass& a, const CurveSignature& sig) {
    detail::check_shape_against(a, sig, "validate_kclass");
    if (sig.orders_lcm() % a.degree.den() != 0)
        throw ValidationError("validate_kclass", "degree denominator divides lcm(e_i)",
                              "denominator " + std::to_string(a.degree.den()) +
                                  " does not divide " + std::to_string(sig.orders_lcm()));
    if (!integrality_holds(a))
        throw ValidationError("validate_kclass", "degree integrality",
                              "degree minus the local fractional part is not an integer");
}

// Class of the line bundle O(D). At stacky point i with coefficient n the
// character is z -> z^n, i.e. the indicator of n mod e_i.
inline KClass line_bundle_class(const WeilDivisor& d, const CurveSignature& sig) {
    detail::check_divisor(d, sig, "line_bundle_class");
    KClass a = KClass::trivial(sig);
    a.degree = divisor_degree(d, sig);
    for (const auto& [p, c] : d.coefficients()) {
        if (p.kind != PointId::Kind::Stacky) continue;
        std::int64_t r = euclid_mod(c, sig.order_at(p.index));
        if (r != 0) a.locals[static_cast<std::size_t>(p.index)][static_cast<std::size_t>(r - 1)] += 1;
    }
    return a;
}

inline KClass add(const KClass& a, const KClass& b) {
    detail::check_shapes(a, b, "add");
    KClass out = a;
    out.rank += b.rank;
    out.degree += b.degree;
    for (std::size_t i = 0; i < out.locals.size(); ++i)
        for (std::size_t j = 0; j < out.locals[i].size(); ++j)
            out.locals[i][j] += b.locals[i][j];
    return out;
}

// Product in the numerical K-ring. Rank multiplies, degree follows the
// determinant identity deg(a (x) b) = rk(a) deg(b) + rk(b) deg(a), and the
// full character vectors convolve cyclically mod e at every stacky point.
inline KClass tensor(const KClass& a, const KClass& b) {
    detail::check_shapes(a, b, "tensor");
    KClass out;
    out.rank = a.rank * b.rank;
    out.degree = Rational(a.rank) * b.degree + Rational(b.rank) * a.degree;
    out.locals.reserve(a.locals.size());
    for (std::size_t i = 0; i < a.locals.size(); ++i) {
        const std::size_t e = a.locals[i].size() + 1;
        std::vector<std::int64_t> af(e), bf(e), cf(e, 0);
        af[0] = a.rank;
        bf[0] = b.rank;
        for (std::size_t j = 1; j < e; ++j) {
            af[0] -= a.locals[i][j - 1];
            bf[0] -= b.locals[i][j - 1];
            af[j] = a.locals[i][j - 1];
            bf[j] = b.locals[i][j - 1];
        }
        for (std::size_t x = 0; x < e; ++x)
            for (std::size_t y = 0; y < e; ++y)
                cf[(x + y) % e] += af[x] * bf[y];
        out.locals.emplace_back(cf.begin() + 1, cf.end());
    }
    return out;
}

// Dual class: degree negates and each character index reverses (j -> e-j).
inline KClass dual(const KClass& a) {
    KClass out = a;
    out.degree = -a.degree;
    for (std::size_t i = 0; i < out.locals.size(); ++i) {
        const std::size_t len = out.locals[i].size();
        for (std::size_t j = 0; j < len; ++j)
            out.locals[i][j] = a.locals[i][len - 1 - j];
    }
    return out;
}

// Coordinates on the algebraic Chen-Ruan lattice: integer rank, integer
// coarse degree, and the same local multiplicities.
struct CRVector {
    std::int64_t rank = 0;
    std::int64_t coarse_degree = 0;
    std::vector<std::vector<std::int64_t>> locals;

    friend bool operator==(const CRVector& a, const CRVector& b) noexcept {
        return a.rank == b.rank && a.coarse_degree == b.coarse_degree && a.locals == b.locals;
    }
};

inline CRVector ch_orb(const KClass& a, const CurveSignature& sig) {
    detail::check_shape_against(a, sig, "ch_orb");
    Rational coarse = a.degree - detail::fractional_degree_part(a);
    if (!coarse.is_integer())
        throw ValidationError("ch_orb", "degree integrality",
                              "degree minus the local fractional part is not an integer");
    CRVector v;
    v.rank = a.rank;
    v.coarse_degree = coarse.num();
    v.locals = a.locals;
    return v;
}

inline KClass ch_orb_inverse(const CRVector& v, const CurveSignature& sig) {
    KClass a;
    a.rank = v.rank;
    a.locals = v.locals;
    detail::check_shape_against(a, sig, "ch_orb_inverse");
    a.degree = Rational(v.coarse_degree) + detail::fractional_degree_part(a);
    return a;
}

// Slope degree/rank, with +infinity on torsion (rank 0) classes.
struct Slope {
    bool infinite = false;
    Rational value;

    static Slope inf() {
        Slope s;
        s.infinite = true;
        return s;
    }
    static Slope finite(Rational v) {
        Slope s;
        s.value = v;
        return s;
    }

    std::string to_string() const { return infinite ? "inf" : value.to_string(); }

    friend bool operator==(const Slope& a, const Slope& b) noexcept {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator<(const Slope& a, const Slope& b) noexcept {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    friend bool operator!=(const Slope& a, const Slope& b) noexcept { return !(a == b); }
    friend bool operator>(const Slope& a, const Slope& b) noexcept { return b < a; }
    friend bool operator<=(const Slope& a, const Slope& b) noexcept { return !(b < a); }
    friend bool operator>=(const Slope& a, const Slope& b) noexcept { return !(a < b); }
};

inline Slope slope(const KClass& a) {
    if (a.is_zero())
        throw ValidationError("slope", "class nonzero", "slope of the zero class");
    if (a.rank < 0)
        throw ValidationError("slope", "rank >= 0", "negative rank " + std::to_string(a.rank));
    if (a.rank == 0) return Slope::inf();
    return Slope::finite(a.degree / Rational(a.rank));
}

// Class of the standard generating sheaf
//   (x)_i (+)_{j=0..e_i-1} O(j p_i)  (+)  (x)_i (+)_{j=0..e_i-1} O(-j p_i),
// of rank 2 prod e_i. With no stacky points this is O (+) O.
inline KClass std_generating_class(const CurveSignature& sig) {
    KClass pos = KClass::trivial(sig);
    KClass neg = KClass::trivial(sig);
    for (int i = 0; i < sig.stacky_count(); ++i) {
        KClass pos_i = KClass::zero(sig);
        KClass neg_i = KClass::zero(sig);
        for (int j = 0; j < sig.order_at(i); ++j) {
            WeilDivisor d;
            d.set(PointId::stacky(i), j);
            pos_i = add(pos_i, line_bundle_class(d, sig));
            d.set(PointId::stacky(i), -j);
            neg_i = add(neg_i, line_bundle_class(d, sig));
        }
        pos = tensor(pos, pos_i);
        neg = tensor(neg, neg_i);
    }
    return add(pos, neg);
}

namespace detail {
// Rank-1 class pulled back from the coarse curve: trivial local characters.
inline KClass coarse_line_class(const CurveSignature& sig, std::int64_t degree) {
    KClass a = KClass::trivial(sig);
    a.degree = Rational(degree);
    return a;
}
} // namespace detail

// The four summand classes of the one-step generator
//   (pi*L^-1 (x) E) (+) E (+) (pi*L (x) E~) (+) (pi*L^2 (x) E~)
// built on E = (+)_i (+)_{j=0..e_i-1} O(-j p_i) (E = O when n = 0) and a
// coarse line bundle L of degree at least 8g + 4n.
inline std::array<KClass, 4> orlov_generator_class(const CurveSignature& sig, std::int64_t l_degree) {
    const std::int64_t bound = 8 * static_cast<std::int64_t>(sig.genus()) + 4 * sig.stacky_count();
    if (l_degree < bound)
        throw ValidationError("orlov_generator_class", "deg(L) >= 8g + 4n",
                              "deg(L) = " + std::to_string(l_degree) + " is below " +
                                  std::to_string(bound) + " = 8*" + std::to_string(sig.genus()) +
                                  " + 4*" + std::to_string(sig.stacky_count()));
    KClass e_bundle;
    if (sig.stacky_count() == 0) {
        e_bundle = KClass::trivial(sig);
    } else {
        e_bundle = KClass::zero(sig);
        for (int i = 0; i < sig.stacky_count(); ++i)
            for (int j = 0; j < sig.order_at(i); ++j) {
                WeilDivisor d;
                d.set(PointId::stacky(i), -j);
                e_bundle = add(e_bundle, line_bundle_class(d, sig));
            }
    }
    return {
        tensor(detail::coarse_line_class(sig, -l_degree), e_bundle),
        e_bundle,
        tensor(detail::coarse_line_class(sig, l_degree), dual(e_bundle)),
        tensor(detail::coarse_line_class(sig, 2 * l_degree), dual(e_bundle)),
    };
}

} // namespace nccdim
