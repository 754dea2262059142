#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "nccdim/curve.hpp"
#include "nccdim/error.hpp"
#include "nccdim/kclass.hpp"
#include "nccdim/rational.hpp"

namespace nccdim {

// An object remembered through its HN subquotients, listed from top slope
// to bottom. Each piece is a nonzero heart-effective class standing for a
// semistable subquotient (semistability is the caller's assertion; it is
// not visible at K-class level). At most one torsion piece may appear and
// it comes first, at slope +infinity.
struct FilteredObject {
    std::vector<KClass> pieces;

    friend bool operator==(const FilteredObject& a, const FilteredObject& b) noexcept {
        return a.pieces == b.pieces;
    }
};

inline void validate_filtered(const FilteredObject& f) {
    bool first = true;
    Slope prev;
    for (const auto& piece : f.pieces) {
        if (piece.is_zero() || !heart_effective(piece))
            throw ValidationError("FilteredObject", "pieces nonzero and heart-effective",
                                  "invalid piece");
        const Slope s = slope(piece);
        if (!first && !(s < prev))
            throw ValidationError("FilteredObject", "slopes strictly decreasing",
                                  "slopes not strictly decreasing");
        prev = s;
        first = false;
    }
}

// Total class of the underlying object.
inline KClass total_class(const FilteredObject& f, const CurveSignature& sig) {
    KClass t = KClass::zero(sig);
    for (const auto& piece : f.pieces) t = add(t, piece);
    return t;
}

// Normal form of an unordered bag of semistable pieces: sort by slope
// descending, merge equal slopes by class addition, and fold all torsion
// pieces into a single leading one. The total class is preserved.
inline FilteredObject hn_normalize(const std::vector<KClass>& pieces) {
    std::vector<KClass> torsion;
    std::map<Rational, KClass> by_slope;
    for (const auto& piece : pieces) {
        if (piece.is_zero() || !heart_effective(piece))
            throw ValidationError("hn_normalize", "pieces nonzero and heart-effective",
                                  "invalid piece");
        const Slope s = slope(piece);
        if (s.infinite) {
            if (torsion.empty())
                torsion.push_back(piece);
            else
                torsion[0] = add(torsion[0], piece);
        } else {
            auto it = by_slope.find(s.value);
            if (it == by_slope.end())
                by_slope.emplace(s.value, piece);
            else
                it->second = add(it->second, piece);
        }
    }
    FilteredObject out;
    out.pieces = std::move(torsion);
    for (auto it = by_slope.rbegin(); it != by_slope.rend(); ++it)
        out.pieces.push_back(it->second);
    validate_filtered(out);
    return out;
}

// HN data of the dual object: reverse the list and dualize every piece,
// so the slopes are the negations of the originals in reversed order.
// Only defined without a torsion piece.
inline FilteredObject dual_hn(const FilteredObject& f) {
    validate_filtered(f);
    for (const auto& piece : f.pieces)
        if (piece.rank == 0)
            throw ValidationError("dual_hn", "no torsion piece",
                                  "dual of a filtration with a torsion piece");
    FilteredObject out;
    out.pieces.reserve(f.pieces.size());
    for (auto it = f.pieces.rbegin(); it != f.pieces.rend(); ++it)
        out.pieces.push_back(dual(*it));
    validate_filtered(out);
    return out;
}

// Twist by a rank-1 class: every piece tensors with it and every finite
// slope shifts by exactly deg(L).
inline FilteredObject twist(const FilteredObject& f, const KClass& line) {
    validate_filtered(f);
    if (line.rank != 1)
        throw ValidationError("twist", "rk(L) = 1",
                              "twisting class has rank " + std::to_string(line.rank));
    FilteredObject out;
    out.pieces.reserve(f.pieces.size());
    for (const auto& piece : f.pieces) out.pieces.push_back(tensor(piece, line));
    validate_filtered(out);
    return out;
}

struct OrlovSplit {
    FilteredObject top;    // pieces of slope >= 4g + 2n (torsion included)
    FilteredObject bottom; // the rest
};

// Splits the filtration at the threshold 4g + 2n, inclusively: top keeps
// the pieces of slope >= 4g + 2n and may be empty when no piece reaches it.
inline OrlovSplit orlov_split(const FilteredObject& f, const CurveSignature& sig) {
    validate_filtered(f);
    const Slope threshold =
        Slope::finite(Rational(4 * static_cast<std::int64_t>(sig.genus()) + 2 * sig.stacky_count()));
    OrlovSplit out;
    for (const auto& piece : f.pieces) {
        if (slope(piece) >= threshold)
            out.top.pieces.push_back(piece);
        else
            out.bottom.pieces.push_back(piece);
    }
    return out;
}

enum class Cohomology { Zero, Unknown };

struct VanishingReport {
    Cohomology h0 = Cohomology::Unknown;
    Cohomology h1 = Cohomology::Unknown;
};

// Sound three-valued vanishing oracle for a class the caller asserts to be
// semistable: h0 vanishes when the slope is negative, h1 when the slope
// exceeds deg(omega) (Serre duality turns it into an h0 of negative
// slope). Torsion classes report h1 = Zero directly. Anything else stays
// Unknown; the oracle never claims Zero where a section can exist.
inline VanishingReport vanishing_oracle(const KClass& a, const CurveSignature& sig) {
    if (!heart_effective(a))
        throw ValidationError("vanishing_oracle", "rank > 0, or rank = 0 with degree > 0",
                              "class is not in the heart's effective cone");
    VanishingReport rep;
    if (a.rank == 0) {
        rep.h1 = Cohomology::Zero;
        return rep;
    }
    const Rational mu = a.degree / Rational(a.rank);
    if (mu < Rational(0)) rep.h0 = Cohomology::Zero;
    if (mu > omega_degree(sig)) rep.h1 = Cohomology::Zero;
    return rep;
}

// Convenience form of the high-slope vanishing rule: a semistable class of
// slope >= 2g + n keeps h1 = 0 after twisting by any rank-1 class of
// degree >= -1. Evaluated through the general oracle on the twisted class,
// of which this rule is a special case (deg(omega) < 2g + n - 1 always).
inline bool h1_zero_after_twist(const KClass& a, const KClass& line, const CurveSignature& sig) {
    if (a.rank <= 0)
        throw ValidationError("h1_zero_after_twist", "rk > 0", "nonpositive rank");
    const Rational mu = a.degree / Rational(a.rank);
    const Rational floor_mu(2 * static_cast<std::int64_t>(sig.genus()) + sig.stacky_count());
    if (mu < floor_mu)
        throw ValidationError("h1_zero_after_twist", "mu(F) >= 2g + n",
                              "slope " + mu.to_string() + " below " + floor_mu.to_string());
    if (line.rank != 1)
        throw ValidationError("h1_zero_after_twist", "rk(L) = 1", "twisting class not a line class");
    if (line.degree < Rational(-1))
        throw ValidationError("h1_zero_after_twist", "deg(L) >= -1",
                              "twist degree " + line.degree.to_string() + " below -1");
    return vanishing_oracle(tensor(a, line), sig).h1 == Cohomology::Zero;
}

// Degree bound guaranteeing a two-section surjection onto a line bundle on
// a smooth curve of genus >= 1: true iff d >= 2g.
inline bool twosections_threshold(int g, std::int64_t d) {
    if (g < 1)
        throw ValidationError("twosections_threshold", "genus >= 1",
                              "genus " + std::to_string(g) + " below 1");
    return d >= 2 * static_cast<std::int64_t>(g);
}

} // namespace nccdim
