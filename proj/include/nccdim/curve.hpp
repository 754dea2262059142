#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nccdim/error.hpp"
#include "nccdim/rational.hpp"

namespace nccdim {

// An orbifold curve reduced to the data all invariants here depend on:
// the genus g of the coarse curve and the orders e_i >= 2 of the stacky
// points. Orders are stored sorted ascending, so two signatures are equal
// iff genus and sorted orders are equal. Order-1 entries describe ordinary
// points and are dropped at construction (with a warning).
class CurveSignature {
public:
    static CurveSignature make(int genus, std::vector<int> orders,
                               std::vector<std::string>* warnings = nullptr) {
        if (genus < 0)
            throw ValidationError("CurveSignature", "genus >= 0",
                                  "genus " + std::to_string(genus) + " is negative");
        std::vector<int> kept;
        kept.reserve(orders.size());
        for (int e : orders) {
            if (e <= 0)
                throw ValidationError("CurveSignature", "every order >= 2",
                                      "order " + std::to_string(e) + " is not positive");
            if (e == 1) {
                if (warnings)
                    warnings->push_back("dropped order-1 entry: an order-1 point is an ordinary point");
                continue;
            }
            kept.push_back(e);
        }
        std::sort(kept.begin(), kept.end());
        CurveSignature sig;
        sig.genus_ = genus;
        sig.orders_ = std::move(kept);
        return sig;
    }

    int genus() const noexcept { return genus_; }
    const std::vector<int>& orders() const noexcept { return orders_; }
    int stacky_count() const noexcept { return static_cast<int>(orders_.size()); }

    int order_at(int i) const {
        if (i < 0 || i >= stacky_count())
            throw ValidationError("CurveSignature::order_at", "stacky index in range",
                                  "index " + std::to_string(i) + " out of range for " +
                                      std::to_string(stacky_count()) + " stacky points");
        return orders_[static_cast<std::size_t>(i)];
    }

    std::int64_t orders_lcm() const {
        std::int64_t l = 1;
        for (int e : orders_) l = checked_lcm(l, e);
        return l;
    }

    friend bool operator==(const CurveSignature& a, const CurveSignature& b) noexcept {
        return a.genus_ == b.genus_ && a.orders_ == b.orders_;
    }
    friend bool operator!=(const CurveSignature& a, const CurveSignature& b) noexcept {
        return !(a == b);
    }

private:
    CurveSignature() : genus_(0) {}
    int genus_;
    std::vector<int> orders_;
};

// deg(omega) = 2g - 2 + sum (e_i - 1)/e_i.
inline Rational omega_degree(const CurveSignature& sig) {
    Rational d(2 * static_cast<std::int64_t>(sig.genus()) - 2);
    for (int e : sig.orders()) d += Rational(e - 1, e);
    return d;
}

// Rank of the algebraic Chen-Ruan lattice: 2 + sum (e_i - 1).
inline int cr_rank(const CurveSignature& sig) {
    int r = 2;
    for (int e : sig.orders()) r += e - 1;
    return r;
}

// The five dimension invariants of a bounded derived category, as this
// library reports them. Integers for hdim/rdim/ddim, exact rationals for
// the Serre and global dimensions.
struct DimensionReport {
    int hdim = 0;
    int rdim = 0;
    int ddim = 0;
    Rational sdim;
    Rational gldim;

    void validate() const {
        if (hdim >= 1 && !(rdim <= ddim && ddim <= 2 * hdim))
            throw InternalError("dimension report violates rdim <= ddim <= 2*hdim");
        if (sdim > gldim)
            throw InternalError("dimension report violates sdim <= gldim");
    }
};

inline DimensionReport dimension_report(const CurveSignature& sig) {
    DimensionReport r;
    r.hdim = 1;
    r.rdim = 1;
    r.ddim = omega_degree(sig) < Rational(0) ? 1 : 2;
    r.sdim = Rational(1);
    r.gldim = Rational(1);
    r.validate();
    return r;
}

enum class FamilyKind { OnePQ, TwoTwoR, TwoThreeThree, TwoThreeFour, TwoThreeFive };

// One of the five genus-0 weight triples with deg(omega) < 0, together
// with the concrete triple (orders padded by 1 up to length three).
struct NegativeFamily {
    FamilyKind kind;
    std::array<int, 3> triple;

    const char* name() const noexcept {
        switch (kind) {
            case FamilyKind::OnePQ: return "(1,p,q)";
            case FamilyKind::TwoTwoR: return "(2,2,r)";
            case FamilyKind::TwoThreeThree: return "(2,3,3)";
            case FamilyKind::TwoThreeFour: return "(2,3,4)";
            case FamilyKind::TwoThreeFive: return "(2,3,5)";
        }
        return "?";
    }

    friend bool operator==(const NegativeFamily& a, const NegativeFamily& b) noexcept {
        return a.kind == b.kind && a.triple == b.triple;
    }
};

namespace detail {
inline Rational triple_omega(const std::array<int, 3>& t) {
    Rational d(-2);
    for (int a : t) d += Rational(a - 1, a);
    return d;
}
} // namespace detail

// Classifies a sorted triple of weights a1 <= a2 <= a3 (entries >= 1) into
// its negative family, or nullopt when deg(omega) >= 0.
inline std::optional<NegativeFamily> classify_triple(std::array<int, 3> t) {
    std::sort(t.begin(), t.end());
    if (t[0] < 1)
        throw ValidationError("classify_triple", "weights >= 1", "weight below 1");
    if (!(detail::triple_omega(t) < Rational(0))) return std::nullopt;
    NegativeFamily f;
    f.triple = t;
    if (t[0] == 1)
        f.kind = FamilyKind::OnePQ;
    else if (t[0] == 2 && t[1] == 2)
        f.kind = FamilyKind::TwoTwoR;
    else if (t == std::array<int, 3>{2, 3, 3})
        f.kind = FamilyKind::TwoThreeThree;
    else if (t == std::array<int, 3>{2, 3, 4})
        f.kind = FamilyKind::TwoThreeFour;
    else if (t == std::array<int, 3>{2, 3, 5})
        f.kind = FamilyKind::TwoThreeFive;
    else
        throw InternalError("negative triple outside the five families");
    return f;
}

// Negative family of a signature. Defined only at genus 0 with at most
// three stacky points (padding with 1s); everything else yields nullopt,
// in agreement with the sign of deg(omega).
inline std::optional<NegativeFamily> negative_family(const CurveSignature& sig) {
    bool negative = omega_degree(sig) < Rational(0);
    if (sig.genus() != 0 || sig.stacky_count() > 3) {
        if (negative)
            throw InternalError("deg(omega) < 0 outside genus 0 with n <= 3");
        return std::nullopt;
    }
    std::array<int, 3> t{1, 1, 1};
    for (int i = 0; i < sig.stacky_count(); ++i)
        t[static_cast<std::size_t>(3 - sig.stacky_count() + i)] = sig.orders()[static_cast<std::size_t>(i)];
    auto fam = classify_triple(t);
    if (fam.has_value() != negative)
        throw InternalError("negative_family disagrees with the sign of deg(omega)");
    return fam;
}

// All sorted triples 1 <= a1 <= a2 <= a3 <= bound with negative deg(omega)
// at genus 0, by exhaustive sign evaluation.
inline std::set<std::array<int, 3>> enumerate_negative_triples(int bound) {
    if (bound < 2)
        throw ValidationError("enumerate_negative_triples", "bound >= 2",
                              "bound " + std::to_string(bound) + " below 2");
    std::set<std::array<int, 3>> out;
    for (int a1 = 1; a1 <= bound; ++a1)
        for (int a2 = a1; a2 <= bound; ++a2)
            for (int a3 = a2; a3 <= bound; ++a3) {
                std::array<int, 3> t{a1, a2, a3};
                if (detail::triple_omega(t) < Rational(0)) out.insert(t);
            }
    return out;
}

} // namespace nccdim
