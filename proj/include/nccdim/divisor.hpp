#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>

#include "nccdim/curve.hpp"
#include "nccdim/error.hpp"
#include "nccdim/rational.hpp"

namespace nccdim {

// A point of the curve: either the i-th stacky point of a signature or an
// ordinary point named by a label. deg(stacky i) = 1/e_i, deg(smooth) = 1.
struct PointId {
    enum class Kind { Stacky, Smooth };

    Kind kind = Kind::Smooth;
    int index = 0;     // stacky only
    std::string label; // smooth only

    static PointId stacky(int i) {
        PointId p;
        p.kind = Kind::Stacky;
        p.index = i;
        return p;
    }
    static PointId smooth(std::string name) {
        PointId p;
        p.kind = Kind::Smooth;
        p.label = std::move(name);
        return p;
    }

    friend bool operator==(const PointId& a, const PointId& b) noexcept {
        return std::tie(a.kind, a.index, a.label) == std::tie(b.kind, b.index, b.label);
    }
    friend bool operator<(const PointId& a, const PointId& b) noexcept {
        return std::tie(a.kind, a.index, a.label) < std::tie(b.kind, b.index, b.label);
    }
};

// Finite formal Z-combination of points; zero coefficients are not stored.
class WeilDivisor {
public:
    WeilDivisor() = default;

    void set(const PointId& p, std::int64_t coeff) {
        if (coeff == 0)
            coeffs_.erase(p);
        else
            coeffs_[p] = coeff;
    }
    void add(const PointId& p, std::int64_t coeff) { set(p, this->coeff(p) + coeff); }

    std::int64_t coeff(const PointId& p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? 0 : it->second;
    }

    const std::map<PointId, std::int64_t>& coefficients() const noexcept { return coeffs_; }
    bool empty() const noexcept { return coeffs_.empty(); }

    friend WeilDivisor operator+(const WeilDivisor& a, const WeilDivisor& b) {
        WeilDivisor out = a;
        for (const auto& [p, c] : b.coeffs_) out.add(p, c);
        return out;
    }
    friend WeilDivisor operator-(const WeilDivisor& a) {
        WeilDivisor out;
        for (const auto& [p, c] : a.coeffs_) out.set(p, -c);
        return out;
    }
    friend bool operator==(const WeilDivisor& a, const WeilDivisor& b) noexcept {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::map<PointId, std::int64_t> coeffs_;
};

namespace detail {
inline void check_divisor(const WeilDivisor& d, const CurveSignature& sig, const char* op) {
    for (const auto& [p, c] : d.coefficients()) {
        (void)c;
        if (p.kind == PointId::Kind::Stacky && (p.index < 0 || p.index >= sig.stacky_count()))
            throw ValidationError(op, "stacky index in range",
                                  "stacky index " + std::to_string(p.index) + " out of range for " +
                                      std::to_string(sig.stacky_count()) + " stacky points");
    }
}
} // namespace detail

// deg(D) = sum n_P deg(P), with deg(p_i) = 1/e_i at stacky points.
inline Rational divisor_degree(const WeilDivisor& d, const CurveSignature& sig) {
    detail::check_divisor(d, sig, "divisor_degree");
    Rational deg(0);
    for (const auto& [p, c] : d.coefficients()) {
        if (p.kind == PointId::Kind::Stacky)
            deg += Rational(c, sig.order_at(p.index));
        else
            deg += Rational(c);
    }
    return deg;
}

// Pushforward to the coarse curve: stacky coefficients round down by the
// stabilizer order, smooth points pass through. The image of stacky point
// i is the smooth point labeled "pi(p<i>)".
inline WeilDivisor pushforward_floor(const WeilDivisor& d, const CurveSignature& sig) {
    detail::check_divisor(d, sig, "pushforward_floor");
    WeilDivisor out;
    for (const auto& [p, c] : d.coefficients()) {
        if (p.kind == PointId::Kind::Stacky)
            out.add(PointId::smooth("pi(p" + std::to_string(p.index) + ")"),
                    floor_div(c, sig.order_at(p.index)));
        else
            out.add(p, c);
    }
    return out;
}

} // namespace nccdim
