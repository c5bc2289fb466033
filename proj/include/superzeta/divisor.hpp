#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "superzeta/errors.hpp"
#include "superzeta/eval_context.hpp"
#include "superzeta/hurwitz.hpp"
#include "superzeta/result.hpp"

namespace superzeta {

struct DivisorPoint {
    std::complex<double> location;
    long long order = 1;  // positive = zero, negative = pole; never 0
};

/// A finite point set or an arithmetic progression start, start-1, start-2,...
/// Progressions step by exactly 1; constant weight gives order * zeta_H,
/// multiple(m) weights point l by C(m+l-1, l) and gives order * zeta_m.
class DivisorFamily {
public:
    enum class Kind { finite, progression };

    static DivisorFamily finite(std::vector<DivisorPoint> points) {
        for (const auto& p : points)
            if (p.order == 0) throw domain_error("DivisorFamily: zero-order point");
        DivisorFamily f;
        f.kind_ = Kind::finite;
        f.points_ = std::move(points);
        return f;
    }

    static DivisorFamily progression(std::complex<double> start, long long order,
                                     int multiple = 0) {
        if (order == 0) throw domain_error("DivisorFamily: zero-order progression");
        if (multiple < 0) throw domain_error("DivisorFamily: multiple weight must be >= 0");
        DivisorFamily f;
        f.kind_ = Kind::progression;
        f.start_ = start;
        f.order_ = order;
        f.multiple_ = multiple;
        return f;
    }

    Kind kind() const { return kind_; }
    const std::vector<DivisorPoint>& points() const { return points_; }
    std::complex<double> start() const { return start_; }
    long long order() const { return order_; }
    int multiple() const { return multiple_; }

    bool admissible(std::complex<double> z) const {
        if (kind_ == Kind::finite) {
            for (const auto& p : points_) {
                std::complex<double> w = z - p.location;
                if (w.imag() == 0.0 && w.real() <= 0.0) return false;
            }
            return true;
        }
        return z.imag() != start_.imag() || z.real() > start_.real();
    }

private:
    Kind kind_ = Kind::finite;
    std::vector<DivisorPoint> points_;
    std::complex<double> start_{0.0, 0.0};
    long long order_ = 1;
    int multiple_ = 0;
};

/// The NT / T / P splitting of a divisor.  Pole families are stored with
/// their pole orders and entered negatively in the total superzeta.
struct LabeledDivisor {
    std::vector<DivisorFamily> nontrivial;
    std::vector<DivisorFamily> trivial;
    std::vector<DivisorFamily> poles;
};

/// Superzeta of a family list: finite sums exactly, progressions through
/// their Hurwitz / multiple-Hurwitz closed forms (valid for every s away
/// from the continuation poles).
inline SuperzetaResult divisor_superzeta(const std::vector<DivisorFamily>& families,
                                         const std::complex<double>& s,
                                         const std::complex<double>& z,
                                         const EvalContext& ctx = {}) {
    ctx.validate();
    SuperzetaResult out;
    for (const auto& f : families) {
        if (!f.admissible(z))
            throw domain_error("divisor_superzeta: z is not admissible for the divisor");
        if (f.kind() == DivisorFamily::Kind::finite) {
            for (const auto& p : f.points())
                out.value += static_cast<double>(p.order) * std::pow(z - p.location, -s);
        } else if (f.multiple() == 0) {
            out.value += static_cast<double>(f.order()) * hurwitz_zeta(s, z - f.start(), ctx);
        } else {
            out.value += static_cast<double>(f.order()) *
                         multiple_hurwitz_zeta(f.multiple(), s, z - f.start(), ctx);
        }
    }
    out.est_error = 1e-14 * (1.0 + std::abs(out.value));
    return out;
}

/// Z_f = Z^NT + Z^T - Z^P over a labeled divisor.
inline SuperzetaResult labeled_superzeta(const LabeledDivisor& d,
                                         const std::complex<double>& s,
                                         const std::complex<double>& z,
                                         const EvalContext& ctx = {}) {
    SuperzetaResult nt = divisor_superzeta(d.nontrivial, s, z, ctx);
    SuperzetaResult t = divisor_superzeta(d.trivial, s, z, ctx);
    SuperzetaResult p = divisor_superzeta(d.poles, s, z, ctx);
    SuperzetaResult out;
    out.value = nt.value + t.value - p.value;
    out.est_error = nt.est_error + t.est_error + p.est_error;
    return out;
}

inline bool admissible(const LabeledDivisor& d, std::complex<double> z) {
    for (const auto* group : {&d.nontrivial, &d.trivial, &d.poles})
        for (const auto& f : *group)
            if (!f.admissible(z)) return false;
    return true;
}

namespace detail {

inline void merge_families(std::vector<DivisorFamily>& out,
                           const std::vector<DivisorFamily>& in) {
    for (const auto& f : in) out.push_back(f);
    // coincident finite points merge by adding orders; zero orders drop
    std::vector<DivisorPoint> merged;
    struct Prog {
        std::complex<double> start;
        long long order;
        int multiple;
    };
    std::vector<Prog> prog_acc;
    for (const auto& f : out) {
        if (f.kind() == DivisorFamily::Kind::finite) {
            for (const auto& p : f.points()) {
                bool found = false;
                for (auto& q : merged) {
                    if (q.location == p.location) {
                        q.order += p.order;
                        found = true;
                        break;
                    }
                }
                if (!found) merged.push_back(p);
            }
        } else {
            bool found = false;
            for (auto& g : prog_acc) {
                // identical progressions merge as well
                if (g.start == f.start() && g.multiple == f.multiple()) {
                    g.order += f.order();
                    found = true;
                    break;
                }
            }
            if (!found) prog_acc.push_back({f.start(), f.order(), f.multiple()});
        }
    }
    out.clear();
    std::vector<DivisorPoint> kept;
    for (const auto& p : merged)
        if (p.order != 0) kept.push_back(p);
    if (!kept.empty()) out.push_back(DivisorFamily::finite(std::move(kept)));
    for (const auto& g : prog_acc)
        if (g.order != 0)
            out.push_back(DivisorFamily::progression(g.start, g.order, g.multiple));
}

}  // namespace detail

/// Label-wise union with coincident points merged; zero-order points vanish.
inline LabeledDivisor merge(const LabeledDivisor& d1, const LabeledDivisor& d2) {
    LabeledDivisor out;
    out.nontrivial = d1.nontrivial;
    detail::merge_families(out.nontrivial, d2.nontrivial);
    out.trivial = d1.trivial;
    detail::merge_families(out.trivial, d2.trivial);
    out.poles = d1.poles;
    detail::merge_families(out.poles, d2.poles);
    return out;
}

}  // namespace superzeta
