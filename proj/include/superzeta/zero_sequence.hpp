#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "superzeta/errors.hpp"
#include "superzeta/eval_context.hpp"
#include "superzeta/result.hpp"

namespace superzeta {

struct ZeroPoint {
    std::complex<double> location;
    long long order = 1;  // positive = zero, negative = pole
};

/// Points start, start-1, start-2, ... each with the same order.
struct DownwardProgression {
    std::complex<double> start;
    long long order = 1;
};

/// Points center +/- i*spacing*k for k >= 1 (plus the center when flagged),
/// the zero pattern of Dirichlet polynomials 1 - a^{-z}.
struct VerticalLattice {
    std::complex<double> center;
    double spacing = 1.0;
    long long order = 1;
    bool include_center = true;
};

/// A divisor presented as summable families.  Finite points contribute
/// exactly; the infinite families are summed with Euler-Maclaurin tail
/// corrections so direct superzeta sums reach ~1e-12 at modest cost.
class ZeroSequence {
public:
    ZeroSequence() = default;

    void add_point(std::complex<double> location, long long order = 1) {
        points_.push_back({location, order});
    }
    void add_progression(std::complex<double> start, long long order = 1) {
        progressions_.push_back({start, order});
    }
    void add_lattice(std::complex<double> center, double spacing, long long order = 1,
                     bool include_center = true) {
        if (!(spacing > 0.0)) throw domain_error("ZeroSequence: lattice spacing must be > 0");
        lattices_.push_back({center, spacing, order, include_center});
    }

    bool empty() const {
        return points_.empty() && progressions_.empty() && lattices_.empty();
    }

    /// Convergence exponent of the counting function: 0 for finite data,
    /// 1 once any infinite family is present.
    double kappa() const {
        return (progressions_.empty() && lattices_.empty()) ? 0.0 : 1.0;
    }

    const std::vector<ZeroPoint>& points() const { return points_; }
    const std::vector<DownwardProgression>& progressions() const { return progressions_; }
    const std::vector<VerticalLattice>& lattices() const { return lattices_; }

    /// z - rho off (-inf, 0] for every member of every family.
    bool admissible(std::complex<double> z) const {
        auto on_cut = [](std::complex<double> w) {
            return w.imag() == 0.0 && w.real() <= 0.0;
        };
        for (const auto& p : points_)
            if (on_cut(z - p.location)) return false;
        for (const auto& pr : progressions_) {
            std::complex<double> v = z - pr.start;
            if (v.imag() == 0.0 && v.real() <= 0.0) return false;
            // remaining points only move right of v
        }
        for (const auto& la : lattices_) {
            if (la.include_center && on_cut(z - la.center)) return false;
            // off-center lattice points have nonzero imaginary offset
            if ((z - la.center).imag() != 0.0) {
                double ratio = (z - la.center).imag() / la.spacing;
                if (ratio == std::round(ratio) && (z - la.center).real() <= 0.0) return false;
            }
        }
        return true;
    }

private:
    std::vector<ZeroPoint> points_;
    std::vector<DownwardProgression> progressions_;
    std::vector<VerticalLattice> lattices_;
};

namespace detail {

using complex = std::complex<double>;

inline complex rising(complex s, int count) {
    complex r = 1.0;
    for (int i = 0; i < count; ++i) r *= s + static_cast<double>(i);
    return r;
}

// sum_{l >= 0} (v + l)^{-s}: direct terms to M, then Euler-Maclaurin tail
// through the B_6 correction.
inline complex progression_power_sum(complex v, complex s, const EvalContext& ctx,
                                     double* est, long long* used) {
    long long m = static_cast<long long>(std::max({64.0, 4.0 * std::abs(s),
                                                   8.0 - v.real()}));
    if (m > ctx.series_truncation) m = ctx.series_truncation;
    complex sum = 0.0;
    for (long long l = 0; l < m; ++l) sum += std::pow(v + static_cast<double>(l), -s);
    const complex w = v + static_cast<double>(m);
    sum += std::pow(w, 1.0 - s) / (s - 1.0);                       // integral term
    sum += 0.5 * std::pow(w, -s);                                  // half correction
    sum += s * std::pow(w, -s - 1.0) / 12.0;                       // B_2
    sum -= rising(s, 3) * std::pow(w, -s - 3.0) / 720.0;           // B_4
    sum += rising(s, 5) * std::pow(w, -s - 5.0) / 30240.0;         // B_6
    if (est)
        *est += std::abs(rising(s, 7)) * std::pow(std::abs(w), -s.real() - 7.0) * 8.3e-7;
    if (used) *used += m;
    return sum;
}

// sum over k >= 1 of (w + i d k)^{-s} + (w - i d k)^{-s}, Re(w) > 0.
inline complex lattice_pair_sum(complex w, double d, complex s, const EvalContext& ctx,
                                double* est, long long* used) {
    const complex i(0.0, 1.0);
    long long m = static_cast<long long>(std::max({64.0, 4.0 * std::abs(s),
                                                   4.0 * std::abs(w) / d}));
    if (m > ctx.series_truncation) m = ctx.series_truncation;
    complex sum = 0.0;
    for (long long k = 1; k < m; ++k) {
        const complex off = i * (d * static_cast<double>(k));
        sum += std::pow(w + off, -s) + std::pow(w - off, -s);
    }
    const double M = static_cast<double>(m);
    const complex up = w + i * (d * M);
    const complex dn = w - i * (d * M);
    // integral term: antiderivatives of each branch
    sum += -(std::pow(up, 1.0 - s) / ((1.0 - s) * (i * d)));
    sum += -(std::pow(dn, 1.0 - s) / ((1.0 - s) * (-i * d)));
    sum += 0.5 * (std::pow(up, -s) + std::pow(dn, -s));
    // Bernoulli corrections: p^{(2j-1)}(M) = -(s)_{2j-1}(id)^{2j-1}[up^..-dn^..]
    const complex id = i * d;
    sum += rising(s, 1) * id * (std::pow(up, -s - 1.0) - std::pow(dn, -s - 1.0)) / 12.0;
    sum -= rising(s, 3) * id * id * id *
           (std::pow(up, -s - 3.0) - std::pow(dn, -s - 3.0)) / 720.0;
    sum += rising(s, 5) * id * id * id * id * id *
           (std::pow(up, -s - 5.0) - std::pow(dn, -s - 5.0)) / 30240.0;
    if (est)
        *est += 2.0 * std::abs(rising(s, 7)) * std::pow(d, 7.0) *
                std::pow(std::abs(up), -s.real() - 7.0) * 8.3e-7;
    if (used) *used += m;
    return sum;
}

/// sum ord(rho) (z - rho)^{-s} over every family; needs Re(s) > kappa for the
/// infinite families.
inline complex zero_sequence_power_sum(const ZeroSequence& seq, complex s, complex z,
                                       const EvalContext& ctx, double* est,
                                       long long* used) {
    complex total = 0.0;
    for (const auto& p : seq.points())
        total += static_cast<double>(p.order) * std::pow(z - p.location, -s);
    for (const auto& pr : seq.progressions())
        total += static_cast<double>(pr.order) *
                 progression_power_sum(z - pr.start, s, ctx, est, used);
    for (const auto& la : seq.lattices()) {
        const complex w = z - la.center;
        if (la.include_center) total += static_cast<double>(la.order) * std::pow(w, -s);
        if (w.real() > 0.0) {
            total += static_cast<double>(la.order) *
                     lattice_pair_sum(w, la.spacing, s, ctx, est, used);
        } else {
            // branch-safe antiderivative unavailable; raw summation
            const complex i(0.0, 1.0);
            long long cap = ctx.series_truncation;
            complex sum = 0.0;
            for (long long k = 1; k < cap; ++k) {
                const complex off = i * (la.spacing * static_cast<double>(k));
                sum += std::pow(w + off, -s) + std::pow(w - off, -s);
            }
            total += static_cast<double>(la.order) * sum;
            if (est)
                *est += 2.0 * std::pow(la.spacing * static_cast<double>(cap), 1.0 - s.real()) /
                        std::max(0.25, s.real() - 1.0);
            if (used) *used += cap;
        }
    }
    return total;
}

}  // namespace detail

}  // namespace superzeta
