#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "superzeta/errors.hpp"
#include "superzeta/eval_context.hpp"
#include "superzeta/gamma.hpp"
#include "superzeta/zero_sequence.hpp"

namespace superzeta {

/// log f(z) = sum_n c_n q_n^{-z}, absolutely convergent for Re(z) > sigma.
struct DirichletLogSeries {
    struct Term {
        std::complex<double> c;
        double q;
    };
    std::vector<Term> terms;     // q strictly increasing, q_1 > 1
    double order_kappa = 1.0;    // growth order of f
    double abscissa_sigma = 0.0; // absolute-convergence abscissa

    void validate() const {
        double prev = 1.0;
        for (const auto& t : terms) {
            if (!(t.q > prev))
                throw domain_error("DirichletLogSeries: q_n must be strictly increasing with q_1 > 1");
            prev = t.q;
        }
        if (!(order_kappa >= 1.0))
            throw domain_error("DirichletLogSeries: order_kappa must be >= 1");
    }
};

/// A meromorphic function presented through log f and its derivatives.
/// Builtins carry exact closed forms; the dirichlet kind evaluates a stored
/// series termwise.
class FunctionModel {
public:
    enum class Kind { dirichlet, dirichlet_polynomial, reciprocal_gamma, sine_quotient };

    static constexpr int kMaxDerivativeOrder = 8;

    static FunctionModel dirichlet(DirichletLogSeries series) {
        series.validate();
        FunctionModel m;
        m.kind_ = Kind::dirichlet;
        m.series_ = std::move(series);
        return m;
    }

    /// f(z) = 1 - a^{-z}, a > 1.  kappa = 1, sigma = 0; zeros at 2 pi i k / log a.
    static FunctionModel dirichlet_polynomial(double a) {
        if (!(a > 1.0)) throw domain_error("dirichlet_polynomial: a must be > 1");
        FunctionModel m;
        m.kind_ = Kind::dirichlet_polynomial;
        m.poly_a_ = a;
        return m;
    }

    /// f(z) = 1/Gamma(z): zeros at 0, -1, -2, ...  Not of Dirichlet type; the
    /// integral engine treats its log-derivative tail through the asymptotic
    /// expansion of digamma.
    static FunctionModel reciprocal_gamma() {
        FunctionModel m;
        m.kind_ = Kind::reciprocal_gamma;
        return m;
    }

    /// f(z) = sin(pi z)/pi: zeros at every integer.  Supported for log f and
    /// derivatives only; it has no zero-free right half-plane.
    static FunctionModel sine_quotient() {
        FunctionModel m;
        m.kind_ = Kind::sine_quotient;
        m.sigma_override_ = std::numeric_limits<double>::infinity();
        return m;
    }

    Kind kind() const { return kind_; }
    double poly_base() const { return poly_a_; }
    const DirichletLogSeries& series() const { return series_; }

    double kappa() const {
        switch (kind_) {
            case Kind::dirichlet: return series_.order_kappa;
            default: return 1.0;
        }
    }

    double sigma() const {
        if (sigma_override_) return *sigma_override_;
        switch (kind_) {
            case Kind::dirichlet: return series_.abscissa_sigma;
            default: return 0.0;  // poly / reciprocal gamma: divisor in Re <= 0
        }
    }

    /// Divisor oracle for cross-checks, when one is known.
    std::optional<ZeroSequence> zero_oracle() const {
        if (attached_oracle_) return attached_oracle_;
        ZeroSequence seq;
        switch (kind_) {
            case Kind::dirichlet_polynomial:
                seq.add_lattice(0.0, 2.0 * kPi / std::log(poly_a_), 1, true);
                return seq;
            case Kind::reciprocal_gamma:
                seq.add_progression(0.0, 1);
                return seq;
            default:
                return std::nullopt;
        }
    }

    void attach_zero_oracle(ZeroSequence seq) { attached_oracle_ = std::move(seq); }

private:
    Kind kind_ = Kind::dirichlet_polynomial;
    double poly_a_ = 2.0;
    DirichletLogSeries series_;
    std::optional<double> sigma_override_;
    std::optional<ZeroSequence> attached_oracle_;
};

namespace detail {

inline void require_in_half_plane(const FunctionModel& model, const complex& z,
                                  const char* who) {
    if (model.kind() == FunctionModel::Kind::sine_quotient) return;
    if (!(z.real() > model.sigma()))
        throw convergence_error(std::string(who) + ": Re(z) <= sigma, outside the convergence half-plane");
}

// cot(pi z) with poles rejected.
inline complex cot_pi(const complex& z) {
    double nearest = std::round(z.real());
    if (z.imag() == 0.0 && std::abs(z.real() - nearest) < 1e-13)
        throw pole_error("sine_quotient: z at an integer");
    if (std::abs(z.imag()) > 20.0)  // avoid overflow in sin/cos
        return complex(0.0, z.imag() > 0 ? -1.0 : 1.0);
    return std::cos(kPi * z) / std::sin(kPi * z);
}

// j-th derivative of log sin(pi z): pi^j P_j(cot(pi z)) with integer
// polynomials generated by P_{j+1} = -(1+u^2) P_j'.
inline complex log_sin_derivative(int j, const complex& z) {
    std::vector<double> p = {0.0, 1.0};  // P_1(u) = u
    for (int k = 1; k < j; ++k) {
        std::vector<double> dp(p.size() >= 1 ? p.size() - 1 : 0, 0.0);
        for (size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * static_cast<double>(i);
        std::vector<double> next(dp.size() + 2, 0.0);
        for (size_t i = 0; i < dp.size(); ++i) {
            next[i] -= dp[i];
            next[i + 2] -= dp[i];
        }
        p = std::move(next);
    }
    const complex u = cot_pi(z);
    complex value = 0.0;
    complex up = 1.0;
    for (double coef : p) {
        if (coef != 0.0) value += coef * up;
        up *= u;
    }
    return std::pow(complex(kPi), static_cast<double>(j)) * value;
}

// termwise sum of c_n (-log q_n)^j q_n^{-z} over the generated series of
// log(1 - a^{-z}): c_n = -1/n, q_n = a^n.
inline complex poly_log_derivative(double a, int j, const complex& z,
                                   const EvalContext& ctx) {
    const double log_a = std::log(a);
    const complex t = std::exp(-z * log_a);
    const double tail_ratio = std::abs(t);
    complex sum = 0.0;
    complex tn = 1.0;
    for (long long n = 1; n <= ctx.series_truncation; ++n) {
        tn *= t;
        double factor = (j == 0) ? 1.0 / static_cast<double>(n)
                                 : std::pow(static_cast<double>(n) * log_a, j) /
                                       static_cast<double>(n);
        complex term = -factor * tn;
        sum += term;
        if (n >= 8 && std::abs(term) <= 0.25 * ctx.target_rel_error *
                                            std::max(1.0, std::abs(sum)) * (1.0 - tail_ratio))
            break;
    }
    if (j % 2 == 1) sum = -sum;  // (-n log a)^j sign
    return sum;
}

}  // namespace detail

/// log f(z), truncated so the Dirichlet tail falls below the context target.
inline complex log_f(const FunctionModel& model, const complex& z,
                     const EvalContext& ctx = {}) {
    switch (model.kind()) {
        case FunctionModel::Kind::dirichlet: {
            detail::require_in_half_plane(model, z, "log_f");
            complex sum = 0.0;
            for (const auto& t : model.series().terms)
                sum += t.c * std::exp(-z * std::log(t.q));
            return sum;
        }
        case FunctionModel::Kind::dirichlet_polynomial:
            detail::require_in_half_plane(model, z, "log_f");
            return detail::poly_log_derivative(model.poly_base(), 0, z, ctx);
        case FunctionModel::Kind::reciprocal_gamma:
            return -log_gamma(z);
        case FunctionModel::Kind::sine_quotient:
            detail::cot_pi(z);  // pole check
            return std::log(std::sin(kPi * z) / kPi);
    }
    throw domain_error("log_f: unknown model kind");
}

/// j-th derivative of log f, j in [1, 8]; termwise for Dirichlet data,
/// closed forms for the builtins.
inline complex log_f_derivative(const FunctionModel& model, int j, const complex& z,
                                const EvalContext& ctx = {}) {
    if (j < 1 || j > FunctionModel::kMaxDerivativeOrder)
        throw domain_error("log_f_derivative: order out of range [1,8]");
    switch (model.kind()) {
        case FunctionModel::Kind::dirichlet: {
            detail::require_in_half_plane(model, z, "log_f_derivative");
            complex sum = 0.0;
            for (const auto& t : model.series().terms) {
                const double lq = std::log(t.q);
                sum += t.c * std::pow(-lq, j) * std::exp(-z * lq);
            }
            return sum;
        }
        case FunctionModel::Kind::dirichlet_polynomial:
            detail::require_in_half_plane(model, z, "log_f_derivative");
            return detail::poly_log_derivative(model.poly_base(), j, z, ctx);
        case FunctionModel::Kind::reciprocal_gamma:
            return -polygamma(j - 1, z);
        case FunctionModel::Kind::sine_quotient:
            return detail::log_sin_derivative(j, z);
    }
    throw domain_error("log_f_derivative: unknown model kind");
}

/// Smallest N >= 1 whose geometric tail bound q_{N+1}^{-(x-sigma)} falls
/// below `target` at Re(z) = x.
inline long long truncation_depth(const FunctionModel& model, double x, double target) {
    if (!(target > 0.0)) throw domain_error("truncation_depth: target must be > 0");
    if (target >= 1.0) return 1;
    const double sigma = model.sigma();
    if (!(x > sigma)) throw convergence_error("truncation_depth: x <= sigma");
    switch (model.kind()) {
        case FunctionModel::Kind::dirichlet_polynomial: {
            const double la = std::log(model.poly_base());
            long long n = 1;
            while (std::exp(-(static_cast<double>(n) + 1.0) * (x - sigma) * la) > target)
                ++n;
            return n;
        }
        case FunctionModel::Kind::dirichlet: {
            const auto& terms = model.series().terms;
            for (long long n = 1; n < static_cast<long long>(terms.size()); ++n)
                if (std::pow(terms[static_cast<size_t>(n)].q, -(x - sigma)) <= target)
                    return n;
            return std::max<long long>(1, static_cast<long long>(terms.size()));
        }
        default:
            throw domain_error("truncation_depth: model has no Dirichlet representation");
    }
}

inline complex f_value(const FunctionModel& model, const complex& z,
                       const EvalContext& ctx = {}) {
    return std::exp(log_f(model, z, ctx));
}

}  // namespace superzeta
