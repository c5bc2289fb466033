#pragma once

#include <cstdint>
#include <vector>

#include "superzeta/errors.hpp"

namespace superzeta {

/// Signed Stirling numbers of the first kind s(m,l), exact 64-bit integers.
///
/// Sign convention: the rising factorial (a)_m = a(a+1)...(a+m-1) expands as
///   (a)_m = sum_{l=0}^{m} (-1)^{m+l} s(m,l) a^l,
/// so s(m,m) = 1 and s(m,0) = 0 for m >= 1.
class StirlingTable {
public:
    // 64-bit entries stay exact up to order 20 (max |s(20,l)| = 19! < 2^63).
    static constexpr int kMaxSupportedOrder = 20;

    explicit StirlingTable(int max_order) : max_order_(max_order) {
        if (max_order < 0 || max_order > kMaxSupportedOrder)
            throw domain_error("StirlingTable: max_order out of supported range [0,20]");
        rows_.resize(max_order + 1);
        rows_[0] = {1};  // s(0,0) = 1
        for (int m = 1; m <= max_order; ++m) {
            // Unsigned recurrence c(m,l) = c(m-1,l-1) + (m-1) c(m-1,l),
            // stored signed afterwards.
            rows_[m].assign(m + 1, 0);
            for (int l = 1; l <= m; ++l) {
                std::int64_t up = (l <= m - 1) ? unsigned_entry(m - 1, l) : 0;
                std::int64_t diag = unsigned_entry(m - 1, l - 1);
                rows_[m][l] = diag + static_cast<std::int64_t>(m - 1) * up;
            }
        }
    }

    int max_order() const { return max_order_; }

    /// Signed s(m,l).
    std::int64_t operator()(int m, int l) const {
        if (m < 0 || m > max_order_ || l < 0 || l > m)
            throw domain_error("StirlingTable: index out of range");
        std::int64_t c = rows_[m][l];
        return ((m - l) % 2 == 0) ? c : -c;
    }

private:
    std::int64_t unsigned_entry(int m, int l) const {
        // rows_ holds unsigned values; sign applied in operator().
        return rows_[m][l];
    }

    int max_order_ = 0;
    std::vector<std::vector<std::int64_t>> rows_;
};

/// Shared table large enough for every consumer in the library.
inline const StirlingTable& stirling_table() {
    static const StirlingTable table(StirlingTable::kMaxSupportedOrder);
    return table;
}

/// Exact binomial coefficient, 64-bit.  Throws on overflow-prone inputs.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // multiply first, divide after: (result * (n-k+i)) is divisible by i
        std::int64_t num = n - k + i;
        if (result > (INT64_MAX / num))
            throw domain_error("binomial: 64-bit overflow");
        result = result * num / i;
    }
    return result;
}

/// Binomial C(x, k) for real upper argument and small integer k:
/// the polynomial extension x(x-1)...(x-k+1)/k!.
inline double binomial_real(double x, int k) {
    if (k < 0) return 0.0;
    double result = 1.0;
    for (int i = 0; i < k; ++i) result *= (x - i) / (k - i);
    return result;
}

inline double factorial(int n) {
    if (n < 0) throw domain_error("factorial: negative argument");
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Bernoulli numbers B_2, B_4, ..., B_30 (B_1 = -1/2 convention not needed).
inline double bernoulli_even(int two_k) {
    static const double table[] = {
        1.0,                        // B_0
        1.0 / 6.0,                  // B_2
        -1.0 / 30.0,                // B_4
        1.0 / 42.0,                 // B_6
        -1.0 / 30.0,                // B_8
        5.0 / 66.0,                 // B_10
        -691.0 / 2730.0,            // B_12
        7.0 / 6.0,                  // B_14
        -3617.0 / 510.0,            // B_16
        43867.0 / 798.0,            // B_18
        -174611.0 / 330.0,          // B_20
        854513.0 / 138.0,           // B_22
        -236364091.0 / 2730.0,      // B_24
        8553103.0 / 6.0,            // B_26
        -23749461029.0 / 870.0,     // B_28
        8615841276005.0 / 14322.0,  // B_30
    };
    if (two_k < 0 || two_k % 2 != 0 || two_k > 30)
        throw domain_error("bernoulli_even: argument must be even in [0,30]");
    return table[two_k / 2];
}

}  // namespace superzeta
