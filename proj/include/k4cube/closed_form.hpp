#pragma once

// Exact integer evaluation of the edge-isoperimetric optimum of the
// K4-hypercube family and of the edge-connectivity parameters derived from it.
//
// Values reach (n+1) * 2^n, so everything is carried in 128-bit integers and
// the closed forms stay exact up to n = 60.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace k4cube {

#if defined(__SIZEOF_INT128__)
__extension__ using Wide = __int128;
#else
#error "k4cube needs a 128-bit integer type"
#endif

inline constexpr int kMaxClosedFormDimension = 60;

inline std::string to_string(Wide v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    std::string digits;
    while (v != 0) {
        const int d = static_cast<int>(v % 10);
        digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

inline constexpr Wide pow2(int e) { return Wide{1} << e; }

namespace detail {

inline void check_n(int n, int lo, const char* what) {
    if (n < lo || n > kMaxClosedFormDimension) {
        throw std::out_of_range(std::string(what) + ": n=" + std::to_string(n) + " outside [" +
                                std::to_string(lo) + ", " + std::to_string(kMaxClosedFormDimension) + "]");
    }
}

inline void check_m(Wide m, Wide lo, Wide hi, const char* what) {
    if (m < lo || m > hi) {
        throw std::out_of_range(std::string(what) + ": argument " + to_string(m) + " outside [" + to_string(lo) +
                                ", " + to_string(hi) + "]");
    }
}

inline constexpr int ceil_half(int n) { return (n + 1) / 2; }
inline constexpr int floor_half(int n) { return n / 2; }

}  // namespace detail

/// Parity indicator of n: 0 for even, 1 for odd.
inline constexpr int gamma_of(int n) { return n % 2; }

/// m = sum of 2^{t_i} with t_0 > t_1 > ... > t_s.
struct BinaryDecomposition {
    std::uint64_t m = 0;
    std::vector<int> exponents;

    int last_index() const noexcept { return static_cast<int>(exponents.size()) - 1; }
};

inline BinaryDecomposition decompose(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("decompose: m must be positive");
    BinaryDecomposition d{m, {}};
    for (int b = 63; b >= 0; --b)
        if ((m >> b) & 1u) d.exponents.push_back(b);
    return d;
}

namespace detail {

// sum t_i 2^{t_i} + sum 2 i 2^{t_i}, with the empty sum at m = 0.
inline Wide hypercube_density(std::uint64_t m) {
    Wide total = 0;
    for (int i = 0; m != 0; ++i) {
        const int t = 63 - std::countl_zero(m);
        total += static_cast<Wide>(t + 2 * i) * pow2(t);
        m ^= std::uint64_t{1} << t;
    }
    return total;
}

}  // namespace detail

/// ex_m(Q_n): the largest degree sum of an m-vertex induced subgraph of Q_n.
inline Wide ex_qn(std::uint64_t m, int n) {
    detail::check_n(n, 1, "ex_qn");
    detail::check_m(m, 0, pow2(n), "ex_qn");
    return detail::hypercube_density(m);
}

inline Wide xi_qn(std::uint64_t m, int n) {
    detail::check_n(n, 1, "xi_qn");
    detail::check_m(m, 1, pow2(n - 1), "xi_qn");
    return static_cast<Wide>(n) * m - detail::hypercube_density(m);
}

/// Hypercube density plus the K4 bonus: every complete 4-block adds two edges
/// (4 to the degree sum), a trailing 3-block adds one more.
inline Wide f_value(std::uint64_t m) {
    if (m > (std::uint64_t{1} << 62)) throw std::out_of_range("f_value: m too large");
    const std::uint64_t p = m / 4;
    const std::uint64_t q = m % 4;
    return detail::hypercube_density(m) + static_cast<Wide>(4) * p + (q == 3 ? 2 : 0);
}

/// ex_m of every member of the n-dimensional K4-hypercube family.
inline Wide ex_h4(std::uint64_t m, int n) {
    detail::check_n(n, 2, "ex_h4");
    detail::check_m(m, 0, pow2(n), "ex_h4");
    return f_value(m);
}

/// xi_m = (n+1) m - ex_m.
inline Wide xi_h4(std::uint64_t m, int n) {
    detail::check_n(n, 2, "xi_h4");
    detail::check_m(m, 1, pow2(n) - 1, "xi_h4");
    return static_cast<Wide>(n + 1) * m - f_value(m);
}

inline constexpr int kMaxScanDimension = 40;

/// min { xi_m : h <= m <= 2^{n-1} } by direct scan.
inline Wide lambda_scan(std::uint64_t h, int n) {
    detail::check_n(n, 3, "lambda_scan");
    if (n > kMaxScanDimension) throw std::out_of_range("lambda_scan: n too large for a direct scan");
    detail::check_m(h, 1, pow2(n - 1), "lambda_scan");
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    Wide best = std::numeric_limits<Wide>::max();
    for (std::uint64_t m = h; m <= top; ++m) best = std::min(best, xi_h4(m, n));
    return best;
}

/// Length of the t-th concentration interval of lambda_h.
inline Wide g_interval_length(int t, int n) {
    detail::check_n(n, 3, "g_interval_length");
    if (t < 0 || t > detail::floor_half(n) - 1) throw std::out_of_range("g_interval_length: t out of range");
    const Wide num = pow2(2 * t + 2 + gamma_of(n));
    return (num + 2) / 3;
}

/// Subdivision points of the t-th concentration interval; m_td(t, t+1, n) is
/// its lower end.
inline Wide m_td(int t, int d, int n) {
    detail::check_n(n, 3, "m_td");
    if (t < 0 || t > detail::floor_half(n) - 1) throw std::out_of_range("m_td: t out of range");
    if (d < 0 || d > t + 1) throw std::out_of_range("m_td: d out of range");
    Wide m = pow2(detail::ceil_half(n) + t);
    for (int i = 0; i < d; ++i) m -= pow2(2 * t - 2 * i + gamma_of(n));
    if (d == t + 1) m -= 1;
    return m;
}

/// A range [lower, upper] of h over which lambda_h is the constant `value`.
struct ConcentrationInterval {
    int t = 0;
    Wide g = 0;
    Wide lower = 0;
    Wide upper = 0;
    Wide value = 0;

    bool contains(Wide h) const noexcept { return lower <= h && h <= upper; }
};

inline std::vector<ConcentrationInterval> concentration_intervals(int n) {
    detail::check_n(n, 3, "concentration_intervals");
    std::vector<ConcentrationInterval> out;
    for (int t = 0; t <= detail::floor_half(n) - 1; ++t) {
        ConcentrationInterval c;
        c.t = t;
        c.g = g_interval_length(t, n);
        c.upper = pow2(detail::ceil_half(n) + t);
        c.lower = c.upper - c.g;
        c.value = static_cast<Wide>(detail::floor_half(n) - t) * c.upper;
        out.push_back(c);
    }
    return out;
}

namespace detail {

// phi_k(x) = (n+1-2k) x - f(x); xi_m = phi_0(m). For x = 2^T + r with T >= 2
// and r < 2^T, f(x) = f(2^T) + f(r) + 2r, hence phi_k(x) = phi_k(2^T) +
// phi_{k+1}(r). Range minima of xi therefore decompose over dyadic blocks.
class DyadicXiMin {
public:
    explicit DyadicXiMin(int n) : n_(n), block_(static_cast<std::size_t>(n + 1) * (n + 2)) {
        for (int t = 0; t <= n; ++t)
            for (int k = 0; k <= n + 1; ++k) block_[index(t, k)] = t <= 2 ? direct(k, 0, pow2(t)) : 0;
        for (int t = 3; t <= n; ++t)
            for (int k = 0; k + 1 <= n + 1; ++k)
                block_[index(t, k)] = std::min(block_[index(t - 1, k)], phi(k, pow2(t - 1)) + block_[index(t - 1, k + 1)]);
    }

    /// min { xi_m : a <= m < b }, 1 <= a < b <= 2^n.
    Wide range_min(Wide a, Wide b) const { return range(0, n_, a, b); }

private:
    std::size_t index(int t, int k) const { return static_cast<std::size_t>(t) * (n_ + 2) + k; }

    Wide phi(int k, Wide x) const {
        return static_cast<Wide>(n_ + 1 - 2 * k) * x - f_value(static_cast<std::uint64_t>(x));
    }

    Wide direct(int k, Wide a, Wide b) const {
        Wide best = std::numeric_limits<Wide>::max();
        for (Wide x = a; x < b; ++x) best = std::min(best, phi(k, x));
        return best;
    }

    Wide range(int k, int t, Wide a, Wide b) const {
        if (a == 0 && b == pow2(t) && k <= n_ + 1) return block_[index(t, k)];
        if (t <= 2) return direct(k, a, b);
        const Wide half = pow2(t - 1);
        Wide best = std::numeric_limits<Wide>::max();
        if (a < half) best = range(k, t - 1, a, std::min(b, half));
        if (b > half) best = std::min(best, phi(k, half) + range(k + 1, t - 1, std::max(a, half) - half, b - half));
        return best;
    }

    int n_;
    std::vector<Wide> block_;
};

}  // namespace detail

/// Largest h for which lambda_h = xi_h is known to hold.
inline Wide monotone_range_end(int n) { return pow2(detail::ceil_half(n)) - 2 - gamma_of(n); }

/// Piecewise closed form for lambda_h: xi_h on the monotone range, the
/// interval constant on a concentration interval, 2^{n-1} from
/// floor(2^{n-1}/3) on. In the gaps between intervals it takes the minimum of
/// xi up to the next interval, whose lower end already carries the interval
/// constant.
inline Wide lambda_fast(std::uint64_t h, int n) {
    detail::check_n(n, 3, "lambda_fast");
    detail::check_m(h, 1, pow2(n - 1), "lambda_fast");
    if (h <= monotone_range_end(n)) return xi_h4(h, n);
    if (h >= pow2(n - 1) / 3) return pow2(n - 1);
    const auto intervals = concentration_intervals(n);
    for (const auto& c : intervals)
        if (c.contains(h)) return c.value;

    const ConcentrationInterval* next = nullptr;
    for (const auto& c : intervals)
        if (c.lower > h && (next == nullptr || c.lower < next->lower)) next = &c;
    if (next == nullptr) return lambda_scan(h, n);
    return std::min(next->value, detail::DyadicXiMin(n).range_min(h, next->lower));
}

enum class FaultPattern { SuperDegree, AverageDegree, ExtraSize, Embedded, Cyclic };

inline std::string_view to_string(FaultPattern p) {
    switch (p) {
        case FaultPattern::SuperDegree: return "super_degree";
        case FaultPattern::AverageDegree: return "average_degree";
        case FaultPattern::ExtraSize: return "extra_size";
        case FaultPattern::Embedded: return "embedded";
        case FaultPattern::Cyclic: return "cyclic";
    }
    return "unknown";
}

inline constexpr FaultPattern kNonCyclicPatterns[] = {FaultPattern::SuperDegree, FaultPattern::AverageDegree,
                                                     FaultPattern::ExtraSize, FaultPattern::Embedded};

/// (n-l) 2^l for 2 <= l <= n-1; (n+1-l) 2^l for l in {0, 1}, except for the
/// embedded pattern which needs l >= 2.
inline Wide conditional_lambda(FaultPattern pattern, int l, int n) {
    detail::check_n(n, 3, "conditional_lambda");
    if (pattern == FaultPattern::Cyclic)
        throw std::invalid_argument("conditional_lambda: use cyclic_lambda for the cyclic pattern");
    if (l >= 2 && l <= n - 1) return static_cast<Wide>(n - l) * pow2(l);
    if ((l == 0 || l == 1) && pattern != FaultPattern::Embedded) return static_cast<Wide>(n + 1 - l) * pow2(l);
    throw std::out_of_range("conditional_lambda: l=" + std::to_string(l) + " outside the pattern's range");
}

inline Wide cyclic_lambda(int n) {
    detail::check_n(n, 3, "cyclic_lambda");
    return n <= 4 ? Wide{4} * n - 8 : Wide{3} * n - 3;
}

/// ex, xi and lambda tables for one n. ex is indexed 0..2^n, xi and lambda
/// 1..2^{n-1}.
class IsoperimetricProfile {
public:
    int dimension() const noexcept { return n_; }
    std::uint64_t half() const noexcept { return std::uint64_t{1} << (n_ - 1); }

    std::int64_t ex(std::uint64_t m) const { return ex_.at(m); }
    std::int64_t xi(std::uint64_t m) const { return xi_.at(checked(m)); }
    std::int64_t lambda(std::uint64_t h) const { return lambda_.at(checked(h)); }

private:
    friend IsoperimetricProfile full_profile(int n);

    std::uint64_t checked(std::uint64_t m) const {
        if (m < 1 || m > half()) throw std::out_of_range("profile index outside [1, 2^{n-1}]");
        return m;
    }

    int n_ = 0;
    std::vector<std::int64_t> ex_;
    std::vector<std::int64_t> xi_;      // slot 0 unused
    std::vector<std::int64_t> lambda_;  // slot 0 unused
};

inline constexpr int kMaxProfileDimension = 24;

inline IsoperimetricProfile full_profile(int n) {
    if (n < 3 || n > kMaxProfileDimension) throw std::out_of_range("full_profile: n outside [3, 24]");
    IsoperimetricProfile p;
    p.n_ = n;
    const std::uint64_t all = std::uint64_t{1} << n;
    const std::uint64_t half = all / 2;
    p.ex_.resize(all + 1);
    for (std::uint64_t m = 0; m <= all; ++m) p.ex_[m] = static_cast<std::int64_t>(ex_h4(m, n));
    p.xi_.assign(half + 1, 0);
    for (std::uint64_t m = 1; m <= half; ++m) p.xi_[m] = static_cast<std::int64_t>(n + 1) * static_cast<std::int64_t>(m) - p.ex_[m];
    // Suffix minimum is lambda_scan for every h at once.
    p.lambda_.assign(half + 1, 0);
    std::int64_t running = std::numeric_limits<std::int64_t>::max();
    for (std::uint64_t h = half; h >= 1; --h) {
        running = std::min(running, p.xi_[h]);
        p.lambda_[h] = running;
    }
    for (std::uint64_t h = 1; h <= half; ++h) {
        if (lambda_fast(h, n) != p.lambda_[h])
            throw std::logic_error("full_profile: piecewise lambda disagrees with the scan at h=" + std::to_string(h));
    }
    return p;
}

}  // namespace k4cube
