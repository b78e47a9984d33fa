#pragma once

// Table and figure data writers. All output is byte-stable: integers are
// exact, the few ratios use locale-independent formatting with six
// significant digits, lines end in '\n'.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "k4cube/closed_form.hpp"
#include "k4cube/cube_graph.hpp"

namespace k4cube {

inline std::string format_ratio(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
    return {buf, res.ptr};
}

/// "h,ex,xi,lambda" for h = 1 .. 2^{n-1}.
inline void write_profile_csv(std::ostream& os, int n) {
    const auto p = full_profile(n);
    os << "h,ex,xi,lambda\n";
    for (std::uint64_t h = 1; h <= p.half(); ++h) os << h << ',' << p.ex(h) << ',' << p.xi(h) << ',' << p.lambda(h) << '\n';
}

/// "t,g_t,lower,upper,value", one row per concentration interval.
inline void write_intervals_csv(std::ostream& os, int n) {
    os << "t,g_t,lower,upper,value\n";
    for (const auto& c : concentration_intervals(n))
        os << c.t << ',' << to_string(c.g) << ',' << to_string(c.lower) << ',' << to_string(c.upper) << ','
           << to_string(c.value) << '\n';
}

/// "l,value" for l = 2 .. n-1, then footer rows for the cyclic value and the
/// l = 0, 1 values shared by the degree, average-degree and size patterns.
inline void write_conditional_csv(std::ostream& os, int n) {
    if (n < 3) throw std::out_of_range("conditional table: n must be at least 3");
    os << "l,value\n";
    for (int l = 2; l <= n - 1; ++l) os << l << ',' << to_string(conditional_lambda(FaultPattern::SuperDegree, l, n)) << '\n';
    os << "cyclic," << to_string(cyclic_lambda(n)) << '\n';
    for (int l = 0; l <= 1; ++l)
        os << "low_l" << l << ',' << to_string(conditional_lambda(FaultPattern::SuperDegree, l, n)) << '\n';
}

inline void write_bitmap(std::ostream& os, const CubeGraph& g) { write_pbm(os, adjacency_bitmap(g)); }

/// Normalized xi and lambda curves, one block per n. Both curves are divided
/// by the largest xi_h over 1 <= h <= 2^{n-1}; h is divided by 2^{n-1}.
inline void write_plotdata_tsv(std::ostream& os, const std::vector<int>& dimensions) {
    os << "# h_norm = h / 2^(n-1); xi_norm = xi_h / max_h xi_h; lambda_norm = lambda_h / max_h xi_h\n";
    os << "n\th_norm\txi_norm\tlambda_norm\n";
    for (int n : dimensions) {
        const auto p = full_profile(n);
        std::int64_t xi_max = 0;
        for (std::uint64_t h = 1; h <= p.half(); ++h) xi_max = std::max(xi_max, p.xi(h));
        const auto half = static_cast<double>(p.half());
        const auto top = static_cast<double>(xi_max);
        for (std::uint64_t h = 1; h <= p.half(); ++h) {
            os << n << '\t' << format_ratio(static_cast<double>(h) / half) << '\t'
               << format_ratio(static_cast<double>(p.xi(h)) / top) << '\t'
               << format_ratio(static_cast<double>(p.lambda(h)) / top) << '\n';
        }
    }
}

}  // namespace k4cube
