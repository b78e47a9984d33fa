#pragma once

// k4rel command line:
//   k4rel <subcommand> --n <int> [--seed <u64>] [--seeds <count>]
//         [--kind canonical|random|hypercube|enhanced] [--k <int>]
//         [--out <path>] [--budget-nodes <int>] [--bounded-size <int>]
// Exit status: 0 success, 1 verification mismatch, 2 usage or I/O error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "k4cube/closed_form.hpp"
#include "k4cube/cube_graph.hpp"
#include "k4cube/oracle.hpp"
#include "k4cube/report.hpp"

namespace k4cube {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

struct CliOptions {
    std::vector<int> n;
    std::uint64_t seed = 1;
    int seeds = 5;
    std::string kind = "canonical";
    int k = -1;
    std::string out;
    std::uint64_t budget_nodes = OracleBudget{}.node_limit;
    int bounded_size = OracleBudget{}.max_subset_size_bounded;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline int single_n(const CliOptions& o, int lo, int hi) {
    if (o.n.size() != 1) throw UsageError("exactly one --n is required");
    const int n = o.n.front();
    if (n < lo || n > hi)
        throw UsageError("--n " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return n;
}

// Renders into memory first so a failed computation never leaves a partial file.
inline void emit(const CliOptions& o, std::ostream& out, const std::function<void(std::ostream&)>& body) {
    std::ostringstream buf;
    body(buf);
    if (o.out.empty()) {
        out << buf.str();
        return;
    }
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot open '" + o.out + "' for writing");
    file << buf.str();
    if (!file.flush()) throw UsageError("failed writing '" + o.out + "'");
}

inline CubeGraph graph_for(const CliOptions& o, int n) {
    if (o.kind == "canonical") return build_k4cube(identity_matching_tree(n));
    if (o.kind == "random") return build_k4cube(random_matching_tree(n, o.seed));
    if (o.kind == "hypercube") return build_hypercube(n);
    if (o.kind == "enhanced") {
        const int k = o.k < 0 ? n - 1 : o.k;
        if (k < 1 || k > n - 1) throw UsageError("--k must lie in [1, n-1]");
        return build_enhanced(n, k);
    }
    throw UsageError("unknown --kind '" + o.kind + "'");
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    using detail::CliOptions;
    CLI::App app{"Reliability parameters of generalized K4-hypercubes", "k4rel"};
    app.require_subcommand(1, 1);
    CliOptions o;

    auto add_common = [&o](CLI::App* sub) {
        sub->add_option("--n", o.n, "Dimension (plotdata accepts several)")->required()->expected(1, -1);
        sub->add_option("--out", o.out, "Output path (default: standard output)");
    };

    auto* profile = app.add_subcommand("profile", "CSV of ex, xi and lambda for h = 1 .. 2^(n-1)");
    add_common(profile);
    auto* lambda = app.add_subcommand("lambda", "CSV of lambda_h from the piecewise closed form");
    add_common(lambda);
    auto* intervals = app.add_subcommand("intervals", "CSV of the concentration intervals of lambda_h");
    add_common(intervals);
    auto* conditional = app.add_subcommand("conditional", "CSV of the conditional edge-connectivities");
    add_common(conditional);
    auto* cyclic = app.add_subcommand("cyclic", "Cyclic edge-connectivity");
    add_common(cyclic);
    auto* bitmap = app.add_subcommand("bitmap", "Adjacency matrix as a plain PBM image");
    add_common(bitmap);
    bitmap->add_option("--kind", o.kind, "canonical|random|hypercube|enhanced")
        ->check(CLI::IsMember({"canonical", "random", "hypercube", "enhanced"}));
    bitmap->add_option("--seed", o.seed, "Seed for --kind random");
    bitmap->add_option("--k", o.k, "k for --kind enhanced (default n-1)");
    auto* plotdata = app.add_subcommand("plotdata", "TSV of normalized xi and lambda curves");
    add_common(plotdata);
    auto* verify = app.add_subcommand("verify", "Check the closed forms against brute-force oracles");
    add_common(verify);
    verify->add_option("--seeds", o.seeds, "Number of random members besides the canonical one")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", o.seed, "First seed; members use seed, seed+1, ...");
    verify->add_option("--budget-nodes", o.budget_nodes, "Search-node limit per oracle call")->check(CLI::PositiveNumber);
    verify->add_option("--bounded-size", o.bounded_size, "Largest subset size searched when n exceeds the exhaustive range")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (profile->parsed()) {
            const int n = detail::single_n(o, 3, kMaxProfileDimension);
            detail::emit(o, out, [n](std::ostream& os) { write_profile_csv(os, n); });
        } else if (lambda->parsed()) {
            const int n = detail::single_n(o, 3, kMaxProfileDimension);
            detail::emit(o, out, [n](std::ostream& os) {
                os << "h,lambda\n";
                for (std::uint64_t h = 1; h <= (std::uint64_t{1} << (n - 1)); ++h) os << h << ',' << to_string(lambda_fast(h, n)) << '\n';
            });
        } else if (intervals->parsed()) {
            const int n = detail::single_n(o, 3, kMaxClosedFormDimension);
            detail::emit(o, out, [n](std::ostream& os) { write_intervals_csv(os, n); });
        } else if (conditional->parsed()) {
            const int n = detail::single_n(o, 3, kMaxClosedFormDimension);
            detail::emit(o, out, [n](std::ostream& os) { write_conditional_csv(os, n); });
        } else if (cyclic->parsed()) {
            const int n = detail::single_n(o, 3, kMaxClosedFormDimension);
            detail::emit(o, out, [n](std::ostream& os) { os << "n,cyclic\n" << n << ',' << to_string(cyclic_lambda(n)) << '\n'; });
        } else if (bitmap->parsed()) {
            const int n = detail::single_n(o, 2, 12);
            const auto g = detail::graph_for(o, n);
            detail::emit(o, out, [&g](std::ostream& os) { write_bitmap(os, g); });
        } else if (plotdata->parsed()) {
            for (int n : o.n)
                if (n < 3 || n > kMaxProfileDimension)
                    throw detail::UsageError("--n " + std::to_string(n) + " outside [3, " + std::to_string(kMaxProfileDimension) + "]");
            detail::emit(o, out, [&o](std::ostream& os) { write_plotdata_tsv(os, o.n); });
        } else if (verify->parsed()) {
            const int n = detail::single_n(o, 3, 5);
            std::vector<std::uint64_t> seeds;
            for (int i = 0; i < o.seeds; ++i) seeds.push_back(o.seed + static_cast<std::uint64_t>(i));
            OracleBudget budget;
            budget.node_limit = o.budget_nodes;
            budget.max_subset_size_bounded = o.bounded_size;
            const auto report = verify_member(n, seeds, budget);
            report.write_text(out);
            if (!o.out.empty()) {
                auto lines_only = o;
                detail::emit(lines_only, out, [&report](std::ostream& os) { report.write_lines(os); });
            }
            return report.passed() ? kExitOk : kExitMismatch;
        }
    } catch (const detail::UsageError& e) {
        err << "k4rel: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "k4rel: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "k4rel: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace k4cube
