// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact; each criterion also has a wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <hypersimplex/cli.hpp>
#include <hypersimplex/hypersimplex.hpp>

#include "oracles.hpp"

using namespace hypersimplex;

namespace {

struct Outcome
{
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome result;
    try {
        result = body();
    } catch (const std::exception& e) {
        result = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = elapsed < budget_seconds;
    const bool pass = result.ok && in_time;
    if (!pass)
        ++failures;
    std::printf("[%s] %d. %s: %s (%.2fs, budget %.0fs%s)\n", pass ? "PASS" : "FAIL", number, title.c_str(),
                result.detail.c_str(), elapsed, budget_seconds, in_time ? "" : ", OVER BUDGET");
    std::fflush(stdout);
}

Outcome identity_sweep_criterion()
{
    const SweepReport rep = identity_sweep(6, 5);
    std::ostringstream msg;
    msg << rep.entries.size() << " triples, " << rep.failures() << " inequalities";
    for (const auto& e : rep.entries)
        if (!e.result.equal)
            msg << "; (d,i,r)=(" << e.d << "," << e.i << "," << e.r << ") lhs=" << e.result.lhs
                << " rhs=" << e.result.rhs;
    return {rep.entries.size() == 105 && rep.all_pass(), msg.str()};
}

Outcome laplace_criterion()
{
    std::size_t cases = 0;
    std::size_t mismatches = 0;
    for (int d = 1; d <= 5; ++d)
        for (int i = 1; i <= d; ++i) {
            ++cases;
            if (ehrhart_normalized_volume(d, i) != eulerian(d, i))
                ++mismatches;
        }
    std::vector<BigInt> counts;
    for (int n = 0; n <= 3; ++n)
        counts.push_back(lattice_point_count(3, 2, n));
    const bool anchor = counts == std::vector<BigInt>{1, 6, 19, 44} && ehrhart_normalized_volume(3, 2) == 4;
    std::ostringstream msg;
    msg << cases << " cases, " << mismatches << " mismatches; anchor (3,2) counts 1,6,19,44 -> 4 "
        << (anchor ? "ok" : "WRONG");
    return {cases == 15 && mismatches == 0 && anchor, msg.str()};
}

Outcome subdivision_criterion()
{
    std::size_t runs = 0;
    std::size_t failed_runs = 0;
    std::size_t min_sampled_run = SIZE_MAX;
    std::ostringstream msg;
    auto record = [&](const VerifyReport& rep, const char* mode) {
        ++runs;
        if (!rep.passed()) {
            ++failed_runs;
            msg << "; H(" << rep.r << "," << rep.d << "," << rep.i << ") " << mode << " failed";
        }
    };
    bool exhaustive_ok = true;
    for (int d = 1; d <= 4; ++d)
        for (int i = 1; i <= d; ++i)
            for (int r = 1; r <= 3; ++r) {
                VerifyOptions opts;
                opts.samples = 1000;
                opts.seed = 0;
                const VerifyReport full = verify_subdivision(r, d, i, opts);
                record(full, "exhaustive");
                if (!full.faces_exhaustive)
                    exhaustive_ok = false;
                if (d == 4) {
                    // Also draw 10^4 random pairs, as a sampled run would at scale.
                    opts.exhaustive_pair_limit = 0;
                    opts.sampled_pairs = 10000;
                    const VerifyReport sampled = verify_subdivision(r, d, i, opts);
                    if (full.cells >= 2) {
                        record(sampled, "sampled");
                        min_sampled_run = std::min(min_sampled_run, sampled.face_pairs);
                    }
                }
            }
    std::ostringstream head;
    head << runs << " verifications, " << failed_runs << " failed; d=4 sampled pairs per run >= "
         << (min_sampled_run == SIZE_MAX ? 0 : min_sampled_run);
    return {failed_runs == 0 && exhaustive_ok && min_sampled_run >= 10000, head.str() + msg.str()};
}

Outcome membership_criterion()
{
    std::mt19937_64 rng(0);
    const std::size_t points = 10000;
    std::size_t disagreements = 0;
    std::size_t checked_cells = 0;
    std::string first;
    for (std::size_t n = 0; n < points; ++n) {
        const int d = 1 + static_cast<int>(n % 4);
        const RationalPoint x = oracle::random_integral_sum_point(rng, d, 100);
        const FracProfile profile = frac_profile(x);
        std::vector<Cell> brute;
        for (const Cell& c : oracle::window_cells(profile.floor)) {
            ++checked_cells;
            const bool truth = oracle::in_translate(x, c.v, c.j);
            if (truth)
                brute.push_back(c);
            if (contains(x, c) != truth || satisfies_membership_criterion(x, c, profile) != truth) {
                if (first.empty())
                    first = format_point(x) + " / " + format_cell(c);
                ++disagreements;
            }
        }
        std::sort(brute.begin(), brute.end());
        if (containing_translates(x) != brute) {
            if (first.empty())
                first = format_point(x) + " family";
            ++disagreements;
        }
    }
    std::ostringstream msg;
    msg << points << " points, " << checked_cells << " window cells, " << disagreements << " disagreements";
    if (!first.empty())
        msg << " (first: " << first << ")";
    return {disagreements == 0, msg.str()};
}

Outcome intersection_criterion()
{
    std::size_t pairs = 0;
    std::size_t mismatches = 0;
    for (int d = 1; d <= 3; ++d) {
        const auto cells = oracle::window_cells(LatticeVector(static_cast<std::size_t>(d) + 1, 0));
        std::vector<std::vector<LatticeVector>> verts;
        for (const Cell& c : cells)
            verts.push_back(oracle::vertices_by_scan(c.v, c.j));
        for (std::size_t a = 0; a < cells.size(); ++a)
            for (std::size_t b = 0; b < cells.size(); ++b) {
                ++pairs;
                std::vector<LatticeVector> common;
                std::set_intersection(verts[a].begin(), verts[a].end(), verts[b].begin(), verts[b].end(),
                                      std::back_inserter(common));
                const Face f = intersect_cells(cells[a], cells[b]);
                const auto fv = f.empty ? std::vector<LatticeVector>{} : face_vertices(f);
                if (fv != common)
                    ++mismatches;
            }
    }
    std::ostringstream msg;
    msg << pairs << " ordered pairs, " << mismatches << " mismatches";
    return {mismatches == 0, msg.str()};
}

Outcome dual_graph_criterion()
{
    std::size_t subdivisions = 0;
    std::size_t pairs = 0;
    std::size_t discrepancies = 0;
    std::vector<std::size_t> per_dimension(5, 0);
    std::string first;
    for (int d = 1; d <= 4; ++d)
        for (int i = 1; i <= d; ++i)
            for (int r = 1; r <= 3; ++r) {
                const DualGraphCheck check = check_dual_graph(build_subdivision(r, d, i));
                ++subdivisions;
                pairs += check.pairs;
                discrepancies += check.discrepancies.size();
                per_dimension[d] += check.discrepancies.size();
                if (first.empty() && !check.discrepancies.empty())
                    first = check.discrepancies.front();
            }
    const DualGraph star = build_dual_graph(build_subdivision(2, 2, 1));
    auto deg = star.degrees();
    std::sort(deg.begin(), deg.end());
    const bool anchor = star.nodes.size() == 4 && star.edges.size() == 3 &&
                        deg == std::vector<std::size_t>{1, 1, 1, 3};
    std::ostringstream msg;
    msg << subdivisions << " subdivisions, " << pairs << " pairs, " << discrepancies
        << " discrepancies (by d=1..4: " << per_dimension[1] << "," << per_dimension[2] << "," << per_dimension[3]
        << "," << per_dimension[4] << "); H(2,2,1) is K_{1,3}: " << (anchor ? "yes" : "NO");
    if (!first.empty())
        msg << "; first: " << first;
    return {discrepancies == 0 && anchor, msg.str()};
}

Outcome determinism_criterion()
{
    const std::vector<std::string> args{"hypersimplex_cli", "verify", "--d", "3", "--i", "2", "--r", "2",
                                        "--samples", "1000", "--seed", "0", "--format", "json"};
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run_cli(args, out1, err1);
    const int c2 = cli::run_cli(args, out2, err2);
    const bool same = out1.str() == out2.str() && !out1.str().empty();
    std::ostringstream msg;
    msg << "exit codes " << c1 << "," << c2 << "; " << out1.str().size() << " bytes, "
        << (same ? "byte-identical" : "DIFFERENT");
    return {same && c1 == 0 && c2 == 0, msg.str()};
}

}  // namespace

int main()
{
    criterion(1, "Brenti-Welker identity, d<=6, r<=5", 5, identity_sweep_criterion);
    criterion(2, "Ehrhart volume equals Eulerian number, d<=5", 2, laplace_criterion);
    criterion(3, "H(r,d,i) subdivides r*Delta(d,i), d<=4, r<=3", 60, subdivision_criterion);
    criterion(4, "membership characterizations agree with window scan", 30, membership_criterion);
    criterion(5, "intersection face equals common vertex set, d<=3", 30, intersection_criterion);
    criterion(6, "dual graph unit-difference rule equals facet rule, d<=4, r<=3", 20, dual_graph_criterion);
    criterion(7, "verify --format json is byte-identical across runs", 30, determinism_criterion);
    std::printf("%s: %d of 7 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
