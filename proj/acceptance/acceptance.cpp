// Acceptance gate: runs the full regression case registry grouped by
// criterion, one pass/fail line per criterion, enforcing the stated
// runtime limits.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <ellsurf/ellsurf.hpp>

namespace {

const std::map<int, const char*> kCriterionTitles = {
    {1, "modular g1 table (N = 11..25)            [< 10 ms]"},
    {2, "t-function special values"},
    {3, "t(N) <= 1/9 for 26 <= N <= 10000         [< 5 s]"},
    {4, "certified genus lower bound, N <= 1000   [< 5 s]"},
    {5, "sharp Mordell-Weil torsion bounds"},
    {6, "fiber classification of the catalog      [< 100 ms each]"},
    {7, "torsion gluing across the catalog"},
    {8, "splitting at semistable fibers"},
    {9, "transform: the I9 quotient"},
    {10, "transform: the I8 family (s = 1, 2, 3)"},
    {11, "transform: the four-I3 equality case"},
    {12, "transform: |Aut_Q| = 4(P2+1) pattern"},
    {13, "lattice fixtures: glue and overlattices"},
    {14, "isotrivial datasets r = 3, 4, 6"},
    {15, "seeded property suites"},
};

}  // namespace

int main(int argc, char** argv) {
    unsigned long seed = 20260819UL;
    if (argc > 1) seed = std::stoul(argv[1]);

    struct Tally {
        bool pass = true;
        double ms = 0;
        std::vector<std::string> failures;
    };
    std::map<int, Tally> tallies;

    const auto t_start = std::chrono::steady_clock::now();
    for (const auto& c : ellsurf::verify_cases()) {
        Tally& t = tallies[c.criterion];
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(seed);
        } catch (const std::exception& e) {
            t.pass = false;
            t.failures.push_back(c.id + ": " + e.what());
        }
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        t.ms += ms;
        if (c.limit_ms > 0 && ms > c.limit_ms) {
            t.pass = false;
            t.failures.push_back(c.id + ": took " + std::to_string(ms) + " ms, limit " +
                                 std::to_string(c.limit_ms) + " ms");
        }
    }
    double total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start)
            .count();

    int failed = 0;
    for (const auto& [crit, title] : kCriterionTitles) {
        auto it = tallies.find(crit);
        bool pass = it != tallies.end() && it->second.pass;
        double ms = it == tallies.end() ? 0 : it->second.ms;
        if (it == tallies.end()) {
            std::printf("FAIL  criterion %2d  %-58s (no cases registered)\n", crit, title);
            ++failed;
            continue;
        }
        std::printf("%s  criterion %2d  %-58s %9.1f ms\n", pass ? "PASS" : "FAIL", crit, title,
                    ms);
        if (!pass) {
            ++failed;
            for (const auto& f : it->second.failures) std::printf("      %s\n", f.c_str());
        }
    }

    bool total_ok = total_ms < 60000.0;
    std::printf("%s  total runtime %.1f ms (limit 60000 ms)\n", total_ok ? "PASS" : "FAIL",
                total_ms);
    if (!total_ok) ++failed;
    std::printf("%d of %zu criteria failed\n", failed, kCriterionTitles.size());
    return failed == 0 ? 0 : 1;
}
