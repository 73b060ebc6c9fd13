#include "pcpoly/survey.hpp"
#include "pcpoly/clique.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

namespace pcpoly {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PCPOLY_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

constexpr std::uint64_t kChunk = 4096;

// Runs work(lo, hi, out) over [0, total) in fixed chunks, then merges the
// per-chunk results in chunk order so output does not depend on threads.
template <class R, class Work, class Merge>
void parallel_chunks(std::uint64_t total, int threads, Work work, Merge merge) {
    std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<R> results(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;)
            work(c * kChunk, std::min(total, (c + 1) * kChunk), results[c]);
    };
    int t = std::max(1, std::min<int>(resolve_threads(threads), static_cast<int>(chunks)));
    std::vector<std::thread> pool;
    for (int i = 1; i < t; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& r : results) merge(r);
}

void check_n(int n, int cap) {
    if (n < 1 || n > cap) throw GraphError("survey size out of range");
}

} // namespace

CensusRow survey_nonreal(int n, int threads) {
    if (n < 2 || n > 7) throw GraphError("survey_nonreal needs 2 <= n <= 7");
    CensusRow row;
    row.n = n;
    std::uint64_t total = std::uint64_t{1} << edge_slots(n);
    parallel_chunks<CensusRow>(
        total, threads,
        [&](std::uint64_t lo, std::uint64_t hi, CensusRow& out) {
            std::map<std::vector<unsigned long>, int> cache;
            for (std::uint64_t m = lo; m < hi; ++m) {
                CliqueProfile p = clique_profile(graph_from_edge_mask(n, m));
                auto it = cache.find(p.counts);
                if (it == cache.end()) it = cache.emplace(p.counts, count_nonreal_roots(pc_polynomial(p))).first;
                ++out.graphs_total;
                out.roots_total += p.omega();
                out.roots_nonreal += it->second;
                out.polys_with_nonreal += it->second > 0;
            }
        },
        [&](const CensusRow& r) {
            row.graphs_total += r.graphs_total;
            row.roots_total += r.roots_total;
            row.roots_nonreal += r.roots_nonreal;
            row.polys_with_nonreal += r.polys_with_nonreal;
        });
    return row;
}

namespace {

struct ProfileFacts {
    Order fisher, lower, upper, two, max_cmp;
    bool real_rooted;
    Order samuelson;  // only meaningful when real_rooted
    double e = 0;
};

ProfileFacts facts_of(const CliqueProfile& p, int n) {
    ProfileFacts f;
    IntPoly pc = pc_polynomial(p);
    RootEnclosure b = beta_of_profile(p);
    long k = p.counts.size() > 2 ? static_cast<long>(p.counts[2]) : 0;
    f.fisher = compare_root_rational(pc, b, Rat(n) - Rat(2 * k, n));
    f.lower = compare_root_rational(pc, b, Rat(n, p.omega()));
    f.upper = compare_root_rational(pc, b, Rat(n));
    f.two = compare_root_rational(pc, b, Rat(2));
    f.real_rooted = count_nonreal_roots(pc) == 0;
    f.samuelson = compare_root_rational(pc, b, Rat(n) - Rat(k, n));
    ExtremalResult mx = max_beta_graph(n, k);
    f.max_cmp = compare_roots(pc, b, mx.predicted_beta.poly, mx.predicted_beta.root);
    if (k > 0) f.e = (n - b.approx()) / k;
    return f;
}

bool le(Order o) { return o == Order::less || o == Order::equal; }
bool ge(Order o) { return o == Order::greater || o == Order::equal; }

} // namespace

BoundsReport survey_bounds(int n, int threads) {
    check_n(n, 7);
    BoundsReport rep;
    rep.n = n;
    rep.e_min = 1e300;
    rep.e_max = 0;
    std::uint64_t total = std::uint64_t{1} << edge_slots(n);
    parallel_chunks<BoundsReport>(
        total, threads,
        [&](std::uint64_t lo, std::uint64_t hi, BoundsReport& out) {
            out.e_min = 1e300;
            std::map<std::vector<unsigned long>, ProfileFacts> cache;
            for (std::uint64_t m = lo; m < hi; ++m) {
                Graph g = graph_from_edge_mask(n, m);
                CliqueProfile p = clique_profile(g);
                auto it = cache.find(p.counts);
                if (it == cache.end()) it = cache.emplace(p.counts, facts_of(p, n)).first;
                const ProfileFacts& f = it->second;
                long k = g.num_edges();
                bool empty = k == 0, complete = 2 * k == static_cast<long>(n) * (n - 1);
                bool equal_parts = is_equal_multipartite(g);
                auto fail = [&](const char* what) { out.violations.push_back({what, to_graph6(g)}); };
                ++out.graphs;
                if (!ge(f.fisher)) fail("beta >= n - 2k/n");
                if ((f.fisher == Order::equal) != (empty || equal_parts)) fail("equality in beta >= n - 2k/n");
                out.fisher_equality += f.fisher == Order::equal;
                if (!ge(f.lower)) fail("beta >= n/omega");
                if ((f.lower == Order::equal) != equal_parts) fail("equality in beta >= n/omega");
                if (!le(f.upper)) fail("beta <= n");
                if ((f.upper == Order::equal) != empty) fail("equality in beta <= n");
                if (!complete && n > 1 && !ge(f.two)) fail("beta >= 2 for non-complete G");
                if (k > 0 && f.e > 2.0 / n + 1e-12) fail("e(G) <= 2/n");
                if (f.real_rooted) {
                    ++out.real_rooted;
                    if (!le(f.samuelson)) fail("beta <= n - k/n for real-rooted PC");
                }
                if (!le(f.max_cmp)) fail("beta <= maximum construction");
                if (k > 0) {
                    out.e_min = std::min(out.e_min, f.e);
                    out.e_max = std::max(out.e_max, f.e);
                }
            }
        },
        [&](const BoundsReport& r) {
            rep.graphs += r.graphs;
            rep.fisher_equality += r.fisher_equality;
            rep.real_rooted += r.real_rooted;
            rep.violations.insert(rep.violations.end(), r.violations.begin(), r.violations.end());
            if (r.graphs && r.e_min <= r.e_max) {
                rep.e_min = std::min(rep.e_min, r.e_min);
                rep.e_max = std::max(rep.e_max, r.e_max);
            }
        });
    if (rep.e_min > rep.e_max) rep.e_min = rep.e_max = 0;
    return rep;
}

Interval average_beta(int n, const Rat& width, int threads) {
    check_n(n, 6);
    struct Tally {
        std::map<std::vector<unsigned long>, long> counts;
    };
    std::map<std::vector<unsigned long>, long> all;
    std::uint64_t total = std::uint64_t{1} << edge_slots(n);
    parallel_chunks<Tally>(
        total, threads,
        [&](std::uint64_t lo, std::uint64_t hi, Tally& out) {
            for (std::uint64_t m = lo; m < hi; ++m) ++out.counts[clique_profile(graph_from_edge_mask(n, m)).counts];
        },
        [&](const Tally& t) {
            for (auto& [k, v] : t.counts) all[k] += v;
        });
    Interval sum{Rat(0), Rat(0)};
    for (auto& [counts, mult] : all) {
        CliqueProfile p;
        p.counts = counts;
        RootEnclosure b = beta_of_profile(p, width);
        sum.lo += b.lo * mult;
        sum.hi += b.hi * mult;
    }
    Rat denom{Int(static_cast<unsigned long>(total))};
    return {sum.lo / denom, sum.hi / denom};
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "n,graphs_total,polys_with_nonreal,roots_total,roots_nonreal\n";
    for (auto& r : rows)
        out << r.n << "," << r.graphs_total << "," << r.polys_with_nonreal << "," << r.roots_total << "," << r.roots_nonreal
            << "\n";
    return out.str();
}

} // namespace pcpoly
