#include "hasse/census.hpp"

#include <atomic>
#include <thread>

#include "hasse/membership.hpp"

namespace hasse {

namespace {

constexpr unsigned M = 27;

struct SliceResult {
    std::uint64_t master = 0;
    bool holds74 = true, holds75 = true;
    std::vector<CensusCounterexample> bad;
};

bool in_pd(const PdTable &t, unsigned n, unsigned a) { return t.allows(n % 9, a % M); }

SliceResult run_slice(unsigned r)
{
    const PdTable &table = PdTable::instance();
    SliceResult out;
    auto record = [&](const char *claim, unsigned s, unsigned x, unsigned y, unsigned d) {
        if (out.bad.size() < kCensusMaxCounterexamples) out.bad.push_back({claim, {r, s, x, y, d}});
    };
    for (unsigned d = 0; d < M; ++d)
        for (unsigned s = 0; s < M; ++s) {
            const unsigned n = (r * r + (M * M - d * s % M * s % M)) % M;
            const unsigned b1 = n * r % M, b2 = n * s % M; // beta = n r + n s sqrt d
            const bool beta_in = in_pd(table, n, b1);
            for (unsigned x = 0; x < M; ++x)
                for (unsigned y = 0; y < M; ++y) {
                    const unsigned m = (x * x + M * M - d * y % M * y % M) % M;
                    if (m % 3 == 0) continue;
                    ++out.master;
                    // mu^3 = (x^3 + 3 x y^2 d) + (3 x^2 y + y^3 d) sqrt d
                    const unsigned c1 = (x * x % M * x + 3 * x * (y * y % M) % M * d) % M;
                    const unsigned c2 = (3 * (x * x % M) * y + y * y % M * y % M * d) % M;
                    const unsigned nm = n * m % M;
                    const unsigned prod1 = (b1 * c1 + b2 * c2 % M * d) % M;
                    if (in_pd(table, nm, prod1) != beta_in) {
                        out.holds74 = false;
                        record("7.4", s, x, y, d);
                    }
                    // gamma = m x + m y sqrt d, norm m^3
                    const unsigned g1 = m * x % M, g2 = m * y % M;
                    if (beta_in && in_pd(table, m, g1)) {
                        const unsigned prod2 = (b1 * g1 + b2 * g2 % M * d) % M;
                        if (!in_pd(table, nm, prod2)) {
                            out.holds75 = false;
                            record("7.5", s, x, y, d);
                        }
                    }
                }
        }
    return out;
}

} // namespace

CensusResult run_census(unsigned jobs)
{
    const auto start = std::chrono::steady_clock::now();
    std::vector<SliceResult> slices(M);
    std::atomic<unsigned> next{0};
    auto worker = [&] {
        for (unsigned r; (r = next++) < M;) slices[r] = run_slice(r);
    };
    jobs = std::max(1u, std::min(jobs, M));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto &t : pool) t.join();

    CensusResult res;
    for (const auto &s : slices) {
        res.master_count += s.master;
        res.claim74_holds = res.claim74_holds && s.holds74;
        res.claim75_holds = res.claim75_holds && s.holds75;
        for (const auto &c : s.bad)
            if (res.counterexamples.size() < kCensusMaxCounterexamples) res.counterexamples.push_back(c);
    }
    res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return res;
}

} // namespace hasse
