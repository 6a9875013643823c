#ifndef HASSE_CENSUS_HPP
#define HASSE_CENSUS_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace hasse {

/// (r, s, x, y, d) mod 27 together with the claim it breaks.
struct CensusCounterexample {
    std::string claim; // "7.4" or "7.5"
    std::array<unsigned, 5> quintuple{};
    bool operator==(const CensusCounterexample &) const = default;
};

struct CensusResult {
    std::uint64_t master_count = 0;
    bool claim74_holds = true;
    bool claim75_holds = true;
    std::vector<CensusCounterexample> counterexamples; // at most kCensusMaxCounterexamples
    std::chrono::milliseconds elapsed{0};
};

inline constexpr std::size_t kCensusMaxCounterexamples = 32;

/// Exhaustive check over all quintuples mod 27, split into 27 slices by r and
/// run on up to `jobs` threads. The result (apart from elapsed) does not
/// depend on `jobs`.
CensusResult run_census(unsigned jobs = 1);

} // namespace hasse

#endif
