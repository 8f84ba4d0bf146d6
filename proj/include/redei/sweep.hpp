#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "redei/report.hpp"

namespace redei {

// Grid sweep over odd primes in [p_lo, p_hi]. Grids are fixed per theorem
// (see the README table); sampled grids draw per-item generators seeded from
// (seed, item coordinates), so records never depend on worker scheduling.
struct SweepConfig {
    std::uint32_t p_lo = 3;
    std::uint32_t p_hi = 31;
    std::string theorem = "main"; // main|main2|strengthened|pairs|directions|corollary|remark2
    std::uint32_t workers = 1;
    std::uint64_t seed = 1;
};

struct SweepSummary {
    std::vector<VerificationRecord> records; // sorted, elapsed_ms zeroed
    std::uint64_t pass_count = 0;
    std::uint64_t fail_count = 0;
    std::uint64_t wall_ms = 0; // not part of the report files
};

SweepSummary run_sweep(const SweepConfig& config);

} // namespace redei
