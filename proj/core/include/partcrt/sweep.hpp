#pragma once

#include <string>
#include <vector>

#include "partcrt/congruences.hpp"
#include "partcrt/identities.hpp"

namespace partcrt {

// Bounds for randomized parameter sampling and the verification work done on
// each sampled instance.
struct SweepConfig {
    u64 samples = 200;        // split evenly between the two builders
    u64 seed = 1;
    u64 s_max = 3;
    u64 m_max = 7;
    u64 k_max = 2;
    u64 l_max = 3;
    u64 n_max = 120;          // count agreement window
    u64 oracle_max = 30;      // brute-force agreement window
    u64 congruence_max = 100; // transferred-claim window
    unsigned threads = 0;     // 0: hardware concurrency; always capped by
                              // the PARTITION_CRT_THREADS environment variable
    bool inject_fault = false;  // appends one deliberately broken instance
};

struct SweepRecord {
    std::string label;  // deterministic parameter description
    bool pass = false;
    std::string detail;  // first failure, empty when pass
};

struct SweepSummary {
    u64 seed = 0;
    u64 total = 0;
    u64 passed = 0;
    std::vector<SweepRecord> records;  // in generation order

    bool all_passed() const { return passed == total; }
};

// Sampling is rejection-based and fully determined by the seed: parameters
// are redrawn until the instance is small enough that exact verification
// stays cheap (bounded multiplicity sums, bounded class periods).
std::vector<CrtBuildParams> sample_crt_params(u64 count, u64 seed, const SweepConfig& cfg);
std::vector<ChainBuildParams> sample_chain_params(u64 count, u64 seed, const SweepConfig& cfg);

// Builds every sampled instance and runs the polynomial check, the dual
// counting check against the brute oracle, and, where a sampled modulus
// matches a catalog claim, the transferred congruence check.
SweepSummary run_sweep(const SweepConfig& cfg);

}  // namespace partcrt
