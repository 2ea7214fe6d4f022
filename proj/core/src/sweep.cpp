#include "partcrt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace partcrt {

namespace {

// Raw modulo draws keep the sequence identical across standard libraries;
// the bias is irrelevant for test-case generation.
u64 draw(std::mt19937_64& rng, u64 lo, u64 hi) {
    return lo + rng() % (hi - lo + 1);
}

// Caps that keep exact verification of a sampled instance cheap.
constexpr u64 kMaxSumCap = 300;      // largest multiplicity sum
constexpr u64 kPairScanCap = 200000; // largest pairwise disjointness scan

// Rejection sampling needs headroom-safe arithmetic; the bounds below keep
// every intermediate product inside u64.
void validate_config(const SweepConfig& cfg) {
    if (cfg.s_max < 1 || cfg.s_max > 6 || cfg.m_max < 1 || cfg.m_max > 50 || cfg.k_max < 1 ||
        cfg.k_max > 50 || cfg.l_max < 1 || cfg.l_max > 50) {
        throw InvalidParamsError("sweep: bounds must satisfy 1 <= s <= 6, 1 <= m,k,l <= 50");
    }
    if (cfg.samples == 0 || cfg.samples > 100000) {
        throw InvalidParamsError("sweep: samples must be in [1, 100000]");
    }
    if (cfg.oracle_max > kOracleBound) {
        throw InvalidParamsError("sweep: oracle window capped at " +
                                 std::to_string(kOracleBound));
    }
    if (cfg.n_max > 100000) {
        throw InvalidParamsError("sweep: count window capped at 100000");
    }
}

// Rejection loops give up eventually rather than spinning on bounds that
// admit no cheap instance.
constexpr int kMaxRejections = 100000;

u64 max_sum_bound(const std::vector<u64>& coefs, const std::vector<u64>& radices) {
    u64 total = 0;
    for (std::size_t i = 0; i < coefs.size(); ++i) {
        total += coefs[i] * (radices[i] - 1);
    }
    return total;
}

bool class_periods_scan_cheaply(const std::vector<DifferenceClass>& classes) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            const u64 pi = classes[i].period();
            const u64 pj = classes[j].period();
            if (pi > kPairScanCap || pj > kPairScanCap) {
                return false;
            }
            if (pi / std::gcd(pi, pj) > kPairScanCap / pj) {
                return false;
            }
        }
    }
    return true;
}

std::vector<DifferenceClass> crt_classes(const CrtBuildParams& p, const CrtSolution& sol,
                                         const std::vector<u64>& r) {
    std::vector<DifferenceClass> classes;
    const u64 mk = sol.modulus * p.k;
    if (!p.l) {
        classes.emplace_back(mk, std::nullopt);
    } else if (*p.l > 1) {
        classes.emplace_back(mk, mk * *p.l);
    }
    for (std::size_t i = 0; i < p.system.moduli.size(); ++i) {
        if (p.system.moduli[i] > 1) {
            classes.emplace_back(r[i], r[i] * p.system.moduli[i]);
        }
    }
    return classes;
}

}  // namespace

std::vector<CrtBuildParams> sample_crt_params(u64 count, u64 seed, const SweepConfig& cfg) {
    validate_config(cfg);
    std::mt19937_64 rng(seed);
    std::vector<CrtBuildParams> out;
    out.reserve(count);
    int rejections = 0;
    while (out.size() < count) {
        if (rejections > kMaxRejections) {
            throw InvalidParamsError("sweep: bounds admit no cheap instances");
        }
        CrtBuildParams p;
        const u64 s = draw(rng, 1, cfg.s_max);
        for (u64 i = 0; i < s; ++i) {
            for (int tries = 0;; ++tries) {
                const u64 m = draw(rng, 1, cfg.m_max);
                const bool coprime = std::all_of(p.system.moduli.begin(), p.system.moduli.end(),
                                                 [m](u64 prev) { return std::gcd(prev, m) == 1; });
                if (coprime) {
                    p.system.moduli.push_back(m);
                    break;
                }
                if (tries > 100) {
                    p.system.moduli.push_back(1);
                    break;
                }
            }
        }
        for (u64 m : p.system.moduli) {
            u64 a = 1;
            while (std::gcd(a = draw(rng, 1, m), m) != 1) {
            }
            p.system.offsets.push_back(a);
        }
        p.k = draw(rng, 1, cfg.k_max);
        const u64 l_draw = draw(rng, 0, cfg.l_max);
        p.l = l_draw == 0 ? std::nullopt : std::optional<u64>(l_draw);

        const CrtSolution sol = crt_solve(p.system);
        std::vector<u64> r = sol.lifts;
        if (draw(rng, 0, 3) == 0) {
            for (auto& ri : r) {
                ri += sol.modulus * draw(rng, 0, 2);
            }
            p.r_overrides = r;
        }

        std::vector<u64> coefs = r;
        std::vector<u64> radices = p.system.moduli;
        if (p.l) {
            coefs.push_back(sol.modulus * p.k);
            radices.push_back(*p.l);
        }
        if (max_sum_bound(coefs, radices) > kMaxSumCap ||
            !class_periods_scan_cheaply(crt_classes(p, sol, r))) {
            ++rejections;
            continue;
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<ChainBuildParams> sample_chain_params(u64 count, u64 seed, const SweepConfig& cfg) {
    validate_config(cfg);
    std::mt19937_64 rng(seed);
    std::vector<ChainBuildParams> out;
    out.reserve(count);
    int rejections = 0;
    while (out.size() < count) {
        if (rejections > kMaxRejections) {
            throw InvalidParamsError("sweep: bounds admit no cheap instances");
        }
        ChainBuildParams p;
        const u64 s = draw(rng, 1, cfg.s_max);
        for (u64 i = 0; i < s; ++i) {
            p.moduli.push_back(draw(rng, 1, cfg.m_max));
        }
        // Bias some leading moduli toward catalog claims with r_1 == 1 so the
        // transferred-congruence path gets exercised.
        if (draw(rng, 0, 3) == 0) {
            p.moduli[0] = draw(rng, 0, 1) == 0 ? 5 : 7;
            p.r.push_back(1);
        } else {
            p.r.push_back(draw(rng, 1, 3));
        }
        for (u64 i = 0; i < s; ++i) {
            p.r.push_back(p.r.back() * draw(rng, 1, 3));
        }
        const u64 l_draw = draw(rng, 0, cfg.l_max);
        p.l = l_draw == 0 ? std::nullopt : std::optional<u64>(l_draw);

        std::vector<u64> coefs(s + 1);
        u64 prefix = 1;
        for (std::size_t i = 0; i < s; ++i) {
            coefs[i] = prefix * p.r[i];
            prefix *= p.moduli[i];
        }
        coefs[s] = prefix * p.r[s];
        std::vector<u64> radices = p.moduli;
        radices.push_back(p.l ? *p.l : 1);
        if (max_sum_bound(coefs, radices) > kMaxSumCap ||
            coefs[s] * (p.l ? *p.l : 2) > kPairScanCap) {
            ++rejections;
            continue;
        }
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

std::string join(const std::vector<u64>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    return os.str();
}

std::string label_of(const CrtBuildParams& p) {
    std::ostringstream os;
    os << "crt m=[" << join(p.system.moduli) << "] a=[" << join(p.system.offsets) << "] k=" << p.k
       << " l=" << (p.l ? std::to_string(*p.l) : "inf");
    if (!p.r_overrides.empty()) {
        os << " r=[" << join(p.r_overrides) << "]";
    }
    return os.str();
}

std::string label_of(const ChainBuildParams& p) {
    std::ostringstream os;
    os << "chain m=[" << join(p.moduli) << "] r=[" << join(p.r) << "] l="
       << (p.l ? std::to_string(*p.l) : "inf");
    return os.str();
}

std::optional<CongruenceClaim> catalog_claim_for(u64 modulus) {
    for (const auto& c : catalog()) {
        if (c.modulus == modulus) {
            return c;
        }
    }
    return std::nullopt;
}

// Runs every applicable check on one built instance; returns the first
// failure description, empty on success.
std::string examine(const IdentityInstance& inst, const SweepConfig& cfg) {
    const u64 poly_n = std::max<u64>(inst.multiplicities.max_core(), 60);
    if (!verify_polynomial(inst, poly_n)) {
        return "polynomial identity failed at order " + std::to_string(poly_n);
    }
    const CountsReport counts =
        verify_counts(inst.multiplicities, inst.parts, cfg.n_max, cfg.oracle_max);
    if (!counts.pass) {
        return "count mismatch at n = " + std::to_string(counts.first_mismatch->n);
    }
    if (const auto* crt = std::get_if<CrtProvenance>(&inst.provenance)) {
        for (std::size_t i = 1; i <= crt->system.moduli.size(); ++i) {
            const auto base = catalog_claim_for(crt->system.moduli[i - 1]);
            if (!base) {
                continue;
            }
            const CongruenceClaim claim = transfer_crt(inst, i, *base);
            const ClaimReport rep = check_claim(inst.multiplicities, claim, cfg.congruence_max);
            if (!rep.pass) {
                return "transferred claim (" + std::to_string(claim.modulus) + "n+" +
                       std::to_string(claim.offset) + ") mod " + std::to_string(claim.divisor) +
                       " violated at n = " + std::to_string(rep.violations.front().n);
            }
        }
    } else if (const auto* chain = std::get_if<ChainProvenance>(&inst.provenance)) {
        // The chain transfer is only exercised when r_1 == 1 (mod m_1); see
        // the congruence tests for the counterexample that rules out the
        // general case.
        const auto base = catalog_claim_for(chain->moduli.front());
        if (base && chain->r.front() % chain->moduli.front() == 1) {
            const CongruenceClaim claim = transfer_chain(inst, *base);
            const ClaimReport rep = check_claim(inst.multiplicities, claim, cfg.congruence_max);
            if (!rep.pass) {
                return "transferred claim (" + std::to_string(claim.modulus) + "n+" +
                       std::to_string(claim.offset) + ") mod " + std::to_string(claim.divisor) +
                       " violated at n = " + std::to_string(rep.violations.front().n);
            }
        }
    }
    return {};
}

unsigned effective_threads(unsigned requested) {
    unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PARTITION_CRT_THREADS")) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap > 0) {
            n = std::min<unsigned>(n, (unsigned)cap);
        }
    }
    return n;
}

}  // namespace

SweepSummary run_sweep(const SweepConfig& cfg) {
    const u64 crt_count = cfg.samples / 2 + cfg.samples % 2;
    const u64 chain_count = cfg.samples / 2;
    const auto crt_params = sample_crt_params(crt_count, cfg.seed, cfg);
    const auto chain_params = sample_chain_params(chain_count, cfg.seed + 1, cfg);

    struct Job {
        std::string label;
        std::function<IdentityInstance()> build;
    };
    std::vector<Job> jobs;
    jobs.reserve(cfg.samples + 1);
    for (const auto& p : crt_params) {
        jobs.push_back(Job{label_of(p), [p] { return build_crt(p); }});
    }
    for (const auto& p : chain_params) {
        jobs.push_back(Job{label_of(p), [p] { return build_chain(p); }});
    }
    if (cfg.inject_fault) {
        jobs.push_back(Job{"fault-injection", [] {
                               IdentityInstance inst = preset_euler();
                               inst.multiplicities = MultiplicitySet::finite({});
                               return inst;
                           }});
    }

    SweepSummary summary;
    summary.seed = cfg.seed;
    summary.total = jobs.size();
    summary.records.resize(jobs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            SweepRecord rec;
            rec.label = jobs[i].label;
            try {
                const IdentityInstance inst = jobs[i].build();
                rec.detail = examine(inst, cfg);
                rec.pass = rec.detail.empty();
            } catch (const Error& e) {
                rec.pass = false;
                rec.detail = std::string("construction failed: ") + e.what();
            }
            summary.records[i] = std::move(rec);
        }
    };
    const unsigned nthreads =
        std::min<std::size_t>(effective_threads(cfg.threads), std::max<std::size_t>(jobs.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }

    summary.passed = (u64)std::count_if(summary.records.begin(), summary.records.end(),
                                        [](const SweepRecord& r) { return r.pass; });
    return summary;
}

}  // namespace partcrt
