// Acceptance gate: every release criterion in one binary, one line each.
// Run as: acceptance --cli /path/to/partcrt

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "partcrt/congruences.hpp"
#include "partcrt/identities.hpp"
#include "partcrt/json_io.hpp"
#include "partcrt/partitions.hpp"
#include "partcrt/sweep.hpp"

namespace {

using partcrt::build_chain;
using partcrt::build_crt;
using partcrt::CongruenceClaim;
using partcrt::CountTable;
using partcrt::CrtBuildParams;
using partcrt::DifferenceClass;
using partcrt::IdentityInstance;
using partcrt::MultiplicitySet;
using partcrt::ResidueClassUnion;
using partcrt::u64;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string g_cli;  // path to the command line binary, from --cli

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    require(f.good(), "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Runs the installed binary, captures stdout, fails on nonzero exit.
std::string cli_capture(const std::string& args) {
    const std::string path = "acceptance_cli_out.json";
    const std::string cmd = "\"" + g_cli + "\" " + args + " > " + path;
    const int status = std::system(cmd.c_str());
    require(status == 0, "command '" + args + "' exited with status " + std::to_string(status));
    const std::string out = slurp(path);
    std::remove(path.c_str());
    return out;
}

CrtBuildParams crt_params(std::vector<u64> m, std::vector<u64> a, u64 k, std::optional<u64> l) {
    CrtBuildParams p;
    p.system.moduli = std::move(m);
    p.system.offsets = std::move(a);
    p.k = k;
    p.l = l;
    return p;
}

IdentityInstance worked_example() {
    return build_crt(crt_params({2, 3, 5}, {1, 1, 1}, 1, 1));
}

// Shared instance pool: the worked example, every preset family, and seeded
// random draws from both builders.  Filled by C03, reused by C04.
std::vector<IdentityInstance> g_pool;

void fill_pool() {
    if (!g_pool.empty()) return;
    g_pool.push_back(worked_example());
    g_pool.push_back(partcrt::preset_euler());
    g_pool.push_back(partcrt::preset_glaisher(3));
    g_pool.push_back(partcrt::preset_macmahon());
    g_pool.push_back(partcrt::preset_andrews(1));
    g_pool.push_back(partcrt::preset_subbarao(2, 1));
    g_pool.push_back(partcrt::preset_subbarao(std::nullopt, 1));
    g_pool.push_back(partcrt::preset_nm(2, 1, 1, 3));
    partcrt::SweepConfig cfg;
    for (const auto& params : partcrt::sample_crt_params(100, 20250819, cfg)) {
        g_pool.push_back(build_crt(params));
    }
    for (const auto& params : partcrt::sample_chain_params(100, 20250820, cfg)) {
        g_pool.push_back(build_chain(params));
    }
}

void c01_coprime_generator_golden() {
    const auto start = std::chrono::steady_clock::now();
    const std::string out = cli_capture("gen crt --m 2,3,5 --a 1,1,1");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const IdentityInstance inst = partcrt::instance_from_json(out);
    const std::vector<u64> expected = {6,  10, 12, 15, 16, 18, 20, 21, 22, 24,
                                       25, 26, 27, 28, 31, 32, 33, 34, 35, 37,
                                       38, 39, 41, 43, 44, 47, 49, 53, 59};
    require(inst.multiplicities.core() == expected, "multiplicity set differs from the golden value");
    require(!inst.multiplicities.is_periodic(), "expected a finite multiplicity set");
    require(inst.factors == std::vector<partcrt::QuotientFactor>{{15, 30}, {10, 30}, {6, 30}},
            "product factors differ from the golden value");
    require(inst.parts.residues_mod(30) == std::vector<u64>{6, 10, 12, 15, 18, 20, 24},
            "part residues differ from the golden value");
    require(secs < 0.1, "generation took " + std::to_string(secs) + "s, budget 0.1s");
}

void c02_unbounded_generator_golden() {
    const auto start = std::chrono::steady_clock::now();
    const std::string out = cli_capture("gen crt --m 2,3 --a 1,1 --l inf");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const IdentityInstance inst = partcrt::instance_from_json(out);
    require(inst.multiplicities.is_periodic(), "expected a periodic multiplicity set");
    require(inst.multiplicities.core() == std::vector<u64>{3, 4, 6, 7, 8, 11},
            "periodic core differs from the golden value");
    require(inst.multiplicities.period() == std::optional<u64>(6), "period should be 6");
    require(partcrt::finite_complement(inst) == std::vector<u64>{1, 2, 5},
            "finite complement should be {1, 2, 5}");
    require(inst.parts.residues_mod(12) == std::vector<u64>{0, 3, 4, 6, 8, 9},
            "part residues mod 12 differ from the golden value");
    require(secs < 0.1, "generation took " + std::to_string(secs) + "s, budget 0.1s");
}

void c03_series_count_agreement() {
    const auto start = std::chrono::steady_clock::now();
    fill_pool();
    for (std::size_t idx = 0; idx < g_pool.size(); ++idx) {
        const IdentityInstance& inst = g_pool[idx];
        const CountTable p = partcrt::count_restricted(inst.multiplicities, 300);
        const CountTable q = partcrt::count_parts(inst.parts, 300);
        for (u64 n = 0; n <= 300; ++n) {
            require(p.value(n) == q.value(n),
                    "instance " + std::to_string(idx) + ": counts diverge at n=" + std::to_string(n));
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(secs < 60.0, "agreement pass took " + std::to_string(secs) + "s, budget 60s");
}

void c04_brute_force_agreement() {
    const auto start = std::chrono::steady_clock::now();
    fill_pool();
    for (std::size_t idx = 0; idx < g_pool.size(); ++idx) {
        const IdentityInstance& inst = g_pool[idx];
        const CountTable p = partcrt::count_restricted(inst.multiplicities, 40);
        const CountTable q = partcrt::count_parts(inst.parts, 40);
        const CountTable bp = partcrt::brute_restricted_table(inst.multiplicities, 40);
        const CountTable bq = partcrt::brute_parts_table(inst.parts, 40);
        for (u64 n = 0; n <= 40; ++n) {
            require(p.value(n) == bp.value(n), "instance " + std::to_string(idx) +
                                                   ": multiplicity count differs from enumeration at n=" +
                                                   std::to_string(n));
            require(q.value(n) == bq.value(n), "instance " + std::to_string(idx) +
                                                   ": part count differs from enumeration at n=" +
                                                   std::to_string(n));
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(secs < 120.0, "enumeration pass took " + std::to_string(secs) + "s, budget 120s");
}

void c05_classical_reductions() {
    // One-congruence systems reproduce the two-parameter family.
    for (u64 l : {1ull, 2ull, 3ull}) {
        for (u64 r : {1ull, 2ull}) {
            for (const auto& [a, p] : std::vector<std::pair<u64, u64>>{{1, 2}, {1, 3}, {2, 3}, {3, 5}}) {
                const IdentityInstance nm = partcrt::preset_nm(l, r, a, p);
                CrtBuildParams params = crt_params({p}, {a}, 1, l);
                params.r_overrides = {p * r + a};
                const IdentityInstance crt = build_crt(params);
                require(set_equal(nm.multiplicities, crt.multiplicities) &&
                            set_equal(nm.parts, crt.parts) && nm.factors == crt.factors,
                        "single-congruence build differs from preset at l=" + std::to_string(l) +
                            " r=" + std::to_string(r) + " a=" + std::to_string(a) +
                            " p=" + std::to_string(p));
            }
        }
    }
    // The unit chain reproduces the multiplicity-bound identity.
    for (u64 d = 2; d <= 10; ++d) {
        const IdentityInstance g = partcrt::preset_glaisher(d);
        const IdentityInstance chain = build_chain({{1}, {1, 1}, d});
        require(set_equal(g.multiplicities, chain.multiplicities) && set_equal(g.parts, chain.parts),
                "unit chain differs from bounded-multiplicity preset at d=" + std::to_string(d));
    }
    // The unbounded two-track family degenerates to the even/odd preset.
    for (u64 r = 1; r <= 3; ++r) {
        const IdentityInstance s = partcrt::preset_subbarao(std::nullopt, r);
        const IdentityInstance a = partcrt::preset_andrews(r);
        require(set_equal(s.multiplicities, a.multiplicities) && set_equal(s.parts, a.parts),
                "unbounded two-track preset differs at r=" + std::to_string(r));
    }
}

void c06_polynomial_closed_forms() {
    std::vector<IdentityInstance> insts;
    insts.push_back(partcrt::preset_euler());
    for (u64 d = 2; d <= 5; ++d) insts.push_back(partcrt::preset_glaisher(d));
    insts.push_back(partcrt::preset_macmahon());
    for (u64 r = 1; r <= 3; ++r) insts.push_back(partcrt::preset_andrews(r));
    insts.push_back(partcrt::preset_subbarao(2, 1));
    insts.push_back(partcrt::preset_subbarao(3, 1));
    insts.push_back(partcrt::preset_subbarao(std::nullopt, 2));
    insts.push_back(partcrt::preset_nm(1, 1, 1, 2));
    insts.push_back(partcrt::preset_nm(2, 1, 1, 3));
    insts.push_back(partcrt::preset_nm(2, 2, 3, 5));
    for (std::size_t i = 0; i < insts.size(); ++i) {
        require(partcrt::verify_polynomial(insts[i], 100),
                "closed-form product failed truncated check for preset #" + std::to_string(i));
    }
}

void c07_congruence_transfers() {
    const auto start = std::chrono::steady_clock::now();

    // Worked example: counts on 5n + 4 are divisible by 5.
    require(partcrt::check_claim(worked_example().multiplicities, CongruenceClaim{5, 4, 5}, 100).pass,
            "worked example does not inherit the modulus-5 progression");

    // Each classical claim pushed through a matching one-congruence system.
    for (const CongruenceClaim& base : partcrt::catalog()) {
        const IdentityInstance inst = build_crt(crt_params({base.modulus}, {1}, 1, std::nullopt));
        const CongruenceClaim moved = partcrt::transfer_crt(inst, 1, base);
        require(partcrt::check_claim(inst.multiplicities, moved, 100).pass,
                "transferred claim fails for modulus " + std::to_string(base.modulus));
    }

    // Randomized sweep with moduli large enough to hit every catalog modulus.
    partcrt::SweepConfig cfg;
    cfg.samples = 100;
    cfg.seed = 5;
    cfg.m_max = 11;
    cfg.congruence_max = 100;
    const partcrt::SweepSummary summary = partcrt::run_sweep(cfg);
    require(summary.all_passed(), "sweep reported " + std::to_string(summary.total - summary.passed) +
                                      " failing instance(s)");

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(secs < 30.0, "congruence pass took " + std::to_string(secs) + "s, budget 30s");
}

void c08_convolution_mechanism() {
    const partcrt::ConvolutionReport report =
        partcrt::verify_transfer_mechanism(worked_example(), 3, 60);
    require(report.pass, "mechanism check failed");
    require(!report.stray_exponent.has_value(), "stray exponent appeared");
    require(!report.first_mismatch_n.has_value(), "convolution mismatch appeared");
}

void c09_pentagonal_recurrence() {
    const CountTable recurrence = partcrt::partition_p(200);
    const CountTable product =
        partcrt::count_parts(ResidueClassUnion({DifferenceClass(1, std::nullopt)}), 200);
    for (u64 n = 0; n <= 200; ++n) {
        require(recurrence.value(n) == product.value(n),
                "recurrence and product disagree at n=" + std::to_string(n));
    }
    const MultiplicitySet all = MultiplicitySet::periodic({1}, 1);
    require(partcrt::brute_restricted(all, 4) == 5, "p(4) should be 5");
    require(partcrt::brute_restricted(all, 9) == 30, "p(9) should be 30");
}

void c10_mutation_sensitivity() {
    auto must_fail = [](const MultiplicitySet& mults, const ResidueClassUnion& parts,
                        const std::string& what) {
        require(!partcrt::verify_counts(mults, parts, 300, 0).pass,
                "mutation went undetected: " + what);
    };

    for (const IdentityInstance& inst : {worked_example(),
                                         build_crt(crt_params({2, 3}, {1, 1}, 1, std::nullopt))}) {
        const std::vector<u64>& core = inst.multiplicities.core();
        for (std::size_t i = 0; i < core.size(); ++i) {
            std::vector<u64> reduced = core;
            reduced.erase(reduced.begin() + (std::ptrdiff_t)i);
            MultiplicitySet mutated =
                inst.multiplicities.is_periodic()
                    ? MultiplicitySet::periodic(reduced, *inst.multiplicities.period())
                    : MultiplicitySet::finite(reduced);
            must_fail(mutated, inst.parts, "dropped multiplicity " + std::to_string(core[i]));
        }
        const std::vector<DifferenceClass>& classes = inst.parts.classes();
        for (std::size_t i = 0; i < classes.size(); ++i) {
            std::vector<DifferenceClass> fewer = classes;
            fewer.erase(fewer.begin() + (std::ptrdiff_t)i);
            must_fail(inst.multiplicities, ResidueClassUnion(fewer),
                      "dropped part class with base " + std::to_string(classes[i].base()));
        }
    }
}

struct Criterion {
    std::string id;
    std::string name;
    std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) {
            g_cli = argv[++i];
        }
    }
    if (g_cli.empty()) {
        std::cerr << "usage: acceptance --cli /path/to/partcrt\n";
        return 2;
    }

    const std::vector<Criterion> criteria = {
        {"C01", "coprime-generator-golden", c01_coprime_generator_golden},
        {"C02", "unbounded-generator-golden", c02_unbounded_generator_golden},
        {"C03", "series-count-agreement", c03_series_count_agreement},
        {"C04", "brute-force-agreement", c04_brute_force_agreement},
        {"C05", "classical-reductions", c05_classical_reductions},
        {"C06", "polynomial-closed-forms", c06_polynomial_closed_forms},
        {"C07", "congruence-transfers", c07_congruence_transfers},
        {"C08", "convolution-mechanism", c08_convolution_mechanism},
        {"C09", "pentagonal-recurrence", c09_pentagonal_recurrence},
        {"C10", "mutation-sensitivity", c10_mutation_sensitivity},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.body();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char line[64];
        std::snprintf(line, sizeof(line), " (%.3fs)", secs);
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << line;
        if (!ok) std::cout << " : " << detail;
        std::cout << '\n' << std::flush;
        if (!ok) ++failed;
    }
    std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
