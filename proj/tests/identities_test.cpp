#include "partcrt/identities.hpp"

#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "partcrt/errors.hpp"
#include "partcrt/partitions.hpp"
#include "partcrt/sweep.hpp"

namespace partcrt {
namespace {

CrtBuildParams crt_params(std::vector<u64> m, std::vector<u64> a, u64 k, std::optional<u64> l,
                          std::vector<u64> r = {}) {
    CrtBuildParams p;
    p.system.moduli = std::move(m);
    p.system.offsets = std::move(a);
    p.k = k;
    p.l = l;
    p.r_overrides = std::move(r);
    return p;
}

// The worked three-congruence example: x == 1 mod 2, 3 and 5.
TEST(BuildCrt, ThreeCongruenceGolden) {
    const IdentityInstance inst = build_crt(crt_params({2, 3, 5}, {1, 1, 1}, 1, 1));

    const std::vector<u64> expected_a = {6,  10, 12, 15, 16, 18, 20, 21, 22, 24,
                                         25, 26, 27, 28, 31, 32, 33, 34, 35, 37,
                                         38, 39, 41, 43, 44, 47, 49, 53, 59};
    EXPECT_EQ(inst.multiplicities.core(), expected_a);
    EXPECT_FALSE(inst.multiplicities.is_periodic());

    EXPECT_EQ(inst.parts.residues_mod(30), (std::vector<u64>{6, 10, 12, 15, 18, 20, 24}));
    ASSERT_EQ(inst.parts.classes().size(), 3u);
    EXPECT_EQ(inst.parts.classes()[0], DifferenceClass(15, 30));
    EXPECT_EQ(inst.parts.classes()[1], DifferenceClass(10, 30));
    EXPECT_EQ(inst.parts.classes()[2], DifferenceClass(6, 30));

    EXPECT_EQ(inst.factors,
              (std::vector<QuotientFactor>{{15, 30}, {10, 30}, {6, 30}}));

    const auto& prov = std::get<CrtProvenance>(inst.provenance);
    EXPECT_EQ(prov.r, (std::vector<u64>{15, 10, 6}));
    EXPECT_EQ(prov.solution.modulus, 30u);
}

// Size law for finite builds: |A| = l * prod(m) - 1.
TEST(BuildCrt, FiniteSetSize) {
    const struct {
        std::vector<u64> m, a;
        u64 k, l;
    } cases[] = {
        {{2, 3, 5}, {1, 1, 1}, 1, 1},
        {{2, 3, 5}, {1, 2, 4}, 2, 3},
        {{4, 9}, {3, 2}, 1, 4},
        {{7}, {3}, 5, 2},
        {{1}, {1}, 1, 6},
    };
    for (const auto& c : cases) {
        const IdentityInstance inst = build_crt(crt_params(c.m, c.a, c.k, c.l));
        const u64 prod = std::accumulate(c.m.begin(), c.m.end(), u64(1), std::multiplies<>());
        EXPECT_EQ(inst.multiplicities.core().size(), c.l * prod - 1);
    }
}

TEST(BuildCrt, UnboundedGolden) {
    const IdentityInstance inst = build_crt(crt_params({2, 3}, {1, 1}, 1, std::nullopt));

    ASSERT_TRUE(inst.multiplicities.is_periodic());
    EXPECT_EQ(inst.multiplicities.core(), (std::vector<u64>{3, 4, 6, 7, 8, 11}));
    EXPECT_EQ(inst.multiplicities.period(), std::optional<u64>(6));

    EXPECT_EQ(finite_complement(inst), (std::vector<u64>{1, 2, 5}));

    EXPECT_EQ(inst.parts.residues_mod(12), (std::vector<u64>{0, 3, 4, 6, 8, 9}));
    ASSERT_EQ(inst.parts.classes().size(), 3u);
    EXPECT_EQ(inst.parts.classes()[0], DifferenceClass(6, std::nullopt));
    EXPECT_EQ(inst.parts.classes()[1], DifferenceClass(3, 6));
    EXPECT_EQ(inst.parts.classes()[2], DifferenceClass(4, 12));

    EXPECT_EQ(inst.factors,
              (std::vector<QuotientFactor>{{6, std::nullopt}, {3, 6}, {4, 12}}));
}

TEST(BuildCrt, ExplicitLiftsMatchCanonical) {
    const IdentityInstance canonical = build_crt(crt_params({2, 3}, {1, 1}, 1, std::nullopt));
    const IdentityInstance given = build_crt(crt_params({2, 3}, {1, 1}, 1, std::nullopt, {3, 4}));
    EXPECT_TRUE(set_equal(canonical.multiplicities, given.multiplicities));
    EXPECT_EQ(canonical.factors, given.factors);
}

TEST(BuildCrt, CongruentOverridesStillVerify) {
    // r = (9, 10) == (3, 4) mod 6: a different but valid choice of lifts.
    const IdentityInstance inst = build_crt(crt_params({2, 3}, {1, 1}, 1, 2, {9, 10}));
    EXPECT_TRUE(verify_polynomial(inst, 150));
    const CountsReport counts = verify_counts(inst.multiplicities, inst.parts, 150, 25);
    EXPECT_TRUE(counts.pass);
}

TEST(BuildCrt, RejectsIncongruentOverride) {
    EXPECT_THROW(build_crt(crt_params({2, 3}, {1, 1}, 1, 1, {4, 4})), InvalidParamsError);
    EXPECT_THROW(build_crt(crt_params({2, 3}, {1, 1}, 1, 1, {3})), InvalidParamsError);
    EXPECT_THROW(build_crt(crt_params({2, 3}, {1, 1}, 1, 1, {0, 4})), InvalidParamsError);
}

TEST(BuildCrt, RejectsDegenerateScales) {
    EXPECT_THROW(build_crt(crt_params({2, 3}, {1, 1}, 0, 1)), InvalidParamsError);
    EXPECT_THROW(build_crt(crt_params({2, 3}, {1, 1}, 1, 0)), InvalidParamsError);
    EXPECT_THROW(build_crt(crt_params({2, 4}, {1, 1}, 1, 1)), InvalidParamsError);
    // m * k past 2^63 - 1.
    EXPECT_THROW(build_crt(crt_params({3}, {1}, u64(1) << 62, 1)), InvalidParamsError);
    // Multiplicity set larger than the enumeration cap.
    EXPECT_THROW(build_crt(crt_params({2, 3, 5, 7, 11, 13, 17, 19}, {1, 1, 1, 1, 1, 1, 1, 1},
                                      1, 1)),
                 InvalidParamsError);
}

// With validation skipped, bad lifts must still be caught by the structural
// assertions that every build runs.
TEST(BuildCrt, TrustedOverridesHitAssertions) {
    CrtBuildParams collide = crt_params({2, 3}, {1, 1}, 1, 1, {1, 1});
    collide.validate_overrides = false;
    EXPECT_THROW(build_crt(collide), DistinctnessViolationError);

    CrtBuildParams overlap = crt_params({2, 3}, {1, 1}, 1, 1, {3, 9});
    overlap.validate_overrides = false;
    EXPECT_THROW(build_crt(overlap), DisjointnessViolationError);
}

TEST(BuildChain, SingleStepIsDistinctVsOdd) {
    // m = (2), r = (1, 2), l = 1: multiplicities {1}, parts 1N \ 2N.
    const IdentityInstance inst = build_chain({{2}, {1, 2}, 1});
    EXPECT_EQ(inst.multiplicities.core(), (std::vector<u64>{1}));
    ASSERT_EQ(inst.parts.classes().size(), 1u);
    EXPECT_EQ(inst.parts.classes()[0], DifferenceClass(1, 2));
    EXPECT_TRUE(set_equal(inst.multiplicities, preset_euler().multiplicities));
    EXPECT_TRUE(set_equal(inst.parts, preset_euler().parts));
}

TEST(BuildChain, CoefficientsArePrefixProducts) {
    // m = (2, 3), r = (1, 2, 6): weights 1, 2*2=4... coefficient i is
    // m_1...m_{i-1} r_i, so (1, 4, 36) here; the top class is bounded by l.
    const IdentityInstance inst = build_chain({{2, 3}, {1, 2, 6}, 2});
    ASSERT_EQ(inst.parts.classes().size(), 3u);
    EXPECT_EQ(inst.parts.classes()[0], DifferenceClass(1, 2));
    EXPECT_EQ(inst.parts.classes()[1], DifferenceClass(4, 12));
    EXPECT_EQ(inst.parts.classes()[2], DifferenceClass(36, 72));
    // A = {j1 + 4 j2 + 36 j3 : j1 < 2, j2 < 3, j3 < 2} \ {0}, all distinct.
    EXPECT_EQ(inst.multiplicities.core(),
              (std::vector<u64>{1, 4, 5, 8, 9, 36, 37, 40, 41, 44, 45}));
    EXPECT_TRUE(verify_polynomial(inst, 120));
}

TEST(BuildChain, UnboundedTopClass) {
    // m = (5), r = (2, 2): multiplicities are exactly the even numbers.
    const IdentityInstance inst = build_chain({{5}, {2, 2}, std::nullopt});
    ASSERT_TRUE(inst.multiplicities.is_periodic());
    EXPECT_EQ(inst.multiplicities.members_up_to(12), (std::vector<u64>{2, 4, 6, 8, 10, 12}));
    ASSERT_EQ(inst.parts.classes().size(), 2u);
    EXPECT_EQ(inst.parts.classes()[0], DifferenceClass(2, 10));
    EXPECT_EQ(inst.parts.classes()[1], DifferenceClass(10, std::nullopt));
    const CountsReport counts = verify_counts(inst.multiplicities, inst.parts, 150, 25);
    EXPECT_TRUE(counts.pass);
}

TEST(BuildChain, RejectsBrokenChains) {
    EXPECT_THROW(build_chain({{2}, {2, 3}, 1}), ChainViolationError);
    EXPECT_THROW(build_chain({{2, 3}, {1, 2, 5}, 1}), ChainViolationError);
    EXPECT_THROW(build_chain({{}, {1}, 1}), InvalidParamsError);
    EXPECT_THROW(build_chain({{2}, {1, 2}, 0}), InvalidParamsError);
    EXPECT_THROW(build_chain({{2}, {0, 2}, 1}), InvalidParamsError);
    EXPECT_THROW(build_chain({{2}, {1, 2, 4}, 1}), InvalidParamsError);
}

TEST(Presets, EulerShape) {
    const IdentityInstance inst = preset_euler();
    EXPECT_EQ(inst.multiplicities.core(), (std::vector<u64>{1}));
    EXPECT_EQ(inst.factors, (std::vector<QuotientFactor>{{1, 2}}));
    EXPECT_TRUE(verify_polynomial(inst, 100));
    EXPECT_TRUE(verify_counts(inst.multiplicities, inst.parts, 200, 30).pass);
}

TEST(Presets, GlaisherShape) {
    const IdentityInstance inst = preset_glaisher(4);
    EXPECT_EQ(inst.multiplicities.core(), (std::vector<u64>{1, 2, 3}));
    EXPECT_EQ(inst.factors, (std::vector<QuotientFactor>{{1, 4}}));
    EXPECT_TRUE(verify_counts(inst.multiplicities, inst.parts, 200, 30).pass);
    EXPECT_THROW(preset_glaisher(1), InvalidParamsError);
}

TEST(Presets, MacMahonShape) {
    const IdentityInstance inst = preset_macmahon();
    // Multiplicities: every integer except 1.
    EXPECT_FALSE(inst.multiplicities.contains(1));
    for (u64 x = 2; x <= 40; ++x) EXPECT_TRUE(inst.multiplicities.contains(x));
    EXPECT_EQ(inst.parts.residues_mod(6), (std::vector<u64>{0, 2, 3, 4}));
    EXPECT_TRUE(verify_polynomial(inst, 100));
    EXPECT_TRUE(verify_counts(inst.multiplicities, inst.parts, 200, 30).pass);
}

TEST(Presets, AndrewsShape) {
    const IdentityInstance inst = preset_andrews(2);
    // Multiplicities: evens from 2 up, odds from 5 up.
    EXPECT_TRUE(inst.multiplicities.contains(2));
    EXPECT_TRUE(inst.multiplicities.contains(5));
    EXPECT_FALSE(inst.multiplicities.contains(1));
    EXPECT_FALSE(inst.multiplicities.contains(3));
    EXPECT_THROW(preset_andrews(0), InvalidParamsError);
    EXPECT_TRUE(verify_counts(inst.multiplicities, inst.parts, 200, 30).pass);
}

TEST(Presets, SubbaraoShape) {
    const IdentityInstance inst = preset_subbarao(3, 1);
    // {2i + 3j : i < 3, j in {0, 1}} minus zero: {2, 4, 3, 5, 7}.
    EXPECT_EQ(inst.multiplicities.core(), (std::vector<u64>{2, 3, 4, 5, 7}));
    EXPECT_EQ(inst.factors, (std::vector<QuotientFactor>{{2, 6}, {3, 6}}));
    EXPECT_TRUE(verify_counts(inst.multiplicities, inst.parts, 200, 30).pass);
    EXPECT_THROW(preset_subbarao(1, 1), InvalidParamsError);

    // r = 0 collapses the odd track onto the even one: still a valid identity.
    const IdentityInstance r0 = preset_subbarao(2, 0);
    EXPECT_TRUE(verify_counts(r0.multiplicities, r0.parts, 150, 25).pass);
}

TEST(Presets, SubbaraoUnboundedEqualsAndrews) {
    for (u64 r = 1; r <= 3; ++r) {
        const IdentityInstance s = preset_subbarao(std::nullopt, r);
        const IdentityInstance a = preset_andrews(r);
        EXPECT_TRUE(set_equal(s.multiplicities, a.multiplicities)) << "r=" << r;
        EXPECT_TRUE(set_equal(s.parts, a.parts)) << "r=" << r;
    }
}

TEST(Presets, NmShapeAndGuards) {
    const IdentityInstance inst = preset_nm(2, 1, 1, 3);
    // step = 3*1 + 1 = 4; sums {3i + 4j : i < 2, j < 3} \ {0}.
    EXPECT_EQ(inst.multiplicities.core(), (std::vector<u64>{3, 4, 7, 8, 11}));
    EXPECT_EQ(inst.factors, (std::vector<QuotientFactor>{{3, 6}, {4, 12}}));
    EXPECT_TRUE(verify_counts(inst.multiplicities, inst.parts, 200, 30).pass);
    EXPECT_THROW(preset_nm(2, 1, 2, 4), InvalidParamsError);  // gcd(a, p) > 1
    EXPECT_THROW(preset_nm(0, 1, 1, 3), InvalidParamsError);
}

TEST(Presets, NmEqualsSingleCongruenceBuild) {
    for (u64 l : {1ull, 2ull, 3ull}) {
        for (u64 r : {1ull, 2ull}) {
            for (const auto& [a, p] : std::vector<std::pair<u64, u64>>{{1, 2}, {2, 3}, {3, 5}}) {
                const IdentityInstance nm = preset_nm(l, r, a, p);
                const IdentityInstance crt =
                    build_crt(crt_params({p}, {a}, 1, l, {p * r + a}));
                EXPECT_TRUE(set_equal(nm.multiplicities, crt.multiplicities))
                    << "l=" << l << " r=" << r << " a=" << a << " p=" << p;
                EXPECT_TRUE(set_equal(nm.parts, crt.parts))
                    << "l=" << l << " r=" << r << " a=" << a << " p=" << p;
            }
        }
    }
}

TEST(Presets, GlaisherEqualsUnitChain) {
    for (u64 d = 2; d <= 10; ++d) {
        const IdentityInstance g = preset_glaisher(d);
        const IdentityInstance chain = build_chain({{1}, {1, 1}, d});
        EXPECT_TRUE(set_equal(g.multiplicities, chain.multiplicities)) << "d=" << d;
        EXPECT_TRUE(set_equal(g.parts, chain.parts)) << "d=" << d;
    }
}

TEST(BuildPreset, ParsesSpecs) {
    EXPECT_EQ(build_preset("euler").factors, preset_euler().factors);
    EXPECT_EQ(build_preset("glaisher=4").factors, preset_glaisher(4).factors);
    EXPECT_EQ(build_preset("subbarao=3,1").factors, preset_subbarao(3, 1).factors);
    EXPECT_EQ(build_preset("subbarao=inf,2").factors, preset_subbarao(std::nullopt, 2).factors);
    EXPECT_EQ(build_preset("nm=2,1,1,3").factors, preset_nm(2, 1, 1, 3).factors);
    EXPECT_THROW(build_preset("nosuch"), InvalidParamsError);
    EXPECT_THROW(build_preset("glaisher"), InvalidParamsError);
    EXPECT_THROW(build_preset("glaisher=x"), InvalidParamsError);
    EXPECT_THROW(build_preset("euler=1"), InvalidParamsError);
    EXPECT_THROW(build_preset("nm=2,1"), InvalidParamsError);
}

TEST(VerifyPolynomial, DetectsTampering) {
    IdentityInstance inst = build_crt(crt_params({2, 3, 5}, {1, 1, 1}, 1, 1));
    EXPECT_TRUE(verify_polynomial(inst, 200));
    // Dropping one factor breaks the defining identity.
    inst.factors.pop_back();
    EXPECT_FALSE(verify_polynomial(inst, 200));
}

TEST(FiniteComplement, RequiresUnboundedSingleScale) {
    EXPECT_THROW(finite_complement(build_crt(crt_params({2, 3}, {1, 1}, 2, std::nullopt))),
                 WrongShapeError);
    EXPECT_THROW(finite_complement(build_crt(crt_params({2, 3}, {1, 1}, 1, 3))),
                 WrongShapeError);
    EXPECT_THROW(finite_complement(preset_euler()), WrongShapeError);
    EXPECT_THROW(finite_complement(build_chain({{2}, {1, 2}, std::nullopt})), WrongShapeError);
}

TEST(FiniteComplement, MatchesDirectScan) {
    // Complement of the multiplicity set, computed by direct membership scan.
    const std::vector<std::pair<std::vector<u64>, std::vector<u64>>> systems = {
        {{2, 3}, {1, 1}}, {{2, 3, 5}, {1, 1, 1}}, {{3, 4}, {2, 1}}, {{5}, {3}}};
    for (const auto& [m, a] : systems) {
        const IdentityInstance inst = build_crt(crt_params(m, a, 1, std::nullopt));
        std::vector<u64> scan;
        const auto& prov = std::get<CrtProvenance>(inst.provenance);
        const u64 bound = 2 * prov.solution.modulus * m.size() + 4;
        for (u64 x = 1; x <= bound; ++x)
            if (!inst.multiplicities.contains(x)) scan.push_back(x);
        EXPECT_EQ(finite_complement(inst), scan);
    }
}

TEST(SampledParameters, AllBuildAndVerify) {
    SweepConfig cfg;
    cfg.n_max = 150;
    cfg.oracle_max = 20;
    for (const CrtBuildParams& params : sample_crt_params(25, 42, cfg)) {
        const IdentityInstance inst = build_crt(params);
        EXPECT_TRUE(verify_counts(inst.multiplicities, inst.parts, 150, 20).pass);
    }
    for (const ChainBuildParams& params : sample_chain_params(25, 43, cfg)) {
        const IdentityInstance inst = build_chain(params);
        EXPECT_TRUE(verify_counts(inst.multiplicities, inst.parts, 150, 20).pass);
    }
}

}  // namespace
}  // namespace partcrt
