#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "partcrt/sets.hpp"
#include "partcrt/series.hpp"

namespace partcrt {

// One factor (1 - x^num) / (1 - x^den) of the product side.  An absent num
// means the numerator degenerates to 1 (exclusion pushed to infinity).
struct QuotientFactor {
    u64 den;
    std::optional<u64> num;
};

bool operator==(const QuotientFactor& a, const QuotientFactor& b);

struct CrtBuildParams {
    CrtParams system;               // moduli m_1..m_s, offsets a_1..a_s
    u64 k = 1;
    std::optional<u64> l = 1;       // nullopt: unbounded copies of the top class
    std::vector<u64> r_overrides;   // empty: use the canonical lifts
    // Overrides are normally rejected unless congruent to the canonical lift
    // mod prod(m_i).  Skipping that check (tests, fault injection) leaves the
    // distinctness and disjointness assertions as the only guard.
    bool validate_overrides = true;
};

struct ChainBuildParams {
    std::vector<u64> moduli;        // m_1..m_s
    std::vector<u64> r;             // r_1..r_{s+1}, each dividing the next
    std::optional<u64> l = 1;
};

struct CrtProvenance {
    CrtParams system;
    CrtSolution solution;
    u64 k = 1;
    std::optional<u64> l;
    std::vector<u64> r;             // lifts actually used (overrides or canonical)
};

struct ChainProvenance {
    std::vector<u64> moduli;
    std::vector<u64> r;
    std::optional<u64> l;
};

struct PresetProvenance {
    std::string name;
    // Parameter values by name; an absent value encodes "unbounded".
    std::map<std::string, std::optional<u64>> params;
};

using Provenance = std::variant<CrtProvenance, ChainProvenance, PresetProvenance>;

// A constructed identity: counting partitions of n by admissible multiplicity
// (left side) agrees with counting partitions of n into parts drawn from the
// class union (right side), and the factors give the product form of the
// defining polynomial identity.
struct IdentityInstance {
    MultiplicitySet multiplicities;      // the set A
    ResidueClassUnion parts;             // the set B
    std::vector<QuotientFactor> factors;
    Provenance provenance;
};

// Builds the identity attached to a coprime residue system: multiplicity sums
// r_1 j_1 + ... + r_s j_s (+ m k j_{s+1} when l is finite), part classes
// r_i N \ r_i m_i N plus one class of multiples of m k.  Both the
// distinctness of the sums and the disjointness of the classes are asserted
// on every build.
IdentityInstance build_crt(const CrtBuildParams& params);

// Divisibility-chain analogue: term i carries coefficient m_1...m_{i-1} r_i.
IdentityInstance build_chain(const ChainBuildParams& params);

IdentityInstance preset_euler();
IdentityInstance preset_glaisher(u64 d);                     // d >= 2
IdentityInstance preset_macmahon();
IdentityInstance preset_andrews(u64 r);                      // r >= 1
IdentityInstance preset_subbarao(std::optional<u64> l, u64 r);  // l >= 2 or absent
IdentityInstance preset_nm(u64 l, u64 r, u64 a, u64 p);      // gcd(a, p) == 1

// Parses "euler", "glaisher=4", "subbarao=inf,1", "nm=2,1,1,3", ...
IdentityInstance build_preset(const std::string& spec);

// Exact truncated check of the defining polynomial identity
//   1 + sum_{a in A, a <= n} x^a == prod factors (1 - x^num)/(1 - x^den)
// For finite A this decides the full identity once n >= max(A).
bool verify_polynomial(const IdentityInstance& inst, std::size_t n);

// The finite complement N \ A for instances built by build_crt with k == 1
// and unbounded l: for each multiplicity sum rho, the complement holds
// rho - t * m for every t >= 1 that keeps the value positive.  Throws
// WrongShapeError for any other instance.
std::vector<u64> finite_complement(const IdentityInstance& inst);

}  // namespace partcrt
