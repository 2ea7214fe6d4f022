#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partcrt/identities.hpp"
#include "partcrt/partitions.hpp"

namespace partcrt {

// The statement "subject(modulus * n + offset) == 0 (mod divisor) for all n >= 0".
struct CongruenceClaim {
    u64 modulus = 1;
    u64 offset = 0;
    u64 divisor = 1;
};

bool operator==(const CongruenceClaim& a, const CongruenceClaim& b);

// The three classical unrestricted-partition congruences.  Verified by tests
// over a finite window before anything trusts them; the catalog itself makes
// no claim beyond that evidence.
std::vector<CongruenceClaim> catalog();

struct ClaimViolation {
    u64 n = 0;
    u64 value = 0;  // residue mod the claim's divisor
};

// Evidence over the window n in [0, n_max]; never a proof.
struct ClaimReport {
    CongruenceClaim claim;
    std::string subject;  // "p" or "P"
    u64 n_max = 0;
    bool pass = false;
    std::vector<ClaimViolation> violations;
};

ClaimReport check_claim(const CongruenceClaim& claim, u64 n_max);
ClaimReport check_claim(const MultiplicitySet& mults, const CongruenceClaim& claim, u64 n_max);

// Pushes a claim about unrestricted p through congruence i (1-based) of a
// coprime-system instance: divisibility of p(m_i n + c) everywhere forces
// divisibility of the instance's count at m_i n + a_i c.  The base claim's
// modulus must equal m_i.
CongruenceClaim transfer_crt(const IdentityInstance& inst, std::size_t i,
                             const CongruenceClaim& base);

// Chain analogue through the first modulus; the offset is kept as stated.
CongruenceClaim transfer_chain(const IdentityInstance& inst, const CongruenceClaim& base);

struct ConvolutionReport {
    bool pass = false;
    u64 n_max = 0;
    // A coefficient appeared off the lattice spanned by the retained factor
    // and the congruence modulus.
    std::optional<u64> stray_exponent;
    std::optional<u64> first_mismatch_n;
};

// Verifies the mechanism behind transfer_crt: dividing the instance's
// generating function by prod_n 1/(1 - q^(r_i n)) leaves a series supported
// on multiples of m_i, and convolving its coefficients with unrestricted p
// reproduces the instance's counts on [0, n_max].
ConvolutionReport verify_transfer_mechanism(const IdentityInstance& inst, std::size_t i,
                                            u64 n_max);

}  // namespace partcrt
