#pragma once

#include <cstdint>
#include <vector>

#include "partcrt/errors.hpp"

namespace partcrt {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Largest modulus the library accepts; products of moduli are validated
// against it so that signed intermediates never overflow.
inline constexpr u64 kMaxModulus = 0x7fffffffffffffffULL;  // 2^63 - 1

u64 gcd(u64 a, u64 b);

// lcm(a, b) for positive a, b; throws InvalidParamsError past kMaxModulus.
u64 lcm_checked(u64 a, u64 b);

// a * b mod m, correct for all operands below 2^64.
u64 mul_mod(u64 a, u64 b, u64 m);

// Least positive y in [1, m] with x * y == 1 (mod m).  mod_inverse(x, 1) == 1.
// Throws NotCoprimeError when gcd(x, m) != 1.
u64 mod_inverse(u64 x, u64 m);

// A system x == offsets[i] (mod moduli[i]) with pairwise coprime moduli and
// gcd(offsets[i], moduli[i]) == 1.  A modulus of 1 is allowed; its offset is
// normalized to 1.
struct CrtParams {
    std::vector<u64> moduli;
    std::vector<u64> offsets;
};

// Throws InvalidParamsError when sizes differ, a value is zero, the moduli
// are not pairwise coprime, an offset shares a factor with its modulus, or
// prod(moduli) exceeds kMaxModulus.
void validate(const CrtParams& params);

struct CrtSolution {
    u64 modulus = 1;             // m = prod(moduli)
    std::vector<u64> cofactors;  // M_i = m / m_i
    std::vector<u64> inverses;   // Mbar_i in [1, m_i] with M_i * Mbar_i == 1 (mod m_i)
    std::vector<u64> lifts;      // r_i in [1, m]: r_i == a_i (mod m_i), r_i == 0 (mod m_j) for j != i
};

// lifts are canonicalized to the least positive representative; a residue of
// zero (only possible when m_i == 1) becomes m itself.
CrtSolution crt_solve(const CrtParams& params);

}  // namespace partcrt
