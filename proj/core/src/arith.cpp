#include "partcrt/arith.hpp"

#include <numeric>
#include <string>

namespace partcrt {

u64 gcd(u64 a, u64 b) {
    if (a == 0 && b == 0) {
        throw InvalidParamsError("gcd: both arguments are zero");
    }
    return std::gcd(a, b);
}

u64 lcm_checked(u64 a, u64 b) {
    if (a == 0 || b == 0) {
        throw InvalidParamsError("lcm: arguments must be positive");
    }
    const u64 g = std::gcd(a, b);
    const unsigned __int128 wide = (unsigned __int128)(a / g) * b;
    if (wide > kMaxModulus) {
        throw InvalidParamsError("lcm: result exceeds 2^63 - 1");
    }
    return (u64)wide;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
    return (u64)(((unsigned __int128)a * b) % m);
}

u64 mod_inverse(u64 x, u64 m) {
    if (x == 0 || m == 0) {
        throw InvalidParamsError("mod_inverse: arguments must be positive");
    }
    if (m == 1) {
        return 1;
    }
    // m <= 2^63 - 1 keeps every Bezout coefficient inside i64.
    if (m > kMaxModulus) {
        throw InvalidParamsError("mod_inverse: modulus exceeds 2^63 - 1");
    }
    i64 old_r = (i64)m, r = (i64)(x % m);
    i64 old_t = 0, t = 1;
    while (r != 0) {
        const i64 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r != 1) {
        throw NotCoprimeError("mod_inverse: " + std::to_string(x) + " has no inverse mod " +
                              std::to_string(m));
    }
    i64 inv = old_t % (i64)m;
    if (inv < 0) {
        inv += (i64)m;
    }
    return (u64)inv;
}

void validate(const CrtParams& params) {
    const auto& m = params.moduli;
    const auto& a = params.offsets;
    if (m.empty() || m.size() != a.size()) {
        throw InvalidParamsError("crt: need one offset per modulus, at least one congruence");
    }
    u64 prod = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0 || a[i] == 0) {
            throw InvalidParamsError("crt: moduli and offsets must be positive");
        }
        if (std::gcd(a[i], m[i]) != 1) {
            throw InvalidParamsError("crt: offset " + std::to_string(a[i]) +
                                     " shares a factor with modulus " + std::to_string(m[i]));
        }
        const unsigned __int128 wide = (unsigned __int128)prod * m[i];
        if (wide > kMaxModulus) {
            throw InvalidParamsError("crt: product of moduli exceeds 2^63 - 1");
        }
        prod = (u64)wide;
        for (std::size_t j = 0; j < i; ++j) {
            if (std::gcd(m[i], m[j]) != 1) {
                throw InvalidParamsError("crt: moduli " + std::to_string(m[j]) + " and " +
                                         std::to_string(m[i]) + " are not coprime");
            }
        }
    }
}

CrtSolution crt_solve(const CrtParams& params) {
    validate(params);
    const auto& m = params.moduli;
    const auto& a = params.offsets;
    CrtSolution sol;
    sol.modulus = 1;
    for (u64 mi : m) {
        sol.modulus *= mi;
    }
    sol.cofactors.reserve(m.size());
    sol.inverses.reserve(m.size());
    sol.lifts.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        const u64 cof = sol.modulus / m[i];
        const u64 inv = mod_inverse(cof, m[i]);
        const u64 ai = m[i] == 1 ? 1 : a[i];
        u64 lift = mul_mod(mul_mod(ai % sol.modulus, cof % sol.modulus, sol.modulus),
                           inv % sol.modulus, sol.modulus);
        if (lift == 0) {
            lift = sol.modulus;
        }
        sol.cofactors.push_back(cof);
        sol.inverses.push_back(inv);
        sol.lifts.push_back(lift);
    }
    return sol;
}

}  // namespace partcrt
