#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "partcrt/arith.hpp"

namespace partcrt {

using Integer = mpz_class;

// Coefficient ring: exact unbounded integers, or residues mod d.
class Ring {
public:
    static Ring exact() { return Ring{}; }
    static Ring modulo(u64 d);

    bool is_exact() const { return mod_ == 0; }
    u64 modulus() const { return mod_; }

    bool operator==(const Ring&) const = default;

private:
    u64 mod_ = 0;  // 0 encodes the exact ring
};

// Power series truncated at q^order.  All arithmetic below is shift-and-add:
//   mul_binomial   (1 - q^b) * s      c'_i = c_i - c_{i-b}    (downward, in place)
//   div_binomial   s / (1 - q^b)      c'_i = c_i + c'_{i-b}   (upward, in place)
// Each pass costs one add or sub per retained coefficient, so a product of f
// binomial factors at order N costs O(f * N) ring operations.
class CoeffSeries {
public:
    CoeffSeries(std::size_t order, Ring ring);

    std::size_t order() const { return order_; }
    const Ring& ring() const { return ring_; }

    // Coefficient as an exact integer; modular residues are returned as their
    // canonical representative in [0, d).
    Integer coeff(std::size_t i) const;
    u64 coeff_mod(std::size_t i) const;  // modular ring only

    void set_coeff(std::size_t i, const Integer& v);

    // Exact series reduced coefficientwise mod d.
    CoeffSeries reduced(u64 d) const;

    bool operator==(const CoeffSeries& other) const;

    void mul_binomial_inplace(u64 b);
    void div_binomial_inplace(u64 b);

private:
    std::size_t order_;
    Ring ring_;
    std::vector<Integer> exact_;  // used when ring_.is_exact()
    std::vector<u64> res_;        // used otherwise
};

// The series 1.
CoeffSeries one(std::size_t order, Ring ring = Ring::exact());

CoeffSeries mul_binomial(CoeffSeries s, u64 b);
CoeffSeries div_binomial(CoeffSeries s, u64 b);

// s * (1 + sum_{e in exponents} q^e).  Exponents must be >= 1 and distinct.
CoeffSeries mul_one_plus_powers(const CoeffSeries& s, const std::vector<u64>& exponents);

struct SeriesFactor {
    u64 exponent;
    bool numerator;  // true: multiply by (1 - q^e); false: divide by it
};

inline SeriesFactor num_factor(u64 e) { return {e, true}; }
inline SeriesFactor den_factor(u64 e) { return {e, false}; }

// prod over factors of (1 - q^e)^(+-1), applied to 1.  The factors commute,
// so any ordering yields the same truncated series.
CoeffSeries product_of_factors(std::size_t order, Ring ring,
                               const std::vector<SeriesFactor>& factors);

}  // namespace partcrt
