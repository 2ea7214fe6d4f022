#pragma once

#include <optional>

#include "partcrt/series.hpp"
#include "partcrt/sets.hpp"

namespace partcrt {

// Brute-force enumeration refuses to run past this weight.
inline constexpr u64 kOracleBound = 60;

enum class CountKind { partition_p, restricted_p, parts_q };
enum class CountMethod { series, brute };

// A table v_0..v_{n_max} of partition counts; v_0 == 1 in every kind.
struct CountTable {
    CountKind kind;
    CountMethod method;
    CoeffSeries values;

    std::size_t n_max() const { return values.order(); }
    Integer value(std::size_t n) const { return values.coeff(n); }
};

// Unrestricted partition numbers via the pentagonal-number recurrence
//   p(n) = sum_{k>=1} (-1)^(k+1) [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ],
// which shares no code with the series engine.
CountTable partition_p(std::size_t n_max, Ring ring = Ring::exact());

// Partitions of n whose part multiplicities all lie in `mults`:
// one polynomial factor 1 + sum_{a in mults, a*t <= n_max} q^(a*t) per part
// size t.
CountTable count_restricted(const MultiplicitySet& mults, std::size_t n_max,
                            Ring ring = Ring::exact());

// Partitions of n with every part in `parts`: one geometric factor
// 1/(1 - q^b) per member b <= n_max, membership decided classwise.
CountTable count_parts(const ResidueClassUnion& parts, std::size_t n_max,
                       Ring ring = Ring::exact());

// Exhaustive enumeration, no series machinery and no memoization.  Throws
// OracleScaleExceededError past kOracleBound.
CountTable brute_restricted_table(const MultiplicitySet& mults, u64 n_max);
CountTable brute_parts_table(const ResidueClassUnion& parts, u64 n_max);
Integer brute_restricted(const MultiplicitySet& mults, u64 n);
Integer brute_parts(const ResidueClassUnion& parts, u64 n);

struct CountMismatch {
    u64 n = 0;
    Integer restricted_count;          // series route over multiplicities
    Integer parts_count;               // series route over parts
    std::optional<Integer> brute_restricted;  // filled when n is within oracle reach
    std::optional<Integer> brute_parts;
};

struct CountsReport {
    bool pass = false;
    u64 n_max = 0;
    u64 oracle_n_max = 0;
    std::optional<CountMismatch> first_mismatch;
};

// Checks count_restricted == count_parts on [0, n_max] and both equal the
// brute tables on [0, oracle_n_max].
CountsReport verify_counts(const MultiplicitySet& mults, const ResidueClassUnion& parts,
                           u64 n_max, u64 oracle_n_max);

}  // namespace partcrt
