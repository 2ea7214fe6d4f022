#pragma once

#include <optional>
#include <vector>

#include "partcrt/arith.hpp"

namespace partcrt {

// The set { x >= 1 : base | x and excluded does not divide x }.  An absent
// exclusion means the full progression base, 2*base, ...  In built identities
// the exclusion is always a proper multiple of the base; the class is empty
// exactly when excluded | base.
class DifferenceClass {
public:
    DifferenceClass(u64 base, std::optional<u64> excluded);

    u64 base() const { return base_; }
    const std::optional<u64>& excluded() const { return excluded_; }

    bool contains(u64 x) const;
    bool empty() const;

    // Period of the membership indicator: lcm(base, excluded), or base when
    // there is no exclusion.
    u64 period() const;

private:
    u64 base_;
    std::optional<u64> excluded_;
};

bool operator==(const DifferenceClass& a, const DifferenceClass& b);

struct ResidueSet {
    u64 modulus = 1;
    std::vector<u64> residues;  // sorted, each in [0, modulus)
};

// Residues of the class members modulo lcm(base, excluded).  Classes without
// a finite exclusion throw InfiniteExclusionError unless the caller opts in,
// in which case the result is the full progression as ( base, {0} ).
ResidueSet expand_residues(const DifferenceClass& cls, bool infinite_as_progression = false);

// True when the classes are pairwise disjoint.  Each pair is decided exactly
// by scanning one full period of the joint indicator.
bool verify_disjoint(const std::vector<DifferenceClass>& classes);

// A disjoint union of difference classes; disjointness is enforced at
// construction.  The empty union is the empty set.
class ResidueClassUnion {
public:
    ResidueClassUnion() = default;
    explicit ResidueClassUnion(std::vector<DifferenceClass> classes);

    const std::vector<DifferenceClass>& classes() const { return classes_; }
    bool contains(u64 x) const;
    u64 period() const;
    std::vector<u64> members_up_to(u64 bound) const;

    // Sorted { x mod modulus : x a member, 1 <= x <= modulus }.
    std::vector<u64> residues_mod(u64 modulus) const;

private:
    std::vector<DifferenceClass> classes_;
};

// Set-level equality: the unions contain the same integers, regardless of how
// the classes are sliced.
bool set_equal(const ResidueClassUnion& a, const ResidueClassUnion& b);

// A set of admissible part multiplicities: either a finite list, or the
// eventually periodic set { c + period * t : c in core, t >= 0 }.  Members are
// always >= 1, and periodic cores are pairwise incongruent mod period, so
// each residue has at most one generator.
class MultiplicitySet {
public:
    MultiplicitySet() = default;  // empty finite set

    static MultiplicitySet finite(std::vector<u64> elements);
    static MultiplicitySet periodic(std::vector<u64> core, u64 period);

    bool is_periodic() const { return period_.has_value(); }
    const std::vector<u64>& core() const { return core_; }
    const std::optional<u64>& period() const { return period_; }

    bool contains(u64 x) const;
    std::vector<u64> members_up_to(u64 bound) const;
    u64 max_core() const;  // 0 when empty

private:
    std::vector<u64> core_;
    std::optional<u64> period_;
};

bool set_equal(const MultiplicitySet& a, const MultiplicitySet& b);

}  // namespace partcrt
