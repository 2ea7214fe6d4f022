#include "partcrt/sets.hpp"

#include <algorithm>
#include <string>

namespace partcrt {

DifferenceClass::DifferenceClass(u64 base, std::optional<u64> excluded)
    : base_(base), excluded_(excluded) {
    if (base == 0 || (excluded && *excluded == 0)) {
        throw InvalidParamsError("difference class: parameters must be positive");
    }
}

bool DifferenceClass::contains(u64 x) const {
    if (x == 0 || x % base_ != 0) {
        return false;
    }
    return !excluded_ || x % *excluded_ != 0;
}

bool DifferenceClass::empty() const {
    return excluded_ && base_ % *excluded_ == 0;
}

u64 DifferenceClass::period() const {
    return excluded_ ? lcm_checked(base_, *excluded_) : base_;
}

bool operator==(const DifferenceClass& a, const DifferenceClass& b) {
    return a.base() == b.base() && a.excluded() == b.excluded();
}

ResidueSet expand_residues(const DifferenceClass& cls, bool infinite_as_progression) {
    if (!cls.excluded()) {
        if (!infinite_as_progression) {
            throw InfiniteExclusionError("expand_residues: class has no finite exclusion");
        }
        return ResidueSet{cls.base(), {0}};
    }
    ResidueSet out;
    out.modulus = lcm_checked(cls.base(), *cls.excluded());
    for (u64 r = cls.base(); r < out.modulus; r += cls.base()) {
        if (r % *cls.excluded() != 0) {
            out.residues.push_back(r);
        }
    }
    // r = 0 is always divisible by the exclusion, so it never appears.
    return out;
}

bool verify_disjoint(const std::vector<DifferenceClass>& classes) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            const u64 joint = lcm_checked(classes[i].period(), classes[j].period());
            for (u64 x = 1; x <= joint; ++x) {
                if (classes[i].contains(x) && classes[j].contains(x)) {
                    return false;
                }
            }
        }
    }
    return true;
}

ResidueClassUnion::ResidueClassUnion(std::vector<DifferenceClass> classes)
    : classes_(std::move(classes)) {
    if (!verify_disjoint(classes_)) {
        throw DisjointnessViolationError("residue class union: classes intersect");
    }
}

bool ResidueClassUnion::contains(u64 x) const {
    return std::any_of(classes_.begin(), classes_.end(),
                       [x](const DifferenceClass& c) { return c.contains(x); });
}

u64 ResidueClassUnion::period() const {
    u64 p = 1;
    for (const auto& c : classes_) {
        p = lcm_checked(p, c.period());
    }
    return p;
}

std::vector<u64> ResidueClassUnion::members_up_to(u64 bound) const {
    std::vector<u64> out;
    for (u64 x = 1; x <= bound; ++x) {
        if (contains(x)) {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<u64> ResidueClassUnion::residues_mod(u64 modulus) const {
    if (modulus == 0) {
        throw InvalidParamsError("residues_mod: modulus must be positive");
    }
    std::vector<u64> out;
    for (u64 x = 1; x <= modulus; ++x) {
        if (contains(x)) {
            out.push_back(x % modulus);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool set_equal(const ResidueClassUnion& a, const ResidueClassUnion& b) {
    // Indicators of difference classes are purely periodic from 1, so one
    // joint period decides equality.
    const u64 joint = lcm_checked(a.period(), b.period());
    for (u64 x = 1; x <= joint; ++x) {
        if (a.contains(x) != b.contains(x)) {
            return false;
        }
    }
    return true;
}

MultiplicitySet MultiplicitySet::finite(std::vector<u64> elements) {
    std::sort(elements.begin(), elements.end());
    if (!elements.empty() && elements.front() == 0) {
        throw InvalidParamsError("multiplicity set: members must be >= 1");
    }
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
        throw InvalidParamsError("multiplicity set: duplicate member");
    }
    MultiplicitySet s;
    s.core_ = std::move(elements);
    return s;
}

MultiplicitySet MultiplicitySet::periodic(std::vector<u64> core, u64 period) {
    if (period == 0) {
        throw InvalidParamsError("multiplicity set: period must be positive");
    }
    if (core.empty()) {
        throw InvalidParamsError("multiplicity set: periodic core must be nonempty");
    }
    std::sort(core.begin(), core.end());
    if (core.front() == 0) {
        throw InvalidParamsError("multiplicity set: members must be >= 1");
    }
    for (std::size_t i = 0; i + 1 < core.size(); ++i) {
        for (std::size_t j = i + 1; j < core.size(); ++j) {
            if (core[i] % period == core[j] % period) {
                throw InvalidParamsError("multiplicity set: core members congruent mod period");
            }
        }
    }
    MultiplicitySet s;
    s.core_ = std::move(core);
    s.period_ = period;
    return s;
}

bool MultiplicitySet::contains(u64 x) const {
    if (x == 0) {
        return false;
    }
    if (!period_) {
        return std::binary_search(core_.begin(), core_.end(), x);
    }
    for (u64 c : core_) {
        if (x >= c && (x - c) % *period_ == 0) {
            return true;
        }
    }
    return false;
}

std::vector<u64> MultiplicitySet::members_up_to(u64 bound) const {
    std::vector<u64> out;
    if (!period_) {
        for (u64 c : core_) {
            if (c <= bound) {
                out.push_back(c);
            }
        }
        return out;
    }
    for (u64 c : core_) {
        for (u64 x = c; x <= bound; x += *period_) {
            out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 MultiplicitySet::max_core() const {
    return core_.empty() ? 0 : core_.back();
}

bool set_equal(const MultiplicitySet& a, const MultiplicitySet& b) {
    if (a.is_periodic() != b.is_periodic()) {
        return false;  // one set is finite, the other infinite
    }
    if (!a.is_periodic()) {
        return a.core() == b.core();
    }
    // Both sets are unions of upward progressions, hence purely periodic past
    // their largest generators: one joint period beyond that decides the tail.
    const u64 joint = lcm_checked(*a.period(), *b.period());
    const u64 bound = std::max(a.max_core(), b.max_core()) + joint;
    for (u64 x = 1; x <= bound; ++x) {
        if (a.contains(x) != b.contains(x)) {
            return false;
        }
    }
    return true;
}

}  // namespace partcrt
