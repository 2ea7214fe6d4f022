#include "partcrt/congruences.hpp"

#include <string>

namespace partcrt {

namespace {

void validate_claim(const CongruenceClaim& c) {
    if (c.modulus == 0 || c.divisor == 0) {
        throw InvalidParamsError("claim: modulus and divisor must be positive");
    }
    if (c.divisor > kMaxModulus) {
        throw InvalidParamsError("claim: divisor exceeds 2^63 - 1");
    }
}

u64 checked_progression_top(const CongruenceClaim& claim, u64 n_max) {
    const unsigned __int128 top = (unsigned __int128)claim.modulus * n_max + claim.offset;
    if (top > (u64(1) << 26)) {
        throw InvalidParamsError("claim window too large to evaluate");
    }
    return (u64)top;
}

ClaimReport scan_window(const CountTable& table, const CongruenceClaim& claim,
                        std::string subject, u64 n_max) {
    ClaimReport report;
    report.claim = claim;
    report.subject = std::move(subject);
    report.n_max = n_max;
    for (u64 n = 0; n <= n_max; ++n) {
        const u64 v = table.values.coeff_mod(claim.modulus * n + claim.offset);
        if (v != 0) {
            report.violations.push_back(ClaimViolation{n, v});
        }
    }
    report.pass = report.violations.empty();
    return report;
}

}  // namespace

bool operator==(const CongruenceClaim& a, const CongruenceClaim& b) {
    return a.modulus == b.modulus && a.offset == b.offset && a.divisor == b.divisor;
}

std::vector<CongruenceClaim> catalog() {
    return {
        CongruenceClaim{5, 4, 5},
        CongruenceClaim{7, 5, 7},
        CongruenceClaim{11, 6, 11},
    };
}

ClaimReport check_claim(const CongruenceClaim& claim, u64 n_max) {
    validate_claim(claim);
    const u64 top = checked_progression_top(claim, n_max);
    const CountTable table = partition_p(top, Ring::modulo(claim.divisor));
    return scan_window(table, claim, "p", n_max);
}

ClaimReport check_claim(const MultiplicitySet& mults, const CongruenceClaim& claim, u64 n_max) {
    validate_claim(claim);
    const u64 top = checked_progression_top(claim, n_max);
    const CountTable table = count_restricted(mults, top, Ring::modulo(claim.divisor));
    return scan_window(table, claim, "P", n_max);
}

CongruenceClaim transfer_crt(const IdentityInstance& inst, std::size_t i,
                             const CongruenceClaim& base) {
    const auto* prov = std::get_if<CrtProvenance>(&inst.provenance);
    if (!prov) {
        throw WrongShapeError("transfer: instance was not built from a coprime system");
    }
    const std::size_t s = prov->system.moduli.size();
    if (i == 0 || i > s) {
        throw IndexOutOfRangeError("transfer: congruence index " + std::to_string(i) +
                                   " out of [1, " + std::to_string(s) + "]");
    }
    const u64 mi = prov->system.moduli[i - 1];
    if (base.modulus != mi) {
        throw ModulusMismatchError("transfer: claim modulus " + std::to_string(base.modulus) +
                                   " differs from congruence modulus " + std::to_string(mi));
    }
    const unsigned __int128 offset = (unsigned __int128)prov->system.offsets[i - 1] * base.offset;
    if (offset > kMaxModulus) {
        throw InvalidParamsError("transfer: scaled offset exceeds 2^63 - 1");
    }
    return CongruenceClaim{mi, (u64)offset, base.divisor};
}

CongruenceClaim transfer_chain(const IdentityInstance& inst, const CongruenceClaim& base) {
    const auto* prov = std::get_if<ChainProvenance>(&inst.provenance);
    if (!prov) {
        throw WrongShapeError("transfer: instance was not built from a divisibility chain");
    }
    const u64 m1 = prov->moduli.front();
    if (base.modulus != m1) {
        throw ModulusMismatchError("transfer: claim modulus " + std::to_string(base.modulus) +
                                   " differs from leading modulus " + std::to_string(m1));
    }
    return CongruenceClaim{m1, base.offset, base.divisor};
}

ConvolutionReport verify_transfer_mechanism(const IdentityInstance& inst, std::size_t i,
                                            u64 n_max) {
    const auto* prov = std::get_if<CrtProvenance>(&inst.provenance);
    if (!prov) {
        throw WrongShapeError("mechanism check: instance was not built from a coprime system");
    }
    const std::size_t s = prov->system.moduli.size();
    if (i == 0 || i > s) {
        throw IndexOutOfRangeError("mechanism check: congruence index out of range");
    }
    const u64 ri = prov->r[i - 1];
    const u64 mi = prov->system.moduli[i - 1];

    ConvolutionReport report;
    report.n_max = n_max;

    // Counts by the defining route; also the series being factored.
    const CountTable counts = count_restricted(inst.multiplicities, n_max, Ring::exact());

    // Strip the geometric family of the retained congruence: what remains is
    // a series in q^(m_i).
    CoeffSeries quotient = counts.values;
    for (u64 w = ri; w <= n_max; w += ri) {
        quotient.mul_binomial_inplace(w);
    }
    std::vector<Integer> g((std::size_t)(n_max / mi) + 1, Integer(0));
    for (u64 j = 0; j <= n_max; ++j) {
        const Integer c = quotient.coeff(j);
        if (j % mi != 0) {
            if (c != 0) {
                report.stray_exponent = j;
                report.pass = false;
                return report;
            }
        } else {
            g[j / mi] = c;
        }
    }

    // Independent left factor: unrestricted partition numbers.
    const CountTable p = partition_p((std::size_t)(n_max / ri), Ring::exact());

    for (u64 n = 0; n <= n_max; ++n) {
        Integer acc(0);
        for (u64 u = 0; ri * u <= n; ++u) {
            const u64 rest = n - ri * u;
            if (rest % mi == 0) {
                acc += p.value(u) * g[rest / mi];
            }
        }
        if (acc != counts.value(n)) {
            report.first_mismatch_n = n;
            report.pass = false;
            return report;
        }
    }
    report.pass = true;
    return report;
}

}  // namespace partcrt
