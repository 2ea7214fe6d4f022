#include "partcrt/partitions.hpp"

#include <string>

namespace partcrt {

namespace {

// Walks every multiplicity assignment (mu_1, mu_2, ...) with mu_t in
// mults ∪ {0} and sum mu_t * t <= n_max, bumping out[weight] once per
// assignment.  A leaf is reached exactly once per assignment, when no part
// of the current size fits any more.  `mus` holds the admissible
// multiplicities up to n_max, sorted ascending.
void enumerate_restricted(const std::vector<u64>& mus, u64 part, u64 remaining, u64 n_max,
                          std::vector<Integer>& out) {
    if (part > remaining) {
        out[n_max - remaining] += 1;
        return;
    }
    enumerate_restricted(mus, part + 1, remaining, n_max, out);
    for (u64 mu : mus) {
        if (mu * part > remaining) {
            break;
        }
        enumerate_restricted(mus, part + 1, remaining - mu * part, n_max, out);
    }
}

// Same walk over multisets drawn from the sorted member list of `parts`.
void enumerate_parts(const std::vector<u64>& members, std::size_t idx, u64 remaining, u64 n_max,
                     std::vector<Integer>& out) {
    if (idx == members.size() || members[idx] > remaining) {
        out[n_max - remaining] += 1;
        return;
    }
    for (u64 used = 0; used <= remaining; used += members[idx]) {
        enumerate_parts(members, idx + 1, remaining - used, n_max, out);
    }
}

void check_oracle_bound(u64 n_max) {
    if (n_max > kOracleBound) {
        throw OracleScaleExceededError("brute enumeration capped at n = " +
                                       std::to_string(kOracleBound) + ", got " +
                                       std::to_string(n_max));
    }
}

CountTable table_from(std::vector<Integer> vals, CountKind kind, CountMethod method) {
    CoeffSeries s(vals.size() - 1, Ring::exact());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        s.set_coeff(i, vals[i]);
    }
    return CountTable{kind, method, std::move(s)};
}

}  // namespace

CountTable brute_restricted_table(const MultiplicitySet& mults, u64 n_max) {
    check_oracle_bound(n_max);
    std::vector<Integer> counts(n_max + 1, Integer(0));
    enumerate_restricted(mults.members_up_to(n_max), 1, n_max, n_max, counts);
    return table_from(std::move(counts), CountKind::restricted_p, CountMethod::brute);
}

CountTable brute_parts_table(const ResidueClassUnion& parts, u64 n_max) {
    check_oracle_bound(n_max);
    std::vector<Integer> counts(n_max + 1, Integer(0));
    enumerate_parts(parts.members_up_to(n_max), 0, n_max, n_max, counts);
    return table_from(std::move(counts), CountKind::parts_q, CountMethod::brute);
}

Integer brute_restricted(const MultiplicitySet& mults, u64 n) {
    return brute_restricted_table(mults, n).value(n);
}

Integer brute_parts(const ResidueClassUnion& parts, u64 n) {
    return brute_parts_table(parts, n).value(n);
}

CountTable partition_p(std::size_t n_max, Ring ring) {
    CoeffSeries vals(n_max, ring);
    vals.set_coeff(0, Integer(1));
    if (ring.is_exact()) {
        std::vector<Integer> p(n_max + 1, Integer(0));
        p[0] = 1;
        for (std::size_t n = 1; n <= n_max; ++n) {
            Integer acc(0);
            for (u64 k = 1;; ++k) {
                const u64 g1 = k * (3 * k - 1) / 2;
                if (g1 > n) {
                    break;
                }
                const bool plus = (k % 2 == 1);
                if (plus) {
                    acc += p[n - g1];
                } else {
                    acc -= p[n - g1];
                }
                const u64 g2 = g1 + k;
                if (g2 <= n) {
                    if (plus) {
                        acc += p[n - g2];
                    } else {
                        acc -= p[n - g2];
                    }
                }
            }
            p[n] = acc;
            vals.set_coeff(n, acc);
        }
    } else {
        const u64 d = ring.modulus();
        std::vector<u64> p(n_max + 1, 0);
        p[0] = 1 % d;
        for (std::size_t n = 1; n <= n_max; ++n) {
            u64 acc = 0;
            for (u64 k = 1;; ++k) {
                const u64 g1 = k * (3 * k - 1) / 2;
                if (g1 > n) {
                    break;
                }
                const bool plus = (k % 2 == 1);
                const u64 t1 = p[n - g1];
                acc = plus ? (acc + t1 >= d ? acc + t1 - d : acc + t1)
                           : (acc >= t1 ? acc - t1 : acc + (d - t1));
                const u64 g2 = g1 + k;
                if (g2 <= n) {
                    const u64 t2 = p[n - g2];
                    acc = plus ? (acc + t2 >= d ? acc + t2 - d : acc + t2)
                               : (acc >= t2 ? acc - t2 : acc + (d - t2));
                }
            }
            p[n] = acc;
            vals.set_coeff(n, Integer((unsigned long)acc));
        }
    }
    return CountTable{CountKind::partition_p, CountMethod::series, std::move(vals)};
}

CountTable count_restricted(const MultiplicitySet& mults, std::size_t n_max, Ring ring) {
    CoeffSeries s = one(n_max, ring);
    for (u64 t = 1; t <= n_max; ++t) {
        std::vector<u64> exps;
        for (u64 a : mults.members_up_to(n_max / t)) {
            exps.push_back(a * t);
        }
        if (!exps.empty()) {
            s = mul_one_plus_powers(s, exps);
        }
    }
    return CountTable{CountKind::restricted_p, CountMethod::series, std::move(s)};
}

CountTable count_parts(const ResidueClassUnion& parts, std::size_t n_max, Ring ring) {
    CoeffSeries s = one(n_max, ring);
    for (u64 b = 1; b <= n_max; ++b) {
        if (parts.contains(b)) {
            s.div_binomial_inplace(b);
        }
    }
    return CountTable{CountKind::parts_q, CountMethod::series, std::move(s)};
}

CountsReport verify_counts(const MultiplicitySet& mults, const ResidueClassUnion& parts,
                           u64 n_max, u64 oracle_n_max) {
    CountsReport report;
    report.n_max = n_max;
    report.oracle_n_max = oracle_n_max;

    const CountTable by_mults = count_restricted(mults, n_max, Ring::exact());
    const CountTable by_parts = count_parts(parts, n_max, Ring::exact());
    const CountTable oracle_mults = brute_restricted_table(mults, oracle_n_max);
    const CountTable oracle_parts = brute_parts_table(parts, oracle_n_max);

    for (u64 n = 0; n <= n_max; ++n) {
        const Integer a = by_mults.value(n);
        const Integer b = by_parts.value(n);
        const bool in_oracle = n <= oracle_n_max;
        const bool oracle_ok =
            !in_oracle || (oracle_mults.value(n) == a && oracle_parts.value(n) == b);
        if (a != b || !oracle_ok) {
            CountMismatch mm;
            mm.n = n;
            mm.restricted_count = a;
            mm.parts_count = b;
            if (in_oracle) {
                mm.brute_restricted = oracle_mults.value(n);
                mm.brute_parts = oracle_parts.value(n);
            }
            report.first_mismatch = std::move(mm);
            report.pass = false;
            return report;
        }
    }
    report.pass = true;
    return report;
}

}  // namespace partcrt
