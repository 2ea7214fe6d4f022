#include "partcrt/identities.hpp"

#include <algorithm>
#include <sstream>

namespace partcrt {

namespace {

// Builders stay within u64 by rejecting anything past 2^63 - 1 up front.
u64 checked_mul(u64 a, u64 b) {
    const unsigned __int128 wide = (unsigned __int128)a * b;
    if (wide > kMaxModulus) {
        throw InvalidParamsError("parameter product exceeds 2^63 - 1");
    }
    return (u64)wide;
}

u64 checked_add(u64 a, u64 b) {
    if (a > kMaxModulus - b) {
        throw InvalidParamsError("parameter sum exceeds 2^63 - 1");
    }
    return a + b;
}

// Hard cap on how many multiplicity sums a single build may enumerate.
constexpr u64 kMaxSetSize = u64(1) << 22;

// All values coefs[0]*j_0 + ... + coefs[t-1]*j_{t-1} with 0 <= j_i < radices[i],
// in mixed-radix order (last index fastest).
std::vector<u64> weighted_sums(const std::vector<u64>& coefs, const std::vector<u64>& radices) {
    u64 total = 1;
    for (u64 rad : radices) {
        if (rad == 0) {
            throw InvalidParamsError("builder: zero radix");
        }
        total = checked_mul(total, rad);
        if (total > kMaxSetSize) {
            throw InvalidParamsError("builder: multiplicity set would exceed " +
                                     std::to_string(kMaxSetSize) + " members");
        }
    }
    std::vector<u64> sums;
    sums.reserve(total);
    for (u64 idx = 0; idx < total; ++idx) {
        u64 rest = idx;
        u64 value = 0;
        for (std::size_t i = radices.size(); i-- > 0;) {
            const u64 j = rest % radices[i];
            rest /= radices[i];
            value = checked_add(value, checked_mul(coefs[i], j));
        }
        sums.push_back(value);
    }
    return sums;
}

// Exactly one sum (the all-zero tuple) may be zero; the rest must be distinct.
MultiplicitySet finite_set_from_sums(std::vector<u64> sums) {
    std::sort(sums.begin(), sums.end());
    if (std::adjacent_find(sums.begin(), sums.end()) != sums.end()) {
        throw DistinctnessViolationError("builder: multiplicity sums collide");
    }
    if (sums.empty() || sums.front() != 0) {
        throw InvalidParamsError("builder: missing zero sum");
    }
    sums.erase(sums.begin());
    return MultiplicitySet::finite(std::move(sums));
}

// Periodic variant: sums must be pairwise incongruent mod the period; the
// zero sum's class is represented by the period itself.
MultiplicitySet periodic_set_from_sums(std::vector<u64> sums, u64 period) {
    std::vector<u64> residues;
    residues.reserve(sums.size());
    for (u64 v : sums) {
        residues.push_back(v % period);
    }
    std::sort(residues.begin(), residues.end());
    if (std::adjacent_find(residues.begin(), residues.end()) != residues.end()) {
        throw DistinctnessViolationError("builder: multiplicity sums collide mod period");
    }
    std::sort(sums.begin(), sums.end());
    if (sums.empty() || sums.front() != 0) {
        throw InvalidParamsError("builder: missing zero sum");
    }
    sums.erase(sums.begin());
    sums.push_back(period);
    return MultiplicitySet::periodic(std::move(sums), period);
}

void append_class_and_factor(std::vector<DifferenceClass>& classes,
                             std::vector<QuotientFactor>& factors, u64 den,
                             std::optional<u64> num) {
    // num == den would contribute an empty class and a unit factor; callers
    // skip those before reaching here.
    classes.emplace_back(den, num);
    factors.push_back(QuotientFactor{den, num});
}

IdentityInstance finish_instance(MultiplicitySet mults, std::vector<DifferenceClass> classes,
                                 std::vector<QuotientFactor> factors, Provenance prov) {
    IdentityInstance inst;
    inst.multiplicities = std::move(mults);
    inst.parts = ResidueClassUnion(std::move(classes));  // asserts disjointness
    inst.factors = std::move(factors);
    inst.provenance = std::move(prov);
    return inst;
}

}  // namespace

bool operator==(const QuotientFactor& a, const QuotientFactor& b) {
    return a.den == b.den && a.num == b.num;
}

IdentityInstance build_crt(const CrtBuildParams& params) {
    const CrtSolution sol = crt_solve(params.system);
    const std::size_t s = params.system.moduli.size();
    if (params.k == 0) {
        throw InvalidParamsError("build: k must be >= 1");
    }
    if (params.l && *params.l == 0) {
        throw InvalidParamsError("build: l must be >= 1");
    }

    std::vector<u64> r = params.r_overrides.empty() ? sol.lifts : params.r_overrides;
    if (r.size() != s) {
        throw InvalidParamsError("build: need one lift per congruence");
    }
    for (std::size_t i = 0; i < s; ++i) {
        if (r[i] == 0) {
            throw InvalidParamsError("build: lifts must be positive");
        }
        if (params.validate_overrides && r[i] % sol.modulus != sol.lifts[i] % sol.modulus) {
            throw InvalidParamsError("build: override " + std::to_string(r[i]) +
                                     " is not congruent to the canonical lift " +
                                     std::to_string(sol.lifts[i]) + " mod " +
                                     std::to_string(sol.modulus));
        }
    }

    const u64 mk = checked_mul(sol.modulus, params.k);

    std::vector<u64> coefs = r;
    std::vector<u64> radices = params.system.moduli;
    MultiplicitySet mults;
    if (params.l) {
        coefs.push_back(mk);
        radices.push_back(*params.l);
        mults = finite_set_from_sums(weighted_sums(coefs, radices));
    } else {
        mults = periodic_set_from_sums(weighted_sums(coefs, radices), mk);
    }

    std::vector<DifferenceClass> classes;
    std::vector<QuotientFactor> factors;
    if (!params.l) {
        append_class_and_factor(classes, factors, mk, std::nullopt);
    } else if (*params.l > 1) {
        append_class_and_factor(classes, factors, mk, checked_mul(mk, *params.l));
    }
    for (std::size_t i = 0; i < s; ++i) {
        if (params.system.moduli[i] > 1) {
            append_class_and_factor(classes, factors, r[i],
                                    checked_mul(r[i], params.system.moduli[i]));
        }
    }

    return finish_instance(std::move(mults), std::move(classes), std::move(factors),
                           CrtProvenance{params.system, sol, params.k, params.l, std::move(r)});
}

IdentityInstance build_chain(const ChainBuildParams& params) {
    const std::size_t s = params.moduli.size();
    if (s == 0 || params.r.size() != s + 1) {
        throw InvalidParamsError("build: need s moduli and s + 1 chain values");
    }
    for (u64 m : params.moduli) {
        if (m == 0) {
            throw InvalidParamsError("build: moduli must be positive");
        }
    }
    for (u64 v : params.r) {
        if (v == 0) {
            throw InvalidParamsError("build: chain values must be positive");
        }
    }
    if (params.l && *params.l == 0) {
        throw InvalidParamsError("build: l must be >= 1");
    }
    for (std::size_t i = 0; i + 1 < params.r.size(); ++i) {
        if (params.r[i + 1] % params.r[i] != 0) {
            throw ChainViolationError("build: " + std::to_string(params.r[i]) +
                                      " does not divide " + std::to_string(params.r[i + 1]));
        }
    }

    // coef_i = m_1 ... m_{i-1} * r_i, the weight of index i in every sum.
    std::vector<u64> coefs(s + 1);
    u64 prefix = 1;
    for (std::size_t i = 0; i < s; ++i) {
        coefs[i] = checked_mul(prefix, params.r[i]);
        prefix = checked_mul(prefix, params.moduli[i]);
    }
    coefs[s] = checked_mul(prefix, params.r[s]);

    std::vector<u64> radices = params.moduli;
    MultiplicitySet mults;
    if (params.l) {
        radices.push_back(*params.l);
        mults = finite_set_from_sums(weighted_sums(coefs, radices));
    } else {
        std::vector<u64> head_coefs(coefs.begin(), coefs.end() - 1);
        mults = periodic_set_from_sums(weighted_sums(head_coefs, radices), coefs[s]);
    }

    std::vector<DifferenceClass> classes;
    std::vector<QuotientFactor> factors;
    for (std::size_t i = 0; i < s; ++i) {
        if (params.moduli[i] > 1) {
            append_class_and_factor(classes, factors, coefs[i],
                                    checked_mul(coefs[i], params.moduli[i]));
        }
    }
    if (!params.l) {
        append_class_and_factor(classes, factors, coefs[s], std::nullopt);
    } else if (*params.l > 1) {
        append_class_and_factor(classes, factors, coefs[s], checked_mul(coefs[s], *params.l));
    }

    return finish_instance(std::move(mults), std::move(classes), std::move(factors),
                           ChainProvenance{params.moduli, params.r, params.l});
}

namespace {

IdentityInstance make_preset(MultiplicitySet mults, std::vector<DifferenceClass> classes,
                             std::vector<QuotientFactor> factors, std::string name,
                             std::map<std::string, std::optional<u64>> prm) {
    return finish_instance(std::move(mults), std::move(classes), std::move(factors),
                           PresetProvenance{std::move(name), std::move(prm)});
}

}  // namespace

IdentityInstance preset_euler() {
    return make_preset(MultiplicitySet::finite({1}), {DifferenceClass(1, 2)},
                       {QuotientFactor{1, 2}}, "euler", {});
}

IdentityInstance preset_glaisher(u64 d) {
    if (d < 2) {
        throw InvalidParamsError("glaisher: need d >= 2");
    }
    if (d > kMaxSetSize) {
        throw InvalidParamsError("glaisher: d too large to enumerate");
    }
    std::vector<u64> elems;
    for (u64 a = 1; a < d; ++a) {
        elems.push_back(a);
    }
    return make_preset(MultiplicitySet::finite(std::move(elems)), {DifferenceClass(1, d)},
                       {QuotientFactor{1, d}}, "glaisher", {{"d", d}});
}

IdentityInstance preset_macmahon() {
    return make_preset(MultiplicitySet::periodic({2}, 1),
                       {DifferenceClass(2, std::nullopt), DifferenceClass(3, 6)},
                       {QuotientFactor{2, std::nullopt}, QuotientFactor{3, 6}}, "macmahon", {});
}

IdentityInstance preset_andrews(u64 r) {
    if (r == 0) {
        throw InvalidParamsError("andrews: need r >= 1");
    }
    const u64 odd = checked_add(checked_mul(2, r), 1);
    const u64 twice = checked_mul(2, odd);
    return make_preset(MultiplicitySet::periodic({2, odd}, 2),
                       {DifferenceClass(2, std::nullopt), DifferenceClass(odd, twice)},
                       {QuotientFactor{2, std::nullopt}, QuotientFactor{odd, twice}},
                       "andrews", {{"r", r}});
}

IdentityInstance preset_subbarao(std::optional<u64> l, u64 r) {
    if (l && *l < 2) {
        throw InvalidParamsError("subbarao: need l >= 2");
    }
    const u64 odd = checked_add(checked_mul(2, r), 1);  // r == 0 gives odd == 1
    MultiplicitySet mults;
    if (l) {
        if (*l > kMaxSetSize / 2) {
            throw InvalidParamsError("subbarao: l too large to enumerate");
        }
        std::vector<u64> elems;
        for (u64 i = 1; i < *l; ++i) {
            elems.push_back(checked_mul(2, i));
        }
        for (u64 i = 0; i < *l; ++i) {
            elems.push_back(checked_add(checked_mul(2, i), odd));
        }
        mults = MultiplicitySet::finite(std::move(elems));
    } else {
        mults = MultiplicitySet::periodic({2, odd}, 2);
    }
    std::vector<DifferenceClass> classes;
    std::vector<QuotientFactor> factors;
    append_class_and_factor(classes, factors, 2,
                            l ? std::optional<u64>(checked_mul(2, *l)) : std::nullopt);
    append_class_and_factor(classes, factors, odd, checked_mul(2, odd));
    return make_preset(std::move(mults), std::move(classes), std::move(factors), "subbarao",
                       {{"l", l}, {"r", r}});
}

IdentityInstance preset_nm(u64 l, u64 r, u64 a, u64 p) {
    if (l == 0 || r == 0 || a == 0 || p == 0) {
        throw InvalidParamsError("nm: parameters must be positive");
    }
    if (gcd(a, p) != 1) {
        throw InvalidParamsError("nm: a and p must be coprime");
    }
    if (checked_mul(l, p) > kMaxSetSize) {
        throw InvalidParamsError("nm: l * p too large to enumerate");
    }
    const u64 step = checked_add(checked_mul(p, r), a);  // p*r + a
    std::vector<u64> sums;
    for (u64 i = 0; i < l; ++i) {
        for (u64 j = 0; j < p; ++j) {
            sums.push_back(checked_add(checked_mul(p, i), checked_mul(j, step)));
        }
    }
    MultiplicitySet mults = finite_set_from_sums(std::move(sums));
    std::vector<DifferenceClass> classes;
    std::vector<QuotientFactor> factors;
    if (l > 1) {
        append_class_and_factor(classes, factors, p, checked_mul(l, p));
    }
    if (p > 1) {
        append_class_and_factor(classes, factors, step, checked_mul(p, step));
    }
    return make_preset(std::move(mults), std::move(classes), std::move(factors), "nm",
                       {{"l", l}, {"r", r}, {"a", a}, {"p", p}});
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

u64 parse_u64(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw InvalidParamsError("preset: bad integer '" + text + "'");
    }
    try {
        return std::stoull(text);
    } catch (const std::exception&) {
        throw InvalidParamsError("preset: bad integer '" + text + "'");
    }
}

}  // namespace

IdentityInstance build_preset(const std::string& spec) {
    const auto eq = spec.find('=');
    const std::string name = spec.substr(0, eq);
    std::vector<std::string> args;
    if (eq != std::string::npos) {
        args = split(spec.substr(eq + 1), ',');
    }
    auto want = [&](std::size_t n) {
        if (args.size() != n) {
            throw InvalidParamsError("preset " + name + ": expected " + std::to_string(n) +
                                     " parameter(s)");
        }
    };
    if (name == "euler") {
        want(0);
        return preset_euler();
    }
    if (name == "glaisher") {
        want(1);
        return preset_glaisher(parse_u64(args[0]));
    }
    if (name == "macmahon") {
        want(0);
        return preset_macmahon();
    }
    if (name == "andrews") {
        want(1);
        return preset_andrews(parse_u64(args[0]));
    }
    if (name == "subbarao") {
        want(2);
        std::optional<u64> l;
        if (args[0] != "inf") {
            l = parse_u64(args[0]);
        }
        return preset_subbarao(l, parse_u64(args[1]));
    }
    if (name == "nm") {
        want(4);
        return preset_nm(parse_u64(args[0]), parse_u64(args[1]), parse_u64(args[2]),
                         parse_u64(args[3]));
    }
    throw InvalidParamsError("preset: unknown name '" + name + "'");
}

bool verify_polynomial(const IdentityInstance& inst, std::size_t n) {
    CoeffSeries lhs = one(n, Ring::exact());
    for (u64 a : inst.multiplicities.members_up_to(n)) {
        lhs.set_coeff(a, Integer(1));
    }
    std::vector<SeriesFactor> flat;
    for (const auto& f : inst.factors) {
        flat.push_back(den_factor(f.den));
        if (f.num) {
            flat.push_back(num_factor(*f.num));
        }
    }
    return lhs == product_of_factors(n, Ring::exact(), flat);
}

std::vector<u64> finite_complement(const IdentityInstance& inst) {
    const auto* prov = std::get_if<CrtProvenance>(&inst.provenance);
    if (!prov || prov->k != 1 || prov->l) {
        throw WrongShapeError(
            "finite_complement: needs a coprime-system build with k == 1 and unbounded l");
    }
    const u64 m = prov->solution.modulus;
    std::vector<u64> out;
    for (u64 rho : weighted_sums(prov->r, prov->system.moduli)) {
        while (rho > m) {
            rho -= m;
            out.push_back(rho);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace partcrt
