#include "partcrt/json_io.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "partcrt/errors.hpp"

namespace partcrt {
namespace {

using nlohmann::json;

// Largest integer every double-backed JSON reader keeps exact.
constexpr u64 kJsonIntMax = (u64{1} << 53) - 1;

json num_json(u64 v) {
    if (v <= kJsonIntMax) return json(v);
    return json(std::to_string(v));
}

json num_json(const Integer& v) {
    if (v.fits_ulong_p() && v.get_ui() <= kJsonIntMax) return json(static_cast<u64>(v.get_ui()));
    return json(v.get_str());
}

json opt_json(const std::optional<u64>& v) {
    if (!v) return json(nullptr);
    return num_json(*v);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

u64 parse_u64_string(const std::string& s, const std::string& what) {
    u64 value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || s.empty())
        throw InvalidParamsError(what + ": not a decimal integer: \"" + s + "\"");
    return value;
}

u64 get_u64(const json& j, const std::string& what) {
    if (j.is_number_unsigned()) return j.get<u64>();
    if (j.is_number_integer()) throw InvalidParamsError(what + ": negative value");
    if (j.is_string()) return parse_u64_string(j.get<std::string>(), what);
    throw InvalidParamsError(what + ": expected an integer or decimal string");
}

const json& member(const json& j, const char* key, const std::string& what) {
    if (!j.is_object()) throw InvalidParamsError(what + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InvalidParamsError(what + ": missing key \"" + key + "\"");
    return *it;
}

std::optional<u64> get_opt_u64(const json& j, const std::string& what) {
    if (j.is_null()) return std::nullopt;
    return get_u64(j, what);
}

std::vector<u64> get_u64_vector(const json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidParamsError(what + ": expected an array");
    std::vector<u64> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(get_u64(j[i], what + "[" + std::to_string(i) + "]"));
    return out;
}

json parse_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidParamsError(what + ": malformed json");
    return j;
}

json class_json(const DifferenceClass& cls) {
    json j;
    j["base"] = num_json(cls.base());
    j["excluded"] = opt_json(cls.excluded());
    return j;
}

json set_json(const MultiplicitySet& set) {
    json core = json::array();
    for (u64 a : set.core()) core.push_back(num_json(a));
    json j;
    j["core"] = std::move(core);
    j["period"] = opt_json(set.period());
    return j;
}

json factor_json(const QuotientFactor& f) {
    json j;
    j["den"] = num_json(f.den);
    j["num"] = f.num ? num_json(*f.num) : json(nullptr);
    return j;
}

json vector_json(const std::vector<u64>& v) {
    json j = json::array();
    for (u64 x : v) j.push_back(num_json(x));
    return j;
}

json provenance_json(const Provenance& prov) {
    json j;
    if (const auto* c = std::get_if<CrtProvenance>(&prov)) {
        j["builder"] = "crt";
        j["m"] = vector_json(c->system.moduli);
        j["a"] = vector_json(c->system.offsets);
        j["k"] = num_json(c->k);
        j["l"] = opt_json(c->l);
        j["r"] = vector_json(c->r);
    } else if (const auto* c2 = std::get_if<ChainProvenance>(&prov)) {
        j["builder"] = "chain";
        j["m"] = vector_json(c2->moduli);
        j["r"] = vector_json(c2->r);
        j["l"] = opt_json(c2->l);
    } else {
        const auto& p = std::get<PresetProvenance>(prov);
        j["builder"] = "preset";
        j["name"] = p.name;
        json params = json::object();
        for (const auto& [key, value] : p.params) params[key] = opt_json(value);
        j["params"] = std::move(params);
    }
    return j;
}

DifferenceClass class_from(const json& j) {
    u64 base = get_u64(member(j, "base", "class"), "class.base");
    std::optional<u64> excluded = get_opt_u64(member(j, "excluded", "class"), "class.excluded");
    return DifferenceClass(base, excluded);
}

MultiplicitySet set_from(const json& j) {
    std::vector<u64> core = get_u64_vector(member(j, "core", "multiplicity set"), "core");
    std::optional<u64> period = get_opt_u64(member(j, "period", "multiplicity set"), "period");
    if (period) return MultiplicitySet::periodic(std::move(core), *period);
    return MultiplicitySet::finite(std::move(core));
}

QuotientFactor factor_from(const json& j) {
    QuotientFactor f;
    f.den = get_u64(member(j, "den", "factor"), "factor.den");
    f.num = get_opt_u64(member(j, "num", "factor"), "factor.num");
    if (f.den == 0 || (f.num && *f.num == 0))
        throw InvalidParamsError("factor: zero exponent");
    return f;
}

Provenance provenance_from(const json& j) {
    const std::string builder = member(j, "builder", "provenance").get<std::string>();
    if (builder == "crt") {
        CrtProvenance prov;
        prov.system.moduli = get_u64_vector(member(j, "m", "provenance"), "provenance.m");
        prov.system.offsets = get_u64_vector(member(j, "a", "provenance"), "provenance.a");
        validate(prov.system);
        prov.solution = crt_solve(prov.system);
        prov.k = get_u64(member(j, "k", "provenance"), "provenance.k");
        prov.l = get_opt_u64(member(j, "l", "provenance"), "provenance.l");
        prov.r = get_u64_vector(member(j, "r", "provenance"), "provenance.r");
        if (prov.k == 0) throw InvalidParamsError("provenance.k: must be >= 1");
        if (prov.l && *prov.l == 0) throw InvalidParamsError("provenance.l: must be >= 1");
        if (prov.r.size() != prov.system.moduli.size())
            throw InvalidParamsError("provenance.r: length differs from m");
        const u64 m = prov.solution.modulus;
        for (std::size_t i = 0; i < prov.r.size(); ++i) {
            if (prov.r[i] == 0 || prov.r[i] % m != prov.solution.lifts[i] % m)
                throw InvalidParamsError("provenance.r: entry " + std::to_string(i + 1) +
                                         " is not congruent to its canonical lift");
        }
        return prov;
    }
    if (builder == "chain") {
        ChainProvenance prov;
        prov.moduli = get_u64_vector(member(j, "m", "provenance"), "provenance.m");
        prov.r = get_u64_vector(member(j, "r", "provenance"), "provenance.r");
        prov.l = get_opt_u64(member(j, "l", "provenance"), "provenance.l");
        if (prov.moduli.empty()) throw InvalidParamsError("provenance.m: must be nonempty");
        for (u64 m : prov.moduli)
            if (m == 0) throw InvalidParamsError("provenance.m: entries must be positive");
        if (prov.r.size() != prov.moduli.size() + 1)
            throw InvalidParamsError("provenance.r: expected one more entry than m");
        for (std::size_t i = 0; i + 1 < prov.r.size(); ++i) {
            if (prov.r[i] == 0 || prov.r[i + 1] % prov.r[i] != 0)
                throw InvalidParamsError("provenance.r: entries must form a divisibility chain");
        }
        return prov;
    }
    if (builder == "preset") {
        PresetProvenance prov;
        prov.name = member(j, "name", "provenance").get<std::string>();
        const json& params = member(j, "params", "provenance");
        if (!params.is_object()) throw InvalidParamsError("provenance.params: expected an object");
        for (auto it = params.begin(); it != params.end(); ++it)
            prov.params[it.key()] = get_opt_u64(it.value(), "provenance.params." + it.key());
        return prov;
    }
    throw InvalidParamsError("provenance.builder: unknown builder \"" + builder + "\"");
}

const char* kind_name(CountKind kind) {
    switch (kind) {
        case CountKind::partition_p: return "p";
        case CountKind::restricted_p: return "P";
        case CountKind::parts_q: return "Q";
    }
    return "?";
}

json mismatch_json(const CountMismatch& mm) {
    json j;
    j["n"] = num_json(mm.n);
    j["count_P"] = num_json(mm.restricted_count);
    j["count_Q"] = num_json(mm.parts_count);
    j["brute_P"] = mm.brute_restricted ? num_json(*mm.brute_restricted) : json(nullptr);
    j["brute_Q"] = mm.brute_parts ? num_json(*mm.brute_parts) : json(nullptr);
    return j;
}

json claim_json(const CongruenceClaim& claim) {
    json j;
    j["m"] = num_json(claim.modulus);
    j["c"] = num_json(claim.offset);
    j["d"] = num_json(claim.divisor);
    return j;
}

}  // namespace

std::string to_json(const DifferenceClass& cls) { return dump(class_json(cls)); }

std::string to_json(const CongruenceClaim& claim) { return dump(claim_json(claim)); }

std::string to_json(const MultiplicitySet& set) { return dump(set_json(set)); }

std::string to_json(const IdentityInstance& inst) {
    json j;
    j["A"] = set_json(inst.multiplicities);
    json classes = json::array();
    for (const auto& cls : inst.parts.classes()) classes.push_back(class_json(cls));
    j["B"] = std::move(classes);
    json factors = json::array();
    for (const auto& f : inst.factors) factors.push_back(factor_json(f));
    j["factors"] = std::move(factors);
    j["provenance"] = provenance_json(inst.provenance);
    return dump(j);
}

std::string to_json(const CountTable& table) {
    json j;
    j["kind"] = kind_name(table.kind);
    j["method"] = table.method == CountMethod::series ? "series" : "brute";
    const u64 mod = table.values.ring().modulus();
    j["mod"] = mod == 0 ? json(nullptr) : num_json(mod);
    j["n_max"] = num_json(static_cast<u64>(table.n_max()));
    json values = json::array();
    for (std::size_t n = 0; n <= table.n_max(); ++n) values.push_back(num_json(table.value(n)));
    j["values"] = std::move(values);
    return dump(j);
}

std::string to_json(const CountsReport& report) {
    json j;
    j["pass"] = report.pass;
    j["n_max"] = num_json(report.n_max);
    j["oracle_n_max"] = num_json(report.oracle_n_max);
    j["first_mismatch"] = report.first_mismatch ? mismatch_json(*report.first_mismatch) : json(nullptr);
    return dump(j);
}

std::string to_json(const ClaimReport& report) {
    json j;
    j["claim"] = claim_json(report.claim);
    j["subject"] = report.subject;
    j["n_max"] = num_json(report.n_max);
    j["pass"] = report.pass;
    json violations = json::array();
    for (const auto& v : report.violations) {
        json vj;
        vj["n"] = num_json(v.n);
        vj["value"] = num_json(v.value);
        violations.push_back(std::move(vj));
    }
    j["violations"] = std::move(violations);
    return dump(j);
}

std::string to_json(const ConvolutionReport& report) {
    json j;
    j["pass"] = report.pass;
    j["n_max"] = num_json(report.n_max);
    j["stray_exponent"] = opt_json(report.stray_exponent);
    j["first_mismatch_n"] = opt_json(report.first_mismatch_n);
    return dump(j);
}

std::string to_json(const SweepSummary& summary) {
    json j;
    j["seed"] = num_json(summary.seed);
    j["total"] = num_json(summary.total);
    j["passed"] = num_json(summary.passed);
    j["failed"] = num_json(summary.total - summary.passed);
    json records = json::array();
    for (const auto& rec : summary.records) {
        json rj;
        rj["label"] = rec.label;
        rj["pass"] = rec.pass;
        rj["detail"] = rec.detail;
        records.push_back(std::move(rj));
    }
    j["records"] = std::move(records);
    return dump(j);
}

std::string to_csv(const CountTable& table) {
    std::ostringstream out;
    out << "n,value\n";
    for (std::size_t n = 0; n <= table.n_max(); ++n)
        out << n << ',' << table.value(n).get_str() << '\n';
    return out.str();
}

DifferenceClass difference_class_from_json(const std::string& text) {
    return class_from(parse_text(text, "class"));
}

MultiplicitySet multiplicity_set_from_json(const std::string& text) {
    return set_from(parse_text(text, "multiplicity set"));
}

IdentityInstance instance_from_json(const std::string& text) {
    // Any defect in a stored instance, including a violated set invariant,
    // surfaces as InvalidParamsError: the input is bad, nothing was built.
    try {
        const json j = parse_text(text, "instance");
        IdentityInstance inst;
        inst.multiplicities = set_from(member(j, "A", "instance"));
        const json& classes = member(j, "B", "instance");
        if (!classes.is_array()) throw InvalidParamsError("instance.B: expected an array");
        std::vector<DifferenceClass> parsed;
        parsed.reserve(classes.size());
        for (const auto& cj : classes) parsed.push_back(class_from(cj));
        inst.parts = ResidueClassUnion(std::move(parsed));
        const json& factors = member(j, "factors", "instance");
        if (!factors.is_array()) throw InvalidParamsError("instance.factors: expected an array");
        for (const auto& fj : factors) inst.factors.push_back(factor_from(fj));
        inst.provenance = provenance_from(member(j, "provenance", "instance"));
        return inst;
    } catch (const InvalidParamsError&) {
        throw;
    } catch (const Error& e) {
        throw InvalidParamsError(std::string("instance: ") + e.what());
    } catch (const json::exception& e) {
        throw InvalidParamsError(std::string("instance: ") + e.what());
    }
}

std::vector<CongruenceClaim> claims_from_jsonl(const std::string& text) {
    std::vector<CongruenceClaim> claims;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string what = "claims line " + std::to_string(line_no);
        const json j = parse_text(line, what);
        CongruenceClaim claim;
        claim.modulus = get_u64(member(j, "m", what), what + ".m");
        claim.offset = get_u64(member(j, "c", what), what + ".c");
        claim.divisor = get_u64(member(j, "d", what), what + ".d");
        if (claim.modulus == 0) throw InvalidParamsError(what + ".m: must be >= 1");
        if (claim.divisor == 0 || claim.divisor > kMaxModulus)
            throw InvalidParamsError(what + ".d: out of range");
        claims.push_back(claim);
    }
    return claims;
}

}  // namespace partcrt
