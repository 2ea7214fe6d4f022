#include "partcrt/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "partcrt/congruences.hpp"
#include "partcrt/errors.hpp"
#include "partcrt/identities.hpp"
#include "partcrt/json_io.hpp"
#include "partcrt/partitions.hpp"
#include "partcrt/sweep.hpp"

namespace partcrt::cli {
namespace {

using nlohmann::json;

// Malformed values that CLI11 accepted as strings but fail deeper parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int usage(std::ostream& err, const std::string& msg) {
    err << "partcrt: " << msg << "\n";
    return 2;
}

int violation(std::ostream& err, const std::string& msg) {
    err << "partcrt: " << msg << "\n";
    return 3;
}

u64 parse_u64(const std::string& text, const std::string& what) {
    u64 value = 0;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw UsageError(what + ": expected an unsigned integer, got \"" + text + "\"");
    return value;
}

std::vector<u64> parse_u64_list(const std::string& text, const std::string& what) {
    std::vector<u64> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        out.push_back(parse_u64(item, what));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// "inf" encodes an absent bound.
std::optional<u64> parse_bound(const std::string& text, const std::string& what) {
    if (text == "inf") return std::nullopt;
    return parse_u64(text, what);
}

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + path);
    buffer << file.rdbuf();
    return buffer.str();
}

json reparse(const std::string& text) { return json::parse(text); }

// 1-based congruence index whose modulus matches the claim.
std::size_t infer_factor(const IdentityInstance& inst, u64 modulus) {
    const std::vector<u64>* moduli = nullptr;
    if (const auto* crt = std::get_if<CrtProvenance>(&inst.provenance))
        moduli = &crt->system.moduli;
    else if (const auto* chain = std::get_if<ChainProvenance>(&inst.provenance))
        moduli = &chain->moduli;
    else
        throw UsageError("instance was built from a preset; congruence transfer needs "
                         "residue-system provenance");
    for (std::size_t i = 0; i < moduli->size(); ++i)
        if ((*moduli)[i] == modulus) return i + 1;
    throw UsageError("no congruence in the instance has modulus " + std::to_string(modulus));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
    CLI::App app{"partition identities from residue systems, verified by exact counting",
                 "partcrt"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "construct an identity instance as json");
    gen->require_subcommand(1);

    std::string crt_m, crt_a, crt_l = "1", crt_r;
    u64 crt_k = 1;
    auto* gen_crt = gen->add_subcommand("crt", "from a pairwise coprime residue system");
    gen_crt->add_option("--m", crt_m, "moduli m_1,...,m_s")->required();
    gen_crt->add_option("--a", crt_a, "offsets a_1,...,a_s")->required();
    gen_crt->add_option("--k", crt_k, "scale on the class of multiples of prod(m)");
    gen_crt->add_option("--l", crt_l, "copies of that class, or inf");
    gen_crt->add_option("--r", crt_r, "lift overrides, each congruent to the canonical lift");

    std::string chain_m, chain_r, chain_l = "1";
    auto* gen_chain = gen->add_subcommand("chain", "from a divisibility chain");
    gen_chain->add_option("--m", chain_m, "moduli m_1,...,m_s")->required();
    gen_chain->add_option("--r", chain_r, "chain r_1 | r_2 | ... | r_{s+1}")->required();
    gen_chain->add_option("--l", chain_l, "copies of the top class, or inf");

    std::string preset_spec;
    auto* gen_preset = gen->add_subcommand("preset", "a named classical identity");
    gen_preset
        ->add_option("spec", preset_spec,
                     "euler | glaisher=D | macmahon | andrews=R | subbarao=L,R | nm=L,R,A,P")
        ->required();

    // verify
    std::string verify_in;
    u64 verify_n_max = 300, verify_oracle = 40;
    auto* verify = app.add_subcommand("verify", "check an instance by independent counting");
    verify->add_option("--in", verify_in, "instance json file, or - for stdin")->required();
    verify->add_option("--n-max", verify_n_max, "count agreement window");
    verify->add_option("--oracle-max", verify_oracle, "brute-force agreement window");

    // count
    std::string count_kind, count_in, count_format = "json";
    u64 count_n_max = 100;
    std::optional<u64> count_mod;
    auto* count = app.add_subcommand("count", "print a table of partition counts");
    count->add_option("kind", count_kind, "p (unrestricted), P (by multiplicity), Q (by parts)")
        ->required()
        ->check(CLI::IsMember({"p", "P", "Q"}));
    count->add_option("--in", count_in, "instance json file, or - for stdin (P and Q)");
    count->add_option("--n-max", count_n_max, "last weight in the table");
    count->add_option("--mod", count_mod, "reduce every count modulo this");
    count->add_option("--format", count_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // congruence
    std::string cong_in, cong_claims_file;
    std::vector<std::string> cong_claims;
    std::optional<u64> cong_factor;
    u64 cong_n_max = 100;
    auto* cong = app.add_subcommand("congruence",
                                    "check divisibility claims, optionally transferred "
                                    "through an instance");
    cong->add_option("--in", cong_in, "instance json to transfer the claims through");
    cong->add_option("--factor", cong_factor, "1-based congruence index (default: by modulus)");
    cong->add_option("--claim", cong_claims, "claim m,c,d: divisor d divides the count at m*n+c")
        ->expected(1)
        ->allow_extra_args(false);
    cong->add_option("--claims-file", cong_claims_file, "jsonl file of claims, or - for stdin");
    cong->add_option("--n-max", cong_n_max, "window bound on the checked weights");

    // sweep
    SweepConfig cfg;
    auto* sweep = app.add_subcommand("sweep", "verify randomly sampled instances");
    sweep->add_option("--samples", cfg.samples, "instances to sample");
    sweep->add_option("--seed", cfg.seed, "sampling seed");
    sweep->add_option("--s-max", cfg.s_max, "max congruences per system");
    sweep->add_option("--m-max", cfg.m_max, "max modulus");
    sweep->add_option("--k-max", cfg.k_max, "max scale k");
    sweep->add_option("--l-max", cfg.l_max, "max finite l");
    sweep->add_option("--n-max", cfg.n_max, "count agreement window");
    sweep->add_option("--oracle-max", cfg.oracle_max, "brute-force agreement window");
    sweep->add_option("--congruence-max", cfg.congruence_max, "transferred-claim window");
    sweep->add_option("--threads", cfg.threads,
                      "worker cap, 0 for hardware concurrency; the "
                      "PARTITION_CRT_THREADS environment variable caps this too");
    sweep->add_flag("--inject-fault", cfg.inject_fault)->group("");

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("partcrt");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            IdentityInstance inst;
            if (gen_crt->parsed()) {
                CrtBuildParams params;
                params.system.moduli = parse_u64_list(crt_m, "--m");
                params.system.offsets = parse_u64_list(crt_a, "--a");
                params.k = crt_k;
                params.l = parse_bound(crt_l, "--l");
                if (!crt_r.empty()) params.r_overrides = parse_u64_list(crt_r, "--r");
                try {
                    inst = build_crt(params);
                } catch (const Error& e) {
                    return violation(err, e.what());
                }
            } else if (gen_chain->parsed()) {
                ChainBuildParams params;
                params.moduli = parse_u64_list(chain_m, "--m");
                params.r = parse_u64_list(chain_r, "--r");
                params.l = parse_bound(chain_l, "--l");
                try {
                    inst = build_chain(params);
                } catch (const Error& e) {
                    return violation(err, e.what());
                }
            } else {
                const std::string name = preset_spec.substr(0, preset_spec.find('='));
                if (name != "euler" && name != "glaisher" && name != "macmahon" &&
                    name != "andrews" && name != "subbarao" && name != "nm")
                    throw UsageError("unknown preset \"" + name + "\"");
                try {
                    inst = build_preset(preset_spec);
                } catch (const Error& e) {
                    return violation(err, e.what());
                }
            }
            out << to_json(inst);
            return 0;
        }

        if (verify->parsed()) {
            const IdentityInstance inst = instance_from_json(read_input(verify_in, in));
            try {
                const bool poly = verify_polynomial(inst, verify_n_max);
                const CountsReport counts =
                    verify_counts(inst.multiplicities, inst.parts, verify_n_max, verify_oracle);
                json report;
                report["polynomial"] = {{"pass", poly}, {"order", verify_n_max}};
                report["counts"] = reparse(to_json(counts));
                const bool pass = poly && counts.pass;
                report["pass"] = pass;
                out << report.dump(2) << "\n";
                return pass ? 0 : 1;
            } catch (const Error& e) {
                return usage(err, e.what());
            }
        }

        if (count->parsed()) {
            try {
                const Ring ring = count_mod ? Ring::modulo(*count_mod) : Ring::exact();
                const CountTable table = [&] {
                    if (count_kind == "p") {
                        if (!count_in.empty()) throw UsageError("count p takes no --in");
                        return partition_p(count_n_max, ring);
                    }
                    if (count_in.empty()) throw UsageError("count " + count_kind + " needs --in");
                    const IdentityInstance inst = instance_from_json(read_input(count_in, in));
                    return count_kind == "P"
                               ? count_restricted(inst.multiplicities, count_n_max, ring)
                               : count_parts(inst.parts, count_n_max, ring);
                }();
                out << (count_format == "csv" ? to_csv(table) : to_json(table));
                return 0;
            } catch (const Error& e) {
                return usage(err, e.what());
            }
        }

        if (cong->parsed()) {
            std::vector<CongruenceClaim> claims;
            for (const auto& text : cong_claims) {
                const std::vector<u64> v = parse_u64_list(text, "--claim");
                if (v.size() != 3) throw UsageError("--claim: expected m,c,d");
                if (v[0] == 0 || v[2] == 0) throw UsageError("--claim: m and d must be >= 1");
                claims.push_back({v[0], v[1], v[2]});
            }
            if (!cong_claims_file.empty()) {
                const auto extra = claims_from_jsonl(read_input(cong_claims_file, in));
                claims.insert(claims.end(), extra.begin(), extra.end());
            }
            if (claims.empty()) claims = catalog();

            std::optional<IdentityInstance> inst;
            if (!cong_in.empty()) inst = instance_from_json(read_input(cong_in, in));
            if (cong_factor && !inst) throw UsageError("--factor needs --in");

            try {
                json reports = json::array();
                bool all = true;
                for (const auto& claim : claims) {
                    ClaimReport rep;
                    json entry;
                    if (!inst) {
                        rep = check_claim(claim, cong_n_max);
                        entry = reparse(to_json(rep));
                    } else {
                        const std::size_t index =
                            cong_factor ? static_cast<std::size_t>(*cong_factor)
                                        : infer_factor(*inst, claim.modulus);
                        CongruenceClaim moved;
                        if (std::holds_alternative<CrtProvenance>(inst->provenance)) {
                            moved = transfer_crt(*inst, index, claim);
                        } else if (std::holds_alternative<ChainProvenance>(inst->provenance)) {
                            if (index != 1)
                                throw UsageError("chain transfer goes through factor 1 only");
                            moved = transfer_chain(*inst, claim);
                        } else {
                            throw UsageError("instance was built from a preset; congruence "
                                             "transfer needs residue-system provenance");
                        }
                        rep = check_claim(inst->multiplicities, moved, cong_n_max);
                        entry = reparse(to_json(rep));
                        entry["base_claim"] = reparse(to_json(claim));
                    }
                    all = all && rep.pass;
                    reports.push_back(std::move(entry));
                }
                json result;
                result["pass"] = all;
                result["reports"] = std::move(reports);
                out << result.dump(2) << "\n";
                return all ? 0 : 1;
            } catch (const Error& e) {
                return usage(err, e.what());
            }
        }

        if (sweep->parsed()) {
            try {
                const SweepSummary summary = run_sweep(cfg);
                out << to_json(summary);
                return summary.all_passed() ? 0 : 1;
            } catch (const Error& e) {
                return usage(err, e.what());
            }
        }
    } catch (const UsageError& e) {
        return usage(err, e.what());
    } catch (const InvalidParamsError& e) {
        return usage(err, e.what());
    }
    return usage(err, "no subcommand");
}

}  // namespace partcrt::cli
