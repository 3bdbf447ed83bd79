// pscvote: audit committees for proportionality of solid coalitions (PSC),
// run the Minimal Demand rule, enumerate all PSC committees, and generate
// test electorates. All results go to stdout as JSON; diagnostics to stderr.
// Exit codes: 0 pass/success, 1 semantic failure (PSC violation or
// enumeration/brute-force mismatch), 2 usage, parse or budget errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "psc/dummett.hpp"
#include "psc/generate.hpp"
#include "psc/json_io.hpp"
#include "psc/md.hpp"
#include "psc/verify.hpp"

namespace {

struct GlobalOptions {
    std::optional<std::string> quota;
    bool pretty = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw psc::Error(psc::Errc::malformed_header, "cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

psc::PreferenceProfile load_profile(const std::string& path) {
    return psc::parse_profile(read_file(path));
}

// command-line --quota beats the file's quota line; default is hare
psc::Quota resolve_quota(const psc::PreferenceProfile& profile, const GlobalOptions& opts) {
    const std::string spec = opts.quota ? *opts.quota : profile.quota_line.value_or("hare");
    return psc::make_quota(profile.n, profile.k, spec);
}

void emit(const nlohmann::json& value, const GlobalOptions& opts) {
    if (opts.pretty)
        std::cout << value.dump(2) << '\n';
    else
        std::cout << value.dump() << '\n';
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> names;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) names.push_back(token);
    return names;
}

// "2:{a,b};3:{c}" with names resolved against the generated candidate list
std::vector<psc::BlocSpec> parse_bloc_specs(const std::string& text, int m) {
    const auto names = psc::default_candidate_names(m);
    psc::PreferenceProfile lookup; // name resolution only
    lookup.candidate_names = names;
    lookup.m = m;

    std::vector<psc::BlocSpec> blocs;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, ';')) {
        const auto colon = part.find(':');
        const auto open = part.find('{');
        const auto close = part.rfind('}');
        if (colon == std::string::npos || open == std::string::npos ||
            close == std::string::npos || open > close || colon > open)
            throw psc::Error(psc::Errc::invalid_dimensions,
                             "bloc spec must look like \"2:{a,b}\", got \"" + part + "\"");
        psc::BlocSpec bloc;
        try {
            bloc.size = std::stoll(part.substr(0, colon));
        } catch (const std::exception&) {
            throw psc::Error(psc::Errc::invalid_dimensions, "bad bloc size in \"" + part + "\"");
        }
        bloc.cset = psc::ids_of(lookup, split_names(part.substr(open + 1, close - open - 1)));
        blocs.push_back(std::move(bloc));
    }
    if (blocs.empty())
        throw psc::Error(psc::Errc::invalid_dimensions, "no blocs given");
    return blocs;
}

int cmd_verify(const std::string& file, const std::string& committee_arg,
               const GlobalOptions& opts) {
    const auto profile = load_profile(file);
    const auto quota = resolve_quota(profile, opts);
    const auto committee = psc::ids_of(profile, split_names(committee_arg));
    const auto verdict = psc::verify_psc(profile, quota, committee);
    emit(psc::verdict_json(profile, quota, verdict), opts);
    return verdict.satisfies_psc ? 0 : 1;
}

int cmd_md(const std::string& file, const std::string& policy_spec, bool trace,
           const GlobalOptions& opts) {
    const auto profile = load_profile(file);
    const auto quota = resolve_quota(profile, opts);
    const auto policy = psc::parse_policy(profile, policy_spec);
    const auto result = psc::run_md(profile, quota, policy);
    emit(psc::committee_json(profile, result.committee), opts);
    if (trace)
        for (const auto& line : psc::trace_json_lines(profile, result.trace))
            std::cout << line << '\n';
    return 0;
}

int cmd_enumerate(const std::string& file, bool check_equal, std::int64_t node_budget,
                  const GlobalOptions& opts) {
    const auto profile = load_profile(file);
    const auto quota = resolve_quota(profile, opts);
    psc::EnumerateOptions enum_opts;
    enum_opts.node_budget = node_budget;
    if (check_equal) {
        const auto report = psc::check_equivalence(profile, quota, enum_opts);
        emit(psc::equivalence_json(profile, report), opts);
        return report.equal ? 0 : 1;
    }
    const auto report = psc::enumerate_outcomes(profile, quota, enum_opts);
    emit(psc::enumeration_json(profile, report), opts);
    return 0;
}

int write_ballot_file(const psc::PreferenceProfile& profile, const std::string& out_path) {
    const std::string text = psc::serialize_profile(profile);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw psc::Error(psc::Errc::malformed_header, "cannot write \"" + out_path + "\"");
    out << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PSC committee auditing: verification, the Minimal Demand rule,\n"
                 "Dummett-tree enumeration and profile generation"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--quota", opts.quota,
                   "quota spec: hare, midpoint or p/r (overrides the ballot file's quota line)");
    app.add_flag("--json", opts.pretty, "pretty-print the JSON output (2-space indent)");

    std::string file, committee_arg, policy_spec, bloc_arg, out_path;
    bool trace = false, check_equal = false;
    std::int64_t node_budget = 10'000'000;
    std::int64_t gen_n = 0;
    int gen_m = 0, gen_k = 0;
    std::uint64_t seed = 0;

    auto* verify = app.add_subcommand("verify", "check a committee for q-PSC");
    verify->fallthrough();
    verify->add_option("file", file, "ballot file")->required();
    verify->add_option("committee", committee_arg, "comma-separated candidate names")->required();

    auto* md = app.add_subcommand("md", "run the Minimal Demand rule");
    md->fallthrough();
    md->add_option("file", file, "ballot file")->required();
    md->add_option("policy", policy_spec,
                   "tie-break policy: lex | borda | random:SEED | script:name,name,...")
        ->required();
    md->add_flag("--trace", trace, "also print the decision trace as JSON lines");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate all PSC committees");
    enumerate->fallthrough();
    enumerate->add_option("file", file, "ballot file")->required();
    enumerate->add_flag("--check-theorem1", check_equal,
                        "also brute-force all k-subsets and compare the outcome sets");
    enumerate->add_option("--node-budget", node_budget, "search state budget (default 10^7)");

    auto* gen = app.add_subcommand("gen", "generate a ballot file");
    gen->fallthrough();
    gen->require_subcommand(1);
    auto* impartial = gen->add_subcommand("impartial", "uniform random rankings");
    impartial->fallthrough();
    impartial->add_option("-n", gen_n, "number of voters")->required();
    impartial->add_option("-m", gen_m, "number of candidates")->required();
    impartial->add_option("-k", gen_k, "committee size")->required();
    impartial->add_option("--seed", seed, "PRNG seed (default 0)");
    impartial->add_option("-o,--out", out_path, "output file (default stdout)");
    auto* blocs = gen->add_subcommand("blocs", "disjoint solid-coalition blocs");
    blocs->fallthrough();
    blocs->add_option("--blocs", bloc_arg, "e.g. \"2:{a,b};2:{c,d}\"")->required();
    blocs->add_option("-m", gen_m, "number of candidates")->required();
    blocs->add_option("-k", gen_k, "committee size")->required();
    blocs->add_option("--seed", seed, "PRNG seed (default 0)");
    blocs->add_option("-o,--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(file, committee_arg, opts);
        if (md->parsed()) return cmd_md(file, policy_spec, trace, opts);
        if (enumerate->parsed()) return cmd_enumerate(file, check_equal, node_budget, opts);
        if (gen->parsed()) {
            if (impartial->parsed())
                return write_ballot_file(psc::gen_impartial(gen_n, gen_m, gen_k, seed), out_path);
            return write_ballot_file(
                psc::gen_blocs(parse_bloc_specs(bloc_arg, gen_m), gen_m, gen_k, seed), out_path);
        }
    } catch (const psc::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
