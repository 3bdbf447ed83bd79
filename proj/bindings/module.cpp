#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "psc/dummett.hpp"
#include "psc/generate.hpp"
#include "psc/json_io.hpp"
#include "psc/md.hpp"
#include "psc/verify.hpp"

namespace py = pybind11;
using namespace psc;

namespace {

py::object to_py(const nlohmann::json& value) {
    switch (value.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(value.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(value.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(value.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float: return py::float_(value.get<double>());
        case nlohmann::json::value_t::string: return py::str(value.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : value) out.append(to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [key, item] : value.items()) out[py::str(key)] = to_py(item);
            return out;
        }
        default: return py::none();
    }
}

TieBreakPolicy policy_from(const PreferenceProfile& profile, const py::object& spec) {
    if (py::isinstance<py::str>(spec))
        return parse_policy(profile, spec.cast<std::string>());
    // any sequence of candidate names acts as a script
    std::vector<CandidateId> script;
    for (const auto& name : spec.cast<std::vector<std::string>>())
        script.push_back(profile.index_of(name));
    return TieBreakPolicy::scripted(std::move(script));
}

py::dict md_result_dict(const PreferenceProfile& profile, const MDResult& result) {
    py::dict out;
    out["committee"] = to_py(nlohmann::json(names_of(profile, result.committee)));
    py::list steps;
    for (const auto& step : result.trace) steps.append(to_py(trace_step_json(profile, step)));
    out["trace"] = steps;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Committee auditing for proportionality of solid coalitions";

    py::register_exception<Error>(m, "Error");

    py::class_<PreferenceProfile>(m, "Profile")
        .def_static("parse", &parse_profile, py::arg("text"))
        .def_readonly("candidate_names", &PreferenceProfile::candidate_names)
        .def_readonly("n", &PreferenceProfile::n)
        .def_readonly("m", &PreferenceProfile::m)
        .def_readonly("k", &PreferenceProfile::k)
        .def_readonly("quota_line", &PreferenceProfile::quota_line)
        .def("serialize", &serialize_profile)
        .def("candidate_index", &PreferenceProfile::index_of, py::arg("name"))
        .def("__eq__", [](const PreferenceProfile& a, const PreferenceProfile& b) { return a == b; })
        .def("__repr__", [](const PreferenceProfile& p) {
            return "<Profile n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) +
                   " k=" + std::to_string(p.k) + ">";
        });

    py::class_<Quota>(m, "Quota")
        .def_property_readonly("num", [](const Quota& q) { return q.value.num(); })
        .def_property_readonly("den", [](const Quota& q) { return q.value.den(); })
        .def("__str__", &Quota::str)
        .def("__eq__", [](const Quota& a, const Quota& b) { return a == b; })
        .def("__repr__", [](const Quota& q) { return "Quota(" + q.str() + ")"; });

    m.def(
        "make_quota",
        [](std::int64_t n, int k, const std::string& spec) { return make_quota(n, k, spec); },
        py::arg("n"), py::arg("k"), py::arg("spec") = "hare");
    m.def(
        "make_quota",
        [](const PreferenceProfile& p, const std::string& spec) { return make_quota(p.n, p.k, spec); },
        py::arg("profile"), py::arg("spec") = "hare");
    m.def("demand_cap", &demand_cap, py::arg("coalition_size"), py::arg("quota"));

    m.def(
        "prefix_classes",
        [](const PreferenceProfile& p, int j) {
            py::list out;
            for (const auto& cls : prefix_classes(p, j))
                out.append(py::make_tuple(names_of(p, cls.cset), cls.weight, cls.voters));
            return out;
        },
        py::arg("profile"), py::arg("j"));

    m.def(
        "maximal_support",
        [](const PreferenceProfile& p, const std::vector<std::string>& names) {
            return maximal_support(p, ids_of(p, names));
        },
        py::arg("profile"), py::arg("cset"));

    m.def(
        "active_coalitions",
        [](const PreferenceProfile& p) {
            py::list out;
            for (const auto& witness : active_coalitions(p))
                out.append(to_py(witness_json(p, witness)));
            return out;
        },
        py::arg("profile"));

    m.def(
        "unmet_demands",
        [](const PreferenceProfile& p, const Quota& q, const std::vector<std::string>& w, int j_limit) {
            py::list out;
            for (const auto& witness : unmet_demands(p, q, ids_of(p, w), j_limit))
                out.append(to_py(witness_json(p, witness)));
            return out;
        },
        py::arg("profile"), py::arg("quota"), py::arg("committee"), py::arg("j_limit"));

    m.def(
        "verify",
        [](const PreferenceProfile& p, const Quota& q, const std::vector<std::string>& w) {
            return to_py(verdict_json(p, q, verify_psc(p, q, ids_of(p, w))));
        },
        py::arg("profile"), py::arg("quota"), py::arg("committee"));

    m.def(
        "verify_definitional",
        [](const PreferenceProfile& p, const Quota& q, const std::vector<std::string>& w) {
            return to_py(verdict_json(p, q, verify_psc_definitional(p, q, ids_of(p, w))));
        },
        py::arg("profile"), py::arg("quota"), py::arg("committee"));

    m.def(
        "psc_committees",
        [](const PreferenceProfile& p, const Quota& q) {
            py::list out;
            for (const auto& committee : psc_committees_bruteforce(p, q))
                out.append(to_py(nlohmann::json(names_of(p, committee))));
            return out;
        },
        py::arg("profile"), py::arg("quota"));

    m.def(
        "choice_set",
        [](const PreferenceProfile& p, const Quota& q, const std::vector<std::string>& w, int j) {
            return names_of(p, choice_set(p, q, ids_of(p, w), j));
        },
        py::arg("profile"), py::arg("quota"), py::arg("committee"), py::arg("j"));

    m.def(
        "run_md",
        [](const PreferenceProfile& p, const Quota& q, const py::object& policy) {
            return md_result_dict(p, run_md(p, q, policy_from(p, policy)));
        },
        py::arg("profile"), py::arg("quota"), py::arg("policy") = "lex");

    m.def(
        "borda_scores",
        [](const PreferenceProfile& p) {
            py::dict out;
            const auto scores = borda_scores(p);
            for (int c = 0; c < p.m; ++c)
                out[py::str(p.name_of(c))] = scores[static_cast<std::size_t>(c)];
            return out;
        },
        py::arg("profile"));

    m.def(
        "enumerate_outcomes",
        [](const PreferenceProfile& p, const Quota& q, std::int64_t node_budget, bool memoize) {
            EnumerateOptions opts;
            opts.node_budget = node_budget;
            opts.memoize = memoize;
            return to_py(enumeration_json(p, enumerate_outcomes(p, q, opts)));
        },
        py::arg("profile"), py::arg("quota"), py::arg("node_budget") = 10'000'000,
        py::arg("memoize") = true);

    m.def(
        "check_equivalence",
        [](const PreferenceProfile& p, const Quota& q, std::int64_t node_budget) {
            EnumerateOptions opts;
            opts.node_budget = node_budget;
            return to_py(equivalence_json(p, check_equivalence(p, q, opts)));
        },
        py::arg("profile"), py::arg("quota"), py::arg("node_budget") = 10'000'000);

    m.def(
        "reconstruct_path",
        [](const PreferenceProfile& p, const Quota& q, const std::vector<std::string>& w) {
            return to_py(reconstruct_json(p, reconstruct_path(p, q, ids_of(p, w))));
        },
        py::arg("profile"), py::arg("quota"), py::arg("committee"));

    m.def("gen_impartial", &gen_impartial, py::arg("n"), py::arg("m"), py::arg("k"),
          py::arg("seed") = 0);

    m.def(
        "gen_blocs",
        [](const std::vector<std::pair<std::int64_t, std::vector<std::string>>>& blocs, int m,
           int k, std::uint64_t seed) {
            PreferenceProfile lookup;
            lookup.candidate_names = default_candidate_names(m);
            lookup.m = m;
            std::vector<BlocSpec> specs;
            for (const auto& [size, names] : blocs)
                specs.push_back(BlocSpec{size, ids_of(lookup, names)});
            return gen_blocs(specs, m, k, seed);
        },
        py::arg("blocs"), py::arg("m"), py::arg("k"), py::arg("seed") = 0);
}
