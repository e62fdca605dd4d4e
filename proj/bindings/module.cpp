#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "janet/cli.hpp"
#include "janet/io.hpp"

namespace py = pybind11;
using namespace janet;

namespace {

Monomial to_monomial(const std::vector<int>& exps) { return Monomial(exps); }

MonomialSet to_set(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw std::invalid_argument("monomial set must be non-empty");
    std::vector<Monomial> members;
    members.reserve(rows.size());
    for (const auto& r : rows) members.emplace_back(r);
    return MonomialSet(std::move(members));
}

std::vector<std::vector<int>> from_set(const MonomialSet& U) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(U.size()));
    for (const Monomial& u : U) rows.push_back(u.exponents());
    return rows;
}

py::dict check_report(const std::string& text) {
    const PdeFile file = parse_pde_file(text);
    const PdeSystem sys = to_solved_system(file);
    py::dict out;
    out["complete"] = is_complete_system(sys);
    if (!is_complete_system(sys)) return out;
    py::list conds;
    bool integrable = true;
    for (const IntegrabilityCondition& c : integrability_conditions(sys)) {
        py::dict item;
        item["unknown"] = file.unknown_names.at(static_cast<std::size_t>(c.unknown - 1));
        item["alpha"] = c.alpha.exponents();
        item["variable"] = c.variable;
        item["residual"] = print_expression(c.residual, file.var_names, file.unknown_names);
        item["trivial"] = c.trivial;
        if (!c.trivial) integrable = false;
        conds.append(std::move(item));
    }
    out["conditions"] = std::move(conds);
    out["integrable"] = integrable;
    return out;
}

py::dict canonicalize_report(const std::string& text) {
    const PdeFile file = parse_pde_file(text);
    const CanonicalizeOutcome outcome =
        canonicalize(file.n, file.m, file.order, raw_equations(file));
    py::dict out;
    if (std::holds_alternative<Incompatibility>(outcome.result)) {
        const auto& inc = std::get<Incompatibility>(outcome.result);
        out["status"] = "incompatible";
        out["witness"] =
            print_expression(inc.witness, file.var_names, file.unknown_names) + " = 0";
        return out;
    }
    const PdeSystem& sys = std::get<PdeSystem>(outcome.result);
    out["status"] = "canonical";
    py::list eqs;
    for (const PdeEquation& e : sys.equations)
        eqs.append(print_equation(e, file.var_names, file.unknown_names));
    out["equations"] = std::move(eqs);
    out["text"] = print_pde_file(sys, file.var_names, file.unknown_names);
    return out;
}

py::dict solve_report(const std::string& text, int bound) {
    const PdeFile file = parse_pde_file(text);
    const MonomialPdeSystem sys = to_monomial_system(file);
    py::dict out;
    try {
        const Polynomial series = solve_series_monomial(sys, file.initial, bound);
        out["status"] = "solved";
        out["series"] = print_polynomial(series, file.var_names);
    } catch (const CompatibilityFailure& failure) {
        out["status"] = "incompatible";
        out["lhs"] = print_polynomial(failure.condition().lhs, file.var_names);
        out["rhs"] = print_polynomial(failure.condition().rhs, file.var_names);
    }
    return out;
}

py::list template_report(const std::string& text) {
    const PdeFile file = parse_pde_file(text);
    const MonomialAnalysis analysis =
        compatibility_conditions_monomial(to_monomial_system(file));
    py::list out;
    for (const TemplateSlot& slot : initial_condition_template(analysis.completed)) {
        py::dict item;
        item["beta"] = slot.beta.exponents();
        item["mult"] = slot.cmult;
        out.append(std::move(item));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_pyjanet, m) {
    m.doc() = "Involutive division, monomial completion and linear PDE canonicalization";

    py::class_<Monomial>(m, "Monomial")
        .def(py::init<std::vector<int>>())
        .def_property_readonly("arity", &Monomial::arity)
        .def("degree", &Monomial::degree)
        .def("deg", &Monomial::deg, py::arg("i"))
        .def("exponents", &Monomial::exponents)
        .def("__eq__", [](const Monomial& a, const Monomial& b) { return a == b; })
        .def("__repr__", [](const Monomial& u) { return to_string(u); });

    py::class_<WeightOrder>(m, "WeightOrder")
        .def(py::init<int, int, std::vector<std::vector<int>>, std::vector<std::vector<int>>>(),
             py::arg("n"), py::arg("m"), py::arg("var_weights"), py::arg("unknown_weights"))
        .def_static("deglex", &WeightOrder::deglex, py::arg("n"), py::arg("m") = 1)
        .def("compare",
             [](const WeightOrder& ord, std::pair<int, std::vector<int>> a,
                std::pair<int, std::vector<int>> b) {
                 return ord.compare({a.first, Monomial(a.second)},
                                    {b.first, Monomial(b.second)});
             });

    m.def("cmp_deglex", [](const std::vector<int>& a, const std::vector<int>& b) {
        return compare_deglex(Monomial(a), Monomial(b));
    });
    m.def("is_multiplication_compatible", &is_multiplication_compatible, py::arg("order"),
          py::arg("bound"));

    m.def("mult_table", [](const std::vector<std::vector<int>>& rows) {
        const MonomialSet U = to_set(rows);
        const MultTable table = mult_table(U);
        py::list out;
        for (const Monomial& u : U) {
            py::dict row;
            row["monomial"] = u.exponents();
            row["mult"] = table.multiplicative(u);
            row["nonmult"] = table.non_multiplicative(u);
            out.append(std::move(row));
        }
        return out;
    });

    m.def("is_complete",
          [](const std::vector<std::vector<int>>& rows) { return is_complete(to_set(rows)); });

    m.def("complete", [](const std::vector<std::vector<int>>& rows) {
        const CompletionTrace trace = complete(to_set(rows));
        py::list steps;
        for (const CompletionStep& s : trace.steps)
            steps.append(py::make_tuple(s.added.exponents(), s.source.exponents(), s.variable));
        return py::make_tuple(from_set(trace.result), steps);
    });

    m.def("in_cone", [](const std::vector<std::vector<int>>& rows, const std::vector<int>& w) {
        return in_cone(to_set(rows), to_monomial(w));
    });
    m.def("in_involutive_cone",
          [](const std::vector<std::vector<int>>& rows, const std::vector<int>& w) {
              const MonomialSet U = to_set(rows);
              return in_involutive_cone(U, mult_table(U), to_monomial(w));
          });
    m.def("janet_divisor",
          [](const std::vector<std::vector<int>>& rows,
             const std::vector<int>& w) -> std::optional<std::vector<int>> {
              const MonomialSet U = to_set(rows);
              if (auto u = janet_divisor(U, mult_table(U), to_monomial(w)))
                  return u->exponents();
              return std::nullopt;
          });
    m.def("cone_inductive", [](const std::vector<std::vector<int>>& rows, int d) {
        return from_set(cone_inductive(to_set(rows), d));
    });

    m.def("complementary_set", [](const std::vector<std::vector<int>>& rows) {
        py::list out;
        const ComplementSet comp = complementary_set(to_set(rows));
        for (const ComplementEntry& e : comp.entries()) {
            py::dict item;
            item["monomial"] = e.monomial.exponents();
            item["level"] = e.level;
            item["mult"] = e.cmult;
            out.append(std::move(item));
        }
        return out;
    });
    m.def("locate", [](const std::vector<std::vector<int>>& rows, const std::vector<int>& w) {
        const LocateResult r = locate(to_set(rows), to_monomial(w));
        py::dict out;
        if (std::holds_alternative<InCone>(r)) {
            out["side"] = "cone";
            out["divisor"] = std::get<InCone>(r).divisor.exponents();
        } else {
            const ComplementEntry& e = std::get<InComplement>(r).entry;
            out["side"] = "complement";
            out["entry"] = e.monomial.exponents();
            out["mult"] = e.cmult;
        }
        return out;
    });
    m.def("hilbert_function", [](const std::vector<std::vector<int>>& rows, int d) {
        return hilbert_function(to_set(rows), d);
    });

    m.def("pde_check", &check_report, py::arg("text"));
    m.def("pde_canonicalize", &canonicalize_report, py::arg("text"));
    m.def("pde_solve_monomial", &solve_report, py::arg("text"), py::arg("bound") = 8);
    m.def("initial_condition_template", &template_report, py::arg("text"));

    m.def(
        "run_cli",
        [](const std::string& subcommand, const std::string& input, const std::string& format,
           int bound, std::uint64_t seed, int count, const std::string& order) {
            RunConfig config;
            config.subcommand = subcommand;
            config.input_path = input;
            config.format = format;
            config.bound = bound;
            config.seed = seed;
            config.count = count;
            config.order_override = order;
            std::ostringstream out, err;
            const int code = run(config, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("subcommand"), py::arg("input") = "", py::arg("format") = "text",
        py::arg("bound") = 8, py::arg("seed") = 0, py::arg("count") = 500,
        py::arg("order") = "");
}
