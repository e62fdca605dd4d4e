#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "janet/cli.hpp"
#include "janet/io.hpp"

namespace janet {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool file_exists(const std::string& path) {
    return static_cast<bool>(std::ifstream(path));
}

json table_json(const MultTable& table) {
    json rows = json::array();
    std::vector<const Monomial*> members;
    for (const Monomial& u : table.set()) members.push_back(&u);
    std::sort(members.begin(), members.end(),
              [](const Monomial* a, const Monomial* b) { return compare_deglex(*a, *b) > 0; });
    const auto vars = default_var_names(table.set().arity());
    for (const Monomial* u : members) {
        json row;
        row["monomial"] = to_string(*u);
        json mult = json::array(), nonmult = json::array();
        for (int i = table.set().arity(); i >= 1; --i)
            (table.is_multiplicative(*u, i) ? mult : nonmult)
                .push_back(vars[static_cast<std::size_t>(i - 1)]);
        row["mult"] = std::move(mult);
        row["nonmult"] = std::move(nonmult);
        rows.push_back(std::move(row));
    }
    return rows;
}

// bounded deterministic draw, independent of the standard distributions
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

MonomialSet random_set(std::mt19937_64& rng, int n, int max_size, int max_deg) {
    const int count = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_size)));
    MonomialSet out(n);
    while (out.size() < count) {
        std::vector<int> exps(static_cast<std::size_t>(n));
        int total = 0;
        for (int i = 0; i < n; ++i) {
            exps[static_cast<std::size_t>(i)] =
                static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_deg + 1)));
            total += exps[static_cast<std::size_t>(i)];
        }
        if (total > max_deg || total == 0) continue;
        out.insert(Monomial(std::move(exps)));
    }
    return out;
}

int run_complete(const MonomialSet& U, const std::string& format, std::ostream& out) {
    const bool records = format == "records";
    MonomialSet current = U;
    const CompletionTrace trace = complete(U);

    int stage = 0;
    auto emit_table = [&](const MonomialSet& set) {
        const MultTable table = mult_table(set);
        if (records) {
            json rec;
            rec["stage"] = stage;
            rec["table"] = table_json(table);
            out << rec.dump() << '\n';
        } else {
            out << format_mult_table(table);
        }
        ++stage;
    };

    emit_table(current);
    for (const CompletionStep& step : trace.steps) {
        if (records) {
            json rec;
            rec["add"] = to_string(step.added);
            rec["source"] = to_string(step.source);
            rec["variable"] = "x" + std::to_string(step.variable);
            out << rec.dump() << '\n';
        } else {
            out << "+ " << to_string(step.added) << "  (from " << to_string(step.source)
                << " * x" << step.variable << ")\n";
        }
        current.insert(step.added);
        emit_table(current);
    }
    if (records) {
        json rec;
        rec["result"] = json::array();
        for (const Monomial& u : trace.result) rec["result"].push_back(to_string(u));
        out << rec.dump() << '\n';
    } else {
        out << "complete set (" << trace.result.size() << " monomials):\n";
        for (const Monomial& u : trace.result) out << to_string(u) << '\n';
    }
    return 0;
}

int run_mult_table(const MonomialSet& U, const std::string& format, std::ostream& out) {
    const MultTable table = mult_table(U);
    if (format == "records") {
        for (const json& row : table_json(table)) out << row.dump() << '\n';
    } else {
        out << format_mult_table(table);
    }
    return 0;
}

int run_complement(const MonomialSet& U, const std::string& format, std::ostream& out) {
    const ComplementSet comp(U);
    const auto vars = default_var_names(U.arity());
    for (const ComplementEntry& entry : comp.entries()) {
        if (format == "records") {
            json rec;
            rec["monomial"] = to_string(entry.monomial);
            rec["level"] = entry.level;
            rec["mult"] = json::array();
            for (int i : entry.cmult) rec["mult"].push_back(vars[static_cast<std::size_t>(i - 1)]);
            out << rec.dump() << '\n';
        } else {
            out << to_string(entry.monomial) << " : level=" << entry.level << " : mult={";
            for (std::size_t k = 0; k < entry.cmult.size(); ++k) {
                if (k) out << ',';
                out << vars[static_cast<std::size_t>(entry.cmult[k] - 1)];
            }
            out << "}\n";
        }
    }
    return 0;
}

int run_hilbert(const MonomialSet& U, int bound, const std::string& format, std::ostream& out) {
    for (int d = 0; d <= bound; ++d) {
        const std::uint64_t count = hilbert_function(U, d);
        if (format == "records") {
            json rec;
            rec["d"] = d;
            rec["count"] = count;
            out << rec.dump() << '\n';
        } else {
            out << d << ", " << count << '\n';
        }
    }
    return 0;
}

struct PartitionViolation {
    MonomialSet set;
    Monomial witness;
    std::string kind;
};

// every monomial up to the bound must lie on exactly one side, and on the
// complement side under exactly one entry
std::optional<PartitionViolation> check_partition(const MonomialSet& U, int extra) {
    const ComplementSet comp(U);
    const int bound = U.max_degree() + extra;
    for (const Monomial& w : enumerate_up_to(U.arity(), bound)) {
        const bool cone = in_cone(U, w);
        const std::size_t covers = comp.covering(w).size();
        if (cone && covers != 0) return PartitionViolation{U, w, "both sides"};
        if (!cone && covers == 0) return PartitionViolation{U, w, "neither side"};
        if (!cone && covers > 1) return PartitionViolation{U, w, "double cover"};
    }
    return std::nullopt;
}

int run_partition_check(const std::optional<MonomialSet>& input, std::uint64_t seed, int count,
                        const std::string& format, std::ostream& out) {
    std::optional<PartitionViolation> violation;
    int checked = 0;
    if (input) {
        violation = check_partition(*input, 6);
        checked = 1;
    } else {
        std::mt19937_64 rng(seed);
        for (int k = 0; k < count && !violation; ++k) {
            const int n = 2 + static_cast<int>(draw(rng, 3));
            violation = check_partition(random_set(rng, n, 8, 5), 6);
            ++checked;
        }
    }
    if (format == "records") {
        json rec;
        rec["checked"] = checked;
        rec["pass"] = !violation.has_value();
        if (violation) {
            rec["witness"] = to_string(violation->witness);
            rec["kind"] = violation->kind;
            rec["set"] = json::array();
            for (const Monomial& u : violation->set) rec["set"].push_back(to_string(u));
        }
        out << rec.dump() << '\n';
    } else if (violation) {
        out << "FAIL partition: " << to_string(violation->witness) << " (" << violation->kind
            << ") for set:\n";
        for (const Monomial& u : violation->set) out << "  " << to_string(u) << '\n';
    } else {
        out << "PASS partition: " << checked << " set(s), 0 violations\n";
    }
    return violation ? 1 : 0;
}

std::string residual_string(const LinearExpression& residual, const PdeFile& file) {
    return print_expression(residual, file.var_names, file.unknown_names);
}

std::string index_string(const Monomial& alpha) {
    std::string out = "[";
    for (int i = 1; i <= alpha.arity(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(alpha.deg(i));
    }
    return out + "]";
}

int run_pde_check(const PdeFile& file, const std::string& format, std::ostream& out) {
    const bool records = format == "records";
    const PdeSystem sys = to_solved_system(file);

    bool complete_all = true;
    for (int r = 1; r <= sys.m; ++r) {
        const MonomialSet leads = leading_monomials(sys, r);
        const bool ok = leads.empty() || is_complete(leads);
        if (!ok) complete_all = false;
        if (records) {
            json rec;
            rec["unknown"] = file.unknown_names[static_cast<std::size_t>(r - 1)];
            rec["complete"] = ok;
            out << rec.dump() << '\n';
        } else {
            out << "unknown " << file.unknown_names[static_cast<std::size_t>(r - 1)]
                << ": leads " << (ok ? "complete" : "not complete") << '\n';
        }
    }
    if (!complete_all) {
        if (!records) out << "verdict: not complete\n";
        return 1;
    }

    bool integrable = true;
    for (const IntegrabilityCondition& c : integrability_conditions(sys)) {
        if (!c.trivial) integrable = false;
        if (records) {
            json rec;
            rec["unknown"] = file.unknown_names[static_cast<std::size_t>(c.unknown - 1)];
            rec["alpha"] = index_string(c.alpha);
            rec["variable"] = "x" + std::to_string(c.variable);
            rec["residual"] = residual_string(c.residual, file);
            rec["trivial"] = c.trivial;
            out << rec.dump() << '\n';
        } else {
            out << "source=(" << file.unknown_names[static_cast<std::size_t>(c.unknown - 1)]
                << ", " << index_string(c.alpha) << ", x" << c.variable
                << ") residual= " << residual_string(c.residual, file) << '\n';
        }
    }
    if (records) {
        json rec;
        rec["verdict"] = integrable ? "completely integrable" : "not completely integrable";
        out << rec.dump() << '\n';
    } else {
        out << "verdict: " << (integrable ? "completely integrable" : "not completely integrable")
            << '\n';
    }
    return integrable ? 0 : 1;
}

int run_pde_canonicalize(const PdeFile& file, const std::string& format, std::ostream& out) {
    const CanonicalizeOutcome outcome =
        canonicalize(file.n, file.m, file.order, raw_equations(file));
    const bool records = format == "records";
    if (std::holds_alternative<Incompatibility>(outcome.result)) {
        const auto& inc = std::get<Incompatibility>(outcome.result);
        if (records) {
            json rec;
            rec["status"] = "incompatible";
            rec["witness"] = residual_string(inc.witness, file) + " = 0";
            out << rec.dump() << '\n';
        } else {
            out << "incompatible: " << residual_string(inc.witness, file) << " = 0\n";
        }
        return 1;
    }
    const PdeSystem& sys = std::get<PdeSystem>(outcome.result);
    if (records) {
        json rec;
        rec["status"] = "canonical";
        rec["vars"] = file.var_names;
        rec["unknowns"] = file.unknown_names;
        rec["equations"] = json::array();
        for (const PdeEquation& e : sys.equations)
            rec["equations"].push_back(print_equation(e, file.var_names, file.unknown_names));
        out << rec.dump() << '\n';
    } else {
        out << print_pde_file(sys, file.var_names, file.unknown_names);
    }
    return 0;
}

int run_pde_solve_monomial(const PdeFile& file, int bound, const std::string& format,
                           std::ostream& out) {
    const bool records = format == "records";
    const MonomialPdeSystem sys = to_monomial_system(file);
    const MonomialAnalysis analysis = compatibility_conditions_monomial(sys);

    if (!file.has_initial) {
        // no data given: report the initial-condition template of the
        // completed system
        for (const TemplateSlot& slot : initial_condition_template(analysis.completed)) {
            if (records) {
                json rec;
                rec["slot"] = index_string(slot.beta);
                rec["mult"] = json::array();
                for (int i : slot.cmult) rec["mult"].push_back("x" + std::to_string(i));
                out << rec.dump() << '\n';
            } else {
                out << "slot " << index_string(slot.beta) << " : mult={";
                for (std::size_t k = 0; k < slot.cmult.size(); ++k) {
                    if (k) out << ',';
                    out << 'x' << slot.cmult[k];
                }
                out << "}\n";
            }
        }
        return 0;
    }

    try {
        const Polynomial series = solve_series_monomial(sys, file.initial, bound);
        if (records) {
            json rec;
            rec["series"] = print_polynomial(series, file.var_names);
            out << rec.dump() << '\n';
        } else {
            out << print_polynomial(series, file.var_names) << '\n';
        }
        return 0;
    } catch (const CompatibilityFailure& failure) {
        const MonomialCompatibility& c = failure.condition();
        if (records) {
            json rec;
            rec["status"] = "incompatible";
            rec["alpha"] = index_string(c.alpha);
            rec["variable"] = "x" + std::to_string(c.variable);
            rec["lhs"] = print_polynomial(c.lhs, file.var_names);
            rec["rhs"] = print_polynomial(c.rhs, file.var_names);
            out << rec.dump() << '\n';
        } else {
            out << "incompatible: d/dx" << c.variable << " f" << index_string(c.alpha) << " = "
                << print_polynomial(c.lhs, file.var_names) << " but D" << index_string(c.gamma)
                << " f" << index_string(c.beta) << " = "
                << print_polynomial(c.rhs, file.var_names) << '\n';
        }
        return 1;
    }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.subcommand == "partition-check") {
            std::optional<MonomialSet> input;
            if (!config.input_path.empty())
                input = parse_monomial_set(read_file(config.input_path));
            return run_partition_check(input, config.seed, config.count, config.format, out);
        }
        if (config.input_path.empty()) {
            err << "error: missing input file\n";
            return 2;
        }
        const std::string text = read_file(config.input_path);

        if (config.subcommand == "complete" || config.subcommand == "mult-table" ||
            config.subcommand == "complement" || config.subcommand == "hilbert") {
            const MonomialSet U = parse_monomial_set(text);
            if (config.subcommand == "complete") return run_complete(U, config.format, out);
            if (config.subcommand == "mult-table") return run_mult_table(U, config.format, out);
            if (config.subcommand == "complement") return run_complement(U, config.format, out);
            return run_hilbert(U, config.bound, config.format, out);
        }

        PdeFile file = parse_pde_file(text);
        if (!config.order_override.empty()) {
            const std::string spec = file_exists(config.order_override)
                                         ? read_file(config.order_override)
                                         : config.order_override;
            file.order = parse_order_spec(spec, file.n, file.m);
        }
        if (config.subcommand == "pde-check") return run_pde_check(file, config.format, out);
        if (config.subcommand == "pde-canonicalize")
            return run_pde_canonicalize(file, config.format, out);
        if (config.subcommand == "pde-solve-monomial")
            return run_pde_solve_monomial(file, config.bound, config.format, out);

        err << "error: unknown subcommand '" << config.subcommand << "'\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace janet
