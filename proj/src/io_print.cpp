#include <algorithm>
#include <sstream>

#include "janet/io.hpp"

namespace janet {

std::vector<std::string> default_var_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::vector<std::string> default_unknown_names(int m) {
    std::vector<std::string> names;
    for (int r = 1; r <= m; ++r) names.push_back("phi" + std::to_string(r));
    return names;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& var_names) {
    if (m.is_identity()) return "1";
    std::string out;
    for (int i = m.arity(); i >= 1; --i) {
        const int e = m.deg(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += var_names.at(static_cast<std::size_t>(i - 1));
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

std::string to_string(const Monomial& m) {
    return to_string(m, default_var_names(m.arity()));
}

std::string print_monomial_set(const MonomialSet& U) {
    std::string out = "vars";
    for (const std::string& v : default_var_names(U.arity())) out += ' ' + v;
    out += ";\n";
    for (const Monomial& u : U) out += to_string(u) + '\n';
    return out;
}

std::string format_mult_table(const MultTable& table) {
    const MonomialSet& U = table.set();
    const int n = U.arity();
    const auto vars = default_var_names(n);
    std::vector<const Monomial*> rows;
    for (const Monomial& u : U) rows.push_back(&u);
    std::sort(rows.begin(), rows.end(),
              [](const Monomial* a, const Monomial* b) { return compare_deglex(*a, *b) > 0; });
    std::size_t width = 0;
    for (const Monomial* u : rows) width = std::max(width, to_string(*u).size());
    std::string out;
    for (const Monomial* u : rows) {
        std::string line = to_string(*u);
        line.resize(width, ' ');
        line += " |";
        for (int i = n; i >= 1; --i) {
            const std::string& name = vars[static_cast<std::size_t>(i - 1)];
            line += ' ';
            line += table.is_multiplicative(*u, i) ? name : std::string(name.size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
    }
    return out;
}

namespace {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string term_to_string(const Monomial& m, const Rational& c,
                           const std::vector<std::string>& var_names) {
    const Rational a = c < 0 ? -c : c;
    if (m.is_identity()) return rational_to_string(a);
    std::string out;
    if (a != 1) out = rational_to_string(a) + "*";
    return out + to_string(m, var_names);
}

}  // namespace

std::string print_polynomial(const Polynomial& p, const std::vector<std::string>& var_names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const bool negative = it->second < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += term_to_string(it->first, it->second, var_names);
    }
    return out;
}

std::string print_rational(const RationalFunction& f, const std::vector<std::string>& var_names) {
    if (f.is_polynomial()) return print_polynomial(f.numerator(), var_names);
    return "(" + print_polynomial(f.numerator(), var_names) + ")/(" +
           print_polynomial(f.denominator(), var_names) + ")";
}

std::string print_symbol(const DerivativeSymbol& d,
                         const std::vector<std::string>& unknown_names) {
    const std::string& name = unknown_names.at(static_cast<std::size_t>(d.unknown - 1));
    if (d.alpha.is_identity()) return name;
    std::string out = "D[";
    for (int i = 1; i <= d.alpha.arity(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(d.alpha.deg(i));
    }
    return out + "] " + name;
}

namespace {

// is the printed form a single factor that can prefix '*' without parens?
bool coefficient_is_plain(const RationalFunction& f) {
    if (!f.is_polynomial()) return false;
    const Polynomial& p = f.numerator();
    if (p.terms().size() != 1) return false;
    const Rational& c = p.terms().front().second;
    return boost::multiprecision::denominator(c) == 1;
}

std::string coefficient_prefix(const RationalFunction& f,
                               const std::vector<std::string>& var_names) {
    if (f.is_polynomial() && f.numerator().is_constant()) {
        const Rational c = f.numerator().constant_term();
        if (c == 1) return "";
        if (boost::multiprecision::denominator(c) == 1)
            return rational_to_string(c) + "*";
        return "(" + rational_to_string(c) + ")*";
    }
    if (coefficient_is_plain(f)) return print_rational(f, var_names) + "*";
    return "(" + print_rational(f, var_names) + ")*";
}

bool leading_negative(const RationalFunction& f) {
    return !f.is_zero() && f.numerator().leading().second < 0;
}

}  // namespace

std::string print_expression(const LinearExpression& e, const std::vector<std::string>& var_names,
                             const std::vector<std::string>& unknown_names) {
    if (e.is_zero()) return "0";
    std::string out;
    auto append = [&out](bool negative, const std::string& body) {
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += body;
    };
    for (const LinearTerm& t : e.terms) {
        const bool negative = leading_negative(t.coeff);
        const RationalFunction c = negative ? -t.coeff : t.coeff;
        append(negative, coefficient_prefix(c, var_names) + print_symbol(t.sym, unknown_names));
    }
    if (!e.constant.is_zero()) {
        if (e.constant.is_polynomial()) {
            const auto& terms = e.constant.numerator().terms();
            for (auto it = terms.rbegin(); it != terms.rend(); ++it)
                append(it->second < 0, term_to_string(it->first, it->second, var_names));
        } else {
            const bool negative = leading_negative(e.constant);
            const RationalFunction c = negative ? -e.constant : e.constant;
            append(negative, print_rational(c, var_names));
        }
    }
    return out;
}

std::string print_equation(const PdeEquation& e, const std::vector<std::string>& var_names,
                           const std::vector<std::string>& unknown_names) {
    return print_symbol(e.lead, unknown_names) + " = " +
           print_expression(e.rhs, var_names, unknown_names) + ";";
}

std::string print_pde_system(const PdeSystem& S, const std::vector<std::string>& var_names,
                             const std::vector<std::string>& unknown_names) {
    std::string out;
    for (const PdeEquation& e : S.equations)
        out += print_equation(e, var_names, unknown_names) + '\n';
    return out;
}

namespace {

std::string print_header(const std::vector<std::string>& var_names,
                         const std::vector<std::string>& unknown_names,
                         const WeightOrder& order) {
    std::string out = "vars";
    for (const std::string& v : var_names) out += ' ' + v;
    out += ";\nunknowns";
    for (const std::string& u : unknown_names) out += ' ' + u;
    out += ";\n";
    if (order.is_deglex()) {
        out += "order deglex;\n";
    } else {
        out += "order weight s=" + std::to_string(order.levels()) + ";\n";
        for (int k = 0; k < order.levels(); ++k) {
            out += "weights";
            for (int w : order.var_weights()[static_cast<std::size_t>(k)])
                out += ' ' + std::to_string(w);
            const auto& wrow = order.unknown_weights()[static_cast<std::size_t>(k)];
            if (std::any_of(wrow.begin(), wrow.end(), [](int w) { return w != 0; })) {
                out += " |";
                for (int w : wrow) out += ' ' + std::to_string(w);
            }
            out += ";\n";
        }
    }
    return out;
}

}  // namespace

std::string print_pde_file(const PdeSystem& S, const std::vector<std::string>& var_names,
                           const std::vector<std::string>& unknown_names) {
    return print_header(var_names, unknown_names, S.order) +
           print_pde_system(S, var_names, unknown_names);
}

std::string print_pde_file(const PdeFile& file) {
    std::string out = print_header(file.var_names, file.unknown_names, file.order);
    for (const FileEquation& fe : file.equations)
        out += print_expression(fe.lhs, file.var_names, file.unknown_names) + " = " +
               print_expression(fe.rhs, file.var_names, file.unknown_names) + ";\n";
    for (const auto& [beta, poly] : file.initial) {
        std::string idx = "[";
        for (int i = 1; i <= beta.arity(); ++i) {
            if (i > 1) idx += ',';
            idx += std::to_string(beta.deg(i));
        }
        out += "initial" + idx + "] = " + print_polynomial(poly, file.var_names) + ";\n";
    }
    return out;
}

}  // namespace janet
