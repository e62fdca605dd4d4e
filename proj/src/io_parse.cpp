#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "janet/io.hpp"

namespace janet {

namespace {

enum class TokKind { Ident, Number, Punct, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool at(const char* punct) const {
        return tok_.kind == TokKind::Punct && tok_.text == punct;
    }
    bool at_ident(const char* word) const {
        return tok_.kind == TokKind::Ident && tok_.text == word;
    }
    Token expect_punct(const char* punct) {
        if (!at(punct)) fail("expected '" + std::string(punct) + "'");
        return take();
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(tok_.line, tok_.column, message);
    }

private:
    void advance() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.column = col_;
        if (pos_ >= text_.size()) {
            tok_ = {TokKind::End, "", line_, col_};
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                num += text_[pos_++];
                ++col_;
            }
            tok_ = {TokKind::Number, num, tok_.line, tok_.column};
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                id += text_[pos_++];
                ++col_;
            }
            tok_ = {TokKind::Ident, id, tok_.line, tok_.column};
        } else {
            ++pos_;
            ++col_;
            tok_ = {TokKind::Punct, std::string(1, c), tok_.line, tok_.column};
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

struct Names {
    int n = 0;
    int m = 0;
    std::vector<std::string> vars;
    std::vector<std::string> unknowns;

    int var_index(const std::string& name) const {
        auto it = std::find(vars.begin(), vars.end(), name);
        return it == vars.end() ? 0 : static_cast<int>(it - vars.begin()) + 1;
    }
    int unknown_index(const std::string& name) const {
        auto it = std::find(unknowns.begin(), unknowns.end(), name);
        return it == unknowns.end() ? 0 : static_cast<int>(it - unknowns.begin()) + 1;
    }
};

Monomial parse_bracket_index(Lexer& lex, int arity) {
    lex.expect_punct("[");
    std::vector<int> exps;
    for (;;) {
        const Token t = lex.take();
        if (t.kind != TokKind::Number)
            throw ParseError(t.line, t.column, "expected a non-negative integer exponent");
        exps.push_back(std::stoi(t.text));
        if (lex.at(",")) {
            lex.take();
            continue;
        }
        break;
    }
    lex.expect_punct("]");
    if (arity > 0 && static_cast<int>(exps.size()) != arity) {
        throw ParseError(lex.peek().line, lex.peek().column,
                         "multi-index has " + std::to_string(exps.size()) +
                             " entries, expected " + std::to_string(arity));
    }
    return Monomial(std::move(exps));
}

// Linear-expression evaluator.  Values are linear combinations of derivative
// symbols over rational functions; products must stay linear.
class ExprParser {
public:
    ExprParser(Lexer& lex, const Names& names) : lex_(lex), names_(names) {}

    LinearExpression parse() { return parse_sum(); }

private:
    LinearExpression parse_sum() {
        LinearExpression acc = parse_product();
        const WeightOrder scratch = WeightOrder::deglex(names_.n, std::max(1, names_.m));
        while (lex_.at("+") || lex_.at("-")) {
            const bool minus = lex_.take().text == "-";
            LinearExpression next = parse_product();
            if (minus)
                next = expr_scale(next, RationalFunction::constant(names_.n, -1), scratch);
            acc = expr_add(acc, next, scratch);
        }
        return acc;
    }

    LinearExpression parse_product() {
        LinearExpression acc = parse_factor();
        const WeightOrder scratch = WeightOrder::deglex(names_.n, std::max(1, names_.m));
        for (;;) {
            if (lex_.at("*")) {
                const Token op = lex_.take();
                LinearExpression rhs = parse_factor();
                if (!acc.terms.empty() && !rhs.terms.empty())
                    throw ParseError(op.line, op.column, "product of two derivative terms");
                if (acc.terms.empty()) std::swap(acc, rhs);
                acc = expr_scale(acc, rhs.constant, scratch);
            } else if (lex_.at("/")) {
                const Token op = lex_.take();
                LinearExpression rhs = parse_factor();
                if (!rhs.terms.empty())
                    throw ParseError(op.line, op.column, "division by a derivative term");
                if (rhs.constant.is_zero())
                    throw ParseError(op.line, op.column, "division by zero");
                acc = expr_scale(acc, RationalFunction::constant(names_.n, 1) / rhs.constant,
                                 scratch);
            } else {
                break;
            }
        }
        return acc;
    }

    LinearExpression parse_factor() {
        LinearExpression base = parse_unary();
        if (lex_.at("^")) {
            const Token op = lex_.take();
            const Token e = lex_.take();
            if (e.kind != TokKind::Number)
                throw ParseError(e.line, e.column, "expected an integer exponent");
            const int k = std::stoi(e.text);
            if (!base.terms.empty()) {
                if (k == 1) return base;
                throw ParseError(op.line, op.column, "power of a derivative term");
            }
            RationalFunction pow = RationalFunction::constant(names_.n, 1);
            for (int i = 0; i < k; ++i) pow = pow * base.constant;
            LinearExpression out(names_.n);
            out.constant = pow;
            return out;
        }
        return base;
    }

    LinearExpression parse_unary() {
        if (lex_.at("-")) {
            lex_.take();
            const WeightOrder scratch = WeightOrder::deglex(names_.n, std::max(1, names_.m));
            return expr_scale(parse_unary(), RationalFunction::constant(names_.n, -1), scratch);
        }
        if (lex_.at("+")) {
            lex_.take();
            return parse_unary();
        }
        return parse_primary();
    }

    LinearExpression parse_primary() {
        const Token t = lex_.peek();
        LinearExpression out(names_.n);
        if (lex_.at("(")) {
            lex_.take();
            out = parse_sum();
            lex_.expect_punct(")");
            return out;
        }
        if (t.kind == TokKind::Number) {
            lex_.take();
            out.constant = RationalFunction::constant(names_.n, Rational(Integer(t.text)));
            return out;
        }
        if (t.kind == TokKind::Ident) {
            lex_.take();
            if (t.text == "D") {
                const Monomial alpha = parse_bracket_index(lex_, names_.n);
                const Token name = lex_.take();
                const int r = name.kind == TokKind::Ident ? names_.unknown_index(name.text) : 0;
                if (r == 0)
                    throw ParseError(name.line, name.column, "expected an unknown function name");
                out.terms.push_back({RationalFunction::constant(names_.n, 1), {r, alpha}});
                return out;
            }
            if (const int i = names_.var_index(t.text)) {
                out.constant = RationalFunction(Polynomial::variable(names_.n, i));
                return out;
            }
            if (const int r = names_.unknown_index(t.text)) {
                out.terms.push_back(
                    {RationalFunction::constant(names_.n, 1), {r, Monomial::identity(names_.n)}});
                return out;
            }
            throw ParseError(t.line, t.column, "unknown identifier '" + t.text + "'");
        }
        throw ParseError(t.line, t.column, "expected an expression");
    }

    Lexer& lex_;
    const Names& names_;
};

std::vector<std::string> parse_name_list(Lexer& lex) {
    std::vector<std::string> names;
    while (lex.peek().kind == TokKind::Ident) names.push_back(lex.take().text);
    if (names.empty()) lex.fail("expected at least one name");
    lex.expect_punct(";");
    return names;
}

}  // namespace

Monomial parse_monomial_text(const std::string& text, int arity) {
    Lexer lex(text);
    if (lex.at("[")) {
        Monomial m = parse_bracket_index(lex, arity);
        if (lex.peek().kind != TokKind::End) lex.fail("trailing input after monomial");
        return m;
    }
    std::vector<int> exps(static_cast<std::size_t>(arity), 0);
    if (lex.peek().kind == TokKind::Number && lex.peek().text == "1") {
        lex.take();
        if (lex.peek().kind != TokKind::End) lex.fail("trailing input after monomial");
        return Monomial(std::move(exps));
    }
    for (;;) {
        const Token t = lex.take();
        if (t.kind != TokKind::Ident || t.text.size() < 2 || t.text[0] != 'x')
            throw ParseError(t.line, t.column, "expected a variable like x2");
        int idx = 0;
        for (std::size_t k = 1; k < t.text.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(t.text[k])))
                throw ParseError(t.line, t.column, "expected a variable like x2");
            idx = idx * 10 + (t.text[k] - '0');
        }
        if (idx < 1 || idx > arity)
            throw ParseError(t.line, t.column, "variable index out of range");
        int e = 1;
        if (lex.at("^")) {
            lex.take();
            const Token p = lex.take();
            if (p.kind != TokKind::Number)
                throw ParseError(p.line, p.column, "expected an integer exponent");
            e = std::stoi(p.text);
        }
        exps[static_cast<std::size_t>(idx - 1)] += e;
        if (lex.at("*")) {
            lex.take();
            continue;
        }
        break;
    }
    if (lex.peek().kind != TokKind::End) lex.fail("trailing input after monomial");
    return Monomial(std::move(exps));
}

MonomialSet parse_monomial_set(const std::string& text) {
    std::vector<std::pair<std::string, int>> lines;
    {
        std::istringstream in(text);
        std::string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            const auto begin = line.find_first_not_of(" \t\r");
            if (begin == std::string::npos) continue;
            const auto end = line.find_last_not_of(" \t\r");
            lines.emplace_back(line.substr(begin, end - begin + 1), number);
        }
    }
    if (lines.empty()) throw ParseError(1, 1, "empty monomial set input");

    int arity = 0;
    std::size_t first = 0;
    if (lines.front().first.rfind("vars", 0) == 0) {
        Lexer lex(lines.front().first);
        lex.take();  // vars
        int count = 0;
        while (lex.peek().kind == TokKind::Ident) {
            lex.take();
            ++count;
        }
        if (lex.at(";")) lex.take();
        if (count == 0) throw ParseError(lines.front().second, 1, "empty vars header");
        arity = count;
        first = 1;
    } else {
        // infer the arity from record lengths and the highest variable index
        for (std::size_t k = first; k < lines.size(); ++k) {
            const std::string& body = lines[k].first;
            if (body.front() == '[') {
                arity = std::max(arity,
                                 static_cast<int>(std::count(body.begin(), body.end(), ',')) + 1);
            } else {
                Lexer lex(body);
                while (lex.peek().kind != TokKind::End) {
                    const Token t = lex.take();
                    if (t.kind == TokKind::Ident && t.text.size() >= 2 && t.text[0] == 'x') {
                        int idx = 0;
                        bool ok = true;
                        for (std::size_t i = 1; i < t.text.size(); ++i) {
                            if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) ok = false;
                            else idx = idx * 10 + (t.text[i] - '0');
                        }
                        if (ok) arity = std::max(arity, idx);
                    }
                }
            }
        }
        if (arity == 0) throw ParseError(lines.front().second, 1, "cannot infer the arity");
    }

    MonomialSet out(arity);
    for (std::size_t k = first; k < lines.size(); ++k) {
        try {
            out.insert(parse_monomial_text(lines[k].first, arity));
        } catch (const ParseError& e) {
            throw ParseError(lines[k].second, e.column(), e.message());
        }
    }
    if (out.empty()) throw ParseError(lines.back().second, 1, "empty monomial set input");
    return out;
}

namespace {

WeightOrder parse_order_block(Lexer& lex, int n, int m) {
    // caller consumed the 'order' keyword
    if (lex.at_ident("deglex")) {
        lex.take();
        lex.expect_punct(";");
        return WeightOrder::deglex(n, m);
    }
    if (!lex.at_ident("weight")) lex.fail("expected 'deglex' or 'weight'");
    lex.take();
    const Token s_name = lex.take();
    if (!(s_name.kind == TokKind::Ident && s_name.text == "s"))
        throw ParseError(s_name.line, s_name.column, "expected s=<levels>");
    lex.expect_punct("=");
    const Token s_val = lex.take();
    if (s_val.kind != TokKind::Number)
        throw ParseError(s_val.line, s_val.column, "expected s=<levels>");
    const int s = std::stoi(s_val.text);
    lex.expect_punct(";");
    std::vector<std::vector<int>> cvar;
    std::vector<std::vector<int>> cunk;
    for (int level = 0; level < s; ++level) {
        if (!lex.at_ident("weights")) lex.fail("expected a 'weights' row");
        lex.take();
        std::vector<int> row;
        while (lex.peek().kind == TokKind::Number) row.push_back(std::stoi(lex.take().text));
        if (static_cast<int>(row.size()) != n)
            lex.fail("expected " + std::to_string(n) + " variable weights");
        std::vector<int> wrow(static_cast<std::size_t>(m), 0);
        if (lex.at("|")) {
            lex.take();
            std::vector<int> given;
            while (lex.peek().kind == TokKind::Number) given.push_back(std::stoi(lex.take().text));
            if (static_cast<int>(given.size()) != m)
                lex.fail("expected " + std::to_string(m) + " unknown weights");
            wrow = std::move(given);
        }
        lex.expect_punct(";");
        cvar.push_back(std::move(row));
        cunk.push_back(std::move(wrow));
    }
    return WeightOrder(n, m, std::move(cvar), std::move(cunk));
}

}  // namespace

WeightOrder parse_order_spec(const std::string& text, int n, int m) {
    Lexer lex(text);
    if (lex.at_ident("order")) lex.take();
    if (lex.at_ident("deglex")) {
        lex.take();
        if (lex.at(";")) lex.take();
        return WeightOrder::deglex(n, m);
    }
    return parse_order_block(lex, n, m);
}

PdeFile parse_pde_file(const std::string& text) {
    Lexer lex(text);
    PdeFile file;
    Names names;
    bool have_vars = false, have_unknowns = false, have_order = false;

    while (lex.peek().kind != TokKind::End) {
        const Token head = lex.peek();
        if (lex.at_ident("vars")) {
            lex.take();
            if (have_vars) throw ParseError(head.line, head.column, "duplicate vars header");
            names.vars = parse_name_list(lex);
            names.n = static_cast<int>(names.vars.size());
            have_vars = true;
            continue;
        }
        if (lex.at_ident("unknowns")) {
            lex.take();
            if (!have_vars)
                throw ParseError(head.line, head.column, "vars must come before unknowns");
            if (have_unknowns)
                throw ParseError(head.line, head.column, "duplicate unknowns header");
            names.unknowns = parse_name_list(lex);
            names.m = static_cast<int>(names.unknowns.size());
            have_unknowns = true;
            continue;
        }
        if (lex.at_ident("order")) {
            lex.take();
            if (!have_vars || !have_unknowns)
                throw ParseError(head.line, head.column,
                                 "order must come after vars and unknowns");
            file.order = parse_order_block(lex, names.n, names.m);
            have_order = true;
            continue;
        }
        if (lex.at_ident("initial")) {
            lex.take();
            if (!have_vars || !have_unknowns)
                throw ParseError(head.line, head.column, "initial data before the header");
            const Monomial beta = parse_bracket_index(lex, names.n);
            lex.expect_punct("=");
            ExprParser parser(lex, names);
            LinearExpression value = parser.parse();
            lex.expect_punct(";");
            if (!value.terms.empty())
                throw ParseError(head.line, head.column,
                                 "initial data must not contain derivatives");
            if (!value.constant.is_polynomial())
                throw ParseError(head.line, head.column, "initial data must be polynomial");
            file.initial.emplace_back(beta, value.constant.numerator());
            file.has_initial = true;
            continue;
        }
        if (!have_vars || !have_unknowns)
            throw ParseError(head.line, head.column,
                             "expected the vars and unknowns headers first");
        ExprParser parser(lex, names);
        LinearExpression lhs = parser.parse();
        lex.expect_punct("=");
        LinearExpression rhs = parser.parse();
        lex.expect_punct(";");
        file.equations.push_back({std::move(lhs), std::move(rhs), head.line});
    }

    if (!have_vars || !have_unknowns) throw ParseError(1, 1, "missing vars/unknowns header");
    file.n = names.n;
    file.m = names.m;
    file.var_names = names.vars;
    file.unknown_names = names.unknowns;
    if (!have_order) file.order = WeightOrder::deglex(file.n, file.m);
    return file;
}

PdeSystem to_solved_system(const PdeFile& file) {
    std::vector<PdeEquation> equations;
    for (const FileEquation& fe : file.equations) {
        if (fe.lhs.terms.size() != 1 || !fe.lhs.constant.is_zero())
            throw ParseError(fe.line, 1,
                             "equation is not in solved form (single derivative on the left)");
        const LinearTerm& lead = fe.lhs.terms.front();
        if (!(lead.coeff == RationalFunction::constant(file.n, 1)))
            throw ParseError(fe.line, 1, "lead coefficient must be 1 in solved form");
        for (const LinearTerm& t : fe.rhs.terms) {
            if (file.order.compare(t.sym, lead.sym) >= 0)
                throw ParseError(fe.line, 1,
                                 "rhs symbol not anterior to lead: " +
                                     print_symbol(t.sym, file.unknown_names) + " vs " +
                                     print_symbol(lead.sym, file.unknown_names));
        }
        equations.push_back({lead.sym, fe.rhs});
    }
    try {
        return make_pde_system(file.n, file.m, file.order, std::move(equations));
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, e.what());
    }
}

std::vector<LinearExpression> raw_equations(const PdeFile& file) {
    std::vector<LinearExpression> out;
    const WeightOrder scratch = WeightOrder::deglex(file.n, file.m);
    for (const FileEquation& fe : file.equations)
        out.push_back(expr_sub(fe.lhs, fe.rhs, scratch));
    return out;
}

MonomialPdeSystem to_monomial_system(const PdeFile& file) {
    if (file.m != 1)
        throw ParseError(1, 1, "a monomial PDE system has exactly one unknown");
    std::vector<std::pair<Monomial, Polynomial>> equations;
    for (const FileEquation& fe : file.equations) {
        if (fe.lhs.terms.size() != 1 || !fe.lhs.constant.is_zero() ||
            !(fe.lhs.terms.front().coeff == RationalFunction::constant(file.n, 1)))
            throw ParseError(fe.line, 1, "expected D[...] phi = f(x);");
        if (!fe.rhs.terms.empty())
            throw ParseError(fe.line, 1, "monomial system right-hand sides must be derivative-free");
        if (!fe.rhs.constant.is_polynomial())
            throw ParseError(fe.line, 1, "monomial system right-hand sides must be polynomial");
        equations.emplace_back(fe.lhs.terms.front().sym.alpha, fe.rhs.constant.numerator());
    }
    try {
        return make_monomial_system(file.n, std::move(equations));
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, e.what());
    }
}

}  // namespace janet
