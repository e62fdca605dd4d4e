#pragma once

#include <string>
#include <vector>

#include "janet/complement.hpp"
#include "janet/janet_division.hpp"
#include "janet/pde.hpp"

namespace janet {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column),
          message_(message) {}
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

/// ---- printing ----

/// Textual monomial form, highest variable first: x3^3*x1^2; identity is "1".
std::string to_string(const Monomial& m);
std::string to_string(const Monomial& m, const std::vector<std::string>& var_names);

std::string print_monomial_set(const MonomialSet& U);

/// Aligned table, one row per member in descending deglex order, one column
/// per variable from x_n down to x_1.
std::string format_mult_table(const MultTable& table);

std::string print_polynomial(const Polynomial& p, const std::vector<std::string>& var_names);
std::string print_rational(const RationalFunction& f, const std::vector<std::string>& var_names);
std::string print_symbol(const DerivativeSymbol& d, const std::vector<std::string>& unknown_names);
std::string print_expression(const LinearExpression& e, const std::vector<std::string>& var_names,
                             const std::vector<std::string>& unknown_names);
std::string print_equation(const PdeEquation& e, const std::vector<std::string>& var_names,
                           const std::vector<std::string>& unknown_names);
std::string print_pde_system(const PdeSystem& S, const std::vector<std::string>& var_names,
                             const std::vector<std::string>& unknown_names);

std::vector<std::string> default_var_names(int n);
std::vector<std::string> default_unknown_names(int m);

/// ---- parsing ----

/// One monomial per line, textual or record form; an optional leading
/// "vars x1 ... xn;" pins the arity.
MonomialSet parse_monomial_set(const std::string& text);

Monomial parse_monomial_text(const std::string& text, int arity);

struct FileEquation {
    LinearExpression lhs;
    LinearExpression rhs;
    int line = 0;
};

/// A parsed PDE input file: header, order, equations and optional initial
/// data lines.
struct PdeFile {
    int n = 1;
    int m = 1;
    std::vector<std::string> var_names;
    std::vector<std::string> unknown_names;
    WeightOrder order = WeightOrder::deglex(1, 1);
    std::vector<FileEquation> equations;
    InitialData initial;
    bool has_initial = false;
};

PdeFile parse_pde_file(const std::string& text);

/// Order specification alone ("order deglex;" or "order weight s=..; weights ..;"),
/// for the --order override.
WeightOrder parse_order_spec(const std::string& text, int n, int m);

/// Equations must already be in solved form: a single unit-coefficient
/// derivative on the left, strictly anterior symbols on the right.
PdeSystem to_solved_system(const PdeFile& file);

/// lhs - rhs of every equation, for canonicalization.
std::vector<LinearExpression> raw_equations(const PdeFile& file);

/// Single unknown, symbol-free polynomial right-hand sides.
MonomialPdeSystem to_monomial_system(const PdeFile& file);

std::string print_pde_file(const PdeSystem& S, const std::vector<std::string>& var_names,
                           const std::vector<std::string>& unknown_names);

/// Prints a parsed file back in the input grammar (header, order, equations
/// as given, initial data lines); parse(print(parse(t))) == parse(t).
std::string print_pde_file(const PdeFile& file);

}  // namespace janet
