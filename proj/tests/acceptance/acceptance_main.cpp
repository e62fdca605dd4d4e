// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// non-zero exit if anything fails.  Expected values come from the worked
// completion example and from independent brute-force oracles.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "janet/cli.hpp"
#include "janet/io.hpp"
#include "oracles.hpp"

using namespace janet;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::string g_detail;

#define ACCEPT(cond)                                                      \
    do {                                                                  \
        if (!(cond)) {                                                    \
            g_detail += std::string("    violated: ") + #cond + "\n";     \
            return false;                                                 \
        }                                                                 \
    } while (0)

void report(int number, const char* title, bool ok, double seconds) {
    std::printf("%s  %2d  %-58s (%.2fs)\n", ok ? "PASS" : "FAIL", number, title, seconds);
    if (!ok) {
        std::fputs(g_detail.c_str(), stdout);
        ++g_failures;
    }
    g_detail.clear();
}

template <typename F>
void criterion(int number, const char* title, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        g_detail += std::string("    exception: ") + e.what() + "\n";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, title, ok, seconds);
}

MonomialSet example_set() {
    return parse_monomial_set("x3*x2^2\nx3^3*x1^2\n");
}

// 1. the worked completion: steps, final set, and the three printed tables
bool worked_example_completion() {
    const auto start = std::chrono::steady_clock::now();
    const MonomialSet U = example_set();
    const CompletionTrace trace = complete(U);

    ACCEPT(trace.steps.size() == 3);
    ACCEPT((trace.steps[0] == CompletionStep{Monomial({0, 2, 2}), Monomial({0, 2, 1}), 3}));
    ACCEPT((trace.steps[1] == CompletionStep{Monomial({0, 2, 3}), Monomial({0, 2, 2}), 3}));
    ACCEPT((trace.steps[2] == CompletionStep{Monomial({2, 1, 3}), Monomial({2, 0, 3}), 2}));
    ACCEPT(trace.result == MonomialSet({Monomial({2, 0, 3}), Monomial({0, 2, 1}),
                                        Monomial({0, 2, 2}), Monomial({0, 2, 3}),
                                        Monomial({2, 1, 3})}));
    ACCEPT(is_complete(trace.result));

    const std::string table0 = format_mult_table(mult_table(U));
    ACCEPT(table0 ==
           "x3^3*x1^2 | x3 x2 x1\n"
           "x3*x2^2   |    x2 x1\n");
    const std::string table1 = format_mult_table(mult_table(U.with(Monomial({0, 2, 2}))));
    ACCEPT(table1 ==
           "x3^3*x1^2 | x3 x2 x1\n"
           "x3^2*x2^2 |    x2 x1\n"
           "x3*x2^2   |    x2 x1\n");
    const std::string table2 =
        format_mult_table(mult_table(U.with(Monomial({0, 2, 2})).with(Monomial({0, 2, 3}))));
    ACCEPT(table2 ==
           "x3^3*x2^2 | x3 x2 x1\n"
           "x3^3*x1^2 | x3    x1\n"
           "x3^2*x2^2 |    x2 x1\n"
           "x3*x2^2   |    x2 x1\n");

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ACCEPT(seconds < 1.0);
    return true;
}

// 2. cone/complement partition with an internally disjoint cover
bool partition_theorem() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0x1a2b3c);
    for (int k = 0; k < 500; ++k) {
        const int n = 2 + static_cast<int>(testing::draw(rng, 3));
        const MonomialSet U = testing::random_set(rng, n, 8, 5, true);
        const ComplementSet comp(U);
        const int bound = U.max_degree() + 6;
        for (const Monomial& w : enumerate_up_to(n, bound)) {
            const bool cone = in_cone(U, w);
            const std::size_t covers = comp.covering(w).size();
            ACCEPT(!(cone && covers != 0));
            ACCEPT(!(!cone && covers != 1));
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ACCEPT(seconds < 60.0);
    return true;
}

std::vector<MonomialSet> completion_family(int count) {
    std::mt19937_64 rng(0x9d0f);
    std::vector<MonomialSet> sets;
    for (int k = 0; k < count; ++k) {
        const int n = 2 + static_cast<int>(testing::draw(rng, 3));
        sets.push_back(testing::random_set(rng, n, 8, 5));
    }
    return sets;
}

// 3. on completed sets every involutive-cone member has exactly one divisor
bool unique_divisor() {
    for (const MonomialSet& U : completion_family(200)) {
        const MonomialSet J = complete(U).result;
        const MultTable table = mult_table(J);
        const int bound = J.max_degree() + 5;
        for (const Monomial& w : enumerate_up_to(J.arity(), bound)) {
            int divisors = 0;
            for (int idx = 0; idx < J.size(); ++idx) {
                const Monomial& u = J.at(idx);
                if (!divides(u, w)) continue;
                bool involutive = true;
                for (int i = 1; i <= J.arity(); ++i)
                    if (w.deg(i) > u.deg(i) && !table.is_multiplicative(u, i))
                        involutive = false;
                if (involutive) ++divisors;
            }
            if (in_involutive_cone(J, table, w)) ACCEPT(divisors == 1);
            else ACCEPT(divisors == 0);
        }
    }
    return true;
}

// 4. completion soundness: cone preserved, idempotent, cap never reached
bool completion_soundness() {
    for (const MonomialSet& U : completion_family(200)) {
        CompletionTrace trace{{}, U};
        try {
            trace = complete(U);
        } catch (const std::logic_error&) {
            ACCEPT(false);  // iteration cap must never be reached
        }
        const int bound = U.max_degree() + 5;
        ACCEPT(testing::brute_cone(trace.result, bound) == testing::brute_cone(U, bound));
        const CompletionTrace again = complete(trace.result);
        ACCEPT(again.steps.empty());
        ACCEPT(again.result == trace.result);
    }
    return true;
}

// 5. complementary-decomposition counting equals brute-force counting
bool hilbert_oracle() {
    std::mt19937_64 rng(0x8173);
    for (int k = 0; k < 100; ++k) {
        const int n = 2 + static_cast<int>(testing::draw(rng, 3));
        const MonomialSet U = testing::random_set(rng, n, 8, 5, true);
        for (int d = 0; d <= 10; ++d)
            ACCEPT(hilbert_function(U, d) == testing::brute_complement_count(U, d));
    }
    return true;
}

// 6. order contracts: totality, degree dominance, multiplication compatibility
bool order_contracts() {
    std::mt19937_64 rng(0x06de6);
    std::vector<WeightOrder> orders;
    orders.push_back(WeightOrder::deglex(3, 2));
    for (int k = 0; k < 20; ++k) {
        const int s = 1 + static_cast<int>(testing::draw(rng, 2));
        std::vector<std::vector<int>> c, w;
        for (int level = 0; level < s; ++level) {
            c.push_back({static_cast<int>(testing::draw(rng, 4)),
                         static_cast<int>(testing::draw(rng, 4)),
                         static_cast<int>(testing::draw(rng, 4))});
            w.push_back({static_cast<int>(testing::draw(rng, 3)),
                         static_cast<int>(testing::draw(rng, 3))});
        }
        orders.emplace_back(3, 2, std::move(c), std::move(w));
    }

    const MonomialSet sample = enumerate_up_to(3, 4);
    for (const WeightOrder& order : orders) {
        for (const Monomial& a : sample) {
            for (const Monomial& b : sample) {
                for (int r = 1; r <= 2; ++r) {
                    for (int s = 1; s <= 2; ++s) {
                        const int c = order.compare({r, a}, {s, b});
                        ACCEPT(c == -order.compare({s, b}, {r, a}));
                        ACCEPT((c == 0) == (a == b && r == s));
                        if (a.degree() < b.degree()) ACCEPT(c < 0);
                    }
                }
            }
        }
        ACCEPT(is_multiplication_compatible(order, 4));
    }
    return true;
}

// 7. integrability decision and the canonical fixed point
bool integrability_decision() {
    const WeightOrder ord = WeightOrder::deglex(2, 1);
    LinearExpression phi(2);
    phi.terms.push_back({RationalFunction::constant(2, 1), {1, Monomial({0, 0})}});

    const PdeSystem wave = make_pde_system(
        2, 1, ord,
        {{{1, Monomial({2, 0})}, LinearExpression(2)},
         {{1, Monomial({1, 1})}, LinearExpression(2)}});
    const auto conds = integrability_conditions(wave);
    ACCEPT(conds.size() == 1);
    ACCEPT(conds[0].trivial);
    ACCEPT(is_completely_integrable(wave));

    const PdeSystem drifted = make_pde_system(
        2, 1, ord,
        {{{1, Monomial({2, 0})}, phi}, {{1, Monomial({1, 1})}, LinearExpression(2)}});
    const auto conds2 = integrability_conditions(drifted);
    ACCEPT(conds2.size() == 1);
    ACCEPT(!conds2[0].trivial);
    ACCEPT(conds2[0].residual.constant.is_zero());
    ACCEPT(conds2[0].residual.terms.size() == 1);
    ACCEPT((conds2[0].residual.terms[0].sym == DerivativeSymbol{1, Monomial({0, 1})}));
    ACCEPT(!is_completely_integrable(drifted));

    // canonicalize the drifted system to its fixed point
    LinearExpression raw1(2);
    raw1.terms.push_back({RationalFunction::constant(2, 1), {1, Monomial({2, 0})}});
    raw1.terms.push_back({RationalFunction::constant(2, -1), {1, Monomial({0, 0})}});
    LinearExpression raw2(2);
    raw2.terms.push_back({RationalFunction::constant(2, 1), {1, Monomial({1, 1})}});
    const CanonicalizeOutcome outcome = canonicalize(2, 1, ord, {raw1, raw2});
    ACCEPT(std::holds_alternative<PdeSystem>(outcome.result));
    const PdeSystem& fixed = std::get<PdeSystem>(outcome.result);
    const PdeSystem expected = make_pde_system(
        2, 1, ord,
        {{{1, Monomial({2, 0})}, phi}, {{1, Monomial({0, 1})}, LinearExpression(2)}});
    ACCEPT(fixed == expected);
    ACCEPT(is_complete_system(fixed));
    ACCEPT(is_completely_integrable(fixed));
    return true;
}

// 8. series solutions reconstruct the generating polynomial exactly
bool series_soundness() {
    std::mt19937_64 rng(0x5e41e5);
    for (int k = 0; k < 50; ++k) {
        const int n = 2 + static_cast<int>(testing::draw(rng, 2));
        const MonomialSet J = complete(testing::random_set(rng, n, 3, 3)).result;
        int min_order = J.at(0).degree();
        int max_order = J.at(J.size() - 1).degree();

        const Polynomial target =
            testing::random_polynomial(rng, n, std::min(6, 3 + min_order), 6);
        std::vector<std::pair<Monomial, Polynomial>> eqs;
        for (const Monomial& alpha : J) eqs.emplace_back(alpha, target.multi_derivative(alpha));
        const MonomialPdeSystem sys = make_monomial_system(n, std::move(eqs));

        InitialData data;
        for (const TemplateSlot& slot : initial_condition_template(sys)) {
            std::vector<int> drop;
            for (int i = 1; i <= n; ++i)
                if (std::find(slot.cmult.begin(), slot.cmult.end(), i) == slot.cmult.end())
                    drop.push_back(i);
            data.emplace_back(slot.beta, target.multi_derivative(slot.beta).at_zero(drop));
        }

        const int d = 6;
        const Polynomial series = solve_series_monomial(sys, data, d);
        ACCEPT(series == target.truncated(d));
        for (const auto& [alpha, f] : sys.equations) {
            const Polynomial residue =
                (series.multi_derivative(alpha) - f).truncated(d - max_order);
            ACCEPT(residue.is_zero());
        }
    }
    return true;
}

// 9. the two rewrite strategies produce identical normal forms
bool confluence() {
    std::mt19937_64 rng(0xc0f1e);
    for (int k = 0; k < 50; ++k) {
        const int n = 2 + static_cast<int>(testing::draw(rng, 2));
        const int m = 1 + static_cast<int>(testing::draw(rng, 2));
        const PdeSystem S = testing::random_complete_system(rng, n, m, 3);
        for (int t = 0; t < 3; ++t) {
            const LinearExpression e = testing::random_expression(rng, S, 4);
            ACCEPT(normal_form(S, e, RewriteStrategy::GreatestFirst) ==
                   normal_form(S, e, RewriteStrategy::SmallestFirst));
        }
        const auto a = integrability_conditions(S, RewriteStrategy::GreatestFirst);
        const auto b = integrability_conditions(S, RewriteStrategy::SmallestFirst);
        ACCEPT(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) ACCEPT(a[i].residual == b[i].residual);
    }
    return true;
}

std::string run_cli_once(const std::string& args) {
    const std::string command = std::string(JANET_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return "<popen failed>";
    std::string out;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    pclose(pipe);
    return out;
}

// 10. print/parse fixpoints on the corpus and byte-identical CLI reports
bool cli_roundtrip() {
    const fs::path data = JANET_TEST_DATA_DIR;
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(data)) {
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        if (entry.path().extension() == ".mset") {
            const MonomialSet U = parse_monomial_set(text);
            ACCEPT(parse_monomial_set(print_monomial_set(U)) == U);
        } else {
            const PdeFile f = parse_pde_file(text);
            const PdeFile f2 = parse_pde_file(print_pde_file(f));
            ACCEPT(f2.n == f.n);
            ACCEPT(f2.m == f.m);
            ACCEPT(f2.order == f.order);
            ACCEPT(raw_equations(f2) == raw_equations(f));
            ACCEPT(f2.initial == f.initial);
        }
        ++seen;
    }
    ACCEPT(seen >= 20);

    for (const char* invocation :
         {"complete", "mult-table", "complement", "hilbert --bound 6"}) {
        const std::string args =
            std::string(invocation) + " " + (data / "janet_example.mset").string();
        const std::string first = run_cli_once(args);
        ACCEPT(!first.empty());
        ACCEPT(run_cli_once(args) == first);
    }
    for (const char* name : {"wave.pde", "drifted.pde"}) {
        const std::string args = "pde check " + (data / name).string();
        const std::string first = run_cli_once(args);
        ACCEPT(!first.empty());
        ACCEPT(run_cli_once(args) == first);
    }
    {
        const std::string args =
            "pde solve-monomial " + (data / "mono_solve.pde").string() + " --bound 4";
        ACCEPT(run_cli_once(args) == run_cli_once(args));
    }
    {
        const std::string args = "partition-check --count 40 --seed 7";
        ACCEPT(run_cli_once(args) == run_cli_once(args));
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "worked completion example, tables cell-for-cell", worked_example_completion);
    criterion(2, "cone/complement partition on 500 random sets", partition_theorem);
    criterion(3, "unique Janet divisor on 200 completed sets", unique_divisor);
    criterion(4, "completion soundness and idempotence", completion_soundness);
    criterion(5, "hilbert counts equal brute force, d <= 10, 100 sets", hilbert_oracle);
    criterion(6, "order totality, dominance, product compatibility", order_contracts);
    criterion(7, "integrability decision and canonical fixed point", integrability_decision);
    criterion(8, "series reconstruction on 50 derived systems", series_soundness);
    criterion(9, "rewrite strategies agree on 50 complete systems", confluence);
    criterion(10, "corpus round-trips and deterministic reports", cli_roundtrip);

    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
