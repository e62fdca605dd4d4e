#include <doctest.h>

#include <random>

#include "janet/order.hpp"
#include "oracles.hpp"

using namespace janet;

TEST_CASE("deglex compares degree first, then the last variables") {
    CHECK(cmp_deglex(Monomial({2, 0}), Monomial({0, 1})) > 0);
    CHECK(cmp_deglex(Monomial({0, 1}), Monomial({1, 0})) > 0);
    CHECK(cmp_deglex(Monomial({1, 2}), Monomial({1, 2})) == 0);
}

TEST_CASE("weight comparison") {
    const WeightOrder w1(2, 1, {{1, 0}}, {{0}});
    CHECK(w1.compare({1, Monomial({1, 1})}, {1, Monomial({0, 2})}) > 0);

    // zero weight rows reduce to deglex extended by the unknown index
    const WeightOrder zero(2, 2, {{0, 0}}, {{0, 0}});
    const WeightOrder plain = WeightOrder::deglex(2, 2);
    for (const Monomial& a : enumerate_up_to(2, 3))
        for (const Monomial& b : enumerate_up_to(2, 3))
            for (int r = 1; r <= 2; ++r)
                for (int s = 1; s <= 2; ++s)
                    CHECK(zero.compare({r, a}, {s, b}) == plain.compare({r, a}, {s, b}));

    const WeightOrder w2(2, 1, {{0, 1}, {1, 0}}, {{0}, {0}});
    CHECK(w2.compare({1, Monomial({0, 1})}, {1, Monomial({1, 0})}) > 0);
}

TEST_CASE("unknown weights break ties before the deglex tail") {
    const WeightOrder order(2, 2, {{0, 0}}, {{0, 1}});
    const Monomial alpha({1, 1});
    CHECK(order.compare({2, alpha}, {1, alpha}) > 0);
    CHECK(order.compare({1, alpha}, {2, alpha}) < 0);
}

TEST_CASE("negative weights are rejected") {
    CHECK_THROWS_WITH_AS(WeightOrder(2, 1, {{1, -1}}, {{0}}),
                         "weights must be non-negative integers", std::invalid_argument);
    CHECK_THROWS_AS(WeightOrder(2, 1, {{1, 1}}, {{-2}}), std::invalid_argument);
}

TEST_CASE("totality on all small symbol pairs") {
    std::mt19937_64 rng(31);
    std::vector<WeightOrder> orders{WeightOrder::deglex(2, 2)};
    for (int k = 0; k < 5; ++k) {
        const int s = 1 + static_cast<int>(testing::draw(rng, 2));
        std::vector<std::vector<int>> c, w;
        for (int level = 0; level < s; ++level) {
            c.push_back({static_cast<int>(testing::draw(rng, 4)),
                         static_cast<int>(testing::draw(rng, 4))});
            w.push_back({static_cast<int>(testing::draw(rng, 3)),
                         static_cast<int>(testing::draw(rng, 3))});
        }
        orders.emplace_back(2, 2, std::move(c), std::move(w));
    }
    for (const WeightOrder& order : orders) {
        for (const Monomial& a : enumerate_up_to(2, 3)) {
            for (const Monomial& b : enumerate_up_to(2, 3)) {
                for (int r = 1; r <= 2; ++r) {
                    for (int s = 1; s <= 2; ++s) {
                        const int c = order.compare({r, a}, {s, b});
                        CHECK(c == -order.compare({s, b}, {r, a}));
                        CHECK((c == 0) == (a == b && r == s));
                    }
                }
            }
        }
    }
}

TEST_CASE("smaller total degree is always anterior") {
    std::mt19937_64 rng(32);
    const WeightOrder order(3, 2, {{3, 1, 2}}, {{5, 0}});
    for (int k = 0; k < 300; ++k) {
        const Monomial a = testing::random_monomial(rng, 3, 4);
        const Monomial b = testing::random_monomial(rng, 3, 4);
        if (a.degree() >= b.degree()) continue;
        const int r = 1 + static_cast<int>(testing::draw(rng, 2));
        const int s = 1 + static_cast<int>(testing::draw(rng, 2));
        CHECK(order.compare({r, a}, {s, b}) < 0);
    }
}

TEST_CASE("multiplication compatibility") {
    CHECK(is_multiplication_compatible(WeightOrder::deglex(3, 1), 3));
    std::mt19937_64 rng(33);
    for (int k = 0; k < 4; ++k) {
        std::vector<std::vector<int>> c{{static_cast<int>(testing::draw(rng, 4)),
                                         static_cast<int>(testing::draw(rng, 4)),
                                         static_cast<int>(testing::draw(rng, 4))}};
        CHECK(is_multiplication_compatible(WeightOrder(3, 1, std::move(c), {{0}}), 2));
    }
}
