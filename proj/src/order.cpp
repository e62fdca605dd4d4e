#include "janet/order.hpp"

#include <stdexcept>

namespace janet {

WeightOrder::WeightOrder(int n, int m, std::vector<std::vector<int>> var_weights,
                         std::vector<std::vector<int>> unknown_weights)
    : n_(n),
      m_(m),
      s_(static_cast<int>(var_weights.size())),
      var_weights_(std::move(var_weights)),
      unknown_weights_(std::move(unknown_weights)) {
    if (n_ < 1 || m_ < 1) throw std::invalid_argument("order dimensions must be positive");
    if (static_cast<int>(unknown_weights_.size()) != s_)
        throw std::invalid_argument("variable and unknown weight matrices need equal level counts");
    for (const auto& row : var_weights_) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("variable weight row does not match the arity");
        for (int w : row)
            if (w < 0) throw std::invalid_argument("weights must be non-negative integers");
    }
    for (const auto& row : unknown_weights_) {
        if (static_cast<int>(row.size()) != m_)
            throw std::invalid_argument("unknown weight row does not match the unknown count");
        for (int w : row)
            if (w < 0) throw std::invalid_argument("weights must be non-negative integers");
    }
}

WeightOrder WeightOrder::deglex(int n, int m) {
    return WeightOrder(n, m, {}, {});
}

long long WeightOrder::weight_component(const DerivativeSymbol& d, int level) const {
    const auto& c = var_weights_.at(static_cast<std::size_t>(level));
    long long g = unknown_weights_[static_cast<std::size_t>(level)]
                                  [static_cast<std::size_t>(d.unknown - 1)];
    for (int i = 1; i <= n_; ++i)
        g += static_cast<long long>(d.alpha.deg(i)) * c[static_cast<std::size_t>(i - 1)];
    return g;
}

int WeightOrder::compare(const DerivativeSymbol& a, const DerivativeSymbol& b) const {
    if (a.alpha.arity() != n_ || b.alpha.arity() != n_)
        throw std::invalid_argument("symbol arity does not match the order");
    if (a.unknown < 1 || a.unknown > m_ || b.unknown < 1 || b.unknown > m_)
        throw std::invalid_argument("unknown index does not match the order");
    const int da = a.alpha.degree(), db = b.alpha.degree();
    if (da != db) return da < db ? -1 : 1;
    for (int k = 0; k < s_; ++k) {
        const long long ga = weight_component(a, k), gb = weight_component(b, k);
        if (ga != gb) return ga < gb ? -1 : 1;
    }
    if (const int c = compare_deglex(a.alpha, b.alpha); c != 0) return c;
    if (a.unknown != b.unknown) return a.unknown < b.unknown ? -1 : 1;
    return 0;
}

bool is_multiplication_compatible(const WeightOrder& ord, int bound) {
    const MonomialSet sample = enumerate_up_to(ord.arity(), bound);
    std::vector<DerivativeSymbol> symbols;
    for (int r = 1; r <= ord.unknown_count(); ++r)
        for (const Monomial& alpha : sample) symbols.push_back({r, alpha});
    for (const DerivativeSymbol& a : symbols) {
        for (const DerivativeSymbol& b : symbols) {
            const int c = ord.compare(a, b);
            for (const Monomial& gamma : sample) {
                const DerivativeSymbol as{a.unknown, a.alpha * gamma};
                const DerivativeSymbol bs{b.unknown, b.alpha * gamma};
                if (ord.compare(as, bs) != c) return false;
            }
        }
    }
    return true;
}

}  // namespace janet
