#ifndef ZLAB_LAURENT_HPP
#define ZLAB_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zlab/bigint.hpp"

namespace zlab {

// Sparse multivariate Laurent polynomial over Z.  Terms are kept in a map
// keyed by exponent vector (lex order), so equal polynomials compare equal
// structurally and iteration order is canonical.
class LaurentPoly {
public:
    using Exp = std::vector<int32_t>;

    LaurentPoly() : nvars_(0) {}
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, BigInt c) {
        LaurentPoly p(nvars);
        if (!c.is_zero()) p.terms_[Exp(nvars, 0)] = std::move(c);
        return p;
    }
    static LaurentPoly variable(int nvars, int i, int power = 1) {
        LaurentPoly p(nvars);
        Exp e(nvars, 0);
        e[i] = power;
        p.terms_[std::move(e)] = BigInt(1);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exp, BigInt>& terms() const { return terms_; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // internal: insert a normalized term (used by the packed fast paths)
    void set_term(Exp e, BigInt c);

    // Exact division in Z[x^{+-1}]; nullopt when the quotient does not exist.
    static std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

    // max over terms of sum_i exp_i * w_i  (the tropicalization of this value
    // under x_i -> q^{w_i}); nullopt for the zero polynomial.
    std::optional<Rational> weighted_max_degree(const std::vector<Rational>& w) const;

    // Max degree of variable i across terms.
    int32_t max_degree(int i) const;

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_;
    std::map<Exp, BigInt> terms_;

    void add_term(const Exp& e, const BigInt& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

// Running total of live terms across an evolution, for budget enforcement.
struct TermBudget {
    size_t limit = 1000000;
    size_t used = 0;
    void charge(size_t terms);
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zlab

#endif
