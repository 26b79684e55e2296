#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dforge/errors.hpp"
#include "dforge/ratfunc.hpp"

namespace dforge {

// Exponent vector; all vectors in one polynomial have the same length.
using ExpVec = std::vector<int>;

inline int exp_total(const ExpVec& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

// Sparse multivariate polynomial over Q(t).  Terms are kept in a map ordered
// lexicographically on exponent vectors, so iteration order (and thus every
// derived artifact) is deterministic.  No zero coefficient is ever stored.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(std::vector<std::string> vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(std::vector<std::string> vars, const RatFunc& c) {
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_[ExpVec(p.vars_.size(), 0)] = c;
        return p;
    }
    static MultiPoly monomial(std::vector<std::string> vars, const ExpVec& e, const RatFunc& c) {
        MultiPoly p(std::move(vars));
        if (e.size() != p.vars_.size()) throw InvalidInput("MultiPoly::monomial: exponent size mismatch");
        for (int x : e)
            if (x < 0) throw InvalidInput("MultiPoly::monomial: negative exponent");
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }
    static MultiPoly variable(std::vector<std::string> vars, size_t index) {
        if (index >= vars.size()) throw InvalidInput("MultiPoly::variable: index out of range");
        ExpVec e(vars.size(), 0);
        e[index] = 1;
        return monomial(std::move(vars), e, RatFunc::one());
    }

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    const std::map<ExpVec, RatFunc>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
    }
    RatFunc constant_value() const {
        if (terms_.empty()) return RatFunc::zero();
        if (!is_constant()) throw InvalidInput("MultiPoly::constant_value on nonconstant");
        return terms_.begin()->second;
    }

    // all coefficients lie in Q (degree-0 rational functions)
    bool is_rational_coeffs() const {
        for (const auto& [e, c] : terms_)
            if (!c.is_constant()) return false;
        return true;
    }

    int degree_in(size_t var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, exp_total(e));
        return d;
    }
    int min_degree_in(size_t var) const {  // -1 for the zero polynomial
        if (terms_.empty()) return -1;
        int d = INT32_MAX;
        for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = exp_total(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (exp_total(e) != d) return false;
        return true;
    }
    bool depends_on(size_t var) const { return degree_in(var) > 0; }

    const RatFunc& coeff(const ExpVec& e) const {
        static const RatFunc kZero;
        auto it = terms_.find(e);
        return it == terms_.end() ? kZero : it->second;
    }

    // lexicographically largest exponent vector (the "leading monomial")
    const ExpVec& leading_exponent() const {
        if (terms_.empty()) throw InvalidInput("MultiPoly::leading_exponent of zero");
        return terms_.rbegin()->first;
    }
    const RatFunc& leading_coeff() const { return terms_.rbegin()->second; }

    void add_term(const ExpVec& e, const RatFunc& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r = a;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const RatFunc& c) {
        if (c.is_zero()) return MultiPoly(a.vars_);
        MultiPoly r = a;
        for (auto& [e, v] : r.terms_) v *= c;
        return r;
    }
    friend MultiPoly operator*(const RatFunc& c, const MultiPoly& a) { return a * c; }

    MultiPoly& operator+=(const MultiPoly& b) { *this = *this + b; return *this; }
    MultiPoly& operator-=(const MultiPoly& b) { *this = *this - b; return *this; }
    MultiPoly& operator*=(const MultiPoly& b) { *this = *this * b; return *this; }

    bool operator==(const MultiPoly& b) const { return vars_ == b.vars_ && terms_ == b.terms_; }
    bool operator!=(const MultiPoly& b) const { return !(*this == b); }

    MultiPoly pow(unsigned long e) const {
        MultiPoly r = constant(vars_, RatFunc::one());
        MultiPoly b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    MultiPoly derivative(size_t var) const;

    // this as a univariate polynomial in vars_[var]: index k holds the
    // coefficient of vars_[var]^k (a polynomial in the same variable list with
    // var-degree zero)
    std::vector<MultiPoly> coeffs_in(size_t var) const;
    static MultiPoly from_coeffs_in(size_t var, const std::vector<MultiPoly>& cs,
                                    const std::vector<std::string>& vars);

    // substitute vars_[var] := value (same variable list)
    MultiPoly subst(size_t var, const MultiPoly& value) const;
    MultiPoly subst_scalar(size_t var, const RatFunc& value) const;

    // substitute every variable by a polynomial over a target variable list
    MultiPoly compose(const std::vector<MultiPoly>& images) const;

    // full evaluation at a rational point (coefficients stay in Q(t))
    RatFunc eval(const std::vector<RatFunc>& point) const;

    // evaluate all Q(t) coefficients at t = tau; nullopt if any hits a pole
    std::optional<MultiPoly> eval_coeffs_at(const Rat& tau) const;

    std::optional<MultiPoly> divide_exact(const MultiPoly& b) const;

    // Canonical unit-normalized form: coefficients cleared to Q[t], jointly
    // primitive, lexicographic leading coefficient with positive leading
    // rational.  unit_part() is the scalar q with *this == q * primitive().
    MultiPoly primitive_part() const;
    RatFunc unit_part() const;

    // embed into a superset variable list (names must all be present)
    MultiPoly with_vars(const std::vector<std::string>& newvars) const;
    // drop a variable the polynomial does not depend on
    MultiPoly drop_var(size_t var) const;
    // rename only; exponents unchanged
    MultiPoly renamed(std::vector<std::string> newvars) const;

    std::string str() const;

private:
    void check_vars(const MultiPoly& b) const {
        if (vars_ != b.vars_) throw InvalidInput("MultiPoly: variable list mismatch");
    }

    std::vector<std::string> vars_;
    std::map<ExpVec, RatFunc> terms_;
};

std::string to_string(const MultiPoly& p);
std::string to_string(const RatFunc& f);
std::string to_string(const UPoly& p);

}  // namespace dforge
