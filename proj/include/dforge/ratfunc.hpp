#pragma once

#include <string>
#include <utility>

#include "dforge/errors.hpp"
#include "dforge/upoly.hpp"

namespace dforge {

// Element of the differential field Q(t) with the formal derivation d/dt.
// Invariants: denominator monic and nonzero, gcd(num, den) = 1; zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(UPoly::one()) {}
    RatFunc(const Rat& c) : num_(UPoly(c)), den_(UPoly::one()) {}  // NOLINT: implicit by design
    RatFunc(long c) : num_(UPoly(Rat(c))), den_(UPoly::one()) {}   // NOLINT
    RatFunc(UPoly num, UPoly den) { assign(std::move(num), std::move(den)); }
    explicit RatFunc(UPoly num) : num_(std::move(num)), den_(UPoly::one()) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rat(1)); }
    static RatFunc t() { return RatFunc(UPoly::variable()); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // only valid when is_constant()
    Rat constant_value() const { return num_.coeff(0) / den_.coeff(0); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw InvalidInput("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& b) { *this = *this + b; return *this; }
    RatFunc& operator-=(const RatFunc& b) { *this = *this - b; return *this; }
    RatFunc& operator*=(const RatFunc& b) { *this = *this * b; return *this; }
    RatFunc& operator/=(const RatFunc& b) { *this = *this / b; return *this; }

    bool operator==(const RatFunc& b) const { return num_ == b.num_ && den_ == b.den_; }
    bool operator!=(const RatFunc& b) const { return !(*this == b); }

    RatFunc inverse() const { return one() / *this; }

    RatFunc pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc r = one();
        RatFunc b = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    // d/dt via the quotient rule; exact.
    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Evaluation at t = x; nullopt at a pole.
    std::optional<Rat> eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d == 0) return std::nullopt;
        return num_.eval(x) / d;
    }

    // canonical order for sorting: (den, num) by UPoly order
    bool less_than(const RatFunc& b) const {
        if (den_ != b.den_) return den_.less_than(b.den_);
        return num_.less_than(b.num_);
    }

private:
    void assign(UPoly num, UPoly den) {
        if (den.is_zero()) throw InvalidInput("RatFunc: zero denominator");
        if (num.is_zero()) {
            num_ = UPoly();
            den_ = UPoly::one();
            return;
        }
        UPoly g = UPoly::gcd(num, den);
        if (!g.is_constant()) {
            num = num.divide_exact(g).value();
            den = den.divide_exact(g).value();
        }
        Rat lc = den.leading();
        num_ = num * (Rat(1) / lc);
        den_ = den * (Rat(1) / lc);
    }

    UPoly num_;
    UPoly den_;
};

}  // namespace dforge
