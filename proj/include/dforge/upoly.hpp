#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dforge/errors.hpp"
#include "dforge/rational.hpp"

namespace dforge {

// Dense univariate polynomial over Q.  Coefficient i is the coefficient of
// x^i; the vector never ends in a zero (the zero polynomial is empty).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const Rat& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(Rat(1)); }
    static UPoly variable() { return UPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    // c * x^k
    static UPoly monomial(const Rat& c, int k) {
        if (c == 0) return UPoly();
        std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
        v.back() = c;
        return UPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rat& coeff(int i) const {
        static const Rat kZero(0);
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<size_t>(i)];
    }
    const Rat& leading() const { return coeffs_.back(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a) {
        std::vector<Rat> v = a.coeffs_;
        for (auto& c : v) c = -c;
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const UPoly& a, const Rat& c) {
        if (c == 0) return UPoly();
        std::vector<Rat> v = a.coeffs_;
        for (auto& x : v) x *= c;
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const Rat& c, const UPoly& a) { return a * c; }

    UPoly& operator+=(const UPoly& b) { *this = *this + b; return *this; }
    UPoly& operator-=(const UPoly& b) { *this = *this - b; return *this; }
    UPoly& operator*=(const UPoly& b) { *this = *this * b; return *this; }

    bool operator==(const UPoly& b) const { return coeffs_ == b.coeffs_; }
    bool operator!=(const UPoly& b) const { return !(*this == b); }

    // Total order used only for canonical sorting: by degree, then the
    // coefficient sequence from the top down.
    bool less_than(const UPoly& b) const {
        if (degree() != b.degree()) return degree() < b.degree();
        for (int i = degree(); i >= 0; --i)
            if (coeff(i) != b.coeff(i)) return coeff(i) < b.coeff(i);
        return false;
    }

    UPoly pow(unsigned long e) const {
        UPoly r = one();
        UPoly b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // quotient and remainder; divisor must be nonzero
    static std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw InvalidInput("UPoly::divrem: division by zero polynomial");
        UPoly r = a;
        std::vector<Rat> q(a.coeffs_.size() > b.coeffs_.size() - 1
                               ? a.coeffs_.size() - b.coeffs_.size() + 1
                               : 0,
                           Rat(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rat c = r.leading() / b.leading();
            int k = r.degree() - b.degree();
            q[static_cast<size_t>(k)] = c;
            r -= UPoly::monomial(c, k) * b;
        }
        return {UPoly(std::move(q)), r};
    }

    std::optional<UPoly> divide_exact(const UPoly& b) const {
        auto [q, r] = divrem(*this, b);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    UPoly derivative() const {
        if (coeffs_.size() <= 1) return UPoly();
        std::vector<Rat> v(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
        return UPoly(std::move(v));
    }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
        return r;
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * (Rat(1) / leading());
    }

    // gcd, monic-normalized; gcd(0,0) = 0
    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = divrem(a, b).second;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    // Largest squarefree divisor (monic).
    UPoly squarefree_part() const {
        if (is_zero()) throw InvalidInput("UPoly::squarefree_part of zero");
        if (is_constant()) return one();
        UPoly g = gcd(*this, derivative());
        return divide_exact(g).value().monic();
    }

    // content as a rational: gcd of numerators / lcm of denominators, signed by
    // the leading coefficient
    Rat content() const {
        if (is_zero()) return Rat(0);
        Int num(0), den(1);
        for (const auto& c : coeffs_) {
            if (c == 0) continue;
            num = int_gcd(num, c.get_num());
            den = int_lcm(den, c.get_den());
        }
        Rat r(num, den);
        r.canonicalize();
        if (leading() < 0) r = -r;
        return r;
    }

    // integer-coefficient, content-free, positive leading coefficient
    UPoly primitive() const {
        if (is_zero()) return *this;
        return *this * (Rat(1) / content());
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

}  // namespace dforge
