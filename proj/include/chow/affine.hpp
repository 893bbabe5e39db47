#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chow/errors.hpp"
#include "chow/rational.hpp"

namespace chow {

/// A parameter binding: name -> exact value.
using Sample = std::map<std::string, Rational>;

/// The declared parameter universe of a computation session. Output orders
/// coefficients by declaration order; names outside the list are rejected
/// when documents are parsed.
struct ParameterList {
    std::vector<std::string> names;

    static ParameterList declare(std::vector<std::string> names) {
        std::set<std::string> seen;
        for (const auto& n : names) {
            if (n.empty()) throw InputError("empty parameter name");
            if (!seen.insert(n).second)
                throw InputError("duplicate parameter name '" + n + "'");
        }
        return ParameterList{std::move(names)};
    }

    std::size_t size() const { return names.size(); }

    bool contains(const std::string& name) const {
        return std::find(names.begin(), names.end(), name) != names.end();
    }
};

/// Degree <= 1 polynomial in named parameters: constant + sum coeff_i * p_i.
/// Zero coefficients are never stored, so equality of forms is equality of
/// the representation.
class AffineForm {
public:
    AffineForm() = default;
    AffineForm(Rational constant) : constant_(std::move(constant)) {}  // NOLINT
    AffineForm(long long constant) : constant_(constant) {}            // NOLINT

    static AffineForm variable(const std::string& name, Rational coeff = Rational(1)) {
        AffineForm f;
        f.add_term(name, std::move(coeff));
        return f;
    }

    const Rational& constant() const { return constant_; }
    const std::map<std::string, Rational>& coefficients() const { return coeffs_; }

    Rational coefficient(const std::string& name) const {
        const auto it = coeffs_.find(name);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return constant_.is_zero() && coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty(); }

    /// Exact evaluation. Every parameter carrying a nonzero coefficient must
    /// be bound in `point`; anything else is an error, not a silent zero.
    Rational eval(const Sample& point) const {
        Rational acc = constant_;
        for (const auto& [name, coeff] : coeffs_) {
            const auto it = point.find(name);
            if (it == point.end())
                throw InputError("unbound parameter '" + name + "' in evaluation");
            acc += coeff * it->second;
        }
        return acc;
    }

    AffineForm& operator+=(const AffineForm& o) {
        constant_ += o.constant_;
        for (const auto& [name, coeff] : o.coeffs_) add_term(name, coeff);
        return *this;
    }
    AffineForm& operator-=(const AffineForm& o) {
        constant_ -= o.constant_;
        for (const auto& [name, coeff] : o.coeffs_) add_term(name, -coeff);
        return *this;
    }
    AffineForm& operator*=(const Rational& c) {
        if (c.is_zero()) {
            constant_ = Rational(0);
            coeffs_.clear();
            return *this;
        }
        constant_ *= c;
        for (auto& [name, coeff] : coeffs_) coeff *= c;
        return *this;
    }
    AffineForm& operator/=(const Rational& c) { return *this *= Rational(1) / c; }

    AffineForm operator-() const {
        AffineForm f = *this;
        f *= Rational(-1);
        return f;
    }

    friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
    friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
    friend AffineForm operator*(AffineForm a, const Rational& c) { return a *= c; }
    friend AffineForm operator*(const Rational& c, AffineForm a) { return a *= c; }
    friend AffineForm operator/(AffineForm a, const Rational& c) { return a /= c; }

    friend bool operator==(const AffineForm& a, const AffineForm& b) {
        return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const AffineForm& a, const AffineForm& b) { return !(a == b); }

private:
    void add_term(const std::string& name, Rational coeff) {
        if (coeff.is_zero()) return;
        const auto it = coeffs_.find(name);
        if (it == coeffs_.end()) {
            coeffs_.emplace(name, std::move(coeff));
            return;
        }
        it->second += coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    Rational constant_;
    std::map<std::string, Rational> coeffs_;
};

/// Renders a form as "c + q1*p1 + q2*p2" with parameters in declared order.
inline std::string format_affine(const AffineForm& f, const ParameterList& params) {
    if (f.is_zero()) return "0";
    std::string out;
    auto append = [&out](const Rational& value, const std::string& var) {
        const Rational mag = abs(value);
        if (out.empty()) {
            if (value.sign() < 0) out += "-";
        } else {
            out += value.sign() < 0 ? " - " : " + ";
        }
        if (var.empty()) {
            out += mag.str();
        } else {
            if (mag != Rational(1)) {
                out += mag.str();
                out += "*";
            }
            out += var;
        }
    };
    if (!f.constant().is_zero()) append(f.constant(), "");
    for (const auto& name : params.names) {
        const Rational c = f.coefficient(name);
        if (!c.is_zero()) append(c, name);
    }
    return out;
}

}  // namespace chow
