// Monomials in named parameters with nonnegative integer exponents.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pushfwd/rational.hpp"

namespace pushfwd {

class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial var(const std::string& name, int exponent = 1);

    // Zero exponents are never stored.
    const std::map<std::string, int>& exponents() const { return exps_; }
    int exponent(const std::string& name) const;
    int total_degree() const;
    bool is_one() const { return exps_.empty(); }

    Monomial operator*(const Monomial& other) const;
    // Exact division; nullopt when other does not divide *this.
    std::optional<Monomial> divide(const Monomial& other) const;
    bool divisible_by(const Monomial& other) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    Scalar evaluate(const std::map<std::string, Scalar>& values) const;

    std::set<std::string> variables() const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }
    // Lexicographic on parameter names, exponents breaking ties; a
    // deterministic total order for map keys and printed output.
    bool operator<(const Monomial& other) const;

    std::string str() const;

private:
    std::map<std::string, int> exps_;
};

}  // namespace pushfwd
