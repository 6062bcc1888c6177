#include "pushfwd/monomial.hpp"

#include <stdexcept>

namespace pushfwd {

Monomial Monomial::var(const std::string& name, int exponent) {
    if (exponent < 0)
        throw std::invalid_argument("Monomial::var: negative exponent");
    Monomial m;
    if (exponent > 0)
        m.exps_[name] = exponent;
    return m;
}

int Monomial::exponent(const std::string& name) const {
    auto it = exps_.find(name);
    return it == exps_.end() ? 0 : it->second;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [name, e] : exps_)
        d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out = *this;
    for (const auto& [name, e] : other.exps_) {
        int& slot = out.exps_[name];
        slot += e;
        if (slot == 0)
            out.exps_.erase(name);
    }
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
    Monomial out;
    out.exps_ = exps_;
    for (const auto& [name, e] : other.exps_) {
        auto it = out.exps_.find(name);
        if (it == out.exps_.end() || it->second < e)
            return std::nullopt;
        it->second -= e;
        if (it->second == 0)
            out.exps_.erase(it);
    }
    return out;
}

bool Monomial::divisible_by(const Monomial& other) const {
    for (const auto& [name, e] : other.exps_)
        if (exponent(name) < e)
            return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [name, e] : b.exps_) {
        int& slot = out.exps_[name];
        if (slot < e)
            slot = e;
    }
    return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (const auto& [name, e] : a.exps_) {
        int eb = b.exponent(name);
        int g = e < eb ? e : eb;
        if (g > 0)
            out.exps_[name] = g;
    }
    return out;
}

Scalar Monomial::evaluate(const std::map<std::string, Scalar>& values) const {
    Scalar out(1);
    for (const auto& [name, e] : exps_) {
        auto it = values.find(name);
        if (it == values.end())
            throw std::invalid_argument("Monomial::evaluate: unassigned parameter " + name);
        for (int k = 0; k < e; ++k)
            out *= it->second;
    }
    return out;
}

std::set<std::string> Monomial::variables() const {
    std::set<std::string> out;
    for (const auto& [name, e] : exps_)
        out.insert(name);
    return out;
}

bool Monomial::operator<(const Monomial& other) const {
    auto a = exps_.begin(), b = other.exps_.begin();
    while (a != exps_.end() && b != other.exps_.end()) {
        if (a->first != b->first)
            return a->first < b->first;
        if (a->second != b->second)
            return a->second > b->second;  // higher power of the earlier name first
        ++a;
        ++b;
    }
    return a == exps_.end() && b != other.exps_.end();
}

std::string Monomial::str() const {
    if (exps_.empty())
        return "1";
    std::string out;
    for (const auto& [name, e] : exps_) {
        if (!out.empty())
            out += "*";
        out += name;
        if (e != 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace pushfwd
