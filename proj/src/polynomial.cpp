#include "pushfwd/polynomial.hpp"

#include <stdexcept>

namespace pushfwd {

Polynomial Polynomial::constant(const Scalar& c) {
    Polynomial p;
    p.add_term(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Scalar& c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::var(const std::string& name) {
    return from_monomial(Monomial::var(name));
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        if (m.total_degree() > d)
            d = m.total_degree();
    return d;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_)
        out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_)
        out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial out;
    if (c == 0)
        return out;
    for (const auto& [m, coeff] : terms_)
        out.terms_.emplace(m, coeff * c);
    return out;
}

Scalar Polynomial::evaluate(const std::map<std::string, Scalar>& values) const {
    Scalar out(0);
    for (const auto& [m, c] : terms_)
        out += c * m.evaluate(values);
    return out;
}

Polynomial Polynomial::shifted(const std::map<std::string, Scalar>& shifts) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(c);
        for (const auto& [name, e] : m.exponents()) {
            auto it = shifts.find(name);
            Polynomial factor = Polynomial::var(name);
            if (it != shifts.end() && it->second != 0)
                factor = factor + Polynomial::constant(it->second);
            for (int k = 0; k < e; ++k)
                term = term * factor;
        }
        out = out + term;
    }
    return out;
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.total_degree() == d)
            out.terms_.emplace(m, c);
    return out;
}

std::set<std::string> Polynomial::variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [name, e] : m.exponents())
            out.insert(name);
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string cs = to_string(c < 0 ? Scalar(-c) : c);
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        if (m.is_one())
            out += cs;
        else if (cs == "1")
            out += m.str();
        else
            out += cs + "*" + m.str();
    }
    return out;
}

PointAssignment PointAssignment::generic(const std::vector<std::string>& universe,
                                         const std::set<std::string>& stratum,
                                         std::size_t feed_start) {
    PointAssignment pt;
    pt.stratum = stratum;
    PrimeFeed feed(feed_start);
    for (const auto& name : universe) {
        if (stratum.count(name))
            pt.values[name] = Scalar(0);
        else
            pt.values[name] = Scalar(feed.take());
    }
    for (const auto& name : stratum)
        if (!pt.values.count(name))
            throw std::invalid_argument("PointAssignment::generic: stratum parameter " + name +
                                        " not in universe");
    return pt;
}

void PointAssignment::validate() const {
    for (const auto& [name, v] : values) {
        bool zero = (v == 0);
        if (zero != static_cast<bool>(stratum.count(name)))
            throw std::invalid_argument("PointAssignment: parameter " + name +
                                        " violates the stratum convention");
    }
    for (const auto& name : stratum)
        if (!values.count(name))
            throw std::invalid_argument("PointAssignment: stratum parameter " + name +
                                        " carries no value");
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("PolyMatrix::at");
    return entries_[r * cols_ + c];
}

const Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("PolyMatrix::at");
    return entries_[r * cols_ + c];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("PolyMatrix: size mismatch in product");
    PolyMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) {
            Polynomial acc;
            for (std::size_t k = 0; k < cols_; ++k)
                acc = acc + at(i, k) * other.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

std::vector<std::vector<Scalar>> PolyMatrix::evaluate(
    const std::map<std::string, Scalar>& values) const {
    std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i][j] = at(i, j).evaluate(values);
    return out;
}

}  // namespace pushfwd
