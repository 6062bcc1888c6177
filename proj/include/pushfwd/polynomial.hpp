// Sparse multivariate polynomials over exact rationals, point
// assignments with stratum bookkeeping, and small polynomial matrices.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pushfwd/monomial.hpp"
#include "pushfwd/primes.hpp"
#include "pushfwd/rational.hpp"

namespace pushfwd {

class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Scalar& c);
    static Polynomial from_monomial(const Monomial& m, const Scalar& c = Scalar(1));
    static Polynomial var(const std::string& name);

    // Zero coefficients are never stored.
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;

    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Scalar evaluate(const std::map<std::string, Scalar>& values) const;

    // Substitutes name -> name + shift for every entry of the map;
    // used to translate a point to the origin.
    Polynomial shifted(const std::map<std::string, Scalar>& shifts) const;

    // Degree-d homogeneous part.
    Polynomial homogeneous_part(int d) const;

    std::set<std::string> variables() const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Scalar& c);

    std::map<Monomial, Scalar> terms_;
};

// A point of the parameter space: every parameter carries a value and
// the stratum lists exactly the parameters forced to zero.
struct PointAssignment {
    std::map<std::string, Scalar> values;
    std::set<std::string> stratum;

    // Zeros on `stratum`, deterministic primes elsewhere.  `feed_start`
    // selects the prime sequence (primary or validation).
    static PointAssignment generic(const std::vector<std::string>& universe,
                                   const std::set<std::string>& stratum,
                                   std::size_t feed_start = kPrimaryFeedStart);

    void validate() const;  // stratum members zero, everything else nonzero
};

class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Polynomial& at(std::size_t r, std::size_t c);
    const Polynomial& at(std::size_t r, std::size_t c) const;

    PolyMatrix operator*(const PolyMatrix& other) const;
    std::vector<std::vector<Scalar>> evaluate(const std::map<std::string, Scalar>& values) const;

private:
    std::size_t rows_, cols_;
    std::vector<Polynomial> entries_;
};

}  // namespace pushfwd
