#include "pushfwd/cohomology.hpp"

#include <stdexcept>
#include <string>

namespace pushfwd {

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
    if (degrees.size() != o.degrees.size())
        throw std::invalid_argument("MultiDegree: rank mismatch");
    MultiDegree out = *this;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        out.degrees[i] += o.degrees[i];
    return out;
}

MultiDegree MultiDegree::operator-(const MultiDegree& o) const { return *this + (-o); }

MultiDegree MultiDegree::operator-() const {
    MultiDegree out = *this;
    for (auto& d : out.degrees)
        d = -d;
    return out;
}

std::string MultiDegree::str() const {
    std::string out = "O(";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(degrees[i]);
    }
    return out + ")";
}

std::pair<int, int> h_p1(int d) {
    int h0 = d >= 0 ? d + 1 : 0;
    int h1 = d <= -2 ? -d - 1 : 0;
    return {h0, h1};
}

std::vector<int> h_multi(const MultiDegree& a) {
    const std::size_t r = a.rank();
    if (r == 0)
        throw std::invalid_argument("h_multi: empty multidegree");
    std::vector<int> out(r + 1, 0);
    // Each factor contributes either its h0 or its h1; the number of
    // h1 choices is the cohomological degree of the product term.
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        long long term = 1;
        int k = 0;
        for (std::size_t j = 0; j < r; ++j) {
            auto [h0, h1] = h_p1(a.degrees[j]);
            if (mask & (std::size_t{1} << j)) {
                term *= h1;
                ++k;
            } else {
                term *= h0;
            }
            if (term == 0)
                break;
        }
        out[static_cast<std::size_t>(k)] += static_cast<int>(term);
    }
    return out;
}

int ext1(const MultiDegree& source, const MultiDegree& target) {
    if (source.rank() != target.rank())
        throw std::invalid_argument("ext1: rank mismatch");
    return h_multi(target - source)[1];
}

int splitting_obstruction(const MultiDegree& quotient, const std::vector<MultiDegree>& subs) {
    int total = 0;
    for (const auto& sub : subs)
        total += ext1(quotient, sub);
    return total;
}

std::pair<int, int> h_elliptic(const EllipticBundleData& data) {
    if (data.degree > 0)
        return {data.degree, 0};
    if (data.degree < 0)
        return {0, -data.degree};
    return data.trivial ? std::pair<int, int>{1, 1} : std::pair<int, int>{0, 0};
}

}  // namespace pushfwd
