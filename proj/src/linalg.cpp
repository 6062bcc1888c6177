#include "pushfwd/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pushfwd {

namespace {

// Clears denominators row by row; row scaling changes neither rank nor kernel.
std::vector<std::vector<Integer>> to_integer_rows(const ScalarMatrix& m) {
    std::vector<std::vector<Integer>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Integer common(1);
        for (const auto& x : row)
            common = boost::multiprecision::lcm(common, denominator(x));
        std::vector<Integer> irow;
        irow.reserve(row.size());
        for (const auto& x : row)
            irow.push_back(numerator(x) * (common / denominator(x)));
        out.push_back(std::move(irow));
    }
    return out;
}

std::size_t column_count(const ScalarMatrix& m) {
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (const auto& row : m)
        if (row.size() != cols)
            throw std::invalid_argument("matrix rows have unequal lengths");
    return cols;
}

}  // namespace

int matrix_rank(const ScalarMatrix& m) {
    std::size_t cols = column_count(m);
    auto a = to_integer_rows(m);
    std::size_t rows = a.size();
    if (rows == 0 || cols == 0)
        return 0;

    // Bareiss: after step k the remaining minors stay divisible by the
    // previous pivot, so every division below is exact.
    Integer prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m) {
    std::size_t cols = column_count(m);
    ScalarMatrix a = m;
    std::size_t rows = a.size();

    // Gauss-Jordan to reduced row echelon form.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[r], a[pivot]);
        Scalar inv = a[r][col];
        for (std::size_t j = col; j < cols; ++j)
            a[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0)
                continue;
            Scalar f = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col)
        is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = -a[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

int matrix_rank_mod_p(const ScalarMatrix& m, std::uint64_t p) {
    std::size_t cols = column_count(m);
    std::size_t rows = m.size();
    if (rows == 0 || cols == 0)
        return 0;
    Integer P(p);
    auto reduce = [&](const Scalar& x) -> std::uint64_t {
        Integer num = numerator(x) % P;
        if (num < 0)
            num += P;
        Integer den = denominator(x) % P;
        if (den == 0)
            throw std::domain_error("matrix_rank_mod_p: p divides a denominator");
        // den^(p-2) mod p
        Integer inv(1), base = den, e = P - 2;
        while (e > 0) {
            if ((e & 1) != 0)
                inv = inv * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return static_cast<std::uint64_t>(num * inv % P);
    };

    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = reduce(m[i][j]);

    auto mulmod = [&](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t out = 1;
        while (e) {
            if (e & 1)
                out = mulmod(out, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return out;
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[rank], a[pivot]);
        std::uint64_t inv = powmod(a[rank][col], p - 2);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0)
                continue;
            std::uint64_t f = mulmod(a[i][col], inv);
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, a[rank][j]);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int sparse_rank(SparseMatrix m) {
    // Drop empty rows up front, then repeatedly pick the shortest row,
    // use its first entry as pivot, and eliminate that column.
    std::vector<std::map<std::size_t, Scalar>> rows;
    for (auto& r : m.rows)
        if (!r.empty())
            rows.push_back(std::move(r));

    int rank = 0;
    while (!rows.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].size() < rows[best].size())
                best = i;
        std::map<std::size_t, Scalar> pivot_row = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        ++rank;

        const std::size_t pc = pivot_row.begin()->first;
        const Scalar pv = pivot_row.begin()->second;
        std::vector<std::map<std::size_t, Scalar>> next;
        next.reserve(rows.size());
        for (auto& r : rows) {
            auto it = r.find(pc);
            if (it != r.end()) {
                Scalar f = it->second / pv;
                for (const auto& [c, v] : pivot_row) {
                    auto jt = r.find(c);
                    if (jt == r.end()) {
                        r.emplace(c, -f * v);
                    } else {
                        jt->second -= f * v;
                        if (jt->second == 0)
                            r.erase(jt);
                    }
                }
            }
            if (!r.empty())
                next.push_back(std::move(r));
        }
        rows = std::move(next);
    }
    return rank;
}

bool matvec_is_zero(const ScalarMatrix& m, const std::vector<Scalar>& v) {
    for (const auto& row : m) {
        if (row.size() != v.size())
            throw std::invalid_argument("matvec_is_zero: size mismatch");
        Scalar acc(0);
        for (std::size_t j = 0; j < v.size(); ++j)
            acc += row[j] * v[j];
        if (acc != 0)
            return false;
    }
    return true;
}

}  // namespace pushfwd
