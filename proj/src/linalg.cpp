#include "tori/linalg.hpp"
#include "tori/errors.hpp"

#include <cassert>
#include <numeric>

namespace tori {

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

// Integer matrix with the same row space: each row scaled by the lcm of its
// denominators.
std::vector<std::vector<Int>> clear_denominators(const RationalMatrix& m) {
    std::vector<std::vector<Int>> z(static_cast<size_t>(m.rows()),
                                    std::vector<Int>(static_cast<size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            Rat v = m.at(i, j) * Rat(l);
            assert(v.get_den() == 1);
            z[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.get_num();
        }
    }
    return z;
}

struct Echelon {
    std::vector<std::vector<Int>> m;
    std::vector<int> pivot_cols; // one per pivot row, increasing
};

// Fraction-free (Bareiss) forward elimination with first-nonzero pivoting.
Echelon bareiss_echelon(std::vector<std::vector<Int>> a, int rows, int cols) {
    Echelon e;
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) a[static_cast<size_t>(piv)].swap(a[static_cast<size_t>(r)]);
        const Int& p = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
        for (int i = r + 1; i < rows; ++i) {
            const Int& f = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
            for (int j = c + 1; j < cols; ++j) {
                Int t = p * a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                        f * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
                mpz_divexact(a[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(),
                             t.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(c)] = 0;
        }
        prev = p;
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.m = std::move(a);
    return e;
}

} // namespace

int rank_bareiss(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto z = clear_denominators(m);
    return static_cast<int>(bareiss_echelon(std::move(z), m.rows(), m.cols()).pivot_cols.size());
}

std::vector<std::vector<Int>> kernel_basis(const RationalMatrix& m) {
    int cols = m.cols();
    std::vector<std::vector<Int>> basis;
    if (cols == 0) return basis;
    Echelon e;
    if (m.rows() > 0) e = bareiss_echelon(clear_denominators(m), m.rows(), cols);
    int rank = static_cast<int>(e.pivot_cols.size());

    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Rat> v(static_cast<size_t>(cols), Rat(0));
        v[static_cast<size_t>(f)] = 1;
        for (int i = rank - 1; i >= 0; --i) {
            int pc = e.pivot_cols[static_cast<size_t>(i)];
            if (pc > f) continue;
            Rat s = 0;
            for (int j = pc + 1; j < cols; ++j) {
                if (v[static_cast<size_t>(j)] == 0) continue;
                s += Rat(e.m[static_cast<size_t>(i)][static_cast<size_t>(j)]) * v[static_cast<size_t>(j)];
            }
            v[static_cast<size_t>(pc)] = -s / Rat(e.m[static_cast<size_t>(i)][static_cast<size_t>(pc)]);
        }
        // scale to integers, content 1, first nonzero entry positive
        Int l = 1;
        for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<Int> w(static_cast<size_t>(cols));
        Int g = 0;
        for (int j = 0; j < cols; ++j) {
            Rat x = v[static_cast<size_t>(j)] * Rat(l);
            w[static_cast<size_t>(j)] = x.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[static_cast<size_t>(j)].get_mpz_t());
        }
        for (int j = 0; j < cols; ++j)
            if (w[static_cast<size_t>(j)] != 0) {
                if (w[static_cast<size_t>(j)] < 0) g = -g;
                break;
            }
        for (Int& x : w) x /= g;
        basis.push_back(std::move(w));
    }
    return basis;
}

int rank_naive_oracle(const RationalMatrix& m) {
    if (static_cast<long long>(m.rows()) * m.cols() > 1000000LL)
        throw SizeGuardExceeded("rank_naive_oracle: matrix larger than the 10^6 entry guard");
    if (m.rows() == 0 || m.cols() == 0) return 0;
    RationalMatrix a = m;
    int rows = a.rows(), cols = a.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        Rat best = 0;
        for (int i = r; i < rows; ++i) {
            Rat v = rat_abs(a.at(i, c));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            if (a.at(i, c) == 0) continue;
            Rat f = a.at(i, c) / a.at(r, c);
            for (int j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

Int det_integer(const std::vector<std::vector<Int>>& m) {
    size_t n = m.size();
    for (const auto& row : m) assert(row.size() == n);
    if (n == 0) return 1;
    auto a = m;
    Int prev = 1;
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            a[piv].swap(a[c]);
            sign = -sign;
        }
        const Int& p = a[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            for (size_t j = c + 1; j < n; ++j) {
                Int t = p * a[i][j] - a[i][c] * a[c][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = p;
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

} // namespace tori
