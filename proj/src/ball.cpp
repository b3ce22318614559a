#include "tori/ball.hpp"
#include "tori/errors.hpp"

#include <cassert>

namespace tori {

RealBall RealBall::truncated(long bits) const {
    if (rat_bits(mid) <= static_cast<size_t>(2 * bits + 64) && rat_bits(rad) <= static_cast<size_t>(2 * bits + 64))
        return *this;
    Rat m = dyadic_round(mid, bits);
    Rat err = rat_abs(Rat(mid - m));
    Rat r = dyadic_ceil(Rat(rad + err), bits);
    return {m, r};
}

std::optional<RealBall> ball_div(const RealBall& x, const RealBall& y) {
    if (y.contains_zero()) return std::nullopt;
    Rat yl = y.lower(), yu = y.upper();
    Rat xl = x.lower(), xu = x.upper();
    Rat c0 = xl / yl, c1 = xl / yu, c2 = xu / yl, c3 = xu / yu;
    Rat lo = c0, hi = c0;
    for (const Rat& c : {c1, c2, c3}) {
        if (c < lo) lo = c;
        if (c > hi) hi = c;
    }
    return RealBall{(lo + hi) / 2, (hi - lo) / 2};
}

RealBall ball_det(const BallMatrix& m, long prec) {
    return ball_leading_minor(m, m.rows, prec);
}

RealBall ball_leading_minor(const BallMatrix& m, int k, long prec) {
    assert(m.rows == m.cols && k >= 0 && k <= m.rows);
    if (k == 0) return RealBall::exact(Rat(1));
    // dp over column subsets of {0..k-1}: minor of the first popcount(S) rows
    // against columns S, expanded along the last used row.
    size_t full = static_cast<size_t>(1) << k;
    std::vector<RealBall> dp(full);
    dp[0] = RealBall::exact(Rat(1));
    std::vector<int> pop(full, 0);
    for (size_t s = 1; s < full; ++s) pop[s] = pop[s >> 1] + static_cast<int>(s & 1);
    for (size_t s = 1; s < full; ++s) {
        int row = pop[s] - 1;
        RealBall acc;
        int sign = 1;
        for (int j = 0; j < k; ++j) {
            if (!(s & (static_cast<size_t>(1) << j))) continue;
            RealBall term = m.at(row, j) * dp[s ^ (static_cast<size_t>(1) << j)];
            acc = sign > 0 ? acc + term : acc - term;
            sign = -sign;
        }
        dp[s] = acc.truncated(prec);
    }
    return dp[full - 1];
}

BallMatrix ball_mul(const BallMatrix& x, const BallMatrix& y, long prec) {
    assert(x.cols == y.rows);
    BallMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            RealBall acc;
            for (int t = 0; t < x.cols; ++t) acc = acc + x.at(i, t) * y.at(t, j);
            out.at(i, j) = acc.truncated(prec);
        }
    return out;
}

BallMatrix ball_transpose(const BallMatrix& m) {
    BallMatrix out(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

std::optional<BallMatrix> ball_inverse(const BallMatrix& m, long prec) {
    assert(m.rows == m.cols);
    int n = m.rows;
    BallMatrix w = m;
    BallMatrix inv(n, n);
    for (int i = 0; i < n; ++i) inv.at(i, i) = RealBall::exact(Rat(1));
    for (int c = 0; c < n; ++c) {
        // pivot: below-diagonal entry with the largest certified magnitude
        int piv = -1;
        Rat best = 0;
        for (int i = c; i < n; ++i) {
            Rat lo = w.at(i, c).abs_lower();
            if (lo > best) {
                best = lo;
                piv = i;
            }
        }
        if (piv < 0) return std::nullopt;
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(piv, j), w.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        RealBall p = w.at(c, c);
        for (int j = 0; j < n; ++j) {
            auto qw = ball_div(w.at(c, j), p);
            auto qi = ball_div(inv.at(c, j), p);
            if (!qw || !qi) return std::nullopt;
            w.at(c, j) = qw->truncated(prec);
            inv.at(c, j) = qi->truncated(prec);
        }
        for (int i = 0; i < n; ++i) {
            if (i == c) continue;
            RealBall f = w.at(i, c);
            if (f.mid == 0 && f.rad == 0) continue;
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = (w.at(i, j) - f * w.at(c, j)).truncated(prec);
                inv.at(i, j) = (inv.at(i, j) - f * inv.at(c, j)).truncated(prec);
            }
        }
    }
    return inv;
}

} // namespace tori
