#ifndef TORI_BALL_HPP
#define TORI_BALL_HPP

#include "tori/rational.hpp"

#include <optional>
#include <vector>

namespace tori {

/*
 * Midpoint-radius interval arithmetic over exact dyadic rationals.
 *
 * Every operation is computed exactly in Q and therefore rigorously encloses
 * the true value; truncated(bits) rounds the midpoint onto the 2^-bits grid
 * and absorbs the rounding error into the radius, keeping coefficient sizes
 * proportional to the working precision.
 */
struct RealBall {
    Rat mid{0};
    Rat rad{0}; // >= 0

    RealBall() = default;
    explicit RealBall(Rat m) : mid(std::move(m)) {}
    RealBall(Rat m, Rat r) : mid(std::move(m)), rad(std::move(r)) {}

    static RealBall exact(const Rat& v) { return RealBall(v); }

    RealBall operator+(const RealBall& o) const { return {mid + o.mid, rad + o.rad}; }
    RealBall operator-(const RealBall& o) const { return {mid - o.mid, rad + o.rad}; }
    RealBall operator-() const { return {-mid, rad}; }
    RealBall operator*(const RealBall& o) const {
        return {mid * o.mid, rat_abs(mid) * o.rad + rat_abs(o.mid) * rad + rad * o.rad};
    }

    Rat lower() const { return mid - rad; }
    Rat upper() const { return mid + rad; }
    Rat abs_upper() const { return rat_abs(mid) + rad; }
    Rat abs_lower() const {
        Rat l = rat_abs(mid) - rad;
        return l > 0 ? l : Rat(0);
    }
    bool contains_zero() const { return rat_abs(mid) <= rad; }
    bool is_positive() const { return mid - rad > 0; }
    bool contains(const Rat& v) const { return rat_abs(Rat(v - mid)) <= rad; }

    RealBall truncated(long bits) const;
};

// x / y with 0 excluded from y; nullopt when y straddles zero.
std::optional<RealBall> ball_div(const RealBall& x, const RealBall& y);

struct ComplexBall {
    RealBall re, im;

    ComplexBall() = default;
    ComplexBall(RealBall r, RealBall i) : re(std::move(r)), im(std::move(i)) {}
    static ComplexBall exact(const Rat& r, const Rat& i) {
        return {RealBall::exact(r), RealBall::exact(i)};
    }

    ComplexBall operator+(const ComplexBall& o) const { return {re + o.re, im + o.im}; }
    ComplexBall operator-(const ComplexBall& o) const { return {re - o.re, im - o.im}; }
    ComplexBall operator*(const ComplexBall& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    Rat max_rad() const { return re.rad > im.rad ? re.rad : im.rad; }
    ComplexBall truncated(long bits) const { return {re.truncated(bits), im.truncated(bits)}; }
};

struct BallMatrix {
    int rows = 0, cols = 0;
    std::vector<RealBall> a;

    BallMatrix() = default;
    BallMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}
    RealBall& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const RealBall& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Exact expansion determinant (subset dynamic programming); entries truncated
// at prec bits between levels. Square matrices only.
RealBall ball_det(const BallMatrix& m, long prec);

// Leading principal k x k minor, 1 <= k <= rows.
RealBall ball_leading_minor(const BallMatrix& m, int k, long prec);

BallMatrix ball_mul(const BallMatrix& x, const BallMatrix& y, long prec);
BallMatrix ball_transpose(const BallMatrix& m);

// Gauss-Jordan inverse; nullopt when some pivot cannot be certified nonzero.
std::optional<BallMatrix> ball_inverse(const BallMatrix& m, long prec);

} // namespace tori

#endif
