#ifndef TORI_POLY_HPP
#define TORI_POLY_HPP

#include "tori/rational.hpp"

#include <vector>

namespace tori {

// Integer polynomial, ascending coefficients (index k = coefficient of x^k).
using ZPoly = std::vector<Int>;

// Gaussian rational: exact complex number with rational parts.
struct QComplex {
    Rat re, im;

    QComplex() = default;
    QComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    QComplex operator+(const QComplex& o) const { return {re + o.re, im + o.im}; }
    QComplex operator-(const QComplex& o) const { return {re - o.re, im - o.im}; }
    QComplex operator-() const { return {-re, -im}; }
    QComplex operator*(const QComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    QComplex operator/(const QComplex& o) const; // exact; o must be nonzero
    bool operator==(const QComplex& o) const { return re == o.re && im == o.im; }
    Rat norm2() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
};

void zpoly_trim(ZPoly& f);
int zpoly_degree(const ZPoly& f); // -1 for the zero polynomial
ZPoly zpoly_derivative(const ZPoly& f);
Int zpoly_content(const ZPoly& f);
ZPoly zpoly_primitive_part(const ZPoly& f); // leading coefficient made positive

// Primitive gcd over Z via the subresultant polynomial remainder sequence.
ZPoly zpoly_gcd(ZPoly a, ZPoly b);

bool zpoly_is_squarefree(const ZPoly& f);

QComplex zpoly_eval(const ZPoly& f, const QComplex& z);
Rat zpoly_eval_rat(const ZPoly& f, const Rat& x);

// Coefficients b_k of f(x + c) = sum b_k x^k, i.e. b_k = f^(k)(c)/k!.
std::vector<QComplex> zpoly_taylor_shift(const ZPoly& f, const QComplex& c);

// Substitution y = lc * x turning f into a monic integral polynomial in y
// (lc^(n-1) * f(y/lc)). scale receives |lc|; roots scale by |lc| accordingly.
ZPoly zpoly_monicize(const ZPoly& f, Int& scale);

// Exact division test: does the monic integer polynomial g divide f over Z?
bool zpoly_divides(const ZPoly& g_monic, const ZPoly& f);

} // namespace tori

#endif
