#include "tori/poly.hpp"
#include "tori/errors.hpp"

#include <cassert>

namespace tori {

QComplex QComplex::operator/(const QComplex& o) const {
    Rat n2 = o.norm2();
    if (n2 == 0) throw DivisionByZero("complex division by zero");
    return {(re * o.re + im * o.im) / n2, (im * o.re - re * o.im) / n2};
}

void zpoly_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zpoly_degree(const ZPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

ZPoly zpoly_derivative(const ZPoly& f) {
    ZPoly d;
    for (size_t k = 1; k < f.size(); ++k) d.push_back(Int(static_cast<long>(k)) * f[k]);
    zpoly_trim(d);
    return d;
}

Int zpoly_content(const ZPoly& f) {
    Int c = 0;
    for (const Int& a : f) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
        if (c == 1) break;
    }
    return c;
}

ZPoly zpoly_primitive_part(const ZPoly& f) {
    ZPoly g = f;
    zpoly_trim(g);
    if (g.empty()) return g;
    Int c = zpoly_content(g);
    if (g.back() < 0) c = -c;
    for (Int& a : g) a /= c;
    return g;
}

namespace {

// R = lc(B)^(delta+1) * A  mod  B, all over Z.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    int db = zpoly_degree(b);
    assert(db >= 0);
    Int lb = b[static_cast<size_t>(db)];
    int da = zpoly_degree(a);
    long e = da - db + 1;
    while (true) {
        da = zpoly_degree(a);
        if (da < db || da < 0) break;
        Int la = a[static_cast<size_t>(da)];
        for (Int& c : a) c *= lb;
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(da - db + j)] -= la * b[static_cast<size_t>(j)];
        --e;
    }
    for (long i = 0; i < e; ++i)
        for (Int& c : a) c *= lb;
    zpoly_trim(a);
    return a;
}

} // namespace

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    zpoly_trim(a);
    zpoly_trim(b);
    if (a.empty()) return zpoly_primitive_part(b);
    if (b.empty()) return zpoly_primitive_part(a);
    if (zpoly_degree(a) < zpoly_degree(b)) a.swap(b);
    a = zpoly_primitive_part(a);
    b = zpoly_primitive_part(b);
    Int g = 1, h = 1;
    while (true) {
        long delta = zpoly_degree(a) - zpoly_degree(b);
        ZPoly r = pseudo_rem(a, b);
        if (r.empty()) break;
        if (zpoly_degree(r) == 0) {
            b = ZPoly{Int(1)};
            break;
        }
        a = b;
        Int divisor = g;
        for (long i = 0; i < delta; ++i) divisor *= h;
        b = r;
        for (Int& c : b) {
            Int q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
            c = q;
        }
        g = a[static_cast<size_t>(zpoly_degree(a))];
        if (delta > 0) {
            Int gp = int_pow(g, static_cast<unsigned long>(delta));
            Int hp = delta > 1 ? int_pow(h, static_cast<unsigned long>(delta - 1)) : Int(1);
            Int q;
            mpz_divexact(q.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
            h = q;
        }
    }
    return zpoly_primitive_part(b);
}

bool zpoly_is_squarefree(const ZPoly& f) {
    int d = zpoly_degree(f);
    if (d <= 1) return d >= 0;
    ZPoly g = zpoly_gcd(f, zpoly_derivative(f));
    return zpoly_degree(g) == 0;
}

QComplex zpoly_eval(const ZPoly& f, const QComplex& z) {
    QComplex acc(Rat(0), Rat(0));
    for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) {
        acc = acc * z;
        acc.re += Rat(f[static_cast<size_t>(k)]);
    }
    return acc;
}

Rat zpoly_eval_rat(const ZPoly& f, const Rat& x) {
    Rat acc = 0;
    for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k)
        acc = acc * x + Rat(f[static_cast<size_t>(k)]);
    return acc;
}

std::vector<QComplex> zpoly_taylor_shift(const ZPoly& f, const QComplex& c) {
    size_t n = f.size();
    std::vector<QComplex> b(n, QComplex(Rat(0), Rat(0)));
    for (size_t k = 0; k < n; ++k) b[k].re = Rat(f[k]);
    if (n == 0) return b;
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j-- > i;)
            b[j] = b[j] + c * b[j + 1];
    return b;
}

ZPoly zpoly_monicize(const ZPoly& f_in, Int& scale) {
    ZPoly f = f_in;
    zpoly_trim(f);
    int n = zpoly_degree(f);
    if (n < 1) throw Error("monicize: degree must be >= 1");
    if (f[static_cast<size_t>(n)] < 0)
        for (Int& c : f) c = -c;
    Int lc = f[static_cast<size_t>(n)];
    scale = lc;
    if (lc == 1) return f;
    // g(y) = lc^(n-1) f(y/lc): coeff_k = f_k * lc^(n-1-k)
    ZPoly g(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        g[static_cast<size_t>(k)] =
            f[static_cast<size_t>(k)] * int_pow(lc, static_cast<unsigned long>(n - 1 - k >= 0 ? n - 1 - k : 0));
    g[static_cast<size_t>(n)] = 1;
    return g;
}

bool zpoly_divides(const ZPoly& g_monic, const ZPoly& f) {
    int dg = zpoly_degree(g_monic);
    int df = zpoly_degree(f);
    if (dg < 0 || df < dg) return false;
    ZPoly r = f;
    r.resize(static_cast<size_t>(df) + 1);
    for (int k = df - dg; k >= 0; --k) {
        Int c = r[static_cast<size_t>(k + dg)];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j)
            r[static_cast<size_t>(k + j)] -= c * g_monic[static_cast<size_t>(j)];
    }
    for (const Int& c : r)
        if (c != 0) return false;
    return true;
}

} // namespace tori
