#include "tori/roots.hpp"
#include "tori/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>

namespace tori {

namespace {

std::complex<double> eval_double(const std::vector<double>& f, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) acc = acc * z + f[static_cast<size_t>(k)];
    return acc;
}

// Durand-Kerner simultaneous iteration; f monic ascending. Approximation
// quality is heuristic only; every downstream use is certified.
std::vector<std::complex<double>> durand_kerner(const std::vector<double>& f, unsigned salt) {
    int n = static_cast<int>(f.size()) - 1;
    double bound = 1.0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(f[static_cast<size_t>(k)]));
    bound += 1.0;
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    std::complex<double> seed(0.4, 0.9);
    seed *= std::polar(1.0, 0.17 * salt);
    std::complex<double> p = 1.0;
    for (int k = 0; k < n; ++k) {
        p *= seed;
        z[static_cast<size_t>(k)] = p * (0.5 + bound / (std::abs(p) + 1.0));
    }
    for (int iter = 0; iter < 2000; ++iter) {
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> num = eval_double(f, z[static_cast<size_t>(k)]);
            std::complex<double> den = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != k) den *= z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
            if (std::abs(den) < 1e-300) {
                den = 1e-300;
            }
            std::complex<double> delta = num / den;
            z[static_cast<size_t>(k)] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(z[static_cast<size_t>(k)])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

QComplex round_point(const QComplex& z, long bits) {
    return {dyadic_round(z.re, bits), dyadic_round(z.im, bits)};
}

// One exact Newton step followed by dyadic rounding at `bits`.
QComplex newton_step(const ZPoly& f, const ZPoly& df, const QComplex& c, long bits) {
    QComplex fv = zpoly_eval(f, c);
    QComplex dv = zpoly_eval(df, c);
    if (dv.is_zero()) return c;
    return round_point(c - fv / dv, bits);
}

} // namespace

bool root_certificate(const ZPoly& f, const QComplex& center, const Rat& radius) {
    if (radius <= 0) return false;
    std::vector<QComplex> b = zpoly_taylor_shift(f, center);
    if (b.size() < 2) return false;
    // Rouche against the linear term on |z - center| = radius:
    //   |b0| + sum_{k>=2} |b_k| r^k < |b1| r
    // with |.|_1 as upper and |.|_inf as lower bound for complex magnitude.
    Rat lhs = rat_abs(b[0].re) + rat_abs(b[0].im);
    Rat rk = radius;
    for (size_t k = 2; k < b.size(); ++k) {
        rk *= radius;
        lhs += (rat_abs(b[k].re) + rat_abs(b[k].im)) * rk;
    }
    Rat b1 = std::max(rat_abs(b[1].re), rat_abs(b[1].im));
    return lhs < b1 * radius;
}

CertifiedRoot refine_root(const ZPoly& f, const CertifiedRoot& r, long target_bits) {
    if (r.radius <= pow2(-target_bits)) return r;
    ZPoly df = zpoly_derivative(f);
    CertifiedRoot cur = r;
    long bits = std::max<long>(64, static_cast<long>(2));
    {
        // current certified radius ~ 2^-e
        Rat rr = cur.radius;
        long e = 1;
        while (pow2(-e) > rr && e < target_bits) ++e;
        bits = std::max<long>(64, 2 * e);
    }
    for (int round = 0; round < 200; ++round) {
        if (cur.radius <= pow2(-target_bits)) return cur;
        bits = std::min(4 * target_bits + 64, 2 * bits);
        QComplex c = cur.center;
        for (int step = 0; step < 64; ++step) {
            QComplex next = newton_step(f, df, c, bits + 32);
            // try to certify a much smaller disc around the polished center
            Rat want = cur.radius * cur.radius;
            if (want < pow2(-target_bits)) want = pow2(-target_bits);
            if (root_certificate(f, next, want)) {
                // must still identify the same root: new disc inside old
                Rat dist2 = (next - cur.center).norm2();
                Rat slack = cur.radius - want;
                if (slack > 0 && dist2 <= slack * slack) {
                    cur = CertifiedRoot{next, want};
                    break;
                }
            }
            c = next;
        }
    }
    throw Error("root refinement failed to converge");
}

std::vector<CertifiedRoot> isolate_roots(const ZPoly& f, long prec_bits) {
    int n = zpoly_degree(f);
    if (n < 1) throw Error("isolate_roots: degree must be >= 1");
    assert(f[static_cast<size_t>(n)] == 1);

    std::vector<double> fd(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) fd[static_cast<size_t>(k)] = f[static_cast<size_t>(k)].get_d();

    ZPoly df = zpoly_derivative(f);
    std::vector<CertifiedRoot> roots;
    for (unsigned salt = 0; salt < 8 && roots.empty(); ++salt) {
        auto approx = durand_kerner(fd, salt);
        std::vector<CertifiedRoot> cand;
        bool ok = true;
        for (const auto& z : approx) {
            QComplex c(dyadic_round(Rat(z.real()), 64), dyadic_round(Rat(z.imag()), 64));
            bool done = false;
            for (int attempt = 0; attempt < 40 && !done; ++attempt) {
                for (long e = 48 + 24 * attempt; e >= 6; e -= 6) {
                    if (root_certificate(f, c, pow2(-e))) {
                        cand.push_back(CertifiedRoot{c, pow2(-e)});
                        done = true;
                        break;
                    }
                }
                if (!done) c = newton_step(f, df, c, 128 + 48 * attempt);
            }
            if (!done) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // pairwise disjointness; refine until separated
        for (int pass = 0; pass < 64; ++pass) {
            bool clean = true;
            for (size_t i = 0; i < cand.size() && clean; ++i)
                for (size_t j = i + 1; j < cand.size() && clean; ++j) {
                    Rat dre = rat_abs(Rat(cand[i].center.re - cand[j].center.re));
                    Rat dim = rat_abs(Rat(cand[i].center.im - cand[j].center.im));
                    Rat gap = std::max(dre, dim);
                    if (gap <= cand[i].radius + cand[j].radius) {
                        clean = false;
                        long e = 6;
                        while (pow2(-e) > cand[i].radius / 4 && e < 8 * prec_bits) ++e;
                        cand[i] = refine_root(f, cand[i], e);
                        cand[j] = refine_root(f, cand[j], e);
                    }
                }
            if (clean) break;
            if (pass == 63) throw Error("root isolation: could not separate roots");
        }
        roots = std::move(cand);
    }
    if (roots.empty()) throw Error("root isolation failed");
    for (auto& r : roots) r = refine_root(f, r, prec_bits);
    std::sort(roots.begin(), roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
        if (a.center.re != b.center.re) return a.center.re < b.center.re;
        return a.center.im < b.center.im;
    });
    return roots;
}

namespace {

bool ball_contains_integer(const RealBall& b, Int& out) {
    Rat lo = b.lower(), hi = b.upper();
    Int c, fl;
    mpz_cdiv_q(c.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    mpz_fdiv_q(fl.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    if (c > fl) return false;
    out = c; // unique when the width is < 1; caller guarantees that
    return true;
}

struct FactorSearch {
    const ZPoly& f;
    std::vector<ComplexBall> roots;
    bool too_wide = false;
    bool found = false;

    // DFS over root subsets; prod holds coefficients of the monic product of
    // the chosen linear factors (ascending, length size+1, leading exact 1).
    void dfs(size_t idx, int size, int max_size, std::vector<ComplexBall>& prod) {
        if (found || too_wide) return;
        if (size >= 1 && size <= max_size) check(prod, size);
        if (found || too_wide) return;
        if (idx >= roots.size() || size == max_size) return;
        // skip roots[idx]
        dfs(idx + 1, size, max_size, prod);
        if (found || too_wide) return;
        // include roots[idx]: prod *= (x - z)
        std::vector<ComplexBall> next(prod.size() + 1);
        ComplexBall z = roots[idx];
        ComplexBall mz = ComplexBall::exact(Rat(0), Rat(0)) - z;
        for (size_t k = 0; k < prod.size(); ++k) {
            next[k + 1] = next[k + 1] + prod[k];
            next[k] = next[k] + prod[k] * mz;
        }
        dfs(idx + 1, size + 1, max_size, next);
    }

    void check(const std::vector<ComplexBall>& prod, int size) {
        ZPoly cand(static_cast<size_t>(size) + 1);
        cand[static_cast<size_t>(size)] = 1;
        for (int k = 0; k < size; ++k) {
            const ComplexBall& c = prod[static_cast<size_t>(k)];
            if (c.re.rad * 2 >= 1 || c.im.rad * 2 >= 1) {
                too_wide = true;
                return;
            }
            if (!c.im.contains_zero()) return;
            Int v;
            if (!ball_contains_integer(c.re, v)) return;
            cand[static_cast<size_t>(k)] = v;
        }
        if (zpoly_divides(cand, f)) found = true;
    }
};

} // namespace

bool zpoly_is_irreducible_monic(const ZPoly& f) {
    int n = zpoly_degree(f);
    if (n < 1) throw Error("irreducibility: degree must be >= 1");
    if (n == 1) return true;
    long bits = 64;
    auto certified = isolate_roots(f, bits);
    for (int round = 0; round < 24; ++round) {
        FactorSearch search{f, {}, false, false};
        search.roots.reserve(certified.size());
        for (const auto& r : certified) search.roots.push_back(r.enclosure());
        std::vector<ComplexBall> prod{ComplexBall::exact(Rat(1), Rat(0))};
        search.dfs(0, 0, n / 2, prod);
        if (search.found) return false;
        if (!search.too_wide) return true;
        bits *= 2;
        for (auto& r : certified) r = refine_root(f, r, bits);
    }
    throw Error("irreducibility test did not stabilize");
}

} // namespace tori
