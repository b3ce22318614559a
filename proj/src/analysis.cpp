#include "tori/analysis.hpp"
#include "tori/errors.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>

namespace tori {

PicardResult picard_number(const PeriodMatrix& p) {
    int g = p.g();
    RationalMatrix r = rationalize(build_T(p));
    int rank = rank_bareiss(r);
    return {2 * g * g - g - rank, rank};
}

int picard_g2_oracle(const PeriodMatrix& p) {
    if (p.g() != 2) throw WrongDimension("the closed-form route applies to g = 2 only");
    const FieldMatrix& tau = p.tau();
    const NumberField& F = p.field();
    std::vector<FieldElement> span{
        F.one(), tau.at(0, 0), tau.at(0, 1), tau.at(1, 0), tau.at(1, 1),
        tau.at(0, 0) * tau.at(1, 1) - tau.at(0, 1) * tau.at(1, 0)};
    int n = F.degree();
    RationalMatrix m(static_cast<int>(span.size()), n);
    for (int i = 0; i < static_cast<int>(span.size()); ++i)
        for (int t = 0; t < n; ++t) m.at(i, t) = span[static_cast<size_t>(i)].coordinates()[static_cast<size_t>(t)];
    return 6 - rank_naive_oracle(m);
}

std::vector<NSClass> ns_basis(const PeriodMatrix& p) {
    auto kernel = kernel_basis(rationalize(build_T(p)));
    std::vector<NSClass> out;
    out.reserve(kernel.size());
    for (const auto& v : kernel) {
        NSClass cls = ns_class_from_vector(v, p.g());
        if (!ns_class_vanishes(cls, p))
            throw Error("internal: kernel class fails the exact membership identity");
        out.push_back(std::move(cls));
    }
    return out;
}

int extension_degree(const PeriodMatrix& p) {
    std::vector<FieldElement> entries;
    entries.reserve(static_cast<size_t>(p.g()) * p.g());
    for (int i = 0; i < p.g(); ++i)
        for (int j = 0; j < p.g(); ++j) entries.push_back(p.tau().at(i, j));
    return generated_subfield_dimension(entries);
}

DijBounds dij_bounds(const PeriodMatrix& p) {
    int g = p.g();
    if (g < 2) throw WrongDimension("pair bounds require g >= 2");
    const FieldMatrix& tau = p.tau();
    const NumberField& F = p.field();
    int n = F.degree();
    DijBounds out;
    int sum = 0;
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) {
            std::vector<FieldElement> span{F.one()};
            for (int k = 0; k < g; ++k) {
                span.push_back(tau.at(k, i));
                span.push_back(tau.at(k, j));
            }
            for (int l = 0; l < g; ++l)
                for (int k = 0; k < g; ++k)
                    span.push_back(tau.at(l, i) * tau.at(k, j) - tau.at(k, i) * tau.at(l, j));
            RationalMatrix m(static_cast<int>(span.size()), n);
            for (int r = 0; r < static_cast<int>(span.size()); ++r)
                for (int t = 0; t < n; ++t)
                    m.at(r, t) = span[static_cast<size_t>(r)].coordinates()[static_cast<size_t>(t)];
            int dij = rank_bareiss(m);
            out.dij[{i, j}] = dij;
            sum += dij;
        }
    out.bound_dij = 2 * g * g - g - sum;
    int d = extension_degree(p);
    out.bound_degree = Rat(g * g) - Rat(g * (g - 1)) * (Rat(d) / 2 - 1);
    return out;
}

int hom_rank(const PeriodMatrix& p, const PeriodMatrix& q) {
    FieldMatrix sys = build_hom_system(p, q);
    int cols = sys.cols();
    return cols - rank_bareiss(rationalize(sys));
}

int end_rank(const PeriodMatrix& p) { return hom_rank(p, p); }

namespace {

IntMat combine_block(const std::vector<NSClass>& basis, const std::vector<Int>& coeff,
                     IntMat NSClass::* block, int g) {
    IntMat out(static_cast<size_t>(g), std::vector<Int>(static_cast<size_t>(g), Int(0)));
    for (size_t k = 0; k < basis.size(); ++k) {
        if (coeff[k] == 0) continue;
        const IntMat& b = basis[k].*block;
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                out[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                    coeff[k] * b[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return out;
}

// Complex-structure matrix of the lattice R^2g -> C^g, x -> tau x1 + x2,
// from ball enclosures of Re tau and Im tau.
std::optional<BallMatrix> complex_structure(const PeriodMatrix& p, long prec) {
    int g = p.g();
    BallMatrix R(g, g), S(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            ComplexBall e = p.tau().at(i, j).embed(prec);
            R.at(i, j) = e.re;
            S.at(i, j) = e.im;
        }
    auto Sinv = ball_inverse(S, prec);
    if (!Sinv) return std::nullopt;
    BallMatrix SinvR = ball_mul(*Sinv, R, prec);
    BallMatrix RSinv = ball_mul(R, *Sinv, prec);
    BallMatrix RSinvR = ball_mul(RSinv, R, prec);
    BallMatrix J(2 * g, 2 * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            J.at(i, j) = SinvR.at(i, j);
            J.at(i, g + j) = Sinv->at(i, j);
            J.at(g + i, j) = -(S.at(i, j) + RSinvR.at(i, j));
            J.at(g + i, g + j) = -RSinv.at(i, j);
        }
    return J;
}

enum class PdVerdict { positive, not_positive, inconclusive };

PdVerdict certified_positive_definite(const BallMatrix& sym, long prec) {
    for (int k = 1; k <= sym.rows; ++k) {
        RealBall minor = ball_leading_minor(sym, k, prec);
        if (minor.is_positive()) continue;
        if (minor.upper() <= 0) return PdVerdict::not_positive;
        return PdVerdict::inconclusive;
    }
    return PdVerdict::positive;
}

struct CandidateChecker {
    const PeriodMatrix& p;
    const std::vector<NSClass>& basis;
    const BallMatrix& J;
    long prec;

    std::optional<Polarization> check(const std::vector<Int>& coeff) const {
        int g = p.g();
        NSClass cls{combine_block(basis, coeff, &NSClass::A, g),
                    combine_block(basis, coeff, &NSClass::B, g),
                    combine_block(basis, coeff, &NSClass::C, g)};
        int n = 2 * g;
        BallMatrix E(n, n);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) {
                E.at(i, j) = RealBall::exact(Rat(cls.A[static_cast<size_t>(i)][static_cast<size_t>(j)]));
                E.at(i, g + j) = RealBall::exact(Rat(cls.B[static_cast<size_t>(i)][static_cast<size_t>(j)]));
                E.at(g + i, j) = RealBall::exact(Rat(-cls.B[static_cast<size_t>(j)][static_cast<size_t>(i)]));
                E.at(g + i, g + j) = RealBall::exact(Rat(cls.C[static_cast<size_t>(i)][static_cast<size_t>(j)]));
            }
        BallMatrix Sform = ball_mul(ball_transpose(J), E, prec);
        RealBall half = RealBall::exact(Rat(1) / 2);
        BallMatrix sym(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                sym.at(i, j) = (Sform.at(i, j) + Sform.at(j, i)) * half;
        if (certified_positive_definite(sym, prec) == PdVerdict::positive)
            return Polarization{true, coeff, std::move(cls)};
        return std::nullopt;
    }
};

} // namespace

Polarization find_polarization(const PeriodMatrix& p, const std::vector<NSClass>& basis,
                               const AnalysisOptions& opts) {
    Polarization none;
    size_t rho = basis.size();
    if (rho == 0) return none;

    std::optional<BallMatrix> J;
    for (long prec = opts.precision_bits; prec <= opts.max_precision_bits; prec *= 2) {
        J = complex_structure(p, prec);
        if (J) break;
    }
    if (!J) return none;
    CandidateChecker checker{p, basis, *J, opts.precision_bits};

    // structured pass: small-support +-1 combinations, all-plus patterns first,
    // so product-type classes surface immediately
    long budget = 32L * std::max(opts.sample_count, 100);
    long used = 0;
    int max_support = static_cast<int>(std::min<size_t>(rho, 8));
    for (int s = 1; s <= max_support && used < budget; ++s) {
        std::vector<int> idx(static_cast<size_t>(s));
        for (int i = 0; i < s; ++i) idx[static_cast<size_t>(i)] = i;
        std::vector<unsigned> masks;
        for (unsigned m = 0; m < (1u << s); ++m) masks.push_back(m);
        std::stable_sort(masks.begin(), masks.end(),
                         [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
        while (used < budget) {
            for (unsigned m : masks) {
                std::vector<Int> coeff(rho, Int(0));
                for (int i = 0; i < s; ++i)
                    coeff[static_cast<size_t>(idx[static_cast<size_t>(i)])] = (m >> i) & 1 ? -1 : 1;
                if (auto found = checker.check(coeff)) return *found;
                if (++used >= budget) break;
            }
            // next s-subset in lexicographic order
            int i = s - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == static_cast<int>(rho) - s + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < s; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }

    int N = std::max(1, opts.search_bound);
    double full = static_cast<double>(rho);
    for (size_t k = 0; k < rho; ++k) full *= 2 * N + 1;
    if (full <= 200000.0) {
        // exhaustive box [-N, N]^rho in lexicographic order
        std::vector<long> c(rho, -N);
        while (true) {
            bool zero = std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
            if (!zero) {
                std::vector<Int> coeff(rho);
                for (size_t k = 0; k < rho; ++k) coeff[k] = c[k];
                if (auto found = checker.check(coeff)) return *found;
            }
            size_t pos = rho;
            while (pos > 0 && c[pos - 1] == N) c[--pos] = -N;
            if (pos == 0) break;
            ++c[pos - 1];
        }
    } else {
        std::mt19937_64 rng(0x70121AD5u);
        std::uniform_int_distribution<int> dist(-N, N);
        for (int s = 0; s < opts.sample_count; ++s) {
            std::vector<Int> coeff(rho);
            bool zero = true;
            for (size_t k = 0; k < rho; ++k) {
                int v = dist(rng);
                coeff[k] = v;
                zero = zero && v == 0;
            }
            if (zero) continue;
            if (auto found = checker.check(coeff)) return *found;
        }
    }
    return none;
}

bool AnalysisReport::all_verdicts_pass() const {
    for (const auto& v : consistency)
        if (v.applicable && !v.pass) return false;
    return true;
}

AnalysisReport classify(const PeriodMatrix& p, const AnalysisOptions& opts) {
    AnalysisReport rep;
    int g = p.g();
    rep.g = g;
    PicardResult pic = picard_number(p);
    rep.rho = pic.rho;
    rep.rank_T = pic.rank_T;
    rep.degree_d = extension_degree(p);
    rep.ns_classes = ns_basis(p);
    rep.end_rank = ::tori::end_rank(p);
    if (g >= 2) {
        DijBounds db = dij_bounds(p);
        rep.dij = std::move(db.dij);
        rep.bound_dij = db.bound_dij;
        rep.bound_degree = db.bound_degree;
    } else {
        // empty-sum conventions at g = 1
        rep.bound_dij = 2 * g * g - g;
        rep.bound_degree = Rat(g * g);
    }
    rep.rho_maximal = rep.rho == g * g;
    rep.polarization = find_polarization(p, rep.ns_classes, opts);

    auto add = [&](std::string name, bool applicable, bool pass, std::string detail) {
        rep.consistency.push_back({std::move(name), applicable, applicable ? pass : true, std::move(detail)});
    };
    int gg = g * g;
    int d = rep.degree_d;
    std::ostringstream basic;
    basic << "rho=" << rep.rho << " d=" << d << " end=" << rep.end_rank;
    add("rho-range", true, 0 <= rep.rho && rep.rho <= gg, basic.str());
    add("rank-bookkeeping", true, rep.rank_T + rep.rho == 2 * gg - g, "rank_T + rho = 2g^2-g");
    add("bound-dij-sound", true, rep.bound_dij <= rep.rho, "2g^2-g-sum(dij) <= rho");
    add("bound-degree-sound", true, rep.bound_degree <= Rat(rep.rho), "g^2-g(g-1)(d/2-1) <= rho");
    add("quadratic-iff-rho-maximal", g >= 2, (d == 2) == rep.rho_maximal, "d=2 <=> rho=g^2");
    add("cubic-band", g >= 2 && d == 3, g * (g + 1) / 2 <= rep.rho && rep.rho < gg,
        "d=3 => g(g+1)/2 <= rho < g^2");
    add("quartic-band", g >= 2 && d == 4, g <= rep.rho && rep.rho < gg, "d=4 => g <= rho < g^2");
    add("degree-lower-bound", g >= 2, Rat(d) >= 2 * (1 + Rat(gg - rep.rho) / Rat(g * (g - 1))),
        "d >= 2(1+(g^2-rho)/(g(g-1)))");
    add("odd-degree-cap", d % 2 == 1 && rep.polarization.found, rep.rho <= g * (g + 1) / 2,
        "odd d with a polarization => rho <= g(g+1)/2");
    add("end-rank-cap", true, rep.end_rank <= 2 * gg, "rank End <= 2g^2");
    add("end-rank-max-iff", g >= 2, (rep.end_rank == 2 * gg) == rep.rho_maximal,
        "rank End = 2g^2 <=> rho = g^2");
    return rep;
}

int DecompositionDescriptor::total_dimension() const {
    int g = 0;
    for (const auto& f : factors) g += f.dim * f.multiplicity;
    return g;
}

DecompositionReport decomposition_bounds(const DecompositionDescriptor& d) {
    if (d.factors.empty()) throw InvalidDescriptor("descriptor needs at least one factor");
    for (const auto& f : d.factors) {
        if (f.dim < 1 || f.multiplicity < 1)
            throw InvalidDescriptor("factor dimensions and multiplicities must be >= 1");
        if (f.cm && f.dim != 1)
            throw InvalidDescriptor("the cm flag applies to elliptic (dim 1) factors only");
    }
    DecompositionReport rep;
    int g = d.total_dimension();
    rep.g = g;
    Int lhs = 0;
    Int cm_extra = 0;
    for (const auto& f : d.factors) {
        Int k(f.multiplicity);
        if (f.dim >= 2)
            lhs += 2 * Int(f.dim) * k * k;
        else
            lhs += k * k;
        if (f.dim == 1 && f.cm) cm_extra += k * (k - 1);
        rep.factor_caps.push_back(Rat(Int(f.dim) * k * (2 * k + 1)) / 2);
    }
    rep.lemma_lhs = lhs;
    Int gg = Int(g) * Int(g);
    rep.lemma_holds = lhs <= gg;
    rep.lemma_equality = lhs == gg;
    rep.equality_shape = d.factors.size() == 1 &&
                         (d.factors[0].dim == 2 || d.factors[0].dim == 1);
    rep.equality_characterized = rep.lemma_equality == rep.equality_shape;
    rep.product_bound = (Int(g) * Int(g + 1) + cm_extra) / 2;
    return rep;
}

} // namespace tori
