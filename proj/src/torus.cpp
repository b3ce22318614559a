#include "tori/torus.hpp"
#include "tori/errors.hpp"

#include <cassert>

namespace tori {

IntMat int_identity(int n) {
    IntMat m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

FieldMatrix::FieldMatrix(const NumberField& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), f.zero()) {}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    FieldMatrix r(field_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    FieldMatrix r(field_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    assert(cols_ == o.rows_);
    FieldMatrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            FieldElement acc = field_.zero();
            for (int t = 0; t < cols_; ++t) acc = acc + at(i, t) * o.at(t, j);
            r.at(i, j) = acc;
        }
    return r;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool FieldMatrix::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

FieldMatrix FieldMatrix::identity(const NumberField& f, int n) {
    FieldMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

FieldMatrix FieldMatrix::from_integers(const NumberField& f, const IntMat& im) {
    int rows = static_cast<int>(im.size());
    int cols = rows > 0 ? static_cast<int>(im[0].size()) : 0;
    FieldMatrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        assert(static_cast<int>(im[static_cast<size_t>(i)].size()) == cols);
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = f.from_rational(Rat(im[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    }
    return m;
}

std::optional<FieldMatrix> FieldMatrix::inverse() const {
    assert(rows_ == cols_);
    int n = rows_;
    FieldMatrix w = *this;
    FieldMatrix inv = identity(field_, n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!w.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(piv, j), w.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        FieldElement pinv = w.at(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            w.at(c, j) = w.at(c, j) * pinv;
            inv.at(c, j) = inv.at(c, j) * pinv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || w.at(i, c).is_zero()) continue;
            FieldElement f = w.at(i, c);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = w.at(i, j) - f * w.at(c, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(c, j);
            }
        }
    }
    return inv;
}

PeriodMatrix PeriodMatrix::create(FieldMatrix tau, const PrecisionPolicy& policy) {
    if (tau.rows() != tau.cols() || tau.rows() < 1)
        throw Error("period matrix must be square of positive dimension");
    int g = tau.rows();
    for (long bits = policy.start_bits;; bits *= 2) {
        BallMatrix im(g, g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) im.at(i, j) = tau.at(i, j).embed(bits).im;
        RealBall d = ball_det(im, bits);
        if (!d.contains_zero()) return PeriodMatrix(std::move(tau), bits);
        if (bits >= policy.max_bits) break;
    }
    throw DegenerateImaginaryPart(
        "det(Im tau) = 0 could not be excluded at the maximum precision");
}

namespace {

int pair_index(int i, int j, int g) {
    // (i,j), 0 <= i < j < g, lexicographic
    assert(0 <= i && i < j && j < g);
    return i * (2 * g - i - 1) / 2 + (j - i - 1);
}

} // namespace

FieldMatrix build_T(const PeriodMatrix& p) {
    const NumberField& F = p.field();
    int g = p.g();
    const FieldMatrix& tau = p.tau();
    int gg2 = g * (g - 1) / 2;
    int cols = 2 * g * g - g;
    int b_off = gg2;
    int c_off = gg2 + g * g;
    FieldMatrix T(F, gg2, cols);
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) {
            int row = pair_index(i, j, g);
            // a_ij
            T.at(row, pair_index(i, j, g)) = F.one();
            // sum_k b_jk tau_ki - b_ik tau_kj
            for (int k = 0; k < g; ++k) {
                int col_jk = b_off + j * g + k;
                T.at(row, col_jk) = T.at(row, col_jk) + tau.at(k, i);
                int col_ik = b_off + i * g + k;
                T.at(row, col_ik) = T.at(row, col_ik) - tau.at(k, j);
            }
            // sum_{l<k} c_lk (tau_kj tau_li - tau_lj tau_ki)
            for (int l = 0; l < g; ++l)
                for (int k = l + 1; k < g; ++k) {
                    int col = c_off + pair_index(l, k, g);
                    FieldElement det2 = tau.at(k, j) * tau.at(l, i) - tau.at(l, j) * tau.at(k, i);
                    T.at(row, col) = T.at(row, col) + det2;
                }
        }
    return T;
}

FieldMatrix build_hom_system(const PeriodMatrix& p, const PeriodMatrix& q) {
    if (!p.field().same_field(q.field()))
        throw FieldMismatch("hom system requires one common ambient field");
    const NumberField& F = p.field();
    int gp = p.g(), gq = q.g();
    const FieldMatrix& tau = p.tau();
    const FieldMatrix& sigma = q.tau();
    int block = gp * gq;
    FieldMatrix M(F, block, 4 * block);
    // unknown layout: A, B, C, D blocks of the rational representation,
    // each gq x gp row-major
    for (int u = 0; u < gq; ++u)
        for (int v = 0; v < gp; ++v) {
            int row = u * gp + v;
            for (int s = 0; s < gq; ++s) {
                // A_sv: -sigma_us
                int ca = 0 * block + s * gp + v;
                M.at(row, ca) = M.at(row, ca) - sigma.at(u, s);
                // B_st: sigma_us tau_tv
                for (int t = 0; t < gp; ++t) {
                    int cb = 1 * block + s * gp + t;
                    M.at(row, cb) = M.at(row, cb) + sigma.at(u, s) * tau.at(t, v);
                }
            }
            // C_uv: -1
            int cc = 2 * block + u * gp + v;
            M.at(row, cc) = M.at(row, cc) - F.one();
            // D_ut: tau_tv
            for (int t = 0; t < gp; ++t) {
                int cd = 3 * block + u * gp + t;
                M.at(row, cd) = M.at(row, cd) + tau.at(t, v);
            }
        }
    return M;
}

PeriodMatrix unimodular_transform(const PeriodMatrix& p, const IntMat& m,
                                  const PrecisionPolicy& policy) {
    int g = p.g();
    int n = 2 * g;
    if (static_cast<int>(m.size()) != n)
        throw NotUnimodular("transform matrix must be 2g x 2g");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw NotUnimodular("transform matrix must be 2g x 2g");
    Int d = det_integer(m);
    if (d != 1 && d != -1) throw NotUnimodular("transform determinant is not +-1");

    const NumberField& F = p.field();
    IntMat m11(static_cast<size_t>(g), std::vector<Int>(static_cast<size_t>(g)));
    IntMat m12 = m11, m21 = m11, m22 = m11;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            m11[static_cast<size_t>(i)][static_cast<size_t>(j)] = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
            m12[static_cast<size_t>(i)][static_cast<size_t>(j)] = m[static_cast<size_t>(i)][static_cast<size_t>(j + g)];
            m21[static_cast<size_t>(i)][static_cast<size_t>(j)] = m[static_cast<size_t>(i + g)][static_cast<size_t>(j)];
            m22[static_cast<size_t>(i)][static_cast<size_t>(j)] = m[static_cast<size_t>(i + g)][static_cast<size_t>(j + g)];
        }
    const FieldMatrix& tau = p.tau();
    FieldMatrix tau_prime = tau * FieldMatrix::from_integers(F, m11) + FieldMatrix::from_integers(F, m21);
    FieldMatrix tau_two = tau * FieldMatrix::from_integers(F, m12) + FieldMatrix::from_integers(F, m22);
    auto inv = tau_two.inverse();
    if (!inv) throw SingularRightBlock("right block of the transformed period matrix is singular");
    return PeriodMatrix::create(*inv * tau_prime, policy);
}

PeriodMatrix dual(const PeriodMatrix& p, const PrecisionPolicy& policy) {
    return PeriodMatrix::create(p.tau().transpose(), policy);
}

PeriodMatrix direct_sum(const PeriodMatrix& a, const PeriodMatrix& b,
                        const PrecisionPolicy& policy) {
    if (!a.field().same_field(b.field()))
        throw FieldMismatch("direct sum requires one common ambient field");
    const NumberField& F = a.field();
    int ga = a.g(), gb = b.g();
    FieldMatrix t(F, ga + gb, ga + gb);
    for (int i = 0; i < ga; ++i)
        for (int j = 0; j < ga; ++j) t.at(i, j) = a.tau().at(i, j);
    for (int i = 0; i < gb; ++i)
        for (int j = 0; j < gb; ++j) t.at(ga + i, ga + j) = b.tau().at(i, j);
    return PeriodMatrix::create(std::move(t), policy);
}

NSClass ns_class_from_vector(const std::vector<Int>& v, int g) {
    int gg2 = g * (g - 1) / 2;
    assert(static_cast<int>(v.size()) == 2 * g * g - g);
    NSClass cls;
    cls.A = IntMat(static_cast<size_t>(g), std::vector<Int>(static_cast<size_t>(g), Int(0)));
    cls.B = cls.A;
    cls.C = cls.A;
    int idx = 0;
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) {
            cls.A[static_cast<size_t>(i)][static_cast<size_t>(j)] = v[static_cast<size_t>(idx)];
            cls.A[static_cast<size_t>(j)][static_cast<size_t>(i)] = -v[static_cast<size_t>(idx)];
            ++idx;
        }
    for (int s = 0; s < g; ++s)
        for (int t = 0; t < g; ++t)
            cls.B[static_cast<size_t>(s)][static_cast<size_t>(t)] = v[static_cast<size_t>(idx++)];
    for (int l = 0; l < g; ++l)
        for (int k = l + 1; k < g; ++k) {
            cls.C[static_cast<size_t>(l)][static_cast<size_t>(k)] = v[static_cast<size_t>(idx)];
            cls.C[static_cast<size_t>(k)][static_cast<size_t>(l)] = -v[static_cast<size_t>(idx)];
            ++idx;
        }
    assert(idx == gg2 + g * g + gg2);
    return cls;
}

bool ns_class_vanishes(const NSClass& cls, const PeriodMatrix& p) {
    const NumberField& F = p.field();
    const FieldMatrix& tau = p.tau();
    FieldMatrix A = FieldMatrix::from_integers(F, cls.A);
    FieldMatrix B = FieldMatrix::from_integers(F, cls.B);
    FieldMatrix C = FieldMatrix::from_integers(F, cls.C);
    FieldMatrix taut = tau.transpose();
    FieldMatrix W = A - B * tau + taut * B.transpose() + taut * (C * tau);
    return W.is_zero();
}

IntMat random_unimodular(int n, std::mt19937_64& rng) {
    IntMat m = int_identity(n);
    if (n == 1) {
        if (rng() & 1) m[0][0] = -1;
        return m;
    }
    std::uniform_int_distribution<int> row_dist(0, n - 1);
    std::uniform_int_distribution<int> op_dist(0, 5);
    std::uniform_int_distribution<int> coeff_dist(-2, 2);
    int ops = 3 * n + 6;
    for (int k = 0; k < ops; ++k) {
        int op = op_dist(rng);
        int i = row_dist(rng), j = row_dist(rng);
        if (op == 0) {
            m[static_cast<size_t>(i)].swap(m[static_cast<size_t>(j)]);
        } else if (op == 1) {
            for (Int& x : m[static_cast<size_t>(i)]) x = -x;
        } else {
            if (i == j) j = (j + 1) % n;
            int c = coeff_dist(rng);
            if (c == 0) c = 1;
            for (int t = 0; t < n; ++t)
                m[static_cast<size_t>(j)][static_cast<size_t>(t)] +=
                    Int(c) * m[static_cast<size_t>(i)][static_cast<size_t>(t)];
        }
    }
    return m;
}

RationalMatrix rationalize(const FieldMatrix& m) {
    int n = m.field().degree();
    RationalMatrix out(m.rows() * n, m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const auto& coords = m.at(r, c).coordinates();
            for (int t = 0; t < n; ++t) out.at(r * n + t, c) = coords[static_cast<size_t>(t)];
        }
    return out;
}

} // namespace tori
