#ifndef TORI_TORUS_HPP
#define TORI_TORUS_HPP

#include "tori/linalg.hpp"
#include "tori/numberfield.hpp"

#include <optional>
#include <random>
#include <vector>

namespace tori {

using IntMat = std::vector<std::vector<Int>>;

IntMat int_identity(int n);

// Rectangular matrix of field elements over one ambient field.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(const NumberField& f, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const NumberField& field() const { return field_; }
    FieldElement& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const FieldElement& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix transpose() const;
    bool is_zero() const;

    static FieldMatrix identity(const NumberField& f, int n);
    static FieldMatrix from_integers(const NumberField& f, const IntMat& m);

    // Gauss-Jordan over the field; nullopt when singular.
    std::optional<FieldMatrix> inverse() const;

private:
    NumberField field_;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElement> e_;
};

struct PrecisionPolicy {
    long start_bits = 64;
    long max_bits = 4096;
};

/*
 * Normalized period matrix (tau I_g) of a g-dimensional complex torus, with
 * det(Im tau) != 0 certified by ball arithmetic at construction.
 */
class PeriodMatrix {
public:
    // Throws DegenerateImaginaryPart when det(Im tau) = 0 cannot be excluded
    // at policy.max_bits (indeterminate; exact zero is not decided here).
    static PeriodMatrix create(FieldMatrix tau, const PrecisionPolicy& policy = {});

    int g() const { return tau_.rows(); }
    const NumberField& field() const { return tau_.field(); }
    const FieldMatrix& tau() const { return tau_; }
    long validated_bits() const { return validated_bits_; }

private:
    PeriodMatrix(FieldMatrix t, long bits) : tau_(std::move(t)), validated_bits_(bits) {}
    FieldMatrix tau_;
    long validated_bits_ = 0;
};

/*
 * Matrix of the Neron-Severi membership system: one row per pair (i,j), i<j,
 * in lexicographic order; columns ordered a (pairs, lex), b (row-major),
 * c (pairs, lex); size g(g-1)/2 x (2g^2 - g).
 */
FieldMatrix build_T(const PeriodMatrix& p);

// Linear system whose rational kernel has dimension rank_Z Hom(X, Y), for X
// presented by P (tau) and Y by Q (sigma): (sigma B + D) tau - sigma A - C = 0
// in the 4 gP gQ unknowns A, B, C, D (block order, each row-major).
FieldMatrix build_hom_system(const PeriodMatrix& p, const PeriodMatrix& q);

// Change of lattice basis by an integer matrix of determinant +-1:
// (tau' tau2) = (tau I) M, result tau2^-1 tau'. Throws NotUnimodular /
// SingularRightBlock.
PeriodMatrix unimodular_transform(const PeriodMatrix& p, const IntMat& m,
                                  const PrecisionPolicy& policy = {});

// Dual torus: tau replaced by its transpose.
PeriodMatrix dual(const PeriodMatrix& p, const PrecisionPolicy& policy = {});

// Product torus: block-diagonal tau. Fields must coincide.
PeriodMatrix direct_sum(const PeriodMatrix& a, const PeriodMatrix& b,
                        const PrecisionPolicy& policy = {});

// Integer Neron-Severi class: A, C skew-symmetric, satisfying
// A - B tau + tau^t B^t + tau^t C tau = 0.
struct NSClass {
    IntMat A, B, C;
};

// Exact check of the defining identity W = 0 in the field.
bool ns_class_vanishes(const NSClass& cls, const PeriodMatrix& p);

// Kernel vector (length 2g^2-g, layout as build_T columns) -> (A, B, C).
NSClass ns_class_from_vector(const std::vector<Int>& v, int g);

// Random product of elementary and permutation matrices, det = +-1.
IntMat random_unimodular(int n, std::mt19937_64& rng);

// Coordinate expansion: each field row becomes degree-many rational rows
// (row r, slot t -> rational row r*degree + t).
RationalMatrix rationalize(const FieldMatrix& m);

} // namespace tori

#endif
