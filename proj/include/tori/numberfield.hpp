#ifndef TORI_NUMBERFIELD_HPP
#define TORI_NUMBERFIELD_HPP

#include "tori/ball.hpp"
#include "tori/poly.hpp"
#include "tori/roots.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace tori {

class FieldElement;

/*
 * A number field Q(alpha) with a distinguished complex embedding.
 *
 * The presentation is an integer minimal polynomial plus a decimal hint that
 * selects one certified complex root. Non-monic input is normalized by the
 * substitution y = lc * x; the power basis always refers to the monic
 * generator. Values are immutable; the embedding cache is internal.
 */
class NumberField {
public:
    struct Options {
        long precision_bits = 256;
        long max_precision_bits = 4096;
    };

    // Throws ReduciblePolynomial / NoRootNearHint / AmbiguousRoot.
    static NumberField create(const std::vector<Int>& minpoly_ascending,
                              const std::string& hint_re, const std::string& hint_im,
                              const Options& opts = {});

    int degree() const;
    const ZPoly& minpoly() const;       // monic integral, ascending
    const ZPoly& input_minpoly() const; // primitive part of the given polynomial
    const Int& generator_scale() const; // monic generator = scale * input generator
    QComplex hint() const;

    // Certified enclosure of the distinguished root of minpoly(), radius
    // <= 2^-bits. Cached; safe for concurrent use.
    CertifiedRoot root(long bits) const;

    bool same_field(const NumberField& o) const { return impl_ == o.impl_; }

    FieldElement element(std::vector<Rat> coords) const;
    FieldElement from_rational(const Rat& x) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const; // the monic generator alpha

    long max_precision_bits() const;

private:
    struct Impl;
    explicit NumberField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
    friend class FieldElement;
};

class FieldElement {
public:
    FieldElement() = default;

    const NumberField& field() const { return field_; }
    // Power-basis coordinates (length = field degree); Q-linear in the element.
    const std::vector<Rat>& coordinates() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    bool operator==(const FieldElement& o) const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const; // throws DivisionByZero on zero

    // Certified enclosure of the image under the distinguished embedding;
    // radius < 2^(4-bits) (exact, zero-radius, for rational elements).
    ComplexBall embed(long bits) const;

private:
    FieldElement(NumberField f, std::vector<Rat> c) : field_(std::move(f)), coords_(std::move(c)) {}
    NumberField field_;
    std::vector<Rat> coords_;
    friend class NumberField;
};

// Dimension over Q of the smallest subalgebra containing 1 and S (= [Q(S):Q]
// by algebraicity), computed by span closure under pairwise products.
// Throws FieldMismatch when elements live in different ambient fields.
int generated_subfield_dimension(std::span<const FieldElement> elems);

} // namespace tori

#endif
