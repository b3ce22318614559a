#ifndef TORI_ROOTS_HPP
#define TORI_ROOTS_HPP

#include "tori/ball.hpp"
#include "tori/poly.hpp"

#include <vector>

namespace tori {

/*
 * Certified complex root of a squarefree integer polynomial: the closed disc
 * |z - center| <= radius contains exactly one root (certificate: a Rouche
 * comparison of the Taylor coefficients at the center, evaluated in exact
 * rational arithmetic).
 */
struct CertifiedRoot {
    QComplex center; // dyadic components
    Rat radius;      // dyadic, > 0

    ComplexBall enclosure() const {
        return {RealBall(center.re, radius), RealBall(center.im, radius)};
    }
};

// True when the disc D(center, radius) provably contains exactly one root.
bool root_certificate(const ZPoly& f, const QComplex& center, const Rat& radius);

// Isolates all roots of a monic squarefree integer polynomial into pairwise
// disjoint certified discs of radius <= 2^-prec_bits. Throws Error on
// internal failure (certification impossible within the iteration budget).
std::vector<CertifiedRoot> isolate_roots(const ZPoly& monic_squarefree, long prec_bits);

// Shrinks a certified disc to radius <= 2^-target_bits around the same root.
CertifiedRoot refine_root(const ZPoly& f, const CertifiedRoot& r, long target_bits);

// Complete irreducibility test over Q for a monic squarefree integer
// polynomial: searches for a proper monic integer factor among all subset
// products of certified root enclosures and verifies candidates by exact
// division.
bool zpoly_is_irreducible_monic(const ZPoly& monic_squarefree);

} // namespace tori

#endif
