#ifndef TORI_INSTANCE_HPP
#define TORI_INSTANCE_HPP

#include "tori/analysis.hpp"

#include <cstdint>
#include <string>

namespace tori {

/*
 * On-disk instance document (JSON): a number field block (integer minimal
 * polynomial, decimal root hint) plus a g x g array of power-basis coordinate
 * vectors with rationals kept as "p/q" strings.
 */
struct InstanceFile {
    std::string label;
    std::vector<Int> minpoly; // ascending
    std::string root_re, root_im;
    int g = 0;
    std::vector<std::vector<std::vector<Rat>>> tau; // [i][j][coord]

    bool operator==(const InstanceFile& o) const = default;
};

InstanceFile parse_instance(const std::string& text); // throws ParseError
std::string serialize_instance(const InstanceFile& inst);

struct RealizedInstance {
    NumberField field;
    PeriodMatrix period;
};

RealizedInstance realize(const InstanceFile& inst, const NumberField::Options& fopts = {},
                         const PrecisionPolicy& policy = {});

// --- instance generators -------------------------------------------------

// Square of a CM elliptic curve: tau = diag(sqrt(d), ...) for squarefree
// d < 0 (or (1+sqrt(d))/2 when d = 1 mod 4), g copies.
InstanceFile gen_cm_power(long d, int g);

// Self-product of the elliptic curve with period a non-real root of
// x^3 - x - 1 (no complex multiplication).
InstanceFile gen_noncm_cubic_power(int g);

// Product of two non-isogenous CM curves inside the 8th cyclotomic field:
// tau = diag(z^2, z + z^3) with z^4 = -1; the degree-4 showcase.
InstanceFile gen_cm_pair();

// Seeded random matrix over a named built-in field ("gaussian", "eisenstein",
// "cubic", "quartic", "zeta8", "disc7"); retries until validation certifies.
InstanceFile gen_random(const std::string& field_name, int g, std::uint64_t seed);

// Change of lattice basis by a seeded random unimodular matrix.
InstanceFile gen_transformed(const InstanceFile& base, std::uint64_t seed);

// Degree-16 showcase with Picard number zero: tau = i [[1, r2],[r3, r5]]
// encoded in Q(i + r2 + r3 + r5), r_k = sqrt(k).
InstanceFile builtin_rho_zero();

// Degree-6 common field Q(i, beta), beta a non-real root of x^3 - x - 1;
// used to compare non-isogenous elliptic curves inside one ambient field.
NumberField builtin_degree6_field(const NumberField::Options& opts = {});
FieldElement builtin_degree6_i(const NumberField& f);
FieldElement builtin_degree6_beta(const NumberField& f);

// --- report document ------------------------------------------------------

inline constexpr const char* kToolVersion = "0.1.0";

std::uint64_t fnv1a64(const std::string& data);

// Deterministic JSON document: provenance (input hash, version, precision)
// plus the serialized report.
std::string report_document(const AnalysisReport& rep, const std::string& input_text,
                            const std::string& label, long precision_bits);

std::string report_text(const AnalysisReport& rep, const std::string& label);

} // namespace tori

#endif
