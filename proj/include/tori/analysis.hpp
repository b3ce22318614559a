#ifndef TORI_ANALYSIS_HPP
#define TORI_ANALYSIS_HPP

#include "tori/torus.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tori {

struct AnalysisOptions {
    long precision_bits = 256;      // working ball precision
    long max_precision_bits = 4096; // escalation cap
    int search_bound = 2;           // polarization coefficient bound N
    int sample_count = 1000;        // random candidates when not exhaustive
};

struct PicardResult {
    int rho;
    int rank_T; // rank over Q of the rationalized membership system
};

// rho = 2g^2 - g - rank_Q(T).
PicardResult picard_number(const PeriodMatrix& p);

// Independent 2-dimensional route: 6 - dim_Q <1, tau11, tau12, tau21, tau22,
// det tau>. Throws WrongDimension unless g = 2.
int picard_g2_oracle(const PeriodMatrix& p);

// Integer kernel classes of the rationalized system, each verified to satisfy
// the defining identity exactly; size equals rho.
std::vector<NSClass> ns_basis(const PeriodMatrix& p);

// Degree over Q of the field generated by the entries of tau.
int extension_degree(const PeriodMatrix& p);

struct DijBounds {
    std::map<std::pair<int, int>, int> dij; // 0-based pairs i<j
    int bound_dij;                          // 2g^2 - g - sum dij
    Rat bound_degree;                       // g^2 - g(g-1)(d/2 - 1)
};

// Pairwise span-dimension lower bounds for rho. Throws WrongDimension for g<2.
DijBounds dij_bounds(const PeriodMatrix& p);

// rank_Z Hom(X, Y): rational kernel dimension of the hom system.
int hom_rank(const PeriodMatrix& p, const PeriodMatrix& q);
int end_rank(const PeriodMatrix& p);

struct Verdict {
    std::string name;
    bool applicable;
    bool pass; // true when not applicable
    std::string detail;
};

struct Polarization {
    bool found = false;
    std::vector<Int> coefficients; // w.r.t. the ns_basis order
    NSClass cls;
};

// Searches integer combinations of the basis for a class whose symmetric form
// E(J., .) is certified positive definite (leading principal minors in ball
// arithmetic). "not found" is not a proof of non-projectivity.
Polarization find_polarization(const PeriodMatrix& p, const std::vector<NSClass>& basis,
                               const AnalysisOptions& opts = {});

struct AnalysisReport {
    int g = 0;
    int rho = 0;
    int degree_d = 0;
    int rank_T = 0;
    std::vector<NSClass> ns_classes;
    int end_rank = 0;
    std::map<std::pair<int, int>, int> dij;
    int bound_dij = 0;
    Rat bound_degree;
    bool rho_maximal = false;
    std::vector<Verdict> consistency;
    Polarization polarization;

    bool all_verdicts_pass() const;
};

// Full report; a failed consistency verdict signals an implementation bug,
// never a property of the input.
AnalysisReport classify(const PeriodMatrix& p, const AnalysisOptions& opts = {});

struct DecompositionFactor {
    int dim;          // n_j >= 1
    int multiplicity; // k_j >= 1
    bool cm;          // meaningful only for dim 1
};

struct DecompositionDescriptor {
    std::vector<DecompositionFactor> factors;
    int total_dimension() const;
};

struct DecompositionReport {
    int g = 0;
    Int lemma_lhs;                 // 2 sum n k^2 (dim>=2) + sum k^2 (dim=1)
    bool lemma_holds = false;      // lhs <= g^2
    bool lemma_equality = false;   // lhs == g^2
    bool equality_shape = false;   // single factor with dim 2 or dim 1
    bool equality_characterized = false; // lemma_equality == equality_shape
    Int product_bound;             // (g(g+1) + sum_cm k(k-1)) / 2
    std::vector<Rat> factor_caps;  // n k (2k+1) / 2 per factor
};

// Arithmetic checkers on a user-supplied decomposition descriptor.
// Throws InvalidDescriptor.
DecompositionReport decomposition_bounds(const DecompositionDescriptor& d);

} // namespace tori

#endif
