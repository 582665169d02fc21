#pragma once

#include <vector>

#include "maslov/jordan.hpp"

namespace maslov {

/// One (lambda, k) source of a conjugate or nontransversal instant.
struct Contributor {
    double lambda = 0.0; ///< real negative eigenvalue
    int k = 0;           ///< positive integer with t = k pi / sqrt(|lambda|)
};

/// A conjugate instant of v'' = A v with its contributors merged.
struct ConjugateInstant {
    double t = 0.0;
    std::vector<Contributor> contributors;
    int multiplicity = 0;  ///< sum of geometric multiplicities
    bool degenerate = false; ///< some contributor has algebraic != geometric
    bool is_final = false;   ///< |t - T| <= merge_rel * T
};

/// All instants k pi / sqrt(|lambda|) <= T (1 + merge_rel) over the real
/// negative spectrum, coinciding instants merged, ascending.
std::vector<ConjugateInstant>
conjugate_instants(const GSymmetricSystem& system,
                   const std::vector<EigenvalueRecord>& spectrum,
                   const Tolerances& tol = {});

/// The count formula: sum over real negative lambda of
/// geometric(lambda) * [[ T sqrt(|lambda|) / pi ]], evaluated with the same
/// inclusion rule as conjugate_instants.
long count_formula(const std::vector<EigenvalueRecord>& spectrum, double T,
                   double merge_rel = Tolerances{}.merge_rel);

} // namespace maslov
