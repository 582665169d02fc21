#pragma once

#include <span>
#include <vector>

#include "maslov/jordan.hpp"

namespace maslov {

/// Per-block Jordan signature data (n_i, epsilon_i, varsigma_i, varrho_i, tau_i).
struct BlockSignature {
    int size = 0;
    int epsilon = 0;
    int varsigma = 0;
    int varrho = 0;
    int tau = 0;
};

/// The Jordan signatures of one real eigenvalue: sums of the per-block
/// closed-form values. varsigma equals the index of g restricted to the
/// generalized eigenspace; tau is the final-instant Maslov contribution.
struct JordanSignatures {
    int varsigma = 0;
    int varrho = 0;
    int tau = 0;
    std::vector<BlockSignature> per_block;
};

/// Closed-form per-block signatures:
///   varsigma_i = n/2 (n even), (n -+ 1)/2 by the sign of epsilon (n odd);
///   varrho_i   = (n-1)/2 (n odd), n/2 - 1 or n/2 by the sign of epsilon (n even);
///   tau_i      = (1 + epsilon * (-1)^{n+1}) / 2.
/// All blocks must share one eigenvalue.
JordanSignatures jordan_signatures(std::span<const CanonicalBlock> blocks);

/// Coindex of epsilon * Sip_n: ceil(n/2) for epsilon > 0, floor(n/2) otherwise.
int sip_coindex(int size, int epsilon);

/// Index of epsilon * Sip_n (the complementary count).
int sip_index(int size, int epsilon);

} // namespace maslov
