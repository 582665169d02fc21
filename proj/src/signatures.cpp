#include "maslov/signatures.hpp"

#include "maslov/errors.hpp"

namespace maslov {

int sip_coindex(int size, int epsilon) {
    return epsilon > 0 ? (size + 1) / 2 : size / 2;
}

int sip_index(int size, int epsilon) {
    return size - sip_coindex(size, epsilon);
}

JordanSignatures jordan_signatures(std::span<const CanonicalBlock> blocks) {
    if (blocks.empty())
        throw validation_error("jordan signatures: empty block list");
    const double lambda = blocks.front().lambda;
    JordanSignatures out;
    for (const CanonicalBlock& b : blocks) {
        if (b.lambda != lambda)
            throw validation_error("jordan signatures: blocks mix eigenvalues");
        BlockSignature s;
        s.size = b.size;
        s.epsilon = b.epsilon;
        const int n = b.size;
        if (n % 2 == 0) {
            s.varsigma = n / 2;
            s.varrho = b.epsilon > 0 ? n / 2 - 1 : n / 2;
        } else {
            s.varsigma = b.epsilon > 0 ? (n - 1) / 2 : (n + 1) / 2;
            s.varrho = (n - 1) / 2;
        }
        const int parity = (n % 2 == 0) ? -1 : 1; // (-1)^{n+1}
        s.tau = (1 + b.epsilon * parity) / 2;
        out.varsigma += s.varsigma;
        out.varrho += s.varrho;
        out.tau += s.tau;
        out.per_block.push_back(s);
    }
    return out;
}

} // namespace maslov
