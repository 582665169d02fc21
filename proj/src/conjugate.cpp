#include "maslov/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace maslov {

namespace {

int max_k(double lambda, double T, double merge_rel) {
    const double alpha = std::sqrt(std::abs(lambda));
    return static_cast<int>(std::floor(T * alpha * (1.0 + merge_rel) / std::numbers::pi));
}

} // namespace

std::vector<ConjugateInstant>
conjugate_instants(const GSymmetricSystem& system,
                   const std::vector<EigenvalueRecord>& spectrum,
                   const Tolerances& tol) {
    const double T = system.T;
    struct Raw {
        double t;
        Contributor c;
        bool degenerate;
        int geometric;
    };
    std::vector<Raw> raw;
    for (const EigenvalueRecord& rec : spectrum) {
        if (!rec.is_real || !(rec.value.real() < 0.0)) continue;
        const double lambda = rec.value.real();
        const double alpha = std::sqrt(-lambda);
        const int kmax = max_k(lambda, T, tol.merge_rel);
        for (int k = 1; k <= kmax; ++k) {
            Raw r;
            r.t = k * std::numbers::pi / alpha;
            r.c = {lambda, k};
            r.degenerate = rec.algebraic != rec.geometric;
            r.geometric = rec.geometric;
            raw.push_back(r);
        }
    }
    std::sort(raw.begin(), raw.end(),
              [](const Raw& a, const Raw& b) { return a.t < b.t; });

    std::vector<ConjugateInstant> out;
    const double merge = tol.merge_rel * T;
    for (const Raw& r : raw) {
        if (!out.empty() && std::abs(out.back().t - r.t) <= merge) {
            ConjugateInstant& last = out.back();
            last.contributors.push_back(r.c);
            last.multiplicity += r.geometric;
            last.degenerate = last.degenerate || r.degenerate;
        } else {
            ConjugateInstant inst;
            inst.t = r.t;
            inst.contributors = {r.c};
            inst.multiplicity = r.geometric;
            inst.degenerate = r.degenerate;
            out.push_back(inst);
        }
    }
    for (ConjugateInstant& inst : out)
        inst.is_final = std::abs(inst.t - T) <= merge;
    return out;
}

long count_formula(const std::vector<EigenvalueRecord>& spectrum, double T,
                   double merge_rel) {
    long total = 0;
    for (const EigenvalueRecord& rec : spectrum) {
        if (!rec.is_real || !(rec.value.real() < 0.0)) continue;
        total += static_cast<long>(rec.geometric) *
                 max_k(rec.value.real(), T, merge_rel);
    }
    return total;
}

} // namespace maslov
