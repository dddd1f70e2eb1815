// Classify a few interactions and print their spectral verdicts.

#include <cstdio>

#include "zrs/zrs.hpp"

using namespace zrs;

namespace {

void report(const char* name, const Interaction& i) {
    const SpectralClassification c = classify(build(i));
    std::printf("%-28s region %-12s %-20s poles %zu", name, to_string(c.region), to_string(c.similarity),
                c.poles.size());
    for (const auto& p : c.poles) {
        if (p.location.is_infinite()) {
            std::printf("  [inf]");
        } else {
            std::printf("  [k=%.4g%+.4gi order %d %s]", p.location.value().real(), p.location.value().imag(),
                        p.order, to_string(p.sheet));
        }
    }
    std::printf("\n");
}

} // namespace

int main() {
    const double pi = 3.14159265358979323846;
    report("delta a = -4", Interaction::from_abcd({-4.0, 0.0, 0.0, 0.0}));
    report("delta a = i", Interaction::from_abcd({I, 0.0, 0.0, 0.0}));
    report("delta' d = i", Interaction::from_abcd({0.0, 0.0, 0.0, I}));
    report("mixed b = 1 (constant S)", Interaction::from_abcd({0.0, 1.0, 0.0, 0.0}));
    for (double phi : {pi / 4, pi / 2, pi}) {
        const cplx e = std::exp(I * phi);
        char name[64];
        std::snprintf(name, sizeof name, "phase family phi = %.4f", phi);
        report(name, Interaction::from_abcd({-e, -1.0, 1.0, 1.0 / e}));
    }

    const Interaction m = Interaction::from_gamma({0.125, 0.25, 0.125 * I, 0.0});
    const MetricSpec spec = construct(m);
    std::printf("metric: alpha (%g, %g, %g), chi %.6f, residual %.2e\n", spec.alpha[0], spec.alpha[1],
                spec.alpha[2], spec.chi, verify_intertwining(m, spec).residual);
    return 0;
}
