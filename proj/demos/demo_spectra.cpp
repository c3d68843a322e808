// Print the Dirac spectrum, the located dimension spectrum and the truncated
// partition function at the golden-ratio deformation angle.

#include <cstdio>

#include "s3theta/s3theta.hpp"

using namespace s3theta;

int main() {
    const double theta = (std::sqrt(5.0) - 1.0) / 2.0;
    auto ctx = make_context(theta);

    const Dirac D1(DiracId::D1, ctx);
    std::printf("first Dirac operator, lowest levels:\n");
    for (const auto& row : D1.spectrum(3))
        std::printf("  eigenvalue %+.1f  multiplicity %ld\n", row.eigenvalue, row.multiplicity);

    for (DiracId id : {DiracId::D1, DiracId::D2, DiracId::D3}) {
        const auto poles = dimension_spectrum_probe(Dirac(id, ctx), 0.2, 4.8);
        std::printf("%s dimension spectrum:", to_string(id).c_str());
        for (const auto& p : poles) std::printf("  %.6f (order %d)", p.position, p.order);
        std::printf("\n");
    }

    const PartitionResult z = partition_modewise(1, theta, 20);
    std::printf("Z'(1) truncated at N = 20: %.6f %+.6f i\n", z.value.real(), z.value.imag());
    std::printf("classical S3 benchmark Z(1) = %.6f\n", classical_partition(1));
    return 0;
}
