// Build the standard single-mode connection and print its Chern-Simons
// action for all three Dirac operators, closed form against the engine.

#include <cstdio>

#include "s3theta/s3theta.hpp"

using namespace s3theta;

int main() {
    auto ctx = make_context((std::sqrt(5.0) - 1.0) / 2.0);
    const Complex a10{0.45, 0.3}, b10{-0.6, 0.55};
    const AlgElement a = reversed_monomial(ctx, 1, 0, a10) +
                         reversed_monomial(ctx, -1, 0, std::conj(a10));
    const AlgElement b = AlgElement::monomial(ctx, 1, 0, b10);

    for (DiracId id : {DiracId::D1, DiracId::D2, DiracId::D3}) {
        const Dirac D(id, ctx);
        const Connection conn = make_connection({{a, b}}, D);
        const TrigCoeff closed = cs_action_closed(D, a, b);
        const TrigCoeff engine = cs_action_engine(D, conn);
        std::printf("%s: closed = %s\n", to_string(id).c_str(), closed.str().c_str());
        std::printf("    engine agrees within %.2e\n",
                    sampled_distance(closed, engine, *ctx));
    }
    return 0;
}
