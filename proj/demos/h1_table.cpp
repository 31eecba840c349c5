// Prints dim H^1 of W(p,m) and of its minimal p-envelope with coefficients in
// every V(lambda), plus the restricted H^1 of the envelope.
//   usage: h1_table [p] [m]

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "modlie/modlie.hpp"

int main(int argc, char** argv) {
    using namespace modlie;
    const int p = argc > 1 ? std::atoi(argv[1]) : 5;
    const int m = argc > 2 ? std::atoi(argv[2]) : 2;
    try {
        auto W = witt_algebra(p, m);
        Envelope E = restricted_zassenhaus(W);
        std::cout << "W(" << p << "," << m << "): dim " << W->dim() << ", envelope dim " << E.env->dim() << "\n\n";
        std::cout << "lambda   H^1(W,V)   H^1(Wp,V)   H^1_*(Wp,V)\n";
        for (Scalar l = 0; l < static_cast<Scalar>(p); ++l) {
            Module V = verma(W, l);
            Module Ve = extend_to_envelope(V, E);
            std::cout << std::setw(6) << l << std::setw(11) << cohomology_dims(*W, V, 1).dims[1] << std::setw(12)
                      << cohomology_dims(*E.env, Ve, 1).dims[1] << std::setw(14) << restricted_h1(*E.env, *E.env->pmap(), Ve) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
