// Small tour of the module tools on W(3,1): simplicity, composition series,
// isomorphisms between the standard families, and a JSON dump.

#include <iostream>

#include "modlie/modlie.hpp"

int main() {
    using namespace modlie;
    auto W = witt_algebra(3, 1);
    for (Scalar l = 0; l < 3; ++l) {
        Module V = verma(W, l);
        std::cout << V.label() << ": simple " << to_string(is_simple(V).simple) << ", factors";
        for (const auto& f : composition_series(V).factors) std::cout << " " << f.dim;
        std::cout << ", invariants " << invariants(V).dim() << "\n";
    }
    std::cout << "adjoint ~ V(1): " << to_string(is_isomorphic(adjoint_rep(W), verma(W, 1)).iso) << "\n";
    std::cout << "adjoint ~ dual: " << to_string(is_isomorphic(adjoint_rep(W), dual(adjoint_rep(W))).iso) << "\n";
    std::cout << "A(1) ~ V(2):    " << to_string(is_isomorphic(divided_power_module(W, 0), verma(W, 2)).iso) << "\n\n";
    std::cout << module_to_json(verma(W, 1), algebra_to_json(*W)).dump() << "\n";
}
