// Walks one component of the coupling graph: starting from a characteristic
// number, climbs to the canonical generator, enumerates the component, and
// prints each class with its representative and couplings.

#include <iostream>

#include "cycubic/cycubic.hpp"

int main(int argc, char** argv) {
    using namespace cycubic;

    Rational k = argc > 1 ? parse_rational(argv[1]) : Rational(270);
    std::cout << "start:     " << k << "\n";
    std::cout << "generator: " << generator(k) << "\n\n";

    SuperclassGraph graph = enumerate_superclass(k, 8);
    for (const auto& node : graph.nodes) {
        Poly rep = rep_from_k(node.k).poly();
        std::cout << "k = " << node.k << "\n";
        std::cout << "  representative " << format_poly(rep)
                  << (node.reducible ? "  (reducible)" : "") << "\n";
        auto coupled_k = coupled_char_numbers(node.k);
        std::cout << "  couples to k = " << coupled_k.k1;
        if (coupled_k.k2) std::cout << " and k = " << *coupled_k.k2;
        std::cout << "\n";
        if (!node.reducible) {
            auto [p1, p2] = coupled_pair(rep);
            std::cout << "  coupled cubics " << format_poly(p1) << "  |  " << format_poly(p2)
                      << "\n";
        }
        std::cout << "\n";
    }
    std::cout << to_dot(graph);
    return 0;
}
