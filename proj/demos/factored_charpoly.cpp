// Print the factored multiparameter characteristic polynomial of a few small
// modules: each Weyl-orbit factor in the invariant generators, then the
// expanded product.

#include <iostream>

#include "liechar/orbital_factor.hpp"

using namespace liechar;

static void show(const char* type, const Weight& lambda, bool paper_names) {
    const RootSystem rs = build(parse_lie_type(type));
    const auto fc = assemble(rs, {lambda});

    VarNames names;
    names.paper_a2 = paper_names;

    std::cout << type << ", highest weight " << lambda.str() << ", dimension "
              << fc.total_degree().str() << "\n";
    for (const auto& [f, m] : fc.factors) {
        std::cout << "  f" << f.mu.str() << " = " << f.poly.text(names);
        if (m != 1) std::cout << "    (multiplicity " << m.str() << ")";
        std::cout << "\n";
    }
    std::cout << "  expanded: " << fc.expand().text(names) << "\n\n";
}

int main() {
    show("A2", Weight({1, 1}), true);   // adjoint module of sl(3)
    show("B2", Weight({0, 2}), false);  // adjoint module of so(5)
    show("G2", Weight({1, 0}), false);  // the 7-dimensional module
    return 0;
}
