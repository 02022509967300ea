// Minimal tour of the lattice-parity machinery: one explicit rotation, one
// random Cayley instance, and the real-quadratic-field consequence.

#include "weilcheck/weilcheck.hpp"

#include <iostream>

using namespace weilcheck;

int main() {
    // the 3-4-5 rotation is orthogonal for the standard pairing and has a
    // denominator at 5: the two parity contributions cancel
    LatticeInstance rot{2, 5, identity_mat(2), {{Rat(3, 5), Rat(-4, 5)}, {Rat(4, 5), Rat(3, 5)}}, 0};
    ParityWitness w = parity_witness(rot);
    std::cout << "rotation at p=5: ell(sigma H + H / H) = " << w.ell_sigma
              << ", nu(det(1-sigma)) = " << *w.nu_det_1_minus
              << ", sum is even: " << std::boolalpha << assert_cor_det(rot) << "\n";

    LatticeInstance inst = random_orthogonal(4, 7, 2024);
    std::cout << "random rank-4 instance at p=7 satisfies the parity identity: " << assert_cor_det(inst)
              << "\n";

    for (long d : {3L, 5L, 199L}) {
        QuadraticUnitReport r = quadratic_unit_demo(d);
        std::cout << "D=" << d << ": 2 - tr(eps) = " << r.value.str() << ", square class "
                  << r.value_class.str() << ", conforms: " << r.conforms << "\n";
    }
    return 0;
}
