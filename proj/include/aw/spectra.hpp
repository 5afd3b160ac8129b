#pragma once

#include <vector>

#include "aw/opalgebra.hpp"
#include "aw/relcheck.hpp"

namespace aw {

// Shifted Casimir eigenvalue on the irreducible component with lowest
// weight kappa: -(q^{2 kappa - 1} + q^{1 - 2 kappa}) / (q + q^{-1}).
Rational casimir_eigenvalue(const Rational &q, long kappa);
// (q^{2 kappa - 1} + q^{1 - 2 kappa} - 2) / (q^{-1} - q)^2
Rational casimir_eigenvalue_unshifted(const Rational &q, long kappa);

// lambda(k_A + x) for x = 0..weight.
std::vector<Rational> predicted_spectrum(const RepParams &p, IntervalLabel a, int weight);

// prod_x (Q^(A) - lambda(k_A + x)) vanishes on the weight block.
RelationReport check_annihilating(const GeneratorRegistry &reg, IntervalLabel a, int weight);
std::vector<RelationReport> check_spectra(const GeneratorRegistry &reg);

} // namespace aw
