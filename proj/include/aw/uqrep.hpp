#pragma once

#include <string>
#include <vector>

#include "aw/fockspace.hpp"
#include "aw/rational.hpp"
#include "aw/sparse_operator.hpp"

namespace aw {

// Specialization of the quantum group data: rational q, integer lowest
// weights k_i, number of tensor legs and truncation level.
struct RepParams {
    Rational q;
    std::vector<int> k;
    int legs = 4;
    int nmax = 6;

    // Throws InvalidConfig when any invariant is violated.
    void validate() const;
    int k_sum(int lo, int hi) const;
};

// Consecutive leg set {lo, ..., hi}, 1-based.
struct IntervalLabel {
    int lo;
    int hi;

    int size() const { return hi - lo + 1; }
    bool contains(int leg) const { return lo <= leg && leg <= hi; }
    std::string str() const;
    friend bool operator==(const IntervalLabel &, const IntervalLabel &) = default;
};

enum class Generator { E, F, K, Kinv };

const char *to_string(Generator g);

// Coefficient of E e_n = A_n e_{n+1} in the square-root-free gauge
// (F e_n = e_{n-1}).
Rational raising_coefficient(const Rational &q, int k, int n);

SparseOperator primitive_generator(const RepParams &p, const BasisPtr &basis, int leg, Generator which);

// Generator of the sub-Hopf-algebra acting on the legs of `interval`, from
// the iterated coproduct Delta(E) = K (x) E + E (x) K^{-1}:
//   E^(A) = sum_i (prod_{j<i} K_j) E_i (prod_{j>i} K_j^{-1}).
SparseOperator interval_generator(const RepParams &p, const BasisPtr &basis, IntervalLabel interval, Generator which);

enum class Coupling { Left, Right };

// Same operator assembled by applying the two-fold coproduct recursively,
// coupling one leg at a time from the left, (Delta (x) id) Delta, or from
// the right, (id (x) Delta) Delta.
SparseOperator iterated_coproduct(const RepParams &p, const BasisPtr &basis, IntervalLabel interval, Generator which,
                                  Coupling coupling);

// Shifted Casimir  -(q^{-1} K^2 + q K^{-2} + (q - q^{-1})^2 E F) / (q + q^{-1}).
SparseOperator casimir(const RepParams &p, const BasisPtr &basis, IntervalLabel interval);

// Unshifted Casimir (q^{-1} K^2 + q K^{-2} - 2) / (q - q^{-1})^2 + E F.
SparseOperator casimir_unshifted(const RepParams &p, const BasisPtr &basis, IntervalLabel interval);

// Maps an unshifted Casimir (operator) to the shifted normalization:
//   shifted = -((q - q^{-1})^2 unshifted + 2) / (q + q^{-1}).
SparseOperator shift_casimir(const Rational &q, const SparseOperator &unshifted);

} // namespace aw
