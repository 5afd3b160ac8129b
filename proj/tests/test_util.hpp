#pragma once

#include <random>

#include "aw/sparse_operator.hpp"

namespace aw::testing {

inline Rational random_rational(std::mt19937 &rng, long magnitude = 50) {
    std::uniform_int_distribution<long> num(-magnitude, magnitude), den(1, magnitude);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero(std::mt19937 &rng, long magnitude = 50) {
    Rational r;
    do
        r = random_rational(rng, magnitude);
    while (r.is_zero());
    return r;
}

// Random block-diagonal operator with roughly `density` of each block filled.
inline SparseOperator random_block_operator(const BasisPtr &basis, std::mt19937 &rng, double density = 0.3) {
    SparseOperator op(basis, 0);
    std::bernoulli_distribution keep(density);
    for (int w = 0; w <= basis->nmax(); ++w) {
        auto r = basis->block(w);
        for (std::size_t j = r.begin; j < r.end; ++j)
            for (std::size_t i = r.begin; i < r.end; ++i)
                if (keep(rng))
                    op.add_entry(i, j, random_rational(rng));
    }
    return op;
}

// Random operator with arbitrary (mixed-weight) entries.
inline SparseOperator random_operator(const BasisPtr &basis, std::mt19937 &rng, double density = 0.1) {
    SparseOperator op(basis, std::nullopt);
    std::bernoulli_distribution keep(density);
    for (std::size_t j = 0; j < basis->size(); ++j)
        for (std::size_t i = 0; i < basis->size(); ++i)
            if (keep(rng))
                op.add_entry(i, j, random_rational(rng, 1000));
    return op;
}

} // namespace aw::testing
