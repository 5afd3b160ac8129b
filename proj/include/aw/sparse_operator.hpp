#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aw/fockspace.hpp"
#include "aw/rational.hpp"

namespace aw {

using BasisPtr = std::shared_ptr<const TruncatedBasis>;

struct Entry {
    std::uint32_t row;
    Rational value;
};

using Column = std::vector<Entry>; // sorted by row, no stored zeros

// Location and value of one nonzero entry, used in residual diagnostics.
struct SampleEntry {
    std::size_t row;
    std::size_t col;
    Rational value;
};

// Exact linear operator on a truncated basis, stored column-compressed.
// weight_degree() is the common weight shift d of every entry
// (weight(row) = weight(col) + d), or nullopt when entries are mixed.
class SparseOperator {
  public:
    SparseOperator(BasisPtr basis, std::optional<int> weight_degree);

    static SparseOperator zero(BasisPtr basis, std::optional<int> weight_degree = 0);
    static SparseOperator identity(BasisPtr basis);
    static SparseOperator diagonal(BasisPtr basis, const std::vector<Rational> &values);

    const TruncatedBasis &basis() const { return *basis_; }
    const BasisPtr &basis_ptr() const { return basis_; }
    std::size_t dim() const { return columns_.size(); }
    std::optional<int> weight_degree() const { return degree_; }

    const Column &column(std::size_t j) const { return columns_[j]; }
    const std::vector<Column> &columns() const { return columns_; }

    // Replaces column j; zeros are dropped and rows sorted.
    void set_column(std::size_t j, Column col);
    // Accumulates value into (row, col).
    void add_entry(std::size_t row, std::size_t col, const Rational &value);

    Rational entry(std::size_t row, std::size_t col) const;
    std::size_t nnz() const;
    bool is_zero() const;
    std::optional<SampleEntry> first_nonzero() const;

    // Drops every column whose source state has weight above max_weight.
    SparseOperator restricted_to_weight(int max_weight) const;
    // Keeps only the columns of one weight block.
    SparseOperator restricted_to_block(int weight) const;
    // True when no entry connects states of different weight.
    bool is_block_diagonal() const;
    bool respects_degree() const;

    SparseOperator &operator+=(const SparseOperator &o);
    SparseOperator &operator-=(const SparseOperator &o);
    SparseOperator &operator*=(const Rational &s);

    friend SparseOperator operator+(SparseOperator a, const SparseOperator &b) { return a += b; }
    friend SparseOperator operator-(SparseOperator a, const SparseOperator &b) { return a -= b; }
    friend SparseOperator operator-(SparseOperator a) { return a *= Rational(-1); }
    friend SparseOperator operator*(SparseOperator a, const Rational &s) { return a *= s; }
    friend SparseOperator operator*(const Rational &s, SparseOperator a) { return a *= s; }
    friend SparseOperator operator*(const SparseOperator &a, const SparseOperator &b);

    friend bool operator==(const SparseOperator &a, const SparseOperator &b);

  private:
    void check_same_basis(const SparseOperator &o) const;
    void merge(const SparseOperator &o, bool subtract);

    BasisPtr basis_;
    std::optional<int> degree_;
    std::vector<Column> columns_;
};

// Product kernels. multiply() dispatches to the common-denominator kernel;
// the per-entry reference kernel stays available for equivalence tests.
SparseOperator multiply_reference(const SparseOperator &a, const SparseOperator &b);
SparseOperator multiply_fraction_free(const SparseOperator &a, const SparseOperator &b);

bool same_basis(const TruncatedBasis &a, const TruncatedBasis &b);

} // namespace aw
