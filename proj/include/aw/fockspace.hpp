#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace aw {

// Occupation numbers (n_1, ..., n_legs) of one tensor-product basis vector.
struct MultiIndex {
    std::vector<int> occupations;

    int weight() const;
    std::size_t legs() const { return occupations.size(); }
    friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
    friend auto operator<=>(const MultiIndex &, const MultiIndex &) = default;
};

struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const { return end - begin; }
};

// Truncated basis of the legs-fold tensor product: all states with total
// weight at most nmax, ordered by ascending weight and then
// lexicographically, so every weight block is a contiguous index range.
class TruncatedBasis {
  public:
    static constexpr int kMinLegs = 2;
    static constexpr int kMaxLegs = 4;

    TruncatedBasis(int legs, int nmax);

    int legs() const { return legs_; }
    int nmax() const { return nmax_; }
    std::size_t size() const { return states_.size(); }

    const std::vector<MultiIndex> &states() const { return states_; }
    const MultiIndex &state(std::size_t i) const { return states_.at(i); }
    int weight_of(std::size_t i) const { return weights_[i]; }
    std::span<const int> weights() const { return weights_; }

    IndexRange block(int weight) const;

    // Throws OutOfRange for states outside the truncation.
    std::size_t index_of(const MultiIndex &m) const;
    std::size_t index_of(std::span<const int> occupations) const;
    bool contains(std::span<const int> occupations) const;

  private:
    std::size_t encode(std::span<const int> occupations) const;

    int legs_;
    int nmax_;
    std::vector<MultiIndex> states_;
    std::vector<int> weights_;
    std::vector<std::size_t> block_offsets_; // nmax + 2 entries
    std::vector<std::size_t> lookup_;        // dense (nmax+1)^legs table
};

TruncatedBasis enumerate(int legs, int nmax);

std::size_t binomial(int n, int k);

} // namespace aw
