#include "aw/fockspace.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "aw/error.hpp"

namespace aw {

namespace {

constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

// All compositions of `weight` into `legs` nonnegative parts, lexicographic.
void compositions(int legs, int weight, std::vector<int> &prefix, std::vector<MultiIndex> &out) {
    if (static_cast<int>(prefix.size()) == legs - 1) {
        prefix.push_back(weight);
        out.push_back(MultiIndex{prefix});
        prefix.pop_back();
        return;
    }
    for (int n = 0; n <= weight; ++n) {
        prefix.push_back(n);
        compositions(legs, weight - n, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

int MultiIndex::weight() const { return std::accumulate(occupations.begin(), occupations.end(), 0); }

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

TruncatedBasis::TruncatedBasis(int legs, int nmax) : legs_(legs), nmax_(nmax) {
    if (legs < kMinLegs || legs > kMaxLegs)
        throw InvalidConfig("legs must be in {2,3,4}, got " + std::to_string(legs));
    if (nmax < 1)
        throw InvalidConfig("nmax must be >= 1, got " + std::to_string(nmax));

    block_offsets_.push_back(0);
    std::vector<int> prefix;
    for (int w = 0; w <= nmax; ++w) {
        compositions(legs, w, prefix, states_);
        block_offsets_.push_back(states_.size());
    }
    weights_.reserve(states_.size());
    for (const auto &s : states_)
        weights_.push_back(s.weight());

    std::size_t table = 1;
    for (int i = 0; i < legs; ++i)
        table *= static_cast<std::size_t>(nmax + 1);
    lookup_.assign(table, kAbsent);
    for (std::size_t i = 0; i < states_.size(); ++i)
        lookup_[encode(states_[i].occupations)] = i;
}

IndexRange TruncatedBasis::block(int weight) const {
    if (weight < 0 || weight > nmax_)
        throw OutOfRange("weight " + std::to_string(weight) + " outside [0, " +
                         std::to_string(nmax_) + "]");
    return {block_offsets_[weight], block_offsets_[weight + 1]};
}

std::size_t TruncatedBasis::encode(std::span<const int> occupations) const {
    std::size_t key = 0;
    for (int n : occupations)
        key = key * static_cast<std::size_t>(nmax_ + 1) + static_cast<std::size_t>(n);
    return key;
}

bool TruncatedBasis::contains(std::span<const int> occupations) const {
    if (static_cast<int>(occupations.size()) != legs_)
        return false;
    int total = 0;
    for (int n : occupations) {
        if (n < 0)
            return false;
        total += n;
    }
    return total <= nmax_;
}

std::size_t TruncatedBasis::index_of(std::span<const int> occupations) const {
    if (!contains(occupations))
        throw OutOfRange("multi-index outside the truncated basis");
    return lookup_[encode(occupations)];
}

std::size_t TruncatedBasis::index_of(const MultiIndex &m) const { return index_of(std::span<const int>(m.occupations)); }

TruncatedBasis enumerate(int legs, int nmax) { return TruncatedBasis(legs, nmax); }

} // namespace aw
