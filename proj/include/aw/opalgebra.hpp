#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aw/sparse_operator.hpp"
#include "aw/uqrep.hpp"

namespace aw {

// The 21 named elements of AW(4). IQ* are the images of the five derived
// generators under the involution q -> 1/q, E <-> F.
enum class GeneratorLabel {
    Q0,
    Q1,
    Q2,
    Q3,
    Q4,
    Q12,
    Q23,
    Q34,
    Q123,
    Q234,
    Q1234,
    Q13,
    Q24,
    Q14,
    Q124,
    Q134,
    IQ13,
    IQ24,
    IQ14,
    IQ124,
    IQ134,
};

inline constexpr std::size_t kLabelCount = 21;

enum class Parity { Central, Bosonic, Fermionic };

const std::array<GeneratorLabel, kLabelCount> &all_labels();
// Q12, Q23, Q34, Q123, Q234 in compass order.
const std::array<GeneratorLabel, 5> &bosonic_labels();
// Q13, Q24, Q124, Q14, Q134: the derived generators, aligned with the
// directed compass edges Q12->Q23, Q23->Q34, Q34->Q123, Q123->Q234, Q234->Q12.
const std::array<GeneratorLabel, 5> &fermionic_labels();
// The 15 non-central generators: bosonic, fermionic, involuted fermionic.
const std::array<GeneratorLabel, 15> &noncentral_labels();

std::string_view name(GeneratorLabel label);
std::optional<GeneratorLabel> parse_label(std::string_view text);

// Bit i-1 set when leg i belongs to the label's index set; 0 for Q0.
unsigned subset_mask(GeneratorLabel label);
bool is_involuted(GeneratorLabel label);
Parity parity(GeneratorLabel label);
int max_leg(GeneratorLabel label);

// Q(A) for a subset mask; the involuted variant when requested and A is
// fermionic. Throws OutOfRange for masks with no label.
GeneratorLabel label_for_subset(unsigned mask, bool involuted = false);
std::string subset_name(unsigned mask);

GeneratorLabel involution(GeneratorLabel label);
std::vector<GeneratorLabel> involute_monomial(const std::vector<GeneratorLabel> &labels);

// [A, B]_q = q A B - q^{-1} B A
SparseOperator q_commutator(const Rational &q, const SparseOperator &a, const SparseOperator &b);
SparseOperator commutator(const SparseOperator &a, const SparseOperator &b);
SparseOperator anticommutator(const SparseOperator &a, const SparseOperator &b);

// Derived-generator definition: the q-commutator pair and the two central
// products subtracted from (q - q^{-1})^{-1} [left, right]_q.
struct DerivedDefinition {
    GeneratorLabel left;
    GeneratorLabel right;
    std::array<GeneratorLabel, 2> product1;
    std::array<GeneratorLabel, 2> product2;
};

DerivedDefinition derived_definition(GeneratorLabel fermionic);

// Operators for every label meaningful at the given leg count.
class GeneratorRegistry {
  public:
    GeneratorRegistry(RepParams params, BasisPtr basis);

    static GeneratorRegistry build(const RepParams &params);

    const RepParams &params() const { return params_; }
    const Rational &q() const { return params_.q; }
    const BasisPtr &basis() const { return basis_; }
    int legs() const { return params_.legs; }

    bool has(GeneratorLabel label) const { return table_.contains(label); }
    const SparseOperator &at(GeneratorLabel label) const;
    const SparseOperator &operator[](GeneratorLabel label) const { return at(label); }
    std::vector<GeneratorLabel> labels() const;

    // Evaluates a derived generator from the registry's bosonic/central
    // entries; `swapped` exchanges the q-commutator arguments.
    SparseOperator evaluate_definition(GeneratorLabel fermionic, bool swapped) const;

  private:
    RepParams params_;
    BasisPtr basis_;
    std::map<GeneratorLabel, SparseOperator> table_;
};

} // namespace aw
