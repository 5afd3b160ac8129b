#include "aw/opalgebra.hpp"

#include <algorithm>
#include <bit>

#include "aw/error.hpp"

namespace aw {

namespace {

struct LabelInfo {
    GeneratorLabel label;
    std::string_view name;
    unsigned mask;
    bool involuted;
};

using L = GeneratorLabel;

constexpr std::array<LabelInfo, kLabelCount> kInfo{{
    {L::Q0, "Q0", 0b0000, false},      {L::Q1, "Q1", 0b0001, false},       {L::Q2, "Q2", 0b0010, false},
    {L::Q3, "Q3", 0b0100, false},      {L::Q4, "Q4", 0b1000, false},       {L::Q12, "Q12", 0b0011, false},
    {L::Q23, "Q23", 0b0110, false},    {L::Q34, "Q34", 0b1100, false},     {L::Q123, "Q123", 0b0111, false},
    {L::Q234, "Q234", 0b1110, false},  {L::Q1234, "Q1234", 0b1111, false}, {L::Q13, "Q13", 0b0101, false},
    {L::Q24, "Q24", 0b1010, false},    {L::Q14, "Q14", 0b1001, false},     {L::Q124, "Q124", 0b1011, false},
    {L::Q134, "Q134", 0b1101, false},  {L::IQ13, "IQ13", 0b0101, true},    {L::IQ24, "IQ24", 0b1010, true},
    {L::IQ14, "IQ14", 0b1001, true},   {L::IQ124, "IQ124", 0b1011, true},  {L::IQ134, "IQ134", 0b1101, true},
}};

const LabelInfo &info(GeneratorLabel label) { return kInfo[static_cast<std::size_t>(label)]; }

bool is_consecutive(unsigned mask) {
    if (mask == 0)
        return false;
    unsigned shifted = mask >> std::countr_zero(mask);
    return (shifted & (shifted + 1)) == 0;
}

} // namespace

const std::array<GeneratorLabel, kLabelCount> &all_labels() {
    static const auto labels = [] {
        std::array<GeneratorLabel, kLabelCount> out{};
        for (std::size_t i = 0; i < kLabelCount; ++i)
            out[i] = kInfo[i].label;
        return out;
    }();
    return labels;
}

const std::array<GeneratorLabel, 5> &bosonic_labels() {
    static constexpr std::array<GeneratorLabel, 5> labels{L::Q12, L::Q23, L::Q34, L::Q123, L::Q234};
    return labels;
}

const std::array<GeneratorLabel, 5> &fermionic_labels() {
    static constexpr std::array<GeneratorLabel, 5> labels{L::Q13, L::Q24, L::Q124, L::Q14, L::Q134};
    return labels;
}

const std::array<GeneratorLabel, 15> &noncentral_labels() {
    static constexpr std::array<GeneratorLabel, 15> labels{
        L::Q12,  L::Q23,  L::Q34,  L::Q123, L::Q234,  L::Q13,  L::Q24,  L::Q124,
        L::Q14,  L::Q134, L::IQ13, L::IQ24, L::IQ124, L::IQ14, L::IQ134,
    };
    return labels;
}

std::string_view name(GeneratorLabel label) { return info(label).name; }

std::optional<GeneratorLabel> parse_label(std::string_view text) {
    for (const auto &i : kInfo)
        if (i.name == text)
            return i.label;
    // Bare index strings as printed in the master tables: "0", "12", ...
    if (!text.empty() && text.front() != 'Q' && text.front() != 'I') {
        std::string prefixed = "Q" + std::string(text);
        for (const auto &i : kInfo)
            if (i.name == prefixed)
                return i.label;
    }
    return std::nullopt;
}

unsigned subset_mask(GeneratorLabel label) { return info(label).mask; }

bool is_involuted(GeneratorLabel label) { return info(label).involuted; }

Parity parity(GeneratorLabel label) {
    const unsigned m = subset_mask(label);
    if (m == 0 || std::popcount(m) == 1 || m == 0b1111)
        return Parity::Central;
    return is_consecutive(m) ? Parity::Bosonic : Parity::Fermionic;
}

int max_leg(GeneratorLabel label) {
    const unsigned m = subset_mask(label);
    return m == 0 ? 0 : std::bit_width(m);
}

GeneratorLabel label_for_subset(unsigned mask, bool involuted) {
    for (const auto &i : kInfo)
        if (i.mask == mask && !i.involuted) {
            if (involuted && parity(i.label) == Parity::Fermionic)
                return involution(i.label);
            return i.label;
        }
    throw OutOfRange("no generator for subset mask " + std::to_string(mask));
}

std::string subset_name(unsigned mask) {
    std::string s;
    for (int leg = 1; leg <= 4; ++leg)
        if (mask & (1u << (leg - 1)))
            s += std::to_string(leg);
    return s.empty() ? "0" : s;
}

GeneratorLabel involution(GeneratorLabel label) {
    if (parity(label) != Parity::Fermionic)
        return label;
    const unsigned m = subset_mask(label);
    const bool flip = !is_involuted(label);
    for (const auto &i : kInfo)
        if (i.mask == m && i.involuted == flip)
            return i.label;
    return label;
}

std::vector<GeneratorLabel> involute_monomial(const std::vector<GeneratorLabel> &labels) {
    std::vector<GeneratorLabel> out;
    out.reserve(labels.size());
    std::transform(labels.begin(), labels.end(), std::back_inserter(out), involution);
    return out;
}

SparseOperator q_commutator(const Rational &q, const SparseOperator &a, const SparseOperator &b) {
    return q * (a * b) - q.inv() * (b * a);
}

SparseOperator commutator(const SparseOperator &a, const SparseOperator &b) { return a * b - b * a; }

SparseOperator anticommutator(const SparseOperator &a, const SparseOperator &b) { return a * b + b * a; }

DerivedDefinition derived_definition(GeneratorLabel fermionic) {
    switch (is_involuted(fermionic) ? involution(fermionic) : fermionic) {
    case L::Q13:
        return {L::Q12, L::Q23, {L::Q1, L::Q3}, {L::Q2, L::Q123}};
    case L::Q24:
        return {L::Q23, L::Q34, {L::Q2, L::Q4}, {L::Q3, L::Q234}};
    case L::Q124:
        return {L::Q34, L::Q123, {L::Q12, L::Q4}, {L::Q3, L::Q1234}};
    case L::Q14:
        return {L::Q123, L::Q234, {L::Q1, L::Q4}, {L::Q23, L::Q1234}};
    case L::Q134:
        return {L::Q234, L::Q12, {L::Q1, L::Q34}, {L::Q2, L::Q1234}};
    default:
        throw InvalidConfig(std::string(name(fermionic)) + " is not a derived generator");
    }
}

GeneratorRegistry::GeneratorRegistry(RepParams params, BasisPtr basis)
    : params_(std::move(params)), basis_(std::move(basis)) {
    params_.validate();
    if (basis_->legs() != params_.legs || basis_->nmax() != params_.nmax)
        throw InvalidConfig("basis does not match parameters");

    table_.emplace(L::Q0, -SparseOperator::identity(basis_));
    for (GeneratorLabel label : all_labels()) {
        const unsigned m = subset_mask(label);
        if (m == 0 || max_leg(label) > params_.legs || parity(label) == Parity::Fermionic)
            continue;
        const int lo = std::countr_zero(m) + 1;
        table_.emplace(label, casimir(params_, basis_, IntervalLabel{lo, max_leg(label)}));
    }
    for (GeneratorLabel label : fermionic_labels()) {
        DerivedDefinition def = derived_definition(label);
        const bool available = has(def.left) && has(def.right) && has(def.product1[0]) && has(def.product1[1]) &&
                               has(def.product2[0]) && has(def.product2[1]);
        if (!available)
            continue;
        table_.emplace(label, evaluate_definition(label, false));
        table_.emplace(involution(label), evaluate_definition(label, true));
    }
}

GeneratorRegistry GeneratorRegistry::build(const RepParams &params) {
    params.validate();
    return GeneratorRegistry(params, std::make_shared<const TruncatedBasis>(params.legs, params.nmax));
}

const SparseOperator &GeneratorRegistry::at(GeneratorLabel label) const {
    auto it = table_.find(label);
    if (it == table_.end())
        throw OutOfRange(std::string(name(label)) + " is not available for legs=" + std::to_string(params_.legs));
    return it->second;
}

std::vector<GeneratorLabel> GeneratorRegistry::labels() const {
    std::vector<GeneratorLabel> out;
    for (const auto &[label, op] : table_)
        out.push_back(label);
    return out;
}

SparseOperator GeneratorRegistry::evaluate_definition(GeneratorLabel fermionic, bool swapped) const {
    const DerivedDefinition def = derived_definition(fermionic);
    const Rational &q = params_.q;
    const SparseOperator &a = at(swapped ? def.right : def.left);
    const SparseOperator &b = at(swapped ? def.left : def.right);
    return (q - q.inv()).inv() * q_commutator(q, a, b) - at(def.product1[0]) * at(def.product1[1]) -
           at(def.product2[0]) * at(def.product2[1]);
}

} // namespace aw
