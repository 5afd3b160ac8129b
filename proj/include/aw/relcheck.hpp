#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aw/opalgebra.hpp"
#include "aw/sparse_operator.hpp"
#include "aw/uqrep.hpp"

namespace aw {

struct ResidualSummary {
    std::size_t nonzero = 0;
    std::string sample; // "(row, col) = value" with states spelled out, empty when zero
};

struct RelationReport {
    std::string id;
    std::string kind;
    std::vector<std::pair<std::string, std::string>> inputs;
    bool pass = false;
    ResidualSummary residual;
    std::string note;
    // Informational reports never affect the exit status.
    bool informational = false;
};

// pass iff the residual is exactly zero.
RelationReport make_report(std::string id, std::string kind, std::vector<std::pair<std::string, std::string>> inputs,
                           const SparseOperator &residual);
ResidualSummary summarize(const SparseOperator &residual);

// Disjoint nonempty subsets (i, j, k) of {1,2,3,4}, stored as bit masks,
// with at most one doubleton. Canonical form: for three singletons the
// rotation with i < j < k; otherwise the rotation with j the doubleton.
struct AllowableTriple {
    unsigned i;
    unsigned j;
    unsigned k;

    std::string str() const;
    friend bool operator==(const AllowableTriple &, const AllowableTriple &) = default;
};

bool is_allowable(unsigned i, unsigned j, unsigned k);
std::optional<AllowableTriple> canonical_allowable(unsigned i, unsigned j, unsigned k);
std::vector<AllowableTriple> enumerate_allowable();
// Number of consecutive (bosonic) sets among ij, jk, ki.
int bosonic_pair_count(const AllowableTriple &t);

struct MasterRow {
    std::string table; // "table1" or "table2"
    int row = 0;       // 1-based within its table
    std::array<GeneratorLabel, 3> abc;
    std::array<GeneratorLabel, 3> alpha_beta_gamma;
    std::array<GeneratorLabel, 3> xyz;

    std::string id() const;
};

const std::vector<MasterRow> &master_rows();
const MasterRow &find_master_row(const std::string &table, int row);
// Parses the tables file format (see data/master_tables.csv).
std::vector<MasterRow> parse_master_tables(const std::string &text);
const std::string &embedded_master_tables();

// Relation suites -------------------------------------------------------

std::vector<RelationReport> check_defining_relations(const RepParams &p, const BasisPtr &basis);
std::vector<RelationReport> check_coassociativity(const RepParams &p, const BasisPtr &basis);
// [Q^(A), X^(B)] = 0 for consecutive A within B and X in {E, F, K}.
std::vector<RelationReport> check_casimir_centrality(const RepParams &p, const BasisPtr &basis);

// Commuting pairs among singletons, consecutive sets and the total set.
std::vector<RelationReport> check_prop1(const GeneratorRegistry &reg);
// The bosonic pairs whose commutator is nonzero, in compass order.
std::vector<std::pair<GeneratorLabel, GeneratorLabel>> noncommuting_bosonic_pairs(const GeneratorRegistry &reg);
// Single report: the non-commuting bosonic pairs are exactly the 5-cycle.
RelationReport check_noncommuting_cycle(const GeneratorRegistry &reg);

std::vector<RelationReport> check_prop2(const GeneratorRegistry &reg);

// Involution assignment for the generator slots of one symmetric relation.
struct Orientation {
    bool left_involuted = false;
    bool right_involuted = false;
    bool reversed_monomials = false;

    std::string str() const;
};

// Tries the default orientation first, then every involution assignment of
// the fermionic left-hand slots, then the same with reversed monomial
// factors. Returns the first assignment for which holds() is true.
template <class Holds>
std::optional<Orientation> search_orientation(bool left_fermionic, bool right_fermionic, Holds &&holds) {
    for (bool reversed : {false, true})
        for (unsigned bits = 0; bits < 4; ++bits) {
            if (((bits & 1u) && !left_fermionic) || ((bits & 2u) && !right_fermionic))
                continue;
            Orientation o{(bits & 1u) != 0, (bits & 2u) != 0, reversed};
            if (holds(o))
                return o;
        }
    return std::nullopt;
}

std::vector<RelationReport> check_aw3_symmetric(const GeneratorRegistry &reg, const AllowableTriple &t);
std::vector<RelationReport> check_aw3_linear(const GeneratorRegistry &reg);
// Quadratic presentation with unshifted Casimirs; informational reports.
std::vector<RelationReport> check_aw3_quadratic(const RepParams &p3, const BasisPtr &basis3);

struct MasterTerms {
    std::array<SparseOperator, 6> terms; // three left-hand, three right-hand
    SparseOperator residual;             // lhs - rhs
};

MasterTerms master_terms(const GeneratorRegistry &reg, const MasterRow &row);
RelationReport check_master(const GeneratorRegistry &reg, const MasterRow &row);
std::vector<RelationReport> check_master_all(const GeneratorRegistry &reg);

// Exact rank of vectorized operators by fraction-free elimination.
std::size_t exact_rank(const std::vector<SparseOperator> &ops);
RelationReport check_independence(const GeneratorRegistry &reg);

} // namespace aw
