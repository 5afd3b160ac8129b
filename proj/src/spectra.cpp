#include "aw/spectra.hpp"

#include "aw/error.hpp"
#include "aw/parallel.hpp"

namespace aw {

Rational casimir_eigenvalue(const Rational &q, long kappa) {
    return -(q.pow(2 * kappa - 1) + q.pow(1 - 2 * kappa)) / (q + q.inv());
}

Rational casimir_eigenvalue_unshifted(const Rational &q, long kappa) {
    const Rational d = q.inv() - q;
    return (q.pow(2 * kappa - 1) + q.pow(1 - 2 * kappa) - Rational(2)) / (d * d);
}

std::vector<Rational> predicted_spectrum(const RepParams &p, IntervalLabel a, int weight) {
    if (a.lo < 1 || a.hi > p.legs || a.lo > a.hi)
        throw InvalidConfig("invalid interval " + a.str());
    if (weight < 0 || weight > p.nmax)
        throw OutOfRange("weight " + std::to_string(weight) + " outside the truncation");
    std::vector<Rational> out;
    const int base = p.k_sum(a.lo, a.hi);
    // A single leg is irreducible: only x = 0 occurs.
    const int top = a.size() == 1 ? 0 : weight;
    for (int x = 0; x <= top; ++x)
        out.push_back(casimir_eigenvalue(p.q, base + x));
    return out;
}

namespace {

unsigned interval_mask(IntervalLabel a) {
    unsigned m = 0;
    for (int i = a.lo; i <= a.hi; ++i)
        m |= 1u << (i - 1);
    return m;
}

} // namespace

RelationReport check_annihilating(const GeneratorRegistry &reg, IntervalLabel a, int weight) {
    const auto &p = reg.params();
    const auto values = predicted_spectrum(p, a, weight);
    const auto &basis = reg.basis();
    const auto &q_op = reg[label_for_subset(interval_mask(a))];
    const auto id = SparseOperator::identity(basis);
    SparseOperator product = id.restricted_to_block(weight);
    for (const auto &lambda : values)
        product = (q_op - lambda * id) * product;
    std::string listed;
    for (const auto &v : values)
        listed += (listed.empty() ? "" : ",") + v.str();
    return make_report("spectra/Q" + a.str() + "/w" + std::to_string(weight), "spectra",
                       {{"label", "Q" + a.str()}, {"weight", std::to_string(weight)}, {"eigenvalues", listed}},
                       product);
}

std::vector<RelationReport> check_spectra(const GeneratorRegistry &reg) {
    std::vector<std::pair<IntervalLabel, int>> jobs;
    const int legs = reg.legs();
    for (int size = 1; size <= legs; ++size)
        for (int lo = 1; lo + size - 1 <= legs; ++lo)
            for (int w = 0; w <= reg.params().nmax; ++w)
                jobs.emplace_back(IntervalLabel{lo, lo + size - 1}, w);
    std::vector<RelationReport> out(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t t) { out[t] = check_annihilating(reg, jobs[t].first, jobs[t].second); });
    return out;
}

} // namespace aw
