#include "aw/uqrep.hpp"

#include <numeric>

#include "aw/error.hpp"

namespace aw {

void RepParams::validate() const {
    if (q.is_zero() || q == Rational(1) || q == Rational(-1))
        throw InvalidConfig("q must not be 0, 1 or -1 (got " + q.str() + ")");
    if (legs < TruncatedBasis::kMinLegs || legs > TruncatedBasis::kMaxLegs)
        throw InvalidConfig("legs must be in {2,3,4}");
    if (static_cast<int>(k.size()) != legs)
        throw InvalidConfig("expected " + std::to_string(legs) + " values of k, got " + std::to_string(k.size()));
    for (int ki : k)
        if (ki < 1)
            throw InvalidConfig("every k_i must be a positive integer");
    if (nmax < 1)
        throw InvalidConfig("nmax must be >= 1");
}

int RepParams::k_sum(int lo, int hi) const { return std::accumulate(k.begin() + (lo - 1), k.begin() + hi, 0); }

std::string IntervalLabel::str() const {
    std::string s;
    for (int i = lo; i <= hi; ++i)
        s += std::to_string(i);
    return s;
}

const char *to_string(Generator g) {
    switch (g) {
    case Generator::E:
        return "E";
    case Generator::F:
        return "F";
    case Generator::K:
        return "K";
    case Generator::Kinv:
        return "Kinv";
    }
    return "?";
}

Rational raising_coefficient(const Rational &q, int k, int n) {
    const Rational one(1);
    Rational diff = q.inv() - q;
    return -q.pow(-1 - 2 * k - 2 * n) * (one - q.pow(2 * n + 2)) * (one - q.pow(4 * k + 2 * n)) / (diff * diff);
}

namespace {

void check_interval(const RepParams &p, IntervalLabel a) {
    if (a.lo < 1 || a.hi > p.legs || a.lo > a.hi)
        throw InvalidConfig("invalid interval {" + std::to_string(a.lo) + ".." + std::to_string(a.hi) + "}");
}

void check_basis(const RepParams &p, const TruncatedBasis &basis) {
    if (basis.legs() != p.legs)
        throw InvalidConfig("basis leg count does not match parameters");
}

} // namespace

SparseOperator primitive_generator(const RepParams &p, const BasisPtr &basis, int leg, Generator which) {
    check_basis(p, *basis);
    if (leg < 1 || leg > p.legs)
        throw InvalidConfig("leg " + std::to_string(leg) + " out of range");
    const int slot = leg - 1;
    const int k = p.k[slot];
    const int degree = which == Generator::E ? 1 : (which == Generator::F ? -1 : 0);
    SparseOperator op(basis, degree);
    std::vector<int> target;
    for (std::size_t j = 0; j < basis->size(); ++j) {
        const auto &occ = basis->state(j).occupations;
        const int n = occ[slot];
        switch (which) {
        case Generator::K:
            op.set_column(j, {{static_cast<std::uint32_t>(j), p.q.pow(k + n)}});
            break;
        case Generator::Kinv:
            op.set_column(j, {{static_cast<std::uint32_t>(j), p.q.pow(-k - n)}});
            break;
        case Generator::E:
            target = occ;
            ++target[slot];
            if (basis->contains(target))
                op.set_column(j, {{static_cast<std::uint32_t>(basis->index_of(target)), raising_coefficient(p.q, k, n)}});
            break;
        case Generator::F:
            if (n > 0) {
                target = occ;
                --target[slot];
                op.set_column(j, {{static_cast<std::uint32_t>(basis->index_of(target)), Rational(1)}});
            }
            break;
        }
    }
    return op;
}

SparseOperator interval_generator(const RepParams &p, const BasisPtr &basis, IntervalLabel interval,
                                  Generator which) {
    check_interval(p, interval);
    if (which == Generator::K || which == Generator::Kinv) {
        SparseOperator out = primitive_generator(p, basis, interval.lo, which);
        for (int i = interval.lo + 1; i <= interval.hi; ++i)
            out = out * primitive_generator(p, basis, i, which);
        return out;
    }
    SparseOperator sum = SparseOperator::zero(basis, which == Generator::E ? 1 : -1);
    for (int i = interval.lo; i <= interval.hi; ++i) {
        SparseOperator term = primitive_generator(p, basis, i, which);
        for (int j = interval.lo; j < i; ++j)
            term = primitive_generator(p, basis, j, Generator::K) * term;
        for (int j = i + 1; j <= interval.hi; ++j)
            term = term * primitive_generator(p, basis, j, Generator::Kinv);
        sum += term;
    }
    return sum;
}

SparseOperator iterated_coproduct(const RepParams &p, const BasisPtr &basis, IntervalLabel interval,
                                  Generator which, Coupling coupling) {
    check_interval(p, interval);
    if (interval.size() == 1)
        return primitive_generator(p, basis, interval.lo, which);

    // Split the interval into a composite part and a single leg, then apply
    // the two-fold coproduct to the pair.
    IntervalLabel left = coupling == Coupling::Left ? IntervalLabel{interval.lo, interval.hi - 1}
                                                    : IntervalLabel{interval.lo, interval.lo};
    IntervalLabel right = coupling == Coupling::Left ? IntervalLabel{interval.hi, interval.hi}
                                                     : IntervalLabel{interval.lo + 1, interval.hi};
    auto part = [&](IntervalLabel a, Generator g) { return iterated_coproduct(p, basis, a, g, coupling); };

    switch (which) {
    case Generator::K:
    case Generator::Kinv:
        return part(left, which) * part(right, which);
    case Generator::E:
    case Generator::F:
        return part(left, Generator::K) * part(right, which) + part(left, which) * part(right, Generator::Kinv);
    }
    throw InvalidConfig("unknown generator");
}

SparseOperator casimir(const RepParams &p, const BasisPtr &basis, IntervalLabel interval) {
    const Rational &q = p.q;
    const Rational qinv = q.inv();
    const Rational diff = q - qinv;
    SparseOperator k = interval_generator(p, basis, interval, Generator::K);
    SparseOperator kinv = interval_generator(p, basis, interval, Generator::Kinv);
    SparseOperator e = interval_generator(p, basis, interval, Generator::E);
    SparseOperator f = interval_generator(p, basis, interval, Generator::F);
    SparseOperator omega = qinv * (k * k) + q * (kinv * kinv) + (diff * diff) * (e * f);
    return omega * (-(q + qinv).inv());
}

SparseOperator casimir_unshifted(const RepParams &p, const BasisPtr &basis, IntervalLabel interval) {
    const Rational &q = p.q;
    const Rational qinv = q.inv();
    const Rational diff = q - qinv;
    SparseOperator k = interval_generator(p, basis, interval, Generator::K);
    SparseOperator kinv = interval_generator(p, basis, interval, Generator::Kinv);
    SparseOperator e = interval_generator(p, basis, interval, Generator::E);
    SparseOperator f = interval_generator(p, basis, interval, Generator::F);
    SparseOperator diag = qinv * (k * k) + q * (kinv * kinv) - Rational(2) * SparseOperator::identity(basis);
    return diag * (diff * diff).inv() + e * f;
}

SparseOperator shift_casimir(const Rational &q, const SparseOperator &unshifted) {
    const Rational qinv = q.inv();
    const Rational diff = q - qinv;
    SparseOperator out = (diff * diff) * unshifted + Rational(2) * SparseOperator::identity(unshifted.basis_ptr());
    return out * (-(q + qinv).inv());
}

} // namespace aw
