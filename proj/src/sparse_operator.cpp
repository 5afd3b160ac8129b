#include "aw/sparse_operator.hpp"

#include <algorithm>

#include "aw/error.hpp"

namespace aw {

bool same_basis(const TruncatedBasis &a, const TruncatedBasis &b) {
    return &a == &b || (a.legs() == b.legs() && a.nmax() == b.nmax());
}

SparseOperator::SparseOperator(BasisPtr basis, std::optional<int> weight_degree)
    : basis_(std::move(basis)), degree_(weight_degree), columns_(basis_->size()) {}

SparseOperator SparseOperator::zero(BasisPtr basis, std::optional<int> weight_degree) {
    return SparseOperator(std::move(basis), weight_degree);
}

SparseOperator SparseOperator::identity(BasisPtr basis) {
    SparseOperator op(basis, 0);
    for (std::size_t j = 0; j < op.dim(); ++j)
        op.columns_[j].push_back({static_cast<std::uint32_t>(j), Rational(1)});
    return op;
}

SparseOperator SparseOperator::diagonal(BasisPtr basis, const std::vector<Rational> &values) {
    SparseOperator op(basis, 0);
    if (values.size() != op.dim())
        throw InvalidConfig("diagonal length does not match basis size");
    for (std::size_t j = 0; j < op.dim(); ++j)
        if (!values[j].is_zero())
            op.columns_[j].push_back({static_cast<std::uint32_t>(j), values[j]});
    return op;
}

void SparseOperator::set_column(std::size_t j, Column col) {
    std::erase_if(col, [](const Entry &e) { return e.value.is_zero(); });
    std::sort(col.begin(), col.end(), [](const Entry &x, const Entry &y) { return x.row < y.row; });
    columns_.at(j) = std::move(col);
}

void SparseOperator::add_entry(std::size_t row, std::size_t col, const Rational &value) {
    if (row >= dim())
        throw OutOfRange("row index out of range");
    auto &c = columns_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry &e, std::size_t r) { return e.row < r; });
    if (it != c.end() && it->row == row) {
        it->value += value;
        if (it->value.is_zero())
            c.erase(it);
    } else if (!value.is_zero()) {
        c.insert(it, Entry{static_cast<std::uint32_t>(row), value});
    }
}

Rational SparseOperator::entry(std::size_t row, std::size_t col) const {
    const auto &c = columns_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry &e, std::size_t r) { return e.row < r; });
    if (it != c.end() && it->row == row)
        return it->value;
    return Rational(0);
}

std::size_t SparseOperator::nnz() const {
    std::size_t n = 0;
    for (const auto &c : columns_)
        n += c.size();
    return n;
}

bool SparseOperator::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Column &c) { return c.empty(); });
}

std::optional<SampleEntry> SparseOperator::first_nonzero() const {
    for (std::size_t j = 0; j < columns_.size(); ++j)
        if (!columns_[j].empty())
            return SampleEntry{columns_[j].front().row, j, columns_[j].front().value};
    return std::nullopt;
}

SparseOperator SparseOperator::restricted_to_weight(int max_weight) const {
    SparseOperator out(basis_, degree_);
    for (std::size_t j = 0; j < dim(); ++j)
        if (basis_->weight_of(j) <= max_weight)
            out.columns_[j] = columns_[j];
    return out;
}

SparseOperator SparseOperator::restricted_to_block(int weight) const {
    SparseOperator out(basis_, degree_);
    auto r = basis_->block(weight);
    for (std::size_t j = r.begin; j < r.end; ++j)
        out.columns_[j] = columns_[j];
    return out;
}

bool SparseOperator::is_block_diagonal() const {
    for (std::size_t j = 0; j < dim(); ++j)
        for (const auto &e : columns_[j])
            if (basis_->weight_of(e.row) != basis_->weight_of(j))
                return false;
    return true;
}

bool SparseOperator::respects_degree() const {
    if (!degree_)
        return true;
    for (std::size_t j = 0; j < dim(); ++j)
        for (const auto &e : columns_[j])
            if (basis_->weight_of(e.row) != basis_->weight_of(j) + *degree_)
                return false;
    return true;
}

void SparseOperator::check_same_basis(const SparseOperator &o) const {
    if (!same_basis(*basis_, *o.basis_))
        throw BasisMismatch();
}

void SparseOperator::merge(const SparseOperator &o, bool subtract) {
    check_same_basis(o);
    if (degree_ != o.degree_) {
        if (o.is_zero()) {
            // keep our degree
        } else if (is_zero()) {
            degree_ = o.degree_;
        } else {
            degree_ = std::nullopt;
        }
    }
    for (std::size_t j = 0; j < dim(); ++j) {
        const Column &rhs = o.columns_[j];
        if (rhs.empty())
            continue;
        Column &lhs = columns_[j];
        Column merged;
        merged.reserve(lhs.size() + rhs.size());
        std::size_t a = 0, b = 0;
        while (a < lhs.size() || b < rhs.size()) {
            if (b == rhs.size() || (a < lhs.size() && lhs[a].row < rhs[b].row)) {
                merged.push_back(std::move(lhs[a++]));
            } else if (a == lhs.size() || rhs[b].row < lhs[a].row) {
                merged.push_back({rhs[b].row, subtract ? -rhs[b].value : rhs[b].value});
                ++b;
            } else {
                Rational v = subtract ? lhs[a].value - rhs[b].value : lhs[a].value + rhs[b].value;
                if (!v.is_zero())
                    merged.push_back({lhs[a].row, std::move(v)});
                ++a;
                ++b;
            }
        }
        lhs = std::move(merged);
    }
}

SparseOperator &SparseOperator::operator+=(const SparseOperator &o) {
    merge(o, false);
    return *this;
}

SparseOperator &SparseOperator::operator-=(const SparseOperator &o) {
    merge(o, true);
    return *this;
}

SparseOperator &SparseOperator::operator*=(const Rational &s) {
    if (s.is_zero()) {
        for (auto &c : columns_)
            c.clear();
        return *this;
    }
    for (auto &c : columns_)
        for (auto &e : c)
            e.value *= s;
    return *this;
}

namespace {

std::optional<int> product_degree(const SparseOperator &a, const SparseOperator &b) {
    if (a.weight_degree() && b.weight_degree())
        return *a.weight_degree() + *b.weight_degree();
    return std::nullopt;
}

} // namespace

SparseOperator multiply_reference(const SparseOperator &a, const SparseOperator &b) {
    if (!same_basis(a.basis(), b.basis()))
        throw BasisMismatch();
    const std::size_t n = a.dim();
    SparseOperator out(a.basis_ptr(), product_degree(a, b));
    std::vector<mpq_class> acc(n);
    std::vector<char> touched(n, 0);
    std::vector<std::uint32_t> rows;
    mpq_class term;
    for (std::size_t j = 0; j < n; ++j) {
        rows.clear();
        for (const auto &bk : b.column(j)) {
            for (const auto &ai : a.column(bk.row)) {
                mpq_mul(term.get_mpq_t(), ai.value.mpq().get_mpq_t(), bk.value.mpq().get_mpq_t());
                if (!touched[ai.row]) {
                    touched[ai.row] = 1;
                    rows.push_back(ai.row);
                    acc[ai.row] = term;
                } else {
                    acc[ai.row] += term;
                }
            }
        }
        Column col;
        col.reserve(rows.size());
        for (auto r : rows) {
            touched[r] = 0;
            if (sgn(acc[r]) != 0)
                col.push_back({r, Rational(acc[r])});
        }
        out.set_column(j, std::move(col));
    }
    return out;
}

namespace {

// Integer image of an operator: value = numerators / common_denominator.
struct IntegerImage {
    mpz_class denominator = 1;
    std::vector<std::vector<std::pair<std::uint32_t, mpz_class>>> columns;
};

IntegerImage integer_image(const SparseOperator &op) {
    IntegerImage img;
    for (const auto &c : op.columns())
        for (const auto &e : c)
            mpz_lcm(img.denominator.get_mpz_t(), img.denominator.get_mpz_t(), e.value.mpq().get_den_mpz_t());
    img.columns.resize(op.dim());
    mpz_class scale;
    for (std::size_t j = 0; j < op.dim(); ++j) {
        auto &dst = img.columns[j];
        dst.reserve(op.column(j).size());
        for (const auto &e : op.column(j)) {
            mpz_divexact(scale.get_mpz_t(), img.denominator.get_mpz_t(), e.value.mpq().get_den_mpz_t());
            dst.emplace_back(e.row, mpz_class(scale * e.value.mpq().get_num()));
        }
    }
    return img;
}

} // namespace

SparseOperator multiply_fraction_free(const SparseOperator &a, const SparseOperator &b) {
    if (!same_basis(a.basis(), b.basis()))
        throw BasisMismatch();
    const std::size_t n = a.dim();
    SparseOperator out(a.basis_ptr(), product_degree(a, b));
    if (a.is_zero() || b.is_zero())
        return out;

    const IntegerImage ia = integer_image(a);
    const IntegerImage ib = integer_image(b);
    const mpz_class denominator = ia.denominator * ib.denominator;

    std::vector<mpz_class> acc(n);
    std::vector<char> touched(n, 0);
    std::vector<std::uint32_t> rows;
    for (std::size_t j = 0; j < n; ++j) {
        rows.clear();
        for (const auto &[k, bkj] : ib.columns[j]) {
            for (const auto &[i, aik] : ia.columns[k]) {
                if (!touched[i]) {
                    touched[i] = 1;
                    rows.push_back(i);
                    mpz_mul(acc[i].get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
                } else {
                    mpz_addmul(acc[i].get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
                }
            }
        }
        std::sort(rows.begin(), rows.end());
        Column col;
        col.reserve(rows.size());
        for (auto r : rows) {
            touched[r] = 0;
            if (sgn(acc[r]) != 0)
                col.push_back({r, Rational(mpq_class(acc[r], denominator))});
        }
        out.set_column(j, std::move(col));
    }
    return out;
}

SparseOperator operator*(const SparseOperator &a, const SparseOperator &b) { return multiply_fraction_free(a, b); }

bool operator==(const SparseOperator &a, const SparseOperator &b) {
    if (!same_basis(a.basis(), b.basis()))
        return false;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        const auto &x = a.column(j), &y = b.column(j);
        if (x.size() != y.size())
            return false;
        for (std::size_t t = 0; t < x.size(); ++t)
            if (x[t].row != y[t].row || !(x[t].value == y[t].value))
                return false;
    }
    return true;
}

} // namespace aw
