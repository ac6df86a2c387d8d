#include "quivinv/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace quivinv {

namespace {

// out = a - c*b for sorted sparse rows
SparseRow axpy(const SparseRow& a, const Rat& c, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first) {
            out.push_back(*i++);
        } else if (j->first < i->first) {
            Rat v = -c * j->second;
            if (v != 0) out.emplace_back(j->first, std::move(v));
            ++j;
        } else {
            Rat v = i->second - c * j->second;
            if (v != 0) out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), i, a.end());
    for (; j != b.end(); ++j) {
        Rat v = -c * j->second;
        if (v != 0) out.emplace_back(j->first, std::move(v));
    }
    return out;
}

} // namespace

SparseRow EchelonForm::reduce(SparseRow row) const {
    while (!row.empty()) {
        auto it = rows_.find(row.front().first);
        if (it == rows_.end()) break;
        row = axpy(row, row.front().second, it->second);
    }
    return row;
}

bool EchelonForm::insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    const int lead = row.front().first;
    const Rat inv = row.front().second;
    for (auto& [c, v] : row) v /= inv;
    rows_.emplace(lead, std::move(row));
    pivot_cols_sorted_.insert(
        std::lower_bound(pivot_cols_sorted_.begin(), pivot_cols_sorted_.end(), lead), lead);
    return true;
}

bool EchelonForm::reduces_to_zero(SparseRow row) const { return reduce(std::move(row)).empty(); }

std::vector<std::vector<Rat>> EchelonForm::nullspace_basis() const {
    // back-substitute to fully reduced form first
    std::map<int, SparseRow> rref = rows_;
    for (auto it = rref.rbegin(); it != rref.rend(); ++it) {
        const int p = it->first;
        for (auto& [q, row] : rref) {
            if (q >= p) break;
            auto pos = std::lower_bound(row.begin(), row.end(), std::make_pair(p, Rat(0)),
                                        [](const auto& a, const auto& b) { return a.first < b.first; });
            if (pos != row.end() && pos->first == p) row = axpy(row, pos->second, it->second);
        }
    }
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivot_cols_sorted_) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(cols_, Rat(0));
        x[f] = 1;
        for (const auto& [p, row] : rref) {
            for (const auto& [c, v] : row) {
                if (c == f) {
                    x[p] = -v;
                    break;
                }
                if (c > f) break;
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

int sparse_rank(const std::vector<SparseRow>& rows, int cols) {
    EchelonForm ef(cols);
    for (const auto& r : rows) ef.insert(r);
    return ef.rank();
}

GradedBasis::GradedBasis(std::vector<VarId> vars, int degree_bound)
    : vars_(std::move(vars)), degree_bound_(degree_bound) {
    monomials_ = monomials_up_to_degree(vars_, degree_bound_);
    for (int i = 0; i < static_cast<int>(monomials_.size()); ++i) index_.emplace(monomials_[i], i);
}

int GradedBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

SparseRow GradedBasis::to_row(const Polynomial& f) const {
    SparseRow row;
    row.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) {
        int idx = index_of(m);
        if (idx < 0)
            throw std::invalid_argument("polynomial does not lie in the graded basis: " + m.str());
        row.emplace_back(idx, c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

Polynomial GradedBasis::to_polynomial(const std::vector<Rat>& dense) const {
    Polynomial p;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0) p += Polynomial::term(dense[i], monomials_[i]);
    return p;
}

Polynomial GradedBasis::to_polynomial(const SparseRow& row) const {
    Polynomial p;
    for (const auto& [i, c] : row) p += Polynomial::term(c, monomials_[i]);
    return p;
}

} // namespace quivinv
