#ifndef QUIVINV_LINALG_HPP
#define QUIVINV_LINALG_HPP

#include "quivinv/polyring.hpp"

#include <map>
#include <utility>
#include <vector>

namespace quivinv {

/// Sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, Rat>>;

/// Incremental exact row-echelon form over the rationals. Rows are
/// inserted one at a time and reduced against the pivots collected so
/// far; insertion order is fixed by the caller, so results are
/// deterministic and reproducible byte-for-byte.
class EchelonForm {
public:
    explicit EchelonForm(int cols) : cols_(cols) {}

    /// Reduce and keep the row if independent. Returns true if the row
    /// added a new pivot.
    bool insert(SparseRow row);

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    /// True iff the row lies in the row space accumulated so far.
    bool reduces_to_zero(SparseRow row) const;

    /// Canonical basis of the right nullspace: one vector per free
    /// column (ascending), with unit entry at that column. Vectors are
    /// dense, length cols().
    std::vector<std::vector<Rat>> nullspace_basis() const;

    const std::vector<int>& pivot_columns() const { return pivot_cols_sorted_; }

private:
    SparseRow reduce(SparseRow row) const;

    int cols_;
    std::map<int, SparseRow> rows_; // pivot column -> row, leading coeff normalized to 1
    std::vector<int> pivot_cols_sorted_;
};

/// Rank of a list of sparse rows.
int sparse_rank(const std::vector<SparseRow>& rows, int cols);

/// Coordinates for polynomials of bounded degree: the monomial list is
/// exactly monomials_up_to_degree(vars, degree_bound), so coefficient
/// vectors are exact and canonical.
class GradedBasis {
public:
    GradedBasis(std::vector<VarId> vars, int degree_bound);

    int degree_bound() const { return degree_bound_; }
    const std::vector<VarId>& vars() const { return vars_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    int size() const { return static_cast<int>(monomials_.size()); }
    int index_of(const Monomial& m) const; // -1 if absent

    /// Coefficient vector; throws if f has a monomial outside the basis.
    SparseRow to_row(const Polynomial& f) const;
    Polynomial to_polynomial(const std::vector<Rat>& dense) const;
    Polynomial to_polynomial(const SparseRow& row) const;

private:
    std::vector<VarId> vars_;
    int degree_bound_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, int> index_;
};

} // namespace quivinv

#endif
