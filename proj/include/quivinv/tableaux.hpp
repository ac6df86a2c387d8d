#ifndef QUIVINV_TABLEAUX_HPP
#define QUIVINV_TABLEAUX_HPP

#include "quivinv/filtrep.hpp"
#include "quivinv/polyring.hpp"
#include "quivinv/quiver.hpp"

#include <string>
#include <vector>

namespace quivinv {

struct Partition {
    std::vector<int> parts; // weakly decreasing, positive
    int size() const;
    bool valid() const;
};

/// Rows of positive integers. Young tableaux proper have weakly
/// decreasing row lengths; bitableau blocks are validated against that
/// where standardness requires it.
struct Tableau {
    std::vector<std::vector<int>> rows;

    std::vector<int> shape() const;
    bool partition_shape() const;
};

struct TableauClass {
    bool normal = false;   // rows strictly increasing left to right
    bool standard = false; // normal and columns nondecreasing top to bottom
};

TableauClass tableau_class(const Tableau& t);

/// Arrow-index sequence [phi1, phi2, ..., 0] read off a product of
/// general matrices; always ends in 0 (the framing arrow).
using PathSequence = std::vector<int>;

/// Partial order on path sequences: shorter first; for equal lengths the
/// rightmost nonzero entry of the componentwise difference decides.
/// Reflexive on equal sequences.
bool seq_leq(const PathSequence& a, const PathSequence& b);
bool seq_less(const PathSequence& a, const PathSequence& b);

/// Pair of equal-shape row lists with a path-sequence label per row.
struct Bitableau {
    std::vector<std::vector<int>> j_rows;
    std::vector<std::vector<int>> i_rows;
    std::vector<PathSequence> labels;

    int row_count() const { return static_cast<int>(j_rows.size()); }
    bool shapes_consistent() const;

    /// Text form, one row per line: (j1 j2 .. | i1 i2 ..)@[phi1,..,0]
    std::string str() const;
};

/// Row labels nondecreasing under seq_leq, and every maximal run of rows
/// with identical label forms a standard bitableau.
bool is_block_standard(const Bitableau& bt);

/// Product over rows of the minor determinant of the labelled path
/// product, rows from the J side and columns from the I side.
Polynomial eval_bideterminant(const Bitableau& bt, const GeneralRep& rep);

/// Single-row generators (p p+1 ... n | i1 ... i_{n-p+1}) on the product
/// along each pathway from the framed vertex, for every p with
/// n - p + 1 <= m and every strictly increasing column tuple.
/// Requires classify(base) == AtMostTwo.
std::vector<Bitableau> enumerate_row_generators(const FramedQuiver& fq, const GeneralRep& rep,
                                                int n, int m);

struct BlockStandardProduct {
    Bitableau bitableau;   // block standard; may have zero rows
    Monomial diagonal;     // monomial in diagonal coordinates
    Polynomial value;      // diagonal * bideterminant
    int degree = 0;
};

/// Every product (diagonal monomial) x (block-standard product of row
/// generators) of total degree <= d, each block-standard bitableau
/// exactly once. Deterministic order: label blocks ascending, rows by
/// (suffix start, column tuple), diagonal monomials in canonical order.
std::vector<BlockStandardProduct> enumerate_block_standard_detailed(const FramedQuiver& fq,
                                                                    const GeneralRep& rep, int d,
                                                                    bool parallel = true);
std::vector<Polynomial> enumerate_block_standard(const FramedQuiver& fq, const GeneralRep& rep,
                                                 int d);

/// Left translation of a generic n x m matrix by a generic upper
/// triangular b: checks (p .. n | i1 .. i_{n-p+1}) picks up the factor
/// b_pp * ... * b_nn, as a polynomial identity, for every column tuple.
bool lemma48_check(int n, int m, int p);

struct GrosshansReport {
    int count = 0;
    long long expected = 0;
    int rank = 0;
    bool pass = false;
};

/// Standard bitableaux on a generic n x m matrix with bideterminant
/// degree <= d: their count must be C(nm + d, d) and their bideterminants
/// linearly independent. Guarded to n, m <= 3, d <= 3.
GrosshansReport grosshans_basis_check(int n, int m, int d);

} // namespace quivinv

#endif
