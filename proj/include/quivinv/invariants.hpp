#ifndef QUIVINV_INVARIANTS_HPP
#define QUIVINV_INVARIANTS_HPP

#include "quivinv/filtrep.hpp"
#include "quivinv/linalg.hpp"
#include "quivinv/polyring.hpp"
#include "quivinv/quiver.hpp"
#include "quivinv/tableaux.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace quivinv {

struct InvariantOptions {
    std::size_t monomial_guard = 200000; // abort past this many basis monomials
    bool parallel = true;                // kernel assembly; output is identical either way
};

struct KernelReport {
    int degree_bound = 0;
    std::vector<int> dim_by_degree;  // index e = dimension of the degree-e slice
    std::vector<Polynomial> basis;   // echelonized, homogeneous, ascending degree
    int total_dim() const;
};

/// Sparse linear constraints "f is killed by every derivation", columns
/// indexed by the monomial basis of one homogeneous degree, rows by
/// (derivation, target monomial). Stored column-major as produced by
/// the assembly kernel.
struct DerivationConstraints {
    int num_cols = 0;
    int num_rows = 0;
    std::vector<std::vector<std::pair<int, Rat>>> cols;

    std::vector<SparseRow> to_rows() const;
};

/// The assembly kernel: image of every basis monomial under every
/// derivation. The parallel version splits over basis monomials and is
/// bit-identical to the serial reference.
DerivationConstraints assemble_constraints_serial(const std::vector<Derivation>& derivs,
                                                  const std::vector<Monomial>& basis);
DerivationConstraints assemble_constraints_parallel(const std::vector<Derivation>& derivs,
                                                    const std::vector<Monomial>& basis);

/// Exact basis of { f : deg f <= d, D_{v,i,i+1}(f) = 0 for all v, i },
/// solved per homogeneous degree (the action is degree-preserving).
KernelReport invariant_basis(const GeneralRep& rep, int d, const InvariantOptions& opts = {});

enum class SpanVerdict { Equal, AInsideB, BInsideA, Incomparable };

struct SpanCompareResult {
    SpanVerdict verdict = SpanVerdict::Equal;
    int rank_a = 0, rank_b = 0, rank_ab = 0;
    std::optional<Polynomial> witness_in_a; // element of A outside span(B)
    std::optional<Polynomial> witness_in_b; // element of B outside span(A)
};

/// Exact comparison of rational spans inside the degree-<= d slice.
SpanCompareResult span_compare(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                               int d);

/// Membership of f in the rational span of the list.
bool in_span(const std::vector<Polynomial>& list, const Polynomial& f, int d);

struct Theorem1Report {
    int n = 0, d = 0;
    PathwayReport pathways;
    KernelReport kernel;
    long long expected_diag_dim = 0; // C(n*|Q1| + d, d)
    SpanCompareResult comparison;    // kernel vs diagonal monomials
    bool spans_equal = false;
    bool consistent = false; // (AtMostTwo <=> spans equal)
    std::optional<Polynomial> extra_invariant;
};

Theorem1Report verify_theorem1(const Quiver& q, int n, int d, const InvariantOptions& opts = {});

struct Theorem2Report {
    int n = 0, m = 0, d = 0;
    KernelReport kernel;
    std::size_t generator_count = 0;
    SpanCompareResult comparison; // kernel vs generator products
    bool pass = false;
    std::optional<Polynomial> witness; // invariant outside the generator span
};

/// Requires classify(base) == AtMostTwo; throws std::invalid_argument
/// otherwise.
Theorem2Report verify_theorem2(const FramedQuiver& fq, int n, int m, int d,
                               const InvariantOptions& opts = {});

} // namespace quivinv

#endif
