#include "quivinv/invariants.hpp"

#include "quivinv/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace quivinv {

int KernelReport::total_dim() const {
    int t = 0;
    for (int d : dim_by_degree) t += d;
    return t;
}

std::vector<SparseRow> DerivationConstraints::to_rows() const {
    std::vector<SparseRow> rows(num_rows);
    for (int k = 0; k < num_cols; ++k)
        for (const auto& [row, coeff] : cols[k]) rows[row].emplace_back(k, coeff);
    // column index ascends within each row because k does
    return rows;
}

namespace {

std::vector<std::pair<int, Rat>> constraint_column(const std::vector<Derivation>& derivs,
                                                   const std::vector<Monomial>& basis,
                                                   const std::map<Monomial, int>& index, int k) {
    std::vector<std::pair<int, Rat>> entries;
    const Polynomial mono = Polynomial::term(Rat(1), basis[k]);
    const int nb = static_cast<int>(basis.size());
    for (std::size_t t = 0; t < derivs.size(); ++t) {
        Polynomial img = derivs[t](mono);
        for (const auto& [m, c] : img.terms()) {
            auto it = index.find(m);
            if (it == index.end()) throw std::logic_error("derivation image left the degree slice");
            entries.emplace_back(static_cast<int>(t) * nb + it->second, c);
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return entries;
}

DerivationConstraints assemble(const std::vector<Derivation>& derivs,
                               const std::vector<Monomial>& basis, bool parallel) {
    DerivationConstraints out;
    out.num_cols = static_cast<int>(basis.size());
    out.num_rows = static_cast<int>(derivs.size()) * out.num_cols;
    out.cols.resize(out.num_cols);
    std::map<Monomial, int> index;
    for (int i = 0; i < out.num_cols; ++i) index.emplace(basis[i], i);

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (int k = 0; k < out.num_cols; ++k)
            out.cols[k] = constraint_column(derivs, basis, index, k);
    } else {
        for (int k = 0; k < out.num_cols; ++k)
            out.cols[k] = constraint_column(derivs, basis, index, k);
    }
    return out;
}

} // namespace

DerivationConstraints assemble_constraints_serial(const std::vector<Derivation>& derivs,
                                                  const std::vector<Monomial>& basis) {
    return assemble(derivs, basis, false);
}

DerivationConstraints assemble_constraints_parallel(const std::vector<Derivation>& derivs,
                                                    const std::vector<Monomial>& basis) {
    return assemble(derivs, basis, true);
}

KernelReport invariant_basis(const GeneralRep& rep, int d, const InvariantOptions& opts) {
    if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
    const std::vector<VarId>& vars = rep.coordinate_vars();

    // guard the total basis size before enumerating anything
    long long total = binomial(static_cast<int>(vars.size()) + d, d);
    if (total > static_cast<long long>(opts.monomial_guard))
        throw ResourceGuardError("monomial basis would have " + std::to_string(total) +
                                 " elements, past the guard of " +
                                 std::to_string(opts.monomial_guard));

    const std::vector<Derivation> derivs = superdiagonal_derivations(rep);

    KernelReport report;
    report.degree_bound = d;
    report.dim_by_degree.assign(d + 1, 0);
    report.dim_by_degree[0] = 1;
    report.basis.push_back(Polynomial(1L));

    for (int e = 1; e <= d; ++e) {
        std::vector<Monomial> basis = monomials_of_degree(vars, e);
        if (derivs.empty()) {
            report.dim_by_degree[e] = static_cast<int>(basis.size());
            for (const Monomial& m : basis) report.basis.push_back(Polynomial::term(Rat(1), m));
            continue;
        }
        DerivationConstraints cons =
            opts.parallel ? assemble_constraints_parallel(derivs, basis)
                          : assemble_constraints_serial(derivs, basis);
        EchelonForm ef(cons.num_cols);
        for (SparseRow& row : cons.to_rows())
            if (!row.empty()) ef.insert(std::move(row));
        std::vector<std::vector<Rat>> kernel = ef.nullspace_basis();
        report.dim_by_degree[e] = static_cast<int>(kernel.size());
        for (const auto& vec : kernel) {
            Polynomial f;
            for (std::size_t i = 0; i < vec.size(); ++i)
                if (vec[i] != 0) f += Polynomial::term(vec[i], basis[i]);
            report.basis.push_back(std::move(f));
        }
    }
    return report;
}

namespace {

std::vector<VarId> union_vars(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    std::vector<VarId> vars;
    for (const Polynomial& p : a)
        for (VarId v : p.variables()) vars.push_back(v);
    for (const Polynomial& p : b)
        for (VarId v : p.variables()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

} // namespace

SpanCompareResult span_compare(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                               int d) {
    GradedBasis basis(union_vars(a, b), d);
    EchelonForm ea(basis.size()), eb(basis.size()), eab(basis.size());
    for (const Polynomial& p : a) {
        SparseRow r = basis.to_row(p);
        ea.insert(r);
        eab.insert(std::move(r));
    }
    for (const Polynomial& p : b) {
        SparseRow r = basis.to_row(p);
        eb.insert(r);
        eab.insert(std::move(r));
    }
    SpanCompareResult res;
    res.rank_a = ea.rank();
    res.rank_b = eb.rank();
    res.rank_ab = eab.rank();
    const bool a_in_b = res.rank_ab == res.rank_b;
    const bool b_in_a = res.rank_ab == res.rank_a;
    if (a_in_b && b_in_a)
        res.verdict = SpanVerdict::Equal;
    else if (a_in_b)
        res.verdict = SpanVerdict::AInsideB;
    else if (b_in_a)
        res.verdict = SpanVerdict::BInsideA;
    else
        res.verdict = SpanVerdict::Incomparable;
    if (!a_in_b)
        for (const Polynomial& p : a)
            if (!eb.reduces_to_zero(basis.to_row(p))) {
                res.witness_in_a = p;
                break;
            }
    if (!b_in_a)
        for (const Polynomial& p : b)
            if (!ea.reduces_to_zero(basis.to_row(p))) {
                res.witness_in_b = p;
                break;
            }
    return res;
}

bool in_span(const std::vector<Polynomial>& list, const Polynomial& f, int d) {
    GradedBasis basis(union_vars(list, {f}), d);
    EchelonForm ef(basis.size());
    for (const Polynomial& p : list) ef.insert(basis.to_row(p));
    return ef.reduces_to_zero(basis.to_row(f));
}

Theorem1Report verify_theorem1(const Quiver& q, int n, int d, const InvariantOptions& opts) {
    Theorem1Report rep;
    rep.n = n;
    rep.d = d;
    rep.pathways = enumerate_pathways(q);
    GeneralRep gen = build_general_rep(q, RepConfig{n, 0});
    rep.kernel = invariant_basis(gen, d, opts);
    rep.expected_diag_dim = binomial(n * q.arrow_count() + d, d);

    std::vector<Polynomial> diag;
    for (const Monomial& m : monomials_up_to_degree(gen.diagonal_vars(), d))
        diag.push_back(Polynomial::term(Rat(1), m));
    rep.comparison = span_compare(rep.kernel.basis, diag, d);
    rep.spans_equal = rep.comparison.verdict == SpanVerdict::Equal;
    const bool at_most_two = rep.pathways.outcome == PathwayReport::Outcome::AtMostTwo;
    rep.consistent = at_most_two == rep.spans_equal;
    if (!rep.spans_equal) rep.extra_invariant = rep.comparison.witness_in_a;
    return rep;
}

Theorem2Report verify_theorem2(const FramedQuiver& fq, int n, int m, int d,
                               const InvariantOptions& opts) {
    if (classify(fq.base()) != PathwayReport::Outcome::AtMostTwo)
        throw std::invalid_argument("base quiver has more than two pathways between some vertices");
    Theorem2Report rep;
    rep.n = n;
    rep.m = m;
    rep.d = d;
    GeneralRep gen = build_general_rep(fq, RepConfig{n, m});
    rep.kernel = invariant_basis(gen, d, opts);
    std::vector<Polynomial> gens = enumerate_block_standard(fq, gen, d);
    rep.generator_count = gens.size();
    rep.comparison = span_compare(rep.kernel.basis, gens, d);
    rep.pass = rep.comparison.verdict == SpanVerdict::Equal;
    if (!rep.pass) rep.witness = rep.comparison.witness_in_a;
    return rep;
}

} // namespace quivinv
