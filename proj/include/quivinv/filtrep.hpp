#ifndef QUIVINV_FILTREP_HPP
#define QUIVINV_FILTREP_HPP

#include "quivinv/polyring.hpp"
#include "quivinv/quiver.hpp"

#include <vector>

namespace quivinv {

struct RepConfig {
    int n = 2; // dimension at every nonframed vertex
    int m = 1; // framed vertex dimension (framed case only)
};

/// General (symbolic) filtered representation for the complete standard
/// filtration: one generic upper-triangular n x n matrix per nonframed
/// arrow, a fully generic n x m matrix for the framing arrow. Variable
/// sets of distinct arrows are disjoint; below-diagonal entries of
/// triangular matrices are identically zero and own no variables.
/// Immutable after construction.
class GeneralRep {
public:
    const Quiver& quiver() const { return quiver_; }
    bool framed() const { return framed_vertex_ != 0; }
    int framed_vertex() const { return framed_vertex_; }
    int framing_arrow() const { return framed() ? 0 : -1; }
    int n() const { return n_; }
    int m() const { return m_; }
    int dim_at(int vertex) const { return vertex == framed_vertex_ ? m_ : n_; }

    const PolyMatrix& matrix(int arrow) const { return mats_.at(arrow); }
    const std::vector<VarId>& coordinate_vars() const { return coord_vars_; }
    const std::vector<VarId>& diagonal_vars() const { return diag_vars_; }
    bool is_coordinate(VarId v) const;

private:
    friend GeneralRep build_general_rep(const Quiver&, const RepConfig&);
    friend GeneralRep build_general_rep(const FramedQuiver&, const RepConfig&);

    void collect_vars();

    Quiver quiver_;
    int framed_vertex_ = 0;
    int n_ = 0, m_ = 0;
    std::vector<PolyMatrix> mats_;
    std::vector<VarId> coord_vars_;
    std::vector<VarId> diag_vars_;
};

GeneralRep build_general_rep(const Quiver& q, const RepConfig& cfg);
GeneralRep build_general_rep(const FramedQuiver& q, const RepConfig& cfg);

/// Action of the one-parameter subgroup with parameter u in the (i,j)
/// entry at a nonframed vertex, as a substitution on coordinates:
/// arrows into the vertex get row i bumped by u times row j, arrows out
/// of it lose u times column i from column j, loops get both (the
/// conjugation action). At u = 0 the substitution is the identity and it
/// touches only coordinates of arrows incident to the vertex.
struct OneParamAction {
    int vertex = 0;
    int i = 0, j = 0;
    VarId u;
    Substitution sigma;
};

OneParamAction one_param_substitution(const GeneralRep& rep, int vertex, int i, int j);

/// The u-linear part of one_param_substitution, as a derivation.
Derivation action_derivation(const GeneralRep& rep, int vertex, int i, int j);

/// All superdiagonal derivations D_{v,i,i+1}, v nonframed, 1 <= i < n,
/// in (vertex, i) order.
std::vector<Derivation> superdiagonal_derivations(const GeneralRep& rep);

/// Membership in the invariant ring: f is annihilated by every
/// superdiagonal derivation. Cross-checked against the substitution
/// route (sigma_u(f) = f identically in u); the two must agree.
/// Throws std::invalid_argument if f has variables outside the rep.
bool is_invariant(const GeneralRep& rep, const Polynomial& f);

/// Ordered product of arrow matrices along a composable path; the empty
/// path yields the identity at its vertex.
PolyMatrix path_matrix(const GeneralRep& rep, const PathWord& p);

} // namespace quivinv

#endif
