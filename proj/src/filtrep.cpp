#include "quivinv/filtrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace quivinv {

bool GeneralRep::is_coordinate(VarId v) const {
    return std::binary_search(coord_vars_.begin(), coord_vars_.end(), v);
}

GeneralRep build_general_rep(const Quiver& q, const RepConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("n must be positive");
    GeneralRep rep;
    rep.quiver_ = q;
    rep.framed_vertex_ = 0;
    rep.n_ = cfg.n;
    rep.m_ = 0;
    for (int idx = 0; idx < q.arrow_count(); ++idx) {
        PolyMatrix m(cfg.n, cfg.n);
        for (int r = 1; r <= cfg.n; ++r)
            for (int c = r; c <= cfg.n; ++c)
                m.at(r, c) = Polynomial::variable(VarId::coord(idx, r, c));
        rep.mats_.push_back(std::move(m));
    }
    rep.collect_vars();
    return rep;
}

GeneralRep build_general_rep(const FramedQuiver& fq, const RepConfig& cfg) {
    if (cfg.n < 1 || cfg.m < 1) throw std::invalid_argument("n and m must be positive");
    const Quiver& q = fq.full();
    GeneralRep rep;
    rep.quiver_ = q;
    rep.framed_vertex_ = fq.framed_vertex();
    rep.n_ = cfg.n;
    rep.m_ = cfg.m;
    for (int idx = 0; idx < q.arrow_count(); ++idx) {
        const int rows = rep.dim_at(q.arrow(idx).head);
        const int cols = rep.dim_at(q.arrow(idx).tail);
        PolyMatrix m(rows, cols);
        const bool framing = idx == 0;
        for (int r = 1; r <= rows; ++r)
            for (int c = framing ? 1 : r; c <= cols; ++c)
                m.at(r, c) = Polynomial::variable(VarId::coord(idx, r, c));
        rep.mats_.push_back(std::move(m));
    }
    rep.collect_vars();
    return rep;
}

void GeneralRep::collect_vars() {
    for (int idx = 0; idx < quiver_.arrow_count(); ++idx) {
        const bool framing = framed() && idx == 0;
        const PolyMatrix& m = mats_[idx];
        for (int r = 1; r <= m.rows(); ++r)
            for (int c = framing ? 1 : r; c <= m.cols(); ++c)
                coord_vars_.push_back(VarId::coord(idx, r, c));
        if (!framing)
            for (int r = 1; r <= std::min(m.rows(), m.cols()); ++r)
                diag_vars_.push_back(VarId::coord(idx, r, r));
    }
    std::sort(coord_vars_.begin(), coord_vars_.end());
    std::sort(diag_vars_.begin(), diag_vars_.end());
}

OneParamAction one_param_substitution(const GeneralRep& rep, int vertex, int i, int j) {
    const Quiver& q = rep.quiver();
    const int n = rep.n();
    if (vertex < 1 || vertex > q.vertex_count() || vertex == rep.framed_vertex())
        throw std::invalid_argument("vertex must be a nonframed vertex");
    if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("need 1 <= i < j <= n");

    OneParamAction act;
    act.vertex = vertex;
    act.i = i;
    act.j = j;
    act.u = VarId::param(vertex, i, j);
    const Polynomial u = Polynomial::variable(act.u);

    auto var = [](int arrow, int r, int c) { return Polynomial::variable(VarId::coord(arrow, r, c)); };

    for (int idx = 0; idx < q.arrow_count(); ++idx) {
        const Arrow& a = q.arrow(idx);
        const bool framing = rep.framed() && idx == 0;
        const PolyMatrix& m = rep.matrix(idx);
        const bool sink = a.head == vertex;
        const bool source = a.tail == vertex;
        if (!sink && !source) continue;
        if (sink && source) {
            // loop: conjugation, row then column operation; the u^2 term
            // lands on the below-diagonal (j,i) entry, which is zero
            for (int c = 1; c <= m.cols(); ++c) {
                if (c == j) continue;
                if (c >= j) act.sigma.set(VarId::coord(idx, i, c), var(idx, i, c) + u * var(idx, j, c));
            }
            for (int r = 1; r <= m.rows(); ++r) {
                if (r == i) continue;
                if (r <= i) act.sigma.set(VarId::coord(idx, r, j), var(idx, r, j) - u * var(idx, r, i));
            }
            act.sigma.set(VarId::coord(idx, i, j),
                          var(idx, i, j) + u * (var(idx, j, j) - var(idx, i, i)));
            continue;
        }
        if (sink) {
            // row i gains u times row j
            for (int c = 1; c <= m.cols(); ++c) {
                const bool have_i = framing || c >= i;
                const bool have_j = framing || c >= j;
                if (!have_i) continue;
                if (have_j)
                    act.sigma.set(VarId::coord(idx, i, c), var(idx, i, c) + u * var(idx, j, c));
            }
        }
        if (source) {
            // column j loses u times column i (framing arrows never have
            // a nonframed tail, so this is always a triangular matrix)
            for (int r = 1; r <= m.rows(); ++r) {
                const bool have_j = r <= j;
                const bool have_i = r <= i;
                if (!have_j) continue;
                if (have_i)
                    act.sigma.set(VarId::coord(idx, r, j), var(idx, r, j) - u * var(idx, r, i));
            }
        }
    }
    return act;
}

Derivation action_derivation(const GeneralRep& rep, int vertex, int i, int j) {
    OneParamAction act = one_param_substitution(rep, vertex, i, j);
    Derivation d;
    for (const auto& [v, image] : act.sigma.images()) {
        Polynomial lin = image.coefficient_of(act.u, 1);
        if (!lin.is_zero()) d.set(v, std::move(lin));
    }
    return d;
}

std::vector<Derivation> superdiagonal_derivations(const GeneralRep& rep) {
    std::vector<Derivation> out;
    const Quiver& q = rep.quiver();
    for (int v = 1; v <= q.vertex_count(); ++v) {
        if (v == rep.framed_vertex()) continue;
        for (int i = 1; i < rep.n(); ++i) out.push_back(action_derivation(rep, v, i, i + 1));
    }
    return out;
}

bool is_invariant(const GeneralRep& rep, const Polynomial& f) {
    for (VarId v : f.variables())
        if (!rep.is_coordinate(v))
            throw std::invalid_argument("polynomial has variables outside the representation: " +
                                        v.str());
    bool killed = true;
    bool fixed = true;
    const Quiver& q = rep.quiver();
    for (int v = 1; v <= q.vertex_count() && (killed || fixed); ++v) {
        if (v == rep.framed_vertex()) continue;
        for (int i = 1; i < rep.n(); ++i) {
            OneParamAction act = one_param_substitution(rep, v, i, i + 1);
            Derivation d;
            for (const auto& [x, image] : act.sigma.images()) {
                Polynomial lin = image.coefficient_of(act.u, 1);
                if (!lin.is_zero()) d.set(x, std::move(lin));
            }
            if (!d(f).is_zero()) killed = false;
            if (!(act.sigma(f) == f)) fixed = false;
        }
    }
    if (killed != fixed)
        throw std::logic_error("derivation and substitution invariance checks disagree");
    return killed;
}

PolyMatrix path_matrix(const GeneralRep& rep, const PathWord& p) {
    if (!p.composable(rep.quiver())) throw std::invalid_argument("path is not composable");
    PolyMatrix m = PolyMatrix::identity(rep.dim_at(p.source));
    for (int idx : p.arrows) m = rep.matrix(idx) * m;
    return m;
}

} // namespace quivinv
