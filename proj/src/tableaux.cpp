#include "quivinv/tableaux.hpp"

#include "quivinv/errors.hpp"
#include "quivinv/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quivinv {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::valid() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

std::vector<int> Tableau::shape() const {
    std::vector<int> s;
    s.reserve(rows.size());
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
}

bool Tableau::partition_shape() const {
    auto s = shape();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1) return false;
        if (i > 0 && s[i] > s[i - 1]) return false;
    }
    return true;
}

TableauClass tableau_class(const Tableau& t) {
    TableauClass r;
    r.normal = true;
    for (const auto& row : t.rows)
        for (std::size_t c = 1; c < row.size(); ++c)
            if (row[c - 1] >= row[c]) r.normal = false;
    r.standard = r.normal && t.partition_shape();
    if (r.standard) {
        for (std::size_t i = 1; i < t.rows.size() && r.standard; ++i)
            for (std::size_t c = 0; c < t.rows[i].size(); ++c)
                if (t.rows[i - 1][c] > t.rows[i][c]) {
                    r.standard = false;
                    break;
                }
    }
    return r;
}

bool seq_leq(const PathSequence& a, const PathSequence& b) {
    if (a.empty() || b.empty() || a.back() != 0 || b.back() != 0)
        throw std::invalid_argument("path sequences must end in 0");
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = a.size(); k-- > 0;) {
        int diff = b[k] - a[k];
        if (diff != 0) return diff > 0;
    }
    return true; // equal
}

bool seq_less(const PathSequence& a, const PathSequence& b) { return a != b && seq_leq(a, b); }

bool Bitableau::shapes_consistent() const {
    if (j_rows.size() != i_rows.size() || j_rows.size() != labels.size()) return false;
    for (std::size_t r = 0; r < j_rows.size(); ++r)
        if (j_rows[r].size() != i_rows[r].size() || j_rows[r].empty()) return false;
    return true;
}

std::string Bitableau::str() const {
    std::ostringstream os;
    for (int r = 0; r < row_count(); ++r) {
        if (r) os << '\n';
        os << '(';
        for (std::size_t k = 0; k < j_rows[r].size(); ++k) {
            if (k) os << ' ';
            os << j_rows[r][k];
        }
        os << " | ";
        for (std::size_t k = 0; k < i_rows[r].size(); ++k) {
            if (k) os << ' ';
            os << i_rows[r][k];
        }
        os << ")@[";
        for (std::size_t k = 0; k < labels[r].size(); ++k) {
            if (k) os << ',';
            os << labels[r][k];
        }
        os << ']';
    }
    return os.str();
}

bool is_block_standard(const Bitableau& bt) {
    if (!bt.shapes_consistent()) return false;
    for (int r = 1; r < bt.row_count(); ++r)
        if (!seq_leq(bt.labels[r - 1], bt.labels[r])) return false;
    // each maximal run with identical label must be a standard bitableau
    int r = 0;
    while (r < bt.row_count()) {
        int s = r;
        while (s < bt.row_count() && bt.labels[s] == bt.labels[r]) ++s;
        Tableau j, i;
        for (int k = r; k < s; ++k) {
            j.rows.push_back(bt.j_rows[k]);
            i.rows.push_back(bt.i_rows[k]);
        }
        if (!tableau_class(j).standard || !tableau_class(i).standard) return false;
        r = s;
    }
    return true;
}

namespace {

PathWord label_to_word(const PathSequence& label, const GeneralRep& rep) {
    if (label.empty() || label.back() != 0)
        throw std::invalid_argument("row label must end in the framing arrow 0");
    if (!rep.framed()) throw std::invalid_argument("bideterminant labels need a framed quiver");
    PathWord w;
    w.source = rep.framed_vertex();
    w.arrows.assign(label.rbegin(), label.rend());
    if (!w.composable(rep.quiver()))
        throw std::invalid_argument("row label is not a composable path from the framed vertex");
    return w;
}

} // namespace

Polynomial eval_bideterminant(const Bitableau& bt, const GeneralRep& rep) {
    if (!bt.shapes_consistent() && bt.row_count() != 0)
        throw std::invalid_argument("bitableau rows are inconsistent");
    Polynomial out(1L);
    for (int r = 0; r < bt.row_count(); ++r) {
        PathWord w = label_to_word(bt.labels[r], rep);
        PolyMatrix m = path_matrix(rep, w);
        out *= det_of_minor(m, bt.j_rows[r], bt.i_rows[r]);
    }
    return out;
}

namespace {

std::vector<PathSequence> framed_pathway_labels(const FramedQuiver& fq) {
    if (classify(fq.base()) != PathwayReport::Outcome::AtMostTwo)
        throw std::invalid_argument("base quiver has more than two pathways between some vertices");
    PathwayReport rep = enumerate_pathways(fq.full());
    const int fv = fq.framed_vertex();
    std::vector<PathSequence> labels;
    for (int j = 1; j <= fq.full().vertex_count(); ++j) {
        for (const PathWord& w : rep.pair(fv, j)) {
            if (w.empty()) continue;
            PathSequence label(w.arrows.rbegin(), w.arrows.rend());
            labels.push_back(std::move(label));
        }
    }
    std::sort(labels.begin(), labels.end(), seq_less);
    return labels;
}

std::vector<std::vector<int>> increasing_tuples(int size, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= bound; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

} // namespace

std::vector<Bitableau> enumerate_row_generators(const FramedQuiver& fq, const GeneralRep& rep,
                                                int n, int m) {
    if (n != rep.n() || m != rep.m())
        throw std::invalid_argument("n, m must match the representation");
    std::vector<Bitableau> out;
    for (const PathSequence& label : framed_pathway_labels(fq)) {
        for (int p = 1; p <= n; ++p) {
            const int width = n - p + 1;
            if (width > m) continue;
            std::vector<int> jrow(width);
            std::iota(jrow.begin(), jrow.end(), p);
            for (auto& tuple : increasing_tuples(width, m)) {
                Bitableau bt;
                bt.j_rows.push_back(jrow);
                bt.i_rows.push_back(tuple);
                bt.labels.push_back(label);
                out.push_back(std::move(bt));
            }
        }
    }
    return out;
}

namespace {

struct RowGen {
    PathSequence label;
    std::vector<int> jrow, irow;
    Polynomial value;
    int degree = 0;
};

// rows a immediately above b within one label block
bool rows_adjacent_ok(const RowGen& a, const RowGen& b) {
    if (b.jrow.size() > a.jrow.size()) return false;
    for (std::size_t c = 0; c < b.jrow.size(); ++c) {
        if (a.jrow[c] > b.jrow[c]) return false;
        if (a.irow[c] > b.irow[c]) return false;
    }
    return true;
}

} // namespace

std::vector<BlockStandardProduct> enumerate_block_standard_detailed(const FramedQuiver& fq,
                                                                    const GeneralRep& rep, int d,
                                                                    bool parallel) {
    if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
    std::vector<std::vector<RowGen>> groups;
    for (const Bitableau& bt : enumerate_row_generators(fq, rep, rep.n(), rep.m())) {
        RowGen g;
        g.label = bt.labels[0];
        g.jrow = bt.j_rows[0];
        g.irow = bt.i_rows[0];
        g.degree = static_cast<int>(g.jrow.size() * g.label.size());
        if (g.degree > d) continue;
        g.value = eval_bideterminant(bt, rep);
        if (groups.empty() || groups.back().front().label != g.label)
            groups.emplace_back();
        groups.back().push_back(std::move(g));
    }

    std::vector<BlockStandardProduct> out;
    std::vector<std::vector<const RowGen*>> picked_rows;
    std::vector<const RowGen*> chosen;

    auto emit = [&](int used_degree) {
        Bitableau bt;
        for (const RowGen* r : chosen) {
            bt.j_rows.push_back(r->jrow);
            bt.i_rows.push_back(r->irow);
            bt.labels.push_back(r->label);
        }
        for (const Monomial& mono : monomials_up_to_degree(rep.diagonal_vars(), d - used_degree)) {
            BlockStandardProduct prod;
            prod.bitableau = bt;
            prod.diagonal = mono;
            prod.degree = used_degree + mono.degree();
            out.push_back(std::move(prod));
            picked_rows.push_back(chosen);
        }
    };

    std::function<void(std::size_t, int)> pick_group = [&](std::size_t g, int deg) {
        if (g == groups.size()) {
            emit(deg);
            return;
        }
        std::function<void(std::size_t, int)> chain = [&](std::size_t from, int cur) {
            pick_group(g + 1, cur);
            for (std::size_t k = from; k < groups[g].size(); ++k) {
                const RowGen& cand = groups[g][k];
                if (cur + cand.degree > d) continue;
                if (!chosen.empty() && chosen.back()->label == cand.label &&
                    !rows_adjacent_ok(*chosen.back(), cand))
                    continue;
                chosen.push_back(&cand);
                chain(k, cur + cand.degree); // re-enter at k so rows may repeat
                chosen.pop_back();
            }
        };
        chain(0, deg);
    };
    pick_group(0, 0);

    // evaluation kernel: independent per product, identical results
    // whether or not it runs under OpenMP
    const int count = static_cast<int>(out.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 32)
        for (int i = 0; i < count; ++i) {
            Polynomial v = Polynomial::term(Rat(1), out[i].diagonal);
            for (const RowGen* r : picked_rows[i]) v *= r->value;
            out[i].value = std::move(v);
        }
    } else {
        for (int i = 0; i < count; ++i) {
            Polynomial v = Polynomial::term(Rat(1), out[i].diagonal);
            for (const RowGen* r : picked_rows[i]) v *= r->value;
            out[i].value = std::move(v);
        }
    }
    return out;
}

std::vector<Polynomial> enumerate_block_standard(const FramedQuiver& fq, const GeneralRep& rep,
                                                 int d) {
    std::vector<Polynomial> out;
    for (auto& prod : enumerate_block_standard_detailed(fq, rep, d)) out.push_back(prod.value);
    return out;
}

bool lemma48_check(int n, int m, int p) {
    if (p < 1 || p > n || n - p + 1 > m)
        throw std::invalid_argument("need 1 <= p <= n and n - p + 1 <= m");
    PolyMatrix x(n, m);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= m; ++c) x.at(r, c) = Polynomial::variable(VarId::coord(0, r, c));
    PolyMatrix b(n, n);
    for (int r = 1; r <= n; ++r)
        for (int c = r; c <= n; ++c) b.at(r, c) = Polynomial::variable(VarId::param(0, r, c));
    PolyMatrix bx = b * x;

    Polynomial chi(1L);
    for (int i = p; i <= n; ++i) chi *= Polynomial::variable(VarId::param(0, i, i));

    const int width = n - p + 1;
    std::vector<int> rows(width);
    std::iota(rows.begin(), rows.end(), p);
    for (const auto& tuple : increasing_tuples(width, m)) {
        Polynomial f = det_of_minor(x, rows, tuple);
        Polynomial translated = det_of_minor(bx, rows, tuple);
        if (!(translated == chi * f)) return false;
    }
    return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (int part = std::min(remaining, cur.empty() ? max_part : cur.back()); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, max_part, cur, out);
        cur.pop_back();
    }
}

// standard tableaux of the given shape with entries bounded by N:
// rows strictly increasing, columns nondecreasing
void standard_tableaux_rec(const std::vector<int>& shape, int bound, std::size_t row,
                           Tableau& cur, std::vector<Tableau>& out) {
    if (row == shape.size()) {
        out.push_back(cur);
        return;
    }
    std::vector<std::vector<int>> rows = increasing_tuples(shape[row], bound);
    for (auto& r : rows) {
        if (row > 0) {
            bool ok = true;
            for (std::size_t c = 0; c < r.size(); ++c)
                if (cur.rows[row - 1][c] > r[c]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
        }
        cur.rows.push_back(r);
        standard_tableaux_rec(shape, bound, row + 1, cur, out);
        cur.rows.pop_back();
    }
}

std::vector<Tableau> standard_tableaux(const std::vector<int>& shape, int bound) {
    std::vector<Tableau> out;
    Tableau cur;
    standard_tableaux_rec(shape, bound, 0, cur, out);
    return out;
}

} // namespace

GrosshansReport grosshans_basis_check(int n, int m, int d) {
    if (n < 1 || m < 1 || d < 0) throw std::invalid_argument("bad parameters");
    if (n > 3 || m > 3 || d > 3)
        throw ResourceGuardError("grosshans_basis_check guarded to n, m <= 3 and d <= 3");

    PolyMatrix x(n, m);
    std::vector<VarId> vars;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= m; ++c) {
            VarId v = VarId::coord(0, r, c);
            x.at(r, c) = Polynomial::variable(v);
            vars.push_back(v);
        }
    std::sort(vars.begin(), vars.end());
    GradedBasis basis(vars, d);
    EchelonForm ef(basis.size());

    GrosshansReport rep;
    rep.expected = binomial(n * m + d, d);

    const int maxpart = std::min(n, m);
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    partitions_rec(d, maxpart, cur, shapes);

    for (const auto& shape : shapes) {
        for (const Tableau& j : standard_tableaux(shape, n)) {
            for (const Tableau& i : standard_tableaux(shape, m)) {
                Polynomial bidet(1L);
                for (std::size_t r = 0; r < shape.size(); ++r)
                    bidet *= det_of_minor(x, j.rows[r], i.rows[r]);
                ++rep.count;
                ef.insert(basis.to_row(bidet));
            }
        }
    }
    rep.rank = ef.rank();
    rep.pass = rep.count == rep.expected && rep.rank == rep.count;
    return rep;
}

} // namespace quivinv
