#include "quivinv/quiver.hpp"

#include "quivinv/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace quivinv {

int Quiver::add_vertex(std::string display_name) {
    if (display_name.empty()) display_name = std::to_string(vertex_names_.size() + 1);
    vertex_names_.push_back(std::move(display_name));
    return vertex_count();
}

int Quiver::add_arrow(std::string name, int tail, int head) {
    if (tail < 1 || tail > vertex_count() || head < 1 || head > vertex_count())
        throw std::invalid_argument("arrow endpoint is not a declared vertex");
    arrows_.push_back(Arrow{std::move(name), tail, head});
    return arrow_count() - 1;
}

bool Quiver::connected() const {
    const int v = vertex_count();
    if (v <= 1) return true;
    std::vector<char> seen(v + 1, 0);
    std::deque<int> work{1};
    seen[1] = 1;
    int found = 1;
    while (!work.empty()) {
        int cur = work.front();
        work.pop_front();
        for (const Arrow& a : arrows_) {
            int nxt = 0;
            if (a.tail == cur && !seen[a.head]) nxt = a.head;
            else if (a.head == cur && !seen[a.tail]) nxt = a.tail;
            if (nxt) {
                seen[nxt] = 1;
                ++found;
                work.push_back(nxt);
            }
        }
    }
    return found == v;
}

FramedQuiver FramedQuiver::frame(const Quiver& base, int target_vertex,
                                 const std::string& framing_arrow_name) {
    if (target_vertex < 1 || target_vertex > base.vertex_count())
        throw std::invalid_argument("framing target is not a base vertex");
    FramedQuiver fq;
    fq.full_ = Quiver(base.name());
    for (int v = 1; v <= base.vertex_count(); ++v) fq.full_.add_vertex(base.vertex_name(v));
    int framed = fq.full_.add_vertex(base.vertex_name(target_vertex) + "'");
    fq.full_.add_arrow(framing_arrow_name, framed, target_vertex);
    for (const Arrow& a : base.arrows()) fq.full_.add_arrow(a.name, a.tail, a.head);
    return fq;
}

Quiver FramedQuiver::base() const {
    Quiver b(full_.name());
    for (int v = 1; v < full_.vertex_count(); ++v) b.add_vertex(full_.vertex_name(v));
    for (int i = 1; i < full_.arrow_count(); ++i) {
        const Arrow& a = full_.arrow(i);
        b.add_arrow(a.name, a.tail, a.head);
    }
    return b;
}

int PathWord::target(const Quiver& q) const {
    return arrows.empty() ? source : q.arrow(arrows.back()).head;
}

bool PathWord::composable(const Quiver& q) const {
    if (source < 1 || source > q.vertex_count()) return false;
    int at = source;
    for (int idx : arrows) {
        if (idx < 0 || idx >= q.arrow_count()) return false;
        const Arrow& a = q.arrow(idx);
        if (a.tail != at) return false;
        at = a.head;
    }
    return true;
}

std::string PathWord::str(const Quiver& q) const {
    if (arrows.empty()) return "e_" + q.vertex_name(source);
    std::ostringstream os;
    for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
        if (it != arrows.rbegin()) os << '.';
        os << q.arrow(*it).name;
    }
    return os.str();
}

bool is_square_free(const PathWord& p, const Quiver& q) {
    if (!p.composable(q)) throw std::invalid_argument("word is not composable");
    const auto& w = p.arrows;
    const int n = static_cast<int>(w.size());
    for (int len = 1; 2 * len <= n; ++len)
        for (int start = 0; start + 2 * len <= n; ++start)
            if (std::equal(w.begin() + start, w.begin() + start + len, w.begin() + start + len))
                return false;
    return true;
}

namespace {

// a freshly extended word w+a is square-free iff w is and no repeated
// factor ends at the new position
bool extension_square_free(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    for (int len = 1; 2 * len <= n; ++len)
        if (std::equal(w.end() - 2 * len, w.end() - len, w.end() - len)) return false;
    return true;
}

} // namespace

PathwayReport enumerate_pathways(const Quiver& q, int length_cap) {
    const int v = q.vertex_count();
    const int na = q.arrow_count();
    if (length_cap < 0) length_cap = 4 * std::max(1, na) * std::max(1, v);

    PathwayReport rep;
    rep.connected = q.connected();
    rep.pathways.assign(v, std::vector<std::vector<PathWord>>(v));

    auto record = [&](const PathWord& w) -> bool {
        auto& list = rep.pathways[w.source - 1][w.target(q) - 1];
        list.push_back(w);
        if (list.size() >= 3) {
            rep.outcome = PathwayReport::Outcome::MoreThanTwo;
            rep.witness_from = w.source;
            rep.witness_to = w.target(q);
            rep.witnesses = list;
            return true;
        }
        return false;
    };

    std::vector<PathWord> frontier;
    for (int i = 1; i <= v; ++i) {
        PathWord trivial{i, {}};
        if (record(trivial)) return rep;
        frontier.push_back(std::move(trivial));
    }

    int length = 0;
    while (!frontier.empty()) {
        ++length;
        if (length > length_cap)
            throw ResourceGuardError("pathway search exceeded length cap " +
                                     std::to_string(length_cap) + " on quiver '" + q.name() + "'");
        std::vector<PathWord> next;
        for (const PathWord& w : frontier) {
            const int at = w.target(q);
            for (int idx = 0; idx < na; ++idx) {
                if (q.arrow(idx).tail != at) continue;
                PathWord ext{w.source, w.arrows};
                ext.arrows.push_back(idx);
                if (!extension_square_free(ext.arrows)) continue;
                if (record(ext)) return rep;
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    rep.outcome = PathwayReport::Outcome::AtMostTwo;
    return rep;
}

PathwayReport::Outcome classify(const Quiver& q, int length_cap) {
    return enumerate_pathways(q, length_cap).outcome;
}

namespace {

void check_rank(int rank, int least, const char* what) {
    if (rank < least)
        throw std::invalid_argument(std::string(what) + " rank must be at least " +
                                    std::to_string(least));
}

bool edge_dir(const std::vector<bool>& orientation, std::size_t e) {
    return e < orientation.size() ? orientation[e] : true;
}

// connect u-v with edge index e; orientation true points at the
// higher-numbered endpoint
void add_edge(Quiver& q, const std::vector<bool>& orientation, std::size_t e, int u, int v,
              const std::string& name) {
    int lo = std::min(u, v), hi = std::max(u, v);
    if (edge_dir(orientation, e))
        q.add_arrow(name, lo, hi);
    else
        q.add_arrow(name, hi, lo);
}

std::string arrow_label(std::size_t e) { return "a" + std::to_string(e + 1); }

Quiver star_shaped(std::string name, const std::vector<int>& legs, bool toward_center,
                   bool with_loop) {
    for (int l : legs)
        if (l < 1) throw std::invalid_argument("leg lengths must be at least 1");
    Quiver q(std::move(name));
    q.add_vertex(); // center = 1
    std::size_t e = 0;
    if (with_loop) {
        q.add_arrow("zeta", 1, 1);
    }
    for (int leg : legs) {
        int prev = 1;
        for (int k = 0; k < leg; ++k) {
            int nv = q.add_vertex();
            if (toward_center)
                q.add_arrow(arrow_label(e++), nv, prev);
            else
                q.add_arrow(arrow_label(e++), prev, nv);
            prev = nv;
        }
    }
    return q;
}

} // namespace

Quiver make_ade(char type, int rank, const std::vector<bool>& orientation) {
    switch (type) {
    case 'A': {
        check_rank(rank, 1, "A");
        Quiver q("A" + std::to_string(rank));
        for (int i = 0; i < rank; ++i) q.add_vertex();
        for (int i = 1; i < rank; ++i)
            add_edge(q, orientation, i - 1, i, i + 1, arrow_label(i - 1));
        return q;
    }
    case 'D': {
        check_rank(rank, 4, "D");
        // path 1..rank-1 with vertex rank attached to rank-2
        Quiver q("D" + std::to_string(rank));
        for (int i = 0; i < rank; ++i) q.add_vertex();
        std::size_t e = 0;
        for (int i = 1; i < rank - 1; ++i) add_edge(q, orientation, e, i, i + 1, arrow_label(e)), ++e;
        add_edge(q, orientation, e, rank - 2, rank, arrow_label(e));
        return q;
    }
    case 'E': {
        if (rank < 6 || rank > 8) throw std::invalid_argument("E rank must be 6, 7 or 8");
        Quiver q = star_shaped("E" + std::to_string(rank), {1, 2, rank - 4}, false, false);
        if (!orientation.empty()) {
            // rebuild with explicit directions
            Quiver o(q.name());
            for (int v = 1; v <= q.vertex_count(); ++v) o.add_vertex();
            for (int i = 0; i < q.arrow_count(); ++i) {
                const Arrow& a = q.arrow(i);
                add_edge(o, orientation, i, a.tail, a.head, a.name);
            }
            return o;
        }
        return q;
    }
    default:
        throw std::invalid_argument("ADE type must be 'A', 'D' or 'E'");
    }
}

Quiver make_affine_ade(char type, int rank, const std::vector<bool>& orientation) {
    switch (type) {
    case 'A': {
        check_rank(rank, 1, "affine A");
        // cycle on rank+1 vertices; default orientation is cyclic
        Quiver q("A~" + std::to_string(rank));
        for (int i = 0; i <= rank; ++i) q.add_vertex();
        for (int i = 1; i <= rank; ++i) add_edge(q, orientation, i - 1, i, i + 1, arrow_label(i - 1));
        if (edge_dir(orientation, rank))
            q.add_arrow(arrow_label(rank), rank + 1, 1);
        else
            q.add_arrow(arrow_label(rank), 1, rank + 1);
        return q;
    }
    case 'D': {
        check_rank(rank, 4, "affine D");
        // forks at both ends of the path 3 - 4 - ... - (rank-1)
        Quiver q("D~" + std::to_string(rank));
        for (int i = 0; i <= rank; ++i) q.add_vertex();
        std::size_t e = 0;
        add_edge(q, orientation, e, 1, 3, arrow_label(e)), ++e;
        add_edge(q, orientation, e, 2, 3, arrow_label(e)), ++e;
        for (int i = 3; i < rank - 1; ++i) add_edge(q, orientation, e, i, i + 1, arrow_label(e)), ++e;
        add_edge(q, orientation, e, rank - 1, rank, arrow_label(e)), ++e;
        add_edge(q, orientation, e, rank - 1, rank + 1, arrow_label(e));
        return q;
    }
    case 'E': {
        if (rank < 6 || rank > 8) throw std::invalid_argument("affine E rank must be 6, 7 or 8");
        std::vector<int> legs = rank == 6 ? std::vector<int>{2, 2, 2}
                              : rank == 7 ? std::vector<int>{1, 3, 3}
                                          : std::vector<int>{1, 2, 5};
        Quiver q = star_shaped("E~" + std::to_string(rank), legs, false, false);
        return q;
    }
    default:
        throw std::invalid_argument("affine ADE type must be 'A', 'D' or 'E'");
    }
}

Quiver make_star(const std::vector<int>& legs, bool toward_center) {
    if (legs.empty()) throw std::invalid_argument("star needs at least one leg");
    return star_shaped("star", legs, toward_center, false);
}

Quiver make_comet(const std::vector<int>& legs, bool toward_center) {
    // central vertex carries exactly one loop; legs are equioriented chains
    return star_shaped("comet", legs, toward_center, true);
}

Quiver make_jordan(int loops) {
    if (loops < 1) throw std::invalid_argument("Jordan quiver needs at least one loop");
    Quiver q("jordan" + std::to_string(loops));
    q.add_vertex();
    for (int i = 0; i < loops; ++i) q.add_arrow(arrow_label(i), 1, 1);
    return q;
}

Quiver make_equioriented_a(int arrows) {
    if (arrows < 0) throw std::invalid_argument("arrow count must be nonnegative");
    Quiver q("eqA" + std::to_string(arrows));
    for (int i = 0; i <= arrows; ++i) q.add_vertex();
    for (int i = 1; i <= arrows; ++i) q.add_arrow(arrow_label(i - 1), i, i + 1);
    return q;
}

} // namespace quivinv
