#ifndef QUIVINV_QUIVER_HPP
#define QUIVINV_QUIVER_HPP

#include <optional>
#include <string>
#include <vector>

namespace quivinv {

struct Arrow {
    std::string name;
    int tail = 0; // 1-based vertex ids
    int head = 0;
};

/// Finite directed multigraph. Vertices are 1..vertex_count(), arrows are
/// indexed 0..arrow_count()-1 and carry display names. Loops and parallel
/// arrows are allowed. Immutable once built.
class Quiver {
public:
    Quiver() = default;
    explicit Quiver(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    int add_vertex(std::string display_name = "");
    int add_arrow(std::string name, int tail, int head);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const Arrow& arrow(int idx) const { return arrows_.at(idx); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::string& vertex_name(int v) const { return vertex_names_.at(v - 1); }

    /// Connectedness of the underlying undirected graph.
    bool connected() const;

private:
    std::string name_;
    std::vector<std::string> vertex_names_;
    std::vector<Arrow> arrows_;
};

/// A quiver with one framed vertex and a single framing arrow out of it.
/// Stored as the full quiver with the framed vertex last and the framing
/// arrow at index 0, so path sequences read off products end in 0.
class FramedQuiver {
public:
    static FramedQuiver frame(const Quiver& base, int target_vertex,
                              const std::string& framing_arrow_name = "a0");

    const Quiver& full() const { return full_; }
    Quiver base() const;
    int framed_vertex() const { return full_.vertex_count(); }
    int framing_arrow() const { return 0; }
    int frame_target() const { return full_.arrow(0).head; }

private:
    Quiver full_;
};

/// Composable word of arrows in traversal order (first arrow traversed is
/// arrows.front()); the empty word is the trivial path at `source`.
struct PathWord {
    int source = 0;
    std::vector<int> arrows;

    bool empty() const { return arrows.empty(); }
    int length() const { return static_cast<int>(arrows.size()); }
    int target(const Quiver& q) const;
    bool composable(const Quiver& q) const;

    /// Arrow names in composition order (last traversed leftmost),
    /// "e_<v>" for the trivial path.
    std::string str(const Quiver& q) const;

    bool operator==(const PathWord&) const = default;
};

/// True iff no nonempty contiguous factor is immediately repeated.
/// Throws std::invalid_argument on a non-composable word.
bool is_square_free(const PathWord& p, const Quiver& q);

struct PathwayReport {
    enum class Outcome { AtMostTwo, MoreThanTwo };

    Outcome outcome = Outcome::AtMostTwo;
    bool connected = true;
    /// pathways[i-1][j-1] = pathways from i to j; complete iff AtMostTwo.
    std::vector<std::vector<std::vector<PathWord>>> pathways;
    // populated when MoreThanTwo
    int witness_from = 0, witness_to = 0;
    std::vector<PathWord> witnesses;

    const std::vector<PathWord>& pair(int i, int j) const { return pathways.at(i - 1).at(j - 1); }
};

/// Breadth-first enumeration of square-free composable words in
/// increasing length. Trivial paths count toward (i,i). Stops with
/// MoreThanTwo the moment any pair reaches three pathways; otherwise the
/// search exhausts and the full pathway lists are returned. `length_cap`
/// (< 0 means the default 4*|Q1|*|Q0|) is a defensive guard only: hitting
/// it raises ResourceGuardError, never a silent wrong answer.
PathwayReport enumerate_pathways(const Quiver& q, int length_cap = -1);

PathwayReport::Outcome classify(const Quiver& q, int length_cap = -1);

// Named families. Orientation flags give the direction of each edge in
// construction order: true = toward the higher-numbered vertex (the
// default everywhere).
Quiver make_ade(char type, int rank, const std::vector<bool>& orientation = {});
Quiver make_affine_ade(char type, int rank, const std::vector<bool>& orientation = {});
Quiver make_star(const std::vector<int>& legs, bool toward_center = false);
Quiver make_comet(const std::vector<int>& legs, bool toward_center = false);
Quiver make_jordan(int loops);
/// Path quiver with r arrows 1 -> 2 -> ... -> r+1 (r = 0 gives the point
/// quiver, used as the base of the framed point quiver).
Quiver make_equioriented_a(int arrows);

} // namespace quivinv

#endif
