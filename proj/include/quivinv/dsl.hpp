#ifndef QUIVINV_DSL_HPP
#define QUIVINV_DSL_HPP

#include "quivinv/quiver.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quivinv {

struct SourceLoc {
    int line = 0; // 1-based
    int col = 0;
};

struct ParseError : std::runtime_error {
    ParseError(SourceLoc where, const std::string& message)
        : std::runtime_error("line " + std::to_string(where.line) + ", col " +
                             std::to_string(where.col) + ": " + message),
          loc(where) {}
    SourceLoc loc;
};

/// Parsed quiver file. Line-oriented grammar:
///   quiver <name>
///   vertex <id>
///   arrow <id> : <tail> -> <head>
///   frame <id> : * -> <vertex>
/// '#' starts a comment; whitespace is free outside tokens.
struct QuiverDoc {
    struct VertexDecl {
        std::string id;
        SourceLoc loc;
    };
    struct ArrowDecl {
        std::string id, tail, head;
        SourceLoc loc;
    };
    struct FrameDecl {
        std::string id, head;
        SourceLoc loc;
    };

    std::string name;
    std::vector<VertexDecl> vertices;
    std::vector<ArrowDecl> arrows;
    std::optional<FrameDecl> frame;

    bool framed() const { return frame.has_value(); }
    int vertex_index(const std::string& id) const; // 1-based, 0 if unknown

    Quiver to_quiver() const;        // base quiver (ignores framing)
    FramedQuiver to_framed() const;  // requires framed()
    std::string serialize() const;

    bool operator==(const QuiverDoc&) const;
};

QuiverDoc parse_quiver_dsl(const std::string& text);

} // namespace quivinv

#endif
