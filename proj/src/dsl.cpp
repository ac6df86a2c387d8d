#include "quivinv/dsl.hpp"

#include <cctype>
#include <sstream>

namespace quivinv {

namespace {

struct Token {
    std::string text;
    SourceLoc loc;
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

std::vector<Token> tokenize_line(const std::string& line, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        SourceLoc loc{lineno, static_cast<int>(i) + 1};
        if (c == ':') {
            out.push_back({":", loc});
            ++i;
        } else if (c == '*') {
            out.push_back({"*", loc});
            ++i;
        } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({"->", loc});
            i += 2;
        } else if (ident_char(c)) {
            std::size_t j = i;
            while (j < line.size() && ident_char(line[j])) ++j;
            out.push_back({line.substr(i, j - i), loc});
            i = j;
        } else {
            throw ParseError(loc, std::string("unexpected character '") + c + "'");
        }
    }
    return out;
}

void expect(const std::vector<Token>& ts, std::size_t i, const std::string& what,
            SourceLoc fallback) {
    if (i >= ts.size()) throw ParseError(fallback, "expected " + what);
}

void expect_token(const std::vector<Token>& ts, std::size_t i, const std::string& text,
                  SourceLoc fallback) {
    expect(ts, i, "'" + text + "'", fallback);
    if (ts[i].text != text)
        throw ParseError(ts[i].loc, "expected '" + text + "', got '" + ts[i].text + "'");
}

} // namespace

int QuiverDoc::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i) + 1;
    return 0;
}

QuiverDoc parse_quiver_dsl(const std::string& text) {
    QuiverDoc doc;
    bool have_header = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto declared_arrow = [&](const std::string& id) {
        for (const auto& a : doc.arrows)
            if (a.id == id) return true;
        return doc.frame && doc.frame->id == id;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Token> ts = tokenize_line(line, lineno);
        if (ts.empty()) continue;
        const Token& head = ts[0];
        SourceLoc end{lineno, static_cast<int>(line.size()) + 1};
        if (!have_header) {
            if (head.text != "quiver")
                throw ParseError(head.loc, "file must start with 'quiver <name>'");
            expect(ts, 1, "quiver name", end);
            if (ts.size() > 2) throw ParseError(ts[2].loc, "trailing tokens after quiver name");
            doc.name = ts[1].text;
            have_header = true;
            continue;
        }
        if (head.text == "quiver") {
            throw ParseError(head.loc, "duplicate quiver header");
        } else if (head.text == "vertex") {
            expect(ts, 1, "vertex id", end);
            if (ts.size() > 2) throw ParseError(ts[2].loc, "trailing tokens after vertex id");
            if (doc.vertex_index(ts[1].text) != 0)
                throw ParseError(ts[1].loc, "duplicate vertex id '" + ts[1].text + "'");
            doc.vertices.push_back({ts[1].text, ts[1].loc});
        } else if (head.text == "arrow") {
            expect(ts, 1, "arrow id", end);
            expect_token(ts, 2, ":", end);
            expect(ts, 3, "tail vertex", end);
            expect_token(ts, 4, "->", end);
            expect(ts, 5, "head vertex", end);
            if (ts.size() > 6) throw ParseError(ts[6].loc, "trailing tokens after arrow");
            if (declared_arrow(ts[1].text))
                throw ParseError(ts[1].loc, "duplicate arrow id '" + ts[1].text + "'");
            if (doc.vertex_index(ts[3].text) == 0)
                throw ParseError(ts[3].loc, "undeclared vertex " + ts[3].text);
            if (doc.vertex_index(ts[5].text) == 0)
                throw ParseError(ts[5].loc, "undeclared vertex " + ts[5].text);
            doc.arrows.push_back({ts[1].text, ts[3].text, ts[5].text, ts[1].loc});
        } else if (head.text == "frame") {
            expect(ts, 1, "framing arrow id", end);
            expect_token(ts, 2, ":", end);
            expect_token(ts, 3, "*", end);
            expect_token(ts, 4, "->", end);
            expect(ts, 5, "target vertex", end);
            if (ts.size() > 6) throw ParseError(ts[6].loc, "trailing tokens after frame");
            if (doc.frame) throw ParseError(head.loc, "multiple framings declared");
            if (declared_arrow(ts[1].text))
                throw ParseError(ts[1].loc, "duplicate arrow id '" + ts[1].text + "'");
            if (doc.vertex_index(ts[5].text) == 0)
                throw ParseError(ts[5].loc, "undeclared vertex " + ts[5].text);
            doc.frame = QuiverDoc::FrameDecl{ts[1].text, ts[5].text, ts[1].loc};
        } else {
            throw ParseError(head.loc, "unknown directive '" + head.text + "'");
        }
    }
    if (!have_header) throw ParseError({1, 1}, "empty input: expected 'quiver <name>'");
    return doc;
}

Quiver QuiverDoc::to_quiver() const {
    Quiver q(name);
    for (const auto& v : vertices) q.add_vertex(v.id);
    for (const auto& a : arrows) q.add_arrow(a.id, vertex_index(a.tail), vertex_index(a.head));
    return q;
}

FramedQuiver QuiverDoc::to_framed() const {
    if (!frame) throw std::logic_error("document has no framing");
    return FramedQuiver::frame(to_quiver(), vertex_index(frame->head), frame->id);
}

std::string QuiverDoc::serialize() const {
    std::ostringstream os;
    os << "quiver " << name << '\n';
    for (const auto& v : vertices) os << "vertex " << v.id << '\n';
    for (const auto& a : arrows) os << "arrow " << a.id << " : " << a.tail << " -> " << a.head << '\n';
    if (frame) os << "frame " << frame->id << " : * -> " << frame->head << '\n';
    return os.str();
}

bool QuiverDoc::operator==(const QuiverDoc& o) const {
    if (name != o.name || vertices.size() != o.vertices.size() || arrows.size() != o.arrows.size() ||
        frame.has_value() != o.frame.has_value())
        return false;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id != o.vertices[i].id) return false;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id != o.arrows[i].id || arrows[i].tail != o.arrows[i].tail ||
            arrows[i].head != o.arrows[i].head)
            return false;
    if (frame && (frame->id != o.frame->id || frame->head != o.frame->head)) return false;
    return true;
}

} // namespace quivinv
