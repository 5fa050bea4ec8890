#pragma once
// Text formats: graph6, edge lists, geometric representations, colorings,
// and DOT output.  Parsers throw parse_error with the byte offset of the
// first offending position; emitters produce text the parsers round-trip.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "classes.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace propc {

enum class GraphFormat { autodetect, graph6, edge_list };

namespace detail {

// Largest order the text tools will materialise; everything in this
// toolkit is meant for desk-scale inputs.
inline constexpr long long kMaxParsedVertices = 10000;

struct LineCursor {
    std::string_view text;
    std::size_t pos = 0;

    // next non-empty, non-comment line; second member is its byte offset
    std::optional<std::pair<std::string_view, std::size_t>> next() {
        while (pos < text.size()) {
            std::size_t start = pos;
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            pos = end + (end < text.size() ? 1 : 0);
            std::string_view line = text.substr(start, end - start);
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                line.remove_suffix(1);
            std::size_t lead = line.find_first_not_of(" \t");
            if (lead == std::string_view::npos) continue;
            line.remove_prefix(lead);
            start += lead;
            if (line.front() == '#') continue;
            return std::pair{line, start};
        }
        return std::nullopt;
    }
};

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline long long parse_int_field(std::string_view tok, std::size_t offset) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error("expected an integer, got '" + std::string(tok) + "'", offset);
    return value;
}

inline int graph6_byte(std::string_view s, std::size_t i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw parse_error("byte outside the graph6 alphabet", i);
    return c - 63;
}

}  // namespace detail

// --- graph6 -----------------------------------------------------------

inline Graph parse_graph6(std::string_view s) {
    static constexpr std::string_view header = ">>graph6<<";
    std::size_t pos = 0;
    if (s.substr(0, header.size()) == header) pos = header.size();
    if (pos >= s.size()) throw parse_error("missing graph6 size byte", pos);

    long long n = 0;
    int first = detail::graph6_byte(s, pos);
    if (first < 63) {
        n = first;
        pos += 1;
    } else {  // char 126: three more size bytes carry an 18-bit order
        if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 126)
            throw parse_error("graph6 orders above 258047 are not supported", pos + 1);
        if (pos + 4 > s.size()) throw parse_error("truncated graph6 size field", s.size());
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | detail::graph6_byte(s, pos + i);
        pos += 4;
    }
    if (n > detail::kMaxParsedVertices)
        throw parse_error("graph order exceeds the tool limit of 10000", pos);

    long long bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos < body) throw parse_error("truncated graph6 body", s.size());
    if (s.size() - pos > body) throw parse_error("trailing bytes after graph6 body", pos + body);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((detail::graph6_byte(s, pos + bit / 6) >> (5 - bit % 6)) & 1)
                edges.emplace_back(u, v);
    for (; bit < static_cast<long long>(body) * 6; ++bit)
        if ((detail::graph6_byte(s, pos + bit / 6) >> (5 - bit % 6)) & 1)
            throw parse_error("nonzero padding bits in graph6 body", pos + bit / 6);
    return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string emit_graph6(const Graph& g) {
    long long n = g.vertex_count();
    if (n > detail::kMaxParsedVertices)
        throw argument_error("graph order exceeds the tool limit of 10000");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    long long bits = n * (n - 1) / 2;
    std::vector<int> body(static_cast<std::size_t>((bits + 5) / 6), 0);
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) body[bit / 6] |= 1 << (5 - bit % 6);
    for (int b : body) out.push_back(static_cast<char>(b + 63));
    return out;
}

// --- edge lists -------------------------------------------------------

inline Graph parse_edge_list(std::string_view text) {
    detail::LineCursor cursor{text};
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    long long max_id = -1;
    while (auto line = cursor.next()) {
        auto fields = detail::split_fields(line->first);
        if (fields.size() != 2)
            throw parse_error("expected 'u v' on each edge-list line", line->second);
        long long u = detail::parse_int_field(fields[0], line->second);
        long long v = detail::parse_int_field(fields[1], line->second);
        if (u < 0 || v < 0) throw parse_error("vertex ids must be nonnegative", line->second);
        if (u == v) throw parse_error("self-loops are not allowed", line->second);
        if (u > detail::kMaxParsedVertices || v > detail::kMaxParsedVertices)
            throw parse_error("vertex id exceeds the tool limit of 10000", line->second);
        auto key = std::minmax(u, v);
        if (!seen.insert({static_cast<int>(key.first), static_cast<int>(key.second)}).second)
            throw parse_error("duplicate edge", line->second);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max({max_id, u, v});
    }
    return Graph(static_cast<int>(max_id + 1), std::move(edges));
}

inline std::string emit_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::autodetect) {
    if (format == GraphFormat::autodetect) {
        detail::LineCursor cursor{text};
        auto line = cursor.next();
        if (!line) throw parse_error("empty graph input", text.size());
        bool spaced = line->first.find_first_of(" \t") != std::string_view::npos;
        format = spaced ? GraphFormat::edge_list : GraphFormat::graph6;
    }
    if (format == GraphFormat::graph6) {
        detail::LineCursor cursor{text};
        auto line = cursor.next();
        if (!line) throw parse_error("empty graph input", text.size());
        if (cursor.next()) throw parse_error("graph6 input must be a single line", cursor.pos);
        return parse_graph6(line->first);
    }
    return parse_edge_list(text);
}

// --- rationals and geometric representations --------------------------

inline Rational parse_rational(std::string_view tok, std::size_t offset = 0) {
    auto integer = [&](std::string_view part, std::size_t at) {
        return detail::parse_int_field(part, at);
    };
    if (auto slash = tok.find('/'); slash != std::string_view::npos) {
        long long num = integer(tok.substr(0, slash), offset);
        long long den = integer(tok.substr(slash + 1), offset + slash + 1);
        if (den == 0) throw parse_error("zero denominator", offset + slash + 1);
        return Rational(num, den);
    }
    if (auto dot = tok.find('.'); dot != std::string_view::npos) {
        bool negative = !tok.empty() && tok.front() == '-';
        std::string_view whole = tok.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
        std::string_view frac = tok.substr(dot + 1);
        if (frac.empty() || frac.size() > 12)
            throw parse_error("decimal part must have 1 to 12 digits", offset + dot + 1);
        long long whole_v = whole.empty() ? 0 : integer(whole, offset + (negative ? 1 : 0));
        long long frac_v = integer(frac, offset + dot + 1);
        if (whole_v < 0 || frac_v < 0)
            throw parse_error("malformed decimal", offset);
        long long scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rational value = Rational(whole_v) + Rational(frac_v, scale);
        return negative ? -value : value;
    }
    return Rational(integer(tok, offset));
}

namespace detail {

// Shared "<vertex> <field…>" reader: every vertex 0..max must appear once.
template <typename Field, typename ParseFields>
std::vector<Field> parse_vertex_table(std::string_view text, std::size_t fields_per_vertex,
                                      const char* shape, ParseFields&& parse_fields,
                                      LineCursor& cursor,
                                      std::vector<std::pair<std::string_view, std::size_t>>* skipped) {
    std::vector<std::optional<Field>> rows;
    while (auto line = cursor.next()) {
        auto fields = split_fields(line->first);
        if (!fields.empty() && skipped && !std::isdigit(static_cast<unsigned char>(fields[0].front())) &&
            fields[0].front() != '-') {
            skipped->push_back(*line);
            continue;
        }
        if (fields.size() != fields_per_vertex + 1)
            throw parse_error(std::string("expected '") + shape + "' on each line", line->second);
        long long v = parse_int_field(fields[0], line->second);
        if (v < 0 || v > kMaxParsedVertices)
            throw parse_error("vertex id out of range", line->second);
        if (rows.size() <= static_cast<std::size_t>(v)) rows.resize(static_cast<std::size_t>(v) + 1);
        if (rows[static_cast<std::size_t>(v)])
            throw parse_error("duplicate row for vertex " + std::to_string(v), line->second);
        rows[static_cast<std::size_t>(v)] = parse_fields(fields, line->second);
    }
    std::vector<Field> out;
    out.reserve(rows.size());
    for (std::size_t v = 0; v < rows.size(); ++v) {
        if (!rows[v])
            throw parse_error("missing row for vertex " + std::to_string(v), text.size());
        out.push_back(*rows[v]);
    }
    if (out.empty()) throw parse_error("no vertex rows found", text.size());
    return out;
}

}  // namespace detail

inline IntervalRepresentation parse_interval_representation(std::string_view text) {
    detail::LineCursor cursor{text};
    using Row = std::pair<Rational, Rational>;
    auto rows = detail::parse_vertex_table<Row>(
        text, 2, "v l r",
        [](const std::vector<std::string_view>& f, std::size_t at) {
            return Row{parse_rational(f[1], at), parse_rational(f[2], at)};
        },
        cursor, nullptr);
    return IntervalRepresentation{std::move(rows)};
}

inline ArcRepresentation parse_arc_representation(std::string_view text) {
    detail::LineCursor cursor{text};
    using Row = std::pair<Rational, Rational>;
    auto rows = detail::parse_vertex_table<Row>(
        text, 2, "v start end",
        [](const std::vector<std::string_view>& f, std::size_t at) {
            return Row{parse_rational(f[1], at), parse_rational(f[2], at)};
        },
        cursor, nullptr);
    return ArcRepresentation{std::move(rows)};
}

// weight rows "v w" plus one threshold line "t <value>", any order
inline ThresholdSpec parse_threshold_spec(std::string_view text) {
    detail::LineCursor cursor{text};
    std::vector<std::pair<std::string_view, std::size_t>> extra;
    auto rows = detail::parse_vertex_table<Rational>(
        text, 1, "v w",
        [](const std::vector<std::string_view>& f, std::size_t at) {
            return parse_rational(f[1], at);
        },
        cursor, &extra);
    if (extra.size() != 1)
        throw parse_error("expected exactly one 't <value>' line", extra.empty() ? text.size() : extra[1].second);
    auto fields = detail::split_fields(extra[0].first);
    if (fields.size() != 2 || fields[0] != "t")
        throw parse_error("expected 't <value>'", extra[0].second);
    ThresholdSpec spec;
    spec.threshold = parse_rational(fields[1], extra[0].second);
    spec.weights = std::move(rows);
    return spec;
}

// one "b <count>" line, then one "a <b-index…>" line per left-side vertex
inline ChainSpec parse_chain_spec(std::string_view text) {
    detail::LineCursor cursor{text};
    ChainSpec spec;
    bool saw_b = false;
    while (auto line = cursor.next()) {
        auto fields = detail::split_fields(line->first);
        if (fields.empty()) continue;
        if (fields[0] == "b") {
            if (saw_b) throw parse_error("duplicate 'b' line", line->second);
            if (fields.size() != 2) throw parse_error("expected 'b <count>'", line->second);
            long long c = detail::parse_int_field(fields[1], line->second);
            if (c < 0 || c > detail::kMaxParsedVertices)
                throw parse_error("side size out of range", line->second);
            spec.b_count = static_cast<int>(c);
            saw_b = true;
        } else if (fields[0] == "a") {
            std::vector<int> nbrs;
            for (std::size_t i = 1; i < fields.size(); ++i) {
                long long x = detail::parse_int_field(fields[i], line->second);
                if (x < 0 || x > detail::kMaxParsedVertices)
                    throw parse_error("b-side index out of range", line->second);
                nbrs.push_back(static_cast<int>(x));
            }
            spec.a_neighbors.push_back(std::move(nbrs));
        } else {
            throw parse_error("expected an 'a' or 'b' line", line->second);
        }
    }
    if (!saw_b) throw parse_error("missing 'b <count>' line", text.size());
    if (spec.a_neighbors.empty()) throw parse_error("missing 'a' lines", text.size());
    return spec;
}

// --- colorings --------------------------------------------------------

inline EdgeColoring parse_edge_coloring(std::string_view text, const Graph& g) {
    detail::LineCursor cursor{text};
    std::vector<int> colors(g.edges().size(), 0);
    while (auto line = cursor.next()) {
        auto fields = detail::split_fields(line->first);
        if (fields.size() != 3)
            throw parse_error("expected 'u v color' on each line", line->second);
        long long u = detail::parse_int_field(fields[0], line->second);
        long long v = detail::parse_int_field(fields[1], line->second);
        long long c = detail::parse_int_field(fields[2], line->second);
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || !g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw parse_error("no such edge in the graph", line->second);
        if (c < 1) throw parse_error("colors are positive integers", line->second);
        int idx = g.edge_index(static_cast<int>(u), static_cast<int>(v));
        if (colors[static_cast<std::size_t>(idx)] != 0)
            throw parse_error("edge colored twice", line->second);
        colors[static_cast<std::size_t>(idx)] = static_cast<int>(c);
    }
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == 0) {
            auto [u, v] = g.edges()[i];
            throw parse_error("edge " + std::to_string(u) + " " + std::to_string(v) + " is uncolored",
                              text.size());
        }
    return EdgeColoring(g, std::move(colors));
}

inline std::string emit_edge_coloring(const EdgeColoring& coloring) {
    std::string out;
    const Graph& g = coloring.host();
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        auto [u, v] = g.edges()[i];
        out += std::to_string(u) + " " + std::to_string(v) + " " +
               std::to_string(coloring.color_of_edge(static_cast<int>(i))) + "\n";
    }
    return out;
}

// --- DOT output -------------------------------------------------------

namespace detail {

inline const char* dot_color(int c) {
    static constexpr const char* palette[] = {
        "#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
        "#ff7f00", "#a65628", "#f781bf", "#00ced1",
    };
    return palette[(c - 1) % 8];
}

}  // namespace detail

inline std::string emit_dot(const Graph& g, const EdgeColoring* coloring = nullptr,
                            const VertexSet* highlights = nullptr) {
    if (coloring && &coloring->host() != &g)
        throw argument_error("coloring belongs to a different graph");
    if (highlights && highlights->universe() != g.vertex_count())
        throw argument_error("highlight set universe does not match the graph");
    std::string out = "graph G {\n  node [shape=circle, fontsize=10];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v);
        if (highlights && highlights->contains(v)) out += " [style=filled, fillcolor=gold]";
        out += ";\n";
    }
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        auto [u, v] = g.edges()[i];
        out += "  " + std::to_string(u) + " -- " + std::to_string(v);
        if (coloring) {
            int c = coloring->color_of_edge(static_cast<int>(i));
            out += " [color=\"" + std::string(detail::dot_color(c)) + "\", xlabel=\"" +
                   std::to_string(c) + "\", penwidth=2]";
        }
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace propc
