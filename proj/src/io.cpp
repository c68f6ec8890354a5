#include "tcrs/io.hpp"

#include "tcrs/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tcrs {

using nlohmann::json;

namespace {

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

void check_keys(const json& doc, std::initializer_list<std::string_view> allowed)
{
    if (!doc.is_object())
        throw ParseError("top level: expected a JSON object");
    for (const auto& [key, _] : doc.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError("unexpected key '" + key + "'");
}

const json& require(const json& doc, const std::string& key)
{
    auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError("missing key '" + key + "'");
    return *it;
}

std::string string_at(const json& value, const std::string& where)
{
    if (!value.is_string())
        throw ParseError(where + ": expected a string");
    return value.get<std::string>();
}

std::string comment_of(const json& doc)
{
    auto it = doc.find("comment");
    if (it == doc.end())
        return {};
    return string_at(*it, "comment");
}

Labels vertices_of(const json& doc)
{
    const auto& list = require(doc, "vertices");
    if (!list.is_array())
        throw ParseError("vertices: expected an array");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < list.size(); ++i)
        names.push_back(string_at(list[i], "vertices[" + std::to_string(i) + "]"));
    return LabelSet::make(std::move(names));
}

template <typename Fn> auto with_context(const std::string& where, Fn&& fn)
{
    try {
        return fn();
    } catch (const DuplicateArc& e) {
        throw DuplicateArc(where + ": " + e.what());
    } catch (const SelfLoop& e) {
        throw SelfLoop(where + ": " + e.what());
    } catch (const UnknownVertex& e) {
        throw UnknownVertex(where + ": " + e.what());
    } catch (const InvalidTime& e) {
        throw InvalidTime(where + ": " + e.what());
    }
}

std::string quoted(std::string_view s)
{
    return json(std::string(s)).dump();
}

std::string dot_id(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + '"';
}

void emit_header(std::ostringstream& out, std::string_view comment)
{
    out << "{\n";
    if (!comment.empty())
        out << "  \"comment\": " << quoted(comment) << ",\n";
}

void emit_vertices(std::ostringstream& out, const LabelSet& labels)
{
    out << "  \"vertices\": [";
    for (std::size_t i = 0; i < labels.size(); ++i)
        out << (i ? ", " : "") << quoted(labels[static_cast<Vertex>(i)]);
    out << "]";
}

} // namespace

RequestDocument parse_request(std::string_view text)
{
    auto doc = parse_json(text);
    check_keys(doc, {"comment", "vertices", "arcs"});
    RequestDocument result{DiGraph(vertices_of(doc)), comment_of(doc)};
    const auto& arcs = require(doc, "arcs");
    if (!arcs.is_array())
        throw ParseError("arcs: expected an array");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        auto where = "arcs[" + std::to_string(i) + "]";
        const auto& arc = arcs[i];
        if (!arc.is_array() || arc.size() != 2)
            throw ParseError(where + ": expected a [from, to] pair");
        auto from = string_at(arc[0], where + "[0]");
        auto to = string_at(arc[1], where + "[1]");
        with_context(where, [&] {
            if (!result.graph.add_arc(from, to))
                throw DuplicateArc("duplicate arc (" + from + ", " + to + ")");
            return 0;
        });
    }
    return result;
}

TemporalDocument parse_temporal(std::string_view text)
{
    auto doc = parse_json(text);
    check_keys(doc, {"comment", "directed", "vertices", "edges"});
    const auto& directed = require(doc, "directed");
    if (!directed.is_boolean())
        throw ParseError("directed: expected a boolean");
    TemporalDocument result{
        TemporalGraph(vertices_of(doc), directed.get<bool>() ? Orientation::directed : Orientation::undirected),
        comment_of(doc)};
    const auto& edges = require(doc, "edges");
    if (!edges.is_array())
        throw ParseError("edges: expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto where = "edges[" + std::to_string(i) + "]";
        const auto& e = edges[i];
        if (!e.is_object())
            throw ParseError(where + ": expected an object");
        for (const auto& [key, _] : e.items())
            if (key != "u" && key != "v" && key != "t")
                throw ParseError(where + ": unexpected key '" + key + "'");
        auto u = string_at(require(e, "u"), where + ".u");
        auto v = string_at(require(e, "v"), where + ".v");
        const auto& t = require(e, "t");
        if (!t.is_number_integer())
            throw ParseError(where + ".t: expected an integer");
        if (t.is_number_unsigned() ? t.get<std::uint64_t>() == 0 : t.get<std::int64_t>() <= 0)
            throw InvalidTime(where + ".t: appearance times must be positive");
        auto time = t.get<std::uint64_t>();
        with_context(where, [&] {
            result.graph.add(u, v, time);
            return 0;
        });
    }
    return result;
}

std::string emit_request(const DiGraph& g, std::string_view comment)
{
    std::ostringstream out;
    emit_header(out, comment);
    emit_vertices(out, *g.labels());
    out << ",\n  \"arcs\": [";
    auto arcs = g.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i)
        out << (i ? ",\n" : "\n") << "    [" << quoted(g.label(arcs[i].from)) << ", " << quoted(g.label(arcs[i].to))
            << "]";
    out << (arcs.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

std::string emit_temporal(const TemporalGraph& g, std::string_view comment)
{
    std::ostringstream out;
    const auto& labels = *g.labels();
    emit_header(out, comment);
    out << "  \"directed\": " << (g.directed() ? "true" : "false") << ",\n";
    emit_vertices(out, labels);
    out << ",\n  \"edges\": [";
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        out << (i ? ",\n" : "\n") << "    {\"u\": " << quoted(labels[edges[i].u]) << ", \"v\": "
            << quoted(labels[edges[i].v]) << ", \"t\": " << edges[i].t << "}";
    out << (edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

bool is_temporal_document(std::string_view text)
{
    auto doc = parse_json(text);
    return doc.is_object() && doc.contains("edges");
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string to_dot(const DiGraph& g)
{
    std::ostringstream out;
    out << "digraph requests {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out << "  " << dot_id(g.label(v)) << ";\n";
    for (auto arc : g.arcs())
        out << "  " << dot_id(g.label(arc.from)) << " -> " << dot_id(g.label(arc.to)) << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const TemporalGraph& g)
{
    std::ostringstream out;
    const auto& labels = *g.labels();
    const char* link = g.directed() ? " -> " : " -- ";
    out << (g.directed() ? "digraph" : "graph") << " temporal {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out << "  " << dot_id(labels[v]) << ";\n";
    for (const auto& e : g.edges())
        out << "  " << dot_id(labels[e.u]) << link << dot_id(labels[e.v]) << " [label=\"" << e.t << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace tcrs
