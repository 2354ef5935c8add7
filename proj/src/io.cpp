#include "ctm/io.hpp"

#include <sstream>

#include <json.hpp>

namespace ctm {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

json perms_to_json(const std::vector<Perm>& perms) {
    json obj = json::object();
    for (size_t c = 0; c < perms.size(); ++c) obj[std::to_string(c + 1)] = perms[c];
    return obj;
}

json closed_to_json(const ColoredGraph& g, const std::string& name) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["colors"] = g.rank;
    doc["white"] = g.half_order;
    doc["perms"] = perms_to_json(g.perms);
    if (!name.empty()) doc["metadata"] = {{"name", name}};
    return doc;
}

std::vector<Perm> perms_from_json(const json& obj, int colors, int white) {
    if (!obj.is_object()) throw ParseError("perms must be an object keyed by color");
    std::vector<Perm> perms(colors);
    for (int c = 1; c <= colors; ++c) {
        std::string key = std::to_string(c);
        if (!obj.contains(key)) throw ParseError("perms missing color " + key);
        const json& arr = obj[key];
        if (!arr.is_array() || static_cast<int>(arr.size()) != white)
            throw ParseError("perms array for color " + key + " must have length " +
                             std::to_string(white));
        Perm p;
        for (const json& v : arr) {
            if (!v.is_number_integer()) throw ParseError("perms entry for color " + key +
                                                         " is not an integer");
            p.push_back(v.get<int>());
        }
        if (!is_permutation_vec(p)) throw ParseError("color " + key + " not a permutation");
        perms[c - 1] = std::move(p);
    }
    return perms;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

AnyGraph graph_from_json(const json& doc);

ColoredGraph closed_from_json(const json& doc) {
    AnyGraph g = graph_from_json(doc);
    if (!std::holds_alternative<ColoredGraph>(g))
        throw ParseError("expected a closed graph document (no prop0 key)");
    return std::get<ColoredGraph>(g);
}

AnyGraph graph_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("document must be an object");
    if (!doc.contains("format_version") || !doc["format_version"].is_number_integer())
        throw ParseError("missing integer format_version");
    if (doc["format_version"].get<int>() != kFormatVersion)
        throw ParseError("unsupported format_version");
    if (!doc.contains("colors") || !doc["colors"].is_number_integer())
        throw ParseError("missing integer colors");
    int colors = doc["colors"].get<int>();

    if (doc.contains("components")) {
        if (doc.contains("perms")) throw ParseError("document has both perms and components");
        if (!doc["components"].is_array()) throw ParseError("components must be an array");
        DisconnectedGraph d;
        d.rank = colors;
        for (const json& sub : doc["components"]) {
            ColoredGraph c = closed_from_json(sub);
            if (c.rank != colors) throw ParseError("component color count mismatch");
            d.components.push_back(std::move(c));
        }
        return flatten(d);
    }

    if (!doc.contains("white") || !doc["white"].is_number_integer())
        throw ParseError("missing integer white");
    int white = doc["white"].get<int>();
    if (!doc.contains("perms")) throw ParseError("missing perms");
    std::vector<Perm> perms = perms_from_json(doc["perms"], colors, white);

    if (doc.contains("prop0")) {
        const json& arr = doc["prop0"];
        if (!arr.is_array()) throw ParseError("prop0 must be an array of [white, black] pairs");
        std::vector<int> prop0(white, -1);
        for (const json& pair : arr) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                !pair[1].is_number_integer())
                throw ParseError("prop0 entries must be [white, black] integer pairs");
            int w = pair[0].get<int>(), b = pair[1].get<int>();
            if (w < 0 || w >= white || b < 0 || b >= white)
                throw ParseError("prop0 pair out of range");
            if (prop0[w] >= 0) throw ParseError("prop0 repeats white " + std::to_string(w));
            prop0[w] = b;
        }
        OpenFeynmanGraph g{colors, white, std::move(perms), std::move(prop0)};
        require_valid(g);
        return g;
    }
    ColoredGraph g{colors, white, std::move(perms)};
    require_valid(g);
    return g;
}

}  // namespace

std::string serialize(const ColoredGraph& g, const std::string& name) {
    return closed_to_json(g, name).dump();
}

std::string serialize(const OpenFeynmanGraph& g, const std::string& name) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["colors"] = g.rank;
    doc["white"] = g.half_order;
    doc["perms"] = perms_to_json(g.perms);
    json pairs = json::array();
    for (int w = 0; w < g.half_order; ++w)
        if (g.prop0[w] >= 0) pairs.push_back(json::array({w, g.prop0[w]}));
    doc["prop0"] = std::move(pairs);
    if (!name.empty()) doc["metadata"] = {{"name", name}};
    return doc.dump();
}

std::string serialize(const DisconnectedGraph& d, const std::string& name) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["colors"] = d.rank;
    json comps = json::array();
    for (const ColoredGraph& c : d.components) comps.push_back(closed_to_json(c, ""));
    doc["components"] = std::move(comps);
    if (!name.empty()) doc["metadata"] = {{"name", name}};
    return doc.dump();
}

AnyGraph parse_graph_document(const std::string& text) {
    return graph_from_json(parse_text(text));
}

ColoredGraph parse_closed(const std::string& text) { return closed_from_json(parse_text(text)); }

OpenFeynmanGraph parse_open(const std::string& text) {
    AnyGraph g = parse_graph_document(text);
    if (!std::holds_alternative<OpenFeynmanGraph>(g))
        throw ParseError("expected an open graph document (prop0 key required)");
    return std::get<OpenFeynmanGraph>(g);
}

std::string serialize_graph_list(const std::vector<ColoredGraph>& graphs) {
    json doc;
    doc["format_version"] = kFormatVersion;
    json arr = json::array();
    for (const ColoredGraph& g : graphs) arr.push_back(closed_to_json(g, ""));
    doc["graphs"] = std::move(arr);
    return doc.dump();
}

std::vector<ColoredGraph> parse_graph_list(const std::string& text) {
    json doc = parse_text(text);
    if (!doc.is_object() || !doc.contains("graphs") || !doc["graphs"].is_array())
        throw ParseError("expected a document with a graphs array");
    std::vector<ColoredGraph> out;
    for (const json& sub : doc["graphs"]) out.push_back(closed_from_json(sub));
    return out;
}

namespace {

void dot_body(std::ostringstream& os, int rank, int half_order,
              const std::vector<Perm>& perms, const std::vector<int>* prop0) {
    os << "graph {\n  node [fontsize=10];\n";
    for (int w = 0; w < half_order; ++w)
        os << "  w" << w << " [shape=circle, label=\"w" << w << "\"];\n";
    for (int b = 0; b < half_order; ++b)
        os << "  b" << b << " [shape=circle, style=filled, fillcolor=black, fontcolor=white, "
              "label=\"b"
           << b << "\"];\n";
    for (int c = 1; c <= rank; ++c)
        for (int w = 0; w < half_order; ++w)
            os << "  w" << w << " -- b" << perms[c - 1][w] << " [label=\"" << c << "\"];\n";
    if (prop0) {
        for (int w = 0; w < half_order; ++w) {
            if ((*prop0)[w] >= 0)
                os << "  w" << w << " -- b" << (*prop0)[w] << " [style=dashed, label=\"0\"];\n";
            else
                os << "  w" << w << " -- leg_w" << w << " [style=dashed];\n  leg_w" << w
                   << " [shape=point];\n";
        }
        std::vector<char> hit(half_order, 0);
        for (int w = 0; w < half_order; ++w)
            if ((*prop0)[w] >= 0) hit[(*prop0)[w]] = 1;
        for (int b = 0; b < half_order; ++b)
            if (!hit[b])
                os << "  b" << b << " -- leg_b" << b << " [style=dashed];\n  leg_b" << b
                   << " [shape=point];\n";
    }
    os << "}\n";
}

}  // namespace

std::string to_dot(const ColoredGraph& g) {
    std::ostringstream os;
    dot_body(os, g.rank, g.half_order, g.perms, nullptr);
    return os.str();
}

std::string to_dot(const OpenFeynmanGraph& g) {
    std::ostringstream os;
    dot_body(os, g.rank, g.half_order, g.perms, &g.prop0);
    return os.str();
}

}  // namespace ctm
