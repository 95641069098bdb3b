#include "ucg/export.hpp"

#include <sstream>

namespace ucg {

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const CayleyGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << dot_quote(name) << " {\n";
    for (Vertex v = 0; v < g.vcount(); ++v) os << "  " << v << " [label=" << dot_quote(g.name(v)) << "];\n";
    for (Vertex v = 0; v < g.vcount(); ++v)
        for (Vertex w : g.adjacency[v])
            if (v < w) os << "  " << v << " -- " << w << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_csv(const CayleyGraph& g) {
    std::ostringstream os;
    os << "source,target\n";
    for (Vertex v = 0; v < g.vcount(); ++v)
        for (Vertex w : g.adjacency[v])
            if (v < w) os << v << ',' << w << '\n';
    return os.str();
}

nlohmann::json to_json(const ExtNat& v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

nlohmann::json to_json(const InvariantReport& r) {
    auto count = [](const Count& c) -> nlohmann::json {
        switch (c.status) {
            case SolveStatus::not_requested: return nullptr;
            case SolveStatus::skipped: return "skipped";
            case SolveStatus::solved: return c.value;
        }
        return nullptr;
    };
    nlohmann::json j;
    j["connected"] = r.connected;
    j["diameter"] = r.diameter ? to_json(*r.diameter) : nlohmann::json(nullptr);
    j["girth"] = r.girth ? to_json(*r.girth) : nlohmann::json(nullptr);
    j["omega"] = count(r.omega);
    j["alpha"] = count(r.alpha);
    j["degree_min"] = r.degree_min;
    j["degree_max"] = r.degree_max;
    j["regular"] = r.regular;
    return j;
}

}  // namespace ucg
