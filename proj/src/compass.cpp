#include "aw/compass.hpp"

#include <algorithm>

#include "aw/error.hpp"
#include "aw/relcheck.hpp"

namespace aw {

namespace {

bool joined(const std::vector<std::pair<GeneratorLabel, GeneratorLabel>> &edges, GeneratorLabel a, GeneratorLabel b) {
    return std::any_of(edges.begin(), edges.end(), [&](const auto &e) {
        return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
}

} // namespace

CompassGraph build_compass(const GeneratorRegistry &reg) {
    if (reg.legs() != 4)
        throw InvalidConfig("the compass needs legs = 4");
    CompassGraph g;
    const auto &bos = bosonic_labels();
    g.vertices.assign(bos.begin(), bos.end());

    const auto noncommuting = noncommuting_bosonic_pairs(reg);
    for (std::size_t x = 0; x < bos.size(); ++x)
        for (std::size_t y = x + 1; y < bos.size(); ++y)
            if (!joined(noncommuting, bos[x], bos[y]))
                g.solid_edges.emplace_back(bos[x], bos[y]);

    for (GeneratorLabel f : fermionic_labels()) {
        const auto def = derived_definition(f);
        if (!joined(noncommuting, def.left, def.right))
            throw ConsistencyError(std::string(name(def.left)) + " and " + std::string(name(def.right)) +
                                   " commute, but define " + std::string(name(f)));
        g.dashed_edges.push_back({def.left, def.right, f});
    }
    if (noncommuting.size() != g.dashed_edges.size())
        throw ConsistencyError("found " + std::to_string(noncommuting.size()) +
                               " non-commuting bosonic pairs, expected the 5-cycle");
    for (std::size_t n = 0; n < g.dashed_edges.size(); ++n) {
        const auto &e = g.dashed_edges[n];
        if (e.from != bos[n] || e.to != bos[(n + 1) % bos.size()])
            throw ConsistencyError("dashed edges do not form the directed cycle Q12->Q23->Q34->Q123->Q234");
    }

    for (std::size_t n = 0; n < g.dashed_edges.size(); ++n) {
        const auto &e = g.dashed_edges[n];
        std::vector<GeneratorLabel> apex;
        for (GeneratorLabel v : bos)
            if (v != e.from && v != e.to && joined(g.solid_edges, v, e.from) && joined(g.solid_edges, v, e.to))
                apex.push_back(v);
        if (apex.size() != 1)
            throw ConsistencyError("dashed edge " + std::string(name(e.from)) + "->" + std::string(name(e.to)) +
                                   " has no unique commuting third vertex");
        g.triangles.push_back({n, apex.front()});
    }
    return g;
}

std::string export_dot(const CompassGraph &g) {
    std::string out = "digraph compass {\n";
    for (GeneratorLabel v : g.vertices)
        out += "  " + std::string(name(v)) + ";\n";
    for (const auto &e : g.dashed_edges)
        out += "  " + std::string(name(e.from)) + " -> " + std::string(name(e.to)) + " [style=dashed, label=\"" +
               std::string(name(e.derived)) + "\"];\n";
    for (const auto &[a, b] : g.solid_edges)
        out += "  " + std::string(name(a)) + " -> " + std::string(name(b)) + " [style=solid, dir=none];\n";
    out += "}\n";
    return out;
}

} // namespace aw
