#pragma once

// Graphviz output: colors follow a fixed palette (color 1 = red, 2 = green,
// 3 = blue, ...), dashed edges render dashed, and when ranks are present
// vertices are grouped per rank with higher ranks higher on the page.

#include <optional>
#include <sstream>
#include <string>

#include "adinkra/dashing.hpp"
#include "adinkra/ranking.hpp"

namespace adinkra {

inline std::string dot_color(int color) {
    static const char* palette[] = {"red",    "green",  "blue",   "orange",
                                    "purple", "brown",  "cyan",   "magenta",
                                    "gold",   "navy",   "salmon", "darkgreen"};
    constexpr int n = sizeof(palette) / sizeof(palette[0]);
    return palette[(color - 1) % n];
}

inline std::string export_dot(const Prechromotopology& A,
                              const std::optional<Ranking>& ranks = std::nullopt,
                              const std::optional<Dashing>& dashes = std::nullopt) {
    std::ostringstream out;
    out << "graph adinkra {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < (int)A.vertex_count(); v++)
        out << "  v" << v << " [label=\"" << A.label_string(v) << "\"];\n";
    if (ranks) {
        int top = height(*ranks);
        for (int h = 0; h <= top; h++) {
            out << "  { rank=same;";
            for (int v = 0; v < (int)A.vertex_count(); v++)
                if (ranks->h[v] == h) out << " v" << v << ";";
            out << " }\n";
        }
        // Invisible spine so dot stacks the rank groups in order.
        out << "  edge [style=invis];\n ";
        for (int h = 0; h <= top; h++) {
            for (int v = 0; v < (int)A.vertex_count(); v++)
                if (ranks->h[v] == h) {
                    out << (h ? " -- " : " ") << "v" << v;
                    break;
                }
        }
        out << ";\n  edge [style=solid];\n";
    }
    for (std::size_t e = 0; e < A.edges.size(); e++) {
        const Edge& ed = A.edges[e];
        out << "  v" << ed.u << " -- v" << ed.v << " [color=" << dot_color(ed.color);
        if (dashes && dashes->values.get(e)) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace adinkra
