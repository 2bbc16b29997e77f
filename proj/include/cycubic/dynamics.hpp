#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cycubic/classes.hpp"
#include "cycubic/errors.hpp"
#include "cycubic/poly.hpp"
#include "cycubic/rational.hpp"

namespace cycubic {

inline const Rational& pole() {
    static const Rational kPole(27, 2);
    return kPole;
}

/// phi: k -> 27k / (2k + 27). Strictly decreasing orbit into (0, 27/2).
inline Rational phi(const Rational& k) {
    if (k.sign() <= 0) throw NonPositiveK("phi expects k > 0");
    return Rational(27) * k / (Rational(2) * k + Rational(27));
}

/// psi: k -> 27k / |2k - 27|, undefined at the pole k = 27/2.
inline std::optional<Rational> psi(const Rational& k) {
    if (k.sign() <= 0) throw NonPositiveK("psi expects k > 0");
    Rational denom = abs(Rational(2) * k - Rational(27));
    if (denom.is_zero()) return std::nullopt;
    return Rational(27) * k / denom;
}

/// n-fold phi in closed form: 27k / (2nk + 27).
inline Rational phi_iter(const Rational& k, long long n) {
    if (k.sign() <= 0) throw NonPositiveK("phi_iter expects k > 0");
    if (n < 0) throw NegativeIteration("phi_iter expects n >= 0");
    return Rational(27) * k / (Rational(2) * Rational(n) * k + Rational(27));
}

/// Canonical generator of k's superclass: climb with psi while below 27.
/// Returns the component's unique element >= 27, or 27/2 when the climb
/// lands on the pole, or 27 itself for the fixed point. Terminates because
/// 1/psi(k) = 1/k - 2/27 below the pole.
inline Rational generator(const Rational& k) {
    if (k.sign() <= 0) throw NonPositiveK("generator expects k > 0");
    Rational cur = k;
    while (cur < Rational(27)) {
        std::optional<Rational> next = psi(cur);
        if (!next) return pole();
        cur = std::move(*next);
    }
    return cur;
}

/// Characteristic numbers of the two classes coupled to class k:
/// (phi(k), psi(k)). The second is absent at the pole. Cross-checked
/// against the explicit coupled-representative coefficients
///   b = 27/4 * (31k^2 + 108k + 729) / (2k + 27)^2
///   c = 27/4 * (31k^2 - 108k + 729) / (2k - 27)^2
struct CoupledCharNumbers {
    Rational k1;
    std::optional<Rational> k2;
};

inline CoupledCharNumbers coupled_char_numbers(const Rational& k) {
    Rational k1 = phi(k);
    std::optional<Rational> k2 = psi(k);
    const Rational quarter27(27, 4);
    Rational twok = Rational(2) * k;
    Rational b = quarter27 * (Rational(31) * k * k + Rational(108) * k + Rational(729)) /
                 ((twok + Rational(27)) * (twok + Rational(27)));
    if (!(b == rep_from_k(k1).a))
        throw LogicError("coupled representative coefficient b mismatch");
    if (k2) {
        Rational c = quarter27 * (Rational(31) * k * k - Rational(108) * k + Rational(729)) /
                     ((twok - Rational(27)) * (twok - Rational(27)));
        if (!(c == rep_from_k(*k2).a))
            throw LogicError("coupled representative coefficient c mismatch");
    }
    return {std::move(k1), std::move(k2)};
}

enum class EdgeKind { Phi, Psi };

inline const char* to_string(EdgeKind e) { return e == EdgeKind::Phi ? "phi" : "psi"; }

enum class ParentEdge { Root, Phi, Psi };

inline const char* to_string(ParentEdge e) {
    switch (e) {
    case ParentEdge::Root: return "root";
    case ParentEdge::Phi: return "phi";
    case ParentEdge::Psi: return "psi";
    }
    return "?";
}

enum class Exceptional { None, K27, K27Over2 };

inline const char* to_string(Exceptional e) {
    switch (e) {
    case Exceptional::None: return "none";
    case Exceptional::K27: return "k27";
    case Exceptional::K27Over2: return "k27_over_2";
    }
    return "?";
}

struct SuperclassNode {
    Rational k;
    Rational a; // (k^2 + 27) / 4
    bool reducible = false;
    int depth = 0;
    ParentEdge edge_from_parent = ParentEdge::Root;
};

struct SuperclassEdge {
    Rational from;
    Rational to;
    EdgeKind map;
};

/// Connected component of the phi/psi adjacency graph, truncated to a node
/// budget. Nodes are in discovery order: ascending depth, descending k
/// within a depth.
struct SuperclassGraph {
    Rational generator;
    Exceptional exceptional = Exceptional::None;
    std::vector<SuperclassNode> nodes;
    std::vector<SuperclassEdge> edges;
};

/// Breadth-first closure of k's component under phi and psi, from the
/// canonical generator, truncated to max_nodes. Reducible representatives
/// stay in the graph, flagged; their edges are still generated.
inline SuperclassGraph enumerate_superclass(const Rational& k, std::size_t max_nodes) {
    if (k.sign() <= 0) throw NonPositiveK("enumerate_superclass expects k > 0");
    if (max_nodes < 1) throw Error("enumerate_superclass expects max_nodes >= 1");

    SuperclassGraph graph;
    graph.generator = generator(k);
    if (graph.generator == Rational(27))
        graph.exceptional = Exceptional::K27;
    else if (graph.generator == pole())
        graph.exceptional = Exceptional::K27Over2;

    auto make_node = [](const Rational& key, int depth, ParentEdge via) {
        Rational a = (key * key + Rational(27)) / Rational(4);
        Poly rep = Poly::from_coeffs_ascending({-a, -a, Rational(0), Rational(1)});
        bool reducible = !is_irreducible_cubic(rep);
        return SuperclassNode{key, std::move(a), reducible, depth, via};
    };

    std::set<Rational> seen{graph.generator};
    std::set<std::pair<Rational, Rational>> edge_seen;
    graph.nodes.push_back(make_node(graph.generator, 0, ParentEdge::Root));
    std::vector<Rational> frontier{graph.generator};

    auto add_edge = [&](const Rational& from, const Rational& to, EdgeKind kind) {
        std::pair<Rational, Rational> key = std::minmax(from, to);
        if (edge_seen.insert(std::move(key)).second) graph.edges.push_back({from, to, kind});
    };

    int depth = 0;
    while (!frontier.empty() && graph.nodes.size() < max_nodes) {
        ++depth;
        // deterministic expansion: descending k within the previous depth
        std::sort(frontier.begin(), frontier.end(), std::greater<>());
        std::vector<std::pair<Rational, ParentEdge>> discovered;
        for (const Rational& cur : frontier) {
            const Rational fk = phi(cur);
            const std::optional<Rational> pk = psi(cur);
            add_edge(cur, fk, EdgeKind::Phi);
            if (!seen.contains(fk)) {
                seen.insert(fk);
                discovered.emplace_back(fk, ParentEdge::Phi);
            }
            if (pk) {
                add_edge(cur, *pk, EdgeKind::Psi);
                if (!seen.contains(*pk)) {
                    seen.insert(*pk);
                    discovered.emplace_back(*pk, ParentEdge::Psi);
                }
            }
        }
        std::sort(discovered.begin(), discovered.end(),
                  [](const auto& x, const auto& y) { return x.first > y.first; });
        frontier.clear();
        for (auto& [key, via] : discovered) {
            if (graph.nodes.size() >= max_nodes) break;
            graph.nodes.push_back(make_node(key, depth, via));
            frontier.push_back(key);
        }
    }

    // drop edges that lead outside the truncated node set
    std::set<Rational> kept;
    for (const auto& n : graph.nodes) kept.insert(n.k);
    std::erase_if(graph.edges, [&](const SuperclassEdge& e) {
        return !kept.contains(e.from) || !kept.contains(e.to);
    });
    return graph;
}

/// DOT rendering: one box per class, dashed when the representative is
/// reducible, undirected edges labeled by the generating map.
inline std::string to_dot(const SuperclassGraph& graph) {
    std::string out = "graph superclass {\n";
    out += "  node [shape=box];\n";
    for (const auto& n : graph.nodes) {
        out += "  \"" + n.k.to_string() + "\" [label=\"k = " + n.k.to_string() +
               "\\na = " + n.a.to_string() + "\"";
        if (n.reducible) out += ", style=dashed";
        out += "];\n";
    }
    for (const auto& e : graph.edges) {
        out += "  \"" + e.from.to_string() + "\" -- \"" + e.to.to_string() + "\" [label=\"" +
               to_string(e.map) + "\"];\n";
    }
    out += "}\n";
    return out;
}

inline nlohmann::json to_json(const SuperclassGraph& graph) {
    nlohmann::json j;
    j["generator"] = graph.generator.to_string();
    j["exceptional"] = to_string(graph.exceptional);
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : graph.nodes) {
        j["nodes"].push_back({{"k", n.k.to_string()},
                              {"a", n.a.to_string()},
                              {"reducible", n.reducible},
                              {"depth", n.depth}});
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : graph.edges) {
        j["edges"].push_back(
            {{"from", e.from.to_string()}, {"to", e.to.to_string()}, {"map", to_string(e.map)}});
    }
    return j;
}

} // namespace cycubic
