#include "caustic/algebra.hpp"

#include <algorithm>
#include <map>

namespace caustic {

namespace {

// Closure on a dense adjacency matrix; input sizes are small (labels of
// one program), so Floyd-Warshall is plenty.
std::vector<Edge> close_and_normalize(const std::vector<Edge>& raw) {
    std::map<Label, int> index;
    std::vector<Label> verts;
    for (const auto& [a, b] : raw) {
        for (const Label* l : {&a, &b}) {
            if (index.emplace(*l, 0).second) verts.push_back(*l);
        }
    }
    std::sort(verts.begin(), verts.end());
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) index[verts[i]] = i;

    const int n = static_cast<int>(verts.size());
    std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [a, b] : raw) {
        if (a != b) adj[static_cast<std::size_t>(index[a]) * n + index[b]] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!adj[static_cast<std::size_t>(i) * n + k]) continue;
            for (int j = 0; j < n; ++j)
                if (adj[static_cast<std::size_t>(k) * n + j])
                    adj[static_cast<std::size_t>(i) * n + j] = 1;
        }

    std::vector<Edge> out;
    std::vector<char> connected(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && adj[static_cast<std::size_t>(i) * n + j]) {
                out.emplace_back(verts[i], verts[j]);
                connected[i] = connected[j] = 1;
            }
    for (int i = 0; i < n; ++i)
        if (!connected[i]) out.emplace_back(verts[i], verts[i]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

CausalGraph CausalGraph::vertex(const Label& l) {
    CausalGraph g;
    g.edges_.emplace_back(l, l);
    return g;
}

CausalGraph CausalGraph::from_edges(const std::vector<Edge>& raw) {
    CausalGraph g;
    g.edges_ = close_and_normalize(raw);
    return g;
}

std::vector<Edge> CausalGraph::closed_edges() const {
    std::vector<Edge> out;
    for (const Label& v : vertices()) out.emplace_back(v, v);
    for (const Edge& e : edges_)
        if (e.first != e.second) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Label> CausalGraph::vertices() const {
    std::vector<Label> vs;
    for (const auto& [a, b] : edges_) {
        vs.push_back(a);
        vs.push_back(b);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool CausalGraph::has_vertex(const Label& v) const {
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) return true;
    return false;
}

bool CausalGraph::has_edge(const Label& from, const Label& to) const {
    if (from == to) return has_vertex(from);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

bool CausalGraph::subgraph_of(const CausalGraph& other) const {
    for (const auto& [a, b] : edges_)
        if (!other.has_edge(a, b)) return false;
    return true;
}

CausalGraph CausalGraph::restricted_to_rule_labels() const {
    std::vector<Edge> kept;
    for (const auto& [a, b] : edges_) {
        if (a.kind != LabelKind::Rule || b.kind != LabelKind::Rule) continue;
        if (a != b) kept.emplace_back(a, b);
    }
    // Reflexive-only rule vertices are gone on purpose: removing every
    // edge containing an atom label also removes the edges that made
    // those vertices reachable, but a vertex only touched by its own
    // reflexive edge survives.
    for (const Label& v : vertices())
        if (v.kind == LabelKind::Rule) {
            bool touched = false;
            for (const auto& [a, b] : kept)
                if (a == v || b == v) { touched = true; break; }
            if (!touched) kept.emplace_back(v, v);
        }
    return from_edges(kept);
}

CausalGraph CausalGraph::without_vertices(const std::set<Label>& dropped) const {
    std::vector<Edge> kept;
    for (const auto& [a, b] : edges_)
        if (!dropped.count(a) && !dropped.count(b)) kept.emplace_back(a, b);
    for (const Label& v : vertices())
        if (!dropped.count(v)) {
            bool touched = false;
            for (const auto& [a, b] : kept)
                if (a != b && (a == v || b == v)) { touched = true; break; }
            if (!touched) kept.emplace_back(v, v);
        }
    return from_edges(kept);
}

bool CausalGraph::operator<(const CausalGraph& other) const {
    if (edges_.size() != other.edges_.size()) return edges_.size() < other.edges_.size();
    return edges_ < other.edges_;
}

CausalGraph graph_product(const CausalGraph& g, const CausalGraph& h) {
    std::vector<Edge> all = g.edges();
    all.insert(all.end(), h.edges().begin(), h.edges().end());
    return CausalGraph::from_edges(all);
}

CausalGraph graph_apply(const CausalGraph& g, const CausalGraph& h) {
    std::vector<Edge> all = g.edges();
    all.insert(all.end(), h.edges().begin(), h.edges().end());
    for (const Label& v : g.vertices())
        for (const Label& w : h.vertices()) all.emplace_back(v, w);
    return CausalGraph::from_edges(all);
}

CausalValue CausalValue::one() { return of(CausalGraph{}); }

CausalValue CausalValue::of(CausalGraph g) {
    CausalValue v;
    v.graphs_.push_back(std::move(g));
    return v;
}

CausalValue CausalValue::from_graphs(std::vector<CausalGraph> gs) {
    std::sort(gs.begin(), gs.end());
    gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
    CausalValue v;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        bool absorbed = false;
        for (std::size_t j = 0; j < gs.size() && !absorbed; ++j)
            if (i != j && gs[j].subgraph_of(gs[i])) absorbed = true;
        if (!absorbed) v.graphs_.push_back(gs[i]);
    }
    return v;
}

bool CausalValue::operator<(const CausalValue& other) const {
    return std::lexicographical_compare(graphs_.begin(), graphs_.end(),
                                        other.graphs_.begin(), other.graphs_.end());
}

CausalValue value_sum(const CausalValue& v, const CausalValue& w) {
    std::vector<CausalGraph> gs = v.graphs();
    gs.insert(gs.end(), w.graphs().begin(), w.graphs().end());
    return CausalValue::from_graphs(std::move(gs));
}

CausalValue value_product(const CausalValue& v, const CausalValue& w) {
    std::vector<CausalGraph> gs;
    for (const CausalGraph& g : v.graphs())
        for (const CausalGraph& h : w.graphs()) gs.push_back(graph_product(g, h));
    return CausalValue::from_graphs(std::move(gs));
}

CausalValue value_apply(const CausalValue& v, const CausalValue& w) {
    std::vector<CausalGraph> gs;
    for (const CausalGraph& g : v.graphs())
        for (const CausalGraph& h : w.graphs()) gs.push_back(graph_apply(g, h));
    return CausalValue::from_graphs(std::move(gs));
}

bool value_leq(const CausalValue& v, const CausalValue& w) {
    for (const CausalGraph& g : v.graphs()) {
        bool covered = false;
        for (const CausalGraph& h : w.graphs())
            if (h.subgraph_of(g)) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

}  // namespace caustic
