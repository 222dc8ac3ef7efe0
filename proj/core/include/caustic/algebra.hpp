#ifndef CAUSTIC_ALGEBRA_HPP
#define CAUSTIC_ALGEBRA_HPP

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace caustic {

/// Vertices of causal graphs. Atoms double as labels (the fact convention),
/// so a label carries its namespace alongside the name.
enum class LabelKind { Rule, Atom };

struct Label {
    std::string name;
    LabelKind kind = LabelKind::Rule;

    auto operator<=>(const Label&) const = default;
};

inline Label rule_label(std::string name) { return {std::move(name), LabelKind::Rule}; }
inline Label atom_label(std::string name) { return {std::move(name), LabelKind::Atom}; }

using Edge = std::pair<Label, Label>;

/// One individual cause: a transitively and reflexively closed edge set
/// over labels. The empty graph is the value 1.
///
/// Storage keeps the non-reflexive closure edges plus a bare reflexive
/// edge per isolated vertex; reflexive edges of connected vertices are
/// implicit.
class CausalGraph {
public:
    CausalGraph() = default;

    /// Single-vertex graph {(l,l)}.
    static CausalGraph vertex(const Label& l);
    /// Builds the transitive and reflexive closure of an arbitrary edge set.
    static CausalGraph from_edges(const std::vector<Edge>& raw);

    bool empty() const { return edges_.empty(); }

    /// Stored form: sorted, non-reflexive edges + isolated reflexives.
    const std::vector<Edge>& edges() const { return edges_; }
    /// Full closure, every vertex with its reflexive edge.
    std::vector<Edge> closed_edges() const;
    std::vector<Label> vertices() const;

    bool has_vertex(const Label& v) const;
    /// Membership in the closed edge set (reflexive edges included).
    bool has_edge(const Label& from, const Label& to) const;

    /// Edge-set inclusion of the closures.
    bool subgraph_of(const CausalGraph& other) const;

    /// Restriction to the vertices with both-rule-label edges (atom
    /// stripping); isolated atom vertices disappear.
    CausalGraph restricted_to_rule_labels() const;
    /// Restriction to the complement of `dropped`. The restriction of a
    /// closed graph is closed.
    CausalGraph without_vertices(const std::set<Label>& dropped) const;

    bool operator==(const CausalGraph&) const = default;
    /// Canonical order: (edge count, lexicographic edge list).
    bool operator<(const CausalGraph& other) const;

private:
    std::vector<Edge> edges_;
};

/// `G * G'`: transitive closure of the union.
CausalGraph graph_product(const CausalGraph& g, const CausalGraph& h);
/// `G . G'`: closure of the union plus every edge from a vertex of g
/// to a vertex of h.
CausalGraph graph_apply(const CausalGraph& g, const CausalGraph& h);

/// A causal value in minimal disjunctive normal form: an antichain of
/// causal graphs under edge-set inclusion. The empty antichain is 0,
/// {empty graph} is 1.
class CausalValue {
public:
    CausalValue() = default;

    static CausalValue zero() { return {}; }
    static CausalValue one();
    static CausalValue of(CausalGraph g);
    /// Minimizes: any graph that is a superset of another member is dropped.
    static CausalValue from_graphs(std::vector<CausalGraph> gs);

    bool is_zero() const { return graphs_.empty(); }
    bool is_one() const { return graphs_.size() == 1 && graphs_[0].empty(); }

    const std::vector<CausalGraph>& graphs() const { return graphs_; }

    bool operator==(const CausalValue&) const = default;
    bool operator<(const CausalValue& other) const;

private:
    std::vector<CausalGraph> graphs_;  // sorted antichain
};

/// Join: union of the antichains, supersets absorbed.
CausalValue value_sum(const CausalValue& v, const CausalValue& w);
/// Meet: pairwise graph products, minimized.
CausalValue value_product(const CausalValue& v, const CausalValue& w);
/// Application, distributed over the addends of both sides.
CausalValue value_apply(const CausalValue& v, const CausalValue& w);
/// t <= u iff t*u = t iff t+u = u; on antichains: every graph of v
/// has a subgraph in w.
bool value_leq(const CausalValue& v, const CausalValue& w);

}  // namespace caustic

#endif
