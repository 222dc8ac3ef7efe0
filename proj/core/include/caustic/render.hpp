#ifndef CAUSTIC_RENDER_HPP
#define CAUSTIC_RENDER_HPP

#include <map>
#include <string>
#include <vector>

#include "caustic/algebra.hpp"

namespace caustic {

/// Display-time settings for values and graphs.
struct RenderOptions {
    /// Suppress the trailing head-atom vertex contributed by a normal
    /// rule or labelled fact. Display only; the edges stay in the value.
    bool omit_normal_heads = false;
    /// Drop every edge touching an atom label before rendering.
    bool strip_atom_edges = false;
    /// Rule label of each normal rule mapped to its head atom; needed to
    /// recognize which atom vertices are omissible suffixes.
    std::map<std::string, std::string> normal_heads;
};

/// Minimal edge set whose closure is `g`: non-redundant non-reflexive
/// edges plus a reflexive edge per isolated vertex. Unique when every
/// cycle of `g` is reflexive; otherwise `unique` is false and `edges`
/// holds the stored form of `g` unreduced.
struct Reduction {
    std::vector<Edge> edges;
    bool unique = true;
};

Reduction transitive_reflexive_reduction(const CausalGraph& g);

/// Rule-only view: keep exactly the edges with both endpoints
/// rule labels, revalidated as a causal graph.
CausalGraph strip_atom_edges(const CausalGraph& g);

/// The graph as shown: head-suffix omission and atom stripping applied
/// per the options. The value itself is never touched by display.
CausalGraph display_graph(const CausalGraph& g, const RenderOptions& opts);

/// One graph as a product of application chains over its reduction,
/// with `r^a` sugar for rule-to-atom steps. The empty graph is "1".
std::string format_graph(const CausalGraph& g, const RenderOptions& opts = {});

/// Deterministic rendering: addends in canonical graph order joined
/// by " + "; 0 and 1 render as themselves.
std::string format_value(const CausalValue& v, const RenderOptions& opts = {});

}  // namespace caustic

#endif
