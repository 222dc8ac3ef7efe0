#include "caustic/render.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace caustic {

Reduction transitive_reflexive_reduction(const CausalGraph& g) {
    Reduction out;
    const std::vector<Edge>& stored = g.edges();
    for (const auto& [a, b] : stored) {
        if (a != b && g.has_edge(b, a)) {
            // Non-reflexive cycle: no unique reduction exists.
            out.edges = stored;
            out.unique = false;
            return out;
        }
    }
    for (const auto& [a, b] : stored) {
        if (a == b) {
            out.edges.emplace_back(a, b);  // isolated vertex
            continue;
        }
        bool redundant = false;
        for (const Label& c : g.vertices()) {
            if (c == a || c == b) continue;
            if (g.has_edge(a, c) && g.has_edge(c, b)) { redundant = true; break; }
        }
        if (!redundant) out.edges.emplace_back(a, b);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

CausalGraph strip_atom_edges(const CausalGraph& g) {
    return g.restricted_to_rule_labels();
}

namespace {

// Atom vertices whose every immediate predecessor in the reduction is a
// normal rule having that atom as head. These are the display suffixes
// introduced by the `body . r . head` valuation of normal rules.
std::set<Label> omissible_atoms(const CausalGraph& g, const RenderOptions& opts) {
    std::set<Label> out;
    Reduction red = transitive_reflexive_reduction(g);
    if (!red.unique) return out;
    std::map<Label, std::vector<Label>> preds;
    for (const auto& [a, b] : red.edges)
        if (a != b) preds[b].push_back(a);
    for (const auto& [v, ps] : preds) {
        if (v.kind != LabelKind::Atom) continue;
        bool all_normal = true;
        for (const Label& p : ps) {
            auto it = opts.normal_heads.find(p.name);
            if (p.kind != LabelKind::Rule || it == opts.normal_heads.end() ||
                it->second != v.name) {
                all_normal = false;
                break;
            }
        }
        if (all_normal) out.insert(v);
    }
    return out;
}

std::string chain_to_string(const std::vector<Label>& seq) {
    std::string out;
    std::size_t i = 0;
    while (i < seq.size()) {
        if (!out.empty()) out += "·";
        if (seq[i].kind == LabelKind::Rule && i + 1 < seq.size() &&
            seq[i + 1].kind == LabelKind::Atom) {
            out += seq[i].name + "^" + seq[i + 1].name;
            i += 2;
        } else {
            out += seq[i].name;
            ++i;
        }
    }
    return out;
}

std::string render_unreduced(const CausalGraph& g) {
    std::vector<std::string> factors;
    for (const auto& [a, b] : g.edges()) {
        if (a == b)
            factors.push_back(a.name);
        else
            factors.push_back(a.name + "·" + b.name);
    }
    std::sort(factors.begin(), factors.end());
    std::string out;
    for (const std::string& f : factors) {
        if (!out.empty()) out += "*";
        out += f;
    }
    return out;
}

}  // namespace

CausalGraph display_graph(const CausalGraph& g, const RenderOptions& opts) {
    CausalGraph shown = g;
    if (opts.omit_normal_heads) {
        std::set<Label> drop = omissible_atoms(shown, opts);
        if (!drop.empty()) shown = shown.without_vertices(drop);
    }
    if (opts.strip_atom_edges) shown = strip_atom_edges(shown);
    return shown;
}

std::string format_graph(const CausalGraph& g, const RenderOptions& opts) {
    CausalGraph shown = display_graph(g, opts);
    if (shown.empty()) return "1";

    Reduction red = transitive_reflexive_reduction(shown);
    if (!red.unique) return render_unreduced(shown);

    // Decompose the reduced edges into edge-disjoint chains; the product
    // of the chains closes back to the original graph.
    std::map<Label, std::vector<Label>> succ;
    std::map<Label, int> indeg;
    std::vector<std::string> parts;
    for (const auto& [a, b] : red.edges) {
        if (a == b) {
            parts.push_back(chain_to_string({a}));
            continue;
        }
        succ[a].push_back(b);
        indeg[b]++;
        indeg.try_emplace(a, 0);
    }
    for (auto& [v, ws] : succ) std::sort(ws.begin(), ws.end());

    std::size_t remaining = 0;
    for (const auto& [v, ws] : succ) remaining += ws.size();
    while (remaining > 0) {
        // Prefer a source of the remaining edges; any vertex with
        // pending out-edges works since the graph is acyclic.
        const Label* start = nullptr;
        for (const auto& [v, ws] : succ) {
            if (ws.empty()) continue;
            if (indeg[v] == 0) { start = &v; break; }
        }
        if (!start) {
            for (const auto& [v, ws] : succ)
                if (!ws.empty()) { start = &v; break; }
        }
        std::vector<Label> seq{*start};
        Label cur = *start;
        while (!succ[cur].empty()) {
            Label next = succ[cur].front();
            succ[cur].erase(succ[cur].begin());
            indeg[next]--;
            --remaining;
            seq.push_back(next);
            cur = next;
        }
        parts.push_back(chain_to_string(seq));
    }

    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty()) out += "*";
        out += p;
    }
    return out;
}

std::string format_value(const CausalValue& v, const RenderOptions& opts) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const CausalGraph& g : v.graphs()) {
        if (!out.empty()) out += " + ";
        out += format_graph(g, opts);
    }
    return out;
}

}  // namespace caustic
