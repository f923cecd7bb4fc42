#include "tokens/families.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace tokens {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n, 1);
    return g;
}

Graph multipartite(const std::vector<int>& parts) {
    require(!parts.empty(), "complete_multipartite needs at least one part");
    for (int p : parts) require(p >= 1, "complete_multipartite parts must be >= 1");
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    // part_of[v-1] = index of the block containing v
    std::vector<int> part_of;
    part_of.reserve(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < parts.size(); ++i)
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (part_of[u - 1] != part_of[v - 1]) g.add_edge(u, v);
    return g;
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
    const int n = spec.n;
    switch (spec.kind) {
        case FamilyKind::complete:
        case FamilyKind::johnson_base:
            require(n >= 1, "complete graph needs n >= 1");
            return complete(n);
        case FamilyKind::star: {
            require(n >= 2, "star needs n >= 2");
            Graph g(n);
            for (int v = 2; v <= n; ++v) g.add_edge(1, v);
            return g;
        }
        case FamilyKind::path:
            require(n >= 1, "path needs n >= 1");
            return path(n);
        case FamilyKind::cycle:
            require(n >= 3, "cycle needs n >= 3");
            return cycle(n);
        case FamilyKind::complete_multipartite:
            return multipartite(spec.parts);
        case FamilyKind::wheel: {
            require(n >= 4, "wheel needs n >= 4");
            Graph g(n);
            for (int v = 2; v <= n; ++v) {
                g.add_edge(1, v);
                g.add_edge(v, v == n ? 2 : v + 1);
            }
            return g;
        }
        case FamilyKind::cocktail_party: {
            require(n >= 2 && n % 2 == 0, "cocktail_party needs even n >= 2");
            Graph g = complete(n);
            Graph h(n);
            for (auto [u, v] : g.edges())
                if (!(u % 2 == 1 && v == u + 1)) h.add_edge(u, v);
            return h;
        }
        case FamilyKind::cycle_complement:
            require(n >= 3, "cycle_complement needs n >= 3");
            return complement(cycle(n));
    }
    throw std::invalid_argument("unknown family kind");
}

Graph build_family(FamilyKind kind, int n) {
    FamilySpec spec;
    spec.kind = kind;
    spec.n = n;
    return build_family(spec);
}

FamilyKind family_kind_from_string(const std::string& name) {
    if (name == "complete") return FamilyKind::complete;
    if (name == "star") return FamilyKind::star;
    if (name == "path") return FamilyKind::path;
    if (name == "cycle") return FamilyKind::cycle;
    if (name == "complete_multipartite") return FamilyKind::complete_multipartite;
    if (name == "wheel") return FamilyKind::wheel;
    if (name == "cocktail_party") return FamilyKind::cocktail_party;
    if (name == "cycle_complement") return FamilyKind::cycle_complement;
    if (name == "johnson_base") return FamilyKind::johnson_base;
    throw std::invalid_argument("unknown family: " + name);
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::complete: return "complete";
        case FamilyKind::star: return "star";
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::complete_multipartite: return "complete_multipartite";
        case FamilyKind::wheel: return "wheel";
        case FamilyKind::cocktail_party: return "cocktail_party";
        case FamilyKind::cycle_complement: return "cycle_complement";
        case FamilyKind::johnson_base: return "johnson_base";
    }
    return "?";
}

std::vector<std::string> family_names() {
    return {"complete",       "star",   "path",           "cycle",
            "complete_multipartite", "wheel",  "cocktail_party", "cycle_complement",
            "johnson_base"};
}

Graph attach_trees(const TreeAttachment& spec) {
    const int base_n = spec.base.vertex_count();
    require(base_n >= 1, "attach_trees: base must be nonempty");
    std::set<int> roots_seen;
    int total = base_n;
    for (const auto& [root, parents] : spec.trees) {
        require(root >= 1 && root <= base_n, "attach_trees: root out of range");
        require(roots_seen.insert(root).second, "attach_trees: duplicate root");
        for (std::size_t i = 0; i < parents.size(); ++i)
            require(parents[i] >= 0 && parents[i] <= static_cast<int>(i),
                    "attach_trees: parent[i] must be in 0..i");
        total += static_cast<int>(parents.size());
    }

    Graph g(total);
    for (auto [u, v] : spec.base.edges()) g.add_edge(u, v);
    int next = base_n;  // label of the most recently placed tree vertex
    for (const auto& [root, parents] : spec.trees) {
        const int offset = next;  // tree vertex j lives at label offset + j
        for (std::size_t i = 0; i < parents.size(); ++i) {
            ++next;
            const int p = parents[i];
            g.add_edge(p == 0 ? root : offset + p, next);
        }
    }
    return g;
}

}  // namespace tokens
