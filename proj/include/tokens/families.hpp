#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tokens/graph.hpp"

namespace tokens {

enum class FamilyKind {
    complete,              // K_n
    star,                  // S_n: center 1, leaves 2..n
    path,                  // P_n: 1-2-...-n
    cycle,                 // C_n: path plus edge {n,1}, n >= 3
    complete_multipartite, // parts sized by params, consecutive label blocks
    wheel,                 // W_n: hub 1 joined to the cycle 2..n, n >= 4
    cocktail_party,        // K_{n x 2}: complete minus the matching {2i-1,2i}
    cycle_complement,      // complement of C_n
    johnson_base,          // K_n under a name that advertises its role:
                           // its token graphs are the Johnson graphs J(n,k)
};

struct FamilySpec {
    FamilyKind kind;
    int n = 0;                // order; ignored for complete_multipartite
    std::vector<int> parts;   // complete_multipartite part sizes
};

Graph build_family(const FamilySpec& spec);
Graph build_family(FamilyKind kind, int n);

FamilyKind family_kind_from_string(const std::string& name);
std::string to_string(FamilyKind kind);
std::vector<std::string> family_names();

// A base graph with rooted trees hanging off some of its vertices. Each tree
// is described by its root (a base vertex) and a parent array: tree vertex i
// (1-based, appended in order) hangs off parent[i-1], where 0 means the root
// itself and j >= 1 means tree vertex j (so parent[i-1] <= i-1).
struct TreeAttachment {
    Graph base;
    std::vector<std::pair<int, std::vector<int>>> trees;  // (root, parents)
};

Graph attach_trees(const TreeAttachment& spec);

}  // namespace tokens
