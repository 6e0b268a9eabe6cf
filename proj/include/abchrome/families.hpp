#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abchrome/coloring.hpp"
#include "abchrome/graph.hpp"

namespace abchrome {

class FamilyError : public std::runtime_error {
public:
    enum class Kind {
        KOutOfRange,
        ParityViolation,
        JOutOfRange,
        InvalidTree,
    };

    FamilyError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct NamedGraph {
    Graph graph;
    std::vector<std::string> names;  // names[v] is the label of vertex v

    VertexId id_of(const std::string& name) const;
};

// Tree whose every inner vertex has degree exactly three.
struct CubicTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

void validate_cubic_tree(const CubicTree& t);  // throws FamilyError on violation
int cubic_tree_inner_count(const CubicTree& t);
int cubic_tree_leaf_count(const CubicTree& t);

// Generalized Petersen graph G(n,k): vertices x_0..x_{n-1} (ids 0..n-1) and
// y_0..y_{n-1} (ids n..2n-1); edges x_i x_{i+1}, y_i y_{i+k}, x_i y_i mod n.
NamedGraph gen_petersen(int n, int k);

// (0,j)-prism with two rims of length rim_len (ids 0..rim_len-1 and
// rim_len..2*rim_len-1) and alternating spokes of type 0 and type j.
NamedGraph gen_0j_prism(int rim_len, int j);

// The 7-vertex gadget with one degree-two vertex w (id 0).
NamedGraph gen_H3();

// Triangle-expansion of inner tree vertices plus one H3 per leaf.
NamedGraph gen_C_of_T(const CubicTree& t);

enum class Sporadic { Petersen, K33, Prism3, G1 };

struct SporadicFixture {
    NamedGraph named;
    Coloring coloring;
    std::vector<VertexId> designated;  // the black acyclic b-vertices
};

SporadicFixture gen_sporadic(Sporadic which);

// The fixed per-copy coloring pattern used on H3 inside C(T): colors of
// vertices u,v,x,y,p,q (ids 1..6 of gen_H3); w is left to the filler.
const std::vector<int>& h3_pattern_colors();

}  // namespace abchrome
