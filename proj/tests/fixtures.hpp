#pragma once

#include <random>
#include <string>
#include <vector>

#include "abchrome/coloring.hpp"
#include "abchrome/families.hpp"
#include "abchrome/graph.hpp"

namespace abfix {

struct ColoredGraph {
    abchrome::Graph graph;
    abchrome::Coloring coloring;
    std::vector<abchrome::VertexId> designated;
};

// A 48-vertex cubic graph carrying a reference acyclic b-coloring with five
// colors. The designated vertices are blocked in every candidate color; the
// one colored 1 is of type A, the other four of type B.
const ColoredGraph& blocked48();

std::vector<std::string> load_corpus_lines(const std::string& filename);

// Configuration-model random cubic graph (simple, possibly disconnected).
abchrome::Graph random_cubic_graph(int n, std::mt19937& rng);

// Random proper 4-coloring via a random vertex order and random feasible colors.
abchrome::Coloring random_proper_4coloring(const abchrome::Graph& g, std::mt19937& rng);

// Random cubic tree grown by repeated leaf expansion.
abchrome::CubicTree random_cubic_tree(int leaves, std::mt19937& rng);

// Uniform-ish random acyclic k-coloring found by randomized backtracking.
abchrome::Coloring random_acyclic_coloring(const abchrome::Graph& g, int k, std::mt19937& rng);

}  // namespace abfix
