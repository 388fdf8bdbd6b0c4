#pragma once

#include <string>

#include "csnd/graph.hpp"

namespace csnd {

/// Wedge sum: disjoint union with v1 and v2 identified. The glued vertex
/// keeps v1's label; second-factor labels that collide with first-factor
/// ones get primes (') appended. The result's basepoint is the glued
/// vertex. The path metric of the wedge is the Markov sum of the factor
/// metrics, so CND and CSND are preserved.
Graph wedge_sum(const Graph& g1, const std::string& v1,
                const Graph& g2, const std::string& v2);

/// Comb product: one copy of g2, based at v2, glued to every vertex of the
/// spine g1. Vertices are labeled "u|w"; the copy at u meets the spine at
/// "u|v2". Built as an iterated wedge, so it preserves CND and CSND of the
/// factor metrics.
Graph comb_product(const Graph& g1, const Graph& g2, const std::string& v2);

/// Ball of radius R around the root of the free product of two pointed
/// graphs. Vertices are the alternating words s_1...s_k whose letters are
/// non-basepoint vertices of the factors, rendered "<label>@1"/"<label>@2"
/// and joined with '.'; the empty word (the glued basepoint) is labeled
/// "1" and is the result's basepoint. Edges rewrite the first letter along
/// an edge of its factor; moving to or from the basepoint drops or prepends
/// a letter. Distances between vertices of depth <= floor(R/2) agree with
/// the infinite free product. Factor labels must not contain '.'.
Graph free_product_ball(const Graph& g1, const std::string& v1,
                        const Graph& g2, const std::string& v2, int radius);

}  // namespace csnd
