#pragma once

#include <string>

#include "csnd/graph.hpp"

namespace csnd {

/// Tiny expression language for composing graphs:
///
///   atoms     K<n>  C<n>  P<n>  S<n>  tree(p0,p1,...)
///   products  wedge(E@v, E@v)   comb(E, E@v)   free(E@v, E@v, R)
///
/// where E is any expression and @v anchors it at vertex label v, e.g.
/// "wedge(K3@0, C5@2)" or "free(K2@0, K2@0, 3)". Malformed expressions
/// raise ValidationError.
Graph parse_graph_expr(const std::string& expr);

}  // namespace csnd
