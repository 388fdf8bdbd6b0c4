#pragma once

#include <Eigen/Dense>

#include <limits>
#include <string>
#include <vector>

#include "csnd/graph.hpp"

namespace csnd {

/// Coefficient value standing for an infinite entry (no relation).
inline constexpr int kNoRelation = std::numeric_limits<int>::max();

/// A Coxeter or Artin presentation: generators S and a symmetric table of
/// coefficients m(s,t) in {2, 3, ...} u {infinity} for s != t. The Coxeter
/// group adds the relations s^2 = 1 and (st)^{m(s,t)} = 1; the Artin group
/// instead equates the two alternating products sts... = tst... of length
/// m(s,t). All coefficients infinite means free Coxeter group (resp. free
/// group).
struct GroupPresentation {
  enum class Kind { coxeter, artin };

  Kind kind = Kind::coxeter;
  std::vector<std::string> generators;
  /// m(i,j), with kNoRelation for infinity; the diagonal is ignored.
  Eigen::MatrixXi coefficients;

  int rank() const { return static_cast<int>(generators.size()); }
  /// Checks shape, symmetry, entry range and generator names (nonempty,
  /// distinct, no '.' or whitespace, not the reserved identity label "1").
  void validate() const;
  /// True iff every off-diagonal coefficient is kNoRelation.
  bool is_free() const;
};

/// The alternating word stst... with k letters, e.g. ("s","t",3) -> s,t,s.
std::vector<std::string> alternating_product(const std::string& s,
                                             const std::string& t, int k);

/// A radius-R ball of a Cayley graph around the identity. Vertex labels are
/// the canonical words (generator names joined with '.', identity "1"), and
/// word length equals the BFS depth, so the basepoint distances are the
/// true word metric.
struct CayleyBall {
  Graph graph;  // basepoint "1"
  std::vector<std::string> words;
  int radius = 0;
  /// "normal-form-exact" when elements are compared by exact normal forms,
  /// "reflection-numerical" when identified via the reflection
  /// representation on a 1e-7 grid (parity-checked).
  std::string exactness;
};

/// Cayley ball of a Coxeter group, with elements identified through their
/// matrices in the canonical reflection representation (bilinear form
/// B(a_s, a_t) = -cos(pi / m(s,t)), -1 for infinite entries). Matrices are
/// compared on a 1e-7 grid; a collision between words whose lengths differ
/// in parity raises NumericalError, since word-length parity is a
/// homomorphism and such words cannot be equal. Finite coefficients beyond
/// max_finite_m are rejected to keep the grid identification sound.
CayleyBall coxeter_cayley_ball(const GroupPresentation& p, int radius,
                               int max_finite_m = 12);

/// Cayley ball of the free group on n generators (n <= 26), letters a..z
/// with capitalized inverses, words concatenated without separators. Exact
/// word problem (free reduction); the ball is a tree.
CayleyBall free_group_ball(int num_generators, int radius);

/// Cayley ball of the amalgam Z_m *_{Z_d} Z_n where the cyclic factors
/// <a | a^m>, <b | b^n> are glued along the central subgroup generated by
/// c = a^{m/d} = b^{n/d} (requires d | m and d | n). Elements are stored in
/// the exact normal form c^t r_1 ... r_k with alternating coset
/// representatives a^i (1 <= i < m/d) and b^j (1 <= j < n/d); labels render
/// as e.g. "c2.a1.b2". Generators a, a^-1, b, b^-1 give the edges.
CayleyBall amalgam_cyclic_ball(int m, int n, int d, int radius);

/// Whether the word metric of the presented group is CSND: it is iff the
/// presentation is free (free Coxeter group / free group), in which case
/// the Cayley graph is a regular tree. Otherwise a finite coefficient
/// m(s,t) produces an isometrically embedded even cycle of length
/// 2 * m(s,t) through the relator, which obstructs CSND.
struct WordMetricVerdict {
  bool csnd = false;
  std::string statement;

  // Failure witness (when csnd == false): the pair with the smallest
  // finite coefficient and its relator words.
  std::string s, t;
  int min_coefficient = 0;
  std::vector<std::string> relator_left, relator_right;
  int cycle_length = 0;

  // Free case: the Cayley graph is the tree_degree-regular tree.
  int tree_degree = 0;
};
WordMetricVerdict word_metric_csnd_verdict(const GroupPresentation& p);

}  // namespace csnd
