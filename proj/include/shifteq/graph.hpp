#ifndef SHIFTEQ_GRAPH_HPP
#define SHIFTEQ_GRAPH_HPP

#include "shifteq/dimension_group.hpp"
#include "shifteq/essential.hpp"
#include "shifteq/int_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shifteq {

// A finite directed graph with labelled vertices.  Parallel edges and loops
// are allowed; sinks are allowed here and rejected only when the graph is
// converted to an adjacency matrix for dimension-group purposes.
struct DirectedGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (source, target)
};

// Synthesizes a graph with A(v,w) parallel edges v -> w.  Labels are the
// decimal vertex indices.  Inverse to adjacency() on matrices.
DirectedGraph graph_from_matrix(const IntMatrix& A);

// Edge-count matrix of the graph.  Throws DomainError naming the offending
// vertex if some vertex emits no edge.
EssentialMatrix adjacency(const DirectedGraph& g);

// Parses the two text formats for graphs:
//
//   vertices N          |   matrix N
//   edge <src> <dst>    |   <N rows of N nonnegative integers>
//   ...
//
// with 0-based vertex indices.  Throws DomainError on malformed input.
DirectedGraph parse_graph_text(const std::string& text);

// Attaches the two-vertex splice at a vertex lying on a loop: new vertices
// v1, v2 with edges v<->v1, v1 loop, v1<->v2, v2 loop, original block
// unchanged.  For [n] this is the 3x3 matrix ((n,1,0),(1,1,1),(0,1,1)).
// Throws DomainError if A(at_vertex, at_vertex) = 0.
EssentialMatrix cuntz_splice(const EssentialMatrix& A, std::size_t at_vertex);

// Outcome of the unital-homomorphism obstruction.  NoUnitalHom is a proof:
// any unital graded homomorphism induces a nonzero nonnegative intertwiner,
// and none exists.  A candidate is only a failure to obstruct, not an
// existence proof.
struct ObstructionResult {
  enum class Kind { NoUnitalHom, InconclusiveWithCandidate };
  Kind kind;
  // Primitive integral scaling of a nonzero nonnegative intertwiner, present
  // exactly in the inconclusive case.
  std::optional<IntMatrix> candidate;
};

// Decides whether the rational intertwiner space { R : A R = R B } contains
// a nonzero nonnegative element.  Emptiness over the rationals is the right
// certificate: a rational witness scales to an integral one.
ObstructionResult unital_hom_obstruction(const EssentialMatrix& A,
                                         const EssentialMatrix& B);

// The coordinate classes [e_v, 0] over adjacency(g), one per vertex; their
// sum is the order unit.
std::vector<DimClass> k0gr_generators(const DirectedGraph& g);

// A class [v, k] with the grading read modulo m: (v,k) ~ (w,l) when
// (A^t)^p v = (A^t)^q w for some p, q with p + k = q + l (mod m).  The
// residue k is normalized into [0, m).
class ZModClass {
 public:
  ZModClass(EssentialMatrix mat, IntMatrix v, long long k, std::size_t modulus);

  const EssentialMatrix& matrix() const { return mat_; }
  const IntMatrix& vec() const { return v_; }
  std::size_t residue() const { return k_; }
  std::size_t modulus() const { return m_; }

 private:
  EssentialMatrix mat_;
  IntMatrix v_;      // |A| x 1 column
  std::size_t k_;    // 0 <= k_ < m_
  std::size_t m_;
};

struct ZModEqualResult {
  bool equal;             // false means: not equal within the search bound
  std::size_t p = 0, q = 0;  // witness powers when equal
};

// Default search bound 2(|A| + m); no proven bound exists, hence the
// semi-decision below.
std::size_t default_zmod_bound(const EssentialMatrix& A, std::size_t m);

// Searches pairs (p, q) up to the bound, ordered by p+q then p, for
// (A^t)^p v = (A^t)^q w with p + k = q + l (mod m).  A miss only means no
// witness within the bound.  Throws DomainError on modulus or matrix
// mismatch.
ZModEqualResult zmod_equal(const ZModClass& a, const ZModClass& b,
                           std::optional<std::size_t> bound = std::nullopt);

// Exact check of A R B^{k m} = B R.  The right-hand side forces |A| = |B|;
// throws DimensionError otherwise.
bool zmod_intertwiner_check(const IntMatrix& R, const EssentialMatrix& A,
                            const EssentialMatrix& B, std::size_t m,
                            std::size_t k);

}  // namespace shifteq

#endif
