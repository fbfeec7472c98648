#include "shifteq/graph.hpp"

#include "shifteq/nonneg.hpp"
#include "shifteq/rat_matrix.hpp"
#include "shifteq/shift_equivalence.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>
#include <string>

namespace shifteq {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

DirectedGraph graph_from_matrix(const IntMatrix& A) {
  if (A.rows() != A.cols())
    throw DimensionError("graph_from_matrix: matrix must be square");
  if (!A.is_nonnegative())
    throw DomainError("graph_from_matrix: negative edge count");
  DirectedGraph g;
  BigInt total = 0;
  for (std::size_t v = 0; v < A.rows(); ++v)
    for (std::size_t w = 0; w < A.cols(); ++w) total += A(v, w);
  if (total > BigInt(1) << 20)
    throw DomainError("graph_from_matrix: too many edges to materialize");
  for (std::size_t v = 0; v < A.rows(); ++v) g.labels.push_back(std::to_string(v));
  for (std::size_t v = 0; v < A.rows(); ++v)
    for (std::size_t w = 0; w < A.cols(); ++w)
      for (BigInt c = 0; c < A(v, w); ++c) g.edges.emplace_back(v, w);
  return g;
}

EssentialMatrix adjacency(const DirectedGraph& g) {
  const std::size_t n = g.labels.size();
  if (n == 0) throw DomainError("adjacency: graph has no vertices");
  IntMatrix A(n, n);
  for (const auto& [s, t] : g.edges) {
    if (s >= n || t >= n)
      throw DomainError("adjacency: edge endpoint out of range");
    A(s, t) += 1;
  }
  for (std::size_t v = 0; v < n; ++v) {
    bool emits = false;
    for (std::size_t w = 0; w < n; ++w)
      if (A(v, w) > 0) emits = true;
    if (!emits)
      throw DomainError("adjacency: sink detected, vertex '" + g.labels[v] +
                        "' emits no edge");
  }
  return EssentialMatrix(A);
}

DirectedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string header;
  std::size_t n = 0;

  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;  // blank
      if (line[i] == '#') continue;          // comment
      out = line;
      return true;
    }
    return false;
  };

  if (!next_line(line))
    throw DomainError("graph file: empty input");
  {
    std::istringstream hs(line);
    std::string count;
    hs >> header >> count;
    std::string extra;
    if ((header != "vertices" && header != "matrix") || !all_digits(count) ||
        (hs >> extra))
      throw DomainError(
          "graph file: expected 'vertices N' or 'matrix N' header, got '" +
          line + "'");
    n = static_cast<std::size_t>(std::stoull(count));
    if (n == 0) throw DomainError("graph file: vertex count must be positive");
  }

  if (header == "vertices") {
    DirectedGraph g;
    for (std::size_t v = 0; v < n; ++v) g.labels.push_back(std::to_string(v));
    while (next_line(line)) {
      std::istringstream es(line);
      std::string kw, a, b, extra;
      es >> kw >> a >> b;
      if (kw != "edge" || !all_digits(a) || !all_digits(b) || (es >> extra))
        throw DomainError("graph file: expected 'edge <src> <dst>', got '" +
                          line + "'");
      std::size_t s = static_cast<std::size_t>(std::stoull(a));
      std::size_t t = static_cast<std::size_t>(std::stoull(b));
      if (s >= n || t >= n)
        throw DomainError("graph file: vertex index out of range in '" + line +
                          "'");
      g.edges.emplace_back(s, t);
    }
    return g;
  }

  // matrix form: n rows of n nonnegative integers
  IntMatrix A(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!next_line(line))
      throw DomainError("graph file: matrix row " + std::to_string(r) +
                        " missing");
    std::istringstream rs(line);
    std::string tok;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(rs >> tok) || !all_digits(tok))
        throw DomainError("graph file: bad matrix entry in row " +
                          std::to_string(r));
      A(r, c) = BigInt(tok);
    }
    std::string extra;
    if (rs >> extra)
      throw DomainError("graph file: too many entries in row " +
                        std::to_string(r));
  }
  if (next_line(line))
    throw DomainError("graph file: unexpected trailing line '" + line + "'");
  return graph_from_matrix(A);
}

EssentialMatrix cuntz_splice(const EssentialMatrix& A, std::size_t at_vertex) {
  const std::size_t n = A.size();
  if (at_vertex >= n)
    throw DimensionError("cuntz_splice: vertex index out of range");
  if (A.matrix()(at_vertex, at_vertex) < 1)
    throw DomainError("cuntz_splice: vertex " + std::to_string(at_vertex) +
                      " has no loop");
  IntMatrix B(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) B(i, j) = A.matrix()(i, j);
  const std::size_t v1 = n, v2 = n + 1;
  B(at_vertex, v1) = 1;
  B(v1, at_vertex) = 1;
  B(v1, v1) = 1;
  B(v1, v2) = 1;
  B(v2, v1) = 1;
  B(v2, v2) = 1;
  return EssentialMatrix(B);
}

ObstructionResult unital_hom_obstruction(const EssentialMatrix& A,
                                         const EssentialMatrix& B) {
  std::vector<IntMatrix> lattice = solve_intertwiners(A, B);
  std::vector<RatMatrix> span;
  span.reserve(lattice.size());
  for (const IntMatrix& M : lattice) span.emplace_back(M);
  std::optional<RatMatrix> point =
      span.empty() ? std::nullopt : nonneg_feasible(span);
  if (!point) return {ObstructionResult::Kind::NoUnitalHom, std::nullopt};

  // Clear denominators and divide by the content to get a primitive
  // integral representative of the witness ray.
  BigInt lcm = 1;
  for (std::size_t i = 0; i < point->rows(); ++i)
    for (std::size_t j = 0; j < point->cols(); ++j)
      lcm = boost::multiprecision::lcm(
          lcm, boost::multiprecision::denominator((*point)(i, j)));
  IntMatrix R(point->rows(), point->cols());
  BigInt content = 0;
  for (std::size_t i = 0; i < point->rows(); ++i)
    for (std::size_t j = 0; j < point->cols(); ++j) {
      BigRat scaled = (*point)(i, j) * BigRat(lcm);
      R(i, j) = boost::multiprecision::numerator(scaled);
      content = boost::multiprecision::gcd(content, R(i, j));
    }
  if (content > 1)
    for (std::size_t i = 0; i < R.rows(); ++i)
      for (std::size_t j = 0; j < R.cols(); ++j) R(i, j) /= content;
  return {ObstructionResult::Kind::InconclusiveWithCandidate, std::move(R)};
}

std::vector<DimClass> k0gr_generators(const DirectedGraph& g) {
  EssentialMatrix A = adjacency(g);
  std::vector<DimClass> gens;
  gens.reserve(A.size());
  for (std::size_t v = 0; v < A.size(); ++v) {
    IntMatrix e(A.size(), 1);
    e(v, 0) = 1;
    gens.emplace_back(A, e, 0);
  }
  return gens;
}

ZModClass::ZModClass(EssentialMatrix mat, IntMatrix v, long long k,
                     std::size_t modulus)
    : mat_(std::move(mat)), v_(std::move(v)), k_(0), m_(modulus) {
  if (m_ == 0) throw DomainError("ZModClass: modulus must be positive");
  if (v_.rows() != mat_.size() || v_.cols() != 1)
    throw DimensionError("ZModClass: vector must be a column of length |A|");
  const long long m = static_cast<long long>(m_);
  k_ = static_cast<std::size_t>(((k % m) + m) % m);
}

std::size_t default_zmod_bound(const EssentialMatrix& A, std::size_t m) {
  return 2 * (A.size() + m);
}

ZModEqualResult zmod_equal(const ZModClass& a, const ZModClass& b,
                           std::optional<std::size_t> bound) {
  if (a.modulus() != b.modulus())
    throw DomainError("zmod_equal: modulus mismatch");
  if (a.matrix() != b.matrix())
    throw DomainError("zmod_equal: classes live over different matrices");
  const std::size_t m = a.modulus();
  const std::size_t limit = bound ? *bound : default_zmod_bound(a.matrix(), m);

  // (A^t)^p v for p = 0..limit, built incrementally.
  const IntMatrix At = a.matrix().matrix().transpose();
  std::vector<IntMatrix> va{a.vec()}, vb{b.vec()};
  for (std::size_t p = 1; p <= limit; ++p) {
    va.push_back(At * va.back());
    vb.push_back(At * vb.back());
  }
  // Smallest p+q first, then smallest p, so the reported witness is canonical.
  for (std::size_t s = 0; s <= 2 * limit; ++s) {
    const std::size_t lo = s > limit ? s - limit : 0;
    for (std::size_t p = lo; p <= s && p <= limit; ++p) {
      const std::size_t q = s - p;
      if ((p + a.residue()) % m != (q + b.residue()) % m) continue;
      if (va[p] == vb[q]) return {true, p, q};
    }
  }
  return {false, 0, 0};
}

bool zmod_intertwiner_check(const IntMatrix& R, const EssentialMatrix& A,
                            const EssentialMatrix& B, std::size_t m,
                            std::size_t k) {
  if (R.rows() != A.size() || R.cols() != B.size())
    throw DimensionError("zmod_intertwiner_check: R must be |A| x |B|");
  if (A.size() != B.size())
    throw DimensionError(
        "zmod_intertwiner_check: A R B^{km} = B R needs |A| = |B|");
  return A.matrix() * R * B.power(k * m) == B.matrix() * R;
}

}  // namespace shifteq
