#include "shifteq/shift_equivalence.hpp"

#include "shifteq/linsolve.hpp"
#include "shifteq/smith.hpp"

#include <exception>
#include <functional>
#include <thread>

namespace shifteq {

SEWitness::SEWitness(EssentialMatrix a, EssentialMatrix b, IntMatrix r, IntMatrix s,
                     std::size_t lag)
    : A(std::move(a)), B(std::move(b)), R(std::move(r)), S(std::move(s)), m(lag) {
  if (m == 0) throw DomainError("SEWitness: lag must be positive");
  if (R.rows() != A.size() || R.cols() != B.size())
    throw DimensionError("SEWitness: R must be " + std::to_string(A.size()) + "x" +
                         std::to_string(B.size()));
  if (S.rows() != B.size() || S.cols() != A.size())
    throw DimensionError("SEWitness: S must be " + std::to_string(B.size()) + "x" +
                         std::to_string(A.size()));
}

RelaxedSEWitness::RelaxedSEWitness(EssentialMatrix a, EssentialMatrix b, IntMatrix r,
                                   IntMatrix s, IntMatrix t, std::size_t lag_m,
                                   std::size_t lag_k)
    : A(std::move(a)),
      B(std::move(b)),
      R(std::move(r)),
      S(std::move(s)),
      T(std::move(t)),
      m(lag_m),
      k(lag_k) {
  if (m == 0 || k == 0) throw DomainError("RelaxedSEWitness: lags must be positive");
  if (R.rows() != A.size() || R.cols() != B.size())
    throw DimensionError("RelaxedSEWitness: R must be " + std::to_string(A.size()) +
                         "x" + std::to_string(B.size()));
  if (S.rows() != B.size() || S.cols() != A.size())
    throw DimensionError("RelaxedSEWitness: S must be " + std::to_string(B.size()) +
                         "x" + std::to_string(A.size()));
  if (T.rows() != B.size() || T.cols() != A.size())
    throw DimensionError("RelaxedSEWitness: T must be " + std::to_string(B.size()) +
                         "x" + std::to_string(A.size()));
}

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerifyReport::failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.pass) continue;
    if (!out.empty()) out += ", ";
    out += c.name;
  }
  return out;
}

namespace {

RelationCheck eq_check(std::string name, const IntMatrix& lhs, const IntMatrix& rhs) {
  // A shape mismatch is a failed equality, not a malformed question: it
  // arises legitimately, e.g. from an empty chain claiming A = B for
  // differently sized matrices.
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    return {std::move(name), false, std::nullopt};
  IntMatrix d = lhs - rhs;
  if (d.is_zero()) return {std::move(name), true, std::nullopt};
  return {std::move(name), false, std::move(d)};
}

RelationCheck sign_check(std::string name, const IntMatrix& M) {
  return {std::move(name), M.is_nonnegative(), std::nullopt};
}

}  // namespace

VerifyReport verify_se(const SEWitness& w) {
  VerifyReport rep;
  rep.checks.push_back(sign_check("R >= 0", w.R));
  rep.checks.push_back(sign_check("S >= 0", w.S));
  rep.checks.push_back(eq_check("A^m = R S", w.A.power(w.m), w.R * w.S));
  rep.checks.push_back(eq_check("B^m = S R", w.B.power(w.m), w.S * w.R));
  rep.checks.push_back(eq_check("A R = R B", w.A.matrix() * w.R, w.R * w.B.matrix()));
  rep.checks.push_back(eq_check("B S = S A", w.B.matrix() * w.S, w.S * w.A.matrix()));
  return rep;
}

VerifyReport verify_relaxed_se(const RelaxedSEWitness& w) {
  VerifyReport rep;
  rep.checks.push_back(sign_check("R >= 0", w.R));
  rep.checks.push_back(sign_check("S >= 0", w.S));
  rep.checks.push_back(sign_check("T >= 0", w.T));
  rep.checks.push_back(eq_check("A^m = R S", w.A.power(w.m), w.R * w.S));
  rep.checks.push_back(eq_check("A R = R B", w.A.matrix() * w.R, w.R * w.B.matrix()));
  rep.checks.push_back(eq_check("B^k = T R", w.B.power(w.k), w.T * w.R));
  return rep;
}

VerifyReport verify_sse_chain(const IntMatrix& A, const std::vector<SSEStep>& steps,
                              const IntMatrix& B) {
  // An empty chain is the degenerate claim A = B.
  VerifyReport rep;
  IntMatrix cur = A;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string tag = "step " + std::to_string(i);
    const SSEStep& st = steps[i];
    rep.checks.push_back(sign_check(tag + ": R >= 0", st.R));
    rep.checks.push_back(sign_check(tag + ": S >= 0", st.S));
    rep.checks.push_back(eq_check(tag + ": A = R S", cur, st.R * st.S));
    cur = st.S * st.R;
  }
  rep.checks.push_back(eq_check("chain ends at B", cur, B));
  return rep;
}

SEWitness sse_compose(const IntMatrix& A, const std::vector<SSEStep>& steps,
                      const IntMatrix& B) {
  if (steps.empty()) throw DomainError("sse_compose: empty chain");
  VerifyReport rep = verify_sse_chain(A, steps, B);
  if (!rep.ok())
    throw DomainError("sse_compose: chain does not verify: " + rep.failures());
  IntMatrix R = steps.front().R;
  IntMatrix S = steps.front().S;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    R = R * steps[i].R;
    S = steps[i].S * S;
  }
  return SEWitness(EssentialMatrix(A), EssentialMatrix(B), R, S, steps.size());
}

bool verify_unital(const IntMatrix& R, const EssentialMatrix& A,
                   const EssentialMatrix& B) {
  if (R.rows() != A.size() || R.cols() != B.size())
    throw DimensionError("verify_unital: R must be " + std::to_string(A.size()) + "x" +
                         std::to_string(B.size()));
  if (A.matrix() * R != R * B.matrix())
    throw DomainError("verify_unital: A R != R B, matrix does not intertwine");
  IntMatrix d = R.transpose() * IntMatrix::ones_column(A.size()) -
                IntMatrix::ones_column(B.size());
  return (B.transpose_power(B.size()) * d).is_zero();
}

std::vector<IntMatrix> solve_intertwiners(const EssentialMatrix& A,
                                          const EssentialMatrix& B) {
  const std::size_t n = A.size(), p = B.size();
  // vec is row-major, so vec(A R) = (A ox I) vec(R) and
  // vec(R B) = (I ox B^t) vec(R).
  IntMatrix K(n * p, n * p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const std::size_t row = i * p + j;
      for (std::size_t k = 0; k < n; ++k) K(row, k * p + j) += A.matrix()(i, k);
      for (std::size_t k = 0; k < p; ++k) K(row, i * p + k) -= B.matrix()(k, j);
    }
  std::vector<IntMatrix> basis;
  for (const IntMatrix& flat : integer_kernel(K)) {
    IntMatrix R(n, p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < p; ++j) R(i, j) = flat(0, i * p + j);
    basis.push_back(R);
  }
  return basis;
}

namespace {

// Everything one lag of the bounded witness search needs; shared read-only
// across worker threads.
struct SearchContext {
  IntMatrix A = IntMatrix(1, 1), B = IntMatrix(1, 1);
  std::vector<IntMatrix> lattice;   // intertwiner basis, flattened below
  std::vector<std::vector<BigInt>> flat;     // lattice[i] as a flat vector
  std::vector<std::vector<BigInt>> suffix_abs;  // suffix_abs[d][e] = sum_{j>=d} |flat[j][e]|
  BigInt bound;
  std::size_t n = 0, p = 0, m = 0;
  IntMatrix Am = IntMatrix(1, 1), Bm = IntMatrix(1, 1);
  std::size_t rank_needed = 0;
};

struct Found {
  std::vector<BigInt> coeffs;  // for lexicographic merging across chunks
  IntMatrix R, S;

  Found(std::vector<BigInt> c, IntMatrix r, IntMatrix s)
      : coeffs(std::move(c)), R(std::move(r)), S(std::move(s)) {}
};

bool coeffs_less(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Given R, solve the remaining witness equations for an integral nonnegative
// S.  The equations R S = A^m, S R = B^m, B S = S A are linear in vec(S); an
// integral particular solution plus a bounded walk over the integer kernel
// looks for a nonnegative point.
std::optional<IntMatrix> complete_witness(const SearchContext& ctx, const IntMatrix& R) {
  const std::size_t n = ctx.n, p = ctx.p;
  const std::size_t unknowns = p * n;  // S is p x n, row-major vec
  IntMatrix M(n * n + p * p + p * n, unknowns);
  IntMatrix rhs(n * n + p * p + p * n, 1);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j, ++row) {
      for (std::size_t k = 0; k < p; ++k) M(row, k * n + j) += R(i, k);
      rhs(row, 0) = ctx.Am(i, j);
    }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j, ++row) {
      for (std::size_t k = 0; k < n; ++k) M(row, i * n + k) += R(k, j);
      rhs(row, 0) = ctx.Bm(i, j);
    }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < n; ++j, ++row) {
      for (std::size_t k = 0; k < p; ++k) M(row, k * n + j) += ctx.B(i, k);
      for (std::size_t k = 0; k < n; ++k) M(row, i * n + k) -= ctx.A(k, j);
    }

  auto particular = solve_integer(M, rhs);
  if (!particular) return std::nullopt;
  std::vector<IntMatrix> kernel = integer_kernel(M);

  auto unflatten = [&](const IntMatrix& colvec) {
    IntMatrix S(p, n);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < n; ++j) S(i, j) = colvec(i * n + j, 0);
    return S;
  };

  if (kernel.empty()) {
    IntMatrix S = unflatten(*particular);
    if (S.is_nonnegative()) return S;
    return std::nullopt;
  }

  // Lexicographic odometer over kernel coefficients, first nonnegative hit
  // wins; bounded, so a miss here only means "nothing within the box".
  const std::size_t d = kernel.size();
  std::vector<BigInt> c(d, -ctx.bound);
  for (;;) {
    IntMatrix cand = *particular;
    for (std::size_t i = 0; i < d; ++i)
      if (c[i] != 0) cand = cand + c[i] * kernel[i].transpose();
    if (cand.is_nonnegative()) return unflatten(cand);
    std::size_t i = d;
    while (i-- > 0) {
      if (c[i] < ctx.bound) {
        ++c[i];
        for (std::size_t j = i + 1; j < d; ++j) c[j] = -ctx.bound;
        break;
      }
      if (i == 0) return std::nullopt;
    }
  }
}

// Depth-first enumeration of lattice coefficients in lexicographic order,
// restricted to a fixed first coefficient.  partial holds the flattened
// candidate built so far.
std::optional<Found> search_chunk(const SearchContext& ctx, const BigInt& c0) {
  const std::size_t d = ctx.lattice.size();
  const std::size_t entries = ctx.n * ctx.p;
  std::vector<BigInt> partial(entries, BigInt(0)), coeffs(d, BigInt(0));
  std::optional<Found> found;

  auto viable = [&](const std::vector<BigInt>& cur, std::size_t depth) {
    // Entries that no later basis element can raise must already be
    // nonnegative, and rows that are final must not be zero (an essential
    // A^m has no zero row, so neither has R).
    for (std::size_t e = 0; e < entries; ++e)
      if (cur[e] + ctx.bound * ctx.suffix_abs[depth][e] < 0) return false;
    for (std::size_t i = 0; i < ctx.n; ++i) {
      bool final_row = true, zero_row = true;
      for (std::size_t j = 0; j < ctx.p && (final_row || zero_row); ++j) {
        const std::size_t e = i * ctx.p + j;
        if (ctx.suffix_abs[depth][e] != 0) final_row = false;
        if (cur[e] != 0) zero_row = false;
      }
      if (final_row && zero_row) return false;
    }
    return true;
  };

  auto leaf = [&]() {
    IntMatrix R(ctx.n, ctx.p);
    bool zero = true;
    for (std::size_t i = 0; i < ctx.n; ++i)
      for (std::size_t j = 0; j < ctx.p; ++j) {
        R(i, j) = partial[i * ctx.p + j];
        if (R(i, j) != 0) zero = false;
      }
    if (zero) return false;
    if (rank(R) < ctx.rank_needed) return false;
    auto S = complete_witness(ctx, R);
    if (!S) return false;
    found.emplace(coeffs, std::move(R), std::move(*S));
    return true;
  };

  auto step = [&](std::size_t depth, const BigInt& c) {
    coeffs[depth] = c;
    if (c == 0) return;
    for (std::size_t e = 0; e < entries; ++e)
      if (ctx.flat[depth][e] != 0) partial[e] += c * ctx.flat[depth][e];
  };
  auto unstep = [&](std::size_t depth) {
    const BigInt& c = coeffs[depth];
    if (c == 0) return;
    for (std::size_t e = 0; e < entries; ++e)
      if (ctx.flat[depth][e] != 0) partial[e] -= c * ctx.flat[depth][e];
  };

  std::function<bool(std::size_t)> descend = [&](std::size_t depth) -> bool {
    if (depth == d) return leaf();
    const BigInt lo = depth == 0 ? c0 : -ctx.bound;
    const BigInt hi = depth == 0 ? c0 : ctx.bound;
    for (BigInt c = lo; c <= hi; ++c) {
      step(depth, c);
      if (viable(partial, depth + 1) && descend(depth + 1)) return true;
      unstep(depth);
    }
    return false;
  };
  descend(0);
  return found;
}

}  // namespace

std::optional<SEWitness> search_se(const EssentialMatrix& A, const EssentialMatrix& B,
                                   std::size_t m_max, const BigInt& coeff_bound,
                                   std::size_t jobs) {
  if (m_max == 0) throw DomainError("search_se: m_max must be positive");
  if (coeff_bound <= 0) throw DomainError("search_se: coeff_bound must be positive");
  if (jobs == 0) jobs = 1;

  std::vector<IntMatrix> lattice = solve_intertwiners(A, B);
  if (lattice.empty()) return std::nullopt;

  SearchContext ctx;
  ctx.A = A.matrix();
  ctx.B = B.matrix();
  ctx.lattice = lattice;
  ctx.bound = coeff_bound;
  ctx.n = A.size();
  ctx.p = B.size();
  const std::size_t entries = ctx.n * ctx.p, d = lattice.size();
  ctx.flat.assign(d, std::vector<BigInt>(entries));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < ctx.n; ++r)
      for (std::size_t cc = 0; cc < ctx.p; ++cc)
        ctx.flat[i][r * ctx.p + cc] = lattice[i](r, cc);
  ctx.suffix_abs.assign(d + 1, std::vector<BigInt>(entries, BigInt(0)));
  for (std::size_t i = d; i-- > 0;)
    for (std::size_t e = 0; e < entries; ++e)
      ctx.suffix_abs[i][e] = ctx.suffix_abs[i + 1][e] + abs(ctx.flat[i][e]);

  for (std::size_t m = 1; m <= m_max; ++m) {
    ctx.m = m;
    ctx.Am = A.power(m);
    ctx.Bm = B.power(m);
    std::size_t ra = rank(ctx.Am), rb = rank(ctx.Bm);
    ctx.rank_needed = ra > rb ? ra : rb;

    std::vector<BigInt> chunk_first;
    for (BigInt c = -coeff_bound; c <= coeff_bound; ++c) chunk_first.push_back(c);

    std::vector<std::optional<Found>> results(chunk_first.size());
    if (jobs == 1) {
      bool stop = false;
      for (std::size_t i = 0; i < chunk_first.size() && !stop; ++i) {
        results[i] = search_chunk(ctx, chunk_first[i]);
        // Chunks are ordered by first coefficient, so the first hit is the
        // lexicographic minimum and later chunks need not run.
        if (results[i]) stop = true;
      }
    } else {
      std::vector<std::thread> workers;
      std::vector<std::exception_ptr> errors(jobs);
      for (std::size_t t = 0; t < jobs; ++t)
        workers.emplace_back([&, t /* t is copied per thread */]() {
          try {
            for (std::size_t i = t; i < chunk_first.size(); i += jobs)
              results[i] = search_chunk(ctx, chunk_first[i]);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      for (auto& w : workers) w.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }

    std::optional<Found> best;
    for (auto& r : results)
      if (r && (!best || coeffs_less(r->coeffs, best->coeffs))) best = std::move(r);
    if (best) return SEWitness(A, B, best->R, best->S, m);
  }
  return std::nullopt;
}

GradedHomSpec::GradedHomSpec(EssentialMatrix a, EssentialMatrix b,
                             std::vector<DimClass> imgs)
    : A(std::move(a)), B(std::move(b)), images(std::move(imgs)) {
  if (images.size() != A.size())
    throw DimensionError("GradedHomSpec: need one image per vertex of A");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].mat != B)
      throw DomainError("GradedHomSpec: image " + std::to_string(i) +
                        " lives over the wrong matrix");
    if (!images[i].v.is_nonnegative())
      throw DomainError("GradedHomSpec: image " + std::to_string(i) +
                        " has a negative representative; positivity requires "
                        "nonnegative numerators");
  }
}

LiftResult lift_hom_to_matrix(const GradedHomSpec& spec) {
  const std::size_t n = spec.A.size(), p = spec.B.size();
  std::size_t s = 0;
  for (const auto& img : spec.images) s += img.k;

  // Align all images to stage s: column i becomes (B^t)^(s - l_i) v_i.
  IntMatrix Rp_t(p, n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix col = spec.B.transpose_power(s - spec.images[i].k) * spec.images[i].v;
    for (std::size_t r = 0; r < p; ++r) Rp_t(r, i) = col(r, 0);
  }

  IntMatrix diff = Rp_t * spec.A.matrix().transpose() -
                   spec.B.matrix().transpose() * Rp_t;
  for (std::size_t l = 0; l <= p; ++l) {
    if ((spec.B.transpose_power(l) * diff).is_zero()) {
      IntMatrix Rt = spec.B.transpose_power(l) * Rp_t;
      return {Rt.transpose(), s + l};
    }
  }
  throw NotAHomomorphism(
      "images do not commute with the shift: no power up to " + std::to_string(p) +
      " reconciles the candidate matrix with both actions");
}

GradedHomSpec matrix_to_hom(const IntMatrix& R, const EssentialMatrix& A,
                            const EssentialMatrix& B) {
  if (R.rows() != A.size() || R.cols() != B.size())
    throw DimensionError("matrix_to_hom: R must be " + std::to_string(A.size()) + "x" +
                         std::to_string(B.size()));
  if (!R.is_nonnegative())
    throw DomainError("matrix_to_hom: R must be nonnegative to induce a positive map");
  if (A.matrix() * R != R * B.matrix())
    throw DomainError("matrix_to_hom: A R != R B, matrix does not intertwine");
  IntMatrix Rt = R.transpose();
  std::vector<DimClass> images;
  for (std::size_t i = 0; i < A.size(); ++i) {
    IntMatrix col(B.size(), 1);
    for (std::size_t r = 0; r < B.size(); ++r) col(r, 0) = Rt(r, i);
    images.emplace_back(B, std::move(col), 0);
  }
  return GradedHomSpec(A, B, std::move(images));
}

}  // namespace shifteq
