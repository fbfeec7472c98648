#include "shifteq/bimodule.hpp"

#include "shifteq/linsolve.hpp"

#include <algorithm>

namespace shifteq {

EdgeSet::EdgeSet(IntMatrix counts) : counts_(std::move(counts)) {
  if (!counts_.is_nonnegative())
    throw DomainError("EdgeSet: edge counts must be nonnegative");
}

BasedBimodule::BasedBimodule(std::vector<EdgeSet> word)
    : word_(std::move(word)), dims_(1, 1) {
  if (word_.empty()) throw DomainError("BasedBimodule: empty tensor word");
  for (std::size_t i = 0; i + 1 < word_.size(); ++i)
    if (word_[i].targets() != word_[i + 1].sources())
      throw DimensionError("BasedBimodule: factors " + std::to_string(i) + " and " +
                           std::to_string(i + 1) + " do not chain");
  dims_ = word_.front().counts();
  for (std::size_t i = 1; i < word_.size(); ++i) dims_ = dims_ * word_[i].counts();

  const std::size_t n = sources(), t = targets();
  paths_.assign(n, std::vector<std::vector<Path>>(t));
  // Depth-first in (target vertex, fiber index) order, which emits each
  // block's paths already lexicographically sorted.
  Path partial;
  for (std::size_t v = 0; v < n; ++v) {
    auto descend = [&](auto&& self, std::size_t step, std::size_t at) -> void {
      if (step == word_.size()) {
        paths_[v][at].push_back(partial);
        return;
      }
      const IntMatrix& c = word_[step].counts();
      for (std::size_t u = 0; u < word_[step].targets(); ++u)
        for (BigInt i = 0; i < c(at, u); ++i) {
          partial.emplace_back(u, static_cast<std::size_t>(i));
          self(self, step + 1, u);
          partial.pop_back();
        }
    };
    descend(descend, 0, v);
  }
}

BasedBimodule BasedBimodule::of(const EdgeSet& e) { return BasedBimodule({e}); }

BasedBimodule BasedBimodule::power(const EdgeSet& e, std::size_t m) {
  if (m == 0) throw DomainError("BasedBimodule: zero tensor power");
  if (e.sources() != e.targets())
    throw DimensionError("BasedBimodule: powers need a square edge set");
  return BasedBimodule(std::vector<EdgeSet>(m, e));
}

const std::vector<BasedBimodule::Path>& BasedBimodule::paths(std::size_t v,
                                                             std::size_t w) const {
  if (v >= sources() || w >= targets())
    throw DimensionError("BasedBimodule: block (" + std::to_string(v) + "," +
                         std::to_string(w) + ") out of range");
  return paths_[v][w];
}

std::size_t BasedBimodule::path_index(std::size_t v, std::size_t w,
                                      const Path& p) const {
  const auto& list = paths(v, w);
  auto it = std::lower_bound(list.begin(), list.end(), p);
  if (it == list.end() || *it != p)
    throw DomainError("BasedBimodule: path not in block (" + std::to_string(v) + "," +
                      std::to_string(w) + ")");
  return static_cast<std::size_t>(it - list.begin());
}

bool same_word(const BasedBimodule& a, const BasedBimodule& b) {
  return a.word_ == b.word_;
}

BasedBimodule tensor(const BasedBimodule& a, const BasedBimodule& b) {
  std::vector<EdgeSet> word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  return BasedBimodule(std::move(word));
}

BimoduleMap::BimoduleMap(BasedBimodule dom, BasedBimodule cod)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
  if (dom_.sources() != cod_.sources() || dom_.targets() != cod_.targets())
    throw DimensionError("BimoduleMap: domain and codomain vertex sets differ");
  blocks_.assign(dom_.sources(),
                 std::vector<std::optional<RatMatrix>>(dom_.targets()));
  for (std::size_t v = 0; v < dom_.sources(); ++v)
    for (std::size_t w = 0; w < dom_.targets(); ++w) {
      std::size_t dd = dom_.paths(v, w).size(), cd = cod_.paths(v, w).size();
      if (dd > 0 && cd > 0) blocks_[v][w].emplace(cd, dd);
    }
}

const RatMatrix* BimoduleMap::block(std::size_t v, std::size_t w) const {
  if (v >= blocks_.size() || w >= blocks_[v].size())
    throw DimensionError("BimoduleMap: block out of range");
  return blocks_[v][w] ? &*blocks_[v][w] : nullptr;
}

RatMatrix& BimoduleMap::mutable_block(std::size_t v, std::size_t w) {
  if (v >= blocks_.size() || w >= blocks_[v].size())
    throw DimensionError("BimoduleMap: block out of range");
  if (!blocks_[v][w])
    throw DomainError("BimoduleMap: block (" + std::to_string(v) + "," +
                      std::to_string(w) + ") is empty");
  return *blocks_[v][w];
}

bool maps_equal(const BimoduleMap& f, const BimoduleMap& g) {
  if (!same_word(f.dom_, g.dom_) || !same_word(f.cod_, g.cod_))
    throw DimensionError("maps_equal: maps have different type");
  for (std::size_t v = 0; v < f.dom_.sources(); ++v)
    for (std::size_t w = 0; w < f.dom_.targets(); ++w) {
      const bool fp = bool(f.blocks_[v][w]), gp = bool(g.blocks_[v][w]);
      if (fp != gp) return false;
      if (fp && *f.blocks_[v][w] != *g.blocks_[v][w]) return false;
    }
  return true;
}

BimoduleMap identity_map(const BasedBimodule& m) {
  BimoduleMap f(m, m);
  for (std::size_t v = 0; v < m.sources(); ++v)
    for (std::size_t w = 0; w < m.targets(); ++w)
      if (f.block(v, w)) {
        RatMatrix& b = f.mutable_block(v, w);
        for (std::size_t i = 0; i < b.rows(); ++i) b(i, i) = 1;
      }
  return f;
}

BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f) {
  if (!same_word(f.cod(), g.dom()))
    throw DimensionError("compose: inner words do not match");
  BimoduleMap h(f.dom(), g.cod());
  for (std::size_t v = 0; v < h.dom().sources(); ++v)
    for (std::size_t w = 0; w < h.dom().targets(); ++w) {
      if (!h.block(v, w)) continue;
      // An empty middle block forces the zero map, which the fresh block
      // already is.
      if (!f.block(v, w) || !g.block(v, w)) continue;
      h.mutable_block(v, w) = *g.block(v, w) * *f.block(v, w);
    }
  return h;
}

BimoduleMap tensor_map(const BimoduleMap& f, const BimoduleMap& g) {
  BasedBimodule dom = tensor(f.dom(), g.dom());
  BasedBimodule cod = tensor(f.cod(), g.cod());
  BimoduleMap h(dom, cod);
  const std::size_t mids = f.dom().targets();
  for (std::size_t v = 0; v < dom.sources(); ++v)
    for (std::size_t w = 0; w < dom.targets(); ++w) {
      if (!h.block(v, w)) continue;
      RatMatrix& out = h.mutable_block(v, w);
      for (std::size_t u = 0; u < mids; ++u) {
        const RatMatrix* fb = f.block(v, u);
        const RatMatrix* gb = g.block(u, w);
        if (!fb || !gb) continue;
        const auto& fdp = f.dom().paths(v, u);
        const auto& gdp = g.dom().paths(u, w);
        const auto& fcp = f.cod().paths(v, u);
        const auto& gcp = g.cod().paths(u, w);
        for (std::size_t p = 0; p < fdp.size(); ++p)
          for (std::size_t q = 0; q < gdp.size(); ++q) {
            BasedBimodule::Path joined = fdp[p];
            joined.insert(joined.end(), gdp[q].begin(), gdp[q].end());
            const std::size_t col = dom.path_index(v, w, joined);
            for (std::size_t pp = 0; pp < fcp.size(); ++pp) {
              if ((*fb)(pp, p) == 0) continue;
              for (std::size_t qq = 0; qq < gcp.size(); ++qq) {
                BigRat val = (*fb)(pp, p) * (*gb)(qq, q);
                if (val == 0) continue;
                BasedBimodule::Path joined_c = fcp[pp];
                joined_c.insert(joined_c.end(), gcp[qq].begin(), gcp[qq].end());
                out(cod.path_index(v, w, joined_c), col) += val;
              }
            }
          }
      }
    }
  return h;
}

BimoduleMap lex_pairing(const BasedBimodule& dom, const BasedBimodule& cod) {
  if (dom.dims() != cod.dims())
    throw DomainError("lex_pairing: block dimensions disagree, counting identity fails");
  BimoduleMap f(dom, cod);
  for (std::size_t v = 0; v < dom.sources(); ++v)
    for (std::size_t w = 0; w < dom.targets(); ++w)
      if (f.block(v, w)) {
        RatMatrix& b = f.mutable_block(v, w);
        for (std::size_t i = 0; i < b.rows(); ++i) b(i, i) = 1;
      }
  return f;
}

BimoduleMap build_sigma(const EdgeSet& E, const EdgeSet& G, const EdgeSet& F) {
  if (E.counts() * G.counts() != G.counts() * F.counts())
    throw DomainError("build_sigma: E G != G F, no intertwining isomorphism");
  return lex_pairing(tensor(BasedBimodule::of(E), BasedBimodule::of(G)),
                     tensor(BasedBimodule::of(G), BasedBimodule::of(F)));
}

ModuleSEData::ModuleSEData(EssentialMatrix a, EssentialMatrix b, EdgeSet g, EdgeSet h,
                           std::size_t lag, BimoduleMap oe, BimoduleMap of,
                           BimoduleMap sg, BimoduleMap sh)
    : A(std::move(a)),
      B(std::move(b)),
      G(std::move(g)),
      H(std::move(h)),
      m(lag),
      omega_E(std::move(oe)),
      omega_F(std::move(of)),
      sigma_G(std::move(sg)),
      sigma_H(std::move(sh)) {
  if (m == 0) throw DomainError("ModuleSEData: lag must be positive");
  if (G.sources() != A.size() || G.targets() != B.size())
    throw DimensionError("ModuleSEData: G must go from A-vertices to B-vertices");
  if (H.sources() != B.size() || H.targets() != A.size())
    throw DimensionError("ModuleSEData: H must go from B-vertices to A-vertices");
}

ModuleSEData lex_module_data(const SEWitness& w) {
  EdgeSet E(w.A.matrix()), F(w.B.matrix()), G(w.R), H(w.S);
  BimoduleMap oe = lex_pairing(tensor(BasedBimodule::of(G), BasedBimodule::of(H)),
                               BasedBimodule::power(E, w.m));
  BimoduleMap of = lex_pairing(tensor(BasedBimodule::of(H), BasedBimodule::of(G)),
                               BasedBimodule::power(F, w.m));
  BimoduleMap sg = build_sigma(E, G, F);
  BimoduleMap sh = build_sigma(F, H, E);
  return ModuleSEData(w.A, w.B, G, H, w.m, std::move(oe), std::move(of),
                      std::move(sg), std::move(sh));
}

namespace {

RelationCheck word_check(std::string name, const BimoduleMap& f,
                         const std::vector<EdgeSet>& dom_word,
                         const std::vector<EdgeSet>& cod_word) {
  bool pass = f.dom().word() == dom_word && f.cod().word() == cod_word;
  return {std::move(name), pass, std::nullopt};
}

RelationCheck invertible_check(std::string name, const BimoduleMap& f) {
  for (std::size_t v = 0; v < f.dom().sources(); ++v)
    for (std::size_t w = 0; w < f.dom().targets(); ++w) {
      std::size_t dd = f.dom().paths(v, w).size(), cd = f.cod().paths(v, w).size();
      if (dd != cd) return {std::move(name), false, std::nullopt};
      const RatMatrix* b = f.block(v, w);
      if (!b) continue;
      if (rank(*b) != dd) return {std::move(name), false, std::nullopt};
    }
  return {std::move(name), true, std::nullopt};
}

RelationCheck count_check(std::string name, const IntMatrix& lhs, const IntMatrix& rhs) {
  IntMatrix d = lhs - rhs;
  if (d.is_zero()) return {std::move(name), true, std::nullopt};
  return {std::move(name), false, std::move(d)};
}

// Blockwise comparison that reports where two maps first disagree.
RelationCheck leg_check(std::string side, const BimoduleMap& f, const BimoduleMap& g) {
  for (std::size_t v = 0; v < f.dom().sources(); ++v)
    for (std::size_t w = 0; w < f.dom().targets(); ++w) {
      const RatMatrix* fb = f.block(v, w);
      const RatMatrix* gb = g.block(v, w);
      if (!fb && !gb) continue;
      bool same = fb && gb && *fb == *gb;
      if (!same)
        return {side + " alignment: mismatch at block (" + std::to_string(v) + "," +
                    std::to_string(w) + ")",
                false, std::nullopt};
    }
  return {side + " alignment", true, std::nullopt};
}

}  // namespace

VerifyReport verify_module_se(const ModuleSEData& d) {
  VerifyReport rep;
  const IntMatrix &A = d.A.matrix(), &B = d.B.matrix();
  const IntMatrix &R = d.G.counts(), &S = d.H.counts();
  rep.checks.push_back(count_check("G H counts A^m", R * S, d.A.power(d.m)));
  rep.checks.push_back(count_check("H G counts B^m", S * R, d.B.power(d.m)));
  rep.checks.push_back(count_check("E G counts G F", A * R, R * B));
  rep.checks.push_back(count_check("F H counts H E", B * S, S * A));

  EdgeSet E(A), F(B);
  std::vector<EdgeSet> GH{d.G, d.H}, HG{d.H, d.G};
  std::vector<EdgeSet> Em(d.m, E), Fm(d.m, F);
  rep.checks.push_back(word_check("omega_E words", d.omega_E, GH, Em));
  rep.checks.push_back(word_check("omega_F words", d.omega_F, HG, Fm));
  rep.checks.push_back(word_check("sigma_G words", d.sigma_G, {E, d.G}, {d.G, F}));
  rep.checks.push_back(word_check("sigma_H words", d.sigma_H, {F, d.H}, {d.H, E}));

  rep.checks.push_back(invertible_check("omega_E invertible", d.omega_E));
  rep.checks.push_back(invertible_check("omega_F invertible", d.omega_F));
  rep.checks.push_back(invertible_check("sigma_G invertible", d.sigma_G));
  rep.checks.push_back(invertible_check("sigma_H invertible", d.sigma_H));
  return rep;
}

VerifyReport verify_aligned(const ModuleSEData& d) {
  VerifyReport rep = verify_module_se(d);
  if (!rep.ok()) {
    rep.checks.push_back({"alignment not evaluated: module data unsound", false,
                          std::nullopt});
    return rep;
  }
  EdgeSet E(d.A.matrix()), F(d.B.matrix());
  BimoduleMap idE = identity_map(BasedBimodule::of(E));
  BimoduleMap idF = identity_map(BasedBimodule::of(F));
  BimoduleMap idG = identity_map(BasedBimodule::of(d.G));
  BimoduleMap idH = identity_map(BasedBimodule::of(d.H));

  // E ox G ox H -> G ox F ox H -> G ox H ox E -> E^(m+1), against pushing
  // the loose E factor straight through omega_E.
  BimoduleMap legE1 = compose(tensor_map(d.omega_E, idE),
                              compose(tensor_map(idG, d.sigma_H),
                                      tensor_map(d.sigma_G, idH)));
  BimoduleMap legE2 = tensor_map(idE, d.omega_E);
  rep.checks.push_back(leg_check("E-side", legE1, legE2));

  BimoduleMap legF1 = compose(tensor_map(d.omega_F, idF),
                              compose(tensor_map(idH, d.sigma_G),
                                      tensor_map(d.sigma_H, idG)));
  BimoduleMap legF2 = tensor_map(idF, d.omega_F);
  rep.checks.push_back(leg_check("F-side", legF1, legF2));
  return rep;
}

VerifyReport verify_unitally_aligned(const ModuleSEData& d) {
  VerifyReport rep = verify_aligned(d);
  const bool g_intertwines =
      d.A.matrix() * d.G.counts() == d.G.counts() * d.B.matrix();
  const bool h_intertwines =
      d.B.matrix() * d.H.counts() == d.H.counts() * d.A.matrix();
  const bool g_unital =
      g_intertwines && verify_unital(d.G.counts(), d.A, d.B);
  const bool h_unital =
      h_intertwines && verify_unital(d.H.counts(), d.B, d.A);
  // Either direction carrying unit to unit suffices.
  rep.checks.push_back({"one leg carries unit to unit", g_unital || h_unital,
                        std::nullopt});
  return rep;
}

std::vector<DimClass> bridging_K0_action(const EdgeSet& G, const EssentialMatrix& A,
                                         const EssentialMatrix& B) {
  if (G.sources() != A.size() || G.targets() != B.size())
    throw DimensionError("bridging_K0_action: G must go from A-vertices to B-vertices");
  if (A.matrix() * G.counts() != G.counts() * B.matrix())
    throw DomainError("bridging_K0_action: A G != G B, no bimodule intertwining");
  std::vector<DimClass> images;
  for (std::size_t v = 0; v < A.size(); ++v) {
    DimClass acc = zero_class(B);
    for (std::size_t w = 0; w < B.size(); ++w) {
      IntMatrix basis(B.size(), 1);
      basis(w, 0) = 1;
      DimClass unit(B, basis, 0);
      for (BigInt c = 0; c < G.counts()(v, w); ++c) acc = dim_add(acc, unit);
    }
    images.push_back(acc);
  }
  return images;
}

}  // namespace shifteq
