#ifndef SHIFTEQ_BIMODULE_HPP
#define SHIFTEQ_BIMODULE_HPP

#include "shifteq/rat_matrix.hpp"
#include "shifteq/shift_equivalence.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace shifteq {

// A finite set of edges between two vertex sets, recorded fiberwise:
// counts(v, w) edges from source v to target w.
class EdgeSet {
 public:
  explicit EdgeSet(IntMatrix counts);

  const IntMatrix& counts() const { return counts_; }
  std::size_t sources() const { return counts_.rows(); }
  std::size_t targets() const { return counts_.cols(); }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.counts_ == b.counts_;
  }
  friend bool operator!=(const EdgeSet& a, const EdgeSet& b) { return !(a == b); }

 private:
  IntMatrix counts_;
};

// A tensor word of edge sets, E_1 ox ... ox E_r, with its path basis: the
// block over (v, w) is spanned by the paths v -> w that use one edge of each
// factor in order.  A path is stored as its sequence of (target vertex,
// index within the fiber) pairs.  Bases are enumerated in lexicographic
// order of that sequence, which fixes, once and for all, how any block of
// any tensor word is identified with coordinates.  Tensoring words is then
// concatenation, strictly associative, so no regrouping isomorphisms appear
// anywhere downstream.
class BasedBimodule {
 public:
  using Path = std::vector<std::pair<std::size_t, std::size_t>>;

  explicit BasedBimodule(std::vector<EdgeSet> word);

  static BasedBimodule of(const EdgeSet& e);
  static BasedBimodule power(const EdgeSet& e, std::size_t m);

  const std::vector<EdgeSet>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  std::size_t sources() const { return word_.front().sources(); }
  std::size_t targets() const { return word_.back().targets(); }

  // Block dimensions: the product of the count matrices.
  const IntMatrix& dims() const { return dims_; }

  const std::vector<Path>& paths(std::size_t v, std::size_t w) const;
  std::size_t path_index(std::size_t v, std::size_t w, const Path& p) const;

  friend bool same_word(const BasedBimodule& a, const BasedBimodule& b);

 private:
  std::vector<EdgeSet> word_;
  IntMatrix dims_;
  std::vector<std::vector<std::vector<Path>>> paths_;  // [v][w] in canonical order
};

BasedBimodule tensor(const BasedBimodule& a, const BasedBimodule& b);

// A homomorphism of based bimodules: one rational matrix per block, taking
// coordinates in the domain basis to coordinates in the codomain basis.
// Blocks with an empty basis on both sides are omitted (stored disengaged);
// a block empty on one side only is the zero map and needs no matrix either.
class BimoduleMap {
 public:
  BimoduleMap(BasedBimodule dom, BasedBimodule cod);

  const BasedBimodule& dom() const { return dom_; }
  const BasedBimodule& cod() const { return cod_; }

  // Null when either side of the block is empty.
  const RatMatrix* block(std::size_t v, std::size_t w) const;
  RatMatrix& mutable_block(std::size_t v, std::size_t w);

  friend bool maps_equal(const BimoduleMap& f, const BimoduleMap& g);

 private:
  BasedBimodule dom_, cod_;
  std::vector<std::vector<std::optional<RatMatrix>>> blocks_;
};

BimoduleMap identity_map(const BasedBimodule& m);

// g after f; the words of f's codomain and g's domain must agree.
BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f);

// f ox g on the concatenated words: a path splits uniquely at the junction
// vertex, and the factors act on their own halves.
BimoduleMap tensor_map(const BimoduleMap& f, const BimoduleMap& g);

// The straight index pairing between two words with equal block dimensions:
// the k-th path of one block goes to the k-th path of the other.  This is
// the canonical way to turn a counting identity (equal dimension matrices)
// into an actual isomorphism of based bimodules.
BimoduleMap lex_pairing(const BasedBimodule& dom, const BasedBimodule& cod);

// The canonical intertwining isomorphism E ox G -> G ox F attached to a
// matrix identity (counts of E) (counts of G) = (counts of G) (counts of F).
BimoduleMap build_sigma(const EdgeSet& E, const EdgeSet& G, const EdgeSet& F);

// A lag-m equivalence of A and B at the bimodule level: edge sets G (A-side
// to B-side) and H (back), isomorphisms omega identifying G ox H and H ox G
// with the m-th tensor powers of the loop bimodules, and intertwiners sigma
// sliding the loops past G and H.
struct ModuleSEData {
  EssentialMatrix A, B;
  EdgeSet G, H;
  std::size_t m;
  BimoduleMap omega_E;  // G ox H -> E^m
  BimoduleMap omega_F;  // H ox G -> F^m
  BimoduleMap sigma_G;  // E ox G -> G ox F
  BimoduleMap sigma_H;  // F ox H -> H ox E

  ModuleSEData(EssentialMatrix a, EssentialMatrix b, EdgeSet g, EdgeSet h,
               std::size_t lag, BimoduleMap oe, BimoduleMap of, BimoduleMap sg,
               BimoduleMap sh);
};

// The module data canonically attached to a matrix witness, with every
// structure map a lex pairing.
ModuleSEData lex_module_data(const SEWitness& w);

// Structural soundness: the counting identities behind each map, the shapes
// of the maps, and invertibility of every block.
VerifyReport verify_module_se(const ModuleSEData& d);

// The two compatibility squares between the omegas and sigmas: sliding a
// loop edge through G ox H and then collapsing must equal collapsing first,
// on both the A side and the B side.  Checked on the nose, blockwise.
VerifyReport verify_aligned(const ModuleSEData& d);

// Aligned plus unitality of at least one leg: besides the aligned checks, a
// pass needs G to carry the order unit of A to that of B, or H the reverse
// (stabilized either way).
VerifyReport verify_unitally_aligned(const ModuleSEData& d);

// The induced map on stage-0 classes: the coordinate class [e_v, 0] of A
// goes to the sum of R(v, w) copies of [e_w, 0] over B.  Built by repeated
// class addition, deliberately not by matrix transport, so the two
// constructions can be played against each other.
std::vector<DimClass> bridging_K0_action(const EdgeSet& G, const EssentialMatrix& A,
                                         const EssentialMatrix& B);

}  // namespace shifteq

#endif
