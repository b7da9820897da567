#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "cca/group.hpp"
#include "cca/group_map.hpp"

namespace cca {

/// Shape of the colour-preserving stabilizer of the complete Cayley graph.
enum class StabilizerKind { Trivial, AbelianInversion, DicyclicFlip, Hamiltonian2Group };

std::string_view to_string(StabilizerKind kind);

/// A subset I of {i, j, k}.
struct QuaternionSubset {
  bool i = false;
  bool j = false;
  bool k = false;

  std::size_t size() const noexcept { return std::size_t{i} + std::size_t{j} + std::size_t{k}; }
  /// Bits 0, 1, 2 stand for i, j, k.
  static QuaternionSubset from_bits(unsigned bits) { return {(bits & 1U) != 0, (bits & 2U) != 0, (bits & 4U) != 0}; }
  unsigned bits() const noexcept { return unsigned{i} | unsigned{j} << 1 | unsigned{k} << 2; }
  std::string to_string() const;
};

struct CompleteClassification {
  StabilizerKind kind = StabilizerKind::Trivial;
  std::variant<std::monostate, DicyclicWitness, Ham2Decomposition> witness;
  AutomorphismSet predicted_stabilizer;
};

/// x -> x^-1.
GroupMap iota_map(const FiniteGroup& G);

/// q^e a -> q^-e a for the decomposition G = A u qA. Throws
/// PreconditionError on an invalid witness and ProofStepError if the
/// result is not an automorphism sending every g into {g, g^-1}.
GroupMap dicyclic_flip(const FiniteGroup& G, const DicyclicWitness& w);

/// The map phi_I on a hamiltonian 2-group: identity for I = {i,j,k},
/// conjugation by l for I = {l}, inversion for I empty and
/// phi_{l} o inversion when I misses exactly l. The result is checked to
/// be colour-preserving on K_G, to fix 1, to fix l in {i,j,k} exactly
/// when l is in I, and to be a group automorphism exactly when |I| is odd.
GroupMap phi_I(const FiniteGroup& G, const Ham2Decomposition& d, QuaternionSubset I);

ElementSet fixed_set(const GroupMap& phi);

/// Predicted colour-preserving stabilizer of K_G. Hamiltonian 2-groups
/// take precedence over the dicyclic case; abelian groups of exponent
/// <= 2 are Trivial.
CompleteClassification predict_stabilizer(const FiniteGroup& G, std::size_t max_order = kDefaultMaxOrder);

struct CompleteVerdict {
  bool cca = false;
  bool strongly_cca = false;
};

/// Both flags hold iff G is not of the form Q8 x B with B of exponent <= 2.
CompleteVerdict complete_cca_verdict(const FiniteGroup& G);

}  // namespace cca
