#pragma once

#include <string>

#include "cca/cayley.hpp"
#include "cca/group_map.hpp"

namespace cca {

/// original = beta o psi, beta a group automorphism and psi a
/// colour-preserving automorphism of the complete Cayley graph.
struct Decomposition {
  GroupMap beta;
  GroupMap psi;
  GroupMap original;
};

struct Normalized {
  Element shift = 0;  ///< phi(1)
  GroupMap fixed;     ///< L_shift^-1 o phi, fixes 1
};

/// phi = L_g o phi' with phi'(1) = 1.
Normalized normalize_to_stabilizer(const FiniteGroup& G, const GroupMap& phi);

/// Factors a colour-permuting automorphism of K_G.
///
/// After normalizing phi to fix 1: when G is not a hamiltonian 2-group
/// the normalized map must already be a group automorphism. Otherwise, with
/// G = <i,j> x B, beta is assembled from alpha(i^m j^n) = phi(i)^m phi(j)^n
/// on the quaternion factor and phi itself on B. Every intermediate claim
/// of the construction is checked; a failure throws ProofStepError naming
/// the step. psi absorbs the translation, so beta always fixes 1.
///
/// Throws PreconditionError if phi is not colour-permuting on K_G.
Decomposition decompose_colour_permuting(const CayleyGraph& complete, const GroupMap& phi);

/// beta is an automorphism, psi is colour-preserving on K_G and beta o psi = original.
bool verify_decomposition(const CayleyGraph& complete, const Decomposition& d);

std::string to_json(const CayleyGraph& complete, const Decomposition& d);

}  // namespace cca
