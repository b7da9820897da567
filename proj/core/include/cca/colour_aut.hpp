#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cca/cayley.hpp"
#include "cca/group_map.hpp"

namespace cca {

/// phi(g s) in {phi(g) s, phi(g) s^-1} for all g in G, s in S.
bool is_colour_preserving(const CayleyGraph& X, const GroupMap& phi);

/// The induced permutation of colour ids, if phi sends same-coloured
/// edges to same-coloured edges. Read off the star of vertex 1, then
/// verified on every edge.
std::optional<std::vector<int>> is_colour_permuting(const CayleyGraph& X, const GroupMap& phi);

/// Graph automorphism (adjacency only).
bool is_graph_automorphism(const CayleyGraph& X, const GroupMap& phi);

/// Membership test for the family named by `mode` (Group means group automorphism).
bool satisfies_mode(const CayleyGraph& X, const GroupMap& phi, AutMode mode);

/// The permutation s -> phi(g)^-1 phi(g s) of S seen at vertex g.
struct LocalPermutation {
  Element base = 0;
  ElementSet domain;
  std::vector<Element> image;

  Element operator()(Element s) const;
  friend bool operator==(const LocalPermutation& a, const LocalPermutation& b) {
    return a.domain == b.domain && a.image == b.image;
  }
};

/// Throws PreconditionError if phi is not colour-permuting.
LocalPermutation local_permutation(const CayleyGraph& X, const GroupMap& phi, Element g);

/// Called for each map found; return false to stop the search.
using AutVisitor = std::function<bool(const GroupMap&)>;

/// Backtracking search over the 1-fixing maps of the given kind. Vertices
/// are visited breadth-first from 1, taking colour classes in id order;
/// in colour-permuting mode the colour permutation is fixed lazily as the
/// first edges of each colour are mapped. Returns false if the visitor
/// stopped the search early.
///
/// In Graph mode on dense graphs the stabilizer can be factorial in size;
/// only use it with a visitor that stops early.
bool search_stabilizer(const CayleyGraph& X, AutMode mode, const AutVisitor& visit);

/// All 1-fixing maps of the given kind, sorted.
AutomorphismSet enumerate_stabilizer(const CayleyGraph& X, AutMode mode,
                                     std::size_t max_order = kDefaultMaxOrder);

/// The whole group {L_g o phi : g in G, phi in stabilizer}.
AutomorphismSet with_translations(const CayleyGraph& X, const AutomorphismSet& stabilizer);

/// psi = L_g^-1 o phi^-1 o L_phi(g) o L_phi(gs)^-1 o phi o L_gs. Requires phi
/// colour-permuting with phi(1) = 1 and s in S; the result is checked to be
/// colour-preserving, 1-fixing and to fix s.
GroupMap make_colour_preserving_conjugate(const CayleyGraph& X, const GroupMap& phi, Element g,
                                          Element s);

/// S* = elements of S moved by every nontrivial colour-preserving stabilizer element.
ElementSet star_set(const CayleyGraph& X, std::size_t max_order = kDefaultMaxOrder);
ElementSet star_set(const CayleyGraph& X, const AutomorphismSet& preserving_stabilizer);

/// Whether no nontrivial member of `stabilizer` fixes a point of S.
bool acts_semiregularly_on_S(const CayleyGraph& X, const AutomorphismSet& stabilizer);

struct InvolutionSubgroup {
  ElementSet involutions;  ///< S_2, the involutions in S
  ElementSet subgroup;     ///< <S_2>
};

InvolutionSubgroup involution_subgroup(const CayleyGraph& X);

struct CcaStatus {
  bool cca = false;
  bool strongly_cca = false;
  std::optional<bool> normal;  ///< unset when not requested
  std::size_t preserving_stabilizer_size = 0;
  /// Every non-affine member of the colour-preserving stabilizer.
  std::vector<GroupMap> preserving_witnesses;
  /// First non-affine colour-permuting stabilizer member found, if any.
  std::optional<GroupMap> permuting_witness;
  /// First non-affine graph automorphism fixing 1, if any.
  std::optional<GroupMap> graph_witness;
};

struct CcaOptions {
  bool check_normal = true;
  std::size_t max_order = kDefaultMaxOrder;
};

/// A map is affine iff its 1-normalized form is a group automorphism, so
/// each verdict only inspects the stabilizer. The colour-permuting and
/// graph searches stop at the first non-affine map.
CcaStatus cca_status(const CayleyGraph& X, const CcaOptions& options = {});

}  // namespace cca
