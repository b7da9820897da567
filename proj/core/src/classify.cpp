#include "cca/classify.hpp"

#include <algorithm>

#include "cca/errors.hpp"

namespace cca {

namespace {

// Colour-preserving on Cay(G; G \ {1}), checked without building the graph.
bool preserves_complete_colours(const FiniteGroup& G, const GroupMap& phi) {
  for (Element g = 0; g < G.order(); ++g) {
    for (Element s = 1; s < G.order(); ++s) {
      const Element t = G.mul(G.inv(phi(g)), phi(G.mul(g, s)));
      if (t != s && t != G.inv(s)) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(StabilizerKind kind) {
  switch (kind) {
    case StabilizerKind::Trivial: return "trivial";
    case StabilizerKind::AbelianInversion: return "abelian-inversion";
    case StabilizerKind::DicyclicFlip: return "dicyclic-flip";
    case StabilizerKind::Hamiltonian2Group: return "hamiltonian-2-group";
  }
  return "?";
}

std::string QuaternionSubset::to_string() const {
  std::string out = "{";
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (out.size() > 1) out += ",";
    out += name;
  };
  add(i, "i");
  add(j, "j");
  add(k, "k");
  return out + "}";
}

GroupMap iota_map(const FiniteGroup& G) { return inversion_map(G); }

GroupMap dicyclic_flip(const FiniteGroup& G, const DicyclicWitness& w) {
  if (!is_valid_dicyclic_witness(G, w)) throw PreconditionError("invalid dicyclic witness");
  const Element q_inv = G.inv(w.q);
  std::vector<Element> image(G.order());
  for (Element x = 0; x < G.order(); ++x) {
    if (std::binary_search(w.A.begin(), w.A.end(), x)) {
      image[x] = x;
    } else {
      const Element a = G.mul(q_inv, x);  // x = q a
      image[x] = G.mul(q_inv, a);
    }
  }
  GroupMap flip(std::move(image));
  if (!is_group_automorphism(G, flip)) throw ProofStepError("dicyclic flip", "not a group automorphism");
  for (Element x = 0; x < G.order(); ++x) {
    if (flip(x) != x && flip(x) != G.inv(x)) throw ProofStepError("dicyclic flip", "phi(g) not in {g, g^-1}");
  }
  return flip;
}

GroupMap phi_I(const FiniteGroup& G, const Ham2Decomposition& d, QuaternionSubset I) {
  if (!is_valid_ham2_decomposition(G, d)) throw PreconditionError("invalid hamiltonian 2-group decomposition");
  const Element units[3] = {d.i, d.j, d.k};
  const bool member[3] = {I.i, I.j, I.k};
  auto missing = [&]() {
    for (int t = 0; t < 3; ++t)
      if (!member[t]) return units[t];
    return units[0];
  };
  auto present = [&]() {
    for (int t = 0; t < 3; ++t)
      if (member[t]) return units[t];
    return units[0];
  };

  GroupMap phi;
  switch (I.size()) {
    case 3: phi = GroupMap::identity(G.order()); break;
    case 1: phi = conjugation(G, present()); break;
    case 0: phi = inversion_map(G); break;
    default: phi = compose(conjugation(G, missing()), inversion_map(G)); break;
  }

  const std::string step = "phi_I for I = " + I.to_string();
  if (phi(0) != 0) throw ProofStepError(step, "does not fix 1");
  for (int t = 0; t < 3; ++t) {
    if ((phi(units[t]) == units[t]) != member[t]) throw ProofStepError(step, "fixed units do not match I");
  }
  if (!preserves_complete_colours(G, phi)) throw ProofStepError(step, "not colour-preserving on K_G");
  if (is_group_automorphism(G, phi) != (I.size() % 2 == 1)) {
    throw ProofStepError(step, "automorphism iff |I| odd fails");
  }
  return phi;
}

ElementSet fixed_set(const GroupMap& phi) {
  ElementSet out;
  for (Element x = 0; x < phi.size(); ++x)
    if (phi(x) == x) out.push_back(x);
  return out;
}

CompleteClassification predict_stabilizer(const FiniteGroup& G, std::size_t max_order) {
  if (G.order() > max_order) {
    throw CapExceeded("group order " + std::to_string(G.order()) + " exceeds cap " + std::to_string(max_order));
  }
  CompleteClassification out;
  out.predicted_stabilizer.mode = AutMode::ColourPreserving;
  out.predicted_stabilizer.stabilized = true;
  auto& maps = out.predicted_stabilizer.maps;
  maps.push_back(GroupMap::identity(G.order()));

  if (auto d = decompose_hamiltonian_2group(G)) {
    out.kind = StabilizerKind::Hamiltonian2Group;
    maps.clear();
    for (unsigned bits = 0; bits < 8; ++bits) maps.push_back(phi_I(G, *d, QuaternionSubset::from_bits(bits)));
    out.witness = *d;
  } else if (G.is_abelian()) {
    const GroupMap iota = iota_map(G);
    if (!iota.is_identity()) {
      out.kind = StabilizerKind::AbelianInversion;
      maps.push_back(iota);
    }
  } else if (auto w = is_dicyclic_type(G)) {
    out.kind = StabilizerKind::DicyclicFlip;
    maps.push_back(dicyclic_flip(G, *w));
    out.witness = *w;
  }
  normalize(maps);
  return out;
}

CompleteVerdict complete_cca_verdict(const FiniteGroup& G) {
  const bool not_ham2 = !decompose_hamiltonian_2group(G).has_value();
  return {not_ham2, not_ham2};
}

}  // namespace cca
