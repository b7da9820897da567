#include "cca/decompose.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "cca/colour_aut.hpp"
#include "cca/errors.hpp"

namespace cca {

Normalized normalize_to_stabilizer(const FiniteGroup& G, const GroupMap& phi) {
  const Element g = phi(0);
  return {g, compose(left_translation(G, G.inv(g)), phi)};
}

namespace {

void require(bool ok, const char* step, const char* what) {
  if (!ok) throw ProofStepError(step, what);
}

// beta o psi = phi where psi = L_{beta^-1(phi(1))} o psi_fixed.
Decomposition assemble(const FiniteGroup& G, const GroupMap& phi, GroupMap beta, const GroupMap& psi_fixed) {
  const Element shift = beta.inverse()(phi(0));
  GroupMap psi = compose(left_translation(G, shift), psi_fixed);
  return {std::move(beta), std::move(psi), phi};
}

}  // namespace

Decomposition decompose_colour_permuting(const CayleyGraph& complete, const GroupMap& phi) {
  if (!complete.is_complete()) throw PreconditionError("decomposition needs the complete Cayley graph");
  if (!is_colour_permuting(complete, phi)) throw PreconditionError("map is not colour-permuting on K_G");
  const FiniteGroup& G = complete.group();
  const GroupMap fixed = normalize_to_stabilizer(G, phi).fixed;

  const auto ham = decompose_hamiltonian_2group(G);
  if (!ham) {
    require(is_group_automorphism(G, fixed), "strongly CCA branch",
            "normalized map is not a group automorphism although G is not a hamiltonian 2-group");
    return assemble(G, phi, fixed, GroupMap::identity(G.order()));
  }

  const Element i = ham->i, j = ham->j;
  const Element minus_one = G.mul(i, i);

  // G_2 = <elements of order <= 2>; phi restricts to an automorphism of it.
  ElementSet low;
  for (Element x = 0; x < G.order(); ++x)
    if (G.element_order(x) <= 2) low.push_back(x);
  const ElementSet G2 = subgroup_generated(G, low);
  for (Element x : G2) {
    require(std::binary_search(G2.begin(), G2.end(), fixed(x)), "phi(G_2) = G_2", "image leaves G_2");
    for (Element g = 0; g < G.order(); ++g) {
      require(fixed(G.mul(g, x)) == G.mul(fixed(g), fixed(x)), "phi(gx) = phi(g) phi(x) on G_2",
              "multiplicativity fails");
    }
  }

  const Element pi = fixed(i), pj = fixed(j);
  require(G.element_order(pi) == 4 && G.element_order(pj) == 4, "phi(i), phi(j) have order 4",
          "image order differs");
  require(fixed(minus_one) == minus_one, "phi(i^2) = i^2", "central involution moved");
  require(!G.commute(pi, pj), "phi(i) and phi(j) do not commute", "images commute");

  // alpha(i^m j^n) = phi(i)^m phi(j)^n, well defined on the quaternion words.
  const std::vector<Element> words = quaternion_words(G, i, j);
  const std::vector<Element> image_words = quaternion_words(G, pi, pj);
  std::vector<Element> alpha(G.order(), ~Element{0});
  for (std::size_t t = 0; t < words.size(); ++t) alpha[words[t]] = image_words[t];
  ElementSet q_tilde(image_words.begin(), image_words.end());
  std::sort(q_tilde.begin(), q_tilde.end());
  q_tilde.erase(std::unique(q_tilde.begin(), q_tilde.end()), q_tilde.end());
  require(q_tilde.size() == 8 && q_tilde == subgroup_generated(G, std::vector<Element>{pi, pj}),
          "alpha is an isomorphism onto <phi(i), phi(j)>", "image is not a quaternion subgroup");
  for (Element x : words)
    for (Element y : words)
      require(alpha[G.mul(x, y)] == G.mul(alpha[x], alpha[y]), "alpha is an isomorphism onto <phi(i), phi(j)>",
              "alpha is not multiplicative");

  ElementSet phi_B;
  for (Element b : ham->B) phi_B.push_back(fixed(b));
  std::sort(phi_B.begin(), phi_B.end());
  ElementSet meet;
  std::set_intersection(q_tilde.begin(), q_tilde.end(), phi_B.begin(), phi_B.end(), std::back_inserter(meet));
  require(meet == ElementSet{0}, "Q~8 meets phi(B) trivially", "nontrivial intersection");
  require(product_set(G, q_tilde, phi_B).size() == G.order() && is_normal_subgroup(G, q_tilde) &&
              is_normal_subgroup(G, phi_B),
          "G = Q~8 x phi(B)", "not an internal direct product");

  // beta(q b) = alpha(q) phi(b).
  std::vector<Element> beta_image(G.order());
  for (Element q : words)
    for (Element b : ham->B) beta_image[G.mul(q, b)] = G.mul(alpha[q], fixed(b));
  GroupMap beta(std::move(beta_image));
  require(is_group_automorphism(G, beta), "beta is a group automorphism", "beta is not multiplicative");

  GroupMap psi_fixed = compose(beta.inverse(), fixed);
  require(is_colour_preserving(complete, psi_fixed), "psi = beta^-1 o phi is colour-preserving",
          "psi permutes colours");
  return assemble(G, phi, std::move(beta), psi_fixed);
}

bool verify_decomposition(const CayleyGraph& complete, const Decomposition& d) {
  const FiniteGroup& G = complete.group();
  if (d.beta.size() != G.order() || d.psi.size() != G.order() || d.original.size() != G.order()) return false;
  return is_group_automorphism(G, d.beta) && is_colour_preserving(complete, d.psi) &&
         compose(d.beta, d.psi) == d.original;
}

std::string to_json(const CayleyGraph& complete, const Decomposition& d) {
  const FiniteGroup& G = complete.group();
  nlohmann::ordered_json j;
  j["original"] = std::vector<Element>(d.original.image().begin(), d.original.image().end());
  j["beta"] = std::vector<Element>(d.beta.image().begin(), d.beta.image().end());
  j["psi"] = std::vector<Element>(d.psi.image().begin(), d.psi.image().end());
  j["checks"] = {
      {"beta_automorphism", is_group_automorphism(G, d.beta)},
      {"psi_colour_preserving", is_colour_preserving(complete, d.psi)},
      {"composition", compose(d.beta, d.psi) == d.original},
  };
  return j.dump();
}

}  // namespace cca
