#include "cca/colour_aut.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cca/errors.hpp"

namespace cca {

namespace {

void require_cap(const CayleyGraph& X, std::size_t max_order) {
  if (X.order() > max_order) {
    throw CapExceeded("graph order " + std::to_string(X.order()) + " exceeds cap " +
                      std::to_string(max_order));
  }
}

Element local_step(const FiniteGroup& G, const GroupMap& phi, Element g, Element s) {
  return G.mul(G.inv(phi(g)), phi(G.mul(g, s)));
}

}  // namespace

bool is_colour_preserving(const CayleyGraph& X, const GroupMap& phi) {
  const FiniteGroup& G = X.group();
  if (phi.size() != G.order()) return false;
  for (Element g = 0; g < G.order(); ++g)
    for (Element s : X.connection_set())
      if (X.colour_of_element(local_step(G, phi, g, s)) != X.colour_of_element(s)) return false;
  return true;
}

std::optional<std::vector<int>> is_colour_permuting(const CayleyGraph& X, const GroupMap& phi) {
  const FiniteGroup& G = X.group();
  if (phi.size() != G.order()) return std::nullopt;
  const std::size_t m = X.colour_count();
  std::vector<int> pibar(m, kNoColour);
  std::vector<bool> hit(m, false);
  for (Element s : X.connection_set()) {
    const int from = X.colour_of_element(s);
    const int to = X.colour_of_element(local_step(G, phi, 0, s));
    if (to == kNoColour) return std::nullopt;
    if (pibar[from] == kNoColour) {
      if (hit[to]) return std::nullopt;
      pibar[from] = to;
      hit[to] = true;
    } else if (pibar[from] != to) {
      return std::nullopt;
    }
  }
  for (Element g = 1; g < G.order(); ++g)
    for (Element s : X.connection_set())
      if (X.colour_of_element(local_step(G, phi, g, s)) != pibar[X.colour_of_element(s)])
        return std::nullopt;
  return pibar;
}

bool is_graph_automorphism(const CayleyGraph& X, const GroupMap& phi) {
  if (phi.size() != X.order()) return false;
  for (Element u = 0; u < X.order(); ++u)
    for (Element v = 0; v < X.order(); ++v)
      if (X.adjacent(u, v) != X.adjacent(phi(u), phi(v))) return false;
  return true;
}

bool satisfies_mode(const CayleyGraph& X, const GroupMap& phi, AutMode mode) {
  switch (mode) {
    case AutMode::ColourPreserving: return is_colour_preserving(X, phi);
    case AutMode::ColourPermuting: return is_colour_permuting(X, phi).has_value();
    case AutMode::Graph: return is_graph_automorphism(X, phi);
    case AutMode::Group: return is_group_automorphism(X.group(), phi);
  }
  return false;
}

Element LocalPermutation::operator()(Element s) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), s);
  if (it == domain.end() || *it != s) throw PreconditionError("element is not in S");
  return image[static_cast<std::size_t>(it - domain.begin())];
}

LocalPermutation local_permutation(const CayleyGraph& X, const GroupMap& phi, Element g) {
  if (!is_colour_permuting(X, phi)) throw PreconditionError("map is not colour-permuting");
  LocalPermutation pi;
  pi.base = g;
  pi.domain = X.connection_set();
  for (Element s : pi.domain) pi.image.push_back(local_step(X.group(), phi, g, s));
  return pi;
}

namespace {

class StabilizerSearch {
 public:
  StabilizerSearch(const CayleyGraph& X, AutMode mode, const AutVisitor& visit)
      : X_(X), G_(X.group()), mode_(mode), visit_(visit), n_(X.order()) {
    build_order();
    img_.assign(n_, kUnset);
    used_.assign(n_, false);
    pibar_.assign(X.colour_count(), kNoColour);
    pibar_inv_.assign(X.colour_count(), kNoColour);
  }

  bool run() {
    img_[0] = 0;
    used_[0] = true;
    return descend(1);
  }

 private:
  static constexpr Element kUnset = ~Element{0};

  void build_order() {
    std::vector<bool> seen(n_, false);
    parent_.assign(n_, kUnset);
    for (Element root = 0; root < n_; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::deque<Element> queue{root};
      while (!queue.empty()) {
        Element u = queue.front();
        queue.pop_front();
        order_.push_back(u);
        for (const ColourClass& c : X_.colours()) {
          for (Element s : {c.lo, c.hi}) {
            Element v = G_.mul(u, s);
            if (!seen[v]) {
              seen[v] = true;
              parent_[v] = u;
              queue.push_back(v);
            }
          }
        }
      }
    }
  }

  std::size_t class_size(int c) const { return X_.colours()[static_cast<std::size_t>(c)].is_singleton() ? 1 : 2; }

  void candidates(Element v, std::vector<Element>& out) const {
    out.clear();
    const Element p = parent_[v];
    if (p == kUnset) {
      for (Element w = 0; w < n_; ++w)
        if (!used_[w]) out.push_back(w);
      return;
    }
    const Element base = img_[p];
    const Element s = G_.mul(G_.inv(p), v);
    const int cs = X_.colour_of_element(s);
    auto push_class = [&](int c) {
      const ColourClass& cc = X_.colours()[static_cast<std::size_t>(c)];
      out.push_back(G_.mul(base, cc.lo));
      if (!cc.is_singleton()) out.push_back(G_.mul(base, cc.hi));
    };
    switch (mode_) {
      case AutMode::ColourPreserving:
        push_class(cs);
        break;
      case AutMode::ColourPermuting:
        if (pibar_[cs] != kNoColour) {
          push_class(pibar_[cs]);
        } else {
          for (const ColourClass& cc : X_.colours())
            if (pibar_inv_[cc.id] == kNoColour && class_size(cc.id) == class_size(cs)) push_class(cc.id);
        }
        break;
      default:
        for (Element t : X_.connection_set()) out.push_back(G_.mul(base, t));
        break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::remove_if(out.begin(), out.end(), [&](Element w) { return used_[w]; }), out.end());
  }

  // Checks v -> w against every vertex mapped so far; in colour-permuting
  // mode records newly forced colour images in `fresh`.
  bool consistent(std::size_t depth, Element v, Element w, std::vector<int>& fresh) {
    for (std::size_t d = 0; d < depth; ++d) {
      const Element u = order_[d];
      const int c1 = X_.edge_colour(u, v);
      const int c2 = X_.edge_colour(img_[u], w);
      switch (mode_) {
        case AutMode::ColourPreserving:
          if (c1 != c2) return false;
          break;
        case AutMode::ColourPermuting:
          if ((c1 == kNoColour) != (c2 == kNoColour)) return false;
          if (c1 == kNoColour) break;
          if (pibar_[c1] != kNoColour) {
            if (pibar_[c1] != c2) return false;
          } else {
            if (pibar_inv_[c2] != kNoColour || class_size(c1) != class_size(c2)) return false;
            pibar_[c1] = c2;
            pibar_inv_[c2] = c1;
            fresh.push_back(c1);
          }
          break;
        default:
          if ((c1 == kNoColour) != (c2 == kNoColour)) return false;
          break;
      }
    }
    return true;
  }

  void undo(std::vector<int>& fresh) {
    for (int c : fresh) {
      pibar_inv_[pibar_[c]] = kNoColour;
      pibar_[c] = kNoColour;
    }
    fresh.clear();
  }

  bool descend(std::size_t depth) {
    if (depth == n_) return visit_(GroupMap(img_));
    const Element v = order_[depth];
    std::vector<Element> cands;
    candidates(v, cands);
    std::vector<int> fresh;
    for (Element w : cands) {
      if (consistent(depth, v, w, fresh)) {
        img_[v] = w;
        used_[w] = true;
        const bool keep_going = descend(depth + 1);
        used_[w] = false;
        img_[v] = kUnset;
        if (!keep_going) {
          undo(fresh);
          return false;
        }
      }
      undo(fresh);
    }
    return true;
  }

  const CayleyGraph& X_;
  const FiniteGroup& G_;
  AutMode mode_;
  const AutVisitor& visit_;
  std::size_t n_;
  std::vector<Element> order_;
  std::vector<Element> parent_;
  std::vector<Element> img_;
  std::vector<bool> used_;
  std::vector<int> pibar_;
  std::vector<int> pibar_inv_;
};

}  // namespace

bool search_stabilizer(const CayleyGraph& X, AutMode mode, const AutVisitor& visit) {
  if (mode == AutMode::Group) {
    for (const GroupMap& a : enumerate_automorphisms(X.group(), X.order()).maps)
      if (!visit(a)) return false;
    return true;
  }
  return StabilizerSearch(X, mode, visit).run();
}

AutomorphismSet enumerate_stabilizer(const CayleyGraph& X, AutMode mode, std::size_t max_order) {
  require_cap(X, max_order);
  AutomorphismSet out;
  out.mode = mode;
  out.stabilized = true;
  search_stabilizer(X, mode, [&](const GroupMap& phi) {
    out.maps.push_back(phi);
    return true;
  });
  normalize(out.maps);
  return out;
}

AutomorphismSet with_translations(const CayleyGraph& X, const AutomorphismSet& stabilizer) {
  AutomorphismSet out;
  out.mode = stabilizer.mode;
  out.stabilized = false;
  for (Element g = 0; g < X.order(); ++g) {
    const GroupMap L = left_translation(X.group(), g);
    for (const GroupMap& phi : stabilizer.maps) out.maps.push_back(compose(L, phi));
  }
  normalize(out.maps);
  return out;
}

GroupMap make_colour_preserving_conjugate(const CayleyGraph& X, const GroupMap& phi, Element g,
                                          Element s) {
  const FiniteGroup& G = X.group();
  if (phi.size() != G.order() || phi(0) != 0) throw PreconditionError("phi must fix the identity");
  if (!X.in_connection_set(s)) throw PreconditionError("s is not in S");
  if (!is_colour_permuting(X, phi)) throw PreconditionError("phi is not colour-permuting");
  const GroupMap phi_inv = phi.inverse();
  const Element gs = G.mul(g, s);
  const Element left = phi(g);
  const Element right_inv = G.inv(phi(gs));
  const Element g_inv = G.inv(g);
  std::vector<Element> image(G.order());
  for (Element x = 0; x < G.order(); ++x) {
    Element y = phi(G.mul(gs, x));
    y = G.mul(left, G.mul(right_inv, y));
    image[x] = G.mul(g_inv, phi_inv(y));
  }
  GroupMap psi(std::move(image));
  if (psi(0) != 0) throw ProofStepError("conjugate fixes 1", "psi(1) != 1");
  if (psi(s) != s) throw ProofStepError("conjugate fixes s", "psi(s) != s");
  if (!is_colour_preserving(X, psi)) throw ProofStepError("conjugate is colour-preserving", "psi permutes colours");
  return psi;
}

ElementSet star_set(const CayleyGraph& X, const AutomorphismSet& preserving_stabilizer) {
  ElementSet out;
  for (Element s : X.connection_set()) {
    bool moved_by_all = true;
    for (const GroupMap& phi : preserving_stabilizer.maps) {
      if (!phi.is_identity() && phi(s) == s) {
        moved_by_all = false;
        break;
      }
    }
    if (moved_by_all) out.push_back(s);
  }
  return out;
}

ElementSet star_set(const CayleyGraph& X, std::size_t max_order) {
  return star_set(X, enumerate_stabilizer(X, AutMode::ColourPreserving, max_order));
}

bool acts_semiregularly_on_S(const CayleyGraph& X, const AutomorphismSet& stabilizer) {
  for (const GroupMap& phi : stabilizer.maps) {
    if (phi.is_identity()) continue;
    for (Element s : X.connection_set())
      if (phi(s) == s) return false;
  }
  return true;
}

InvolutionSubgroup involution_subgroup(const CayleyGraph& X) {
  InvolutionSubgroup out;
  for (Element s : X.connection_set())
    if (X.group().element_order(s) == 2) out.involutions.push_back(s);
  out.subgroup = subgroup_generated(X.group(), out.involutions);
  return out;
}

CcaStatus cca_status(const CayleyGraph& X, const CcaOptions& options) {
  require_cap(X, options.max_order);
  const FiniteGroup& G = X.group();
  CcaStatus status;

  const AutomorphismSet preserving = enumerate_stabilizer(X, AutMode::ColourPreserving, options.max_order);
  status.preserving_stabilizer_size = preserving.size();
  for (const GroupMap& phi : preserving.maps)
    if (!is_group_automorphism(G, phi)) status.preserving_witnesses.push_back(phi);
  status.cca = status.preserving_witnesses.empty();

  auto first_non_affine = [&](AutMode mode) {
    std::optional<GroupMap> witness;
    search_stabilizer(X, mode, [&](const GroupMap& phi) {
      if (is_group_automorphism(G, phi)) return true;
      witness = phi;
      return false;
    });
    return witness;
  };
  status.permuting_witness = first_non_affine(AutMode::ColourPermuting);
  status.strongly_cca = !status.permuting_witness.has_value();
  if (options.check_normal) {
    status.graph_witness = first_non_affine(AutMode::Graph);
    status.normal = !status.graph_witness.has_value();
  }
  return status;
}

}  // namespace cca
