#include "cca/verify.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "cca/catalog.hpp"
#include "cca/classify.hpp"
#include "cca/colour_aut.hpp"
#include "cca/decompose.hpp"
#include "cca/errors.hpp"

namespace cca {

bool Report::check(bool ok, std::string name, std::string detail) {
  if (log_) {
    *log_ << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) *log_ << ": " << detail;
    *log_ << '\n';
  }
  if (!ok) ++failed_;
  outcomes_.push_back({std::move(name), ok, std::move(detail)});
  return ok;
}

void Report::note(const std::string& line) {
  if (log_) *log_ << "     " << line << '\n';
}

std::optional<CheckOutcome> Report::first_failure() const {
  for (const auto& o : outcomes_)
    if (!o.passed) return o;
  return std::nullopt;
}

namespace {

std::string format_set(const FiniteGroup& G, const ElementSet& S) {
  std::string out = "{";
  for (std::size_t t = 0; t < S.size(); ++t) {
    if (t) out += ", ";
    out += G.label(S[t]);
  }
  return out + "}";
}

std::string format_map(const GroupMap& phi) {
  std::string out = "[";
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (x) out += ",";
    out += std::to_string(phi(static_cast<Element>(x)));
  }
  return out + "]";
}

std::vector<std::shared_ptr<const FiniteGroup>> suite_groups(const SuiteOptions& options) {
  if (options.group) {
    return {std::make_shared<const FiniteGroup>(build_group(*options.group, std::max(options.max_order, max_order_from_env())))};
  }
  return load_catalog(options.max_order);
}

// Colour equality on every ordered pair, the edge-wise reading of colour preservation.
bool preserves_every_edge_colour(const CayleyGraph& X, const GroupMap& phi) {
  for (Element u = 0; u < X.order(); ++u)
    for (Element v = 0; v < X.order(); ++v)
      if (X.edge_colour(u, v) != X.edge_colour(phi(u), phi(v))) return false;
  return true;
}

// Colour-permuting read as "some permutation pi of S with pi(s^-1) = pi(s)^-1
// and phi(g s) in {phi(g) pi(s)^{+-1}}". For phi fixing 1 the only candidates
// have pi(s) in {phi(s)^{+-1}}, so the existence reduces to the test below.
bool has_local_colour_permutation(const CayleyGraph& X, const GroupMap& phi) {
  const FiniteGroup& G = X.group();
  if (phi(0) != 0) return false;
  std::vector<int> class_image(X.colour_count(), kNoColour);
  std::vector<bool> hit(X.colour_count(), false);
  for (const ColourClass& c : X.colours()) {
    const int a = X.colour_of_element(phi(c.lo));
    const int b = X.colour_of_element(phi(c.hi));
    if (a == kNoColour || a != b || hit[a]) return false;
    hit[a] = true;
    class_image[c.id] = a;
  }
  for (Element g = 0; g < G.order(); ++g)
    for (Element s : X.connection_set()) {
      const Element t = G.mul(G.inv(phi(g)), phi(G.mul(g, s)));
      if (X.colour_of_element(t) != class_image[X.colour_of_element(s)]) return false;
    }
  return true;
}

}  // namespace

bool is_closed_under_composition(const std::vector<GroupMap>& maps) {
  if (maps.empty()) return false;
  auto index_of = [&](const GroupMap& phi) -> long {
    auto it = std::lower_bound(maps.begin(), maps.end(), phi);
    return (it != maps.end() && *it == phi) ? static_cast<long>(it - maps.begin()) : -1;
  };
  const long id = index_of(GroupMap::identity(maps.front().size()));
  if (id < 0) return false;
  // Grow <T> inside the set from greedily chosen generators T; any product
  // leaving the set refutes closure, and <T> = set at the end proves it.
  std::vector<bool> reached(maps.size(), false);
  std::vector<std::size_t> members{static_cast<std::size_t>(id)};
  reached[static_cast<std::size_t>(id)] = true;
  std::vector<std::size_t> gens;
  for (std::size_t a = 0; a < maps.size(); ++a) {
    if (reached[a]) continue;
    gens.push_back(a);
    std::deque<std::size_t> queue(members.begin(), members.end());
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t t : gens) {
        const long y = index_of(compose(maps[x], maps[t]));
        if (y < 0) return false;
        if (!reached[static_cast<std::size_t>(y)]) {
          reached[static_cast<std::size_t>(y)] = true;
          members.push_back(static_cast<std::size_t>(y));
          queue.push_back(static_cast<std::size_t>(y));
        }
      }
    }
  }
  return true;
}

std::vector<ElementSet> random_connected_connection_sets(const FiniteGroup& G, std::size_t count,
                                                         std::mt19937_64& rng) {
  const auto classes = inverse_classes(G);
  const std::size_t m = classes.size();
  auto set_of = [&](std::uint64_t mask) {
    std::vector<int> ids;
    for (std::size_t c = 0; c < m; ++c)
      if (mask >> c & 1U) ids.push_back(static_cast<int>(c));
    return connection_set_from_classes(G, ids);
  };
  auto valid = [&](const ElementSet& S) {
    return !S.empty() && S.size() + 1 < G.order() && subgroup_generated(G, S).size() == G.order();
  };
  std::vector<ElementSet> out;
  if (m == 0) return out;
  if (m <= 16) {
    std::vector<ElementSet> all;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      ElementSet S = set_of(mask);
      if (valid(S)) all.push_back(std::move(S));
    }
    std::shuffle(all.begin(), all.end(), rng);
    if (all.size() > count) all.resize(count);
    return all;
  }
  std::set<ElementSet> seen;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t attempt = 0; attempt < 1000 * count && out.size() < count; ++attempt) {
    std::uint64_t mask = 0;
    for (std::size_t c = 0; c < m; ++c)
      if (coin(rng)) mask |= std::uint64_t{1} << c;
    ElementSet S = set_of(mask);
    if (valid(S) && seen.insert(S).second) out.push_back(std::move(S));
  }
  return out;
}

void check_graph_lemmas(const CayleyGraph& X, Report& report, std::string_view label, const SuiteOptions& options) {
  const FiniteGroup& G = X.group();
  const std::size_t n = G.order();
  const std::string tag = std::string(label) + " ";
  const AutomorphismSet pres = enumerate_stabilizer(X, AutMode::ColourPreserving, n);
  const AutomorphismSet perm = enumerate_stabilizer(X, AutMode::ColourPermuting, n);
  const InvolutionSubgroup inv = involution_subgroup(X);
  const bool connected = is_connected(X);

  {
    bool ok = true;
    for (Element g = 0; g < n && ok; ++g) ok = is_colour_preserving(X, left_translation(G, g));
    report.check(ok, tag + "translations are colour-preserving");
  }
  {
    bool ok = true;
    for (const GroupMap& phi : perm.maps)
      ok = ok && is_colour_preserving(X, phi) == preserves_every_edge_colour(X, phi);
    report.check(ok, tag + "colour-preserving test matches edge-wise colour equality",
                 std::to_string(perm.size()) + " maps");
  }
  {
    bool ok = std::all_of(pres.maps.begin(), pres.maps.end(), [&](const GroupMap& phi) {
      return phi(0) == 0 && is_colour_preserving(X, phi) && perm.contains(phi);
    });
    ok = ok && std::all_of(perm.maps.begin(), perm.maps.end(), [&](const GroupMap& phi) {
      return phi(0) == 0 && is_colour_permuting(X, phi).has_value() && is_graph_automorphism(X, phi);
    });
    report.check(ok, tag + "stabilizer members have the requested kind",
                 "|A0_1| = " + std::to_string(pres.size()) + ", |A_1| = " + std::to_string(perm.size()));
  }
  report.check(is_closed_under_composition(pres.maps) && is_closed_under_composition(perm.maps),
               tag + "stabilizers are closed under composition");
  {
    auto closed_under_inverse = [](const AutomorphismSet& set) {
      return std::all_of(set.maps.begin(), set.maps.end(),
                         [&](const GroupMap& phi) { return set.contains(phi.inverse()); });
    };
    report.check(closed_under_inverse(pres) && closed_under_inverse(perm), tag + "stabilizers are closed under inverse");
  }
  {
    bool ok = true;
    for (const GroupMap& phi : perm.maps)
      ok = ok && has_local_colour_permutation(X, phi);
    report.check(ok, tag + "colour-class reading agrees with the local-permutation reading");
  }

  // phi(g s^n) = phi(g) t^n with t = phi(g)^-1 phi(g s).
  {
    bool ok = true;
    for (const GroupMap& phi : perm.maps) {
      for (Element g = 0; g < n && ok; ++g) {
        for (Element s : X.connection_set()) {
          const Element t = G.mul(G.inv(phi(g)), phi(G.mul(g, s)));
          Element gs_n = g, phig_t_n = phi(g);
          for (std::size_t p = 0; p < G.element_order(s); ++p) {
            if (phi(gs_n) != phig_t_n) ok = false;
            gs_n = G.mul(gs_n, s);
            phig_t_n = G.mul(phig_t_n, t);
          }
        }
      }
    }
    report.check(ok, tag + "cycle lemma: phi(g s^n) = phi(g) t^n");
  }
  // phi(g s^n) in {phi(g) phi(s)^n, phi(g) phi(s)^-n} for phi(1) = 1.
  {
    bool ok = true;
    for (const GroupMap& phi : perm.maps) {
      for (Element g = 0; g < n && ok; ++g) {
        for (Element s : X.connection_set()) {
          const long long ord = static_cast<long long>(G.element_order(s));
          for (long long p = 0; p < ord; ++p) {
            const Element lhs = phi(G.mul(g, G.power(s, p)));
            const Element a = G.mul(phi(g), G.power(phi(s), p));
            const Element b = G.mul(phi(g), G.power(phi(s), -p));
            if (lhs != a && lhs != b) ok = false;
          }
        }
      }
    }
    report.check(ok, tag + "power lemma: phi(g s^n) in {phi(g) phi(s)^(+-n)}");
  }
  {
    bool ok = true;
    for (const GroupMap& phi : perm.maps)
      for (Element g = 0; g < n && ok; ++g)
        for (Element h : inv.subgroup)
          if (phi(G.mul(g, h)) != G.mul(phi(g), phi(h))) ok = false;
    report.check(ok, tag + "involution lemma: phi(g h) = phi(g) phi(h) for h in <S_2>",
                 "|<S_2>| = " + std::to_string(inv.subgroup.size()));
  }
  {
    bool ok = true;
    for (const GroupMap& phi : pres.maps)
      for (Element h : inv.subgroup) {
        if (phi(h) != h) ok = false;
        for (Element x = 0; x < n && ok; ++x)
          if (phi(G.mul(x, h)) != G.mul(phi(x), h)) ok = false;
      }
    report.check(ok, tag + "fixing lemma: colour-preserving phi(x h) = phi(x) h, phi(h) = h");
  }
  {
    bool ok = true;
    for (const GroupMap& phi : perm.maps) {
      const LocalPermutation at_one = local_permutation(X, phi, 0);
      bool all_equal = true;
      for (Element g = 1; g < n && all_equal; ++g) all_equal = local_permutation(X, phi, g) == at_one;
      if (all_equal != is_group_automorphism(G, phi)) ok = false;
    }
    report.check(ok, tag + "automorphism iff local permutations agree at every vertex");
  }
  {
    // Every (phi, g, s) triple on small stabilizers; on large ones every
    // (phi, s) pair with g rotating through G.
    const ElementSet& S = X.connection_set();
    const bool all_triples = perm.size() * n * S.size() <= (std::size_t{1} << 20);
    bool ok = true;
    std::size_t tried = 0;
    std::string failure;
    auto attempt = [&](const GroupMap& phi, Element g, Element s) {
      try {
        if (!pres.contains(make_colour_preserving_conjugate(X, phi, g, s))) {
          ok = false;
          failure = "result not in A0_1";
        }
      } catch (const std::exception& e) {
        ok = false;
        failure = e.what();
      }
      ++tried;
    };
    for (std::size_t p = 0; p < perm.size() && ok; ++p) {
      for (std::size_t t = 0; t < S.size() && ok; ++t) {
        if (all_triples) {
          for (Element g = 0; g < n && ok; ++g) attempt(perm.maps[p], g, S[t]);
        } else {
          attempt(perm.maps[p], static_cast<Element>((p + t) % n), S[t]);
        }
      }
    }
    report.check(ok, tag + "conjugate construction lands in A0_1 and fixes s",
                 failure.empty() ? std::to_string(tried) + " triples" : failure);
  }
  {
    bool strongly = std::all_of(perm.maps.begin(), perm.maps.end(),
                                [&](const GroupMap& phi) { return is_group_automorphism(G, phi); });
    const ElementSet star = star_set(X, pres);
    const bool star_generates = subgroup_generated(G, star).size() == n;
    const bool semiregular = acts_semiregularly_on_S(X, pres);
    bool ok = true;
    if (star_generates && !strongly) ok = false;
    if (semiregular && connected && !strongly) ok = false;
    if (pres.size() == 1 && !strongly) ok = false;
    report.check(ok, tag + "strongly-CCA sufficient conditions imply strongly CCA",
                 std::string("S* generates: ") + (star_generates ? "yes" : "no") +
                     ", semiregular: " + (semiregular ? "yes" : "no") + ", |A0_1| = " + std::to_string(pres.size()) +
                     ", strongly CCA: " + (strongly ? "yes" : "no"));
  }

  if (n <= options.oracle_max_order) {
    std::vector<Element> rest(n - 1);
    std::iota(rest.begin(), rest.end(), Element{1});
    std::vector<GroupMap> oracle_pres, oracle_perm;
    bool def_agree = true;
    do {
      std::vector<Element> image{0};
      image.insert(image.end(), rest.begin(), rest.end());
      GroupMap phi(std::move(image));
      const bool colour_perm = is_colour_permuting(X, phi).has_value();
      if (preserves_every_edge_colour(X, phi)) oracle_pres.push_back(phi);
      if (colour_perm) oracle_perm.push_back(phi);
      if (colour_perm != has_local_colour_permutation(X, phi)) def_agree = false;
    } while (std::next_permutation(rest.begin(), rest.end()));
    report.check(oracle_pres == pres.maps && oracle_perm == perm.maps,
                 tag + "backtracking agrees with a scan of all permutations fixing 1");
    report.check(def_agree, tag + "colour-class and local-permutation readings agree on every permutation");
  }
}

void check_group_properties(const std::shared_ptr<const FiniteGroup>& Gp, Report& report) {
  const FiniteGroup& G = *Gp;
  const std::size_t n = G.order();
  const std::string tag = G.name() + " ";

  if (n <= 16) {
    bool ok = true;
    std::size_t proper = 0;
    for (const ElementSet& H : all_subgroups(G)) {
      if (H.size() == n) continue;
      ++proper;
      if (subgroup_generated(G, set_complement(G, H)).size() != n) ok = false;
    }
    report.check(ok, tag + "complement of every proper subgroup generates G",
                 std::to_string(proper) + " proper subgroups");

    // is_affine against the (alpha, g) scan.
    const AutomorphismSet aut = enumerate_automorphisms(G, n);
    std::set<GroupMap> affine;
    for (const GroupMap& alpha : aut.maps)
      for (Element g = 0; g < n; ++g) affine.insert(compose(alpha, left_translation(G, g)));
    std::vector<GroupMap> probes(affine.begin(), affine.end());
    const CayleyGraph K = complete_cayley(Gp);
    for (const GroupMap& phi : enumerate_stabilizer(K, AutMode::ColourPreserving, n).maps)
      for (Element g = 0; g < n; ++g) probes.push_back(compose(left_translation(G, g), phi));
    std::mt19937_64 rng(n);
    for (int r = 0; r < 50; ++r) {
      std::vector<Element> image(n);
      std::iota(image.begin(), image.end(), Element{0});
      std::shuffle(image.begin(), image.end(), rng);
      probes.emplace_back(std::move(image));
    }
    bool agree = true;
    for (const GroupMap& phi : probes) {
      const auto w = is_affine(G, phi);
      if (w.has_value() != affine.contains(phi)) agree = false;
      if (w) {
        for (Element x = 0; x < n; ++x)
          if (w->alpha(G.mul(w->g, x)) != phi(x)) agree = false;
      }
    }
    report.check(agree, tag + "affineness test agrees with the Aut(G) x G scan",
                 std::to_string(probes.size()) + " maps, |Aut G| = " + std::to_string(aut.size()));
  }

  if (auto d = decompose_hamiltonian_2group(G)) {
    const ElementSet Q = subgroup_generated(G, std::vector<Element>{d->i, d->j});
    report.check(product_set(G, Q, d->B) == product_set(G, d->B, Q), tag + "HK = KH for the quaternion factor and B");
    bool hom = true;
    std::set<Element> images;
    for (Element q1 : Q)
      for (Element b1 : d->B) {
        images.insert(G.mul(q1, b1));
        for (Element q2 : Q)
          for (Element b2 : d->B)
            if (G.mul(G.mul(q1, b1), G.mul(q2, b2)) != G.mul(G.mul(q1, q2), G.mul(b1, b2))) hom = false;
      }
    report.check(hom && images.size() == n, tag + "(q, b) -> q b is an isomorphism from Q8 x B");
  }
}

void suite_lemmas(Report& report, const SuiteOptions& options) {
  std::mt19937_64 rng(options.seed);
  for (const auto& G : suite_groups(options)) {
    check_group_properties(G, report);
    const CayleyGraph K = complete_cayley(G);
    check_graph_lemmas(K, report, "K_" + G->name(), options);
    if (G->order() > options.random_graph_max_order) continue;
    const auto sets = random_connected_connection_sets(*G, options.random_graphs, rng);
    report.note(G->name() + ": " + std::to_string(sets.size()) + " random connected non-complete graphs");
    for (const ElementSet& S : sets) {
      const CayleyGraph X = build_cayley(G, S);
      check_graph_lemmas(X, report, "Cay(" + G->name() + ", " + format_set(*G, S) + ")", options);
    }
  }
}

void suite_classification(Report& report, const SuiteOptions& options) {
  for (const auto& Gp : suite_groups(options)) {
    const FiniteGroup& G = *Gp;
    const std::string tag = G.name() + " ";
    const CayleyGraph K = complete_cayley(Gp);
    const AutomorphismSet brute = enumerate_stabilizer(K, AutMode::ColourPreserving, G.order());
    const CompleteClassification predicted = predict_stabilizer(G, G.order());
    report.check(brute.maps == predicted.predicted_stabilizer.maps, tag + "brute-force A0_1(K_G) equals the prediction",
                 std::string(to_string(predicted.kind)) + ", brute " + std::to_string(brute.size()) + " vs predicted " +
                     std::to_string(predicted.predicted_stabilizer.size()));
    const std::size_t expected_size = predicted.kind == StabilizerKind::Hamiltonian2Group ? 8
                                      : predicted.kind == StabilizerKind::Trivial          ? 1
                                                                                           : 2;
    report.check(predicted.predicted_stabilizer.size() == expected_size, tag + "stabilizer size matches its kind");

    if (const auto* d = std::get_if<Ham2Decomposition>(&predicted.witness)) {
      bool parity = true;
      for (unsigned bits = 0; bits < 8; ++bits) {
        const QuaternionSubset I = QuaternionSubset::from_bits(bits);
        parity = parity && is_affine(G, phi_I(G, *d, I)).has_value() == (I.size() % 2 == 1);
      }
      report.check(parity, tag + "phi_I is affine iff |I| is odd");
      std::vector<Element> gens{d->k};
      gens.insert(gens.end(), d->B.begin(), d->B.end());
      const DicyclicWitness w{subgroup_generated(G, gens), G.mul(d->i, d->i), d->i};
      report.check(is_valid_dicyclic_witness(G, w) && dicyclic_flip(G, w) == phi_I(G, *d, QuaternionSubset{false, false, true}),
                   tag + "flip for Dic(<k, B>, i^2, i) equals phi_{k}");
    }
    if (predicted.kind == StabilizerKind::AbelianInversion || predicted.kind == StabilizerKind::DicyclicFlip) {
      bool ok = true;
      for (const GroupMap& phi : predicted.predicted_stabilizer.maps) {
        if (phi.is_identity()) continue;
        const ElementSet F = fixed_set(phi);
        ok = ok && F.size() < G.order() && is_subgroup(G, F);
      }
      report.check(ok, tag + "fixed set of the nontrivial stabilizer element is a proper subgroup");
    }

    const CcaStatus status = cca_status(K, {.check_normal = false, .max_order = G.order()});
    const CompleteVerdict verdict = complete_cca_verdict(G);
    report.check(status.cca == verdict.cca && status.strongly_cca == verdict.strongly_cca,
                 tag + "brute-force CCA / strongly CCA verdict matches the Q8 x B test",
                 std::string("cca=") + (status.cca ? "true" : "false") +
                     " strongly_cca=" + (status.strongly_cca ? "true" : "false"));
    if (!verdict.cca) {
      const GroupMap iota = iota_map(G);
      report.check(std::find(status.preserving_witnesses.begin(), status.preserving_witnesses.end(), iota) !=
                       status.preserving_witnesses.end(),
                   tag + "inversion is a non-affine colour-preserving witness");
    } else {
      report.check(subgroup_generated(G, star_set(K, brute)).size() == G.order(), tag + "S* generates G");
    }
  }
}

void suite_decomposition(Report& report, const SuiteOptions& options) {
  for (const auto& Gp : suite_groups(options)) {
    const FiniteGroup& G = *Gp;
    const std::string tag = G.name() + " ";
    const CayleyGraph K = complete_cayley(Gp);
    const AutomorphismSet perm = enumerate_stabilizer(K, AutMode::ColourPermuting, G.order());
    const bool full = G.order() <= options.full_group_max_order;
    const AutomorphismSet maps = full ? with_translations(K, perm) : perm;

    std::size_t good = 0;
    std::string failure;
    for (const GroupMap& phi : maps.maps) {
      try {
        if (verify_decomposition(K, decompose_colour_permuting(K, phi))) {
          ++good;
        } else if (failure.empty()) {
          failure = "verification failed for " + format_map(phi);
        }
      } catch (const ProofStepError& e) {
        if (failure.empty()) failure = std::string("proof step failed: ") + e.what() + " for " + format_map(phi);
      }
    }
    report.check(good == maps.size(), tag + "every colour-permuting automorphism factors as beta o psi",
                 failure.empty() ? std::to_string(good) + (full ? " maps (all translates)" : " stabilizer maps") : failure);

    if (full) {
      const AutomorphismSet aut = enumerate_automorphisms(G, G.order());
      const AutomorphismSet pres = with_translations(K, enumerate_stabilizer(K, AutMode::ColourPreserving, G.order()));
      std::vector<GroupMap> left, right;
      for (const GroupMap& a : aut.maps)
        for (const GroupMap& c : pres.maps) {
          left.push_back(compose(a, c));
          right.push_back(compose(c, a));
        }
      normalize(left);
      normalize(right);
      report.check(left == maps.maps && right == maps.maps, tag + "A(K_G) = Aut(G) A0(K_G) = A0(K_G) Aut(G)",
                   "|A(K_G)| = " + std::to_string(maps.size()));
    }

    const CcaStatus status = cca_status(K, {.check_normal = false, .max_order = G.order()});
    report.check(!status.cca || status.strongly_cca, tag + "CCA complete graph is strongly CCA");
  }
}

D12ScanResult suite_d12(Report& report) {
  auto G = std::make_shared<const FiniteGroup>(build_group("D12"));
  const auto classes = inverse_classes(*G);
  D12ScanResult result;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << classes.size()); ++mask) {
    std::vector<int> ids;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (mask >> c & 1U) ids.push_back(static_cast<int>(c));
    const ElementSet S = connection_set_from_classes(*G, ids);
    if (subgroup_generated(*G, S).size() != G->order()) continue;
    const CcaStatus status = cca_status(build_cayley(G, S), {.check_normal = false});
    ++result.graphs;
    if (status.cca) ++result.cca;
    if (status.strongly_cca) ++result.strongly_cca;
    if (!status.strongly_cca && !result.not_strongly_example) result.not_strongly_example = S;
  }
  report.check(result.cca == result.graphs, "D12 every connected Cayley graph is CCA",
               std::to_string(result.cca) + "/" + std::to_string(result.graphs));
  report.check(result.strongly_cca < result.graphs, "D12 some connected Cayley graph is not strongly CCA",
               std::to_string(result.graphs - result.strongly_cca) + " not strongly CCA" +
                   (result.not_strongly_example ? ", e.g. S = " + format_set(*G, *result.not_strongly_example) : ""));
  return result;
}

bool is_normal_cayley_graph(const CayleyGraph& X) {
  return search_stabilizer(X, AutMode::Graph,
                           [&](const GroupMap& phi) { return is_group_automorphism(X.group(), phi); });
}

std::vector<NormalSearchEntry> suite_normal_search(Report& report, const SuiteOptions& options) {
  std::vector<NormalSearchEntry> entries;
  for (const auto& Gp : suite_groups(options)) {
    const FiniteGroup& G = *Gp;
    NormalSearchEntry entry;
    entry.group = G.name();
    entry.exempt = is_z4_x_z2(G) || decompose_hamiltonian_2group(G).has_value();
    const auto classes = inverse_classes(G);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << classes.size()); ++mask) {
      std::vector<int> ids;
      for (std::size_t c = 0; c < classes.size(); ++c)
        if (mask >> c & 1U) ids.push_back(static_cast<int>(c));
      const ElementSet S = connection_set_from_classes(G, ids);
      if (subgroup_generated(G, S).size() != G.order()) continue;
      ++entry.connected_graphs_scanned;
      if (is_normal_cayley_graph(build_cayley(Gp, S))) {
        entry.normal_connection_set = S;
        break;
      }
    }
    const bool found = entry.normal_connection_set.has_value();
    report.check(found || entry.exempt, G.name() + " has a normal Cayley graph or is Z4 x Z2 / Q8 x B",
                 found ? "normal: S = " + format_set(G, *entry.normal_connection_set)
                       : "none among " + std::to_string(entry.connected_graphs_scanned) + " connected graphs");
    report.check(found != entry.exempt, G.name() + " normal graph exists exactly when G is not exempt");
    entries.push_back(std::move(entry));
  }
  return entries;
}

void run_suite(std::string_view name, Report& report, const SuiteOptions& options) {
  if (name == "lemmas") return suite_lemmas(report, options);
  if (name == "classif") return suite_classification(report, options);
  if (name == "decomposition") return suite_decomposition(report, options);
  if (name == "d12") {
    suite_d12(report);
    return;
  }
  if (name == "normal-search") {
    suite_normal_search(report, options);
    return;
  }
  throw PreconditionError("unknown suite \"" + std::string(name) + "\"");
}

}  // namespace cca
