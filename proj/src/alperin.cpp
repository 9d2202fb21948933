#include "fuskit/alperin.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace fuskit {

namespace {

constexpr std::size_t kBfsStateCap = 1000000;

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// One automorphism applied to a morphism's image table.
std::vector<int> step_images(const std::vector<int>& cur, const Subgroup& q,
                             const Perm& aut) {
  std::vector<int> next(cur.size());
  for (std::size_t i = 0; i < cur.size(); ++i) {
    int li = q.local_index(cur[i]);
    next[i] = q.elements()[aut[static_cast<std::size_t>(li)]];
  }
  return next;
}

bool image_inside(const std::vector<int>& images, const Subgroup& q) {
  for (int x : images)
    if (!q.contains(x)) return false;
  return true;
}

struct BfsResult {
  // image table -> (parent state, member index, automorphism index); the
  // start state maps to (-1,-1,-1)
  std::unordered_map<std::vector<int>, std::tuple<int, int, int>, VecHash> parent;
  std::vector<std::vector<int>> states;  // in discovery order
};

// Breadth-first search over morphisms from p reachable by restricted family
// automorphisms. Stops early when `target` is reached (if nonnull). When
// `normalized_only` is set, only states whose image subgroup is fully
// F-normalized are entered.
BfsResult morphism_bfs(const FusionSystem& f, const ConjugationFamily& c,
                       const Subgroup& p, const std::vector<int>* target,
                       const std::vector<AutFGroup>& auts,
                       bool normalized_only = false) {
  BfsResult res;
  std::map<std::vector<int>, bool> norm_cache;
  auto image_ok = [&](const std::vector<int>& images) {
    if (!normalized_only) return true;
    std::vector<int> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    auto it = norm_cache.find(sorted);
    if (it != norm_cache.end()) return it->second;
    bool ok = f.is_fully_normalized(Subgroup(f.ambient(), sorted));
    norm_cache.emplace(std::move(sorted), ok);
    return ok;
  };

  std::vector<int> start = p.elements();
  res.parent.emplace(start, std::make_tuple(-1, -1, -1));
  res.states.push_back(start);
  if (target && start == *target) return res;

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int sid = queue.front();
    queue.pop_front();
    const std::vector<int> cur = res.states[static_cast<std::size_t>(sid)];
    for (std::size_t qi = 0; qi < c.members.size(); ++qi) {
      const Subgroup& q = c.members[qi];
      if (!image_inside(cur, q)) continue;
      const auto& aut = auts[qi];
      for (int ai = 0; ai < aut.group->order(); ++ai) {
        std::vector<int> next = step_images(cur, q, aut.group->element(ai));
        if (res.parent.count(next)) continue;
        if (!image_ok(next)) continue;
        if (res.states.size() >= kBfsStateCap)
          throw SizeLimitError("morphism search exceeded the state cap");
        res.parent.emplace(next, std::make_tuple(sid, static_cast<int>(qi), ai));
        res.states.push_back(next);
        if (target && next == *target) return res;
        queue.push_back(static_cast<int>(res.states.size()) - 1);
      }
    }
  }
  return res;
}

std::vector<AutFGroup> family_automorphisms(const FusionSystem& f,
                                            const ConjugationFamily& c) {
  std::vector<AutFGroup> auts;
  auts.reserve(c.members.size());
  for (const auto& q : c.members) auts.push_back(f.aut_f(q));
  return auts;
}

Decomposition build_decomposition(const FusionSystem& f, const Subgroup& source,
                                  std::vector<DecompositionStep> steps) {
  Decomposition d;
  d.source = source;
  d.intermediates.push_back(source);
  d.profile.push_back(f.centralizer_in_s(source.elements()).order());
  std::vector<int> cur = source.elements();
  for (const auto& step : steps) {
    for (int& x : cur) x = step.alpha.apply(x);
    std::vector<int> sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    Subgroup img(f.ambient(), std::move(sorted));
    d.profile.push_back(f.centralizer_in_s(img.elements()).order());
    d.intermediates.push_back(std::move(img));
  }
  d.steps = std::move(steps);
  return d;
}

}  // namespace

Injection Decomposition::composed() const {
  Injection cur = Injection::identity(source);
  for (const auto& step : steps) {
    std::vector<int> next(cur.images().size());
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = step.alpha.apply(cur.images()[i]);
    int witness = cur.has_witness() && step.alpha.has_witness()
                      ? source.parent()->mul(cur.witness(), step.alpha.witness())
                      : -1;
    cur = Injection(source, std::move(next), witness);
  }
  return cur;
}

ConjugationFamily essential_family(const FusionSystem& f, bool certify) {
  ConjugationFamily c;
  for (const auto& cls : f.subgroup_classes()) {
    if (cls.front().order() == f.sylow().order()) continue;
    if (f.is_essential(cls.front()))
      c.members.insert(c.members.end(), cls.begin(), cls.end());
  }
  c.members.push_back(f.sylow());
  std::sort(c.members.begin(), c.members.end());
  if (certify) certify_family(f, c);
  return c;
}

ConjugationFamily centric_radical_family(const FusionSystem& f,
                                         bool fully_normalized_filter,
                                         bool certify) {
  ConjugationFamily c;
  for (const auto& cls : f.subgroup_classes()) {
    const Subgroup& rep = cls.front();
    if (!f.is_centric(rep) || !f.is_radical(rep)) continue;
    for (const auto& q : cls) {
      if (fully_normalized_filter && !f.is_fully_normalized(q)) continue;
      c.members.push_back(q);
    }
  }
  if (std::find(c.members.begin(), c.members.end(), f.sylow()) == c.members.end())
    c.members.push_back(f.sylow());
  std::sort(c.members.begin(), c.members.end());
  if (certify) certify_family(f, c);
  return c;
}

void certify_family(const FusionSystem& f, const ConjugationFamily& c) {
  auto auts = family_automorphisms(f, c);
  for (const auto& cls : f.subgroup_classes()) {
    const Subgroup& p = cls.front();
    BfsResult reach = morphism_bfs(f, c, p, nullptr, auts);
    for (const auto& phi : f.hom_f(p, f.sylow()))
      if (!reach.parent.count(phi.images()))
        throw std::logic_error(
            "conjugation family fails to generate a morphism on a subgroup of order " +
            std::to_string(p.order()));
  }
}

Decomposition decompose(const FusionSystem& f, const ConjugationFamily& c,
                        const Injection& phi) {
  const Subgroup& p = phi.domain();
  auto auts = family_automorphisms(f, c);
  const std::vector<int>& target = phi.images();
  BfsResult reach = morphism_bfs(f, c, p, &target, auts);

  auto it = reach.parent.find(target);
  if (it == reach.parent.end())
    throw std::logic_error("conjugation family does not generate the morphism");

  std::vector<DecompositionStep> steps;
  std::vector<int> cur = target;
  while (true) {
    auto [sid, qi, ai] = reach.parent.at(cur);
    if (sid < 0) break;
    steps.push_back({c.members[static_cast<std::size_t>(qi)],
                     auts[static_cast<std::size_t>(qi)].injection_of(ai)});
    cur = reach.states[static_cast<std::size_t>(sid)];
  }
  std::reverse(steps.begin(), steps.end());
  return build_decomposition(f, p, std::move(steps));
}

Decomposition up_decompose(const FusionSystem& f, const ConjugationFamily& c,
                           const Injection& phi) {
  const Subgroup& p = phi.domain();
  Subgroup p_image = phi.image();
  if (!f.is_fully_centralized(p_image))
    throw PreconditionError("up decomposition requires a fully centralized image");

  if (phi.is_identity_map()) return build_decomposition(f, p, {});

  // extend phi to P C_S(P) -> P' C_S(P')
  const auto& g = *f.ambient();
  Subgroup pc = p.join(f.centralizer_in_s(p.elements()));
  Subgroup pc_target = p_image.join(f.centralizer_in_s(p_image.elements()));
  int ext_witness = -1;
  for (int w = 0; w < g.order(); ++w) {
    bool agrees = true;
    for (std::size_t i = 0; i < p.elements().size(); ++i)
      if (g.conj(p.elements()[i], w) != phi.images()[i]) {
        agrees = false;
        break;
      }
    if (!agrees) continue;
    if (pc.conjugate(w).subset_of(pc_target)) {
      ext_witness = w;
      break;
    }
  }
  if (ext_witness < 0)
    throw std::logic_error(
        "no extension of the morphism to P C_S(P); realized saturation violated");

  Injection extended = Injection::from_witness(pc, ext_witness);
  Decomposition chain = decompose(f, c, extended);

  // retrace the chain on P itself
  Decomposition on_p = build_decomposition(f, p, chain.steps);

  // least index with strict centralizer growth
  std::size_t l = 0;
  for (std::size_t i = 1; i < on_p.profile.size(); ++i)
    if (on_p.profile[i - 1] < on_p.profile[i]) {
      l = i;
      break;
    }
  if (l == 0) {
    // flat chain, already an up decomposition
    for (std::size_t i = 1; i < on_p.profile.size(); ++i)
      if (on_p.profile[i - 1] > on_p.profile[i])
        throw std::logic_error("flat-profile invariant violated in up decomposition");
    return on_p;
  }

  std::vector<DecompositionStep> prefix(on_p.steps.begin(),
                                        on_p.steps.begin() + static_cast<long>(l));
  Decomposition head = build_decomposition(f, p, prefix);
  Injection head_map = head.composed();
  Injection rest = head_map.inverted().then(phi);  // P_l -> P'
  Decomposition tail = up_decompose(f, c, rest);

  std::vector<DecompositionStep> all = head.steps;
  all.insert(all.end(), tail.steps.begin(), tail.steps.end());
  Decomposition out = build_decomposition(f, p, std::move(all));
  for (std::size_t i = 1; i < out.profile.size(); ++i)
    if (out.profile[i - 1] > out.profile[i])
      throw std::logic_error("up decomposition produced a decreasing profile");
  return out;
}

std::pair<Decomposition, int> updown_decompose(const FusionSystem& f,
                                               const ConjugationFamily& c,
                                               const Injection& phi) {
  const Subgroup& p = phi.domain();
  Subgroup p_image = phi.image();

  Injection psi;
  if (f.is_fully_centralized(p_image)) {
    psi = Injection::identity(p_image);
  } else {
    std::vector<Subgroup> targets;
    for (const auto& q : f.f_conjugates_subgroup(p_image))
      if (f.is_fully_centralized(q)) targets.push_back(q);
    if (targets.empty())
      throw std::logic_error("conjugacy class with no fully centralized member");
    std::sort(targets.begin(), targets.end());
    auto isos = f.hom_f(p_image, targets.front());
    psi = isos.front();  // least image table
  }

  Decomposition up_main = up_decompose(f, c, phi.then(psi));
  Decomposition up_back = up_decompose(f, c, psi);

  std::vector<DecompositionStep> steps = up_main.steps;
  for (auto it = up_back.steps.rbegin(); it != up_back.steps.rend(); ++it)
    steps.push_back({it->member, it->alpha.inverted()});

  int peak = static_cast<int>(up_main.steps.size());
  Decomposition out = build_decomposition(f, p, std::move(steps));
  return {std::move(out), peak};
}

NormalizerRemarkReport normalizer_counterexample(const FusionSystem& f) {
  const auto& g = f.ambient();
  const auto& s = f.sylow();
  if (g->degree() != 8 || g->order() != 576 || f.prime() != 2)
    throw PreconditionError(
        "normalizer counterexample requires the sym(4) x sym(4) fixture at p = 2");

  auto factor = [&](bool first) {
    std::vector<int> v;
    for (int i = 0; i < g->order(); ++i) {
      const Perm& e = g->element(i);
      bool fixes = true;
      for (std::size_t pt = first ? 4 : 0; pt < (first ? 8u : 4u); ++pt)
        if (e[pt] != pt) fixes = false;
      if (fixes) v.push_back(i);
    }
    return Subgroup(g, std::move(v));
  };
  Subgroup h1_factor = factor(true), h2_factor = factor(false);
  if (h1_factor.order() != 24 || h2_factor.order() != 24)
    throw PreconditionError("ambient group does not split as sym(4) x sym(4)");

  NormalizerRemarkReport rep;

  // V = O_2(G): core of S
  Subgroup core = s;
  for (int x = 0; x < g->order(); ++x) core = core.intersect(s.conjugate(x));
  rep.v = core;

  ConjugationFamily fam = essential_family(f);
  std::vector<Subgroup> essentials;
  for (const auto& q : fam.members)
    if (q.order() != s.order()) essentials.push_back(q);
  if (essentials.size() != 2)
    throw PreconditionError("expected exactly two essential subgroups");
  Subgroup s1 = s.intersect(h1_factor);
  Subgroup vs1 = s1.subset_of(essentials[0]) ? essentials[0] : essentials[1];
  Subgroup vs2 = s1.subset_of(essentials[0]) ? essentials[1] : essentials[0];

  auto least_order3_normalizing = [&](const Subgroup& factor_sub, const Subgroup& ess) {
    for (int x : factor_sub.elements())
      if (g->element_order(x) == 3 && ess.conjugate(x) == ess) return x;
    throw PreconditionError("no order-3 element normalizing the essential subgroup");
  };
  rep.h1 = least_order3_normalizing(h1_factor, vs2);
  rep.h2 = least_order3_normalizing(h2_factor, vs1);
  rep.h = g->mul(rep.h1, rep.h2);

  // the four subgroup of V normalized by h with N_S(P) of index 2
  std::vector<Subgroup> candidates;
  for (const auto& q : all_subgroups(rep.v)) {
    if (q.order() != 4) continue;
    bool four_group = true;
    for (int x : q.elements())
      if (x != 0 && g->element_order(x) != 2) four_group = false;
    if (!four_group) continue;
    if (!(q.conjugate(rep.h) == q)) continue;
    if (normalizer(s, q).order() * 2 != s.order()) continue;
    candidates.push_back(q);
  }
  if (candidates.empty())
    throw PreconditionError("no four subgroup matching the construction");
  std::sort(candidates.begin(), candidates.end());
  rep.p = candidates.front();

  rep.p_class_size = static_cast<int>(f.f_conjugates_subgroup(rep.p).size());
  rep.ns_p_index = s.order() / normalizer(s, rep.p).order();
  rep.p_fully_normalized = f.is_fully_normalized(rep.p);
  rep.ph1_fully_normalized = f.is_fully_normalized(rep.p.conjugate(rep.h1));

  // orbit of P under conjugation by h1 and h2 (the automorphisms of the two
  // essential subgroups featured in the decomposition of c_h)
  {
    std::set<Subgroup> orbit{rep.p};
    std::deque<Subgroup> queue{rep.p};
    while (!queue.empty()) {
      Subgroup q = queue.front();
      queue.pop_front();
      for (int x : {rep.h1, rep.h2}) {
        Subgroup img = q.conjugate(x);
        if (orbit.insert(img).second) queue.push_back(img);
      }
    }
    rep.h_orbit.assign(orbit.begin(), orbit.end());
  }
  rep.orbit_others_have_normalizer_v = true;
  for (const auto& r : rep.h_orbit)
    if (!(r == rep.p) && !(normalizer(s, r) == rep.v))
      rep.orbit_others_have_normalizer_v = false;

  Injection c_h = Injection::from_witness(rep.p, rep.h);
  if (!(c_h.image() == rep.p))
    throw PreconditionError("h does not normalize the chosen subgroup");
  rep.essential_decomposition = decompose(f, fam, c_h);

  // every decomposition must pass through a non-fully-normalized intermediate:
  // restrict the search to fully normalized images and check unreachability
  auto auts = family_automorphisms(f, fam);
  BfsResult restricted = morphism_bfs(f, fam, rep.p, nullptr, auts,
                                      /*normalized_only=*/true);
  rep.all_chains_hit_non_fully_normalized = !restricted.parent.count(c_h.images());
  return rep;
}

}  // namespace fuskit
