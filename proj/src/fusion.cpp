#include "fuskit/fusion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace fuskit {

// ---- Injection ----------------------------------------------------------------

Injection::Injection(Subgroup domain, std::vector<int> images, int witness)
    : domain_(std::move(domain)), images_(std::move(images)), witness_(witness) {
  const auto& g = *domain_.parent();
  if (images_.size() != domain_.elements().size())
    throw PreconditionError("image table size mismatch");
  std::set<int> distinct(images_.begin(), images_.end());
  if (distinct.size() != images_.size())
    throw PreconditionError("image table is not injective");
  // homomorphism check
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = 0; j < images_.size(); ++j) {
      int xy = g.mul(domain_.elements()[i], domain_.elements()[j]);
      int li = domain_.local_index(xy);
      if (li < 0 || g.mul(images_[i], images_[j]) != images_[static_cast<std::size_t>(li)])
        throw PreconditionError("image table is not a homomorphism");
    }
  if (witness_ >= 0) {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (g.conj(domain_.elements()[i], witness_) != images_[i])
        throw PreconditionError("witness does not realize the map");
  }
}

Injection Injection::identity(const Subgroup& domain) {
  Injection m;
  m.domain_ = domain;
  m.images_ = domain.elements();
  m.witness_ = 0;
  return m;
}

Injection Injection::from_witness(const Subgroup& domain, int g) {
  const auto& grp = *domain.parent();
  Injection m;
  m.domain_ = domain;
  m.images_.reserve(domain.elements().size());
  for (int x : domain.elements()) m.images_.push_back(grp.conj(x, g));
  m.witness_ = g;
  return m;
}

int Injection::apply(int elem_index) const {
  int li = domain_.local_index(elem_index);
  if (li < 0) throw MembershipError("element outside morphism domain");
  return images_[static_cast<std::size_t>(li)];
}

Subgroup Injection::image() const {
  std::vector<int> v = images_;
  std::sort(v.begin(), v.end());
  Subgroup h(domain_.parent(), std::move(v));
  return h;
}

Injection Injection::restricted_to(const Subgroup& sub) const {
  if (!sub.subset_of(domain_))
    throw PreconditionError("restriction target is not inside the domain");
  Injection m;
  m.domain_ = sub;
  m.images_.reserve(sub.elements().size());
  for (int x : sub.elements()) m.images_.push_back(apply(x));
  m.witness_ = witness_;
  return m;
}

Injection Injection::then(const Injection& next) const {
  Injection m;
  m.domain_ = domain_;
  m.images_.reserve(images_.size());
  for (int y : images_) m.images_.push_back(next.apply(y));
  m.witness_ = (witness_ >= 0 && next.witness_ >= 0)
                   ? domain_.parent()->mul(witness_, next.witness_)
                   : -1;
  return m;
}

Injection Injection::inverted() const {
  Subgroup img = image();
  Injection m;
  m.domain_ = img;
  m.images_.resize(img.elements().size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    int li = img.local_index(images_[i]);
    m.images_[static_cast<std::size_t>(li)] = domain_.elements()[i];
  }
  m.witness_ = witness_ >= 0 ? domain_.parent()->inv(witness_) : -1;
  return m;
}

bool Injection::is_identity_map() const {
  return images_ == domain_.elements();
}

// ---- AutFGroup ------------------------------------------------------------------

Injection AutFGroup::injection_of(int aut_index) const {
  const Perm& a = group->element(aut_index);
  std::vector<int> images(base.elements().size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = base.elements()[a[i]];
  return Injection(base, std::move(images), witnesses[static_cast<std::size_t>(aut_index)]);
}

// ---- FusionSystem ----------------------------------------------------------------

FusionSystem::FusionSystem(GroupPtr ambient, int prime)
    : FusionSystem(ambient, sylow_subgroup(ambient, prime), prime) {}

FusionSystem::FusionSystem(GroupPtr ambient, Subgroup sylow, int prime)
    : g_(std::move(ambient)), s_(std::move(sylow)), p_(prime) {
  long so = s_.order();
  while (so % p_ == 0) so /= p_;
  if (so != 1) throw PreconditionError("S is not a p-group");
  if ((g_->order() / s_.order()) % p_ == 0)
    throw PreconditionError("S is not a Sylow p-subgroup: index divisible by p");
}

std::vector<Injection> FusionSystem::hom_f(const Subgroup& p, const Subgroup& q) const {
  std::map<std::vector<int>, int> seen;  // image table -> least witness
  for (int g = 0; g < g_->order(); ++g) {
    std::vector<int> images;
    images.reserve(p.elements().size());
    bool inside = true;
    for (int x : p.elements()) {
      int y = g_->conj(x, g);
      if (!q.contains(y)) {
        inside = false;
        break;
      }
      images.push_back(y);
    }
    if (inside) seen.emplace(std::move(images), g);
  }
  std::vector<Injection> out;
  out.reserve(seen.size());
  for (const auto& [images, witness] : seen)
    out.push_back(Injection::from_witness(p, witness));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FusionSystem::f_conjugates_element(int u) const {
  if (!s_.contains(u)) throw MembershipError("element not in S");
  std::vector<int> out;
  for (int v : g_->conjugacy_class(u))
    if (s_.contains(v)) out.push_back(v);
  return out;
}

std::vector<Subgroup> FusionSystem::f_conjugates_subgroup(const Subgroup& p) const {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  for (int g = 0; g < g_->order(); ++g) {
    Subgroup c = p.conjugate(g);
    if (!c.subset_of(s_)) continue;
    if (seen.insert(c.elements()).second) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup FusionSystem::centralizer_in_s(const std::vector<int>& elems) const {
  return centralizer(s_, elems);
}

Subgroup FusionSystem::normalizer_in_s(const Subgroup& p) const {
  return normalizer(s_, p);
}

bool FusionSystem::is_fully_centralized(const Subgroup& p) const {
  int mine = centralizer_in_s(p.elements()).order();
  for (const auto& q : f_conjugates_subgroup(p))
    if (centralizer_in_s(q.elements()).order() > mine) return false;
  return true;
}

bool FusionSystem::is_fully_normalized(const Subgroup& p) const {
  int mine = normalizer_in_s(p).order();
  for (const auto& q : f_conjugates_subgroup(p))
    if (normalizer_in_s(q).order() > mine) return false;
  return true;
}

bool FusionSystem::is_extremal(int t) const {
  if (!s_.contains(t)) throw MembershipError("element not in S");
  long cs = centralizer_in_s({t}).order();
  long cg = centralizer(g_, {t}).order();
  long p_part = 1;
  while (cg % p_ == 0) {
    cg /= p_;
    p_part *= p_;
  }
  return cs == p_part;
}

Subgroup FusionSystem::focal_subgroup() const {
  std::vector<int> gens;
  for (int x : s_.elements())
    for (int y : g_->conjugacy_class(x))
      if (s_.contains(y)) gens.push_back(g_->mul(g_->inv(x), y));
  return Subgroup::generated(g_, gens);
}

Subgroup FusionSystem::hyperfocal_subgroup() const {
  return s_.intersect(p_residual(g_, p_));
}

bool FusionSystem::is_op_closed() const {
  return hyperfocal_subgroup().order() == s_.order();
}

AutFGroup FusionSystem::aut_f(const Subgroup& p) const {
  Subgroup ngp = normalizer(g_, p);
  const int np = p.order();
  std::map<Perm, int, std::less<Perm>> seen;  // action on P -> least witness
  for (int g : ngp.elements()) {
    std::vector<int> img(static_cast<std::size_t>(np));
    for (int i = 0; i < np; ++i)
      img[static_cast<std::size_t>(i)] =
          p.local_index(g_->conj(p.elements()[static_cast<std::size_t>(i)], g));
    seen.emplace(Perm::from_images(img), g);
  }
  std::vector<Perm> perms;
  perms.reserve(seen.size());
  for (const auto& [perm, w] : seen) perms.push_back(perm);
  AutFGroup out;
  out.base = p;
  out.group = Group::from_generators("aut_f", static_cast<std::size_t>(np), perms);
  out.witnesses.resize(seen.size());
  for (const auto& [perm, w] : seen)
    out.witnesses[static_cast<std::size_t>(out.group->index_of(perm))] = w;
  for (int x : p.elements()) {
    std::vector<int> img(static_cast<std::size_t>(np));
    for (int i = 0; i < np; ++i)
      img[static_cast<std::size_t>(i)] =
          p.local_index(g_->conj(p.elements()[static_cast<std::size_t>(i)], x));
    out.inner.push_back(out.group->index_of(Perm::from_images(img)));
  }
  std::sort(out.inner.begin(), out.inner.end());
  out.inner.erase(std::unique(out.inner.begin(), out.inner.end()), out.inner.end());
  return out;
}

bool FusionSystem::is_centric(const Subgroup& p) const {
  for (const auto& q : f_conjugates_subgroup(p))
    if (!centralizer_in_s(q.elements()).subset_of(q)) return false;
  return true;
}

bool FusionSystem::is_radical(const Subgroup& p) const {
  AutFGroup aut = aut_f(p);
  QuotientGroup out = quotient_group(aut.group, Subgroup(aut.group, aut.inner));
  // O_p(Out) as the intersection of all conjugates of one Sylow p-subgroup.
  Subgroup syl = sylow_subgroup(out.group, p_);
  Subgroup core = syl;
  for (int g = 0; g < out.group->order(); ++g) core = core.intersect(syl.conjugate(g));
  return core.order() == 1;
}

bool FusionSystem::is_essential(const Subgroup& p) const {
  if (p.order() == s_.order())
    throw PreconditionError("essential test requires P != S");
  if (!is_centric(p)) return false;
  AutFGroup aut = aut_f(p);
  QuotientGroup out = quotient_group(aut.group, Subgroup(aut.group, aut.inner));
  if (out.group->order() % p_ != 0) return false;
  return has_strongly_p_embedded(out.group, p_);
}

const std::vector<Subgroup>& FusionSystem::subgroups_of_s() const {
  if (lattice_.empty()) lattice_ = all_subgroups(s_);
  return lattice_;
}

const std::vector<std::vector<Subgroup>>& FusionSystem::subgroup_classes() const {
  if (classes_.empty()) classes_ = subgroup_conjugacy_classes(s_, subgroups_of_s());
  return classes_;
}

// ---- quotient / strongly p-embedded -----------------------------------------------

QuotientGroup quotient_group(const GroupPtr& a, const Subgroup& n) {
  if (!n.is_normal_in(Subgroup::full(a)))
    throw PreconditionError("quotient by a non-normal subgroup");
  // right cosets Ng, canonical representative = least member
  std::vector<int> coset_of(static_cast<std::size_t>(a->order()), -1);
  std::vector<int> reps;
  for (int x = 0; x < a->order(); ++x) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    int cid = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int t : n.elements()) coset_of[static_cast<std::size_t>(a->mul(t, x))] = cid;
  }
  const int nc = static_cast<int>(reps.size());
  auto action = [&](int g) {
    std::vector<int> img(static_cast<std::size_t>(nc));
    for (int c = 0; c < nc; ++c)
      img[static_cast<std::size_t>(c)] = coset_of[static_cast<std::size_t>(a->mul(reps[static_cast<std::size_t>(c)], g))];
    return Perm::from_images(img);
  };
  std::vector<Perm> gens;
  for (int g : a->generator_indices()) gens.push_back(action(g));
  QuotientGroup out;
  out.group = Group::from_generators(a->name() + "/N", static_cast<std::size_t>(nc), gens);
  out.image_of.resize(static_cast<std::size_t>(a->order()));
  for (int g = 0; g < a->order(); ++g)
    out.image_of[static_cast<std::size_t>(g)] = out.group->index_of(action(g));
  return out;
}

bool has_strongly_p_embedded(const GroupPtr& x, int p) {
  if (x->order() % p != 0) return false;
  Subgroup whole = Subgroup::full(x);
  for (const auto& h : all_subgroups(whole)) {
    if (h.order() == x->order() || h.order() % p != 0) continue;
    bool ok = true;
    for (int g = 0; g < x->order() && ok; ++g) {
      if (h.contains(g)) continue;
      if (h.intersect(h.conjugate(g)).order() % p == 0) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace fuskit
