#include "fuskit/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace fuskit {

// ---- Group -----------------------------------------------------------------

GroupPtr Group::from_generators(std::string name, std::size_t degree,
                                std::vector<Perm> generators,
                                std::size_t size_bound) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw PreconditionError("generator degree mismatch in group '" + name + "'");

  auto grp = std::shared_ptr<Group>(new Group());
  grp->name_ = std::move(name);
  grp->degree_ = degree;
  grp->gens_ = generators;

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> frontier;
  Perm id(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Perm x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Perm y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > size_bound)
          throw SizeLimitError("group closure exceeds size bound of " +
                               std::to_string(size_bound));
        frontier.push_back(std::move(y));
      }
    }
  }

  grp->elems_.assign(seen.begin(), seen.end());
  std::sort(grp->elems_.begin(), grp->elems_.end());
  grp->build_tables();
  return grp;
}

void Group::build_tables() {
  const int n = order();
  index_.reserve(static_cast<std::size_t>(n) * 2);
  for (int i = 0; i < n; ++i) index_[elems_[static_cast<std::size_t>(i)]] = i;

  if (n <= kTableBound) {
    mul_table_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        mul_table_[static_cast<std::size_t>(a) * n + b] =
            index_.at(elems_[static_cast<std::size_t>(a)] * elems_[static_cast<std::size_t>(b)]);
  }

  inv_.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) inv_[static_cast<std::size_t>(a)] = index_.at(elems_[static_cast<std::size_t>(a)].inverse());

  order_.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    order_[static_cast<std::size_t>(a)] = k;
  }

  class_of_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    if (class_of_[static_cast<std::size_t>(a)] >= 0) continue;
    int cid = static_cast<int>(classes_.size());
    std::vector<int> cls;
    std::deque<int> work{a};
    class_of_[static_cast<std::size_t>(a)] = cid;
    while (!work.empty()) {
      int x = work.front();
      work.pop_front();
      cls.push_back(x);
      for (const auto& g : gens_) {
        int gi = index_.at(g);
        int y = conj(x, gi);
        if (class_of_[static_cast<std::size_t>(y)] < 0) {
          class_of_[static_cast<std::size_t>(y)] = cid;
          work.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

std::vector<int> Group::generator_indices() const {
  std::vector<int> v;
  v.reserve(gens_.size());
  for (const auto& g : gens_) v.push_back(index_.at(g));
  return v;
}

int Group::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int Group::mul(int a, int b) const {
  if (!mul_table_.empty())
    return mul_table_[static_cast<std::size_t>(a) * order() + b];
  return index_.at(elems_[static_cast<std::size_t>(a)] * elems_[static_cast<std::size_t>(b)]);
}

int Group::inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

int Group::conj(int x, int g) const { return mul(mul(inv(g), x), g); }

int Group::power(int x, long n) const {
  int ord = order_[static_cast<std::size_t>(x)];
  long m = n % ord;
  if (m < 0) m += ord;
  int r = 0;
  for (long i = 0; i < m; ++i) r = mul(r, x);
  return r;
}

int Group::element_order(int x) const { return order_[static_cast<std::size_t>(x)]; }

const std::vector<int>& Group::conjugacy_class(int x) const {
  return classes_[static_cast<std::size_t>(class_of_[static_cast<std::size_t>(x)])];
}

int element_order(const Group& g, const Perm& p) {
  int i = g.index_of(p);
  if (i < 0) throw MembershipError("element not in group '" + g.name() + "'");
  return g.element_order(i);
}

// ---- Subgroup ---------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<int> sorted_elems)
    : parent_(std::move(parent)), elems_(std::move(sorted_elems)) {
  if (elems_.empty() || elems_[0] != 0)
    throw PreconditionError("subgroup must contain the identity");
  for (int a : elems_)
    for (int b : elems_)
      if (!contains(parent_->mul(a, b)))
        throw PreconditionError("element set is not closed under product");
  if (parent_->order() % order() != 0)
    throw PreconditionError("subgroup order does not divide group order");
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::full(GroupPtr parent) {
  std::vector<int> all(static_cast<std::size_t>(parent->order()));
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::generated(GroupPtr parent, const std::vector<int>& gen_indices) {
  std::unordered_set<int> seen{0};
  std::deque<int> work{0};
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    for (int g : gen_indices) {
      int y = parent->mul(x, g);
      if (seen.insert(y).second) work.push_back(y);
      int z = parent->mul(x, parent->inv(g));
      if (seen.insert(z).second) work.push_back(z);
    }
  }
  std::vector<int> v(seen.begin(), seen.end());
  std::sort(v.begin(), v.end());
  Subgroup h;
  h.parent_ = std::move(parent);
  h.elems_ = std::move(v);
  return h;
}

bool Subgroup::contains(int elem_index) const {
  return std::binary_search(elems_.begin(), elems_.end(), elem_index);
}

int Subgroup::local_index(int elem_index) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), elem_index);
  if (it == elems_.end() || *it != elem_index) return -1;
  return static_cast<int>(it - elems_.begin());
}

Subgroup Subgroup::conjugate(int g) const {
  std::vector<int> v;
  v.reserve(elems_.size());
  for (int x : elems_) v.push_back(parent_->conj(x, g));
  std::sort(v.begin(), v.end());
  Subgroup h;
  h.parent_ = parent_;
  h.elems_ = std::move(v);
  return h;
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  std::vector<int> v;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(v));
  Subgroup h;
  h.parent_ = parent_;
  h.elems_ = std::move(v);
  return h;
}

Subgroup Subgroup::join(const Subgroup& other) const {
  std::vector<int> gens = elems_;
  gens.insert(gens.end(), other.elems_.begin(), other.elems_.end());
  return generated(parent_, gens);
}

bool Subgroup::subset_of(const Subgroup& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(),
                       elems_.end());
}

bool Subgroup::is_normal_in(const Subgroup& ambient) const {
  for (int g : ambient.elems_)
    for (int x : elems_)
      if (!contains(parent_->conj(x, g))) return false;
  return true;
}

bool Subgroup::is_abelian() const {
  for (int a : elems_)
    for (int b : elems_)
      if (parent_->mul(a, b) != parent_->mul(b, a)) return false;
  return true;
}

Subgroup Subgroup::derived() const {
  std::vector<int> comms;
  for (int a : elems_)
    for (int b : elems_) {
      int c = parent_->mul(parent_->mul(parent_->inv(a), parent_->inv(b)),
                           parent_->mul(a, b));
      comms.push_back(c);
    }
  return generated(parent_, comms);
}

Subgroup Subgroup::center() const {
  std::vector<int> v;
  for (int a : elems_) {
    bool central = true;
    for (int b : elems_)
      if (parent_->mul(a, b) != parent_->mul(b, a)) {
        central = false;
        break;
      }
    if (central) v.push_back(a);
  }
  Subgroup h;
  h.parent_ = parent_;
  h.elems_ = std::move(v);
  return h;
}

std::vector<int> Subgroup::small_generating_set() const {
  std::vector<int> gens;
  Subgroup cur = trivial(parent_);
  for (int x : elems_) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = generated(parent_, gens);
    if (cur.order() == order()) break;
  }
  return gens;
}

// ---- operations --------------------------------------------------------------

Subgroup centralizer(const Subgroup& ambient, const std::vector<int>& elems) {
  const auto& g = *ambient.parent();
  std::vector<int> v;
  for (int a : ambient.elements()) {
    bool ok = true;
    for (int x : elems)
      if (g.mul(a, x) != g.mul(x, a)) {
        ok = false;
        break;
      }
    if (ok) v.push_back(a);
  }
  return Subgroup(ambient.parent(), std::move(v));
}

Subgroup centralizer(const GroupPtr& g, const std::vector<int>& elems) {
  return centralizer(Subgroup::full(g), elems);
}

Subgroup normalizer(const Subgroup& ambient, const Subgroup& h) {
  std::vector<int> v;
  for (int a : ambient.elements()) {
    bool ok = true;
    for (int x : h.elements())
      if (!h.contains(ambient.parent()->conj(x, a))) {
        ok = false;
        break;
      }
    if (ok) v.push_back(a);
  }
  return Subgroup(ambient.parent(), std::move(v));
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& h) {
  return normalizer(Subgroup::full(g), h);
}

Subgroup sylow_subgroup(const GroupPtr& g, int p) {
  long target = 1;
  long n = g->order();
  while (n % p == 0) {
    n /= p;
    target *= p;
  }
  Subgroup syl = Subgroup::trivial(g);
  while (syl.order() < target) {
    Subgroup norm = normalizer(g, syl);
    bool grown = false;
    for (int y : norm.elements()) {
      if (syl.contains(y)) continue;
      // order of yP in N/P
      int m = 1, x = y;
      while (!syl.contains(x)) {
        x = g->mul(x, y);
        ++m;
      }
      if (m % p != 0) continue;
      int z = g->power(y, m / p);
      std::vector<int> gens = syl.elements();
      gens.push_back(z);
      syl = Subgroup::generated(g, gens);
      grown = true;
      break;
    }
    if (!grown)
      throw std::logic_error("sylow climb stalled");  // unreachable by Sylow theory
  }
  return syl;
}

std::vector<DoubleCoset> double_cosets(const Subgroup& a,
                                       const std::vector<int>& ambient,
                                       const Subgroup& b) {
  const auto& g = *a.parent();
  std::unordered_set<int> visited;
  visited.reserve(ambient.size() * 2);
  std::vector<DoubleCoset> out;
  for (int x : ambient) {
    if (visited.count(x)) continue;
    long size = 0;
    for (int l : a.elements()) {
      int lx = g.mul(l, x);
      for (int r : b.elements())
        if (visited.insert(g.mul(lx, r)).second) ++size;
    }
    out.push_back({x, size});
  }
  return out;
}

std::vector<DoubleCoset> double_cosets(const Subgroup& a, const GroupPtr& g,
                                       const Subgroup& b) {
  std::vector<int> all(static_cast<std::size_t>(g->order()));
  std::iota(all.begin(), all.end(), 0);
  return double_cosets(a, all, b);
}

std::vector<int> left_transversal(const std::vector<int>& ambient, const Subgroup& h) {
  const auto& g = *h.parent();
  std::unordered_set<int> visited;
  visited.reserve(ambient.size() * 2);
  std::vector<int> reps;
  for (int x : ambient) {
    if (visited.count(x)) continue;
    reps.push_back(x);
    for (int t : h.elements()) visited.insert(g.mul(x, t));
  }
  return reps;
}

std::vector<int> left_transversal(const GroupPtr& g, const Subgroup& h) {
  std::vector<int> all(static_cast<std::size_t>(g->order()));
  std::iota(all.begin(), all.end(), 0);
  return left_transversal(all, h);
}

Subgroup commutator_subgroup(const GroupPtr& g) {
  return Subgroup::full(g).derived();
}

Subgroup p_residual(const GroupPtr& g, int p) {
  std::vector<int> gens;
  for (int x = 0; x < g->order(); ++x)
    if (g->element_order(x) % p != 0) gens.push_back(x);
  return Subgroup::generated(g, gens);
}

// ---- AbelianSection ----------------------------------------------------------

AbelianSection::AbelianSection(Subgroup top, Subgroup bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.parent() != bottom_.parent())
    throw PreconditionError("section top and bottom have different parent groups");
  if (!bottom_.subset_of(top_)) throw PreconditionError("T is not a subgroup of S");
  if (!bottom_.is_normal_in(top_)) throw PreconditionError("T is not normal in S");
  const auto& g = *top_.parent();
  for (int x : top_.elements()) {
    if (coset_of_.count(x)) continue;
    int cid = static_cast<int>(reps_.size());
    reps_.push_back(x);
    for (int t : bottom_.elements()) coset_of_[g.mul(x, t)] = cid;
  }
  for (int c1 : reps_)
    for (int c2 : reps_)
      if (coset_of_.at(g.mul(c1, c2)) != coset_of_.at(g.mul(c2, c1)))
        throw PreconditionError("quotient S/T is not abelian");
}

int AbelianSection::coset_of(int elem_index) const {
  auto it = coset_of_.find(elem_index);
  if (it == coset_of_.end()) throw MembershipError("element not in section top");
  return it->second;
}

int AbelianSection::mul(int c1, int c2) const {
  return coset_of_.at(top_.parent()->mul(rep(c1), rep(c2)));
}

int AbelianSection::inv(int c) const {
  return coset_of_.at(top_.parent()->inv(rep(c)));
}

int AbelianSection::power(int c, long n) const {
  int ord = coset_order(c);
  long m = n % ord;
  if (m < 0) m += ord;
  int r = 0;
  for (long i = 0; i < m; ++i) r = mul(r, c);
  return r;
}

int AbelianSection::coset_order(int c) const {
  int x = c, k = 1;
  while (x != 0) {
    x = mul(x, c);
    ++k;
  }
  return k;
}

std::vector<int> AbelianSection::omega1(int p) const {
  std::vector<int> v;
  for (int c = 0; c < size(); ++c) {
    int o = coset_order(c);
    if (o == 1 || o == p) v.push_back(c);
  }
  return v;
}

std::vector<int> AbelianSection::span(const std::vector<int>& cosets) const {
  std::unordered_set<int> seen{0};
  std::deque<int> work{0};
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    for (int c : cosets) {
      int y = mul(x, c);
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  std::vector<int> v(seen.begin(), seen.end());
  std::sort(v.begin(), v.end());
  return v;
}

bool AbelianSection::linearly_independent(int p, const std::vector<int>& cosets) const {
  std::vector<int> distinct = cosets;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int c : distinct) {
    if (c == 0) throw PreconditionError("trivial coset is not allowed in independence test");
    if (coset_order(c) != p)
      throw PreconditionError("coset lies outside Omega_1 of the section");
  }
  long pk = 1;
  for (std::size_t i = 0; i < distinct.size(); ++i) pk *= p;
  return static_cast<long>(span(distinct).size()) == pk;
}

std::string AbelianSection::coset_label(int c) const {
  return top_.parent()->element(rep(c)).to_string();
}

AbelianSection abelian_section(const Subgroup& s, const Subgroup& t) {
  return AbelianSection(s, t);
}

// ---- subgroup lattice ---------------------------------------------------------

namespace {

struct Mask {
  std::vector<std::uint64_t> bits;
  bool operator==(const Mask&) const = default;
  void set(int i) { bits[static_cast<std::size_t>(i) >> 6] |= (1ull << (i & 63)); }
  bool get(int i) const { return (bits[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
  bool subset_of(const Mask& o) const {
    for (std::size_t w = 0; w < bits.size(); ++w)
      if (bits[w] & ~o.bits[w]) return false;
    return true;
  }
};

struct MaskHash {
  std::size_t operator()(const Mask& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : m.bits) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::vector<Subgroup> all_subgroups(const Subgroup& h) {
  const int n = h.order();
  if (n > 1024)
    throw SizeLimitError("subgroup lattice enumeration is guarded to order 1024");
  const auto& g = *h.parent();
  const auto& elems = h.elements();

  // local multiplication table
  std::vector<int> lmul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      lmul[static_cast<std::size_t>(a) * n + b] =
          h.local_index(g.mul(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));

  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  auto closure = [&](std::vector<int> members) {
    Mask m{std::vector<std::uint64_t>(words, 0)};
    m.set(0);
    std::deque<int> work{0};
    for (int x : members)
      if (!m.get(x)) {
        m.set(x);
        work.push_back(x);
      }
    std::vector<int> all{0};
    for (int x : members) all.push_back(x);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        int y = lmul[static_cast<std::size_t>(all[i]) * n + all[j]];
        if (!m.get(y)) {
          m.set(y);
          all.push_back(y);
        }
      }
    return m;
  };

  // cyclic subgroups
  std::unordered_set<Mask, MaskHash> found;
  std::vector<Mask> cyclics;
  for (int x = 0; x < n; ++x) {
    Mask m = closure({x});
    if (found.insert(m).second) cyclics.push_back(m);
  }

  // close under join with cyclics
  std::deque<Mask> work(found.begin(), found.end());
  while (!work.empty()) {
    Mask cur = std::move(work.front());
    work.pop_front();
    for (const auto& c : cyclics) {
      if (c.subset_of(cur)) continue;
      std::vector<int> members;
      for (int i = 0; i < n; ++i)
        if (cur.get(i) || c.get(i)) members.push_back(i);
      Mask joined = closure(members);
      if (found.insert(joined).second) work.push_back(joined);
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& m : found) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if (m.get(i)) v.push_back(elems[static_cast<std::size_t>(i)]);
    out.emplace_back(h.parent(), std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(
    const Subgroup& ambient, const std::vector<Subgroup>& subs) {
  std::vector<std::vector<Subgroup>> classes;
  std::unordered_set<std::size_t> assigned;
  auto key = [&](const Subgroup& s) {
    std::size_t hsh = 1469598103934665603ull;
    for (int x : s.elements()) {
      hsh ^= static_cast<std::size_t>(x);
      hsh *= 1099511628211ull;
    }
    return hsh;
  };
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < subs.size(); ++i) by_key[key(subs[i])].push_back(i);

  std::vector<bool> done(subs.size(), false);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (done[i]) continue;
    std::vector<Subgroup> cls;
    for (int a : ambient.elements()) {
      Subgroup conj = subs[i].conjugate(a);
      for (std::size_t j : by_key[key(conj)]) {
        if (!done[j] && subs[j] == conj) {
          done[j] = true;
          cls.push_back(subs[j]);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

}  // namespace fuskit
