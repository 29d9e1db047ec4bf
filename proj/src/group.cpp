#include "chainlocal/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace chainlocal {

namespace {

int least_moved_point(const Perm& g) {
  for (int i = 0; i < g.degree(); ++i)
    if (g[i] != i) return i;
  return -1;
}

}  // namespace

GroupHandle::GroupHandle(int degree, std::vector<Perm> generators, const Limits& limits)
    : degree_(degree), limits_(limits) {
  if (degree < 1 || degree > limits.max_degree)
    throw InputError("degree " + std::to_string(degree) + " outside [1, " +
                     std::to_string(limits.max_degree) + "]");
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(g);
  }
  build_bsgs();
}

void GroupHandle::build_bsgs() {
  auto rebuild_orbit = [&](detail::BsgsLevel& level) {
    level.orbit.clear();
    level.transversal.assign(degree_, Perm());
    level.in_orbit.assign(degree_, 0);
    level.orbit.push_back(level.base_point);
    level.in_orbit[level.base_point] = 1;
    level.transversal[level.base_point] = Perm::identity(degree_);
    for (size_t i = 0; i < level.orbit.size(); ++i) {
      int point = level.orbit[i];
      for (const Perm& s : level.gens) {
        int image = s[point];
        if (!level.in_orbit[image]) {
          level.in_orbit[image] = 1;
          level.orbit.push_back(image);
          level.transversal[image] = level.transversal[point] * s;
        }
      }
    }
  };

  // Strips g through levels starting at `from`; returns (failure level, residue).
  auto strip = [&](Perm g, size_t from) -> std::pair<size_t, Perm> {
    for (size_t i = from; i < levels_.size(); ++i) {
      if (g.is_identity()) return {i, g};
      int image = g[levels_[i].base_point];
      if (!levels_[i].in_orbit[image]) return {i, g};
      g = g * levels_[i].transversal[image].inverse();
    }
    return {levels_.size(), g};
  };

  // The residue fixes the base points of all levels before `level`, so it is a
  // generator of every stabilizer down to that depth.
  auto add_at_level = [&](size_t level, const Perm& g) {
    if (level == levels_.size()) {
      detail::BsgsLevel fresh;
      fresh.base_point = least_moved_point(g);
      levels_.push_back(std::move(fresh));
    }
    for (size_t i = 0; i <= level; ++i) {
      levels_[i].gens.push_back(g);
      rebuild_orbit(levels_[i]);
    }
  };

  for (const Perm& g : generators_) {
    auto [level, residue] = strip(g, 0);
    if (!residue.is_identity()) add_at_level(level, residue);
  }

  // Verify Schreier generators level by level until a fixpoint is reached.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = levels_.size(); i-- > 0 && !changed;) {
      detail::BsgsLevel& level = levels_[i];
      for (size_t oi = 0; oi < level.orbit.size() && !changed; ++oi) {
        int point = level.orbit[oi];
        for (const Perm& s : level.gens) {
          Perm schreier =
              level.transversal[point] * s * level.transversal[s[point]].inverse();
          auto [j, residue] = strip(std::move(schreier), i + 1);
          if (!residue.is_identity()) {
            add_at_level(j, residue);
            changed = true;
            break;
          }
        }
      }
    }
  }

  order_ = 1;
  for (const auto& level : levels_) order_ *= level.orbit.size();
}

bool GroupHandle::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  Perm h = g;
  for (const auto& level : levels_) {
    if (h.is_identity()) return true;
    int image = h[level.base_point];
    if (!level.in_orbit[image]) return false;
    h = h * level.transversal[image].inverse();
  }
  return h.is_identity();
}

std::vector<std::uint64_t> GroupHandle::fundamental_orbit_lengths() const {
  std::vector<std::uint64_t> lengths;
  for (const auto& level : levels_) lengths.push_back(level.orbit.size());
  return lengths;
}

const std::vector<Perm>& GroupHandle::elements() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->elements) {
    if (order_ > limits_.max_group_order)
      throw ResourceError("group order " + std::to_string(order_) +
                          " exceeds guard " + std::to_string(limits_.max_group_order));
    auto elems = std::make_shared<std::vector<Perm>>(
        generate_closure(degree_, generators_, limits_.max_group_order));
    CHAINLOCAL_CHECK(elems->size() == order_, "element enumeration disagrees with BSGS order");
    cache_->elements = std::move(elems);
  }
  return *cache_->elements;
}

int GroupHandle::element_index(const Perm& g) const {
  const auto& elems = elements();
  auto it = std::lower_bound(elems.begin(), elems.end(), g);
  if (it == elems.end() || *it != g) return -1;
  return static_cast<int>(it - elems.begin());
}

const ConjClassTable& GroupHandle::classes() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->classes) return *cache_->classes;
  }
  const auto& elems = elements();
  auto table = std::make_shared<ConjClassTable>();
  table->class_of_element.assign(elems.size(), -1);
  for (size_t i = 0; i < elems.size(); ++i) {
    if (table->class_of_element[i] >= 0) continue;
    // Scanning in sorted order makes elems[i] the lex-least member of its class.
    int id = static_cast<int>(table->reps.size());
    table->reps.push_back(elems[i]);
    table->members.emplace_back();
    std::vector<int> queue{static_cast<int>(i)};
    table->class_of_element[i] = id;
    while (!queue.empty()) {
      int idx = queue.back();
      queue.pop_back();
      table->members[id].push_back(idx);
      for (const Perm& g : generators_) {
        Perm conj = elems[idx].conjugated_by(g);
        int j = static_cast<int>(
            std::lower_bound(elems.begin(), elems.end(), conj) - elems.begin());
        if (table->class_of_element[j] < 0) {
          table->class_of_element[j] = id;
          queue.push_back(j);
        }
      }
    }
    std::sort(table->members[id].begin(), table->members[id].end());
    table->sizes.push_back(table->members[id].size());
  }
  table->inverse_class.resize(table->count());
  for (int c = 0; c < table->count(); ++c) {
    Perm inv = table->reps[c].inverse();
    int idx = static_cast<int>(
        std::lower_bound(elems.begin(), elems.end(), inv) - elems.begin());
    table->inverse_class[c] = table->class_of_element[idx];
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->classes) cache_->classes = std::move(table);
  return *cache_->classes;
}

int GroupHandle::class_of(const Perm& g) const {
  int idx = element_index(g);
  if (idx < 0) throw DomainError("element not in group");
  return classes().class_of_element[idx];
}

std::uint64_t GroupHandle::exponent() const {
  std::uint64_t e = 1;
  for (const Perm& rep : classes().reps) e = std::lcm<std::uint64_t>(e, rep.order());
  return e;
}

std::vector<Perm> generate_closure(int degree, const std::vector<Perm>& gens,
                                   std::uint64_t max_order) {
  std::set<Perm> closed{Perm::identity(degree)};
  std::vector<Perm> queue{Perm::identity(degree)};
  while (!queue.empty()) {
    Perm current = std::move(queue.back());
    queue.pop_back();
    for (const Perm& g : gens) {
      Perm next = current * g;
      if (closed.insert(next).second) {
        if (closed.size() > max_order)
          throw ResourceError("subgroup closure exceeds guard " + std::to_string(max_order));
        queue.push_back(std::move(next));
      }
    }
  }
  return {closed.begin(), closed.end()};
}

std::vector<Perm> small_generating_set(const std::vector<Perm>& sorted_elements) {
  CHAINLOCAL_CHECK(!sorted_elements.empty(), "empty element list");
  int degree = sorted_elements.front().degree();
  std::vector<Perm> gens;
  std::vector<Perm> closed{Perm::identity(degree)};
  for (const Perm& e : sorted_elements) {
    if (std::binary_search(closed.begin(), closed.end(), e)) continue;
    gens.push_back(e);
    closed = generate_closure(degree, gens, sorted_elements.size());
    if (closed.size() == sorted_elements.size()) break;
  }
  return gens;
}

SubgroupRef SubgroupRef::from_generators(const GroupHandle& parent, std::vector<Perm> gens) {
  for (const Perm& g : gens)
    if (!parent.contains(g)) throw DomainError("subgroup generator not in parent group");
  auto elems = generate_closure(parent.degree(), gens, parent.order());
  auto small = small_generating_set(elems);
  return SubgroupRef(&parent, std::move(elems), std::move(small));
}

SubgroupRef SubgroupRef::from_elements(const GroupHandle& parent, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<Perm> closure;
  try {
    closure = generate_closure(parent.degree(), elements, elements.size());
  } catch (const ResourceError&) {
    throw DomainError("element set is not closed under the group law");
  }
  if (closure != elements) throw DomainError("element set is not closed under the group law");
  auto gens = small_generating_set(elements);
  if (parent.order() % elements.size() != 0)
    throw DomainError("subgroup order does not divide parent order");
  return SubgroupRef(&parent, std::move(elements), std::move(gens));
}

SubgroupRef SubgroupRef::trivial(const GroupHandle& parent) {
  return SubgroupRef(&parent, {Perm::identity(parent.degree())}, {});
}

SubgroupRef SubgroupRef::whole_group(const GroupHandle& parent) {
  return SubgroupRef(&parent, parent.elements(),
                     small_generating_set(parent.elements()));
}

bool SubgroupRef::contains(const Perm& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool SubgroupRef::contains_subgroup(const SubgroupRef& other) const {
  if (other.order() > order()) return false;
  return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(),
                       other.elements_.end());
}

SubgroupRef SubgroupRef::conjugated_by(const Perm& g) const {
  std::vector<Perm> conj;
  conj.reserve(elements_.size());
  for (const Perm& e : elements_) conj.push_back(e.conjugated_by(g));
  std::sort(conj.begin(), conj.end());
  std::vector<Perm> gens;
  for (const Perm& s : gens_) gens.push_back(s.conjugated_by(g));
  return SubgroupRef(parent_, std::move(conj), std::move(gens));
}

GroupHandle SubgroupRef::to_group() const {
  return GroupHandle(parent_->degree(), gens_, parent_->limits());
}

SubgroupRef centralizer(const GroupHandle& G, const Perm& g) {
  if (!G.contains(g)) throw DomainError("centralizer: element not in group");
  std::vector<Perm> elems;
  for (const Perm& x : G.elements())
    if (x * g == g * x) elems.push_back(x);
  return SubgroupRef::from_elements(G, std::move(elems));
}

SubgroupRef centralizer_of_subgroup(const GroupHandle& G, const SubgroupRef& H) {
  std::vector<Perm> elems;
  for (const Perm& x : G.elements()) {
    bool central = true;
    for (const Perm& h : H.generators())
      if (x * h != h * x) {
        central = false;
        break;
      }
    if (central) elems.push_back(x);
  }
  return SubgroupRef::from_elements(G, std::move(elems));
}

SubgroupRef normalizer(const GroupHandle& G, const SubgroupRef& H) {
  if (&H.parent() != &G && !std::all_of(H.generators().begin(), H.generators().end(),
                                        [&](const Perm& h) { return G.contains(h); }))
    throw DomainError("normalizer: H is not a subgroup of G");
  std::vector<Perm> elems;
  for (const Perm& x : G.elements()) {
    bool normalizes = true;
    for (const Perm& h : H.generators())
      if (!H.contains(h.conjugated_by(x))) {
        normalizes = false;
        break;
      }
    if (normalizes) elems.push_back(x);
  }
  return SubgroupRef::from_elements(G, std::move(elems));
}

SubgroupRef sylow_subgroup(const GroupHandle& G, int p) {
  if (!is_prime(p)) throw InputError("sylow_subgroup: p must be prime");
  int target = p_valuation(G.order(), p);
  SubgroupRef P = SubgroupRef::trivial(G);
  while (p_valuation(P.order(), p) < target) {
    // Extend by the lex-least p-element of N_G(P) outside P.
    SubgroupRef N = normalizer(G, P);
    const Perm* extender = nullptr;
    for (const Perm& x : N.elements()) {
      if (P.contains(x)) continue;
      long long o = x.order();
      bool p_power = true;
      while (o > 1) {
        if (o % p != 0) {
          p_power = false;
          break;
        }
        o /= p;
      }
      if (p_power) {
        extender = &x;
        break;
      }
    }
    CHAINLOCAL_CHECK(extender != nullptr, "no p-element extends the p-subgroup");
    std::vector<Perm> gens = P.generators();
    gens.push_back(*extender);
    P = SubgroupRef::from_generators(G, std::move(gens));
  }
  return P;
}

SubgroupRef p_core(const GroupHandle& G, int p) {
  if (!is_prime(p)) throw InputError("p_core: p must be prime");
  SubgroupRef X = sylow_subgroup(G, p);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm& g : G.generators()) {
      SubgroupRef conj = X.conjugated_by(g);
      if (!conj.same_elements(X)) {
        X = intersect(X, conj);
        changed = true;
      }
    }
  }
  return X;
}

SubgroupRef intersect(const SubgroupRef& a, const SubgroupRef& b) {
  std::vector<Perm> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(common));
  return SubgroupRef::from_elements(a.parent(), std::move(common));
}

std::optional<Perm> subgroup_conjugator(const GroupHandle& G, const SubgroupRef& H1,
                                        const SubgroupRef& H2) {
  if (H1.order() != H2.order()) return std::nullopt;
  for (const Perm& g : G.elements()) {
    bool ok = true;
    for (const Perm& h : H1.generators())
      if (!H2.contains(h.conjugated_by(g))) {
        ok = false;
        break;
      }
    if (ok) {
      CHAINLOCAL_CHECK(H1.conjugated_by(g).same_elements(H2), "conjugator verification failed");
      return g;
    }
  }
  return std::nullopt;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int p_valuation(std::uint64_t n, int p) {
  CHAINLOCAL_CHECK(n > 0, "valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

namespace {

std::uint64_t derived_subgroup_order(const GroupHandle& G) {
  const auto& gens = G.generators();
  std::vector<Perm> seeds;
  for (const Perm& a : gens)
    for (const Perm& b : gens) {
      Perm comm = a.inverse() * b.inverse() * a * b;
      if (!comm.is_identity()) seeds.push_back(comm);
    }
  if (seeds.empty()) return 1;
  // Normal closure of the commutators of the generators.
  while (true) {
    std::vector<Perm> closure = generate_closure(G.degree(), seeds, G.order());
    bool grew = false;
    for (const Perm& g : gens) {
      for (const Perm& k : closure) {
        Perm conj = k.conjugated_by(g);
        if (!std::binary_search(closure.begin(), closure.end(), conj)) {
          seeds.push_back(conj);
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
    if (!grew) return closure.size();
  }
}

}  // namespace

std::vector<std::uint64_t> iso_fingerprint(const GroupHandle& G) {
  const ConjClassTable& classes = G.classes();
  std::vector<std::uint64_t> fp;
  fp.push_back(G.order());

  std::map<long long, std::uint64_t> order_histogram;
  std::uint64_t center = 0;
  for (int c = 0; c < classes.count(); ++c) {
    order_histogram[classes.reps[c].order()] += classes.sizes[c];
    if (classes.sizes[c] == 1) ++center;
  }
  fp.push_back(center);
  fp.push_back(derived_subgroup_order(G));
  for (auto [o, n] : order_histogram) {
    fp.push_back(static_cast<std::uint64_t>(o));
    fp.push_back(n);
  }
  std::vector<std::uint64_t> sizes(classes.sizes);
  std::sort(sizes.begin(), sizes.end());
  fp.insert(fp.end(), sizes.begin(), sizes.end());
  return fp;
}

namespace {

// Extends a partial isomorphism generator by generator. `mapped` holds the
// image of every element of the subgroup generated by the assigned generators.
bool extend_iso(const GroupHandle& A, const GroupHandle& B,
                const std::vector<Perm>& gens_a, size_t next,
                const std::vector<std::pair<Perm, Perm>>& gen_images,
                const std::map<Perm, Perm>& mapped) {
  if (next == gens_a.size()) return mapped.size() == A.order();

  const Perm& a = gens_a[next];
  long long order_a = a.order();
  std::uint64_t class_size_a = A.classes().sizes[A.class_of(a)];

  for (const Perm& b : B.elements()) {
    if (b.order() != order_a) continue;
    if (B.classes().sizes[B.class_of(b)] != class_size_a) continue;
    // BFS over the enlarged subgroup, defining images multiplicatively.
    std::vector<std::pair<Perm, Perm>> pairs(gen_images);
    pairs.emplace_back(a, b);
    std::map<Perm, Perm> extended(mapped);
    std::vector<Perm> queue;
    queue.reserve(extended.size());
    for (const auto& [x, y] : extended) queue.push_back(x);
    if (extended.empty()) {
      extended.emplace(Perm::identity(A.degree()), Perm::identity(B.degree()));
      queue.push_back(Perm::identity(A.degree()));
    }
    bool conflict = false;
    for (size_t qi = 0; qi < queue.size() && !conflict; ++qi) {
      Perm x = queue[qi];
      Perm y = extended.at(x);
      for (const auto& [ga, gb] : pairs) {
        Perm xa = x * ga;
        Perm yb = y * gb;
        auto it = extended.find(xa);
        if (it == extended.end()) {
          extended.emplace(xa, yb);
          queue.push_back(xa);
        } else if (it->second != yb) {
          conflict = true;
          break;
        }
      }
    }
    if (conflict) continue;
    // Injectivity on the mapped subgroup.
    std::set<Perm> images;
    for (const auto& [x, y] : extended) images.insert(y);
    if (images.size() != extended.size()) continue;
    if (extend_iso(A, B, gens_a, next + 1, pairs, extended)) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const GroupHandle& G1, const GroupHandle& G2) {
  if (G1.order() != G2.order()) return false;
  if (iso_fingerprint(G1) != iso_fingerprint(G2)) return false;
  std::vector<Perm> gens = small_generating_set(G1.elements());
  if (gens.empty()) return true;  // both trivial
  return extend_iso(G1, G2, gens, 0, {}, {});
}

}  // namespace chainlocal
