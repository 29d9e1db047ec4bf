#include <fstream>
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "chainlocal/catalog.hpp"
#include "chainlocal/group.hpp"

using namespace chainlocal;

namespace {
GroupHandle cyclic(int n) {
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>((i + 1) % n);
  return GroupHandle(n, {Perm::from_images(img)});
}
}  // namespace

TEST_CASE("orders of the catalog groups") {
  CHECK(resolve_catalog("S3").order() == 6);
  CHECK(resolve_catalog("S4").order() == 24);
  CHECK(resolve_catalog("S5").order() == 120);
  CHECK(resolve_catalog("A4").order() == 12);
  CHECK(resolve_catalog("A5").order() == 60);
  CHECK(resolve_catalog("D8").order() == 8);
  CHECK(resolve_catalog("D12").order() == 12);
  CHECK(resolve_catalog("Q8").order() == 8);
  CHECK(resolve_catalog("C2xC2").order() == 4);
  CHECK(resolve_catalog("SL(2,3)").order() == 24);
  CHECK(resolve_catalog("S6").order() == 720);
  CHECK(resolve_catalog("A6").order() == 360);
  CHECK(resolve_catalog("PSL(2,7)").order() == 168);
  CHECK_THROWS_AS(resolve_catalog("X99"), InputError);
}

TEST_CASE("trivial group from empty generators") {
  GroupHandle trivial(3, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.contains(Perm::identity(3)));
  CHECK_FALSE(trivial.contains(parse_cycles("(0 1)", 3)));
}

TEST_CASE("BSGS order equals product of fundamental orbit lengths") {
  for (const auto& name : catalog_names()) {
    GroupHandle g = resolve_catalog(name);
    auto lengths = g.fundamental_orbit_lengths();
    std::uint64_t product = 1;
    for (auto l : lengths) product *= l;
    CHECK(product == g.order());
    for (const Perm& gen : g.generators()) CHECK(g.contains(gen));
  }
}

TEST_CASE("Q8 has a unique involution") {
  GroupHandle q8 = resolve_catalog("Q8");
  int involutions = 0;
  for (const Perm& e : q8.elements())
    if (e.order() == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("conjugacy classes of S4 and A5") {
  auto sorted_sizes = [](const GroupHandle& g) {
    std::vector<std::uint64_t> s = g.classes().sizes;
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(sorted_sizes(resolve_catalog("S4")) ==
        std::vector<std::uint64_t>{1, 3, 6, 6, 8});
  CHECK(sorted_sizes(resolve_catalog("A5")) ==
        std::vector<std::uint64_t>{1, 12, 12, 15, 20});
  GroupHandle c6 = cyclic(6);
  CHECK(c6.classes().count() == 6);
}

TEST_CASE("class invariants") {
  for (const auto& name : {"S4", "A5", "SL(2,3)"}) {
    GroupHandle g = resolve_catalog(name);
    const auto& cls = g.classes();
    std::uint64_t total = std::accumulate(cls.sizes.begin(), cls.sizes.end(),
                                          std::uint64_t{0});
    CHECK(total == g.order());
    CHECK(cls.sizes[0] == 1);
    CHECK(cls.reps[0].is_identity());
    for (int c = 0; c < cls.count(); ++c) {
      CHECK(g.order() % cls.sizes[c] == 0);
      CHECK(cls.sizes[cls.inverse_class[c]] == cls.sizes[c]);
    }
  }
}

TEST_CASE("centralizers") {
  GroupHandle s3 = resolve_catalog("S3");
  CHECK(centralizer(s3, Perm::identity(3)).order() == 6);
  CHECK(centralizer(s3, parse_cycles("(0 1)", 3)).order() == 2);
  GroupHandle s4 = resolve_catalog("S4");
  CHECK(centralizer(s4, parse_cycles("(0 1)(2 3)", 4)).order() == 8);
  CHECK_THROWS_AS(centralizer(s4, Perm::identity(3)), DomainError);
  // order * class size = |G|
  for (int c = 0; c < s4.classes().count(); ++c)
    CHECK(centralizer(s4, s4.classes().reps[c]).order() * s4.classes().sizes[c] ==
          s4.order());
}

TEST_CASE("normalizers") {
  GroupHandle a5 = resolve_catalog("A5");
  SubgroupRef v4 = sylow_subgroup(a5, 2);
  CHECK(v4.order() == 4);
  SubgroupRef n = normalizer(a5, v4);
  CHECK(n.order() == 12);
  CHECK(n.contains_subgroup(v4));

  GroupHandle s4 = resolve_catalog("S4");
  SubgroupRef syl2 = sylow_subgroup(s4, 2);
  CHECK(syl2.order() == 8);
  CHECK(normalizer(s4, syl2).order() == 8);  // self-normalizing
  CHECK(normalizer(s4, SubgroupRef::whole_group(s4)).order() == 24);
}

TEST_CASE("sylow subgroups") {
  GroupHandle s4 = resolve_catalog("S4");
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(s4, 5).order() == 1);
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  // determinism
  CHECK(sylow_subgroup(s4, 2).elements() == sylow_subgroup(s4, 2).elements());
  GroupHandle a5 = resolve_catalog("A5");
  SubgroupRef p = sylow_subgroup(a5, 2);
  CHECK(p.order() == 4);
  for (const Perm& e : p.elements())
    CHECK(e.order() <= 2);  // Klein four group
  CHECK_THROWS_AS(sylow_subgroup(s4, 4), InputError);
}

TEST_CASE("p-cores") {
  GroupHandle s4 = resolve_catalog("S4");
  SubgroupRef core = p_core(s4, 2);
  CHECK(core.order() == 4);
  for (const Perm& e : core.elements())
    CHECK(e.order() <= 2);
  GroupHandle s5 = resolve_catalog("S5");
  CHECK(p_core(s5, 2).order() == 1);
  GroupHandle d8 = resolve_catalog("D8");
  CHECK(p_core(d8, 2).order() == 8);
  // normality: closed under conjugation by every generator
  for (const Perm& g : s4.generators())
    CHECK(core.conjugated_by(g).same_elements(core));
}

TEST_CASE("subgroup conjugator") {
  GroupHandle s3 = resolve_catalog("S3");
  SubgroupRef h1 = SubgroupRef::from_generators(s3, {parse_cycles("(0 1)", 3)});
  SubgroupRef h2 = SubgroupRef::from_generators(s3, {parse_cycles("(1 2)", 3)});
  auto g = subgroup_conjugator(s3, h1, h2);
  REQUIRE(g.has_value());
  CHECK(h1.conjugated_by(*g).same_elements(h2));
  CHECK(subgroup_conjugator(s3, h1, h1).has_value());

  GroupHandle s4 = resolve_catalog("S4");
  SubgroupRef a = SubgroupRef::from_generators(s4, {parse_cycles("(0 1)", 4)});
  SubgroupRef b = SubgroupRef::from_generators(s4, {parse_cycles("(0 1)(2 3)", 4)});
  CHECK_FALSE(subgroup_conjugator(s4, a, b).has_value());
}

TEST_CASE("orbit-stabilizer on a point") {
  for (const auto& name : catalog_names()) {
    GroupHandle g = resolve_catalog(name);
    // orbit of point 0 under G times stabilizer order = |G|
    std::vector<char> orbit(g.degree(), 0);
    orbit[0] = 1;
    std::vector<int> queue{0};
    while (!queue.empty()) {
      int p = queue.back();
      queue.pop_back();
      for (const Perm& s : g.generators())
        if (!orbit[s[p]]) {
          orbit[s[p]] = 1;
          queue.push_back(s[p]);
        }
    }
    std::uint64_t orbit_size = std::count(orbit.begin(), orbit.end(), 1);
    std::uint64_t stab = 0;
    for (const Perm& e : g.elements())
      if (e[0] == 0) ++stab;
    CHECK(orbit_size * stab == g.order());
  }
}

TEST_CASE("isomorphism testing") {
  GroupHandle d8 = resolve_catalog("D8");
  GroupHandle q8 = resolve_catalog("Q8");
  GroupHandle c4 = cyclic(4);
  GroupHandle c2c2 = resolve_catalog("C2xC2");
  CHECK(is_isomorphic(d8, d8));
  CHECK_FALSE(is_isomorphic(d8, q8));
  CHECK_FALSE(is_isomorphic(c4, c2c2));
  CHECK(is_isomorphic(resolve_catalog("S3"),
                      GroupHandle(4, {parse_cycles("(1 2)", 4), parse_cycles("(1 2 3)", 4)})));
  // A4 vs N_{A5}(V4)
  GroupHandle a5 = resolve_catalog("A5");
  GroupHandle n = normalizer(a5, sylow_subgroup(a5, 2)).to_group();
  CHECK(is_isomorphic(n, resolve_catalog("A4")));
}

TEST_CASE("isomorphism is an equivalence on a mixed list") {
  std::vector<GroupHandle> groups;
  for (const auto& name : {"S3", "D8", "Q8", "C2xC2", "A4", "D12"})
    groups.push_back(resolve_catalog(name));
  groups.push_back(cyclic(6));
  for (size_t i = 0; i < groups.size(); ++i) {
    CHECK(is_isomorphic(groups[i], groups[i]));
    for (size_t j = 0; j < groups.size(); ++j)
      CHECK(is_isomorphic(groups[i], groups[j]) == is_isomorphic(groups[j], groups[i]));
  }
  // D12 is isomorphic to C2 x S3 on disjoint points
  GroupHandle c2s3(5, {parse_cycles("(0 1)", 5), parse_cycles("(2 3)", 5),
                       parse_cycles("(2 3 4)", 5)});
  CHECK(c2s3.order() == 12);
  CHECK(is_isomorphic(resolve_catalog("D12"), c2s3));
  CHECK_FALSE(is_isomorphic(resolve_catalog("A4"), c2s3));
}

TEST_CASE("subgroup ref validation") {
  GroupHandle s4 = resolve_catalog("S4");
  CHECK_THROWS_AS(SubgroupRef::from_elements(
                      s4, {Perm::identity(4), parse_cycles("(0 1 2)", 4)}),
                  DomainError);
  SubgroupRef h = SubgroupRef::from_generators(s4, {parse_cycles("(0 1 2)", 4)});
  CHECK(h.order() == 3);
  CHECK(h.to_group().order() == 3);
}

TEST_CASE("generator file ingestion") {
  const char* path = "/tmp/chainlocal_test_gens.txt";
  {
    std::ofstream out(path);
    out << "# S3 on points 0..2\n(0 1)\n(0 1 2)\n";
  }
  GroupHandle g = group_from_file(path);
  CHECK(g.order() == 6);
  CHECK(g.degree() == 3);
}
