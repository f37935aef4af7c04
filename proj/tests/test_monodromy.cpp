#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "adinkra/error.hpp"
#include "adinkra/graph.hpp"
#include "adinkra/monodromy.hpp"
#include "test_support.hpp"

using namespace adinkra;
using namespace adinkra::monodromy;
using gf2::BinaryWord;
using gf2::LinearCode;
using signed_perm::compose;
using signed_perm::IntMatrix;

namespace {

LinearCode code_of(std::initializer_list<const char*> words) {
  std::vector<BinaryWord> gens;
  for (const char* w : words) gens.push_back(BinaryWord::parse(w));
  return LinearCode(gens.front().length(), gens);
}

GarMatrices fixture() {
  GarMatrices g;
  for (int i = 0; i < 4; ++i) {
    const auto m = IntMatrix::parse(testing::kFixtureL[i]);
    g.L.push_back(SignedPermutation::from_matrix(m));
    g.R.push_back(SignedPermutation::from_matrix(m * testing::kFixtureRSign[i]));
  }
  return g;
}

std::vector<SignedPermutation> zetas_of(const graph::Adinkra& a) { return zeta_generators(gar_matrices(a)); }

// Sign of φ(ω) at every fermion by walking edges, or 0 if φ(ω) moves a
// fermion or the sign is not constant.
int walked_chi0(const graph::Adinkra& a) {
  const testing::EdgeWalker walk{a};
  int common = 0;
  for (std::size_t f = 0; f < a.d(); ++f) {
    int sign = 1;
    if (walk.omega(f, sign) != f) return 0;
    if (common == 0) common = sign;
    if (sign != common) return 0;
  }
  return common;
}

// Same Adinkra with boson and fermion indices shuffled.
graph::Adinkra shuffle_indices(const graph::Adinkra& a, std::mt19937& rng) {
  std::vector<std::uint32_t> pb(a.bosons().size());
  std::vector<std::uint32_t> pf(a.d());
  std::iota(pb.begin(), pb.end(), 0u);
  std::iota(pf.begin(), pf.end(), 0u);
  std::shuffle(pb.begin(), pb.end(), rng);
  std::shuffle(pf.begin(), pf.end(), rng);
  std::vector<graph::Vertex> bosons(a.bosons());
  std::vector<graph::Vertex> fermions(a.fermions());
  for (std::size_t b = 0; b < pb.size(); ++b) bosons[pb[b]] = a.bosons()[b];
  for (std::size_t f = 0; f < pf.size(); ++f) fermions[pf[f]] = a.fermions()[f];
  auto edges = a.edges();
  for (std::size_t c = 0; c < edges.size(); ++c) {
    for (std::size_t f = 0; f < pf.size(); ++f) {
      const auto& e = a.edges()[c][f];
      edges[c][pf[f]] = {pb[e.boson], e.dashed};
    }
  }
  return graph::Adinkra(a.colors(), a.block_codes(), bosons, fermions, edges);
}

}  // namespace

TEST_CASE("fixture matrices reproduce the displayed relations") {
  const auto g = fixture();
  CHECK(gr_relations_hold(g));
  for (int i = 0; i < 4; ++i) CHECK(g.R[static_cast<std::size_t>(i)] == g.L[static_cast<std::size_t>(i)].inverse());
  const auto r1l2r3 = compose(compose(g.R[0], g.L[1]), g.R[2]);
  CHECK(r1l2r3 == g.R[3]);
  CHECK((g.R[0].to_matrix() * g.L[1].to_matrix() * g.R[2].to_matrix()) == g.R[3].to_matrix());
  const auto product = compose(r1l2r3, g.L[3]);
  CHECK((signed_perm::is_identity(product) || signed_perm::is_minus_identity(product)));
  const auto w = find_relation(g);
  REQUIRE(w.has_value());
  CHECK(w->word == "R1 L2 R3 L4");
  CHECK(w->sign == (signed_perm::is_identity(product) ? 1 : -1));
}

TEST_CASE("GR relations fail for a broken matrix set") {
  auto g = fixture();
  g.L[1] = g.L[2];
  g.R[1] = g.R[2];
  CHECK_FALSE(gr_relations_hold(g));
}

TEST_CASE("gar_matrices") {
  const auto cube = graph::build_cubical(2);
  const auto g = gar_matrices(cube);
  REQUIRE(g.colors() == 2);
  for (std::size_t j = 0; j < 2; ++j) CHECK(g.L[0].sign(j) == 1);
  for (int i = 0; i < 2; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    CHECK(signed_perm::is_identity(compose(g.L[idx], g.R[idx])));
  }
  CHECK(gr_relations_hold(g));
  CHECK(gr_relations_hold(gar_matrices(graph::build_quotient(code_of({"11110"})))));
  const auto undashed = graph::build_chromotopology(LinearCode::trivial(3));
  CHECK_THROWS_AS(gar_matrices(undashed), Error);
}

TEST_CASE("zeta generators satisfy the Vee relations") {
  for (const auto& a : {graph::build_cubical(4), graph::build_quotient(code_of({"1111"})),
                        graph::build_quotient(code_of({"11110"}))}) {
    const auto z = zetas_of(a);
    CHECK(z.size() == static_cast<std::size_t>(a.colors() - 1));
    CHECK(satisfies_vee_relations(z));
    for (const auto& zj : z) {
      CHECK(signed_perm::is_minus_identity(compose(zj, zj)));
      CHECK(signed_perm::element_order(zj) == 4);
    }
  }
}

TEST_CASE("signed monodromy group orders") {
  CHECK(signed_monodromy_group(zetas_of(graph::build_cubical(4))).order() == 16);
  CHECK(signed_monodromy_group(zetas_of(graph::build_quotient(code_of({"1111"})))).order() == 8);
  CHECK(signed_monodromy_group(zetas_of(graph::build_quotient(code_of({"11110"})))).order() == 32);
}

TEST_CASE("K and chi0") {
  CHECK(compute_K(zetas_of(graph::build_cubical(4))) == KTag::trivial);
  const auto q = graph::build_quotient(code_of({"1111"}));
  const auto k = compute_K(zetas_of(q));
  CHECK(k != KTag::trivial);
  CHECK(chi0(q) == walked_chi0(q));
  CHECK(chi0(q) == chi0_of(k));
  CHECK(compute_K(zetas_of(graph::build_quotient(code_of({"11110"})))) == KTag::trivial);
  for (int n = 2; n <= 7; ++n) CHECK(chi0(graph::build_cubical(n)) == 0);
  CHECK(parse_k_tag(to_string(KTag::minus_omega)) == KTag::minus_omega);
  CHECK_THROWS_AS(parse_k_tag("bogus"), Error);
}

TEST_CASE("chi0 matches an edge-walking oracle over all codes N <= 7") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& code : gf2::enumerate_doubly_even_codes(n, n)) {
      const auto a = graph::build_quotient(code);
      CHECK(chi0(a) == walked_chi0(a));
    }
  }
}

TEST_CASE("phi(omega) sign is constant across fermions") {
  for (int n = 4; n <= 8; n += 4) {
    for (const auto& code : gf2::enumerate_doubly_even_codes(n, n)) {
      if (!gf2::contains(code, BinaryWord::all_ones(n))) continue;
      const auto p = phi_omega(zetas_of(graph::build_quotient(code)));
      REQUIRE(signed_perm::is_identity(signed_perm::SignedPermutation::from_permutation(signed_perm::abs(p))));
      for (std::size_t f = 1; f < p.degree(); ++f) CHECK(p.sign(f) == p.sign(0));
    }
  }
}

TEST_CASE("abs(phi(omega)) translates by the sum of e1 + e_{j+1}") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& code : gf2::enumerate_doubly_even_codes(n, std::min(n, 2))) {
      const auto a = graph::build_quotient(code);
      auto shift = BinaryWord::zero(n);
      for (int j = 1; j < n; ++j) shift = shift ^ BinaryWord::unit(n, 1) ^ BinaryWord::unit(n, j + 1);
      const auto p = signed_perm::abs(phi_omega(zetas_of(a)));
      for (std::size_t f = 0; f < a.d(); ++f) {
        CHECK(a.fermions()[p[f]].word == code.reduce(a.fermions()[f].word ^ shift));
      }
    }
  }
}

TEST_CASE("Sigma") {
  for (int n = 2; n <= 6; ++n) {
    const auto s = sigma_kernel(signed_monodromy_group(zetas_of(graph::build_cubical(n))));
    CHECK(s.order() == 2);
    CHECK(s.contains(SignedPermutation::minus_identity(s.degree)));
  }
  const auto z = zetas_of(graph::build_quotient(code_of({"11110"})));
  const auto s = sigma_kernel(signed_monodromy_group(z));
  CHECK(s.order() == 4);
  const auto z123 = compose(z[0], compose(z[1], z[2]));
  CHECK(s.contains(z123));
  CHECK(s.contains(signed_perm::negate(z123)));
  CHECK(is_elementary_abelian(s.elements));
  CHECK(sigma_kernel(signed_monodromy_group(zetas_of(graph::build_quotient(code_of({"1111"}))))).order() == 2);
}

TEST_CASE("unsigned monodromy") {
  const auto m5 = unsigned_monodromy(signed_monodromy_group(zetas_of(graph::build_quotient(code_of({"11110"})))));
  CHECK(m5.order() == 8);
  CHECK(is_elementary_abelian(m5));
  CHECK(acts_freely_and_transitively(m5, 8));
  const auto m4 = unsigned_monodromy(signed_monodromy_group(zetas_of(graph::build_quotient(code_of({"1111"})))));
  CHECK(m4.order() == 4);
  CHECK(acts_freely_and_transitively(m4, 4));
  const auto m2 = unsigned_monodromy(signed_monodromy_group(zetas_of(graph::build_cubical(2))));
  CHECK(m2.order() == 2);
}

TEST_CASE("genus_and_d") {
  CHECK(genus_and_d(4, 1).d == 4);
  CHECK(genus_and_d(4, 1).genus == 1);
  CHECK(genus_and_d(4, 0).d == 8);
  CHECK(genus_and_d(4, 0).genus == 1);
  CHECK(genus_and_d(5, 1).d == 8);
  CHECK(genus_and_d(5, 1).genus == 3);
  try {
    genus_and_d(3, 1);
    FAIL("expected non-integral-genus");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_integral_genus);
  }
}

TEST_CASE("find_relation") {
  CHECK_FALSE(find_relation(gar_matrices(graph::build_cubical(4))).has_value());
  const auto w = find_relation(gar_matrices(graph::build_quotient(code_of({"11111111"}))));
  REQUIRE(w.has_value());
  CHECK((w->sign == 1 || w->sign == -1));
  CHECK(w->word == "R1 L2 R3 L4 R5 L6 R7 L8");
  CHECK_FALSE(find_relation(gar_matrices(graph::build_quotient(code_of({"11110"})))).has_value());
  for (int n = 2; n <= 6; n += 2) {
    for (const auto& code : gf2::enumerate_doubly_even_codes(n, n)) {
      const auto found = find_relation(gar_matrices(graph::build_quotient(code))).has_value();
      CHECK(found == gf2::contains(code, BinaryWord::all_ones(n)));
    }
  }
}

TEST_CASE("analyze examples") {
  const auto a = analyze(graph::build_quotient(code_of({"1111"})));
  CHECK(a.h_order == 8);
  CHECK(a.h_structure == 2);
  CHECK(a.sigma_order == 2);
  CHECK(a.m_order == 4);
  CHECK((a.chi0 == 1 || a.chi0 == -1));
  CHECK(a.genus == 1);
  CHECK(a.d == 4);
  CHECK(a.h1_in_code);
  CHECK(a.relation_witness.has_value());

  const auto b = analyze(graph::build_quotient(code_of({"11110"})));
  CHECK(b.h_order == 32);
  CHECK(b.h_structure == 4);
  CHECK(b.sigma_order == 4);
  CHECK(b.m_order == 8);
  CHECK(b.chi0 == 0);
  CHECK(b.genus == 3);
  CHECK_FALSE(b.relation_witness.has_value());

  const auto c = analyze(graph::build_cubical(6));
  CHECK(c.h_order == 64);
  CHECK(c.h_structure == 5);
  CHECK(c.sigma_order == 2);
  CHECK(c.m_order == 32);

  CHECK_THROWS_AS(analyze(graph::build_chromotopology(LinearCode::trivial(3))), Error);
}

TEST_CASE("analysis invariants over all codes N <= 8, k <= 4") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& code : gf2::enumerate_doubly_even_codes(n, std::min(n, 4))) {
      const auto r = analyze(graph::build_quotient(code));
      const std::size_t full = std::size_t{1} << n;
      CHECK((r.h_order == full || r.h_order == full / 2));
      CHECK(r.h_order == r.m_order * r.sigma_order);
      CHECK(r.m_order == std::size_t{1} << (n - code.dimension() - 1));
      CHECK(r.h_order == std::size_t{2} << r.h_structure);
      CHECK(r.sigma_elementary_abelian);
    }
  }
}

TEST_CASE("H is recognized through phi and K") {
  const auto z = zetas_of(graph::build_quotient(code_of({"1111"})));
  const auto h = signed_monodromy_group(z);
  vee::Subgroup kernel;
  std::set<SignedPermutation> image;
  for (const auto& x : vee::elements(3)) {
    const auto p = phi(z, x);
    image.insert(p);
    if (signed_perm::is_identity(p)) kernel.push_back(x);
  }
  CHECK(image.size() == h.order());
  CHECK(kernel.size() == 2);
  CHECK(vee::recognize_quotient(3, kernel) == 2);
  const auto tag = compute_K(z);
  CHECK(kernel.back() == (tag == KTag::omega ? vee::omega(3) : vee::negate(vee::omega(3))));
}

TEST_CASE("disjoint unions follow the component rule for K") {
  const auto a = graph::build_quotient(code_of({"1111"}));
  const auto b = graph::flip_color(a, 1);
  REQUIRE(chi0(a) == -chi0(b));
  REQUIRE(chi0(a) != 0);
  const auto mixed = analyze(graph::disjoint_union(a, b));
  CHECK(mixed.chi0 == 0);
  CHECK(mixed.k_tag == KTag::trivial);
  CHECK(mixed.components == 2);
  const auto same = analyze(graph::disjoint_union(a, a));
  CHECK(same.chi0 == chi0(a));
  CHECK(same.k_tag == compute_K(zetas_of(a)));

  try {
    analyze(graph::disjoint_union(graph::build_cubical(4), a));
    FAIL("expected mixed-codes");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::mixed_codes);
  }
}

TEST_CASE("chi0 and orders are gauge and relabeling invariant") {
  std::mt19937 rng(29);
  for (const auto& code : {code_of({"1111"}), code_of({"11110"}), code_of({"11111111"}),
                           code_of({"11110000", "00001111"})}) {
    const auto a = graph::build_quotient(code);
    const auto base = analyze(a);
    auto same = [&](const AnalysisReport& r) {
      return r.chi0 == base.chi0 && r.h_order == base.h_order && r.sigma_order == base.sigma_order &&
             r.m_order == base.m_order;
    };
    for (std::size_t v = 0; v < a.d(); ++v) {
      CHECK(same(analyze(graph::switch_vertex(a, {graph::Side::fermion, v}))));
      CHECK(same(analyze(graph::switch_vertex(a, {graph::Side::boson, v}))));
    }
    for (int trial = 0; trial < 5; ++trial) {
      const auto s = shuffle_indices(a, rng);
      CHECK(graph::validate(s).ok());
      CHECK(same(analyze(s)));
    }
  }
}

TEST_CASE("rainbow relabeling keeps the group structure") {
  const auto a = graph::build_quotient(code_of({"11110"}));
  const auto base = analyze(a);
  const auto r = analyze(graph::relabel_colors(a, {5, 3, 1, 2, 4}));
  CHECK(r.h_order == base.h_order);
  CHECK(r.sigma_order == base.sigma_order);
  CHECK(r.m_order == base.m_order);
  CHECK(r.k_tag == base.k_tag);
  const auto q = graph::build_quotient(code_of({"1111"}));
  CHECK(std::abs(analyze(graph::relabel_colors(q, {2, 1, 4, 3})).chi0) == 1);
}
