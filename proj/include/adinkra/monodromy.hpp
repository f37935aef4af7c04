#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adinkra/graph.hpp"
#include "adinkra/signed_perm.hpp"
#include "adinkra/vee.hpp"

namespace adinkra::monodromy {

using signed_perm::SignedGroup;
using signed_perm::SignedPermutation;

// L[i-1] is λ_i (fermions -> bosons), R[i-1] is ρ_i (bosons -> fermions).
struct GarMatrices {
  std::vector<SignedPermutation> L;
  std::vector<SignedPermutation> R;

  int colors() const noexcept { return static_cast<int>(L.size()); }
};

GarMatrices gar_matrices(const graph::Adinkra& a);

// R_i = L_i^{-1}, and L_iR_j + L_jR_i = R_iL_j + R_jL_i = 2δ_ij·I as integer matrices.
bool gr_relations_hold(const GarMatrices& g);

// ζ_j = ρ_1∘λ_{j+1}, j = 1..N-1.
std::vector<SignedPermutation> zeta_generators(const GarMatrices& g);

// ζ_j² = -1, ζ_iζ_j = -ζ_jζ_i, and -1 central: the defining relations of G_{N-1}.
bool satisfies_vee_relations(const std::vector<SignedPermutation>& zetas);

SignedGroup signed_monodromy_group(const std::vector<SignedPermutation>& zetas);

// φ: G_{N-1} -> H, g_j -> ζ_j, -1 -> -identity.
SignedPermutation phi(const std::vector<SignedPermutation>& zetas, const vee::VeeElement& x);
// φ(ω) = ζ_1 ζ_2 ··· ζ_{N-1}.
SignedPermutation phi_omega(const std::vector<SignedPermutation>& zetas);

enum class KTag { trivial, omega, minus_omega };

const char* to_string(KTag k) noexcept;
KTag parse_k_tag(const std::string& s);

KTag compute_K(const std::vector<SignedPermutation>& zetas);
int chi0_of(KTag k) noexcept;
int chi0(const graph::Adinkra& a);

// Elements of H whose unsigned part is the identity.
SignedGroup sigma_kernel(const SignedGroup& h);
bool is_elementary_abelian(const std::vector<SignedPermutation>& elements);

struct UnsignedGroup {
  std::vector<signed_perm::Permutation> elements;  // sorted

  std::size_t order() const noexcept { return elements.size(); }
};

UnsignedGroup unsigned_monodromy(const SignedGroup& h);
bool is_elementary_abelian(const UnsignedGroup& m);
// Every fermion is reached from every fermion by exactly one element.
bool acts_freely_and_transitively(const UnsignedGroup& m, std::size_t degree);

struct GenusAndD {
  std::size_t d;
  long genus;
};

// d = 2^{N-k-1}, genus = 1 + (N-4)·d/4.
GenusAndD genus_and_d(int n, int k);

struct RelationWitness {
  int sign;          // the product equals sign·identity
  std::string word;  // "R1 L2 R3 L4"

  friend bool operator==(const RelationWitness&, const RelationWitness&) = default;
};

// R_1L_2R_3L_4···R_{N-1}L_N if it is ±identity; none for odd N.
std::optional<RelationWitness> find_relation(const GarMatrices& g);

struct AnalysisReport {
  int n = 0;
  int k = 0;
  std::size_t d = 0;
  bool h1_in_code = false;
  long genus = 0;
  KTag k_tag = KTag::trivial;
  int chi0 = 0;
  std::size_t h_order = 0;
  int h_structure = 0;  // H ≅ G_{h_structure}
  std::size_t sigma_order = 0;
  bool sigma_elementary_abelian = false;
  std::size_t m_order = 0;
  std::optional<RelationWitness> relation_witness;

  std::vector<std::string> generators;
  std::vector<int> dashing;
  std::vector<int> rainbow_original;
  std::vector<int> rainbow_applied;
  std::size_t components = 1;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// Computes every report field and checks the structure theorems along the
// way; any failed check throws Errc::theorem_violation.
AnalysisReport analyze(const graph::Adinkra& a);

}  // namespace adinkra::monodromy
