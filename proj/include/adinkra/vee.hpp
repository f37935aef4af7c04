#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace adinkra::vee {

inline constexpr int kMaxRank = 30;

// (-1)^negative · g_1^{x_1} ··· g_n^{x_n}; exponent x_i lives in bit (i-1).
// The encoding is the unique normal form, so equality is field equality.
struct VeeElement {
  int rank = 0;
  bool negative = false;
  std::uint32_t exponents = 0;

  static VeeElement one(int rank) { return {rank, false, 0}; }
  static VeeElement minus_one(int rank) { return {rank, true, 0}; }
  // g_i, 1-based.
  static VeeElement generator(int rank, int i);

  bool exponent(int i) const { return (exponents >> (i - 1)) & 1u; }
  // Dense index in [0, 2^{n+1}): sign bit above the exponent bits.
  std::uint32_t index() const { return (static_cast<std::uint32_t>(negative) << rank) | exponents; }
  static VeeElement from_index(int rank, std::uint32_t index);

  // "+1", "-1", "+g1 g3", "-g2".
  std::string to_string() const;

  friend bool operator==(const VeeElement&, const VeeElement&) = default;
  friend auto operator<=>(const VeeElement&, const VeeElement&) = default;
};

VeeElement multiply(const VeeElement& a, const VeeElement& b);
VeeElement negate(const VeeElement& a);
VeeElement inverse(const VeeElement& a);
VeeElement power(const VeeElement& a, unsigned e);
std::size_t element_order(const VeeElement& a);

// Parity of the reordering sign picked up by g^x · g^y.
int sign_cocycle(std::uint32_t x, std::uint32_t y);

std::uint64_t group_order(int n);
std::vector<VeeElement> elements(int n);

VeeElement omega(int n);
// +1 or -1, computed by multiplication.
int omega_squared(int n);
// The n mod 4 pattern: +1 for n ≡ 0,3 and -1 for n ≡ 1,2.
int omega_squared_closed_form(int n);

bool commutes(const VeeElement& a, const VeeElement& b);
// Brute force against the generators.
std::vector<VeeElement> center(int n);
std::vector<VeeElement> center_closed_form(int n);
std::vector<VeeElement> conjugacy_class(const VeeElement& a);

std::vector<int> abs_vee(const VeeElement& a);

// A subgroup as a sorted element list.
using Subgroup = std::vector<VeeElement>;

inline constexpr int kMaxSubgroupRank = 4;
// Every subgroup by exhaustive generation; n <= 4.
std::vector<Subgroup> all_subgroups(int n);
bool is_normal(int n, const Subgroup& s);
// Exhaustive: all subgroups filtered by normality; sorted.
std::vector<Subgroup> normal_subgroups(int n);
// Preimages of every subspace of F_2^n, {1}, and {1,±ω} when n ≡ 3 mod 4; sorted.
std::vector<Subgroup> normal_subgroups_closed_form(int n);

Subgroup subgroup_generated(int n, const std::vector<VeeElement>& gens);

// Rank m of the Vee group isomorphic to G_n / K for K in {{1}, {1,ω}, {1,-ω}}.
// The ±ω cases build an explicit epimorphism G_n -> G_{n-1} and check its kernel.
int recognize_quotient(int n, const Subgroup& kernel);

// Histogram element order -> count.
std::map<std::size_t, std::size_t> order_profile(int n);

}  // namespace adinkra::vee
