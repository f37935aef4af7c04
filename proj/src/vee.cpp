#include "adinkra/vee.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "adinkra/error.hpp"

namespace adinkra::vee {

namespace {

void require_rank(int n) {
  if (n < 0 || n > kMaxRank) throw Error(Errc::rank_too_large, "Vee group rank out of range");
}

void require_same_rank(const VeeElement& a, const VeeElement& b) {
  if (a.rank != b.rank) {
    throw Error(Errc::rank_mismatch, "elements of G_" + std::to_string(a.rank) + " and G_" +
                                         std::to_string(b.rank));
  }
}

std::uint32_t full_mask(int n) { return n == 0 ? 0u : (~0u >> (32 - n)); }

using Mask = std::uint64_t;

Mask mask_of(const Subgroup& s) {
  Mask m = 0;
  for (const auto& e : s) m |= Mask{1} << e.index();
  return m;
}

Subgroup subgroup_of(int n, Mask m) {
  Subgroup s;
  for (std::uint32_t i = 0; i < 64; ++i) {
    if (m >> i & 1) s.push_back(VeeElement::from_index(n, i));
  }
  std::sort(s.begin(), s.end());
  return s;
}

// Closure of a finite subset under multiplication (finite, so this is a subgroup).
Mask close(int n, Mask m) {
  m |= Mask{1} << VeeElement::one(n).index();
  Mask frontier = m;
  while (frontier) {
    Mask added = 0;
    for (std::uint32_t i = 0; i < 64; ++i) {
      if (!(frontier >> i & 1)) continue;
      const auto a = VeeElement::from_index(n, i);
      for (std::uint32_t j = 0; j < 64; ++j) {
        if (!(m >> j & 1)) continue;
        const auto b = VeeElement::from_index(n, j);
        for (const auto& p : {multiply(a, b), multiply(b, a)}) {
          const Mask bit = Mask{1} << p.index();
          if (!(m & bit)) {
            m |= bit;
            added |= bit;
          }
        }
      }
    }
    frontier = added;
  }
  return m;
}

}  // namespace

VeeElement VeeElement::generator(int rank, int i) {
  require_rank(rank);
  if (i < 1 || i > rank) throw Error(Errc::out_of_range, "generator index out of range");
  return {rank, false, 1u << (i - 1)};
}

VeeElement VeeElement::from_index(int rank, std::uint32_t index) {
  return {rank, ((index >> rank) & 1u) != 0, index & full_mask(rank)};
}

std::string VeeElement::to_string() const {
  std::string s = negative ? "-" : "+";
  if (exponents == 0) return s + "1";
  bool first = true;
  for (int i = 1; i <= rank; ++i) {
    if (!exponent(i)) continue;
    if (!first) s += ' ';
    s += "g" + std::to_string(i);
    first = false;
  }
  return s;
}

int sign_cocycle(std::uint32_t x, std::uint32_t y) {
  // Moving each g_j of the right factor left past every higher-indexed g_i of
  // the left factor costs one sign each; each shared generator then squares to -1.
  int swaps = 0;
  for (std::uint32_t rest = y; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(j >= 31 ? 0u : (x >> (j + 1)));
  }
  return (swaps + std::popcount(x & y)) & 1;
}

VeeElement multiply(const VeeElement& a, const VeeElement& b) {
  require_same_rank(a, b);
  const bool sign = (a.negative != b.negative) != (sign_cocycle(a.exponents, b.exponents) != 0);
  return {a.rank, sign, a.exponents ^ b.exponents};
}

VeeElement negate(const VeeElement& a) { return {a.rank, !a.negative, a.exponents}; }

VeeElement inverse(const VeeElement& a) {
  // a · a = ±1 for every element, so the inverse is ±a.
  const auto sq = multiply(a, a);
  return sq.negative ? negate(a) : a;
}

VeeElement power(const VeeElement& a, unsigned e) {
  auto out = VeeElement::one(a.rank);
  for (unsigned i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

std::size_t element_order(const VeeElement& a) {
  std::size_t m = 1;
  for (auto p = a; p != VeeElement::one(a.rank); p = multiply(p, a)) ++m;
  return m;
}

std::uint64_t group_order(int n) {
  require_rank(n);
  return std::uint64_t{1} << (n + 1);
}

std::vector<VeeElement> elements(int n) {
  if (n < 0 || n > 20) throw Error(Errc::rank_too_large, "element listing limited to rank 20");
  std::vector<VeeElement> out;
  out.reserve(static_cast<std::size_t>(group_order(n)));
  for (std::uint32_t i = 0; i < (1u << (n + 1)); ++i) out.push_back(VeeElement::from_index(n, i));
  std::sort(out.begin(), out.end());
  return out;
}

VeeElement omega(int n) {
  require_rank(n);
  if (n < 1) throw Error(Errc::out_of_range, "omega needs rank >= 1");
  auto w = VeeElement::one(n);
  for (int i = 1; i <= n; ++i) w = multiply(w, VeeElement::generator(n, i));
  return w;
}

int omega_squared(int n) {
  const auto w = omega(n);
  const auto sq = multiply(w, w);
  if (sq.exponents != 0) throw Error(Errc::theorem_violation, "omega squared is not central ±1");
  return sq.negative ? -1 : 1;
}

int omega_squared_closed_form(int n) { return (n % 4 == 0 || n % 4 == 3) ? 1 : -1; }

bool commutes(const VeeElement& a, const VeeElement& b) { return multiply(a, b) == multiply(b, a); }

std::vector<VeeElement> center(int n) {
  std::vector<VeeElement> out;
  for (const auto& x : elements(n)) {
    bool central = true;
    for (int i = 1; i <= n && central; ++i) central = commutes(x, VeeElement::generator(n, i));
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<VeeElement> center_closed_form(int n) {
  std::vector<VeeElement> out{VeeElement::one(n), VeeElement::minus_one(n)};
  if (n % 2 == 1) {
    out.push_back(omega(n));
    out.push_back(negate(omega(n)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VeeElement> conjugacy_class(const VeeElement& a) {
  std::set<VeeElement> cls{a};
  std::vector<VeeElement> frontier{a};
  while (!frontier.empty()) {
    std::vector<VeeElement> next;
    for (const auto& x : frontier) {
      for (int i = 1; i <= a.rank; ++i) {
        const auto g = VeeElement::generator(a.rank, i);
        const auto c = multiply(multiply(g, x), inverse(g));
        if (cls.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return {cls.begin(), cls.end()};
}

std::vector<int> abs_vee(const VeeElement& a) {
  std::vector<int> v(static_cast<std::size_t>(a.rank));
  for (int i = 1; i <= a.rank; ++i) v[static_cast<std::size_t>(i - 1)] = a.exponent(i) ? 1 : 0;
  return v;
}

Subgroup subgroup_generated(int n, const std::vector<VeeElement>& gens) {
  if (n > kMaxSubgroupRank) throw Error(Errc::rank_too_large, "subgroup machinery limited to rank 4");
  Mask m = 0;
  for (const auto& g : gens) {
    if (g.rank != n) throw Error(Errc::rank_mismatch, "generator rank differs");
    m |= Mask{1} << g.index();
  }
  return subgroup_of(n, close(n, m));
}

std::vector<Subgroup> all_subgroups(int n) {
  if (n < 0 || n > kMaxSubgroupRank) {
    throw Error(Errc::rank_too_large, "subgroup enumeration limited to rank 4");
  }
  const std::uint32_t size = 1u << (n + 1);
  std::set<Mask> seen{close(n, 0)};
  std::vector<Mask> frontier{*seen.begin()};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask s : frontier) {
      for (std::uint32_t i = 0; i < size; ++i) {
        if (s >> i & 1) continue;
        const Mask t = close(n, s | (Mask{1} << i));
        if (seen.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (Mask m : seen) out.push_back(subgroup_of(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal(int n, const Subgroup& s) {
  const Mask m = mask_of(s);
  for (const auto& x : s) {
    for (int i = 1; i <= n; ++i) {
      const auto g = VeeElement::generator(n, i);
      const auto c = multiply(multiply(g, x), inverse(g));
      if (!(m >> c.index() & 1)) return false;
    }
  }
  return true;
}

std::vector<Subgroup> normal_subgroups(int n) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(n)) {
    if (is_normal(n, s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<Subgroup> normal_subgroups_closed_form(int n) {
  if (n < 0 || n > kMaxSubgroupRank) {
    throw Error(Errc::rank_too_large, "subgroup enumeration limited to rank 4");
  }
  // Subspaces of F_2^n as sets of exponent masks.
  std::set<std::set<std::uint32_t>> subspaces{{0u}};
  std::vector<std::set<std::uint32_t>> frontier{{0u}};
  while (!frontier.empty()) {
    std::vector<std::set<std::uint32_t>> next;
    for (const auto& v : frontier) {
      for (std::uint32_t w = 1; w < (1u << n); ++w) {
        if (v.count(w)) continue;
        std::set<std::uint32_t> ext = v;
        for (std::uint32_t u : v) ext.insert(u ^ w);
        if (subspaces.insert(ext).second) next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& v : subspaces) {
    Subgroup s;
    for (std::uint32_t x : v) {
      s.push_back({n, false, x});
      s.push_back({n, true, x});
    }
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  out.push_back({VeeElement::one(n)});
  if (n % 4 == 3) {
    for (const auto& w : {omega(n), negate(omega(n))}) {
      Subgroup s{VeeElement::one(n), w};
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int recognize_quotient(int n, const Subgroup& kernel) {
  require_rank(n);
  Subgroup k = kernel;
  std::sort(k.begin(), k.end());
  if (k == Subgroup{VeeElement::one(n)}) return n;

  if (n < 3 || n % 4 != 3 || k.size() != 2 || k.front() != VeeElement::one(n)) {
    throw Error(Errc::unsupported_kernel, "quotient recognition supports {1}, {1,ω}, {1,-ω} with n ≡ 3 mod 4");
  }
  const auto w = omega(n);
  const bool minus = k.back() == negate(w);
  if (!minus && k.back() != w) {
    throw Error(Errc::unsupported_kernel, "kernel is not {1,ω} or {1,-ω}");
  }

  // g_i -> g_i for i < n; g_n -> ±(g_1···g_{n-1})^{-1}, which sends the kernel's ±ω to 1.
  const int m = n - 1;
  std::vector<VeeElement> images;
  for (int i = 1; i <= m; ++i) images.push_back(VeeElement::generator(m, i));
  VeeElement last = inverse(omega(m));
  if (minus) last = negate(last);
  images.push_back(last);

  // The images must satisfy the defining relations of G_n for the map to exist.
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (multiply(images[i], images[i]) != VeeElement::minus_one(m)) {
      throw Error(Errc::theorem_violation, "image generator does not square to -1");
    }
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (multiply(images[i], images[j]) != negate(multiply(images[j], images[i]))) {
        throw Error(Errc::theorem_violation, "image generators do not anticommute");
      }
    }
  }

  auto map = [&](const VeeElement& x) {
    auto y = x.negative ? VeeElement::minus_one(m) : VeeElement::one(m);
    for (int i = 1; i <= n; ++i) {
      if (x.exponent(i)) y = multiply(y, images[static_cast<std::size_t>(i - 1)]);
    }
    return y;
  };
  Subgroup found_kernel;
  std::set<VeeElement> image;
  for (const auto& x : elements(n)) {
    const auto y = map(x);
    image.insert(y);
    if (y == VeeElement::one(m)) found_kernel.push_back(x);
  }
  std::sort(found_kernel.begin(), found_kernel.end());
  if (found_kernel != k || image.size() != group_order(m)) {
    throw Error(Errc::theorem_violation, "explicit quotient map does not have the expected kernel");
  }
  return m;
}

std::map<std::size_t, std::size_t> order_profile(int n) {
  std::map<std::size_t, std::size_t> profile;
  for (const auto& x : elements(n)) ++profile[element_order(x)];
  return profile;
}

}  // namespace adinkra::vee
