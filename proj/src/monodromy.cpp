#include "adinkra/monodromy.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "adinkra/error.hpp"

namespace adinkra::monodromy {

using signed_perm::compose;
using signed_perm::IntMatrix;
using signed_perm::negate;

namespace {

// Bit of the cube coordinate that color c moves; colors may have been relabeled.
std::uint64_t color_coordinate(const graph::Adinkra& a, int c) {
  const int n = a.colors();
  const auto& x = a.fermions().front().word;
  const auto& y = a.bosons()[a.edge(c, 0).boson].word;
  for (int i = 1; i <= n; ++i) {
    const auto e = gf2::BinaryWord::unit(n, i);
    if (a.code().reduce(x ^ e) == y) return e.bits();
  }
  throw Error(Errc::invalid_adinkra, "color " + std::to_string(c) + " does not move a single coordinate");
}

void require(bool condition, const std::string& what) {
  if (!condition) throw Error(Errc::theorem_violation, "theorem check failed: " + what);
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

}  // namespace

GarMatrices gar_matrices(const graph::Adinkra& a) {
  const auto report = graph::validate(a);
  if (!report.ok()) {
    throw Error(Errc::invalid_adinkra, std::string("not an Adinkra (") + graph::to_string(report.violation) +
                                           "): " + report.detail);
  }
  GarMatrices g;
  for (const auto& row : a.edges()) {
    std::vector<std::uint32_t> image(row.size());
    std::vector<std::int8_t> sign(row.size());
    for (std::size_t f = 0; f < row.size(); ++f) {
      image[f] = row[f].boson;
      sign[f] = row[f].dashed ? -1 : 1;
    }
    g.L.emplace_back(std::move(image), std::move(sign));
    g.R.push_back(g.L.back().inverse());
  }
  require(gr_relations_hold(g), "GR(d,N) relations");
  return g;
}

bool gr_relations_hold(const GarMatrices& g) {
  if (g.L.size() != g.R.size() || g.L.empty()) return false;
  const std::size_t d = g.L.front().degree();
  const IntMatrix two_id = IntMatrix::identity(d) * 2;
  const IntMatrix zero(d, d);
  for (std::size_t i = 0; i < g.L.size(); ++i) {
    if (g.R[i] != g.L[i].inverse()) return false;
    for (std::size_t j = i; j < g.L.size(); ++j) {
      const auto& expected = i == j ? two_id : zero;
      const IntMatrix lr = compose(g.L[i], g.R[j]).to_matrix() + compose(g.L[j], g.R[i]).to_matrix();
      const IntMatrix rl = compose(g.R[i], g.L[j]).to_matrix() + compose(g.R[j], g.L[i]).to_matrix();
      if (lr != expected || rl != expected) return false;
    }
  }
  return true;
}

std::vector<SignedPermutation> zeta_generators(const GarMatrices& g) {
  if (g.colors() < 2) throw Error(Errc::out_of_range, "signed monodromy needs N >= 2");
  std::vector<SignedPermutation> zetas;
  for (int j = 1; j < g.colors(); ++j) {
    zetas.push_back(compose(g.R[0], g.L[static_cast<std::size_t>(j)]));
  }
  return zetas;
}

bool satisfies_vee_relations(const std::vector<SignedPermutation>& zetas) {
  if (zetas.empty()) return false;
  const auto minus_id = SignedPermutation::minus_identity(zetas.front().degree());
  for (std::size_t i = 0; i < zetas.size(); ++i) {
    if (compose(zetas[i], zetas[i]) != minus_id) return false;
    for (std::size_t j = i + 1; j < zetas.size(); ++j) {
      if (compose(zetas[i], zetas[j]) != negate(compose(zetas[j], zetas[i]))) return false;
    }
  }
  return true;
}

SignedGroup signed_monodromy_group(const std::vector<SignedPermutation>& zetas) {
  return signed_perm::closure(zetas);
}

SignedPermutation phi(const std::vector<SignedPermutation>& zetas, const vee::VeeElement& x) {
  if (zetas.empty() || static_cast<std::size_t>(x.rank) != zetas.size()) {
    throw Error(Errc::rank_mismatch, "element rank must equal the number of ζ generators");
  }
  const std::size_t d = zetas.front().degree();
  auto out = x.negative ? SignedPermutation::minus_identity(d) : SignedPermutation::identity(d);
  for (int i = 1; i <= x.rank; ++i) {
    if (x.exponent(i)) out = compose(out, zetas[static_cast<std::size_t>(i - 1)]);
  }
  return out;
}

SignedPermutation phi_omega(const std::vector<SignedPermutation>& zetas) {
  if (zetas.empty()) throw Error(Errc::out_of_range, "no ζ generators");
  const int n = static_cast<int>(zetas.size());
  return phi(zetas, vee::omega(n));
}

const char* to_string(KTag k) noexcept {
  switch (k) {
    case KTag::trivial: return "trivial";
    case KTag::omega: return "omega";
    case KTag::minus_omega: return "minus-omega";
  }
  return "unknown";
}

KTag parse_k_tag(const std::string& s) {
  if (s == "trivial") return KTag::trivial;
  if (s == "omega") return KTag::omega;
  if (s == "minus-omega") return KTag::minus_omega;
  throw Error(Errc::parse_error, "unknown K tag '" + s + "'");
}

KTag compute_K(const std::vector<SignedPermutation>& zetas) {
  const auto w = phi_omega(zetas);
  if (signed_perm::is_identity(w)) return KTag::omega;
  if (signed_perm::is_minus_identity(w)) return KTag::minus_omega;
  return KTag::trivial;
}

int chi0_of(KTag k) noexcept {
  switch (k) {
    case KTag::omega: return 1;
    case KTag::minus_omega: return -1;
    case KTag::trivial: return 0;
  }
  return 0;
}

int chi0(const graph::Adinkra& a) { return chi0_of(compute_K(zeta_generators(gar_matrices(a)))); }

SignedGroup sigma_kernel(const SignedGroup& h) {
  SignedGroup sigma{h.degree, {}, {}};
  for (const auto& x : h.elements) {
    const auto p = signed_perm::abs(x);
    bool trivial = true;
    for (std::size_t j = 0; j < p.size() && trivial; ++j) trivial = p[j] == j;
    if (trivial) sigma.elements.push_back(x);
  }
  for (const auto& x : sigma.elements) {
    if (!signed_perm::is_identity(x)) sigma.generators.push_back(x);
  }
  return sigma;
}

bool is_elementary_abelian(const std::vector<SignedPermutation>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!signed_perm::is_identity(compose(elements[i], elements[i]))) return false;
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (compose(elements[i], elements[j]) != compose(elements[j], elements[i])) return false;
    }
  }
  return true;
}

UnsignedGroup unsigned_monodromy(const SignedGroup& h) {
  std::set<signed_perm::Permutation> images;
  for (const auto& x : h.elements) images.insert(signed_perm::abs(x));
  return {{images.begin(), images.end()}};
}

bool is_elementary_abelian(const UnsignedGroup& m) {
  for (std::size_t i = 0; i < m.elements.size(); ++i) {
    const auto& a = m.elements[i];
    const auto sq = signed_perm::compose(a, a);
    for (std::size_t x = 0; x < sq.size(); ++x) {
      if (sq[x] != x) return false;
    }
    for (std::size_t j = i + 1; j < m.elements.size(); ++j) {
      const auto& b = m.elements[j];
      if (signed_perm::compose(a, b) != signed_perm::compose(b, a)) return false;
    }
  }
  return true;
}

bool acts_freely_and_transitively(const UnsignedGroup& m, std::size_t degree) {
  if (m.order() != degree) return false;
  for (std::size_t f = 0; f < degree; ++f) {
    std::vector<bool> hit(degree, false);
    for (const auto& p : m.elements) {
      if (hit[p[f]]) return false;
      hit[p[f]] = true;
    }
  }
  return true;
}

GenusAndD genus_and_d(int n, int k) {
  if (n < 2 || k < 0 || k > n - 1 || n - k - 1 > 62) {
    throw Error(Errc::out_of_range, "genus needs N >= 2 and 0 <= k <= N-1");
  }
  const std::size_t d = std::size_t{1} << (n - k - 1);
  const long numerator = static_cast<long>(n - 4) * static_cast<long>(d);
  if (numerator % 4 != 0) {
    throw Error(Errc::non_integral_genus, "genus 1 + (N-4)d/4 is not an integer for N=" +
                                              std::to_string(n) + ", k=" + std::to_string(k));
  }
  return {d, 1 + numerator / 4};
}

std::optional<RelationWitness> find_relation(const GarMatrices& g) {
  const int n = g.colors();
  if (n < 2 || n % 2 != 0) return std::nullopt;
  SignedPermutation product = g.R[0];
  std::string word = "R1";
  for (int i = 2; i <= n; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    product = compose(product, i % 2 == 0 ? g.L[idx] : g.R[idx]);
    word += (i % 2 == 0 ? " L" : " R") + std::to_string(i);
  }
  if (signed_perm::is_identity(product)) return RelationWitness{1, word};
  if (signed_perm::is_minus_identity(product)) return RelationWitness{-1, word};
  return std::nullopt;
}

AnalysisReport analyze(const graph::Adinkra& a) {
  const int n = a.colors();
  if (n < 2) throw Error(Errc::out_of_range, "analysis needs N >= 2");
  const auto& code = a.code();
  for (const auto& other : a.block_codes()) {
    if (!other.same_span(code)) {
      throw Error(Errc::mixed_codes, "analysis needs every component to share one code");
    }
  }

  const auto g = gar_matrices(a);
  const auto zetas = zeta_generators(g);
  require(satisfies_vee_relations(zetas), "ζ_j satisfy the G_{N-1} relations");
  const auto h = signed_monodromy_group(zetas);
  const std::size_t d = a.d();
  require(h.contains(SignedPermutation::minus_identity(d)), "-1 lies in H");

  AnalysisReport r;
  r.n = n;
  r.k = code.dimension();
  r.d = d;
  r.h1_in_code = gf2::contains(code, gf2::BinaryWord::all_ones(n));
  r.genus = genus_and_d(n, r.k).genus;
  r.k_tag = compute_K(zetas);
  r.chi0 = chi0_of(r.k_tag);
  r.h_order = h.order();
  r.h_structure = r.k_tag == KTag::trivial ? n - 1 : n - 2;
  const auto sigma = sigma_kernel(h);
  r.sigma_order = sigma.order();
  r.sigma_elementary_abelian = is_elementary_abelian(sigma.elements);
  const auto m = unsigned_monodromy(h);
  r.m_order = m.order();
  r.relation_witness = find_relation(g);
  for (const auto& gen : code.generators()) r.generators.push_back(gen.to_string());
  r.dashing = a.dashing();
  for (int i = 1; i <= n; ++i) r.rainbow_original.push_back(i);
  r.rainbow_applied = r.rainbow_original;
  r.components = graph::component_count(a);

  const std::size_t code_size = std::size_t{1} << r.k;
  const std::size_t kernel_size = r.k_tag == KTag::trivial ? 1 : 2;
  require(r.h_order == r.m_order * r.sigma_order, "|H| = |M|·|Σ|");
  require(r.m_order == pow2(n - r.k - 1), "|M| = 2^{N-k-1}");
  require(r.h_order == pow2(r.h_structure + 1), "|H| = |G_m|");
  require(r.sigma_elementary_abelian, "Σ is elementary abelian");
  require(r.sigma_order * kernel_size == 2 * code_size, "|Σ| = 2|C|/|K|");
  require(is_elementary_abelian(m), "M is elementary abelian");
  require((r.chi0 == 0) == (r.k_tag == KTag::trivial), "χ0 = 0 iff K trivial");

  // φ: G_{N-1} -> H must be onto with kernel exactly K.
  const int rank = n - 1;
  vee::Subgroup kernel;
  std::set<SignedPermutation> image;
  for (const auto& x : vee::elements(rank)) {
    auto y = phi(zetas, x);
    if (signed_perm::is_identity(y)) kernel.push_back(x);
    image.insert(std::move(y));
  }
  vee::Subgroup expected_kernel{vee::VeeElement::one(rank)};
  if (r.k_tag == KTag::omega) expected_kernel.push_back(vee::omega(rank));
  if (r.k_tag == KTag::minus_omega) expected_kernel.push_back(vee::negate(vee::omega(rank)));
  std::sort(expected_kernel.begin(), expected_kernel.end());
  require(kernel == expected_kernel, "ker φ = K");
  require(std::equal(image.begin(), image.end(), h.elements.begin(), h.elements.end()), "φ is onto H");
  require(vee::recognize_quotient(rank, kernel) == r.h_structure, "G_{N-1}/K ≅ G_m");

  if (r.components == 1) {
    require(acts_freely_and_transitively(m, d), "M acts freely and transitively on fermions");
    // abs φ(ω) is translation by Σ_j (e_1 + e_{j+1}) in color coordinates, which is h1 for even N.
    std::uint64_t shift = 0;
    for (int j = 1; j < n; ++j) shift ^= color_coordinate(a, 1) ^ color_coordinate(a, j + 1);
    std::unordered_map<std::uint64_t, std::size_t> fermion_index;
    for (std::size_t f = 0; f < d; ++f) fermion_index.emplace(a.fermions()[f].word.bits(), f);
    const auto w = signed_perm::abs(phi_omega(zetas));
    for (std::size_t f = 0; f < d; ++f) {
      const auto target = code.reduce(gf2::BinaryWord(n, a.fermions()[f].word.bits() ^ shift));
      const auto it = fermion_index.find(target.bits());
      require(it != fermion_index.end() && w[f] == it->second, "abs φ(ω) is translation by h1");
    }

    if (r.h1_in_code) {
      require(r.k_tag != KTag::trivial, "h1 ∈ C gives K = {1,±ω}");
      require(r.h_order == pow2(n - 1), "h1 ∈ C gives H ≅ G_{N-2}");
      require(r.sigma_order == pow2(r.k), "h1 ∈ C gives Σ ≅ F_2^k");
    } else {
      require(r.k_tag == KTag::trivial, "h1 ∉ C gives K = {1}");
      require(r.h_order == pow2(n), "h1 ∉ C gives H ≅ G_{N-1}");
      require(r.sigma_order == pow2(r.k + 1), "h1 ∉ C gives Σ ≅ F_2^{k+1}");
    }
    if (n % 2 == 0) {
      require(r.relation_witness.has_value() == r.h1_in_code, "relation exists iff h1 ∈ C");
    }
  } else {
    // K of a disjoint union: a common component K survives, mixed signs leave K trivial.
    std::set<KTag> tags;
    for (const auto& part : graph::split_components(a)) tags.insert(analyze(part).k_tag);
    const KTag expected = tags.size() == 1 ? *tags.begin() : KTag::trivial;
    require(r.k_tag == expected, "K of a disconnected Adinkra follows its components");
  }
  return r;
}

}  // namespace adinkra::monodromy
