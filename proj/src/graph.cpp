#include "adinkra/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "adinkra/error.hpp"

namespace adinkra::graph {

using gf2::BinaryWord;
using gf2::LinearCode;

namespace {

constexpr std::array<const char*, kMaxColors> kColorNames = {
    "red", "green", "blue", "orange", "purple", "cyan", "magenta", "brown", "gold", "gray"};

void require_color(const Adinkra& a, int color) {
  if (color < 1 || color > a.colors()) {
    throw Error(Errc::out_of_range, "color " + std::to_string(color) + " outside 1.." +
                                        std::to_string(a.colors()));
  }
}

// Inverse of the color-c matching: boson -> fermion.
std::vector<std::uint32_t> boson_to_fermion(const Adinkra& a, int color) {
  std::vector<std::uint32_t> inv(a.d(), 0);
  const auto& row = a.edges()[static_cast<std::size_t>(color - 1)];
  for (std::size_t f = 0; f < row.size(); ++f) inv[row[f].boson] = static_cast<std::uint32_t>(f);
  return inv;
}

Adinkra quotient_skeleton(const LinearCode& code, bool cube_dashing) {
  const int n = code.length();
  if (n < 2 || n > kMaxColors) {
    throw Error(Errc::out_of_range, "number of colors must be in [2, 10], got " + std::to_string(n));
  }
  std::vector<Vertex> bosons;
  std::vector<Vertex> fermions;
  std::unordered_map<std::uint64_t, std::uint32_t> boson_index;
  for (const auto& rep : gf2::coset_representatives(code)) {
    if (gf2::weight(rep) % 2 == 0) {
      boson_index.emplace(rep.bits(), static_cast<std::uint32_t>(bosons.size()));
      bosons.push_back({rep, 0});
    } else {
      fermions.push_back({rep, 0});
    }
  }
  std::vector<std::vector<Edge>> edges(static_cast<std::size_t>(n));
  for (int c = 1; c <= n; ++c) {
    auto& row = edges[static_cast<std::size_t>(c - 1)];
    row.reserve(fermions.size());
    for (const auto& f : fermions) {
      const auto target = code.reduce(f.word ^ BinaryWord::unit(n, c));
      bool dashed = false;
      if (cube_dashing) {
        // Coordinates 1..c-1 sit above the bit of coordinate c.
        dashed = std::popcount(f.word.bits() >> (n - c + 1)) % 2 != 0;
      }
      row.push_back({boson_index.at(target.bits()), dashed});
    }
  }
  return Adinkra(n, {code}, std::move(bosons), std::move(fermions), std::move(edges));
}

}  // namespace

Adinkra::Adinkra(int colors, std::vector<LinearCode> block_codes, std::vector<Vertex> bosons,
                 std::vector<Vertex> fermions, std::vector<std::vector<Edge>> edges)
    : colors_(colors),
      block_codes_(std::move(block_codes)),
      bosons_(std::move(bosons)),
      fermions_(std::move(fermions)),
      edges_(std::move(edges)) {
  if (block_codes_.empty()) throw Error(Errc::invalid_adinkra, "an Adinkra needs at least one block code");
}

const Edge& Adinkra::edge(int color, std::size_t fermion) const {
  require_color(*this, color);
  return edges_.at(static_cast<std::size_t>(color - 1)).at(fermion);
}

std::size_t Adinkra::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& row : edges_) n += row.size();
  return n;
}

std::vector<int> Adinkra::dashing() const {
  std::vector<int> bits;
  bits.reserve(edge_count());
  for (const auto& row : edges_) {
    for (const auto& e : row) bits.push_back(e.dashed ? 1 : 0);
  }
  return bits;
}

Adinkra Adinkra::with_dashing(const std::vector<int>& bits) const {
  if (bits.size() != edge_count()) {
    throw Error(Errc::length_mismatch, "dashing has " + std::to_string(bits.size()) +
                                           " bits for " + std::to_string(edge_count()) + " edges");
  }
  Adinkra out = *this;
  std::size_t i = 0;
  for (auto& row : out.edges_) {
    for (auto& e : row) {
      if (bits[i] != 0 && bits[i] != 1) throw Error(Errc::parse_error, "dash bits must be 0 or 1");
      e.dashed = bits[i++] == 1;
    }
  }
  return out;
}

Adinkra build_cubical(int n) {
  if (n < 2 || n > kMaxColors) {
    throw Error(Errc::out_of_range, "number of colors must be in [2, 10], got " + std::to_string(n));
  }
  return quotient_skeleton(LinearCode::trivial(n), true);
}

Adinkra build_chromotopology(const LinearCode& code) {
  if (gf2::classify_code(code) == gf2::ParityClass::odd) {
    throw Error(Errc::not_even, "code has odd-weight words; the quotient is not bipartite");
  }
  return quotient_skeleton(code, false);
}

Adinkra build_quotient(const LinearCode& code) {
  if (gf2::classify_code(code) != gf2::ParityClass::doubly_even) {
    throw Error(Errc::not_doubly_even,
                "code is not doubly even: every codeword weight must be a multiple of 4");
  }
  const Adinkra skeleton = quotient_skeleton(code, false);
  const auto solution = solve_odd_dashing(skeleton);
  if (!solution.feasible) throw Error(Errc::infeasible, "no odd-dashing exists for this quotient");
  return skeleton.with_dashing(solution.dashing);
}

std::vector<TwoColorCycle> two_colored_cycles(const Adinkra& a, int color_a, int color_b) {
  require_color(a, color_a);
  require_color(a, color_b);
  if (color_a == color_b) throw Error(Errc::equal_colors, "a 2-colored cycle needs two distinct colors");
  const auto back_b = boson_to_fermion(a, color_b);
  const auto& row_a = a.edges()[static_cast<std::size_t>(color_a - 1)];
  std::vector<bool> seen(a.d(), false);
  std::vector<TwoColorCycle> cycles;
  for (std::size_t f0 = 0; f0 < a.d(); ++f0) {
    if (seen[f0]) continue;
    const std::uint32_t b0 = row_a[f0].boson;
    const std::uint32_t f1 = back_b[b0];
    const std::uint32_t b1 = row_a[f1].boson;
    if (f1 == f0 || back_b[b1] != f0 || seen[f1]) {
      throw Error(Errc::invalid_adinkra, "colors " + std::to_string(color_a) + "," +
                                             std::to_string(color_b) + " do not form 4-cycles");
    }
    seen[f0] = seen[f1] = true;
    cycles.push_back({color_a,
                      color_b,
                      {VertexRef{Side::fermion, f0}, VertexRef{Side::boson, b0},
                       VertexRef{Side::fermion, f1}, VertexRef{Side::boson, b1}},
                      {EdgeId{color_a, f0}, EdgeId{color_b, f1}, EdgeId{color_a, f1},
                       EdgeId{color_b, f0}}});
  }
  return cycles;
}

DashingSolution solve_odd_dashing(const Adinkra& a) {
  DashingSolution out;
  for (int i = 1; i <= a.colors(); ++i) {
    for (int j = i + 1; j <= a.colors(); ++j) {
      auto cs = two_colored_cycles(a, i, j);
      out.cycles.insert(out.cycles.end(), cs.begin(), cs.end());
    }
  }
  const std::size_t vars = a.edge_count();
  const std::size_t eqs = out.cycles.size();
  // Row layout: [edge variables | rhs | which original equations were combined].
  const std::size_t rhs = vars;
  const std::size_t width = vars + 1 + eqs;
  std::vector<boost::dynamic_bitset<>> rows(eqs, boost::dynamic_bitset<>(width));
  for (std::size_t r = 0; r < eqs; ++r) {
    for (const auto& e : out.cycles[r].edges) rows[r].flip(edge_index(a, e));
    rows[r].set(rhs);
    rows[r].set(rhs + 1 + r);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < vars && rank < eqs; ++col) {
    std::size_t p = rank;
    while (p < eqs && !rows[p].test(col)) ++p;
    if (p == eqs) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = 0; r < eqs; ++r) {
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  for (std::size_t r = rank; r < eqs; ++r) {
    if (rows[r].test(rhs)) {
      for (std::size_t q = 0; q < eqs; ++q) {
        if (rows[r].test(rhs + 1 + q)) out.certificate.push_back(q);
      }
      return out;
    }
  }
  out.feasible = true;
  out.dashing.assign(vars, 0);
  for (std::size_t r = 0; r < rank; ++r) out.dashing[pivot_col[r]] = rows[r].test(rhs) ? 1 : 0;
  return out;
}

const char* to_string(Violation v) noexcept {
  switch (v) {
    case Violation::none: return "none";
    case Violation::shape: return "shape";
    case Violation::not_regular: return "not-regular";
    case Violation::not_four_cycles: return "not-four-cycles";
    case Violation::even_dashing: return "even-dashing";
  }
  return "unknown";
}

ValidationReport validate(const Adinkra& a) {
  const std::size_t d = a.d();
  if (a.colors() < 1 || a.edges().size() != static_cast<std::size_t>(a.colors()) ||
      a.bosons().size() != d) {
    return {Violation::shape, "boson/fermion counts or color count inconsistent", std::nullopt};
  }
  for (int c = 1; c <= a.colors(); ++c) {
    const auto& row = a.edges()[static_cast<std::size_t>(c - 1)];
    if (row.size() != d) {
      return {Violation::shape, "color " + std::to_string(c) + " lacks an edge at some fermion",
              std::nullopt};
    }
    std::vector<bool> hit(d, false);
    for (std::size_t f = 0; f < d; ++f) {
      if (row[f].boson >= d || hit[row[f].boson]) {
        return {Violation::not_regular,
                "color " + std::to_string(c) + " is not a perfect matching (fermion " +
                    std::to_string(f) + ")",
                std::nullopt};
      }
      hit[row[f].boson] = true;
    }
  }
  std::vector<TwoColorCycle> all;
  for (int i = 1; i <= a.colors(); ++i) {
    for (int j = i + 1; j <= a.colors(); ++j) {
      try {
        auto cycles = two_colored_cycles(a, i, j);
        all.insert(all.end(), cycles.begin(), cycles.end());
      } catch (const Error& e) {
        return {Violation::not_four_cycles, e.what(), std::nullopt};
      }
    }
  }
  for (const auto& cyc : all) {
    int dashes = 0;
    for (const auto& e : cyc.edges) dashes += a.edge(e.color, e.fermion).dashed ? 1 : 0;
    if (dashes % 2 == 0) {
      return {Violation::even_dashing,
              "cycle of colors " + std::to_string(cyc.color_a) + "," + std::to_string(cyc.color_b) +
                  " at fermion " + std::to_string(cyc.vertices[0].index) + " has " + std::to_string(dashes) +
                  " dashed edges",
              cyc};
    }
  }
  return {};
}

Adinkra switch_vertex(const Adinkra& a, VertexRef v) {
  if (v.index >= a.d()) {
    throw Error(Errc::unknown_vertex, "vertex index " + std::to_string(v.index) + " out of range");
  }
  auto bits = a.dashing();
  for (int c = 1; c <= a.colors(); ++c) {
    std::size_t f = v.index;
    if (v.side == Side::boson) f = boson_to_fermion(a, c)[v.index];
    bits[edge_index(a, {c, f})] ^= 1;
  }
  return a.with_dashing(bits);
}

Adinkra flip_color(const Adinkra& a, int color) {
  require_color(a, color);
  auto bits = a.dashing();
  for (std::size_t f = 0; f < a.d(); ++f) bits[edge_index(a, {color, f})] ^= 1;
  return a.with_dashing(bits);
}

Adinkra relabel_colors(const Adinkra& a, const std::vector<int>& rainbow) {
  const auto n = static_cast<std::size_t>(a.colors());
  std::vector<int> sorted = rainbow;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(n);
  std::iota(expected.begin(), expected.end(), 1);
  if (sorted != expected) {
    throw Error(Errc::out_of_range, "rainbow must be a permutation of 1.." + std::to_string(n));
  }
  std::vector<std::vector<Edge>> edges(n);
  for (std::size_t i = 0; i < n; ++i) edges[i] = a.edges()[static_cast<std::size_t>(rainbow[i] - 1)];
  return Adinkra(a.colors(), a.block_codes(), a.bosons(), a.fermions(), std::move(edges));
}

Adinkra disjoint_union(const Adinkra& a, const Adinkra& b) {
  if (a.colors() != b.colors()) {
    throw Error(Errc::color_mismatch, "cannot join Adinkras with " + std::to_string(a.colors()) +
                                          " and " + std::to_string(b.colors()) + " colors");
  }
  auto codes = a.block_codes();
  codes.insert(codes.end(), b.block_codes().begin(), b.block_codes().end());
  const int shift = static_cast<int>(a.block_codes().size());
  auto bosons = a.bosons();
  auto fermions = a.fermions();
  for (auto v : b.bosons()) {
    v.block += shift;
    bosons.push_back(v);
  }
  for (auto v : b.fermions()) {
    v.block += shift;
    fermions.push_back(v);
  }
  auto edges = a.edges();
  const auto offset = static_cast<std::uint32_t>(a.bosons().size());
  for (std::size_t c = 0; c < edges.size(); ++c) {
    for (auto e : b.edges()[c]) {
      e.boson += offset;
      edges[c].push_back(e);
    }
  }
  return Adinkra(a.colors(), std::move(codes), std::move(bosons), std::move(fermions), std::move(edges));
}

std::vector<std::size_t> component_labels(const Adinkra& a) {
  const std::size_t d = a.d();
  std::vector<std::size_t> parent(2 * d);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& row : a.edges()) {
    for (std::size_t f = 0; f < row.size(); ++f) {
      const auto x = find(row[f].boson);
      const auto y = find(d + f);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  // Relabel roots densely in order of first appearance.
  std::vector<std::size_t> label(2 * d);
  std::unordered_map<std::size_t, std::size_t> dense;
  for (std::size_t v = 0; v < 2 * d; ++v) {
    const auto r = find(v);
    label[v] = dense.emplace(r, dense.size()).first->second;
  }
  return label;
}

std::size_t component_count(const Adinkra& a) {
  const auto labels = component_labels(a);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<Adinkra> split_components(const Adinkra& a) {
  const std::size_t d = a.d();
  const auto labels = component_labels(a);
  const std::size_t count = component_count(a);
  std::vector<Adinkra> parts;
  for (std::size_t comp = 0; comp < count; ++comp) {
    std::vector<std::uint32_t> boson_map(d, UINT32_MAX);
    std::vector<Vertex> bosons;
    std::vector<Vertex> fermions;
    std::vector<std::size_t> fermion_ids;
    for (std::size_t b = 0; b < d; ++b) {
      if (labels[b] != comp) continue;
      boson_map[b] = static_cast<std::uint32_t>(bosons.size());
      bosons.push_back({a.bosons()[b].word, 0});
    }
    for (std::size_t f = 0; f < d; ++f) {
      if (labels[d + f] != comp) continue;
      fermion_ids.push_back(f);
      fermions.push_back({a.fermions()[f].word, 0});
    }
    const int block = fermion_ids.empty() ? a.bosons()[0].block : a.fermions()[fermion_ids[0]].block;
    std::vector<std::vector<Edge>> edges(a.edges().size());
    for (std::size_t c = 0; c < edges.size(); ++c) {
      for (std::size_t f : fermion_ids) {
        auto e = a.edges()[c][f];
        e.boson = boson_map[e.boson];
        edges[c].push_back(e);
      }
    }
    parts.emplace_back(a.colors(), std::vector<LinearCode>{a.block_codes().at(static_cast<std::size_t>(block))},
                       std::move(bosons), std::move(fermions), std::move(edges));
  }
  return parts;
}

std::string export_dot(const Adinkra& a) {
  std::ostringstream os;
  auto label = [](const Vertex& v) {
    std::string s = v.word.to_string();
    if (v.block != 0) s += "/" + std::to_string(v.block);
    return s;
  };
  os << "graph adinkra {\n";
  os << "  node [shape=circle, style=filled];\n";
  for (std::size_t b = 0; b < a.bosons().size(); ++b) {
    os << "  b" << b << " [label=\"" << label(a.bosons()[b]) << "\", fillcolor=white];\n";
  }
  for (std::size_t f = 0; f < a.fermions().size(); ++f) {
    os << "  f" << f << " [label=\"" << label(a.fermions()[f])
       << "\", fillcolor=black, fontcolor=white];\n";
  }
  for (std::size_t c = 0; c < a.edges().size(); ++c) {
    const char* color = c < kColorNames.size() ? kColorNames[c] : "black";
    for (std::size_t f = 0; f < a.edges()[c].size(); ++f) {
      const auto& e = a.edges()[c][f];
      os << "  b" << e.boson << " -- f" << f << " [color=" << color;
      if (e.dashed) os << ", style=dashed";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace adinkra::graph
