#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adinkra/gf2.hpp"

namespace adinkra::graph {

inline constexpr int kMaxColors = 10;

enum class Side { boson, fermion };

struct Vertex {
  gf2::BinaryWord word;
  // Connected-component block this vertex was built in (0 unless produced by disjoint_union).
  int block = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct VertexRef {
  Side side;
  std::size_t index;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

// The color-c edge leaving a fermion.
struct Edge {
  std::uint32_t boson;
  bool dashed = false;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge identity: (color, fermion index). Colors are 1-based.
struct EdgeId {
  int color;
  std::size_t fermion;

  friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

// An N-colored, dashed bipartite graph with vertices labeled by code cosets.
// Valise heights are implied: bosons at 0, fermions at 1.
// Construction does not validate; see validate().
class Adinkra {
 public:
  Adinkra(int colors, std::vector<gf2::LinearCode> block_codes, std::vector<Vertex> bosons,
          std::vector<Vertex> fermions, std::vector<std::vector<Edge>> edges);

  int colors() const noexcept { return colors_; }
  // One code per block; a single entry unless built by disjoint_union.
  const std::vector<gf2::LinearCode>& block_codes() const noexcept { return block_codes_; }
  const gf2::LinearCode& code() const { return block_codes_.front(); }
  const std::vector<Vertex>& bosons() const noexcept { return bosons_; }
  const std::vector<Vertex>& fermions() const noexcept { return fermions_; }
  std::size_t d() const noexcept { return fermions_.size(); }
  // edges()[c-1][f] is the color-c edge at fermion f.
  const std::vector<std::vector<Edge>>& edges() const noexcept { return edges_; }
  const Edge& edge(int color, std::size_t fermion) const;
  std::size_t edge_count() const noexcept;

  // Dash bits indexed (color-1)·d + fermion.
  std::vector<int> dashing() const;
  Adinkra with_dashing(const std::vector<int>& bits) const;

  friend bool operator==(const Adinkra&, const Adinkra&) = default;

 private:
  int colors_;
  std::vector<gf2::LinearCode> block_codes_;
  std::vector<Vertex> bosons_;
  std::vector<Vertex> fermions_;
  std::vector<std::vector<Edge>> edges_;
};

inline std::size_t edge_index(const Adinkra& a, EdgeId e) {
  return static_cast<std::size_t>(e.color - 1) * a.d() + e.fermion;
}

struct TwoColorCycle {
  int color_a;
  int color_b;
  // Cycle order: fermion f0, boson (color_a), fermion f1 (color_b), boson (color_a), back to f0 (color_b).
  std::array<VertexRef, 4> vertices;
  std::array<EdgeId, 4> edges;
};

// Hamming cube with the coordinate-prefix-parity dashing; 2 <= N <= 10.
Adinkra build_cubical(int n);

// Quotient graph of the cube by an even code, all edges solid.
Adinkra build_chromotopology(const gf2::LinearCode& code);

// Quotient by a doubly-even code, dashed by solve_odd_dashing.
Adinkra build_quotient(const gf2::LinearCode& code);

std::vector<TwoColorCycle> two_colored_cycles(const Adinkra& a, int color_a, int color_b);

struct DashingSolution {
  bool feasible = false;
  // Dash bits indexed like Adinkra::dashing(); empty when infeasible.
  std::vector<int> dashing;
  // Indices into the cycle list whose equations sum to 0 = 1; empty when feasible.
  std::vector<std::size_t> certificate;
  // Every 2-colored 4-cycle, color pairs in lexicographic order.
  std::vector<TwoColorCycle> cycles;
};

// Odd-dashing as a GF(2) system: one variable per edge, one equation per
// 2-colored 4-cycle. Free variables are fixed to 0.
DashingSolution solve_odd_dashing(const Adinkra& a);

enum class Violation {
  none,
  shape,
  not_regular,
  not_four_cycles,
  even_dashing,
};

const char* to_string(Violation v) noexcept;

struct ValidationReport {
  Violation violation = Violation::none;
  std::string detail;
  std::optional<TwoColorCycle> witness;

  bool ok() const noexcept { return violation == Violation::none; }
};

ValidationReport validate(const Adinkra& a);

Adinkra switch_vertex(const Adinkra& a, VertexRef v);
// Flips every edge of one color; keeps every 2-colored 4-cycle's parity.
Adinkra flip_color(const Adinkra& a, int color);
// New color i is old color rainbow[i-1].
Adinkra relabel_colors(const Adinkra& a, const std::vector<int>& rainbow);
Adinkra disjoint_union(const Adinkra& a, const Adinkra& b);

// Component id per vertex: bosons first, then fermions.
std::vector<std::size_t> component_labels(const Adinkra& a);
std::size_t component_count(const Adinkra& a);
std::vector<Adinkra> split_components(const Adinkra& a);

std::string export_dot(const Adinkra& a);

}  // namespace adinkra::graph
