#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adinkra::gf2 {

inline constexpr int kMaxLength = 64;

// A word of F_2^N. Coordinate 1 is the leftmost character of the text form and
// is stored in the most significant used bit, so integer order on `bits` equals
// lexicographic order on the text form.
class BinaryWord {
 public:
  BinaryWord(int length, std::uint64_t bits);
  static BinaryWord zero(int length) { return BinaryWord(length, 0); }
  static BinaryWord all_ones(int length);
  // e_i, 1-based.
  static BinaryWord unit(int length, int coordinate);
  static BinaryWord parse(std::string_view text);

  int length() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  // 1-based coordinate access.
  bool at(int coordinate) const;
  std::string to_string() const;

  BinaryWord operator^(const BinaryWord& other) const;
  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

  std::uint64_t mask_of(int coordinate) const noexcept {
    return std::uint64_t{1} << (length_ - coordinate);
  }

 private:
  int length_;
  std::uint64_t bits_;
};

int weight(const BinaryWord& w) noexcept;

enum class ParityClass { odd, even, doubly_even };

const char* to_string(ParityClass p) noexcept;

// A binary linear code given by generators. The span is kept as a reduced row
// echelon basis whose pivots are the leftmost set coordinates, which makes
// span equality a comparison of bases.
class LinearCode {
 public:
  LinearCode(int length, std::vector<BinaryWord> generators);
  static LinearCode trivial(int length) { return LinearCode(length, {}); }
  // One generator per line; blank lines and '#' comments ignored.
  static LinearCode parse(std::string_view text);

  int length() const noexcept { return length_; }
  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<BinaryWord>& generators() const noexcept { return generators_; }
  // Reduced row echelon basis, rows in decreasing pivot order (leftmost pivot first).
  const std::vector<BinaryWord>& rref() const noexcept { return basis_; }

  // Reduces w against the basis. The result is the lexicographically smallest
  // member of the coset w + C.
  BinaryWord reduce(const BinaryWord& w) const;

  bool same_span(const LinearCode& other) const;

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  int length_;
  std::vector<BinaryWord> generators_;
  std::vector<BinaryWord> basis_;
};

ParityClass classify_code(const LinearCode& c);

inline constexpr int kMaxSpanDimension = 20;
std::vector<BinaryWord> span_members(const LinearCode& c);

// Decided by row reduction against the echelon basis.
bool contains(const LinearCode& c, const BinaryWord& w);

inline constexpr int kMaxEnumerationLength = 8;
// One code per doubly-even subspace of F_2^N of dimension <= k_max, ordered by
// dimension and then by echelon basis. Generators are the echelon rows.
std::vector<LinearCode> enumerate_doubly_even_codes(int length, int k_max);

inline constexpr int kMaxCosetLength = 24;
std::vector<BinaryWord> coset_representatives(const LinearCode& c);

}  // namespace adinkra::gf2
