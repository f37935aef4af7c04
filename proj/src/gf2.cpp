#include "adinkra/gf2.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "adinkra/error.hpp"

namespace adinkra::gf2 {

namespace {

std::uint64_t low_mask(int length) {
  return length == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

void require_same_length(const BinaryWord& a, const BinaryWord& b) {
  if (a.length() != b.length()) {
    throw Error(Errc::length_mismatch, "word lengths differ: " + std::to_string(a.length()) +
                                           " vs " + std::to_string(b.length()));
  }
}

// Pivot of a nonzero row: its most significant set bit.
std::uint64_t pivot_bit(std::uint64_t row) { return std::bit_floor(row); }

}  // namespace

BinaryWord::BinaryWord(int length, std::uint64_t bits) : length_(length), bits_(bits) {
  if (length < 1 || length > kMaxLength) {
    throw Error(Errc::out_of_range, "word length must be in [1, 64], got " + std::to_string(length));
  }
  if ((bits & ~low_mask(length)) != 0) {
    throw Error(Errc::length_mismatch, "bits set beyond word length");
  }
}

BinaryWord BinaryWord::all_ones(int length) { return BinaryWord(length, low_mask(length)); }

BinaryWord BinaryWord::unit(int length, int coordinate) {
  if (coordinate < 1 || coordinate > length) {
    throw Error(Errc::out_of_range, "coordinate out of range");
  }
  return BinaryWord(length, std::uint64_t{1} << (length - coordinate));
}

BinaryWord BinaryWord::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxLength)) {
    throw Error(Errc::parse_error, "word must have 1..64 characters: '" + std::string(text) + "'");
  }
  std::uint64_t bits = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw Error(Errc::parse_error, "word contains a character other than 0/1: '" +
                                         std::string(text) + "'");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return BinaryWord(static_cast<int>(text.size()), bits);
}

bool BinaryWord::at(int coordinate) const {
  if (coordinate < 1 || coordinate > length_) {
    throw Error(Errc::out_of_range, "coordinate out of range");
  }
  return (bits_ & mask_of(coordinate)) != 0;
}

std::string BinaryWord::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 1; i <= length_; ++i) {
    if (bits_ & mask_of(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  }
  return s;
}

BinaryWord BinaryWord::operator^(const BinaryWord& other) const {
  require_same_length(*this, other);
  return BinaryWord(length_, bits_ ^ other.bits_);
}

int weight(const BinaryWord& w) noexcept { return std::popcount(w.bits()); }

const char* to_string(ParityClass p) noexcept {
  switch (p) {
    case ParityClass::odd: return "odd";
    case ParityClass::even: return "even";
    case ParityClass::doubly_even: return "doubly-even";
  }
  return "unknown";
}

LinearCode::LinearCode(int length, std::vector<BinaryWord> generators)
    : length_(length), generators_(std::move(generators)) {
  if (length < 1 || length > kMaxLength) {
    throw Error(Errc::out_of_range, "code length must be in [1, 64]");
  }
  std::vector<std::uint64_t> rows;
  for (const auto& g : generators_) {
    if (g.length() != length) {
      throw Error(Errc::length_mismatch, "generator " + g.to_string() + " does not have length " +
                                             std::to_string(length));
    }
    std::uint64_t r = g.bits();
    for (std::uint64_t b : rows) {
      if (r & pivot_bit(b)) r ^= b;
    }
    if (r == 0) continue;
    // Clear the new pivot from the existing rows to keep the basis reduced.
    const std::uint64_t p = pivot_bit(r);
    for (auto& b : rows) {
      if (b & p) b ^= r;
    }
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end(), std::greater<>());
  basis_.reserve(rows.size());
  for (std::uint64_t r : rows) basis_.emplace_back(length, r);
}

LinearCode LinearCode::parse(std::string_view text) {
  std::vector<BinaryWord> gens;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string_view body(line.data() + first, last - first + 1);
    try {
      gens.push_back(BinaryWord::parse(body));
    } catch (const Error& e) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (gens.back().length() != gens.front().length()) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) +
                                         ": all generators must share one length");
    }
  }
  if (gens.empty()) throw Error(Errc::parse_error, "code text contains no generator lines");
  const int n = gens.front().length();
  return LinearCode(n, std::move(gens));
}

BinaryWord LinearCode::reduce(const BinaryWord& w) const {
  if (w.length() != length_) {
    throw Error(Errc::length_mismatch, "word length " + std::to_string(w.length()) +
                                           " does not match code length " + std::to_string(length_));
  }
  std::uint64_t r = w.bits();
  for (const auto& b : basis_) {
    if (r & pivot_bit(b.bits())) r ^= b.bits();
  }
  return BinaryWord(length_, r);
}

bool LinearCode::same_span(const LinearCode& other) const {
  return length_ == other.length_ && basis_ == other.basis_;
}

ParityClass classify_code(const LinearCode& c) {
  // Weight is additive mod 4 up to twice the overlap: wt(a+b) = wt(a)+wt(b)-2|a&b|.
  // So the span is doubly even iff every basis row is and rows overlap evenly.
  const auto& basis = c.rref();
  bool even = true;
  bool doubly = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const int wi = weight(basis[i]);
    if (wi % 2 != 0) even = false;
    if (wi % 4 != 0) doubly = false;
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (std::popcount(basis[i].bits() & basis[j].bits()) % 2 != 0) doubly = false;
    }
  }
  if (!even) return ParityClass::odd;
  return doubly ? ParityClass::doubly_even : ParityClass::even;
}

std::vector<BinaryWord> span_members(const LinearCode& c) {
  const int k = c.dimension();
  if (k > kMaxSpanDimension) {
    throw Error(Errc::dimension_too_large,
                "span enumeration limited to dimension " + std::to_string(kMaxSpanDimension));
  }
  const auto& basis = c.rref();
  std::vector<BinaryWord> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << k); ++combo) {
    std::uint64_t w = 0;
    for (int i = 0; i < k; ++i) {
      if (combo >> i & 1) w ^= basis[static_cast<std::size_t>(i)].bits();
    }
    out.emplace_back(c.length(), w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const LinearCode& c, const BinaryWord& w) { return c.reduce(w).bits() == 0; }

std::vector<LinearCode> enumerate_doubly_even_codes(int length, int k_max) {
  if (length < 1 || length > kMaxEnumerationLength || k_max < 0 || k_max > length) {
    throw Error(Errc::size_guard, "enumeration requires 1 <= N <= 8 and 0 <= k_max <= N");
  }
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << length); ++w) {
    if (std::popcount(w) % 4 == 0) candidates.push_back(w);
  }

  using Key = std::vector<std::uint64_t>;
  auto key_of = [](const LinearCode& c) {
    Key key;
    for (const auto& b : c.rref()) key.push_back(b.bits());
    return key;
  };

  std::vector<LinearCode> result{LinearCode::trivial(length)};
  std::vector<LinearCode> layer = result;
  for (int dim = 1; dim <= k_max && !layer.empty(); ++dim) {
    std::set<Key> seen;
    std::vector<LinearCode> next;
    for (const auto& code : layer) {
      for (std::uint64_t w : candidates) {
        const BinaryWord word(length, w);
        if (contains(code, word)) continue;
        bool orthogonal = true;
        for (const auto& b : code.rref()) {
          if (std::popcount(b.bits() & w) % 2 != 0) {
            orthogonal = false;
            break;
          }
        }
        if (!orthogonal) continue;
        auto gens = code.rref();
        gens.push_back(word);
        LinearCode extended(length, std::move(gens));
        if (seen.insert(key_of(extended)).second) next.push_back(std::move(extended));
      }
    }
    std::sort(next.begin(), next.end(),
              [&](const LinearCode& a, const LinearCode& b) { return key_of(a) < key_of(b); });
    // Echelon rows make the canonical generator list.
    layer.clear();
    for (const auto& c : next) layer.emplace_back(length, c.rref());
    result.insert(result.end(), layer.begin(), layer.end());
  }
  return result;
}

std::vector<BinaryWord> coset_representatives(const LinearCode& c) {
  const int n = c.length();
  if (n > kMaxCosetLength) {
    throw Error(Errc::size_guard, "coset enumeration limited to length " +
                                      std::to_string(kMaxCosetLength));
  }
  if (classify_code(c) == ParityClass::odd) throw Error(Errc::not_even, "code contains an odd-weight word");
  std::uint64_t pivots = 0;
  for (const auto& b : c.rref()) pivots |= pivot_bit(b.bits());
  std::vector<BinaryWord> reps;
  reps.reserve(std::size_t{1} << (n - c.dimension()));
  // The reduced words are exactly those vanishing on every pivot coordinate.
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    if ((w & pivots) == 0) reps.emplace_back(n, w);
  }
  return reps;
}

}  // namespace adinkra::gf2
