#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace adinkra::signed_perm {

// Dense integer matrix used for exact matrix identities and fixtures.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  // Rows of whitespace-separated integers, one row per line.
  static IntMatrix parse(const std::string& text);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator*(long scalar) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  // Rows of space-separated -1/0/1 entries.
  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<long> data_;
};

using Permutation = std::vector<std::uint32_t>;

// A signed bijection on d basis elements: x_j -> sign(j) * x_{image(j)}.
// Matrix form puts sign(j) at row image(j), column j.
class SignedPermutation {
 public:
  SignedPermutation(std::vector<std::uint32_t> image, std::vector<std::int8_t> sign);
  static SignedPermutation identity(std::size_t degree);
  static SignedPermutation minus_identity(std::size_t degree);
  static SignedPermutation from_matrix(const IntMatrix& m);
  static SignedPermutation from_permutation(const Permutation& p);

  std::size_t degree() const noexcept { return image_.size(); }
  std::uint32_t image(std::size_t j) const { return image_[j]; }
  int sign(std::size_t j) const { return sign_[j]; }
  const std::vector<std::uint32_t>& images() const noexcept { return image_; }
  const std::vector<std::int8_t>& signs() const noexcept { return sign_; }

  SignedPermutation inverse() const;
  IntMatrix to_matrix() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<std::uint32_t> image_;
  std::vector<std::int8_t> sign_;
};

// f∘g: g is applied first. Matrix form satisfies matrix(f∘g) = matrix(f)·matrix(g).
SignedPermutation compose(const SignedPermutation& f, const SignedPermutation& g);
SignedPermutation negate(const SignedPermutation& f);
Permutation abs(const SignedPermutation& f);
Permutation compose(const Permutation& f, const Permutation& g);

struct Factorization {
  std::vector<std::int8_t> diagonal;
  Permutation permutation;
};

// f = D∘P with D diagonal and P unsigned; D carries the sign found in each row.
Factorization factorize(const SignedPermutation& f);
SignedPermutation reconstruct(const Factorization& fac);

std::size_t element_order(const SignedPermutation& f);
bool is_identity(const SignedPermutation& f);
bool is_minus_identity(const SignedPermutation& f);

struct SignedPermutationHash {
  std::size_t operator()(const SignedPermutation& f) const noexcept;
};

inline constexpr std::size_t kDefaultOrderBound = std::size_t{1} << 16;

struct SignedGroup {
  std::size_t degree = 0;
  std::vector<SignedPermutation> generators;
  // Sorted ascending.
  std::vector<SignedPermutation> elements;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(const SignedPermutation& f) const;
};

// Breadth-first closure of the generators under composition.
SignedGroup closure(const std::vector<SignedPermutation>& generators,
                    std::size_t order_bound = kDefaultOrderBound);

}  // namespace adinkra::signed_perm
