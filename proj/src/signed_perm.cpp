#include "adinkra/signed_perm.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "adinkra/error.hpp"

namespace adinkra::signed_perm {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::parse(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<long> row;
    long v = 0;
    while (ls >> v) row.push_back(v);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(Errc::parse_error, "empty matrix text");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(Errc::parse_error, "ragged matrix text");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::degree_mismatch, "matrix shapes do not chain");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const long a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(Errc::degree_mismatch, "matrix shapes differ");
  }
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator*(long scalar) const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v *= scalar;
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c);
    }
    os << '\n';
  }
  return os.str();
}

SignedPermutation::SignedPermutation(std::vector<std::uint32_t> image, std::vector<std::int8_t> sign)
    : image_(std::move(image)), sign_(std::move(sign)) {
  if (image_.size() != sign_.size()) {
    throw Error(Errc::degree_mismatch, "image and sign sequences differ in length");
  }
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t j = 0; j < image_.size(); ++j) {
    if (image_[j] >= image_.size() || hit[image_[j]]) {
      throw Error(Errc::out_of_range, "image is not a bijection");
    }
    hit[image_[j]] = true;
    if (sign_[j] != 1 && sign_[j] != -1) throw Error(Errc::out_of_range, "sign must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> image(degree);
  for (std::size_t j = 0; j < degree; ++j) image[j] = static_cast<std::uint32_t>(j);
  return {std::move(image), std::vector<std::int8_t>(degree, 1)};
}

SignedPermutation SignedPermutation::minus_identity(std::size_t degree) {
  return negate(identity(degree));
}

SignedPermutation SignedPermutation::from_matrix(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::degree_mismatch, "signed permutation matrix must be square");
  const std::size_t d = m.rows();
  std::vector<std::uint32_t> image(d);
  std::vector<std::int8_t> sign(d);
  for (std::size_t c = 0; c < d; ++c) {
    int nonzero = 0;
    for (std::size_t r = 0; r < d; ++r) {
      const long v = m(r, c);
      if (v == 0) continue;
      if (v != 1 && v != -1) throw Error(Errc::out_of_range, "entries must be -1, 0 or 1");
      ++nonzero;
      image[c] = static_cast<std::uint32_t>(r);
      sign[c] = static_cast<std::int8_t>(v);
    }
    if (nonzero != 1) throw Error(Errc::out_of_range, "column without exactly one nonzero entry");
  }
  return {std::move(image), std::move(sign)};
}

SignedPermutation SignedPermutation::from_permutation(const Permutation& p) {
  return {p, std::vector<std::int8_t>(p.size(), 1)};
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<std::uint32_t> image(degree());
  std::vector<std::int8_t> sign(degree());
  for (std::size_t j = 0; j < degree(); ++j) {
    image[image_[j]] = static_cast<std::uint32_t>(j);
    sign[image_[j]] = sign_[j];
  }
  return {std::move(image), std::move(sign)};
}

IntMatrix SignedPermutation::to_matrix() const {
  IntMatrix m(degree(), degree());
  for (std::size_t j = 0; j < degree(); ++j) m(image_[j], j) = sign_[j];
  return m;
}

SignedPermutation compose(const SignedPermutation& f, const SignedPermutation& g) {
  if (f.degree() != g.degree()) {
    throw Error(Errc::degree_mismatch, "cannot compose signed permutations of degree " +
                                           std::to_string(f.degree()) + " and " +
                                           std::to_string(g.degree()));
  }
  const std::size_t d = f.degree();
  std::vector<std::uint32_t> image(d);
  std::vector<std::int8_t> sign(d);
  for (std::size_t j = 0; j < d; ++j) {
    const std::uint32_t mid = g.image(j);
    image[j] = f.image(mid);
    sign[j] = static_cast<std::int8_t>(g.sign(j) * f.sign(mid));
  }
  return {std::move(image), std::move(sign)};
}

SignedPermutation negate(const SignedPermutation& f) {
  auto sign = f.signs();
  for (auto& s : sign) s = static_cast<std::int8_t>(-s);
  return {f.images(), std::move(sign)};
}

Permutation abs(const SignedPermutation& f) { return f.images(); }

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw Error(Errc::degree_mismatch, "permutation degrees differ");
  Permutation out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = f[g[j]];
  return out;
}

Factorization factorize(const SignedPermutation& f) {
  Factorization fac{std::vector<std::int8_t>(f.degree()), abs(f)};
  for (std::size_t j = 0; j < f.degree(); ++j) {
    fac.diagonal[f.image(j)] = static_cast<std::int8_t>(f.sign(j));
  }
  return fac;
}

SignedPermutation reconstruct(const Factorization& fac) {
  const auto d = fac.permutation.size();
  std::vector<std::uint32_t> id(d);
  for (std::size_t j = 0; j < d; ++j) id[j] = static_cast<std::uint32_t>(j);
  const SignedPermutation diag(std::move(id), fac.diagonal);
  return compose(diag, SignedPermutation::from_permutation(fac.permutation));
}

std::size_t element_order(const SignedPermutation& f) {
  // Orders divide 2·lcm(cycle lengths), so the walk is short.
  SignedPermutation power = f;
  std::size_t m = 1;
  while (!is_identity(power)) {
    power = compose(f, power);
    ++m;
  }
  return m;
}

bool is_identity(const SignedPermutation& f) {
  for (std::size_t j = 0; j < f.degree(); ++j) {
    if (f.image(j) != j || f.sign(j) != 1) return false;
  }
  return true;
}

bool is_minus_identity(const SignedPermutation& f) {
  for (std::size_t j = 0; j < f.degree(); ++j) {
    if (f.image(j) != j || f.sign(j) != -1) return false;
  }
  return f.degree() > 0;
}

std::size_t SignedPermutationHash::operator()(const SignedPermutation& f) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t j = 0; j < f.degree(); ++j) {
    const std::size_t v = (static_cast<std::size_t>(f.image(j)) << 1) | (f.sign(j) < 0 ? 1u : 0u);
    h = (h ^ v) * 1099511628211ull;
  }
  return h;
}

bool SignedGroup::contains(const SignedPermutation& f) const {
  return std::binary_search(elements.begin(), elements.end(), f);
}

SignedGroup closure(const std::vector<SignedPermutation>& generators, std::size_t order_bound) {
  if (generators.empty()) throw Error(Errc::degree_mismatch, "closure needs at least one generator");
  const std::size_t d = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != d) throw Error(Errc::degree_mismatch, "generators have different degrees");
  }
  std::unordered_set<SignedPermutation, SignedPermutationHash> seen;
  std::deque<SignedPermutation> queue;
  auto identity = SignedPermutation::identity(d);
  seen.insert(identity);
  queue.push_back(std::move(identity));
  while (!queue.empty()) {
    const SignedPermutation current = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      auto next = compose(g, current);
      if (seen.insert(next).second) {
        if (seen.size() > order_bound) {
          throw Error(Errc::order_bound_exceeded,
                      "group order exceeds bound " + std::to_string(order_bound));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  SignedGroup group{d, generators, {seen.begin(), seen.end()}};
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

}  // namespace adinkra::signed_perm
