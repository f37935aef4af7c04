#include <doctest.h>

#include <algorithm>
#include <set>

#include "adinkra/error.hpp"
#include "adinkra/signed_perm.hpp"
#include "adinkra/vee.hpp"

using namespace adinkra;
using namespace adinkra::vee;

namespace {

// A signed word in the generators, reduced by the defining relations alone:
// swap adjacent distinct generators (one sign flip each) and cancel g_i g_i = -1.
struct Word {
  bool negative = false;
  std::vector<int> letters;
};

Word to_word(const VeeElement& a) {
  Word w{a.negative, {}};
  for (int i = 1; i <= a.rank; ++i) {
    if (a.exponent(i)) w.letters.push_back(i);
  }
  return w;
}

VeeElement rewrite(int rank, Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
      if (w.letters[i] > w.letters[i + 1]) {
        std::swap(w.letters[i], w.letters[i + 1]);
        w.negative = !w.negative;
        changed = true;
      } else if (w.letters[i] == w.letters[i + 1]) {
        w.letters.erase(w.letters.begin() + static_cast<long>(i), w.letters.begin() + static_cast<long>(i) + 2);
        w.negative = !w.negative;
        changed = true;
        break;
      }
    }
  }
  VeeElement out = VeeElement::one(rank);
  out.negative = w.negative;
  for (int l : w.letters) out.exponents |= 1u << (l - 1);
  return out;
}

VeeElement g(int n, int i) { return VeeElement::generator(n, i); }

std::set<VeeElement> closure_from_generators(int n) {
  std::set<VeeElement> seen{VeeElement::one(n)};
  std::vector<VeeElement> frontier{VeeElement::one(n)};
  while (!frontier.empty()) {
    std::vector<VeeElement> next;
    for (const auto& x : frontier) {
      std::vector<VeeElement> gens{VeeElement::minus_one(n)};
      for (int i = 1; i <= n; ++i) gens.push_back(g(n, i));
      for (const auto& h : gens) {
        const auto y = multiply(x, h);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("multiply examples") {
  CHECK(multiply(g(2, 1), g(2, 1)) == VeeElement::minus_one(2));
  CHECK(multiply(g(2, 1), g(2, 2)) == negate(multiply(g(2, 2), g(2, 1))));
  CHECK(multiply(VeeElement::minus_one(2), VeeElement::minus_one(2)) == VeeElement::one(2));
  CHECK(multiply(g(3, 1), g(3, 3)).to_string() == "+g1 g3");
  CHECK(multiply(g(3, 3), g(3, 1)).to_string() == "-g1 g3");
  CHECK_THROWS_AS(multiply(g(2, 1), g(3, 1)), Error);
}

TEST_CASE("multiply agrees with string rewriting on all pairs for n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& a : elements(n)) {
      for (const auto& b : elements(n)) {
        Word w = to_word(a);
        const Word v = to_word(b);
        w.negative = a.negative != b.negative;
        w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
        CHECK(multiply(a, b) == rewrite(n, w));
      }
    }
  }
}

TEST_CASE("group axioms") {
  for (int n = 0; n <= 3; ++n) {
    const auto all = elements(n);
    for (const auto& a : all) {
      CHECK(multiply(a, inverse(a)) == VeeElement::one(n));
      CHECK(VeeElement::from_index(n, a.index()) == a);
      for (const auto& b : all) {
        for (const auto& c : all) CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      }
    }
  }
}

TEST_CASE("group order by closure from generators") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(closure_from_generators(n).size() == std::size_t{1} << (n + 1));
    CHECK(group_order(n) == std::uint64_t{1} << (n + 1));
  }
}

TEST_CASE("omega squared") {
  CHECK(omega_squared(3) == 1);
  CHECK(omega_squared(2) == -1);
  CHECK(omega_squared(4) == 1);
  for (int n = 1; n <= 12; ++n) CHECK(omega_squared(n) == omega_squared_closed_form(n));
}

TEST_CASE("center") {
  CHECK(center(2).size() == 2);
  const auto c3 = center(3);
  CHECK(c3 == std::vector<VeeElement>{VeeElement::one(3), omega(3), VeeElement::minus_one(3), negate(omega(3))});
  CHECK(center(4).size() == 2);
  for (int n = 1; n <= 7; ++n) {
    CHECK(center(n) == center_closed_form(n));
    // Oracle: commute with every element.
    std::vector<VeeElement> brute;
    for (const auto& x : elements(n)) {
      bool central = true;
      for (const auto& y : elements(n)) central = central && multiply(x, y) == multiply(y, x);
      if (central) brute.push_back(x);
    }
    CHECK(brute == center(n));
  }
}

TEST_CASE("conjugacy classes") {
  CHECK(conjugacy_class(VeeElement::one(2)) == std::vector<VeeElement>{VeeElement::one(2)});
  const auto cls = conjugacy_class(g(2, 1));
  CHECK(cls.size() == 2);
  CHECK(std::find(cls.begin(), cls.end(), negate(g(2, 1))) != cls.end());
  CHECK(conjugacy_class(omega(3)) == std::vector<VeeElement>{omega(3)});
  for (int n = 1; n <= 4; ++n) {
    const auto z = center(n);
    for (const auto& x : elements(n)) {
      std::set<VeeElement> brute;
      for (const auto& y : elements(n)) brute.insert(multiply(multiply(y, x), inverse(y)));
      const auto got = conjugacy_class(x);
      CHECK(std::set<VeeElement>(got.begin(), got.end()) == brute);
      const bool central = std::find(z.begin(), z.end(), x) != z.end();
      CHECK(got.size() == (central ? 1u : 2u));
    }
  }
}

TEST_CASE("commutation criterion") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& x : elements(n)) {
      for (int j = 1; j <= n; ++j) {
        int others = 0;
        for (int i = 1; i <= n; ++i) others += i != j && x.exponent(i) ? 1 : 0;
        CHECK(commutes(g(n, j), x) == (others % 2 == 0));
      }
    }
  }
}

TEST_CASE("normal subgroup counts") {
  CHECK(normal_subgroups(1).size() == 3);
  CHECK(normal_subgroups(2).size() == 6);
  CHECK(normal_subgroups(3).size() == 19);
  CHECK(normal_subgroups(4).size() == 68);
  for (int n = 0; n <= 4; ++n) CHECK(normal_subgroups(n) == normal_subgroups_closed_form(n));
  CHECK_THROWS_AS(all_subgroups(5), Error);
}

TEST_CASE("normal subgroups without -1 are central") {
  for (int n = 0; n <= 4; ++n) {
    const auto z = center(n);
    for (const auto& s : normal_subgroups(n)) {
      if (std::binary_search(s.begin(), s.end(), VeeElement::minus_one(n))) continue;
      for (const auto& x : s) CHECK(std::find(z.begin(), z.end(), x) != z.end());
    }
  }
}

TEST_CASE("small isomorphism catalog") {
  using Profile = std::map<std::size_t, std::size_t>;
  CHECK(order_profile(0) == Profile{{1, 1}, {2, 1}});
  CHECK(order_profile(1) == Profile{{1, 1}, {2, 1}, {4, 2}});
  CHECK(order_profile(2) == Profile{{1, 1}, {2, 1}, {4, 6}});
  CHECK(order_profile(3) == Profile{{1, 1}, {2, 3}, {4, 12}});
  CHECK(center(0).size() == 2);
  CHECK(center(1).size() == 4);
  CHECK(center(2).size() == 2);
  CHECK(center(3).size() == 4);
}

TEST_CASE("explicit isomorphism G_2 -> Q8") {
  using signed_perm::SignedPermutation;
  // Left multiplication by i and j on the basis 1, i, j, k of the quaternions.
  const SignedPermutation qi({1, 0, 3, 2}, {1, -1, 1, -1});
  const SignedPermutation qj({2, 3, 0, 1}, {1, -1, -1, 1});
  auto image = [&](const VeeElement& x) {
    auto m = x.negative ? SignedPermutation::minus_identity(4) : SignedPermutation::identity(4);
    if (x.exponent(1)) m = signed_perm::compose(m, qi);
    if (x.exponent(2)) m = signed_perm::compose(m, qj);
    return m;
  };
  std::set<SignedPermutation> seen;
  for (const auto& a : elements(2)) {
    seen.insert(image(a));
    for (const auto& b : elements(2)) CHECK(image(multiply(a, b)) == signed_perm::compose(image(a), image(b)));
  }
  CHECK(seen.size() == 8);
  CHECK(signed_perm::closure({qi, qj}).order() == 8);
}

TEST_CASE("recognize_quotient") {
  const Subgroup plus{VeeElement::one(3), omega(3)};
  const Subgroup minus{VeeElement::one(3), negate(omega(3))};
  CHECK(recognize_quotient(3, plus) == 2);
  CHECK(recognize_quotient(3, minus) == 2);
  for (int n = 0; n <= 5; ++n) CHECK(recognize_quotient(n, {VeeElement::one(n)}) == n);
  for (int n = 3; n <= 11; n += 4) {
    CHECK(recognize_quotient(n, {VeeElement::one(n), omega(n)}) == n - 1);
    CHECK(recognize_quotient(n, {VeeElement::one(n), negate(omega(n))}) == n - 1);
  }
  try {
    recognize_quotient(2, {VeeElement::one(2), VeeElement::minus_one(2)});
    FAIL("expected unsupported-kernel");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_kernel);
  }
}

TEST_CASE("abs_vee") {
  CHECK(abs_vee(VeeElement::minus_one(3)) == std::vector<int>{0, 0, 0});
  CHECK(abs_vee(multiply(g(4, 1), g(4, 3))) == std::vector<int>{1, 0, 1, 0});
  for (int n = 0; n <= 3; ++n) {
    for (const auto& a : elements(n)) {
      for (const auto& b : elements(n)) {
        auto sum = abs_vee(a);
        const auto rhs = abs_vee(b);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (sum[i] + rhs[i]) % 2;
        CHECK(abs_vee(multiply(a, b)) == sum);
      }
    }
  }
}

TEST_CASE("element orders and powers") {
  CHECK(element_order(VeeElement::one(3)) == 1);
  CHECK(element_order(VeeElement::minus_one(3)) == 2);
  CHECK(element_order(g(3, 2)) == 4);
  CHECK(power(g(3, 2), 2) == VeeElement::minus_one(3));
  CHECK(element_order(omega(3)) == 2);
  CHECK(element_order(omega(2)) == 4);
}
