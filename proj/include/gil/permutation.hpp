#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gil {

inline constexpr int kMaxDegree = 32;

/// A bijection on the points 1..degree, stored 0-based.
///
/// Products compose left to right: `(a * b)(x) == b(a(x))`, so the cycle
/// string "(1,2)(1,3)" is the product of (1,2) followed by (1,3).
class Permutation {
 public:
  Permutation() : Permutation(1) {}
  explicit Permutation(int degree);

  /// `images[i]` is the 0-based image of 0-based point i.
  static Permutation from_images(const std::vector<int>& images);

  /// Parses cycle notation, e.g. "(1,2)(3,4)" or "(1 2 3)". Points are
  /// separated by commas or whitespace; "()" and "" give the identity.
  /// With `degree == 0` the degree is the largest point mentioned.
  static Permutation parse(std::string_view text, int degree = 0);

  int degree() const { return degree_; }
  int operator[](int point) const { return images_[point]; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// Smallest k >= 1 with p^k = identity.
  int order() const;

  /// Cycle notation with 1-based points; the identity prints as "()".
  std::string to_cycles() const;

  /// Same permutation on a larger point set.
  Permutation extended(int degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  int degree_;
  std::array<std::uint8_t, kMaxDegree> images_{};

  friend struct PermutationHash;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < p.degree_; ++i) {
      h ^= p.images_[i];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace gil
