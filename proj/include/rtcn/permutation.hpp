#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace rtcn {

// One-line notation: image[x-1] = sigma(x), for x in 1..n.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInput unless `image` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& image() const { return image_; }
  Permutation inverse() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

// Canonical factorization (x1,y1)...(xk,yk) with x1 < ... < xk < n and
// xi < yi <= n. The empty sequence is the identity.
struct TranspositionSeq {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;

  auto operator<=>(const TranspositionSeq&) const = default;
};

std::vector<std::string> validate_transpositions(const TranspositionSeq& seq);

}  // namespace rtcn
