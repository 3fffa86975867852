#include "rtcn/permutation.hpp"

#include <numeric>

#include "rtcn/event_code.hpp"

namespace rtcn {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  std::vector<bool> hit(static_cast<std::size_t>(n + 1), false);
  for (int v : image_) {
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v)]) {
      throw InvalidInput("not a permutation of 1.." + std::to_string(n));
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int x = 1; x <= size(); ++x) inv[static_cast<std::size_t>((*this)(x) - 1)] = x;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= size(); ++x) {
    if ((*this)(x) != x) return false;
  }
  return true;
}

std::vector<std::string> validate_transpositions(const TranspositionSeq& seq) {
  std::vector<std::string> violations;
  int last = 0;
  for (const auto& [x, y] : seq.pairs) {
    if (x <= last) violations.push_back("first coordinates must strictly increase");
    if (x >= seq.n) violations.push_back("need x < n");
    if (!(x < y && y <= seq.n)) violations.push_back("need x < y <= n");
    last = x;
  }
  return violations;
}

}  // namespace rtcn
