#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkv {

using Point = std::uint16_t;

// A permutation of {0..degree-1} stored as an image array. Text I/O uses
// 1-indexed disjoint cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point v : img_) {
      if (v >= img_.size() || seen[v]) throw std::invalid_argument("not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point(0));
    return Permutation(std::move(img));
  }

  std::size_t degree() const { return img_.size(); }
  Point operator[](std::size_t i) const { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // apply *this first, then rhs
  Permutation operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<Point> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = rhs.img_[img_[i]];
    Permutation p;
    p.img_ = std::move(out);
    return p;
  }

  Permutation inverse() const {
    std::vector<Point> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[img_[i]] = Point(i);
    Permutation p;
    p.img_ = std::move(out);
    return p;
  }

  // least k >= 1 with p^k = identity, as lcm of cycle lengths
  std::uint64_t order() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = img_[j];
        ++len;
      }
      std::uint64_t g = std::gcd(ord, len);
      if (ord / g > UINT64_MAX / len) throw std::overflow_error("element order overflow");
      ord = ord / g * len;
    }
    return ord;
  }

  std::string cycle_string() const {
    std::vector<bool> seen(img_.size(), false);
    std::string out;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = true;
        continue;
      }
      out += '(';
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) out += ' ';
        out += std::to_string(j + 1);
        first = false;
        j = img_[j];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<Point> img_;
};

}  // namespace gkv
