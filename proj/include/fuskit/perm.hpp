#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace fuskit {

/// A permutation of {0..degree-1}, stored as its image array.
/// Composition is left-to-right: (a * b) maps x to b[a[x]].
class Perm {
 public:
  explicit Perm(std::size_t degree);
  static Perm from_images(std::vector<std::uint8_t> images);
  static Perm from_images(const std::vector<int>& images);
  // Cycle notation helper, e.g. from_cycles(4, {{0,1},{2,3}}).
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<int>> cycles);

  std::size_t degree() const { return img_.size(); }
  std::uint8_t operator[](std::size_t x) const { return img_[x]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  Perm operator*(const Perm& rhs) const;  // apply *this, then rhs
  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm&) const = default;
  std::strong_ordering operator<=>(const Perm& rhs) const {
    return img_ <=> rhs.img_;
  }

  std::string to_string() const;   // image array, e.g. "[1,0,3,2]"
  std::string cycle_string() const;

 private:
  std::vector<std::uint8_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace fuskit
