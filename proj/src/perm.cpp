#include "fuskit/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace fuskit {

Perm::Perm(std::size_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), std::uint8_t{0});
}

Perm Perm::from_images(std::vector<std::uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x >= images.size() || seen[x])
      throw std::invalid_argument("image array is not a bijection");
    seen[x] = true;
  }
  Perm p(images.size());
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_images(const std::vector<int>& images) {
  std::vector<std::uint8_t> v;
  v.reserve(images.size());
  for (int x : images) {
    if (x < 0 || x > 255) throw std::invalid_argument("point out of range");
    v.push_back(static_cast<std::uint8_t>(x));
  }
  return from_images(std::move(v));
}

Perm Perm::from_cycles(std::size_t degree,
                       std::initializer_list<std::initializer_list<int>> cycles) {
  Perm p(degree);
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2) continue;
    auto it = cyc.begin();
    int first = *it;
    int prev = first;
    for (++it; it != cyc.end(); ++it) {
      p.img_[static_cast<std::size_t>(prev)] = static_cast<std::uint8_t>(*it);
      prev = *it;
    }
    p.img_[static_cast<std::size_t>(prev)] = static_cast<std::uint8_t>(first);
  }
  return from_images(std::move(p.img_));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Perm r(degree());
  for (std::size_t x = 0; x < degree(); ++x) r.img_[x] = rhs.img_[img_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r(degree());
  for (std::size_t x = 0; x < degree(); ++x) r.img_[img_[x]] = static_cast<std::uint8_t>(x);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (std::size_t x = 0; x < degree(); ++x) {
    if (x) s += ',';
    s += std::to_string(int(img_[x]));
  }
  s += ']';
  return s;
}

std::string Perm::cycle_string() const {
  std::string s;
  std::vector<bool> done(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (done[x] || img_[x] == x) continue;
    s += '(';
    std::size_t y = x;
    bool first = true;
    while (!done[y]) {
      done[y] = true;
      if (!first) s += ' ';
      s += std::to_string(int(y));
      first = false;
      y = img_[y];
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace fuskit
