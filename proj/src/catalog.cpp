#include "fuskit/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace fuskit::catalog {

GroupPtr symmetric(int n) {
  if (n < 1 || n > 64) throw PreconditionError("sym(n) requires 1 <= n <= 64");
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::from_cycles(static_cast<std::size_t>(n), {{0, 1}}));
  if (n >= 3) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
    gens.push_back(Perm::from_images(img));
  }
  return Group::from_generators("sym(" + std::to_string(n) + ")",
                                static_cast<std::size_t>(n), gens);
}

GroupPtr alternating(int n) {
  if (n < 1 || n > 64) throw PreconditionError("alt(n) requires 1 <= n <= 64");
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k)
    gens.push_back(Perm::from_cycles(static_cast<std::size_t>(n), {{0, 1, k}}));
  return Group::from_generators("alt(" + std::to_string(n) + ")",
                                static_cast<std::size_t>(n), gens);
}

GroupPtr dihedral(int order) {
  if (order < 4 || (order & (order - 1)) != 0)
    throw PreconditionError("dihedral(n) requires n a power of 2, n >= 4");
  int m = order / 2;
  std::vector<int> rot(static_cast<std::size_t>(m)), refl(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % m;
    refl[static_cast<std::size_t>(i)] = (m - i) % m;
  }
  return Group::from_generators("dihedral(" + std::to_string(order) + ")",
                                static_cast<std::size_t>(m),
                                {Perm::from_images(rot), Perm::from_images(refl)});
}

GroupPtr quaternion8() {
  // Labels: 1,-1,i,-i,j,-j,k,-k. Generators act by right multiplication.
  Perm by_i = Perm::from_images(std::vector<int>{2, 3, 1, 0, 7, 6, 4, 5});
  Perm by_j = Perm::from_images(std::vector<int>{4, 5, 6, 7, 1, 0, 3, 2});
  return Group::from_generators("quaternion8", 8, {by_i, by_j});
}

namespace {

using Mat2 = std::array<std::array<int, 2>, 2>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int s = 0;
      for (int k = 0; k < 2; ++k) s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s % 3;
    }
  return c;
}

}  // namespace

GroupPtr sl2_3() {
  // Enumerate SL(2,3) as matrices over F_3, then take the right regular action.
  Mat2 id{{{1, 0}, {0, 1}}};
  Mat2 a{{{1, 1}, {0, 1}}};
  Mat2 b{{{0, 2}, {1, 0}}};
  std::set<Mat2> seen{id};
  std::deque<Mat2> work{id};
  while (!work.empty()) {
    Mat2 x = work.front();
    work.pop_front();
    for (const Mat2& g : {a, b}) {
      Mat2 y = mat2_mul(x, g);
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  std::vector<Mat2> elems(seen.begin(), seen.end());
  std::map<Mat2, int> idx;
  for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
  std::vector<Perm> gens;
  for (const Mat2& g : {a, b}) {
    std::vector<int> img(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) img[i] = idx.at(mat2_mul(elems[i], g));
    gens.push_back(Perm::from_images(img));
  }
  return Group::from_generators("sl2_3", elems.size(), gens);
}

GroupPtr sl3_2() {
  // GL(3,2) acting on the 7 nonzero vectors of F_2^3, listed in binary order.
  // Generated by a transvection and the cyclic basis permutation.
  std::vector<std::array<int, 3>> vecs;
  for (int v = 1; v < 8; ++v) vecs.push_back({v & 1, (v >> 1) & 1, (v >> 2) & 1});
  auto vec_index = [&](const std::array<int, 3>& v) {
    return (v[0] | (v[1] << 1) | (v[2] << 2)) - 1;
  };
  using Mat3 = std::array<std::array<int, 3>, 3>;
  auto act = [&](const Mat3& m) {
    std::vector<int> img(7);
    for (int i = 0; i < 7; ++i) {
      std::array<int, 3> w{};
      for (int r = 0; r < 3; ++r) {
        int s = 0;
        for (int c = 0; c < 3; ++c) s += m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * vecs[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        w[static_cast<std::size_t>(r)] = s % 2;
      }
      img[static_cast<std::size_t>(i)] = vec_index(w);
    }
    return Perm::from_images(img);
  };
  Mat3 transvection{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  Mat3 basis_cycle{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  return Group::from_generators("sl3_2", 7, {act(transvection), act(basis_cycle)});
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  std::size_t da = a->degree(), db = b->degree();
  std::vector<Perm> gens;
  for (const auto& g : a->generators()) {
    std::vector<int> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = g[i];
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<int>(da + i);
    gens.push_back(Perm::from_images(img));
  }
  for (const auto& g : b->generators()) {
    std::vector<int> img(da + db);
    std::iota(img.begin(), img.begin() + static_cast<long>(da), 0);
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<int>(da) + g[i];
    gens.push_back(Perm::from_images(img));
  }
  return Group::from_generators(
      "direct_product(" + a->name() + "," + b->name() + ")", da + db, gens);
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Splits "f(args)" into f and args; returns false when there is no call form.
bool split_call(const std::string& s, std::string& fn, std::string& args) {
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return false;
  fn = s.substr(0, open);
  args = s.substr(open + 1, s.size() - open - 2);
  return true;
}

}  // namespace

GroupPtr build(const std::string& raw_name) {
  std::string name = strip(raw_name);
  if (name == "quaternion8") return quaternion8();
  if (name == "sl2_3") return sl2_3();
  if (name == "sl3_2") return sl3_2();
  if (name == "s4xs4") return direct_product(symmetric(4), symmetric(4));

  std::string fn, args;
  if (split_call(name, fn, args)) {
    if (fn == "sym") return symmetric(std::stoi(args));
    if (fn == "alt") return alternating(std::stoi(args));
    if (fn == "dihedral") return dihedral(std::stoi(args));
    if (fn == "direct_product") {
      int depth = 0;
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == '(') ++depth;
        else if (args[i] == ')') --depth;
        else if (args[i] == ',' && depth == 0)
          return direct_product(build(args.substr(0, i)), build(args.substr(i + 1)));
      }
    }
  }
  throw PreconditionError("unknown fixture name: " + name);
}

std::vector<std::string> default_fixture_names() {
  return {"sym(4)", "alt(6)", "quaternion8", "sl2_3", "sl3_2", "s4xs4"};
}

}  // namespace fuskit::catalog
