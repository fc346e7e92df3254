#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cdkit/errors.hpp"

namespace cdkit {

// A permutation of {0..degree-1}, stored as its image sequence.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
      if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
        throw InvalidParameters("permutation images are not a bijection");
      seen[x] = 1;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> im(degree);
    for (int i = 0; i < degree; ++i) im[i] = i;
    return Permutation(std::move(im));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  // Function composition: (f.compose(g))(x) = f(g(x)).
  Permutation compose(const Permutation& g) const {
    std::vector<int> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[x] = images_[g.images_[x]];
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[images_[x]] = static_cast<int>(x);
    return Permutation(std::move(im));
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[x] != static_cast<int>(x)) return false;
    return true;
  }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : p.images()) {
      h ^= static_cast<std::size_t>(x);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

}  // namespace cdkit
