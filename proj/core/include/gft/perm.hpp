#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gft/caps.hpp"

namespace gft {

/// Permutation of {0..degree-1} in image-array form.
///
/// Action convention is left-to-right throughout: a point moves first by the
/// left factor, then by the right, i.e. (p then q)(i) = q(p(i)).
/// Cycle notation at the text boundary is 1-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int point) const { return img_[point]; }
  const std::vector<int>& images() const { return img_; }

  Perm then(const Perm& other) const;  // left-to-right composition
  Perm inverse() const;
  bool is_identity() const;
  std::optional<int> smallest_moved_point() const;
  std::uint64_t order() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

inline Perm compose(const Perm& p, const Perm& q) { return p.then(q); }
Perm conjugate(const Perm& a, const Perm& x);  // x^-1 a x

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

/// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; identity is "()".
std::string to_cycles(const Perm& p);
Perm perm_from_cycles(const std::string& text, int degree);

}  // namespace gft
