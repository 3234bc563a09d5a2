#include "gft/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gft {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v])
      throw DomainError("permutation images are not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::then(const Perm& other) const {
  if (degree() != other.degree())
    throw DomainError("degree mismatch in composition");
  Perm r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[i] = other.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::optional<int> Perm::smallest_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return std::nullopt;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm conjugate(const Perm& a, const Perm& x) {
  return x.inverse().then(a).then(x);
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_cycles(const Perm& p) {
  std::ostringstream out;
  std::vector<char> seen(p.degree(), 0);
  bool any = false;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    any = true;
    out << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = 1;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm perm_from_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation", 0, static_cast<int>(i));
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation", 0, static_cast<int>(i));
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point or ')' in cycle", 0, static_cast<int>(i));
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
        if (v > 1'000'000) throw ParseError("point out of range", 0, static_cast<int>(i));
      }
      if (v < 1 || v > degree)
        throw ParseError("cycle point " + std::to_string(v) + " exceeds degree " +
                             std::to_string(degree),
                         0, static_cast<int>(i));
      if (used[v - 1])
        throw ParseError("repeated point " + std::to_string(v) + " in permutation", 0,
                         static_cast<int>(i));
      used[v - 1] = 1;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Perm(std::move(img));
}

}  // namespace gft
