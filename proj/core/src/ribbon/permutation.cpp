#include "symvol/ribbon/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace symvol::ribbon {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("Permutation: not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::size_t> images(size);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t size, std::span<const Cycle> cycles) {
  std::vector<std::size_t> images(size);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(size, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::size_t from = cycle[i];
      if (from >= size) throw std::invalid_argument("Permutation: point out of range");
      if (used[from]) throw std::invalid_argument("Permutation: point repeated across cycles");
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t Permutation::cycle_count() const {
  std::size_t count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (std::size_t x = start; !seen[x]; x = images_[x]) seen[x] = true;
  }
  return count;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<std::size_t> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = a(b(i));
  return Permutation(std::move(images));
}

}  // namespace symvol::ribbon
