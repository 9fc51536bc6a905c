#ifndef MOONSHINE_PERM_HPP
#define MOONSHINE_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace moonshine::groups {

/// Permutation of {0, ..., n-1}. Products compose right to left:
/// (p * q)(i) = p(q(i)).
class Perm {
public:
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t degree);
  /// The cycle (points[0] points[1] ... points[k-1]) on `degree` points.
  static Perm cycle(std::size_t degree, const std::vector<std::uint32_t>& points);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  std::size_t fixed_points() const;

  /// Disjoint cycles, e.g. "(0 1 2)(3 4)"; "()" for the identity.
  std::string cycle_notation() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

} // namespace moonshine::groups

#endif
