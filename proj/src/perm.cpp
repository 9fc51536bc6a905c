#include "moonshine/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace moonshine::groups {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size());
  for (auto i : images_) {
    if (i >= images_.size() || seen[i])
      throw std::invalid_argument("Perm: images do not form a bijection");
    seen[i] = true;
  }
}

Perm Perm::identity(std::size_t degree)
{
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  return Perm(std::move(im));
}

Perm Perm::cycle(std::size_t degree, const std::vector<std::uint32_t>& points)
{
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k] >= degree)
      throw std::invalid_argument("Perm::cycle: point out of range");
    im[points[k]] = points[(k + 1) % points.size()];
  }
  return Perm(std::move(im));
}

Perm Perm::operator*(const Perm& rhs) const
{
  if (rhs.degree() != degree())
    throw std::invalid_argument("Perm: degree mismatch");
  Perm r = rhs;
  for (auto& x : r.images_)
    x = images_[x];
  return r;
}

Perm Perm::inverse() const
{
  Perm r = *this;
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = i;
  return r;
}

bool Perm::is_identity() const
{
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::size_t Perm::fixed_points() const
{
  std::size_t n = 0;
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    n += images_[i] == i;
  return n;
}

std::string Perm::cycle_notation() const
{
  std::ostringstream os;
  std::vector<bool> done(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i)
      continue;
    os << '(';
    for (std::uint32_t j = i; !done[j]; j = images_[j]) {
      if (j != i)
        os << ' ';
      os << j;
      done[j] = true;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept
{
  // FNV-1a over the image vector
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace moonshine::groups
