#include "chromlie/root_vector.hpp"

#include <algorithm>
#include <numeric>

#include "chromlie/error.hpp"

namespace chromlie {

RootVector::RootVector(std::vector<int> coords) : coords_(std::move(coords)) {
  for (int c : coords_)
    if (c < 0) throw DomainError("negative coordinate in root vector");
}

RootVector::RootVector(std::initializer_list<int> coords)
    : RootVector(std::vector<int>(coords)) {}

RootVector RootVector::unit(std::size_t n, std::size_t i) {
  RootVector v(n);
  v.coords_.at(i) = 1;
  return v;
}

long RootVector::height() const { return std::accumulate(coords_.begin(), coords_.end(), 0L); }

bool RootVector::is_zero() const {
  for (int c : coords_)
    if (c != 0) return false;
  return true;
}

long RootVector::gcd() const {
  long g = 0;
  for (int c : coords_) g = std::gcd(g, static_cast<long>(c));
  if (g == 0) throw DomainError("gcd of the zero vector");
  return g;
}

std::uint64_t RootVector::support_mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) m |= std::uint64_t{1} << i;
  return m;
}

bool RootVector::fits_within(const RootVector& cap) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > cap.coords_[i]) return false;
  return true;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  if (o.size() != size()) throw DomainError("root vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  if (o.size() != size()) throw DomainError("root vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] -= o.coords_[i];
    if (coords_[i] < 0) throw DomainError("root vector subtraction went negative");
  }
  return *this;
}

RootVector RootVector::scaled(int factor) const {
  RootVector r = *this;
  for (int& c : r.coords_) c *= factor;
  return r;
}

RootVector RootVector::divided(long d) const {
  RootVector r = *this;
  for (int& c : r.coords_) {
    if (c % d != 0) throw DomainError("root vector not divisible");
    c = static_cast<int>(c / d);
  }
  return r;
}

std::strong_ordering operator<=>(const RootVector& a, const RootVector& b) {
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  return a.coords_ <=> b.coords_;
}

std::string RootVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::size_t RootVectorHash::operator()(const RootVector& v) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int c : v.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {
void fill_height(std::size_t i, int left, RootVector& cur, std::vector<RootVector>& out) {
  if (i + 1 == cur.size()) {
    cur[i] = left;
    out.push_back(cur);
    return;
  }
  for (int c = 0; c <= left; ++c) {
    cur[i] = c;
    fill_height(i + 1, left - c, cur, out);
  }
}
}  // namespace

std::vector<RootVector> vectors_of_height(std::size_t n, int h) {
  std::vector<RootVector> out;
  if (n == 0) {
    if (h == 0) out.emplace_back();
    return out;
  }
  RootVector cur(n);
  fill_height(0, h, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chromlie
