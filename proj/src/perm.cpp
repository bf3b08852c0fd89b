#include "galois/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace galois {

  Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw std::invalid_argument("Perm: image array is not a bijection");
      }
      seen[x] = true;
    }
  }

  Perm Perm::identity(std::size_t degree) {
    Perm p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  Perm Perm::from_cycles(std::size_t degree, std::vector<std::vector<Point>> const& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> moved(degree, false);
    for (auto const& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree) {
          throw std::invalid_argument("Perm: cycle point out of range");
        }
        if (moved[c[i]]) {
          throw std::invalid_argument("Perm: cycles are not disjoint");
        }
        moved[c[i]] = true;
        img[c[i]]   = c[(i + 1) % c.size()];
      }
    }
    return Perm(std::move(img));
  }

  Perm Perm::operator*(Perm const& other) const {
    if (other.degree() != degree()) {
      throw std::invalid_argument("Perm: degree mismatch in product");
    }
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      r.images_[i] = images_[other.images_[i]];
    }
    return r;
  }

  Perm Perm::inverse() const {
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      r.images_[images_[i]] = static_cast<Point>(i);
    }
    return r;
  }

  Perm Perm::pow(long long k) const {
    Perm base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                                 : static_cast<unsigned long long>(k);
    Perm result = identity(degree());
    while (e > 0) {
      if (e & 1) {
        result = result * base;
      }
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  bool Perm::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::size_t Perm::order() const {
    std::size_t       result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  std::string Perm::to_cycle_string() const {
    std::ostringstream out;
    std::vector<bool>  seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) {
        continue;
      }
      out << '(';
      bool first = true;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (!first) {
          out << ' ';
        }
        out << j + 1;
        first = false;
      }
      out << ')';
    }
    std::string s = out.str();
    return s.empty() ? "()" : s;
  }

  std::size_t PermHash::operator()(Perm const& p) const noexcept {
    // FNV-1a over the image array.
    std::size_t h = 1469598103934665603ULL;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }

}  // namespace galois
