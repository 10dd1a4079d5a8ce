#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "nbpoly/errors.hpp"

namespace nbpoly {

inline constexpr int kMaxVertices = 64;

// Subset of {0, ..., n-1} over a fixed universe size n, backed by one
// 64-bit word. Sets over different universes never compare equal and
// refuse to combine.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : n_(check_universe(universe)) {}

  VertexSet(int universe, std::initializer_list<int> members)
      : n_(check_universe(universe)) {
    for (int v : members) insert(v);
  }

  static VertexSet from_bits(int universe, std::uint64_t bits) {
    VertexSet s(universe);
    if (universe < kMaxVertices && (bits >> universe) != 0)
      throw ArgumentError("bit set outside universe of size " +
                          std::to_string(universe));
    s.bits_ = bits;
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    s.bits_ = universe == 0 ? 0 : (~std::uint64_t{0} >> (kMaxVertices - universe));
    return s;
  }

  int universe() const { return n_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(int v) const {
    check_vertex(v);
    return (bits_ >> v) & 1u;
  }

  void insert(int v) {
    check_vertex(v);
    bits_ |= std::uint64_t{1} << v;
  }

  void erase(int v) {
    check_vertex(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }

  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    return (bits_ & ~other.bits_) == 0;
  }

  VertexSet operator&(const VertexSet& o) const { return combined(o, bits_ & o.bits_); }
  VertexSet operator|(const VertexSet& o) const { return combined(o, bits_ | o.bits_); }
  VertexSet operator-(const VertexSet& o) const { return combined(o, bits_ & ~o.bits_); }

  // Complement within the universe.
  VertexSet operator~() const { return combined(*this, full(n_).bits_ & ~bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
      out.push_back(std::countr_zero(rest));
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : elements()) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

  bool operator==(const VertexSet&) const = default;

 private:
  static int check_universe(int universe) {
    if (universe < 0) throw ArgumentError("negative universe size");
    if (universe > kMaxVertices)
      throw CapacityError("universe size " + std::to_string(universe) +
                          " exceeds the " + std::to_string(kMaxVertices) +
                          "-vertex capacity");
    return universe;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " outside universe of size " + std::to_string(n_));
  }

  void check_same_universe(const VertexSet& other) const {
    if (n_ != other.n_)
      throw ArgumentError("vertex sets over different universes (" +
                          std::to_string(n_) + " vs " +
                          std::to_string(other.n_) + ")");
  }

  VertexSet combined(const VertexSet& other, std::uint64_t bits) const {
    check_same_universe(other);
    VertexSet s(n_);
    s.bits_ = bits;
    return s;
  }

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace nbpoly
