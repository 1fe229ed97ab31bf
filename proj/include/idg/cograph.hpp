#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace idg {

/// Dense symmetric adjacency matrix over vertices 0..n-1.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t n = 0) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool operator()(std::size_t a, std::size_t b) const { return bits_[a * n_ + b] != 0; }
  void set(std::size_t a, std::size_t b, bool on = true) {
    bits_[a * n_ + b] = on;
    bits_[b * n_ + a] = on;
  }

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

/// Vertices of an induced path a-b-c-d, in path order.
using P4 = std::array<std::size_t, 4>;

/// Searches all 4-subsets for an induced P4. Parallel over the smallest
/// vertex; returns the lexicographically smallest witness.
std::optional<P4> find_induced_p4(const AdjacencyMatrix& g);

/// Sequential reference for find_induced_p4.
std::optional<P4> find_induced_p4_serial(const AdjacencyMatrix& g);

inline bool is_cograph(const AdjacencyMatrix& g) { return !find_induced_p4(g).has_value(); }

}  // namespace idg
