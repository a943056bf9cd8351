#pragma once

// Hypergraph generators for the property suites.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "bergepath/hypergraph.hpp"

namespace gen {

using bergepath::Hyperedge;
using bergepath::Hypergraph;
using bergepath::VertexId;

/// The r-subsets of {0..n-1} in lexicographic order.
inline std::vector<Hyperedge> all_edges(int n, int r) { return bergepath::complete_hypergraph(n, r).edges(); }

inline Hypergraph from_mask(int n, int r, const std::vector<Hyperedge>& slots, std::uint64_t mask) {
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (mask >> i & 1) edges.push_back(slots[i]);
  return Hypergraph(n, r, std::move(edges));
}

/// Orderly generation of r-graphs on n vertices up to isomorphism. An edge
/// set is a bitmask over the lexicographic edge list; the representative of a
/// class is its numerically largest image under vertex permutations. Removing
/// the lowest set bit of a representative gives a representative, so children
/// only add bits below the current lowest one.
class Orderly {
 public:
  Orderly(int n, int r) : n_(n), r_(r), slots_(all_edges(n, r)) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> image(slots_.size());
      for (std::size_t i = 0; i < slots_.size(); ++i) {
        std::vector<VertexId> vs;
        for (VertexId v : slots_[i]) vs.push_back(static_cast<VertexId>(perm[v]));
        std::sort(vs.begin(), vs.end());
        image[i] = static_cast<int>(std::find(slots_.begin(), slots_.end(), Hyperedge(vs)) - slots_.begin());
      }
      images_.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  bool canonical(std::uint64_t mask) const {
    for (const auto& image : images_) {
      std::uint64_t m = 0;
      for (std::uint64_t rest = mask; rest; rest &= rest - 1) m |= std::uint64_t{1} << image[std::countr_zero(rest)];
      if (m > mask) return false;
    }
    return true;
  }

  void for_each(const std::function<void(const Hypergraph&)>& f) const { grow(0, f); }

  std::size_t count() const {
    std::size_t c = 0;
    for_each([&](const Hypergraph&) { ++c; });
    return c;
  }

 private:
  void grow(std::uint64_t mask, const std::function<void(const Hypergraph&)>& f) const {
    f(from_mask(n_, r_, slots_, mask));
    const int limit = mask ? std::countr_zero(mask) : static_cast<int>(slots_.size());
    for (int b = 0; b < limit; ++b) {
      const std::uint64_t child = mask | std::uint64_t{1} << b;
      if (canonical(child)) grow(child, f);
    }
  }

  int n_, r_;
  std::vector<Hyperedge> slots_;
  std::vector<std::vector<int>> images_;
};

/// Each r-subset independently with probability density.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int r, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Hyperedge> edges;
  for (const auto& e : all_edges(n, r))
    if (coin(rng)) edges.push_back(e);
  return Hypergraph(n, r, std::move(edges));
}

}  // namespace gen
