// Copyright 2026 The fixgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIXGRAPH_AUTOMORPHISM_HPP_
#define FIXGRAPH_AUTOMORPHISM_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixgraph/graph.hpp"

namespace fixgraph {

// Raised when a group would exceed the caller's element cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bijection on 0..order-1, stored as its image array.
class Permutation {
 public:
  static Permutation identity(int order);

  // Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Vertex> images);

  int order() const { return static_cast<int>(images_.size()); }
  Vertex operator[](Vertex v) const { return images_[v]; }
  std::span<const Vertex> images() const { return images_; }

  bool is_identity() const;
  std::vector<Vertex> fixed_points() const;
  std::vector<Vertex> support() const;

  // (a * b)(v) = a(b(v)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

// Explicit element list of a permutation group, identity first and the rest
// in lexicographic order of image arrays. Elements are stored contiguously.
class AutomorphismGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  AutomorphismGroup(int degree, std::vector<Vertex> flat_images);

  // Number of points acted on.
  int degree() const { return degree_; }
  std::size_t size() const { return size_; }
  bool is_trivial() const { return size_ == 1; }

  std::span<const Vertex> element(std::size_t i) const {
    return {images_.data() + i * degree_, static_cast<std::size_t>(degree_)};
  }
  Permutation permutation(std::size_t i) const;

 private:
  int degree_;
  std::size_t size_;
  std::vector<Vertex> images_;
};

// Exhaustive backtracking over vertex images. Candidates are pruned by a
// vertex invariant (degree, sorted distance profile) and by distance
// consistency with every earlier assignment. Throws CapacityError once more
// than `cap` automorphisms are found.
AutomorphismGroup enumerate_automorphisms(
    const Graph& g, std::size_t cap = AutomorphismGroup::kDefaultCap);

// All order! permutations filtered by is_automorphism; for small orders.
AutomorphismGroup enumerate_automorphisms_naive(const Graph& g);

bool is_automorphism(const Graph& g, const Permutation& p);
bool is_automorphism(const Graph& g, std::span<const Vertex> images);

// Orbits sorted by smallest member; each orbit sorted.
struct OrbitPartition {
  std::vector<std::vector<Vertex>> classes;
  std::vector<int> class_of;  // vertex -> index into classes

  bool similar(Vertex u, Vertex v) const { return class_of[u] == class_of[v]; }
  const std::vector<Vertex>& orbit(Vertex v) const {
    return classes[class_of[v]];
  }
};

OrbitPartition orbit_partition(const AutomorphismGroup& grp);

// Vertices lying in orbits of size >= 2, sorted.
std::vector<Vertex> nontrivial_orbit_vertices(const OrbitPartition& orbits);

// Unordered pairs of distinct similar vertices, sorted.
std::vector<VertexPair> similar_pairs(const AutomorphismGroup& grp);
std::vector<VertexPair> similar_pairs(const OrbitPartition& orbits);

// Pointwise stabilizer of `points`.
AutomorphismGroup stabilizer(const AutomorphismGroup& grp,
                             std::span<const Vertex> points);

}  // namespace fixgraph

#endif  // FIXGRAPH_AUTOMORPHISM_HPP_
