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

#include "fixgraph/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fixgraph {

Permutation Permutation::identity(int order) {
  std::vector<Vertex> images(order);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<Vertex> images)
    : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Vertex v : images_) {
    if (v < 0 || v >= order() || hit[v]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    hit[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (Vertex v = 0; v < order(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

std::vector<Vertex> Permutation::fixed_points() const {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < order(); ++v) {
    if (images_[v] == v) result.push_back(v);
  }
  return result;
}

std::vector<Vertex> Permutation::support() const {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < order(); ++v) {
    if (images_[v] != v) result.push_back(v);
  }
  return result;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("composing permutations of different order");
  }
  std::vector<Vertex> images(a.order());
  for (Vertex v = 0; v < a.order(); ++v) images[v] = a[b[v]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> images(order());
  for (Vertex v = 0; v < order(); ++v) images[images_[v]] = v;
  return Permutation(std::move(images));
}

AutomorphismGroup::AutomorphismGroup(int degree, std::vector<Vertex> flat_images)
    : degree_(degree), images_(std::move(flat_images)) {
  if (degree < 1 || images_.size() % degree != 0 || images_.empty()) {
    throw std::invalid_argument("group storage does not match degree");
  }
  size_ = images_.size() / degree;
}

Permutation AutomorphismGroup::permutation(std::size_t i) const {
  auto images = element(i);
  return Permutation(std::vector<Vertex>(images.begin(), images.end()));
}

namespace {

// Vertex classes under (degree, sorted distance row). Automorphisms never
// map between different classes.
std::vector<int> invariant_classes(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.order();
  std::map<std::vector<int>, int> ids;
  std::vector<int> cls(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> key;
    key.reserve(n + 1);
    key.push_back(g.degree(v));
    for (Vertex w = 0; w < n; ++w) key.push_back(dist(v, w));
    std::sort(key.begin() + 1, key.end());
    auto [it, inserted] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
    cls[v] = it->second;
  }
  return cls;
}

class Backtracker {
 public:
  Backtracker(const Graph& g, std::size_t cap)
      : n_(g.order()),
        cap_(cap),
        dist_(distance_matrix(g)),
        cls_(invariant_classes(g, dist_)),
        image_(n_, -1),
        used_(n_, false) {}

  std::vector<Vertex> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(Vertex v) {
    if (v == n_) {
      if (count_ == cap_) {
        throw CapacityError("automorphism group has more than " +
                            std::to_string(cap_) +
                            " elements; raise the group-size cap");
      }
      found_.insert(found_.end(), image_.begin(), image_.end());
      ++count_;
      return;
    }
    for (Vertex c = 0; c < n_; ++c) {
      if (used_[c] || cls_[c] != cls_[v] || !consistent(v, c)) continue;
      image_[v] = c;
      used_[c] = true;
      extend(v + 1);
      used_[c] = false;
    }
    image_[v] = -1;
  }

  // Distances to already-assigned vertices must be preserved; distance 1
  // covers adjacency, so complete assignments are automorphisms.
  bool consistent(Vertex v, Vertex c) const {
    for (Vertex w = 0; w < v; ++w) {
      if (dist_(v, w) != dist_(c, image_[w])) return false;
    }
    return true;
  }

  int n_;
  std::size_t cap_;
  DistanceMatrix dist_;
  std::vector<int> cls_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  std::vector<Vertex> found_;
  std::size_t count_ = 0;
};

}  // namespace

AutomorphismGroup enumerate_automorphisms(const Graph& g, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("group-size cap must be >= 1");
  Backtracker search(g, cap);
  return AutomorphismGroup(g.order(), search.run());
}

AutomorphismGroup enumerate_automorphisms_naive(const Graph& g) {
  if (g.order() > 10) {
    throw std::invalid_argument("naive enumeration limited to order <= 10");
  }
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Vertex> flat;
  do {
    if (is_automorphism(g, p)) flat.insert(flat.end(), p.begin(), p.end());
  } while (std::next_permutation(p.begin(), p.end()));
  return AutomorphismGroup(g.order(), std::move(flat));
}

bool is_automorphism(const Graph& g, std::span<const Vertex> images) {
  const int n = g.order();
  if (static_cast<int>(images.size()) != n) {
    throw std::invalid_argument("permutation length does not match graph order");
  }
  std::vector<bool> hit(n, false);
  for (Vertex v : images) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != g.adjacent(images[u], images[v])) return false;
    }
  }
  return true;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  return is_automorphism(g, p.images());
}

namespace {

Vertex find_root(std::vector<Vertex>& parent, Vertex v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

OrbitPartition orbit_partition(const AutomorphismGroup& grp) {
  const int n = grp.degree();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < grp.size(); ++i) {
    auto g = grp.element(i);
    for (Vertex v = 0; v < n; ++v) {
      Vertex a = find_root(parent, v);
      Vertex b = find_root(parent, g[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitPartition orbits;
  orbits.class_of.assign(n, -1);
  std::vector<int> class_of_root(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    Vertex root = find_root(parent, v);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<int>(orbits.classes.size());
      orbits.classes.emplace_back();
    }
    orbits.class_of[v] = class_of_root[root];
    orbits.classes[class_of_root[root]].push_back(v);
  }
  return orbits;
}

std::vector<Vertex> nontrivial_orbit_vertices(const OrbitPartition& orbits) {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < static_cast<Vertex>(orbits.class_of.size()); ++v) {
    if (orbits.orbit(v).size() >= 2) result.push_back(v);
  }
  return result;
}

std::vector<VertexPair> similar_pairs(const OrbitPartition& orbits) {
  std::vector<VertexPair> pairs;
  const auto n = static_cast<Vertex>(orbits.class_of.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (orbits.similar(u, v)) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

std::vector<VertexPair> similar_pairs(const AutomorphismGroup& grp) {
  return similar_pairs(orbit_partition(grp));
}

AutomorphismGroup stabilizer(const AutomorphismGroup& grp,
                             std::span<const Vertex> points) {
  for (Vertex x : points) {
    if (x < 0 || x >= grp.degree()) {
      throw std::invalid_argument("stabilizer point out of range");
    }
  }
  std::vector<Vertex> flat;
  for (std::size_t i = 0; i < grp.size(); ++i) {
    auto g = grp.element(i);
    if (std::all_of(points.begin(), points.end(),
                    [&](Vertex x) { return g[x] == x; })) {
      flat.insert(flat.end(), g.begin(), g.end());
    }
  }
  return AutomorphismGroup(grp.degree(), std::move(flat));
}

}  // namespace fixgraph
