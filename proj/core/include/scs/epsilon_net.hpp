// Copyright 2026 The scsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCSYNTH_EPSILON_NET_HPP
#define SCSYNTH_EPSILON_NET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "scs/gate_set.hpp"

namespace scs {

/// Distinct failure modes of the net file reader.
enum class NetIoKind {
  kFormatError,
  kVersionMismatch,
  kTruncated,
  kChecksumMismatch,
};

class NetIoError : public std::runtime_error {
 public:
  NetIoError(NetIoKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  NetIoKind kind() const { return kind_; }

 private:
  NetIoKind kind_;
};

/// Thrown when word enumeration would exceed the configured entry cap.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when the built net fails its coverage check.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All reduced words over `gs` up to length `max_len` (a generator is never
/// immediately followed by its inverse), deduplicated at projective
/// distance 1e-9. The shortest word (ties: lexicographically smallest index
/// sequence) is kept as the canonical representative of each distinct
/// unitary. Results are ordered by (length, lexicographic indices); the
/// identity (empty word) is entry 0.
///
/// Throws EnumerationCapExceeded if more than `cap` distinct entries would
/// be produced.
std::vector<GateWord> enumerate_words(const GateSet& gs, int max_len,
                                      std::size_t cap = 5000000);

struct NetBuildOptions {
  std::size_t cap = 5000000;
  /// Haar samples drawn for the coverage check; 0 disables the check.
  int coverage_samples = 2000;
  std::uint64_t coverage_seed = 0x5C5EEDULL;
};

struct NearHit {
  std::size_t entry = 0;
  double distance = 0;  // projective op_distance to the query
};

/// Stage-1 output: a finite set of (word, unitary) entries covering SU(2)
/// at radius eps0, retaining up to k_reps distinct representatives per
/// quaternion-space cell of side eps0/2, with a k-nearest index over the
/// 4-dimensional unit-quaternion embedding (where the projective operator
/// distance is the Euclidean distance to the closer of +/-q).
class EpsilonNet {
 public:
  static EpsilonNet build(const GateSet& gs, double eps0, int k_reps,
                          int max_len, const NetBuildOptions& opts = {});

  const GateSet& gate_set() const { return gs_; }
  double eps0() const { return eps0_; }
  int k_reps() const { return k_reps_; }
  int max_len() const { return max_len_; }
  std::size_t size() const { return entries_.size(); }
  const GateWord& entry(std::size_t i) const { return entries_[i]; }

  /// k nearest entries by projective op_distance, nondecreasing distance,
  /// ties broken by entry index. k larger than the net returns everything.
  std::vector<NearHit> nearest(const Unitary2& target, int k) const;

  void save(const std::string& path) const;
  static EpsilonNet load(const std::string& path);

 private:
  EpsilonNet(GateSet gs, double eps0, int k_reps, int max_len,
             std::vector<GateWord> entries);
  void build_index();

  GateSet gs_;
  double eps0_;
  int k_reps_;
  int max_len_;
  std::vector<GateWord> entries_;

  // Flat kd-tree over 2*size() points (each entry enters as +q and -q).
  struct KdNode {
    int axis = -1;       // -1 for leaf
    double split = 0;
    int left = -1, right = -1;
    int begin = 0, end = 0;  // leaf range into points_
  };
  std::vector<std::array<double, 4>> points_;
  std::vector<std::uint32_t> point_entry_;
  std::vector<std::uint32_t> order_;  // permutation of points
  std::vector<KdNode> nodes_;
  int build_node(int begin, int end);
  void query(int node, const std::array<double, 4>& q,
             std::vector<std::pair<double, std::uint32_t>>& heap,
             std::size_t k) const;
};

inline EpsilonNet build_net(const GateSet& gs, double eps0, int k_reps,
                            int max_len, const NetBuildOptions& opts = {}) {
  return EpsilonNet::build(gs, eps0, k_reps, max_len, opts);
}
inline void save_net(const EpsilonNet& net, const std::string& path) {
  net.save(path);
}
inline EpsilonNet load_net(const std::string& path) {
  return EpsilonNet::load(path);
}

}  // namespace scs

#endif  // SCSYNTH_EPSILON_NET_HPP
