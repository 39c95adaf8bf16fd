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

#ifndef SCSYNTH_GATE_SET_HPP
#define SCSYNTH_GATE_SET_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scs/su2.hpp"

namespace scs {

struct Generator {
  std::string name;
  Unitary2 unitary;
  int t_weight = 0;
};

/// A finite, inverse-closed generating set. Each generator is paired with
/// its inverse (possibly itself). Named composites (S, X, Y, Z, ...) are
/// short words over the generators, used for Pauli dressing and for naming
/// targets on the CLI.
class GateSet {
 public:
  GateSet(std::vector<Generator> gens, std::vector<int> inverse_map);

  /// The built-in Clifford+T core set {H, T, Tdg} with composites
  /// S = T^2, Sdg, Z = T^4, X = H Z H, Y ~ X then Z.
  static GateSet clifford_t();

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_[static_cast<size_t>(i)]; }
  int inverse(int i) const { return inverse_[static_cast<size_t>(i)]; }

  /// Generator index by name, or -1.
  int index_of(const std::string& name) const;

  /// Composite expansion (generator indices in application order), or
  /// nullptr if the name is not defined.
  const std::vector<std::int32_t>* composite(const std::string& name) const;

  void define_composite(const std::string& name,
                        std::vector<std::int32_t> indices);

  /// True when X, Y and Z are available (as generators or composites).
  bool has_paulis() const;

  /// Stable 64-bit fingerprint of names, unitaries and t-weights; stored in
  /// net files to detect mismatched gate sets.
  std::uint64_t fingerprint() const;

 private:
  std::vector<Generator> gens_;
  std::vector<int> inverse_;
  std::map<std::string, std::vector<std::int32_t>> composites_;
};

/// A word over a gate set: generator indices in application order
/// (indices.front() acts first). The cached unitary is the matrix product
/// gen[indices.back()] * ... * gen[indices.front()].
class GateWord {
 public:
  GateWord() = default;

  static GateWord single(const GateSet& gs, int index);
  static GateWord from_indices(const GateSet& gs,
                               std::vector<std::int32_t> indices);

  /// Parses a whitespace-separated list of generator or composite names.
  static GateWord parse(const GateSet& gs, const std::string& text);

  const std::vector<std::int32_t>& indices() const { return idx_; }
  std::size_t length() const { return idx_.size(); }
  const Unitary2& unitary() const { return u_; }

  int t_count(const GateSet& gs) const;

  /// Recomputes the unitary by folding the generators; used to re-verify
  /// the cached value.
  Unitary2 fold(const GateSet& gs) const;

  GateWord inverse(const GateSet& gs) const;

  /// this ++ next in application order, with free reduction (adjacent
  /// generator/inverse pairs cancel). The cached unitary is the exact
  /// product of the two cached unitaries.
  GateWord then(const GateSet& gs, const GateWord& next) const;

  std::string str(const GateSet& gs) const;

  bool operator==(const GateWord& o) const { return idx_ == o.idx_; }

 private:
  std::vector<std::int32_t> idx_;
  Unitary2 u_;
};

}  // namespace scs

#endif  // SCSYNTH_GATE_SET_HPP
