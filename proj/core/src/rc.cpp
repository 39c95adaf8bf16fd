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

#include "scs/rc.hpp"

#include <stdexcept>
#include <vector>

#include "scs/sk.hpp"

namespace scs {

Unitary2 noisy_gate(const Unitary2& ideal, const NoiseModel& noise) {
  if (noise.overrotation_alpha == 0.0) return ideal;
  AxisAngle aa = to_axis_angle(ideal);
  if (aa.angle < 1e-12) return ideal;
  Vec3 axis = aa.axis;
  switch (noise.axis_policy) {
    case AxisPolicy::kGateAxis:
      break;
    case AxisPolicy::kFixedX:
      axis = {1, 0, 0};
      break;
    case AxisPolicy::kFixedY:
      axis = {0, 1, 0};
      break;
    case AxisPolicy::kFixedZ:
      axis = {0, 0, 1};
      break;
  }
  return Unitary2::rotation(axis, noise.overrotation_alpha) * ideal;
}

Channel1Q word_channel(const GateWord& word, const GateSet& gs,
                       const NoiseModel& noise) {
  Channel1Q depol;
  bool has_depol = noise.depolarizing_p > 0;
  if (has_depol) depol = Channel1Q::depolarizing(noise.depolarizing_p);
  Channel1Q ch;
  for (std::int32_t idx : word.indices()) {
    ch = ch.then(Channel1Q::from_unitary(
        noisy_gate(gs.gen(idx).unitary, noise)));
    if (has_depol) ch = ch.then(depol);
  }
  return ch;
}

Channel1Q average_channel(std::span<const GateWord> words, const GateSet& gs,
                          const NoiseModel& noise) {
  if (words.empty()) {
    throw std::invalid_argument("average_channel: empty word list");
  }
  Eigen::Matrix4d acc = Eigen::Matrix4d::Zero();
  for (const GateWord& w : words) acc += word_channel(w, gs, noise).ptm();
  return Channel1Q(acc / static_cast<double>(words.size()));
}

namespace {

GateWord named_word(const GateSet& gs, const std::string& name) {
  int gi = gs.index_of(name);
  if (gi >= 0) return GateWord::single(gs, gi);
  const auto* comp = gs.composite(name);
  if (comp == nullptr) {
    throw std::invalid_argument("dress_word: gate set lacks '" + name + "'");
  }
  return GateWord::from_indices(gs, *comp);
}

struct CompensationTable {
  std::vector<GateWord> paulis;  // I, X, Y, Z
  std::vector<GateWord> cliffords;  // candidates for g P g^dag
};

CompensationTable build_table(const GateSet& gs) {
  if (!gs.has_paulis()) {
    throw std::invalid_argument(
        "dress_word: gate set lacks Pauli gates (X, Y, Z)");
  }
  CompensationTable t;
  t.paulis.push_back(GateWord{});
  for (const char* p : {"X", "Y", "Z"}) t.paulis.push_back(named_word(gs, p));
  // Compensations of Paulis through T-like gates live in {P, S P, Sdg P}.
  t.cliffords = t.paulis;
  for (const char* s : {"S", "Sdg"}) {
    const auto* comp = gs.composite(s);
    int gi = gs.index_of(s);
    if (comp == nullptr && gi < 0) continue;
    GateWord sw = gi >= 0 ? GateWord::single(gs, gi)
                          : GateWord::from_indices(gs, *comp);
    for (const GateWord& p : t.paulis) {
      t.cliffords.push_back(p.then(gs, sw));  // P first, then S
    }
  }
  return t;
}

}  // namespace

GateWord dress_word(const GateWord& word, const GateSet& gs, Rng& rng,
                    const DressOptions& opts) {
  CompensationTable table = build_table(gs);

  if (opts.mode == DressMode::kGlobalFrameResynth) {
    if (opts.net == nullptr) {
      throw std::invalid_argument(
          "dress_word: kGlobalFrameResynth requires a net");
    }
    std::size_t draw = rng.below(4);
    if (draw == 0) return word;
    const GateWord& frame = table.paulis[draw];
    Unitary2 u = word.unitary();
    Unitary2 comp = u * frame.unitary().dagger() * u.dagger();
    SkParams params{opts.resynth_depth, opts.net, false};
    GateWord comp_word = sk_synthesize(comp, params);
    return frame.then(gs, word).then(gs, comp_word);
  }

  GateWord out;
  for (std::int32_t idx : word.indices()) {
    GateWord g = GateWord::single(gs, idx);
    if (gs.gen(idx).t_weight == 0) {
      out = out.then(gs, g);
      continue;
    }
    std::size_t draw = rng.below(4);
    if (draw == 0) {
      out = out.then(gs, g);
      continue;
    }
    const GateWord& frame = table.paulis[draw];
    Unitary2 comp = gs.gen(idx).unitary * frame.unitary().dagger() *
                    gs.gen(idx).unitary.dagger();
    const GateWord* comp_word = nullptr;
    for (const GateWord& cand : table.cliffords) {
      if (op_distance(cand.unitary(), comp) <= 1e-9) {
        comp_word = &cand;
        break;
      }
    }
    if (comp_word == nullptr) {
      throw std::runtime_error(
          "dress_word: hard gate '" + gs.gen(idx).name +
          "' has no Clifford Pauli-compensation; use kGlobalFrameResynth");
    }
    out = out.then(gs, frame).then(gs, g).then(gs, *comp_word);
  }
  return out;
}

}  // namespace scs
