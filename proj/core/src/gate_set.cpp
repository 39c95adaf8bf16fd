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

#include "scs/gate_set.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace scs {

namespace {

std::uint64_t fnv1a64(std::uint64_t h, const void* data, std::size_t n) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

GateSet::GateSet(std::vector<Generator> gens, std::vector<int> inverse_map)
    : gens_(std::move(gens)), inverse_(std::move(inverse_map)) {
  if (gens_.empty() || inverse_.size() != gens_.size()) {
    throw std::invalid_argument("GateSet: empty set or bad inverse map");
  }
  for (int i = 0; i < size(); ++i) {
    int j = inverse_[static_cast<size_t>(i)];
    if (j < 0 || j >= size() || inverse_[static_cast<size_t>(j)] != i) {
      throw std::invalid_argument("GateSet: inverse map is not an involution");
    }
    Unitary2 prod = gens_[static_cast<size_t>(i)].unitary *
                    gens_[static_cast<size_t>(j)].unitary;
    if (op_distance(prod, Unitary2::identity()) > 1e-12) {
      throw std::invalid_argument("GateSet: generator " +
                                  gens_[static_cast<size_t>(i)].name +
                                  " has no valid inverse pairing");
    }
  }
}

GateSet GateSet::clifford_t() {
  std::vector<Generator> gens{
      {"H", Unitary2::h(), 0},
      {"T", Unitary2::t(), 1},
      {"Tdg", Unitary2::tdg(), 1},
  };
  GateSet gs(std::move(gens), {0, 2, 1});
  const std::int32_t h = 0, t = 1, td = 2;
  gs.define_composite("S", {t, t});
  gs.define_composite("Sdg", {td, td});
  gs.define_composite("Z", {t, t, t, t});
  gs.define_composite("X", {h, t, t, t, t, h});
  // Y ~ Z then X up to global phase.
  gs.define_composite("Y", {t, t, t, t, h, t, t, t, t, h});
  return gs;
}

int GateSet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (gens_[static_cast<size_t>(i)].name == name) return i;
  }
  return -1;
}

const std::vector<std::int32_t>* GateSet::composite(
    const std::string& name) const {
  auto it = composites_.find(name);
  return it == composites_.end() ? nullptr : &it->second;
}

void GateSet::define_composite(const std::string& name,
                               std::vector<std::int32_t> indices) {
  composites_[name] = std::move(indices);
}

bool GateSet::has_paulis() const {
  for (const char* p : {"X", "Y", "Z"}) {
    if (index_of(p) < 0 && composite(p) == nullptr) return false;
  }
  return true;
}

std::uint64_t GateSet::fingerprint() const {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const auto& g : gens_) {
    h = fnv1a64(h, g.name.data(), g.name.size());
    char buf[128];
    const auto& q = g.unitary.quat();
    int n = std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %d", q[0],
                          q[1], q[2], q[3], g.t_weight);
    h = fnv1a64(h, buf, static_cast<std::size_t>(n));
  }
  for (int i : inverse_) h = fnv1a64(h, &i, sizeof i);
  return h;
}

GateWord GateWord::single(const GateSet& gs, int index) {
  GateWord w;
  w.idx_.push_back(index);
  w.u_ = gs.gen(index).unitary;
  return w;
}

GateWord GateWord::from_indices(const GateSet& gs,
                                std::vector<std::int32_t> indices) {
  GateWord w;
  w.idx_ = std::move(indices);
  w.u_ = w.fold(gs);
  return w;
}

GateWord GateWord::parse(const GateSet& gs, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<std::int32_t> idx;
  while (in >> tok) {
    int i = gs.index_of(tok);
    if (i >= 0) {
      idx.push_back(i);
      continue;
    }
    const auto* comp = gs.composite(tok);
    if (comp == nullptr) {
      throw std::invalid_argument("GateWord::parse: unknown gate '" + tok +
                                  "'");
    }
    idx.insert(idx.end(), comp->begin(), comp->end());
  }
  return from_indices(gs, std::move(idx));
}

int GateWord::t_count(const GateSet& gs) const {
  int c = 0;
  for (std::int32_t i : idx_) c += gs.gen(i).t_weight;
  return c;
}

Unitary2 GateWord::fold(const GateSet& gs) const {
  Unitary2 u;
  for (std::int32_t i : idx_) u = gs.gen(i).unitary * u;
  return u;
}

GateWord GateWord::inverse(const GateSet& gs) const {
  GateWord w;
  w.idx_.reserve(idx_.size());
  for (auto it = idx_.rbegin(); it != idx_.rend(); ++it) {
    w.idx_.push_back(gs.inverse(*it));
  }
  w.u_ = u_.dagger();
  return w;
}

GateWord GateWord::then(const GateSet& gs, const GateWord& next) const {
  GateWord w;
  w.idx_ = idx_;
  for (std::int32_t i : next.idx_) {
    if (!w.idx_.empty() && gs.inverse(w.idx_.back()) == i) {
      w.idx_.pop_back();
    } else {
      w.idx_.push_back(i);
    }
  }
  w.u_ = next.u_ * u_;
  return w;
}

std::string GateWord::str(const GateSet& gs) const {
  std::string out;
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (i) out += ' ';
    out += gs.gen(idx_[i]).name;
  }
  return out;
}

}  // namespace scs
