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

#include "scs/sk.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "synth_engine.hpp"

namespace scs {

namespace {

constexpr double kGcDomain = 0.5;
constexpr double kNegligibleDelta = 1e-14;

}  // namespace

double balanced_commutator_angle(double theta) {
  double target = std::sin(theta / 2);
  double lo = 0.0, hi = 2.0;
  // g(phi) = 2 sin^2(phi/2) sqrt(1 - sin^4(phi/2)) is increasing on [0, 2].
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double s = std::sin(mid / 2);
    double s2 = s * s;
    double val = 2 * s2 * std::sqrt(std::max(0.0, 1 - s2 * s2));
    if (val < target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15) break;
  }
  return 0.5 * (lo + hi);
}

GcPair gc_decompose(const Unitary2& delta, double split_angle) {
  double dist = op_distance(delta, Unitary2::identity());
  if (dist >= kGcDomain) {
    throw std::domain_error(
        "gc_decompose: ||delta - I|| = " + std::to_string(dist) +
        " >= 0.5; outside the principal-branch regime");
  }
  AxisAngle aa = to_axis_angle(delta);
  if (aa.angle < 1e-16) {
    return {Unitary2::identity(), Unitary2::identity()};
  }
  double phi = balanced_commutator_angle(aa.angle);

  // Split frame: perpendicular axes in the xy-plane, rotated by split_angle.
  double cs = std::cos(split_angle), sn = std::sin(split_angle);
  Unitary2 v = Unitary2::rotation({cs, sn, 0}, phi);
  Unitary2 w = Unitary2::rotation({-sn, cs, 0}, phi);

  Unitary2 comm = v * w * v.dagger() * w.dagger();
  AxisAngle ca = to_axis_angle(comm);

  // Conjugate both factors by the rotation taking the commutator's axis to
  // the delta axis; this maps the commutator exactly onto delta.
  Vec3 c = cross(ca.axis, aa.axis);
  double d = dot(ca.axis, aa.axis);
  double cn = norm(c);
  Unitary2 align;
  if (cn < 1e-12) {
    if (d > 0) {
      align = Unitary2::identity();
    } else {
      Vec3 perp = cross(ca.axis, {1, 0, 0});
      if (norm(perp) < 1e-6) perp = cross(ca.axis, {0, 1, 0});
      align = Unitary2::rotation(perp, kPi);
    }
  } else {
    align = Unitary2::rotation(c, std::atan2(cn, d));
  }
  return {align * v * align.dagger(), align * w * align.dagger()};
}

namespace detail {

namespace {

struct CacheKey {
  std::int64_t a, b, c, d;
  int level;
  bool operator==(const CacheKey&) const = default;
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 0x100000001B3ULL;
    };
    mix(static_cast<std::uint64_t>(k.a));
    mix(static_cast<std::uint64_t>(k.b));
    mix(static_cast<std::uint64_t>(k.c));
    mix(static_cast<std::uint64_t>(k.d));
    mix(static_cast<std::uint64_t>(k.level));
    return h;
  }
};

using Cache = std::unordered_map<CacheKey, GateWord, CacheKeyHash>;

CacheKey make_key(const Unitary2& u, int level) {
  const auto& q = u.quat();
  auto quant = [](double x) {
    return static_cast<std::int64_t>(std::llround(x * 1e7));
  };
  return {quant(q[0]), quant(q[1]), quant(q[2]), quant(q[3]), level};
}

GateWord synth(const Unitary2& target, int level, const EpsilonNet& net,
               SynthPolicy& policy, Cache* cache,
               std::vector<SpineRecord>* spine) {
  CacheKey key{};
  if (cache != nullptr) {
    key = make_key(target, level);
    auto it = cache->find(key);
    if (it != cache->end() && spine == nullptr) return it->second;
  }

  GateWord word = net.entry(policy.select_base(net, target));
  if (spine != nullptr) spine->push_back({word.unitary(), word.length()});

  const GateSet& gs = net.gate_set();
  for (int k = 1; k <= level; ++k) {
    Unitary2 delta = target * word.unitary().dagger();
    double prev_dist = op_distance(word.unitary(), target);
    if (op_distance(delta, Unitary2::identity()) >= kNegligibleDelta) {
      GcPair pair = policy.select_pair(delta, k, level);
      GateWord v = synth(pair.v, k - 1, net, policy, cache, nullptr);
      GateWord w = synth(pair.w, k - 1, net, policy, cache, nullptr);
      GateWord cand = word.then(gs, w.inverse(gs))
                          .then(gs, v.inverse(gs))
                          .then(gs, w)
                          .then(gs, v);
      if (op_distance(cand.unitary(), target) < prev_dist) {
        word = std::move(cand);
      }
    }
    if (spine != nullptr) spine->push_back({word.unitary(), word.length()});
  }

  if (cache != nullptr) cache->emplace(key, word);
  return word;
}

}  // namespace

GateWord synthesize_recursive(const Unitary2& target, int depth,
                              const EpsilonNet& net, SynthPolicy& policy,
                              bool use_cache,
                              std::vector<SpineRecord>* spine) {
  if (depth < 0 || depth > 30) {
    throw std::invalid_argument("synthesize: depth must be in [0, 30]");
  }
  Cache cache;
  return synth(target, depth, net, policy, use_cache ? &cache : nullptr,
               spine);
}

}  // namespace detail

namespace {

class DeterministicPolicy : public detail::SynthPolicy {
 public:
  std::size_t select_base(const EpsilonNet& net,
                          const Unitary2& target) override {
    return net.nearest(target, 1).at(0).entry;
  }
  GcPair select_pair(const Unitary2& delta, int, int) override {
    return gc_decompose(delta);
  }
};

void check_contraction_precondition(const EpsilonNet& net) {
  double c = kContractionNominal;
  if (c * c * net.eps0() >= 0.95) {
    throw std::domain_error(
        "sk_synthesize: contraction precondition violated (c^2 * eps0 = " +
        std::to_string(c * c * net.eps0()) +
        " too close to 1); rebuild the net with a smaller eps0");
  }
}

}  // namespace

GateWord sk_synthesize(const Unitary2& target, const SkParams& params) {
  if (params.net == nullptr) {
    throw std::invalid_argument("sk_synthesize: null net");
  }
  check_contraction_precondition(*params.net);
  DeterministicPolicy policy;
  return detail::synthesize_recursive(target, params.depth, *params.net,
                                      policy, params.use_cache, nullptr);
}

std::vector<LevelRecord> synth_trace(const Unitary2& target,
                                     const SkParams& params) {
  if (params.net == nullptr) {
    throw std::invalid_argument("synth_trace: null net");
  }
  check_contraction_precondition(*params.net);
  DeterministicPolicy policy;
  std::vector<detail::SpineRecord> spine;
  detail::synthesize_recursive(target, params.depth, *params.net, policy,
                               params.use_cache, &spine);
  std::vector<LevelRecord> out;
  out.reserve(spine.size());
  for (const auto& rec : spine) {
    out.push_back({op_distance(rec.approx, target), rec.word_length});
  }
  return out;
}

int depth_for_eps(double eps, double eps0, double contraction_c) {
  if (!(eps > 0) || !(eps0 > 0)) {
    throw std::invalid_argument("depth_for_eps: eps and eps0 must be > 0");
  }
  if (contraction_c * contraction_c * eps0 >= 0.95) {
    throw std::domain_error(
        "depth_for_eps: contraction precondition c^2 * eps0 < 1 violated; "
        "use a finer net");
  }
  double e = eps0;
  for (int depth = 0; depth <= 30; ++depth) {
    if (e <= eps) return depth;
    e = contraction_c * std::pow(e, 1.5);
  }
  throw std::domain_error("depth_for_eps: eps not reachable within depth 30");
}

}  // namespace scs
