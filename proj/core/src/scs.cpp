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

#include "scs/scs.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "synth_engine.hpp"

namespace scs {

namespace {

// Quality gate of the candidate filter: a candidate commutator may miss
// delta by at most this fraction of the level's contraction scale
// ||delta - I||_F^{3/2}, so sampled pairs stay within the geometric
// convergence regime.
constexpr double kGateCoefficient = 0.35;
// Conjugation jitter scale relative to sqrt(||delta - I||).
constexpr double kJitterCoefficient = 0.1;

double candidate_energy(const Unitary2& delta, const Unitary2& v,
                        const Unitary2& w) {
  return frob_distance(delta, v * w * v.dagger() * w.dagger());
}

double contraction_budget(const Unitary2& delta) {
  double f = frob_distance(delta, Unitary2::identity());
  return std::max(kGateCoefficient * std::pow(f, 1.5), 1e-12);
}

}  // namespace

void ScsConfig::validate() const {
  if (!(eps_target > 0)) {
    throw std::invalid_argument("ScsConfig: eps_target must be > 0");
  }
  if (k_reps < 1) throw std::invalid_argument("ScsConfig: k_reps must be >= 1");
  if (ensemble_size < 1) {
    throw std::invalid_argument("ScsConfig: ensemble_size must be >= 1");
  }
  if (!(t0 >= 0)) throw std::invalid_argument("ScsConfig: t0 must be >= 0");
  if (!(beta > 0) || !(beta < 1)) {
    throw std::invalid_argument("ScsConfig: beta must be in (0, 1)");
  }
  if (mcmc_steps < 0) {
    throw std::invalid_argument("ScsConfig: mcmc_steps must be >= 0");
  }
  if (depth < 0 || depth > 30) {
    throw std::invalid_argument("ScsConfig: depth must be in [0, 30]");
  }
}

std::vector<std::string> ScsConfig::warnings() const {
  std::vector<std::string> out;
  if (beta <= 0.5 || beta >= 0.9) {
    out.push_back("beta = " + std::to_string(beta) +
                  " is outside the recommended cooling range (0.5, 0.9)");
  }
  return out;
}

double temperature(int level, const ScsConfig& cfg) {
  if (level < 0) throw std::invalid_argument("temperature: level must be >= 0");
  return cfg.t0 * std::pow(cfg.beta, level);
}

std::vector<CandidatePair> propose_candidates(const Unitary2& delta, int count,
                                              Rng& rng) {
  if (count < 1) {
    throw std::invalid_argument("propose_candidates: count must be >= 1");
  }
  GcPair det = gc_decompose(delta);
  std::vector<CandidatePair> out;
  out.reserve(static_cast<std::size_t>(count));
  out.push_back({det.v, det.w, candidate_energy(delta, det.v, det.w)});
  if (count == 1) return out;

  double d = op_distance(delta, Unitary2::identity());
  double budget = contraction_budget(delta);
  double jitter = kJitterCoefficient * std::sqrt(d);
  // ~2/3 exact re-splits (zero-energy alternatives), the rest conjugation
  // jitters of the deterministic pair.
  int n_extra = count - 1;
  int n_exact = (2 * n_extra + 2) / 3;

  for (int slot = 0; slot < n_extra; ++slot) {
    bool exact = slot < n_exact;
    CandidatePair cand = out.front();
    for (int attempt = 0; attempt < 8; ++attempt) {
      if (exact) {
        GcPair p = gc_decompose(delta, rng.uniform(0, 2 * kPi));
        cand = {p.v, p.w, candidate_energy(delta, p.v, p.w)};
      } else {
        Unitary2 a = Unitary2::rotation(rng.unit_vector(),
                                        rng.normal(0.0, jitter));
        Unitary2 v = a * det.v * a.dagger();
        Unitary2 w = a * det.w * a.dagger();
        cand = {v, w, candidate_energy(delta, v, w)};
      }
      if (cand.energy <= budget) break;
      cand = out.front();  // fall back to the deterministic pair
    }
    out.push_back(cand);
  }
  return out;
}

std::size_t gibbs_sample_index(const std::vector<CandidatePair>& candidates,
                               double temp, Rng& rng) {
  if (candidates.empty()) {
    throw std::invalid_argument("gibbs_sample: empty candidate list");
  }
  if (!(temp > 0)) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      if (candidates[i].energy < candidates[best].energy) best = i;
    }
    return best;
  }
  double emin = candidates[0].energy;
  for (const auto& c : candidates) emin = std::min(emin, c.energy);
  std::vector<double> weights;
  weights.reserve(candidates.size());
  for (const auto& c : candidates) {
    weights.push_back(std::exp(-(c.energy - emin) / temp));
  }
  return rng.categorical(weights);
}

CandidatePair gibbs_sample(const Unitary2& delta,
                           const std::vector<CandidatePair>& candidates,
                           double temp, Rng& rng) {
  (void)delta;
  return candidates[gibbs_sample_index(candidates, temp, rng)];
}

namespace {

class GibbsPolicy : public detail::SynthPolicy {
 public:
  GibbsPolicy(const ScsConfig& cfg, Rng& rng, bool zero_temperature)
      : cfg_(cfg), rng_(rng), zero_temp_(zero_temperature) {}

  std::size_t select_base(const EpsilonNet& net,
                          const Unitary2& target) override {
    auto hits = net.nearest(target, cfg_.k_reps);
    if (hits.size() == 1) return hits[0].entry;
    // Base lookups sit at recursion level 0, i.e. schedule index depth.
    double temp = level_temperature(cfg_.depth);
    if (!(temp > 0)) {
      // The hits are sorted by projective distance; argmin of the raw
      // Frobenius energy over them is the zero-temperature limit.
      std::size_t best = 0;
      double ebest = frob_distance(net.entry(hits[0].entry).unitary(), target);
      for (std::size_t i = 1; i < hits.size(); ++i) {
        double e = frob_distance(net.entry(hits[i].entry).unitary(), target);
        if (e < ebest) {
          ebest = e;
          best = i;
        }
      }
      return hits[best].entry;
    }
    std::vector<double> weights;
    weights.reserve(hits.size());
    double emin = 1e300;
    std::vector<double> energies;
    energies.reserve(hits.size());
    for (const auto& h : hits) {
      double e = frob_distance(net.entry(h.entry).unitary(), target);
      energies.push_back(e);
      emin = std::min(emin, e);
    }
    for (double e : energies) weights.push_back(std::exp(-(e - emin) / temp));
    return hits[rng_.categorical(weights)].entry;
  }

  GcPair select_pair(const Unitary2& delta, int level, int /*depth*/) override {
    // All decompositions performed at recursion level `level` share the
    // schedule index depth_from_top = cfg_.depth - level.
    double temp = level_temperature(cfg_.depth - level);
    auto candidates = propose_candidates(delta, cfg_.k_reps, rng_);
    std::size_t pick = gibbs_sample_index(candidates, temp, rng_);
    CandidatePair cur = candidates[pick];

    if (temp > 0 && cfg_.mcmc_steps > 0) {
      double budget = contraction_budget(delta);
      double d = op_distance(delta, Unitary2::identity());
      double jitter = kJitterCoefficient * std::sqrt(d);
      for (int step = 0; step < cfg_.mcmc_steps; ++step) {
        CandidatePair prop;
        if (rng_.uniform() < 0.5) {
          GcPair p = gc_decompose(delta, rng_.uniform(0, 2 * kPi));
          prop = {p.v, p.w, candidate_energy(delta, p.v, p.w)};
        } else {
          Unitary2 a =
              Unitary2::rotation(rng_.unit_vector(), rng_.normal(0.0, jitter));
          Unitary2 v = a * cur.v * a.dagger();
          Unitary2 w = a * cur.w * a.dagger();
          prop = {v, w, candidate_energy(delta, v, w)};
        }
        if (prop.energy > budget) continue;
        double de = prop.energy - cur.energy;
        if (de <= 0 || rng_.uniform() < std::exp(-de / temp)) {
          cur = prop;
        }
      }
    }
    return {cur.v, cur.w};
  }

 private:
  double level_temperature(int schedule_index) const {
    if (zero_temp_) return 0.0;
    return temperature(schedule_index, cfg_);
  }

  const ScsConfig& cfg_;
  Rng& rng_;
  bool zero_temp_;
};

ScsRunResult run_once(const Unitary2& target, const ScsConfig& cfg,
                      const EpsilonNet& net, std::uint64_t run_seed,
                      bool zero_temperature) {
  Rng rng(run_seed);
  GibbsPolicy policy(cfg, rng, zero_temperature);
  std::vector<detail::SpineRecord> spine;
  GateWord word = detail::synthesize_recursive(target, cfg.depth, net, policy,
                                               /*use_cache=*/false, &spine);
  ScsRunResult result;
  result.word = std::move(word);
  result.residual_trace.reserve(spine.size());
  for (const auto& rec : spine) {
    result.residual_trace.push_back(log_map(target * rec.approx.dagger()));
  }
  return result;
}

}  // namespace

ScsRunResult scs_synthesize(const Unitary2& target, const ScsConfig& cfg,
                            const EpsilonNet& net, std::uint64_t run_seed) {
  cfg.validate();
  ScsRunResult result = run_once(target, cfg, net, run_seed, false);
  double achieved = op_distance(result.word.unitary(), target);
  if (achieved <= cfg.eps_target) return result;

  // Accuracy miss: one retry of the whole run at temperature zero.
  result = run_once(target, cfg, net, run_seed, true);
  achieved = op_distance(result.word.unitary(), target);
  if (achieved <= cfg.eps_target) return result;
  throw SynthesisError(
      "scs_synthesize: accuracy miss after zero-temperature retry (achieved " +
          std::to_string(achieved) + ", target " +
          std::to_string(cfg.eps_target) + "); increase depth or the net",
      achieved);
}

EnsembleResult ensemble_synthesize(const Unitary2& target,
                                   const ScsConfig& cfg, const EpsilonNet& net,
                                   int jobs) {
  cfg.validate();
  EnsembleResult out;
  out.config_echo = cfg;
  std::size_t kprime = static_cast<std::size_t>(cfg.ensemble_size);
  out.words.resize(kprime);
  out.per_run_residuals.resize(kprime);
  detail::parallel_for(kprime, jobs, [&](std::size_t run) {
    try {
      ScsRunResult r = scs_synthesize(target, cfg, net,
                                      derive_seed(cfg.master_seed, run));
      out.words[run] = std::move(r.word);
      out.per_run_residuals[run] = r.residual_trace.back();
    } catch (const SynthesisError& e) {
      throw SynthesisError(std::string(e.what()) + " [run " +
                               std::to_string(run) + "]",
                           e.achieved(), static_cast<int>(run));
    }
  });
  return out;
}

}  // namespace scs
