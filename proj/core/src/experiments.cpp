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

#include "scs/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "parallel.hpp"

namespace scs {

namespace {

using ordered_json = nlohmann::ordered_json;

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double stderr_slope = 0;
  int n = 0;
};

LinearFit ols(const std::vector<double>& x, const std::vector<double>& y) {
  LinearFit fit;
  fit.n = static_cast<int>(x.size());
  if (fit.n < 2) return fit;
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / fit.n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / fit.n;
  double sxx = 0, sxy = 0;
  for (int i = 0; i < fit.n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (fit.n > 2) {
    double sse = 0;
    for (int i = 0; i < fit.n; ++i) {
      double r = y[i] - (fit.intercept + fit.slope * x[i]);
      sse += r * r;
    }
    fit.stderr_slope = std::sqrt(sse / (fit.n - 2) / sxx);
  }
  return fit;
}

// Regularized incomplete beta via Lentz's continued fraction.
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-14, kFpMin = 1e-300;
  double qab = a + b, qap = a + 1, qam = a - 1;
  double c = 1, d = 1 - qab * x / qap;
  if (std::abs(d) < kFpMin) d = kFpMin;
  d = 1 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

double ibeta(double a, double b, double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  double ln = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
              a * std::log(x) + b * std::log1p(-x);
  double front = std::exp(ln);
  if (x < (a + 1) / (a + b + 2)) {
    return front * betacf(a, b, x) / a;
  }
  return 1 - front * betacf(b, a, 1 - x) / b;
}

ordered_json json_scs_config(const ScsConfig& cfg) {
  ordered_json j;
  j["eps_target"] = cfg.eps_target;
  j["k_reps"] = cfg.k_reps;
  j["ensemble_size"] = cfg.ensemble_size;
  j["t0"] = cfg.t0;
  j["beta"] = cfg.beta;
  j["mcmc_steps"] = cfg.mcmc_steps;
  j["master_seed"] = cfg.master_seed;
  j["depth"] = cfg.depth;
  return j;
}

void add_timestamp(ordered_json& j, bool with_timestamp) {
  if (!with_timestamp) return;
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  j["timestamp"] = buf;
}

}  // namespace

double student_t_tail(double t, int df) {
  if (df < 1) return 1.0;
  double x = df / (df + t * t);
  double p = 0.5 * ibeta(df / 2.0, 0.5, x);
  return t >= 0 ? p : 1.0 - p;
}

double student_t_975(int df) {
  double lo = 0, hi = 200;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (student_t_tail(mid, df) > 0.025) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double resimulated_distance(const GateWord& word, const GateSet& gs,
                            const Unitary2& target) {
  // Drive the word through the simulator on both basis states and rebuild
  // the matrix; this path shares nothing with GateWord's cached product.
  NoiseModel noiseless;
  Eigen::Matrix2cd m;
  for (int col = 0; col < 2; ++col) {
    StateVector psi = StateVector::basis(1, static_cast<std::uint64_t>(col));
    apply_word(psi, word, gs, noiseless, 0);
    m(0, col) = psi.amplitude(0);
    m(1, col) = psi.amplitude(1);
  }
  return op_distance(Unitary2::from_matrix(m), target);
}

int measured_depth_for_eps(const Unitary2& target, const EpsilonNet& net,
                           double eps, int max_depth) {
  std::vector<LevelRecord> trace = synth_trace(target, {max_depth, &net});
  for (std::size_t k = 0; k < trace.size(); ++k) {
    if (trace[k].residual <= eps) return static_cast<int>(k);
  }
  return -1;
}

RcExperimentReport run_rc_experiment(const EpsilonNet& net,
                                     const RcExperimentParams& params) {
  RcExperimentReport report;
  report.params = params;
  const GateSet& gs = net.gate_set();

  Rng angle_rng(derive_seed(params.scs.master_seed, 0xA7A7ULL));
  std::vector<double> thetas(static_cast<std::size_t>(params.num_angles));
  for (double& t : thetas) t = angle_rng.uniform(0, 2 * kPi);

  report.angles.resize(thetas.size());
  NoiseModel alpha_noise;
  alpha_noise.overrotation_alpha = params.alpha;

  detail::parallel_for(thetas.size(), params.jobs, [&](std::size_t i) {
    RcAngleRecord rec;
    rec.theta = thetas[i];
    Unitary2 target = Unitary2::rz(rec.theta);

    int depth =
        measured_depth_for_eps(target, net, params.eps, params.max_depth);
    if (depth < 0) {
      throw SynthesisError("rc experiment: eps unreachable at max_depth for "
                           "theta " + std::to_string(rec.theta),
                           params.eps);
    }
    rec.depth = depth;

    GateWord det = sk_synthesize(target, {depth, &net});
    rec.det_distance = op_distance(det.unitary(), target);
    rec.det_length = det.length();

    ScsConfig cfg = params.scs;
    cfg.depth = depth;
    cfg.eps_target = params.eps;
    cfg.master_seed = derive_seed(params.scs.master_seed, i);
    EnsembleResult ens = ensemble_synthesize(target, cfg, net, 1);

    double mean_len = 0;
    for (const GateWord& w : ens.words) {
      mean_len += static_cast<double>(w.length());
    }
    rec.scs_mean_length = mean_len / static_cast<double>(ens.words.size());

    // Noiseless trace distance on |+>.
    StateVector plus(1);
    Eigen::Matrix2cd h;
    double inv = 1.0 / std::sqrt(2.0);
    h << inv, inv, inv, -inv;
    plus.apply_1q(h, 0);

    StateVector ideal = plus;
    ideal.apply_unitary(target, 0);
    DensityMatrix ideal_dm = DensityMatrix::from_state(ideal);

    StateVector det_state = plus;
    NoiseModel noiseless;
    apply_word(det_state, det, gs, noiseless, 0);
    rec.det_trace_distance =
        trace_distance(DensityMatrix::from_state(det_state), ideal_dm);

    DensityMatrix avg(1);
    avg.scale(0.0);
    for (const GateWord& w : ens.words) {
      StateVector s = plus;
      apply_word(s, w, gs, noiseless, 0);
      avg.accumulate(DensityMatrix::from_state(s),
                     1.0 / static_cast<double>(ens.words.size()));
    }
    rec.scs_trace_distance = trace_distance(avg, ideal_dm);

    // Coherent / incoherent split under the over-rotation model.
    ErrorSplit det_split =
        split_error(word_channel(det, gs, alpha_noise), target);
    ErrorSplit scs_split = split_error(
        average_channel(std::span<const GateWord>(ens.words), gs, alpha_noise),
        target);
    rec.det_coherent_angle = det_split.coherent_angle;
    rec.det_incoherent = det_split.incoherent_infidelity;
    rec.scs_coherent_angle = scs_split.coherent_angle;
    rec.scs_incoherent = scs_split.incoherent_infidelity;

    report.angles[i] = rec;
  });

  double sdt = 0, sst = 0, sdc = 0, ssc = 0;
  for (const auto& r : report.angles) {
    sdt += r.det_trace_distance;
    sst += r.scs_trace_distance;
    sdc += r.det_coherent_angle;
    ssc += r.scs_coherent_angle;
  }
  double n = static_cast<double>(report.angles.size());
  report.mean_det_trace = sdt / n;
  report.mean_scs_trace = sst / n;
  report.trace_ratio =
      report.mean_scs_trace > 0 ? report.mean_det_trace / report.mean_scs_trace
                                : 0;
  report.mean_det_coherent = sdc / n;
  report.mean_scs_coherent = ssc / n;
  report.coherent_ratio = report.mean_det_coherent > 0
                              ? report.mean_scs_coherent /
                                    report.mean_det_coherent
                              : 0;
  report.coherent_suppression_pct = 100.0 * (1.0 - report.coherent_ratio);

  if (!params.kprime_sweep.empty()) {
    int kmax = *std::max_element(params.kprime_sweep.begin(),
                                 params.kprime_sweep.end());
    std::size_t nt = static_cast<std::size_t>(params.sweep_targets);
    // mean coherent angle (and mean-residual norm) per K', averaged over
    // targets; ensembles are nested prefixes of one K'max ensemble.
    std::vector<std::vector<Channel1Q>> member_channels(nt);
    std::vector<std::vector<LieVector>> member_residuals(nt);
    std::vector<Unitary2> targets(nt);
    Rng target_rng(derive_seed(params.scs.master_seed, 0x5CA7ULL));
    for (auto& t : targets) t = target_rng.haar_su2();
    detail::parallel_for(nt, params.jobs, [&](std::size_t ti) {
      Unitary2 target = targets[ti];
      ScsConfig cfg = params.scs;
      cfg.ensemble_size = kmax;
      cfg.eps_target = params.eps;
      cfg.master_seed = derive_seed(params.scs.master_seed, 0xB000 + ti);
      int depth =
          measured_depth_for_eps(target, net, params.eps, params.max_depth);
      cfg.depth = depth < 0 ? params.max_depth : depth;
      EnsembleResult ens = ensemble_synthesize(target, cfg, net, 1);
      for (const GateWord& w : ens.words) {
        member_channels[ti].push_back(word_channel(w, gs, alpha_noise));
      }
      member_residuals[ti] = ens.per_run_residuals;
    });
    std::vector<double> lx, ly;
    for (int kp : params.kprime_sweep) {
      KprimeSweepPoint pt;
      pt.kprime = kp;
      double acc = 0, accr = 0;
      for (std::size_t ti = 0; ti < nt; ++ti) {
        std::span<const Channel1Q> prefix(member_channels[ti].data(),
                                          static_cast<std::size_t>(kp));
        ErrorSplit split = split_error(average_channel(prefix), targets[ti]);
        acc += split.coherent_angle;
        Vec3 mean{0, 0, 0};
        for (int r = 0; r < kp; ++r) {
          const auto& v = member_residuals[ti][static_cast<std::size_t>(r)].v;
          mean[0] += v[0];
          mean[1] += v[1];
          mean[2] += v[2];
        }
        for (double& c : mean) c /= kp;
        accr += norm(mean);
      }
      pt.mean_coherent_angle = acc / static_cast<double>(nt);
      pt.mean_residual_norm = accr / static_cast<double>(nt);
      report.sweep.push_back(pt);
      lx.push_back(std::log(static_cast<double>(kp)));
      ly.push_back(std::log(pt.mean_coherent_angle));
    }
    report.sweep_slope = ols(lx, ly).slope;
  }

  return report;
}

ScalingReport run_scaling_experiment(const EpsilonNet& net,
                                     const ScalingParams& params) {
  if (params.depths.size() < 3) {
    throw std::invalid_argument(
        "scaling: need at least 3 depth points for a fit");
  }
  ScalingReport report;
  report.params = params;

  std::size_t nt = static_cast<std::size_t>(params.num_targets);
  Rng target_rng(derive_seed(params.scs.master_seed, 0x5CA1EULL));
  std::vector<Unitary2> targets;
  targets.reserve(nt);
  for (std::size_t i = 0; i < nt; ++i) targets.push_back(target_rng.haar_su2());

  const GateSet& gs = net.gate_set();
  // per target, per depth: (eps, length, tcount)
  struct Row {
    std::vector<double> eps, len, tc;
  };
  std::vector<Row> rows(nt);
  detail::parallel_for(nt, params.jobs, [&](std::size_t ti) {
    Row& row = rows[ti];
    if (params.mode == SynthMode::kDeterministic) {
      for (int d : params.depths) {
        GateWord w = sk_synthesize(targets[ti], {d, &net});
        row.eps.push_back(op_distance(w.unitary(), targets[ti]));
        row.len.push_back(static_cast<double>(w.length()));
        row.tc.push_back(static_cast<double>(w.t_count(gs)));
      }
    } else {
      for (int d : params.depths) {
        ScsConfig cfg = params.scs;
        cfg.depth = d;
        cfg.eps_target = 10.0;  // record raw achieved accuracy, no retry
        cfg.master_seed = derive_seed(params.scs.master_seed, 0xC000 + ti);
        ScsRunResult run = scs_synthesize(
            targets[ti], cfg, net,
            derive_seed(cfg.master_seed, static_cast<std::uint64_t>(d)));
        row.eps.push_back(op_distance(run.word.unitary(), targets[ti]));
        row.len.push_back(static_cast<double>(run.word.length()));
        row.tc.push_back(static_cast<double>(run.word.t_count(gs)));
      }
    }
  });

  std::vector<double> lx, ly;
  for (std::size_t di = 0; di < params.depths.size(); ++di) {
    ScalingPoint pt;
    pt.depth = params.depths[di];
    double se = 0, sl = 0, st = 0;
    for (const Row& row : rows) {
      se += row.eps[di];
      sl += row.len[di];
      st += row.tc[di];
    }
    pt.mean_eps = se / static_cast<double>(nt);
    pt.mean_length = sl / static_cast<double>(nt);
    pt.mean_tcount = st / static_cast<double>(nt);
    report.points.push_back(pt);
    if (pt.mean_eps < 0.999 && pt.mean_length > 0) {
      lx.push_back(std::log(std::log(1.0 / pt.mean_eps)));
      ly.push_back(std::log(pt.mean_length));
    }
  }
  LinearFit fit = ols(lx, ly);
  report.slope = fit.slope;
  report.intercept = fit.intercept;
  report.fit_points = fit.n;
  if (fit.n > 2) {
    report.ci95_width = 2.0 * student_t_975(fit.n - 2) * fit.stderr_slope;
  }
  return report;
}

ForrelationExpReport run_forrelation_experiment(
    const EpsilonNet& net, const ForrelationExpParams& params) {
  ForrelationExpReport report;
  report.params = params;
  report.records.resize(static_cast<std::size_t>(params.num_instances));

  NoiseModel noise;
  noise.overrotation_alpha = params.alpha;
  noise.depolarizing_p = params.depolarizing_p;
  const GateSet& gs = net.gate_set();

  detail::parallel_for(
      report.records.size(), params.jobs, [&](std::size_t i) {
        Rng rng(derive_seed(params.scs.master_seed, 0xF0 + i));
        ForrelationInstance inst =
            sample_instance(params.n, params.k, params.label, rng);
        CircuitIR circuit = decompose_circuit(build_circuit(inst));
        CircuitIR ideal = build_circuit(inst);

        CompileOptions det_opts;
        det_opts.mode = SynthMode::kDeterministic;
        det_opts.eps = params.eps;
        det_opts.net = &net;

        CompileOptions scs_opts = det_opts;
        scs_opts.mode = SynthMode::kScs;
        scs_opts.scs = params.scs;
        scs_opts.scs.master_seed =
            derive_seed(params.scs.master_seed, 0x8000 + i);

        CompiledCircuit det = compile_circuit(circuit, det_opts);
        CompiledCircuit scs = compile_circuit(circuit, scs_opts);

        ForrelationInstanceRecord rec;
        rec.phi = inst.phi;
        rec.det = score_circuit(det, ideal, gs, noise);
        rec.scs = score_circuit(scs, ideal, gs, noise);
        rec.det_t_count = det.member_t_counts[0];
        double mt = 0;
        for (int t : scs.member_t_counts) mt += t;
        rec.scs_mean_t_count =
            mt / static_cast<double>(scs.member_t_counts.size());
        report.records[i] = rec;
      });

  double sd = 0, ss = 0;
  for (const auto& r : report.records) {
    sd += r.det.fidelity_proxy;
    ss += r.scs.fidelity_proxy;
  }
  double n = static_cast<double>(report.records.size());
  report.mean_det_fidelity = sd / n;
  report.mean_scs_fidelity = ss / n;

  // One-sided paired t-test on (scs - det).
  std::vector<double> diffs;
  diffs.reserve(report.records.size());
  for (const auto& r : report.records) {
    diffs.push_back(r.scs.fidelity_proxy - r.det.fidelity_proxy);
  }
  double md = std::accumulate(diffs.begin(), diffs.end(), 0.0) / n;
  double var = 0;
  for (double d : diffs) var += (d - md) * (d - md);
  var /= (n - 1);
  double sem = std::sqrt(var / n);
  report.paired_t = sem > 0 ? md / sem : (md > 0 ? 1e9 : 0);
  report.p_value = student_t_tail(report.paired_t,
                                  static_cast<int>(report.records.size()) - 1);
  return report;
}

std::string to_json(const RcExperimentReport& report, bool with_timestamp) {
  ordered_json j;
  j["schema_version"] = 1;
  j["command"] = "rc-exp";
  add_timestamp(j, with_timestamp);
  j["params"]["num_angles"] = report.params.num_angles;
  j["params"]["eps"] = report.params.eps;
  j["params"]["alpha"] = report.params.alpha;
  j["params"]["jobs_note"] = "results are independent of --jobs";
  j["params"]["scs"] = json_scs_config(report.params.scs);
  ordered_json angles = ordered_json::array();
  for (const auto& r : report.angles) {
    ordered_json a;
    a["theta"] = r.theta;
    a["depth"] = r.depth;
    a["det_distance"] = r.det_distance;
    a["det_trace_distance"] = r.det_trace_distance;
    a["scs_trace_distance"] = r.scs_trace_distance;
    a["det_coherent_angle"] = r.det_coherent_angle;
    a["scs_coherent_angle"] = r.scs_coherent_angle;
    a["det_incoherent"] = r.det_incoherent;
    a["scs_incoherent"] = r.scs_incoherent;
    a["det_length"] = r.det_length;
    a["scs_mean_length"] = r.scs_mean_length;
    angles.push_back(a);
  }
  j["angles"] = angles;
  j["summary"]["mean_det_trace_distance"] = report.mean_det_trace;
  j["summary"]["mean_scs_trace_distance"] = report.mean_scs_trace;
  j["summary"]["trace_distance_ratio"] = report.trace_ratio;
  j["summary"]["mean_det_coherent_angle"] = report.mean_det_coherent;
  j["summary"]["mean_scs_coherent_angle"] = report.mean_scs_coherent;
  j["summary"]["coherent_ratio"] = report.coherent_ratio;
  j["summary"]["coherent_suppression_pct"] = report.coherent_suppression_pct;
  if (!report.sweep.empty()) {
    ordered_json sweep = ordered_json::array();
    for (const auto& pt : report.sweep) {
      ordered_json s;
      s["kprime"] = pt.kprime;
      s["mean_coherent_angle"] = pt.mean_coherent_angle;
      s["mean_residual_norm"] = pt.mean_residual_norm;
      sweep.push_back(s);
    }
    j["kprime_sweep"] = sweep;
    j["summary"]["sweep_slope"] = report.sweep_slope;
  }
  return j.dump(2) + "\n";
}

std::string to_json(const ForrelationExpReport& report, bool with_timestamp) {
  ordered_json j;
  j["schema_version"] = 1;
  j["command"] = "forrelation";
  add_timestamp(j, with_timestamp);
  j["params"]["n"] = report.params.n;
  j["params"]["k"] = report.params.k;
  j["params"]["num_instances"] = report.params.num_instances;
  j["params"]["eps"] = report.params.eps;
  j["params"]["alpha"] = report.params.alpha;
  j["params"]["depolarizing_p"] = report.params.depolarizing_p;
  j["params"]["label"] = report.params.label == InstanceLabel::kForrelated
                             ? "forrelated"
                             : "uniform";
  j["params"]["scs"] = json_scs_config(report.params.scs);
  ordered_json recs = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json a;
    a["phi"] = r.phi;
    a["det_fidelity"] = r.det.fidelity_proxy;
    a["scs_fidelity"] = r.scs.fidelity_proxy;
    a["det_p_accept"] = r.det.p_accept;
    a["scs_p_accept"] = r.scs.p_accept;
    a["det_total_variation"] = r.det.total_variation;
    a["scs_total_variation"] = r.scs.total_variation;
    a["det_t_count"] = r.det_t_count;
    a["scs_mean_t_count"] = r.scs_mean_t_count;
    recs.push_back(a);
  }
  j["instances"] = recs;
  j["summary"]["mean_det_fidelity"] = report.mean_det_fidelity;
  j["summary"]["mean_scs_fidelity"] = report.mean_scs_fidelity;
  j["summary"]["paired_t"] = report.paired_t;
  j["summary"]["p_value"] = report.p_value;
  return j.dump(2) + "\n";
}

std::string to_csv(const ScalingReport& report) {
  std::ostringstream out;
  out << "# scsynth scaling, schema_version 1\n";
  out << "# mode "
      << (report.params.mode == SynthMode::kDeterministic ? "sk" : "scs")
      << ", targets " << report.params.num_targets << ", master_seed "
      << report.params.scs.master_seed << "\n";
  out << "depth,mean_eps,mean_length,mean_tcount\n";
  char buf[160];
  for (const auto& pt : report.points) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", pt.depth,
                  pt.mean_eps, pt.mean_length, pt.mean_tcount);
    out << buf;
  }
  std::snprintf(buf, sizeof buf,
                "# fitted_exponent %.6f, ci95_width %.6f, fit_points %d\n",
                report.slope, report.ci95_width, report.fit_points);
  out << buf;
  return out.str();
}

}  // namespace scs
