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

#include "scs/epsilon_net.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "scs/rng.hpp"

namespace scs {

namespace {

constexpr double kDedupTol = 1e-9;
constexpr const char* kMagic = "SCSNET";
constexpr int kFormatVersion = 1;

std::uint64_t fnv1a64(std::uint64_t h, const void* data, std::size_t n) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Bucket key for near-duplicate detection: each canonical quaternion
// component quantized on a 1e-6 grid. Components within kDedupTol of a grid
// boundary probe both sides, so any pair within kDedupTol shares a key.
constexpr double kGrid = 1e-6;

std::uint64_t pack_key(const std::array<std::int64_t, 4>& k) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  h = fnv1a64(h, k.data(), sizeof k);
  return h;
}

void bucket_keys(const std::array<double, 4>& q,
                 std::vector<std::uint64_t>& out) {
  std::array<std::array<std::int64_t, 2>, 4> choices;
  std::array<int, 4> counts;
  for (int i = 0; i < 4; ++i) {
    double scaled = q[i] / kGrid;
    auto base = static_cast<std::int64_t>(std::llround(scaled));
    choices[i][0] = base;
    counts[i] = 1;
    double frac = scaled - static_cast<double>(base);  // in [-0.5, 0.5]
    double band = 2 * kDedupTol / kGrid;
    if (frac > 0.5 - band) {
      choices[i][1] = base + 1;
      counts[i] = 2;
    } else if (frac < -0.5 + band) {
      choices[i][1] = base - 1;
      counts[i] = 2;
    }
  }
  out.clear();
  for (int a = 0; a < counts[0]; ++a)
    for (int b = 0; b < counts[1]; ++b)
      for (int c = 0; c < counts[2]; ++c)
        for (int d = 0; d < counts[3]; ++d)
          out.push_back(pack_key(
              {choices[0][a], choices[1][b], choices[2][c], choices[3][d]}));
}

}  // namespace

std::vector<GateWord> enumerate_words(const GateSet& gs, int max_len,
                                      std::size_t cap) {
  if (max_len < 1) throw std::invalid_argument("enumerate_words: max_len < 1");

  std::vector<GateWord> entries;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
  std::vector<std::uint64_t> keys;

  auto try_insert = [&](const GateWord& w) {
    bucket_keys(w.unitary().quat(), keys);
    for (std::uint64_t key : keys) {
      auto it = buckets.find(key);
      if (it == buckets.end()) continue;
      for (std::uint32_t id : it->second) {
        if (op_distance(entries[id].unitary(), w.unitary()) <= kDedupTol) {
          return false;  // duplicate; earlier entry is shorter or lex-smaller
        }
      }
    }
    if (entries.size() >= cap) {
      throw EnumerationCapExceeded(
          "enumerate_words: entry cap of " + std::to_string(cap) +
          " exceeded at word length " + std::to_string(w.length()) +
          "; lower max_len or raise the cap");
    }
    auto id = static_cast<std::uint32_t>(entries.size());
    entries.push_back(w);
    for (std::uint64_t key : keys) buckets[key].push_back(id);
    return true;
  };

  try_insert(GateWord{});  // identity
  // BFS by length; within a length, words are generated in lexicographic
  // index order, so the first hit on a unitary is the canonical word.
  std::vector<GateWord> frontier{GateWord{}};
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<GateWord> next;
    next.reserve(frontier.size() * static_cast<std::size_t>(gs.size()));
    for (const GateWord& w : frontier) {
      for (int g = 0; g < gs.size(); ++g) {
        if (!w.indices().empty() && gs.inverse(w.indices().back()) == g) {
          continue;  // reduced words only
        }
        GateWord w2 = w.then(gs, GateWord::single(gs, g));
        if (w2.length() != static_cast<std::size_t>(len)) continue;
        try_insert(w2);
        next.push_back(std::move(w2));
      }
    }
    frontier = std::move(next);
  }
  return entries;
}

EpsilonNet::EpsilonNet(GateSet gs, double eps0, int k_reps, int max_len,
                       std::vector<GateWord> entries)
    : gs_(std::move(gs)),
      eps0_(eps0),
      k_reps_(k_reps),
      max_len_(max_len),
      entries_(std::move(entries)) {
  build_index();
}

EpsilonNet EpsilonNet::build(const GateSet& gs, double eps0, int k_reps,
                             int max_len, const NetBuildOptions& opts) {
  if (!(eps0 > 0)) throw std::invalid_argument("build_net: eps0 must be > 0");
  if (k_reps < 1) throw std::invalid_argument("build_net: k_reps must be >= 1");

  std::vector<GateWord> words = enumerate_words(gs, max_len, opts.cap);

  // K representatives per neighborhood: bucket by quaternion cells of side
  // eps0/2 and keep the k_reps shortest words in each cell. Enumeration
  // order is (length, lex), so sequential insertion is the shortest-first
  // rule and adding longer words never displaces earlier ones.
  double cell = eps0 / 2;
  std::map<std::array<std::int64_t, 4>, int> cell_count;
  std::vector<GateWord> kept;
  kept.reserve(words.size());
  for (GateWord& w : words) {
    const auto& q = w.unitary().quat();
    std::array<std::int64_t, 4> key;
    for (int i = 0; i < 4; ++i) {
      key[static_cast<size_t>(i)] =
          static_cast<std::int64_t>(std::floor(q[static_cast<size_t>(i)] / cell));
    }
    int& count = cell_count[key];
    if (count < k_reps) {
      ++count;
      kept.push_back(std::move(w));
    }
  }

  EpsilonNet net(gs, eps0, k_reps, max_len, std::move(kept));

  if (opts.coverage_samples > 0) {
    Rng rng(opts.coverage_seed);
    for (int i = 0; i < opts.coverage_samples; ++i) {
      Unitary2 u = rng.haar_su2();
      auto hits = net.nearest(u, 1);
      if (hits.empty() || hits[0].distance > eps0) {
        const auto& q = u.quat();
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "coverage failure: sample %d (quaternion %.6f %.6f %.6f "
                      "%.6f) has nearest distance %.6f > eps0 %.6f; increase "
                      "max_len",
                      i, q[0], q[1], q[2], q[3],
                      hits.empty() ? -1.0 : hits[0].distance, eps0);
        throw CoverageError(buf);
      }
    }
  }
  return net;
}

void EpsilonNet::build_index() {
  points_.clear();
  point_entry_.clear();
  points_.reserve(entries_.size() * 2);
  point_entry_.reserve(entries_.size() * 2);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& q = entries_[i].unitary().quat();
    points_.push_back(q);
    point_entry_.push_back(static_cast<std::uint32_t>(i));
    points_.push_back({-q[0], -q[1], -q[2], -q[3]});
    point_entry_.push_back(static_cast<std::uint32_t>(i));
  }
  order_.resize(points_.size());
  for (std::uint32_t i = 0; i < order_.size(); ++i) order_[i] = i;
  nodes_.clear();
  if (!points_.empty()) build_node(0, static_cast<int>(points_.size()));
}

int EpsilonNet::build_node(int begin, int end) {
  int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  if (end - begin <= 8) {
    nodes_[static_cast<size_t>(id)].begin = begin;
    nodes_[static_cast<size_t>(id)].end = end;
    return id;
  }
  // Split on the widest dimension at the median.
  std::array<double, 4> lo{1e30, 1e30, 1e30, 1e30}, hi{-1e30, -1e30, -1e30, -1e30};
  for (int i = begin; i < end; ++i) {
    const auto& p = points_[order_[static_cast<size_t>(i)]];
    for (int d = 0; d < 4; ++d) {
      lo[static_cast<size_t>(d)] = std::min(lo[static_cast<size_t>(d)], p[static_cast<size_t>(d)]);
      hi[static_cast<size_t>(d)] = std::max(hi[static_cast<size_t>(d)], p[static_cast<size_t>(d)]);
    }
  }
  int axis = 0;
  double width = -1;
  for (int d = 0; d < 4; ++d) {
    double w = hi[static_cast<size_t>(d)] - lo[static_cast<size_t>(d)];
    if (w > width) {
      width = w;
      axis = d;
    }
  }
  int mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid,
                   order_.begin() + end, [&](std::uint32_t a, std::uint32_t b) {
                     double pa = points_[a][static_cast<size_t>(axis)];
                     double pb = points_[b][static_cast<size_t>(axis)];
                     if (pa != pb) return pa < pb;
                     return a < b;
                   });
  double split = points_[order_[static_cast<size_t>(mid)]][static_cast<size_t>(axis)];
  int left = build_node(begin, mid);
  int right = build_node(mid, end);
  KdNode& n = nodes_[static_cast<size_t>(id)];
  n.axis = axis;
  n.split = split;
  n.left = left;
  n.right = right;
  return id;
}

void EpsilonNet::query(int node, const std::array<double, 4>& q,
                       std::vector<std::pair<double, std::uint32_t>>& heap,
                       std::size_t k) const {
  const KdNode& n = nodes_[static_cast<size_t>(node)];
  if (n.axis < 0) {
    for (int i = n.begin; i < n.end; ++i) {
      std::uint32_t pid = order_[static_cast<size_t>(i)];
      const auto& p = points_[pid];
      double d2 = 0;
      for (int c = 0; c < 4; ++c) {
        double d = p[static_cast<size_t>(c)] - q[static_cast<size_t>(c)];
        d2 += d * d;
      }
      std::pair<double, std::uint32_t> cand{d2, point_entry_[pid]};
      if (heap.size() < k) {
        heap.push_back(cand);
        std::push_heap(heap.begin(), heap.end());
      } else if (cand < heap.front()) {
        std::pop_heap(heap.begin(), heap.end());
        heap.back() = cand;
        std::push_heap(heap.begin(), heap.end());
      }
    }
    return;
  }
  double diff = q[static_cast<size_t>(n.axis)] - n.split;
  int first = diff < 0 ? n.left : n.right;
  int second = diff < 0 ? n.right : n.left;
  query(first, q, heap, k);
  if (heap.size() < k || diff * diff <= heap.front().first) {
    query(second, q, heap, k);
  }
}

std::vector<NearHit> EpsilonNet::nearest(const Unitary2& target, int k) const {
  if (entries_.empty()) {
    throw std::invalid_argument("EpsilonNet::nearest: empty net");
  }
  if (k < 1) throw std::invalid_argument("EpsilonNet::nearest: k < 1");
  std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(k),
                                           entries_.size());
  // Each entry appears as +q and -q, so ask for 2k points and merge.
  std::vector<std::pair<double, std::uint32_t>> heap;
  heap.reserve(2 * want + 1);
  query(0, target.quat(), heap, 2 * want);
  std::sort(heap.begin(), heap.end());
  std::vector<NearHit> out;
  out.reserve(want);
  std::vector<bool> seen(entries_.size(), false);
  for (const auto& [d2, id] : heap) {
    if (seen[id]) continue;
    seen[id] = true;
    out.push_back({id, std::sqrt(d2)});
    if (out.size() == want) break;
  }
  return out;
}

void EpsilonNet::save(const std::string& path) const {
  std::ostringstream body;
  char buf[512];
  body << kMagic << kFormatVersion << "\n";
  std::snprintf(buf, sizeof buf, "eps0 %.17g\n", eps0_);
  body << buf;
  body << "k_reps " << k_reps_ << "\n";
  body << "max_len " << max_len_ << "\n";
  std::snprintf(buf, sizeof buf, "gateset %d %016llx\n", gs_.size(),
                static_cast<unsigned long long>(gs_.fingerprint()));
  body << buf;
  for (int i = 0; i < gs_.size(); ++i) {
    const Generator& g = gs_.gen(i);
    Eigen::Matrix2cd m = g.unitary.matrix();
    std::snprintf(buf, sizeof buf,
                  "gen %s %d %d %.17g %.17g %.17g %.17g %.17g %.17g %.17g "
                  "%.17g\n",
                  g.name.c_str(), g.t_weight, gs_.inverse(i), m(0, 0).real(),
                  m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag(),
                  m(1, 0).real(), m(1, 0).imag(), m(1, 1).real(),
                  m(1, 1).imag());
    body << buf;
  }
  body << "entries " << entries_.size() << "\n";
  for (const GateWord& w : entries_) {
    Eigen::Matrix2cd m = w.unitary().matrix();
    body << "entry";
    for (std::int32_t i : w.indices()) body << ' ' << gs_.gen(i).name;
    body << " |";
    std::snprintf(buf, sizeof buf,
                  " %.17g %.17g %.17g %.17g %.17g %.17g %.17g %.17g\n",
                  m(0, 0).real(), m(0, 0).imag(), m(0, 1).real(),
                  m(0, 1).imag(), m(1, 0).real(), m(1, 0).imag(),
                  m(1, 1).real(), m(1, 1).imag());
    body << buf;
  }
  std::string text = body.str();
  std::uint64_t sum = fnv1a64(0xCBF29CE484222325ULL, text.data(), text.size());
  std::snprintf(buf, sizeof buf, "checksum %016llx\n",
                static_cast<unsigned long long>(sum));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_net: cannot open " + path);
  out << text << buf;
  if (!out) throw std::runtime_error("save_net: write failed for " + path);
}

EpsilonNet EpsilonNet::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw NetIoError(NetIoKind::kFormatError, "load_net: cannot open " + path);
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (text.empty()) {
    throw NetIoError(NetIoKind::kFormatError, "load_net: empty file");
  }

  // Split off the checksum line (the last nonempty line).
  std::size_t tail = text.find_last_not_of('\n');
  if (tail == std::string::npos) {
    throw NetIoError(NetIoKind::kFormatError, "load_net: blank file");
  }
  std::size_t line_start = text.rfind('\n', tail);
  line_start = line_start == std::string::npos ? 0 : line_start + 1;
  std::string last = text.substr(line_start, tail + 1 - line_start);
  std::string body = text.substr(0, line_start);

  if (last.rfind("checksum ", 0) != 0) {
    throw NetIoError(NetIoKind::kTruncated,
                     "load_net: missing checksum line (truncated file?)");
  }
  std::uint64_t stated = 0;
  if (std::sscanf(last.c_str(), "checksum %llx",
                  reinterpret_cast<unsigned long long*>(&stated)) != 1) {
    throw NetIoError(NetIoKind::kFormatError, "load_net: bad checksum line");
  }
  std::uint64_t actual =
      fnv1a64(0xCBF29CE484222325ULL, body.data(), body.size());
  if (actual != stated) {
    throw NetIoError(NetIoKind::kChecksumMismatch,
                     "load_net: checksum mismatch (file corrupted)");
  }

  std::istringstream is(body);
  std::string line;
  auto next_line = [&](const char* what) {
    if (!std::getline(is, line)) {
      throw NetIoError(NetIoKind::kTruncated,
                       std::string("load_net: truncated before ") + what);
    }
    return line;
  };

  next_line("magic");
  if (line.rfind(kMagic, 0) != 0) {
    throw NetIoError(NetIoKind::kFormatError, "load_net: bad magic");
  }
  int version = std::atoi(line.c_str() + std::string(kMagic).size());
  if (version != kFormatVersion) {
    throw NetIoError(NetIoKind::kVersionMismatch,
                     "load_net: unsupported format version " +
                         std::to_string(version));
  }

  double eps0 = 0;
  if (std::sscanf(next_line("eps0").c_str(), "eps0 %lg", &eps0) != 1) {
    throw NetIoError(NetIoKind::kFormatError, "load_net: bad eps0 line");
  }
  int k_reps = 0;
  if (std::sscanf(next_line("k_reps").c_str(), "k_reps %d", &k_reps) != 1) {
    throw NetIoError(NetIoKind::kFormatError, "load_net: bad k_reps line");
  }
  int max_len = 0;
  if (std::sscanf(next_line("max_len").c_str(), "max_len %d", &max_len) != 1) {
    throw NetIoError(NetIoKind::kFormatError, "load_net: bad max_len line");
  }
  int ngen = 0;
  unsigned long long fp = 0;
  if (std::sscanf(next_line("gateset").c_str(), "gateset %d %llx", &ngen,
                  &fp) != 2 ||
      ngen < 1) {
    throw NetIoError(NetIoKind::kFormatError, "load_net: bad gateset line");
  }
  std::vector<Generator> gens;
  std::vector<int> inverse(static_cast<size_t>(ngen), 0);
  for (int i = 0; i < ngen; ++i) {
    next_line("generator");
    char name[64];
    int tw = 0, inv = 0;
    double v[8];
    if (std::sscanf(line.c_str(),
                    "gen %63s %d %d %lg %lg %lg %lg %lg %lg %lg %lg", name,
                    &tw, &inv, &v[0], &v[1], &v[2], &v[3], &v[4], &v[5], &v[6],
                    &v[7]) != 11) {
      throw NetIoError(NetIoKind::kFormatError, "load_net: bad gen line");
    }
    Eigen::Matrix2cd m;
    m(0, 0) = {v[0], v[1]};
    m(0, 1) = {v[2], v[3]};
    m(1, 0) = {v[4], v[5]};
    m(1, 1) = {v[6], v[7]};
    gens.push_back({name, Unitary2::from_matrix(m), tw});
    inverse[static_cast<size_t>(i)] = inv;
  }
  GateSet gs(std::move(gens), std::move(inverse));
  if (gs.fingerprint() != fp) {
    throw NetIoError(NetIoKind::kFormatError,
                     "load_net: gate-set fingerprint mismatch");
  }
  if (gs.size() == 3 && gs.index_of("H") == 0 && gs.index_of("T") == 1 &&
      gs.index_of("Tdg") == 2) {
    GateSet builtin = GateSet::clifford_t();
    if (builtin.fingerprint() == fp) gs = builtin;  // restore composites
  }

  std::size_t count = 0;
  if (std::sscanf(next_line("entries").c_str(), "entries %zu", &count) != 1) {
    throw NetIoError(NetIoKind::kFormatError, "load_net: bad entries line");
  }
  std::vector<GateWord> entries;
  entries.reserve(count);
  for (std::size_t e = 0; e < count; ++e) {
    next_line("entry");
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok != "entry") {
      throw NetIoError(NetIoKind::kFormatError, "load_net: bad entry line");
    }
    std::vector<std::int32_t> idx;
    while (ls >> tok && tok != "|") {
      int gi = gs.index_of(tok);
      if (gi < 0) {
        throw NetIoError(NetIoKind::kFormatError,
                         "load_net: unknown generator '" + tok + "'");
      }
      idx.push_back(gi);
    }
    if (tok != "|") {
      throw NetIoError(NetIoKind::kTruncated, "load_net: entry missing matrix");
    }
    double v[8];
    for (double& x : v) {
      if (!(ls >> x)) {
        throw NetIoError(NetIoKind::kTruncated,
                         "load_net: entry matrix truncated");
      }
    }
    Eigen::Matrix2cd m;
    m(0, 0) = {v[0], v[1]};
    m(0, 1) = {v[2], v[3]};
    m(1, 0) = {v[4], v[5]};
    m(1, 1) = {v[6], v[7]};
    Unitary2 u = Unitary2::from_matrix(m);
    // The refold reproduces the originally saved product bit-for-bit (same
    // operation sequence); the stored matrix is its consistency witness.
    GateWord w = GateWord::from_indices(gs, std::move(idx));
    if (op_distance(w.unitary(), u) > 1e-10) {
      throw NetIoError(NetIoKind::kFormatError,
                       "load_net: entry unitary does not match its word");
    }
    entries.push_back(std::move(w));
  }
  return EpsilonNet(std::move(gs), eps0, k_reps, max_len, std::move(entries));
}

}  // namespace scs
