#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgs/cert_forest.hpp"
#include "sgs/cert_kconn.hpp"
#include "sgs/cert_msf.hpp"
#include "sgs/certificate.hpp"
#include "sgs/errors.hpp"
#include "sgs/graph.hpp"
#include "sgs/work.hpp"

namespace sgs {

inline std::size_t ceil_log2(std::size_t n) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

/// n for connectivity properties, n * ceil(log2 n) for the minimum
/// spanning forest (1 when n = 1).
inline std::size_t default_group_size(CertificateKind kind, std::size_t n) {
  if (kind.type == CertificateType::MinimumSpanningForest) {
    return n <= 1 ? 1 : n * ceil_log2(n);
  }
  return n;
}

struct StreamConfig {
  CertificateKind kind;
  std::size_t n = 0;
  std::optional<std::size_t> group_size;  // default_group_size when unset
  bool final_recompute = false;
  std::size_t max_stored_edges = 0;  // optional tighter cap; 0 = none
};

struct MetricsLedger {
  std::uint64_t total_edges = 0;
  std::uint64_t peak_stored_edges = 0;
  std::uint64_t recompute_count = 0;
  WorkUnits total_work_units = 0;
  WorkUnits max_work_units = 0;
  WorkUnits finalize_work_units = 0;
  /// Work units charged by an ingest call -> number of such calls.
  std::map<WorkUnits, std::uint64_t> work_histogram;

  double mean_work_units() const {
    return total_edges == 0 ? 0.0 : static_cast<double>(total_work_units) / static_cast<double>(total_edges);
  }
};

inline WorkUnits kernel_work(CertificateKind kind, std::size_t n, std::size_t merged, std::size_t group,
                             std::size_t prune_tests) {
  switch (kind.type) {
    case CertificateType::SpanningForest: return forest_work(n, merged, group);
    case CertificateType::Bipartite: return bipartite_work(n, merged, group);
    case CertificateType::VertexConnectivity:
    case CertificateType::EdgeConnectivity:
      return kconn_work(n, merged, group, kind.k, scan_mode_for(kind.type), prune_tests);
    case CertificateType::MinimumSpanningForest: return msf_work(n, merged, group);
  }
  return 0;
}

inline WorkTask<bool> run_kernel(Meter& meter, CertificateKind kind, KernelInput in, std::size_t prune_tests) {
  switch (kind.type) {
    case CertificateType::SpanningForest: return forest_kernel(meter, in);
    case CertificateType::Bipartite: return bipartite_kernel(meter, in, nullptr);
    case CertificateType::VertexConnectivity:
    case CertificateType::EdgeConnectivity:
      return kconn_kernel(meter, in, kind.k, scan_mode_for(kind.type), prune_tests);
    case CertificateType::MinimumSpanningForest: return msf_kernel(meter, in);
  }
  throw std::logic_error("unknown certificate type");
}

/// Certificate of `merged` for `kind`, computed eagerly. For C_k this is
/// build_k_certificate; for bipartiteness the odd edge, if any, is among
/// the returned edges.
inline Certificate recompute(CertificateKind kind, std::size_t n, const EdgeSet& merged) {
  if (merged.n != n) throw std::invalid_argument("edge set vertex count does not match n");
  switch (kind.type) {
    case CertificateType::SpanningForest: return build_forest_certificate(merged);
    case CertificateType::Bipartite: {
      auto b = build_bipartite_certificate(merged);
      return Certificate{kind, n, b.edge_set().edges, nominal_bound(kind, n)};
    }
    case CertificateType::VertexConnectivity:
    case CertificateType::EdgeConnectivity: return build_k_certificate(merged, kind.k, kind.type);
    case CertificateType::MinimumSpanningForest: return build_msf(merged);
  }
  throw std::logic_error("unknown certificate type");
}

/// One-pass certificate maintenance over an edge stream. Edges are buffered
/// in groups; when a group fills, the certificate and the group become the
/// working set of a recompute job, and the job advances by a fixed slice of
/// work on each of the following ingests while the next group fills.
class StreamEngine {
 public:
  explicit StreamEngine(StreamConfig config) : state_(std::make_unique<State>()) {
    if (config.n == 0) throw std::invalid_argument("a stream needs n >= 1");
    if (config.kind.is_connectivity() && config.kind.k == 0) {
      throw std::invalid_argument("connectivity streams need k >= 1");
    }
    if (config.group_size && *config.group_size == 0) {
      throw std::invalid_argument("group size must be at least 1");
    }
    State& s = *state_;
    s.group = config.group_size.value_or(default_group_size(config.kind, config.n));
    s.limit = 2 * s.group + guaranteed_bound(config.kind, config.n);
    if (config.max_stored_edges != 0) s.limit = std::min(s.limit, config.max_stored_edges);
    s.config = std::move(config);
    s.buffer.reserve(s.group);
  }

  const StreamConfig& config() const noexcept { return state_->config; }
  std::size_t group_size() const noexcept { return state_->group; }
  std::size_t storage_limit() const noexcept { return state_->limit; }
  const MetricsLedger& metrics() const noexcept { return state_->ledger; }
  bool job_pending() const noexcept { return state_->job != nullptr; }
  bool aborted() const noexcept { return state_->aborted; }

  /// Certificate edges + buffered edges + the recompute working set.
  std::size_t stored_edges() const noexcept {
    const State& s = *state_;
    return s.certificate.size() + s.buffer.size() + s.pending_size;
  }

  void ingest(VertexId u, VertexId v) {
    check_open();
    if (state_->config.kind.weighted()) fail(MissingWeightError());
    accept(u, v, 0);
  }

  void ingest(VertexId u, VertexId v, Weight w) { accept(u, v, w); }

  /// Completes the pending job and applies the final-group rule: the last
  /// partial group is added to the certificate as is, except for the
  /// minimum spanning forest (or with final_recompute), where a last
  /// recompute runs over certificate and group.
  Certificate finalize() {
    check_open();
    State& s = *state_;
    WorkUnits work = 0;
    if (s.job) {
      work += s.job->drain();
      install();
    }
    const CertificateKind kind = s.config.kind;
    bool recompute_last = s.config.final_recompute ||
                          (kind.type == CertificateType::MinimumSpanningForest && !s.buffer.empty());
    if (recompute_last) {
      Job<bool> job(
          [&](Meter& m) { return run_kernel(m, kind, {s.config.n, s.certificate, s.buffer}, kPruneAll); },
          kernel_work(kind, s.config.n, s.certificate.size(), s.buffer.size(), kPruneAll), 1);
      work += job.drain();
      job.take();
      ++s.ledger.recompute_count;
    } else {
      s.certificate.insert(s.certificate.end(), s.buffer.begin(), s.buffer.end());
      s.buffer.clear();
    }
    s.ledger.finalize_work_units = work;
    s.finalized = true;
    return Certificate{kind, s.config.n, s.certificate, nominal_bound(kind, s.config.n)};
  }

 private:
  struct State {
    StreamConfig config;
    std::size_t group = 0;
    std::size_t limit = 0;
    std::vector<Edge> certificate;
    std::vector<Edge> buffer;
    std::vector<Edge> pending_merged;
    std::vector<Edge> pending_group;
    std::size_t pending_size = 0;
    std::unique_ptr<Job<bool>> job;
    MetricsLedger ledger;
    bool aborted = false;
    bool finalized = false;
  };

  void check_open() const {
    if (state_->aborted) throw std::logic_error("stream was aborted");
    if (state_->finalized) throw std::logic_error("stream was already finalized");
  }

  template <class Error>
  [[noreturn]] void fail(const Error& error) {
    state_->aborted = true;
    throw error;
  }

  void accept(VertexId u, VertexId v, Weight w) {
    check_open();
    State& s = *state_;
    if (u >= s.config.n) fail(VertexRangeError(u, s.config.n));
    if (v >= s.config.n) fail(VertexRangeError(v, s.config.n));
    if (u == v) fail(LoopEdgeError(u));

    WorkUnits work = 1;
    s.buffer.push_back(Edge{u, v, w, s.ledger.total_edges});
    ++s.ledger.total_edges;
    note_storage();

    if (s.job) {
      work += s.job->step();
      if (s.job->done()) install();
    }
    if (s.buffer.size() == s.group) {
      if (s.job) {
        fail(InvariantViolation("scheduling bound breached: recompute job unfinished after " +
                                std::to_string(s.group) + " ingests"));
      }
      swap_in_group();
      ++work;
      note_storage();
    }

    s.ledger.total_work_units += work;
    s.ledger.max_work_units = std::max(s.ledger.max_work_units, work);
    ++s.ledger.work_histogram[work];
  }

  void note_storage() {
    State& s = *state_;
    std::size_t stored = stored_edges();
    s.ledger.peak_stored_edges = std::max<std::uint64_t>(s.ledger.peak_stored_edges, stored);
    if (stored > s.limit) {
      fail(InvariantViolation("storage bound breached: " + std::to_string(stored) +
                              " stored edges, limit " + std::to_string(s.limit)));
    }
  }

  void swap_in_group() {
    State& s = *state_;
    s.certificate.swap(s.pending_merged);
    s.buffer.swap(s.pending_group);
    s.pending_size = s.pending_merged.size() + s.pending_group.size();
    const CertificateKind kind = s.config.kind;
    const std::size_t n = s.config.n;
    const std::size_t tests = kind.is_connectivity() ? prune_tests_per_recompute(kind.k) : 0;
    WorkUnits bound = kernel_work(kind, n, s.pending_merged.size(), s.pending_group.size(), tests);
    s.job = std::make_unique<Job<bool>>(
        [&](Meter& m) { return run_kernel(m, kind, {n, s.pending_merged, s.pending_group}, tests); }, bound,
        s.group);
    ++s.ledger.recompute_count;
  }

  void install() {
    State& s = *state_;
    try {
      s.job->take();
    } catch (const InvariantViolation& e) {
      fail(e);
    }
    s.job.reset();
    s.certificate.swap(s.pending_merged);
    s.pending_merged.clear();
    s.pending_size = 0;
  }

  std::unique_ptr<State> state_;
};

}  // namespace sgs
