#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sgs/errors.hpp"
#include "sgs/io.hpp"
#include "sgs/stream.hpp"
#include "sgs/verdict.hpp"

namespace sgs {

enum class Problem { Components, Bipartite, VertexConnectivity, EdgeConnectivity, Msf };

inline const char* problem_name(Problem p) {
  switch (p) {
    case Problem::Components: return "cc";
    case Problem::Bipartite: return "bipartite";
    case Problem::VertexConnectivity: return "kvconn";
    case Problem::EdgeConnectivity: return "keconn";
    case Problem::Msf: return "msf";
  }
  return "unknown";
}

/// Parses "cc", "bipartite", "kvconn", "keconn", "msf", or the shared-
/// certificate combination "kvconn,keconn".
inline std::vector<Problem> parse_problems(std::string_view list) {
  std::vector<Problem> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    std::string_view name = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
    if (name == "cc") out.push_back(Problem::Components);
    else if (name == "bipartite") out.push_back(Problem::Bipartite);
    else if (name == "kvconn") out.push_back(Problem::VertexConnectivity);
    else if (name == "keconn") out.push_back(Problem::EdgeConnectivity);
    else if (name == "msf") out.push_back(Problem::Msf);
    else throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  bool connectivity_only = true;
  for (Problem p : out) {
    connectivity_only &= p == Problem::VertexConnectivity || p == Problem::EdgeConnectivity;
  }
  if (out.size() > 1 && !connectivity_only) {
    throw std::invalid_argument("only kvconn and keconn can share one pass");
  }
  if (out.size() == 2 && out[0] == out[1]) throw std::invalid_argument("problem listed twice");
  if (out.size() > 2) throw std::invalid_argument("too many problems");
  return out;
}

struct RunOptions {
  std::vector<Problem> problems{Problem::Components};
  unsigned k = 0;
  std::optional<std::size_t> group_size;
  bool skip_loops = false;
  bool final_recompute = false;
  std::uint64_t seed = 0;  // echoed in the report
  std::size_t max_stored_edges = 0;
  unsigned weight_decimals = 0;
};

struct RunReport {
  RunOptions options;
  StreamHeader header;
  CertificateKind kind;
  std::size_t group_size = 0;
  std::size_t storage_limit = 0;
  std::size_t certificate_edges = 0;
  std::size_t certificate_bound = 0;
  std::uint64_t skipped_loops = 0;
  std::vector<Verdict> verdicts;
  MetricsLedger metrics;
};

inline CertificateKind kind_for(const RunOptions& opt) {
  if (opt.problems.empty()) throw std::invalid_argument("no problem given");
  switch (opt.problems.front()) {
    case Problem::Components: return CertificateKind::spanning_forest();
    case Problem::Bipartite: return CertificateKind::bipartite();
    case Problem::VertexConnectivity:
    case Problem::EdgeConnectivity:
      if (opt.k == 0) throw std::invalid_argument("kvconn and keconn need --k >= 1");
      return opt.problems.front() == Problem::VertexConnectivity ? CertificateKind::vertex_connectivity(opt.k)
                                                                 : CertificateKind::edge_connectivity(opt.k);
    case Problem::Msf: return CertificateKind::msf();
  }
  throw std::logic_error("unknown problem");
}

/// Streams `in` through one engine and answers the requested problems
/// from the final certificate.
inline RunReport run_stream(std::istream& in, const RunOptions& opt) {
  const CertificateKind kind = kind_for(opt);
  StreamReader reader(in, opt.weight_decimals);
  const StreamHeader header = reader.header();
  if (kind.weighted() && !header.weighted) throw FormatError(0, "msf needs a weighted stream header");

  StreamEngine engine({kind, header.n, opt.group_size, opt.final_recompute, opt.max_stored_edges});
  RunReport report;
  report.options = opt;
  report.header = header;
  report.kind = kind;
  report.group_size = engine.group_size();
  report.storage_limit = engine.storage_limit();

  StreamRecord rec;
  while (reader.next(rec)) {
    if (rec.u == rec.v) {
      if (opt.skip_loops) {
        ++report.skipped_loops;
        continue;
      }
      throw LoopEdgeError(rec.u, rec.position);
    }
    if (kind.weighted()) engine.ingest(rec.u, rec.v, rec.weight);
    else engine.ingest(rec.u, rec.v);
  }
  Certificate cert = engine.finalize();
  report.metrics = engine.metrics();
  report.certificate_edges = cert.edges.size();
  report.certificate_bound = cert.bound;

  EdgeSet g = cert.edge_set();
  for (Problem p : opt.problems) {
    switch (p) {
      case Problem::Components: report.verdicts.emplace_back(components_verdict(g)); break;
      case Problem::Bipartite: report.verdicts.emplace_back(bipartite_verdict(g)); break;
      case Problem::VertexConnectivity: report.verdicts.emplace_back(vertex_connectivity_verdict(g, opt.k)); break;
      case Problem::EdgeConnectivity: report.verdicts.emplace_back(edge_connectivity_verdict(g, opt.k)); break;
      case Problem::Msf: report.verdicts.emplace_back(msf_verdict(cert)); break;
    }
  }
  return report;
}

namespace detail {

inline nlohmann::json edge_json(const Edge& e, bool weighted) {
  return weighted ? nlohmann::json::array({e.u, e.v, e.weight}) : nlohmann::json::array({e.u, e.v});
}

struct VerdictJson {
  nlohmann::json operator()(const ComponentsVerdict& v) const {
    return {{"problem", "cc"}, {"components", v.count}, {"labels", v.labels}};
  }
  nlohmann::json operator()(const BipartitionVerdict& v) const {
    nlohmann::json j{{"problem", "bipartite"}};
    if (auto* parts = std::get_if<Bipartition>(&v)) {
      j["bipartite"] = true;
      j["left"] = parts->left;
      j["right"] = parts->right;
    } else {
      j["bipartite"] = false;
      j["odd_cycle"] = std::get<OddCycle>(v).vertices;
    }
    return j;
  }
  nlohmann::json operator()(const ConnectivityVerdict& v) const {
    bool vertex = v.type == CertificateType::VertexConnectivity;
    nlohmann::json j{{"problem", vertex ? "kvconn" : "keconn"}, {"k", v.k}, {"holds", v.holds}};
    if (v.witness) {
      if (vertex) {
        j["separator"] = v.witness->vertices;
      } else {
        nlohmann::json cut = nlohmann::json::array();
        for (const Edge& e : v.witness->edges) cut.push_back(edge_json(e, false));
        j["cut"] = cut;
      }
    }
    return j;
  }
  nlohmann::json operator()(const MsfVerdict& v) const {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : v.edges) edges.push_back(edge_json(e, true));
    return {{"problem", "msf"}, {"total_weight", v.total_weight}, {"edges", edges}};
  }
};

}  // namespace detail

inline nlohmann::json metrics_json(const MetricsLedger& m) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [units, count] : m.work_histogram) hist[std::to_string(units)] = count;
  return {{"total_edges", m.total_edges},
          {"peak_stored_edges", m.peak_stored_edges},
          {"recompute_count", m.recompute_count},
          {"max_work_units", m.max_work_units},
          {"mean_work_units", m.mean_work_units()},
          {"total_work_units", m.total_work_units},
          {"finalize_work_units", m.finalize_work_units},
          {"work_histogram", hist}};
}

inline nlohmann::json to_json(const RunReport& r) {
  nlohmann::json problems = nlohmann::json::array();
  for (Problem p : r.options.problems) problems.push_back(problem_name(p));
  nlohmann::json config{{"problems", problems},
                        {"n", r.header.n},
                        {"weighted", r.header.weighted},
                        {"group_size", r.group_size},
                        {"storage_limit", r.storage_limit},
                        {"final_recompute", r.options.final_recompute},
                        {"skip_loops", r.options.skip_loops},
                        {"seed", r.options.seed}};
  if (r.kind.is_connectivity()) config["k"] = r.kind.k;
  nlohmann::json verdicts = nlohmann::json::array();
  for (const Verdict& v : r.verdicts) verdicts.push_back(std::visit(detail::VerdictJson{}, v));
  nlohmann::json metrics = metrics_json(r.metrics);
  metrics["certificate_edges"] = r.certificate_edges;
  metrics["certificate_bound"] = r.certificate_bound;
  metrics["skipped_loops"] = r.skipped_loops;
  return {{"config", config}, {"verdicts", verdicts}, {"metrics", metrics}};
}

inline std::string to_human(const RunReport& r) {
  std::ostringstream out;
  auto list = [&](const std::vector<VertexId>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  };
  for (const Verdict& verdict : r.verdicts) {
    if (auto* v = std::get_if<ComponentsVerdict>(&verdict)) {
      out << "components: " << v->count << "\nlabels: ";
      list(v->labels);
      out << '\n';
    } else if (auto* v = std::get_if<BipartitionVerdict>(&verdict)) {
      if (auto* parts = std::get_if<Bipartition>(v)) {
        out << "bipartite: yes\nleft: ";
        list(parts->left);
        out << "\nright: ";
        list(parts->right);
        out << '\n';
      } else {
        out << "bipartite: no\nodd cycle: ";
        list(std::get<OddCycle>(*v).vertices);
        out << '\n';
      }
    } else if (auto* v = std::get_if<ConnectivityVerdict>(&verdict)) {
      bool vertex = v->type == CertificateType::VertexConnectivity;
      out << v->k << (vertex ? "-vertex-connected: " : "-edge-connected: ") << (v->holds ? "yes" : "no") << '\n';
      if (v->witness && vertex) {
        out << "separator: ";
        list(v->witness->vertices);
        out << '\n';
      } else if (v->witness) {
        out << "cut:";
        for (const Edge& e : v->witness->edges) out << ' ' << e.u << '-' << e.v;
        out << '\n';
      }
    } else if (auto* v = std::get_if<MsfVerdict>(&verdict)) {
      out << "msf weight: " << v->total_weight << "\nmsf edges: " << v->edges.size() << '\n';
      for (const Edge& e : v->edges) out << "  " << e.u << ' ' << e.v << ' ' << e.weight << '\n';
    }
  }
  const MetricsLedger& m = r.metrics;
  out << "edges: " << m.total_edges << "\ngroup size: " << r.group_size << "\npeak stored edges: "
      << m.peak_stored_edges << " (limit " << r.storage_limit << ")\ncertificate edges: " << r.certificate_edges
      << " (bound " << r.certificate_bound << ")\nrecomputes: " << m.recompute_count
      << "\nwork units per ingest: max " << m.max_work_units << ", mean " << m.mean_work_units() << '\n';
  if (r.skipped_loops) out << "skipped loops: " << r.skipped_loops << '\n';
  return out.str();
}

}  // namespace sgs
