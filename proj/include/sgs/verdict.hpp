#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "sgs/cert_forest.hpp"
#include "sgs/cert_msf.hpp"
#include "sgs/certificate.hpp"
#include "sgs/graph.hpp"
#include "sgs/oracle.hpp"

namespace sgs {

struct ComponentsVerdict {
  std::vector<VertexId> labels;
  std::size_t count = 0;
};

struct ConnectivityVerdict {
  CertificateType type = CertificateType::VertexConnectivity;
  unsigned k = 0;
  bool holds = false;
  std::optional<CutWitness> witness;
};

struct MsfVerdict {
  std::vector<Edge> edges;
  Weight total_weight = 0;
};

using Verdict = std::variant<ComponentsVerdict, BipartitionVerdict, ConnectivityVerdict, MsfVerdict>;

inline ComponentsVerdict components_verdict(const EdgeSet& g) {
  ComponentsVerdict v;
  v.labels = components(g);
  v.count = component_count(v.labels);
  return v;
}

/// Rebuilds the forest-plus-odd-edge form of `g` (which may carry a final
/// partial group) and reads the verdict off it.
inline BipartitionVerdict bipartite_verdict(const EdgeSet& g) {
  return bipartition_verdict(build_bipartite_certificate(g));
}

inline ConnectivityVerdict vertex_connectivity_verdict(const EdgeSet& g, unsigned k) {
  auto r = is_k_vertex_connected(g, k);
  return {CertificateType::VertexConnectivity, k, r.holds, std::move(r.witness)};
}

inline ConnectivityVerdict edge_connectivity_verdict(const EdgeSet& g, unsigned k) {
  auto r = is_k_edge_connected(g, k);
  return {CertificateType::EdgeConnectivity, k, r.holds, std::move(r.witness)};
}

inline MsfVerdict msf_verdict(const Certificate& cert) {
  return {cert.edges, msf_weight(cert)};
}

/// Answers the certificate's property from the certificate alone.
inline Verdict postprocess(const Certificate& cert) {
  EdgeSet g = cert.edge_set();
  switch (cert.kind.type) {
    case CertificateType::SpanningForest: return components_verdict(g);
    case CertificateType::Bipartite: return bipartite_verdict(g);
    case CertificateType::VertexConnectivity: return vertex_connectivity_verdict(g, cert.kind.k);
    case CertificateType::EdgeConnectivity: return edge_connectivity_verdict(g, cert.kind.k);
    case CertificateType::MinimumSpanningForest: return msf_verdict(cert);
  }
  throw std::logic_error("unknown certificate type");
}

}  // namespace sgs
