#pragma once

#include <cstdint>
#include <map>

#include "surfcert/certificate.hpp"
#include "surfcert/embedding.hpp"
#include "surfcert/graph.hpp"

namespace surfcert {

/// Edge certificates with endpoint ids and v-indices filled in. Each
/// rotation is numbered from its least-id neighbour.
std::map<Edge, EdgeCertificate> assign_rotation_indices(const Graph& g, const EmbeddingScheme& s);

/// Fills the face roots and f-indices of `certs` from `fs`. Throws
/// ProverError(infeasible_face_indices) when `fs` has no valid root placement.
void assign_face_certificates(const Graph& g, const FaceStructure& fs,
                              std::map<Edge, EdgeCertificate>& certs);

/// Subtree counters over `t`. Without `fs` the certificates are in tree mode;
/// with a non-orientable `s` they also carry eta.
std::map<VertexId, VertexCertificate> build_tree_counters(const Graph& g, const RootedTree& t,
                                                          const FaceStructure* fs,
                                                          const EmbeddingScheme* s);

/// Honest certificates for `s` at the given target, self-checked with the
/// verifier before being returned. Throws SchemeError for invalid schemes
/// and ProverError otherwise.
CertificateAssignment prove(const Graph& g, const EmbeddingScheme& s, std::int64_t target_eg);

/// The construction behind `prove` without its refusals: no genus check and
/// no self-check. Used to hand the verifier whatever the construction yields.
CertificateAssignment build_certificates(const Graph& g, const EmbeddingScheme& s,
                                         std::int64_t target_eg);

/// Tree-mode certificates rooted at the least id. Throws ProverError(not_a_tree).
CertificateAssignment prove_tree(const Graph& g, std::int64_t target_eg = 0);

/// Stores each edge certificate at the endpoint that comes later in the
/// degeneracy order.
CertificateAssignment pack(const Graph& g, const CertificateAssignment& a);

/// Inverse of `pack`. Copies of the same edge that differ keep the first one
/// seen in vertex order.
CertificateAssignment unpack(const CertificateAssignment& a);

}  // namespace surfcert
