#pragma once

#include <string>
#include <vector>

#include "pbland/graphwidth.hpp"

namespace pbland {

/// A bundled decomposition and where it is meant to be checked.
struct NamedDecomposition {
  std::string name;
  PathDecomposition decomposition;
  std::vector<std::string> first_must_contain;
  std::vector<std::string> last_must_contain;
  /// False when the underlying edge set is not available (MT).
  bool edges_available = true;
  std::string note;
};

struct NamedMinor {
  std::string name;
  MinorCertificate certificate;
  bool edges_available = true;
  std::string note;
};

struct CertificateBundle {
  std::vector<NamedDecomposition> decompositions;
  std::vector<NamedMinor> minors;

  /// nullptr when absent.
  const NamedDecomposition* find_decomposition(const std::string& name) const;
  const NamedMinor* find_minor(const std::string& name) const;
  std::vector<std::string> names() const;
};

/// Literature certificates instantiated at gadget k (vertex names "<gadget>.<slot>").
///   prop3, prop3-k4            controlled doubling gadget k
///   prop2, prop2-k5            scope structure around gadget k; k-1 gadget boundary is (k-1,1),(k-1,8)
///   prop2-repaired, prop2-k5-repaired  corrected versions of the two above
///   prop1, prop1-k5            MT gadget, names kept as printed; no edges
CertificateBundle bundled_certificates(int k = 1);

/// Chain pieces for build_cd_chain with m gadgets, in canonical order (gadget m first).
/// Each piece after the top one carries a junction bin holding the cross edges to gadget k-1.
std::vector<ChainPiece> cd_chain_pieces(int m);

}  // namespace pbland
