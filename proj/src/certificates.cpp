#include "pbland/certificates.hpp"

#include <utility>

#include "pbland/error.hpp"

namespace pbland {

namespace {

using Bins = std::vector<std::vector<std::string>>;

// {offset, slot}: offset 0 is gadget k, -1 is gadget k-1.
using Ref = std::pair<int, const char*>;

std::vector<std::string> at(int k, std::initializer_list<Ref> refs) {
  std::vector<std::string> out;
  for (const auto& [off, slot] : refs) out.push_back(std::to_string(k + off) + "." + slot);
  return out;
}

std::vector<std::string> gadget(int k, std::initializer_list<const char*> slots) {
  std::vector<std::string> out;
  for (auto s : slots) out.push_back(std::to_string(k) + "." + s);
  return out;
}

PathDecomposition prop3_bins(int k) {
  return {{gadget(k, {"1", "B", "2", "4"}), gadget(k, {"B", "2", "4", "A"}), gadget(k, {"2", "4", "A", "3"}),
           gadget(k, {"4", "A", "3", "5"}), gadget(k, {"A", "3", "5", "6"})}};
}

std::vector<std::string> mt(std::initializer_list<const char*> names) { return {names.begin(), names.end()}; }

}  // namespace

const NamedDecomposition* CertificateBundle::find_decomposition(const std::string& name) const {
  for (const auto& d : decompositions) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

const NamedMinor* CertificateBundle::find_minor(const std::string& name) const {
  for (const auto& m : minors) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

std::vector<std::string> CertificateBundle::names() const {
  std::vector<std::string> out;
  for (const auto& d : decompositions) out.push_back(d.name);
  for (const auto& m : minors) out.push_back(m.name);
  return out;
}

CertificateBundle bundled_certificates(int k) {
  if (k < 1) throw Error(ErrorKind::ParamOutOfRange, "certificate gadget index must be >= 1");
  CertificateBundle b;

  b.decompositions.push_back({"prop3", prop3_bins(k), gadget(k, {"1", "B"}), gadget(k, {"6", "A"}), true,
                              "controlled doubling gadget"});
  b.minors.push_back({"prop3-k4",
                      {{gadget(k, {"1"}), gadget(k, {"A", "2", "3"}), gadget(k, {"B"}), gadget(k, {"4", "5", "6"})}, 4},
                      true,
                      "controlled doubling gadget"});

  b.decompositions.push_back({"prop2",
                              {{at(k, {{-1, "1"}, {-1, "8"}, {0, "6"}, {0, "4"}, {0, "5"}}),
                                at(k, {{-1, "1"}, {-1, "8"}, {0, "6"}, {0, "4"}, {0, "3"}}),
                                at(k, {{-1, "1"}, {-1, "8"}, {0, "6"}, {0, "7"}, {0, "3"}}),
                                at(k, {{-1, "1"}, {0, "2"}, {0, "4"}, {0, "3"}}),
                                at(k, {{0, "1"}, {0, "8"}, {0, "2"}, {0, "7"}})}},
                              {},
                              {},
                              true,
                              "scope structure, gadget k with (k-1,1),(k-1,8)"});
  b.decompositions.push_back({"prop2-repaired",
                              {{at(k, {{-1, "1"}, {-1, "8"}, {0, "6"}, {0, "4"}, {0, "5"}}),
                                at(k, {{-1, "1"}, {-1, "8"}, {0, "6"}, {0, "4"}, {0, "3"}}),
                                at(k, {{-1, "1"}, {-1, "8"}, {0, "6"}, {0, "7"}, {0, "3"}}),
                                at(k, {{-1, "1"}, {0, "2"}, {0, "7"}, {0, "3"}}),
                                at(k, {{0, "1"}, {0, "8"}, {0, "2"}, {0, "7"}})}},
                              {},
                              {},
                              true,
                              "bin 4 carries (k,7) instead of (k,4)"});
  b.minors.push_back({"prop2-k5",
                      {{at(k, {{-1, "1"}}), at(k, {{-1, "8"}}), at(k, {{0, "1"}, {0, "2"}, {0, "3"}}),
                        at(k, {{0, "4"}, {0, "5"}}), at(k, {{0, "6"}, {0, "7"}, {0, "8"}})},
                       5},
                      true,
                      "scope structure, gadget k with (k-1,1),(k-1,8)"});
  b.minors.push_back({"prop2-k5-repaired",
                      {{at(k, {{-1, "1"}}), at(k, {{-1, "8"}}), at(k, {{0, "4"}, {0, "5"}}),
                        at(k, {{0, "6"}, {0, "7"}, {0, "8"}}), at(k, {{0, "1"}, {0, "2"}, {0, "3"}, {1, "2"}, {1, "3"}})},
                       5},
                      true,
                      "needs gadget k+1; valid on ms-scopes with k=1, n>=2"});

  const char* mt_note = "structure unavailable: MT scope edges are not bundled";
  b.decompositions.push_back({"prop1",
                              {{mt({"C0", "C1", "C2", "C3", "C4", "D0"}),
                                mt({"C3", "4C", "5C", "6C", "D0", "F10"}),
                                mt({"A6", "B6", "C6", "C10", "D0", "F10"}),
                                mt({"C6", "C7", "C8", "C9", "C10", "F10"}),
                                mt({"C6", "C8", "C10", "E14", "F10", "G12"}),
                                mt({"C10", "E14", "F10", "G10", "G11", "G12"}),
                                mt({"C10", "E14", "F10", "G10", "G11", "G12"}),
                                mt({"C10", "D10", "E10", "E14", "F10", "G12"}),
                                mt({"C10", "E14", "F12", "F13", "F14", "G12"}),
                                mt({"C10", "C12", "D12", "D13", "F12"}),
                                mt({"A12", "B12", "C12", "C13", "D13"})}},
                              {},
                              {},
                              false,
                              mt_note});
  b.minors.push_back({"prop1-k5",
                      {{mt({"C0", "D0", "C1", "C2", "C3", "C4", "C5", "C6", "B6", "6A"}),
                        mt({"C10", "C9", "D10", "E10"}), mt({"F10", "G10", "G11"}),
                        mt({"C7", "C8", "E14", "D13", "C13"}),
                        mt({"G12", "F12", "F13", "F14", "D12", "C12", "B12", "A12"})},
                       5},
                      false,
                      mt_note});
  return b;
}

std::vector<ChainPiece> cd_chain_pieces(int m) {
  if (m < 1) throw Error(ErrorKind::ParamOutOfRange, "chain needs m >= 1");
  std::vector<ChainPiece> pieces;
  for (int k = m; k >= 1; --k) {
    ChainPiece p;
    p.decomposition = prop3_bins(k);
    p.entry = gadget(k, {"1", "B"});
    if (k >= 2) {
      p.decomposition.bins.push_back(at(k, {{0, "A"}, {0, "6"}, {-1, "1"}, {-1, "B"}}));
      p.exit = at(k, {{-1, "1"}, {-1, "B"}});
    } else {
      p.exit = gadget(k, {"6", "A"});
    }
    pieces.push_back(std::move(p));
  }
  return pieces;
}

}  // namespace pbland
