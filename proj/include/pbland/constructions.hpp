#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pbland/vcsp.hpp"

namespace pbland {

/// Slot order inside a controlled-doubling gadget; also the bit order within a gadget.
inline constexpr std::array<std::string_view, 8> kCdSlots = {"1", "2", "3", "4", "5", "6", "A", "B"};

/// Largest n accepted by the cd builders; m_k overflows int64 for k around 55.
inline constexpr int kMaxCdN = 48;

enum class Variant { P10, P00 };

/// Which endpoint's formula fixes the (k-1,B)-(k,A) bridge weight.
/// ASide: s_k + 6 (value forced by C-hat(k,A) = 1). BSide: s_{k-1}.
enum class BridgeConvention { ASide, BSide };

std::string_view to_string(Variant v);
std::string_view to_string(BridgeConvention c);
Variant parse_variant(std::string_view s);
BridgeConvention parse_convention(std::string_view s);

struct CdParams {
  int n = 1;
  int m = 1;
  Variant variant = Variant::P10;
  BridgeConvention convention = BridgeConvention::ASide;

  /// Throws ParamOutOfRange unless 1 <= m <= n <= kMaxCdN.
  void validate() const;
};

/// Neighbour bits seen by a single gadget k.
struct GadgetBoundary {
  bool P = false;  // x_(k+1,6)
  bool Q = false;  // x_(k-1,B)
  bool R = false;  // x_(k+1,A)
  bool S = false;  // x_(k-1,1)
};

/// Doubling-channel scale m_k = 2^(k-1) (8n+16) - 16.
std::int64_t cd_m(int n, int k);
/// Control-channel scale s_k = 8(n-k); negative for k > n.
std::int64_t cd_s(int n, int k);

/// Every weight of gadget k. Unary weights are the plain (unmodified) ones.
struct CdWeights {
  std::int64_t m = 0;
  std::int64_t s = 0;

  std::int64_t u1, u2, u3, u4, u5, u6, uA, uB;
  std::int64_t b12, b23, b36, b14, b45, b56, bAB, b1B, b2B, b4A, b4B;
  std::int64_t t2AB, t4AB;
  /// C((k,6),(k-1,1)) = m_k.
  std::int64_t down;
  /// C((k+1,6),(k,1)) = 2 m_k + 16 = m_{k+1}.
  std::int64_t up;

  /// Unary weight by slot name.
  std::int64_t unary(std::string_view slot) const;
};

CdWeights cd_weights(int n, int k);

/// Weight of the bridge (k-1,B)-(k,A) under a convention.
std::int64_t cd_bridge_weight(int n, int k, BridgeConvention convention);

/// Bit position of (k, slot) in a chain of m gadgets (gadget m leftmost).
std::size_t cd_position(int m, int k, std::string_view slot);

VcspInstance build_cd_chain(const CdParams& params);

Assignment cd_start(const CdParams& params);
Assignment cd_end(const CdParams& params);

/// Default ascent budget for a generated chain: 2 * 10 (2^m - 1).
std::int64_t cd_default_max_steps(int m);

/// Designated ascent length T_m = 10 (2^m - 1).
std::int64_t cd_ascent_length(int m);

/// Closed 8-variable gadget with neighbour bits folded into the boundary unaries.
VcspInstance build_cd_gadget(int n, int k, GadgetBoundary boundary,
                             BridgeConvention convention = BridgeConvention::ASide);

/// Michel-Scott scope structure on 8n+4 variables, unit weights.
/// Canonical order: (n+1,1),(n+1,2), gadgets n..1 (slots 1..8), then (0,1),(0,8).
VcspInstance build_ms_scopes(int n);

}  // namespace pbland
