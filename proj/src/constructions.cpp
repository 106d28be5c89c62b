#include "pbland/constructions.hpp"

#include <algorithm>

#include "pbland/checked.hpp"
#include "pbland/error.hpp"

namespace pbland {

std::string_view to_string(Variant v) { return v == Variant::P10 ? "p10" : "p00"; }

std::string_view to_string(BridgeConvention c) { return c == BridgeConvention::ASide ? "a-side" : "b-side"; }

Variant parse_variant(std::string_view s) {
  if (s == "p10" || s == "P10") return Variant::P10;
  if (s == "p00" || s == "P00") return Variant::P00;
  throw Error(ErrorKind::InvalidArgument, "unknown variant '" + std::string(s) + "'");
}

BridgeConvention parse_convention(std::string_view s) {
  if (s == "a-side" || s == "A_SIDE") return BridgeConvention::ASide;
  if (s == "b-side" || s == "B_SIDE") return BridgeConvention::BSide;
  throw Error(ErrorKind::InvalidArgument, "unknown bridge convention '" + std::string(s) + "'");
}

void CdParams::validate() const {
  if (m < 1 || n < m || n > kMaxCdN) {
    throw Error(ErrorKind::ParamOutOfRange, "need 1 <= m <= n <= " + std::to_string(kMaxCdN) + ", got n=" +
                                                std::to_string(n) + " m=" + std::to_string(m));
  }
}

std::int64_t cd_m(int n, int k) {
  if (k < 1 || k > 62) throw Error(ErrorKind::ParamOutOfRange, "gadget index " + std::to_string(k));
  std::int64_t pow = std::int64_t{1} << (k - 1);
  return checked_sub(checked_mul(pow, checked_add(checked_mul(8, n), 16)), 16);
}

std::int64_t cd_s(int n, int k) { return checked_mul(8, static_cast<std::int64_t>(n) - k); }

std::int64_t CdWeights::unary(std::string_view slot) const {
  if (slot == "1") return u1;
  if (slot == "2") return u2;
  if (slot == "3") return u3;
  if (slot == "4") return u4;
  if (slot == "5") return u5;
  if (slot == "6") return u6;
  if (slot == "A") return uA;
  if (slot == "B") return uB;
  throw Error(ErrorKind::InvalidArgument, "unknown slot '" + std::string(slot) + "'");
}

CdWeights cd_weights(int n, int k) {
  if (k < 1 || n < k || n > kMaxCdN) {
    throw Error(ErrorKind::ParamOutOfRange,
                "need 1 <= k <= n <= 48, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  const std::int64_t m = cd_m(n, k);
  const std::int64_t s = cd_s(n, k);
  auto plus = [](std::int64_t a, std::int64_t b) { return checked_add(a, b); };
  auto neg = [](std::int64_t a) { return checked_neg(a); };

  CdWeights w{};
  w.m = m;
  w.s = s;
  // control channel
  w.uB = neg(plus(s, 3));
  w.b1B = -2;
  w.b4B = plus(s, 2);
  w.b4A = plus(s, 2);
  w.bAB = plus(s, 4);
  w.b2B = plus(s, 4);
  w.uA = neg(plus(s, 5));
  // doubling channel
  w.down = m;
  w.u6 = neg(plus(m, 1));
  w.b36 = plus(m, 2);
  w.b56 = neg(plus(m, 2));
  w.u3 = neg(plus(m, 3));
  w.b23 = plus(m, 4);
  w.u2 = neg(plus(m, 5));
  w.b12 = plus(m, 6);
  w.u5 = -1;
  w.b45 = plus(m, 4);
  w.u4 = neg(plus(plus(m, s), 7));
  w.b14 = plus(m, 6);
  w.u1 = neg(plus(checked_mul(2, m), 13));
  w.up = plus(checked_mul(2, m), 16);
  // ternaries
  w.t2AB = neg(plus(s, 4));
  w.t4AB = neg(plus(s, 2));
  return w;
}

std::int64_t cd_bridge_weight(int n, int k, BridgeConvention convention) {
  return convention == BridgeConvention::ASide ? checked_add(cd_s(n, k), 6) : cd_s(n, k - 1);
}

std::size_t cd_position(int m, int k, std::string_view slot) {
  auto it = std::find(kCdSlots.begin(), kCdSlots.end(), slot);
  if (it == kCdSlots.end() || k < 1 || k > m)
    throw Error(ErrorKind::InvalidArgument, "no variable (" + std::to_string(k) + "," + std::string(slot) + ")");
  return static_cast<std::size_t>(8 * (m - k) + (it - kCdSlots.begin()));
}

namespace {

// Internal constraints of one gadget; `var` maps a slot to its VariableId.
template <typename VarOf>
void add_gadget_body(InstanceBuilder& b, const CdWeights& w, VarOf var, std::int64_t u1, std::int64_t u6,
                     std::int64_t uA, std::int64_t uB) {
  b.add({var("1")}, u1);
  b.add({var("2")}, w.u2);
  b.add({var("3")}, w.u3);
  b.add({var("4")}, w.u4);
  b.add({var("5")}, w.u5);
  b.add({var("6")}, u6);
  b.add({var("A")}, uA);
  b.add({var("B")}, uB);

  b.add({var("1"), var("2")}, w.b12);
  b.add({var("2"), var("3")}, w.b23);
  b.add({var("3"), var("6")}, w.b36);
  b.add({var("1"), var("4")}, w.b14);
  b.add({var("4"), var("5")}, w.b45);
  b.add({var("5"), var("6")}, w.b56);
  b.add({var("A"), var("B")}, w.bAB);
  b.add({var("1"), var("B")}, w.b1B);
  b.add({var("2"), var("B")}, w.b2B);
  b.add({var("4"), var("A")}, w.b4A);
  b.add({var("4"), var("B")}, w.b4B);

  b.add({var("2"), var("A"), var("B")}, w.t2AB);
  b.add({var("4"), var("A"), var("B")}, w.t4AB);
}

}  // namespace

VcspInstance build_cd_chain(const CdParams& params) {
  params.validate();
  const int n = params.n;
  const int m = params.m;
  InstanceBuilder b(static_cast<std::size_t>(8 * m));
  auto at = [m](int k, std::string_view slot) { return VariableId{cd_position(m, k, slot)}; };

  for (int k = m; k >= 1; --k) {
    for (auto slot : kCdSlots) b.label(at(k, slot), VarLabel{k, std::string(slot)});
  }
  for (int k = m; k >= 1; --k) {
    const auto w = cd_weights(n, k);
    std::int64_t u1 = w.u1;
    if (k == m && params.variant == Variant::P10) u1 = checked_add(w.m, 3);
    add_gadget_body(b, w, [&](std::string_view s) { return at(k, s); }, u1, w.u6, w.uA, w.uB);
    if (k >= 2) {
      b.add({at(k, "6"), at(k - 1, "1")}, w.down);
      b.add({at(k - 1, "B"), at(k, "A")}, cd_bridge_weight(n, k, params.convention));
    }
  }
  // First gadget: the (1,6)-(0,1) and (0,B)-(1,A) edges collapse onto (1,6)-(1,A) = m_1 = s_0 = 8n.
  b.add({at(1, "6"), at(1, "A")}, checked_mul(8, n));

  b.attribute("generator", "cd-chain");
  b.attribute("n", std::to_string(n));
  b.attribute("m", std::to_string(m));
  b.attribute("variant", std::string(to_string(params.variant)));
  b.attribute("convention", std::string(to_string(params.convention)));
  return b.build();
}

namespace {

Assignment top_peak(int m) {
  Assignment x(static_cast<std::size_t>(8 * m));
  for (auto slot : {"1", "2", "3", "4", "5", "B"}) x.set(cd_position(m, m, slot), true);
  return x;
}

}  // namespace

Assignment cd_start(const CdParams& params) {
  params.validate();
  return params.variant == Variant::P10 ? Assignment::zeros(static_cast<std::size_t>(8 * params.m))
                                        : top_peak(params.m);
}

Assignment cd_end(const CdParams& params) {
  params.validate();
  return params.variant == Variant::P10 ? top_peak(params.m)
                                        : Assignment::zeros(static_cast<std::size_t>(8 * params.m));
}

std::int64_t cd_ascent_length(int m) {
  if (m < 1 || m > 58) throw Error(ErrorKind::ParamOutOfRange, "m = " + std::to_string(m));
  return checked_mul(10, (std::int64_t{1} << m) - 1);
}

std::int64_t cd_default_max_steps(int m) { return checked_mul(2, cd_ascent_length(m)); }

VcspInstance build_cd_gadget(int n, int k, GadgetBoundary boundary, BridgeConvention convention) {
  const auto w = cd_weights(n, k);
  InstanceBuilder b(8);
  auto at = [](std::string_view slot) { return VariableId{cd_position(1, 1, slot)}; };
  for (auto slot : kCdSlots) b.label(at(slot), VarLabel{k, std::string(slot)});

  const std::int64_t bridge_in = cd_bridge_weight(n, k, convention);
  const std::int64_t bridge_out =
      convention == BridgeConvention::ASide ? checked_add(cd_s(n, k + 1), 6) : cd_s(n, k);
  const std::int64_t u1 = boundary.P ? checked_add(w.u1, w.up) : w.u1;
  const std::int64_t u6 = boundary.S ? checked_add(w.u6, w.down) : w.u6;
  const std::int64_t uA = boundary.Q ? checked_add(w.uA, bridge_in) : w.uA;
  const std::int64_t uB = boundary.R ? checked_add(w.uB, bridge_out) : w.uB;
  add_gadget_body(b, w, at, u1, u6, uA, uB);

  b.attribute("generator", "cd-gadget");
  b.attribute("n", std::to_string(n));
  b.attribute("k", std::to_string(k));
  b.attribute("P", boundary.P ? "1" : "0");
  b.attribute("Q", boundary.Q ? "1" : "0");
  b.attribute("R", boundary.R ? "1" : "0");
  b.attribute("S", boundary.S ? "1" : "0");
  b.attribute("convention", std::string(to_string(convention)));
  return b.build();
}

VcspInstance build_ms_scopes(int n) {
  if (n < 1 || n > 1000) throw Error(ErrorKind::ParamOutOfRange, "ms-scopes needs 1 <= n <= 1000");
  const std::size_t d = static_cast<std::size_t>(8 * n + 4);
  InstanceBuilder b(d);
  // (n+1,1),(n+1,2) | gadget n .. gadget 1 | (0,1),(0,8)
  auto at = [n, d](int k, int slot) -> VariableId {
    if (k == n + 1) return VariableId{static_cast<std::size_t>(slot - 1)};
    if (k == 0) return VariableId{slot == 1 ? d - 2 : d - 1};
    return VariableId{static_cast<std::size_t>(2 + 8 * (n - k) + (slot - 1))};
  };
  b.label(at(n + 1, 1), VarLabel{n + 1, "1"});
  b.label(at(n + 1, 2), VarLabel{n + 1, "2"});
  for (int k = n; k >= 1; --k) {
    for (int i = 1; i <= 8; ++i) b.label(at(k, i), VarLabel{k, std::to_string(i)});
  }
  b.label(at(0, 1), VarLabel{0, "1"});
  b.label(at(0, 8), VarLabel{0, "8"});

  for (std::size_t v = 0; v < d; ++v) b.add({VariableId{v}}, 1);
  b.add({at(0, 1), at(0, 8)}, 1);
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= 7; ++i) b.add({at(k, i), at(k, i + 1)}, 1);
    for (int i : {2, 4, 6}) b.add({at(k, i), at(k - 1, 1)}, 1);
    for (int i : {3, 5, 7}) b.add({at(k - 1, 8), at(k, i)}, 1);
  }
  b.add({at(n + 1, 1), at(n + 1, 2)}, 1);
  b.add({at(n + 1, 1), at(n, 1)}, 1);

  b.attribute("generator", "ms-scopes");
  b.attribute("n", std::to_string(n));
  return b.build();
}

}  // namespace pbland
