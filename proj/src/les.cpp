#include "matchcx/les.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace matchcx {

namespace {

using VL = VertexLabel;

bool chess(const LesMapSpec& s) { return s.family == LesFamily::Chessboard; }

void check_range(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi)
    throw std::invalid_argument(std::string(what) + " index " + std::to_string(v) + " outside " + std::to_string(lo) +
                                ".." + std::to_string(hi));
}

void check_sizes(const LesMapSpec& s) {
  if (chess(s)) {
    if (s.m < 2 || s.n < 2 || s.m > Ground::kMaxValue || s.n > Ground::kMaxValue)
      throw std::invalid_argument("chessboard sequence needs 2 <= m, n <= 63");
  } else if (s.n < 4 || s.n > Ground::kMaxValue) {
    throw std::invalid_argument("matching sequence needs 4 <= n <= 63");
  }
}

void check_phi(const LesMapSpec& s) {
  check_sizes(s);
  if (s.a != 1 && s.a != 2) throw std::invalid_argument("phi summand a must be 1 or 2");
  if (!chess(s)) check_range(s.i, 3, s.n, "phi");
  else check_range(s.i, 2, s.a == 1 ? s.m : s.n, "phi");
}

void check_pair(const LesMapSpec& s) {
  check_sizes(s);
  if (chess(s)) {
    check_range(s.i, 2, s.m, "row");
    check_range(s.j, 2, s.n, "column");
  } else {
    check_range(s.i, 3, s.n, "psi");
    check_range(s.j, 3, s.n, "psi");
    if (s.i == s.j) throw std::invalid_argument("psi needs i != j");
  }
}

std::vector<Ground> ground_without(const LesMapSpec& s, std::vector<Ground> drop) {
  std::vector<Ground> g;
  if (chess(s)) {
    for (int r = 1; r <= s.m; ++r) g.push_back(Ground::plain(r));
    for (int c = 1; c <= s.n; ++c) g.push_back(Ground::primed(c));
  } else {
    for (int v = 1; v <= s.n; ++v) g.push_back(Ground::plain(v));
  }
  std::erase_if(g, [&](Ground x) { return std::find(drop.begin(), drop.end(), x) != drop.end(); });
  return g;
}

void check_support(const Chain& z, const std::vector<Ground>& allowed, const char* what) {
  for (auto g : z.support_ground())
    if (!std::binary_search(allowed.begin(), allowed.end(), g))
      throw std::invalid_argument(std::string(what) + ": chain touches " + g.to_string() + " outside the allowed ground set");
}

}  // namespace

std::vector<Ground> les_phi_domain(const LesMapSpec& s) {
  check_phi(s);
  auto P = Ground::plain;
  auto Q = Ground::primed;
  if (!chess(s)) return ground_without(s, {P(1), P(2), P(s.i)});
  if (s.a == 1) return ground_without(s, {P(1), P(s.i), Q(1)});
  return ground_without(s, {P(1), Q(1), Q(s.i)});
}

std::vector<Ground> les_psi_target(const LesMapSpec& s) {
  check_pair(s);
  auto P = Ground::plain;
  auto Q = Ground::primed;
  if (!chess(s)) return ground_without(s, {P(1), P(2), P(s.i), P(s.j)});
  return ground_without(s, {P(1), P(s.i), Q(1), Q(s.j)});
}

Chain les_phi(const LesMapSpec& s, const Chain& z) {
  check_support(z, les_phi_domain(s), "phi");
  Chain head(0);
  if (!chess(s)) {
    head.add_oriented(std::vector<VL>{VL::edge(s.a, s.i)}, 1);
    head.add_oriented(std::vector<VL>{VL::edge(1, 2)}, -1);
  } else {
    head.add_oriented(std::vector<VL>{VL::rook(1, 1)}, 1);
    head.add_oriented(std::vector<VL>{s.a == 1 ? VL::rook(s.i, 1) : VL::rook(1, s.i)}, -1);
  }
  return wedge(head, z);
}

Chain les_psi(const LesMapSpec& s, const Chain& x) {
  check_pair(s);
  check_support(x, ground_without(s, {}), "psi");
  VL first = chess(s) ? VL::rook(1, s.j) : VL::edge(1, s.i);
  VL second = chess(s) ? VL::rook(s.i, 1) : VL::edge(2, s.j);
  Chain out(x.degree() - 2);
  std::vector<VL> ordered;
  for (const auto& [simp, c] : x.terms()) {
    if (!std::binary_search(simp.begin(), simp.end(), first) || !std::binary_search(simp.begin(), simp.end(), second))
      continue;
    Simplex y;
    for (auto v : simp)
      if (v != first && v != second) y.push_back(v);
    ordered.assign({first, second});
    ordered.insert(ordered.end(), y.begin(), y.end());
    // simp = sign * (first ^ second ^ y)
    int sign = canonical_orient(ordered).second;
    out.add(y, sign > 0 ? c : BigInt(-c));
  }
  return out;
}

std::vector<std::pair<LesMapSpec, Chain>> les_delta(const LesMapSpec& s, const Chain& z) {
  check_support(z, les_psi_target(s), "delta");
  LesMapSpec first = s, second = s;
  first.a = 1;
  first.j = 0;
  second.a = 2;
  second.j = 0;
  if (chess(s)) {
    second.i = s.j;
    return {{first, -z}, {second, z}};
  }
  second.i = s.j;
  return {{first, z}, {second, -z}};
}

}  // namespace matchcx
