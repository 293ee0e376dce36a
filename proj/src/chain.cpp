#include "matchcx/chain.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace matchcx {

std::string OrientedSimplex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ",";
    s += vertices[i].to_string();
  }
  return s + ")";
}

std::pair<Simplex, int> canonical_orient(std::span<const VertexLabel> vs) {
  Simplex s(vs.begin(), vs.end());
  int sign = 1;
  // insertion sort counting transpositions; simplices are short
  for (std::size_t i = 1; i < s.size(); ++i) {
    for (std::size_t j = i; j > 0 && s[j] < s[j - 1]; --j) {
      std::swap(s[j], s[j - 1]);
      sign = -sign;
    }
  }
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("repeated vertex in simplex");
  return {std::move(s), sign};
}

std::string simplex_to_string(const Simplex& s) { return OrientedSimplex{s}.to_string(); }

Chain Chain::from_oriented(std::span<const VertexLabel> vs, const BigInt& coeff) {
  Chain c(static_cast<int>(vs.size()) - 1);
  c.add_oriented(vs, coeff);
  return c;
}

Chain Chain::from_oriented(std::initializer_list<VertexLabel> vs, const BigInt& coeff) {
  return from_oriented(std::span<const VertexLabel>(vs.begin(), vs.size()), coeff);
}

Chain Chain::empty_face(const BigInt& coeff) {
  Chain c(-1);
  c.add({}, coeff);
  return c;
}

BigInt Chain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Chain::add(const Simplex& s, const BigInt& c) {
  if (static_cast<int>(s.size()) - 1 != degree_)
    throw std::invalid_argument("simplex dimension does not match chain degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Chain::add_oriented(std::span<const VertexLabel> vs, const BigInt& c) {
  auto [s, sign] = canonical_orient(vs);
  add(s, sign > 0 ? c : BigInt(-c));
}

std::vector<Ground> Chain::support_ground() const {
  std::set<Ground> g;
  for (const auto& [s, c] : terms_)
    for (auto v : s) {
      g.insert(v.lo());
      g.insert(v.hi());
    }
  return {g.begin(), g.end()};
}

void Chain::check_degree(const Chain& o, const char* op) const {
  if (o.degree_ != degree_ && !o.is_zero() && !is_zero())
    throw std::invalid_argument(std::string("chain degree mismatch in ") + op);
}

Chain& Chain::operator+=(const Chain& o) {
  check_degree(o, "+");
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  check_degree(o, "-");
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

Chain& Chain::operator*=(const BigInt& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= k;
  return *this;
}

Chain Chain::operator-() const {
  Chain r = *this;
  for (auto& [s, c] : r.terms_) c = -c;
  return r;
}

std::string Chain::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    BigInt a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += a.get_str() + "*";
    out += simplex_to_string(s);
    first = false;
  }
  return out;
}

Chain boundary(const Chain& c) {
  Chain out(c.degree() - 1);
  if (c.degree() < 0) return out;
  Simplex face;
  for (const auto& [s, coeff] : c.terms()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      out.add(face, (i % 2 == 0) ? coeff : BigInt(-coeff));
    }
  }
  return out;
}

BigInt inner_product(const Chain& a, const Chain& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("inner product of chains of different degree");
  BigInt sum = 0;
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  for (const auto& [s, c] : small.terms()) {
    auto it = large.terms().find(s);
    if (it != large.terms().end()) sum += c * it->second;
  }
  return sum;
}

Chain wedge(const Chain& a, const Chain& b) {
  auto ga = a.support_ground();
  auto gb = b.support_ground();
  std::vector<Ground> common;
  std::set_intersection(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(common));
  if (!common.empty())
    throw std::invalid_argument("wedge of chains over overlapping ground sets (shared " +
                                common.front().to_string() + ")");
  Chain out(a.degree() + b.degree() + 1);
  std::vector<VertexLabel> cat;
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      cat.assign(sa.begin(), sa.end());
      cat.insert(cat.end(), sb.begin(), sb.end());
      out.add_oriented(cat, ca * cb);
    }
  }
  return out;
}

Chain wedge(std::span<const Chain> factors) {
  Chain acc = Chain::empty_face();
  for (const auto& f : factors) acc = wedge(acc, f);
  return acc;
}

Chain transpose(const Chain& c) {
  Chain out(c.degree());
  std::vector<VertexLabel> t;
  for (const auto& [s, coeff] : c.terms()) {
    t.clear();
    for (auto v : s) {
      if (v.kind() != VertexLabel::Kind::Rook) throw std::invalid_argument("transpose of a non-rook label");
      t.push_back(VertexLabel::rook(v.col(), v.row()));
    }
    out.add_oriented(t, coeff);
  }
  return out;
}

}  // namespace matchcx
