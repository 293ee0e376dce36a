#include "matchcx/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace matchcx {

namespace {

bool span_less(std::span<const VertexLabel> a, std::span<const VertexLabel> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

using Mask = unsigned __int128;

Mask bit(Ground g) { return Mask(1) << g.code(); }

}  // namespace

FaceTable::FaceTable(int dim, std::vector<VertexLabel> flat) : dim_(dim), flat_(std::move(flat)) {
  if (dim_ < 0) throw std::invalid_argument("FaceTable(dim, flat) needs dim >= 0");
  if (flat_.size() % stride() != 0) throw std::invalid_argument("FaceTable: ragged storage");
}

std::size_t FaceTable::size() const { return dim_ < 0 ? empty_count_ : flat_.size() / stride(); }

std::optional<std::size_t> FaceTable::find(std::span<const VertexLabel> s) const {
  if (s.size() != stride()) return std::nullopt;
  if (dim_ < 0) return empty_count_ ? std::optional<std::size_t>(0) : std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (span_less((*this)[mid], s))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(s.begin(), s.end(), (*this)[lo].begin())) return lo;
  return std::nullopt;
}

void FaceTable::append(std::span<const VertexLabel> s) {
  if (s.size() != stride()) throw std::invalid_argument("FaceTable::append: wrong simplex size");
  if (dim_ < 0) {
    empty_count_ = 1;
    return;
  }
  flat_.insert(flat_.end(), s.begin(), s.end());
}

Complex::Complex(std::string name, std::vector<FaceTable> tables) : name_(std::move(name)), tables_(std::move(tables)) {
  if (tables_.empty()) tables_.emplace_back(-1);
  tables_[0] = FaceTable(-1);
  tables_[0].append({});
  while (tables_.size() > 1 && tables_.back().size() == 0) tables_.pop_back();
  for (std::size_t k = 1; k < tables_.size(); ++k)
    if (tables_[k].dim() != static_cast<int>(k) - 1) throw std::invalid_argument("Complex: table dimension mismatch");
}

std::size_t Complex::num_faces(int k) const {
  if (k < -1 || k > dim()) return 0;
  return tables_[static_cast<std::size_t>(k + 1)].size();
}

const FaceTable& Complex::faces(int k) const {
  static const std::vector<FaceTable> kEmpty = [] {
    std::vector<FaceTable> v;
    for (int d = 0; d < 64; ++d) v.emplace_back(d);
    return v;
  }();
  if (k >= -1 && k <= dim()) return tables_[static_cast<std::size_t>(k + 1)];
  if (k >= 0 && k < 64) return kEmpty[static_cast<std::size_t>(k)];
  throw std::out_of_range("Complex::faces: dimension out of range");
}

std::vector<VertexLabel> Complex::vertices() const {
  if (dim() < 0) return {};
  return tables_[1].flat();
}

std::vector<std::size_t> Complex::face_counts() const {
  std::vector<std::size_t> out;
  for (const auto& t : tables_) out.push_back(t.size());
  return out;
}

std::optional<std::size_t> Complex::index_of(const Simplex& s) const {
  int k = static_cast<int>(s.size()) - 1;
  if (k > dim()) return std::nullopt;
  return tables_[static_cast<std::size_t>(k + 1)].find(s);
}

bool Complex::contains(const Simplex& s) const { return index_of(s).has_value(); }

SparseIntMatrix Complex::boundary_matrix(int k) const {
  SparseIntMatrix m(num_faces(k - 1), num_faces(k));
  if (k < 0 || k > dim()) return m;
  const auto& top = faces(k);
  const auto& low = faces(k - 1);
  std::vector<VertexLabel> face(static_cast<std::size_t>(k));
  const BigInt plus = 1, minus = -1;
  for (std::size_t j = 0; j < top.size(); ++j) {
    auto s = top[j];
    for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i) {
      std::size_t w = 0;
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != i) face[w++] = s[t];
      auto r = low.find(face);
      if (!r) throw std::logic_error("complex not downward closed");
      m.push(static_cast<std::uint32_t>(*r), static_cast<std::uint32_t>(j), (i % 2 == 0) ? plus : minus);
    }
  }
  return m;
}

std::vector<std::pair<std::size_t, BigInt>> Complex::coordinates(const Chain& c) const {
  std::vector<std::pair<std::size_t, BigInt>> out;
  out.reserve(c.size());
  for (const auto& [s, coeff] : c.terms()) {
    auto idx = index_of(s);
    if (!idx) throw std::invalid_argument("simplex " + simplex_to_string(s) + " is not a face of " + name_);
    out.emplace_back(*idx, coeff);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Chain Complex::chain_from_coordinates(int k, std::span<const std::pair<std::size_t, BigInt>> xs) const {
  Chain c(k);
  const auto& t = faces(k);
  for (const auto& [i, v] : xs) {
    auto s = t[i];
    c.add(Simplex(s.begin(), s.end()), v);
  }
  return c;
}

std::vector<Simplex> Complex::facets() const {
  std::vector<Simplex> out;
  std::vector<char> covered;
  std::vector<VertexLabel> face;
  for (int k = dim(); k >= -1; --k) {
    std::vector<char> next(num_faces(k - 1), 0);
    const auto& t = faces(k);
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto s = t[i];
      if (covered.empty() || !covered[i]) out.emplace_back(s.begin(), s.end());
      if (k < 0) continue;
      for (std::size_t d = 0; d < s.size(); ++d) {
        face.clear();
        for (std::size_t q = 0; q < s.size(); ++q)
          if (q != d) face.push_back(s[q]);
        next[*faces(k - 1).find(face)] = 1;
      }
    }
    covered = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  return out;
}

Chain coboundary(const Chain& c, const Complex& ambient) {
  Chain out(c.degree() + 1);
  auto verts = ambient.vertices();
  Simplex up;
  for (const auto& [s, coeff] : c.terms()) {
    if (!ambient.contains(s))
      throw std::invalid_argument("coboundary: " + simplex_to_string(s) + " is not a face of " + ambient.name());
    for (auto v : verts) {
      auto pos = std::lower_bound(s.begin(), s.end(), v);
      if (pos != s.end() && *pos == v) continue;
      up.assign(s.begin(), pos);
      up.push_back(v);
      up.insert(up.end(), pos, s.end());
      if (!ambient.contains(up)) continue;
      // s is up with vertex at position i removed; incidence (-1)^i
      auto i = static_cast<std::size_t>(pos - s.begin());
      out.add(up, (i % 2 == 0) ? coeff : BigInt(-coeff));
    }
  }
  return out;
}

Complex skeleton(const Complex& c, int d) {
  if (d < -1) throw std::invalid_argument("skeleton dimension must be >= -1");
  std::vector<FaceTable> tables;
  tables.emplace_back(-1);
  for (int k = 0; k <= std::min(d, c.dim()); ++k) tables.push_back(c.faces(k));
  return Complex(c.name() + " (" + std::to_string(d) + "-skeleton)", std::move(tables));
}

Complex matching_complex_of_edges(std::string name, std::vector<VertexLabel> edges, int max_dim) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Mask> masks;
  for (auto e : edges) masks.push_back(bit(e.lo()) | bit(e.hi()));

  std::vector<FaceTable> tables;
  tables.emplace_back(-1);
  std::vector<VertexLabel> current;
  const int limit = max_dim < -1 ? static_cast<int>(edges.size()) : max_dim;

  // depth-first extension in label order yields each dimension in lex order
  auto rec = [&](auto&& self, std::size_t start, Mask used) -> void {
    for (std::size_t e = start; e < edges.size(); ++e) {
      if (used & masks[e]) continue;
      current.push_back(edges[e]);
      int k = static_cast<int>(current.size()) - 1;
      if (static_cast<int>(tables.size()) <= k + 1) tables.emplace_back(k);
      tables[static_cast<std::size_t>(k + 1)].append(current);
      if (k < limit) self(self, e + 1, used | masks[e]);
      current.pop_back();
    }
  };
  if (limit >= 0) rec(rec, 0, 0);
  return Complex(std::move(name), std::move(tables));
}

}  // namespace matchcx
