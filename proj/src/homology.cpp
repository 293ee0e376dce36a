#include "matchcx/homology.hpp"

#include <future>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace matchcx {

std::string HomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (betti == 1) parts.push_back("Z");
  if (betti > 1) parts.push_back("Z^" + std::to_string(betti));
  std::map<BigInt, std::size_t> counts;
  for (const auto& d : torsion) ++counts[d];
  for (const auto& [d, n] : counts) parts.push_back("Z_" + d.get_str() + (n > 1 ? "^" + std::to_string(n) : ""));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

HomologyGroup HomologyGroup::parse(const std::string& s) {
  HomologyGroup g;
  if (s == "0") return g;
  static const std::regex term(R"(\s*Z(?:_(\d+))?(?:\^(\d+))?\s*)");
  std::stringstream ss(s);
  std::string part;
  std::vector<BigInt> tors;
  while (std::getline(ss, part, '+')) {
    std::smatch m;
    if (!std::regex_match(part, m, term)) throw std::invalid_argument("cannot parse group term '" + part + "'");
    std::size_t mult = m[2].matched ? std::stoul(m[2].str()) : 1;
    if (m[1].matched) {
      for (std::size_t i = 0; i < mult; ++i) tors.emplace_back(m[1].str());
    } else {
      g.betti += mult;
    }
  }
  g.torsion = normalize_invariant_factors(std::move(tors));
  return g;
}

HomologyRun homology_run(const Complex& c, int k, const HomologyOptions& opts) {
  if (k < -1) throw std::invalid_argument("homology degree must be >= -1");
  HomologyRun run;
  run.faces_k = c.num_faces(k);
  auto rank_in_task = [&] {
    if (k < 0 || run.faces_k == 0) return SnfResult();
    return smith_normal_form(c.boundary_matrix(k), opts.snf);
  };
  auto out_task = [&] {
    if (c.num_faces(k + 1) == 0) return SnfResult();
    return smith_normal_form(c.boundary_matrix(k + 1), opts.snf);
  };
  SnfResult in, out;
  if (opts.threads > 1) {
    auto fut = std::async(std::launch::async, rank_in_task);
    out = out_task();
    in = fut.get();
  } else {
    in = rank_in_task();
    out = out_task();
  }
  run.rank_in = in.rank();
  run.rank_out = out.rank();
  run.stats_in = in.stats();
  run.stats_out = out.stats();
  run.group.betti = run.faces_k - run.rank_in - run.rank_out;
  run.group.torsion = out.nontrivial();
  return run;
}

HomologyGroup homology(const Complex& c, int k, const HomologyOptions& opts) { return homology_run(c, k, opts).group; }

std::size_t betti_mod_p(const Complex& c, int k, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("betti_mod_p: " + std::to_string(p) + " is not prime");
  std::size_t f = c.num_faces(k);
  if (f == 0) return 0;
  std::size_t r_in = k >= 0 ? rank_mod_p(c.boundary_matrix(k), p) : 0;
  std::size_t r_out = rank_mod_p(c.boundary_matrix(k + 1), p);
  return f - r_in - r_out;
}

bool is_cycle(const Chain& z) { return boundary(z).is_zero(); }

SparseIntMatrix chain_columns(std::span<const Chain> zs, int degree, const Complex& c) {
  SparseIntMatrix m(c.num_faces(degree), zs.size());
  for (std::size_t j = 0; j < zs.size(); ++j) {
    if (zs[j].degree() != degree && !zs[j].is_zero()) throw std::invalid_argument("chain_columns: degree mismatch");
    for (const auto& [i, v] : c.coordinates(zs[j]))
      m.push(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), v);
  }
  return m;
}

SparseIntMatrix chain_column(const Chain& z, const Complex& c) { return chain_columns({&z, 1}, z.degree(), c); }

BigInt torsion_order(const Chain& z, const Complex& c, const SnfOptions& opts) {
  if (!is_cycle(z)) throw std::invalid_argument("torsion_order: chain is not a cycle");
  auto col = chain_column(z, c);
  if (z.is_zero()) return 1;
  auto b = c.boundary_matrix(z.degree() + 1);
  auto base = smith_normal_form(b, opts);
  b.append_columns(col);
  auto aug = smith_normal_form(b, opts);
  if (aug.rank() > base.rank()) return 0;
  // [L + Zz : L] = prod(d(L)) / prod(d(L + Zz)) when ranks agree
  return base.determinant_product() / aug.determinant_product();
}

bool is_boundary(const Chain& z, const Complex& c, const SnfOptions& opts) {
  if (z.is_zero()) return true;
  if (!is_cycle(z)) {
    chain_column(z, c);  // still reject chains outside c
    return false;
  }
  return torsion_order(z, c, opts) == 1;
}

SpanReport span_check(const Complex& c, int k, std::span<const Chain> family, const SnfOptions& opts) {
  for (const auto& z : family)
    if (!is_cycle(z)) throw std::invalid_argument("span_check: family member is not a cycle");
  SpanReport r;
  auto dk = c.boundary_matrix(k);
  std::size_t rank_dk = k >= 0 ? smith_normal_form(dk, opts).rank() : 0;
  r.cycle_rank = c.num_faces(k) - rank_dk;
  r.cycle_rank_mod3 = c.num_faces(k) - (k >= 0 ? rank_mod_p(dk, 3) : 0);
  auto m = c.boundary_matrix(k + 1);
  m.append_columns(chain_columns(family, k, c));
  auto snf = smith_normal_form(m, opts);
  r.spanned_rank = snf.rank();
  r.index_factors = snf.nontrivial();
  r.rank_mod3 = rank_mod_p(m, 3);
  return r;
}

}  // namespace matchcx
