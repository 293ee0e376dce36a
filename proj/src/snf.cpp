#include "matchcx/snf.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "matchcx/errors.hpp"

namespace matchcx {

namespace {

struct Overflow {};

struct Int64Ring {
  using T = std::int64_t;
  static constexpr T kLimit = T(1) << 62;

  static void check(T x) {
    if (x > kLimit || x < -kLimit) throw Overflow{};
  }
  T from(const BigInt& v) const {
    if (!v.fits_slong_p()) throw Overflow{};
    T x = v.get_si();
    check(x);
    return x;
  }
  BigInt to_big(T a) const { return BigInt(static_cast<long>(a)); }
  bool is_unit(T a) const { return a == 1 || a == -1; }
  bool abs_less(T a, T b) const { return (a < 0 ? -a : a) < (b < 0 ? -b : b); }
  bool divides(T p, T a) const { return a % p == 0; }
  T quot(T a, T p) const { return a / p; }
  T sub_mul(T a, T f, T b) const {
    T prod, r;
    if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &r)) throw Overflow{};
    check(r);
    return r;
  }
};

struct BigRing {
  using T = BigInt;
  T from(const BigInt& v) const { return v; }
  BigInt to_big(const T& a) const { return a; }
  bool is_unit(const T& a) const { return a == 1 || a == -1; }
  bool abs_less(const T& a, const T& b) const { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  bool divides(const T& p, const T& a) const { return mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) != 0; }
  T quot(const T& a, const T& p) const {
    T q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return q;
  }
  T sub_mul(const T& a, const T& f, const T& b) const { return T(a - f * b); }
};

struct ModRing {
  using T = std::uint32_t;
  std::uint32_t p;

  T from(const BigInt& v) const {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return static_cast<T>(r.get_ui());
  }
  BigInt to_big(T a) const { return BigInt(static_cast<unsigned long>(a)); }
  bool is_unit(T a) const { return a != 0; }
  bool abs_less(T a, T b) const { return a < b; }
  bool divides(T, T) const { return true; }
  T inv(T a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<T>(r);
  }
  T quot(T a, T q) const { return static_cast<T>(std::uint64_t(a) * inv(q) % p); }
  T sub_mul(T a, T f, T b) const {
    std::uint64_t prod = std::uint64_t(f) * b % p;
    return static_cast<T>((a + p - prod) % p);
  }
};

template <class T>
bool is_zero_value(const T& v) {
  return v == 0;
}

template <class Ring>
class Eliminator {
 public:
  using T = typename Ring::T;
  struct Entry {
    std::uint32_t col;
    T val;
  };

  Eliminator(const Ring& ring, const SparseIntMatrix& m, bool transpose, const SnfOptions& opts)
      : ring_(ring), opts_(opts) {
    std::size_t nr = transpose ? m.cols() : m.rows();
    std::size_t nc = transpose ? m.rows() : m.cols();
    rows_.resize(nr);
    col_rows_.resize(nc);
    col_count_.assign(nc, 0);
    stamp_.assign(nr, 0);
    for (const auto& e : m.entries()) {
      auto r = transpose ? e.col : e.row;
      auto c = transpose ? e.row : e.col;
      T v = ring_.from(e.value);
      if (is_zero_value(v)) continue;
      rows_[r].push_back({c, std::move(v)});
    }
    for (std::uint32_t r = 0; r < nr; ++r) {
      auto& row = rows_[r];
      std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
      for (std::size_t i = 1; i < row.size(); ++i)
        if (row[i].col == row[i - 1].col) throw std::invalid_argument("duplicate matrix coordinate");
      for (const auto& e : row) {
        col_rows_[e.col].push_back(r);
        ++col_count_[e.col];
      }
      if (!row.empty()) queue_.push({row.size(), r});
    }
    for (std::uint32_t c = 0; c < nc; ++c)
      if (col_count_[c]) col_queue_.push({col_count_[c], c});
  }

  std::size_t unit_pivots = 0;
  std::vector<T> divisor_values;

  // Eliminates unit pivots until none remain. Each step samples the shortest
  // rows and sparsest columns and takes the least Markowitz cost.
  void run_units() {
    constexpr int kCandidates = 3;
    std::vector<std::uint32_t> rows, cols;
    for (;;) {
      rows.clear();
      cols.clear();
      while (rows.size() < kCandidates && !queue_.empty()) {
        auto [len, r] = queue_.top();
        queue_.pop();
        const auto& row = rows_[r];
        if (row.empty() || row.size() != len) continue;
        if (std::none_of(row.begin(), row.end(), [&](const Entry& e) { return ring_.is_unit(e.val); })) continue;
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(r);
      }
      while (cols.size() < kCandidates && !col_queue_.empty()) {
        auto [cnt, c] = col_queue_.top();
        col_queue_.pop();
        if (col_count_[c] == 0) continue;
        if (col_count_[c] != cnt) {
          col_queue_.push({col_count_[c], c});
          continue;
        }
        if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
      }
      if (rows.empty()) break;

      std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
      std::uint32_t br = 0, bc = 0;
      auto consider = [&](std::uint32_t r, std::uint32_t c) {
        std::uint64_t cost = std::uint64_t(rows_[r].size() - 1) * (col_count_[c] - 1);
        if (cost < best_cost || (cost == best_cost && std::pair(r, c) < std::pair(br, bc))) {
          best_cost = cost;
          br = r;
          bc = c;
        }
      };
      for (auto r : rows)
        for (const auto& e : rows_[r])
          if (ring_.is_unit(e.val)) consider(r, e.col);
      for (auto c : cols) {
        ++epoch_;
        for (auto s : col_rows_[c]) {
          if (stamp_[s] == epoch_) continue;
          stamp_[s] = epoch_;
          const auto* e = find(s, c);
          if (e && ring_.is_unit(e->val)) consider(s, c);
        }
      }
      for (auto r : rows)
        if (r != br) queue_.push({rows_[r].size(), r});
      for (auto c : cols)
        if (c != bc) col_queue_.push({col_count_[c], c});
      const auto& prow = rows_[br];
      auto it = std::lower_bound(prow.begin(), prow.end(), bc, [](const Entry& e, std::uint32_t x) { return e.col < x; });
      eliminate(br, static_cast<std::size_t>(it - prow.begin()));
      ++unit_pivots;
      if ((unit_pivots & 1023) == 0) {
        check_deadline();
      }
    }
  }

  // One sweep of pivots that divide their whole row and column.
  bool run_divisors() {
    bool any = false;
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      auto& row = rows_[r];
      if (row.empty()) continue;
      std::size_t best = 0;
      for (std::size_t i = 1; i < row.size(); ++i)
        if (ring_.abs_less(row[i].val, row[best].val)) best = i;
      const T p = row[best].val;
      bool ok = true;
      for (const auto& e : row)
        if (!ring_.divides(p, e.val)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      ++epoch_;
      for (auto s : col_rows_[row[best].col]) {
        if (stamp_[s] == epoch_ || s == r) continue;
        stamp_[s] = epoch_;
        const auto* e = find(s, row[best].col);
        if (e && !ring_.divides(p, e->val)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      bool unit = ring_.is_unit(p);
      T pv = p;
      eliminate(r, best);
      if (unit)
        ++unit_pivots;
      else
        divisor_values.push_back(pv);
      any = true;
      check_deadline();
    }
    return any;
  }

  std::size_t live_rows() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += !r.empty();
    return n;
  }

  // Remaining nonzero block as a dense matrix.
  std::vector<std::vector<T>> residual(std::size_t& out_cols) const {
    std::vector<std::uint32_t> cols;
    for (std::uint32_t c = 0; c < col_count_.size(); ++c)
      if (col_count_[c] > 0) cols.push_back(c);
    out_cols = cols.size();
    std::vector<std::vector<T>> dense;
    for (const auto& row : rows_) {
      if (row.empty()) continue;
      std::vector<T> d(cols.size(), T(0));
      for (const auto& e : row) {
        auto it = std::lower_bound(cols.begin(), cols.end(), e.col);
        d[static_cast<std::size_t>(it - cols.begin())] = e.val;
      }
      dense.push_back(std::move(d));
    }
    return dense;
  }

  std::size_t residual_cols() const {
    std::size_t n = 0;
    for (auto c : col_count_) n += c > 0;
    return n;
  }

 private:
  const Entry* find(std::uint32_t r, std::uint32_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t x) { return e.col < x; });
    return (it != row.end() && it->col == c) ? &*it : nullptr;
  }

  void check_deadline() const {
    if (opts_.deadline && std::chrono::steady_clock::now() > *opts_.deadline)
      throw ScaleGuardError("time budget exceeded during sparse elimination (" + std::to_string(unit_pivots) +
                            " unit pivots done, " + std::to_string(live_rows()) + " rows left)");
  }

  // Clears column c of every other row using pivot row r, then drops r.
  void eliminate(std::uint32_t r, std::size_t pivot_index) {
    const std::uint32_t c = rows_[r][pivot_index].col;
    const T p = rows_[r][pivot_index].val;
    pivot_col_ = c;
    ++epoch_;
    stamp_[r] = epoch_;
    auto targets = std::move(col_rows_[c]);
    col_rows_[c].clear();
    for (auto s : targets) {
      if (stamp_[s] == epoch_) continue;
      stamp_[s] = epoch_;
      const auto* e = find(s, c);
      if (!e) continue;
      T f = ring_.quot(e->val, p);
      merge(s, r, f);
      queue_.push({rows_[s].size(), s});
    }
    for (const auto& e : rows_[r])
      if (--col_count_[e.col] > 0) col_queue_.push({col_count_[e.col], e.col});
    rows_[r].clear();
    rows_[r].shrink_to_fit();
  }

  // rows_[s] -= f * rows_[r]
  void merge(std::uint32_t s, std::uint32_t r, const T& f) {
    auto& a = rows_[s];
    const auto& b = rows_[r];
    scratch_.clear();
    scratch_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
        scratch_.push_back(std::move(a[i++]));
      } else if (i == a.size() || b[j].col < a[i].col) {
        T v = ring_.sub_mul(T(0), f, b[j].val);
        ++col_count_[b[j].col];
        col_rows_[b[j].col].push_back(s);
        scratch_.push_back({b[j].col, std::move(v)});
        ++j;
      } else {
        T v = ring_.sub_mul(a[i].val, f, b[j].val);
        if (is_zero_value(v)) {
          if (--col_count_[a[i].col] > 0 && a[i].col != pivot_col_) col_queue_.push({col_count_[a[i].col], a[i].col});
        }
        else
          scratch_.push_back({a[i].col, std::move(v)});
        ++i;
        ++j;
      }
    }
    a.swap(scratch_);
  }

  Ring ring_;
  const SnfOptions& opts_;
  std::vector<std::vector<Entry>> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint32_t> col_count_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::uint32_t pivot_col_ = 0;
  std::vector<Entry> scratch_;
  using Item = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue_;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> col_queue_;
};

using Dense = std::vector<std::vector<BigInt>>;

void check_dense_deadline(const SnfOptions& opts, const char* phase, std::size_t step, std::size_t total) {
  if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
    throw ScaleGuardError(std::string("time budget exceeded during ") + phase + " at step " + std::to_string(step) +
                          " of " + std::to_string(total));
}

// Fraction-free elimination: returns the rank and the absolute value of a
// nonzero minor of that size (1 for rank 0).
std::pair<std::size_t, BigInt> bareiss_rank(Dense a, std::size_t cols, const SnfOptions& opts) {
  const std::size_t rows = a.size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    check_dense_deadline(opts, "rank computation", c, cols);
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][c] != 0 && (piv == rows || mpz_sizeinbase(a[i][c].get_mpz_t(), 2) < mpz_sizeinbase(a[piv][c].get_mpz_t(), 2)))
        piv = i;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const BigInt p = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = p * a[i][j] - f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = p;
    ++r;
  }
  return {r, abs(prev)};
}

BigInt mod_pos(const BigInt& x, const BigInt& d) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return r;
}

// Invariant factors of the full-rank lattice spanned by the rows of a and by
// d*Z^cols, computed with every entry reduced mod d.
std::vector<BigInt> snf_mod_d(Dense a, std::size_t cols, const BigInt& d, const SnfOptions& opts) {
  for (auto& row : a)
    for (auto& x : row) x = mod_pos(x, d);
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < cols; ++t) {
    check_dense_deadline(opts, "modular diagonalization", t, cols);
    std::vector<BigInt> extra(cols, BigInt(0));
    extra[t] = d;
    a.push_back(std::move(extra));
    const std::size_t rows = a.size();
    for (;;) {
      // smallest nonzero entry of column t and row t
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        if (a[i][t] != 0 && (pi == rows || a[i][t] < a[pi][t])) pi = i;
      if (pi == rows) break;
      std::swap(a[t], a[pi]);
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j)
          if (a[t][j] != 0) a[i][j] = mod_pos(a[i][j] - q * a[t][j], d);
        if (a[i][t] != 0) dirty = true;
      }
      if (dirty) continue;
      bool row_dirty = false;
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i)
          if (a[i][t] != 0) a[i][j] = mod_pos(a[i][j] - q * a[i][t], d);
        if (a[t][j] != 0) row_dirty = true;
      }
      if (!row_dirty) break;
      // move the smallest leftover of row t into the pivot column and retry
      pj = cols;
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0 && (pj == cols || a[t][j] < a[t][pj])) pj = j;
      for (auto& row : a) std::swap(row[t], row[pj]);
    }
    diag.push_back(a[t][t] == 0 ? d : BigInt(gcd(a[t][t], d)));
    // rows below t now vanish in column t; drop zero rows to keep the block small
    std::vector<std::vector<BigInt>> keep;
    keep.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i > t && std::all_of(a[i].begin() + static_cast<std::ptrdiff_t>(t), a[i].end(), [](const BigInt& x) { return x == 0; }))
        continue;
      keep.push_back(std::move(a[i]));
    }
    a = std::move(keep);
  }
  return diag;
}

// Nonzero invariant factors of a dense integer block.
std::vector<BigInt> dense_factors(Dense a, std::size_t cols, const SnfOptions& opts) {
  auto [r, minor] = bareiss_rank(a, cols, opts);
  if (r == 0) return {};
  auto diag = normalize_invariant_factors(snf_mod_d(std::move(a), cols, minor, opts));
  // diag lists the factors > 1 of the mod-d lattice: d_1..d_r then cols - r copies of d
  std::vector<BigInt> out(r, BigInt(1));
  std::size_t ones = cols - diag.size();
  if (ones < r) {
    std::copy(diag.begin(), diag.begin() + static_cast<std::ptrdiff_t>(r - ones), out.begin() + static_cast<std::ptrdiff_t>(ones));
  }
  return out;
}

template <class Ring>
SnfResult run_exact(const Ring& ring, const SparseIntMatrix& m, const SnfOptions& opts, SnfStats stats) {
  bool transpose = m.cols() > m.rows();
  Eliminator<Ring> el(ring, m, transpose, opts);
  do {
    el.run_units();
  } while (el.run_divisors());
  std::size_t rcols = el.residual_cols();
  std::size_t rrows = el.live_rows();
  stats.unit_pivots = el.unit_pivots;
  stats.divisor_pivots = el.divisor_values.size();
  stats.residual_rows = rrows;
  stats.residual_cols = rcols;
  if (rrows * rcols * 32 > opts.max_dense_bytes) {
    std::ostringstream msg;
    msg << "residual block " << rrows << "x" << rcols << " after " << el.unit_pivots << " unit pivots needs about "
        << (rrows * rcols * 32 >> 20) << " MiB, budget " << (opts.max_dense_bytes >> 20) << " MiB";
    throw ScaleGuardError(msg.str());
  }
  auto small = el.residual(rcols);
  Dense dense(small.size());
  for (std::size_t i = 0; i < small.size(); ++i) {
    dense[i].reserve(rcols);
    for (const auto& v : small[i]) dense[i].push_back(ring.to_big(v));
  }
  small.clear();
  stats.bigint_dense = !dense.empty();
  auto diag = dense_factors(std::move(dense), rcols, opts);
  std::size_t rank = el.unit_pivots + el.divisor_values.size() + diag.size();
  for (const auto& d : el.divisor_values) diag.push_back(abs(ring.to_big(d)));
  return SnfResult(rank, normalize_invariant_factors(std::move(diag)), std::move(stats));
}

}  // namespace

SnfResult::SnfResult(std::size_t rank, std::vector<BigInt> nontrivial, SnfStats stats)
    : rank_(rank), nontrivial_(std::move(nontrivial)), stats_(std::move(stats)) {
  if (nontrivial_.size() > rank_) throw std::logic_error("more torsion factors than rank");
}

std::vector<BigInt> SnfResult::invariant_factors() const {
  std::vector<BigInt> out(rank_ - nontrivial_.size(), BigInt(1));
  out.insert(out.end(), nontrivial_.begin(), nontrivial_.end());
  return out;
}

BigInt SnfResult::determinant_product() const {
  BigInt p = 1;
  for (const auto& d : nontrivial_) p *= d;
  return p;
}

std::vector<BigInt> normalize_invariant_factors(std::vector<BigInt> ds) {
  std::erase_if(ds, [](const BigInt& d) { return d == 1 || d == -1; });
  for (auto& d : ds) {
    d = abs(d);
    if (d == 0) throw std::invalid_argument("zero in invariant factor list");
  }
  std::sort(ds.begin(), ds.end());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      BigInt g = gcd(ds[i], ds[j]);
      if (g == ds[i]) continue;
      BigInt l = ds[i] / g * ds[j];
      ds[i] = g;
      ds[j] = l;
    }
  }
  std::erase_if(ds, [](const BigInt& d) { return d == 1; });
  std::sort(ds.begin(), ds.end());
  return ds;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw std::invalid_argument("rank_mod_p needs a prime below 2^31, got " + std::to_string(p));
  SnfOptions opts;
  Eliminator<ModRing> el(ModRing{p}, m, m.cols() > m.rows(), opts);
  el.run_units();
  return el.unit_pivots;
}

SnfResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opts) {
  SnfStats stats;
  if (opts.modular_prepass) {
    for (std::uint32_t p : {2147483629u, 2147483587u}) stats.modular_ranks.emplace_back(p, rank_mod_p(m, p));
  }
  try {
    return run_exact(Int64Ring{}, m, opts, stats);
  } catch (const Overflow&) {
    stats.bigint_sparse = true;
    return run_exact(BigRing{}, m, opts, stats);
  }
}

}  // namespace matchcx
