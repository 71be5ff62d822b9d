#include "dkl/klpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "dkl/badlib.hpp"

namespace dkl {

const char* to_string(MuBoundVerdict v) {
  switch (v) {
    case MuBoundVerdict::MuForcedZero: return "MuForcedZero";
    case MuBoundVerdict::ParityZero: return "ParityZero";
    case MuBoundVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

KLContext::KLContext(const CoxeterSystem& sys, KLOptions opts)
    : tbl_(GroupTable::enumerate(sys, opts.max_elements)), opts_(opts) {}

IntPolynomial KLContext::kl_poly(uint32_t x, uint32_t w) const {
  return kl_rec(x, w);
}

IntPolynomial KLContext::kl_poly(const SignedPermutation& x,
                                 const SignedPermutation& w) const {
  return kl_rec(tbl_.index_of(x), tbl_.index_of(w));
}

IntPolynomial KLContext::kl_rec(uint32_t x, uint32_t w) const {
  // Normalize x upward: P_{x,w} = P_{sx,w} whenever sw < w < sx-side, so the
  // memo only sees pairs with L(w) contained in L(x).
  while (true) {
    uint32_t need = tbl_.ldesc(w).bits & ~tbl_.ldesc(x).bits;
    if (!need) break;
    x = tbl_.lmult(x, __builtin_ctz(need) + 1);
  }
  if (x == w) return IntPolynomial(1);
  const int lx = tbl_.length(x), lw = tbl_.length(w);
  if (lx >= lw) return {};
  if (!tbl_.bruhat_leq(x, w)) return {};
  const int d = lw - lx;
  if (d <= 2) return IntPolynomial(1);

  const uint64_t key = (static_cast<uint64_t>(x) << 32) | w;
  const size_t shard = (key * 0x9e3779b97f4a7c15ull >> 32) % kShards;
  {
    std::lock_guard<std::mutex> lk(pmx_[shard]);
    auto it = pmemo_[shard].find(key);
    if (it != pmemo_[shard].end()) return it->second;
  }

  const int s = tbl_.ldesc(w).min();
  const uint32_t sw = tbl_.lmult(w, s);
  const uint32_t sx = tbl_.lmult(x, s);
  IntPolynomial p = kl_rec(sx, sw) + kl_rec(x, sw).shifted(1);
  for (const auto& [z, m] : mu_set(sw)) {
    if (!tbl_.ldesc(z).contains(s)) continue;
    if (!tbl_.bruhat_leq(x, z)) continue;
    p -= kl_rec(x, z).scaled(m).shifted((lw - tbl_.length(z)) / 2);
  }

  if (pmemo_count_.load(std::memory_order_relaxed) >= opts_.max_memo)
    throw ResourceLimitError("KL memo exceeds ceiling (" +
                             std::to_string(opts_.max_memo) + " entries)");
  {
    std::lock_guard<std::mutex> lk(pmx_[shard]);
    if (pmemo_[shard].emplace(key, p).second)
      pmemo_count_.fetch_add(1, std::memory_order_relaxed);
  }
  return p;
}

long long KLContext::mu(uint32_t x, uint32_t w) const {
  const int d = tbl_.length(w) - tbl_.length(x);
  if (d <= 0 || d % 2 == 0) return 0;
  return kl_rec(x, w).coeff((d - 1) / 2);
}

long long KLContext::mu(const SignedPermutation& x, const SignedPermutation& w) const {
  return mu(tbl_.index_of(x), tbl_.index_of(w));
}

std::vector<std::pair<uint32_t, long long>> KLContext::compute_mu_set(
    uint32_t w) const {
  std::vector<std::pair<uint32_t, long long>> out;
  for (uint32_t z : tbl_.coatoms(w)) out.emplace_back(z, 1);
  const int lw = tbl_.length(w);
  if (lw >= 3) {
    // For a length gap of 3 or more, mu(z,w) != 0 forces the descent sets of
    // w into those of z on both sides.
    const uint32_t lmask = tbl_.ldesc(w).bits, rmask = tbl_.rdesc(w).bits;
    const uint32_t n = tbl_.size();
    for (uint32_t z = 0; z < n; ++z) {
      const int d = lw - tbl_.length(z);
      if (d < 3 || d % 2 == 0) continue;
      if (lmask & ~tbl_.ldesc(z).bits) continue;
      if (rmask & ~tbl_.rdesc(z).bits) continue;
      if (!tbl_.bruhat_leq(z, w)) continue;
      long long c = kl_rec(z, w).coeff((d - 1) / 2);
      if (c != 0) out.emplace_back(z, c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::pair<uint32_t, long long>>& KLContext::mu_set(
    uint32_t w) const {
  const size_t shard = w % kShards;
  {
    std::lock_guard<std::mutex> lk(mumx_[shard]);
    auto it = mumemo_[shard].find(w);
    if (it != mumemo_[shard].end() && it->second) return *it->second;
  }
  auto computed = std::make_unique<std::vector<std::pair<uint32_t, long long>>>(
      compute_mu_set(w));
  std::lock_guard<std::mutex> lk(mumx_[shard]);
  auto [it, fresh] = mumemo_[shard].emplace(w, nullptr);
  if (fresh || !it->second) it->second = std::move(computed);
  return *it->second;
}

IntPolynomial KLContext::inverse_kl(uint32_t x, uint32_t w) const {
  if (!tbl_.bruhat_leq(x, w))
    throw std::invalid_argument("inverse_kl needs x <= w in Bruhat order");
  // Triangular solve over the interval [x,w], by length from x upward.
  std::vector<uint32_t> interval;
  const int lx = tbl_.length(x), lw = tbl_.length(w);
  for (uint32_t z = 0; z < tbl_.size(); ++z) {
    const int lz = tbl_.length(z);
    if (lz < lx || lz > lw) continue;
    if (tbl_.bruhat_leq(x, z) && tbl_.bruhat_leq(z, w)) interval.push_back(z);
  }
  std::sort(interval.begin(), interval.end(), [&](uint32_t a, uint32_t b) {
    return tbl_.length(a) < tbl_.length(b);
  });
  std::unordered_map<uint32_t, IntPolynomial> q;
  for (uint32_t z : interval) {
    if (z == x) {
      q[z] = IntPolynomial(1);
      continue;
    }
    IntPolynomial sum;
    for (uint32_t t : interval) {
      if (tbl_.length(t) >= tbl_.length(z)) break;
      auto it = q.find(t);
      if (it == q.end() || !tbl_.bruhat_leq(t, z)) continue;
      IntPolynomial term = it->second * kl_rec(t, z);
      if ((tbl_.length(t) - lx) % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    // (-1)^{l(z)-l(x)} Q_{x,z} = -sum
    q[z] = ((tbl_.length(z) - lx) % 2 == 0) ? (IntPolynomial() - sum) : sum;
  }
  return q.at(w);
}

HeckeElement KLContext::c_basis(uint32_t w) const {
  HeckeElement out;
  const int lw = tbl_.length(w);
  for (uint32_t z = 0; z < tbl_.size(); ++z) {
    if (tbl_.length(z) > lw) continue;
    if (!tbl_.bruhat_leq(z, w)) continue;
    IntPolynomial p = kl_rec(z, w);
    if (p.is_zero()) continue;
    const int lz = tbl_.length(z);
    HalfLaurent c = HalfLaurent::from_q_poly(p, -1, lw - 2 * lz);
    if ((lw + lz) % 2 != 0) c = c.scaled(-1);
    out.add(z, c);
  }
  return out;
}

std::vector<std::pair<uint32_t, uint32_t>> KLContext::mu_graph_edges(
    const std::vector<uint32_t>& elements, bool right, int threads) const {
  std::vector<char> member(tbl_.size(), 0);
  for (uint32_t e : elements) member[e] = 1;
  auto scan = [&](size_t begin, size_t end,
                  std::vector<std::pair<uint32_t, uint32_t>>& edges) {
    for (size_t i = begin; i < end; ++i) {
      const uint32_t e = elements[i];
      const uint32_t w = right ? tbl_.inv(e) : e;
      for (const auto& [z, m] : mu_set(w)) {
        (void)m;
        const uint32_t zz = right ? tbl_.inv(z) : z;
        if (!member[zz]) continue;
        const uint32_t da = right ? tbl_.rdesc(zz).bits : tbl_.ldesc(zz).bits;
        const uint32_t db = right ? tbl_.rdesc(e).bits : tbl_.ldesc(e).bits;
        if (da & ~db) edges.emplace_back(zz, e);
        if (db & ~da) edges.emplace_back(e, zz);
      }
    }
  };
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  threads = std::max(1, threads);
  if (threads > 1 && elements.size() >= 256) {
    // Warm the mu memo one length layer at a time; a layer only needs
    // results from shorter elements, so its members are independent.
    std::vector<uint32_t> targets;
    targets.reserve(elements.size());
    for (uint32_t e : elements) targets.push_back(right ? tbl_.inv(e) : e);
    std::sort(targets.begin(), targets.end(), [&](uint32_t a, uint32_t b) {
      return tbl_.length(a) < tbl_.length(b);
    });
    for (size_t lo = 0; lo < targets.size();) {
      size_t hi = lo;
      while (hi < targets.size() &&
             tbl_.length(targets[hi]) == tbl_.length(targets[lo]))
        ++hi;
      if (hi - lo < 64) {
        for (size_t i = lo; i < hi; ++i) mu_set(targets[i]);
      } else {
        std::atomic<size_t> next(lo);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
          pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < hi; i = next.fetch_add(1))
              mu_set(targets[i]);
          });
        for (auto& th : pool) th.join();
      }
      lo = hi;
    }
  }
  scan(0, elements.size(), edges);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

namespace {

// Strongly connected components, iterative Kosaraju over local indices.
std::vector<std::vector<uint32_t>> scc_blocks(
    const std::vector<uint32_t>& elements,
    const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
  const size_t n = elements.size();
  std::unordered_map<uint32_t, uint32_t> local;
  local.reserve(n * 2);
  for (size_t i = 0; i < n; ++i) local[elements[i]] = static_cast<uint32_t>(i);
  std::vector<std::vector<uint32_t>> fwd(n), rev(n);
  for (const auto& [a, b] : edges) {
    uint32_t la = local.at(a), lb = local.at(b);
    fwd[la].push_back(lb);
    rev[lb].push_back(la);
  }
  std::vector<char> seen(n, 0);
  std::vector<uint32_t> order;
  order.reserve(n);
  std::vector<std::pair<uint32_t, size_t>> stack;
  for (uint32_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < fwd[v].size()) {
        uint32_t u = fwd[v][i++];
        if (!seen[u]) {
          seen[u] = 1;
          stack.emplace_back(u, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<std::vector<uint32_t>> blocks;
  std::vector<char> done(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (done[*it]) continue;
    std::vector<uint32_t> block;
    std::vector<uint32_t> dfs{*it};
    done[*it] = 1;
    while (!dfs.empty()) {
      uint32_t v = dfs.back();
      dfs.pop_back();
      block.push_back(elements[v]);
      for (uint32_t u : rev[v])
        if (!done[u]) {
          done[u] = 1;
          dfs.push_back(u);
        }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace

CellPartition KLContext::cells(CellKind kind, int threads) const {
  std::vector<uint32_t> all(tbl_.size());
  for (uint32_t i = 0; i < tbl_.size(); ++i) all[i] = i;
  return cells(kind, all, threads);
}

CellPartition KLContext::cells(CellKind kind, const std::vector<uint32_t>& elements,
                               int threads) const {
  if (elements.size() > opts_.cells_max_elements)
    throw ResourceLimitError("cells: element count exceeds ceiling (" +
                             std::to_string(opts_.cells_max_elements) + ")");
  CellPartition part;
  part.kind = kind;
  switch (kind) {
    case CellKind::Left:
      part.edges = mu_graph_edges(elements, false, threads);
      break;
    case CellKind::Right:
      part.edges = mu_graph_edges(elements, true, threads);
      break;
    case CellKind::TwoSided: {
      part.edges = mu_graph_edges(elements, false, threads);
      auto r = mu_graph_edges(elements, true, threads);
      part.edges.insert(part.edges.end(), r.begin(), r.end());
      break;
    }
  }
  part.blocks = scc_blocks(elements, part.edges);
  part.canonicalize();
  return part;
}

const std::vector<long long>& KLContext::a_values() const {
  std::lock_guard<std::mutex> lk(amx_);
  if (!avalues_.empty()) return avalues_;
  const uint32_t n = tbl_.size();
  if (n > opts_.a_value_max_elements)
    throw ResourceLimitError("a_values: group too large for brute force (" +
                             std::to_string(n) + " > " +
                             std::to_string(opts_.a_value_max_elements) + ")");

  std::vector<uint32_t> by_len(n);
  for (uint32_t i = 0; i < n; ++i) by_len[i] = i;
  std::sort(by_len.begin(), by_len.end(), [&](uint32_t a, uint32_t b) {
    return std::make_pair(tbl_.length(a), a) < std::make_pair(tbl_.length(b), b);
  });

  const HalfLaurent neg_v_pair =
      HalfLaurent::term(-1, 1) + HalfLaurent::term(-1, -1);
  std::vector<long long> amax(n, 0);
  using Row = std::unordered_map<uint32_t, HalfLaurent>;
  std::vector<Row> row(n);

  // C_x C_y expanded in the C-basis: rows built by length of x, using
  // C_s C_w = -(v + v^{-1}) C_w when sw < w, and otherwise
  // C_s C_w = C_{sw} + sum_{z: sz<z} mu(z,w) C_z.
  for (uint32_t y = 0; y < n; ++y) {
    for (auto& r : row) r.clear();
    row[tbl_.identity()][y] = HalfLaurent::term(1, 0);
    for (uint32_t x : by_len) {
      if (x == tbl_.identity()) continue;
      const int s = tbl_.ldesc(x).min();
      const uint32_t xh = tbl_.lmult(x, s);
      Row out;
      for (const auto& [w, g] : row[xh]) {
        if (tbl_.ldesc(w).contains(s)) {
          auto& slot = out[w];
          slot += g * neg_v_pair;
          if (slot.is_zero()) out.erase(w);
        } else {
          auto& up = out[tbl_.lmult(w, s)];
          up += g;
          if (up.is_zero()) out.erase(tbl_.lmult(w, s));
          for (const auto& [z, m] : mu_set(w)) {
            if (!tbl_.ldesc(z).contains(s)) continue;
            auto& slot = out[z];
            slot += g.scaled(m);
            if (slot.is_zero()) out.erase(z);
          }
        }
      }
      for (const auto& [z, m] : mu_set(xh)) {
        if (!tbl_.ldesc(z).contains(s)) continue;
        for (const auto& [w, g] : row[z]) {
          auto& slot = out[w];
          slot -= g.scaled(m);
          if (slot.is_zero()) out.erase(w);
        }
      }
      for (const auto& [z, g] : out)
        amax[z] = std::max(amax[z], static_cast<long long>(g.degree()));
      row[x] = std::move(out);
    }
  }
  avalues_ = std::move(amax);
  return avalues_;
}

size_t KLContext::memo_size() const {
  return pmemo_count_.load(std::memory_order_relaxed);
}

long long a_wn(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("a_wn needs even n >= 4");
  return n % 4 == 0 ? 3LL * n / 4 : (3LL * n + 2) / 4;
}

MuBoundVerdict mu_upper_bound_check(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("mu_upper_bound_check needs even n >= 4");
  const long long lwn = wn_length(n);
  const long long lxn = n / 2 + 1;
  if (lwn - a_wn(n) < lwn - lxn - 1) return MuBoundVerdict::MuForcedZero;
  if ((lwn - lxn) % 2 == 0) return MuBoundVerdict::ParityZero;
  return MuBoundVerdict::Inconclusive;
}

}  // namespace dkl
