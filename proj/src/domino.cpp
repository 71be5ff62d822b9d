#include "dkl/domino.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace dkl {

Domino::Domino(Square x, Square y) {
  if (y < x) std::swap(x, y);
  a = x;
  b = y;
  const bool adjacent = (a.row == b.row && a.col + 1 == b.col) ||
                        (a.col == b.col && a.row + 1 == b.row);
  if (!adjacent || a.row < 1 || a.col < 1)
    throw std::invalid_argument("squares do not form a domino");
}

int Shape::rho(int i) const {
  if (i < 1 || i > static_cast<int>(rows.size())) return 0;
  return rows[i - 1];
}

int Shape::kappa(int j) const {
  if (j < 1) return 0;
  int count = 0;
  for (int r : rows) {
    if (r >= j)
      ++count;
    else
      break;
  }
  return count;
}

int Shape::total() const {
  int t = 0;
  for (int r : rows) t += r;
  return t;
}

DominoTableau::DominoTableau(std::map<int, Domino> dominoes)
    : doms_(std::move(dominoes)) {
  int max_row = 0;
  for (const auto& [k, d] : doms_) {
    if (k < 1) throw std::invalid_argument("labels must be positive");
    for (Square s : {d.a, d.b}) {
      if (!grid_.emplace(std::make_pair(s.row, s.col), k).second)
        throw std::invalid_argument("overlapping dominoes");
      max_row = std::max(max_row, s.row);
    }
  }
  shape_.rows.assign(max_row, 0);
  for (const auto& [pos, k] : grid_) {
    (void)k;
    shape_.rows[pos.first - 1] = std::max(shape_.rows[pos.first - 1], pos.second);
  }
  validate(*this);
}

std::vector<int> DominoTableau::labels() const {
  std::vector<int> out;
  out.reserve(doms_.size());
  for (const auto& [k, d] : doms_) {
    (void)d;
    out.push_back(k);
  }
  return out;
}

const Domino& DominoTableau::position(int k) const {
  auto it = doms_.find(k);
  if (it == doms_.end())
    throw std::invalid_argument("label " + std::to_string(k) + " not in tableau");
  return it->second;
}

int DominoTableau::n_at(Square s) const {
  if (s.row == 0 || s.col == 0) return kBoundary;
  auto it = grid_.find(std::make_pair(s.row, s.col));
  return it == grid_.end() ? kOffDiagram : it->second;
}

std::string DominoTableau::serialize() const {
  std::ostringstream os;
  for (const auto& [k, d] : doms_)
    os << k << ":" << d.a.row << "," << d.a.col << ";" << d.b.row << "," << d.b.col
       << "|";
  return os.str();
}

int rho(const DominoTableau& t, int i) { return t.shape().rho(i); }
int kappa(const DominoTableau& t, int j) { return t.shape().kappa(j); }

void validate(const DominoTableau& t) {
  // Shape must be a Young diagram with exactly the dominoes' squares.
  const Shape& sh = t.shape();
  for (size_t i = 1; i < sh.rows.size(); ++i)
    if (sh.rows[i] > sh.rows[i - 1])
      throw std::invalid_argument("tableau shape is not a Young diagram");
  if (!sh.rows.empty() && sh.rows.back() == 0)
    throw std::invalid_argument("tableau shape has an empty row");
  int squares = 0;
  for (int i = 1; i <= static_cast<int>(sh.rows.size()); ++i)
    for (int j = 1; j <= sh.rho(i); ++j) {
      if (t.n_at({i, j}) == DominoTableau::kOffDiagram)
        throw std::invalid_argument("tableau has a hole");
      ++squares;
    }
  if (squares != 2 * t.size())
    throw std::invalid_argument("tableau squares do not tile the shape");
  // Monotone labels along rows and columns.
  for (const auto& [k, d] : t.dominoes()) {
    for (Square s : {d.a, d.b}) {
      int right = t.n_at({s.row, s.col + 1});
      int down = t.n_at({s.row + 1, s.col});
      if (right != DominoTableau::kOffDiagram && right < k)
        throw std::invalid_argument("labels not monotone along a row");
      if (down != DominoTableau::kOffDiagram && down < k)
        throw std::invalid_argument("labels not monotone along a column");
    }
  }
}

Domino shuffle_A(const Shape& j, const Domino& p) {
  if (p.horizontal()) {
    const int i = p.a.row, c = p.a.col;  // left square
    if (c == j.rho(i) + 1) return p;
    if (c == j.rho(i) - 1 && j.rho(i + 1) < c) {
      int r = j.rho(i + 1) + 1;
      return Domino({i + 1, r}, {i + 1, r + 1});
    }
    if (c == j.rho(i) && j.rho(i + 1) == c)
      return Domino({i, c + 1}, {i + 1, c + 1});
  } else {
    const int i = p.a.row, c = p.a.col;  // top square
    if (i == j.kappa(c) + 1) return p;
    if (i == j.kappa(c) - 1 && j.kappa(c + 1) < i) {
      int r = j.kappa(c + 1) + 1;
      return Domino({r, c + 1}, {r + 1, c + 1});
    }
    if (i == j.kappa(c) && j.kappa(c + 1) == i)
      return Domino({i + 1, c}, {i + 1, c + 1});
  }
  throw std::invalid_argument("shuffle: configuration outside all three cases");
}

namespace {

Shape shape_of(const std::map<int, Domino>& doms) {
  int max_row = 0;
  for (const auto& [k, d] : doms) {
    (void)k;
    max_row = std::max({max_row, d.a.row, d.b.row});
  }
  Shape sh;
  sh.rows.assign(max_row, 0);
  for (const auto& [k, d] : doms) {
    (void)k;
    for (Square s : {d.a, d.b})
      sh.rows[s.row - 1] = std::max(sh.rows[s.row - 1], s.col);
  }
  return sh;
}

}  // namespace

DominoTableau alpha_insert(const DominoTableau& t, int label, int eps) {
  if (t.has_label(label))
    throw std::invalid_argument("label already present in tableau");
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");

  std::map<int, Domino> pending;  // labels above the new one, original spots
  std::map<int, Domino> base;
  for (const auto& [k, d] : t.dominoes())
    (k > label ? pending : base).emplace(k, d);

  Shape sh = shape_of(base);
  if (eps == 1) {
    int c = sh.rho(1) + 1;
    base.emplace(label, Domino({1, c}, {1, c + 1}));
  } else {
    int r = sh.kappa(1) + 1;
    base.emplace(label, Domino({r, 1}, {r + 1, 1}));
  }
  for (const auto& [k, d] : pending)
    base.emplace(k, shuffle_A(shape_of(base), d));
  return DominoTableau(std::move(base));
}

std::vector<std::array<int, 3>> delta(const SignedPermutation& w) {
  if (w.system().family != Family::D)
    throw std::invalid_argument("delta expects a type D element");
  std::vector<std::array<int, 3>> out;
  const Window& v = w.window();
  for (int i = 1; i <= static_cast<int>(v.size()); ++i)
    out.push_back({i, std::abs(v[i - 1]), v[i - 1] > 0 ? 1 : -1});
  return out;
}

DominoTableau tableau(const SignedPermutation& w, Side side) {
  if (w.system().family != Family::D)
    throw std::invalid_argument("tableau expects a type D element");
  SignedPermutation base = side == Side::Left ? w : inverse(w);
  SignedPermutation wi = inverse(base);
  DominoTableau t;
  for (int u = 1; u <= w.system().rank; ++u) {
    int img = wi.image(u);
    t = alpha_insert(t, std::abs(img), img > 0 ? 1 : -1);
  }
  return t;
}

int p_prime_r(const DominoTableau& t, int k) {
  const Domino& d = t.position(k);
  Square f = d.fixed_square(), v = d.variable_square();
  if (v.row > f.row || v.col < f.col)
    return t.n_at({f.row - 1, f.col + 1});
  return t.n_at({f.row + 1, f.col - 1});
}

Domino p_prime(const DominoTableau& t, int k) {
  const Domino& d = t.position(k);
  Square f = d.fixed_square(), v = d.variable_square();
  const int r = p_prime_r(t, k);
  if (v.row > f.row || v.col < f.col) {
    if (r > k) return Domino(f, {f.row - 1, f.col});
    return Domino(f, {f.row, f.col + 1});
  }
  if (r < k) return Domino(f, {f.row + 1, f.col});
  return Domino(f, {f.row, f.col - 1});
}

std::vector<Cycle> cycles(const DominoTableau& t) {
  std::vector<int> labels = t.labels();
  std::unordered_map<int, int> slot;
  for (size_t i = 0; i < labels.size(); ++i) slot[labels[i]] = static_cast<int>(i);
  std::vector<int> parent(labels.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::unordered_map<int, int> partner;  // label -> N(T, variable square of P')
  for (int k : labels) {
    int other = t.n_at(p_prime(t, k).variable_square());
    partner[k] = other;
    if (t.has_label(other)) parent[find(slot[k])] = find(slot[other]);
  }
  std::map<int, std::vector<int>> classes;
  for (int k : labels) classes[find(slot[k])].push_back(k);
  std::vector<Cycle> out;
  for (auto& [root, members] : classes) {
    (void)root;
    std::sort(members.begin(), members.end());
    std::set<int> in_class(members.begin(), members.end());
    bool closed = true;
    for (int k : members)
      if (!in_class.count(partner[k])) {
        closed = false;
        break;
      }
    out.push_back({std::move(members), !closed});
  }
  std::sort(out.begin(), out.end(),
            [](const Cycle& a, const Cycle& b) { return a.labels < b.labels; });
  return out;
}

DominoTableau move_through(const DominoTableau& t, const Cycle& c) {
  bool found = false;
  for (const Cycle& have : cycles(t))
    if (have.labels == c.labels) {
      found = true;
      break;
    }
  if (!found) throw std::invalid_argument("not a cycle of this tableau");
  std::map<int, Domino> doms = t.dominoes();
  for (int k : c.labels) doms[k] = p_prime(t, k);
  return DominoTableau(std::move(doms));
}

std::vector<DominoTableau> open_move_orbit(const DominoTableau& t) {
  std::vector<DominoTableau> orbit{t};
  std::unordered_set<std::string> seen{t.serialize()};
  for (size_t head = 0; head < orbit.size(); ++head) {
    DominoTableau cur = orbit[head];
    for (const Cycle& c : cycles(cur)) {
      if (!c.open) continue;
      DominoTableau next = move_through(cur, c);
      if (seen.insert(next.serialize()).second) orbit.push_back(std::move(next));
    }
  }
  return orbit;
}

std::string equiv_canonical_form(const DominoTableau& t) {
  std::string best;
  for (const DominoTableau& u : open_move_orbit(t)) {
    std::string s = u.serialize();
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

namespace {

std::vector<std::string> canonical_forms(const GroupTable& tbl,
                                         const std::vector<uint32_t>& elements,
                                         Side side, int threads) {
  std::vector<std::string> forms(elements.size());
  auto run = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i)
      forms[i] = equiv_canonical_form(tableau(tbl.element(elements[i]), side));
  };
  threads = std::max(1, threads);
  if (threads == 1 || elements.size() < 64) {
    run(0, elements.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (elements.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      size_t b = t * chunk, e = std::min(elements.size(), b + chunk);
      if (b >= e) break;
      pool.emplace_back(run, b, e);
    }
    for (auto& th : pool) th.join();
  }
  return forms;
}

std::vector<std::vector<uint32_t>> group_by(
    const std::vector<uint32_t>& elements, const std::vector<std::string>& forms) {
  std::map<std::string, std::vector<uint32_t>> buckets;
  for (size_t i = 0; i < elements.size(); ++i)
    buckets[forms[i]].push_back(elements[i]);
  std::vector<std::vector<uint32_t>> blocks;
  blocks.reserve(buckets.size());
  for (auto& [form, b] : buckets) {
    (void)form;
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace

CellPartition tableau_cells(const GroupTable& tbl,
                            const std::vector<uint32_t>& elements, CellKind kind,
                            int threads) {
  CellPartition part;
  part.kind = kind;
  if (kind == CellKind::Left || kind == CellKind::Right) {
    auto forms = canonical_forms(
        tbl, elements, kind == CellKind::Left ? Side::Left : Side::Right, threads);
    part.blocks = group_by(elements, forms);
    part.canonicalize();
    return part;
  }
  // Two-sided: join the left and right partitions.
  auto lf = canonical_forms(tbl, elements, Side::Left, threads);
  auto rf = canonical_forms(tbl, elements, Side::Right, threads);
  std::vector<uint32_t> parent(elements.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<uint32_t>(i);
  std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto* forms : {&lf, &rf}) {
    std::unordered_map<std::string, uint32_t> first;
    for (size_t i = 0; i < elements.size(); ++i) {
      auto [it, fresh] = first.emplace((*forms)[i], static_cast<uint32_t>(i));
      if (!fresh) parent[find(static_cast<uint32_t>(i))] = find(it->second);
    }
  }
  std::map<uint32_t, std::vector<uint32_t>> buckets;
  for (size_t i = 0; i < elements.size(); ++i)
    buckets[find(static_cast<uint32_t>(i))].push_back(elements[i]);
  for (auto& [root, b] : buckets) {
    (void)root;
    part.blocks.push_back(std::move(b));
  }
  part.canonicalize();
  return part;
}

std::string to_json(const DominoTableau& t) {
  std::ostringstream os;
  os << "{\"labels\":[";
  bool first = true;
  for (const auto& [k, d] : t.dominoes()) {
    if (!first) os << ",";
    first = false;
    os << "{\"k\":" << k << ",\"squares\":[[" << d.a.row << "," << d.a.col << "],["
       << d.b.row << "," << d.b.col << "]]}";
  }
  os << "]}";
  return os.str();
}

std::string ascii_render(const DominoTableau& t) {
  if (t.empty()) return "(empty tableau)\n";
  const Shape& sh = t.shape();
  const int rows = static_cast<int>(sh.rows.size());
  int width = 1;
  for (int k : t.labels())
    width = std::max(width, static_cast<int>(std::to_string(k).size()));
  const int cw = width + 2;
  auto label = [&](int i, int j) -> int {
    if (i < 1 || j < 1 || i > rows || j > sh.rho(i)) return -1;
    return t.n_at({i, j});
  };
  std::ostringstream os;
  for (int i = 1; i <= rows + 1; ++i) {
    // Border above row i.
    int cols = std::max(i <= rows ? sh.rho(i) : 0, i > 1 ? sh.rho(i - 1) : 0);
    std::string border;
    for (int j = 1; j <= cols; ++j) {
      bool wall = label(i - 1, j) != label(i, j);
      border += "+";
      border += std::string(cw, wall ? '-' : ' ');
    }
    border += "+";
    os << border << "\n";
    if (i > rows) break;
    std::string line;
    for (int j = 1; j <= sh.rho(i); ++j) {
      line += (label(i, j - 1) != label(i, j)) ? "|" : " ";
      std::string txt = std::to_string(label(i, j));
      int pad = cw - static_cast<int>(txt.size());
      line += std::string(pad / 2 + pad % 2, ' ') + txt + std::string(pad / 2, ' ');
    }
    line += "|";
    os << line << "\n";
  }
  return os.str();
}

}  // namespace dkl
