#include "dkl/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dkl {

CoxeterSystem::CoxeterSystem(Family f, int r) : family(f), rank(r) {
  if (f == Family::A && r < 1)
    throw std::invalid_argument("type A needs rank >= 1");
  if (f == Family::D && r < 4)
    throw std::invalid_argument("type D needs rank >= 4");
  if (r > 31) throw std::invalid_argument("rank too large");
}

int CoxeterSystem::coxeter_m(int s, int t) const {
  if (!valid_generator(s) || !valid_generator(t))
    throw std::invalid_argument("invalid generator index");
  if (s == t) return 1;
  if (s > t) std::swap(s, t);
  if (family == Family::A) return t == s + 1 ? 3 : 2;
  // Type D: the graph forks at s_3; s_1 and s_2 both attach to it.
  if (s == 1) return t == 3 ? 3 : 2;
  return t == s + 1 ? 3 : 2;
}

std::vector<std::pair<int, int>> CoxeterSystem::noncommuting_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 1; s <= rank; ++s)
    for (int t = s + 1; t <= rank; ++t)
      if (coxeter_m(s, t) == 3) out.emplace_back(s, t);
  return out;
}

std::string CoxeterSystem::name() const {
  return (family == Family::A ? "A" : "D") + std::to_string(rank);
}

CoxeterSystem CoxeterSystem::parse(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("bad group spec: " + text);
  char f = std::toupper(static_cast<unsigned char>(text[0]));
  Family fam;
  if (f == 'A')
    fam = Family::A;
  else if (f == 'D')
    fam = Family::D;
  else
    throw std::invalid_argument("unsupported family in group spec: " + text);
  for (size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("bad group spec: " + text);
  return CoxeterSystem(fam, std::atoi(text.c_str() + 1));
}

GenSet GenSet::of(std::initializer_list<int> gens) {
  GenSet g;
  for (int i : gens) g.add(i);
  return g;
}

int GenSet::min() const { return bits == 0 ? 0 : __builtin_ctz(bits) + 1; }

std::vector<int> GenSet::to_vector() const {
  std::vector<int> out;
  for (uint32_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctz(b) + 1);
  return out;
}

SignedPermutation::SignedPermutation(CoxeterSystem sys, Window window)
    : sys_(sys), win_(std::move(window)) {
  const int n = sys_.window_size();
  if (static_cast<int>(win_.size()) != n)
    throw std::invalid_argument("window has wrong size for " + sys_.name());
  std::vector<char> seen(n + 1, 0);
  int negatives = 0;
  for (int v : win_) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a])
      throw std::invalid_argument("window is not a signed permutation");
    seen[a] = 1;
    if (v < 0) ++negatives;
  }
  if (sys_.family == Family::A && negatives > 0)
    throw std::invalid_argument("type A window must be positive");
  if (sys_.family == Family::D && negatives % 2 != 0)
    throw std::invalid_argument("type D window needs an even number of negatives");
}

SignedPermutation SignedPermutation::identity(const CoxeterSystem& sys) {
  Window w(sys.window_size());
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(sys, std::move(w));
}

bool SignedPermutation::is_identity() const {
  for (size_t i = 0; i < win_.size(); ++i)
    if (win_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

namespace {

// Right multiplication acts on window positions, left multiplication on
// values.  In type D the generator s_i (i >= 2) is the transposition of
// i-1 and i; s_1 swaps 1 and 2 with a sign change on both.
void rmul_inplace(const CoxeterSystem& sys, Window& w, int i) {
  if (sys.family == Family::A) {
    std::swap(w[i - 1], w[i]);
    return;
  }
  if (i == 1) {
    int a = w[0], b = w[1];
    w[0] = -b;
    w[1] = -a;
  } else {
    std::swap(w[i - 2], w[i - 1]);
  }
}

void lmul_inplace(const CoxeterSystem& sys, Window& w, int i) {
  int lo, hi;
  bool negate = false;
  if (sys.family == Family::A) {
    lo = i;
    hi = i + 1;
  } else if (i == 1) {
    lo = 1;
    hi = 2;
    negate = true;
  } else {
    lo = i - 1;
    hi = i;
  }
  for (int& v : w) {
    int a = std::abs(v);
    if (a == lo)
      v = (v > 0 ? hi : -hi);
    else if (a == hi)
      v = (v > 0 ? lo : -lo);
    else
      continue;
    if (negate) v = -v;
  }
}

}  // namespace

SignedPermutation mul_gen(const SignedPermutation& w, int i, Side side) {
  if (!w.system().valid_generator(i))
    throw std::invalid_argument("invalid generator index s" + std::to_string(i));
  Window win = w.window();
  if (side == Side::Right)
    rmul_inplace(w.system(), win, i);
  else
    lmul_inplace(w.system(), win, i);
  return SignedPermutation(w.system(), std::move(win));
}

SignedPermutation mul(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.system() != b.system())
    throw std::invalid_argument("mismatched Coxeter systems");
  const int n = a.system().window_size();
  Window out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = a.image(b.image(i));
  return SignedPermutation(a.system(), std::move(out));
}

SignedPermutation from_word(const CoxeterSystem& sys, const Word& word) {
  SignedPermutation w = SignedPermutation::identity(sys);
  for (int i : word) w = mul_gen(w, i, Side::Right);
  return w;
}

int length(const SignedPermutation& w) {
  const Window& v = w.window();
  const int n = static_cast<int>(v.size());
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (v[i] > v[j]) ++inv;
  if (w.system().family == Family::A) return inv;
  int neg = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (-v[i] > v[j]) ++neg;
  return inv + neg;
}

GenSet descents(const SignedPermutation& w, Side side) {
  if (side == Side::Left) return descents(inverse(w), Side::Right);
  const Window& v = w.window();
  GenSet out;
  const CoxeterSystem& sys = w.system();
  if (sys.family == Family::A) {
    for (int i = 1; i <= sys.rank; ++i)
      if (v[i - 1] > v[i]) out.add(i);
    return out;
  }
  // w(0) = -w(2) for the s_1 test.
  if (-v[1] > v[0]) out.add(1);
  for (int i = 2; i <= sys.rank; ++i)
    if (v[i - 2] > v[i - 1]) out.add(i);
  return out;
}

SignedPermutation inverse(const SignedPermutation& w) {
  const Window& v = w.window();
  Window out(v.size());
  for (int i = 1; i <= static_cast<int>(v.size()); ++i) {
    int x = v[i - 1];
    out[std::abs(x) - 1] = x > 0 ? i : -i;
  }
  return SignedPermutation(w.system(), std::move(out));
}

Word canonical_word(const SignedPermutation& w) {
  Word out;
  SignedPermutation cur = w;
  while (true) {
    GenSet r = descents(cur, Side::Right);
    if (r.empty()) break;
    int s = r.min();
    cur = mul_gen(cur, s, Side::Right);
    out.push_back(s);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const SignedPermutation& x, const SignedPermutation& w) {
  if (x.system() != w.system())
    throw std::invalid_argument("mismatched Coxeter systems");
  SignedPermutation a = x, b = w;
  int la = length(a), lb = length(b);
  // Standard lifting walk: strip left descents of w, lowering x in step.
  while (true) {
    if (la > lb) return false;
    if (a == b) return true;
    if (la == lb) return false;
    int s = descents(b, Side::Left).min();
    b = mul_gen(b, s, Side::Left);
    --lb;
    if (descents(a, Side::Left).contains(s)) {
      a = mul_gen(a, s, Side::Left);
      --la;
    }
  }
}

std::pair<SignedPermutation, SignedPermutation> parabolic_decompose(
    const SignedPermutation& w, GenSet I) {
  for (int i : I.to_vector())
    if (!w.system().valid_generator(i))
      throw std::invalid_argument("invalid generator in parabolic subset");
  SignedPermutation v = w;
  Word stripped;
  while (true) {
    GenSet r = descents(v, Side::Right);
    r.bits &= I.bits;
    if (r.empty()) break;
    int s = r.min();
    v = mul_gen(v, s, Side::Right);
    stripped.push_back(s);
  }
  std::reverse(stripped.begin(), stripped.end());
  return {v, from_word(w.system(), stripped)};
}

Word expand_interval(const std::pair<int, int>& iv) {
  auto ascending = [](int a, int b) -> Word {
    // [0,b] = s1 s2 ... s_b; [1,b] = s1 s3 s4 ... s_b; [a,b] = s_a ... s_b.
    Word out;
    if (a == 0) {
      if (b < 2) throw std::invalid_argument("interval [0,b] needs b >= 2");
      for (int i = 1; i <= b; ++i) out.push_back(i);
    } else if (a == 1) {
      if (b < 3) throw std::invalid_argument("interval [1,b] needs b >= 3");
      out.push_back(1);
      for (int i = 3; i <= b; ++i) out.push_back(i);
    } else {
      if (a < 2 || b < a) throw std::invalid_argument("malformed interval");
      for (int i = a; i <= b; ++i) out.push_back(i);
    }
    return out;
  };
  auto [a, b] = iv;
  if (a < 0 || b < 0)
    throw std::invalid_argument("signed interval forms are not supported");
  if (a <= b) return ascending(a, b);
  Word out = ascending(b, a);
  std::reverse(out.begin(), out.end());
  return out;
}

SignedPermutation iota_embed(const SignedPermutation& w) {
  if (w.system().family != Family::A)
    throw std::invalid_argument("iota_embed expects a type A element");
  int n = w.system().window_size();
  if (n < 4) throw std::invalid_argument("iota_embed needs A_{n-1} with n >= 4");
  return SignedPermutation(CoxeterSystem(Family::D, n), w.window());
}

SignedPermutation longest_element(const CoxeterSystem& sys) {
  SignedPermutation w = SignedPermutation::identity(sys);
  bool moved = true;
  while (moved) {
    moved = false;
    GenSet r = descents(w, Side::Right);
    for (int i = 1; i <= sys.rank; ++i) {
      if (!r.contains(i)) {
        w = mul_gen(w, i, Side::Right);
        moved = true;
        break;
      }
    }
  }
  return w;
}

bool reduced_word_is_valid(const CoxeterSystem& sys, const Word& word) {
  for (int i : word)
    if (!sys.valid_generator(i)) return false;
  return true;
}

std::string window_to_string(const SignedPermutation& w) {
  std::ostringstream os;
  const Window& v = w.window();
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

SignedPermutation parse_window(const CoxeterSystem& sys, const std::string& text) {
  Window win;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    size_t end = tok.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(tok[end - 1]))) --end;
    if (pos == end) throw std::invalid_argument("empty window entry");
    size_t used = 0;
    int v = std::stoi(tok.substr(pos, end - pos), &used);
    if (used != end - pos) throw std::invalid_argument("bad window entry: " + tok);
    win.push_back(v);
  }
  return SignedPermutation(sys, std::move(win));
}

std::string word_to_string(const Word& word) {
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << " ";
    os << "s" << word[i];
  }
  return os.str();
}

Word parse_word(const std::string& text) {
  Word out;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != 's' && text[i] != 'S')
      throw std::invalid_argument("bad word syntax near: " + text.substr(i));
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("generator index expected in word");
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, int>> parse_intervals(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '[') throw std::invalid_argument("expected '[' in interval list");
    ++i;
    skip_ws();
    auto read_int = [&]() {
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("number expected in interval");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      return neg ? -v : v;
    };
    int a = read_int();
    skip_ws();
    if (i >= text.size() || text[i] != ',')
      throw std::invalid_argument("expected ',' in interval");
    ++i;
    skip_ws();
    int b = read_int();
    skip_ws();
    if (i >= text.size() || text[i] != ']')
      throw std::invalid_argument("expected ']' in interval");
    ++i;
    out.emplace_back(a, b);
    skip_ws();
  }
  return out;
}

std::string intervals_to_string(const std::vector<std::pair<int, int>>& ivs) {
  std::ostringstream os;
  for (const auto& [a, b] : ivs) os << "[" << a << "," << b << "]";
  return os.str();
}

}  // namespace dkl
