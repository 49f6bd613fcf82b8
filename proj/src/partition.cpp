#include "wg/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace wg {

namespace {

// Renumber arbitrary block labels into first-appearance order.
std::vector<int> normalize_labels(const std::vector<int>& labels) {
  std::vector<int> out(labels.size());
  std::vector<int> seen;
  for (size_t i = 0; i < labels.size(); i++) {
    int l = labels[i];
    auto it = std::find(seen.begin(), seen.end(), l);
    if (it == seen.end()) {
      out[i] = static_cast<int>(seen.size());
      seen.push_back(l);
    } else {
      out[i] = static_cast<int>(it - seen.begin());
    }
  }
  return out;
}

} // namespace

SetPartition::SetPartition(std::vector<int> rgs) : rgs_(std::move(rgs)) {
  int mx = -1;
  for (int v : rgs_) {
    if (v < 0 || v > mx + 1) throw std::invalid_argument("not a restricted growth string");
    mx = std::max(mx, v);
  }
  nblocks_ = mx + 1;
}

SetPartition SetPartition::from_blocks(int k, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(k, -1);
  int id = 0;
  for (const auto& b : blocks) {
    for (int p : b) {
      if (p < 1 || p > k || labels[p - 1] != -1)
        throw std::invalid_argument("blocks must partition {1..k}");
      labels[p - 1] = id;
    }
    id++;
  }
  for (int l : labels)
    if (l == -1) throw std::invalid_argument("blocks must cover {1..k}");
  return SetPartition(normalize_labels(labels));
}

SetPartition SetPartition::singletons(int k) {
  std::vector<int> rgs(k);
  for (int i = 0; i < k; i++) rgs[i] = i;
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::full(int k) { return SetPartition(std::vector<int>(k, 0)); }

int SetPartition::block_of(int point) const {
  if (point < 1 || point > points()) throw std::out_of_range("point out of range");
  return rgs_[point - 1];
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(nblocks_);
  for (int p = 0; p < points(); p++) out[rgs_[p]].push_back(p + 1);
  return out;
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> out(nblocks_, 0);
  for (int v : rgs_) out[v]++;
  return out;
}

std::string SetPartition::str() const {
  std::string out = "{";
  auto bs = blocks();
  for (size_t b = 0; b < bs.size(); b++) {
    if (b) out += "|";
    for (size_t i = 0; i < bs[b].size(); i++) {
      if (i) out += ",";
      out += std::to_string(bs[b][i]);
    }
  }
  return out + "}";
}

SetPartition SetPartition::parse(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw std::invalid_argument("partition text must be brace-delimited: " + s);
  t = t.substr(1, t.size() - 2);
  std::vector<std::vector<int>> blocks;
  if (!t.empty()) {
    size_t pos = 0;
    while (pos <= t.size()) {
      size_t bar = t.find('|', pos);
      std::string blk = t.substr(pos, bar == std::string::npos ? bar : bar - pos);
      std::vector<int> b;
      size_t q = 0;
      while (q <= blk.size()) {
        size_t comma = blk.find(',', q);
        std::string num = blk.substr(q, comma == std::string::npos ? comma : comma - q);
        if (num.empty()) throw std::invalid_argument("bad partition text: " + s);
        b.push_back(std::stoi(num));
        if (comma == std::string::npos) break;
        q = comma + 1;
      }
      blocks.push_back(std::move(b));
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
  }
  int k = 0;
  for (const auto& b : blocks) k += static_cast<int>(b.size());
  return from_blocks(k, blocks);
}

bool SetPartition::refines(const SetPartition& o) const {
  if (points() != o.points()) throw std::invalid_argument("point count mismatch");
  std::vector<int> image(nblocks_, -1);
  for (int p = 0; p < points(); p++) {
    int b = rgs_[p], t = o.rgs_[p];
    if (image[b] == -1) image[b] = t;
    else if (image[b] != t) return false;
  }
  return true;
}

SetPartition SetPartition::join(const SetPartition& o) const {
  if (points() != o.points()) throw std::invalid_argument("point count mismatch");
  int k = points();
  std::vector<int> parent(k);
  for (int i = 0; i < k; i++) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  std::vector<int> first_a(nblocks_, -1), first_b(o.nblocks_, -1);
  for (int p = 0; p < k; p++) {
    if (first_a[rgs_[p]] == -1) first_a[rgs_[p]] = p;
    else unite(p, first_a[rgs_[p]]);
    if (first_b[o.rgs_[p]] == -1) first_b[o.rgs_[p]] = p;
    else unite(p, first_b[o.rgs_[p]]);
  }
  std::vector<int> labels(k);
  for (int p = 0; p < k; p++) labels[p] = find(p);
  return SetPartition(normalize_labels(labels));
}

SetPartition SetPartition::meet(const SetPartition& o) const {
  if (points() != o.points()) throw std::invalid_argument("point count mismatch");
  std::vector<int> labels(points());
  for (int p = 0; p < points(); p++) labels[p] = rgs_[p] * (o.nblocks_ + 1) + o.rgs_[p];
  return SetPartition(normalize_labels(labels));
}

bool SetPartition::is_pairing() const {
  for (int s : block_sizes())
    if (s != 2) return false;
  return true;
}

bool SetPartition::is_noncrossing() const {
  int k = points();
  for (int a = 0; a < k; a++)
    for (int b = a + 1; b < k; b++)
      for (int c = b + 1; c < k; c++)
        for (int d = c + 1; d < k; d++)
          if (rgs_[a] == rgs_[c] && rgs_[b] == rgs_[d] && rgs_[a] != rgs_[b]) return false;
  return true;
}

bool canonical_less(const SetPartition& a, const SetPartition& b) {
  if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
  return a.rgs() < b.rgs();
}

SetPartition kernel(const std::vector<int>& values) {
  return SetPartition(normalize_labels(values));
}

bool delta(const SetPartition& pi, const std::vector<int>& idx) {
  if (static_cast<int>(idx.size()) != pi.points())
    throw std::invalid_argument("index length mismatch");
  std::vector<int> value(pi.block_count(), 0);
  std::vector<bool> seen(pi.block_count(), false);
  for (int p = 0; p < pi.points(); p++) {
    int b = pi.rgs()[p];
    if (!seen[b]) {
      seen[b] = true;
      value[b] = idx[p];
    } else if (value[b] != idx[p]) {
      return false;
    }
  }
  return true;
}

Int mobius(const SetPartition& a, const SetPartition& b) {
  if (a == b) return 1;
  if (!a.refines(b)) return 0;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
  static std::mutex memo_mutex;
  auto key = std::make_pair(a.rgs(), b.rgs());
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Int acc = 0;
  for (const SetPartition& tau : enumerate_partitions(a.points())) {
    if (tau == b) continue;
    if (a.refines(tau) && tau.refines(b)) acc -= mobius(a, tau);
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(std::move(key), acc);
  return acc;
}

SetPartition fatten(const SetPartition& pi) {
  if (!pi.is_noncrossing()) throw std::invalid_argument("fatten requires a noncrossing partition");
  int k = pi.points();
  std::vector<std::vector<int>> pairs;
  for (const auto& blk : pi.blocks()) {
    int m = static_cast<int>(blk.size());
    for (int j = 0; j < m; j++) {
      int cur = blk[j], nxt = blk[(j + 1) % m];
      pairs.push_back({2 * cur, 2 * nxt - 1});
    }
  }
  return SetPartition::from_blocks(2 * k, pairs);
}

SetPartition shrink(const SetPartition& rho) {
  if (!rho.is_pairing() || !rho.is_noncrossing())
    throw std::invalid_argument("shrink requires a noncrossing pairing");
  int k2 = rho.points();
  int k = k2 / 2;
  std::vector<int> parent(k);
  for (int i = 0; i < k; i++) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& blk : rho.blocks()) {
    int a = (blk[0] + 1) / 2, b = (blk[1] + 1) / 2;
    parent[find(a - 1)] = find(b - 1);
  }
  std::vector<int> labels(k);
  for (int p = 0; p < k; p++) labels[p] = find(p);
  SetPartition out(normalize_labels(labels));
  if (fatten(out) != rho) throw std::invalid_argument("pairing is not a fattened partition");
  return out;
}

CategoryDescriptor CategoryDescriptor::parse(const std::string& name) {
  CategoryDescriptor d;
  std::string base = name;
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    base = name.substr(0, colon);
    d.s = std::stoi(name.substr(colon + 1));
  }
  if (base == "P") d.tag = CategoryTag::P;
  else if (base == "P2") d.tag = CategoryTag::P2;
  else if (base == "P12") d.tag = CategoryTag::P12;
  else if (base == "Peven") d.tag = CategoryTag::Peven;
  else if (base == "Ps") d.tag = CategoryTag::Ps;
  else if (base == "NC") d.tag = CategoryTag::NC;
  else if (base == "NC2") d.tag = CategoryTag::NC2;
  else if (base == "mP2" || base == "matching-P2") d.tag = CategoryTag::MatchP2;
  else if (base == "mP12" || base == "matching-P12") d.tag = CategoryTag::MatchP12;
  else if (base == "mPeven" || base == "matching-Peven") d.tag = CategoryTag::MatchPeven;
  else throw std::invalid_argument("unknown category: " + name);
  if (d.tag == CategoryTag::Ps) {
    if (d.s < 1) throw std::invalid_argument("Ps needs a level, e.g. Ps:3");
  } else if (colon != std::string::npos) {
    throw std::invalid_argument("level only applies to Ps: " + name);
  }
  return d;
}

std::string CategoryDescriptor::name() const {
  switch (tag) {
    case CategoryTag::P: return "P";
    case CategoryTag::P2: return "P2";
    case CategoryTag::P12: return "P12";
    case CategoryTag::Peven: return "Peven";
    case CategoryTag::Ps: return "Ps:" + std::to_string(s);
    case CategoryTag::NC: return "NC";
    case CategoryTag::NC2: return "NC2";
    case CategoryTag::MatchP2: return "mP2";
    case CategoryTag::MatchP12: return "mP12";
    case CategoryTag::MatchPeven: return "mPeven";
  }
  return "?";
}

bool CategoryDescriptor::needs_colors() const {
  return tag == CategoryTag::MatchP2 || tag == CategoryTag::MatchP12 ||
         tag == CategoryTag::MatchPeven;
}

namespace {

void block_color_counts(const SetPartition& pi, const ColorWord* w, int block,
                        int& white, int& black) {
  white = black = 0;
  for (int p = 0; p < pi.points(); p++) {
    if (pi.rgs()[p] != block) continue;
    char c = w ? (*w)[p] : 'o';
    if (c == 'o') white++;
    else if (c == 'x') black++;
    else throw std::invalid_argument("color word must be over {o,x}");
  }
}

} // namespace

bool is_member(const CategoryDescriptor& d, const SetPartition& pi, const ColorWord* w) {
  if (w && static_cast<int>(w->size()) != pi.points())
    throw std::invalid_argument("color word length mismatch");
  if (d.needs_colors() && !w) throw std::invalid_argument(d.name() + " needs a color word");
  auto sizes = pi.block_sizes();
  switch (d.tag) {
    case CategoryTag::P:
      return true;
    case CategoryTag::P2:
      return pi.is_pairing();
    case CategoryTag::P12:
      for (int s : sizes)
        if (s > 2) return false;
      return true;
    case CategoryTag::Peven:
      for (int s : sizes)
        if (s % 2) return false;
      return true;
    case CategoryTag::Ps:
      for (int b = 0; b < pi.block_count(); b++) {
        int white, black;
        block_color_counts(pi, w, b, white, black);
        if ((white - black) % d.s != 0) return false;
      }
      return true;
    case CategoryTag::NC:
      return pi.is_noncrossing();
    case CategoryTag::NC2:
      return pi.is_pairing() && pi.is_noncrossing();
    case CategoryTag::MatchP2:
    case CategoryTag::MatchP12:
      for (int b = 0; b < pi.block_count(); b++) {
        int white, black;
        block_color_counts(pi, w, b, white, black);
        int sz = white + black;
        if (sz > 2) return false;
        if (sz == 2 && white != 1) return false;
        if (sz == 1 && d.tag == CategoryTag::MatchP2) return false;
      }
      return true;
    case CategoryTag::MatchPeven:
      for (int b = 0; b < pi.block_count(); b++) {
        int white, black;
        block_color_counts(pi, w, b, white, black);
        if (white != black) return false;
      }
      return true;
  }
  return false;
}

namespace {

void rgs_rec(int k, std::vector<int>& cur, int mx, std::vector<SetPartition>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(SetPartition(cur));
    return;
  }
  for (int v = 0; v <= mx + 1; v++) {
    cur.push_back(v);
    rgs_rec(k, cur, std::max(mx, v), out);
    cur.pop_back();
  }
}

void pairing_rec(std::vector<int>& free_pts, std::vector<int>& labels, int next_id,
                 std::vector<SetPartition>& out) {
  if (free_pts.empty()) {
    out.push_back(SetPartition(normalize_labels(labels)));
    return;
  }
  int a = free_pts[0];
  for (size_t t = 1; t < free_pts.size(); t++) {
    int b = free_pts[t];
    labels[a] = labels[b] = next_id;
    std::vector<int> rest;
    rest.reserve(free_pts.size() - 2);
    for (size_t q = 1; q < free_pts.size(); q++)
      if (q != t) rest.push_back(free_pts[q]);
    pairing_rec(rest, labels, next_id + 1, out);
  }
}

// Noncrossing pairings on points [l, r] as partner links written into `partner`.
void ncp_rec(const std::vector<std::pair<int, int>>& segments, std::vector<int>& partner,
             std::vector<SetPartition>& out, int k) {
  if (segments.empty()) {
    std::vector<int> labels(k);
    std::vector<bool> done(k, false);
    int id = 0;
    for (int p = 0; p < k; p++) {
      if (done[p]) continue;
      labels[p] = labels[partner[p]] = id++;
      done[p] = done[partner[p]] = true;
    }
    out.push_back(SetPartition(normalize_labels(labels)));
    return;
  }
  auto segs = segments;
  auto [l, r] = segs.back();
  segs.pop_back();
  if (l > r) {
    ncp_rec(segs, partner, out, k);
    return;
  }
  for (int m = l + 1; m <= r; m += 2) {
    partner[l] = m;
    partner[m] = l;
    auto segs2 = segs;
    segs2.push_back({l + 1, m - 1});
    segs2.push_back({m + 1, r});
    ncp_rec(segs2, partner, out, k);
  }
}

} // namespace

std::vector<SetPartition> enumerate_partitions(int k) {
  std::vector<SetPartition> out;
  if (k == 0) {
    out.push_back(SetPartition());
    return out;
  }
  std::vector<int> cur;
  rgs_rec(k, cur, -1, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<SetPartition> enumerate_pairings(int k) {
  std::vector<SetPartition> out;
  if (k == 0) {
    out.push_back(SetPartition());
    return out;
  }
  if (k % 2) return out;
  std::vector<int> free_pts(k), labels(k, 0);
  for (int i = 0; i < k; i++) free_pts[i] = i;
  pairing_rec(free_pts, labels, 0, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<SetPartition> noncrossing_pairings(int k) {
  std::vector<SetPartition> out;
  if (k == 0) {
    out.push_back(SetPartition());
    return out;
  }
  if (k % 2) return out;
  std::vector<int> partner(k, -1);
  ncp_rec({{0, k - 1}}, partner, out, k);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<SetPartition> enumerate_category(const CategoryDescriptor& d, int k,
                                             const ColorWord* w) {
  std::vector<SetPartition> base;
  switch (d.tag) {
    case CategoryTag::NC2:
      base = noncrossing_pairings(k);
      break;
    case CategoryTag::P2:
    case CategoryTag::MatchP2:
      base = enumerate_pairings(k);
      break;
    default:
      base = enumerate_partitions(k);
      break;
  }
  std::vector<SetPartition> out;
  for (const auto& pi : base)
    if (is_member(d, pi, w)) out.push_back(pi);
  return out;
}

} // namespace wg
