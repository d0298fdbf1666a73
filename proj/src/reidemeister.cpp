#include "cork/reidemeister.hpp"

#include "cork/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

namespace cork::reidemeister {

namespace {

int crossing_count(const GaussCode& code) { return static_cast<int>(code.signs.size()); }

// Code with the listed crossings deleted and the rest relabelled compactly.
GaussCode remove_crossings(const GaussCode& code, const std::set<int>& doomed) {
  std::map<int, int> relabel;
  GaussCode out;
  for (int c = 0; c < crossing_count(code); ++c)
    if (!doomed.count(c)) {
      relabel[c] = static_cast<int>(out.signs.size());
      out.signs.push_back(code.signs[c]);
    }
  for (const auto& p : code.passages)
    if (!doomed.count(p.crossing)) out.passages.push_back({relabel.at(p.crossing), p.over});
  return out;
}

std::vector<int> encode(const GaussCode& code, std::size_t start) {
  const std::size_t m = code.passages.size();
  std::map<int, int> label;
  std::vector<int> key;
  key.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = code.passages[(start + i) % m];
    auto [it, fresh] = label.try_emplace(p.crossing, static_cast<int>(label.size()));
    key.push_back(it->second * 4 + (p.over ? 2 : 0) + (code.signs[p.crossing] > 0 ? 1 : 0));
  }
  return key;
}

GaussCode decode(const std::vector<int>& key) {
  GaussCode code;
  for (int v : key) {
    const int label = v / 4;
    if (label == static_cast<int>(code.signs.size())) code.signs.push_back(v % 2 ? 1 : -1);
    code.passages.push_back({label, (v & 2) != 0});
  }
  return code;
}

std::vector<int> canonical_key(const GaussCode& code) {
  std::vector<int> best;
  for (std::size_t r = 0; r < code.passages.size(); ++r) {
    auto key = encode(code, r);
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

}  // namespace

std::string Move::to_string() const {
  std::string s = kind == MoveKind::r1 ? "R1" : kind == MoveKind::r2 ? "R2" : "R3";
  s += "(";
  for (std::size_t i = 0; i < crossings.size(); ++i) s += (i ? "," : "") + std::to_string(crossings[i]);
  return s + ")";
}

std::vector<std::vector<int>> faces(const GaussCode& code) {
  const int m = static_cast<int>(code.passages.size());
  const int n = crossing_count(code);
  if (m != 2 * n) throw PreconditionError("Gauss code must visit every crossing twice");
  if (n == 0) return {};

  std::vector<int> under(n, -1), over(n, -1);
  for (int k = 0; k < m; ++k) {
    auto& slot = code.passages[k].over ? over[code.passages[k].crossing] : under[code.passages[k].crossing];
    if (slot != -1) throw PreconditionError("crossing visited twice on the same level");
    slot = k;
  }
  // Dart 2k starts edge k at passage k; dart 2k+1 ends it at passage k+1.
  std::vector<int> next_ccw(2 * m, -1);
  for (int c = 0; c < n; ++c) {
    const int in_u = 2 * ((under[c] - 1 + m) % m) + 1;
    const int out_u = 2 * under[c];
    const int in_o = 2 * ((over[c] - 1 + m) % m) + 1;
    const int out_o = 2 * over[c];
    const int ring[4] = {in_u, code.signs[c] > 0 ? out_o : in_o, out_u, code.signs[c] > 0 ? in_o : out_o};
    for (int i = 0; i < 4; ++i) next_ccw[ring[i]] = ring[(i + 1) % 4];
  }
  std::vector<std::vector<int>> result;
  std::vector<bool> used(2 * m, false);
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (used[d0]) continue;
    std::vector<int> face;
    for (int d = d0; !used[d]; d = next_ccw[d ^ 1]) {
      used[d] = true;
      face.push_back(d / 2);
    }
    result.push_back(std::move(face));
  }
  if (static_cast<int>(result.size()) != n + 2) throw PreconditionError("Gauss code is not planar");
  return result;
}

std::vector<std::pair<Move, GaussCode>> neighbours(const GaussCode& code) {
  std::vector<std::pair<Move, GaussCode>> out;
  const int m = static_cast<int>(code.passages.size());
  if (m == 0) return out;
  auto at = [&](int k) -> const GaussCode::Passage& { return code.passages[((k % m) + m) % m]; };
  auto is_loop = [&](int e) { return at(e).crossing == at(e + 1).crossing; };

  std::set<std::set<int>> done;
  for (int k = 0; k < m; ++k)
    if (is_loop(k)) {
      std::set<int> doomed{at(k).crossing};
      if (done.insert(doomed).second)
        out.push_back({{MoveKind::r1, {at(k).crossing}}, remove_crossings(code, doomed)});
    }

  for (const auto& face : faces(code)) {
    if (face.size() == 2) {
      const int e1 = face[0], e2 = face[1];
      if (e1 == e2 || is_loop(e1) || is_loop(e2)) continue;
      const std::set<int> a{at(e1).crossing, at(e1 + 1).crossing};
      const std::set<int> b{at(e2).crossing, at(e2 + 1).crossing};
      if (a != b) continue;
      const bool level1 = at(e1).over, level2 = at(e2).over;
      if (at(e1 + 1).over != level1 || at(e2 + 1).over != level2 || level1 == level2) continue;
      if (done.insert(a).second) out.push_back({{MoveKind::r2, {a.begin(), a.end()}}, remove_crossings(code, a)});
    } else if (face.size() == 3) {
      std::set<int> crossings;
      int over_over = 0, under_under = 0;
      bool ok = true;
      for (int e : face) {
        if (is_loop(e)) ok = false;
        for (int f : face)
          if (f != e && (e + 1) % m == f) ok = false;
        crossings.insert(at(e).crossing);
        crossings.insert(at(e + 1).crossing);
        if (at(e).over && at(e + 1).over) ++over_over;
        if (!at(e).over && !at(e + 1).over) ++under_under;
      }
      if (!ok || crossings.size() != 3 || over_over != 1 || under_under != 1) continue;
      GaussCode moved = code;
      for (int e : face) std::swap(moved.passages[e], moved.passages[(e + 1) % m]);
      out.push_back({{MoveKind::r3, {crossings.begin(), crossings.end()}}, std::move(moved)});
    }
  }
  return out;
}

GaussCode canonical(const GaussCode& code) { return decode(canonical_key(code)); }

SearchResult search_unknot(const GaussCode& code, int budget, std::uint64_t seed, std::size_t state_cap) {
  if (budget < 0) throw PreconditionError("move budget must be non-negative");
  struct Node {
    std::vector<int> key;
    int parent;
    Move move;
    int depth;
  };
  SearchResult result;
  std::vector<Node> nodes;
  std::set<std::vector<int>> seen;
  std::mt19937_64 rng(seed);

  nodes.push_back({canonical_key(code), -1, {MoveKind::r1, {}}, 0});
  seen.insert(nodes[0].key);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    ++result.states_explored;
    if (nodes[head].key.empty()) {
      for (int i = static_cast<int>(head); nodes[i].parent >= 0; i = nodes[i].parent) result.moves.push_back(nodes[i].move);
      std::reverse(result.moves.begin(), result.moves.end());
      result.unknotted = true;
      return result;
    }
    if (nodes[head].depth == budget) continue;
    auto next = neighbours(decode(nodes[head].key));
    std::shuffle(next.begin(), next.end(), rng);
    for (auto& [move, successor] : next) {
      auto key = canonical_key(successor);
      if (!seen.insert(key).second) continue;
      if (nodes.size() >= state_cap) {
        result.truncated = true;
        return result;
      }
      nodes.push_back({std::move(key), static_cast<int>(head), std::move(move), nodes[head].depth + 1});
    }
  }
  return result;
}

}  // namespace cork::reidemeister
