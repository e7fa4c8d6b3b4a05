#include "kq/diagram.hpp"

#include "kq/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>

namespace kq {

namespace {

struct Slot {
  std::size_t crossing;
  int pos;
  friend bool operator==(const Slot&, const Slot&) = default;
};

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

std::string tuple_text(const std::array<long, 4>& t) {
  return "X[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
         "," + std::to_string(t[3]) + "]";
}

// Label -> dense index, in increasing label order.
std::map<long, std::size_t> label_index(const PDCode& pd) {
  std::map<long, std::size_t> idx;
  for (const auto& x : pd.crossings)
    for (long l : x) idx.emplace(l, 0);
  std::size_t i = 0;
  for (auto& [l, v] : idx) v = i++;
  return idx;
}

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}
  void skip(std::string_view extra = "") {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) ||
                                extra.find(s_[pos_]) != std::string_view::npos))
      ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void expect(char c, std::string_view what) {
    skip();
    if (done() || s_[pos_] != c) fail(std::string("expected '") + c + "' " + std::string(what));
    ++pos_;
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    if (!done() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    try {
      return std::stol(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

std::string PDCode::to_string() const {
  std::string out;
  for (const auto& x : crossings) out += (out.empty() ? "" : " ") + tuple_text(x);
  return out;
}

int Diagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings) w += c.sign;
  return w;
}

Diagram Diagram::mirror() const {
  Diagram m = *this;
  for (auto& c : m.crossings) c.sign = -c.sign;
  for (auto& t : m.resolved) std::swap(t.y, t.z);
  return m;
}

std::size_t pd_component_count(const PDCode& pd) {
  if (pd.crossings.empty()) return 1;
  const auto idx = label_index(pd);
  UnionFind uf(idx.size());
  for (const auto& x : pd.crossings) {
    uf.unite(idx.at(x[0]), idx.at(x[2]));
    uf.unite(idx.at(x[1]), idx.at(x[3]));
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) roots += uf.find(i) == i;
  return roots;
}

PDCode parse_pd(std::string_view text) {
  PDCode pd;
  Cursor cur(text);
  cur.skip(",");
  while (!cur.done()) {
    if (cur.peek() != 'X') cur.fail("expected 'X['");
    cur.expect('X', "");
    cur.expect('[', "after X");
    std::array<long, 4> t{};
    for (int i = 0; i < 4; ++i) {
      if (i > 0) cur.expect(',', "between labels");
      t[static_cast<std::size_t>(i)] = cur.integer();
    }
    cur.expect(']', "closing crossing tuple");
    pd.crossings.push_back(t);
    cur.skip(",");
  }

  std::map<long, int> count;
  for (const auto& x : pd.crossings)
    for (long l : x) ++count[l];
  for (const auto& x : pd.crossings)
    for (long l : x)
      if (count[l] != 2)
        throw ParseError("label " + std::to_string(l) + " in " + tuple_text(x) + " occurs " +
                         std::to_string(count[l]) + " times (expected exactly 2)");
  if (const auto n = pd_component_count(pd); n != 1)
    throw ParseError("PD code describes a link with " + std::to_string(n) +
                     " components; only knots are supported");
  return pd;
}

Diagram resolve_crossings(const PDCode& pd) {
  Diagram d;
  if (pd.crossings.empty()) return d;
  if (pd_component_count(pd) != 1) throw ValidationError("diagram is not a single component");

  std::map<long, std::vector<Slot>> occ;
  for (std::size_t c = 0; c < pd.crossings.size(); ++c)
    for (int p = 0; p < 4; ++p) occ[pd.crossings[c][static_cast<std::size_t>(p)]].push_back({c, p});
  for (const auto& [label, slots] : occ)
    if (slots.size() != 2) throw ValidationError("label " + std::to_string(label) + " does not occur twice");

  const auto label_at = [&](const Slot& s) { return pd.crossings[s.crossing][static_cast<std::size_t>(s.pos)]; };

  // Follow the strand from the first incoming under-edge; each step crosses one crossing slot pair.
  std::vector<int> sign(pd.crossings.size(), 0);
  std::vector<bool> under_seen(pd.crossings.size(), false);
  const Slot start{0, 0};
  Slot cur = start;
  std::size_t steps = 0;
  do {
    const auto where = tuple_text(pd.crossings[cur.crossing]);
    if (cur.pos == 2)
      throw ValidationError("orientation inconsistency: strand enters " + where + " at its outgoing under-edge");
    if (cur.pos == 0) {
      if (under_seen[cur.crossing]) throw ValidationError("under-strand of " + where + " traversed twice");
      under_seen[cur.crossing] = true;
    } else {
      if (sign[cur.crossing] != 0) throw ValidationError("over-strand of " + where + " traversed twice");
      sign[cur.crossing] = cur.pos == 3 ? 1 : -1;
    }
    const Slot exit{cur.crossing, (cur.pos + 2) % 4};
    const auto& pair = occ.at(label_at(exit));
    cur = pair[0] == exit ? pair[1] : pair[0];
    if (++steps > occ.size()) throw ValidationError("traversal does not close up");
  } while (!(cur == start));
  if (steps != occ.size()) throw ValidationError("traversal misses some edges");

  // Arcs: edges glued along over-strands.
  const auto idx = label_index(pd);
  UnionFind uf(idx.size());
  for (const auto& x : pd.crossings) uf.unite(idx.at(x[1]), idx.at(x[3]));
  std::map<std::size_t, int> arc_of_root;
  for (const auto& [label, i] : idx) arc_of_root.try_emplace(uf.find(i), static_cast<int>(arc_of_root.size()));
  const auto arc = [&](long label) { return arc_of_root.at(uf.find(idx.at(label))); };

  d.arc_count = static_cast<int>(arc_of_root.size());
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    const auto& x = pd.crossings[c];
    Crossing k{arc(x[1]), arc(x[0]), arc(x[2]), sign[c]};
    d.crossings.push_back(k);
    d.resolved.push_back(k.sign > 0 ? Triple{k.over, k.under_in, k.under_out}
                                    : Triple{k.over, k.under_out, k.under_in});
  }
  return d;
}

BraidWord parse_braid(std::string_view text, int strands) {
  BraidWord w;
  const auto has = [&](char c) { return text.find(c) != std::string_view::npos; };
  if (has('[')) {
    Cursor cur(text);
    cur.expect('[', "opening braid list");
    cur.skip();
    if (!cur.done() && cur.peek() == ']') {
      cur.expect(']', "");
    } else {
      for (;;) {
        const long g = cur.integer();
        if (g == 0) cur.fail("braid generator 0 does not exist");
        w.letters.push_back(static_cast<int>(g));
        cur.skip();
        if (!cur.done() && cur.peek() == ',') {
          cur.expect(',', "");
          continue;
        }
        cur.expect(']', "closing braid list");
        break;
      }
    }
    cur.skip();
    if (!cur.done()) cur.fail("trailing characters after braid list");
  } else if (has('s')) {
    Cursor cur(text);
    cur.skip();
    while (!cur.done()) {
      cur.expect('s', "before generator index");
      const long g = cur.integer();
      if (g <= 0) cur.fail("generator index must be positive");
      int e = 1;
      cur.skip();
      if (!cur.done() && cur.peek() == '^') {
        cur.expect('^', "");
        e = static_cast<int>(cur.integer());
        if (e != 1 && e != -1) cur.fail("exponent must be 1 or -1");
      }
      w.letters.push_back(static_cast<int>(g) * e);
      cur.skip();
    }
  } else {
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (!std::isalpha(static_cast<unsigned char>(ch)))
        throw ParseError(std::string("unexpected character '") + ch + "' in braid word");
      const bool inverse = std::isupper(static_cast<unsigned char>(ch));
      const int g = std::tolower(static_cast<unsigned char>(ch)) - 'a' + 1;
      w.letters.push_back(inverse ? -g : g);
    }
  }
  int needed = 1;
  for (int l : w.letters) needed = std::max(needed, std::abs(l) + 1);
  w.strands = strands > 0 ? strands : needed;
  if (needed > w.strands)
    throw ParseError("braid generator s" + std::to_string(needed - 1) + " needs " + std::to_string(needed) +
                     " strands, only " + std::to_string(w.strands) + " given");
  return w;
}

std::string format_braid(const BraidWord& w) {
  std::string out;
  for (int l : w.letters)
    out += (out.empty() ? "s" : " s") + std::to_string(std::abs(l)) + (l < 0 ? "^-1" : "");
  return out;
}

std::size_t braid_closure_components(const BraidWord& w) {
  std::vector<int> perm(static_cast<std::size_t>(w.strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : w.letters) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(perm[t])) seen[t] = true;
  }
  return cycles;
}

PDCode braid_closure_pd(const BraidWord& w) {
  for (int l : w.letters)
    if (l == 0 || std::abs(l) >= w.strands)
      throw ValidationError("braid letter " + std::to_string(l) + " out of range for " +
                            std::to_string(w.strands) + " strands");
  if (const auto n = braid_closure_components(w); n != 1)
    throw ValidationError("braid closure has " + std::to_string(n) + " components; only knots are supported");

  // Strands run upward; position p holds the current edge id.
  std::vector<long> cur(static_cast<std::size_t>(w.strands));
  std::iota(cur.begin(), cur.end(), 0L);
  long next = w.strands;
  PDCode pd;
  for (int l : w.letters) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    const long sw = cur[i], se = cur[i + 1];
    const long nw = next++, ne = next++;
    if (l > 0)
      pd.crossings.push_back({se, ne, nw, sw}); // SW->NE passes over
    else
      pd.crossings.push_back({sw, se, ne, nw}); // SE->NW passes over
    cur[i] = nw;
    cur[i + 1] = ne;
  }
  // Close up: the top edge at each position is the bottom edge there.
  std::map<long, long> glue;
  for (std::size_t p = 0; p < cur.size(); ++p) glue[cur[p]] = static_cast<long>(p);
  std::map<long, long> succ; // along the strands: sw -> ne, se -> nw
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    auto& x = pd.crossings[c];
    for (long& e : x)
      if (auto it = glue.find(e); it != glue.end()) e = it->second;
    if (w.letters[c] > 0) {
      succ[x[3]] = x[1];
      succ[x[0]] = x[2];
    } else {
      succ[x[0]] = x[2];
      succ[x[1]] = x[3];
    }
  }
  // Number edges consecutively along the knot so labels encode the orientation.
  std::map<long, long> relabel;
  if (!pd.crossings.empty())
    for (long e = pd.crossings[0][0]; !relabel.count(e); e = succ.at(e))
      relabel.emplace(e, static_cast<long>(relabel.size()) + 1);
  for (auto& x : pd.crossings)
    for (long& e : x) e = relabel.at(e);
  return pd;
}

Diagram braid_closure(const BraidWord& w) { return resolve_crossings(braid_closure_pd(w)); }

WirtingerPresentation wirtinger(const Diagram& d) { return {d.arc_count, d.resolved}; }

} // namespace kq
