#include "kq/quandle.hpp"

#include "kq/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kq {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

void validate_shape(const OperationTable& table) {
  const std::size_t n = table.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n)
      throw ValidationError("operation table is not square (row " + std::to_string(x) + " has " +
                            std::to_string(table[x].size()) + " entries, expected " + std::to_string(n) + ")");
    for (std::size_t y = 0; y < n; ++y)
      if (table[x][y] < 0 || static_cast<std::size_t>(table[x][y]) >= n)
        throw ValidationError("table entry [" + std::to_string(x) + "][" + std::to_string(y) + "] = " +
                              std::to_string(table[x][y]) + " is out of range");
  }
}

int mod(long a, int n) {
  const long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

} // namespace

AxiomReport check_axioms(const OperationTable& table) {
  validate_shape(table);
  const std::size_t n = table.size();
  AxiomReport report;
  const auto note = [&](std::size_t& counter, const std::string& msg) {
    if (counter++ < kMaxWitnesses) report.violations.push_back(msg);
  };

  std::size_t bad_rows = 0, bad_sd = 0, bad_idem = 0, bad_inv = 0;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> hit(n, false);
    for (std::size_t y = 0; y < n; ++y) hit[static_cast<std::size_t>(table[x][y])] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
      note(bad_rows, "left multiplication by " + std::to_string(x) + " is not a bijection (row " +
                         std::to_string(x) + ")");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto lhs = table[x][static_cast<std::size_t>(table[y][z])];
        const auto rhs = table[static_cast<std::size_t>(table[x][y])][static_cast<std::size_t>(table[x][z])];
        if (lhs != rhs)
          note(bad_sd, "self-distributivity fails at (x,y,z) = (" + std::to_string(x) + "," + std::to_string(y) +
                           "," + std::to_string(z) + "): " + std::to_string(lhs) + " != " + std::to_string(rhs));
      }
  for (std::size_t x = 0; x < n; ++x)
    if (table[x][x] != static_cast<int>(x))
      note(bad_idem, "idempotency fails: " + std::to_string(x) + " |> " + std::to_string(x) + " = " +
                         std::to_string(table[x][x]));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (table[x][static_cast<std::size_t>(table[x][y])] != static_cast<int>(y))
        note(bad_inv, "involutarity fails: " + std::to_string(x) + " |> (" + std::to_string(x) + " |> " +
                          std::to_string(y) + ") != " + std::to_string(y));

  report.is_rack = bad_rows == 0 && bad_sd == 0;
  report.is_quandle = report.is_rack && bad_idem == 0;
  report.is_kei = report.is_quandle && bad_inv == 0;
  return report;
}

FiniteQuandle::FiniteQuandle(OperationTable table) : table_(std::move(table)) {
  const auto report = check_axioms(table_);
  if (!report.is_rack)
    throw ValidationError("table is not a rack: " + (report.violations.empty() ? "" : report.violations.front()));
  quandle_ = report.is_quandle;
  const std::size_t n = table_.size();
  inverse_.assign(n, std::vector<int>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) inverse_[x][static_cast<std::size_t>(table_[x][y])] = static_cast<int>(y);
}

FiniteQuandle dihedral(int n) {
  if (n < 1) throw ValidationError("dihedral quandle needs n >= 1");
  OperationTable t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = mod(2L * x - y, n);
  return FiniteQuandle(std::move(t));
}

FiniteQuandle alexander_quandle(int n, int t) {
  if (n < 1) throw ValidationError("Alexander quandle needs n >= 1");
  if (std::gcd(mod(t, n), n) != 1 && n > 1)
    throw ValidationError("t = " + std::to_string(t) + " is not invertible modulo " + std::to_string(n));
  OperationTable tab(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      tab[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          mod(static_cast<long>(1 - t) * x + static_cast<long>(t) * y, n);
  return FiniteQuandle(std::move(tab));
}

FiniteQuandle trivial_quandle(int n) {
  if (n < 1) throw ValidationError("trivial quandle needs n >= 1");
  OperationTable t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& row : t) std::iota(row.begin(), row.end(), 0);
  return FiniteQuandle(std::move(t));
}

std::vector<int> canonical_automorphism(const OperationTable& table) {
  if (!check_axioms(table).is_rack) throw ValidationError("canonical automorphism needs a rack");
  std::vector<int> f(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) f[x] = table[x][x];
  return f;
}

std::size_t orbit_count(const FiniteQuandle& q) {
  const std::size_t n = q.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      parent[find(y)] = find(static_cast<std::size_t>(q.op(static_cast<int>(x), static_cast<int>(y))));
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i) roots += find(i) == i;
  return roots;
}

bool is_coloring(const Diagram& d, const FiniteQuandle& q, const Coloring& c) {
  if (c.size() != static_cast<std::size_t>(d.arc_count)) return false;
  for (int v : c)
    if (v < 0 || static_cast<std::size_t>(v) >= q.order()) return false;
  for (const auto& t : d.resolved)
    if (q.op(c[static_cast<std::size_t>(t.x)], c[static_cast<std::size_t>(t.y)]) != c[static_cast<std::size_t>(t.z)])
      return false;
  return true;
}

namespace {

class ColoringSearch {
public:
  ColoringSearch(const Diagram& d, const FiniteQuandle& q)
      : d_(d), q_(q), color_(static_cast<std::size_t>(d.arc_count), -1) {
    // Most-constrained arcs first.
    std::vector<int> degree(static_cast<std::size_t>(d.arc_count), 0);
    for (const auto& t : d.resolved)
      for (int a : {t.x, t.y, t.z}) ++degree[static_cast<std::size_t>(a)];
    order_.resize(degree.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)]; });
  }

  std::vector<Coloring> run() {
    search(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

private:
  int& at(int arc) { return color_[static_cast<std::size_t>(arc)]; }

  bool assign(int arc, int value) {
    if (at(arc) == -1) {
      at(arc) = value;
      trail_.push_back(arc);
      return true;
    }
    return at(arc) == value;
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& t : d_.resolved) {
        const int x = at(t.x), y = at(t.y), z = at(t.z);
        if (x < 0) continue;
        if (y >= 0) {
          const int v = q_.op(x, y);
          if (z < 0) changed = true;
          if (!assign(t.z, v)) return false;
        } else if (z >= 0) {
          changed = true;
          if (!assign(t.y, q_.op_inverse(x, z))) return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      at(trail_.back()) = -1;
      trail_.pop_back();
    }
  }

  void search(std::size_t k) {
    while (k < order_.size() && at(order_[k]) >= 0) ++k;
    if (k == order_.size()) {
      found_.push_back(color_);
      return;
    }
    const int arc = order_[k];
    for (int v = 0; v < static_cast<int>(q_.order()); ++v) {
      const std::size_t mark = trail_.size();
      assign(arc, v);
      if (propagate()) search(k + 1);
      undo(mark);
    }
  }

  const Diagram& d_;
  const FiniteQuandle& q_;
  Coloring color_;
  std::vector<int> order_;
  std::vector<int> trail_;
  std::vector<Coloring> found_;
};

} // namespace

std::vector<Coloring> colorings(const Diagram& d, const FiniteQuandle& q) {
  if (!q.is_quandle()) throw ValidationError("coloring target must be a quandle");
  return ColoringSearch(d, q).run();
}

FiniteQuandle quandle_from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  const auto num = [&](std::size_t i) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(parts.at(i), &used);
      if (used != parts[i].size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ParseError("bad quandle spec '" + spec + "'");
    }
  };
  if (parts.size() == 2 && parts[0] == "dihedral") return dihedral(num(1));
  if (parts.size() == 2 && parts[0] == "trivial") return trivial_quandle(num(1));
  if (parts.size() == 3 && parts[0] == "alexander") return alexander_quandle(num(1), num(2));
  throw ParseError("bad quandle spec '" + spec + "' (expected dihedral:n, alexander:n:t or trivial:n)");
}

} // namespace kq
