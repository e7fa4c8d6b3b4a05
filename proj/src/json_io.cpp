#include "kq/json_io.hpp"

#include "kq/error.hpp"

#include <fstream>

namespace kq {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& array_at(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  return j;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer '" + j.get<std::string>() + "'");
    return v;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

template <class T, class F>
Matrix<T> matrix_from_json(const Json& j, F&& entry) {
  array_at(j, "matrix");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? array_at(j[0], "matrix row").size() : 0;
  Matrix<T> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (array_at(j[r], "matrix row").size() != cols) throw ParseError("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(j[r][c]);
  }
  return m;
}

} // namespace

Json to_json(const LaurentMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

LaurentMatrix laurent_matrix_from_json(const Json& j) {
  return matrix_from_json<LaurentPoly>(j, [](const Json& e) {
    if (!e.is_string()) throw ParseError("polynomial entry must be a string, got " + e.dump());
    return LaurentPoly::parse(e.get<std::string>());
  });
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix int_matrix_from_json(const Json& j) { return matrix_from_json<Integer>(j, integer_from_json); }

Json to_json(const FiniteAbGroup& g) {
  Json f = Json::array();
  for (const auto& d : g.invariant_factors()) f.push_back(integer_to_json(d));
  return Json{{"invariant_factors", f}, {"free_rank", g.free_rank()}};
}

FiniteAbGroup group_from_json(const Json& j) {
  return guarded("group", [&] {
    std::vector<Integer> f;
    const Json& arr = j.is_array() ? j : j.at("invariant_factors");
    for (const auto& d : array_at(arr, "invariant factors")) f.push_back(integer_from_json(d));
    const std::size_t free = j.is_object() ? j.value("free_rank", std::size_t{0}) : 0;
    return FiniteAbGroup(std::move(f), free);
  });
}

Json to_json(const FiniteQuandle& q) { return Json{{"n", q.order()}, {"table", q.table()}}; }

OperationTable table_from_json(const Json& j) {
  return guarded("quandle", [&] {
    OperationTable t = j.at("table").get<OperationTable>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != t.size())
      throw ValidationError("quandle: \"n\" is " + j.at("n").dump() + " but the table has " +
                            std::to_string(t.size()) + " rows");
    return t;
  });
}

FiniteQuandle quandle_from_json(const Json& j) {
  if (j.is_string()) return quandle_from_spec(j.get<std::string>());
  return FiniteQuandle(table_from_json(j));
}

Json to_json(const QuandleModule& m) {
  Json groups = Json::array();
  for (const auto& g : m.groups) {
    Json f = Json::array();
    for (const auto& d : g.invariant_factors()) f.push_back(integer_to_json(d));
    groups.push_back(std::move(f));
  }
  auto maps = [](const std::vector<std::vector<IntMatrix>>& v) {
    Json out = Json::array();
    for (const auto& row : v) {
      Json r = Json::array();
      for (const auto& mat : row) r.push_back(to_json(mat));
      out.push_back(std::move(r));
    }
    return out;
  };
  return Json{{"base", to_json(m.base)}, {"groups", groups}, {"eps", maps(m.eps)}, {"alpha", maps(m.alpha)}};
}

QuandleModule module_from_json(const Json& j) {
  return guarded("module", [&] {
    QuandleModule m{quandle_from_json(j.at("base")), {}, {}, {}};
    for (const auto& g : array_at(j.at("groups"), "groups")) m.groups.push_back(group_from_json(g));
    auto maps = [](const Json& v) {
      std::vector<std::vector<IntMatrix>> out;
      for (const auto& row : array_at(v, "structure maps")) {
        std::vector<IntMatrix> r;
        for (const auto& mat : array_at(row, "structure maps")) r.push_back(int_matrix_from_json(mat));
        out.push_back(std::move(r));
      }
      return out;
    };
    m.eps = maps(j.at("eps"));
    m.alpha = maps(j.at("alpha"));
    validate_module_structure(m);
    return m;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

} // namespace kq
