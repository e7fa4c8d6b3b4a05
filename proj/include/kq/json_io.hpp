#pragma once

#include "kq/abelian.hpp"
#include "kq/beck.hpp"
#include "kq/matrix.hpp"
#include "kq/quandle.hpp"

#include <json.hpp>

namespace kq {

using Json = nlohmann::ordered_json;

/// Row-major nested arrays of polynomial strings.
Json to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from_json(const Json& j);

/// Row-major nested arrays of integers.
Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

/// {"invariant_factors": [...], "free_rank": r}
Json to_json(const FiniteAbGroup& g);
FiniteAbGroup group_from_json(const Json& j);

/// {"n": n, "table": [[...]]}
Json to_json(const FiniteQuandle& q);
OperationTable table_from_json(const Json& j);
FiniteQuandle quandle_from_json(const Json& j);

/// {"base": <quandle json or spec string>, "groups": [[d1, d2, ...], ...],
///  "eps": [[matrix, ...], ...], "alpha": [[matrix, ...], ...]}
/// Groups are given by invariant factors (all finite).
Json to_json(const QuandleModule& m);
QuandleModule module_from_json(const Json& j);

/// Reads a whole file as JSON. Throws ParseError.
Json read_json_file(const std::string& path);

} // namespace kq
