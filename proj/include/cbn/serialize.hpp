#pragma once

#include <string>

#include "json.hpp"

#include "cbn/error.hpp"
#include "cbn/lpoly.hpp"
#include "cbn/matrix.hpp"

namespace cbn {

using json = nlohmann::json;

// [{"t": "1/3", "q": "-2", "c": "5"}, ...]
inline json to_json(LPoly const& p) {
  json a = json::array();
  for (auto const& x : p.terms())
    a.push_back({{"t", exponent_string(x.t12)}, {"q", exponent_string(x.q12)}, {"c", x.c.str()}});
  return a;
}

inline LPoly lpoly_from_json(json const& j) {
  if (!j.is_array()) throw Error("polynomial must be a JSON array of terms");
  std::vector<LPoly::Term> ts;
  for (auto const& t : j) {
    if (!t.is_object() || !t.contains("t") || !t.contains("q") || !t.contains("c"))
      throw Error("polynomial term needs keys t, q, c");
    ts.push_back({parse_exponent12(t.at("t").get<std::string>()), parse_exponent12(t.at("q").get<std::string>()),
                  Int(t.at("c").get<std::string>())});
  }
  return LPoly::from_terms(std::move(ts));
}

inline json entry_json(LPoly const& p) { return to_json(p); }
inline json entry_json(Int const& v) { return v.str(); }

template <class T>
json to_json(Matrix<T> const& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace ser_detail {
template <class T>
Matrix<T> matrix_from_json(json const& j, T (*entry)(json const&)) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) throw Error("matrix must be nested lists");
  std::size_t r = j.size(), c = j[0].size();
  Matrix<T> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (j[i].size() != c) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = entry(j[i][k]);
  }
  return m;
}
inline Int int_from_json(json const& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw Error("integer entry must be a string or number");
}
}  // namespace ser_detail

inline RMat rmat_from_json(json const& j) { return ser_detail::matrix_from_json<LPoly>(j, &lpoly_from_json); }
inline ZMat zmat_from_json(json const& j) { return ser_detail::matrix_from_json<Int>(j, &ser_detail::int_from_json); }

}  // namespace cbn
