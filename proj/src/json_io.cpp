#include "shv/json_io.hpp"

namespace shv {

namespace {

std::string rational_to_str(const Rational& r) { return r.str(); }

json endpoint_to_json(const Endpoint& e) {
  if (e.kind == Endpoint::NegInf) return "-inf";
  if (e.kind == Endpoint::PosInf) return "+inf";
  return e.value.str();
}

const json& field(const json& j, const char* name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + name + "\"");
  return *it;
}

bool bool_field(const json& j, const char* name, const std::string& where) {
  const json& v = field(j, name, where);
  if (!v.is_boolean()) throw ParseError(where + ": \"" + std::string(name) + "\" must be a boolean");
  return v.get<bool>();
}

long long int_field(const json& j, const char* name, const std::string& where) {
  const json& v = field(j, name, where);
  if (!v.is_number_integer()) throw ParseError(where + ": \"" + std::string(name) + "\" must be an integer");
  return v.get<long long>();
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError(where + ": expected a \"p/q\" string");
  auto r = Rational::parse(j.get<std::string>());
  if (!r) throw ParseError(where + ": bad rational literal \"" + j.get<std::string>() + "\"");
  return *r;
}

namespace {

Endpoint endpoint_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "-inf") return Endpoint::neg_inf();
    if (s == "+inf" || s == "inf") return Endpoint::pos_inf();
  }
  return Endpoint::at(rational_from_json(j, where));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                        const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " matrix rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError(where + ": expected " + std::to_string(cols) + " entries in row " +
                       std::to_string(i));
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = rational_from_json(j[i][c], where + " entry");
  }
  return m;
}

std::vector<Rational> points_from_json(const json& j, const std::string& where) {
  const json& p = field(j, "points", where);
  if (!p.is_array()) throw ParseError(where + ": \"points\" must be an array");
  std::vector<Rational> out;
  for (const auto& x : p) out.push_back(rational_from_json(x, where + ".points"));
  return out;
}

std::vector<std::size_t> dims_from_json(const json& j, const char* name, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": \"" + std::string(name) + "\" must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0)
      throw ParseError(where + ": dimensions must be non-negative integers");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

}  // namespace

json to_json(const LineSheaf& s) {
  json out;
  out["summands"] = json::array();
  for (const auto& sm : s.summands)
    out["summands"].push_back({{"lo", endpoint_to_json(sm.iv.lo)},
                               {"lo_closed", sm.iv.lo_closed},
                               {"hi", endpoint_to_json(sm.iv.hi)},
                               {"hi_closed", sm.iv.hi_closed},
                               {"deg", sm.deg},
                               {"mult", sm.mult}});
  return out;
}

json to_json(const CircleSheaf& s) {
  json out;
  out["wrapped"] = json::array();
  out["local"] = json::array();
  for (const auto& sm : s.wrapped)
    out["wrapped"].push_back({{"lo", sm.w.lo.str()},
                              {"len", sm.w.len.str()},
                              {"lo_closed", sm.w.lo_closed},
                              {"hi_closed", sm.w.hi_closed},
                              {"deg", sm.deg},
                              {"mult", sm.mult}});
  for (const auto& sm : s.local)
    out["local"].push_back(
        {{"alpha", sm.alpha.str()}, {"r", sm.r}, {"deg", sm.deg}, {"mult", sm.mult}});
  return out;
}

json to_json(const Covector& c) {
  return {{"base", c.base.str()},
          {"sign", c.sign >= 0 ? "+" : "-"},
          {"deg", c.deg},
          {"mult", c.mult}};
}

json to_json(const LineQuiverRep& r) {
  json out;
  out["space"] = "line";
  out["points"] = json::array();
  for (const auto& p : r.points) out["points"].push_back(p.str());
  out["spaces"] = {{"stalks", r.stalk_dim}, {"arcs", r.arc_dim}};
  out["arrows"] = json::array();
  for (std::size_t i = 0; i < r.points.size(); ++i)
    out["arrows"].push_back({{"left", matrix_to_json(r.left[i])}, {"right", matrix_to_json(r.right[i])}});
  return out;
}

json to_json(const CircleQuiverRep& r) {
  json out;
  out["space"] = "circle";
  out["points"] = json::array();
  for (const auto& p : r.points) out["points"].push_back(p.str());
  out["spaces"] = {{"stalks", r.stalk_dim}, {"arcs", r.arc_dim}};
  out["arrows"] = json::array();
  for (std::size_t i = 0; i < r.points.size(); ++i)
    out["arrows"].push_back({{"left", matrix_to_json(r.left[i])}, {"right", matrix_to_json(r.right[i])}});
  return out;
}

LineSheaf line_sheaf_from_json(const json& j) {
  const std::string where = "line sheaf";
  LineSheaf s;
  const json& arr = field(j, "summands", where);
  if (!arr.is_array()) throw ParseError(where + ": \"summands\" must be an array");
  for (const auto& e : arr) {
    Interval iv;
    iv.lo = endpoint_from_json(field(e, "lo", where), where + ".lo");
    iv.hi = endpoint_from_json(field(e, "hi", where), where + ".hi");
    iv.lo_closed = bool_field(e, "lo_closed", where);
    iv.hi_closed = bool_field(e, "hi_closed", where);
    if (!iv.valid()) throw ParseError(where + ": invalid interval " + iv.str());
    long long mult = int_field(e, "mult", where);
    if (mult <= 0) throw ParseError(where + ": mult must be positive");
    s.summands.push_back({iv, (int)int_field(e, "deg", where), (std::size_t)mult});
  }
  s.canonicalize();
  return s;
}

CircleSheaf circle_sheaf_from_json(const json& j) {
  const std::string where = "circle sheaf";
  CircleSheaf s;
  if (j.contains("wrapped"))
    for (const auto& e : j["wrapped"]) {
      WrappedInterval w;
      w.lo = rational_from_json(field(e, "lo", where), where + ".lo");
      w.len = rational_from_json(field(e, "len", where), where + ".len");
      w.lo_closed = bool_field(e, "lo_closed", where);
      w.hi_closed = bool_field(e, "hi_closed", where);
      if (!w.valid()) throw ParseError(where + ": invalid wrapped interval");
      long long mult = int_field(e, "mult", where);
      if (mult <= 0) throw ParseError(where + ": mult must be positive");
      s.wrapped.push_back({w, (int)int_field(e, "deg", where), (std::size_t)mult});
    }
  if (j.contains("local"))
    for (const auto& e : j["local"]) {
      Rational alpha = rational_from_json(field(e, "alpha", where), where + ".alpha");
      if (alpha.is_zero()) throw ParseError(where + ": alpha must be nonzero");
      long long r = int_field(e, "r", where);
      long long mult = int_field(e, "mult", where);
      if (r <= 0 || mult <= 0) throw ParseError(where + ": r and mult must be positive");
      s.local.push_back({alpha, (std::size_t)r, (int)int_field(e, "deg", where), (std::size_t)mult});
    }
  s.canonicalize();
  return s;
}

Covector covector_from_json(const json& j) {
  const std::string where = "covector";
  Covector c;
  c.base = rational_from_json(field(j, "base", where), where + ".base");
  const json& s = field(j, "sign", where);
  if (s == "+")
    c.sign = +1;
  else if (s == "-")
    c.sign = -1;
  else
    throw ParseError(where + ": sign must be \"+\" or \"-\"");
  if (j.contains("deg")) c.deg = (int)int_field(j, "deg", where);
  if (j.contains("mult")) c.mult = (std::size_t)int_field(j, "mult", where);
  return c;
}

std::variant<LineSheaf, CircleSheaf> sheaf_from_json(const json& j) {
  if (j.contains("summands")) return line_sheaf_from_json(j);
  if (j.contains("wrapped") || j.contains("local")) return circle_sheaf_from_json(j);
  throw ParseError("sheaf: expected \"summands\" (line) or \"wrapped\"/\"local\" (circle)");
}

std::variant<LineQuiverRep, CircleQuiverRep> rep_from_json(const json& j) {
  const std::string where = "representation";
  std::string space = field(j, "space", where).get<std::string>();
  auto points = points_from_json(j, where);
  const json& spaces = field(j, "spaces", where);
  auto stalks = dims_from_json(field(spaces, "stalks", where), "stalks", where);
  auto arcs = dims_from_json(field(spaces, "arcs", where), "arcs", where);
  const json& arrows = field(j, "arrows", where);
  if (!arrows.is_array() || arrows.size() != points.size())
    throw ParseError(where + ": need one arrow pair per marked point");

  auto read_arrows = [&](const std::vector<std::size_t>& left_rows,
                         const std::vector<std::size_t>& right_rows) {
    std::pair<std::vector<Matrix>, std::vector<Matrix>> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
      out.first.push_back(
          matrix_from_json(field(arrows[i], "left", where), left_rows[i], stalks[i], where));
      out.second.push_back(
          matrix_from_json(field(arrows[i], "right", where), right_rows[i], stalks[i], where));
    }
    return out;
  };

  if (space == "line") {
    if (stalks.size() != points.size() || arcs.size() != points.size() + 1)
      throw ParseError(where + ": line model needs n stalk and n+1 arc dimensions");
    std::vector<std::size_t> lrows(points.size()), rrows(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      lrows[i] = arcs[i];
      rrows[i] = arcs[i + 1];
    }
    auto [l, r] = read_arrows(lrows, rrows);
    LineQuiverRep rep{points, stalks, arcs, l, r};
    if (!rep.valid()) throw ParseError(where + ": inconsistent line model");
    return rep;
  }
  if (space == "circle") {
    std::size_t m = points.size();
    if (m == 0 || stalks.size() != m || arcs.size() != m)
      throw ParseError(where + ": circle model needs m >= 1 points with m stalk and m arc dimensions");
    std::vector<std::size_t> lrows(m), rrows(m);
    for (std::size_t i = 0; i < m; ++i) {
      lrows[i] = arcs[(i + m - 1) % m];
      rrows[i] = arcs[i];
    }
    auto [l, r] = read_arrows(lrows, rrows);
    CircleQuiverRep rep{points, stalks, arcs, l, r};
    if (!rep.valid()) throw ParseError(where + ": inconsistent circle model");
    return rep;
  }
  throw ParseError(where + ": \"space\" must be \"line\" or \"circle\"");
}

}  // namespace shv
