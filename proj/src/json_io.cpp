#include "glhom/json_io.hpp"

#include <json.hpp>

namespace glhom {

using nlohmann::json;

namespace {

json coords_to_json(const std::vector<Rat>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rat_to_string(x));
  return arr;
}

std::vector<Rat> coords_from_json(const json& j) {
  std::vector<Rat> out;
  for (const auto& x : j) out.push_back(rat_from_string(x.get<std::string>()));
  return out;
}

}  // namespace

json algebra_to_json(const FinDimAlgebra& a) {
  json table = json::array();
  for (int i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.dim(); ++j) {
      json cell = json::object();
      for (const auto& [k, c] : a.product(i, j))
        cell[std::to_string(k)] = rat_to_string(c);
      row.push_back(std::move(cell));
    }
    table.push_back(std::move(row));
  }
  return json{{"dim", a.dim()},
              {"unit", coords_to_json(a.unit())},
              {"table", std::move(table)},
              {"label", a.label()}};
}

FinDimAlgebra algebra_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("algebra dim must be positive");
  std::vector<ProductRow> table(static_cast<std::size_t>(dim) * dim);
  const json& t = j.at("table");
  if (static_cast<int>(t.size()) != dim)
    throw std::invalid_argument("table must have dim rows");
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(t[i].size()) != dim)
      throw std::invalid_argument("table row must have dim entries");
    for (int k = 0; k < dim; ++k) {
      ProductRow row;
      for (const auto& [key, val] : t[i][k].items())
        row.push_back(
            {std::stoi(key), rat_from_string(val.get<std::string>())});
      table[static_cast<std::size_t>(i) * dim + k] = std::move(row);
    }
  }
  return FinDimAlgebra(dim, std::move(table), coords_from_json(j.at("unit")),
                       j.value("label", std::string("algebra")));
}

FinDimAlgebra ring_from_json(const json& j) {
  if (j.is_object()) return algebra_from_json(j);
  const auto label = j.get<std::string>();
  if (label == "Q") return FinDimAlgebra::base_field();
  if (label == "Q[eps]/(eps^2)") return FinDimAlgebra::dual_numbers();
  if (label.rfind("Q[Z/", 0) == 0 && label.back() == ']')
    return FinDimAlgebra::group_algebra_cyclic(
        std::stoi(label.substr(4, label.size() - 5)));
  if (label.rfind("Q[x]/(x^", 0) == 0 && label.back() == ')')
    return FinDimAlgebra::truncated_poly(
        std::stoi(label.substr(8, label.size() - 9)));
  throw std::invalid_argument("unknown builtin ring label: " + label);
}

json operator_to_json(const JacobiOperator& op) {
  json terms = json::array();
  for (const auto& [m, seq] : op.terms()) {
    json window = json::array();
    for (const auto& w : seq.window()) window.push_back(coords_to_json(w.coords));
    terms.push_back(json{{"offset", m},
                         {"left_tail", coords_to_json(seq.left_tail().coords)},
                         {"window_start", seq.window_start()},
                         {"window", std::move(window)},
                         {"right_tail",
                          coords_to_json(seq.right_tail().coords)}});
  }
  return json{{"ring", op.ring().label()}, {"terms", std::move(terms)}};
}

JacobiOperator operator_from_json(const json& j, const FinDimAlgebra& ring) {
  JacobiOperator op(ring);
  for (const auto& t : j.at("terms")) {
    AlgebraElement left(ring, coords_from_json(t.at("left_tail")));
    AlgebraElement right(ring, coords_from_json(t.at("right_tail")));
    std::vector<AlgebraElement> window;
    for (const auto& w : t.at("window"))
      window.emplace_back(ring, coords_from_json(w));
    op.set_term(t.at("offset").get<std::int64_t>(),
                TailSequence(std::move(left),
                             t.at("window_start").get<std::int64_t>(),
                             std::move(window), std::move(right)));
  }
  return op;
}

json report_to_json(const HomologyReport& r) {
  json dims = json::object();
  for (const auto& [n, d] : r.dims) dims[std::to_string(n)] = d;
  json out{{"label", r.label}, {"dims", std::move(dims)}};
  if (!r.prim_dims.empty()) {
    json pd = json::object();
    for (const auto& [n, d] : r.prim_dims) pd[std::to_string(n)] = d;
    out["prim_dims"] = std::move(pd);
  }
  return out;
}

HomologyReport report_from_json(const json& j) {
  HomologyReport r;
  r.label = j.at("label").get<std::string>();
  for (const auto& [k, v] : j.at("dims").items())
    r.dims[std::stoi(k)] = v.get<std::int64_t>();
  if (j.contains("prim_dims"))
    for (const auto& [k, v] : j.at("prim_dims").items())
      r.prim_dims[std::stoi(k)] = v.get<std::int64_t>();
  return r;
}

}  // namespace glhom
