#include "pbwdeg/serialize.hpp"

namespace pbwdeg {
namespace {

Json cell_array(const std::map<GradedProfile::Key, std::int64_t>& cells) {
  Json arr = Json::array();
  for (const auto& [key, dim] : cells) arr.push_back(Json::array({key.first, key.second.coords(), dim}));
  return arr;
}

std::map<GradedProfile::Key, std::int64_t> cells_from(const Json& arr) {
  std::map<GradedProfile::Key, std::int64_t> out;
  for (const auto& c : arr)
    out[{c.at(0).get<int>(), WeightVector(c.at(1).get<std::vector<int>>())}] += c.at(2).get<std::int64_t>();
  return out;
}

Json monomial_list(const PlueckerMonomial& m) {
  Json arr = Json::array();
  for (const auto& x : m) arr.push_back(x.to_string());
  return arr;
}

}  // namespace

Json to_json(const GradedProfile& p) {
  Json j;
  j["total"] = p.total();
  Json grades = Json::object();
  for (const auto& [m, dim] : p.by_grade()) grades[std::to_string(m)] = dim;
  j["by_grade"] = std::move(grades);
  j["by_grade_weight"] = cell_array(p.cells());
  return j;
}

GradedProfile profile_from_json(const Json& j) {
  GradedProfile p;
  for (const auto& [key, dim] : cells_from(j.at("by_grade_weight"))) p.add(key.first, key.second, dim);
  if (p.total() != j.at("total").get<std::int64_t>()) throw InputError("profile JSON: total mismatch");
  return p;
}

Json to_json(const KernelReport& r) {
  Json j;
  j["d_dim"] = r.d_dim;
  j["e_dim"] = r.e_dim;
  j["kernel_total"] = r.kernel_total;
  j["kernel_cells"] = cell_array(r.cells);
  return j;
}

KernelReport kernel_from_json(const Json& j) {
  KernelReport r;
  r.d_dim = j.at("d_dim").get<std::int64_t>();
  r.e_dim = j.at("e_dim").get<std::int64_t>();
  r.kernel_total = j.at("kernel_total").get<std::int64_t>();
  r.cells = cells_from(j.at("kernel_cells"));
  return r;
}

Json to_json(const ExponentVector& m) {
  Json arr = Json::array();
  for (const auto& [r, e] : m.exponents()) {
    Json entry;
    entry["root"] = Json::array({r.i, r.j});
    entry["exp"] = e;
    arr.push_back(std::move(entry));
  }
  return arr;
}

Json to_json(const LatticeSet& s) {
  Json arr = Json::array();
  for (const auto& m : s) arr.push_back(to_json(m));
  return arr;
}

Json to_json(const QCertificate& c) {
  Json j;
  j["restricted_zero"] = {{"pass", c.restricted_zero}, {"witness", c.restricted.to_string()}};
  j["full_nonzero"] = {{"pass", c.full_nonzero}, {"witness", c.full.to_string()}};

  Json excluded = Json::array();
  for (const auto& e : c.excluded) {
    Json monos = Json::array();
    for (const auto& m : e.monomials) monos.push_back(monomial_list(m));
    excluded.push_back({{"symbol", e.symbol.to_string()}, {"monomials", std::move(monos)}});
  }
  j["excluded_wt_empty"] = {{"pass", c.excluded_empty}, {"wt", c.wt}, {"symbols", std::move(excluded)}};

  Json factors = Json::array();
  for (const auto& f : c.second_factors)
    factors.push_back({{"symbol", f.symbol.to_string()}, {"p", f.p.to_string()}, {"divides", f.divisible}});
  j["divisibility"] = {{"pass", c.divisibility_ok},
                       {"divisor", c.divisor_symbol.to_string()},
                       {"divisor_p", c.divisor.to_string()},
                       {"divides_first_product", c.divides_first},
                       {"divides_second_product", c.divides_second_product},
                       {"second_factors", std::move(factors)}};
  j["all_pass"] = c.all_pass();
  return j;
}

}  // namespace pbwdeg
