#include "camb/group_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace camb {

Scalar scalar_from_json(const Json& j, int d) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_object()) throw std::invalid_argument("scalar: expected integer or object");
  auto get = [&](const char* key, long dflt) -> long { return j.contains(key) ? j.at(key).get<long>() : dflt; };
  const Rat rat(BigInt(get("num", 0)), BigInt(get("den", 1)));
  const Rat surd(BigInt(get("surd_num", 0)), BigInt(get("surd_den", 1)));
  return Scalar(rat, surd, surd == 0 ? 1 : d);
}

Json scalar_to_json(const Scalar& s) {
  Json j;
  j["num"] = boost::multiprecision::numerator(s.rat()).str();
  j["den"] = boost::multiprecision::denominator(s.rat()).str();
  if (s.surd() != 0) {
    j["surd_num"] = boost::multiprecision::numerator(s.surd()).str();
    j["surd_den"] = boost::multiprecision::denominator(s.surd()).str();
    j["d"] = s.d();
  }
  return j;
}

Json root_to_json(const Vec& v) {
  Json j = Json::array();
  for (const Scalar& x : v) j.push_back(x.is_integer() ? Json(x.rat().str()) : scalar_to_json(x));
  return j;
}

CoxGroup group_from_json(const Json& j) {
  CoxeterMatrix cox;
  cox.names = j.at("generators").get<std::vector<std::string>>();
  cox.m = j.at("coxeter_matrix").get<std::vector<std::vector<int>>>();
  cox.validate();
  const int d = j.contains("d") ? j.at("d").get<int>() : 1;
  if (!j.contains("cartan")) return CoxGroup(standard_crystallographic_cartan(cox));
  const int n = cox.rank();
  Mat A(n, n);
  const Json& rows = j.at("cartan");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) A.at(i, k) = scalar_from_json(rows.at(i).at(k), d);
  std::optional<std::vector<Scalar>> delta;
  if (j.contains("delta")) {
    delta.emplace();
    for (const Json& x : j.at("delta")) delta->push_back(scalar_from_json(x, d));
  }
  return CoxGroup(validate_cartan(A, cox, delta));
}

CoxGroup load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  Json j;
  in >> j;
  return group_from_json(j);
}

CoxWord parse_cox_word(const CoxGroup& g, const std::string& csv, bool allow_subset) {
  CoxWord c;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    c.push_back(g.index_of(tok.substr(b, e - b + 1)));
  }
  check_cox_word(g, c);
  if (!allow_subset && static_cast<int>(c.size()) != g.rank())
    throw std::invalid_argument("Coxeter element must use every generator exactly once");
  return c;
}

}  // namespace camb
