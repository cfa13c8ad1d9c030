#include "capelli/json_io.hpp"

namespace capelli {

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json upoly_json(const UniPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rational_json(c));
  return arr;
}

UniPoly upoly_from_json(const Json& j, Symbol sym) {
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return UniPoly(sym, std::move(coeffs));
}

Json catalog_json() {
  Json rows = Json::array();
  for (const auto& c : list_cases()) {
    rows.push_back({{"case_id", c.case_id},
                    {"name", c.name},
                    {"size_rule", c.size_rule},
                    {"min_size", c.min_size},
                    {"deg_f_rule", c.deg_f_rule},
                    {"b_rule", c.b_rule},
                    {"b_rule_catalog", c.corrected_rule},
                    {"isotropy_g", c.isotropy_g},
                    {"isotropy_h", c.isotropy_h},
                    {"disputed", c.disputed},
                    {"dispute_note", c.dispute_note}});
  }
  return rows;
}

Json certificate_json(const BCertificate& cert) {
  Json roots = Json::array();
  for (const auto& [r, m] : cert.roots)
    for (int i = 0; i < m; ++i) roots.push_back(rational_json(r));
  return {{"case_id", cert.case_id},
          {"size", cert.size},
          {"b_monic", upoly_json(cert.b)},
          {"c", rational_json(cert.c)},
          {"b_expected", upoly_json(cert.b_expected)},
          {"b_catalog", upoly_json(cert.b_catalog)},
          {"roots", roots},
          {"verdict", verdict_name(cert.verdict)}};
}

BCertificate certificate_from_json(const Json& j) {
  BCertificate cert;
  cert.case_id = j.at("case_id").get<int>();
  cert.size = j.at("size").get<int>();
  cert.b = upoly_from_json(j.at("b_monic"), Symbol::S);
  cert.c = rational_from_json(j.at("c"));
  cert.b_expected = upoly_from_json(j.at("b_expected"), Symbol::S);
  cert.b_catalog = upoly_from_json(j.at("b_catalog"), Symbol::S);
  for (const auto& r : j.at("roots")) ++cert.roots[rational_from_json(r)];
  cert.verdict = parse_verdict(j.at("verdict").get<std::string>());
  return cert;
}

namespace {

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (j.size() != rows) throw std::invalid_argument("matrix JSON has the wrong number of rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw std::invalid_argument("matrix JSON has the wrong number of columns");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

}  // namespace

Json module_json(const GradedModule& t) {
  Json spaces = Json::array();
  Json weights = Json::array();
  for (const auto& [alpha, w] : t.spaces) {
    weights.push_back(rational_json(alpha));
    spaces.push_back({{"weight", rational_json(alpha)},
                      {"dim", w.dim},
                      {"F", matrix_json(w.F)},
                      {"D", matrix_json(w.D)},
                      {"N", matrix_json(w.N)},
                      {"f_open", w.f_open},
                      {"d_open", w.d_open}});
  }
  return {{"presentation", {{"d", t.pres->d}, {"B", upoly_json(t.pres->B)}}}, {"weights", weights}, {"spaces", spaces}};
}

GradedModule module_from_json(const Json& j) {
  GradedModule t;
  const Json& p = j.at("presentation");
  t.pres = std::make_shared<const APresentation>(p.at("d").get<int>(), upoly_from_json(p.at("B"), Symbol::Theta));
  const Rational d(t.pres->d);
  std::map<Rational, std::size_t> dims;
  for (const auto& s : j.at("spaces")) dims[rational_from_json(s.at("weight"))] = s.at("dim").get<std::size_t>();
  auto dim_at = [&](const Rational& a) {
    auto it = dims.find(a);
    return it == dims.end() ? std::size_t{0} : it->second;
  };
  for (const auto& s : j.at("spaces")) {
    const Rational alpha = rational_from_json(s.at("weight"));
    WeightSpace w;
    w.dim = s.at("dim").get<std::size_t>();
    w.F = matrix_from_json(s.at("F"), dim_at(alpha + d), w.dim);
    w.D = matrix_from_json(s.at("D"), dim_at(alpha - d), w.dim);
    w.N = matrix_from_json(s.at("N"), w.dim, w.dim);
    w.f_open = s.at("f_open").get<std::vector<bool>>();
    w.d_open = s.at("d_open").get<std::vector<bool>>();
    t.spaces.emplace(alpha, std::move(w));
  }
  return t;
}

}  // namespace capelli
