#include "trialg/serialize.hpp"

#include <fstream>

#include <json.hpp>

namespace trialg {

namespace {

using json = nlohmann::ordered_json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& rows, std::size_t n, const char* what) {
  if (!rows.is_array() || rows.size() != n)
    throw FileError(std::string("bad ") + what + ": expected " + std::to_string(n) +
                    " rows");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw FileError(std::string("bad ") + what + ": row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = Scalar::parse(rows[i][j].get<std::string>());
  }
  return m;
}

}  // namespace

std::string to_json_text(const AlgebraFile& f) {
  json j;
  j["name"] = f.name;
  j["dim"] = f.alg.dim();
  j["basis"] = f.alg.labels();
  json products = json::array();
  for (std::size_t i = 0; i < f.alg.dim(); ++i)
    for (std::size_t k = 0; k < f.alg.dim(); ++k) {
      const auto& row = f.alg.basis_product(i, k);
      if (row.empty()) continue;
      json comps = json::array();
      for (const auto& [l, c] : row) comps.push_back(json::array({l, c.str()}));
      products.push_back(json::array({i, k, std::move(comps)}));
    }
  j["products"] = std::move(products);
  if (f.grading) j["grading"] = *f.grading;
  if (f.action) {
    j["action"] = json{{"sigma", matrix_to_json(f.action->sigma)},
                       {"rho", matrix_to_json(f.action->rho)}};
  }
  return j.dump(2) + "\n";
}

AlgebraFile algebra_file_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw FileError(std::string("invalid JSON: ") + e.what());
  }
  try {
    AlgebraFile f;
    f.name = j.value("name", "");
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
    if (labels.size() != dim) throw FileError("basis size differs from dim");
    std::vector<Scalar> sc(dim * dim * dim);
    for (const auto& entry : j.at("products")) {
      std::size_t i = entry.at(0).get<std::size_t>();
      std::size_t k = entry.at(1).get<std::size_t>();
      if (i >= dim || k >= dim) throw FileError("product index out of range");
      for (const auto& comp : entry.at(2)) {
        std::size_t l = comp.at(0).get<std::size_t>();
        if (l >= dim) throw FileError("component index out of range");
        sc[(i * dim + k) * dim + l] = Scalar::parse(comp.at(1).get<std::string>());
      }
    }
    f.alg = Algebra(std::move(labels), std::move(sc));
    if (j.contains("grading")) {
      auto g = j["grading"].get<std::vector<int>>();
      if (g.size() != dim) throw FileError("grading size differs from dim");
      f.grading = std::move(g);
    }
    if (j.contains("action")) {
      S3Action act{matrix_from_json(j["action"].at("sigma"), dim, "sigma"),
                   matrix_from_json(j["action"].at("rho"), dim, "rho")};
      f.action = std::move(act);
    }
    return f;
  } catch (const FileError&) {
    throw;
  } catch (const std::exception& e) {
    throw FileError(std::string("malformed algebra file: ") + e.what());
  }
}

void save_algebra_file(const AlgebraFile& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot open '" + path + "' for writing");
  out << to_json_text(f);
  if (!out) throw FileError("write failed for '" + path + "'");
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return algebra_file_from_json_text(text);
}

std::string report_to_json_text(const Report& r) {
  json j;
  j["subject"] = r.subject;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["witnesses"] = c.witnesses;
    checks.push_back(std::move(item));
  }
  j["checks"] = std::move(checks);
  json q = json::object();
  for (const auto& [k, v] : r.quantities) q[k] = v;
  j["quantities"] = std::move(q);
  j["ok"] = r.ok();
  return j.dump(2) + "\n";
}

}  // namespace trialg
