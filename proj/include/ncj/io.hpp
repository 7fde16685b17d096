#pragma once

#include "ncj/catalog.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>

namespace ncj {

using Json = nlohmann::ordered_json;

/// Scalars travel as strings ("3/2", "-7", residue digits); no floats
/// anywhere in any file.
inline Json algebra_to_json(const SuperAlgebra& a, const std::vector<std::string>& basis_names = {}) {
  Json j;
  j["name"] = a.name();
  j["field"] = a.field().to_string();
  j["dim"] = a.dim();
  j["parity"] = a.parity();
  if (!basis_names.empty()) j["basis_names"] = basis_names;
  Json prods = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      Json coeffs;
      bool any = false;
      for (std::size_t l = 0; l < a.dim(); ++l)
        if (!a.c(i, k, l).is_zero()) {
          coeffs[std::to_string(l)] = a.c(i, k, l).str();
          any = true;
        }
      if (any) prods.push_back(Json{{"i", i}, {"j", k}, {"coeffs", coeffs}});
    }
  j["products"] = prods;
  return j;
}

inline SuperAlgebra algebra_from_json(const Json& j) {
  if (!j.contains("field")) throw std::invalid_argument("algebra file: missing 'field'");
  Field f = Field::parse(j.at("field").get<std::string>());
  if (!j.contains("dim") || !j.contains("parity")) throw std::invalid_argument("algebra file: missing dim/parity");
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::uint8_t> parity = j.at("parity").get<std::vector<std::uint8_t>>();
  if (parity.size() != dim) throw std::invalid_argument("algebra file: parity length != dim");
  SuperAlgebra a(j.value("name", std::string("loaded")), f, parity);
  for (const Json& p : j.value("products", Json::array())) {
    std::size_t i = p.at("i").get<std::size_t>(), k = p.at("j").get<std::size_t>();
    if (i >= dim || k >= dim)
      throw std::invalid_argument("algebra file: product index out of range at i=" + std::to_string(i) +
                                  ",j=" + std::to_string(k));
    for (const auto& [key, val] : p.at("coeffs").items()) {
      std::size_t l = std::stoul(key);
      if (l >= dim) throw std::invalid_argument("algebra file: coefficient index out of range: " + key);
      a.set_c(i, k, l, f.parse_scalar(val.get<std::string>()));
    }
  }
  if (auto v = a.grading_violation())
    throw std::invalid_argument("algebra file: grading violation at (" + std::to_string((*v)[0]) + "," +
                                std::to_string((*v)[1]) + "," + std::to_string((*v)[2]) + ")");
  return a;
}

struct LoadedModule {
  SuperBimodule module;
  std::vector<Matrix> rminus;  // empty when the file carries none
};

inline Json module_to_json(const SuperBimodule& m, const std::vector<Matrix>& rminus = {}) {
  Json j;
  j["algebra"] = algebra_to_json(m.algebra());
  j["mdim"] = m.mdim();
  j["mparity"] = m.mparity();
  Json left = Json::array(), right = Json::array();
  for (std::size_t a = 0; a < m.algebra().dim(); ++a)
    for (std::size_t i = 0; i < m.mdim(); ++i) {
      Json coeffs;
      bool any = false;
      for (std::size_t k = 0; k < m.mdim(); ++k)
        if (!m.left(a, i, k).is_zero()) {
          coeffs[std::to_string(k)] = m.left(a, i, k).str();
          any = true;
        }
      if (any) left.push_back(Json{{"a", a}, {"m", i}, {"coeffs", coeffs}});
    }
  for (std::size_t i = 0; i < m.mdim(); ++i)
    for (std::size_t a = 0; a < m.algebra().dim(); ++a) {
      Json coeffs;
      bool any = false;
      for (std::size_t k = 0; k < m.mdim(); ++k)
        if (!m.right(i, a, k).is_zero()) {
          coeffs[std::to_string(k)] = m.right(i, a, k).str();
          any = true;
        }
      if (any) right.push_back(Json{{"m", i}, {"a", a}, {"coeffs", coeffs}});
    }
  j["left"] = left;
  j["right"] = right;
  if (!rminus.empty()) {
    Json rm = Json::array();
    for (std::size_t a = 0; a < rminus.size(); ++a)
      for (std::size_t i = 0; i < m.mdim(); ++i) {
        Json coeffs;
        bool any = false;
        for (std::size_t k = 0; k < m.mdim(); ++k)
          if (!rminus[a].at(i, k).is_zero()) {
            coeffs[std::to_string(k)] = rminus[a].at(i, k).str();
            any = true;
          }
        if (any) rm.push_back(Json{{"a", a}, {"m", i}, {"coeffs", coeffs}});
      }
    j["rminus"] = rm;
  }
  return j;
}

inline LoadedModule module_from_json(const Json& j, const Field& default_field) {
  SuperAlgebra alg = [&] {
    const Json& a = j.at("algebra");
    if (a.is_string()) {
      std::string s = a.get<std::string>();
      const std::string prefix = "catalog:";
      if (s.rfind(prefix, 0) == 0) return build_catalog(s.substr(prefix.size()), default_field);
      return build_catalog(s, default_field);
    }
    return algebra_from_json(a);
  }();
  const Field& f = alg.field();
  std::size_t mdim = j.at("mdim").get<std::size_t>();
  std::vector<std::uint8_t> mparity = j.at("mparity").get<std::vector<std::uint8_t>>();
  if (mparity.size() != mdim) throw std::invalid_argument("module file: mparity length != mdim");
  SuperBimodule m(alg, mparity);
  auto fill = [&](const char* key, bool left) {
    for (const Json& p : j.value(key, Json::array())) {
      std::size_t a = p.at("a").get<std::size_t>(), i = p.at("m").get<std::size_t>();
      if (a >= alg.dim() || i >= mdim) throw std::invalid_argument(std::string("module file: index out of range in ") + key);
      for (const auto& [kk, val] : p.at("coeffs").items()) {
        std::size_t k = std::stoul(kk);
        if (k >= mdim) throw std::invalid_argument(std::string("module file: coefficient index out of range in ") + key);
        Scalar s = f.parse_scalar(val.get<std::string>());
        if (left) m.set_left(a, i, k, s);
        else m.set_right(i, a, k, s);
      }
    }
  };
  fill("left", true);
  fill("right", false);
  if (auto v = m.grading_violation())
    throw std::invalid_argument("module file: grading violation at (a,m,k)=(" + std::to_string((*v)[0]) + "," +
                                std::to_string((*v)[1]) + "," + std::to_string((*v)[2]) + ")");
  LoadedModule out{std::move(m), {}};
  if (j.contains("rminus")) {
    out.rminus.assign(alg.dim(), Matrix(mdim, mdim, f));
    for (const Json& p : j.at("rminus")) {
      std::size_t a = p.at("a").get<std::size_t>(), i = p.at("m").get<std::size_t>();
      if (a >= alg.dim() || i >= mdim) throw std::invalid_argument("module file: index out of range in rminus");
      for (const auto& [kk, val] : p.at("coeffs").items()) {
        std::size_t k = std::stoul(kk);
        if (k >= mdim) throw std::invalid_argument("module file: coefficient index out of range in rminus");
        out.rminus[a].at(i, k) = f.parse_scalar(val.get<std::string>());
      }
    }
  }
  return out;
}

inline void save_algebra(const std::string& path, const SuperAlgebra& a) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_algebra: cannot open " + path);
  out << algebra_to_json(a).dump(2) << "\n";
}

inline SuperAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_algebra: cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("load_algebra: " + path + ": " + e.what());
  }
  return algebra_from_json(j);
}

inline void save_module(const std::string& path, const SuperBimodule& m, const std::vector<Matrix>& rminus = {}) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_module: cannot open " + path);
  out << module_to_json(m, rminus).dump(2) << "\n";
}

inline LoadedModule load_module(const std::string& path, const Field& default_field) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_module: cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("load_module: " + path + ": " + e.what());
  }
  return module_from_json(j, default_field);
}

}  // namespace ncj
