// ncj: command-line front end for the exact superalgebra toolkit.
//
// Exit codes: 0 = all checks passed, 1 = a check failed, 2 = usage/parse
// error.

#include "ncj/ncj.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace ncj;

namespace {

struct CommonOpts {
  std::string catalog;
  std::string file;
  std::string field = "q";
  bool json = false;
};

Field field_of(const CommonOpts& c) { return Field::parse(c.field); }

SuperAlgebra load_input(const CommonOpts& c) {
  if (!c.catalog.empty() && !c.file.empty())
    throw std::invalid_argument("give either --catalog or --file, not both");
  if (!c.catalog.empty()) return build_catalog(c.catalog, field_of(c));
  if (!c.file.empty()) return load_algebra(c.file);
  throw std::invalid_argument("an algebra is required: --catalog NAME or --file PATH");
}

LoadedModule load_input_module(const std::string& spec, const Field& f) {
  if (spec.empty()) throw std::invalid_argument("a module is required: --module NAME-or-PATH");
  if (spec.find(".json") != std::string::npos) return load_module(spec, f);
  return LoadedModule{build_catalog_module(spec, f), {}};
}

Vec parse_vec(const std::string& csv, const Field& f, std::size_t dim) {
  Vec v;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      v.push_back(f.parse_scalar(cur));
      cur.clear();
    }
  };
  for (char ch : csv) {
    if (ch == ',') flush();
    else if (!isspace(static_cast<unsigned char>(ch))) cur += ch;
  }
  flush();
  if (v.size() != dim)
    throw std::invalid_argument("vector has " + std::to_string(v.size()) + " entries, expected " +
                                std::to_string(dim));
  return v;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

Vec default_idempotent(const SuperAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.is_idempotent(a.basis_vec(i))) return a.basis_vec(i);
  if (auto u = a.unit()) return *u;
  throw std::invalid_argument("no obvious idempotent; pass --idempotent");
}

int emit(const Json& j, bool as_json, const std::string& text, bool passed) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
  return passed ? 0 : 1;
}

Json report_json(const std::string& cmd, const CheckReport& r) {
  Json j;
  j["command"] = cmd;
  j["check"] = r.identity_name;
  j["verdict"] = r.passed ? "pass" : "fail";
  if (r.witness) {
    j["witness"]["indices"] = r.witness->indices;
    Json res = Json::array();
    for (const auto& s : r.witness->residual) res.push_back(s.str());
    j["witness"]["residual"] = res;
    j["witness"]["detail"] = r.witness->detail;
  }
  return j;
}

Json subspace_json(const Subspace& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Json row = Json::array();
    for (const auto& x : s.basis_row(i)) row.push_back(x.str());
    rows.push_back(row);
  }
  return Json{{"dim", s.dim()}, {"basis", rows}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for noncommutative Jordan superalgebras"};
  app.require_subcommand(1);
  CommonOpts c;

  std::string identity, lambda_str, with_name, idem_csv, vec_csv, out_path, module_spec, filter, zname, embed_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--catalog", c.catalog, "catalog algebra name, e.g. Dt(2,1,0,0)");
    sub->add_option("--file", c.file, "algebra JSON file");
    sub->add_option("--field", c.field, "base field: q or p<N>")->capture_default_str();
    sub->add_flag("--json", c.json, "machine-readable output");
  };

  CLI::App* ci = app.add_subcommand("check-identity", "verify a defining identity");
  ci->add_option("identity", identity, "flexible | jordan | ncj | poisson")->required();
  add_common(ci);

  CLI::App* pe = app.add_subcommand("peirce", "Peirce decomposition w.r.t. an idempotent");
  pe->add_option("--idempotent", idem_csv, "idempotent coordinates, comma separated");
  add_common(pe);

  CLI::App* eig = app.add_subcommand("eigenspace", "L_e eigenspace inside U_1");
  eig->add_option("--lambda", lambda_str, "eigenvalue")->required();
  eig->add_option("--idempotent", idem_csv, "idempotent coordinates");
  add_common(eig);

  CLI::App* mu = app.add_subcommand("mutate", "lambda-mutation of the algebra");
  mu->add_option("--lambda", lambda_str, "mutation parameter")->required();
  mu->add_option("--out", out_path, "write the result as JSON");
  add_common(mu);

  CLI::App* sy = app.add_subcommand("symmetrize", "the symmetrized superalgebra");
  sy->add_option("--out", out_path, "write the result as JSON");
  add_common(sy);

  CLI::App* te = app.add_subcommand("tensor", "graded tensor product with a second algebra");
  te->add_option("--with", with_name, "second catalog algebra")->required();
  te->add_option("--out", out_path, "write the result as JSON");
  add_common(te);

  CLI::App* hu = app.add_subcommand("hull", "unital hull");
  hu->add_option("--out", out_path, "write the result as JSON");
  add_common(hu);

  CLI::App* sn = app.add_subcommand("sne", "split null extension by a module");
  sn->add_option("--module", module_spec, "module: catalog name or JSON file")->required();
  sn->add_option("--out", out_path, "write the result as JSON");
  add_common(sn);

  CLI::App* mc = app.add_subcommand("module-check", "noncommutative Jordan bimodule checks");
  mc->add_option("--module", module_spec, "module: catalog name or JSON file")->required();
  add_common(mc);

  CLI::App* mg = app.add_subcommand("mod-gen", "submodule generated by a vector");
  mg->add_option("--module", module_spec, "module")->required();
  mg->add_option("--vector", vec_csv, "generator coordinates")->required();
  add_common(mg);

  CLI::App* ir = app.add_subcommand("irreducible", "absolute irreducibility (Burnside)");
  ir->add_option("--module", module_spec, "module")->required();
  add_common(ir);

  CLI::App* de = app.add_subcommand("decompose", "direct-sum decomposition of a module");
  de->add_option("--module", module_spec, "module")->required();
  add_common(de);

  CLI::App* is = app.add_subcommand("isomorphic", "small-dimension isomorphism search");
  is->add_option("--with", with_name, "second catalog algebra")->required();
  add_common(is);

  CLI::App* id = app.add_subcommand("ideals", "ideal generated by a vector");
  id->add_option("--vector", vec_csv, "generator coordinates")->required();
  add_common(id);

  CLI::App* si = app.add_subcommand("simple", "absolute simplicity via Burnside");
  add_common(si);

  CLI::App* co = app.add_subcommand("commutant", "supercommutant (default: of the whole algebra)");
  add_common(co);

  CLI::App* nu = app.add_subcommand("nucleus", "associative center");
  add_common(nu);

  CLI::App* dr = app.add_subcommand("derivations", "derivation superalgebra");
  dr->add_option("--module", module_spec, "derivations into a module instead of Reg");
  add_common(dr);

  CLI::App* in = app.add_subcommand("inner", "inner derivations of a Jordan algebra");
  add_common(in);

  CLI::App* kr = app.add_subcommand("kronecker", "Kronecker factorization U = Z (x) D");
  kr->add_option("--with", with_name, "the embedded algebra D (catalog name)")->required();
  kr->add_option("--z", zname, "build U = Z (x) D first (round-trip mode)");
  kr->add_option("--embed", embed_path, "JSON file with the embedding rows");
  add_common(kr);

  CLI::App* vp = app.add_subcommand("verify-paper", "run the whole verification battery");
  vp->add_option("--filter", filter, "substring filter on entry id/anchor");
  add_common(vp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Field f = field_of(c);
    if (ci->parsed()) {
      SuperAlgebra a = load_input(c);
      CheckReport r;
      if (identity == "flexible") r = check_flexible(a);
      else if (identity == "jordan") r = check_jordan(a);
      else if (identity == "ncj") r = check_noncommutative_jordan(a);
      else if (identity == "poisson") r = check_generic_poisson(symmetrize(a), bracket_algebra(a));
      else throw std::invalid_argument("unknown identity '" + identity + "'");
      return emit(report_json("check-identity", r), c.json, a.name() + ": " + r.summary(), r.passed);
    }
    if (pe->parsed()) {
      SuperAlgebra a = load_input(c);
      Vec e = idem_csv.empty() ? default_idempotent(a) : parse_vec(idem_csv, f, a.dim());
      PeirceDecomposition pd = peirce_decompose(a, e);
      CheckReport rel = verify_peirce_relations(a, e);
      Json j{{"command", "peirce"},
             {"idempotent", vec_str(e)},
             {"U0", subspace_json(pd.u(0))},
             {"U1", subspace_json(pd.u(1))},
             {"U2", subspace_json(pd.u(2))},
             {"relations", rel.passed ? "pass" : rel.summary()}};
      std::string text = a.name() + ": dims (U0,U1,U2) = (" + std::to_string(pd.u(0).dim()) + "," +
                         std::to_string(pd.u(1).dim()) + "," + std::to_string(pd.u(2).dim()) +
                         "); relations " + (rel.passed ? "PASS" : rel.summary());
      return emit(j, c.json, text, rel.passed);
    }
    if (eig->parsed()) {
      SuperAlgebra a = load_input(c);
      Vec e = idem_csv.empty() ? default_idempotent(a) : parse_vec(idem_csv, f, a.dim());
      Subspace s = eigenspace_u1(a, e, f.parse_scalar(lambda_str));
      return emit(Json{{"command", "eigenspace"}, {"space", subspace_json(s)}}, c.json,
                  "U_1^[" + lambda_str + "] has dim " + std::to_string(s.dim()), true);
    }
    auto save_or_print = [&](const SuperAlgebra& r) {
      if (!out_path.empty()) {
        save_algebra(out_path, r);
        std::cout << "wrote " << out_path << "\n";
      } else if (c.json) {
        std::cout << algebra_to_json(r).dump(2) << "\n";
      } else {
        std::cout << r.name() << ": dim " << r.dim() << "\n";
      }
      return 0;
    };
    if (mu->parsed()) return save_or_print(mutate(load_input(c), f.parse_scalar(lambda_str)));
    if (sy->parsed()) return save_or_print(symmetrize(load_input(c)));
    if (te->parsed()) return save_or_print(graded_tensor(load_input(c), build_catalog(with_name, f)));
    if (hu->parsed()) return save_or_print(unital_hull(load_input(c)));
    if (sn->parsed()) {
      LoadedModule m = load_input_module(module_spec, f);
      return save_or_print(split_null_extension(m.module.algebra(), m.module));
    }
    if (mc->parsed()) {
      LoadedModule m = load_input_module(module_spec, f);
      CheckReport r = check_ncj_bimodule(m.module.algebra(), m.module);
      Json j = report_json("module-check", r);
      std::string text = r.summary();
      if (!m.rminus.empty()) {
        SuperAlgebra u = m.module.algebra();
        RpmReport rr = check_via_rpm(u, m.module, m.rminus);
        j["rpm"] = report_json("module-check", rr.report);
        text += "; rpm route: " + rr.report.summary();
        r.passed = r.passed && rr.report.passed;
      }
      return emit(j, c.json, text, r.passed);
    }
    if (mg->parsed()) {
      LoadedModule m = load_input_module(module_spec, f);
      Subspace s = submodule_generated(m.module, parse_vec(vec_csv, f, m.module.mdim()));
      return emit(Json{{"command", "mod-gen"}, {"space", subspace_json(s)}}, c.json,
                  "Mod(m) has dim " + std::to_string(s.dim()), true);
    }
    if (ir->parsed()) {
      LoadedModule m = load_input_module(module_spec, f);
      IrredVerdict v = is_abs_irreducible(m.module);
      std::string kind = v.kind == Irreducibility::irreducible ? "irreducible"
                         : v.kind == Irreducibility::reducible ? "reducible"
                                                               : "undecided";
      Json j{{"command", "irreducible"}, {"verdict", kind}, {"envelope_dim", v.envelope_dim}};
      if (v.witness) j["witness"] = subspace_json(*v.witness);
      return emit(j, c.json, "absolutely " + kind + " (envelope dim " + std::to_string(v.envelope_dim) + ")",
                  v.kind == Irreducibility::irreducible);
    }
    if (de->parsed()) {
      LoadedModule m = load_input_module(module_spec, f);
      auto parts = decompose(m.module);
      Json list = Json::array();
      std::string text = std::to_string(parts.size()) + " summand(s):";
      for (const auto& p : parts) {
        std::string kind = p.verdict == Irreducibility::irreducible ? "irreducible"
                           : p.flagged_indecomposable_or_undetected ? "indecomposable-or-undetected"
                                                                    : "reducible";
        list.push_back(Json{{"dim", p.space.dim()}, {"kind", kind}});
        text += " dim " + std::to_string(p.space.dim()) + " (" + kind + ")";
      }
      return emit(Json{{"command", "decompose"}, {"summands", list}}, c.json, text, true);
    }
    if (is->parsed()) {
      SuperAlgebra a = load_input(c);
      SuperAlgebra b = build_catalog(with_name, f);
      IsoSearchResult r = search_isomorphism_small(a, b);
      std::string st = r.status == IsoStatus::found               ? "found"
                       : r.status == IsoStatus::none_found        ? "none-found"
                       : r.status == IsoStatus::requires_extension ? "requires field extension"
                                                                   : "unsupported shape";
      Json j{{"command", "isomorphic"}, {"status", st}, {"note", r.note}};
      if (r.map) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < r.map->rows(); ++i) {
          Json row = Json::array();
          for (std::size_t k = 0; k < r.map->cols(); ++k) row.push_back(r.map->at(i, k).str());
          rows.push_back(row);
        }
        j["map"] = rows;
      }
      return emit(j, c.json, a.name() + " = " + b.name() + "? " + st, r.status == IsoStatus::found);
    }
    if (id->parsed()) {
      SuperAlgebra a = load_input(c);
      Subspace s = ideal_generated(a, {parse_vec(vec_csv, f, a.dim())});
      return emit(Json{{"command", "ideals"}, {"space", subspace_json(s)}}, c.json,
                  "ideal has dim " + std::to_string(s.dim()), true);
    }
    if (si->parsed()) {
      SuperAlgebra a = load_input(c);
      SimplicityVerdict v = is_simple(a);
      std::string kind = v.kind == Simplicity::simple ? "simple"
                         : v.kind == Simplicity::not_simple ? "not simple"
                                                            : "undecided";
      Json j{{"command", "simple"}, {"verdict", kind}, {"envelope_dim", v.envelope_dim}};
      if (v.witness_ideal) j["witness_ideal"] = subspace_json(*v.witness_ideal);
      return emit(j, c.json, a.name() + ": " + kind, v.kind == Simplicity::simple);
    }
    if (co->parsed()) {
      SuperAlgebra a = load_input(c);
      Subspace s = commutative_center(a);
      return emit(Json{{"command", "commutant"}, {"space", subspace_json(s)}}, c.json,
                  "commutative center has dim " + std::to_string(s.dim()), true);
    }
    if (nu->parsed()) {
      SuperAlgebra a = load_input(c);
      Subspace s = nucleus(a);
      return emit(Json{{"command", "nucleus"}, {"space", subspace_json(s)}}, c.json,
                  "nucleus has dim " + std::to_string(s.dim()), true);
    }
    if (dr->parsed()) {
      SuperAlgebra a = load_input(c);
      Subspace s = module_spec.empty() ? derivations(a)
                                       : derivations_into(a, load_input_module(module_spec, f).module);
      int even = 0, odd = 0;
      for (auto p : s.parities()) (p ? odd : even)++;
      return emit(Json{{"command", "derivations"}, {"dim", s.dim()}, {"even", even}, {"odd", odd}}, c.json,
                  "Der has dim " + std::to_string(s.dim()) + " (even " + std::to_string(even) + ", odd " +
                      std::to_string(odd) + ")",
                  true);
    }
    if (in->parsed()) {
      SuperAlgebra a = load_input(c);
      Subspace s = inner_derivations(a);
      bool all = all_inner(a);
      return emit(Json{{"command", "inner"}, {"dim", s.dim()}, {"all_inner", all}}, c.json,
                  "inner derivations dim " + std::to_string(s.dim()) + (all ? " (all derivations inner)" : ""),
                  true);
    }
    if (kr->parsed()) {
      SuperAlgebra d = build_catalog(with_name, f);
      SuperAlgebra u = [&] {
        if (!zname.empty()) return graded_tensor(build_catalog(zname, f), d);
        return load_input(c);
      }();
      Matrix embed(d.dim(), u.dim(), f);
      if (!zname.empty()) {
        for (std::size_t j = 0; j < d.dim(); ++j) embed.at(j, j) = f.one();  // 1_Z (x) d
      } else if (!embed_path.empty()) {
        std::ifstream inps(embed_path);
        if (!inps) throw std::invalid_argument("cannot open " + embed_path);
        Json ej;
        inps >> ej;
        const Json& rows = ej.at("rows");
        if (rows.size() != d.dim()) throw std::invalid_argument("embed rows != dim D");
        for (std::size_t i = 0; i < d.dim(); ++i)
          for (std::size_t k = 0; k < u.dim(); ++k)
            embed.at(i, k) = f.parse_scalar(rows[i][k].get<std::string>());
      } else {
        throw std::invalid_argument("kronecker needs --z (round trip) or --embed FILE");
      }
      KroneckerResult r = kronecker_factor(u, embed, d);
      Json j{{"command", "kronecker"}, {"ok", r.ok}, {"diagnostic", r.diagnostic}};
      if (r.ok) j["z"] = algebra_to_json(r.z);
      return emit(j, c.json,
                  r.ok ? ("factored: Z has dim " + std::to_string(r.z.dim())) : ("failed: " + r.diagnostic),
                  r.ok);
    }
    if (vp->parsed()) {
      std::string field_filter = vp->count("--field") ? c.field : "";
      SuiteReport rep = run_paper_suite(filter, field_filter);
      if (c.json)
        std::cout << rep.to_json().dump(2) << "\n";
      else
        std::cout << rep.to_text();
      return rep.all_ok() ? 0 : 1;
    }
  } catch (const FieldExtensionError& e) {
    std::cerr << "requires field extension: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
