#include "cfpop/problem_file.hpp"

#include <fstream>
#include <memory>
#include <stdexcept>

#include <json.hpp>

#include "cfpop/expr.hpp"

namespace cfpop {
namespace {

using nlohmann::json;

Expr parse_field(const json& j, const std::string& key, std::string_view vars) {
  if (!j.at(key).is_string())
    throw std::invalid_argument("problem file: '" + key + "' must be an expression string");
  return Expr::parse(j.at(key).get<std::string>(), vars);
}

RateFn rate_from_expr(Expr e) {
  auto p = std::make_shared<Expr>(std::move(e));
  return [p](double t, const GridMeasure& mu, std::span<double> out) {
    for (int j = 0; j <= mu.grid.J; ++j) out[j] = p->eval(mu.grid.site(j), 0.0, t);
  };
}

}  // namespace

LoadedProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("problem file '" + path + "': " + e.what());
  }

  LoadedProblem out;
  out.name = j.value("name", std::string("problem"));
  out.x_max = j.at("x_max").get<double>();
  out.T = j.at("T").get<double>();
  out.problem.x_max = out.x_max;

  if (j.contains("growth")) out.problem.growth = rate_from_expr(parse_field(j, "growth", "xt"));
  if (j.contains("death")) out.problem.death = rate_from_expr(parse_field(j, "death", "xt"));
  if (j.contains("birth")) out.problem.birth = rate_from_expr(parse_field(j, "birth", "xt"));

  if (j.contains("coag")) {
    auto p = std::make_shared<Expr>(parse_field(j, "coag", "xy"));
    out.problem.coag = [p](double x, double y) { return p->eval(x, y, 0.0); };
  }
  if (j.contains("frag")) {
    auto p = std::make_shared<Expr>(parse_field(j, "frag", "x"));
    out.problem.frag_rate = [p](double x) { return p->eval(x, 0.0, 0.0); };
  }
  if (j.contains("daughter")) {
    const json& d = j.at("daughter");
    if (d.contains("density")) {
      auto p = std::make_shared<Expr>(parse_field(d, "density", "xy"));
      out.problem.daughter.density = [p](double parent, double x) {
        return p->eval(x, parent, 0.0);
      };
    }
    for (const json& a : d.value("atoms", json::array())) {
      DaughterAtom atom;
      atom.site = a.at("site").get<double>();
      auto p = std::make_shared<Expr>(
          Expr::parse(a.at("weight").get<std::string>(), "y"));
      atom.weight = [p](double parent) { return p->eval(0.0, parent, 0.0); };
      out.problem.daughter.atoms.push_back(std::move(atom));
    }
  }
  if (out.problem.frag_rate && out.problem.daughter.empty())
    throw std::invalid_argument("problem file: 'frag' needs a 'daughter' entry");

  const json& init = j.at("initial");
  if (init.contains("density")) {
    auto p = std::make_shared<Expr>(parse_field(init, "density", "x"));
    out.initial.density = [p](double x) { return p->eval(x, 0.0, 0.0); };
  }
  for (const json& a : init.value("atoms", json::array())) {
    out.initial.atoms.site.push_back(a.at(0).get<double>());
    out.initial.atoms.weight.push_back(a.at(1).get<double>());
  }
  if (!out.initial.density && out.initial.atoms.site.empty())
    throw std::invalid_argument("problem file: 'initial' needs a density or atoms");

  if (j.contains("constants")) {
    const json& c = j.at("constants");
    out.problem.constants.zeta = c.at("zeta").get<double>();
    out.problem.constants.C_kappa = c.at("C_kappa").get<double>();
    out.problem.constants.C_a = c.at("C_a").get<double>();
    out.problem.constants.C_b = c.at("C_b").get<double>();
    out.problem.constants.zeta_bar = c.at("zeta_bar").get<double>();
    out.problem.constants_supplied = true;
  }
  return out;
}

}  // namespace cfpop
