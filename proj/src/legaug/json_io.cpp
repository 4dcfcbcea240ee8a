// SPDX-License-Identifier: MIT

#include "legaug/json_io.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace legaug {

namespace {

using Json = nlohmann::ordered_json;

std::string kind_str(GenKind k) {
  return k == GenKind::reeb ? "reeb" : "basepoint";
}

GenKind kind_parse(const std::string& s) {
  if (s == "reeb") return GenKind::reeb;
  if (s == "basepoint") return GenKind::basepoint;
  throw Error("dga_from_json: unknown generator kind \"" + s + "\"");
}

std::string grading_str(Grading g) {
  switch (g) {
    case Grading::none: return "none";
    case Grading::weak: return "weak";
    default: return "strict";
  }
}

Grading grading_parse(const std::string& s) {
  if (s == "none") return Grading::none;
  if (s == "weak") return Grading::weak;
  if (s == "strict") return Grading::strict;
  throw Error("dga_from_json: unknown grading \"" + s + "\"");
}

std::string int_str(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string dga_to_json(const Dga& dga) {
  Json out;
  out["ring"] = dga.ring().str();
  out["components"] = dga.component_count();
  out["grading"] = grading_str(dga.grading());
  out["generators"] = Json::array();
  for (const GenInfo& g : dga.generators())
    out["generators"].push_back(Json{{"name", g.name},
                                     {"degree", g.degree},
                                     {"kind", kind_str(g.kind)},
                                     {"r", g.r},
                                     {"c", g.c}});
  Json diff = Json::object();
  std::set<std::string> names;
  for (const GenInfo& g : dga.generators())
    if (g.kind == GenKind::reeb) names.insert(g.name);
  for (const std::string& name : names) {
    NcPoly d = dga.differential(name);
    if (d.is_zero()) continue;
    Json terms = Json::array();
    for (const auto& [word, coef] : d.terms()) {
      Json syms = Json::array();
      for (const Symbol& s : word) syms.push_back(s.str());
      terms.push_back(Json::array({int_str(coef), syms}));
    }
    diff[name] = std::move(terms);
  }
  out["differential"] = std::move(diff);
  return out.dump(2) + "\n";
}

Dga dga_from_json(const std::string& text) {
  Json in;
  try {
    in = Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("dga_from_json: parse failure: ") + e.what());
  }
  if (!in.is_object() || !in.contains("ring") || !in.contains("generators") ||
      !in.contains("differential"))
    throw Error(
        "dga_from_json: expected object with ring, generators, differential");
  Ring ring = Ring::parse(in["ring"].get<std::string>());
  int components = in.value("components", 1);
  Grading grading = grading_parse(in.value("grading", std::string("none")));

  std::vector<GenInfo> gens;
  std::set<std::string> basepoints;
  for (const Json& g : in["generators"]) {
    GenInfo info{g.at("name").get<std::string>(), g.at("degree").get<int>(),
                 kind_parse(g.at("kind").get<std::string>()),
                 g.value("r", 1), g.value("c", 1)};
    if (info.kind == GenKind::basepoint) basepoints.insert(info.name);
    gens.push_back(std::move(info));
  }

  // Resolve a symbol token against the generator list so base-point symbols
  // are interned as invertible regardless of the exponent written.
  auto to_symbol = [&](const std::string& token) {
    bool inverse = false;
    std::string name = token;
    if (auto p = token.find("^-1"); p != std::string::npos) {
      if (p + 3 != token.size())
        throw Error("dga_from_json: malformed symbol \"" + token + "\"");
      name = token.substr(0, p);
      inverse = true;
    }
    if (basepoints.count(name)) return Symbol::inv(name, inverse ? -1 : 1);
    if (inverse)
      throw Error("dga_from_json: inverse of non-base-point \"" + name + "\"");
    return Symbol::gen(name);
  };

  std::map<std::string, NcPoly> diff;
  for (const auto& [name, terms] : in["differential"].items()) {
    NcPoly d = NcPoly::zero(ring);
    for (const Json& term : terms) {
      if (!term.is_array() || term.size() != 2)
        throw Error("dga_from_json: each term must be [coef, [symbols]]");
      Int coef(term[0].get<std::string>());
      Word word;
      for (const Json& s : term[1])
        word.push_back(to_symbol(s.get<std::string>()));
      d = d + NcPoly(ring, coef, word);
    }
    diff.insert_or_assign(name, std::move(d));
  }
  return Dga(ring, std::move(gens), std::move(diff), components, grading);
}

Dga load_dga_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_dga_json: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return dga_from_json(buf.str());
}

void save_dga_json(const Dga& dga, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_dga_json: cannot open " + path);
  out << dga_to_json(dga);
}

}  // namespace legaug
