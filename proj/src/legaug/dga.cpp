// SPDX-License-Identifier: MIT

#include "legaug/dga.hpp"

#include <algorithm>
#include <sstream>

namespace legaug {

// ---------------------------------------------------------------------------
// Dga

Dga::Dga(Ring ring, std::vector<GenInfo> generators,
         std::map<std::string, NcPoly> differential, int component_count,
         Grading grading)
    : ring_(ring),
      generators_(std::move(generators)),
      differential_(std::move(differential)),
      component_count_(component_count),
      grading_(grading) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const GenInfo& g = generators_[i];
    if (index_.count(g.name))
      throw Error("Dga: duplicate generator name " + g.name);
    index_.emplace(g.name, i);
    // Register interned symbols with the right invertibility up front.
    if (g.kind == GenKind::basepoint)
      (void)Symbol::inv(g.name, 1);
    else
      (void)Symbol::gen(g.name);
  }
  for (const auto& [name, p] : differential_) {
    if (!index_.count(name))
      throw Error("Dga: differential given for unknown generator " + name);
    if (p.ring() != ring_)
      throw Error("Dga: differential of " + name + " has wrong ring");
  }
}

const GenInfo& Dga::info(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error("Dga: unknown generator " + name);
  return generators_[it->second];
}

bool Dga::has_generator(const std::string& name) const {
  return index_.count(name) != 0;
}

NcPoly Dga::differential(const std::string& name) const {
  auto it = differential_.find(name);
  return it == differential_.end() ? NcPoly(ring_) : it->second;
}

std::vector<GenInfo> Dga::reeb_generators() const {
  std::vector<GenInfo> out;
  for (const GenInfo& g : generators_)
    if (g.kind == GenKind::reeb) out.push_back(g);
  return out;
}

std::vector<GenInfo> Dga::basepoints() const {
  std::vector<GenInfo> out;
  for (const GenInfo& g : generators_)
    if (g.kind == GenKind::basepoint) out.push_back(g);
  return out;
}

std::map<std::string, int> Dga::degree_map() const {
  std::map<std::string, int> out;
  for (const GenInfo& g : generators_) out.emplace(g.name, g.degree);
  return out;
}

std::map<std::string, NcPoly> Dga::differential_map() const {
  std::map<std::string, NcPoly> out;
  for (const GenInfo& g : generators_)
    if (g.kind == GenKind::reeb) out.emplace(g.name, differential(g.name));
  return out;
}

NcPoly Dga::d(const NcPoly& p) const {
  return extend_derivation(differential_map(), degree_map(), p);
}

// ---------------------------------------------------------------------------
// Validation

std::string DgaReport::str() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& p : problems) os << p << "\n";
  return os.str();
}

namespace {

/// (r, c) of one symbol under the DGA's grading; t^{-1} swaps r and c
/// (the weak-grading convention r(t) = c(t^{-1})).
std::pair<int, int> symbol_rc(const Dga& d, const Symbol& s) {
  const GenInfo& g = d.info(s.name());
  if (s.exp == -1) return {g.c, g.r};
  return {g.r, g.c};
}

/// Check that a word is composable from `r` to `c`.
bool word_composable(const Dga& d, const Word& w, int r, int c) {
  int expect = r;
  for (const Symbol& s : w) {
    auto [sr, sc] = symbol_rc(d, s);
    if (sr != expect) return false;
    expect = sc;
  }
  return expect == c;
}

}  // namespace

DgaReport check_dga(const Dga& d) {
  DgaReport report;
  auto degrees = d.degree_map();
  for (const GenInfo& g : d.generators()) {
    if (g.kind == GenKind::basepoint) {
      if (g.degree != 0)
        report.problems.push_back("base point " + g.name +
                                  " has nonzero degree");
      if (!d.differential(g.name).is_zero())
        report.problems.push_back("base point " + g.name +
                                  " has a differential");
      if (d.grading() == Grading::strict && g.r != g.c)
        report.problems.push_back("base point " + g.name +
                                  " is off-diagonal under a strict grading");
      continue;
    }
    NcPoly da = d.differential(g.name);
    if (!da.is_zero()) {
      try {
        auto deg = da.homogeneous_degree(degrees);
        if (deg && *deg != g.degree - 1)
          report.problems.push_back(
              "d(" + g.name + ") has degree " + std::to_string(*deg) +
              ", expected " + std::to_string(g.degree - 1));
      } catch (const Error&) {
        report.problems.push_back("d(" + g.name + ") is not homogeneous");
      }
    }
    NcPoly dda = d.d(da);
    if (!dda.is_zero())
      report.problems.push_back("d^2(" + g.name +
                                ") != 0, residual: " + dda.str());
    if (d.grading() != Grading::none) {
      for (const auto& [w, coef] : da.terms()) {
        if (!word_composable(d, w, g.r, g.c)) {
          report.problems.push_back("d(" + g.name + ") term \"" + word_str(w) +
                                    "\" is not composable from " +
                                    std::to_string(g.r) + " to " +
                                    std::to_string(g.c));
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Augmentations

const Int& Augmentation::value(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end())
    throw Error("Augmentation: no value for generator " + name);
  return it->second;
}

Int Augmentation::evaluate(const NcPoly& p) const {
  Int out = 0;
  for (const auto& [w, c] : p.terms()) {
    Int prod = c;
    for (const Symbol& s : w) {
      const Int& v = value(s.name());
      prod *= (s.exp == 1) ? v : ring.invert(v);
    }
    out += prod;
  }
  return ring.reduce(out);
}

DgaReport check_augmentation(const Dga& d, const Augmentation& eps) {
  DgaReport report;
  for (const GenInfo& g : d.generators()) {
    auto it = eps.values.find(g.name);
    if (it == eps.values.end()) {
      report.problems.push_back("no value for generator " + g.name);
      continue;
    }
    Int v = eps.ring.reduce(it->second);
    if (g.kind == GenKind::basepoint) {
      bool unit = (eps.ring.kind == Ring::Kind::Z) ? (v == 1 || v == -1)
                                                   : (v != 0);
      if (!unit)
        report.problems.push_back("eps(" + g.name + ") is not a unit");
    } else {
      if (g.degree != 0 && v != 0)
        report.problems.push_back("eps(" + g.name +
                                  ") != 0 on a generator of nonzero degree");
      if (d.grading() == Grading::strict && g.r != g.c && v != 0)
        report.problems.push_back("eps(" + g.name + ") != 0 on a mixed chord");
    }
  }
  if (!report.ok()) return report;
  for (const GenInfo& g : d.reeb_generators()) {
    Int v = eps.evaluate(change_ring(d.differential(g.name), eps.ring));
    if (v != 0)
      report.problems.push_back("eps(d(" + g.name + ")) = " + v.str() +
                                " != 0");
  }
  return report;
}

bool is_augmentation(const Dga& d, const Augmentation& eps) {
  return check_augmentation(d, eps).ok();
}

NcPoly change_ring(const NcPoly& p, Ring target) {
  if (p.ring() == target) return p;
  if (p.ring().kind != Ring::Kind::Z)
    throw Error("change_ring: only Z -> F_p conversion is supported");
  NcPoly out(target);
  for (const auto& [w, c] : p.terms())
    out = out + NcPoly(target, c, w);
  return out;
}

Dga change_ring(const Dga& d, Ring target) {
  if (d.ring() == target) return d;
  std::map<std::string, NcPoly> diff;
  for (const auto& [name, p] : d.differential_map())
    diff.emplace(name, change_ring(p, target));
  return Dga(target, d.generators(), std::move(diff), d.component_count(),
             d.grading());
}

Dga twist(const Dga& d, const Augmentation& eps) {
  {
    auto report = check_augmentation(d, eps);
    if (!report.ok())
      throw Error("twist: invalid augmentation:\n" + report.str());
  }
  Ring ring = eps.ring;
  // Substitution phi_eps: a -> a + eps(a), t^{±1} -> eps(t^{±1}).
  std::map<std::string, NcPoly> values;
  for (const GenInfo& g : d.generators()) {
    if (g.kind == GenKind::basepoint) {
      Int v = ring.reduce(eps.value(g.name));
      values.insert_or_assign(g.name, NcPoly(ring, v));
      values.insert_or_assign(g.name + "^-1", NcPoly(ring, ring.invert(v)));
    } else {
      values.insert_or_assign(g.name,
                                NcPoly::symbol(ring, Symbol::gen(g.name)) +
                                    NcPoly(ring, eps.value(g.name)));
    }
  }
  std::vector<GenInfo> gens = d.reeb_generators();
  std::map<std::string, NcPoly> diff;
  for (const GenInfo& g : gens) {
    NcPoly image = extend_hom(values, change_ring(d.differential(g.name), ring));
    if (image.constant_term() != 0)
      throw Error("twist: d_eps(" + g.name + ") has a constant term " +
                  image.constant_term().str() +
                  " (eps is not an augmentation?)");
    diff.emplace(g.name, image);
  }
  return Dga(ring, std::move(gens), std::move(diff), d.component_count(),
             d.grading());
}

// ---------------------------------------------------------------------------
// Component restriction

Dga restrict_to_components(const Dga& d, const std::set<int>& I) {
  if (d.grading() != Grading::strict)
    throw Error(
        "restrict_to_components: requires a strict link grading "
        "(weak gradings may have off-diagonal base points)");
  for (int i : I)
    if (i < 1 || i > d.component_count())
      throw Error("restrict_to_components: component index out of range");
  std::map<int, int> relabel;
  for (int i : I) relabel.emplace(i, static_cast<int>(relabel.size()) + 1);

  std::vector<GenInfo> gens;
  std::map<std::string, NcPoly> values;  // substitution for differentials
  std::vector<std::string> dropped_basepoints;
  for (const GenInfo& g : d.generators()) {
    bool keep = I.count(g.r) && I.count(g.c);
    if (keep) {
      GenInfo h = g;
      h.r = relabel.at(g.r);
      h.c = relabel.at(g.c);
      gens.push_back(h);
    }
    if (g.kind == GenKind::basepoint) {
      // Base points are never deleted from words directly; composability
      // guarantees dropped ones only occur next to dropped reeb generators.
      values.insert_or_assign(g.name, NcPoly::symbol(d.ring(), Symbol::inv(g.name, 1)));
      values.insert_or_assign(g.name + "^-1", NcPoly::symbol(d.ring(), Symbol::inv(g.name, -1)));
      if (!keep) dropped_basepoints.push_back(g.name);
    } else {
      values.insert_or_assign(
          g.name, keep ? NcPoly::symbol(d.ring(), Symbol::gen(g.name))
                       : NcPoly(d.ring()));
    }
  }
  std::map<std::string, NcPoly> diff;
  for (const GenInfo& g : gens) {
    if (g.kind != GenKind::reeb) continue;
    NcPoly image = extend_hom(values, d.differential(g.name));
    for (const auto& [w, c] : image.terms())
      for (const Symbol& s : w)
        for (const std::string& t : dropped_basepoints)
          if (s.name() == t)
            throw Error("restrict_to_components: dropped base point " + t +
                        " survives in d(" + g.name + ")");
    diff.emplace(g.name, image);
  }
  return Dga(d.ring(), std::move(gens), std::move(diff),
             static_cast<int>(I.size()), Grading::strict);
}

}  // namespace legaug
