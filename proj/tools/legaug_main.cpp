// SPDX-License-Identifier: MIT
//
// legaug: batch command-line interface. Subcommands:
//   dga         emit the raw-DGA JSON of a plat (or a section of it)
//   mcopy       emit the raw-DGA JSON of the m-copy of a DGA
//   augs        list augmentations over a finite field
//   cohomology  hom-cohomology ranks for one augmentation pair
//   mtable      composition tables m_k on basis tuples
//   iso         homotopy/isomorphism decision for one pair
//   verify      structural verification suites (exit 2 on failure)
//   slice-check randomized front-slice/Morse-complex verification
//
// Exit codes: 0 success, 1 domain or usage error, 2 verification failure.
// Output is deterministic for identical inputs.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "legaug/augcat.hpp"
#include "legaug/bordered.hpp"
#include "legaug/json_io.hpp"
#include "legaug/mcopy.hpp"
#include "legaug/slice_mc.hpp"

namespace {

using namespace legaug;
using Json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// "Z", "Fp:p", or a bare prime.
Ring parse_field(const std::string& spec) {
  Ring r = (spec == "Z" || spec.rfind("Fp:", 0) == 0)
               ? Ring::parse(spec)
               : Ring::fp(std::stoi(spec));
  if (r.is_field() && r.p > 251) throw Error("field characteristic > 251");
  return r;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::string int_str(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// A loaded input: a plat (with its assembly) or a raw DGA.
struct Input {
  std::optional<PlatDiagram> plat;
  std::optional<AssembleResult> assembled;
  std::optional<Dga> dga;

  const Dga& the_dga() const {
    return assembled ? assembled->dga : *dga;
  }
};

bool looks_like_json(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

Input load_input(const std::string& path, Ring ring,
                 const std::vector<int>& flips) {
  Input in;
  std::string text = slurp(path);
  if (looks_like_json(text)) {
    in.dga = dga_from_json(text);
    if (!flips.empty())
      throw Error("--flip-component applies only to plat inputs");
  } else {
    in.plat = parse_plat(text);
    in.assembled = assemble(*in.plat, ring, flips);
  }
  return in;
}

/// One augmentation as "name=value ..." in generator-table order.
std::string aug_line(const Dga& dga, const Augmentation& eps) {
  std::string out;
  for (const GenInfo& g : dga.generators()) {
    if (!eps.values.count(g.name)) continue;
    if (!out.empty()) out += " ";
    out += g.name + "=" + int_str(eps.value(g.name));
  }
  return out;
}

Json aug_json(const Dga& dga, const Augmentation& eps) {
  Json out = Json::object();
  for (const GenInfo& g : dga.generators())
    if (eps.values.count(g.name)) out[g.name] = int_str(eps.value(g.name));
  return out;
}

Augmentation pick_aug(const std::vector<Augmentation>& augs, int index) {
  if (index < 1 || index > static_cast<int>(augs.size()))
    throw Error("augmentation index " + std::to_string(index) +
                " out of range 1.." + std::to_string(augs.size()));
  return augs[static_cast<std::size_t>(index - 1)];
}

// ---------------------------------------------------------------------------
// Verification suites

int count_components(const Input& in) {
  if (in.assembled) return in.assembled->trace.components;
  return in.the_dga().component_count();
}

CheckReport verify_ainfty(const AugCategory& cat,
                          const std::vector<Augmentation>& augs,
                          int max_arity) {
  CheckReport rep;
  std::mt19937 rng(20260824);
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  int checked = 0;
  for (HomDirection dir : {HomDirection::plus, HomDirection::minus}) {
    const HomBasis& basis = cat.basis(dir);
    if (basis.size() == 0) continue;
    for (int arity = 1; arity <= max_arity; ++arity)
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<Augmentation> chain;
        for (int i = 0; i <= arity; ++i) chain.push_back(augs[pick(augs.size())]);
        std::vector<HomElement> args;
        for (int i = 0; i < arity; ++i)
          args.push_back(HomElement::basis(
              cat.field(), basis.at(pick(basis.size())).label));
        HomElement defect = cat.ainfty_defect(dir, chain, args);
        ++checked;
        if (!defect.is_zero())
          rep.problems.push_back("A-infinity defect nonzero at arity " +
                                 std::to_string(arity) + ": " + defect.str());
      }
  }
  rep.notes.push_back("A-infinity relations: " + std::to_string(checked) +
                      " random tuples, arity <= " + std::to_string(max_arity));
  return rep;
}

CheckReport verify_unit(const AugCategory& cat,
                        const std::vector<Augmentation>& augs) {
  CheckReport rep;
  HomElement unit = cat.unit();
  const HomBasis& basis = cat.basis(HomDirection::plus);
  for (const Augmentation& e1 : augs)
    for (const Augmentation& e2 : augs)
      for (std::size_t i = 0; i < basis.size(); ++i) {
        HomElement f = HomElement::basis(cat.field(), basis.at(i).label);
        if (cat.mk(HomDirection::plus, {e1, e2, e2}, {unit, f}) != f)
          rep.problems.push_back("m2(unit, " + f.str() + ") != identity");
        if (cat.mk(HomDirection::plus, {e1, e1, e2}, {f, unit}) != f)
          rep.problems.push_back("m2(" + f.str() + ", unit) != identity");
        if (!cat.mk(HomDirection::plus, {e1, e1, e2, e2}, {unit, f, unit})
                 .is_zero())
          rep.problems.push_back("m3 with unit argument nonzero on " +
                                 f.str());
      }
  rep.notes.push_back("strict unit axioms on " +
                      std::to_string(augs.size() * augs.size()) + " pairs");
  return rep;
}

CheckReport verify_pairwise(const AugCategory& cat,
                            const std::vector<Augmentation>& augs,
                            bool duality) {
  CheckReport rep;
  for (const Augmentation& e1 : augs)
    for (const Augmentation& e2 : augs) {
      CheckReport one =
          duality ? cat.duality_check(e1, e2) : cat.exact_sequence_check(e1, e2);
      for (const std::string& p : one.problems) rep.problems.push_back(p);
    }
  rep.notes.push_back(std::string(duality ? "duality" : "exact sequence") +
                      " on " + std::to_string(augs.size() * augs.size()) +
                      " pairs");
  return rep;
}

CheckReport verify_cosheaf(const Input& in, Ring ring) {
  CheckReport rep;
  if (!in.plat) {
    rep.problems.push_back("cosheaf verification requires a plat input");
    return rep;
  }
  const PlatDiagram& d = *in.plat;
  const Dga& full = in.assembled->dga;
  int r = d.num_crossings();
  for (int split = 0; split <= r; ++split) {
    SectionResult left = sections(d, 0, split, ring);
    SectionResult right = sections(d, split + 1, r + 1, ring);
    Dga glued = glue_sections(left, right);
    std::map<std::string, std::pair<int, std::string>> want, got;
    for (const GenInfo& g : full.generators())
      want[g.name] = {g.degree, full.differential(g.name).str()};
    for (const GenInfo& g : glued.generators())
      got[g.name] = {g.degree, glued.differential(g.name).str()};
    if (want != got)
      rep.problems.push_back("pushout mismatch at split " +
                             std::to_string(split));
  }
  rep.notes.push_back("cosheaf pushout at " + std::to_string(r + 1) +
                      " splits");
  return rep;
}

CheckReport verify_leverson(const Input& in, const AugCategory& cat,
                            const std::vector<Augmentation>& augs) {
  CheckReport rep;
  if (count_components(in) != 1) {
    rep.notes.push_back("base-point product check skipped: not a knot");
    return rep;
  }
  for (const Augmentation& eps : augs) {
    Int prod = 1;
    for (const GenInfo& g : cat.dga().generators())
      if (g.kind == GenKind::basepoint)
        prod = cat.field().reduce(prod * eps.value(g.name));
    if (prod != cat.field().reduce(-1))
      rep.problems.push_back("base-point product != -1 on " +
                             aug_line(cat.dga(), eps));
  }
  rep.notes.push_back("base-point product -1 on " +
                      std::to_string(augs.size()) + " augmentations");
  return rep;
}

CheckReport verify_tb(const Input& in, const AugCategory& cat,
                      const std::vector<Augmentation>& augs) {
  CheckReport rep;
  if (!in.plat) {
    rep.problems.push_back("tb verification requires a plat input");
    return rep;
  }
  if (count_components(in) != 1) {
    rep.notes.push_back(
        "tb check skipped: not a knot (mixed-chord parity depends on the "
        "Maslov normalization)");
    return rep;
  }
  ClassicalInvariants inv =
      classical_invariants(*in.plat, in.assembled->trace);
  for (const Augmentation& eps : augs) {
    long long chi = 0;
    for (const auto& [k, dim] : cat.cohomology(HomDirection::minus, eps, eps))
      chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(dim);
    if (chi != -inv.tb_total)
      rep.problems.push_back(
          "-tb != euler characteristic of self-Hom_- on " +
          aug_line(cat.dga(), eps));
  }
  rep.notes.push_back("-tb = chi(Hom_-) on " + std::to_string(augs.size()) +
                      " augmentations (tb = " + std::to_string(inv.tb_total) +
                      ")");
  return rep;
}

// ---------------------------------------------------------------------------

int real_main(int argc, char** argv) {
  CLI::App app{
      "legaug: augmentation categories of Legendrian links in plat position"};
  app.require_subcommand(1);

  std::string path, field_spec = "Fp:2", ring_spec = "Z";
  std::string pair_spec = "1,1", direction = "plus", sections_spec;
  std::string mu_spec, augs_spec, what;
  std::vector<int> flips;
  int m = 2, arity_k = 2, max_arity = 3, n = 4, trials = 100;
  bool as_json = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", path, "plat file or raw-DGA JSON file")
        ->required();
    cmd->add_option("--flip-component", flips,
                    "reverse the orientation of a component (repeatable)");
  };

  CLI::App* c_dga = app.add_subcommand("dga", "emit the raw-DGA JSON");
  add_input(c_dga);
  c_dga->add_option("--ring", ring_spec, "Z or Fp:p (default Z)");
  c_dga->add_option("--sections", sections_spec,
                    "slice range lo..hi (bordered section DGA)");

  CLI::App* c_mcopy = app.add_subcommand("mcopy", "emit the m-copy JSON");
  add_input(c_mcopy);
  c_mcopy->add_option("--m", m, "number of copies")->required();
  c_mcopy->add_option("--ring", ring_spec, "Z or Fp:p (default Z)");

  CLI::App* c_augs = app.add_subcommand("augs", "list augmentations");
  add_input(c_augs);
  c_augs->add_option("--field", field_spec, "finite field (default Fp:2)");
  c_augs->add_flag("--json", as_json, "JSON output");

  CLI::App* c_coh = app.add_subcommand("cohomology", "hom cohomology ranks");
  add_input(c_coh);
  c_coh->add_option("--field", field_spec, "finite field (default Fp:2)");
  c_coh->add_option("--pair", pair_spec, "augmentation indices i,j");
  c_coh->add_option("--direction", direction, "plus or minus");
  c_coh->add_flag("--json", as_json, "JSON output");

  CLI::App* c_mtable = app.add_subcommand("mtable", "composition tables");
  add_input(c_mtable);
  c_mtable->add_option("--k", arity_k, "arity (1..4)")
      ->check(CLI::Range(1, 4));
  c_mtable->add_option("--field", field_spec, "finite field (default Fp:2)");
  c_mtable->add_option("--augs", augs_spec,
                       "augmentation chain i1,...,i_{k+1} (default all 1)");
  c_mtable->add_option("--direction", direction, "plus or minus");
  c_mtable->add_flag("--json", as_json, "JSON output");

  CLI::App* c_iso = app.add_subcommand("iso", "homotopy/isomorphism decision");
  add_input(c_iso);
  c_iso->add_option("--field", field_spec, "finite field (default Fp:2)");
  c_iso->add_option("--pair", pair_spec, "augmentation indices i,j");
  c_iso->add_flag("--json", as_json, "JSON output");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "run verification suites; exit 2 on failure");
  c_verify
      ->add_option("what", what,
                   "ainfty|unit|duality|les|cosheaf|leverson|tb|all")
      ->required();
  add_input(c_verify);
  c_verify->add_option("--field", field_spec, "finite field (default Fp:2)");
  c_verify->add_option("--max-arity", max_arity, "A-infinity arity cap")
      ->check(CLI::Range(1, 8));

  CLI::App* c_slice = app.add_subcommand(
      "slice-check", "randomized front-slice verification; exit 2 on failure");
  c_slice->add_option("--n", n, "strand count")->required();
  c_slice->add_option("--mu", mu_spec, "Maslov potential list")->required();
  c_slice->add_option("--trials", trials, "number of random trials");
  c_slice->add_option("--field", field_spec, "finite field (default Fp:2)");

  CLI11_PARSE(app, argc, argv);

  // slice-check needs no input file.
  if (c_slice->parsed()) {
    CheckReport rep = verify_slice_equivalences(n, parse_int_list(mu_spec),
                                                trials, parse_field(field_spec));
    for (const std::string& note : rep.notes) std::cout << note << "\n";
    for (const std::string& p : rep.problems) std::cout << "FAIL: " << p << "\n";
    std::cout << (rep.ok() ? "ok: slice-check" : "FAIL: slice-check") << "\n";
    return rep.ok() ? 0 : 2;
  }

  if (c_dga->parsed()) {
    if (!sections_spec.empty()) {
      auto dots = sections_spec.find("..");
      if (dots == std::string::npos)
        throw Error("--sections expects lo..hi");
      int lo = std::stoi(sections_spec.substr(0, dots));
      int hi = std::stoi(sections_spec.substr(dots + 2));
      PlatDiagram d = parse_plat(slurp(path));
      std::cout << dga_to_json(
          sections(d, lo, hi, Ring::parse(ring_spec), flips).dga);
      return 0;
    }
    Input in = load_input(path, Ring::parse(ring_spec), flips);
    std::cout << dga_to_json(in.the_dga());
    return 0;
  }

  if (c_mcopy->parsed()) {
    Input in = load_input(path, Ring::parse(ring_spec), flips);
    std::cout << dga_to_json(build_mcopy(in.the_dga(), m).dga);
    return 0;
  }

  // All remaining commands work over a finite field.
  Ring field = parse_field(field_spec);
  if (!field.is_field()) throw Error("this command needs a finite field");
  Input in = load_input(path, Ring::integers(), flips);
  AugCategory cat(in.the_dga(), field);
  std::vector<Augmentation> augs = cat.enumerate_augmentations();

  if (c_augs->parsed()) {
    if (as_json) {
      Json out = Json::array();
      for (const Augmentation& eps : augs)
        out.push_back(aug_json(cat.dga(), eps));
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << augs.size() << " augmentations over " << field.str()
                << "\n";
      for (std::size_t i = 0; i < augs.size(); ++i)
        std::cout << (i + 1) << ": " << aug_line(cat.dga(), augs[i]) << "\n";
    }
    return 0;
  }

  HomDirection dir =
      direction == "minus" ? HomDirection::minus : HomDirection::plus;
  if (direction != "plus" && direction != "minus")
    throw Error("--direction must be plus or minus");

  if (c_coh->parsed()) {
    std::vector<int> pq = parse_int_list(pair_spec);
    if (pq.size() != 2) throw Error("--pair expects i,j");
    auto ranks = cat.cohomology(dir, pick_aug(augs, pq[0]),
                                pick_aug(augs, pq[1]));
    if (as_json) {
      Json out = Json::object();
      for (const auto& [k, dim] : ranks)
        if (dim > 0) out[std::to_string(k)] = dim;
      std::cout << out.dump(2) << "\n";
    } else {
      bool any = false;
      for (const auto& [k, dim] : ranks)
        if (dim > 0) {
          std::cout << "H^" << k << " = " << dim << "\n";
          any = true;
        }
      if (!any) std::cout << "0\n";
    }
    return 0;
  }

  if (c_mtable->parsed()) {
    std::vector<int> chain_idx(static_cast<std::size_t>(arity_k + 1), 1);
    if (!augs_spec.empty()) {
      chain_idx = parse_int_list(augs_spec);
      if (static_cast<int>(chain_idx.size()) != arity_k + 1)
        throw Error("--augs expects k+1 indices");
    }
    std::vector<Augmentation> chain;
    for (int i : chain_idx) chain.push_back(pick_aug(augs, i));
    const HomBasis& basis = cat.basis(dir);
    std::vector<std::size_t> tuple(static_cast<std::size_t>(arity_k), 0);
    Json jout = Json::array();
    std::size_t shown = 0;
    bool more = basis.size() > 0;
    while (more) {
      std::vector<HomElement> args;
      std::string call = "m" + std::to_string(arity_k) + "(";
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        args.push_back(HomElement::basis(field, basis.at(tuple[i]).label));
        call += (i ? ", " : "") + basis.at(tuple[i]).label;
      }
      call += ")";
      HomElement result = cat.mk(dir, chain, args);
      if (!result.is_zero()) {
        ++shown;
        if (as_json)
          jout.push_back(Json{{"call", call}, {"value", result.str()}});
        else
          std::cout << call << " = " << result.str() << "\n";
      }
      // next tuple
      std::size_t i = tuple.size();
      while (i > 0) {
        if (++tuple[i - 1] < basis.size()) break;
        tuple[i - 1] = 0;
        --i;
      }
      more = i > 0;
    }
    if (as_json)
      std::cout << jout.dump(2) << "\n";
    else
      std::cout << shown << " nonzero products\n";
    return 0;
  }

  if (c_iso->parsed()) {
    std::vector<int> pq = parse_int_list(pair_spec);
    if (pq.size() != 2) throw Error("--pair expects i,j");
    Augmentation e1 = pick_aug(augs, pq[0]), e2 = pick_aug(augs, pq[1]);
    bool iso = cat.is_isomorphic_augplus(e1, e2);
    auto cocycle = cat.iso_cocycle(e1, e2);
    if (as_json) {
      Json out{{"isomorphic", iso}};
      if (cocycle) out["cocycle"] = cocycle->str();
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "isomorphic: " << (iso ? "yes" : "no") << "\n";
      if (cocycle) std::cout << "cocycle: " << cocycle->str() << "\n";
    }
    return 0;
  }

  // verify
  std::vector<std::pair<std::string, CheckReport>> reports;
  auto want = [&](const char* name) { return what == name || what == "all"; };
  if (what != "ainfty" && what != "unit" && what != "duality" &&
      what != "les" && what != "cosheaf" && what != "leverson" &&
      what != "tb" && what != "all")
    throw Error("unknown verify suite \"" + what + "\"");
  if (augs.empty() && what != "cosheaf")
    std::cout << "note: no augmentations over " << field.str() << "\n";
  if (want("ainfty") && !augs.empty())
    reports.emplace_back("ainfty", verify_ainfty(cat, augs, max_arity));
  if (want("unit") && !augs.empty())
    reports.emplace_back("unit", verify_unit(cat, augs));
  if (want("duality") && !augs.empty())
    reports.emplace_back("duality", verify_pairwise(cat, augs, true));
  if (want("les") && !augs.empty())
    reports.emplace_back("les", verify_pairwise(cat, augs, false));
  if (want("cosheaf"))
    reports.emplace_back("cosheaf", verify_cosheaf(in, Ring::integers()));
  if (want("leverson") && !augs.empty())
    reports.emplace_back("leverson", verify_leverson(in, cat, augs));
  if (want("tb") && !augs.empty())
    reports.emplace_back("tb", verify_tb(in, cat, augs));

  bool ok = true;
  for (const auto& [name, rep] : reports) {
    for (const std::string& note : rep.notes)
      std::cout << "  " << note << "\n";
    for (const std::string& p : rep.problems)
      std::cout << "FAIL: " << name << ": " << p << "\n";
    std::cout << (rep.ok() ? "ok: " : "FAIL: ") << name << "\n";
    ok = ok && rep.ok();
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return real_main(argc, argv);
  } catch (const legaug::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
