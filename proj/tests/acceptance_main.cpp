// SPDX-License-Identifier: MIT
//
// Acceptance gate: one pass/fail line per criterion.
//
//   1  unknot pipeline: DGA, augmentations, cohomology, full product table
//   2  unknot 2-copy: the six differentials, verbatim over Z
//   3  trefoil over F2: augmentations, cohomology tables, isomorphism
//      decisions, unit, and the ring/pairing structure on cohomology
//   4  randomized property corpus (>= 100 plats)
//   5  slice / Morse-complex equivalence suite (n <= 6, F2/F3/F5)
//   6  m(9_45) mirror asymmetry (non-blocking)
//
// Exit code 0 if criteria 1-5 pass (criterion 6 never blocks), 1 otherwise.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "legaug/augcat.hpp"
#include "legaug/bordered.hpp"
#include "legaug/json_io.hpp"
#include "legaug/mcopy.hpp"
#include "legaug/slice_mc.hpp"

using namespace legaug;

namespace {

using Clock = std::chrono::steady_clock;

std::string data_file(const std::string& name) {
  return std::string(LEGAUG_DATA_DIR) + "/" + name;
}

PlatDiagram load_plat(const std::string& name) {
  std::ifstream in(data_file(name));
  if (!in.good()) throw Error("cannot open " + data_file(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_plat(buf.str());
}

/// Collector for one criterion: expectations append to `problems` on failure.
struct Probe {
  std::vector<std::string> problems;
  bool expect(bool cond, const std::string& what) {
    if (!cond) problems.push_back(what);
    return cond;
  }
  bool ok() const { return problems.empty(); }
};

std::map<int, std::size_t> nonzero_ranks(const AugCategory& cat,
                                         HomDirection dir,
                                         const Augmentation& e1,
                                         const Augmentation& e2) {
  std::map<int, std::size_t> out;
  for (const auto& [k, dim] : cat.cohomology(dir, e1, e2))
    if (dim > 0) out[k] = dim;
  return out;
}

std::string ranks_str(const std::map<int, std::size_t>& r) {
  std::ostringstream os;
  for (const auto& [k, dim] : r) os << "H^" << k << "=" << dim << " ";
  return r.empty() ? "all zero" : os.str();
}

std::vector<Int> to_vector(const AugCategory& cat, HomDirection dir,
                           const HomElement& v) {
  const HomBasis& b = cat.basis(dir);
  std::vector<Int> out(b.size(), 0);
  for (const auto& [label, c] : v.coeffs) out[b.index_of(label)] = c;
  return out;
}

/// Columns of `m` restricted to the basis indices of one degree.
Matrix degree_columns(const AugCategory& cat, HomDirection dir,
                      const Matrix& m, int degree) {
  const HomBasis& b = cat.basis(dir);
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b.at(j).degree == degree) cols.push_back(j);
  Matrix out(m.ring(), m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.set(i, j, m.at(i, cols[j]));
  return out;
}

/// A basis of cocycles of the given degree in hom/Hom_- (e1, e2).
std::vector<HomElement> cocycle_basis(const AugCategory& cat, HomDirection dir,
                                      const Augmentation& e1,
                                      const Augmentation& e2, int degree) {
  const HomBasis& b = cat.basis(dir);
  Matrix m = cat.m1_matrix(dir, e1, e2);
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b.at(j).degree == degree) cols.push_back(j);
  std::vector<HomElement> out;
  for (const auto& ker : kernel_basis(degree_columns(cat, dir, m, degree))) {
    HomElement z(cat.field());
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (ker[j] != 0) z.add(b.at(cols[j]).label, ker[j]);
    if (!z.is_zero()) out.push_back(z);
  }
  return out;
}

/// Whether a cocycle represents zero in cohomology (lies in the image of m1).
bool class_is_zero(const AugCategory& cat, HomDirection dir,
                   const Augmentation& e1, const Augmentation& e2,
                   const HomElement& w) {
  if (w.is_zero()) return true;
  int degree = *cat.degree_of(w);
  Matrix m = cat.m1_matrix(dir, e1, e2);
  Matrix bnd = degree_columns(cat, dir, m, degree - 1);
  return solve(bnd, to_vector(cat, dir, w)).has_value();
}

/// Coefficient of the class of `w` against the 1-dimensional cohomology in
/// its degree, generated by the class of `gen`: solves w = (image) + c gen.
Int class_coefficient(const AugCategory& cat, HomDirection dir,
                      const Augmentation& e1, const Augmentation& e2,
                      const HomElement& w, const HomElement& gen) {
  if (w.is_zero()) return 0;
  int degree = *cat.degree_of(w);
  Matrix m = cat.m1_matrix(dir, e1, e2);
  Matrix bnd = degree_columns(cat, dir, m, degree - 1);
  Matrix aug(m.ring(), bnd.rows(), bnd.cols() + 1);
  std::vector<Int> g = to_vector(cat, dir, gen);
  for (std::size_t i = 0; i < bnd.rows(); ++i) {
    for (std::size_t j = 0; j < bnd.cols(); ++j) aug.set(i, j, bnd.at(i, j));
    aug.set(i, bnd.cols(), g[i]);
  }
  auto sol = solve(aug, to_vector(cat, dir, w));
  if (!sol) throw Error("class_coefficient: cohomology is not 1-dimensional");
  return sol->back();
}

// ---------------------------------------------------------------------------
// Criterion 1: unknot pipeline.

bool criterion1(std::string& detail) {
  Probe p;
  const Ring Z = Ring::integers();
  PlatDiagram d = load_plat("unknot.plat");
  Dga dga = assemble(d, Z).dga;

  p.expect(dga.reeb_generators().size() == 1, "expected one Reeb generator");
  p.expect(dga.info("c1").degree == 1, "Reeb generator degree != 1");
  NcPoly expected =
      NcPoly::one(Z) + NcPoly::symbol(Z, Symbol::inv("t1", -1));
  p.expect(dga.differential("c1") == expected,
           "d(c1) != 1 + t1^-1, got " + dga.differential("c1").str());

  for (int q : {2, 3}) {
    Ring f = Ring::fp(q);
    AugCategory cat(dga, f);
    auto augs = cat.enumerate_augmentations();
    p.expect(augs.size() == 1,
             "expected one augmentation over F" + std::to_string(q));
    if (augs.size() == 1) {
      p.expect(augs[0].value("t1") == f.reduce(-1),
               "eps(t) != -1 over F" + std::to_string(q));
      auto plus = nonzero_ranks(cat, HomDirection::plus, augs[0], augs[0]);
      auto minus = nonzero_ranks(cat, HomDirection::minus, augs[0], augs[0]);
      p.expect(plus == std::map<int, std::size_t>{{0, 1}},
               "hom ranks: " + ranks_str(plus));
      p.expect(minus == std::map<int, std::size_t>{{2, 1}},
               "Hom_- ranks: " + ranks_str(minus));
    }
  }

  // Full m_2 table over Z: the six listed products, all others zero.
  AugCategory cat(dga, Z);
  Augmentation eps{Z, {{"c1", 0}, {"t1", -1}}};
  auto B = [&](const char* l) { return HomElement::basis(Z, l); };
  HomElement a = B("c1+"), x = B("x1+"), y = B("y1+");
  auto m2 = [&](const HomElement& u, const HomElement& v) {
    return cat.mk(HomDirection::plus, {eps, eps, eps}, {u, v});
  };
  struct Product {
    HomElement u, v, want;
  };
  std::vector<Product> table = {
      {x, x, a},          {y, a, -a}, {a, y, -a}, {y, x, -x}, {x, y, -x},
      {y, y, -y},         {x, a, HomElement(Z)}, {a, x, HomElement(Z)},
      {a, a, HomElement(Z)},
  };
  for (const Product& t : table) {
    HomElement got = m2(t.u, t.v);
    p.expect(got == t.want, "m2(" + t.u.str() + ", " + t.v.str() + ") = " +
                                got.str() + ", want " + t.want.str());
  }

  // m_k(x+,...,x+) = (-1)^{floor((k-1)/2)} a+ for 3 <= k <= 6; every other
  // product of basis elements vanishes.
  std::vector<HomElement> basis = {y, x, a};
  for (int k = 3; k <= 6; ++k) {
    std::vector<Augmentation> chain(k + 1, eps);
    std::vector<std::size_t> odo(k, 0);
    bool more = true;
    while (more) {
      std::vector<HomElement> args;
      bool all_x = true;
      for (int q = 0; q < k; ++q) {
        args.push_back(basis[odo[q]]);
        if (odo[q] != 1) all_x = false;
      }
      HomElement got = cat.mk(HomDirection::plus, chain, args);
      HomElement want =
          all_x ? a.scaled(((k - 1) / 2) % 2 == 0 ? 1 : -1) : HomElement(Z);
      if (got != want)
        p.expect(false, "m" + std::to_string(k) + " mismatch: got " +
                            got.str() + ", want " + want.str());
      more = false;
      for (int q = 0; q < k; ++q) {
        if (++odo[q] < basis.size()) {
          more = true;
          break;
        }
        odo[q] = 0;
      }
    }
  }

  detail = p.ok() ? "unknot DGA, augmentations, cohomology, m_2..m_6 over Z"
                  : p.problems.front();
  return p.ok();
}

// ---------------------------------------------------------------------------
// Criterion 2: unknot 2-copy differentials, verbatim over Z.

bool criterion2(std::string& detail) {
  Probe p;
  const Ring Z = Ring::integers();
  Dga base = assemble(load_plat("unknot.plat"), Z).dga;
  Dga d = build_mcopy(base, 2).dga;
  auto S = [&](const char* n) { return NcPoly::symbol(Z, Symbol::gen(n)); };
  auto T = [&](const char* n, int e) {
    return NcPoly::symbol(Z, Symbol::inv(n, e));
  };
  std::vector<std::pair<std::string, NcPoly>> want = {
      {"c1_11", NcPoly::one(Z) + T("t1_1", -1) + S("y1_12") * S("c1_21")},
      {"c1_12", -(S("x1_12") * T("t1_2", -1)) + S("y1_12") * S("c1_22") +
                    S("c1_11") * S("y1_12")},
      {"c1_21", NcPoly(Z)},
      {"c1_22", NcPoly::one(Z) + T("t1_2", -1) + S("c1_21") * S("y1_12")},
      {"x1_12", T("t1_1", -1) * S("y1_12") * T("t1_2", 1) - S("y1_12")},
      {"y1_12", NcPoly(Z)},
  };
  p.expect(d.reeb_generators().size() == 6, "expected six Reeb generators");
  for (const auto& [name, poly] : want)
    p.expect(d.differential(name) == poly,
             "d(" + name + ") = " + d.differential(name).str() + ", want " +
                 poly.str());
  detail = p.ok() ? "all six displayed 2-copy differentials match over Z"
                  : p.problems.front();
  return p.ok();
}

// ---------------------------------------------------------------------------
// Criterion 3: trefoil over F2.

bool criterion3(std::string& detail) {
  Probe p;
  const auto started = Clock::now();
  Ring f2 = Ring::fp(2);
  Dga dga = assemble(load_plat("trefoil.plat"), Ring::integers()).dga;
  AugCategory cat(dga, f2);
  auto augs = cat.enumerate_augmentations();
  p.expect(augs.size() == 5, "expected 5 augmentations, got " +
                                 std::to_string(augs.size()));
  if (augs.size() != 5) {
    detail = p.problems.front();
    return false;
  }
  // In lexicographic enumeration order, (a1,a2,a3) = (1,0,0) and (1,1,0) are
  // the third and fourth augmentations.
  const Augmentation &e1 = augs[2], &e2 = augs[3];
  p.expect(e1.value("a1") == 1 && e1.value("a2") == 0 && e1.value("a3") == 0,
           "augmentation 3 is not (1,0,0)");
  p.expect(e2.value("a1") == 1 && e2.value("a2") == 1 && e2.value("a3") == 0,
           "augmentation 4 is not (1,1,0)");

  using Ranks = std::map<int, std::size_t>;
  auto check_ranks = [&](HomDirection dir, const Augmentation& a,
                         const Augmentation& b, Ranks want, const char* tag) {
    Ranks got = nonzero_ranks(cat, dir, a, b);
    p.expect(got == want,
             std::string(tag) + ": got " + ranks_str(got) + "want " +
                 ranks_str(want));
  };
  check_ranks(HomDirection::plus, e1, e1, {{0, 1}, {1, 2}}, "hom(e1,e1)");
  check_ranks(HomDirection::plus, e1, e2, {{1, 1}}, "hom(e1,e2)");
  check_ranks(HomDirection::minus, e1, e1, {{1, 2}, {2, 1}}, "Hom_-(e1,e1)");
  check_ranks(HomDirection::minus, e1, e2, {{1, 1}}, "Hom_-(e1,e2)");

  // Pairwise non-isomorphic; self-isomorphisms carry invertible cocycles.
  for (std::size_t i = 0; i < augs.size(); ++i) {
    for (std::size_t j = 0; j < augs.size(); ++j) {
      bool iso = cat.is_isomorphic_augplus(augs[i], augs[j]);
      p.expect(iso == (i == j), "isomorphism decision wrong on pair (" +
                                    std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
    }
    auto alpha = cat.iso_cocycle(augs[i], augs[i]);
    p.expect(alpha.has_value(), "no self iso-cocycle");
    if (alpha)
      p.expect(cat.inverse_cocycle(augs[i], augs[i], *alpha).has_value(),
               "self iso-cocycle has no inverse");
  }

  // The unit acts as the identity on every hom space.
  HomElement unit = cat.unit();
  const HomBasis& plus = cat.basis(HomDirection::plus);
  for (std::size_t i = 0; i < augs.size(); ++i)
    for (std::size_t j = 0; j < augs.size(); ++j)
      for (std::size_t b = 0; b < plus.size(); ++b) {
        HomElement f = HomElement::basis(f2, plus.at(b).label);
        p.expect(cat.mk(HomDirection::plus, {augs[i], augs[j], augs[j]},
                        {unit, f}) == f,
                 "m2(unit, f) != f");
        p.expect(cat.mk(HomDirection::plus, {augs[i], augs[i], augs[j]},
                        {f, unit}) == f,
                 "m2(f, unit) != f");
      }

  // H^0 of hom(e1,e1) is spanned by the unit class.
  p.expect(!class_is_zero(cat, HomDirection::plus, e1, e1, unit),
           "unit class is a coboundary");

  // H^1 . H^1 = 0 in hom(e1,e1).
  auto h1 = cocycle_basis(cat, HomDirection::plus, e1, e1, 1);
  for (const HomElement& u : h1)
    for (const HomElement& v : h1) {
      HomElement prod = cat.mk(HomDirection::plus, {e1, e1, e1}, {u, v});
      p.expect(class_is_zero(cat, HomDirection::plus, e1, e1, prod),
               "H^1 . H^1 != 0 in hom: " + prod.str());
    }

  // The Hom_- pairing H^1 x H^1 -> H^2 is nondegenerate.
  auto z1 = cocycle_basis(cat, HomDirection::minus, e1, e1, 1);
  auto z2 = cocycle_basis(cat, HomDirection::minus, e1, e1, 2);
  HomElement gen(f2);
  for (const HomElement& z : z2)
    if (!class_is_zero(cat, HomDirection::minus, e1, e1, z)) gen = z;
  p.expect(!gen.is_zero(), "no generator of H^2 Hom_-(e1,e1)");
  if (!gen.is_zero()) {
    Matrix gram(f2, z1.size(), z1.size());
    for (std::size_t i = 0; i < z1.size(); ++i)
      for (std::size_t j = 0; j < z1.size(); ++j) {
        HomElement prod =
            cat.mk(HomDirection::minus, {e1, e1, e1}, {z1[i], z1[j]});
        gram.set(i, j,
                 class_coefficient(cat, HomDirection::minus, e1, e1, prod,
                                   gen));
      }
    // Coboundaries lie in the radical, so the rank of the Gram matrix equals
    // the rank of the induced pairing on cohomology.
    p.expect(rank(gram) == 2, "Hom_- pairing on H^1 is degenerate");
  }

  double secs = std::chrono::duration<double>(Clock::now() - started).count();
  p.expect(secs < 5.0, "criterion took " + std::to_string(secs) + "s");
  detail = p.ok() ? "5 augmentations, tables, isomorphism, unit, pairing"
                  : p.problems.front();
  return p.ok();
}

// ---------------------------------------------------------------------------
// Criterion 4: randomized property corpus.

bool criterion4(std::string& detail) {
  Probe p;
  const auto started = Clock::now();
  auto elapsed_s = [&] {
    return std::chrono::duration<double>(Clock::now() - started).count();
  };

  std::mt19937 corpus_rng(20260824);
  std::vector<PlatDiagram> plats;
  while (plats.size() < 110) {
    PlatDiagram d;
    d.n = 2 * std::uniform_int_distribution<int>(1, 4)(corpus_rng);
    int crossings = std::uniform_int_distribution<int>(0, 12)(corpus_rng);
    for (int i = 0; i < crossings; ++i)
      d.crossings.push_back(
          std::uniform_int_distribution<int>(1, d.n - 1)(corpus_rng));
    try {
      solve_maslov(d);
    } catch (const Error&) {
      continue;
    }
    plats.push_back(std::move(d));
  }

  std::mt19937 rng(424242);
  const Ring Z = Ring::integers();
  std::size_t aug_n = 0, glue_n = 0, dual_n = 0, ainf_n = 0, lev_n = 0,
              tb_n = 0;
  auto aug_space = [](const Dga& dga, const Ring& field) {
    double space = 1;
    for (const GenInfo& g : dga.generators()) {
      if (g.kind == GenKind::basepoint)
        space *= field.p - 1;
      else if (g.degree == 0)
        space *= field.p;
      if (space > 1e9) break;
    }
    return space;
  };

  for (const PlatDiagram& d : plats) {
    if (!p.ok()) break;
    AssembleResult full = assemble(d, Z);
    std::string where = " [plat: " + plat_str(d) + "]";

    DgaReport rep = check_dga(full.dga);
    p.expect(rep.ok(), "d^2 != 0" + where);
    for (int m = 2; m <= 3; ++m)
      p.expect(check_dga(build_mcopy(full.dga, m).dga).ok(),
               "m-copy d^2 != 0" + where);

    // Cosheaf pushout at every split.
    auto table = [](const Dga& dga) {
      std::map<std::string, std::pair<int, std::string>> out;
      for (const GenInfo& g : dga.generators())
        out[g.name] = {g.degree, dga.differential(g.name).str()};
      return out;
    };
    auto want = table(full.dga);
    int r = d.num_crossings();
    for (int split = 0; split <= r; ++split) {
      SectionResult left = sections(d, 0, split, Z);
      SectionResult right = sections(d, split + 1, r + 1, Z);
      p.expect(table(glue_sections(left, right)) == want,
               "cosheaf pushout mismatch at split " + std::to_string(split) +
                   where);
    }

    ClassicalInvariants inv = classical_invariants(d, full.trace);
    for (int q : {2, 3}) {
      Ring field = Ring::fp(q);
      if (aug_space(full.dga, field) > 2e4) continue;
      AugCategory cat(full.dga, field);
      auto augs = cat.enumerate_augmentations();
      if (augs.empty()) continue;
      aug_n += augs.size();

      // Restriction / gluing round-trip at a random split.
      if (elapsed_s() < 160) {
        int split = std::uniform_int_distribution<int>(0, r)(rng);
        AssembleResult ffull = assemble(d, field);
        SectionResult left = sections(d, 0, split, field);
        SectionResult right = sections(d, split + 1, r + 1, field);
        for (std::size_t ai = 0; ai < augs.size() && ai < 4; ++ai) {
          Augmentation el = restrict_augmentation(ffull, augs[ai], 0, split);
          Augmentation er =
              restrict_augmentation(ffull, augs[ai], split + 1, r + 1);
          Augmentation glued = glue_augmentations(left, el, right, er);
          bool match = true;
          for (const GenInfo& g : full.dga.generators())
            if (glued.values.count(g.name) &&
                glued.value(g.name) != augs[ai].value(g.name))
              match = false;
          p.expect(match, "glued augmentation disagrees" + where);
          ++glue_n;
        }
      }

      std::size_t cap = augs.size() > 3 ? 3 : augs.size();
      HomElement unit = cat.unit();
      const HomBasis& plus = cat.basis(HomDirection::plus);
      for (std::size_t i = 0; i < cap; ++i) {
        if (full.trace.components == 1) {
          long long chi = 0;
          for (const auto& [k, dim] :
               cat.cohomology(HomDirection::minus, augs[i], augs[i]))
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(dim);
          p.expect(chi == -inv.tb_total, "-tb != chi(Hom_-)" + where);
          ++tb_n;
          if (q == 3) {
            Int prod = 1;
            for (const GenInfo& g : full.dga.generators())
              if (g.kind == GenKind::basepoint)
                prod = field.reduce(prod * augs[i].value(g.name));
            p.expect(prod == field.reduce(-1),
                     "base-point product != -1 over F3" + where);
            ++lev_n;
          }
        }
        for (std::size_t j = 0; j < cap; ++j) {
          p.expect(cat.duality_check(augs[i], augs[j]).ok(),
                   "duality dimension identity fails" + where);
          ++dual_n;
          if (plus.size() > 0) {
            std::size_t b = std::uniform_int_distribution<std::size_t>(
                0, plus.size() - 1)(rng);
            HomElement f = HomElement::basis(field, plus.at(b).label);
            p.expect(cat.mk(HomDirection::plus, {augs[i], augs[j], augs[j]},
                            {unit, f}) == f &&
                         cat.mk(HomDirection::plus,
                                {augs[i], augs[i], augs[j]}, {f, unit}) == f,
                     "strict unit fails" + where);
          }
        }
      }

      // A-infinity relations on random tuples, arities up to 4.
      if (elapsed_s() < 210)
        for (HomDirection dir : {HomDirection::plus, HomDirection::minus}) {
          const HomBasis& basis = cat.basis(dir);
          if (basis.size() == 0) continue;
          int top = (d.n <= 4 && d.num_crossings() <= 6 && elapsed_s() < 140)
                        ? 4
                        : 3;
          for (int arity = 1; arity <= top; ++arity) {
            std::vector<Augmentation> chain;
            for (int s = 0; s <= arity; ++s)
              chain.push_back(augs[std::uniform_int_distribution<std::size_t>(
                  0, augs.size() - 1)(rng)]);
            std::vector<HomElement> args;
            for (int s = 0; s < arity; ++s)
              args.push_back(HomElement::basis(
                  field, basis
                             .at(std::uniform_int_distribution<std::size_t>(
                                 0, basis.size() - 1)(rng))
                             .label));
            p.expect(cat.ainfty_defect(dir, chain, args).is_zero(),
                     "A-infinity relation fails" + where);
            ++ainf_n;
          }
        }
    }
  }

  p.expect(aug_n > 0 && glue_n > 0 && dual_n > 0 && ainf_n > 0 && lev_n > 0 &&
               tb_n > 0,
           "a property family was never exercised");
  double secs = elapsed_s();
  p.expect(secs < 300, "corpus took " + std::to_string(secs) + "s");
  if (p.ok()) {
    std::ostringstream os;
    os << plats.size() << " plats, " << aug_n << " augmentations, " << dual_n
       << " duality pairs, " << ainf_n << " A-infinity tuples ("
       << static_cast<int>(secs) << "s)";
    detail = os.str();
  } else {
    detail = p.problems.front();
  }
  return p.ok();
}

// ---------------------------------------------------------------------------
// Criterion 5: slice / Morse-complex equivalences.

bool criterion5(std::string& detail) {
  Probe p;
  struct Profile {
    int n;
    std::vector<int> mu;
  };
  std::vector<Profile> profiles = {
      {2, {1, 0}},
      {4, {1, 0, 0, -1}},
      {4, {0, 0, 0, 0}},
      {4, {1, 0, 1, 0}},
      {6, {2, 1, 1, 0, 0, -1}},
  };
  std::size_t trials = 0;
  for (int q : {2, 3, 5})
    for (const Profile& prof : profiles) {
      CheckReport rep =
          verify_slice_equivalences(prof.n, prof.mu, 8, Ring::fp(q));
      trials += 8;
      if (!rep.ok())
        p.expect(false, "slice verifier failed (n=" + std::to_string(prof.n) +
                            ", F" + std::to_string(q) + "): " +
                            rep.problems.front());
    }
  p.expect(trials >= 100, "fewer than 100 trials");
  detail = p.ok() ? std::to_string(trials) +
                        " randomized trials over F2/F3/F5, n up to 6"
                  : p.problems.front();
  return p.ok();
}

// ---------------------------------------------------------------------------
// Criterion 6 (non-blocking): m(9_45) mirror asymmetry.

enum class C6 { pass, fail, skip };

C6 criterion6(std::string& detail) {
  // Accepts either a plat file or a raw-DGA JSON file if one is bundled.
  std::string plat_path = data_file("m945.plat");
  std::string json_path = data_file("m945.json");
  Dga dga = [&]() -> Dga {
    if (std::filesystem::exists(plat_path)) {
      std::ifstream in(plat_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      return assemble(parse_plat(buf.str()), Ring::integers()).dga;
    }
    if (std::filesystem::exists(json_path)) return load_dga_json(json_path);
    throw Error("no bundled encoding");
  }();

  Probe p;
  Ring f2 = Ring::fp(2);
  AugCategory cat(dga, f2);
  auto augs = cat.enumerate_augmentations();
  p.expect(augs.size() == 5, "expected 5 augmentations over F2, got " +
                                 std::to_string(augs.size()));

  // Some augmentation has m_2 : H^-1 x H^2 -> H^1 nonzero; every augmentation
  // has m_2 : H^2 x H^-1 -> H^1 zero (the knot is not isotopic to its mirror).
  bool some_nonzero = false;
  for (const Augmentation& e : augs) {
    auto zm1 = cocycle_basis(cat, HomDirection::plus, e, e, -1);
    auto z2 = cocycle_basis(cat, HomDirection::plus, e, e, 2);
    for (const HomElement& u : zm1)
      for (const HomElement& v : z2) {
        HomElement uv = cat.mk(HomDirection::plus, {e, e, e}, {u, v});
        HomElement vu = cat.mk(HomDirection::plus, {e, e, e}, {v, u});
        if (!class_is_zero(cat, HomDirection::plus, e, e, uv))
          some_nonzero = true;
        p.expect(class_is_zero(cat, HomDirection::plus, e, e, vu),
                 "m2 : H^2 x H^-1 -> H^1 is nonzero for some augmentation");
      }
  }
  p.expect(some_nonzero, "m2 : H^-1 x H^2 -> H^1 vanished for every "
                         "augmentation");
  detail = p.ok() ? "5 augmentations; one-sided m2 product as expected"
                  : p.problems.front();
  return p.ok() ? C6::pass : C6::fail;
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* name;
    bool (*run)(std::string&);
  };
  std::vector<Row> rows = {
      {1, "unknot pipeline", criterion1},
      {2, "unknot 2-copy differentials", criterion2},
      {3, "trefoil augmentation categories", criterion3},
      {4, "randomized property corpus", criterion4},
      {5, "slice/Morse-complex suite", criterion5},
  };
  bool all_ok = true;
  for (const Row& row : rows) {
    std::string detail;
    bool ok = false;
    try {
      ok = row.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    all_ok = all_ok && ok;
    std::cout << "criterion " << row.id << " (" << row.name << "): "
              << (ok ? "PASS" : "FAIL") << " - " << detail << "\n";
    std::cout.flush();
  }
  {
    std::string detail;
    C6 res = C6::skip;
    try {
      res = criterion6(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const char* word = res == C6::pass ? "PASS"
                       : res == C6::fail ? "FAIL (non-blocking)"
                                         : "SKIP (non-blocking)";
    if (res == C6::skip)
      detail = "no m(9_45) encoding bundled: the published diagram is not in "
               "plat position and no plat representative was found";
    std::cout << "criterion 6 (m(9_45) mirror asymmetry): " << word << " - "
              << detail << "\n";
  }
  return all_ok ? 0 : 1;
}
