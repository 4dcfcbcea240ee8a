// SPDX-License-Identifier: MIT

#include "legaug/mcopy.hpp"

#include <algorithm>
#include <set>

namespace legaug {

namespace {

/// Dense m x m matrix of polynomials, 1-based access.
struct Mat {
  int m;
  std::vector<NcPoly> e;

  Mat(int m_, Ring ring) : m(m_), e(static_cast<std::size_t>(m_) * m_, NcPoly(ring)) {}

  const NcPoly& at(int i, int j) const {
    return e[static_cast<std::size_t>(i - 1) * m + (j - 1)];
  }
  NcPoly& at(int i, int j) {
    return e[static_cast<std::size_t>(i - 1) * m + (j - 1)];
  }

  static Mat identity(int m, Ring ring) {
    Mat out(m, ring);
    for (int i = 1; i <= m; ++i) out.at(i, i) = NcPoly::one(ring);
    return out;
  }

  Mat operator*(const Mat& o) const {
    Mat out(m, e.front().ring());
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        NcPoly acc = out.at(i, j);
        for (int k = 1; k <= m; ++k) acc = acc + at(i, k) * o.at(k, j);
        out.at(i, j) = acc;
      }
    return out;
  }
  Mat operator+(const Mat& o) const {
    Mat out(m, e.front().ring());
    for (std::size_t i = 0; i < e.size(); ++i) out.e[i] = e[i] + o.e[i];
    return out;
  }
  Mat operator-(const Mat& o) const {
    Mat out(m, e.front().ring());
    for (std::size_t i = 0; i < e.size(); ++i) out.e[i] = e[i] - o.e[i];
    return out;
  }
  Mat scaled(const Int& c) const {
    Mat out(m, e.front().ring());
    for (std::size_t i = 0; i < e.size(); ++i) out.e[i] = e[i].scaled(c);
    return out;
  }
};

std::string idx(int i, int j) {
  return "_" + std::to_string(i) + std::to_string(j);
}

}  // namespace

std::string mcopy_name(const std::string& base, int i, int j) {
  return base + idx(i, j);
}
std::string mcopy_x_name(int k, int i, int j) {
  return "x" + std::to_string(k) + idx(i, j);
}
std::string mcopy_y_name(int k, int i, int j) {
  return "y" + std::to_string(k) + idx(i, j);
}
std::string mcopy_t_name(const std::string& base, int i) {
  return base + "_" + std::to_string(i);
}

McopyDga build_mcopy(const Dga& base, int m) {
  if (m < 1 || m > 9) throw Error("build_mcopy: m must be in 1..9");
  if (base.grading() == Grading::none)
    throw Error("build_mcopy: base needs a (weak) link grading");
  {
    auto report = check_dga(base);
    if (!report.ok())
      throw Error("build_mcopy: base DGA invalid:\n" + report.str());
  }
  const Ring ring = base.ring();
  const int M = base.component_count();
  // Arc k must carry exactly one base point (c(t_k) = k).
  std::vector<GenInfo> bp_of_arc(static_cast<std::size_t>(M),
                                 GenInfo{"", 0, GenKind::basepoint, 0, 0});
  {
    auto bps = base.basepoints();
    if (static_cast<int>(bps.size()) != M)
      throw Error(
          "build_mcopy: need one base point per link-grading component");
    for (const GenInfo& b : bps) {
      if (b.c < 1 || b.c > M || !bp_of_arc[b.c - 1].name.empty())
        throw Error("build_mcopy: base points are not in bijection with arcs");
      bp_of_arc[b.c - 1] = b;
    }
  }

  std::vector<GenInfo> gens;
  std::map<std::string, std::string> base_of;
  for (const GenInfo& g : base.generators()) {
    if (g.kind == GenKind::reeb) {
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
          gens.push_back({mcopy_name(g.name, i, j), g.degree, GenKind::reeb,
                          i, j});
          base_of.emplace(gens.back().name, g.name);
        }
    } else {
      int k = g.c;
      for (int i = 1; i <= m; ++i) {
        gens.push_back({mcopy_t_name(g.name, i), 0, GenKind::basepoint, i, i});
        base_of.emplace(gens.back().name, g.name);
      }
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
          gens.push_back({mcopy_x_name(k, i, j), 0, GenKind::reeb, i, j});
          base_of.emplace(gens.back().name, g.name);
          gens.push_back({mcopy_y_name(k, i, j), -1, GenKind::reeb, i, j});
          base_of.emplace(gens.back().name, g.name);
        }
    }
  }

  // Matrices per base generator / arc.
  auto sym = [&](const std::string& n) {
    return NcPoly::symbol(ring, Symbol::gen(n));
  };
  std::map<std::string, Mat> phi;  // keyed by serialized base token
  std::map<std::string, Mat> A;    // reeb matrices, also used for readback
  std::vector<Mat> X, Y, DeltaX, XinvDeltainv, Delta, Deltainv;
  for (const GenInfo& g : base.reeb_generators()) {
    Mat Ag(m, ring);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) Ag.at(i, j) = sym(mcopy_name(g.name, i, j));
    A.emplace(g.name, Ag);
    phi.emplace(g.name, Ag);
  }
  for (int k = 1; k <= M; ++k) {
    const GenInfo& b = bp_of_arc[k - 1];
    Mat Xk = Mat::identity(m, ring), Yk(m, ring), Dk(m, ring), Dki(m, ring);
    for (int i = 1; i <= m; ++i) {
      Dk.at(i, i) = NcPoly::symbol(ring, Symbol::inv(mcopy_t_name(b.name, i), 1));
      Dki.at(i, i) =
          NcPoly::symbol(ring, Symbol::inv(mcopy_t_name(b.name, i), -1));
      for (int j = i + 1; j <= m; ++j) {
        Xk.at(i, j) = sym(mcopy_x_name(k, i, j));
        Yk.at(i, j) = sym(mcopy_y_name(k, i, j));
      }
    }
    // X^{-1} = sum (-N)^i for the strictly upper N = X - 1 (nilpotent).
    Mat N = Xk - Mat::identity(m, ring);
    Mat Xinv = Mat::identity(m, ring), power = Mat::identity(m, ring);
    for (int i = 1; i < m; ++i) {
      power = power * N;
      Xinv = (i % 2 == 0) ? Xinv + power : Xinv - power;
    }
    X.push_back(Xk);
    Y.push_back(Yk);
    Delta.push_back(Dk);
    Deltainv.push_back(Dki);
    DeltaX.push_back(Dk * Xk);
    XinvDeltainv.push_back(Xinv * Dki);
    phi.emplace(b.name, DeltaX.back());
    phi.emplace(b.name + "^-1", XinvDeltainv.back());
  }

  auto apply_phi = [&](const NcPoly& p) {
    Mat out(m, ring);
    for (const auto& [w, coef] : p.terms()) {
      Mat prod = Mat::identity(m, ring);
      for (const Symbol& s : w) {
        auto it = phi.find(s.str());
        if (it == phi.end())
          throw Error("build_mcopy: no matrix image for symbol " + s.str());
        prod = prod * it->second;
      }
      out = out + prod.scaled(coef);
    }
    return out;
  };

  std::map<std::string, NcPoly> diff;
  for (const GenInfo& g : base.reeb_generators()) {
    // d(A) = Phi(d a) + Y_{r(a)} A - (-1)^{|a|} A Y_{c(a)}
    Mat D = apply_phi(base.differential(g.name)) +
            Y[g.r - 1] * A.at(g.name) -
            (A.at(g.name) * Y[g.c - 1]).scaled(g.degree % 2 == 0 ? 1 : -1);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j)
        diff.emplace(mcopy_name(g.name, i, j), D.at(i, j));
  }
  for (int k = 1; k <= M; ++k) {
    const GenInfo& b = bp_of_arc[k - 1];
    // d(X) = Delta^{-1} Y_{r(t)} Delta X - X Y_{c(t)}
    Mat DX = Deltainv[k - 1] * Y[b.r - 1] * Delta[k - 1] * X[k - 1] -
             X[k - 1] * Y[k - 1];
    Mat DY = Y[k - 1] * Y[k - 1];
    for (int i = 1; i <= m; ++i) {
      if (!DX.at(i, i).is_zero())
        throw Error("build_mcopy: nonzero diagonal in d(X)");
      for (int j = i + 1; j <= m; ++j) {
        diff.emplace(mcopy_x_name(k, i, j), DX.at(i, j));
        diff.emplace(mcopy_y_name(k, i, j), DY.at(i, j));
      }
    }
  }

  Dga dga(ring, std::move(gens), std::move(diff), m, Grading::strict);
  return McopyDga{std::move(dga), m, std::move(base_of)};
}

Augmentation diagonal_augmentation(const McopyDga& mc,
                                   const std::vector<Augmentation>& eps) {
  if (static_cast<int>(eps.size()) != mc.m)
    throw Error("diagonal_augmentation: need exactly m augmentations");
  Ring ring = eps.front().ring;
  for (const Augmentation& e : eps)
    if (e.ring != ring) throw Error("diagonal_augmentation: ring mismatch");
  // Base points of the base DGA (their copies have kind basepoint here);
  // reeb generators mapping back to them are Morse-family x/y generators.
  std::set<std::string> base_basepoints;
  for (const GenInfo& g : mc.dga.generators())
    if (g.kind == GenKind::basepoint)
      base_basepoints.insert(mc.base_of.at(g.name));
  Augmentation out{ring, {}};
  for (const GenInfo& g : mc.dga.generators()) {
    Int v = 0;
    if (g.r == g.c) {
      const std::string& base = mc.base_of.at(g.name);
      bool morse = g.kind == GenKind::reeb && base_basepoints.count(base) != 0;
      if (!morse) v = eps[g.r - 1].value(base);
    }
    out.values.insert_or_assign(g.name, ring.reduce(v));
  }
  auto report = check_augmentation(mc.dga, out);
  if (!report.ok())
    throw Error("diagonal_augmentation: result is not an augmentation:\n" +
                report.str());
  return out;
}

Dga rename_generators(const Dga& d,
                      const std::map<std::string, std::string>& names) {
  auto renamed = [&](const std::string& n) {
    auto it = names.find(n);
    return it == names.end() ? n : it->second;
  };
  std::map<std::string, NcPoly> values;
  std::vector<GenInfo> gens;
  for (const GenInfo& g : d.generators()) {
    GenInfo h = g;
    h.name = renamed(g.name);
    gens.push_back(h);
    if (g.kind == GenKind::basepoint) {
      values.insert_or_assign(g.name,
                              NcPoly::symbol(d.ring(), Symbol::inv(h.name, 1)));
      values.insert_or_assign(
          g.name + "^-1", NcPoly::symbol(d.ring(), Symbol::inv(h.name, -1)));
    } else {
      values.insert_or_assign(g.name,
                              NcPoly::symbol(d.ring(), Symbol::gen(h.name)));
    }
  }
  std::map<std::string, NcPoly> diff;
  for (const GenInfo& g : d.generators())
    if (g.kind == GenKind::reeb)
      diff.emplace(renamed(g.name), extend_hom(values, d.differential(g.name)));
  return Dga(d.ring(), std::move(gens), std::move(diff), d.component_count(),
             d.grading());
}

}  // namespace legaug
