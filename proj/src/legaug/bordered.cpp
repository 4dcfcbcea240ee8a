// SPDX-License-Identifier: MIT

#include "legaug/bordered.hpp"

#include <algorithm>

namespace legaug {

namespace {

NcPoly sym(Ring ring, const std::string& name) {
  return NcPoly::symbol(ring, Symbol::gen(name));
}

std::string crossing_name(int j) { return "a" + std::to_string(j); }
std::string cusp_name(int k) { return "c" + std::to_string(k); }
std::string basepoint_name(int k) { return "t" + std::to_string(k); }

void check_mu(int n, const std::vector<int>& mu) {
  if (static_cast<int>(mu.size()) != n)
    throw Error("bordered: mu has " + std::to_string(mu.size()) +
                " entries, expected " + std::to_string(n));
}

/// Line-algebra differential of a_ij from a degree table for the positions.
NcPoly line_diff(Ring ring, int i, int j, const std::vector<int>& mu) {
  NcPoly out(ring);
  for (int k = i + 1; k < j; ++k) {
    int deg_ik = mu[i - 1] - mu[k - 1] - 1;
    NcPoly term = sym(ring, line_gen_name(i, k)) * sym(ring, line_gen_name(k, j));
    out = out + (deg_ik % 2 == 0 ? -term : term);  // (-1)^{|a_ik|+1}
  }
  return out;
}

void append_line_generators(int n, const std::vector<int>& mu, Ring ring,
                            std::vector<GenInfo>& gens,
                            std::map<std::string, NcPoly>& diff) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      gens.push_back({line_gen_name(i, j), mu[i - 1] - mu[j - 1] - 1,
                      GenKind::reeb, 1, 1});
      diff.emplace(line_gen_name(i, j), line_diff(ring, i, j, mu));
    }
}

}  // namespace

std::string line_gen_name(int i, int j) {
  return "a" + std::to_string(i) + "_" + std::to_string(j);
}

Dga line_dga(int n, const std::vector<int>& mu, Ring ring) {
  check_mu(n, mu);
  std::vector<GenInfo> gens;
  std::map<std::string, NcPoly> diff;
  append_line_generators(n, mu, ring, gens, diff);
  return Dga(ring, std::move(gens), std::move(diff));
}

Dga crossing_slice_dga(int n, int k, const std::vector<int>& mu, Ring ring) {
  check_mu(n, mu);
  if (k < 1 || k >= n) throw Error("crossing_slice_dga: k out of range");
  std::vector<GenInfo> gens;
  std::map<std::string, NcPoly> diff;
  append_line_generators(n, mu, ring, gens, diff);
  gens.push_back({"c", mu[k - 1] - mu[k], GenKind::reeb, 1, 1});
  diff.emplace("c", sym(ring, line_gen_name(k, k + 1)));
  return Dga(ring, std::move(gens), std::move(diff));
}

Dga right_cusp_slice_dga(int n, const std::vector<int>& mu,
                         const std::vector<int>& sigma, Ring ring) {
  check_mu(n, mu);
  if (n % 2 != 0) throw Error("right_cusp_slice_dga: n must be even");
  if (static_cast<int>(sigma.size()) != n / 2)
    throw Error("right_cusp_slice_dga: need one sign per cusp");
  for (int k = 1; k <= n / 2; ++k) {
    if (mu[2 * k - 2] != mu[2 * k - 1] + 1)
      throw Error("right_cusp_slice_dga: mu(2k-1) = mu(2k)+1 fails at cusp " +
                  std::to_string(k));
    if (sigma[k - 1] != 1 && sigma[k - 1] != -1)
      throw Error("right_cusp_slice_dga: signs must be +-1");
  }
  std::vector<GenInfo> gens;
  std::map<std::string, NcPoly> diff;
  append_line_generators(n, mu, ring, gens, diff);
  for (int k = 1; k <= n / 2; ++k) {
    std::string x = "x" + std::to_string(k);
    std::string t = basepoint_name(k);
    gens.push_back({x, 1, GenKind::reeb, 1, 1});
    gens.push_back({t, 0, GenKind::basepoint, 1, 1});
    diff.emplace(x, NcPoly::symbol(ring, Symbol::inv(t, sigma[k - 1])) +
                        sym(ring, line_gen_name(2 * k - 1, 2 * k)));
  }
  return Dga(ring, std::move(gens), std::move(diff));
}

BoundaryMatrix left_cusp_matrix(int n, Ring ring) {
  if (n <= 0 || n % 2 != 0) throw Error("left_cusp_matrix: n must be even");
  BoundaryMatrix M(ring, n);
  for (int k = 1; k <= n / 2; ++k)
    M.entry(2 * k - 1, 2 * k) = NcPoly::one(ring);
  return M;
}

BoundaryMatrix crossing_corestriction(const BoundaryMatrix& M, int k,
                                      const NcPoly& c, int deg_c) {
  if (k < 1 || k >= M.n) throw Error("crossing_corestriction: k out of range");
  Ring ring = M.ring;
  BoundaryMatrix N(ring, M.n);
  for (int i = 1; i <= M.n; ++i) {
    for (int j = i + 1; j <= M.n; ++j) {
      if (i == k && j == k + 1) continue;  // b_{k,k+1} -> 0
      NcPoly v(ring);
      if (i != k && i != k + 1 && j != k && j != k + 1) {
        v = M.entry(i, j);
      } else if (j == k) {  // i < k
        v = M.entry(i, k + 1) + M.entry(i, k) * c;
      } else if (i == k) {  // j > k+1
        v = M.entry(k + 1, j);
      } else if (j == k + 1) {  // i < k
        v = M.entry(i, k);
      } else {  // i == k+1, j > k+1
        NcPoly cross = c * M.entry(k + 1, j);
        v = M.entry(k, j) + (deg_c % 2 == 0 ? -cross : cross);
      }
      N.entry(i, j) = v;
    }
  }
  return N;
}

AssembleResult assemble(const PlatDiagram& d, Ring ring,
                        const std::vector<int>& flip_components) {
  MaslovAssignment mu = solve_maslov(d);
  TraceResult trace = trace_knot(d, flip_components);
  const int cusps = d.num_cusps();

  std::vector<GenInfo> gens;
  std::map<std::string, NcPoly> diff;
  std::vector<BoundaryMatrix> matrices;
  matrices.push_back(left_cusp_matrix(d.n, ring));
  for (int j = 1; j <= d.num_crossings(); ++j) {
    int k = d.crossings[j - 1];
    int deg = mu.at(j - 1, k) - mu.at(j - 1, k + 1);
    std::string name = crossing_name(j);
    gens.push_back({name, deg, GenKind::reeb, trace.crossing_rc[j - 1].first,
                    trace.crossing_rc[j - 1].second});
    diff.emplace(name, matrices.back().entry(k, k + 1));
    matrices.push_back(
        crossing_corestriction(matrices.back(), k, sym(ring, name), deg));
  }
  for (int k = 1; k <= cusps; ++k) {
    std::string name = cusp_name(k), t = basepoint_name(k);
    gens.push_back({name, 1, GenKind::reeb, trace.cusp_rc[k - 1].first,
                    trace.cusp_rc[k - 1].second});
    gens.push_back({t, 0, GenKind::basepoint, trace.t_rc[k - 1].first,
                    trace.t_rc[k - 1].second});
    diff.emplace(name,
                 NcPoly::symbol(ring, Symbol::inv(t, trace.sigma[k - 1])) +
                     matrices.back().entry(2 * k - 1, 2 * k));
  }
  Dga dga(ring, std::move(gens), std::move(diff), cusps, Grading::weak);
  return AssembleResult{std::move(dga), std::move(mu), std::move(trace),
                        std::move(matrices)};
}

SectionResult sections(const PlatDiagram& d, int lo, int hi, Ring ring,
                       const std::vector<int>& flip_components) {
  const int r = d.num_crossings();
  if (lo < 0 || hi > r + 1 || lo > hi)
    throw Error("sections: invalid slice range");
  MaslovAssignment mu = solve_maslov(d);
  TraceResult trace = trace_knot(d, flip_components);

  std::vector<GenInfo> gens;
  std::map<std::string, NcPoly> diff;
  BoundaryMatrix M(ring, d.n);
  int first_crossing = std::max(lo, 1);
  if (lo == 0) {
    M = left_cusp_matrix(d.n, ring);
  } else {
    // Free left boundary: the line algebra at region lo-1 is part of the DGA
    // and the fold starts from the generic matrix of its generators.
    const std::vector<int>& bmu = mu.mu[lo - 1];
    append_line_generators(d.n, bmu, ring, gens, diff);
    for (int i = 1; i <= d.n; ++i)
      for (int j = i + 1; j <= d.n; ++j)
        M.entry(i, j) = sym(ring, line_gen_name(i, j));
  }
  for (int j = first_crossing; j <= std::min(hi, r); ++j) {
    int k = d.crossings[j - 1];
    int deg = mu.at(j - 1, k) - mu.at(j - 1, k + 1);
    std::string name = crossing_name(j);
    gens.push_back({name, deg, GenKind::reeb, 1, 1});
    diff.emplace(name, M.entry(k, k + 1));
    M = crossing_corestriction(M, k, sym(ring, name), deg);
  }
  if (hi == r + 1) {
    for (int k = 1; k <= d.num_cusps(); ++k) {
      std::string name = cusp_name(k), t = basepoint_name(k);
      gens.push_back({name, 1, GenKind::reeb, 1, 1});
      gens.push_back({t, 0, GenKind::basepoint, 1, 1});
      diff.emplace(name,
                   NcPoly::symbol(ring, Symbol::inv(t, trace.sigma[k - 1])) +
                       M.entry(2 * k - 1, 2 * k));
    }
    M = BoundaryMatrix(ring, 0);  // no right boundary after the cusp block
  }
  Dga dga(ring, std::move(gens), std::move(diff));
  return SectionResult{std::move(dga), std::move(M), lo, hi};
}

Dga glue_sections(const SectionResult& left_part,
                  const SectionResult& right_part) {
  if (right_part.lo != left_part.hi + 1)
    throw Error("glue_sections: sections are not adjacent");
  Ring ring = left_part.dga.ring();
  if (right_part.dga.ring() != ring)
    throw Error("glue_sections: ring mismatch");
  const BoundaryMatrix& M = left_part.right;
  if (M.n == 0)
    throw Error("glue_sections: left part has no right boundary");

  // Substitution: right part's boundary generators become matrix entries,
  // everything else is fixed.
  std::map<std::string, NcPoly> values;
  std::vector<GenInfo> gens = left_part.dga.generators();
  for (const GenInfo& g : right_part.dga.generators()) {
    bool boundary = false;
    for (int i = 1; i <= M.n && !boundary; ++i)
      for (int j = i + 1; j <= M.n; ++j)
        if (g.name == line_gen_name(i, j)) {
          values.insert_or_assign(g.name, M.entry(i, j));
          boundary = true;
          break;
        }
    if (boundary) continue;
    gens.push_back(g);
    if (g.kind == GenKind::basepoint) {
      values.insert_or_assign(
          g.name, NcPoly::symbol(ring, Symbol::inv(g.name, 1)));
      values.insert_or_assign(
          g.name + "^-1", NcPoly::symbol(ring, Symbol::inv(g.name, -1)));
    } else {
      values.insert_or_assign(g.name,
                              NcPoly::symbol(ring, Symbol::gen(g.name)));
    }
  }
  std::map<std::string, NcPoly> diff;
  for (const GenInfo& g : left_part.dga.generators())
    if (g.kind == GenKind::reeb)
      diff.emplace(g.name, left_part.dga.differential(g.name));
  for (const GenInfo& g : gens) {
    if (g.kind != GenKind::reeb || diff.count(g.name) ||
        !right_part.dga.has_generator(g.name))
      continue;
    diff.emplace(g.name,
                 extend_hom(values, right_part.dga.differential(g.name)));
  }
  return Dga(ring, std::move(gens), std::move(diff));
}

Augmentation restrict_augmentation(const AssembleResult& full,
                                   const Augmentation& eps, int lo, int hi) {
  {
    auto report = check_augmentation(full.dga, eps);
    if (!report.ok())
      throw Error("restrict_augmentation: invalid augmentation:\n" +
                  report.str());
  }
  // Build the values directly from the stored fold data.
  const int r = static_cast<int>(full.matrices.size()) - 1;
  if (lo < 0 || hi > r + 1 || lo > hi)
    throw Error("restrict_augmentation: invalid slice range");
  Augmentation out{eps.ring, {}};
  if (lo >= 1) {
    const BoundaryMatrix& M = full.matrices[lo - 1];
    for (int i = 1; i <= M.n; ++i)
      for (int j = i + 1; j <= M.n; ++j)
        out.values.insert_or_assign(
            line_gen_name(i, j),
            eps.evaluate(change_ring(M.entry(i, j), eps.ring)));
  }
  for (int j = std::max(lo, 1); j <= std::min(hi, r); ++j)
    out.values.insert_or_assign(crossing_name(j), eps.value(crossing_name(j)));
  if (hi == r + 1) {
    int cusps = full.matrices.front().n / 2;
    for (int k = 1; k <= cusps; ++k) {
      out.values.insert_or_assign(cusp_name(k), eps.value(cusp_name(k)));
      out.values.insert_or_assign(basepoint_name(k),
                                  eps.value(basepoint_name(k)));
    }
  }
  return out;
}

Augmentation glue_augmentations(const SectionResult& left_part,
                                const Augmentation& eps_left,
                                const SectionResult& right_part,
                                const Augmentation& eps_right) {
  if (right_part.lo != left_part.hi + 1)
    throw Error("glue_augmentations: sections are not adjacent");
  if (eps_left.ring != eps_right.ring)
    throw Error("glue_augmentations: ring mismatch");
  const BoundaryMatrix& M = left_part.right;
  Augmentation out{eps_left.ring, {}};
  for (const GenInfo& g : left_part.dga.generators())
    out.values.insert_or_assign(g.name, eps_left.value(g.name));
  for (const GenInfo& g : right_part.dga.generators()) {
    bool boundary = false;
    for (int i = 1; i <= M.n && !boundary; ++i)
      for (int j = i + 1; j <= M.n; ++j)
        if (g.name == line_gen_name(i, j)) {
          Int induced = eps_left.evaluate(
              change_ring(M.entry(i, j), eps_left.ring));
          if (eps_left.ring.reduce(eps_right.value(g.name)) != induced)
            throw Error("glue_augmentations: incompatible on " + g.name);
          boundary = true;
          break;
        }
    if (!boundary) out.values.insert_or_assign(g.name, eps_right.value(g.name));
  }
  return out;
}

}  // namespace legaug
