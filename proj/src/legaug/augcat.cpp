// SPDX-License-Identifier: MIT

#include "legaug/augcat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace legaug {

namespace {

int parity(const Int& x) { return static_cast<int>(((x % 2) + 2) % 2); }
int parity(int x) { return ((x % 2) + 2) % 2; }

std::string plus_label(const std::string& base) { return base + "+"; }
std::string minus_label(const std::string& base) { return base + "-"; }

}  // namespace

std::size_t HomBasis::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].label == label) return i;
  throw Error("HomBasis: unknown label " + label);
}

bool HomBasis::has(const std::string& label) const {
  for (const BasisElement& b : elements)
    if (b.label == label) return true;
  return false;
}

HomElement HomElement::basis(Ring r, const std::string& label) {
  HomElement out(r);
  out.coeffs.insert_or_assign(label, r.reduce(1));
  return out;
}

Int HomElement::coeff(const std::string& label) const {
  auto it = coeffs.find(label);
  return it == coeffs.end() ? Int(0) : it->second;
}

void HomElement::add(const std::string& label, const Int& c) {
  Int v = ring.reduce(coeff(label) + c);
  if (v == 0)
    coeffs.erase(label);
  else
    coeffs.insert_or_assign(label, v);
}

HomElement HomElement::operator+(const HomElement& o) const {
  if (ring != o.ring) throw Error("HomElement: ring mismatch");
  HomElement out = *this;
  for (const auto& [l, c] : o.coeffs) out.add(l, c);
  return out;
}

HomElement HomElement::operator-(const HomElement& o) const {
  return *this + o.scaled(-1);
}

HomElement HomElement::operator-() const { return scaled(-1); }

HomElement HomElement::scaled(const Int& c) const {
  HomElement out(ring);
  for (const auto& [l, v] : coeffs) {
    Int w = ring.reduce(v * c);
    if (w != 0) out.coeffs.insert_or_assign(l, w);
  }
  return out;
}

bool HomElement::operator==(const HomElement& o) const {
  return ring == o.ring && coeffs == o.coeffs;
}

std::string HomElement::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : coeffs) {
    Int v = c;
    bool neg = false;
    if (ring.kind == Ring::Kind::Z && v < 0) {
      neg = true;
      v = -v;
    }
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (v != 1) os << v.str() << " ";
    os << l;
    first = false;
  }
  return os.str();
}

std::string CheckReport::str() const {
  std::ostringstream os;
  for (const auto& p : problems) os << "problem: " << p << "\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  return os.str();
}

AugCategory::AugCategory(const Dga& base, Ring field)
    : base_(change_ring(base, field)), field_(field) {
  // Z coefficients are allowed for the composition maps; operations that
  // need linear algebra or enumeration require a field (see require_field).
  auto report = check_dga(base_);
  if (!report.ok())
    throw Error("AugCategory: invalid base DGA:\n" + report.str());
  if (base_.grading() == Grading::none)
    throw Error("AugCategory: base needs a link grading");
  arcs_ = base_.component_count();
  {
    auto bps = base_.basepoints();
    if (static_cast<int>(bps.size()) != arcs_)
      throw Error("AugCategory: need one base point per arc");
    std::set<int> seen;
    for (const GenInfo& b : bps) seen.insert(b.c);
    if (static_cast<int>(seen.size()) != arcs_ || *seen.begin() != 1 ||
        *seen.rbegin() != arcs_)
      throw Error("AugCategory: base points not in bijection with arcs");
  }

  plus_.direction = HomDirection::plus;
  minus_.direction = HomDirection::minus;
  for (const GenInfo& g : base_.reeb_generators()) {
    BasisElement p{plus_label(g.name), BasisKind::chord, g.name, 0,
                   g.degree + 1};
    BasisElement m{minus_label(g.name), BasisKind::chord, g.name, 0,
                   g.degree + 1};
    plus_.elements.push_back(p);
    minus_.elements.push_back(m);
  }
  for (int k = 1; k <= arcs_; ++k)
    plus_.elements.push_back(
        {"x" + std::to_string(k) + "+", BasisKind::x, "", k, 1});
  for (int k = 1; k <= arcs_; ++k)
    plus_.elements.push_back(
        {"y" + std::to_string(k) + "+", BasisKind::y, "", k, 0});
  for (const BasisElement& b : plus_.elements)
    if (!by_label_.emplace(b.label, b).second)
      throw Error("AugCategory: generator name collides with a Morse label: " +
                  b.label);
  for (const BasisElement& b : minus_.elements) by_label_.emplace(b.label, b);
}

const HomBasis& AugCategory::basis(HomDirection dir) const {
  return dir == HomDirection::plus ? plus_ : minus_;
}

const BasisElement& AugCategory::lookup(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) throw Error("AugCategory: unknown label " + label);
  return it->second;
}

std::optional<int> AugCategory::degree_of(const HomElement& v) const {
  std::optional<int> deg;
  for (const auto& [l, c] : v.coeffs) {
    int d = lookup(l).degree;
    if (deg && *deg != d)
      throw Error("AugCategory: inhomogeneous element " + v.str());
    deg = d;
  }
  return deg;
}

void AugCategory::require_field(const char* op) const {
  if (!field_.is_field())
    throw Error(std::string("AugCategory: ") + op +
                " requires field coefficients");
}

std::vector<Augmentation> AugCategory::enumerate_augmentations() const {
  require_field("enumerate_augmentations");
  const int p = field_.p;
  struct Unknown {
    std::string name;
    bool unit;  // base point: values 1..p-1; otherwise 0..p-1
  };
  std::vector<Unknown> unknowns;
  std::vector<std::string> zeros;
  for (const GenInfo& g : base_.generators()) {
    if (g.kind == GenKind::basepoint)
      unknowns.push_back({g.name, true});
    else if (g.degree == 0)
      unknowns.push_back({g.name, false});
    else
      zeros.push_back(g.name);
  }
  // Re-order: base points first, then degree-0 generators, each in table
  // order, matching the documented lexicographic key.
  std::stable_partition(unknowns.begin(), unknowns.end(),
                        [](const Unknown& u) { return u.unit; });
  Int total = 1;
  for (const Unknown& u : unknowns) {
    total *= u.unit ? p - 1 : p;
    if (total > (Int(1) << 24))
      throw Error("enumerate_augmentations: search space exceeds 2^24");
  }
  std::size_t n = static_cast<std::size_t>(total);

  auto candidate = [&](std::size_t index) {
    Augmentation eps{field_, {}};
    // Most significant digit first.
    std::size_t rest = index;
    std::vector<Int> digits(unknowns.size());
    for (std::size_t i = unknowns.size(); i-- > 0;) {
      std::size_t radix = unknowns[i].unit ? p - 1 : p;
      std::size_t d = rest % radix;
      rest /= radix;
      digits[i] = unknowns[i].unit ? Int(d + 1) : Int(d);
    }
    for (std::size_t i = 0; i < unknowns.size(); ++i)
      eps.values.insert_or_assign(unknowns[i].name, digits[i]);
    for (const std::string& z : zeros) eps.values.insert_or_assign(z, 0);
    return eps;
  };

  int threads = 1;
  if (const char* env = std::getenv("LEGAUG_THREADS")) {
    threads = std::max(1, std::min(64, std::atoi(env)));
  }
  std::vector<std::vector<Augmentation>> found(
      static_cast<std::size_t>(threads));
  auto worker = [&](int w) {
    for (std::size_t i = w; i < n; i += threads) {
      Augmentation eps = candidate(i);
      if (is_augmentation(base_, eps))
        found[static_cast<std::size_t>(w)].push_back(std::move(eps));
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  // Merge the strided partitions back into global index order.
  std::vector<Augmentation> out;
  std::vector<std::size_t> pos(static_cast<std::size_t>(threads), 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto w = static_cast<std::size_t>(i % static_cast<std::size_t>(threads));
    auto& bucket = found[w];
    auto& c = pos[w];
    if (c < bucket.size() && bucket[c] == candidate(i)) {
      out.push_back(bucket[c]);
      ++c;
    }
  }
  return out;
}

const McopyDga& AugCategory::mcopy(int m) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = mcopies_.find(m);
  if (it == mcopies_.end())
    it = mcopies_.emplace(m, build_mcopy(base_, m)).first;
  return it->second;
}

std::string AugCategory::eps_key(const Augmentation& e) const {
  std::string key;
  for (const GenInfo& g : base_.generators()) {
    key += e.value(g.name).str();
    key += ",";
  }
  return key;
}

const AugCategory::Twisted& AugCategory::twisted(
    const std::vector<Augmentation>& eps) const {
  int m = static_cast<int>(eps.size());
  std::string key = std::to_string(m) + "|";
  for (const Augmentation& e : eps) {
    if (e.ring != field_) throw Error("AugCategory: augmentation ring mismatch");
    key += eps_key(e);
    key += "|";
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = twisted_.find(key);
  if (it == twisted_.end()) {
    auto mit = mcopies_.find(m);
    if (mit == mcopies_.end())
      mit = mcopies_.emplace(m, build_mcopy(base_, m)).first;
    Augmentation diag = diagonal_augmentation(mit->second, eps);
    Dga tw = twist(mit->second.dga, diag);
    Twisted t;
    t.diff = tw.differential_map();
    it = twisted_.emplace(key, std::move(t)).first;
  }
  return it->second;
}

std::string AugCategory::placed_name(const BasisElement& b, int i,
                                     int j) const {
  switch (b.kind) {
    case BasisKind::chord:
      return mcopy_name(b.base, i, j);
    case BasisKind::x:
      if (i >= j) throw Error("AugCategory: x element in a minus-type block");
      return mcopy_x_name(b.index, i, j);
    case BasisKind::y:
      if (i >= j) throw Error("AugCategory: y element in a minus-type block");
      return mcopy_y_name(b.index, i, j);
  }
  throw Error("AugCategory: bad basis element");
}

HomElement AugCategory::mk_blocks(
    const std::vector<Augmentation>& eps,
    const std::vector<std::pair<int, int>>& blocks,
    const std::vector<HomElement>& args) const {
  const std::size_t k = args.size();
  if (k == 0 || eps.size() != k + 1 || blocks.size() != k)
    throw Error("AugCategory: m_k arity mismatch");
  for (std::size_t q = 1; q < k; ++q)
    if (blocks[q].second != blocks[q - 1].first)
      throw Error("AugCategory: non-composable block chain");
  for (const HomElement& a : args)
    if (a.ring != field_) throw Error("AugCategory: argument ring mismatch");

  const int ro = blocks.back().first;
  const int co = blocks.front().second;
  const HomBasis& out_basis = ro < co ? plus_ : minus_;
  const Twisted& tw = twisted(eps);

  // Differentials of the output-block copies, in basis order.
  std::vector<const NcPoly*> out_diff(out_basis.size(), nullptr);
  for (std::size_t i = 0; i < out_basis.size(); ++i) {
    auto it = tw.diff.find(placed_name(out_basis.at(i), ro, co));
    if (it != tw.diff.end()) out_diff[i] = &it->second;
  }

  // Flatten supports; validate block orientation of each label.
  std::vector<std::vector<std::pair<const BasisElement*, Int>>> supp(k);
  for (std::size_t p = 0; p < k; ++p) {
    bool plus_block = blocks[p].first < blocks[p].second;
    for (const auto& [l, c] : args[p].coeffs) {
      const BasisElement& b = lookup(l);
      bool is_plus = l.back() == '+';
      if (is_plus != plus_block)
        throw Error("AugCategory: element " + l +
                    " does not live in its assigned block");
      supp[p].push_back({&b, c});
    }
    if (supp[p].empty()) return HomElement(field_);
  }

  HomElement out(field_);
  std::vector<std::size_t> odo(k, 0);
  while (true) {
    // Current tuple.
    Int coef = 1;
    std::vector<int> degs(k);
    for (std::size_t p = 0; p < k; ++p) {
      coef = field_.reduce(coef * supp[p][odo[p]].second);
      degs[p] = supp[p][odo[p]].first->degree;
    }
    // sigma = k(k-1)/2 + sum_{p<q} d_p d_q + sum over even written positions.
    int sigma = parity(static_cast<int>(k * (k - 1) / 2));
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q)
        sigma += parity(degs[p] * degs[q]);
    for (std::size_t p = 1; p < k; p += 2) sigma += parity(degs[p]);
    Int sign = parity(sigma) == 0 ? 1 : -1;
    // Word u_k u_{k-1} ... u_1 in m-copy symbols.
    Word w;
    for (std::size_t p = k; p-- > 0;)
      w.push_back(Symbol::gen(placed_name(*supp[p][odo[p]].first,
                                          blocks[p].first, blocks[p].second)));
    for (std::size_t i = 0; i < out_basis.size(); ++i) {
      if (!out_diff[i]) continue;
      Int c = out_diff[i]->coefficient_of(w);
      if (c != 0) out.add(out_basis.at(i).label, sign * coef * c);
    }
    // Advance odometer.
    std::size_t p = 0;
    while (p < k && ++odo[p] == supp[p].size()) {
      odo[p] = 0;
      ++p;
    }
    if (p == k) break;
  }
  return out;
}

HomElement AugCategory::mk(HomDirection dir,
                           const std::vector<Augmentation>& eps,
                           const std::vector<HomElement>& args) const {
  const int k = static_cast<int>(args.size());
  std::vector<std::pair<int, int>> blocks;
  blocks.reserve(args.size());
  if (dir == HomDirection::plus) {
    // Written position p carries alpha_{k+1-p} in block (k+1-p, k+2-p).
    for (int p = 1; p <= k; ++p) blocks.push_back({k + 1 - p, k + 2 - p});
  } else {
    // Written position p carries beta_p in block (p+1, p).
    for (int p = 1; p <= k; ++p) blocks.push_back({p + 1, p});
  }
  return mk_blocks(eps, blocks, args);
}

HomElement AugCategory::unit() const {
  HomElement e(field_);
  for (int kk = 1; kk <= arcs_; ++kk)
    e.add("y" + std::to_string(kk) + "+", field_.reduce(-1));
  return e;
}

Matrix AugCategory::m1_matrix(HomDirection dir, const Augmentation& e1,
                              const Augmentation& e2) const {
  const HomBasis& b = basis(dir);
  std::vector<Augmentation> eps =
      dir == HomDirection::plus ? std::vector<Augmentation>{e1, e2}
                                : std::vector<Augmentation>{e2, e1};
  Matrix m(field_, b.size(), b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    HomElement col =
        mk(dir, eps, {HomElement::basis(field_, b.at(j).label)});
    for (const auto& [l, c] : col.coeffs) m.set(b.index_of(l), j, c);
  }
  return m;
}

namespace {

std::vector<std::size_t> coords_of_degree(const std::vector<int>& degs,
                                          int k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degs.size(); ++i)
    if (degs[i] == k) out.push_back(i);
  return out;
}

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
  Matrix out(m.ring(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.set(i, j, m.at(rows[i], cols[j]));
  return out;
}

std::map<int, std::size_t> complex_cohomology(const Matrix& d,
                                              const std::vector<int>& degs) {
  std::map<int, std::size_t> out;
  std::set<int> present(degs.begin(), degs.end());
  for (int k : present) {
    auto ck = coords_of_degree(degs, k);
    auto ck1 = coords_of_degree(degs, k + 1);
    auto ckm = coords_of_degree(degs, k - 1);
    std::size_t rk = rank(submatrix(d, ck1, ck));
    std::size_t rkm = rank(submatrix(d, ck, ckm));
    out[k] = ck.size() - rk - rkm;
  }
  return out;
}

}  // namespace

std::map<int, std::size_t> AugCategory::cohomology(HomDirection dir,
                                                   const Augmentation& e1,
                                                   const Augmentation& e2)
    const {
  require_field("cohomology");
  const HomBasis& b = basis(dir);
  std::vector<int> degs;
  for (const BasisElement& el : b.elements) degs.push_back(el.degree);
  return complex_cohomology(m1_matrix(dir, e1, e2), degs);
}

HomotopyResult AugCategory::dga_homotopic(const Augmentation& e1,
                                          const Augmentation& e2) const {
  require_field("dga_homotopic");
  if (e1.ring != field_ || e2.ring != field_)
    throw Error("dga_homotopic: ring mismatch");
  for (const GenInfo& b : base_.basepoints())
    if (field_.reduce(e1.value(b.name)) != field_.reduce(e2.value(b.name)))
      return {false, {}};

  std::map<std::string, int> degmap = base_.degree_map();
  std::vector<std::string> unknowns;
  std::map<std::string, std::size_t> col;
  for (const GenInfo& g : base_.reeb_generators())
    if (g.degree == -1) {
      col[g.name] = unknowns.size();
      unknowns.push_back(g.name);
    }
  auto reeb = base_.reeb_generators();
  Matrix sys(field_, reeb.size(), unknowns.size());
  std::vector<Int> rhs(reeb.size(), Int(0));
  for (std::size_t row = 0; row < reeb.size(); ++row) {
    const GenInfo& g = reeb[row];
    rhs[row] = field_.reduce(e1.value(g.name) - e2.value(g.name));
    NcPoly dg = base_.differential(g.name);
    for (const auto& [w, c] : dg.terms()) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        const Symbol& s = w[j];
        if (s.invertible()) continue;  // K vanishes on base points
        auto it = col.find(s.name());
        if (it == col.end()) continue;  // K vanishes off degree -1
        Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(j + 1), w.end());
        Int v1 = e1.evaluate(NcPoly(field_, 1, prefix));
        if (v1 == 0) continue;
        Int v2 = e2.evaluate(NcPoly(field_, 1, suffix));
        if (v2 == 0) continue;
        int sgn = parity(word_degree(prefix, degmap));
        sys.add_at(row, it->second, (sgn == 0 ? c : -c) * v1 * v2);
      }
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) return {false, {}};
  HomotopyResult out;
  out.homotopic = true;
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    out.K.insert_or_assign(unknowns[j], (*sol)[j]);
  return out;
}

bool AugCategory::is_isomorphic_augplus(const Augmentation& e1,
                                        const Augmentation& e2) const {
  return dga_homotopic(e1, e2).homotopic;
}

std::optional<HomElement> AugCategory::iso_cocycle(
    const Augmentation& e1, const Augmentation& e2) const {
  HomotopyResult h = dga_homotopic(e1, e2);
  if (!h.homotopic) return std::nullopt;
  HomElement alpha = unit();
  for (const auto& [name, v] : h.K) alpha.add(plus_label(name), -v);
  return alpha;
}

std::optional<HomElement> AugCategory::inverse_cocycle(
    const Augmentation& e1, const Augmentation& e2,
    const HomElement& alpha) const {
  require_field("inverse_cocycle");
  // alpha = unit - A with A supported on degree-0 chord labels.
  HomElement A = unit() - alpha;
  for (const auto& [l, c] : A.coeffs) {
    const BasisElement& b = lookup(l);
    if (b.kind != BasisKind::chord || b.degree != 0)
      return std::nullopt;  // not of the homotopy-witness shape
  }
  std::vector<std::string> chords;  // degree-0 plus chord labels
  for (const BasisElement& b : plus_.elements)
    if (b.kind == BasisKind::chord && b.degree == 0)
      chords.push_back(b.label);
  // System B_i - [m2(B, A)]_i = A_i over the unknown coefficients B_j.
  std::vector<Augmentation> chain = {e1, e2, e1};
  Matrix sys(field_, chords.size(), chords.size());
  std::vector<Int> rhs(chords.size(), Int(0));
  for (std::size_t j = 0; j < chords.size(); ++j) {
    HomElement col =
        mk(HomDirection::plus, chain,
           {HomElement::basis(field_, chords[j]), A});
    for (std::size_t i = 0; i < chords.size(); ++i) {
      Int v = (i == j ? Int(1) : Int(0)) - col.coeff(chords[i]);
      sys.set(i, j, v);
    }
  }
  for (std::size_t i = 0; i < chords.size(); ++i) rhs[i] = A.coeff(chords[i]);
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  HomElement beta = unit();
  for (std::size_t j = 0; j < chords.size(); ++j)
    beta.add(chords[j], (*sol)[j]);
  // Verify m2(beta, alpha) = unit and m1(beta) = 0.
  if (mk(HomDirection::plus, chain, {beta, alpha}) != unit())
    return std::nullopt;
  if (!mk(HomDirection::plus, {e2, e1}, {beta}).is_zero())
    return std::nullopt;
  return beta;
}

HomElement AugCategory::m2_block(const std::array<Augmentation, 3>& eps,
                                 int p, int q, int s, const HomElement& first,
                                 const HomElement& second) const {
  std::set<int> perm = {p, q, s};
  if (perm != std::set<int>{1, 2, 3})
    throw Error("m2_block: (p, q, s) must be a permutation of (1, 2, 3)");
  std::vector<Augmentation> chain(eps.begin(), eps.end());
  return mk_blocks(chain, {{q, s}, {p, q}}, {first, second});
}

HomElement AugCategory::graded_m2_mixed(
    const std::array<HomDirection, 3>& pattern,
    const std::array<Augmentation, 3>& eps, const HomElement& first,
    const HomElement& second) const {
  using D = HomDirection;
  const D f = pattern[0], g = pattern[1], r = pattern[2];
  int p, q, s;
  if (f == D::plus && g == D::plus && r == D::plus) {
    p = 1; q = 2; s = 3;
  } else if (f == D::minus && g == D::minus && r == D::minus) {
    p = 3; q = 2; s = 1;
  } else if (f == D::plus && g == D::minus && r == D::plus) {
    p = 2; q = 1; s = 3;
  } else if (f == D::minus && g == D::plus && r == D::plus) {
    p = 1; q = 3; s = 2;
  } else if (f == D::plus && g == D::minus && r == D::minus) {
    p = 3; q = 1; s = 2;
  } else if (f == D::minus && g == D::plus && r == D::minus) {
    p = 2; q = 3; s = 1;
  } else {
    throw Error("graded_m2_mixed: forbidden sign pattern");
  }
  return m2_block(eps, p, q, s, first, second);
}

CheckReport AugCategory::exact_sequence_check(const Augmentation& e1,
                                              const Augmentation& e2) const {
  require_field("exact_sequence_check");
  CheckReport rep;
  bool hyp = true;
  for (const GenInfo& b : base_.basepoints())
    if (field_.reduce(e1.value(b.name)) != field_.reduce(e2.value(b.name)))
      hyp = false;
  if (!hyp) {
    rep.notes.push_back(
        "hypothesis e1(t) = e2(t) fails; sequence not expected to be exact");
  }

  const std::size_t r = minus_.size();          // chords
  const std::size_t n = plus_.size();           // chords + x's + y's
  Matrix M = m1_matrix(HomDirection::plus, e1, e2);
  Matrix N = m1_matrix(HomDirection::minus, e1, e2);

  // Block triangularity: chords map to chords.
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (M.at(i, j) != 0)
        rep.problems.push_back("m1(" + plus_.at(j).label +
                               ") has Morse component " + plus_.at(i).label);
  // Sub-block equals the minus differential under a+ <-> a-.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (M.at(i, j) != N.at(i, j))
        rep.problems.push_back("sub-block mismatch at (" +
                               minus_.at(i).label + ", " +
                               minus_.at(j).label + ")");
  if (!rep.problems.empty()) return rep;

  // Quotient complex on span{x+, y+}.
  bool quot_zero = true;
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = r; j < n; ++j)
      if (M.at(i, j) != 0) quot_zero = false;
  rep.notes.push_back(quot_zero ? "quotient differential is zero"
                                : "quotient differential is nonzero "
                                  "(multiple base points per component)");

  // Degree tables.
  std::vector<int> dtot, dsub, dquot;
  for (const BasisElement& b : plus_.elements) dtot.push_back(b.degree);
  for (std::size_t i = 0; i < r; ++i) dsub.push_back(minus_.at(i).degree);
  for (std::size_t i = r; i < n; ++i) dquot.push_back(plus_.at(i).degree);
  Matrix Q(field_, n - r, n - r);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = r; j < n; ++j) Q.set(i - r, j - r, M.at(i, j));

  auto hsub = complex_cohomology(N, dsub);
  auto htot = complex_cohomology(M, dtot);
  auto hquot = complex_cohomology(Q, dquot);

  // Rank of the induced map on cohomology: dim span(images + coboundaries)
  // minus dim coboundaries, where images are chain-level images of cocycles.
  auto induced_rank = [&](const std::vector<std::vector<Int>>& images,
                          const Matrix& bnd_block) {
    std::size_t dim = bnd_block.rows();
    Matrix all(field_, dim, images.size() + bnd_block.cols());
    for (std::size_t j = 0; j < images.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) all.set(i, j, images[j][i]);
    for (std::size_t j = 0; j < bnd_block.cols(); ++j)
      for (std::size_t i = 0; i < dim; ++i)
        all.set(i, images.size() + j, bnd_block.at(i, j));
    return rank(all) - rank(bnd_block);
  };

  std::set<int> degrees;
  for (int d : dtot) {
    degrees.insert(d - 1);
    degrees.insert(d);
    degrees.insert(d + 1);
  }
  std::map<int, std::size_t> ri, rpi, rdelta;  // ranks of i*, pi*, delta
  for (int k : degrees) {
    // i*: cocycles of sub in degree k, included into tot, modulo tot
    // coboundaries.
    auto sk = coords_of_degree(dsub, k);
    auto sk1 = coords_of_degree(dsub, k + 1);
    auto tk = coords_of_degree(dtot, k);
    auto tk1 = coords_of_degree(dtot, k + 1);
    auto qk = coords_of_degree(dquot, k);
    auto qk1 = coords_of_degree(dquot, k + 1);
    auto tkm = coords_of_degree(dtot, k - 1);
    auto skm = coords_of_degree(dsub, k - 1);
    auto qkm = coords_of_degree(dquot, k - 1);

    auto zsub = kernel_basis(submatrix(N, sk1, sk));
    auto ztot = kernel_basis(submatrix(M, tk1, tk));
    auto zquot = kernel_basis(submatrix(Q, qk1, qk));
    Matrix btot = submatrix(M, tk, tkm);
    Matrix bsub = submatrix(N, sk, skm);
    Matrix bquot = submatrix(Q, qk, qkm);
    Matrix bsub1 = submatrix(N, sk1, sk);

    // Sub coordinates sit at the same chord positions inside tot.
    std::vector<std::vector<Int>> i_img;
    for (const auto& z : zsub) {
      std::vector<Int> v(tk.size(), Int(0));
      for (std::size_t a = 0; a < sk.size(); ++a) {
        // chord coordinate sk[a] of sub == coordinate sk[a] of tot
        auto itpos = std::find(tk.begin(), tk.end(), sk[a]);
        v[static_cast<std::size_t>(itpos - tk.begin())] = z[a];
      }
      i_img.push_back(std::move(v));
    }
    ri[k] = induced_rank(i_img, btot);

    // pi*: cocycles of tot projected to quotient coordinates.
    std::vector<std::vector<Int>> pi_img;
    for (const auto& z : ztot) {
      std::vector<Int> v(qk.size(), Int(0));
      for (std::size_t a = 0; a < tk.size(); ++a) {
        if (tk[a] < r) continue;
        std::size_t qc = tk[a] - r;
        auto itpos = std::find(qk.begin(), qk.end(), qc);
        v[static_cast<std::size_t>(itpos - qk.begin())] = z[a];
      }
      pi_img.push_back(std::move(v));
    }
    rpi[k] = induced_rank(pi_img, bquot);

    // delta: lift quotient cocycles by zero on chords, apply M, read the
    // chord part in degree k+1, reduce modulo sub coboundaries.
    std::vector<std::vector<Int>> d_img;
    for (const auto& z : zquot) {
      std::vector<Int> lift(n, Int(0));
      for (std::size_t a = 0; a < qk.size(); ++a) lift[r + qk[a]] = z[a];
      std::vector<Int> image(n, Int(0));
      for (std::size_t i = 0; i < n; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += M.at(i, j) * lift[j];
        image[i] = field_.reduce(acc);
      }
      // Must land in the chord span (block triangularity + cocycle).
      for (std::size_t i = r; i < n; ++i)
        if (image[i] != 0)
          rep.problems.push_back("connecting map leaves the sub-complex");
      std::vector<Int> v(sk1.size(), Int(0));
      for (std::size_t a = 0; a < sk1.size(); ++a) v[a] = image[sk1[a]];
      d_img.push_back(std::move(v));
    }
    rdelta[k] = induced_rank(d_img, bsub1);
  }

  auto dim_of = [](const std::map<int, std::size_t>& h, int k) {
    auto it = h.find(k);
    return it == h.end() ? std::size_t(0) : it->second;
  };
  for (int k : degrees) {
    std::size_t hs = dim_of(hsub, k), ht = dim_of(htot, k),
                hq = dim_of(hquot, k);
    std::size_t rd_prev = rdelta.count(k - 1) ? rdelta[k - 1] : 0;
    if (hs != rd_prev + ri[k])
      rep.problems.push_back("LES not exact at H^" + std::to_string(k) +
                             " of the minus complex");
    if (ht != ri[k] + rpi[k])
      rep.problems.push_back("LES not exact at H^" + std::to_string(k) +
                             " of hom");
    if (hq != rpi[k] + rdelta[k])
      rep.problems.push_back("LES not exact at H^" + std::to_string(k) +
                             " of the quotient");
  }
  {
    std::ostringstream os;
    os << "quotient cohomology:";
    for (const auto& [k, d] : hquot)
      if (d != 0) os << " H^" << k << "=" << d;
    rep.notes.push_back(os.str());
  }
  return rep;
}

CheckReport AugCategory::duality_check(const Augmentation& e1,
                                       const Augmentation& e2) const {
  require_field("duality_check");
  CheckReport rep;
  auto hplus = cohomology(HomDirection::plus, e1, e2);
  auto hminus = cohomology(HomDirection::minus, e2, e1);
  auto dim_of = [](const std::map<int, std::size_t>& h, int k) {
    auto it = h.find(k);
    return it == h.end() ? std::size_t(0) : it->second;
  };
  std::set<int> ks;
  for (const auto& [k, d] : hplus) ks.insert(k);
  for (const auto& [k, d] : hminus) ks.insert(2 - k);
  for (int k : ks) {
    std::size_t a = dim_of(hplus, k), b = dim_of(hminus, 2 - k);
    if (a != b)
      rep.problems.push_back("dim H^" + std::to_string(k) + " hom = " +
                             std::to_string(a) + " but dim H^" +
                             std::to_string(2 - k) + " Hom_- = " +
                             std::to_string(b));
  }
  return rep;
}

HomElement AugCategory::ainfty_defect(
    HomDirection dir, const std::vector<Augmentation>& eps,
    const std::vector<HomElement>& args) const {
  const int n = static_cast<int>(args.size());
  if (eps.size() != args.size() + 1)
    throw Error("ainfty_defect: chain length mismatch");
  std::vector<int> degs(args.size(), 0);
  for (std::size_t i = 0; i < args.size(); ++i) {
    auto d = degree_of(args[i]);
    if (!d) return HomElement(field_);  // a zero argument kills every term
    degs[i] = *d;
  }
  HomElement defect(field_);
  for (int s = 1; s <= n; ++s)
    for (int rr = 0; rr + s <= n; ++rr) {
      int t = n - rr - s;
      // Inner chain and arguments (written positions rr+1 .. rr+s).
      std::vector<HomElement> inner_args(args.begin() + rr,
                                         args.begin() + rr + s);
      std::vector<Augmentation> inner_eps, outer_eps;
      if (dir == HomDirection::plus) {
        // written w carries alpha_{n+1-w}; inner chain eps[n-rr-s .. n-rr].
        inner_eps.assign(eps.begin() + (n - rr - s), eps.begin() + (n - rr) + 1);
        outer_eps.assign(eps.begin(), eps.begin() + (n - rr - s) + 1);
        outer_eps.insert(outer_eps.end(), eps.begin() + (n - rr), eps.end());
      } else {
        // written w carries beta_w; inner chain eps[rr .. rr+s].
        inner_eps.assign(eps.begin() + rr, eps.begin() + rr + s + 1);
        outer_eps.assign(eps.begin(), eps.begin() + rr + 1);
        outer_eps.insert(outer_eps.end(), eps.begin() + rr + s, eps.end());
      }
      HomElement inner = mk(dir, inner_eps, inner_args);
      std::vector<HomElement> outer_args(args.begin(), args.begin() + rr);
      outer_args.push_back(inner);
      outer_args.insert(outer_args.end(), args.begin() + rr + s, args.end());
      // Koszul sign from moving m_s (degree 2 - s) past the first rr inputs,
      // plus the relation sign (-1)^{rr + s t}.
      int sgn = parity(rr + s * t);
      int passed = 0;
      for (int i = 0; i < rr; ++i) passed += degs[i];
      sgn += parity(s * passed);
      HomElement term = mk(dir, outer_eps, outer_args);
      defect = defect + (parity(sgn) == 0 ? term : -term);
    }
  return defect;
}

HomElement m1_y_oracle(const AugCategory& cat, const Augmentation& e1,
                       const Augmentation& e2) {
  const Dga& d = cat.dga();
  auto bps = d.basepoints();
  if (bps.size() != 1)
    throw Error("m1_y_oracle: requires a single base point");
  const Ring& f = cat.field();
  HomElement out(f);
  Int t1 = e1.value(bps[0].name), t2 = e2.value(bps[0].name);
  out.add("x1+", f.reduce(f.invert(t1) * t2 - 1));
  for (const GenInfo& g : d.reeb_generators()) {
    Int v = e2.value(g.name) -
            (parity(g.degree) == 0 ? e1.value(g.name) : -e1.value(g.name));
    out.add(g.name + "+", f.reduce(v));
  }
  return out;
}

}  // namespace legaug
