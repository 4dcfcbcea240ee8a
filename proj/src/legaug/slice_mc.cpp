// SPDX-License-Identifier: MIT

#include "legaug/slice_mc.hpp"

#include <algorithm>
#include <sstream>

namespace legaug {

namespace {

int parity(long long v) { return static_cast<int>(((v % 2) + 2) % 2); }
Int sign_of(long long exponent) { return parity(exponent) ? Int(-1) : Int(1); }

/// (-1)^{(mu(i)+1) mu(j) + 1}, the coefficient of |j><i| in the image of
/// a_ij+ under the line functor.
Int sigma(const std::vector<int>& mu, int i, int j) {
  long long e =
      static_cast<long long>(mu[static_cast<std::size_t>(i - 1)] + 1) *
          mu[static_cast<std::size_t>(j - 1)] +
      1;
  return sign_of(e);
}

Int random_value(std::mt19937& rng, int p) {
  return Int(std::uniform_int_distribution<int>(0, p - 1)(rng));
}

Int random_unit(std::mt19937& rng, int p) {
  return Int(std::uniform_int_distribution<int>(1, p - 1)(rng));
}

}  // namespace

// ---------------------------------------------------------------------------
// Morse complex category
// ---------------------------------------------------------------------------

MCObject::MCObject(Ring field, std::vector<int> mu_values)
    : mu(std::move(mu_values)),
      d(field, mu.size(), mu.size()) {
  if (!field.is_field()) throw Error("MCObject: field coefficients required");
}

const Int& MCObject::entry(int j, int i) const {
  return d.at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1));
}

void MCObject::set_entry(int j, int i, const Int& v) {
  d.set(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1), v);
}

void MCObject::validate() const {
  for (int j = 1; j <= n(); ++j)
    for (int i = 1; i <= n(); ++i) {
      if (entry(j, i) == 0) continue;
      if (j <= i)
        throw Error("MCObject: differential is not strictly lower triangular");
      if (mu[static_cast<std::size_t>(i - 1)] -
              mu[static_cast<std::size_t>(j - 1)] !=
          1)
        throw Error("MCObject: differential entry of wrong degree at (" +
                    std::to_string(j) + ", " + std::to_string(i) + ")");
    }
  if (!(d * d).is_zero()) throw Error("MCObject: differential does not square to zero");
}

MCMorphism::MCMorphism(MCObject src, MCObject tgt, int deg)
    : source(std::move(src)),
      target(std::move(tgt)),
      phi(source.field(), source.mu.size(), source.mu.size()),
      degree(deg) {
  if (source.mu != target.mu)
    throw Error("MCMorphism: source and target have different Maslov data");
}

const Int& MCMorphism::entry(int j, int i) const {
  return phi.at(static_cast<std::size_t>(j - 1),
                static_cast<std::size_t>(i - 1));
}

void MCMorphism::set_entry(int j, int i, const Int& v) {
  phi.set(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1), v);
}

void MCMorphism::validate() const {
  int n = source.n();
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      if (entry(j, i) == 0) continue;
      if (j < i) throw Error("MCMorphism: map is not lower triangular");
      if (source.mu[static_cast<std::size_t>(i - 1)] -
              source.mu[static_cast<std::size_t>(j - 1)] !=
          degree)
        throw Error("MCMorphism: entry of wrong degree at (" +
                    std::to_string(j) + ", " + std::to_string(i) + ")");
    }
}

MCMorphism mc_differential(const MCMorphism& m) {
  MCMorphism out(m.source, m.target, m.degree + 1);
  Matrix first = m.target.d * m.phi;
  Matrix second = m.phi * m.source.d;
  out.phi = parity(m.degree) ? first + second : first - second;
  return out;
}

MCMorphism mc_compose(const MCMorphism& f, const MCMorphism& g) {
  if (!(f.source == g.target))
    throw Error("mc_compose: source/target mismatch");
  MCMorphism out(g.source, f.target, f.degree + g.degree);
  out.phi = f.phi * g.phi;
  return out;
}

void MCCrossObject::validate() const {
  d.validate();
  int n = d.n();
  if (k < 1 || k + 1 > n) throw Error("MCCrossObject: crossing index out of range");
  if (z != 0 && d.mu[static_cast<std::size_t>(k - 1)] !=
                    d.mu[static_cast<std::size_t>(k)])
    throw Error("MCCrossObject: z must vanish unless mu(k) = mu(k+1)");
  if (d.entry(k + 1, k) != 0)
    throw Error("MCCrossObject: <k+1|d|k> must vanish");
}

bool mc_cross_morphism_ok(const MCCrossObject& src, const MCCrossObject& tgt,
                          const MCMorphism& xi) {
  int k = src.k;
  const Ring& r = xi.phi.ring();
  Int lhs = xi.entry(k + 1, k);
  Int rhs =
      r.reduce(tgt.z * xi.entry(k, k) - src.z * xi.entry(k + 1, k + 1));
  return lhs == rhs;
}

Matrix theta_matrix(Ring field, int n, int k, const Int& z) {
  Matrix m = Matrix::identity(field, static_cast<std::size_t>(n));
  std::size_t a = static_cast<std::size_t>(k - 1), b = a + 1;
  m.set(a, a, -z);
  m.set(a, b, 1);
  m.set(b, a, 1);
  m.set(b, b, 0);
  return m;
}

MCObject mc_rho_L(const MCCrossObject& obj) { return obj.d; }

MCObject mc_rho_R(const MCCrossObject& obj) {
  std::vector<int> mu_r = obj.d.mu;
  std::swap(mu_r[static_cast<std::size_t>(obj.k - 1)],
            mu_r[static_cast<std::size_t>(obj.k)]);
  Matrix th = theta_matrix(obj.d.field(), obj.d.n(), obj.k, obj.z);
  auto inv = inverse(th);
  MCObject out(obj.d.field(), mu_r);
  out.d = th * obj.d.d * *inv;
  return out;
}

MCMorphism mc_rho_R(const MCCrossObject& src, const MCCrossObject& tgt,
                    const MCMorphism& xi) {
  MCMorphism out(mc_rho_R(src), mc_rho_R(tgt), xi.degree);
  Matrix th_src = theta_matrix(src.d.field(), src.d.n(), src.k, src.z);
  Matrix th_tgt = theta_matrix(tgt.d.field(), tgt.d.n(), tgt.k, tgt.z);
  out.phi = th_tgt * xi.phi * *inverse(th_src);
  return out;
}

namespace {

void require_cusp_profile(const std::vector<int>& mu) {
  if (mu.size() % 2 != 0)
    throw Error("cusp profile: even strand count required");
  for (std::size_t k = 0; 2 * k < mu.size(); ++k)
    if (mu[2 * k] != mu[2 * k + 1] + 1)
      throw Error("cusp profile: mu(2k-1) = mu(2k) + 1 required");
}

}  // namespace

bool cusp_membership(const MCObject& d) {
  require_cusp_profile(d.mu);
  for (int k = 1; 2 * k <= d.n(); ++k)
    if (d.entry(2 * k, 2 * k - 1) == 0) return false;
  return true;
}

MCObject cusp_d0(Ring field, const std::vector<int>& mu) {
  require_cusp_profile(mu);
  MCObject out(field, mu);
  for (int k = 1; 2 * k <= out.n(); ++k) out.set_entry(2 * k, 2 * k - 1, 1);
  return out;
}

MCMorphism cusp_iso(const MCObject& d) {
  if (!cusp_membership(d))
    throw Error("cusp_iso: object is not in the cusp category");
  MCObject d0 = cusp_d0(d.field(), d.mu);
  MCMorphism u(d, d0, 0);
  Matrix d0t = d0.d.transpose();
  u.phi = d0.d * d0t + d0t * d.d;
  u.validate();
  if (!(d0.d * u.phi == u.phi * d.d))
    throw Error("cusp_iso: intertwiner identity failed");
  if (!inverse(u.phi).has_value())
    throw Error("cusp_iso: intertwiner is singular");
  return u;
}

// ---------------------------------------------------------------------------
// Line slice
// ---------------------------------------------------------------------------

namespace {

Dga build_line_dga(const std::vector<int>& mu, Ring field) {
  int n = static_cast<int>(mu.size());
  std::vector<GenInfo> gens;
  std::map<std::string, NcPoly> diff;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::string name = LineSlice::gen_name(i, j);
      gens.push_back({name,
                      mu[static_cast<std::size_t>(i - 1)] -
                          mu[static_cast<std::size_t>(j - 1)] - 1,
                      GenKind::reeb, 1, 1});
      NcPoly dp(field);
      for (int k = i + 1; k < j; ++k) {
        Int c = sign_of(mu[static_cast<std::size_t>(i - 1)] -
                        mu[static_cast<std::size_t>(k - 1)]);
        dp = dp + NcPoly(field, c,
                         {Symbol::gen(LineSlice::gen_name(i, k)),
                          Symbol::gen(LineSlice::gen_name(k, j))});
      }
      diff.insert_or_assign(name, dp);
    }
  return Dga(field, std::move(gens), std::move(diff), 1, Grading::none);
}

}  // namespace

LineSlice::LineSlice(std::vector<int> mu, Ring field)
    : n_(static_cast<int>(mu.size())),
      mu_(std::move(mu)),
      field_(field),
      dga_(build_line_dga(mu_, field)) {
  if (!field.is_field()) throw Error("LineSlice: field coefficients required");
  if (n_ < 1) throw Error("LineSlice: at least one strand required");
}

std::string LineSlice::gen_name(int i, int j) {
  return "a_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string LineSlice::hom_label(int i, int j) { return gen_name(i, j) + "+"; }

std::pair<int, int> LineSlice::parse_label(const std::string& label) const {
  if (label.size() >= 4 && label.compare(0, 2, "a_") == 0 &&
      label.back() == '+') {
    std::string body = label.substr(2, label.size() - 3);
    auto sep = body.find('_');
    if (sep != std::string::npos) {
      int i = std::stoi(body.substr(0, sep));
      int j = std::stoi(body.substr(sep + 1));
      if (1 <= i && i <= j && j <= n_) return {i, j};
    }
  }
  throw Error("LineSlice: unknown hom label " + label);
}

int LineSlice::hom_degree(int i, int j) const {
  return mu_[static_cast<std::size_t>(i - 1)] -
         mu_[static_cast<std::size_t>(j - 1)];
}

std::vector<std::string> LineSlice::hom_basis() const {
  std::vector<std::string> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i; j <= n_; ++j) out.push_back(hom_label(i, j));
  return out;
}

std::optional<int> LineSlice::degree_of(const HomElement& v) const {
  std::optional<int> deg;
  for (const auto& [label, c] : v.coeffs) {
    auto [i, j] = parse_label(label);
    int d = hom_degree(i, j);
    if (deg && *deg != d) throw Error("LineSlice: mixed-degree element");
    deg = d;
  }
  return deg;
}

bool LineSlice::is_augmentation(const Augmentation& eps) const {
  return legaug::is_augmentation(dga_, eps);
}

HomElement LineSlice::m1(const Augmentation& e1, const Augmentation& e2,
                         const HomElement& xi) const {
  HomElement out(field_);
  for (const auto& [label, c] : xi.coeffs) {
    auto [r, s] = parse_label(label);
    for (int i = 1; i < r; ++i)
      out.add(hom_label(i, s), field_.reduce(-c * e1.value(gen_name(i, r))));
    Int sg = sign_of(mu_[static_cast<std::size_t>(r - 1)] +
                     mu_[static_cast<std::size_t>(s - 1)]);
    for (int j = s + 1; j <= n_; ++j)
      out.add(hom_label(r, j),
              field_.reduce(sg * c * e2.value(gen_name(s, j))));
  }
  return out;
}

HomElement LineSlice::m2(const HomElement& u, const HomElement& v) const {
  HomElement out(field_);
  for (const auto& [lu, cu] : u.coeffs) {
    auto [p, q] = parse_label(lu);
    for (const auto& [lv, cv] : v.coeffs) {
      auto [r, s] = parse_label(lv);
      if (s != p) continue;
      Int sg = sign_of(static_cast<long long>(hom_degree(p, q)) *
                           hom_degree(r, s) +
                       1);
      out.add(hom_label(r, q), field_.reduce(sg * cu * cv));
    }
  }
  return out;
}

MCObject LineSlice::h_object(const Augmentation& eps) const {
  MCObject out(field_, mu_);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      out.set_entry(j, i,
                    field_.reduce(
                        sign_of(mu_[static_cast<std::size_t>(j - 1)]) *
                        eps.value(gen_name(i, j))));
  return out;
}

Augmentation LineSlice::from_mc(const MCObject& d) const {
  Augmentation eps{field_, {}};
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      eps.values[gen_name(i, j)] = field_.reduce(
          sign_of(mu_[static_cast<std::size_t>(j - 1)]) * d.entry(j, i));
  return eps;
}

MCMorphism LineSlice::h_morphism(const Augmentation& e1, const Augmentation& e2,
                                 const HomElement& xi,
                                 std::optional<int> degree) const {
  std::optional<int> inferred = degree_of(xi);
  if (!inferred && !degree)
    throw Error("LineSlice: degree required for the zero morphism");
  if (inferred && degree && *inferred != *degree)
    throw Error("LineSlice: declared degree does not match the element");
  MCMorphism out(h_object(e1), h_object(e2), inferred ? *inferred : *degree);
  for (const auto& [label, c] : xi.coeffs) {
    auto [i, j] = parse_label(label);
    out.set_entry(j, i, field_.reduce(sigma(mu_, i, j) * c));
  }
  out.validate();
  return out;
}

Augmentation LineSlice::random_augmentation(std::mt19937& rng) const {
  // A random Barannikov normal form: a partial matching of adjacent Maslov
  // values, with unit coefficients.
  MCObject d0(field_, mu_);
  std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      if (used[static_cast<std::size_t>(i)] ||
          used[static_cast<std::size_t>(j)])
        continue;
      if (hom_degree(i, j) != 1) continue;
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) continue;
      d0.set_entry(j, i, random_unit(rng, field_.p));
      used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] =
          true;
    }
  // Conjugate by a random invertible filtered degree-0 change of basis.
  Matrix s = Matrix::identity(field_, static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    s.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1),
          random_unit(rng, field_.p));
    for (int j = i + 1; j <= n_; ++j)
      if (hom_degree(i, j) == 0)
        s.set(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1),
              random_value(rng, field_.p));
  }
  MCObject d(field_, mu_);
  d.d = *inverse(s) * d0.d * s;
  return from_mc(d);
}

HomElement LineSlice::random_hom(std::mt19937& rng, int degree) const {
  HomElement out(field_);
  for (int i = 1; i <= n_; ++i)
    for (int j = i; j <= n_; ++j)
      if (hom_degree(i, j) == degree)
        out.add(hom_label(i, j), random_value(rng, field_.p));
  return out;
}

// ---------------------------------------------------------------------------
// Crossing slice
// ---------------------------------------------------------------------------

namespace {

Dga build_cross_dga(const LineSlice& left, int k) {
  std::vector<GenInfo> gens = left.dga().generators();
  std::map<std::string, NcPoly> diff = left.dga().differential_map();
  int c_deg = left.mu()[static_cast<std::size_t>(k - 1)] -
              left.mu()[static_cast<std::size_t>(k)];
  gens.push_back({"c", c_deg, GenKind::reeb, 1, 1});
  diff.insert_or_assign(
      "c", NcPoly::symbol(left.field(),
                          Symbol::gen(LineSlice::gen_name(k, k + 1))));
  return Dga(left.field(), std::move(gens), std::move(diff), 1,
             Grading::none);
}

std::vector<int> swapped_mu(const std::vector<int>& mu, int k) {
  std::vector<int> out = mu;
  std::swap(out[static_cast<std::size_t>(k - 1)],
            out[static_cast<std::size_t>(k)]);
  return out;
}

}  // namespace

CrossSlice::CrossSlice(std::vector<int> mu, int k, Ring field)
    : left_(mu, field),
      right_(swapped_mu(mu, k), field),
      k_(k),
      dga_(build_cross_dga(left_, k)) {
  if (k < 1 || k >= left_.n())
    throw Error("CrossSlice: crossing index out of range");
}

int CrossSlice::c_degree() const {
  return left_.mu()[static_cast<std::size_t>(k_ - 1)] -
         left_.mu()[static_cast<std::size_t>(k_)];
}

std::vector<std::string> CrossSlice::hom_basis() const {
  std::vector<std::string> out = left_.hom_basis();
  out.push_back("c+");
  return out;
}

std::optional<int> CrossSlice::degree_of(const HomElement& v) const {
  std::optional<int> deg;
  for (const auto& [label, c] : v.coeffs) {
    int d;
    if (label == "c+") {
      d = c_degree() + 1;
    } else {
      auto [i, j] = left_.parse_label(label);
      d = left_.hom_degree(i, j);
    }
    if (deg && *deg != d) throw Error("CrossSlice: mixed-degree element");
    deg = d;
  }
  return deg;
}

bool CrossSlice::is_augmentation(const Augmentation& eps) const {
  return legaug::is_augmentation(dga_, eps);
}

Augmentation CrossSlice::restrict_L(const Augmentation& eps) const {
  Augmentation out{eps.ring, eps.values};
  out.values.erase("c");
  return out;
}

Augmentation CrossSlice::restrict_R(const Augmentation& eps) const {
  const Ring& f = field();
  int k = k_, n = left_.n();
  Int c = eps.value("c");
  auto a = [&](int i, int j) { return eps.value(LineSlice::gen_name(i, j)); };
  Augmentation out{f, {}};
  auto set = [&](int i, int j, const Int& v) {
    out.values[LineSlice::gen_name(i, j)] = f.reduce(v);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      bool ik = i < k, jk = j > k + 1;
      if (i != k && i != k + 1 && j != k && j != k + 1)
        set(i, j, a(i, j));
      else if (ik && j == k)
        set(i, j, a(i, k + 1) + a(i, k) * c);
      else if (ik && j == k + 1)
        set(i, j, a(i, k));
      else if (i == k && j == k + 1)
        set(i, j, 0);
      else if (i == k && jk)
        set(i, j, a(k + 1, j));
      else if (i == k + 1 && jk)
        set(i, j, a(k, j) - c * a(k + 1, j));
    }
  return out;
}

HomElement CrossSlice::m1(const Augmentation& e1, const Augmentation& e2,
                          const HomElement& xi) const {
  HomElement line_part(field());
  for (const auto& [label, c] : xi.coeffs)
    if (label != "c+") line_part.add(label, c);
  HomElement out =
      left_.m1(restrict_L(e1), restrict_L(e2), line_part);
  int k = k_;
  out.add("c+", field().reduce(
                    xi.coeff(LineSlice::hom_label(k, k + 1)) +
                    e2.value("c") * xi.coeff(LineSlice::hom_label(k, k)) -
                    e1.value("c") *
                        xi.coeff(LineSlice::hom_label(k + 1, k + 1))));
  return out;
}

HomElement CrossSlice::m2(const HomElement& u, const HomElement& v) const {
  HomElement lu(field()), lv(field());
  for (const auto& [label, c] : u.coeffs)
    if (label != "c+") lu.add(label, c);
  for (const auto& [label, c] : v.coeffs)
    if (label != "c+") lv.add(label, c);
  HomElement out = left_.m2(lu, lv);
  int k = k_;
  Int corr = -u.coeff("c+") * v.coeff(LineSlice::hom_label(k, k)) -
             u.coeff(LineSlice::hom_label(k + 1, k + 1)) * v.coeff("c+");
  out.add("c+", field().reduce(corr));
  return out;
}

HomElement CrossSlice::rho_L(const HomElement& xi) const {
  HomElement out(field());
  for (const auto& [label, c] : xi.coeffs)
    if (label != "c+") out.add(label, c);
  return out;
}

HomElement CrossSlice::rho_R(const Augmentation& e1, const Augmentation& e2,
                             const HomElement& xi) const {
  const Ring& f = field();
  int k = k_, n = left_.n();
  HomElement out(f);
  auto b = [&](int i, int j) { return LineSlice::hom_label(i, j); };
  for (const auto& [label, c] : xi.coeffs) {
    if (label == "c+") {
      for (int i = 1; i < k; ++i)
        out.add(b(i, k),
                f.reduce(c * e1.value(LineSlice::gen_name(i, k))));
      Int sg = sign_of(c_degree());
      for (int j = k + 2; j <= n; ++j)
        out.add(b(k + 1, j),
                f.reduce(-sg * c *
                         e2.value(LineSlice::gen_name(k + 1, j))));
      continue;
    }
    auto [i, j] = left_.parse_label(label);
    if (i != k && i != k + 1 && j != k && j != k + 1) {
      out.add(b(i, j), c);
    } else if (i < k && j == k) {
      out.add(b(i, k + 1), c);
      out.add(b(i, k), f.reduce(c * e2.value("c")));
    } else if (i < k && j == k + 1) {
      out.add(b(i, k), c);
    } else if (i == k && j == k) {
      out.add(b(k + 1, k + 1), c);
    } else if (i == k && j == k + 1) {
      // maps to zero
    } else if (i == k && j > k + 1) {
      out.add(b(k + 1, j), c);
    } else if (i == k + 1 && j == k + 1) {
      out.add(b(k, k), c);
    } else if (i == k + 1 && j > k + 1) {
      out.add(b(k, j), c);
      out.add(b(k + 1, j), f.reduce(-c * e1.value("c")));
    }
  }
  return out;
}

HomElement CrossSlice::rho_R2(const HomElement& u, const HomElement& v) const {
  const Ring& f = field();
  int k = k_, n = left_.n();
  HomElement out(f);
  Int cu = u.coeff("c+");
  int cdeg = c_degree() + 1;  // |c+|
  if (cu != 0)
    for (int i = 1; i < k; ++i) {
      Int cv = v.coeff(LineSlice::hom_label(i, k));
      if (cv == 0) continue;
      long long da = left_.hom_degree(i, k);
      Int sg = sign_of(static_cast<long long>(cdeg) * da + da + 1);
      out.add(LineSlice::hom_label(i, k), f.reduce(sg * cu * cv));
    }
  Int cv = v.coeff("c+");
  if (cv != 0)
    for (int j = k + 2; j <= n; ++j) {
      Int cuj = u.coeff(LineSlice::hom_label(k + 1, j));
      if (cuj == 0) continue;
      long long da = left_.hom_degree(k + 1, j);
      Int sg = sign_of(da * cdeg + 1);
      out.add(LineSlice::hom_label(k + 1, j), f.reduce(sg * cuj * cv));
    }
  return out;
}

MCCrossObject CrossSlice::h_object(const Augmentation& eps) const {
  return MCCrossObject{left_.h_object(restrict_L(eps)),
                       field().reduce(-eps.value("c")), k_};
}

MCMorphism CrossSlice::h_morphism(const Augmentation& e1,
                                  const Augmentation& e2,
                                  const HomElement& xi,
                                  std::optional<int> degree) const {
  std::optional<int> deg = degree_of(xi);
  if (!deg) deg = degree;
  if (!deg) throw Error("CrossSlice: degree required for the zero morphism");
  MCMorphism inner = right_.h_morphism(restrict_R(e1), restrict_R(e2),
                                       rho_R(e1, e2, xi), *deg);
  int n = left_.n();
  Matrix sk = Matrix::identity(field(), static_cast<std::size_t>(n));
  std::size_t a = static_cast<std::size_t>(k_ - 1), bb = a + 1;
  sk.set(a, a, 0);
  sk.set(bb, bb, 0);
  sk.set(a, bb, 1);
  sk.set(bb, a, 1);
  Matrix phi1 = Matrix::identity(field(), static_cast<std::size_t>(n));
  phi1.set(bb, a, e1.value("c"));
  Matrix phi2_inv = Matrix::identity(field(), static_cast<std::size_t>(n));
  phi2_inv.set(bb, a, field().reduce(-e2.value("c")));
  MCMorphism out(left_.h_object(restrict_L(e1)),
                 left_.h_object(restrict_L(e2)), *deg);
  out.phi = phi2_inv * sk * inner.phi * sk * phi1;
  out.validate();
  return out;
}

MCMorphism CrossSlice::homotopy_H(const Augmentation& e1,
                                  const Augmentation& e2, const HomElement& xi,
                                  std::optional<int> degree) const {
  std::optional<int> deg = degree_of(xi);
  if (!deg) deg = degree;
  if (!deg) throw Error("CrossSlice: degree required for the zero element");
  MCMorphism out(left_.h_object(restrict_L(e1)),
                 left_.h_object(restrict_L(e2)), *deg - 1);
  Int c = xi.coeff("c+");
  if (c != 0)
    out.set_entry(k_ + 1, k_,
                  field().reduce(sigma(left_.mu(), k_, k_ + 1) * c));
  return out;
}

Augmentation CrossSlice::random_augmentation(std::mt19937& rng) const {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Augmentation line = left_.random_augmentation(rng);
    if (line.value(LineSlice::gen_name(k_, k_ + 1)) != 0) continue;
    Augmentation out{field(), line.values};
    out.values["c"] =
        c_degree() == 0 ? random_value(rng, field().p) : Int(0);
    return out;
  }
  throw Error("CrossSlice: failed to sample an augmentation");
}

bool right_cusp_image(const LineSlice& slice, const Augmentation& eps) {
  require_cusp_profile(slice.mu());
  for (int k = 1; 2 * k <= slice.n(); ++k)
    if (eps.value(LineSlice::gen_name(2 * k - 1, 2 * k)) == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Randomized verifier
// ---------------------------------------------------------------------------

namespace {

void check(CheckReport& rep, bool ok, const std::string& what) {
  if (!ok) rep.problems.push_back(what);
}

/// eps composed with the line differential, evaluated on every generator;
/// true iff all vanish (works for arbitrary value assignments).
bool annihilates_differential(const LineSlice& s, const Augmentation& eps) {
  const Ring& f = s.field();
  for (int i = 1; i <= s.n(); ++i)
    for (int j = i + 1; j <= s.n(); ++j) {
      Int acc = 0;
      for (int k = i + 1; k < j; ++k)
        acc += sign_of(s.mu()[static_cast<std::size_t>(i - 1)] -
                       s.mu()[static_cast<std::size_t>(k - 1)]) *
               eps.value(LineSlice::gen_name(i, k)) *
               eps.value(LineSlice::gen_name(k, j));
      if (f.reduce(acc) != 0) return false;
    }
  return true;
}

}  // namespace

CheckReport verify_slice_equivalences(int n, const std::vector<int>& mu,
                                      int trials, Ring field, unsigned seed) {
  CheckReport rep;
  if (static_cast<int>(mu.size()) != n) {
    rep.problems.push_back("mu has wrong length");
    return rep;
  }
  LineSlice line(mu, field);
  std::mt19937 rng(seed);
  std::vector<int> degrees;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) degrees.push_back(line.hom_degree(i, j));
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  for (int t = 0; t < trials; ++t) {
    // --- line slice ---
    Augmentation e1 = line.random_augmentation(rng);
    Augmentation e2 = line.random_augmentation(rng);
    Augmentation e3 = line.random_augmentation(rng);
    check(rep, line.is_augmentation(e1), "random line augmentation invalid");
    MCObject d1 = line.h_object(e1);
    try {
      d1.validate();
    } catch (const Error& e) {
      rep.problems.push_back(std::string("line object invalid: ") + e.what());
    }
    check(rep, line.from_mc(d1) == e1, "line object map does not round-trip");

    // Augmentation condition matches square-zero condition, also on
    // arbitrary (non-augmentation) assignments.
    {
      Augmentation raw{field, {}};
      for (const GenInfo& g : line.dga().generators())
        raw.values[g.name] =
            g.degree == 0 ? random_value(rng, field.p) : Int(0);
      MCObject d(field, mu);
      d = line.h_object(raw);
      check(rep,
            annihilates_differential(line, raw) == (d.d * d.d).is_zero(),
            "square-zero / augmentation equivalence failed");
    }

    int deg = degrees[std::uniform_int_distribution<std::size_t>(
        0, degrees.size() - 1)(rng)];
    HomElement xi = line.random_hom(rng, deg);
    HomElement eta = line.random_hom(rng, deg - 1);
    // Strict dg functor: differential preserved.
    check(rep,
          line.h_morphism(e1, e2, line.m1(e1, e2, xi), deg + 1) ==
              mc_differential(line.h_morphism(e1, e2, xi, deg)),
          "line functor does not preserve the differential");
    // m1 squares to zero.
    check(rep, line.m1(e1, e2, line.m1(e1, e2, xi)).is_zero(),
          "line m1 does not square to zero");
    // Composition preserved strictly.
    check(rep,
          line.h_morphism(e1, e3, line.m2(xi, eta), deg + deg - 1) ==
              mc_compose(line.h_morphism(e2, e3, xi, deg),
                         line.h_morphism(e1, e2, eta, deg - 1)),
          "line functor does not preserve composition");
    // Leibniz rule.
    {
      HomElement lhs = line.m1(e1, e3, line.m2(xi, eta));
      HomElement rhs = line.m2(line.m1(e2, e3, xi), eta) +
                       line.m2(xi, line.m1(e1, e2, eta)).scaled(sign_of(deg));
      check(rep, lhs == rhs, "line Leibniz rule failed");
    }
    // Strict associativity.
    {
      HomElement zeta = line.random_hom(rng, deg);
      check(rep,
            line.m2(xi, line.m2(eta, zeta)) ==
                line.m2(line.m2(xi, eta), zeta),
            "line associativity failed");
    }
    // Isomorphism-class transfer of subdiagonal entries.
    {
      Matrix s = Matrix::identity(field, static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) {
        s.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1),
              random_unit(rng, field.p));
        for (int j = i + 1; j <= n; ++j)
          if (line.hom_degree(i, j) == 0)
            s.set(static_cast<std::size_t>(j - 1),
                  static_cast<std::size_t>(i - 1),
                  random_value(rng, field.p));
      }
      Matrix conj = *inverse(s) * d1.d * s;
      for (int k = 1; k < n; ++k) {
        bool z1 = d1.entry(k + 1, k) == 0;
        bool z2 = conj.at(static_cast<std::size_t>(k),
                          static_cast<std::size_t>(k - 1)) == 0;
        check(rep, z1 == z2, "subdiagonal vanishing not conjugation-stable");
      }
    }

    // --- crossing slice ---
    int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
    CrossSlice cross(mu, k, field);
    Augmentation f1 = cross.random_augmentation(rng);
    Augmentation f2 = cross.random_augmentation(rng);
    Augmentation f3 = cross.random_augmentation(rng);
    check(rep, cross.is_augmentation(f1),
          "random crossing augmentation invalid");
    MCCrossObject c1 = cross.h_object(f1);
    MCCrossObject c2 = cross.h_object(f2);
    try {
      c1.validate();
    } catch (const Error& e) {
      rep.problems.push_back(std::string("crossing object invalid: ") +
                             e.what());
    }
    if (cross.c_degree() != 0 && f1.value("c") != 0)
      rep.problems.push_back("crossing sampler set c on a graded crossing");
    // Object-level restriction commutation.
    check(rep, mc_rho_L(c1) == line.h_object(cross.restrict_L(f1)),
          "crossing object left restriction mismatch");
    check(rep,
          mc_rho_R(c1) == cross.right().h_object(cross.restrict_R(f1)),
          "crossing object right restriction mismatch");

    for (const std::string& label : cross.hom_basis()) {
      HomElement gen = HomElement::basis(field, label);
      int gdeg = *cross.degree_of(gen);
      MCMorphism hg = cross.h_morphism(f1, f2, gen);
      check(rep, mc_cross_morphism_ok(c1, c2, hg),
            "crossing functor image violates the morphism condition");
      // m1 squares to zero on the crossing slice.
      check(rep, cross.m1(f1, f2, cross.m1(f1, f2, gen)).is_zero(),
            "crossing m1 does not square to zero");
      // Right restriction commutes strictly.
      check(rep,
            cross.right().h_morphism(cross.restrict_R(f1),
                                     cross.restrict_R(f2),
                                     cross.rho_R(f1, f2, gen), gdeg) ==
                mc_rho_R(c1, c2, hg),
            "crossing morphism right restriction mismatch");
      // Left restriction commutes up to the stated homotopy, generator by
      // generator.
      {
        MCMorphism lhs = line.h_morphism(cross.restrict_L(f1),
                                         cross.restrict_L(f2),
                                         cross.rho_L(gen), gdeg);
        MCMorphism dh =
            mc_differential(cross.homotopy_H(f1, f2, gen, gdeg));
        MCMorphism hm = cross.homotopy_H(f1, f2, cross.m1(f1, f2, gen),
                                         gdeg + 1);
        check(rep, lhs.phi == hg.phi + dh.phi + hm.phi,
              "crossing left-restriction homotopy identity failed on " +
                  label);
      }
    }

    // Arity-2 functor relation for (rho_R, rho_R2) on all generator pairs.
    for (const std::string& lu : cross.hom_basis())
      for (const std::string& lv : cross.hom_basis()) {
        HomElement u = HomElement::basis(field, lu);
        HomElement v = HomElement::basis(field, lv);
        int du = *cross.degree_of(u);
        HomElement lhs = cross.rho_R(f1, f3, cross.m2(u, v));
        HomElement rhs =
            cross.right().m2(cross.rho_R(f2, f3, u),
                             cross.rho_R(f1, f2, v)) +
            cross.right().m1(cross.restrict_R(f1), cross.restrict_R(f3),
                             cross.rho_R2(u, v)) +
            cross.rho_R2(cross.m1(f2, f3, u), v) +
            cross.rho_R2(u, cross.m1(f1, f2, v)).scaled(sign_of(du));
        check(rep, lhs == rhs,
              "right-restriction functor relation failed on (" + lu + ", " +
                  lv + ")");
      }
  }

  // --- cusps, when mu is a cusp profile ---
  bool cusp_profile = n % 2 == 0;
  for (int k = 1; cusp_profile && 2 * k <= n; ++k)
    if (mu[static_cast<std::size_t>(2 * k - 2)] !=
        mu[static_cast<std::size_t>(2 * k - 1)] + 1)
      cusp_profile = false;
  if (cusp_profile) {
    for (int t = 0; t < trials; ++t) {
      MCObject raw(field, mu);
      for (int k = 1; 2 * k <= n; ++k)
        raw.set_entry(2 * k, 2 * k - 1, random_unit(rng, field.p));
      Matrix s = Matrix::identity(field, static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) {
        s.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1),
              random_unit(rng, field.p));
        for (int j = i + 1; j <= n; ++j)
          if (line.hom_degree(i, j) == 0)
            s.set(static_cast<std::size_t>(j - 1),
                  static_cast<std::size_t>(i - 1),
                  random_value(rng, field.p));
      }
      MCObject d(field, mu);
      d.d = *inverse(s) * raw.d * s;
      check(rep, cusp_membership(d), "conjugated cusp object left the category");
      try {
        MCMorphism u = cusp_iso(d);
        check(rep, inverse(u.phi).has_value(), "cusp intertwiner singular");
      } catch (const Error& e) {
        rep.problems.push_back(std::string("cusp_iso failed: ") + e.what());
      }
      MCObject broken = d;
      broken.set_entry(2, 1, 0);
      check(rep, !cusp_membership(broken),
            "cusp membership accepted a vanishing cusp entry");
    }
    rep.notes.push_back("cusp checks run (mu is a cusp profile)");
  }

  std::ostringstream note;
  note << "verified " << trials << " trials on " << n << " strands over "
       << field.str();
  rep.notes.push_back(note.str());
  return rep;
}

}  // namespace legaug
