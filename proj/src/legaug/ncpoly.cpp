// SPDX-License-Identifier: MIT

#include "legaug/ncpoly.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace legaug {

// ---------------------------------------------------------------------------
// Ring

Ring Ring::fp(int p) {
  auto is_prime = [](int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  if (p < 2 || p > 251 || !is_prime(p))
    throw Error("Ring::fp: modulus must be a prime <= 251, got " +
                std::to_string(p));
  return Ring{Kind::Fp, p};
}

Int Ring::reduce(const Int& x) const {
  if (kind == Kind::Z) return x;
  Int r = x % p;
  if (r < 0) r += p;
  return r;
}

Int Ring::invert(const Int& x) const {
  if (kind == Kind::Z) {
    if (x == 1 || x == -1) return x;
    throw Error("Ring::invert: " + x.str() + " is not a unit in Z");
  }
  Int a = reduce(x);
  if (a == 0) throw Error("Ring::invert: zero is not a unit");
  // Fermat: a^(p-2) mod p.
  Int result = 1, base = a;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = reduce(result * base);
    base = reduce(base * base);
    e >>= 1;
  }
  return result;
}

std::string Ring::str() const {
  return kind == Kind::Z ? "Z" : "Fp:" + std::to_string(p);
}

Ring Ring::parse(const std::string& s) {
  if (s == "Z") return integers();
  if (s.rfind("Fp:", 0) == 0) return fp(std::stoi(s.substr(3)));
  throw Error("Ring::parse: expected \"Z\" or \"Fp:<p>\", got \"" + s + "\"");
}

// ---------------------------------------------------------------------------
// Symbol interning

namespace {

struct SymbolTable {
  mutable std::shared_mutex mutex;
  std::vector<std::string> names;
  std::vector<bool> invertible;
  std::unordered_map<std::string, std::uint32_t> index;

  static SymbolTable& instance() {
    static SymbolTable table;
    return table;
  }

  std::uint32_t intern(const std::string& name, bool inv) {
    {
      std::shared_lock lock(mutex);
      auto it = index.find(name);
      if (it != index.end() && (!inv || invertible[it->second]))
        return it->second;
    }
    std::unique_lock lock(mutex);
    auto it = index.find(name);
    if (it != index.end()) {
      // Invertibility is sticky-upgradable: a name first seen as a plain
      // generator may later be declared invertible, never the reverse.
      if (inv) invertible[it->second] = true;
      return it->second;
    }
    auto id = static_cast<std::uint32_t>(names.size());
    names.push_back(name);
    invertible.push_back(inv);
    index.emplace(name, id);
    return id;
  }

  const std::string& name_of(std::uint32_t id) const {
    std::shared_lock lock(mutex);
    return names.at(id);
  }

  bool invertible_of(std::uint32_t id) const {
    std::shared_lock lock(mutex);
    return invertible.at(id);
  }
};

}  // namespace

Symbol Symbol::gen(const std::string& name) {
  if (name.empty()) throw Error("Symbol::gen: empty name");
  return Symbol{SymbolTable::instance().intern(name, false), 1};
}

Symbol Symbol::inv(const std::string& name, int exp) {
  if (name.empty()) throw Error("Symbol::inv: empty name");
  if (exp != 1 && exp != -1) throw Error("Symbol::inv: exponent must be ±1");
  return Symbol{SymbolTable::instance().intern(name, true),
                static_cast<std::int8_t>(exp)};
}

Symbol Symbol::parse(const std::string& token) {
  auto caret = token.find("^-1");
  if (caret != std::string::npos) {
    if (caret + 3 != token.size())
      throw Error("Symbol::parse: malformed token \"" + token + "\"");
    return inv(token.substr(0, caret), -1);
  }
  return Symbol{SymbolTable::instance().intern(token, false), 1};
}

const std::string& Symbol::name() const {
  return SymbolTable::instance().name_of(id);
}

bool Symbol::invertible() const {
  return SymbolTable::instance().invertible_of(id);
}

Symbol Symbol::inverse() const {
  if (!invertible()) throw Error("Symbol::inverse: " + name() + " is not invertible");
  return Symbol{id, static_cast<std::int8_t>(-exp)};
}

std::string Symbol::str() const {
  return exp == 1 ? name() : name() + "^-1";
}

// ---------------------------------------------------------------------------
// Words

bool WordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Symbol &x = a[i], &y = b[i];
    if (x.id != y.id) {
      // Compare by name so the order is independent of intern order.
      int c = x.name().compare(y.name());
      if (c != 0) return c < 0;
    }
    if (x.exp != y.exp) return x.exp > y.exp;  // +1 sorts before -1
  }
  return false;
}

std::string word_str(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].str();
  }
  return out;
}

namespace {

/// Reduce a word by cancelling adjacent inverse pairs (t t^-1 and t^-1 t).
Word reduce_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Symbol& s : w) {
    if (!out.empty() && out.back().id == s.id && out.back().exp == -s.exp &&
        s.invertible()) {
      out.pop_back();
    } else {
      if (s.exp == -1 && !s.invertible())
        throw Error("word: non-invertible symbol " + s.name() +
                    " carries exponent -1");
      out.push_back(s);
    }
  }
  return out;
}

/// Concatenate two already-reduced words, cancelling across the seam.
Word concat_reduced(const Word& a, const Word& b) {
  Word out = a;
  for (const Symbol& s : b) {
    if (!out.empty() && out.back().id == s.id && out.back().exp == -s.exp &&
        s.invertible()) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

int word_degree(const Word& w, const std::map<std::string, int>& degrees) {
  int deg = 0;
  for (const Symbol& s : w) {
    if (s.invertible()) continue;  // base-point symbols have degree 0
    auto it = degrees.find(s.name());
    if (it == degrees.end())
      throw Error("word_degree: no degree for generator " + s.name());
    deg += it->second;
  }
  return deg;
}

// ---------------------------------------------------------------------------
// NcPoly

NcPoly::NcPoly(Ring ring, const Int& c) : ring_(ring) {
  add_term(Word{}, c);
}

NcPoly::NcPoly(Ring ring, const Int& c, const Word& w) : ring_(ring) {
  add_term(reduce_word(w), c);
}

NcPoly NcPoly::symbol(Ring ring, const Symbol& s) {
  return NcPoly(ring, 1, Word{s});
}

void NcPoly::add_term(const Word& w, const Int& c) {
  Int v = ring_.reduce(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(w, v);
  if (!inserted) {
    it->second = ring_.reduce(it->second + v);
    if (it->second == 0) terms_.erase(it);
  }
}

Int NcPoly::coefficient_of(const Word& w) const {
  auto it = terms_.find(reduce_word(w));
  return it == terms_.end() ? Int(0) : it->second;
}

Int NcPoly::constant_term() const { return coefficient_of(Word{}); }

NcPoly NcPoly::operator+(const NcPoly& q) const {
  if (ring_ != q.ring_)
    throw Error("NcPoly::add: ring mismatch (" + ring_.str() + " vs " +
                q.ring_.str() + ")");
  NcPoly out = *this;
  for (const auto& [w, c] : q.terms_) out.add_term(w, c);
  return out;
}

NcPoly NcPoly::operator-() const {
  NcPoly out(ring_);
  for (const auto& [w, c] : terms_) out.add_term(w, -c);
  return out;
}

NcPoly NcPoly::operator-(const NcPoly& q) const { return *this + (-q); }

NcPoly NcPoly::operator*(const NcPoly& q) const {
  if (ring_ != q.ring_)
    throw Error("NcPoly::mul: ring mismatch (" + ring_.str() + " vs " +
                q.ring_.str() + ")");
  NcPoly out(ring_);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : q.terms_)
      out.add_term(concat_reduced(wa, wb), ca * cb);
  return out;
}

NcPoly NcPoly::scaled(const Int& c) const {
  NcPoly out(ring_);
  for (const auto& [w, v] : terms_) out.add_term(w, v * c);
  return out;
}

bool NcPoly::operator==(const NcPoly& q) const {
  return ring_ == q.ring_ && terms_ == q.terms_;
}

std::optional<int> NcPoly::homogeneous_degree(
    const std::map<std::string, int>& degrees) const {
  std::optional<int> deg;
  for (const auto& [w, c] : terms_) {
    int d = word_degree(w, degrees);
    if (deg && *deg != d) throw Error("NcPoly: polynomial is not homogeneous");
    deg = d;
  }
  return deg;
}

std::string NcPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    if (w.empty()) {
      out += c.str();
    } else if (c == 1) {
      out += word_str(w);
    } else if (c == -1) {
      out += "-" + word_str(w);
    } else {
      out += c.str() + " " + word_str(w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Derivation and homomorphism extension

NcPoly extend_derivation(const std::map<std::string, NcPoly>& values,
                         const std::map<std::string, int>& degrees,
                         const NcPoly& p) {
  NcPoly out(p.ring());
  for (const auto& [w, c] : p.terms()) {
    int prefix_degree = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Symbol& s = w[i];
      if (s.invertible()) continue;  // d(t^{±1}) = 0
      auto vit = values.find(s.name());
      if (vit == values.end())
        throw Error("extend_derivation: no value for generator " + s.name());
      if (vit->second.ring() != p.ring())
        throw Error("extend_derivation: ring mismatch for " + s.name());
      if (!vit->second.is_zero()) {
        Word prefix(w.begin(), w.begin() + static_cast<long>(i));
        Word suffix(w.begin() + static_cast<long>(i) + 1, w.end());
        Int sign = (prefix_degree % 2 == 0) ? 1 : -1;
        NcPoly piece = NcPoly(p.ring(), sign * c, prefix) * vit->second *
                       NcPoly(p.ring(), 1, suffix);
        out = out + piece;
      }
      prefix_degree += word_degree(Word{s}, degrees);
    }
  }
  return out;
}

NcPoly extend_hom(const std::map<std::string, NcPoly>& values,
                  const NcPoly& p) {
  NcPoly out(p.ring());
  for (const auto& [w, c] : p.terms()) {
    NcPoly term(p.ring(), c);
    for (const Symbol& s : w) {
      auto vit = values.find(s.str());
      if (vit == values.end())
        throw Error("extend_hom: no value for symbol " + s.str());
      if (vit->second.ring() != p.ring())
        throw Error("extend_hom: ring mismatch for " + s.str());
      term = term * vit->second;
    }
    out = out + term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool looks_like_integer(const std::string& tok) {
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  return std::all_of(tok.begin() + static_cast<long>(i), tok.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

NcPoly parse_ncpoly(Ring ring, const std::string& text) {
  NcPoly out(ring);
  if (text == "0" || text.empty()) return out;
  // Terms are joined by " + "; a term's own minus sign is glued to it.
  std::string normalized = text;
  std::vector<std::string> term_texts;
  {
    std::size_t pos = 0;
    while (true) {
      auto next = normalized.find(" + ", pos);
      term_texts.push_back(normalized.substr(
          pos, next == std::string::npos ? next : next - pos));
      if (next == std::string::npos) break;
      pos = next + 3;
    }
  }
  for (const std::string& term_text : term_texts) {
    auto tokens = split(term_text, ' ');
    if (tokens.empty()) throw Error("parse_ncpoly: empty term in \"" + text + "\"");
    Int coef = 1;
    std::size_t start = 0;
    if (looks_like_integer(tokens[0])) {
      coef = Int(tokens[0]);
      start = 1;
    } else if (tokens[0][0] == '-') {
      coef = -1;
      tokens[0] = tokens[0].substr(1);
    }
    Word w;
    for (std::size_t i = start; i < tokens.size(); ++i)
      w.push_back(Symbol::parse(tokens[i]));
    out = out + NcPoly(ring, coef, w);
  }
  return out;
}

}  // namespace legaug
