#include "strlink/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "strlink/error.hpp"

namespace strlink {

Label Label::e(int n, int i) {
  if (i < 1 || i > n) input_error("basis index e" + std::to_string(i) + " out of range 1.." + std::to_string(n));
  Label z{std::vector<std::int64_t>(n, 0), 0};
  z.h[i - 1] = 1;
  return z;
}

Label Label::s(int n) { return Label{std::vector<std::int64_t>(n, 0), 1}; }

bool Label::is_zero() const {
  return eps == 0 && std::all_of(h.begin(), h.end(), [](std::int64_t v) { return v == 0; });
}

Label operator+(const Label& a, const Label& b) {
  if (a.h.size() != b.h.size()) input_error("label dimensions differ");
  Label out = a;
  for (std::size_t i = 0; i < b.h.size(); ++i) out.h[i] += b.h[i];
  out.eps = (a.eps + b.eps) % 2;
  return out;
}

Label operator-(const Label& a) {
  Label out = a;
  for (auto& v : out.h) v = -v;
  return out;
}

YTerm::YTerm(Label a, Label b, Label c) : z{std::move(a), std::move(b), std::move(c)} {
  if (z[0].h.size() != z[1].h.size() || z[1].h.size() != z[2].h.size())
    input_error("labels of a Y-term have different dimensions");
  std::array<Label, 3> best = z;
  for (int r = 1; r < 3; ++r) {
    std::array<Label, 3> rot{z[r], z[(r + 1) % 3], z[(r + 2) % 3]};
    if (rot < best) best = std::move(rot);
  }
  z = std::move(best);
}

AlgebraElement AlgebraElement::term(const YTerm& t, std::int64_t coefficient) {
  AlgebraElement x(static_cast<int>(t.z[0].h.size()));
  x.add_term(t, coefficient);
  return x;
}

void AlgebraElement::add_term(const YTerm& t, std::int64_t c) {
  if (static_cast<int>(t.z[0].h.size()) != n_)
    input_error("Y-term of dimension " + std::to_string(t.z[0].h.size()) +
                " added to an element of dimension " + std::to_string(n_));
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.dimension() != y.dimension()) input_error("algebra elements have different dimensions");
  AlgebraElement out = x;
  for (const auto& [t, c] : y.terms()) out.add_term(t, c);
  return out;
}

AlgebraElement scale(const AlgebraElement& x, std::int64_t c) {
  AlgebraElement out(x.dimension());
  for (const auto& [t, v] : x.terms()) out.add_term(t, v * c);
  return out;
}

AlgebraElement negate(const AlgebraElement& x) { return scale(x, -1); }

bool NormalForm::is_zero() const {
  return lambda3.empty() && lambda2.empty() && rochlin == 0 &&
         std::all_of(h2.begin(), h2.end(), [](int v) { return v == 0; });
}

NormalForm operator+(const NormalForm& a, const NormalForm& b) {
  if (a.n != b.n) input_error("normal forms have different dimensions");
  NormalForm out = a;
  for (const auto& [k, v] : b.lambda3)
    if ((out.lambda3[k] += v) == 0) out.lambda3.erase(k);
  for (const auto& [k, v] : b.lambda2)
    if ((out.lambda2[k] ^= v) == 0) out.lambda2.erase(k);
  for (int i = 0; i < a.n; ++i) out.h2[i] ^= b.h2[i];
  out.rochlin ^= b.rochlin;
  return out;
}

namespace {

// Basis labels: 0 is s, k >= 1 is e_k.
using Basic = std::array<int, 3>;

struct Accumulator {
  explicit Accumulator(int n) : h2(n, 0) {}
  std::map<std::array<int, 3>, std::int64_t> lambda3;
  std::map<std::pair<int, int>, std::int64_t> lambda2;
  std::vector<std::int64_t> h2;
  std::int64_t rochlin = 0;
};

// Sorts three distinct values ascending; returns the permutation sign.
int sort_with_sign(std::array<int, 3>& v) {
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i + 1 < 3 - pass; ++i)
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        sign = -sign;
      }
  return sign;
}

void reduce_basic(Basic b, std::int64_t coef, Accumulator& acc) {
  // Slide: a cyclically adjacent equal pair (z, z) with z != s becomes (s, z).
  // In a triple every pair is cyclically adjacent.
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k < 3; ++k) {
      const int next = (k + 1) % 3;
      if (b[k] != 0 && b[k] == b[next]) {
        b = {b[k], b[next], b[(k + 2) % 3]};  // rotate the pair to the front
        b[0] = 0;
        changed = true;
        break;
      }
    }
  }
  std::vector<int> es;
  for (int v : b)
    if (v != 0) es.push_back(v);
  std::sort(es.begin(), es.end());
  switch (es.size()) {
    case 3: {
      const int sign = sort_with_sign(b);
      acc.lambda3[b] += sign * coef;
      break;
    }
    case 2: acc.lambda2[{es[0], es[1]}] += coef; break;
    case 1: acc.h2[es[0] - 1] += coef; break;
    default: acc.rochlin += coef; break;
  }
}

int mod2(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

// Multilinear expansion of a label into (basis, coefficient) pairs.
std::vector<std::pair<int, std::int64_t>> expand(const Label& z) {
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t i = 0; i < z.h.size(); ++i)
    if (z.h[i] != 0) out.emplace_back(static_cast<int>(i) + 1, z.h[i]);
  if (z.eps) out.emplace_back(0, 1);
  return out;
}

}  // namespace

NormalForm normalize(const AlgebraElement& x) {
  const int n = x.dimension();
  Accumulator acc(n);
  for (const auto& [t, c] : x.terms()) {
    const auto e0 = expand(t.z[0]), e1 = expand(t.z[1]), e2 = expand(t.z[2]);
    for (const auto& [b0, c0] : e0)
      for (const auto& [b1, c1] : e1)
        for (const auto& [b2, c2] : e2) reduce_basic({b0, b1, b2}, c * c0 * c1 * c2, acc);
  }
  NormalForm nf(n);
  for (const auto& [k, v] : acc.lambda3)
    if (v != 0) nf.lambda3.emplace(k, v);
  for (const auto& [k, v] : acc.lambda2)
    if (mod2(v)) nf.lambda2.emplace(k, 1);
  for (int i = 0; i < n; ++i) nf.h2[i] = mod2(acc.h2[i]);
  nf.rochlin = mod2(acc.rochlin);
  return nf;
}

bool equal(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.dimension() != y.dimension()) input_error("algebra elements have different dimensions");
  return normalize(x) == normalize(y);
}

namespace {

// Maps a basis symbol (letter, index) to a 1-based coordinate, or throws.
using SymbolResolver = std::function<int(char, int)>;

class ElementParser {
 public:
  ElementParser(std::string_view text, int n, SymbolResolver resolve)
      : text_(text), n_(n), resolve_(std::move(resolve)) {}

  AlgebraElement parse() {
    AlgebraElement out(n_);
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      const std::int64_t c = optional_coefficient();
      expect('Y');
      expect('[');
      std::vector<Label> labels{parse_label()};
      while (peek() == ';') {
        get();
        labels.push_back(parse_label());
      }
      expect(']');
      if (labels.size() != 3)
        input_error("Y-term needs exactly 3 labels, got " + std::to_string(labels.size()));
      out.add_term(YTerm(labels[0], labels[1], labels[2]), sign * c);
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    input_error("algebra expression, column " + std::to_string(pos_ + 1) + ": " + what);
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
    skip_ws();
  }

  std::int64_t number() {
    std::int64_t v = 0;
    bool any = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      any = true;
      if (v > (std::int64_t{1} << 40)) fail("coefficient too large");
    }
    if (!any) fail("expected a number");
    return v;
  }

  std::int64_t optional_coefficient() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return 1;
    const std::int64_t v = number();
    skip_ws();
    if (peek() == '*') {
      get();
      skip_ws();
    }
    return v;
  }

  Label parse_label() {
    Label z{std::vector<std::int64_t>(n_, 0), 0};
    skip_ws();
    bool first = true;
    while (peek() != ';' && peek() != ']') {
      if (at_end()) fail("unterminated Y-term");
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' inside label");
      }
      const bool explicit_coef = std::isdigit(static_cast<unsigned char>(peek()));
      std::int64_t c = optional_coefficient();
      const char letter = peek();
      if (explicit_coef && !std::isalpha(static_cast<unsigned char>(letter))) {
        if (c != 0) fail("expected a basis symbol after the coefficient");
      } else if (letter == 's') {
        get();
        z.eps = static_cast<int>(((z.eps + sign * c) % 2 + 2) % 2);
      } else if (std::isalpha(static_cast<unsigned char>(letter))) {
        get();
        const int idx = static_cast<int>(number());
        const int k = resolve_(letter, idx);
        z.h[k - 1] += sign * c;
      } else {
        fail("expected a basis symbol");
      }
      first = false;
      skip_ws();
    }
    if (first) fail("empty label");
    return z;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int n_;
  SymbolResolver resolve_;
};

}  // namespace

AlgebraElement parse_element(std::string_view text, int n) {
  if (n < 1) input_error("dimension must be >= 1");
  return ElementParser(text, n, [n](char letter, int idx) {
           if (letter != 'e') input_error(std::string("unknown basis symbol '") + letter + "'");
           if (idx < 1 || idx > n)
             input_error("basis index e" + std::to_string(idx) + " out of range 1.." + std::to_string(n));
           return idx;
         }).parse();
}

AlgebraElement parse_surface_element(std::string_view text, int genus) {
  if (genus < 1) input_error("genus must be >= 1");
  return ElementParser(text, 2 * genus, [genus](char letter, int idx) {
           if (letter != 'a' && letter != 'b')
             input_error(std::string("unknown surface basis symbol '") + letter + "'");
           if (idx < 1 || idx > genus)
             input_error(std::string(1, letter) + std::to_string(idx) + " out of range 1.." +
                         std::to_string(genus));
           return letter == 'a' ? idx : genus + idx;
         }).parse();
}

std::string to_string(const Label& z) {
  std::string out;
  auto append = [&](std::int64_t c, const std::string& sym) {
    if (c == 0) return;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + " ";
    out += sym;
  };
  for (std::size_t i = 0; i < z.h.size(); ++i) append(z.h[i], "e" + std::to_string(i + 1));
  append(z.eps, "s");
  return out.empty() ? "0" : out;
}

std::string to_string(const YTerm& t) {
  return "Y[" + to_string(t.z[0]) + "; " + to_string(t.z[1]) + "; " + to_string(t.z[2]) + "]";
}

std::string to_string(const AlgebraElement& x) {
  std::string out;
  for (const auto& [t, c] : x.terms()) {
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + " ";
    out += to_string(t);
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const NormalForm& nf) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : nf.lambda3)
    parts.push_back((v == 1 ? "" : std::to_string(v) + " ") + "e" + std::to_string(k[0]) + "^e" +
                    std::to_string(k[1]) + "^e" + std::to_string(k[2]));
  for (const auto& [k, v] : nf.lambda2)
    parts.push_back("(e" + std::to_string(k.first) + "^e" + std::to_string(k.second) + ")_2");
  for (int i = 0; i < nf.n; ++i)
    if (nf.h2[i]) parts.push_back("(e" + std::to_string(i + 1) + ")_2");
  if (nf.rochlin) parts.push_back("r");
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

namespace {

void check_permutation(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n)
    input_error("permutation has length " + std::to_string(perm.size()) + ", expected " +
                std::to_string(n));
  std::vector<bool> seen(n + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v]) input_error("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

}  // namespace

NormalForm permute_normal_form(const NormalForm& nf, const std::vector<int>& perm) {
  check_permutation(perm, nf.n);
  NormalForm out(nf.n);
  for (const auto& [k, v] : nf.lambda3) {
    std::array<int, 3> t{perm[k[0] - 1], perm[k[1] - 1], perm[k[2] - 1]};
    const int sign = sort_with_sign(t);
    out.lambda3[t] += sign * v;
  }
  for (const auto& [k, v] : nf.lambda2) {
    const int a = perm[k.first - 1], b = perm[k.second - 1];
    out.lambda2[{std::min(a, b), std::max(a, b)}] = v;
  }
  for (int i = 0; i < nf.n; ++i) out.h2[perm[i] - 1] = nf.h2[i];
  out.rochlin = nf.rochlin;
  return out;
}

AlgebraElement permute_element(const AlgebraElement& x, const std::vector<int>& perm) {
  const int n = x.dimension();
  check_permutation(perm, n);
  auto relabel = [&](const Label& z) {
    Label out{std::vector<std::int64_t>(n, 0), z.eps};
    for (int i = 0; i < n; ++i) out.h[perm[i] - 1] = z.h[i];
    return out;
  };
  AlgebraElement out(n);
  for (const auto& [t, c] : x.terms())
    out.add_term(YTerm(relabel(t.z[0]), relabel(t.z[1]), relabel(t.z[2])), c);
  return out;
}

std::vector<YTerm> canonical_generators(int n) {
  std::vector<YTerm> out;
  const Label s = Label::s(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.emplace_back(Label::e(n, i), Label::e(n, j), Label::e(n, k));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(Label::e(n, i), Label::e(n, j), s);
  for (int i = 1; i <= n; ++i) out.emplace_back(Label::e(n, i), s, s);
  out.emplace_back(s, s, s);
  return out;
}

}  // namespace strlink
