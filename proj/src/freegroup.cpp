#include "strlink/freegroup.hpp"

#include <algorithm>

#include "strlink/error.hpp"

namespace strlink {

Word reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.exponent = -l.exponent;
  return out;
}

MagnusSeries::MagnusSeries(int degree_cap) : cap_(degree_cap) {
  if (degree_cap < 1) input_error("Magnus degree cap must be >= 1");
  terms_[{}] = 1;
}

MagnusSeries MagnusSeries::zero(int degree_cap) {
  MagnusSeries s(degree_cap);
  s.terms_.clear();
  return s;
}

MagnusSeries MagnusSeries::generator(int i, int degree_cap) {
  MagnusSeries s(degree_cap);
  s.terms_[{i}] = 1;
  return s;
}

BigInt MagnusSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MagnusSeries::set(const Monomial& m, BigInt value) {
  if (static_cast<int>(m.size()) > cap_) return;
  if (value == 0)
    terms_.erase(m);
  else
    terms_[m] = std::move(value);
}

MagnusSeries MagnusSeries::truncated(int degree_cap) const {
  MagnusSeries out = zero(degree_cap);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) <= degree_cap) out.terms_.emplace(m, c);
  return out;
}

MagnusSeries MagnusSeries::degree_part(int degree) const {
  MagnusSeries out = zero(cap_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == degree) out.terms_.emplace(m, c);
  return out;
}

namespace {

void check_caps(const MagnusSeries& a, const MagnusSeries& b) {
  if (a.degree_cap() != b.degree_cap())
    input_error("Magnus degree caps differ: " + std::to_string(a.degree_cap()) + " vs " +
                std::to_string(b.degree_cap()));
}

}  // namespace

MagnusSeries operator+(const MagnusSeries& a, const MagnusSeries& b) {
  check_caps(a, b);
  MagnusSeries out = a;
  for (const auto& [m, c] : b.terms_) out.set(m, out.coefficient(m) + c);
  return out;
}

MagnusSeries operator-(const MagnusSeries& a, const MagnusSeries& b) {
  check_caps(a, b);
  MagnusSeries out = a;
  for (const auto& [m, c] : b.terms_) out.set(m, out.coefficient(m) - c);
  return out;
}

std::string MagnusSeries::to_string() const {
  if (terms_.empty()) return "0";
  // graded order: by degree, then lexicographically
  std::vector<std::pair<Monomial, BigInt>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
  std::string out;
  for (const auto& [m, c] : sorted) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m.empty() || mag != 1) out += mag.str();
    for (int g : m) out += "X" + std::to_string(g);
  }
  return out;
}

MagnusSeries series_mul(const MagnusSeries& a, const MagnusSeries& b) {
  check_caps(a, b);
  const int cap = a.degree_cap();
  std::map<Monomial, BigInt> acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (static_cast<int>(ma.size() + mb.size()) > cap) continue;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      acc[m] += ca * cb;
    }
  MagnusSeries out = MagnusSeries::zero(cap);
  for (auto& [m, c] : acc) out.set(m, std::move(c));
  return out;
}

MagnusSeries series_inverse(const MagnusSeries& a) {
  if (a.coefficient({}) != 1)
    input_error("series inverse needs constant term 1, got " + a.coefficient({}).str());
  // (1 + u)^{-1} = sum_k (-u)^k, and u^k vanishes above the cap.
  const int cap = a.degree_cap();
  MagnusSeries minus_u = MagnusSeries::zero(cap) - (a - MagnusSeries::one(cap));
  MagnusSeries result = MagnusSeries::one(cap);
  MagnusSeries power = MagnusSeries::one(cap);
  for (int k = 1; k <= cap; ++k) {
    power = series_mul(power, minus_u);
    result = result + power;
  }
  return result;
}

MagnusSeries series_pow(const MagnusSeries& a, int k) {
  MagnusSeries base = k < 0 ? series_inverse(a) : a;
  MagnusSeries result = MagnusSeries::one(a.degree_cap());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) result = series_mul(result, base);
  return result;
}

MagnusSeries magnus(const Word& w, int degree_cap) {
  MagnusSeries result = MagnusSeries::one(degree_cap);
  for (const Letter& l : w) {
    if (l.exponent != 1 && l.exponent != -1) input_error("word exponents must be +-1");
    const MagnusSeries g = MagnusSeries::generator(l.generator, degree_cap);
    result = series_mul(result, l.exponent > 0 ? g : series_inverse(g));
  }
  return result;
}

}  // namespace strlink
