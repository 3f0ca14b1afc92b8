#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fgn::shadow {

using Rational = boost::multiprecision::cpp_rational;

/// Generators of the free algebra: kinetic T, fast potential V1, slow V2.
enum class Symbol : std::uint8_t { T = 0, V1 = 1, V2 = 2 };

using Word = std::vector<Symbol>;

/// Display names for the three generators.
struct SymbolNames {
  std::array<std::string, 3> names{"T", "V1", "V2"};

  const std::string& operator()(Symbol s) const { return names[static_cast<std::size_t>(s)]; }

  static SymbolNames split() { return {}; }
  /// Single-rate schemes: V1 plays the role of the whole potential V.
  static SymbolNames single_rate() { return {{"T", "V", "V2"}}; }
};

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated series in noncommuting T, V1, V2 with exact rational
/// coefficients. A word of length g carries h^g; words longer than
/// max_degree are dropped, zero coefficients are never stored.
class NcSeries {
 public:
  static constexpr int kMaxSupportedDegree = 6;

  explicit NcSeries(int max_degree = 4) : max_degree_(max_degree) {
    if (max_degree < 1 || max_degree > kMaxSupportedDegree)
      throw SeriesError("max_degree must lie in [1, 6], got " + std::to_string(max_degree));
  }

  static NcSeries one(int max_degree) {
    NcSeries s(max_degree);
    s.add(Word{}, 1);
    return s;
  }

  static NcSeries symbol(Symbol x, int max_degree, const Rational& coeff = 1) {
    NcSeries s(max_degree);
    s.add(Word{x}, coeff);
    return s;
  }

  int max_degree() const { return max_degree_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c * w, dropping words beyond the truncation degree.
  NcSeries& add(const Word& w, const Rational& c) {
    if (static_cast<int>(w.size()) > max_degree_ || c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  /// Homogeneous part of word length g.
  NcSeries grade(int g) const {
    NcSeries out(max_degree_);
    for (const auto& [w, c] : terms_)
      if (static_cast<int>(w.size()) == g) out.terms_.emplace(w, c);
    return out;
  }

  int min_grade() const {
    int g = max_degree_ + 1;
    for (const auto& [w, c] : terms_) g = std::min(g, static_cast<int>(w.size()));
    return g;
  }

  NcSeries& operator+=(const NcSeries& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  NcSeries& operator-=(const NcSeries& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  NcSeries& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [w, c] : terms_) c *= k;
    }
    return *this;
  }

  friend NcSeries operator+(NcSeries a, const NcSeries& b) { return a += b; }
  friend NcSeries operator-(NcSeries a, const NcSeries& b) { return a -= b; }
  friend NcSeries operator-(NcSeries a) { return a *= Rational(-1); }
  friend NcSeries operator*(NcSeries a, const Rational& k) { return a *= k; }
  friend NcSeries operator*(const Rational& k, NcSeries a) { return a *= k; }

  /// Truncated noncommutative product (concatenation of words).
  friend NcSeries operator*(const NcSeries& a, const NcSeries& b) {
    NcSeries out(std::min(a.max_degree_, b.max_degree_));
    Word w;
    for (const auto& [wa, ca] : a.terms_) {
      if (static_cast<int>(wa.size()) > out.max_degree_) continue;
      for (const auto& [wb, cb] : b.terms_) {
        if (static_cast<int>(wa.size() + wb.size()) > out.max_degree_) continue;
        w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add(w, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const NcSeries& a, const NcSeries& b) { return a.terms_ == b.terms_; }

  /// Canonical representative modulo [V1,V2] = 0: inside every maximal run
  /// of potential letters, V1 is moved ahead of V2 (the rewrite V2 V1 -> V1 V2).
  NcSeries normal_ordered() const {
    NcSeries out(max_degree_);
    for (const auto& [w, c] : terms_) out.add(normal_order(w), c);
    return out;
  }

  static Word normal_order(Word w) {
    auto run = w.begin();
    while (run != w.end()) {
      run = std::find_if(run, w.end(), [](Symbol s) { return s != Symbol::T; });
      auto stop = std::find(run, w.end(), Symbol::T);
      std::sort(run, stop);
      run = stop;
    }
    return w;
  }

  /// e.g. "1/2*T*V1 - 1/2*V1*T"; "0" when empty. Words are listed by
  /// length, then lexicographically in T < V1 < V2.
  std::string str(const SymbolNames& names = {}) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Word, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
    std::string out;
    for (const auto& [w, c] : sorted) {
      Rational mag = c < 0 ? Rational(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string word;
      for (Symbol s : w) word += (word.empty() ? "" : "*") + names(s);
      if (w.empty()) {
        out += mag.str();
      } else if (mag == 1) {
        out += word;
      } else {
        out += mag.str() + "*" + word;
      }
    }
    return out;
  }

 private:
  int max_degree_;
  std::map<Word, Rational> terms_;
};

/// sum_{k>=0} x^k / k!, truncated. x must have no constant term.
inline NcSeries exp_truncated(const NcSeries& x) {
  if (x.coefficient(Word{}) != 0) throw SeriesError("exp_truncated: argument has a grade-0 part");
  const int n = x.max_degree();
  NcSeries sum = NcSeries::one(n);
  NcSeries power = NcSeries::one(n);
  for (int k = 1; k <= n; ++k) {
    power = power * x;
    power *= Rational(1, k);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

/// log(1 + y) = sum_{k>=1} (-1)^{k+1} y^k / k, truncated. The argument must
/// have constant term exactly 1.
inline NcSeries log_truncated(const NcSeries& p) {
  if (p.coefficient(Word{}) != 1)
    throw SeriesError("log_truncated: constant term must be exactly 1");
  const int n = p.max_degree();
  NcSeries y = p - NcSeries::one(n);
  NcSeries sum(n);
  NcSeries power = NcSeries::one(n);
  for (int k = 1; k <= n; ++k) {
    power = power * y;
    if (power.is_zero()) break;
    sum += power * Rational((k % 2 == 1) ? 1 : -1, k);
  }
  return sum;
}

}  // namespace fgn::shadow
