#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fgn/shadow/nc_series.hpp"

namespace fgn::shadow {

/// Binary bracket tree over {T, V1, V2}, e.g. [V2,[T,V2]].
class Bracket {
 public:
  /// Leaf.
  Bracket(Symbol s) : leaf_(s) {}  // NOLINT(google-explicit-constructor)
  Bracket(Bracket left, Bracket right)
      : children_(std::make_shared<const std::pair<Bracket, Bracket>>(std::move(left),
                                                                       std::move(right))) {}

  bool is_leaf() const { return children_ == nullptr; }
  Symbol leaf() const { return leaf_; }
  const Bracket& left() const { return children_->first; }
  const Bracket& right() const { return children_->second; }

  int degree() const { return is_leaf() ? 1 : left().degree() + right().degree(); }

  /// [a,b] -> ab - ba, recursively.
  NcSeries expand(int max_degree) const {
    if (is_leaf()) return NcSeries::symbol(leaf_, max_degree);
    const NcSeries a = left().expand(max_degree);
    const NcSeries b = right().expand(max_degree);
    return a * b - b * a;
  }

  std::string str(const SymbolNames& names = {}) const {
    if (is_leaf()) return names(leaf_);
    return "[" + left().str(names) + "," + right().str(names) + "]";
  }

 private:
  Symbol leaf_ = Symbol::T;
  std::shared_ptr<const std::pair<Bracket, Bracket>> children_;
};

inline Bracket br(Bracket a, Bracket b) { return {std::move(a), std::move(b)}; }

/// Rational linear combination of bracket trees.
class CommutatorExpr {
 public:
  struct Term {
    Rational coeff;
    Bracket bracket;
  };

  CommutatorExpr() = default;
  CommutatorExpr(std::initializer_list<Term> terms) : terms_(terms) {}

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  CommutatorExpr& add(Rational c, Bracket b) {
    if (c != 0) terms_.push_back({std::move(c), std::move(b)});
    return *this;
  }
  CommutatorExpr& operator+=(const CommutatorExpr& o) {
    for (const auto& t : o.terms_) add(t.coeff, t.bracket);
    return *this;
  }
  friend CommutatorExpr operator+(CommutatorExpr a, const CommutatorExpr& b) { return a += b; }
  friend CommutatorExpr operator*(const Rational& k, CommutatorExpr e) {
    if (k == 0) return {};
    for (auto& t : e.terms_) t.coeff *= k;
    return e;
  }

  NcSeries expand(int max_degree) const {
    NcSeries out(max_degree);
    for (const auto& t : terms_) out += t.bracket.expand(max_degree) * t.coeff;
    return out;
  }

  /// e.g. "-1/72 * [V,[T,V]]" or "1/24 * [V,[T,V]] + 1/12 * [T,[T,V]]"; "0" if empty.
  std::string str(const SymbolNames& names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      const Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
      if (out.empty()) {
        if (t.coeff < 0) out += "-";
      } else {
        out += t.coeff < 0 ? " - " : " + ";
      }
      out += mag.str() + " * " + t.bracket.str(names);
    }
    return out;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace fgn::shadow
