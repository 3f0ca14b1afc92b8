#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fgn/dynamics/phase_state.hpp"
#include "fgn/dynamics/system_model.hpp"
#include "fgn/integrators/fraction.hpp"

namespace fgn {

/// Position update r += a h v.
struct Drift {
  Fraction a;
  friend bool operator==(const Drift&, const Drift&) = default;
};

/// Velocity update v += (b h) f_S / m + (c h^3) g_S / m on one subset.
struct Kick {
  Subset subset = Subset::Full;
  Fraction b;
  Fraction c;
  friend bool operator==(const Kick&, const Kick&) = default;
};

/// A stage allowed inside an inner loop.
using FlatStage = std::variant<Drift, Kick>;

/// Applies `stages` M times with inner step time_fraction * h / M. Inner
/// loops hold flat stages only, so nesting is at most one level deep.
struct InnerLoop {
  std::vector<FlatStage> stages;
  int repetitions = 1;
  Fraction time_fraction{1};
  friend bool operator==(const InnerLoop&, const InnerLoop&) = default;
};

using Stage = std::variant<Drift, Kick, InnerLoop>;

/// Ordered product of drift/kick exponentials, optionally with one level of
/// nested substeps.
struct SplittingScheme {
  std::string name;
  std::vector<Stage> stages;
  int declared_order = 2;

  friend bool operator==(const SplittingScheme&, const SplittingScheme&) = default;
};

/// Total drift weight and kick weights on V1 and V2 (FULL counts for both).
struct StageWeights {
  Fraction drift{0};
  Fraction fast{0};
  Fraction slow{0};
};

namespace detail {

inline void add_weights(const FlatStage& stage, Fraction scale, StageWeights& w) {
  if (const auto* d = std::get_if<Drift>(&stage)) {
    w.drift += scale * d->a;
  } else {
    const auto& k = std::get<Kick>(stage);
    if (k.subset != Subset::Slow) w.fast += scale * k.b;
    if (k.subset != Subset::Fast) w.slow += scale * k.b;
  }
}

inline FlatStage flatten(const Stage& s) {
  if (const auto* d = std::get_if<Drift>(&s)) return *d;
  return std::get<Kick>(s);
}

}  // namespace detail

inline StageWeights stage_weights(const SplittingScheme& scheme) {
  StageWeights w;
  for (const auto& stage : scheme.stages) {
    if (const auto* loop = std::get_if<InnerLoop>(&stage)) {
      for (const auto& inner : loop->stages) detail::add_weights(inner, loop->time_fraction, w);
    } else {
      detail::add_weights(detail::flatten(stage), Fraction{1}, w);
    }
  }
  return w;
}

/// True when the scheme only uses FULL kicks (no multirate split).
inline bool is_single_rate(const SplittingScheme& scheme) {
  auto flat_ok = [](const FlatStage& s) {
    const auto* k = std::get_if<Kick>(&s);
    return k == nullptr || k->subset == Subset::Full;
  };
  for (const auto& stage : scheme.stages) {
    if (const auto* loop = std::get_if<InnerLoop>(&stage)) {
      for (const auto& inner : loop->stages)
        if (!flat_ok(inner)) return false;
    } else if (!flat_ok(detail::flatten(stage))) {
      return false;
    }
  }
  return true;
}

/// Throws ConfigurationError unless drift and kick weights all sum to one
/// and every inner loop is well formed.
inline void validate(const SplittingScheme& scheme) {
  const std::string who = "scheme '" + scheme.name + "': ";
  if (scheme.stages.empty()) throw ConfigurationError(who + "no stages");
  for (const auto& stage : scheme.stages) {
    if (const auto* loop = std::get_if<InnerLoop>(&stage)) {
      if (loop->repetitions < 1) throw ConfigurationError(who + "inner loop needs M >= 1");
      if (!(loop->time_fraction > Fraction{0}) || loop->time_fraction > Fraction{1})
        throw ConfigurationError(who + "inner loop time fraction must lie in (0, 1]");
      if (loop->stages.empty()) throw ConfigurationError(who + "empty inner loop");
    }
  }
  const StageWeights w = stage_weights(scheme);
  if (w.drift != Fraction{1})
    throw ConfigurationError(who + "drift coefficients sum to " + w.drift.str() + ", not 1");
  if (w.slow != Fraction{1})
    throw ConfigurationError(who + "SLOW kick coefficients sum to " + w.slow.str() + ", not 1");
  if (w.fast != Fraction{1})
    throw ConfigurationError(who + "FAST kick coefficients sum to " + w.fast.str() + ", not 1");
}

/// Stage list equals its own reversal (inner loops compared recursively).
inline bool is_palindromic(const SplittingScheme& scheme) {
  const auto& s = scheme.stages;
  for (std::size_t k = 0; k < (s.size() + 1) / 2; ++k) {
    const Stage& a = s[k];
    const Stage& b = s[s.size() - 1 - k];
    if (a.index() != b.index()) return false;
    if (const auto* la = std::get_if<InnerLoop>(&a)) {
      const auto& lb = std::get<InnerLoop>(b);
      if (la->repetitions != lb.repetitions || la->time_fraction != lb.time_fraction)
        return false;
      const auto& st = la->stages;
      if (st != lb.stages) return false;
      for (std::size_t q = 0; q < st.size(); ++q)
        if (st[q] != st[st.size() - 1 - q]) return false;
    } else if (a != b) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Textual form:
//   stage := K(<subset>,<b>,<c>) | D(<a>) | L(M=<m>,f=<frac>){ <stage>* }
// Stages are separated by whitespace; rationals are written p/q.

namespace detail {

inline std::string format_flat(const FlatStage& s) {
  if (const auto* d = std::get_if<Drift>(&s)) return "D(" + d->a.str() + ")";
  const auto& k = std::get<Kick>(s);
  return std::string("K(") + to_string(k.subset) + "," + k.b.str() + "," + k.c.str() + ")";
}

class SchemeParser {
 public:
  explicit SchemeParser(std::string_view text) : text_(text) {}

  std::vector<Stage> parse_all() {
    std::vector<Stage> out;
    skip_ws();
    while (pos_ < text_.size()) {
      out.push_back(parse_stage(/*allow_loop=*/true));
      skip_ws();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigurationError("scheme text: " + what + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string_view token(std::string_view stops) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && stops.find(text_[pos_]) == std::string_view::npos &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("empty field");
    return text_.substr(start, pos_ - start);
  }
  Fraction fraction(std::string_view stops) {
    try {
      return Fraction::parse(token(stops));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  Stage parse_stage(bool allow_loop) {
    skip_ws();
    const char head = text_[pos_++];
    switch (head) {
      case 'D': {
        expect('(');
        const Fraction a = fraction(")");
        expect(')');
        return Drift{a};
      }
      case 'K': {
        expect('(');
        const std::string_view name = token(",");
        Kick k;
        if (name == "FULL") k.subset = Subset::Full;
        else if (name == "FAST") k.subset = Subset::Fast;
        else if (name == "SLOW") k.subset = Subset::Slow;
        else fail("unknown subset '" + std::string(name) + "'");
        expect(',');
        k.b = fraction(",");
        expect(',');
        k.c = fraction(")");
        expect(')');
        return k;
      }
      case 'L': {
        if (!allow_loop) fail("nested inner loop");
        InnerLoop loop;
        expect('(');
        skip_ws();
        if (text_.substr(pos_, 2) != "M=") fail("expected 'M='");
        pos_ += 2;
        const Fraction m = fraction(",");
        if (m.den() != 1 || m.num() < 1 || m.num() > 1'000'000) fail("M must be a positive integer");
        loop.repetitions = static_cast<int>(m.num());
        expect(',');
        skip_ws();
        if (text_.substr(pos_, 2) != "f=") fail("expected 'f='");
        pos_ += 2;
        loop.time_fraction = fraction(")");
        expect(')');
        expect('{');
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] != '}') {
          loop.stages.push_back(flatten(parse_stage(/*allow_loop=*/false)));
          skip_ws();
        }
        expect('}');
        return loop;
      }
      default:
        --pos_;
        fail(std::string("unknown stage '") + head + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string format_stages(const std::vector<Stage>& stages) {
  std::string out;
  for (const auto& stage : stages) {
    if (!out.empty()) out += ' ';
    if (const auto* loop = std::get_if<InnerLoop>(&stage)) {
      out += "L(M=" + std::to_string(loop->repetitions) + ",f=" + loop->time_fraction.str() + "){";
      for (std::size_t k = 0; k < loop->stages.size(); ++k) {
        if (k) out += ' ';
        out += detail::format_flat(loop->stages[k]);
      }
      out += '}';
    } else {
      out += detail::format_flat(detail::flatten(stage));
    }
  }
  return out;
}

inline std::vector<Stage> parse_stages(std::string_view text) {
  return detail::SchemeParser(text).parse_all();
}

/// Parses and validates a textual scheme.
inline SplittingScheme parse_scheme(std::string_view text, std::string name = "custom",
                                    int declared_order = 2) {
  SplittingScheme s{std::move(name), parse_stages(text), declared_order};
  validate(s);
  return s;
}

}  // namespace fgn
