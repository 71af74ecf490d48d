#pragma once

// Weight sequences r = (r_0, r_1, ...). Part p of a composition carries
// weight r_{p-1}, so index i here always means "part i + 1".

#include "composerie/combinatorics.hpp"
#include "composerie/ring.hpp"
#include "composerie/series.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace composerie {

/// r_i = prefix[i] for i < prefix.size(), then the constant tail.
struct ExplicitPrefix {
  std::vector<BigInt> prefix;
  BigInt tail;
};

/// Indicator of a finite set of allowed parts (part values, not indices).
struct AllowedParts {
  std::vector<std::uint64_t> parts;  // sorted, distinct, >= 1
};

/// Part p allowed iff p == 1 (mod modulus), i.e. r_i = 1 iff modulus | i.
struct ResidueRule {
  std::uint64_t modulus;
};

/// Every part allowed except `part`.
struct ForbiddenPart {
  std::uint64_t part;
};

/// r_i = C(i + m - 1, i) for Pyramidal, r_i = (i + 1)^2 for Squares.
struct FormulaRule {
  enum class Law { Pyramidal, Squares };
  Law law;
  std::uint64_t m = 0;
};

class WeightSequence {
public:
  using Rule = std::variant<ExplicitPrefix, AllowedParts, ResidueRule, ForbiddenPart, FormulaRule>;

  explicit WeightSequence(Rule rule) : rule_(std::move(rule)) {}

  const Rule& rule() const noexcept { return rule_; }

  BigInt at(std::uint64_t i) const {
    return std::visit([i](const auto& r) { return eval(r, i); }, rule_);
  }

private:
  static BigInt eval(const ExplicitPrefix& r, std::uint64_t i) {
    return i < r.prefix.size() ? r.prefix[i] : r.tail;
  }
  static BigInt eval(const AllowedParts& r, std::uint64_t i) {
    return std::binary_search(r.parts.begin(), r.parts.end(), i + 1) ? 1 : 0;
  }
  static BigInt eval(const ResidueRule& r, std::uint64_t i) { return i % r.modulus == 0 ? 1 : 0; }
  static BigInt eval(const ForbiddenPart& r, std::uint64_t i) { return i + 1 == r.part ? 0 : 1; }
  static BigInt eval(const FormulaRule& r, std::uint64_t i) {
    const auto ii = static_cast<std::int64_t>(i);
    if (r.law == FormulaRule::Law::Squares) return BigInt(ii + 1) * (ii + 1);
    return binomial(ii + static_cast<std::int64_t>(r.m) - 1, ii);
  }

  Rule rule_;
};

inline BigInt weight_at(const WeightSequence& r, std::uint64_t i) { return r.at(i); }

/// r_0, ..., r_{count-1} mapped into `ring`.
template <CommutativeRing R>
std::vector<typename R::value_type> weights_prefix(const R& ring, const WeightSequence& r,
                                                   std::size_t count) {
  std::vector<typename R::value_type> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(ring.from_integer(r.at(i)));
  return out;
}

template <CommutativeRing R>
TruncatedSeries<R> series_from_weights(const R& ring, const WeightSequence& r, std::size_t order) {
  if (order == 0) throw std::invalid_argument("series_from_weights: order must be >= 1");
  return {ring, weights_prefix(ring, r, order)};
}

// ---------------------------------------------------------------------------
// Named families

enum class FamilyName {
  AllOnes,
  Bounded,
  AllowedSet,
  OneOrM,
  Residue1Mod,
  NoPart,
  TwoTypeOnes,
  Binomial,
  Pyramidal,
  Squares,
  Explicit,
};

/// A named family with its parameters. `m` is the single numeric parameter
/// where the family has one; `parts` is the allowed set; `prefix`/`tail` hold
/// explicit weights.
struct Family {
  FamilyName name = FamilyName::AllOnes;
  std::uint64_t m = 0;
  std::vector<std::uint64_t> parts;
  std::vector<BigInt> prefix;
  BigInt tail = 0;

  friend bool operator==(const Family&, const Family&) = default;
};

class FamilyError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw FamilyError(what);
}

inline std::vector<std::uint64_t> normalized_allowed_set(const Family& f) {
  std::vector<std::uint64_t> parts = f.parts;
  std::sort(parts.begin(), parts.end());
  require(std::adjacent_find(parts.begin(), parts.end()) == parts.end(),
          "allowed-set: parts must be distinct");
  require(!parts.empty() && parts.front() == 1, "allowed-set: the set must contain 1");
  return parts;
}

}  // namespace detail

/// Validates the parameters and builds the weight rule.
///
///   all-ones          r_i = 1
///   bounded:m         r_i = 1 for i <= m, else 0 (each index at most m)
///   allowed-set:S     r_i = 1 iff i + 1 in S; S contains 1, other parts >= 2
///   one-or-m:m        allowed set {1, m}, m >= 2
///   residue-1-mod:m   r_i = 1 iff m | i (parts 1, m+1, 2m+1, ...), m >= 1
///   no-part:m         r_{m-1} = 0, else 1, m >= 2
///   two-type-ones:m   r_0 = 1 + m, r_i = 1 for i > 0, m >= 0
///   binomial:m        r_i = C(m, i), m >= 1
///   pyramidal:m       r_i = C(i + m - 1, i), m >= 1
///   squares           r_i = (i + 1)^2
///   explicit          r_i = prefix[i], then tail
inline WeightSequence family_to_weights(const Family& f) {
  using detail::require;
  switch (f.name) {
    case FamilyName::AllOnes:
      return WeightSequence(ExplicitPrefix{{}, 1});
    case FamilyName::Bounded: {
      require(f.m >= 1, "bounded: m must be >= 1");
      return WeightSequence(ExplicitPrefix{std::vector<BigInt>(f.m + 1, BigInt(1)), 0});
    }
    case FamilyName::AllowedSet:
      return WeightSequence(AllowedParts{detail::normalized_allowed_set(f)});
    case FamilyName::OneOrM:
      require(f.m >= 2, "one-or-m: m must be >= 2");
      return WeightSequence(AllowedParts{{1, f.m}});
    case FamilyName::Residue1Mod:
      require(f.m >= 1, "residue-1-mod: m must be >= 1");
      return WeightSequence(ResidueRule{f.m});
    case FamilyName::NoPart:
      require(f.m >= 2, "no-part: forbidden part m must be >= 2");
      return WeightSequence(ForbiddenPart{f.m});
    case FamilyName::TwoTypeOnes:
      return WeightSequence(ExplicitPrefix{{BigInt(1) + f.m}, 1});
    case FamilyName::Binomial: {
      require(f.m >= 1, "binomial: m must be >= 1");
      std::vector<BigInt> prefix;
      for (std::uint64_t i = 0; i <= f.m; ++i) {
        prefix.push_back(binomial(static_cast<std::int64_t>(f.m), static_cast<std::int64_t>(i)));
      }
      return WeightSequence(ExplicitPrefix{std::move(prefix), 0});
    }
    case FamilyName::Pyramidal:
      require(f.m >= 1, "pyramidal: m must be >= 1");
      return WeightSequence(FormulaRule{FormulaRule::Law::Pyramidal, f.m});
    case FamilyName::Squares:
      return WeightSequence(FormulaRule{FormulaRule::Law::Squares});
    case FamilyName::Explicit:
      return WeightSequence(ExplicitPrefix{f.prefix, f.tail});
  }
  throw FamilyError("unknown family");
}

// ---------------------------------------------------------------------------
// Text form

namespace detail {

inline std::uint64_t parse_natural(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw FamilyError(std::string(what) + ": expected a nonnegative integer, got '" +
                      std::string(text) + "'");
  }
  return v;
}

inline BigInt parse_integer(std::string_view text, std::string_view what) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
    throw FamilyError(std::string(what) + ": expected an integer, got '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct NameEntry {
  std::string_view text;
  FamilyName name;
  bool takes_m;
};

inline constexpr NameEntry kNames[] = {
    {"all-ones", FamilyName::AllOnes, false},
    {"bounded", FamilyName::Bounded, true},
    {"allowed-set", FamilyName::AllowedSet, false},
    {"one-or-m", FamilyName::OneOrM, true},
    {"residue-1-mod", FamilyName::Residue1Mod, true},
    {"no-part", FamilyName::NoPart, true},
    {"two-type-ones", FamilyName::TwoTypeOnes, true},
    {"binomial", FamilyName::Binomial, true},
    {"pyramidal", FamilyName::Pyramidal, true},
    {"squares", FamilyName::Squares, false},
    {"explicit", FamilyName::Explicit, false},
};

}  // namespace detail

/// Parses the family grammar:
///   all-ones | squares
///   bounded:m | one-or-m:m | residue-1-mod:m | no-part:m
///   two-type-ones:m | binomial:m | pyramidal:m
///   allowed-set:1,m1,...,ms
///   explicit:c0,c1,...[;tail=t]        (tail defaults to 0)
/// Parameter constraints are checked as well, so a parsed family always
/// converts with family_to_weights.
inline Family parse_family(std::string_view text) {
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  const detail::NameEntry* entry = nullptr;
  for (const auto& e : detail::kNames) {
    if (e.text == head) entry = &e;
  }
  if (entry == nullptr) throw FamilyError("unknown family '" + std::string(head) + "'");

  Family f;
  f.name = entry->name;
  const bool has_args = colon != std::string_view::npos;
  if (entry->takes_m) {
    if (!has_args) throw FamilyError(std::string(head) + ": missing parameter (" + std::string(head) + ":m)");
    f.m = detail::parse_natural(args, head);
  } else if (f.name == FamilyName::AllowedSet) {
    if (!has_args) throw FamilyError("allowed-set: missing part list");
    for (auto p : detail::split(args, ',')) f.parts.push_back(detail::parse_natural(p, head));
  } else if (f.name == FamilyName::Explicit) {
    if (!has_args) throw FamilyError("explicit: missing coefficient list");
    auto semi = args.find(';');
    std::string_view list = args.substr(0, semi);
    if (semi != std::string_view::npos) {
      std::string_view tail = args.substr(semi + 1);
      if (tail.substr(0, 5) != "tail=") throw FamilyError("explicit: expected ';tail=t' after the list");
      f.tail = detail::parse_integer(tail.substr(5), "explicit tail");
    }
    for (auto c : detail::split(list, ',')) f.prefix.push_back(detail::parse_integer(c, "explicit"));
  } else if (has_args) {
    throw FamilyError(std::string(head) + " takes no parameters");
  }
  (void)family_to_weights(f);
  return f;
}

inline std::string to_string(const Family& f) {
  std::string head;
  bool takes_m = false;
  for (const auto& e : detail::kNames) {
    if (e.name == f.name) {
      head = e.text;
      takes_m = e.takes_m;
    }
  }
  std::ostringstream out;
  out << head;
  if (takes_m) out << ':' << f.m;
  if (f.name == FamilyName::AllowedSet) {
    out << ':';
    for (std::size_t i = 0; i < f.parts.size(); ++i) out << (i ? "," : "") << f.parts[i];
  }
  if (f.name == FamilyName::Explicit) {
    out << ':';
    for (std::size_t i = 0; i < f.prefix.size(); ++i) out << (i ? "," : "") << f.prefix[i];
    out << ";tail=" << f.tail;
  }
  return out.str();
}

}  // namespace composerie
