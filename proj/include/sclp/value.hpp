#ifndef SCLP_VALUE_HPP
#define SCLP_VALUE_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace sclp {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/** Unbounded integer extended with -inf and +inf. Backs nat-inf, opt and int-inf. */
class ExtInt {
 public:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

  ExtInt() = default;
  ExtInt(BigInt v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtInt(long long v) : value_(v) {}          // NOLINT(google-explicit-constructor)

  static ExtInt pos_inf() { return ExtInt(Kind::pos_inf); }
  static ExtInt neg_inf() { return ExtInt(Kind::neg_inf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::neg_inf; }
  /// Meaningful only when finite.
  const BigInt& finite_value() const noexcept { return value_; }

  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::finite) return std::strong_ordering::equal;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::neg_inf: return "-inf";
      case Kind::pos_inf: return "inf";
      case Kind::finite: break;
    }
    return value_.str();
  }

 private:
  explicit ExtInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  BigInt value_ = 0;
};

/// Element of a power-set semiring.
struct SymbolSet {
  std::set<std::string> items;

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;
  friend bool operator<(const SymbolSet& a, const SymbolSet& b) { return a.items < b.items; }
};

/// Element of a table-defined semiring.
struct Symbol {
  std::string name;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend bool operator<(const Symbol& a, const Symbol& b) { return a.name < b.name; }
};

/**
 * A semiring carrier value. Which alternative is used depends on the semiring:
 * bool (Boolean), ExtInt (nat-inf, opt, int-inf), Rational in [0,1] (fuzzy),
 * SymbolSet (power set), Symbol (tables). Equality is exact.
 */
using Value = std::variant<bool, ExtInt, Rational, SymbolSet, Symbol>;

inline std::string to_string(const Value& v) {
  struct Printer {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const ExtInt& x) const { return x.str(); }
    std::string operator()(const Rational& q) const {
      if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
      return boost::multiprecision::numerator(q).str() + "/" +
             boost::multiprecision::denominator(q).str();
    }
    std::string operator()(const SymbolSet& s) const {
      std::string out = "{";
      bool first = true;
      for (const auto& item : s.items) {
        if (!first) out += ",";
        out += item;
        first = false;
      }
      return out + "}";
    }
    std::string operator()(const Symbol& s) const { return s.name; }
  };
  return std::visit(Printer{}, v);
}

}  // namespace sclp

#endif  // SCLP_VALUE_HPP
