#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "diracgeo/rational.hpp"

namespace diracgeo {

enum class ExprKind { Rational, Imaginary, Symbol, Func, Pow, Mul, Add };

enum class FuncName { Sin, Cos, Tan, Exp, Ln, Sqrt };

const char* func_name(FuncName f);

struct ExprNode;

// Immutable symbolic scalar expression. Copies share the underlying tree,
// so passing by value is cheap and thread-safe.
//
// Construction already canonicalizes the light invariants:
//   - nested Add-in-Add / Mul-in-Mul are flattened,
//   - Add/Mul children are sorted under a fixed total order,
//   - rational terms/factors are folded (a Mul carries at most one leading
//     rational coefficient, an Add at most one rational term),
//   - powers of the imaginary unit reduce mod 4,
//   - integer powers distribute over Mul and collapse Pow-of-Pow.
// Deeper rewriting (like-term collection, function folding) is simplify()'s
// job; see simplify.hpp.
class Expr {
 public:
  Expr();  // zero

  static Expr rational(Rational r);
  static Expr integer(std::int64_t n) { return rational(Rational(n)); }
  static Expr symbol(std::string name);
  static Expr imaginary();
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr pow(Expr base, Expr exponent);
  static Expr fn(FuncName f, Expr argument);

  static Expr zero() { return integer(0); }
  static Expr one() { return integer(1); }

  ExprKind kind() const;
  bool is_rational() const { return kind() == ExprKind::Rational; }
  bool is_zero() const;
  bool is_one() const;

  // Accessors; each requires the matching kind.
  const Rational& rational_value() const;
  const std::string& symbol_name() const;
  FuncName func() const;
  const std::vector<Expr>& children() const;  // Add/Mul terms, Pow {base, exp}, Func {arg}
  const Expr& base() const;
  const Expr& exponent() const;
  const Expr& argument() const;

  friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
  friend Expr operator-(const Expr& a, const Expr& b) {
    return sum({a, product({integer(-1), b})});
  }
  friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
  friend Expr operator/(const Expr& a, const Expr& b) {
    return product({a, pow(b, integer(-1))});
  }
  Expr operator-() const { return product({integer(-1), *this}); }

  const ExprNode* node() const { return node_.get(); }

 private:
  friend struct ExprFactory;
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

// Total structural order: kind rank first, then payload, children
// lexicographically. Drives the canonical sort of Add/Mul children and
// makes printing deterministic.
int compare(const Expr& a, const Expr& b);

inline bool struct_equal(const Expr& a, const Expr& b) { return compare(a, b) == 0; }

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

std::set<std::string> free_symbols(const Expr& e);

// Emits the expression grammar accepted by parse_expr; the round trip
// parse(to_string(e)) reproduces e node for node.
std::string to_string(const Expr& e);

// Splits e into (rational coefficient, remaining factor). An Add or a
// non-Mul node yields coefficient 1 and the node itself.
std::pair<Rational, Expr> split_coefficient(const Expr& e);

struct ExprNode {
  ExprKind kind;
  Rational value;          // Rational
  std::string name;        // Symbol
  FuncName fn = FuncName::Sin;  // Func
  std::vector<Expr> kids;  // Add/Mul children; Pow {base, exponent}; Func {argument}
};

}  // namespace diracgeo
