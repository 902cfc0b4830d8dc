#include "diracgeo/expr.hpp"

#include <algorithm>
#include <utility>

namespace diracgeo {

const char* func_name(FuncName f) {
  switch (f) {
    case FuncName::Sin: return "sin";
    case FuncName::Cos: return "cos";
    case FuncName::Tan: return "tan";
    case FuncName::Exp: return "exp";
    case FuncName::Ln: return "ln";
    case FuncName::Sqrt: return "sqrt";
  }
  return "?";
}

namespace {

int kind_rank(ExprKind k) {
  switch (k) {
    case ExprKind::Rational: return 0;
    case ExprKind::Imaginary: return 1;
    case ExprKind::Symbol: return 2;
    case ExprKind::Func: return 3;
    case ExprKind::Pow: return 4;
    case ExprKind::Mul: return 5;
    case ExprKind::Add: return 6;
  }
  return 7;
}

}  // namespace

struct ExprFactory {
  static Expr wrap(ExprNode node) {
    return Expr(std::make_shared<const ExprNode>(std::move(node)));
  }
};

namespace {

Expr wrap(ExprNode node) { return ExprFactory::wrap(std::move(node)); }

}  // namespace

Expr::Expr() {
  static const Expr z = integer(0);
  node_ = z.node_;
}

ExprKind Expr::kind() const { return node_->kind; }

bool Expr::is_zero() const { return is_rational() && node_->value.is_zero(); }
bool Expr::is_one() const { return is_rational() && node_->value.is_one(); }

const Rational& Expr::rational_value() const { return node_->value; }
const std::string& Expr::symbol_name() const { return node_->name; }
FuncName Expr::func() const { return node_->fn; }
const std::vector<Expr>& Expr::children() const { return node_->kids; }
const Expr& Expr::base() const { return node_->kids[0]; }
const Expr& Expr::exponent() const { return node_->kids[1]; }
const Expr& Expr::argument() const { return node_->kids[0]; }

Expr Expr::rational(Rational r) {
  ExprNode n;
  n.kind = ExprKind::Rational;
  n.value = r;
  return wrap(std::move(n));
}

Expr Expr::symbol(std::string name) {
  ExprNode n;
  n.kind = ExprKind::Symbol;
  n.name = std::move(name);
  return wrap(std::move(n));
}

Expr Expr::imaginary() {
  ExprNode n;
  n.kind = ExprKind::Imaginary;
  return wrap(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  flat.reserve(terms.size());
  for (auto& t : terms) {
    if (t.kind() == ExprKind::Add) {
      for (const auto& k : t.children()) flat.push_back(k);
    } else {
      flat.push_back(std::move(t));
    }
  }

  Rational re(0);
  Rational im(0);
  std::vector<Expr> rest;
  for (auto& t : flat) {
    if (t.is_rational()) {
      re += t.rational_value();
    } else if (t.kind() == ExprKind::Imaginary) {
      im += Rational(1);
    } else if (t.kind() == ExprKind::Mul && t.children().size() == 2 &&
               t.children()[0].is_rational() &&
               t.children()[1].kind() == ExprKind::Imaginary) {
      im += t.children()[0].rational_value();
    } else {
      rest.push_back(std::move(t));
    }
  }

  if (!im.is_zero()) {
    rest.push_back(im.is_one() ? imaginary() : product({rational(im), imaginary()}));
  }
  if (!re.is_zero() || rest.empty()) rest.push_back(rational(re));
  if (rest.size() == 1) return rest[0];

  std::sort(rest.begin(), rest.end(), ExprLess{});
  ExprNode n;
  n.kind = ExprKind::Add;
  n.kids = std::move(rest);
  return wrap(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  flat.reserve(factors.size());
  for (auto& f : factors) {
    if (f.kind() == ExprKind::Mul) {
      for (const auto& k : f.children()) flat.push_back(k);
    } else {
      flat.push_back(std::move(f));
    }
  }

  Rational coeff(1);
  int i_count = 0;
  std::vector<Expr> rest;
  for (auto& f : flat) {
    if (f.is_rational()) {
      coeff *= f.rational_value();
    } else if (f.kind() == ExprKind::Imaginary) {
      ++i_count;
    } else {
      rest.push_back(std::move(f));
    }
  }
  if (coeff.is_zero()) return zero();

  switch (((i_count % 4) + 4) % 4) {
    case 0: break;
    case 1: rest.push_back(imaginary()); break;
    case 2: coeff *= Rational(-1); break;
    case 3:
      coeff *= Rational(-1);
      rest.push_back(imaginary());
      break;
  }

  if (!coeff.is_one() || rest.empty()) rest.push_back(rational(coeff));
  if (rest.size() == 1) return rest[0];

  std::sort(rest.begin(), rest.end(), ExprLess{});
  ExprNode n;
  n.kind = ExprKind::Mul;
  n.kids = std::move(rest);
  return wrap(std::move(n));
}

Expr Expr::pow(Expr b, Expr e) {
  if (e.is_rational()) {
    const Rational& re = e.rational_value();
    if (re.is_zero()) return one();  // 0^0 := 1 by symbolic convention
    if (re.is_one()) return b;
    if (b.is_rational()) {
      const Rational& rb = b.rational_value();
      if (re.is_integer()) {
        if (!(rb.is_zero() && re.is_negative())) {
          try {
            return rational(rb.pow_int(re.num()));
          } catch (const OverflowError&) {
            // fall through to a symbolic node
          }
        }
      } else {
        if (rb.is_zero() && !re.is_negative()) return zero();
        if (rb.is_one()) return one();
      }
    }
    if (b.kind() == ExprKind::Imaginary && re.is_integer()) {
      switch (((re.num() % 4) + 4) % 4) {
        case 0: return one();
        case 1: return b;
        case 2: return integer(-1);
        case 3: return product({integer(-1), imaginary()});
      }
    }
    if (re.is_integer()) {
      if (b.kind() == ExprKind::Pow) {
        return pow(b.base(), product({b.exponent(), e}));
      }
      if (b.kind() == ExprKind::Mul) {
        std::vector<Expr> parts;
        parts.reserve(b.children().size());
        for (const auto& f : b.children()) parts.push_back(pow(f, e));
        return product(std::move(parts));
      }
    }
  } else if (b.is_one()) {
    return one();
  }

  ExprNode n;
  n.kind = ExprKind::Pow;
  n.kids = {std::move(b), std::move(e)};
  return wrap(std::move(n));
}

Expr Expr::fn(FuncName f, Expr argument) {
  ExprNode n;
  n.kind = ExprKind::Func;
  n.fn = f;
  n.kids = {std::move(argument)};
  return wrap(std::move(n));
}

int compare(const Expr& a, const Expr& b) {
  if (a.node() == b.node()) return 0;
  int ra = kind_rank(a.kind());
  int rb = kind_rank(b.kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case ExprKind::Rational:
      return a.rational_value().compare(b.rational_value());
    case ExprKind::Imaginary:
      return 0;
    case ExprKind::Symbol:
      return a.symbol_name().compare(b.symbol_name()) < 0
                 ? -1
                 : (a.symbol_name() == b.symbol_name() ? 0 : 1);
    case ExprKind::Func:
      if (a.func() != b.func()) return static_cast<int>(a.func()) < static_cast<int>(b.func()) ? -1 : 1;
      return compare(a.argument(), b.argument());
    default: {
      const auto& ka = a.children();
      const auto& kb = b.children();
      std::size_t n = std::min(ka.size(), kb.size());
      for (std::size_t idx = 0; idx < n; ++idx) {
        int c = compare(ka[idx], kb[idx]);
        if (c != 0) return c;
      }
      if (ka.size() != kb.size()) return ka.size() < kb.size() ? -1 : 1;
      return 0;
    }
  }
}

namespace {

void collect_symbols(const Expr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case ExprKind::Symbol:
      out.insert(e.symbol_name());
      break;
    case ExprKind::Rational:
    case ExprKind::Imaginary:
      break;
    default:
      for (const auto& k : e.children()) collect_symbols(k, out);
  }
}

}  // namespace

std::set<std::string> free_symbols(const Expr& e) {
  std::set<std::string> out;
  collect_symbols(e, out);
  return out;
}

std::pair<Rational, Expr> split_coefficient(const Expr& e) {
  if (e.is_rational()) return {e.rational_value(), Expr::one()};
  if (e.kind() == ExprKind::Mul && e.children()[0].is_rational()) {
    std::vector<Expr> rest(e.children().begin() + 1, e.children().end());
    return {e.children()[0].rational_value(), Expr::product(std::move(rest))};
  }
  return {Rational(1), e};
}

// ---------------------------------------------------------------------------
// Printer

namespace {

bool exponent_needs_parens(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Rational:
      return !e.rational_value().is_integer() || e.rational_value().is_negative();
    case ExprKind::Symbol:
    case ExprKind::Imaginary:
    case ExprKind::Func:
      return false;
    default:
      return true;
  }
}

bool pow_base_needs_parens(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Rational:
      return !e.rational_value().is_integer() || e.rational_value().is_negative();
    case ExprKind::Symbol:
    case ExprKind::Imaginary:
    case ExprKind::Func:
      return false;
    default:
      return true;  // Add, Mul, and Pow (right-associative ^)
  }
}

void print_expr(const Expr& e, std::string& out);

void print_factor(const Expr& e, std::string& out) {
  if (e.kind() == ExprKind::Add) {
    out += '(';
    print_expr(e, out);
    out += ')';
  } else {
    print_expr(e, out);
  }
}

// Prints a Mul whose rational coefficient has already been made nonnegative.
void print_mul_magnitude(Rational coeff, const std::vector<Expr>& factors, std::string& out) {
  bool first = true;
  if (!coeff.is_one() || factors.empty()) {
    out += coeff.str();
    first = false;
  }
  for (const auto& f : factors) {
    if (!first) out += '*';
    print_factor(f, out);
    first = false;
  }
}

void print_expr(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case ExprKind::Rational:
      out += e.rational_value().str();
      return;
    case ExprKind::Imaginary:
      out += 'i';
      return;
    case ExprKind::Symbol:
      out += e.symbol_name();
      return;
    case ExprKind::Func:
      out += func_name(e.func());
      out += '(';
      print_expr(e.argument(), out);
      out += ')';
      return;
    case ExprKind::Pow: {
      if (pow_base_needs_parens(e.base())) {
        out += '(';
        print_expr(e.base(), out);
        out += ')';
      } else {
        print_expr(e.base(), out);
      }
      out += '^';
      if (exponent_needs_parens(e.exponent())) {
        out += '(';
        print_expr(e.exponent(), out);
        out += ')';
      } else {
        print_expr(e.exponent(), out);
      }
      return;
    }
    case ExprKind::Mul: {
      auto [coeff, restExpr] = split_coefficient(e);
      std::vector<Expr> factors;
      if (restExpr.kind() == ExprKind::Mul) {
        factors = restExpr.children();
      } else if (!restExpr.is_one()) {
        factors = {restExpr};
      }
      if (coeff.is_negative()) {
        out += '-';
        coeff = -coeff;
      }
      print_mul_magnitude(coeff, factors, out);
      return;
    }
    case ExprKind::Add: {
      bool first = true;
      for (const auto& term : e.children()) {
        auto [coeff, restExpr] = split_coefficient(term);
        if (!first) {
          out += coeff.is_negative() ? " - " : " + ";
        } else if (coeff.is_negative()) {
          out += '-';
        }
        Rational mag = coeff.is_negative() ? -coeff : coeff;
        if (term.is_rational()) {
          out += mag.str();
        } else if (term.kind() == ExprKind::Mul) {
          std::vector<Expr> factors;
          if (restExpr.kind() == ExprKind::Mul) {
            factors = restExpr.children();
          } else if (!restExpr.is_one()) {
            factors = {restExpr};
          }
          print_mul_magnitude(mag, factors, out);
        } else {
          print_expr(term, out);
        }
        first = false;
      }
      return;
    }
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print_expr(e, out);
  return out;
}

}  // namespace diracgeo
