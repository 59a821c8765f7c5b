#include "trialg/delta.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace trialg {

// ---------------------------------------------------------------------------
// construction and structural equality
// ---------------------------------------------------------------------------

DeltaPoly DeltaPoly::var(std::string name, int grade) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var_name = std::move(name);
  n->var_grade = grade;
  return DeltaPoly(n);
}

DeltaPoly DeltaPoly::scale(Scalar c, const DeltaPoly& p) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scale;
  n->coeff = std::move(c);
  n->kids = {p.root_};
  return DeltaPoly(n);
}

DeltaPoly DeltaPoly::sum(std::vector<DeltaPoly> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  for (auto& p : parts) n->kids.push_back(p.root_);
  return DeltaPoly(n);
}

DeltaPoly DeltaPoly::prod(const DeltaPoly& a, const DeltaPoly& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prod;
  n->kids = {a.root_, b.root_};
  return DeltaPoly(n);
}

DeltaPoly DeltaPoly::proj(int grade, const DeltaPoly& p) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Proj;
  n->proj_grade = grade;
  n->kids = {p.root_};
  return DeltaPoly(n);
}

namespace {

bool node_equal(const DeltaPoly::Ptr& a, const DeltaPoly::Ptr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->kids.size() != b->kids.size()) return false;
  switch (a->kind) {
    case DeltaPoly::Kind::Var:
      if (a->var_name != b->var_name || a->var_grade != b->var_grade) return false;
      break;
    case DeltaPoly::Kind::Scale:
      if (!(a->coeff == b->coeff)) return false;
      break;
    case DeltaPoly::Kind::Proj:
      if (a->proj_grade != b->proj_grade) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!node_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

}  // namespace

bool operator==(const DeltaPoly& a, const DeltaPoly& b) {
  return node_equal(a.root_, b.root_);
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(const std::string& src, const std::vector<int>& grade_set)
      : src_(src), grades_(grade_set) {}

  DeltaPoly run() {
    DeltaPoly p = expr();
    skip_ws();
    if (pos_ != src_.size()) throw DeltaParseError("trailing input", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw DeltaParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void check_grade(int g, std::size_t pos) {
    for (int gs : grades_)
      if (gs == g) return;
    throw DeltaParseError("grade " + std::to_string(g) + " not in the grade set", pos);
  }

  DeltaPoly expr() {
    bool lead_minus = false;
    if (peek() == '-') {
      ++pos_;
      lead_minus = true;
    }
    std::vector<DeltaPoly> parts{term(lead_minus)};
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      parts.push_back(term(c == '-'));
    }
    return parts.size() == 1 ? parts[0] : DeltaPoly::sum(std::move(parts));
  }

  DeltaPoly term(bool negate) {
    Scalar coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      have_coeff = true;
      expect('*');
    }
    DeltaPoly p = factor();
    while (peek() == '*') {
      ++pos_;
      p = DeltaPoly::prod(p, factor());
    }
    if (negate) coeff = -coeff;
    if (have_coeff || negate) {
      // fold a sign into an existing top-level scale rather than nesting
      if (p.root().kind == DeltaPoly::Kind::Scale) {
        return DeltaPoly::scale(coeff * p.root().coeff,
                                DeltaPoly::wrap(p.root().kids[0]));
      }
      return DeltaPoly::scale(coeff, p);
    }
    return p;
  }

  Scalar rational() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (start == pos_) throw DeltaParseError("expected a number", pos_);
    std::string text = src_.substr(start, pos_ - start);
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      if (dstart == pos_) throw DeltaParseError("expected a denominator", pos_);
      text += "/" + src_.substr(dstart, pos_ - dstart);
    }
    return Scalar::parse(text);
  }

  DeltaPoly factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      DeltaPoly p = expr();
      expect(')');
      return p;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
      throw DeltaParseError("expected a variable, projection or '('", pos_);
    // projection: 'p' digit '('
    if (c == 'p' && pos_ + 2 < src_.size() &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])) &&
        src_[pos_ + 2] == '(') {
      std::size_t at = pos_;
      int g = src_[pos_ + 1] - '0';
      check_grade(g, at);
      pos_ += 3;
      DeltaPoly p = expr();
      expect(')');
      return DeltaPoly::proj(g, p);
    }
    return variable();
  }

  DeltaPoly variable() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw DeltaParseError("expected a variable name", pos_);
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw DeltaParseError("variable needs a trailing grade digit", pos_);
    std::string name = src_.substr(start, pos_ - start);
    int g = src_[pos_] - '0';
    check_grade(g, pos_);
    ++pos_;
    auto it = var_grades_.find(name);
    if (it != var_grades_.end() && it->second != g)
      throw DeltaParseError("variable '" + name + "' used with two grades", start);
    var_grades_[name] = g;
    return DeltaPoly::var(name, g);
  }

  const std::string& src_;
  const std::vector<int>& grades_;
  std::size_t pos_ = 0;
  std::map<std::string, int> var_grades_;
};

}  // namespace

DeltaPoly parse_delta(const std::string& src, const std::vector<int>& grade_set) {
  return Parser(src, grade_set).run();
}

// ---------------------------------------------------------------------------
// printer
// ---------------------------------------------------------------------------

namespace {

void print_node(std::ostringstream& os, const DeltaPoly::Ptr& n, bool in_product);

void print_factor(std::ostringstream& os, const DeltaPoly::Ptr& n, bool needs_parens) {
  if (needs_parens &&
      (n->kind == DeltaPoly::Kind::Sum || n->kind == DeltaPoly::Kind::Scale ||
       n->kind == DeltaPoly::Kind::Prod)) {
    os << "(";
    print_node(os, n, false);
    os << ")";
  } else {
    print_node(os, n, true);
  }
}

void print_node(std::ostringstream& os, const DeltaPoly::Ptr& n, bool in_product) {
  switch (n->kind) {
    case DeltaPoly::Kind::Var:
      os << n->var_name << n->var_grade;
      break;
    case DeltaPoly::Kind::Proj:
      os << "p" << n->proj_grade << "(";
      print_node(os, n->kids[0], false);
      os << ")";
      break;
    case DeltaPoly::Kind::Prod:
      print_factor(os, n->kids[0], n->kids[0]->kind == DeltaPoly::Kind::Sum ||
                                       n->kids[0]->kind == DeltaPoly::Kind::Scale);
      os << "*";
      print_factor(os, n->kids[1], true);
      break;
    case DeltaPoly::Kind::Scale: {
      Scalar c = n->coeff;
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      if (!c.is_one()) os << c.str() << "*";
      print_factor(os, n->kids[0],
                   n->kids[0]->kind == DeltaPoly::Kind::Sum ||
                       n->kids[0]->kind == DeltaPoly::Kind::Scale);
      break;
    }
    case DeltaPoly::Kind::Sum: {
      if (n->kids.empty()) {
        os << "0*_0";  // never produced by the parser; placeholder for empty sums
        break;
      }
      bool first = true;
      for (const auto& k : n->kids) {
        bool neg = k->kind == DeltaPoly::Kind::Scale && k->coeff.sign() < 0;
        if (!first) os << (neg ? " - " : " + ");
        if (first) {
          print_node(os, k, false);
          first = false;
          continue;
        }
        if (neg) {
          Scalar c = -k->coeff;
          if (!c.is_one()) os << c.str() << "*";
          print_factor(os, k->kids[0],
                       k->kids[0]->kind == DeltaPoly::Kind::Sum ||
                           k->kids[0]->kind == DeltaPoly::Kind::Scale);
        } else {
          print_node(os, k, false);
        }
      }
      break;
    }
  }
  (void)in_product;
}

}  // namespace

std::string to_string(const DeltaPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  print_node(os, p.ptr(), false);
  return os.str();
}

std::vector<std::tuple<std::string, int, std::size_t>> poly_variables(const DeltaPoly& p) {
  // degree per monomial: products add, sums take the maximum; the degree
  // bounds the polarization depth needed for a complete basis check
  std::vector<std::pair<std::string, int>> order;
  std::function<std::map<std::string, std::size_t>(const DeltaPoly::Ptr&)> deg =
      [&](const DeltaPoly::Ptr& n) -> std::map<std::string, std::size_t> {
    std::map<std::string, std::size_t> d;
    if (!n) return d;
    switch (n->kind) {
      case DeltaPoly::Kind::Var: {
        bool seen = false;
        for (auto& [name, grade] : order)
          if (name == n->var_name) seen = true;
        if (!seen) order.emplace_back(n->var_name, n->var_grade);
        d[n->var_name] = 1;
        return d;
      }
      case DeltaPoly::Kind::Prod: {
        d = deg(n->kids[0]);
        for (auto& [name, k] : deg(n->kids[1])) d[name] += k;
        return d;
      }
      case DeltaPoly::Kind::Sum: {
        for (const auto& kid : n->kids)
          for (auto& [name, k] : deg(kid)) d[name] = std::max(d[name], k);
        return d;
      }
      default:
        return deg(n->kids[0]);
    }
  };
  std::map<std::string, std::size_t> degrees = deg(p.ptr());
  std::vector<std::tuple<std::string, int, std::size_t>> vars;
  for (auto& [name, grade] : order) vars.emplace_back(name, grade, degrees[name]);
  return vars;
}

// ---------------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------------

namespace {

Vec eval_node(const DeltaPoly::Ptr& n, const GradedAlgebra& M,
              const std::map<std::string, Vec>& env) {
  switch (n->kind) {
    case DeltaPoly::Kind::Var:
      return env.at(n->var_name);
    case DeltaPoly::Kind::Scale:
      return n->coeff * eval_node(n->kids[0], M, env);
    case DeltaPoly::Kind::Proj:
      return project_grade(M, eval_node(n->kids[0], M, env), n->proj_grade);
    case DeltaPoly::Kind::Prod:
      return product(M.alg, eval_node(n->kids[0], M, env),
                     eval_node(n->kids[1], M, env));
    case DeltaPoly::Kind::Sum: {
      Vec r = zero_vec(M.alg.dim());
      for (const auto& k : n->kids) r = r + eval_node(k, M, env);
      return r;
    }
  }
  return {};
}

// all sums of up to `depth` distinct basis vectors with the given grade
std::vector<std::pair<std::string, Vec>> substitutions(const GradedAlgebra& M,
                                                       int grade, std::size_t depth) {
  std::vector<std::size_t> idx = M.indices_of(grade);
  std::vector<std::pair<std::string, Vec>> subs;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!pick.empty()) {
      Vec v = zero_vec(M.alg.dim());
      std::string name;
      for (std::size_t i : pick) {
        v[i] = Scalar(1);
        name += (name.empty() ? "" : "+") + M.alg.label(i);
      }
      subs.emplace_back(name, v);
    }
    if (pick.size() == depth) return;
    for (std::size_t i = start; i < idx.size(); ++i) {
      pick.push_back(idx[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return subs;
}

}  // namespace

Report eval_identity(const DeltaPoly& f, const GradedAlgebra& M) {
  Report rep;
  rep.subject = to_string(f);
  CheckItem& item = rep.add("vanishes on polarized basis substitutions");
  auto vars = poly_variables(f);
  std::vector<std::vector<std::pair<std::string, Vec>>> domains;
  for (const auto& [name, grade, count] : vars)
    domains.push_back(substitutions(M, grade, count));

  std::map<std::string, Vec> env;
  std::vector<std::string> assigned(vars.size());
  std::function<void(std::size_t)> rec = [&](std::size_t vi) {
    if (item.witnesses.size() >= 8) return;
    if (vi == vars.size()) {
      Vec value = eval_node(f.ptr(), M, env);
      if (!is_zero(value)) {
        std::string w;
        for (std::size_t i = 0; i < vars.size(); ++i)
          w += (w.empty() ? "" : ", ") + std::get<0>(vars[i]) + "=" + assigned[i];
        item.pass = false;
        item.witnesses.push_back(w + " -> " + to_string(value));
      }
      return;
    }
    for (const auto& [label, value] : domains[vi]) {
      env[std::get<0>(vars[vi])] = value;
      assigned[vi] = label;
      rec(vi + 1);
    }
    env.erase(std::get<0>(vars[vi]));
  };
  rec(0);
  return rep;
}

// ---------------------------------------------------------------------------
// expansion through a companion algebra (the G(f,T) construction)
// ---------------------------------------------------------------------------

namespace {

// monomial with its grade support, for projection collapsing
struct Mono {
  DeltaPoly::Ptr tree;
  std::set<int> supp;
};

std::string mono_key(const DeltaPoly::Ptr& n) {
  switch (n->kind) {
    case DeltaPoly::Kind::Var:
      return "v:" + n->var_name + ":" + std::to_string(n->var_grade);
    case DeltaPoly::Kind::Prod:
      return "(" + mono_key(n->kids[0]) + "." + mono_key(n->kids[1]) + ")";
    case DeltaPoly::Kind::Proj:
      return "p" + std::to_string(n->proj_grade) + "[" + mono_key(n->kids[0]) + "]";
    default:
      throw std::logic_error("mono_key: not a monomial node");
  }
}

// coefficient map keyed by the canonical monomial encoding
struct MPoly {
  std::map<std::string, std::pair<Scalar, DeltaPoly::Ptr>> terms;

  void add(const Scalar& c, const DeltaPoly::Ptr& tree) {
    if (c.is_zero()) return;
    std::string key = mono_key(tree);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, std::make_pair(c, tree));
    } else {
      it->second.first += c;
      if (it->second.first.is_zero()) terms.erase(it);
    }
  }
  void add_scaled(const MPoly& other, const Scalar& c) {
    for (const auto& [key, term] : other.terms) add(c * term.first, term.second);
  }
  bool zero() const { return terms.empty(); }
};

// grade multiplication support derived from the companion algebra
struct SuppTable {
  std::map<std::pair<int, int>, std::set<int>> table;

  explicit SuppTable(const GradedAlgebra& Lam) {
    for (std::size_t i = 0; i < Lam.alg.dim(); ++i)
      for (std::size_t j = 0; j < Lam.alg.dim(); ++j)
        for (const auto& [k, c] : Lam.alg.basis_product(i, j))
          table[{Lam.grades[i], Lam.grades[j]}].insert(Lam.grades[k]);
  }
  std::set<int> prod(const std::set<int>& a, const std::set<int>& b) const {
    std::set<int> out;
    for (int ga : a)
      for (int gb : b) {
        auto it = table.find({ga, gb});
        if (it != table.end()) out.insert(it->second.begin(), it->second.end());
      }
    return out;
  }
};

std::optional<Mono> mono_prod(const Mono& a, const Mono& b, const SuppTable& st) {
  Mono m;
  m.supp = st.prod(a.supp, b.supp);
  if (m.supp.empty()) return std::nullopt;
  auto n = std::make_shared<DeltaPoly::Node>();
  n->kind = DeltaPoly::Kind::Prod;
  n->kids = {a.tree, b.tree};
  m.tree = n;
  return m;
}

std::optional<Mono> mono_proj(int grade, const Mono& a) {
  if (!a.supp.count(grade)) return std::nullopt;        // projection kills it
  if (a.supp.size() == 1) return a;                     // already homogeneous
  auto n = std::make_shared<DeltaPoly::Node>();
  n->kind = DeltaPoly::Kind::Proj;
  n->proj_grade = grade;
  n->kids = {a.tree};
  Mono m;
  m.tree = n;
  m.supp = {grade};
  return m;
}

struct MonoPoly {
  // monomials with coefficients and supports
  std::map<std::string, std::tuple<Scalar, Mono>> terms;

  void add(const Scalar& c, const Mono& m) {
    if (c.is_zero()) return;
    std::string key = mono_key(m.tree);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, std::make_tuple(c, m));
    } else {
      std::get<0>(it->second) += c;
      if (std::get<0>(it->second).is_zero()) terms.erase(it);
    }
  }
  bool zero() const { return terms.empty(); }
};

using Expanded = std::map<std::size_t, MonoPoly>;  // carrier -> coefficient poly

Expanded expand_node(const DeltaPoly::Ptr& n, const GradedAlgebra& Lam,
                     const std::map<std::string, std::size_t>& T, const SuppTable& st) {
  Expanded out;
  switch (n->kind) {
    case DeltaPoly::Kind::Var: {
      auto it = T.find(n->var_name);
      if (it == T.end())
        throw std::invalid_argument("expand: no carrier assigned to '" + n->var_name + "'");
      std::size_t carrier = it->second;
      if (Lam.grades[carrier] != n->var_grade)
        throw std::invalid_argument("expand: carrier grade mismatch for '" +
                                    n->var_name + "'");
      Mono m{n, {n->var_grade}};
      out[carrier].add(Scalar(1), m);
      return out;
    }
    case DeltaPoly::Kind::Scale: {
      Expanded inner = expand_node(n->kids[0], Lam, T, st);
      for (auto& [carrier, poly] : inner) {
        MonoPoly scaled;
        for (const auto& [key, term] : poly.terms)
          scaled.add(n->coeff * std::get<0>(term), std::get<1>(term));
        if (!scaled.zero()) out[carrier] = std::move(scaled);
      }
      return out;
    }
    case DeltaPoly::Kind::Sum: {
      for (const auto& k : n->kids) {
        Expanded inner = expand_node(k, Lam, T, st);
        for (auto& [carrier, poly] : inner)
          for (const auto& [key, term] : poly.terms)
            out[carrier].add(std::get<0>(term), std::get<1>(term));
      }
      for (auto it = out.begin(); it != out.end();)
        it = it->second.zero() ? out.erase(it) : std::next(it);
      return out;
    }
    case DeltaPoly::Kind::Proj: {
      Expanded inner = expand_node(n->kids[0], Lam, T, st);
      for (auto& [carrier, poly] : inner)
        if (Lam.grades[carrier] == n->proj_grade) out[carrier] = std::move(poly);
      return out;
    }
    case DeltaPoly::Kind::Prod: {
      Expanded lhs = expand_node(n->kids[0], Lam, T, st);
      Expanded rhs = expand_node(n->kids[1], Lam, T, st);
      for (const auto& [c1, p1] : lhs)
        for (const auto& [c2, p2] : rhs)
          for (const auto& [k, ck] : Lam.alg.basis_product(c1, c2)) {
            int grade = Lam.grades[k];
            for (const auto& [key1, t1] : p1.terms)
              for (const auto& [key2, t2] : p2.terms) {
                auto prod = mono_prod(std::get<1>(t1), std::get<1>(t2), st);
                if (!prod) continue;
                auto projected = mono_proj(grade, *prod);
                if (!projected) continue;
                out[k].add(std::get<0>(t1) * std::get<0>(t2) * ck, *projected);
              }
          }
      for (auto it = out.begin(); it != out.end();)
        it = it->second.zero() ? out.erase(it) : std::next(it);
      return out;
    }
  }
  return out;
}

// integer-content normalization: common denominator, content 1, first
// monomial positive
void normalize_coeffs(std::vector<std::pair<std::string, Scalar>>& terms) {
  if (terms.empty()) return;
  mpz_class lcm_den(1), gcd_num(0);
  for (const auto& [key, c] : terms) {
    mpz_class den = c.denominator();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> nums;
  for (const auto& [key, c] : terms) {
    mpz_class num = c.numerator() * (lcm_den / c.denominator());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
    nums.push_back(num);
  }
  int lead_sign = sgn(nums.front());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    mpz_class v = nums[i] / gcd_num;
    if (lead_sign < 0) v = -v;
    terms[i].second = Scalar(mpq_class(v));
  }
}

// exact reassembly in monomial-key order; normalization is applied only when
// presenting derived identities, never to the exact expansion components
DeltaPoly rebuild(const MonoPoly& poly, bool normalize) {
  std::vector<std::pair<std::string, Scalar>> terms;
  std::map<std::string, DeltaPoly::Ptr> trees;
  for (const auto& [key, term] : poly.terms) {
    terms.emplace_back(key, std::get<0>(term));
    trees[key] = std::get<1>(term).tree;
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (normalize) normalize_coeffs(terms);
  std::vector<DeltaPoly> parts;
  for (const auto& [key, c] : terms) {
    DeltaPoly t = DeltaPoly::wrap(trees[key]);
    parts.push_back(c.is_one() ? t : DeltaPoly::scale(c, t));
  }
  return parts.size() == 1 ? parts[0] : DeltaPoly::sum(std::move(parts));
}

}  // namespace

std::vector<std::pair<std::size_t, DeltaPoly>> expand_with_carriers(
    const DeltaPoly& f, const GradedAlgebra& Lam,
    const std::map<std::string, std::size_t>& T) {
  SuppTable st(Lam);
  Expanded e = expand_node(f.ptr(), Lam, T, st);
  std::vector<std::pair<std::size_t, DeltaPoly>> out;
  for (const auto& [carrier, poly] : e)
    if (!poly.zero()) out.emplace_back(carrier, rebuild(poly, false));
  return out;
}

std::vector<DeltaPoly> expand(const DeltaPoly& f, const GradedAlgebra& Lam,
                              const std::map<std::string, std::size_t>& T) {
  std::vector<DeltaPoly> out;
  for (auto& [carrier, poly] : expand_with_carriers(f, Lam, T))
    out.push_back(std::move(poly));
  return out;
}

// ---------------------------------------------------------------------------
// canonical keys and the derived variety
// ---------------------------------------------------------------------------

namespace {

// plain monomial expansion (no support collapsing; independent of any
// companion algebra)
void expand_plain(const DeltaPoly::Ptr& n, const Scalar& c, MPoly& out) {
  switch (n->kind) {
    case DeltaPoly::Kind::Var:
      out.add(c, n);
      return;
    case DeltaPoly::Kind::Scale:
      expand_plain(n->kids[0], c * n->coeff, out);
      return;
    case DeltaPoly::Kind::Sum:
      for (const auto& k : n->kids) expand_plain(k, c, out);
      return;
    case DeltaPoly::Kind::Proj: {
      MPoly inner;
      expand_plain(n->kids[0], Scalar(1), inner);
      for (const auto& [key, term] : inner.terms) {
        auto node = std::make_shared<DeltaPoly::Node>();
        node->kind = DeltaPoly::Kind::Proj;
        node->proj_grade = n->proj_grade;
        node->kids = {term.second};
        out.add(c * term.first, node);
      }
      return;
    }
    case DeltaPoly::Kind::Prod: {
      MPoly lhs, rhs;
      expand_plain(n->kids[0], Scalar(1), lhs);
      expand_plain(n->kids[1], Scalar(1), rhs);
      for (const auto& [k1, t1] : lhs.terms)
        for (const auto& [k2, t2] : rhs.terms) {
          auto node = std::make_shared<DeltaPoly::Node>();
          node->kind = DeltaPoly::Kind::Prod;
          node->kids = {t1.second, t2.second};
          out.add(c * t1.first * t2.first, node);
        }
      return;
    }
  }
}

DeltaPoly::Ptr rename_vars(const DeltaPoly::Ptr& n,
                           const std::map<std::string, std::string>& subst) {
  auto node = std::make_shared<DeltaPoly::Node>(*n);
  if (n->kind == DeltaPoly::Kind::Var) {
    node->var_name = subst.at(n->var_name);
    return node;
  }
  node->kids.clear();
  for (const auto& k : n->kids) node->kids.push_back(rename_vars(k, subst));
  return node;
}

std::string encode(const MPoly& p) {
  std::vector<std::pair<std::string, Scalar>> terms;
  for (const auto& [key, term] : p.terms) terms.emplace_back(key, term.first);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  normalize_coeffs(terms);
  std::string out;
  for (const auto& [key, c] : terms) out += c.str() + "|" + key + ";";
  return out;
}

}  // namespace

std::string canonical_key(const DeltaPoly& p) {
  MPoly expanded;
  expand_plain(p.ptr(), Scalar(1), expanded);
  if (expanded.zero()) return "";

  auto vars = poly_variables(p);
  // group variable positions by grade; try every grade-preserving renaming
  std::map<int, std::vector<std::string>> by_grade;
  for (const auto& [name, grade, count] : vars) by_grade[grade].push_back(name);

  auto target_name = [](int grade, std::size_t i) {
    static const char* g0[] = {"a", "b", "c", "d", "e", "f"};
    static const char* g2[] = {"x", "y", "z", "u", "v", "w"};
    if (grade == 0 && i < 6) return std::string(g0[i]);
    if (grade == 2 && i < 6) return std::string(g2[i]);
    return "g" + std::to_string(grade) + "v" + std::to_string(i);
  };

  std::string best;
  std::vector<std::map<std::string, std::string>> substs{{}};
  for (auto& [grade, names] : by_grade) {
    std::vector<std::string> perm = names;
    std::sort(perm.begin(), perm.end());
    std::vector<std::map<std::string, std::string>> next;
    do {
      for (const auto& base : substs) {
        auto s = base;
        for (std::size_t i = 0; i < perm.size(); ++i) s[perm[i]] = target_name(grade, i);
        next.push_back(std::move(s));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    substs = std::move(next);
  }
  for (const auto& s : substs) {
    MPoly renamed;
    for (const auto& [key, term] : expanded.terms)
      renamed.add(term.first, rename_vars(term.second, s));
    std::string enc = encode(renamed);
    if (best.empty() || enc < best) best = enc;
  }
  return best;
}

std::vector<DeltaPoly> derive_variety(const std::vector<DeltaPoly>& fs,
                                      const GradedAlgebra& Lam) {
  std::map<std::string, DeltaPoly> found;  // canonical key -> representative
  for (const DeltaPoly& f : fs) {
    auto vars = poly_variables(f);
    std::vector<std::vector<std::size_t>> domains;
    for (const auto& [name, grade, count] : vars)
      domains.push_back(Lam.indices_of(grade));
    bool feasible = true;
    for (const auto& d : domains)
      if (d.empty()) feasible = false;
    if (!feasible) continue;

    std::map<std::string, std::size_t> T;
    std::function<void(std::size_t)> rec = [&](std::size_t vi) {
      if (vi == vars.size()) {
        for (DeltaPoly& g : expand(f, Lam, T)) {
          std::string key = canonical_key(g);
          if (key.empty() || found.count(key)) continue;
          // store a content-normalized representative in monomial order
          MPoly plain;
          expand_plain(g.ptr(), Scalar(1), plain);
          MonoPoly presented;
          for (const auto& [mkey, term] : plain.terms)
            presented.add(term.first, Mono{term.second, {}});
          found.emplace(key, rebuild(presented, true));
        }
        return;
      }
      for (std::size_t idx : domains[vi]) {
        T[std::get<0>(vars[vi])] = idx;
        rec(vi + 1);
      }
      T.erase(std::get<0>(vars[vi]));
    };
    rec(0);
  }
  std::vector<DeltaPoly> out;
  for (auto& [key, g] : found) out.push_back(g);
  return out;
}

std::vector<DeltaPoly> lie_axioms(const std::vector<int>& grade_set) {
  std::vector<DeltaPoly> out;
  auto var = [](const char* n, int g) { return DeltaPoly::var(n, g); };
  for (int a : grade_set)
    for (int b : grade_set) {
      if (a > b) continue;
      DeltaPoly x = var("x", a), y = var("y", b);
      out.push_back(DeltaPoly::sum({DeltaPoly::prod(x, y), DeltaPoly::prod(y, x)}));
    }
  for (int a : grade_set)
    for (int b : grade_set)
      for (int c : grade_set) {
        DeltaPoly x = var("x", a), y = var("y", b), z = var("z", c);
        out.push_back(DeltaPoly::sum({DeltaPoly::prod(DeltaPoly::prod(x, y), z),
                                      DeltaPoly::prod(DeltaPoly::prod(y, z), x),
                                      DeltaPoly::prod(DeltaPoly::prod(z, x), y)}));
      }
  return out;
}

std::vector<DeltaPoly> load_identity_lines(std::istream& in,
                                           const std::vector<int>& grade_set) {
  std::vector<DeltaPoly> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    out.push_back(parse_delta(line, grade_set));
  }
  return out;
}

}  // namespace trialg
