#pragma once

#include <istream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "trialg/graded.hpp"
#include "trialg/report.hpp"

namespace trialg {

/// Abstract syntax tree of a polynomial in the signature
/// (+, *, scalar, grade projections) over graded variables. Immutable.
class DeltaPoly {
 public:
  enum class Kind { Var, Scale, Sum, Prod, Proj };

  struct Node;
  using Ptr = std::shared_ptr<const Node>;
  struct Node {
    Kind kind;
    std::string var_name;   // Var
    int var_grade = 0;      // Var
    Scalar coeff;           // Scale
    int proj_grade = 0;     // Proj
    std::vector<Ptr> kids;  // Scale, Proj: one; Prod: two; Sum: any number
  };

  DeltaPoly() : root_(nullptr) {}

  static DeltaPoly var(std::string name, int grade);
  static DeltaPoly scale(Scalar c, const DeltaPoly& p);
  static DeltaPoly sum(std::vector<DeltaPoly> parts);
  static DeltaPoly prod(const DeltaPoly& a, const DeltaPoly& b);
  static DeltaPoly proj(int grade, const DeltaPoly& p);

  bool empty() const { return root_ == nullptr; }
  const Node& root() const { return *root_; }
  Ptr ptr() const { return root_; }
  static DeltaPoly wrap(Ptr p) { return DeltaPoly(std::move(p)); }

  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b);

 private:
  explicit DeltaPoly(Ptr r) : root_(std::move(r)) {}
  Ptr root_;
};

class DeltaParseError : public std::runtime_error {
 public:
  DeltaParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

/// Grammar: expr := ['-'] term (('+'|'-') term)*;
/// term := [rational '*'] factor ('*' factor)*;
/// factor := 'p'digit'(' expr ')' | '(' expr ')' | var;
/// var := letters digit, the final digit being the grade.
/// Whitespace is insignificant. Grades are validated against grade_set, and
/// a variable name must carry one consistent grade per polynomial.
DeltaPoly parse_delta(const std::string& src, const std::vector<int>& grade_set);

/// Prints in the grammar above; parse(to_string(p)) is structurally equal
/// to p for parser-produced trees.
std::string to_string(const DeltaPoly& p);

/// Distinct variables as (name, grade, occurrence count), in first-appearance
/// order.
std::vector<std::tuple<std::string, int, std::size_t>> poly_variables(const DeltaPoly& p);

/// Decides whether f vanishes identically on M: substitutes homogeneous
/// basis tuples with polarization (a variable occurring k times also runs
/// over sums of up to k distinct basis vectors of its grade) and evaluates.
Report eval_identity(const DeltaPoly& f, const GradedAlgebra& M);

/// Component identities of f(x1 (x) a_{T(x1)}, ...) = sum_j g_j (x) a_kj
/// over the companion algebra, one per carrier basis vector, zero components
/// dropped. Assignments must respect grades.
std::vector<DeltaPoly> expand(const DeltaPoly& f, const GradedAlgebra& Lam,
                              const std::map<std::string, std::size_t>& T);

/// Same, keeping the carrier index of each component.
std::vector<std::pair<std::size_t, DeltaPoly>> expand_with_carriers(
    const DeltaPoly& f, const GradedAlgebra& Lam,
    const std::map<std::string, std::size_t>& T);

/// Union of expand(f, Lam, T) over all f and all grade-compatible basis
/// assignments T, deduplicated up to scalar multiples and grade-preserving
/// variable renaming; deterministic order.
std::vector<DeltaPoly> derive_variety(const std::vector<DeltaPoly>& fs,
                                      const GradedAlgebra& Lam);

/// Canonical form used for deduplication: monomial expansion with
/// integer-content-normalized coefficients, minimized over grade-preserving
/// renamings of the variables.
std::string canonical_key(const DeltaPoly& p);

/// Graded instances of anticommutativity and the Jacobi identity over a
/// grade set (Jacobi tuples up to cyclic rotation).
std::vector<DeltaPoly> lie_axioms(const std::vector<int>& grade_set);

/// One identity per line; '#' starts a comment, blank lines are skipped.
std::vector<DeltaPoly> load_identity_lines(std::istream& in,
                                           const std::vector<int>& grade_set);

}  // namespace trialg
