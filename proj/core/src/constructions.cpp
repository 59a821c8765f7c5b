#include "trialg/constructions.hpp"

#include <stdexcept>

#include "trialg/checks.hpp"
#include "trialg/structure.hpp"

namespace trialg {

namespace {

// b_i * b_j = v and b_j * b_i = -v
void set_skew(AlgebraBuilder& b, std::size_t i, std::size_t j, const Vec& v) {
  b.set_product(i, j, v);
  b.set_product(j, i, Scalar(-1) * v);
}

}  // namespace

Algebra make_sl2() {
  AlgebraBuilder b({"e", "h", "f"});
  std::size_t e = 0, h = 1, f = 2;
  set_skew(b, e, h, Scalar(2) * unit_vec(3, e));
  set_skew(b, e, f, unit_vec(3, h));
  set_skew(b, f, h, Scalar(-2) * unit_vec(3, f));
  return b.build();
}

Algebra make_b2() {
  AlgebraBuilder b({"x", "y"});
  set_skew(b, 0, 1, unit_vec(2, 1));
  return b.build();
}

LambdaAlgebra make_lambda() {
  AlgebraBuilder b({"a", "v", "w"});
  std::size_t a = 0, v = 1, w = 2;
  auto A = unit_vec(3, a), V = unit_vec(3, v), W = unit_vec(3, w);
  b.set_product(a, a, A);
  b.set_product(a, v, V);
  b.set_product(v, a, V);
  b.set_product(a, w, W);
  b.set_product(w, a, W);
  Scalar third(1, 3);
  b.set_product(v, v, third * (V + Scalar(2) * A));
  b.set_product(w, w, third * (W + Scalar(2) * A));
  Vec vw = Scalar(-1, 3) * (V + W + A);
  b.set_product(v, w, vw);
  b.set_product(w, v, vw);
  GradedAlgebra graded = make_graded(b.build(), {0, 2, 2});

  Matrix sigma(3, 3), rho(3, 3);
  sigma.at(a, a) = Scalar(1);
  sigma.at(v, w) = Scalar(1);
  sigma.at(w, v) = Scalar(1);
  rho.at(a, a) = Scalar(1);
  rho.at(v, w) = Scalar(1);
  rho.at(w, v) = Scalar(-1);
  rho.at(w, w) = Scalar(-1);
  S3Action act{sigma, rho};

  if (!verify_action(graded.alg, act).ok())
    throw std::logic_error("make_lambda: action gate failed");
  if (!is_triality(graded.alg, act).holds)
    throw std::logic_error("make_lambda: triality gate failed");
  return {graded, act};
}

namespace {

// sl2 with a 2-dimensional odd part; shared by make_gamma and make_osp.
// odd_action rows: products (odd_i * even_j) as coordinates in the odd part.
GradedAlgebra sl2_plus_module(const std::string& o1, const std::string& o2,
                              const Matrix& odd_by_e, const Matrix& odd_by_h,
                              const Matrix& odd_by_f,
                              const Vec& o1o1, const Vec& o1o2, const Vec& o2o2) {
  AlgebraBuilder b({"e", "h", "f", o1, o2});
  std::size_t e = 0, h = 1, f = 2, x = 3, y = 4;
  auto lift_even = [&](std::size_t k, const Scalar& c) {
    Vec v = zero_vec(5);
    v[k] = c;
    return v;
  };
  set_skew(b, e, h, lift_even(e, Scalar(2)));
  set_skew(b, e, f, lift_even(h, Scalar(1)));
  set_skew(b, f, h, lift_even(f, Scalar(-2)));

  auto lift_odd = [&](const Vec& c2) {
    Vec v = zero_vec(5);
    v[x] = c2[0];
    v[y] = c2[1];
    return v;
  };
  const Matrix* acts[3] = {&odd_by_e, &odd_by_h, &odd_by_f};
  std::size_t evens[3] = {e, h, f};
  for (int s = 0; s < 3; ++s)
    for (std::size_t o = 0; o < 2; ++o) {
      Vec img = lift_odd(acts[s]->row(o));
      set_skew(b, x + o, evens[s], img);  // vs = -sv
    }
  auto lift_even_vec = [&](const Vec& c3) {
    Vec v = zero_vec(5);
    for (std::size_t k = 0; k < 3; ++k) v[k] = c3[k];
    return v;
  };
  b.set_product(x, x, lift_even_vec(o1o1));
  b.set_product(y, y, lift_even_vec(o2o2));
  b.set_product(x, y, lift_even_vec(o1o2));
  b.set_product(y, x, lift_even_vec(o1o2));  // odd products are symmetric
  return make_graded(b.build(), {0, 0, 0, 1, 1});
}

Matrix mat2(long a, long b, long c, long d) {
  Matrix m(2, 2);
  m.at(0, 0) = Scalar(a);
  m.at(0, 1) = Scalar(b);
  m.at(1, 0) = Scalar(c);
  m.at(1, 1) = Scalar(d);
  return m;
}

Vec vec3(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }

}  // namespace

GradedAlgebra make_gamma() {
  // w2 e = -2w-2, w-2 e = 0; w2 h = 2w2, w-2 h = -2w-2; w2 f = 0, w-2 f = 2w2.
  // w2^2 = -2f, w2 w-2 = h, w-2^2 = -2e: the unique normalization compatible
  // with the action coefficients, pinned by the Malcev gate on the
  // 7-dimensional contraction.
  return sl2_plus_module("w2", "w-2",
                         mat2(0, -2, 0, 0),   // * e
                         mat2(2, 0, 0, -2),   // * h
                         mat2(0, 0, 2, 0),    // * f
                         vec3(0, 0, -2),      // w2^2 = -2f
                         vec3(0, 1, 0),       // w2 w-2 = h
                         vec3(-2, 0, 0));     // w-2^2 = -2e
}

GradedAlgebra make_osp() {
  // v1 e = 0, v-1 e = -v1; v1 h = v1, v-1 h = -v-1; v1 f = v-1, v-1 f = 0.
  // v1^2 = e, v1 v-1 = h, v-1^2 = f.
  return sl2_plus_module("v1", "v-1",
                         mat2(0, 0, -1, 0),   // * e
                         mat2(1, 0, 0, -1),   // * h
                         mat2(0, 1, 0, 0),    // * f
                         vec3(1, 0, 0),       // v1^2 = e
                         vec3(0, 1, 0),       // v1 v-1 = h
                         vec3(0, 0, 1));      // v-1^2 = f
}

GradedAlgebra make_t7seed() {
  AlgebraBuilder b({"t", "x", "y"});
  std::size_t e = 0, x = 1, y = 2;
  b.set_product(e, e, unit_vec(3, e));
  b.set_product(e, x, unit_vec(3, x));
  b.set_product(x, e, unit_vec(3, x));
  b.set_product(e, y, unit_vec(3, y));
  b.set_product(y, e, unit_vec(3, y));
  set_skew(b, x, y, unit_vec(3, e));
  return make_graded(b.build(), {0, 1, 1});
}

AlgebraWithAction make_TL(const Algebra& L) {
  if (!check_jacobi(L).ok() || !check_anticommutative(L).ok())
    throw std::invalid_argument("make_TL: L must be a Lie algebra");
  std::size_t n = L.dim();
  std::vector<std::string> labels;
  for (int copy = 1; copy <= 3; ++copy)
    for (std::size_t i = 0; i < n; ++i)
      labels.push_back(L.label(i) + "_" + std::to_string(copy));
  AlgebraBuilder b(labels);
  for (int copy = 0; copy < 3; ++copy)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, ck] : L.basis_product(i, j))
          b.set(copy * n + i, copy * n + j, copy * n + k, ck);

  // sigma: 1 <-> 2, 3 fixed; rho: 1 -> 2 -> 3 -> 1
  Matrix sigma(3 * n, 3 * n), rho(3 * n, 3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    sigma.at(i, n + i) = Scalar(1);
    sigma.at(n + i, i) = Scalar(1);
    sigma.at(2 * n + i, 2 * n + i) = Scalar(1);
    rho.at(i, n + i) = Scalar(1);
    rho.at(n + i, 2 * n + i) = Scalar(1);
    rho.at(2 * n + i, i) = Scalar(1);
  }
  AlgebraWithAction result{b.build(), S3Action{sigma, rho}};
  if (!verify_action(result.alg, result.act).ok())
    throw std::logic_error("make_TL: action gate failed");
  if (!is_triality(result.alg, result.act).holds)
    throw std::logic_error("make_TL: triality gate failed");
  return result;
}

Report check_compatible(const Algebra& L, const CompatiblePair& p) {
  Report rep;
  rep.subject = "compatible pair";
  CheckItem& sub = rep.add("A is a subalgebra");
  if (!p.A.contains(product_span(L, p.A, p.A)))
    rep.fail(sub, "A*A escapes A");
  CheckItem& bb = rep.add("B*B inside A");
  if (!p.A.contains(product_span(L, p.B, p.B)))
    rep.fail(bb, "B*B escapes A");
  CheckItem& ab = rep.add("A*B inside B");
  if (!p.B.contains(product_span(L, p.A, p.B)) ||
      !p.B.contains(product_span(L, p.B, p.A)))
    rep.fail(ab, "A*B escapes B");
  return rep;
}

InvariantSubalgebra make_TAB(const Algebra& L, const CompatiblePair& p) {
  if (!check_compatible(L, p).ok())
    throw std::invalid_argument("make_TAB: pair is not compatible");
  AlgebraWithAction tl = make_TL(L);
  std::size_t n = L.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < p.A.dim(); ++i) {
    Vec u = p.A.basis_row(i);
    Vec r = zero_vec(3 * n);
    for (std::size_t c = 0; c < n; ++c) r[c] = r[n + c] = r[2 * n + c] = u[c];
    rows.push_back(r);
  }
  for (std::size_t i = 0; i < p.B.dim(); ++i) {
    Vec u = p.B.basis_row(i);
    Vec r1 = zero_vec(3 * n), r2 = zero_vec(3 * n);
    for (std::size_t c = 0; c < n; ++c) {
      r1[c] = u[c];
      r1[n + c] = -u[c];
      r2[n + c] = u[c];
      r2[2 * n + c] = -u[c];
    }
    rows.push_back(r1);
    rows.push_back(r2);
  }
  Subspace P = Subspace::span(3 * n, rows);
  if (subalgebra_closure(tl.alg, P) != P)
    throw std::logic_error("make_TAB: span is not closed under the product");

  SubAlgebra sub = restrict_to_subalgebra(tl.alg, P);
  auto restrict_map = [&](const Matrix& g) {
    Matrix m(P.dim(), P.dim());
    for (std::size_t i = 0; i < P.dim(); ++i) {
      auto coords = P.coords(P.basis_row(i) * g);
      if (!coords) throw std::logic_error("make_TAB: subspace not S3-stable");
      m.set_row(i, *coords);
    }
    return m;
  };
  S3Action act{restrict_map(tl.act.sigma), restrict_map(tl.act.rho)};
  if (!verify_action(sub.alg, act).ok())
    throw std::logic_error("make_TAB: action gate failed");
  if (!is_triality(sub.alg, act).holds)
    throw std::logic_error("make_TAB: triality gate failed");
  return {sub.alg, act, sub.embedding};
}

// ---------------------------------------------------------------------------
// D4
// ---------------------------------------------------------------------------

namespace {

struct D4Basis {
  // order: e1..e4, h1..h4, f1..f4, then subsets by 4-bit mask (bit i <=> i+1)
  static constexpr std::size_t kDim = 28;
  std::size_t e(int i) const { return i - 1; }
  std::size_t h(int i) const { return 4 + i - 1; }
  std::size_t f(int i) const { return 8 + i - 1; }
  std::size_t mu(unsigned mask) const { return 12 + mask; }

  std::vector<std::string> labels() const {
    std::vector<std::string> ls;
    for (int i = 1; i <= 4; ++i) ls.push_back("e" + std::to_string(i));
    for (int i = 1; i <= 4; ++i) ls.push_back("h" + std::to_string(i));
    for (int i = 1; i <= 4; ++i) ls.push_back("f" + std::to_string(i));
    for (unsigned m = 0; m < 16; ++m) {
      std::string l = "m";
      for (int i = 1; i <= 4; ++i)
        if (m & (1u << (i - 1))) l += std::to_string(i);
      ls.push_back(l);
    }
    return ls;
  }
};

int popcount4(unsigned m) { return __builtin_popcount(m & 0xfu); }

// signs: [0] subset*subset -> e case, [1] -> f case, [2] -> h case,
// [3] subset*h rule
Algebra build_d4_table(const std::array<int, 4>& signs) {
  D4Basis B;
  AlgebraBuilder b(B.labels());
  std::size_t n = D4Basis::kDim;
  auto unit = [&](std::size_t k) { return unit_vec(n, k); };

  for (int i = 1; i <= 4; ++i) {
    set_skew(b, B.e(i), B.f(i), unit(B.h(i)));
    set_skew(b, B.e(i), B.h(i), Scalar(2) * unit(B.e(i)));
    set_skew(b, B.h(i), B.f(i), Scalar(2) * unit(B.f(i)));
  }
  for (unsigned phi = 0; phi < 16; ++phi) {
    for (int i = 1; i <= 4; ++i) {
      unsigned bit = 1u << (i - 1);
      if (!(phi & bit))  // e_i adjoins a missing index
        set_skew(b, B.e(i), B.mu(phi), unit(B.mu(phi | bit)));
      if (phi & bit)  // f_i removes a present index
        set_skew(b, B.mu(phi), B.f(i), unit(B.mu(phi & ~bit)));
      Scalar s(signs[3] * ((phi & bit) ? 1 : -1));
      set_skew(b, B.mu(phi), B.h(i), s * unit(B.mu(phi)));
    }
  }
  for (unsigned phi = 0; phi < 16; ++phi)
    for (unsigned psi = 0; psi < 16; ++psi) {
      unsigned inter = phi & psi, uni = phi | psi;
      int sign_psi = (popcount4(psi) % 2 == 0) ? 1 : -1;
      if (popcount4(inter) == 1 && uni == 0xfu) {
        int i = __builtin_ctz(inter) + 1;
        b.set_product(B.mu(phi), B.mu(psi),
                      Scalar(-signs[0] * sign_psi) * unit(B.e(i)));
      } else if (inter == 0u && popcount4(uni) == 3) {
        int i = __builtin_ctz(~uni & 0xfu) + 1;
        b.set_product(B.mu(phi), B.mu(psi),
                      Scalar(signs[1] * sign_psi) * unit(B.f(i)));
      } else if (inter == 0u && uni == 0xfu) {
        Vec v = zero_vec(n);
        for (int i = 1; i <= 4; ++i) {
          unsigned bit = 1u << (i - 1);
          if (psi & bit) v[B.h(i)] += Scalar(signs[2] * sign_psi, 2);
          if (phi & bit) v[B.h(i)] -= Scalar(signs[2] * sign_psi, 2);
        }
        b.set_product(B.mu(phi), B.mu(psi), v);
      }
    }
  return b.build();
}

// first Jacobi violation, if any; early exit keeps the repair search cheap
bool jacobi_holds(const Algebra& A) {
  std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Vec v = zero_vec(n);
        auto acc = [&](std::size_t a2, std::size_t b2, std::size_t c2) {
          for (const auto& [l, cl] : A.basis_product(a2, b2))
            for (const auto& [m, cm] : A.basis_product(l, c2)) v[m] += cl * cm;
        };
        acc(i, j, k);
        acc(j, k, i);
        acc(k, i, j);
        if (!is_zero(v)) return false;
      }
  return true;
}

S3Action d4_action() {
  D4Basis B;
  std::size_t n = D4Basis::kDim;
  auto perm_matrix = [&](const std::array<int, 5>& p) {
    // p[i] = image of index i (1..4)
    Matrix m(n, n);
    for (int i = 1; i <= 4; ++i) {
      m.at(B.e(i), B.e(p[i])) = Scalar(1);
      m.at(B.h(i), B.h(p[i])) = Scalar(1);
      m.at(B.f(i), B.f(p[i])) = Scalar(1);
    }
    for (unsigned mask = 0; mask < 16; ++mask) {
      unsigned img = 0;
      for (int i = 1; i <= 4; ++i)
        if (mask & (1u << (i - 1))) img |= 1u << (p[i] - 1);
      m.at(B.mu(mask), B.mu(img)) = Scalar(1);
    }
    return m;
  };
  return S3Action{perm_matrix({0, 2, 1, 3, 4}),   // sigma = (1 2)
                  perm_matrix({0, 2, 3, 1, 4})};  // rho = (1 2 3)
}

std::string combo_name(const std::array<int, 4>& s) {
  std::string out;
  const char* names[4] = {"subset*subset->e", "subset*subset->f",
                          "subset*subset->h", "subset*h"};
  for (int i = 0; i < 4; ++i)
    if (s[i] < 0) out += std::string(out.empty() ? "" : ", ") + names[i];
  return out.empty() ? "none" : out;
}

}  // namespace

D4Result make_d4() {
  Report rep;
  rep.subject = "d4 construction";

  std::array<int, 4> printed{1, 1, 1, 1};
  Algebra first = build_d4_table(printed);
  Algebra chosen = first;
  std::array<int, 4> chosen_signs = printed;

  if (jacobi_holds(first)) {
    rep.set_quantity("printed_table_jacobi", "pass");
  } else {
    rep.set_quantity("printed_table_jacobi", "fail");
    // bounded sign-repair search over the 16 global sign combinations
    std::vector<std::array<int, 4>> passing;
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::array<int, 4> s;
      for (int i = 0; i < 4; ++i) s[i] = (mask & (1u << i)) ? -1 : 1;
      if (jacobi_holds(build_d4_table(s))) passing.push_back(s);
    }
    CheckItem& repair = rep.add("sign repair yields a Jacobi-satisfying table");
    if (passing.empty()) {
      rep.fail(repair, "no sign combination satisfies Jacobi");
      throw std::logic_error("make_d4: no sign combination satisfies Jacobi");
    }
    // prefer combinations keeping the Cartan case and the h rule as printed,
    // then the fewest flips, then enumeration order
    std::stable_sort(passing.begin(), passing.end(),
                     [](const std::array<int, 4>& a, const std::array<int, 4>& b) {
                       auto key = [](const std::array<int, 4>& s) {
                         int flips = 0;
                         for (int v : s) flips += (v < 0);
                         return std::make_tuple(s[2] < 0, s[3] < 0, flips);
                       };
                       return key(a) < key(b);
                     });
    chosen_signs = passing.front();
    chosen = build_d4_table(chosen_signs);
    std::string all;
    for (const auto& s : passing)
      all += (all.empty() ? "" : "; ") + combo_name(s);
    rep.set_quantity("passing_sign_combinations", all);
    rep.set_quantity("chosen_flips", combo_name(chosen_signs));
    if (passing.size() != 1)
      repair.witnesses.push_back(
          "multiple passing combinations (related by a global sign symmetry "
          "of the subset sector); chose: " + combo_name(chosen_signs));
  }

  S3Action act = d4_action();
  CheckItem& gates = rep.add("construction gates");
  if (!check_anticommutative(chosen).ok()) rep.fail(gates, "anticommutativity");
  if (!jacobi_holds(chosen)) rep.fail(gates, "jacobi");
  if (!verify_action(chosen, act).ok()) rep.fail(gates, "s3 action");
  if (!is_triality(chosen, act).holds) rep.fail(gates, "triality");
  if (!gates.pass) throw std::logic_error("make_d4: construction gates failed");
  return {chosen, act, rep};
}

}  // namespace trialg
