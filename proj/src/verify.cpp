#include "kappa/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "kappa/dual_quaternion.hpp"
#include "kappa/element_json.hpp"
#include "kappa/sampling.hpp"

namespace kappa {

namespace {

using Clock = std::chrono::steady_clock;

Orientation trial_orientation(std::uint64_t trial) {
  return (trial & 1) ? Orientation::Negative : Orientation::Positive;
}

class SuiteRun {
 public:
  SuiteRun(std::string name, FieldMode mode) : start_(Clock::now()) {
    report_.suite = std::move(name);
    report_.field = mode;
    if (mode == FieldMode::Float) report_.max_residual = 0.0;
  }

  void count(std::uint64_t n = 1) { report_.trials += n; }

  void residual(double r) {
    if (report_.max_residual) report_.max_residual = std::max(*report_.max_residual, r);
  }

  void fail(std::uint64_t trial, std::uint64_t seed, std::string message,
            nlohmann::ordered_json inputs = nlohmann::ordered_json::object()) {
    ++report_.failures;
    if (report_.counterexamples.size() < kMaxStoredCounterexamples) {
      report_.counterexamples.push_back({trial, seed, std::move(message), std::move(inputs)});
    }
  }

  void detail(std::string key, std::string value) {
    report_.details.emplace_back(std::move(key), std::move(value));
  }

  SuiteReport finish() {
    report_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  Clock::time_point start_;
};

// ---------------------------------------------------------------------------
// Field-generic helpers

template <Field T>
KElement<T> random_element(Rng& rng, Orientation lambda) {
  if constexpr (FieldTraits<T>::exact) {
    return random_rational_element(rng, lambda);
  } else {
    return random_float_element(rng, lambda);
  }
}

/// Exactly constructed in rational mode; sampled with ρ in [0.5, 2] in float mode.
template <Field T>
KElement<T> random_constrained(Rng& rng, Orientation lambda) {
  if constexpr (FieldTraits<T>::exact) {
    return random_constrained_rational(rng, lambda);
  } else {
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    const double rho = radius(rng);
    return sample_s7(rng(), rho, lambda);
  }
}

template <Field T>
double diff(const T& a, const T& b) {
  return magnitude(T(a - b));
}

template <Field T>
double diff(const KElement<T>& a, const KElement<T>& b) {
  double worst = 0.0;
  for (int k = 0; k < kBasisSize; ++k) worst = std::max(worst, diff(a[k], b[k]));
  return worst;
}

template <Field T>
double diff(const SplitScalar<T>& a, const SplitScalar<T>& b) {
  return std::max(diff(a.s, b.s), diff(a.p, b.p));
}

/// Exact equality for rationals; |a - b| <= tol for floats. Records the residual.
template <Field T, class V>
bool agree(SuiteRun& run, const V& a, const V& b, double tol) {
  if constexpr (FieldTraits<T>::exact) {
    return a == b;
  } else {
    const double r = diff(a, b);
    run.residual(r);
    return r <= tol;
  }
}

template <Field T>
bool vanishes(SuiteRun& run, const T& v, double tol) {
  if constexpr (FieldTraits<T>::exact) {
    return is_zero(v);
  } else {
    run.residual(magnitude(v));
    return magnitude(v) <= tol;
  }
}

template <Field T>
nlohmann::ordered_json inputs_of(std::initializer_list<std::pair<const char*, const KElement<T>*>> xs) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [name, x] : xs) j[name] = element_to_json(*x);
  return j;
}

template <Field T>
std::string fmt(const T& v) {
  return FieldTraits<T>::format(v);
}

template <Field T>
std::string fmt(const SplitScalar<T>& v) {
  return "(" + fmt(v.s) + ", " + fmt(v.p) + ")";
}

/// Loops trials with per-trial RNG and orientation.
template <class Fn>
void for_each_trial(SuiteRun& run, std::uint64_t trials, std::uint64_t seed, Fn&& fn) {
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    Rng rng(s);
    run.count();
    fn(rng, trial_orientation(t), t, s);
  }
}

// ---------------------------------------------------------------------------
// Random suites, generic over the coefficient field

template <Field T>
SuiteReport product_oracle(std::uint64_t trials, std::uint64_t seed, double tol) {
  SuiteRun run("product-oracle", FieldTraits<T>::mode);
  for_each_trial(run, trials, seed, [&](Rng& rng, Orientation l, std::uint64_t t, std::uint64_t s) {
    const KElement<T> x = random_element<T>(rng, l);
    const KElement<T> y = random_element<T>(rng, l);
    const KElement<T> table = kproduct(x, y);
    const KElement<T> clifford = from_cl40(geometric_product(embed_to_cl40(x), embed_to_cl40(y)), l);
    const KElement<T> dual =
        from_dual_quaternion(dq_product(to_dual_quaternion(x), to_dual_quaternion(y)));
    if (!agree<T>(run, table, clifford, tol)) {
      run.fail(t, s, "table product differs from Cl(4,0) product", inputs_of<T>({{"X", &x}, {"Y", &y}}));
    } else if (!agree<T>(run, table, dual, tol)) {
      run.fail(t, s, "table product differs from dual-quaternion product",
               inputs_of<T>({{"X", &x}, {"Y", &y}}));
    }
  });
  return run.finish();
}

template <Field T>
SuiteReport associativity(std::uint64_t trials, std::uint64_t seed, double tol) {
  SuiteRun run("associativity", FieldTraits<T>::mode);
  for_each_trial(run, trials, seed, [&](Rng& rng, Orientation l, std::uint64_t t, std::uint64_t s) {
    const KElement<T> x = random_element<T>(rng, l);
    const KElement<T> y = random_element<T>(rng, l);
    const KElement<T> z = random_element<T>(rng, l);
    if (!agree<T>(run, kproduct(kproduct(x, y), z), kproduct(x, kproduct(y, z)), tol)) {
      run.fail(t, s, "(XY)Z != X(YZ)", inputs_of<T>({{"X", &x}, {"Y", &y}, {"Z", &z}}));
    }
  });
  return run.finish();
}

template <Field T>
SuiteReport qform_identity(std::uint64_t trials, std::uint64_t seed, double tol) {
  SuiteRun run("qform-identity", FieldTraits<T>::mode);
  for_each_trial(run, trials, seed, [&](Rng& rng, Orientation l, std::uint64_t t, std::uint64_t s) {
    const KElement<T> x = random_element<T>(rng, l);
    const SplitScalar<T> q = qform(x);
    // -2 X0 X7 + 2λ(X1 X6 + X2 X5 + X3 X4), written out independently of constraint_f.
    T paired = x[1] * x[6] + x[2] * x[5] + x[3] * x[4];
    if (l == Orientation::Negative) paired = -paired;
    const T expected_p = T(2) * (paired - x[0] * x[7]);
    const T expected_s = norm_a_squared(x);
    if (!agree<T>(run, q.p, expected_p, tol)) {
      run.fail(t, s, "ε part of X X† is " + fmt(q.p) + ", expected " + fmt(expected_p),
               inputs_of<T>({{"X", &x}}));
    } else if (!agree<T>(run, q.s, expected_s, tol)) {
      run.fail(t, s, "scalar part of X X† is " + fmt(q.s) + ", expected " + fmt(expected_s),
               inputs_of<T>({{"X", &x}}));
    }
  });
  return run.finish();
}

template <Field T>
SuiteReport dual_quaternion(std::uint64_t trials, std::uint64_t seed, double tol) {
  SuiteRun run("dual-quaternion", FieldTraits<T>::mode);
  for_each_trial(run, trials, seed, [&](Rng& rng, Orientation l, std::uint64_t t, std::uint64_t s) {
    const KElement<T> x = random_element<T>(rng, l);
    const DualQuatView<T> v = to_dual_quaternion(x);
    if (from_dual_quaternion(v) != x) {
      run.fail(t, s, "dual-quaternion round trip is not the identity", inputs_of<T>({{"X", &x}}));
      return;
    }
    if (!agree<T>(run, compose_in_cl40(v.real, v.dual, l), x, tol)) {
      run.fail(t, s, "q_r + q_d ε in Cl(4,0) does not reproduce X", inputs_of<T>({{"X", &x}}));
      return;
    }
    // Scalar part of q_r q_d† + q_d q_r† is twice the coefficient dot product.
    const Quaternion<T> cross = qmul(v.real, qconj(v.dual)) + qmul(v.dual, qconj(v.real));
    const T expected = T(2) * constraint_f(x);
    if (!agree<T>(run, cross[0], expected, tol) || !vanishes<T>(run, cross[1], tol) ||
        !vanishes<T>(run, cross[2], tol) || !vanishes<T>(run, cross[3], tol)) {
      run.fail(t, s, "q_r q_d† + q_d q_r† is not the scalar 2 f_K", inputs_of<T>({{"X", &x}}));
    }
  });
  return run.finish();
}

template <Field T>
SuiteReport norm_equivalence(std::uint64_t trials, std::uint64_t seed, double tol) {
  SuiteRun run("norm-equivalence", FieldTraits<T>::mode);
  for_each_trial(run, trials, seed, [&](Rng& rng, Orientation l, std::uint64_t t, std::uint64_t s) {
    const KElement<T> c = random_constrained<T>(rng, l);
    const NormResult<T> nb = norm_b_squared(c, tol);
    if (const T* v = std::get_if<T>(&nb)) {
      if (!agree<T>(run, *v, norm_a_squared(c), tol)) {
        run.fail(t, s, "norm (b)^2 = " + fmt(*v) + " but norm (a)^2 = " + fmt(norm_a_squared(c)),
                 inputs_of<T>({{"X", &c}}));
      }
    } else {
      run.fail(t, s, "norm (b) undefined on a constrained element", inputs_of<T>({{"X", &c}}));
    }

    const KElement<T> u = random_element<T>(rng, l);
    const T f = constraint_f(u);
    const bool expect_error = FieldTraits<T>::exact ? !is_zero(f) : 2.0 * magnitude(f) > tol;
    const NormResult<T> nu = norm_b_squared(u, tol);
    const auto* residual = std::get_if<SplitResidual<T>>(&nu);
    if (expect_error != (residual != nullptr)) {
      run.fail(t, s,
               std::string("norm (b) ") + (residual ? "errored" : "succeeded") + " with f_K = " + fmt(f),
               inputs_of<T>({{"X", &u}}));
    } else if (residual && !agree<T>(run, residual->form.p, T(T(2) * f), tol)) {
      run.fail(t, s, "split residual ε part " + fmt(residual->form.p) + " != 2 f_K",
               inputs_of<T>({{"X", &u}}));
    }
  });
  return run.finish();
}

template <Field T>
SuiteReport composition(std::uint64_t trials, std::uint64_t seed, double tol) {
  SuiteRun run("composition", FieldTraits<T>::mode);
  for_each_trial(run, trials, seed, [&](Rng& rng, Orientation l, std::uint64_t t, std::uint64_t s) {
    const KElement<T> x = random_element<T>(rng, l);
    const KElement<T> y = random_element<T>(rng, l);
    const SplitScalar<T> lhs = qform(kproduct(x, y));
    const SplitScalar<T> rhs = split_mul(qform(x), qform(y));
    if (!agree<T>(run, lhs, rhs, tol)) {
      run.fail(t, s, "Q(XY) = " + fmt(lhs) + " but Q(X)Q(Y) = " + fmt(rhs),
               inputs_of<T>({{"X", &x}, {"Y", &y}}));
    }
  });
  return run.finish();
}

template <Field T>
SuiteReport norm_relation(std::uint64_t trials, std::uint64_t seed, double tol) {
  SuiteRun run("norm-relation", FieldTraits<T>::mode);
  for_each_trial(run, trials, seed, [&](Rng& rng, Orientation l, std::uint64_t t, std::uint64_t s) {
    const KElement<T> x = random_constrained<T>(rng, l);
    const KElement<T> y = random_constrained<T>(rng, l);
    const KElement<T> xy = kproduct(x, y);
    const auto inputs = inputs_of<T>({{"X", &x}, {"Y", &y}});
    if (!x.is_zero() && !y.is_zero() && xy.is_zero()) {
      run.fail(t, s, "zero divisor on the constraint surface", inputs);
      return;
    }
    if constexpr (FieldTraits<T>::exact) {
      const NormResult<T> nx = norm_b_squared(x);
      const NormResult<T> ny = norm_b_squared(y);
      const NormResult<T> nxy = norm_b_squared(xy);
      if (!std::holds_alternative<T>(nx) || !std::holds_alternative<T>(ny) ||
          !std::holds_alternative<T>(nxy)) {
        run.fail(t, s, "norm (b) undefined for a constrained factor or product", inputs);
        return;
      }
      if (std::get<T>(nxy) != std::get<T>(nx) * std::get<T>(ny)) {
        run.fail(t, s, "||XY||^2 != ||X||^2 ||Y||^2", inputs);
      }
    } else {
      const NormResult<T> nx = norm_b(x, tol);
      const NormResult<T> ny = norm_b(y, tol);
      const NormResult<T> nxy = norm_b(xy, tol);
      if (!std::holds_alternative<T>(nx) || !std::holds_alternative<T>(ny) ||
          !std::holds_alternative<T>(nxy)) {
        run.fail(t, s, "norm (b) undefined for a constrained factor or product", inputs);
        return;
      }
      if (!agree<T>(run, std::get<T>(nxy), T(std::get<T>(nx) * std::get<T>(ny)), tol)) {
        run.fail(t, s, "||XY|| != ||X|| ||Y||", inputs);
      }
    }
  });
  return run.finish();
}

template <Field T>
SuiteReport orthogonality_closure(std::uint64_t trials, std::uint64_t seed, double tol) {
  SuiteRun run("orthogonality-closure", FieldTraits<T>::mode);
  // Every basis element has a single nonzero coefficient, so f_K = 0 on all of them.
  int basis_ok = 0;
  for (Orientation l : {Orientation::Positive, Orientation::Negative}) {
    for (int i = 0; i < kBasisSize; ++i) {
      for (int j = 0; j < kBasisSize; ++j) {
        const KElement<T> x = KElement<T>::basis(i, l);
        const KElement<T> y = KElement<T>::basis(j, l);
        if (vanishes<T>(run, constraint_f(kproduct(x, y)), tol)) {
          ++basis_ok;
        } else {
          run.fail(0, 0, "basis product has f_K != 0", inputs_of<T>({{"X", &x}, {"Y", &y}}));
        }
      }
    }
  }
  run.detail("basis pairs with f_K(XY) = 0", std::to_string(basis_ok) + "/128");

  for_each_trial(run, trials, seed, [&](Rng& rng, Orientation l, std::uint64_t t, std::uint64_t s) {
    const KElement<T> x = random_constrained<T>(rng, l);
    const KElement<T> y = random_constrained<T>(rng, l);
    const T f = constraint_f(kproduct(x, y));
    if (!vanishes<T>(run, f, tol)) {
      run.fail(t, s, "f_K(XY) = " + fmt(f), inputs_of<T>({{"X", &x}, {"Y", &y}}));
    }
  });
  return run.finish();
}

// ---------------------------------------------------------------------------
// Zero divisors

/// X = √2 Z+ and Y = √2 Z- have irrational coefficients. In rational mode
/// they are carried as (Z±, scale² = 2): products scale by √2·√2 = 2 and
/// quadratic quantities by 2, so every reported value stays exact.
SuiteReport zero_divisor_exact() {
  SuiteRun run("zero-divisor", FieldMode::Rational);
  using R = Rational;
  const R half(1, 2);
  const R two(2);

  const auto check = [&](bool ok, const std::string& what) {
    run.count();
    if (!ok) run.fail(0, 0, what);
  };

  for (Orientation l : {Orientation::Positive, Orientation::Negative}) {
    const std::string tag = l == Orientation::Positive ? " [λ=+1]" : " [λ=-1]";
    const KElement<R> one = KElement<R>::identity(l);
    const KElement<R> eps = epsilon<R>(l);
    const KElement<R> zp = (one + eps) * half;
    const KElement<R> zm = (one - eps) * half;

    check(kproduct(zp, zp) == zp, "Z+^2 != Z+");
    check(kproduct(zm, zm) == zm, "Z-^2 != Z-");
    check(kproduct(zp, reverse_k(zp)) == zp, "Z+ Z+† != Z+");
    check(kproduct(zm, reverse_k(zm)) == zm, "Z- Z-† != Z-");
    check(kproduct(zp, zm).is_zero(), "Z+ Z- != 0");
    check(kproduct(zm, zp).is_zero(), "Z- Z+ != 0");

    // X = √2 Z+, Y = √2 Z-.
    const KElement<R> xy = kproduct(zp, zm) * two;
    check(xy.is_zero(), "XY != 0");
    const R norm_xy_sq = norm_a_squared(xy);
    check(is_zero(norm_xy_sq), "||XY|| != 0");
    const R norm_x = field_sqrt(R(two * norm_a_squared(zp)));
    const R norm_y = field_sqrt(R(two * norm_a_squared(zm)));
    check(norm_x == 1, "norm (a) of X != 1");
    check(norm_y == 1, "norm (a) of Y != 1");

    const SplitScalar<R> qzp = qform(zp);
    const SplitScalar<R> qzm = qform(zm);
    const SplitScalar<R> qx{R(two * qzp.s), R(two * qzp.p)};
    const SplitScalar<R> qy{R(two * qzm.s), R(two * qzm.p)};
    // norm (b) of √2 Z is defined iff norm (b) of Z is.
    const bool nb_x_errors = std::holds_alternative<SplitResidual<R>>(norm_b_squared(zp));
    const bool nb_y_errors = std::holds_alternative<SplitResidual<R>>(norm_b_squared(zm));
    check(nb_x_errors, "norm (b) of X did not error");
    check(nb_y_errors, "norm (b) of Y did not error");

    const R fx = two * constraint_f(zp);
    const R fy = two * constraint_f(zm);
    check(fx == half, "f_K(X) != +1/2");
    check(fy == -half, "f_K(Y) != -1/2");

    run.detail("Z+" + tag, dump_element(zp));
    run.detail("Z-" + tag, dump_element(zm));
    run.detail("X, Y" + tag, "√2 Z+, √2 Z-");
    run.detail("Z+^2 = Z+, Z-^2 = Z-" + tag, kproduct(zp, zp) == zp && kproduct(zm, zm) == zm ? "yes" : "no");
    run.detail("Z+ Z- = Z- Z+ = 0" + tag, kproduct(zp, zm).is_zero() && kproduct(zm, zp).is_zero() ? "yes" : "no");
    run.detail("XY" + tag, dump_element(xy));
    run.detail("||XY||" + tag, fmt(field_sqrt(norm_xy_sq)));
    run.detail("norm_a(X), norm_a(Y)" + tag, fmt(norm_x) + ", " + fmt(norm_y));
    run.detail("X X†, Y Y†" + tag, fmt(qx) + ", " + fmt(qy));
    run.detail("norm_b(X), norm_b(Y)" + tag,
               std::string(nb_x_errors ? "split residual " + fmt(qx) : "defined") + ", " +
                   (nb_y_errors ? "split residual " + fmt(qy) : "defined"));
    run.detail("f_K(X), f_K(Y)" + tag, fmt(fx) + ", " + fmt(fy));
  }
  return run.finish();
}

SuiteReport zero_divisor_float(double tol) {
  SuiteRun run("zero-divisor", FieldMode::Float);
  const double r = std::sqrt(0.5);
  const auto check = [&](double residual, const std::string& what) {
    run.count();
    run.residual(residual);
    if (residual > tol) run.fail(0, 0, what);
  };
  for (Orientation l : {Orientation::Positive, Orientation::Negative}) {
    const std::string tag = l == Orientation::Positive ? " [λ=+1]" : " [λ=-1]";
    const KElement<double> one = KElement<double>::identity(l);
    const KElement<double> eps = epsilon<double>(l);
    const KElement<double> zp = (one + eps) * 0.5;
    const KElement<double> zm = (one - eps) * 0.5;
    const KElement<double> x = (one + eps) * r;
    const KElement<double> y = (one - eps) * r;

    check(diff(kproduct(zp, zp), zp), "Z+^2 != Z+");
    check(diff(kproduct(zm, zm), zm), "Z-^2 != Z-");
    check(diff(kproduct(zp, zm), KElement<double>::zero(l)), "Z+ Z- != 0");
    check(diff(kproduct(zm, zp), KElement<double>::zero(l)), "Z- Z+ != 0");
    const KElement<double> xy = kproduct(x, y);
    check(diff(xy, KElement<double>::zero(l)), "XY != 0");
    check(std::fabs(norm_a(x) - 1.0), "norm (a) of X != 1");
    check(std::fabs(norm_a(y) - 1.0), "norm (a) of Y != 1");
    check(std::fabs(constraint_f(x) - 0.5), "f_K(X) != +1/2");
    check(std::fabs(constraint_f(y) + 0.5), "f_K(Y) != -1/2");
    const NormResult<double> nbx = norm_b(x, tol);
    const NormResult<double> nby = norm_b(y, tol);
    run.count(2);
    if (!std::holds_alternative<SplitResidual<double>>(nbx)) run.fail(0, 0, "norm (b) of X did not error");
    if (!std::holds_alternative<SplitResidual<double>>(nby)) run.fail(0, 0, "norm (b) of Y did not error");

    run.detail("XY" + tag, dump_element(xy));
    run.detail("norm_a(X), norm_a(Y)" + tag, fmt(norm_a(x)) + ", " + fmt(norm_a(y)));
    run.detail("f_K(X), f_K(Y)" + tag, fmt(constraint_f(x)) + ", " + fmt(constraint_f(y)));
  }
  return run.finish();
}

template <class Fn>
SuiteReport dispatch(FieldMode mode, Fn&& fn) {
  return mode == FieldMode::Rational ? fn(Rational{}) : fn(double{});
}

}  // namespace

// ---------------------------------------------------------------------------
// Exact, exhaustive suites

SuiteReport suite_table() {
  SuiteRun run("table", FieldMode::Rational);
  int matched = 0;
  for (Orientation l : {Orientation::Positive, Orientation::Negative}) {
    const StructureTable derived = derive_table(l);
    const TableComparison cmp = compare_tables(derived, transcribed_table(l));
    run.count(static_cast<std::uint64_t>(cmp.cells_compared));
    matched += cmp.cells_compared - static_cast<int>(cmp.mismatches.size());
    for (const CellMismatch& m : cmp.mismatches) {
      nlohmann::ordered_json in;
      in["lambda"] = lambda_value(l);
      in["row"] = m.row;
      in["col"] = m.col;
      in["derived"] = entry_label(m.derived);
      in["transcribed"] = entry_label(m.transcribed);
      run.fail(0, 0, "derived cell differs from the transcription", in);
    }
    if (cmp.transpose_matches) run.detail("operand convention", "transposed (row is the right factor)");

    for (int k = 0; k < kBasisSize; ++k) {
      const bool row_ok = derived.at(0, k) == TableEntry{k, 1, 0};
      const bool col_ok = derived.at(k, 0) == TableEntry{k, 1, 0};
      if (!row_ok || !col_ok) run.fail(0, 0, "identity row/column broken at " + std::to_string(k));
    }
  }
  const StructureTable plus = derive_table(Orientation::Positive);
  const StructureTable minus = derive_table(Orientation::Negative);
  bool same_pattern = true;
  for (int r = 0; r < kBasisSize; ++r) {
    for (int c = 0; c < kBasisSize; ++c) same_pattern = same_pattern && plus.at(r, c).index == minus.at(r, c).index;
  }
  if (!same_pattern) run.fail(0, 0, "result-index pattern depends on λ");

  const TableEntry spot = plus.at(kEzEinf, kExEy);
  if (entry_label(spot) != "I₃ e_∞") run.fail(0, 0, "spot cell (λe_ze_∞, λe_xe_y) = " + entry_label(spot));

  run.detail("cells matched", std::to_string(matched) + "/128");
  run.detail("(λe_ze_∞)(λe_xe_y)", entry_label(spot));
  run.detail("result index pattern independent of λ", same_pattern ? "yes" : "no");
  return run.finish();
}

SuiteReport suite_epsilon() {
  SuiteRun run("epsilon", FieldMode::Rational);
  using R = Rational;
  const auto check = [&](bool ok, const std::string& what) {
    run.count();
    if (!ok) run.fail(0, 0, what);
  };
  for (Orientation l : {Orientation::Positive, Orientation::Negative}) {
    const std::string tag = l == Orientation::Positive ? " [λ=+1]" : " [λ=-1]";
    const KElement<R> eps = epsilon<R>(l);
    const Multivector<R> e = embed_to_cl40(eps);
    const Multivector<R> one = Multivector<R>::scalar(4, R(1));
    check(kproduct(eps, eps) == KElement<R>::identity(l), "ε^2 != 1 (table)" + tag);
    check(geometric_product(e, e) == one, "ε^2 != 1 (Cl(4,0))" + tag);
    check(reverse_k(eps) == eps, "ε† != ε (K)" + tag);
    check(reverse(e) == e, "ε† != ε (Cl(4,0))" + tag);
    // -λ e_x e_y e_z e_∞ as a raw Cl(4,0) multivector.
    check(e == Multivector<R>::blade(4, blades::kI4, R(-lambda_value(l))), "ε != -λ I₃ e_∞" + tag);
    for (int k = 0; k < kBasisSize; ++k) {
      const KElement<R> b = KElement<R>::basis(k, l);
      check(kproduct(eps, b) == kproduct(b, eps), "ε does not commute with basis " + std::to_string(k) + tag);
      const Multivector<R> bm = embed_to_cl40(b);
      check(geometric_product(e, bm) == geometric_product(bm, e),
            "ε does not commute with basis " + std::to_string(k) + " in Cl(4,0)" + tag);
    }
  }
  run.detail("ε", "-λ I₃ e_∞ (coefficient -1 on basis 7)");
  return run.finish();
}

SuiteReport suite_tower() {
  SuiteRun run("tower", FieldMode::Rational);
  for (int n = 1; n <= 3; ++n) {
    run.count();
    const IsomorphismReport rep = check_division_tower(n);
    std::string w;
    for (const std::string& s : rep.witnesses) w += (w.empty() ? "" : "; ") + s;
    run.detail("Cl(" + std::to_string(n) + ",0)+ ≅ " + rep.expected, rep.match ? (w.empty() ? "match" : w) : "MISMATCH");
    if (!rep.match) {
      std::string m;
      for (const std::string& s : rep.mismatches) m += (m.empty() ? "" : "; ") + s;
      run.fail(0, 0, "Cl(" + std::to_string(n) + ",0)+ does not match " + rep.expected + ": " + m);
    }
  }
  return run.finish();
}

SuiteReport suite_product_oracle(std::uint64_t trials, std::uint64_t seed, FieldMode mode, double tol) {
  return dispatch(mode, [&](auto tag) { return product_oracle<decltype(tag)>(trials, seed, tol); });
}
SuiteReport suite_associativity(std::uint64_t trials, std::uint64_t seed, FieldMode mode, double tol) {
  return dispatch(mode, [&](auto tag) { return associativity<decltype(tag)>(trials, seed, tol); });
}
SuiteReport suite_qform_identity(std::uint64_t trials, std::uint64_t seed, FieldMode mode, double tol) {
  return dispatch(mode, [&](auto tag) { return qform_identity<decltype(tag)>(trials, seed, tol); });
}
SuiteReport suite_dual_quaternion(std::uint64_t trials, std::uint64_t seed, FieldMode mode, double tol) {
  return dispatch(mode, [&](auto tag) { return dual_quaternion<decltype(tag)>(trials, seed, tol); });
}
SuiteReport suite_norm_equivalence(std::uint64_t trials, std::uint64_t seed, FieldMode mode, double tol) {
  return dispatch(mode, [&](auto tag) { return norm_equivalence<decltype(tag)>(trials, seed, tol); });
}
SuiteReport suite_composition(std::uint64_t trials, std::uint64_t seed, FieldMode mode, double tol) {
  return dispatch(mode, [&](auto tag) { return composition<decltype(tag)>(trials, seed, tol); });
}
SuiteReport suite_norm_relation(std::uint64_t trials, std::uint64_t seed, FieldMode mode, double tol) {
  return dispatch(mode, [&](auto tag) { return norm_relation<decltype(tag)>(trials, seed, tol); });
}
SuiteReport suite_orthogonality_closure(std::uint64_t trials, std::uint64_t seed, FieldMode mode,
                                        double tol) {
  return dispatch(mode, [&](auto tag) { return orthogonality_closure<decltype(tag)>(trials, seed, tol); });
}
SuiteReport suite_zero_divisor(FieldMode mode, double tol) {
  return mode == FieldMode::Rational ? zero_divisor_exact() : zero_divisor_float(tol);
}

// ---------------------------------------------------------------------------
// Orchestration

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "table",       "product-oracle", "associativity",         "epsilon",      "qform-identity",
      "dual-quaternion", "norm-equivalence", "composition", "norm-relation", "orthogonality-closure",
      "zero-divisor", "tower"};
  return names;
}

bool suite_is_exact_only(const std::string& name) {
  return name == "table" || name == "epsilon" || name == "tower";
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& c, FieldMode mode) {
  if (name == "table") return suite_table();
  if (name == "epsilon") return suite_epsilon();
  if (name == "tower") return suite_tower();
  if (name == "zero-divisor") return suite_zero_divisor(mode, c.tolerance);
  if (name == "product-oracle") return suite_product_oracle(c.trials, c.seed, mode, c.tolerance);
  if (name == "associativity") return suite_associativity(c.trials, c.seed, mode, c.tolerance);
  if (name == "qform-identity") return suite_qform_identity(c.trials, c.seed, mode, c.tolerance);
  if (name == "dual-quaternion") return suite_dual_quaternion(c.trials, c.seed, mode, c.tolerance);
  if (name == "norm-equivalence") return suite_norm_equivalence(c.trials, c.seed, mode, c.tolerance);
  if (name == "composition") return suite_composition(c.trials, c.seed, mode, c.tolerance);
  if (name == "norm-relation") return suite_norm_relation(c.trials, c.seed, mode, c.tolerance);
  if (name == "orthogonality-closure") {
    return suite_orthogonality_closure(c.trials, c.seed, mode, c.tolerance);
  }
  throw ContractViolation("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_all(const VerifyConfig& config) {
  std::vector<std::string> selected = config.suites.empty() ? suite_names() : config.suites;
  for (const std::string& s : selected) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw ContractViolation("unknown suite '" + s + "'");
    }
  }
  std::vector<FieldMode> modes;
  for (FieldMode m : {FieldMode::Rational, FieldMode::Float}) {
    if (std::find(config.modes.begin(), config.modes.end(), m) != config.modes.end()) modes.push_back(m);
  }
  if (modes.empty()) throw ContractViolation("no field mode selected");

  std::vector<SuiteReport> reports;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    for (const std::string& name : selected) {
      if (suite_is_exact_only(name) && i > 0) continue;
      reports.push_back(run_suite(name, config, modes[i]));
    }
  }
  return reports;
}

nlohmann::ordered_json report_to_json(const SuiteReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["field"] = std::string(to_string(r.field));
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  j["max_residual"] = r.max_residual ? nlohmann::ordered_json(*r.max_residual) : nlohmann::ordered_json();
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = std::move(details);
  nlohmann::ordered_json cex = nlohmann::ordered_json::array();
  for (const Counterexample& c : r.counterexamples) {
    nlohmann::ordered_json e;
    e["trial"] = c.trial;
    e["seed"] = c.seed;
    e["message"] = c.message;
    e["inputs"] = c.inputs;
    cex.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(cex);
  if (include_timing) j["elapsed_ms"] = std::round(r.elapsed_seconds * 1e6) / 1e3;
  return j;
}

std::string summary_table(const std::vector<SuiteReport>& reports, bool include_timing) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-22s %-9s %8s %8s %12s", "suite", "field", "trials", "failures",
                "max_resid");
  out << line;
  if (include_timing) {
    std::snprintf(line, sizeof line, " %9s", "time_s");
    out << line;
  }
  out << "  status\n";
  for (const SuiteReport& r : reports) {
    char resid[32] = "-";
    if (r.max_residual) std::snprintf(resid, sizeof resid, "%.3e", *r.max_residual);
    std::snprintf(line, sizeof line, "%-22s %-9s %8llu %8llu %12s", r.suite.c_str(),
                  std::string(to_string(r.field)).c_str(), static_cast<unsigned long long>(r.trials),
                  static_cast<unsigned long long>(r.failures), resid);
    out << line;
    if (include_timing) {
      std::snprintf(line, sizeof line, " %9.3f", r.elapsed_seconds);
      out << line;
    }
    out << "  " << (r.passed() ? "PASS" : "FAIL") << '\n';
  }
  return out.str();
}

}  // namespace kappa
