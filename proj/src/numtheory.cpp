#include "perfekt/numtheory.hpp"

#include <algorithm>

#include "perfekt/error.hpp"

namespace perfekt {

ContinuedFraction cf_expand(const Scalar& x, int k) {
  if (k < 1) throw InputError("number of partial quotients must be at least 1");
  ContinuedFraction cf;
  cf.source = x.is_rational() ? CFSource::FiniteRational : CFSource::QuadraticIrrational;
  std::vector<Scalar> complete;
  Scalar cur = x;
  for (int i = 0; i < k; ++i) {
    if (!cf.period_start && !cur.is_rational()) {
      auto it = std::find(complete.begin(), complete.end(), cur);
      if (it != complete.end()) {
        cf.period_start = static_cast<int>(it - complete.begin());
        cf.period_length = i - *cf.period_start;
      }
    }
    complete.push_back(cur);
    Integer a = cur.floor();
    cf.quotients.push_back(a);
    Scalar frac = cur - Scalar(a);
    if (frac.is_zero()) break;
    cur = Scalar(1) / frac;
  }
  // Detect the period even when k stops right at its first repetition.
  if (!cf.period_start && !cur.is_rational()) {
    auto it = std::find(complete.begin(), complete.end(), cur);
    if (it != complete.end()) {
      cf.period_start = static_cast<int>(it - complete.begin());
      cf.period_length = static_cast<int>(complete.size()) - *cf.period_start;
    }
  }
  return cf;
}

ContinuedFraction cf_of_e(int k) {
  if (k < 0) throw InputError("index must be nonnegative");
  ContinuedFraction cf;
  cf.source = CFSource::EulerE;
  cf.quotients.push_back(2);
  for (int i = 1; i <= k; ++i) cf.quotients.push_back(i % 3 == 2 ? Integer(2 * (i + 1) / 3) : Integer(1));
  return cf;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, int k) {
  if (k < 1 || k > static_cast<int>(cf.quotients.size())) {
    throw PreconditionViolated("continued fraction has fewer than " + std::to_string(k) + " quotients");
  }
  std::vector<Convergent> out;
  Integer p_prev = 1, q_prev = 0, p = cf.quotients[0], q = 1;
  out.push_back({p, q, 0});
  for (int i = 1; i < k; ++i) {
    const Integer& a = cf.quotients[i];
    Integer pn = a * p + p_prev, qn = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
    Integer det = p * q_prev - p_prev * q;
    if (det != (i % 2 == 1 ? 1 : -1)) throw Error("internal: convergent determinant identity failed");
    out.push_back({p, q, i});
  }
  return out;
}

std::vector<std::pair<Integer, Integer>> pell_negative_solutions(int count) {
  if (count < 1) throw InputError("count must be at least 1");
  std::vector<std::pair<Integer, Integer>> out;
  Integer p = 1, q = 1;
  for (int i = 0; i < count; ++i) {
    if (p * p - 2 * q * q != -1) throw Error("internal: Pell identity failed");
    out.emplace_back(p, q);
    Integer pn = 3 * p + 4 * q, qn = 2 * p + 3 * q;
    p = pn;
    q = qn;
  }
  return out;
}

bool badly_approx_check(const Integer& p, const Integer& q) {
  if (q < 1) throw InputError("q must be positive");
  Scalar diff = (Scalar::sqrt(2) - Scalar(Rational(p, q))).abs();
  Scalar bound = Scalar::sqrt(2) * Scalar(Rational(Integer(1), 4 * q * q));
  return diff >= bound;
}

SimultaneousApprox simultaneous_approx(const std::vector<Scalar>& alpha, const Rational& eps) {
  if (alpha.empty()) throw InputError("alpha must be nonempty");
  if (eps <= 0 || eps >= 1) throw InputError("eps must lie in (0, 1)");
  Rational inv = 1 / eps;
  Rational bound_r = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) bound_r *= inv;
  Integer bound = Scalar(bound_r).ceil();
  Scalar e(eps);
  for (Integer q = 1; q <= bound; ++q) {
    SimultaneousApprox r;
    r.q = q;
    bool ok = true;
    for (const auto& a : alpha) {
      Scalar qa = a * Scalar(q);
      Integer p = qa.round();
      if ((qa - Scalar(p)).abs() > e) {
        ok = false;
        break;
      }
      r.p.push_back(p);
    }
    if (ok) return r;
  }
  throw Error("no simultaneous approximation found up to the Dirichlet bound");
}

}  // namespace perfekt
