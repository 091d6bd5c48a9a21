#include "bfh/grading.hpp"

#include "bfh/snf.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace bfh {
namespace {

bool satisfies_integral(const Rational& j, const Rational& p,
                        const Rational& q) {
  return is_half_integer(j) && is_half_integer(p) && is_half_integer(q) &&
         is_integer(p + q);
}

GradingRegime detect_regime(const Rational& j, const Rational& p,
                            const Rational& q) {
  return satisfies_integral(j, p, q) ? GradingRegime::Integral
                                     : GradingRegime::RationalExt;
}

GradingElement make_auto(Rational j, Rational p, Rational q) {
  GradingRegime r = detect_regime(j, p, q);
  return GradingElement(std::move(j), std::move(p), std::move(q), r);
}

// Generator of the rank-<=1 lattice { sum z_i c_i : z_i in Z } in Q.
Rational rational_gcd(const std::vector<Rational>& cs) {
  Integer den_lcm = 1;
  for (const auto& c : cs) den_lcm = lcm(den_lcm, denominator(c));
  Integer num_gcd = 0;
  for (const auto& c : cs) {
    Integer n = numerator(c) * (den_lcm / denominator(c));
    num_gcd = gcd(num_gcd, n);
  }
  return Rational(num_gcd, den_lcm);
}

// Clears denominators of the linear system M x = rhs (rows scaled
// independently); integer solvability is unchanged.
void append_cleared_row(IntMatrix& m, std::vector<Integer>& b,
                        const std::vector<Rational>& row,
                        const Rational& rhs) {
  Integer den_lcm = denominator(rhs);
  for (const auto& c : row) den_lcm = lcm(den_lcm, denominator(c));
  std::vector<Integer> cleared;
  cleared.reserve(row.size());
  for (const auto& c : row)
    cleared.push_back(numerator(c) * (den_lcm / denominator(c)));
  m.push_back(std::move(cleared));
  b.push_back(numerator(rhs) * (den_lcm / denominator(rhs)));
}

}  // namespace

GradingElement::GradingElement(Rational j, Rational p, Rational q,
                               GradingRegime r)
    : maslov(std::move(j)),
      spinc_p(std::move(p)),
      spinc_q(std::move(q)),
      regime(r) {
  if (regime == GradingRegime::Integral &&
      !satisfies_integral(maslov, spinc_p, spinc_q)) {
    throw MathError("grading element outside the integral group: (" +
                    bfh::to_string(maslov) + ";" + bfh::to_string(spinc_p) +
                    "," + bfh::to_string(spinc_q) + ")");
  }
}

GradingElement multiply(const GradingElement& a, const GradingElement& b) {
  Rational twist = a.spinc_p * b.spinc_q - a.spinc_q * b.spinc_p;
  return make_auto(a.maslov + b.maslov + twist, a.spinc_p + b.spinc_p,
                   a.spinc_q + b.spinc_q);
}

GradingElement inverse(const GradingElement& a) {
  return make_auto(-a.maslov, -a.spinc_p, -a.spinc_q);
}

GradingElement rational_power(const GradingElement& a, const Rational& t) {
  return make_auto(t * a.maslov, t * a.spinc_p, t * a.spinc_q);
}

GradingElement grading_identity() { return GradingElement(0, 0, 0); }

GradingElement central_lambda() { return GradingElement(1, 0, 0); }

GradingElement canonical_primitive(const GradingElement& g) {
  if (g.spinc_p == 0 && g.spinc_q == 0) {
    if (g.maslov == 0) return grading_identity();
    Rational j = g.maslov < 0 ? Rational(-g.maslov) : g.maslov;
    return make_auto(j, 0, 0);
  }
  Rational content = rational_gcd({g.spinc_p, g.spinc_q});
  GradingElement scaled = rational_power(g, Rational(1) / content);
  // Lexicographically positive sign on the (now integral primitive) spin^c.
  bool flip = scaled.spinc_p < 0 || (scaled.spinc_p == 0 && scaled.spinc_q < 0);
  return flip ? inverse(scaled) : scaled;
}

std::optional<GradingElement> cyclic_generator(
    const std::vector<GradingElement>& elements) {
  std::vector<GradingElement> nz;
  for (const auto& e : elements)
    if (!e.is_identity()) nz.push_back(e);
  if (nz.empty()) return std::nullopt;
  // Collinearity of the (j, p, q) triples over Q.
  for (std::size_t i = 1; i < nz.size(); ++i) {
    const auto& a = nz[0];
    const auto& b = nz[i];
    bool ok = (a.maslov * b.spinc_p == b.maslov * a.spinc_p) &&
              (a.maslov * b.spinc_q == b.maslov * a.spinc_q) &&
              (a.spinc_p * b.spinc_q == b.spinc_p * a.spinc_q);
    if (!ok)
      throw MathError("indeterminacy subgroup is not cyclic: " +
                      to_string(a) + " vs " + to_string(b));
  }
  // Primitive direction of the triple, then lattice gcd of coefficients.
  const GradingElement& a = nz[0];
  Rational dir_j = a.maslov, dir_p = a.spinc_p, dir_q = a.spinc_q;
  Rational content = rational_gcd({dir_j, dir_p, dir_q});
  dir_j /= content;
  dir_p /= content;
  dir_q /= content;
  // Coefficient of each element along the direction.
  std::vector<Rational> coeffs;
  for (const auto& e : nz) {
    Rational c = dir_p != 0   ? e.spinc_p / dir_p
                 : dir_q != 0 ? e.spinc_q / dir_q
                               : e.maslov / dir_j;
    coeffs.push_back(c);
  }
  Rational g = rational_gcd(coeffs);
  GradingElement gen = make_auto(g * dir_j, g * dir_p, g * dir_q);
  bool flip;
  if (gen.spinc_p != 0 || gen.spinc_q != 0)
    flip = gen.spinc_p < 0 || (gen.spinc_p == 0 && gen.spinc_q < 0);
  else
    flip = gen.maslov < 0;
  return flip ? inverse(gen) : gen;
}

std::vector<GradingElement> divisor_candidates(const GradingElement& h) {
  std::vector<GradingElement> out;
  if (h.is_identity()) return out;
  // In the integral group 2h has integer components; k must divide their gcd.
  Integer g = 0;
  for (const Rational& c : {h.maslov, h.spinc_p, h.spinc_q}) {
    Rational doubled = 2 * c;
    if (!is_integer(doubled)) {
      out.push_back(h);  // Not an integral element; only the trivial divisor.
      return out;
    }
    g = gcd(g, numerator(doubled));
  }
  if (g < 0) g = -g;
  for (Integer k = 1; k <= g; ++k) {
    if (g % k != 0) continue;
    GradingElement cand =
        rational_power(h, Rational(1, k));
    if (cand.regime == GradingRegime::Integral) out.push_back(cand);
  }
  return out;
}

std::string to_string(const GradingElement& g) {
  return "(" + to_string(g.maslov) + ";" + to_string(g.spinc_p) + "," +
         to_string(g.spinc_q) + ")";
}

GradingElement parse_grading(std::string_view text, GradingRegime regime) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("grading must look like (j;p,q): " + std::string(text));
  s = s.substr(1, s.size() - 2);
  auto semi = s.find(';');
  auto comma = s.find(',', semi == std::string::npos ? 0 : semi);
  if (semi == std::string::npos || comma == std::string::npos)
    throw ParseError("grading must look like (j;p,q): " + std::string(text));
  Rational j = parse_rational(s.substr(0, semi));
  Rational p = parse_rational(s.substr(semi + 1, comma - semi - 1));
  Rational q = parse_rational(s.substr(comma + 1));
  if (regime == GradingRegime::Integral && !satisfies_integral(j, p, q))
    regime = GradingRegime::RationalExt;
  return GradingElement(j, p, q, regime);
}

namespace {

// Solves the 2x2 rational system  s*col_f + t*col_h = rhs  where either
// column may be absent (treated as zero).  Returns the particular solution
// and a basis of the null space, or nullopt when inconsistent.
struct LinearSolution {
  Rational s = 0, t = 0;
  std::vector<std::pair<Rational, Rational>> null_basis;
};

std::optional<LinearSolution> solve_spinc_system(
    const std::optional<GradingElement>& f,
    const std::optional<GradingElement>& h, const Rational& rhs_p,
    const Rational& rhs_q) {
  Rational fp = f ? f->spinc_p : Rational(0), fq = f ? f->spinc_q : Rational(0);
  Rational hp = h ? h->spinc_p : Rational(0), hq = h ? h->spinc_q : Rational(0);
  Rational det = fp * hq - fq * hp;
  LinearSolution sol;
  if (det != 0) {
    sol.s = (rhs_p * hq - rhs_q * hp) / det;
    sol.t = (fp * rhs_q - fq * rhs_p) / det;
    return sol;
  }
  bool f_zero = (fp == 0 && fq == 0);
  bool h_zero = (hp == 0 && hq == 0);
  if (f_zero && h_zero) {
    if (rhs_p != 0 || rhs_q != 0) return std::nullopt;
    sol.null_basis = {{1, 0}, {0, 1}};
    return sol;
  }
  if (!f_zero) {
    // rhs must be proportional to (fp, fq); h's column is a multiple of f's.
    if (rhs_p * fq != rhs_q * fp) return std::nullopt;
    sol.s = fp != 0 ? rhs_p / fp : rhs_q / fq;
    Rational mu = fp != 0 ? hp / fp : hq / fq;  // col_h = mu * col_f
    sol.null_basis.push_back({-mu, 1});
    return sol;
  }
  // f column zero, h column nonzero.
  if (rhs_p * hq != rhs_q * hp) return std::nullopt;
  sol.t = hp != 0 ? rhs_p / hp : rhs_q / hq;
  sol.null_basis.push_back({1, 0});
  return sol;
}

Rational maslov_at(const CosetGrading& g, const Rational& s,
                   const Rational& t) {
  GradingElement acc = g.representative;
  if (g.left_indeterminacy)
    acc = multiply(rational_power(*g.left_indeterminacy, s), acc);
  if (g.right_indeterminacy)
    acc = multiply(acc, rational_power(*g.right_indeterminacy, t));
  return acc.maslov;
}

}  // namespace

bool coset_equal(const CosetGrading& x, const CosetGrading& y) {
  const auto& f = x.left_indeterminacy;
  const auto& h = x.right_indeterminacy;
  if (static_cast<bool>(f) != static_cast<bool>(y.left_indeterminacy) ||
      static_cast<bool>(h) != static_cast<bool>(y.right_indeterminacy) ||
      (f && !(*f == *y.left_indeterminacy)) ||
      (h && !(*h == *y.right_indeterminacy)))
    throw MathError("MismatchedIndeterminacy");
  if (!f && !h) return x.representative == y.representative;

  const GradingElement& r = x.representative;
  const GradingElement& w = y.representative;
  Rational dp = w.spinc_p - r.spinc_p, dq = w.spinc_q - r.spinc_q;
  Rational fp = f ? f->spinc_p : Rational(0), fq = f ? f->spinc_q : Rational(0);
  Rational hp = h ? h->spinc_p : Rational(0), hq = h ? h->spinc_q : Rational(0);
  Rational det = fp * hq - fq * hp;
  if (det != 0) {
    Rational a = (dp * hq - dq * hp) / det;
    Rational b = (fp * dq - fq * dp) / det;
    if (!is_integer(a) || !is_integer(b)) return false;
    GradingElement lhs = multiply(multiply(rational_power(*f, a), r),
                                  rational_power(*h, b));
    return lhs == w;
  }
  // Degenerate spin^c span: the Maslov component is affine linear in (a, b)
  // because the bilinear twist term carries the vanishing determinant.
  std::vector<Rational> row_p, row_q, row_j;
  if (f) {
    row_p.push_back(fp);
    row_q.push_back(fq);
    row_j.push_back(f->maslov + (fp * r.spinc_q - fq * r.spinc_p));
  }
  if (h) {
    row_p.push_back(hp);
    row_q.push_back(hq);
    row_j.push_back(h->maslov + (r.spinc_p * hq - r.spinc_q * hp));
  }
  IntMatrix m;
  std::vector<Integer> b;
  append_cleared_row(m, b, row_p, dp);
  append_cleared_row(m, b, row_q, dq);
  append_cleared_row(m, b, row_j, w.maslov - r.maslov);
  return has_integer_solution(m, b);
}

Rational normalize_spinc(const CosetGrading& g) {
  if (!g.left_indeterminacy || !g.right_indeterminacy)
    throw MathError("normalize_spinc requires both indeterminacies");
  auto sol = solve_spinc_system(g.left_indeterminacy, g.right_indeterminacy,
                                -g.representative.spinc_p,
                                -g.representative.spinc_q);
  if (!sol) throw MathError("NoRationalSolution");
  Rational value = maslov_at(g, sol->s, sol->t);
  for (const auto& [ds, dt] : sol->null_basis) {
    Rational other = maslov_at(g, sol->s + ds, sol->t + dt);
    if (other != value) throw MathError("AmbiguousNormalization");
  }
  return value;
}

bool same_spinc(const CosetGrading& x, const CosetGrading& y) {
  const auto& f = x.left_indeterminacy;
  const auto& h = x.right_indeterminacy;
  if (static_cast<bool>(f) != static_cast<bool>(y.left_indeterminacy) ||
      static_cast<bool>(h) != static_cast<bool>(y.right_indeterminacy) ||
      (f && !(*f == *y.left_indeterminacy)) ||
      (h && !(*h == *y.right_indeterminacy)))
    throw MathError("MismatchedIndeterminacy");
  Rational dp = y.representative.spinc_p - x.representative.spinc_p;
  Rational dq = y.representative.spinc_q - x.representative.spinc_q;
  std::vector<Rational> row_p, row_q;
  if (f) {
    row_p.push_back(f->spinc_p);
    row_q.push_back(f->spinc_q);
  }
  if (h) {
    row_p.push_back(h->spinc_p);
    row_q.push_back(h->spinc_q);
  }
  if (row_p.empty()) return dp == 0 && dq == 0;
  IntMatrix m;
  std::vector<Integer> b;
  append_cleared_row(m, b, row_p, dp);
  append_cleared_row(m, b, row_q, dq);
  return has_integer_solution(m, b);
}

}  // namespace bfh
