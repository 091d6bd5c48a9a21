#include "bfh/gluing.hpp"

#include <algorithm>
#include <sstream>

namespace bfh {

Integer AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  Integer n = 1;
  for (const auto& f : invariant_factors) n *= f;
  return n;
}

std::string to_string(const AbelianGroup& g) {
  std::ostringstream out;
  bool first = true;
  for (const auto& f : g.invariant_factors) {
    if (!first) out << " ⊕ ";
    out << "Z/" << f;
    first = false;
  }
  if (g.free_rank > 0) {
    if (!first) out << " ⊕ ";
    if (g.free_rank == 1)
      out << "Z";
    else
      out << "Z^" << g.free_rank;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Diagnostics validate_gluing(const GluingMatrix& m) {
  Diagnostics diag;
  Integer d = m.det();
  if (d == 1)
    diag.warnings.push_back(
        "determinant +1; normalize_gluing fixes the det = -1 convention");
  else if (d != -1)
    diag.errors.push_back("determinant " + d.str() +
                          " is not a boundary homeomorphism");
  return diag;
}

GluingMatrix normalize_gluing(const GluingMatrix& m) {
  if (m.det() == 1) return {-m.q, -m.r, m.p, m.s};
  return m;
}

AbelianGroup h1_of_gluing(const GluingMatrix& m) {
  // Relations 2p mu = 0 and -s mu + 2x = 0 on generators (mu, x), as the
  // cokernel of the relation matrix.
  IntMatrix rel = {{2 * m.p, 0}, {-m.s, 2}};
  CokernelDescription c = cokernel(rel);
  return {c.invariant_factors, c.free_rank};
}

Integer order_formula(const Integer& p_slope, const Integer& d,
                      const Integer& torsion_order) {
  if (d <= 0 || torsion_order <= 0) throw MathError("InvalidParameter");
  Integer p = p_slope < 0 ? Integer(-p_slope) : p_slope;
  return 4 * d * torsion_order * p;
}

GluingMatrix twist_orbit(const GluingMatrix& m, const Integer& n) {
  return {m.q, m.r + n * m.q, m.p, m.s + n * m.p};
}

std::vector<GluingMatrix> classify_cyclic_slope2(int bound) {
  std::vector<GluingMatrix> out;
  if (bound < 1) return out;
  auto push_unique = [&](const GluingMatrix& m) {
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  };
  for (int p : {2, -2}) {
    if (bound < 2) continue;
    for (int q = -bound; q <= bound; ++q)
      for (int r = -bound; r <= bound; ++r)
        for (int s = -bound; s <= bound; ++s) {
          GluingMatrix m{q, r, p, s};
          Integer d = m.det();
          if (d != 1 && d != -1) continue;
          AbelianGroup h = h1_of_gluing(m);
          if (h.free_rank != 0 || h.invariant_factors.size() != 1 ||
              h.invariant_factors[0] != 8)
            continue;
          // Canonical orbit representative.  det +1 is normalized away,
          // then twists on the other boundary shift q by multiples of p
          // (q odd, so q -> 1), and twists on this boundary shift s by
          // multiples of p (s odd, so s -> -1); r is then forced by the
          // determinant.
          GluingMatrix c = normalize_gluing(m);
          // Left twist: q += n p, r += n s.
          Integer nl = (1 - c.q) / c.p;
          c.q += nl * c.p;
          c.r += nl * c.s;
          // Right twist: r += n q, s += n p.
          Integer nr = (-1 - c.s) / c.p;
          c = twist_orbit(c, nr);
          push_unique(c);
        }
  }
  std::sort(out.begin(), out.end(), [](const GluingMatrix& a,
                                       const GluingMatrix& b) {
    return std::make_tuple(a.p, a.q, a.r, a.s) <
           std::make_tuple(b.p, b.q, b.r, b.s);
  });
  return out;
}

GluingMatrix parse_gluing(const std::string& text, Diagnostics* diag) {
  Diagnostics local;
  GluingMatrix m;
  bool seen = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw != "matrix") {
      local.errors.push_back("line " + std::to_string(lineno) +
                             ": unknown declaration: " + kw);
      continue;
    }
    std::string extra;
    if (seen) {
      local.errors.push_back("line " + std::to_string(lineno) +
                             ": duplicate matrix declaration");
    } else if (!(ls >> m.q >> m.r >> m.p >> m.s) || (ls >> extra)) {
      local.errors.push_back("line " + std::to_string(lineno) +
                             ": expected: matrix <q> <r> <p> <s>");
    } else {
      seen = true;
    }
  }
  if (!seen) local.errors.push_back("no matrix declaration found");
  if (!diag && !local.ok()) throw ParseError(local.errors.front());
  if (diag) *diag = local;
  return m;
}

std::string serialize_gluing(const GluingMatrix& m) {
  std::ostringstream out;
  out << "matrix " << m.q << " " << m.r << " " << m.p << " " << m.s << "\n";
  return out.str();
}

}  // namespace bfh
