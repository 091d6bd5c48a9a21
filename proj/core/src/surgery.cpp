#include "bfh/surgery.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bfh {

namespace {

// F2 rank of a list of row vectors given as index sets.
int f2_rank(std::vector<std::set<int>> rows) {
  int rank = 0;
  std::map<int, std::set<int>> pivots;  // leading index -> row
  for (auto& row : rows) {
    while (!row.empty()) {
      int lead = *row.begin();
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots[lead] = row;
        ++rank;
        break;
      }
      for (int x : it->second) {
        if (row.count(x))
          row.erase(x);
        else
          row.insert(x);
      }
    }
  }
  return rank;
}

Rational d_lens_value(const Integer& p, const Integer& q, const Integer& i);

Rational d_lens_rec(const Integer& p, const Integer& q, const Integer& i) {
  if (p == 1) return Rational(0);
  Rational num = Rational(2 * i + 1 - p - q) * Rational(2 * i + 1 - p - q) -
                 Rational(p * q);
  return num / Rational(4 * p * q) - d_lens_value(q, p % q, i % q);
}

Rational d_lens_value(const Integer& p, const Integer& q, const Integer& i) {
  return d_lens_rec(p, q, i);
}

}  // namespace

const FilteredGenerator& FilteredComplex::find(const std::string& name) const {
  for (const auto& g : generators)
    if (g.name == name) return g;
  throw MathError("unknown generator: " + name);
}

int FilteredComplex::genus() const {
  int g = 0;
  for (const auto& gen : generators)
    g = std::max(g, gen.alexander < 0 ? -gen.alexander : gen.alexander);
  return g;
}

Diagnostics validate_filtered(const FilteredComplex& c) {
  Diagnostics diag;
  std::set<std::string> names;
  for (const auto& g : c.generators)
    if (!names.insert(g.name).second)
      diag.errors.push_back("duplicate generator: " + g.name);
  for (const auto& [s, t] : c.differentials) {
    if (!names.count(s) || !names.count(t)) {
      diag.errors.push_back("differential references unknown generator");
      continue;
    }
    const auto& gs = c.find(s);
    const auto& gt = c.find(t);
    int da = gt.alexander - gs.alexander;
    if (da != 1 && da != -1) {
      diag.errors.push_back("arrow " + s + " -> " + t +
                            " is neither horizontal nor vertical");
      continue;
    }
    // Horizontal arrows drop i, vertical arrows drop j; in the i = 0 slice
    // the Maslov grading of the target reads M(source) + da.
    if (gt.maslov - gs.maslov != da)
      diag.errors.push_back("arrow " + s + " -> " + t +
                            " has an inconsistent Maslov change");
  }
  if (!diag.errors.empty()) return diag;

  // d^2 = 0 over F2.
  std::map<std::string, std::set<std::string>> out;
  for (const auto& [s, t] : c.differentials) out[s].insert(t);
  for (const auto& [s, ts] : out) {
    std::map<std::string, int> counts;
    for (const auto& t : ts)
      if (out.count(t))
        for (const auto& u : out.at(t)) counts[u]++;
    for (const auto& [u, n] : counts)
      if (n % 2 != 0)
        diag.errors.push_back("d^2 != 0 witness: " + s + " => " + u);
  }

  std::multiset<int> alex, neg;
  for (const auto& g : c.generators) {
    alex.insert(g.alexander);
    neg.insert(-g.alexander);
  }
  if (alex != neg)
    diag.errors.push_back("Alexander multiset is not symmetric");
  return diag;
}

FilteredComplex staircase(int k, bool mirror) {
  if (k < 3 || k % 2 == 0) throw MathError("InvalidParameter: need odd k >= 3");
  int n = (k - 1) / 2;  // genus
  FilteredComplex c;
  for (int i = 0; i <= 2 * n; ++i) {
    // Mirroring negates both gradings and reverses every arrow.
    int a = mirror ? i - n : n - i;
    int maslov = mirror ? i : -i;
    c.generators.push_back({"x" + std::to_string(i), a, maslov});
  }
  for (int i = 1; i <= 2 * n; i += 2) {
    c.differentials.push_back(
        {"x" + std::to_string(i), "x" + std::to_string(i - 1)});
    c.differentials.push_back(
        {"x" + std::to_string(i), "x" + std::to_string(i + 1)});
  }
  if (mirror)
    for (auto& [s, t] : c.differentials) std::swap(s, t);
  return c;
}

FilteredComplex staircase_with_box(int k) {
  FilteredComplex c = staircase(k);
  c.generators.push_back({"b1", 0, 0});
  c.generators.push_back({"b2", 1, 1});
  c.generators.push_back({"b3", -1, -1});
  c.generators.push_back({"b4", 0, 0});
  c.differentials.push_back({"b1", "b2"});  // horizontal
  c.differentials.push_back({"b1", "b3"});  // vertical
  c.differentials.push_back({"b2", "b4"});  // vertical
  c.differentials.push_back({"b3", "b4"});  // horizontal
  return c;
}

std::map<int, int> a_hat_dimensions(const FilteredComplex& c) {
  std::map<int, int> out;
  int g = c.genus();
  for (int s = -g; s <= g; ++s) {
    // Generators of C{max(i, j - s) = 0}: [x, 0] when A(x) <= s and
    // [x, s - A(x)] when A(x) > s.
    std::map<std::string, int> level;  // name -> i coordinate
    for (const auto& gen : c.generators)
      level[gen.name] = gen.alexander <= s ? 0 : s - gen.alexander;
    // Kept arrows: horizontal needs i(target) = i(source) - 1, vertical
    // needs i(target) = i(source).
    std::map<std::string, std::set<std::string>> kept;
    for (const auto& [src, dst] : c.differentials) {
      int da = c.find(dst).alexander - c.find(src).alexander;
      int want = level.at(src) + (da == 1 ? -1 : 0);
      if (level.at(dst) == want) kept[src].insert(dst);
    }
    // dim H = n - 2 rank(d).
    std::map<std::string, int> index;
    for (const auto& gen : c.generators)
      index[gen.name] = static_cast<int>(index.size());
    std::vector<std::set<int>> rows;
    for (const auto& [src, ts] : kept) {
      std::set<int> row;
      for (const auto& t : ts) row.insert(index.at(t));
      rows.push_back(row);
    }
    out[s] = static_cast<int>(c.generators.size()) - 2 * f2_rank(rows);
  }
  return out;
}

int SurgeryData::v(int s) const {
  if (s >= genus) return 0;
  if (s >= 0) {
    auto it = V.find(s);
    if (it == V.end()) throw MathError("V_s missing for s = " +
                                       std::to_string(s));
    return it->second;
  }
  return v(-s) + (-s);
}

SurgeryData v_h(const FilteredComplex& c) {
  // A staircase: 2g+1 generators with distinct Alexander gradings g..-g and
  // arrows exactly from the odd steps to both neighbors.
  int g = c.genus();
  std::set<int> alex;
  for (const auto& gen : c.generators) alex.insert(gen.alexander);
  bool shape = static_cast<int>(c.generators.size()) == 2 * g + 1 &&
               static_cast<int>(alex.size()) == 2 * g + 1 &&
               static_cast<int>(c.differentials.size()) == 2 * g;
  if (!shape || !validate_filtered(c).ok()) throw MathError("NotStaircase");
  for (const auto& [s, t] : c.differentials) {
    // Every arrow source must have exactly two outgoing arrows.
    int outs = 0;
    for (const auto& [s2, t2] : c.differentials)
      if (s2 == s) ++outs;
    if (outs != 2) throw MathError("NotStaircase");
  }

  SurgeryData data;
  data.genus = g;
  for (int s = 0; s <= g; ++s) {
    int num = g - s;
    data.V[s] = std::max(0, (num + 1) / 2);
    data.H[-s] = data.V[s] + 0;  // H_{-s} = V_s
  }
  for (int s = 0; s <= g; ++s) data.H[s] = data.v(-s);
  return data;
}

std::vector<Rational> d_lens(const Integer& p, const Integer& q) {
  if (p <= 0 || q <= 0) throw MathError("InvalidParameter");
  if (gcd(p, q) != 1) throw MathError("NotCoprime");
  std::vector<Rational> out;
  for (Integer i = 0; i < p; ++i) out.push_back(d_lens_value(p, q, i));
  return out;
}

std::vector<std::pair<int, Rational>> d_surgery(int p,
                                                const SurgeryData& data) {
  if (p <= 0) throw MathError("InvalidParameter");
  std::vector<std::pair<int, Rational>> out;
  for (int s = 0; s < p; ++s) {
    // d(L(p,1),[s]) in the recursion's labeling has the closed form
    // ((2s - p)^2 - p) / (4p).
    Rational lens = (Rational(2 * s - p) * Rational(2 * s - p) - p) /
                    Rational(4 * p);
    int corr = std::max(data.v(s), data.h(s - p));
    out.push_back({s, lens - Rational(2 * corr)});
  }
  return out;
}

bool grading_gap_obstruction(const std::vector<Rational>& values,
                             const Rational& gap) {
  for (const auto& x : values)
    for (const auto& y : values)
      if (x - y == gap) return false;
  return true;
}

std::map<int, int> large_surgery_profile(const FilteredComplex& c, int p) {
  int g = c.genus();
  if (p < 2 * g) throw MathError("NotLargeSurgery");
  std::map<int, int> ahat = a_hat_dimensions(c);
  std::map<int, int> out;
  for (int r = 0; r < p; ++r) {
    int s = 2 * r <= p ? r : r - p;  // representative in [-p/2, p/2]
    out[r] = (s > g || s < -g) ? 1 : ahat.at(s);
  }
  return out;
}

FilteredComplex parse_cfk(const std::string& text, Diagnostics* diag) {
  FilteredComplex c;
  Diagnostics local;
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
    if (kw == "generator") {
      std::string name;
      int a, m;
      std::string extra;
      if (!(ls >> name >> a >> m) || (ls >> extra))
        local.errors.push_back("line " + std::to_string(lineno) +
                               ": expected: generator <name> <A> <M>");
      else
        c.generators.push_back({name, a, m});
    } else if (kw == "edge") {
      std::string s, t, extra;
      if (!(ls >> s >> t) || (ls >> extra))
        local.errors.push_back("line " + std::to_string(lineno) +
                               ": expected: edge <src> <dst>");
      else
        c.differentials.push_back({s, t});
    } else {
      local.errors.push_back("line " + std::to_string(lineno) +
                             ": unknown declaration: " + kw);
    }
  }
  if (!diag && !local.ok()) throw ParseError(local.errors.front());
  if (diag) *diag = local;
  return c;
}

std::string serialize_cfk(const FilteredComplex& c) {
  std::ostringstream out;
  for (const auto& g : c.generators)
    out << "generator " << g.name << " " << g.alexander << " " << g.maslov
        << "\n";
  for (const auto& [s, t] : c.differentials)
    out << "edge " << s << " " << t << "\n";
  return out.str();
}

}  // namespace bfh
