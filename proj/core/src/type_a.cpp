#include "bfh/type_a.hpp"

#include "bfh/grading.hpp"
#include "bfh/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace bfh {

namespace {

// Digit strings of the chord basis, after the 1 <-> 3 swap applied to a
// type D edge label.  Both 1 and 3 run i0 -> i1 in the quiver, so a swapped
// string is quiver-consistent exactly when the original path was.
std::string swapped_digits(Alg label) {
  switch (label) {
    case Alg::R1:
      return "3";
    case Alg::R2:
      return "2";
    case Alg::R3:
      return "1";
    case Alg::R12:
      return "32";
    case Alg::R23:
      return "21";
    case Alg::R123:
      return "321";
    default:
      throw MathError("edge label is not a chord");
  }
}

Alg chord_from_digits(const std::string& s) {
  if (s == "1") return Alg::R1;
  if (s == "2") return Alg::R2;
  if (s == "3") return Alg::R3;
  if (s == "12") return Alg::R12;
  if (s == "23") return Alg::R23;
  if (s == "123") return Alg::R123;
  throw MathError("not a chord digit string: " + s);
}

Alg digit_left(char c) { return (c == '2') ? Alg::I1 : Alg::I0; }
Alg digit_right(char c) { return (c == '2') ? Alg::I0 : Alg::I1; }

// Minimum-block regrouping of a digit string into algebra basis chords.
// Returns the unique minimal decomposition, nullopt when none exists, and
// sets *ambiguous when several distinct minimal ones do.
std::optional<std::vector<Alg>> regroup(const std::string& s,
                                        bool* ambiguous) {
  *ambiguous = false;
  if (s.empty()) return std::vector<Alg>{};
  static const std::vector<std::string> kBlocks = {"123", "12", "23",
                                                   "1",   "2",  "3"};
  const std::size_t n = s.size();
  const int kInf = 1 << 20;
  // best[i]: fewest blocks covering s[i..n); ways capped at 2; pick[i]: the
  // block chosen at i in a minimal decomposition.
  std::vector<int> best(n + 1, kInf), ways(n + 1, 0);
  std::vector<std::string> pick(n + 1);
  best[n] = 0;
  ways[n] = 1;
  for (std::size_t i = n; i-- > 0;) {
    for (const auto& b : kBlocks) {
      if (s.compare(i, b.size(), b) != 0) continue;
      std::size_t j = i + b.size();
      if (j > n || best[j] == kInf) continue;
      // Quiver composability across the block boundary.
      if (j < n && digit_right(b.back()) != digit_left(s[j])) continue;
      if (best[j] + 1 < best[i]) {
        best[i] = best[j] + 1;
        ways[i] = ways[j];
        pick[i] = b;
      } else if (best[j] + 1 == best[i]) {
        ways[i] = std::min(2, ways[i] + ways[j]);
      }
    }
  }
  if (best[0] == kInf) return std::nullopt;
  if (ways[0] > 1) {
    *ambiguous = true;
    return std::nullopt;
  }
  std::vector<Alg> out;
  for (std::size_t i = 0; i < n; i += pick[i].size())
    out.push_back(chord_from_digits(pick[i]));
  return out;
}

GradingElement chords_grading(const ChordSequence& cs) {
  GradingElement g = grading_identity();
  for (Alg c : cs.chords) g = multiply(g, grading_of(c));
  return g;
}

// Implied grading of the output of an operation given the input's grading.
GradingElement implied_output(const AOperation& op, const GradingElement& gx) {
  GradingElement g = multiply(gx, chords_grading(op.chords));
  int k = static_cast<int>(op.chords.size());
  return multiply(rational_power(central_lambda(), Rational(k - 1)), g);
}

GradingElement implied_input(const AOperation& op, const GradingElement& gy) {
  GradingElement g = multiply(gy, inverse(chords_grading(op.chords)));
  int k = static_cast<int>(op.chords.size());
  return multiply(rational_power(central_lambda(), Rational(1 - k)), g);
}

}  // namespace

Alg TypeAStructure::idempotent_of(const std::string& name) const {
  for (const auto& [n, i] : generators)
    if (n == name) return i;
  throw MathError("unknown generator: " + name);
}

bool TypeAStructure::has_generator(const std::string& name) const {
  for (const auto& [n, i] : generators)
    if (n == name) return true;
  return false;
}

Diagnostics validate_type_a(const TypeAStructure& a) {
  Diagnostics diag;
  std::set<std::string> names;
  for (const auto& [n, i] : a.generators) {
    if (!names.insert(n).second)
      diag.errors.push_back("duplicate generator: " + n);
    if (!is_idempotent(i))
      diag.errors.push_back("generator " + n + " has a non-idempotent type");
  }
  for (const auto& op : a.operations) {
    if (!a.has_generator(op.input) || !a.has_generator(op.output)) {
      diag.errors.push_back("operation references unknown generator");
      continue;
    }
    Alg cur = a.idempotent_of(op.input);
    bool ok = true;
    for (Alg c : op.chords.chords) {
      if (left_idempotent(c) != cur) {
        ok = false;
        break;
      }
      cur = right_idempotent(c);
    }
    if (!ok || cur != a.idempotent_of(op.output))
      diag.errors.push_back("idempotent typing violation at operation on " +
                            op.input + " -> " + op.output);
  }
  return diag;
}

TypeAStructure from_type_d(const TypeDStructure& d, Diagnostics* diag) {
  std::map<std::string, int> valence;
  for (const auto& [n, i] : d.generators) valence[n] = 0;
  for (const auto& e : d.edges) {
    if (!e.label) throw MathError("NotLoopType: empty edges present");
    valence[e.source]++;
    valence[e.target]++;
  }
  for (const auto& [n, v] : valence)
    if (v > 2) throw MathError("NotLoopType: generator " + n + " has valence " +
                               std::to_string(v));

  TypeAStructure a;
  a.generators = d.generators;
  Diagnostics local;

  // F2 count of the operation produced by each directed-edge path.
  std::map<AOperation, int> counts;
  std::vector<const DEdge*> path;
  std::set<const DEdge*> used;
  auto record = [&](const std::string& start) {
    std::string digits;
    for (const DEdge* e : path) digits += swapped_digits(*e->label);
    bool ambiguous = false;
    auto blocks = regroup(digits, &ambiguous);
    if (ambiguous) {
      local.warnings.push_back("rejected path from " + start + " to " +
                               path.back()->target +
                               ": ambiguous minimal regrouping of \"" +
                               digits + "\"");
      return;
    }
    if (!blocks) return;
    counts[AOperation{start, ChordSequence(*blocks), path.back()->target}]++;
  };
  std::function<void(const std::string&, const std::string&)> extend =
      [&](const std::string& start, const std::string& cur) {
        for (const auto& e : d.edges) {
          if (e.source != cur || used.count(&e)) continue;
          used.insert(&e);
          path.push_back(&e);
          record(start);
          extend(start, e.target);
          path.pop_back();
          used.erase(&e);
        }
      };
  for (const auto& [n, i] : d.generators) extend(n, n);

  for (const auto& [op, c] : counts)
    if (c % 2 != 0) a.operations.push_back(op);
  if (diag) *diag = local;
  return a;
}

GradedTypeA assign_gradings_a(const TypeAStructure& a,
                              const std::string& base) {
  if (!a.has_generator(base))
    throw MathError("unknown base generator: " + base);
  GradedTypeA out;
  out.structure = a;
  out.base_generator = base;

  std::map<std::string, std::vector<const AOperation*>> adj;
  for (const auto& op : a.operations) {
    adj[op.input].push_back(&op);
    adj[op.output].push_back(&op);
  }

  out.gradings[base] = grading_identity();
  std::function<void(const std::string&)> visit = [&](const std::string& cur) {
    std::vector<std::pair<std::string, const AOperation*>> nbrs;
    for (const AOperation* op : adj[cur]) {
      const std::string& other = (op->input == cur) ? op->output : op->input;
      nbrs.push_back({other, op});
    }
    std::sort(nbrs.begin(), nbrs.end(), [&](const auto& x, const auto& y) {
      return std::make_tuple(a.idempotent_of(x.first), x.first, *x.second) <
             std::make_tuple(a.idempotent_of(y.first), y.first, *y.second);
    });
    for (const auto& [other, op] : nbrs) {
      if (out.gradings.count(other)) continue;
      out.gradings[other] = (op->input == cur)
                                ? implied_output(*op, out.gradings.at(cur))
                                : implied_input(*op, out.gradings.at(cur));
      visit(other);
    }
  };
  visit(base);
  if (out.gradings.size() != a.generators.size())
    throw MathError("DisconnectedGraph");

  // Closure discrepancies live in the left-acting subgroup <f>.
  std::vector<GradingElement> discrepancies;
  for (const auto& op : a.operations) {
    GradingElement implied = implied_output(op, out.gradings.at(op.input));
    discrepancies.push_back(
        multiply(implied, inverse(out.gradings.at(op.output))));
  }
  out.indeterminacy = cyclic_generator(discrepancies);
  return out;
}

bool graded_relation_holds_a(const GradedTypeA& g) {
  for (const auto& op : g.structure.operations) {
    GradingElement lhs = implied_output(op, g.gradings.at(op.input));
    GradingElement rhs = g.gradings.at(op.output);
    if (g.indeterminacy) {
      CosetGrading a{*g.indeterminacy, std::nullopt, lhs};
      CosetGrading b{*g.indeterminacy, std::nullopt, rhs};
      if (!coset_equal(a, b)) return false;
    } else if (!(lhs == rhs)) {
      return false;
    }
  }
  return true;
}

TypeAStructure parse_type_a(const std::string& text, Diagnostics* diag) {
  TypeAStructure a;
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
    try {
      if (kw == "generator") {
        std::string name, idem, extra;
        if (!(ls >> name >> idem) || (ls >> extra))
          throw ParseError("line " + std::to_string(lineno) +
                           ": expected: generator <name> <i0|i1>");
        Alg i = parse_algebra(idem);
        if (!is_idempotent(i))
          throw ParseError("line " + std::to_string(lineno) +
                           ": generator type must be i0 or i1");
        a.generators.push_back({name, i});
      } else if (kw == "op") {
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.size() < 2)
          throw ParseError("line " + std::to_string(lineno) +
                           ": expected: op <input> [<chord>...] <output>");
        std::vector<Alg> chords;
        for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
          Alg c = parse_algebra(toks[i]);
          if (!is_chord(c))
            throw ParseError("line " + std::to_string(lineno) +
                             ": operation inputs must be chords");
          chords.push_back(c);
        }
        a.operations.push_back(
            {toks.front(), ChordSequence(chords), toks.back()});
      } else {
        throw ParseError("line " + std::to_string(lineno) +
                         ": unknown declaration: " + kw);
      }
    } catch (const ParseError& err) {
      local.errors.push_back(err.what());
    }
  }
  for (const auto& op : a.operations)
    if (!a.has_generator(op.input) || !a.has_generator(op.output))
      local.errors.push_back("operation references undeclared generator");
  if (!diag && !local.ok()) throw ParseError(local.errors.front());
  if (diag) *diag = local;
  return a;
}

std::string serialize_type_a(const TypeAStructure& a) {
  std::ostringstream out;
  for (const auto& [n, i] : a.generators)
    out << "generator " << n << " " << algebra_name(i) << "\n";
  std::vector<AOperation> ops = a.operations;
  std::sort(ops.begin(), ops.end());
  for (const auto& op : ops) {
    out << "op " << op.input;
    for (Alg c : op.chords.chords) out << " " << algebra_name(c);
    out << " " << op.output << "\n";
  }
  return out.str();
}

}  // namespace bfh
