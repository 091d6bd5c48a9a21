#include "bfh/pairing.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace bfh {

namespace {

BoxComplex box_tensor_impl(const TypeAStructure& a, const TypeDStructure& d) {
  if (!is_bounded(d)) throw MathError("UnboundedTypeD");
  BoxComplex c;
  std::map<BoxGenerator, std::size_t> index;
  for (const auto& [an, ai] : a.generators)
    for (const auto& [dn, di] : d.generators)
      if (ai == di) {
        index[{an, dn}] = c.generators.size();
        c.generators.push_back({an, dn, ai});
      }

  std::set<std::pair<std::size_t, std::size_t>> entries;
  auto toggle = [&](std::size_t from, std::size_t to) {
    auto e = std::make_pair(from, to);
    if (!entries.erase(e)) entries.insert(e);
  };

  // Longest chord sequence stored in a bounds the walk length that can match.
  std::size_t max_k = 0;
  for (const auto& op : a.operations) max_k = std::max(max_k, op.chords.size());

  for (const auto& g : c.generators) {
    std::size_t from = index.at(g);
    // Unit action against single empty edges (delta_1 walks labeled by an
    // idempotent).
    for (const DeltaTerm& t : delta_k(d, g.d_name, 1)) {
      if (t.labels.size() == 1 && is_idempotent(t.labels[0]))
        toggle(from, index.at({g.a_name, t.target}));
    }
    // m1 terms would pair with delta_0; the catalog's reduced modules store
    // none, but the loop below covers k = 0 uniformly.
    for (std::size_t k = 0; k <= max_k; ++k) {
      std::vector<DeltaTerm> walks = delta_k(d, g.d_name, static_cast<int>(k));
      for (const auto& op : a.operations) {
        if (op.input != g.a_name || op.chords.size() != k) continue;
        for (const DeltaTerm& t : walks) {
          if (t.labels != op.chords.chords) continue;  // idempotents never match
          toggle(from, index.at({op.output, t.target}));
        }
      }
    }
  }
  c.differential.assign(entries.begin(), entries.end());
  return c;
}

void check_complex(const BoxComplex& c) {
  std::map<std::size_t, std::set<std::size_t>> out;
  for (const auto& [i, j] : c.differential) out[i].insert(j);
  for (const auto& [i, js] : out) {
    std::map<std::size_t, int> counts;
    for (std::size_t j : js)
      if (out.count(j))
        for (std::size_t k : out.at(j)) counts[k]++;
    for (const auto& [k, n] : counts)
      if (n % 2 != 0)
        throw MathError("NotAComplex: d^2 != 0 from " +
                        c.generators[i].label() + " to " +
                        c.generators[k].label());
  }
}

PairingReport homology_impl(const BoxComplex& c, std::mt19937* rng) {
  check_complex(c);
  const std::size_t n = c.generators.size();
  std::vector<bool> alive(n, true);
  std::vector<std::set<std::size_t>> support(n);
  for (std::size_t i = 0; i < n; ++i) support[i] = {i};
  std::set<std::pair<std::size_t, std::size_t>> edges(c.differential.begin(),
                                                      c.differential.end());

  while (!edges.empty()) {
    std::pair<std::size_t, std::size_t> pick;
    if (rng) {
      std::uniform_int_distribution<std::size_t> dist(0, edges.size() - 1);
      pick = *std::next(edges.begin(),
                        static_cast<std::ptrdiff_t>(dist(*rng)));
    } else {
      // Lexicographically smallest by generator labels for determinism.
      pick = *std::min_element(
          edges.begin(), edges.end(), [&](const auto& x, const auto& y) {
            return std::make_pair(c.generators[x.first],
                                  c.generators[x.second]) <
                   std::make_pair(c.generators[y.first],
                                  c.generators[y.second]);
          });
    }
    auto [i, j] = pick;
    // Cancellation of the pair (i, j): every x with an arrow to j absorbs
    // d(i), and its representing cycle absorbs i.
    std::vector<std::size_t> into_j, out_of_i;
    for (const auto& [s, t] : edges) {
      if (t == j && s != i) into_j.push_back(s);
      if (s == i && t != j) out_of_i.push_back(t);
    }
    for (std::size_t x : into_j) {
      for (std::size_t y : out_of_i) {
        auto e = std::make_pair(x, y);
        if (!edges.erase(e)) edges.insert(e);
      }
      edges.erase({x, j});
      for (std::size_t s : support[i]) {
        if (support[x].count(s))
          support[x].erase(s);
        else
          support[x].insert(s);
      }
    }
    for (auto it = edges.begin(); it != edges.end();) {
      if (it->first == i || it->second == i || it->first == j ||
          it->second == j)
        it = edges.erase(it);
      else
        ++it;
    }
    alive[i] = alive[j] = false;
  }

  // Canonical form of each surviving cycle: echelon-reduce modulo the
  // boundary space of the original differential.  The elimination order
  // prefers to keep i1 generators (and small labels) in the support, which
  // is the convention the published survivor lists follow.
  auto prefer = [&](std::size_t x, std::size_t y) {
    int ix = c.generators[x].idempotent == Alg::I1 ? 0 : 1;
    int iy = c.generators[y].idempotent == Alg::I1 ? 0 : 1;
    return std::make_tuple(ix, c.generators[x]) <
           std::make_tuple(iy, c.generators[y]);
  };
  auto lead_of = [&](const std::set<std::size_t>& v) {
    return *std::max_element(v.begin(), v.end(),
                             [&](std::size_t x, std::size_t y) {
                               return prefer(x, y);
                             });
  };
  auto absorb = [](std::set<std::size_t>& v, const std::set<std::size_t>& w) {
    for (std::size_t s : w) {
      if (v.count(s))
        v.erase(s);
      else
        v.insert(s);
    }
  };
  std::map<std::size_t, std::set<std::size_t>> image;
  for (const auto& [i, j] : c.differential) image[i].insert(j);
  std::map<std::size_t, std::set<std::size_t>> echelon;  // lead -> vector
  for (auto& [i, v] : image) {
    std::set<std::size_t> w = v;
    while (!w.empty()) {
      std::size_t l = lead_of(w);
      auto it = echelon.find(l);
      if (it == echelon.end()) {
        echelon[l] = w;
        break;
      }
      absorb(w, it->second);
    }
  }
  auto reduce = [&](std::set<std::size_t> v) {
    bool changed = true;
    while (changed && !v.empty()) {
      changed = false;
      for (const auto& [l, b] : echelon) {
        if (v.count(l)) {
          absorb(v, b);
          changed = true;
        }
      }
    }
    return v;
  };

  PairingReport r;
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    Survivor s;
    std::set<std::size_t> canon = reduce(support[i]);
    for (std::size_t k : canon) s.support.push_back(c.generators[k]);
    std::sort(s.support.begin(), s.support.end());
    std::size_t best = *std::min_element(
        canon.begin(), canon.end(),
        [&](std::size_t x, std::size_t y) { return prefer(x, y); });
    s.representative = c.generators[best];
    r.surviving.push_back(std::move(s));
  }
  std::sort(r.surviving.begin(), r.surviving.end(),
            [](const Survivor& x, const Survivor& y) {
              return x.representative < y.representative;
            });
  return r;
}

CosetGrading survivor_grading(const BoxComplex& c, const Survivor& s) {
  if (!c.graded_a || !c.graded_d) throw MathError("MissingGradings");
  return CosetGrading{
      c.graded_a->indeterminacy, c.graded_d->indeterminacy,
      multiply(c.graded_a->gradings.at(s.representative.a_name),
               c.graded_d->gradings.at(s.representative.d_name))};
}

}  // namespace

BoxComplex box_tensor(const TypeAStructure& a, const TypeDStructure& d) {
  return box_tensor_impl(a, d);
}

BoxComplex box_tensor(const GradedTypeA& a, const GradedTypeD& d) {
  BoxComplex c = box_tensor_impl(a.structure, d.structure);
  c.graded_a = a;
  c.graded_d = d;
  return c;
}

PairingReport homology(const BoxComplex& c) { return homology_impl(c, nullptr); }

PairingReport homology(const BoxComplex& c, unsigned shuffle_seed) {
  std::mt19937 rng(shuffle_seed);
  return homology_impl(c, &rng);
}

void spinc_partition(const BoxComplex& c, PairingReport& r) {
  r.spinc_classes.clear();
  std::vector<CosetGrading> gr;
  for (const auto& s : r.surviving) gr.push_back(survivor_grading(c, s));
  for (std::size_t i = 0; i < r.surviving.size(); ++i) {
    bool placed = false;
    for (auto& cls : r.spinc_classes) {
      if (same_spinc(gr[cls.front()], gr[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) r.spinc_classes.push_back({i});
  }
}

void relative_gradings(const BoxComplex& c, PairingReport& r) {
  r.normalized_maslov.clear();
  for (const auto& s : r.surviving)
    r.normalized_maslov.push_back(normalize_spinc(survivor_grading(c, s)));
}

std::string pairing_report_json(const BoxComplex& c, const PairingReport& r) {
  nlohmann::json j;
  j["generator_count"] = c.generators.size();
  j["homology_dimension"] = r.surviving.size();
  nlohmann::json survivors = nlohmann::json::array();
  for (std::size_t i = 0; i < r.surviving.size(); ++i) {
    nlohmann::json s;
    s["name"] = r.surviving[i].representative.label();
    if (i < r.normalized_maslov.size())
      s["normalized_maslov"] = to_string(r.normalized_maslov[i]);
    survivors.push_back(s);
  }
  j["survivors"] = survivors;
  if (!r.spinc_classes.empty()) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : r.spinc_classes) {
      nlohmann::json cj;
      cj["dimension"] = cls.size();
      nlohmann::json members = nlohmann::json::array();
      for (std::size_t i : cls)
        members.push_back(r.surviving[i].representative.label());
      cj["members"] = members;
      classes.push_back(cj);
    }
    j["spinc_classes"] = classes;
    j["grading_comparison"] =
        "Q-grading differences reported between classes with the same "
        "restriction to both pieces";
  }
  return j.dump(2) + "\n";
}

}  // namespace bfh
