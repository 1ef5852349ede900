#include "fourcolor/structure.hpp"

namespace fourcolor {
namespace {

using Violation = std::optional<std::vector<Vertex>>;

Violation independent_violation(const Graph& g, const VertexSet& s) {
  for (Vertex x : s) {
    VertexSet hit = g.neighbors(x) & s;
    if (hit.any()) return std::vector<Vertex>{x, hit.first()};
  }
  return std::nullopt;
}

// Every x in s is anti-complete to a or to b.
Violation each_anti_to_one(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b) {
  for (Vertex x : s) {
    VertexSet na = g.neighbors(x) & a;
    VertexSet nb = g.neighbors(x) & b;
    if (na.any() && nb.any()) return std::vector<Vertex>{x, na.first(), nb.first()};
  }
  return std::nullopt;
}

// Either (a1, b1) or (a2, b2) is anti-complete.
Violation either_anti(const Graph& g, const VertexSet& a1, const VertexSet& b1, const VertexSet& a2,
                      const VertexSet& b2) {
  auto v1 = anticomplete_violation(g, a1, b1);
  auto v2 = anticomplete_violation(g, a2, b2);
  if (!v1 || !v2) return std::nullopt;
  v1->insert(v1->end(), v2->begin(), v2->end());
  return v1;
}

Violation must_be_empty(const VertexSet& s) {
  if (s.empty()) return std::nullopt;
  return std::vector<Vertex>{s.first()};
}

Violation one_empty(const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) return std::nullopt;
  return std::vector<Vertex>{a.first(), b.first()};
}

Violation one_empty(const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  if (a.empty() || b.empty() || c.empty()) return std::nullopt;
  return std::vector<Vertex>{a.first(), b.first(), c.first()};
}

// Both sets complete to each other or one side empty; the claims need each
// vertex of `a` to have a non-neighbour (or neighbour) in `b`.
Violation each_has_nonneighbor(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex x : a)
    if (b.is_subset_of(g.neighbors(x))) return std::vector<Vertex>{x};
  return std::nullopt;
}

Violation each_has_neighbor(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex x : a)
    if (!g.neighbors(x).intersects(b)) return std::vector<Vertex>{x};
  return std::nullopt;
}

Violation first_of(std::initializer_list<Violation> vs) {
  for (const auto& v : vs)
    if (v) return v;
  return std::nullopt;
}

}  // namespace

PropertyReport check_c5_properties(const Graph& g, const C5Partition& p) {
  PropertyReport rep;
  const bool h1_free = !find_induced(g, Pattern::H1).has_value();
  for (int i = 1; i <= 5; ++i) {
    rep.record("Z+R(i) independent", independent_violation(g, p.Z | p.R(i)));
    rep.record("U+Y(i), U+F(i) independent",
               first_of({independent_violation(g, p.U | p.Y(i)), independent_violation(g, p.U | p.F(i))}));
    rep.record("R(i)-R(i+1) complete", complete_violation(g, p.R(i), p.R(i + 1)));
    rep.record("Y(i)-Y(i+1) complete", complete_violation(g, p.Y(i), p.Y(i + 1)));
    rep.record("R(i)-Y(i) complete", complete_violation(g, p.R(i), p.Y(i)));
    rep.record("R(i)-Y(i+1) or R(i+1)-Y(i) anticomplete",
               either_anti(g, p.R(i), p.Y(i + 1), p.R(i + 1), p.Y(i)));
    rep.record("Y(i) vertex anticomplete to Y(i-2) or Y(i+2)", each_anti_to_one(g, p.Y(i), p.Y(i - 2), p.Y(i + 2)));
    rep.record("F(i) vs Y", first_of({complete_violation(g, p.F(i), p.Y(i - 2) | p.Y(i + 2)),
                                      anticomplete_violation(g, p.F(i), p.Y(i - 1) | p.Y(i) | p.Y(i + 1))}));
    rep.record("F(i)-R(i-1)+R(i+1) complete", complete_violation(g, p.F(i), p.R(i - 1) | p.R(i + 1)));
    rep.record("U nonempty: Y(i)-Y(i+2) anticomplete",
               p.U.empty() ? std::nullopt : anticomplete_violation(g, p.Y(i), p.Y(i + 2)));
    rep.record("F(i) or F(i+2) empty", one_empty(p.F(i), p.F(i + 2)));
    Violation frv;
    if (h1_free && p.F(i).any())
      frv = first_of({anticomplete_violation(g, p.R(i + 1), p.Y(i + 2) | p.Y(i)),
                      anticomplete_violation(g, p.R(i - 1), p.Y(i - 2) | p.Y(i))});
    rep.record("H1-free, F(i) nonempty: R(i+1), R(i-1) avoid Y", frv);
    rep.record("R(i) vertex anticomplete to Y(i+1) or Y(i+2), and to Y(i-1) or Y(i-2)",
               first_of({each_anti_to_one(g, p.R(i), p.Y(i + 1), p.Y(i + 2)),
                         each_anti_to_one(g, p.R(i), p.Y(i - 1), p.Y(i - 2))}));
  }
  return rep;
}

PropertyReport check_h1_properties(const Graph& g, const H1Partition& p) {
  PropertyReport rep;
  const VertexSet W = p.W_with_anchor();
  auto D = [&](int i) -> const VertexSet& { return p.D(i); };
  auto T = [&](int i) -> const VertexSet& { return p.T(i); };
  auto F = [&](int i) -> const VertexSet& { return p.F(i); };

  VertexSet all_d(g.n()), all_t(g.n());
  for (int i = 1; i <= 6; ++i) {
    all_d |= D(i);
    all_t |= T(i);
  }

  {
    Violation v = first_of({independent_violation(g, p.Z), independent_violation(g, W)});
    for (int i = 1; i <= 6 && !v; ++i)
      v = first_of({independent_violation(g, D(i)), independent_violation(g, T(i)), independent_violation(g, F(i))});
    rep.record("sets independent", v);
  }
  rep.record("W-Z anticomplete", anticomplete_violation(g, W, p.Z));
  rep.record("W vs D", first_of({complete_violation(g, W, D(2) | D(3) | D(5) | D(6)),
                                 anticomplete_violation(g, W, D(1) | D(4))}));
  rep.record("W vs T", first_of({complete_violation(g, W, T(1) | T(2) | T(4) | T(5)),
                                 anticomplete_violation(g, W, T(3) | T(6))}));
  rep.record("W vs F", first_of({anticomplete_violation(g, W, F(2) | F(3) | F(5) | F(6)),
                                 complete_violation(g, W, F(1) | F(4))}));
  rep.record("Z-D+T+F(2,3,5,6) anticomplete",
             anticomplete_violation(g, p.Z, all_d | all_t | F(2) | F(3) | F(5) | F(6)));
  rep.record("Z empty", must_be_empty(p.Z));

  for (int i = 1; i <= 6; ++i) {
    rep.record("D(i) vs D", first_of({anticomplete_violation(g, D(i), D(i + 1)), complete_violation(g, D(i), D(i + 2)),
                                      anticomplete_violation(g, D(i), D(i + 3))}));
    rep.record("F(i) vs F", first_of({anticomplete_violation(g, F(i), F(i + 1) | F(i + 3)),
                                      complete_violation(g, F(i), F(i + 2))}));
    rep.record("T(i)-T(i+3) complete", complete_violation(g, T(i), T(i + 3)));
    rep.record("D(i) vs T", first_of({anticomplete_violation(g, D(i), T(i - 1) | T(i) | T(i + 1) | T(i + 2)),
                                      complete_violation(g, D(i), T(i + 3) | T(i + 4))}));
    rep.record("F(i) vs T", first_of({anticomplete_violation(g, F(i), T(i) | T(i + 1)),
                                      complete_violation(g, F(i), T(i + 3) | T(i + 4))}));
  }
  rep.record("T1-T2, T4-T5 anticomplete",
             first_of({anticomplete_violation(g, T(1), T(2)), anticomplete_violation(g, T(4), T(5))}));
  rep.record("T3-T1+T5, T6-T2+T4 complete",
             first_of({complete_violation(g, T(3), T(1) | T(5)), complete_violation(g, T(6), T(2) | T(4))}));
  rep.record("F vs T extra", first_of({complete_violation(g, F(2), T(1)), complete_violation(g, F(5), T(4)),
                                       complete_violation(g, F(3), T(5)), complete_violation(g, F(6), T(2))}));
  rep.record("D vs F",
             first_of({anticomplete_violation(g, D(1), F(6) | F(2)), complete_violation(g, D(1), F(4)),
                       anticomplete_violation(g, D(4), F(3) | F(5)), complete_violation(g, D(4), F(1)),
                       anticomplete_violation(g, D(2), F(1)), complete_violation(g, D(2), F(5) | F(6)),
                       anticomplete_violation(g, D(3), F(4)), complete_violation(g, D(3), F(5) | F(6)),
                       anticomplete_violation(g, D(6), F(1)), complete_violation(g, D(6), F(2) | F(3)),
                       anticomplete_violation(g, D(5), F(4)), complete_violation(g, D(5), F(2) | F(3))}));

  rep.record("D12 or D45 empty", one_empty(D(1), D(4)));
  rep.record("T1/T5, T2/T4 non-neighbours",
             first_of({each_has_nonneighbor(g, T(1), T(5)), each_has_nonneighbor(g, T(5), T(1)),
                       each_has_nonneighbor(g, T(2), T(4)), each_has_nonneighbor(g, T(4), T(2))}));
  rep.record("T6, T3 neighbours",
             first_of({each_has_neighbor(g, T(6), T(1) | T(5)), each_has_neighbor(g, T(3), T(2) | T(4))}));
  rep.record("D56+D61 nonempty: T2-T4 complete, D23+D34 nonempty: T1-T5 complete",
             first_of({(D(5) | D(6)).any() ? complete_violation(g, T(2), T(4)) : std::nullopt,
                       (D(2) | D(3)).any() ? complete_violation(g, T(1), T(5)) : std::nullopt}));
  rep.record("one of F61 F12 F23 empty, one of F34 F45 F56 empty",
             first_of({one_empty(F(6), F(1), F(2)), one_empty(F(3), F(4), F(5))}));
  {
    auto a = complete_violation(g, T(1), T(5));
    auto b = complete_violation(g, T(2), T(4));
    Violation v;
    if (a && b) {
      v = *a;
      v->insert(v->end(), b->begin(), b->end());
    }
    rep.record("T1-T5 or T2-T4 complete", v);
  }
  return rep;
}

PropertyReport check_h2_properties(const Graph& g, const H2Anchor& a) {
  PropertyReport rep;
  const C5Partition& p = a.partition;
  const Vertex f = a.witness.vertices[5];
  auto R = [&](int i) -> const VertexSet& { return p.R(i); };
  auto Y = [&](int i) -> const VertexSet& { return p.Y(i); };

  rep.record("apex in F5", p.F(5).contains(f) ? std::nullopt : Violation(std::vector<Vertex>{f}));
  rep.record("F(i) empty for i != 5",
             first_of({must_be_empty(p.F(1)), must_be_empty(p.F(2)), must_be_empty(p.F(3)), must_be_empty(p.F(4))}));
  VertexSet all_r(g.n());
  for (int i = 1; i <= 5; ++i) all_r |= R(i);
  rep.record("U-R complete", complete_violation(g, p.U, all_r));
  if (p.U.any()) {
    Violation v;
    for (int i = 1; i <= 5 && !v; ++i) v = anticomplete_violation(g, R(i), R(i + 2));
    rep.record("U nonempty: R(i)-R(i+2) anticomplete", v);
    return rep;
  }

  {
    Violation v;
    for (Vertex r : R(2) | R(3)) {
      VertexSet hit = g.neighbors(r) & p.F(5);
      if (hit.any() && hit != p.F(5)) v = std::vector<Vertex>{r, hit.first(), (p.F(5) - hit).first()};
      if (v) break;
    }
    rep.record("R2+R3 vertex complete or anticomplete to F5", v);
  }
  rep.record("F5 = {apex}", p.F(5).size() == 1 ? std::nullopt : Violation(p.F(5).to_vector()));

  const VertexSet& nf = g.neighbors(f);
  auto prime = [&](int i) { return R(i) & nf; };
  auto dprime = [&](int i) { return R(i) - nf; };

  rep.record("R'5-R'2+R'3 anticomplete", anticomplete_violation(g, prime(5), prime(2) | prime(3)));
  rep.record("R'5-Y2+Y3 anticomplete", anticomplete_violation(g, prime(5), Y(2) | Y(3)));
  rep.record("R'2-R4, R'3-R1 anticomplete",
             first_of({anticomplete_violation(g, prime(2), R(4)), anticomplete_violation(g, prime(3), R(1))}));
  rep.record("R''5-R''2+R''3 anticomplete", anticomplete_violation(g, dprime(5), dprime(2) | dprime(3)));
  rep.record("Y5-R''2+R''3 anticomplete", anticomplete_violation(g, Y(5), dprime(2) | dprime(3)));
  rep.record("R''5-Y1+Y4 anticomplete", anticomplete_violation(g, dprime(5), Y(1) | Y(4)));
  rep.record("R''2-Y1, R''3-Y4 anticomplete",
             first_of({anticomplete_violation(g, dprime(2), Y(1)), anticomplete_violation(g, dprime(3), Y(4))}));
  rep.record("R'2-Y3, R'3-Y2 anticomplete",
             first_of({anticomplete_violation(g, prime(2), Y(3)), anticomplete_violation(g, prime(3), Y(2))}));
  rep.record("Y5-R'2+R'3 complete", complete_violation(g, Y(5), prime(2) | prime(3)));
  rep.record("Z vertex anticomplete to Y2 or Y3", each_anti_to_one(g, p.Z, Y(2), Y(3)));
  {
    Violation v;
    for (Vertex z : p.Z) {
      for (int i = 1; i <= 5 && !v; ++i) {
        VertexSet rest = g.neighbors(z) - Y(i);
        for (Vertex y : Y(i) - g.neighbors(z)) {
          VertexSet missing = rest - g.neighbors(y);
          if (missing.any()) {
            v = std::vector<Vertex>{z, y, missing.first()};
            break;
          }
        }
      }
      if (v) break;
    }
    rep.record("Z non-neighbour in Y(i) complete to the rest of N(z)", v);
  }
  {
    Violation v;
    for (Vertex z : p.Z) {
      for (int i : {2, 3})
        if (!g.neighbors(z).intersects(Y(i)) && Y(i).any()) v = std::vector<Vertex>{z, Y(i).first()};
      if (v) break;
    }
    rep.record("Z anticomplete to Y2 or Y3 forces it empty", v);
  }
  rep.record("Y5 nonempty", Y(5).any() ? std::nullopt : Violation(std::vector<Vertex>{p.c(5)}));
  rep.record("R''2 or R''3 empty", one_empty(dprime(2), dprime(3)));
  rep.record("R'5 nonempty: R1-R4 anticomplete",
             prime(5).any() ? anticomplete_violation(g, R(1), R(4)) : std::nullopt);
  return rep;
}

}  // namespace fourcolor
