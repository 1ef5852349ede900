#include "fourcolor/errors.hpp"
#include "fourcolor/four_color.hpp"
#include "listing.hpp"

namespace fourcolor {
namespace {

// Reverses the cycle while keeping position 5: swaps 1<->4 and 2<->3.
constexpr std::array<int, 5> kReflect = {4, 3, 2, 1, 5};

void define_c5(detail::ClassBuilder& b, const C5Partition& p) {
  for (int i = 1; i <= 5; ++i) {
    const std::string k = std::to_string(i);
    b.define("R" + k, p.R(i));
    b.define("Y" + k, p.Y(i));
    b.define("F" + k, p.F(i));
    b.define(k, p.c(i));
  }
  b.define("U", p.U);
  b.define("Z", p.Z);
}

TraceRecord& use(TraceRecord* trace, TraceRecord& local, const char* lemma) {
  TraceRecord& tr = trace ? *trace : local;
  tr.lemma = lemma;
  return tr;
}

bool record(TraceRecord& tr, const std::string& name, bool v) {
  tr.predicate(name, v);
  return v;
}

// Every z is anti-complete to at least one of the given sets.
bool each_misses_one(const Graph& g, const VertexSet& zs, std::initializer_list<const VertexSet*> sets) {
  for (Vertex z : zs) {
    bool misses = false;
    for (const VertexSet* s : sets)
      if (!g.neighbors(z).intersects(*s)) misses = true;
    if (!misses) return false;
  }
  return true;
}

}  // namespace

Coloring color_h2_case(const Graph& g, const H2Anchor& best, TraceRecord* trace) {
  TraceRecord local;
  TraceRecord& tr = use(trace, local, "h2");
  C5Partition p = best.partition;
  const Vertex f = best.witness.vertices[5];
  auto anti = [&](const VertexSet& x, const VertexSet& y) { return is_anticomplete_to(g, x, y); };

  detail::ClassBuilder b(g, "h2");
  if (record(tr, "U_nonempty", p.U.any())) {
    tr.anchor = best.witness.vertices;
    define_c5(b, p);
    if (record(tr, "Y3_R2_anticomplete", anti(p.Y(3), p.R(2)))) {
      tr.case_id = "U.a";
      b.listing("Y1 Y4 U F5 | Y2 Y5 R1 1 | Y3 R2 R4 2 4 | R3 R5 Z 3 5");
    } else if (record(tr, "Y2_R3_anticomplete", anti(p.Y(2), p.R(3)))) {
      tr.case_id = "U.b";
      b.listing("Y1 Y4 U F5 | Y3 Y5 R4 4 | Y2 R1 R3 1 3 | R2 R5 Z 2 5");
    } else {
      throw InternalCaseFailure("h2/U", "Y3-R2 and Y2-R3 both adjacent");
    }
    b.set_case("h2/" + tr.case_id);
    return b.finish();
  }

  if (p.F(5).size() != 1) throw InternalCaseFailure("h2", "F5 is not a single vertex", p.F(5).to_vector());
  const VertexSet& nf = g.neighbors(f);
  auto R1 = [&](int i) { return p.R(i) & nf; };
  auto R2 = [&](int i) { return p.R(i) - nf; };
  auto reflect = [&]() {
    p = relabel(g, p, kReflect);
    tr.predicate("reflected", true);
  };
  // Reflect so that R''2 is empty.
  auto clear_r2 = [&]() {
    if (R2(2).any()) {
      if (R2(3).any()) throw InternalCaseFailure("h2", "R''2 and R''3 both non-empty", {R2(2).first(), R2(3).first()});
      reflect();
    }
  };
  auto define_all = [&]() {
    define_c5(b, p);
    for (int i : {2, 3, 5}) {
      b.define("R'" + std::to_string(i), R1(i));
      b.define("R''" + std::to_string(i), R2(i));
    }
  };

  if (!record(tr, "R'5_nonempty", R1(5).any())) {
    clear_r2();
    define_all();
    const VertexSet y2a = anticomplete_part(g, p.Y(2), p.Y(5));
    b.define("Y'2", y2a);
    b.define("Y''2", p.Y(2) - y2a);
    b.listing("Y'2 Y5 R1 1 | Y''2 Y4 3 | R2 R4 Y3 2 4 | Y1 R5 F5 5");
    b.extend(R1(3), {1, 2});
    b.extend(R2(3), {2, 4});
    if (record(tr, "Z_Y3_anticomplete", anti(p.Z, p.Y(3)))) {
      tr.case_id = "1.a";
      b.add(3, "Z");
    } else if (record(tr, "Z_each_misses_Y3_Y4_Y5", each_misses_one(g, p.Z, {&p.Y(3), &p.Y(4), &p.Y(5)}))) {
      tr.case_id = "1.b";
      b.extend(p.Z, {1, 2, 3});
    } else {
      tr.case_id = "1.c";
      b.listing("Y1 R5 Y4 F5 5 | Y3 R2 2 | R1 R4 Y5 1 4 | R3 Z 3");
    }
  } else {
    bool case21 = !record(tr, "R''2_Y3_anticomplete", anti(R2(2), p.Y(3)));
    if (!case21 && !record(tr, "R''3_Y2_anticomplete", anti(R2(3), p.Y(2)))) {
      reflect();
      case21 = true;
    }
    if (case21) {
      tr.case_id = "2.1";
      define_all();
      b.listing("R4 Y5 R1 1 4 | Y1 R''5 Y4 F5 5 | R3 Y2 3 | Y3 R'2 R'5 2");
      b.extend(p.Z, {3, 4});
      for (Vertex s : R2(2)) {
        VertexSet one(g.n());
        one.insert(s);
        if (g.neighbors(s).intersects(p.Y(3)))
          b.extend(one, {2});
        else
          b.extend(one, {4});
      }
    } else {
      clear_r2();
      define_all();
      const VertexSet y4a = anticomplete_part(g, p.Y(4), p.Y(1));
      b.define("Y'4", y4a);
      const VertexSet y4b = p.Y(4) - y4a;
      b.define("Y''4", y4b);
      b.listing("R4 Y5 R1 1 4 | Y1 R''5 Y'4 F5 5 | R3 Y2 Y''4 3 | Y3 R'2 R'5 2");
      if (record(tr, "Z_Y3_anticomplete", anti(p.Z, p.Y(3)))) {
        tr.case_id = "2.2.a";
        b.add(4, "Z");
      } else if (record(tr, "Z_each_misses_Y3_Y''4_Y5",
                        each_misses_one(g, p.Z, {&p.Y(3), &y4b, &p.Y(5)}))) {
        tr.case_id = "2.2.b";
        b.extend(p.Z, {4, 3, 1});
      } else {
        tr.case_id = "2.2.c";
        b.listing("R4 Y5 R1 1 4 | Y1 R''5 Y4 F5 5 | R3 Z 3 | Y3 R'2 R'5 2");
      }
    }
  }
  tr.anchor = p.cycle;
  tr.anchor.push_back(f);
  b.set_case("h2/" + tr.case_id);
  return b.finish();
}

Coloring color_w5_case(const Graph& g, const C5Partition& rim, TraceRecord* trace) {
  TraceRecord local;
  TraceRecord& tr = use(trace, local, "w5");
  tr.case_id = "main";
  tr.anchor = rim.cycle;
  if (rim.U.any()) tr.anchor.push_back(rim.U.first());
  detail::ClassBuilder b(g, "w5");
  define_c5(b, rim);
  b.listing("R1 R3 Z 1 3 | R2 Y3 R4 2 4 | Y1 R5 Y4 5 | Y2 Y5 U");
  return b.finish();
}

Coloring color_c5_case(const Graph& g, const C5Partition& part, TraceRecord* trace) {
  TraceRecord local;
  TraceRecord& tr = use(trace, local, "c5");
  C5Partition p = part;

  // A Z vertex seeing four of the Y sets; rotate its missing index to 5.
  int missing = 0;
  for (Vertex z : p.Z) {
    int seen = 0, gap = 0;
    for (int i = 1; i <= 5; ++i) {
      if (g.neighbors(z).intersects(p.Y(i)))
        ++seen;
      else
        gap = i;
    }
    if (seen >= 4) {
      if (seen == 5) throw InternalCaseFailure("c5", "Z vertex sees all five Y sets", {z});
      missing = gap;
      break;
    }
  }
  if (record(tr, "Z_vertex_sees_four_Y", missing != 0) && missing != 5) {
    std::array<int, 5> rot{};
    for (int r = 1; r <= 5; ++r) rot[r - 1] = mod(r + missing - 1, 5) + 1;
    p = relabel(g, p, rot);
  }
  tr.anchor = p.cycle;

  detail::ClassBuilder b(g, "c5");
  define_c5(b, p);
  const VertexSet y4a = anticomplete_part(g, p.Y(4), p.Y(1));
  const VertexSet r4a = anticomplete_part(g, p.R(4), p.R(1));
  b.define("Y'4", y4a);
  b.define("Y''4", p.Y(4) - y4a);
  b.define("R'4", r4a);
  b.define("R''4", p.R(4) - r4a);

  if (missing != 0) {
    tr.case_id = "1";
    b.listing("Y1 R5 Y'4 5 | Y2 R3 Y''4 3 | R1 Z R'4 1 | R2 Y3 R''4 2 4");
  } else {
    tr.case_id = "2";
    b.listing("Y1 R5 Y'4 5 | Y2 R3 Y''4 3 | R1 Y5 R'4 1 | R2 Y3 R''4 2 4");
    VertexSet z1(g.n());
    for (Vertex z : p.Z)
      if (!g.neighbors(z).intersects(p.Y(3)) || !g.neighbors(z).intersects(p.Y(5))) z1.insert(z);
    b.extend(z1, {3, 4});
    b.extend(p.Z - z1, {1, 2});
  }
  b.set_case("c5/" + tr.case_id);
  return b.finish();
}

}  // namespace fourcolor
