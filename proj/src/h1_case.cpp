#include "fourcolor/errors.hpp"
#include "fourcolor/four_color.hpp"
#include "listing.hpp"

namespace fourcolor {
namespace {

// a'(r) = a(perm[r-1]); both are automorphisms of H1 fixing w.
constexpr std::array<int, 6> kRotate3 = {4, 5, 6, 1, 2, 3};
constexpr std::array<int, 6> kFlip = {2, 1, 6, 5, 4, 3};

std::string d_name(int i) { return "D" + std::to_string(mod(i - 1, 6) + 1) + std::to_string(mod(i, 6) + 1); }
std::string f_name(int i) { return "F" + std::to_string(mod(i - 1, 6) + 1) + std::to_string(mod(i, 6) + 1); }

struct Branch {
  std::string id;
  const char* listing;
};

}  // namespace

Coloring color_h1_case(const Graph& g, const H1Partition& best, TraceRecord* trace) {
  TraceRecord local;
  TraceRecord& tr = trace ? *trace : local;
  tr.lemma = "h1";
  H1Partition p = best;

  const bool d45 = p.D(4).any();
  tr.predicate("D45_nonempty", d45);
  if (d45) {
    if (p.D(1).any()) throw InternalCaseFailure("h1", "D12 and D45 both non-empty", {p.D(1).first(), p.D(4).first()});
    p = relabel(g, p, kRotate3);
  }
  const bool t15 = is_complete_to(g, p.T(1), p.T(5));
  tr.predicate("T1_T5_complete", t15);
  if (!t15) {
    p = relabel(g, p, kFlip);
    if (!is_complete_to(g, p.T(1), p.T(5)))
      throw InternalCaseFailure("h1", "neither T1-T5 nor T2-T4 complete", *complete_violation(g, p.T(1), p.T(5)));
  }
  for (int i : {1, 5, 6})
    if (p.T(i).any()) throw InternalCaseFailure("h1", "T" + std::to_string(i) + " non-empty", {p.T(i).first()});
  tr.anchor = p.anchor;

  detail::ClassBuilder b(g, "h1");
  for (int i = 1; i <= 6; ++i) {
    b.define(d_name(i), p.D(i));
    b.define("T" + std::to_string(i), p.T(i));
    b.define(f_name(i), p.F(i));
    b.define(std::to_string(i), p.c(i));
  }
  b.define("W", p.W_with_anchor());
  b.define("Z", p.Z);

  auto empty = [&](int i) { return p.F(i).empty(); };
  auto anti = [&](const VertexSet& x, const VertexSet& y) { return is_anticomplete_to(g, x, y); };
  const bool d5661 = (p.D(5) | p.D(6)).any();
  auto split_d12 = [&](const VertexSet& against) {
    VertexSet d1 = anticomplete_part(g, p.D(1), against);
    b.define("D'12", d1);
    b.define("D''12", p.D(1) - d1);
  };
  auto pred = [&](const std::string& name, bool v) {
    tr.predicate(name, v);
    return v;
  };

  const bool f12 = !empty(1);
  const bool f45 = !empty(4);
  pred("F12_nonempty", f12);
  pred("F45_nonempty", f45);

  std::optional<Branch> branch;
  if (f12 && f45) {
    if (pred("F23_nonempty", !empty(2)) || (empty(3) && empty(5) && empty(6))) {
      branch = Branch{"1a", "F45 D23 D34 1 T4 | F23 D12 W 6 T3 | F12 4 5 T2 | D56 D61 2 3"};
    } else if (pred("F61_nonempty", !empty(6))) {
      if (pred("D56_D61_nonempty", d5661))
        branch = Branch{"1b", "F45 D56 D61 2 | F61 D12 W 3 | F12 4 5 | D23 D34 1 6"};
      else
        branch = Branch{"1c", "F45 1 2 T4 | F61 D12 W 3 | F12 4 5 T2 | D23 D34 6 T3"};
    } else if (pred("F34_nonempty", !empty(3))) {
      split_d12(p.F(3));
      branch = Branch{"1d", "F45 D23 D34 1 T4 | F34 D'12 W 6 T3 | F12 D''12 4 5 T2 | D56 D61 2 3"};
    } else {
      split_d12(p.F(5));
      branch = Branch{"1e", "F45 D56 D61 2 | F56 D'12 W 3 | F12 D''12 4 5 T2 | D23 D34 1 6 T3 T4"};
    }
  } else if (!f12 && !f45) {
    if (pred("F61_empty", empty(6))) {
      if (pred("D56_F56_anticomplete", anti(p.D(5), p.F(5))))
        branch = Branch{"2a", "F23 F34 W 6 T3 | F56 D56 2 3 | D12 D61 4 5 T2 | D23 D34 1 T4"};
      else if (pred("D34_F34_anticomplete", anti(p.D(3), p.F(3)))) {
        if (pred("D56_D61_nonempty", d5661))
          branch = Branch{"2b", "F23 F56 W | F34 D34 6 1 | D12 D23 4 5 | D56 D61 2 3"};
        else
          branch = Branch{"2c", "F23 D12 W 6 T3 | F34 D34 1 T4 | F56 2 3 | D23 4 5 T2"};
      }
    } else if (pred("F23_empty", empty(2))) {
      if (pred("D34_F34_anticomplete", anti(p.D(3), p.F(3)))) {
        if (pred("D56_D61_nonempty", d5661))
          branch = Branch{"2d", "F61 F56 W 3 | F34 D34 6 1 | D12 D23 4 5 | D61 D56 2"};
        else
          branch = Branch{"2e", "F61 F56 W 3 | F34 D34 6 T3 | D12 D23 4 5 T2 | 1 2 T4"};
      } else if (pred("D56_F56_anticomplete", anti(p.D(5), p.F(5)))) {
        branch = Branch{"2f", "F61 F34 W | F56 D56 2 3 | D12 D61 4 5 T2 | D23 D34 6 1 T3 T4"};
      }
    } else if (pred("F56_empty", empty(5))) {
      branch = Branch{"2g", "F34 F61 W | F23 D12 D23 5 6 T2 T3 | D34 1 2 T4 | D56 D61 3 4"};
    } else if (pred("F34_empty", empty(3))) {
      if (pred("D56_D61_nonempty", d5661))
        branch = Branch{"2h", "F56 F23 W | F61 D12 D61 3 4 | D56 1 2 | D34 D23 5 6"};
      else
        branch = Branch{"2i", "F56 F61 W 3 | F23 D12 6 T3 | D23 4 5 T2 | D34 1 2 T4"};
    }
  } else if (!f12) {
    if (pred("F56_empty", empty(5))) {
      if (pred("D61_F61_anticomplete", anti(p.D(6), p.F(6))))
        branch = Branch{"3a", "F23 F34 W 6 T3 | F61 D12 D61 3 4 | F45 D56 1 2 T4 | D23 D34 5 T2"};
      else if (pred("D23_F23_anticomplete", anti(p.D(2), p.F(2)))) {
        if (pred("D56_D61_nonempty", d5661))
          branch = Branch{"3b", "F34 F61 W | F23 D12 D23 5 6 | F45 D34 1 2 | D56 D61 3 4"};
        else
          branch = Branch{"3c", "F34 W 6 T3 | F23 D12 D23 5 T2 | F45 D34 1 2 T4 | F61 3 4"};
      }
    } else if (pred("F34_empty", empty(3))) {
      if (pred("D23_F23_anticomplete", anti(p.D(2), p.F(2)))) {
        if (pred("D56_D61_nonempty", d5661))
          branch = Branch{"3d", "F56 F61 W 3 | F23 D12 D23 5 6 | F45 D34 1 2 | D56 D61 4"};
        else
          branch = Branch{"3e", "F56 F61 W 3 | F23 D12 D23 6 T3 | F45 D34 1 2 T4 | 4 5 T2"};
      } else if (pred("D61_F61_anticomplete", anti(p.D(6), p.F(6)))) {
        branch = Branch{"3f", "F56 F23 W | F61 D12 D61 3 4 | F45 D56 1 2 T4 | D23 D34 5 6 T2 T3"};
      }
    }
  } else {
    split_d12(p.F(1));
    const bool both = !empty(3) && !empty(5);
    if (pred("F61_empty", empty(6))) {
      if (pred("F34_F56_nonempty", both)) {
        b.listing("F23 D12 W 6 T3 | F34 D34 1 T4 | F56 D56 2 3 | F12 4 5 T2");
        if (pred("D23_F34_anticomplete", anti(p.D(2), p.F(3)))) {
          b.add(2, "D23");
          b.add(4, "D61");
          tr.case_id = "4a1";
          b.set_case("h1/4a1");
        } else if (pred("D61_F56_anticomplete", anti(p.D(6), p.F(5)))) {
          b.add(3, "D61");
          b.add(4, "D23");
          tr.case_id = "4a2";
          b.set_case("h1/4a2");
        } else {
          throw InternalCaseFailure("h1/4a", "D23-F34 and D61-F56 both adjacent");
        }
        return b.finish();
      }
      if (pred("F56_empty", empty(5)))
        branch = Branch{"4b", "F12 D'12 4 5 T2 | F23 F34 D''12 W 6 T3 | D23 D34 1 T4 | D56 D61 2 3"};
      else
        branch = Branch{"4c", "F12 D23 D'12 4 5 T2 | F23 F56 D''12 W | D34 6 1 T3 T4 | D56 D61 2 3"};
    } else if (pred("F23_empty", empty(2))) {
      if (pred("F34_F56_nonempty", both)) {
        b.listing("F61 D12 W 3 | F56 D56 2 | F34 D34 6 1 T3 T4 | F12 4 5 T2");
        if (pred("D23_F34_anticomplete", anti(p.D(2), p.F(3)))) {
          b.add(3, "D23");
          b.add(4, "D61");
          tr.case_id = "4d1";
          b.set_case("h1/4d1");
        } else if (pred("D61_F56_anticomplete", anti(p.D(6), p.F(5)))) {
          b.add(2, "D61");
          b.add(4, "D23");
          tr.case_id = "4d2";
          b.set_case("h1/4d2");
        } else {
          throw InternalCaseFailure("h1/4d", "D23-F34 and D61-F56 both adjacent");
        }
        return b.finish();
      }
      if (pred("F56_nonempty", !empty(5)))
        branch = Branch{"4e", "F12 D'12 4 5 T2 | F61 F56 D''12 W 3 | D61 D56 2 | D23 D34 6 1 T3 T4"};
      else if (pred("D56_D61_nonempty", d5661))
        branch = Branch{"4f", "F12 D61 D'12 4 5 | F61 F34 D''12 W | D56 2 3 | D23 D34 6 1"};
      else
        branch = Branch{"4g", "F12 D23 D'12 4 5 T2 | F34 D''12 W 6 T3 | F61 3 | D34 1 2 T4"};
    }
  }

  if (!branch) throw InternalCaseFailure("h1", "no branch applies");
  tr.case_id = branch->id;
  b.set_case("h1/" + branch->id);
  b.listing(branch->listing);
  return b.finish();
}

}  // namespace fourcolor
