#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "sclp/sclp.hpp"

using namespace sclp;

namespace {

Value n(long long v) { return ExtInt(v); }
Value inf() { return ExtInt::pos_inf(); }
Value q(long long a, long long b) { return Rational(a, b); }
Value set(std::initializer_list<const char*> items) {
  SymbolSet s;
  for (const char* i : items) s.items.insert(i);
  return s;
}

std::string table_path(const char* name) { return std::string(SCLP_PROGRAMS_DIR) + "/" + name; }

}  // namespace

TEST(NaturalOrder, OptUsesWitness) {
  auto opt = opt_semiring();
  EXPECT_TRUE(natural_leq(*opt, n(5), n(2)));
  EXPECT_FALSE(natural_leq(*opt, n(2), n(5)));
}

TEST(NaturalOrder, OptClosedFormAgreesWithWitnessSearch) {
  // min(x, z) = y for some z in {0..10, inf}
  auto opt = opt_semiring();
  std::vector<Value> dom;
  for (int k = 0; k <= 10; ++k) dom.push_back(n(k));
  dom.push_back(inf());
  for (const auto& x : dom) {
    for (const auto& y : dom) {
      bool witness = std::any_of(dom.begin(), dom.end(), [&](const Value& z) {
        const auto& a = std::get<ExtInt>(x);
        const auto& b = std::get<ExtInt>(z);
        return Value(a < b ? a : b) == y;
      });
      EXPECT_EQ(natural_leq(*opt, x, y), witness) << to_string(x) << " " << to_string(y);
    }
  }
}

TEST(NaturalOrder, ZeroIsBelowEverything) {
  for (const char* name : {"bool", "fuzzy-grid:4", "nat-trunc:3", "opt-trunc:5", "powerset:a,b", "int-inf"}) {
    auto s = make_semiring(name);
    std::vector<Value> dom = s->is_finite() ? s->enumerate() : std::vector<Value>{n(-3), n(0), n(4), inf()};
    for (const auto& x : dom) {
      EXPECT_TRUE(natural_leq(*s, s->zero, x)) << name << " " << to_string(x);
      EXPECT_TRUE(natural_leq(*s, x, x)) << name;
    }
  }
}

TEST(NaturalOrder, TableSemiringUsesExhaustiveSearch) {
  auto z5 = load_table_semiring_file(table_path("z5.sr"));
  // 2 + 1 = m2 and m2 + 2 = 0, so the natural order relates every pair.
  EXPECT_TRUE(natural_leq(*z5, Symbol{"2"}, Symbol{"m2"}));
  EXPECT_TRUE(natural_leq(*z5, Symbol{"m2"}, Symbol{"2"}));
}

TEST(NaturalOrder, InfiniteWithoutClosedFormIsNotEnumerable) {
  auto s = std::make_shared<SemiringSpec>(*nat_inf_semiring());
  s->natural_leq_closed_form = nullptr;
  try {
    natural_leq(*s, n(1), n(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_enumerable);
  }
}

TEST(COrder, Examples) {
  EXPECT_TRUE(c_leq(*boolean_semiring(), false, true));
  EXPECT_TRUE(c_leq(*fuzzy_semiring(), q(3, 10), q(7, 10)));
  EXPECT_FALSE(c_leq(*nat_inf_semiring(), n(2), n(3)));
}

TEST(OrdersCoincide, IdempotentCarriers) {
  EXPECT_EQ(check_orders_coincide(*boolean_semiring()).verdict, Verdict::holds);
  EXPECT_EQ(check_orders_coincide(*make_semiring("powerset:a,b")).verdict, Verdict::holds);
  EXPECT_NE(check_orders_coincide(*make_semiring("powerset:a,b")).detail.find("16 pairs"), std::string::npos);
}

TEST(OrdersCoincide, SkippedWithoutIdempotentAdd) {
  auto z5 = load_table_semiring_file(table_path("z5.sr"));
  auto r = check_orders_coincide(*z5);
  EXPECT_EQ(r.verdict, Verdict::skipped);
  EXPECT_EQ(r.detail, "precondition idempotent_add not met");
}

TEST(AdditiveInverses, Boolean) {
  auto r = check_no_additive_inverses(*boolean_semiring());
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_TRUE(r.lemma_consistent);
}

TEST(AdditiveInverses, ModularTableFailsAntisymmetryToo) {
  auto z5 = load_table_semiring_file(table_path("z5.sr"));
  auto r = check_no_additive_inverses(*z5);
  EXPECT_EQ(r.verdict, Verdict::fails);
  EXPECT_TRUE(r.lemma_consistent);
  EXPECT_NE(r.detail.find("not antisymmetric"), std::string::npos);
  ASSERT_EQ(r.counterexample.size(), 2U);
  EXPECT_EQ(z5->add(r.counterexample[0], r.counterexample[1]), z5->zero);
}

TEST(AdditiveInverses, TrivialSemiring) {
  TableDefinition def;
  def.name = "trivial";
  def.elements = {"0"};
  def.zero = "0";
  def.one = "0";
  def.add[{"0", "0"}] = "0";
  def.mul[{"0", "0"}] = "0";
  auto s = make_table_semiring(def);
  EXPECT_EQ(check_no_additive_inverses(*s).verdict, Verdict::holds);
}

TEST(MonotoneOps, OptTruncated) {
  EXPECT_EQ(check_monotone_ops(*opt_semiring(5)).verdict, Verdict::holds);
  EXPECT_EQ(opt_semiring(5)->enumerate().size(), 7U);
}

TEST(MonotoneOps, SignedIntegersFailUnderNegativeMultiplier) {
  auto z = int_inf_semiring();
  std::vector<Value> dom{ExtInt::neg_inf(), n(-2), n(-1), n(0), n(1), n(2), inf()};
  auto r = check_monotone_ops(*z, dom);
  EXPECT_EQ(r.verdict, Verdict::fails);
  EXPECT_NE(r.detail.find("x not monotone"), std::string::npos);
}

TEST(MonotoneOps, Boolean) { EXPECT_EQ(check_monotone_ops(*boolean_semiring()).verdict, Verdict::holds); }

TEST(PositivelyOrdered, Examples) {
  EXPECT_EQ(check_positively_ordered(*opt_semiring()).verdict, Verdict::holds);
  EXPECT_EQ(check_positively_ordered(*opt_semiring(5)).verdict, Verdict::holds);
  EXPECT_EQ(check_positively_ordered(*int_inf_semiring()).verdict, Verdict::fails);
  EXPECT_EQ(check_positively_ordered(*boolean_semiring()).verdict, Verdict::holds);
  std::vector<Value> dom{n(-1), n(0), n(1)};
  auto r = check_positively_ordered(*int_inf_semiring(), dom);
  EXPECT_EQ(r.verdict, Verdict::fails);
  EXPECT_EQ(r.counterexample.front(), n(-1));
}

TEST(CompleteLattice, PowerSetOfThree) {
  auto r = check_complete_lattice(*make_semiring("powerset:a,b,c"));
  EXPECT_EQ(r.verdict, Verdict::holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, set({"a", "b", "c"}));
  EXPECT_NE(r.detail.find("absorbing for +"), std::string::npos);
}

TEST(CompleteLattice, Boolean) {
  auto r = check_complete_lattice(*boolean_semiring());
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(*r.witness, Value(true));
}

TEST(CompleteLattice, TableWithoutAbsorbingElement) {
  auto x = load_table_semiring_file(table_path("xor.sr"));
  EXPECT_EQ(check_complete_lattice(*x).verdict, Verdict::fails);
  EXPECT_EQ(check_natural_top_absorbing(*x, x->enumerate()).verdict, Verdict::skipped);
  EXPECT_FALSE(x->lattice.has_value());
}

TEST(CompleteLattice, LargeCarrierIsSampled) {
  auto s = fuzzy_semiring(20);
  EXPECT_EQ(s->enumerate().size(), 21U);
  EXPECT_EQ(check_complete_lattice(*s).verdict, Verdict::holds);
}

TEST(Catalog, InfiniteBuiltinsSatisfyLawsOnSamples) {
  for (const char* name : {"fuzzy", "nat-inf", "opt", "int-inf"}) {
    auto r = check_semiring_laws_sampled(*make_semiring(name), 7, 1000);
    EXPECT_EQ(r.verdict, Verdict::holds) << name << ": " << r.detail;
  }
}

TEST(Catalog, FiniteBuiltinsSatisfyLawsExhaustively) {
  for (const char* name : {"bool", "fuzzy-grid:4", "nat-trunc:3", "opt-trunc:5", "powerset:a,b,c"}) {
    auto s = make_semiring(name);
    auto r = check_semiring_laws(*s, s->enumerate());
    EXPECT_EQ(r.verdict, Verdict::holds) << name << ": " << r.detail;
  }
}

TEST(Catalog, ZeroAbsorbsOnSamples) {
  std::mt19937_64 rng(11);
  for (const char* name : {"bool", "fuzzy", "nat-inf", "opt", "powerset:a,b", "int-inf"}) {
    auto s = make_semiring(name);
    for (int i = 0; i < 1000; ++i) {
      Value x = s->sample ? s->sample(rng) : s->enumerate()[i % s->enumerate().size()];
      EXPECT_EQ(s->mul(x, s->zero), s->zero) << name;
      EXPECT_EQ(s->mul(s->zero, x), s->zero) << name;
    }
  }
}

TEST(Catalog, NaturalBottomIsUnique) {
  for (const char* name : {"bool", "fuzzy-grid:4", "nat-trunc:3", "opt-trunc:5", "powerset:a,b"}) {
    auto s = make_semiring(name);
    EXPECT_EQ(check_natural_bottom_is_zero(*s, s->enumerate()).verdict, Verdict::holds) << name;
  }
}

TEST(Catalog, IdempotentImpliesNaturalPartialOrder) {
  for (const char* name : {"bool", "fuzzy-grid:4", "opt-trunc:5", "powerset:a,b", "table:chain3"}) {
    auto s = std::string(name) == "table:chain3" ? load_table_semiring_file(table_path("chain3.sr")) : make_semiring(name);
    auto r = check_idempotent_naturally_ordered(*s, s->enumerate());
    EXPECT_EQ(r.verdict, Verdict::holds) << name;
    EXPECT_EQ(check_orders_coincide(*s).verdict, Verdict::holds) << name;
  }
}

TEST(Catalog, GlbIsLubOfLowerBounds) {
  for (const char* name : {"bool", "fuzzy-grid:4", "opt-trunc:5", "nat-trunc:3", "powerset:a,b,c"}) {
    auto s = make_semiring(name);
    const auto& lat = s->lattice_ops();
    const auto& dom = s->enumerate();
    for (const auto& sub : detail::lattice_subsets(dom)) {
      std::vector<Value> lower;
      for (const auto& z : dom) {
        if (std::all_of(sub.begin(), sub.end(), [&](const Value& x) { return s->leq(z, x); })) lower.push_back(z);
      }
      EXPECT_EQ(lat.glb(sub), lat.lub(lower)) << name;
      for (const auto& x : sub) {
        EXPECT_TRUE(s->leq(lat.glb(sub), x));
        EXPECT_TRUE(s->leq(x, lat.lub(sub)));
      }
    }
    EXPECT_EQ(lat.glb({}), lat.top);
    EXPECT_EQ(lat.lub({}), lat.bottom);
  }
}

TEST(Catalog, OptOrderIsReversedCost) {
  auto opt = opt_semiring();
  EXPECT_TRUE(opt->leq(inf(), n(3)));
  EXPECT_TRUE(opt->leq(n(3), n(2)));
  EXPECT_FALSE(opt->leq(n(2), n(3)));
  const auto& lat = opt->lattice_ops();
  std::vector<Value> xs{n(2), n(1)};
  EXPECT_EQ(lat.glb(xs), n(2));
  EXPECT_EQ(lat.bottom, inf());
  EXPECT_EQ(lat.top, n(0));
}

TEST(Catalog, CarrierMembership) {
  EXPECT_FALSE(fuzzy_semiring()->contains(q(3, 2)));
  EXPECT_FALSE(nat_inf_semiring()->contains(n(-1)));
  EXPECT_FALSE(fuzzy_semiring(4)->contains(q(1, 3)));
  EXPECT_TRUE(fuzzy_semiring(4)->contains(q(3, 4)));
  EXPECT_FALSE(make_semiring("powerset:a,b")->contains(set({"c"})));
  EXPECT_THROW(nat_inf_semiring()->require_member(n(-1)), Error);
}

TEST(Catalog, LiteralsRoundTrip) {
  for (const char* name : {"bool", "fuzzy", "nat-inf", "opt", "powerset:a,b", "int-inf"}) {
    auto s = make_semiring(name);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
      Value v = s->sample ? s->sample(rng) : s->enumerate()[i % s->enumerate().size()];
      auto back = s->read_literal(to_string(v));
      ASSERT_TRUE(back) << name << " " << to_string(v);
      EXPECT_EQ(*back, v);
    }
  }
}

TEST(Catalog, UnknownNames) {
  for (const char* name : {"reals", "opt-trunc:x", "fuzzy-grid:0", ""}) {
    try {
      make_semiring(name);
      FAIL() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::unknown_semiring);
    }
  }
}

TEST(Catalog, IntervalsFollowDeclaredOrder) {
  auto opt = opt_semiring();
  auto xs = interval_values(*opt, n(4), n(2), 100);
  EXPECT_EQ(xs, (std::vector<Value>{n(4), n(3), n(2)}));
  EXPECT_THROW(interval_values(*opt, inf(), n(2), 100), Error);
  auto z = int_inf_semiring();
  EXPECT_EQ(interval_values(*z, n(-1), n(1), 100).size(), 3U);
  EXPECT_THROW(interval_values(*fuzzy_semiring(), q(0, 1), q(1, 1), 100), Error);
  EXPECT_EQ(interval_values(*make_semiring("powerset:a,b"), set({}), set({"a", "b"}), 100).size(), 4U);
}

TEST(TableFormat, LoadsAndComputesFlags) {
  auto c = load_table_semiring_file(table_path("chain3.sr"));
  EXPECT_EQ(c->name, "chain3");
  EXPECT_EQ(c->enumerate().size(), 3U);
  EXPECT_EQ(c->flags.idempotent_add, Tri::asserted);
  EXPECT_EQ(c->flags.positively_ordered, Tri::asserted);
  EXPECT_EQ(c->flags.complete_lattice, Tri::asserted);
  EXPECT_EQ(c->add(Symbol{"lo"}, Symbol{"mid"}), Value(Symbol{"mid"}));
  EXPECT_TRUE(c->leq(Symbol{"lo"}, Symbol{"hi"}));
  auto z5 = load_table_semiring_file(table_path("z5.sr"));
  EXPECT_EQ(z5->flags.idempotent_add, Tri::denied);
  EXPECT_EQ(z5->flags.positively_ordered, Tri::denied);
}

TEST(TableFormat, MissingEntryIsALoadError) {
  const char* text =
      "semiring broken\nelements 0 1\nzero 0\none 1\n"
      "add 0 0 = 0\nadd 0 1 = 1\nadd 1 0 = 1\n"
      "mul 0 0 = 0\nmul 0 1 = 0\nmul 1 0 = 0\nmul 1 1 = 1\n";
  try {
    load_table_semiring(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::table_load_error);
    EXPECT_NE(std::string(e.what()).find("add"), std::string::npos);
  }
}

TEST(TableFormat, PseudoSemiringIsRejected) {
  // Saturating addition on {-2..2} is not associative: (2 + 2) + -1 = 1 but 2 + (2 + -1) = 2.
  std::string text = "semiring sat\nelements m2 m1 0 1 2\nzero 0\none 1\n";
  const char* names[] = {"m2", "m1", "0", "1", "2"};
  auto clamp = [](int v) { return std::max(-2, std::min(2, v)); };
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      text += std::string("add ") + names[a + 2] + " " + names[b + 2] + " = " + names[clamp(a + b) + 2] + "\n";
      text += std::string("mul ") + names[a + 2] + " " + names[b + 2] + " = " + names[clamp(a * b) + 2] + "\n";
    }
  }
  try {
    load_table_semiring(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::table_load_error);
    EXPECT_NE(std::string(e.what()).find("is not a semiring"), std::string::npos);
  }
}

TEST(TableFormat, SyntaxErrorsNameTheLine) {
  try {
    load_table_semiring("semiring t\nelements 0 1\nzero 0\none 1\nadd 0 0 0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::table_load_error);
    EXPECT_NE(std::string(e.what()).find("5"), std::string::npos);
  }
  EXPECT_THROW(load_table_semiring_file("/nonexistent/t.sr"), Error);
}
