#include <gtest/gtest.h>

#include <algorithm>

#include "paclogic/masking.hpp"
#include "paclogic/parser.hpp"
#include "paclogic/scenarios.hpp"
#include "oracle.hpp"

using namespace paclogic;

namespace {

TEST(ApplyMask, PositiveOnlyRareChain) {
  Example chain = gen_rare_chain(5);
  MaskedExample m = apply_mask(Masker::positive_only({"rare", "e"}), chain);
  ASSERT_EQ(m.literals.size(), 5u);
  EXPECT_TRUE(m.contains(Literal{Atom{"rare", {"c1"}}, true}));
  EXPECT_TRUE(m.contains(Literal{Atom{"e", {"c1", "c2"}}, true}));
  EXPECT_TRUE(m.contains(Literal{Atom{"e", {"c4", "c5"}}, true}));
  for (const Literal& l : m.literals) EXPECT_TRUE(l.positive);
}

TEST(ApplyMask, IdentityIsCompleteDescription) {
  Example ex = parse_example(
      "domain: alice bob eve\n"
      "fr(alice,bob).\n"
      "sm(alice).\n"
      "sm(eve).\n");
  MaskedExample m = apply_mask(Masker::identity(), ex);
  // 9 fr atoms + 3 sm atoms, each with its true sign
  ASSERT_EQ(m.literals.size(), 12u);
  std::size_t positive = std::count_if(m.literals.begin(), m.literals.end(),
                                       [](const Literal& l) { return l.positive; });
  EXPECT_EQ(positive, 3u);
  EXPECT_TRUE(m.contains(Literal{Atom{"fr", {"bob", "alice"}}, false}));
  EXPECT_TRUE(m.contains(Literal{Atom{"sm", {"bob"}}, false}));
}

TEST(ApplyMask, RandomDropZeroKeepsNothing) {
  Example ex = gen_rare_chain(4);
  MaskedExample m = apply_mask(Masker::random_drop(0.0, 7), ex);
  EXPECT_TRUE(m.literals.empty());
  EXPECT_EQ(m.domain, ex.domain());
}

TEST(ApplyMask, RandomDropOneKeepsEverything) {
  Example ex = gen_rare_chain(4);
  MaskedExample all = apply_mask(Masker::identity(), ex);
  MaskedExample m = apply_mask(Masker::random_drop(1.0, 7), ex);
  EXPECT_EQ(m, all);
}

TEST(ApplyMask, RandomDropDeterministic) {
  Example ex = gen_rare_chain(6);
  EXPECT_EQ(apply_mask(Masker::random_drop(0.5, 11), ex),
            apply_mask(Masker::random_drop(0.5, 11), ex));
}

TEST(ApplyMask, LiteralListValidatesTruth) {
  Example ex = gen_rare_chain(3);
  Masker good = Masker::literal_list(
      {Literal{Atom{"rare", {"c1"}}, true}, Literal{Atom{"rare", {"c2"}}, false}});
  MaskedExample m = apply_mask(good, ex);
  EXPECT_EQ(m.literals.size(), 2u);
  Masker bad = Masker::literal_list({Literal{Atom{"rare", {"c2"}}, true}});
  EXPECT_THROW(apply_mask(bad, ex), std::invalid_argument);
  Masker outside = Masker::literal_list({Literal{Atom{"rare", {"zz"}}, true}});
  EXPECT_THROW(apply_mask(outside, ex), std::invalid_argument);
}

// Soundness: the parent example models every literal any masker emits.
TEST(ApplyMask, SoundnessProperty) {
  SplitMix64 rng(31);
  for (int i = 0; i < 100; ++i) {
    auto inst = oracle::random_instance(rng.next(), 5, 2);
    for (const Masker& m :
         {Masker::identity(), Masker::positive_only({"sm", "e"}),
          Masker::random_drop(0.5, rng.next())}) {
      MaskedExample masked = apply_mask(m, inst.example);
      for (const Literal& l : masked.literals)
        ASSERT_TRUE(inst.example.holds(l)) << l.str();
    }
  }
}

TEST(MaskRestrict, KEntailmentExample) {
  Example ups = parse_example("domain: alice bob eve\nfr(alice,bob).\nsm(alice).\n");
  MaskedExample m = apply_mask(Masker::positive_only({"fr", "sm"}), ups);
  MaskedExample r = mask_restrict(m, {"alice", "bob"});
  EXPECT_EQ(r.domain, (std::vector<std::string>{"alice", "bob"}));
  ASSERT_EQ(r.literals.size(), 2u);
  EXPECT_TRUE(r.contains(Literal{Atom{"fr", {"alice", "bob"}}, true}));
  EXPECT_TRUE(r.contains(Literal{Atom{"sm", {"alice"}}, true}));
}

TEST(MaskRestrict, FullDomainIsIdentity) {
  Example ex = gen_rare_chain(4);
  MaskedExample m = apply_mask(Masker::identity(), ex);
  EXPECT_EQ(mask_restrict(m, m.domain), m);
}

TEST(MaskRestrict, ChainPairKeepsOnlyInnerEdge) {
  Example chain = gen_rare_chain(5);
  MaskedExample m = apply_mask(Masker::positive_only({"rare", "e"}), chain);
  MaskedExample r = mask_restrict(m, {"c2", "c3"});
  ASSERT_EQ(r.literals.size(), 1u);
  EXPECT_EQ(r.literals[0], (Literal{Atom{"e", {"c2", "c3"}}, true}));
}

TEST(MaskRestrict, OutsideDomainRejected) {
  Example ex = gen_rare_chain(3);
  MaskedExample m = apply_mask(Masker::identity(), ex);
  EXPECT_THROW(mask_restrict(m, {"zz"}), std::invalid_argument);
}

// Restriction commutes with identity masking.
TEST(MaskRestrict, CommutesWithIdentityMask) {
  SplitMix64 rng(47);
  for (int i = 0; i < 60; ++i) {
    auto inst = oracle::random_instance(rng.next(), 5, 2);
    const auto& dom = inst.example.domain();
    std::vector<std::string> s;
    for (const std::string& c : dom)
      if (rng.below(2) == 0) s.push_back(c);
    MaskedExample a = mask_restrict(apply_mask(Masker::identity(), inst.example), s);
    MaskedExample b = apply_mask(Masker::identity(), restrict_example(inst.example, s).example);
    ASSERT_EQ(a.literals, b.literals);
  }
}

// Monotonicity: a larger restriction keeps a superset of the literals.
TEST(MaskRestrict, MonotoneInSubset) {
  SplitMix64 rng(53);
  for (int i = 0; i < 60; ++i) {
    auto inst = oracle::random_instance(rng.next(), 5, 2);
    MaskedExample m = apply_mask(Masker::random_drop(0.6, rng.next()), inst.example);
    const auto& dom = inst.example.domain();
    std::vector<std::string> small, large;
    for (const std::string& c : dom) {
      bool in_small = rng.below(2) == 0;
      if (in_small) small.push_back(c);
      if (in_small || rng.below(2) == 0) large.push_back(c);
    }
    MaskedExample ms = mask_restrict(m, small);
    MaskedExample ml = mask_restrict(m, large);
    for (const Literal& l : ms.literals) ASSERT_TRUE(ml.contains(l));
  }
}

TEST(MaskPrinting, RoundTrip) {
  Example chain = gen_rare_chain(4);
  MaskedExample m = apply_mask(Masker::identity(), chain);
  ParsedMask back = parse_masked_literals(print_masked(m));
  EXPECT_EQ(back.domain, m.domain);
  EXPECT_EQ(back.literals, m.literals);
}

}  // namespace
