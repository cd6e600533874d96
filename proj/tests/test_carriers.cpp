#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "xisigma/carriers.hpp"
#include "xisigma/error.hpp"

using namespace xisigma;

namespace {

PointLabel n(std::uint64_t v) { return PointLabel::natural(v); }

SymbolicSet pos(const CarrierPtr& c, std::vector<PointLabel> b) { return SymbolicSet::of(c, std::move(b)); }
SymbolicSet co(const CarrierPtr& c, std::vector<PointLabel> b) { return SymbolicSet::co(c, std::move(b)); }

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("complement, union and intersection normal forms on the naturals") {
  const auto nat = Carrier::naturals();
  CHECK(complement(pos(nat, {n(2), n(5)})) == co(nat, {n(2), n(5)}));
  CHECK(unite(pos(nat, {n(1)}), co(nat, {n(1), n(3)})) == co(nat, {n(3)}));
  CHECK(intersect(co(nat, {n(1)}), co(nat, {n(2)})) == co(nat, {n(1), n(2)}));
  CHECK(normalize(SetExpr::complement(SetExpr::leaf(pos(nat, {n(2), n(5)})))) == co(nat, {n(2), n(5)}));
  CHECK(normalize(SetExpr::unite(SetExpr::leaf(pos(nat, {n(1)})), SetExpr::leaf(co(nat, {n(1), n(3)})))) ==
        co(nat, {n(3)}));
}

TEST_CASE("membership") {
  const auto nat = Carrier::naturals();
  CHECK(member(n(3), co(nat, {n(1), n(2)})));
  CHECK_FALSE(member(n(1), co(nat, {n(1), n(2)})));
  CHECK(member(n(7), pos(nat, {n(7)})));
  const auto fin = Carrier::finite({"a", "b"});
  CHECK(throws_kind(ErrorKind::UnknownPoint, [&] { member("z", pos(fin, {"a"})); }));
}

TEST_CASE("finite carriers stay positive") {
  const auto fin = Carrier::finite({"a", "b", "c"});
  const auto all = complement(SymbolicSet::empty(fin));
  CHECK(all.polarity() == Polarity::Positive);
  CHECK(all.base().size() == 3);
  CHECK(SymbolicSet::all(fin) == all);
}

TEST_CASE("mixed carriers are rejected") {
  const auto a = Carrier::naturals();
  const auto b = Carrier::omega({"p"});
  CHECK(throws_kind(ErrorKind::CarrierMismatch, [&] { unite(pos(a, {}), pos(b, {})); }));
  CHECK(throws_kind(ErrorKind::CarrierMismatch, [&] {
    normalize(SetExpr::intersect(SetExpr::leaf(pos(a, {})), SetExpr::leaf(pos(b, {}))));
  }));
}

TEST_CASE("labels order naturals numerically before names") {
  CHECK(n(2) < n(10));
  CHECK(n(10) < PointLabel("a"));
  CHECK(PointLabel("10").is_natural());
  CHECK(PointLabel("x") < PointLabel("y"));
}

// Oracle: evaluate each expression pointwise on every named point plus one fresh generic point.
TEST_CASE("normalize agrees with pointwise evaluation") {
  std::mt19937_64 rng(17);
  const std::vector<CarrierPtr> carriers = {Carrier::naturals({"w"}), Carrier::omega({"p", "q", "r"}),
                                            Carrier::finite({"a", "b", "c", "d"})};
  for (const auto& c : carriers) {
    std::vector<PointLabel> universe = c->named();
    if (c->kind() == CarrierKind::CountableNat)
      for (std::uint64_t v = 0; v < 4; ++v) universe.push_back(n(v));
    std::uniform_int_distribution<int> coin(0, 1);
    auto random_set = [&] {
      std::vector<PointLabel> b;
      for (const auto& x : universe)
        if (coin(rng)) b.push_back(x);
      return c->is_infinite() && coin(rng) ? co(c, b) : pos(c, b);
    };
    struct Leafed {
      SetExpr expr;
      std::function<bool(const PointLabel*)> eval;
    };
    std::function<Leafed(int)> build = [&](int depth) -> Leafed {
      std::uniform_int_distribution<int> op(0, depth == 0 ? 0 : 3);
      switch (op(rng)) {
        case 0: {
          const auto s = random_set();
          return {SetExpr::leaf(s), [s](const PointLabel* x) { return x ? member(*x, s) : member_generic(s); }};
        }
        case 1: {
          auto a = build(depth - 1);
          return {SetExpr::complement(a.expr), [f = a.eval](const PointLabel* x) { return !f(x); }};
        }
        case 2: {
          auto a = build(depth - 1);
          auto b = build(depth - 1);
          return {SetExpr::unite(a.expr, b.expr), [f = a.eval, g = b.eval](const PointLabel* x) { return f(x) || g(x); }};
        }
        default: {
          auto a = build(depth - 1);
          auto b = build(depth - 1);
          return {SetExpr::intersect(a.expr, b.expr),
                  [f = a.eval, g = b.eval](const PointLabel* x) { return f(x) && g(x); }};
        }
      }
    };
    for (int trial = 0; trial < 300; ++trial) {
      const auto e = build(3);
      const auto s = normalize(e.expr);
      for (const auto& x : universe) CHECK(member(x, s) == e.eval(&x));
      if (c->is_infinite()) CHECK(member_generic(s) == e.eval(nullptr));
      CHECK(complement(complement(s)) == s);
      CHECK(normalize(SetExpr::leaf(s)) == s);
    }
  }
}

TEST_CASE("De Morgan on random normal forms") {
  std::mt19937_64 rng(5);
  const auto nat = Carrier::naturals();
  std::uniform_int_distribution<int> coin(0, 1);
  auto random_set = [&] {
    std::vector<PointLabel> b;
    for (std::uint64_t v = 0; v < 6; ++v)
      if (coin(rng)) b.push_back(n(v));
    return coin(rng) ? co(nat, b) : pos(nat, b);
  };
  for (int k = 0; k < 200; ++k) {
    const auto a = random_set();
    const auto b = random_set();
    CHECK(complement(unite(a, b)) == intersect(complement(a), complement(b)));
    CHECK(complement(intersect(a, b)) == unite(complement(a), complement(b)));
  }
}

TEST_CASE("set literals") {
  const auto nat = Carrier::naturals({"w"});
  CHECK(parse_set(nat, "{1,2}") == pos(nat, {n(1), n(2)}));
  CHECK(parse_set(nat, "co{1,w}") == co(nat, {n(1), "w"}));
  CHECK(parse_set(nat, "all") == SymbolicSet::all(nat));
  CHECK(parse_set(nat, "{}").is_empty());
  CHECK(pos(nat, {n(1), n(2)}).to_string() == "{1,2}");
  CHECK(co(nat, {n(1), n(3)}).to_string() == "co{1,3}");
  CHECK(throws_kind(ErrorKind::Parse, [&] { parse_set(nat, "{v}"); }));
  CHECK(throws_kind(ErrorKind::Parse, [&] { parse_set(nat, "1,2"); }));
}

TEST_CASE("periodic families") {
  const auto nat = Carrier::naturals({"w"});
  const Subset ev = evens(nat);
  CHECK(member(n(4), ev));
  CHECK_FALSE(member(n(3), ev));
  CHECK_FALSE(is_finite(ev));
  const Subset with_w = make_periodic(nat, 2, {0}, {"w"});
  CHECK(includes(with_w, ev));
  CHECK_FALSE(includes(ev, with_w));
  CHECK(witness_of_difference(with_w, ev) == PointLabel("w"));
  CHECK(same_set(make_periodic(nat, 2, {0, 1}), Subset(co(nat, {"w"}))));
  CHECK(same_set(unite(ev, make_periodic(nat, 2, {1}, {"w"})), Subset(SymbolicSet::all(nat))));
}
