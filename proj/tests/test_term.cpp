#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ua/error.hpp"
#include "ua/term.hpp"

using namespace ua;

namespace {

const OpSymbol Z{0}, S{1};
const OpSymbol F{0}, A{1}, B{2};

Term T(const Signature& sig, OpList l) { return Term::from_oplist(sig, std::move(l)); }

std::size_t count_step(OpSymbol, std::span<const std::size_t> rs) {
  std::size_t n = 1;
  for (auto r : rs) n += r;
  return n;
}

std::size_t depth_step(OpSymbol, std::span<const std::size_t> rs) {
  std::size_t m = 0;
  for (auto r : rs) m = std::max(m, r);
  return 1 + m;
}

}  // namespace

TEST_CASE("smart constructor rejects non-terms") {
  const Signature nat = nat_signature();
  CHECK_NOTHROW(T(nat, {S, Z}));
  try {
    T(nat, {Z, S});
    FAIL("expected status-mismatch error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::status_mismatch);
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS(T(nat, {}), Error);
  CHECK_THROWS_AS(T(nat, {Z, Z}), Error);
}

TEST_CASE("build_term") {
  const Signature nat = nat_signature();
  CHECK(build_term(nat, Z, {}) == T(nat, {Z}));
  const Term three = T(nat, {S, S, S, Z});
  CHECK(build_term(nat, S, std::span(&three, 1)) == T(nat, {S, S, S, S, Z}));

  const Signature bin = oracle::binary();
  const std::vector<Term> kids{T(bin, {A}), T(bin, {B})};
  CHECK(build_term(bin, F, kids) == T(bin, {F, A, B}));

  try {
    build_term(bin, F, std::span(kids).first(1));
    FAIL("expected arity-mismatch error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::arity_mismatch);
    CHECK(std::string(e.what()).find("expects 2") != std::string::npos);
    CHECK(std::string(e.what()).find("got 1") != std::string::npos);
  }
}

TEST_CASE("destructure") {
  const Signature nat = nat_signature();
  {
    auto [nm, kids] = destructure(nat, T(nat, {Z}));
    CHECK(nm == Z);
    CHECK(kids.empty());
  }
  {
    const OpList ssz{S, S, Z};
    auto facts = oracle::term_factorizations(nat, std::span(ssz).subspan(1));
    REQUIRE(facts.size() == 1);
    auto [nm, kids] = destructure(nat, T(nat, ssz));
    CHECK(nm == S);
    REQUIRE(kids.size() == 1);
    CHECK(OpList(kids[0].ops().begin(), kids[0].ops().end()) == facts[0][0]);
    CHECK(kids[0] == T(nat, {S, Z}));
  }
  {
    const Signature bin = oracle::binary();
    auto [nm, kids] = destructure(bin, T(bin, {F, A, B}));
    CHECK(nm == F);
    CHECK(kids == std::vector<Term>{T(bin, {A}), T(bin, {B})});
  }
}

TEST_CASE("round trips through build and destructure") {
  for (const auto& sig : oracle::corpus()) {
    for (const auto& t : enumerate_terms(sig, 8)) {
      auto [nm, kids] = destructure(sig, t);
      REQUIRE(build_term(sig, nm, kids) == t);
      auto [nm2, kids2] = destructure(sig, build_term(sig, nm, kids));
      REQUIRE(nm2 == nm);
      REQUIRE(kids2 == kids);
    }
  }
}

TEST_CASE("fold and depth examples") {
  const Signature nat = nat_signature();
  const Term four = T(nat, {S, S, S, S, Z});
  CHECK(fold<std::size_t>(nat, count_step, T(nat, {Z})) == 1);
  CHECK(fold<std::size_t>(nat, depth_step, four) == 5);
  CHECK(depth(nat, four) == 5);
  CHECK(depth(nat, T(nat, {Z})) == 1);

  const Signature bin = oracle::binary();
  const OpList fab{F, A, B};
  const auto tree = oracle::parse_tree(bin, fab);
  REQUIRE(tree);
  CHECK(oracle::tree_size(*tree) == 3);
  CHECK(oracle::tree_depth(*tree) == 2);
  CHECK(count_nodes(bin, T(bin, fab)) == 3);
  CHECK(depth(bin, T(bin, fab)) == 2);
}

TEST_CASE("fold passes children in argument order") {
  const Signature sig = oracle::ternary();  // g:3 h:1 c:0 d:0
  const Term t = T(sig, {OpSymbol{0}, OpSymbol{2}, OpSymbol{1}, OpSymbol{3}, OpSymbol{2}});
  auto show = [&](OpSymbol nm, std::span<const std::string> rs) {
    std::string s = sig.name(nm);
    if (rs.empty()) return s;
    s += '(';
    for (std::size_t i = 0; i < rs.size(); ++i) s += (i ? "," : "") + rs[i];
    return s + ')';
  };
  CHECK(fold<std::string>(sig, show, t) == "g(c,h(d),c)");
}

TEST_CASE("fold agrees with tree recursion on all short terms") {
  for (const auto& sig : oracle::corpus()) {
    for (const auto& t : enumerate_terms(sig, 8)) {
      const auto tree = oracle::parse_tree(sig, t.ops());
      REQUIRE(tree);
      REQUIRE(depth(sig, t) == oracle::tree_depth(*tree));
      REQUIRE(count_nodes(sig, t) == oracle::tree_size(*tree));
      REQUIRE(depth(sig, t) == oracle::destructure_fold<std::size_t>(sig, depth_step, t));
    }
  }
}

TEST_CASE("fold-step law on children up to length 6") {
  for (const auto& sig : oracle::corpus()) {
    const auto pool = enumerate_terms(sig, 6);
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const OpSymbol nm = sig.symbol(i);
      const std::size_t a = sig.arity(nm);
      if (a > 2) continue;  // arity 3 is run exhaustively by the acceptance suite
      std::vector<std::size_t> pick(a, 0);
      for (;;) {
        std::vector<Term> kids;
        for (auto p : pick) kids.push_back(pool[p]);
        const Term t = build_term(sig, nm, kids);
        for (auto step : {&count_step, &depth_step}) {
          std::vector<std::size_t> rs;
          for (const auto& k : kids) rs.push_back(fold<std::size_t>(sig, *step, k));
          REQUIRE(fold<std::size_t>(sig, *step, t) == (*step)(nm, rs));
        }
        std::size_t k = a;
        while (k > 0 && ++pick[k - 1] == pool.size()) pick[--k] = 0;
        if (k == 0) break;
      }
    }
  }
}

TEST_CASE("deep chains do not grow the call stack") {
  const Signature nat = nat_signature();
  OpList chain(1'000'000, S);
  chain.push_back(Z);
  const Term t = T(nat, std::move(chain));
  CHECK(depth(nat, t) == 1'000'001);
  auto [nm, kids] = destructure(nat, t);
  CHECK(nm == S);
  CHECK(kids[0].size() == 1'000'000);
}

TEST_CASE("enumerate_terms examples") {
  const Signature nat = nat_signature();
  CHECK(enumerate_terms(nat, 3) ==
        std::vector<Term>{T(nat, {Z}), T(nat, {S, Z}), T(nat, {S, S, Z})});
  CHECK(oracle::filtered_terms(nat, 3) == std::vector<OpList>{{Z}, {S, Z}, {S, S, Z}});
  CHECK(enumerate_terms(make_signature({}), 5).empty());
  const Signature ab = make_signature({{"a", 0}, {"b", 0}});
  CHECK(enumerate_terms(ab, 1) == std::vector<Term>{T(ab, {OpSymbol{0}}), T(ab, {OpSymbol{1}})});
  CHECK(enumerate_terms(nat, 0).empty());
}

TEST_CASE("enumerate_terms matches brute-force filtering") {
  for (const auto& sig : oracle::corpus()) {
    const auto got = enumerate_terms(sig, 8);
    const auto want = oracle::filtered_terms(sig, 8);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      REQUIRE(OpList(got[i].ops().begin(), got[i].ops().end()) == want[i]);
    }
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("nat has exactly one term of each length") {
  const Signature nat = nat_signature();
  const auto terms = enumerate_terms(nat, 12);
  REQUIRE(terms.size() == 12);
  for (std::size_t n = 1; n <= 12; ++n) {
    OpList want(n - 1, S);
    want.push_back(Z);
    CHECK(terms[n - 1] == T(nat, want));
  }
}

TEST_CASE("enumeration limit") {
  const Signature nat = nat_signature();
  try {
    enumerate_terms(nat, 13);
    FAIL("expected limit-exceeded error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::limit_exceeded);
  }
  CHECK(enumerate_terms(nat, 20, 20).size() == 20);
}
