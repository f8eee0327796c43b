#include "doctest.h"

#include <random>

#include "fe_oracle.hpp"
#include "wildpi/error.hpp"
#include "wildpi/relcalc.hpp"

using namespace wildpi;

namespace {

Point A(const char *id) { return Point::atom(id); }
XLetter pos(const char *id) { return {A(id), Sign::plus}; }
XLetter neg(const char *id) { return {A(id), Sign::minus}; }

EquivRelation ab_c() { return EquivRelation::finite_partition({{"a", "b"}, {"c"}}); }

// Literal reading: find the leftmost cancelling pair, delete, restart.
XWord leftmost_deletion(const EquivRelation &E, XWord w) {
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < w.size() &&
           !(w[i].sign != w[i + 1].sign && E.related(w[i].point, w[i + 1].point)))
      ++i;
    if (i + 1 >= w.size())
      return w;
    w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
  }
}

XWord random_xword(std::mt19937_64 &rng, const std::vector<std::string> &atoms,
                   std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, atoms.size() - 1);
  std::bernoulli_distribution sign(0.5);
  XWord w(len(rng), pos("a"));
  for (auto &l : w)
    l = {Point::atom(atoms[pick(rng)]), sign(rng) ? Sign::minus : Sign::plus};
  return w;
}

std::string kind_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  return "";
}

} // namespace

TEST_CASE("sequence points normalize") {
  CHECK(Point::sequence("0", "10") == Point::sequence("", "01"));
  CHECK(Point::sequence("", "0101") == Point::sequence("", "01"));
  CHECK(Point::sequence("11", "01") != Point::sequence("", "01"));
  CHECK(Point::sequence("1", "1").prefix().empty());
  CHECK(kind_of([] { Point::sequence("0", ""); }) == "InvalidPoint");
  CHECK(kind_of([] { Point::sequence("2", "0"); }) == "InvalidPoint");
}

TEST_CASE("e_related") {
  auto id = EquivRelation::identity();
  CHECK(e_related(id, A("x"), A("x")));
  CHECK_FALSE(e_related(id, A("x"), A("y")));

  auto e0 = EquivRelation::e0();
  // 0(01)^w = 0 0 1 0 1 ..., (01)^w = 0 1 0 1 ...: disagree at every n >= 1.
  CHECK_FALSE(e_related(e0, Point::sequence("0", "01"), Point::sequence("", "01")));
  // 11(01)^w and (01)^w agree from position 2 on.
  CHECK(e_related(e0, Point::sequence("11", "01"), Point::sequence("", "01")));
  CHECK(e_related(e0, Point::sequence("0110", "1"), Point::sequence("", "1")));
  CHECK(e_related(e0, Point::sequence("", "01"), Point::sequence("1", "10")));
  CHECK(kind_of([&] { e_related(e0, A("a"), A("a")); }) == "UniverseMismatch");
  CHECK(kind_of([&] { e_related(ab_c(), A("a"), A("z")); }) == "UniverseMismatch");
}

TEST_CASE("E0 agrees with a long finite comparison") {
  std::mt19937_64 rng(31);
  auto rand_bits = [&](std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> len(lo, hi);
    std::string s(len(rng), '0');
    for (auto &c : s)
      c = rng() & 1 ? '1' : '0';
    return s;
  };
  for (int i = 0; i < 500; ++i) {
    auto x = Point::sequence(rand_bits(0, 4), rand_bits(1, 3));
    auto y = Point::sequence(rand_bits(0, 4), rand_bits(1, 3));
    // Agreement on [20, 200) decides eventual agreement for these sizes.
    bool agree = true;
    for (std::size_t n = 20; n < 200; ++n)
      agree = agree && x.bit(n) == y.bit(n);
    CHECK(e_related(EquivRelation::e0(), x, y) == agree);
  }
}

TEST_CASE("e_normal_form examples") {
  auto E = ab_c();
  CHECK(e_normal_form(E, {pos("a"), neg("b"), pos("c")}).letters() == XWord{pos("c")});
  CHECK(e_normal_form(E, {}).empty());
  CHECK(e_normal_form(E, {pos("a"), pos("c"), neg("c"), neg("b")}).empty());
  CHECK(kind_of([&] { e_normal_form(E, {pos("z")}); }) == "UniverseMismatch");
  CHECK(kind_of([&] {
          e_normal_form(EquivRelation::identity(),
                        {pos("a"), {Point::sequence("", "1"), Sign::plus}});
        }) == "UniverseMismatch");
}

TEST_CASE("stack normal form equals literal leftmost deletion") {
  auto E = EquivRelation::finite_partition({{"a", "b", "d"}, {"c"}, {"e"}});
  std::mt19937_64 rng(77);
  for (int i = 0; i < 2000; ++i) {
    auto w = random_xword(rng, {"a", "b", "c", "d", "e"}, 14);
    auto nf = e_normal_form(E, w);
    CHECK(nf.letters() == leftmost_deletion(E, w));
    CHECK(is_normal(E, nf.letters()));
    CHECK(e_normal_form(E, nf.letters()) == nf);
  }
}

TEST_CASE("fe_equivalent examples") {
  auto E = ab_c();
  CHECK(fe_equivalent(E, {pos("a"), pos("c")}, {pos("b"), pos("c")}));
  CHECK_FALSE(fe_equivalent(E, {pos("a")}, {neg("a")}));
  CHECK_FALSE(fe_equivalent(E, {pos("a")}, {pos("c")}));
}

TEST_CASE("fx_multiply, fx_invert, embed_point") {
  CHECK(fx_multiply({pos("a")}, {neg("a")}).empty());
  CHECK(fx_multiply({pos("a")}, {neg("b")}) == XWord{pos("a"), neg("b")});
  CHECK(fx_multiply({pos("a")}, {}) == XWord{pos("a")});
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto u = random_xword(rng, {"a", "b", "c"}, 12);
    CHECK(fx_multiply(u, fx_invert(u)).empty());
  }

  auto E = EquivRelation::finite_partition({{"p", "q"}, {"r"}, {"s"}});
  const std::vector<std::string> atoms{"p", "q", "r", "s"};
  for (const auto &x : atoms)
    for (const auto &y : atoms)
      CHECK(E.related(A(x.c_str()), A(y.c_str())) ==
            fe_equivalent(E, embed_point(A(x.c_str())), embed_point(A(y.c_str()))));
  CHECK(fx_invert(fx_invert(embed_point(A("p")))) == embed_point(A("p")));
  CHECK_FALSE(fe_equivalent(E, embed_point(A("r")), embed_point(A("s"))));
}

TEST_CASE("product_view_equal") {
  auto E = ab_c();
  CHECK(product_view_equal(E, {pos("a"), pos("c")}, {pos("b"), pos("c")}));
  CHECK_FALSE(product_view_equal(E, {pos("a")}, {neg("a")}));
  CHECK_FALSE(product_view_equal(E, {pos("a")}, {pos("c")}));
  CHECK(kind_of([&] { product_view_equal(E, {pos("a"), neg("b")}, {}); }) ==
        "NotNormal");
}

TEST_CASE("quotient_word") {
  auto E = ab_c();
  CHECK(quotient_word(E, {pos("a"), neg("b")}).empty());
  CHECK(quotient_word(E, {pos("c")}) == XWord{pos("c")});
  CHECK(quotient_word(E, {pos("b"), pos("c")}) == XWord{pos("a"), pos("c")});
  CHECK(kind_of([] {
          quotient_word(EquivRelation::e0(), {{Point::sequence("", "1"), Sign::plus}});
        }) == "NoCanonicalRep");
}

TEST_CASE("fe_equivalent is an equivalence and a congruence") {
  auto E = ab_c();
  std::mt19937_64 rng(13);
  const std::vector<std::string> atoms{"a", "b", "c"};
  for (int i = 0; i < 500; ++i) {
    auto u = random_xword(rng, atoms, 6);
    auto v = random_xword(rng, atoms, 6);
    auto w = random_xword(rng, atoms, 6);
    // Make v equivalent to u half of the time: swap a<->b and pad a b^-1.
    if (i % 2 == 0) {
      v = u;
      for (auto &l : v)
        if (l.point.id() != "c")
          l.point = A(l.point.id() == "a" ? "b" : "a");
      v.insert(v.begin() + static_cast<long>(v.size() / 2), {pos("a"), neg("b")});
    }
    CHECK(fe_equivalent(E, u, u));
    CHECK(fe_equivalent(E, u, v) == fe_equivalent(E, v, u));
    if (fe_equivalent(E, u, v)) {
      CHECK(fe_equivalent(E, fx_multiply(w, u), fx_multiply(w, v)));
      CHECK(fe_equivalent(E, fx_multiply(u, w), fx_multiply(v, w)));
      CHECK(fe_equivalent(E, v, w) == fe_equivalent(E, u, w));
    }
  }
}

TEST_CASE("normal-form decision matches congruence closure (length <= 3)") {
  const std::vector<std::string> names{"a", "b", "c"};
  auto E = ab_c();
  oracle::CongruenceClosure cc(3, [](int x, int y) { return (x < 2) == (y < 2); }, 6);
  std::vector<oracle::CongruenceClosure::Code> words;
  for (int L = 0; L <= 3; ++L)
    for (auto &w : cc.words_of_length(L))
      words.push_back(w);
  for (const auto &u : words)
    for (const auto &v : words) {
      auto xu = oracle::CongruenceClosure::to_xword(u, names);
      auto xv = oracle::CongruenceClosure::to_xword(v, names);
      const bool fe = fe_equivalent(E, xu, xv);
      CHECK(fe == cc.equivalent(u, v));
      CHECK(fe == (quotient_word(E, xu) == quotient_word(E, xv)));
    }
}
