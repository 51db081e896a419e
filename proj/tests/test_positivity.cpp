#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "wschub/config_build.hpp"
#include "wschub/positivity.hpp"

using namespace wschub;

static std::shared_ptr<const WeylGroup> make_group(const std::string& preset) {
  return std::make_shared<WeylGroup>(build_root_datum(preset));
}

template <class K>
static int pos_by_image_g(const WeightedConfig<K>& cfg, const IVec& target) {
  for (int p = 0; p < cfg.P().num_reps(); ++p)
    if (cfg.W().act(cfg.P().rep(p), cfg.lambda()) == target) return p;
  REQUIRE(false);
  return -1;
}

static std::vector<IVec> negative_roots(const WeylGroup& W) {
  std::vector<IVec> out;
  for (int g = 0; g < W.num_positive(); ++g) {
    IVec r = W.pos_root(g);
    for (auto& c : r) c = -c;
    out.push_back(std::move(r));
  }
  return out;
}

static Poly<Rational> recompose(const SquarefreeDecomposition& dec, int nvars) {
  Poly<Rational> s(nvars);
  for (const auto& [c, roots] : dec.terms) {
    Poly<Rational> m = Poly<Rational>::constant(nvars, c);
    for (const IVec& r : roots) m = m * Poly<Rational>::from_linear(to_linform(r));
    s = s + m;
  }
  return s;
}

TEST_CASE("square-free decomposition over one-sign roots") {
  auto G = make_group("gl(5)");
  std::vector<IVec> neg = negative_roots(*G);
  auto lin = [&](int i) {
    IVec b(5, 0);
    b[i] = -1;
    b[i + 1] = 1;  // beta_i = x_{i+1} - x_i
    return Poly<Rational>::from_linear(to_linform(b));
  };
  Poly<Rational> b1 = lin(1), b2 = lin(2), b3 = lin(3);

  // beta_2^2 + beta_2 beta_3 = beta_2 (beta_2 + beta_3), a square-free product
  Poly<Rational> target = b2 * b2 + b2 * b3;
  SquarefreeDecomposition dec = squarefree_decompose(target, neg);
  REQUIRE(dec.feasible);
  for (const auto& [c, roots] : dec.terms) CHECK(c > 0);
  CHECK(recompose(dec, 5) == target);

  // a degree-one target that is not itself a root still decomposes
  Poly<Rational> lin_target = b1 + Rational(2) * b2 + b3;
  SquarefreeDecomposition d1 = squarefree_decompose(lin_target, neg);
  REQUIRE(d1.feasible);
  CHECK(recompose(d1, 5) == lin_target);

  // a positive root has no nonnegative expression in negative roots
  CHECK_FALSE(squarefree_decompose(Rational(-1) * b2, neg).feasible);

  CHECK(squarefree_decompose(Poly<Rational>(5), neg).feasible);
  CHECK_THROWS_AS(squarefree_decompose(b2 + Poly<Rational>::constant(5, 1), neg),
                  std::invalid_argument);
}

TEST_CASE("coordinates in weighted negative simple roots, weighted projective 4-space") {
  auto G = make_group("gl(5)");
  IVec lambda{1, 0, 0, 0, 0};
  auto cfg = numeric_config(G, lambda, {1, 2, 3, 4, 5});
  REQUIRE(cfg.report().valid());
  REQUIRE(cfg.report().chi_antidominant);
  SchubertCalc<Rational> calc(cfg);

  std::vector<int> pos(5);
  for (int k = 0; k < 5; ++k) {
    IVec xk(5, 0);
    xk[k] = 1;
    pos[k] = pos_by_image_g(cfg, xk);
  }

  SchubertExpansion<Rational> d = calc.structure_constants(pos[2], pos[2], false);

  auto var = [](int i, Rational c) { return Poly<Rational>::variable(4, i, c); };

  // at the basepoint v_2 the Z_2-coefficient is b2 (b2 + b3)
  {
    NegrootExpansion<Rational> e = negroot_expand_at(cfg, d.coeff[pos[2]], pos[2]);
    REQUIRE(e.in_span);
    CHECK(e.nonnegative);
    Poly<Rational> expect = var(2, 1) * (var(2, 1) + var(3, 1));
    CHECK(e.coords == expect);
  }

  // at v_1 it is ((1 - a3/a2) b1 + b2)((1 - a4/a2) b1 + b2 + b3): mixed signs
  {
    NegrootExpansion<Rational> e = negroot_expand_at(cfg, d.coeff[pos[2]], pos[1]);
    REQUIRE(e.in_span);
    CHECK_FALSE(e.nonnegative);
    Poly<Rational> expect = (var(1, Rational(-1, 3)) + var(2, 1)) *
                            (var(1, Rational(-2, 3)) + var(2, 1) + var(3, 1));
    CHECK(e.coords == expect);
  }

  // the Z_1-coefficient at v_1 is nonnegative here since 1/a2 - 1/a3 <= 1/a4
  {
    NegrootExpansion<Rational> e = negroot_expand_at(cfg, d.coeff[pos[1]], pos[1]);
    REQUIRE(e.in_span);
    CHECK(e.nonnegative);
    Poly<Rational> expect =
        var(1, Rational(7, 9)) + var(2, Rational(3)) + var(3, Rational(4, 3));
    CHECK(e.coords == expect);
  }

  // above every element of the support interval the coordinates are nonnegative
  for (int w = 0; w < calc.npts(); ++w) {
    if (d.coeff[w].is_zero()) continue;
    NegrootExpansion<Rational> e = negroot_expand_at(cfg, d.coeff[w], 0);
    REQUIRE(e.in_span);
    CHECK(e.nonnegative);
  }

  // with 1/a2 - 1/a3 > 1/a4 the Z_1-coefficient at v_1 picks up a negative sign
  {
    auto cfg2 = numeric_config(G, lambda, {1, 1, 1, 30, 31});
    REQUIRE(cfg2.report().valid());
    SchubertCalc<Rational> calc2(cfg2);
    SchubertExpansion<Rational> d2 = calc2.structure_constants(pos[2], pos[2], false);
    NegrootExpansion<Rational> e = negroot_expand_at(cfg2, d2.coeff[pos[1]], pos[1]);
    REQUIRE(e.in_span);
    CHECK_FALSE(e.nonnegative);
    NegrootExpansion<Rational> top = negroot_expand_at(cfg2, d2.coeff[pos[1]], 0);
    CHECK(top.nonnegative);
  }

  // degeneration: all weights equal makes the coordinates basepoint-free
  {
    auto cfg0 = numeric_config(G, lambda, {1, 1, 1, 1, 1});
    SchubertCalc<Rational> calc0(cfg0);
    SchubertExpansion<Rational> d0 = calc0.structure_constants(pos[2], pos[2], false);
    Poly<Rational> expect = var(2, 1) * (var(2, 1) + var(3, 1));
    for (int x = 0; x < 5; ++x) {
      NegrootExpansion<Rational> e = negroot_expand_at(cfg0, d0.coeff[pos[2]], x);
      REQUIRE(e.in_span);
      CHECK(e.coords == expect);
    }
    // a coordinate outside the root span is reported, not thrown
    NegrootExpansion<Rational> off =
        negroot_expand_at(cfg0, Poly<Rational>::variable(5, 0), 0);
    CHECK_FALSE(off.in_span);
  }
}

TEST_CASE("coordinate rows of the squared codimension-2 class, symbolic") {
  auto G = make_group("gl(5)");
  auto cfg = symbolic_config(G, {1, 0, 0, 0, 0});
  SchubertCalc<RatFunc> calc(cfg);

  std::vector<int> pos(5);
  for (int k = 0; k < 5; ++k) {
    IVec xk(5, 0);
    xk[k] = 1;
    pos[k] = pos_by_image_g(cfg, xk);
  }
  auto a = [&](int i) {
    IVec xi(5, 0);
    xi[i] = 1;
    return cfg.a_of(xi);
  };

  SchubertExpansion<RatFunc> d = calc.structure_constants(pos[2], pos[2], false);

  // closed form of the square: coefficients in terms of gamma_k = x_4 - x_k
  {
    auto gammabar = [&](int k) {
      IVec g(5, 0);
      g[4] = 1;
      g[k] = -1;
      return Poly<RatFunc>::from_linear(cfg.bar(g, cfg.P().rep(pos[k])));
    };
    Poly<RatFunc> g1 = gammabar(1), g2 = gammabar(2), g3 = gammabar(3);
    auto cpoly = [&](const RatFunc& c) { return Poly<RatFunc>::constant(5, c); };
    CHECK(d.coeff[pos[2]] == cpoly(a(3) / a(4)) * (g2 - g3) * g2);
    CHECK(d.coeff[pos[1]] == cpoly(a(3) / a(2)) * (g1 + g2 - g3));
    CHECK(d.coeff[pos[0]] == cpoly(a(3) * a(4) / (a(1) * a(2))));
    CHECK(d.coeff[pos[3]].is_zero());
    CHECK(d.coeff[pos[4]].is_zero());
  }

  {
    NegrootExpansion<RatFunc> e = negroot_expand_at(cfg, d.coeff[pos[2]], pos[2]);
    REQUIRE(e.in_span);
    Poly<RatFunc> expect(4);
    expect.add_term({0, 0, 2, 0}, RatFunc(1));
    expect.add_term({0, 0, 1, 1}, RatFunc(1));
    CHECK(e.coords == expect);
  }
  // at v_3 the same coefficient has no square-free expression: b2^2 survives
  {
    NegrootExpansion<RatFunc> e = negroot_expand_at(cfg, d.coeff[pos[2]], pos[3]);
    REQUIRE(e.in_span);
    Poly<RatFunc> expect(4);
    expect.add_term({0, 0, 2, 0}, a(3) * a(4) / (a(2) * a(2)));
    expect.add_term({0, 0, 1, 1}, a(3) / a(2));
    CHECK(e.coords == expect);
  }
}

TEST_CASE("re-expansion recursion is exact in both modes") {
  auto G = make_group("cstar_gl(4)");
  IVec lambda{1, 1, 1, 0, 0};

  auto check_cfg = [&](const IVec& chi, bool negative_mode) {
    auto cfg = numeric_config(G, lambda, chi);
    REQUIRE(cfg.report().valid());
    SchubertCalc<Rational> calc(cfg);

    std::vector<IVec> roots = negative_roots(*G);
    if (!negative_mode)
      for (auto& r : roots)
        for (auto& c : r) c = -c;

    for (int w = 0; w < calc.npts(); ++w) {
      SquarefreeDecomposition dec;
      dec.feasible = true;
      dec.terms.push_back({Rational(3, 2), {roots[0], roots[3]}});
      dec.terms.push_back({Rational(1), {roots[2]}});

      // the same element multiplied through the localized product
      GKMClass<Rational> cls = calc.schubert_class(w, false);
      GKMClass<Rational> part1 = calc.multiply(
          calc.scalar_class(roots[0]), calc.multiply(calc.scalar_class(roots[3]), cls));
      GKMClass<Rational> part2 = calc.multiply(calc.scalar_class(roots[2]), cls);
      GKMClass<Rational> total(part1);
      for (int x = 0; x < calc.npts(); ++x)
        total.values[x] = Rational(3, 2) * part1.values[x] + part2.values[x];
      SchubertExpansion<Rational> expect = calc.expand(total, false);

      std::vector<Certificate> certs = reexpand_weighted(cfg, dec, w, negative_mode);
      for (int y = 0; y < calc.npts(); ++y) {
        CertCheck chk = verify_certificate(cfg, certs[y], expect.coeff[y], 0, 0, y);
        CHECK(chk.ok);
        if (!chk.ok) MESSAGE(chk.violation);
      }
    }
  };

  check_cfg({7, -3, -2, -1, 0}, true);  // antidominant
  check_cfg({7, 0, -1, -2, -3}, false);  // dominant

  // mode preconditions
  {
    auto anti = numeric_config(G, lambda, {7, -3, -2, -1, 0});
    auto dom = numeric_config(G, lambda, {7, 0, -1, -2, -3});
    SquarefreeDecomposition dec;
    dec.feasible = true;
    dec.terms.push_back({Rational(1), {negative_roots(*G)[0]}});
    CHECK_THROWS_AS(reexpand_weighted(dom, dec, 0, true), std::invalid_argument);
    CHECK_THROWS_AS(reexpand_weighted(anti, dec, 0, false), std::invalid_argument);
    // a root pairing negatively with chi is rejected even in the right mode
    SquarefreeDecomposition bad;
    bad.feasible = true;
    bad.terms.push_back({Rational(1), {anti.W().pos_root(0)}});
    CHECK_THROWS_AS(reexpand_weighted(anti, bad, 0, true), std::invalid_argument);
  }
}

TEST_CASE("structure constant certificates across configurations") {
  struct Setup {
    std::string preset;
    IVec lambda;
    std::vector<IVec> chis;
  };
  std::vector<Setup> setups = {
      {"gl(4)", {1, 0, 0, 0}, {{1, 2, 3, 4}, {1, 1, 2, 5}, {2, 3, 3, 7}}},
      {"cstar_gl(4)", {1, 1, 1, 0, 0}, {{7, -3, -2, -1, 0}, {5, -2, -2, 0, 0}}},
      {"cstar_sp4", {1, 1, 1}, {{8, -1, -1}, {11, -4, -3}}},
  };
  for (const auto& s : setups) {
    auto G = make_group(s.preset);
    IVec chi0 = central_cocharacter(*G, s.lambda);
    auto cfg0 = numeric_config(G, s.lambda, chi0);
    REQUIRE(cfg0.report().valid());
    SchubertCalc<Rational> classical(cfg0);
    for (const IVec& chi : s.chis) {
      auto cfg = numeric_config(G, s.lambda, chi);
      REQUIRE(cfg.report().valid());
      REQUIRE(cfg.report().chi_antidominant);
      SchubertCalc<Rational> weighted(cfg);
      for (int u = 0; u < weighted.npts(); ++u)
        for (int v = u; v < weighted.npts(); ++v) {
          ProductCertificates pc = certify_product(weighted, classical, u, v);
          CHECK(pc.all_ok);
          if (!pc.all_ok) MESSAGE(s.preset << " u=" << u << " v=" << v << ": "
                                           << pc.diagnostic);
        }
    }
  }
}

TEST_CASE("certificate verification rejects each kind of defect") {
  auto G = make_group("gl(4)");
  IVec lambda{1, 0, 0, 0};
  auto cfg = numeric_config(G, lambda, {1, 2, 3, 4});
  auto cfg0 = numeric_config(G, lambda, central_cocharacter(*G, lambda));
  SchubertCalc<Rational> weighted(cfg), classical(cfg0);

  std::vector<int> pos(4);
  for (int k = 0; k < 4; ++k) {
    IVec xk(4, 0);
    xk[k] = 1;
    pos[k] = pos_by_image_g(cfg, xk);
  }

  ProductCertificates pc = certify_product(weighted, classical, pos[1], pos[1]);
  REQUIRE(pc.all_ok);
  int y = pos[0];
  REQUIRE_FALSE(pc.certs[y].terms.empty());
  REQUIRE_FALSE(pc.certs[y].terms[0].factors.empty());

  auto run = [&](const Certificate& c) {
    return verify_certificate(cfg, c, pc.coeffs[y], pos[1], pos[1], y);
  };
  CHECK(run(pc.certs[y]).ok);

  Certificate tampered = pc.certs[y];
  tampered.terms[0].coeff *= 2;
  CertCheck chk = run(tampered);
  CHECK_FALSE(chk.ok);
  CHECK(chk.violation == "certificate does not evaluate to the claimed value");

  tampered = pc.certs[y];
  tampered.terms[0].coeff = -tampered.terms[0].coeff;
  CHECK(run(tampered).violation == "nonpositive coefficient");

  tampered = pc.certs[y];
  tampered.terms[0].factors.push_back(tampered.terms[0].factors[0]);
  CHECK(run(tampered).violation == "repeated root in a term");

  // v_3 lies outside S(v_1, v_1; v_0) = [v_0, v_1]
  tampered = pc.certs[y];
  tampered.terms[0].factors[0].x_pos = pos[3];
  CHECK(run(tampered).violation == "basepoint outside the allowed interval");
}
