#include "eexact/diagrams.hpp"

#include <algorithm>

#include "eexact/json_io.hpp"
#include "eexact/spectral.hpp"

namespace eexact {

Diagram make_diagram(std::vector<CochainComplex> rows, std::vector<std::vector<Morphism>> verticals) {
  if (rows.empty()) fail(ErrorKind::BadInput, "diagram needs rows");
  for (const CochainComplex& r : rows)
    if (r.maps() != rows[0].maps() || r.pad_left != rows[0].pad_left ||
        r.pad_right != rows[0].pad_right)
      fail(ErrorKind::BadInput, "diagram rows must have equal shape");
  if (verticals.size() + 1 != rows.size()) fail(ErrorKind::BadInput, "vertical row count");
  for (std::size_t r = 0; r < verticals.size(); ++r) {
    if (static_cast<int>(verticals[r].size()) != rows[0].maps() + 1)
      fail(ErrorKind::BadInput, "vertical count per row");
    for (int j = 0; j <= rows[0].maps(); ++j) {
      const Morphism& t = verticals[r][j];
      if (t.source != rows[r].module_at(j) || t.target != rows[r + 1].module_at(j))
        fail(ErrorKind::IllDefined, "vertical endpoints at column " + std::to_string(j));
    }
    for (int j = 0; j < rows[0].maps(); ++j)
      if (compose(verticals[r][j + 1], rows[r].diffs[j]) !=
          compose(rows[r + 1].diffs[j], verticals[r][j]))
        fail(ErrorKind::IllDefined, "square does not commute at column " + std::to_string(j));
  }
  return {std::move(rows), std::move(verticals)};
}

namespace {

long pickl(Rng& rng, std::initializer_list<long> vals) {
  std::vector<long> v(vals);
  return v[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(v.size()) - 1))];
}

std::vector<Int> divisors_of(const Int& n) {
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FgModule random_module(const RingSpec& ring, Rng& rng) {
  std::vector<Int> inv;
  long c = pickl(rng, {0, 1, 1, 2});
  if (ring.is_integers()) {
    if (c >= 1) {
      Int d1(pickl(rng, {2, 3, 4, 6}));
      inv.push_back(d1);
      if (c == 2) inv.push_back(d1 * pickl(rng, {1, 2, 3}));
    }
    long r = pickl(rng, {0, 0, 1, 1, 2});
    for (long i = 0; i < r; ++i) inv.push_back(0);
  } else if (c >= 1) {
    std::vector<Int> divs = divisors_of(ring.n);
    divs.erase(divs.begin());  // drop 1
    if (!divs.empty()) {
      Int d2 = rng.pick(divs);
      if (c == 2) {
        std::vector<Int> sub = divisors_of(d2);
        sub.erase(sub.begin());
        Int d1 = rng.pick(sub);
        if (d1 != d2) inv.push_back(d1);
      }
      inv.push_back(d2);
      std::sort(inv.begin(), inv.end());
    }
  }
  return make_module(ring, std::move(inv));
}

Morphism random_morphism(const FgModule& M, const FgModule& N, Rng& rng) {
  IntMatrix A(N.size(), M.size());
  for (int j = 0; j < M.size(); ++j) {
    const Int& dj = M.invariants[j];
    for (int i = 0; i < N.size(); ++i) {
      const Int& ei = N.invariants[i];
      if (dj == 0)
        A.at(i, j) = rng.uniform(-3, 3);
      else if (ei == 0)
        A.at(i, j) = 0;
      else
        A.at(i, j) = (ei / gcd(ei, dj)) * Int(rng.uniform(-2, 2));
    }
  }
  return make_morphism(M, N, std::move(A));
}

Morphism random_automorphism(const FgModule& M, Rng& rng) {
  if (M.is_zero()) return identity_morphism(M);
  std::vector<int> tor, fre;
  for (int i = 0; i < M.size(); ++i)
    (M.invariants[i] != 0 ? tor : fre).push_back(i);

  for (int attempt = 0; attempt < 50; ++attempt) {
    IntMatrix A(M.size(), M.size());
    if (!tor.empty()) {
      std::vector<Int> d;
      for (int i : tor) d.push_back(M.invariants[i]);
      FgModule T = make_module(M.ring, d);
      bool ok = false;
      for (int pass = 0; pass < 30 && !ok; ++pass) {
        IntMatrix B(T.size(), T.size());
        for (int i = 0; i < T.size(); ++i)
          for (int j = 0; j < T.size(); ++j)
            B.at(i, j) = (d[i] / gcd(d[i], d[j])) * Int(rng.uniform(-2, 2));
        Morphism t = make_morphism(T, T, B);
        if (!is_injective(t)) continue;
        for (int i = 0; i < T.size(); ++i)
          for (int j = 0; j < T.size(); ++j) A.at(tor[i], tor[j]) = t.matrix.at(i, j);
        ok = true;
      }
      if (!ok)
        for (int i : tor) A.at(i, i) = 1;
    }
    if (!fre.empty()) {
      const int r = static_cast<int>(fre.size());
      IntMatrix F = IntMatrix::identity(r);  // keep unimodular by shearing
      for (int k = 0; k < 3 * r; ++k) {
        int i = static_cast<int>(rng.uniform(0, r - 1)), j = static_cast<int>(rng.uniform(0, r - 1));
        if (i == j) continue;
        Int q(rng.uniform(-2, 2));
        for (int col = 0; col < r; ++col) F.at(i, col) += q * F.at(j, col);
      }
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) A.at(fre[i], fre[j]) = F.at(i, j);
      for (int i : tor)
        for (int j : fre) A.at(i, j) = rng.uniform(0, 2);
    }
    Morphism a = make_morphism(M, M, A);
    if (is_injective(a) && is_surjective(a)) return a;
  }
  return identity_morphism(M);
}

Morphism inverse_automorphism(const Morphism& a) {
  const FgModule& M = a.source;
  const FgModule& N = a.target;
  IntMatrix B = hstack(a.matrix, relation_matrix(N));
  std::vector<std::vector<Int>> cols;
  for (int i = 0; i < N.size(); ++i) {
    auto sol = solve_linear(B, unit_coords(N, i));
    if (!sol) fail(ErrorKind::IllDefined, "morphism is not invertible");
    sol->resize(M.size());
    cols.push_back(std::move(*sol));
  }
  Morphism inv = make_morphism(N, M, from_cols(M.size(), cols));
  if (!compose(inv, a).matrix.is_identity() || !compose(a, inv).matrix.is_identity())
    fail(ErrorKind::IllDefined, "morphism is not invertible");
  return inv;
}

Submodule random_submodule(const FgModule& M, Rng& rng) {
  long k = pickl(rng, {0, 1, 1, 2, 2, 3});
  std::vector<Coords> gens;
  for (long g = 0; g < k; ++g) {
    Coords x(M.size());
    for (int i = 0; i < M.size(); ++i) {
      const Int& d = M.invariants[i];
      x[i] = d == 0 ? Int(rng.uniform(-2, 2)) : Int(rng.uniform(0, static_cast<long>(d.get_si()) - 1));
    }
    gens.push_back(std::move(x));
  }
  return span(M, std::move(gens));
}

Morphism random_essential_extension(const FgModule& M, Rng& rng, const GabrielTopology* support) {
  if (M.is_zero()) return identity_morphism(M);
  std::vector<int> tor, fre;
  for (int i = 0; i < M.size(); ++i)
    (M.invariants[i] != 0 ? tor : fre).push_back(i);

  long behavior = pickl(rng, {0, 0, 1, 1, 2, 2, 2});
  std::vector<Int> target_inv = M.invariants;
  std::vector<Int> steps(M.size(), 1);

  auto allowed = [&](const Int& p) {
    if (support && !support->all_primes &&
        std::find(support->primes.begin(), support->primes.end(), p) == support->primes.end())
      return false;
    return true;
  };

  if (behavior == 2 && !tor.empty()) {
    // grow the tail of the torsion chain along one allowed prime
    int cut = static_cast<int>(rng.uniform(0, static_cast<long>(tor.size()) - 1));
    std::vector<Int> cands;
    for (const Int& p : prime_factors(M.invariants[tor[cut]])) {
      if (!allowed(p)) continue;
      bool fits = true;
      if (!M.ring.is_integers())
        for (std::size_t i = cut; i < tor.size(); ++i)
          if ((M.ring.n / M.invariants[tor[i]]) % p != 0) fits = false;
      if (fits) cands.push_back(p);
    }
    if (!cands.empty()) {
      Int p = rng.pick(cands);
      for (std::size_t i = cut; i < tor.size(); ++i) {
        target_inv[tor[i]] *= p;
        steps[tor[i]] = p;
      }
    }
  }
  if (behavior >= 1) {
    for (int i : fre) {
      Int n = 1;
      if (support) {
        if (support->all_primes) n = pickl(rng, {1, 2, 2, 3});
        else if (!support->primes.empty() && rng.chance(1, 2))
          n = support->primes[static_cast<std::size_t>(
              rng.uniform(0, static_cast<long>(support->primes.size()) - 1))];
      } else {
        n = pickl(rng, {1, 2, 2, 3});
      }
      steps[i] = n;
    }
  }

  FgModule E = make_module(M.ring, target_inv);
  IntMatrix D(M.size(), M.size());
  for (int i = 0; i < M.size(); ++i) D.at(i, i) = steps[i];
  Morphism e = make_morphism(M, E, D);
  Morphism out = compose(random_automorphism(E, rng), e);
  if (!is_injective(out) || !is_essential(image(out), E))
    fail(ErrorKind::GenerationExhausted, "essential extension failed verification");
  return out;
}

namespace {

// conjugate every position by a random automorphism; preserves all exactness
// structure while leaving canonical coordinates
CochainComplex decanonicalize(std::vector<Morphism> diffs, Rng& rng) {
  const int m = static_cast<int>(diffs.size());
  std::vector<Morphism> autos;
  autos.push_back(random_automorphism(diffs[0].source, rng));
  for (int j = 0; j < m; ++j) autos.push_back(random_automorphism(diffs[j].target, rng));
  std::vector<Morphism> out;
  for (int j = 0; j < m; ++j)
    out.push_back(compose(autos[j + 1], compose(diffs[j], inverse_automorphism(autos[j]))));
  return make_complex(std::move(out));
}

FgModule random_torsion_module(const RingSpec& ring, Rng& rng) {
  std::vector<Int> inv;
  Int d1(pickl(rng, {2, 3, 4}));
  inv.push_back(d1);
  if (rng.chance(1, 2)) inv.push_back(d1 * pickl(rng, {1, 2, 3}));
  std::sort(inv.begin(), inv.end());
  return make_module(ring, std::move(inv));
}

}  // namespace

CochainComplex gen_exact_complex(const RingSpec& ring, int maps, Rng& rng) {
  if (maps < 1) fail(ErrorKind::BadInput, "need at least one map");
  FgModule M0 = random_module(ring, rng);
  FgModule M1 = random_module(ring, rng);
  std::vector<Morphism> diffs{random_morphism(M0, M1, rng)};
  for (int i = 1; i < maps; ++i) {
    QuotientData q = cokernel(diffs.back());
    DirectSum ds = direct_sum(q.mod, random_module(ring, rng));
    diffs.push_back(compose(ds.inj1, q.proj));
  }
  return decanonicalize(std::move(diffs), rng);
}

CochainComplex gen_e_exact_complex(const RingSpec& ring, int maps, Rng& rng,
                                   const GabrielTopology* support,
                                   const std::vector<int>* free_positions) {
  if (maps < 1) fail(ErrorKind::BadInput, "need at least one map");
  auto needs_free = [&](int j) {
    return free_positions &&
           std::find(free_positions->begin(), free_positions->end(), j) != free_positions->end();
  };

  FgModule M0 = random_module(ring, rng);
  Submodule S0 = random_submodule(M0, rng);
  if (needs_free(1)) {
    // quotient must be torsionfree: kill the torsion block and some free axes
    std::vector<Coords> gens;
    for (int i = 0; i < M0.size(); ++i)
      if (M0.invariants[i] != 0 || rng.chance(1, 2)) gens.push_back(unit_coords(M0, i));
    S0 = span(M0, std::move(gens));
  }
  QuotientData q = quotient(M0, S0);

  std::vector<Morphism> diffs;
  FgModule C = q.mod;
  Morphism epi = q.proj;
  for (int j = 1; j <= maps; ++j) {
    Morphism ext = random_essential_extension(C, rng, support);
    FgModule junk = (needs_free(j) || needs_free(j + 1)) ? free_module(ring, static_cast<int>(pickl(rng, {0, 1, 1, 2})))
                                                         : random_module(ring, rng);
    DirectSum ds = direct_sum(ext.target, junk);
    diffs.push_back(compose(ds.inj1, compose(ext, epi)));
    if (j == maps) break;
    QuotientData qq = quotient(ds.mod, image(ds.inj1));
    C = qq.mod;
    epi = qq.proj;
  }
  return decanonicalize(std::move(diffs), rng);
}

CochainComplex gen_perturbed_complex(const RingSpec& ring, int maps, Rng& rng) {
  CochainComplex c = gen_exact_complex(ring, maps, rng);
  std::vector<Morphism> diffs = c.diffs;
  int hits = static_cast<int>(pickl(rng, {1, 1, 2}));
  for (int h = 0; h < hits; ++h) {
    int j = static_cast<int>(rng.uniform(0, maps - 1));
    diffs[j] = scale_morphism(Int(pickl(rng, {0, 2, 2, 3, 4})), diffs[j]);
  }
  return make_complex(std::move(diffs));
}

CochainComplex gen_short_e_exact(const RingSpec& ring, Rng& rng) {
  FgModule B = random_module(ring, rng);
  SubStructure st = submodule_structure(random_submodule(B, rng));
  Morphism mono = compose(st.emb, random_essential_mono(st.abs, rng));
  QuotientData q = quotient(B, image(st.emb));
  Morphism ext = random_essential_extension(q.mod, rng);
  Morphism epi = compose(ext, q.proj);

  Morphism aA = random_automorphism(mono.source, rng);
  Morphism aB = random_automorphism(B, rng);
  Morphism aE = random_automorphism(epi.target, rng);
  Morphism f = compose(aB, compose(mono, inverse_automorphism(aA)));
  Morphism g = compose(aE, compose(epi, inverse_automorphism(aB)));
  return make_complex({f, g}, true, true);
}

Morphism gen_e_epi(const RingSpec& ring, Rng& rng) {
  FgModule C = random_module(ring, rng);
  Morphism ext = random_essential_extension(C, rng);
  DirectSum ds = direct_sum(C, random_module(ring, rng));
  Morphism f = compose(ext, ds.proj1);
  return compose(random_automorphism(f.target, rng),
                 compose(f, inverse_automorphism(random_automorphism(ds.mod, rng))));
}

const char* lemma_kind_name(LemmaKind k) {
  switch (k) {
    case LemmaKind::Four: return "four";
    case LemmaKind::Five: return "five";
    case LemmaKind::Grid: return "grid";
    case LemmaKind::FourF: return "four-f";
  }
  return "?";
}

namespace {

// the columns of a padded-both-sides ladder column as a short complex
CochainComplex column_complex(const Diagram& d, int j) {
  return make_complex({d.verticals[0][j], d.verticals[1][j]}, true, true);
}

Morphism restricted_map(const Morphism& f, const SubStructure& src, const SubStructure& tgt) {
  std::vector<std::vector<Int>> cols;
  for (int i = 0; i < src.abs.size(); ++i)
    cols.push_back(abs_coords(tgt, eexact::apply(f, eexact::apply(src.emb, unit_coords(src.abs, i)))));
  return make_morphism(src.abs, tgt.abs, from_cols(tgt.abs.size(), cols));
}

Morphism induced_quotient_map(const Morphism& f, const QuotientData& qs, const QuotientData& qt) {
  IntMatrix lift = hstack(qs.proj.matrix, relation_matrix(qs.mod));
  std::vector<std::vector<Int>> cols;
  for (int i = 0; i < qs.mod.size(); ++i) {
    auto sol = solve_linear(lift, unit_coords(qs.mod, i));
    if (!sol) fail(ErrorKind::IllDefined, "projection not onto");
    sol->resize(qs.proj.source.size());
    cols.push_back(eexact::apply(qt.proj, eexact::apply(f, *sol)));
  }
  return make_morphism(qs.mod, qt.mod, from_cols(qt.mod.size(), cols));
}

Submodule essential_submodule_of(const Submodule& S, Rng& rng) {
  SubStructure st = submodule_structure(S);
  return image_of(st.emb, image(random_essential_mono(st.abs, rng)));
}

Int random_supported(const GabrielTopology& F, Rng& rng) {
  if (F.all_primes) return Int(pickl(rng, {1, 1, 2, 3, 6}));
  Int n = 1;
  for (int k = 0; k < 2; ++k)
    if (!F.primes.empty() && rng.chance(1, 2))
      n *= F.primes[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(F.primes.size()) - 1))];
  return n;
}

struct LadderPlan {
  int maps;                      // 3 for four-kinds, 4 for five
  std::vector<int> free_bottom;  // positions forced torsionfree in the bottom row
  int conclusion;                // vertical index the lemma talks about
  std::vector<int> hypothesis;   // vertical indices constrained by hypotheses
};

LadderPlan ladder_plan(LemmaKind kind, int part) {
  if (kind == LemmaKind::Five) {
    if (part == 1) return {4, {2}, 2, {1, 3, 4}};
    return {4, {2}, 2, {0, 1, 3}};
  }
  // four and four-f share the shape
  if (part == 1) return {3, {1}, 1, {0, 2, 3}};
  return {3, {}, 2, {0, 1, 3}};
}

Diagram gen_ladder(LemmaKind kind, int part, Rng& rng, const GabrielTopology& F,
                   bool drop_free_bias = false) {
  const RingSpec ring = RingSpec::integers();
  const GabrielTopology* support = kind == LemmaKind::FourF ? &F : nullptr;
  LadderPlan plan = ladder_plan(kind, part);
  if (drop_free_bias) plan.free_bottom.clear();

  CochainComplex S = gen_e_exact_complex(ring, plan.maps, rng, support, &plan.free_bottom);
  bool with_top = rng.chance(1, 3);
  bool with_bottom = rng.chance(1, 3);
  CochainComplex T = with_top ? gen_e_exact_complex(ring, plan.maps, rng, support) : S;
  CochainComplex U = with_bottom
                         ? gen_e_exact_complex(ring, plan.maps, rng, support, &plan.free_bottom)
                         : S;

  // top row A = S + T', bottom row B = S + U'; T' and U' are zero rows unless
  // switched on, so the shared part S carries the scalar vertical
  std::vector<DirectSum> top_sums, bottom_sums;
  for (int j = 0; j <= plan.maps; ++j) {
    top_sums.push_back(direct_sum(S.module_at(j), with_top ? T.module_at(j) : zero_module(ring)));
    bottom_sums.push_back(
        direct_sum(S.module_at(j), with_bottom ? U.module_at(j) : zero_module(ring)));
  }
  auto summed_row = [&](const std::vector<DirectSum>& sums, const CochainComplex& extra,
                        bool on) {
    std::vector<Morphism> diffs;
    for (int j = 0; j < plan.maps; ++j) {
      Morphism d = compose(sums[j + 1].inj1, compose(S.diffs[j], sums[j].proj1));
      if (on)
        d = add_morphisms(d, compose(sums[j + 1].inj2, compose(extra.diffs[j], sums[j].proj2)));
      diffs.push_back(std::move(d));
    }
    return make_complex(std::move(diffs));
  };
  CochainComplex top = summed_row(top_sums, T, with_top);
  CochainComplex bottom = summed_row(bottom_sums, U, with_bottom);

  Int n = kind == LemmaKind::FourF ? random_supported(F, rng)
          : drop_free_bias         ? Int(pickl(rng, {0, 1, 1, 2, 3, 6}))
                                   : Int(pickl(rng, {1, 1, 1, 2, 3, 6}));
  std::vector<Morphism> verts;
  for (int j = 0; j <= plan.maps; ++j)
    verts.push_back(compose(bottom_sums[j].inj1,
                            compose(scale_morphism(n, identity_morphism(S.module_at(j))),
                                    top_sums[j].proj1)));

  // commutativity-preserving perturbation: kill the incoming image, land in
  // the outgoing kernel
  auto perturb = [&](int j) {
    Morphism pi = j > 0 ? cokernel(top.diffs[j - 1]).proj : identity_morphism(top.module_at(0));
    Morphism emb = j < plan.maps ? submodule_structure(kernel(bottom.diffs[j])).emb
                                 : identity_morphism(bottom.module_at(plan.maps));
    Morphism h = random_morphism(pi.target, emb.source, rng);
    verts[j] = add_morphisms(verts[j], compose(emb, compose(h, pi)));
  };
  for (int j = 0; j <= plan.maps; ++j) {
    bool constrained =
        std::find(plan.hypothesis.begin(), plan.hypothesis.end(), j) != plan.hypothesis.end();
    if (j == plan.conclusion || (constrained ? rng.chance(1, 4) : rng.chance(3, 4))) perturb(j);
  }

  return make_diagram({top, bottom}, {verts});
}

Diagram gen_grid(Rng& rng) {
  const RingSpec ring = RingSpec::integers();
  FgModule B2 = random_module(ring, rng);

  SubStructure stB1 = submodule_structure(random_submodule(B2, rng));
  Morphism g1 = stB1.emb;
  QuotientData qB3 = quotient(B2, image(g1));
  Morphism g2 = qB3.proj;

  // K2 biased torsionfree: generators supported on the free axes
  std::vector<Coords> k2gens;
  long k = pickl(rng, {1, 1, 2});
  for (long t = 0; t < k; ++t) {
    Coords x(B2.size(), 0);
    for (int i = 0; i < B2.size(); ++i)
      if (B2.invariants[i] == 0) x[i] = rng.uniform(-2, 2);
    k2gens.push_back(std::move(x));
  }
  if (rng.chance(1, 4)) {
    Submodule extra = random_submodule(B2, rng);
    if (!extra.generators.empty()) k2gens.push_back(extra.generators[0]);
  }
  Submodule K2 = span(B2, std::move(k2gens));

  Submodule K1_in_B2 = intersect(K2, image(g1));
  std::vector<Coords> pulled;
  for (const Coords& g : K1_in_B2.generators) pulled.push_back(abs_coords(stB1, g));
  Submodule K1 = span(stB1.abs, std::move(pulled));
  Submodule K3 = image_of(g2, K2);

  QuotientData qC1 = quotient(stB1.abs, K1);
  QuotientData qC2 = quotient(B2, K2);
  QuotientData qC3 = quotient(qB3.mod, K3);
  Morphism h1 = induced_quotient_map(g1, qC1, qC2);
  Morphism h2 = induced_quotient_map(g2, qC2, qC3);

  Submodule A2 = essential_submodule_of(K2, rng);
  Submodule A1_in_B2 = intersect(A2, image(g1));
  std::vector<Coords> pulledA;
  for (const Coords& g : A1_in_B2.generators) pulledA.push_back(abs_coords(stB1, g));
  Submodule A1 = span(stB1.abs, std::move(pulledA));
  Submodule A3 = sum_submodules(image_of(g2, A2), essential_submodule_of(K3, rng));

  SubStructure stA1 = submodule_structure(A1);
  SubStructure stA2 = submodule_structure(A2);
  SubStructure stA3 = submodule_structure(A3);

  Morphism f1 = restricted_map(g1, stA1, stA2);
  Morphism f2 = restricted_map(g2, stA2, stA3);

  CochainComplex rowA = make_complex({f1, f2}, true, true);
  CochainComplex rowB = make_complex({g1, g2}, true, true);
  CochainComplex rowC = make_complex({h1, h2}, true, true);
  std::vector<Morphism> v1{stA1.emb, stA2.emb, stA3.emb};
  std::vector<Morphism> v2{qC1.proj, qC2.proj, qC3.proj};
  return make_diagram({rowA, rowB, rowC}, {v1, v2});
}

bool ladder_hypotheses(LemmaKind kind, int part, const Diagram& d, const GabrielTopology& F) {
  const CochainComplex& top = d.rows[0];
  const CochainComplex& bottom = d.rows[1];
  const std::vector<Morphism>& t = d.verticals[0];
  auto row_ok = [&](const CochainComplex& r) {
    return kind == LemmaKind::FourF ? is_F_exact(r, F) : is_e_exact(r);
  };
  auto epi_ok = [&](const Morphism& m) {
    return kind == LemmaKind::FourF ? is_loc_surjective(m, F) : is_e_epi(m);
  };
  if (!row_ok(top) || !row_ok(bottom)) return false;
  if (kind == LemmaKind::Five) {
    if (!is_nonsingular(bottom.module_at(2))) return false;
    if (part == 1) return epi_ok(t[1]) && epi_ok(t[3]) && is_injective(t[4]);
    return epi_ok(t[0]) && is_injective(t[1]) && is_injective(t[3]);
  }
  if (part == 1) {
    bool mid_ok = kind == LemmaKind::FourF ? is_gabriel_torsionfree(F, bottom.module_at(1))
                                           : is_nonsingular(bottom.module_at(1));
    return mid_ok && epi_ok(t[0]) && epi_ok(t[2]) && is_injective(t[3]);
  }
  return epi_ok(t[0]) && is_injective(t[1]) && is_injective(t[3]);
}

bool grid_hypotheses(const Diagram& d) {
  for (int j = 0; j <= 2; ++j)
    if (!is_e_exact(column_complex(d, j))) return false;
  return is_e_exact(d.rows[1]) && is_e_exact(d.rows[2]) &&
         is_nonsingular(d.rows[0].module_at(1)) && is_nonsingular(d.rows[0].module_at(2));
}

bool lemma_conclusion(LemmaKind kind, int part, const Diagram& d, const GabrielTopology& F,
                      std::string& detail) {
  if (kind == LemmaKind::Grid) {
    if (is_e_exact(d.rows[0])) return true;
    detail = "top row not e-exact";
    return false;
  }
  const std::vector<Morphism>& t = d.verticals[0];
  int mid = kind == LemmaKind::Five ? 2 : (part == 1 ? 1 : 2);
  if (part == 1) {
    bool ok = kind == LemmaKind::FourF ? is_loc_surjective(t[mid], F) : is_e_epi(t[mid]);
    if (!ok) detail = "middle vertical not epi in the required sense";
    return ok;
  }
  FgModule K = submodule_structure(kernel(t[mid])).abs;
  bool ok = kind == LemmaKind::FourF
                ? is_gabriel_torsion(F, K)
                : submodule_eq(singular_submodule(K), full_submodule(K));
  if (!ok) detail = "kernel of the third vertical not torsion in the required sense";
  return ok;
}

}  // namespace

Diagram gen_chain_diagram(LemmaKind kind, int part, Rng& rng, const GabrielTopology& F) {
  return kind == LemmaKind::Grid ? gen_grid(rng) : gen_ladder(kind, part, rng, F);
}

namespace {

struct InstanceOutcome {
  bool built = false;
  int attempts = 0;
  std::uint64_t seed = 0;
  bool violated = false;
  std::string detail;
  std::string diagram_json;
};

InstanceOutcome run_instance(LemmaKind kind, int part, std::uint64_t part_seed, int index,
                             const GabrielTopology& F) {
  InstanceOutcome out;
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::uint64_t s = derive_seed(part_seed, static_cast<std::uint64_t>(index) * 64 + attempt);
    Rng rng(s);
    out.attempts = attempt + 1;
    try {
      Diagram d = gen_chain_diagram(kind, part, rng, F);
      bool hyp = kind == LemmaKind::Grid ? grid_hypotheses(d) : ladder_hypotheses(kind, part, d, F);
      if (!hyp) continue;
      out.built = true;
      out.seed = s;
      std::string detail;
      if (!lemma_conclusion(kind, part, d, F, detail)) {
        out.violated = true;
        out.detail = detail;
        out.diagram_json = diagram_json(d).dump();
      }
      return out;
    } catch (const Error&) {
      continue;  // generation hiccup counts as a failed attempt
    }
  }
  return out;
}

}  // namespace

LemmaReport check_lemma(LemmaKind kind, int trials, std::uint64_t seed, const GabrielTopology& F,
                        bool parallel) {
  if (trials < 1) fail(ErrorKind::BadInput, "trials must be positive");
  LemmaReport report{kind, seed, F, {}};
  std::vector<int> parts = kind == LemmaKind::Grid ? std::vector<int>{1} : std::vector<int>{1, 2};
  for (int part : parts) {
    std::uint64_t part_seed = derive_seed(seed, static_cast<std::uint64_t>(part));
    std::vector<InstanceOutcome> outcomes(static_cast<std::size_t>(trials));
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (int i = 0; i < trials; ++i)
        outcomes[static_cast<std::size_t>(i)] = run_instance(kind, part, part_seed, i, F);
    } else {
      for (int i = 0; i < trials; ++i)
        outcomes[static_cast<std::size_t>(i)] = run_instance(kind, part, part_seed, i, F);
    }
    LemmaPartStats stats;
    stats.part = part;
    stats.requested = trials;
    for (int i = 0; i < trials; ++i) {
      const InstanceOutcome& o = outcomes[static_cast<std::size_t>(i)];
      stats.attempts += o.attempts;
      if (!o.built) {
        ++stats.failed_instances;
        continue;
      }
      ++stats.instances;
      if (o.violated) stats.violations.push_back({part, o.seed, o.detail, o.diagram_json});
    }
    report.parts.push_back(std::move(stats));
    if (report.parts.back().instances < std::max(1, trials / 10))
      fail(ErrorKind::GenerationExhausted,
           std::string("part ") + std::to_string(part) + " of " + lemma_kind_name(kind) +
               ": only " + std::to_string(report.parts.back().instances) + " of " +
               std::to_string(trials) + " instances satisfied the hypotheses");
  }
  return report;
}

std::string lemma_report_text(const LemmaReport& r) {
  std::string s = "lemma: ";
  s += lemma_kind_name(r.kind);
  s += "\nseed: " + std::to_string(r.seed);
  if (r.kind == LemmaKind::FourF) s += "\ntopology: " + topology_name(r.topology);
  for (const LemmaPartStats& p : r.parts) {
    s += "\npart " + std::to_string(p.part) + ": requested=" + std::to_string(p.requested) +
         " instances=" + std::to_string(p.instances) +
         " failed=" + std::to_string(p.failed_instances) +
         " attempts=" + std::to_string(p.attempts) +
         " violations=" + std::to_string(p.violations.size());
    for (const LemmaViolation& v : p.violations)
      s += "\n  violation seed=" + std::to_string(v.instance_seed) + " " + v.detail;
  }
  s += "\n";
  return s;
}

NoFunctorDemo no_functor_demo() {
  NoFunctorDemo d;

  RingSpec r4 = RingSpec::zmod(4);
  FgModule S = make_module(r4, {2});
  d.witness_module_singular = submodule_eq(singular_submodule(S), full_submodule(S));
  DirectSum ds = direct_sum(S, S);
  d.witness_complex_not_e_exact = !is_e_exact(make_complex({ds.inj1}, false, true));

  GabrielTopology G = GabrielTopology::goldie();
  Rng rng(0x652d6578616374ULL);
  for (int i = 0; i < 20; ++i) {
    FgModule M = random_module(RingSpec::integers(), rng);
    Morphism e = random_essential_mono(M, rng);
    ++d.essential_monos_checked;
    if (is_localized_iso(localize_morphism(e, G))) ++d.essential_monos_localized;
  }
  for (int i = 0; i < 10; ++i) {
    FgModule C = random_torsion_module(RingSpec::integers(), rng);
    CochainComplex ext = essential_extension_of(C);
    ++d.extensions_checked;
    if (is_localized_iso(localize_morphism(ext.diffs[0], G)) &&
        localize_module(C, G).is_zero())
      ++d.extensions_collapsed;
  }

  FgModule Z2 = make_module(RingSpec::integers(), {2});
  DirectSum dz = direct_sum(Z2, Z2);
  CochainComplex w = make_complex({dz.inj1}, false, true);
  d.z_witness_loc_exact = is_loc_exact(w, G);
  d.z_witness_not_e_exact = !is_e_exact(w);

  d.conclusion = d.witness_module_singular && d.witness_complex_not_e_exact &&
                 d.essential_monos_localized == d.essential_monos_checked &&
                 d.extensions_collapsed == d.extensions_checked && d.z_witness_loc_exact &&
                 d.z_witness_not_e_exact;
  return d;
}

namespace {

// thin ladder around the known failure mechanism: a singular second bottom
// module reachable only through a zero vertical
Diagram gen_thin_necessity(Rng& rng) {
  const RingSpec ring = RingSpec::integers();
  Int p(pickl(rng, {2, 3, 5}));
  FgModule Zp = make_module(ring, {p});
  FgModule Zp2 = make_module(ring, {p * p});
  FgModule M = random_module(ring, rng);

  Morphism f1 = zero_morphism(Zp, zero_module(ring));
  Morphism f2 = zero_morphism(zero_module(ring), M);
  Morphism f3 = identity_morphism(M);
  IntMatrix gm(1, 1);
  gm.at(0, 0) = 1;
  Morphism g1 = make_morphism(Zp2, Zp, gm);
  Morphism g2 = zero_morphism(Zp, M);
  Morphism g3 = identity_morphism(M);
  IntMatrix tm(1, 1);
  tm.at(0, 0) = p;
  Morphism t1 = make_morphism(Zp, Zp2, tm);
  Morphism t2 = zero_morphism(zero_module(ring), Zp);
  Morphism t3 = identity_morphism(M);
  Morphism t4 = identity_morphism(M);

  // dress with automorphisms so instances are not literally identical
  std::vector<Morphism> tops{f1, f2, f3}, bots{g1, g2, g3}, verts{t1, t2, t3, t4};
  std::vector<Morphism> ta, ba;
  for (int j = 0; j <= 3; ++j) {
    ta.push_back(random_automorphism(j == 0 ? f1.source : tops[static_cast<std::size_t>(j - 1)].target, rng));
    ba.push_back(random_automorphism(j == 0 ? g1.source : bots[static_cast<std::size_t>(j - 1)].target, rng));
  }
  for (int j = 0; j < 3; ++j) {
    tops[static_cast<std::size_t>(j)] =
        compose(ta[static_cast<std::size_t>(j + 1)],
                compose(tops[static_cast<std::size_t>(j)], inverse_automorphism(ta[static_cast<std::size_t>(j)])));
    bots[static_cast<std::size_t>(j)] =
        compose(ba[static_cast<std::size_t>(j + 1)],
                compose(bots[static_cast<std::size_t>(j)], inverse_automorphism(ba[static_cast<std::size_t>(j)])));
  }
  for (int j = 0; j <= 3; ++j)
    verts[static_cast<std::size_t>(j)] =
        compose(ba[static_cast<std::size_t>(j)],
                compose(verts[static_cast<std::size_t>(j)], inverse_automorphism(ta[static_cast<std::size_t>(j)])));
  return make_diagram({make_complex(std::move(tops)), make_complex(std::move(bots))}, {verts});
}

}  // namespace

NecessityReport necessity_search(int trials, std::uint64_t seed) {
  NecessityReport r;
  r.trials = trials;
  GabrielTopology G = GabrielTopology::goldie();
  for (int i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    Diagram d;
    try {
      d = rng.chance(1, 2) ? gen_thin_necessity(rng) : gen_ladder(LemmaKind::Four, 1, rng, G, true);
    } catch (const Error&) {
      continue;
    }
    const CochainComplex& top = d.rows[0];
    const CochainComplex& bottom = d.rows[1];
    const std::vector<Morphism>& t = d.verticals[0];
    if (!is_e_exact(top) || !is_e_exact(bottom)) continue;
    if (!is_e_epi(t[0]) || !is_e_epi(t[2]) || !is_injective(t[3])) continue;
    if (is_nonsingular(bottom.module_at(1))) continue;  // dropped hypothesis must actually fail
    ++r.instances;
    if (!is_e_epi(t[1])) {
      if (r.violations == 0) {
        r.first_seed = derive_seed(seed, static_cast<std::uint64_t>(i));
        r.first_witness = diagram_json(d).dump();
      }
      ++r.violations;
    }
  }
  return r;
}

std::string necessity_text(const NecessityReport& r) {
  std::string s = "four-lemma without the nonsingularity hypothesis: ";
  s += std::to_string(r.instances) + " qualifying instances in " + std::to_string(r.trials) +
       " trials, " + std::to_string(r.violations) + " conclusion failures\n";
  if (r.violations > 0)
    s += "hypothesis is necessary; first witness at seed " + std::to_string(r.first_seed) + "\n";
  else
    s += "none found (not a proof of impossibility)\n";
  return s;
}

std::string no_functor_text(const NoFunctorDemo& d) {
  auto b = [](bool v) { return v ? "yes" : "no"; };
  std::string s;
  s += "witness module Z/2 over Z/4 singular: ";
  s += b(d.witness_module_singular);
  s += "\ncomplex S -> S+S -> 0 e-exact: ";
  s += b(!d.witness_complex_not_e_exact);
  s += "\nessential monos turned into isos by localization: " +
       std::to_string(d.essential_monos_localized) + "/" +
       std::to_string(d.essential_monos_checked);
  s += "\nessential extension pairs collapsed by localization: " +
       std::to_string(d.extensions_collapsed) + "/" + std::to_string(d.extensions_checked);
  s += "\nZ-witness Z/2 -> Z/2+Z/2 -> 0 localization-exact: ";
  s += b(d.z_witness_loc_exact);
  s += "\nZ-witness e-exact: ";
  s += b(!d.z_witness_not_e_exact);
  s += "\nconclusion (no exact functor can decide e-exactness): ";
  s += b(d.conclusion);
  s += "\n";
  return s;
}

}  // namespace eexact
