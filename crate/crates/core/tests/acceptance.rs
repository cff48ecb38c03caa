//! End-to-end acceptance checks, one test per criterion. Each prints a
//! single summary line so the suite doubles as a readable report.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use computads::catalog::{self, build, constants_k, minimal_comonoid, minimal_monoid};
use computads::{
    explicit_border, check_tensor_borders, circle, cube, find_isomorphism, globe, interval,
    oriental, quotient_by_relation, reduced_cylinder, smash, suspension, tensor_product, Chain,
    Computad, Error, GenName, GeneratorRelation, PointedComputad, QuotientMode, Sign, SteinerCell,
    SIGNS,
};

fn g(s: &str) -> GenName {
    s.parse().unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn small_shapes() -> Vec<(&'static str, Computad)> {
    vec![
        ("I", interval()),
        ("G2", globe(2)),
        ("G3", globe(3)),
        ("K", constants_k()),
        ("M", minimal_monoid()),
        ("Mop", minimal_comonoid()),
        ("S1", circle()),
    ]
}

#[test]
fn acceptance_1_explicit_border_formulas_match_truncation() {
    let shapes = small_shapes();
    let mut pairs = 0usize;
    let mut comparisons = 0usize;
    for (xn, x) in &shapes {
        for (yn, y) in &shapes {
            let report = check_tensor_borders(x, y, 4).unwrap();
            assert!(report.is_ok(), "{xn} (x) {yn}: {report}");
            pairs += report.pairs_checked;
            comparisons += report.comparisons;
        }
    }
    println!("criterion 1: PASS ({pairs} generator pairs, {comparisons} border comparisons, 0 mismatches)");
}

/// Grow a pool of genuinely composite cells by randomly composing
/// whatever happens to be composable.
fn grow_pool(x: &Computad, rng: &mut ChaCha8Rng, rounds: usize) -> Vec<SteinerCell> {
    let mut pool: Vec<SteinerCell> = x
        .all_generators()
        .map(|g| x.atom(g).unwrap())
        .collect();
    for _ in 0..rounds {
        let i = rng.gen_range(0..pool.len());
        let j = rng.gen_range(0..pool.len());
        let d = pool[i].dim().min(pool[j].dim());
        if d == 0 || pool.len() >= 220 {
            continue;
        }
        let m = rng.gen_range(0..d);
        if pool[i].border(m, Sign::Plus) == pool[j].border(m, Sign::Minus) {
            let c = pool[i].compose(&pool[j], m).unwrap();
            pool.push(c);
        }
    }
    pool
}

#[test]
fn acceptance_2_axioms_hold_on_catalog_and_random_composites() {
    for name in catalog::NAMES {
        let entry = build(name).unwrap();
        let report = entry.computad.validate();
        assert!(report.is_ok(), "{name}: {report}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut cases = 0usize;
    let mut assoc = 0usize;
    let mut interchange = 0usize;
    // a 2x2 grid of squares composes in both directions, which the cube
    // and oriental alone barely exercise
    let mut path2 = Computad::new();
    for pt in ["0", "1", "2"] {
        path2.add_point(g(pt)).unwrap();
    }
    let e01 = (path2.atom(&g("0")).unwrap(), path2.atom(&g("1")).unwrap());
    path2.add_generator(g("a"), e01.0, e01.1).unwrap();
    let e12 = (path2.atom(&g("1")).unwrap(), path2.atom(&g("2")).unwrap());
    path2.add_generator(g("b"), e12.0, e12.1).unwrap();
    let grid = tensor_product(&path2, &path2).unwrap();
    let grid3 = tensor_product(&grid, &interval()).unwrap();

    for ambient in [cube(3).unwrap(), oriental(4).unwrap(), grid, grid3] {
        let pool = grow_pool(&ambient, &mut rng, 3000);
        // index cells by each minus-border so composable partners can be
        // looked up instead of hoping a random pick matches
        let mut successors: BTreeMap<(usize, String), Vec<usize>> = BTreeMap::new();
        for (i, c) in pool.iter().enumerate() {
            for k in 0..c.dim() {
                successors
                    .entry((k, format!("{:?}", c.border(k, Sign::Minus))))
                    .or_default()
                    .push(i);
            }
        }
        // deterministic list of composable pairs two levels below both
        // dims, for the interchange law
        let mut deep_pairs: Vec<(usize, usize, usize)> = Vec::new();
        for (i, c) in pool.iter().enumerate() {
            for k in 0..c.dim().saturating_sub(1) {
                if let Some(js) = successors.get(&(k, format!("{:?}", c.border(k, Sign::Plus)))) {
                    for &j in js {
                        if pool[j].dim() >= k + 2 {
                            deep_pairs.push((i, j, k));
                        }
                    }
                }
            }
        }
        for (i, j, m) in deep_pairs.iter().copied().take(200) {
            let (x, y) = (&pool[i], &pool[j]);
            let d = x.dim().min(y.dim());
            let n = rng.gen_range(m + 1..d);
            let (s2, t2) = (x.border(n, Sign::Plus), y.border(n, Sign::Plus));
            let left = x
                .compose(&s2, n)
                .unwrap()
                .compose(&y.compose(&t2, n).unwrap(), m)
                .unwrap();
            let right = x
                .compose(y, m)
                .unwrap()
                .compose(&s2.compose(&t2, m).unwrap(), n)
                .unwrap();
            assert_eq!(left, right, "interchange at m={m} n={n}");
            cases += 1;
            interchange += 1;
        }
        for _ in 0..2600 {
            let x = &pool[rng.gen_range(0..pool.len())];
            if x.dim() == 0 {
                continue;
            }
            let n = rng.gen_range(0..=x.dim());
            let m = rng.gen_range(0..=x.dim());
            let a = if rng.gen() { Sign::Plus } else { Sign::Minus };
            let b = if rng.gen() { Sign::Plus } else { Sign::Minus };

            // iterated borders collapse to the inner or outer one
            let lhs = x.border(n, a).border(m, b);
            let rhs = if m < n { x.border(m, b) } else { x.border(n, a) };
            assert_eq!(lhs, rhs, "border law at m={m} n={n}");
            cases += 1;

            // composing with a border on either side changes nothing
            let k = rng.gen_range(0..x.dim());
            assert_eq!(&x.compose(&x.border(k, Sign::Plus), k).unwrap(), x);
            assert_eq!(&x.border(k, Sign::Minus).compose(x, k).unwrap(), x);
            cases += 2;

            // associativity on composable triples found via the index
            let k = rng.gen_range(0..x.dim());
            let y = successors
                .get(&(k, format!("{:?}", x.border(k, Sign::Plus))))
                .and_then(|c| c.get(rng.gen_range(0..c.len())).copied())
                .map(|i| &pool[i]);
            if let Some(y) = y {
                let z = successors
                    .get(&(k, format!("{:?}", y.border(k, Sign::Plus))))
                    .and_then(|c| c.get(rng.gen_range(0..c.len())).copied())
                    .map(|i| &pool[i]);
                if let Some(z) = z {
                    let left = x.compose(y, k).unwrap().compose(z, k).unwrap();
                    let right = x.compose(&y.compose(z, k).unwrap(), k).unwrap();
                    assert_eq!(left, right, "associativity at level {k}");
                    cases += 1;
                    assoc += 1;
                }

                // interchange on the same composable pair, padding the
                // grid with border units one level higher
                let d = x.dim().min(y.dim());
                let m = k;
                if d >= m + 2 {
                    let n = rng.gen_range(m + 1..d);
                    let (s2, t2) = (x.border(n, Sign::Plus), y.border(n, Sign::Plus));
                    let left = x
                        .compose(&s2, n)
                        .unwrap()
                        .compose(&y.compose(&t2, n).unwrap(), m)
                        .unwrap();
                    let right = x
                        .compose(y, m)
                        .unwrap()
                        .compose(&s2.compose(&t2, m).unwrap(), n)
                        .unwrap();
                    assert_eq!(left, right, "interchange at m={m} n={n}");
                    cases += 1;
                    interchange += 1;
                }
            }
        }
    }
    assert!(cases >= 1000, "only {cases} randomized cases");
    assert!(assoc >= 50, "only {assoc} associativity instances");
    assert!(interchange >= 50, "only {interchange} interchange instances");
    println!(
        "criterion 2: PASS (catalog valid; {cases} randomized law cases, {assoc} associativity, {interchange} interchange)"
    );
}

#[test]
fn acceptance_3_oriental_generator_counts() {
    for n in 1..=5 {
        let o = oriental(n).unwrap();
        let counts = o.counts();
        assert_eq!(counts.len(), n + 1);
        for (k, got) in counts.iter().enumerate() {
            assert_eq!(*got, binomial(n + 1, k + 1), "oriental({n}) dim {k}");
        }
    }
    println!("criterion 3: PASS (oriental(n) counts are C(n+1,k+1) for n <= 5)");
}

#[test]
fn acceptance_4_cube_generator_counts() {
    for n in 0..=6 {
        let c = cube(n).unwrap();
        let counts = c.counts();
        for (k, got) in counts.iter().enumerate() {
            assert_eq!(*got, binomial(n, k) << (n - k), "cube({n}) dim {k}");
        }
    }
    println!("criterion 4: PASS (cube(n) counts are C(n,k)*2^(n-k) for n <= 6)");
}

#[test]
fn acceptance_5_reversal_commutes_with_tensor() {
    let shapes: Vec<(&str, Computad)> = vec![
        ("I", interval()),
        ("I2", tensor_product(&interval(), &interval()).unwrap()),
        ("K", constants_k()),
        ("M", minimal_monoid()),
    ];
    let mut checked = 0usize;
    for (xn, x) in &shapes {
        for (yn, y) in &shapes {
            let left = tensor_product(x, y).unwrap().op_all();
            let right = tensor_product(&x.op_all(), &y.op_all()).unwrap();
            let witness = find_isomorphism(&left, &right)
                .unwrap_or_else(|| panic!("no isomorphism for {xn} (x) {yn}"));
            witness.validate(&left, &right).unwrap();
            checked += 1;
        }
    }
    println!("criterion 5: PASS ({checked} tensor pairs, reversal witnesses verified by border transport)");
}

#[test]
fn acceptance_6_smash_and_suspension_laws() {
    // the pointed two-point computad is the smash unit
    let mut s0 = Computad::new();
    s0.add_point(g("n")).unwrap();
    s0.add_point(g("s")).unwrap();
    let s0 = PointedComputad::new(s0, g("s")).unwrap();
    for name in ["M", "K", "S1"] {
        let entry = build(name).unwrap();
        let x = PointedComputad::new(entry.computad.clone(), entry.basepoint.clone().unwrap()).unwrap();
        let left = smash(&x, &s0).unwrap();
        let right = smash(&s0, &x).unwrap();
        let wl = find_isomorphism(&left.computad, &x.computad).unwrap();
        wl.validate(&left.computad, &x.computad).unwrap();
        let wr = find_isomorphism(&right.computad, &x.computad).unwrap();
        wr.validate(&right.computad, &x.computad).unwrap();
    }

    // the reduced cylinder is the smash with the interval plus a
    // disjoint basepoint
    let m = PointedComputad::new(minimal_monoid(), g("*")).unwrap();
    let mut ie = interval();
    ie.add_point(g("e")).unwrap();
    let ie = PointedComputad::new(ie, g("e")).unwrap();
    let via_smash = smash(&m, &ie).unwrap();
    let rc = reduced_cylinder(&m).unwrap();
    let w = find_isomorphism(&rc.computad, &via_smash.computad).unwrap();
    w.validate(&rc.computad, &via_smash.computad).unwrap();

    // suspension shifts every positive dimension up by one and borders
    // are suspended borders
    let s = suspension(&m, 1).unwrap();
    let mc = &m.computad;
    for d in 1..=mc.max_dim() {
        for gen in mc.generators(d) {
            if gen == &g("*") {
                continue;
            }
            let lifted = GenName::tensor(gen, &g("a"));
            assert_eq!(s.computad.dim_of(&lifted).unwrap(), d + 1);
            for sign in SIGNS {
                // border terms at the basepoint are crushed by the smash
                let source = mc.border_chain(gen, sign).unwrap();
                let expected = Chain::from_coeffs(
                    d,
                    source
                        .iter()
                        .filter(|(h, _)| *h != &g("*"))
                        .map(|(h, k)| (GenName::tensor(h, &g("a")), k.clone())),
                );
                let got_cell = s.computad.border(&lifted, sign).unwrap();
                assert_eq!(got_cell.component(d, sign), expected);
            }
        }
    }
    println!("criterion 6: PASS (smash unit, reduced cylinder, suspension shift all verified)");
}

#[test]
fn acceptance_7_bialgebra_reconstruction() {
    let b = build("bialgebra").unwrap().computad;
    assert_eq!(b.counts(), vec![1, 0, 1, 4, 4]);

    let mu_mu = g("(mu.mu)");
    let minus = b.border_chain(&mu_mu, Sign::Minus).unwrap();
    let expected = Chain::from_coeffs(
        3,
        [(g("(a.mu)"), 2.into()), (g("(mu.a)"), 2.into())],
    );
    assert_eq!(minus, expected);

    // evaluate the explicit level-3 expression on mu (x) mu in M (x) M
    // and push it through the smash: the surviving support must match
    let m = minimal_monoid();
    let mu = m.atom(&g("mu")).unwrap();
    let oracle = explicit_border(&mu, &mu, 3, Sign::Plus).unwrap();
    let surviving: BTreeSet<String> = oracle
        .top()
        .support()
        .map(|n| n.to_string())
        .filter(|n| !n.contains('*'))
        .collect();
    let plus = b.border_chain(&mu_mu, Sign::Plus).unwrap();
    let got: BTreeSet<String> = plus.support().map(|n| n.to_string()).collect();
    assert_eq!(got, surviving);
    println!("criterion 7: PASS (bialgebra counts and mu-pair borders confirmed by the explicit expression)");
}

#[test]
fn acceptance_8_defining_relations_are_compatible() {
    // the full same-dimension identification of the 3-cube
    let c3 = cube(3).unwrap();
    let mut rel = GeneratorRelation::new();
    for d in 0..=c3.max_dim() {
        let gens = c3.generators(d);
        for w in gens.windows(2) {
            rel.relate(w[0].clone(), w[1].clone());
        }
    }
    let (r, _) = quotient_by_relation(&c3, &rel, QuotientMode::Reject).unwrap();
    assert_eq!(r.counts(), vec![1, 1, 1, 1]);

    // the fibrewise end identification of the triple interval tensor
    let i = interval();
    let cube_iii = tensor_product(&tensor_product(&i, &i).unwrap(), &i).unwrap();
    let mut fib = GeneratorRelation::new();
    for end in ["0", "1"] {
        for s in i.all_generators() {
            for t in i.all_generators() {
                let member = GenName::tensor(&GenName::tensor(&g(end), s), t);
                let anchor = if end == "0" {
                    GenName::tensor(&GenName::tensor(&g(end), &g("0")), t)
                } else {
                    GenName::tensor(&GenName::tensor(&g(end), s), &g("0"))
                };
                fib.relate(anchor, member);
            }
        }
    }
    let (fr, _) = quotient_by_relation(&cube_iii, &fib, QuotientMode::Reject).unwrap();
    assert!(fr.validate().is_ok());

    // the unit identification behind the commutative monoid and the
    // interacting-bialgebras gluing both go through
    assert!(build("commutative_monoid").is_ok());
    assert!(catalog::interacting_bialgebras().is_ok());

    // a corrupted relation is rejected and the diagnostic names the class
    let mut bad = GeneratorRelation::new();
    bad.relate(g("(0.0.a)"), g("(a.1.1)"));
    let err = quotient_by_relation(&cube_iii, &bad, QuotientMode::Reject).unwrap_err();
    match err {
        Error::IncompatibleRelation { class, level, .. } => {
            assert!(class.contains("(0.0.a)"), "diagnostic was {class}");
            assert_eq!(level, 0);
        }
        other => panic!("expected a located incompatibility, got {other}"),
    }
    println!("criterion 8: PASS (defining relations compatible, corrupted relation rejected with location)");
}

#[test]
fn acceptance_9_determinism_and_round_trips() {
    for name in catalog::NAMES {
        let first = build(name).unwrap();
        let second = build(name).unwrap();
        let json_a = computads::io::to_json(&first.computad, first.basepoint.as_ref(), None);
        let json_b = computads::io::to_json(&second.computad, second.basepoint.as_ref(), None);
        assert_eq!(json_a, json_b, "repeated builds of {name} differ");
        let (back, base) = computads::io::from_json(&json_a).unwrap();
        assert_eq!(
            computads::io::to_json(&back, base.as_ref(), None),
            json_a,
            "round trip of {name} is not identical"
        );
    }
    println!("criterion 9: PASS (byte-identical rebuilds and round trips for every catalog entry)");
}
