//! Runs every acceptance criterion and prints one line per criterion.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tanglecount::bicoloured::BicolouredGraph;
use tanglecount::canon::{aut_order_bruteforce, canonical_form};
use tanglecount::enumerate::{
    assemble, count_labelled_via_burnside, enumerate_bicoloured, enumerate_posets_oracle,
    enumerate_tangles, generate_31free, PartData, PartSpec,
};
use tanglecount::series::{
    asymptotic_report, b_lbl_counts, b_unl_counts, distance_from_one, p_lbl_counts, p_unl_counts,
    rat, skeleton_series, solve_counting_series, tangle_diagonal_unl, tangle_series_unl, to_decimal,
    Rational, Series1,
};
use tanglecount::skeleton::{commutes, enumerate_skeleta, Letter, SkeletonWord};
use tanglecount::tangle::{aut_order, skeleton_of};
use tanglecount::Poset;

const GOLDEN_UNLABELLED: [&str; 23] = [
    "1", "1", "2", "5", "15", "49", "173", "639", "2469", "9997", "43109", "205092", "1153646",
    "8523086", "91156133", "1446766659", "32998508358", "1047766596136", "45632564217917",
    "2711308588849394", "219364550983697100", "24151476334929009951",
    "3618445112608409433287",
];

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `generate_31free(n)` for `n = 0..=11`, with the time it took.
fn generated() -> &'static (Vec<Vec<Poset>>, Duration) {
    static CACHE: OnceLock<(Vec<Vec<Poset>>, Duration)> = OnceLock::new();
    CACHE.get_or_init(|| {
        let start = Instant::now();
        let all = (0..=11).map(|n| generate_31free(n).unwrap()).collect();
        (all, start.elapsed())
    })
}

/// Every (3+1)-free poset on at most 7 vertices, from the brute-force oracle.
fn small_free_posets() -> &'static Vec<Vec<Poset>> {
    static CACHE: OnceLock<Vec<Vec<Poset>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        (0..=7)
            .map(|n| {
                enumerate_posets_oracle(n, false)
                    .unwrap()
                    .into_iter()
                    .filter(Poset::is_31_free)
                    .collect()
            })
            .collect()
    })
}

fn golden_sequence() -> Check {
    let start = Instant::now();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = tanglecount::cli::run(
        ["tanglecount", "count", "--mode", "unlabelled", "--upto", "22"],
        &mut out,
        &mut err,
    );
    let elapsed = start.elapsed();
    ensure(code == 0, || format!("exit status {code}"))?;
    let got: Vec<String> = String::from_utf8(out)
        .unwrap()
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap_or_default().to_string())
        .collect();
    ensure(got == GOLDEN_UNLABELLED, || format!("got {got:?}"))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("23 terms exact through {} in {elapsed:.2?}", GOLDEN_UNLABELLED[22]))
}

fn bicoloured_baseline() -> Check {
    let unl = b_unl_counts(6);
    let lbl = b_lbl_counts(2);
    let small: Vec<BigUint> = [1u32, 2, 4, 8, 17].iter().map(|&x| x.into()).collect();
    ensure(unl[..5] == small[..], || format!("b_unl(0..4) = {:?}", &unl[..5]))?;
    ensure(lbl[1] == 2u32.into() && lbl[2] == 6u32.into(), || format!("b_lbl = {lbl:?}"))?;
    ensure(unl[2] == 4u32.into(), || "b_unl(2) != 4".into())?;
    for n in 0..=6 {
        let direct: usize = (0..=n).map(|k| enumerate_bicoloured(k, n - k).unwrap().len()).sum();
        ensure(BigUint::from(direct) == unl[n], || format!("n={n}: enumeration {direct}, series {}", unl[n]))?;
    }
    Ok("b_unl(0..4) = 1,2,4,8,17; b_lbl(1,2) = 2,6; enumeration agrees for n <= 6".into())
}

fn catalan() -> Check {
    let c = Series1::x_over_one_minus_x(8);
    let p = solve_counting_series(&c, &Series1::zero(8), 8).map_err(|e| e.to_string())?;
    let want = Series1::from_integers(&[1, 1, 2, 5, 14, 42, 132, 429, 1430], 8);
    ensure(p == want, || format!("got {:?}", p.coeffs()))?;
    Ok("1,1,2,5,14,42,132,429,1430".into())
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let series = p_unl_counts(7);
    let mut counts = Vec::new();
    for n in 0..=7 {
        let brute: BTreeSet<_> = small_free_posets()[n].iter().map(canonical_form).collect();
        let built: BTreeSet<_> = generated().0[n].iter().map(canonical_form).collect();
        ensure(brute == built, || format!("n={n}: oracle and generator disagree"))?;
        ensure(generated().0[n].len() == built.len(), || format!("n={n}: repeated class"))?;
        ensure(BigUint::from(brute.len()) == series[n], || format!("n={n}: series {}", series[n]))?;
        counts.push(brute.len().to_string());
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("{} in {elapsed:.2?}", counts.join(",")))
}

fn generation_scale() -> Check {
    let (all, elapsed) = generated();
    let series = p_unl_counts(11);
    for (n, posets) in all.iter().enumerate() {
        ensure(BigUint::from(posets.len()) == series[n], || {
            format!("n={n}: generated {}, series {}", posets.len(), series[n])
        })?;
    }
    ensure(*elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("n=11 gives {} posets; n <= 11 generated in {elapsed:.2?}", all[11].len()))
}

fn labelled_bruteforce(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len())
        .filter(|mask| {
            let chosen: Vec<_> =
                (0..pairs.len()).filter(|&k| mask >> k & 1 == 1).map(|k| pairs[k]).collect();
            // A transitively closed acyclic relation equals its closure.
            match Poset::from_relations(n, &chosen) {
                Ok(p) => p.relations().len() == chosen.len() && p.is_31_free(),
                Err(_) => false,
            }
        })
        .count()
}

fn labelled_consistency() -> Check {
    let series = p_lbl_counts(9).map_err(|e| e.to_string())?;
    for n in 0..=9 {
        let orbits = count_labelled_via_burnside(n).map_err(|e| e.to_string())?;
        ensure(orbits == series[n], || format!("n={n}: orbits {orbits}, series {}", series[n]))?;
    }
    ensure(labelled_bruteforce(2) == 3 && labelled_bruteforce(3) == 19, || {
        "labelled brute force disagrees".into()
    })?;
    ensure(series[2] == 3u32.into() && series[3] == 19u32.into(), || "p_lbl(2,3) != 3,19".into())?;
    Ok(format!("orbit sums agree for n <= 9 (p_lbl(9) = {}); p_lbl(2,3) = 3,19", series[9]))
}

fn automorphism_product() -> Check {
    let mut total = 0;
    for posets in small_free_posets() {
        for p in posets {
            let product = aut_order(p).map_err(|e| e.to_string())?;
            let brute = aut_order_bruteforce(p).map_err(|e| e.to_string())?;
            ensure(product == BigUint::from(brute), || format!("{p:?}: {product} vs {brute}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} posets with n <= 7"))
}

fn skeleton_suite() -> Check {
    let series = skeleton_series(6, 6);
    let mut words = Vec::new();
    for r in 0..=6 {
        for s in 0..=6 - r {
            let list = enumerate_skeleta(r, s);
            ensure(*series.coeff(r, s) == Rational::from_integer(list.len().into()), || {
                format!("({r},{s}): {} skeleta, coefficient {}", list.len(), series.coeff(r, s))
            })?;
            words.extend(list);
        }
    }
    for w in &words {
        let path = w.to_dyck().map_err(|e| e.to_string())?;
        ensure(SkeletonWord::from_dyck(&path).as_ref() == Ok(w), || format!("round trip fails on {w}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let len = rng.gen_range(0..12);
        let raw: Vec<Letter> = (0..len)
            .map(|_| if rng.gen_bool(0.5) { Letter::C(rng.gen_range(1..=5)) } else { Letter::T(rng.gen_range(1..=4)) })
            .collect();
        let mut w = raw.clone();
        for _ in 0..rng.gen_range(0..50) {
            if w.len() >= 2 {
                let k = rng.gen_range(0..w.len() - 1);
                if commutes(w[k], w[k + 1]) {
                    w.swap(k, k + 1);
                }
            }
        }
        ensure(SkeletonWord::normalize(&raw) == SkeletonWord::normalize(&w), || {
            format!("normal forms differ for {raw:?} and {w:?}")
        })?;
    }
    let ten = skeleton_of(&common::ten_vertex_example().poset).map_err(|e| e.to_string())?;
    ensure(ten.to_string() == "c1 c2 c3 c4 t12 c3", || format!("ten-vertex skeleton {ten}"))?;
    let word: SkeletonWord = "c1 c2 c3 c1 t12 t12 c3 t23 c3 c1".parse()?;
    let g = BicolouredGraph::from_edges(2, 2, &[(0, 0), (1, 1)]);
    let spec = PartSpec(
        word.letters()
            .iter()
            .map(|l| if l.is_clone() { PartData::CloneSize(2) } else { PartData::TangleIso(g.clone()) })
            .collect(),
    );
    let big = assemble(&word, &spec).map_err(|e| e.to_string())?;
    let got = skeleton_of(&big).map_err(|e| e.to_string())?;
    ensure(big.len() == 26 && got.to_string() == "c1 c2 c3 c1 t12 t12 c3 t23 c3 c1", || {
        format!("26-vertex skeleton {got}")
    })?;
    Ok(format!("{} skeleta checked; 1000 swap sequences; both worked skeleta match", words.len()))
}

fn relations_suite() -> Check {
    let mut checked = 0;
    for posets in small_free_posets() {
        for p in posets {
            common::check_relation_clauses(p)?;
            checked += 1;
        }
    }
    let pool: Vec<&Poset> = generated().0[8..=11].iter().flatten().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x2b1);
    for _ in 0..10_000 {
        let p = pool.choose(&mut rng).unwrap();
        let perm: Vec<usize> = {
            let mut v: Vec<usize> = (0..p.len()).collect();
            v.shuffle(&mut rng);
            v
        };
        let q = p.permuted(&perm);
        common::check_relation_clauses(&q)?;
        common::check_level_properties(&q)?;
    }
    Ok(format!("{checked} posets with n <= 7 and 10000 random posets with 8 <= n <= 11"))
}

fn tangle_series() -> Check {
    let t = tangle_series_unl(8, 8);
    for p in 0..=8 {
        for q in 0..=8 - p {
            let count = enumerate_tangles(p, q).map_err(|e| e.to_string())?.len();
            ensure(*t.coeff(p, q) == Rational::from_integer(count.into()), || {
                format!("x^{p} y^{q}: enumeration {count}, series {}", t.coeff(p, q))
            })?;
        }
    }
    let d = tangle_diagonal_unl(8);
    ensure(d.valuation() == Some(4) && *d.coeff(4) == rat(1), || "lowest term is not x^4".into())?;
    ensure(t.diagonal(8) == d, || "diagonal of T_unl(x, y) differs from 1 - 2x - 1/B_unl(x)".into())?;
    Ok("coefficients match for p + q <= 8; T_unl(x,x) = x^4 + ...".into())
}

fn asymptotic_trend() -> Check {
    let rows = asymptotic_report(22).map_err(|e| e.to_string())?;
    let (a, b) = (&rows[12], &rows[22]);
    let pairs = [
        ("p_unl/b_unl", &a.unl_ratio, &b.unl_ratio),
        ("p_lbl/b_lbl", &a.lbl_ratio, &b.lbl_ratio),
        ("n! b_unl/b_lbl", &a.sym_ratio, &b.sym_ratio),
    ];
    let mut notes = Vec::new();
    for (name, r12, r22) in pairs {
        ensure(distance_from_one(r22) < distance_from_one(r12), || {
            format!("{name}: |r-1| did not shrink from n=12 to n=22")
        })?;
        notes.push(format!("{name} {} -> {}", to_decimal(r12, 4), to_decimal(r22, 4)));
    }
    ensure(rows.iter().all(|r| r.unl_ratio > Rational::from_integer(0.into())), || "nonpositive ratio".into())?;
    Ok(notes.join("; "))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("golden unlabelled sequence", golden_sequence),
        ("bicoloured baseline", bicoloured_baseline),
        ("Catalan specialization", catalan),
        ("oracle equivalence", oracle_equivalence),
        ("generation through n = 11", generation_scale),
        ("labelled consistency", labelled_consistency),
        ("automorphism product", automorphism_product),
        ("skeleton suite", skeleton_suite),
        ("relation clauses", relations_suite),
        ("tangle series", tangle_series),
        ("asymptotic trend", asymptotic_trend),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} [{t:.2?}]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} [{t:.2?}]: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
