//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fail.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use bottsam_core::*;
use common::*;
use rand::Rng;

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn run(id: u32, title: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    let result = match result {
        Ok(detail) if elapsed > budget => Err(format!("{detail}; exceeded budget of {budget:?}")),
        other => other,
    };
    let (tag, detail) = match &result {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    println!("{tag} criterion {id:>2}: {title} [{:.2}s] {detail}", elapsed.as_secs_f64());
    result.is_ok()
}

fn sl4() -> BottData {
    type_a(3, &[2, 1, 3, 2])
}

fn c_table() -> Outcome {
    let bott = sl4();
    let table = sl4_table();
    for (i, row) in table.iter().enumerate() {
        let computed: BTreeSet<Vec<i64>> = bott.c_forms(i).unwrap().into_iter().map(|f| f.0).collect();
        let expected: BTreeSet<Vec<i64>> = row.iter().cloned().collect();
        ensure!(computed == expected, "forms at index {} differ: {:?}", i + 1, computed);
    }
    let mut r = rng(1);
    for _ in 0..200 {
        let a = random_coeffs(&mut r, 4, 10);
        for (i, row) in table.iter().enumerate() {
            let got: BTreeSet<i64> = SignVector::all(4).map(|e| bott.big_c(&a, i, &e).unwrap()).collect();
            let want: BTreeSet<i64> = row.iter().map(|f| f.iter().zip(&a.0).map(|(c, x)| c * x).sum()).collect();
            ensure!(got == want, "a = {:?}, index {}: {:?} vs {:?}", a.0, i + 1, got, want);
        }
    }
    Ok("forms and 200 random evaluations match".into())
}

fn vanishing_pattern() -> Outcome {
    let bott = sl4();
    let want = BTreeSet::from([0, 3, 4]);
    let r = vanishing_report(&bott, &DivisorCoeffs(vec![-1, -1, 1, 0]), None).unwrap();
    ensure!(r.vanished_degrees.is_superset(&want), "a = (-1,-1,1,0): {:?}", r.vanished_degrees);
    let mut checked = 0;
    for a1 in -5..=5 {
        for a2 in -5..=-1 {
            for a4 in 0..=4 {
                for a3 in a4..=a4 + 4 {
                    let a = DivisorCoeffs(vec![a1, a2, a3, a4]);
                    let r = vanishing_report(&bott, &a, None).unwrap();
                    if r.certificate_minus.eta[0] != Eta::Zero || r.certificate_plus.eta[0] != Eta::Zero {
                        continue;
                    }
                    ensure!(r.vanished_degrees.is_superset(&want), "a = {:?}: {:?}", a.0, r.vanished_degrees);
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("vanished degrees contain {{0,3,4}} on {checked} family members"))
}

fn degree_one_witness() -> Outcome {
    let bott = sl4();
    let div = ToricDivisor::picard(vec![2; 4]);
    let table = cohomology_table(&bott, &div, &TableOptions::default().with_witnesses()).unwrap();
    ensure!(table.dims[1] >= 1, "h^1 = {}", table.dims[1]);
    let witnesses = table.witnesses.unwrap_or_default();
    let w = witnesses
        .iter()
        .find(|w| w.degree == 1)
        .ok_or("no degree-1 witness recorded")?;
    ensure!(
        classify_weight(&bott, &div, &w.weight).unwrap() == WeightClassification::Concentrated(1),
        "witness {:?} not concentrated in degree 1",
        w.weight
    );
    let cech = cech_weight(&bott, &div, &w.weight).unwrap();
    ensure!(cech == CohomologyDims::single(1, 1), "Čech gives {cech} at {:?}", w.weight);
    Ok(format!("dims {:?}, witness {:?} confirmed by Čech", table.dims, w.weight.0))
}

#[derive(Default)]
struct Sweep {
    instances: usize,
    weights: usize,
    mismatches: Vec<String>,
    shell_violations: Vec<String>,
}

fn sweep_instance(bott: &BottData, div: &ToricDivisor, out: &mut Sweep) {
    let inner = weight_box(bott, div).unwrap();
    let outer = inner.enlarged(1).unwrap();
    out.instances += 1;
    for m in outer.points() {
        let cech = cech_weight(bott, div, &m).unwrap();
        if inner.contains(&m) {
            out.weights += 1;
            let closed = match classify_weight(bott, div, &m).unwrap() {
                WeightClassification::AllZero => CohomologyDims::zero(),
                WeightClassification::Concentrated(d) => CohomologyDims::single(d, 1),
            };
            let simplicial = demazure_weight(bott, div, &m).unwrap();
            if closed != simplicial || closed != cech {
                out.mismatches
                    .push(format!("word {:?} a {:?} b {:?} m {:?}", bott.word().one_based(), div.a, div.b, m.0));
            }
        } else if !cech.is_zero() {
            out.shell_violations
                .push(format!("word {:?} a {:?} b {:?} m {:?}", bott.word().one_based(), div.a, div.b, m.0));
        }
    }
}

fn equivalence_sweep() -> Sweep {
    let mut out = Sweep::default();
    for rank in [2, 3] {
        for bott in all_type_a_words(rank, 3) {
            for a in all_vectors(bott.len(), -2, 2) {
                sweep_instance(&bott, &ToricDivisor::picard(a), &mut out);
            }
        }
    }
    let mut r = rng(4);
    let mut extra = 0;
    while extra < 20 {
        let rank = r.gen_range(2..=3);
        let len = r.gen_range(1..=3);
        let letters: Vec<usize> = (0..len).map(|_| r.gen_range(1..=rank)).collect();
        let bott = type_a(rank, &letters);
        let div = ToricDivisor::new(random_vec(&mut r, len, 2), random_vec(&mut r, len, 2)).unwrap();
        if div.is_picard() {
            continue;
        }
        sweep_instance(&bott, &div, &mut out);
        extra += 1;
    }
    out
}

fn three_way(sweep: &Sweep) -> Outcome {
    ensure!(
        sweep.mismatches.is_empty(),
        "{} mismatches, first: {}",
        sweep.mismatches.len(),
        sweep.mismatches[0]
    );
    Ok(format!("{} instances, {} weights agree", sweep.instances, sweep.weights))
}

/// Random `(gcm, word, a)` with rank ≤ 4, length ≤ 6, `|a_i| ≤ 4`.
fn theorem_family() -> Vec<(BottData, DivisorCoeffs)> {
    let mut r = rng(5);
    (0..500)
        .map(|_| {
            let bott = random_bott(&mut r, 4, 1, 6, -3);
            let a = random_coeffs(&mut r, bott.len(), 4);
            (bott, a)
        })
        .collect()
}

fn toric_vanishing(family: &[(BottData, DivisorCoeffs)]) -> Outcome {
    let opts = TableOptions::default();
    let mut certificates = 0;
    let mut nonzero_claims = 0;
    for (bott, a) in family {
        let report = vanishing_report(bott, a, Some(&opts)).map_err(|e| format!("{e} on {a:?}"))?;
        let table = report.toric.as_ref().unwrap();
        for cert in report.profile.admissible_certificates() {
            ensure!(
                vanishing::certificate_holds(table, &cert),
                "word {:?} a {:?} eta {} table {:?}",
                bott.word().one_based(),
                a.0,
                cert,
                table.dims
            );
            certificates += 1;
        }
        if table.dims.iter().filter(|&&d| d > 0).count() > 1 {
            nonzero_claims += 1;
        }
    }
    Ok(format!(
        "{} instances, {certificates} admissible certificates hold ({nonzero_claims} tables with several nonzero degrees)",
        family.len()
    ))
}

fn corner_identity(family: &[(BottData, DivisorCoeffs)]) -> Outcome {
    let mut checks = 0;
    for (bott, a) in family {
        let div = ToricDivisor::from(a);
        for eps in SignVector::all(bott.len()) {
            let x = bott.x_vector(a, &eps).unwrap();
            for i in 0..bott.len() {
                let on = Ray { index: i, sign: eps[i] };
                let c = bott.big_c(a, i, &eps).unwrap();
                ensure!(bott.phi(&div, &x, on).unwrap() == 0, "phi(x, {on}) != 0 for eps {eps}");
                ensure!(
                    bott.phi(&div, &x, on.opposite()).unwrap() == i128::from(c),
                    "phi(x, {}) != C for eps {eps}",
                    on.opposite()
                );
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (eps, i) pairs"))
}

fn algorithm_equivalences() -> Outcome {
    let mut r = rng(7);
    let mut pairs = 0;
    for _ in 0..1000 {
        let bott = random_bott(&mut r, 4, 1, 8, -3);
        let n = bott.len();
        let a = random_coeffs(&mut r, n, 5);
        for eps in SignVector::all(n) {
            for i in 0..n {
                for j in i + 1..n {
                    ensure!(
                        bott.alpha_reflect(i, j, &eps).unwrap() == bott.alpha_path(i, j, &eps).unwrap(),
                        "alpha({i},{j}) differs for word {:?} eps {eps}",
                        bott.word().one_based()
                    );
                    pairs += 1;
                }
            }
            ensure!(
                bott.x_vector(&a, &eps).unwrap() == bott.x_vector_path(&a, &eps).unwrap(),
                "x differs for eps {eps}"
            );
        }
    }
    Ok(format!("1000 instances, {pairs} alpha values"))
}

fn serre_duality() -> Outcome {
    let mut r = rng(8);
    let opts = TableOptions::default();
    for _ in 0..100 {
        let bott = random_bott(&mut r, 3, 1, 5, -2);
        let div = random_toric(&mut r, bott.len(), 3);
        let d = cohomology_table(&bott, &div, &opts).unwrap();
        let k = cohomology_table(&bott, &div.serre_dual().unwrap(), &opts).unwrap();
        let reversed: Vec<u64> = k.dims.iter().rev().copied().collect();
        ensure!(d.dims == reversed, "a {:?} b {:?}: {:?} vs {:?}", div.a, div.b, d.dims, k.dims);
    }
    Ok("100 instances".into())
}

fn classical() -> Outcome {
    let opts = TableOptions::default();
    let line = type_a(1, &[1]);
    let t = cohomology_table(&line, &ToricDivisor::picard(vec![3]), &opts).unwrap();
    ensure!(t.dims == [4, 0], "a = 3: {:?}", t.dims);
    let t = cohomology_table(&line, &ToricDivisor::picard(vec![-2]), &opts).unwrap();
    ensure!(t.dims == [0, 1], "a = -2: {:?}", t.dims);
    let mut words = all_type_a_words(2, 3);
    words.extend(all_type_a_words(3, 3));
    let mut r = rng(9);
    words.extend((0..200).map(|_| random_bott(&mut r, 4, 1, 8, -3)));
    for bott in &words {
        let n = bott.len();
        let t = cohomology_table(bott, &ToricDivisor::picard(vec![0; n]), &opts).unwrap();
        let mut want = vec![0; n + 1];
        want[0] = 1;
        ensure!(t.dims == want, "word {:?}: {:?}", bott.word().one_based(), t.dims);
    }
    Ok(format!("projective line and {} words with a = 0", words.len()))
}

fn bound_validation(sweep: &Sweep) -> Outcome {
    ensure!(
        sweep.shell_violations.is_empty(),
        "{} shell weights with cohomology, first: {}",
        sweep.shell_violations.len(),
        sweep.shell_violations[0]
    );
    let mut corners = 0;
    let mut family: Vec<(BottData, DivisorCoeffs)> = Vec::new();
    for rank in [2, 3] {
        for bott in all_type_a_words(rank, 3) {
            for a in all_vectors(bott.len(), -2, 2) {
                family.push((bott.clone(), DivisorCoeffs(a)));
            }
        }
    }
    family.extend(theorem_family());
    for (bott, a) in &family {
        let bx = weight_box(bott, &ToricDivisor::from(a)).unwrap();
        for eps in SignVector::all(bott.len()) {
            let x = bott.x_vector(a, &eps).unwrap();
            ensure!(bx.contains(&x), "corner {eps} = {:?} outside box for a {:?}", x.0, a.0);
            corners += 1;
        }
    }
    Ok(format!("shell empty on {} instances; {corners} corners inside", sweep.instances))
}

fn main() {
    let second = Duration::from_secs(1);
    let minutes = Duration::from_secs(300);
    let mut ok = true;
    ok &= run(1, "C-table reproduction", second, c_table);
    ok &= run(2, "vanishing pattern of the worked example", second, vanishing_pattern);
    ok &= run(3, "nontrivial degree-1 toric cohomology", Duration::from_secs(10), degree_one_witness);

    let start = Instant::now();
    let sweep = catch_unwind(equivalence_sweep);
    let sweep_time = start.elapsed();
    let sweep = sweep.ok();
    ok &= run(4, "closed form = simplicial = Čech", minutes.saturating_sub(sweep_time), || match &sweep {
        Some(s) => three_way(s).map(|d| format!("{d}, sweep {:.2}s", sweep_time.as_secs_f64())),
        None => Err("sweep panicked".into()),
    });

    let family = theorem_family();
    ok &= run(5, "toric vanishing for every admissible sign choice", minutes, || toric_vanishing(&family));
    ok &= run(6, "corner identity", minutes, || corner_identity(&family));
    ok &= run(7, "alpha and corner algorithm equivalences", minutes, algorithm_equivalences);
    ok &= run(8, "Serre duality", minutes, serre_duality);
    ok &= run(9, "classical sanity tables", minutes, classical);
    ok &= run(10, "weight box bounds", minutes, || match &sweep {
        Some(s) => bound_validation(s),
        None => Err("sweep panicked".into()),
    });

    if ok {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: FAILED");
        std::process::exit(1);
    }
}
