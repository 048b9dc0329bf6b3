//! Acceptance criteria 1-12. Runs without the libtest harness so that every
//! criterion prints one line whether it passes or not; the process exits
//! non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use suslin_core::clifford;
use suslin_core::epin::{self, EpinKind};
use suslin_core::forms;
use suslin_core::spin::{self, SpinPair};
use suslin_core::suslin::{self, SuslinMatrix};
use suslin_core::{Mat, Ring, SuslinPair};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome {
            ok,
            detail: detail.into(),
        }
    }
}

/// Counts sub-checks and keeps a label for each failure.
#[derive(Default)]
struct Tally {
    count: usize,
    failed: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failed.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(self) -> Outcome {
        let mut detail = if self.failed.is_empty() {
            format!("{} checks", self.count)
        } else {
            format!(
                "{}/{} checks failed: {}",
                self.failed.len(),
                self.count,
                self.failed.join("; ")
            )
        };
        for n in &self.notes {
            detail.push_str("; ");
            detail.push_str(n);
        }
        Outcome::new(self.failed.is_empty(), detail)
    }
}

fn within(t: &mut Tally, start: Instant, limit: Duration) {
    let elapsed = start.elapsed();
    t.check(elapsed < limit, || format!("runtime {elapsed:.1?} exceeds {limit:?}"));
}

fn c1_core_identities() -> Outcome {
    let start = Instant::now();
    let mut t = Tally::default();
    for m in 1..=5 {
        let r = common::ab_ring(m);
        let p = SuslinPair::symbolic(&r, "a", "b", m).unwrap();
        let s = SuslinMatrix::new(p.clone());
        let q = p.q();
        let qi = Mat::scalar(&q, s.size());
        t.check(s.mat() * s.bar().mat() == qi, || format!("S·bar(S) != qI at m = {m}"));
        t.check(s.bar().mat() * s.mat() == qi, || format!("bar(S)·S != qI at m = {m}"));
        if (2..=4).contains(&m) {
            let det = s.mat().det();
            let e = 1u64 << (m - 2);
            t.check(det == q.pow(e), || format!("det S != q^{e} at m = {m}"));
            let literal = 1u64 << (m - 1);
            if det != q.pow(literal) {
                t.note(format!("m = {m}: det S = q^{e}, not q^{literal}"));
            }
        }
    }
    within(&mut t, start, Duration::from_secs(60));
    t.finish()
}

fn c2_eq1() -> Outcome {
    let mut t = Tally::default();
    for n in 1..=4 {
        let m = n + 1;
        let r = common::ab_ring(m);
        let s = SuslinMatrix::new(SuslinPair::symbolic(&r, "a", "b", m).unwrap());
        let lhs = forms::star(s.mat(), n).unwrap();
        let rhs = if n % 2 == 0 {
            s.mat().clone()
        } else {
            s.bar().into_mat()
        };
        t.check(lhs == rhs, || format!("J Sᵀ Jᵀ mismatch at n = {n}"));
    }
    t.finish()
}

fn c3_involution() -> Outcome {
    let mut t = Tally::default();
    for (n, size) in [(2, 4), (3, 8)] {
        let names: Vec<_> = common::generic_names(size, "m")
            .into_iter()
            .chain(common::generic_names(size, "p"))
            .collect();
        let r = Ring::poly(names).unwrap();
        let m = common::generic(&r, size, "m");
        let p = common::generic(&r, size, "p");
        let st = |x: &Mat| forms::star(x, n).unwrap();
        t.check(st(&st(&m)) == m, || format!("star∘star != id at size {size}"));
        t.check(st(&(&m * &p)) == &st(&p) * &st(&m), || {
            format!("star(MN) != star(N)star(M) at size {size}")
        });
        t.check(st(&m) == forms::star_blockwise(&m, n).unwrap(), || {
            format!("star != blockwise at size {size}")
        });
    }
    for n in 1..=4 {
        let r = common::ab_ring(n);
        let x = clifford::phi(&SuslinPair::symbolic(&r, "a", "b", n).unwrap());
        t.check(x.star().into_mat() == -x.mat(), || format!("star(φ) != -φ at n = {n}"));
    }
    t.finish()
}

fn c4_fundamental() -> Outcome {
    let mut t = Tally::default();
    for m in 2..=3 {
        let names: Vec<_> = ["a", "b", "c", "d"]
            .iter()
            .flat_map(|p| (1..=m).map(move |i| format!("{p}{i}")))
            .collect();
        let r = Ring::poly(names).unwrap();
        let x = SuslinMatrix::new(SuslinPair::symbolic(&r, "a", "b", m).unwrap());
        let y = SuslinMatrix::new(SuslinPair::symbolic(&r, "c", "d", m).unwrap());
        check_xyx(&mut t, &x, &y, &format!("symbolic m = {m}"));
    }
    let r = Ring::Modular(7);
    let mut g = common::rng(4);
    for k in 0..500 {
        let x = SuslinMatrix::new(common::rand_pair(&mut g, &r, 4));
        let y = SuslinMatrix::new(common::rand_pair(&mut g, &r, 4));
        check_xyx(&mut t, &x, &y, &format!("Z/7 m = 4 sample {k}"));
    }
    t.finish()
}

fn check_xyx(t: &mut Tally, x: &SuslinMatrix, y: &SuslinMatrix, label: &str) {
    let prod = &(x.mat() * y.mat()) * x.mat();
    match suslin::extract(&prod) {
        None => t.check(false, || format!("XYX not Suslin ({label})")),
        Some(p) => {
            let bar = SuslinMatrix::new(p).bar().into_mat();
            let rhs = &(x.bar().mat() * y.bar().mat()) * x.bar().mat();
            t.check(bar == rhs, || format!("bar(XYX) mismatch ({label})"));
        }
    }
}

fn c5_spin6() -> Outcome {
    let start = Instant::now();
    let mut t = Tally::default();
    let names: Vec<_> = common::generic_names(4, "m")
        .into_iter()
        .chain((1..=3).flat_map(|i| [format!("a{i}"), format!("b{i}")]))
        .collect();
    let r = Ring::poly(names).unwrap();
    let m = common::generic(&r, 4, "m");
    let s = suslin::sus(&SuslinPair::symbolic(&r, "a", "b", 3).unwrap());
    let ms = forms::star(&m, 2).unwrap();
    t.check(suslin::extract(&(&(&m * &s) * &ms)).is_some(), || {
        String::from("MSM* not Suslin")
    });

    let det = m.det();
    let l = suslin::extract(&(&m * &ms)).map(|p| p.q());
    t.check(l.as_ref() == Some(&det), || String::from("l(MM*) != det M"));
    let closed = spin::mm_star_length_blocks(&m).unwrap();
    t.check(closed == det, || {
        String::from("AA*DD* + BB*CC* - AC*DB* - BD*CA* != det M")
    });

    // the all-plus version of the block formula, evaluated symbolically
    let [a, b, c, d] = m.quadrants();
    let st = |x: &Mat| forms::star(x, 1).unwrap();
    let term = |w: &Mat, x: &Mat, y: &Mat, v: &Mat| &(&(w * &st(x)) * y) * &st(v);
    let plus = &(&(&term(&a, &a, &d, &d) + &term(&b, &b, &c, &c)) + &term(&a, &c, &d, &b)) + &term(&b, &d, &c, &a);
    if plus.as_scalar().as_ref() != Some(&det) {
        t.note("all-plus block form != det M (signs of the AC*DB*, BD*CA* terms must be negative)");
    }
    within(&mut t, start, Duration::from_secs(30));
    t.finish()
}

fn c6_spin4() -> Outcome {
    let mut t = Tally::default();
    let r = Ring::Modular(5);
    let mut g = common::rng(6);
    for k in 0..200 {
        let (g1, g2) = (common::rand_sl2(&mut g, &r), common::rand_sl2(&mut g, &r));
        let x = SpinPair::new(2, g1.clone(), g2.clone()).unwrap();
        t.check(spin::in_spin(&x), || format!("SL2 pair {k} not in Spin"));
        t.check(spin::spin4_check(&g1, &g2).unwrap(), || {
            format!("spin4_check false on pair {k}")
        });
        let s = common::rand_mat(&mut g, &r, 2);
        let moved = &(&g1 * &s) * &g2.inverse().unwrap();
        t.check(moved.det() == s.det(), || format!("action changed det on pair {k}"));
    }
    let mut k = 0;
    while k < 50 {
        let (g1, g2) = (common::rand_mat(&mut g, &r, 2), common::rand_mat(&mut g, &r, 2));
        if g1.det().is_one() {
            continue;
        }
        let x = SpinPair::new(2, g1, g2).unwrap();
        t.check(!spin::in_u0(&x), || format!("det != 1 pair {k} in U0"));
        k += 1;
    }
    t.finish()
}

fn c7_epin6() -> Outcome {
    let report = epin::epin6_equals_e4_check().unwrap();
    let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
    Outcome::new(
        report.passed(),
        if failed.is_empty() {
            format!("{} checks", report.checks.len())
        } else {
            format!("failed: {}", failed.join("; "))
        },
    )
}

fn c8_table1_commutators() -> Outcome {
    let mut t = Tally::default();
    for n in [3, 5] {
        for report in [
            epin::table1_check(n).unwrap(),
            epin::commutator_relations_check(n).unwrap(),
        ] {
            for c in &report.checks {
                t.check(c.passed, || format!("{} n = {n}: {}", report.suite, c.name));
            }
        }
    }
    t.finish()
}

fn c9_norm() -> Outcome {
    let mut t = Tally::default();
    for modulus in [6, 7] {
        let r = Ring::Modular(modulus);
        let mut g = common::rng(900 + modulus);
        for k in 0..300 {
            let u = common::rand_unit(&mut g, &r);
            let a = common::rand_eg_product(&mut g, &r, 3, 4).scale(&u);
            let v = common::rand_unit(&mut g, &r);
            let b = common::rand_eg_product(&mut g, &r, 3, 4).scale(&v);
            let d = |m: &Mat| spin::norm_d(m, 3).unwrap();
            t.check(d(&(&a * &b)) == &d(&a) * &d(&b), || {
                format!("d(gh) != d(g)d(h), Z/{modulus} sample {k}")
            });
            let s = SuslinMatrix::new(common::rand_pair(&mut g, &r, 3));
            let gs = spin::spin_action(&a, &s, 3).unwrap();
            t.check(gs.length() == &d(&a) * &s.length(), || {
                format!("l(g•S) != l(gg*)l(S), Z/{modulus} sample {k}")
            });
        }
    }
    t.finish()
}

fn c10_pi() -> Outcome {
    let mut t = Tally::default();
    let r = Ring::poly(["a", "b", "c"]).unwrap();
    let (a, b, c) = (r.var("a").unwrap(), r.var("b").unwrap(), r.var("c").unwrap());
    let gens = [
        epin::epin_gen(EpinKind::EE, 1, 2, &a, 3).unwrap(),
        epin::epin_gen(EpinKind::FF, 2, 3, &b, 3).unwrap(),
        epin::epin_gen(EpinKind::EE, 3, 1, &c, 3).unwrap(),
    ];
    let x = gens
        .iter()
        .map(|g| SpinPair::from_clifford(g).unwrap())
        .fold(SpinPair::identity(&r, 3).unwrap(), |acc, g| acc.mul(&g));
    let p = epin::pi(&x).unwrap();
    t.check(p.preserves_q_symbolic().unwrap(), || {
        String::from("symbolic pi(x) does not preserve q")
    });

    let z7 = Ring::Modular(7);
    let mut g = common::rng(10);
    for k in 0..100 {
        let x = common::rand_epin_product(&mut g, &z7, 3, 3);
        let y = common::rand_epin_product(&mut g, &z7, 3, 3);
        let lhs = epin::pi(&x.mul(&y)).unwrap().into_mat();
        let rhs = epin::pi(&x).unwrap().mat() * epin::pi(&y).unwrap().mat();
        t.check(lhs == rhs, || format!("pi(xy) != pi(x)pi(y), sample {k}"));
    }
    t.finish()
}

fn c11_even_kernel() -> Outcome {
    let mut t = Tally::default();
    let r = Ring::Modular(8);
    let u = r.int(3);
    for n in [2, 4] {
        let h = 1 << (n - 1);
        let x = SpinPair::new(n, Mat::identity(&r, h), Mat::scalar(&u, h)).unwrap();
        t.check(spin::in_spin(&x), || format!("(I, 3I) not in Spin at n = {n}"));
        t.note(format!("n = {n}: projection g1 = I is {}", x.g1().is_identity()));
        let p = epin::pi(&x).unwrap().into_mat();
        let scalar = p
            .as_scalar()
            .map(|s| s.to_string())
            .unwrap_or_else(|| String::from("non-scalar"));
        t.check(p.is_identity(), || format!("pi((I, 3I)) = {scalar}·I != I at n = {n}"));
    }
    t.finish()
}

fn c12_span() -> Outcome {
    let mut t = Tally::default();
    for n in 1..=3 {
        let rank = clifford::span_check(n, 7).unwrap();
        t.check(rank == 1 << (2 * n), || format!("rank {rank} != 4^{n}"));
    }
    t.finish()
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("core Suslin identities", c1_core_identities),
        ("J-transpose bridge", c2_eq1),
        ("standard involution", c3_involution),
        ("fundamental theorem (XYX)", c4_fundamental),
        ("Spin6 = SL4", c5_spin6),
        ("Spin4 = SL2 x SL2", c6_spin4),
        ("Epin6 = E4", c7_epin6),
        ("generator relation table and commutators", c8_table1_commutators),
        ("norm homomorphism", c9_norm),
        ("pi into O_2n", c10_pi),
        ("even-n kernel", c11_even_kernel),
        ("span check", c12_span),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let status = if out.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} {name} [{:.2?}] {}",
            k + 1,
            start.elapsed(),
            out.detail
        );
        if !out.ok {
            failures += 1;
        }
    }
    println!("acceptance: {}/{} passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
