//! Verification suites. Each suite only calls into `suslin-core` and
//! records the outcome of every identity it evaluates.

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use suslin_core::check::{Check, Report};
use suslin_core::clifford::{self, Generator};
use suslin_core::epin::{self, EpinKind};
use suslin_core::forms;
use suslin_core::spin::{self, SpinPair};
use suslin_core::suslin::{self, SuslinMatrix};
use suslin_core::{Elem, Mat, Ring, SuslinPair};

use crate::CliError;

pub const SYMBOLIC_CAP: usize = 5;
pub const MODULAR_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Core,
    Eq1,
    Involution,
    Fundamental,
    SpinOdd,
    Spin4,
    Spin6,
    Epin,
    Table1,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Core,
        Suite::Eq1,
        Suite::Involution,
        Suite::Fundamental,
        Suite::SpinOdd,
        Suite::Spin4,
        Suite::Spin6,
        Suite::Epin,
        Suite::Table1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Eq1 => "eq1",
            Suite::Involution => "involution",
            Suite::Fundamental => "fundamental",
            Suite::SpinOdd => "spin-odd",
            Suite::Spin4 => "spin4",
            Suite::Spin6 => "spin6",
            Suite::Epin => "epin",
            Suite::Table1 => "table1",
            Suite::All => "all",
        }
    }
}

/// How sampled checks pick their ring; `Poly` restricts a suite to its
/// symbolic checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampleRing {
    Auto,
    Integer,
    Modular(u64),
    Poly,
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub n: Option<(usize, usize)>,
    pub ring: SampleRing,
    pub seed: u64,
    pub samples: usize,
    pub no_cap: bool,
}

struct Ctx<'a> {
    params: &'a SuiteParams,
    rng: ChaCha8Rng,
    report: Report,
}

impl Ctx<'_> {
    fn range(&self, default: (usize, usize)) -> Result<Vec<usize>, CliError> {
        let (lo, hi) = self.params.n.unwrap_or(default);
        if lo == 0 || lo > hi {
            return Err(CliError::Usage(format!("unsupported n range {lo}..{hi}")));
        }
        if hi > MODULAR_CAP && !self.params.no_cap {
            return Err(CliError::Usage(format!(
                "n = {hi} exceeds the default cap {MODULAR_CAP}; pass --no-cap to allow it"
            )));
        }
        Ok((lo..=hi).collect())
    }

    fn symbolic(&self) -> bool {
        matches!(self.params.ring, SampleRing::Auto | SampleRing::Poly)
    }

    fn symbolic_ok(&self, n: usize, cap: usize) -> bool {
        self.symbolic() && (n <= cap.min(SYMBOLIC_CAP) || self.params.no_cap)
    }

    /// The ring for sampled checks, `None` for symbolic-only runs.
    fn sample_ring(&self, default_modulus: u64) -> Option<Ring> {
        match self.params.ring {
            SampleRing::Auto => Some(Ring::Modular(default_modulus)),
            SampleRing::Integer => Some(Ring::Integer),
            SampleRing::Modular(m) => Some(Ring::Modular(m)),
            SampleRing::Poly => None,
        }
    }

    fn elem(&mut self, ring: &Ring) -> Elem {
        match ring {
            Ring::Modular(m) => ring.int(self.rng.gen_range(0..*m) as i64),
            _ => ring.int(self.rng.gen_range(-5..=5)),
        }
    }

    fn unit(&mut self, ring: &Ring) -> Elem {
        loop {
            let e = self.elem(ring);
            if e.is_unit() {
                return e;
            }
        }
    }

    fn mat(&mut self, ring: &Ring, size: usize) -> Mat {
        Mat::from_fn(ring, size, |_, _| self.elem(ring))
    }

    fn pair(&mut self, ring: &Ring, m: usize) -> SuslinPair {
        let v = (0..m).map(|_| self.elem(ring)).collect();
        let w = (0..m).map(|_| self.elem(ring)).collect();
        SuslinPair::new(v, w).expect("lengths agree")
    }

    /// A product of random elementary matrices, so `det = 1` over any ring.
    fn special(&mut self, ring: &Ring, size: usize) -> Mat {
        let mut g = Mat::identity(ring, size);
        for _ in 0..2 * size {
            let i = self.rng.gen_range(1..=size);
            let j = (i + self.rng.gen_range(1..size) - 1) % size + 1;
            let x = self.elem(ring);
            g = &g * &epin::elementary(i, j, &x, size).expect("indices in range");
        }
        g
    }

    fn distinct(&mut self, n: usize) -> (usize, usize) {
        let i = self.rng.gen_range(1..=n);
        (i, (i + self.rng.gen_range(1..n) - 1) % n + 1)
    }

    fn eg_product(&mut self, ring: &Ring, n: usize, len: usize) -> Mat {
        let mut g = Mat::identity(ring, 1 << (n - 1));
        for _ in 0..len {
            let (i, j) = self.distinct(n);
            let letters = if self.rng.gen_bool(0.5) {
                [Generator::e(i), Generator::e(j)]
            } else {
                [Generator::f(i), Generator::f(j)]
            };
            let a = self.elem(ring);
            g = &g * &epin::eg_element(&a, &letters, n).expect("valid generator");
        }
        g
    }

    fn epin_product(&mut self, ring: &Ring, n: usize, len: usize) -> SpinPair {
        let mut x = SpinPair::identity(ring, n).expect("n >= 1");
        for _ in 0..len {
            let (i, j) = self.distinct(n);
            let kind = if self.rng.gen_bool(0.5) {
                EpinKind::EE
            } else {
                EpinKind::FF
            };
            let a = self.elem(ring);
            let g = epin::epin_gen(kind, i, j, &a, n).expect("valid generator");
            x = x.mul(&SpinPair::from_clifford(&g).expect("generator is even"));
        }
        x
    }

    fn eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        name: String,
        ring: &Ring,
        inputs: &[(&str, String)],
        l: &T,
        r: &T,
    ) {
        self.report.push(Check::equal(name, ring, inputs, l, r));
    }

    fn holds(&mut self, name: String, ok: bool, ring: &Ring, detail: impl FnOnce() -> String) {
        self.report.push(Check::holds(name, ok, ring, detail));
    }

    fn result<T>(&mut self, name: String, ring: &Ring, r: suslin_core::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.holds(name, false, ring, || e.to_string());
                None
            }
        }
    }
}

/// `Z[a1, b1, ..., am, bm]` plus `extra` names.
fn ab_ring(m: usize, extra: &[&str]) -> Ring {
    let names: Vec<String> = (1..=m)
        .flat_map(|i| [format!("a{i}"), format!("b{i}")])
        .chain(extra.iter().map(|s| s.to_string()))
        .collect();
    Ring::poly(names).expect("distinct names")
}

fn generic(prefixes: &[&str], size: usize) -> (Ring, Vec<Mat>) {
    let names: Vec<String> = prefixes
        .iter()
        .flat_map(|p| (0..size * size).map(move |k| format!("{p}{k}")))
        .collect();
    let ring = Ring::poly(&names).expect("distinct names");
    let mats = prefixes
        .iter()
        .map(|p| Mat::from_fn(&ring, size, |i, j| ring.var(&format!("{p}{}", i * size + j)).unwrap()))
        .collect();
    (ring, mats)
}

fn pair_inputs(p: &SuslinPair) -> Vec<(&'static str, String)> {
    let join = |xs: &[Elem]| xs.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ");
    vec![("v", join(p.v())), ("w", join(p.w()))]
}

fn core(ctx: &mut Ctx) -> Result<(), CliError> {
    for m in ctx.range((1, SYMBOLIC_CAP))? {
        if ctx.symbolic_ok(m, SYMBOLIC_CAP) {
            let r = ab_ring(m, &[]);
            let p = SuslinPair::symbolic(&r, "a", "b", m)?;
            suslin_identities(ctx, &r, &p, &format!("symbolic m = {m}"));
            if (2..=4).contains(&m) {
                let s = suslin::sus(&p);
                let e = 1u64 << (m - 2);
                ctx.eq(
                    format!("det S = q^{e} (symbolic m = {m})"),
                    &r,
                    &[],
                    &s.det(),
                    &p.q().pow(e),
                );
            }
        }
        if let Some(r) = ctx.sample_ring(6) {
            if m <= MODULAR_CAP || ctx.params.no_cap {
                for k in 0..ctx.params.samples {
                    let p = ctx.pair(&r, m);
                    suslin_identities(ctx, &r, &p, &format!("{r} m = {m} sample {k}"));
                }
            }
        }
    }
    Ok(())
}

fn suslin_identities(ctx: &mut Ctx, r: &Ring, p: &SuslinPair, label: &str) {
    let s = SuslinMatrix::new(p.clone());
    let qi = Mat::scalar(&p.q(), s.size());
    let ins = pair_inputs(p);
    ctx.eq(
        format!("S bar(S) = qI ({label})"),
        r,
        &ins,
        &(s.mat() * s.bar().mat()),
        &qi,
    );
    ctx.eq(
        format!("bar(S) S = qI ({label})"),
        r,
        &ins,
        &(s.bar().mat() * s.mat()),
        &qi,
    );
    ctx.eq(
        format!("l(bar S) = l(S) ({label})"),
        r,
        &ins,
        &s.bar().length(),
        &s.length(),
    );
    if p.m() >= 2 {
        let back = suslin::extract(s.mat());
        ctx.holds(
            format!("extract(sus(v, w)) = (v, w) ({label})"),
            back.as_ref() == Some(p),
            r,
            || format!("{back:?}"),
        );
    }
}

fn eq1(ctx: &mut Ctx) -> Result<(), CliError> {
    for n in ctx.range((1, 4))? {
        let m = n + 1;
        let mut cases = Vec::new();
        if ctx.symbolic_ok(n, SYMBOLIC_CAP) {
            let r = ab_ring(m, &[]);
            cases.push((
                r.clone(),
                SuslinPair::symbolic(&r, "a", "b", m)?,
                String::from("symbolic"),
            ));
        }
        if let Some(r) = ctx.sample_ring(7) {
            for k in 0..ctx.params.samples {
                let p = ctx.pair(&r, m);
                cases.push((r.clone(), p, format!("{r} sample {k}")));
            }
        }
        for (r, p, label) in cases {
            let s = SuslinMatrix::new(p.clone());
            let lhs = forms::star(s.mat(), n)?;
            let (rhs, what) = if n % 2 == 0 {
                (s.mat().clone(), "S")
            } else {
                (s.bar().into_mat(), "bar(S)")
            };
            ctx.eq(
                format!("J S^T J^T = {what} (n = {n}, {label})"),
                &r,
                &pair_inputs(&p),
                &lhs,
                &rhs,
            );
        }
    }
    Ok(())
}

fn involution(ctx: &mut Ctx) -> Result<(), CliError> {
    for n in ctx.range((1, SYMBOLIC_CAP))? {
        let size = 1 << n;
        if ctx.symbolic_ok(n, 3) {
            let (r, ms) = generic(&["m", "p"], size);
            involution_identities(ctx, &r, n, &ms[0], &ms[1], "symbolic");
        }
        if ctx.symbolic_ok(n, 4) {
            let r = ab_ring(n, &[]);
            let x = clifford::phi(&SuslinPair::symbolic(&r, "a", "b", n)?);
            ctx.eq(
                format!("star(phi) = -phi (symbolic n = {n})"),
                &r,
                &[],
                &x.star().into_mat(),
                &-x.mat(),
            );
            let lam = forms::basic_automorphism(x.mat(), n)?;
            ctx.eq(
                format!("lambda phi lambda = -phi (symbolic n = {n})"),
                &r,
                &[],
                &lam,
                &-x.mat(),
            );
        }
        if let Some(r) = ctx.sample_ring(7) {
            for k in 0..ctx.params.samples {
                let (a, b) = (ctx.mat(&r, size), ctx.mat(&r, size));
                involution_identities(ctx, &r, n, &a, &b, &format!("{r} sample {k}"));
            }
            let l = forms::lambda_mat(&r, n)?;
            let expected = if n % 2 == 0 { l.clone() } else { -&l };
            ctx.eq(
                format!("star(lambda) (n = {n}, {r})"),
                &r,
                &[],
                &forms::star(&l, n)?,
                &expected,
            );
        }
    }
    Ok(())
}

fn involution_identities(ctx: &mut Ctx, r: &Ring, n: usize, a: &Mat, b: &Mat, label: &str) {
    let st = |x: &Mat| forms::star(x, n).expect("size 2^n");
    ctx.eq(format!("star(star(M)) = M (n = {n}, {label})"), r, &[], &st(&st(a)), a);
    ctx.eq(
        format!("star(MN) = star(N) star(M) (n = {n}, {label})"),
        r,
        &[],
        &st(&(a * b)),
        &(&st(b) * &st(a)),
    );
    let blockwise = forms::star_blockwise(a, n).expect("size 2^n");
    ctx.eq(
        format!("star = star_blockwise (n = {n}, {label})"),
        r,
        &[],
        &st(a),
        &blockwise,
    );
}

fn fundamental(ctx: &mut Ctx) -> Result<(), CliError> {
    for m in ctx.range((2, SYMBOLIC_CAP))? {
        if m < 2 {
            continue;
        }
        let mut cases = Vec::new();
        if ctx.symbolic_ok(m, 3) {
            let names: Vec<String> = ["a", "b", "c", "d"]
                .iter()
                .flat_map(|p| (1..=m).map(move |i| format!("{p}{i}")))
                .collect();
            let r = Ring::poly(names)?;
            let x = SuslinPair::symbolic(&r, "a", "b", m)?;
            let y = SuslinPair::symbolic(&r, "c", "d", m)?;
            cases.push((r, x, y, String::from("symbolic")));
        }
        if let Some(r) = ctx.sample_ring(7) {
            for k in 0..ctx.params.samples {
                let (x, y) = (ctx.pair(&r, m), ctx.pair(&r, m));
                cases.push((r.clone(), x, y, format!("{r} sample {k}")));
            }
        }
        for (r, x, y, label) in cases {
            let (x, y) = (SuslinMatrix::new(x), SuslinMatrix::new(y));
            let name = format!("XYX is Suslin (m = {m}, {label})");
            if let Some(z) = ctx.result(name.clone(), &r, suslin::xyx(&x, &y)) {
                ctx.report.push(Check::pass(name));
                let rhs = &(x.bar().mat() * y.bar().mat()) * x.bar().mat();
                ctx.eq(
                    format!("bar(XYX) = bar(X) bar(Y) bar(X) (m = {m}, {label})"),
                    &r,
                    &[],
                    &z.bar().into_mat(),
                    &rhs,
                );
                let l = &(&x.length() * &x.length()) * &y.length();
                ctx.eq(
                    format!("l(XYX) = l(X)^2 l(Y) (m = {m}, {label})"),
                    &r,
                    &[],
                    &z.length(),
                    &l,
                );
            }
        }
    }
    Ok(())
}

fn odd_ns(ctx: &Ctx, default: (usize, usize)) -> Result<Vec<usize>, CliError> {
    let ns: Vec<usize> = ctx
        .range(default)?
        .into_iter()
        .filter(|n| n % 2 == 1 && *n >= 3)
        .collect();
    if ns.is_empty() {
        return Err(CliError::Usage(String::from("this suite needs an odd n >= 3 in range")));
    }
    Ok(ns)
}

fn spin_odd(ctx: &mut Ctx) -> Result<(), CliError> {
    for n in odd_ns(ctx, (3, 5))? {
        if ctx.symbolic_ok(n, 3) {
            let r = ab_ring(n, &["x"]);
            let x = r.var("x")?;
            let g = epin::eg_element(&x, &[Generator::e(1), Generator::e(2)], n)?;
            let s = SuslinMatrix::new(SuslinPair::symbolic(&r, "a", "b", n)?);
            if let Some(gs) = ctx.result(
                format!("1 + xE1E2 acts (symbolic n = {n})"),
                &r,
                spin::spin_action(&g, &s, n),
            ) {
                ctx.eq(
                    format!("l((1 + xE1E2) . S) = l(S) (symbolic n = {n})"),
                    &r,
                    &[],
                    &gs.length(),
                    &s.length(),
                );
            }
        }
        let Some(r) = ctx.sample_ring(7) else { continue };
        for k in 0..ctx.params.samples {
            let label = format!("n = {n}, {r} sample {k}");
            let u = ctx.unit(&r);
            let g = ctx.eg_product(&r, n, 3).scale(&u);
            let h = ctx.eg_product(&r, n, 3);
            let s = SuslinMatrix::new(ctx.pair(&r, n));
            let ins = [("u", u.to_string())];
            ctx.holds(format!("g in G ({label})"), spin::in_g(&g, n)?, &r, || format!("{g}"));
            ctx.holds(format!("h in SG ({label})"), spin::in_sg(&h, n)?, &r, || format!("{h}"));
            let d = |m: &Mat| spin::norm_d(m, n);
            let (dg, dh, dgh) = (d(&g)?, d(&h)?, d(&(&g * &h))?);
            ctx.eq(format!("d(gh) = d(g) d(h) ({label})"), &r, &ins, &dgh, &(&dg * &dh));
            if let Some(gs) = ctx.result(format!("g . S ({label})"), &r, spin::spin_action(&g, &s, n)) {
                ctx.eq(
                    format!("l(g . S) = l(gg*) l(S) ({label})"),
                    &r,
                    &ins,
                    &gs.length(),
                    &(&dg * &s.length()),
                );
            }
            let hs = spin::spin_action(&h, &s, n)?;
            let h_star_inv = forms::star(&h, n - 1)?.inverse()?;
            let rhs = spin::spin_action(&h_star_inv, &s.bar(), n)?;
            ctx.eq(
                format!("bar(h . S) = (h*)^-1 . bar(S) ({label})"),
                &r,
                &[],
                hs.bar().mat(),
                rhs.mat(),
            );
            if let Some(x) = ctx.result(format!("chi^-1(h) ({label})"), &r, spin::chi_inverse(&h, n)) {
                ctx.holds(format!("chi^-1(h) in Spin ({label})"), spin::in_spin(&x), &r, || {
                    format!("{}", x.to_mat())
                });
                ctx.eq(format!("g2 = (g1*)^-1 ({label})"), &r, &[], x.g2(), &h_star_inv);
            }
        }
    }
    Ok(())
}

fn spin4(ctx: &mut Ctx) -> Result<(), CliError> {
    if ctx.symbolic() {
        let (r, ms) = generic(&["g", "h"], 2);
        let x = SpinPair::new(2, ms[0].clone(), ms[1].clone())?;
        let xx = x.mul(&x.star());
        let expected = SpinPair::new(2, Mat::scalar(&ms[0].det(), 2), Mat::scalar(&ms[1].det(), 2))?;
        ctx.eq(
            String::from("(g1, g2)(g1, g2)* = (det g1, det g2) (symbolic)"),
            &r,
            &[],
            &xx.to_mat(),
            &expected.to_mat(),
        );
    }
    let Some(r) = ctx.sample_ring(5) else { return Ok(()) };
    for k in 0..ctx.params.samples {
        let label = format!("{r} sample {k}");
        let (g1, g2) = (ctx.special(&r, 2), ctx.special(&r, 2));
        let x = SpinPair::new(2, g1.clone(), g2.clone())?;
        let sl = spin::spin4_check(&g1, &g2)?;
        ctx.holds(
            format!("SL2 x SL2 pair in Spin ({label})"),
            sl && spin::in_spin(&x),
            &r,
            || format!("{}", x.to_mat()),
        );
        let s = ctx.mat(&r, 2);
        let moved = &(&g1 * &s) * &g2.inverse()?;
        ctx.eq(
            format!("det(g1 S g2^-1) = det S ({label})"),
            &r,
            &[],
            &moved.det(),
            &s.det(),
        );
        let b = ctx.mat(&r, 2);
        let y = SpinPair::new(2, b.clone(), g2)?;
        let agree = spin::spin4_check(&b, y.g2())? == spin::in_spin(&y);
        ctx.holds(format!("spin4_check agrees with in_spin ({label})"), agree, &r, || {
            format!("{b}")
        });
    }
    Ok(())
}

fn spin6(ctx: &mut Ctx) -> Result<(), CliError> {
    if ctx.symbolic() {
        let mut names: Vec<String> = (0..16).map(|k| format!("m{k}")).collect();
        names.extend((1..=3).flat_map(|i| [format!("a{i}"), format!("b{i}")]));
        let r = Ring::poly(&names)?;
        let m = Mat::from_fn(&r, 4, |i, j| r.var(&format!("m{}", 4 * i + j)).unwrap());
        let ms = forms::star(&m, 2)?;
        let s = suslin::sus(&SuslinPair::symbolic(&r, "a", "b", 3)?);
        let msm = &(&m * &s) * &ms;
        ctx.holds(
            String::from("MSM* is Suslin (symbolic)"),
            suslin::extract(&msm).is_some(),
            &r,
            || msm.to_string(),
        );
        let det = m.det();
        match suslin::extract(&(&m * &ms)) {
            Some(p) => ctx.eq(String::from("l(MM*) = det M (symbolic)"), &r, &[], &p.q(), &det),
            None => ctx.holds(String::from("MM* is Suslin (symbolic)"), false, &r, String::new),
        }
        let closed = spin::mm_star_length_blocks(&m)?;
        ctx.eq(
            String::from("AA*DD* + BB*CC* - AC*DB* - BD*CA* = det M (symbolic)"),
            &r,
            &[],
            &closed,
            &det,
        );
        let jordan = spin::jordan_check(&s);
        ctx.holds(
            String::from("Suslin S is self-adjoint (symbolic)"),
            matches!(jordan, Ok(true)),
            &r,
            || format!("{jordan:?}"),
        );
    }
    let Some(r) = ctx.sample_ring(7) else { return Ok(()) };
    for k in 0..ctx.params.samples {
        let label = format!("{r} sample {k}");
        let m = ctx.special(&r, 4);
        if let Some(x) = ctx.result(
            format!("chi^-1(M) for M in SL4 ({label})"),
            &r,
            spin::spin6_from_sl4(&m),
        ) {
            ctx.holds(format!("chi^-1(M) in Spin ({label})"), spin::in_spin(&x), &r, || {
                m.to_string()
            });
        }
        let a = ctx.mat(&r, 4);
        let s = suslin::sus(&ctx.pair(&r, 3));
        let msm = &(&a * &s) * &forms::star(&a, 2)?;
        ctx.holds(
            format!("MSM* is Suslin ({label})"),
            suslin::extract(&msm).is_some(),
            &r,
            || msm.to_string(),
        );
        ctx.eq(
            format!("l(MM*) = det M ({label})"),
            &r,
            &[],
            &spin::mm_star_length_blocks(&a)?,
            &a.det(),
        );
        if r.two_is_regular() {
            let ok = spin::jordan_check(&msm);
            ctx.holds(
                format!("MSM* self-adjoint ({label})"),
                matches!(ok, Ok(true)),
                &r,
                || format!("{ok:?}"),
            );
            let ok = spin::jordan_check(&a);
            ctx.holds(format!("jordan check consistent ({label})"), ok.is_ok(), &r, || {
                format!("{ok:?}")
            });
        }
    }
    Ok(())
}

fn epin_suite(ctx: &mut Ctx) -> Result<(), CliError> {
    for n in ctx.range((1, SYMBOLIC_CAP))? {
        if ctx.symbolic_ok(n, 3) {
            let r = Ring::poly(["x"])?;
            let x = r.var("x")?;
            for i in 1..=2 * n {
                for j in (1..=2 * n).filter(|&j| j != i) {
                    let o = epin::oe(i, j, &x, n)?;
                    ctx.holds(
                        format!("oe_{i}{j}(x) preserves q (n = {n})"),
                        o.preserves_q_symbolic()?,
                        &r,
                        || o.mat().to_string(),
                    );
                }
            }
            if n >= 2 {
                for kind in [EpinKind::EE, EpinKind::FF] {
                    let g = SpinPair::from_clifford(&epin::epin_gen(kind, 1, 2, &x, n)?).expect("even");
                    ctx.holds(
                        format!("1 + x {kind:?}12 in Spin (symbolic n = {n})"),
                        spin::in_spin(&g),
                        &r,
                        String::new,
                    );
                    let p = epin::pi(&g)?;
                    ctx.holds(
                        format!("pi(1 + x {kind:?}12) preserves q (symbolic n = {n})"),
                        p.preserves_q_symbolic()?,
                        &r,
                        || p.mat().to_string(),
                    );
                    ctx.eq(
                        format!("det pi(1 + x {kind:?}12) = 1 (symbolic n = {n})"),
                        &r,
                        &[],
                        &p.mat().det(),
                        &r.one(),
                    );
                }
            }
        }
        if n < 2 {
            continue;
        }
        let Some(r) = ctx.sample_ring(7) else { continue };
        for k in 0..ctx.params.samples {
            let label = format!("n = {n}, {r} sample {k}");
            let (x, y) = (ctx.epin_product(&r, n, 3), ctx.epin_product(&r, n, 3));
            ctx.holds(format!("Epin product in Spin ({label})"), spin::in_spin(&x), &r, || {
                x.to_mat().to_string()
            });
            ctx.holds(
                format!("swapped product in Spin ({label})"),
                spin::in_spin(&x.swap()),
                &r,
                String::new,
            );
            let (px, py) = (epin::pi(&x)?, epin::pi(&y)?);
            ctx.holds(format!("pi(x) preserves q ({label})"), px.preserves_q(), &r, || {
                px.mat().to_string()
            });
            ctx.eq(
                format!("pi(xy) = pi(x) pi(y) ({label})"),
                &r,
                &[],
                epin::pi(&x.mul(&y))?.mat(),
                &(px.mat() * py.mat()),
            );
        }
    }
    let report = epin::epin6_equals_e4_check()?;
    ctx.report.extend(report);
    Ok(())
}

fn table1(ctx: &mut Ctx) -> Result<(), CliError> {
    for n in odd_ns(ctx, (3, 5))? {
        for report in [epin::table1_check(n)?, epin::commutator_relations_check(n)?] {
            for mut c in report.checks {
                c.name = format!("{} (n = {n})", c.name);
                ctx.report.push(c);
            }
        }
    }
    Ok(())
}

fn run_one(suite: Suite, params: &SuiteParams, seed: u64) -> Result<Report, CliError> {
    let mut ctx = Ctx {
        params,
        rng: ChaCha8Rng::seed_from_u64(seed),
        report: Report::new(suite.name()),
    };
    match suite {
        Suite::Core => core(&mut ctx)?,
        Suite::Eq1 => eq1(&mut ctx)?,
        Suite::Involution => involution(&mut ctx)?,
        Suite::Fundamental => fundamental(&mut ctx)?,
        Suite::SpinOdd => spin_odd(&mut ctx)?,
        Suite::Spin4 => spin4(&mut ctx)?,
        Suite::Spin6 => spin6(&mut ctx)?,
        Suite::Epin => epin_suite(&mut ctx)?,
        Suite::Table1 => table1(&mut ctx)?,
        Suite::All => unreachable!(),
    }
    Ok(ctx.report)
}

/// Runs a suite; `all` runs each suite in order with its own default range
/// unless `n` is given, and prefixes check names with the suite name.
pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<Report, CliError> {
    if suite != Suite::All {
        return run_one(suite, params, params.seed);
    }
    let mut all = Report::new("all");
    for s in Suite::EACH {
        for mut c in run_one(s, params, params.seed)?.checks {
            c.name = format!("{}: {}", s.name(), c.name);
            all.push(c);
        }
    }
    Ok(all)
}
