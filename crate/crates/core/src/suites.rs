//! Named verification suites with one pass/fail entry per case.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::asymptotics::leading_limit;
use crate::dirac::{act_on_family, index_polynomial, verify_translation, IndexFamily};
use crate::error::{Error, Result};
use crate::fixtures::{self, Sl2Module};
use crate::lie::{RootDatum, Weight, Which};
use crate::poly::{divides_linear_form, is_harmonic, restrict_to_hyperplane, vandermonde, LinearForm, MultiPoly};
use crate::rational::{q, Q};
use crate::springer::{self, Family};
use crate::su_n1;
use crate::weyl_action::{act, orbit_span, weyl_dim_poly};

pub const SUITES: [&str; 6] = ["sl2", "translation", "ind-eq-char", "harmonic", "su-n1", "springer"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<Case>,
    pub all_pass: bool,
}

impl SuiteReport {
    fn new(suite: &str, cases: Vec<Case>) -> Self {
        let all_pass = cases.iter().all(|c| c.pass);
        SuiteReport {
            suite: suite.to_string(),
            cases,
            all_pass,
        }
    }
}

fn case(id: impl Into<String>, pass: bool, detail: impl Into<String>) -> Case {
    Case {
        id: id.into(),
        pass,
        detail: detail.into(),
    }
}

/// Turn an error into a failing case instead of aborting the suite.
fn guarded(id: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) -> Case {
    let id = id.into();
    match f() {
        Ok((pass, detail)) => case(id, pass, detail),
        Err(e) => case(id, false, format!("error: {e}")),
    }
}

pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let cases = match name {
        "sl2" => sl2_cases(),
        "translation" => translation_cases(),
        "ind-eq-char" => ind_eq_char_cases(20, 0x5eed),
        "harmonic" => harmonic_cases(),
        "su-n1" => su_n1_cases(6),
        "springer" => springer_cases(3),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(SuiteReport::new(name, cases))
}

/// `springer` suite over an explicit parameter bound.
pub fn run_springer_suite(max: usize) -> SuiteReport {
    SuiteReport::new("springer", springer_cases(max))
}

pub fn run_ind_eq_char_suite(trials: usize, seed: u64) -> SuiteReport {
    SuiteReport::new("ind-eq-char", ind_eq_char_cases(trials, seed))
}

fn sl2_cases() -> Vec<Case> {
    let mut out = Vec::new();
    out.push(guarded("index polynomials", || {
        let d = fixtures::sl2_datum()?;
        let mut got = Vec::new();
        for m in Sl2Module::ALL {
            let p = index_polynomial(&m.family(), &d);
            got.push(if p.is_zero() { "0".to_string() } else { p.to_string() });
        }
        Ok((got == ["0", "1", "-1", "0"], format!("Q(F, D+, D-, P) = {}", got.join(", "))))
    }));
    out.push(case(
        "coherent continuation",
        fixtures::sl2_action_consistent(),
        "s.F = -F, s.D+ = D+ + F, s.D- = D- + F, s.P = P",
    ));
    let (t, s) = fixtures::isotypic_counts(&fixtures::SL2_S_ACTION);
    out.push(case("decomposition", (t, s) == (3, 1), format!("{t} trivial + {s} sign")));
    out.push(match fixtures::conjecture_coefficients() {
        Some((c1, c2)) => case(
            "conjecture coefficients",
            c1 == q(1) && c2 == q(-1),
            format!("(c1, c2) = ({c1}, {c2})"),
        ),
        None => case("conjecture coefficients", false, "no solution"),
    });
    out.push(guarded("equivariance", || {
        let d = fixtures::sl2_datum()?;
        let s = crate::lie::WeylElement::transposition(2, 0, 1);
        let ok = Sl2Module::ALL.iter().all(|m| {
            let fam = m.family();
            index_polynomial(&act_on_family(&s, &fam), &d) == act(&s, &index_polynomial(&fam, &d))
        });
        Ok((ok, "Q of s.X equals s.Q_X".into()))
    }));
    out.push(guarded("Verma indices", || {
        let c = fixtures::ps_index_constants()?;
        let v0 = fixtures::verma_euler_characteristic(0, 8)?;
        let v2 = fixtures::verma_euler_characteristic(-2, 8)?;
        Ok((v0 == c["V0"] && v2 == c["V-2"], "I(V_0) = -C_1, I(V_-2) = -C_-1".into()))
    }));
    out.push(guarded("index of P", || {
        let c = fixtures::ps_index_constants()?;
        let euler = fixtures::verma_euler_characteristic(0, 8)?.add(&fixtures::verma_euler_characteristic(-2, 8)?);
        Ok((
            c["P"] == c["V0"] && euler != c["P"],
            "I(P) = -C_1 differs from P (x) S+ - P (x) S-".into(),
        ))
    }));
    out
}

fn lattice_points(rank: usize, count: usize) -> Vec<Weight> {
    (0..count as i64)
        .map(|k| {
            let xs: Vec<i64> = (0..rank as i64).map(|j| ((k * (2 * j + 3) + j * j) % 7) - 3).collect();
            Weight::from_ints(&xs)
        })
        .collect()
}

fn translation_targets() -> Result<Vec<(String, RootDatum, IndexFamily)>> {
    let mut out = Vec::new();
    let sl2 = fixtures::sl2_datum()?;
    for m in Sl2Module::ALL {
        out.push((format!("SL(2,R) {}", m.name()), sl2.clone(), m.family()));
    }
    let su21 = fixtures::su21_datum()?;
    for j in 0..3 {
        out.push((format!("SU(2,1) chamber {j}"), su21.clone(), fixtures::su21_ds_family(j, &su21)?));
    }
    Ok(out)
}

fn translation_cases() -> Vec<Case> {
    let targets = match translation_targets() {
        Ok(t) => t,
        Err(e) => return vec![case("setup", false, e.to_string())],
    };
    let mut out = Vec::new();
    for (label, d, fam) in targets {
        let n = d.rank;
        let mut adjoint = vec![0; n];
        adjoint[0] = 1;
        adjoint[n - 1] = -1;
        let mut standard = vec![0; n];
        standard[0] = 1;
        for (rep, hw) in [("adjoint", adjoint), ("standard", standard)] {
            out.push(guarded(format!("{label} (x) {rep}"), || {
                let hw = Weight::from_ints(&hw);
                let mut ok = true;
                for v in lattice_points(n, 10) {
                    let lam = &fam.base + &v;
                    ok &= verify_translation(&fam, &hw, &lam, &d)?;
                }
                Ok((ok, "10 lattice points".into()))
            }));
        }
    }
    out
}

fn random_rational(rng: &mut StdRng) -> Q {
    Q::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into())
}

fn random_direction(d: &RootDatum, rng: &mut StdRng) -> Weight {
    loop {
        let y = Weight((0..d.rank).map(|_| random_rational(rng)).collect());
        if d.all_roots().all(|a| !a.dot(&y).is_zero()) {
            return y;
        }
    }
}

fn random_parameter(fam: &IndexFamily, d: &RootDatum, rng: &mut StdRng) -> Weight {
    loop {
        let v = Weight::from_ints(&(0..d.rank).map(|_| rng.gen_range(-6i64..=6)).collect::<Vec<_>>());
        let lam = &fam.base + &v;
        if d.is_g_regular(&lam) {
            return lam;
        }
    }
}

fn ind_eq_char_cases(trials: usize, seed: u64) -> Vec<Case> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut targets = Vec::new();
    if let Ok(d) = fixtures::sl2_datum() {
        targets.push(("SL(2,R) D+".to_string(), d.clone(), Sl2Module::DPlus.family()));
        targets.push(("SL(2,R) D-".to_string(), d, Sl2Module::DMinus.family()));
    }
    if let Ok(d) = fixtures::su21_datum() {
        for j in 0..3 {
            if let Ok(f) = fixtures::su21_ds_family(j, &d) {
                targets.push((format!("SU(2,1) chamber {j}"), d.clone(), f));
            }
        }
    }
    let mut out = Vec::new();
    for (label, d, fam) in targets {
        let qd = (d.r_g() - d.r_k()) as i64;
        let mut samples = Vec::new();
        for _ in 0..trials {
            samples.push((random_parameter(&fam, &d, &mut rng), random_direction(&d, &mut rng)));
        }
        out.push(guarded(format!("{label}: limits"), || {
            let mut ok = true;
            let mut nonzero = 0;
            for (lam, y) in &samples {
                for dd in qd..=qd + 2 {
                    let r = leading_limit(&fam, lam, y, dd, &d)?;
                    ok &= r.matched;
                    if dd == qd && !r.value.is_zero() {
                        nonzero += 1;
                    }
                }
            }
            Ok((ok, format!("{} samples, d = {qd}..{}, {nonzero} nonzero leading terms", samples.len(), qd + 2)))
        }));
    }
    out
}

fn harmonic_cases() -> Vec<Case> {
    let fams = match fixtures::labeled_families() {
        Ok(f) => f,
        Err(e) => return vec![case("setup", false, e.to_string())],
    };
    let mut out = Vec::new();
    for lf in fams {
        let d = &lf.datum;
        out.push(guarded(lf.label.clone(), || {
            let qp = index_polynomial(&lf.family, d);
            let w = d.weyl(Which::G)?;
            let harmonic = is_harmonic(&qp, d);
            let degree = qp.is_zero() || (qp.is_homogeneous() && qp.degree() == Some(d.r_k() as u32));
            let span = orbit_span(&weyl_dim_poly(d), w)?.contains(&qp);
            let equivariant = w
                .iter()
                .all(|x| index_polynomial(&act_on_family(x, &lf.family), d) == act(x, &qp));
            let vanishing = match lf.gk_dim {
                Some(g) if g < d.r_g() - d.r_k() => qp.is_zero(),
                _ => true,
            };
            let detail = format!(
                "harmonic {harmonic}, degree {degree}, in span {span}, equivariant {equivariant}, vanishing {vanishing}"
            );
            Ok((harmonic && degree && span && equivariant && vanishing, detail))
        }));
    }
    out
}

/// The displayed factorization of the `n = 5, i = 2` determinant.
pub fn displayed_det_5_2() -> MultiPoly {
    let n = 5;
    let x = |i: usize| MultiPoly::var(n, i);
    let l = |p: usize, r: usize| x(p).sub(&x(r));
    let quad = [
        (0, 1, 1),
        (0, 2, 1),
        (0, 3, -1),
        (0, 4, -1),
        (1, 2, 1),
        (1, 3, -1),
        (1, 4, -1),
        (2, 3, -1),
        (2, 4, -1),
        (3, 3, 1),
        (3, 4, 1),
        (4, 4, 1),
    ]
    .iter()
    .fold(MultiPoly::zero(n), |acc, &(a, b, c)| acc.add(&x(a).mul(&x(b)).scale(&q(c))));
    l(0, 1).mul(&l(0, 2)).mul(&l(1, 2)).mul(&l(3, 4)).mul(&quad).neg()
}

pub fn displayed_det_4_2() -> MultiPoly {
    let n = 4;
    let x = |i: usize| MultiPoly::var(n, i);
    x(0).sub(&x(1))
        .mul(&x(2).sub(&x(3)))
        .mul(&x(0).add(&x(1)).sub(&x(2)).sub(&x(3)))
        .neg()
}

fn su_n1_cases(max_n: usize) -> Vec<Case> {
    let mut out = Vec::new();
    out.push(guarded("det(4,2)", || {
        Ok((su_n1::char_poly_det(4, 2)? == displayed_det_4_2(), "-(l1-l2)(l3-l4)(l1+l2-l3-l4)".into()))
    }));
    out.push(guarded("det(5,2)", || {
        Ok((su_n1::char_poly_det(5, 2)? == displayed_det_5_2(), "displayed quartic times quadratic".into()))
    }));
    for n in 2..=max_n {
        out.push(guarded(format!("gcd n={n}"), || {
            let mut bad = Vec::new();
            for i in 1..n {
                if su_n1::gcd_with_index(n, i)? != su_n1::gcd_closed_form(n, i) {
                    bad.push(i);
                }
            }
            Ok((bad.is_empty(), format!("i = 1..{} mismatches {bad:?}", n - 1)))
        }));
        out.push(guarded(format!("tau divisibility n={n}"), || {
            let mut ok = true;
            for i in 0..=n {
                let tau_forms: Vec<LinearForm> = su_n1::roots_generated(&su_n1::tau_invariant(n, i)?)
                    .iter()
                    .map(|a| LinearForm::new(a.0[..n].to_vec()))
                    .collect::<Result<_>>()?;
                let qp = su_n1::index_poly(n, i)?;
                for l in &tau_forms {
                    ok &= divides_linear_form(&qp, l)?;
                    if (1..n).contains(&i) {
                        ok &= divides_linear_form(&su_n1::char_poly_det(n, i)?, l)?;
                    }
                }
            }
            Ok((ok, "P and Q divisible by every root generated by tau".into()))
        }));
        out.push(guarded(format!("non-divisibility n={n}"), || {
            let mut ok = true;
            let mut count = 0;
            for i in 1..n {
                let p = su_n1::char_poly_det(n, i)?;
                let v = vandermonde(n - 1);
                for a in 0..n - i {
                    for b in n - i..n {
                        let l = su_n1::diff_form(n, a, b);
                        let r = restrict_to_hyperplane(&p, &l)?;
                        ok &= !divides_linear_form(&p, &l)? && (r == v || r == v.neg());
                        count += 1;
                    }
                }
            }
            Ok((ok, format!("{count} pairs p <= n-i < q, each restriction is a Vandermonde")))
        }));
        if n >= 4 {
            out.push(guarded(format!("degrees n={n}"), || {
                let mut ok = true;
                for i in 2..=n - 2 {
                    ok &= su_n1::degree_report(n, i)?.matches_formulas;
                }
                Ok((ok, format!("2 <= i <= {}", n - 2)))
            }));
        }
    }
    out
}

fn springer_cases(max: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for g in f.groups(max) {
            out.push(guarded(g.to_string(), || {
                let row = springer::springer_row(g)?;
                let (yes, part, dim) = springer::reference_row(g)?;
                let certified = springer::certify_catalog(g)?;
                let ok = row.is_springer == yes && row.partition == part && row.orbit_dim == dim && certified;
                let shown = match (&row.partition, row.orbit_dim) {
                    (Some(p), Some(d)) => format!("Yes, {p}, {d}"),
                    _ => "No".to_string(),
                };
                Ok((ok, shown))
            }));
        }
    }
    out
}
