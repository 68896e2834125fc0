//! Verification suites: each suite expands into a list of independent cases,
//! the cases run on a thread pool, and the verdicts come back in generation
//! order so reports do not depend on scheduling.

pub mod checks;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::ambient::Ambient;
use crate::combinatorics::{enumerate_lambda, n_odd, Partition};
use crate::diffops::Kind;
use crate::error::{Error, Result};
use crate::exactalg::ParamScalar;
use crate::identities::pieri::{self, Parity};
use crate::identities::triangularity::{self, EvenBound};
use crate::identities::{alpha_samples, closed, duality, evaluation, jack, table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Defining,
    Eigen,
    Cutoff,
    Commute,
    Triangularity,
    ExtraVanishing,
    Duality,
    Interpol,
    Evaluation,
    Pieri,
    ClosedForms,
    Integrality,
    Jack,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Defining,
        Suite::Eigen,
        Suite::Cutoff,
        Suite::Commute,
        Suite::Triangularity,
        Suite::ExtraVanishing,
        Suite::Duality,
        Suite::Interpol,
        Suite::Evaluation,
        Suite::Pieri,
        Suite::ClosedForms,
        Suite::Integrality,
        Suite::Jack,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Defining => "defining",
            Suite::Eigen => "eigen",
            Suite::Cutoff => "cutoff",
            Suite::Commute => "commute",
            Suite::Triangularity => "triangularity",
            Suite::ExtraVanishing => "extra-vanishing",
            Suite::Duality => "duality",
            Suite::Interpol => "interpol",
            Suite::Evaluation => "evaluation",
            Suite::Pieri => "pieri",
            Suite::ClosedForms => "closed-forms",
            Suite::Integrality => "integrality",
            Suite::Jack => "jack",
        }
    }

    /// Suites whose failures are reported but do not fail a run.
    pub fn advisory(self) -> bool {
        self == Suite::Integrality
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.split(',').map(|x| x.trim().parse()).collect()
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Overrides of the default sweep: a single `n` and/or a degree bound for
/// the sweeps over `Λ(d)`.
#[derive(Clone, Debug, Default)]
pub struct Sweep {
    pub n: Option<usize>,
    pub dmax: Option<i64>,
}

impl Sweep {
    fn ns(&self, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => default.collect(),
        }
    }

    fn d(&self, default: i64) -> i64 {
        self.dmax.unwrap_or(default)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub suite: String,
    pub case: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub advisory: bool,
}

type Check = Box<dyn Fn() -> Result<()> + Send + Sync>;

pub struct Case {
    pub suite: Suite,
    pub id: String,
    check: Check,
}

impl Case {
    fn new(suite: Suite, id: String, check: impl Fn() -> Result<()> + Send + Sync + 'static) -> Self {
        Case { suite, id, check: Box::new(check) }
    }

    pub fn run(&self) -> Verdict {
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (self.check)()));
        let witness = match outcome {
            Ok(Ok(())) => None,
            Ok(Err(e)) => Some(e.to_string()),
            Err(_) => Some("panicked".to_string()),
        };
        Verdict {
            suite: self.suite.name().to_string(),
            case: self.id.clone(),
            pass: witness.is_none(),
            witness,
            advisory: self.suite.advisory(),
        }
    }
}

fn ambient(n: usize, r: &ParamScalar) -> Ambient {
    Ambient { n, r: r.clone() }
}

fn lambdas(n: usize, d: i64) -> Vec<Partition> {
    enumerate_lambda(n, d)
}

/// The cases of one suite.
pub fn cases(suite: Suite, sweep: &Sweep, r: &ParamScalar) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    match suite {
        Suite::Defining => {
            for n in sweep.ns(2..=4) {
                let amb = ambient(n, r);
                for lam in lambdas(n, sweep.d(4)) {
                    let a = amb.clone();
                    out.push(Case::new(suite, format!("n={n} λ={lam}"), move || checks::defining(&a, &lam)));
                }
            }
        }
        Suite::Eigen => {
            for n in sweep.ns(2..=5) {
                let amb = ambient(n, r);
                for lam in lambdas(n, sweep.d(3)) {
                    for kind in [Kind::X, Kind::Y] {
                        for t in 0..=n_odd(n) as i64 {
                            let (a, l) = (amb.clone(), lam.clone());
                            out.push(Case::new(suite, format!("n={n} λ={lam} {kind}(t={t})"), move || {
                                checks::eigen(&a, &l, kind, t)
                            }));
                        }
                    }
                    let a = amb.clone();
                    out.push(Case::new(suite, format!("n={n} λ={lam} euler"), move || checks::euler(&a, &lam)));
                }
            }
        }
        Suite::Cutoff => {
            for n in sweep.ns(1..=4) {
                let amb = ambient(n, r);
                for mu in lambdas(n, sweep.d(4)) {
                    let a = amb.clone();
                    out.push(Case::new(suite, format!("n={n} μ={mu}"), move || checks::cutoff(&a, &mu)));
                }
            }
        }
        Suite::Commute => {
            for n in sweep.ns(1..=4) {
                let amb = ambient(n, r);
                for mu in lambdas(n, sweep.d(3)) {
                    let a = amb.clone();
                    out.push(Case::new(suite, format!("n={n} e_μ, μ={mu}"), move || {
                        let ops = checks::components(&a)?;
                        for (i, x) in ops.iter().enumerate() {
                            for y in &ops[i + 1..] {
                                checks::commute(x, y, &mu)?;
                            }
                        }
                        Ok(())
                    }));
                }
            }
        }
        Suite::Triangularity => {
            for n in sweep.ns(1..=4) {
                let amb = ambient(n, r);
                let ls = lambdas(n, sweep.d(3));
                for lam in &ls {
                    let (a, l) = (amb.clone(), lam.clone());
                    out.push(Case::new(suite, format!("n={n} λ={lam}"), move || {
                        triangularity::triangular1(&a, &l)?;
                        triangularity::triangular2a(&a, &l, EvenBound::Dominance)?;
                        triangularity::triangular2b(&a, &l)?;
                        triangularity::bigrading(&a, &l)
                    }));
                }
                for lam in &ls {
                    for mu in &ls {
                        let (a, l, m) = (amb.clone(), lam.clone(), mu.clone());
                        out.push(Case::new(suite, format!("n={n} R_λ·R_μ, λ={lam} μ={mu}"), move || {
                            triangularity::product_support(&a, &l, &m)
                        }));
                    }
                }
            }
        }
        Suite::ExtraVanishing => {
            for n in sweep.ns(1..=4) {
                let amb = ambient(n, r);
                let d = sweep.d(4);
                for lam in lambdas(n, d) {
                    let a = amb.clone();
                    out.push(Case::new(suite, format!("n={n} λ={lam} μ∈Λ({})", d + 1), move || {
                        triangularity::extra_vanishing(&a, &lam, d + 1)
                    }));
                }
            }
        }
        Suite::Duality => {
            let alphas = [BigRational::from_integer(1.into()), BigRational::new(5.into(), 2.into())];
            for n in sweep.ns(1..=3) {
                let amb = ambient(n, r);
                for lam in lambdas(n, sweep.d(3)) {
                    for alpha in &alphas {
                        let (a, l, al) = (amb.clone(), lam.clone(), alpha.clone());
                        out.push(Case::new(suite, format!("n={n} binomial λ={lam} α={}", alpha), move || {
                            duality::binomial_check(&a, &l, &al)
                        }));
                    }
                }
            }
            for n in sweep.ns(1..=4) {
                let amb = ambient(n, r);
                let d = sweep.d(3);
                for alpha in &alphas {
                    let (a, al) = (amb.clone(), alpha.clone());
                    out.push(Case::new(suite, format!("n={n} symmetric Λ({d}) α={}", alpha), move || {
                        duality::check_symmetric(&a, d, &al)
                    }));
                }
                let a = amb.clone();
                out.push(Case::new(suite, format!("n={n} involution Λ({d})"), move || duality::DualityMatrix::new(&a, d)?.check()));
            }
        }
        Suite::Interpol => {
            for n in sweep.ns(1..=4) {
                let amb = ambient(n, r);
                let d = sweep.d(3);
                for seed in 0..3u64 {
                    let a = amb.clone();
                    out.push(Case::new(suite, format!("n={n} deg<={d} seed={seed}"), move || {
                        duality::check_interpol(&a, &duality::random_semisym(&a, d, seed))
                    }));
                }
            }
        }
        Suite::Evaluation => {
            let alphas: Vec<BigRational> = alpha_samples().into_iter().take(3).collect();
            for n in sweep.ns(1..=4) {
                let amb = ambient(n, r);
                for lam in lambdas(n, sweep.d(4)) {
                    let (a, l, als) = (amb.clone(), lam.clone(), alphas.clone());
                    out.push(Case::new(suite, format!("n={n} λ={lam} special value"), move || {
                        for alpha in &als {
                            evaluation::check_special_value(&a, &l, alpha)?;
                        }
                        Ok(())
                    }));
                    let (a, l) = (amb.clone(), lam.clone());
                    out.push(Case::new(suite, format!("n={n} λ={lam} homogeneous"), move || {
                        evaluation::check_homogeneous_evaluation(&a, &l)?;
                        evaluation::homogeneous_binomial(&a, &l)
                    }));
                }
            }
        }
        Suite::Pieri => {
            for n in sweep.ns(1..=4) {
                let amb = ambient(n, r);
                for mu in lambdas(n, sweep.d(3)) {
                    for parity in [Parity::Odd, Parity::Even] {
                        let (a, m) = (amb.clone(), mu.clone());
                        out.push(Case::new(suite, format!("n={n} μ={mu} ∏(t+z_{parity})"), move || {
                            pieri::check_pieri_t(&a, &m, parity)
                        }));
                        for k in 0..=parity.width(n) {
                            let (a, m) = (amb.clone(), mu.clone());
                            out.push(Case::new(suite, format!("n={n} μ={mu} e_{k}(z_{parity})"), move || {
                                pieri::check_pieri_elementary(&a, &m, k, parity)
                            }));
                        }
                    }
                    for k in 0..=n {
                        let (a, m) = (amb.clone(), mu.clone());
                        out.push(Case::new(suite, format!("n={n} μ={mu} R_(1^{k})"), move || {
                            pieri::check_pieri_shifted(&a, &m, k)
                        }));
                        if k >= 1 {
                            let (a, m) = (amb.clone(), mu.clone());
                            out.push(Case::new(suite, format!("n={n} μ={mu} e_{k}·Rbar"), move || {
                                pieri::check_pieri_homogeneous(&a, &m, k)
                            }));
                        }
                    }
                    if n == 3 && r.is_polynomial() && !r.is_constant() {
                        let m = mu.clone();
                        out.push(Case::new(suite, format!("n=3 μ={mu} worked products"), move || pieri::three::check(&m)));
                    }
                }
            }
        }
        Suite::ClosedForms => {
            for n in sweep.ns(1..=5) {
                let amb = ambient(n, r);
                for m in 1..=n.min(4) {
                    for a_len in 1..=4 {
                        let a = amb.clone();
                        out.push(Case::new(suite, format!("n={n} hook a={a_len} m={m}"), move || {
                            closed::check_hook(&a, a_len, m)
                        }));
                    }
                }
            }
            for n in sweep.ns(3..=4) {
                let amb = ambient(n, r);
                for a_len in 0..=4 {
                    for b in 0..=a_len.min(2) {
                        let a = amb.clone();
                        out.push(Case::new(suite, format!("n={n} two-row ({a_len},{b})"), move || {
                            closed::check_two_row(&a, a_len, b)
                        }));
                    }
                }
            }
            if !r.is_constant() {
                for mu in enumerate_lambda(3, 8).into_iter().filter(|m| m[0] <= 4) {
                    out.push(Case::new(suite, format!("n=3 sum μ={mu}"), move || closed::check_n3(&mu)));
                }
                for a_len in 0..=4 {
                    for b in 0..=a_len {
                        out.push(Case::new(suite, format!("n=4 double sum ({a_len},{b})"), move || {
                            closed::check_n4(a_len, b)
                        }));
                    }
                }
            }
            let rr = r.clone();
            out.push(Case::new(suite, "table deg 3 against golden".into(), move || {
                let golden = table::parse_table(table::GOLDEN_DEGREE3)?;
                let computed = table::compute_table(&rr, 3)?;
                let diff = table::diff_tables(&computed, &golden);
                if diff.is_empty() {
                    Ok(())
                } else {
                    Err(Error::Mismatch(diff.join("; ")))
                }
            }));
            for n in 3..=6 {
                let a = ambient(n, r);
                out.push(Case::new(suite, format!("n={n} golden rows"), move || {
                    table::check_rows_at(&table::parse_table(table::GOLDEN_DEGREE3)?, &a)
                }));
            }
        }
        Suite::Integrality => {
            for n in sweep.ns(1..=4) {
                let amb = ambient(n, r);
                for lam in lambdas(n, sweep.d(4)) {
                    let a = amb.clone();
                    out.push(Case::new(suite, format!("n={n} λ={lam}"), move || {
                        if closed::integrality_probe(&a, &lam)? {
                            Ok(())
                        } else {
                            Err(Error::Mismatch(format!("[c_λ]_even R_{lam} has a non-polynomial coefficient in r")))
                        }
                    }));
                }
            }
        }
        Suite::Jack => {
            for n in sweep.ns(1..=4) {
                let amb = ambient(n, r);
                let d = sweep.d(3);
                for lam in jack::balanced(n, d) {
                    let a = amb.clone();
                    out.push(Case::new(suite, format!("n={n} Jack1 λ={lam}"), move || jack::check_jack1(&a, &lam)));
                }
                for mu in jack::odd_shapes(n, d) {
                    let a = amb.clone();
                    out.push(Case::new(suite, format!("n={n} Jack2 μ={mu:?}"), move || jack::check_jack2(&a, &mu)));
                }
                let a = amb.clone();
                out.push(Case::new(suite, format!("n={n} columns"), move || {
                    jack::check_columns(&a)?;
                    jack::check_first_columns(&a)
                }));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub r: String,
    pub suites: Vec<String>,
    pub total: usize,
    pub failed: usize,
    pub advisory_failed: usize,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    /// True when every non-advisory verdict passed.
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per suite with its pass count, then each failure with its witness.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let vs: Vec<&Verdict> = self.verdicts.iter().filter(|v| &v.suite == s).collect();
            let ok = vs.iter().filter(|v| v.pass).count();
            out.push_str(&format!("{s}: {ok}/{} passed\n", vs.len()));
        }
        for v in self.verdicts.iter().filter(|v| !v.pass) {
            let tag = if v.advisory { "note" } else { "FAIL" };
            out.push_str(&format!("{tag} [{}] {}: {}\n", v.suite, v.case, v.witness.as_deref().unwrap_or("")));
        }
        out
    }
}

/// Runs the suites on `threads` worker threads (0 lets rayon choose).
pub fn run(suites: &[Suite], sweep: &Sweep, amb_r: &ParamScalar, threads: usize) -> Result<Report> {
    let mut all = Vec::new();
    for &s in suites {
        all.extend(cases(s, sweep, amb_r)?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let verdicts: Vec<Verdict> = pool.install(|| all.par_iter().map(Case::run).collect());
    let failed = verdicts.iter().filter(|v| !v.pass && !v.advisory).count();
    let advisory_failed = verdicts.iter().filter(|v| !v.pass && v.advisory).count();
    Ok(Report {
        r: if amb_r.is_constant() { amb_r.to_string() } else { "sym".into() },
        suites: suites.iter().map(|s| s.name().to_string()).collect(),
        total: verdicts.len(),
        failed,
        advisory_failed,
        verdicts,
    })
}
