//! Random instances with known roots and the differential harness.
//!
//! Each instance is `P = lc · Π (X - r_k)^{m_k}` with distinct rational roots,
//! so the definitional index is computable exactly. Every engine is run on it
//! and the results compared. Instances are a pure function of `(seed, config)`.

use crate::cauchy::{
    index_interval_oracle, index_real_line, index_real_line_oracle, index_sturm, index_subres,
    index_variation, index_w_baseline,
};
use crate::error::{Error, Result};
use crate::number::{int, rat, HalfInt, Rat};
use crate::poly::Poly;
use crate::sequences::subresultant_chain;
use crate::text::{parse_poly, parse_rat};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

/// Where the left endpoint `a` sits relative to the roots of `P` and `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EndpointMode {
    /// Neither endpoint is a root of `P`.
    Generic,
    RootOfP,
    /// `Q(a) = 0` while `P(a) != 0`.
    RootOfQ,
    /// `P(a) = Q(a) = 0`.
    CommonRoot,
}

impl EndpointMode {
    pub const ALL: [EndpointMode; 4] = [
        EndpointMode::Generic,
        EndpointMode::RootOfP,
        EndpointMode::RootOfQ,
        EndpointMode::CommonRoot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EndpointMode::Generic => "generic",
            EndpointMode::RootOfP => "root-of-p",
            EndpointMode::RootOfQ => "root-of-q",
            EndpointMode::CommonRoot => "common-root",
        }
    }
}

impl std::str::FromStr for EndpointMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        EndpointMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown endpoint mode {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub max_deg_p: usize,
    pub max_mult: u32,
    pub coeff_bound: i64,
    /// `None` cycles through all modes by seed.
    pub endpoint_mode: Option<EndpointMode>,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_deg_p: 8,
            max_mult: 3,
            coeff_bound: 5,
            endpoint_mode: None,
        }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_deg_p == 0 {
            return Err(Error::Config("max_deg_p must be at least 1".into()));
        }
        if self.max_deg_p > 64 {
            return Err(Error::Config("max_deg_p must be at most 64".into()));
        }
        if self.max_mult == 0 {
            return Err(Error::Config("max_mult must be at least 1".into()));
        }
        if !(1..=1_000_000).contains(&self.coeff_bound) {
            return Err(Error::Config("coeff_bound must lie in 1..=1000000".into()));
        }
        Ok(())
    }

    fn mode_for(&self, seed: u64) -> EndpointMode {
        self.endpoint_mode
            .unwrap_or(EndpointMode::ALL[(seed % 4) as usize])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub p: Poly,
    pub q: Poly,
    /// Every real root of `P` with its multiplicity.
    pub roots: Vec<(Rat, u32)>,
    pub a: Rat,
    pub b: Rat,
    pub seed: u64,
    pub mode: EndpointMode,
}

/// Text form of an [`Instance`], enough to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub seed: u64,
    pub mode: EndpointMode,
    pub p: String,
    pub q: String,
    pub roots: Vec<(String, u32)>,
    pub a: String,
    pub b: String,
}

impl Instance {
    pub fn to_record(&self) -> InstanceRecord {
        InstanceRecord {
            seed: self.seed,
            mode: self.mode,
            p: self.p.to_string(),
            q: self.q.to_string(),
            roots: self
                .roots
                .iter()
                .map(|(r, m)| (r.to_string(), *m))
                .collect(),
            a: self.a.to_string(),
            b: self.b.to_string(),
        }
    }

    /// Parses a record and checks that the root list really factors `P`.
    pub fn from_record(rec: &InstanceRecord) -> Result<Instance> {
        let p = parse_poly(&rec.p)?;
        let roots = rec
            .roots
            .iter()
            .map(|(r, m)| Ok((parse_rat(r)?, *m)))
            .collect::<Result<Vec<_>>>()?;
        let lc = p.lc().ok_or(Error::ZeroPolynomial)?.clone();
        if Poly::from_roots(&lc, &roots) != p {
            return Err(Error::Config("root list does not factor P".into()));
        }
        Ok(Instance {
            p,
            q: parse_poly(&rec.q)?,
            roots,
            a: parse_rat(&rec.a)?,
            b: parse_rat(&rec.b)?,
            seed: rec.seed,
            mode: rec.mode,
        })
    }
}

fn nonzero_int(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

fn small_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

fn coefficient(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let n = rng.gen_range(-bound..=bound);
    if rng.gen_bool(0.2) {
        rat(n, 2)
    } else {
        int(n)
    }
}

/// Random polynomial whose degree is drawn from `degs`.
fn dense_poly(rng: &mut ChaCha8Rng, degs: std::ops::RangeInclusive<usize>, bound: i64) -> Poly {
    let deg = rng.gen_range(degs);
    let mut coeffs: Vec<Rat> = (0..deg).map(|_| coefficient(rng, bound)).collect();
    coeffs.push(int(nonzero_int(rng, bound)));
    Poly::from_coeffs(coeffs)
}

fn sparse_poly(rng: &mut ChaCha8Rng, max_deg: usize, bound: i64) -> Poly {
    let terms = rng.gen_range(1..=2);
    let mut acc = Poly::zero();
    for _ in 0..terms {
        let k = rng.gen_range(0..=max_deg);
        acc = &acc + &Poly::monomial(int(nonzero_int(rng, bound)), k);
    }
    acc
}

fn is_root(roots: &[(Rat, u32)], x: &Rat) -> bool {
    roots.iter().any(|(r, _)| r == x)
}

/// A rational point in roughly `[-2B, 2B]` that is not a root of `P`.
fn off_root_point(rng: &mut ChaCha8Rng, roots: &[(Rat, u32)], bound: i64) -> Rat {
    loop {
        let x = rat(rng.gen_range(-2 * bound..=2 * bound), rng.gen_range(1..=4));
        if !is_root(roots, &x) {
            return x;
        }
    }
}

fn offset(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    rat(rng.gen_range(1..=4 * bound), rng.gen_range(1..=2))
}

/// Right endpoint beyond `a` that avoids the roots of `P`.
fn right_of(rng: &mut ChaCha8Rng, roots: &[(Rat, u32)], a: &Rat, bound: i64) -> Rat {
    loop {
        let b = a + offset(rng, bound);
        if !is_root(roots, &b) {
            return b;
        }
    }
}

fn gen_roots(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Vec<(Rat, u32)> {
    let target = rng.gen_range(1..=cfg.max_deg_p);
    let mut roots: Vec<(Rat, u32)> = Vec::new();
    let mut total = 0usize;
    let mut misses = 0;
    while total < target {
        let r = small_rat(rng, cfg.coeff_bound);
        if is_root(&roots, &r) {
            // the pool of small rationals may run dry for tight bounds
            misses += 1;
            if misses > 64 {
                break;
            }
            continue;
        }
        let room = (target - total).min(cfg.max_mult as usize) as u32;
        let m = rng.gen_range(1..=room);
        roots.push((r, m));
        total += m as usize;
    }
    roots
}

fn gen_q(rng: &mut ChaCha8Rng, p: &Poly, roots: &[(Rat, u32)], bound: i64) -> Poly {
    let deg = p.degree().expect("P has a root");
    let q = match rng.gen_range(0..5) {
        0 => dense_poly(rng, 0..=deg + 1, bound),
        // a low-degree numerator forces a degree gap of at least two
        1 if deg >= 2 => dense_poly(rng, 0..=deg - 2, bound),
        1 => dense_poly(rng, 0..=0, bound),
        2 => {
            let (r, m) = roots.choose(rng).expect("nonempty").clone();
            let k = rng.gen_range(1..=m);
            let rest = dense_poly(rng, 0..=deg - 1, bound);
            &Poly::linear_root(&r).pow(k) * &rest
        }
        3 => {
            let extra = Poly::constant(coefficient(rng, bound));
            &p.derivative().scale(&int(nonzero_int(rng, 3))) + &extra
        }
        _ => sparse_poly(rng, deg, bound),
    };
    if q.is_zero() {
        Poly::one()
    } else {
        q
    }
}

/// Deterministic instance for `(seed, config)`.
pub fn generate(seed: u64, cfg: &GenConfig) -> Result<Instance> {
    cfg.validate()?;
    let mode = cfg.mode_for(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = cfg.coeff_bound;
    let roots = gen_roots(&mut rng, cfg);
    let lc = int(nonzero_int(&mut rng, 3));
    let p = Poly::from_roots(&lc, &roots);
    let mut q = gen_q(&mut rng, &p, &roots, bound);

    let a = match mode {
        EndpointMode::Generic => off_root_point(&mut rng, &roots, bound),
        EndpointMode::RootOfP => roots.choose(&mut rng).expect("nonempty").0.clone(),
        EndpointMode::CommonRoot => {
            let r = roots.choose(&mut rng).expect("nonempty").0.clone();
            if !q.eval(&r).is_zero() {
                q = &Poly::linear_root(&r) * &q;
            }
            r
        }
        EndpointMode::RootOfQ => {
            let c = off_root_point(&mut rng, &roots, bound);
            q = &Poly::linear_root(&c) * &q;
            c
        }
    };

    let special_b = mode != EndpointMode::Generic && rng.gen_bool(1.0 / 3.0);
    let b = match mode {
        EndpointMode::RootOfP | EndpointMode::CommonRoot if special_b => {
            let later: Vec<&Rat> = roots.iter().map(|(r, _)| r).filter(|r| *r > &a).collect();
            match later.choose(&mut rng) {
                Some(r) => (*r).clone(),
                None => right_of(&mut rng, &roots, &a, bound),
            }
        }
        EndpointMode::RootOfQ if special_b => {
            let c = right_of(&mut rng, &roots, &a, bound);
            q = &Poly::linear_root(&c) * &q;
            c
        }
        _ => right_of(&mut rng, &roots, &a, bound),
    };

    Ok(Instance {
        p,
        q,
        roots,
        a,
        b,
        seed,
        mode,
    })
}

/// What one engine produced on an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome {
    Value {
        value_doubled: i64,
    },
    /// The engine's precondition excludes this instance.
    Skipped {
        reason: String,
    },
    Failed {
        error: String,
    },
}

impl Outcome {
    fn from_result(r: Result<HalfInt>, skippable: fn(&Error) -> bool) -> Outcome {
        match r {
            Ok(v) => Outcome::Value {
                value_doubled: v.doubled(),
            },
            Err(e) if skippable(&e) => Outcome::Skipped {
                reason: e.to_string(),
            },
            Err(e) => Outcome::Failed {
                error: e.to_string(),
            },
        }
    }

    pub fn value(&self) -> Option<HalfInt> {
        match self {
            Outcome::Value { value_doubled } => Some(HalfInt::from_doubled(*value_doubled)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineOutcomes {
    pub oracle: Outcome,
    pub sturm: Outcome,
    pub subres: Outcome,
    pub variation: Outcome,
    pub w_baseline: Outcome,
    pub real_line_oracle: Outcome,
    pub real_line: Outcome,
}

impl EngineOutcomes {
    fn interval(&self) -> [&Outcome; 5] {
        [
            &self.oracle,
            &self.sturm,
            &self.subres,
            &self.variation,
            &self.w_baseline,
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Every engine ran and all values coincide.
    Agree,
    /// All engines that ran agree; some were skipped by precondition.
    Partial,
    Disagree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    pub instance: InstanceRecord,
    /// Generator settings, when the instance came from [`generate`].
    pub config: Option<GenConfig>,
    pub outcomes: EngineOutcomes,
    pub verdict: Verdict,
    /// Largest `d_{i-1} - d_i` in the chain of `(P, Rem(Q, P))`.
    pub max_gap: usize,
    pub common_factor: bool,
    /// Wall-clock metadata only; never compared.
    pub elapsed_us: u64,
}

fn group_agrees(group: &[&Outcome]) -> Option<bool> {
    let mut value = None;
    let mut skipped = false;
    for o in group {
        match o {
            Outcome::Failed { .. } => return None,
            Outcome::Skipped { .. } => skipped = true,
            Outcome::Value { value_doubled } => match value {
                None => value = Some(*value_doubled),
                Some(v) if v != *value_doubled => return None,
                Some(_) => {}
            },
        }
    }
    value.map(|_| !skipped)
}

fn verdict(o: &EngineOutcomes) -> Verdict {
    match (
        group_agrees(&o.interval()),
        group_agrees(&[&o.real_line_oracle, &o.real_line]),
    ) {
        (Some(true), Some(true)) => Verdict::Agree,
        (Some(_), Some(_)) => Verdict::Partial,
        _ => Verdict::Disagree,
    }
}

/// Runs every engine on the instance and compares the results.
pub fn run_differential(inst: &Instance) -> DiffReport {
    let start = Instant::now();
    let (p, q, a, b) = (&inst.p, &inst.q, &inst.a, &inst.b);
    let never: fn(&Error) -> bool = |_| false;
    let outcomes = EngineOutcomes {
        oracle: Outcome::from_result(index_interval_oracle(q, p, &inst.roots, a, b), never),
        sturm: Outcome::from_result(index_sturm(q, p, a, b), never),
        subres: Outcome::from_result(index_subres(q, p, a, b), never),
        variation: Outcome::from_result(index_variation(q, p, a, b), |e| {
            matches!(e, Error::CommonRootEndpoint(_))
        }),
        w_baseline: Outcome::from_result(index_w_baseline(q, p, a, b), |e| {
            matches!(e, Error::EndpointIsRootOfP(_))
        }),
        real_line_oracle: Outcome::from_result(index_real_line_oracle(q, p, &inst.roots), never),
        real_line: Outcome::from_result(index_real_line(q, p), never),
    };
    let (max_gap, common_factor) = chain_shape(p, q);
    DiffReport {
        instance: inst.to_record(),
        config: None,
        verdict: verdict(&outcomes),
        outcomes,
        max_gap,
        common_factor,
        elapsed_us: start.elapsed().as_micros() as u64,
    }
}

fn chain_shape(p: &Poly, q: &Poly) -> (usize, bool) {
    let Ok(r) = q.rem(p) else {
        return (0, false);
    };
    if r.is_zero() {
        // gcd(P, 0) = P
        return (0, true);
    }
    match subresultant_chain(p, &r) {
        Ok(chain) => (chain.max_gap(), chain.has_common_factor()),
        Err(_) => (0, false),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchSummary {
    pub count: usize,
    pub agree: usize,
    /// Instances with verdict [`Verdict::Partial`].
    pub skip: usize,
    pub disagree: usize,
    pub gap_at_least_two: usize,
    pub common_factor: usize,
    pub gap_histogram: BTreeMap<usize, usize>,
    pub modes: BTreeMap<String, usize>,
    pub elapsed_ms: u64,
}

impl BatchSummary {
    pub fn from_reports(reports: &[DiffReport], elapsed_ms: u64) -> Self {
        let mut s = BatchSummary {
            count: reports.len(),
            elapsed_ms,
            ..Default::default()
        };
        for r in reports {
            match r.verdict {
                Verdict::Agree => s.agree += 1,
                Verdict::Partial => s.skip += 1,
                Verdict::Disagree => s.disagree += 1,
            }
            s.gap_at_least_two += usize::from(r.max_gap >= 2);
            s.common_factor += usize::from(r.common_factor);
            *s.gap_histogram.entry(r.max_gap).or_default() += 1;
            *s.modes
                .entry(r.instance.mode.name().to_string())
                .or_default() += 1;
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Batch {
    pub reports: Vec<DiffReport>,
    pub summary: BatchSummary,
}

fn run_one(seed: u64, cfg: &GenConfig) -> DiffReport {
    let mut report = run_differential(&generate(seed, cfg).expect("config validated"));
    report.config = Some(cfg.clone());
    report
}

/// Instances `base_seed, base_seed + 1, …` on the current thread.
pub fn run_batch_sequential(base_seed: u64, count: usize, cfg: &GenConfig) -> Result<Batch> {
    cfg.validate()?;
    let start = Instant::now();
    let reports: Vec<DiffReport> = (0..count as u64)
        .map(|i| run_one(base_seed.wrapping_add(i), cfg))
        .collect();
    let summary = BatchSummary::from_reports(&reports, start.elapsed().as_millis() as u64);
    Ok(Batch { reports, summary })
}

/// Same instances and report order as [`run_batch_sequential`], spread over the rayon pool.
#[cfg(feature = "parallel")]
pub fn run_batch_parallel(base_seed: u64, count: usize, cfg: &GenConfig) -> Result<Batch> {
    use rayon::prelude::*;
    cfg.validate()?;
    let start = Instant::now();
    let reports: Vec<DiffReport> = (0..count as u64)
        .into_par_iter()
        .map(|i| run_one(base_seed.wrapping_add(i), cfg))
        .collect();
    let summary = BatchSummary::from_reports(&reports, start.elapsed().as_millis() as u64);
    Ok(Batch { reports, summary })
}

/// Parallel when the `parallel` feature is on, sequential otherwise.
pub fn run_batch(base_seed: u64, count: usize, cfg: &GenConfig) -> Result<Batch> {
    #[cfg(feature = "parallel")]
    {
        run_batch_parallel(base_seed, count, cfg)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_batch_sequential(base_seed, count, cfg)
    }
}
