//! Sweeps a check over every family of a range of shapes, exhaustively when
//! the work fits under a cap and by seeded sampling otherwise.
//!
//! Over `F_p` the sizes `|L|` and `|C|` are unchanged when one affine map
//! `x -> cx + t` (`c != 0`) is applied to every member of a family. An
//! exhaustive sweep therefore fixes the first member to one representative
//! per affine orbit and weights each family by the orbit size; the weights
//! add up to the full family count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::formula::{BoundFormula, BoundValue};
use super::subsets::{affine_orbit_reps, binomial, subsets_of_size, unrank};
use super::verify::{Check, VerificationReport, Verdict};
use crate::domain::{min_torsion, DomainKind, PrimeModulus};
use crate::engine::bitmask::{bits, ChainState, MaskField};
use crate::engine::{sumset, Integers, SetFamily, SumsetKind};
use crate::error::{Error, Result};

/// Default cap on the number of families evaluated per shape.
pub const DEFAULT_SWEEP_CAP: u128 = 100_000_000;

/// Default seed for sampled shapes.
pub const DEFAULT_SEED: u64 = 0x5eed_2024_0b0b_cafe;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepDomain {
    /// Subsets of `F_p`, `p <= 64`.
    Prime(PrimeModulus),
    /// Subsets of the integer window `{lo, ..., hi}`, at most 64 wide.
    Window { lo: i64, hi: i64 },
}

impl SweepDomain {
    fn kind(self) -> DomainKind {
        match self {
            SweepDomain::Prime(p) => DomainKind::PrimeField(p),
            SweepDomain::Window { .. } => DomainKind::TorsionFree { dim: 1 },
        }
    }

    fn width(self) -> u32 {
        match self {
            SweepDomain::Prime(p) => p.get(),
            SweepDomain::Window { lo, hi } => (hi - lo + 1) as u32,
        }
    }
}

/// Which records a sweep keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordPolicy {
    /// One record per evaluated family and per skipped shape.
    All,
    /// Violations and skipped shapes only.
    Notable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub check: Check,
    pub domain: SweepDomain,
    /// Inclusive range of the number of summands. Ignored by the corollary.
    pub n_range: (usize, usize),
    /// Inclusive range of member sizes.
    pub size_range: (usize, usize),
    /// Most families evaluated exhaustively for one shape.
    pub cap: u128,
    /// Families drawn for a shape over the cap; zero leaves it unchecked.
    pub samples: u64,
    pub seed: u64,
    pub records: RecordPolicy,
}

impl SweepConfig {
    pub fn new(check: Check, domain: SweepDomain) -> Self {
        SweepConfig {
            check,
            domain,
            n_range: (2, 4),
            size_range: (2, 4),
            cap: DEFAULT_SWEEP_CAP,
            samples: 0,
            seed: DEFAULT_SEED,
            records: RecordPolicy::Notable,
        }
    }
}

/// Aggregate counts. Verdict counts are weighted by orbit size, so over an
/// exhaustive sweep they add up to `families_covered`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub check: String,
    pub domain: String,
    pub shapes: u64,
    pub shapes_exhaustive: u64,
    pub shapes_sampled: u64,
    pub shapes_out_of_scope: u64,
    pub shapes_over_cap: u64,
    /// Families actually evaluated.
    pub families_checked: u64,
    /// Families accounted for, counting each orbit representative as its orbit.
    pub families_covered: u64,
    pub holds: u64,
    pub equality: u64,
    pub violated: u64,
    /// True when every in-scope shape was enumerated in full.
    pub complete: bool,
}

impl SweepSummary {
    pub fn cap_hit(&self) -> bool {
        self.shapes_over_cap > 0
    }

    /// One-line statement of how much of the requested range was covered.
    pub fn coverage(&self) -> String {
        if self.complete {
            format!(
                "exhaustive: {} families over {} shapes",
                self.families_covered, self.shapes_exhaustive
            )
        } else {
            format!(
                "partial: {} shapes exhaustive, {} sampled, {} over the cap and unchecked",
                self.shapes_exhaustive, self.shapes_sampled, self.shapes_over_cap
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub records: Vec<VerificationReport>,
    pub summary: SweepSummary,
}

/// Runs a sweep. Records come out in a fixed order regardless of threading.
pub fn sweep(config: &SweepConfig) -> Result<SweepOutcome> {
    validate(config)?;
    let domain_kind = config.domain.kind();
    let mut summary = SweepSummary {
        check: config.check.to_string(),
        domain: domain_kind.to_string(),
        complete: true,
        ..Default::default()
    };
    let mut records = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let torsion = min_torsion(domain_kind);
    for shape in shapes(config) {
        summary.shapes += 1;
        if let Some(reason) = config.check.hypothesis_gap(&shape, torsion.finite()) {
            summary.shapes_out_of_scope += 1;
            records.push(VerificationReport::skipped(config.check, domain_kind, shape, None, reason));
            continue;
        }
        let plan = plan_shape(config, &shape);
        let leaves = match plan {
            Plan::Exhaustive(work) => {
                summary.shapes_exhaustive += 1;
                work.run(config, &shape)
            }
            Plan::OverCap(needed) if config.samples == 0 => {
                summary.shapes_over_cap += 1;
                summary.complete = false;
                let reason = format!("needs {needed} evaluations, cap is {}", config.cap);
                records.push(VerificationReport::skipped(config.check, domain_kind, shape, None, reason));
                continue;
            }
            Plan::OverCap(_) => {
                summary.shapes_sampled += 1;
                summary.complete = false;
                sample_shape(config, &shape, &mut rng)
            }
        };
        let bound = shape_bound(config, &shape)?;
        for leaf in leaves {
            summary.families_checked += leaf.checked;
            summary.families_covered += leaf.covered;
            summary.holds += leaf.holds;
            summary.equality += leaf.equality;
            summary.violated += leaf.violated;
            for hit in leaf.hits {
                records.push(leaf_report(config, &shape, bound, hit));
            }
        }
    }
    Ok(SweepOutcome { records, summary })
}

fn validate(config: &SweepConfig) -> Result<()> {
    let check = config.check;
    match config.domain {
        SweepDomain::Prime(p) => {
            if !check.over_prime_field() {
                return Err(Error::input(format!("{check} runs over a torsion-free group")));
            }
            if p.get() > 64 {
                return Err(Error::input(format!("sweeps over F_p need p <= 64, got {p}")));
            }
        }
        SweepDomain::Window { lo, hi } => {
            if check.over_prime_field() {
                return Err(Error::input(format!("{check} runs over a prime field")));
            }
            if hi < lo || hi - lo >= 64 {
                return Err(Error::input(format!("window {lo}..={hi} must hold 1 to 64 integers")));
            }
        }
    }
    if config.n_range.0 == 0 {
        return Err(Error::input("n must be at least 1"));
    }
    if config.size_range.0 == 0 {
        return Err(Error::input("member sizes must be at least 1"));
    }
    if config.cap == 0 {
        return Err(Error::input("the cap must be positive"));
    }
    Ok(())
}

/// Size tuples in sweep order. An empty range yields no shapes.
fn shapes(config: &SweepConfig) -> Vec<Vec<usize>> {
    let (n_lo, n_hi) = config.n_range;
    let width = config.domain.width() as usize;
    let (s_lo, s_hi) = (config.size_range.0, config.size_range.1.min(width));
    let sizes = || s_lo..=s_hi;
    let mut out = Vec::new();
    match config.check {
        Check::Corollary => out.extend(sizes().map(|k| vec![k])),
        Check::TorsionfreeL | Check::TorsionfreeC | Check::TheoremEvenC | Check::TheoremOddL => {
            for n in n_lo..=n_hi {
                out.extend(sizes().map(|k| vec![k; n]));
            }
        }
        Check::TheoremL3 => {
            for n in n_lo..=n_hi {
                if n != 3 {
                    if s_lo <= s_hi {
                        out.push(vec![s_lo; n]);
                    }
                    continue;
                }
                for a in sizes() {
                    for b in [a, a + 1].into_iter().filter(|b| *b <= s_hi) {
                        out.extend(sizes().map(|c| vec![a, b, c]));
                    }
                }
            }
        }
        Check::ConjectureL | Check::ConjectureC => {
            for n in n_lo..=n_hi {
                if s_lo > s_hi {
                    break;
                }
                let mut tuple = vec![s_lo; n];
                loop {
                    out.push(tuple.clone());
                    // odometer, last slot fastest
                    let Some(i) = (0..n).rev().find(|&i| tuple[i] < s_hi) else { break };
                    tuple[i] += 1;
                    tuple[i + 1..].fill(s_lo);
                }
            }
        }
    }
    out
}

fn shape_bound(config: &SweepConfig, shape: &[usize]) -> Result<BoundValue> {
    let torsion = min_torsion(config.domain.kind());
    match config.check.bound_kind() {
        Some(kind) => BoundFormula::new(kind, shape.to_vec(), torsion).eval(),
        None => {
            let p = torsion.finite().unwrap_or(0) as i64;
            Ok(BoundValue { raw: p, effective: p, clamped: p })
        }
    }
}

enum Plan {
    Exhaustive(Work),
    /// Evaluations an exhaustive run would need.
    OverCap(u128),
}

enum Work {
    /// Multi-set families over `F_p`, first member fixed to orbit representatives.
    Chains { reps: Vec<(u64, u64)>, lists: Vec<Vec<u64>> },
    /// All `k`-subsets of the domain, each used for every slot.
    Single { masks: Vec<u64> },
}

fn plan_shape(config: &SweepConfig, shape: &[usize]) -> Plan {
    let width = config.domain.width();
    if config.check.single_set() {
        let count = binomial(width as u64, shape[0] as u64);
        if count > config.cap {
            return Plan::OverCap(count);
        }
        return Plan::Exhaustive(Work::Single {
            masks: subsets_of_size(width, shape[0] as u32),
        });
    }
    let SweepDomain::Prime(p) = config.domain else {
        unreachable!("multi-set checks run over F_p")
    };
    let field = MaskField::new(p).expect("validated p <= 64");
    let rest = shape[1..]
        .iter()
        .fold(1u128, |acc, &s| acc.saturating_mul(binomial(width as u64, s as u64)));
    let first = shape[0] as u64;
    // scanning for representatives costs about C(p - 2, k - 2) images
    let scan = binomial(width as u64 - 2, first.saturating_sub(2));
    if scan > config.cap {
        return Plan::OverCap(binomial(width as u64, first).saturating_mul(rest));
    }
    let reps: Vec<(u64, u64)> = affine_orbit_reps(field, first as u32)
        .into_iter()
        .map(|r| (r.mask, r.orbit))
        .collect();
    let work = (reps.len() as u128).saturating_mul(rest);
    if work > config.cap {
        return Plan::OverCap(work);
    }
    let lists = shape
        .iter()
        .map(|&s| subsets_of_size(width, s as u32))
        .collect();
    Plan::Exhaustive(Work::Chains { reps, lists })
}

/// A family worth recording.
struct Hit {
    masks: Vec<u64>,
    sums: SumsMask,
    verdict: Verdict,
}

enum SumsMask {
    Field(u64),
    Integers(Vec<i64>),
}

#[derive(Default)]
struct Tally {
    checked: u64,
    covered: u64,
    holds: u64,
    equality: u64,
    violated: u64,
    hits: Vec<Hit>,
}

impl Tally {
    fn count(&mut self, verdict: Verdict, weight: u64) {
        self.checked += 1;
        self.covered += weight;
        match verdict {
            Verdict::Holds => self.holds += weight,
            Verdict::Equality => self.equality += weight,
            Verdict::Violated => self.violated += weight,
            Verdict::Skipped => unreachable!("families are only evaluated in scope"),
        }
    }
}

struct Context {
    cyclic: bool,
    bound: BoundValue,
    keep_all: bool,
}

impl Context {
    fn new(config: &SweepConfig, shape: &[usize]) -> Self {
        Context {
            cyclic: config.check.sumset_kind() == SumsetKind::Cyclic,
            bound: shape_bound(config, shape).expect("shape arity checked by the hypotheses"),
            keep_all: config.records == RecordPolicy::All,
        }
    }

    fn keeps(&self, verdict: Verdict) -> bool {
        self.keep_all || verdict == Verdict::Violated
    }
}

impl Work {
    fn run(self, config: &SweepConfig, shape: &[usize]) -> Vec<Tally> {
        let ctx = Context::new(config, shape);
        match self {
            Work::Chains { reps, lists } => {
                let SweepDomain::Prime(p) = config.domain else { unreachable!() };
                let field = MaskField::new(p).expect("validated p <= 64");
                reps.par_iter()
                    .map(|&(rep, weight)| walk_from(&ctx, field, &lists, rep, weight))
                    .collect()
            }
            Work::Single { masks } => masks
                .par_chunks(256)
                .map(|chunk| {
                    let mut tally = Tally::default();
                    for &m in chunk {
                        single_set(&ctx, config, shape, m, &mut tally);
                    }
                    tally
                })
                .collect(),
        }
    }
}

/// Depth-first walk over all families whose first member is `rep`.
fn walk_from(ctx: &Context, field: MaskField, lists: &[Vec<u64>], rep: u64, weight: u64) -> Tally {
    let n = lists.len();
    let mut tally = Tally::default();
    let mut chain = vec![ChainState::default(); n];
    let mut chosen = vec![0u64; n];
    chosen[0] = rep;
    if ctx.cyclic {
        chain[0].start_cyclic(rep);
    } else {
        chain[0].start_linear(rep);
    }
    descend(ctx, field, lists, 1, &mut chain, &mut chosen, weight, &mut tally);
    tally
}

#[allow(clippy::too_many_arguments)]
fn descend(
    ctx: &Context,
    field: MaskField,
    lists: &[Vec<u64>],
    depth: usize,
    chain: &mut [ChainState],
    chosen: &mut [u64],
    weight: u64,
    tally: &mut Tally,
) {
    let n = lists.len();
    if depth == n - 1 {
        let state = &chain[depth - 1];
        for &m in &lists[depth] {
            let sums = if ctx.cyclic {
                state.extend_cyclic(field, m)
            } else {
                state.extend_linear(field, m)
            };
            let verdict = Verdict::judge(&ctx.bound, sums.count_ones() as usize);
            tally.count(verdict, weight);
            if ctx.keeps(verdict) {
                chosen[depth] = m;
                tally.hits.push(Hit {
                    masks: chosen.to_vec(),
                    sums: SumsMask::Field(sums),
                    verdict,
                });
            }
        }
        return;
    }
    for &m in &lists[depth] {
        let (done, todo) = chain.split_at_mut(depth);
        done[depth - 1].step_into(field, m, &mut todo[0]);
        chosen[depth] = m;
        descend(ctx, field, lists, depth + 1, chain, chosen, weight, tally);
    }
}

/// Evaluates `n` copies of the set `m`.
fn single_set(ctx: &Context, config: &SweepConfig, shape: &[usize], m: u64, tally: &mut Tally) {
    let sums = match config.domain {
        SweepDomain::Prime(p) => {
            let field = MaskField::new(p).expect("validated p <= 64");
            // the corollary is about 3~A
            SumsMask::Field(field.linear(&[m, m, m]))
        }
        SweepDomain::Window { lo, .. } => {
            let set: Vec<i64> = bits(m).map(|x| lo + x as i64).collect();
            let family = SetFamily::repeated(Integers, set, shape.len()).expect("nonempty set");
            let kind = config.check.sumset_kind();
            SumsMask::Integers(sumset(&family, kind).expect("linear and cyclic never fail").elements)
        }
    };
    let actual = match &sums {
        SumsMask::Field(s) => s.count_ones() as usize,
        SumsMask::Integers(v) => v.len(),
    };
    let verdict = Verdict::judge(&ctx.bound, actual);
    tally.count(verdict, 1);
    if ctx.keeps(verdict) {
        tally.hits.push(Hit {
            masks: vec![m],
            sums,
            verdict,
        });
    }
}

/// Draws `config.samples` families of this shape by unranking seeded ranks.
fn sample_shape(config: &SweepConfig, shape: &[usize], rng: &mut ChaCha8Rng) -> Vec<Tally> {
    let width = config.domain.width();
    let slots = if config.check.single_set() { 1 } else { shape.len() };
    let draws: Vec<Vec<u64>> = (0..config.samples)
        .map(|_| {
            (0..slots)
                .map(|i| {
                    let total = binomial(width as u64, shape[i] as u64);
                    unrank(rng.gen_range(0..total), shape[i] as u32)
                })
                .collect()
        })
        .collect();
    let ctx = Context::new(config, shape);
    draws
        .par_chunks(256)
        .map(|chunk| {
            let mut tally = Tally::default();
            for masks in chunk {
                if config.check.single_set() {
                    single_set(&ctx, config, shape, masks[0], &mut tally);
                    continue;
                }
                let SweepDomain::Prime(p) = config.domain else { unreachable!() };
                let field = MaskField::new(p).expect("validated p <= 64");
                let sums = if ctx.cyclic { field.cyclic(masks) } else { field.linear(masks) };
                let verdict = Verdict::judge(&ctx.bound, sums.count_ones() as usize);
                tally.count(verdict, 1);
                if ctx.keeps(verdict) {
                    tally.hits.push(Hit {
                        masks: masks.clone(),
                        sums: SumsMask::Field(sums),
                        verdict,
                    });
                }
            }
            tally
        })
        .collect()
}

fn mask_literal(mask: u64, offset: i64) -> String {
    let items: Vec<String> = bits(mask).map(|x| (offset + x as i64).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn leaf_report(config: &SweepConfig, shape: &[usize], bound: BoundValue, hit: Hit) -> VerificationReport {
    let offset = match config.domain {
        SweepDomain::Prime(_) => 0,
        SweepDomain::Window { lo, .. } => lo,
    };
    let copies = match config.check {
        Check::Corollary => 3,
        c if c.single_set() => shape.len(),
        _ => 1,
    };
    let family: Vec<String> = hit
        .masks
        .iter()
        .flat_map(|&m| std::iter::repeat_n(mask_literal(m, offset), copies))
        .collect();
    let (actual, witness) = match &hit.sums {
        SumsMask::Field(s) => (s.count_ones() as usize, mask_literal(*s, 0)),
        SumsMask::Integers(v) => {
            let items: Vec<String> = v.iter().map(i64::to_string).collect();
            (v.len(), format!("{{{}}}", items.join(",")))
        }
    };
    VerificationReport {
        check: config.check,
        domain: config.domain.kind().to_string(),
        kind: config.check.sumset_kind(),
        family: Some(family.join(";")),
        sizes: shape.to_vec(),
        bound_raw: Some(bound.raw),
        bound: Some(bound.clamped),
        actual: Some(actual),
        verdict: hit.verdict,
        note: None,
        witness: Some(witness),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::verify::{
        verify_corollary, verify_conjecture, verify_even_c_theorem, verify_l3_theorem,
        verify_odd_l_theorem, verify_torsionfree,
    };
    use crate::engine::Zp;

    fn prime(p: u32) -> SweepDomain {
        SweepDomain::Prime(PrimeModulus::new(p).unwrap())
    }

    fn config(check: Check, domain: SweepDomain, n: (usize, usize), sizes: (usize, usize)) -> SweepConfig {
        SweepConfig {
            n_range: n,
            size_range: sizes,
            records: RecordPolicy::All,
            ..SweepConfig::new(check, domain)
        }
    }

    fn parse_zp(p: u32, literal: &str) -> SetFamily<Zp> {
        let members = literal
            .split(';')
            .map(|m| {
                let inner = m.trim_matches(|c| c == '{' || c == '}');
                inner.split(',').map(|x| x.parse().unwrap()).collect()
            })
            .collect();
        SetFamily::new(Zp(PrimeModulus::new(p).unwrap()), members).unwrap()
    }

    /// Every record of a sweep agrees with the per-instance check.
    fn agrees_with_verify(check: Check, p: u32, n: (usize, usize), sizes: (usize, usize)) {
        let out = sweep(&config(check, prime(p), n, sizes)).unwrap();
        assert!(out.summary.complete);
        let mut evaluated = 0;
        for r in &out.records {
            let Some(literal) = &r.family else { continue };
            let family = parse_zp(p, literal);
            let direct = match check {
                Check::TheoremL3 => verify_l3_theorem(&family),
                Check::TheoremEvenC => verify_even_c_theorem(&family),
                Check::TheoremOddL => verify_odd_l_theorem(&family),
                Check::ConjectureL => verify_conjecture(&family, SumsetKind::Linear),
                Check::ConjectureC => verify_conjecture(&family, SumsetKind::Cyclic),
                Check::Corollary => verify_corollary(*family.domain(), family.members()[0].clone()),
                _ => unreachable!(),
            }
            .unwrap();
            assert_eq!(r, &direct);
            evaluated += 1;
        }
        assert_eq!(evaluated as u64, out.summary.families_checked);
    }

    #[test]
    fn records_match_direct_checks() {
        agrees_with_verify(Check::TheoremL3, 5, (3, 3), (2, 3));
        agrees_with_verify(Check::TheoremEvenC, 7, (2, 4), (2, 3));
        agrees_with_verify(Check::TheoremOddL, 7, (3, 3), (2, 3));
        agrees_with_verify(Check::ConjectureC, 5, (2, 3), (2, 3));
        agrees_with_verify(Check::ConjectureL, 3, (2, 4), (2, 3));
        agrees_with_verify(Check::Corollary, 7, (3, 3), (1, 7));
    }

    #[test]
    fn orbit_weights_cover_every_family() {
        let out = sweep(&config(Check::ConjectureC, prime(7), (3, 3), (2, 3))).unwrap();
        // every slot independently takes one of C(7,2) + C(7,3) sets
        assert_eq!(out.summary.families_covered, 56u64.pow(3));
        assert!(out.summary.families_checked < out.summary.families_covered);
        assert_eq!(out.summary.violated, 0);
        assert_eq!(
            out.summary.holds + out.summary.equality,
            out.summary.families_covered
        );
    }

    #[test]
    fn skipped_shapes_are_recorded() {
        let out = sweep(&config(Check::ConjectureC, prime(5), (1, 1), (2, 2))).unwrap();
        assert_eq!(out.records.len(), 1);
        assert_eq!(out.records[0].verdict, Verdict::Skipped);
        assert_eq!(out.records[0].note.as_deref(), Some("needs n >= 2, got n = 1"));
        let out = sweep(&config(Check::TheoremEvenC, prime(5), (3, 3), (2, 2))).unwrap();
        assert_eq!(out.summary.shapes_out_of_scope, 1);
    }

    #[test]
    fn empty_range_gives_empty_report() {
        let out = sweep(&config(Check::ConjectureL, prime(5), (4, 3), (2, 3))).unwrap();
        assert!(out.records.is_empty());
        assert_eq!(out.summary.shapes, 0);
        assert!(out.summary.complete);
    }

    #[test]
    fn cap_without_samples_leaves_shapes_unchecked() {
        let mut cfg = config(Check::ConjectureL, prime(7), (3, 3), (3, 3));
        cfg.cap = 10;
        let out = sweep(&cfg).unwrap();
        assert!(out.summary.cap_hit());
        assert!(!out.summary.complete);
        assert_eq!(out.summary.families_checked, 0);
        assert!(out.summary.coverage().starts_with("partial"));
    }

    #[test]
    fn sampling_is_seeded() {
        let mut cfg = config(Check::ConjectureC, prime(11), (4, 4), (3, 3));
        cfg.cap = 10;
        cfg.samples = 200;
        let first = sweep(&cfg).unwrap();
        assert_eq!(first.summary.families_checked, 200);
        assert_eq!(first, sweep(&cfg).unwrap());
        cfg.seed += 1;
        assert_ne!(first.records, sweep(&cfg).unwrap().records);
    }

    #[test]
    fn torsionfree_window() {
        let cfg = config(Check::TorsionfreeC, SweepDomain::Window { lo: 0, hi: 5 }, (3, 5), (2, 3));
        let out = sweep(&cfg).unwrap();
        assert_eq!(out.summary.violated, 0);
        // C(6,2) + C(6,3) sets for each of three n
        assert_eq!(out.summary.families_checked, 3 * (15 + 20));
        for r in out.records.iter().take(40) {
            let family = r.family.as_ref().unwrap();
            let set: Vec<i64> = family.split(';').next().unwrap().trim_matches(|c| c == '{' || c == '}')
                .split(',').map(|x| x.parse().unwrap()).collect();
            let direct = verify_torsionfree(Integers, set, r.sizes.len(), SumsetKind::Cyclic).unwrap();
            assert_eq!(r, &direct);
        }
    }

    #[test]
    fn domain_mismatch_is_rejected() {
        assert!(sweep(&config(Check::TorsionfreeL, prime(5), (2, 3), (2, 3))).is_err());
        assert!(sweep(&config(Check::ConjectureL, SweepDomain::Window { lo: 0, hi: 3 }, (2, 3), (2, 3))).is_err());
        assert!(sweep(&config(Check::ConjectureL, prime(67), (2, 3), (2, 3))).is_err());
    }
}
