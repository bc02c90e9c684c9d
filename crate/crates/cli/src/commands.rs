use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use serde_json::{json, Value};
use sumset_core::bounds::subsets::binomial;
use sumset_core::bounds::{
    classify_equality, classify_window, sweep as run_sweep, verify_conjecture, verify_corollary,
    verify_even_c_theorem, verify_l3_theorem, verify_odd_l_theorem, verify_torsionfree, write_jsonl,
    write_text, Check, ClassSweep, Classification, RecordPolicy, SweepConfig, SweepDomain, SweepOutcome,
    VerificationReport,
};
use sumset_core::domain::{LatticePoint, PrimeModulus};
use sumset_core::engine::{sumset, AdditiveDomain, Integers, Lattice, SetFamily, SumsetKind, Zp};

use crate::args::{CheckArgs, DomainArgs, EnumerateArgs, Format, Records, SweepArgs, Target};
use crate::literal::{parse_family, Element};
use crate::{Failure, Status};

const OUT_DIR_ENV: &str = "SUMSETS_OUT_DIR";

const DEFAULT_WINDOW: (i64, i64) = (0, 12);

enum AnyFamily {
    Prime(SetFamily<Zp>),
    Int(SetFamily<Integers>),
    Lattice(SetFamily<Lattice>),
}

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn single_prime(domain: &DomainArgs) -> Result<Option<PrimeModulus>, Failure> {
    match domain.zp.as_slice() {
        [] => Ok(None),
        [p] => Ok(Some(PrimeModulus::new(*p)?)),
        _ => Err(input("a single family needs exactly one prime after --zp")),
    }
}

fn build_family(domain: &DomainArgs, literal: &str) -> Result<AnyFamily, Failure> {
    let slots = parse_family(literal).map_err(Failure::Input)?;
    if let Some(p) = single_prime(domain)? {
        let members = slots
            .into_iter()
            .map(|slot| slot.into_iter().map(|e| residue(p, e)).collect())
            .collect::<Result<_, _>>()?;
        return Ok(AnyFamily::Prime(SetFamily::new(Zp(p), members)?));
    }
    if !domain.int {
        return Err(input("choose a domain with --zp P or --int"));
    }
    let dim = domain.dim;
    if dim == 1 {
        let members = slots
            .into_iter()
            .map(|slot| slot.into_iter().map(integer).collect())
            .collect::<Result<_, _>>()?;
        return Ok(AnyFamily::Int(SetFamily::new(Integers, members)?));
    }
    let members = slots
        .into_iter()
        .map(|slot| slot.into_iter().map(|e| point(dim, e)).collect())
        .collect::<Result<_, _>>()?;
    Ok(AnyFamily::Lattice(SetFamily::new(Lattice::new(dim)?, members)?))
}

fn residue(p: PrimeModulus, e: Element) -> Result<u32, Failure> {
    match e {
        Element::Int(x) => Ok(p.residue(x).value()),
        Element::Tuple(_) => Err(input(format!("F_{p} elements are integers, not tuples"))),
    }
}

fn integer(e: Element) -> Result<i64, Failure> {
    match e {
        Element::Int(x) => Ok(x),
        Element::Tuple(c) if c.len() == 1 => Ok(c[0]),
        Element::Tuple(c) => Err(input(format!("{c:?} has {} coordinates; pass --dim {}", c.len(), c.len()))),
    }
}

fn point(dim: usize, e: Element) -> Result<LatticePoint, Failure> {
    match e {
        Element::Tuple(c) if c.len() == dim => Ok(LatticePoint::new(c)?),
        other => Err(input(format!("expected a point with {dim} coordinates, got {other:?}"))),
    }
}

pub fn enumerate(args: &EnumerateArgs) -> Result<Status, Failure> {
    let number = |x: i64| json!(x);
    match build_family(&args.domain, &args.family)? {
        AnyFamily::Prime(f) => print_sumset(&f, args, |x| number(*x as i64)),
        AnyFamily::Int(f) => print_sumset(&f, args, |x| number(*x)),
        AnyFamily::Lattice(f) => print_sumset(&f, args, |x| json!(x.to_string())),
    }
}

fn print_sumset<D: AdditiveDomain>(
    family: &SetFamily<D>,
    args: &EnumerateArgs,
    to_json: impl Fn(&D::Elem) -> Value,
) -> Result<Status, Failure> {
    let result = sumset(family, args.kind)?;
    let domain = family.domain().kind();
    let mut out = io::stdout().lock();
    match args.format {
        Format::Text => {
            writeln!(out, "{} sumset over {domain} of {}", args.kind, family.to_literal())?;
            writeln!(out, "elements: {result}")?;
            writeln!(out, "cardinality: {}", result.cardinality())?;
        }
        Format::Jsonl => {
            let record = json!({
                "kind": args.kind,
                "domain": domain.to_string(),
                "family": family.to_literal(),
                "elements": result.elements.iter().map(to_json).collect::<Vec<_>>(),
                "cardinality": result.cardinality(),
            });
            writeln!(out, "{record}")?;
        }
    }
    Ok(Status::Pass)
}

pub fn verify(args: &CheckArgs) -> Result<Status, Failure> {
    let mut out = io::stdout().lock();
    match (args.check, &args.family) {
        (Target::Bound(check), Some(literal)) => {
            let reports = verify_family(args, check, literal)?;
            for r in &reports {
                emit_report(&mut out, r, args.format)?;
            }
            Ok(worst(reports.iter().map(report_status)))
        }
        (Target::Equality, Some(literal)) => {
            let records = classify_family(args, literal)?;
            for c in &records {
                emit_classification(&mut out, c, args.format)?;
            }
            Ok(worst(records.iter().map(class_status)))
        }
        (Target::Bound(check), None) => {
            let outcomes = sweep_outcomes(args, check, RecordPolicy::Notable)?;
            for o in &outcomes {
                write_outcome(&mut out, o, args.format)?;
            }
            Ok(sweep_status(&outcomes))
        }
        (Target::Equality, None) => {
            let classes = classify_range(args)?;
            for c in classes.anomalies() {
                emit_classification(&mut out, c, args.format)?;
            }
            write_counts(&mut out, &classes, args.format)?;
            Ok(counts_status(&classes))
        }
    }
}

pub fn sweep(args: &SweepArgs) -> Result<Status, Failure> {
    let check_args = &args.check;
    if check_args.family.is_some() {
        return Err(input("sweep takes ranges, not a family; use verify for a single family"));
    }
    let path = report_path(args)?;
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    let mut stdout = io::stdout().lock();
    let status = match check_args.check {
        Target::Bound(check) => {
            let policy = match args.records {
                Records::All => RecordPolicy::All,
                Records::Notable => RecordPolicy::Notable,
            };
            let outcomes = sweep_outcomes(check_args, check, policy)?;
            let mut file = BufWriter::new(File::create(&path)?);
            for o in &outcomes {
                write_outcome(&mut file, o, check_args.format)?;
                let s = &o.summary;
                writeln!(
                    stdout,
                    "{} over {}: {} families covered, holds {}, equality {}, violated {}",
                    s.check, s.domain, s.families_covered, s.holds, s.equality, s.violated
                )?;
                writeln!(stdout, "coverage: {}", s.coverage())?;
            }
            file.flush()?;
            sweep_status(&outcomes)
        }
        Target::Equality => {
            let classes = classify_range(check_args)?;
            let mut file = BufWriter::new(File::create(&path)?);
            for c in &classes.records {
                if args.records == Records::All || c.class.is_anomaly() {
                    emit_classification(&mut file, c, check_args.format)?;
                }
            }
            write_counts(&mut file, &classes, check_args.format)?;
            file.flush()?;
            write_counts(&mut stdout, &classes, Format::Text)?;
            counts_status(&classes)
        }
    };
    writeln!(stdout, "report written to {}", path.display())?;
    Ok(status)
}

fn report_path(args: &SweepArgs) -> Result<PathBuf, Failure> {
    if let Some(out) = &args.out {
        return Ok(out.clone());
    }
    let a = &args.check;
    let name = match a.check {
        Target::Bound(check) => check.name(),
        Target::Equality => "equality",
    };
    let tag = if a.domain.zp.is_empty() {
        let (lo, hi) = a.window.unwrap_or(DEFAULT_WINDOW);
        format!("w{lo}_{hi}")
    } else {
        let ps: Vec<String> = a.domain.zp.iter().map(u32::to_string).collect();
        format!("p{}", ps.join("_"))
    };
    let ext = match a.format {
        Format::Text => "txt",
        Format::Jsonl => "jsonl",
    };
    let dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from).unwrap_or_default();
    Ok(dir.join(format!("{name}-{tag}.{ext}")))
}

fn worst(statuses: impl Iterator<Item = Status>) -> Status {
    statuses.max().unwrap_or(Status::Pass)
}

fn report_status(r: &VerificationReport) -> Status {
    if r.is_violation() {
        Status::Violation
    } else {
        Status::Pass
    }
}

fn class_status(c: &Classification) -> Status {
    if c.class.is_anomaly() {
        Status::Violation
    } else {
        Status::Pass
    }
}

fn counts_status(classes: &ClassSweep) -> Status {
    worst(classes.anomalies().map(class_status))
}

fn sweep_status(outcomes: &[SweepOutcome]) -> Status {
    worst(outcomes.iter().map(|o| {
        if o.summary.violated > 0 {
            Status::Violation
        } else if o.summary.cap_hit() {
            Status::CapHit
        } else {
            Status::Pass
        }
    }))
}

/// The summand counts a single-set check runs over: the literal's slot count,
/// or `--n` when the literal names one set.
fn summand_counts(args: &CheckArgs, slots: usize) -> Result<Vec<usize>, Failure> {
    match (slots, args.n) {
        (1, Some((lo, hi))) => Ok((lo..=hi).collect()),
        (_, Some((lo, hi))) if (lo, hi) != (slots, slots) => Err(input(format!(
            "the family has {slots} slots but --n asks for {lo}..{hi}"
        ))),
        _ => Ok(vec![slots]),
    }
}

fn single_set<D: AdditiveDomain>(family: &SetFamily<D>, what: &str) -> Result<Vec<D::Elem>, Failure> {
    let members = family.members();
    if members.iter().any(|m| m != &members[0]) {
        return Err(input(format!("{what} takes copies of one set; write it as {{...}}xN")));
    }
    Ok(members[0].clone())
}

fn verify_family(args: &CheckArgs, check: Check, literal: &str) -> Result<Vec<VerificationReport>, Failure> {
    let family = build_family(&args.domain, literal)?;
    let kind = check.sumset_kind();
    let reports = match (check, family) {
        (Check::ConjectureL | Check::ConjectureC, AnyFamily::Prime(f)) => vec![verify_conjecture(&f, kind)?],
        (Check::TheoremL3, AnyFamily::Prime(f)) => vec![verify_l3_theorem(&f)?],
        (Check::TheoremEvenC, AnyFamily::Prime(f)) => vec![verify_even_c_theorem(&f)?],
        (Check::TheoremOddL, AnyFamily::Prime(f)) => vec![verify_odd_l_theorem(&f)?],
        (Check::Corollary, AnyFamily::Prime(f)) => {
            if f.len() != 1 && f.len() != 3 {
                return Err(input("corollary takes one set, or three copies of it"));
            }
            vec![verify_corollary(*f.domain(), single_set(&f, "corollary")?)?]
        }
        (Check::TorsionfreeL | Check::TorsionfreeC, AnyFamily::Int(f)) => {
            let set = single_set(&f, check.name())?;
            summand_counts(args, f.len())?
                .into_iter()
                .map(|n| verify_torsionfree(Integers, set.clone(), n, kind))
                .collect::<Result<_, _>>()?
        }
        (Check::TorsionfreeL | Check::TorsionfreeC, AnyFamily::Lattice(f)) => {
            let set = single_set(&f, check.name())?;
            summand_counts(args, f.len())?
                .into_iter()
                .map(|n| verify_torsionfree(*f.domain(), set.clone(), n, kind))
                .collect::<Result<_, _>>()?
        }
        (c, _) if c.over_prime_field() => return Err(input(format!("{c} runs over F_p; pass --zp P"))),
        (c, _) => return Err(input(format!("{c} runs over Z^r; pass --int"))),
    };
    Ok(reports)
}

fn equality_kinds(args: &CheckArgs) -> Vec<SumsetKind> {
    if args.kind.is_empty() {
        vec![SumsetKind::Linear, SumsetKind::Cyclic]
    } else {
        args.kind.clone()
    }
}

fn classify_family(args: &CheckArgs, literal: &str) -> Result<Vec<Classification>, Failure> {
    let AnyFamily::Int(family) = build_family(&args.domain, literal)? else {
        return Err(input("equality classification runs over Z; pass --int"));
    };
    let set = single_set(&family, "equality")?;
    let mut out = Vec::new();
    for n in summand_counts(args, family.len())? {
        for &kind in &equality_kinds(args) {
            out.push(classify_equality(&set, n, kind)?);
        }
    }
    Ok(out)
}

fn window(args: &CheckArgs) -> Result<(i64, i64), Failure> {
    if !args.domain.zp.is_empty() {
        return Err(input("this check runs over an integer window, not F_p"));
    }
    if args.domain.dim != 1 {
        return Err(input("range sweeps over Z^r support r = 1 only"));
    }
    Ok(args.window.unwrap_or(DEFAULT_WINDOW))
}

fn classify_range(args: &CheckArgs) -> Result<ClassSweep, Failure> {
    let (lo, hi) = window(args)?;
    let sizes = args.sizes.unwrap_or((3, 5));
    let ns = args.n.unwrap_or((3, 6));
    let kinds = equality_kinds(args);
    let width = hi.abs_diff(lo).saturating_add(1);
    let sets: u128 = (sizes.0..=sizes.1)
        .map(|k| binomial(width, k as u64))
        .fold(0, u128::saturating_add);
    let work = sets
        .saturating_mul((ns.1 - ns.0 + 1) as u128)
        .saturating_mul(kinds.len() as u128);
    if work > args.cap {
        return Err(Failure::Resource(format!(
            "equality classification needs {work} instances, cap is {}",
            args.cap
        )));
    }
    Ok(classify_window((lo, hi), sizes, ns, &kinds)?)
}

fn sweep_outcomes(args: &CheckArgs, check: Check, records: RecordPolicy) -> Result<Vec<SweepOutcome>, Failure> {
    let domains: Vec<SweepDomain> = if check.over_prime_field() {
        if args.domain.int {
            return Err(input(format!("{check} runs over F_p; pass --zp P")));
        }
        if args.domain.zp.is_empty() {
            return Err(input(format!("{check} needs at least one prime: --zp P[,P...]")));
        }
        args.domain
            .zp
            .iter()
            .map(|&p| Ok(SweepDomain::Prime(PrimeModulus::new(p)?)))
            .collect::<Result<_, Failure>>()?
    } else {
        let (lo, hi) = window(args)?;
        vec![SweepDomain::Window { lo, hi }]
    };
    domains
        .into_iter()
        .map(|domain| {
            let mut config = SweepConfig::new(check, domain);
            if let Some(n) = args.n {
                config.n_range = n;
            }
            if let Some(sizes) = args.sizes {
                config.size_range = sizes;
            }
            config.cap = args.cap;
            config.samples = args.samples;
            config.seed = args.seed;
            config.records = records;
            Ok(run_sweep(&config)?)
        })
        .collect()
}

fn write_outcome<W: Write>(out: &mut W, outcome: &SweepOutcome, format: Format) -> io::Result<()> {
    match format {
        Format::Text => write_text(out, outcome),
        Format::Jsonl => write_jsonl(out, outcome),
    }
}

fn emit_report<W: Write>(out: &mut W, report: &VerificationReport, format: Format) -> io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{report}"),
        Format::Jsonl => {
            serde_json::to_writer(&mut *out, report)?;
            writeln!(out)
        }
    }
}

fn emit_classification<W: Write>(out: &mut W, c: &Classification, format: Format) -> io::Result<()> {
    match format {
        Format::Text => {
            let set: Vec<String> = c.set.iter().map(i64::to_string).collect();
            writeln!(
                out,
                "{{{}}} n={} {}: bound {}, actual {}, {}{}",
                set.join(","),
                c.n,
                c.kind,
                c.bound_raw,
                c.actual,
                c.class,
                if c.is_ap { " (progression)" } else { "" }
            )
        }
        Format::Jsonl => {
            serde_json::to_writer(&mut *out, c)?;
            writeln!(out)
        }
    }
}

fn write_counts<W: Write>(out: &mut W, classes: &ClassSweep, format: Format) -> io::Result<()> {
    let anomalies = classes.anomalies().count();
    match format {
        Format::Text => {
            let counts: Vec<String> = classes.counts.iter().map(|(k, v)| format!("{k} {v}")).collect();
            writeln!(
                out,
                "{} instances: {}; anomalies {anomalies}",
                classes.records.len(),
                counts.join(", ")
            )
        }
        Format::Jsonl => {
            let line = json!({
                "instances": classes.records.len(),
                "counts": classes.counts,
                "anomalies": anomalies,
            });
            writeln!(out, "{line}")
        }
    }
}
