//! Command dispatch and report rendering.

use std::fmt::Write as _;

use quiverstab_core::envelope::{envelope_csv, envelope_svg, vector_of_dims, SVG_UNITS_PER_CM};
use quiverstab_core::verify::PairingConfig;
use quiverstab_core::{
    character_exponents, concave_majorant, exhaustive_scan, hn_filtration, is_semistable, is_stable, kempf_filtration,
    max_destabilizing, slope, transform_weights, verify_theorem, Error, Filtration, Guards, HnResult, KempfResult,
    Rational, Representation, Result, ScanReport, StabilityWeights, TheoremCheck,
};

use crate::problem::Problem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Command {
    Slope,
    Semistable,
    Hn,
    Kempf,
    Verify,
    Scan,
    Envelope,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::Slope,
        Command::Semistable,
        Command::Hn,
        Command::Kempf,
        Command::Verify,
        Command::Scan,
        Command::Envelope,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Slope => "slope",
            Command::Semistable => "semistable",
            Command::Hn => "hn",
            Command::Kempf => "kempf",
            Command::Verify => "verify",
            Command::Scan => "scan",
            Command::Envelope => "envelope",
        }
    }
}

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Malformed = 1,
    ResourceLimit = 2,
    AssertionFailure = 3,
    NotApplicable = 4,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn of_error(e: &Error) -> ExitStatus {
        match e {
            Error::Malformed(_) | Error::UndefinedSlope => ExitStatus::Malformed,
            Error::ResourceLimit { .. } => ExitStatus::ResourceLimit,
            Error::InternalContradiction(_) => ExitStatus::AssertionFailure,
            Error::NotUnstable => ExitStatus::NotApplicable,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flags {
    pub guards: Guards,
    pub seed: u64,
    pub pairing_samples: usize,
    pub transform: Option<(i64, i64)>,
    /// Emit the SVG figure alongside the envelope table.
    pub svg: bool,
}

impl Default for Flags {
    fn default() -> Self {
        Flags { guards: Guards::default(), seed: 0, pairing_samples: 1000, transform: None, svg: false }
    }
}

/// What a command produced. `stdout` is always populated, also on failure;
/// `error` holds the message for stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub error: Option<String>,
    pub svg: Option<String>,
    pub status: ExitStatus,
}

struct Ctx<'a> {
    problem: &'a Problem,
    w: StabilityWeights,
    flags: &'a Flags,
    out: String,
    svg: Option<String>,
}

fn fmt_ints(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn fmt_rats(xs: &[Rational]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn header(problem: &Problem, w: &StabilityWeights, flags: &Flags) -> Result<String> {
    let q = &problem.quiver;
    let mut s = String::new();
    let arrows: Vec<String> =
        q.arrows().iter().map(|a| format!("{}: {} -> {}", a.id, q.vertices()[a.source], q.vertices()[a.target])).collect();
    writeln!(s, "# quiver: vertices [{}]; arrows [{}]", q.vertices().join(", "), arrows.join(", ")).unwrap();
    writeln!(s, "# field: {}", problem.field).unwrap();
    writeln!(s, "# dims: {}", problem.dims).unwrap();
    if let Some((a, b)) = flags.transform {
        writeln!(s, "# transform: theta' = {a}*theta + {b}*sigma").unwrap();
    }
    writeln!(s, "# theta: {}", fmt_ints(w.theta())).unwrap();
    writeln!(s, "# sigma: {}", fmt_ints(w.sigma())).unwrap();
    writeln!(s, "# character exponents: {}", fmt_ints(&character_exponents(&problem.dims, w)?.0)).unwrap();
    Ok(s)
}

fn write_chain(out: &mut String, title: &str, f: &Filtration) {
    writeln!(out, "{title} (length {}):", f.len()).unwrap();
    writeln!(out, "  M_0 = 0").unwrap();
    for (i, (s, d)) in f.steps().iter().zip(f.step_dims()).enumerate() {
        writeln!(out, "  M_{} = {s}  dims {d}", i + 1).unwrap();
    }
}

fn write_hn(out: &mut String, hn: &HnResult) {
    write_chain(out, "hn filtration", &hn.filtration);
    writeln!(out, "quotients:").unwrap();
    for (i, (d, mu)) in hn.quotient_dims.iter().zip(&hn.slopes).enumerate() {
        writeln!(out, "  M_{}/M_{}  dims {d}  slope {mu}", i + 1, i).unwrap();
    }
    writeln!(out, "hn type: {}", hn.hn_type()).unwrap();
}

fn write_kempf(out: &mut String, k: &KempfResult) {
    write_chain(out, "kempf filtration", k.filtration.filtration());
    writeln!(out, "weights: {}", fmt_rats(k.filtration.weights())).unwrap();
    writeln!(out, "kempf value: N = {}, D = {}  (value = N/sqrt(D))", k.value.numerator(), k.value.norm_sq()).unwrap();
    writeln!(out, "kempf value (decimal rendering): {:.9}", k.value.to_f64()).unwrap();
}

fn write_rep(out: &mut String, rep: &Representation, indent: &str) {
    let q = rep.quiver();
    writeln!(out, "{indent}dims {}", rep.dims()).unwrap();
    for (a, m) in q.arrows().iter().zip(rep.maps()) {
        writeln!(out, "{indent}{} = {m}", a.id).unwrap();
    }
}

fn write_scan(out: &mut String, r: &ScanReport) {
    writeln!(out, "scan: every representation point over F_{} with dims {}", r.p, r.dims).unwrap();
    writeln!(out, "total representation points: {}", r.total).unwrap();
    writeln!(out, "semistable: {}", r.semistable).unwrap();
    writeln!(out, "unstable: {}", r.unstable).unwrap();
    writeln!(out, "hilbert-mumford disagreements: {}", r.git_disagreements.len()).unwrap();
    writeln!(out, "theorem pass: {}", r.theorem_pass).unwrap();
    writeln!(out, "theorem failures: {}", r.theorem_failures.len()).unwrap();
    if let Some(p) = &r.pairing {
        writeln!(out, "pairing checks: {} samples, {} mismatches", p.samples, p.mismatches).unwrap();
    }
    writeln!(out, "strata (hn type: representation points):").unwrap();
    for (t, n) in &r.strata {
        writeln!(out, "  {t}: {n}").unwrap();
    }
    for rep in &r.git_disagreements {
        writeln!(out, "hilbert-mumford disagreement at:").unwrap();
        write_rep(out, rep, "  ");
    }
    for c in &r.theorem_failures {
        writeln!(out, "counterexample: {}", c.reason).unwrap();
        write_rep(out, &c.rep, "  ");
        if let Some(hn) = &c.hn {
            write_hn(out, hn);
        }
        if let Some(k) = &c.kempf {
            write_kempf(out, k);
        }
    }
}

impl Ctx<'_> {
    fn run(&mut self, cmd: Command) -> Result<(ExitStatus, Option<String>)> {
        let g = &self.flags.guards;
        match cmd {
            Command::Slope => {
                let rep = self.problem.require_rep()?;
                writeln!(self.out, "slope: {}", slope(rep.dims(), &self.w)?).unwrap();
            }
            Command::Semistable => {
                let rep = self.problem.require_rep()?;
                let ss = is_semistable(rep, &self.w, g)?;
                writeln!(self.out, "semistable: {ss}").unwrap();
                if ss {
                    writeln!(self.out, "stable: {}", is_stable(rep, &self.w, g)?).unwrap();
                } else {
                    let sub = max_destabilizing(rep, &self.w, g)?;
                    let d = sub.dims();
                    writeln!(self.out, "witness: {sub}  dims {d}  slope {}", slope(&d, &self.w)?).unwrap();
                }
            }
            Command::Hn => {
                let hn = hn_filtration(self.problem.require_rep()?, &self.w, g)?;
                write_hn(&mut self.out, &hn);
            }
            Command::Kempf => {
                let k = kempf_filtration(self.problem.require_rep()?, &self.w, g)?;
                write_kempf(&mut self.out, &k);
            }
            Command::Verify => match verify_theorem(self.problem.require_rep()?, &self.w, g)? {
                TheoremCheck::Pass { hn, kempf } => {
                    writeln!(self.out, "PASS: Kempf filtration = HN filtration").unwrap();
                    write_hn(&mut self.out, &hn);
                    write_kempf(&mut self.out, &kempf);
                }
                TheoremCheck::Fail { hn, kempf, reason } => {
                    writeln!(self.out, "FAIL: {reason}").unwrap();
                    if let Some(hn) = hn {
                        write_hn(&mut self.out, &hn);
                    }
                    if let Some(k) = kempf {
                        write_kempf(&mut self.out, &k);
                    }
                    return Ok((ExitStatus::AssertionFailure, Some(reason)));
                }
                TheoremCheck::NotApplicable => {
                    let msg = Error::NotUnstable.to_string();
                    writeln!(self.out, "NOT APPLICABLE: {msg}").unwrap();
                    return Ok((ExitStatus::NotApplicable, Some(msg)));
                }
            },
            Command::Scan => {
                let p = self.problem.field.characteristic();
                if p == 0 {
                    return Err(Error::Malformed("field: scan needs a prime field".into()));
                }
                let cfg = PairingConfig { samples: self.flags.pairing_samples, seed: self.flags.seed };
                let report =
                    exhaustive_scan(self.problem.quiver.clone(), self.problem.dims.clone(), p, &self.w, g, Some(cfg))?;
                write_scan(&mut self.out, &report);
                if !report.is_clean() {
                    return Ok((ExitStatus::AssertionFailure, Some("scan found violations".into())));
                }
            }
            Command::Envelope => {
                let rep = self.problem.require_rep()?;
                let hn = hn_filtration(rep, &self.w, g)?;
                let data = vector_of_dims(rep.dims(), &hn.quotient_dims, &self.w)?;
                let env = concave_majorant(&data);
                self.out.push_str(&envelope_csv(&data, &env));
                if self.flags.svg {
                    self.svg = Some(envelope_svg(&data, &env, SVG_UNITS_PER_CM));
                }
            }
        }
        Ok((ExitStatus::Success, None))
    }
}

/// Runs one command on a validated problem.
pub fn dispatch(cmd: Command, problem: &Problem, flags: &Flags) -> Outcome {
    let fail = |stdout: String, e: Error| Outcome {
        stdout,
        error: Some(e.to_string()),
        svg: None,
        status: ExitStatus::of_error(&e),
    };
    let w = match flags.transform {
        Some((a, b)) => match transform_weights(&problem.weights, a, b) {
            Ok(w) => w,
            Err(e) => return fail(String::new(), e),
        },
        None => problem.weights.clone(),
    };
    let out = match header(problem, &w, flags) {
        Ok(h) => h,
        Err(e) => return fail(String::new(), e),
    };
    let mut ctx = Ctx { problem, w, flags, out, svg: None };
    match ctx.run(cmd) {
        Ok((status, error)) => Outcome { stdout: ctx.out, error, svg: ctx.svg, status },
        Err(e) => fail(ctx.out, e),
    }
}
