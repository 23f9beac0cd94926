//! Brute-force verification that the Kempf filtration (argmax of the Kempf
//! function over chains) and the Harder-Narasimhan filtration (recursive
//! maximal destabilizing subrepresentations) coincide, over every point of
//! a small representation space.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kempf::{
    kempf_filtration_in, hm_semistable_in, numerical_mu_filtration, numerical_mu_weights, one_ps_from_filtration,
    KempfResult,
};
use crate::linalg::{int, rat, Field, Matrix, Rational};
use crate::quiver::{sigma_of, slope, theta_of, DimVector, Quiver, Representation, StabilityWeights, WeightedFiltration};
use crate::stability::{hn_filtration, semistable_in, HnResult, HnType, SubrepLattice};
use crate::Guards;

/// Outcome of comparing the two filtrations of one representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremCheck {
    Pass { hn: HnResult, kempf: KempfResult },
    Fail { hn: Option<HnResult>, kempf: Option<KempfResult>, reason: String },
    /// The representation is semistable; there is no Kempf filtration.
    NotApplicable,
}

impl TheoremCheck {
    pub fn is_pass(&self) -> bool {
        matches!(self, TheoremCheck::Pass { .. })
    }
}

fn contradiction<T>(r: Result<T>) -> Result<std::result::Result<T, String>> {
    match r {
        Ok(x) => Ok(Ok(x)),
        Err(Error::InternalContradiction(msg)) => Ok(Err(msg)),
        Err(e) => Err(e),
    }
}

/// Computes both filtrations independently and compares them vertex by
/// vertex. Also checks that the Kempf weights are `Θ(M) - σ(M)μ(M^i)`.
pub fn verify_theorem(rep: &Representation, w: &StabilityWeights, guards: &Guards) -> Result<TheoremCheck> {
    let lattice = SubrepLattice::new(rep, guards)?;
    verify_in(&lattice, rep, w, guards)
}

fn verify_in(lattice: &SubrepLattice, rep: &Representation, w: &StabilityWeights, guards: &Guards) -> Result<TheoremCheck> {
    if semistable_in(lattice, rep, w)? {
        return Ok(TheoremCheck::NotApplicable);
    }
    let hn = contradiction(hn_filtration(rep, w, guards))?;
    let kempf = contradiction(kempf_filtration_in(lattice, rep, w))?;
    let (hn, kempf) = match (hn, kempf) {
        (Ok(h), Ok(k)) => (h, k),
        (h, k) => {
            let reason = [h.as_ref().err(), k.as_ref().err()]
                .into_iter()
                .flatten()
                .cloned()
                .collect::<Vec<_>>()
                .join("; ");
            return Ok(TheoremCheck::Fail { hn: h.ok(), kempf: k.ok(), reason });
        }
    };
    if hn.filtration != *kempf.filtration.filtration() {
        return Ok(TheoremCheck::Fail {
            reason: "Kempf and HN chains differ".into(),
            hn: Some(hn),
            kempf: Some(kempf),
        });
    }
    let theta_m = int(theta_of(rep.dims(), w)?);
    let sigma_m = int(sigma_of(rep.dims(), w)?);
    let predicted: Vec<Rational> = hn.slopes.iter().map(|mu| &theta_m - &sigma_m * mu).collect();
    if predicted != kempf.filtration.weights() {
        return Ok(TheoremCheck::Fail {
            reason: format!(
                "Kempf weights {:?} differ from Θ(M) - σ(M)μ(M^i) = {:?}",
                kempf.filtration.weights().iter().map(ToString::to_string).collect::<Vec<_>>(),
                predicted.iter().map(ToString::to_string).collect::<Vec<_>>()
            ),
            hn: Some(hn),
            kempf: Some(kempf),
        });
    }
    Ok(TheoremCheck::Pass { hn, kempf })
}

pub fn hn_type(rep: &Representation, w: &StabilityWeights, guards: &Guards) -> Result<HnType> {
    Ok(hn_filtration(rep, w, guards)?.hn_type())
}

/// Every representation of a quiver with fixed dimension vector over `F_p`,
/// indexed by `0..count`. Index digits (base p) fill the arrows in order,
/// each matrix row-major, the last entry varying fastest.
#[derive(Clone, Debug)]
pub struct RepresentationSpace {
    quiver: Arc<Quiver>,
    field: Field,
    dims: DimVector,
    entries: usize,
    count: u128,
}

impl RepresentationSpace {
    pub fn new(quiver: Arc<Quiver>, dims: DimVector, p: u64, guard: u128) -> Result<RepresentationSpace> {
        let field = Field::prime(p)?;
        if dims.len() != quiver.vertex_count() {
            return Err(crate::error::malformed("dimension vector does not match quiver"));
        }
        let entries: usize = quiver.arrows().iter().map(|a| dims.0[a.source] * dims.0[a.target]).sum();
        let count = u32::try_from(entries).ok().and_then(|e| (p as u128).checked_pow(e)).unwrap_or(u128::MAX);
        if count > guard {
            return Err(Error::ResourceLimit { what: format!("representations over F_{p}"), count, limit: guard });
        }
        Ok(RepresentationSpace { quiver, field, dims, entries, count })
    }

    pub fn count(&self) -> u128 {
        self.count
    }

    pub fn get(&self, index: u128) -> Representation {
        let p = self.field.characteristic() as u128;
        let mut digits = vec![0i64; self.entries];
        let mut rest = index;
        for d in digits.iter_mut().rev() {
            *d = (rest % p) as i64;
            rest /= p;
        }
        let mut offset = 0;
        let maps = self
            .quiver
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = (self.dims.0[a.target], self.dims.0[a.source]);
                let m = Matrix::from_i64(self.field, r, c, &digits[offset..offset + r * c]).expect("sized above");
                offset += r * c;
                m
            })
            .collect();
        Representation::new(self.quiver.clone(), self.field, self.dims.clone(), maps).expect("shapes match")
    }
}

/// A representation on which some check failed, with whatever both sides
/// produced.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub rep: Representation,
    pub hn: Option<HnResult>,
    pub kempf: Option<KempfResult>,
    pub reason: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairingConfig {
    pub samples: usize,
    pub seed: u64,
}

impl Default for PairingConfig {
    fn default() -> Self {
        PairingConfig { samples: 1000, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingStats {
    pub samples: usize,
    pub mismatches: usize,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub quiver: Arc<Quiver>,
    pub dims: DimVector,
    pub p: u64,
    pub weights: StabilityWeights,
    pub total: u64,
    pub semistable: u64,
    pub unstable: u64,
    /// Points where the Hilbert-Mumford and slope verdicts disagree.
    pub git_disagreements: Vec<Representation>,
    pub theorem_pass: u64,
    pub theorem_failures: Vec<Counterexample>,
    pub pairing: Option<PairingStats>,
    /// HN type to number of representation points.
    pub strata: BTreeMap<HnType, u64>,
}

impl ScanReport {
    pub fn is_clean(&self) -> bool {
        self.git_disagreements.is_empty()
            && self.theorem_failures.is_empty()
            && self.pairing.as_ref().is_none_or(|p| p.mismatches == 0)
    }
}

struct PointOutcome {
    rep: Representation,
    semistable: bool,
    hm_agrees: bool,
    check: TheoremCheck,
    hn_type: HnType,
}

fn scan_point(rep: Representation, w: &StabilityWeights, guards: &Guards) -> Result<PointOutcome> {
    let lattice = SubrepLattice::new(&rep, guards)?;
    let semistable = semistable_in(&lattice, &rep, w)?;
    let hm = hm_semistable_in(&lattice, &rep, w)?;
    let check = verify_in(&lattice, &rep, w, guards)?;
    let hn_type = match &check {
        TheoremCheck::NotApplicable => HnType(vec![(rep.dims().clone(), slope(rep.dims(), w)?)]),
        TheoremCheck::Pass { hn, .. } => hn.hn_type(),
        TheoremCheck::Fail { hn: Some(hn), .. } => hn.hn_type(),
        TheoremCheck::Fail { hn: None, .. } => HnType(Vec::new()),
    };
    Ok(PointOutcome { rep, semistable, hm_agrees: semistable == hm, check, hn_type })
}

/// Runs every check on every point of the representation space.
pub fn exhaustive_scan(
    quiver: Arc<Quiver>,
    dims: DimVector,
    p: u64,
    w: &StabilityWeights,
    guards: &Guards,
    pairing: Option<PairingConfig>,
) -> Result<ScanReport> {
    if dims.is_zero() {
        return Err(Error::UndefinedSlope);
    }
    let space = RepresentationSpace::new(quiver.clone(), dims.clone(), p, guards.reps)?;
    let outcomes: Vec<PointOutcome> = (0..space.count() as u64)
        .into_par_iter()
        .map(|i| scan_point(space.get(i as u128), w, guards))
        .collect::<Result<_>>()?;

    let mut report = ScanReport {
        quiver,
        dims,
        p,
        weights: w.clone(),
        total: 0,
        semistable: 0,
        unstable: 0,
        git_disagreements: Vec::new(),
        theorem_pass: 0,
        theorem_failures: Vec::new(),
        pairing: None,
        strata: BTreeMap::new(),
    };
    for o in outcomes {
        report.total += 1;
        if o.semistable {
            report.semistable += 1;
        } else {
            report.unstable += 1;
        }
        if !o.hm_agrees {
            report.git_disagreements.push(o.rep.clone());
        }
        *report.strata.entry(o.hn_type).or_insert(0) += 1;
        match o.check {
            TheoremCheck::Pass { .. } => report.theorem_pass += 1,
            TheoremCheck::NotApplicable => {}
            TheoremCheck::Fail { hn, kempf, reason } => {
                report.theorem_failures.push(Counterexample { rep: o.rep, hn, kempf, reason })
            }
        }
    }
    if let Some(cfg) = pairing {
        report.pairing = Some(random_pairing_checks(&space, w, guards, cfg)?);
    }
    Ok(report)
}

/// A random strictly increasing list of `n` rationals with small
/// denominators.
pub fn random_weights<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    loop {
        let mut g: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-24..=24), rng.gen_range(1..=6))).collect();
        g.sort();
        g.dedup();
        if g.len() == n {
            return g;
        }
    }
}

/// A random chain of proper nonzero subrepresentations (as lattice indices).
pub fn random_chain<R: Rng>(rng: &mut R, lattice: &SubrepLattice) -> Vec<usize> {
    let mut chain = Vec::new();
    let proper = lattice.proper_indices();
    if proper.is_empty() || rng.gen_bool(0.2) {
        return chain;
    }
    chain.push(proper[rng.gen_range(0..proper.len())]);
    loop {
        let above = lattice.above(*chain.last().unwrap());
        if above.is_empty() || rng.gen_bool(0.3) {
            return chain;
        }
        chain.push(above[rng.gen_range(0..above.len())]);
    }
}

/// Compares the per-vertex and per-filtration forms of the pairing on random
/// (representation, chain, weights) samples.
pub fn random_pairing_checks(
    space: &RepresentationSpace,
    w: &StabilityWeights,
    guards: &Guards,
    cfg: PairingConfig,
) -> Result<PairingStats> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut mismatches = 0;
    for _ in 0..cfg.samples {
        let rep = space.get(rng.gen_range(0..space.count()));
        let lattice = SubrepLattice::new(&rep, guards)?;
        let chain = random_chain(&mut rng, &lattice);
        let f = lattice.filtration(&rep, &chain);
        let weights = random_weights(&mut rng, f.len());
        let wf = WeightedFiltration::new(f, weights)?;
        let by_vertex = numerical_mu_weights(&rep, &one_ps_from_filtration(&wf), w)?;
        let by_filtration = numerical_mu_filtration(&rep, &wf, w)?;
        if by_vertex != by_filtration {
            mismatches += 1;
        }
    }
    Ok(PairingStats { samples: cfg.samples, mismatches })
}
