//! (Θ,σ)-semistability, the maximal destabilizing subrepresentation and the
//! Harder-Narasimhan filtration, all by exhaustive search over the lattice
//! of subrepresentations defined over `F_p`.

use std::fmt;
use std::ops::ControlFlow;

use crate::error::{malformed, Error, Result};
use crate::linalg::{enumerate_subspaces, Rational, Subspace};
use crate::quiver::{
    restrict, sigma_of, slope, theta_of, DimVector, Filtration, Quotient, Representation, StabilityWeights,
    Subrepresentation,
};
use crate::Guards;

/// Iteration order over the subrepresentation lattice. Results of every
/// search are independent of it; `Reversed` exists to check that.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EnumerationOrder {
    #[default]
    Forward,
    Reversed,
}

/// All subrepresentations of `rep`, in product order of the per-vertex
/// subspace enumerations (first vertex most significant).
pub fn enumerate_subreps(rep: &Representation, guards: &Guards) -> Result<Vec<Subrepresentation>> {
    let p = rep.prime()?;
    let per_vertex: Vec<Vec<Subspace>> = rep
        .dims()
        .0
        .iter()
        .map(|&n| enumerate_subspaces(n, p, guards.subspaces))
        .collect::<Result<_>>()?;

    // arrows checked once both endpoints are assigned
    let n = per_vertex.len();
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, a) in rep.quiver().arrows().iter().enumerate() {
        checks[a.source.max(a.target)].push(k);
    }

    let mut out = Vec::new();
    let mut chosen: Vec<Subspace> = Vec::with_capacity(n);
    search(rep, &per_vertex, &checks, &mut chosen, &mut out)?;
    Ok(out)
}

fn search(
    rep: &Representation,
    per_vertex: &[Vec<Subspace>],
    checks: &[Vec<usize>],
    chosen: &mut Vec<Subspace>,
    out: &mut Vec<Subrepresentation>,
) -> Result<()> {
    let v = chosen.len();
    if v == per_vertex.len() {
        out.push(Subrepresentation::new(chosen.clone()));
        return Ok(());
    }
    'candidates: for s in &per_vertex[v] {
        chosen.push(s.clone());
        for &k in &checks[v] {
            let a = &rep.quiver().arrows()[k];
            let image = chosen[a.source].image(&rep.maps()[k])?;
            if !image.is_subspace_of(&chosen[a.target])? {
                chosen.pop();
                continue 'candidates;
            }
        }
        search(rep, per_vertex, checks, chosen, out)?;
        chosen.pop();
    }
    Ok(())
}

/// The subrepresentation lattice of a representation with its strict
/// containment relation, shared by the semistability, HN and Kempf searches.
#[derive(Clone, Debug)]
pub struct SubrepLattice {
    subreps: Vec<Subrepresentation>,
    dims: Vec<DimVector>,
    /// Indices of proper nonzero subreps.
    proper: Vec<usize>,
    /// For each index, the proper nonzero subreps strictly containing it.
    above: Vec<Vec<usize>>,
}

impl SubrepLattice {
    pub fn new(rep: &Representation, guards: &Guards) -> Result<SubrepLattice> {
        let subreps = enumerate_subreps(rep, guards)?;
        let dims: Vec<DimVector> = subreps.iter().map(Subrepresentation::dims).collect();
        let proper: Vec<usize> =
            (0..subreps.len()).filter(|&i| !subreps[i].is_zero() && !subreps[i].is_full()).collect();
        let mut above = vec![Vec::new(); subreps.len()];
        for &i in &proper {
            for &j in &proper {
                if i != j && dims[i].total() < dims[j].total() && subreps[i].leq(&subreps[j])? {
                    above[i].push(j);
                }
            }
        }
        Ok(SubrepLattice { subreps, dims, proper, above })
    }

    pub fn subreps(&self) -> &[Subrepresentation] {
        &self.subreps
    }

    pub fn dims(&self, i: usize) -> &DimVector {
        &self.dims[i]
    }

    pub fn proper_indices(&self) -> &[usize] {
        &self.proper
    }

    /// Proper nonzero subreps strictly containing subrep `i`.
    pub fn above(&self, i: usize) -> &[usize] {
        &self.above[i]
    }

    pub fn len(&self) -> usize {
        self.subreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subreps.is_empty()
    }

    pub fn indices(&self, order: EnumerationOrder) -> Box<dyn Iterator<Item = usize> + '_> {
        match order {
            EnumerationOrder::Forward => Box::new(0..self.subreps.len()),
            EnumerationOrder::Reversed => Box::new((0..self.subreps.len()).rev()),
        }
    }

    /// Visits every strict chain `S_1 ⊊ ... ⊊ S_t` of proper nonzero
    /// subrepresentations (as lattice indices), starting with the empty
    /// chain. The visitor may stop the walk early.
    pub fn for_each_chain<F>(&self, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut chain = Vec::new();
        visit(&chain)?;
        for &i in &self.proper {
            chain.push(i);
            self.extend_chain(&mut chain, &mut visit)?;
            chain.pop();
        }
        ControlFlow::Continue(())
    }

    fn extend_chain<F>(&self, chain: &mut Vec<usize>, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        visit(chain)?;
        let last = *chain.last().expect("non-empty chain");
        for &j in &self.above[last] {
            chain.push(j);
            self.extend_chain(chain, visit)?;
            chain.pop();
        }
        ControlFlow::Continue(())
    }

    /// The filtration `S_1 ⊊ ... ⊊ S_t ⊊ M` for a chain of indices.
    pub fn filtration(&self, rep: &Representation, chain: &[usize]) -> Filtration {
        let mut steps: Vec<Subrepresentation> = chain.iter().map(|&i| self.subreps[i].clone()).collect();
        steps.push(Subrepresentation::full(rep));
        Filtration::from_steps_unchecked(steps)
    }

    /// The unique nonzero subrepresentation of maximal slope and, among
    /// those, maximal σ.
    pub fn max_destabilizing(&self, w: &StabilityWeights, order: EnumerationOrder) -> Result<usize> {
        let mut best: Option<(Rational, i64)> = None;
        let mut winners: Vec<usize> = Vec::new();
        for i in self.indices(order) {
            if self.dims[i].is_zero() {
                continue;
            }
            let key = (slope(&self.dims[i], w)?, sigma_of(&self.dims[i], w)?);
            match &best {
                Some(b) if key < *b => {}
                Some(b) if key == *b => winners.push(i),
                _ => {
                    best = Some(key);
                    winners.clear();
                    winners.push(i);
                }
            }
        }
        match winners.as_slice() {
            [i] => Ok(*i),
            [] => Err(Error::UndefinedSlope),
            many => Err(Error::InternalContradiction(format!(
                "{} distinct subrepresentations share maximal slope and total dimension: {}",
                many.len(),
                many.iter().map(|&i| self.subreps[i].to_string()).collect::<Vec<_>>().join(", ")
            ))),
        }
    }
}

/// True iff no proper nonzero subrepresentation has slope `> μ(M)`.
pub fn is_semistable(rep: &Representation, w: &StabilityWeights, guards: &Guards) -> Result<bool> {
    let lattice = SubrepLattice::new(rep, guards)?;
    semistable_in(&lattice, rep, w)
}

pub(crate) fn semistable_in(lattice: &SubrepLattice, rep: &Representation, w: &StabilityWeights) -> Result<bool> {
    let mu = slope(rep.dims(), w)?;
    for &i in lattice.proper_indices() {
        if slope(lattice.dims(i), w)? > mu {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every proper nonzero subrepresentation has slope `< μ(M)`.
pub fn is_stable(rep: &Representation, w: &StabilityWeights, guards: &Guards) -> Result<bool> {
    let mu = slope(rep.dims(), w)?;
    let lattice = SubrepLattice::new(rep, guards)?;
    for &i in lattice.proper_indices() {
        if slope(lattice.dims(i), w)? >= mu {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn max_destabilizing(rep: &Representation, w: &StabilityWeights, guards: &Guards) -> Result<Subrepresentation> {
    max_destabilizing_ordered(rep, w, guards, EnumerationOrder::Forward)
}

pub fn max_destabilizing_ordered(
    rep: &Representation,
    w: &StabilityWeights,
    guards: &Guards,
    order: EnumerationOrder,
) -> Result<Subrepresentation> {
    if rep.is_zero() {
        return Err(Error::UndefinedSlope);
    }
    let lattice = SubrepLattice::new(rep, guards)?;
    let i = lattice.max_destabilizing(w, order)?;
    Ok(lattice.subreps()[i].clone())
}

/// The Harder-Narasimhan filtration with its quotient data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnResult {
    pub filtration: Filtration,
    /// `μ(M^1) > ... > μ(M^{t+1})`.
    pub slopes: Vec<Rational>,
    pub quotient_dims: Vec<DimVector>,
}

impl HnResult {
    pub fn hn_type(&self) -> HnType {
        HnType(self.quotient_dims.iter().cloned().zip(self.slopes.iter().cloned()).collect())
    }

    pub fn is_semistable(&self) -> bool {
        self.filtration.len() == 1
    }
}

/// The numerical invariants of an HN filtration: quotient dimension vectors
/// with their slopes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HnType(pub Vec<(DimVector, Rational)>);

impl fmt::Display for HnType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (d, mu)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}@{mu}")?;
        }
        write!(f, "]")
    }
}

pub fn hn_filtration(rep: &Representation, w: &StabilityWeights, guards: &Guards) -> Result<HnResult> {
    hn_filtration_ordered(rep, w, guards, EnumerationOrder::Forward)
}

/// Builds the HN filtration by repeatedly taking the maximal destabilizing
/// subrepresentation of `M/M_i` and pulling it back to `M`. Every quotient
/// `M^i` is re-checked for semistability.
pub fn hn_filtration_ordered(
    rep: &Representation,
    w: &StabilityWeights,
    guards: &Guards,
    order: EnumerationOrder,
) -> Result<HnResult> {
    if rep.is_zero() {
        return Err(Error::UndefinedSlope);
    }
    let mut steps: Vec<Subrepresentation> = Vec::new();
    let mut slopes: Vec<Rational> = Vec::new();
    let mut quotient_dims = Vec::new();
    let mut current = Subrepresentation::zero(rep);
    loop {
        let quotient = Quotient::new(rep, &current)?;
        let rest = quotient.representation();
        if rest.is_zero() {
            break;
        }
        let lattice = SubrepLattice::new(rest, guards)?;
        let top = lattice.max_destabilizing(w, order)?;
        let layer = &lattice.subreps()[top];
        let layer_rep = restrict(rest, layer)?;
        if !is_semistable(&layer_rep, w, guards)? {
            return Err(Error::InternalContradiction(format!(
                "HN quotient {} with dimension {} is not semistable",
                steps.len() + 1,
                layer_rep.dims()
            )));
        }
        let mu = slope(lattice.dims(top), w)?;
        if slopes.last().is_some_and(|prev| *prev <= mu) {
            return Err(Error::InternalContradiction(format!(
                "HN slopes fail to decrease: {} then {mu}",
                slopes.last().unwrap()
            )));
        }
        let next = quotient.pull_back(layer)?;
        slopes.push(mu);
        quotient_dims.push(lattice.dims(top).clone());
        steps.push(next.clone());
        current = next;
    }
    let filtration = Filtration::new(rep, steps)?;
    Ok(HnResult { filtration, slopes, quotient_dims })
}

/// King's θ: `Θ(M) σ(M') - σ(M) Θ(M')`.
pub fn king_theta(m: &DimVector, s: &DimVector, w: &StabilityWeights) -> Result<i64> {
    Ok(theta_of(m, w)? * sigma_of(s, w)? - sigma_of(m, w)? * theta_of(s, w)?)
}

/// `Θ' = aΘ + bσ` with σ unchanged; slopes transform as `μ' = aμ + b`.
pub fn transform_weights(w: &StabilityWeights, a: i64, b: i64) -> Result<StabilityWeights> {
    if a <= 0 {
        return Err(malformed(format!("transform scale a = {a} must be positive")));
    }
    let theta = w.theta().iter().zip(w.sigma()).map(|(t, s)| a * t + b * s).collect();
    StabilityWeights::new(theta, w.sigma().to_vec())
}
