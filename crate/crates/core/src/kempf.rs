//! The GIT side: character exponents, one-parameter subgroup weights, the
//! Hilbert-Mumford pairing in its per-vertex and per-filtration forms, the
//! Kempf function, and the search for the Kempf filtration.
//!
//! The search runs over chains of subrepresentations only. For a fixed
//! chain the Kempf function is `μ_v` on the ordered cone, whose maximum is
//! attained at the envelope weights `Γ_v`, so no search over weights is
//! needed.

use std::ops::ControlFlow;

use num_traits::Zero;

use crate::envelope::{coarsen, concave_majorant, vector_of_dims, DirectionalValue, KempfValue};
use crate::error::{malformed, Error, Result};
use crate::linalg::{int, Rational};
use crate::quiver::{
    sigma_of, theta_of, DimVector, Filtration, Representation, StabilityWeights, WeightedFiltration,
};
use crate::stability::{semistable_in, SubrepLattice};
use crate::Guards;

/// Exponents `e_v = Θ(d)σ_v - σ(d)Θ_v` of the character `χ_(Θ,σ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterExponents(pub Vec<i64>);

pub fn character_exponents(d: &DimVector, w: &StabilityWeights) -> Result<CharacterExponents> {
    let theta_d = theta_of(d, w)?;
    let sigma_d = sigma_of(d, w)?;
    let e: Vec<i64> = w.theta().iter().zip(w.sigma()).map(|(t, s)| theta_d * s - sigma_d * t).collect();
    let pairing: i64 = e.iter().zip(&d.0).map(|(e, &x)| e * x as i64).sum();
    if pairing != 0 {
        return Err(Error::InternalContradiction(format!(
            "character exponents {e:?} pair to {pairing} with {d}, expected 0"
        )));
    }
    Ok(CharacterExponents(e))
}

/// Weight-space multiplicities of a diagonal one-parameter subgroup: for
/// each vertex, the weights that occur and the dimension of each weight
/// space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePsWeights {
    pub per_vertex: Vec<Vec<(Rational, usize)>>,
}

/// The one-parameter subgroup acting with weight `Γ_i` on the `i`-th layer
/// `M_{v,i}/M_{v,i-1}` at every vertex. Layers of dimension zero are omitted.
pub fn one_ps_from_filtration(f: &WeightedFiltration) -> OnePsWeights {
    let quotients = f.filtration().quotient_dims();
    let n = quotients.first().map_or(0, DimVector::len);
    let mut per_vertex = vec![Vec::new(); n];
    for (q, g) in quotients.iter().zip(f.weights()) {
        for (v, &m) in q.0.iter().enumerate() {
            if m > 0 {
                per_vertex[v].push((g.clone(), m));
            }
        }
    }
    OnePsWeights { per_vertex }
}

/// `Σ_v e_v Σ_n n·dim M_v^n`, the pairing in per-vertex weight form.
pub fn numerical_mu_weights(rep: &Representation, ops: &OnePsWeights, w: &StabilityWeights) -> Result<Rational> {
    let d = rep.dims();
    if ops.per_vertex.len() != d.len() {
        return Err(malformed(format!("weights given for {} vertices, expected {}", ops.per_vertex.len(), d.len())));
    }
    for (v, layers) in ops.per_vertex.iter().enumerate() {
        let total: usize = layers.iter().map(|(_, m)| m).sum();
        if total != d.0[v] {
            return Err(malformed(format!(
                "weight multiplicities at vertex {:?} sum to {total}, expected {}",
                rep.quiver().vertices()[v],
                d.0[v]
            )));
        }
    }
    let e = character_exponents(d, w)?;
    Ok(ops
        .per_vertex
        .iter()
        .zip(&e.0)
        .map(|(layers, &ev)| int(ev) * layers.iter().map(|(g, m)| g * int(*m as i64)).sum::<Rational>())
        .sum())
}

/// `Σ_i Γ_i [Θ(M)σ(M^i) - σ(M)Θ(M^i)]` from dimension data. `gamma` may be
/// merely non-decreasing.
pub fn numerical_mu_dims(
    total: &DimVector,
    quotients: &[DimVector],
    gamma: &[Rational],
    w: &StabilityWeights,
) -> Result<Rational> {
    if quotients.len() != gamma.len() {
        return Err(malformed(format!("{} weights for {} quotients", gamma.len(), quotients.len())));
    }
    let theta_m = theta_of(total, w)?;
    let sigma_m = sigma_of(total, w)?;
    let mut acc = Rational::zero();
    for (q, g) in quotients.iter().zip(gamma) {
        let c = theta_m * sigma_of(q, w)? - sigma_m * theta_of(q, w)?;
        acc += g * int(c);
    }
    Ok(acc)
}

/// The pairing in per-filtration form.
pub fn numerical_mu_filtration(rep: &Representation, f: &WeightedFiltration, w: &StabilityWeights) -> Result<Rational> {
    numerical_mu_dims(rep.dims(), &f.filtration().quotient_dims(), f.weights(), w)
}

/// `Σ σ(M^i) Γ_i²`, the squared length of the one-parameter subgroup.
pub fn length_sq(quotients: &[DimVector], gamma: &[Rational], w: &StabilityWeights) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (q, g) in quotients.iter().zip(gamma) {
        acc += int(sigma_of(q, w)?) * g * g;
    }
    Ok(acc)
}

fn kempf_value_dims(
    total: &DimVector,
    quotients: &[DimVector],
    gamma: &[Rational],
    w: &StabilityWeights,
) -> Result<DirectionalValue> {
    let n = numerical_mu_dims(total, quotients, gamma, w)?;
    let d = length_sq(quotients, gamma, w)?;
    Ok(DirectionalValue::from_parts(n, d))
}

/// The Kempf function: pairing over length.
pub fn kempf_value(rep: &Representation, f: &WeightedFiltration, w: &StabilityWeights) -> Result<DirectionalValue> {
    kempf_value_dims(rep.dims(), &f.filtration().quotient_dims(), f.weights(), w)
}

fn quotient_dims_of_chain(lattice: &SubrepLattice, total: &DimVector, chain: &[usize]) -> Vec<DimVector> {
    let mut prev = DimVector::zero(total.len());
    let mut out = Vec::with_capacity(chain.len() + 1);
    for d in chain.iter().map(|&i| lattice.dims(i)).chain(std::iter::once(total)) {
        out.push(d.checked_sub(&prev).expect("chain is increasing"));
        prev = d.clone();
    }
    out
}

/// Hilbert-Mumford semistability: no chain of subrepresentations admits
/// ordered weights with positive pairing. Per chain it suffices to test the
/// envelope weights, where the supremum over the cone is attained.
pub fn hm_semistable(rep: &Representation, w: &StabilityWeights, guards: &Guards) -> Result<bool> {
    let lattice = SubrepLattice::new(rep, guards)?;
    hm_semistable_in(&lattice, rep, w)
}

pub(crate) fn hm_semistable_in(lattice: &SubrepLattice, rep: &Representation, w: &StabilityWeights) -> Result<bool> {
    let total = rep.dims();
    let mut failure: Option<Error> = None;
    let mut unstable = false;
    let _ = lattice.for_each_chain(|chain| {
        let quotients = quotient_dims_of_chain(lattice, total, chain);
        let outcome = vector_of_dims(total, &quotients, w)
            .map(|data| concave_majorant(&data).gamma)
            .and_then(|gamma| numerical_mu_dims(total, &quotients, &gamma, w));
        match outcome {
            Ok(mu) if mu > Rational::zero() => {
                unstable = true;
                ControlFlow::Break(())
            }
            Ok(_) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(!unstable),
    }
}

/// The Kempf filtration with its maximal Kempf value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KempfResult {
    pub filtration: WeightedFiltration,
    pub value: KempfValue,
}

/// Maximizes the Kempf function over all chains with envelope-optimal
/// weights and asserts that the coarsened maximizer is unique.
pub fn kempf_filtration(rep: &Representation, w: &StabilityWeights, guards: &Guards) -> Result<KempfResult> {
    let lattice = SubrepLattice::new(rep, guards)?;
    kempf_filtration_in(&lattice, rep, w)
}

pub(crate) fn kempf_filtration_in(
    lattice: &SubrepLattice,
    rep: &Representation,
    w: &StabilityWeights,
) -> Result<KempfResult> {
    if semistable_in(lattice, rep, w)? {
        return Err(Error::NotUnstable);
    }
    let total = rep.dims();
    let full = usize::MAX;
    let mut best: Option<KempfValue> = None;
    // coarsened maximizers as (lattice indices with `full` for M, weights)
    let mut winners: Vec<(Vec<usize>, Vec<Rational>)> = Vec::new();
    let mut failure: Option<Error> = None;

    let _ = lattice.for_each_chain(|chain| {
        let quotients = quotient_dims_of_chain(lattice, total, chain);
        let step = || -> Result<Option<(KempfValue, Vec<Rational>)>> {
            let data = vector_of_dims(total, &quotients, w)?;
            let env = concave_majorant(&data);
            if env.is_zero_direction() {
                return Ok(None);
            }
            let value = kempf_value_dims(total, &quotients, &env.gamma, w)?;
            Ok(value.value().cloned().map(|v| (v, env.gamma)))
        };
        match step() {
            Ok(None) => ControlFlow::Continue(()),
            Ok(Some((value, gamma))) => {
                let indices: Vec<usize> = chain.iter().copied().chain(std::iter::once(full)).collect();
                let mut kept = Vec::new();
                let mut weights = Vec::new();
                for (i, idx) in indices.iter().enumerate() {
                    if i + 1 < gamma.len() && gamma[i] == gamma[i + 1] {
                        continue;
                    }
                    kept.push(*idx);
                    weights.push(gamma[i].clone());
                }
                let key = (kept, weights);
                match best.as_ref().map(|b| value.cmp(b)) {
                    Some(std::cmp::Ordering::Less) => {}
                    Some(std::cmp::Ordering::Equal) => {
                        if !winners.contains(&key) {
                            winners.push(key);
                        }
                    }
                    _ => {
                        best = Some(value);
                        winners.clear();
                        winners.push(key);
                    }
                }
                ControlFlow::Continue(())
            }
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }

    let Some(value) = best else {
        return Err(Error::InternalContradiction(
            "unstable representation but no chain has a positive Kempf value".into(),
        ));
    };
    if value.signum() <= 0 {
        return Err(Error::InternalContradiction(format!(
            "maximal Kempf value {}/sqrt({}) is not positive",
            value.numerator(),
            value.norm_sq()
        )));
    }
    let to_filtration = |(kept, weights): &(Vec<usize>, Vec<Rational>)| -> Result<WeightedFiltration> {
        let chain: Vec<usize> = kept.iter().copied().filter(|&i| i != full).collect();
        let filtration = lattice.filtration(rep, &chain);
        WeightedFiltration::new(filtration, weights.clone())
    };
    if winners.len() != 1 {
        let listed = winners
            .iter()
            .map(|k| to_filtration(k).map(|f| format!("{:?}", f.filtration().step_dims())))
            .collect::<Result<Vec<_>>>()?;
        return Err(Error::InternalContradiction(format!(
            "{} distinct weighted filtrations attain the maximal Kempf value: {}",
            winners.len(),
            listed.join("; ")
        )));
    }
    let filtration = to_filtration(&winners[0])?;
    Ok(KempfResult { filtration, value })
}

/// Coarsens `f` with its own envelope weights; `None` when the envelope is
/// the zero direction.
pub fn optimal_weighted(rep: &Representation, f: &Filtration, w: &StabilityWeights) -> Result<Option<WeightedFiltration>> {
    let data = vector_of_dims(rep.dims(), &f.quotient_dims(), w)?;
    let env = concave_majorant(&data);
    if env.is_zero_direction() {
        return Ok(None);
    }
    coarsen(f, &env.gamma).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Field, Matrix};
    use crate::quiver::{Quiver, Subrepresentation};
    use std::sync::Arc;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn a2(alpha: i64) -> Representation {
        let q = Arc::new(Quiver::path(2));
        let m = Matrix::from_i64(f2(), 1, 1, &[alpha]).unwrap();
        Representation::new(q, f2(), DimVector(vec![1, 1]), vec![m]).unwrap()
    }

    fn ex1_hn(rep: &Representation) -> Filtration {
        let steps = vec![
            Subrepresentation::new(vec![
                crate::linalg::Subspace::full(f2(), 1),
                crate::linalg::Subspace::zero(f2(), 1),
            ]),
            Subrepresentation::full(rep),
        ];
        Filtration::new(rep, steps).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn character_examples() {
        let d = DimVector(vec![1, 1]);
        let w = StabilityWeights::standard(2);
        assert_eq!(character_exponents(&d, &w).unwrap().0, vec![-1, 1]);
        let zero = StabilityWeights::new(vec![0, 0], vec![1, 1]).unwrap();
        assert_eq!(character_exponents(&d, &zero).unwrap().0, vec![0, 0]);
        let same = StabilityWeights::new(vec![2, 3], vec![2, 3]).unwrap();
        assert_eq!(character_exponents(&DimVector(vec![4, 1]), &same).unwrap().0, vec![0, 0]);
    }

    #[test]
    fn one_ps_examples() {
        let rep = a2(0);
        let trivial = WeightedFiltration::trivial(&rep);
        let ops = one_ps_from_filtration(&trivial);
        assert_eq!(ops.per_vertex, vec![vec![(int(0), 1)], vec![(int(0), 1)]]);

        let wf = WeightedFiltration::new(ex1_hn(&rep), ints(&[-1, 1])).unwrap();
        let ops = one_ps_from_filtration(&wf);
        assert_eq!(ops.per_vertex, vec![vec![(int(-1), 1)], vec![(int(1), 1)]]);
    }

    #[test]
    fn pairing_examples() {
        let rep = a2(0);
        let w = StabilityWeights::standard(2);
        let wf = WeightedFiltration::new(ex1_hn(&rep), ints(&[-1, 1])).unwrap();
        assert_eq!(numerical_mu_weights(&rep, &one_ps_from_filtration(&wf), &w).unwrap(), int(2));
        assert_eq!(numerical_mu_filtration(&rep, &wf, &w).unwrap(), int(2));

        let zeros = OnePsWeights { per_vertex: vec![vec![(int(0), 1)], vec![(int(0), 1)]] };
        assert_eq!(numerical_mu_weights(&rep, &zeros, &w).unwrap(), int(0));
        let shifted = OnePsWeights { per_vertex: vec![vec![(int(4), 1)], vec![(int(6), 1)]] };
        assert_eq!(numerical_mu_weights(&rep, &shifted, &w).unwrap(), int(2));
        let bad = OnePsWeights { per_vertex: vec![vec![(int(0), 2)], vec![(int(0), 1)]] };
        assert!(numerical_mu_weights(&rep, &bad, &w).is_err());

        for g in [-3, 0, 5] {
            let t = WeightedFiltration::new(Filtration::trivial(&rep), vec![int(g)]).unwrap();
            assert_eq!(numerical_mu_filtration(&rep, &t, &w).unwrap(), int(0));
        }
    }

    #[test]
    fn semistable_pairing_is_non_positive() {
        // EX2 has the single proper subrep (0, F_2); every cone weight gives μ ≤ 0
        let rep = a2(1);
        let w = StabilityWeights::standard(2);
        let lattice = SubrepLattice::new(&rep, &Guards::default()).unwrap();
        let chain = [lattice.proper_indices()[0]];
        let f = lattice.filtration(&rep, &chain);
        for (a, b) in [(-2, 1), (0, 1), (1, 3), (-5, -4)] {
            let wf = WeightedFiltration::new(f.clone(), ints(&[a, b])).unwrap();
            assert!(numerical_mu_filtration(&rep, &wf, &w).unwrap() <= int(0));
        }
    }

    #[test]
    fn kempf_value_examples() {
        let rep = a2(0);
        let w = StabilityWeights::standard(2);
        let wf = WeightedFiltration::new(ex1_hn(&rep), ints(&[-1, 1])).unwrap();
        let k = kempf_value(&rep, &wf, &w).unwrap();
        let kv = k.value().unwrap();
        assert_eq!((kv.numerator(), kv.norm_sq()), (&int(2), &int(2)));
        let scaled = WeightedFiltration::new(ex1_hn(&rep), ints(&[-2, 2])).unwrap();
        assert_eq!(kempf_value(&rep, &scaled, &w).unwrap(), k);

        let ex2 = a2(1);
        let t = WeightedFiltration::trivial(&ex2);
        assert!(kempf_value(&ex2, &t, &w).unwrap().signum() <= 0);
    }

    #[test]
    fn hm_examples() {
        let w = StabilityWeights::standard(2);
        let g = Guards::default();
        assert!(hm_semistable(&a2(1), &w, &g).unwrap());
        assert!(!hm_semistable(&a2(0), &w, &g).unwrap());
        let q = Arc::new(Quiver::path(2));
        let simple = Representation::zero_maps(q, f2(), DimVector(vec![0, 1])).unwrap();
        assert!(hm_semistable(&simple, &w, &g).unwrap());
    }

    #[test]
    fn kempf_examples() {
        let w = StabilityWeights::standard(2);
        let g = Guards::default();
        let k = kempf_filtration(&a2(0), &w, &g).unwrap();
        assert_eq!(k.filtration.filtration().step_dims(), vec![DimVector(vec![1, 0]), DimVector(vec![1, 1])]);
        assert_eq!(k.filtration.weights(), ints(&[-1, 1]).as_slice());
        assert_eq!((k.value.numerator(), k.value.norm_sq()), (&int(2), &int(2)));

        assert_eq!(kempf_filtration(&a2(1), &w, &g), Err(Error::NotUnstable));

        let kr = Arc::new(Quiver::kronecker(2));
        let rep = Representation::zero_maps(kr, f2(), DimVector(vec![1, 1])).unwrap();
        let kk = kempf_filtration(&rep, &w, &g).unwrap();
        assert_eq!(kk.filtration.weights(), k.filtration.weights());
        assert_eq!(kk.value, k.value);
        assert_eq!(kk.filtration.filtration().step_dims(), k.filtration.filtration().step_dims());
    }

    #[test]
    fn kempf_weights_equal_filtration_vector() {
        // A3 zero maps, Θ = (2,1,0): three-step Kempf filtration
        let q = Arc::new(Quiver::path(3));
        let rep = Representation::zero_maps(q, f2(), DimVector(vec![1, 1, 1])).unwrap();
        let w = StabilityWeights::new(vec![2, 1, 0], vec![1, 1, 1]).unwrap();
        let k = kempf_filtration(&rep, &w, &Guards::default()).unwrap();
        // v_i = Θ(M) - σ(M) μ(M^i) = 3 - 3 μ_i with μ = (2, 1, 0)
        assert_eq!(k.filtration.weights(), ints(&[-3, 0, 3]).as_slice());
        assert_eq!(k.value.norm_sq(), &int(18));
    }
}
