//! Quivers, dimension vectors, stability weights, representations and
//! filtrations by subrepresentations.

use std::fmt;
use std::sync::Arc;

use crate::error::{malformed, Error, Result};
use crate::linalg::{int, Field, Matrix, Rational, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Loops and parallel arrows are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(id, source, target)` triples
    /// naming those vertices.
    pub fn new<S: Into<String>>(vertices: Vec<S>, arrows: Vec<(S, S, S)>) -> Result<Quiver> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(malformed(format!("duplicate vertex id {v:?}")));
            }
        }
        let mut out = Vec::with_capacity(arrows.len());
        for (id, s, t) in arrows {
            let (id, s, t): (String, String, String) = (id.into(), s.into(), t.into());
            if out.iter().any(|a: &Arrow| a.id == id) {
                return Err(malformed(format!("duplicate arrow id {id:?}")));
            }
            let lookup = |name: &str| {
                vertices
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| malformed(format!("arrow {id:?} names unknown vertex {name:?}")))
            };
            let source = lookup(&s)?;
            let target = lookup(&t)?;
            out.push(Arrow { id, source, target });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    /// Quiver with vertices `v1..vn` and arrows `a1..` between vertex indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Quiver> {
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let arrows = edges
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let name = |i: usize| names.get(i).cloned().unwrap_or_else(|| format!("#{i}"));
                (format!("a{}", k + 1), name(s), name(t))
            })
            .collect();
        Quiver::new(names.clone(), arrows)
    }

    /// The equioriented path `v1 -> v2 -> ... -> vn`.
    pub fn path(n: usize) -> Quiver {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Quiver::from_edges(n, &edges).expect("path quiver is well formed")
    }

    /// Two vertices joined by `m` parallel arrows `v1 -> v2`.
    pub fn kronecker(m: usize) -> Quiver {
        Quiver::from_edges(2, &vec![(0, 1); m]).expect("kronecker quiver is well formed")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }
}

/// Per-vertex dimensions, in the quiver's vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zero(n: usize) -> DimVector {
        DimVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Componentwise `self - other`; `None` if any component would go negative.
    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// The linear functions Θ (arbitrary) and σ (strictly positive) on
/// dimension vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StabilityWeights {
    theta: Vec<i64>,
    sigma: Vec<i64>,
}

impl StabilityWeights {
    pub fn new(theta: Vec<i64>, sigma: Vec<i64>) -> Result<StabilityWeights> {
        if theta.len() != sigma.len() {
            return Err(malformed(format!(
                "theta has {} entries but sigma has {}",
                theta.len(),
                sigma.len()
            )));
        }
        if let Some(i) = sigma.iter().position(|&s| s < 1) {
            return Err(malformed(format!("sigma[{i}] = {} must be strictly positive", sigma[i])));
        }
        Ok(StabilityWeights { theta, sigma })
    }

    /// Θ = (1, 0, ..., 0), σ = (1, ..., 1).
    pub fn standard(n: usize) -> StabilityWeights {
        let mut theta = vec![0; n];
        if n > 0 {
            theta[0] = 1;
        }
        StabilityWeights { theta, sigma: vec![1; n] }
    }

    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    pub fn sigma(&self) -> &[i64] {
        &self.sigma
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    fn check(&self, d: &DimVector) -> Result<()> {
        if d.len() != self.len() {
            return Err(malformed(format!(
                "dimension vector has {} entries, weights have {}",
                d.len(),
                self.len()
            )));
        }
        Ok(())
    }
}

fn dot(coeffs: &[i64], d: &DimVector) -> i64 {
    coeffs.iter().zip(&d.0).map(|(c, &x)| c * x as i64).sum()
}

/// Θ(d) = Σ Θ_v d_v.
pub fn theta_of(d: &DimVector, w: &StabilityWeights) -> Result<i64> {
    w.check(d)?;
    Ok(dot(&w.theta, d))
}

/// σ(d) = Σ σ_v d_v, the total dimension.
pub fn sigma_of(d: &DimVector, w: &StabilityWeights) -> Result<i64> {
    w.check(d)?;
    Ok(dot(&w.sigma, d))
}

/// μ(d) = Θ(d)/σ(d), exact.
pub fn slope(d: &DimVector, w: &StabilityWeights) -> Result<Rational> {
    w.check(d)?;
    if d.is_zero() {
        return Err(Error::UndefinedSlope);
    }
    Ok(Rational::new(dot(&w.theta, d).into(), dot(&w.sigma, d).into()))
}

/// A representation: a vector space `field^{d_v}` per vertex and a
/// `d_target × d_source` matrix per arrow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    quiver: Arc<Quiver>,
    field: Field,
    dims: DimVector,
    maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(quiver: Arc<Quiver>, field: Field, dims: DimVector, maps: Vec<Matrix>) -> Result<Representation> {
        if dims.len() != quiver.vertex_count() {
            return Err(malformed(format!(
                "dimension vector has {} entries for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(malformed(format!("{} matrices for {} arrows", maps.len(), quiver.arrows().len())));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            let (rows, cols) = (dims.0[a.target], dims.0[a.source]);
            if m.rows() != rows || m.cols() != cols {
                return Err(malformed(format!(
                    "arrow {:?} needs a {rows}x{cols} matrix, got {}x{}",
                    a.id,
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(malformed(format!("arrow {:?} matrix is over {}, expected {field}", a.id, m.field())));
            }
        }
        Ok(Representation { quiver, field, dims, maps })
    }

    /// The representation with every arrow acting by zero.
    pub fn zero_maps(quiver: Arc<Quiver>, field: Field, dims: DimVector) -> Result<Representation> {
        if dims.len() != quiver.vertex_count() {
            return Err(malformed("dimension vector does not match quiver"));
        }
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zero(field, dims.0[a.target], dims.0[a.source]))
            .collect();
        Representation::new(quiver, field, dims, maps)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_zero()
    }

    pub fn prime(&self) -> Result<u64> {
        match self.field {
            Field::Prime(p) => Ok(p),
            Field::Rational => Err(malformed(
                "subrepresentation search needs a finite field; this representation is over Q",
            )),
        }
    }
}

/// A tuple of subspaces `U_v ⊆ M_v`. Equality is per-vertex canonical
/// subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subrepresentation {
    spaces: Vec<Subspace>,
}

impl Subrepresentation {
    pub fn new(spaces: Vec<Subspace>) -> Subrepresentation {
        Subrepresentation { spaces }
    }

    pub fn zero(rep: &Representation) -> Subrepresentation {
        Subrepresentation { spaces: rep.dims.0.iter().map(|&n| Subspace::zero(rep.field, n)).collect() }
    }

    pub fn full(rep: &Representation) -> Subrepresentation {
        Subrepresentation { spaces: rep.dims.0.iter().map(|&n| Subspace::full(rep.field, n)).collect() }
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn dims(&self) -> DimVector {
        DimVector(self.spaces.iter().map(Subspace::dim).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.spaces.iter().all(Subspace::is_zero)
    }

    pub fn is_full(&self) -> bool {
        self.spaces.iter().all(Subspace::is_full)
    }

    /// Vertexwise inclusion.
    pub fn leq(&self, other: &Subrepresentation) -> Result<bool> {
        if self.spaces.len() != other.spaces.len() {
            return Err(malformed("subrepresentations have different vertex counts"));
        }
        for (a, b) in self.spaces.iter().zip(&other.spaces) {
            if !a.is_subspace_of(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subrepresentation) -> Result<Subrepresentation> {
        if self.spaces.len() != other.spaces.len() {
            return Err(malformed("subrepresentations have different vertex counts"));
        }
        let spaces = self.spaces.iter().zip(&other.spaces).map(|(a, b)| a.sum(b)).collect::<Result<_>>()?;
        Ok(Subrepresentation { spaces })
    }
}

impl fmt::Display for Subrepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.spaces.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

fn check_shape(rep: &Representation, sub: &Subrepresentation) -> Result<()> {
    if sub.spaces.len() != rep.dims.len() {
        return Err(malformed(format!(
            "subrepresentation has {} vertices, representation has {}",
            sub.spaces.len(),
            rep.dims.len()
        )));
    }
    for (v, (s, &n)) in sub.spaces.iter().zip(&rep.dims.0).enumerate() {
        if s.ambient_dim() != n || s.field() != rep.field {
            return Err(malformed(format!(
                "subspace at vertex {:?} lives in {}^{}, expected {}^{n}",
                rep.quiver.vertices()[v],
                s.field(),
                s.ambient_dim(),
                rep.field
            )));
        }
    }
    Ok(())
}

/// True iff every arrow maps `U_source` into `U_target`.
pub fn validate_subrep(rep: &Representation, sub: &Subrepresentation) -> Result<bool> {
    check_shape(rep, sub)?;
    for (a, m) in rep.quiver.arrows().iter().zip(&rep.maps) {
        let image = sub.spaces[a.source].image(m)?;
        if !image.is_subspace_of(&sub.spaces[a.target])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The quotient `M/S` together with the coordinate data needed to pull
/// subrepresentations of the quotient back to `M`.
///
/// Quotient coordinates at a vertex are the non-pivot standard coordinates
/// of the canonical basis of `S_v`.
#[derive(Clone, Debug)]
pub struct Quotient {
    rep: Representation,
    base: Subrepresentation,
    kept: Vec<Vec<usize>>,
}

impl Quotient {
    pub fn new(rep: &Representation, sub: &Subrepresentation) -> Result<Quotient> {
        if !validate_subrep(rep, sub)? {
            return Err(malformed(format!("{sub} is not a subrepresentation")));
        }
        let kept: Vec<Vec<usize>> = sub.spaces.iter().map(Subspace::non_pivots).collect();
        let field = rep.field;
        let mut maps = Vec::with_capacity(rep.maps.len());
        for (a, m) in rep.quiver.arrows().iter().zip(&rep.maps) {
            let src_kept = &kept[a.source];
            let tgt_kept = &kept[a.target];
            let tgt_space = &sub.spaces[a.target];
            // column j of the induced map: project M e_{kept_j}
            let mut entries = vec![field.zero(); tgt_kept.len() * src_kept.len()];
            for (jj, &j) in src_kept.iter().enumerate() {
                let col: Vec<Scalar> = (0..m.rows()).map(|r| m.get(r, j).clone()).collect();
                let reduced = tgt_space.reduce(&col);
                for (ii, &i) in tgt_kept.iter().enumerate() {
                    entries[ii * src_kept.len() + jj] = reduced[i].clone();
                }
            }
            maps.push(Matrix::new(field, tgt_kept.len(), src_kept.len(), entries)?);
        }
        let dims = DimVector(kept.iter().map(Vec::len).collect());
        let quotient = Representation::new(rep.quiver.clone(), field, dims, maps)?;
        Ok(Quotient { rep: quotient, base: sub.clone(), kept })
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn into_representation(self) -> Representation {
        self.rep
    }

    /// Preimage in `M` of a subrepresentation of `M/S`.
    pub fn pull_back(&self, w: &Subrepresentation) -> Result<Subrepresentation> {
        check_shape(&self.rep, w)?;
        let field = self.rep.field;
        let spaces = self
            .base
            .spaces
            .iter()
            .zip(&w.spaces)
            .zip(&self.kept)
            .map(|((base, ws), kept)| {
                let n = base.ambient_dim();
                let mut rows: Vec<Vec<Scalar>> = (0..base.dim()).map(|r| base.basis().row(r).to_vec()).collect();
                for r in 0..ws.dim() {
                    let mut lifted = vec![field.zero(); n];
                    for (x, &c) in ws.basis().row(r).iter().zip(kept) {
                        lifted[c] = x.clone();
                    }
                    rows.push(lifted);
                }
                Subspace::span_vectors(field, n, rows)
            })
            .collect();
        Ok(Subrepresentation { spaces })
    }

    /// Image in `M/S` of a subrepresentation `T ⊇ S` of `M`.
    pub fn project(&self, t: &Subrepresentation) -> Result<Subrepresentation> {
        let field = self.rep.field;
        let spaces = self
            .base
            .spaces
            .iter()
            .zip(&t.spaces)
            .zip(&self.kept)
            .map(|((base, ts), kept)| {
                let rows = (0..ts.dim())
                    .map(|r| {
                        let reduced = base.reduce(ts.basis().row(r));
                        kept.iter().map(|&c| reduced[c].clone()).collect()
                    })
                    .collect();
                Subspace::span_vectors(field, kept.len(), rows)
            })
            .collect();
        Ok(Subrepresentation { spaces })
    }
}

/// `M/S` in the non-pivot quotient coordinates of each `S_v`.
pub fn quotient_representation(rep: &Representation, sub: &Subrepresentation) -> Result<Representation> {
    Ok(Quotient::new(rep, sub)?.into_representation())
}

/// `S` viewed as a representation in its own right, using the canonical
/// basis of each `S_v` as coordinates.
pub fn restrict(rep: &Representation, sub: &Subrepresentation) -> Result<Representation> {
    if !validate_subrep(rep, sub)? {
        return Err(malformed(format!("{sub} is not a subrepresentation")));
    }
    let field = rep.field;
    let mut maps = Vec::with_capacity(rep.maps.len());
    for (a, m) in rep.quiver.arrows().iter().zip(&rep.maps) {
        let src = &sub.spaces[a.source];
        let tgt = &sub.spaces[a.target];
        let mut entries = vec![field.zero(); tgt.dim() * src.dim()];
        for j in 0..src.dim() {
            let image = m.apply(src.basis().row(j));
            for (i, x) in tgt.coordinates(&image).into_iter().enumerate() {
                entries[i * src.dim() + j] = x;
            }
        }
        maps.push(Matrix::new(field, tgt.dim(), src.dim(), entries)?);
    }
    Representation::new(rep.quiver.clone(), field, sub.dims(), maps)
}

/// A strictly increasing chain `0 ⊂ M_1 ⊂ ... ⊂ M_{t+1} = M`, stored without
/// the leading zero: `steps[0] = M_1`, `steps[t] = M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filtration {
    steps: Vec<Subrepresentation>,
}

impl Filtration {
    pub fn new(rep: &Representation, steps: Vec<Subrepresentation>) -> Result<Filtration> {
        let Some(last) = steps.last() else {
            return Err(malformed("a filtration needs at least one step"));
        };
        if !last.is_full() {
            return Err(malformed("the last step of a filtration must be the whole representation"));
        }
        let mut prev = Subrepresentation::zero(rep);
        for (i, s) in steps.iter().enumerate() {
            if !validate_subrep(rep, s)? {
                return Err(malformed(format!("step {} of the filtration is not a subrepresentation", i + 1)));
            }
            if !prev.leq(s)? || &prev == s {
                return Err(malformed(format!("step {} does not strictly contain the previous step", i + 1)));
            }
            prev = s.clone();
        }
        Ok(Filtration { steps })
    }

    /// `0 ⊂ M`.
    pub fn trivial(rep: &Representation) -> Filtration {
        Filtration { steps: vec![Subrepresentation::full(rep)] }
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Subrepresentation>) -> Filtration {
        Filtration { steps }
    }

    pub fn steps(&self) -> &[Subrepresentation] {
        &self.steps
    }

    /// Number of quotients, `t + 1`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn step_dims(&self) -> Vec<DimVector> {
        self.steps.iter().map(Subrepresentation::dims).collect()
    }

    /// `d^i = d_i - d_{i-1}`.
    pub fn quotient_dims(&self) -> Vec<DimVector> {
        let mut prev = DimVector::zero(self.steps.first().map_or(0, |s| s.spaces.len()));
        self.step_dims()
            .into_iter()
            .map(|d| {
                let q = d.checked_sub(&prev).expect("chain is increasing");
                prev = d;
                q
            })
            .collect()
    }
}

pub fn filtration_quotient_dims(f: &Filtration) -> Vec<DimVector> {
    f.quotient_dims()
}

/// A filtration with strictly increasing rational weights `Γ_1 < ... < Γ_{t+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedFiltration {
    filtration: Filtration,
    weights: Vec<Rational>,
}

impl WeightedFiltration {
    pub fn new(filtration: Filtration, weights: Vec<Rational>) -> Result<WeightedFiltration> {
        if weights.len() != filtration.len() {
            return Err(malformed(format!(
                "{} weights for a filtration with {} steps",
                weights.len(),
                filtration.len()
            )));
        }
        if weights.windows(2).any(|w| w[0] >= w[1]) {
            return Err(malformed("filtration weights must be strictly increasing"));
        }
        Ok(WeightedFiltration { filtration, weights })
    }

    pub fn trivial(rep: &Representation) -> WeightedFiltration {
        WeightedFiltration { filtration: Filtration::trivial(rep), weights: vec![int(0)] }
    }

    pub fn filtration(&self) -> &Filtration {
        &self.filtration
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn a2(alpha: i64) -> Representation {
        let q = Arc::new(Quiver::path(2));
        let m = Matrix::from_i64(f2(), 1, 1, &[alpha]).unwrap();
        Representation::new(q, f2(), DimVector(vec![1, 1]), vec![m]).unwrap()
    }

    fn sub(spaces: &[bool]) -> Subrepresentation {
        Subrepresentation::new(
            spaces.iter().map(|&full| if full { Subspace::full(f2(), 1) } else { Subspace::zero(f2(), 1) }).collect(),
        )
    }

    #[test]
    fn weight_functions() {
        let w = StabilityWeights::new(vec![1, 0], vec![1, 1]).unwrap();
        assert_eq!(theta_of(&DimVector(vec![0, 0]), &w).unwrap(), 0);
        assert_eq!(theta_of(&DimVector(vec![1, 1]), &w).unwrap(), 1);
        let w2 = StabilityWeights::new(vec![-1, 2], vec![3, 2]).unwrap();
        assert_eq!(theta_of(&DimVector(vec![2, 3]), &w2).unwrap(), 4);
        assert_eq!(sigma_of(&DimVector(vec![1, 1]), &w).unwrap(), 2);
        assert_eq!(sigma_of(&DimVector(vec![0, 0]), &w).unwrap(), 0);
        assert_eq!(sigma_of(&DimVector(vec![2, 1]), &w2).unwrap(), 8);
        assert!(theta_of(&DimVector(vec![1]), &w).is_err());
    }

    #[test]
    fn slopes() {
        let w = StabilityWeights::new(vec![1, 0], vec![1, 1]).unwrap();
        assert_eq!(slope(&DimVector(vec![1, 1]), &w).unwrap(), rat(1, 2));
        assert_eq!(slope(&DimVector(vec![1, 0]), &w).unwrap(), rat(1, 1));
        let doubled = StabilityWeights::new(vec![2, 0], vec![1, 1]).unwrap();
        assert_eq!(slope(&DimVector(vec![1, 1]), &doubled).unwrap(), rat(1, 1));
        assert_eq!(slope(&DimVector(vec![0, 0]), &w), Err(Error::UndefinedSlope));
    }

    #[test]
    fn sigma_must_be_positive() {
        assert!(StabilityWeights::new(vec![1, 0], vec![0, 1]).is_err());
        assert!(StabilityWeights::new(vec![1], vec![1, 1]).is_err());
    }

    #[test]
    fn quiver_validation() {
        assert!(Quiver::new(vec!["a", "a"], vec![]).is_err());
        assert!(Quiver::new(vec!["a", "b"], vec![("x", "a", "c")]).is_err());
        let loops = Quiver::new(vec!["a"], vec![("x", "a", "a"), ("y", "a", "a")]).unwrap();
        assert_eq!(loops.arrows().len(), 2);
        assert!(Quiver::new(Vec::<String>::new(), vec![]).is_ok());
    }

    #[test]
    fn representation_shape_checked() {
        let q = Arc::new(Quiver::path(2));
        let bad = Matrix::from_i64(f2(), 1, 2, &[0, 0]).unwrap();
        assert!(Representation::new(q, f2(), DimVector(vec![1, 1]), vec![bad]).is_err());
    }

    #[test]
    fn validate_subrep_examples() {
        let ex1 = a2(0);
        let ex2 = a2(1);
        assert!(validate_subrep(&ex1, &sub(&[true, false])).unwrap());
        assert!(!validate_subrep(&ex2, &sub(&[true, false])).unwrap());
        assert!(validate_subrep(&ex2, &sub(&[true, true])).unwrap());
        let wrong = Subrepresentation::new(vec![Subspace::zero(f2(), 2), Subspace::zero(f2(), 1)]);
        assert!(validate_subrep(&ex1, &wrong).is_err());
    }

    #[test]
    fn quotient_examples() {
        let ex1 = a2(0);
        assert_eq!(quotient_representation(&ex1, &Subrepresentation::zero(&ex1)).unwrap(), ex1);
        let all = quotient_representation(&ex1, &Subrepresentation::full(&ex1)).unwrap();
        assert!(all.is_zero());
        let q = quotient_representation(&ex1, &sub(&[true, false])).unwrap();
        assert_eq!(q.dims(), &DimVector(vec![0, 1]));
        assert_eq!((q.maps()[0].rows(), q.maps()[0].cols()), (1, 0));
        assert!(quotient_representation(&a2(1), &sub(&[true, false])).is_err());
    }

    #[test]
    fn quotient_induced_map_and_pullback() {
        // v1 -(a)-> v2 with d = (2, 2), M_a = [[1,1],[0,1]] over F_3
        let f = Field::prime(3).unwrap();
        let q = Arc::new(Quiver::path(2));
        let m = Matrix::from_i64(f, 2, 2, &[1, 1, 0, 1]).unwrap();
        let rep = Representation::new(q, f, DimVector(vec![2, 2]), vec![m]).unwrap();
        let e1 = |n| Subspace::span_vectors(f, n, vec![vec![f.one(), f.zero()]]);
        let s = Subrepresentation::new(vec![e1(2), e1(2)]);
        assert!(validate_subrep(&rep, &s).unwrap());
        let quot = Quotient::new(&rep, &s).unwrap();
        assert_eq!(quot.representation().maps()[0], Matrix::from_i64(f, 1, 1, &[1]).unwrap());
        let top = Subrepresentation::full(quot.representation());
        assert!(quot.pull_back(&top).unwrap().is_full());
        let bottom = Subrepresentation::zero(quot.representation());
        assert_eq!(quot.pull_back(&bottom).unwrap(), s);
        assert_eq!(quot.project(&Subrepresentation::full(&rep)).unwrap(), top);

        let r = restrict(&rep, &s).unwrap();
        assert_eq!(r.maps()[0], Matrix::from_i64(f, 1, 1, &[1]).unwrap());
    }

    #[test]
    fn filtration_dims() {
        let ex1 = a2(0);
        let trivial = Filtration::trivial(&ex1);
        assert_eq!(filtration_quotient_dims(&trivial), vec![DimVector(vec![1, 1])]);
        let hn = Filtration::new(&ex1, vec![sub(&[true, false]), sub(&[true, true])]).unwrap();
        assert_eq!(hn.quotient_dims(), vec![DimVector(vec![1, 0]), DimVector(vec![0, 1])]);
        assert!(Filtration::new(&ex1, vec![sub(&[true, false]), sub(&[true, false]), sub(&[true, true])]).is_err());
        assert!(Filtration::new(&ex1, vec![sub(&[true, false])]).is_err());
        assert!(Filtration::new(&a2(1), vec![sub(&[true, false]), sub(&[true, true])]).is_err());
    }

    #[test]
    fn weighted_filtration_needs_strict_weights() {
        let ex1 = a2(0);
        let hn = Filtration::new(&ex1, vec![sub(&[true, false]), sub(&[true, true])]).unwrap();
        assert!(WeightedFiltration::new(hn.clone(), vec![int(1), int(1)]).is_err());
        assert!(WeightedFiltration::new(hn.clone(), vec![int(1)]).is_err());
        assert!(WeightedFiltration::new(hn, vec![int(-1), int(1)]).is_ok());
    }
}
