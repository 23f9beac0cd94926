use std::cmp::Ordering;
use std::fmt;

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use crate::error::{malformed, Error, Result};

/// A linear subspace of `field^n`, stored as the reduced row echelon basis.
/// Two subspaces are equal iff their canonical bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, n: usize) -> Subspace {
        Subspace { ambient_dim: n, basis: Matrix::zero(field, 0, n), pivots: Vec::new() }
    }

    pub fn full(field: Field, n: usize) -> Subspace {
        Subspace { ambient_dim: n, basis: Matrix::identity(field, n), pivots: (0..n).collect() }
    }

    /// Row span of `m`.
    pub fn span(m: &Matrix) -> Subspace {
        let (basis, pivots) = m.rref();
        Subspace { ambient_dim: m.cols(), basis, pivots }
    }

    pub fn span_vectors(field: Field, n: usize, vectors: Vec<Vec<Scalar>>) -> Subspace {
        Subspace::span(&Matrix::from_rows(field, n, vectors))
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Columns that are not pivots, in increasing order.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient_dim - self.dim());
        let mut it = self.pivots.iter().peekable();
        for c in 0..self.ambient_dim {
            if it.peek() == Some(&&c) {
                it.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Subtracts the canonical basis from `x` so that it vanishes at every
    /// pivot column. The result is zero iff `x` lies in the subspace.
    pub fn reduce(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut y = x.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if y[p].is_zero() {
                continue;
            }
            let factor = y[p].clone();
            for (yi, bi) in y.iter_mut().zip(self.basis.row(r)) {
                if !bi.is_zero() {
                    *yi = yi.sub(&factor.mul(bi));
                }
            }
        }
        y
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.reduce(x).iter().all(Scalar::is_zero)
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim || self.field() != other.field() {
            return Err(malformed(format!(
                "subspaces of {}^{} and {}^{} are not comparable",
                self.field(),
                self.ambient_dim,
                other.field(),
                other.ambient_dim
            )));
        }
        Ok(())
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        if self.dim() > other.dim() {
            return Ok(false);
        }
        Ok((0..self.dim()).all(|r| other.contains(self.basis.row(r))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::span(&self.basis.vstack(&other.basis)?))
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(malformed(format!(
                "matrix with {} columns cannot act on a subspace of dimension-{} space",
                m.cols(),
                self.ambient_dim
            )));
        }
        if m.field() != self.field() {
            return Err(malformed(format!("matrix over {} acting on subspace over {}", m.field(), self.field())));
        }
        let images = (0..self.dim()).map(|r| m.apply(self.basis.row(r))).collect();
        Ok(Subspace::span_vectors(m.field(), m.rows(), images))
    }

    /// Coordinates of `x ∈ self` in the canonical basis. Because the basis is
    /// in RREF these are just the entries of `x` at the pivot columns.
    pub fn coordinates(&self, x: &[Scalar]) -> Vec<Scalar> {
        debug_assert!(self.contains(x));
        self.pivots.iter().map(|&p| x[p].clone()).collect()
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Enumeration order: dimension, then pivot set, then basis entries, all
/// lexicographic.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim
            .cmp(&other.ambient_dim)
            .then_with(|| self.dim().cmp(&other.dim()))
            .then_with(|| self.pivots.cmp(&other.pivots))
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "span{{")?;
        for r in 0..self.dim() {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "(")?;
            for (i, x) in self.basis.row(r).iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}

pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    m.rref()
}

pub fn apply_map(m: &Matrix, u: &Subspace) -> Result<Subspace> {
    u.image(m)
}

pub fn subspace_leq(a: &Subspace, b: &Subspace) -> Result<bool> {
    a.is_subspace_of(b)
}

/// Number of `k`-dimensional subspaces of `F_q^n`, saturating at `u128::MAX`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    // Π_{i<k} (q^{n-i} - 1)/(q^{i+1} - 1), accumulated as an exact ratio.
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        let a = match q.checked_pow((n - i) as u32) {
            Some(x) => x - 1,
            None => return u128::MAX,
        };
        let b = q.pow((i + 1) as u32) - 1;
        num = match num.checked_mul(a) {
            Some(x) => x,
            None => return u128::MAX,
        };
        den *= b;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Total number of subspaces of `F_q^n`, saturating.
pub fn subspace_count(n: usize, q: u64) -> u128 {
    (0..=n).fold(0u128, |acc, k| acc.saturating_add(gaussian_binomial(n, k, q)))
}

/// Every subspace of `F_p^n`, each once, in canonical order.
pub fn enumerate_subspaces(n: usize, p: u64, guard: u128) -> Result<Vec<Subspace>> {
    let field = Field::prime(p)?;
    let count = subspace_count(n, p);
    if count > guard {
        return Err(Error::ResourceLimit { what: format!("subspaces of F_{p}^{n}"), count, limit: guard });
    }
    let mut out = Vec::with_capacity(count as usize);
    for k in 0..=n {
        for pivots in combinations(n, k) {
            // Free positions in row-major order: row r, column c > pivot_r, c not a pivot.
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &pc)| {
                    let pivots = &pivots;
                    (pc + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let mut digits = vec![0u64; free.len()];
            loop {
                let mut entries = vec![field.zero(); k * n];
                for (r, &pc) in pivots.iter().enumerate() {
                    entries[r * n + pc] = field.one();
                }
                for (&(r, c), &d) in free.iter().zip(&digits) {
                    entries[r * n + c] = field.from_i64(d as i64);
                }
                let basis = Matrix::new(field, k, n, entries)?;
                out.push(Subspace { ambient_dim: n, basis, pivots: pivots.clone() });
                if !increment(&mut digits, p) {
                    break;
                }
            }
        }
    }
    debug_assert_eq!(out.len() as u128, count);
    Ok(out)
}

/// Odometer increment with the last digit fastest; false on wrap-around.
fn increment(digits: &mut [u64], base: u64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn vecs(field: Field, rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect()
    }

    /// Galois numbers via the recurrence G(n+1) = 2 G(n) + (q^n - 1) G(n-1).
    fn galois_number(n: usize, q: u64) -> u128 {
        let mut g = vec![1u128, 2u128];
        for m in 1..n {
            let next = 2 * g[m] + (q.pow(m as u32) as u128 - 1) * g[m - 1];
            g.push(next);
        }
        g[n]
    }

    #[test]
    fn enumeration_small_counts() {
        let zero = enumerate_subspaces(0, 2, 1_000_000).unwrap();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].is_zero());

        let plane = enumerate_subspaces(2, 2, 1_000_000).unwrap();
        assert_eq!(plane.len(), 5);
        let dims: Vec<usize> = plane.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0, 1, 1, 1, 2]);

        assert_eq!(enumerate_subspaces(3, 2, 1_000_000).unwrap().len(), 16);
    }

    #[test]
    fn enumeration_matches_galois_numbers() {
        for p in [2u64, 3] {
            for n in 0..=3 {
                let all = enumerate_subspaces(n, p, 1_000_000).unwrap();
                assert_eq!(all.len() as u128, galois_number(n, p), "n={n} p={p}");
                assert_eq!(subspace_count(n, p), galois_number(n, p));
                // distinct, canonical, sorted
                for w in all.windows(2) {
                    assert!(w[0] < w[1]);
                }
                for s in &all {
                    assert_eq!(&Subspace::span(s.basis()), s);
                }
            }
        }
    }

    #[test]
    fn enumeration_direct_lines_of_f2_squared() {
        // the three nonzero vectors of F_2^2 each span a distinct line
        let f = f2();
        let lines: Vec<Subspace> = [[1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|v| Subspace::span_vectors(f, 2, vecs(f, &[v])))
            .collect();
        let all = enumerate_subspaces(2, 2, 100).unwrap();
        for l in &lines {
            assert_eq!(all.iter().filter(|s| *s == l).count(), 1);
        }
    }

    #[test]
    fn guard_reports_count() {
        match enumerate_subspaces(3, 2, 10) {
            Err(Error::ResourceLimit { count, limit, .. }) => {
                assert_eq!(count, 16);
                assert_eq!(limit, 10);
            }
            other => panic!("expected resource limit, got {other:?}"),
        }
    }

    #[test]
    fn apply_map_examples() {
        let f = f2();
        let u = Subspace::span_vectors(f, 2, vecs(f, &[&[1, 1]]));
        let zero = Matrix::zero(f, 2, 2);
        assert!(apply_map(&zero, &u).unwrap().is_zero());
        assert_eq!(apply_map(&Matrix::identity(f, 2), &u).unwrap(), u);
        let m = Matrix::from_i64(f, 2, 2, &[1, 0, 0, 0]).unwrap();
        let expected = Subspace::span_vectors(f, 2, vecs(f, &[&[1, 0]]));
        assert_eq!(apply_map(&m, &u).unwrap(), expected);
        assert!(apply_map(&Matrix::identity(f, 3), &u).is_err());
    }

    #[test]
    fn leq_examples() {
        let f = f2();
        let full2 = Subspace::full(f, 2);
        let line = Subspace::span_vectors(f, 2, vecs(f, &[&[1, 0]]));
        assert!(subspace_leq(&Subspace::zero(f, 2), &line).unwrap());
        assert!(!subspace_leq(&full2, &line).unwrap());

        let a = Subspace::span_vectors(f, 3, vecs(f, &[&[1, 0, 0]]));
        let b = Subspace::span_vectors(f, 3, vecs(f, &[&[1, 0, 0], &[0, 1, 0]]));
        assert!(subspace_leq(&a, &b).unwrap());
        assert!(subspace_leq(&line, &a).is_err());
    }

    #[test]
    fn leq_is_partial_order_on_f2_squared() {
        let all = enumerate_subspaces(2, 2, 100).unwrap();
        for a in &all {
            assert!(subspace_leq(a, a).unwrap());
            for b in &all {
                let ab = subspace_leq(a, b).unwrap();
                let ba = subspace_leq(b, a).unwrap();
                if ab && ba {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if ab && subspace_leq(b, c).unwrap() {
                        assert!(subspace_leq(a, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn non_pivots_complement_pivots() {
        let f = Field::prime(3).unwrap();
        let s = Subspace::span_vectors(f, 4, vecs(f, &[&[0, 1, 2, 0], &[0, 0, 0, 1]]));
        assert_eq!(s.pivots(), &[1, 3]);
        assert_eq!(s.non_pivots(), vec![0, 2]);
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(gaussian_binomial(2, 3, 2), 0);
    }
}
