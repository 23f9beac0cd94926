//! Problem files: a quiver, a field, a dimension vector, optional arrow
//! matrices and stability weights, as JSON.

use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use quiverstab_core::linalg::rat;
use quiverstab_core::{DimVector, Error, Field, Matrix, Quiver, Rational, Representation, Result, Scalar, StabilityWeights};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub quiver: QuiverSpec,
    pub field: FieldSpec,
    pub dims: IndexMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<IndexMap<String, Vec<Vec<Entry>>>>,
    pub theta: IndexMap<String, i64>,
    pub sigma: IndexMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

/// A matrix entry: an integer, or a string `"a/b"` for a rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

/// A validated problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub quiver: Arc<Quiver>,
    pub field: Field,
    pub dims: DimVector,
    pub weights: StabilityWeights,
    /// Present when the file carries matrices for every nonempty arrow.
    pub rep: Option<Representation>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn parse_entry(e: &Entry, at: &str) -> Result<Rational> {
    match e {
        Entry::Int(n) => Ok(rat(*n, 1)),
        Entry::Text(s) => {
            let s = s.trim();
            let (n, d) = match s.split_once('/') {
                Some((n, d)) => (n.trim(), d.trim()),
                None => (s, "1"),
            };
            let n: i64 = n.parse().map_err(|_| bad(format!("{at}: cannot parse entry {s:?}")))?;
            let d: i64 = d.parse().map_err(|_| bad(format!("{at}: cannot parse entry {s:?}")))?;
            if d == 0 {
                return Err(bad(format!("{at}: zero denominator in {s:?}")));
            }
            Ok(rat(n, d))
        }
    }
}

/// Reads a per-vertex map, requiring every vertex exactly once.
fn per_vertex<T: Copy>(map: &IndexMap<String, T>, key: &str, quiver: &Quiver) -> Result<Vec<T>> {
    for name in map.keys() {
        if quiver.vertex_index(name).is_none() {
            return Err(bad(format!("{key}: unknown vertex {name:?}")));
        }
    }
    quiver
        .vertices()
        .iter()
        .map(|v| map.get(v).copied().ok_or_else(|| bad(format!("{key}: missing vertex {v:?}"))))
        .collect()
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile> {
        serde_json::from_str(text).map_err(|e| bad(format!("invalid problem file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files always serialize")
    }

    pub fn validate(&self) -> Result<Problem> {
        let q = &self.quiver;
        for (i, v) in q.vertices.iter().enumerate() {
            if q.vertices[..i].contains(v) {
                return Err(bad(format!("quiver.vertices: duplicate vertex {v:?}")));
            }
        }
        for (i, a) in q.arrows.iter().enumerate() {
            if q.arrows[..i].iter().any(|b| b.id == a.id) {
                return Err(bad(format!("quiver.arrows[{i}]: duplicate arrow id {:?}", a.id)));
            }
            for (end, name) in [("src", &a.src), ("tgt", &a.tgt)] {
                if !q.vertices.contains(name) {
                    return Err(bad(format!("quiver.arrows[{i}] ({}): {end} names unknown vertex {name:?}", a.id)));
                }
            }
        }
        let quiver = Arc::new(Quiver::new(
            q.vertices.clone(),
            q.arrows.iter().map(|a| (a.id.clone(), a.src.clone(), a.tgt.clone())).collect(),
        )?);

        let field = match self.field {
            FieldSpec::Rational => Field::Rational,
            FieldSpec::Prime { p } => Field::prime(p).map_err(|e| bad(format!("field.p: {e}")))?,
        };
        let dims = DimVector(per_vertex(&self.dims, "dims", &quiver)?);
        let theta = per_vertex(&self.theta, "theta", &quiver)?;
        let sigma = per_vertex(&self.sigma, "sigma", &quiver)?;
        for (v, s) in quiver.vertices().iter().zip(&sigma) {
            if *s < 1 {
                return Err(bad(format!("sigma.{v}: must be at least 1, got {s}")));
            }
        }
        let weights = StabilityWeights::new(theta, sigma)?;

        let rep = match &self.matrices {
            None => None,
            Some(mats) => Some(self.representation(&quiver, field, &dims, mats)?),
        };
        Ok(Problem { quiver, field, dims, weights, rep })
    }

    fn representation(
        &self,
        quiver: &Arc<Quiver>,
        field: Field,
        dims: &DimVector,
        mats: &IndexMap<String, Vec<Vec<Entry>>>,
    ) -> Result<Representation> {
        for id in mats.keys() {
            if !quiver.arrows().iter().any(|a| &a.id == id) {
                return Err(bad(format!("matrices: unknown arrow {id:?}")));
            }
        }
        let mut maps = Vec::new();
        for a in quiver.arrows() {
            let (rows, cols) = (dims.0[a.target], dims.0[a.source]);
            let at = format!("matrices.{}", a.id);
            let Some(m) = mats.get(&a.id) else {
                if rows * cols == 0 {
                    maps.push(Matrix::zero(field, rows, cols));
                    continue;
                }
                return Err(bad(format!("{at}: missing matrix for arrow {:?}", a.id)));
            };
            if m.len() != rows {
                return Err(bad(format!("{at}: expected {rows} rows (dim of {}), got {}", quiver.vertices()[a.target], m.len())));
            }
            let mut entries = Vec::with_capacity(rows * cols);
            for (r, row) in m.iter().enumerate() {
                if row.len() != cols {
                    return Err(bad(format!(
                        "{at}[{r}]: expected {cols} columns (dim of {}), got {}",
                        quiver.vertices()[a.source],
                        row.len()
                    )));
                }
                for (c, e) in row.iter().enumerate() {
                    let q = parse_entry(e, &format!("{at}[{r}][{c}]"))?;
                    let s = field.from_rational(&q).map_err(|e| bad(format!("{at}[{r}][{c}]: {e}")))?;
                    entries.push(s);
                }
            }
            maps.push(Matrix::new(field, rows, cols, entries)?);
        }
        Representation::new(quiver.clone(), field, dims.clone(), maps)
    }
}

fn entry_of(s: &Scalar) -> Entry {
    match s {
        Scalar::Prime(x) => Entry::Int(x.residue() as i64),
        Scalar::Rational(q) if q.is_integer() => {
            i64::try_from(q.numer()).map(Entry::Int).unwrap_or_else(|_| Entry::Text(q.to_string()))
        }
        Scalar::Rational(q) => Entry::Text(q.to_string()),
    }
}

impl Problem {
    /// The canonical file for this problem: entries reduced into the field.
    pub fn to_file(&self) -> ProblemFile {
        let q = &self.quiver;
        let per_vertex = |xs: &[i64]| -> IndexMap<String, i64> { q.vertices().iter().cloned().zip(xs.iter().copied()).collect() };
        let matrices = self.rep.as_ref().map(|rep| {
            q.arrows()
                .iter()
                .zip(rep.maps())
                .map(|(a, m)| {
                    let rows = (0..m.rows()).map(|r| (0..m.cols()).map(|c| entry_of(m.get(r, c))).collect()).collect();
                    (a.id.clone(), rows)
                })
                .collect()
        });
        ProblemFile {
            quiver: QuiverSpec {
                vertices: q.vertices().to_vec(),
                arrows: q
                    .arrows()
                    .iter()
                    .map(|a| ArrowSpec {
                        id: a.id.clone(),
                        src: q.vertices()[a.source].clone(),
                        tgt: q.vertices()[a.target].clone(),
                    })
                    .collect(),
            },
            field: match self.field {
                Field::Rational => FieldSpec::Rational,
                Field::Prime(p) => FieldSpec::Prime { p },
            },
            dims: q.vertices().iter().cloned().zip(self.dims.0.iter().copied()).collect(),
            matrices,
            theta: per_vertex(self.weights.theta()),
            sigma: per_vertex(self.weights.sigma()),
        }
    }

    pub fn require_rep(&self) -> Result<&Representation> {
        match &self.rep {
            Some(r) if !r.dims().is_zero() => Ok(r),
            Some(_) => Err(Error::UndefinedSlope),
            None => Err(bad("matrices: this command needs a representation")),
        }
    }
}

/// Parses and validates a problem file.
pub fn parse_problem(text: &str) -> Result<Problem> {
    ProblemFile::parse(text)?.validate()
}
