//! JSON file formats: algebra files and the auxiliary data files (pairs, representations,
//! cocycles, derivations).
//!
//! Products, grams and operators are sparse maps keyed by basis labels. A product or gram entry
//! given for `x.y` only is mirrored to `y.x` (negated for `omega`); an entry given both ways is
//! taken literally.

use std::collections::BTreeMap;
use std::fs;

use jforge::algebra::Algebra;
use jforge::linalg::vector;
use jforge::scalar::{self, Scalar};
use jforge::{Matrix, Subspace, Vector};
use serde::{Deserialize, Serialize};

/// Bad input; maps to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub type Sparse = BTreeMap<String, String>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub mul: BTreeMap<String, Sparse>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Sparse>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Sparse>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subspaces: BTreeMap<String, Vec<Sparse>>,
}

/// Every auxiliary input. Each command reads the fields it needs and rejects missing ones.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataFile {
    /// Operator: basis label to image vector.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<BTreeMap<String, Sparse>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x0: Option<Sparse>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a0: Option<Sparse>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    /// Representation: label of the acting algebra to an operator on the module.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<BTreeMap<String, BTreeMap<String, Sparse>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Sparse>,
    /// Labels of the target space of a central cocycle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<String>>,
    /// Bilinear table `x.y -> vector`, mirrored when given one way only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<BTreeMap<String, Sparse>>,
}

/// Parsed algebra file.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub name: String,
    pub algebra: Algebra,
    pub form: Option<Matrix>,
    pub omega: Option<Matrix>,
    pub subspaces: BTreeMap<String, Subspace>,
}

pub fn max_dim() -> Result<usize, InputError> {
    match std::env::var("JFORGE_MAX_DIM") {
        Err(_) => Ok(32),
        Ok(s) => s.trim().parse().map_err(|_| InputError(format!("JFORGE_MAX_DIM: not a dimension: {s:?}"))),
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| InputError(format!("{path}: {e}")))
}

pub fn read_data(path: &str) -> Result<DataFile, InputError> {
    read_json(path)
}

pub fn parse_scalar(s: &str, field: &str) -> Result<Scalar, InputError> {
    scalar::parse(s).ok_or_else(|| InputError(format!("{field}: not a rational number: {s:?}")))
}

/// Index lookup for basis labels.
pub struct Labels<'a> {
    pub names: &'a [String],
    pub context: String,
}

impl<'a> Labels<'a> {
    pub fn new(names: &'a [String], context: impl Into<String>) -> Self {
        Labels { names, context: context.into() }
    }

    pub fn index(&self, label: &str, field: &str) -> Result<usize, InputError> {
        self.names
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| InputError(format!("{}: {field}: unknown basis label {label:?}", self.context)))
    }

    /// Splits `x.y` at the unique dot that leaves two known labels.
    pub fn pair(&self, key: &str, field: &str) -> Result<(usize, usize), InputError> {
        let mut found = None;
        for (pos, _) in key.match_indices('.') {
            let (l, r) = (&key[..pos], &key[pos + 1..]);
            if let (Some(i), Some(j)) = (self.names.iter().position(|n| n == l), self.names.iter().position(|n| n == r)) {
                if found.is_some() {
                    return Err(InputError(format!("{}: {field}: ambiguous key {key:?}", self.context)));
                }
                found = Some((i, j));
            }
        }
        found.ok_or_else(|| {
            let unknown = key.split('.').find(|p| !self.names.iter().any(|n| n == p)).unwrap_or(key);
            InputError(format!("{}: {field}: unknown basis label {unknown:?} in key {key:?}", self.context))
        })
    }

    pub fn vector(&self, m: &Sparse, field: &str) -> Result<Vector, InputError> {
        let mut v = vector::zeros(self.names.len());
        for (label, value) in m {
            let i = self.index(label, field)?;
            v[i] = parse_scalar(value, &format!("{}: {field}[{label:?}]", self.context))?;
        }
        Ok(v)
    }

    /// Operator given by the images of basis vectors (column `i` is the image of label `i`).
    pub fn operator(&self, m: &BTreeMap<String, Sparse>, field: &str) -> Result<Matrix, InputError> {
        let n = self.names.len();
        let mut out = Matrix::zeros(n, n);
        for (label, image) in m {
            let j = self.index(label, field)?;
            let v = self.vector(image, &format!("{field}[{label:?}]"))?;
            for (i, c) in v.into_iter().enumerate() {
                out[(i, j)] = c;
            }
        }
        Ok(out)
    }

    /// Sparse gram; `sign` is `1` for symmetric completion and `-1` for antisymmetric.
    pub fn gram(&self, m: &Sparse, field: &str, sign: i64) -> Result<Matrix, InputError> {
        let n = self.names.len();
        let mut out = Matrix::zeros(n, n);
        let mut given = vec![false; n * n];
        let mut entries = Vec::new();
        for (key, value) in m {
            let (i, j) = self.pair(key, field)?;
            let c = parse_scalar(value, &format!("{}: {field}[{key:?}]", self.context))?;
            given[i * n + j] = true;
            entries.push((i, j, c));
        }
        for (i, j, c) in entries {
            if !given[j * n + i] {
                out[(j, i)] = &c * scalar::int(sign);
            }
            out[(i, j)] = c;
        }
        Ok(out)
    }

    /// Bilinear table into a space with `target` coordinates.
    pub fn table(&self, m: &BTreeMap<String, Sparse>, target: &Labels, field: &str) -> Result<Vec<Vector>, InputError> {
        let n = self.names.len();
        let mut out = vec![vector::zeros(target.names.len()); n * n];
        let mut given = vec![false; n * n];
        let mut entries = Vec::new();
        for (key, value) in m {
            let (i, j) = self.pair(key, field)?;
            let v = target.vector(value, &format!("{field}[{key:?}]"))?;
            given[i * n + j] = true;
            entries.push((i, j, v));
        }
        for (i, j, v) in entries {
            if !given[j * n + i] {
                out[j * n + i] = v.clone();
            }
            out[i * n + j] = v;
        }
        Ok(out)
    }
}

pub fn parse_algebra_file(path: &str) -> Result<Loaded, InputError> {
    let f: AlgebraFile = read_json(path)?;
    load(f, path)
}

pub fn load(f: AlgebraFile, context: &str) -> Result<Loaded, InputError> {
    let limit = max_dim()?;
    if f.dim != f.basis.len() {
        return Err(InputError(format!("{context}: dim is {} but basis has {} labels", f.dim, f.basis.len())));
    }
    if f.dim > limit {
        return Err(InputError(format!("{context}: dimension {} exceeds JFORGE_MAX_DIM={limit}", f.dim)));
    }
    for (i, l) in f.basis.iter().enumerate() {
        if l.is_empty() || f.basis[..i].contains(l) {
            return Err(InputError(format!("{context}: basis: empty or repeated label {l:?}")));
        }
    }
    let labels = Labels::new(&f.basis, context);
    let table = labels.table(&f.mul, &labels, "mul")?;
    let algebra = Algebra::new(f.basis.clone(), table).map_err(|e| InputError(format!("{context}: {e}")))?;
    let form = f.form.as_ref().map(|m| labels.gram(m, "form", 1)).transpose()?;
    let omega = f.omega.as_ref().map(|m| labels.gram(m, "omega", -1)).transpose()?;
    let mut subspaces = BTreeMap::new();
    for (name, vs) in &f.subspaces {
        let vecs: Vec<Vector> =
            vs.iter().enumerate().map(|(k, v)| labels.vector(v, &format!("subspaces[{name:?}][{k}]"))).collect::<Result<_, _>>()?;
        subspaces.insert(name.clone(), Subspace::span(f.dim, vecs));
    }
    Ok(Loaded { name: f.name, algebra, form, omega, subspaces })
}

pub fn sparse_vector(names: &[String], v: &[Scalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, c)| nz(c)).map(|(i, c)| (names[i].clone(), scalar::format(c))).collect()
}

pub fn sparse_operator(names: &[String], m: &Matrix) -> BTreeMap<String, Sparse> {
    (0..m.cols())
        .filter_map(|j| {
            let col = m.column(j);
            (!vector::is_zero(&col)).then(|| (names[j].clone(), sparse_vector(names, &col)))
        })
        .collect()
}

/// Entries `i <= j`; when the completion rule would get `j.i` wrong both entries are written.
fn sparse_gram(names: &[String], m: &Matrix, sign: i64) -> Sparse {
    let n = m.rows();
    let mut out = Sparse::new();
    for i in 0..n {
        for j in 0..n {
            let c = &m[(i, j)];
            let broken = i != j && *c != &m[(j, i)] * scalar::int(sign);
            if broken || (i <= j && nz(c)) {
                out.insert(format!("{}.{}", names[i], names[j]), scalar::format(c));
            }
        }
    }
    out
}

/// Products `x.y` with `x <= y` in basis order; noncommuting pairs are written both ways.
fn sparse_mul(a: &Algebra) -> BTreeMap<String, Sparse> {
    let nm = a.names();
    let n = a.dim();
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let p = a.product(i, j);
            if p != a.product(j, i) || (i <= j && !vector::is_zero(p)) {
                out.insert(format!("{}.{}", nm[i], nm[j]), sparse_vector(nm, p));
            }
        }
    }
    out
}

pub fn algebra_file(
    name: &str,
    a: &Algebra,
    form: Option<&Matrix>,
    omega: Option<&Matrix>,
    subspaces: &[(&str, &Subspace)],
) -> AlgebraFile {
    let nm = a.names();
    AlgebraFile {
        name: name.to_string(),
        dim: a.dim(),
        basis: nm.to_vec(),
        mul: sparse_mul(a),
        form: form.map(|f| sparse_gram(nm, f, 1)),
        omega: omega.map(|w| sparse_gram(nm, w, -1)),
        subspaces: subspaces.iter().map(|(k, s)| (k.to_string(), s.basis().iter().map(|v| sparse_vector(nm, v)).collect())).collect(),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_text<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("serializable");
    s.push('\n');
    s
}

fn nz(c: &Scalar) -> bool {
    *c != scalar::zero()
}
