//! Named algebras: the low-dimensional nilpotent families, the non-associative five-dimensional
//! witness, unit, spin factors, symmetric matrices, truncated tensor products and trivial
//! T*-extensions.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{names, Algebra, JordanAlgebra};
use crate::error::{Error, Result};
use crate::extensions::tstar0;
use crate::forms::PseudoEuclidean;
use crate::linalg::vector::{self, Vector};
use crate::linalg::Matrix;
use crate::scalar::{frac, int, one, zero, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub algebra: JordanAlgebra,
    pub form: Option<Matrix>,
    pub notes: Vec<String>,
}

impl Entry {
    pub fn pe(&self) -> Option<PseudoEuclidean> {
        self.form.as_ref().map(|f| PseudoEuclidean { algebra: self.algebra.clone(), form: f.clone() })
    }

    fn from_pe(name: &str, p: PseudoEuclidean, notes: Vec<String>) -> Entry {
        Entry { name: name.to_string(), algebra: p.algebra, form: Some(p.form), notes }
    }
}

pub type Params = BTreeMap<String, Scalar>;

/// Catalog names with their parameters.
pub fn list() -> Vec<(&'static str, &'static str)> {
    vec![
        ("J_1_1", "a a = 0, B(a,a) = 1"),
        ("J_2_0", "zero product, hyperbolic form"),
        ("J_2_lambda", "a1 a1 = lambda b1 (param lambda)"),
        ("J_2_1", "J_2_lambda with lambda = 1"),
        ("J_3_0_k", "a2 a2 = k b2 (param k)"),
        ("J_3_0_1", "J_3_0_k with k = 1"),
        ("J_3_alpha_k", "a2 a = alpha b2, a2 a2 = alpha a + k b2 (params alpha, k)"),
        ("J_3_1_0", "J_3_alpha_k with alpha = 1, k = 0"),
        ("J_4_0_A", "extension of J_2_0 by D(a1) = alpha b1 (params alpha, eta, eps, k)"),
        ("J_4_0_B", "extension of J_2_0 by D(b1) = alpha a1 (params alpha, eta, eps, k)"),
        ("J_4_1", "extension of J_2_1 (params beta, eps, k)"),
        ("J_5_0_1", "extension of J_3_0_1 (params alpha, beta, eta1, eta2, eta3, k; eta1 in {0, alpha^2})"),
        ("J_5_1_0", "extension of J_3_1_0 (params alpha, beta, eps, eta, k)"),
        ("NONASSOC_5", "five-dimensional non-associative nilpotent witness"),
        ("UNIT_1", "e e = e"),
        ("SPIN(q1,..,qm)", "spin factor of the diagonal form q"),
        ("H_n", "symmetric n x n matrices, 1 <= n <= 4"),
        ("TENSOR(NAME,n)", "NAME tensor X K[X]/(X^(n+1))"),
        ("TSTAR0(NAME)", "trivial T*-extension of NAME"),
    ]
}

fn param(p: &Params, key: &str) -> Scalar {
    p.get(key).cloned().unwrap_or_else(zero)
}

fn check_params(p: &Params, allowed: &[&str]) -> Result<()> {
    match p.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::BadParams(format!("unknown parameter {k}"))),
        None => Ok(()),
    }
}

/// Looks up an entry by name, for example `J_2_1`, `H_2`, `SPIN(1,-1)`, `TENSOR(UNIT_1,2)`.
pub fn get(name: &str, params: &Params) -> Result<Entry> {
    let name = name.trim();
    if let Some(inner) = strip_call(name, "TSTAR0") {
        check_params(params, &[])?;
        let base = get(inner, &Params::new())?;
        let p = tstar0(&base.algebra);
        return Ok(Entry::from_pe(name, p, vec![]));
    }
    if let Some(inner) = strip_call(name, "TENSOR") {
        check_params(params, &[])?;
        let (base, n) = inner.rsplit_once(',').ok_or_else(|| Error::UnknownName(name.to_string()))?;
        let n: usize = n.trim().parse().map_err(|_| Error::BadParams(format!("bad truncation in {name}")))?;
        let base = get(base, &Params::new())?;
        let t = tensor(&base.algebra, n)?;
        return Ok(Entry { name: name.to_string(), algebra: t, form: None, notes: vec![] });
    }
    if let Some(inner) = strip_call(name, "SPIN") {
        check_params(params, &[])?;
        let q: Option<Vec<Scalar>> = inner.split(',').map(crate::scalar::parse).collect();
        let q = q.ok_or_else(|| Error::BadParams(format!("bad quadratic form in {name}")))?;
        return Ok(Entry::from_pe(name, spin(&q)?, vec![]));
    }
    if let Some(n) = name.strip_prefix("H_") {
        check_params(params, &[])?;
        let n: usize = n.parse().map_err(|_| Error::UnknownName(name.to_string()))?;
        return Ok(Entry::from_pe(name, hermitian(n)?, vec![]));
    }
    let p = params;
    let (pe, notes) = match name {
        "J_1_1" => (check_params(p, &[]).map(|_| j11())?, vec![]),
        "J_2_0" => (check_params(p, &[]).map(|_| j2(&zero()))?, vec![]),
        "J_2_1" => (check_params(p, &[]).map(|_| j2(&one()))?, vec![]),
        "J_2_lambda" => {
            check_params(p, &["lambda"])?;
            (j2(&param(p, "lambda")), vec![])
        }
        "J_3_0_1" => (check_params(p, &[]).map(|_| j3(&zero(), &one()))?, vec![]),
        "J_3_0_k" => {
            check_params(p, &["k"])?;
            (j3(&zero(), &param(p, "k")), vec![])
        }
        "J_3_1_0" => (check_params(p, &[]).map(|_| j3(&one(), &zero()))?, vec![]),
        "J_3_alpha_k" => {
            check_params(p, &["alpha", "k"])?;
            (j3(&param(p, "alpha"), &param(p, "k")), vec![])
        }
        "J_4_0_A" => {
            check_params(p, &["alpha", "eta", "eps", "k"])?;
            (j4_0_a(&param(p, "alpha"), &param(p, "eta"), &param(p, "eps"), &param(p, "k"))?, vec![J4_NOTE.to_string()])
        }
        "J_4_0_B" => {
            check_params(p, &["alpha", "eta", "eps", "k"])?;
            (j4_0_b(&param(p, "alpha"), &param(p, "eta"), &param(p, "eps"), &param(p, "k"))?, vec![J4_NOTE.to_string()])
        }
        "J_4_1" => {
            check_params(p, &["beta", "eps", "k"])?;
            (j4_1(&param(p, "beta"), &param(p, "eps"), &param(p, "k"))?, vec![])
        }
        "J_5_0_1" => {
            check_params(p, &["alpha", "beta", "eta1", "eta2", "eta3", "k"])?;
            let v = J501 {
                alpha: param(p, "alpha"),
                beta: param(p, "beta"),
                eta1: param(p, "eta1"),
                eta2: param(p, "eta2"),
                eta3: param(p, "eta3"),
                k: param(p, "k"),
            };
            (j5_0_1(&v)?, vec![J501_NOTE.to_string()])
        }
        "J_5_1_0" => {
            check_params(p, &["alpha", "beta", "eps", "eta", "k"])?;
            let v = J510 {
                alpha: param(p, "alpha"),
                beta: param(p, "beta"),
                eps: param(p, "eps"),
                eta: param(p, "eta"),
                k: param(p, "k"),
            };
            (j5_1_0(&v)?, vec![J510_NOTE.to_string()])
        }
        "NONASSOC_5" => (check_params(p, &[]).map(|_| nonassoc5())?, vec![]),
        "UNIT_1" => (check_params(p, &[]).map(|_| unit1())?, vec![]),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(Entry::from_pe(name, pe, notes))
}

fn strip_call<'a>(name: &'a str, head: &str) -> Option<&'a str> {
    name.strip_prefix(head)?.trim().strip_prefix('(')?.strip_suffix(')')
}

const J4_NOTE: &str = "a1 a1 carries no b1 term: the base J_2_0 has zero product";
const J501_NOTE: &str = "a4 a = alpha b2 + eta2 b4 as produced by the extension; eta1 must be 0 or alpha^2";
const J510_NOTE: &str = "a2 a2 = a + beta b4, a2 a = b2 + alpha b4, a4 a = alpha b2 + eps b4 as produced by the extension";

/// Product table from symmetric entries `(x, y, [(z, c)])` meaning `x y = y x = sum c z`.
pub fn table(labels: &[&str], entries: &[(&str, &str, Vec<(&str, Scalar)>)]) -> Algebra {
    let mut a = Algebra::zero(names(labels));
    let idx = |s: &str| labels.iter().position(|l| *l == s).unwrap_or_else(|| panic!("unknown label {s}"));
    for (x, y, terms) in entries {
        let mut v = vector::zeros(labels.len());
        for (z, c) in terms {
            v[idx(z)] += c;
        }
        let (i, j) = (idx(x), idx(y));
        a.set_product(i, j, v.clone());
        a.set_product(j, i, v);
    }
    a
}

/// Symmetric gram matrix from entries `(x, y, c)`.
pub fn gram(labels: &[&str], entries: &[(&str, &str, Scalar)]) -> Matrix {
    let n = labels.len();
    let idx = |s: &str| labels.iter().position(|l| *l == s).unwrap();
    let mut g = Matrix::zeros(n, n);
    for (x, y, c) in entries {
        g[(idx(x), idx(y))] = c.clone();
        g[(idx(y), idx(x))] = c.clone();
    }
    g
}

fn pe(a: Algebra, g: Matrix) -> PseudoEuclidean {
    PseudoEuclidean::from_parts(a, g).expect("catalog entry is pseudo-euclidean")
}

fn try_pe(a: Algebra, g: Matrix) -> Result<PseudoEuclidean> {
    PseudoEuclidean::from_parts(a, g).map_err(|e| Error::BadParams(e.to_string()))
}

pub fn j11() -> PseudoEuclidean {
    pe(Algebra::zero(names(&["a"])), Matrix::from_i64(&[&[1]]))
}

/// `a1 a1 = lambda b1`, `B(a1, b1) = 1`.
pub fn j2(lambda: &Scalar) -> PseudoEuclidean {
    let l = ["a1", "b1"];
    pe(table(&l, &[("a1", "a1", vec![("b1", lambda.clone())])]), gram(&l, &[("a1", "b1", one())]))
}

const J3: [&str; 3] = ["a2", "a", "b2"];

fn j3_form() -> Matrix {
    gram(&J3, &[("a2", "b2", one()), ("a", "a", one())])
}

/// `a2 a = alpha b2`, `a2 a2 = alpha a + k b2`, `a a = 0`; `alpha = 0` gives `J_3_0_k`.
pub fn j3(alpha: &Scalar, k: &Scalar) -> PseudoEuclidean {
    pe(
        table(&J3, &[("a2", "a", vec![("b2", alpha.clone())]), ("a2", "a2", vec![("a", alpha.clone()), ("b2", k.clone())])]),
        j3_form(),
    )
}

const J4: [&str; 4] = ["a3", "a1", "b1", "b3"];

fn j4_form() -> Matrix {
    gram(&J4, &[("a1", "b1", one()), ("a3", "b3", one())])
}

pub fn j4_0_a(alpha: &Scalar, eta: &Scalar, eps: &Scalar, k: &Scalar) -> Result<PseudoEuclidean> {
    try_pe(
        table(
            &J4,
            &[
                ("a3", "a3", vec![("a1", eta.clone()), ("b1", eps.clone()), ("b3", k.clone())]),
                ("a3", "b1", vec![("b3", eta.clone())]),
                ("a3", "a1", vec![("b1", alpha.clone()), ("b3", eps.clone())]),
                ("a1", "a1", vec![("b3", alpha.clone())]),
            ],
        ),
        j4_form(),
    )
}

pub fn j4_0_b(alpha: &Scalar, eta: &Scalar, eps: &Scalar, k: &Scalar) -> Result<PseudoEuclidean> {
    try_pe(
        table(
            &J4,
            &[
                ("a3", "a3", vec![("a1", eta.clone()), ("b1", eps.clone()), ("b3", k.clone())]),
                ("a3", "b1", vec![("a1", alpha.clone()), ("b3", eta.clone())]),
                ("a3", "a1", vec![("b3", eps.clone())]),
                ("b1", "b1", vec![("b3", alpha.clone())]),
            ],
        ),
        j4_form(),
    )
}

pub fn j4_1(beta: &Scalar, eps: &Scalar, k: &Scalar) -> Result<PseudoEuclidean> {
    try_pe(
        table(
            &J4,
            &[
                ("a3", "a3", vec![("b1", eps.clone()), ("b3", k.clone())]),
                ("a3", "a1", vec![("b1", beta.clone()), ("b3", eps.clone())]),
                ("a1", "a1", vec![("b1", one()), ("b3", beta.clone())]),
            ],
        ),
        j4_form(),
    )
}

const J5: [&str; 5] = ["a4", "a2", "a", "b2", "b4"];

fn j5_form() -> Matrix {
    gram(&J5, &[("a2", "b2", one()), ("a", "a", one()), ("a4", "b4", one())])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct J501 {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub eta1: Scalar,
    pub eta2: Scalar,
    pub eta3: Scalar,
    pub k: Scalar,
}

/// Extension of `J_3_0_1` by `D(a2) = alpha a + beta b2`, `D(a) = alpha b2`,
/// `x0 = eta1 a2 + eta2 a + eta3 b2`.
pub fn j5_0_1(v: &J501) -> Result<PseudoEuclidean> {
    if !(v.eta1.is_zero() || v.eta1 == &v.alpha * &v.alpha) {
        return Err(Error::BadParams("eta1 must be 0 or alpha^2".into()));
    }
    try_pe(
        table(
            &J5,
            &[
                ("a4", "a4", vec![("a2", v.eta1.clone()), ("a", v.eta2.clone()), ("b2", v.eta3.clone()), ("b4", v.k.clone())]),
                ("a4", "b2", vec![("b4", v.eta1.clone())]),
                ("a2", "a", vec![("b4", v.alpha.clone())]),
                ("a4", "a", vec![("b2", v.alpha.clone()), ("b4", v.eta2.clone())]),
                ("a4", "a2", vec![("a", v.alpha.clone()), ("b2", v.beta.clone()), ("b4", v.eta3.clone())]),
                ("a2", "a2", vec![("b2", one()), ("b4", v.beta.clone())]),
            ],
        ),
        j5_form(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct J510 {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub eps: Scalar,
    pub eta: Scalar,
    pub k: Scalar,
}

/// Extension of `J_3_1_0` by `D(a2) = alpha a + beta b2`, `D(a) = alpha b2`, `x0 = eps a + eta b2`.
pub fn j5_1_0(v: &J510) -> Result<PseudoEuclidean> {
    try_pe(
        table(
            &J5,
            &[
                ("a4", "a4", vec![("a", v.eps.clone()), ("b2", v.eta.clone()), ("b4", v.k.clone())]),
                ("a2", "a2", vec![("a", one()), ("b4", v.beta.clone())]),
                ("a2", "a", vec![("b2", one()), ("b4", v.alpha.clone())]),
                ("a4", "a2", vec![("a", v.alpha.clone()), ("b2", v.beta.clone()), ("b4", v.eta.clone())]),
                ("a4", "a", vec![("b2", v.alpha.clone()), ("b4", v.eps.clone())]),
            ],
        ),
        j5_form(),
    )
}

/// `a4 a4 = a a = 0`, `a2 a2 = a`, `a2 a = b2 + b4`, `a4 a2 = a`, `a4 a = b2`.
pub fn nonassoc5() -> PseudoEuclidean {
    pe(
        table(
            &J5,
            &[
                ("a2", "a2", vec![("a", one())]),
                ("a2", "a", vec![("b2", one()), ("b4", one())]),
                ("a4", "a2", vec![("a", one())]),
                ("a4", "a", vec![("b2", one())]),
            ],
        ),
        j5_form(),
    )
}

pub fn unit1() -> PseudoEuclidean {
    pe(table(&["e"], &[("e", "e", vec![("e", one())])]), Matrix::from_i64(&[&[1]]))
}

/// `K 1 (+) V` with `v w = q(v, w) 1`, `q` diagonal; form `B(s + v, t + w) = s t + q(v, w)`.
pub fn spin(q: &[Scalar]) -> Result<PseudoEuclidean> {
    if q.iter().any(Zero::is_zero) {
        return Err(Error::BadParams("q must be nondegenerate".into()));
    }
    let m = q.len();
    let mut labels = vec!["u".to_string()];
    labels.extend((1..=m).map(|i| format!("v{i}")));
    let n = m + 1;
    let a = Algebra::from_fn(labels, |i, j| {
        let mut v = vector::zeros(n);
        match (i, j) {
            (0, 0) => v[0] = one(),
            (0, j) => v[j] = one(),
            (i, 0) => v[i] = one(),
            (i, j) if i == j => v[0] = q[i - 1].clone(),
            _ => {}
        }
        v
    })?;
    let mut g = Matrix::zeros(n, n);
    g[(0, 0)] = one();
    for i in 1..n {
        g[(i, i)] = q[i - 1].clone();
    }
    try_pe(a, g)
}

/// Symmetric `n x n` matrices with `x o y = (xy + yx) / 2` and `B(x, y) = tr(x o y)`.
pub fn hermitian(n: usize) -> Result<PseudoEuclidean> {
    if !(1..=4).contains(&n) {
        return Err(Error::BadParams("H_n needs 1 <= n <= 4".into()));
    }
    let mut basis: Vec<(String, Matrix)> = Vec::new();
    for i in 0..n {
        let mut m = Matrix::zeros(n, n);
        m[(i, i)] = one();
        basis.push((format!("E{}{}", i + 1, i + 1), m));
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut m = Matrix::zeros(n, n);
            m[(i, j)] = one();
            m[(j, i)] = one();
            basis.push((format!("E{}{}", i + 1, j + 1), m));
        }
    }
    let d = basis.len();
    let coords = |m: &Matrix| -> Vector {
        let mut v = vector::zeros(d);
        let mut k = n;
        for i in 0..n {
            v[i] = m[(i, i)].clone();
        }
        for i in 0..n {
            for j in i + 1..n {
                v[k] = m[(i, j)].clone();
                k += 1;
            }
        }
        v
    };
    let jordan = |x: &Matrix, y: &Matrix| x.mul(y).add(&y.mul(x)).scale(&frac(1, 2));
    let labels: Vec<String> = basis.iter().map(|(s, _)| s.clone()).collect();
    let a = Algebra::from_fn(labels, |i, j| coords(&jordan(&basis[i].1, &basis[j].1)))?;
    let g = Matrix::from_fn(d, d, |i, j| jordan(&basis[i].1, &basis[j].1).trace());
    try_pe(a, g)
}

/// `J (x) X K[X]/(X^(n+1))`, basis `e_i X^k` for `1 <= k <= n`, grouped by power.
pub fn tensor(j: &Algebra, n: usize) -> Result<JordanAlgebra> {
    let d = j.dim();
    let mut labels = Vec::new();
    for k in 1..=n {
        for nm in j.names() {
            labels.push(format!("{nm}X{k}"));
        }
    }
    let a = Algebra::from_fn(labels, |p, q| {
        let (kp, ip) = (p / d + 1, p % d);
        let (kq, iq) = (q / d + 1, q % d);
        let mut v = vector::zeros(d * n);
        if kp + kq <= n {
            let off = (kp + kq - 1) * d;
            for (t, c) in j.product(ip, iq).iter().enumerate() {
                v[off + t] = c.clone();
            }
        }
        v
    })?;
    JordanAlgebra::new(a)
}

/// `D(x X^i) = i x X^i` on [`tensor`] coordinates.
pub fn tensor_grading(j: &Algebra, n: usize) -> Matrix {
    let d = j.dim();
    let mut m = Matrix::zeros(d * n, d * n);
    for k in 1..=n {
        for i in 0..d {
            m[((k - 1) * d + i, (k - 1) * d + i)] = int(k as i64);
        }
    }
    m
}

/// `T*_0(J (x) X K[X]/(X^(n+1)))` with `bar D(a + f) = D(a) - f o D`, `D` from [`tensor_grading`].
pub fn tensor_symplectic_example(j: &Algebra, n: usize) -> Result<(PseudoEuclidean, Matrix)> {
    let t = tensor(j, n)?;
    let d = tensor_grading(j, n);
    let dbar = d.direct_sum(&d.transpose().neg());
    Ok((tstar0(&t), dbar))
}

/// The explicit isomorphism `J_2_lambda -> J_2_1`, `b1 -> b1 / lambda`.
pub fn phi2(lambda: &Scalar) -> Matrix {
    let mut m = Matrix::identity(2);
    m[(1, 1)] = lambda.recip();
    m
}

/// The explicit isomorphism `J_3_0_k -> J_3_0_1`, `b2 -> b2 / k`.
pub fn phi3(k: &Scalar) -> Matrix {
    let mut m = Matrix::identity(3);
    m[(2, 2)] = k.recip();
    m
}

/// `J_3_alpha_k -> J_3_1_0`: `a2 -> alpha a2 + (k/2) a`, `a -> alpha a`, `b2 -> alpha b2`.
pub fn phi_alpha(alpha: &Scalar, k: &Scalar) -> Matrix {
    let mut m = Matrix::zeros(3, 3);
    m[(0, 0)] = alpha.clone();
    m[(1, 0)] = k / int(2);
    m[(1, 1)] = alpha.clone();
    m[(2, 2)] = alpha.clone();
    m
}
