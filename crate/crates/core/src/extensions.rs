//! Representations and the one-step extensions: semidirect products, central extensions,
//! T*-extensions and generalized semi-direct products by admissible pairs.

use num_traits::Zero;

use crate::algebra::{names as labels, uniquify, Algebra, JordanAlgebra};
use crate::error::{Error, Result};
use crate::forms::{self, PseudoEuclidean};
use crate::identity::{self, Degree, Violation};
use crate::linalg::vector::{self, Vector};
use crate::linalg::Matrix;
use crate::scalar::{self, frac, int, Scalar};

/// `sum_i x_i M_i`
pub fn combine(ops: &[Matrix], x: &[Scalar], rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for (c, op) in x.iter().zip(ops) {
        if !c.is_zero() {
            m = m.add(&op.scale(c));
        }
    }
    m
}

/// A bilinear map given on basis pairs: `table[i * n + j]` is the value on `(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearTable {
    pub n: usize,
    pub target: usize,
    pub table: Vec<Vector>,
}

impl BilinearTable {
    pub fn zero(n: usize, target: usize) -> Self {
        BilinearTable { n, target, table: vec![vector::zeros(target); n * n] }
    }

    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        self.table[i * self.n + j] = v;
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, v: Vector) {
        self.set(i, j, v.clone());
        self.set(j, i, v);
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.target);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    vector::axpy(&mut out, &(xi * yj), self.get(i, j));
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Symmetric tables from a parameter vector over the entries `i <= j`.
    fn from_sym_params(n: usize, target: usize, p: &[Scalar]) -> Self {
        let mut t = Self::zero(n, target);
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                t.set_sym(i, j, p[k * target..(k + 1) * target].to_vec());
                k += 1;
            }
        }
        t
    }

    fn sym_param_count(n: usize, target: usize) -> usize {
        n * (n + 1) / 2 * target
    }
}

// ---------------------------------------------------------------------------------------------
// representations

/// Checks the linearized representation identities on all ordered basis triples:
/// `pi(xy)pi(z) + pi(yz)pi(x) + pi(xz)pi(y) = pi(y)pi(xz) + pi(x)pi(yz) + pi(z)pi(xy)
///  = pi((xy)z) + pi(x)pi(z)pi(y) + pi(y)pi(z)pi(x)`.
pub fn check_representation(a: &Algebra, pi: &[Matrix]) -> Option<Violation> {
    let n = a.dim();
    let m = pi.first().map_or(0, Matrix::rows);
    let p = |v: &Vector| combine(pi, v, m, m);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (px, py, pz) = (&pi[x], &pi[y], &pi[z]);
                let pxy = p(a.product(x, y));
                let pyz = p(a.product(y, z));
                let pxz = p(a.product(x, z));
                let first = pxy.mul(pz).add(&pyz.mul(px)).add(&pxz.mul(py));
                let second = py.mul(&pxz).add(&px.mul(&pyz)).add(&pz.mul(&pxy));
                let xyz = a.mul(a.product(x, y), &a.basis(z));
                let third = p(&xyz).add(&px.mul(pz).mul(py)).add(&py.mul(pz).mul(px));
                for (cond, l, r) in [("representation (first equality)", &first, &second), ("representation (second equality)", &first, &third)] {
                    if l != r {
                        return Some(Violation {
                            condition: cond.into(),
                            indices: vec![vec![x], vec![y], vec![z]],
                            left: l.entries().to_vec(),
                            right: r.entries().to_vec(),
                        });
                    }
                }
            }
        }
    }
    None
}

/// `pi((x,y,z)) = [pi(y), [pi(x), pi(z)]]` on basis triples.
pub fn rep_associator_identity(a: &Algebra, pi: &[Matrix]) -> Option<Violation> {
    let n = a.dim();
    let m = pi.first().map_or(0, Matrix::rows);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let assoc = a.associator(&a.basis(x), &a.basis(y), &a.basis(z));
                let l = combine(pi, &assoc, m, m);
                let r = pi[y].commutator(&pi[x].commutator(&pi[z]));
                if l != r {
                    return Some(Violation {
                        condition: "associator identity".into(),
                        indices: vec![vec![x], vec![y], vec![z]],
                        left: l.entries().to_vec(),
                        right: r.entries().to_vec(),
                    });
                }
            }
        }
    }
    None
}

/// The adjoint representation `x -> R_x`.
pub fn adjoint(a: &Algebra) -> Vec<Matrix> {
    a.basis_operators()
}

/// Every condition of an admissible representation, each evaluated on its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleRepReport {
    pub representation: Option<Violation>,
    pub cond1: Option<Violation>,
    pub cond2: Option<Violation>,
    pub cond3: Option<Violation>,
}

impl AdmissibleRepReport {
    pub fn ok(&self) -> bool {
        self.failed().is_empty()
    }

    /// Names of the failing conditions in the order `representation`, `(1)`, `(2)`, `(3)`.
    pub fn failed(&self) -> Vec<&'static str> {
        [("representation", &self.representation), ("(1)", &self.cond1), ("(2)", &self.cond2), ("(3)", &self.cond3)]
            .into_iter()
            .filter(|(_, v)| v.is_some())
            .map(|(n, _)| n)
            .collect()
    }
}

fn check_rep_dims(j1: &Algebra, j2: &Algebra, pi: &[Matrix]) -> Result<()> {
    if pi.len() != j1.dim() || pi.iter().any(|m| m.rows() != j2.dim() || m.cols() != j2.dim()) {
        return Err(Error::DimensionMismatch("representation operators".into()));
    }
    Ok(())
}

/// Checks that `pi : J1 -> End(J2)` is a representation satisfying the three admissibility
/// identities, in order `representation`, `(1)`, `(2)`, `(3)`.
pub fn check_admissible_representation(j1: &Algebra, j2: &Algebra, pi: &[Matrix]) -> Result<()> {
    let rep = admissible_representation_report(j1, j2, pi)?;
    if let Some(v) = rep.representation {
        return Err(not_admissible("representation", &v, j1.names()));
    }
    let triples: [(&str, Option<Violation>, [&[String]; 3]); 3] = [
        ("(1)", rep.cond1, [j1.names(), j2.names(), j2.names()]),
        ("(2)", rep.cond2, [j1.names(), j2.names(), &[]]),
        ("(3)", rep.cond3, [j1.names(), j1.names(), j2.names()]),
    ];
    for (cond, v, names) in triples {
        if let Some(v) = v {
            return Err(not_admissible_each(cond, &v, &names));
        }
    }
    Ok(())
}

/// Evaluates the representation identities and conditions `(1)`, `(2)`, `(3)` independently.
pub fn admissible_representation_report(j1: &Algebra, j2: &Algebra, pi: &[Matrix]) -> Result<AdmissibleRepReport> {
    check_rep_dims(j1, j2, pi)?;
    let representation = check_representation(j1, pi);
    let (n1, n2) = (j1.dim(), j2.dim());
    let p = |x: &[Scalar]| combine(pi, x, n2, n2);
    let m = |u: &[Scalar], v: &[Scalar]| j2.mul(u, v);
    let two = int(2);
    let c1 = identity::check("(1)", &[n1, n2, n2], &[Degree::AtMost(2), Degree::AtMost(2), Degree::Exact(1)], |v| {
        let (x, y, yp) = (&v[0], &v[1], &v[2]);
        let px = p(x);
        let px2 = p(&j1.square(x));
        let y2 = j2.square(y);
        let pxy = px.apply(y);
        let pxyp = px.apply(yp);
        let mut l = px2.apply(&m(y, yp));
        vector::axpy(&mut l, &two, &m(&pxyp, &pxy));
        l = vector::add(&l, &m(&pxyp, &y2));
        vector::axpy(&mut l, &two, &m(&m(y, yp), &pxy));
        let ypxy = m(yp, &pxy);
        let mut r = vector::scale(&two, &px.apply(&ypxy));
        r = vector::add(&r, &px.apply(&m(yp, &y2)));
        r = vector::add(&r, &m(&px2.apply(yp), y));
        vector::axpy(&mut r, &two, &m(&ypxy, y));
        (l, r)
    });
    let c2 = identity::check("(2)", &[n1, n2], &[Degree::Exact(1), Degree::Exact(3)], |v| {
        let (x, y) = (&v[0], &v[1]);
        let px = p(x);
        let y2 = j2.square(y);
        (m(&px.apply(y), &y2), m(&px.apply(&y2), y))
    });
    let c3 = identity::check("(3)", &[n1, n1, n2], &[Degree::Exact(1), Degree::Exact(1), Degree::Exact(2)], |v| {
        let (x, xp, y) = (&v[0], &v[1], &v[2]);
        let (px, pxp) = (p(x), p(xp));
        let y2 = j2.square(y);
        let mut l = p(&j1.mul(x, xp)).apply(&y2);
        vector::axpy(&mut l, &two, &m(&pxp.apply(y), &px.apply(y)));
        let mut r = px.apply(&pxp.apply(&y2));
        vector::axpy(&mut r, &two, &m(&pxp.apply(&px.apply(y)), y));
        (l, r)
    });
    Ok(AdmissibleRepReport { representation, cond1: c1, cond2: c2, cond3: c3 })
}

fn not_admissible(cond: &str, v: &Violation, names: &[String]) -> Error {
    Error::NotAdmissible { condition: cond.to_string(), detail: format!(" ({})", v.describe(names)) }
}

fn not_admissible_each(cond: &str, v: &Violation, names: &[&[String]]) -> Error {
    Error::NotAdmissible { condition: cond.to_string(), detail: format!(" ({})", v.describe_each(names)) }
}

/// `J1 (+) J2` with `(x + y)(x' + y') = xx' + pi(x)y' + pi(x')y + yy'`.
pub fn semidirect_product(j1: &JordanAlgebra, j2: &JordanAlgebra, pi: &[Matrix]) -> Result<JordanAlgebra> {
    check_admissible_representation(j1, j2, pi)?;
    let (n1, n2) = (j1.dim(), j2.dim());
    let mut nm = j1.names().to_vec();
    nm.extend(j2.names().iter().cloned());
    let a = Algebra::from_fn(uniquify(nm), |i, j| match (i < n1, j < n1) {
        (true, true) => vector::concat(&[j1.product(i, j), &vector::zeros(n2)]),
        (true, false) => vector::concat(&[&vector::zeros(n1), &pi[i].column(j - n1)]),
        (false, true) => vector::concat(&[&vector::zeros(n1), &pi[j].column(i - n1)]),
        (false, false) => vector::concat(&[&vector::zeros(n1), j2.product(i - n1, j - n1)]),
    })?;
    verified(a, "semidirect product")
}

pub(crate) fn verified(a: Algebra, what: &str) -> Result<JordanAlgebra> {
    JordanAlgebra::new(a).map_err(|e| Error::Verification(format!("{what}: {e}")))
}

// ---------------------------------------------------------------------------------------------
// central extensions

/// Checks that `phi : J x J -> V` is symmetric and satisfies `phi(xy, x^2) = phi(x, y x^2)`.
pub fn check_central_cocycle(j: &Algebra, phi: &BilinearTable) -> Result<()> {
    if phi.n != j.dim() {
        return Err(Error::DimensionMismatch("cocycle".into()));
    }
    if !phi.is_symmetric() {
        return Err(Error::BadCocycle("not symmetric".into()));
    }
    if let Some(v) = central_violation(j, phi) {
        return Err(Error::BadCocycle(format!("cocycle identity fails at {}", v.describe(j.names()))));
    }
    Ok(())
}

fn central_violation(j: &Algebra, phi: &BilinearTable) -> Option<Violation> {
    let n = j.dim();
    identity::check("cocycle identity", &[n, n], &[Degree::Exact(3), Degree::Exact(1)], |v| {
        let (x, y) = (&v[0], &v[1]);
        let x2 = j.square(x);
        (phi.eval(&j.mul(x, y), &x2), phi.eval(x, &j.mul(y, &x2)))
    })
}

/// `J (+) V` with `(x + u)(y + v) = xy + phi(x, y)`.
pub fn central_extension(j: &JordanAlgebra, phi: &BilinearTable) -> Result<JordanAlgebra> {
    check_central_cocycle(j, phi)?;
    let (n, m) = (j.dim(), phi.target);
    let mut nm = j.names().to_vec();
    nm.extend((1..=m).map(|k| format!("z{k}")));
    let a = Algebra::from_fn(uniquify(nm), |i, k| {
        if i < n && k < n {
            vector::concat(&[j.product(i, k), phi.get(i, k)])
        } else {
            vector::zeros(n + m)
        }
    })?;
    verified(a, "central extension")
}

/// Basis of all cocycles `J x J -> K^m`.
pub fn central_cocycle_space(j: &Algebra, m: usize) -> Vec<BilinearTable> {
    let n = j.dim();
    let params = BilinearTable::sym_param_count(n, m);
    let grid_x = identity::multisets(n, Degree::Exact(3));
    let pts_x: Vec<Vector> = grid_x.iter().map(|g| identity::point(n, g)).collect();
    let res = identity::residual_columns(params, |p| {
        let phi = BilinearTable::from_sym_params(n, m, p);
        let mut out = Vec::new();
        for x in &pts_x {
            for y in 0..n {
                let y = j.basis(y);
                let x2 = j.square(x);
                out.extend(vector::sub(&phi.eval(&j.mul(x, &y), &x2), &phi.eval(x, &j.mul(&y, &x2))));
            }
        }
        out
    });
    kernel_or_all(&res, params).into_iter().map(|p| BilinearTable::from_sym_params(n, m, &p)).collect()
}

fn kernel_or_all(res: &Matrix, params: usize) -> Vec<Vector> {
    if res.rows() == 0 {
        (0..params).map(|u| vector::unit(params, u)).collect()
    } else {
        res.kernel()
    }
}

// ---------------------------------------------------------------------------------------------
// T*-extensions

/// `f o R_z` for a functional `f` in dual coordinates.
pub fn compose_r(j: &Algebra, f: &[Scalar], z: &[Scalar]) -> Vector {
    j.mult_operator(z).transpose().apply(f)
}

/// Checks symmetry and the two identities for `theta : J x J -> J*`.
pub fn check_tstar_cocycle(j: &Algebra, theta: &BilinearTable) -> Result<()> {
    let n = j.dim();
    if theta.n != n || theta.target != n {
        return Err(Error::DimensionMismatch("T* cocycle".into()));
    }
    if !theta.is_symmetric() {
        return Err(Error::BadCocycle("not symmetric".into()));
    }
    if let Some(v) = tstar_id1(j, theta) {
        return Err(Error::BadCocycle(format!("first identity fails at {}", v.describe(j.names()))));
    }
    if let Some(v) = tstar_id2(theta) {
        return Err(Error::BadCocycle(format!("cyclic identity fails at {}", v.describe(j.names()))));
    }
    Ok(())
}

/// `theta(xy,x^2) + theta(x,x) o R_{xy} + theta(x,y) o R_{x^2}
///  = theta(x,yx^2) + theta(y,x^2) o R_x + theta(x,x) o R_y R_x`
fn tstar_id1(j: &Algebra, theta: &BilinearTable) -> Option<Violation> {
    let n = j.dim();
    identity::check("first identity", &[n, n], &[Degree::Exact(3), Degree::Exact(1)], |v| id1_sides(j, theta, &v[0], &v[1]))
}

fn id1_sides(j: &Algebra, theta: &BilinearTable, x: &[Scalar], y: &[Scalar]) -> (Vector, Vector) {
    let x2 = j.square(x);
    let xy = j.mul(x, y);
    let txx = theta.eval(x, x);
    let l = vector::add(
        &vector::add(&theta.eval(&xy, &x2), &compose_r(j, &txx, &xy)),
        &compose_r(j, &theta.eval(x, y), &x2),
    );
    let r = vector::add(
        &vector::add(&theta.eval(x, &j.mul(y, &x2)), &compose_r(j, &theta.eval(y, &x2), x)),
        &compose_r(j, &compose_r(j, &txx, y), x),
    );
    (l, r)
}

/// `theta(x, y)(z) = theta(z, x)(y)`
fn tstar_id2(theta: &BilinearTable) -> Option<Violation> {
    let n = theta.n;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let l = theta.get(x, y)[z].clone();
                let r = theta.get(z, x)[y].clone();
                if l != r {
                    return Some(Violation { condition: "cyclic identity".into(), indices: vec![vec![x], vec![y], vec![z]], left: vec![l], right: vec![r] });
                }
            }
        }
    }
    None
}

/// Basis of all T*-cocycles on `J`.
pub fn tstar_cocycle_space(j: &Algebra) -> Vec<BilinearTable> {
    let n = j.dim();
    let params = BilinearTable::sym_param_count(n, n);
    let pts_x: Vec<Vector> = identity::multisets(n, Degree::Exact(3)).iter().map(|g| identity::point(n, g)).collect();
    let res = identity::residual_columns(params, |p| {
        let theta = BilinearTable::from_sym_params(n, n, p);
        let mut out = Vec::new();
        for x in &pts_x {
            for y in 0..n {
                let (l, r) = id1_sides(j, &theta, x, &j.basis(y));
                out.extend(vector::sub(&l, &r));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    out.push(&theta.get(x, y)[z] - &theta.get(z, x)[y]);
                }
            }
        }
        out
    });
    kernel_or_all(&res, params).into_iter().map(|p| BilinearTable::from_sym_params(n, n, &p)).collect()
}

/// `J (+) J*` with `(x + f)(y + h) = xy + h o R_x + f o R_y + theta(x, y)` and the hyperbolic
/// form `B(x + f, y + h) = f(y) + h(x)`.
pub fn tstar_extension(j: &JordanAlgebra, theta: &BilinearTable) -> Result<PseudoEuclidean> {
    check_tstar_cocycle(j, theta)?;
    let n = j.dim();
    let mut nm = j.names().to_vec();
    nm.extend(j.names().iter().map(|s| format!("{s}*")));
    let a = Algebra::from_fn(uniquify(nm), |i, k| match (i < n, k < n) {
        (true, true) => vector::concat(&[j.product(i, k), theta.get(i, k)]),
        (true, false) => vector::concat(&[&vector::zeros(n), &compose_r(j, &vector::unit(n, k - n), &j.basis(i))]),
        (false, true) => vector::concat(&[&vector::zeros(n), &compose_r(j, &vector::unit(n, i - n), &j.basis(k))]),
        (false, false) => vector::zeros(2 * n),
    })?;
    let alg = verified(a, "T*-extension")?;
    let mut form = Matrix::zeros(2 * n, 2 * n);
    form.set_block(0, n, &Matrix::identity(n));
    form.set_block(n, 0, &Matrix::identity(n));
    PseudoEuclidean::new(alg, form).map_err(|e| Error::Verification(format!("T*-extension form: {e}")))
}

/// `T*_0(J)`: the trivial cocycle.
pub fn tstar0(j: &JordanAlgebra) -> PseudoEuclidean {
    tstar_extension(j, &BilinearTable::zero(j.dim(), j.dim())).expect("zero cocycle is valid")
}

// ---------------------------------------------------------------------------------------------
// admissible pairs

/// `(D, x0)` with `D` an endomorphism of `J` and `x0 in J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePair {
    pub d: Matrix,
    pub x0: Vector,
}

impl AdmissiblePair {
    pub fn new(d: Matrix, x0: Vector) -> Self {
        AdmissiblePair { d, x0 }
    }

    pub fn zero(n: usize) -> Self {
        AdmissiblePair { d: Matrix::zeros(n, n), x0: vector::zeros(n) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub admissible: bool,
    pub first_violation: Option<Violation>,
    /// `None` when no form was supplied.
    pub b_symmetric: Option<bool>,
}

/// Evaluates the seven admissibility conditions in order and stops at the first failure.
pub fn check_admissible_pair(j: &Algebra, pair: &AdmissiblePair, form: Option<&Matrix>) -> PairReport {
    let b_symmetric = form.map(|g| forms::is_symmetric_operator(g, &pair.d));
    let first_violation = admissible_pair_violation(j, pair);
    PairReport { admissible: first_violation.is_none(), first_violation, b_symmetric }
}

fn admissible_pair_violation(j: &Algebra, pair: &AdmissiblePair) -> Option<Violation> {
    let n = j.dim();
    let d = &pair.d;
    let x0 = &pair.x0;
    let m = |u: &[Scalar], v: &[Scalar]| j.mul(u, v);
    let two = int(2);
    let half = frac(1, 2);
    // C1: D(x^2 y) = x^2 D(y) + 2 D(x)(xy) - 2 x(D(x) y)
    let c1 = identity::check("C1", &[n, n], &[Degree::Exact(2), Degree::Exact(1)], |v| {
        let (x, y) = (&v[0], &v[1]);
        let x2 = j.square(x);
        let dx = d.apply(x);
        let l = d.apply(&m(&x2, y));
        let mut r = m(&x2, &d.apply(y));
        vector::axpy(&mut r, &two, &m(&dx, &m(x, y)));
        vector::axpy(&mut r, &-two.clone(), &m(x, &m(&dx, y)));
        (l, r)
    });
    if c1.is_some() {
        return c1;
    }
    // C2: D(x)D(y) - D(D(x) y) = 1/2 (x0, y, x)
    let c2 = identity::check("C2", &[n, n], &[Degree::Exact(1), Degree::Exact(1)], |v| {
        let (x, y) = (&v[0], &v[1]);
        let dx = d.apply(x);
        let l = vector::sub(&m(&dx, &d.apply(y)), &d.apply(&m(&dx, y)));
        let r = vector::scale(&half, &j.associator(x0, y, x));
        (l, r)
    });
    if c2.is_some() {
        return c2;
    }
    // C3: D(x0 x) = x0 D(x)
    let c3 = identity::check("C3", &[n], &[Degree::Exact(1)], |v| (d.apply(&m(x0, &v[0])), m(x0, &d.apply(&v[0]))));
    if c3.is_some() {
        return c3;
    }
    // C4: x D(x^2) = x^2 D(x)
    let c4 = identity::check("C4", &[n], &[Degree::Exact(3)], |v| {
        let x = &v[0];
        let x2 = j.square(x);
        (m(x, &d.apply(&x2)), m(&x2, &d.apply(x)))
    });
    if c4.is_some() {
        return c4;
    }
    // C5: D^2(x^2) = 2 (D x)^2 - 2 x D^2(x) + x0 x^2
    let d2 = d.mul(d);
    let c5 = identity::check("C5", &[n], &[Degree::Exact(2)], |v| {
        let x = &v[0];
        let x2 = j.square(x);
        let dx = d.apply(x);
        let l = d2.apply(&x2);
        let mut r = vector::scale(&two, &j.square(&dx));
        vector::axpy(&mut r, &-two.clone(), &m(x, &d2.apply(x)));
        r = vector::add(&r, &m(x0, &x2));
        (l, r)
    });
    if c5.is_some() {
        return c5;
    }
    // C6: D^3(x) = 3/2 x0 D(x) - 1/2 x D(x0)
    let d3 = d2.mul(d);
    let dx0 = d.apply(x0);
    let c6 = identity::check("C6", &[n], &[Degree::Exact(1)], |v| {
        let x = &v[0];
        let mut r = vector::scale(&frac(3, 2), &m(x0, &d.apply(x)));
        vector::axpy(&mut r, &-half.clone(), &m(x, &dx0));
        (d3.apply(x), r)
    });
    if c6.is_some() {
        return c6;
    }
    // C7: D^2(x0) = x0^2
    identity::check("C7", &[], &[], |_| (d2.apply(x0), j.square(x0)))
}

pub(crate) fn require_admissible(j: &Algebra, pair: &AdmissiblePair) -> Result<()> {
    let n = j.dim();
    if pair.d.rows() != n || pair.d.cols() != n || pair.x0.len() != n {
        return Err(Error::DimensionMismatch("admissible pair".into()));
    }
    let rep = check_admissible_pair(j, pair, None);
    match rep.first_violation {
        None => Ok(()),
        Some(v) => Err(not_admissible(&v.condition, &v, j.names())),
    }
}

/// `K a (+) J` with `a a = x0`, `a x = D(x)`, and the product of `J` otherwise.
pub fn generalized_semidirect(j: &JordanAlgebra, pair: &AdmissiblePair) -> Result<JordanAlgebra> {
    require_admissible(j, pair)?;
    let mut nm = labels(&["a"]);
    nm.extend(j.names().iter().cloned());
    let a = Algebra::from_fn(uniquify(nm), |i, k| match (i, k) {
        (0, 0) => vector::concat(&[&[scalar::zero()], &pair.x0]),
        (0, k) => vector::concat(&[&[scalar::zero()], &pair.d.column(k - 1)]),
        (i, 0) => vector::concat(&[&[scalar::zero()], &pair.d.column(i - 1)]),
        (i, k) => vector::concat(&[&[scalar::zero()], j.product(i - 1, k - 1)]),
    })?;
    verified(a, "generalized semi-direct product")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn j21() -> JordanAlgebra {
        let mut a = Algebra::zero(labels(&["a1", "b1"]));
        a.set_product(0, 0, v(&[0, 1]));
        JordanAlgebra::new(a).unwrap()
    }

    fn unit() -> JordanAlgebra {
        let mut a = Algebra::zero(labels(&["e"]));
        a.set_product(0, 0, v(&[1]));
        JordanAlgebra::new(a).unwrap()
    }

    #[test]
    fn adjoint_is_admissible() {
        let j = j21();
        assert!(check_admissible_representation(&j, &j, &adjoint(&j)).is_ok());
        let s = semidirect_product(&j, &j, &adjoint(&j)).unwrap();
        assert_eq!(s.dim(), 4);
    }

    #[test]
    fn tstar0_of_unit() {
        let p = tstar0(&unit());
        assert_eq!(p.dim(), 2);
        assert_eq!(p.algebra.product(0, 1), &v(&[0, 1]));
    }

    #[test]
    fn admissible_pair_failure_is_named() {
        let j = j21();
        let d = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let rep = check_admissible_pair(&j, &AdmissiblePair::new(d, v(&[0, 0])), None);
        assert!(!rep.admissible);
        assert_eq!(rep.first_violation.unwrap().condition, "C2");
    }

    #[test]
    fn gsd_of_j21() {
        let j = j21();
        let d = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        let pair = AdmissiblePair::new(d, v(&[0, 1]));
        let g = generalized_semidirect(&j, &pair).unwrap();
        assert_eq!(g.dim(), 3);
    }
}
