//! Symplectic forms, r-matrices, comultiplications and the symplectic double extension.

use num_traits::Zero;

use crate::algebra::{Algebra, JordanAlgebra};
use crate::double_ext::{self, generalized_double_extension, hyperbolic_partner, peel_gde_with, GdePeel, HyperbolicSplit};
use crate::error::{Error, Result};
use crate::extensions::AdmissiblePair;
use crate::forms::{self, PseudoEuclidean};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{rational_spectral, Matrix, Subspace};
use crate::scalar::{frac, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticReport {
    pub antisymmetric: bool,
    pub nondegenerate: bool,
    pub cyclic: bool,
    /// First basis triple with `w(xy, z) + w(yz, x) + w(zx, y) != 0`.
    pub first_violation: Option<(usize, usize, usize)>,
}

impl SymplecticReport {
    pub fn ok(&self) -> bool {
        self.antisymmetric && self.nondegenerate && self.cyclic
    }
}

pub fn check_symplectic(a: &Algebra, omega: &Matrix) -> SymplecticReport {
    let n = a.dim();
    assert_eq!((omega.rows(), omega.cols()), (n, n), "form size");
    let w = |x: &Vector, k: usize| -> Scalar { forms::eval(omega, x, &vector::unit(n, k)) };
    let mut first = None;
    'outer: for i in 0..n {
        for j in i..n {
            for k in j..n {
                let s = w(a.product(i, j), k) + w(a.product(j, k), i) + w(a.product(k, i), j);
                if !s.is_zero() {
                    first = Some((i, j, k));
                    break 'outer;
                }
            }
        }
    }
    SymplecticReport {
        antisymmetric: omega.is_antisymmetric(),
        nondegenerate: omega.is_invertible(),
        cyclic: first.is_none(),
        first_violation: first,
    }
}

/// `w(x, y) = B(D x, y)` in both directions, with the three properties that make `w` symplectic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridge {
    pub d: Matrix,
    pub omega: Matrix,
    pub derivation: bool,
    pub antisymmetric: bool,
    pub invertible: bool,
}

impl Bridge {
    pub fn symplectic(&self) -> bool {
        self.derivation && self.antisymmetric && self.invertible
    }

    fn build(p: &PseudoEuclidean, d: Matrix, omega: Matrix) -> Bridge {
        Bridge {
            derivation: p.algebra.is_derivation(&d),
            antisymmetric: forms::is_antisymmetric_operator(&p.form, &d),
            invertible: d.is_invertible(),
            d,
            omega,
        }
    }
}

/// `D = G^{-1} W^T` from `W = D^T G`.
pub fn bridge_from_omega(p: &PseudoEuclidean, omega: &Matrix) -> Bridge {
    let ginv = p.form.inverse().expect("nondegenerate");
    Bridge::build(p, ginv.mul(&omega.transpose()), omega.clone())
}

pub fn bridge_from_derivation(p: &PseudoEuclidean, d: &Matrix) -> Bridge {
    Bridge::build(p, d.clone(), d.transpose().mul(&p.form))
}

/// A pseudo-euclidean Jordan algebra with a symplectic form and its derivation `delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticPe {
    pub pe: PseudoEuclidean,
    pub omega: Matrix,
    pub delta: Matrix,
}

impl SymplecticPe {
    pub fn new(pe: PseudoEuclidean, omega: Matrix) -> Result<Self> {
        if omega.rows() != pe.dim() || omega.cols() != pe.dim() {
            return Err(Error::DimensionMismatch("symplectic form".into()));
        }
        let b = bridge_from_omega(&pe, &omega);
        Self::from_bridge(pe, b)
    }

    pub fn from_derivation(pe: PseudoEuclidean, d: &Matrix) -> Result<Self> {
        if d.rows() != pe.dim() || d.cols() != pe.dim() {
            return Err(Error::DimensionMismatch("derivation".into()));
        }
        let b = bridge_from_derivation(&pe, d);
        Self::from_bridge(pe, b)
    }

    fn from_bridge(pe: PseudoEuclidean, b: Bridge) -> Result<Self> {
        if !b.antisymmetric {
            return Err(Error::NotAntisymmetric("derivation of the symplectic form".into()));
        }
        if !b.invertible {
            return Err(Error::NotInvertible("derivation of the symplectic form".into()));
        }
        if let Some((i, j)) = pe.algebra.first_derivation_failure(&b.d) {
            let nm = pe.names();
            return Err(Error::NotADerivation(format!("at ({}, {})", nm[i], nm[j])));
        }
        let rep = check_symplectic(&pe.algebra, &b.omega);
        if !rep.ok() {
            return Err(Error::Verification("bridge produced a non-symplectic form".into()));
        }
        Ok(SymplecticPe { pe, omega: b.omega, delta: b.d })
    }

    pub fn dim(&self) -> usize {
        self.pe.dim()
    }
}

/// Nilpotency forced by an invertible derivation; `None` when `d` is not one.
pub fn check_nil1(a: &Algebra, d: &Matrix) -> Option<bool> {
    (a.is_derivation(d) && d.is_invertible()).then(|| a.is_nilpotent())
}

// ---------------------------------------------------------------------------------------------
// r-matrices

/// `r = sum r_ij e_i (x) e_j` with `r` antisymmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix(Matrix);

impl RMatrix {
    pub fn new(r: Matrix) -> Result<Self> {
        if !r.is_square() || !r.is_antisymmetric() {
            return Err(Error::NotAntisymmetric("r-matrix".into()));
        }
        Ok(RMatrix(r))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    /// `R(f) = sum f(a_i) b_i`, acting on dual coordinates.
    pub fn r_operator(&self) -> Matrix {
        self.0.transpose()
    }

    /// `U = R o phi` with `phi(x) = B(x, .)`.
    pub fn u(&self, p: &PseudoEuclidean) -> Matrix {
        self.r_operator().mul(&p.form)
    }

    /// The `r` with `U = R o phi` equal to `u`.
    pub fn from_u(p: &PseudoEuclidean, u: &Matrix) -> Result<Self> {
        let ginv = p.form.inverse().expect("nondegenerate");
        Self::new(u.mul(&ginv).transpose())
    }

    /// `r` with entries the inverse of the gram of a nondegenerate antisymmetric form.
    pub fn from_omega(omega: &Matrix) -> Result<Self> {
        let inv = omega.inverse().ok_or_else(|| Error::Degenerate("symplectic form".into()))?;
        Self::new(inv)
    }
}

fn tensor_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    (i * n + j) * n + k
}

/// `C(r) = r12 r13 - r12 r23 + r13 r23` as a dense tensor.
pub fn cjr_tensor(a: &Algebra, r: &RMatrix) -> Vec<Scalar> {
    let n = a.dim();
    let r = r.matrix();
    let mut c = vec![Scalar::zero(); n * n * n];
    let nz: Vec<(usize, usize)> = (0..n).flat_map(|k| (0..n).map(move |l| (k, l))).filter(|&(k, l)| !r[(k, l)].is_zero()).collect();
    for &(k, l) in &nz {
        for &(m, q) in &nz {
            let c2 = &r[(k, l)] * &r[(m, q)];
            // r12 r13: (e_k e_m) (x) e_l (x) e_q
            for (t, v) in a.product(k, m).iter().enumerate() {
                c[tensor_index(n, t, l, q)] += &c2 * v;
            }
            // r12 r23: e_k (x) (e_l e_m) (x) e_q
            for (t, v) in a.product(l, m).iter().enumerate() {
                c[tensor_index(n, k, t, q)] -= &c2 * v;
            }
            // r13 r23: e_k (x) e_m (x) (e_l e_q)
            for (t, v) in a.product(l, q).iter().enumerate() {
                c[tensor_index(n, k, m, t)] += &c2 * v;
            }
        }
    }
    c
}

/// `<f, R(h) R(l)> + <h, R(l) R(f)> + <l, R(f) R(h)>` on dual basis triples.
pub fn cjr_functional(a: &Algebra, r: &RMatrix) -> Vec<Scalar> {
    let n = a.dim();
    let rop = r.r_operator();
    let imgs: Vec<Vector> = (0..n).map(|p| rop.column(p)).collect();
    let prod: Vec<Vector> = (0..n * n).map(|t| a.mul(&imgs[t / n], &imgs[t % n])).collect();
    let mut c = vec![Scalar::zero(); n * n * n];
    for p in 0..n {
        for q in 0..n {
            for s in 0..n {
                c[tensor_index(n, p, q, s)] = &prod[q * n + s][p] + &prod[s * n + p][q] + &prod[p * n + q][s];
            }
        }
    }
    c
}

/// `x * y = U(x) y + x U(y)`
pub fn star_algebra(a: &Algebra, u: &Matrix) -> Result<Algebra> {
    let n = a.dim();
    Algebra::from_fn(a.names().to_vec(), |i, j| {
        let (x, y) = (vector::unit(n, i), vector::unit(n, j));
        vector::add(&a.mul(&u.column(i), &y), &a.mul(&x, &u.column(j)))
    })
}

/// `U(U(x) y + x U(y)) = U(x) U(y)` on basis pairs.
pub fn u_identity_holds(a: &Algebra, u: &Matrix) -> bool {
    let n = a.dim();
    let star = match star_algebra(a, u) {
        Ok(s) => s,
        Err(_) => return false,
    };
    (0..n).all(|i| (0..n).all(|j| u.apply(star.product(i, j)) == a.mul(&u.column(i), &u.column(j))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbeReport {
    pub u: Matrix,
    pub u_antisymmetric: bool,
    pub cjr_zero: bool,
    /// The product `x * y`, present when `C(r) = 0` and it is Jordan.
    pub star: Option<JordanAlgebra>,
    /// `U(x * y) = U(x) U(y)`
    pub u_morphism: bool,
    /// `-phi` maps `(J, *)` onto the dual algebra of `Delta_r`.
    pub dual_isomorphic: bool,
}

pub fn ybe_check(p: &PseudoEuclidean, r: &RMatrix) -> Result<YbeReport> {
    let a = &p.algebra;
    if r.matrix().rows() != a.dim() {
        return Err(Error::DimensionMismatch("r-matrix".into()));
    }
    let t = cjr_tensor(a, r);
    let f = cjr_functional(a, r);
    if t != f {
        return Err(Error::Verification("tensor and functional evaluations of C(r) disagree".into()));
    }
    let cjr_zero = t.iter().all(Zero::is_zero);
    let u = r.u(p);
    let u_antisymmetric = forms::is_antisymmetric_operator(&p.form, &u);
    let mut rep = YbeReport { u: u.clone(), u_antisymmetric, cjr_zero, star: None, u_morphism: false, dual_isomorphic: false };
    if cjr_zero {
        let star = star_algebra(a, &u)?;
        rep.u_morphism = u_identity_holds(a, &u);
        let dual = Comultiplication::from_r(a, r).dual_algebra(a.names());
        rep.dual_isomorphic = star.check_isomorphism(&dual, &p.form.neg());
        rep.star = JordanAlgebra::new(star).ok();
    }
    Ok(rep)
}

/// `Im(U)` with `w(U x, U y) = B(U x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageSymplectic {
    pub image: Subspace,
    pub algebra: JordanAlgebra,
    /// Gram matrix in the echelon basis of `image`.
    pub omega: Matrix,
}

pub fn image_u_symplectic(p: &PseudoEuclidean, r: &RMatrix) -> Result<ImageSymplectic> {
    let rep = ybe_check(p, r)?;
    if !rep.cjr_zero {
        return Err(Error::YbeFails);
    }
    let u = rep.u;
    let image = u.image_space();
    let algebra = p.algebra.restrict(&image).map_err(|e| Error::Verification(format!("image of U: {e}")))?;
    let pre: Vec<Vector> = image
        .basis()
        .iter()
        .map(|v| u.solve(v).ok_or_else(|| Error::Verification("image preimage".into())))
        .collect::<Result<_>>()?;
    let m = image.dim();
    let omega = Matrix::from_fn(m, m, |k, l| p.b(&image.basis()[k], &pre[l]));
    let rep = check_symplectic(&algebra, &omega);
    if !rep.ok() {
        return Err(Error::Verification("form on the image of U is not symplectic".into()));
    }
    Ok(ImageSymplectic { image, algebra, omega })
}

// ---------------------------------------------------------------------------------------------
// comultiplications and doubles

/// `Delta(e_i) = sum data[i][j][k] e_j (x) e_k`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comultiplication {
    n: usize,
    data: Vec<Scalar>,
}

impl Comultiplication {
    pub fn zero(n: usize) -> Self {
        Comultiplication { n, data: vec![Scalar::zero(); n * n * n] }
    }

    pub fn from_data(n: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != n * n * n {
            return Err(Error::DimensionMismatch("comultiplication".into()));
        }
        Ok(Comultiplication { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[tensor_index(self.n, i, j, k)]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// `Delta_r(x) = sum a_i x (x) b_i - a_i (x) x b_i`
    pub fn from_r(a: &Algebra, r: &RMatrix) -> Self {
        let n = a.dim();
        let r = r.matrix();
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let c = &r[(k, l)];
                    if c.is_zero() {
                        continue;
                    }
                    for (t, v) in a.product(k, i).iter().enumerate() {
                        out.data[tensor_index(n, i, t, l)] += c * v;
                    }
                    for (t, v) in a.product(i, l).iter().enumerate() {
                        out.data[tensor_index(n, i, k, t)] -= c * v;
                    }
                }
            }
        }
        out
    }

    /// `V*` with `<f g, v> = sum <f, v(1)> <g, v(2)>`.
    pub fn dual_algebra(&self, names: &[String]) -> Algebra {
        let n = self.n;
        let dn: Vec<String> = names.iter().map(|s| format!("{s}*")).collect();
        Algebra::from_fn(dn, |p, q| (0..n).map(|i| self.get(i, p, q).clone()).collect()).expect("sizes agree")
    }
}

/// `V (+) V*` with `(v + f)(w + g) = (vw + f.w + v.g) + (fg + f*w + v*g)`.
pub fn drinfeld_double(a: &Algebra, delta: &Comultiplication) -> Result<Algebra> {
    let n = a.dim();
    if delta.dim() != n {
        return Err(Error::DimensionMismatch("comultiplication".into()));
    }
    let mut names = a.names().to_vec();
    names.extend(a.names().iter().map(|s| format!("{s}*")));
    let names = crate::algebra::uniquify(names);
    Algebra::from_fn(names, |x, y| {
        let mut out = vector::zeros(2 * n);
        match (x < n, y < n) {
            (true, true) => out[..n].clone_from_slice(a.product(x, y)),
            (true, false) => {
                let (i, p) = (x, y - n);
                // v.g = sum <g, v(1)> v(2);  v*g: w -> g(w v)
                for k in 0..n {
                    out[k] = delta.get(i, p, k).clone();
                    out[n + k] = a.product(k, i)[p].clone();
                }
            }
            (false, true) => {
                let (p, i) = (x - n, y);
                // f.w = sum w(1) <f, w(2)>;  f*w: w' -> f(w w')
                for j in 0..n {
                    out[j] = delta.get(i, j, p).clone();
                    out[n + j] = a.product(i, j)[p].clone();
                }
            }
            (false, false) => {
                let (p, q) = (x - n, y - n);
                for i in 0..n {
                    out[n + i] = delta.get(i, p, q).clone();
                }
            }
        }
        out
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleReport {
    pub delta: Comultiplication,
    pub double: Algebra,
    pub is_bialgebra: bool,
}

pub fn delta_r_and_double(a: &Algebra, r: &RMatrix) -> Result<DoubleReport> {
    double_report(a, Comultiplication::from_r(a, r))
}

pub fn double_report(a: &Algebra, delta: Comultiplication) -> Result<DoubleReport> {
    let double = drinfeld_double(a, &delta)?;
    let is_bialgebra = crate::algebra::check_jordan(&double).jordan;
    Ok(DoubleReport { delta, double, is_bialgebra })
}

// ---------------------------------------------------------------------------------------------
// symplectic double extension

/// Generalized double extension with `Delta(b) = lambda b`, `Delta(x) = delta(x) - B1(a0, x) b`,
/// `Delta(a) = a0 - lambda a`.
pub fn symplectic_double_extension(
    s1: &SymplecticPe,
    pair: &AdmissiblePair,
    a0: &[Scalar],
    lambda: &Scalar,
    k: &Scalar,
) -> Result<SymplecticPe> {
    let base = &s1.pe;
    let n = base.dim();
    if a0.len() != n {
        return Err(Error::DimensionMismatch("a0".into()));
    }
    let delta = &s1.delta;
    let d = &pair.d;
    let x0 = &pair.x0;
    let rhs = vector::add(&vector::scale(lambda, x0), &vector::scale(&frac(1, 2), &delta.apply(x0)));
    if d.apply(a0) != rhs {
        return Err(Error::CompatibilityFails("D(a0) = lambda x0 + delta(x0)/2".into()));
    }
    let ra0 = base.algebra.mult_operator(a0);
    if ra0 != delta.mul(d).sub(&d.mul(delta)).add(&d.scale(lambda)) {
        return Err(Error::CompatibilityFails("R_a0 = delta D - D delta + lambda D".into()));
    }
    if lambda.is_zero() {
        return Err(Error::CompatibilityFails("lambda must be nonzero for Delta to be invertible".into()));
    }
    let p = generalized_double_extension(base, pair, k)?;
    if k * lambda != base.b(a0, x0) {
        return Err(Error::CompatibilityFails("k lambda = B1(a0, x0)".into()));
    }
    let mut big = Matrix::zeros(n + 2, n + 2);
    big[(0, 0)] = -lambda.clone();
    for i in 0..n {
        big[(i + 1, 0)] = a0[i].clone();
    }
    big.set_block(1, 1, delta);
    for j in 0..n {
        big[(n + 1, j + 1)] = -base.b(a0, &base.algebra.basis(j));
    }
    big[(n + 1, n + 1)] = lambda.clone();
    SymplecticPe::from_derivation(p, &big).map_err(|e| Error::Verification(format!("symplectic double extension: {e}")))
}

/// Data recovered by [`peel_symplectic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticPeel {
    pub base: SymplecticPe,
    pub gde: GdePeel,
    pub a0: Vector,
    pub lambda: Scalar,
}

impl SymplecticPeel {
    pub fn pair(&self) -> &AdmissiblePair {
        &self.gde.pair
    }

    pub fn k(&self) -> &Scalar {
        &self.gde.k
    }
}

/// Peels at an eigenvector of `Delta` in `Ann(J)` for its smallest rational eigenvalue.
pub fn peel_symplectic(s: &SymplecticPe) -> Result<SymplecticPeel> {
    let p = &s.pe;
    if p.dim() == 0 {
        return Err(Error::ZeroAlgebra);
    }
    if check_nil1(&p.algebra, &s.delta) != Some(true) {
        return Err(Error::Verification("algebra with an invertible derivation is not nilpotent".into()));
    }
    let ann = p.algebra.annihilator();
    if !ann.is_invariant(&s.delta) {
        return Err(Error::Verification("annihilator is not stable under Delta".into()));
    }
    let basis = ann.basis_matrix();
    let m = ann.dim();
    let restricted = Matrix::from_columns(
        m,
        &ann.basis().iter().map(|v| ann.coordinates(&s.delta.apply(v)).expect("stable")).collect::<Vec<_>>(),
    );
    let spec = rational_spectral(&restricted)?;
    let first = spec.into_iter().next().ok_or(Error::ZeroAlgebra)?;
    let b = basis.apply(&first.eigenspace.basis()[0]);
    peel_symplectic_at(s, &b)
}

/// Peels at a given eigenvector `b` of `Delta` in `Ann(J)`.
pub fn peel_symplectic_at(s: &SymplecticPe, b: &[Scalar]) -> Result<SymplecticPeel> {
    let p = &s.pe;
    double_ext::check_direction(p, b)?;
    let a = hyperbolic_partner(p, b).ok_or_else(|| Error::BadDirection("b pairs with nothing".into()))?;
    peel_symplectic_with(s, b, &a)
}

/// [`peel_symplectic_at`] with a prescribed partner `a`, `B(a, b) = 1`, `B(a, a) = 0`.
pub fn peel_symplectic_with(s: &SymplecticPe, b: &[Scalar], a: &[Scalar]) -> Result<SymplecticPeel> {
    let p = &s.pe;
    double_ext::check_direction(p, b)?;
    let db = s.delta.apply(b);
    let i = b.iter().position(|c| !c.is_zero()).expect("nonzero");
    let lambda = &db[i] / &b[i];
    if db != vector::scale(&lambda, b) {
        return Err(Error::BadDirection("b is not an eigenvector of Delta".into()));
    }
    let a = a.to_vec();
    let gde = peel_gde_with(p, b, &a)?;
    let hs = HyperbolicSplit::new(p, a.clone(), b.to_vec());
    let (alpha, a0, beta) = hs.split(&s.delta.apply(&a));
    if alpha != -lambda.clone() || !beta.is_zero() {
        return Err(Error::Verification("Delta(a) has the wrong a or b component".into()));
    }
    let wb = hs.w.basis();
    let a0_full = hs.w.combination(&a0);
    let mut cols = Vec::with_capacity(wb.len());
    for w in wb {
        let (h, dw, psi) = hs.split(&s.delta.apply(w));
        if !h.is_zero() || psi != -p.b(&a0_full, w) {
            return Err(Error::Verification("Delta on W has the wrong a or b component".into()));
        }
        cols.push(dw);
    }
    let delta_w = Matrix::from_columns(wb.len(), &cols);
    let base = SymplecticPe::from_derivation(gde.base.clone(), &delta_w)?;
    let re = symplectic_double_extension(&base, &gde.pair, &a0, &lambda, &gde.k)?;
    let iso = &gde.isometry;
    if !re.pe.is_isometric_isomorphism(p, iso) || iso.transpose().mul(&s.omega).mul(iso) != re.omega {
        return Err(Error::Verification("re-extension does not reproduce the symplectic form".into()));
    }
    Ok(SymplecticPeel { base, gde, a0, lambda })
}
