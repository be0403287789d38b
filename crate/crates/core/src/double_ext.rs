//! Double extensions, generalized double extensions, and the inverse reductions that recover
//! them from a pseudo-euclidean Jordan algebra.

use num_traits::Zero;

use crate::algebra::{uniquify, Algebra, JordanAlgebra};
use crate::error::{Error, Result};
use crate::extensions::{check_admissible_representation, compose_r, require_admissible, AdmissiblePair};
use crate::forms::{self, check_pep, PseudoEuclidean};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{self, Scalar};

fn verified_pe(a: Algebra, form: Matrix, what: &str) -> Result<PseudoEuclidean> {
    PseudoEuclidean::from_parts(a, form).map_err(|e| Error::Verification(format!("{what}: {e}")))
}

/// `J2 (+) J1 (+) J2*` built from a pseudo-euclidean `(J1, B1)`, a Jordan algebra `J2` acting on
/// `J1` through `pi`, and a symmetric associative form `gamma` on `J2`.
pub fn double_extension(base: &PseudoEuclidean, top: &JordanAlgebra, pi: &[Matrix], gamma: &Matrix) -> Result<PseudoEuclidean> {
    let (n, m) = (base.dim(), top.dim());
    if gamma.rows() != m || gamma.cols() != m {
        return Err(Error::DimensionMismatch("gamma".into()));
    }
    check_admissible_representation(top, &base.algebra, pi)?;
    if let Some(i) = pi.iter().position(|p| !forms::is_symmetric_operator(&base.form, p)) {
        return Err(Error::SpecInvalid(format!("pi({}) is not symmetric for the base form", top.names()[i])));
    }
    let g = check_pep(top, gamma);
    if !g.symmetric || !g.associative {
        return Err(Error::SpecInvalid("gamma is not a symmetric associative form".into()));
    }
    let total = 2 * m + n;
    let mut nm = top.names().to_vec();
    nm.extend(base.names().iter().cloned());
    nm.extend(top.names().iter().map(|s| format!("{s}*")));
    let place = |x: &[Scalar], y: &[Scalar], f: &[Scalar]| vector::concat(&[x, y, f]);
    let (zm, zn) = (vector::zeros(m), vector::zeros(n));
    let a = Algebra::from_fn(uniquify(nm), |i, j| {
        let block = |k: usize| if k < m { 0 } else if k < m + n { 1 } else { 2 };
        let (bi, bj) = (block(i), block(j));
        match (bi, bj) {
            (0, 0) => place(top.product(i, j), &zn, &zm),
            (0, 1) => place(&zm, &pi[i].column(j - m), &zm),
            (1, 0) => place(&zm, &pi[j].column(i - m), &zm),
            (0, 2) => place(&zm, &zn, &compose_r(top, &vector::unit(m, j - m - n), &top.basis(i))),
            (2, 0) => place(&zm, &zn, &compose_r(top, &vector::unit(m, i - m - n), &top.basis(j))),
            (1, 1) => {
                let (y, yp) = (base.algebra.basis(i - m), base.algebra.basis(j - m));
                let phi: Vector = (0..m).map(|x| base.b(&pi[x].apply(&y), &yp)).collect();
                place(&zm, base.algebra.product(i - m, j - m), &phi)
            }
            _ => vector::zeros(total),
        }
    })?;
    let mut form = Matrix::zeros(total, total);
    form.set_block(0, 0, gamma);
    form.set_block(m, m, &base.form);
    form.set_block(0, m + n, &Matrix::identity(m));
    form.set_block(m + n, 0, &Matrix::identity(m));
    verified_pe(a, form, "double extension")
}

/// `K a (+) J1 (+) K b` with `a a = x0 + k b`, `a x = D(x) + B1(x0, x) b`,
/// `x y = xy + B1(D x, y) b`, `b` annihilating everything, `B(a, b) = 1`.
pub fn generalized_double_extension(base: &PseudoEuclidean, pair: &AdmissiblePair, k: &Scalar) -> Result<PseudoEuclidean> {
    let (an, bn) = fresh_pair_names(base.names());
    generalized_double_extension_named(base, pair, k, &an, &bn)
}

fn fresh_pair_names(existing: &[String]) -> (String, String) {
    for i in 0.. {
        let (a, b) = if i == 0 { ("a".to_string(), "b".to_string()) } else { (format!("a{i}"), format!("b{i}")) };
        if !existing.contains(&a) && !existing.contains(&b) {
            return (a, b);
        }
    }
    unreachable!()
}

pub fn generalized_double_extension_named(
    base: &PseudoEuclidean,
    pair: &AdmissiblePair,
    k: &Scalar,
    a_name: &str,
    b_name: &str,
) -> Result<PseudoEuclidean> {
    require_admissible(&base.algebra, pair)?;
    if !forms::is_symmetric_operator(&base.form, &pair.d) {
        return Err(Error::SpecInvalid("D is not symmetric for the base form".into()));
    }
    let n = base.dim();
    let mut nm = vec![a_name.to_string()];
    nm.extend(base.names().iter().cloned());
    nm.push(b_name.to_string());
    let wrap = |h: Scalar, x: &[Scalar], t: Scalar| vector::concat(&[&[h], x, &[t]]);
    let x0 = &pair.x0;
    let a = Algebra::from_fn(uniquify(nm), |i, j| {
        if i == n + 1 || j == n + 1 {
            return vector::zeros(n + 2);
        }
        match (i, j) {
            (0, 0) => wrap(scalar::zero(), x0, k.clone()),
            (0, j) | (j, 0) => {
                let x = base.algebra.basis(j - 1);
                wrap(scalar::zero(), &pair.d.column(j - 1), base.b(x0, &x))
            }
            (i, j) => {
                let (x, y) = (base.algebra.basis(i - 1), base.algebra.basis(j - 1));
                wrap(scalar::zero(), base.algebra.product(i - 1, j - 1), base.b(&pair.d.apply(&x), &y))
            }
        }
    })?;
    let mut form = Matrix::zeros(n + 2, n + 2);
    form.set_block(1, 1, &base.form);
    form[(0, n + 1)] = scalar::one();
    form[(n + 1, 0)] = scalar::one();
    verified_pe(a, form, "generalized double extension")
}

/// Data recovered by [`peel_gde`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdePeel {
    pub base: PseudoEuclidean,
    pub pair: AdmissiblePair,
    pub k: Scalar,
    pub a: Vector,
    pub b: Vector,
    /// `(K a + K b)^perp`, carrying the base algebra in its echelon basis.
    pub w: Subspace,
    /// Columns `a, w_1, .., w_r, b`: an isometric isomorphism from the re-extension onto the input.
    pub isometry: Matrix,
}

/// Coordinates relative to a hyperbolic pair `(a, b)` and `W = (K a + K b)^perp`.
pub(crate) struct HyperbolicSplit<'p> {
    p: &'p PseudoEuclidean,
    pub a: Vector,
    pub b: Vector,
    pub w: Subspace,
}

impl<'p> HyperbolicSplit<'p> {
    pub fn new(p: &'p PseudoEuclidean, a: Vector, b: Vector) -> Self {
        let w = p.perp(&Subspace::span(p.dim(), [a.clone(), b.clone()]));
        HyperbolicSplit { p, a, b, w }
    }

    /// `(alpha, w-coordinates, beta)` with `v = alpha a + w + beta b`.
    pub fn split(&self, v: &[Scalar]) -> (Scalar, Vector, Scalar) {
        let alpha = self.p.b(v, &self.b);
        let beta = self.p.b(v, &self.a);
        let mut w = v.to_vec();
        vector::axpy(&mut w, &-alpha.clone(), &self.a);
        vector::axpy(&mut w, &-beta.clone(), &self.b);
        (alpha, self.w.coordinates(&w).expect("complement decomposition"), beta)
    }

    pub fn basis_map(&self) -> Matrix {
        let mut cols = vec![self.a.clone()];
        cols.extend(self.w.basis().iter().cloned());
        cols.push(self.b.clone());
        Matrix::from_columns(self.p.dim(), &cols)
    }
}

/// `a` with `B(a, b) = 1` and `B(a, a) = 0`, from the first basis vector pairing with `b`.
pub(crate) fn hyperbolic_partner(p: &PseudoEuclidean, b: &[Scalar]) -> Option<Vector> {
    let n = p.dim();
    let i = (0..n).find(|&i| !p.b(&p.algebra.basis(i), b).is_zero())?;
    let u = vector::scale(&p.b(&p.algebra.basis(i), b).recip(), &p.algebra.basis(i));
    let mut a = u.clone();
    vector::axpy(&mut a, &-(p.b(&u, &u) / scalar::int(2)), b);
    Some(a)
}

/// Recovers `(W, T, D, x0, k)` with `P` isometric to the generalized double extension of `W`.
///
/// `b` must be a nonzero isotropic element of the annihilator.
pub fn peel_gde(p: &PseudoEuclidean, b: &[Scalar]) -> Result<GdePeel> {
    check_direction(p, b)?;
    let a = hyperbolic_partner(p, b).ok_or_else(|| Error::BadDirection("b pairs with nothing".into()))?;
    peel_gde_with(p, b, &a)
}

pub(crate) fn check_direction(p: &PseudoEuclidean, b: &[Scalar]) -> Result<()> {
    if b.len() != p.dim() {
        return Err(Error::DimensionMismatch("direction".into()));
    }
    if vector::is_zero(b) {
        return Err(Error::BadDirection("b is zero".into()));
    }
    if !p.algebra.annihilator().contains(b) {
        return Err(Error::BadDirection("b is not in the annihilator".into()));
    }
    if !p.b(b, b).is_zero() {
        return Err(Error::BadDirection("B(b, b) is not zero".into()));
    }
    Ok(())
}

/// [`peel_gde`] with a prescribed partner `a`.
pub fn peel_gde_with(p: &PseudoEuclidean, b: &[Scalar], a: &[Scalar]) -> Result<GdePeel> {
    check_direction(p, b)?;
    if p.b(a, b) != scalar::one() || !p.b(a, a).is_zero() {
        return Err(Error::BadDirection("partner must satisfy B(a, b) = 1 and B(a, a) = 0".into()));
    }
    let hs = HyperbolicSplit::new(p, a.to_vec(), b.to_vec());
    let alg = &p.algebra;
    let wb = hs.w.basis().to_vec();
    let r = wb.len();
    let names = crate::algebra::derived_names(alg.names(), &hs.w);
    let mut table = Vec::with_capacity(r * r);
    for x in &wb {
        for y in &wb {
            let (alpha, w, _) = hs.split(&alg.mul(x, y));
            if !alpha.is_zero() {
                return Err(Error::Verification("W W leaves W + K b".into()));
            }
            table.push(w);
        }
    }
    let base_alg = Algebra::new(names, table)?;
    let base = verified_pe(base_alg, forms::restrict_gram(&p.form, &hs.w), "peeled base")?;
    let (h, x0, k) = hs.split(&alg.square(a));
    if !h.is_zero() {
        return Err(Error::Verification("a a has a component along a".into()));
    }
    let dcols: Vec<Vector> = wb
        .iter()
        .map(|w| {
            let (h, dw, _) = hs.split(&alg.mul(a, w));
            debug_assert!(h.is_zero());
            dw
        })
        .collect();
    let pair = AdmissiblePair::new(Matrix::from_columns(r, &dcols), x0);
    let a_name = crate::algebra::derived_names(alg.names(), &Subspace::span(p.dim(), [a.to_vec()]))[0].clone();
    let b_name = crate::algebra::derived_names(alg.names(), &Subspace::span(p.dim(), [b.to_vec()]))[0].clone();
    let (a_name, b_name) = if a_name.starts_with('w') || b_name.starts_with('w') {
        fresh_pair_names(base.names())
    } else {
        (a_name, b_name)
    };
    let re = generalized_double_extension_named(&base, &pair, &k, &a_name, &b_name)?;
    let iso = hs.basis_map();
    if !re.is_isometric_isomorphism(p, &iso) {
        return Err(Error::Verification("re-extension is not isometric to the input".into()));
    }
    Ok(GdePeel { base, pair, k, a: a.to_vec(), b: b.to_vec(), w: hs.w, isometry: iso })
}

/// Data recovered by [`peel_de`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DePeel {
    /// `I / I^perp`, realized on `A^perp` with `A = I^perp + V`.
    pub base: PseudoEuclidean,
    pub top: JordanAlgebra,
    pub pi: Vec<Matrix>,
    pub gamma: Matrix,
    pub ideal_perp: Subspace,
    pub complement: Subspace,
    pub a_perp: Subspace,
    /// Columns map the re-extension `V (+) A^perp (+) V*` onto the input isometrically.
    pub isometry: Matrix,
}

/// Inverts [`double_extension`] along an ideal `I` with `I^perp` inside `I` and a complementary
/// subalgebra found as the echelon complement of `I`.
pub fn peel_de(p: &PseudoEuclidean, ideal: &Subspace) -> Result<DePeel> {
    let alg = &p.algebra;
    if !alg.is_ideal(ideal) {
        return Err(Error::NotAnIdeal);
    }
    let iperp = p.perp(ideal);
    if ideal.intersect(&iperp).is_zero() {
        return Err(Error::NondegenerateIdeal);
    }
    if !ideal.contains_space(&iperp) {
        return Err(Error::NotMaximalComplemented("the orthogonal of the ideal is not contained in it".into()));
    }
    let v = ideal.echelon_complement();
    if !alg.is_subalgebra(&v) {
        return Err(Error::NotMaximalComplemented("the echelon complement is not a subalgebra".into()));
    }
    let a_space = iperp.sum(&v);
    let a_perp = p.perp(&a_space);
    let n = p.dim();
    let (r, m) = (a_perp.dim(), v.dim());
    let mut cols = a_perp.basis().to_vec();
    cols.extend(iperp.basis().iter().cloned());
    cols.extend(v.basis().iter().cloned());
    let frame = Matrix::from_columns(n, &cols);
    let inv = frame.inverse().ok_or_else(|| Error::Verification("decomposition is not direct".into()))?;
    let split = |x: &[Scalar]| -> (Vector, Vector, Vector) {
        let c = inv.apply(x);
        (c[..r].to_vec(), c[r..r + m].to_vec(), c[r + m..].to_vec())
    };
    let ab = a_perp.basis();
    let mut table = Vec::with_capacity(r * r);
    for x in ab {
        for y in ab {
            let (w, _, rest) = split(&alg.mul(x, y));
            if !vector::is_zero(&rest) {
                return Err(Error::Verification("product of the ideal leaves it".into()));
            }
            table.push(w);
        }
    }
    let base_names = crate::algebra::derived_names(alg.names(), &a_perp);
    let base = verified_pe(Algebra::new(base_names, table)?, forms::restrict_gram(&p.form, &a_perp), "peeled base")?;
    let top = alg.restrict(&v)?;
    let gamma = forms::restrict_gram(&p.form, &v);
    let pi: Vec<Matrix> = v
        .basis()
        .iter()
        .map(|x| {
            let cols: Vec<Vector> = ab.iter().map(|y| split(&alg.mul(x, y)).0).collect();
            Matrix::from_columns(r, &cols)
        })
        .collect();
    let re = double_extension(&base, &top, &pi, &gamma)?;
    // dual vectors: i_l in I^perp with B(i_l, v_k) = delta_lk
    let pairing = Matrix::from_fn(m, m, |l, k| p.b(&iperp.basis()[l], &v.basis()[k]));
    let pinv = pairing.inverse().ok_or_else(|| Error::Verification("I^perp does not pair with V".into()))?;
    let duals: Vec<Vector> = (0..m)
        .map(|l| {
            let mut d = vector::zeros(n);
            for (q, ib) in iperp.basis().iter().enumerate() {
                vector::axpy(&mut d, &pinv[(l, q)], ib);
            }
            d
        })
        .collect();
    let mut icols = v.basis().to_vec();
    icols.extend(ab.iter().cloned());
    icols.extend(duals);
    let iso = Matrix::from_columns(n, &icols);
    if !re.is_isometric_isomorphism(p, &iso) {
        return Err(Error::Verification("re-extension is not isometric to the input".into()));
    }
    Ok(DePeel { base, top, pi, gamma, ideal_perp: iperp, complement: v, a_perp, isometry: iso })
}
