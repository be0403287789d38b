//! Structural diagnostics: trace forms, radical, the Casimir-type operator and its Fitting
//! decomposition, the index, reductivity, and scalar products from intertwiners.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::forms::{self, check_pep, PseudoEuclidean};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{self, Scalar};

/// A bilinear form together with the two properties every trace form must have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceForm {
    pub gram: Matrix,
    pub symmetric: bool,
    pub associative: bool,
}

impl TraceForm {
    fn from_gram(a: &Algebra, gram: Matrix) -> Self {
        let rep = check_pep(a, &gram);
        TraceForm { symmetric: rep.symmetric, associative: rep.associative, gram }
    }
}

/// `B_pi(x, y) = tr(pi(xy))`, with `pi` given by its values on the basis.
pub fn trace_form_of_rep(a: &Algebra, pi: &[Matrix]) -> TraceForm {
    let n = a.dim();
    assert_eq!(pi.len(), n, "one operator per basis vector");
    let traces: Vec<Scalar> = pi.iter().map(Matrix::trace).collect();
    let gram = Matrix::from_fn(n, n, |i, j| vector::dot(a.product(i, j), &traces));
    TraceForm::from_gram(a, gram)
}

/// `A(x, y) = tr(R_{xy})`
pub fn albert_form(a: &Algebra) -> TraceForm {
    trace_form_of_rep(a, &a.basis_operators())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radical {
    pub radical: Subspace,
    pub semisimple: bool,
}

/// The radical as the kernel of the Albert form, checked to be a nilpotent ideal.
pub fn radical_and_semisimplicity(a: &Algebra) -> Result<Radical> {
    let albert = albert_form(a).gram;
    let radical = albert.kernel_space();
    if !a.is_ideal(&radical) {
        return Err(Error::Verification("kernel of the Albert form is not an ideal".into()));
    }
    if !a.restrict(&radical)?.is_nilpotent() {
        return Err(Error::Verification("kernel of the Albert form is not nilpotent".into()));
    }
    Ok(Radical { semisimple: radical.is_zero(), radical })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CasimirClass {
    Invertible,
    Nilpotent,
    Mixed,
}

impl CasimirClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CasimirClass::Invertible => "invertible",
            CasimirClass::Nilpotent => "nilpotent",
            CasimirClass::Mixed => "mixed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirData {
    /// `c = sum_i e_i e'_i`
    pub c: Vector,
    pub rc: Matrix,
    pub classification: CasimirClass,
    /// `B(R_c x, y) = A(x, y)` on all basis pairs.
    pub albert_matches: bool,
    /// `[R_c, R_x] = 0` for every basis `x`.
    pub commutes: bool,
    /// A second, randomly drawn pair of dual bases gives the same `c`.
    pub basis_independent: bool,
}

impl CasimirData {
    pub fn verified(&self) -> bool {
        self.albert_matches && self.commutes && self.basis_independent
    }
}

/// `sum_i f_i f'_i` for the basis `f` (columns of `p`) and its `B`-dual basis.
fn casimir_element(pe: &PseudoEuclidean, p: &Matrix) -> Vector {
    let n = pe.dim();
    let q = p.transpose().mul(&pe.form).mul(p);
    let qinv = q.inverse().expect("nondegenerate");
    let dual = p.mul(&qinv);
    let mut c = vector::zeros(n);
    for i in 0..n {
        vector::axpy(&mut c, &scalar::one(), &pe.algebra.mul(&p.column(i), &dual.column(i)));
    }
    c
}

fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| scalar::int(rng.gen_range(-3..=3)));
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn classify(m: &Matrix) -> CasimirClass {
    if m.is_invertible() {
        CasimirClass::Invertible
    } else if m.pow(m.rows() as u32).is_zero() {
        CasimirClass::Nilpotent
    } else {
        CasimirClass::Mixed
    }
}

pub fn casimir(p: &PseudoEuclidean) -> CasimirData {
    casimir_with_seed(p, 0x5eed)
}

/// [`casimir`] with the seed of the second dual-basis pair.
pub fn casimir_with_seed(p: &PseudoEuclidean, seed: u64) -> CasimirData {
    let n = p.dim();
    let alg = &p.algebra;
    let c = casimir_element(p, &Matrix::identity(n));
    let rc = alg.mult_operator(&c);
    let albert = albert_form(alg).gram;
    let albert_matches = rc.transpose().mul(&p.form) == albert;
    let commutes = alg.basis_operators().iter().all(|r| r.commutator(&rc).is_zero());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let other = casimir_element(p, &random_invertible(n, &mut rng));
    CasimirData { classification: classify(&rc), basis_independent: other == c, c, rc, albert_matches, commutes }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fitting {
    /// Image of `R_c^n`: a semisimple nondegenerate ideal.
    pub s: Subspace,
    /// Kernel of `R_c^n`: its orthogonal, with nilpotent Casimir operator.
    pub s_perp: Subspace,
}

/// Fitting decomposition relative to `R_c`, with every structural claim verified.
pub fn fitting(p: &PseudoEuclidean) -> Result<Fitting> {
    let n = p.dim();
    let alg = &p.algebra;
    let rc = casimir(p).rc;
    let power = rc.pow(n as u32);
    let (s, s_perp) = (power.image_space(), power.kernel_space());
    let fail = |m: &str| Err(Error::Verification(format!("Fitting decomposition: {m}")));
    if s.dim() + s_perp.dim() != n || !s.sum(&s_perp).is_full() {
        return fail("pieces are not complementary");
    }
    if p.perp(&s) != s_perp {
        return fail("pieces are not orthogonal");
    }
    if !alg.is_ideal(&s) || !alg.is_ideal(&s_perp) {
        return fail("pieces are not ideals");
    }
    let s_alg = alg.restrict(&s)?;
    if !albert_form(&s_alg).gram.is_invertible() {
        return fail("image is not semisimple");
    }
    let rest = p.restrict(&s_perp)?;
    if rest.dim() > 0 && classify(&casimir(&rest).rc) != CasimirClass::Nilpotent {
        return fail("kernel has a non-nilpotent Casimir operator");
    }
    Ok(Fitting { s, s_perp })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexData {
    /// A basis of the symmetric associative forms.
    pub forms: Vec<Matrix>,
    pub index: usize,
}

/// Dimension of the space of symmetric associative bilinear forms, by a linear solve on the
/// upper-triangular gram entries.
pub fn index(a: &Algebra) -> IndexData {
    let n = a.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let slot = |i: usize, j: usize| -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        pairs.iter().position(|&p| p == (i, j)).expect("pair")
    };
    let m = pairs.len();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // T(e_i e_j, e_k) - T(e_i, e_j e_k)
                let mut row = vector::zeros(m);
                for (l, c) in a.product(i, j).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    row[slot(l, k)] += c;
                }
                for (l, c) in a.product(j, k).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    row[slot(i, l)] -= c;
                }
                if !vector::is_zero(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() { (0..m).map(|i| vector::unit(m, i)).collect() } else { Matrix::from_rows(&rows).kernel() };
    let forms: Vec<Matrix> = kernel.iter().map(|v| Matrix::from_fn(n, n, |i, j| v[slot(i, j)].clone())).collect();
    IndexData { index: forms.len(), forms }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductiveReport {
    /// Number of components.
    pub r: usize,
    pub reductive: bool,
    pub dim_ann: usize,
    pub index: usize,
    pub semisimple: bool,
    pub square_full: bool,
    /// `(reductive and dim Ann <= 1) <=> ind = r` on this instance.
    pub reductive_criterion_holds: bool,
    /// `semisimple <=> (J^2 = J and ind = r)` on this instance.
    pub semisimple_criterion_holds: bool,
}

/// Checks that `components` are nonzero, nondegenerate, mutually orthogonal ideals spanning `P`,
/// each passing the necessary irreducibility test: its Casimir operator is invertible or nilpotent.
pub fn check_components(p: &PseudoEuclidean, components: &[Subspace]) -> Result<()> {
    let n = p.dim();
    let alg = &p.algebra;
    let mut total = Subspace::zero(n);
    let mut dims = 0;
    for (i, c) in components.iter().enumerate() {
        if c.ambient() != n {
            return Err(Error::BadComponents(format!("component {i} has the wrong ambient dimension")));
        }
        if c.is_zero() {
            return Err(Error::BadComponents(format!("component {i} is zero")));
        }
        if !alg.is_ideal(c) {
            return Err(Error::BadComponents(format!("component {i} is not an ideal")));
        }
        let sub = p.restrict(c).map_err(|_| Error::BadComponents(format!("component {i} is degenerate")))?;
        if classify(&casimir(&sub).rc) == CasimirClass::Mixed {
            return Err(Error::BadComponents(format!("component {i} is not B-irreducible: its Casimir operator is mixed")));
        }
        for (j, d) in components.iter().enumerate().take(i) {
            if c.basis().iter().any(|x| d.basis().iter().any(|y| !p.b(x, y).is_zero())) {
                return Err(Error::BadComponents(format!("components {j} and {i} are not orthogonal")));
            }
        }
        total = total.sum(c);
        dims += c.dim();
    }
    if dims != n || !total.is_full() {
        return Err(Error::BadComponents("components do not span the algebra as a direct sum".into()));
    }
    Ok(())
}

pub fn reductive_report(p: &PseudoEuclidean, components: &[Subspace]) -> Result<ReductiveReport> {
    check_components(p, components)?;
    let alg = &p.algebra;
    let rad = radical_and_semisimplicity(alg)?;
    let ann = alg.annihilator();
    let reductive = rad.radical == ann;
    if reductive {
        let f = fitting(p)?;
        if f.s.dim() + ann.dim() != p.dim() || !f.s.sum(&ann).is_full() {
            return Err(Error::Verification("reductive algebra is not the Fitting image plus the annihilator".into()));
        }
    }
    let r = components.len();
    let ind = index(alg).index;
    let square_full = alg.square_span().is_full();
    Ok(ReductiveReport {
        r,
        reductive,
        dim_ann: ann.dim(),
        index: ind,
        semisimple: rad.semisimple,
        square_full,
        reductive_criterion_holds: (reductive && ann.dim() <= 1) == (ind == r),
        semisimple_criterion_holds: rad.semisimple == (square_full && ind == r),
    })
}

/// Splits `P` into mutually orthogonal nondegenerate ideals by repeatedly cutting along candidate
/// ideals: the Fitting pieces, ideals generated by basis vectors, and nondegenerate lines of the
/// annihilator. The pieces are not guaranteed to be B-irreducible.
pub fn decompose(p: &PseudoEuclidean) -> Vec<Subspace> {
    let n = p.dim();
    let mut done = Vec::new();
    let mut todo = vec![Subspace::full(n)];
    while let Some(cur) = todo.pop() {
        if cur.is_zero() {
            continue;
        }
        match split_once(p, &cur) {
            Some(i) => {
                let rest = p.perp(&i).intersect(&cur);
                todo.push(rest);
                todo.push(i);
            }
            None => done.push(cur),
        }
    }
    done.sort_by(|a, b| a.pivots().cmp(b.pivots()));
    done
}

/// A proper nonzero ideal of `P` inside `cur` that is nondegenerate.
fn split_once(p: &PseudoEuclidean, cur: &Subspace) -> Option<Subspace> {
    let alg = &p.algebra;
    let proper = |s: &Subspace| !s.is_zero() && s.dim() < cur.dim() && cur.contains_space(s);
    let nondeg = |s: &Subspace| forms::restrict_gram(&p.form, s).is_invertible();
    let sub = p.restrict(cur).ok()?;
    let mut candidates = Vec::new();
    let embed = cur.basis_matrix();
    if let Ok(f) = fitting(&sub) {
        candidates.push(f.s.image(&embed));
    }
    for x in cur.basis() {
        candidates.push(alg.ideal_closure(&Subspace::span(p.dim(), [x.clone()])));
    }
    let ann = alg.annihilator().intersect(cur);
    let ab = ann.basis();
    for i in 0..ab.len() {
        for j in i..ab.len() {
            let v = if i == j { ab[i].clone() } else { vector::add(&ab[i], &ab[j]) };
            candidates.push(Subspace::span(p.dim(), [v]));
        }
    }
    candidates.into_iter().find(|s| proper(s) && alg.is_ideal(s) && nondeg(s))
}

/// Builds an associative scalar product from an intertwiner `phi: J -> J*` of the adjoint and
/// coadjoint representations. Column `i` of `phi` is `phi(e_i)` in the dual basis.
///
/// `T(x, y) = phi(x)(y)` is split into symmetric and skew parts; with `J_s` the radical of `T_s`
/// and `W` a complement of `J_s` containing the radical `J_a` of `T_a`,
/// `L = T_s` on `W`, `L = F` on `J_s` for a nondegenerate `F`, and `L(W, J_s) = 0`.
pub fn form_from_intertwiner(a: &Algebra, phi: &Matrix) -> Result<Matrix> {
    let n = a.dim();
    if phi.rows() != n || phi.cols() != n {
        return Err(Error::DimensionMismatch("intertwiner".into()));
    }
    if !phi.is_invertible() {
        return Err(Error::NotAnIntertwiner);
    }
    let ops = a.basis_operators();
    if ops.iter().any(|r| phi.mul(r) != r.transpose().mul(phi)) {
        return Err(Error::NotAnIntertwiner);
    }
    let t = phi.transpose();
    let half = scalar::frac(1, 2);
    let ts = t.add(&t.transpose()).scale(&half);
    let ta = t.sub(&t.transpose()).scale(&half);
    let js = ts.kernel_space();
    let ja = ta.kernel_space();
    if !ja.contains_space(&a.square_span()) {
        return Err(Error::Verification("J^2 is not inside the radical of the skew part".into()));
    }
    if !js.intersect(&ja).is_zero() {
        return Err(Error::Verification("radicals of the two parts meet".into()));
    }
    let w = ja.sum(&ja.sum(&js).echelon_complement());
    // projection onto J_s along W, then F = sum of squared J_s-coordinates
    let mut frame_cols = w.basis().to_vec();
    frame_cols.extend(js.basis().iter().cloned());
    let inv = Matrix::from_columns(n, &frame_cols).inverse().ok_or_else(|| Error::Verification("W and J_s are not complementary".into()))?;
    let k = w.dim();
    let ps = Matrix::from_fn(js.dim(), n, |r, c| inv[(k + r, c)].clone());
    let l = ts.add(&ps.transpose().mul(&ps));
    let rep = check_pep(a, &l);
    if !rep.ok() {
        return Err(Error::Verification("constructed form is not an associative scalar product".into()));
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::names;
    use crate::scalar::int;

    fn unit() -> PseudoEuclidean {
        let mut u = Algebra::zero(names(&["e"]));
        u.set_product(0, 0, vec![int(1)]);
        PseudoEuclidean::from_parts(u, Matrix::from_i64(&[&[1]])).unwrap()
    }

    #[test]
    fn unit_casimir_is_identity() {
        let c = casimir(&unit());
        assert_eq!(c.c, vec![int(1)]);
        assert_eq!(c.rc, Matrix::identity(1));
        assert_eq!(c.classification, CasimirClass::Invertible);
        assert!(c.verified());
    }

    #[test]
    fn unit_albert_form() {
        assert_eq!(albert_form(&unit().algebra).gram, Matrix::from_i64(&[&[1]]));
    }
}
