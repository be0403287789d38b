//! Modified Tits-Kantor-Koecher algebra `Lie(J) = J (+) H(J) (+) bar J` of a pseudo-euclidean
//! Jordan algebra, not necessarily unital, with `H(J) = L(J^2) (+) [L(J), L(J)]`.
//!
//! Brackets: `[T, a] = T a`, `[T, bar b] = -bar(theta(T) b)` with `theta(R_a + D) = R_a - D`,
//! `[a, bar b] = 2 R_ab + 2 [R_a, R_b]`. The form is `Gamma(T1, T2) + 2 B(a1, b2) + 2 B(a2, b1)`.

use num_traits::Zero;

use crate::algebra::{uniquify, JordanAlgebra};
use crate::error::{Error, Result};
use crate::forms::{self, PseudoEuclidean};
use crate::lie::LieAlgebra;
use crate::linalg::vector::{self, Vector};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{int, Scalar};

/// Basis of `H(J)` as operators on `J`, split into the two summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureSpace {
    /// `a_k in J^2` with `R_{a_k}` a basis of `L(J^2)`.
    pub squares: Vec<Vector>,
    /// `(i, j)` with `[R_{e_i}, R_{e_j}]` a basis of `[L, L]`.
    pub brackets: Vec<(usize, usize)>,
    /// Operators: `R_{a_k}` followed by the chosen commutators.
    pub ops: Vec<Matrix>,
    /// Gram matrix of `Gamma` in the basis `ops`.
    pub gamma: Matrix,
    pivots: Vec<usize>,
    solver: Matrix,
    n: usize,
}

impl StructureSpace {
    pub fn dim(&self) -> usize {
        self.ops.len()
    }

    pub fn squares_dim(&self) -> usize {
        self.squares.len()
    }

    /// Coordinates of an operator in `H`, `None` if it lies outside.
    pub fn coords(&self, t: &Matrix) -> Option<Vector> {
        let e = t.entries();
        let c = self.solver.apply(&self.pivots.iter().map(|&p| e[p].clone()).collect::<Vector>());
        (self.combine(&c) == *t).then_some(c)
    }

    pub fn combine(&self, c: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.n, self.n);
        for (ci, op) in c.iter().zip(&self.ops) {
            if !ci.is_zero() {
                m = m.add(&op.scale(ci));
            }
        }
        m
    }

    /// `[L, L]` as a subspace of `H` coordinates.
    pub fn bracket_subspace(&self) -> Subspace {
        let h = self.dim();
        let s = self.squares_dim();
        Subspace::span(h, (s..h).map(|k| vector::unit(h, k)))
    }
}

fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

/// Greedy choice of linearly independent operators, returning their indices.
fn independent(ops: &[Matrix], start: &[Matrix]) -> Vec<usize> {
    let dim = ops.first().or(start.first()).map_or(0, |m| m.entries().len());
    let mut span = Subspace::span(dim, start.iter().map(flatten));
    let mut out = Vec::new();
    for (k, op) in ops.iter().enumerate() {
        let v = flatten(op);
        if !span.contains(&v) {
            span = span.sum(&Subspace::span(dim, [v]));
            out.push(k);
        }
    }
    out
}

pub fn build_structure_space(p: &PseudoEuclidean) -> Result<StructureSpace> {
    let j = &p.algebra;
    let n = j.dim();
    let sq = j.square_span();
    if p.perp(&j.annihilator()) != sq {
        return Err(Error::Verification("Ann(J)^perp differs from J^2".into()));
    }
    let sq_ops: Vec<Matrix> = sq.basis().iter().map(|a| j.mult_operator(a)).collect();
    let sq_pick = independent(&sq_ops, &[]);
    let squares: Vec<Vector> = sq_pick.iter().map(|&k| sq.basis()[k].clone()).collect();
    let r = j.basis_operators();
    let mut gens = Vec::new();
    let mut gen_ops = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            gens.push((a, b));
            gen_ops.push(r[a].commutator(&r[b]));
        }
    }
    let br_pick = independent(&gen_ops, &[]);
    let brackets: Vec<(usize, usize)> = br_pick.iter().map(|&k| gens[k]).collect();
    let mut ops: Vec<Matrix> = sq_pick.iter().map(|&k| sq_ops[k].clone()).collect();
    ops.extend(br_pick.iter().map(|&k| gen_ops[k].clone()));
    let h = ops.len();
    let flat = Matrix::from_columns(n * n, &ops.iter().map(flatten).collect::<Vec<_>>());
    if flat.rank() != h {
        return Err(Error::NotDirect);
    }
    // rows of `flat` indexed by pivots form an invertible square block
    let (_, pivots) = flat.transpose().rref();
    let solver = Matrix::from_rows(&pivots.iter().map(|&p| flat.row(p)).collect::<Vec<_>>())
        .inverse()
        .ok_or_else(|| Error::Verification("operator basis".into()))?;
    let mut space = StructureSpace { squares, brackets, ops, gamma: Matrix::zeros(h, h), pivots, solver, n };
    space.gamma = gamma(p, &space, &gens, &gen_ops)?;
    Ok(space)
}

/// `Omega(D1, sum [R_c, R_d]) = sum B(D1 c, d)`, checked against every generator.
fn gamma(p: &PseudoEuclidean, s: &StructureSpace, gens: &[(usize, usize)], gen_ops: &[Matrix]) -> Result<Matrix> {
    let j = &p.algebra;
    let h = s.dim();
    let sd = s.squares_dim();
    let omega = |d1: &Matrix, (c, d): (usize, usize)| p.b(&d1.column(c), &j.basis(d));
    let mut g = Matrix::zeros(h, h);
    for k in 0..sd {
        for l in 0..sd {
            g[(k, l)] = p.b(&s.squares[k], &s.squares[l]);
        }
    }
    for k in sd..h {
        for l in sd..h {
            g[(k, l)] = omega(&s.ops[k], s.brackets[l - sd]);
        }
    }
    // any decomposition of a generator through the chosen basis must give the same value
    for (gen, op) in gens.iter().zip(gen_ops) {
        let c = s.coords(op).ok_or_else(|| Error::Verification("commutator outside H".into()))?;
        for k in sd..h {
            let direct = omega(&s.ops[k], *gen);
            let via: Scalar = (sd..h).map(|l| &c[l] * &g[(k, l)]).sum();
            if direct != via {
                return Err(Error::Verification(format!("Omega depends on the decomposition of [R_{}, R_{}]", j.names()[gen.0], j.names()[gen.1])));
            }
        }
    }
    Ok(g)
}

/// The algebra, its form and the operator space it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tkk {
    pub lie: LieAlgebra,
    pub space: StructureSpace,
    /// `dim J`
    pub n: usize,
}

impl Tkk {
    pub fn form(&self) -> &Matrix {
        self.lie.form().expect("built with a form")
    }

    pub fn embed(&self, x: &[Scalar]) -> Vector {
        vector::concat(&[x, &vector::zeros(self.space.dim() + self.n)])
    }

    pub fn embed_bar(&self, x: &[Scalar]) -> Vector {
        vector::concat(&[&vector::zeros(self.n + self.space.dim()), x])
    }

    pub fn embed_op(&self, t: &Matrix) -> Option<Vector> {
        let c = self.space.coords(t)?;
        Some(vector::concat(&[&vector::zeros(self.n), &c, &vector::zeros(self.n)]))
    }

    /// `[L, L]` inside the Lie algebra.
    pub fn bracket_subspace(&self) -> Subspace {
        let (n, h) = (self.n, self.space.dim());
        let sd = self.space.squares_dim();
        Subspace::span(2 * n + h, (n + sd..n + h).map(|k| vector::unit(2 * n + h, k)))
    }
}

pub fn tkk_build(p: &PseudoEuclidean) -> Result<Tkk> {
    let space = build_structure_space(p)?;
    let j = &p.algebra;
    let n = j.dim();
    let h = space.dim();
    let sd = space.squares_dim();
    let total = 2 * n + h;
    let two = int(2);
    let in_h = |t: &Matrix| space.coords(t).ok_or_else(|| Error::Verification("bracket leaves H".into()));
    let put = |off: usize, v: &[Scalar]| {
        let mut out = vector::zeros(total);
        for (i, c) in v.iter().enumerate() {
            out[off + i] = c.clone();
        }
        out
    };
    let r = j.basis_operators();
    let mut table = vec![vector::zeros(total); total * total];
    let mut set = |a: usize, b: usize, v: Vector| {
        table[b * total + a] = vector::neg(&v);
        table[a * total + b] = v;
    };
    for k in 0..h {
        for l in k + 1..h {
            set(n + k, n + l, put(n, &in_h(&space.ops[k].commutator(&space.ops[l]))?));
        }
        let theta = if k < sd { space.ops[k].clone() } else { space.ops[k].neg() };
        for i in 0..n {
            set(n + k, i, put(0, &space.ops[k].column(i)));
            set(n + k, n + h + i, put(n + h, &vector::neg(&theta.column(i))));
        }
    }
    for i in 0..n {
        for jj in 0..n {
            let t = j.mult_operator(j.product(i, jj)).add(&r[i].commutator(&r[jj])).scale(&two);
            set(i, n + h + jj, put(n, &in_h(&t)?));
        }
    }
    let mut g = Matrix::zeros(total, total);
    g.set_block(n, n, &space.gamma);
    let b2 = p.form.scale(&two);
    g.set_block(0, n + h, &b2);
    g.set_block(n + h, 0, &b2.transpose());
    if !g.is_invertible() {
        return Err(Error::Degenerate("B_L".into()));
    }
    let mut names: Vec<String> = j.names().to_vec();
    for a in &space.squares {
        names.push(format!("R({})", label(j, a)));
    }
    for &(a, b) in &space.brackets {
        names.push(format!("[R({}),R({})]", j.names()[a], j.names()[b]));
    }
    names.extend(j.names().iter().map(|s| format!("bar({s})")));
    let mut grading = vec![1i8; n];
    grading.extend(std::iter::repeat(0).take(h));
    grading.extend(std::iter::repeat(-1).take(n));
    let lie = LieAlgebra::new(uniquify(names), grading, table, Some(g))?;
    Ok(Tkk { lie, space, n })
}

fn label(j: &JordanAlgebra, a: &[Scalar]) -> String {
    let nz: Vec<usize> = (0..a.len()).filter(|&i| !a[i].is_zero()).collect();
    match nz.as_slice() {
        [i] if a[*i] == crate::scalar::one() => j.names()[*i].clone(),
        _ => nz
            .iter()
            .map(|&i| {
                let c = &a[i];
                if *c == crate::scalar::one() {
                    j.names()[i].clone()
                } else {
                    format!("{}{}", crate::scalar::format(c), j.names()[i])
                }
            })
            .collect::<Vec<_>>()
            .join("+"),
    }
}

/// `D_L`: `D` on `J` and `bar J`, `T -> [D, T]` on `H`; checked to be a derivation of the result.
pub fn lift_derivation(p: &PseudoEuclidean, t: &Tkk, d: &Matrix) -> Result<Matrix> {
    let j = &p.algebra;
    let n = j.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch("derivation".into()));
    }
    if let Some((a, b)) = j.first_derivation_failure(d) {
        return Err(Error::NotADerivation(format!("at ({}, {})", j.names()[a], j.names()[b])));
    }
    let h = t.space.dim();
    let total = 2 * n + h;
    let mut m = Matrix::zeros(total, total);
    m.set_block(0, 0, d);
    m.set_block(n + h, n + h, d);
    for k in 0..h {
        let img = t.space.coords(&d.commutator(&t.space.ops[k])).ok_or_else(|| Error::Verification("D_L leaves H".into()))?;
        for (l, c) in img.into_iter().enumerate() {
            m[(n + l, n + k)] = c;
        }
    }
    if let Some((a, b)) = t.lie.derivation_failure(&m) {
        let nm = t.lie.names();
        return Err(Error::Verification(format!("D_L is not a derivation at ({}, {})", nm[a], nm[b])));
    }
    Ok(m)
}

/// `D_L([L, L]) = [L, L]`
pub fn check_condition_d1(t: &Tkk, d_l: &Matrix) -> bool {
    let s = t.bracket_subspace();
    s.image(d_l) == s
}

/// `omega_L(x, y) = B_L(D_L x, y)`
pub fn omega_l(t: &Tkk, d_l: &Matrix) -> Matrix {
    d_l.transpose().mul(t.form())
}

/// `omega_L` vanishes between degree 0 and odd degree.
pub fn is_z2_compatible(t: &Tkk, w: &Matrix) -> bool {
    let g = t.lie.grading();
    let dim = g.len();
    (0..dim).all(|i| (0..dim).all(|k| (g[i] == 0) == (g[k] == 0) || w[(i, k)].is_zero()))
}

/// Whether `D_L` is antisymmetric for `B_L`.
pub fn is_form_antisymmetric(t: &Tkk, d_l: &Matrix) -> bool {
    forms::is_antisymmetric_operator(t.form(), d_l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{names, Algebra};
    use crate::scalar::one;

    fn unit() -> PseudoEuclidean {
        let mut a = Algebra::zero(names(&["e"]));
        a.set_product(0, 0, vec![one()]);
        PseudoEuclidean::from_parts(a, Matrix::from_i64(&[&[1]])).unwrap()
    }

    #[test]
    fn unit_gives_sl2() {
        let t = tkk_build(&unit()).unwrap();
        assert_eq!(t.lie.dim(), 3);
        let l = &t.lie;
        // basis e, R(e), bar(e)
        assert_eq!(l.bracket_basis(1, 0), &vec![one(), int(0), int(0)]);
        assert_eq!(l.bracket_basis(1, 2), &vec![int(0), int(0), int(-1)]);
        assert_eq!(l.bracket_basis(0, 2), &vec![int(0), int(2), int(0)]);
        assert!(l.killing_form().is_invertible());
    }

    #[test]
    fn zero_product_is_abelian() {
        let a = Algebra::zero(names(&["a", "b"]));
        let p = PseudoEuclidean::from_parts(a, Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        let t = tkk_build(&p).unwrap();
        assert_eq!(t.space.dim(), 0);
        assert!(t.lie.is_abelian());
    }
}
