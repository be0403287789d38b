//! Seeded generators of small valid and invalid inputs for every extension machine.
//!
//! Each valid family is admissible for structural reasons (zero products, adjoint actions,
//! scalar derivations of units, nilpotent families on `J_2_0`), so the generators never rely
//! on the checkers they are meant to exercise.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::JordanAlgebra;
use crate::catalog::{self, Params};
use crate::double_ext::{double_extension, generalized_double_extension};
use crate::error::Result;
use crate::extensions::{
    adjoint, central_cocycle_space, central_extension, generalized_semidirect, semidirect_product, tstar_cocycle_space,
    tstar_extension, AdmissiblePair, BilinearTable,
};
use crate::forms::PseudoEuclidean;
use crate::linalg::vector::{self, Vector};
use crate::linalg::{Matrix, Subspace};
use crate::manin::{manin_double_extension, ManinTriple};
use crate::scalar::{frac, int, zero, Scalar};
use crate::symplectic::{symplectic_double_extension, SymplecticPe};

/// Small pseudo-euclidean catalog entries used as bases and tops.
pub const SMALL_PE: &[&str] = &["J_1_1", "J_2_0", "J_2_1", "J_3_0_1", "J_3_1_0", "UNIT_1", "H_1", "H_2", "SPIN(1,-1)"];

/// The machines exercised by the generators.
pub const MACHINES: &[&str] = &["central", "tstar", "sdp", "gsd", "de", "gde"];

fn pe(name: &str) -> PseudoEuclidean {
    catalog::get(name, &Params::new()).and_then(|e| e.pe().ok_or(crate::Error::UnknownName(name.into()))).expect("catalog entry")
}

fn alg(name: &str) -> JordanAlgebra {
    catalog::get(name, &Params::new()).expect("catalog entry").algebra
}

#[derive(Clone, Debug)]
pub struct CentralSpec {
    pub j: JordanAlgebra,
    pub phi: BilinearTable,
}

#[derive(Clone, Debug)]
pub struct TstarSpec {
    pub j: JordanAlgebra,
    pub theta: BilinearTable,
}

#[derive(Clone, Debug)]
pub struct SdpSpec {
    pub j1: JordanAlgebra,
    pub j2: JordanAlgebra,
    pub pi: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub struct GsdSpec {
    pub j: JordanAlgebra,
    pub pair: AdmissiblePair,
}

#[derive(Clone, Debug)]
pub struct DeSpec {
    pub base: PseudoEuclidean,
    pub top: JordanAlgebra,
    pub pi: Vec<Matrix>,
    pub gamma: Matrix,
}

#[derive(Clone, Debug)]
pub struct GdeSpec {
    pub base: PseudoEuclidean,
    pub pair: AdmissiblePair,
    pub k: Scalar,
}

#[derive(Clone, Debug)]
pub struct SympDeSpec {
    pub base: SymplecticPe,
    pub pair: AdmissiblePair,
    pub a0: Vector,
    pub lambda: Scalar,
    pub k: Scalar,
}

#[derive(Clone, Debug)]
pub struct ManinDeSpec {
    pub triple: ManinTriple,
    pub pair: AdmissiblePair,
}

/// Output of one machine run.
#[derive(Clone, Debug)]
pub enum Built {
    Algebra(JordanAlgebra),
    Pe(PseudoEuclidean),
}

impl Built {
    pub fn algebra(&self) -> &JordanAlgebra {
        match self {
            Built::Algebra(a) => a,
            Built::Pe(p) => &p.algebra,
        }
    }

    pub fn form(&self) -> Option<&Matrix> {
        match self {
            Built::Algebra(_) => None,
            Built::Pe(p) => Some(&p.form),
        }
    }
}

/// A machine input of any kind.
#[derive(Clone, Debug)]
pub enum Spec {
    Central(CentralSpec),
    Tstar(TstarSpec),
    Sdp(SdpSpec),
    Gsd(GsdSpec),
    De(DeSpec),
    Gde(GdeSpec),
}

impl Spec {
    pub fn machine(&self) -> &'static str {
        match self {
            Spec::Central(_) => "central",
            Spec::Tstar(_) => "tstar",
            Spec::Sdp(_) => "sdp",
            Spec::Gsd(_) => "gsd",
            Spec::De(_) => "de",
            Spec::Gde(_) => "gde",
        }
    }

    pub fn build(&self) -> Result<Built> {
        Ok(match self {
            Spec::Central(s) => Built::Algebra(central_extension(&s.j, &s.phi)?),
            Spec::Tstar(s) => Built::Pe(tstar_extension(&s.j, &s.theta)?),
            Spec::Sdp(s) => Built::Algebra(semidirect_product(&s.j1, &s.j2, &s.pi)?),
            Spec::Gsd(s) => Built::Algebra(generalized_semidirect(&s.j, &s.pair)?),
            Spec::De(s) => Built::Pe(double_extension(&s.base, &s.top, &s.pi, &s.gamma)?),
            Spec::Gde(s) => Built::Pe(generalized_double_extension(&s.base, &s.pair, &s.k)?),
        })
    }
}

/// An input that breaks exactly one condition; `expect` is a fragment of the error message
/// naming that condition.
#[derive(Clone, Debug)]
pub struct Invalid {
    pub spec: Spec,
    pub expect: &'static str,
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// `p / q` with `|p| <= 3` and `q` in `{1, 2}`.
    pub fn scalar(&mut self) -> Scalar {
        frac(self.rng.gen_range(-3..=3), self.rng.gen_range(1..=2))
    }

    pub fn nonzero(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if s != zero() {
                return s;
            }
        }
    }

    fn pick<'a>(&mut self, xs: &[&'a str]) -> &'a str {
        xs.choose(&mut self.rng).expect("nonempty")
    }

    fn combination(&mut self, s: &Subspace) -> Vector {
        let c: Vector = (0..s.dim()).map(|_| self.scalar()).collect();
        s.combination(&c)
    }

    fn mix(&mut self, basis: &[Vector], len: usize) -> Vector {
        let mut acc = vector::zeros(len);
        for b in basis {
            let c = self.scalar();
            vector::axpy(&mut acc, &c, b);
        }
        acc
    }

    fn nilpotent_j20(&mut self, b_family: bool) -> Matrix {
        // A: D(a1) = alpha b1; B: D(b1) = alpha a1
        let alpha = self.scalar();
        let mut d = Matrix::zeros(2, 2);
        if b_family {
            d[(0, 1)] = alpha;
        } else {
            d[(1, 0)] = alpha;
        }
        d
    }

    pub fn spec(&mut self, machine: &str) -> Spec {
        match machine {
            "central" => Spec::Central(self.central()),
            "tstar" => Spec::Tstar(self.tstar()),
            "sdp" => Spec::Sdp(self.sdp()),
            "gsd" => Spec::Gsd(self.gsd()),
            "de" => Spec::De(self.de()),
            "gde" => Spec::Gde(self.gde()),
            other => panic!("unknown machine {other}"),
        }
    }

    pub fn central(&mut self) -> CentralSpec {
        let j = alg(self.pick(SMALL_PE));
        let m = self.rng.gen_range(1..=2);
        let space = central_cocycle_space(&j, m);
        let tables: Vec<Vector> = space.iter().map(|t| t.table.concat()).collect();
        let flat = self.mix(&tables, j.dim() * j.dim() * m);
        CentralSpec { phi: unflatten(j.dim(), m, &flat), j }
    }

    pub fn tstar(&mut self) -> TstarSpec {
        let j = alg(self.pick(SMALL_PE));
        let n = j.dim();
        let tables: Vec<Vector> = tstar_cocycle_space(&j).iter().map(|t| t.table.concat()).collect();
        let flat = self.mix(&tables, n * n * n);
        TstarSpec { theta: unflatten(n, n, &flat), j }
    }

    pub fn sdp(&mut self) -> SdpSpec {
        match self.rng.gen_range(0..4) {
            0 => {
                let (j1, j2) = (alg(self.pick(SMALL_PE)), alg(self.pick(SMALL_PE)));
                let pi = vec![Matrix::zeros(j2.dim(), j2.dim()); j1.dim()];
                SdpSpec { j1, j2, pi }
            }
            1 => {
                let j = alg(self.pick(SMALL_PE));
                SdpSpec { pi: adjoint(&j), j1: j.clone(), j2: j }
            }
            2 => {
                let j2 = alg(self.pick(SMALL_PE));
                SdpSpec { pi: vec![Matrix::identity(j2.dim())], j1: alg("UNIT_1"), j2 }
            }
            _ => {
                // J_1_1 acting on a zero-product space through N with N^3 = 0
                let m = self.rng.gen_range(1..=3);
                let mut n = Matrix::zeros(m, m);
                for i in 0..m {
                    for k in i + 1..m {
                        n[(i, k)] = self.scalar();
                    }
                }
                let j2 = JordanAlgebra::new(crate::Algebra::zero((1..=m).map(|i| format!("y{i}")).collect())).expect("zero algebra");
                SdpSpec { j1: alg("J_1_1"), j2, pi: vec![n] }
            }
        }
    }

    pub fn gsd(&mut self) -> GsdSpec {
        match self.rng.gen_range(0..3) {
            0 => {
                let j = alg(self.pick(SMALL_PE));
                let x0 = self.combination(&j.annihilator());
                GsdSpec { pair: AdmissiblePair::new(Matrix::zeros(j.dim(), j.dim()), x0), j }
            }
            1 => {
                // square-zero D = [[pq, -p^2], [q^2, -pq]] on the zero algebra J_2_0
                let (p, q) = (self.scalar(), self.scalar());
                let mut d = Matrix::zeros(2, 2);
                d[(0, 0)] = &p * &q;
                d[(0, 1)] = -(&p * &p);
                d[(1, 0)] = &q * &q;
                d[(1, 1)] = -(&p * &q);
                let x0 = vec![self.scalar(), self.scalar()];
                GsdSpec { j: alg("J_2_0"), pair: AdmissiblePair::new(d, x0) }
            }
            _ => {
                let (p, d) = self.unit_pair();
                GsdSpec { j: p.algebra, pair: d }
            }
        }
    }

    /// `UNIT_1` or `UNIT_1 (+) UNIT_1` with `D` diagonal and `x0 = D^2(1)`.
    fn unit_pair(&mut self) -> (PseudoEuclidean, AdmissiblePair) {
        let u = pe("UNIT_1");
        let two = self.rng.gen_bool(0.5);
        let p = if two { u.orthogonal_sum(&u) } else { u };
        let n = p.dim();
        let ds: Vec<Scalar> = (0..n).map(|_| self.scalar()).collect();
        let mut d = Matrix::zeros(n, n);
        for (i, x) in ds.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        let x0 = ds.iter().map(|x| x * x).collect();
        (p, AdmissiblePair::new(d, x0))
    }

    pub fn de(&mut self) -> DeSpec {
        match self.rng.gen_range(0..4) {
            0 => {
                let base = pe(self.pick(SMALL_PE));
                let top = pe(self.pick(SMALL_PE));
                let pi = vec![Matrix::zeros(base.dim(), base.dim()); top.dim()];
                let t = self.scalar();
                DeSpec { base, gamma: top.form.scale(&t), top: top.algebra, pi }
            }
            1 => {
                let p = pe(self.pick(SMALL_PE));
                let t = self.scalar();
                DeSpec { pi: adjoint(&p.algebra), gamma: p.form.scale(&t), top: p.algebra.clone(), base: p }
            }
            2 => {
                let base = pe(self.pick(SMALL_PE));
                let t = self.scalar();
                DeSpec { pi: vec![Matrix::identity(base.dim())], top: alg("UNIT_1"), gamma: Matrix::scalar(1, &t), base }
            }
            _ => {
                let b = self.rng.gen_bool(0.5);
                let n = self.nilpotent_j20(b);
                let t = self.scalar();
                DeSpec { base: pe("J_2_0"), top: alg("J_1_1"), pi: vec![n], gamma: Matrix::scalar(1, &t) }
            }
        }
    }

    pub fn gde(&mut self) -> GdeSpec {
        let k = self.scalar();
        match self.rng.gen_range(0..3) {
            0 => {
                let base = pe(self.pick(SMALL_PE));
                let x0 = self.combination(&base.algebra.annihilator());
                GdeSpec { pair: AdmissiblePair::new(Matrix::zeros(base.dim(), base.dim()), x0), base, k }
            }
            1 => {
                let b = self.rng.gen_bool(0.5);
                let d = self.nilpotent_j20(b);
                let x0 = vec![self.scalar(), self.scalar()];
                GdeSpec { base: pe("J_2_0"), pair: AdmissiblePair::new(d, x0), k }
            }
            _ => {
                let (base, pair) = self.unit_pair();
                GdeSpec { base, pair, k }
            }
        }
    }

    /// Symplectic data on `J_2_0` with `delta = diag(mu, -mu)`.
    pub fn sympde(&mut self) -> SympDeSpec {
        let mu = self.nonzero();
        let j20 = pe("J_2_0");
        let mut delta = Matrix::zeros(2, 2);
        delta[(0, 0)] = mu.clone();
        delta[(1, 1)] = -mu.clone();
        let base = SymplecticPe::from_derivation(j20, &delta).expect("diag(mu, -mu) is symplectic on J_2_0");
        let three_halves = frac(3, 2);
        match self.rng.gen_range(0..3) {
            0 => {
                // D(a1) = alpha b1, lambda = 2 mu, x0 = eps b1
                let alpha = self.nonzero();
                let eps = self.scalar();
                let lambda = int(2) * &mu;
                let a0a = &three_halves * &mu * &eps / &alpha;
                let a0 = vec![a0a.clone(), self.scalar()];
                let k = &a0a * &eps / &lambda;
                let mut d = Matrix::zeros(2, 2);
                d[(1, 0)] = alpha;
                SympDeSpec { base, pair: AdmissiblePair::new(d, vec![zero(), eps]), a0, lambda, k }
            }
            1 => {
                // D(b1) = alpha a1, lambda = -2 mu, x0 = eta a1
                let alpha = self.nonzero();
                let eta = self.scalar();
                let lambda = int(-2) * &mu;
                let a0b = -(&three_halves * &mu * &eta / &alpha);
                let a0 = vec![self.scalar(), a0b.clone()];
                let k = &a0b * &eta / &lambda;
                let mut d = Matrix::zeros(2, 2);
                d[(0, 1)] = alpha;
                SympDeSpec { base, pair: AdmissiblePair::new(d, vec![eta, zero()]), a0, lambda, k }
            }
            _ => {
                let mut lambda = self.nonzero();
                while lambda == &mu / int(2) || lambda == -(&mu / int(2)) {
                    lambda = self.nonzero();
                }
                let a0 = vec![self.scalar(), self.scalar()];
                SympDeSpec { base, pair: AdmissiblePair::zero(2), a0, lambda, k: zero() }
            }
        }
    }

    /// Manin data over `J_2_0` in either orientation, or over `T*_0(J_2_1)`.
    pub fn manin_de(&mut self) -> ManinDeSpec {
        let e = |i: usize| Subspace::span(2, [vector::unit(2, i)]);
        match self.rng.gen_range(0..3) {
            0 => {
                let t = ManinTriple::new(pe("J_2_0"), e(0), e(1), None).expect("J_2_0 triple");
                let d = self.nilpotent_j20(false);
                let x0 = vec![zero(), self.scalar()];
                ManinDeSpec { triple: t, pair: AdmissiblePair::new(d, x0) }
            }
            1 => {
                let t = ManinTriple::new(pe("J_2_0"), e(1), e(0), None).expect("J_2_0 triple");
                let d = self.nilpotent_j20(true);
                let x0 = vec![self.scalar(), zero()];
                ManinDeSpec { triple: t, pair: AdmissiblePair::new(d, x0) }
            }
            _ => {
                let p = pe("TSTAR0(J_2_1)");
                let half = |r: std::ops::Range<usize>| Subspace::span(4, r.map(|i| vector::unit(4, i)));
                let t = ManinTriple::new(p, half(0..2), half(2..4), None).expect("T* triple");
                let x0 = self.combination(&t.v.intersect(&t.pe.algebra.annihilator()));
                ManinDeSpec { pair: AdmissiblePair::new(Matrix::zeros(4, 4), x0), triple: t }
            }
        }
    }

    /// A spec for `machine` that breaks one named condition.
    pub fn invalid(&mut self, machine: &str) -> Invalid {
        match machine {
            "central" => self.invalid_central(),
            "tstar" => self.invalid_tstar(),
            "sdp" => self.invalid_sdp(),
            "gsd" => self.invalid_gsd(),
            "de" => self.invalid_de(),
            "gde" => self.invalid_gde(),
            other => panic!("unknown machine {other}"),
        }
    }

    fn invalid_central(&mut self) -> Invalid {
        if self.rng.gen_bool(0.5) {
            let j = alg(self.pick(&["J_2_0", "J_2_1", "H_2", "SPIN(1,-1)"]));
            let mut phi = BilinearTable::zero(j.dim(), 1);
            phi.set(0, 1, vec![self.nonzero()]);
            return Invalid { spec: Spec::Central(CentralSpec { j, phi }), expect: "not symmetric" };
        }
        // symmetric tables outside the solved cocycle space
        let j = alg(self.pick(&["H_2", "SPIN(1,-1)", "SPIN(1,1,1)"]));
        let n = j.dim();
        let space = Subspace::span(n * n, central_cocycle_space(&j, 1).iter().map(|t| t.table.concat()));
        loop {
            let mut phi = BilinearTable::zero(n, 1);
            for i in 0..n {
                for k in i..n {
                    phi.set_sym(i, k, vec![self.scalar()]);
                }
            }
            if !space.contains(&phi.table.concat()) {
                return Invalid { spec: Spec::Central(CentralSpec { j, phi }), expect: "cocycle identity" };
            }
        }
    }

    fn invalid_tstar(&mut self) -> Invalid {
        match self.rng.gen_range(0..3) {
            0 => {
                let j = alg(self.pick(&["J_2_0", "J_2_1", "UNIT_1"]));
                let n = j.dim();
                let mut theta = BilinearTable::zero(n, n);
                if n == 1 {
                    // dimension 1 tables are symmetric; fall back to the zero-product plane
                    return self.invalid_tstar();
                }
                theta.set(0, 1, vector::scale(&self.nonzero(), &vector::unit(n, 0)));
                Invalid { spec: Spec::Tstar(TstarSpec { j, theta }), expect: "not symmetric" }
            }
            1 => {
                // zero products make the first identity vacuous; theta(a,a) = c b* is not cyclic
                let j = alg("J_2_0");
                let mut theta = BilinearTable::zero(2, 2);
                theta.set(0, 0, vector::scale(&self.nonzero(), &vector::unit(2, 1)));
                Invalid { spec: Spec::Tstar(TstarSpec { j, theta }), expect: "cyclic identity" }
            }
            _ => {
                // fully symmetric tensors are cyclic; pick one that misses the first identity
                let j = alg(self.pick(&["H_2", "SPIN(1,-1)"]));
                let n = j.dim();
                let space = Subspace::span(n * n * n, tstar_cocycle_space(&j).iter().map(|t| t.table.concat()));
                loop {
                    let mut theta = BilinearTable::zero(n, n);
                    for i in 0..n {
                        for k in i..n {
                            for l in k..n {
                                let c = self.scalar();
                                for (x, y, z) in permutations(i, k, l) {
                                    let mut v = theta.get(x, y).clone();
                                    v[z] = c.clone();
                                    theta.set(x, y, v);
                                }
                            }
                        }
                    }
                    if !space.contains(&theta.table.concat()) {
                        return Invalid { spec: Spec::Tstar(TstarSpec { j, theta }), expect: "first identity" };
                    }
                }
            }
        }
    }

    fn invalid_sdp(&mut self) -> Invalid {
        if self.rng.gen_bool(0.5) {
            // pi(e) = c Id is a representation only for c in {0, 1/2, 1}
            let j2 = alg(self.pick(SMALL_PE));
            let c = loop {
                let c = self.nonzero();
                if c != int(1) && c != frac(1, 2) {
                    break c;
                }
            };
            let pi = vec![Matrix::scalar(j2.dim(), &c)];
            return Invalid { spec: Spec::Sdp(SdpSpec { j1: alg("UNIT_1"), j2, pi }), expect: "condition representation" };
        }
        // a representation of J_3_1_0 on itself moving a into the a2 line
        let j = alg("J_3_1_0");
        let mut pi = vec![Matrix::zeros(3, 3); 3];
        pi[0][(0, 1)] = self.nonzero();
        Invalid { spec: Spec::Sdp(SdpSpec { j1: j.clone(), j2: j, pi }), expect: "condition (1)" }
    }

    fn invalid_gsd(&mut self) -> Invalid {
        match self.rng.gen_range(0..3) {
            0 => {
                // UNIT_1 with D = d needs x0 = d^2
                let d = self.scalar();
                let x0 = &d * &d + self.nonzero();
                let pair = AdmissiblePair::new(Matrix::scalar(1, &d), vec![x0]);
                Invalid { spec: Spec::Gsd(GsdSpec { j: alg("UNIT_1"), pair }), expect: "condition C5" }
            }
            1 => {
                let d = self.nonzero();
                let pair = AdmissiblePair::new(Matrix::scalar(1, &d), vec![self.scalar()]);
                Invalid { spec: Spec::Gsd(GsdSpec { j: alg("J_1_1"), pair }), expect: "condition C6" }
            }
            _ => {
                // J_2_1 with D(a1) = c a1
                let mut d = Matrix::zeros(2, 2);
                d[(0, 0)] = self.nonzero();
                let pair = AdmissiblePair::new(d, vector::zeros(2));
                Invalid { spec: Spec::Gsd(GsdSpec { j: alg("J_2_1"), pair }), expect: "condition C2" }
            }
        }
    }

    fn invalid_de(&mut self) -> Invalid {
        match self.rng.gen_range(0..3) {
            0 => {
                // square-zero but not symmetric for the hyperbolic form
                let c = self.nonzero();
                let n = Matrix::from_rows(&[vec![c.clone(), c.clone()], vec![-c.clone(), -c]]);
                let spec = DeSpec { base: pe("J_2_0"), top: alg("J_1_1"), pi: vec![n], gamma: Matrix::zeros(1, 1) };
                Invalid { spec: Spec::De(spec), expect: "is not symmetric for the base form" }
            }
            1 => {
                let top = pe("J_2_1");
                let t = self.nonzero();
                let gamma = Matrix::scalar(2, &t);
                let base = pe(self.pick(SMALL_PE));
                let pi = vec![Matrix::zeros(base.dim(), base.dim()); 2];
                Invalid { spec: Spec::De(DeSpec { base, top: top.algebra, pi, gamma }), expect: "gamma" }
            }
            _ => {
                let base = pe(self.pick(SMALL_PE));
                let c = loop {
                    let c = self.nonzero();
                    if c != int(1) && c != frac(1, 2) {
                        break c;
                    }
                };
                let pi = vec![Matrix::scalar(base.dim(), &c)];
                let spec = DeSpec { base, top: alg("UNIT_1"), pi, gamma: Matrix::zeros(1, 1) };
                Invalid { spec: Spec::De(spec), expect: "condition representation" }
            }
        }
    }

    fn invalid_gde(&mut self) -> Invalid {
        let k = self.scalar();
        if self.rng.gen_bool(0.5) {
            let c = self.nonzero();
            let d = Matrix::from_rows(&[vec![c.clone(), c.clone()], vec![-c.clone(), -c]]);
            let pair = AdmissiblePair::new(d, vec![self.scalar(), self.scalar()]);
            return Invalid { spec: Spec::Gde(GdeSpec { base: pe("J_2_0"), pair, k }), expect: "D is not symmetric" };
        }
        let d = self.scalar();
        let x0 = &d * &d + self.nonzero();
        let pair = AdmissiblePair::new(Matrix::scalar(1, &d), vec![x0]);
        Invalid { spec: Spec::Gde(GdeSpec { base: pe("UNIT_1"), pair, k }), expect: "condition C5" }
    }
}

fn permutations(i: usize, k: usize, l: usize) -> [(usize, usize, usize); 6] {
    [(i, k, l), (i, l, k), (k, i, l), (k, l, i), (l, i, k), (l, k, i)]
}

fn unflatten(n: usize, target: usize, flat: &[Scalar]) -> BilinearTable {
    let mut t = BilinearTable::zero(n, target);
    for i in 0..n {
        for k in 0..n {
            let off = (i * n + k) * target;
            t.set(i, k, flat[off..off + target].to_vec());
        }
    }
    t
}

impl SympDeSpec {
    pub fn build(&self) -> Result<SymplecticPe> {
        symplectic_double_extension(&self.base, &self.pair, &self.a0, &self.lambda, &self.k)
    }
}

impl ManinDeSpec {
    pub fn build(&self) -> Result<ManinTriple> {
        manin_double_extension(&self.triple, &self.pair)
    }
}
