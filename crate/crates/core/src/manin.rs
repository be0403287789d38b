//! Manin triples: splittings of a pseudo-euclidean Jordan algebra into two totally isotropic
//! subalgebras, their double extensions, the inverse reductions, and the spectral splitting of a
//! symplectic algebra.

use num_traits::Zero;

use crate::double_ext::{generalized_double_extension, peel_gde_with, GdePeel};
use crate::error::{Error, Result};
use crate::extensions::{require_admissible, AdmissiblePair};
use crate::forms::{self, PseudoEuclidean};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{rational_eigenvectors, rational_spectral, Matrix, Subspace};
use crate::scalar::{self, Scalar};
use crate::symplectic::{bridge_from_omega, peel_symplectic_with, symplectic_double_extension, SymplecticPe, SymplecticPeel};

/// `(P, U, V)` with an optional symplectic form. Fields are public; [`check_manin`] is the verifier
/// and every operation re-checks its input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinTriple {
    pub pe: PseudoEuclidean,
    pub u: Subspace,
    pub v: Subspace,
    pub omega: Option<Matrix>,
}

impl ManinTriple {
    /// Verified constructor.
    pub fn new(pe: PseudoEuclidean, u: Subspace, v: Subspace, omega: Option<Matrix>) -> Result<Self> {
        let rep = check_manin(&pe, &u, &v, omega.as_ref());
        match rep.violation {
            Some(msg) => Err(Error::NotManin(msg)),
            None => Ok(ManinTriple { pe, u, v, omega }),
        }
    }

    pub fn dim(&self) -> usize {
        self.pe.dim()
    }

    /// The same triple with `U` and `V` exchanged.
    pub fn swapped(&self) -> ManinTriple {
        ManinTriple { pe: self.pe.clone(), u: self.v.clone(), v: self.u.clone(), omega: self.omega.clone() }
    }

    pub fn check(&self) -> ManinReport {
        check_manin(&self.pe, &self.u, &self.v, self.omega.as_ref())
    }

    fn require(&self) -> Result<()> {
        match self.check().violation {
            Some(msg) => Err(Error::NotManin(msg)),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinReport {
    pub u_subalgebra: bool,
    pub v_subalgebra: bool,
    pub u_isotropic: bool,
    pub v_isotropic: bool,
    pub complementary: bool,
    /// `None` without a symplectic form.
    pub omega_isotropic: Option<bool>,
    pub omega_symplectic: Option<bool>,
    /// First failing condition, in the order of the fields above.
    pub violation: Option<String>,
}

impl ManinReport {
    pub fn ok(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn check_manin(p: &PseudoEuclidean, u: &Subspace, v: &Subspace, omega: Option<&Matrix>) -> ManinReport {
    let n = p.dim();
    assert!(u.ambient() == n && v.ambient() == n, "subspaces must live in the algebra");
    let alg = &p.algebra;
    let u_subalgebra = alg.is_subalgebra(u);
    let v_subalgebra = alg.is_subalgebra(v);
    let u_isotropic = forms::is_isotropic(&p.form, u);
    let v_isotropic = forms::is_isotropic(&p.form, v);
    let complementary = u.dim() + v.dim() == n && u.sum(v).is_full();
    let (omega_isotropic, omega_symplectic) = match omega {
        None => (None, None),
        Some(w) => {
            let iso = w.rows() == n && w.cols() == n && forms::is_isotropic(w, u) && forms::is_isotropic(w, v);
            let sym = w.rows() == n && w.cols() == n && crate::symplectic::check_symplectic(alg, w).ok();
            (Some(iso), Some(sym))
        }
    };
    let checks = [
        (u_subalgebra, "U is not a subalgebra"),
        (v_subalgebra, "V is not a subalgebra"),
        (u_isotropic, "U is not totally isotropic"),
        (v_isotropic, "V is not totally isotropic"),
        (complementary, "U and V are not complementary"),
        (omega_isotropic != Some(false), "U or V is not isotropic for omega"),
        (omega_symplectic != Some(false), "omega is not symplectic"),
    ];
    let violation = checks.iter().find(|(ok, _)| !ok).map(|(_, m)| m.to_string());
    ManinReport { u_subalgebra, v_subalgebra, u_isotropic, v_isotropic, complementary, omega_isotropic, omega_symplectic, violation }
}

/// Base coordinates into `K a (+) W (+) K b`.
fn lift(s: &Subspace) -> Subspace {
    let n = s.ambient();
    Subspace::span(n + 2, s.basis().iter().map(|x| vector::concat(&[&[scalar::zero()], x, &[scalar::zero()]])))
}

/// `(U + K b, V + K a)` inside the generalized double extension.
fn extended_components(m: &ManinTriple) -> (Subspace, Subspace) {
    let n = m.dim();
    let u = lift(&m.u).sum(&Subspace::span(n + 2, [vector::unit(n + 2, n + 1)]));
    let v = lift(&m.v).sum(&Subspace::span(n + 2, [vector::unit(n + 2, 0)]));
    (u, v)
}

/// Generalized double extension with `k = 0`, split as `U' = U + K b`, `V' = V + K a`.
///
/// Requires `(D, x0)` admissible, `D(V)` inside `V` and `x0` in `V`.
pub fn manin_double_extension(m: &ManinTriple, pair: &AdmissiblePair) -> Result<ManinTriple> {
    m.require()?;
    require_admissible(&m.pe.algebra, pair).map_err(|e| Error::SpecInvalid(e.to_string()))?;
    if !m.v.is_invariant(&pair.d) {
        return Err(Error::SpecInvalid("D(V) is not contained in V".into()));
    }
    if !m.v.contains(&pair.x0) {
        return Err(Error::SpecInvalid("x0 is not in V".into()));
    }
    let pe = generalized_double_extension(&m.pe, pair, &scalar::zero())?;
    let (u, v) = extended_components(m);
    ManinTriple::new(pe, u, v, None).map_err(|e| Error::Verification(format!("Manin double extension: {e}")))
}

/// Data recovered by [`peel_manin`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinPeel {
    /// Components in the orientation of the input.
    pub base: ManinTriple,
    pub pair: AdmissiblePair,
    pub gde: GdePeel,
    /// `b` was taken from `V`, so the extension runs on the exchanged triple.
    pub swapped: bool,
}

impl ManinPeel {
    /// Re-extends; the result is isometric to the input through `gde.isometry`.
    pub fn reextend(&self) -> Result<ManinTriple> {
        if self.swapped {
            Ok(manin_double_extension(&self.base.swapped(), &self.pair)?.swapped())
        } else {
            manin_double_extension(&self.base, &self.pair)
        }
    }
}

/// First vector of `y` pairing with `b`, scaled so `B(a, b) = 1`.
fn partner_in(p: &PseudoEuclidean, y: &Subspace, b: &[Scalar]) -> Option<Vector> {
    let u = y.basis().iter().find(|v| !p.b(v, b).is_zero())?;
    Some(vector::scale(&p.b(u, b).recip(), u))
}

/// Components of the base: `X ∩ W` and `Y ∩ b^perp`, in `W` coordinates.
fn base_components(p: &PseudoEuclidean, gde: &GdePeel, x: &Subspace, y: &Subspace) -> Result<(Subspace, Subspace)> {
    let w = &gde.w;
    let bperp = p.perp(&Subspace::span(p.dim(), [gde.b.clone()]));
    let to_w = |s: Subspace| -> Result<Subspace> {
        let coords: Option<Vec<Vector>> = s.basis().iter().map(|v| w.coordinates(v)).collect();
        let coords = coords.ok_or_else(|| Error::Verification("component does not lie in W".into()))?;
        Ok(Subspace::span(w.dim(), coords))
    };
    Ok((to_w(x.intersect(w))?, to_w(y.intersect(&bperp))?))
}

fn check_components_map(iso: &Matrix, re: &ManinTriple, x: &Subspace, y: &Subspace) -> Result<()> {
    if re.u.image(iso) != *x || re.v.image(iso) != *y {
        return Err(Error::Verification("re-extension does not reproduce the components".into()));
    }
    Ok(())
}

/// Peels at the first basis vector of `U ∩ Ann`, falling back to `V ∩ Ann`, with the partner
/// taken in the other component.
pub fn peel_manin(m: &ManinTriple) -> Result<ManinPeel> {
    m.require()?;
    let ann = m.pe.algebra.annihilator();
    let (ua, va) = (m.u.intersect(&ann), m.v.intersect(&ann));
    if let Some(b) = ua.basis().first() {
        peel_oriented(m, b, false)
    } else if let Some(b) = va.basis().first() {
        peel_oriented(&m.swapped(), b, true)
    } else {
        Err(Error::NoIsotropicAnnDirection)
    }
}

/// Peels `(P, X, Y)` at `b` in `X ∩ Ann`; `swapped` records whether `(X, Y)` is `(V, U)`.
fn peel_oriented(m: &ManinTriple, b: &[Scalar], swapped: bool) -> Result<ManinPeel> {
    let p = &m.pe;
    let a = partner_in(p, &m.v, b).ok_or_else(|| Error::Verification("V does not pair with b".into()))?;
    let gde = peel_gde_with(p, b, &a)?;
    if !gde.k.is_zero() {
        return Err(Error::Verification("a a has a b component".into()));
    }
    let (x, y) = base_components(p, &gde, &m.u, &m.v)?;
    let base = ManinTriple::new(gde.base.clone(), x, y, None)?;
    if !base.v.contains(&gde.pair.x0) || !base.v.is_invariant(&gde.pair.d) {
        return Err(Error::Verification("extracted pair does not preserve V'".into()));
    }
    let re = manin_double_extension(&base, &gde.pair)?;
    check_components_map(&gde.isometry, &re, &m.u, &m.v)?;
    let (base, pair) = (if swapped { base.swapped() } else { base }, gde.pair.clone());
    Ok(ManinPeel { base, pair, gde, swapped })
}

/// Splits by the sign of the eigenvalues of the derivation `D` with `w(x, y) = B(D x, y)`:
/// `U` collects the generalized eigenspaces for positive eigenvalues, `V` those for negative ones.
pub fn spectral_split(p: &PseudoEuclidean, omega: &Matrix) -> Result<ManinTriple> {
    let n = p.dim();
    if omega.rows() != n || omega.cols() != n {
        return Err(Error::DimensionMismatch("symplectic form".into()));
    }
    let br = bridge_from_omega(p, omega);
    if !br.antisymmetric {
        return Err(Error::NotAntisymmetric("omega".into()));
    }
    if !br.derivation {
        return Err(Error::NotADerivation("D with omega(x, y) = B(D x, y)".into()));
    }
    let spec = rational_spectral(&br.d)?;
    if spec.iter().any(|e| e.value.is_zero()) {
        return Err(Error::ZeroEigenvalue);
    }
    let alg = &p.algebra;
    let space_of = |v: &Scalar| spec.iter().find(|e| &e.value == v).map(|e| e.generalized.clone()).unwrap_or_else(|| Subspace::zero(n));
    for e in &spec {
        for f in &spec {
            let sum = &e.value + &f.value;
            if !space_of(&sum).contains_space(&alg.product_space(&e.generalized, &f.generalized)) {
                return Err(Error::Verification(format!("J({}) J({}) is not inside J({})", e.value, f.value, sum)));
            }
            if !sum.is_zero() {
                let pairs = e.generalized.basis().iter().all(|x| f.generalized.basis().iter().all(|y| p.b(x, y).is_zero()));
                if !pairs {
                    return Err(Error::Verification(format!("B(J({}), J({})) is not zero", e.value, f.value)));
                }
            }
        }
    }
    let sum_where = |pos: bool| {
        spec.iter().filter(|e| (e.value > scalar::zero()) == pos).fold(Subspace::zero(n), |acc, e| acc.sum(&e.generalized))
    };
    let (u, v) = (sum_where(true), sum_where(false));
    ManinTriple::new(p.clone(), u, v, Some(omega.clone())).map_err(|e| Error::Verification(format!("spectral split: {e}")))
}

/// Symplectic double extension with `k = 0`, split as `U' = U + K b`, `V' = V + K a`.
///
/// Requires the symplectic-extension conditions plus `D(V)` inside `V` and `x0`, `a0` in `V`.
pub fn symplectic_manin_double_extension(m: &ManinTriple, pair: &AdmissiblePair, a0: &[Scalar], lambda: &Scalar) -> Result<ManinTriple> {
    m.require()?;
    let omega = m.omega.clone().ok_or_else(|| Error::BadComponents("triple carries no symplectic form".into()))?;
    if pair.d.rows() != m.dim() || pair.x0.len() != m.dim() || a0.len() != m.dim() {
        return Err(Error::DimensionMismatch("extension data".into()));
    }
    if !m.v.is_invariant(&pair.d) {
        return Err(Error::CompatibilityFails("D(V) is not contained in V".into()));
    }
    if !m.v.contains(&pair.x0) {
        return Err(Error::CompatibilityFails("x0 is not in V".into()));
    }
    if !m.v.contains(a0) {
        return Err(Error::CompatibilityFails("a0 is not in V".into()));
    }
    let s1 = SymplecticPe::new(m.pe.clone(), omega)?;
    let s = symplectic_double_extension(&s1, pair, a0, lambda, &scalar::zero())?;
    let (u, v) = extended_components(m);
    if !u.is_invariant(&s.delta) || !v.is_invariant(&s.delta) {
        return Err(Error::Verification("Delta does not stabilize the extended components".into()));
    }
    ManinTriple::new(s.pe, u, v, Some(s.omega)).map_err(|e| Error::Verification(format!("symplectic Manin double extension: {e}")))
}

/// Data recovered by [`peel_symplectic_manin`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticManinPeel {
    /// Components in the orientation of the input.
    pub base: ManinTriple,
    pub peel: SymplecticPeel,
    pub swapped: bool,
}

impl SymplecticManinPeel {
    pub fn pair(&self) -> &AdmissiblePair {
        self.peel.pair()
    }

    pub fn reextend(&self) -> Result<ManinTriple> {
        let (pair, a0, l) = (self.peel.pair(), &self.peel.a0, &self.peel.lambda);
        if self.swapped {
            Ok(symplectic_manin_double_extension(&self.base.swapped(), pair, a0, l)?.swapped())
        } else {
            symplectic_manin_double_extension(&self.base, pair, a0, l)
        }
    }
}

/// First rational eigenvector of `delta` restricted to the stable subspace `s`.
fn eigenvector_in(delta: &Matrix, s: &Subspace) -> Option<Vector> {
    if s.is_zero() {
        return None;
    }
    let restricted = Matrix::from_columns(
        s.dim(),
        &s.basis().iter().map(|v| s.coordinates(&delta.apply(v)).expect("stable")).collect::<Vec<_>>(),
    );
    let (_, space) = rational_eigenvectors(&restricted).into_iter().next()?;
    Some(s.basis_matrix().apply(&space.basis()[0]))
}

/// Peels at a rational eigenvector of `Delta` in `U ∩ Ann`, falling back to `V ∩ Ann`.
pub fn peel_symplectic_manin(m: &ManinTriple) -> Result<SymplecticManinPeel> {
    let omega = m.omega.as_ref().ok_or_else(|| Error::BadComponents("triple carries no symplectic form".into()))?;
    if omega.rows() != m.dim() || omega.cols() != m.dim() {
        return Err(Error::DimensionMismatch("symplectic form".into()));
    }
    let delta = bridge_from_omega(&m.pe, omega).d;
    if !m.u.is_invariant(&delta) || !m.v.is_invariant(&delta) {
        return Err(Error::NotDeltaStable);
    }
    let ann = m.pe.algebra.annihilator();
    let (ua, va) = (m.u.intersect(&ann), m.v.intersect(&ann));
    for s in [&ua, &va] {
        if !s.is_invariant(&delta) {
            return Err(Error::Verification("annihilator component is not stable under Delta".into()));
        }
    }
    let (oriented, b, swapped) = if let Some(b) = eigenvector_in(&delta, &ua) {
        (m.clone(), b, false)
    } else if let Some(b) = eigenvector_in(&delta, &va) {
        (m.swapped(), b, true)
    } else {
        let why = if ua.is_zero() && va.is_zero() { "U ∩ Ann and V ∩ Ann are zero" } else { "no rational eigenvalue on the annihilator components" };
        return Err(Error::NoEigenvector(why.into()));
    };
    m.require()?;
    let s = SymplecticPe::new(m.pe.clone(), omega.clone())?;
    let a = partner_in(&m.pe, &oriented.v, &b).ok_or_else(|| Error::Verification("V does not pair with b".into()))?;
    let peel = peel_symplectic_with(&s, &b, &a)?;
    let (x, y) = base_components(&m.pe, &peel.gde, &oriented.u, &oriented.v)?;
    let base = ManinTriple::new(peel.base.pe.clone(), x, y, Some(peel.base.omega.clone()))?;
    let re = symplectic_manin_double_extension(&base, peel.pair(), &peel.a0, &peel.lambda)?;
    check_components_map(&peel.gde.isometry, &re, &oriented.u, &oriented.v)?;
    let base = if swapped { base.swapped() } else { base };
    Ok(SymplecticManinPeel { base, peel, swapped })
}
