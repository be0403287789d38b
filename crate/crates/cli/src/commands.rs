//! Subcommand bodies. Each returns a report; writing files and exit codes happen in `main`.

use std::collections::BTreeMap;

use jforge::algebra::{check_jordan, Algebra, JordanAlgebra};
use jforge::catalog::{self, Params};
use jforge::diagnostics::{albert_form, casimir, decompose, fitting, index, radical_and_semisimplicity, reductive_report};
use jforge::double_ext::{double_extension, generalized_double_extension, peel_de, peel_gde};
use jforge::extensions::{
    central_extension, generalized_semidirect, semidirect_product, tstar_extension, AdmissiblePair, BilinearTable,
};
use jforge::forms::{self, check_pep, PseudoEuclidean};
use jforge::linalg::vector;
use jforge::manin::{check_manin, manin_double_extension, peel_manin, peel_symplectic_manin, ManinTriple};
use jforge::symplectic::{
    check_symplectic, delta_r_and_double, peel_symplectic, symplectic_double_extension, RMatrix, SymplecticPe,
};
use jforge::tkk::{check_condition_d1, is_form_antisymmetric, is_z2_compatible, lift_derivation, omega_l, tkk_build};
use jforge::{Matrix, Scalar, Subspace, Vector};
use serde_json::{json, Map, Value};

use crate::files::{algebra_file, load, parse_algebra_file, parse_scalar, read_data, DataFile, InputError, Labels, Loaded};
use crate::report::{self, lib_error, CmdResult, Outcome};

/// A constructed or peeled algebra to be written out.
pub struct Artifact {
    pub text: String,
}

pub fn artifact(name: &str, a: &Algebra, form: Option<&Matrix>, omega: Option<&Matrix>, subspaces: &[(&str, &Subspace)]) -> Artifact {
    Artifact { text: crate::files::to_text(&algebra_file(name, a, form, omega, subspaces)) }
}

fn file_json(name: &str, a: &Algebra, form: Option<&Matrix>, omega: Option<&Matrix>, subspaces: &[(&str, &Subspace)]) -> Value {
    serde_json::to_value(algebra_file(name, a, form, omega, subspaces)).expect("serializable")
}

fn input(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

fn jordan(l: &Loaded, path: &str) -> Result<JordanAlgebra, InputError> {
    JordanAlgebra::new(l.algebra.clone()).map_err(|e| input(format!("{path}: {e}")))
}

fn pe(l: &Loaded, path: &str) -> Result<PseudoEuclidean, InputError> {
    let form = l.form.clone().ok_or_else(|| input(format!("{path}: a form is required")))?;
    PseudoEuclidean::new(jordan(l, path)?, form).map_err(|e| input(format!("{path}: {e}")))
}

fn omega(l: &Loaded, path: &str) -> Result<Matrix, InputError> {
    l.omega.clone().ok_or_else(|| input(format!("{path}: omega is required")))
}

fn subspace(l: &Loaded, path: &str, name: &str) -> Result<Subspace, InputError> {
    l.subspaces.get(name).cloned().ok_or_else(|| input(format!("{path}: subspace {name:?} is required")))
}

fn required<'a, T>(x: &'a Option<T>, path: &str, field: &str) -> Result<&'a T, InputError> {
    x.as_ref().ok_or_else(|| input(format!("{path}: missing field `{field}`")))
}

fn triple(names: &[String], t: (usize, usize, usize)) -> Value {
    report::labels(names, &[t.0, t.1, t.2])
}

// ---------------------------------------------------------------------------------------------
// check

#[derive(Clone, Debug, Default)]
pub struct CheckOpts {
    pub jordan: bool,
    pub pe: bool,
    pub symplectic: bool,
    pub manin: bool,
    pub u: String,
    pub v: String,
}

pub fn check(path: &str, o: &CheckOpts) -> CmdResult {
    let l = parse_algebra_file(path)?;
    let a = &l.algebra;
    let names = a.names().to_vec();
    let mut rep = Map::new();
    rep.insert("name".into(), json!(l.name));
    let mut ok = true;
    if o.jordan || !(o.pe || o.symplectic || o.manin) {
        let r = check_jordan(a);
        ok &= r.jordan;
        rep.insert(
            "jordan".into(),
            json!({
                "commutative": r.commutative,
                "jordan": r.jordan,
                "violation": r.first_violation.as_ref().map(|v| report::violation(&names, v)),
            }),
        );
    }
    if o.pe {
        let form = l.form.as_ref().ok_or_else(|| input(format!("{path}: --pe needs a form")))?;
        let r = check_pep(a, form);
        ok &= r.ok();
        let violation = r.first_violation.map(|(x, y, z)| {
            let (ex, ez) = (a.basis(x), a.basis(z));
            json!({
                "triple": triple(&names, (x, y, z)),
                "left": report::scalar(&forms::eval(form, a.product(x, y), &ez)),
                "right": report::scalar(&forms::eval(form, &ex, a.product(y, z))),
            })
        });
        rep.insert(
            "pe".into(),
            json!({
                "symmetric": r.symmetric,
                "nondegenerate": r.nondegenerate,
                "associative": r.associative,
                "violation": violation,
            }),
        );
    }
    if o.symplectic {
        let w = l.omega.as_ref().ok_or_else(|| input(format!("{path}: --symplectic needs omega")))?;
        let r = check_symplectic(a, w);
        ok &= r.ok();
        rep.insert(
            "symplectic".into(),
            json!({
                "antisymmetric": r.antisymmetric,
                "nondegenerate": r.nondegenerate,
                "cyclic": r.cyclic,
                "violation": r.first_violation.map(|t| triple(&names, t)),
            }),
        );
    }
    if o.manin {
        let (u, v) = (subspace(&l, path, &o.u)?, subspace(&l, path, &o.v)?);
        let value = match pe(&l, path) {
            Err(e) => {
                ok = false;
                json!({"violation": e.0})
            }
            Ok(p) => {
                let r = check_manin(&p, &u, &v, l.omega.as_ref());
                ok &= r.ok();
                json!({
                    "u_subalgebra": r.u_subalgebra,
                    "v_subalgebra": r.v_subalgebra,
                    "u_isotropic": r.u_isotropic,
                    "v_isotropic": r.v_isotropic,
                    "complementary": r.complementary,
                    "omega_isotropic": r.omega_isotropic,
                    "omega_symplectic": r.omega_symplectic,
                    "violation": r.violation,
                })
            }
        };
        rep.insert("manin".into(), value);
    }
    rep.insert("ok".into(), json!(ok));
    Ok(Outcome { report: Value::Object(rep), pass: ok })
}

// ---------------------------------------------------------------------------------------------
// analyze

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOpts {
    pub albert: bool,
    pub casimir: bool,
    pub radical: bool,
    pub index: bool,
    pub fitting: bool,
    pub reductive: bool,
    pub no_verify: bool,
}

pub fn analyze(path: &str, o: &AnalyzeOpts) -> CmdResult {
    let l = parse_algebra_file(path)?;
    if !o.no_verify {
        jordan(&l, path)?;
    }
    let a = &l.algebra;
    let names = a.names().to_vec();
    let all = !(o.albert || o.casimir || o.radical || o.index || o.fitting || o.reductive);
    let with_form = l.form.is_some();
    let mut rep = Map::new();
    let mut ok = true;
    if o.albert || all {
        let t = albert_form(a);
        rep.insert(
            "albert".into(),
            json!({"gram": report::matrix(&t.gram), "symmetric": t.symmetric, "associative": t.associative, "rank": t.gram.rank()}),
        );
    }
    if o.radical || all {
        let value = match radical_and_semisimplicity(a) {
            Ok(r) => json!({"radical": report::subspace(&names, &r.radical), "dim": r.radical.dim(), "semisimple": r.semisimple}),
            Err(e) => {
                ok = false;
                json!({"error": e.to_string()})
            }
        };
        rep.insert("radical".into(), value);
    }
    if o.index || all {
        rep.insert("index".into(), json!(index(a).index));
    }
    let needs_pe = o.casimir || o.fitting || o.reductive || (all && with_form);
    if needs_pe {
        let p = pe(&l, path)?;
        if o.casimir || all {
            let c = casimir(&p);
            ok &= c.verified();
            rep.insert(
                "casimir".into(),
                json!({
                    "c": report::vector(&names, &c.c),
                    "rc": report::matrix(&c.rc),
                    "class": c.classification.as_str(),
                    "albert_matches": c.albert_matches,
                    "commutes": c.commutes,
                    "basis_independent": c.basis_independent,
                }),
            );
        }
        if o.fitting || all {
            let value = match fitting(&p) {
                Ok(f) => json!({"s": report::subspace(&names, &f.s), "s_perp": report::subspace(&names, &f.s_perp)}),
                Err(e) => {
                    ok = false;
                    json!({"error": e.to_string()})
                }
            };
            rep.insert("fitting".into(), value);
        }
        if o.reductive || all {
            let comps = decompose(&p);
            let value = match reductive_report(&p, &comps) {
                Ok(r) => {
                    ok &= r.reductive_criterion_holds && r.semisimple_criterion_holds;
                    json!({
                        "components": comps.iter().map(|s| report::subspace(&names, s)).collect::<Vec<_>>(),
                        "r": r.r,
                        "reductive": r.reductive,
                        "dim_ann": r.dim_ann,
                        "index": r.index,
                        "semisimple": r.semisimple,
                        "square_full": r.square_full,
                        "reductive_criterion_holds": r.reductive_criterion_holds,
                        "semisimple_criterion_holds": r.semisimple_criterion_holds,
                    })
                }
                Err(e) => {
                    ok = false;
                    json!({"error": e.to_string()})
                }
            };
            rep.insert("reductive".into(), value);
        }
    }
    Ok(Outcome { report: Value::Object(rep), pass: ok })
}

// ---------------------------------------------------------------------------------------------
// construct

/// Inputs of `construct`; each machine reads the ones it needs.
#[derive(Clone, Debug, Default)]
pub struct ConstructOpts {
    pub algebra: Option<String>,
    pub base: Option<String>,
    pub top: Option<String>,
    pub j1: Option<String>,
    pub j2: Option<String>,
    pub data: Option<String>,
    pub name: Option<String>,
}

fn opt<'a>(x: &'a Option<String>, flag: &str) -> Result<&'a str, InputError> {
    x.as_deref().ok_or_else(|| input(format!("--{flag} is required")))
}

fn pair_from(data: &DataFile, labels: &Labels) -> Result<AdmissiblePair, InputError> {
    let d = match &data.d {
        Some(m) => labels.operator(m, "d")?,
        None => Matrix::zeros(labels.names.len(), labels.names.len()),
    };
    let x0 = match &data.x0 {
        Some(m) => labels.vector(m, "x0")?,
        None => vector::zeros(labels.names.len()),
    };
    Ok(AdmissiblePair::new(d, x0))
}

fn k_from(data: &DataFile, path: &str) -> Result<Scalar, InputError> {
    data.k.as_deref().map(|s| parse_scalar(s, &format!("{path}: k"))).unwrap_or_else(|| Ok(jforge::scalar::zero()))
}

fn rep_from(data: &DataFile, acting: &Labels, module: &Labels, path: &str) -> Result<Vec<Matrix>, InputError> {
    let pi = required(&data.pi, path, "pi")?;
    let n = module.names.len();
    let mut out = vec![Matrix::zeros(n, n); acting.names.len()];
    for (label, op) in pi {
        let i = acting.index(label, "pi")?;
        out[i] = module.operator(op, &format!("pi[{label:?}]"))?;
    }
    Ok(out)
}

pub fn construct(machine: &str, o: &ConstructOpts) -> Result<(Outcome, Option<Artifact>), InputError> {
    let ctx = json!({"machine": machine});
    let default_name = |parts: &[&str]| o.name.clone().unwrap_or_else(|| format!("{machine}({})", parts.join(",")));
    let finish = |name: String, a: &Algebra, form: Option<&Matrix>, w: Option<&Matrix>, subs: &[(&str, &Subspace)], pass: bool| {
        let art = artifact(&name, a, form, w, subs);
        let rep = json!({"machine": machine, "name": name, "dim": a.dim(), "ok": pass});
        Ok((Outcome { report: rep, pass }, Some(art)))
    };
    let fail = |e: jforge::Error| lib_error(e, ctx.clone()).map(|out| (out, None));
    match machine {
        "tstar" | "central" => {
            let path = opt(&o.algebra, "algebra")?;
            let dpath = opt(&o.data, "data")?;
            let l = parse_algebra_file(path)?;
            let j = jordan(&l, path)?;
            let data = read_data(dpath)?;
            let labels = Labels::new(j.names(), dpath);
            let table = required(&data.table, dpath, "table")?;
            let target_names: Vec<String> = if machine == "tstar" {
                j.names().to_vec()
            } else {
                required(&data.target, dpath, "target")?.clone()
            };
            let target = Labels::new(&target_names, dpath);
            let t = labels.table(table, &target, "table")?;
            let bt = BilinearTable { n: j.dim(), target: target_names.len(), table: t };
            let name = default_name(&[&l.name]);
            if machine == "tstar" {
                match tstar_extension(&j, &bt) {
                    Ok(p) => finish(name, &p.algebra, Some(&p.form), None, &[], true),
                    Err(e) => fail(e),
                }
            } else {
                match central_extension(&j, &bt) {
                    Ok(a) => finish(name, &a, None, None, &[], true),
                    Err(e) => fail(e),
                }
            }
        }
        "sdp" => {
            let (p1, p2, dpath) = (opt(&o.j1, "j1")?, opt(&o.j2, "j2")?, opt(&o.data, "data")?);
            let (l1, l2) = (parse_algebra_file(p1)?, parse_algebra_file(p2)?);
            let (j1, j2) = (jordan(&l1, p1)?, jordan(&l2, p2)?);
            let data = read_data(dpath)?;
            let pi = rep_from(&data, &Labels::new(j1.names(), dpath), &Labels::new(j2.names(), dpath), dpath)?;
            match semidirect_product(&j1, &j2, &pi) {
                Ok(a) => finish(default_name(&[&l1.name, &l2.name]), &a, None, None, &[], true),
                Err(e) => fail(e),
            }
        }
        "gsd" => {
            let (path, dpath) = (opt(&o.algebra, "algebra")?, opt(&o.data, "data")?);
            let l = parse_algebra_file(path)?;
            let j = jordan(&l, path)?;
            let data = read_data(dpath)?;
            let pair = pair_from(&data, &Labels::new(j.names(), dpath))?;
            match generalized_semidirect(&j, &pair) {
                Ok(a) => finish(default_name(&[&l.name]), &a, None, None, &[], true),
                Err(e) => fail(e),
            }
        }
        "de" => {
            let (bpath, tpath, dpath) = (opt(&o.base, "base")?, opt(&o.top, "top")?, opt(&o.data, "data")?);
            let (lb, lt) = (parse_algebra_file(bpath)?, parse_algebra_file(tpath)?);
            let (base, top) = (pe(&lb, bpath)?, jordan(&lt, tpath)?);
            let data = read_data(dpath)?;
            let top_labels = Labels::new(top.names(), dpath);
            let pi = rep_from(&data, &top_labels, &Labels::new(base.names(), dpath), dpath)?;
            let gamma = match &data.gamma {
                Some(g) => top_labels.gram(g, "gamma", 1)?,
                None => Matrix::zeros(top.dim(), top.dim()),
            };
            match double_extension(&base, &top, &pi, &gamma) {
                Ok(p) => finish(default_name(&[&lb.name, &lt.name]), &p.algebra, Some(&p.form), None, &[], true),
                Err(e) => fail(e),
            }
        }
        "gde" | "sympde" | "manin-de" => {
            let (bpath, dpath) = (opt(&o.base, "base")?, opt(&o.data, "data")?);
            let lb = parse_algebra_file(bpath)?;
            let base = pe(&lb, bpath)?;
            let data = read_data(dpath)?;
            let base_names = base.names().to_vec();
            let labels = Labels::new(&base_names, dpath);
            let pair = pair_from(&data, &labels)?;
            let name = default_name(&[&lb.name]);
            match machine {
                "gde" => match generalized_double_extension(&base, &pair, &k_from(&data, dpath)?) {
                    Ok(p) => finish(name, &p.algebra, Some(&p.form), None, &[], true),
                    Err(e) => fail(e),
                },
                "sympde" => {
                    let s = match SymplecticPe::new(base, omega(&lb, bpath)?) {
                        Ok(s) => s,
                        Err(e) => return Err(input(format!("{bpath}: {e}"))),
                    };
                    let a0 = labels.vector(required(&data.a0, dpath, "a0")?, "a0")?;
                    let lambda = parse_scalar(required(&data.lambda, dpath, "lambda")?, &format!("{dpath}: lambda"))?;
                    match symplectic_double_extension(&s, &pair, &a0, &lambda, &k_from(&data, dpath)?) {
                        Ok(out) => finish(name, &out.pe.algebra, Some(&out.pe.form), Some(&out.omega), &[], true),
                        Err(e) => fail(e),
                    }
                }
                _ => {
                    let m = ManinTriple::new(base, subspace(&lb, bpath, "U")?, subspace(&lb, bpath, "V")?, None)
                        .map_err(|e| input(format!("{bpath}: {e}")))?;
                    match manin_double_extension(&m, &pair) {
                        Ok(t) => finish(name, &t.pe.algebra, Some(&t.pe.form), None, &[("U", &t.u), ("V", &t.v)], true),
                        Err(e) => fail(e),
                    }
                }
            }
        }
        "drinfeld" => {
            let path = opt(&o.algebra, "algebra")?;
            let l = parse_algebra_file(path)?;
            let p = pe(&l, path)?;
            let r = RMatrix::from_omega(&omega(&l, path)?).map_err(|e| input(format!("{path}: {e}")))?;
            match delta_r_and_double(&p.algebra, &r) {
                Ok(d) => finish(default_name(&[&l.name]), &d.double, None, None, &[], d.is_bialgebra),
                Err(e) => fail(e),
            }
        }
        other => Err(input(format!("unknown machine {other:?}"))),
    }
}

// ---------------------------------------------------------------------------------------------
// peel

#[derive(Clone, Debug, Default)]
pub struct PeelOpts {
    pub b: Option<String>,
    pub ideal: Option<String>,
}

/// `"label"` or `"l1=c1,l2=c2"`.
fn parse_direction(spec: &str, labels: &Labels) -> Result<Vector, InputError> {
    let mut v = vector::zeros(labels.names.len());
    for part in spec.split(',') {
        let (l, c) = match part.split_once('=') {
            Some((l, c)) => (l.trim(), parse_scalar(c, "--b")?),
            None => (part.trim(), jforge::scalar::one()),
        };
        v[labels.index(l, "--b")?] = c;
    }
    Ok(v)
}

fn pair_json(names: &[String], pair: &AdmissiblePair) -> Value {
    json!({"d": report::operator(names, &pair.d), "x0": report::vector(names, &pair.x0)})
}

pub fn peel(kind: &str, path: &str, o: &PeelOpts) -> Result<(Outcome, Option<Artifact>), InputError> {
    let l = parse_algebra_file(path)?;
    let p = pe(&l, path)?;
    let names = p.names().to_vec();
    let ctx = json!({"kind": kind});
    let fail = |e: jforge::Error| lib_error(e, ctx.clone()).map(|out| (out, None));
    let base_name = format!("peel-{kind}({})", l.name);
    match kind {
        "gde" => {
            let labels = Labels::new(&names, path);
            let b = match &o.b {
                Some(s) => parse_direction(s, &labels)?,
                None => match p.algebra.annihilator().basis().iter().find(|v| p.b(v, v) == jforge::scalar::zero()) {
                    Some(v) => v.clone(),
                    None => {
                        return fail(jforge::Error::BadDirection("no isotropic basis vector of the annihilator; pass --b".into()))
                    }
                },
            };
            match peel_gde(&p, &b) {
                Ok(g) => {
                    let bn = g.base.names().to_vec();
                    let art = artifact(&base_name, &g.base.algebra, Some(&g.base.form), None, &[]);
                    let rep = json!({
                        "kind": kind,
                        "ok": true,
                        "a": report::vector(&names, &g.a),
                        "b": report::vector(&names, &g.b),
                        "k": report::scalar(&g.k),
                        "pair": pair_json(&bn, &g.pair),
                        "base": file_json(&base_name, &g.base.algebra, Some(&g.base.form), None, &[]),
                        "isometry": report::matrix(&g.isometry),
                    });
                    Ok((Outcome::pass(rep), Some(art)))
                }
                Err(e) => fail(e),
            }
        }
        "de" => {
            let iname = o.ideal.as_deref().ok_or_else(|| input("--ideal is required"))?;
            let ideal = subspace(&l, path, iname)?;
            match peel_de(&p, &ideal) {
                Ok(d) => {
                    let (bn, tn) = (d.base.names().to_vec(), d.top.names().to_vec());
                    let pi: BTreeMap<String, Value> =
                        d.pi.iter().enumerate().map(|(i, m)| (tn[i].clone(), report::operator(&bn, m))).collect();
                    let art = artifact(&base_name, &d.base.algebra, Some(&d.base.form), None, &[]);
                    let rep = json!({
                        "kind": kind,
                        "ok": true,
                        "base": file_json(&base_name, &d.base.algebra, Some(&d.base.form), None, &[]),
                        "top": file_json(&format!("top({})", l.name), &d.top, Some(&d.gamma), None, &[]),
                        "pi": pi,
                        "ideal_perp": report::subspace(&names, &d.ideal_perp),
                        "complement": report::subspace(&names, &d.complement),
                        "isometry": report::matrix(&d.isometry),
                    });
                    Ok((Outcome::pass(rep), Some(art)))
                }
                Err(e) => fail(e),
            }
        }
        "symp" => {
            let s = SymplecticPe::new(p.clone(), omega(&l, path)?).map_err(|e| input(format!("{path}: {e}")))?;
            match peel_symplectic(&s) {
                Ok(sp) => {
                    let bn = sp.base.pe.names().to_vec();
                    let b = &sp.base;
                    let art = artifact(&base_name, &b.pe.algebra, Some(&b.pe.form), Some(&b.omega), &[]);
                    let rep = json!({
                        "kind": kind,
                        "ok": true,
                        "a": report::vector(&names, &sp.gde.a),
                        "b": report::vector(&names, &sp.gde.b),
                        "k": report::scalar(sp.k()),
                        "lambda": report::scalar(&sp.lambda),
                        "a0": report::vector(&bn, &sp.a0),
                        "pair": pair_json(&bn, sp.pair()),
                        "base": file_json(&base_name, &b.pe.algebra, Some(&b.pe.form), Some(&b.omega), &[]),
                        "isometry": report::matrix(&sp.gde.isometry),
                    });
                    Ok((Outcome::pass(rep), Some(art)))
                }
                Err(e) => fail(e),
            }
        }
        "manin" | "symp-manin" => {
            let w = if kind == "symp-manin" { Some(omega(&l, path)?) } else { l.omega.clone() };
            let m = ManinTriple::new(p.clone(), subspace(&l, path, "U")?, subspace(&l, path, "V")?, w)
                .map_err(|e| input(format!("{path}: {e}")))?;
            let result = if kind == "manin" {
                peel_manin(&m).map(|pm| (pm.base, pm.pair, pm.gde.isometry, pm.swapped, None))
            } else {
                peel_symplectic_manin(&m).map(|pm| {
                    let extra = json!({"lambda": report::scalar(&pm.peel.lambda), "k": report::scalar(pm.peel.k())});
                    let extra = (extra, pm.peel.a0.clone());
                    (pm.base, pm.peel.gde.pair.clone(), pm.peel.gde.isometry.clone(), pm.swapped, Some(extra))
                })
            };
            match result {
                Ok((base, pair, iso, swapped, extra)) => {
                    let bn = base.pe.names().to_vec();
                    let subs = [("U", &base.u), ("V", &base.v)];
                    let art = artifact(&base_name, &base.pe.algebra, Some(&base.pe.form), base.omega.as_ref(), &subs);
                    let mut rep = json!({
                        "kind": kind,
                        "ok": true,
                        "swapped": swapped,
                        "pair": pair_json(&bn, &pair),
                        "base": file_json(&base_name, &base.pe.algebra, Some(&base.pe.form), base.omega.as_ref(), &subs),
                        "isometry": report::matrix(&iso),
                    });
                    if let Some((e, a0)) = extra {
                        rep["lambda"] = e["lambda"].clone();
                        rep["k"] = e["k"].clone();
                        rep["a0"] = report::vector(&bn, &a0);
                    }
                    Ok((Outcome::pass(rep), Some(art)))
                }
                Err(e) => fail(e),
            }
        }
        other => Err(input(format!("unknown peel kind {other:?}"))),
    }
}

// ---------------------------------------------------------------------------------------------
// tkk

pub fn tkk(path: &str, lift: Option<&str>, check_d1: bool) -> CmdResult {
    if check_d1 && lift.is_none() {
        return Err(input("--check-d1 needs --lift"));
    }
    let l = parse_algebra_file(path)?;
    let p = pe(&l, path)?;
    let t = match tkk_build(&p) {
        Ok(t) => t,
        Err(e) => return lib_error(e, json!({"name": l.name})),
    };
    let lie = &t.lie;
    let form = t.form();
    let jacobi = lie.jacobi_failure();
    let invariance = lie.invariance_failure(form);
    let nondegenerate = form.is_invertible();
    let killing = lie.killing_form();
    let ln = lie.names().to_vec();
    let mut ok = jacobi.is_none() && invariance.is_none() && nondegenerate;
    let mut rep = json!({
        "name": l.name,
        "dim": lie.dim(),
        "basis": ln,
        "grading": lie.grading(),
        "jacobi": jacobi.is_none(),
        "jacobi_violation": jacobi.map(|t| triple(&ln, t)),
        "invariant": invariance.is_none(),
        "invariance_violation": invariance.map(|t| triple(&ln, t)),
        "nondegenerate": nondegenerate,
        "abelian": lie.is_abelian(),
        "killing_rank": killing.rank(),
        "killing_nondegenerate": killing.is_invertible(),
    });
    if let Some(dpath) = lift {
        let data = read_data(dpath)?;
        let d = Labels::new(p.names(), dpath).operator(required(&data.d, dpath, "d")?, "d")?;
        match lift_derivation(&p, &t, &d) {
            Ok(dl) => {
                let w = omega_l(&t, &dl);
                let d1 = check_condition_d1(&t, &dl);
                if check_d1 {
                    ok &= d1;
                }
                rep["lift"] = json!({
                    "d_l": report::matrix(&dl),
                    "antisymmetric": is_form_antisymmetric(&t, &dl),
                    "z2_compatible": is_z2_compatible(&t, &w),
                    "d1": d1,
                });
            }
            Err(e) => return lib_error(e, rep),
        }
    }
    rep["ok"] = json!(ok);
    Ok(Outcome { report: rep, pass: ok })
}

// ---------------------------------------------------------------------------------------------
// catalog

pub fn catalog_list() -> CmdResult {
    let entries: Vec<Value> = catalog::list().into_iter().map(|(n, d)| json!({"name": n, "description": d})).collect();
    Ok(Outcome::pass(json!({"entries": entries})))
}

/// `k=v` pairs.
pub fn catalog_get(name: &str, params: &[String]) -> Result<(Outcome, Option<Artifact>), InputError> {
    let mut ps = Params::new();
    for kv in params {
        let (k, v) = kv.split_once('=').ok_or_else(|| input(format!("--param {kv:?}: expected name=value")))?;
        ps.insert(k.trim().to_string(), parse_scalar(v, &format!("--param {k}"))?);
    }
    let e = catalog::get(name, &ps).map_err(|e| input(e.to_string()))?;
    if e.algebra.dim() > crate::files::max_dim()? {
        return Err(input(format!("{name}: dimension exceeds JFORGE_MAX_DIM")));
    }
    let art = artifact(&e.name, &e.algebra, e.form.as_ref(), None, &[]);
    let rep = json!({"name": e.name, "dim": e.algebra.dim(), "notes": e.notes, "ok": true});
    Ok((Outcome::pass(rep), Some(art)))
}

/// Re-reads an emitted artifact; used to guarantee outputs parse back.
pub fn reparse(a: &Artifact) -> Result<Loaded, InputError> {
    let f = serde_json::from_str(&a.text).map_err(|e| input(format!("emitted file: {e}")))?;
    load(f, "emitted file")
}
