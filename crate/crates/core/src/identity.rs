//! Exact verification of polynomial identities by evaluation on basis lattices.
//!
//! A vector-valued polynomial of degree at most `d` in `x` vanishes identically iff it vanishes
//! at every point `sum c_i e_i` with `c` a multiset of at most `d` basis indices. If it is
//! homogeneous of degree exactly `d`, multisets of size exactly `d` suffice. Both sets determine
//! the full polarization, so checking them is equivalent to checking the multilinear identity on
//! basis tuples. With several variables the grids are taken in product.

use crate::linalg::vector::{self, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Exact(usize),
    AtMost(usize),
}

/// A failing evaluation: the multiset of basis indices for each variable and both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: String,
    pub indices: Vec<Vec<usize>>,
    pub left: Vector,
    pub right: Vector,
}

impl Violation {
    pub fn describe(&self, names: &[String]) -> String {
        let per: Vec<&[String]> = vec![names; self.indices.len()];
        self.describe_each(&per)
    }

    /// Like [`Violation::describe`] with separate label sets per variable.
    pub fn describe_each(&self, names: &[&[String]]) -> String {
        let vars: Vec<String> = self
            .indices
            .iter()
            .enumerate()
            .map(|(k, m)| {
                if m.is_empty() {
                    return "0".to_string();
                }
                let nm = names.get(k).copied().unwrap_or(&[]);
                m.iter().map(|&i| nm.get(i).cloned().unwrap_or_else(|| format!("#{i}"))).collect::<Vec<_>>().join("+")
            })
            .collect();
        format!("{} at ({})", self.condition, vars.join(", "))
    }
}

/// Multisets drawn from `0..n` of the given sizes, in lexicographic order.
pub fn multisets(n: usize, degree: Degree) -> Vec<Vec<usize>> {
    let sizes: Vec<usize> = match degree {
        Degree::Exact(d) => vec![d],
        Degree::AtMost(d) => (0..=d).collect(),
    };
    let mut out = Vec::new();
    for s in sizes {
        let mut cur = Vec::with_capacity(s);
        rec(n, s, 0, &mut cur, &mut out);
    }
    out
}

fn rec(n: usize, left: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        rec(n, left - 1, i, cur, out);
        cur.pop();
    }
}

pub fn point(n: usize, m: &[usize]) -> Vector {
    let mut v = vector::zeros(n);
    for &i in m {
        v[i] += crate::scalar::one();
    }
    v
}

/// Evaluates `f` on the product grid and returns the first point where the two sides differ.
///
/// `dims[k]` is the ambient dimension of variable `k`.
pub fn check(
    condition: &str,
    dims: &[usize],
    degrees: &[Degree],
    mut f: impl FnMut(&[Vector]) -> (Vector, Vector),
) -> Option<Violation> {
    assert_eq!(dims.len(), degrees.len());
    let grids: Vec<Vec<Vec<usize>>> = dims.iter().zip(degrees).map(|(&n, &d)| multisets(n, d)).collect();
    let points: Vec<Vec<Vector>> =
        grids.iter().zip(dims).map(|(g, &n)| g.iter().map(|m| point(n, m)).collect()).collect();
    let mut idx = vec![0usize; dims.len()];
    if grids.iter().any(Vec::is_empty) {
        return None;
    }
    loop {
        let args: Vec<Vector> = idx.iter().enumerate().map(|(k, &i)| points[k][i].clone()).collect();
        let (l, r) = f(&args);
        if l != r {
            return Some(Violation {
                condition: condition.to_string(),
                indices: idx.iter().enumerate().map(|(k, &i)| grids[k][i].clone()).collect(),
                left: l,
                right: r,
            });
        }
        let mut k = dims.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < grids[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Linear map from parameters to residuals: column `u` is the residual of the `u`-th unit
/// parameter. Used to solve for every parameter satisfying a linear identity.
pub fn residual_columns(
    params: usize,
    mut residual: impl FnMut(&[Scalar]) -> Vector,
) -> crate::linalg::Matrix {
    let cols: Vec<Vector> = (0..params).map(|u| residual(&vector::unit(params, u))).collect();
    let rows = cols.first().map_or(0, Vec::len);
    crate::linalg::Matrix::from_columns(rows, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(3, Degree::Exact(2)).len(), 6);
        assert_eq!(multisets(3, Degree::AtMost(2)).len(), 10);
        assert_eq!(multisets(2, Degree::Exact(0)), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn detects_non_vanishing_quadratic() {
        // x1 * x2 vanishes on basis vectors but not on e1 + e2
        let v = check("q", &[2], &[Degree::Exact(2)], |a| (vec![&a[0][0] * &a[0][1]], vec![int(0)]));
        assert_eq!(v.unwrap().indices, vec![vec![0, 1]]);
    }
}
