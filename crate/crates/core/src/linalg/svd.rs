//! One-sided Jacobi singular value decomposition.
//!
//! Column pairs of the working matrix are rotated until mutually orthogonal;
//! singular values are the final column norms. This keeps full accuracy on
//! small singular values, which matters when comparing Schmidt coefficients
//! against tight tolerances.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::linalg::matrix::ComplexMatrix;
use crate::math;
use crate::{Error, Result};

const MAX_SWEEPS: usize = 64;
const ORTHO_EPS: f64 = 1e-14;

/// Factorization `a = u · diag(values) · v†` with unitary `u` (rows x rows)
/// and `v` (cols x cols); `values` holds the min(rows, cols) singular values
/// in non-increasing order.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: ComplexMatrix,
    pub values: Vec<f64>,
    pub v: ComplexMatrix,
}

pub fn svd(a: &ComplexMatrix) -> Result<Svd> {
    let m = a.rows();
    let n = a.cols();
    let mut w = a.clone();
    let mut v = ComplexMatrix::identity(n);

    let mut sweeps = 0;
    loop {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let (gpp, gqq, gpq) = gram_entries(&w, p, q);
                let scale = math::sqrt(gpp * gqq);
                if scale == 0.0 || gpq.norm() <= ORTHO_EPS * scale {
                    continue;
                }
                rotated = true;
                let habs = gpq.norm();
                let phase = gpq / habs;
                let zeta = (gqq - gpp) / (2.0 * habs);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + math::sqrt(1.0 + zeta * zeta))
                } else {
                    -1.0 / (-zeta + math::sqrt(1.0 + zeta * zeta))
                };
                let c = 1.0 / math::sqrt(1.0 + t * t);
                let s = t * c;
                let sp = phase.conj() * s;
                let cp = phase.conj() * c;
                rotate_columns(&mut w, p, q, c, s, sp, cp);
                rotate_columns(&mut v, p, q, c, s, sp, cp);
            }
        }
        if !rotated {
            break;
        }
        sweeps += 1;
        if sweeps > MAX_SWEEPS {
            return Err(Error::SvdNoConvergence { sweeps });
        }
    }

    assemble(w, v, m, n)
}

fn gram_entries(w: &ComplexMatrix, p: usize, q: usize) -> (f64, f64, Complex64) {
    let m = w.rows();
    let mut gpp = 0.0;
    let mut gqq = 0.0;
    let mut gpq = Complex64::new(0.0, 0.0);
    for i in 0..m {
        let wip = w.get(i, p);
        let wiq = w.get(i, q);
        gpp += wip.norm_sqr();
        gqq += wiq.norm_sqr();
        gpq += wip.conj() * wiq;
    }
    (gpp, gqq, gpq)
}

fn rotate_columns(
    m: &mut ComplexMatrix,
    p: usize,
    q: usize,
    c: f64,
    s: f64,
    sp: Complex64,
    cp: Complex64,
) {
    for i in 0..m.rows() {
        let mip = m.get(i, p);
        let miq = m.get(i, q);
        m.set(i, p, mip * c - miq * sp);
        m.set(i, q, mip * s + miq * cp);
    }
}

fn assemble(w: ComplexMatrix, v: ComplexMatrix, m: usize, n: usize) -> Result<Svd> {
    let rank_bound = core::cmp::min(m, n);
    let mut norms: Vec<f64> = (0..n)
        .map(|k| {
            let sq: f64 = (0..m).map(|i| w.get(i, k).norm_sqr()).sum();
            math::sqrt(sq)
        })
        .collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap().then(i.cmp(&j)));

    let s_max = if n > 0 { norms[order[0]] } else { 0.0 };
    let cutoff = math::max(s_max * 1e-13 * (core::cmp::max(m, n) as f64), f64::MIN_POSITIVE);

    let mut u = ComplexMatrix::zeros(m, m);
    let mut v_sorted = ComplexMatrix::zeros(n, n);
    let mut values = Vec::with_capacity(rank_bound);
    let mut u_filled = Vec::new();

    for (new_k, &k) in order.iter().enumerate() {
        let norm = norms[k];
        let mut v_col: Vec<Complex64> = (0..n).map(|i| v.get(i, k)).collect();
        if new_k < rank_bound {
            values.push(norm);
            if norm > cutoff {
                let mut u_col: Vec<Complex64> = (0..m).map(|i| w.get(i, k) / norm).collect();
                // Fold the phase convention of u into v so u·diag·v† is unchanged.
                if let Some(z) = u_col.iter().find(|z| z.norm() > 1e-8) {
                    let phase = z.conj() / z.norm();
                    for e in u_col.iter_mut() {
                        *e *= phase;
                    }
                    for e in v_col.iter_mut() {
                        *e *= phase;
                    }
                }
                for (i, z) in u_col.iter().enumerate() {
                    u.set(i, new_k, *z);
                }
                u_filled.push(new_k);
            }
        }
        for (i, z) in v_col.iter().enumerate() {
            v_sorted.set(i, new_k, *z);
        }
    }

    complete_columns(&mut u, &u_filled)?;
    Ok(Svd {
        u,
        values,
        v: v_sorted,
    })
}

/// Fills the columns of `u` not listed in `filled` with an orthonormal
/// completion, built by Gram-Schmidt over the standard basis in index order.
pub(crate) fn complete_columns(u: &mut ComplexMatrix, filled: &[usize]) -> Result<()> {
    let m = u.rows();
    let dim = u.cols();
    let mut have: Vec<Vec<Complex64>> = filled
        .iter()
        .map(|&k| (0..m).map(|i| u.get(i, k)).collect())
        .collect();
    let mut missing: Vec<usize> = (0..dim).filter(|k| !filled.contains(k)).collect();
    let mut slot = 0;

    for b in 0..m {
        if slot >= missing.len() {
            break;
        }
        let mut cand: Vec<Complex64> = (0..m)
            .map(|i| Complex64::new(if i == b { 1.0 } else { 0.0 }, 0.0))
            .collect();
        project_out(&mut cand, &have);
        let norm = vec_norm(&cand);
        if norm < 1e-8 {
            continue;
        }
        // Re-orthogonalize once; twice-through Gram-Schmidt is enough here.
        project_out(&mut cand, &have);
        let norm = vec_norm(&cand);
        for z in cand.iter_mut() {
            *z /= norm;
        }
        let col = missing[slot];
        for (i, z) in cand.iter().enumerate() {
            u.set(i, col, *z);
        }
        have.push(cand);
        slot += 1;
    }

    if slot < missing.len() {
        return Err(Error::Defect {
            context: "orthonormal completion ran out of basis candidates",
        });
    }
    Ok(())
}

fn project_out(cand: &mut [Complex64], basis: &[Vec<Complex64>]) {
    for col in basis {
        let overlap: Complex64 = col.iter().zip(cand.iter()).map(|(a, b)| a.conj() * b).sum();
        for (c, a) in cand.iter_mut().zip(col.iter()) {
            *c -= overlap * a;
        }
    }
}

fn vec_norm(v: &[Complex64]) -> f64 {
    math::sqrt(v.iter().map(|z| z.norm_sqr()).sum())
}
