//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each pivot (p, q) is annihilated by a 2x2 unitary built from the phase of
//! the off-diagonal entry and a real Givens rotation. Sweeps repeat until the
//! largest off-diagonal modulus drops below the configured threshold. Chosen
//! for determinism and accuracy at the dimensions this crate targets (d ≤ 64).

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::linalg::matrix::ComplexMatrix;
use crate::math;
use crate::tol::Tolerances;
use crate::{Error, Result};

/// Eigenvalues sorted non-increasing with matching eigenvector columns, so
/// that `A = V diag(values) V†`. Columns are phase-normalized (first
/// significant component real positive) and exact eigenvalue ties are ordered
/// by lexicographic column comparison, so the output is deterministic.
pub(crate) fn jacobi_hermitian(
    a0: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<(Vec<f64>, ComplexMatrix)> {
    assert!(a0.is_square());
    let d = a0.rows();
    let mut a = a0.clone();
    let mut v = ComplexMatrix::identity(d);

    if d <= 1 {
        let values = if d == 1 {
            alloc::vec![a.get(0, 0).re]
        } else {
            Vec::new()
        };
        return Ok((values, v));
    }

    let pivot_floor = tol.jacobi_off_diagonal * 1e-3;
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_max(&a);
        if off <= tol.jacobi_off_diagonal {
            break;
        }
        if sweeps >= tol.jacobi_max_sweeps {
            return Err(Error::EigenNoConvergence {
                off_diagonal: off,
                sweeps,
            });
        }
        for p in 0..d {
            for q in (p + 1)..d {
                let h = a.get(p, q);
                let habs = h.norm();
                if habs <= pivot_floor {
                    continue;
                }
                let phase = h / habs;
                rotate(&mut a, &mut v, p, q, phase, habs);
            }
        }
        sweeps += 1;
    }

    let values: Vec<f64> = (0..d).map(|i| a.get(i, i).re).collect();
    Ok(sort_eigensystem(values, v))
}

/// Applies the pivot rotation `A <- R† A R`, `V <- V R` where `R` embeds
/// `[[c, s], [-s·conj(phase), c·conj(phase)]]` in the (p, q) plane.
fn rotate(
    a: &mut ComplexMatrix,
    v: &mut ComplexMatrix,
    p: usize,
    q: usize,
    phase: Complex64,
    habs: f64,
) {
    let d = a.rows();
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    let zeta = (aqq - app) / (2.0 * habs);
    let t = if zeta >= 0.0 {
        1.0 / (zeta + math::sqrt(1.0 + zeta * zeta))
    } else {
        -1.0 / (-zeta + math::sqrt(1.0 + zeta * zeta))
    };
    let c = 1.0 / math::sqrt(1.0 + t * t);
    let s = t * c;
    let sp = phase.conj() * s;
    let cp = phase.conj() * c;
    let sf = phase * s;
    let cf = phase * c;

    // Columns: A <- A R.
    for i in 0..d {
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a.set(i, p, aip * c - aiq * sp);
        a.set(i, q, aip * s + aiq * cp);
    }
    // Rows: A <- R† A.
    for j in 0..d {
        let apj = a.get(p, j);
        let aqj = a.get(q, j);
        a.set(p, j, apj * c - aqj * sf);
        a.set(q, j, apj * s + aqj * cf);
    }
    // The pivot is annihilated by construction; clear roundoff explicitly.
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));
    a.set(p, p, Complex64::new(a.get(p, p).re, 0.0));
    a.set(q, q, Complex64::new(a.get(q, q).re, 0.0));

    for i in 0..d {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v.set(i, p, vip * c - viq * sp);
        v.set(i, q, vip * s + viq * cp);
    }
}

fn off_diagonal_max(a: &ComplexMatrix) -> f64 {
    let d = a.rows();
    let mut worst = 0.0;
    for p in 0..d {
        for q in (p + 1)..d {
            worst = math::max(worst, a.get(p, q).norm());
        }
    }
    worst
}

/// Sorts eigenpairs by value (non-increasing); exact ties are ordered by
/// lexicographic comparison of the phase-normalized columns.
fn sort_eigensystem(values: Vec<f64>, v: ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let d = values.len();
    let mut columns: Vec<Vec<Complex64>> = (0..d)
        .map(|k| {
            let col: Vec<Complex64> = (0..d).map(|i| v.get(i, k)).collect();
            normalize_phase(col)
        })
        .collect();

    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| {
        values[j]
            .partial_cmp(&values[i])
            .unwrap()
            .then_with(|| compare_columns(&columns[i], &columns[j]))
    });

    let sorted_values: Vec<f64> = order.iter().map(|&k| values[k]).collect();
    let mut sorted = ComplexMatrix::zeros(d, d);
    for (new_k, &k) in order.iter().enumerate() {
        let col = core::mem::take(&mut columns[k]);
        for (i, z) in col.into_iter().enumerate() {
            sorted.set(i, new_k, z);
        }
    }
    (sorted_values, sorted)
}

fn normalize_phase(mut col: Vec<Complex64>) -> Vec<Complex64> {
    if let Some(z) = col.iter().find(|z| z.norm() > 1e-8) {
        let phase = z.conj() / z.norm();
        for entry in col.iter_mut() {
            *entry *= phase;
        }
    }
    col
}

fn compare_columns(a: &[Complex64], b: &[Complex64]) -> core::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.re.partial_cmp(&y.re).unwrap() {
            core::cmp::Ordering::Equal => {}
            other => return other,
        }
        match x.im.partial_cmp(&y.im).unwrap() {
            core::cmp::Ordering::Equal => {}
            other => return other,
        }
    }
    core::cmp::Ordering::Equal
}
