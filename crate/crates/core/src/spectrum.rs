//! Non-negative spectra (eigenvalue or probability vectors).

use alloc::vec::Vec;

use crate::tol::Tolerances;
use crate::{Error, Result};

/// A vector of non-negative reals, typically eigenvalues or outcome
/// probabilities. Comparisons treat the canonical (non-increasing) form and
/// zero-pad the shorter operand, so spectra of different lengths compare the
/// way their non-zero parts dictate.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumVector {
    values: Vec<f64>,
    canonical: bool,
}

impl SpectrumVector {
    /// Validates entries: finite, and no entry below `-tol.spectrum_floor`.
    /// Entries in `[-floor, 0)` are clamped to zero.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        Self::new_with(values, &Tolerances::DEFAULT)
    }

    pub fn new_with(mut values: Vec<f64>, tol: &Tolerances) -> Result<Self> {
        for v in values.iter_mut() {
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    context: "spectrum",
                });
            }
            if *v < 0.0 {
                if *v < -tol.spectrum_floor {
                    return Err(Error::NegativeEntry { value: *v });
                }
                *v = 0.0;
            }
        }
        let canonical = is_sorted_non_increasing(&values);
        Ok(SpectrumVector { values, canonical })
    }

    /// Wraps values already known to be sorted non-increasing.
    pub(crate) fn from_sorted(values: Vec<f64>) -> Self {
        debug_assert!(is_sorted_non_increasing(&values));
        SpectrumVector {
            values,
            canonical: true,
        }
    }

    pub fn uniform(dim: usize) -> Self {
        Self::from_sorted(alloc::vec![1.0 / dim as f64; dim])
    }

    pub fn point_mass(dim: usize) -> Self {
        let mut v = alloc::vec![0.0; dim];
        if dim > 0 {
            v[0] = 1.0;
        }
        Self::from_sorted(v)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Number of entries strictly above `cutoff`.
    pub fn rank(&self, cutoff: f64) -> usize {
        self.values.iter().filter(|&&v| v > cutoff).count()
    }

    /// Sorted non-increasing copy.
    pub fn canonical(&self) -> SpectrumVector {
        if self.canonical {
            return self.clone();
        }
        let mut values = self.values.clone();
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        SpectrumVector {
            values,
            canonical: true,
        }
    }

    /// Zero-extends to `dim` entries (no-op if already at least that long).
    pub fn padded(&self, dim: usize) -> SpectrumVector {
        if self.values.len() >= dim {
            return self.clone();
        }
        let mut values = self.values.clone();
        values.resize(dim, 0.0);
        SpectrumVector {
            values,
            canonical: self.canonical,
        }
    }

    /// Equality of the padded canonical forms within `eps`; implements the
    /// convention that spectra are equal when their non-zero entries agree.
    pub fn approx_eq(&self, other: &SpectrumVector, eps: f64) -> bool {
        let (a, b) = pad_pair(self, other);
        a.values
            .iter()
            .zip(&b.values)
            .all(|(x, y)| (x - y).abs() <= eps)
    }

    /// Largest entrywise difference of the padded canonical forms.
    pub fn max_abs_diff(&self, other: &SpectrumVector) -> f64 {
        let (a, b) = pad_pair(self, other);
        a.values
            .iter()
            .zip(&b.values)
            .fold(0.0, |acc, (x, y)| acc.max((x - y).abs()))
    }
}

/// Canonicalizes both spectra and zero-pads the shorter one so they share a
/// dimension.
pub fn pad_pair(x: &SpectrumVector, y: &SpectrumVector) -> (SpectrumVector, SpectrumVector) {
    let d = core::cmp::max(x.dim(), y.dim());
    (x.canonical().padded(d), y.canonical().padded(d))
}

fn is_sorted_non_increasing(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[0] >= w[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clamps_small_negatives_and_rejects_large() {
        let s = SpectrumVector::new(alloc::vec![0.5, -1e-13, 0.5]).unwrap();
        assert_eq!(s.values(), &[0.5, 0.0, 0.5]);
        assert!(!s.is_canonical());
        assert!(matches!(
            SpectrumVector::new(alloc::vec![0.5, -1e-6]),
            Err(Error::NegativeEntry { .. })
        ));
    }

    #[test]
    fn pad_pair_matches_convention() {
        let x = SpectrumVector::new(alloc::vec![1.0 / 3.0; 3]).unwrap();
        let y = SpectrumVector::new(alloc::vec![0.5, 0.5]).unwrap();
        let (px, py) = pad_pair(&x, &y);
        assert_eq!(px.values(), &[1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]);
        assert_eq!(py.values(), &[0.5, 0.5, 0.0]);
    }

    #[test]
    fn pad_pair_identity_and_single() {
        let x = SpectrumVector::new(alloc::vec![0.5, 0.25, 0.25]).unwrap();
        let (a, b) = pad_pair(&x, &x);
        assert_eq!(a, b);

        let one = SpectrumVector::new(alloc::vec![1.0]).unwrap();
        let (p1, p2) = pad_pair(&one, &x);
        assert_eq!(p1.values(), &[1.0, 0.0, 0.0]);
        assert_eq!(p2.values(), &[0.5, 0.25, 0.25]);
    }

    #[test]
    fn canonical_sorts_descending() {
        let s = SpectrumVector::new(alloc::vec![0.1, 0.7, 0.2]).unwrap();
        assert_eq!(s.canonical().values(), &[0.7, 0.2, 0.1]);
    }
}
