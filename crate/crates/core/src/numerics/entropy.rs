use crate::error::{Error, Result};

/// Allowed `| sum p - 1 |`.
pub const SUM_TOLERANCE: f64 = 1e-10;
/// Entries in `[-CLAMP_TOLERANCE, 0)` are treated as rounding noise and set to zero.
pub const CLAMP_TOLERANCE: f64 = 1e-12;

/// Validated discrete probability distribution.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilityVector {
    probs: Vec<f64>,
}

impl ProbabilityVector {
    pub fn new(mut probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidDistribution("empty distribution".into()));
        }
        for p in probs.iter_mut() {
            if !p.is_finite() {
                return Err(Error::InvalidDistribution(format!("non-finite entry {p}")));
            }
            if *p < -CLAMP_TOLERANCE {
                return Err(Error::InvalidDistribution(format!("negative entry {p:e}")));
            }
            if *p < 0.0 {
                *p = 0.0;
            }
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::InvalidDistribution(format!(
                "entries sum to {total}, not 1"
            )));
        }
        Ok(Self { probs })
    }

    pub fn uniform(len: usize) -> Self {
        Self {
            probs: vec![1.0 / len as f64; len],
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// `sum p^2`.
    pub fn collision_probability(&self) -> f64 {
        self.probs.iter().map(|p| p * p).sum()
    }

    /// Entries sorted in descending order.
    pub fn sorted_desc(&self) -> Vec<f64> {
        let mut v = self.probs.clone();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }
}

/// Shannon entropy in nats, with `0 ln 0 = 0`.
pub fn shannon_entropy(p: &ProbabilityVector) -> f64 {
    // summing in sorted order makes the value independent of entry order
    let mut sorted = p.probs.clone();
    sorted.sort_by(f64::total_cmp);
    let h: f64 = sorted
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.ln())
        .sum();
    h.max(0.0)
}

/// Rényi entropy of order 2 in nats: `-ln sum p^2`.
pub fn renyi2_entropy(p: &ProbabilityVector) -> f64 {
    (-p.collision_probability().ln()).max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    #[test]
    fn shannon_examples() {
        let half = ProbabilityVector::new(vec![0.5, 0.5]).unwrap();
        assert!((shannon_entropy(&half) - LN_2).abs() < 1e-15);
        let point = ProbabilityVector::new(vec![1.0, 0.0]).unwrap();
        assert_eq!(shannon_entropy(&point), 0.0);
        let hesse = ProbabilityVector::new(vec![0.0, 0.5, 0.5]).unwrap();
        assert!((shannon_entropy(&hesse) - LN_2).abs() < 1e-15);
    }

    #[test]
    fn renyi_examples() {
        let u = ProbabilityVector::uniform(8);
        assert!((renyi2_entropy(&u) - 8f64.ln()).abs() < 1e-15);
        let mut point = vec![0.0; 8];
        point[0] = 1.0;
        assert_eq!(renyi2_entropy(&ProbabilityVector::new(point).unwrap()), 0.0);
        let mut a = vec![1.0 / 12.0; 8];
        a[0] = 5.0 / 12.0;
        let a = ProbabilityVector::new(a).unwrap();
        assert!((renyi2_entropy(&a) + (2.0f64 / 9.0).ln()).abs() < 1e-14);
    }

    #[test]
    fn clamps_tiny_negatives() {
        let p = ProbabilityVector::new(vec![-5e-13, 1.0 + 5e-13]).unwrap();
        assert_eq!(p.as_slice()[0], 0.0);
    }

    #[test]
    fn rejects_invalid() {
        assert!(ProbabilityVector::new(vec![0.5, 0.4]).is_err());
        assert!(ProbabilityVector::new(vec![-0.1, 1.1]).is_err());
        assert!(ProbabilityVector::new(vec![]).is_err());
        assert!(ProbabilityVector::new(vec![f64::NAN, 1.0]).is_err());
    }
}
