//! Essential hyperplanes of G(d,1,r) and specializations lying on them.
//!
//! In the exponent coordinates `(M_0, ..., M_{d-1}, N)` of a cyclotomic
//! specialization `u_j -> zeta_d^j q^{m_j}`, `x -> q^n`, the essential
//! hyperplanes are
//!
//! * `kN + M_s - M_t = 0` for `0 <= s < t < d` and `-r < k < r`, provided
//!   `zeta_d^s - zeta_d^t` lies in some prime ideal of `Z[zeta_d]` (a
//!   prime-power condition on `t - s`), and
//! * `N = 0`.
//!
//! Rouquier blocks depend on the specialization only through the set of
//! essential hyperplanes containing its exponent data.

use crate::cyclotomics::prime_power_support;
use crate::{Error, Result};

/// Integer exponent data of a cyclotomic specialization of G(d,1,r):
/// `u_j -> zeta_d^j q^{m_j}` and `x -> q^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Specialization {
    d: usize,
    r: u32,
    weights: Vec<i64>,
    n: i64,
}

impl Specialization {
    pub fn new(d: usize, r: u32, weights: Vec<i64>, n: i64) -> Result<Self> {
        if d < 1 {
            return Err(Error::SpecializationMismatch("d must be >= 1".into()));
        }
        if r < 1 {
            return Err(Error::SpecializationMismatch("r must be >= 1".into()));
        }
        if weights.len() != d {
            return Err(Error::WeightLength { expected: d, got: weights.len() });
        }
        Ok(Specialization { d, r, weights, n })
    }

    /// m = (1, 0, ..., 0), n = 1.
    pub fn spetsial(d: usize, r: u32) -> Self {
        let mut weights = vec![0; d];
        weights[0] = 1;
        Specialization { d, r, weights, n: 1 }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn n(&self) -> i64 {
        self.n
    }
}

/// An essential hyperplane in the exponent coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EssentialHyperplane {
    /// N = 0.
    N,
    /// kN + M_s - M_t = 0 with 0 <= s < t < d.
    Pair { k: i64, s: usize, t: usize },
}

/// Whether the hyperplane is in the essential list for (d, r).
pub fn is_essential(h: &EssentialHyperplane, d: usize, r: u32) -> bool {
    match *h {
        EssentialHyperplane::N => true,
        EssentialHyperplane::Pair { k, s, t } => {
            s < t
                && t < d
                && k.unsigned_abs() < r as u64
                && matches!(prime_power_support(d as u64, (t - s) as i64), Ok(Some(_)))
        }
    }
}

/// All essential hyperplanes of G(d,1,r): N = 0 first, then the pair
/// hyperplanes in (s, t, k) lexicographic order.
pub fn essential_hyperplanes(d: usize, r: u32) -> Vec<EssentialHyperplane> {
    assert!(d >= 1 && r >= 1);
    let mut out = vec![EssentialHyperplane::N];
    for s in 0..d {
        for t in (s + 1)..d {
            if !matches!(prime_power_support(d as u64, (t - s) as i64), Ok(Some(_))) {
                continue;
            }
            for k in -(r as i64 - 1)..=(r as i64 - 1) {
                out.push(EssentialHyperplane::Pair { k, s, t });
            }
        }
    }
    out
}

/// The essential hyperplanes the exponent data of `phi` lies on.
///
/// A pair hyperplane contains `phi` iff `k*n + m_s - m_t = 0`; when `n = 0`
/// and `m_s = m_t`, every `k` in range qualifies and all are returned.
pub fn hyperplanes_containing(phi: &Specialization) -> Vec<EssentialHyperplane> {
    essential_hyperplanes(phi.d(), phi.r())
        .into_iter()
        .filter(|h| match *h {
            EssentialHyperplane::N => phi.n() == 0,
            EssentialHyperplane::Pair { k, s, t } => {
                k * phi.n() + phi.weights()[s] - phi.weights()[t] == 0
            }
        })
        .collect()
}
