//! Closed-form arithmetic facts about roots of unity in `Z[zeta_d]`.
//!
//! Everything the block theory needs about the cyclotomic ring reduces to
//! three exact tests on integer data, all driven by the order
//! `e = d / gcd(d, w)` of `zeta_d^w`:
//!
//! * `1 - zeta_d^w` is a non-unit iff `e` is a prime power `p^b`; in that
//!   case its norm is a power of `p` ([`prime_power_support`]);
//! * the images of `zeta_d^a` and `zeta_d^b` agree in every residue field of
//!   characteristic `p` iff `a = b` modulo the p'-part of `d`
//!   ([`roots_equal_mod_p`]);
//! * the valuation of `1 - zeta_d^w` at any prime over `p` is
//!   `phi(p^{v_p(d)}) / phi(p^b)` when `e = p^b`, else 0
//!   ([`valuation_one_minus_zeta`]).
//!
//! No prime ideals or number-field elements are materialized; the closed
//! forms are validated against norm and factorization oracles in the test
//! suite.

use num_rational::Ratio;

use crate::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// w reduced to 0..d-1.
pub fn reduce_mod(d: u64, w: i64) -> u64 {
    debug_assert!(d >= 1);
    w.rem_euclid(d as i64) as u64
}

/// Trial-division factorization, ascending primes.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product::<u64>()
        .max(1)
}

/// Largest divisor of d coprime to p (the p'-part of d).
pub fn prime_to_p_part(d: u64, p: u64) -> u64 {
    let mut d = d;
    while d % p == 0 {
        d /= p;
    }
    d
}

/// Ramification index of p in Q(zeta_d): phi(p^{v_p(d)}). Converts between
/// the Q-normalized valuation of a rational number and its valuation at a
/// prime ideal over p.
pub fn ramification_index(d: u64, p: u64) -> u64 {
    euler_phi(d / prime_to_p_part(d, p))
}

/// Multiplicative order of `zeta_d^w`, i.e. `d / gcd(d, w)`; 1 when w = 0.
pub fn cyclotomic_order(d: u64, w: i64) -> u64 {
    assert!(d >= 1);
    d / gcd(d, reduce_mod(d, w))
}

/// Prime-power data of the order of `zeta_d^w`, when it is one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

/// Decides whether `1 - zeta_d^w` lies in some prime ideal of `Z[zeta_d]`.
///
/// Returns `Some((p, b))` iff the order of `zeta_d^w` is `p^b` with `b >= 1`
/// (the element then lies in every prime over `p`), `None` when the order
/// has at least two prime divisors (the element is a unit). `w = 0 mod d` is
/// rejected: the difference would be 0.
pub fn prime_power_support(d: u64, w: i64) -> Result<Option<PrimePower>> {
    if reduce_mod(d, w) == 0 {
        return Err(Error::ZeroExponent { d });
    }
    let order = cyclotomic_order(d, w);
    debug_assert!(order > 1);
    let factors = factorize(order);
    if factors.len() == 1 {
        let (prime, exponent) = factors[0];
        Ok(Some(PrimePower { prime, exponent }))
    } else {
        Ok(None)
    }
}

/// Whether `zeta_d^a` and `zeta_d^b` have equal image in the residue fields
/// of characteristic p: true iff `a = b` modulo the p'-part of d.
///
/// The answer is the same at every prime over p, so no ideal is chosen.
pub fn roots_equal_mod_p(d: u64, a: i64, b: i64, p: u64) -> bool {
    debug_assert!(is_prime(p), "p = {p} must be prime");
    let dp = prime_to_p_part(d, p);
    (a - b).rem_euclid(dp as i64) == 0
}

/// Valuation of `1 - zeta_d^w` at any prime ideal over p, with the
/// uniformizer normalized to valuation 1.
///
/// Equals `phi(p^{v_p(d)}) / phi(p^b)` when the order of `zeta_d^w` is
/// `p^b`, and 0 when the order involves any other prime.
pub fn valuation_one_minus_zeta(d: u64, w: i64, p: u64) -> Result<Ratio<i64>> {
    debug_assert!(is_prime(p), "p = {p} must be prime");
    let support = prime_power_support(d, w)?;
    match support {
        Some(pp) if pp.prime == p => {
            let mut v_p_of_d = 0;
            let mut rest = d;
            while rest % p == 0 {
                rest /= p;
                v_p_of_d += 1;
            }
            debug_assert!(pp.exponent <= v_p_of_d, "the order p^b divides d");
            let num = euler_phi(p.pow(v_p_of_d)) as i64;
            let den = euler_phi(p.pow(pp.exponent)) as i64;
            Ok(Ratio::new(num, den))
        }
        _ => Ok(Ratio::from_integer(0)),
    }
}
