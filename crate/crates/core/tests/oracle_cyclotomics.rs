//! Validates the closed-form cyclotomic tests against independent oracles:
//! cyclotomic polynomial values, multiplication-matrix norms, and brute
//! factorization of Phi_d over F_p.

mod common;

use common::{big, cyclotomic_coeffs, CycloField};
use num::rational::Ratio;
use num::{BigInt, Signed, Zero};

use akblocks::cyclotomics::{
    euler_phi, prime_power_support, prime_to_p_part, ramification_index, roots_equal_mod_p,
    valuation_one_minus_zeta,
};

fn eval_at_one(coeffs: &[i64]) -> i64 {
    coeffs.iter().sum()
}

#[test]
fn cyclotomic_polynomials_are_correct() {
    assert_eq!(cyclotomic_coeffs(1), vec![-1, 1]);
    assert_eq!(cyclotomic_coeffs(2), vec![1, 1]);
    assert_eq!(cyclotomic_coeffs(3), vec![1, 1, 1]);
    assert_eq!(cyclotomic_coeffs(4), vec![1, 0, 1]);
    assert_eq!(cyclotomic_coeffs(6), vec![1, -1, 1]);
    assert_eq!(cyclotomic_coeffs(12), vec![1, 0, -1, 0, 1]);
    for d in 1..=24u64 {
        assert_eq!(cyclotomic_coeffs(d).len() as u64 - 1, euler_phi(d));
    }
}

#[test]
fn prime_power_support_matches_phi_at_one() {
    // Phi_e(1) = p when e = p^b (b >= 1), and 1 when e > 1 has at least two
    // prime divisors; this is exactly the non-unit criterion.
    for d in 1..=12u64 {
        for w in 1..d as i64 {
            let e = akblocks::cyclotomics::cyclotomic_order(d, w);
            let value = eval_at_one(&cyclotomic_coeffs(e));
            match prime_power_support(d, w).unwrap() {
                Some(pp) => assert_eq!(value, pp.prime as i64, "d={d} w={w}"),
                None => assert_eq!(value, 1, "d={d} w={w}"),
            }
        }
    }
}

#[test]
fn valuations_match_matrix_norms() {
    // |N(1 - zeta_d^w)| = p^{phi(d)/phi(p^b)} when the order of zeta_d^w is
    // p^b, else 1. The norm is computed as the determinant of the
    // multiplication matrix, independent of the closed form.
    for d in 1..=12u64 {
        let field = CycloField::new(d);
        for w in 1..d as i64 {
            let alpha = field.sub(&field.from_rational(big(1)), &field.root(w));
            let norm = field.norm(&alpha);
            let expected = match prime_power_support(d, w).unwrap() {
                Some(pp) => {
                    let exponent = euler_phi(d) / euler_phi(pp.prime.pow(pp.exponent));
                    big(pp.prime as i64).pow(exponent as i32)
                }
                None => big(1),
            };
            assert_eq!(norm.abs(), expected, "d={d} w={w}");

            // Valuation consistency: v_ideal * (number of primes over p) *
            // (residue degree) = v_p of the norm, i.e. v_ideal * phi(d) /
            // ramification_index.
            for p in [2u64, 3, 5, 7] {
                let v = valuation_one_minus_zeta(d, w, p).unwrap();
                let ram = ramification_index(d, p);
                let scaled = v * Ratio::from_integer((euler_phi(d) / ram) as i64);
                assert!(scaled.is_integer());
                let mut remaining = norm.abs().to_integer();
                let p_big = BigInt::from(p);
                let mut count = 0i64;
                while (&remaining % &p_big).is_zero() {
                    remaining /= &p_big;
                    count += 1;
                }
                assert_eq!(scaled.to_integer(), count, "d={d} w={w} p={p}");
            }
        }
    }
}

// --- naive polynomial arithmetic over F_p, for the residue oracle ---

fn trim(mut poly: Vec<u64>) -> Vec<u64> {
    while poly.len() > 1 && *poly.last().unwrap() == 0 {
        poly.pop();
    }
    poly
}

fn poly_mod_p(coeffs: &[i64], p: u64) -> Vec<u64> {
    trim(coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect())
}

/// Long division by a monic divisor; returns (quotient, remainder).
fn poly_div_rem(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (vec![0], trim(rem));
    }
    let mut quot = vec![0u64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd] % p;
        quot[k] = c;
        for (i, &dc) in den.iter().enumerate() {
            rem[k + i] = (rem[k + i] + p * p - (c * dc) % p) % p;
        }
    }
    (trim(quot), trim(rem))
}

fn poly_divides(den: &[u64], num: &[u64], p: u64) -> bool {
    poly_div_rem(num, den, p).1 == vec![0]
}

/// All monic polynomials of the given degree over F_p.
fn monic_polys(degree: usize, p: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let count = (p as usize).pow(degree as u32);
    for code in 0..count {
        let mut poly = Vec::with_capacity(degree + 1);
        let mut c = code;
        for _ in 0..degree {
            poly.push((c % p as usize) as u64);
            c /= p as usize;
        }
        poly.push(1);
        out.push(poly);
    }
    out
}

/// Irreducible monic factors (with multiplicity) by trial division; the
/// first divisor found in ascending degree order is irreducible.
fn factor_poly_mod_p(poly: &[u64], p: u64) -> Vec<Vec<u64>> {
    let mut rest = trim(poly.to_vec());
    assert_eq!(*rest.last().unwrap(), 1, "input must be monic");
    let mut factors = Vec::new();
    'outer: while rest.len() > 1 {
        // A minimal-degree proper divisor has degree at most deg/2.
        for degree in 1..=(rest.len() - 1) / 2 {
            for candidate in monic_polys(degree, p) {
                if poly_divides(&candidate, &rest, p) {
                    factors.push(candidate.clone());
                    rest = poly_div_rem(&rest, &candidate, p).0;
                    continue 'outer;
                }
            }
        }
        factors.push(rest.clone()); // no proper divisor: irreducible
        break;
    }
    factors
}

#[test]
fn roots_equal_matches_factoring_phi_d_mod_p() {
    // zeta^a and zeta^b collide at the prime ideal of an irreducible factor
    // g of Phi_d mod p exactly when g divides x^{a-b} - 1. The closed form
    // says collisions happen at every ideal at once, along a = b mod the
    // p'-part of d; check both the equivalence and the all-or-nothing form.
    for d in 1..=12u64 {
        let phi_d = cyclotomic_coeffs(d);
        for p in [2u64, 3, 5, 7] {
            let reduced = poly_mod_p(&phi_d, p);
            let factors = factor_poly_mod_p(&reduced, p);
            assert!(!factors.is_empty());
            let degree_sum: usize = factors.iter().map(|f| f.len() - 1).sum();
            assert_eq!(degree_sum, reduced.len() - 1, "d={d} p={p}");

            for a in 0..d as i64 {
                for b in 0..d as i64 {
                    let w = (a - b).rem_euclid(d as i64) as usize;
                    let dividing = if w == 0 {
                        factors.len()
                    } else {
                        let mut xw = vec![0u64; w + 1];
                        xw[0] = p - 1; // -1 mod p
                        xw[w] = 1;
                        factors.iter().filter(|g| poly_divides(g, &xw, p)).count()
                    };
                    let expected = roots_equal_mod_p(d, a, b, p);
                    assert_eq!(dividing == factors.len(), expected, "d={d} p={p} a={a} b={b}");
                    if !expected {
                        assert_eq!(dividing, 0, "collisions are all-or-nothing");
                    }
                }
            }
        }
    }
}

#[test]
fn ramification_index_examples() {
    assert_eq!(ramification_index(12, 2), 2);
    assert_eq!(ramification_index(12, 3), 2);
    assert_eq!(ramification_index(12, 5), 1);
    assert_eq!(ramification_index(9, 3), 6);
    assert_eq!(prime_to_p_part(9, 3), 1);
}
