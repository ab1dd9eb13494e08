//! Shared oracles for the integration tests.
//!
//! Everything here is deliberately independent of the implementation paths
//! it checks: cyclotomic polynomials by the recursive quotient definition,
//! field arithmetic in Q[x]/(Phi_d) with exact rationals, norms as
//! multiplication-matrix determinants, standard-tableau counts by corner
//! removal, and partition counts by dynamic programming.

#![allow(dead_code)]

use std::collections::HashMap;

use num::{BigInt, BigRational, One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use akblocks::hyperplanes::Specialization;
use akblocks::schur::FactoredSchurElement;

pub fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer coefficients of the cyclotomic polynomial Phi_n, ascending
/// degree, via Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
pub fn cyclotomic_coeffs(n: u64) -> Vec<i64> {
    assert!(n >= 1);
    let mut numerator = vec![0i64; n as usize + 1];
    numerator[0] = -1;
    numerator[n as usize] = 1;
    let mut quotient = numerator;
    for d in 1..n {
        if n % d == 0 {
            quotient = exact_poly_div(&quotient, &cyclotomic_coeffs(d));
        }
    }
    quotient
}

/// Exact division of integer polynomials (ascending coefficients); panics
/// on a nonzero remainder.
fn exact_poly_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisors here are monic");
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &dc) in den.iter().enumerate() {
            rem[k + i] -= c * dc;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division must be exact");
    quot
}

/// The field Q(zeta_d) as Q[x]/(Phi_d), exact rational coefficients.
pub struct CycloField {
    d: u64,
    degree: usize,
    phi: Vec<BigRational>,
}

/// Element of a `CycloField`: coefficients of 1, zeta, ..., zeta^(deg-1).
pub type CycloElem = Vec<BigRational>;

impl CycloField {
    pub fn new(d: u64) -> Self {
        let phi: Vec<BigRational> = cyclotomic_coeffs(d).iter().map(|&c| big(c)).collect();
        let degree = phi.len() - 1;
        CycloField { d, degree, phi }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(&self) -> CycloElem {
        vec![BigRational::zero(); self.degree]
    }

    pub fn from_rational(&self, q: BigRational) -> CycloElem {
        let mut e = self.zero();
        if self.degree > 0 {
            e[0] = q;
        }
        e
    }

    /// zeta_d^j, j taken mod d.
    pub fn root(&self, j: i64) -> CycloElem {
        let j = j.rem_euclid(self.d as i64) as usize;
        let mut raw = vec![BigRational::zero(); j + 1];
        raw[j] = BigRational::one();
        self.reduce(raw)
    }

    fn reduce(&self, mut raw: Vec<BigRational>) -> CycloElem {
        while raw.len() > self.degree {
            let top = raw.len() - 1;
            let lead = raw[top].clone();
            if !lead.is_zero() {
                let offset = top - self.degree;
                for (i, c) in self.phi.iter().enumerate() {
                    let delta = &lead * c;
                    raw[offset + i] -= delta;
                }
            }
            debug_assert!(raw[top].is_zero());
            raw.pop();
        }
        raw.resize(self.degree, BigRational::zero());
        raw
    }

    pub fn add(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn mul(&self, a: &CycloElem, b: &CycloElem) -> CycloElem {
        if self.degree == 0 {
            return Vec::new();
        }
        let mut raw = vec![BigRational::zero(); 2 * self.degree];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let delta = x * y;
                raw[i + j] += delta;
            }
        }
        self.reduce(raw)
    }

    pub fn scale(&self, a: &CycloElem, q: &BigRational) -> CycloElem {
        a.iter().map(|x| x * q).collect()
    }

    pub fn is_zero(&self, a: &CycloElem) -> bool {
        a.iter().all(|x| x.is_zero())
    }

    /// The rational value of an element, if it is rational.
    pub fn as_rational(&self, a: &CycloElem) -> Option<BigRational> {
        if self.degree == 0 {
            // Q(zeta_1) with Phi_1 = x - 1: elements are plain rationals,
            // represented by the empty vector only when reduced from 0.
            return Some(BigRational::zero());
        }
        if a[1..].iter().all(|x| x.is_zero()) {
            Some(a[0].clone())
        } else {
            None
        }
    }

    /// Field norm N_{Q(zeta_d)/Q}(a): determinant of multiplication by `a`
    /// on the power basis, by exact Gaussian elimination.
    pub fn norm(&self, a: &CycloElem) -> BigRational {
        let n = self.degree;
        if n == 0 {
            return BigRational::one();
        }
        // Column i holds a * zeta^i.
        let mut matrix: Vec<CycloElem> = Vec::with_capacity(n);
        let mut column = a.clone();
        for _ in 0..n {
            matrix.push(column.clone());
            let mut raw = vec![BigRational::zero(); 1];
            raw.extend(column.iter().cloned());
            column = self.reduce(raw);
        }
        let mut det = BigRational::one();
        for pivot in 0..n {
            let Some(row) = (pivot..n).find(|&r| !matrix[pivot][r].is_zero()) else {
                return BigRational::zero();
            };
            if row != pivot {
                for col in &mut matrix {
                    col.swap(pivot, row);
                }
                det = -det;
            }
            let lead = matrix[pivot][pivot].clone();
            det *= lead.clone();
            for col in (pivot + 1)..n {
                let factor = &matrix[col][pivot] / &lead;
                if factor.is_zero() {
                    continue;
                }
                for r in pivot..n {
                    let delta = &factor * &matrix[pivot][r];
                    matrix[col][r] -= delta;
                }
            }
        }
        det
    }
}

pub fn pow_rational(base: &BigRational, exp: i64) -> Option<BigRational> {
    if base.is_zero() {
        return if exp > 0 { Some(BigRational::zero()) } else { None };
    }
    let mut out = BigRational::one();
    for _ in 0..exp.unsigned_abs() {
        out *= base;
    }
    if exp < 0 {
        out = out.recip();
    }
    Some(out)
}

/// Exact value of a factored Schur element at rational points
/// `u_j -> u[j]`, `x -> x`. `None` if any factor vanishes or a pole is hit.
pub fn eval_factored_at_point(
    f: &FactoredSchurElement,
    u: &[BigRational],
    x: &BigRational,
) -> Option<BigRational> {
    let mut value = big(f.sign() as i64);
    value *= pow_rational(x, f.x_exponent())?;
    for (j, &e) in f.u_exponents().iter().enumerate() {
        value *= pow_rational(&u[j], e)?;
    }
    for (&c, &e) in f.xminus1() {
        let base = pow_rational(x, c as i64)? - BigRational::one();
        if base.is_zero() {
            return None;
        }
        value *= pow_rational(&base, e)?;
    }
    for (&(k, s, t), &e) in f.binomials() {
        let base = pow_rational(x, k)? * &u[s] - &u[t];
        if base.is_zero() {
            return None;
        }
        value *= pow_rational(&base, e)?;
    }
    Some(value)
}

/// Exact value of a factored Schur element under the group specialization
/// `u_j -> zeta_d^j`, `x -> 1`; the (x^c - 1) family cancels to the integer
/// `prod c^{e_c}`. The result is asserted to be rational.
pub fn eval_factored_at_group(f: &FactoredSchurElement) -> BigRational {
    assert_eq!(f.x1_vanishing_order(), 0);
    let field = CycloField::new(f.d() as u64);

    let mut rational_part = big(f.sign() as i64);
    for (&c, &e) in f.xminus1() {
        rational_part *= pow_rational(&big(c as i64), e).expect("c >= 1");
    }

    let mut root_exponent: i64 = 0;
    for (j, &e) in f.u_exponents().iter().enumerate() {
        root_exponent += j as i64 * e;
    }
    let mut value = field.root(root_exponent);

    for (&(_, s, t), &e) in f.binomials() {
        assert!(e >= 0, "net binomial exponents are non-negative");
        let base = field.sub(&field.root(s as i64), &field.root(t as i64));
        for _ in 0..e {
            value = field.mul(&value, &base);
        }
    }
    let scalar = field
        .as_rational(&value)
        .expect("group-specialized Schur elements are rational");
    scalar * rational_part
}

/// Number of standard tableaux on a multipartition diagram, by brute-force
/// corner removal (independent of the hook-length formula).
pub fn standard_tableau_count(shapes: &[Vec<u32>]) -> u128 {
    fn recurse(shapes: &mut Vec<Vec<u32>>, memo: &mut HashMap<Vec<Vec<u32>>, u128>) -> u128 {
        if shapes.iter().all(|s| s.is_empty()) {
            return 1;
        }
        if let Some(&count) = memo.get(shapes) {
            return count;
        }
        let mut total = 0u128;
        for a in 0..shapes.len() {
            for i in 0..shapes[a].len() {
                let removable =
                    i + 1 == shapes[a].len() || shapes[a][i] > shapes[a][i + 1];
                if !removable {
                    continue;
                }
                shapes[a][i] -= 1;
                let popped = if shapes[a][i] == 0 {
                    shapes[a].remove(i);
                    true
                } else {
                    false
                };
                total += recurse(shapes, memo);
                if popped {
                    shapes[a].insert(i, 1);
                } else {
                    shapes[a][i] += 1;
                }
            }
        }
        memo.insert(shapes.clone(), total);
        total
    }
    let mut shapes = shapes.to_vec();
    let mut memo = HashMap::new();
    recurse(&mut shapes, &mut memo)
}

/// p(n) by the classic bounded-part dynamic program.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}

/// Number of d-multipartitions of r, by convolving partition counts.
pub fn multipartition_count(d: usize, r: u32) -> u64 {
    let mut counts = vec![0u64; r as usize + 1];
    counts[0] = 1;
    for _ in 0..d {
        let mut next = vec![0u64; r as usize + 1];
        for total in 0..=r as usize {
            for k in 0..=total {
                next[total] += counts[total - k] * partition_count(k as u32);
            }
        }
        counts = next;
    }
    counts[r as usize]
}

/// Closure of the pairwise content moves: equal off a pair {s, t}, equal
/// pair charged contents under weights (m_s, m_t). The relation is per-pair
/// key equality, so the lattice join of the per-pair groupings is its
/// transitive closure.
pub fn content_move_closure(
    d: usize,
    r: u32,
    m: &akblocks::combinatorics::WeightSystem,
) -> akblocks::blocks::SetPartition {
    use akblocks::blocks::{join_partitions, SetPartition};
    use akblocks::combinatorics::{charged_content, enumerate_multipartitions, WeightSystem};

    let universe = enumerate_multipartitions(d, r);
    let mut parts = Vec::new();
    for s in 0..d {
        for t in (s + 1)..d {
            let pair_weights = WeightSystem::new(vec![m.weights()[s], m.weights()[t]]);
            let keys: Vec<_> = universe
                .iter()
                .map(|lambda| {
                    let off: Vec<_> = (0..d)
                        .filter(|&a| a != s && a != t)
                        .map(|a| lambda.component(a).clone())
                        .collect();
                    let pair = akblocks::combinatorics::MultiPartition::new(vec![
                        lambda.component(s).clone(),
                        lambda.component(t).clone(),
                    ])
                    .unwrap();
                    (off, charged_content(&pair, &pair_weights).unwrap())
                })
                .collect();
            parts.push(SetPartition::from_group_keys(keys));
        }
    }
    join_partitions(universe.len(), &parts).unwrap()
}

/// Seeded weight draws in [-5, 5]^d; deterministic across runs.
pub fn seeded_weight_draws(d: usize, count: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..d).map(|_| rng.gen_range(-5i64..=5)).collect())
        .collect()
}

/// The standard verification grid: d in {1,2,3,4,6}, 1 <= r <= 4,
/// n in {0,1,2}, weights in {spetsial, all-zero, 10 seeded draws}.
pub fn standard_grid() -> Vec<Specialization> {
    let mut grid = Vec::new();
    for &d in &[1usize, 2, 3, 4, 6] {
        for r in 1..=4u32 {
            let mut weight_sets = Vec::new();
            let mut spetsial = vec![0i64; d];
            spetsial[0] = 1;
            weight_sets.push(spetsial);
            weight_sets.push(vec![0i64; d]);
            weight_sets.extend(seeded_weight_draws(d, 10, grid_seed(d, r)));
            for weights in weight_sets {
                for n in 0..=2i64 {
                    grid.push(Specialization::new(d, r, weights.clone(), n).unwrap());
                }
            }
        }
    }
    grid
}

pub fn grid_seed(d: usize, r: u32) -> u64 {
    0xA11B_10C5u64 ^ ((d as u64) << 16) ^ r as u64
}
