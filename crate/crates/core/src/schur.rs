//! Factored Schur elements of the generic Ariki-Koike algebra and their
//! cyclotomic specializations.
//!
//! For a d-multipartition of r with L-shifted ordinary symbol rows
//! `B^(s) = (b_1, ..., b_L)` (any `L >= h_lambda`), the Schur element is
//!
//! ```text
//! s_lambda = (-1)^{a_L} x^{b_L} (x-1)^{-r} (u_0...u_{d-1})^{-r} nu / delta
//! nu    = prod_{s<t} (u_s - u_t)^L
//!         * prod_{s,t} prod_{b in B^(s)} prod_{k=1..b} (x^k u_s - u_t)
//! delta = prod_{s<t} prod_{(b_s,b_t)} (x^{b_s} u_s - x^{b_t} u_t)
//!         * prod_s prod_{i<j} (x^{b_i} u_s - x^{b_j} u_s)
//! a_L   = r(d-1) + C(d,2) C(L,2),   b_L = dL(L-1)(2dL-d-3)/12.
//! ```
//!
//! Every factor is rewritten into the canonical alphabet: a global sign, a
//! monomial `x^e prod u_j^{e_j}`, factors `(x^c - 1)` keyed by `c >= 1`, and
//! binomials `(x^k u_s - u_t)` keyed by `(k, s, t)` with `s < t`. The net
//! binomial exponents are non-negative and the net order of vanishing at
//! `x = 1` is zero (the element is a Laurent polynomial); both facts are
//! asserted after assembly. The resulting value is independent of `L`.
//!
//! Specializing `u_j -> zeta_d^j q^{m_j}`, `x -> q^n` turns each factor into
//! a product of a `q`-power, cyclotomic-polynomial content (units over the
//! Rouquier ring), and, for binomials whose two monomials collide, scalar
//! content `(zeta^s - zeta^t) q^alpha`. Only the exponent extremes and that
//! scalar content are tracked: enough for the `a`/`A` invariants and for
//! deciding which primes divide some specialized scalar coefficient.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;

use crate::combinatorics::{beta_number, dimension, enumerate_multipartitions, MultiPartition};
use crate::cyclotomics::{is_prime, prime_power_support, valuation_one_minus_zeta};
use crate::hyperplanes::Specialization;
use crate::{Error, Result};

/// Canonical binomial key: `(k, s, t)` with `s < t` stands for
/// `x^k u_s - u_t`.
pub type BinomialKey = (i64, usize, usize);

/// A Schur element in fully canonicalized factored form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredSchurElement {
    d: usize,
    r: u32,
    sign: i8,
    x_exponent: i64,
    u_exponents: Vec<i64>,
    xminus1: BTreeMap<u64, i64>,
    binomials: BTreeMap<BinomialKey, i64>,
}

impl FactoredSchurElement {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// +1 or -1.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn x_exponent(&self) -> i64 {
        self.x_exponent
    }

    pub fn u_exponents(&self) -> &[i64] {
        &self.u_exponents
    }

    /// Net exponents of the `(x^c - 1)` factors, keyed by `c`; the initial
    /// `(x-1)^{-r}` is merged in at key 1. Zero entries are dropped.
    pub fn xminus1(&self) -> &BTreeMap<u64, i64> {
        &self.xminus1
    }

    /// Net exponents of the canonical binomials `(x^k u_s - u_t)`, `s < t`.
    pub fn binomials(&self) -> &BTreeMap<BinomialKey, i64> {
        &self.binomials
    }

    /// Net order of vanishing at x = 1 (zero on every valid element).
    pub fn x1_vanishing_order(&self) -> i64 {
        self.xminus1.values().sum()
    }
}

/// a_L = r(d-1) + C(d,2) C(L,2).
fn sign_exponent(d: u64, r: u64, big_l: u64) -> u64 {
    let choose2 = |n: u64| n * n.saturating_sub(1) / 2;
    r * (d - 1) + choose2(d) * choose2(big_l)
}

/// b_L = dL(L-1)(2dL - d - 3)/12; integral for every (d, L), asserted.
fn monomial_exponent(d: i128, big_l: i128) -> i64 {
    let num = d * big_l * (big_l - 1) * (2 * d * big_l - d - 3);
    assert!(num % 12 == 0, "b_L = dL(L-1)(2dL-d-3)/12 must be an integer");
    i64::try_from(num / 12).expect("b_L fits in i64 at supported sizes")
}

struct Builder {
    sign_flips: u64,
    x_exponent: i64,
    u_exponents: Vec<i64>,
    xminus1: BTreeMap<u64, i64>,
    binomials: BTreeMap<BinomialKey, i64>,
}

impl Builder {
    /// Records `(x^k u_s - u_t)^exp` for arbitrary s, t, k, rewriting into
    /// the canonical alphabet:
    /// * s = t: `x^a u_s - x^b u_s = u_s x^min(a,b) (x^|a-b| - 1)` (callers
    ///   only produce a > b here, so no sign is involved);
    /// * s > t: `x^k u_s - u_t = -x^k (x^{-k} u_t - u_s)`.
    fn push_binomial(&mut self, k: i64, s: usize, t: usize, exp: i64) {
        if s == t {
            assert!(k > 0, "equal-row factors always have a positive x-gap");
            self.u_exponents[s] += exp;
            *self.xminus1.entry(k as u64).or_insert(0) += exp;
        } else if s < t {
            *self.binomials.entry((k, s, t)).or_insert(0) += exp;
        } else {
            self.sign_flips += exp.unsigned_abs();
            self.x_exponent += k * exp;
            *self.binomials.entry((-k, t, s)).or_insert(0) += exp;
        }
    }
}

/// The factored Schur element of the character labelled by `lambda`.
///
/// `shift` is the symbol length L; it defaults to the height of `lambda`
/// and must not be smaller. The canonical form does not depend on it.
pub fn schur_factored(lambda: &MultiPartition, shift: Option<u64>) -> Result<FactoredSchurElement> {
    let d = lambda.d();
    let r = lambda.size();
    if r == 0 {
        return Err(Error::EmptySchur);
    }
    let height = lambda.height();
    let big_l = shift.unwrap_or(height);
    if big_l < height {
        return Err(Error::ShiftTooSmall { height, got: big_l });
    }

    // Rows of the L-shifted ordinary standard symbol, each of length L.
    let rows: Vec<Vec<u64>> = (0..d)
        .map(|a| {
            let p = lambda.component(a);
            beta_number(p, big_l - p.height()).entries().to_vec()
        })
        .collect();

    let mut builder = Builder {
        sign_flips: sign_exponent(d as u64, r, big_l),
        x_exponent: monomial_exponent(d as i128, big_l as i128),
        u_exponents: vec![-(r as i64); d],
        xminus1: BTreeMap::from([(1, -(r as i64))]),
        binomials: BTreeMap::new(),
    };

    // nu, first product: (u_s - u_t)^L over s < t.
    for s in 0..d {
        for t in (s + 1)..d {
            builder.push_binomial(0, s, t, big_l as i64);
        }
    }
    // nu, triple product over ordered pairs (s, t) and 1 <= k <= b_s.
    for s in 0..d {
        for t in 0..d {
            for &b in &rows[s] {
                for k in 1..=b as i64 {
                    builder.push_binomial(k, s, t, 1);
                }
            }
        }
    }
    // delta (denominator), cross-row product over s < t.
    for s in 0..d {
        for t in (s + 1)..d {
            for &bs in &rows[s] {
                for &bt in &rows[t] {
                    // x^{bs} u_s - x^{bt} u_t = x^{bt} (x^{bs-bt} u_s - u_t)
                    builder.x_exponent -= bt as i64;
                    builder.push_binomial(bs as i64 - bt as i64, s, t, -1);
                }
            }
        }
    }
    // delta (denominator), in-row product over i < j:
    // x^{b_i} u_s - x^{b_j} u_s = u_s x^{b_j} (x^{b_i - b_j} - 1).
    for (s, row) in rows.iter().enumerate() {
        for i in 0..row.len() {
            for j in (i + 1)..row.len() {
                let (bi, bj) = (row[i], row[j]);
                debug_assert!(bi > bj, "symbol rows are strictly decreasing");
                builder.x_exponent -= bj as i64;
                builder.push_binomial(bi as i64 - bj as i64, s, s, -1);
            }
        }
    }

    builder.xminus1.retain(|_, e| *e != 0);
    builder.binomials.retain(|_, e| *e != 0);

    let element = FactoredSchurElement {
        d,
        r: u32::try_from(r).expect("r fits in u32"),
        sign: if builder.sign_flips % 2 == 0 { 1 } else { -1 },
        x_exponent: builder.x_exponent,
        u_exponents: builder.u_exponents,
        xminus1: builder.xminus1,
        binomials: builder.binomials,
    };
    assert!(
        element.binomials.values().all(|&e| e >= 0),
        "net binomial exponents of a Schur element are non-negative"
    );
    assert_eq!(
        element.x1_vanishing_order(),
        0,
        "net order of vanishing at x = 1 is zero"
    );
    Ok(element)
}

/// q-exponent data of a specialized Schur element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializedSchurData {
    q_valuation: i64,
    q_degree: i64,
    degenerate_scalars: BTreeMap<u64, i64>,
    integer_content: BTreeMap<u64, i64>,
}

impl SpecializedSchurData {
    /// The a-invariant: q-valuation of the specialized element.
    pub fn q_valuation(&self) -> i64 {
        self.q_valuation
    }

    /// The A-invariant: q-degree of the specialized element.
    pub fn q_degree(&self) -> i64 {
        self.q_degree
    }

    /// Scalar factors `(zeta_d^s - zeta_d^t)^e` from binomials whose two
    /// monomials received equal q-exponents, keyed by `w = t - s mod d`.
    pub fn degenerate_scalars(&self) -> &BTreeMap<u64, i64> {
        &self.degenerate_scalars
    }

    /// Rational-integer content `prod c^{e_c}` left by the `(x^c - 1)`
    /// factors under an n = 0 specialization, keyed by `c >= 2`.
    pub fn integer_content(&self) -> &BTreeMap<u64, i64> {
        &self.integer_content
    }
}

/// Specializes a factored Schur element at `u_j -> zeta_d^j q^{m_j}`,
/// `x -> q^n`, tracking exponent extremes and scalar content.
///
/// Per factor: the monomial contributes `n*e_x + sum e_j m_j` to both sides;
/// `(x^c - 1)` with `n != 0` contributes `min(0, nc)`/`max(0, nc)`; a
/// binomial `(k, s, t)` maps to `zeta^s q^alpha - zeta^t q^beta` with
/// `alpha = kn + m_s`, `beta = m_t` and contributes `min/max(alpha, beta)`,
/// degenerating to the scalar `(zeta^s - zeta^t) q^alpha` when
/// `alpha = beta`. With `n = 0` the `(x^c - 1)` family cancels exactly
/// against `(x-1)^{-r}` and leaves the integer cofactor
/// `prod ((x^c-1)/(x-1))|_{x=1} = prod c^{e_c}`.
pub fn specialize_schur(
    f: &FactoredSchurElement,
    phi: &Specialization,
) -> Result<SpecializedSchurData> {
    if phi.d() != f.d || phi.r() != f.r {
        return Err(Error::SpecializationMismatch(format!(
            "element is for G({},1,{}), specialization for G({},1,{})",
            f.d,
            f.r,
            phi.d(),
            phi.r()
        )));
    }
    let n = phi.n();
    let m = phi.weights();

    let mut val = f.x_exponent * n;
    for (j, &e) in f.u_exponents.iter().enumerate() {
        val += e * m[j];
    }
    let mut deg = val;

    let mut integer_content = BTreeMap::new();
    if n == 0 {
        let order = f.x1_vanishing_order();
        if order != 0 {
            return Err(Error::InconsistentVanishingOrder { order });
        }
        for (&c, &e) in &f.xminus1 {
            if c >= 2 && e != 0 {
                integer_content.insert(c, e);
            }
        }
    } else {
        for (&c, &e) in &f.xminus1 {
            let step = n * c as i64;
            val += e * step.min(0);
            deg += e * step.max(0);
        }
    }

    let mut degenerate_scalars: BTreeMap<u64, i64> = BTreeMap::new();
    for (&(k, s, t), &e) in &f.binomials {
        let alpha = k * n + m[s];
        let beta = m[t];
        if alpha == beta {
            *degenerate_scalars.entry((t - s) as u64).or_insert(0) += e;
            val += e * alpha;
            deg += e * alpha;
        } else {
            val += e * alpha.min(beta);
            deg += e * alpha.max(beta);
        }
    }
    degenerate_scalars.retain(|_, e| *e != 0);

    assert!(val <= deg, "specialized Schur elements are nonzero Laurent polynomials");
    Ok(SpecializedSchurData { q_valuation: val, q_degree: deg, degenerate_scalars, integer_content })
}

/// The pair (a, A) of q-valuation and q-degree of the specialized Schur
/// element of `lambda`; constant on Rouquier blocks.
pub fn a_and_big_a(lambda: &MultiPartition, phi: &Specialization) -> Result<(i64, i64)> {
    let data = specialize_schur(&schur_factored(lambda, None)?, phi)?;
    Ok((data.q_valuation(), data.q_degree()))
}

/// |G(d,1,r)| = d^r * r!.
pub fn group_order(d: u64, r: u32) -> u128 {
    (1..=r as u128).product::<u128>() * (d as u128).pow(r)
}

/// Primes dividing d^r * r! (so: dividing d, or at most r), ascending.
pub fn candidate_primes(d: u64, r: u32) -> Vec<u64> {
    let mut out = BTreeSet::new();
    for (p, _) in crate::cyclotomics::factorize(d) {
        out.insert(p);
    }
    for p in 2..=r as u64 {
        if is_prime(p) {
            out.insert(p);
        }
    }
    out.into_iter().collect()
}

fn int_valuation(mut c: u64, p: u64) -> i64 {
    let mut v = 0;
    while c % p == 0 {
        c /= p;
        v += 1;
    }
    v
}

/// The phi-bad prime numbers: primes p such that the scalar coefficient of
/// some specialized Schur element has positive p-valuation. Always a subset
/// of the primes dividing the group order.
pub fn bad_prime_numbers(phi: &Specialization) -> Result<BTreeSet<u64>> {
    let d = phi.d();
    let candidates = candidate_primes(d as u64, phi.r());
    let mut bad = BTreeSet::new();
    for lambda in enumerate_multipartitions(d, phi.r()) {
        let data = specialize_schur(&schur_factored(&lambda, None)?, phi)?;
        for &p in &candidates {
            if bad.contains(&p) && candidates.iter().all(|q| bad.contains(q)) {
                break;
            }
            // Everything at the valuation of the prime ideal over p with
            // uniformizer at 1; rational-integer content is rescaled by the
            // ramification index.
            let ram = crate::cyclotomics::ramification_index(d as u64, p) as i64;
            let mut v: Ratio<i64> = Ratio::from_integer(0);
            for (&w, &e) in data.degenerate_scalars() {
                v += Ratio::from_integer(e) * valuation_one_minus_zeta(d as u64, w as i64, p)?;
            }
            for (&c, &e) in data.integer_content() {
                v += Ratio::from_integer(e * int_valuation(c, p) * ram);
            }
            assert!(
                v >= Ratio::from_integer(0),
                "specialized scalar coefficients are algebraic integers"
            );
            if v > Ratio::from_integer(0) {
                bad.insert(p);
            }
        }
    }
    Ok(bad)
}

/// The essential monomial data carried by one character: the canonical
/// binomials `(k, s, t)` appearing with positive net exponent whose
/// zeta-difference is a non-unit, plus a flag for the monomial `z` (true
/// iff some `(x^c - 1)` with `c >= 2` appears with positive net exponent,
/// so a cyclotomic factor with prime value at 1 divides the element).
pub fn character_essential_monomials(
    lambda: &MultiPartition,
) -> Result<(BTreeSet<BinomialKey>, bool)> {
    let f = schur_factored(lambda, None)?;
    let mut monomials = BTreeSet::new();
    for (&(k, s, t), &e) in f.binomials() {
        if e > 0 && prime_power_support(f.d() as u64, (t - s) as i64)?.is_some() {
            monomials.insert((k, s, t));
        }
    }
    let z_flag = f.xminus1().iter().any(|(&c, &e)| c >= 2 && e > 0);
    Ok((monomials, z_flag))
}

/// Exact group-algebra value d^r * r! / dim(lambda) that the Schur element
/// takes under the specialization m = 0, n = 0 (u_j -> zeta_d^j, x -> 1).
pub fn group_algebra_value(lambda: &MultiPartition) -> u128 {
    group_order(lambda.d() as u64, lambda.size() as u32) / dimension(lambda)
}
