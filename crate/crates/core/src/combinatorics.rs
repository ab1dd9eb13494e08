//! Partitions, multipartitions, beta-numbers, symbols and contents.
//!
//! Conventions:
//!
//! * a partition is a weakly decreasing sequence of positive integers,
//!   stored without trailing zeros; the empty partition is a value;
//! * the beta-number of a height-`h` partition is `beta_i = h + lambda_i - i`
//!   (strictly decreasing), and the `m`-shifted beta-number appends
//!   `m-1, ..., 1, 0` after adding `m` to every entry;
//! * the `m`-charged standard symbol of a d-multipartition has row `a` equal
//!   to the beta-number of `lambda^(a)` shifted by `hc - hc^(a)`, where
//!   `hc^(a) = h^(a) - m^(a)` and `hc = max_a hc^(a)`; the ordinary standard
//!   symbol is the all-zero weight case;
//! * the (charged) content is the multiset union of the symbol rows.
//!
//! The canonical order on multipartitions (descending lexicographic, a proper
//! prefix counting as smaller) fixes the index universe that set partitions
//! over `Irr(G(d,1,r))` refer to.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::{Error, Result};

/// An integer partition; possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing steps.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for pair in parts.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts {:?} are not weakly decreasing",
                    parts
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "parts {:?} contain a zero entry",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of (nonzero) parts.
    pub fn height(&self) -> u64 {
        self.parts.len() as u64
    }

    /// Canonical enumeration order: descending lexicographic on part
    /// sequences, with a proper prefix sorting after its extensions, so
    /// (2) < (1,1) < (1) < () reading "<" as "enumerated earlier".
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A d-tuple of partitions, labelling an irreducible character of G(d,1,r).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyMultiPartition);
        }
        Ok(MultiPartition { components })
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, a: usize) -> &Partition {
        &self.components[a]
    }

    /// Total size r.
    pub fn size(&self) -> u64 {
        self.components.iter().map(|p| p.size()).sum()
    }

    /// Max component height.
    pub fn height(&self) -> u64 {
        self.components.iter().map(|p| p.height()).max().unwrap_or(0)
    }

    pub fn size_vector(&self) -> Vec<u64> {
        self.components.iter().map(|p| p.size()).collect()
    }

    /// Componentwise extension of the canonical partition order.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.d(), other.d());
        for (a, b) in self.components.iter().zip(&other.components) {
            match a.canonical_cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (a, p) in self.components.iter().enumerate() {
            if a > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Strictly decreasing sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSequence {
    entries: Vec<u64>,
}

impl BetaSequence {
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Integer weights m^(0), ..., m^(d-1); negatives allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    weights: Vec<i64>,
}

impl WeightSystem {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightSystem { weights }
    }

    pub fn zero(d: usize) -> Self {
        WeightSystem { weights: vec![0; d] }
    }

    /// (1, 0, ..., 0), the weight system of the spetsial specialization.
    pub fn spetsial(d: usize) -> Self {
        let mut weights = vec![0; d];
        weights[0] = 1;
        WeightSystem { weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }
}

/// The m-charged standard symbol: one shifted beta-row per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChargedSymbol {
    rows: Vec<BetaSequence>,
}

impl ChargedSymbol {
    pub fn rows(&self) -> &[BetaSequence] {
        &self.rows
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }
}

/// Multiset of symbol entries, the block invariant of charged-content theory.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ContentMultiset {
    counts: BTreeMap<u64, u32>,
}

impl ContentMultiset {
    pub fn counts(&self) -> &BTreeMap<u64, u32> {
        &self.counts
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.counts.values().map(|&c| c as u64).sum()
    }

    fn insert(&mut self, value: u64) {
        *self.counts.entry(value).or_insert(0) += 1;
    }

    /// Entries with repetition, ascending.
    pub fn to_sorted_vec(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (&v, &c) in &self.counts {
            for _ in 0..c {
                out.push(v);
            }
        }
        out
    }
}

/// A box (i, j) of component a of a multipartition diagram; i, j are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Node {
    pub i: u32,
    pub j: u32,
    pub a: usize,
}

/// All partitions of n, in descending lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_partitions(n, n, &mut prefix, &mut out);
    out
}

fn gen_partitions(n: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: prefix.clone() });
        return;
    }
    let top = n.min(max_part);
    for first in (1..=top).rev() {
        prefix.push(first);
        gen_partitions(n - first, first, prefix, out);
        prefix.pop();
    }
}

/// All d-multipartitions of total size r, in the canonical order.
///
/// This order is the index universe for every set partition reported by the
/// blocks module.
pub fn enumerate_multipartitions(d: usize, r: u32) -> Vec<MultiPartition> {
    assert!(d >= 1, "need d >= 1");
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(d);
    gen_multipartitions(d, r, &mut prefix, &mut out);
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

fn gen_multipartitions(
    d: usize,
    remaining: u32,
    prefix: &mut Vec<Partition>,
    out: &mut Vec<MultiPartition>,
) {
    if prefix.len() + 1 == d {
        for p in enumerate_partitions(remaining) {
            prefix.push(p);
            out.push(MultiPartition { components: prefix.clone() });
            prefix.pop();
        }
        return;
    }
    for k in (0..=remaining).rev() {
        for p in enumerate_partitions(k) {
            prefix.push(p);
            gen_multipartitions(d, remaining - k, prefix, out);
            prefix.pop();
        }
    }
}

/// The `shift`-shifted beta-number of a partition.
///
/// For height h this is `(beta_1 + shift, ..., beta_h + shift,
/// shift-1, ..., 1, 0)` with `beta_i = h + lambda_i - i`.
pub fn beta_number(p: &Partition, shift: u64) -> BetaSequence {
    let h = p.height();
    let mut entries = Vec::with_capacity((h + shift) as usize);
    for (idx, &part) in p.parts.iter().enumerate() {
        // h + lambda_i - i for i = idx + 1; positive since part >= 1.
        entries.push(h + part as u64 - (idx as u64 + 1) + shift);
    }
    for s in (0..shift).rev() {
        entries.push(s);
    }
    debug_assert!(entries.windows(2).all(|w| w[0] > w[1]));
    BetaSequence { entries }
}

/// The m-charged standard symbol of a multipartition.
pub fn charged_symbol(lambda: &MultiPartition, m: &WeightSystem) -> Result<ChargedSymbol> {
    let d = lambda.d();
    if m.len() != d {
        return Err(Error::WeightLength { expected: d, got: m.len() });
    }
    let charged_heights: Vec<i64> = (0..d)
        .map(|a| lambda.component(a).height() as i64 - m.weights()[a])
        .collect();
    let hc = *charged_heights.iter().max().expect("d >= 1");
    let rows = (0..d)
        .map(|a| {
            let shift = hc - charged_heights[a];
            assert!(shift >= 0, "charged shifts are non-negative by maximality");
            beta_number(lambda.component(a), shift as u64)
        })
        .collect();
    Ok(ChargedSymbol { rows })
}

/// Multiset union of the rows of a symbol.
pub fn content_multiset(symbol: &ChargedSymbol) -> ContentMultiset {
    let mut content = ContentMultiset::default();
    for row in &symbol.rows {
        for &entry in row.entries() {
            content.insert(entry);
        }
    }
    content
}

/// Charged content in one step.
pub fn charged_content(lambda: &MultiPartition, m: &WeightSystem) -> Result<ContentMultiset> {
    Ok(content_multiset(&charged_symbol(lambda, m)?))
}

/// The nodes (i, j, a) of the diagram, component-major then row-major.
pub fn diagram_nodes(lambda: &MultiPartition) -> Vec<Node> {
    let mut nodes = Vec::with_capacity(lambda.size() as usize);
    for (a, p) in lambda.components.iter().enumerate() {
        for (row, &part) in p.parts.iter().enumerate() {
            for j in 1..=part {
                nodes.push(Node { i: row as u32 + 1, j, a });
            }
        }
    }
    nodes
}

/// Hook-length count of standard tableaux of a single partition shape.
fn hook_count(p: &Partition) -> u128 {
    let parts = p.parts();
    let h = parts.len();
    let mut numerator: u128 = 1;
    for k in 1..=p.size() {
        numerator *= k as u128;
    }
    let mut hooks: u128 = 1;
    for (i, &part) in parts.iter().enumerate() {
        for j in 1..=part {
            let arm = (part - j) as u128;
            let leg = parts[i + 1..h].iter().filter(|&&q| q >= j).count() as u128;
            hooks *= arm + leg + 1;
        }
    }
    numerator / hooks
}

/// Character degree of the multipartition:
/// `r! * prod_a f^{lambda^(a)} / |lambda^(a)|!` with `f` the hook-length
/// count of standard tableaux.
pub fn dimension(lambda: &MultiPartition) -> u128 {
    let r = lambda.size();
    // Multinomial coefficient r! / prod |lambda^(a)|!, built incrementally
    // so every intermediate value is an integer.
    let mut multinomial: u128 = 1;
    let mut used: u64 = 0;
    for p in &lambda.components {
        let mut binom: u128 = 1;
        for k in 1..=p.size() {
            binom = binom * (used + k) as u128 / k as u128;
        }
        used += p.size();
        multinomial *= binom;
    }
    debug_assert_eq!(used, r);
    lambda.components.iter().map(hook_count).product::<u128>() * multinomial
}
