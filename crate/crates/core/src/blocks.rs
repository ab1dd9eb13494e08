//! The block engine: per-hyperplane partitions, their lattice join, the
//! residue-equivalence oracle, and content-based partitions.
//!
//! All partitions are of the canonically enumerated multipartitions of
//! `(d, r)` (see [`enumerate_multipartitions`]). The two computation routes:
//!
//! * join route: one direct grouping per essential hyperplane containing the
//!   specialization — equal components off a pair `{s, t}` plus equal
//!   charged contents of the pair under weights `(0, k)` for a pair
//!   hyperplane, equal size vectors for `N = 0` — joined in the partition
//!   lattice by union-find;
//! * residue route: per prime `p` dividing `d^r * r!`, multipartitions are
//!   grouped by the multiset of node residues, and the groupings over all
//!   such primes are joined.
//!
//! Both are exact and must agree; the acceptance suite checks the agreement
//! over a grid of specializations.

use std::collections::BTreeMap;

use crate::combinatorics::{
    charged_content, diagram_nodes, enumerate_multipartitions, ContentMultiset, MultiPartition,
    Partition, WeightSystem,
};
use crate::cyclotomics::prime_to_p_part;
use crate::hyperplanes::{
    hyperplanes_containing, is_essential, EssentialHyperplane, Specialization,
};
use crate::schur::{a_and_big_a, candidate_primes};
use crate::{Error, Result};

/// A partition of `{0, ..., universe-1}` into disjoint non-empty blocks,
/// in canonical form: blocks internally ascending, sorted by least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    universe: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn from_blocks(universe: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; universe];
        for block in &mut blocks {
            block.sort_unstable();
            for &i in block.iter() {
                if i >= universe || seen[i] {
                    return Err(Error::UniverseMismatch { expected: universe, got: i + 1 });
                }
                seen[i] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::UniverseMismatch { expected: universe, got: 0 });
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { universe, blocks })
    }

    pub fn singletons(universe: usize) -> Self {
        SetPartition { universe, blocks: (0..universe).map(|i| vec![i]).collect() }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == self.universe
    }

    /// Index of the block containing each element.
    pub fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.universe];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                idx[i] = b;
            }
        }
        idx
    }

    /// True iff every block of `self` is contained in a block of `coarser`.
    pub fn is_refinement_of(&self, coarser: &SetPartition) -> bool {
        if self.universe != coarser.universe {
            return false;
        }
        let idx = coarser.block_index();
        self.blocks
            .iter()
            .all(|block| block.iter().all(|&i| idx[i] == idx[block[0]]))
    }

    /// Groups `0..keys.len()` by key equality.
    pub fn from_group_keys<K: Ord>(keys: Vec<K>) -> Self {
        let universe = keys.len();
        let mut groups: BTreeMap<K, Vec<usize>> = BTreeMap::new();
        for (i, key) in keys.into_iter().enumerate() {
            groups.entry(key).or_default().push(i);
        }
        SetPartition::from_blocks(universe, groups.into_values().collect())
            .expect("grouping covers the universe")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx.max(ry)] = rx.min(ry);
        }
    }
}

/// Finest partition coarser than every input (the join in the partition
/// lattice). An empty input list gives all singletons.
pub fn join_partitions(universe: usize, parts: &[SetPartition]) -> Result<SetPartition> {
    let mut uf = UnionFind::new(universe);
    for part in parts {
        if part.universe() != universe {
            return Err(Error::UniverseMismatch { expected: universe, got: part.universe() });
        }
        for block in part.blocks() {
            for &i in &block[1..] {
                uf.union(block[0], i);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..universe {
        let root = uf.find(i);
        groups.entry(root).or_default().push(i);
    }
    SetPartition::from_blocks(universe, groups.into_values().collect())
}

/// The Rouquier block partition associated with a single essential
/// hyperplane, by direct grouping (both characterizations are
/// biconditional, so no closure is needed):
///
/// * `kN + M_s - M_t = 0`: equal components off `{s, t}` and equal charged
///   contents of the component pair under the weight system `(0, k)`;
/// * `N = 0`: equal size vectors.
pub fn blocks_for_hyperplane(
    h: &EssentialHyperplane,
    d: usize,
    r: u32,
) -> Result<SetPartition> {
    if !is_essential(h, d, r) {
        return Err(Error::NotEssential(format!("{h:?} for G({d},1,{r})")));
    }
    let universe = enumerate_multipartitions(d, r);
    match *h {
        EssentialHyperplane::N => {
            Ok(SetPartition::from_group_keys(
                universe.iter().map(|m| m.size_vector()).collect(),
            ))
        }
        EssentialHyperplane::Pair { k, s, t } => {
            let pair_weights = WeightSystem::new(vec![0, k]);
            let keys: Vec<(Vec<Partition>, ContentMultiset)> = universe
                .iter()
                .map(|lambda| {
                    let off_pair: Vec<Partition> = (0..d)
                        .filter(|&a| a != s && a != t)
                        .map(|a| lambda.component(a).clone())
                        .collect();
                    let pair = MultiPartition::new(vec![
                        lambda.component(s).clone(),
                        lambda.component(t).clone(),
                    ])
                    .expect("two components");
                    let content = charged_content(&pair, &pair_weights)
                        .expect("weight length matches");
                    (off_pair, content)
                })
                .collect();
            Ok(SetPartition::from_group_keys(keys))
        }
    }
}

/// Rouquier blocks of the specialized Ariki-Koike algebra: the join of the
/// per-hyperplane partitions over all essential hyperplanes containing the
/// specialization; all singletons when no hyperplane contains it.
pub fn rouquier_blocks(phi: &Specialization) -> SetPartition {
    let d = phi.d();
    let r = phi.r();
    let universe = enumerate_multipartitions(d, r).len();
    let parts: Vec<SetPartition> = hyperplanes_containing(phi)
        .iter()
        .map(|h| blocks_for_hyperplane(h, d, r).expect("containing hyperplanes are essential"))
        .collect();
    join_partitions(universe, &parts).expect("groupings share one universe")
}

/// Residue of one node in the residue field at a prime over p, encoded by
/// exact integer data. `class` is the component index modulo the p'-part of
/// d (root-of-unity images collide exactly along that congruence) and
/// `exponent` is a q-exponent (q stays transcendental in the residue field).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ResidueKey {
    /// n != 0: the image of `zeta_d^a q^{m_a + n(j-i)}`.
    Q { exponent: i64, class: u64 },
    /// n = 0, component value `zeta_d^a q^{m_a}` distinct from every other
    /// component: the pair `((j-i) mod p, zeta_d^a q^{m_a})`.
    Pair { residue: u64, exponent: i64, class: u64 },
    /// n = 0 otherwise: the image of `zeta_d^a q^{m_a}` alone.
    Coarse { exponent: i64, class: u64 },
}

/// Multiset of node residues of `lambda` at a prime over p.
pub fn residue_profile(
    lambda: &MultiPartition,
    phi: &Specialization,
    p: u64,
) -> Result<BTreeMap<ResidueKey, u32>> {
    let d = phi.d();
    if lambda.d() != d {
        return Err(Error::SpecializationMismatch(format!(
            "multipartition has {} components, specialization {}",
            lambda.d(),
            d
        )));
    }
    let dp = prime_to_p_part(d as u64, p);
    let class = |a: usize| a as u64 % dp;
    let m = phi.weights();
    let n = phi.n();

    // For n = 0, a node keeps its (j - i) residue only if its component
    // value zeta^a q^{m_a} collides with no other component's value.
    let value_is_unique: Vec<bool> = (0..d)
        .map(|a| (0..d).all(|b| b == a || (m[b], class(b)) != (m[a], class(a))))
        .collect();

    let mut profile = BTreeMap::new();
    for node in diagram_nodes(lambda) {
        let diag = node.j as i64 - node.i as i64;
        let key = if n != 0 {
            ResidueKey::Q { exponent: m[node.a] + n * diag, class: class(node.a) }
        } else if value_is_unique[node.a] {
            ResidueKey::Pair {
                residue: diag.rem_euclid(p as i64) as u64,
                exponent: m[node.a],
                class: class(node.a),
            }
        } else {
            ResidueKey::Coarse { exponent: m[node.a], class: class(node.a) }
        };
        *profile.entry(key).or_insert(0) += 1;
    }
    Ok(profile)
}

/// Independent route to the Rouquier blocks: transitive closure, over all
/// primes p dividing `d^r * r!`, of equality of residue profiles at p.
/// Primes that are not phi-bad only contribute singleton groupings, so the
/// superset of candidate primes is safe.
pub fn rouquier_blocks_residue_oracle(phi: &Specialization) -> SetPartition {
    let d = phi.d();
    let r = phi.r();
    let universe = enumerate_multipartitions(d, r);
    let parts: Vec<SetPartition> = candidate_primes(d as u64, r)
        .into_iter()
        .map(|p| {
            SetPartition::from_group_keys(
                universe
                    .iter()
                    .map(|lambda| {
                        residue_profile(lambda, phi, p).expect("matching dimensions")
                    })
                    .collect(),
            )
        })
        .collect();
    join_partitions(universe.len(), &parts).expect("groupings share one universe")
}

/// Groups the multipartitions of (d, r) by charged content under `m`.
pub fn content_partition(d: usize, r: u32, m: &WeightSystem) -> Result<SetPartition> {
    if m.len() != d {
        return Err(Error::WeightLength { expected: d, got: m.len() });
    }
    let keys: Vec<ContentMultiset> = enumerate_multipartitions(d, r)
        .iter()
        .map(|lambda| charged_content(lambda, m).expect("weight length checked"))
        .collect();
    Ok(SetPartition::from_group_keys(keys))
}

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub details: Option<String>,
}

impl CheckOutcome {
    fn pass(name: &str) -> Self {
        CheckOutcome { name: name.into(), passed: true, details: None }
    }

    fn fail(name: &str, details: String) -> Self {
        CheckOutcome { name: name.into(), passed: false, details: Some(details) }
    }
}

/// Report of [`verify_block_invariants`]; failures are collected, never
/// thrown.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Cross-checks the computed blocks of `phi` against invariants they must
/// satisfy:
///
/// 1. the a- and A-invariants are constant on every block;
/// 2. for n = 1, the blocks refine the charged-content partition (the
///    forward content characterization; the converse is a prime-power-d
///    statement and is not asserted here);
/// 3. for n != 0 and each containing pair hyperplane `kN + M_s - M_t = 0`,
///    the pair-content grouping of bipartitions of every size l <= r equals
///    the recursively computed blocks of the rank-l two-parameter algebra
///    specialized at `(m_s, m_t, n)`.
pub fn verify_block_invariants(phi: &Specialization) -> VerificationReport {
    let d = phi.d();
    let r = phi.r();
    let universe = enumerate_multipartitions(d, r);
    let blocks = rouquier_blocks(phi);
    let mut checks = Vec::new();

    // (1) a and A constant per block.
    let invariants: Vec<(i64, i64)> = universe
        .iter()
        .map(|lambda| a_and_big_a(lambda, phi).expect("sizes match"))
        .collect();
    let mut failure = None;
    'outer: for block in blocks.blocks() {
        let first = invariants[block[0]];
        for &i in &block[1..] {
            if invariants[i] != first {
                failure = Some(format!(
                    "{} has (a,A) = {:?} but {} has {:?} in one block",
                    universe[block[0]], first, universe[i], invariants[i]
                ));
                break 'outer;
            }
        }
    }
    checks.push(match failure {
        None => CheckOutcome::pass("a_A_constant_on_blocks"),
        Some(details) => CheckOutcome::fail("a_A_constant_on_blocks", details),
    });

    // (2) blocks refine the charged-content partition when n = 1.
    if phi.n() == 1 {
        let content = content_partition(d, r, &WeightSystem::new(phi.weights().to_vec()))
            .expect("lengths match");
        checks.push(if blocks.is_refinement_of(&content) {
            CheckOutcome::pass("blocks_refine_charged_content")
        } else {
            CheckOutcome::fail(
                "blocks_refine_charged_content",
                format!(
                    "blocks ({}) do not refine content partition ({})",
                    blocks.num_blocks(),
                    content.num_blocks()
                ),
            )
        });
    }

    // (3) pair hyperplane condition vs. the rank-l recursion.
    if phi.n() != 0 {
        let mut failure = None;
        'pairs: for h in hyperplanes_containing(phi) {
            let EssentialHyperplane::Pair { k, s, t } = h else { continue };
            for l in 1..=r {
                let bipartitions = enumerate_multipartitions(2, l);
                let pair_weights = WeightSystem::new(vec![0, k]);
                let grouping = SetPartition::from_group_keys(
                    bipartitions
                        .iter()
                        .map(|mu| charged_content(mu, &pair_weights).expect("length 2"))
                        .collect(),
                );
                let small = Specialization::new(
                    2,
                    l,
                    vec![phi.weights()[s], phi.weights()[t]],
                    phi.n(),
                )
                .expect("valid rank-l data");
                let recursive = rouquier_blocks(&small);
                if grouping != recursive {
                    failure = Some(format!(
                        "pair ({s},{t}) with k = {k}: content grouping differs from the rank-{l} blocks"
                    ));
                    break 'pairs;
                }
            }
        }
        checks.push(match failure {
            None => CheckOutcome::pass("pair_hyperplane_recursion"),
            Some(details) => CheckOutcome::fail("pair_hyperplane_recursion", details),
        });
    }

    VerificationReport { checks }
}
