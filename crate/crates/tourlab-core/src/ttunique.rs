//! Rigid-core partitions of tournaments and the uncolored hardness gadget
//! built from them.
//!
//! A partition `(D, Z)` of a pattern tournament's vertices is *TT-unique*
//! when the part `D` induces a rigid subtournament (trivial automorphism
//! group) that appears exactly once in the whole pattern, and every two
//! vertices outside any large subset `D′ ⊆ D` are told apart by their
//! in-neighborhood traces on `D′`. "Large" means `|D′| ≥ δ` with
//! `δ = |D| − TT(T)·|Z|`, where `TT(T)` is the order of the largest
//! transitive subtournament. Such a partition lets an *uncolored*
//! tournament gadget simulate colors: the gadget contains the pattern as a
//! subtournament iff a colored host graph contains a colorful `|Z|`-clique.
//!
//! The third condition is checked through an equivalent polynomial-time
//! criterion: the largest subset of `D` on which two vertices `u ≠ v` have
//! equal traces is `(D ∖ {u,v})` minus the symmetric difference of their
//! in-neighborhoods, so the condition fails exactly when that set reaches
//! size `δ` for some pair. An exponential literal checker over all `D′` is
//! kept (crate-private) for cross-validation.

use num_bigint::BigUint;

use crate::canon::{are_isomorphic, automorphism_count_at_most};
use crate::counting::for_each_k_subset;
use crate::detect::tt_number;
use crate::error::{Error, Result};
use crate::structures::{random_tournament, ColoredGraph, Tournament};

/// Maximum order for any TT-unique condition check (in-neighborhoods are
/// handled as 128-bit masks).
pub const TT_UNIQUE_MAX_ORDER: usize = 128;

/// Maximum `|D|` for the exponential literal third-condition checker.
pub const LITERAL_CHECK_MAX_PART: usize = 20;

/// Default restart budget for [`search_tt_unique_partition`].
pub const DEFAULT_SEARCH_RESTARTS: u64 = 10_000;

/// The in-neighborhood trace `N⁻(v) ∩ Dp`, sorted ascending. The probed
/// vertex must lie outside the probed set.
pub fn tvec(t: &Tournament, v: usize, dp: &[usize]) -> Result<Vec<usize>> {
    let k = t.order();
    if v == 0 || v > k {
        return Err(Error::VertexOutOfRange { vertex: v, order: k });
    }
    let mut seen = vec![false; k + 1];
    for &w in dp {
        if w == 0 || w > k {
            return Err(Error::VertexOutOfRange { vertex: w, order: k });
        }
        if seen[w] {
            return Err(Error::DuplicateVertex { vertex: w });
        }
        seen[w] = true;
    }
    if seen[v] {
        return Err(Error::InvalidArgument(format!(
            "vertex {v} lies inside the probed set"
        )));
    }
    let mut trace: Vec<usize> = dp.iter().copied().filter(|&w| t.orients(w, v)).collect();
    trace.sort_unstable();
    Ok(trace)
}

/// Splits `d ⊎ z = {1, …, k}` into validated sorted halves.
fn validate_partition(k: usize, d: &[usize], z: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut owner = vec![0u8; k + 1];
    for (side, part) in [(1u8, d), (2u8, z)] {
        for &v in part {
            if v == 0 || v > k {
                return Err(Error::NotAPartition(format!(
                    "vertex {v} outside 1..={k}"
                )));
            }
            if owner[v] != 0 {
                return Err(Error::NotAPartition(format!(
                    "vertex {v} assigned twice"
                )));
            }
            owner[v] = side;
        }
    }
    if let Some(v) = (1..=k).find(|&v| owner[v] == 0) {
        return Err(Error::NotAPartition(format!("vertex {v} assigned to no part")));
    }
    let mut ds = d.to_vec();
    let mut zs = z.to_vec();
    ds.sort_unstable();
    zs.sort_unstable();
    Ok((ds, zs))
}

fn full_mask(k: usize) -> u128 {
    if k == 128 {
        u128::MAX
    } else {
        (1u128 << k) - 1
    }
}

fn vertices_mask(vs: &[usize]) -> u128 {
    vs.iter().map(|&v| 1u128 << (v - 1)).sum()
}

/// True iff some vertex subset other than `d_sorted` induces a copy of
/// `td = t[d_sorted]`, i.e. the pattern occurs at least twice. Subsets are
/// enumerated through their complements (there are few when `|D|` is close
/// to `k`); induced out-degrees are derived from the host's degree masks,
/// and the expensive isomorphism test runs only when the cheap degree
/// invariants agree.
fn occurs_again(t: &Tournament, d_sorted: &[usize], td: &Tournament) -> bool {
    let k = t.order();
    let z = k - d_sorted.len();
    if z == 0 {
        return false;
    }
    let out_masks = t.all_out_masks();
    let mut pattern_degrees = td.degree_sequence();
    pattern_degrees.sort_unstable();
    let pattern_sq: u64 = pattern_degrees.iter().map(|&d| (d * d) as u64).sum();
    let mut copies = 0u32;
    let mut degrees: Vec<usize> = Vec::with_capacity(k - z);
    for_each_k_subset(k, z, |excluded| {
        let mut excluded_mask = 0u128;
        for &v in excluded {
            excluded_mask |= 1u128 << (v - 1);
        }
        let mut sq = 0u64;
        degrees.clear();
        for w in 1..=k {
            if excluded_mask >> (w - 1) & 1 == 1 {
                continue;
            }
            let deg = (out_masks[w - 1] & !excluded_mask).count_ones() as usize;
            sq += (deg * deg) as u64;
            degrees.push(deg);
        }
        if sq == pattern_sq {
            degrees.sort_unstable();
            if degrees == pattern_degrees {
                let subset: Vec<usize> = (1..=k)
                    .filter(|&w| excluded_mask >> (w - 1) & 1 == 0)
                    .collect();
                let induced = t.induced(&subset).expect("nonempty subset");
                if are_isomorphic(&induced, td) {
                    copies += 1;
                    if copies >= 2 {
                        return false;
                    }
                }
            }
        }
        true
    });
    copies >= 2
}

/// Outcome of the three TT-unique conditions, evaluated without
/// short-circuiting, plus the `TT(T)` value used for `δ`.
#[derive(Clone, Copy, Debug)]
pub struct ConditionOutcome {
    /// Condition 1: `T[D]` has a trivial automorphism group.
    pub rigid: bool,
    /// Condition 2: `T[D]` is induced by exactly one vertex subset of `T`.
    pub unique: bool,
    /// Condition 3: traces on every size-`≥ δ` subset of `D` are distinct.
    pub traces_distinct: bool,
    /// Order of the largest transitive subtournament of `T`.
    pub tt: usize,
}

impl ConditionOutcome {
    /// True iff all three conditions hold.
    pub fn all(&self) -> bool {
        self.rigid && self.unique && self.traces_distinct
    }
}

/// Evaluates all three conditions for a validated, sorted partition. `tt`
/// must be `tt_number(t).0` (it depends on `t` only, so callers probing
/// many partitions of one tournament compute it once).
fn conditions_with_tt(
    t: &Tournament,
    d_sorted: &[usize],
    z_sorted: &[usize],
    tt: usize,
) -> ConditionOutcome {
    let k = t.order();
    let (rigid, unique) = if d_sorted.is_empty() {
        // The empty subtournament is rigid and induced exactly once (by
        // the empty set).
        (true, true)
    } else {
        let td = t.induced(d_sorted).expect("validated nonempty subset");
        (
            automorphism_count_at_most(&td, 2) == 1,
            !occurs_again(t, d_sorted, &td),
        )
    };
    let delta = d_sorted.len() as i64 - (tt * z_sorted.len()) as i64;
    let full = full_mask(k);
    let d_mask = vertices_mask(d_sorted);
    let in_masks: Vec<u128> = (1..=k)
        .map(|v| full & !t.out_mask(v) & !(1u128 << (v - 1)))
        .collect();
    let mut traces_distinct = true;
    'outer: for u in 1..=k {
        for v in u + 1..=k {
            let pair = (1u128 << (u - 1)) | (1u128 << (v - 1));
            let agreeing =
                d_mask & !pair & !(in_masks[u - 1] ^ in_masks[v - 1]);
            if agreeing.count_ones() as i64 >= delta {
                traces_distinct = false;
                break 'outer;
            }
        }
    }
    ConditionOutcome {
        rigid,
        unique,
        traces_distinct,
        tt,
    }
}

/// Evaluates all three conditions for an arbitrary partition.
pub fn tt_unique_conditions(
    t: &Tournament,
    d: &[usize],
    z: &[usize],
) -> Result<ConditionOutcome> {
    let k = t.order();
    if k > TT_UNIQUE_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "TT-unique condition check",
            limit: TT_UNIQUE_MAX_ORDER,
            requested: k,
        });
    }
    let (ds, zs) = validate_partition(k, d, z)?;
    Ok(conditions_with_tt(t, &ds, &zs, tt_number(t).0))
}

/// True iff `(D, Z)` is a TT-unique partition of `t`.
pub fn is_tt_unique(t: &Tournament, d: &[usize], z: &[usize]) -> Result<bool> {
    Ok(tt_unique_conditions(t, d, z)?.all())
}

/// The same predicate with the third condition checked literally: every
/// subset `D′ ⊆ D` with `|D′| ≥ δ` is enumerated and all trace pairs on it
/// compared. Exponential in `|D|`; used to cross-validate the polynomial
/// criterion.
pub(crate) fn is_tt_unique_literal(t: &Tournament, d: &[usize], z: &[usize]) -> Result<bool> {
    let k = t.order();
    if k > TT_UNIQUE_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "TT-unique condition check",
            limit: TT_UNIQUE_MAX_ORDER,
            requested: k,
        });
    }
    let (ds, zs) = validate_partition(k, d, z)?;
    if ds.len() > LITERAL_CHECK_MAX_PART {
        return Err(Error::CapExceeded {
            what: "literal trace check",
            limit: LITERAL_CHECK_MAX_PART,
            requested: ds.len(),
        });
    }
    let tt = tt_number(t).0;
    let outcome = conditions_with_tt(t, &ds, &zs, tt);
    if !(outcome.rigid && outcome.unique) {
        return Ok(false);
    }
    let delta = ds.len() as i64 - (tt * zs.len()) as i64;
    let full = full_mask(k);
    let in_masks: Vec<u128> = (1..=k)
        .map(|v| full & !t.out_mask(v) & !(1u128 << (v - 1)))
        .collect();
    for choice in 0u64..(1 << ds.len()) {
        let mut dp_mask = 0u128;
        for (i, &w) in ds.iter().enumerate() {
            if choice >> i & 1 == 1 {
                dp_mask |= 1u128 << (w - 1);
            }
        }
        if (dp_mask.count_ones() as i64) < delta {
            continue;
        }
        for u in 1..=k {
            if dp_mask >> (u - 1) & 1 == 1 {
                continue;
            }
            for v in u + 1..=k {
                if dp_mask >> (v - 1) & 1 == 1 {
                    continue;
                }
                if in_masks[u - 1] & dp_mask == in_masks[v - 1] & dp_mask {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A partition `(D, Z)` of a pattern's vertices together with the derived
/// threshold `δ = |D| − TT(T)·|Z|`. The `verified` flag is set only by
/// checks that ran all three TT-unique conditions successfully.
#[derive(Clone, Debug)]
pub struct TTUniquePartition {
    order: usize,
    d: Vec<usize>,
    z: Vec<usize>,
    delta: i64,
    verified: bool,
}

impl TTUniquePartition {
    /// Builds (and validates) the partition for `t`, computing `δ`. The
    /// result starts unverified; call [`TTUniquePartition::verify`].
    pub fn new(t: &Tournament, d: &[usize], z: &[usize]) -> Result<Self> {
        let k = t.order();
        if k > TT_UNIQUE_MAX_ORDER {
            return Err(Error::CapExceeded {
                what: "TT-unique condition check",
                limit: TT_UNIQUE_MAX_ORDER,
                requested: k,
            });
        }
        let (ds, zs) = validate_partition(k, d, z)?;
        let delta = ds.len() as i64 - (tt_number(t).0 * zs.len()) as i64;
        Ok(TTUniquePartition {
            order: k,
            d: ds,
            z: zs,
            delta,
            verified: false,
        })
    }

    /// Order of the partitioned pattern.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The rigid part `D`, sorted ascending.
    pub fn d(&self) -> &[usize] {
        &self.d
    }

    /// The color-simulating part `Z`, sorted ascending.
    pub fn z(&self) -> &[usize] {
        &self.z
    }

    /// The trace threshold `δ = |D| − TT(T)·|Z|`.
    pub fn delta(&self) -> i64 {
        self.delta
    }

    /// True iff all three conditions have been checked successfully.
    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Runs the three conditions against `t`; on success the partition
    /// becomes verified. Returns whether they hold.
    pub fn verify(&mut self, t: &Tournament) -> Result<bool> {
        if t.order() != self.order {
            return Err(Error::OrderMismatch {
                expected: self.order,
                found: t.order(),
            });
        }
        let outcome = tt_unique_conditions(t, &self.d, &self.z)?;
        if outcome.all() {
            self.verified = true;
        }
        Ok(outcome.all())
    }
}

/// Builds the uncolored hardness gadget: a tournament of order
/// `n + |D|` containing `t` as a subtournament iff the `|Z|`-colored host
/// `g` contains a colorful `|Z|`-clique.
///
/// Layout: host vertices keep ids `1..=n`; `|D|` fresh vertices follow.
/// With the pattern relabeled so that `Z` occupies `1..=|Z|` and `D` the
/// rest (each part in ascending order), a host vertex plays the pattern
/// role given by its color and the `i`-th fresh vertex plays role
/// `|Z| + i`. Same-color host pairs run ascending (each color class is
/// transitive); host edges agree with the pattern on the role pair,
/// host non-edges disagree; every pair touching a fresh vertex agrees.
pub fn tt_gadget(
    t: &Tournament,
    part: &TTUniquePartition,
    g: &ColoredGraph,
) -> Result<Tournament> {
    if t.order() != part.order() {
        return Err(Error::OrderMismatch {
            expected: part.order(),
            found: t.order(),
        });
    }
    if !part.is_verified() {
        return Err(Error::UnverifiedPartition);
    }
    if g.palette() != part.z().len() {
        return Err(Error::PaletteMismatch {
            expected: part.z().len(),
            found: g.palette(),
        });
    }
    let n = g.order();
    let d = part.d().len();
    // Pattern role of each gadget vertex.
    let role = |x: usize| -> usize {
        if x <= n {
            part.z()[g.coloring().color(x) - 1]
        } else {
            part.d()[x - n - 1]
        }
    };
    Ok(Tournament::from_fn(n + d, |x, y| {
        if x <= n && y <= n {
            let (cx, cy) = (g.coloring().color(x), g.coloring().color(y));
            if cx == cy {
                true // ascending within a color class
            } else if g.graph().adjacent(x, y) {
                t.orients(role(x), role(y))
            } else {
                !t.orients(role(x), role(y))
            }
        } else {
            t.orients(role(x), role(y))
        }
    }))
}

/// Appends a transitive tail: `j` new vertices forming a transitive
/// tournament, with every original vertex oriented toward every new one.
/// The original vertex set, with empty negative rib set, then certifies a
/// spine of length `j`, so the core length of the result is at least `j`.
pub fn family_tc(t0: &Tournament, j: usize) -> Tournament {
    let n0 = t0.order();
    Tournament::from_fn(n0 + j, |x, y| {
        if y <= n0 {
            t0.orients(x, y)
        } else {
            true // old → new, and the new block runs ascending
        }
    })
}

/// Transcript of a bounded random search for a TT-unique partition of one
/// tournament at a fixed `|Z|`.
#[derive(Clone, Debug)]
pub struct SearchReport {
    /// Order of the searched tournament.
    pub order: usize,
    /// Requested size of `Z`.
    pub z_size: usize,
    /// Number of splits actually tried (≤ the restart budget).
    pub attempts: u64,
    /// Attempts failing condition 1 (rigidity).
    pub fail_rigid: u64,
    /// Attempts failing condition 2 (unique occurrence).
    pub fail_unique: u64,
    /// Attempts failing condition 3 (distinct traces).
    pub fail_traces: u64,
    /// The first verified partition found, if any.
    pub partition: Option<TTUniquePartition>,
}

/// Tries up to `restarts` seeded random `(D, Z)` splits of `t` with
/// `|Z| = z_size`, returning the first verified partition found plus
/// failure statistics. All three conditions are evaluated per attempt, so
/// the failure counters are usable even when nothing verifies.
pub fn search_tt_unique_partition(
    t: &Tournament,
    z_size: usize,
    restarts: u64,
    seed: u64,
) -> Result<SearchReport> {
    let k = t.order();
    if k > TT_UNIQUE_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "TT-unique condition check",
            limit: TT_UNIQUE_MAX_ORDER,
            requested: k,
        });
    }
    if z_size > k {
        return Err(Error::InvalidArgument(format!(
            "|Z| = {z_size} exceeds the order {k}"
        )));
    }
    let tt = tt_number(t).0;
    let mut rng = crate::rng::SplitMix64::new(seed);
    let mut report = SearchReport {
        order: k,
        z_size,
        attempts: 0,
        fail_rigid: 0,
        fail_unique: 0,
        fail_traces: 0,
        partition: None,
    };
    let mut pool: Vec<usize> = (1..=k).collect();
    for _ in 0..restarts {
        report.attempts += 1;
        // Partial Fisher–Yates: the first z_size entries become Z.
        for i in 0..z_size {
            let j = i + (rng.next_u64() as usize) % (k - i);
            pool.swap(i, j);
        }
        let mut zs: Vec<usize> = pool[..z_size].to_vec();
        let mut ds: Vec<usize> = pool[z_size..].to_vec();
        zs.sort_unstable();
        ds.sort_unstable();
        let outcome = conditions_with_tt(t, &ds, &zs, tt);
        if !outcome.rigid {
            report.fail_rigid += 1;
        }
        if !outcome.unique {
            report.fail_unique += 1;
        }
        if !outcome.traces_distinct {
            report.fail_traces += 1;
        }
        if outcome.all() {
            let delta = ds.len() as i64 - (tt * zs.len()) as i64;
            report.partition = Some(TTUniquePartition {
                order: k,
                d: ds,
                z: zs,
                delta,
                verified: true,
            });
            break;
        }
    }
    Ok(report)
}

/// Aggregate result of sampling random tournaments and testing the fixed
/// prefix split for TT-uniqueness.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentReport {
    /// Sampled tournament order.
    pub k: usize,
    /// Number of sampled tournaments.
    pub trials: u64,
    /// `|Z|` used for every trial (see [`experiment_tt_unique`]).
    pub z: usize,
    /// Trials on which all three conditions held.
    pub successes: u64,
    /// Trials failing condition 1 (rigidity).
    pub fail_aut: u64,
    /// Trials failing condition 2 (unique occurrence).
    pub fail_unique: u64,
    /// Trials failing condition 3 (distinct traces).
    pub fail_vec: u64,
    /// Mean largest-transitive-subtournament order over the trials.
    pub mean_tt: f64,
}

impl ExperimentReport {
    /// Fraction of trials on which all three conditions held.
    pub fn frequency(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.successes as f64 / self.trials as f64
        }
    }

    /// Two-line CSV rendering (header plus one data row).
    pub fn csv(&self) -> String {
        format!(
            "k,trials,z,frequency,fail_aut,fail_unique,fail_vec\n{},{},{},{:.6},{},{},{}\n",
            self.k,
            self.trials,
            self.z,
            self.frequency(),
            self.fail_aut,
            self.fail_unique,
            self.fail_vec
        )
    }
}

/// Largest `z ≥ 0` with `k^(9z) ≤ 2^k`, i.e. `⌊k / (9·log₂ k)⌋`, computed
/// in exact integer arithmetic.
fn prefix_z(k: usize) -> usize {
    let bound = BigUint::from(2u32).pow(k as u32);
    let base = BigUint::from(k);
    let mut z = 0usize;
    while base.pow(9 * (z as u32 + 1)) <= bound {
        z += 1;
    }
    z
}

/// Samples `trials` random tournaments of order `k` and checks whether the
/// prefix split — `Z` the first `⌊k/(9·log₂ k)⌋` vertices, `D` the rest —
/// is TT-unique, tallying per-condition failures (evaluated without
/// short-circuiting). Trial `t` draws its tournament from the substream
/// seeded `seed XOR t`, so the report is independent of evaluation order.
pub fn experiment_tt_unique(k: usize, trials: u64, seed: u64) -> Result<ExperimentReport> {
    if k < 4 {
        return Err(Error::InvalidArgument(format!(
            "the experiment needs order ≥ 4, got {k}"
        )));
    }
    if k > TT_UNIQUE_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "TT-unique condition check",
            limit: TT_UNIQUE_MAX_ORDER,
            requested: k,
        });
    }
    let z = prefix_z(k);
    let zs: Vec<usize> = (1..=z).collect();
    let ds: Vec<usize> = (z + 1..=k).collect();
    let mut report = ExperimentReport {
        k,
        trials,
        z,
        successes: 0,
        fail_aut: 0,
        fail_unique: 0,
        fail_vec: 0,
        mean_tt: 0.0,
    };
    let mut tt_sum: u64 = 0;
    for trial in 0..trials {
        let t = random_tournament(k, seed ^ trial);
        let outcome = conditions_with_tt(&t, &ds, &zs, tt_number(&t).0);
        tt_sum += outcome.tt as u64;
        if !outcome.rigid {
            report.fail_aut += 1;
        }
        if !outcome.unique {
            report.fail_unique += 1;
        }
        if !outcome.traces_distinct {
            report.fail_vec += 1;
        }
        if outcome.all() {
            report.successes += 1;
        }
    }
    if trials > 0 {
        report.mean_tt = tt_sum as f64 / trials as f64;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{count_cf_clique, decide_indsub_to};
    use crate::detect::core_length;
    use crate::structures::{
        circulant_tournament, cyclic_triangle, random_coloring, random_graph,
        transitive_tournament, Coloring,
    };
    use num_traits::Zero;

    #[test]
    fn traces_are_in_neighborhood_intersections() {
        assert_eq!(tvec(&cyclic_triangle(), 1, &[]).unwrap(), vec![]);
        // Vertex 1 of a transitive tournament has no in-neighbors.
        let tt5 = transitive_tournament(5);
        assert_eq!(tvec(&tt5, 1, &[2, 3, 4, 5]).unwrap(), vec![]);
        for seed in 0..20 {
            let t = random_tournament(9, 4_000 + seed);
            let dp = [2, 4, 5, 8, 9];
            let got = tvec(&t, 3, &dp).unwrap();
            let want: Vec<usize> = dp
                .iter()
                .copied()
                .filter(|&w| t.orients(w, 3))
                .collect();
            assert_eq!(got, want);
        }
        assert!(tvec(&tt5, 2, &[2, 3]).is_err(), "probed vertex inside set");
        assert!(tvec(&tt5, 6, &[1]).is_err(), "vertex out of range");
        assert!(tvec(&tt5, 1, &[2, 2]).is_err(), "duplicate");
    }

    #[test]
    fn partition_validation_rejects_non_partitions() {
        let t = random_tournament(5, 1);
        assert!(is_tt_unique(&t, &[1, 2], &[3, 4]).is_err(), "missing vertex");
        assert!(is_tt_unique(&t, &[1, 2, 3], &[3, 4, 5]).is_err(), "overlap");
        assert!(is_tt_unique(&t, &[1, 2, 3, 6], &[4, 5]).is_err(), "range");
        assert!(is_tt_unique(&t, &[1, 2, 3, 4, 5], &[]).is_ok());
    }

    #[test]
    fn empty_z_reduces_to_rigidity() {
        // With Z empty, conditions 2 and 3 hold automatically: the whole
        // vertex set induces the only copy of T in itself, and δ = |D|
        // exceeds every trace-agreement set.
        for seed in 0..30 {
            let k = 5 + (seed as usize % 3);
            let t = random_tournament(k, 4_100 + seed);
            let d: Vec<usize> = (1..=k).collect();
            let outcome = tt_unique_conditions(&t, &d, &[]).unwrap();
            assert!(outcome.unique);
            assert!(outcome.traces_distinct);
            assert_eq!(
                is_tt_unique(&t, &d, &[]).unwrap(),
                automorphism_count_at_most(&t, 2) == 1
            );
        }
    }

    #[test]
    fn transitive_patterns_fail_uniqueness() {
        // Dropping the top vertex of TT_5 leaves TT_4, which occurs in
        // many vertex subsets of TT_5.
        let t = transitive_tournament(5);
        let outcome = tt_unique_conditions(&t, &[2, 3, 4, 5], &[1]).unwrap();
        assert!(!outcome.unique);
        assert!(!is_tt_unique(&t, &[2, 3, 4, 5], &[1]).unwrap());
    }

    #[test]
    fn polynomial_criterion_matches_literal_exhaustively() {
        // All partitions with |Z| ≤ 2 of random tournaments up to order 8.
        for k in 4..=8 {
            for seed in 0..6 {
                let t = random_tournament(k, 4_200 + seed);
                for z_mask in 0u32..(1 << k) {
                    if z_mask.count_ones() > 2 {
                        continue;
                    }
                    let z: Vec<usize> =
                        (1..=k).filter(|&v| z_mask >> (v - 1) & 1 == 1).collect();
                    let d: Vec<usize> =
                        (1..=k).filter(|&v| z_mask >> (v - 1) & 1 == 0).collect();
                    assert_eq!(
                        is_tt_unique(&t, &d, &z).unwrap(),
                        is_tt_unique_literal(&t, &d, &z).unwrap(),
                        "k={k} seed={seed} z={z:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn fast_occurrence_check_matches_generic_counting() {
        use crate::counting::count_indsub_to_at_most;
        use num_traits::One;
        for seed in 0..20 {
            let k = 6 + (seed as usize % 3);
            let t = random_tournament(k, 4_600 + seed);
            for z_mask in 1u32..(1 << k) {
                if z_mask.count_ones() > 2 {
                    continue;
                }
                let d: Vec<usize> =
                    (1..=k).filter(|&v| z_mask >> (v - 1) & 1 == 0).collect();
                let td = t.induced(&d).unwrap();
                assert_eq!(
                    !occurs_again(&t, &d, &td),
                    count_indsub_to_at_most(&td, &t, Some(2)) == BigUint::one(),
                    "k={k} seed={seed} z_mask={z_mask:b}"
                );
            }
        }
    }

    #[test]
    fn partition_bookkeeping_and_verification() {
        let t = random_tournament(6, 77);
        let mut part = TTUniquePartition::new(&t, &[2, 3, 4, 5, 6], &[1]).unwrap();
        assert_eq!(part.order(), 6);
        assert_eq!(part.d(), &[2, 3, 4, 5, 6]);
        assert_eq!(part.z(), &[1]);
        assert_eq!(
            part.delta(),
            5 - tt_number(&t).0 as i64,
            "delta from the definition"
        );
        assert!(!part.is_verified());
        let ok = part.verify(&t).unwrap();
        assert_eq!(ok, is_tt_unique(&t, &[2, 3, 4, 5, 6], &[1]).unwrap());
        assert_eq!(part.is_verified(), ok);
        // Using an unverified partition in the gadget is rejected.
        if !ok {
            let g = ColoredGraph::new(
                random_graph(4, 5),
                Coloring::new(1, vec![1; 4]).unwrap(),
            )
            .unwrap();
            assert!(matches!(
                tt_gadget(&t, &part, &g),
                Err(Error::UnverifiedPartition)
            ));
        }
    }

    #[test]
    fn transitive_tail_grows_the_core() {
        let tri = cyclic_triangle();
        assert_eq!(family_tc(&tri, 0), tri);
        let grown = family_tc(&tri, 5);
        assert_eq!(grown.order(), 8);
        assert!(core_length(&grown).unwrap() >= 5);
        // New block is transitive and dominated by the old vertices.
        for x in 1..=3 {
            for y in 4..=8 {
                assert!(grown.orients(x, y));
            }
        }
        for x in 4..=8 {
            for y in x + 1..=8 {
                assert!(grown.orients(x, y));
            }
        }
    }

    #[test]
    fn prefix_z_matches_the_closed_form() {
        // ⌊k / (9·log₂ k)⌋ cross-checked in floating point (no ties occur
        // at these arguments).
        for k in [4usize, 8, 16, 32, 64, 100, 128] {
            let direct = (k as f64 / (9.0 * (k as f64).log2())).floor() as usize;
            assert_eq!(prefix_z(k), direct, "k={k}");
        }
        assert_eq!(prefix_z(64), 1);
        assert_eq!(prefix_z(128), 2);
        assert_eq!(prefix_z(16), 0);
    }

    #[test]
    fn experiment_reports_are_deterministic_and_well_formed() {
        let a = experiment_tt_unique(12, 40, 9).unwrap();
        let b = experiment_tt_unique(12, 40, 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.z, 0, "small orders give an empty Z");
        assert_eq!(a.fail_unique + a.fail_vec, 0, "empty Z trivializes 2 and 3");
        assert_eq!(a.successes + a.fail_aut, a.trials);
        let csv = a.csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "k,trials,z,frequency,fail_aut,fail_unique,fail_vec"
        );
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row.len(), 7);
        assert_eq!(row[0], "12");
        assert_eq!(row[1], "40");
        assert!(experiment_tt_unique(3, 5, 1).is_err(), "order too small");
        let empty = experiment_tt_unique(10, 0, 1).unwrap();
        assert_eq!(empty.frequency(), 0.0);
        assert_eq!(empty.mean_tt, 0.0);
    }

    /// A rotational tournament of order 13 (largest transitive
    /// subtournament of order 4) with one edge flipped to break its
    /// rotational symmetry. The flip makes D = V ∖ {4} rigid and uniquely
    /// occurring while keeping all in-neighborhood traces distinct, so the
    /// singleton split verifies — random tournaments of this order
    /// essentially never pass the trace condition.
    fn flipped_rotational_instance() -> Tournament {
        let mut t = circulant_tournament(13, &[1, 3, 7, 8, 9, 11]).unwrap();
        t.flip_pair(1, 2);
        t
    }

    #[test]
    fn frozen_instance_has_a_verified_singleton_split() {
        let t = flipped_rotational_instance();
        assert_eq!(tt_number(&t).0, 5);
        let d: Vec<usize> = (1..=13).filter(|&v| v != 4).collect();
        assert!(is_tt_unique(&t, &d, &[4]).unwrap());
        assert!(is_tt_unique_literal(&t, &d, &[4]).unwrap());
    }

    #[test]
    fn search_produces_verified_partitions_or_honest_reports() {
        let t = flipped_rotational_instance();
        let report = search_tt_unique_partition(&t, 1, 2_000, 11).unwrap();
        assert_eq!(report.order, 13);
        assert_eq!(report.z_size, 1);
        assert!(report.attempts >= 1);
        let part = report.partition.as_ref().expect("seeded search succeeds");
        assert!(part.is_verified());
        assert_eq!(part.z().len(), 1);
        assert!(is_tt_unique(&t, part.d(), part.z()).unwrap());
        // A transitive tournament never verifies: uniqueness fails for
        // every proper D, and rigidity holds but condition 2 fails.
        let tt = transitive_tournament(10);
        let none = search_tt_unique_partition(&tt, 1, 200, 3).unwrap();
        assert!(none.partition.is_none());
        assert_eq!(none.attempts, 200);
        assert_eq!(none.fail_unique, 200);
    }

    #[test]
    fn gadget_detects_exactly_the_colorful_cliques() {
        let t = flipped_rotational_instance();
        let report = search_tt_unique_partition(&t, 1, 2_000, 11).unwrap();
        let Some(part) = report.partition else {
            // The search is seeded, so reaching this branch means the
            // instance stopped verifying — fail loudly rather than skip.
            panic!("seeded search found no partition");
        };
        for seed in 0..10 {
            let n = 5 + (seed as usize % 4);
            let g = ColoredGraph::new(
                random_graph(n, 4_400 + seed),
                random_coloring(n, 1, 4_500 + seed),
            )
            .unwrap();
            let gadget = tt_gadget(&t, &part, &g).unwrap();
            assert_eq!(gadget.order(), n + part.d().len());
            let found = decide_indsub_to(&t, &gadget);
            let clique = !count_cf_clique(1, &g).unwrap().is_zero();
            assert_eq!(found, clique, "seed {seed}");
            assert!(found, "palette-1 hosts always have a colorful 1-clique");
        }
        // Palette mismatch is rejected.
        let bad = ColoredGraph::new(
            random_graph(4, 9),
            random_coloring(4, 2, 10),
        )
        .unwrap();
        assert!(matches!(
            tt_gadget(&t, &part, &bad),
            Err(Error::PaletteMismatch { .. })
        ));
    }
}
