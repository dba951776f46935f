//! Transitive-subtournament machinery and pattern detection.
//!
//! A *spine decomposition* of a tournament splits its vertices into three
//! parts `(R₊, R₋, S)` where the spine `S` induces a transitive tournament
//! and equals, exactly, the common out-neighborhood of `R₊` intersected with
//! the common in-neighborhood of `R₋`. The *core length* is the largest
//! spine over all decompositions. Patterns with long spines are easy to
//! detect: guess images for the few rib vertices, and the spine can be
//! completed from any sufficiently large common neighborhood, because every
//! tournament on `2^{c−1}` vertices contains a transitive subtournament of
//! order `c`.
//!
//! The module provides the recursive extractor realizing that existence
//! bound, an exact branch-and-bound maximum (`tt_number`), the exhaustive
//! spine enumeration, and the detection algorithm itself, which agrees with
//! the definitional decider everywhere.

use crate::counting::decide_indsub_to;
use crate::error::{Error, Result};
use crate::structures::Tournament;

/// Maximum order for exhaustive spine enumeration (`3^k` assignments).
pub const SPINE_MAX_ORDER: usize = 14;

/// Maximum host order for the vertex-mask algorithms in this module.
pub const MASK_MAX_ORDER: usize = 128;

/// A spine decomposition; all three parts are sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineDecomposition {
    pub r_plus: Vec<usize>,
    pub r_minus: Vec<usize>,
    pub spine: Vec<usize>,
}

impl SpineDecomposition {
    /// Spine length `|S|`.
    pub fn spine_length(&self) -> usize {
        self.spine.len()
    }
}

fn in_mask(t: &Tournament, v: usize, full: u128) -> u128 {
    full & !t.out_mask(v) & !(1u128 << (v - 1))
}

fn mask_to_vertices(mut mask: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let v = mask.trailing_zeros() as usize + 1;
        mask &= mask - 1;
        out.push(v);
    }
    out
}

/// A vertex set inducing a transitive subtournament of size at least
/// `⌊log₂ n⌋ + 1`, found by recursing into the larger of the smallest
/// remaining vertex's out- and in-neighborhoods. Returned sorted ascending.
pub fn extract_transitive_em(t: &Tournament) -> Vec<usize> {
    let n = t.order();
    assert!(n <= MASK_MAX_ORDER, "vertex masks require order <= 128");
    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    fn recurse(t: &Tournament, mask: u128, full: u128, chain: &mut Vec<usize>) {
        if mask == 0 {
            return;
        }
        let pivot = mask.trailing_zeros() as usize + 1;
        let outs = mask & t.out_mask(pivot);
        let ins = mask & in_mask(t, pivot, full);
        // The pivot joins the chain either way; recursing into its larger
        // one-sided neighborhood at least halves the remainder, which keeps
        // the logarithmic size bound telescoping.
        chain.push(pivot);
        if outs.count_ones() >= ins.count_ones() {
            recurse(t, outs, full, chain);
        } else {
            recurse(t, ins, full, chain);
        }
    }
    let mut chain = Vec::new();
    recurse(t, full, full, &mut chain);
    chain.sort_unstable();
    let bound = usize::BITS as usize - 1 - n.leading_zeros() as usize + 1;
    assert!(
        chain.len() >= bound,
        "extractor returned {} vertices, bound is {bound}",
        chain.len()
    );
    debug_assert!(t.induced(&chain).unwrap().is_transitive());
    chain
}

/// Branch-and-bound engine: grows chains `v₁ → v₂ → …` where each new
/// vertex is a common out-neighbor of the whole chain, which characterizes
/// transitive subtournaments. With `target = Some(c)` it stops as soon as a
/// chain of length `c` exists.
fn tt_search(
    outs: &[u128],
    chain: &mut Vec<usize>,
    cand: u128,
    best: &mut (usize, Vec<usize>),
    target: Option<usize>,
) -> bool {
    if chain.len() > best.0 {
        *best = (chain.len(), chain.clone());
    }
    if let Some(c) = target {
        if best.0 >= c {
            return true;
        }
    }
    if chain.len() + cand.count_ones() as usize <= best.0 {
        return false;
    }
    // Candidates ordered by how much room they leave, largest first; ties
    // by vertex id for determinism.
    let mut ordered: Vec<(usize, u32)> = mask_to_vertices(cand)
        .into_iter()
        .map(|v| (v, (cand & outs[v - 1]).count_ones()))
        .collect();
    ordered.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    for (v, room) in ordered {
        if chain.len() + 1 + room as usize <= best.0 {
            break;
        }
        chain.push(v);
        let hit = tt_search(outs, chain, cand & outs[v - 1], best, target);
        chain.pop();
        if hit {
            return true;
        }
    }
    false
}

/// The exact maximum order of a transitive subtournament, with a witness
/// vertex set (sorted ascending). Order ≤ 128.
pub fn tt_number(t: &Tournament) -> (usize, Vec<usize>) {
    let n = t.order();
    assert!(n <= MASK_MAX_ORDER, "vertex masks require order <= 128");
    if n == 0 {
        return (0, Vec::new());
    }
    let outs = t.all_out_masks();
    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut best = (0usize, Vec::new());
    let mut chain = Vec::new();
    tt_search(&outs, &mut chain, full, &mut best, None);
    best.1.sort_unstable();
    debug_assert!(t.induced(&best.1).unwrap().is_transitive());
    best
}

/// True iff the tournament has a transitive subtournament of order ≥
/// `target`; early-exits once one is found.
pub fn tt_number_at_least(t: &Tournament, target: usize) -> bool {
    if target == 0 {
        return true;
    }
    let n = t.order();
    assert!(n <= MASK_MAX_ORDER, "vertex masks require order <= 128");
    if target > n {
        return false;
    }
    let outs = t.all_out_masks();
    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut best = (0usize, Vec::new());
    let mut chain = Vec::new();
    tt_search(&outs, &mut chain, full, &mut best, Some(target))
}

/// All spine decompositions, by exhaustive assignment of each vertex to
/// `R₊`, `R₋`, or the spine (`3^k` candidates; order ≤
/// [`SPINE_MAX_ORDER`]). Order of results: `R₊` mask ascending, then `R₋`
/// mask ascending, interpreted as vertex bitmasks.
pub fn spine_decompositions(t: &Tournament) -> Result<Vec<SpineDecomposition>> {
    let k = t.order();
    if k > SPINE_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "spine decomposition enumeration",
            limit: SPINE_MAX_ORDER,
            requested: k,
        });
    }
    let full: u128 = (1u128 << k) - 1;
    let outs = t.all_out_masks();
    let ins: Vec<u128> = (1..=k).map(|v| in_mask(t, v, full)).collect();
    let mut found = Vec::new();
    // Iterate disjoint (R₊, R₋) pairs: for each subset `ribs`, split it
    // into R₊ and R₋ in every way; the spine is forced to be the rest.
    let mut r_plus_mask = 0u128;
    loop {
        let rest = full & !r_plus_mask;
        let mut r_minus_mask = 0u128;
        loop {
            let spine_mask = full & !r_plus_mask & !r_minus_mask;
            let mut inter = full;
            let mut m = r_plus_mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize + 1;
                m &= m - 1;
                inter &= outs[v - 1];
            }
            let mut m = r_minus_mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize + 1;
                m &= m - 1;
                inter &= ins[v - 1];
            }
            if inter == spine_mask {
                let spine = mask_to_vertices(spine_mask);
                let transitive =
                    spine.len() <= 1 || t.induced(&spine).expect("nonempty").is_transitive();
                if transitive {
                    found.push(SpineDecomposition {
                        r_plus: mask_to_vertices(r_plus_mask),
                        r_minus: mask_to_vertices(r_minus_mask),
                        spine,
                    });
                }
            }
            // Next subset of `rest` after r_minus_mask.
            if r_minus_mask == rest {
                break;
            }
            r_minus_mask = (r_minus_mask.wrapping_sub(rest)) & rest;
        }
        if r_plus_mask == full {
            break;
        }
        r_plus_mask = (r_plus_mask.wrapping_sub(full)) & full;
    }
    Ok(found)
}

/// The largest spine length over all spine decompositions.
pub fn core_length(t: &Tournament) -> Result<usize> {
    Ok(spine_decompositions(t)?
        .iter()
        .map(|d| d.spine_length())
        .max()
        .expect("the all-ribs decomposition always qualifies"))
}

/// The decomposition detection uses: maximal spine, ties broken by the
/// lexicographically least `(R₊, R₋)` vertex lists.
pub fn best_spine_decomposition(t: &Tournament) -> Result<SpineDecomposition> {
    let mut all = spine_decompositions(t)?;
    all.sort_by(|a, b| {
        b.spine_length()
            .cmp(&a.spine_length())
            .then_with(|| a.r_plus.cmp(&b.r_plus))
            .then_with(|| a.r_minus.cmp(&b.r_minus))
    });
    Ok(all.into_iter().next().expect("nonempty"))
}

/// Decides whether the host contains an induced copy of the pattern, using
/// the spine-based algorithm: enumerate ordered images for the ribs in
/// lexicographic order; for each consistent image compute the common
/// neighborhood `N′`; accept if `|N′| ≥ 2^{core−1}` or if `N′` induces a
/// transitive subtournament of order `core`. Falls back to the subset
/// decider when the pattern exceeds the spine cap or the host exceeds the
/// mask cap. Always agrees with [`decide_indsub_to`].
pub fn detect_pattern(pattern: &Tournament, host: &Tournament) -> bool {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return false;
    }
    if k > SPINE_MAX_ORDER || n > MASK_MAX_ORDER {
        return decide_indsub_to(pattern, host);
    }
    let deco = best_spine_decomposition(pattern).expect("order within cap");
    let core = deco.spine_length();
    let ribs: Vec<usize> = deco
        .r_plus
        .iter()
        .chain(deco.r_minus.iter())
        .copied()
        .collect();
    let c = ribs.len();
    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let outs = host.all_out_masks();
    let ins: Vec<u128> = (1..=n).map(|v| in_mask(host, v, full)).collect();
    // The acceptance threshold for skipping the transitive search.
    let threshold = if core == 0 {
        0
    } else {
        1u128.checked_shl(core as u32 - 1).unwrap_or(u128::MAX) as usize as u128
    };

    // Depth-first assignment of host vertices to rib positions in
    // lexicographic tuple order; orientation consistency with previously
    // placed ribs prunes exactly the tuples the full scan would reject.
    fn place(
        pattern: &Tournament,
        host: &Tournament,
        ribs: &[usize],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        deco: &SpineDecomposition,
        outs: &[u128],
        ins: &[u128],
        full: u128,
        core: usize,
        threshold: u128,
    ) -> bool {
        let depth = image.len();
        if depth == ribs.len() {
            let mut nprime = full;
            for (pos, &rv) in ribs.iter().enumerate() {
                let hv = image[pos];
                if deco.r_plus.contains(&rv) {
                    nprime &= outs[hv - 1];
                } else {
                    nprime &= ins[hv - 1];
                }
            }
            if core == 0 {
                return true;
            }
            let size = nprime.count_ones() as u128;
            if size >= threshold {
                return true;
            }
            if size == 0 {
                return false;
            }
            let inside = host
                .induced(&mask_to_vertices(nprime))
                .expect("nonempty neighborhood");
            return tt_number_at_least(&inside, core);
        }
        for hv in 1..=host.order() {
            if used[hv] {
                continue;
            }
            let ok = (0..depth).all(|prev| {
                let (pu, pv) = (ribs[prev], ribs[depth]);
                let (hu, hvx) = (image[prev], hv);
                pattern.orients(pu, pv) == host.orients(hu, hvx)
            });
            if !ok {
                continue;
            }
            image.push(hv);
            used[hv] = true;
            if place(
                pattern, host, ribs, image, used, deco, outs, ins, full, core, threshold,
            ) {
                image.pop();
                used[hv] = false;
                return true;
            }
            image.pop();
            used[hv] = false;
        }
        false
    }

    let mut image = Vec::with_capacity(c);
    let mut used = vec![false; n + 1];
    place(
        pattern, host, &ribs, &mut image, &mut used, &deco, &outs, &ins, full, core, threshold,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{
        cyclic_triangle, random_tournament, transitive_tournament,
    };

    #[test]
    fn extractor_meets_the_log_bound() {
        for seed in 0..50 {
            for n in [1usize, 2, 3, 5, 8, 16, 33, 64] {
                let t = random_tournament(n, seed * 100 + n as u64);
                let set = extract_transitive_em(&t);
                let bound = (usize::BITS - 1 - n.leading_zeros()) as usize + 1;
                assert!(set.len() >= bound, "n={n} seed={seed}");
                assert!(t.induced(&set).unwrap().is_transitive());
            }
        }
    }

    #[test]
    fn tt_number_of_standard_tournaments() {
        assert_eq!(tt_number(&transitive_tournament(7)).0, 7);
        assert_eq!(tt_number(&cyclic_triangle()).0, 2);
        let (len, witness) = tt_number(&transitive_tournament(5));
        assert_eq!(len, 5);
        assert_eq!(witness, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn tt_number_matches_exhaustive_search_on_small_orders() {
        for seed in 0..30 {
            let n = 7;
            let t = random_tournament(n, 3_000 + seed);
            let (len, witness) = tt_number(&t);
            assert!(t.induced(&witness).unwrap().is_transitive());
            // Exhaustive check: no subset of size len+1 is transitive.
            let mut max_found = 0;
            for mask in 1u32..(1 << n) {
                let vs: Vec<usize> =
                    (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
                if t.induced(&vs).unwrap().is_transitive() {
                    max_found = max_found.max(vs.len());
                }
            }
            assert_eq!(len, max_found, "seed {seed}");
            assert!(tt_number_at_least(&t, len));
            assert!(!tt_number_at_least(&t, len + 1));
        }
    }

    #[test]
    fn tt_number_respects_the_erdos_moser_bound_at_order_32() {
        for seed in 0..50 {
            let t = random_tournament(32, 4_000 + seed);
            assert!(tt_number(&t).0 >= 6);
        }
    }

    #[test]
    fn spine_decompositions_cover_classic_cases() {
        // Transitive tournaments admit the all-spine decomposition.
        for k in 1..=6 {
            assert_eq!(core_length(&transitive_tournament(k)).unwrap(), k);
        }
        // The cyclic triangle: common out-neighborhood of one vertex is its
        // successor, giving spine length 1.
        assert_eq!(core_length(&cyclic_triangle()).unwrap(), 1);
        // The all-ribs decomposition always exists.
        for seed in 0..10 {
            let t = random_tournament(6, 5_000 + seed);
            let all = spine_decompositions(&t).unwrap();
            assert!(!all.is_empty());
            for d in &all {
                // Literal condition check.
                let full = (1u128 << 6) - 1;
                let mut inter = full;
                for &v in &d.r_plus {
                    inter &= t.out_mask(v);
                }
                for &v in &d.r_minus {
                    inter &= in_mask(&t, v, full);
                }
                let spine_mask: u128 =
                    d.spine.iter().map(|&v| 1u128 << (v - 1)).sum();
                assert_eq!(inter, spine_mask);
                if !d.spine.is_empty() {
                    assert!(t.induced(&d.spine).unwrap().is_transitive());
                }
            }
        }
    }

    #[test]
    fn detection_of_transitive_patterns() {
        assert!(!detect_pattern(&transitive_tournament(3), &cyclic_triangle()));
        // Hosts of order 2^{k−1} always contain a transitive pattern.
        for seed in 0..10 {
            let host = random_tournament(16, 6_000 + seed);
            assert!(detect_pattern(&transitive_tournament(5), &host));
        }
    }

    #[test]
    fn detection_agrees_with_brute_force() {
        for seed in 0..150 {
            let k = 3 + (seed as usize % 3);
            let n = 6 + (seed as usize % 5);
            let pattern = random_tournament(k, 7_000 + seed);
            let host = random_tournament(n, 8_000 + seed);
            assert_eq!(
                detect_pattern(&pattern, &host),
                decide_indsub_to(&pattern, &host),
                "k={k} n={n} seed={seed}"
            );
        }
    }

    #[test]
    fn flipped_transitive_pattern_core_is_exactly_two() {
        // The order-6 transitive tournament with the pair {2,4} reversed.
        // The reversal pulls vertex 4 out of every long spine: any spine
        // containing 4 forces 2 into R₋, which no later vertex satisfies.
        // Exhaustive value (frozen): spine {5,6} below R₊ = {1,2,3,4}.
        let mut f6 = transitive_tournament(6);
        f6.flip_pair(2, 4);
        let core = core_length(&f6).unwrap();
        assert!(core <= 4);
        assert_eq!(core, 2);
        let best = best_spine_decomposition(&f6).unwrap();
        assert_eq!(best.spine, vec![5, 6]);
        assert_eq!(best.r_plus, vec![1, 2, 3, 4]);
        assert!(best.r_minus.is_empty());
        // The same family at other orders: spine k/2 − 1.
        for k in [4usize, 8] {
            let mut f = transitive_tournament(k);
            f.flip_pair(k / 2 - 1, k / 2 + 1);
            assert_eq!(core_length(&f).unwrap(), k / 2 - 1, "k={k}");
        }
    }

    #[test]
    fn pattern_larger_than_host_is_rejected() {
        assert!(!detect_pattern(
            &transitive_tournament(4),
            &cyclic_triangle()
        ));
    }
}
