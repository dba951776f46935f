//! The flip calculus and the alternating enumerator, plus the maximal
//! matching machinery that makes the anti-matching value computable without
//! subset sums, and structural checks (exact treewidth, clique minors) for
//! the graphs that carry nonzero enumerator values.
//!
//! For a tournament `T` and a graph `H` on the same vertices, `flip_along`
//! reverses exactly the pairs that are *not* edges of `H`. The alternating
//! enumerator of `H` with respect to `T` is the signed count, over all edge
//! subsets `H′ ⊆ H`, of those whose flip leaves the isomorphism type of `T`
//! unchanged:
//!
//! ```text
//! ae(T, H) = (−1)^{|E(H)|} · Σ_{H′ ⊆ H} (−1)^{|E(H′)|} · [T_{H′} ≅ T]
//! ```
//!
//! For order 1 there are no pairs and the value is 1 by convention (the
//! empty flip is the identity). The anti-matching — the complement of the
//! canonical maximal matching `{1,2}, {3,4}, …` — always has a nonzero
//! value, which [`alternating_enumerator_antimatching`] computes directly
//! from a sum over unordered maximal matchings instead of the `2^|E|`
//! subset sum.

use std::collections::BTreeSet;

use crate::canon::{automorphism_count, orbit_masks};
use crate::error::{Error, Result};
use crate::structures::{
    apply_permutation, for_each_permutation, symdiff_count, Graph, Permutation, Tournament,
};

/// Maximum order accepted by the subset-sum enumerator (`2^21` terms).
pub const NAIVE_ENUMERATOR_MAX_ORDER: usize = 7;

/// Maximum order for exhaustive support enumeration (`2^10` graphs).
pub const SUPPORT_MAX_ORDER: usize = 5;

/// Maximum order for exact treewidth (subset dynamic program).
pub const TREEWIDTH_MAX_ORDER: usize = 10;

/// Maximum order for the clique-minor search.
pub const CLIQUE_MINOR_MAX_ORDER: usize = 9;

fn check_orders(t: &Tournament, h: &Graph) -> Result<()> {
    if t.order() != h.order() {
        return Err(Error::OrderMismatch {
            expected: t.order(),
            found: h.order(),
        });
    }
    Ok(())
}

/// Reverses every pair of `t` that is not an edge of `h`. Involution:
/// applying it twice with the same `h` restores `t`.
pub fn flip_along(t: &Tournament, h: &Graph) -> Result<Tournament> {
    check_orders(t, h)?;
    let k = t.order();
    let mut out = t.clone();
    for i in 1..=k {
        for j in i + 1..=k {
            if !h.adjacent(i, j) {
                out.flip_pair(i, j);
            }
        }
    }
    Ok(out)
}

/// The alternating enumerator by direct subset summation, capped at order
/// [`NAIVE_ENUMERATOR_MAX_ORDER`]. Edge subsets are walked in Gray-code
/// order so each step flips a single pair of the working tournament; the
/// isomorphism test is orbit-mask membership.
pub fn alternating_enumerator_naive(t: &Tournament, h: &Graph) -> Result<i64> {
    check_orders(t, h)?;
    let k = t.order();
    if k > NAIVE_ENUMERATOR_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "alternating enumerator subset sum",
            limit: NAIVE_ENUMERATOR_MAX_ORDER,
            requested: k,
        });
    }
    let edges = h.edge_list();
    let m = edges.len();
    let orbit = orbit_masks(t);
    // Start at H′ = ∅: every pair flipped.
    let mut work = flip_along(t, &Graph::empty(k))?;
    let mut sum: i64 = 0;
    let mut sign: i64 = 1; // (−1)^{|E(H′)|}, starts at |E(H′)| = 0.
    let mut code: u64 = 0;
    for step in 0..(1u64 << m) {
        if orbit.contains(&work.mask_u128()) {
            sum += sign;
        }
        if step + 1 == 1 << m {
            break;
        }
        // Gray-code successor differs in exactly one edge; adding or
        // removing edge e from H′ re-flips exactly that pair.
        let next = (step + 1) ^ ((step + 1) >> 1);
        let toggled = (code ^ next).trailing_zeros() as usize;
        code = next;
        let (u, v) = edges[toggled];
        work.flip_pair(u, v);
        sign = -sign;
    }
    let prefactor = if m % 2 == 0 { 1 } else { -1 };
    Ok(prefactor * sum)
}

/// A maximal matching on `{1, …, k}` with a significant pair order. Pairs
/// are stored `(u, v)` with `u < v`; maximality means `⌊k/2⌋` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    order: usize,
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates that `pairs` is a maximal matching on `1..=order`.
    pub fn new(order: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.len() != order / 2 {
            return Err(Error::NotMaximalMatching(format!(
                "{} pairs given, {} required for order {order}",
                pairs.len(),
                order / 2
            )));
        }
        let mut used = vec![false; order + 1];
        let mut normalized = Vec::with_capacity(pairs.len());
        for &(a, b) in &pairs {
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if u == 0 || v > order || u == v {
                return Err(Error::NotMaximalMatching(format!(
                    "pair ({a},{b}) invalid on 1..={order}"
                )));
            }
            if used[u] || used[v] {
                return Err(Error::NotMaximalMatching(format!(
                    "pair ({a},{b}) reuses a matched vertex"
                )));
            }
            used[u] = true;
            used[v] = true;
            normalized.push((u, v));
        }
        Ok(Matching {
            order,
            pairs: normalized,
        })
    }

    /// Host order `k`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The pairs in their significant order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The unmatched vertex for odd order, `None` for even.
    pub fn unmatched(&self) -> Option<usize> {
        if self.order % 2 == 0 {
            return None;
        }
        let mut used = vec![false; self.order + 1];
        for &(u, v) in &self.pairs {
            used[u] = true;
            used[v] = true;
        }
        (1..=self.order).find(|&v| !used[v])
    }
}

/// All maximal matchings on `{1, …, k}`, one representative per underlying
/// edge set: pairs sorted by smaller endpoint, matchings in lexicographic
/// order. There are `(k−1)!!` for even `k` and `k!!` for odd `k` — always
/// an odd number. Requires `k ≥ 2`.
pub fn enumerate_unordered_maximal_matchings(k: usize) -> Result<Vec<Matching>> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "maximal matchings need order >= 2, got {k}"
        )));
    }
    let mut set: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut used = vec![false; k + 1];
    let mut current: Vec<(usize, usize)> = Vec::with_capacity(k / 2);
    // Pair the smallest unmatched vertex with every possibility; for odd k
    // one vertex stays unmatched, handled by allowing exactly one skip.
    fn recurse(
        k: usize,
        skips_left: usize,
        used: &mut Vec<bool>,
        current: &mut Vec<(usize, usize)>,
        set: &mut BTreeSet<Vec<(usize, usize)>>,
    ) {
        let Some(u) = (1..=k).find(|&v| !used[v]) else {
            let mut rep = current.clone();
            rep.sort_unstable();
            set.insert(rep);
            return;
        };
        used[u] = true;
        if skips_left > 0 {
            recurse(k, skips_left - 1, used, current, set);
        }
        for v in u + 1..=k {
            if used[v] {
                continue;
            }
            used[v] = true;
            current.push((u, v));
            recurse(k, skips_left, used, current, set);
            current.pop();
            used[v] = false;
        }
        used[u] = false;
    }
    recurse(k, k % 2, &mut used, &mut current, &mut set);
    set.into_iter()
        .map(|pairs| Matching::new(k, pairs))
        .collect()
}

/// The permutation `σ_M` induced by an ordered maximal matching: the `i`-th
/// pair's endpoints map onto `{2i−1, 2i}`, oriented so that the relabeled
/// tournament disagrees with `t` on that pair; for odd order the unmatched
/// vertex maps to `k`. Every pair of δ the matching therefore lands in the
/// symmetric difference of `t` and `t^{σ_M}`.
pub fn matching_permutation(m: &Matching, t: &Tournament) -> Result<Permutation> {
    let k = t.order();
    if m.order() != k {
        return Err(Error::OrderMismatch {
            expected: k,
            found: m.order(),
        });
    }
    let mut image = vec![0usize; k];
    for (i, &(u, v)) in m.pairs().iter().enumerate() {
        let lo = 2 * i + 1;
        let hi = 2 * i + 2;
        let target_orient = t.orients(lo, hi);
        // Choose the endpoint assignment whose preimage orientation is the
        // opposite of t's orientation on {lo, hi}.
        if t.orients(u, v) == target_orient {
            image[u - 1] = hi;
            image[v - 1] = lo;
        } else {
            image[u - 1] = lo;
            image[v - 1] = hi;
        }
    }
    if k % 2 == 1 {
        let unmatched = m
            .unmatched()
            .ok_or(Error::Internal("odd-order matching lacks unmatched vertex"))?;
        image[unmatched - 1] = k;
    }
    Permutation::from_image(image)
}

/// The signed matching sum `X = (−1)^{⌊k/2⌋} · Σ_{M} (−1)^{|Δ(T, T^{σ_M})|}`
/// over unordered maximal matchings `M`. The number of maximal matchings is
/// odd and the terms are `±1`, so `X` is always odd — in particular nonzero.
pub fn antimatching_signed_sum(t: &Tournament) -> Result<i64> {
    let k = t.order();
    let matchings = enumerate_unordered_maximal_matchings(k)?;
    let mut x: i64 = 0;
    for m in &matchings {
        let sigma = matching_permutation(m, t)?;
        let relabeled = apply_permutation(t, &sigma)?;
        let delta = symdiff_count(t, &relabeled)?;
        x += if delta % 2 == 0 { 1 } else { -1 };
    }
    if (k / 2) % 2 == 1 {
        x = -x;
    }
    debug_assert!(x.rem_euclid(2) == 1, "matching sum must be odd, got {x}");
    Ok(x)
}

/// The alternating enumerator of the anti-matching, computed from its
/// closed form `X · (⌊k/2⌋)! / |Aut(T)|` where `X` is the
/// [`antimatching_signed_sum`]. `X` is odd, so the value is never zero. A
/// division remainder indicates an implementation bug and is reported as an
/// error.
pub fn alternating_enumerator_antimatching(t: &Tournament) -> Result<i64> {
    let k = t.order();
    let x = antimatching_signed_sum(t)?;
    let half_factorial: i64 = (1..=(k / 2) as i64).product();
    let numerator = x * half_factorial;
    let aut = automorphism_count(t) as i64;
    if numerator % aut != 0 {
        return Err(Error::Divisibility {
            context: "anti-matching enumerator",
            numerator,
            divisor: aut,
        });
    }
    Ok(numerator / aut)
}

/// All labeled graphs on the pattern's vertices with nonzero alternating
/// enumerator, in ascending edge-bitmask order. Exhaustive over all
/// `2^C(k,2)` graphs, so capped at order [`SUPPORT_MAX_ORDER`].
pub fn nonvanishing_support(t: &Tournament) -> Result<Vec<Graph>> {
    let k = t.order();
    if k > SUPPORT_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "nonvanishing support enumeration",
            limit: SUPPORT_MAX_ORDER,
            requested: k,
        });
    }
    let npairs = k * (k - 1) / 2;
    let mut out = Vec::new();
    for mask in 0u128..(1u128 << npairs) {
        let h = Graph::from_mask_u128(k, mask);
        if alternating_enumerator_naive(t, &h)? != 0 {
            out.push(h);
        }
    }
    Ok(out)
}

/// `|Aut(T)| · ae(T, H)` computed from the labeled-equality double sum over
/// edge subsets and permutations, divided back down. Cross-oracle for the
/// subset-sum form; practical only for small orders (`k! · 2^|E|` work).
pub fn alternating_enumerator_permutation_form(t: &Tournament, h: &Graph) -> Result<i64> {
    check_orders(t, h)?;
    let k = t.order();
    if k > 5 {
        return Err(Error::CapExceeded {
            what: "permutation-form enumerator",
            limit: 5,
            requested: k,
        });
    }
    let edges = h.edge_list();
    let mut total: i64 = 0;
    for mask in 0u64..(1 << edges.len()) {
        let mut sub = Graph::empty(k);
        for (e, &(u, v)) in edges.iter().enumerate() {
            if mask >> e & 1 == 1 {
                sub.set_edge(u, v, true);
            }
        }
        let flipped = flip_along(t, &sub)?;
        let sign: i64 = if (mask.count_ones() as usize) % 2 == 0 {
            1
        } else {
            -1
        };
        for_each_permutation(k, |img| {
            let sigma = Permutation::from_image(img.to_vec()).expect("valid image");
            let relabeled = apply_permutation(t, &sigma).expect("orders match");
            if relabeled == flipped {
                total += sign;
            }
            true
        });
    }
    if edges.len() % 2 == 1 {
        total = -total;
    }
    divide_by_aut(t, total, "permutation-form enumerator")
}

/// `|Aut(T)| · ae(T, complement(H))` computed by summing the symmetric
/// difference parity over exactly the permutations whose relabeling
/// disagrees with `t` on every edge of `h`, divided back down.
pub fn alternating_enumerator_complement_form(t: &Tournament, h: &Graph) -> Result<i64> {
    check_orders(t, h)?;
    let k = t.order();
    if k > 5 {
        return Err(Error::CapExceeded {
            what: "complement-form enumerator",
            limit: 5,
            requested: k,
        });
    }
    let edges = h.edge_list();
    let mut total: i64 = 0;
    for_each_permutation(k, |img| {
        let sigma = Permutation::from_image(img.to_vec()).expect("valid image");
        let relabeled = apply_permutation(t, &sigma).expect("orders match");
        let covers = edges
            .iter()
            .all(|&(u, v)| t.orients(u, v) != relabeled.orients(u, v));
        if covers {
            let delta = symdiff_count(t, &relabeled).expect("orders match");
            total += if delta % 2 == 0 { 1 } else { -1 };
        }
        true
    });
    if edges.len() % 2 == 1 {
        total = -total;
    }
    divide_by_aut(t, total, "complement-form enumerator")
}

fn divide_by_aut(t: &Tournament, numerator: i64, context: &'static str) -> Result<i64> {
    let aut = automorphism_count(t) as i64;
    if numerator % aut != 0 {
        return Err(Error::Divisibility {
            context,
            numerator,
            divisor: aut,
        });
    }
    Ok(numerator / aut)
}

/// Exact treewidth by dynamic programming over elimination sets, capped at
/// order [`TREEWIDTH_MAX_ORDER`]. `f(S)` is the least width achievable when
/// eliminating exactly the vertices of `S`; a vertex's elimination cost is
/// the number of vertices outside reachable through the eliminated set.
pub fn treewidth_exact(h: &Graph) -> Result<usize> {
    let n = h.order();
    if n > TREEWIDTH_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "exact treewidth",
            limit: TREEWIDTH_MAX_ORDER,
            requested: n,
        });
    }
    let nb: Vec<u32> = (1..=n).map(|v| h.neighbor_mask(v) as u32).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    // Cost of eliminating v after the vertices of `s`: neighbors of the
    // connected component of v in s ∪ {v}, outside s ∪ {v}.
    let cost = |s: u32, v: usize| -> usize {
        let vbit = 1u32 << v;
        let mut comp = vbit;
        let mut frontier = vbit;
        while frontier != 0 {
            let mut grow = 0u32;
            let mut f = frontier;
            while f != 0 {
                let w = f.trailing_zeros() as usize;
                f &= f - 1;
                grow |= nb[w] & s;
            }
            frontier = grow & !comp;
            comp |= frontier;
        }
        let mut reach = 0u32;
        let mut c = comp;
        while c != 0 {
            let w = c.trailing_zeros() as usize;
            c &= c - 1;
            reach |= nb[w];
        }
        (reach & !(s | vbit)).count_ones() as usize
    };
    let mut f = vec![usize::MAX; 1usize << n];
    f[0] = 0;
    for s in 1u32..=full {
        let mut best = usize::MAX;
        let mut iter = s;
        while iter != 0 {
            let v = iter.trailing_zeros() as usize;
            iter &= iter - 1;
            let prev = s & !(1 << v);
            let width = f[prev as usize].max(cost(prev, v));
            best = best.min(width);
        }
        f[s as usize] = best;
    }
    Ok(f[full as usize])
}

/// True iff the complete graph on `t` vertices is a minor of `h`: there are
/// `t` disjoint, individually connected vertex sets with an edge between
/// every two of them. Exhaustive over branch-set assignments with
/// first-open symmetry breaking; capped at order [`CLIQUE_MINOR_MAX_ORDER`].
pub fn has_clique_minor(h: &Graph, t: usize) -> Result<bool> {
    let n = h.order();
    if n > CLIQUE_MINOR_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "clique minor search",
            limit: CLIQUE_MINOR_MAX_ORDER,
            requested: n,
        });
    }
    if t == 0 {
        return Ok(true);
    }
    if t > n {
        return Ok(false);
    }
    if t == 1 {
        return Ok(true);
    }
    if h.edge_count() < t * (t - 1) / 2 {
        return Ok(false);
    }
    let nb: Vec<u32> = (1..=n).map(|v| h.neighbor_mask(v) as u32).collect();
    let connected = |set: u32| -> bool {
        let start = 1u32 << set.trailing_zeros();
        let mut comp = start;
        loop {
            let mut grow = comp;
            let mut c = comp;
            while c != 0 {
                let w = c.trailing_zeros() as usize;
                c &= c - 1;
                grow |= nb[w] & set;
            }
            if grow == comp {
                break;
            }
            comp = grow;
        }
        comp == set
    };
    let touches = |a: u32, b: u32| -> bool {
        let mut c = a;
        while c != 0 {
            let w = c.trailing_zeros() as usize;
            c &= c - 1;
            if nb[w] & b != 0 {
                return true;
            }
        }
        false
    };
    // Assign each vertex to a branch set or leave it unused; a vertex may
    // only open branch set `i` when sets `0..i` are already open, removing
    // permutations of identical assignments.
    fn assign(
        v: usize,
        n: usize,
        t: usize,
        sets: &mut Vec<u32>,
        nbconn: &dyn Fn(u32) -> bool,
        nbtouch: &dyn Fn(u32, u32) -> bool,
    ) -> bool {
        if sets.len() == t {
            let ok = sets.iter().all(|&s| nbconn(s))
                && (0..t).all(|i| (i + 1..t).all(|j| nbtouch(sets[i], sets[j])));
            if ok {
                return true;
            }
        }
        if v == n {
            return false;
        }
        // Not enough vertices left to open the remaining sets.
        if sets.len() + (n - v) < t {
            return false;
        }
        let bit = 1u32 << v;
        for i in 0..sets.len() {
            sets[i] |= bit;
            if assign(v + 1, n, t, sets, nbconn, nbtouch) {
                return true;
            }
            sets[i] &= !bit;
        }
        if sets.len() < t {
            sets.push(bit);
            if assign(v + 1, n, t, sets, nbconn, nbtouch) {
                return true;
            }
            sets.pop();
        }
        // Leave v unused.
        assign(v + 1, n, t, sets, nbconn, nbtouch)
    }
    let mut sets: Vec<u32> = Vec::with_capacity(t);
    Ok(assign(0, n, t, &mut sets, &connected, &touches))
}
