//! Exact subset-enumeration counters and deciders.
//!
//! Every counter here is a definitional brute force: it enumerates candidate
//! vertex subsets of the host in lexicographic order, tests the defining
//! predicate exactly, and accumulates into an arbitrary-precision integer.
//! These routines are the ground truth that every faster identity, gadget,
//! and detection algorithm in the crate is checked against.
//!
//! Colored variants walk colorful tuples directly — one vertex from each
//! color class, classes in palette order, vertices ascending — instead of
//! filtering all `C(n, k)` subsets, which keeps hosts with many vertices per
//! class cheap. `decide_*` variants short-circuit at the first witness.
//!
//! Pattern isomorphism tests use a precomputed relabeling-orbit mask set for
//! patterns of order ≤ 8 (constant-time membership per candidate) and fall
//! back to refinement-guided backtracking above that.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::canon::{are_isomorphic, graph_orbit_masks, orbit_masks};
use crate::error::{Error, Result};
use crate::structures::{ColoredGraph, ColoredTournament, Graph, Tournament};

/// Visits all `k`-element subsets of `{1, …, n}` in lexicographic order.
/// The callback returns `false` to stop early; the function returns `true`
/// if enumeration ran to completion.
pub(crate) fn for_each_k_subset(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> bool,
) -> bool {
    if k > n {
        return true;
    }
    if k == 0 {
        return f(&[]);
    }
    let mut sel: Vec<usize> = (1..=k).collect();
    loop {
        if !f(&sel) {
            return false;
        }
        // Advance to the next subset in lexicographic order.
        let mut i = k;
        while i > 0 && sel[i - 1] == n - (k - i) {
            i -= 1;
        }
        if i == 0 {
            return true;
        }
        sel[i - 1] += 1;
        for j in i..k {
            sel[j] = sel[j - 1] + 1;
        }
    }
}

/// Visits every colorful tuple of the host: one vertex per color, colors in
/// palette order. The slice passed to the callback holds the chosen vertex
/// of color `c` at position `c − 1`. Returns `true` if enumeration was not
/// stopped early. If some color class is empty nothing is visited.
fn for_each_colorful_tuple(
    classes: &[Vec<usize>],
    mut f: impl FnMut(&[usize]) -> bool,
) -> bool {
    if classes.iter().any(|c| c.is_empty()) {
        return true;
    }
    let p = classes.len();
    let mut idx = vec![0usize; p];
    let mut tuple: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    loop {
        if !f(&tuple) {
            return false;
        }
        // Odometer advance over the class product.
        let mut pos = p;
        while pos > 0 {
            if idx[pos - 1] + 1 < classes[pos - 1].len() {
                idx[pos - 1] += 1;
                tuple[pos - 1] = classes[pos - 1][idx[pos - 1]];
                break;
            }
            idx[pos - 1] = 0;
            tuple[pos - 1] = classes[pos - 1][0];
            pos -= 1;
        }
        if pos == 0 {
            return true;
        }
    }
}

/// Vertices of each color, ascending, indexed by color − 1.
fn color_classes(colors: &[usize], palette: usize) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); palette];
    for (v0, &c) in colors.iter().enumerate() {
        classes[c - 1].push(v0 + 1);
    }
    classes
}

fn check_palette(pattern_order: usize, palette: usize) -> Result<()> {
    if pattern_order != palette {
        return Err(Error::PaletteMismatch {
            expected: pattern_order,
            found: palette,
        });
    }
    Ok(())
}

/// Isomorphism test against a fixed tournament pattern, specialized once per
/// counting call.
enum TournamentMatcher {
    /// Orbit bitmask membership; valid for pattern order ≤ 8.
    Orbit { order: usize, masks: HashSet<u128> },
    /// Degree-sequence prefilter plus backtracking isomorphism search.
    General {
        pattern: Tournament,
        degrees: Vec<usize>,
    },
}

impl TournamentMatcher {
    fn new(pattern: &Tournament) -> Self {
        if pattern.order() <= 8 {
            TournamentMatcher::Orbit {
                order: pattern.order(),
                masks: orbit_masks(pattern),
            }
        } else {
            TournamentMatcher::General {
                pattern: pattern.clone(),
                degrees: pattern.degree_sequence(),
            }
        }
    }

    fn matches(&self, candidate: &Tournament) -> bool {
        match self {
            TournamentMatcher::Orbit { order, masks } => {
                debug_assert_eq!(candidate.order(), *order);
                masks.contains(&candidate.mask_u128())
            }
            TournamentMatcher::General { pattern, degrees } => {
                candidate.degree_sequence() == *degrees && are_isomorphic(pattern, candidate)
            }
        }
    }
}

/// Same idea for graph patterns.
enum GraphMatcher {
    Orbit { masks: HashSet<u128> },
    General { pattern: Graph, degrees: Vec<usize> },
}

impl GraphMatcher {
    fn new(pattern: &Graph) -> Self {
        if pattern.order() <= 8 {
            GraphMatcher::Orbit {
                masks: graph_orbit_masks(pattern),
            }
        } else {
            let mut degrees: Vec<usize> = (1..=pattern.order()).map(|v| pattern.degree(v)).collect();
            degrees.sort_unstable();
            GraphMatcher::General {
                pattern: pattern.clone(),
                degrees,
            }
        }
    }

    fn matches(&self, candidate: &Graph) -> bool {
        match self {
            GraphMatcher::Orbit { masks } => masks.contains(&candidate.mask_u128()),
            GraphMatcher::General { pattern, degrees } => {
                let mut cd: Vec<usize> =
                    (1..=candidate.order()).map(|v| candidate.degree(v)).collect();
                cd.sort_unstable();
                cd == *degrees && are_isomorphic(pattern, candidate)
            }
        }
    }
}

/// Number of vertex subsets of the host tournament inducing a copy of the
/// pattern. Zero when the pattern is larger than the host.
pub fn count_indsub_to(pattern: &Tournament, host: &Tournament) -> BigUint {
    count_indsub_to_at_most(pattern, host, None)
}

/// True iff the host contains an induced copy of the pattern; stops at the
/// first witness.
pub fn decide_indsub_to(pattern: &Tournament, host: &Tournament) -> bool {
    !count_indsub_to_at_most(pattern, host, Some(1)).is_zero()
}

/// Shared enumeration with an optional early-exit cap on the count. With
/// `cap = Some(c)` the result saturates at `c` (useful for deciding and for
/// uniqueness checks that only distinguish 0, 1, many).
pub(crate) fn count_indsub_to_at_most(
    pattern: &Tournament,
    host: &Tournament,
    cap: Option<u64>,
) -> BigUint {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return BigUint::zero();
    }
    let matcher = TournamentMatcher::new(pattern);
    let mut count: u64 = 0;
    let mut big = BigUint::zero();
    for_each_k_subset(n, k, |a| {
        let induced = host.induced(a).expect("subset is valid");
        if matcher.matches(&induced) {
            count += 1;
            if count == u64::MAX {
                big += count;
                count = 0;
            }
            if let Some(c) = cap {
                return big.is_zero() && count < c;
            }
        }
        true
    });
    big + count
}

/// Number of colorful subsets of the host inducing a copy of the pattern.
/// The palette must equal the pattern order (each color used exactly once).
pub fn count_cf_indsub_to(pattern: &Tournament, host: &ColoredTournament) -> Result<BigUint> {
    check_palette(pattern.order(), host.palette())?;
    let matcher = TournamentMatcher::new(pattern);
    let classes = color_classes(host.coloring().colors(), host.palette());
    let mut count = BigUint::zero();
    for_each_colorful_tuple(&classes, |tuple| {
        let mut a = tuple.to_vec();
        a.sort_unstable();
        let induced = host.tournament().induced(&a).expect("tuple is valid");
        if matcher.matches(&induced) {
            count += 1u32;
        }
        true
    });
    Ok(count)
}

/// Decision variant of [`count_cf_indsub_to`].
pub fn decide_cf_indsub_to(pattern: &Tournament, host: &ColoredTournament) -> Result<bool> {
    check_palette(pattern.order(), host.palette())?;
    let matcher = TournamentMatcher::new(pattern);
    let classes = color_classes(host.coloring().colors(), host.palette());
    let mut found = false;
    for_each_colorful_tuple(&classes, |tuple| {
        let mut a = tuple.to_vec();
        a.sort_unstable();
        let induced = host.tournament().induced(&a).expect("tuple is valid");
        if matcher.matches(&induced) {
            found = true;
        }
        !found
    });
    Ok(found)
}

/// Number of color-prescribed copies of the labeled pattern graph: colorful
/// subsets whose vertex of color `a` and vertex of color `b` are adjacent for
/// every pattern edge `{a, b}`. The copy's edge set is determined by the
/// pattern, so copies are in bijection with qualifying subsets.
pub fn count_cp_sub(pattern: &Graph, host: &ColoredGraph) -> Result<BigUint> {
    check_palette(pattern.order(), host.palette())?;
    let edges = pattern.edge_list();
    let classes = color_classes(host.coloring().colors(), host.palette());
    let mut count = BigUint::zero();
    for_each_colorful_tuple(&classes, |tuple| {
        if edges
            .iter()
            .all(|&(a, b)| host.graph().adjacent(tuple[a - 1], tuple[b - 1]))
        {
            count += 1u32;
        }
        true
    });
    Ok(count)
}

/// Decision variant of [`count_cp_sub`].
pub fn decide_cp_sub(pattern: &Graph, host: &ColoredGraph) -> Result<bool> {
    check_palette(pattern.order(), host.palette())?;
    let edges = pattern.edge_list();
    let classes = color_classes(host.coloring().colors(), host.palette());
    let mut found = false;
    for_each_colorful_tuple(&classes, |tuple| {
        if edges
            .iter()
            .all(|&(a, b)| host.graph().adjacent(tuple[a - 1], tuple[b - 1]))
        {
            found = true;
        }
        !found
    });
    Ok(found)
}

/// Number of colorful subgraph copies of the pattern: pairs `(A, S)` with
/// `A` colorful, `S` a subset of the host edges inside `A`, and `(A, S)`
/// isomorphic to the pattern as an unlabeled graph.
pub fn count_cf_sub(pattern: &Graph, host: &ColoredGraph) -> Result<BigUint> {
    let mut count = BigUint::zero();
    run_cf_sub(pattern, host, |c| {
        count += c;
        true
    })?;
    Ok(count)
}

/// Decision variant of [`count_cf_sub`].
pub fn decide_cf_sub(pattern: &Graph, host: &ColoredGraph) -> Result<bool> {
    let mut found = false;
    run_cf_sub(pattern, host, |_| {
        found = true;
        false
    })?;
    Ok(found)
}

/// Walks colorful subsets and reports, per subset, how many edge subsets of
/// the induced graph form an unlabeled copy of the pattern. The callback
/// receives each nonzero per-subset count and may stop enumeration.
fn run_cf_sub(
    pattern: &Graph,
    host: &ColoredGraph,
    mut on_count: impl FnMut(u64) -> bool,
) -> Result<()> {
    check_palette(pattern.order(), host.palette())?;
    let matcher = GraphMatcher::new(pattern);
    let want_edges = pattern.edge_count();
    let classes = color_classes(host.coloring().colors(), host.palette());
    let k = pattern.order();
    for_each_colorful_tuple(&classes, |tuple| {
        let mut a = tuple.to_vec();
        a.sort_unstable();
        let induced = host.graph().induced(&a).expect("tuple is valid");
        let present = induced.edge_list();
        if present.len() < want_edges {
            return true;
        }
        // Choose which present edges survive into the copy.
        let mut local = 0u64;
        let m = present.len();
        for_each_k_subset(m, want_edges, |pick| {
            let mut s = Graph::empty(k);
            for &e in pick {
                let (u, v) = present[e - 1];
                s.set_edge(u, v, true);
            }
            if matcher.matches(&s) {
                local += 1;
            }
            true
        });
        if local > 0 {
            return on_count(local);
        }
        true
    });
    Ok(())
}

/// Number of colorful subsets whose induced host graph equals the pattern
/// through the coloring: colors `a, b` adjacent in the subset iff `{a, b}`
/// is a pattern edge.
pub fn count_cp_indsub(pattern: &Graph, host: &ColoredGraph) -> Result<BigUint> {
    check_palette(pattern.order(), host.palette())?;
    let k = pattern.order();
    let classes = color_classes(host.coloring().colors(), host.palette());
    let mut count = BigUint::zero();
    for_each_colorful_tuple(&classes, |tuple| {
        let mut ok = true;
        'scan: for a in 1..=k {
            for b in a + 1..=k {
                if host.graph().adjacent(tuple[a - 1], tuple[b - 1]) != pattern.adjacent(a, b) {
                    ok = false;
                    break 'scan;
                }
            }
        }
        if ok {
            count += 1u32;
        }
        true
    });
    Ok(count)
}

/// Decision variant of [`count_cp_indsub`].
pub fn decide_cp_indsub(pattern: &Graph, host: &ColoredGraph) -> Result<bool> {
    check_palette(pattern.order(), host.palette())?;
    let k = pattern.order();
    let classes = color_classes(host.coloring().colors(), host.palette());
    let mut found = false;
    for_each_colorful_tuple(&classes, |tuple| {
        let ok = (1..=k).all(|a| {
            (a + 1..=k)
                .all(|b| host.graph().adjacent(tuple[a - 1], tuple[b - 1]) == pattern.adjacent(a, b))
        });
        if ok {
            found = true;
        }
        !found
    });
    Ok(found)
}

/// Number of colorful subsets inducing an unlabeled copy of the pattern.
pub fn count_cf_indsub(pattern: &Graph, host: &ColoredGraph) -> Result<BigUint> {
    check_palette(pattern.order(), host.palette())?;
    let matcher = GraphMatcher::new(pattern);
    let classes = color_classes(host.coloring().colors(), host.palette());
    let mut count = BigUint::zero();
    for_each_colorful_tuple(&classes, |tuple| {
        let mut a = tuple.to_vec();
        a.sort_unstable();
        let induced = host.graph().induced(&a).expect("tuple is valid");
        if matcher.matches(&induced) {
            count += 1u32;
        }
        true
    });
    Ok(count)
}

/// Decision variant of [`count_cf_indsub`].
pub fn decide_cf_indsub(pattern: &Graph, host: &ColoredGraph) -> Result<bool> {
    check_palette(pattern.order(), host.palette())?;
    let matcher = GraphMatcher::new(pattern);
    let classes = color_classes(host.coloring().colors(), host.palette());
    let mut found = false;
    for_each_colorful_tuple(&classes, |tuple| {
        let mut a = tuple.to_vec();
        a.sort_unstable();
        let induced = host.graph().induced(&a).expect("tuple is valid");
        if matcher.matches(&induced) {
            found = true;
        }
        !found
    });
    Ok(found)
}

/// Number of `k`-cliques in the host graph.
pub fn count_clique(k: usize, host: &Graph) -> BigUint {
    let n = host.order();
    if k > n {
        return BigUint::zero();
    }
    let mut count = BigUint::zero();
    for_each_k_subset(n, k, |a| {
        if is_clique(host, a) {
            count += 1u32;
        }
        true
    });
    count
}

/// True iff the host graph has a `k`-clique.
pub fn decide_clique(k: usize, host: &Graph) -> bool {
    let n = host.order();
    if k > n {
        return false;
    }
    let mut found = false;
    for_each_k_subset(n, k, |a| {
        if is_clique(host, a) {
            found = true;
        }
        !found
    });
    found
}

/// Number of colorful `k`-cliques; the palette must equal `k`.
pub fn count_cf_clique(k: usize, host: &ColoredGraph) -> Result<BigUint> {
    check_palette(k, host.palette())?;
    let classes = color_classes(host.coloring().colors(), host.palette());
    let mut count = BigUint::zero();
    for_each_colorful_tuple(&classes, |tuple| {
        if is_clique(host.graph(), tuple) {
            count += 1u32;
        }
        true
    });
    Ok(count)
}

/// Decision variant of [`count_cf_clique`].
pub fn decide_cf_clique(k: usize, host: &ColoredGraph) -> Result<bool> {
    check_palette(k, host.palette())?;
    let classes = color_classes(host.coloring().colors(), host.palette());
    let mut found = false;
    for_each_colorful_tuple(&classes, |tuple| {
        if is_clique(host.graph(), tuple) {
            found = true;
        }
        !found
    });
    Ok(found)
}

fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if !g.adjacent(u, v) {
                return false;
            }
        }
    }
    true
}
