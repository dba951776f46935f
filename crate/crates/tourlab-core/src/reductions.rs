//! Gadget constructions and basis transforms connecting the counting
//! problems to each other.
//!
//! The central objects are the *biased tournament* (orient a colored graph's
//! vertex pairs to agree with a reference tournament on edges and disagree
//! on non-edges), its inverse view the *pied graph*, and the expansion of
//! colorful induced-copy counts as integer linear combinations of
//! color-prescribed subgraph counts, with the alternating enumerator
//! supplying the coefficients. On top of those sit the black-box term
//! extractor (inclusion–exclusion over edge-restricted hosts), the
//! signature gadget reducing colorful clique counting to colorful induced
//! pattern counting, the layered clique color gadget, the color-removal
//! inclusion–exclusion, and the symmetrization identity tying
//! color-prescribed to colorful subgraph counts.
//!
//! Same-color vertex pairs, whose orientation is semantically irrelevant,
//! are always oriented ascending for bit-exact reproducibility.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::canon::{automorphism_count, orbit_masks};
use crate::counting::{count_cp_sub, count_indsub_to};
use crate::enumerator::{alternating_enumerator_naive, flip_along};
use crate::error::{Error, Result};
use crate::signatures::is_signature;
use crate::structures::{
    for_each_permutation, ColoredGraph, ColoredTournament, Coloring, Graph, Permutation,
    Tournament,
};

/// Maximum pattern order for the colorful-count basis expansions
/// (exhaustive over all `2^C(k,2)` labeled graphs).
pub const INDSUB_BASIS_MAX_ORDER: usize = 6;

/// Maximum pattern order for the enumerator-weighted basis.
pub const CPSUB_BASIS_MAX_ORDER: usize = 5;

/// An integer linear combination of labeled graphs sharing one order.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCombination {
    order: usize,
    terms: BTreeMap<u128, i64>,
}

impl LinearCombination {
    /// An empty combination over graphs of the given order (≤ 16).
    pub fn new(order: usize) -> Self {
        assert!(order <= 16, "linear combinations use mask keys");
        LinearCombination {
            order,
            terms: BTreeMap::new(),
        }
    }

    /// Common order of all term graphs.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True iff the combination is identically zero.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · g`, merging with an existing term and dropping zeros.
    pub fn add_term(&mut self, g: &Graph, coeff: i64) -> Result<()> {
        if g.order() != self.order {
            return Err(Error::OrderMismatch {
                expected: self.order,
                found: g.order(),
            });
        }
        if coeff == 0 {
            return Ok(());
        }
        let key = g.mask_u128();
        let entry = self.terms.entry(key).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&key);
        }
        Ok(())
    }

    /// The coefficient of a graph (0 when absent).
    pub fn coefficient(&self, g: &Graph) -> i64 {
        if g.order() != self.order {
            return 0;
        }
        self.terms.get(&g.mask_u128()).copied().unwrap_or(0)
    }

    /// Iterates terms in ascending edge-mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Graph, i64)> + '_ {
        self.terms
            .iter()
            .map(move |(&mask, &coeff)| (Graph::from_mask_u128(self.order, mask), coeff))
    }

    /// Adds every term of `other`, scaled by `factor`.
    pub fn add_scaled(&mut self, other: &LinearCombination, factor: i64) -> Result<()> {
        for (g, coeff) in other.terms() {
            self.add_term(&g, coeff * factor)?;
        }
        Ok(())
    }

    /// Evaluates the combination with a per-term counter.
    pub fn evaluate(
        &self,
        mut count: impl FnMut(&Graph) -> Result<BigUint>,
    ) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (g, coeff) in self.terms() {
            total += BigInt::from(coeff) * BigInt::from(count(&g)?);
        }
        Ok(total)
    }
}

fn check_palette(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::PaletteMismatch { expected, found });
    }
    Ok(())
}

/// Orients the vertex pairs of a colored graph against a reference
/// tournament on the palette: graph edges agree with the reference on
/// their color pair, non-edges disagree, and same-color pairs run
/// ascending. The palette must equal the reference order.
pub fn biased_tournament(g: &ColoredGraph, t: &Tournament) -> Result<ColoredTournament> {
    check_palette(t.order(), g.palette())?;
    let colors = g.coloring().colors();
    let tournament = Tournament::from_fn(g.order(), |x, y| {
        let (a, b) = (colors[x - 1], colors[y - 1]);
        if a == b {
            true // ascending
        } else if g.graph().adjacent(x, y) {
            t.orients(a, b)
        } else {
            !t.orients(a, b)
        }
    });
    ColoredTournament::new(tournament, g.coloring().clone())
}

/// The inverse view: given a colored tournament, the graph whose edges are
/// exactly the inter-color pairs oriented in agreement with the reference
/// tournament on their colors.
pub fn pied_graph(g: &ColoredTournament, t: &Tournament) -> Result<ColoredGraph> {
    check_palette(t.order(), g.palette())?;
    let colors = g.coloring().colors();
    let mut graph = Graph::empty(g.order());
    for x in 1..=g.order() {
        for y in x + 1..=g.order() {
            let (a, b) = (colors[x - 1], colors[y - 1]);
            if a != b && g.tournament().orients(x, y) == t.orients(a, b) {
                graph.set_edge(x, y, true);
            }
        }
    }
    ColoredGraph::new(graph, g.coloring().clone())
}

/// Counts colorful induced copies of the pattern using only *uncolored*
/// induced-copy counts, by inclusion–exclusion over color subsets: with
/// `G_S` the host restricted to vertices colored inside `S`,
///
/// ```text
/// cf-count(T, G) = Σ_{S ⊆ [k]} (−1)^{k−|S|} · count(T, G_S).
/// ```
///
/// Note the sign is `(−1)^{k−|S|}`, i.e. the parity of the *removed*
/// colors: restricting to `S` discards copies that use any color outside
/// `S`, and a copy using exactly the color set `C` survives in all hosts
/// `G_S` with `C ⊆ S`, so the signs cancel except for full-palette copies.
/// (A sign of `(−1)^{|S|}` would negate the answer for odd `k`; the `k = 1`
/// case, where the colorful count is just the host order, pins the
/// convention.)
pub fn cf_from_uncolored(t: &Tournament, g: &ColoredTournament) -> Result<BigUint> {
    let k = t.order();
    check_palette(k, g.palette())?;
    let classes = g.coloring().classes();
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << k) {
        let mut vertices: Vec<usize> = Vec::new();
        for (c, class) in classes.iter().enumerate() {
            if mask >> c & 1 == 1 {
                vertices.extend_from_slice(class);
            }
        }
        if vertices.len() < k {
            continue; // too small to host a copy, contributes 0
        }
        vertices.sort_unstable();
        let host = g.tournament().induced(&vertices).expect("nonempty");
        let removed = k - mask.count_ones() as usize;
        let count = BigInt::from(count_indsub_to(t, &host));
        if removed % 2 == 0 {
            total += count;
        } else {
            total -= count;
        }
    }
    if total.is_negative() {
        return Err(Error::Internal(
            "color-removal inclusion-exclusion produced a negative count",
        ));
    }
    Ok(total.to_biguint().expect("checked nonnegative"))
}

/// Expands an exact-match (induced) color-prescribed count in the subgraph
/// basis: terms `(H′, (−1)^{|E(H′)|−|E(H)|})` over all edge-supergraphs
/// `H′ ⊇ H`.
pub fn expand_cpindsub_in_cpsub_basis(h: &Graph) -> LinearCombination {
    let k = h.order();
    let npairs = k * (k - 1) / 2;
    let base = h.mask_u128();
    let free = ((1u128 << npairs) - 1) & !base;
    let mut lc = LinearCombination::new(k);
    // Subsets of the free pair positions, via the standard submask walk.
    let mut sub: u128 = 0;
    loop {
        let coeff = if (sub.count_ones() as usize) % 2 == 0 {
            1
        } else {
            -1
        };
        lc.add_term(&Graph::from_mask_u128(k, base | sub), coeff)
            .expect("orders agree");
        if sub == free {
            break;
        }
        sub = (sub.wrapping_sub(free)) & free;
    }
    lc
}

/// The colorful induced-copy count of a tournament pattern over a biased
/// host, in the exact-match basis: unit terms for every labeled graph `H`
/// whose flip leaves the pattern's isomorphism type unchanged.
pub fn indsub_basis_of_cf(t: &Tournament) -> Result<LinearCombination> {
    let k = t.order();
    if k > INDSUB_BASIS_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "induced basis expansion",
            limit: INDSUB_BASIS_MAX_ORDER,
            requested: k,
        });
    }
    let orbit = orbit_masks(t);
    let npairs = k * (k - 1) / 2;
    let mut lc = LinearCombination::new(k);
    for mask in 0u128..(1u128 << npairs) {
        let h = Graph::from_mask_u128(k, mask);
        let flipped = flip_along(t, &h).expect("orders agree");
        if orbit.contains(&flipped.mask_u128()) {
            lc.add_term(&h, 1).expect("orders agree");
        }
    }
    Ok(lc)
}

/// The same count in the subgraph basis: terms `(H, ae(T, H))` over all
/// labeled graphs with nonzero alternating enumerator. Equals the
/// composition of [`indsub_basis_of_cf`] with
/// [`expand_cpindsub_in_cpsub_basis`].
pub fn cpsub_basis_of_cf(t: &Tournament) -> Result<LinearCombination> {
    let k = t.order();
    if k > CPSUB_BASIS_MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "enumerator basis expansion",
            limit: CPSUB_BASIS_MAX_ORDER,
            requested: k,
        });
    }
    let npairs = k * (k - 1) / 2;
    let mut lc = LinearCombination::new(k);
    for mask in 0u128..(1u128 << npairs) {
        let h = Graph::from_mask_u128(k, mask);
        let coeff = alternating_enumerator_naive(t, &h)?;
        lc.add_term(&h, coeff)?;
    }
    Ok(lc)
}

/// Deletes every host edge whose color pair is not an edge of the pattern
/// `F` (same-color edges always go). Subgraph counts of patterns with any
/// edge outside `F` vanish on the result.
pub fn restrict_by_pattern(g: &ColoredGraph, f: &Graph) -> Result<ColoredGraph> {
    check_palette(f.order(), g.palette())?;
    let colors = g.coloring().colors();
    let mut graph = g.graph().clone();
    for x in 1..=g.order() {
        for y in x + 1..=g.order() {
            if !graph.adjacent(x, y) {
                continue;
            }
            let (a, b) = (colors[x - 1], colors[y - 1]);
            if a == b || !f.adjacent(a, b) {
                graph.set_edge(x, y, false);
            }
        }
    }
    ColoredGraph::new(graph, g.coloring().clone())
}

/// Extracts one term from a black-box oracle: if `f` computes some integer
/// linear combination of color-prescribed subgraph counts over order-`k`
/// patterns, then
///
/// ```text
/// Σ_{F ⊆ H} (−1)^{|E(H)|−|E(F)|} · f(G_F)  =  α_H · cp-count(H, G),
/// ```
///
/// because a term `H′` survives the alternating sum only when
/// `H′ ⊆ F ⊆ H` forces `H′ = H`. Calls the oracle `2^{|E(H)|}` times.
pub fn extract_term(
    mut f: impl FnMut(&ColoredGraph) -> BigInt,
    h: &Graph,
    g: &ColoredGraph,
) -> Result<BigInt> {
    check_palette(h.order(), g.palette())?;
    let edges = h.edge_list();
    let m = edges.len();
    let mut total = BigInt::zero();
    for mask in 0u64..(1 << m) {
        let mut sub = Graph::empty(h.order());
        for (e, &(u, v)) in edges.iter().enumerate() {
            if mask >> e & 1 == 1 {
                sub.set_edge(u, v, true);
            }
        }
        let restricted = restrict_by_pattern(g, &sub)?;
        let value = f(&restricted);
        if (m - mask.count_ones() as usize) % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    Ok(total)
}

/// Builds the signature gadget: given a pattern `T` of order `k`, a
/// signature `R` of size `r`, and a `(k−r)`-colored host graph `G`, returns
/// a colored tournament of order `n + r` whose colorful induced copies of
/// `T` are in bijection with the colorful `(k−r)`-cliques of `G`.
///
/// Construction: relabel `T` so the signature occupies `1..=r` (both parts
/// in ascending order); prepend `r` fresh vertices colored `1..=r`; give
/// every `G` vertex the color `r + (its color)`; orient `G`-vertex pairs
/// like the biased tournament against the relabeled pattern, and every pair
/// touching a fresh vertex exactly like the relabeled pattern on its
/// colors. The signature property makes disagreements outside the fresh
/// block fatal to isomorphism, which forces clique edges.
pub fn signature_gadget(
    t: &Tournament,
    r: &[usize],
    g: &ColoredGraph,
) -> Result<ColoredTournament> {
    let k = t.order();
    let mut r_sorted = r.to_vec();
    r_sorted.sort_unstable();
    r_sorted.dedup();
    if r_sorted.len() != r.len() {
        return Err(Error::DuplicateVertex {
            vertex: r_sorted[0],
        });
    }
    let rr = r_sorted.len();
    check_palette(k - rr, g.palette())?;
    if !is_signature(t, &r_sorted)? {
        return Err(Error::NotASignature);
    }
    // Relabel so the signature is 1..=r and the rest is r+1..=k.
    let mut image = vec![0usize; k];
    for (i, &v) in r_sorted.iter().enumerate() {
        image[v - 1] = i + 1;
    }
    let rest: Vec<usize> = (1..=k).filter(|v| !r_sorted.contains(v)).collect();
    for (j, &v) in rest.iter().enumerate() {
        image[v - 1] = rr + j + 1;
    }
    let relabeled = crate::structures::apply_permutation(
        t,
        &Permutation::from_image(image).expect("bijection by construction"),
    )?;
    let n = g.order();
    // Gadget colors: fresh vertices 1..=r get their own color; G vertices
    // shift up by r.
    let mut colors = Vec::with_capacity(n + rr);
    colors.extend(1..=rr);
    colors.extend(g.coloring().colors().iter().map(|&c| c + rr));
    let coloring = Coloring::new(k, colors).expect("colors within palette");
    let host_colors = coloring.colors().to_vec();
    let tournament = Tournament::from_fn(n + rr, |x, y| {
        let (a, b) = (host_colors[x - 1], host_colors[y - 1]);
        if x <= rr || y <= rr {
            // Pair touching the fresh block: copy the pattern on colors.
            relabeled.orients(a, b)
        } else if a == b {
            true // ascending
        } else if g.graph().adjacent(x - rr, y - rr) {
            relabeled.orients(a, b)
        } else {
            !relabeled.orients(a, b)
        }
    });
    ColoredTournament::new(tournament, coloring)
}

/// The layered clique color gadget: `k` layers of the host's vertices,
/// layer `i` colored `i`, with `(u, i)` adjacent to `(v, j)` iff `u < v`,
/// `i < j`, and `{u, v}` is a host edge. Colorful `k`-cliques of the
/// gadget correspond to ascending `k`-cliques of the host, so the plain
/// `k`-clique count of the host equals the colorful `k`-clique count of
/// the gadget. Vertex `(u, i)` receives the id `(i−1)·n + u`.
pub fn clique_color_gadget(g: &Graph, k: usize) -> ColoredGraph {
    assert!(k >= 1, "the gadget needs at least one layer");
    let n = g.order();
    let decode = |id: usize| -> (usize, usize) {
        let i = (id - 1) / n + 1;
        let u = (id - 1) % n + 1;
        (u, i)
    };
    let mut graph = Graph::empty(k * n);
    for a in 1..=k * n {
        for b in a + 1..=k * n {
            let (u, i) = decode(a);
            let (v, j) = decode(b);
            let (u, i, v, j) = if i < j || (i == j && u < v) {
                (u, i, v, j)
            } else {
                (v, j, u, i)
            };
            if i < j && u < v && g.adjacent(u, v) {
                graph.set_edge(a, b, true);
            }
        }
    }
    let colors: Vec<usize> = (1..=k * n).map(|id| decode(id).1).collect();
    ColoredGraph::new(graph, Coloring::new(k, colors).expect("layer colors"))
        .expect("lengths agree")
}

/// Computes the colorful subgraph count from color-prescribed counts by
/// averaging over palette renamings:
///
/// ```text
/// cf-count(H, G) = Σ_{σ ∈ S_k} cp-count(H, (G, σ∘c)) / |Aut(H)|.
/// ```
///
/// A division remainder signals an implementation bug, never bad input.
pub fn symmetrize_cp_to_cf(h: &Graph, g: &ColoredGraph) -> Result<BigUint> {
    let k = h.order();
    check_palette(k, g.palette())?;
    let mut total = BigUint::zero();
    let mut failure: Option<Error> = None;
    for_each_permutation(k, |img| {
        let sigma = Permutation::from_image(img.to_vec()).expect("valid image");
        let recolored = g
            .coloring()
            .recolored(&sigma)
            .and_then(|c| ColoredGraph::new(g.graph().clone(), c));
        match recolored.and_then(|host| count_cp_sub(h, &host)) {
            Ok(v) => {
                total += v;
                true
            }
            Err(e) => {
                failure = Some(e);
                false
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let aut = automorphism_count(h);
    if (&total % aut).to_u64() != Some(0) {
        return Err(Error::Divisibility {
            context: "color symmetrization",
            numerator: total.to_i64().unwrap_or(i64::MAX),
            divisor: aut as i64,
        });
    }
    Ok(total / aut)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{
        count_cf_clique, count_cf_indsub_to, count_cf_sub, count_clique, count_cp_indsub,
    };
    use crate::structures::{
        cyclic_triangle, random_coloring, random_graph, random_tournament,
        transitive_tournament,
    };

    fn colored_graph(n: usize, palette: usize, seed: u64) -> ColoredGraph {
        ColoredGraph::new(
            random_graph(n, seed),
            random_coloring(n, palette, seed ^ 0xABCD),
        )
        .unwrap()
    }

    fn colored_tournament(n: usize, palette: usize, seed: u64) -> ColoredTournament {
        ColoredTournament::new(
            random_tournament(n, seed),
            random_coloring(n, palette, seed ^ 0xEF01),
        )
        .unwrap()
    }

    #[test]
    fn biased_tournament_follows_the_orientation_rules() {
        for seed in 0..20 {
            let k = 3;
            let g = colored_graph(8, k, 100 + seed);
            let t = random_tournament(k, 200 + seed);
            let bt = biased_tournament(&g, &t).unwrap();
            for x in 1..=8 {
                for y in x + 1..=8 {
                    let (a, b) = (g.coloring().color(x), g.coloring().color(y));
                    let got = bt.tournament().orients(x, y);
                    if a == b {
                        assert!(got, "same color must run ascending");
                    } else if g.graph().adjacent(x, y) {
                        assert_eq!(got, t.orients(a, b), "edges agree");
                    } else {
                        assert_eq!(got, !t.orients(a, b), "non-edges disagree");
                    }
                }
            }
        }
    }

    #[test]
    fn triangle_bias_counts_empty_plus_complete() {
        // The triangle's exact-match basis has exactly the edgeless and the
        // complete graph as unit terms.
        let tri = cyclic_triangle();
        let basis = indsub_basis_of_cf(&tri).unwrap();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis.coefficient(&Graph::empty(3)), 1);
        assert_eq!(basis.coefficient(&Graph::complete(3)), 1);
        for seed in 0..15 {
            let g = colored_graph(7, 3, 300 + seed);
            let host = biased_tournament(&g, &tri).unwrap();
            let lhs = count_cf_indsub_to(&tri, &host).unwrap();
            let rhs = count_cp_indsub(&Graph::empty(3), &g).unwrap()
                + count_cp_indsub(&Graph::complete(3), &g).unwrap();
            assert_eq!(lhs, rhs, "seed {seed}");
        }
    }

    #[test]
    fn indsub_basis_always_contains_the_complete_graph() {
        for seed in 0..10 {
            let k = 4;
            let t = random_tournament(k, 400 + seed);
            let basis = indsub_basis_of_cf(&t).unwrap();
            assert_eq!(basis.coefficient(&Graph::complete(k)), 1);
        }
    }

    #[test]
    fn indsub_basis_evaluates_to_the_colorful_count() {
        for seed in 0..15 {
            let k = 3;
            let t = random_tournament(k, 500 + seed);
            let g = colored_graph(8, k, 600 + seed);
            let host = biased_tournament(&g, &t).unwrap();
            let direct = BigInt::from(count_cf_indsub_to(&t, &host).unwrap());
            let via_basis = indsub_basis_of_cf(&t)
                .unwrap()
                .evaluate(|h| count_cp_indsub(h, &g))
                .unwrap();
            assert_eq!(direct, via_basis, "seed {seed}");
        }
    }

    #[test]
    fn pied_graph_round_trips_inter_color_pairs() {
        for seed in 0..20 {
            let k = 3;
            let g = colored_tournament(8, k, 700 + seed);
            let t = random_tournament(k, 800 + seed);
            let pied = pied_graph(&g, &t).unwrap();
            let back = biased_tournament(&pied, &t).unwrap();
            for x in 1..=8 {
                for y in x + 1..=8 {
                    if g.coloring().color(x) != g.coloring().color(y) {
                        assert_eq!(
                            back.tournament().orients(x, y),
                            g.tournament().orients(x, y),
                            "seed {seed} pair ({x},{y})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn monochromatic_hosts_have_edgeless_pied_graphs() {
        let g = ColoredTournament::new(
            random_tournament(6, 1),
            Coloring::new(3, vec![2; 6]).unwrap(),
        )
        .unwrap();
        let pied = pied_graph(&g, &cyclic_triangle()).unwrap();
        assert_eq!(pied.graph().edge_count(), 0);
    }

    #[test]
    fn enumerator_basis_identity_on_pied_hosts() {
        // Colorful copies of T in G equal the enumerator-weighted sum of
        // color-prescribed subgraph counts over the pied graph.
        for seed in 0..12 {
            let k = 3;
            let t = random_tournament(k, 900 + seed);
            let g = colored_tournament(8, k, 1_000 + seed);
            let direct = BigInt::from(count_cf_indsub_to(&t, &g).unwrap());
            let pied = pied_graph(&g, &t).unwrap();
            let via_basis = cpsub_basis_of_cf(&t)
                .unwrap()
                .evaluate(|h| count_cp_sub(h, &pied))
                .unwrap();
            assert_eq!(direct, via_basis, "seed {seed}");
        }
    }

    #[test]
    fn enumerator_basis_identity_on_biased_hosts() {
        for seed in 0..12 {
            let k = 4;
            let t = random_tournament(k, 1_100 + seed);
            let g = colored_graph(8, k, 1_200 + seed);
            let host = biased_tournament(&g, &t).unwrap();
            let direct = BigInt::from(count_cf_indsub_to(&t, &host).unwrap());
            let via_basis = cpsub_basis_of_cf(&t)
                .unwrap()
                .evaluate(|h| count_cp_sub(h, &g))
                .unwrap();
            assert_eq!(direct, via_basis, "seed {seed}");
        }
    }

    #[test]
    fn cpsub_basis_matches_the_two_step_composition() {
        for seed in 0..6 {
            let k = 4;
            let t = random_tournament(k, 1_300 + seed);
            let direct = cpsub_basis_of_cf(&t).unwrap();
            let mut composed = LinearCombination::new(k);
            for (h, unit) in indsub_basis_of_cf(&t).unwrap().terms() {
                assert_eq!(unit, 1);
                composed
                    .add_scaled(&expand_cpindsub_in_cpsub_basis(&h), 1)
                    .unwrap();
            }
            assert_eq!(direct, composed, "seed {seed}");
        }
    }

    #[test]
    fn cpsub_basis_knows_the_antimatching_and_the_clique() {
        for k in 2..=4 {
            for seed in 0..5 {
                let t = random_tournament(k, 1_400 + seed);
                let basis = cpsub_basis_of_cf(&t).unwrap();
                assert_ne!(
                    basis.coefficient(&crate::structures::anti_matching(k)),
                    0,
                    "k={k}"
                );
                assert_eq!(basis.coefficient(&Graph::complete(k)), 0, "k={k}");
            }
        }
    }

    #[test]
    fn color_removal_matches_the_direct_colorful_count() {
        for seed in 0..40 {
            let k = 2 + (seed as usize % 3);
            let n = 6 + (seed as usize % 4);
            let t = random_tournament(k, 1_500 + seed);
            let g = colored_tournament(n, k, 1_600 + seed);
            assert_eq!(
                cf_from_uncolored(&t, &g).unwrap(),
                count_cf_indsub_to(&t, &g).unwrap(),
                "k={k} n={n} seed={seed}"
            );
        }
    }

    #[test]
    fn color_removal_edge_cases() {
        // Empty color class: no colorful set exists.
        let g = ColoredTournament::new(
            random_tournament(5, 7),
            Coloring::new(3, vec![1, 1, 2, 2, 1]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            cf_from_uncolored(&cyclic_triangle(), &g).unwrap(),
            BigUint::zero()
        );
        // Single color: the count is the host order.
        let g1 = ColoredTournament::new(
            random_tournament(6, 8),
            Coloring::new(1, vec![1; 6]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            cf_from_uncolored(&transitive_tournament(1), &g1).unwrap(),
            BigUint::from(6u32)
        );
    }

    #[test]
    fn expansion_of_complete_pattern_is_a_single_term() {
        let lc = expand_cpindsub_in_cpsub_basis(&Graph::complete(4));
        assert_eq!(lc.len(), 1);
        assert_eq!(lc.coefficient(&Graph::complete(4)), 1);
        // Term count doubles per free pair.
        let path = {
            let mut g = Graph::empty(3);
            g.set_edge(1, 2, true);
            g
        };
        assert_eq!(expand_cpindsub_in_cpsub_basis(&path).len(), 4);
    }

    #[test]
    fn expansion_evaluates_to_the_exact_match_count() {
        for seed in 0..20 {
            let k = 3;
            let h = random_graph(k, 1_700 + seed);
            let g = colored_graph(7, k, 1_800 + seed);
            let direct = BigInt::from(count_cp_indsub(&h, &g).unwrap());
            let via = expand_cpindsub_in_cpsub_basis(&h)
                .evaluate(|hp| count_cp_sub(hp, &g))
                .unwrap();
            assert_eq!(direct, via, "seed {seed}");
        }
    }

    #[test]
    fn restriction_keeps_exactly_the_allowed_color_pairs() {
        for seed in 0..15 {
            let k = 3;
            let g = colored_graph(8, k, 1_900 + seed);
            assert_eq!(
                restrict_by_pattern(&g, &Graph::complete(k))
                    .unwrap()
                    .graph()
                    .edge_count(),
                g.graph()
                    .edge_list()
                    .iter()
                    .filter(|&&(u, v)| g.coloring().color(u) != g.coloring().color(v))
                    .count(),
                "complete pattern keeps all inter-color edges"
            );
            assert_eq!(
                restrict_by_pattern(&g, &Graph::empty(k))
                    .unwrap()
                    .graph()
                    .edge_count(),
                0
            );
        }
    }

    #[test]
    fn restriction_kills_patterns_with_outside_edges() {
        for seed in 0..10 {
            let k = 3;
            let g = colored_graph(8, k, 2_000 + seed);
            let mut f = Graph::empty(k);
            f.set_edge(1, 2, true);
            let restricted = restrict_by_pattern(&g, &f).unwrap();
            let mut outside = Graph::empty(k);
            outside.set_edge(1, 3, true);
            assert_eq!(
                count_cp_sub(&outside, &restricted).unwrap(),
                BigUint::zero()
            );
        }
    }

    #[test]
    fn extraction_recovers_a_scaled_single_term() {
        for seed in 0..10 {
            let k = 3;
            let h = random_graph(k, 2_100 + seed);
            let g = colored_graph(8, k, 2_200 + seed);
            let oracle =
                |host: &ColoredGraph| BigInt::from(5u32) * BigInt::from(count_cp_sub(&h, host).unwrap());
            let got = extract_term(oracle, &h, &g).unwrap();
            let want = BigInt::from(5u32) * BigInt::from(count_cp_sub(&h, &g).unwrap());
            assert_eq!(got, want, "seed {seed}");
        }
    }

    #[test]
    fn extraction_is_linear_in_the_oracle() {
        for seed in 0..8 {
            let k = 3;
            let h = random_graph(k, 2_300 + seed);
            let other = random_graph(k, 2_400 + seed);
            let g = colored_graph(7, k, 2_500 + seed);
            let f1 = |host: &ColoredGraph| BigInt::from(count_cp_sub(&h, host).unwrap());
            let f2 = |host: &ColoredGraph| {
                BigInt::from(3u32) * BigInt::from(count_cp_sub(&other, host).unwrap())
            };
            let sum_oracle = |host: &ColoredGraph| f1(host) + f2(host);
            let lhs = extract_term(sum_oracle, &h, &g).unwrap();
            let rhs = extract_term(f1, &h, &g).unwrap() + extract_term(f2, &h, &g).unwrap();
            assert_eq!(lhs, rhs, "seed {seed}");
        }
    }

    #[test]
    fn edgeless_extraction_is_one_oracle_call() {
        let k = 3;
        let g = colored_graph(6, k, 2_600);
        let mut calls = 0;
        let _ = extract_term(
            |_| {
                calls += 1;
                BigInt::zero()
            },
            &Graph::empty(k),
            &g,
        )
        .unwrap();
        assert_eq!(calls, 1);
    }

    #[test]
    fn end_to_end_extraction_from_the_colorful_oracle() {
        // The oracle computes colorful copies of T in the biased host; its
        // expansion has the anti-matching as a term, whose extraction
        // recovers enumerator × subgraph count.
        for seed in 0..6 {
            let k = 3;
            let t = random_tournament(k, 2_700 + seed);
            let g = colored_graph(7, k, 2_800 + seed);
            let am = crate::structures::anti_matching(k);
            let oracle = |host: &ColoredGraph| {
                let biased = biased_tournament(host, &t).unwrap();
                BigInt::from(count_cf_indsub_to(&t, &biased).unwrap())
            };
            let got = extract_term(oracle, &am, &g).unwrap();
            let coeff = BigInt::from(alternating_enumerator_naive(&t, &am).unwrap());
            let want = coeff * BigInt::from(count_cp_sub(&am, &g).unwrap());
            assert_eq!(got, want, "seed {seed}");
        }
    }

    #[test]
    fn signature_gadget_counts_colorful_cliques() {
        for seed in 0..10 {
            let k = 4;
            let t = transitive_tournament(k);
            let r = vec![2, 4];
            let g = colored_graph(7, k - 2, 2_900 + seed);
            let gadget = signature_gadget(&t, &r, &g).unwrap();
            assert_eq!(gadget.order(), 7 + 2);
            let copies = count_cf_indsub_to(&t, &gadget).unwrap();
            let cliques = count_cf_clique(k - 2, &g).unwrap();
            assert_eq!(copies, cliques, "seed {seed}");
        }
    }

    #[test]
    fn signature_gadget_with_random_patterns_and_minimal_signatures() {
        for seed in 0..6 {
            let k = 4;
            let t = random_tournament(k, 3_000 + seed);
            let sig = crate::signatures::min_signature(&t).unwrap();
            let r = sig.vertices().to_vec();
            if r.len() == k {
                continue; // degenerate: no free palette
            }
            let g = colored_graph(6, k - r.len(), 3_100 + seed);
            let gadget = signature_gadget(&t, &r, &g).unwrap();
            assert_eq!(
                count_cf_indsub_to(&t, &gadget).unwrap(),
                count_cf_clique(k - r.len(), &g).unwrap(),
                "seed {seed} r={r:?}"
            );
        }
    }

    #[test]
    fn signature_gadget_rejects_non_signatures() {
        let t = transitive_tournament(4);
        let g = colored_graph(5, 2, 3_200);
        assert!(matches!(
            signature_gadget(&t, &[3, 4], &g),
            Err(Error::NotASignature)
        ));
        assert!(signature_gadget(&t, &[2, 4], &g).is_ok());
    }

    #[test]
    fn clique_color_gadget_preserves_clique_counts() {
        let k4 = Graph::complete(4);
        let gadget = clique_color_gadget(&k4, 3);
        assert_eq!(gadget.order(), 12);
        assert_eq!(
            count_clique(3, &k4),
            count_cf_clique(3, &gadget).unwrap()
        );
        assert_eq!(count_clique(3, &k4), BigUint::from(4u32));
        for seed in 0..15 {
            let n = 5 + (seed as usize % 3);
            let k = 2 + (seed as usize % 3);
            let g = random_graph(n, 3_300 + seed);
            let gadget = clique_color_gadget(&g, k);
            assert_eq!(gadget.order(), k * n);
            assert_eq!(
                count_clique(k, &g),
                count_cf_clique(k, &gadget).unwrap(),
                "seed {seed} n={n} k={k}"
            );
        }
        let edgeless = clique_color_gadget(&Graph::empty(4), 2);
        assert_eq!(count_cf_clique(2, &edgeless).unwrap(), BigUint::zero());
    }

    #[test]
    fn symmetrization_matches_the_colorful_subgraph_count() {
        for seed in 0..20 {
            let k = 2 + (seed as usize % 3);
            let n = 6;
            let h = random_graph(k, 3_400 + seed);
            let g = colored_graph(n, k, 3_500 + seed);
            assert_eq!(
                symmetrize_cp_to_cf(&h, &g).unwrap(),
                count_cf_sub(&h, &g).unwrap(),
                "k={k} seed={seed}"
            );
        }
        // Order-1 pattern: the count is the host order.
        let g1 = colored_graph(5, 1, 3_600);
        assert_eq!(
            symmetrize_cp_to_cf(&Graph::empty(1), &g1).unwrap(),
            BigUint::from(5u32)
        );
    }

    #[test]
    fn linear_combination_bookkeeping() {
        let mut lc = LinearCombination::new(3);
        let g = Graph::complete(3);
        lc.add_term(&g, 2).unwrap();
        lc.add_term(&g, -2).unwrap();
        assert!(lc.is_empty());
        lc.add_term(&g, 5).unwrap();
        assert_eq!(lc.coefficient(&g), 5);
        assert_eq!(lc.coefficient(&Graph::empty(3)), 0);
        assert!(lc.add_term(&Graph::empty(4), 1).is_err());
    }
}
