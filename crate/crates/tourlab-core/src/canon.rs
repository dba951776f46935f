//! Isomorphism machinery: canonical forms, isomorphism testing, and
//! automorphism counting for labeled tournaments and graphs.
//!
//! The canonical form of a tournament is the lexicographically minimal
//! orientation bitmask over all relabelings — an exact, exhaustive search
//! (practical through order ≈ 9). The isomorphism tester and automorphism
//! counter instead use joint degree refinement plus backtracking, which
//! agrees with canonical-form equality and scales to the larger orders the
//! rest of the crate needs.

use std::collections::HashSet;

use crate::structures::{num_pairs, pair_index, Graph, PairBits, Permutation, Tournament};

/// Common view of tournaments and graphs for the isomorphism engine: an
/// order plus a pair relation code (`0`/`1`), read in a fixed direction.
pub trait PairStructure {
    /// Number of vertices.
    fn order(&self) -> usize;
    /// Relation code of the ordered pair `(u, v)`, `u ≠ v`. For tournaments
    /// this is the orientation indicator; for graphs, adjacency.
    fn rel(&self, u: usize, v: usize) -> u8;
}

impl PairStructure for Tournament {
    fn order(&self) -> usize {
        Tournament::order(self)
    }
    fn rel(&self, u: usize, v: usize) -> u8 {
        self.orients(u, v) as u8
    }
}

impl PairStructure for Graph {
    fn order(&self) -> usize {
        Graph::order(self)
    }
    fn rel(&self, u: usize, v: usize) -> u8 {
        self.adjacent(u, v) as u8
    }
}

/// Joint iterated degree refinement of two structures of equal order.
/// Returns one class id per vertex for each structure; ids are assigned from
/// a shared value space, so "same id" means "indistinguishable by
/// refinement" across the two structures. Every isomorphism maps each vertex
/// to a vertex of the same class id.
fn joint_refinement<S: PairStructure>(a: &S, b: &S) -> (Vec<u32>, Vec<u32>) {
    let k = a.order();
    debug_assert_eq!(k, b.order());
    // Start from degree values (out-degrees for tournaments), shared space.
    let deg = |s: &S, v: usize| -> u32 {
        (1..=k)
            .filter(|&u| u != v)
            .map(|u| s.rel(v, u) as u32)
            .sum()
    };
    let mut ca: Vec<u32> = (1..=k).map(|v| deg(a, v)).collect();
    let mut cb: Vec<u32> = (1..=k).map(|v| deg(b, v)).collect();
    let mut distinct = renumber_jointly(&mut ca, &mut cb);
    loop {
        // Signature: own class plus the multiset of (edge code, class)
        // over all other vertices of the same structure.
        let sig = |s: &S, classes: &[u32], v: usize| -> (u32, Vec<(u8, u32)>) {
            let mut around: Vec<(u8, u32)> = (1..=k)
                .filter(|&u| u != v)
                .map(|u| (s.rel(v, u), classes[u - 1]))
                .collect();
            around.sort_unstable();
            (classes[v - 1], around)
        };
        let sigs_a: Vec<_> = (1..=k).map(|v| sig(a, &ca, v)).collect();
        let sigs_b: Vec<_> = (1..=k).map(|v| sig(b, &cb, v)).collect();
        let mut all: Vec<&(u32, Vec<(u8, u32)>)> = sigs_a.iter().chain(sigs_b.iter()).collect();
        all.sort_unstable();
        all.dedup();
        let id_of = |s: &(u32, Vec<(u8, u32)>)| all.binary_search(&s).unwrap() as u32;
        for (v, s) in sigs_a.iter().enumerate() {
            ca[v] = id_of(s);
        }
        for (v, s) in sigs_b.iter().enumerate() {
            cb[v] = id_of(s);
        }
        if all.len() == distinct {
            return (ca, cb);
        }
        distinct = all.len();
    }
}

/// Renumbers the values of both class vectors to `0..` from a shared sorted
/// value space; returns the number of distinct values.
fn renumber_jointly(ca: &mut [u32], cb: &mut [u32]) -> usize {
    let mut values: Vec<u32> = ca.iter().chain(cb.iter()).copied().collect();
    values.sort_unstable();
    values.dedup();
    for c in ca.iter_mut().chain(cb.iter_mut()) {
        *c = values.binary_search(c).unwrap() as u32;
    }
    values.len()
}

/// Backtracking isomorphism search state.
struct IsoSearch<'a, S: PairStructure> {
    a: &'a S,
    b: &'a S,
    /// Vertices of `a` in assignment order (most constrained first).
    order: Vec<usize>,
    ca: Vec<u32>,
    cb: Vec<u32>,
    image: Vec<usize>,
    used: Vec<bool>,
    found: u64,
    cap: u64,
    first: Option<Vec<usize>>,
}

impl<'a, S: PairStructure> IsoSearch<'a, S> {
    fn run(a: &'a S, b: &'a S, cap: u64) -> (u64, Option<Vec<usize>>) {
        let k = a.order();
        if k != b.order() {
            return (0, None);
        }
        let (ca, cb) = joint_refinement(a, b);
        let mut ha = ca.clone();
        let mut hb = cb.clone();
        ha.sort_unstable();
        hb.sort_unstable();
        if ha != hb {
            return (0, None);
        }
        let mut class_size = std::collections::HashMap::new();
        for &c in &ca {
            *class_size.entry(c).or_insert(0usize) += 1;
        }
        let mut order: Vec<usize> = (1..=k).collect();
        order.sort_by_key(|&v| (class_size[&ca[v - 1]], ca[v - 1], v));
        let mut search = IsoSearch {
            a,
            b,
            order,
            ca,
            cb,
            image: vec![0; k + 1],
            used: vec![false; k + 1],
            found: 0,
            cap,
            first: None,
        };
        search.recurse(0);
        (search.found, search.first)
    }

    fn recurse(&mut self, depth: usize) {
        if self.found >= self.cap {
            return;
        }
        if depth == self.order.len() {
            self.found += 1;
            if self.first.is_none() {
                self.first = Some(self.image[1..].to_vec());
            }
            return;
        }
        let v = self.order[depth];
        let k = self.a.order();
        for cand in 1..=k {
            if self.used[cand] || self.cb[cand - 1] != self.ca[v - 1] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                self.a.rel(v, u) == self.b.rel(cand, self.image[u])
                    && self.a.rel(u, v) == self.b.rel(self.image[u], cand)
            });
            if !consistent {
                continue;
            }
            self.image[v] = cand;
            self.used[cand] = true;
            self.recurse(depth + 1);
            self.used[cand] = false;
            self.image[v] = 0;
            if self.found >= self.cap {
                return;
            }
        }
    }
}

/// True iff the two structures are isomorphic (equivalently: equal canonical
/// forms). Structures of different orders are never isomorphic.
pub fn are_isomorphic<S: PairStructure>(a: &S, b: &S) -> bool {
    IsoSearch::run(a, b, 1).0 == 1
}

/// An isomorphism from `a` to `b` if one exists (the first found by the
/// deterministic backtracking order).
pub fn find_isomorphism<S: PairStructure>(a: &S, b: &S) -> Option<Permutation> {
    IsoSearch::run(a, b, 1)
        .1
        .map(|img| Permutation::from_image(img).expect("search produces bijections"))
}

/// Exact automorphism count by exhaustive backtracking.
pub fn automorphism_count<S: PairStructure>(s: &S) -> u64 {
    IsoSearch::run(s, s, u64::MAX).0
}

/// Automorphism count truncated at `cap` (e.g. `cap = 2` asks "is the
/// automorphism group trivial?" at the cost of finding at most two).
pub fn automorphism_count_at_most<S: PairStructure>(s: &S, cap: u64) -> u64 {
    IsoSearch::run(s, s, cap).0
}

/// The lexicographically minimal orientation bitmask of `t` over all
/// relabelings. Exhaustive over permutations, with one sound restriction:
/// the vertex placed first must have minimum out-degree (any other choice
/// yields a lexicographically larger first block). Factorial time; intended
/// for desk-scale orders.
pub fn canonical_form(t: &Tournament) -> PairBits {
    let k = t.order();
    let np = num_pairs(k);
    let min_outdeg = (1..=k).map(|v| t.out_degree(v)).min().unwrap();
    let mut best: Option<PairBits> = None;
    let mut mask = PairBits::zero(np);
    let mut preimage = vec![0usize; k + 1];
    let mut used = vec![false; k + 1];

    fn place(
        t: &Tournament,
        depth: usize,
        min_outdeg: usize,
        preimage: &mut Vec<usize>,
        used: &mut Vec<bool>,
        mask: &mut PairBits,
        best: &mut Option<PairBits>,
    ) {
        let k = t.order();
        if depth > k {
            match best {
                Some(b) if mask.lex_cmp(b) != std::cmp::Ordering::Less => {}
                _ => *best = Some(mask.clone()),
            }
            return;
        }
        for cand in 1..=k {
            if used[cand] {
                continue;
            }
            if depth == 1 && t.out_degree(cand) != min_outdeg {
                continue;
            }
            preimage[depth] = cand;
            used[cand] = true;
            // Bits for pairs {i, depth}, i < depth, become determined now.
            for i in 1..depth {
                mask.set(
                    pair_index(k, i, depth),
                    t.orients(preimage[i], preimage[depth]),
                );
            }
            place(t, depth + 1, min_outdeg, preimage, used, mask, best);
            used[cand] = false;
        }
    }

    place(t, 1, min_outdeg, &mut preimage, &mut used, &mut mask, &mut best);
    best.expect("at least one permutation exists")
}

/// All orientation bitmasks in the relabeling orbit of `t`, as `u128`s
/// (order ≤ 16). Membership of a candidate's mask in this set is a constant
/// time isomorphism test; the orbit size also yields `|Aut|` via
/// orbit-stabilizer. Intended for small patterns (≤ 8, where `k!` is cheap).
pub fn orbit_masks(t: &Tournament) -> HashSet<u128> {
    let k = t.order();
    assert!(k <= 16, "orbit masks require order <= 16");
    let mut set = HashSet::new();
    crate::structures::for_each_permutation(k, |pre| {
        // Treat `pre` as the preimage sequence: position a holds vertex
        // pre[a-1], so bit {a,b} of the relabeled mask reads the original
        // orientation between the occupants.
        let mut mask = 0u128;
        let mut idx = 0;
        for a in 0..k {
            for b in a + 1..k {
                if t.orients(pre[a], pre[b]) {
                    mask |= 1 << idx;
                }
                idx += 1;
            }
        }
        set.insert(mask);
        true
    });
    set
}

/// All edge bitmasks in the relabeling orbit of a graph, as `u128`s
/// (order ≤ 16). Same role as [`orbit_masks`], for undirected patterns.
pub fn graph_orbit_masks(g: &crate::structures::Graph) -> HashSet<u128> {
    let k = g.order();
    assert!(k <= 16, "orbit masks require order <= 16");
    let mut set = HashSet::new();
    crate::structures::for_each_permutation(k, |pre| {
        let mut mask = 0u128;
        let mut idx = 0;
        for a in 0..k {
            for b in a + 1..k {
                if g.adjacent(pre[a], pre[b]) {
                    mask |= 1 << idx;
                }
                idx += 1;
            }
        }
        set.insert(mask);
        true
    });
    set
}

/// `|Aut(t)|` computed as `k! / |orbit|`; cross-checks the backtracking
/// counter on small orders. Order ≤ 8 recommended.
pub fn automorphism_count_via_orbit(t: &Tournament) -> u64 {
    let k = t.order();
    let orbit = orbit_masks(t).len() as u64;
    let fact: u64 = (1..=k as u64).product();
    debug_assert_eq!(fact % orbit, 0);
    fact / orbit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{
        apply_permutation, cyclic_triangle, for_each_permutation, random_tournament,
        transitive_tournament, Permutation,
    };

    #[test]
    fn triangle_is_not_isomorphic_to_transitive() {
        assert!(!are_isomorphic(&cyclic_triangle(), &transitive_tournament(3)));
    }

    #[test]
    fn relabelings_are_isomorphic() {
        let t = random_tournament(7, 99);
        let sigma = Permutation::from_image(vec![3, 7, 1, 5, 2, 6, 4]).unwrap();
        let moved = apply_permutation(&t, &sigma).unwrap();
        assert!(are_isomorphic(&t, &moved));
        assert_eq!(canonical_form(&t), canonical_form(&moved));
        let phi = find_isomorphism(&t, &moved).unwrap();
        for i in 1..=7 {
            for j in 1..=7 {
                if i != j {
                    assert_eq!(t.orients(i, j), moved.orients(phi.apply(i), phi.apply(j)));
                }
            }
        }
    }

    #[test]
    fn reversed_triangle_is_isomorphic_to_triangle() {
        let tri = cyclic_triangle();
        assert!(are_isomorphic(&tri, &tri.reversed()));
    }

    #[test]
    fn isomorphism_agrees_with_naive_check_exhaustively_small() {
        // All pairs of labeled tournaments on 4 vertices, validated against
        // an all-permutations check.
        let k = 4;
        let np = num_pairs(k);
        let all: Vec<Tournament> = (0..1u32 << np)
            .map(|m| Tournament::from_bits(k, PairBits::from_u128(np, m as u128)))
            .collect();
        for (i, a) in all.iter().enumerate() {
            for b in all.iter().skip(i) {
                let mut naive = false;
                for_each_permutation(k, |img| {
                    let sigma = Permutation::from_image(img.to_vec()).unwrap();
                    if &apply_permutation(a, &sigma).unwrap() == b {
                        naive = true;
                        return false;
                    }
                    true
                });
                assert_eq!(are_isomorphic(a, b), naive);
                assert_eq!(canonical_form(a) == canonical_form(b), naive);
            }
        }
    }

    #[test]
    fn automorphism_counts_match_known_values() {
        assert_eq!(automorphism_count(&cyclic_triangle()), 3);
        for k in 1..=7 {
            assert_eq!(automorphism_count(&transitive_tournament(k)), 1);
        }
        assert_eq!(automorphism_count(&Graph::complete(4)), 24);
        assert_eq!(automorphism_count(&Graph::empty(5)), 120);
        let path = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(automorphism_count(&path), 2);
    }

    #[test]
    fn backtracking_matches_orbit_stabilizer_on_random_inputs() {
        for seed in 0..40 {
            let k = 3 + (seed as usize % 5);
            let t = random_tournament(k, 5000 + seed);
            assert_eq!(
                automorphism_count(&t),
                automorphism_count_via_orbit(&t),
                "mismatch at seed {seed}"
            );
        }
    }

    #[test]
    fn automorphism_count_divides_factorial() {
        for seed in 0..30 {
            let k = 2 + (seed as usize % 6);
            let t = random_tournament(k, 7000 + seed);
            let fact: u64 = (1..=k as u64).product();
            assert_eq!(fact % automorphism_count(&t), 0);
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        for seed in 0..20 {
            let k = 2 + (seed as usize % 5);
            let t = random_tournament(k, 111 + seed);
            let canon = canonical_form(&t);
            for_each_permutation(k, |img| {
                let sigma = Permutation::from_image(img.to_vec()).unwrap();
                let moved = apply_permutation(&t, &sigma).unwrap();
                assert_eq!(canonical_form(&moved), canon);
                true
            });
        }
    }

    #[test]
    fn canonical_form_is_minimal_over_orbit() {
        for seed in 0..10 {
            let t = random_tournament(5, 300 + seed);
            let canon = canonical_form(&t).as_u128();
            let orbit = orbit_masks(&t);
            let min = orbit.iter().copied().map(reverse_rank).min().unwrap();
            assert_eq!(reverse_rank(canon), min);
            assert!(orbit.contains(&canon));
        }
    }

    /// Maps a 10-bit pair mask to an integer whose natural order equals
    /// lexicographic order of the bit sequence.
    fn reverse_rank(mask: u128) -> u128 {
        let mut r = 0u128;
        for i in 0..10 {
            if mask >> i & 1 == 1 {
                r |= 1 << (9 - i);
            }
        }
        r
    }

    #[test]
    fn capped_count_short_circuits() {
        let t = transitive_tournament(6);
        assert_eq!(automorphism_count_at_most(&t, 2), 1);
        let tri = cyclic_triangle();
        assert_eq!(automorphism_count_at_most(&tri, 2), 2);
    }

    #[test]
    fn order_one_edge_cases() {
        let t1 = transitive_tournament(1);
        assert!(are_isomorphic(&t1, &t1));
        assert_eq!(automorphism_count(&t1), 1);
        assert_eq!(canonical_form(&t1).len(), 0);
        assert_eq!(orbit_masks(&t1).len(), 1);
    }
}
