//! Core value types: labeled tournaments, labeled graphs, colorings, and
//! permutations, all stored as bitsets over unordered vertex pairs.
//!
//! Vertices are 1-based. Pairs `{i, j}` with `i < j` are enumerated in
//! lexicographic order — `{1,2}, {1,3}, …, {1,k}, {2,3}, …` — and the bit
//! index of a pair under this order is a format-level contract shared with
//! the text serialization and the seeded random stream.

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Number of unordered pairs on `k` vertices.
pub fn num_pairs(k: usize) -> usize {
    k * (k - 1) / 2
}

/// Lexicographic index of the pair `{i, j}` (requires `1 <= i < j <= k`).
pub fn pair_index(k: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= k, "bad pair ({i},{j}) for order {k}");
    (i - 1) * k - i * (i - 1) / 2 + (j - i - 1)
}

/// Inverse of [`pair_index`]: the pair `{i, j}` with `i < j` at `idx`.
pub fn pair_at(k: usize, idx: usize) -> (usize, usize) {
    debug_assert!(idx < num_pairs(k));
    let mut i = 1;
    let mut base = 0;
    while base + (k - i) <= idx {
        base += k - i;
        i += 1;
    }
    (i, i + 1 + (idx - base))
}

/// Fixed-width bitset over the pairs of a structure of known order.
///
/// Word 0 bit 0 is pair index 0; "lexicographically smaller" for canonical
/// forms means smaller in the bit sequence read in pair-index order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairBits {
    nbits: usize,
    words: Vec<u64>,
}

impl PairBits {
    /// All-zero bitset with `nbits` bits.
    pub fn zero(nbits: usize) -> Self {
        PairBits {
            nbits,
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    /// All-one bitset with `nbits` bits.
    pub fn ones(nbits: usize) -> Self {
        let mut b = Self::zero(nbits);
        for idx in 0..nbits {
            b.set(idx, true);
        }
        b
    }

    /// Number of bits.
    pub fn len(&self) -> usize {
        self.nbits
    }

    /// True if the bitset has zero bits.
    pub fn is_empty(&self) -> bool {
        self.nbits == 0
    }

    /// Reads bit `idx`.
    pub fn get(&self, idx: usize) -> bool {
        debug_assert!(idx < self.nbits);
        self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    /// Writes bit `idx`.
    pub fn set(&mut self, idx: usize, value: bool) {
        debug_assert!(idx < self.nbits);
        let mask = 1u64 << (idx % 64);
        if value {
            self.words[idx / 64] |= mask;
        } else {
            self.words[idx / 64] &= !mask;
        }
    }

    /// Flips bit `idx`.
    pub fn toggle(&mut self, idx: usize) {
        debug_assert!(idx < self.nbits);
        self.words[idx / 64] ^= 1u64 << (idx % 64);
    }

    /// XORs another bitset of the same length into this one.
    pub fn xor_assign(&mut self, other: &PairBits) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    /// Number of set bits.
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of positions where the two bitsets differ.
    pub fn hamming_distance(&self, other: &PairBits) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Lexicographic comparison of the bit sequences in pair-index order
    /// (bit 0 is the most significant position).
    pub fn lex_cmp(&self, other: &PairBits) -> std::cmp::Ordering {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter().zip(&other.words) {
            // Reversing each word makes bit 0 the numeric MSB, so integer
            // order on reversed words equals lexicographic order on bits.
            let ord = a.reverse_bits().cmp(&b.reverse_bits());
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        std::cmp::Ordering::Equal
    }

    /// The bits packed into a `u128` (bit `i` of the result is bit `i` here).
    /// Panics if there are more than 128 bits.
    pub fn as_u128(&self) -> u128 {
        assert!(self.nbits <= 128, "bitset too wide for u128");
        let lo = self.words.first().copied().unwrap_or(0) as u128;
        let hi = self.words.get(1).copied().unwrap_or(0) as u128;
        lo | hi << 64
    }

    /// Builds a bitset of `nbits` bits from the low bits of `value`.
    pub fn from_u128(nbits: usize, value: u128) -> Self {
        assert!(nbits <= 128);
        let mut b = Self::zero(nbits);
        for idx in 0..nbits {
            if value >> idx & 1 == 1 {
                b.set(idx, true);
            }
        }
        b
    }

    /// Renders the bits as a `0`/`1` string in pair-index order.
    pub fn to_bit_string(&self) -> String {
        (0..self.nbits)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

/// Validates that `a` is a nonempty, strictly ascending list of vertices of a
/// structure of order `k`. Returns the list as a slice-backed `Vec`.
fn check_vertex_set(k: usize, a: &[usize]) -> Result<Vec<usize>> {
    if a.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateVertex { vertex: w[0] });
        }
    }
    for &v in &sorted {
        if v == 0 || v > k {
            return Err(Error::VertexOutOfRange { vertex: v, order: k });
        }
    }
    Ok(sorted)
}

/// A labeled tournament on `{1, …, k}`: one bit per unordered pair, set iff
/// the pair `{i, j}` with `i < j` is oriented `i → j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tournament {
    order: usize,
    bits: PairBits,
}

impl Tournament {
    /// Tournament of order `k` with every pair oriented low → high
    /// (placeholder orientation; use the builder methods to change it).
    pub fn new_ascending(k: usize) -> Self {
        assert!(k >= 1, "tournament order must be at least 1");
        Tournament {
            order: k,
            bits: PairBits::ones(num_pairs(k)),
        }
    }

    /// Builds a tournament of order `k` from an orientation predicate:
    /// `orient(i, j)` (called once per pair with `i < j`) returns true iff
    /// the pair is oriented `i → j`.
    pub fn from_fn(k: usize, mut orient: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(k >= 1);
        let mut bits = PairBits::zero(num_pairs(k));
        for i in 1..=k {
            for j in i + 1..=k {
                if orient(i, j) {
                    bits.set(pair_index(k, i, j), true);
                }
            }
        }
        Tournament { order: k, bits }
    }

    /// Builds a tournament of order `k` from a pair bitset.
    pub fn from_bits(k: usize, bits: PairBits) -> Self {
        assert!(k >= 1);
        assert_eq!(bits.len(), num_pairs(k));
        Tournament { order: k, bits }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The underlying pair bitset (bit set iff low → high).
    pub fn bits(&self) -> &PairBits {
        &self.bits
    }

    /// True iff the directed edge `(u, v)` is present (`u ≠ v`).
    pub fn orients(&self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        if u < v {
            self.bits.get(pair_index(self.order, u, v))
        } else {
            !self.bits.get(pair_index(self.order, v, u))
        }
    }

    /// Reverses the pair `{u, v}`.
    pub fn flip_pair(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.bits.toggle(pair_index(self.order, i, j));
    }

    /// The tournament with every pair reversed.
    pub fn reversed(&self) -> Tournament {
        let mut bits = self.bits.clone();
        bits.xor_assign(&PairBits::ones(bits.len()));
        Tournament {
            order: self.order,
            bits,
        }
    }

    /// Out-degree of `v`.
    pub fn out_degree(&self, v: usize) -> usize {
        (1..=self.order)
            .filter(|&u| u != v && self.orients(v, u))
            .count()
    }

    /// Out-neighborhood of `v` as a vertex bitmask (bit `u-1` for vertex `u`).
    /// Panics if the order exceeds 128.
    pub fn out_mask(&self, v: usize) -> u128 {
        assert!(self.order <= 128, "vertex masks require order <= 128");
        let mut m = 0u128;
        for u in 1..=self.order {
            if u != v && self.orients(v, u) {
                m |= 1 << (u - 1);
            }
        }
        m
    }

    /// All out-neighborhood masks, indexed by vertex − 1.
    pub fn all_out_masks(&self) -> Vec<u128> {
        (1..=self.order).map(|v| self.out_mask(v)).collect()
    }

    /// Sorted out-degree sequence (an isomorphism invariant).
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (1..=self.order).map(|v| self.out_degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Subtournament induced by the vertex set `a`, relabeled to `1..=|a|`
    /// by ascending rank in `a`. Errors if `a` is empty, repeats a vertex,
    /// or leaves `1..=order`.
    pub fn induced(&self, a: &[usize]) -> Result<Tournament> {
        let set = check_vertex_set(self.order, a)?;
        let m = set.len();
        Ok(Tournament::from_fn(m, |i, j| {
            self.orients(set[i - 1], set[j - 1])
        }))
    }

    /// Topological order (beating order) if the tournament is transitive:
    /// vertices sorted by out-degree descending, validated edge by edge.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut verts: Vec<usize> = (1..=self.order).collect();
        verts.sort_by_key(|&v| std::cmp::Reverse(self.out_degree(v)));
        for a in 0..verts.len() {
            for b in a + 1..verts.len() {
                if !self.orients(verts[a], verts[b]) {
                    return None;
                }
            }
        }
        Some(verts)
    }

    /// True iff the tournament has no directed cycle.
    pub fn is_transitive(&self) -> bool {
        self.topological_order().is_some()
    }

    /// The orientation bitmask as a `u128` (order ≤ 16 only).
    pub fn mask_u128(&self) -> u128 {
        self.bits.as_u128()
    }

    /// Directed edge list `(u, v)` for every pair, sorted by pair index.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(num_pairs(self.order));
        for i in 1..=self.order {
            for j in i + 1..=self.order {
                if self.orients(i, j) {
                    out.push((i, j));
                } else {
                    out.push((j, i));
                }
            }
        }
        out
    }
}

/// A labeled undirected simple graph on `{1, …, k}` as an edge bitset.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    order: usize,
    bits: PairBits,
}

impl Graph {
    /// Edgeless graph of order `k`.
    pub fn empty(k: usize) -> Self {
        assert!(k >= 1, "graph order must be at least 1");
        Graph {
            order: k,
            bits: PairBits::zero(num_pairs(k)),
        }
    }

    /// Complete graph of order `k`.
    pub fn complete(k: usize) -> Self {
        assert!(k >= 1);
        Graph {
            order: k,
            bits: PairBits::ones(num_pairs(k)),
        }
    }

    /// Graph of order `k` with the given edges (endpoints in any order).
    pub fn from_edges(k: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(k);
        for &(u, v) in edges {
            if u == 0 || u > k {
                return Err(Error::VertexOutOfRange { vertex: u, order: k });
            }
            if v == 0 || v > k {
                return Err(Error::VertexOutOfRange { vertex: v, order: k });
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph of order `k` from an edge bitset.
    pub fn from_bits(k: usize, bits: PairBits) -> Self {
        assert!(k >= 1);
        assert_eq!(bits.len(), num_pairs(k));
        Graph { order: k, bits }
    }

    /// Graph of order `k` whose edge bitmask is the low bits of `mask`
    /// (order ≤ 16 only). Useful for exhaustive enumeration of all graphs.
    pub fn from_mask_u128(k: usize, mask: u128) -> Self {
        Graph {
            order: k,
            bits: PairBits::from_u128(num_pairs(k), mask),
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The underlying edge bitset.
    pub fn bits(&self) -> &PairBits {
        &self.bits
    }

    /// True iff `{u, v}` is an edge (`u ≠ v`).
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.bits.get(pair_index(self.order, i, j))
    }

    /// Adds or removes the edge `{u, v}`.
    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v);
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.bits.set(pair_index(self.order, i, j), present);
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.bits.count_ones()
    }

    /// Edge list as sorted pairs `(i, j)` with `i < j`, in pair-index order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 1..=self.order {
            for j in i + 1..=self.order {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        (1..=self.order)
            .filter(|&u| u != v && self.adjacent(u, v))
            .count()
    }

    /// Neighborhood of `v` as a vertex bitmask (order ≤ 128).
    pub fn neighbor_mask(&self, v: usize) -> u128 {
        assert!(self.order <= 128, "vertex masks require order <= 128");
        let mut m = 0u128;
        for u in 1..=self.order {
            if u != v && self.adjacent(u, v) {
                m |= 1 << (u - 1);
            }
        }
        m
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let mut bits = self.bits.clone();
        bits.xor_assign(&PairBits::ones(bits.len()));
        Graph {
            order: self.order,
            bits,
        }
    }

    /// Subgraph induced by `a`, relabeled to `1..=|a|` by ascending rank.
    pub fn induced(&self, a: &[usize]) -> Result<Graph> {
        let set = check_vertex_set(self.order, a)?;
        let m = set.len();
        let mut g = Graph::empty(m);
        for i in 1..=m {
            for j in i + 1..=m {
                if self.adjacent(set[i - 1], set[j - 1]) {
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// True iff `sub`'s edge set is contained in this graph's (equal orders).
    pub fn contains_subgraph_edges(&self, sub: &Graph) -> bool {
        debug_assert_eq!(self.order, sub.order);
        self.bits
            .words
            .iter()
            .zip(&sub.bits.words)
            .all(|(a, b)| b & !a == 0)
    }

    /// The edge bitmask as a `u128` (order ≤ 16 only).
    pub fn mask_u128(&self) -> u128 {
        self.bits.as_u128()
    }
}

/// The canonical maximal matching on `[k]`: pairs `{1,2}, {3,4}, …`, ending
/// at `{k−1, k}` for even `k` and `{k−2, k−1}` for odd `k`.
pub fn canonical_matching(k: usize) -> Vec<(usize, usize)> {
    (0..k / 2).map(|i| (2 * i + 1, 2 * i + 2)).collect()
}

/// Transitive tournament of order `k`: `i → j` iff `i < j`.
pub fn transitive_tournament(k: usize) -> Tournament {
    Tournament::new_ascending(k)
}

/// Complement of the canonical maximal matching on `[k]`.
pub fn anti_matching(k: usize) -> Graph {
    let mut g = Graph::complete(k);
    for (u, v) in canonical_matching(k) {
        g.set_edge(u, v, false);
    }
    g
}

/// The directed 3-cycle `1 → 2 → 3 → 1`.
pub fn cyclic_triangle() -> Tournament {
    Tournament::from_fn(3, |i, j| matches!((i, j), (1, 2) | (2, 3)))
}

/// Circulant (rotation-invariant) tournament: `i → j` iff
/// `(j − i) mod k` lies in `forward`. Requires odd `k ≥ 1` and, for every
/// residue `r ∈ {1, …, k−1}`, exactly one of `r` and `k − r` in `forward`
/// (otherwise some pair would be unoriented or doubly oriented).
pub fn circulant_tournament(k: usize, forward: &[usize]) -> crate::error::Result<Tournament> {
    use crate::error::Error;
    if k == 0 || k % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "circulant tournaments need odd order, got {k}"
        )));
    }
    let mut is_forward = vec![false; k];
    for &r in forward {
        if r == 0 || r >= k {
            return Err(Error::InvalidArgument(format!(
                "residue {r} out of range 1..{k}"
            )));
        }
        is_forward[r] = true;
    }
    for r in 1..k {
        if is_forward[r] == is_forward[k - r] {
            return Err(Error::InvalidArgument(format!(
                "residues {r} and {} must appear exactly once between them",
                k - r
            )));
        }
    }
    Ok(Tournament::from_fn(k, |i, j| is_forward[(j - i) % k]))
}

/// A permutation of `{1, …, k}`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// The identity on `{1, …, k}`.
    pub fn identity(k: usize) -> Self {
        Permutation {
            image: (1..=k).collect(),
        }
    }

    /// Builds a permutation from its image sequence (`image[i-1] = σ(i)`),
    /// validating bijectivity over `1..=len`.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let k = image.len();
        let mut seen = vec![false; k + 1];
        for &v in &image {
            if v == 0 || v > k || seen[v] {
                return Err(Error::NotAPermutation { length: k });
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// Domain size.
    pub fn len(&self) -> usize {
        self.image.len()
    }

    /// True iff the domain is empty (never for valid structures).
    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Applies the permutation to a vertex.
    pub fn apply(&self, v: usize) -> usize {
        self.image[v - 1]
    }

    /// The image sequence.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let k = self.image.len();
        let mut inv = vec![0; k];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { image: inv }
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation {
            image: (1..=self.len())
                .map(|v| self.apply(other.apply(v)))
                .collect(),
        }
    }
}

/// Calls `f` with every permutation image of `{1, …, k}` in lexicographic
/// order; `f` returning `false` stops the enumeration early.
pub fn for_each_permutation(k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut image: Vec<usize> = (1..=k).collect();
    loop {
        if !f(&image) {
            return;
        }
        // Advance to the next permutation in lexicographic order.
        let Some(i) = (0..k.saturating_sub(1)).rfind(|&i| image[i] < image[i + 1]) else {
            return;
        };
        let j = (i + 1..k).rfind(|&j| image[j] > image[i]).unwrap();
        image.swap(i, j);
        image[i + 1..].reverse();
    }
}

/// The tournament obtained by relabeling `t` along `sigma`: the directed edge
/// `(u, v)` becomes `(σ(u), σ(v))`. Errors if the sizes differ.
pub fn apply_permutation(t: &Tournament, sigma: &Permutation) -> Result<Tournament> {
    if sigma.len() != t.order() {
        return Err(Error::OrderMismatch {
            expected: t.order(),
            found: sigma.len(),
        });
    }
    let k = t.order();
    let mut out = Tournament::new_ascending(k);
    for i in 1..=k {
        for j in i + 1..=k {
            let (si, sj) = (sigma.apply(i), sigma.apply(j));
            let forward = t.orients(i, j);
            let (a, b) = if forward { (si, sj) } else { (sj, si) };
            if !out.orients(a, b) {
                out.flip_pair(a, b);
            }
        }
    }
    Ok(out)
}

/// Relabels a graph along `sigma` (edge `{u,v}` becomes `{σ(u),σ(v)}`).
pub fn apply_permutation_graph(g: &Graph, sigma: &Permutation) -> Result<Graph> {
    if sigma.len() != g.order() {
        return Err(Error::OrderMismatch {
            expected: g.order(),
            found: sigma.len(),
        });
    }
    let k = g.order();
    let mut out = Graph::empty(k);
    for i in 1..=k {
        for j in i + 1..=k {
            if g.adjacent(i, j) {
                out.set_edge(sigma.apply(i), sigma.apply(j), true);
            }
        }
    }
    Ok(out)
}

/// The set of unordered pairs on which two tournaments of equal order
/// disagree, as sorted pairs `(i, j)` with `i < j` in pair-index order.
pub fn symdiff_edges(t1: &Tournament, t2: &Tournament) -> Result<Vec<(usize, usize)>> {
    if t1.order() != t2.order() {
        return Err(Error::OrderMismatch {
            expected: t1.order(),
            found: t2.order(),
        });
    }
    let k = t1.order();
    let mut out = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            if t1.orients(i, j) != t2.orients(i, j) {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// Number of pairs on which two tournaments of equal order disagree.
pub fn symdiff_count(t1: &Tournament, t2: &Tournament) -> Result<usize> {
    if t1.order() != t2.order() {
        return Err(Error::OrderMismatch {
            expected: t1.order(),
            found: t2.order(),
        });
    }
    Ok(t1.bits().hamming_distance(t2.bits()))
}

/// Uniformly random tournament of order `k`: each pair's orientation is one
/// bit of the splitmix64 stream for `seed`, consumed in pair-index order
/// (bit set ⇒ low → high).
pub fn random_tournament(k: usize, seed: u64) -> Tournament {
    let mut rng = SplitMix64::new(seed);
    Tournament::from_fn(k, |_, _| rng.next_bit())
}

/// Uniformly random graph of order `k`, same bit-stream convention as
/// [`random_tournament`] (bit set ⇒ edge present).
pub fn random_graph(k: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::empty(k);
    for i in 1..=k {
        for j in i + 1..=k {
            if rng.next_bit() {
                g.set_edge(i, j, true);
            }
        }
    }
    g
}

/// A vertex coloring: `n` values in `1..=palette`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coloring {
    palette: usize,
    colors: Vec<usize>,
}

impl Coloring {
    /// Builds a coloring, validating every value lies in `1..=palette`.
    pub fn new(palette: usize, colors: Vec<usize>) -> Result<Self> {
        if palette == 0 {
            return Err(Error::InvalidArgument("palette must be positive".into()));
        }
        for (idx, &c) in colors.iter().enumerate() {
            if c == 0 || c > palette {
                return Err(Error::InvalidArgument(format!(
                    "color {c} of vertex {} outside 1..={palette}",
                    idx + 1
                )));
            }
        }
        Ok(Coloring { palette, colors })
    }

    /// Number of colors in the palette.
    pub fn palette(&self) -> usize {
        self.palette
    }

    /// Number of colored vertices.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    /// True iff no vertex is colored (never for valid hosts).
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color of vertex `v` (1-based).
    pub fn color(&self, v: usize) -> usize {
        self.colors[v - 1]
    }

    /// The raw color sequence.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Vertices of each color class, indexed by color − 1; classes may be
    /// empty.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.palette];
        for (idx, &c) in self.colors.iter().enumerate() {
            out[c - 1].push(idx + 1);
        }
        out
    }

    /// True iff every palette color is used.
    pub fn is_surjective(&self) -> bool {
        self.classes().iter().all(|class| !class.is_empty())
    }

    /// The coloring obtained by renaming colors along `sigma` (palette-sized).
    pub fn recolored(&self, sigma: &Permutation) -> Result<Coloring> {
        if sigma.len() != self.palette {
            return Err(Error::PaletteMismatch {
                expected: self.palette,
                found: sigma.len(),
            });
        }
        Coloring::new(
            self.palette,
            self.colors.iter().map(|&c| sigma.apply(c)).collect(),
        )
    }
}

/// Uniform-ish random coloring of `n` vertices with the given palette.
pub fn random_coloring(n: usize, palette: usize, seed: u64) -> Coloring {
    let mut rng = SplitMix64::new(seed);
    Coloring::new(
        palette,
        (0..n)
            .map(|_| rng.next_below(palette as u64) as usize + 1)
            .collect(),
    )
    .expect("generated colors are in range")
}

/// A graph together with a coloring of its vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredGraph {
    graph: Graph,
    coloring: Coloring,
}

impl ColoredGraph {
    /// Pairs a graph with a coloring; errors if the lengths disagree.
    pub fn new(graph: Graph, coloring: Coloring) -> Result<Self> {
        if coloring.len() != graph.order() {
            return Err(Error::ColoringLength {
                length: coloring.len(),
                order: graph.order(),
            });
        }
        Ok(ColoredGraph { graph, coloring })
    }

    /// The underlying graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The vertex coloring.
    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    /// Host order.
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Palette size.
    pub fn palette(&self) -> usize {
        self.coloring.palette()
    }
}

/// A tournament together with a coloring of its vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredTournament {
    tournament: Tournament,
    coloring: Coloring,
}

impl ColoredTournament {
    /// Pairs a tournament with a coloring; errors if the lengths disagree.
    pub fn new(tournament: Tournament, coloring: Coloring) -> Result<Self> {
        if coloring.len() != tournament.order() {
            return Err(Error::ColoringLength {
                length: coloring.len(),
                order: tournament.order(),
            });
        }
        Ok(ColoredTournament {
            tournament,
            coloring,
        })
    }

    /// The underlying tournament.
    pub fn tournament(&self) -> &Tournament {
        &self.tournament
    }

    /// The vertex coloring.
    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    /// Host order.
    pub fn order(&self) -> usize {
        self.tournament.order()
    }

    /// Palette size.
    pub fn palette(&self) -> usize {
        self.coloring.palette()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_tournaments_are_rotation_invariant() {
        assert_eq!(circulant_tournament(3, &[1]).unwrap(), cyclic_triangle());
        let t = circulant_tournament(11, &[1, 3, 4, 5, 9]).unwrap();
        for v in 1..=11 {
            assert_eq!(t.out_degree(v), 5, "regular by rotation");
        }
        // Rotating every vertex by one is an automorphism.
        let rotate =
            Permutation::from_image((1..=11).map(|v| v % 11 + 1).collect()).unwrap();
        assert_eq!(apply_permutation(&t, &rotate).unwrap(), t);
        assert!(circulant_tournament(4, &[1, 2]).is_err(), "even order");
        assert!(circulant_tournament(5, &[1, 4]).is_err(), "clashing residues");
        assert!(circulant_tournament(5, &[1]).is_err(), "unoriented residues");
        assert!(circulant_tournament(5, &[0, 1]).is_err(), "residue range");
    }

    #[test]
    fn pair_index_is_lexicographic() {
        assert_eq!(pair_index(3, 1, 2), 0);
        assert_eq!(pair_index(3, 1, 3), 1);
        assert_eq!(pair_index(3, 2, 3), 2);
        // Round trip across several orders.
        for k in 2..=10 {
            let mut expected = 0;
            for i in 1..=k {
                for j in i + 1..=k {
                    assert_eq!(pair_index(k, i, j), expected);
                    assert_eq!(pair_at(k, expected), (i, j));
                    expected += 1;
                }
            }
            assert_eq!(expected, num_pairs(k));
        }
    }

    #[test]
    fn transitive_tournament_matches_definition() {
        let t = transitive_tournament(3);
        assert!(t.orients(1, 2));
        assert!(t.orients(1, 3));
        assert!(t.orients(2, 3));
        assert_eq!(transitive_tournament(1).order(), 1);
        assert!(transitive_tournament(5).is_transitive());
        assert_eq!(
            transitive_tournament(4).topological_order(),
            Some(vec![1, 2, 3, 4])
        );
    }

    #[test]
    fn cyclic_triangle_is_not_transitive() {
        let tri = cyclic_triangle();
        assert!(tri.orients(1, 2));
        assert!(tri.orients(2, 3));
        assert!(tri.orients(3, 1));
        assert!(!tri.is_transitive());
        assert!(transitive_tournament(1).is_transitive());
    }

    #[test]
    fn anti_matching_small_cases() {
        let m2 = anti_matching(2);
        assert_eq!(m2.edge_count(), 0);
        let m3 = anti_matching(3);
        assert_eq!(m3.edge_list(), vec![(1, 3), (2, 3)]);
        let m5 = anti_matching(5);
        assert_eq!(m5.edge_count(), 10 - 2);
    }

    #[test]
    fn induced_relabels_by_rank() {
        let t5 = transitive_tournament(5);
        let sub = t5.induced(&[2, 4, 5]).unwrap();
        assert_eq!(sub, transitive_tournament(3));
        let tri = cyclic_triangle();
        let edge = tri.induced(&[1, 2]).unwrap();
        assert!(edge.orients(1, 2));
        let all: Vec<usize> = (1..=3).collect();
        assert_eq!(tri.induced(&all).unwrap(), tri);
        assert_eq!(tri.induced(&[]), Err(Error::EmptyVertexSet));
        assert!(matches!(
            tri.induced(&[1, 1]),
            Err(Error::DuplicateVertex { .. })
        ));
    }

    #[test]
    fn apply_permutation_round_trips() {
        let t = random_tournament(6, 11);
        let sigma = Permutation::from_image(vec![3, 1, 6, 2, 5, 4]).unwrap();
        let moved = apply_permutation(&t, &sigma).unwrap();
        let back = apply_permutation(&moved, &sigma.inverse()).unwrap();
        assert_eq!(back, t);
        let id = Permutation::identity(6);
        assert_eq!(apply_permutation(&t, &id).unwrap(), t);
    }

    #[test]
    fn rotating_the_cyclic_triangle_fixes_it() {
        let tri = cyclic_triangle();
        let rot = Permutation::from_image(vec![2, 3, 1]).unwrap();
        assert_eq!(apply_permutation(&tri, &rot).unwrap(), tri);
    }

    #[test]
    fn symdiff_matches_brute_force() {
        let a = random_tournament(7, 1);
        let b = random_tournament(7, 2);
        let sd = symdiff_edges(&a, &b).unwrap();
        assert_eq!(sd.len(), symdiff_count(&a, &b).unwrap());
        assert!(symdiff_edges(&a, &a).unwrap().is_empty());
        let rev = a.reversed();
        assert_eq!(symdiff_count(&a, &rev).unwrap(), num_pairs(7));
        // Symmetry of the symmetric difference.
        assert_eq!(sd, symdiff_edges(&b, &a).unwrap());
    }

    #[test]
    fn random_tournament_is_reproducible() {
        assert_eq!(random_tournament(9, 1234), random_tournament(9, 1234));
        assert_ne!(
            random_tournament(9, 1234).bits(),
            random_tournament(9, 1235).bits()
        );
        assert_eq!(random_tournament(1, 7).order(), 1);
    }

    #[test]
    fn transitive_fraction_at_order_five_matches_uniform_model() {
        // Out of 2^10 labeled tournaments on 5 vertices, exactly 5! are
        // transitive; a seeded sample should land near 120/1024.
        let samples = 10_000;
        let hits = (0..samples)
            .filter(|&s| random_tournament(5, 0xABCD_0000 + s as u64).is_transitive())
            .count();
        let expected = samples as f64 * 120.0 / 1024.0;
        let tol = 3.0 * (samples as f64 * 0.117 * 0.883).sqrt();
        assert!(
            (hits as f64 - expected).abs() < tol,
            "hits {hits} too far from {expected}"
        );
    }

    #[test]
    fn permutation_enumeration_is_lexicographic_and_complete() {
        let mut seen = Vec::new();
        for_each_permutation(3, |img| {
            seen.push(img.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1],
            ]
        );
        let mut count = 0u64;
        for_each_permutation(6, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 720);
    }

    #[test]
    fn coloring_validation_and_classes() {
        assert!(Coloring::new(2, vec![1, 2, 3]).is_err());
        let c = Coloring::new(3, vec![1, 2, 2, 1]).unwrap();
        assert_eq!(c.classes(), vec![vec![1, 4], vec![2, 3], vec![]]);
        assert!(!c.is_surjective());
        let sigma = Permutation::from_image(vec![2, 1, 3]).unwrap();
        assert_eq!(c.recolored(&sigma).unwrap().colors(), &[2, 1, 1, 2]);
    }

    #[test]
    fn colored_wrappers_check_lengths() {
        let g = Graph::complete(3);
        let c = Coloring::new(2, vec![1, 2]).unwrap();
        assert!(matches!(
            ColoredGraph::new(g, c),
            Err(Error::ColoringLength { .. })
        ));
    }

    #[test]
    fn lex_cmp_orders_bit_sequences() {
        // 0111… < 1000…: the first bit dominates.
        let mut a = PairBits::zero(70);
        let mut b = PairBits::zero(70);
        for i in 1..70 {
            a.set(i, true);
        }
        b.set(0, true);
        assert_eq!(a.lex_cmp(&b), std::cmp::Ordering::Less);
        assert_eq!(b.lex_cmp(&a), std::cmp::Ordering::Greater);
        assert_eq!(a.lex_cmp(&a), std::cmp::Ordering::Equal);
    }
}
