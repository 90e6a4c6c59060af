//! Lattice congruences: compatible partitions, principal congruence
//! generation, and the congruence lattice.
//!
//! A congruence is an equivalence relation that is compatible with meet and
//! join; its blocks are convex sublattices. `principal` closes a single
//! generating pair with a worklist: whenever x and y become equivalent, so
//! must x∧z with y∧z and x∨z with y∨z for every z. `all_congruences` closes
//! the set of principal congruences under pairwise join, which reaches every
//! congruence because each one is the join of the principal congruences of
//! its collapsed pairs.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::{BuildOptions, ElemId, FiniteLattice, Poset};
use std::collections::HashMap;
use std::collections::VecDeque;

/// Cap on the number of congruences `all_congruences` will enumerate.
pub const DEFAULT_MAX_CONGRUENCES: usize = 1 << 20;

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] as usize != r {
            r = self.parent[r] as usize;
        }
        // path compression
        let mut c = x;
        while self.parent[c] as usize != r {
            let next = self.parent[c] as usize;
            self.parent[c] = r as u32;
            c = next;
        }
        r
    }

    /// Returns true when the classes were distinct before.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi] = lo as u32;
        true
    }
}

/// A partition of the element set in canonical form: `block_of[x]` is the
/// index of x's block, blocks numbered by first appearance, so equality of
/// partitions is structural equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    block_of: Vec<u32>,
    num_blocks: u32,
}

impl Congruence {
    pub fn delta(n: usize) -> Self {
        Congruence { block_of: (0..n as u32).collect(), num_blocks: n as u32 }
    }

    pub fn nabla(n: usize) -> Self {
        Congruence { block_of: vec![0; n], num_blocks: if n == 0 { 0 } else { 1 } }
    }

    fn from_union_find(uf: &mut UnionFind) -> Self {
        let n = uf.parent.len();
        let mut block_of = vec![u32::MAX; n];
        let mut next = 0u32;
        for x in 0..n {
            let r = uf.find(x);
            if block_of[r] == u32::MAX {
                block_of[r] = next;
                next += 1;
            }
            block_of[x] = block_of[r];
        }
        Congruence { block_of, num_blocks: next }
    }

    /// Builds from an arbitrary block assignment, renumbering canonically.
    pub fn from_block_assignment(assignment: &[u32]) -> Self {
        let mut remap: HashMap<u32, u32> = HashMap::new();
        let mut block_of = Vec::with_capacity(assignment.len());
        for &b in assignment {
            let next = remap.len() as u32;
            let id = *remap.entry(b).or_insert(next);
            block_of.push(id);
        }
        Congruence { block_of, num_blocks: remap.len() as u32 }
    }

    pub fn universe(&self) -> usize {
        self.block_of.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks as usize
    }

    #[inline]
    pub fn same_block(&self, x: ElemId, y: ElemId) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn block_index(&self, x: ElemId) -> usize {
        self.block_of[x] as usize
    }

    /// Blocks sorted by least member; members ascend within each block.
    pub fn blocks(&self) -> Vec<Vec<ElemId>> {
        let mut blocks: Vec<Vec<ElemId>> = vec![Vec::new(); self.num_blocks as usize];
        for (x, &b) in self.block_of.iter().enumerate() {
            blocks[b as usize].push(x);
        }
        blocks
    }

    pub fn block_of_element(&self, x: ElemId) -> Vec<ElemId> {
        (0..self.universe()).filter(|&y| self.same_block(x, y)).collect()
    }

    pub fn is_delta(&self) -> bool {
        self.num_blocks as usize == self.universe()
    }

    pub fn is_nabla(&self) -> bool {
        self.num_blocks <= 1
    }

    /// Refinement order: self <= other iff every block of self lies inside a
    /// block of other. This is the order of the congruence lattice.
    pub fn refines(&self, other: &Congruence) -> bool {
        debug_assert_eq!(self.universe(), other.universe());
        // block b of self maps into the other-block of its first member
        let mut image = vec![u32::MAX; self.num_blocks as usize];
        for x in 0..self.universe() {
            let b = self.block_of[x] as usize;
            if image[b] == u32::MAX {
                image[b] = other.block_of[x];
            } else if image[b] != other.block_of[x] {
                return false;
            }
        }
        true
    }

    /// Join in the congruence lattice: the transitive closure of the union.
    /// For lattice congruences the closure is already compatible.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let n = self.universe();
        let mut uf = UnionFind::new(n);
        let mut first_self = vec![u32::MAX; self.num_blocks as usize];
        let mut first_other = vec![u32::MAX; other.num_blocks as usize];
        for x in 0..n {
            let b = self.block_of[x] as usize;
            if first_self[b] == u32::MAX {
                first_self[b] = x as u32;
            } else {
                uf.union(first_self[b] as usize, x);
            }
            let b = other.block_of[x] as usize;
            if first_other[b] == u32::MAX {
                first_other[b] = x as u32;
            } else {
                uf.union(first_other[b] as usize, x);
            }
        }
        Congruence::from_union_find(&mut uf)
    }

    /// Meet in the congruence lattice: the common refinement.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        let n = self.universe();
        let mut remap: HashMap<(u32, u32), u32> = HashMap::new();
        let mut block_of = Vec::with_capacity(n);
        for x in 0..n {
            let key = (self.block_of[x], other.block_of[x]);
            let next = remap.len() as u32;
            block_of.push(*remap.entry(key).or_insert(next));
        }
        Congruence { block_of, num_blocks: remap.len() as u32 }
    }

    /// Full compatibility check against a lattice: for every equivalent pair
    /// and every z, meets and joins with z stay equivalent. Quadratic in the
    /// worst case; used as a verification oracle, not on hot paths.
    pub fn is_compatible(&self, l: &FiniteLattice) -> bool {
        let n = l.size();
        debug_assert_eq!(n, self.universe());
        for x in 0..n {
            for y in x + 1..n {
                if !self.same_block(x, y) {
                    continue;
                }
                for z in 0..n {
                    if !self.same_block(l.meet(x, z), l.meet(y, z))
                        || !self.same_block(l.join(x, z), l.join(y, z))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks that every block is a convex sublattice.
    pub fn blocks_are_convex_sublattices(&self, l: &FiniteLattice) -> bool {
        for block in self.blocks() {
            for &x in &block {
                for &y in &block {
                    if !self.same_block(x, l.meet(x, y)) || !self.same_block(x, l.join(x, y)) {
                        return false;
                    }
                }
            }
            // convexity: anything between two members is a member
            for z in 0..self.universe() {
                if self.same_block(block[0], z) {
                    continue;
                }
                for &x in &block {
                    for &y in &block {
                        if l.leq(x, z) && l.leq(z, y) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Partition rendered with element labels, one block per `|`-separated
    /// group; singleton blocks are omitted. Delta renders as "id".
    pub fn display(&self, l: &FiniteLattice) -> String {
        let nontrivial: Vec<String> = self
            .blocks()
            .iter()
            .filter(|b| b.len() > 1)
            .map(|b| b.iter().map(|&x| l.label(x)).collect::<Vec<_>>().join(","))
            .collect();
        if nontrivial.is_empty() {
            "id".to_string()
        } else {
            nontrivial.join(" | ")
        }
    }
}

impl std::fmt::Debug for Congruence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.blocks()).finish()
    }
}

/// Smallest congruence collapsing a and b.
pub fn principal(l: &FiniteLattice, a: ElemId, b: ElemId) -> Congruence {
    let n = l.size();
    let mut uf = UnionFind::new(n);
    let mut queue: VecDeque<(ElemId, ElemId)> = VecDeque::new();
    if uf.union(a, b) {
        queue.push_back((a, b));
    }
    while let Some((x, y)) = queue.pop_front() {
        for z in 0..n {
            let (p, q) = (l.meet(x, z), l.meet(y, z));
            if uf.union(p, q) {
                queue.push_back((p, q));
            }
            let (p, q) = (l.join(x, z), l.join(y, z));
            if uf.union(p, q) {
                queue.push_back((p, q));
            }
        }
    }
    Congruence::from_union_find(&mut uf)
}

/// All distinct principal congruences cg(a, b) over comparable pairs a < b,
/// plus delta. Every principal congruence arises this way because
/// cg(a, b) = cg(a∧b, a∨b).
pub fn principal_congruences(l: &FiniteLattice) -> Vec<Congruence> {
    let n = l.size();
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    let delta = Congruence::delta(n);
    seen.insert(delta.clone(), ());
    out.push(delta);
    for b in 0..n {
        for a in 0..b {
            if !l.leq(a, b) {
                continue;
            }
            let c = principal(l, a, b);
            if seen.insert(c.clone(), ()).is_none() {
                out.push(c);
            }
        }
    }
    out
}

/// Every congruence of the lattice, enumerated by closing the principal
/// congruences under join. Errors out beyond `max` congruences.
pub fn all_congruences_capped(l: &FiniteLattice, max: usize) -> Result<Vec<Congruence>> {
    let principals = principal_congruences(l);
    let mut seen: HashMap<Congruence, ()> = HashMap::new();
    let mut queue: VecDeque<Congruence> = VecDeque::new();
    for c in &principals {
        if seen.insert(c.clone(), ()).is_none() {
            queue.push_back(c.clone());
        }
    }
    while let Some(c) = queue.pop_front() {
        for p in &principals {
            let j = c.join(p);
            if !seen.contains_key(&j) {
                if seen.len() >= max {
                    return Err(Error::SizeLimitExceeded(format!(
                        "more than {max} congruences"
                    )));
                }
                seen.insert(j.clone(), ());
                queue.push_back(j);
            }
        }
    }
    let mut out: Vec<Congruence> = seen.into_keys().collect();
    out.sort_unstable(); // canonical block form, lexicographic
    Ok(out)
}

pub fn all_congruences(l: &FiniteLattice) -> Vec<Congruence> {
    all_congruences_capped(l, DEFAULT_MAX_CONGRUENCES)
        .expect("congruence count within default cap")
}

pub fn congruence_count(l: &FiniteLattice) -> usize {
    all_congruences(l).len()
}

/// A lattice is simple iff it has at least two elements and every prime
/// interval generates the full congruence. (Any congruence above delta
/// collapses some comparable pair, hence by convexity some covering pair.)
pub fn is_simple(l: &FiniteLattice) -> bool {
    if l.size() < 2 {
        return false;
    }
    l.covers().iter().all(|&(a, b)| principal(l, a, b).is_nabla())
}

/// The congruence lattice packaged as a lattice object, elements aligned
/// with `congruences` (sorted lexicographically on canonical block form).
pub struct ConLattice {
    pub lattice: FiniteLattice,
    pub congruences: Vec<Congruence>,
}

impl ConLattice {
    pub fn size(&self) -> usize {
        self.congruences.len()
    }
}

pub fn con_lattice(l: &FiniteLattice) -> Result<ConLattice> {
    let congruences = all_congruences_capped(l, DEFAULT_MAX_CONGRUENCES)?;
    let k = congruences.len();
    let mut covers = Vec::new();
    let mut leq = vec![ElemSet::empty(k); k]; // leq[j] = set of i with c_i <= c_j
    for (i, a) in congruences.iter().enumerate() {
        for (j, b) in congruences.iter().enumerate() {
            if a.refines(b) {
                leq[j].insert(i);
            }
        }
    }
    for j in 0..k {
        for i in leq[j].iter() {
            if i == j {
                continue;
            }
            let strictly_between = leq[j]
                .iter()
                .any(|z| z != i && z != j && leq[z].contains(i) && leq[j].contains(z) && z != j);
            if !strictly_between {
                covers.push((i, j));
            }
        }
    }
    let labels: Vec<String> = if l.size() <= 40 {
        congruences.iter().map(|c| con_label(c, l)).collect()
    } else {
        (0..k).map(|i| format!("c{i}")).collect()
    };
    let (lattice, _) = FiniteLattice::build_from_cover_ids(labels, covers, BuildOptions {
        strict: true,
        max_elements: usize::MAX,
    })?;
    // build_from_cover_ids renumbers into a linear extension; realign.
    let congruences = realign(congruences, &lattice, l);
    Ok(ConLattice { lattice, congruences })
}

fn con_label(c: &Congruence, l: &FiniteLattice) -> String {
    if c.is_delta() {
        "id".into()
    } else if c.is_nabla() {
        "all".into()
    } else {
        c.display(l)
    }
}

fn realign(
    congruences: Vec<Congruence>,
    con_lat: &FiniteLattice,
    base: &FiniteLattice,
) -> Vec<Congruence> {
    // labels of the packaged lattice are unique per congruence
    let by_label: HashMap<String, Congruence> = congruences
        .into_iter()
        .map(|c| (con_label(&c, base), c))
        .collect();
    (0..con_lat.size())
        .map(|i| by_label[con_lat.label(i)].clone())
        .collect()
}

/// Poset of principal congruences, ordered by refinement. Contains delta
/// (cg of any reflexive pair); contains nabla iff nabla is principal.
pub struct CongPoset {
    pub members: Vec<Congruence>,
    pub poset: Poset,
}

impl CongPoset {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

pub fn princ_poset(l: &FiniteLattice) -> CongPoset {
    let mut members = principal_congruences(l);
    members.sort_unstable();
    let k = members.len();
    let mut down = vec![ElemSet::empty(k); k];
    for (i, a) in members.iter().enumerate() {
        for (j, b) in members.iter().enumerate() {
            if a.refines(b) {
                down[j].insert(i);
            }
        }
    }
    let labels = members
        .iter()
        .map(|c| {
            if l.size() <= 40 {
                con_label(c, l)
            } else {
                format!("{} blocks", c.num_blocks())
            }
        })
        .collect();
    CongPoset { members, poset: Poset { labels, down } }
}

/// Quotient lattice L/θ: blocks become elements, ordered by "some member
/// below some member".
pub fn quotient(l: &FiniteLattice, theta: &Congruence) -> Result<FiniteLattice> {
    debug_assert_eq!(l.size(), theta.universe());
    let blocks = theta.blocks();
    let k = blocks.len();
    let mut leq = vec![ElemSet::empty(k); k];
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate() {
            if bi.iter().any(|&x| bj.iter().any(|&y| l.leq(x, y))) {
                leq[j].insert(i);
            }
        }
    }
    let mut covers = Vec::new();
    for j in 0..k {
        for i in leq[j].iter() {
            if i != j {
                let between = leq[j]
                    .iter()
                    .any(|z| z != i && z != j && leq[z].contains(i));
                if !between {
                    covers.push((i, j));
                }
            }
        }
    }
    let labels: Vec<String> = blocks.iter().map(|b| format!("[{}]", l.label(b[0]))).collect();
    Ok(FiniteLattice::build_from_cover_ids(labels, covers, BuildOptions::default())?.0)
}

/// Restriction of a congruence to a sublattice: θ ∩ (S × S), expressed over
/// the index space of `sub` (in the given order). Errors when `sub` is not
/// closed under meet and join.
pub fn restrict_map(
    l: &FiniteLattice,
    sub: &[ElemId],
    theta: &Congruence,
) -> Result<Congruence> {
    if !l.is_sublattice(sub) {
        return Err(Error::NotASublattice);
    }
    let assignment: Vec<u32> = sub.iter().map(|&x| theta.block_index(x) as u32).collect();
    Ok(Congruence::from_block_assignment(&assignment))
}

/// Join-irreducible congruences: the join-irreducible elements of Con(L).
pub fn join_irreducible_congruences(l: &FiniteLattice) -> Result<Vec<Congruence>> {
    let con = con_lattice(l)?;
    let (ji, _) = con.lattice.join_irreducibles();
    Ok(ji.into_iter().map(|i| con.congruences[i].clone()).collect())
}

/// The ⟨|Con L|, |Filt L|, |Id L|⟩ profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CfiProfile {
    pub con_count: usize,
    pub filt_count: usize,
    pub id_count: usize,
}

impl std::fmt::Display for CfiProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "⟨{}, {}, {}⟩", self.con_count, self.filt_count, self.id_count)
    }
}

pub fn cfi_profile(l: &FiniteLattice) -> Result<CfiProfile> {
    Ok(CfiProfile {
        con_count: all_congruences_capped(l, DEFAULT_MAX_CONGRUENCES)?.len(),
        filt_count: crate::ideal::filters(l).len(),
        id_count: crate::ideal::ideals(l).len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, chain, hexagon, m3, n5};

    fn blocks_by_label(c: &Congruence, l: &FiniteLattice) -> Vec<Vec<String>> {
        c.blocks()
            .iter()
            .map(|b| b.iter().map(|&x| l.label(x).to_string()).collect())
            .collect()
    }

    #[test]
    fn principal_on_reflexive_pair_is_delta() {
        let l = m3();
        assert!(principal(&l, 2, 2).is_delta());
    }

    #[test]
    fn principal_in_n5_collapses_only_the_chain_side() {
        let l = n5();
        let a = l.index_of("a").unwrap();
        let c = l.index_of("c").unwrap();
        let theta = principal(&l, a, c);
        assert_eq!(theta.num_blocks(), 4);
        assert!(theta.same_block(a, c));
        assert!(theta.is_compatible(&l));
        assert!(theta.blocks_are_convex_sublattices(&l));
    }

    #[test]
    fn principal_in_n5_from_bottom_spreads() {
        let l = n5();
        let zero = l.index_of("0").unwrap();
        let a = l.index_of("a").unwrap();
        let theta = principal(&l, zero, a);
        let blocks = blocks_by_label(&theta, &l);
        assert_eq!(blocks, vec![vec!["0", "a", "c"], vec!["b", "1"]]);
    }

    #[test]
    fn congruence_counts_of_stock_lattices() {
        assert_eq!(congruence_count(&boolean(3)), 8);
        assert_eq!(congruence_count(&m3()), 2);
        assert_eq!(congruence_count(&n5()), 5);
        assert_eq!(congruence_count(&chain(4)), 8);
        assert_eq!(congruence_count(&hexagon()), 7);
    }

    #[test]
    fn m3_and_subspace_lattices_are_simple() {
        assert!(is_simple(&m3()));
        assert!(!is_simple(&n5()));
        assert!(!is_simple(&chain(1)));
        assert!(is_simple(&chain(2)));
    }

    #[test]
    fn hexagon_principal_poset() {
        // Six principal congruences: delta, the two edge collapses
        // {a,b} and {c,d}, the two chain collapses, and nabla.
        let l = hexagon();
        let pp = princ_poset(&l);
        assert_eq!(pp.size(), 6);
        assert!(pp.members.iter().any(|c| c.is_delta()));
        assert!(pp.members.iter().any(|c| c.is_nabla()));
        let a = l.index_of("a").unwrap();
        let b = l.index_of("b").unwrap();
        let edge = principal(&l, a, b);
        assert_eq!(edge.num_blocks(), 5);
        assert!(pp.members.contains(&edge));
        // the two chain collapses have two blocks of three
        let two_block_count = pp
            .members
            .iter()
            .filter(|c| c.num_blocks() == 2 && !c.is_nabla())
            .count();
        assert_eq!(two_block_count, 2);
    }

    #[test]
    fn con_lattice_of_boolean_3_is_boolean() {
        let con = con_lattice(&boolean(3)).unwrap();
        assert_eq!(con.size(), 8);
        assert!(crate::autgroup::are_isomorphic(&con.lattice, &boolean(3)));
        let ji = join_irreducible_congruences(&boolean(3)).unwrap();
        assert_eq!(ji.len(), 3);
        for c in &ji {
            assert_eq!(c.num_blocks(), 4); // four 2-element blocks
        }
    }

    #[test]
    fn quotient_of_n5_by_bottom_edge_is_a_2_chain() {
        let l = n5();
        let zero = l.index_of("0").unwrap();
        let a = l.index_of("a").unwrap();
        let q = quotient(&l, &principal(&l, zero, a)).unwrap();
        assert_eq!(q.size(), 2);
        assert!(q.is_chain());
    }

    #[test]
    fn restriction_to_a_non_sublattice_is_rejected() {
        let l = m3();
        let a = l.index_of("a").unwrap();
        let b = l.index_of("b").unwrap();
        let theta = Congruence::nabla(l.size());
        assert_eq!(restrict_map(&l, &[a, b], &theta), Err(Error::NotASublattice));
        let sub = vec![l.bottom(), a, b, l.top()];
        let r = restrict_map(&l, &sub, &theta).unwrap();
        assert!(r.is_nabla());
    }

    #[test]
    fn join_and_meet_agree_with_refinement() {
        let l = hexagon();
        let cs = all_congruences(&l);
        for a in &cs {
            for b in &cs {
                let j = a.join(b);
                let m = a.meet(b);
                assert!(a.refines(&j) && b.refines(&j));
                assert!(m.refines(a) && m.refines(b));
                assert!(j.is_compatible(&l));
                assert!(m.is_compatible(&l));
            }
        }
    }

    #[test]
    fn cfi_profiles() {
        assert_eq!(
            cfi_profile(&boolean(2)).unwrap(),
            CfiProfile { con_count: 4, filt_count: 4, id_count: 4 }
        );
        assert_eq!(
            cfi_profile(&m3()).unwrap(),
            CfiProfile { con_count: 2, filt_count: 5, id_count: 5 }
        );
        assert_eq!(
            cfi_profile(&chain(1)).unwrap(),
            CfiProfile { con_count: 1, filt_count: 1, id_count: 1 }
        );
    }
}
