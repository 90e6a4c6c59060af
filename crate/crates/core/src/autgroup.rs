//! Order isomorphisms, automorphism groups, and exhaustive enumeration of
//! small lattices.
//!
//! Isomorphism search is plain backtracking, made fast by iterated invariant
//! refinement: elements are colored by (down-set, up-set) color multisets
//! until stable, and the search only matches elements of equal color,
//! pivoting on the rarest color class first. A bijective order isomorphism
//! between lattices automatically preserves meet and join, so one search
//! covers posets and lattices alike.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::{BuildOptions, FiniteLattice, Poset};
use std::collections::{BTreeMap, HashMap};

fn up_sets(down: &[ElemSet]) -> Vec<ElemSet> {
    let n = down.len();
    let mut up = vec![ElemSet::empty(n); n];
    for y in 0..n {
        for x in down[y].iter() {
            up[x].insert(y);
        }
    }
    up
}

type Signature = (u32, Vec<u32>, Vec<u32>);

fn signature(
    down: &[ElemSet],
    up: &[ElemSet],
    colors: &[u32],
    x: usize,
) -> Signature {
    let mut lo: Vec<u32> =
        down[x].iter().filter(|&y| y != x).map(|y| colors[y]).collect();
    lo.sort_unstable();
    let mut hi: Vec<u32> = up[x].iter().filter(|&y| y != x).map(|y| colors[y]).collect();
    hi.sort_unstable();
    (colors[x], lo, hi)
}

/// Jointly refines invariant colors on both structures. Returns `None` as
/// soon as the color class sizes disagree (no isomorphism possible).
fn joint_refine(da: &[ElemSet], db: &[ElemSet]) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = da.len();
    if n != db.len() {
        return None;
    }
    let (ua, ub) = (up_sets(da), up_sets(db));
    let mut ca = vec![0u32; n];
    let mut cb = vec![0u32; n];
    let mut num_colors = 1usize;
    loop {
        let sigs_a: Vec<Signature> = (0..n).map(|x| signature(da, &ua, &ca, x)).collect();
        let sigs_b: Vec<Signature> = (0..n).map(|x| signature(db, &ub, &cb, x)).collect();
        let mut table: Vec<&Signature> = sigs_a.iter().chain(sigs_b.iter()).collect();
        table.sort();
        table.dedup();
        let idx = |s: &Signature| table.binary_search(&s).unwrap() as u32;
        let new_ca: Vec<u32> = sigs_a.iter().map(idx).collect();
        let new_cb: Vec<u32> = sigs_b.iter().map(idx).collect();
        let mut count_a = vec![0usize; table.len()];
        let mut count_b = vec![0usize; table.len()];
        for &c in &new_ca {
            count_a[c as usize] += 1;
        }
        for &c in &new_cb {
            count_b[c as usize] += 1;
        }
        if count_a != count_b {
            return None;
        }
        if table.len() == num_colors {
            return Some((new_ca, new_cb));
        }
        num_colors = table.len();
        ca = new_ca;
        cb = new_cb;
    }
}

/// All order isomorphisms from the first structure onto the second, as maps
/// `out[x] = image of x`, up to `limit` of them.
pub fn order_isomorphisms_limited(
    da: &[ElemSet],
    db: &[ElemSet],
    limit: usize,
) -> Vec<Vec<u32>> {
    let n = da.len();
    if n != db.len() || limit == 0 {
        return Vec::new();
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    let Some((ca, cb)) = joint_refine(da, db) else {
        return Vec::new();
    };
    let mut class_size: HashMap<u32, usize> = HashMap::new();
    for &c in &ca {
        *class_size.entry(c).or_insert(0) += 1;
    }
    let mut pivot_order: Vec<usize> = (0..n).collect();
    pivot_order.sort_by_key(|&x| (class_size[&ca[x]], ca[x], x));
    let mut candidates: HashMap<u32, Vec<usize>> = HashMap::new();
    for (y, &c) in cb.iter().enumerate() {
        candidates.entry(c).or_default().push(y);
    }

    struct Dfs<'a> {
        da: &'a [ElemSet],
        db: &'a [ElemSet],
        pivot_order: &'a [usize],
        candidates: &'a HashMap<u32, Vec<usize>>,
        ca: &'a [u32],
        map: Vec<u32>,
        assigned: Vec<usize>,
        used: Vec<bool>,
        out: Vec<Vec<u32>>,
        limit: usize,
    }

    impl Dfs<'_> {
        fn run(&mut self, depth: usize) {
            if self.out.len() >= self.limit {
                return;
            }
            if depth == self.pivot_order.len() {
                self.out.push(self.map.clone());
                return;
            }
            let x = self.pivot_order[depth];
            for &y in &self.candidates[&self.ca[x]] {
                if self.used[y] {
                    continue;
                }
                let ok = self.assigned.iter().all(|&x2| {
                    let y2 = self.map[x2] as usize;
                    self.da[x].contains(x2) == self.db[y].contains(y2)
                        && self.da[x2].contains(x) == self.db[y2].contains(y)
                });
                if ok {
                    self.map[x] = y as u32;
                    self.used[y] = true;
                    self.assigned.push(x);
                    self.run(depth + 1);
                    self.assigned.pop();
                    self.used[y] = false;
                }
            }
        }
    }

    let mut dfs = Dfs {
        da,
        db,
        pivot_order: &pivot_order,
        candidates: &candidates,
        ca: &ca,
        map: vec![0; n],
        assigned: Vec::with_capacity(n),
        used: vec![false; n],
        out: Vec::new(),
        limit,
    };
    dfs.run(0);
    dfs.out
}

fn lattice_down(l: &FiniteLattice) -> Vec<ElemSet> {
    (0..l.size()).map(|i| l.down_set(i).clone()).collect()
}

pub fn lattice_isomorphisms(a: &FiniteLattice, b: &FiniteLattice) -> Vec<Vec<u32>> {
    order_isomorphisms_limited(&lattice_down(a), &lattice_down(b), usize::MAX)
}

pub fn are_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> bool {
    !order_isomorphisms_limited(&lattice_down(a), &lattice_down(b), 1).is_empty()
}

pub fn posets_isomorphic(a: &Poset, b: &Poset) -> bool {
    !order_isomorphisms_limited(&a.down, &b.down, 1).is_empty()
}

/// A permutation group on {0..degree-1}, stored extensionally: the full
/// element list plus a small generating set extracted greedily. At the sizes
/// this crate works with, exact closure enumeration is cheaper and safer
/// than a stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Vec<u32>>,
    generators: Vec<Vec<u32>>,
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    // apply b first, then a
    b.iter().map(|&i| a[i as usize]).collect()
}

fn close_under_composition(degree: usize, gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
    seen.insert(identity.clone(), ());
    let mut queue = vec![identity];
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head].clone();
        head += 1;
        for g in gens {
            let next = compose(g, &cur);
            if seen.insert(next.clone(), ()).is_none() {
                queue.push(next);
            }
        }
    }
    queue.sort_unstable();
    queue
}

impl PermGroup {
    pub fn from_elements(degree: usize, mut elements: Vec<Vec<u32>>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        debug_assert!(!elements.is_empty(), "a group contains the identity");
        let mut generators: Vec<Vec<u32>> = Vec::new();
        let mut generated: Vec<Vec<u32>> = close_under_composition(degree, &generators);
        for p in &elements {
            if generated.binary_search(p).is_err() {
                generators.push(p.clone());
                generated = close_under_composition(degree, &generators);
                if generated.len() == elements.len() {
                    break;
                }
            }
        }
        debug_assert_eq!(generated.len(), elements.len());
        PermGroup { degree, elements, generators }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_elements(degree, vec![(0..degree as u32).collect()])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    fn perm_order(p: &[u32]) -> usize {
        let mut seen = vec![false; p.len()];
        let mut result = 1usize;
        for start in 0..p.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = p[cur] as usize;
                len += 1;
            }
            result = lcm(result, len);
        }
        result
    }

    /// Multiset of element orders; with the group order this is a useful,
    /// though inexact, abstract-group fingerprint.
    pub fn element_order_multiset(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for p in &self.elements {
            *out.entry(Self::perm_order(p)).or_insert(0) += 1;
        }
        out
    }

    pub fn cycle_string(p: &[u32], labels: Option<&[String]>) -> String {
        let name = |i: usize| match labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        };
        let mut seen = vec![false; p.len()];
        let mut parts = Vec::new();
        for start in 0..p.len() {
            if seen[start] || p[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(name(cur));
                cur = p[cur] as usize;
            }
            parts.push(format!("({})", cycle.join(" ")));
        }
        if parts.is_empty() {
            "()".to_string()
        } else {
            parts.join("")
        }
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Heuristic abstract-group comparison: equal order and equal element-order
/// multiset. Exact on very small groups, but only a fingerprint in general.
pub fn same_abstract_group_heuristic(a: &PermGroup, b: &PermGroup) -> bool {
    a.order() == b.order() && a.element_order_multiset() == b.element_order_multiset()
}

pub fn automorphisms(l: &FiniteLattice) -> PermGroup {
    let down = lattice_down(l);
    let all = order_isomorphisms_limited(&down, &down, usize::MAX);
    PermGroup::from_elements(l.size(), all)
}

pub fn is_rigid(l: &FiniteLattice) -> bool {
    let down = lattice_down(l);
    order_isomorphisms_limited(&down, &down, 2).len() == 1
}

pub(crate) fn bits(mut s: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let b = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(b)
        }
    })
}

fn unique_max(set: u64, downs: &[u64]) -> bool {
    let mut maximal = 0usize;
    for m in bits(set) {
        let above = bits(set).any(|j| j != m && downs[j] >> m & 1 == 1);
        if !above {
            maximal += 1;
            if maximal > 1 {
                return false;
            }
        }
    }
    maximal == 1
}

/// Whether a new element may take the member set of `s` as its lower
/// covers: `s` must be a nonempty antichain and every pairwise meet with an
/// existing element must stay unique. Returns the new element's down-set
/// mask on success. `downs[x]` is the down-set mask of element `x`, in a
/// bottom-up construction where element 0 is the unique bottom.
pub(crate) fn try_extend(downs: &[u64], s: u64) -> Option<u64> {
    if s == 0 {
        return None;
    }
    let k = downs.len();
    let mut d = 1u64 << k;
    for a in bits(s) {
        if downs[a] & s != 1 << a {
            return None; // not an antichain
        }
        d |= downs[a];
    }
    for j in 0..k {
        if !unique_max(d & downs[j], downs) {
            return None; // pairwise meet would be ambiguous
        }
    }
    Some(d)
}

pub(crate) fn lattice_from_masks(
    downs: &[u64],
    covers: &[(usize, usize)],
) -> FiniteLattice {
    let n = downs.len();
    let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let (l, _) =
        FiniteLattice::build_from_cover_ids(labels, covers.to_vec(), BuildOptions::default())
            .expect("construction maintains the lattice property");
    l
}

/// Enumerates every lattice with exactly `n` elements, built bottom-up: each
/// new element picks a nonempty antichain of lower covers while pairwise
/// meets stay unique, and the last element closes the poset as its top. A
/// meet-semilattice with a top is a lattice, so every emission is valid; the
/// same unlabeled lattice is emitted once per admissible insertion order, so
/// callers interested in isomorphism classes must deduplicate.
pub fn enumerate_lattices(n: usize, f: &mut dyn FnMut(&FiniteLattice)) {
    assert!(n <= 16, "mask-based enumeration supports n <= 16");
    if n == 0 {
        return;
    }
    if n == 1 {
        f(&crate::lattice::chain(1));
        return;
    }
    let mut downs: Vec<u64> = vec![1];
    let mut covers: Vec<(usize, usize)> = Vec::new();
    rec(n, &mut downs, &mut covers, 0, f);

    fn rec(
        n: usize,
        downs: &mut Vec<u64>,
        covers: &mut Vec<(usize, usize)>,
        covered: u64,
        f: &mut dyn FnMut(&FiniteLattice),
    ) {
        let k = downs.len();
        let all = (1u64 << k) - 1;
        if k == n - 1 {
            let maximals = all & !covered;
            let before = covers.len();
            covers.extend(bits(maximals).map(|m| (m, k)));
            downs.push(all | 1 << k);
            f(&lattice_from_masks(downs, covers));
            downs.pop();
            covers.truncate(before);
            return;
        }
        for s in 1..=all {
            let Some(d) = try_extend(downs, s) else {
                continue;
            };
            downs.push(d);
            let before = covers.len();
            covers.extend(bits(s).map(|a| (a, k)));
            rec(n, downs, covers, covered | s, f);
            covers.truncate(before);
            downs.pop();
        }
    }
}

type Fingerprint = (usize, usize, Vec<(usize, usize, usize, usize)>);

fn fingerprint(l: &FiniteLattice) -> Fingerprint {
    let mut per_elem: Vec<(usize, usize, usize, usize)> = (0..l.size())
        .map(|x| {
            (
                l.height_of(x),
                l.depth_of(x),
                l.lower_covers(x).len(),
                l.upper_covers(x).len(),
            )
        })
        .collect();
    per_elem.sort_unstable();
    (l.size(), l.covers().len(), per_elem)
}

/// Collects pairwise non-isomorphic representatives of all lattices with
/// exactly `n` elements.
pub fn lattices_up_to_isomorphism(n: usize) -> Vec<FiniteLattice> {
    let mut buckets: BTreeMap<Fingerprint, Vec<FiniteLattice>> = BTreeMap::new();
    enumerate_lattices(n, &mut |l| {
        let bucket = buckets.entry(fingerprint(l)).or_default();
        if !bucket.iter().any(|seen| are_isomorphic(seen, l)) {
            bucket.push(l.clone());
        }
    });
    buckets.into_values().flatten().collect()
}

/// Searches all lattices of at most `max_size` elements, ascending, for
/// rigid simple ones, and returns the first `count` pairwise non-isomorphic
/// hits.
pub fn find_rigid_simple(max_size: usize, count: usize) -> Result<Vec<FiniteLattice>> {
    let mut found: Vec<FiniteLattice> = Vec::new();
    for n in 1..=max_size {
        if found.len() >= count {
            break;
        }
        enumerate_lattices(n, &mut |l| {
            if found.len() >= count {
                return;
            }
            if crate::congruence::is_simple(l)
                && is_rigid(l)
                && !found
                    .iter()
                    .filter(|seen| seen.size() == l.size())
                    .any(|seen| are_isomorphic(seen, l))
            {
                found.push(l.clone());
            }
        });
    }
    if found.len() < count {
        return Err(Error::NotEnoughFound { wanted: count, found: found.len() });
    }
    found.truncate(count);
    Ok(found)
}
