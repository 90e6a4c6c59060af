//! Finite bounded lattices, stored explicitly.
//!
//! A lattice is built from its covering relation (Hasse diagram). Element
//! ids are dense integers renumbered into a linear extension of the order,
//! which makes "highest member of a down-closed set" a single scan and keeps
//! table construction simple. The full order relation and both operation
//! tables are materialized once at build time; all later queries are table
//! lookups.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};

pub type ElemId = usize;

/// Default cap on element count. Tables are n^2, so this is a memory bound.
pub const DEFAULT_MAX_ELEMENTS: usize = 5000;

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    /// In strict mode a transitively redundant cover pair is an error; in
    /// lenient mode it is dropped and reported as a warning.
    pub strict: bool,
    pub max_elements: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { strict: true, max_elements: DEFAULT_MAX_ELEMENTS }
    }
}

#[derive(Clone)]
pub struct FiniteLattice {
    labels: Vec<String>,
    covers: Vec<(ElemId, ElemId)>,
    down: Vec<ElemSet>,
    up: Vec<ElemSet>,
    meet_table: Vec<u32>,
    join_table: Vec<u32>,
    lower_covers: Vec<Vec<ElemId>>,
    upper_covers: Vec<Vec<ElemId>>,
    height: Vec<u32>,
    depth: Vec<u32>,
    bottom: ElemId,
    top: ElemId,
}

impl FiniteLattice {
    /// Builds a lattice from labelled cover pairs, strictly: every pair of
    /// elements must have a unique meet and join, and the input must already
    /// be transitively reduced.
    pub fn build_from_covers<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Self> {
        let (l, warnings) = Self::build_with_options(labels, covers, BuildOptions::default())?;
        debug_assert!(warnings.is_empty());
        Ok(l)
    }

    pub fn build_with_options<S: AsRef<str>>(
        labels: &[S],
        covers: &[(S, S)],
        opts: BuildOptions,
    ) -> Result<(Self, Vec<String>)> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = std::collections::HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidParameter(format!("duplicate element label {l:?}")));
            }
        }
        let mut cover_ids = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            let (a, b) = (a.as_ref(), b.as_ref());
            let &ai = index.get(a).ok_or_else(|| {
                Error::InvalidParameter(format!("cover references unknown element {a:?}"))
            })?;
            let &bi = index.get(b).ok_or_else(|| {
                Error::InvalidParameter(format!("cover references unknown element {b:?}"))
            })?;
            cover_ids.push((ai, bi));
        }
        Self::build_from_cover_ids(labels, cover_ids, opts)
    }

    /// Core constructor over already-resolved element indices.
    pub fn build_from_cover_ids(
        labels: Vec<String>,
        covers: Vec<(ElemId, ElemId)>,
        opts: BuildOptions,
    ) -> Result<(Self, Vec<String>)> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::NoBoundsError);
        }
        if n > opts.max_elements {
            return Err(Error::SizeLimitExceeded(format!(
                "{n} elements exceeds the configured maximum of {}",
                opts.max_elements
            )));
        }
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(Error::InvalidParameter("cover index out of range".into()));
            }
            if a == b {
                return Err(Error::CycleDetected);
            }
        }

        // Stable topological order (Kahn, smallest original index first).
        let mut indeg = vec![0usize; n];
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &covers {
            indeg[b] += 1;
            succ[a].push(b);
        }
        let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
            .filter(|&i| indeg[i] == 0)
            .map(std::cmp::Reverse)
            .collect();
        let mut order = Vec::with_capacity(n);
        while let Some(std::cmp::Reverse(v)) = heap.pop() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(std::cmp::Reverse(w));
                }
            }
        }
        if order.len() != n {
            return Err(Error::CycleDetected);
        }
        let mut new_id = vec![0usize; n];
        for (pos, &old) in order.iter().enumerate() {
            new_id[old] = pos;
        }
        let labels: Vec<String> = order.iter().map(|&old| labels[old].clone()).collect();
        let mut covers: Vec<(ElemId, ElemId)> =
            covers.iter().map(|&(a, b)| (new_id[a], new_id[b])).collect();
        covers.sort_unstable();

        let mut warnings = Vec::new();
        let dup_count = covers.len();
        covers.dedup();
        if covers.len() != dup_count {
            if opts.strict {
                return Err(Error::InvalidParameter("duplicate cover pair".into()));
            }
            warnings.push("dropped duplicate cover pairs".to_string());
        }

        // Reflexive-transitive closure along the linear extension.
        let mut down: Vec<ElemSet> = (0..n).map(|i| ElemSet::singleton(n, i)).collect();
        for &(a, b) in &covers {
            debug_assert!(a < b, "cover pairs ascend in a linear extension");
            let lower = down[a].clone();
            down[b].union_with(&lower);
        }
        // A cover is redundant iff something sits strictly between its ends.
        let mut reduced = Vec::with_capacity(covers.len());
        for &(a, b) in &covers {
            let mut between = false;
            for z in a + 1..b {
                if down[z].contains(a) && down[b].contains(z) {
                    between = true;
                    break;
                }
            }
            if between {
                if opts.strict {
                    return Err(Error::NotTransitivelyReduced(
                        labels[a].clone(),
                        labels[b].clone(),
                    ));
                }
                warnings.push(format!(
                    "dropped transitively redundant cover ({}, {})",
                    labels[a], labels[b]
                ));
            } else {
                reduced.push((a, b));
            }
        }
        let covers = reduced;

        let mut up: Vec<ElemSet> = (0..n).map(|i| ElemSet::singleton(n, i)).collect();
        for &(a, b) in covers.iter().rev() {
            let upper = up[b].clone();
            up[a].union_with(&upper);
        }

        // Meet and join tables. The common-lower-bound set of any pair is
        // down-closed, so it has a greatest element iff its highest id
        // dominates the whole set.
        let mut meet_table = vec![0u32; n * n];
        let mut join_table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..=x {
                let common_low = down[x].intersection(&down[y]);
                let m = match common_low.max_elem() {
                    Some(m) if common_low.is_subset(&down[m]) => m,
                    _ => return Err(Error::MeetUndefined(labels[y].clone(), labels[x].clone())),
                };
                let common_high = up[x].intersection(&up[y]);
                let j = match common_high.min_elem() {
                    Some(j) if common_high.is_subset(&up[j]) => j,
                    _ => return Err(Error::JoinUndefined(labels[y].clone(), labels[x].clone())),
                };
                meet_table[x * n + y] = m as u32;
                meet_table[y * n + x] = m as u32;
                join_table[x * n + y] = j as u32;
                join_table[y * n + x] = j as u32;
            }
        }
        // With all pairwise bounds defined, folding gives global bounds.
        let bottom = (0..n).fold(0usize, |acc, i| meet_table[acc * n + i] as usize);
        let top = (0..n).fold(0usize, |acc, i| join_table[acc * n + i] as usize);

        let mut lower_covers: Vec<Vec<ElemId>> = vec![Vec::new(); n];
        let mut upper_covers: Vec<Vec<ElemId>> = vec![Vec::new(); n];
        for &(a, b) in &covers {
            lower_covers[b].push(a);
            upper_covers[a].push(b);
        }

        let mut height = vec![0u32; n];
        for i in 0..n {
            height[i] = lower_covers[i].iter().map(|&c| height[c] + 1).max().unwrap_or(0);
        }
        let mut depth = vec![0u32; n];
        for i in (0..n).rev() {
            depth[i] = upper_covers[i].iter().map(|&c| depth[c] + 1).max().unwrap_or(0);
        }

        Ok((
            FiniteLattice {
                labels,
                covers,
                down,
                up,
                meet_table,
                join_table,
                lower_covers,
                upper_covers,
                height,
                depth,
                bottom,
                top,
            },
            warnings,
        ))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: ElemId) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<ElemId> {
        self.labels.iter().position(|l| l == label)
    }

    /// Cover pairs (lower, upper), ascending.
    pub fn covers(&self) -> &[(ElemId, ElemId)] {
        &self.covers
    }

    #[inline]
    pub fn leq(&self, x: ElemId, y: ElemId) -> bool {
        self.down[y].contains(x)
    }

    #[inline]
    pub fn lt(&self, x: ElemId, y: ElemId) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: ElemId, y: ElemId) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    #[inline]
    pub fn meet(&self, x: ElemId, y: ElemId) -> ElemId {
        self.meet_table[x * self.size() + y] as ElemId
    }

    #[inline]
    pub fn join(&self, x: ElemId, y: ElemId) -> ElemId {
        self.join_table[x * self.size() + y] as ElemId
    }

    pub fn bottom(&self) -> ElemId {
        self.bottom
    }

    pub fn top(&self) -> ElemId {
        self.top
    }

    /// Down-set of x as a bitset.
    pub fn down_set(&self, x: ElemId) -> &ElemSet {
        &self.down[x]
    }

    pub fn up_set(&self, x: ElemId) -> &ElemSet {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: ElemId) -> &[ElemId] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: ElemId) -> &[ElemId] {
        &self.upper_covers[x]
    }

    pub fn atoms(&self) -> &[ElemId] {
        &self.upper_covers[self.bottom]
    }

    pub fn coatoms(&self) -> &[ElemId] {
        &self.lower_covers[self.top]
    }

    pub fn is_atom(&self, x: ElemId) -> bool {
        self.lower_covers[x] == [self.bottom]
    }

    /// Length of a longest chain from bottom to x.
    pub fn height_of(&self, x: ElemId) -> usize {
        self.height[x] as usize
    }

    /// Length of a longest chain from x to top.
    pub fn depth_of(&self, x: ElemId) -> usize {
        self.depth[x] as usize
    }

    /// Length of the lattice: longest chain length between the bounds.
    pub fn length(&self) -> usize {
        self.height[self.top] as usize
    }

    pub fn is_chain(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..x).all(|y| self.comparable(x, y)))
    }

    /// Elements with exactly one lower cover (excludes bottom), as a set and
    /// as the induced subposet.
    pub fn join_irreducibles(&self) -> (Vec<ElemId>, Poset) {
        let elems: Vec<ElemId> =
            (0..self.size()).filter(|&x| self.lower_covers[x].len() == 1).collect();
        let poset = self.induced_poset(&elems);
        (elems, poset)
    }

    pub fn meet_irreducibles(&self) -> Vec<ElemId> {
        (0..self.size()).filter(|&x| self.upper_covers[x].len() == 1).collect()
    }

    pub fn induced_poset(&self, elems: &[ElemId]) -> Poset {
        let k = elems.len();
        let mut leq = vec![ElemSet::empty(k); k];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                if self.leq(x, y) {
                    leq[j].insert(i);
                }
            }
        }
        Poset { labels: elems.iter().map(|&x| self.labels[x].clone()).collect(), down: leq }
    }

    /// Order dual: same elements, covers reversed.
    pub fn dual(&self) -> FiniteLattice {
        let covers: Vec<(ElemId, ElemId)> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        let (l, _) = Self::build_from_cover_ids(self.labels.clone(), covers, BuildOptions::default())
            .expect("dual of a lattice is a lattice");
        l
    }

    /// The interval [a, b] as a lattice of its own. Its covers are exactly
    /// the covers of the ambient lattice restricted to the interval.
    pub fn interval(&self, a: ElemId, b: ElemId) -> Result<FiniteLattice> {
        if !self.leq(a, b) {
            return Err(Error::NotComparable(self.labels[a].clone(), self.labels[b].clone()));
        }
        let members = self.up[a].intersection(&self.down[b]);
        let elems: Vec<ElemId> = members.iter().collect();
        let mut pos = std::collections::HashMap::new();
        for (i, &x) in elems.iter().enumerate() {
            pos.insert(x, i);
        }
        let covers: Vec<(ElemId, ElemId)> = self
            .covers
            .iter()
            .filter(|(x, y)| members.contains(*x) && members.contains(*y))
            .map(|&(x, y)| (pos[&x], pos[&y]))
            .collect();
        let labels = elems.iter().map(|&x| self.labels[x].clone()).collect();
        let (l, _) = Self::build_from_cover_ids(labels, covers, BuildOptions::default())?;
        Ok(l)
    }

    /// True when `elems` is closed under the lattice's meet and join.
    pub fn is_sublattice(&self, elems: &[ElemId]) -> bool {
        let mut inside = ElemSet::empty(self.size());
        for &x in elems {
            inside.insert(x);
        }
        for &x in elems {
            for &y in elems {
                if !inside.contains(self.meet(x, y)) || !inside.contains(self.join(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Exhaustive check of the lattice axioms against the stored tables.
    /// Build already guarantees them; this is the test-suite oracle.
    pub fn verify_axioms(&self) -> bool {
        let n = self.size();
        for x in 0..n {
            if self.meet(x, x) != x || self.join(x, x) != x {
                return false;
            }
            for y in 0..n {
                let m = self.meet(x, y);
                let j = self.join(x, y);
                if m != self.meet(y, x) || j != self.join(y, x) {
                    return false;
                }
                // absorption
                if self.join(x, m) != x || self.meet(x, j) != x {
                    return false;
                }
                // compatibility with the order relation
                if !self.leq(m, x) || !self.leq(m, y) || !self.leq(x, j) || !self.leq(y, j) {
                    return false;
                }
                if self.leq(x, y) != (m == x) || self.leq(x, y) != (j == y) {
                    return false;
                }
                for z in 0..n {
                    if self.meet(self.meet(x, y), z) != self.meet(x, self.meet(y, z)) {
                        return false;
                    }
                    if self.join(self.join(x, y), z) != self.join(x, self.join(y, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Structural equality modulo element order: same label set, same covers
    /// as label pairs.
    pub fn same_labeled(&self, other: &FiniteLattice) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut a: Vec<&String> = self.labels.iter().collect();
        let mut b: Vec<&String> = other.labels.iter().collect();
        a.sort();
        b.sort();
        if a != b {
            return false;
        }
        let pairs =
            |l: &FiniteLattice| -> std::collections::BTreeSet<(String, String)> {
                l.covers
                    .iter()
                    .map(|&(x, y)| (l.labels[x].clone(), l.labels[y].clone()))
                    .collect()
            };
        pairs(self) == pairs(other)
    }
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteLattice({} elements, {} covers)", self.size(), self.covers.len())
    }
}

/// A finite poset: labelled elements plus the full order relation. Used for
/// join-irreducible posets and principal-congruence posets.
#[derive(Clone, Debug)]
pub struct Poset {
    pub labels: Vec<String>,
    /// down[i] = { j : j <= i }
    pub down: Vec<ElemSet>,
}

impl Poset {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    pub fn is_chain(&self) -> bool {
        (0..self.size()).all(|x| (0..x).all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    pub fn is_antichain(&self) -> bool {
        (0..self.size()).all(|x| (0..x).all(|y| !self.leq(x, y) && !self.leq(y, x)))
    }

    /// Covering pairs (transitive reduction of the order).
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for y in 0..n {
            for x in 0..n {
                if x != y && self.leq(x, y) {
                    let strictly_between = (0..n)
                        .any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y));
                    if !strictly_between {
                        out.push((x, y));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stock {
    /// Total order with n elements, n >= 1.
    Chain(usize),
    /// Lattice of subsets of an m-element set, m >= 0.
    Boolean(usize),
    /// Diamond: three incomparable atoms between bottom and top.
    M3,
    /// Pentagon: a 2-chain and a single element side by side.
    N5,
    /// Two 2-chains side by side between bottom and top.
    Hexagon,
}

/// Builds one of the named stock lattices.
pub fn stock(kind: Stock) -> Result<FiniteLattice> {
    match kind {
        Stock::Chain(n) => {
            if n == 0 {
                return Err(Error::InvalidParameter("chain needs at least one element".into()));
            }
            let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
            Ok(FiniteLattice::build_from_cover_ids(labels, covers, BuildOptions::default())?.0)
        }
        Stock::Boolean(m) => {
            if m > 20 {
                return Err(Error::SizeLimitExceeded(format!("boolean({m}) is too large")));
            }
            let n = 1usize << m;
            let label = |s: usize| {
                let items: Vec<String> =
                    (0..m).filter(|i| s >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
                format!("{{{}}}", items.join(","))
            };
            let labels: Vec<String> = (0..n).map(label).collect();
            let mut covers = Vec::new();
            for s in 0..n {
                for i in 0..m {
                    if s >> i & 1 == 0 {
                        covers.push((s, s | 1 << i));
                    }
                }
            }
            Ok(FiniteLattice::build_from_cover_ids(labels, covers, BuildOptions::default())?.0)
        }
        Stock::M3 => FiniteLattice::build_from_covers(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        ),
        Stock::N5 => FiniteLattice::build_from_covers(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        ),
        Stock::Hexagon => FiniteLattice::build_from_covers(
            &["0", "a", "b", "c", "d", "1"],
            &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "d"), ("d", "1")],
        ),
    }
}

pub fn chain(n: usize) -> FiniteLattice {
    stock(Stock::Chain(n)).expect("n >= 1")
}

pub fn boolean(m: usize) -> FiniteLattice {
    stock(Stock::Boolean(m)).expect("m small")
}

pub fn m3() -> FiniteLattice {
    stock(Stock::M3).unwrap()
}

pub fn n5() -> FiniteLattice {
    stock(Stock::N5).unwrap()
}

pub fn hexagon() -> FiniteLattice {
    stock(Stock::Hexagon).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_m3_from_covers() {
        let l = m3();
        assert_eq!(l.size(), 5);
        assert_eq!(l.atoms().len(), 3);
        assert_eq!(l.label(l.bottom()), "0");
        assert_eq!(l.label(l.top()), "1");
        assert!(l.verify_axioms());
    }

    #[test]
    fn rejects_cycles() {
        let err = FiniteLattice::build_from_covers(
            &["a", "b"],
            &[("a", "b"), ("b", "a")],
        )
        .unwrap_err();
        assert_eq!(err, Error::CycleDetected);
    }

    #[test]
    fn rejects_redundant_cover_in_strict_mode() {
        // 3-chain plus the composite edge.
        let err = FiniteLattice::build_from_covers(
            &["0", "m", "1"],
            &[("0", "m"), ("m", "1"), ("0", "1")],
        )
        .unwrap_err();
        assert_eq!(err, Error::NotTransitivelyReduced("0".into(), "1".into()));
    }

    #[test]
    fn lenient_mode_drops_redundant_cover() {
        let (l, warnings) = FiniteLattice::build_with_options(
            &["0", "m", "1"],
            &[("0", "m"), ("m", "1"), ("0", "1")],
            BuildOptions { strict: false, ..Default::default() },
        )
        .unwrap();
        assert_eq!(warnings.len(), 1);
        assert!(l.same_labeled(&chain(3).clone_relabel(&["0", "m", "1"])));
    }

    #[test]
    fn two_maximal_elements_is_a_join_error() {
        let err = FiniteLattice::build_from_covers(&["0", "a", "b"], &[("0", "a"), ("0", "b")])
            .unwrap_err();
        assert_eq!(err, Error::JoinUndefined("a".into(), "b".into()));
    }

    #[test]
    fn empty_input_has_no_bounds() {
        let err = FiniteLattice::build_from_covers::<&str>(&[], &[]).unwrap_err();
        assert_eq!(err, Error::NoBoundsError);
    }

    #[test]
    fn stock_shapes() {
        assert_eq!(chain(1).size(), 1);
        assert_eq!(boolean(3).size(), 8);
        assert_eq!(boolean(3).atoms().len(), 3);
        assert_eq!(boolean(0).size(), 1);
        let h = hexagon();
        assert_eq!(h.size(), 6);
        assert_eq!(h.atoms().len(), 2);
        assert_eq!(h.coatoms().len(), 2);
        assert!(matches!(stock(Stock::Chain(0)), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn meet_join_in_boolean_2() {
        let b = boolean(2);
        let x = b.index_of("{1}").unwrap();
        let y = b.index_of("{2}").unwrap();
        assert_eq!(b.label(b.meet(x, y)), "{}");
        assert_eq!(b.label(b.join(x, y)), "{1,2}");
    }

    #[test]
    fn n5_is_selfdual_up_to_isomorphism() {
        let l = n5();
        let d = l.dual();
        assert_eq!(d.size(), 5);
        // bottom/top swap; the 2-chain side swaps orientation
        assert_eq!(d.label(d.bottom()), "1");
        assert_eq!(d.label(d.top()), "0");
        assert!(crate::autgroup::are_isomorphic(&l, &d));
    }

    #[test]
    fn dual_is_an_involution_up_to_element_order() {
        for l in [m3(), n5(), hexagon(), boolean(3), chain(4)] {
            assert!(l.dual().dual().same_labeled(&l));
        }
    }

    #[test]
    fn interval_of_boolean_3() {
        let b = boolean(3);
        let a = b.index_of("{}").unwrap();
        let t = b.index_of("{1,2}").unwrap();
        let iv = b.interval(a, t).unwrap();
        assert_eq!(iv.size(), 4);
        assert!(crate::autgroup::are_isomorphic(&iv, &boolean(2)));
        let x = b.index_of("{1}").unwrap();
        let y = b.index_of("{2}").unwrap();
        assert!(matches!(b.interval(x, y), Err(Error::NotComparable(_, _))));
    }

    #[test]
    fn heights_and_depths() {
        let b = boolean(3);
        assert_eq!(b.height_of(b.top()), 3);
        assert_eq!(b.length(), 3);
        for x in 0..b.size() {
            assert!(b.height_of(x) + b.depth_of(x) <= b.length());
            assert_eq!(b.height_of(x) + b.depth_of(x), b.length()); // graded
        }
        let l = n5();
        let c = l.index_of("c").unwrap();
        let b_el = l.index_of("b").unwrap();
        assert_eq!(l.height_of(c), 2);
        assert_eq!(l.depth_of(b_el), 1);
        assert_eq!(l.length(), 3);
    }

    #[test]
    fn join_irreducibles_of_stock_lattices() {
        let (ji, poset) = boolean(3).join_irreducibles();
        assert_eq!(ji.len(), 3);
        assert!(poset.is_antichain());
        let (ji, poset) = chain(4).join_irreducibles();
        assert_eq!(ji.len(), 3);
        assert!(poset.is_chain());
    }

    #[test]
    fn every_element_is_the_join_of_irreducibles_below_it() {
        for l in [m3(), n5(), hexagon(), boolean(4), chain(5)] {
            let (ji, _) = l.join_irreducibles();
            for x in 0..l.size() {
                let j = ji
                    .iter()
                    .filter(|&&i| l.leq(i, x))
                    .fold(l.bottom(), |acc, &i| l.join(acc, i));
                assert_eq!(j, x);
            }
        }
    }

    impl FiniteLattice {
        /// Test helper: same shape, new labels in element order.
        pub(crate) fn clone_relabel(&self, labels: &[&str]) -> FiniteLattice {
            let mut out = self.clone();
            out.labels = labels.iter().map(|s| s.to_string()).collect();
            out
        }
    }
}
