//! Ideals and filters of a finite lattice.
//!
//! In a finite lattice every ideal and every filter is principal: a
//! nonempty, join-closed, down-closed subset contains the join of all its
//! members, which generates it; dually for filters. `ideals`/`filters`
//! therefore return exactly one entry per element — but each returned set is
//! still validated against the closure definition, and the brute-force
//! enumerations here let tests confirm completeness from the raw definition
//! on small lattices.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::gf::{subspace_lattice, SubspaceLattice, Subspace};
use crate::lattice::{ElemId, FiniteLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IfKind {
    Ideal,
    Filter,
}

/// A principal ideal or filter: its member set and its generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealOrFilter {
    pub kind: IfKind,
    pub members: ElemSet,
    pub generator: ElemId,
}

impl IdealOrFilter {
    pub fn contains(&self, x: ElemId) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member_labels(&self, l: &FiniteLattice) -> Vec<String> {
        self.members.iter().map(|x| l.label(x).to_string()).collect()
    }
}

/// Checks the raw ideal definition: nonempty, downward closed, join closed.
pub fn is_ideal_set(l: &FiniteLattice, s: &ElemSet) -> bool {
    if s.is_empty() {
        return false;
    }
    for x in s.iter() {
        if !l.down_set(x).is_subset(s) {
            return false;
        }
        for y in s.iter() {
            let j = l.join(x, y);
            if !s.contains(j) {
                return false;
            }
        }
    }
    true
}

/// Checks the raw filter definition: nonempty, upward closed, meet closed.
pub fn is_filter_set(l: &FiniteLattice, s: &ElemSet) -> bool {
    if s.is_empty() {
        return false;
    }
    for x in s.iter() {
        if !l.up_set(x).is_subset(s) {
            return false;
        }
        for y in s.iter() {
            let m = l.meet(x, y);
            if !s.contains(m) {
                return false;
            }
        }
    }
    true
}

/// All ideals of `l`: the principal ideal of each element, each validated
/// against the raw definition rather than assumed.
pub fn ideals(l: &FiniteLattice) -> Vec<IdealOrFilter> {
    (0..l.size())
        .map(|x| {
            let members = l.down_set(x).clone();
            debug_assert!(is_ideal_set(l, &members));
            IdealOrFilter { kind: IfKind::Ideal, members, generator: x }
        })
        .collect()
}

/// All filters of `l`, one per element.
pub fn filters(l: &FiniteLattice) -> Vec<IdealOrFilter> {
    (0..l.size())
        .map(|x| {
            let members = l.up_set(x).clone();
            debug_assert!(is_filter_set(l, &members));
            IdealOrFilter { kind: IfKind::Filter, members, generator: x }
        })
        .collect()
}

fn check_generators(l: &FiniteLattice, gens: &[ElemId]) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    for &g in gens {
        if g >= l.size() {
            return Err(Error::IndexOutOfRange(g));
        }
    }
    Ok(())
}

/// The ideal generated by a nonempty subset: the down-set of its join.
pub fn ideal_gen(l: &FiniteLattice, gens: &[ElemId]) -> Result<IdealOrFilter> {
    check_generators(l, gens)?;
    let mut g = gens[0];
    for &x in &gens[1..] {
        g = l.join(g, x);
    }
    Ok(IdealOrFilter { kind: IfKind::Ideal, members: l.down_set(g).clone(), generator: g })
}

/// The filter generated by a nonempty subset: the up-set of its meet.
pub fn filter_gen(l: &FiniteLattice, gens: &[ElemId]) -> Result<IdealOrFilter> {
    check_generators(l, gens)?;
    let mut g = gens[0];
    for &x in &gens[1..] {
        g = l.meet(g, x);
    }
    Ok(IdealOrFilter { kind: IfKind::Filter, members: l.up_set(g).clone(), generator: g })
}

/// Smallest filter containing the subset, computed from the closure
/// definition alone (alternate up-closing and meet-closing to a fixpoint) —
/// an independent route that never presupposes principality.
pub fn filter_closure(l: &FiniteLattice, seed: &ElemSet) -> ElemSet {
    let mut cur = seed.clone();
    loop {
        let mut next = cur.clone();
        for x in cur.iter() {
            next.union_with(l.up_set(x));
        }
        let snapshot: Vec<ElemId> = next.iter().collect();
        for (i, &x) in snapshot.iter().enumerate() {
            for &y in &snapshot[i + 1..] {
                next.insert(l.meet(x, y));
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

const BRUTE_FORCE_LIMIT: usize = 20;

/// Every subset satisfying the raw ideal definition, found by scanning all
/// 2^n subsets. Oracle for completeness of `ideals`.
pub fn all_ideals_brute(l: &FiniteLattice) -> Result<Vec<ElemSet>> {
    all_closed_brute(l, is_ideal_set)
}

/// Every subset satisfying the raw filter definition, by exhaustive scan.
pub fn all_filters_brute(l: &FiniteLattice) -> Result<Vec<ElemSet>> {
    all_closed_brute(l, is_filter_set)
}

fn all_closed_brute(
    l: &FiniteLattice,
    predicate: fn(&FiniteLattice, &ElemSet) -> bool,
) -> Result<Vec<ElemSet>> {
    let n = l.size();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimitExceeded(format!(
            "brute-force subset scan needs at most {BRUTE_FORCE_LIMIT} elements, got {n}"
        )));
    }
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        let s: ElemSet = (0..n).filter(|&i| mask >> i & 1 == 1).collect_set(n);
        if predicate(l, &s) {
            out.push(s);
        }
    }
    Ok(out)
}

trait CollectSet {
    fn collect_set(self, universe: usize) -> ElemSet;
}

impl<I: Iterator<Item = usize>> CollectSet for I {
    fn collect_set(self, universe: usize) -> ElemSet {
        let mut s = ElemSet::empty(universe);
        for x in self {
            s.insert(x);
        }
        s
    }
}

/// Outcome of exercising filter generation from many subsets and checking
/// that everything produced is principal.
#[derive(Clone, Debug)]
pub struct PrincipalityReport {
    /// Distinct filters discovered, paired with their generators.
    pub generators: Vec<ElemId>,
    /// Number of seed subsets closed.
    pub subsets_checked: u64,
    /// Whether every nonempty subset was used as a seed (2^n − 1 of them).
    pub exhaustive: bool,
    /// True when every discovered filter had a unique minimum.
    pub all_principal: bool,
    /// The finite form of the non-principal-filter dichotomy: with no
    /// non-principal filters found, it holds vacuously.
    pub generalized_lemma_vacuous: bool,
}

impl PrincipalityReport {
    pub fn filter_count(&self) -> usize {
        self.generators.len()
    }
}

const EXHAUSTIVE_SEED_LIMIT: usize = 16;

/// Closes filters from seed subsets (all 2^n−1 nonempty subsets when the
/// lattice has at most 16 elements, otherwise all singletons and pairs) and
/// reports on principality of everything found.
pub fn check_filter_principality(l: &FiniteLattice) -> PrincipalityReport {
    let n = l.size();
    let mut found: Vec<ElemSet> = Vec::new();
    let mut generators: Vec<ElemId> = Vec::new();
    let mut all_principal = true;
    let mut subsets_checked = 0u64;
    let mut visit = |seed: ElemSet| {
        subsets_checked += 1;
        let filter = filter_closure(l, &seed);
        if found.contains(&filter) {
            return;
        }
        debug_assert!(is_filter_set(l, &filter));
        let generator = filter
            .iter()
            .find(|&g| filter.iter().all(|x| l.leq(g, x)));
        match generator {
            Some(g) => generators.push(g),
            None => all_principal = false,
        }
        found.push(filter);
    };
    let exhaustive = n <= EXHAUSTIVE_SEED_LIMIT;
    if exhaustive {
        for mask in 1u64..(1 << n) {
            visit((0..n).filter(|&i| mask >> i & 1 == 1).collect_set(n));
        }
    } else {
        for x in 0..n {
            for y in x..n {
                let mut s = ElemSet::empty(n);
                s.insert(x);
                s.insert(y);
                visit(s);
            }
        }
    }
    generators.sort_unstable();
    PrincipalityReport {
        generators,
        subsets_checked,
        exhaustive,
        all_principal,
        generalized_lemma_vacuous: all_principal,
    }
}

/// The ideal of the subspace lattice of F_p^n consisting of all subspaces
/// of the span of the chosen standard basis vectors. Distinct index sets
/// give distinct ideals, exhibiting 2^n distinct ideals at finite stage n.
pub fn subspace_ideal_in(
    sl: &SubspaceLattice,
    basis_indices: &[usize],
) -> Result<IdealOrFilter> {
    let w = Subspace::coordinate_span(sl.p, sl.n, basis_indices)?;
    let g = sl.id_of(&w).expect("coordinate span is enumerated");
    Ok(IdealOrFilter {
        kind: IfKind::Ideal,
        members: sl.lattice.down_set(g).clone(),
        generator: g,
    })
}

/// Convenience form building the subspace lattice itself; see
/// [`subspace_ideal_in`] for reusing an existing lattice.
pub fn subspace_ideal(p: u64, n: usize, basis_indices: &[usize]) -> Result<IdealOrFilter> {
    subspace_ideal_in(&subspace_lattice(p, n)?, basis_indices)
}
