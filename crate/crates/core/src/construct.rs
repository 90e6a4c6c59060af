//! Lattice constructions that transport congruence structure: glued sums,
//! the bottom-top gadget tower, atom-interval replacement, the M3 cap, a
//! composite with prescribed congruence count, and products of chains with
//! their coordinate congruences.

use crate::bitset::ElemSet;
use crate::congruence::{all_congruences, Congruence};
use crate::error::{Error, Result};
use crate::gf::sub_lattice;
use crate::lattice::{boolean, BuildOptions, ElemId, FiniteLattice};
use std::collections::HashSet;

/// Picks a label equal to `base` with as many primes appended as needed to
/// avoid the ones already taken.
fn fresh_label(base: &str, used: &mut HashSet<String>) -> String {
    let mut label = base.to_string();
    while !used.insert(label.clone()) {
        label.push('\'');
    }
    label
}

fn build(labels: Vec<String>, covers: Vec<(ElemId, ElemId)>) -> FiniteLattice {
    let (l, warnings) =
        FiniteLattice::build_from_cover_ids(labels, covers, BuildOptions::default())
            .expect("construction yields a valid lattice");
    debug_assert!(warnings.is_empty());
    l
}

/// Glues the top of `l0` to the bottom of `l1`, identifying the two
/// elements; everything in `l0` lies below everything in `l1`.
pub fn glued_sum(l0: &FiniteLattice, l1: &FiniteLattice) -> FiniteLattice {
    let n0 = l0.size();
    let mut labels: Vec<String> = l0.labels().to_vec();
    let mut used: HashSet<String> = labels.iter().cloned().collect();
    // l1's elements, with its bottom merged into l0's top
    let mut map1: Vec<ElemId> = vec![0; l1.size()];
    let mut next = n0;
    for x in 0..l1.size() {
        if x == l1.bottom() {
            map1[x] = l0.top();
        } else {
            map1[x] = next;
            next += 1;
            labels.push(fresh_label(l1.label(x), &mut used));
        }
    }
    let mut covers: Vec<(ElemId, ElemId)> = l0.covers().to_vec();
    covers.extend(l1.covers().iter().map(|&(a, b)| (map1[a], map1[b])));
    build(labels, covers)
}

/// The gadget construction and where its distinguished elements ended up.
#[derive(Clone, Debug)]
pub struct WGadget {
    pub lattice: FiniteLattice,
    /// seed element id -> id in the new lattice
    pub seed_map: Vec<ElemId>,
    pub bottom: ElemId,
    pub top: ElemId,
    pub u: ElemId,
    pub v: ElemId,
}

/// Wraps `k` in a new bottom and top and adds two incomparable elements
/// `u`, `v` that are simultaneously atoms and coatoms of the result. The
/// only congruence relating a new element to an old one is the full
/// relation, which is what makes iterating this construction add exactly
/// one congruence per stage.
pub fn w_gadget_full(k: &FiniteLattice) -> WGadget {
    let n = k.size();
    let mut labels = vec![String::new(); n + 4];
    let mut used: HashSet<String> = k.labels().iter().cloned().collect();
    let seed_map: Vec<ElemId> = (0..n).map(|x| x + 1).collect();
    for x in 0..n {
        labels[x + 1] = k.label(x).to_string();
    }
    let (u, v, bottom, top) = (n + 1, n + 2, 0, n + 3);
    labels[bottom] = fresh_label("0'", &mut used);
    labels[u] = fresh_label("u", &mut used);
    labels[v] = fresh_label("v", &mut used);
    labels[top] = fresh_label("1'", &mut used);
    let mut covers: Vec<(ElemId, ElemId)> =
        k.covers().iter().map(|&(a, b)| (seed_map[a], seed_map[b])).collect();
    covers.push((bottom, seed_map[k.bottom()]));
    covers.push((seed_map[k.top()], top));
    covers.extend([(bottom, u), (u, top), (bottom, v), (v, top)]);
    let lattice = build(labels.clone(), covers);
    // recover positions by label in case construction reordered ids
    let find = |lbl: &str| lattice.index_of(lbl).expect("label preserved");
    WGadget {
        seed_map: (0..n).map(|x| find(&labels[seed_map[x]])).collect(),
        bottom: find(&labels[bottom]),
        top: find(&labels[top]),
        u: find(&labels[u]),
        v: find(&labels[v]),
        lattice,
    }
}

pub fn w_gadget(k: &FiniteLattice) -> FiniteLattice {
    w_gadget_full(k).lattice
}

/// One stage of the iterated gadget tower.
#[derive(Clone, Debug)]
pub struct TowerStage {
    pub index: usize,
    pub lattice: FiniteLattice,
    /// Bottoms of the seed and of every stage so far; stage order, so each
    /// entry lies strictly above the next — a chain growing downward.
    pub bottoms: Vec<ElemId>,
    /// Tops of the seed and of every stage so far, a chain growing upward.
    pub tops: Vec<ElemId>,
    pub seed_simple: bool,
}

/// Iterates the gadget `i` times over the seed. Each stage contributes one
/// extra congruence, so a simple seed reaches 2 + i congruences.
pub fn tower(seed: &FiniteLattice, i: usize, max_elements: usize) -> Result<TowerStage> {
    let final_size = seed.size() + 4 * i;
    if final_size > max_elements {
        return Err(Error::SizeLimitExceeded(format!(
            "tower stage {i} needs {final_size} elements, above the limit {max_elements}"
        )));
    }
    let seed_simple = crate::congruence::is_simple(seed);
    let mut lattice = seed.clone();
    let mut bottoms = vec![seed.bottom()];
    let mut tops = vec![seed.top()];
    for _ in 0..i {
        let g = w_gadget_full(&lattice);
        bottoms = bottoms.into_iter().map(|b| g.seed_map[b]).collect();
        tops = tops.into_iter().map(|t| g.seed_map[t]).collect();
        bottoms.push(g.bottom);
        tops.push(g.top);
        lattice = g.lattice;
    }
    Ok(TowerStage { index: i, lattice, bottoms, tops, seed_simple })
}

/// Replaces, for each chosen atom `a`, the prime interval from the bottom
/// up to `a` by a bounded lattice, identifying that lattice's bottom with
/// the ambient bottom and its top with `a`.
pub fn replace_atom_intervals(
    l: &FiniteLattice,
    assignment: &[(ElemId, &FiniteLattice)],
) -> Result<FiniteLattice> {
    let mut seen_atoms: HashSet<ElemId> = HashSet::new();
    for &(a, k) in assignment {
        if a >= l.size() || !l.is_atom(a) {
            let name = if a < l.size() { l.label(a).to_string() } else { a.to_string() };
            return Err(Error::NotAnAtom(name));
        }
        if k.size() < 2 {
            return Err(Error::UnboundedReplacement(format!(
                "replacement below {} needs distinct bottom and top",
                l.label(a)
            )));
        }
        if !seen_atoms.insert(a) {
            return Err(Error::InvalidParameter(format!(
                "atom {} assigned twice",
                l.label(a)
            )));
        }
    }
    let mut labels: Vec<String> = l.labels().to_vec();
    let mut used: HashSet<String> = labels.iter().cloned().collect();
    let mut covers: Vec<(ElemId, ElemId)> = Vec::new();
    let replaced: HashSet<ElemId> = assignment.iter().map(|&(a, _)| a).collect();
    for &(a, b) in l.covers() {
        if !(a == l.bottom() && replaced.contains(&b)) {
            covers.push((a, b));
        }
    }
    let mut next = l.size();
    for &(atom, k) in assignment {
        let mut map: Vec<ElemId> = vec![0; k.size()];
        for x in 0..k.size() {
            map[x] = if x == k.bottom() {
                l.bottom()
            } else if x == k.top() {
                atom
            } else {
                labels.push(fresh_label(k.label(x), &mut used));
                next += 1;
                next - 1
            };
        }
        covers.extend(k.covers().iter().map(|&(a, b)| (map[a], map[b])));
    }
    Ok(build(labels, covers))
}

/// The capped construction and its distinguished elements.
#[derive(Clone, Debug)]
pub struct M3Cap {
    pub lattice: FiniteLattice,
    /// nonzero elements of the first factor -> cap ids (bottom maps to the
    /// cap bottom)
    pub base_map: Vec<ElemId>,
    /// elements of the second factor -> cap ids
    pub h_map: Vec<ElemId>,
    pub bottom: ElemId,
    pub top: ElemId,
    pub u: ElemId,
    pub v: ElemId,
}

/// Builds the cap over `lp` and `h`: a shared bottom, the nonzero part of
/// `lp`, a fresh element `u`, a copy of `h` whose top `v` is a coatom, and
/// a fresh top. Every nonzero element of `lp`, together with `u`, `v` and
/// the bounds, spans a copy of the diamond, which forces any congruence
/// collapsing something outside `h` to be full.
pub fn m3_cap_full(lp: &FiniteLattice, h: &FiniteLattice) -> Result<M3Cap> {
    if lp.size() < 3 {
        return Err(Error::TooSmall(format!(
            "first factor needs at least 3 elements, got {}",
            lp.size()
        )));
    }
    if h.size() < 2 {
        return Err(Error::TooSmall(format!(
            "second factor needs at least 2 elements, got {}",
            h.size()
        )));
    }
    let mut labels: Vec<String> = vec!["0".to_string()];
    let mut used: HashSet<String> = labels.iter().cloned().collect();
    let bottom: ElemId = 0;
    let mut next: ElemId = 1;
    let mut base_map: Vec<ElemId> = vec![0; lp.size()];
    for x in 0..lp.size() {
        base_map[x] = if x == lp.bottom() {
            bottom
        } else {
            labels.push(fresh_label(lp.label(x), &mut used));
            next += 1;
            next - 1
        };
    }
    let u = next;
    labels.push(fresh_label("u", &mut used));
    next += 1;
    let mut h_map: Vec<ElemId> = vec![0; h.size()];
    for x in 0..h.size() {
        h_map[x] = if x == h.bottom() {
            bottom
        } else {
            labels.push(fresh_label(h.label(x), &mut used));
            next += 1;
            next - 1
        };
    }
    let v = h_map[h.top()];
    let top = next;
    labels.push(fresh_label("1", &mut used));
    let mut covers: Vec<(ElemId, ElemId)> = Vec::new();
    covers.extend(lp.covers().iter().map(|&(a, b)| (base_map[a], base_map[b])));
    covers.extend(h.covers().iter().map(|&(a, b)| (h_map[a], h_map[b])));
    covers.push((bottom, u));
    covers.push((u, top));
    covers.push((v, top));
    covers.push((base_map[lp.top()], top));
    let lattice = build(labels.clone(), covers);
    let find = |lbl: &str| lattice.index_of(lbl).expect("label preserved");
    Ok(M3Cap {
        base_map: (0..lp.size()).map(|x| find(&labels[base_map[x]])).collect(),
        h_map: (0..h.size()).map(|x| find(&labels[h_map[x]])).collect(),
        bottom: find(&labels[bottom]),
        top: find(&labels[top]),
        u: find(&labels[u]),
        v: find(&labels[v]),
        lattice,
    })
}

pub fn m3_cap(lp: &FiniteLattice, h: &FiniteLattice) -> Result<FiniteLattice> {
    Ok(m3_cap_full(lp, h)?.lattice)
}

/// True when every congruence apart from the full one keeps the bottom in
/// a singleton block. Under this condition the cap construction preserves
/// the congruence lattice and the principal-congruence order of `h`.
pub fn zero_separated(h: &FiniteLattice) -> Result<bool> {
    let cons = all_congruences(h);
    Ok(cons
        .iter()
        .filter(|c| !c.is_nabla())
        .all(|c| c.block_of_element(h.bottom()).len() == 1))
}

/// Glued sum of `n` gadget-wrapped subspace lattices (three congruences
/// each), a boolean cube when `m ≥ 2`, and one bare subspace lattice when
/// `m ≥ 1`; multiplicativity of congruence counts over glued sums gives
/// exactly 2^m · 3^n congruences.
pub fn freese_composite(p: u64, dim: usize, m: usize, n: usize) -> Result<FiniteLattice> {
    if m + n == 0 {
        return Err(Error::InvalidParameters(
            "at least one of the two exponents must be positive".to_string(),
        ));
    }
    if dim < 2 {
        return Err(Error::InvalidParameters(
            "subspace dimension must be at least 2".to_string(),
        ));
    }
    let base = sub_lattice(p, dim)?;
    let mut summands: Vec<FiniteLattice> = Vec::new();
    for _ in 0..n {
        summands.push(w_gadget(&base));
    }
    if m >= 2 {
        summands.push(boolean(m - 1));
    }
    if m >= 1 {
        summands.push(base.clone());
    }
    let mut iter = summands.into_iter();
    let first = iter.next().expect("m+n >= 1 gives at least one summand");
    Ok(iter.fold(first, |acc, s| glued_sum(&acc, &s)))
}

/// The n-fold power of an (h+1)-element chain under componentwise order,
/// with the tuple behind every element.
#[derive(Clone, Debug)]
pub struct ProductChains {
    pub lattice: FiniteLattice,
    pub tuples: Vec<Vec<u32>>,
    pub n: usize,
    pub h: u32,
}

impl ProductChains {
    /// The congruence identifying tuples that agree on every coordinate in
    /// `x`; distinct coordinate sets give distinct congruences.
    pub fn theta_of(&self, x: &[usize]) -> Result<Congruence> {
        for &i in x {
            if i >= self.n {
                return Err(Error::IndexOutOfRange(i));
            }
        }
        let size = self.lattice.size();
        let mut class_of: Vec<u32> = vec![0; size];
        let mut seen: Vec<Vec<u32>> = Vec::new();
        for (id, t) in self.tuples.iter().enumerate() {
            let key: Vec<u32> = x.iter().map(|&i| t[i]).collect();
            let idx = match seen.iter().position(|k| *k == key) {
                Some(i) => i,
                None => {
                    seen.push(key);
                    seen.len() - 1
                }
            };
            class_of[id] = idx as u32;
        }
        let c = Congruence::from_block_assignment(&class_of);
        debug_assert!(c.is_compatible(&self.lattice));
        Ok(c)
    }
}

fn tuple_label(t: &[u32], h: u32) -> String {
    if h <= 9 {
        t.iter().map(u32::to_string).collect()
    } else {
        t.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

/// All n-tuples with entries in 0..=h, ordered componentwise.
pub fn product_of_chains(n: usize, h: u32, max_elements: usize) -> Result<ProductChains> {
    if n == 0 || h == 0 {
        return Err(Error::InvalidParameters(
            "need at least one coordinate and a nontrivial chain".to_string(),
        ));
    }
    let size = (h as u128 + 1).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > max_elements as u128 {
        return Err(Error::SizeLimitExceeded(format!(
            "product of chains has {size} elements, above the limit {max_elements}"
        )));
    }
    let size = size as usize;
    let mut tuples: Vec<Vec<u32>> = Vec::with_capacity(size);
    let mut cur = vec![0u32; n];
    loop {
        tuples.push(cur.clone());
        let Some(pos) = (0..n).rev().find(|&i| cur[i] < h) else {
            break;
        };
        cur[pos] += 1;
        for x in cur.iter_mut().skip(pos + 1) {
            *x = 0;
        }
    }
    tuples.sort_unstable_by_key(|t| (t.iter().map(|&x| x as u64).sum::<u64>(), t.clone()));
    let labels: Vec<String> = tuples.iter().map(|t| tuple_label(t, h)).collect();
    let index_of: std::collections::HashMap<&Vec<u32>, usize> =
        tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut covers: Vec<(ElemId, ElemId)> = Vec::new();
    for (id, t) in tuples.iter().enumerate() {
        for i in 0..n {
            if t[i] < h {
                let mut up = t.clone();
                up[i] += 1;
                covers.push((id, index_of[&up]));
            }
        }
    }
    let lattice = build(labels, covers);
    // construction sorts ids by coordinate sum, a linear extension, and the
    // builder keeps such an order
    debug_assert!((0..size).all(|i| lattice.label(i) == tuple_label(&tuples[i], h)));
    Ok(ProductChains { lattice, tuples, n, h })
}

/// Element sets of each tower stage, smallest stage first (the seed).
pub fn tower_stage_sets(stage: &TowerStage) -> Vec<ElemSet> {
    stage
        .bottoms
        .iter()
        .zip(&stage.tops)
        .map(|(&b, &t)| {
            let mut s = stage.lattice.down_set(t).clone();
            s.intersect_with(stage.lattice.up_set(b));
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::{are_isomorphic, is_rigid};
    use crate::congruence::{congruence_count, con_lattice, is_simple, principal};
    use crate::lattice::{boolean, chain, hexagon, m3, n5, DEFAULT_MAX_ELEMENTS};

    #[test]
    fn glued_sum_shapes() {
        assert!(are_isomorphic(&glued_sum(&chain(2), &chain(2)), &chain(3)));
        assert_eq!(glued_sum(&m3(), &boolean(2)).size(), 8);
        let mm = glued_sum(&m3(), &m3());
        assert_eq!(mm.size(), 9);
        assert_eq!(congruence_count(&mm), 4);
    }

    #[test]
    fn congruence_counts_multiply_over_glued_sums() {
        let parts = [chain(2), chain(3), m3(), n5(), boolean(2)];
        for a in &parts {
            for b in &parts {
                let expected =
                    congruence_count(a) * congruence_count(b);
                assert_eq!(
                    congruence_count(&glued_sum(a, b)),
                    expected
                );
            }
        }
    }

    #[test]
    fn gadget_on_a_point_is_the_diamond() {
        assert!(are_isomorphic(&w_gadget(&chain(1)), &m3()));
    }

    #[test]
    fn gadget_structure() {
        let g = w_gadget_full(&m3());
        let l = &g.lattice;
        assert_eq!(l.size(), 9);
        assert_eq!(l.bottom(), g.bottom);
        assert_eq!(l.top(), g.top);
        for x in [g.u, g.v] {
            assert!(l.is_atom(x));
            assert!(l.upper_covers(x) == [g.top]);
        }
        assert!(!l.comparable(g.u, g.v));
        for &s in &g.seed_map {
            assert!(!l.comparable(s, g.u) && !l.comparable(s, g.v));
        }
        assert_eq!(congruence_count(l), 3);
    }

    #[test]
    fn gadget_congruences_form_a_chain_one_longer() {
        let g = w_gadget(&chain(2));
        assert_eq!(g.size(), 6);
        let cl = con_lattice(&g).unwrap();
        assert_eq!(cl.lattice.size(), 3);
        assert!(cl.lattice.is_chain());
        // collapsing any new-old pair is the full congruence
        let gf = w_gadget_full(&m3());
        let full = principal(&gf.lattice, gf.bottom, gf.seed_map[0]);
        assert!(full.is_nabla());
    }

    #[test]
    fn towers_add_one_congruence_per_stage() {
        let t = tower(&m3(), 3, DEFAULT_MAX_ELEMENTS).unwrap();
        assert!(t.seed_simple);
        assert_eq!(t.lattice.size(), 5 + 12);
        assert_eq!(congruence_count(&t.lattice), 5);

        let t0 = tower(&m3(), 0, DEFAULT_MAX_ELEMENTS).unwrap();
        assert!(t0.lattice.same_labeled(&m3()));

        let sub = crate::gf::sub_lattice(2, 2).unwrap();
        let t2 = tower(&sub, 2, DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(congruence_count(&t2.lattice), 4);
        let cl = con_lattice(&t2.lattice).unwrap();
        assert!(cl.lattice.is_chain());

        assert!(matches!(
            tower(&m3(), 100, 50),
            Err(Error::SizeLimitExceeded(_))
        ));
    }

    #[test]
    fn tower_bottoms_descend_and_tops_ascend() {
        let t = tower(&m3(), 3, DEFAULT_MAX_ELEMENTS).unwrap();
        for w in t.bottoms.windows(2) {
            assert!(t.lattice.lt(w[1], w[0]));
        }
        for w in t.tops.windows(2) {
            assert!(t.lattice.lt(w[0], w[1]));
        }
        assert_eq!(*t.bottoms.last().unwrap(), t.lattice.bottom());
        assert_eq!(*t.tops.last().unwrap(), t.lattice.top());
    }

    #[test]
    fn every_nontrivial_tower_congruence_collapses_one_stage() {
        let t = tower(&m3(), 2, DEFAULT_MAX_ELEMENTS).unwrap();
        let stages = tower_stage_sets(&t);
        let cons = all_congruences(&t.lattice);
        assert_eq!(cons.len(), 4);
        for c in cons.iter().filter(|c| !c.is_delta()) {
            let nonsingleton: Vec<_> =
                c.blocks().into_iter().filter(|b| b.len() > 1).collect();
            assert_eq!(nonsingleton.len(), 1);
            let block: ElemSet = {
                let mut s = ElemSet::empty(t.lattice.size());
                for &x in &nonsingleton[0] {
                    s.insert(x);
                }
                s
            };
            assert!(stages.iter().any(|stage| *stage == block));
        }
    }

    #[test]
    fn atom_replacement_splices_chains() {
        let l = m3();
        let a = l.index_of("a").unwrap();
        let r = replace_atom_intervals(&l, &[(a, &chain(3))]).unwrap();
        assert_eq!(r.size(), 6);
        let ra = r.index_of("a").unwrap();
        assert_eq!(r.height_of(ra), 2);
        for lbl in ["b", "c"] {
            let x = r.index_of(lbl).unwrap();
            assert!(r.is_atom(x));
        }

        let unchanged = replace_atom_intervals(&l, &[]).unwrap();
        assert!(unchanged.same_labeled(&l));
    }

    #[test]
    fn atom_replacement_rejects_bad_input() {
        let l = m3();
        let top = l.top();
        assert!(matches!(
            replace_atom_intervals(&l, &[(top, &chain(3))]),
            Err(Error::NotAnAtom(_))
        ));
        let a = l.index_of("a").unwrap();
        assert!(matches!(
            replace_atom_intervals(&l, &[(a, &chain(1))]),
            Err(Error::UnboundedReplacement(_))
        ));
        assert!(matches!(
            replace_atom_intervals(&l, &[(a, &chain(3)), (a, &chain(4))]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn replacing_atoms_with_distinct_rigid_lattices_kills_symmetry() {
        let sub = crate::gf::sub_lattice(2, 2).unwrap();
        assert!(!is_rigid(&sub));
        let (c3, c4, c5) = (chain(3), chain(4), chain(5));
        let atoms = sub.atoms();
        assert_eq!(atoms.len(), 3);
        let r = replace_atom_intervals(
            &sub,
            &[(atoms[0], &c3), (atoms[1], &c4), (atoms[2], &c5)],
        )
        .unwrap();
        assert!(is_rigid(&r));
    }

    #[test]
    fn cap_contains_diamonds_through_every_base_element() {
        let cap = m3_cap_full(&m3(), &chain(2)).unwrap();
        let l = &cap.lattice;
        assert!(l.is_atom(cap.v));
        assert_eq!(l.upper_covers(cap.v), [cap.top]);
        for &z in cap.base_map.iter().filter(|&&z| z != cap.bottom) {
            for (x, y) in [(z, cap.u), (z, cap.v), (cap.u, cap.v)] {
                assert_eq!(l.meet(x, y), cap.bottom);
                assert_eq!(l.join(x, y), cap.top);
            }
        }
    }

    #[test]
    fn cap_congruence_counts() {
        let sub = crate::gf::sub_lattice(2, 2).unwrap();
        let cap = m3_cap(&sub, &hexagon()).unwrap();
        assert_eq!(congruence_count(&cap), 5);

        let cap2 = m3_cap(&m3(), &n5()).unwrap();
        assert_eq!(congruence_count(&cap2), 3);

        assert!(matches!(m3_cap(&chain(2), &m3()), Err(Error::TooSmall(_))));
        assert!(matches!(m3_cap(&m3(), &chain(1)), Err(Error::TooSmall(_))));
    }

    #[test]
    fn zero_separation_of_small_lattices() {
        assert!(!zero_separated(&hexagon()).unwrap());
        assert!(!zero_separated(&n5()).unwrap());
        assert!(zero_separated(&m3()).unwrap());
        assert!(zero_separated(&chain(2)).unwrap());
        assert!(zero_separated(&crate::corpus::doubled_m3()).unwrap());
    }

    #[test]
    fn composite_congruence_counts_are_mixed_powers() {
        let base = freese_composite(2, 2, 1, 0).unwrap();
        assert!(are_isomorphic(&base, &crate::gf::sub_lattice(2, 2).unwrap()));
        assert_eq!(congruence_count(&base), 2);
        assert_eq!(congruence_count(&freese_composite(2, 2, 1, 1).unwrap()), 6);
        assert_eq!(congruence_count(&freese_composite(2, 2, 2, 0).unwrap()), 4);
        assert_eq!(congruence_count(&freese_composite(2, 2, 0, 1).unwrap()), 3);
        assert_eq!(congruence_count(&freese_composite(2, 2, 2, 1).unwrap()), 12);
        assert!(matches!(
            freese_composite(2, 2, 0, 0),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            freese_composite(2, 1, 1, 0),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn composite_summands_with_three_congruences_are_nonmodular() {
        let g = w_gadget(&crate::gf::sub_lattice(2, 2).unwrap());
        assert!(!crate::identity::is_modular(&g));
        assert!(!is_simple(&g));
    }

    #[test]
    fn products_of_chains() {
        let p = product_of_chains(2, 1, DEFAULT_MAX_ELEMENTS).unwrap();
        assert!(are_isomorphic(&p.lattice, &boolean(2)));
        let p33 = product_of_chains(2, 2, DEFAULT_MAX_ELEMENTS).unwrap();
        assert_eq!(p33.lattice.size(), 9);
        assert!(crate::identity::is_distributive(&p33.lattice));
        assert!(matches!(
            product_of_chains(10, 9, DEFAULT_MAX_ELEMENTS),
            Err(Error::SizeLimitExceeded(_))
        ));
    }

    #[test]
    fn coordinate_congruences_are_distinct() {
        let p = product_of_chains(3, 1, DEFAULT_MAX_ELEMENTS).unwrap();
        let mut seen: Vec<Congruence> = Vec::new();
        for mask in 0u32..8 {
            let x: Vec<usize> = (0..3).filter(|&i| mask >> i & 1 == 1).collect();
            let theta = p.theta_of(&x).unwrap();
            assert!(theta.is_compatible(&p.lattice));
            assert!(!seen.contains(&theta));
            seen.push(theta);
        }
        assert!(seen[0].is_nabla()); // empty coordinate set: no constraint
        let full = p.theta_of(&[0, 1, 2]).unwrap();
        assert!(full.is_delta());
        assert!(matches!(p.theta_of(&[7]), Err(Error::IndexOutOfRange(7))));
    }
}
