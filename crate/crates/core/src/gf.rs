//! Linear algebra over the prime fields GF(p) and the lattice of subspaces
//! of F_p^n ordered by inclusion.
//!
//! Every subspace is kept in reduced row-echelon form with no zero rows, so
//! structural equality of the basis matrix coincides with equality of
//! subspaces. Meets are computed by the Zassenhaus kernel trick, joins by
//! re-reducing the stacked bases.

use crate::error::{Error, Result};
use crate::lattice::{BuildOptions, ElemId, FiniteLattice, DEFAULT_MAX_ELEMENTS};
use std::collections::HashMap;

/// Upper bound on the field characteristic; only small primes are ever
/// needed and small-integer modular arithmetic stays trivially exact.
pub const MAX_PRIME: u64 = 1 << 8;

fn check_prime(p: u64) -> Result<()> {
    if p >= MAX_PRIME {
        return Err(Error::InvalidParameter(format!(
            "field characteristic {p} exceeds the supported bound {MAX_PRIME}"
        )));
    }
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p for prime p and a != 0
    debug_assert!(a % p != 0);
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// In-place reduction to reduced row-echelon form; returns the matrix with
/// zero rows removed and pivots normalized to 1 with zeros above and below.
fn rref(p: u64, mut rows: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0usize;
    for col in 0..width {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = inv_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] % p != 0 {
                let factor = rows[r][col] % p;
                for c in 0..width {
                    rows[r][c] = (rows[r][c] + (p - factor) * rows[rank][c]) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// A subspace of F_p^n in canonical reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    p: u64,
    n: usize,
    basis: Vec<Vec<u64>>,
}

impl Subspace {
    pub fn zero(p: u64, n: usize) -> Result<Self> {
        canonicalize(p, n, &[])
    }

    pub fn full(p: u64, n: usize) -> Result<Self> {
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        canonicalize(p, n, &rows)
    }

    /// Span of the standard unit vectors indexed by `indices`.
    pub fn coordinate_span(p: u64, n: usize, indices: &[usize]) -> Result<Self> {
        for &i in indices {
            if i >= n {
                return Err(Error::IndexOutOfRange(i));
            }
        }
        let rows: Vec<Vec<u64>> = indices
            .iter()
            .map(|&i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        canonicalize(p, n, &rows)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn contains_vector(&self, v: &[u64]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { expect: self.n, got: v.len() });
        }
        let mut stacked = self.basis.clone();
        stacked.push(v.iter().map(|&x| x % self.p).collect());
        Ok(rref(self.p, stacked).len() == self.dim())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        if self.p != other.p || self.n != other.n {
            return Err(Error::AmbientMismatch);
        }
        let mut stacked = other.basis.clone();
        stacked.extend(self.basis.iter().cloned());
        Ok(rref(self.p, stacked).len() == other.dim())
    }

    /// Every vector of the subspace, in a deterministic order.
    pub fn all_vectors(&self) -> Vec<Vec<u64>> {
        let d = self.dim();
        let total = (self.p as usize).pow(d as u32);
        let mut out = Vec::with_capacity(total);
        for mut code in 0..total {
            let mut v = vec![0u64; self.n];
            for row in &self.basis {
                let coeff = (code % self.p as usize) as u64;
                code /= self.p as usize;
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = (*x + coeff * r) % self.p;
                }
            }
            out.push(v);
        }
        out.sort_unstable();
        out
    }

    /// Compact unique label: rows of the echelon matrix joined by `|`;
    /// the zero subspace is labeled `0`.
    pub fn label(&self) -> String {
        if self.basis.is_empty() {
            return "0".to_string();
        }
        let fmt_row = |row: &Vec<u64>| -> String {
            if self.p <= 10 {
                row.iter().map(u64::to_string).collect()
            } else {
                row.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            }
        };
        self.basis.iter().map(fmt_row).collect::<Vec<_>>().join("|")
    }
}

/// Canonical echelon representation of the span of the given vectors; the
/// empty list gives the zero subspace. Entries are reduced mod p.
pub fn canonicalize(p: u64, n: usize, spanning_vectors: &[Vec<u64>]) -> Result<Subspace> {
    check_prime(p)?;
    for v in spanning_vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expect: n, got: v.len() });
        }
    }
    let rows: Vec<Vec<u64>> = spanning_vectors
        .iter()
        .map(|v| v.iter().map(|&x| x % p).collect())
        .collect();
    Ok(Subspace { p, n, basis: rref(p, rows) })
}

/// Subspace sum a + b (the join in the subspace lattice).
pub fn sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.p != b.p || a.n != b.n {
        return Err(Error::AmbientMismatch);
    }
    let mut rows = a.basis.clone();
    rows.extend(b.basis.iter().cloned());
    Ok(Subspace { p: a.p, n: a.n, basis: rref(a.p, rows) })
}

/// Subspace intersection a ∩ b (the meet), by the Zassenhaus construction:
/// row-reduce the block matrix [A|A; B|0] over 2n columns — the rows whose
/// left half vanished have right halves spanning the intersection.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.p != b.p || a.n != b.n {
        return Err(Error::AmbientMismatch);
    }
    let (p, n) = (a.p, a.n);
    let mut block: Vec<Vec<u64>> = Vec::with_capacity(a.dim() + b.dim());
    for row in &a.basis {
        let mut wide = row.clone();
        wide.extend(row.iter().copied());
        block.push(wide);
    }
    for row in &b.basis {
        let mut wide = row.clone();
        wide.extend(std::iter::repeat(0).take(n));
        block.push(wide);
    }
    let reduced = rref(p, block);
    let kernel_rows: Vec<Vec<u64>> = reduced
        .into_iter()
        .filter(|row| row[..n].iter().all(|&x| x == 0))
        .map(|row| row[n..].to_vec())
        .collect();
    Ok(Subspace { p, n, basis: rref(p, kernel_rows) })
}

/// Gaussian binomial coefficient: the number of k-dimensional subspaces of
/// F_p^n.
pub fn gaussian_binomial(p: u64, n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let p = p as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= p.pow((n - i) as u32) - 1;
        den *= p.pow((k - i) as u32) - 1;
    }
    num / den
}

/// The subspace lattice of F_p^n together with the subspace attached to
/// each lattice element.
#[derive(Clone, Debug)]
pub struct SubspaceLattice {
    pub lattice: FiniteLattice,
    pub subspaces: Vec<Subspace>,
    pub p: u64,
    pub n: usize,
}

impl SubspaceLattice {
    pub fn id_of(&self, s: &Subspace) -> Option<ElemId> {
        self.subspaces.iter().position(|t| t == s)
    }

    pub fn subspace(&self, id: ElemId) -> &Subspace {
        &self.subspaces[id]
    }
}

/// Enumerates every subspace of F_p^n exactly once by generating reduced
/// echelon matrices directly: choose the pivot columns, then fill each free
/// position (right of its row's pivot, not in a pivot column) with an
/// arbitrary field element.
fn enumerate_subspaces(p: u64, n: usize, max: usize) -> Result<Vec<Subspace>> {
    let total: u128 = (0..=n).map(|k| gaussian_binomial(p, n, k)).sum();
    if total > max as u128 {
        return Err(Error::SizeLimitExceeded(format!(
            "F_{p}^{n} has {total} subspaces, above the limit {max}"
        )));
    }
    fn next_combination(pivots: &mut [usize], n: usize) -> bool {
        let d = pivots.len();
        let mut i = d;
        while i > 0 {
            i -= 1;
            if pivots[i] < n - (d - i) {
                pivots[i] += 1;
                for j in i + 1..d {
                    pivots[j] = pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    let mut out = Vec::with_capacity(total as usize);
    for d in 0..=n {
        let mut pivots: Vec<usize> = (0..d).collect();
        loop {
            let mut free_positions = Vec::new();
            for (r, &pc) in pivots.iter().enumerate() {
                for c in pc + 1..n {
                    if !pivots.contains(&c) {
                        free_positions.push((r, c));
                    }
                }
            }
            let combos = (p as usize)
                .checked_pow(free_positions.len() as u32)
                .expect("free-entry count bounded by size limit");
            for mut code in 0..combos {
                let mut m = vec![vec![0u64; n]; d];
                for (r, &pc) in pivots.iter().enumerate() {
                    m[r][pc] = 1;
                }
                for &(r, c) in &free_positions {
                    m[r][c] = (code % p as usize) as u64;
                    code /= p as usize;
                }
                out.push(Subspace { p, n, basis: m });
            }
            if !next_combination(&mut pivots, n) {
                break;
            }
        }
    }
    debug_assert_eq!(out.len() as u128, total);
    out.sort_unstable_by(|a, b| (a.dim(), &a.basis).cmp(&(b.dim(), &b.basis)));
    Ok(out)
}

pub fn subspace_lattice_with_limit(p: u64, n: usize, max: usize) -> Result<SubspaceLattice> {
    check_prime(p)?;
    if n == 0 {
        return Err(Error::InvalidParameter(
            "ambient dimension must be at least 1".to_string(),
        ));
    }
    let subspaces = enumerate_subspaces(p, n, max)?;
    let labels: Vec<String> = subspaces.iter().map(Subspace::label).collect();
    let mut covers: Vec<(ElemId, ElemId)> = Vec::new();
    for (i, a) in subspaces.iter().enumerate() {
        for (j, b) in subspaces.iter().enumerate() {
            if b.dim() == a.dim() + 1 && a.is_subspace_of(b)? {
                covers.push((i, j));
            }
        }
    }
    let (lattice, warnings) = FiniteLattice::build_from_cover_ids(
        labels.clone(),
        covers,
        BuildOptions { max_elements: max, ..BuildOptions::default() },
    )?;
    debug_assert!(warnings.is_empty());
    // realign subspaces with the lattice's element order via unique labels
    let by_label: HashMap<&str, usize> =
        labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let subspaces: Vec<Subspace> = (0..lattice.size())
        .map(|id| subspaces[by_label[lattice.label(id)]].clone())
        .collect();
    Ok(SubspaceLattice { lattice, subspaces, p, n })
}

pub fn subspace_lattice(p: u64, n: usize) -> Result<SubspaceLattice> {
    subspace_lattice_with_limit(p, n, DEFAULT_MAX_ELEMENTS)
}

/// The lattice of all subspaces of F_p^n ordered by inclusion.
pub fn sub_lattice(p: u64, n: usize) -> Result<FiniteLattice> {
    Ok(subspace_lattice(p, n)?.lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::are_isomorphic;
    use crate::lattice::m3;
    use std::collections::BTreeSet;

    #[test]
    fn canonicalization_examples() {
        let s = canonicalize(2, 2, &[vec![1, 1]]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis(), &[vec![1, 1]]);

        let full = canonicalize(2, 2, &[vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(full.dim(), 2);
        assert_eq!(full, Subspace::full(2, 2).unwrap());

        let scaled = canonicalize(3, 2, &[vec![2, 2]]).unwrap();
        assert_eq!(scaled.basis(), &[vec![1, 1]]);

        assert_eq!(canonicalize(2, 3, &[]).unwrap().dim(), 0);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(canonicalize(4, 2, &[]), Err(Error::NotPrime(4)));
        assert_eq!(canonicalize(1, 2, &[]), Err(Error::NotPrime(1)));
        assert!(matches!(
            canonicalize(2, 3, &[vec![1, 0]]),
            Err(Error::DimensionMismatch { expect: 3, got: 2 })
        ));
        assert!(matches!(canonicalize(311, 2, &[]), Err(Error::InvalidParameter(_))));
        let a = Subspace::zero(2, 2).unwrap();
        let b = Subspace::zero(3, 2).unwrap();
        assert_eq!(sum(&a, &b), Err(Error::AmbientMismatch));
        assert_eq!(intersect(&a, &b), Err(Error::AmbientMismatch));
    }

    #[test]
    fn lines_of_the_binary_plane() {
        let l1 = canonicalize(2, 2, &[vec![1, 0]]).unwrap();
        let l2 = canonicalize(2, 2, &[vec![0, 1]]).unwrap();
        let l3 = canonicalize(2, 2, &[vec![1, 1]]).unwrap();
        for (a, b) in [(&l1, &l2), (&l1, &l3), (&l2, &l3)] {
            assert_eq!(intersect(a, b).unwrap().dim(), 0);
            assert_eq!(sum(a, b).unwrap(), Subspace::full(2, 2).unwrap());
        }
    }

    #[test]
    fn dimension_equation_holds_exhaustively() {
        let sl = subspace_lattice(2, 3).unwrap();
        assert_eq!(sl.subspaces.len(), 16);
        for a in &sl.subspaces {
            for b in &sl.subspaces {
                let s = sum(a, b).unwrap();
                let i = intersect(a, b).unwrap();
                assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            }
        }
    }

    #[test]
    fn intersection_agrees_with_vector_level_oracle() {
        let sl = subspace_lattice(3, 2).unwrap();
        for a in &sl.subspaces {
            for b in &sl.subspaces {
                let fast = intersect(a, b).unwrap();
                let va: BTreeSet<_> = a.all_vectors().into_iter().collect();
                let vb: BTreeSet<_> = b.all_vectors().into_iter().collect();
                let common: Vec<Vec<u64>> = va.intersection(&vb).cloned().collect();
                let slow = canonicalize(3, 2, &common).unwrap();
                assert_eq!(fast, slow);
            }
        }
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        assert_eq!(sub_lattice(2, 2).unwrap().size(), 5);
        assert_eq!(sub_lattice(2, 3).unwrap().size(), 16);
        assert_eq!(sub_lattice(3, 2).unwrap().size(), 6);
        assert_eq!(sub_lattice(2, 4).unwrap().size(), 67);
        assert_eq!(gaussian_binomial(2, 4, 2), 35);
        assert_eq!(gaussian_binomial(3, 3, 1), 13);
    }

    #[test]
    fn binary_plane_subspace_lattice_is_m3() {
        assert!(are_isomorphic(&sub_lattice(2, 2).unwrap(), &m3()));
    }

    #[test]
    fn grading_and_atom_counts() {
        for (p, n) in [(2u64, 3usize), (3, 2), (5, 2)] {
            let sl = subspace_lattice(p, n).unwrap();
            for &(lo, hi) in sl.lattice.covers() {
                assert_eq!(sl.subspaces[hi].dim(), sl.subspaces[lo].dim() + 1);
            }
            let expected_atoms = ((p.pow(n as u32) - 1) / (p - 1)) as usize;
            assert_eq!(sl.lattice.atoms().len(), expected_atoms);
        }
    }

    #[test]
    fn lattice_tables_agree_with_linear_algebra() {
        let sl = subspace_lattice(2, 3).unwrap();
        let n = sl.lattice.size();
        for i in 0..n {
            for j in 0..n {
                let m = sl.lattice.meet(i, j);
                let jn = sl.lattice.join(i, j);
                let want_meet = intersect(&sl.subspaces[i], &sl.subspaces[j]).unwrap();
                let want_join = sum(&sl.subspaces[i], &sl.subspaces[j]).unwrap();
                assert_eq!(sl.subspaces[m], want_meet);
                assert_eq!(sl.subspaces[jn], want_join);
            }
        }
    }

    #[test]
    fn size_limit_is_enforced() {
        assert!(matches!(
            subspace_lattice_with_limit(2, 3, 10),
            Err(Error::SizeLimitExceeded(_))
        ));
    }

    #[test]
    fn coordinate_span_and_membership() {
        let s = Subspace::coordinate_span(2, 3, &[0, 2]).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains_vector(&[1, 0, 1]).unwrap());
        assert!(!s.contains_vector(&[0, 1, 0]).unwrap());
        assert_eq!(
            Subspace::coordinate_span(2, 3, &[3]),
            Err(Error::IndexOutOfRange(3))
        );
    }
}
