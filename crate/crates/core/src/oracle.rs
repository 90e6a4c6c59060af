//! Brute-force reference implementations.
//!
//! These enumerate the full search space directly from the definitions and
//! exist to cross-check the closure-based algorithms. They share no code
//! with the implementation paths they verify: partitions come from
//! restricted-growth strings, and compatibility is checked literally.

use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::lattice::{ElemId, FiniteLattice};

/// Enumerates every partition of {0..n-1} as a restricted growth string and
/// feeds it to the visitor. Bell(12) is about 4.2 million; refuse beyond.
fn for_each_partition(n: usize, mut f: impl FnMut(&[u32])) -> Result<()> {
    if n == 0 {
        return Ok(());
    }
    if n > 12 {
        return Err(Error::SizeLimitExceeded(format!(
            "partition enumeration over {n} elements"
        )));
    }
    let mut rgs = vec![0u32; n];
    loop {
        f(&rgs);
        // advance: rightmost position that can still grow
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(());
            }
            let max_prefix = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for v in rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

fn partition_is_compatible(l: &FiniteLattice, block_of: &[u32]) -> bool {
    let n = l.size();
    for x in 0..n {
        for y in x + 1..n {
            if block_of[x] != block_of[y] {
                continue;
            }
            for z in 0..n {
                if block_of[l.meet(x, z)] != block_of[l.meet(y, z)]
                    || block_of[l.join(x, z)] != block_of[l.join(y, z)]
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Every congruence of the lattice, by scanning all partitions.
pub fn all_congruences_brute(l: &FiniteLattice) -> Result<Vec<Congruence>> {
    let mut out = Vec::new();
    for_each_partition(l.size(), |rgs| {
        if partition_is_compatible(l, rgs) {
            out.push(Congruence::from_block_assignment(rgs));
        }
    })?;
    out.sort_unstable();
    Ok(out)
}

/// Smallest congruence containing (a, b), as the intersection of all
/// compatible partitions that contain it. Congruences are closed under
/// intersection, so the intersection is itself the principal congruence.
pub fn principal_brute(l: &FiniteLattice, a: ElemId, b: ElemId) -> Result<Congruence> {
    let mut acc: Option<Congruence> = None;
    for_each_partition(l.size(), |rgs| {
        if rgs[a] == rgs[b] && partition_is_compatible(l, rgs) {
            let c = Congruence::from_block_assignment(rgs);
            acc = Some(match acc.take() {
                None => c,
                Some(prev) => prev.meet(&c),
            });
        }
    })?;
    // nabla is always compatible, so acc is set
    Ok(acc.expect("nonempty lattice has nabla"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence;
    use crate::lattice::{boolean, chain, hexagon, m3, n5};

    #[test]
    fn brute_force_agrees_with_closure_enumeration() {
        for l in [m3(), n5(), hexagon(), boolean(3), chain(5)] {
            let brute = all_congruences_brute(&l).unwrap();
            let fast = congruence::all_congruences(&l);
            assert_eq!(brute, fast);
        }
    }

    #[test]
    fn brute_force_principal_agrees() {
        for l in [n5(), hexagon()] {
            for b in 0..l.size() {
                for a in 0..b {
                    assert_eq!(
                        principal_brute(&l, a, b).unwrap(),
                        congruence::principal(&l, a, b),
                    );
                }
            }
        }
    }

    #[test]
    fn partition_count_is_bell() {
        let mut count = 0usize;
        for_each_partition(5, |_| count += 1).unwrap();
        assert_eq!(count, 52); // Bell(5)
    }
}
