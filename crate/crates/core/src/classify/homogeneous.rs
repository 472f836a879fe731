use super::{full_mask, require_mask_size, vertices_of};
use crate::bits;
use crate::digraph::Digraph;
use crate::error::{check_cap, Result};
use crate::limits::Limits;

/// Every vertex outside `set` either beats all of `set` or loses to all of it.
pub fn is_homogeneous<D: Digraph + ?Sized>(g: &D, set: u64) -> bool {
    let outside = full_mask(g.order()) & !set;
    bits::ones(outside).all(|z| {
        let o = g.out_mask(z) & set;
        o == 0 || o == set
    })
}

/// Vertices outside `set` that beat some member and lose to another.
fn splitters<D: Digraph + ?Sized>(g: &D, set: u64) -> u64 {
    let outside = full_mask(g.order()) & !set;
    bits::ones(outside)
        .filter(|&z| {
            let o = g.out_mask(z) & set;
            o != 0 && o != set
        })
        .fold(0, |m, z| m | 1 << z)
}

/// Smallest homogeneous set containing `seed`, by repeatedly absorbing all
/// current splitters.
pub fn homogeneous_closure<D: Digraph + ?Sized>(g: &D, seed: u64) -> u64 {
    let mut set = seed;
    loop {
        let s = splitters(g, set);
        if s == 0 {
            return set;
        }
        set |= s;
    }
}

/// Distinct nontrivial pairwise closures, ordered by size and then by their
/// sorted vertex lists. Every nontrivial homogeneous set contains one of
/// them, so the list is empty exactly when the tournament is prime.
pub fn homogeneous_sets<D: Digraph + ?Sized>(g: &D, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    require_mask_size(n)?;
    check_cap("homogeneous sets", n, limits.homogeneous)?;
    let full = full_mask(n);
    let mut found: Vec<u64> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let c = homogeneous_closure(g, 1 << u | 1 << v);
            if c != full && !found.contains(&c) {
                found.push(c);
            }
        }
    }
    let mut sets: Vec<Vec<usize>> = found.into_iter().map(vertices_of).collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets)
}

/// All homogeneous sets are trivial. Stops at the first nontrivial closure.
pub fn is_prime<D: Digraph + ?Sized>(g: &D, limits: &Limits) -> Result<bool> {
    let n = g.order();
    require_mask_size(n)?;
    check_cap("primality", n, limits.homogeneous)?;
    let full = full_mask(n);
    for u in 0..n {
        for v in u + 1..n {
            if homogeneous_closure(g, 1 << u | 1 << v) != full {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Tournament;

    #[test]
    fn examples() {
        let lim = Limits::default();
        let d2 = Tournament::delta(2).unwrap();
        assert!(!is_prime(&d2, &lim).unwrap());
        assert!(homogeneous_sets(&d2, &lim)
            .unwrap()
            .contains(&vec![0, 1, 2]));

        let t3 = Tournament::transitive(3).unwrap();
        assert!(!is_prime(&t3, &lim).unwrap());
        assert!(homogeneous_sets(&t3, &lim).unwrap().contains(&vec![1, 2]));

        assert!(is_prime(&Tournament::circulant(3).unwrap(), &lim).unwrap());
        assert!(is_prime(&Tournament::transitive(1).unwrap(), &lim).unwrap());
        assert!(is_prime(&Tournament::transitive(2).unwrap(), &lim).unwrap());
    }

    #[test]
    fn closure_is_homogeneous() {
        let u5 = Tournament::u5();
        for seed in 1u64..32 {
            let c = homogeneous_closure(&u5, seed);
            assert!(is_homogeneous(&u5, c));
            assert_eq!(c & seed, seed);
        }
    }
}
