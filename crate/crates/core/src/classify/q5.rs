use serde::{Deserialize, Serialize};

use super::{full_mask, is_transitive_set, require_mask_size, vertices_of};
use crate::bits;
use crate::digraph::{Digraph, Tournament};
use crate::error::{check_cap, Result};
use crate::limits::Limits;

/// Why a tournament belongs to `Q_5`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Q5Witness {
    /// Isomorphic to `C_n`: `map[i]` is the image of circulant vertex `i`.
    Circulant { map: Vec<usize> },
    /// Three parts (possibly empty) whose pairwise unions are transitive.
    Partition { parts: [Vec<usize>; 3] },
}

/// Isomorphism onto `C_n`, trying every arc `a -> b` as the image of `0 -> 1`.
pub fn circulant_isomorphism<D: Digraph + ?Sized>(g: &D) -> Option<Vec<usize>> {
    let n = g.order();
    if n < 3 || n % 2 == 0 || n > 64 {
        return None;
    }
    if (0..n).any(|v| g.out_mask(v).count_ones() as usize != (n - 1) / 2) {
        return None;
    }
    let c = Tournament::circulant(n).expect("odd n >= 3");
    let mut map = vec![0usize; n];

    fn extend<D: Digraph + ?Sized>(
        g: &D,
        c: &Tournament,
        k: usize,
        used: u64,
        map: &mut [usize],
    ) -> bool {
        let n = g.order();
        if k == n {
            return true;
        }
        let mut cand = full_mask(n) & !used;
        for j in 0..k {
            cand &= if c.has_arc(j, k) {
                g.out_mask(map[j])
            } else {
                g.in_mask(map[j])
            };
        }
        for x in bits::ones(cand) {
            map[k] = x;
            if extend(g, c, k + 1, used | 1 << x, map) {
                return true;
            }
        }
        false
    }

    for a in 0..n {
        for b in bits::ones(g.out_mask(a)) {
            map[0] = a;
            map[1] = b;
            if extend(g, &c, 2, 1 << a | 1 << b, &mut map) {
                return Some(map);
            }
        }
    }
    None
}

fn assign<D: Digraph + ?Sized>(g: &D, v: usize, parts: &mut [u64; 3], opened: usize) -> bool {
    if v == g.order() {
        return true;
    }
    let bit = 1u64 << v;
    // parts are opened in order, so an unopened part is tried only once
    for i in 0..(opened + 1).min(3) {
        let ok = (0..3)
            .filter(|&j| j != i)
            .all(|j| is_transitive_set(g, parts[i] | parts[j] | bit));
        if ok {
            parts[i] |= bit;
            if assign(g, v + 1, parts, opened.max(i + 1)) {
                return true;
            }
            parts[i] &= !bit;
        }
    }
    false
}

/// Three-part partition with every union of two parts transitive.
pub fn three_part_partition<D: Digraph + ?Sized>(g: &D) -> Option<[u64; 3]> {
    let mut parts = [0u64; 3];
    assign(g, 0, &mut parts, 0).then_some(parts)
}

/// Membership in `Q_5`: isomorphic to a circulant `C_n` (checked first),
/// or splittable into three parts with transitive pairwise unions. Empty
/// parts are allowed, so transitive tournaments qualify.
pub fn q5_member<D: Digraph + ?Sized>(g: &D, limits: &Limits) -> Result<Option<Q5Witness>> {
    let n = g.order();
    require_mask_size(n)?;
    if let Some(map) = circulant_isomorphism(g) {
        return Ok(Some(Q5Witness::Circulant { map }));
    }
    check_cap("Q_5 membership", n, limits.q5)?;
    Ok(three_part_partition(g).map(|p| Q5Witness::Partition {
        parts: p.map(vertices_of),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{generator, random_tournament};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn circulants_via_condition_one() {
        for n in [3, 5, 7, 9, 11] {
            let c = Tournament::circulant(n).unwrap();
            match q5_member(&c, &lim()).unwrap() {
                Some(Q5Witness::Circulant { map }) => assert_eq!(map, (0..n).collect::<Vec<_>>()),
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn relabelled_circulant_is_found() {
        let c = Tournament::circulant(7).unwrap();
        let perm = [3, 6, 0, 5, 1, 4, 2];
        let g = c.relabel(&perm);
        let map = circulant_isomorphism(&g).unwrap();
        for i in 0..7 {
            for j in 0..7 {
                if i != j {
                    assert_eq!(c.has_arc(i, j), g.has_arc(map[i], map[j]));
                }
            }
        }
    }

    #[test]
    fn transitive_uses_one_part() {
        let t = Tournament::transitive(6).unwrap();
        assert_eq!(
            q5_member(&t, &lim()).unwrap(),
            Some(Q5Witness::Partition {
                parts: [vec![0, 1, 2, 3, 4, 5], vec![], vec![]]
            })
        );
    }

    #[test]
    fn partition_witness_is_valid() {
        let mut rng = generator(1);
        let g = random_tournament(10, &mut rng);
        if let Some(p) = three_part_partition(&g) {
            for i in 0..3 {
                for j in i + 1..3 {
                    assert!(is_transitive_set(&g, p[i] | p[j]));
                }
            }
            assert_eq!(p[0] | p[1] | p[2], full_mask(10));
        }
    }
}
