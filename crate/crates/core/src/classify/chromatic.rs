use serde::{Deserialize, Serialize};

use super::{full_mask, is_transitive_set, require_mask_size, vertices_of};
use crate::digraph::Digraph;
use crate::error::{check_cap, Error, Result};
use crate::limits::Limits;

/// Partition into transitive classes, listed by smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub chi: usize,
    pub classes: Vec<Vec<usize>>,
}

/// A 2-coloring with a smallest possible class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColoring {
    pub s: usize,
    pub small: Vec<usize>,
    pub large: Vec<usize>,
}

fn extend<D: Digraph + ?Sized>(g: &D, v: usize, classes: &mut Vec<u64>, k: usize) -> bool {
    if v == g.order() {
        return true;
    }
    let bit = 1u64 << v;
    for c in 0..classes.len() {
        if is_transitive_set(g, classes[c] | bit) {
            classes[c] |= bit;
            if extend(g, v + 1, classes, k) {
                return true;
            }
            classes[c] &= !bit;
        }
    }
    if classes.len() < k {
        classes.push(bit);
        if extend(g, v + 1, classes, k) {
            return true;
        }
        classes.pop();
    }
    false
}

/// Fewest transitive classes covering the vertices, with the
/// lexicographically least class-index vector among optimal colorings.
pub fn chromatic_number<D: Digraph + ?Sized>(g: &D, limits: &Limits) -> Result<Coloring> {
    let n = g.order();
    require_mask_size(n)?;
    check_cap("chromatic number", n, limits.chromatic)?;
    for k in 1..=n {
        let mut classes = Vec::with_capacity(k);
        if extend(g, 0, &mut classes, k) {
            return Ok(Coloring {
                chi: k,
                classes: classes.into_iter().map(vertices_of).collect(),
            });
        }
    }
    unreachable!("singletons always form a coloring")
}

/// Visits the `k`-subsets of `0..n` as masks in lexicographic order of their
/// sorted element lists; stops when `f` returns true.
fn first_combination(n: usize, k: usize, mut f: impl FnMut(u64) -> bool) -> Option<u64> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        if f(mask) {
            return Some(mask);
        }
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `s(H)`: smallest class size over 2-colorings into transitive sets. Zero
/// for transitive `H` (the second class is empty).
pub fn min_color_class<D: Digraph + ?Sized>(g: &D, limits: &Limits) -> Result<TwoColoring> {
    let n = g.order();
    require_mask_size(n)?;
    check_cap("minimum color class", n, limits.chromatic)?;
    let full = full_mask(n);
    for s in 0..=n / 2 {
        let found = first_combination(n, s, |a| {
            is_transitive_set(g, a) && is_transitive_set(g, full & !a)
        });
        if let Some(a) = found {
            return Ok(TwoColoring {
                s,
                small: vertices_of(a),
                large: vertices_of(full & !a),
            });
        }
    }
    Err(Error::NotTwoChromatic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::is_transitive_set;
    use crate::classify::mask_of;
    use crate::digraph::Tournament;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(
            chromatic_number(&Tournament::transitive(5).unwrap(), &lim())
                .unwrap()
                .chi,
            1
        );
        let c3 = chromatic_number(&Tournament::circulant(3).unwrap(), &lim()).unwrap();
        assert_eq!(c3.chi, 2);
        assert_eq!(c3.classes, vec![vec![0, 1], vec![2]]);
        assert_eq!(
            chromatic_number(&Tournament::delta(3).unwrap(), &lim())
                .unwrap()
                .chi,
            2
        );
        // the Paley tournament on 7 vertices has no transitive 4-set
        let p7 = Tournament::from_fn(7, |i, j| matches!((j - i) % 7, 1 | 2 | 4));
        let col = chromatic_number(&p7, &lim()).unwrap();
        assert_eq!(col.chi, 3);
        for class in &col.classes {
            assert!(is_transitive_set(&p7, mask_of(class)));
        }
        assert_eq!(
            chromatic_number(&Tournament::circulant(7).unwrap(), &lim())
                .unwrap()
                .chi,
            2
        );
    }

    #[test]
    fn cap_is_reported() {
        let t = Tournament::transitive(30).unwrap();
        assert!(chromatic_number(&t, &lim()).unwrap_err().is_cap());
    }

    #[test]
    fn min_class_examples() {
        assert_eq!(
            min_color_class(&Tournament::transitive(6).unwrap(), &lim())
                .unwrap()
                .s,
            0
        );
        let c3 = min_color_class(&Tournament::circulant(3).unwrap(), &lim()).unwrap();
        assert_eq!((c3.s, c3.small.clone()), (1, vec![0]));
        assert!(min_color_class(&Tournament::u5(), &lim()).unwrap().s >= 2);
        let p7 = Tournament::from_fn(7, |i, j| matches!((j - i) % 7, 1 | 2 | 4));
        assert_eq!(min_color_class(&p7, &lim()), Err(Error::NotTwoChromatic));
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut seen = Vec::new();
        first_combination(4, 2, |m| {
            seen.push(m);
            false
        });
        assert_eq!(seen, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(first_combination(3, 0, |_| true), Some(0));
    }
}
