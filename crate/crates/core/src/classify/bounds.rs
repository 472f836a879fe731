use serde::{Deserialize, Serialize};

use super::{
    chromatic_number, is_forest_tournament, is_prime, is_star, is_weak_forest, min_color_class,
    min_feedback_edges,
};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Structural invariants of one tournament. `None` means the value is
/// undefined (`s` when `chi >= 3`) or the exact search exceeded its limit;
/// `skipped` names the searches that were capped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassProfile {
    pub n: usize,
    pub chi: Option<usize>,
    pub s: Option<usize>,
    pub beta: Option<usize>,
    pub is_forest: Option<bool>,
    pub is_weak_forest: Option<bool>,
    pub is_star: Option<bool>,
    pub is_prime: Option<bool>,
    pub skipped: Vec<String>,
}

fn capped<T>(r: Result<T>, skipped: &mut Vec<String>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ Error::CapExceeded { .. }) => {
            skipped.push(e.to_string());
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Computes every invariant that fits within `limits`, using the implications
/// star => forest => weak forest => chi <= 2 to skip searches whose answer is
/// already determined.
pub fn classify<D: Digraph + ?Sized>(g: &D, limits: &Limits) -> Result<ClassProfile> {
    let n = g.order();
    let mut skipped = Vec::new();
    let chi = capped(chromatic_number(g, limits), &mut skipped)?.map(|c| c.chi);
    let two_chromatic = chi.map(|c| c <= 2);
    let s = match two_chromatic {
        Some(false) => None,
        _ => match min_color_class(g, limits) {
            Ok(t) => Some(t.s),
            Err(Error::NotTwoChromatic) => None,
            Err(e @ Error::CapExceeded { .. }) => {
                skipped.push(e.to_string());
                None
            }
            Err(e) => return Err(e),
        },
    };
    let beta = capped(min_feedback_edges(g, limits), &mut skipped)?.map(|f| f.beta);
    let is_star = if two_chromatic == Some(false) {
        Some(false)
    } else {
        Some(is_star(g)?.is_some())
    };
    let is_forest = if is_star == Some(true) {
        Some(true)
    } else if two_chromatic == Some(false) {
        Some(false)
    } else {
        capped(is_forest_tournament(g, limits), &mut skipped)?.map(|w| w.is_some())
    };
    let is_weak_forest = if is_forest == Some(true) || beta.is_some_and(|b| b <= 2) {
        Some(true)
    } else if two_chromatic == Some(false) {
        Some(false)
    } else {
        capped(is_weak_forest(g, limits), &mut skipped)?.map(|w| w.is_some())
    };
    let is_prime = capped(is_prime(g, limits), &mut skipped)?;
    Ok(ClassProfile {
        n,
        chi,
        s,
        beta,
        is_forest,
        is_weak_forest,
        is_star,
        is_prime,
        skipped,
    })
}

/// One asymptotic statement about `t(T_n,H)` or `t(n,H)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Regime {
    /// `"t(T_n,H)"` or `"t(n,H)"`.
    pub quantity: String,
    /// `"exact"`, `"lower"`, `"upper"`, `"asymptotic"` or `"conjecture"`.
    pub kind: String,
    pub statement: String,
    /// Exponent of `n` when the statement is a power law.
    pub exponent: Option<f64>,
    /// Leading constant in front of `C(n,2)` for the quadratic regime.
    pub constant: Option<f64>,
}

impl Regime {
    fn new(quantity: &str, kind: &str, statement: String) -> Self {
        Self {
            quantity: quantity.into(),
            kind: kind.into(),
            statement,
            exponent: None,
            constant: None,
        }
    }

    fn exponent(mut self, e: f64) -> Self {
        self.exponent = Some(e);
        self
    }

    fn constant(mut self, c: f64) -> Self {
        self.constant = Some(c);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub profile: ClassProfile,
    pub is_hero: Option<bool>,
    pub regimes: Vec<Regime>,
    /// Statements that could not be decided because an invariant is unknown.
    pub unknown: Vec<String>,
}

/// `epsilon` in the lower exponent `1 + 4/(3h - epsilon)` for non-forests.
pub fn non_forest_epsilon(h: usize) -> usize {
    [4, 7, 6, 9][h % 4]
}

/// Which known bounds apply to `H`. Hero status is taken from the caller.
pub fn bound_profile<D: Digraph + ?Sized>(
    g: &D,
    is_hero: Option<bool>,
    limits: &Limits,
) -> Result<BoundReport> {
    let profile = classify(g, limits)?;
    let h = profile.n;
    let mut regimes = Vec::new();
    let mut unknown = Vec::new();

    match profile.chi {
        None => unknown.push("chromatic number exceeds the search limit; no regime decided".into()),
        Some(1) => {
            regimes.push(Regime::new(
                "t(T_n,H)",
                "exact",
                format!("t(T_n,H) = 0 for n >= {h}"),
            ));
            let need = 1u128
                .checked_shl(h as u32 - 1)
                .map_or("2^(h-1)".to_string(), |v| v.to_string());
            regimes.push(Regime::new(
                "t(n,H)",
                "exact",
                format!("t(n,H) = 0 for n >= {need}"),
            ));
        }
        Some(r) if r >= 3 => {
            let c = 1.0 - 1.0 / (r as f64 - 1.0);
            let frac = format!("{}/{}", r - 2, r - 1);
            regimes.push(
                Regime::new("t(T_n,H)", "lower", format!("t(T_n,H) >= ({frac})*C(n,2)"))
                    .constant(c)
                    .exponent(2.0),
            );
            regimes.push(
                Regime::new(
                    "t(n,H)",
                    "asymptotic",
                    format!("t(n,H) = ({frac} + o(1))*C(n,2)"),
                )
                .constant(c)
                .exponent(2.0),
            );
        }
        Some(_) => {
            match profile.s {
                Some(s) if s >= 1 => {
                    let e = 2.0 - 1.0 / f64::powi(2.0, s as i32 - 1);
                    let statement = if s == 1 {
                        "t(n,H) = O(n)".to_string()
                    } else {
                        format!("t(n,H) = O(n^(2-1/2^{})) = O(n^{e:.4})", s - 1)
                    };
                    regimes.push(Regime::new("t(n,H)", "upper", statement).exponent(e));
                    if is_hero == Some(true) {
                        let e = 2.0 - 1.0 / s as f64;
                        regimes.push(
                            Regime::new(
                                "t(n,H)",
                                "upper",
                                format!("t(n,H) = O(n^(2-1/{s})) = O(n^{e:.4}) (hero)"),
                            )
                            .exponent(e),
                        );
                    }
                }
                _ => unknown.push("s(H) unknown; 2-chromatic upper bound not instantiated".into()),
            }
            match profile.beta {
                Some(b) if b <= 2 => {
                    regimes.push(
                        Regime::new("t(T_n,H)", "upper", "t(T_n,H) = O(n)".into()).exponent(1.0),
                    );
                }
                Some(_) => {}
                None => {
                    unknown.push("beta(H) unknown; linear bound for beta <= 2 not checked".into())
                }
            }
            match profile.is_forest {
                Some(false) => {
                    let eps = non_forest_epsilon(h);
                    let e = 1.0 + 4.0 / (3.0 * h as f64 - eps as f64);
                    regimes.push(
                        Regime::new(
                            "t(T_n,H)",
                            "lower",
                            format!("t(T_n,H) = Omega(n^(1+4/(3*{h}-{eps}))) = Omega(n^{e:.4})"),
                        )
                        .exponent(e),
                    );
                }
                Some(true) => {
                    let linear_known = profile.s == Some(1) || profile.beta.is_some_and(|b| b <= 2);
                    if !linear_known {
                        regimes.push(Regime::new(
                            "t(T_n,H)",
                            "conjecture",
                            "t(T_n,H) = n*(log n)^O(1) (conjectured for tournament forests)".into(),
                        ));
                    }
                }
                None => {
                    unknown.push("forest status unknown; non-forest lower bound not checked".into())
                }
            }
        }
    }

    Ok(BoundReport {
        profile,
        is_hero,
        regimes,
        unknown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Tournament;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn c3_is_linear() {
        let r = bound_profile(&Tournament::circulant(3).unwrap(), None, &lim()).unwrap();
        assert!(r
            .regimes
            .iter()
            .any(|x| x.quantity == "t(T_n,H)" && x.statement == "t(T_n,H) = O(n)"));
    }

    #[test]
    fn delta3_non_forest_exponent() {
        let r = bound_profile(&Tournament::delta(3).unwrap(), None, &lim()).unwrap();
        assert_eq!(r.profile.is_forest, Some(false));
        assert_eq!(non_forest_epsilon(9), 7);
        let lower = r.regimes.iter().find(|x| x.kind == "lower").unwrap();
        assert!((lower.exponent.unwrap() - (1.0 + 4.0 / 20.0)).abs() < 1e-12);
    }

    #[test]
    fn three_chromatic_is_quadratic() {
        let p7 = Tournament::from_fn(7, |i, j| matches!((j - i) % 7, 1 | 2 | 4));
        let r = bound_profile(&p7, None, &lim()).unwrap();
        assert_eq!(r.profile.chi, Some(3));
        assert!(r.regimes.iter().all(|x| x.constant == Some(0.5)));
    }

    #[test]
    fn hero_flag_adds_bound() {
        let u5 = Tournament::u5();
        let plain = bound_profile(&u5, None, &lim()).unwrap();
        let hero = bound_profile(&u5, Some(true), &lim()).unwrap();
        assert_eq!(hero.regimes.len(), plain.regimes.len() + 1);
    }

    #[test]
    fn profile_of_transitive() {
        let p = classify(&Tournament::transitive(5).unwrap(), &lim()).unwrap();
        assert_eq!(p.chi, Some(1));
        assert_eq!(p.s, Some(0));
        assert_eq!(p.beta, Some(0));
        assert_eq!(p.is_star, Some(true));
        assert_eq!(p.is_prime, Some(false));
    }
}
