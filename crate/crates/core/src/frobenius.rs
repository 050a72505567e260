//! Frobenius structures on monoids in spans.
//!
//! A monoid coming from a 2-truncated simplicial set becomes a Frobenius object
//! once the pairing `ε ∘ μ` is nondegenerate. Nondegenerate pairings in spans
//! are exactly those of the form `X × X ←(1, α̂) X → •` for a bijection `α̂`, so
//! the extra datum is a bijection of `X_1`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplicial::{monoid_from_simplicial, MonoidSpans, TruncatedSS2};
use crate::span::{FiniteSet, SetMap, Span};

pub const FROBENIUS_CONDITION_1: &str = "Theorem frobenius (1)";
pub const FROBENIUS_CONDITION_2: &str = "Theorem frobenius (2)";
pub const NOT_A_MONOID: &str = "not a monoid";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusDatum {
    base: TruncatedSS2,
    alpha_hat: SetMap,
}

impl FrobeniusDatum {
    /// Pairs simplicial data with `α̂`. The monoid conditions are not checked
    /// here so that failing candidates can still be inspected.
    pub fn new(base: TruncatedSS2, alpha_hat: SetMap) -> Result<Self> {
        if alpha_hat.dom() != base.x1() || alpha_hat.cod() != base.x1() {
            return Err(Error::Mismatch("alpha_hat must be a map X1 → X1".into()));
        }
        if !alpha_hat.is_bijective() {
            return Err(Error::Precondition("alpha_hat is not a bijection".into()));
        }
        Ok(FrobeniusDatum { base, alpha_hat })
    }

    pub fn base(&self) -> &TruncatedSS2 {
        &self.base
    }

    pub fn alpha_hat(&self) -> &SetMap {
        &self.alpha_hat
    }

    pub fn carrier(&self) -> &FiniteSet {
        self.base.x1()
    }

    /// `α̂ ∘ s0` as a membership table on `X_1`.
    fn counit_support(&self) -> Vec<bool> {
        let mut hit = vec![false; self.carrier().len()];
        for &x in self.base.s0().images() {
            hit[self.alpha_hat.at(x)] = true;
        }
        hit
    }
}

/// `γ: X_1 → X_2` from the Frobenius criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaWitness {
    pub gamma: SetMap,
}

impl GammaWitness {
    pub fn assignment(&self) -> Vec<(String, String)> {
        self.gamma.to_labels().into_iter().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusViolation {
    pub condition: &'static str,
    pub element: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusFailure {
    pub violations: Vec<FrobeniusViolation>,
}

impl fmt::Display for FrobeniusFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{} fails at `{}`: {}", v.condition, v.element, v.detail)?;
        }
        Ok(())
    }
}

/// Nondegeneracy of a pairing `X × X ⇸ •`: both components of the left leg are bijections.
pub fn check_nondegenerate(pairing: &Span, x: &FiniteSet) -> Result<bool> {
    let xx = x.product(x);
    if pairing.src() != &xx.set || pairing.dst() != &FiniteSet::point() {
        return Err(Error::Precondition("pairing must be a span X × X ⇸ •".into()));
    }
    let apex = pairing.apex();
    let split = |k: usize| {
        SetMap::from_fn(apex, x, |a| {
            let (i, j) = xx.components(pairing.left().at(a));
            if k == 0 {
                i
            } else {
                j
            }
        })
    };
    Ok(split(0).is_bijective() && split(1).is_bijective())
}

pub fn unit_span(f: &FrobeniusDatum) -> Span {
    f.base.monoid_spans().unit
}

pub fn multiplication_span(f: &FrobeniusDatum) -> Span {
    f.base.monoid_spans().mult
}

/// `α: X × X ⇸ •` with apex `X_1` and left leg `(1, α̂)`.
pub fn pairing_span(f: &FrobeniusDatum) -> Span {
    let x = f.carrier();
    let xx = x.product(x);
    Span::new(
        SetMap::pairing(&SetMap::identity(x), &f.alpha_hat, &xx),
        SetMap::to_point(x),
    )
    .expect("shared apex")
}

/// `β: • ⇸ X × X` with apex `X_1` and right leg `(α̂, 1)`.
pub fn copairing_span(f: &FrobeniusDatum) -> Span {
    let x = f.carrier();
    let xx = x.product(x);
    Span::new(
        SetMap::to_point(x),
        SetMap::pairing(&f.alpha_hat, &SetMap::identity(x), &xx),
    )
    .expect("shared apex")
}

/// `ε: X_1 ⇸ •` with apex `X_0` and left leg `α̂ ∘ s0`.
pub fn counit_span(f: &FrobeniusDatum) -> Span {
    let left = f.base.s0().then(&f.alpha_hat).expect("s0 lands in X1");
    Span::new(left, SetMap::to_point(f.base.x0())).expect("shared apex")
}

/// `δ: X_1 ⇸ X_1 × X_1` with apex `X_2`, left leg `d0` and right leg `(α̂ ∘ d2, d1)`.
pub fn comultiplication_span(f: &FrobeniusDatum) -> Result<Span> {
    check_frobenius(f).map_err(Error::NotFrobenius)?;
    Ok(comultiplication_unchecked(f))
}

pub(crate) fn comultiplication_unchecked(f: &FrobeniusDatum) -> Span {
    let b = &f.base;
    let x = f.carrier();
    let xx = x.product(x);
    let twisted = b.d2(2).then(&f.alpha_hat).expect("d2 lands in X1");
    Span::new(b.d2(0).clone(), SetMap::pairing(&twisted, b.d2(1), &xx)).expect("shared apex")
}

/// Monoid spans of the base, or the reason they do not form a monoid.
pub fn frobenius_monoid(f: &FrobeniusDatum) -> Result<MonoidSpans> {
    monoid_from_simplicial(&f.base)
}

/// Decides the Frobenius criterion and builds `γ`.
///
/// With `Z = {ζ : d1 ζ ∈ α̂(s0(X_0))}`, a valid `γ` must send `x` to the unique
/// `ζ ∈ Z` with `d2 ζ = x` and `d0 ζ = α̂(x)`, and must hit all of `Z`.
pub fn check_frobenius(f: &FrobeniusDatum) -> Result<GammaWitness, FrobeniusFailure> {
    if let Err(e) = monoid_from_simplicial(&f.base) {
        let detail = match e {
            Error::NotAMonoid(s) => s,
            other => other.to_string(),
        };
        return Err(FrobeniusFailure {
            violations: vec![FrobeniusViolation {
                condition: NOT_A_MONOID,
                element: String::new(),
                detail,
            }],
        });
    }

    let b = &f.base;
    let x1 = b.x1();
    let support = f.counit_support();
    let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); x1.len()];
    let mut stray = Vec::new();
    for z in 0..b.x2().len() {
        let [d0, d1, d2] = b.faces(z);
        if !support[d1] {
            continue;
        }
        if d0 == f.alpha_hat.at(d2) {
            candidates[d2].push(z);
        } else {
            stray.push(z);
        }
    }

    let mut violations = Vec::new();
    let mut gamma = Vec::with_capacity(x1.len());
    for (x, cs) in candidates.iter().enumerate() {
        match cs.as_slice() {
            [] => violations.push(FrobeniusViolation {
                condition: FROBENIUS_CONDITION_1,
                element: x1.label(x).to_string(),
                detail: format!(
                    "no 2-simplex with d2 = {}, d0 = α̂(x) = {} and d1 in the counit support",
                    x1.label(x),
                    x1.label(f.alpha_hat.at(x))
                ),
            }),
            [z, rest @ ..] => {
                gamma.push(*z);
                for &extra in rest {
                    violations.push(FrobeniusViolation {
                        condition: FROBENIUS_CONDITION_2,
                        element: b.x2().label(extra).to_string(),
                        detail: format!("second candidate for γ({}) is never in the image", x1.label(x)),
                    });
                }
            }
        }
    }
    for z in stray {
        let [d0, _, d2] = b.faces(z);
        violations.push(FrobeniusViolation {
            condition: FROBENIUS_CONDITION_2,
            element: b.x2().label(z).to_string(),
            detail: format!(
                "d1 lies in the counit support but d0 = {} differs from α̂(d2) = {}",
                x1.label(d0),
                x1.label(f.alpha_hat.at(d2))
            ),
        });
    }

    if !violations.is_empty() {
        return Err(FrobeniusFailure { violations });
    }
    let gamma = SetMap::from_indices(x1.clone(), b.x2().clone(), gamma).expect("one image per edge");
    Ok(GammaWitness { gamma })
}

/// Fiber-count test for a bijection `θ` of `X_2` with `d1 θ = d1` swapping `d0` and `d2`.
pub fn check_commutative(f: &FrobeniusDatum) -> bool {
    check_commutative_base(&f.base)
}

pub fn check_commutative_base(t: &TruncatedSS2) -> bool {
    let mut counts = std::collections::HashMap::<(usize, usize, usize), usize>::new();
    for z in 0..t.x2().len() {
        let [d0, d1, d2] = t.faces(z);
        *counts.entry((d0, d1, d2)).or_default() += 1;
    }
    counts
        .iter()
        .all(|(&(i, j, k), &c)| counts.get(&(k, j, i)).copied().unwrap_or(0) == c)
}

/// `α̂² = 1`.
pub fn check_symmetric(f: &FrobeniusDatum) -> bool {
    (0..f.carrier().len()).all(|x| f.alpha_hat.at(f.alpha_hat.at(x)) == x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_frobenius, two_element_family, AlphaChoice, Group};

    #[test]
    fn nondegenerate_pairings() {
        let x = FiniteSet::new(["a", "b", "c"]).unwrap();
        let xx = x.product(&x);
        let rot = SetMap::from_fn(&x, &x, |i| (i + 1) % 3);
        let good = Span::new(SetMap::pairing(&SetMap::identity(&x), &rot, &xx), SetMap::to_point(&x)).unwrap();
        assert!(check_nondegenerate(&good, &x).unwrap());

        let konst = SetMap::from_fn(&x, &x, |_| 0);
        let bad = Span::new(SetMap::pairing(&SetMap::identity(&x), &konst, &xx), SetMap::to_point(&x)).unwrap();
        assert!(!check_nondegenerate(&bad, &x).unwrap());

        let small = FiniteSet::new(["p"]).unwrap();
        let tiny = Span::new(
            SetMap::from_fn(&small, &xx.set, |_| 0),
            SetMap::to_point(&small),
        )
        .unwrap();
        assert!(!check_nondegenerate(&tiny, &x).unwrap());
        assert!(check_nondegenerate(&tiny, &small).is_err());
    }

    #[test]
    fn counit_support() {
        let g = Group::symmetric3();
        let f = group_frobenius(&g, "(12)").unwrap();
        let m = counit_span(&f).to_matrix();
        for x in g.elements().iter() {
            let expect = u32::from(x == "(12)");
            assert_eq!(m.get(x, "*"), Some(&expect.into()));
        }
        let id = two_element_family(1, 2, AlphaChoice::Identity).datum;
        assert_eq!(counit_span(&id).to_matrix().to_decimal_rows(), vec![vec!["1"], vec!["0"]]);
        let sw = two_element_family(1, 0, AlphaChoice::Swap).datum;
        assert_eq!(counit_span(&sw).to_matrix().to_decimal_rows(), vec![vec!["0"], vec!["1"]]);
    }

    #[test]
    fn gamma_for_group() {
        let g = Group::symmetric3();
        let f = group_frobenius(&g, "e").unwrap();
        let w = check_frobenius(&f).unwrap();
        for (x, z) in w.assignment() {
            assert_eq!(z, format!("{x}|{}", g.inverse(&x)));
        }
    }

    #[test]
    fn two_element_criterion() {
        for a in 0..4 {
            for b in 0..4 {
                let id = two_element_family(a, b, AlphaChoice::Identity).datum;
                assert_eq!(check_frobenius(&id).is_ok(), a == 1, "id {a} {b}");
                let sw = two_element_family(a, b, AlphaChoice::Swap).datum;
                assert_eq!(check_frobenius(&sw).is_ok(), b == 0, "swap {a} {b}");
            }
        }
    }

    #[test]
    fn failure_names_conditions() {
        let f = two_element_family(0, 1, AlphaChoice::Identity).datum;
        let err = check_frobenius(&f).unwrap_err();
        assert_eq!(err.violations.len(), 1);
        assert_eq!(err.violations[0].condition, FROBENIUS_CONDITION_1);
        assert_eq!(err.violations[0].element, "b");

        let f = two_element_family(3, 1, AlphaChoice::Identity).datum;
        let err = check_frobenius(&f).unwrap_err();
        assert_eq!(err.violations.len(), 2);
        assert!(err.violations.iter().all(|v| v.condition == FROBENIUS_CONDITION_2));

        let f = two_element_family(1, 2, AlphaChoice::Swap).datum;
        let err = check_frobenius(&f).unwrap_err();
        assert_eq!(err.violations.len(), 2);
        assert!(err.to_string().contains("bbb#0"));
        assert!(comultiplication_span(&f).is_err());
    }

    #[test]
    fn commutativity() {
        assert!(check_commutative_base(&Group::cyclic(4).nerve()));
        assert!(!check_commutative_base(&Group::symmetric3().nerve()));
        for a in 0..3 {
            for b in 0..3 {
                let f = two_element_family(a, b, AlphaChoice::Identity).datum;
                assert!(check_commutative(&f));
            }
        }
    }

    #[test]
    fn symmetry() {
        let g = Group::symmetric3();
        assert!(!check_symmetric(&group_frobenius(&g, "(12)").unwrap()));
        assert!(check_symmetric(&group_frobenius(&g, "e").unwrap()));
        let z3 = Group::cyclic(3);
        for w in z3.elements().iter() {
            assert!(check_symmetric(&group_frobenius(&z3, w).unwrap()));
        }
    }

    #[test]
    fn alpha_hat_must_be_bijective() {
        let t = Group::cyclic(3).nerve();
        let konst = SetMap::from_fn(t.x1(), t.x1(), |_| 0);
        assert!(matches!(FrobeniusDatum::new(t, konst), Err(Error::Precondition(_))));
    }
}
