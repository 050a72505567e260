//! 2-truncated simplicial sets and their correspondence with monoids in spans.
//!
//! Given `X_0 ⇇ X_1 ⇶ X_2`, the spans `• ← X_0 →s0 X_1` and
//! `X_1 × X_1 ←(d2, d0) X_2 →d1 X_1` form a monoid exactly when the unit
//! conditions and the taco fiber condition hold. The reverse direction
//! recovers the missing faces and degeneracies from the unit isomorphisms.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::span::{
    associator, compose_spans, identity_span, left_unitor_inverse, right_unitor_inverse,
    spans_isomorphic, tensor_spans, FiniteSet, SetMap, Span,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSS2 {
    x0: FiniteSet,
    x1: FiniteSet,
    x2: FiniteSet,
    d1: [SetMap; 2],
    d2: [SetMap; 3],
    s0: SetMap,
    s1: [SetMap; 2],
}

fn check_shape(map: &SetMap, dom: &FiniteSet, cod: &FiniteSet, name: &str) -> Result<()> {
    if map.dom() != dom || map.cod() != cod {
        return Err(Error::Mismatch(format!("{name} has the wrong domain or codomain")));
    }
    Ok(())
}

/// A failed simplicial identity at a particular simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub identity: &'static str,
    pub element: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at `{}`", self.identity, self.element)
    }
}

/// Which half of the unit criterion a 2-simplex breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitViolation {
    pub condition: &'static str,
    pub simplex: String,
}

pub const UNIT_CONDITION_1: &str = "Lemma unit (1)";
pub const UNIT_CONDITION_2: &str = "Lemma unit (2)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TacoFlavor {
    /// Pairs with `d1 ζ = d0 ζ′`.
    #[serde(rename = "02")]
    T02,
    /// Pairs with `d2 ζ = d1 ζ′`.
    #[serde(rename = "13")]
    T13,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TacoSet {
    pub flavor: TacoFlavor,
    pub pairs: Vec<(usize, usize)>,
}

/// Boundary `(x01, x12, x23, x03)` of a taco, as `X_1` indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompatQuad(pub [usize; 4]);

/// Boundary quad whose `∂02` and `∂13` fibers differ in size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberMismatch {
    pub quad: [String; 4],
    pub count_02: usize,
    pub count_13: usize,
}

impl TruncatedSS2 {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        x0: FiniteSet,
        x1: FiniteSet,
        x2: FiniteSet,
        d1: [SetMap; 2],
        d2: [SetMap; 3],
        s0: SetMap,
        s1: [SetMap; 2],
    ) -> Result<Self> {
        for (i, m) in d1.iter().enumerate() {
            check_shape(m, &x1, &x0, &format!("d1_{i}"))?;
        }
        for (i, m) in d2.iter().enumerate() {
            check_shape(m, &x2, &x1, &format!("d2_{i}"))?;
        }
        check_shape(&s0, &x0, &x1, "s0")?;
        for (i, m) in s1.iter().enumerate() {
            check_shape(m, &x1, &x2, &format!("s1_{i}"))?;
        }
        Ok(TruncatedSS2 { x0, x1, x2, d1, d2, s0, s1 })
    }

    pub fn x0(&self) -> &FiniteSet {
        &self.x0
    }

    pub fn x1(&self) -> &FiniteSet {
        &self.x1
    }

    pub fn x2(&self) -> &FiniteSet {
        &self.x2
    }

    /// Face `d_i: X_1 → X_0`.
    pub fn d1(&self, i: usize) -> &SetMap {
        &self.d1[i]
    }

    /// Face `d_i: X_2 → X_1`.
    pub fn d2(&self, i: usize) -> &SetMap {
        &self.d2[i]
    }

    pub fn s0(&self) -> &SetMap {
        &self.s0
    }

    /// Degeneracy `s_i: X_1 → X_2`.
    pub fn s1(&self, i: usize) -> &SetMap {
        &self.s1[i]
    }

    /// `(d0, d1, d2)` of a 2-simplex.
    pub fn faces(&self, z: usize) -> [usize; 3] {
        [self.d2[0].at(z), self.d2[1].at(z), self.d2[2].at(z)]
    }

    fn image_of_s0(&self) -> Vec<bool> {
        let mut hit = vec![false; self.x1.len()];
        for &x in self.s0.images() {
            hit[x] = true;
        }
        hit
    }

    fn image_of_s1(&self, i: usize) -> Vec<bool> {
        let mut hit = vec![false; self.x2.len()];
        for &z in self.s1[i].images() {
            hit[z] = true;
        }
        hit
    }

    /// Every simplicial identity that is defined at truncation level 2.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let (d10, d11) = (&self.d1[0], &self.d1[1]);
        let [d20, d21, d22] = &self.d2;
        let [s10, s11] = &self.s1;
        let s0 = &self.s0;

        let mut check = |ok: bool, identity: &'static str, element: &str| {
            if !ok {
                out.push(Violation {
                    identity,
                    element: element.to_string(),
                });
            }
        };

        for (z, label) in self.x2.iter().enumerate() {
            check(d10.at(d21.at(z)) == d10.at(d20.at(z)), "d1_0∘d2_1 = d1_0∘d2_0", label);
            check(d10.at(d22.at(z)) == d11.at(d20.at(z)), "d1_0∘d2_2 = d1_1∘d2_0", label);
            check(d11.at(d22.at(z)) == d11.at(d21.at(z)), "d1_1∘d2_2 = d1_1∘d2_1", label);
        }
        for (u, label) in self.x0.iter().enumerate() {
            check(s10.at(s0.at(u)) == s11.at(s0.at(u)), "s1_0∘s0 = s1_1∘s0", label);
            check(d10.at(s0.at(u)) == u, "d1_0∘s0 = id", label);
            check(d11.at(s0.at(u)) == u, "d1_1∘s0 = id", label);
        }
        for (x, label) in self.x1.iter().enumerate() {
            check(d20.at(s10.at(x)) == x, "d2_0∘s1_0 = id", label);
            check(d21.at(s10.at(x)) == x, "d2_1∘s1_0 = id", label);
            check(d22.at(s10.at(x)) == s0.at(d11.at(x)), "d2_2∘s1_0 = s0∘d1_1", label);
            check(d20.at(s11.at(x)) == s0.at(d10.at(x)), "d2_0∘s1_1 = s0∘d1_0", label);
            check(d21.at(s11.at(x)) == x, "d2_1∘s1_1 = id", label);
            check(d22.at(s11.at(x)) == x, "d2_2∘s1_1 = id", label);
        }
        out
    }

    /// Simplices breaking the unit criterion: (1) `d2 ζ ∈ im s0 ⇒ ζ ∈ im s1_0`,
    /// (2) `d0 ζ ∈ im s0 ⇒ ζ ∈ im s1_1`.
    pub fn unit_violations(&self) -> Vec<UnitViolation> {
        let units = self.image_of_s0();
        let left = self.image_of_s1(0);
        let right = self.image_of_s1(1);
        let mut out = Vec::new();
        for (z, label) in self.x2.iter().enumerate() {
            if units[self.d2[2].at(z)] && !left[z] {
                out.push(UnitViolation {
                    condition: UNIT_CONDITION_1,
                    simplex: label.to_string(),
                });
            }
            if units[self.d2[0].at(z)] && !right[z] {
                out.push(UnitViolation {
                    condition: UNIT_CONDITION_2,
                    simplex: label.to_string(),
                });
            }
        }
        out
    }

    pub fn check_unit_conditions(&self) -> bool {
        self.unit_violations().is_empty()
    }

    pub fn taco_set(&self, flavor: TacoFlavor) -> TacoSet {
        let (first, second) = match flavor {
            TacoFlavor::T02 => (1, 0),
            TacoFlavor::T13 => (2, 1),
        };
        let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); self.x1.len()];
        for z in 0..self.x2.len() {
            by_edge[self.d2[second].at(z)].push(z);
        }
        let mut pairs = Vec::new();
        for z in 0..self.x2.len() {
            for &w in &by_edge[self.d2[first].at(z)] {
                pairs.push((z, w));
            }
        }
        TacoSet { flavor, pairs }
    }

    fn is_taco(&self, pair: (usize, usize), flavor: TacoFlavor) -> bool {
        let (z, w) = pair;
        match flavor {
            TacoFlavor::T02 => self.d2[1].at(z) == self.d2[0].at(w),
            TacoFlavor::T13 => self.d2[2].at(z) == self.d2[1].at(w),
        }
    }

    fn quad_unchecked(&self, (z, w): (usize, usize), flavor: TacoFlavor) -> CompatQuad {
        let d = |i: usize, s: usize| self.d2[i].at(s);
        match flavor {
            TacoFlavor::T02 => CompatQuad([d(2, w), d(2, z), d(0, z), d(1, w)]),
            TacoFlavor::T13 => CompatQuad([d(2, w), d(0, w), d(0, z), d(1, z)]),
        }
    }

    pub fn boundary_quad(&self, pair: (usize, usize), flavor: TacoFlavor) -> Result<CompatQuad> {
        let n = self.x2.len();
        if pair.0 >= n || pair.1 >= n || !self.is_taco(pair, flavor) {
            return Err(Error::Precondition(format!(
                "({}, {}) is not a {:?} taco",
                pair.0, pair.1, flavor
            )));
        }
        Ok(self.quad_unchecked(pair, flavor))
    }

    /// Membership in the set `SX` of compatible edge quadruples.
    pub fn in_compat_set(&self, q: CompatQuad) -> bool {
        let [x01, x12, x23, x03] = q.0;
        let (d0, d1) = (&self.d1[0], &self.d1[1]);
        d0.at(x01) == d1.at(x12)
            && d0.at(x12) == d1.at(x23)
            && d0.at(x23) == d0.at(x03)
            && d1.at(x03) == d1.at(x01)
    }

    /// Quads over which `∂02` and `∂13` have fibers of different size.
    pub fn fiber_mismatches(&self) -> Vec<FiberMismatch> {
        let mut fibers: HashMap<CompatQuad, (usize, usize)> = HashMap::new();
        for &p in &self.taco_set(TacoFlavor::T02).pairs {
            fibers.entry(self.quad_unchecked(p, TacoFlavor::T02)).or_default().0 += 1;
        }
        for &p in &self.taco_set(TacoFlavor::T13).pairs {
            fibers.entry(self.quad_unchecked(p, TacoFlavor::T13)).or_default().1 += 1;
        }
        let mut bad: Vec<_> = fibers.into_iter().filter(|(_, (a, b))| a != b).collect();
        bad.sort();
        bad.into_iter()
            .map(|(q, (a, b))| FiberMismatch {
                quad: q.0.map(|x| self.x1.label(x).to_string()),
                count_02: a,
                count_13: b,
            })
            .collect()
    }

    /// Existence of a boundary-preserving bijection between the two taco sets.
    pub fn check_associativity_fibers(&self) -> bool {
        self.fiber_mismatches().is_empty()
    }

    /// The unit and multiplication spans, without checking any axiom.
    pub fn monoid_spans(&self) -> MonoidSpans {
        let xx = self.x1.product(&self.x1);
        MonoidSpans {
            carrier: self.x1.clone(),
            unit: Span::new(SetMap::to_point(&self.x0), self.s0.clone()).expect("shared apex"),
            mult: Span::new(SetMap::pairing(&self.d2[2], &self.d2[0], &xx), self.d2[1].clone())
                .expect("shared apex"),
        }
    }
}

/// `η: • ⇸ X` and `μ: X × X ⇸ X`.
#[derive(Clone, Debug)]
pub struct MonoidSpans {
    pub carrier: FiniteSet,
    pub unit: Span,
    pub mult: Span,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonoidAxioms {
    pub left_unit: bool,
    pub right_unit: bool,
    pub associative: bool,
}

impl MonoidAxioms {
    pub fn all(&self) -> bool {
        self.left_unit && self.right_unit && self.associative
    }
}

/// Checks the monoid axioms by composing spans and comparing the composites.
pub fn verify_monoid_axioms(m: &MonoidSpans) -> Result<MonoidAxioms> {
    let x = &m.carrier;
    let id = identity_span(x);

    // μ ∘ (η × 1) ∘ (X ≅ • × X)
    let eta_id = tensor_spans(&m.unit, &id);
    let left = compose_spans(&compose_spans(&left_unitor_inverse(x), &eta_id)?, &m.mult)?;

    // μ ∘ (1 × η) ∘ (X ≅ X × •)
    let id_eta = tensor_spans(&id, &m.unit);
    let right = compose_spans(&compose_spans(&right_unitor_inverse(x), &id_eta)?, &m.mult)?;

    // μ ∘ (μ × 1) versus μ ∘ (1 × μ) ∘ assoc
    let mu_id = compose_spans(&tensor_spans(&m.mult, &id), &m.mult)?;
    let id_mu = compose_spans(&tensor_spans(&id, &m.mult), &m.mult)?;
    let reassociated = compose_spans(&associator(x, x, x), &id_mu)?;

    Ok(MonoidAxioms {
        left_unit: spans_isomorphic(&left, &id),
        right_unit: spans_isomorphic(&right, &id),
        associative: spans_isomorphic(&mu_id, &reassociated),
    })
}

/// Unit and multiplication spans of a simplicial set that passes both criteria.
pub fn monoid_from_simplicial(t: &TruncatedSS2) -> Result<MonoidSpans> {
    if let Some(v) = t.unit_violations().first() {
        return Err(Error::NotAMonoid(format!("{} fails at `{}`", v.condition, v.simplex)));
    }
    if let Some(m) = t.fiber_mismatches().first() {
        return Err(Error::NotAMonoid(format!(
            "Lemma associativity fails over quad {:?}: {} vs {} tacos",
            m.quad, m.count_02, m.count_13
        )));
    }
    Ok(t.monoid_spans())
}

/// Rebuilds the missing faces `d1_0, d1_1` and degeneracies `s1_0, s1_1` of a
/// monoid presented by `E →s0 X` and `d0, d1, d2: M → X`.
pub fn simplicial_from_monoid(
    e: &FiniteSet,
    s0: &SetMap,
    m: &FiniteSet,
    d0: &SetMap,
    d1: &SetMap,
    d2: &SetMap,
) -> Result<TruncatedSS2> {
    let x = s0.cod().clone();
    check_shape(s0, e, &x, "s0")?;
    for (name, d) in [("d0", d0), ("d1", d1), ("d2", d2)] {
        check_shape(d, m, &x, name)?;
    }
    let xx = x.product(&x);
    let spans = MonoidSpans {
        carrier: x.clone(),
        unit: Span::new(SetMap::to_point(e), s0.clone())?,
        mult: Span::new(SetMap::pairing(d2, d0, &xx), d1.clone())?,
    };
    let axioms = verify_monoid_axioms(&spans)?;
    if !axioms.all() {
        return Err(Error::NotAMonoid(format!("monoid axioms fail: {axioms:?}")));
    }
    if !s0.is_injective() {
        return Err(Error::NotAMonoid("unit map is not injective".into()));
    }
    let mut unit_of = vec![None; x.len()];
    for (u, &xi) in s0.images().iter().enumerate() {
        unit_of[xi] = Some(u);
    }

    // For each edge, the unique simplex with the edge on two sides and a unit on the third.
    let unique = |xi: usize, edge: &SetMap, unit_face: &SetMap, side: &str| -> Result<(usize, usize)> {
        let mut found = None;
        for z in 0..m.len() {
            if edge.at(z) == xi && d1.at(z) == xi {
                if let Some(u) = unit_of[unit_face.at(z)] {
                    if found.replace((z, u)).is_some() {
                        return Err(Error::NotAMonoid(format!(
                            "{side} unit simplex for `{}` is not unique",
                            x.label(xi)
                        )));
                    }
                }
            }
        }
        found.ok_or_else(|| {
            Error::NotAMonoid(format!("no {side} unit simplex for `{}`", x.label(xi)))
        })
    };

    let mut s1_0 = Vec::with_capacity(x.len());
    let mut s1_1 = Vec::with_capacity(x.len());
    let mut d1_0 = Vec::with_capacity(x.len());
    let mut d1_1 = Vec::with_capacity(x.len());
    for xi in 0..x.len() {
        let (z, u) = unique(xi, d2, d0, "right")?;
        s1_1.push(z);
        d1_0.push(u);
        let (z, u) = unique(xi, d0, d2, "left")?;
        s1_0.push(z);
        d1_1.push(u);
    }

    let t = TruncatedSS2::new(
        e.clone(),
        x.clone(),
        m.clone(),
        [
            SetMap::from_indices(x.clone(), e.clone(), d1_0)?,
            SetMap::from_indices(x.clone(), e.clone(), d1_1)?,
        ],
        [d0.clone(), d1.clone(), d2.clone()],
        s0.clone(),
        [
            SetMap::from_indices(x.clone(), m.clone(), s1_0)?,
            SetMap::from_indices(x, m.clone(), s1_1)?,
        ],
    )?;
    if let Some(v) = t.validate().first() {
        return Err(Error::Internal(format!("reconstructed simplicial set: {v}")));
    }
    Ok(t)
}
