//! Finite sets, total maps, and spans of finite sets.
//!
//! A morphism `X ⇸ Y` is an isomorphism class of spans `X ← A → Y`. Two finite
//! spans are isomorphic exactly when every `(x, y)` fiber of the apex has the
//! same cardinality, so [`MultiplicityMatrix`] is used as the normal form and
//! all equalities of morphisms are decided on it.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::matrix::NatMatrix;

/// Label of the one-point set `•`.
pub const POINT: &str = "*";

/// A finite set of labels kept in sorted order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSet {
    labels: Arc<[String]>,
}

fn check_label(label: &str) -> Result<()> {
    let mut depth = 0i64;
    for c in label.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::BadLabel(label.to_string()));
                }
            }
            ',' if depth == 0 => return Err(Error::BadLabel(label.to_string())),
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::BadLabel(label.to_string()));
    }
    Ok(())
}

impl FiniteSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut v: Vec<String> = labels.into_iter().map(Into::into).collect();
        for l in &v {
            check_label(l)?;
        }
        v.sort();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].clone()));
        }
        Ok(FiniteSet { labels: v.into() })
    }

    /// Labels must already be valid and pairwise distinct.
    fn from_unsorted_distinct(mut v: Vec<String>) -> Self {
        v.sort();
        debug_assert!(v.windows(2).all(|w| w[0] != w[1]));
        FiniteSet { labels: v.into() }
    }

    pub fn empty() -> Self {
        FiniteSet {
            labels: Vec::new().into(),
        }
    }

    pub fn point() -> Self {
        FiniteSet {
            labels: vec![POINT.to_string()].into(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn index(&self, label: &str, context: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::unknown(label, context))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index_of(label).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> + '_ {
        self.labels.iter().map(String::as_str)
    }

    pub fn product(&self, other: &FiniteSet) -> ProductSet {
        ProductSet::new(self, other)
    }

    /// `self^n` with left-nested pair labels; `n = 0` is the point.
    pub fn power(&self, n: usize) -> FiniteSet {
        let mut acc = if n == 0 { FiniteSet::point() } else { self.clone() };
        for _ in 1..n {
            acc = acc.product(self).set;
        }
        acc
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels.iter()).finish()
    }
}

pub fn pair_label(x: &str, y: &str) -> String {
    format!("({x},{y})")
}

/// Cartesian product `A × B` together with index bookkeeping.
#[derive(Clone, Debug)]
pub struct ProductSet {
    pub set: FiniteSet,
    left_len: usize,
    right_len: usize,
    // position of (i, j) at i * right_len + j
    index: Vec<usize>,
    components: Vec<(usize, usize)>,
}

impl ProductSet {
    fn new(a: &FiniteSet, b: &FiniteSet) -> Self {
        let mut labels = Vec::with_capacity(a.len() * b.len());
        for x in a.iter() {
            for y in b.iter() {
                labels.push(pair_label(x, y));
            }
        }
        let set = FiniteSet::from_unsorted_distinct(labels.clone());
        let index: Vec<usize> = labels
            .iter()
            .map(|l| set.index_of(l).expect("product label"))
            .collect();
        let mut components = vec![(0, 0); index.len()];
        for i in 0..a.len() {
            for j in 0..b.len() {
                components[index[i * b.len() + j]] = (i, j);
            }
        }
        ProductSet {
            set,
            left_len: a.len(),
            right_len: b.len(),
            index,
            components,
        }
    }

    pub fn pair(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.left_len && j < self.right_len);
        self.index[i * self.right_len + j]
    }

    pub fn components(&self, p: usize) -> (usize, usize) {
        self.components[p]
    }
}

/// A total map between finite sets, stored by index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetMap {
    dom: FiniteSet,
    cod: FiniteSet,
    image: Arc<[usize]>,
}

impl SetMap {
    pub fn from_indices(dom: FiniteSet, cod: FiniteSet, image: Vec<usize>) -> Result<Self> {
        if image.len() != dom.len() {
            return Err(Error::Mismatch(format!(
                "map has {} images for a domain of size {}",
                image.len(),
                dom.len()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&j| j >= cod.len()) {
            return Err(Error::Mismatch(format!("image index {bad} outside codomain")));
        }
        Ok(SetMap {
            dom,
            cod,
            image: image.into(),
        })
    }

    /// Builds a map from a label assignment, which must cover the domain exactly.
    pub fn from_labels(
        dom: FiniteSet,
        cod: FiniteSet,
        assignment: &BTreeMap<String, String>,
    ) -> Result<Self> {
        for k in assignment.keys() {
            if !dom.contains(k) {
                return Err(Error::unknown(k, "map domain"));
            }
        }
        let mut image = Vec::with_capacity(dom.len());
        for x in dom.iter() {
            let y = assignment
                .get(x)
                .ok_or_else(|| Error::PartialMap(x.to_string()))?;
            image.push(cod.index(y, "map codomain")?);
        }
        Self::from_indices(dom, cod, image)
    }

    pub fn from_fn(dom: &FiniteSet, cod: &FiniteSet, f: impl Fn(usize) -> usize) -> Self {
        let image: Vec<usize> = (0..dom.len()).map(f).collect();
        Self::from_indices(dom.clone(), cod.clone(), image).expect("index function out of range")
    }

    pub fn identity(x: &FiniteSet) -> Self {
        Self::from_fn(x, x, |i| i)
    }

    /// The unique map into the point.
    pub fn to_point(x: &FiniteSet) -> Self {
        Self::from_fn(x, &FiniteSet::point(), |_| 0)
    }

    /// `(f, g): A → X × Y`.
    pub fn pairing(f: &SetMap, g: &SetMap, product: &ProductSet) -> Self {
        assert_eq!(f.dom, g.dom, "pairing maps with different domains");
        Self::from_fn(&f.dom, &product.set, |a| product.pair(f.at(a), g.at(a)))
    }

    pub fn dom(&self) -> &FiniteSet {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSet {
        &self.cod
    }

    pub fn at(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, label: &str) -> Option<&str> {
        self.dom.index_of(label).map(|i| self.cod.label(self.at(i)))
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &SetMap) -> Result<SetMap> {
        if self.cod != after.dom {
            return Err(Error::Mismatch("composing maps with mismatched middle set".into()));
        }
        Ok(Self::from_fn(&self.dom, &after.cod, |i| after.at(self.at(i))))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        self.image.iter().all(|&j| !std::mem::replace(&mut seen[j], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod.len()];
        for &j in self.image.iter() {
            hit[j] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.len() == self.cod.len() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<SetMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.cod.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        Some(SetMap::from_indices(self.cod.clone(), self.dom.clone(), inv).expect("bijection"))
    }

    pub fn to_labels(&self) -> BTreeMap<String, String> {
        self.dom
            .iter()
            .enumerate()
            .map(|(i, x)| (x.to_string(), self.cod.label(self.at(i)).to_string()))
            .collect()
    }
}

impl fmt::Debug for SetMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.dom.iter().enumerate().map(|(i, x)| (x, self.cod.label(self.at(i)))))
            .finish()
    }
}

/// A span `src ← apex → dst`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    left: SetMap,
    right: SetMap,
}

impl Span {
    pub fn new(left: SetMap, right: SetMap) -> Result<Self> {
        if left.dom != right.dom {
            return Err(Error::Mismatch("span legs have different domains".into()));
        }
        Ok(Span { left, right })
    }

    pub fn src(&self) -> &FiniteSet {
        self.left.cod()
    }

    pub fn dst(&self) -> &FiniteSet {
        self.right.cod()
    }

    pub fn apex(&self) -> &FiniteSet {
        self.left.dom()
    }

    pub fn left(&self) -> &SetMap {
        &self.left
    }

    pub fn right(&self) -> &SetMap {
        &self.right
    }

    /// The span `A ←id A →f B` of a function.
    pub fn from_map(f: &SetMap) -> Span {
        Span {
            left: SetMap::identity(f.dom()),
            right: f.clone(),
        }
    }

    /// The reversed span `dst ← apex → src`.
    pub fn converse(&self) -> Span {
        Span {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    pub fn to_matrix(&self) -> MultiplicityMatrix {
        span_to_matrix(self)
    }

    /// Matrix of `next ∘ self`, computed without materializing the pullback.
    pub fn then_matrix(&self, next: &Span) -> Result<MultiplicityMatrix> {
        span_to_matrix(self).then(&span_to_matrix(next))
    }
}

/// Fiber-cardinality normal form of a span.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicityMatrix {
    src: FiniteSet,
    dst: FiniteSet,
    counts: NatMatrix,
}

impl MultiplicityMatrix {
    pub fn new(src: FiniteSet, dst: FiniteSet, counts: NatMatrix) -> Result<Self> {
        if counts.rows() != src.len() || counts.cols() != dst.len() {
            return Err(Error::Mismatch(format!(
                "{}x{} counts for a {}x{} matrix",
                counts.rows(),
                counts.cols(),
                src.len(),
                dst.len()
            )));
        }
        Ok(MultiplicityMatrix { src, dst, counts })
    }

    pub fn identity(x: &FiniteSet) -> Self {
        MultiplicityMatrix {
            src: x.clone(),
            dst: x.clone(),
            counts: NatMatrix::identity(x.len()),
        }
    }

    pub fn src(&self) -> &FiniteSet {
        &self.src
    }

    pub fn dst(&self) -> &FiniteSet {
        &self.dst
    }

    pub fn counts(&self) -> &NatMatrix {
        &self.counts
    }

    pub fn get(&self, x: &str, y: &str) -> Option<&BigUint> {
        Some(self.counts.get(self.src.index_of(x)?, self.dst.index_of(y)?))
    }

    /// Matrix of the composite `next ∘ self`.
    pub fn then(&self, next: &MultiplicityMatrix) -> Result<MultiplicityMatrix> {
        if self.dst != next.src {
            return Err(Error::Mismatch("composing matrices with mismatched middle set".into()));
        }
        Ok(MultiplicityMatrix {
            src: self.src.clone(),
            dst: next.dst.clone(),
            counts: self.counts.product(&next.counts),
        })
    }

    pub fn to_decimal_rows(&self) -> Vec<Vec<String>> {
        self.counts.to_decimal_rows()
    }
}

pub fn identity_span(x: &FiniteSet) -> Span {
    Span::from_map(&SetMap::identity(x))
}

/// `g ∘ f`, with apex the pullback `{(a, b) : f.right(a) = g.left(b)}` labelled `(a|b)`.
pub fn compose_spans(f: &Span, g: &Span) -> Result<Span> {
    if f.dst() != g.src() {
        return Err(Error::Mismatch(format!(
            "cannot compose span into {:?} with span out of {:?}",
            f.dst(),
            g.src()
        )));
    }
    // bucket g's apex by the middle element
    let mut by_middle: Vec<Vec<usize>> = vec![Vec::new(); f.dst().len()];
    for b in 0..g.apex().len() {
        by_middle[g.left.at(b)].push(b);
    }
    let mut pairs = Vec::new();
    for a in 0..f.apex().len() {
        for &b in &by_middle[f.right.at(a)] {
            pairs.push((a, b));
        }
    }
    let labels: Vec<String> = pairs
        .iter()
        .map(|&(a, b)| format!("({}|{})", f.apex().label(a), g.apex().label(b)))
        .collect();
    let apex = FiniteSet::from_unsorted_distinct_checked(labels.clone())?;
    let mut left = vec![0; pairs.len()];
    let mut right = vec![0; pairs.len()];
    for (label, &(a, b)) in labels.iter().zip(&pairs) {
        let p = apex.index_of(label).expect("pullback label");
        left[p] = f.left.at(a);
        right[p] = g.right.at(b);
    }
    Span::new(
        SetMap::from_indices(apex.clone(), f.src().clone(), left)?,
        SetMap::from_indices(apex, g.dst().clone(), right)?,
    )
}

impl FiniteSet {
    fn from_unsorted_distinct_checked(mut v: Vec<String>) -> Result<Self> {
        v.sort();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::LabelCollision(w[0].clone()));
        }
        Ok(FiniteSet { labels: v.into() })
    }
}

/// Map-level product `f × g: A × B → X × Y`.
pub fn product_map(f: &SetMap, g: &SetMap) -> (SetMap, ProductSet, ProductSet) {
    let dom = f.dom().product(g.dom());
    let cod = f.cod().product(g.cod());
    let m = SetMap::from_fn(&dom.set, &cod.set, |p| {
        let (i, j) = dom.components(p);
        cod.pair(f.at(i), g.at(j))
    });
    (m, dom, cod)
}

pub fn tensor_spans(f: &Span, g: &Span) -> Span {
    let (left, _, _) = product_map(&f.left, &g.left);
    let (right, _, _) = product_map(&f.right, &g.right);
    Span { left, right }
}

pub fn span_to_matrix(s: &Span) -> MultiplicityMatrix {
    let mut counts = NatMatrix::zeros(s.src().len(), s.dst().len());
    for a in 0..s.apex().len() {
        counts.increment(s.left.at(a), s.right.at(a));
    }
    MultiplicityMatrix {
        src: s.src().clone(),
        dst: s.dst().clone(),
        counts,
    }
}

pub fn spans_isomorphic(s: &Span, t: &Span) -> bool {
    s.src() == t.src() && s.dst() == t.dst() && span_to_matrix(s) == span_to_matrix(t)
}

/// Invertibility of a span: both legs bijective.
pub fn is_isomorphism_span(s: &Span) -> bool {
    s.left.is_bijective() && s.right.is_bijective()
}

/// `τ: X × X ⇸ X × X` with apex `X × X`, left leg the swap and right leg the identity.
pub fn twist_span(x: &FiniteSet) -> Span {
    let xx = x.product(x);
    let swap = SetMap::from_fn(&xx.set, &xx.set, |p| {
        let (i, j) = xx.components(p);
        xx.pair(j, i)
    });
    Span {
        left: swap,
        right: SetMap::identity(&xx.set),
    }
}

/// Isomorphism `(X × Y) × Z ⇸ X × (Y × Z)`.
pub fn associator(x: &FiniteSet, y: &FiniteSet, z: &FiniteSet) -> Span {
    let xy = x.product(y);
    let xy_z = xy.set.product(z);
    let yz = y.product(z);
    let x_yz = x.product(&yz.set);
    let f = SetMap::from_fn(&xy_z.set, &x_yz.set, |p| {
        let (ab, k) = xy_z.components(p);
        let (i, j) = xy.components(ab);
        x_yz.pair(i, yz.pair(j, k))
    });
    Span::from_map(&f)
}

/// Isomorphism `X ⇸ • × X`.
pub fn left_unitor_inverse(x: &FiniteSet) -> Span {
    let px = FiniteSet::point().product(x);
    Span::from_map(&SetMap::from_fn(x, &px.set, |i| px.pair(0, i)))
}

/// Isomorphism `X ⇸ X × •`.
pub fn right_unitor_inverse(x: &FiniteSet) -> Span {
    let xp = x.product(&FiniteSet::point());
    Span::from_map(&SetMap::from_fn(x, &xp.set, |i| xp.pair(i, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(labels: &[&str]) -> FiniteSet {
        FiniteSet::new(labels.iter().copied()).unwrap()
    }

    fn map(dom: &FiniteSet, cod: &FiniteSet, pairs: &[(&str, &str)]) -> SetMap {
        let m: BTreeMap<String, String> = pairs
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        SetMap::from_labels(dom.clone(), cod.clone(), &m).unwrap()
    }

    #[test]
    fn labels_are_sorted_and_checked() {
        let s = set(&["b", "a", "(c,d)"]);
        assert_eq!(s.labels(), &["(c,d)", "a", "b"]);
        assert!(matches!(FiniteSet::new(["a", "a"]), Err(Error::DuplicateLabel(_))));
        assert!(matches!(FiniteSet::new(["a,b"]), Err(Error::BadLabel(_))));
        assert!(matches!(FiniteSet::new(["(a"]), Err(Error::BadLabel(_))));
        assert!(matches!(FiniteSet::new([")a("]), Err(Error::BadLabel(_))));
    }

    #[test]
    fn partial_and_foreign_maps_are_rejected() {
        let a = set(&["x", "y"]);
        let b = set(&["z"]);
        let partial: BTreeMap<_, _> = [("x".to_string(), "z".to_string())].into();
        assert!(matches!(
            SetMap::from_labels(a.clone(), b.clone(), &partial),
            Err(Error::PartialMap(_))
        ));
        let foreign: BTreeMap<_, _> = [
            ("x".to_string(), "z".to_string()),
            ("y".to_string(), "w".to_string()),
        ]
        .into();
        assert!(matches!(
            SetMap::from_labels(a, b, &foreign),
            Err(Error::UnknownLabel { .. })
        ));
    }

    #[test]
    fn identity_span_cases() {
        let one = set(&["a"]);
        let s = identity_span(&one);
        assert_eq!(s.apex(), &one);
        assert_eq!(s.left(), &SetMap::identity(&one));
        assert_eq!(s.right(), &SetMap::identity(&one));

        let e = identity_span(&FiniteSet::empty());
        assert!(e.apex().is_empty());
        assert_eq!(span_to_matrix(&e).counts().rows(), 0);

        let two = set(&["a", "b"]);
        let m = span_to_matrix(&identity_span(&two));
        assert_eq!(m.counts(), &NatMatrix::from_rows(&[vec![1u32, 0], vec![0, 1]]));
    }

    #[test]
    fn compose_counts_pullback_pairs() {
        let x = set(&["x"]);
        let y = set(&["y"]);
        let z = set(&["z"]);
        let a = set(&["a1", "a2"]);
        let b = set(&["b1"]);
        let f = Span::new(
            map(&a, &x, &[("a1", "x"), ("a2", "x")]),
            map(&a, &y, &[("a1", "y"), ("a2", "y")]),
        )
        .unwrap();
        let g = Span::new(map(&b, &y, &[("b1", "y")]), map(&b, &z, &[("b1", "z")])).unwrap();
        let gf = compose_spans(&f, &g).unwrap();
        assert_eq!(gf.apex().labels(), &["(a1|b1)", "(a2|b1)"]);
        assert_eq!(gf.apex().len(), 2);
        assert!(matches!(compose_spans(&g, &f), Err(Error::Mismatch(_))));
    }

    #[test]
    fn identity_is_a_unit_for_composition() {
        let x = set(&["p", "q"]);
        let y = set(&["r"]);
        let a = set(&["1", "2", "3"]);
        let s = Span::new(
            map(&a, &x, &[("1", "p"), ("2", "p"), ("3", "q")]),
            map(&a, &y, &[("1", "r"), ("2", "r"), ("3", "r")]),
        )
        .unwrap();
        assert!(spans_isomorphic(&compose_spans(&identity_span(&x), &s).unwrap(), &s));
        assert!(spans_isomorphic(&compose_spans(&s, &identity_span(&y)).unwrap(), &s));
    }

    #[test]
    fn relabelled_apex_is_isomorphic() {
        let x = set(&["a", "b"]);
        let other = set(&["u", "v"]);
        let s = Span::new(
            map(&other, &x, &[("u", "b"), ("v", "a")]),
            map(&other, &x, &[("u", "b"), ("v", "a")]),
        )
        .unwrap();
        assert!(spans_isomorphic(&s, &identity_span(&x)));
        let bigger = set(&["u", "v", "w"]);
        let t = Span::new(
            map(&bigger, &x, &[("u", "b"), ("v", "a"), ("w", "a")]),
            map(&bigger, &x, &[("u", "b"), ("v", "a"), ("w", "a")]),
        )
        .unwrap();
        assert!(!spans_isomorphic(&t, &identity_span(&x)));
    }

    #[test]
    fn tensor_of_identities() {
        let x = set(&["a", "b"]);
        let y = set(&["c", "d", "e"]);
        let t = tensor_spans(&identity_span(&x), &identity_span(&y));
        let xy = x.product(&y).set;
        assert!(spans_isomorphic(&t, &identity_span(&xy)));
        assert_eq!(t.apex().len(), 6);
    }

    #[test]
    fn isomorphism_spans() {
        let x = set(&["a", "b"]);
        assert!(is_isomorphism_span(&identity_span(&x)));
        let a = set(&["u"]);
        let s = Span::new(map(&a, &x, &[("u", "a")]), map(&a, &x, &[("u", "b")])).unwrap();
        assert!(!is_isomorphism_span(&s));
    }

    #[test]
    fn twist_cases() {
        let x = set(&["a", "b"]);
        let t = twist_span(&x);
        let tt = compose_spans(&t, &t).unwrap();
        assert!(spans_isomorphic(&tt, &identity_span(t.src())));

        let one = set(&["a"]);
        assert!(spans_isomorphic(&twist_span(&one), &identity_span(&one.product(&one).set)));

        let m = span_to_matrix(&t);
        let xx = x.product(&x);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let expect = u32::from(i == l && j == k);
                        assert_eq!(
                            m.counts().get(xx.pair(i, j), xx.pair(k, l)),
                            &BigUint::from(expect)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn empty_sets_everywhere() {
        let e = FiniteSet::empty();
        let x = set(&["a"]);
        let s = Span::new(SetMap::from_fn(&e, &x, |_| 0), SetMap::from_fn(&e, &e.clone(), |_| 0))
            .unwrap();
        assert!(span_to_matrix(&s).counts().is_zero());
        let t = tensor_spans(&s, &identity_span(&x));
        assert!(t.apex().is_empty());
        let c = compose_spans(&s, &identity_span(&e)).unwrap();
        assert!(c.apex().is_empty());
        assert_eq!(e.power(0), FiniteSet::point());
    }
}
