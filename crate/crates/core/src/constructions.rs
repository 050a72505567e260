//! Builders for groups, groupoids, their nerves and Frobenius structures, and
//! the monoids on a two-element set of edges.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::frobenius::FrobeniusDatum;
use crate::simplicial::TruncatedSS2;
use crate::span::{pair_label, FiniteSet, SetMap};

/// A finite groupoid with validated composition.
///
/// `comp(f, g)` is `f ∘ g` and is defined exactly when `src(f) = tgt(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Groupoid {
    objects: FiniteSet,
    morphisms: FiniteSet,
    src: SetMap,
    tgt: SetMap,
    comp: BTreeMap<(usize, usize), usize>,
    identities: Vec<usize>,
    inverses: Vec<usize>,
}

impl Groupoid {
    /// Validates a composition table. Pairs must be listed exactly for the
    /// composable `(f, g)` with `src(f) = tgt(g)`.
    pub fn new(
        objects: FiniteSet,
        morphisms: FiniteSet,
        src: SetMap,
        tgt: SetMap,
        comp: &BTreeMap<(String, String), String>,
    ) -> Result<Self> {
        for (name, m) in [("src", &src), ("tgt", &tgt)] {
            if m.dom() != &morphisms || m.cod() != &objects {
                return Err(Error::InvalidGroupoid(format!("{name} must map morphisms to objects")));
            }
        }
        let mut table = BTreeMap::new();
        for ((f, g), fg) in comp {
            let fi = morphisms.index(f, "composition table")?;
            let gi = morphisms.index(g, "composition table")?;
            let h = morphisms.index(fg, "composition table")?;
            if src.at(fi) != tgt.at(gi) {
                return Err(Error::InvalidGroupoid(format!("`{f}` ∘ `{g}` is not composable")));
            }
            if src.at(h) != src.at(gi) || tgt.at(h) != tgt.at(fi) {
                return Err(Error::InvalidGroupoid(format!(
                    "`{f}` ∘ `{g}` = `{fg}` has the wrong endpoints"
                )));
            }
            table.insert((fi, gi), h);
        }
        let n = morphisms.len();
        for f in 0..n {
            for g in 0..n {
                if src.at(f) == tgt.at(g) && !table.contains_key(&(f, g)) {
                    return Err(Error::InvalidGroupoid(format!(
                        "missing composite `{}` ∘ `{}`",
                        morphisms.label(f),
                        morphisms.label(g)
                    )));
                }
            }
        }
        let c = |f: usize, g: usize| table[&(f, g)];

        for f in 0..n {
            for g in 0..n {
                if src.at(f) != tgt.at(g) {
                    continue;
                }
                for h in 0..n {
                    if src.at(g) == tgt.at(h) && c(c(f, g), h) != c(f, c(g, h)) {
                        return Err(Error::InvalidGroupoid(format!(
                            "composition is not associative at ({}, {}, {})",
                            morphisms.label(f),
                            morphisms.label(g),
                            morphisms.label(h)
                        )));
                    }
                }
            }
        }

        let mut identities = Vec::with_capacity(objects.len());
        for p in 0..objects.len() {
            let id = (0..n).find(|&e| {
                src.at(e) == p
                    && tgt.at(e) == p
                    && (0..n).all(|f| {
                        (src.at(f) != p || c(f, e) == f) && (tgt.at(f) != p || c(e, f) == f)
                    })
            });
            match id {
                Some(e) => identities.push(e),
                None => {
                    return Err(Error::InvalidGroupoid(format!(
                        "object `{}` has no identity",
                        objects.label(p)
                    )))
                }
            }
        }

        let mut inverses = Vec::with_capacity(n);
        for f in 0..n {
            let inv = (0..n).find(|&g| {
                src.at(g) == tgt.at(f)
                    && tgt.at(g) == src.at(f)
                    && c(g, f) == identities[src.at(f)]
                    && c(f, g) == identities[tgt.at(f)]
            });
            match inv {
                Some(g) => inverses.push(g),
                None => {
                    return Err(Error::InvalidGroupoid(format!(
                        "`{}` has no inverse",
                        morphisms.label(f)
                    )))
                }
            }
        }

        Ok(Groupoid {
            objects,
            morphisms,
            src,
            tgt,
            comp: table,
            identities,
            inverses,
        })
    }

    pub fn objects(&self) -> &FiniteSet {
        &self.objects
    }

    pub fn morphisms(&self) -> &FiniteSet {
        &self.morphisms
    }

    pub fn src(&self) -> &SetMap {
        &self.src
    }

    pub fn tgt(&self) -> &SetMap {
        &self.tgt
    }

    /// `f ∘ g` by index, if composable.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.comp.get(&(f, g)).copied()
    }

    pub fn identity_of(&self, object: usize) -> usize {
        self.identities[object]
    }

    pub fn inverse_of(&self, f: usize) -> usize {
        self.inverses[f]
    }

    /// `d0 (f|g) = g`, `d1 (f|g) = f ∘ g`, `d2 (f|g) = f`.
    pub fn nerve(&self) -> TruncatedSS2 {
        let m = &self.morphisms;
        let pairs: Vec<(usize, usize)> = self.comp.keys().copied().collect();
        let label = |&(f, g): &(usize, usize)| format!("{}|{}", m.label(f), m.label(g));
        let x2 = FiniteSet::new(pairs.iter().map(label)).expect("nerve labels are distinct");
        let mut at = vec![(0, 0); pairs.len()];
        for p in &pairs {
            at[x2.index_of(&label(p)).expect("own label")] = *p;
        }
        let pos = |f: usize, g: usize| x2.index_of(&label(&(f, g))).expect("composable pair");

        let d2 = [
            SetMap::from_fn(&x2, m, |z| at[z].1),
            SetMap::from_fn(&x2, m, |z| self.comp[&at[z]]),
            SetMap::from_fn(&x2, m, |z| at[z].0),
        ];
        let s1 = [
            SetMap::from_fn(m, &x2, |f| pos(self.identities[self.tgt.at(f)], f)),
            SetMap::from_fn(m, &x2, |f| pos(f, self.identities[self.src.at(f)])),
        ];
        TruncatedSS2::new(
            self.objects.clone(),
            m.clone(),
            x2.clone(),
            [self.src.clone(), self.tgt.clone()],
            d2,
            SetMap::from_fn(&self.objects, m, |p| self.identities[p]),
            s1,
        )
        .expect("nerve maps have the right shapes")
    }
}

/// A finite group given by its Cayley table; `mul(a, b)` is `a ∘ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    elements: FiniteSet,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl Group {
    pub fn from_table(
        elements: FiniteSet,
        table: &BTreeMap<(String, String), String>,
        identity: &str,
    ) -> Result<Self> {
        let n = elements.len();
        let e = elements.index(identity, "group identity")?;
        let mut t = vec![None; n * n];
        for ((a, b), ab) in table {
            let i = elements.index(a, "group table")?;
            let j = elements.index(b, "group table")?;
            t[i * n + j] = Some(elements.index(ab, "group table")?);
        }
        let mut full = Vec::with_capacity(n * n);
        for (k, v) in t.into_iter().enumerate() {
            match v {
                Some(x) => full.push(x),
                None => {
                    return Err(Error::InvalidGroupoid(format!(
                        "missing product `{}`·`{}`",
                        elements.label(k / n),
                        elements.label(k % n)
                    )))
                }
            }
        }
        Self::from_indices(elements, full, e)
    }

    fn from_indices(elements: FiniteSet, table: Vec<usize>, identity: usize) -> Result<Self> {
        let n = elements.len();
        let m = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            if m(identity, a) != a || m(a, identity) != a {
                return Err(Error::InvalidGroupoid(format!(
                    "`{}` is not a two-sided identity",
                    elements.label(identity)
                )));
            }
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidGroupoid(format!(
                            "multiplication is not associative at ({}, {}, {})",
                            elements.label(a),
                            elements.label(b),
                            elements.label(c)
                        )));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| m(a, b) == identity && m(b, a) == identity) {
                Some(b) => inverses.push(b),
                None => {
                    return Err(Error::InvalidGroupoid(format!(
                        "`{}` has no inverse",
                        elements.label(a)
                    )))
                }
            }
        }
        Ok(Group {
            elements,
            table,
            identity,
            inverses,
        })
    }

    fn from_closure(labels: Vec<String>, identity: &str, mul: impl Fn(&str, &str) -> String) -> Self {
        let elements = FiniteSet::new(labels).expect("distinct element labels");
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in elements.iter() {
            for b in elements.iter() {
                table.push(elements.index_of(&mul(a, b)).expect("closed under multiplication"));
            }
        }
        let e = elements.index_of(identity).expect("identity is an element");
        Self::from_indices(elements, table, e).expect("valid group")
    }

    /// `ℤ/n` with elements `"0"`, …, `"n-1"`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let parse = |s: &str| s.parse::<usize>().expect("residue label");
        Self::from_closure(
            (0..n).map(|i| i.to_string()).collect(),
            "0",
            |a, b| ((parse(a) + parse(b)) % n).to_string(),
        )
    }

    /// `G × H` with elements `"(g,h)"`.
    pub fn product(&self, other: &Group) -> Self {
        let p = self.elements.product(&other.elements);
        let (na, nb) = (self.elements.len(), other.elements.len());
        let mut table = vec![0; p.set.len() * p.set.len()];
        for x in 0..p.set.len() {
            let (a1, b1) = p.components(x);
            for y in 0..p.set.len() {
                let (a2, b2) = p.components(y);
                table[x * p.set.len() + y] =
                    p.pair(self.table[a1 * na + a2], other.table[b1 * nb + b2]);
            }
        }
        let e = p.pair(self.identity, other.identity);
        Self::from_indices(p.set, table, e).expect("product of groups")
    }

    /// `ℤ/2 × ℤ/2`.
    pub fn klein() -> Self {
        Self::cyclic(2).product(&Self::cyclic(2))
    }

    /// `S_3` in cycle notation: `e`, `(12)`, `(13)`, `(23)`, `(123)`, `(132)`.
    /// The product `στ` applies `τ` first.
    pub fn symmetric3() -> Self {
        const PERMS: [([usize; 3], &str); 6] = [
            ([0, 1, 2], "e"),
            ([1, 0, 2], "(12)"),
            ([2, 1, 0], "(13)"),
            ([0, 2, 1], "(23)"),
            ([1, 2, 0], "(123)"),
            ([2, 0, 1], "(132)"),
        ];
        let perm = |s: &str| PERMS.iter().find(|(_, l)| *l == s).expect("S3 label").0;
        let name = |p: [usize; 3]| PERMS.iter().find(|(q, _)| *q == p).expect("permutation").1;
        Self::from_closure(
            PERMS.iter().map(|(_, l)| l.to_string()).collect(),
            "e",
            |a, b| {
                let (s, t) = (perm(a), perm(b));
                name([s[t[0]], s[t[1]], s[t[2]]]).to_string()
            },
        )
    }

    pub fn elements(&self) -> &FiniteSet {
        &self.elements
    }

    pub fn identity(&self) -> &str {
        self.elements.label(self.identity)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    fn idx(&self, a: &str) -> usize {
        self.elements.index_of(a).unwrap_or_else(|| panic!("`{a}` is not a group element"))
    }

    /// Panics on labels outside the group.
    pub fn mul(&self, a: &str, b: &str) -> String {
        let n = self.elements.len();
        self.elements.label(self.table[self.idx(a) * n + self.idx(b)]).to_string()
    }

    pub fn inverse(&self, a: &str) -> String {
        self.elements.label(self.inverses[self.idx(a)]).to_string()
    }

    /// `a^k`.
    pub fn pow(&self, a: &str, k: u64) -> String {
        let mut acc = self.identity().to_string();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.elements.len();
        (0..n).all(|a| (0..n).all(|b| self.table[a * n + b] == self.table[b * n + a]))
    }

    pub fn is_central(&self, w: &str) -> bool {
        self.elements.iter().all(|x| self.mul(x, w) == self.mul(w, x))
    }

    /// One-object groupoid on the point `*`.
    pub fn as_groupoid(&self) -> Groupoid {
        let objects = FiniteSet::point();
        let to_pt = SetMap::to_point(&self.elements);
        let mut comp = BTreeMap::new();
        for a in self.elements.iter() {
            for b in self.elements.iter() {
                comp.insert((a.to_string(), b.to_string()), self.mul(a, b));
            }
        }
        Groupoid::new(objects, self.elements.clone(), to_pt.clone(), to_pt, &comp)
            .expect("a group is a groupoid")
    }

    pub fn nerve(&self) -> TruncatedSS2 {
        self.as_groupoid().nerve()
    }
}

/// The pair groupoid on `{0, …, n-1}`: one morphism `(i,j): i → j` for every pair.
pub fn pair_groupoid(n: usize) -> Groupoid {
    let objects = FiniteSet::new((0..n).map(|i| i.to_string())).expect("object labels");
    let arrow = |i: usize, j: usize| pair_label(&i.to_string(), &j.to_string());
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            labels.push(((i, j), arrow(i, j)));
        }
    }
    let morphisms = FiniteSet::new(labels.iter().map(|(_, l)| l.clone())).expect("arrow labels");
    let ends: BTreeMap<&str, (usize, usize)> = labels.iter().map(|(p, l)| (l.as_str(), *p)).collect();
    let obj = |k: usize| objects.index_of(&k.to_string()).expect("object");
    let src = SetMap::from_fn(&morphisms, &objects, |f| obj(ends[morphisms.label(f)].0));
    let tgt = SetMap::from_fn(&morphisms, &objects, |f| obj(ends[morphisms.label(f)].1));
    let mut comp = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                comp.insert((arrow(j, k), arrow(i, j)), arrow(i, k));
            }
        }
    }
    Groupoid::new(objects, morphisms, src, tgt, &comp).expect("pair groupoid")
}

/// Nerve with `α̂(x) = x⁻¹ω`.
pub fn group_frobenius(g: &Group, omega: &str) -> Result<FrobeniusDatum> {
    let w = g.elements.index(omega, "omega")?;
    let n = g.order();
    let alpha = SetMap::from_fn(&g.elements, &g.elements, |x| g.table[g.inverses[x] * n + w]);
    FrobeniusDatum::new(g.nerve(), alpha)
}

/// Nerve with `α̂(x) = x⁻¹ ∘ σ(t(x))` for a section `σ` of the target map.
pub fn groupoid_frobenius(gpd: &Groupoid, sigma: &SetMap) -> Result<FrobeniusDatum> {
    if sigma.dom() != gpd.objects() || sigma.cod() != gpd.morphisms() {
        return Err(Error::Mismatch("sigma must map objects to morphisms".into()));
    }
    for p in 0..gpd.objects.len() {
        if gpd.tgt.at(sigma.at(p)) != p {
            return Err(Error::Precondition(format!(
                "sigma is not a section of the target map at `{}`",
                gpd.objects.label(p)
            )));
        }
    }
    let alpha = SetMap::from_fn(&gpd.morphisms, &gpd.morphisms, |x| {
        gpd.compose(gpd.inverses[x], sigma.at(gpd.tgt.at(x)))
            .expect("x⁻¹ and σ(t x) are composable")
    });
    FrobeniusDatum::new(gpd.nerve(), alpha)
}

/// The section picking identity morphisms.
pub fn identity_section(gpd: &Groupoid) -> SetMap {
    SetMap::from_fn(&gpd.objects, &gpd.morphisms, |p| gpd.identities[p])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlphaChoice {
    Identity,
    Swap,
}

impl AlphaChoice {
    pub fn name(self) -> &'static str {
        match self {
            AlphaChoice::Identity => "id",
            AlphaChoice::Swap => "swap",
        }
    }
}

/// Member of the two-edge family, flagged with whether the counit constraint holds.
#[derive(Clone, Debug)]
pub struct TwoElementFamily {
    pub datum: FrobeniusDatum,
    pub constraint_met: bool,
}

/// Fiber counts `counts[d0][d1][d2]` with `a = 0`, `b = 1`.
pub type TwoElementCounts = [[[usize; 2]; 2]; 2];

/// One vertex `e`, edges `a = s0(e)` and `b`, and `counts[i][j][k]` simplices
/// labelled `"ijk#t"` with faces `(d0, d1, d2) = (i, j, k)`.
pub fn two_element_from_counts(counts: TwoElementCounts, alpha: AlphaChoice) -> Result<FrobeniusDatum> {
    const AB: [&str; 2] = ["a", "b"];
    let x0 = FiniteSet::new(["e"]).expect("label");
    let x1 = FiniteSet::new(AB).expect("labels");
    let mut simplices = Vec::new();
    for (i, row) in counts.iter().enumerate() {
        for (j, col) in row.iter().enumerate() {
            for (k, &c) in col.iter().enumerate() {
                for t in 0..c {
                    simplices.push((format!("{}{}{}#{t}", AB[i], AB[j], AB[k]), [i, j, k]));
                }
            }
        }
    }
    let x2 = FiniteSet::new(simplices.iter().map(|(l, _)| l.clone()))?;
    let faces: BTreeMap<&str, [usize; 3]> = simplices.iter().map(|(l, f)| (l.as_str(), *f)).collect();
    let d2: [SetMap; 3] =
        std::array::from_fn(|q| SetMap::from_fn(&x2, &x1, |z| faces[x2.label(z)][q]));
    let find = |name: &str| {
        x2.index_of(name)
            .ok_or_else(|| Error::Precondition(format!("degenerate simplex `{name}` is missing")))
    };
    let s1_0 = SetMap::from_indices(x1.clone(), x2.clone(), vec![find("aaa#0")?, find("bba#0")?])?;
    let s1_1 = SetMap::from_indices(x1.clone(), x2.clone(), vec![find("aaa#0")?, find("abb#0")?])?;
    let base = TruncatedSS2::new(
        x0.clone(),
        x1.clone(),
        x2,
        [SetMap::from_fn(&x1, &x0, |_| 0), SetMap::from_fn(&x1, &x0, |_| 0)],
        d2,
        SetMap::from_fn(&x0, &x1, |_| 0),
        [s1_0, s1_1],
    )?;
    let alpha = match alpha {
        AlphaChoice::Identity => SetMap::identity(&x1),
        AlphaChoice::Swap => SetMap::from_fn(&x1, &x1, |i| 1 - i),
    };
    FrobeniusDatum::new(base, alpha)
}

/// The family with `n_aaa = n_bba = n_abb = 1`, `n_aba = n_baa = n_aab = 0` and
/// free `n_bab`, `n_bbb`. With `α̂ = id` a Frobenius structure needs
/// `n_bab = 1`; with the swap it needs `n_bbb = 0`.
pub fn two_element_family(n_bab: usize, n_bbb: usize, alpha: AlphaChoice) -> TwoElementFamily {
    let mut counts = [[[0; 2]; 2]; 2];
    counts[0][0][0] = 1;
    counts[1][1][0] = 1;
    counts[0][1][1] = 1;
    counts[1][0][1] = n_bab;
    counts[1][1][1] = n_bbb;
    let constraint_met = match alpha {
        AlphaChoice::Identity => n_bab == 1,
        AlphaChoice::Swap => n_bbb == 0,
    };
    TwoElementFamily {
        datum: two_element_from_counts(counts, alpha).expect("degenerate simplices present"),
        constraint_met,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nerve_sizes() {
        let t = Group::cyclic(2).nerve();
        assert_eq!(t.x2().len(), 4);
        let p = pair_groupoid(2).nerve();
        assert_eq!((p.x1().len(), p.x2().len()), (4, 8));
        assert!(p.validate().is_empty());
        let triv = Group::cyclic(1).nerve();
        assert_eq!((triv.x0().len(), triv.x1().len(), triv.x2().len()), (1, 1, 1));
    }

    #[test]
    fn symmetric_group_table() {
        let g = Group::symmetric3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.mul("(12)", "(23)"), "(123)");
        assert_eq!(g.mul("(23)", "(12)"), "(132)");
        assert_eq!(g.inverse("(123)"), "(132)");
        assert!(!g.is_central("(12)"));
        assert!(g.is_central("e"));
    }

    #[test]
    fn products_and_powers() {
        let k = Group::klein();
        assert_eq!(k.order(), 4);
        assert!(k.is_abelian());
        assert_eq!(k.mul("(0,1)", "(1,1)"), "(1,0)");
        let z4 = Group::cyclic(4);
        assert_eq!(z4.pow("1", 3), "3");
        assert_eq!(z4.pow("2", 2), "0");
    }

    #[test]
    fn bad_tables_are_rejected() {
        let els = FiniteSet::new(["0", "1"]).unwrap();
        let mut t = BTreeMap::new();
        for (a, b, c) in [("0", "0", "0"), ("0", "1", "1"), ("1", "0", "1"), ("1", "1", "1")] {
            t.insert((a.to_string(), b.to_string()), c.to_string());
        }
        assert!(matches!(Group::from_table(els.clone(), &t, "0"), Err(Error::InvalidGroupoid(_))));
        t.remove(&("1".to_string(), "1".to_string()));
        assert!(Group::from_table(els, &t, "0").is_err());
    }

    #[test]
    fn alpha_hat_of_cyclic_group() {
        let g = Group::cyclic(3);
        let f = group_frobenius(&g, "1").unwrap();
        for x in 0..3usize {
            let expect = ((3 - x) % 3 + 1) % 3;
            assert_eq!(f.alpha_hat().apply(&x.to_string()), Some(expect.to_string().as_str()));
        }
        assert!(group_frobenius(&g, "7").is_err());
    }

    #[test]
    fn pair_groupoid_alpha_hat_is_reversal() {
        let gpd = pair_groupoid(3);
        let f = groupoid_frobenius(&gpd, &identity_section(&gpd)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(f.alpha_hat().apply(&format!("({i},{j})")).unwrap(), format!("({j},{i})"));
            }
        }
        // σ must pick arrows into each object
        let bad = SetMap::from_fn(gpd.objects(), gpd.morphisms(), |_| 0);
        assert!(matches!(groupoid_frobenius(&gpd, &bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn one_object_groupoid_matches_group() {
        let g = Group::symmetric3();
        let gpd = g.as_groupoid();
        let w = gpd.morphisms().index_of("(123)").unwrap();
        let sigma = SetMap::from_fn(gpd.objects(), gpd.morphisms(), |_| w);
        let a = groupoid_frobenius(&gpd, &sigma).unwrap();
        let b = group_frobenius(&g, "(123)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn two_element_labels() {
        let f = two_element_family(2, 1, AlphaChoice::Identity);
        assert!(!f.constraint_met);
        let labels: Vec<&str> = f.datum.base().x2().iter().collect();
        assert_eq!(labels, ["aaa#0", "abb#0", "bab#0", "bab#1", "bba#0", "bbb#0"]);
        let mut counts = [[[0; 2]; 2]; 2];
        counts[0][0][0] = 1;
        assert!(matches!(
            two_element_from_counts(counts, AlphaChoice::Swap),
            Err(Error::Precondition(_))
        ));
    }
}
