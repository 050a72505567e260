//! JSON encodings.
//!
//! Maps are objects from domain labels to codomain labels, sets are arrays of
//! labels, and counts are decimal strings so that they survive any JSON reader.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::constructions::{group_frobenius, groupoid_frobenius, identity_section, Group, Groupoid};
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusDatum;
use crate::rel::{Relation, RelationWord};
use crate::simplicial::TruncatedSS2;
use crate::span::{FiniteSet, MultiplicityMatrix, SetMap, Span};

type Assignment = BTreeMap<String, String>;

fn set(labels: &[String]) -> Result<FiniteSet> {
    FiniteSet::new(labels.iter().cloned())
}

fn map(dom: &FiniteSet, cod: &FiniteSet, a: &Assignment) -> Result<SetMap> {
    SetMap::from_labels(dom.clone(), cod.clone(), a)
}

fn indexed<'a, T>(m: &'a BTreeMap<String, T>, key: &str, what: &str) -> Result<&'a T> {
    m.get(key)
        .ok_or_else(|| Error::Malformed(format!("missing `{what}` entry \"{key}\"")))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SetMapJson {
    dom: Vec<String>,
    cod: Vec<String>,
    map: Assignment,
}

pub fn setmap_to_json(f: &SetMap) -> Value {
    json!({ "dom": f.dom().labels(), "cod": f.cod().labels(), "map": f.to_labels() })
}

pub fn setmap_from_json(v: &Value) -> Result<SetMap> {
    let j: SetMapJson = serde_json::from_value(v.clone())?;
    map(&set(&j.dom)?, &set(&j.cod)?, &j.map)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpanJson {
    src: Vec<String>,
    dst: Vec<String>,
    apex: Vec<String>,
    left: Assignment,
    right: Assignment,
}

pub fn span_to_json(s: &Span) -> Value {
    json!({
        "src": s.src().labels(),
        "dst": s.dst().labels(),
        "apex": s.apex().labels(),
        "left": s.left().to_labels(),
        "right": s.right().to_labels(),
    })
}

pub fn span_from_json(v: &Value) -> Result<Span> {
    let j: SpanJson = serde_json::from_value(v.clone())?;
    let apex = set(&j.apex)?;
    Span::new(map(&apex, &set(&j.src)?, &j.left)?, map(&apex, &set(&j.dst)?, &j.right)?)
}

pub fn matrix_to_json(m: &MultiplicityMatrix) -> Value {
    json!({ "src": m.src().labels(), "dst": m.dst().labels(), "rows": m.to_decimal_rows() })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Tss2Json {
    #[serde(rename = "X0")]
    x0: Vec<String>,
    #[serde(rename = "X1")]
    x1: Vec<String>,
    #[serde(rename = "X2")]
    x2: Vec<String>,
    d1: BTreeMap<String, Assignment>,
    d2: BTreeMap<String, Assignment>,
    s0: Assignment,
    s1: BTreeMap<String, Assignment>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha_hat: Option<Assignment>,
}

impl Tss2Json {
    fn build(&self) -> Result<TruncatedSS2> {
        let (x0, x1, x2) = (set(&self.x0)?, set(&self.x1)?, set(&self.x2)?);
        let face = |m: &BTreeMap<String, Assignment>, k: usize, what: &str, dom: &FiniteSet, cod: &FiniteSet| {
            map(dom, cod, indexed(m, &k.to_string(), what)?)
        };
        TruncatedSS2::new(
            x0.clone(),
            x1.clone(),
            x2.clone(),
            [face(&self.d1, 0, "d1", &x1, &x0)?, face(&self.d1, 1, "d1", &x1, &x0)?],
            [
                face(&self.d2, 0, "d2", &x2, &x1)?,
                face(&self.d2, 1, "d2", &x2, &x1)?,
                face(&self.d2, 2, "d2", &x2, &x1)?,
            ],
            map(&x0, &x1, &self.s0)?,
            [face(&self.s1, 0, "s1", &x1, &x2)?, face(&self.s1, 1, "s1", &x1, &x2)?],
        )
    }
}

fn numbered(maps: &[&SetMap]) -> BTreeMap<String, Assignment> {
    maps.iter().enumerate().map(|(i, m)| (i.to_string(), m.to_labels())).collect()
}

pub fn tss2_to_json(t: &TruncatedSS2) -> Value {
    serde_json::to_value(tss2_json(t, None)).expect("plain data")
}

fn tss2_json(t: &TruncatedSS2, alpha_hat: Option<&SetMap>) -> Tss2Json {
    Tss2Json {
        x0: t.x0().labels().to_vec(),
        x1: t.x1().labels().to_vec(),
        x2: t.x2().labels().to_vec(),
        d1: numbered(&[t.d1(0), t.d1(1)]),
        d2: numbered(&[t.d2(0), t.d2(1), t.d2(2)]),
        s0: t.s0().to_labels(),
        s1: numbered(&[t.s1(0), t.s1(1)]),
        alpha_hat: alpha_hat.map(SetMap::to_labels),
    }
}

pub fn frobenius_to_json(f: &FrobeniusDatum) -> Value {
    serde_json::to_value(tss2_json(f.base(), Some(f.alpha_hat()))).expect("plain data")
}

pub fn tss2_from_json(v: &Value) -> Result<TruncatedSS2> {
    let j: Tss2Json = serde_json::from_value(v.clone())?;
    j.build()
}

pub fn frobenius_from_json(v: &Value) -> Result<FrobeniusDatum> {
    match load_structure(v)? {
        Structure::Frobenius(f) => Ok(f),
        Structure::Simplicial(_) => Err(Error::Malformed("missing `alpha_hat`".into())),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationJson {
    src: Vec<String>,
    dst: Vec<String>,
    pairs: Vec<(String, String)>,
}

pub fn relation_to_json(r: &Relation) -> Value {
    json!({ "src": r.src().labels(), "dst": r.dst().labels(), "pairs": r.label_pairs() })
}

pub fn relation_from_json(v: &Value) -> Result<Relation> {
    let j: RelationJson = serde_json::from_value(v.clone())?;
    relation(&set(&j.src)?, &set(&j.dst)?, &j.pairs)
}

fn relation(src: &FiniteSet, dst: &FiniteSet, pairs: &[(String, String)]) -> Result<Relation> {
    Relation::from_labels(src.clone(), dst.clone(), pairs.iter().map(|(x, y)| (x.as_str(), y.as_str())))
}

/// `letters[i]` lists the pairs of `R_{i+1}: objects[i] → objects[i+1]`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WordJson {
    objects: Vec<Vec<String>>,
    letters: Vec<Vec<(String, String)>>,
}

pub fn word_to_json(w: &RelationWord) -> Value {
    let objects: Vec<Vec<String>> = w.objects().iter().map(|o| o.labels().to_vec()).collect();
    let letters: Vec<Vec<(String, String)>> = w.letters().iter().map(Relation::label_pairs).collect();
    json!({ "objects": objects, "letters": letters })
}

pub fn word_from_json(v: &Value) -> Result<RelationWord> {
    let j: WordJson = serde_json::from_value(v.clone())?;
    if j.objects.len() != j.letters.len() + 1 {
        return Err(Error::Mismatch(format!(
            "{} objects cannot bound {} letters",
            j.objects.len(),
            j.letters.len()
        )));
    }
    let objects = j.objects.iter().map(|o| set(o)).collect::<Result<Vec<_>>>()?;
    let letters = j
        .letters
        .iter()
        .enumerate()
        .map(|(i, pairs)| relation(&objects[i], &objects[i + 1], pairs))
        .collect::<Result<Vec<_>>>()?;
    RelationWord::new(letters)
}

/// Cayley table as nested objects: `table[a][b] = a·b`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupJson {
    elements: Vec<String>,
    table: BTreeMap<String, Assignment>,
    identity: String,
    #[serde(default)]
    omega: Option<String>,
}

fn flatten(table: &BTreeMap<String, Assignment>) -> BTreeMap<(String, String), String> {
    table
        .iter()
        .flat_map(|(a, row)| row.iter().map(move |(b, ab)| ((a.clone(), b.clone()), ab.clone())))
        .collect()
}

pub fn group_to_json(g: &Group, omega: Option<&str>) -> Value {
    let els = g.elements();
    let table: BTreeMap<&str, BTreeMap<&str, String>> = els
        .iter()
        .map(|a| (a, els.iter().map(|b| (b, g.mul(a, b))).collect()))
        .collect();
    let mut v = json!({ "elements": els.labels(), "table": table, "identity": g.identity() });
    if let Some(w) = omega {
        v["omega"] = json!(w);
    }
    v
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupoidJson {
    objects: Vec<String>,
    morphisms: Vec<String>,
    src: Assignment,
    tgt: Assignment,
    /// `comp[f][g] = f ∘ g` for `src(f) = tgt(g)`.
    comp: BTreeMap<String, Assignment>,
    #[serde(default)]
    sigma: Option<Assignment>,
}

pub fn groupoid_to_json(g: &Groupoid) -> Value {
    let m = g.morphisms();
    let mut comp: BTreeMap<&str, BTreeMap<&str, &str>> = BTreeMap::new();
    for f in 0..m.len() {
        for h in 0..m.len() {
            if let Some(fh) = g.compose(f, h) {
                comp.entry(m.label(f)).or_default().insert(m.label(h), m.label(fh));
            }
        }
    }
    json!({
        "objects": g.objects().labels(),
        "morphisms": m.labels(),
        "src": g.src().to_labels(),
        "tgt": g.tgt().to_labels(),
        "comp": comp,
    })
}

/// What a structure file describes.
#[derive(Clone, Debug)]
pub enum Structure {
    Simplicial(TruncatedSS2),
    Frobenius(FrobeniusDatum),
}

impl Structure {
    pub fn base(&self) -> &TruncatedSS2 {
        match self {
            Structure::Simplicial(t) => t,
            Structure::Frobenius(f) => f.base(),
        }
    }

    pub fn frobenius(&self) -> Option<&FrobeniusDatum> {
        match self {
            Structure::Simplicial(_) => None,
            Structure::Frobenius(f) => Some(f),
        }
    }
}

/// Reads a tss2 or frobenius object, or a group / groupoid table (which is
/// turned into its nerve with `α̂` from `omega` / `sigma`, defaulting to the
/// identity).
pub fn load_structure(v: &Value) -> Result<Structure> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Malformed("expected a JSON object".into()))?;
    if obj.contains_key("X0") {
        let j: Tss2Json = serde_json::from_value(v.clone())?;
        let base = j.build()?;
        return match &j.alpha_hat {
            None => Ok(Structure::Simplicial(base)),
            Some(a) => {
                let alpha = map(base.x1(), base.x1(), a)?;
                Ok(Structure::Frobenius(FrobeniusDatum::new(base, alpha)?))
            }
        };
    }
    if obj.contains_key("elements") {
        let j: GroupJson = serde_json::from_value(v.clone())?;
        let g = Group::from_table(set(&j.elements)?, &flatten(&j.table), &j.identity)?;
        let omega = j.omega.as_deref().unwrap_or(&j.identity);
        return Ok(Structure::Frobenius(group_frobenius(&g, omega)?));
    }
    if obj.contains_key("morphisms") {
        let j: GroupoidJson = serde_json::from_value(v.clone())?;
        let objects = set(&j.objects)?;
        let morphisms = set(&j.morphisms)?;
        let gpd = Groupoid::new(
            objects.clone(),
            morphisms.clone(),
            map(&morphisms, &objects, &j.src)?,
            map(&morphisms, &objects, &j.tgt)?,
            &flatten(&j.comp),
        )?;
        let sigma = match &j.sigma {
            Some(s) => map(&objects, &morphisms, s)?,
            None => identity_section(&gpd),
        };
        return Ok(Structure::Frobenius(groupoid_frobenius(&gpd, &sigma)?));
    }
    Err(Error::Malformed(
        "unrecognised structure: expected keys X0.., elements.. or morphisms..".into(),
    ))
}
