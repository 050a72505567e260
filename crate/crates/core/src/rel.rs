//! Relations, formal composable words of relations, and their trajectory spans.
//!
//! A word `R_n • … • R_1` stands for a morphism of the Wehrheim–Woodward
//! category over `Rel`. Adjacent letters may be merged when they form a monic
//! pair; the trajectory span of a word is invariant under such merges, and
//! words are compared through the multiplicity matrix of that span.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::span::{span_to_matrix, FiniteSet, MultiplicityMatrix, SetMap, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    src: FiniteSet,
    dst: FiniteSet,
    pairs: BTreeSet<(usize, usize)>,
}

impl Relation {
    pub fn new(
        src: FiniteSet,
        dst: FiniteSet,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        if let Some(&(x, y)) = pairs.iter().find(|&&(x, y)| x >= src.len() || y >= dst.len()) {
            return Err(Error::Mismatch(format!("pair ({x}, {y}) outside src × dst")));
        }
        Ok(Relation { src, dst, pairs })
    }

    pub fn from_labels<'a>(
        src: FiniteSet,
        dst: FiniteSet,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut idx = BTreeSet::new();
        for (x, y) in pairs {
            idx.insert((src.index(x, "relation source")?, dst.index(y, "relation target")?));
        }
        Ok(Relation { src, dst, pairs: idx })
    }

    pub fn identity(x: &FiniteSet) -> Self {
        Relation {
            src: x.clone(),
            dst: x.clone(),
            pairs: (0..x.len()).map(|i| (i, i)).collect(),
        }
    }

    pub fn graph(f: &SetMap) -> Self {
        Relation {
            src: f.dom().clone(),
            dst: f.cod().clone(),
            pairs: (0..f.dom().len()).map(|i| (i, f.at(i))).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Relation {
            src: self.dst.clone(),
            dst: self.src.clone(),
            pairs: self.pairs.iter().map(|&(x, y)| (y, x)).collect(),
        }
    }

    pub fn src(&self) -> &FiniteSet {
        &self.src
    }

    pub fn dst(&self) -> &FiniteSet {
        &self.dst
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.pairs.contains(&(x, y))
    }

    pub fn label_pairs(&self) -> Vec<(String, String)> {
        self.pairs
            .iter()
            .map(|&(x, y)| (self.src.label(x).to_string(), self.dst.label(y).to_string()))
            .collect()
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.src.len()];
        for &(x, y) in &self.pairs {
            out[x].push(y);
        }
        out
    }

    /// Number of middle witnesses `y` for each `(x, z)` in `next ∘ self`.
    fn witness_counts(&self, next: &Relation) -> Vec<Vec<usize>> {
        let succ = next.successors();
        let mut counts = vec![vec![0usize; next.dst.len()]; self.src.len()];
        for &(x, y) in &self.pairs {
            for &z in &succ[y] {
                counts[x][z] += 1;
            }
        }
        counts
    }
}

fn check_chain(r: &Relation, s: &Relation) -> Result<()> {
    if r.dst != s.src {
        return Err(Error::Mismatch(format!(
            "relation into {:?} followed by relation out of {:?}",
            r.dst, s.src
        )));
    }
    Ok(())
}

/// `S ∘ R = {(x, z) : ∃y, (x, y) ∈ R, (y, z) ∈ S}`.
pub fn compose_relations(r: &Relation, s: &Relation) -> Result<Relation> {
    check_chain(r, s)?;
    let counts = r.witness_counts(s);
    let pairs = counts
        .iter()
        .enumerate()
        .flat_map(|(x, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(move |(z, _)| (x, z))
        })
        .collect();
    Ok(Relation {
        src: r.src.clone(),
        dst: s.dst.clone(),
        pairs,
    })
}

/// `(S, R)` is monic when every `(x, z)` in `S ∘ R` has at most one witness.
pub fn is_monic_pair(s: &Relation, r: &Relation) -> Result<bool> {
    check_chain(r, s)?;
    Ok(r.witness_counts(s).iter().flatten().all(|&c| c <= 1))
}

/// Image relation `{(f1(a), f2(a))}`; multiplicities are forgotten.
pub fn span_to_relation(s: &Span) -> Relation {
    Relation {
        src: s.src().clone(),
        dst: s.dst().clone(),
        pairs: (0..s.apex().len())
            .map(|a| (s.left().at(a), s.right().at(a)))
            .collect(),
    }
}

/// A composable word `X_0 →R_1 X_1 → … →R_n X_n`, `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationWord {
    letters: Vec<Relation>,
}

impl RelationWord {
    pub fn new(letters: Vec<Relation>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Malformed("a relation word needs at least one letter".into()));
        }
        for w in letters.windows(2) {
            check_chain(&w[0], &w[1])?;
        }
        Ok(RelationWord { letters })
    }

    pub fn letters(&self) -> &[Relation] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn objects(&self) -> Vec<FiniteSet> {
        let mut out = vec![self.letters[0].src.clone()];
        out.extend(self.letters.iter().map(|r| r.dst.clone()));
        out
    }

    pub fn src(&self) -> &FiniteSet {
        &self.letters[0].src
    }

    pub fn dst(&self) -> &FiniteSet {
        &self.letters[self.letters.len() - 1].dst
    }

    /// `self` followed by `next`.
    pub fn concat(&self, next: &RelationWord) -> Result<RelationWord> {
        let mut letters = self.letters.clone();
        letters.extend(next.letters.iter().cloned());
        RelationWord::new(letters)
    }

    /// Merges the letters at `i` and `i + 1` into their composite.
    pub fn contract(&self, i: usize) -> Result<RelationWord> {
        if i + 1 >= self.letters.len() {
            return Err(Error::Malformed(format!("no adjacent pair at position {i}")));
        }
        let merged = compose_relations(&self.letters[i], &self.letters[i + 1])?;
        let mut letters = self.letters.clone();
        letters.splice(i..i + 2, std::iter::once(merged));
        Ok(RelationWord { letters })
    }

    /// Positions `i` where letters `i, i + 1` form a monic pair.
    pub fn monic_positions(&self) -> Vec<usize> {
        (0..self.letters.len().saturating_sub(1))
            .filter(|&i| {
                is_monic_pair(&self.letters[i + 1], &self.letters[i]).expect("chained word")
            })
            .collect()
    }
}

/// The span of all trajectories `(x_0, …, x_n)` through the word, with the
/// first and last projections as legs. Apex labels are `(x_0|…|x_n)`.
pub fn word_trajectories(w: &RelationWord) -> Span {
    let mut paths: Vec<Vec<usize>> = (0..w.src().len()).map(|x| vec![x]).collect();
    for letter in &w.letters {
        let succ = letter.successors();
        paths = paths
            .into_iter()
            .flat_map(|p| {
                let last = *p.last().expect("nonempty path");
                succ[last].iter().map(move |&y| {
                    let mut q = p.clone();
                    q.push(y);
                    q
                })
            })
            .collect();
    }
    let objects = w.objects();
    let label = |p: &[usize]| {
        let parts: Vec<&str> = p.iter().zip(&objects).map(|(&i, o)| o.label(i)).collect();
        format!("({})", parts.join("|"))
    };
    let labels: Vec<String> = paths.iter().map(|p| label(p)).collect();
    let apex = FiniteSet::new(labels.iter().cloned())
        .expect("trajectory labels are distinct for distinct paths");
    let mut first = vec![0; paths.len()];
    let mut last = vec![0; paths.len()];
    for (l, p) in labels.iter().zip(&paths) {
        let k = apex.index_of(l).expect("trajectory label");
        first[k] = p[0];
        last[k] = p[p.len() - 1];
    }
    Span::new(
        SetMap::from_indices(apex.clone(), w.src().clone(), first).expect("first projection"),
        SetMap::from_indices(apex, w.dst().clone(), last).expect("last projection"),
    )
    .expect("legs share the apex")
}

pub fn word_matrix(w: &RelationWord) -> MultiplicityMatrix {
    span_to_matrix(&word_trajectories(w))
}

/// Contracts the leftmost monic adjacent pair until none remains.
pub fn reduce_word(w: &RelationWord) -> RelationWord {
    let mut current = w.clone();
    while let Some(&i) = current.monic_positions().first() {
        current = current.contract(i).expect("monic position is contractible");
    }
    current
}

/// `X ← A → Y` as the two-letter word `(graph f1)ᵀ, graph f2`.
pub fn functor_f(s: &Span) -> RelationWord {
    RelationWord {
        letters: vec![Relation::graph(s.left()).transpose(), Relation::graph(s.right())],
    }
}
