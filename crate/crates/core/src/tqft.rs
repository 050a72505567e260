//! Closed-surface invariants and evaluation of composites of the generators
//! `η, ε, μ, δ, 1, τ`.
//!
//! Words are evaluated on multiplicity matrices only; apexes of large
//! composites are never built.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::frobenius::{
    check_frobenius, comultiplication_unchecked, counit_span, FrobeniusDatum,
};
use crate::matrix::NatMatrix;
use crate::span::{compose_spans, FiniteSet, MultiplicityMatrix};

/// Counts of trajectories `x → y` through `μ ∘ δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    pub index: FiniteSet,
    pub counts: NatMatrix,
}

fn require_frobenius(f: &FrobeniusDatum) -> Result<()> {
    check_frobenius(f).map(|_| ()).map_err(Error::NotFrobenius)
}

/// Matrix of the handle `μ ∘ δ`, built by composing the two spans.
pub fn transfer_matrix(f: &FrobeniusDatum) -> Result<TransferMatrix> {
    require_frobenius(f)?;
    let mult = f.base().monoid_spans().mult;
    let handle = compose_spans(&comultiplication_unchecked(f), &mult)?;
    Ok(TransferMatrix {
        index: f.carrier().clone(),
        counts: handle.to_matrix().counts().clone(),
    })
}

fn unit_row(f: &FrobeniusDatum) -> Vec<BigUint> {
    let mut u = vec![BigUint::zero(); f.carrier().len()];
    for &x in f.base().s0().images() {
        u[x] += 1u32;
    }
    u
}

fn counit_column(f: &FrobeniusDatum) -> Vec<BigUint> {
    let m = counit_span(f).to_matrix();
    (0..f.carrier().len()).map(|x| m.counts().get(x, 0).clone()).collect()
}

fn dot(a: &[BigUint], b: &[BigUint]) -> BigUint {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `Z(Σ_g) = ε ∘ (μ ∘ δ)^g ∘ η`.
pub fn partition_function(f: &FrobeniusDatum, genus: u64) -> Result<BigUint> {
    let t = transfer_matrix(f)?;
    let row = t.counts.pow(genus).left_apply(&unit_row(f));
    Ok(dot(&row, &counit_column(f)))
}

/// `Z(Σ_0), …, Z(Σ_max)` sharing one transfer matrix.
pub fn partition_functions(f: &FrobeniusDatum, max_genus: u64) -> Result<Vec<BigUint>> {
    let t = transfer_matrix(f)?;
    let c = counit_column(f);
    let mut row = unit_row(f);
    let mut out = Vec::with_capacity(max_genus as usize + 1);
    for g in 0..=max_genus {
        if g > 0 {
            row = t.counts.left_apply(&row);
        }
        out.push(dot(&row, &c));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Unit,
    Counit,
    Mult,
    Comult,
    Id,
    Twist,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::Unit,
        Generator::Counit,
        Generator::Mult,
        Generator::Comult,
        Generator::Id,
        Generator::Twist,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Unit => "unit",
            Generator::Counit => "counit",
            Generator::Mult => "mult",
            Generator::Comult => "comult",
            Generator::Id => "id",
            Generator::Twist => "twist",
        }
    }

    /// `(inputs, outputs)` as powers of `X`.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Generator::Unit => (0, 1),
            Generator::Counit => (1, 0),
            Generator::Mult => (2, 1),
            Generator::Comult => (1, 2),
            Generator::Id => (1, 1),
            Generator::Twist => (2, 2),
        }
    }
}

/// Expression tree over the generators. `Compose([f, g, h])` is `f ∘ g ∘ h`,
/// so the last factor is applied first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorWord {
    Leaf(Generator),
    Compose(Vec<GeneratorWord>),
    Tensor(Vec<GeneratorWord>),
}

impl GeneratorWord {
    pub fn compose(parts: impl IntoIterator<Item = GeneratorWord>) -> Self {
        GeneratorWord::Compose(parts.into_iter().collect())
    }

    pub fn tensor(parts: impl IntoIterator<Item = GeneratorWord>) -> Self {
        GeneratorWord::Tensor(parts.into_iter().collect())
    }

    /// `ε ∘ (μ ∘ δ)^g ∘ η`.
    pub fn closed_surface(genus: usize) -> Self {
        use Generator::*;
        let mut parts = vec![GeneratorWord::Leaf(Counit)];
        for _ in 0..genus {
            parts.push(GeneratorWord::compose([GeneratorWord::Leaf(Mult), GeneratorWord::Leaf(Comult)]));
        }
        parts.push(GeneratorWord::Leaf(Unit));
        GeneratorWord::Compose(parts)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => Generator::ALL
                .iter()
                .find(|g| g.name() == s)
                .map(|&g| GeneratorWord::Leaf(g))
                .ok_or_else(|| Error::Malformed(format!("unknown generator `{s}`"))),
            Value::Array(items) => {
                let (head, rest) = items
                    .split_first()
                    .ok_or_else(|| Error::Malformed("empty word node".into()))?;
                if rest.is_empty() {
                    return Err(Error::Malformed(format!("node {v} has no factors")));
                }
                let parts = rest.iter().map(Self::from_json).collect::<Result<Vec<_>>>()?;
                match head.as_str() {
                    Some("compose") => Ok(GeneratorWord::Compose(parts)),
                    Some("tensor") => Ok(GeneratorWord::Tensor(parts)),
                    _ => Err(Error::Malformed(format!(
                        "word node must start with \"compose\" or \"tensor\", got {head}"
                    ))),
                }
            }
            other => Err(Error::Malformed(format!("not a generator word: {other}"))),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            GeneratorWord::Leaf(g) => Value::String(g.name().into()),
            GeneratorWord::Compose(ps) | GeneratorWord::Tensor(ps) => {
                let head = if matches!(self, GeneratorWord::Compose(_)) { "compose" } else { "tensor" };
                let mut v = vec![Value::String(head.into())];
                v.extend(ps.iter().map(Self::to_json));
                Value::Array(v)
            }
        }
    }

    /// `(inputs, outputs)`, or the innermost ill-typed subtree.
    pub fn arity(&self) -> Result<(usize, usize)> {
        match self {
            GeneratorWord::Leaf(g) => Ok(g.arity()),
            GeneratorWord::Tensor(ps) => {
                let mut acc = (0, 0);
                for p in ps {
                    let (i, o) = p.arity()?;
                    acc = (acc.0 + i, acc.1 + o);
                }
                Ok(acc)
            }
            GeneratorWord::Compose(ps) => {
                let arities = ps.iter().map(Self::arity).collect::<Result<Vec<_>>>()?;
                for (k, w) in arities.windows(2).enumerate() {
                    // ps[k] consumes what ps[k + 1] produces
                    if w[0].0 != w[1].1 {
                        return Err(Error::IllTyped {
                            subtree: self.to_string(),
                            reason: format!(
                                "factor {} expects X^{} but factor {} produces X^{}",
                                k,
                                w[0].0,
                                k + 1,
                                w[1].1
                            ),
                        });
                    }
                }
                Ok((arities.last().expect("nonempty").0, arities[0].1))
            }
        }
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// Positional matrices of the generators: a tuple `(x_1, …, x_k)` of `X^k`
/// sits at `((i_1 n + i_2) n + …) n + i_k`.
struct Leaves {
    n: usize,
    unit: NatMatrix,
    counit: NatMatrix,
    mult: NatMatrix,
    comult: NatMatrix,
    twist: NatMatrix,
}

impl Leaves {
    fn new(f: &FrobeniusDatum) -> Self {
        let n = f.carrier().len();
        let b = f.base();
        let mut unit = NatMatrix::zeros(1, n);
        for (x, c) in unit_row(f).into_iter().enumerate() {
            unit.set(0, x, c);
        }
        let mut counit = NatMatrix::zeros(n, 1);
        for (x, c) in counit_column(f).into_iter().enumerate() {
            counit.set(x, 0, c);
        }
        let mut mult = NatMatrix::zeros(n * n, n);
        let mut comult = NatMatrix::zeros(n, n * n);
        for z in 0..b.x2().len() {
            let [d0, d1, d2] = b.faces(z);
            mult.increment(d2 * n + d0, d1);
            comult.increment(d0, f.alpha_hat().at(d2) * n + d1);
        }
        let mut twist = NatMatrix::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                twist.increment(j * n + i, i * n + j);
            }
        }
        Leaves { n, unit, counit, mult, comult, twist }
    }

    fn get(&self, g: Generator) -> NatMatrix {
        match g {
            Generator::Unit => self.unit.clone(),
            Generator::Counit => self.counit.clone(),
            Generator::Mult => self.mult.clone(),
            Generator::Comult => self.comult.clone(),
            Generator::Id => NatMatrix::identity(self.n),
            Generator::Twist => self.twist.clone(),
        }
    }

    fn eval(&self, w: &GeneratorWord) -> NatMatrix {
        match w {
            GeneratorWord::Leaf(g) => self.get(*g),
            GeneratorWord::Tensor(ps) => ps
                .iter()
                .map(|p| self.eval(p))
                .reduce(|a, b| a.kronecker(&b))
                .expect("nonempty"),
            GeneratorWord::Compose(ps) => ps
                .iter()
                .rev()
                .map(|p| self.eval(p))
                .reduce(|a, b| a.product(&b))
                .expect("nonempty"),
        }
    }
}

/// `X^k` with left-nested pair labels, and for each positional index its
/// index in that set.
fn labelled_power(x: &FiniteSet, k: usize) -> (FiniteSet, Vec<usize>) {
    if k == 0 {
        return (FiniteSet::point(), vec![0]);
    }
    let mut set = x.clone();
    let mut perm: Vec<usize> = (0..x.len()).collect();
    for _ in 1..k {
        let p = set.product(x);
        perm = perm
            .iter()
            .flat_map(|&q| (0..x.len()).map(move |i| (q, i)))
            .map(|(q, i)| p.pair(q, i))
            .collect();
        set = p.set;
    }
    (set, perm)
}

/// Multiplicity matrix of the composite span `X^inputs ⇸ X^outputs`.
pub fn evaluate_word(f: &FrobeniusDatum, w: &GeneratorWord) -> Result<MultiplicityMatrix> {
    let (dom, cod) = w.arity()?;
    require_frobenius(f)?;
    let leaves = Leaves::new(f);
    let positional = leaves.eval(w);
    let (src, rp) = labelled_power(f.carrier(), dom);
    let (dst, cp) = labelled_power(f.carrier(), cod);
    let mut counts = NatMatrix::zeros(src.len(), dst.len());
    for (i, &r) in rp.iter().enumerate() {
        for (j, &c) in cp.iter().enumerate() {
            counts.set(r, c, positional.get(i, j).clone());
        }
    }
    MultiplicityMatrix::new(src, dst, counts)
}

/// The single entry of a closed word.
pub fn evaluate_closed_word(f: &FrobeniusDatum, w: &GeneratorWord) -> Result<BigUint> {
    let m = evaluate_word(f, w)?;
    if m.src().len() != 1 || m.dst().len() != 1 {
        return Err(Error::IllTyped {
            subtree: w.to_string(),
            reason: "word is not closed".into(),
        });
    }
    Ok(m.counts().get(0, 0).clone())
}
