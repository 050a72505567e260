#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use spanfrob::frobenius::{
    comultiplication_span, copairing_span, counit_span, multiplication_span, pairing_span,
    unit_span, FrobeniusDatum,
};
use spanfrob::rel::{Relation, RelationWord};
use spanfrob::simplicial::TruncatedSS2;
use spanfrob::span::{
    associator, compose_spans, identity_span, left_unitor_inverse, right_unitor_inverse,
    span_to_matrix, tensor_spans, FiniteSet, SetMap, Span,
};

pub fn set(labels: &[&str]) -> FiniteSet {
    FiniteSet::new(labels.iter().copied()).unwrap()
}

pub fn indexed_set(prefix: &str, n: usize) -> FiniteSet {
    FiniteSet::new((0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

pub fn random_map(rng: &mut StdRng, dom: &FiniteSet, cod: &FiniteSet) -> SetMap {
    let image = (0..dom.len()).map(|_| rng.gen_range(0..cod.len())).collect();
    SetMap::from_indices(dom.clone(), cod.clone(), image).unwrap()
}

pub fn random_span(rng: &mut StdRng, src: &FiniteSet, dst: &FiniteSet, max_apex: usize) -> Span {
    let apex = indexed_set("p", rng.gen_range(0..=max_apex));
    Span::new(random_map(rng, &apex, src), random_map(rng, &apex, dst)).unwrap()
}

pub fn random_relation(rng: &mut StdRng, src: &FiniteSet, dst: &FiniteSet) -> Relation {
    let density = rng.gen_range(0.2..0.8);
    let mut pairs = Vec::new();
    for x in src.iter() {
        for y in dst.iter() {
            if rng.gen_bool(density) {
                pairs.push((x, y));
            }
        }
    }
    Relation::from_labels(src.clone(), dst.clone(), pairs).unwrap()
}

/// A chained word of 1..=max_len letters over sets of size 1..=max_set.
pub fn random_word(rng: &mut StdRng, max_len: usize, max_set: usize) -> RelationWord {
    let len = rng.gen_range(1..=max_len);
    let objects: Vec<FiniteSet> = (0..=len)
        .map(|k| indexed_set(&format!("o{k}_"), rng.gen_range(1..=max_set)))
        .collect();
    let letters = objects
        .windows(2)
        .map(|w| random_relation(rng, &w[0], &w[1]))
        .collect();
    RelationWord::new(letters).unwrap()
}

/// A random 2-truncated simplicial set that satisfies every simplicial identity.
///
/// Degenerate simplices are forced; the remaining room up to `max_x2` is filled
/// with random face-compatible triples. With probability one half the extras
/// avoid degenerate outer faces, so the unit conditions have a fair chance.
pub fn random_tss2(rng: &mut StdRng, max_x1: usize, max_x2: usize) -> TruncatedSS2 {
    let n0 = rng.gen_range(1..=2usize.min(max_x1));
    let extra_edges = rng.gen_range(0..=max_x1 - n0);
    let n1 = n0 + extra_edges;

    // Edge k: degenerate on vertex k for k < n0.
    let mut src: Vec<usize> = (0..n0).collect();
    let mut tgt: Vec<usize> = (0..n0).collect();
    for _ in 0..extra_edges {
        src.push(rng.gen_range(0..n0));
        tgt.push(rng.gen_range(0..n0));
    }
    let degenerate = |x: usize| x < n0;

    // (d0, d1, d2) per simplex.
    let mut faces: Vec<[usize; 3]> = Vec::new();
    let mut s10 = vec![0; n1];
    let mut s11 = vec![0; n1];
    for x in 0..n1 {
        s10[x] = faces.len();
        faces.push([x, x, tgt[x]]);
        if degenerate(x) {
            s11[x] = s10[x];
        } else {
            s11[x] = faces.len();
            faces.push([src[x], x, x]);
        }
    }

    let avoid_units = rng.gen_bool(0.5);
    let mut compatible = Vec::new();
    for d0 in 0..n1 {
        for d1 in 0..n1 {
            for d2 in 0..n1 {
                let ok = src[d2] == tgt[d0] && src[d1] == src[d0] && tgt[d2] == tgt[d1];
                if ok && !(avoid_units && (degenerate(d0) || degenerate(d2))) {
                    compatible.push([d0, d1, d2]);
                }
            }
        }
    }
    let room = max_x2.saturating_sub(faces.len());
    if !compatible.is_empty() && room > 0 {
        for _ in 0..rng.gen_range(0..=room) {
            faces.push(*compatible.choose(rng).unwrap());
        }
    }

    let x0 = indexed_set("v", n0);
    let x1 = FiniteSet::new((0..n1).map(|x| {
        if degenerate(x) {
            format!("1v{x}")
        } else {
            format!("e{x}")
        }
    }))
    .unwrap();
    let x2 = indexed_set("z", faces.len());
    let face = |i: usize| {
        SetMap::from_indices(x2.clone(), x1.clone(), faces.iter().map(|f| f[i]).collect()).unwrap()
    };
    TruncatedSS2::new(
        x0.clone(),
        x1.clone(),
        x2.clone(),
        [
            SetMap::from_indices(x1.clone(), x0.clone(), src).unwrap(),
            SetMap::from_indices(x1.clone(), x0.clone(), tgt).unwrap(),
        ],
        [face(0), face(1), face(2)],
        SetMap::from_fn(&x0, &x1, |u| u),
        [
            SetMap::from_indices(x1.clone(), x2.clone(), s10).unwrap(),
            SetMap::from_indices(x1.clone(), x2.clone(), s11).unwrap(),
        ],
    )
    .unwrap()
}

pub fn random_permutation(rng: &mut StdRng, x: &FiniteSet) -> SetMap {
    let mut image: Vec<usize> = (0..x.len()).collect();
    image.shuffle(rng);
    SetMap::from_indices(x.clone(), x.clone(), image).unwrap()
}

fn same(lhs: &Span, rhs: &Span) -> bool {
    span_to_matrix(lhs) == span_to_matrix(rhs)
}

fn inverse_iso(s: &Span) -> Span {
    s.converse()
}

/// Frobenius-object identities checked purely by span composition and
/// multiplicity matrices. Returns the names of the identities that fail.
pub fn frobenius_identity_failures(f: &FrobeniusDatum) -> Vec<&'static str> {
    let x = f.carrier().clone();
    let id = identity_span(&x);
    let eta = unit_span(f);
    let mu = multiplication_span(f);
    let eps = counit_span(f);
    let alpha = pairing_span(f);
    let beta = copairing_span(f);
    let delta = match comultiplication_span(f) {
        Ok(d) => d,
        Err(_) => return vec!["comultiplication"],
    };
    let assoc = associator(&x, &x, &x);
    let assoc_inv = inverse_iso(&assoc);
    let c = |a: &Span, b: &Span| compose_spans(a, b).unwrap();
    let mut out = Vec::new();

    if !same(&c(&mu, &eps), &alpha) {
        out.push("ε∘μ = α");
    }

    // X → X×• → X×(X×X) → (X×X)×X → •×X → X
    let left_snake = c(
        &c(
            &c(&c(&right_unitor_inverse(&x), &tensor_spans(&id, &beta)), &assoc_inv),
            &tensor_spans(&alpha, &id),
        ),
        &inverse_iso(&left_unitor_inverse(&x)),
    );
    if !same(&left_snake, &id) {
        out.push("left snake");
    }
    // X → •×X → (X×X)×X → X×(X×X) → X×• → X
    let right_snake = c(
        &c(
            &c(&c(&left_unitor_inverse(&x), &tensor_spans(&beta, &id)), &assoc),
            &tensor_spans(&id, &alpha),
        ),
        &inverse_iso(&right_unitor_inverse(&x)),
    );
    if !same(&right_snake, &id) {
        out.push("right snake");
    }

    // (1×μ)∘assoc∘(δ×1) = δ∘μ = (μ×1)∘assoc⁻¹∘(1×δ)
    let middle = c(&mu, &delta);
    let via_left = c(&c(&tensor_spans(&delta, &id), &assoc), &tensor_spans(&id, &mu));
    let via_right = c(&c(&tensor_spans(&id, &delta), &assoc_inv), &tensor_spans(&mu, &id));
    if !same(&via_left, &middle) || !same(&via_right, &middle) {
        out.push("Frobenius equation");
    }

    let coassoc_l = c(&c(&delta, &tensor_spans(&delta, &id)), &assoc);
    let coassoc_r = c(&delta, &tensor_spans(&id, &delta));
    if !same(&coassoc_l, &coassoc_r) {
        out.push("coassociativity");
    }

    let counit_l = c(&delta, &tensor_spans(&eps, &id));
    let counit_r = c(&delta, &tensor_spans(&id, &eps));
    if !same(&counit_l, &left_unitor_inverse(&x)) || !same(&counit_r, &right_unitor_inverse(&x))
    {
        out.push("counitality");
    }

    // η then δ is β.
    if !same(&c(&eta, &delta), &beta) {
        out.push("δ∘η = β");
    }
    out
}
