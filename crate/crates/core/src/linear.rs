//! Linearization: the Frobenius algebra `k[X_1]` of a Frobenius object in finite spans.
//!
//! Basis vectors are the edges; `x · y` counts 2-simplices with `d0 = x`,
//! `d2 = y`, weighted onto `d1`. All checks are exact.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::frobenius::{check_frobenius, FrobeniusDatum};
use crate::span::{pair_label, FiniteSet};

/// Structure constants `mult[x][y][z]` (coefficient of `z` in `x · y`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusAlgebraPresentation {
    basis: FiniteSet,
    mult: Vec<BigUint>,
    unit: Vec<BigUint>,
    counit: Vec<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraViolation {
    pub axiom: &'static str,
    pub detail: String,
}

impl FrobeniusAlgebraPresentation {
    pub fn new(basis: FiniteSet, mult: Vec<BigUint>, unit: Vec<BigUint>, counit: Vec<BigUint>) -> Result<Self> {
        let n = basis.len();
        if mult.len() != n * n * n || unit.len() != n || counit.len() != n {
            return Err(Error::Mismatch(format!(
                "presentation sizes do not fit a basis of {n} elements"
            )));
        }
        Ok(FrobeniusAlgebraPresentation { basis, mult, unit, counit })
    }

    pub fn basis(&self) -> &FiniteSet {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn constant(&self, x: usize, y: usize, z: usize) -> &BigUint {
        let n = self.dim();
        &self.mult[(x * n + y) * n + z]
    }

    /// Label-level lookup; `None` on unknown labels.
    pub fn constant_of(&self, x: &str, y: &str, z: &str) -> Option<&BigUint> {
        let b = &self.basis;
        Some(self.constant(b.index_of(x)?, b.index_of(y)?, b.index_of(z)?))
    }

    /// Nonzero terms `(z, c)` of `x · y`.
    pub fn product_terms(&self, x: usize, y: usize) -> Vec<(usize, &BigUint)> {
        (0..self.dim())
            .map(|z| (z, self.constant(x, y, z)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn unit(&self) -> &[BigUint] {
        &self.unit
    }

    pub fn counit(&self) -> &[BigUint] {
        &self.counit
    }

    /// `B[x][y] = ε(x · y)`.
    pub fn gram(&self) -> Vec<Vec<BigUint>> {
        let n = self.dim();
        (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| (0..n).map(|z| self.constant(x, y, z) * &self.counit[z]).sum())
                    .collect()
            })
            .collect()
    }

    pub fn gram_determinant(&self) -> BigInt {
        let m: Vec<Vec<BigInt>> = self
            .gram()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        determinant(m)
    }

    pub fn to_json(&self) -> Value {
        let n = self.dim();
        let mut mult = Map::new();
        for x in 0..n {
            for y in 0..n {
                let mut row = Map::new();
                for (z, c) in self.product_terms(x, y) {
                    row.insert(self.basis.label(z).to_string(), Value::String(c.to_string()));
                }
                if !row.is_empty() {
                    mult.insert(format!("{}|{}", self.basis.label(x), self.basis.label(y)), Value::Object(row));
                }
            }
        }
        let decimal = |v: &[BigUint]| Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect());
        json!({
            "basis": self.basis.labels(),
            "mult": mult,
            "unit": decimal(&self.unit),
            "counit": decimal(&self.counit),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let basis: Vec<String> = serde_json::from_value(v.get("basis").cloned().unwrap_or(Value::Null))?;
        let basis = FiniteSet::new(basis)?;
        let n = basis.len();
        let number = |s: &Value| -> Result<BigUint> {
            let text = s
                .as_str()
                .ok_or_else(|| Error::Malformed(format!("expected a decimal string, got {s}")))?;
            text.parse()
                .map_err(|_| Error::Malformed(format!("`{text}` is not a natural number")))
        };
        let vector = |key: &str| -> Result<Vec<BigUint>> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Malformed(format!("missing array `{key}`")))?;
            arr.iter().map(number).collect()
        };
        let mut mult = vec![BigUint::zero(); n * n * n];
        let table: BTreeMap<String, BTreeMap<String, Value>> =
            serde_json::from_value(v.get("mult").cloned().unwrap_or(Value::Null))?;
        for (key, row) in &table {
            let (x, y) = key
                .split_once('|')
                .ok_or_else(|| Error::Malformed(format!("mult key `{key}` is not of the form x|y")))?;
            let (x, y) = (basis.index(x, "mult")?, basis.index(y, "mult")?);
            for (z, c) in row {
                let z = basis.index(z, "mult")?;
                mult[(x * n + y) * n + z] = number(c)?;
            }
        }
        Self::new(basis, mult, vector("unit")?, vector("counit")?)
    }
}

/// Fraction-free Gaussian elimination.
fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

pub fn linearize(f: &FrobeniusDatum) -> Result<FrobeniusAlgebraPresentation> {
    check_frobenius(f).map_err(Error::NotFrobenius)?;
    let b = f.base();
    let n = b.x1().len();
    let mut mult = vec![BigUint::zero(); n * n * n];
    for z in 0..b.x2().len() {
        let [d0, d1, d2] = b.faces(z);
        mult[(d0 * n + d2) * n + d1] += 1u32;
    }
    let mut unit = vec![BigUint::zero(); n];
    let mut counit = vec![BigUint::zero(); n];
    for &x in b.s0().images() {
        unit[x] += 1u32;
        counit[f.alpha_hat().at(x)] += 1u32;
    }
    FrobeniusAlgebraPresentation::new(b.x1().clone(), mult, unit, counit)
}

/// Associativity, two-sided unit and nondegeneracy of `(x, y) ↦ ε(x · y)`.
pub fn verify_frobenius_algebra(p: &FrobeniusAlgebraPresentation) -> Vec<AlgebraViolation> {
    let n = p.dim();
    let l = |i: usize| p.basis.label(i);
    let mut out = Vec::new();

    'assoc: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for v in 0..n {
                    let lhs: BigUint = (0..n).map(|w| p.constant(x, y, w) * p.constant(w, z, v)).sum();
                    let rhs: BigUint = (0..n).map(|w| p.constant(y, z, w) * p.constant(x, w, v)).sum();
                    if lhs != rhs {
                        out.push(AlgebraViolation {
                            axiom: "associativity",
                            detail: format!(
                                "coefficient of {} in ({}·{})·{} is {lhs}, in {}·({}·{}) it is {rhs}",
                                l(v), l(x), l(y), l(z), l(x), l(y), l(z)
                            ),
                        });
                        break 'assoc;
                    }
                }
            }
        }
    }

    for (axiom, left) in [("left unit", true), ("right unit", false)] {
        'unit: for y in 0..n {
            for z in 0..n {
                let got: BigUint = (0..n)
                    .map(|u| {
                        let c = if left { p.constant(u, y, z) } else { p.constant(y, u, z) };
                        &p.unit[u] * c
                    })
                    .sum();
                let want = if y == z { BigUint::one() } else { BigUint::zero() };
                if got != want {
                    out.push(AlgebraViolation {
                        axiom,
                        detail: format!("coefficient of {} in the product with {} is {got}", l(z), l(y)),
                    });
                    break 'unit;
                }
            }
        }
    }

    if p.gram_determinant().is_zero() {
        out.push(AlgebraViolation {
            axiom: "nondegenerate form",
            detail: "the Gram matrix of ε(x·y) is singular".into(),
        });
    }
    out
}

/// Direct sum, with basis labels `(0,x)` and `(1,y)`.
pub fn direct_sum(p: &FrobeniusAlgebraPresentation, q: &FrobeniusAlgebraPresentation) -> FrobeniusAlgebraPresentation {
    let (np, nq) = (p.dim(), q.dim());
    let tagged: Vec<(String, usize, usize)> = p
        .basis
        .iter()
        .enumerate()
        .map(|(i, x)| (pair_label("0", x), 0, i))
        .chain(q.basis.iter().enumerate().map(|(i, y)| (pair_label("1", y), 1, i)))
        .collect();
    let basis = FiniteSet::new(tagged.iter().map(|t| t.0.clone())).expect("tagged labels are distinct");
    let n = np + nq;
    let pos: Vec<(usize, usize)> = basis
        .iter()
        .map(|lab| {
            let t = tagged.iter().find(|t| t.0 == lab).expect("own label");
            (t.1, t.2)
        })
        .collect();
    let mut mult = vec![BigUint::zero(); n * n * n];
    let mut unit = vec![BigUint::zero(); n];
    let mut counit = vec![BigUint::zero(); n];
    for (x, &(sx, ix)) in pos.iter().enumerate() {
        let part = if sx == 0 { p } else { q };
        unit[x] = part.unit[ix].clone();
        counit[x] = part.counit[ix].clone();
        for (y, &(sy, iy)) in pos.iter().enumerate() {
            if sx != sy {
                continue;
            }
            for (z, &(sz, iz)) in pos.iter().enumerate() {
                if sz == sx {
                    mult[(x * n + y) * n + z] = part.constant(ix, iy, iz).clone();
                }
            }
        }
    }
    FrobeniusAlgebraPresentation::new(basis, mult, unit, counit).expect("sizes match")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_frobenius, two_element_family, AlphaChoice, Group};

    fn det(rows: &[&[i64]]) -> BigInt {
        determinant(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    #[test]
    fn bareiss_determinants() {
        assert_eq!(det(&[]), BigInt::one());
        assert_eq!(det(&[&[0, 1], &[1, 0]]), BigInt::from(-1));
        assert_eq!(det(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]), BigInt::from(0));
        assert_eq!(det(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 4]]), BigInt::from(-21));
        assert_eq!(det(&[&[1, 2], &[2, 4]]), BigInt::zero());
    }

    #[test]
    fn swap_family_algebra() {
        // θ² = m·1, ε(1) = 0, ε(θ) = 1
        let f = two_element_family(3, 0, AlphaChoice::Swap).datum;
        let p = linearize(&f).unwrap();
        assert_eq!(p.constant_of("b", "b", "a"), Some(&BigUint::from(3u32)));
        assert_eq!(p.constant_of("b", "b", "b"), Some(&BigUint::zero()));
        assert_eq!(p.counit(), [BigUint::zero(), BigUint::one()]);
        assert!(verify_frobenius_algebra(&p).is_empty());
    }

    #[test]
    fn id_family_algebra() {
        // θ² = 1 + nθ
        let f = two_element_family(1, 4, AlphaChoice::Identity).datum;
        let p = linearize(&f).unwrap();
        assert_eq!(p.constant_of("b", "b", "a"), Some(&BigUint::one()));
        assert_eq!(p.constant_of("b", "b", "b"), Some(&BigUint::from(4u32)));
        assert_eq!(p.unit(), p.counit());
        assert!(verify_frobenius_algebra(&p).is_empty());
    }

    #[test]
    fn zero_counit_is_degenerate() {
        let f = group_frobenius(&Group::cyclic(2), "0").unwrap();
        let p = linearize(&f).unwrap();
        let q = FrobeniusAlgebraPresentation::new(
            p.basis().clone(),
            p.mult.clone(),
            p.unit.clone(),
            vec![BigUint::zero(); 2],
        )
        .unwrap();
        let v = verify_frobenius_algebra(&q);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].axiom, "nondegenerate form");
    }

    #[test]
    fn json_round_trip() {
        let p = linearize(&group_frobenius(&Group::symmetric3(), "(123)").unwrap()).unwrap();
        let v = p.to_json();
        assert_eq!(FrobeniusAlgebraPresentation::from_json(&v).unwrap(), p);
        assert_eq!(v["mult"]["(12)|(23)"]["(132)"], "1");
    }

    #[test]
    fn direct_sum_is_blockwise() {
        let a = linearize(&group_frobenius(&Group::cyclic(2), "0").unwrap()).unwrap();
        let b = linearize(&two_element_family(1, 0, AlphaChoice::Swap).datum).unwrap();
        let s = direct_sum(&a, &b);
        assert_eq!(s.dim(), 4);
        assert!(verify_frobenius_algebra(&s).is_empty());
        assert_eq!(s.constant_of("(1,b)", "(1,b)", "(1,a)"), Some(&BigUint::one()));
        assert_eq!(s.constant_of("(0,1)", "(1,b)", "(1,b)"), Some(&BigUint::zero()));
    }

    #[test]
    fn non_associative_constants_are_caught() {
        let basis = FiniteSet::new(["e", "p", "q"]).unwrap();
        let mut mult = vec![BigUint::zero(); 27];
        let at = |x: usize, y: usize, z: usize| (x * 3 + y) * 3 + z;
        for x in 0..3 {
            mult[at(0, x, x)] = BigUint::one();
            mult[at(x, 0, x)] = BigUint::one();
        }
        mult[at(1, 1, 2)] = BigUint::one();
        mult[at(1, 2, 1)] = BigUint::one();
        let unit = vec![BigUint::one(), BigUint::zero(), BigUint::zero()];
        let p = FrobeniusAlgebraPresentation::new(basis, mult, unit.clone(), unit).unwrap();
        let v = verify_frobenius_algebra(&p);
        assert!(v.iter().any(|v| v.axiom == "associativity"));
    }
}
