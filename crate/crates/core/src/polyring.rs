//! Sparse multivariate polynomials over exact rationals.
//!
//! A [`MultiPoly`] stores its own ordered variable list and a dense exponent
//! vector per term relative to that list; binary operations align on the
//! sorted union of the variable lists. Terms are kept in graded
//! lexicographic order (descending), coefficients are reduced fractions, and
//! the canonical form makes structural equality coincide with semantic
//! equality.

use crate::combinatorics::{HookTableau, Partition, Permutation};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Exact rational coefficient type: reduced fraction with positive denominator.
pub type Rat = BigRational;

/// Convenience constructor for a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Convenience constructor for an integer rational.
pub fn rat_int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Variable index; `v` stands for the indeterminate `x_v`.
pub type Var = u32;

thread_local! {
    static TERM_CAP: Cell<usize> = const { Cell::new(0) };
}

/// Panic payload raised when a computation exceeds the configured term cap.
#[derive(Debug, Clone)]
pub struct TermCapExceeded {
    pub terms: usize,
}

/// Sets a per-thread cap on the number of terms any single polynomial may
/// hold; `None` removes the cap. Exceeding the cap panics with
/// [`TermCapExceeded`], which drivers may catch to abort runaway computations.
pub fn set_term_cap(cap: Option<usize>) {
    TERM_CAP.with(|c| c.set(cap.unwrap_or(0)));
}

fn check_term_cap(len: usize) {
    let cap = TERM_CAP.with(Cell::get);
    if cap != 0 && len > cap {
        std::panic::panic_any(TermCapExceeded { terms: len });
    }
}

/// Graded lexicographic comparison of aligned exponent vectors: first by
/// total degree, then lexicographically with earlier variables weighing more.
fn grlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    })
}

/// Exponent vector wrapper ordered graded-lexicographically (ascending), so
/// that the maximum of a `BTreeMap` keyed by it is the leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GrlexKey(Vec<u16>);

impl Ord for GrlexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex(&self.0, &other.0)
    }
}

impl PartialOrd for GrlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

type Term = (Vec<u16>, Rat);

/// A sparse multivariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    /// Strictly increasing variable indices; only variables that actually
    /// occur are kept.
    vars: Vec<Var>,
    /// Terms in graded-lex descending order; exponent vectors all have
    /// length `vars.len()` and no coefficient is zero.
    terms: Vec<Term>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            vars: Vec::new(),
            terms: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            vars: Vec::new(),
            terms: vec![(Vec::new(), c)],
        }
    }

    /// The variable `x_v`.
    pub fn var(v: Var) -> Self {
        MultiPoly {
            vars: vec![v],
            terms: vec![(vec![1], Rat::one())],
        }
    }

    /// The power `x_v^e`.
    pub fn var_pow(v: Var, e: u16) -> Self {
        if e == 0 {
            return Self::one();
        }
        MultiPoly {
            vars: vec![v],
            terms: vec![(vec![e], Rat::one())],
        }
    }

    /// A single term `c * prod x_v^e` from variable-exponent pairs.
    pub fn monomial(pairs: &[(Var, u16)], c: Rat) -> Self {
        let mut map: BTreeMap<Var, u16> = BTreeMap::new();
        for &(v, e) in pairs {
            let slot = map.entry(v).or_insert(0);
            *slot = slot.checked_add(e).expect("monomial exponent overflow");
        }
        map.retain(|_, e| *e != 0);
        if c.is_zero() {
            return Self::zero();
        }
        let vars: Vec<Var> = map.keys().copied().collect();
        let exps: Vec<u16> = map.values().copied().collect();
        MultiPoly {
            vars,
            terms: vec![(exps, c)],
        }
    }

    /// Builds a polynomial from raw terms over the given variable list,
    /// combining duplicates and canonicalizing.
    pub fn from_terms(vars: Vec<Var>, terms: Vec<(Vec<u16>, Rat)>) -> Self {
        let mut map: FxHashMap<Vec<u16>, Rat> = FxHashMap::default();
        for (exps, coeff) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
            if coeff.is_zero() {
                continue;
            }
            match map.entry(exps) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let sum = e.get().clone() + coeff;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(coeff);
                }
            }
        }
        Self::from_map(vars, map)
    }

    fn from_map(vars: Vec<Var>, map: FxHashMap<Vec<u16>, Rat>) -> Self {
        check_term_cap(map.len());
        // Drop variables that never occur.
        let mut used = vec![false; vars.len()];
        for exps in map.keys() {
            for (i, &e) in exps.iter().enumerate() {
                if e != 0 {
                    used[i] = true;
                }
            }
        }
        let keep: Vec<usize> = (0..vars.len()).filter(|&i| used[i]).collect();
        let new_vars: Vec<Var> = keep.iter().map(|&i| vars[i]).collect();
        let mut terms: Vec<(Vec<u16>, Rat)> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exps, c)| {
                let slim: Vec<u16> = keep.iter().map(|&i| exps[i]).collect();
                (slim, c)
            })
            .collect();
        terms.sort_unstable_by(|a, b| grlex(&b.0, &a.0));
        MultiPoly {
            vars: new_vars,
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    /// Iterates terms as (exponent vector aligned with [`Self::vars`], coefficient),
    /// in graded-lex descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().map(|&x| x as u32).sum())
            .max()
    }

    /// `Some(d)` if the polynomial is nonzero and homogeneous of degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self
            .terms
            .iter()
            .map(|(e, _)| e.iter().map(|&x| x as u32).sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The coefficient of the monomial given by variable-exponent pairs
    /// (variables not listed must have exponent zero).
    pub fn coeff_of(&self, pairs: &[(Var, u16)]) -> Rat {
        let mut target = vec![0u16; self.vars.len()];
        for &(v, e) in pairs {
            match self.vars.binary_search(&v) {
                Ok(pos) => {
                    target[pos] = target[pos]
                        .checked_add(e)
                        .expect("monomial exponent overflow");
                }
                Err(_) => {
                    if e != 0 {
                        return Rat::zero();
                    }
                }
            }
        }
        self.terms
            .iter()
            .find(|(exps, _)| *exps == target)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    fn align(&self, other: &MultiPoly) -> (Vec<Var>, Vec<Term>, Vec<Term>) {
        let mut vars: Vec<Var> = self.vars.clone();
        for &v in &other.vars {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars.sort_unstable();
        let remap = |poly: &MultiPoly| -> Vec<(Vec<u16>, Rat)> {
            let positions: Vec<usize> = poly
                .vars
                .iter()
                .map(|v| vars.binary_search(v).expect("var in union"))
                .collect();
            poly.terms
                .iter()
                .map(|(exps, c)| {
                    let mut new_exps = vec![0u16; vars.len()];
                    for (i, &e) in exps.iter().enumerate() {
                        new_exps[positions[i]] = e;
                    }
                    (new_exps, c.clone())
                })
                .collect()
        };
        (vars.clone(), remap(self), remap(other))
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to `x_v`.
    pub fn partial_derivative(&self, v: Var) -> MultiPoly {
        let Ok(pos) = self.vars.binary_search(&v) else {
            return MultiPoly::zero();
        };
        let terms = self
            .terms
            .iter()
            .filter(|(exps, _)| exps[pos] > 0)
            .map(|(exps, c)| {
                let mut e = exps.clone();
                let power = e[pos];
                e[pos] -= 1;
                (e, c * rat_int(power as i64))
            })
            .collect();
        MultiPoly::from_terms(self.vars.clone(), terms)
    }

    /// Degree in the single variable `x_v`; `None` for the zero polynomial,
    /// and 0 when the variable does not occur.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        match self.vars.binary_search(&v) {
            Ok(pos) => self.terms.iter().map(|(e, _)| e[pos] as u32).max(),
            Err(_) => Some(0),
        }
    }

    /// The coefficient polynomial of `x_v^(degree_in(v))`; it does not
    /// involve `x_v`. For the zero polynomial this is zero, and when `x_v`
    /// does not occur it is the polynomial itself.
    pub fn leading_coeff_in(&self, v: Var) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let Ok(pos) = self.vars.binary_search(&v) else {
            return self.clone();
        };
        let top = self.degree_in(v).unwrap() as u16;
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[pos] == top)
            .map(|(e, c)| {
                let mut slim = e.clone();
                slim[pos] = 0;
                (slim, c.clone())
            })
            .collect();
        MultiPoly::from_terms(self.vars.clone(), terms)
    }

    /// Leading term under graded-lex, as (variable-exponent pairs, coefficient).
    pub fn leading_term(&self) -> Option<(Vec<(Var, u16)>, Rat)> {
        self.terms.first().map(|(exps, c)| {
            let pairs = self
                .vars
                .iter()
                .zip(exps.iter())
                .filter(|(_, &e)| e != 0)
                .map(|(&v, &e)| (v, e))
                .collect();
            (pairs, c.clone())
        })
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (vars, a, b) = self.align(rhs);
        let mut terms = a;
        terms.extend(b);
        MultiPoly::from_terms(vars, terms)
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (vars, a, b) = self.align(rhs);
        let mut terms = a;
        terms.extend(b.into_iter().map(|(e, c)| (e, -c)));
        MultiPoly::from_terms(vars, terms)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let (vars, a, b) = self.align(rhs);
        let mut map: FxHashMap<Vec<u16>, Rat> =
            FxHashMap::with_capacity_and_hasher(a.len() + b.len(), Default::default());
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let exps: Vec<u16> = ea
                    .iter()
                    .zip(eb.iter())
                    .map(|(x, y)| x.checked_add(*y).expect("monomial exponent overflow"))
                    .collect();
                let prod = ca * cb;
                match map.entry(exps) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let sum = e.get().clone() + prod;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
            check_term_cap(map.len());
        }
        MultiPoly::from_map(vars, map)
    }
}

/// Applies a permutation of variable indices: `x_v` is substituted by
/// `x_(sigma(v))`. This is a left group action on polynomials.
pub fn apply_permutation(sigma: &Permutation, p: &MultiPoly) -> MultiPoly {
    if sigma.is_identity() || p.is_zero() {
        return p.clone();
    }
    let mut image: Vec<(Var, usize)> = p
        .vars
        .iter()
        .enumerate()
        .map(|(pos, &v)| (sigma.apply(v), pos))
        .collect();
    image.sort_unstable_by_key(|&(v, _)| v);
    let vars: Vec<Var> = image.iter().map(|&(v, _)| v).collect();
    let terms: Vec<(Vec<u16>, Rat)> = p
        .terms
        .iter()
        .map(|(exps, c)| {
            let new_exps: Vec<u16> = image.iter().map(|&(_, pos)| exps[pos]).collect();
            (new_exps, c.clone())
        })
        .collect();
    let mut terms = terms;
    terms.sort_unstable_by(|a, b| grlex(&b.0, &a.0));
    MultiPoly { vars, terms }
}

/// Exact division: returns `q` with `p = q * d`, or the leading term of the
/// nonzero remainder when `d` does not divide `p`. Division with remainder
/// under graded-lex order, accepting only remainder zero.
///
/// Panics if `d` is zero.
pub fn exact_divide(p: &MultiPoly, d: &MultiPoly) -> Result<MultiPoly> {
    assert!(!d.is_zero(), "division by the zero polynomial");
    if p.is_zero() {
        return Ok(MultiPoly::zero());
    }
    let (vars, pa, da) = p.align(d);
    let mut rem: BTreeMap<GrlexKey, Rat> = pa.into_iter().map(|(e, c)| (GrlexKey(e), c)).collect();
    let mut div_terms = da;
    div_terms.sort_unstable_by(|a, b| grlex(&b.0, &a.0));
    let (lead_exps, lead_coeff) = div_terms[0].clone();
    let mut quotient: Vec<(Vec<u16>, Rat)> = Vec::new();
    while let Some((GrlexKey(rl_exps), rl_coeff)) =
        rem.last_key_value().map(|(k, v)| (k.clone(), v.clone()))
    {
        if rl_exps
            .iter()
            .zip(lead_exps.iter())
            .any(|(&re, &de)| re < de)
        {
            let witness =
                MultiPoly::from_terms(vars.clone(), vec![(rl_exps.clone(), rl_coeff.clone())]);
            return Err(Error::NotDivisible {
                leading_term: witness.to_string(),
            });
        }
        let factor_exps: Vec<u16> = rl_exps
            .iter()
            .zip(lead_exps.iter())
            .map(|(&re, &de)| re - de)
            .collect();
        let factor_coeff = &rl_coeff / &lead_coeff;
        for (de, dc) in &div_terms {
            let shifted: Vec<u16> = de
                .iter()
                .zip(factor_exps.iter())
                .map(|(a, b)| a + b)
                .collect();
            let delta = dc * &factor_coeff;
            let key = GrlexKey(shifted);
            match rem.entry(key) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let new = e.get().clone() - delta;
                    if new.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = new;
                    }
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
            }
        }
        quotient.push((factor_exps, factor_coeff));
    }
    Ok(MultiPoly::from_terms(vars, quotient))
}

/// The `i`-th elementary symmetric polynomial on the listed variables.
/// `e_0 = 1`, and `e_i = 0` for `i` beyond the number of variables.
pub fn elementary_symmetric(vars: &[Var], i: usize) -> MultiPoly {
    let mut sorted: Vec<Var> = vars.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if i == 0 {
        return MultiPoly::one();
    }
    if i > sorted.len() {
        return MultiPoly::zero();
    }
    let mut terms: Vec<(Vec<u16>, Rat)> = Vec::new();
    let mut choice: Vec<usize> = Vec::with_capacity(i);
    fn rec(
        start: usize,
        left: usize,
        total: usize,
        choice: &mut Vec<usize>,
        terms: &mut Vec<(Vec<u16>, Rat)>,
        width: usize,
    ) {
        if left == 0 {
            let mut exps = vec![0u16; width];
            for &pos in choice.iter() {
                exps[pos] = 1;
            }
            terms.push((exps, Rat::one()));
            return;
        }
        for pos in start..=(total - left) {
            choice.push(pos);
            rec(pos + 1, left - 1, total, choice, terms, width);
            choice.pop();
        }
    }
    rec(0, i, sorted.len(), &mut choice, &mut terms, sorted.len());
    MultiPoly::from_terms(sorted, terms)
}

/// `e_nu = prod_i e_(nu_i)` on the listed variables.
pub fn e_of_partition(vars: &[Var], nu: &Partition) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for &part in nu.parts() {
        acc = &acc * &elementary_symmetric(vars, part as usize);
    }
    acc
}

/// Elementary symmetric polynomial on the listed variables with one variable
/// omitted.
pub fn elementary_symmetric_omitting(vars: &[Var], i: usize, omit: Var) -> MultiPoly {
    let filtered: Vec<Var> = vars.iter().copied().filter(|&v| v != omit).collect();
    elementary_symmetric(&filtered, i)
}

/// True iff every adjacent transposition of the listed variables fixes `p`.
pub fn is_symmetric_in(p: &MultiPoly, vars: &[Var]) -> bool {
    vars.windows(2).all(|w| {
        let swapped = apply_permutation(&Permutation::transposition(w[0], w[1]), p);
        swapped == *p
    })
}

/// True iff every adjacent transposition of the listed variables negates `p`.
pub fn is_antisymmetric_in(p: &MultiPoly, vars: &[Var]) -> bool {
    vars.windows(2).all(|w| {
        let swapped = apply_permutation(&Permutation::transposition(w[0], w[1]), p);
        swapped == -p
    })
}

/// Definite integral of `sum_j coeffs[j] * t^j` from `x_a` to `x_b`:
/// `sum_j coeffs[j] * (x_b^(j+1) - x_a^(j+1)) / (j+1)`.
pub fn integrate_between(coeffs: &[MultiPoly], a: Var, b: Var) -> MultiPoly {
    assert_ne!(a, b, "integration bounds must be distinct variables");
    let mut acc = MultiPoly::zero();
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = (j + 1) as u16;
        let bounds = &MultiPoly::var_pow(b, e) - &MultiPoly::var_pow(a, e);
        let piece = (c * &bounds).scale(&rat(1, (j + 1) as i64));
        acc = &acc + &piece;
    }
    acc
}

/// The Vandermonde factor `V_D`: the product of `(x_i - x_j)` over pairs
/// `i < j` of entries in the same column of the tableau. For a hook this
/// runs over all pairs of first-column entries.
pub fn vandermonde_factor(d: &HookTableau) -> MultiPoly {
    let mut entries: Vec<u32> = d.column_entries().to_vec();
    entries.sort_unstable();
    let mut acc = MultiPoly::one();
    for (idx, &i) in entries.iter().enumerate() {
        for &j in &entries[idx + 1..] {
            acc = &acc * &(&MultiPoly::var(i) - &MultiPoly::var(j));
        }
    }
    acc
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (exps, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = coeff.abs();
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(exps.iter())
                .filter(|(_, &e)| e != 0)
                .map(|(&v, &e)| {
                    if e == 1 {
                        format!("x{v}")
                    } else {
                        format!("x{v}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("·"))?;
            } else {
                write!(f, "{abs}·{}", mono.join("·"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    exps: Vec<u16>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<Var>,
    terms: Vec<TermRepr>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(exps, c)| TermRepr {
                    coeff: c.to_string(),
                    exps: exps.clone(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            if t.exps.len() != repr.vars.len() {
                return Err(serde::de::Error::custom("exponent vector length mismatch"));
            }
            let coeff = Rat::from_str(&t.coeff)
                .map_err(|e| serde::de::Error::custom(format!("bad coefficient: {e}")))?;
            terms.push((t.exps, coeff));
        }
        Ok(MultiPoly::from_terms(repr.vars, terms))
    }
}
