//! The rational group ring of a finite symmetric group on an arbitrary
//! finite integer set, its action on polynomials, the subgroup sums `[H]`
//! and signed sums `[H]'`, and the tableau symmetrizers `C(D)`, `R(D)` and
//! the idempotent `gamma_D`.

use crate::combinatorics::{HookTableau, Permutation};
use crate::polyring::{apply_permutation, rat, rat_int, MultiPoly, Rat};
use num_traits::Zero;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A formal rational combination of permutations of a fixed support set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    support: BTreeSet<u32>,
    terms: BTreeMap<Permutation, Rat>,
}

impl GroupRingElement {
    /// The zero element on the given support.
    pub fn zero(support: impl IntoIterator<Item = u32>) -> Self {
        GroupRingElement {
            support: support.into_iter().collect(),
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity on the given support.
    pub fn identity(support: impl IntoIterator<Item = u32>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Permutation::identity(), rat_int(1));
        GroupRingElement {
            support: support.into_iter().collect(),
            terms,
        }
    }

    pub fn from_terms(
        support: impl IntoIterator<Item = u32>,
        terms: impl IntoIterator<Item = (Permutation, Rat)>,
    ) -> Self {
        let mut map: BTreeMap<Permutation, Rat> = BTreeMap::new();
        for (perm, coeff) in terms {
            let entry = map.entry(perm).or_insert_with(Rat::zero);
            *entry += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        GroupRingElement {
            support: support.into_iter().collect(),
            terms: map,
        }
    }

    pub fn support(&self) -> &BTreeSet<u32> {
        &self.support
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, perm: &Permutation) -> Rat {
        self.terms.get(perm).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> GroupRingElement {
        if c.is_zero() {
            return GroupRingElement::zero(self.support.iter().copied());
        }
        GroupRingElement {
            support: self.support.clone(),
            terms: self.terms.iter().map(|(p, k)| (p.clone(), k * c)).collect(),
        }
    }

    pub fn add(&self, other: &GroupRingElement) -> GroupRingElement {
        let support: BTreeSet<u32> = self.support.union(&other.support).copied().collect();
        let mut terms = self.terms.clone();
        for (perm, coeff) in &other.terms {
            let entry = terms.entry(perm.clone()).or_insert_with(Rat::zero);
            *entry += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        GroupRingElement { support, terms }
    }

    /// Ring product by convolution: permutations compose so that
    /// `(g * h).act(p) = g.act(h.act(p))`.
    pub fn mul(&self, other: &GroupRingElement) -> GroupRingElement {
        let support: BTreeSet<u32> = self.support.union(&other.support).copied().collect();
        let mut terms: BTreeMap<Permutation, Rat> = BTreeMap::new();
        for (sigma, a) in &self.terms {
            for (tau, b) in &other.terms {
                let prod = sigma.compose(tau);
                let entry = terms.entry(prod).or_insert_with(Rat::zero);
                *entry += a * b;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        GroupRingElement { support, terms }
    }

    /// Applies the element to a polynomial:
    /// `sum_sigma coeff_sigma * sigma(p)`.
    pub fn act(&self, p: &MultiPoly) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (perm, coeff) in &self.terms {
            acc = &acc + &apply_permutation(perm, p).scale(coeff);
        }
        acc
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (perm, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}·{perm}")?;
        }
        Ok(())
    }
}

impl Serialize for GroupRingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct TermRepr {
            perm: BTreeMap<String, u32>,
            coeff: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (perm, coeff) in &self.terms {
            let map = perm
                .support()
                .into_iter()
                .map(|k| (k.to_string(), perm.apply(k)))
                .collect();
            seq.serialize_element(&TermRepr {
                perm: map,
                coeff: coeff.to_string(),
            })?;
        }
        seq.end()
    }
}

/// `[S_Y]` (all coefficients 1) or `[S_Y]'` (coefficients `sgn`), the sum
/// over the full symmetric group of the given set.
pub fn subgroup_sum(set: &[u32], signed: bool) -> GroupRingElement {
    let terms = Permutation::all_of(set).into_iter().map(|perm| {
        let coeff = if signed {
            rat_int(perm.sign() as i64)
        } else {
            rat_int(1)
        };
        (perm, coeff)
    });
    GroupRingElement::from_terms(set.iter().copied(), terms)
}

/// The column symmetrizer `C(D) = [S_(column entries)]'`, carried on the
/// full entry set of the tableau.
pub fn column_symmetrizer(d: &HookTableau) -> GroupRingElement {
    let mut c = subgroup_sum(d.column_entries(), true);
    c.support = d.mem();
    c
}

/// The row symmetrizer `R(D) = [S_(row entries)]`, carried on the full entry
/// set of the tableau.
pub fn row_symmetrizer(d: &HookTableau) -> GroupRingElement {
    let mut r = subgroup_sum(d.row_entries(), false);
    r.support = d.mem();
    r
}

/// The idempotent `gamma_D = f_lambda * C(D) * R(D) / n!`, where `f_lambda`
/// is the number of standard tableaux of the shape.
pub fn gamma(d: &HookTableau, f_lambda: u64) -> GroupRingElement {
    let n = d.n() as u64;
    let factorial: i64 = (1..=n as i64).product();
    column_symmetrizer(d)
        .mul(&row_symmetrizer(d))
        .scale(&rat(f_lambda as i64, factorial))
}

/// [`gamma`] with `f_lambda` computed from the shape.
pub fn gamma_of(d: &HookTableau) -> GroupRingElement {
    gamma(d, d.shape().standard_tableau_count())
}

/// The telescoping factors of `[S_X]` (or `[S_X]'` when `signed`): for the
/// ordering `i_1, ..., i_n` the factor list
/// `(1 ± (i_1,i_n) ± ... ± (i_(n-1),i_n)), ..., (1 ± (i_1,i_2))`,
/// whose in-order product equals the subgroup sum.
pub fn telescoping_factorization(x: &[u32], signed: bool) -> Vec<GroupRingElement> {
    let sign = if signed { rat_int(-1) } else { rat_int(1) };
    let mut factors = Vec::new();
    for r in (2..=x.len()).rev() {
        let mut factor = GroupRingElement::identity(x.iter().copied());
        for j in 0..r - 1 {
            let t = GroupRingElement::from_terms(
                x.iter().copied(),
                [(Permutation::transposition(x[j], x[r - 1]), sign.clone())],
            );
            factor = factor.add(&t);
        }
        factors.push(factor);
    }
    factors
}

/// `gamma_D` assembled from the telescoping factorization:
/// `(1/(n (n-k)! (k-1)!)) * {1 - sum_c (c1,c)} [S_(col\c1)]' * {1 + sum_r (c1,r)} [S_(row\c1)]`
/// with `c1` the corner entry. Equals [`gamma`] term by term.
pub fn gamma_hook_factored(d: &HookTableau) -> GroupRingElement {
    let corner = d.corner();
    let support = d.mem();
    let col_rest: Vec<u32> = d.column_entries()[1..].to_vec();
    let row_rest: Vec<u32> = d.row_entries()[1..].to_vec();
    let n = d.n() as i64;
    let k = d.k() as i64;

    let mut col_head = GroupRingElement::identity(support.iter().copied());
    for &c in &col_rest {
        col_head = col_head.add(&GroupRingElement::from_terms(
            support.iter().copied(),
            [(Permutation::transposition(corner, c), rat_int(-1))],
        ));
    }
    let mut row_head = GroupRingElement::identity(support.iter().copied());
    for &r in &row_rest {
        row_head = row_head.add(&GroupRingElement::from_terms(
            support.iter().copied(),
            [(Permutation::transposition(corner, r), rat_int(1))],
        ));
    }
    let col_tail = subgroup_sum(&col_rest, true);
    let row_tail = subgroup_sum(&row_rest, false);

    let factorial = |m: i64| -> i64 { (1..=m).product() };
    let norm = rat(1, n * factorial(n - k) * factorial(k - 1));
    col_head
        .mul(&col_tail)
        .mul(&row_head)
        .mul(&row_tail)
        .scale(&norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{standard_hook_tableaux, HookShape};
    use crate::polyring::elementary_symmetric;

    fn x(v: u32) -> MultiPoly {
        MultiPoly::var(v)
    }

    #[test]
    fn subgroup_sums_small() {
        let s2 = subgroup_sum(&[1, 2], false);
        assert_eq!(s2.num_terms(), 2);
        assert_eq!(s2.coeff_of(&Permutation::identity()), rat_int(1));
        assert_eq!(s2.coeff_of(&Permutation::transposition(1, 2)), rat_int(1));

        let s2s = subgroup_sum(&[1, 2], true);
        assert_eq!(s2s.coeff_of(&Permutation::transposition(1, 2)), rat_int(-1));

        let s3s = subgroup_sum(&[1, 2, 3], true);
        assert_eq!(s3s.num_terms(), 6);
        let total: Rat = s3s.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, rat_int(0));
    }

    #[test]
    fn symmetrizers_of_hooks() {
        let t = HookTableau::standard(4, vec![1, 2]).unwrap();
        let c = column_symmetrizer(&t);
        let expected = GroupRingElement::from_terms(
            t.mem(),
            [
                (Permutation::identity(), rat_int(1)),
                (Permutation::transposition(1, 2), rat_int(-1)),
            ],
        );
        assert_eq!(c, expected);

        let r = row_symmetrizer(&t);
        assert_eq!(r.num_terms(), 6); // row entries are {1,3,4}

        let fact = |m: usize| -> usize { (1..=m).product() };
        for (n, k) in [(4, 2), (5, 3)] {
            for t in standard_hook_tableaux(HookShape::new(n, k).unwrap()) {
                assert_eq!(column_symmetrizer(&t).num_terms(), fact(k));
                assert_eq!(row_symmetrizer(&t).num_terms(), fact(n - k + 1));
            }
        }
    }

    #[test]
    fn action_examples() {
        let g = GroupRingElement::from_terms(
            [1u32, 2],
            [
                (Permutation::identity(), rat_int(1)),
                (Permutation::transposition(1, 2), rat_int(-1)),
            ],
        );
        assert_eq!(g.act(&x(1)), &x(1) - &x(2));
    }

    #[test]
    fn action_respects_ring_structure() {
        let g = subgroup_sum(&[1, 2, 3], true);
        let h = GroupRingElement::from_terms(
            [1u32, 2, 3],
            [
                (Permutation::transposition(1, 3), rat(1, 2)),
                (Permutation::identity(), rat_int(2)),
            ],
        );
        let p = &(&x(1) * &x(2)) + &MultiPoly::var_pow(3, 2);
        assert_eq!(g.mul(&h).act(&p), g.act(&h.act(&p)));
    }

    #[test]
    fn symmetric_factor_pulls_out_of_action() {
        // f(PQ) = P f(Q) for symmetric P, on deterministic pseudo-random trials.
        let vars = [1u32, 2, 3];
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let perms = Permutation::all_of(&vars);
        for _ in 0..100 {
            let f = GroupRingElement::from_terms(
                vars,
                perms
                    .iter()
                    .map(|p| (p.clone(), rat_int((next() % 7) as i64 - 3))),
            );
            let p = (1..=3)
                .map(|i| elementary_symmetric(&vars, i).scale(&rat_int((next() % 5) as i64 - 2)))
                .fold(MultiPoly::zero(), |acc, q| &acc + &q);
            let q = (0..3)
                .map(|_| {
                    MultiPoly::monomial(
                        &[
                            (1, (next() % 3) as u16),
                            (2, (next() % 3) as u16),
                            (3, (next() % 2) as u16),
                        ],
                        rat_int((next() % 9) as i64 - 4),
                    )
                })
                .fold(MultiPoly::zero(), |acc, m| &acc + &m);
            assert_eq!(f.act(&(&p * &q)), &p * &f.act(&q));
        }
    }

    #[test]
    fn gamma_is_idempotent_for_standard_hooks() {
        for n in 2..=5usize {
            for k in 1..=n {
                for t in standard_hook_tableaux(HookShape::new(n, k).unwrap()) {
                    let g = gamma_of(&t);
                    assert_eq!(g.mul(&g), g, "gamma not idempotent for {t}");
                }
            }
        }
    }

    #[test]
    fn gamma_single_row_is_full_symmetrizer() {
        let t = HookTableau::standard(3, vec![1]).unwrap();
        let g = gamma_of(&t);
        assert_eq!(g, subgroup_sum(&[1, 2, 3], false).scale(&rat(1, 6)));
        // The full symmetrizer fixes e_1.
        let e1 = elementary_symmetric(&[1, 2, 3], 1);
        assert_eq!(g.act(&e1), e1);
        // For k >= 2 the projector annihilates symmetric polynomials.
        let t2 = HookTableau::standard(3, vec![1, 2]).unwrap();
        assert_eq!(gamma_of(&t2).act(&e1), MultiPoly::zero());
    }

    #[test]
    fn telescoping_factorization_expands_to_subgroup_sum() {
        // X = {1,2}: single factor (1 + (1,2)).
        let factors = telescoping_factorization(&[1, 2], false);
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0], subgroup_sum(&[1, 2], false));

        // X = {1,2,3} signed: (1 - (1,3) - (2,3)) (1 - (1,2)) = [S_3]'.
        let factors = telescoping_factorization(&[1, 2, 3], true);
        let product = factors
            .iter()
            .fold(GroupRingElement::identity([1u32, 2, 3]), |acc, f| {
                acc.mul(f)
            });
        assert_eq!(product, subgroup_sum(&[1, 2, 3], true));
    }

    #[test]
    fn telescoping_factorization_is_order_independent() {
        let sets: [&[u32]; 3] = [&[1, 2, 3, 4], &[4, 2, 1, 3], &[2, 4, 3, 1]];
        for signed in [false, true] {
            for set in sets {
                let product = telescoping_factorization(set, signed)
                    .iter()
                    .fold(GroupRingElement::identity(set.iter().copied()), |acc, f| {
                        acc.mul(f)
                    });
                assert_eq!(product, subgroup_sum(set, signed));
            }
        }
    }

    #[test]
    fn factored_gamma_matches_direct_gamma() {
        for (n, k) in [(3, 2), (4, 3)] {
            for t in standard_hook_tableaux(HookShape::new(n, k).unwrap()) {
                assert_eq!(gamma_hook_factored(&t), gamma_of(&t), "mismatch for {t}");
            }
        }
        // Also holds for a tableau with arbitrary entry labels.
        let d = HookTableau::new(vec![2, 5], vec![2, 7, 9]).unwrap();
        let f_lambda = d.shape().standard_tableau_count();
        assert_eq!(gamma_hook_factored(&d), gamma(&d, f_lambda));
    }

    #[test]
    fn group_ring_element_serializes_with_string_coefficients() {
        let g = GroupRingElement::from_terms(
            [1u32, 2],
            [(Permutation::transposition(1, 2), rat(1, 6))],
        );
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"[{"perm":{"1":2,"2":1},"coeff":"1/6"}]"#);
    }
}
