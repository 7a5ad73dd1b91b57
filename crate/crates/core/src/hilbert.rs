//! Graded dimension bookkeeping: the closed-form Hilbert polynomial of a
//! hook component, the strict-partition counting form, the counting
//! recurrences, and the full-ring Hilbert series summed over all shapes.

use crate::combinatorics::{cell_stats, count_p, Cell, Partition};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in `t` with nonnegative integer coefficients, recording the
/// dimensions of graded slices. Evaluation at `t = 1` is the total dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPoly {
    coeffs: BTreeMap<usize, u64>,
}

impl HilbertPoly {
    pub fn zero() -> Self {
        HilbertPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(degree: usize, coeff: u64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(degree, coeff);
        }
        HilbertPoly { coeffs }
    }

    fn from_int_poly(p: &IntPoly) -> Self {
        let mut coeffs = BTreeMap::new();
        for (d, &c) in p.0.iter().enumerate() {
            assert!(c >= 0, "graded dimension must be nonnegative");
            if c != 0 {
                coeffs.insert(d, c as u64);
            }
        }
        HilbertPoly { coeffs }
    }

    pub fn coeff(&self, degree: usize) -> u64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    /// Smallest degree with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Total dimension: the value at `t = 1`.
    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn add(&self, other: &HilbertPoly) -> HilbertPoly {
        let mut coeffs = self.coeffs.clone();
        for (&d, &c) in &other.coeffs {
            *coeffs.entry(d).or_insert(0) += c;
        }
        HilbertPoly { coeffs }
    }

    pub fn scale(&self, factor: u64) -> HilbertPoly {
        if factor == 0 {
            return HilbertPoly::zero();
        }
        HilbertPoly {
            coeffs: self.coeffs.iter().map(|(&d, &c)| (d, c * factor)).collect(),
        }
    }

    /// The dense coefficient list starting at [`Self::min_degree`].
    pub fn dense_coeffs(&self) -> Vec<u64> {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|d| self.coeff(d)).collect(),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for HilbertPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (&d, &c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (c, d) {
                (_, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "t^{d}")?,
                (_, 1) => write!(f, "{c}·t")?,
                (_, _) => write!(f, "{c}·t^{d}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for HilbertPoly {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            offset: usize,
            coeffs: Vec<u64>,
        }
        Repr {
            offset: self.min_degree().unwrap_or(0),
            coeffs: self.dense_coeffs(),
        }
        .serialize(serializer)
    }
}

/// Dense integer polynomial in `t`, used internally so that the
/// `(1 - t^a)` factors can be multiplied out and divided exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IntPoly(Vec<i64>);

impl IntPoly {
    fn one() -> Self {
        IntPoly(vec![1])
    }

    fn one_minus_t_pow(a: usize) -> Self {
        assert!(a >= 1);
        let mut coeffs = vec![0i64; a + 1];
        coeffs[0] = 1;
        coeffs[a] = -1;
        IntPoly(coeffs)
    }

    fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly(out)
    }

    /// Exact division by `1 - t^a`; panics when a remainder is left, which
    /// would indicate an internal error rather than bad input.
    fn div_one_minus_t_pow(&self, a: usize) -> IntPoly {
        // (1 - t^a) q = p  <=>  q_i = p_i + q_(i-a).
        let deg = self.0.len().saturating_sub(1);
        assert!(deg >= a, "quotient degree underflow");
        let qdeg = deg - a;
        let mut q = vec![0i64; qdeg + 1];
        for i in 0..=qdeg {
            let prev = if i >= a { q[i - a] } else { 0 };
            q[i] = self.0[i] + prev;
        }
        let check = IntPoly(q.clone()).mul(&IntPoly::one_minus_t_pow(a));
        assert_eq!(check.0, self.0, "non-exact division by 1 - t^{a}");
        IntPoly(q)
    }

    fn shift(&self, offset: usize) -> IntPoly {
        let mut out = vec![0i64; offset];
        out.extend_from_slice(&self.0);
        IntPoly(out)
    }
}

/// Multiplies the factors `(1 - t^a)` for `a` in `numerators` and divides by
/// the factors for `a` in `denominators`, cancelling equal factors first.
/// Every division stays exact because the denominator factors literally
/// divide the running numerator product.
fn cyclotomic_quotient(numerators: Vec<usize>, mut denominators: Vec<usize>) -> IntPoly {
    denominators.sort_unstable();
    let mut keep_num = Vec::new();
    'outer: for a in numerators {
        for i in 0..denominators.len() {
            if denominators[i] == a {
                denominators.remove(i);
                continue 'outer;
            }
        }
        keep_num.push(a);
    }
    let mut acc = IntPoly::one();
    for a in keep_num {
        acc = acc.mul(&IntPoly::one_minus_t_pow(a));
    }
    for a in denominators {
        acc = acc.div_one_minus_t_pow(a);
    }
    acc
}

/// The Hilbert polynomial of the hook component for `(n, k, m)` in closed
/// form: `t^((k-1)nm + k(k-1)/2) * prod_(s=1..k-1) (1 - t^(n-s)) / (1 - t^s)`,
/// a shifted Gaussian binomial. For `k = 1` it is the constant 1.
pub fn hilbert_gamma(n: usize, k: usize, m: usize) -> HilbertPoly {
    assert!(k >= 1 && k <= n, "need 1 <= k <= n");
    if k == 1 {
        return HilbertPoly::monomial(0, 1);
    }
    let offset = (k - 1) * n * m + k * (k - 1) / 2;
    let numerators: Vec<usize> = (1..k).map(|s| n - s).collect();
    let denominators: Vec<usize> = (1..k).collect();
    let gauss = cyclotomic_quotient(numerators, denominators);
    HilbertPoly::from_int_poly(&gauss.shift(offset))
}

/// The same Hilbert polynomial built from strict-partition counting:
/// `t^((k-1)nm + k(k-1)/2) * sum_s p(s + (k-1)(k-2)/2; n-2; k-1) t^s`.
pub fn hilbert_from_counting(n: usize, k: usize, m: usize) -> HilbertPoly {
    assert!(k >= 1 && k <= n, "need 1 <= k <= n");
    if k == 1 {
        return HilbertPoly::monomial(0, 1);
    }
    let offset = (k - 1) * n * m + k * (k - 1) / 2;
    let shift = ((k - 1) * (k - 2) / 2) as u32;
    let mut acc = HilbertPoly::zero();
    for s in 0..=(k - 1) * (n - k) {
        let count = count_p(s as u32 + shift, n as u32 - 2, k - 1);
        acc = acc.add(&HilbertPoly::monomial(offset + s, count));
    }
    acc
}

/// The Hilbert polynomial of the full graded quotient: the sum over all
/// partitions `lambda` of `n` of `f_lambda` times the per-component
/// polynomial computed from the cell statistics, with
/// `w(i,j;m) = m(l(i,j) - a(i,j)) + l(i,j)` contributing once per cell.
pub fn hilbert_full(n: usize, m: usize) -> HilbertPoly {
    let mut acc = HilbertPoly::zero();
    for lambda in Partition::partitions_of(n as u32) {
        acc = acc.add(&hilbert_component(n, m, &lambda).1);
    }
    acc
}

/// The per-shape contribution to [`hilbert_full`]: returns
/// `(f_lambda, f_lambda * H(component))`, where the component polynomial is
/// `t^(m n(n-1)/2 + sum w(i,j;m)) * prod_(l=1..n)(1-t^l) / prod_cells (1-t^h)`.
pub fn hilbert_component(n: usize, m: usize, lambda: &Partition) -> (u64, HilbertPoly) {
    let cells: Vec<Cell> = lambda.cells();
    let mut exponent: i64 = (m * n * (n - 1) / 2) as i64;
    let mut hooks = Vec::with_capacity(cells.len());
    for &cell in &cells {
        let (arm, leg, hook) = cell_stats(lambda, cell).expect("cell inside diagram");
        exponent += (m as i64) * (leg as i64 - arm as i64) + leg as i64;
        hooks.push(hook);
    }
    assert!(exponent >= 0, "grading offset must be nonnegative");
    let factorial: u64 = (1..=n as u64).product();
    let hook_product: u64 = hooks.iter().map(|&h| h as u64).product();
    assert_eq!(factorial % hook_product, 0);
    let f_lambda = factorial / hook_product;
    let quotient = cyclotomic_quotient((1..=n).collect(), hooks);
    let component = HilbertPoly::from_int_poly(&quotient.shift(exponent as usize));
    (f_lambda, component.scale(f_lambda))
}

/// Report for the exhaustive verification of the three counting recurrences.
#[derive(Clone, Debug, Serialize)]
pub struct RecurrenceReport {
    pub cells: Vec<RecurrenceCell>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecurrenceCell {
    pub n: usize,
    pub k: usize,
    pub identity: u8,
    pub pass: bool,
}

/// Exhaustively checks, for `3 <= k <= k_max` and `k <= n <= n_max`, the
/// three identities of the shifted counting function
/// `p[l,t,u] = p(l + u(u-1)/2; t; u)`:
///
/// 1. `p[l,n-3,k-1] = p[l,n-2,k-1]` for `0 <= l <= n-k-1`;
/// 2. `p[l,n-2,k-1] = p[l,n-3,k-1] + p[l+k-n,n-3,k-2]` for `l >= n-k`;
/// 3. `p[(k-1)(n-k)-l,n-2,k-1] = p[(k-2)(n-k)-l,n-3,k-2]` for `0 <= l <= k-2`.
pub fn verify_p_recurrences(n_max: usize, k_max: usize) -> RecurrenceReport {
    assert!(n_max >= 3 && k_max >= 3, "bounds must be at least 3");
    let p_shift = |l: i64, t: i64, u: i64| -> u64 {
        let shift = u * (u - 1) / 2;
        let s = l + shift;
        if s < 0 || t < 0 || u < 0 {
            return 0;
        }
        count_p(s as u32, t as u32, u as usize)
    };
    let mut cells = Vec::new();
    for k in 3..=k_max {
        for n in k..=n_max {
            let (n_i, k_i) = (n as i64, k as i64);
            let top = (k_i - 1) * (n_i - k_i);

            let id1 = (0..=n_i - k_i - 1)
                .all(|l| p_shift(l, n_i - 3, k_i - 1) == p_shift(l, n_i - 2, k_i - 1));
            cells.push(RecurrenceCell {
                n,
                k,
                identity: 1,
                pass: id1,
            });

            let id2 = (n_i - k_i..=top).all(|l| {
                p_shift(l, n_i - 2, k_i - 1)
                    == p_shift(l, n_i - 3, k_i - 1) + p_shift(l + k_i - n_i, n_i - 3, k_i - 2)
            });
            cells.push(RecurrenceCell {
                n,
                k,
                identity: 2,
                pass: id2,
            });

            let id3 = (0..=k_i - 2).all(|l| {
                p_shift(top - l, n_i - 2, k_i - 1)
                    == p_shift((k_i - 2) * (n_i - k_i) - l, n_i - 3, k_i - 2)
            });
            cells.push(RecurrenceCell {
                n,
                k,
                identity: 3,
                pass: id3,
            });
        }
    }
    let pass = cells.iter().all(|c| c.pass);
    RecurrenceReport { cells, pass }
}

/// The classical coinvariant Hilbert polynomial
/// `prod_(l=1..n) (1 + t + ... + t^(l-1))`, convolved directly; an
/// independent cross-check for `hilbert_full(n, 0)`.
pub fn coinvariant_hilbert(n: usize) -> HilbertPoly {
    let mut acc = IntPoly::one();
    for l in 1..=n {
        let ones = IntPoly(vec![1i64; l]);
        acc = acc.mul(&ones);
    }
    HilbertPoly::from_int_poly(&acc)
}
