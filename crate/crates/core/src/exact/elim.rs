//! Exact Gaussian elimination over ℚ(i).
//!
//! Three routes to the same reduced row echelon form:
//!
//! * [`Echelon`]: incremental sparse elimination, used for everything large;
//! * [`rref_bareiss`]: dense fraction-free elimination over ℤ\[i\] followed
//!   by a single rational normalization, used below [`DENSE_CUTOFF`] columns;
//! * [`rref_naive`]: textbook dense rational Gauss–Jordan, kept as a
//!   reference implementation for cross-checking.
//!
//! The RREF of a row space is unique, so all three agree exactly whenever
//! they are correct.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::GaussianRational;

/// Sparse row: strictly increasing column indices, no zero values.
pub type SparseRow = Vec<(usize, GaussianRational)>;

/// Below this many columns [`rref`] takes the dense fraction-free route.
pub const DENSE_CUTOFF: usize = 64;

/// Reduced row echelon form: rows sorted by pivot column, each pivot equal
/// to one and the only nonzero entry of its column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub ncols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseRow>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Null space basis: one vector per free column `f`, with `x_f = 1`,
    /// zero on the other free columns.
    pub fn kernel(&self) -> Vec<SparseRow> {
        let free = self.free_columns();
        let mut by_free: BTreeMap<usize, SparseRow> =
            free.iter().map(|&f| (f, vec![(f, GaussianRational::one())])).collect();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (c, v) in row.iter().skip(1) {
                by_free.get_mut(c).expect("non-pivot entry").push((p, -v));
            }
        }
        by_free
            .into_values()
            .map(|mut v| {
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }
}

/// Incrementally built row echelon form.
///
/// Each stored row has leading coefficient one, and no two rows share a
/// leading column. Rows are not reduced against each other until
/// [`Echelon::into_rref`].
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the stored pivots. The remainder is zero iff the
    /// row lies in the current span.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut i = 0;
        while i < row.len() {
            let col = row[i].0;
            match self.pivot_row[col] {
                Some(r) => {
                    let c = row[i].1.clone();
                    row = axpy(&row, &(-c), &self.rows[r]);
                }
                None => i += 1,
            }
        }
        row
    }

    /// Insert a row; returns `true` when it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols));
        let mut r = self.reduce(row);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.inv().expect("nonzero lead");
        for e in r.iter_mut() {
            e.1 = &e.1 * &inv;
        }
        self.pivot_row[r[0].0] = Some(self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        p.sort_unstable();
        p
    }

    /// Back-substitute to the unique reduced form.
    pub fn into_rref(self) -> Rref {
        let ncols = self.ncols;
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        let mut pivot_row = vec![None; ncols];
        for (i, r) in rows.iter().enumerate() {
            pivot_row[r[0].0] = Some(i);
        }
        // Walk upward so that every row used for reduction is already reduced.
        for i in (0..rows.len()).rev() {
            let mut row = std::mem::take(&mut rows[i]);
            let mut j = 1;
            while j < row.len() {
                let col = row[j].0;
                match pivot_row[col] {
                    Some(r) if r != i => {
                        let c = row[j].1.clone();
                        row = axpy(&row, &(-c), &rows[r]);
                    }
                    _ => j += 1,
                }
            }
            rows[i] = row;
        }
        let pivots = rows.iter().map(|r| r[0].0).collect();
        Rref { ncols, pivots, rows }
    }
}

/// `a + c·b` for sorted sparse rows.
pub fn axpy(a: &SparseRow, c: &GaussianRational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((cb, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// RREF of the given rows through sparse incremental elimination.
pub fn rref_sparse(rows: &[SparseRow], ncols: usize) -> Rref {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r.clone());
    }
    e.into_rref()
}

/// RREF, choosing the dense fraction-free route for narrow matrices.
pub fn rref(rows: &[SparseRow], ncols: usize) -> Rref {
    if ncols < DENSE_CUTOFF && rows.len() <= 4 * DENSE_CUTOFF {
        let dense: Vec<Vec<GaussianRational>> = rows.iter().map(|r| densify(r, ncols)).collect();
        rref_bareiss(&dense, ncols)
    } else {
        rref_sparse(rows, ncols)
    }
}

pub fn densify(row: &SparseRow, ncols: usize) -> Vec<GaussianRational> {
    let mut v = vec![GaussianRational::zero(); ncols];
    for (c, x) in row {
        v[*c] = x.clone();
    }
    v
}

pub fn sparsify(row: &[GaussianRational]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

/// Dense Gauss–Jordan over ℚ(i), the reference route.
pub fn rref_naive(rows: &[Vec<GaussianRational>], ncols: usize) -> Rref {
    let mut m: Vec<Vec<GaussianRational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..ncols {
                    let d = &f * &m[r][j];
                    m[i][j] -= &d;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let rows = m.iter().take(r).map(|v| sparsify(v)).collect();
    Rref { ncols, pivots, rows }
}

/// Gaussian integer used inside the fraction-free route.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn zero() -> Self {
        Self {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn one() -> Self {
        Self {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &Self) -> Self {
        Self {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    /// Division known to be exact in ℤ\[i\].
    fn div_exact(&self, d: &Self) -> Self {
        let n = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        let (qr, rr) = re.div_rem(&n);
        let (qi, ri) = im.div_rem(&n);
        debug_assert!(rr.is_zero() && ri.is_zero(), "Bareiss division not exact");
        Self { re: qr, im: qi }
    }

    fn to_rational(&self) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
}

/// Scale a rational row to ℤ\[i\] by the lcm of its denominators.
fn integral_row(row: &[GaussianRational]) -> Vec<GaussInt> {
    let mut l = BigInt::one();
    for x in row {
        if !x.is_zero() {
            l = l.lcm(&x.denom_lcm());
        }
    }
    row.iter()
        .map(|x| {
            let y = x.scale_int(&l);
            GaussInt {
                re: y.re().to_integer(),
                im: y.im().to_integer(),
            }
        })
        .collect()
}

/// Fraction-free elimination over ℤ\[i\] followed by rational
/// normalization and back-substitution.
pub fn rref_bareiss(rows: &[Vec<GaussianRational>], ncols: usize) -> Rref {
    let mut m: Vec<Vec<GaussInt>> = rows.iter().map(|r| integral_row(r)).collect();
    let mut prev = GaussInt::one();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..ncols {
                let v = piv.mul(&row[j]).sub(&lead.mul(&pivot_row[j]));
                row[j] = v.div_exact(&prev);
            }
            row[col] = GaussInt::zero();
        }
        prev = piv;
        r += 1;
    }
    let mut e = Echelon::new(ncols);
    for row in m.iter().take(r) {
        let q: Vec<GaussianRational> = row.iter().map(GaussInt::to_rational).collect();
        let inserted = e.insert(sparsify(&q));
        debug_assert!(inserted);
    }
    e.into_rref()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_parts(a, b)
    }

    #[test]
    fn rank_one_complex() {
        let rows = vec![vec![g(1, 0), g(0, 1)], vec![g(0, 1), g(-1, 0)]];
        for rr in [
            rref_naive(&rows, 2),
            rref_bareiss(&rows, 2),
            rref_sparse(&rows.iter().map(|r| sparsify(r)).collect::<Vec<_>>(), 2),
        ] {
            assert_eq!(rr.rank(), 1);
            let k = rr.kernel();
            assert_eq!(k, vec![vec![(0, g(0, -1)), (1, g(1, 0))]]);
        }
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<GaussianRational>>> {
        // Mostly zeros so that rank deficiency actually occurs.
        let entry = prop_oneof![
            6 => Just(GaussianRational::zero()),
            3 => (-3i64..4, -3i64..4).prop_map(|(a, b)| g(a, b)),
            1 => (-5i64..6, 1i64..5, -5i64..6, 1i64..5)
                .prop_map(|(a, b, c, d)| GaussianRational::from_ratios((a, b), (c, d))),
        ];
        proptest::collection::vec(proptest::collection::vec(entry, cols), rows)
    }

    fn transpose(m: &[Vec<GaussianRational>], cols: usize) -> Vec<Vec<GaussianRational>> {
        (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn three_routes_agree(m in small_matrix(10, 10)) {
            let naive = rref_naive(&m, 10);
            let bareiss = rref_bareiss(&m, 10);
            let sparse = rref_sparse(&m.iter().map(|r| sparsify(r)).collect::<Vec<_>>(), 10);
            prop_assert_eq!(&naive, &bareiss);
            prop_assert_eq!(&naive, &sparse);
        }

        #[test]
        fn rank_of_transpose(m in small_matrix(7, 10)) {
            let a = rref_naive(&m, 10).rank();
            let b = rref_naive(&transpose(&m, 10), 7).rank();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn kernel_vectors_vanish(m in small_matrix(6, 9)) {
            let rows: Vec<SparseRow> = m.iter().map(|r| sparsify(r)).collect();
            let rr = rref(&rows, 9);
            let k = rr.kernel();
            prop_assert_eq!(rr.rank() + k.len(), 9);
            for v in &k {
                for r in &m {
                    let s: GaussianRational = v.iter().map(|(c, x)| &r[*c] * x).sum();
                    prop_assert!(s.is_zero());
                }
            }
        }
    }
}
