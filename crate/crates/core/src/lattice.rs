//! Integer lattice utilities: Smith normal form, kernels of integer rows,
//! exact solves, and invariant-factor bookkeeping for finite abelian groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Diagonal of the Smith normal form of `m` (length `min(rows, cols)`),
/// each entry nonnegative and dividing the next.
pub fn smith_diagonal(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut diag = Vec::with_capacity(rows.min(cols));
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_entry(&a, t) else {
                // Remaining block is zero.
                diag.extend(std::iter::repeat_n(BigInt::zero(), rows.min(cols) - t));
                return diag;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            if reduce_cross(&mut a, t) {
                continue;
            }
            // Pivot now alone in its row and column; enforce divisibility.
            let p = a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let src = a[i].clone();
                    for (dst, v) in a[t].iter_mut().zip(src).skip(t) {
                        *dst += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Clears row and column `t` against the pivot; true if a nonzero remainder
/// was left behind (so a smaller pivot exists).
fn reduce_cross(a: &mut [Vec<BigInt>], t: usize) -> bool {
    let p = a[t][t].clone();
    let mut dirty = false;
    for i in t + 1..a.len() {
        let q = a[i][t].div_floor(&p);
        if !q.is_zero() {
            for j in t..a[i].len() {
                let v = &q * &a[t][j];
                a[i][j] -= v;
            }
        }
        dirty |= !a[i][t].is_zero();
    }
    for j in t + 1..a[t].len() {
        let q = a[t][j].div_floor(&p);
        if !q.is_zero() {
            for row in a.iter_mut().skip(t) {
                let v = &q * &row[t];
                row[j] -= v;
            }
        }
        dirty |= !a[t][j].is_zero();
    }
    dirty
}

/// Basis of `{x ∈ ℤ^m : Σ a_i x_i = 0}` via unimodular column operations.
pub fn kernel_of_row(a: &[BigInt]) -> Vec<Vec<BigInt>> {
    let m = a.len();
    let mut v: Vec<BigInt> = a.to_vec();
    // Columns of `u` track the operations: v = a · u at all times.
    let mut u: Vec<Vec<BigInt>> = (0..m)
        .map(|c| {
            (0..m)
                .map(|r| {
                    if r == c {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    loop {
        let nonzero: Vec<usize> = (0..m).filter(|&i| !v[i].is_zero()).collect();
        if nonzero.len() <= 1 {
            return (0..m)
                .filter(|&i| v[i].is_zero())
                .map(|i| u[i].clone())
                .collect();
        }
        let p = *nonzero
            .iter()
            .min_by_key(|&&i| v[i].abs())
            .expect("nonempty");
        for &i in &nonzero {
            if i == p {
                continue;
            }
            let q = v[i].div_floor(&v[p]);
            let vp = v[p].clone();
            v[i] -= &q * vp;
            let up = u[p].clone();
            for (x, y) in u[i].iter_mut().zip(up) {
                *x -= &q * y;
            }
        }
    }
}

/// Solves `B x = y` for square nonsingular `B` given as columns.
pub fn solve_columns(columns: &[Vec<BigInt>], y: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = columns.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            let mut row: Vec<BigRational> = columns
                .iter()
                .map(|c| BigRational::from(c[r].clone()))
                .collect();
            row.push(BigRational::from(y[r].clone()));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot_row = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

/// Invariant factors (each > 1, each dividing the next) of
/// `⊕ ℤ/c_i` for the given cyclic orders.
pub fn invariant_factors_of_product(orders: &[BigInt]) -> Vec<BigInt> {
    let diag: Vec<Vec<BigInt>> = orders
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut row = vec![BigInt::zero(); orders.len()];
            row[i] = c.clone();
            row
        })
        .collect();
    smith_diagonal(&diag)
        .into_iter()
        .filter(|x| !x.is_one())
        .collect()
}
