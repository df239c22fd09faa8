//! Smith normal form of matrices over the principal ideal domain `F_p[t]`.
//!
//! The matrices of interest present `F_p[t]`-modules: `coker(M)` for an
//! `r x c` matrix `M` is `⊕ F_p[t]/(d_i)` plus a free part, where the
//! `d_i` are the elementary divisors computed here. [`mult_matrix`] builds
//! the one matrix this crate actually cares about: multiplication by a
//! polynomial `F` on the free module `F_p[t]{x^i y^j : 0 <= i, j < q}`,
//! i.e. on `F_p[t][x, y]/(x^q, y^q)`, whose cokernel is the Frobenius
//! quotient under study.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::multipoly::MultiPoly;
use crate::unipoly::UniPoly;

/// A dense matrix over `F_p[t]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<UniPoly>,
}

impl PolyMatrix {
    /// The zero matrix of the given shape.
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> PolyMatrix {
        let entries = alloc::vec![UniPoly::zero(field); rows * cols];
        PolyMatrix { field, rows, cols, entries }
    }

    /// Builds a matrix from rows, which must all have the same length.
    pub fn from_rows(field: PrimeField, rows: Vec<Vec<UniPoly>>) -> Result<PolyMatrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::WrongArity { expected: ncols, found: row.len() });
            }
            for e in row {
                assert_eq!(e.field(), field, "entry from a different field");
                entries.push(e);
            }
        }
        Ok(PolyMatrix { field, rows: nrows, cols: ncols, entries })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &UniPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: UniPoly) {
        assert_eq!(value.field(), self.field, "entry from a different field");
        self.entries[i * self.cols + j] = value;
    }
}

/// The outcome of a Smith normal form computation: monic elementary
/// divisors `d_1 | d_2 | ... | d_r` (units included as `1`), and the rank
/// of the free part of the cokernel, `rows - r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryDivisors {
    pub divisors: Vec<UniPoly>,
    pub free_rank: usize,
}

impl ElementaryDivisors {
    /// The largest divisor in the chain, if any entry is nonzero.
    pub fn largest(&self) -> Option<&UniPoly> {
        self.divisors.last()
    }

    /// The divisors that are not units: the actual torsion of the cokernel.
    pub fn torsion(&self) -> Vec<&UniPoly> {
        self.divisors.iter().filter(|d| !d.is_one()).collect()
    }
}

/// Computes the Smith normal form by repeated division: pick the nonzero
/// entry of least degree as pivot, clear its row and column (a division
/// with nonzero remainder strictly shrinks the pivot degree, so this
/// terminates), then force the pivot to divide the remaining block by
/// folding an offending row into the pivot row. The input is not modified.
pub fn smith_normal_form(m: &PolyMatrix) -> ElementaryDivisors {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut divisors: Vec<UniPoly> = Vec::new();
    let mut r = 0;
    while r < rows.min(cols) {
        // Minimal-degree nonzero pivot; row-major scan keeps the first of
        // any ties, so the elimination path is deterministic.
        let mut best: Option<(usize, usize, usize)> = None;
        for i in r..rows {
            for j in r..cols {
                if let Some(d) = a.at(i, j).degree() {
                    if best.map_or(true, |(bd, _, _)| d < bd) {
                        best = Some((d, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        swap_rows(&mut a, r, pi);
        swap_cols(&mut a, r, pj);

        'clear: loop {
            // Clear the pivot column with row operations.
            for i in r + 1..rows {
                if a.at(i, r).is_zero() {
                    continue;
                }
                let (q, rem) = a.at(i, r).div_rem(a.at(r, r)).expect("pivot is nonzero");
                row_sub_scaled(&mut a, i, r, &q);
                if !rem.is_zero() {
                    // The remainder has smaller degree than the pivot:
                    // promote it and start over.
                    swap_rows(&mut a, r, i);
                    continue 'clear;
                }
            }
            // Clear the pivot row with column operations.
            for j in r + 1..cols {
                if a.at(r, j).is_zero() {
                    continue;
                }
                let (q, rem) = a.at(r, j).div_rem(a.at(r, r)).expect("pivot is nonzero");
                col_sub_scaled(&mut a, j, r, &q);
                if !rem.is_zero() {
                    swap_cols(&mut a, r, j);
                    continue 'clear;
                }
            }
            // Column operations may have re-dirtied the pivot column.
            if (r + 1..rows).any(|i| !a.at(i, r).is_zero()) {
                continue 'clear;
            }
            // Divisibility pass: the pivot must divide every remaining
            // entry. Folding an offending row into the pivot row plants a
            // non-multiple in the pivot row; the next clearing pass then
            // shrinks the pivot degree.
            let pivot = a.at(r, r).clone();
            let offender = (r + 1..rows).find(|&i| {
                (r + 1..cols).any(|j| !a.at(i, j).is_multiple_of(&pivot))
            });
            if let Some(i) = offender {
                row_add(&mut a, r, i);
                continue 'clear;
            }
            break;
        }
        let monic = a.at(r, r).monic();
        a.set(r, r, monic.clone());
        divisors.push(monic);
        r += 1;
    }
    debug_assert!(
        divisors.windows(2).all(|w| w[1].is_multiple_of(&w[0])),
        "elementary divisors must form a divisibility chain"
    );
    ElementaryDivisors { divisors, free_rank: rows - r }
}

fn swap_rows(a: &mut PolyMatrix, i: usize, k: usize) {
    if i == k {
        return;
    }
    for j in 0..a.cols {
        a.entries.swap(i * a.cols + j, k * a.cols + j);
    }
}

fn swap_cols(a: &mut PolyMatrix, j: usize, k: usize) {
    if j == k {
        return;
    }
    for i in 0..a.rows {
        a.entries.swap(i * a.cols + j, i * a.cols + k);
    }
}

/// `row_i -= q * row_k`.
fn row_sub_scaled(a: &mut PolyMatrix, i: usize, k: usize, q: &UniPoly) {
    if q.is_zero() {
        return;
    }
    for j in 0..a.cols {
        if !a.at(k, j).is_zero() {
            let v = a.at(i, j).sub(&q.mul(a.at(k, j)));
            a.set(i, j, v);
        }
    }
}

/// `col_j -= q * col_k`.
fn col_sub_scaled(a: &mut PolyMatrix, j: usize, k: usize, q: &UniPoly) {
    if q.is_zero() {
        return;
    }
    for i in 0..a.rows {
        if !a.at(i, k).is_zero() {
            let v = a.at(i, j).sub(&q.mul(a.at(i, k)));
            a.set(i, j, v);
        }
    }
}

/// `row_i += row_k`.
fn row_add(a: &mut PolyMatrix, i: usize, k: usize) {
    for j in 0..a.cols {
        if !a.at(k, j).is_zero() {
            let v = a.at(i, j).add(a.at(k, j));
            a.set(i, j, v);
        }
    }
}

/// The matrix of multiplication by `F` on the free `F_p[t]`-module with
/// basis `x^i y^j`, `0 <= i, j < q`, i.e. on `F_p[t][x, y]/(x^q, y^q)`.
///
/// `F` must live in a ring with exactly three variables (coefficient
/// variable first), and `q` must be a power of the characteristic. Rows and
/// columns are indexed by `(i, j)` in lexicographic order, `(i, j)` at
/// position `i*q + j`; the entry at `((i', j'), (i, j))` is the coefficient
/// polynomial of `x^(i'-i) y^(j'-j)` in `F`. Terms of `F` with `x`- or
/// `y`-exponent at least `q` act as zero and are skipped.
pub fn mult_matrix(f: &MultiPoly, q: u64) -> Result<PolyMatrix> {
    let ring = f.ring();
    if ring.nvars() != 3 {
        return Err(Error::WrongArity { expected: 3, found: ring.nvars() });
    }
    // Same exponent validation as bracket powers: q = p^e, e >= 1.
    MultiPoly::one(ring).frobenius_pow(q)?;
    let q = q as usize;
    let field = ring.field();
    let mut m = PolyMatrix::zero(field, q * q, q * q);
    for (mon, &c) in f.terms().iter().map(|(m, c)| (m, c)) {
        let (k, a, b) = (mon.exp(0) as usize, mon.exp(1) as usize, mon.exp(2) as usize);
        if a >= q || b >= q {
            continue;
        }
        let tk = UniPoly::monomial(field, c, k);
        for i in 0..q - a {
            for j in 0..q - b {
                let row = (i + a) * q + (j + b);
                let col = i * q + j;
                let v = m.at(row, col).add(&tk);
                m.set(row, col, v);
            }
        }
    }
    Ok(m)
}
