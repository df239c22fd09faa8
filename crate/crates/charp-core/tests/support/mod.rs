//! Brute-force oracles shared by the test binaries. Everything here is
//! deliberately naive — dense enumeration, Laplace expansion, textbook
//! Gaussian elimination — so that it shares no code path with the
//! implementation under test.

// Each test binary compiles this module separately and uses a subset.
#![allow(dead_code)]

use std::collections::BTreeMap;

use charp_core::{Monomial, MultiPoly, PolyMatrix, PrimeField, UniPoly};

/// Decides by brute force whether `f` is a combination `sum h_i g_i` with
/// every cofactor of total degree at most `bound`: sets up the linear
/// system over F_p whose unknowns are the cofactor coefficients and runs
/// Gaussian elimination. For homogeneous generators this bound loses
/// nothing when `bound >= deg f`, so the answer equals ideal membership.
pub fn bounded_combination_exists(f: &MultiPoly, gens: &[MultiPoly], bound: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    let field = f.field();
    assert_eq!(f.ring().nvars(), 3, "oracle is written for the three-variable ring");

    // All cofactor monomials of degree <= bound.
    let mut cofactors: Vec<Monomial> = Vec::new();
    for d in 0..=bound {
        for a in 0..=d {
            for b in 0..=(d - a) {
                cofactors.push(Monomial::from_exps(&[a, b, d - a - b]));
            }
        }
    }

    // Row space: every monomial that can appear in f or in m * g_i.
    let mut row_of: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let index = |m: &Monomial, table: &mut BTreeMap<Vec<u32>, usize>| {
        let next = table.len();
        *table.entry(m.exps().to_vec()).or_insert(next)
    };
    let mut columns: Vec<Vec<(usize, u64)>> = Vec::new();
    for g in gens {
        for m in &cofactors {
            let product = g.mul_term(m, 1);
            let mut col = Vec::new();
            for (mon, c) in product.terms() {
                col.push((index(mon, &mut row_of), *c));
            }
            columns.push(col);
        }
    }
    let mut target: Vec<(usize, u64)> = Vec::new();
    for (mon, c) in f.terms() {
        target.push((index(mon, &mut row_of), *c));
    }

    // Dense augmented matrix, rows = monomials, last column = f.
    let nrows = row_of.len();
    let ncols = columns.len();
    let mut matrix = vec![vec![0u64; ncols + 1]; nrows];
    for (j, col) in columns.iter().enumerate() {
        for &(i, c) in col {
            matrix[i][j] = c;
        }
    }
    for &(i, c) in &target {
        matrix[i][ncols] = c;
    }

    // Forward elimination; solvable iff no pivot lands in the last column.
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(found) = (pivot_row..nrows).find(|&r| matrix[r][col] != 0) else {
            continue;
        };
        matrix.swap(pivot_row, found);
        let inv = field.inv(matrix[pivot_row][col]);
        for j in col..=ncols {
            matrix[pivot_row][j] = field.mul(matrix[pivot_row][j], inv);
        }
        for r in 0..nrows {
            if r != pivot_row && matrix[r][col] != 0 {
                let factor = matrix[r][col];
                for j in col..=ncols {
                    let delta = field.mul(factor, matrix[pivot_row][j]);
                    matrix[r][j] = field.sub(matrix[r][j], delta);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    !matrix
        .iter()
        .any(|row| row[..ncols].iter().all(|&c| c == 0) && row[ncols] != 0)
}

/// Determinant by Laplace expansion along the first row.
pub fn determinant(field: PrimeField, m: &[Vec<UniPoly>]) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one(field);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = UniPoly::zero(field);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<UniPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let cofactor = entry.mul(&determinant(field, &minor));
        acc = if j % 2 == 0 { acc.add(&cofactor) } else { acc.sub(&cofactor) };
    }
    acc
}

/// All k-element subsets of {0, .., n-1}, via bitmask enumeration.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

/// Monic gcd of all k x k minors; zero when every minor vanishes.
pub fn minor_gcd(field: PrimeField, m: &PolyMatrix, k: usize) -> UniPoly {
    let mut acc = UniPoly::zero(field);
    for rows in subsets(m.rows(), k) {
        for cols in subsets(m.cols(), k) {
            let sub: Vec<Vec<UniPoly>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| m.at(r, c).clone()).collect())
                .collect();
            acc = acc.gcd(&determinant(field, &sub));
        }
    }
    acc.monic()
}
