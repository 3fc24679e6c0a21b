//! Reduced simplicial homology over a field, by exact ranks of boundary
//! matrices.

use num_bigint::BigInt;

use crate::simplicial::{Face, SimplicialComplex};

/// Dimensions of `H̃_{-1}, H̃_0, H̃_1, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedHomology {
    dims: Vec<usize>,
}

impl ReducedHomology {
    /// `dim H̃_k`, zero outside the stored range.
    pub fn dim(&self, k: isize) -> usize {
        if k < -1 {
            return 0;
        }
        self.dims.get((k + 1) as usize).copied().unwrap_or(0)
    }

    /// Entries for `k = -1, 0, 1, ...`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `sum_k (-1)^k dim H̃_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(j, &d)| if j % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// `sum_k (-1)^k f_k` over `k >= -1`, from face counts.
pub fn reduced_euler_characteristic(k: &SimplicialComplex) -> i64 {
    k.f_vector()
        .iter()
        .enumerate()
        .map(|(j, &f)| if j % 2 == 1 { f as i64 } else { -(f as i64) })
        .sum()
}

/// Boundary matrix from faces of size `s` (columns) to faces of size `s-1`
/// (rows), entries `(-1)^j` for dropping the `j`-th smallest vertex.
fn boundary(rows: &[Face], cols: &[Face]) -> Vec<Vec<i64>> {
    let mut mat = vec![vec![0i64; cols.len()]; rows.len()];
    for (c, f) in cols.iter().enumerate() {
        for (j, v) in f.vertices().into_iter().enumerate() {
            let g = Face(f.0 & !(1 << (v - 1)));
            let r = rows
                .binary_search(&g)
                .expect("complex is closed under subsets");
            mat[r][c] = if j % 2 == 0 { 1 } else { -1 };
        }
    }
    mat
}

/// Reduced homology of `k` with coefficients in the prime field of
/// characteristic `field_char` (rationals when 0).
///
/// The void complex has no homology at all; `{∅}` has `H̃_{-1} = k`.
pub fn reduced_homology_dims(k: &SimplicialComplex, field_char: u32) -> ReducedHomology {
    let Some(dim) = k.dimension() else {
        return ReducedHomology { dims: vec![0] };
    };
    let top = (dim + 1) as usize;
    let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
    for f in k.faces() {
        by_size[f.len()].push(f);
    }
    // faces() is sorted, so every bucket is sorted too

    // ranks[s] = rank of the boundary out of size-s faces, s >= 1
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let mat = boundary(&by_size[s - 1], &by_size[s]);
        ranks[s] = rank(mat, field_char);
    }
    let dims = (0..=top)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect();
    ReducedHomology { dims }
}

/// Exact rank over `Q` (when `p = 0`) or `F_p`.
pub fn rank(mat: Vec<Vec<i64>>, p: u32) -> usize {
    if mat.is_empty() || mat[0].is_empty() {
        return 0;
    }
    if p == 0 {
        let m: Vec<Vec<i128>> = mat
            .iter()
            .map(|r| r.iter().map(|&x| i128::from(x)).collect())
            .collect();
        match bareiss_rank_i128(m) {
            Some(r) => r,
            None => bareiss_rank_big(
                mat.into_iter()
                    .map(|r| r.into_iter().map(BigInt::from).collect())
                    .collect(),
            ),
        }
    } else {
        rank_mod_p(mat, u64::from(p))
    }
}

/// Fraction-free elimination; `None` on overflow.
fn bareiss_rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let (rows, cols) = (m.len(), m[0].len());
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let v = m[r][c]
                    .checked_mul(m[i][j])?
                    .checked_sub(m[i][c].checked_mul(m[r][j])?)?;
                m[i][j] = v / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
        if r == rows {
            break;
        }
    }
    Some(r)
}

fn bareiss_rank_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let (rows, cols) = (m.len(), m[0].len());
    let zero = BigInt::from(0);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != zero) else {
            continue;
        };
        m.swap(r, piv);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = zero.clone();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn rank_mod_p(mat: Vec<Vec<i64>>, p: u64) -> usize {
    let pi = p as i64;
    let mut m: Vec<Vec<u64>> = mat
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.rem_euclid(pi) as u64).collect())
        .collect();
    let (rows, cols) = (m.len(), m[0].len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = mod_pow(m[r][c], p - 2, p);
        for x in &mut m[r][c..] {
            *x = *x * inv % p;
        }
        let (top, below) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in below {
            let factor = row[c];
            if factor == 0 {
                continue;
            }
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = (*x + (p - factor) * y) % p;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}
