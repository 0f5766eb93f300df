//! Modular machinery behind `compute_table`: class-multiplication
//! coefficients, simultaneous diagonalization of the class matrices over a
//! prime field F_ℓ with ℓ ≡ 1 (mod exponent), and recovery of exact degrees
//! and character values from the modular central characters.

use crate::arith::{factorize, inv_mod, pow_mod};
use crate::group::{ConjugacyData, FiniteGroup};

/// Smallest prime ℓ ≡ 1 (mod exponent) with ℓ > 2·⌈√|G|⌉. Such a prime is
/// automatically coprime to |G|, so every class size and centralizer order
/// is invertible mod ℓ.
pub fn splitting_prime(exponent: u64, order: usize) -> u64 {
    let isqrt = (order as f64).sqrt().ceil() as u64;
    let mut l = exponent + 1;
    loop {
        if l > 2 * isqrt && crate::arith::is_prime(l) {
            return l;
        }
        l += exponent;
    }
}

/// Dense matrix over F_ℓ.
#[derive(Clone)]
pub struct FpMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
    pub l: u64,
}

impl FpMat {
    pub fn zero(rows: usize, cols: usize, l: u64) -> FpMat {
        FpMat { rows, cols, data: vec![0; rows * cols], l }
    }

    pub fn identity(n: usize, l: u64) -> FpMat {
        let mut m = FpMat::zero(n, n, l);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.l;
    }

    pub fn matmul(&self, other: &FpMat) -> FpMat {
        assert_eq!(self.cols, other.rows);
        let l = self.l as u128;
        let mut out = FpMat::zero(self.rows, other.cols, self.l);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k) as u128;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cell = &mut out.data[i * other.cols + j];
                    *cell = ((*cell as u128 + a * other.at(k, j) as u128) % l) as u64;
                }
            }
        }
        out
    }

    /// Columns of `self` are basis vectors of a subspace invariant under a
    /// map; given `target` with the same column count whose columns are the
    /// images, returns X with self·X = target.
    pub fn solve_in_basis(&self, target: &FpMat) -> FpMat {
        assert_eq!(self.rows, target.rows);
        assert_eq!(self.cols, target.cols);
        let l = self.l;
        let (r, d) = (self.rows, self.cols);
        let mut w = self.clone();
        let mut t = target.clone();
        let mut pivot_row_of_col = vec![usize::MAX; d];
        let mut row = 0usize;
        for col in 0..d {
            let Some(p) = (row..r).find(|&i| w.at(i, col) != 0) else {
                panic!("basis matrix is column-rank deficient");
            };
            for c in 0..d {
                w.data.swap(p * d + c, row * d + c);
                t.data.swap(p * d + c, row * d + c);
            }
            let inv = inv_mod(w.at(row, col), l).unwrap();
            for c in 0..d {
                let wv = (w.at(row, c) as u128 * inv as u128 % l as u128) as u64;
                w.set(row, c, wv);
                let tv = (t.at(row, c) as u128 * inv as u128 % l as u128) as u64;
                t.set(row, c, tv);
            }
            for i in 0..r {
                if i == row {
                    continue;
                }
                let f = w.at(i, col);
                if f == 0 {
                    continue;
                }
                for c in 0..d {
                    let wv = (w.at(i, c) as u128 + (l - f) as u128 * w.at(row, c) as u128)
                        % l as u128;
                    w.set(i, c, wv as u64);
                    let tv = (t.at(i, c) as u128 + (l - f) as u128 * t.at(row, c) as u128)
                        % l as u128;
                    t.set(i, c, tv as u64);
                }
            }
            pivot_row_of_col[col] = row;
            row += 1;
        }
        let mut x = FpMat::zero(d, d, l);
        for j in 0..d {
            for c in 0..d {
                x.set(j, c, t.at(pivot_row_of_col[j], c));
            }
        }
        x
    }

    /// Basis of the kernel as columns.
    pub fn nullspace(&self) -> FpMat {
        let l = self.l;
        let (r, d) = (self.rows, self.cols);
        let mut m = self.clone();
        let mut pivot_col_of_row = Vec::new();
        let mut row = 0usize;
        let mut is_pivot_col = vec![false; d];
        for col in 0..d {
            let Some(p) = (row..r).find(|&i| m.at(i, col) != 0) else {
                continue;
            };
            for c in 0..d {
                m.data.swap(p * d + c, row * d + c);
            }
            let inv = inv_mod(m.at(row, col), l).unwrap();
            for c in 0..d {
                let v = (m.at(row, c) as u128 * inv as u128 % l as u128) as u64;
                m.set(row, c, v);
            }
            for i in 0..r {
                if i == row || m.at(i, col) == 0 {
                    continue;
                }
                let f = m.at(i, col);
                for c in 0..d {
                    let v = (m.at(i, c) as u128 + (l - f) as u128 * m.at(row, c) as u128)
                        % l as u128;
                    m.set(i, c, v as u64);
                }
            }
            pivot_col_of_row.push(col);
            is_pivot_col[col] = true;
            row += 1;
            if row == r {
                break;
            }
        }
        let free: Vec<usize> = (0..d).filter(|&c| !is_pivot_col[c]).collect();
        let mut basis = FpMat::zero(d, free.len(), l);
        for (j, &fc) in free.iter().enumerate() {
            basis.set(fc, j, 1);
            for (i, &pc) in pivot_col_of_row.iter().enumerate() {
                let v = m.at(i, fc);
                if v != 0 {
                    basis.set(pc, j, l - v);
                }
            }
        }
        basis
    }

    /// Monic characteristic polynomial det(xI − M), low degree first.
    pub fn charpoly(&self) -> Vec<u64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let l = self.l;
        if n == 0 {
            return vec![1];
        }
        // similarity reduction to upper Hessenberg form
        let mut h = self.clone();
        for k in 0..n.saturating_sub(2) {
            let Some(p) = ((k + 1)..n).find(|&i| h.at(i, k) != 0) else {
                continue;
            };
            if p != k + 1 {
                for c in 0..n {
                    h.data.swap(p * n + c, (k + 1) * n + c);
                }
                for r in 0..n {
                    h.data.swap(r * n + p, r * n + (k + 1));
                }
            }
            let inv = inv_mod(h.at(k + 1, k), l).unwrap();
            for i in (k + 2)..n {
                let f = (h.at(i, k) as u128 * inv as u128 % l as u128) as u64;
                if f == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = (h.at(i, c) as u128 + (l - f) as u128 * h.at(k + 1, c) as u128)
                        % l as u128;
                    h.set(i, c, v as u64);
                }
                for r in 0..n {
                    let v = (h.at(r, k + 1) as u128 + f as u128 * h.at(r, i) as u128)
                        % l as u128;
                    h.set(r, k + 1, v as u64);
                }
            }
        }
        // p_k(x) = (x − h[k-1][k-1]) p_{k-1}(x)
        //          − Σ_m h[k-1-m][k-1]·(Π_j h[k-j][k-j-1])·p_{k-1-m}(x)
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=n {
            let mut p = poly_mul_linear(&polys[k - 1], h.at(k - 1, k - 1), l);
            let mut subdiag: u128 = 1;
            for m in 1..k {
                subdiag = subdiag * h.at(k - m, k - m - 1) as u128 % l as u128;
                let coeff = h.at(k - 1 - m, k - 1) as u128 * subdiag % l as u128;
                if coeff == 0 {
                    continue;
                }
                for (i, c) in polys[k - 1 - m].iter().enumerate() {
                    let delta = coeff * *c as u128 % l as u128;
                    p[i] = ((p[i] as u128 + l as u128 - delta) % l as u128) as u64;
                }
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }

    /// All roots in F_ℓ by direct evaluation.
    pub fn eigenvalues(&self) -> Vec<u64> {
        let p = self.charpoly();
        let l = self.l;
        let mut out = Vec::new();
        for x in 0..l {
            let mut acc: u128 = 0;
            for &c in p.iter().rev() {
                acc = (acc * x as u128 + c as u128) % l as u128;
            }
            if acc == 0 {
                out.push(x);
            }
        }
        out
    }
}

/// (x − a)·p over F_ℓ.
fn poly_mul_linear(p: &[u64], a: u64, l: u64) -> Vec<u64> {
    let mut out = vec![0u64; p.len() + 1];
    let l128 = l as u128;
    for (i, &c) in p.iter().enumerate() {
        out[i + 1] = ((out[i + 1] as u128 + c as u128) % l128) as u64;
        out[i] = ((out[i] as u128 + (l - a) as u128 * c as u128) % l128) as u64;
    }
    out
}

/// Class matrix B_i with (B_i)_{jk} = a_{ijk}, the number of ways rep_k
/// factors as x·y with x in class i and y in class j.
pub fn class_matrix(g: &FiniteGroup, cd: &ConjugacyData, i: usize, l: u64) -> FpMat {
    let r = cd.num_classes;
    let mut m = FpMat::zero(r, r, l);
    for &x in &cd.members[i] {
        let xinv = g.inv(x as usize);
        for k in 0..r {
            let y = g.mul(xinv, cd.reps[k] as usize);
            let j = cd.class_of[y] as usize;
            let cell = &mut m.data[j * r + k];
            *cell = (*cell + 1) % l;
        }
    }
    m
}

/// Common eigenvectors of all class matrices, each normalized so the
/// identity-class coordinate is 1. These are the modular central
/// characters ω_χ(C_k) = |C_k|·χ(g_k)/χ(1) mod ℓ.
pub fn central_characters(g: &FiniteGroup, cd: &ConjugacyData, l: u64) -> Vec<Vec<u64>> {
    let r = cd.num_classes;
    let mut blocks: Vec<FpMat> = vec![FpMat::identity(r, l)];
    for i in 1..r {
        if blocks.iter().all(|b| b.cols == 1) {
            break;
        }
        let bi = class_matrix(g, cd, i, l);
        let mut next = Vec::with_capacity(blocks.len());
        for w in blocks {
            if w.cols == 1 {
                next.push(w);
                continue;
            }
            let image = bi.matmul(&w);
            let x = w.solve_in_basis(&image);
            let eigen = x.eigenvalues();
            if eigen.len() <= 1 {
                next.push(w);
                continue;
            }
            let mut covered = 0;
            for lam in eigen {
                let mut shifted = x.clone();
                for t in 0..shifted.rows {
                    let v = (shifted.at(t, t) + l - lam) % l;
                    shifted.set(t, t, v);
                }
                let null = shifted.nullspace();
                if null.cols == 0 {
                    continue;
                }
                covered += null.cols;
                next.push(w.matmul(&null));
            }
            assert_eq!(covered, w.cols, "eigenspaces must exhaust the block");
        }
        blocks = next;
    }
    assert!(
        blocks.iter().all(|b| b.cols == 1) && blocks.iter().map(|b| b.cols).sum::<usize>() == r,
        "class matrices failed to split the space into {r} lines"
    );
    blocks
        .into_iter()
        .map(|b| {
            let inv = inv_mod(b.at(0, 0), l).expect("identity coordinate must be a unit");
            (0..r)
                .map(|j| (b.at(j, 0) as u128 * inv as u128 % l as u128) as u64)
                .collect()
        })
        .collect()
}

/// Smallest primitive root modulo the prime ℓ.
pub fn primitive_root(l: u64) -> u64 {
    let phi = l - 1;
    let primes = factorize(phi);
    'outer: for w in 2..l {
        for &(p, _) in &primes {
            if pow_mod(w, phi / p, l) == 1 {
                continue 'outer;
            }
        }
        return w;
    }
    unreachable!("no primitive root below prime {l}")
}
