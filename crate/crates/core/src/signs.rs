//! Sign matrices. Even orders are tiled from `S2 = [[+1,-1],[-1,+1]]`;
//! odd orders border a doubled-diagonal even matrix so every line sums to 0.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::SignError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    fn zeros(order: usize) -> Self {
        SignMatrix { order, entries: vec![0; order * order] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// 1-based access, matching how the builders index guides.
    pub fn get(&self, j: usize, k: usize) -> i8 {
        self.entries[(j - 1) * self.order + (k - 1)]
    }

    fn set(&mut self, j: usize, k: usize, v: i8) {
        self.entries[(j - 1) * self.order + (k - 1)] = v;
    }

    /// Copies `tile` (scaled by `sign`) with its top-left corner at `(j, k)`.
    fn put(&mut self, j: usize, k: usize, tile: &SignMatrix, sign: i8) {
        for a in 1..=tile.order {
            for b in 1..=tile.order {
                self.set(j + a - 1, k + b - 1, sign * tile.get(a, b));
            }
        }
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.order).map(|c| c.to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<i8> {
        (1..=self.order).map(|j| self.get(j, j)).collect()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.entries.chunks(self.order).map(|c| c.iter().map(|&x| x as i64).sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (1..=self.order).map(|k| (1..=self.order).map(|j| self.get(j, k) as i64).sum()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.order).all(|j| (1..=self.order).all(|k| self.get(j, k) == self.get(k, j)))
    }

    /// Border an even matrix whose diagonal has already been doubled: row `j`
    /// of the new column gets the opposite sign of diagonal entry `j`, and
    /// the corner absorbs what is left.
    fn bordered(inner: &SignMatrix) -> SignMatrix {
        let n = inner.order + 1;
        let mut out = SignMatrix::zeros(n);
        out.put(1, 1, inner, 1);
        let mut corner = 0i64;
        for j in 1..n {
            let v = -inner.get(j, j).signum();
            out.set(j, n, v);
            out.set(n, j, v);
            corner -= v as i64;
        }
        out.set(n, n, corner as i8);
        out
    }

    fn doubled_diagonal(mut self) -> SignMatrix {
        for j in 1..=self.order {
            let v = self.get(j, j);
            self.set(j, j, 2 * v);
        }
        self
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:+}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn s2() -> SignMatrix {
    SignMatrix { order: 2, entries: vec![1, -1, -1, 1] }
}

fn s4() -> SignMatrix {
    let mut m = SignMatrix::zeros(4);
    let t = s2();
    m.put(1, 1, &t, 1);
    m.put(1, 3, &t, 1);
    m.put(3, 1, &t, 1);
    m.put(3, 3, &t, -1);
    m
}

/// `S4` variant with every 2x2 tile equal to `S2`, so its diagonal is all `+1`.
fn s4_prime() -> SignMatrix {
    let mut m = SignMatrix::zeros(4);
    let t = s2();
    for (j, k) in [(1, 1), (1, 3), (3, 1), (3, 3)] {
        m.put(j, k, &t, 1);
    }
    m
}

pub fn sign_even(n: usize) -> Result<SignMatrix, SignError> {
    if n < 2 || n % 2 == 1 {
        return Err(SignError::InvalidOrder { order: n });
    }
    let mut m = SignMatrix::zeros(n);
    let quad = n - n % 4;
    let (t4, t2) = (s4(), s2());
    for j in (1..=quad).step_by(4) {
        for k in (1..=quad).step_by(4) {
            m.put(j, k, &t4, 1);
        }
    }
    if n % 4 == 2 {
        // border of S2 tiles, corner included
        for j in (1..=n).step_by(2) {
            m.put(j, n - 1, &t2, 1);
            m.put(n - 1, j, &t2, 1);
        }
    }
    Ok(m)
}

pub fn sign_4k3(n: usize) -> Result<SignMatrix, SignError> {
    if n < 3 || n % 4 != 3 {
        return Err(SignError::InvalidOrder { order: n });
    }
    let inner = sign_even(n - 1)?.doubled_diagonal();
    Ok(SignMatrix::bordered(&inner))
}

/// `S'_{4k}`: `S'_4` tiles everywhere except the diagonal tiles after the
/// first, which are `S4`.
fn sign_prime(n: usize) -> SignMatrix {
    let mut m = SignMatrix::zeros(n);
    let (p, t4) = (s4_prime(), s4());
    for j in (1..=n).step_by(4) {
        for k in (1..=n).step_by(4) {
            let tile = if j == k && j > 1 { &t4 } else { &p };
            m.put(j, k, tile, 1);
        }
    }
    m
}

pub fn sign_4k1(n: usize) -> Result<SignMatrix, SignError> {
    if n < 5 || n % 4 != 1 {
        return Err(SignError::InvalidOrder { order: n });
    }
    let inner = sign_prime(n - 1).doubled_diagonal();
    Ok(SignMatrix::bordered(&inner))
}

/// The odd-order sign matrix used by the clique bounds.
pub fn sign_odd(n: usize) -> Result<SignMatrix, SignError> {
    match n % 4 {
        3 => sign_4k3(n),
        1 => sign_4k1(n),
        _ => Err(SignError::InvalidOrder { order: n }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[i8]]) -> SignMatrix {
        SignMatrix { order: rows.len(), entries: rows.concat() }
    }

    #[test]
    fn s2_and_s4() {
        assert_eq!(sign_even(2).unwrap().rows(), vec![vec![1, -1], vec![-1, 1]]);
        assert_eq!(sign_even(4).unwrap().diagonal(), vec![1, 1, -1, -1]);
        assert!(sign_even(5).is_err());
    }

    #[test]
    fn s6_matches_print() {
        let want = from_rows(&[
            &[1, -1, 1, -1, 1, -1],
            &[-1, 1, -1, 1, -1, 1],
            &[1, -1, -1, 1, 1, -1],
            &[-1, 1, 1, -1, -1, 1],
            &[1, -1, 1, -1, 1, -1],
            &[-1, 1, -1, 1, -1, 1],
        ]);
        assert_eq!(sign_even(6).unwrap(), want);
    }

    #[test]
    fn s7_matches_print() {
        let want = from_rows(&[
            &[2, -1, 1, -1, 1, -1, -1],
            &[-1, 2, -1, 1, -1, 1, -1],
            &[1, -1, -2, 1, 1, -1, 1],
            &[-1, 1, 1, -2, -1, 1, 1],
            &[1, -1, 1, -1, 2, -1, -1],
            &[-1, 1, -1, 1, -1, 2, -1],
            &[-1, -1, 1, 1, -1, -1, 2],
        ]);
        assert_eq!(sign_4k3(7).unwrap(), want);
    }

    #[test]
    fn s3_small_case() {
        let want = from_rows(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert_eq!(sign_4k3(3).unwrap(), want);
    }

    #[test]
    fn s9_matches_print() {
        let want = from_rows(&[
            &[2, -1, 1, -1, 1, -1, 1, -1, -1],
            &[-1, 2, -1, 1, -1, 1, -1, 1, -1],
            &[1, -1, 2, -1, 1, -1, 1, -1, -1],
            &[-1, 1, -1, 2, -1, 1, -1, 1, -1],
            &[1, -1, 1, -1, 2, -1, 1, -1, -1],
            &[-1, 1, -1, 1, -1, 2, -1, 1, -1],
            &[1, -1, 1, -1, 1, -1, -2, 1, 1],
            &[-1, 1, -1, 1, -1, 1, 1, -2, 1],
            &[-1, -1, -1, -1, -1, -1, 1, 1, 4],
        ]);
        assert_eq!(sign_4k1(9).unwrap(), want);
    }

    #[test]
    fn s5_corner() {
        let s = sign_4k1(5).unwrap();
        assert_eq!(s.get(5, 5), 4);
        assert!(s.row_sums().iter().all(|&x| x == 0));
        assert!(s.col_sums().iter().all(|&x| x == 0));
    }

    #[test]
    fn even_diagonal_sums() {
        for k in 1..=6 {
            let d: i64 = sign_even(4 * k).unwrap().diagonal().iter().map(|&x| x as i64).sum();
            assert_eq!(d, 0);
        }
        for k in 0..=5 {
            let d: i64 = sign_even(4 * k + 2).unwrap().diagonal().iter().map(|&x| x as i64).sum();
            assert_eq!(d, 2);
        }
        // S'_{4k} keeps a diagonal sum of 4 for every k
        for k in 1..=6 {
            let d: i64 = sign_prime(4 * k).diagonal().iter().map(|&x| x as i64).sum();
            assert_eq!(d, 4);
        }
    }

    #[test]
    fn all_lines_vanish() {
        for n in 2..=40 {
            let s = if n % 2 == 0 {
                sign_even(n)
            } else if n >= 3 {
                sign_odd(n)
            } else {
                continue;
            };
            let Ok(s) = s else { continue };
            assert!(s.is_symmetric(), "order {n}");
            assert!(s.row_sums().iter().all(|&x| x == 0), "order {n}");
            assert!(s.col_sums().iter().all(|&x| x == 0), "order {n}");
            assert_eq!(s, if n % 2 == 0 { sign_even(n).unwrap() } else { sign_odd(n).unwrap() });
        }
    }
}
