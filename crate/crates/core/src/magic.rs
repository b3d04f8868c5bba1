//! Magic rectangles: `a x b` arrays of consecutive integers whose rows share
//! one sum and whose columns share another.
//!
//! Shapes are built on the values `0..ab` and shifted afterwards, so
//! `magic_rectangle(a, b, lo)` is the `lo = 0` table plus `lo` everywhere.
//! Odd squares and `3 x n` shapes have closed forms; anything else (and any
//! closed form that fails its own check) goes to a seeded local search whose
//! seeds are fixed, which keeps the output deterministic.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::MagicError;

/// Restarts tried by the search before giving up on a shape.
const MAX_SEEDS: u64 = 64;
/// Swap attempts per restart.
const ITERATIONS_PER_SEED: u64 = 3_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MagicRectangle {
    rows: usize,
    cols: usize,
    lo: u64,
    entries: Vec<u64>,
}

/// Which construction `magic_rectangle_with` may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MagicMethod {
    /// Closed forms where available, search otherwise.
    #[default]
    Auto,
    /// Always use the seeded search (apart from the trivial `1 x 1`).
    Search,
}

impl MagicRectangle {
    /// Wraps a table without checking the magic property; `lo` is its
    /// smallest entry. Fails only if the rows are ragged or empty.
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self, MagicError> {
        let a = rows.len();
        let b = rows.first().map_or(0, Vec::len);
        if a == 0 || b == 0 || rows.iter().any(|r| r.len() != b) {
            return Err(MagicError::UnsupportedShape { rows: a, cols: b });
        }
        let entries: Vec<u64> = rows.concat();
        let lo = *entries.iter().min().expect("non-empty");
        Ok(MagicRectangle { rows: a, cols: b, lo, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.cols).map(<[u64]>::to_vec).collect()
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.entries.chunks(self.cols).map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j)).sum()).collect()
    }

    /// The same rectangle with every entry moved by `delta`.
    pub fn shifted(&self, delta: i64) -> MagicRectangle {
        let move_by = |v: u64| (v as i64 + delta) as u64;
        MagicRectangle {
            rows: self.rows,
            cols: self.cols,
            lo: move_by(self.lo),
            entries: self.entries.iter().map(|&v| move_by(v)).collect(),
        }
    }

    pub fn transposed(&self) -> MagicRectangle {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j));
            }
        }
        MagicRectangle { rows: self.cols, cols: self.rows, lo: self.lo, entries }
    }
}

impl fmt::Display for MagicRectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for r in self.entries.chunks(self.cols) {
            let cells: Vec<String> = r.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// True iff the entries are exactly `[lo, lo+ab-1]` and every row and every
/// column hits its target sum.
pub fn verify_magic(rect: &MagicRectangle) -> bool {
    let (a, b) = (rect.rows as u64, rect.cols as u64);
    if rect.entries.len() as u64 != a * b {
        return false;
    }
    let mut sorted = rect.entries.clone();
    sorted.sort_unstable();
    if sorted.iter().enumerate().any(|(k, &v)| v != rect.lo + k as u64) {
        return false;
    }
    // 2*sum avoids halving an odd product
    let twice = 2 * rect.lo + a * b - 1;
    rect.row_sums().iter().all(|&s| 2 * s == b * twice) && rect.col_sums().iter().all(|&s| 2 * s == a * twice)
}

pub fn magic_rectangle(a: usize, b: usize, lo: u64) -> Result<MagicRectangle, MagicError> {
    magic_rectangle_with(a, b, lo, MagicMethod::Auto)
}

pub fn magic_rectangle_with(a: usize, b: usize, lo: u64, method: MagicMethod) -> Result<MagicRectangle, MagicError> {
    let shape_ok = a % 2 == 1 && b % 2 == 1 && ((a == 1) == (b == 1));
    if !shape_ok {
        return Err(MagicError::UnsupportedShape { rows: a, cols: b });
    }
    let base = cached_base(a, b, method)?;
    Ok(MagicRectangle { rows: a, cols: b, lo, entries: base.iter().map(|&v| lo + u64::from(v)).collect() })
}

type Cache = Mutex<HashMap<(usize, usize, MagicMethod), Vec<u32>>>;

fn cached_base(a: usize, b: usize, method: MagicMethod) -> Result<Vec<u32>, MagicError> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&(a, b, method)) {
        return Ok(hit.clone());
    }
    // computed outside the lock so independent shapes can proceed in parallel
    let table = build_base(a, b, method)?;
    cache.lock().expect("cache poisoned").insert((a, b, method), table.clone());
    Ok(table)
}

fn build_base(a: usize, b: usize, method: MagicMethod) -> Result<Vec<u32>, MagicError> {
    if a == 1 && b == 1 {
        return Ok(vec![0]);
    }
    if method == MagicMethod::Auto {
        let closed = if a == b {
            Some(odd_square(a))
        } else if a == 3 {
            three_by(b)
        } else if b == 3 {
            three_by(a).map(|t| transpose(&t, 3, a))
        } else {
            None
        };
        if let Some(t) = closed.filter(|t| is_magic_base(t, a, b)) {
            return Ok(t);
        }
    }
    for seed in 0..MAX_SEEDS {
        if let Some(t) = anneal(a, b, seed) {
            debug_assert!(is_magic_base(&t, a, b));
            return Ok(t);
        }
    }
    Err(MagicError::SearchExhausted { rows: a, cols: b, attempts: MAX_SEEDS })
}

fn is_magic_base(t: &[u32], a: usize, b: usize) -> bool {
    let rect = MagicRectangle { rows: a, cols: b, lo: 0, entries: t.iter().map(|&v| u64::from(v)).collect() };
    verify_magic(&rect)
}

fn transpose(t: &[u32], a: usize, b: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(t.len());
    for j in 0..b {
        for i in 0..a {
            out.push(t[i * b + j]);
        }
    }
    out
}

/// Odd `n x n`: cell `(i,j)` gets digits `((i+j) mod n, (i+2j) mod n)` in
/// base `n`. Both digit maps are Latin squares and together they are
/// orthogonal, so each line sees every digit exactly once.
fn odd_square(n: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push((n * ((i + j) % n) + (i + 2 * j) % n) as u32);
        }
    }
    out
}

/// `3 x n` for odd `n`, written around 0 and shifted by `(3n-1)/2`.
///
/// Column `i` is `(t_i - s_i, ±s_i, ∓t_i)` with `s_i = k+1+i`,
/// `t_i = k+1+π(i)`, `k = (n-1)/2`, so every column sums to 0. The first row
/// holds `π(i) - i`, which sums to 0 for any permutation and covers
/// `[-k, k]` when `π` has distinct displacements. The set `U` of columns
/// where the second row takes `+s_i` is chosen by subset sum so that the
/// second (and then the third) row also sums to 0.
fn three_by(n: usize) -> Option<Vec<u32>> {
    if n < 3 || n.is_multiple_of(2) {
        return None;
    }
    let k = (n - 1) / 2;
    let doubling: Vec<usize> = (0..n).map(|i| (2 * i) % n).collect();
    let mut inverse = vec![0; n];
    for (i, &p) in doubling.iter().enumerate() {
        inverse[p] = i;
    }
    let reversed = |p: &[usize]| -> Vec<usize> { (0..n).map(|i| n - 1 - p[n - 1 - i]).collect() };
    let candidates = [reversed(&doubling), reversed(&inverse), doubling, inverse];
    candidates.iter().find_map(|pi| three_by_with(n, k, pi))
}

fn three_by_with(n: usize, k: usize, pi: &[usize]) -> Option<Vec<u32>> {
    let s = |i: usize| (k + 1 + i) as i64;
    let t = |i: usize| (k + 1 + pi[i]) as i64;
    // Row 2 sums to sum_{U} s_i - sum_{not U} t_i; zero iff
    // sum_{U} (s_i + t_i) = sum_i t_i = n^2.
    let weight: Vec<usize> = (0..n).map(|i| (s(i) + t(i)) as usize).collect();
    let target = n * n;
    let mut reach = vec![vec![false; target + 1]; n + 1];
    reach[0][0] = true;
    for i in 0..n {
        for v in 0..=target {
            if reach[i][v] {
                reach[i + 1][v] = true;
                if v + weight[i] <= target {
                    reach[i + 1][v + weight[i]] = true;
                }
            }
        }
    }
    if !reach[n][target] {
        return None;
    }
    let mut in_u = vec![false; n];
    let mut left = target;
    for i in (0..n).rev() {
        if !reach[i][left] {
            in_u[i] = true;
            left -= weight[i];
        }
    }
    let h = ((3 * n - 1) / 2) as i64;
    let mut rows: [Vec<u32>; 3] = std::array::from_fn(|_| Vec::with_capacity(n));
    for (i, &upper) in in_u.iter().enumerate() {
        let (y, z) = if upper { (s(i), -t(i)) } else { (-t(i), s(i)) };
        for (row, v) in rows.iter_mut().zip([t(i) - s(i), y, z]) {
            let shifted = v + h;
            if shifted < 0 {
                return None;
            }
            row.push(shifted as u32);
        }
    }
    Some(rows.concat())
}

/// Swap-based annealing on the squared deviations of all line sums from
/// their targets. Returns `None` if this seed does not reach zero in time.
fn anneal(a: usize, b: usize, seed: u64) -> Option<Vec<u32>> {
    let n = a * b;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<i64> = (0..n as i64).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        v.swap(i, j);
    }
    let row_target = (b * (n - 1) / 2) as i64;
    let col_target = (a * (n - 1) / 2) as i64;
    let mut rs = vec![-row_target; a];
    let mut cs = vec![-col_target; b];
    for (idx, &x) in v.iter().enumerate() {
        rs[idx / b] += x;
        cs[idx % b] += x;
    }
    let mut cost: i64 = rs.iter().chain(cs.iter()).map(|d| d * d).sum();
    let mut temp = (n as f64).max(4.0);
    let mut iter = 0u64;
    while cost > 0 {
        iter += 1;
        if iter > ITERATIONS_PER_SEED {
            return None;
        }
        let x = rng.gen_range(0..n);
        let y = rng.gen_range(0..n);
        let (xi, xj, yi, yj) = (x / b, x % b, y / b, y % b);
        let d = v[y] - v[x];
        let mut delta = 0;
        if xi != yi {
            delta += 2 * d * (rs[xi] - rs[yi]) + 2 * d * d;
        }
        if xj != yj {
            delta += 2 * d * (cs[xj] - cs[yj]) + 2 * d * d;
        }
        if delta <= 0 || rng.gen::<f64>() < (-(delta as f64) / temp).exp() {
            v.swap(x, y);
            rs[xi] += d;
            rs[yi] -= d;
            cs[xj] += d;
            cs[yj] -= d;
            cost += delta;
        }
        temp = (temp * 0.9999).max(0.3);
    }
    Some(v.into_iter().map(|x| x as u32).collect())
}
