//! Exact integer matrices: Smith normal form, Hermite echelon bases and
//! quotient presentations of `Z^m` by a relation span.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        IntMatrix {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += q * row[b]
    fn add_row(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = q * &self[(b, j)];
            self[(a, j)] += t;
        }
    }

    /// col[a] += q * col[b]
    fn add_col(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = q * &self[(i, b)];
            self[(i, a)] += t;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let t = -&self[(a, j)];
            self[(a, j)] = t;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Smith normal form `D = U * M * V` with `U`, `V` unimodular and the
/// invariant factors satisfying `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut a = m.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let n = a.rows().min(a.cols());

    for k in 0..n {
        'outer: loop {
            // pivot: entry of least absolute value in the trailing block
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..a.rows() {
                for j in k..a.cols() {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if a[(pi, pj)].abs() <= a[(i, j)].abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap_rows(k, pi);
            u.swap_rows(k, pi);
            a.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..a.rows() {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, k)] / &a[(k, k)]);
                a.add_row(i, k, &q);
                u.add_row(i, k, &q);
                if !a[(i, k)].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..a.cols() {
                if a[(k, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(k, j)] / &a[(k, k)]);
                a.add_col(j, k, &q);
                v.add_col(j, k, &q);
                if !a[(k, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue; // remainders left; re-pick a smaller pivot
            }
            // divisibility: d_k must divide the trailing block
            for i in k + 1..a.rows() {
                for j in k + 1..a.cols() {
                    if !(&a[(i, j)] % &a[(k, k)]).is_zero() {
                        let one = BigInt::one();
                        a.add_row(k, i, &one);
                        u.add_row(k, i, &one);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        if a[(k, k)].is_negative() {
            a.negate_row(k);
            u.negate_row(k);
        }
    }

    let mut factors = Vec::new();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            break;
        }
        factors.push(a[(k, k)].clone());
    }
    let rank = factors.len();
    SnfResult {
        d: a,
        u,
        v,
        factors,
        rank,
    }
}

/// Hermite-style integer echelon basis of the row span: pivots positive,
/// rows sorted by pivot column, entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
#[allow(clippy::needless_range_loop)] // pivot and target rows alias the same vec
pub fn hermite_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = rows
        .into_iter()
        .inspect(|r| assert_eq!(r.len(), cols, "ragged row"))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut done = 0usize;
    for col in 0..cols {
        loop {
            // row with the least nonzero absolute value in this column
            let mut best: Option<usize> = None;
            for (i, row) in rows.iter().enumerate().skip(done) {
                if row[col].is_zero() {
                    continue;
                }
                match best {
                    Some(b) if rows[b][col].abs() <= row[col].abs() => {}
                    _ => best = Some(i),
                }
            }
            let Some(b) = best else { break };
            rows.swap(done, b);
            let mut finished = true;
            for i in done + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = &rows[i][col] / &rows[done][col];
                if !q.is_zero() {
                    for j in 0..cols {
                        let t = &q * &rows[done][j];
                        rows[i][j] -= t;
                    }
                }
                if !rows[i][col].is_zero() {
                    finished = false;
                }
            }
            if finished {
                if rows[done][col].is_negative() {
                    for x in rows[done].iter_mut() {
                        *x = -&*x;
                    }
                }
                // reduce the entries above the new pivot
                for i in 0..done {
                    let q = rows[i][col].div_floor(&rows[done][col]);
                    if !q.is_zero() {
                        for j in 0..cols {
                            let t = &q * &rows[done][j];
                            rows[i][j] -= t;
                        }
                    }
                }
                done += 1;
                break;
            }
        }
        if done == rows.len() {
            break;
        }
    }
    rows.truncate(done);
    rows
}

/// Presentation of `Z^m / span(relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    pub free_rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
    /// Indices of the chosen representative coordinates: the earliest
    /// coordinates whose images are linearly independent in the quotient.
    pub representatives: Vec<usize>,
}

pub fn quotient_basis(relations: &[Vec<BigInt>], m: usize) -> QuotientBasis {
    let mat = IntMatrix::from_rows(relations.to_vec(), m);
    let snf = smith_normal_form(&mat);
    let torsion: Vec<BigInt> = snf
        .factors
        .iter()
        .filter(|f| !f.is_one())
        .cloned()
        .collect();
    let free_rank = m - snf.rank;

    // Greedy representative selection over Q: extend an echelon basis of the
    // relation span by coordinate vectors, earliest coordinate first.
    let mut echelon = rational_echelon(relations.to_vec(), m);
    let mut representatives = Vec::with_capacity(free_rank);
    for j in 0..m {
        if representatives.len() == free_rank {
            break;
        }
        let mut e = vec![BigInt::zero(); m];
        e[j] = BigInt::one();
        if rational_reduce(&echelon, &mut e) {
            representatives.push(j);
            echelon.push(normalize_content(e));
            echelon.sort_by_key(|r| r.iter().position(|x| !x.is_zero()).unwrap());
        }
    }

    QuotientBasis {
        free_rank,
        torsion,
        representatives,
    }
}

/// Fraction-free row echelon over Q (rows scaled by content).
fn rational_echelon(rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut echelon: Vec<Vec<BigInt>> = Vec::new();
    for row in rows {
        assert_eq!(row.len(), cols);
        let mut row = row;
        if rational_reduce(&echelon, &mut row) {
            echelon.push(normalize_content(row));
            echelon.sort_by_key(|r| r.iter().position(|x| !x.is_zero()).unwrap());
        }
    }
    echelon
}

/// Cross-multiplication reduction of `v` against echelon rows; returns true
/// when a nonzero residual remains (i.e. `v` is independent over Q).
fn rational_reduce(echelon: &[Vec<BigInt>], v: &mut [BigInt]) -> bool {
    for row in echelon {
        let pc = row.iter().position(|x| !x.is_zero()).unwrap();
        if v[pc].is_zero() {
            continue;
        }
        let p = row[pc].clone();
        let c = v[pc].clone();
        for (vi, ri) in v.iter_mut().zip(row.iter()) {
            *vi = &*vi * &p - &c * ri;
        }
        // keep entries small
        let g = content(v);
        if g > BigInt::one() {
            for vi in v.iter_mut() {
                *vi = &*vi / &g;
            }
        }
    }
    v.iter().any(|x| !x.is_zero())
}

fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}

fn normalize_content(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = content(&v);
    if !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -&*x;
            }
        }
    }
    v
}
