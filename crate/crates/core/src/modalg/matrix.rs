use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{parse_poly, PolyRing, Polynomial};

/// A matrix of polynomials stored by columns.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix {
    ring: PolyRing,
    nrows: usize,
    cols: Vec<Vec<Polynomial>>,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.nrows, self.ncols())?;
        for i in 0..self.nrows {
            let row: Vec<String> = self.cols.iter().map(|c| c[i].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl PolyMatrix {
    pub fn from_columns(ring: &PolyRing, nrows: usize, cols: Vec<Vec<Polynomial>>) -> Result<Self> {
        for c in &cols {
            if c.len() != nrows {
                return Err(Error::Shape(format!("column of length {} in a matrix with {nrows} rows", c.len())));
            }
            if c.iter().any(|p| p.ring() != ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(PolyMatrix { ring: ring.clone(), nrows, cols })
    }

    pub fn from_rows(ring: &PolyRing, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let cols = (0..ncols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
        PolyMatrix::from_columns(ring, nrows, cols)
    }

    /// Parses rows of polynomial strings.
    pub fn parse(ring: &PolyRing, rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_poly(s, ring)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(ring, rows)
    }

    pub fn zero(ring: &PolyRing, nrows: usize, ncols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), nrows, cols: vec![vec![Polynomial::zero(ring); nrows]; ncols] }
    }

    pub fn identity(ring: &PolyRing, n: usize) -> Self {
        let mut m = PolyMatrix::zero(ring, n, n);
        for i in 0..n {
            m.cols[i][i] = Polynomial::one(ring);
        }
        m
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.cols[j][i]
    }

    pub fn column(&self, j: usize) -> &[Polynomial] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<Vec<Polynomial>> {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.cols.iter().map(|c| c[i].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|p| p.is_zero()))
    }

    pub fn transpose(&self) -> PolyMatrix {
        let cols = (0..self.nrows).map(|i| self.row(i)).collect();
        PolyMatrix { ring: self.ring.clone(), nrows: self.ncols(), cols }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.ncols() != other.nrows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows,
                self.ncols(),
                other.nrows,
                other.ncols()
            )));
        }
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        Ok(PolyMatrix { ring: self.ring.clone(), nrows: self.nrows, cols })
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(&self.ring); self.nrows];
        for (c, coef) in self.cols.iter().zip(v) {
            if coef.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(c) {
                if !a.is_zero() {
                    *o = &*o + &(a * coef);
                }
            }
        }
        out
    }

    /// Horizontal concatenation.
    pub fn concat(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.nrows != other.nrows {
            return Err(Error::Shape("row counts differ".into()));
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(PolyMatrix { ring: self.ring.clone(), nrows: self.nrows, cols })
    }

    /// Block-diagonal sum.
    pub fn block_diagonal(&self, other: &PolyMatrix) -> PolyMatrix {
        let z = Polynomial::zero(&self.ring);
        let n = self.nrows + other.nrows;
        let mut cols = Vec::with_capacity(self.ncols() + other.ncols());
        for c in &self.cols {
            let mut v = c.clone();
            v.resize(n, z.clone());
            cols.push(v);
        }
        for c in &other.cols {
            let mut v = vec![z.clone(); self.nrows];
            v.extend(c.iter().cloned());
            cols.push(v);
        }
        PolyMatrix { ring: self.ring.clone(), nrows: n, cols }
    }

    /// All `k x k` minors (nonzero ones only), computed by memoized Laplace expansion.
    pub fn minors(&self, k: usize) -> Vec<Polynomial> {
        let (n, m) = (self.nrows, self.ncols());
        if k == 0 {
            return vec![Polynomial::one(&self.ring)];
        }
        if k > n || k > m {
            return Vec::new();
        }
        assert!(n <= 64 && m <= 64, "minor computation limited to 64 rows and columns");
        let mut memo: HashMap<(u64, u64), Polynomial> = HashMap::new();
        let mut out = Vec::new();
        for cols in subsets(m, k) {
            let cmask = mask_of(&cols);
            for rows in subsets(n, k) {
                let d = self.minor_rec(mask_of(&rows), cmask, &mut memo);
                if !d.is_zero() {
                    out.push(d);
                }
            }
        }
        out
    }

    /// Determinant of the submatrix on `rows` x `cols` (bit masks), expanding along
    /// the lowest column.
    fn minor_rec(&self, rows: u64, cols: u64, memo: &mut HashMap<(u64, u64), Polynomial>) -> Polynomial {
        if cols == 0 {
            return Polynomial::one(&self.ring);
        }
        if let Some(p) = memo.get(&(rows, cols)) {
            return p.clone();
        }
        let j = cols.trailing_zeros() as usize;
        let rest = cols & (cols - 1);
        let mut acc = Polynomial::zero(&self.ring);
        let mut sign_neg = false;
        let mut r = rows;
        while r != 0 {
            let i = r.trailing_zeros() as usize;
            r &= r - 1;
            let a = &self.cols[j][i];
            if !a.is_zero() {
                let sub = self.minor_rec(rows & !(1u64 << i), rest, memo);
                if !sub.is_zero() {
                    let t = a * &sub;
                    acc = if sign_neg { &acc - &t } else { &acc + &t };
                }
            }
            sign_neg = !sign_neg;
        }
        memo.insert((rows, cols), acc.clone());
        acc
    }

    /// Rank over the fraction field, by fraction-free (Bareiss) elimination with
    /// complete pivoting.
    pub fn rank(&self) -> usize {
        let n = self.nrows;
        let m = self.ncols();
        let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| self.row(i)).collect();
        let mut prev = Polynomial::one(&self.ring);
        let mut rank = 0;
        for k in 0..n.min(m) {
            // pivot: fewest terms, then lowest degree
            let mut best: Option<(usize, usize, (usize, i64))> = None;
            for (i, row) in a.iter().enumerate().skip(k) {
                for (j, p) in row.iter().enumerate().skip(k) {
                    if p.is_zero() {
                        continue;
                    }
                    let key = (p.num_terms(), p.degree().unwrap_or(0));
                    if best.as_ref().is_none_or(|b| key < b.2) {
                        best = Some((i, j, key));
                    }
                }
            }
            let Some((pi, pj, _)) = best else { break };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let pivot = a[k][k].clone();
            for i in k + 1..n {
                for j in k + 1..m {
                    let num = &(&pivot * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
                a[i][k] = Polynomial::zero(&self.ring);
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn mask_of(idx: &[usize]) -> u64 {
    idx.iter().fold(0, |m, &i| m | (1u64 << i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::grevlex(32003, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn determinant_by_cofactors() {
        let r = ring();
        let m = PolyMatrix::parse(&r, &[&["x", "y", "0"], &["0", "x", "y"], &["z", "0", "x"]]).unwrap();
        let det = m.minors(3);
        // x*(x^2) - y*(0 - y z) = x^3 + y^2 z
        assert_eq!(det, vec![parse_poly("x^3 + y^2*z", &r).unwrap()]);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.minors(1).len(), 6);
    }

    #[test]
    fn rank_detects_dependence() {
        let r = ring();
        let m = PolyMatrix::parse(&r, &[&["x", "y"], &["x*z", "y*z"], &["x^2", "x*y"]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert!(m.minors(2).is_empty());
        let hb = PolyMatrix::parse(&r, &[&["-y", "0"], &["x", "-y"], &["0", "x"]]).unwrap();
        assert_eq!(hb.rank(), 2);
        assert_eq!(PolyMatrix::zero(&r, 2, 3).rank(), 0);
    }

    #[test]
    fn product_and_transpose() {
        let r = ring();
        let a = PolyMatrix::parse(&r, &[&["x^2", "x*y", "y^2"]]).unwrap();
        let hb = PolyMatrix::parse(&r, &[&["-y", "0"], &["x", "-y"], &["0", "x"]]).unwrap();
        assert!(a.mul(&hb).unwrap().is_zero());
        assert_eq!(hb.transpose().transpose(), hb);
        assert!(a.mul(&a).is_err());
    }
}
