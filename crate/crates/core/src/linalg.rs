//! Exact dense linear algebra over a tower field, at the `Elem` level.
//!
//! Matrices are row-major. Sizes here are tiny (extension degrees), so
//! everything is plain Gaussian elimination plus the division-free Berkowitz
//! characteristic polynomial, which avoids any division by integers (there is
//! no usable `1/2` in characteristic two).

use crate::fields::elem::{self, Elem, Layer};

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Elem>,
}

impl Mat {
    pub fn zeros(c: &[Layer], rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![elem::zero(c); rows * cols],
        }
    }

    pub fn identity(c: &[Layer], n: usize) -> Self {
        let mut m = Mat::zeros(c, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = elem::one(c);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Elem {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self, c: &[Layer]) -> Mat {
        let mut out = Mat::zeros(c, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn matmul(&self, c: &[Layer], other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(c, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if elem::is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = elem::mul(c, a, other.at(k, j));
                    let cur = elem::add(c, out.at(i, j), &t);
                    *out.at_mut(i, j) = cur;
                }
            }
        }
        out
    }

    pub fn matvec(&self, c: &[Layer], v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| dot(c, self.row(i), v))
            .collect()
    }
}

pub(crate) fn dot(c: &[Layer], a: &[Elem], b: &[Elem]) -> Elem {
    let mut acc = elem::zero(c);
    for (x, y) in a.iter().zip(b) {
        let t = elem::mul(c, x, y);
        acc = elem::add(c, &acc, &t);
    }
    acc
}

pub(crate) fn vadd(c: &[Layer], a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(x, y)| elem::add(c, x, y)).collect()
}

pub(crate) fn vscale(c: &[Layer], a: &[Elem], s: &Elem) -> Vec<Elem> {
    a.iter().map(|x| elem::mul(c, x, s)).collect()
}

/// Reduced row echelon form; returns the pivot column of each pivot row.
pub(crate) fn rref(c: &[Layer], m: &mut Mat) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m.cols {
        let Some(pr) = (r..m.rows).find(|&i| !elem::is_zero(m.at(i, col))) else {
            continue;
        };
        for j in 0..m.cols {
            let tmp = m.at(pr, j).clone();
            *m.at_mut(pr, j) = m.at(r, j).clone();
            *m.at_mut(r, j) = tmp;
        }
        let inv = elem::inv(c, m.at(r, col)).expect("pivot nonzero");
        for j in 0..m.cols {
            let t = elem::mul(c, m.at(r, j), &inv);
            *m.at_mut(r, j) = t;
        }
        for i in 0..m.rows {
            if i != r && !elem::is_zero(m.at(i, col)) {
                let factor = m.at(i, col).clone();
                for j in 0..m.cols {
                    let t = elem::mul(c, m.at(r, j), &factor);
                    let cur = elem::add(c, m.at(i, j), &t);
                    *m.at_mut(i, j) = cur;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.rows {
            break;
        }
    }
    pivots
}

/// Basis of the right kernel {x : Ax = 0}, deterministic (RREF order).
pub(crate) fn kernel_basis(c: &[Layer], a: &Mat) -> Vec<Vec<Elem>> {
    let mut m = a.clone();
    let pivots = rref(c, &mut m);
    let mut out = Vec::new();
    let mut piv_iter = pivots.iter().copied().peekable();
    let mut free_cols = Vec::new();
    for col in 0..a.cols {
        if piv_iter.peek() == Some(&col) {
            piv_iter.next();
        } else {
            free_cols.push(col);
        }
    }
    for &fc in &free_cols {
        let mut v = vec![elem::zero(c); a.cols];
        v[fc] = elem::one(c);
        for (row, &pc) in pivots.iter().enumerate() {
            // x_pc = -sum over free columns; minus is plus here
            v[pc] = m.at(row, fc).clone();
        }
        out.push(v);
    }
    out
}

/// One solution of Ax = b, if any (RREF on the augmented matrix).
pub(crate) fn solve(c: &[Layer], a: &Mat, b: &[Elem]) -> Option<Vec<Elem>> {
    assert_eq!(a.rows, b.len());
    let mut m = Mat::zeros(c, a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            *m.at_mut(i, j) = a.at(i, j).clone();
        }
        *m.at_mut(i, a.cols) = b[i].clone();
    }
    let pivots = rref(c, &mut m);
    if pivots.contains(&a.cols) {
        return None; // inconsistent
    }
    let mut x = vec![elem::zero(c); a.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = m.at(row, a.cols).clone();
    }
    Some(x)
}

pub(crate) fn rank(c: &[Layer], a: &Mat) -> usize {
    let mut m = a.clone();
    rref(c, &mut m).len()
}

/// Characteristic polynomial of a square matrix by the Berkowitz algorithm,
/// returned in descending order: [1, c1, ..., cn] for x^n + c1 x^(n-1) + ... + cn.
/// Division-free, so it is valid over any commutative ring and in particular
/// never divides by 2.
pub(crate) fn berkowitz_char_poly(c: &[Layer], a: &Mat) -> Vec<Elem> {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    if n == 0 {
        return vec![elem::one(c)];
    }
    let mut coeffs = vec![elem::one(c), a.at(0, 0).clone()];
    for m in 1..n {
        // principal m x m block, its border row/column, and the corner entry
        let r: Vec<Elem> = (0..m).map(|j| a.at(m, j).clone()).collect();
        let col: Vec<Elem> = (0..m).map(|i| a.at(i, m).clone()).collect();
        let d = a.at(m, m).clone();
        let mut s = Vec::with_capacity(m);
        let mut v = col;
        s.push(dot(c, &r, &v));
        for _ in 1..m {
            let mut next = vec![elem::zero(c); m];
            for (i, slot) in next.iter_mut().enumerate() {
                let mut acc = elem::zero(c);
                for k in 0..m {
                    let t = elem::mul(c, a.at(i, k), &v[k]);
                    acc = elem::add(c, &acc, &t);
                }
                *slot = acc;
            }
            v = next;
            s.push(dot(c, &r, &v));
        }
        // first column of the Toeplitz factor: 1, d, s_0, s_1, ...
        let mut colvals = Vec::with_capacity(m + 2);
        colvals.push(elem::one(c));
        colvals.push(d);
        colvals.extend(s);
        let mut next = vec![elem::zero(c); m + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = elem::zero(c);
            for (j, cj) in coeffs.iter().enumerate() {
                if i >= j && i - j < colvals.len() {
                    let t = elem::mul(c, &colvals[i - j], cj);
                    acc = elem::add(c, &acc, &t);
                }
            }
            *slot = acc;
        }
        coeffs = next;
    }
    coeffs
}

/// Second elementary symmetric coefficient from 2x2 principal minors:
/// sum over i < j of (a_ii a_jj + a_ij a_ji). In characteristic 2 this equals
/// the x^(n-2) coefficient of the characteristic polynomial.
pub(crate) fn second_coeff_principal_minors(c: &[Layer], a: &Mat) -> Elem {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let mut acc = elem::zero(c);
    for i in 0..n {
        for j in (i + 1)..n {
            let diag = elem::mul(c, a.at(i, i), a.at(j, j));
            let off = elem::mul(c, a.at(i, j), a.at(j, i));
            acc = elem::add(c, &acc, &elem::add(c, &diag, &off));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: u8) -> Elem {
        Elem::Bit(x == 1)
    }

    #[test]
    fn berkowitz_matches_known_charpoly() {
        // multiplication by the generator of GF(4): [[0,1],[1,1]] has x^2+x+1
        let c: Vec<Layer> = Vec::new();
        let m = Mat::from_rows(vec![vec![b(0), b(1)], vec![b(1), b(1)]]);
        assert_eq!(berkowitz_char_poly(&c, &m), vec![b(1), b(1), b(1)]);
        assert_eq!(second_coeff_principal_minors(&c, &m), b(1));
    }

    #[test]
    fn berkowitz_identity_matrix() {
        // char poly of I_3 is (x+1)^3 = x^3 + x^2 + x + 1 over GF(2)
        let c: Vec<Layer> = Vec::new();
        let m = Mat::identity(&c, 3);
        assert_eq!(
            berkowitz_char_poly(&c, &m),
            vec![b(1), b(1), b(1), b(1)]
        );
    }

    #[test]
    fn kernel_and_solve() {
        let c: Vec<Layer> = Vec::new();
        // [[1,1,0],[0,0,1]] over GF(2): kernel spanned by (1,1,0)
        let m = Mat::from_rows(vec![vec![b(1), b(1), b(0)], vec![b(0), b(0), b(1)]]);
        let k = kernel_basis(&c, &m);
        assert_eq!(k, vec![vec![b(1), b(1), b(0)]]);
        let x = solve(&c, &m, &[b(1), b(1)]).unwrap();
        assert_eq!(m.matvec(&c, &x), vec![b(1), b(1)]);
        assert_eq!(rank(&c, &m), 2);
        assert!(solve(&c, &Mat::from_rows(vec![vec![b(0)]]), &[b(1)]).is_none());
    }
}
