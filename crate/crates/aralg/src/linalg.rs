//! Dense exact linear algebra over a [`FieldSpec`].
//!
//! The convention is global and fixed: vectors are rows, maps act on the
//! right, so the composite "f then g" is the matrix product `f * g`.
//! Kernels are left kernels `{ v : v * m = 0 }`.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Scalar>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.field.format_scalar(self.at(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    /// Integer literal matrix, mostly for tests and presets.
    pub fn from_ints(field: FieldSpec, data: &[&[i64]]) -> Matrix {
        let rows = data.len();
        let cols = if rows == 0 { 0 } else { data[0].len() };
        Matrix::from_fn(field, rows, cols, |i, j| field.from_int(data[i][j]))
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Matrix {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn rows_vec(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.at(j, i).clone()
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let t = f.add(out.at(i, j), &f.mul(a, b));
                    out.set(i, j, t);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.add(self.at(i, j), other.at(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.sub(self.at(i, j), other.at(i, j))
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.mul(self.at(i, j), c)
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.neg(self.at(i, j))
        })
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.at(i, j).clone()
            } else {
                other.at(i - self.rows, j).clone()
            }
        })
    }

    /// 2x2 block matrix; block row/column sizes inferred from the blocks.
    pub fn block2x2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        a.hstack(b).vstack(&c.hstack(d))
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        Matrix::from_fn(self.field, r1 - r0, c1 - c0, |i, j| {
            self.at(r0 + i, c0 + j).clone()
        })
    }

    /// Row-major flattening of the matrix into a single row vector.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn from_vector(field: FieldSpec, rows: usize, cols: usize, v: Vec<Scalar>) -> Matrix {
        assert_eq!(v.len(), rows * cols);
        Matrix {
            field,
            rows,
            cols,
            entries: v,
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).pivots.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let r = rref_with_transform(self);
        if r.pivots.len() != self.rows {
            return None;
        }
        Some(r.transform)
    }
}

/// Result of Gauss-Jordan elimination. `matrix` is the reduced row echelon
/// form, `pivots` the pivot column indices (one per nonzero row), and
/// `transform` satisfies `transform * original = matrix`.
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub transform: Matrix,
}

pub fn rref_with_transform(m: &Matrix) -> Rref {
    let f = m.field;
    let mut a = m.clone();
    let mut t = Matrix::identity(f, m.rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let mut pivot = None;
        for i in r..a.rows {
            if !f.is_zero(a.at(i, c)) {
                pivot = Some(i);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        // swap rows r and p in both a and t
        if p != r {
            for j in 0..a.cols {
                let x = a.at(r, j).clone();
                let y = a.at(p, j).clone();
                a.set(r, j, y);
                a.set(p, j, x);
            }
            for j in 0..t.cols {
                let x = t.at(r, j).clone();
                let y = t.at(p, j).clone();
                t.set(r, j, y);
                t.set(p, j, x);
            }
        }
        let inv = f.inv(a.at(r, c)).unwrap();
        for j in 0..a.cols {
            let v = f.mul(a.at(r, j), &inv);
            a.set(r, j, v);
        }
        for j in 0..t.cols {
            let v = f.mul(t.at(r, j), &inv);
            t.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || f.is_zero(a.at(i, c)) {
                continue;
            }
            let factor = a.at(i, c).clone();
            for j in 0..a.cols {
                let v = f.sub(a.at(i, j), &f.mul(&factor, a.at(r, j)));
                a.set(i, j, v);
            }
            for j in 0..t.cols {
                let v = f.sub(t.at(i, j), &f.mul(&factor, t.at(r, j)));
                t.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        matrix: a,
        pivots,
        transform: t,
    }
}

pub fn rref(m: &Matrix) -> Rref {
    rref_with_transform(m)
}

/// A linear subspace of `k^ambient_dim`, stored as an RREF row basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the rows of `m`, reduced to a canonical RREF basis.
    pub fn from_rows(m: &Matrix) -> Subspace {
        let r = rref(m);
        let rank = r.pivots.len();
        Subspace {
            ambient_dim: m.cols,
            basis: r.matrix.submatrix(0, rank, 0, m.cols),
            pivots: r.pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field
    }

    /// Coordinates of `v` against the basis rows, if `v` lies in the span.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = self.field();
        assert_eq!(v.len(), self.ambient_dim);
        let mut residual = v.to_vec();
        let mut coords = vec![f.zero(); self.rank()];
        for (row, &pc) in self.pivots.iter().enumerate() {
            let c = residual[pc].clone();
            if f.is_zero(&c) {
                continue;
            }
            for j in 0..self.ambient_dim {
                residual[j] = f.sub(&residual[j], &f.mul(&c, self.basis.at(row, j)));
            }
            coords[row] = c;
        }
        if residual.iter().all(|x| f.is_zero(x)) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.coords_of(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        (0..other.basis.rows).all(|i| self.contains_vector(&other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::from_rows(&self.basis.vstack(&other.basis))
    }

    /// Intersection computed via the kernel of the stacked basis.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let stacked = self.basis.vstack(&other.basis);
        let ker = kernel_basis(&stacked);
        // rows (u, w) with u*B1 + w*B2 = 0; intersection vectors are u*B1
        let r1 = self.basis.rows;
        let mut rows = Vec::new();
        for i in 0..ker.basis.rows {
            let u = Matrix::from_rows(self.field(), vec![ker.basis.row(i)[..r1].to_vec()]);
            rows.push(u.mul(&self.basis).row(0));
        }
        if rows.is_empty() {
            return Subspace::zero(self.field(), self.ambient_dim);
        }
        Subspace::from_rows(&Matrix::from_rows(self.field(), rows))
    }
}

/// Left kernel `{ v : v * m = 0 }` as a subspace of `k^rows(m)`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let f = m.field;
    // Row-reduce [m | I]; rows whose m-part vanished record kernel combinations.
    let aug = m.hstack(&Matrix::identity(f, m.rows));
    let r = rref(&aug);
    let mut rows = Vec::new();
    for i in 0..m.rows {
        let left_zero = (0..m.cols).all(|j| f.is_zero(r.matrix.at(i, j)));
        if left_zero {
            let right = (m.cols..m.cols + m.rows)
                .map(|j| r.matrix.at(i, j).clone())
                .collect::<Vec<_>>();
            if right.iter().any(|x| !f.is_zero(x)) {
                rows.push(right);
            }
        }
    }
    if rows.is_empty() {
        return Subspace::zero(f, m.rows);
    }
    Subspace::from_rows(&Matrix::from_rows(f, rows))
}

/// Solves `x * m = v` for a single row vector `v`; returns `x` if solvable.
pub fn solve_left(m: &Matrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    let f = m.field;
    assert_eq!(v.len(), m.cols);
    let r = rref_with_transform(m);
    let mut residual = v.to_vec();
    let mut x = vec![f.zero(); m.rows];
    for (row, &pc) in r.pivots.iter().enumerate() {
        let c = residual[pc].clone();
        if f.is_zero(&c) {
            continue;
        }
        for j in 0..m.cols {
            residual[j] = f.sub(&residual[j], &f.mul(&c, r.matrix.at(row, j)));
        }
        for j in 0..m.rows {
            x[j] = f.add(&x[j], &f.mul(&c, r.transform.at(row, j)));
        }
    }
    if residual.iter().all(|s| f.is_zero(s)) {
        Some(x)
    } else {
        None
    }
}

/// Factors `f` through `g`: returns `h` with `h * g = f` when it exists.
/// `f : a x c`, `g : b x c` are maps into a common target.
pub fn solve_factorization(f: &Matrix, g: &Matrix) -> Result<Option<Matrix>> {
    if f.cols != g.cols {
        return Err(Error::Shape(format!(
            "targets differ: {} vs {}",
            f.cols, g.cols
        )));
    }
    let field = f.field;
    let mut rows = Vec::with_capacity(f.rows);
    for i in 0..f.rows {
        match solve_left(g, &f.row(i)) {
            Some(x) => rows.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(Matrix::from_rows(field, rows)))
}

/// Pullback of `f : a x c` and `g : b x c`: the subspace of `k^(a+b)` of pairs
/// `(u, v)` with `u*f = v*g`, together with the two projection matrices.
pub fn pullback_pair(f: &Matrix, g: &Matrix) -> Result<(Subspace, Matrix, Matrix)> {
    if f.cols != g.cols {
        return Err(Error::Shape(format!(
            "targets differ: {} vs {}",
            f.cols, g.cols
        )));
    }
    let stacked = f.vstack(&g.neg());
    let sub = kernel_basis(&stacked);
    let p = sub.basis.rows;
    let proj1 = sub.basis.submatrix(0, p, 0, f.rows);
    let proj2 = sub.basis.submatrix(0, p, f.rows, f.rows + g.rows);
    Ok((sub, proj1, proj2))
}

/// Quotient of the ambient space `k^n` by a subspace: `proj` sends a vector to
/// the coordinates of its normal form on the non-pivot columns, `sect` embeds
/// representatives back. `sect * proj = id` on the quotient.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ambient_dim: usize,
    pub dim: usize,
    pub proj: Matrix,
    pub sect: Matrix,
}

impl Quotient {
    pub fn by(sub: &Subspace) -> Quotient {
        let f = sub.field();
        let n = sub.ambient_dim;
        let free: Vec<usize> = (0..n).filter(|c| !sub.pivots.contains(c)).collect();
        let q = free.len();
        let mut proj = Matrix::zeros(f, n, q);
        // normal form of e_c: subtract pivot rows, read free coordinates
        for c in 0..n {
            if let Some(k) = sub.pivots.iter().position(|&p| p == c) {
                // e_c = basis row k + (free part); nf(e_c) = e_c - row_k has
                // free coords equal to -row_k on free columns
                for (jq, &fc) in free.iter().enumerate() {
                    proj.set(c, jq, f.neg(sub.basis.at(k, fc)));
                }
            } else {
                let jq = free.iter().position(|&fc| fc == c).unwrap();
                proj.set(c, jq, f.one());
            }
        }
        let mut sect = Matrix::zeros(f, q, n);
        for (jq, &fc) in free.iter().enumerate() {
            sect.set(jq, fc, f.one());
        }
        Quotient {
            ambient_dim: n,
            dim: q,
            proj,
            sect,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let m = Matrix::identity(q(), 3);
        assert_eq!(kernel_basis(&m).rank(), 0);
    }

    #[test]
    fn kernel_of_zero_is_full() {
        let m = Matrix::zeros(q(), 2, 2);
        assert_eq!(kernel_basis(&m).rank(), 2);
    }

    #[test]
    fn kernel_of_ones_matrix() {
        // [[1,1],[1,1]] has left kernel spanned by (1,-1)
        let m = Matrix::from_ints(q(), &[&[1, 1], &[1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.rank(), 1);
        let v: Vec<i64> = k.basis.row(0).iter().map(|s| s.as_i64().unwrap()).collect();
        assert_eq!(v, vec![1, -1]);
    }

    #[test]
    fn rank_nullity() {
        let m = Matrix::from_ints(q(), &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.rank() + m.rank(), m.rows);
    }

    #[test]
    fn factorization_identity_and_zero() {
        let g = Matrix::from_ints(q(), &[&[1, 0], &[1, 1]]);
        let h = solve_factorization(&g, &g).unwrap().unwrap();
        assert_eq!(h, Matrix::identity(q(), 2));
        let z = Matrix::zeros(q(), 3, 2);
        let h0 = solve_factorization(&z, &g).unwrap().unwrap();
        assert!(h0.is_zero());
    }

    #[test]
    fn factorization_scalar_division() {
        let f = Matrix::from_ints(q(), &[&[2]]);
        let g = Matrix::from_ints(q(), &[&[1]]);
        let h = solve_factorization(&f, &g).unwrap().unwrap();
        assert_eq!(h.at(0, 0).as_i64(), Some(2));
    }

    #[test]
    fn factorization_unsolvable() {
        let f = Matrix::from_ints(q(), &[&[1, 0]]);
        let g = Matrix::from_ints(q(), &[&[0, 1]]);
        assert!(solve_factorization(&f, &g).unwrap().is_none());
    }

    #[test]
    fn factorization_shape_error() {
        let f = Matrix::from_ints(q(), &[&[1, 0]]);
        let g = Matrix::from_ints(q(), &[&[1]]);
        assert!(solve_factorization(&f, &g).is_err());
    }

    #[test]
    fn pullback_of_identities_is_diagonal() {
        let id = Matrix::identity(q(), 2);
        let (sub, p1, p2) = pullback_pair(&id, &id).unwrap();
        assert_eq!(sub.rank(), 2);
        // composition with f and g agree
        assert_eq!(p1.mul(&id), p2.mul(&id));
    }

    #[test]
    fn pullback_with_zero_second_leg() {
        let f = Matrix::from_ints(q(), &[&[1, 1], &[1, 1]]);
        let g = Matrix::zeros(q(), 3, 2);
        let (sub, _, _) = pullback_pair(&f, &g).unwrap();
        // ker f (dim 1) plus full second factor (dim 3)
        assert_eq!(sub.rank(), 4);
    }

    #[test]
    fn pullback_transverse_lines_is_zero() {
        let f = Matrix::from_ints(q(), &[&[1, 0]]);
        let g = Matrix::from_ints(q(), &[&[0, 1]]);
        let (sub, _, _) = pullback_pair(&f, &g).unwrap();
        assert_eq!(sub.rank(), 0);
    }

    #[test]
    fn quotient_projection_section() {
        let sub = Subspace::from_rows(&Matrix::from_ints(q(), &[&[1, 1, 0]]));
        let quo = Quotient::by(&sub);
        assert_eq!(quo.dim, 2);
        let id = quo.sect.mul(&quo.proj);
        assert_eq!(id, Matrix::identity(q(), 2));
        // e_0 and -e_1 agree in the quotient
        let e0 = Matrix::from_ints(q(), &[&[1, 0, 0]]).mul(&quo.proj);
        let e1n = Matrix::from_ints(q(), &[&[0, -1, 0]]).mul(&quo.proj);
        assert_eq!(e0, e1n);
    }

    #[test]
    fn subspace_intersection() {
        let a = Subspace::from_rows(&Matrix::from_ints(q(), &[&[1, 0, 0], &[0, 1, 0]]));
        let b = Subspace::from_rows(&Matrix::from_ints(q(), &[&[0, 1, 0], &[0, 0, 1]]));
        let c = a.intersect(&b);
        assert_eq!(c.rank(), 1);
        assert!(c.contains_vector(&[q().from_int(0), q().from_int(5), q().from_int(0)]));
    }

    #[test]
    fn solve_left_basic() {
        let m = Matrix::from_ints(q(), &[&[1, 2], &[0, 1]]);
        let v = vec![q().from_int(1), q().from_int(3)];
        let x = solve_left(&m, &v).unwrap();
        let xm = Matrix::from_rows(q(), vec![x]).mul(&m);
        assert_eq!(xm.row(0), v);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_ints(q(), &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q(), 2));
        assert_eq!(inv.mul(&m), Matrix::identity(q(), 2));
    }
}
