//! Finite-dimensional basic split algebras presented by quivers with
//! admissible relations, stored as structure constants with known primitive
//! idempotents and radical.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{kernel_basis, Matrix, Quotient, Subspace};
use crate::poly::Poly;
use crate::quiver::{enumerate_paths, Path, Quiver, Relation};

/// Structure constants plus the presentation bookkeeping every other module
/// of the crate relies on: primitive idempotents (trivial paths), the radical
/// (span of the positive-length basis classes) and a generating set.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// mul[i][j] = coordinates of b_i * b_j in the basis
    pub mul: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
    /// basis indices of the primitive orthogonal idempotents
    pub idempotents: Vec<usize>,
    /// display names aligned with `idempotents` (vertex names)
    pub idempotent_names: Vec<String>,
    pub radical: Subspace,
    /// basis indices generating the algebra as a unital algebra
    pub generators: Vec<usize>,
    pub is_opposite: bool,
}

impl Algebra {
    pub fn structurally_equal(a: &Algebra, b: &Algebra) -> bool {
        a.field == b.field && a.dim == b.dim && a.mul == b.mul
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[i] = self.field.one();
        v
    }

    pub fn mul_vecs(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = self.zero_vec();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, t) in self.mul[i][j].iter().enumerate() {
                    if !f.is_zero(t) {
                        out[k] = f.add(&out[k], &f.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    /// Row-convention operator of left multiplication: `v * L = x * v`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        Matrix::from_rows(
            self.field,
            (0..self.dim)
                .map(|i| self.mul_vecs(x, &self.basis_vec(i)))
                .collect(),
        )
    }

    /// Row-convention operator of right multiplication: `v * R = v * x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        Matrix::from_rows(
            self.field,
            (0..self.dim)
                .map(|i| self.mul_vecs(&self.basis_vec(i), x))
                .collect(),
        )
    }

    pub fn idempotent_vec(&self, e: usize) -> Vec<Scalar> {
        self.basis_vec(self.idempotents[e])
    }

    pub fn num_vertices(&self) -> usize {
        self.idempotents.len()
    }

    /// Transposed structure constants. Involutive.
    pub fn opposite(&self) -> Algebra {
        let mut mul = vec![vec![Vec::new(); self.dim]; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                mul[i][j] = self.mul[j][i].clone();
            }
        }
        Algebra {
            field: self.field,
            dim: self.dim,
            basis_labels: self.basis_labels.clone(),
            mul,
            unit: self.unit.clone(),
            idempotents: self.idempotents.clone(),
            idempotent_names: self.idempotent_names.clone(),
            radical: self.radical.clone(),
            generators: self.generators.clone(),
            is_opposite: !self.is_opposite,
        }
    }

    pub fn as_abstract(&self) -> AbstractAlgebra {
        AbstractAlgebra {
            field: self.field,
            dim: self.dim,
            mul: self.mul.clone(),
            unit: self.unit.clone(),
        }
    }

    /// Full axiom check: associativity, unit, idempotent axioms, radical is a
    /// nilpotent two-sided ideal. Structure constants are sparse in practice,
    /// which keeps the triple loop affordable.
    pub fn validate(&self) -> Result<()> {
        let f = self.field;
        let d = self.dim;
        if self.mul.len() != d || self.mul.iter().any(|r| r.len() != d) {
            return Err(Error::Validation("structure constant table shape".into()));
        }
        for i in 0..d {
            for j in 0..d {
                if self.mul[i][j].len() != d {
                    return Err(Error::Validation("structure constant vector shape".into()));
                }
            }
        }
        // unit
        for i in 0..d {
            let b = self.basis_vec(i);
            if self.mul_vecs(&self.unit, &b) != b || self.mul_vecs(&b, &self.unit) != b {
                return Err(Error::Validation("unit is not a two-sided identity".into()));
            }
        }
        // associativity (b_i b_j) b_k = b_i (b_j b_k)
        for i in 0..d {
            for j in 0..d {
                let ij = &self.mul[i][j];
                for k in 0..d {
                    let mut lhs = self.zero_vec();
                    for (t, c) in ij.iter().enumerate() {
                        if f.is_zero(c) {
                            continue;
                        }
                        for (s, u) in self.mul[t][k].iter().enumerate() {
                            if !f.is_zero(u) {
                                lhs[s] = f.add(&lhs[s], &f.mul(c, u));
                            }
                        }
                    }
                    let jk = &self.mul[j][k];
                    let mut rhs = self.zero_vec();
                    for (t, c) in jk.iter().enumerate() {
                        if f.is_zero(c) {
                            continue;
                        }
                        for (s, u) in self.mul[i][t].iter().enumerate() {
                            if !f.is_zero(u) {
                                rhs[s] = f.add(&rhs[s], &f.mul(c, u));
                            }
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::Validation(format!(
                            "associativity fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        // idempotents: orthogonal, square to themselves, sum to the unit
        let mut sum = self.zero_vec();
        for (a, &ea) in self.idempotents.iter().enumerate() {
            let va = self.basis_vec(ea);
            for (b, &eb) in self.idempotents.iter().enumerate() {
                let prod = self.mul_vecs(&va, &self.basis_vec(eb));
                let expect = if a == b { va.clone() } else { self.zero_vec() };
                if prod != expect {
                    return Err(Error::Validation("idempotents not orthogonal".into()));
                }
            }
            for (k, c) in va.iter().enumerate() {
                sum[k] = f.add(&sum[k], c);
            }
        }
        if sum != self.unit {
            return Err(Error::Validation("idempotents do not sum to the unit".into()));
        }
        // radical: two-sided ideal
        for r in 0..self.radical.basis.rows {
            let rv = self.radical.basis.row(r);
            for g in 0..d {
                let b = self.basis_vec(g);
                if !self.radical.contains_vector(&self.mul_vecs(&rv, &b))
                    || !self.radical.contains_vector(&self.mul_vecs(&b, &rv))
                {
                    return Err(Error::Validation("radical is not an ideal".into()));
                }
            }
        }
        // radical: nilpotent
        let mut power = self.radical.clone();
        for _ in 0..=d {
            if power.rank() == 0 {
                break;
            }
            power = self.ideal_product(&power, &self.radical);
        }
        if power.rank() != 0 {
            return Err(Error::Validation("radical is not nilpotent".into()));
        }
        // primitivity: e_i A e_i modulo radical is one dimensional
        for &e in &self.idempotents {
            let ev = self.basis_vec(e);
            let mut rows = Vec::new();
            for t in 0..d {
                let x = self.mul_vecs(&self.mul_vecs(&ev, &self.basis_vec(t)), &ev);
                rows.push(x);
            }
            let corner = Subspace::from_rows(&Matrix::from_rows(f, rows));
            let meet = corner.intersect(&self.radical);
            if corner.rank() != meet.rank() + 1 {
                return Err(Error::Validation("idempotent not primitive".into()));
            }
        }
        Ok(())
    }

    fn ideal_product(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..a.basis.rows {
            for j in 0..b.basis.rows {
                rows.push(self.mul_vecs(&a.basis.row(i), &b.basis.row(j)));
            }
        }
        if rows.is_empty() {
            return Subspace::zero(self.field, self.dim);
        }
        Subspace::from_rows(&Matrix::from_rows(self.field, rows))
    }

    /// The ground field viewed as the one-vertex, arrowless quiver algebra.
    pub fn ground_field(field: FieldSpec) -> Algebra {
        let q = Quiver::new(vec!["pt".into()], vec![]).unwrap();
        build_path_algebra(field, &q, &[], None).unwrap()
    }
}

struct PathTable {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl PathTable {
    fn new(paths: Vec<Path>) -> PathTable {
        let index = paths
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        PathTable { paths, index }
    }
}

/// Builds the path algebra of `q` modulo the two-sided ideal generated by
/// `relations` (and by all paths of length >= `nilpotency_bound`, if given).
///
/// For a cyclic quiver without an explicit bound the construction retries
/// with growing internal caps and accepts only when some path length is
/// certified to vanish modulo the ideal, which is sound for admissible
/// ideals; otherwise the quotient is reported infinite dimensional.
pub fn build_path_algebra(
    field: FieldSpec,
    q: &Quiver,
    relations: &[Relation],
    nilpotency_bound: Option<usize>,
) -> Result<Algebra> {
    for rel in relations {
        rel.validate(q)?;
    }
    if let Some(b) = nilpotency_bound {
        if b < 2 {
            return Err(Error::InadmissibleRelation(
                "nilpotency bound must be at least 2".into(),
            ));
        }
        return build_with_cap(field, q, relations, b, true);
    }
    if !q.has_oriented_cycle() {
        let cap = q.longest_path_len() + 1;
        return build_with_cap(field, q, relations, cap, false);
    }
    // cyclic without bound: grow the cap until a vanishing length certifies
    // finite dimensionality
    for cap in [4usize, 8, 16, 32, 64] {
        if let Some(alg) = try_build_cyclic(field, q, relations, cap)? {
            return Ok(alg);
        }
    }
    Err(Error::InfiniteDimensional(
        "oriented cycle and no certified nilpotent length; pass a nilpotency bound".into(),
    ))
}

/// Saturates the relation ideal inside the span of paths of length < cap and
/// returns (paths, ideal subspace). Terms reaching the cap are dropped, which
/// is correct exactly when all paths of length >= cap lie in the ideal.
fn saturate(
    field: FieldSpec,
    q: &Quiver,
    relations: &[Relation],
    cap: usize,
) -> Result<(PathTable, Subspace)> {
    let paths = enumerate_paths(q, cap.saturating_sub(1))?;
    let table = PathTable::new(paths);
    let n = table.paths.len();
    let to_vec = |terms: &[(Scalar, Path)]| -> Vec<Scalar> {
        let mut v = vec![field.zero(); n];
        for (c, p) in terms {
            if p.len() < cap {
                let idx = table.index[p];
                v[idx] = field.add(&v[idx], c);
            }
        }
        v
    };
    let mut basis_rows: Vec<Vec<Scalar>> = Vec::new();
    let mut span = Subspace::zero(field, n);
    let mut worklist: Vec<Vec<(Scalar, Path)>> = Vec::new();
    let push = |terms: Vec<(Scalar, Path)>,
                    span: &mut Subspace,
                    basis_rows: &mut Vec<Vec<Scalar>>,
                    worklist: &mut Vec<Vec<(Scalar, Path)>>| {
        let v = to_vec(&terms);
        if v.iter().all(|c| field.is_zero(c)) {
            return;
        }
        if !span.contains_vector(&v) {
            basis_rows.push(v);
            *span = Subspace::from_rows(&Matrix::from_rows(field, basis_rows.clone()));
            worklist.push(terms);
        }
    };
    for rel in relations {
        push(rel.terms.clone(), &mut span, &mut basis_rows, &mut worklist);
    }
    while let Some(terms) = worklist.pop() {
        for (ai, arrow) in q.arrows.iter().enumerate() {
            let a_path = Path {
                source: arrow.source,
                arrows: vec![ai],
            };
            // arrow * terms
            let left: Vec<(Scalar, Path)> = terms
                .iter()
                .filter_map(|(c, p)| a_path.compose(p, q).map(|np| (c.clone(), np)))
                .collect();
            if !left.is_empty() {
                push(left, &mut span, &mut basis_rows, &mut worklist);
            }
            // terms * arrow
            let right: Vec<(Scalar, Path)> = terms
                .iter()
                .filter_map(|(c, p)| p.compose(&a_path, q).map(|np| (c.clone(), np)))
                .collect();
            if !right.is_empty() {
                push(right, &mut span, &mut basis_rows, &mut worklist);
            }
        }
    }
    Ok((table, span))
}

fn build_with_cap(
    field: FieldSpec,
    q: &Quiver,
    relations: &[Relation],
    cap: usize,
    _bounded: bool,
) -> Result<Algebra> {
    let (table, ideal) = saturate(field, q, relations, cap)?;
    Ok(assemble(field, q, &table, &ideal, cap))
}

fn try_build_cyclic(
    field: FieldSpec,
    q: &Quiver,
    relations: &[Relation],
    cap: usize,
) -> Result<Option<Algebra>> {
    let (table, ideal) = saturate(field, q, relations, cap)?;
    // certificate: some length l < cap with every length-l path in the ideal
    let mut vanishing: Option<usize> = None;
    'lens: for l in 1..cap {
        let mut any = false;
        for (i, p) in table.paths.iter().enumerate() {
            if p.len() == l {
                any = true;
                let mut v = vec![field.zero(); table.paths.len()];
                v[i] = field.one();
                if !ideal.contains_vector(&v) {
                    continue 'lens;
                }
            }
        }
        if any {
            vanishing = Some(l);
            break;
        }
    }
    match vanishing {
        None => Ok(None),
        Some(_) => Ok(Some(assemble(field, q, &table, &ideal, cap))),
    }
}

fn assemble(
    field: FieldSpec,
    q: &Quiver,
    table: &PathTable,
    ideal: &Subspace,
    cap: usize,
) -> Algebra {
    let quo = Quotient::by(ideal);
    let n = table.paths.len();
    let dim = quo.dim;
    // representative path for each quotient coordinate (non-pivot column)
    let mut rep_paths = Vec::with_capacity(dim);
    for jq in 0..dim {
        let row = quo.sect.row(jq);
        let c = (0..n).position(|k| !field.is_zero(&row[k])).unwrap();
        rep_paths.push(table.paths[c].clone());
    }
    let basis_labels: Vec<String> = rep_paths.iter().map(|p| p.label(q)).collect();
    // multiplication: concatenate representatives and reduce
    let mut mul = vec![vec![vec![]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let prod = rep_paths[i].compose(&rep_paths[j], q);
            let coords = match prod {
                None => vec![field.zero(); dim],
                Some(p) => {
                    if p.len() >= cap {
                        vec![field.zero(); dim]
                    } else {
                        let mut v = vec![field.zero(); n];
                        v[table.index[&p]] = field.one();
                        Matrix::from_rows(field, vec![v]).mul(&quo.proj).row(0)
                    }
                }
            };
            mul[i][j] = coords;
        }
    }
    let mut unit = vec![field.zero(); dim];
    let mut idempotents = Vec::new();
    let mut idempotent_names = Vec::new();
    let mut generators = Vec::new();
    for (i, p) in rep_paths.iter().enumerate() {
        if p.is_trivial() {
            unit[i] = field.one();
            idempotents.push(i);
            idempotent_names.push(q.vertices[p.source].clone());
            generators.push(i);
        } else if p.len() == 1 {
            generators.push(i);
        }
    }
    let radical_rows: Vec<Vec<Scalar>> = rep_paths
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_trivial())
        .map(|(i, _)| {
            let mut v = vec![field.zero(); dim];
            v[i] = field.one();
            v
        })
        .collect();
    let radical = Subspace::from_rows(&Matrix::from_rows(field, radical_rows));
    Algebra {
        field,
        dim,
        basis_labels,
        mul,
        unit,
        idempotents,
        idempotent_names,
        radical,
        generators,
        is_opposite: false,
    }
}

/// Bare structure constants, e.g. an endomorphism algebra on a hom basis.
#[derive(Clone, Debug)]
pub struct AbstractAlgebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub mul: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
}

impl AbstractAlgebra {
    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[i] = self.field.one();
        v
    }

    pub fn mul_vecs(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = self.zero_vec();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, t) in self.mul[i][j].iter().enumerate() {
                    if !f.is_zero(t) {
                        out[k] = f.add(&out[k], &f.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        Matrix::from_rows(
            self.field,
            (0..self.dim)
                .map(|i| self.mul_vecs(x, &self.basis_vec(i)))
                .collect(),
        )
    }

    /// Jacobson radical. Characteristic zero uses the trace form of the left
    /// regular representation; characteristic p uses the iterated chain of
    /// characteristic-polynomial coefficient forms c_{p^i}, which is linear
    /// over the prime field.
    pub fn radical(&self) -> Result<Subspace> {
        let f = self.field;
        let n = self.dim;
        if n == 0 {
            return Ok(Subspace::zero(f, 0));
        }
        let left: Vec<Matrix> = (0..n).map(|i| self.left_mult_matrix(&self.basis_vec(i))).collect();
        match f.characteristic() {
            0 => {
                let mut gram = Matrix::zeros(f, n, n);
                for i in 0..n {
                    for j in 0..n {
                        let prod = left[i].mul(&left[j]);
                        let mut tr = f.zero();
                        for k in 0..n {
                            tr = f.add(&tr, prod.at(k, k));
                        }
                        gram.set(i, j, tr);
                    }
                }
                Ok(kernel_basis(&gram))
            }
            p => {
                // iterated coefficient forms over F_p
                let mut current = Matrix::identity(f, n); // rows = basis of current ideal
                let mut q: u64 = 1;
                while q <= n as u64 && current.rows > 0 {
                    let m = current.rows;
                    let mut gram = Matrix::zeros(f, m, m);
                    for s in 0..m {
                        let ls = mult_operator(&left, &current.row(s), f);
                        for t in 0..m {
                            let lt = mult_operator(&left, &current.row(t), f);
                            let prod = ls.mul(&lt);
                            let chi = berkowitz_charpoly(&prod);
                            // chi = t^n + a_1 t^{n-1} + ... ; take a_q
                            gram.set(s, t, chi[q as usize].clone());
                        }
                    }
                    let ker = kernel_basis(&gram);
                    current = ker.basis.mul(&current);
                    q *= p;
                }
                Ok(Subspace::from_rows(&current))
            }
        }
    }

    /// Quotient algebra by a two-sided ideal, with projection and section.
    pub fn quotient(&self, ideal: &Subspace) -> (AbstractAlgebra, Quotient) {
        let quo = Quotient::by(ideal);
        let d = quo.dim;
        let mut mul = vec![vec![vec![]; d]; d];
        for i in 0..d {
            let bi = quo.sect.row(i);
            for j in 0..d {
                let bj = quo.sect.row(j);
                let prod = self.mul_vecs(&bi, &bj);
                mul[i][j] = Matrix::from_rows(self.field, vec![prod]).mul(&quo.proj).row(0);
            }
        }
        let unit = Matrix::from_rows(self.field, vec![self.unit.clone()])
            .mul(&quo.proj)
            .row(0);
        (
            AbstractAlgebra {
                field: self.field,
                dim: d,
                mul,
                unit,
            },
            quo,
        )
    }

    /// Minimal polynomial of an element (monic generator of its annihilator).
    pub fn min_poly(&self, x: &[Scalar]) -> Poly {
        let f = self.field;
        let mut powers: Vec<Vec<Scalar>> = vec![self.unit.clone()];
        loop {
            let last = powers.last().unwrap();
            let next = self.mul_vecs(last, x);
            let m = Matrix::from_rows(f, powers.clone());
            if let Some(coords) = crate::linalg::solve_left(&m, &next) {
                // next = sum coords_i * x^i  =>  minpoly = t^k - sum coords_i t^i
                let mut c: Vec<Scalar> = coords.iter().map(|a| f.neg(a)).collect();
                c.push(f.one());
                return Poly::new(f, c);
            }
            powers.push(next);
            assert!(powers.len() <= self.dim + 1, "minimal polynomial overflow");
        }
    }
}

fn mult_operator(left: &[Matrix], coords: &[Scalar], f: FieldSpec) -> Matrix {
    let n = left[0].rows;
    let mut out = Matrix::zeros(f, n, n);
    for (i, c) in coords.iter().enumerate() {
        if !f.is_zero(c) {
            out = out.add(&left[i].scale(c));
        }
    }
    out
}

/// Division-free characteristic polynomial, Berkowitz's algorithm.
/// Returns coefficients `[1, a_1, ..., a_n]` of `det(tI - A) = t^n + a_1
/// t^{n-1} + ... + a_n`.
pub fn berkowitz_charpoly(a: &Matrix) -> Vec<Scalar> {
    let f = a.field;
    let n = a.rows;
    assert_eq!(n, a.cols);
    if n == 0 {
        return vec![f.one()];
    }
    let mut c = vec![f.one(), f.neg(a.at(0, 0))];
    for r in 2..=n {
        // principal r x r block: A_{r-1}, row R, column S, corner a_rr
        let ar1 = a.submatrix(0, r - 1, 0, r - 1);
        let row = a.submatrix(r - 1, r, 0, r - 1);
        let col = a.submatrix(0, r - 1, r - 1, r);
        let corner = a.at(r - 1, r - 1).clone();
        // first column of the Toeplitz matrix: 1, -a_rr, -R S, -R A S, ...
        let mut tcol = vec![f.one(), f.neg(&corner)];
        let mut acc = col.clone();
        for _ in 0..(r - 1) {
            let val = row.mul(&acc);
            tcol.push(f.neg(val.at(0, 0)));
            acc = ar1.mul(&acc);
        }
        let mut next = vec![f.zero(); r + 1];
        for (i, item) in next.iter_mut().enumerate() {
            let mut acc_s = f.zero();
            for (j, cj) in c.iter().enumerate() {
                if i >= j && i - j < tcol.len() {
                    acc_s = f.add(&acc_s, &f.mul(&tcol[i - j], cj));
                }
            }
            *item = acc_s;
        }
        c = next;
    }
    c
}

/// Jacobson radical of an abstract algebra (typically an endomorphism
/// algebra). Valid over the rationals and over prime fields.
pub fn radical_of_endo_algebra(e: &AbstractAlgebra) -> Result<Subspace> {
    e.radical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn dual_numbers_dim_and_table() {
        let a = presets::t1(q());
        assert_eq!(a.dim, 2);
        assert_eq!(a.basis_labels, vec!["e_1", "x"]);
        // x * x = 0
        assert!(a.mul[1][1].iter().all(|c| q().is_zero(c)));
        a.validate().unwrap();
    }

    #[test]
    fn a2_dim_three() {
        let a = presets::t2(q());
        assert_eq!(a.dim, 3);
        assert_eq!(a.basis_labels, vec!["e_1", "e_2", "a"]);
        a.validate().unwrap();
    }

    #[test]
    fn truncated_loop_dim_three() {
        let quiv = Quiver::new(
            vec!["1".into()],
            vec![("x".into(), "1".into(), "1".into())],
        )
        .unwrap();
        let a = build_path_algebra(q(), &quiv, &[], Some(3)).unwrap();
        assert_eq!(a.dim, 3);
        assert_eq!(a.basis_labels, vec!["e_1", "x", "x*x"]);
        a.validate().unwrap();
    }

    #[test]
    fn commutative_square_dim_nine() {
        let a = presets::t4(q());
        assert_eq!(a.dim, 9);
        a.validate().unwrap();
    }

    #[test]
    fn cyclic_without_bound_needs_relation() {
        let quiv = Quiver::new(
            vec!["1".into()],
            vec![("x".into(), "1".into(), "1".into())],
        )
        .unwrap();
        assert!(matches!(
            build_path_algebra(q(), &quiv, &[], None),
            Err(Error::InfiniteDimensional(_))
        ));
    }

    #[test]
    fn dual_numbers_from_relation_without_bound() {
        // relation x*x alone certifies finiteness
        let a = presets::t1(q());
        assert_eq!(a.dim, 2);
    }

    #[test]
    fn opposite_is_involutive_and_matches_reversed_quiver() {
        let a = presets::t2(q());
        let op = a.opposite();
        let opop = op.opposite();
        assert_eq!(a.mul, opop.mul);
        // compare against the path algebra of the reversed quiver
        let rev = presets::a2_reversed(q());
        assert_eq!(op.mul, rev.mul);
        // commutative algebra is its own opposite
        let t1 = presets::t1(q());
        assert_eq!(t1.mul, t1.opposite().mul);
    }

    #[test]
    fn corrupted_table_fails_validation() {
        let mut a = presets::t1(q());
        // make x * x = e, breaking nilpotency of the radical
        a.mul[1][1][0] = q().one();
        assert!(a.validate().is_err());
    }

    #[test]
    fn radical_of_dual_numbers() {
        let a = presets::t1(q());
        let rad = radical_of_endo_algebra(&a.as_abstract()).unwrap();
        assert_eq!(rad.rank(), 1);
        assert!(rad.contains_vector(&a.basis_vec(1)));
    }

    #[test]
    fn radical_of_matrix_algebra_is_zero() {
        // 2x2 matrix algebra: basis e11, e12, e21, e22
        let f = q();
        let idx = |i: usize, j: usize| i * 2 + j;
        let mut mul = vec![vec![vec![f.zero(); 4]; 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        if j == k {
                            mul[idx(i, j)][idx(k, l)][idx(i, l)] = f.one();
                        }
                    }
                }
            }
        }
        let mut unit = vec![f.zero(); 4];
        unit[idx(0, 0)] = f.one();
        unit[idx(1, 1)] = f.one();
        let e = AbstractAlgebra {
            field: f,
            dim: 4,
            mul,
            unit,
        };
        assert_eq!(e.radical().unwrap().rank(), 0);
    }

    #[test]
    fn radical_is_idempotent_computation() {
        let a = presets::t3(q()).as_abstract();
        let rad = a.radical().unwrap();
        assert_eq!(rad.rank(), 2);
        let (quo, _) = a.quotient(&rad);
        assert_eq!(quo.radical().unwrap().rank(), 0);
    }

    #[test]
    fn path_algebra_radical_matches_endo_radical() {
        for alg in [presets::t1(q()), presets::t2(q()), presets::t3(q()), presets::t4(q())] {
            let rad = alg.as_abstract().radical().unwrap();
            assert_eq!(rad.rank(), alg.radical.rank());
            assert!(alg.radical.contains(&rad) && rad.contains(&alg.radical));
        }
    }

    #[test]
    fn radical_char_p_matches_char_zero_shape() {
        for p in [2u64, 3, 5] {
            let f = FieldSpec::PrimeField(p);
            for alg in [presets::t1(f), presets::t2(f), presets::t3(f), presets::t4(f)] {
                let rad = alg.as_abstract().radical().unwrap();
                assert_eq!(rad.rank(), alg.radical.rank(), "p = {p}");
                assert!(alg.radical.contains(&rad));
            }
        }
    }

    #[test]
    fn berkowitz_matches_known_charpoly() {
        let m = Matrix::from_ints(q(), &[&[2, 1], &[0, 3]]);
        let chi = berkowitz_charpoly(&m);
        // t^2 - 5t + 6
        let vals: Vec<i64> = chi.iter().map(|c| c.as_i64().unwrap()).collect();
        assert_eq!(vals, vec![1, -5, 6]);
        // Cayley-Hamilton over F_7
        let f7 = FieldSpec::PrimeField(7);
        let m = Matrix::from_ints(f7, &[&[1, 2, 3], &[4, 5, 6], &[0, 1, 2]]);
        let chi = berkowitz_charpoly(&m);
        let p = Poly::new(f7, chi.into_iter().rev().collect());
        assert!(p.eval_matrix(&m).is_zero());
    }

    #[test]
    fn min_poly_of_nilpotent() {
        let a = presets::t3(q()).as_abstract();
        let x = a.basis_vec(1);
        let mp = a.min_poly(&x);
        assert_eq!(mp.degree(), 3); // x^3 = 0, x^2 != 0
        assert!(a.min_poly(&a.unit).degree() == 1);
    }
}
