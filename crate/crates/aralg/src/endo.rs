//! Endomorphism algebras, locality, direct-sum decomposition by idempotent
//! lifting, and explicit isomorphism search between modules.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AbstractAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel_basis, Matrix, Subspace};
use crate::module::{hom_coords, hom_space, Module};
use crate::poly::{egcd, root_refined_pieces, Poly};

/// End(m) on a hom-space basis; the product is "apply first, then second",
/// matching right-module composition.
pub struct EndAlgebra {
    pub algebra: AbstractAlgebra,
    pub basis: Vec<Matrix>,
    pub radical: Subspace,
    pub is_local: bool,
    pub identity: Vec<Scalar>,
}

impl EndAlgebra {
    /// Matrix realizing an element given by coordinates.
    pub fn realize(&self, coords: &[Scalar]) -> Matrix {
        let f = self.algebra.field;
        let d = self.basis.first().map(|b| b.rows).unwrap_or(0);
        let mut out = Matrix::zeros(f, d, d);
        for (i, c) in coords.iter().enumerate() {
            if !f.is_zero(c) {
                out = out.add(&self.basis[i].scale(c));
            }
        }
        out
    }

    /// The residue functional: x = a id + r with r in the radical maps to a.
    /// Only defined when the algebra is local.
    pub fn residue_functional(&self) -> Result<Vec<Scalar>> {
        if !self.is_local {
            return Err(Error::NotIndecomposable);
        }
        let f = self.algebra.field;
        let n = self.algebra.dim;
        let mut rows = vec![self.identity.clone()];
        for i in 0..self.radical.basis.rows {
            rows.push(self.radical.basis.row(i));
        }
        let m = Matrix::from_rows(f, rows);
        let mut functional = Vec::with_capacity(n);
        for i in 0..n {
            let mut unit = vec![f.zero(); n];
            unit[i] = f.one();
            let coords = crate::linalg::solve_left(&m, &unit)
                .expect("local algebra decomposes as k.id + rad");
            functional.push(coords[0].clone());
        }
        Ok(functional)
    }
}

pub fn end_algebra(m: &Module) -> Result<EndAlgebra> {
    let f = m.algebra.field;
    let basis = hom_space(m, m)?;
    let n = basis.len();
    let mut mul = vec![vec![vec![]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let prod = basis[i].mul(&basis[j]);
            mul[i][j] = hom_coords(&basis, &prod).expect("endo product stays in the span");
        }
    }
    let identity = if m.dim == 0 {
        vec![]
    } else {
        hom_coords(&basis, &Matrix::identity(f, m.dim)).expect("identity is an endomorphism")
    };
    let algebra = AbstractAlgebra {
        field: f,
        dim: n,
        mul,
        unit: identity.clone(),
    };
    let radical = algebra.radical()?;
    let is_local = n > 0 && n - radical.rank() == 1;
    Ok(EndAlgebra {
        algebra,
        basis,
        radical,
        is_local,
        identity,
    })
}

pub fn is_indecomposable(m: &Module) -> Result<bool> {
    if m.dim == 0 {
        return Ok(false);
    }
    Ok(end_algebra(m)?.is_local)
}

/// Evaluates a polynomial on an element of an abstract algebra.
fn eval_in_algebra(alg: &AbstractAlgebra, p: &Poly, x: &[Scalar]) -> Vec<Scalar> {
    let f = alg.field;
    let mut acc = alg.zero_vec();
    for c in p.coeffs.iter().rev() {
        acc = alg.mul_vecs(&acc, x);
        if !f.is_zero(c) {
            for (k, u) in alg.unit.iter().enumerate() {
                acc[k] = f.add(&acc[k], &f.mul(c, u));
            }
        }
    }
    acc
}

fn is_idempotent(alg: &AbstractAlgebra, x: &[Scalar]) -> bool {
    alg.mul_vecs(x, x) == x.to_vec()
}

fn is_zero_vec(alg: &AbstractAlgebra, x: &[Scalar]) -> bool {
    x.iter().all(|c| alg.field.is_zero(c))
}

/// Searches the semisimple quotient for a nontrivial idempotent by splitting
/// minimal polynomials of a deterministic candidate sequence, then lifts it
/// along the nilpotent radical by Newton iteration.
fn find_nontrivial_idempotent(end: &EndAlgebra) -> Result<Vec<Scalar>> {
    let alg = &end.algebra;
    let f = alg.field;
    let (quo, q) = alg.quotient(&end.radical);
    // candidate elements of the quotient, deterministic order first
    let mut candidates: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..quo.dim {
        candidates.push(quo.basis_vec(i));
    }
    // products of basis pairs often produce idempotent-like elements
    for i in 0..quo.dim {
        for j in 0..quo.dim {
            candidates.push(quo.mul_vecs(&quo.basis_vec(i), &quo.basis_vec(j)));
        }
    }
    for i in 0..quo.dim {
        for j in (i + 1)..quo.dim {
            for lambda in [1i64, 2, 3] {
                let mut v = quo.zero_vec();
                v[i] = f.one();
                v[j] = f.from_int(lambda);
                candidates.push(v);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..64 {
        let v: Vec<Scalar> = (0..quo.dim)
            .map(|_| f.from_int(rng.gen_range(-4i64..=4)))
            .collect();
        candidates.push(v);
    }
    for cand in candidates {
        if is_zero_vec(alg, &cand) {
            continue;
        }
        let mp = quo.min_poly(&cand);
        let pieces = root_refined_pieces(&mp);
        if pieces.len() < 2 {
            continue;
        }
        // CRT idempotent: e = (t * rest)(cand) with s*piece + t*rest = 1
        let piece = &pieces[0];
        let mut rest = Poly::one(f);
        for p in &pieces[1..] {
            rest = rest.mul(p);
        }
        let (g, _s, t) = egcd(piece, &rest);
        assert_eq!(g.degree(), 0, "pieces are coprime");
        let e_quo = eval_in_algebra(&quo, &t.mul(&rest), &cand);
        if is_zero_vec(&quo, &e_quo) || e_quo == quo.unit {
            continue;
        }
        debug_assert!(is_idempotent(&quo, &e_quo));
        // lift along the radical: e <- 3e^2 - 2e^3
        let mut e = Matrix::from_rows(f, vec![e_quo]).mul(&q.sect).row(0);
        for _ in 0..64 {
            if is_idempotent(alg, &e) {
                break;
            }
            let e2 = alg.mul_vecs(&e, &e);
            let e3 = alg.mul_vecs(&e2, &e);
            let three = f.from_int(3);
            let two = f.from_int(2);
            e = e2
                .iter()
                .zip(e3.iter())
                .map(|(a, b)| f.sub(&f.mul(&three, a), &f.mul(&two, b)))
                .collect();
        }
        if !is_idempotent(alg, &e) {
            return Err(Error::Decomposition(
                "idempotent lifting did not converge".into(),
            ));
        }
        if is_zero_vec(alg, &e) || e == alg.unit {
            continue;
        }
        return Ok(e);
    }
    Err(Error::Decomposition(
        "no splitting idempotent found for a non-local endomorphism algebra".into(),
    ))
}

/// Direct-sum decomposition into indecomposables with embedding matrices.
/// The embeddings stacked vertically form an isomorphism from the sum.
pub fn decompose_module(m: &Module) -> Result<Vec<(Module, Matrix)>> {
    let f = m.algebra.field;
    if m.dim == 0 {
        return Ok(Vec::new());
    }
    let end = end_algebra(m)?;
    if end.is_local {
        return Ok(vec![(m.clone(), Matrix::identity(f, m.dim))]);
    }
    let e = end.realize(&find_nontrivial_idempotent(&end)?);
    let image = Subspace::from_rows(&e);
    let kernel = kernel_basis(&e);
    assert_eq!(image.rank() + kernel.rank(), m.dim);
    let mut out = Vec::new();
    for part in [image, kernel] {
        let (sub, incl) = m.submodule(&part);
        for (piece, emb) in decompose_module(&sub)? {
            out.push((piece, emb.mul(&incl)));
        }
    }
    Ok(out)
}

/// An explicit isomorphism m -> n, if one exists. Complete when the modules
/// are indecomposable (pair products detect invertibility through a local
/// endomorphism algebra); randomized fallback otherwise.
pub fn find_iso(m: &Module, n: &Module) -> Option<Matrix> {
    if m.dim != n.dim || !crate::module::same_algebra(&m.algebra, &n.algebra) {
        return None;
    }
    let f = m.algebra.field;
    if m.dim == 0 {
        return Some(Matrix::zeros(f, 0, 0));
    }
    let homs = hom_space(m, n).ok()?;
    if homs.is_empty() {
        return None;
    }
    for h in &homs {
        if h.is_invertible() {
            return Some(h.clone());
        }
    }
    let back = hom_space(n, m).ok()?;
    for h in &homs {
        for g in &back {
            if h.mul(g).is_invertible() {
                return Some(h.clone());
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11a);
    for _ in 0..64 {
        let mut acc = Matrix::zeros(f, m.dim, n.dim);
        for h in &homs {
            let c = f.from_int(rng.gen_range(-3i64..=3));
            acc = acc.add(&h.scale(&c));
        }
        if acc.is_invertible() {
            return Some(acc);
        }
    }
    None
}

pub fn is_isomorphic(m: &Module, n: &Module) -> bool {
    find_iso(m, n).is_some()
}
