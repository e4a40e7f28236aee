//! Total Hom and total tensor complexes of k-spaces, with block bookkeeping,
//! and the totalized natural map from tensor-with-dual to Hom.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::complex::{ChainMap, Complex, Edge};
use crate::error::Result;
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::module::{
    hom_coords, hom_space, hom_to_regular_bimodule, tensor_over_algebra, Bimodule, Ctx, Module,
    TensorModule,
};

fn ground_module(ground: &Arc<Algebra>, dim: usize) -> Module {
    let f = ground.field;
    Module {
        algebra: ground.clone(),
        dim,
        action: vec![Matrix::identity(f, dim)],
    }
}

/// Total Hom complex of k-spaces: degree n carries (+)_p Hom(X^p, Y^{p+n}).
pub struct TotalHom {
    pub complex: Complex,
    pub lo: i64,
    /// blocks[i] lists (p, hom basis of Hom(X^p, Y^{p+lo+i}))
    pub blocks: Vec<Vec<(i64, Vec<Matrix>)>>,
}

impl TotalHom {
    fn block_offset(&self, degree: i64, p: i64) -> Option<usize> {
        let i = (degree - self.lo) as usize;
        let layer = self.blocks.get(i)?;
        let mut off = 0usize;
        for (q, basis) in layer {
            if *q == p {
                return Some(off);
            }
            off += basis.len();
        }
        None
    }

    fn block_basis(&self, degree: i64, p: i64) -> Option<&Vec<Matrix>> {
        let i = (degree - self.lo) as usize;
        self.blocks
            .get(i)?
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, b)| b)
    }

    /// Coordinates of a degree-n collection (f_p : X^p -> Y^{p+n}).
    pub fn embed(&self, degree: i64, comps: &[(i64, Matrix)]) -> Option<Vec<Scalar>> {
        let f = self.complex.algebra.field;
        let i = (degree - self.lo) as usize;
        let dim = self.complex.dim_at(degree);
        let mut out = vec![f.zero(); dim];
        let _ = self.blocks.get(i)?;
        for (p, m) in comps {
            if m.is_zero() {
                continue;
            }
            let off = self.block_offset(degree, *p)?;
            let basis = self.block_basis(degree, *p)?;
            let coords = hom_coords(basis, m)?;
            for (j, c) in coords.into_iter().enumerate() {
                out[off + j] = c;
            }
        }
        Some(out)
    }

    /// The per-block components of a coordinate vector in degree n.
    pub fn extract(&self, degree: i64, coords: &[Scalar]) -> Vec<(i64, Matrix)> {
        let f = self.complex.algebra.field;
        let i = (degree - self.lo) as usize;
        let mut out = Vec::new();
        let mut off = 0usize;
        if let Some(layer) = self.blocks.get(i) {
            for (p, basis) in layer {
                let mut m = Matrix::zeros(f, basis[0].rows, basis[0].cols);
                for (j, b) in basis.iter().enumerate() {
                    let c = &coords[off + j];
                    if !f.is_zero(c) {
                        m = m.add(&b.scale(c));
                    }
                }
                off += basis.len();
                out.push((*p, m));
            }
        }
        out
    }
}

pub fn total_hom_complex(x: &Complex, y: &Complex) -> Result<TotalHom> {
    let f = x.algebra.field;
    let ground = Arc::new(Algebra::ground_field(f));
    let lo = y.lo - x.hi();
    let hi = y.hi() - x.lo;
    if x.objects.is_empty() || y.objects.is_empty() || lo > hi {
        return Ok(TotalHom {
            complex: Complex::zero(ground),
            lo: 0,
            blocks: Vec::new(),
        });
    }
    let mut blocks = Vec::new();
    for n in lo..=hi {
        let mut layer = Vec::new();
        for p in x.lo..=x.hi() {
            if x.dim_at(p) == 0 || y.dim_at(p + n) == 0 {
                continue;
            }
            let basis = hom_space(&x.obj_at(p), &y.obj_at(p + n))?;
            if !basis.is_empty() {
                layer.push((p, basis));
            }
        }
        blocks.push(layer);
    }
    let th_stub = TotalHom {
        complex: Complex::zero(ground.clone()),
        lo,
        blocks,
    };
    let dims: Vec<usize> = th_stub
        .blocks
        .iter()
        .map(|layer| layer.iter().map(|(_, b)| b.len()).sum())
        .collect();
    let mut diffs = Vec::new();
    for i in 0..dims.len().saturating_sub(1) {
        let n = lo + i as i64;
        let sign = if n.rem_euclid(2) == 0 {
            f.one()
        } else {
            f.from_int(-1)
        };
        let mut d = Matrix::zeros(f, dims[i], dims[i + 1]);
        let mut row = 0usize;
        for (p, basis) in &th_stub.blocks[i] {
            for b in basis {
                // f then d_Y stays in block p of degree n+1
                if let Some(off) = th_stub.block_offset(n + 1, *p) {
                    let m = b.mul(&y.diff_at(p + n));
                    let tgt = th_stub.block_basis(n + 1, *p).unwrap();
                    let coords = hom_coords(tgt, &m).expect("block image");
                    for (j, c) in coords.iter().enumerate() {
                        if !f.is_zero(c) {
                            let cur = d.at(row, off + j).clone();
                            d.set(row, off + j, f.add(&cur, c));
                        }
                    }
                }
                // -(-1)^n (d_X then f) lands in block p-1 of degree n+1
                if let Some(off) = th_stub.block_offset(n + 1, p - 1) {
                    let m = x.diff_at(p - 1).mul(b).scale(&f.neg(&sign));
                    let tgt = th_stub.block_basis(n + 1, p - 1).unwrap();
                    let coords = hom_coords(tgt, &m).expect("block image");
                    for (j, c) in coords.iter().enumerate() {
                        if !f.is_zero(c) {
                            let cur = d.at(row, off + j).clone();
                            d.set(row, off + j, f.add(&cur, c));
                        }
                    }
                }
                row += 1;
            }
        }
        diffs.push(d);
    }
    let objects: Vec<Module> = dims.iter().map(|&d| ground_module(&ground, d)).collect();
    let below = if y.below == Edge::Truncated || x.above == Edge::Truncated {
        Edge::Truncated
    } else {
        Edge::Genuine
    };
    let above = if y.above == Edge::Truncated || x.below == Edge::Truncated {
        Edge::Truncated
    } else {
        Edge::Genuine
    };
    let complex = Complex::new(ground, lo, objects, diffs, below, above)?;
    Ok(TotalHom {
        complex,
        lo,
        blocks: th_stub.blocks,
    })
}

/// A complex of (A, B)-bimodules; differentials commute with both actions.
#[derive(Clone)]
pub struct BimoduleComplex {
    pub left_algebra: Arc<Algebra>,
    pub right_algebra: Arc<Algebra>,
    pub lo: i64,
    pub objects: Vec<Bimodule>,
    pub diffs: Vec<Matrix>,
    pub below: Edge,
    pub above: Edge,
}

impl BimoduleComplex {
    pub fn from_bimodule(b: Bimodule, degree: i64) -> BimoduleComplex {
        BimoduleComplex {
            left_algebra: b.left_algebra.clone(),
            right_algebra: b.right_algebra.clone(),
            lo: degree,
            objects: vec![b],
            diffs: Vec::new(),
            below: Edge::Genuine,
            above: Edge::Genuine,
        }
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.objects.len() as i64 - 1
    }

    pub fn dim_at(&self, n: i64) -> usize {
        if n < self.lo || n > self.hi() {
            0
        } else {
            self.objects[(n - self.lo) as usize].dim
        }
    }

    pub fn obj_at(&self, n: i64) -> Option<&Bimodule> {
        if n < self.lo || n > self.hi() {
            None
        } else {
            Some(&self.objects[(n - self.lo) as usize])
        }
    }

    pub fn diff_at(&self, n: i64) -> Matrix {
        let f = self.left_algebra.field;
        let i = n - self.lo;
        if i >= 0 && (i as usize) < self.diffs.len() {
            self.diffs[i as usize].clone()
        } else {
            Matrix::zeros(f, self.dim_at(n), self.dim_at(n + 1))
        }
    }

    pub fn validate(&self) -> Result<()> {
        for b in &self.objects {
            b.validate()?;
        }
        for (i, d) in self.diffs.iter().enumerate() {
            let src = &self.objects[i];
            let tgt = &self.objects[i + 1];
            for t in 0..self.left_algebra.dim {
                if src.left_action[t].mul(d) != d.mul(&tgt.left_action[t]) {
                    return Err(crate::error::Error::Validation(
                        "bimodule differential is not left-linear".into(),
                    ));
                }
            }
            for t in 0..self.right_algebra.dim {
                if src.right_action[t].mul(d) != d.mul(&tgt.right_action[t]) {
                    return Err(crate::error::Error::Validation(
                        "bimodule differential is not right-linear".into(),
                    ));
                }
            }
        }
        for i in 0..self.diffs.len().saturating_sub(1) {
            if !self.diffs[i].mul(&self.diffs[i + 1]).is_zero() {
                return Err(crate::error::Error::Validation("d^2 != 0".into()));
            }
        }
        Ok(())
    }
}

/// Hom(X, A) as a complex of (A, k)-bimodules: degree q carries
/// Hom(X^{-q}, A) with differential -(-1)^q (d_X then -). Also returns the
/// hom bases per degree, aligned with the bimodule coordinates.
pub struct LambdaDualComplex {
    pub complex: BimoduleComplex,
    /// bases[i]: hom basis of Hom(X^{-(lo+i)}, A)
    pub bases: Vec<Vec<Matrix>>,
}

pub fn lambda_dual_complex(ctx: &Ctx, x: &Complex) -> Result<LambdaDualComplex> {
    let f = ctx.field();
    let lo = -x.hi();
    let hi = -x.lo;
    let mut objects = Vec::new();
    let mut bases = Vec::new();
    for q in lo..=hi {
        let xm = x.obj_at(-q);
        let (bi, basis) = hom_to_regular_bimodule(&xm)?;
        objects.push(bi);
        bases.push(basis);
    }
    let mut diffs = Vec::new();
    for q in lo..hi {
        let i = (q - lo) as usize;
        let sign = if q.rem_euclid(2) == 0 {
            f.from_int(-1)
        } else {
            f.one()
        };
        let d = x.diff_at(-q - 1);
        let mut rows = Vec::new();
        for phi in &bases[i] {
            let m = d.mul(phi).scale(&sign);
            rows.push(hom_coords(&bases[i + 1], &m).expect("dual differential"));
        }
        diffs.push(if rows.is_empty() {
            Matrix::zeros(f, 0, objects[i + 1].dim)
        } else {
            Matrix::from_rows(f, rows)
        });
    }
    // degree bounds flip under dualization
    let below = match x.above {
        Edge::Truncated => Edge::Truncated,
        Edge::Genuine => Edge::Genuine,
    };
    let above = match x.below {
        Edge::Truncated => Edge::Truncated,
        Edge::Genuine => Edge::Genuine,
    };
    let complex = BimoduleComplex {
        left_algebra: ctx.alg.clone(),
        right_algebra: objects
            .first()
            .map(|b| b.right_algebra.clone())
            .unwrap_or_else(|| Arc::new(Algebra::ground_field(f))),
        lo,
        objects,
        diffs,
        below,
        above,
    };
    complex.validate()?;
    Ok(LambdaDualComplex { complex, bases })
}

/// Total tensor complex: degree n carries (+)_{p+q=n} X^p (x)_A B^q with the
/// Koszul sign on the second differential.
pub struct TotalTensor {
    pub complex: Complex,
    pub lo: i64,
    /// blocks[i]: list of (p, q, tensor data) with p + q = lo + i
    pub blocks: Vec<Vec<(i64, i64, TensorModule)>>,
}

impl TotalTensor {
    fn block_offset(&self, degree: i64, p: i64) -> Option<usize> {
        let i = (degree - self.lo) as usize;
        let layer = self.blocks.get(i)?;
        let mut off = 0usize;
        for (pp, _, t) in layer {
            if *pp == p {
                return Some(off);
            }
            off += t.module.dim;
        }
        None
    }

    pub fn block(&self, degree: i64, p: i64) -> Option<&TensorModule> {
        let i = (degree - self.lo) as usize;
        self.blocks
            .get(i)?
            .iter()
            .find(|(pp, _, _)| *pp == p)
            .map(|(_, _, t)| t)
    }
}

/// The map `phi (x) id` between tensor quotients for a bimodule hom `psi`:
/// here the left module map is the identity and `psi` acts on the bimodule.
fn tensor_right_hom(src: &TensorModule, dst: &TensorModule, psi: &Matrix) -> Matrix {
    let f = psi.field;
    let dm = src.left_dim;
    // I_{dm} (x) psi on Kronecker coordinates (i, j) -> i * db + j
    let rows = dm * src.bimodule_dim;
    let cols = dm * dst.bimodule_dim;
    let mut big = Matrix::zeros(f, rows, cols);
    for i in 0..dm {
        for r in 0..psi.rows {
            for c in 0..psi.cols {
                let v = psi.at(r, c);
                if !f.is_zero(v) {
                    big.set(i * src.bimodule_dim + r, i * dst.bimodule_dim + c, v.clone());
                }
            }
        }
    }
    src.sect.mul(&big).mul(&dst.proj)
}

pub fn total_tensor_complex(x: &Complex, b: &BimoduleComplex) -> Result<TotalTensor> {
    let f = x.algebra.field;
    let ground_or_right = b.right_algebra.clone();
    let lo = x.lo + b.lo;
    let hi = x.hi() + b.hi();
    if x.objects.is_empty() || b.objects.is_empty() {
        return Ok(TotalTensor {
            complex: Complex::zero(ground_or_right),
            lo: 0,
            blocks: Vec::new(),
        });
    }
    let mut blocks: Vec<Vec<(i64, i64, TensorModule)>> = Vec::new();
    for n in lo..=hi {
        let mut layer = Vec::new();
        for p in x.lo..=x.hi() {
            let q = n - p;
            if x.dim_at(p) == 0 || b.dim_at(q) == 0 {
                continue;
            }
            let t = tensor_over_algebra(&x.obj_at(p), b.obj_at(q).unwrap())?;
            if t.module.dim > 0 {
                layer.push((p, q, t));
            }
        }
        blocks.push(layer);
    }
    let tt_stub = TotalTensor {
        complex: Complex::zero(ground_or_right.clone()),
        lo,
        blocks,
    };
    let dims: Vec<usize> = tt_stub
        .blocks
        .iter()
        .map(|layer| layer.iter().map(|(_, _, t)| t.module.dim).sum())
        .collect();
    let mut diffs = Vec::new();
    for i in 0..dims.len().saturating_sub(1) {
        let n = lo + i as i64;
        let mut d = Matrix::zeros(f, dims[i], dims[i + 1]);
        let mut row_off = 0usize;
        for (p, q, t) in &tt_stub.blocks[i] {
            let sign = if p.rem_euclid(2) == 0 {
                f.one()
            } else {
                f.from_int(-1)
            };
            // d_X (x) 1 : block (p, q) -> (p+1, q)
            if let (Some(off), Some(dst)) =
                (tt_stub.block_offset(n + 1, p + 1), tt_stub.block(n + 1, p + 1))
            {
                let m = crate::module::tensor_hom(t, dst, &x.diff_at(*p));
                for r in 0..m.rows {
                    for c in 0..m.cols {
                        let v = m.at(r, c);
                        if !f.is_zero(v) {
                            let cur = d.at(row_off + r, off + c).clone();
                            d.set(row_off + r, off + c, f.add(&cur, v));
                        }
                    }
                }
            }
            // (-1)^p 1 (x) d_B : block (p, q) -> (p, q+1)
            if let (Some(off), Some(dst)) =
                (tt_stub.block_offset(n + 1, *p), tt_stub.block(n + 1, *p))
            {
                let m = tensor_right_hom(t, dst, &b.diff_at(*q)).scale(&sign);
                for r in 0..m.rows {
                    for c in 0..m.cols {
                        let v = m.at(r, c);
                        if !f.is_zero(v) {
                            let cur = d.at(row_off + r, off + c).clone();
                            d.set(row_off + r, off + c, f.add(&cur, v));
                        }
                    }
                }
            }
            row_off += t.module.dim;
        }
        diffs.push(d);
    }
    // assemble objects over the right algebra by block sums
    let mut objects = Vec::new();
    for (i, layer) in tt_stub.blocks.iter().enumerate() {
        if layer.is_empty() {
            objects.push(Module::zero(ground_or_right.clone()));
        } else {
            let mods: Vec<&Module> = layer.iter().map(|(_, _, t)| &t.module).collect();
            objects.push(Module::direct_sum(&mods).0);
        }
        let _ = i;
    }
    let below = if x.below == Edge::Truncated || b.below == Edge::Truncated {
        Edge::Truncated
    } else {
        Edge::Genuine
    };
    let above = if x.above == Edge::Truncated || b.above == Edge::Truncated {
        Edge::Truncated
    } else {
        Edge::Genuine
    };
    let complex = Complex::new(ground_or_right, lo, objects, diffs, below, above)?;
    Ok(TotalTensor {
        complex,
        lo,
        blocks: tt_stub.blocks,
    })
}

/// Degreewise tensor of a complex with a single bimodule in degree zero.
pub fn tensor_complex_with_bimodule(x: &Complex, b: &Bimodule) -> Result<TotalTensor> {
    total_tensor_complex(x, &BimoduleComplex::from_bimodule(b.clone(), 0))
}

/// The totalized natural map `Y (x)_A Hom(X, A) -> Hom(X, Y)` as a chain map
/// of k-space complexes, with blockwise bijectivity reporting.
pub struct SigmaTotal {
    pub map: ChainMap,
    pub tensor_side: TotalTensor,
    pub hom_side: TotalHom,
    /// per total degree: whether the assembled component is bijective
    pub degree_bijective: Vec<(i64, bool)>,
}

pub fn sigma_total(ctx: &Ctx, x: &Complex, y: &Complex) -> Result<SigmaTotal> {
    let f = ctx.field();
    let dual = lambda_dual_complex(ctx, x)?;
    let tensor_side = total_tensor_complex(y, &dual.complex)?;
    let hom_side = total_hom_complex(x, y)?;
    // build components degreewise: block (p, q) of the tensor side maps to
    // hom block -q in the same total degree
    let lo = tensor_side.complex.lo.min(hom_side.complex.lo);
    let hi = tensor_side.complex.hi().max(hom_side.complex.hi());
    let mut comps = Vec::new();
    for n in lo..=hi {
        let rows = tensor_side.complex.dim_at(n);
        let cols = hom_side.complex.dim_at(n);
        let mut m = Matrix::zeros(f, rows, cols);
        if rows > 0 && cols > 0 {
            let i = (n - tensor_side.lo) as usize;
            let mut row_off = 0usize;
            for (p, q, t) in &tensor_side.blocks[i] {
                // sigma on the module pair (Y^p, X^{-q})
                let sig = crate::module::natural_map_sigma(&y.obj_at(*p), &x.obj_at(-q))?;
                // sig.matrix: tensor-quotient coords -> hom basis of Hom(X^{-q}, Y^p)
                if let (Some(col_off), Some(tgt_basis)) = (
                    hom_side.block_offset(n, -q),
                    hom_side.block_basis(n, -q),
                ) {
                    // align sigma's hom basis with the total hom block basis
                    let align_rows: Vec<Vec<Scalar>> = sig
                        .hom_basis
                        .iter()
                        .map(|h| hom_coords(tgt_basis, h).expect("hom basis alignment"))
                        .collect();
                    let align = if align_rows.is_empty() {
                        Matrix::zeros(f, 0, tgt_basis.len())
                    } else {
                        Matrix::from_rows(f, align_rows)
                    };
                    let block = sig.matrix.mul(&align);
                    debug_assert_eq!(t.module.dim, block.rows);
                    for r in 0..block.rows {
                        for c in 0..block.cols {
                            let v = block.at(r, c);
                            if !f.is_zero(v) {
                                m.set(row_off + r, col_off + c, v.clone());
                            }
                        }
                    }
                }
                row_off += t.module.dim;
            }
        }
        comps.push(m);
    }
    let map = ChainMap {
        source: tensor_side.complex.clone(),
        target: hom_side.complex.clone(),
        lo,
        comps,
    };
    map.validate()?;
    let mut degree_bijective = Vec::new();
    for n in lo..=hi {
        let c = map.comp_at(n);
        let bij = c.rows == c.cols && (c.rows == 0 || c.is_invertible());
        degree_bijective.push((n, bij));
    }
    Ok(SigmaTotal {
        map,
        tensor_side,
        hom_side,
        degree_bijective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::homotopy_hom_space;
    use crate::field::FieldSpec;
    use crate::presets;
    use crate::resolve::{ext1, minimal_projective_resolution};

    fn fq() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn t1() -> Ctx {
        Ctx::new(presets::t1(fq()))
    }

    fn periodic(ctx: &Ctx, lo: i64, hi: i64, below: Edge, above: Edge) -> Complex {
        let reg = Module::regular(ctx.alg.clone());
        let xact = reg.action[1].clone();
        let n = (hi - lo + 1) as usize;
        Complex::new(
            ctx.alg.clone(),
            lo,
            vec![reg; n],
            vec![xact; n - 1],
            below,
            above,
        )
        .unwrap()
    }

    #[test]
    fn total_hom_of_modules_in_degree_zero() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let c = Complex::from_module(s, 0);
        let th = total_hom_complex(&c, &c).unwrap();
        th.complex.validate().unwrap();
        assert_eq!(th.complex.cohomology_dim(0), 1);
        assert_eq!(th.complex.dim_at(1), 0);
        assert_eq!(th.complex.dim_at(-1), 0);
    }

    #[test]
    fn total_hom_h0_matches_homotopy_classes() {
        // eq between H^0 of the total Hom and chain maps modulo homotopy,
        // both on the same truncated windows
        let ctx = t1();
        let c = periodic(&ctx, 0, 4, Edge::Genuine, Edge::Truncated);
        let th = total_hom_complex(&c, &c).unwrap();
        th.complex.validate().unwrap();
        let hh = homotopy_hom_space(&c, &c).unwrap();
        assert_eq!(th.complex.cohomology_dim(0), hh.raw_dim());
        // the guarded reading gives the stable answer
        assert_eq!(hh.dim_with_guard(1), 1);
    }

    #[test]
    fn total_hom_h1_counts_ext_for_resolutions() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let is_cx = crate::cxres::injective_resolution_of_module(&ctx, &s, 6).unwrap();
        let th = total_hom_complex(&is_cx, &is_cx).unwrap();
        // H^1 on the guard interior equals Ext^1(S, S) = 1: compare through
        // the homotopy space against the shifted complex
        let hh = homotopy_hom_space(&is_cx, &is_cx.shift(1)).unwrap();
        assert_eq!(hh.dim_with_guard(2), ext1(&s, &s).unwrap().dim);
        let _ = th;
    }

    #[test]
    fn tensor_with_regular_is_identity() {
        let ctx = t1();
        let c = periodic(&ctx, 0, 3, Edge::Genuine, Edge::Truncated);
        let reg = Bimodule::regular(&ctx);
        let tt = tensor_complex_with_bimodule(&c, &reg).unwrap();
        tt.complex.validate().unwrap();
        for n in 0..=3 {
            assert_eq!(tt.complex.dim_at(n), c.dim_at(n));
        }
    }

    #[test]
    fn tensor_periodic_with_dual_regular() {
        // (A --x--> A) (x) DA stays a two-term complex of dimension 2 each
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let res = minimal_projective_resolution(&s, 1);
        let cx = Complex::new(
            ctx.alg.clone(),
            -1,
            vec![res.modules[1].clone(), res.modules[0].clone()],
            vec![res.diffs[0].clone()],
            Edge::Truncated,
            Edge::Genuine,
        )
        .unwrap();
        let da = Bimodule::dual_regular(&ctx);
        let tt = tensor_complex_with_bimodule(&cx, &da).unwrap();
        tt.complex.validate().unwrap();
        assert_eq!(tt.complex.dim_at(-1), 2);
        assert_eq!(tt.complex.dim_at(0), 2);
        // cycles in degree -1 = DTr S, one dimensional here
        let (z, _) = tt.complex.cycles(-1);
        assert_eq!(z.dim, 1);
    }

    #[test]
    fn three_term_tensor_square_is_zero() {
        // d^2 = 0 on a 3-term complex against a 2-term bimodule complex:
        // exercise the Koszul sign
        let ctx = t1();
        let x = periodic(&ctx, 0, 2, Edge::Genuine, Edge::Truncated);
        // bimodule complex: DA --0--> DA in degrees 0, 1 with a nonzero map:
        // use left/right multiplication by x as a bimodule endomorphism
        let da = Bimodule::dual_regular(&ctx);
        let xmul = da.right_action[1].clone();
        let bc = BimoduleComplex {
            left_algebra: ctx.alg.clone(),
            right_algebra: ctx.alg.clone(),
            lo: 0,
            objects: vec![da.clone(), da.clone()],
            diffs: vec![xmul],
            below: Edge::Genuine,
            above: Edge::Genuine,
        };
        bc.validate().unwrap();
        let tt = total_tensor_complex(&x, &bc).unwrap();
        tt.complex.validate().unwrap(); // includes d^2 = 0
    }

    #[test]
    fn lambda_dual_complex_validates() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let res = minimal_projective_resolution(&s, 4);
        let mut objects = Vec::new();
        let mut diffs = Vec::new();
        for i in (0..=4).rev() {
            objects.push(res.modules[i].clone());
            if i > 0 {
                diffs.push(res.diffs[i - 1].clone());
            }
        }
        let px = Complex::new(
            ctx.alg.clone(),
            -4,
            objects,
            diffs,
            Edge::Truncated,
            Edge::Genuine,
        )
        .unwrap();
        let ld = lambda_dual_complex(&ctx, &px).unwrap();
        assert_eq!(ld.complex.lo, 0);
        assert_eq!(ld.complex.hi(), 4);
    }

    #[test]
    fn sigma_total_is_degreewise_iso_on_resolutions() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let res = minimal_projective_resolution(&s, 4);
        let mut objects = Vec::new();
        let mut diffs = Vec::new();
        for i in (0..=4).rev() {
            objects.push(res.modules[i].clone());
            if i > 0 {
                diffs.push(res.diffs[i - 1].clone());
            }
        }
        let px = Complex::new(
            ctx.alg.clone(),
            -4,
            objects,
            diffs,
            Edge::Truncated,
            Edge::Genuine,
        )
        .unwrap();
        let iy = crate::cxres::injective_resolution_of_module(&ctx, &s, 4).unwrap();
        let st = sigma_total(&ctx, &px, &iy).unwrap();
        // chain map law holds (validated); bijective wherever both sides live
        for (n, bij) in &st.degree_bijective {
            let rows = st.tensor_side.complex.dim_at(*n);
            let cols = st.hom_side.complex.dim_at(*n);
            if rows == cols && rows > 0 {
                assert!(bij, "sigma not bijective in degree {n}");
            }
        }
        let interior: Vec<i64> = (-2..=2).collect();
        for n in interior {
            assert_eq!(
                st.tensor_side.complex.dim_at(n),
                st.hom_side.complex.dim_at(n),
                "dims differ at degree {n}"
            );
        }
    }
}
