//! Windowed cochain complexes of modules, chain maps, homotopies, cones,
//! cycles and cohomology, homotopy-class spaces with guard-aware dimensions,
//! and minimization by Gaussian elimination.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::endo::decompose_module;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel_basis, solve_left, Matrix, Subspace};
use crate::module::{hom_coords, hom_space, is_module_hom, Module};

/// Whether a window end is a genuine bound of the object or a truncation
/// artifact. Guard logic only discounts degrees near truncated ends.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Edge {
    Genuine,
    Truncated,
}

#[derive(Clone, Debug)]
pub struct Complex {
    pub algebra: Arc<Algebra>,
    pub lo: i64,
    /// objects[i] lives in degree lo + i
    pub objects: Vec<Module>,
    /// diffs[i] : X^{lo+i} -> X^{lo+i+1}; length = objects.len() - 1
    pub diffs: Vec<Matrix>,
    pub below: Edge,
    pub above: Edge,
}

impl Complex {
    pub fn new(
        algebra: Arc<Algebra>,
        lo: i64,
        objects: Vec<Module>,
        diffs: Vec<Matrix>,
        below: Edge,
        above: Edge,
    ) -> Result<Complex> {
        let c = Complex {
            algebra,
            lo,
            objects,
            diffs,
            below,
            above,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn zero(algebra: Arc<Algebra>) -> Complex {
        Complex {
            algebra,
            lo: 0,
            objects: Vec::new(),
            diffs: Vec::new(),
            below: Edge::Genuine,
            above: Edge::Genuine,
        }
    }

    pub fn from_module(m: Module, degree: i64) -> Complex {
        Complex {
            algebra: m.algebra.clone(),
            lo: degree,
            objects: vec![m],
            diffs: Vec::new(),
            below: Edge::Genuine,
            above: Edge::Genuine,
        }
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.objects.len() as i64 - 1
    }

    pub fn is_zero_complex(&self) -> bool {
        self.objects.iter().all(|m| m.dim == 0)
    }

    fn idx(&self, n: i64) -> Option<usize> {
        if self.objects.is_empty() || n < self.lo || n > self.hi() {
            None
        } else {
            Some((n - self.lo) as usize)
        }
    }

    pub fn dim_at(&self, n: i64) -> usize {
        self.idx(n).map(|i| self.objects[i].dim).unwrap_or(0)
    }

    pub fn obj_at(&self, n: i64) -> Module {
        match self.idx(n) {
            Some(i) => self.objects[i].clone(),
            None => Module::zero(self.algebra.clone()),
        }
    }

    /// Differential X^n -> X^{n+1}, zero matrix outside the window.
    pub fn diff_at(&self, n: i64) -> Matrix {
        let f = self.algebra.field;
        match self.idx(n) {
            Some(i) if i + 1 < self.objects.len() => self.diffs[i].clone(),
            _ => Matrix::zeros(f, self.dim_at(n), self.dim_at(n + 1)),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.diffs.len() + 1 != self.objects.len() && !self.objects.is_empty() {
            return Err(Error::Validation("differential count".into()));
        }
        for (i, d) in self.diffs.iter().enumerate() {
            let src = &self.objects[i];
            let tgt = &self.objects[i + 1];
            if d.rows != src.dim || d.cols != tgt.dim {
                return Err(Error::Validation(format!(
                    "differential shape at degree {}",
                    self.lo + i as i64
                )));
            }
            if !is_module_hom(src, d, tgt) {
                return Err(Error::Validation(format!(
                    "differential at degree {} is not a module hom",
                    self.lo + i as i64
                )));
            }
        }
        for i in 0..self.diffs.len().saturating_sub(1) {
            if !self.diffs[i].mul(&self.diffs[i + 1]).is_zero() {
                return Err(Error::Validation(format!(
                    "d^2 != 0 at degree {}",
                    self.lo + i as i64
                )));
            }
        }
        Ok(())
    }

    /// Shift: X[k]^n = X^{n+k}, differentials scaled by (-1)^k.
    pub fn shift(&self, k: i64) -> Complex {
        let f = self.algebra.field;
        let sign = if k.rem_euclid(2) == 0 {
            f.one()
        } else {
            f.from_int(-1)
        };
        Complex {
            algebra: self.algebra.clone(),
            lo: self.lo - k,
            objects: self.objects.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
            below: self.below,
            above: self.above,
        }
    }

    /// Drops zero objects at both ends of the window.
    pub fn trimmed(&self) -> Complex {
        let mut start = 0;
        let mut end = self.objects.len();
        while start < end && self.objects[start].dim == 0 {
            start += 1;
        }
        while end > start && self.objects[end - 1].dim == 0 {
            end -= 1;
        }
        Complex {
            algebra: self.algebra.clone(),
            lo: self.lo + start as i64,
            objects: self.objects[start..end].to_vec(),
            diffs: if end > start {
                self.diffs[start..end - 1].to_vec()
            } else {
                Vec::new()
            },
            below: self.below,
            above: self.above,
        }
    }

    /// Brutal truncation to the window [lo, hi].
    pub fn truncate(&self, lo: i64, hi: i64) -> Complex {
        let mut objects = Vec::new();
        let mut diffs = Vec::new();
        for n in lo..=hi {
            objects.push(self.obj_at(n));
            if n < hi {
                diffs.push(self.diff_at(n));
            }
        }
        let below = if lo > self.lo && self.dim_at(lo - 1) > 0 {
            Edge::Truncated
        } else {
            self.below
        };
        let above = if hi < self.hi() && self.dim_at(hi + 1) > 0 {
            Edge::Truncated
        } else {
            self.above
        };
        Complex {
            algebra: self.algebra.clone(),
            lo,
            objects,
            diffs,
            below,
            above,
        }
        .trimmed()
    }

    /// Cycles Z^n = ker d^n as a module with its inclusion into X^n.
    pub fn cycles(&self, n: i64) -> (Module, Matrix) {
        let d = self.diff_at(n);
        let ker = kernel_basis(&d);
        self.obj_at(n).submodule(&ker)
    }

    /// Cohomology H^n = ker d^n / im d^{n-1}; returns the module, the
    /// inclusion of cycles into X^n, and the projection from cycle
    /// coordinates onto H^n.
    pub fn cohomology(&self, n: i64) -> (Module, Matrix, Matrix) {
        let f = self.algebra.field;
        let (zmod, incl) = self.cycles(n);
        let dprev = self.diff_at(n - 1);
        // boundaries, in cycle coordinates
        let mut rows = Vec::new();
        let zsub = Subspace::from_rows(&incl);
        for i in 0..dprev.rows {
            let row = dprev.row(i);
            let coords = zsub.coords_of(&row).expect("boundaries are cycles");
            rows.push(coords);
        }
        let bnd = if rows.is_empty() {
            Subspace::zero(f, zmod.dim)
        } else {
            Subspace::from_rows(&Matrix::from_rows(f, rows))
        };
        let (h, proj, _sect) = zmod.quotient_with_section(&bnd);
        (h, incl, proj)
    }

    pub fn cohomology_dim(&self, n: i64) -> usize {
        self.cohomology(n).0.dim
    }

    /// Degreewise direct sum with inclusion/projection chain maps.
    pub fn direct_sum(parts: &[&Complex]) -> (Complex, Vec<(ChainMap, ChainMap)>) {
        assert!(!parts.is_empty());
        let algebra = parts[0].algebra.clone();
        let f = algebra.field;
        let lo = parts.iter().map(|c| c.lo).min().unwrap();
        let hi = parts.iter().map(|c| c.hi()).max().unwrap();
        let mut objects = Vec::new();
        let mut diffs = Vec::new();
        for n in lo..=hi {
            let mods: Vec<Module> = parts.iter().map(|c| c.obj_at(n)).collect();
            let refs: Vec<&Module> = mods.iter().collect();
            let (sum, _) = Module::direct_sum(&refs);
            objects.push(sum);
            if n < hi {
                // block diagonal differential
                let total_r: usize = parts.iter().map(|c| c.dim_at(n)).sum();
                let total_c: usize = parts.iter().map(|c| c.dim_at(n + 1)).sum();
                let mut d = Matrix::zeros(f, total_r, total_c);
                let mut ro = 0;
                let mut co = 0;
                for c in parts {
                    let blk = c.diff_at(n);
                    for i in 0..blk.rows {
                        for j in 0..blk.cols {
                            d.set(ro + i, co + j, blk.at(i, j).clone());
                        }
                    }
                    ro += blk.rows;
                    co += blk.cols;
                }
                diffs.push(d);
            }
        }
        let below = if parts.iter().any(|c| c.below == Edge::Truncated) {
            Edge::Truncated
        } else {
            Edge::Genuine
        };
        let above = if parts.iter().any(|c| c.above == Edge::Truncated) {
            Edge::Truncated
        } else {
            Edge::Genuine
        };
        let sum = Complex {
            algebra,
            lo,
            objects,
            diffs,
            below,
            above,
        };
        let mut maps = Vec::new();
        for (pi, part) in parts.iter().enumerate() {
            let mut incl_comps = Vec::new();
            let mut proj_comps = Vec::new();
            for n in lo..=hi {
                let mut off = 0;
                for c in parts.iter().take(pi) {
                    off += c.dim_at(n);
                }
                let pd = part.dim_at(n);
                let sd = sum.dim_at(n);
                let mut incl = Matrix::zeros(f, pd, sd);
                let mut proj = Matrix::zeros(f, sd, pd);
                for i in 0..pd {
                    incl.set(i, off + i, f.one());
                    proj.set(off + i, i, f.one());
                }
                incl_comps.push(incl);
                proj_comps.push(proj);
            }
            maps.push((
                ChainMap {
                    source: (*part).clone(),
                    target: sum.clone(),
                    lo,
                    comps: incl_comps,
                },
                ChainMap {
                    source: sum.clone(),
                    target: (*part).clone(),
                    lo,
                    comps: proj_comps,
                },
            ));
        }
        (sum, maps)
    }
}

/// A chain map, stored on the union of the two windows.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: Complex,
    pub target: Complex,
    pub lo: i64,
    /// comps[i] : source^{lo+i} -> target^{lo+i}
    pub comps: Vec<Matrix>,
}

impl ChainMap {
    /// Builds and validates from a per-degree component function.
    pub fn build(
        source: &Complex,
        target: &Complex,
        mut comp: impl FnMut(i64) -> Matrix,
    ) -> Result<ChainMap> {
        let lo = source.lo.min(target.lo);
        let hi = source.hi().max(target.hi());
        let comps: Vec<Matrix> = (lo..=hi).map(&mut comp).collect();
        let cm = ChainMap {
            source: source.clone(),
            target: target.clone(),
            lo,
            comps,
        };
        cm.validate()?;
        Ok(cm)
    }

    pub fn zero(source: &Complex, target: &Complex) -> ChainMap {
        let f = source.algebra.field;
        ChainMap::build(source, target, |n| {
            Matrix::zeros(f, source.dim_at(n), target.dim_at(n))
        })
        .unwrap()
    }

    pub fn identity(c: &Complex) -> ChainMap {
        let f = self_field(c);
        ChainMap::build(c, c, |n| Matrix::identity(f, c.dim_at(n))).unwrap()
    }

    pub fn comp_at(&self, n: i64) -> Matrix {
        let f = self.source.algebra.field;
        let i = n - self.lo;
        if i >= 0 && (i as usize) < self.comps.len() {
            self.comps[i as usize].clone()
        } else {
            Matrix::zeros(f, self.source.dim_at(n), self.target.dim_at(n))
        }
    }

    pub fn validate(&self) -> Result<()> {
        let lo = self.source.lo.min(self.target.lo) - 1;
        let hi = self.source.hi().max(self.target.hi());
        for n in lo..=hi {
            let c_n = self.comp_at(n);
            if c_n.rows != self.source.dim_at(n) || c_n.cols != self.target.dim_at(n) {
                return Err(Error::Validation(format!("component shape at {n}")));
            }
            if self.source.dim_at(n) > 0 && !is_module_hom(&self.source.obj_at(n), &c_n, &self.target.obj_at(n)) {
                return Err(Error::Validation(format!(
                    "component at {n} is not a module hom"
                )));
            }
            // f^n d_Y^n = d_X^n f^{n+1}
            let lhs = c_n.mul(&self.target.diff_at(n));
            let rhs = self.source.diff_at(n).mul(&self.comp_at(n + 1));
            if lhs != rhs {
                return Err(Error::Validation(format!(
                    "does not commute with differentials at {n}"
                )));
            }
        }
        Ok(())
    }

    pub fn then(&self, other: &ChainMap) -> ChainMap {
        let lo = self.source.lo.min(other.target.lo);
        let hi = self.source.hi().max(other.target.hi());
        let comps = (lo..=hi)
            .map(|n| self.comp_at(n).mul(&other.comp_at(n)))
            .collect();
        ChainMap {
            source: self.source.clone(),
            target: other.target.clone(),
            lo,
            comps,
        }
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        let lo = self.lo.min(other.lo);
        let hi = (self.lo + self.comps.len() as i64 - 1).max(other.lo + other.comps.len() as i64 - 1);
        let comps = (lo..=hi)
            .map(|n| self.comp_at(n).add(&other.comp_at(n)))
            .collect();
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            lo,
            comps,
        }
    }

    pub fn scale(&self, c: &Scalar) -> ChainMap {
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            lo: self.lo,
            comps: self.comps.iter().map(|m| m.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> ChainMap {
        let f = self.source.algebra.field;
        self.scale(&f.from_int(-1))
    }

    pub fn is_zero_map(&self) -> bool {
        self.comps.iter().all(|m| m.is_zero())
    }

    /// The same map between shifted complexes.
    pub fn shift(&self, k: i64) -> ChainMap {
        ChainMap {
            source: self.source.shift(k),
            target: self.target.shift(k),
            lo: self.lo - k,
            comps: self.comps.clone(),
        }
    }
}

fn self_field(c: &Complex) -> crate::field::FieldSpec {
    c.algebra.field
}

/// A homotopy `h^n : X^n -> Y^{n-1}` certifying `f = dh + hd`.
#[derive(Clone, Debug)]
pub struct Homotopy {
    pub lo: i64,
    pub comps: Vec<Matrix>,
}

impl Homotopy {
    pub fn comp_at(&self, n: i64, x: &Complex, y: &Complex) -> Matrix {
        let f = x.algebra.field;
        let i = n - self.lo;
        if i >= 0 && (i as usize) < self.comps.len() {
            self.comps[i as usize].clone()
        } else {
            Matrix::zeros(f, x.dim_at(n), y.dim_at(n - 1))
        }
    }

    /// The chain map dh + hd realized by this homotopy.
    pub fn boundary(&self, x: &Complex, y: &Complex) -> ChainMap {
        ChainMap::build(x, y, |n| {
            let a = x.diff_at(n).mul(&self.comp_at(n + 1, x, y));
            let b = self.comp_at(n, x, y).mul(&y.diff_at(n - 1));
            a.add(&b)
        })
        .expect("dh + hd is always a chain map")
    }
}

/// The mapping cone of a chain map, with the canonical triangle maps
/// `incl : Y -> cone` and `proj : cone -> X[1]`.
pub struct Cone {
    pub complex: Complex,
    pub incl: ChainMap,
    pub proj: ChainMap,
}

pub fn cone(phi: &ChainMap) -> Cone {
    let x = &phi.source;
    let y = &phi.target;
    let f = x.algebra.field;
    let lo = (x.lo - 1).min(y.lo);
    let hi = (x.hi() - 1).max(y.hi());
    let mut objects = Vec::new();
    let mut diffs = Vec::new();
    for n in lo..=hi {
        let xm = x.obj_at(n + 1);
        let ym = y.obj_at(n);
        let (sum, _) = Module::direct_sum(&[&xm, &ym]);
        objects.push(sum);
        if n < hi {
            // rows: X^{n+1} part then Y^n part
            let a = x.diff_at(n + 1).neg();
            let b = phi.comp_at(n + 1);
            let c = Matrix::zeros(f, y.dim_at(n), x.dim_at(n + 2));
            let d = y.diff_at(n);
            diffs.push(Matrix::block2x2(&a, &b, &c, &d));
        }
    }
    let below = if x.below == Edge::Truncated || y.below == Edge::Truncated {
        Edge::Truncated
    } else {
        Edge::Genuine
    };
    let above = if x.above == Edge::Truncated || y.above == Edge::Truncated {
        Edge::Truncated
    } else {
        Edge::Genuine
    };
    let complex = Complex {
        algebra: x.algebra.clone(),
        lo,
        objects,
        diffs,
        below,
        above,
    };
    let incl = ChainMap::build(y, &complex, |n| {
        let xd = x.dim_at(n + 1);
        let yd = y.dim_at(n);
        Matrix::zeros(f, yd, xd).hstack(&Matrix::identity(f, yd))
    })
    .expect("cone inclusion is a chain map");
    let x1 = x.shift(1);
    let proj = ChainMap::build(&complex, &x1, |n| {
        let xd = x.dim_at(n + 1);
        let yd = y.dim_at(n);
        Matrix::identity(f, xd).vstack(&Matrix::zeros(f, yd, xd))
    })
    .expect("cone projection is a chain map");
    Cone {
        complex,
        incl,
        proj,
    }
}

/// The space of chain maps x -> y modulo null-homotopic ones, with block
/// coordinates per degree and guard-aware dimension reporting.
pub struct HomotopyHomSpace {
    pub x: Complex,
    pub y: Complex,
    /// degrees carrying a nonzero hom block
    pub degrees: Vec<i64>,
    pub block_bases: Vec<Vec<Matrix>>,
    block_offsets: Vec<usize>,
    total: usize,
    pub solutions: Subspace,
    pub null_space: Subspace,
    /// homotopy blocks (degree, basis of Hom(X^n, Y^{n-1}))
    htpy_degrees: Vec<i64>,
    htpy_bases: Vec<Vec<Matrix>>,
    /// matrix of h -> dh + hd from homotopy coordinates to chain coordinates
    htpy_operator: Matrix,
}

pub fn homotopy_hom_space(x: &Complex, y: &Complex) -> Result<HomotopyHomSpace> {
    let f = x.algebra.field;
    let lo = x.lo.min(y.lo);
    let hi = x.hi().max(y.hi());
    let mut degrees = Vec::new();
    let mut block_bases = Vec::new();
    let mut block_offsets = Vec::new();
    let mut total = 0usize;
    for n in lo..=hi {
        if x.dim_at(n) == 0 || y.dim_at(n) == 0 {
            continue;
        }
        let basis = hom_space(&x.obj_at(n), &y.obj_at(n))?;
        if basis.is_empty() {
            continue;
        }
        degrees.push(n);
        block_offsets.push(total);
        total += basis.len();
        block_bases.push(basis);
    }
    // chain condition: f^n d_Y^n - d_X^n f^{n+1} = 0 in Hom_k(X^n, Y^{n+1})
    let mut eq_cols = 0usize;
    let mut eq_degrees = Vec::new();
    for n in lo..=hi {
        if x.dim_at(n) > 0 && y.dim_at(n + 1) > 0 {
            eq_degrees.push(n);
            eq_cols += x.dim_at(n) * y.dim_at(n + 1);
        }
    }
    let mut system = Matrix::zeros(f, total, eq_cols);
    {
        let mut col_off = 0usize;
        for &n in &eq_degrees {
            let size = x.dim_at(n) * y.dim_at(n + 1);
            // f^n contributes via postcomposition with d_Y^n
            if let Some(bi) = degrees.iter().position(|&m| m == n) {
                for (j, b) in block_bases[bi].iter().enumerate() {
                    let m = b.mul(&y.diff_at(n));
                    let v = m.vectorize();
                    for (k, val) in v.iter().enumerate() {
                        if !f.is_zero(val) {
                            let cur = system.at(block_offsets[bi] + j, col_off + k).clone();
                            system.set(block_offsets[bi] + j, col_off + k, f.add(&cur, val));
                        }
                    }
                }
            }
            // f^{n+1} contributes via precomposition with d_X^n, negatively
            if let Some(bi) = degrees.iter().position(|&m| m == n + 1) {
                for (j, b) in block_bases[bi].iter().enumerate() {
                    let m = x.diff_at(n).mul(b);
                    let v = m.vectorize();
                    for (k, val) in v.iter().enumerate() {
                        if !f.is_zero(val) {
                            let cur = system.at(block_offsets[bi] + j, col_off + k).clone();
                            system.set(block_offsets[bi] + j, col_off + k, f.sub(&cur, val));
                        }
                    }
                }
            }
            col_off += size;
        }
    }
    let solutions = if total == 0 {
        Subspace::zero(f, 0)
    } else {
        kernel_basis(&system)
    };
    // homotopy blocks
    let mut htpy_degrees = Vec::new();
    let mut htpy_bases = Vec::new();
    for n in lo..=hi + 1 {
        if x.dim_at(n) == 0 || y.dim_at(n - 1) == 0 {
            continue;
        }
        let basis = hom_space(&x.obj_at(n), &y.obj_at(n - 1))?;
        if basis.is_empty() {
            continue;
        }
        htpy_degrees.push(n);
        htpy_bases.push(basis);
    }
    let htpy_total: usize = htpy_bases.iter().map(|b| b.len()).sum();
    let mut htpy_operator = Matrix::zeros(f, htpy_total, total);
    {
        let mut row = 0usize;
        for (di, &n) in htpy_degrees.iter().enumerate() {
            for b in &htpy_bases[di] {
                // dh part lands in degree n-1, hd part in degree n
                if let Some(bi) = degrees.iter().position(|&m| m == n - 1) {
                    let m = x.diff_at(n - 1).mul(b);
                    if let Some(coords) = hom_coords(&block_bases[bi], &m) {
                        for (j, c) in coords.iter().enumerate() {
                            if !f.is_zero(c) {
                                let cur = htpy_operator.at(row, block_offsets[bi] + j).clone();
                                htpy_operator.set(row, block_offsets[bi] + j, f.add(&cur, c));
                            }
                        }
                    } else {
                        panic!("dh is not an intertwiner");
                    }
                }
                if let Some(bi) = degrees.iter().position(|&m| m == n) {
                    let m = b.mul(&y.diff_at(n - 1));
                    if let Some(coords) = hom_coords(&block_bases[bi], &m) {
                        for (j, c) in coords.iter().enumerate() {
                            if !f.is_zero(c) {
                                let cur = htpy_operator.at(row, block_offsets[bi] + j).clone();
                                htpy_operator.set(row, block_offsets[bi] + j, f.add(&cur, c));
                            }
                        }
                    } else {
                        panic!("hd is not an intertwiner");
                    }
                }
                row += 1;
            }
        }
    }
    let null_space = if htpy_total == 0 || total == 0 {
        Subspace::zero(f, total)
    } else {
        Subspace::from_rows(&htpy_operator)
    };
    Ok(HomotopyHomSpace {
        x: x.clone(),
        y: y.clone(),
        degrees,
        block_bases,
        block_offsets,
        total,
        solutions,
        null_space,
        htpy_degrees,
        htpy_bases,
        htpy_operator,
    })
}

impl HomotopyHomSpace {
    /// Dimension of chain maps modulo homotopy on the full window.
    pub fn raw_dim(&self) -> usize {
        self.solutions.rank() - self.null_space.rank()
    }

    /// Guard-aware dimension: restrict chain maps and null-homotopic maps to
    /// the degrees of `interior` and compare ranks there. Degrees near
    /// genuine (non-truncated) ends are never discounted by callers.
    pub fn guarded_dim(&self, interior: (i64, i64)) -> usize {
        let f = self.x.algebra.field;
        let cols: Vec<usize> = self
            .degrees
            .iter()
            .enumerate()
            .filter(|(_, &n)| n >= interior.0 && n <= interior.1)
            .flat_map(|(bi, _)| {
                let start = self.block_offsets[bi];
                start..start + self.block_bases[bi].len()
            })
            .collect();
        if cols.is_empty() {
            return 0;
        }
        let restrict = |sub: &Subspace| -> usize {
            if sub.basis.rows == 0 {
                return 0;
            }
            let m = Matrix::from_fn(f, sub.basis.rows, cols.len(), |i, j| {
                sub.basis.at(i, cols[j]).clone()
            });
            m.rank()
        };
        restrict(&self.solutions) - restrict(&self.null_space)
    }

    /// Default guard interior for the pair, with guard g on truncated ends.
    pub fn default_interior(&self, g: i64) -> (i64, i64) {
        let lo = self.x.lo.max(self.y.lo);
        let hi = self.x.hi().min(self.y.hi());
        let lo_g = if self.x.below == Edge::Truncated || self.y.below == Edge::Truncated {
            lo + g
        } else {
            lo
        };
        let hi_g = if self.x.above == Edge::Truncated || self.y.above == Edge::Truncated {
            hi - g
        } else {
            hi
        };
        (lo_g, hi_g)
    }

    pub fn dim_with_guard(&self, g: i64) -> usize {
        self.guarded_dim(self.default_interior(g))
    }

    fn coords_to_chain_map(&self, coords: &[Scalar]) -> ChainMap {
        let f = self.x.algebra.field;
        ChainMap::build(&self.x, &self.y, |n| {
            let mut m = Matrix::zeros(f, self.x.dim_at(n), self.y.dim_at(n));
            if let Some(bi) = self.degrees.iter().position(|&d| d == n) {
                for (j, b) in self.block_bases[bi].iter().enumerate() {
                    let c = &coords[self.block_offsets[bi] + j];
                    if !f.is_zero(c) {
                        m = m.add(&b.scale(c));
                    }
                }
            }
            m
        })
        .expect("solution coordinates form a chain map")
    }

    /// Representatives of a basis of chain maps modulo homotopy.
    pub fn class_reps(&self) -> Vec<ChainMap> {
        let mut span = self.null_space.clone();
        let mut reps = Vec::new();
        for i in 0..self.solutions.basis.rows {
            let row = self.solutions.basis.row(i);
            if !span.contains_vector(&row) {
                span = span.sum(&Subspace::from_rows(&Matrix::from_rows(
                    self.x.algebra.field,
                    vec![row.clone()],
                )));
                reps.push(self.coords_to_chain_map(&row));
            }
        }
        reps
    }

    /// Coordinates of a chain map in the block basis, if its components are
    /// supported on the recorded blocks.
    pub fn chain_coords(&self, m: &ChainMap) -> Option<Vec<Scalar>> {
        let f = self.x.algebra.field;
        let mut out = vec![f.zero(); self.total];
        for (bi, &n) in self.degrees.iter().enumerate() {
            let comp = m.comp_at(n);
            let coords = hom_coords(&self.block_bases[bi], &comp)?;
            for (j, c) in coords.into_iter().enumerate() {
                out[self.block_offsets[bi] + j] = c;
            }
        }
        // reject maps supported outside the blocks
        let lo = self.x.lo.min(self.y.lo);
        let hi = self.x.hi().max(self.y.hi());
        for n in lo..=hi {
            if self.degrees.contains(&n) {
                continue;
            }
            if !m.comp_at(n).is_zero() {
                return None;
            }
        }
        Some(out)
    }

    /// Solves `f = dh + hd`; returns the homotopy witness if null-homotopic.
    pub fn null_homotopy_witness(&self, m: &ChainMap) -> Option<Homotopy> {
        let f = self.x.algebra.field;
        let coords = self.chain_coords(m)?;
        if self.htpy_operator.rows == 0 {
            return if coords.iter().all(|c| f.is_zero(c)) {
                Some(Homotopy {
                    lo: 0,
                    comps: Vec::new(),
                })
            } else {
                None
            };
        }
        let x = solve_left(&self.htpy_operator, &coords)?;
        // assemble the homotopy components
        let lo = self.htpy_degrees.first().copied().unwrap_or(0);
        let hi = self.htpy_degrees.last().copied().unwrap_or(0);
        let mut comps = Vec::new();
        let mut off = 0usize;
        let mut by_degree = std::collections::HashMap::new();
        for (di, &n) in self.htpy_degrees.iter().enumerate() {
            let len = self.htpy_bases[di].len();
            by_degree.insert(n, (off, di));
            off += len;
        }
        for n in lo..=hi {
            let mut m = Matrix::zeros(f, self.x.dim_at(n), self.y.dim_at(n - 1));
            if let Some(&(o, di)) = by_degree.get(&n) {
                for (j, b) in self.htpy_bases[di].iter().enumerate() {
                    let c = &x[o + j];
                    if !f.is_zero(c) {
                        m = m.add(&b.scale(c));
                    }
                }
            }
            comps.push(m);
        }
        Some(Homotopy { lo, comps })
    }

    /// Whether the class of `m` is nonzero modulo homotopy.
    pub fn is_nonzero_class(&self, m: &ChainMap) -> bool {
        match self.chain_coords(m) {
            None => true,
            Some(coords) => !self.null_space.contains_vector(&coords),
        }
    }
}

/// Tests contractibility by solving `id = dh + hd`.
pub fn contracting_homotopy(x: &Complex) -> Result<Option<Homotopy>> {
    let space = homotopy_hom_space(x, x)?;
    Ok(space.null_homotopy_witness(&ChainMap::identity(x)))
}

/// A homotopy equivalence pair with verification data.
pub struct Equivalence {
    pub fwd: ChainMap,
    pub bwd: ChainMap,
}

/// Gaussian elimination: repeatedly split off two-term contractible summands
/// where a differential restricts to an isomorphism between indecomposable
/// summands. Returns the reduced complex and the equivalence maps.
pub fn minimize(x: &Complex) -> Result<(Complex, Equivalence)> {
    let mut current = x.clone();
    let mut fwd = ChainMap::identity(x);
    let mut bwd = ChainMap::identity(x);
    loop {
        match eliminate_once(&current)? {
            None => break,
            Some((next, f, g)) => {
                fwd = fwd.then(&f);
                bwd = g.then(&bwd);
                current = next;
            }
        }
    }
    Ok((
        current.clone(),
        Equivalence {
            fwd: ChainMap {
                source: x.clone(),
                target: current.clone(),
                lo: fwd.lo,
                comps: fwd.comps,
            },
            bwd: ChainMap {
                source: current,
                target: x.clone(),
                lo: bwd.lo,
                comps: bwd.comps,
            },
        },
    ))
}

fn eliminate_once(x: &Complex) -> Result<Option<(Complex, ChainMap, ChainMap)>> {
    let f = x.algebra.field;
    for n in x.lo..x.hi() {
        if x.dim_at(n) == 0 || x.dim_at(n + 1) == 0 {
            continue;
        }
        let src_parts = decompose_module(&x.obj_at(n))?;
        let tgt_parts = decompose_module(&x.obj_at(n + 1))?;
        let src_stack = src_parts
            .iter()
            .map(|(_, e)| e.clone())
            .reduce(|a, b| a.vstack(&b))
            .unwrap();
        let tgt_stack = tgt_parts
            .iter()
            .map(|(_, e)| e.clone())
            .reduce(|a, b| a.vstack(&b))
            .unwrap();
        let src_inv = src_stack.inverse().expect("summand embeddings stack to iso");
        let tgt_inv = tgt_stack.inverse().expect("summand embeddings stack to iso");
        // differential in decomposed coordinates
        let d_dec = src_stack.mul(&x.diff_at(n)).mul(&tgt_inv);
        // find an invertible block
        let mut src_off = vec![0usize; src_parts.len()];
        for i in 1..src_parts.len() {
            src_off[i] = src_off[i - 1] + src_parts[i - 1].0.dim;
        }
        let mut tgt_off = vec![0usize; tgt_parts.len()];
        for j in 1..tgt_parts.len() {
            tgt_off[j] = tgt_off[j - 1] + tgt_parts[j - 1].0.dim;
        }
        for (i, (a, _)) in src_parts.iter().enumerate() {
            for (j, (b, _)) in tgt_parts.iter().enumerate() {
                if a.dim != b.dim || a.dim == 0 {
                    continue;
                }
                let blk = d_dec.submatrix(
                    src_off[i],
                    src_off[i] + a.dim,
                    tgt_off[j],
                    tgt_off[j] + b.dim,
                );
                if !blk.is_invertible() {
                    continue;
                }
                return Ok(Some(eliminate_pair(
                    x, n, &src_parts, &tgt_parts, &src_stack, &src_inv, &tgt_stack, &tgt_inv,
                    &d_dec, i, j,
                )));
            }
        }
        let _ = f;
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn eliminate_pair(
    x: &Complex,
    n: i64,
    src_parts: &[(Module, Matrix)],
    tgt_parts: &[(Module, Matrix)],
    src_stack: &Matrix,
    src_inv: &Matrix,
    tgt_stack: &Matrix,
    tgt_inv: &Matrix,
    d_dec: &Matrix,
    i0: usize,
    j0: usize,
) -> (Complex, ChainMap, ChainMap) {
    let f = x.algebra.field;
    // permute the eliminated summands last
    let src_order: Vec<usize> = (0..src_parts.len()).filter(|&i| i != i0).chain([i0]).collect();
    let tgt_order: Vec<usize> = (0..tgt_parts.len()).filter(|&j| j != j0).chain([j0]).collect();
    let src_dims: Vec<usize> = src_parts.iter().map(|(m, _)| m.dim).collect();
    let tgt_dims: Vec<usize> = tgt_parts.iter().map(|(m, _)| m.dim).collect();
    let perm = |order: &[usize], dims: &[usize]| -> Matrix {
        let total: usize = dims.iter().sum();
        let mut offs = vec![0usize; dims.len()];
        for k in 1..dims.len() {
            offs[k] = offs[k - 1] + dims[k - 1];
        }
        // maps old decomposed coords to reordered coords
        let mut m = Matrix::zeros(f, total, total);
        let mut new_off = 0usize;
        for &k in order {
            for t in 0..dims[k] {
                m.set(offs[k] + t, new_off + t, f.one());
            }
            new_off += dims[k];
        }
        m
    };
    let ps = perm(&src_order, &src_dims);
    let pt = perm(&tgt_order, &tgt_dims);
    // coordinates: X^n --src_inv--> dec --ps--> [W | A], similarly target
    let to_wa = src_inv.mul(&ps);
    let from_wa = ps.transpose().mul(src_stack);
    let to_vb = tgt_inv.mul(&pt);
    let from_vb = pt.transpose().mul(tgt_stack);
    let a_dim = src_dims[i0];
    let b_dim = tgt_dims[j0];
    let w_dim: usize = src_dims.iter().sum::<usize>() - a_dim;
    let v_dim: usize = tgt_dims.iter().sum::<usize>() - b_dim;
    // reordered differential blocks
    let d_wa = ps.transpose().mul(d_dec).mul(&pt);
    let delta = d_wa.submatrix(0, w_dim, 0, v_dim);
    let beta = d_wa.submatrix(0, w_dim, v_dim, v_dim + b_dim);
    let gamma = d_wa.submatrix(w_dim, w_dim + a_dim, 0, v_dim);
    let t = d_wa.submatrix(w_dim, w_dim + a_dim, v_dim, v_dim + b_dim);
    let t_inv = t.inverse().expect("pivot block is invertible");
    // new modules at n and n+1
    let w_mods: Vec<&Module> = src_order[..src_order.len() - 1]
        .iter()
        .map(|&k| &src_parts[k].0)
        .collect();
    let v_mods: Vec<&Module> = tgt_order[..tgt_order.len() - 1]
        .iter()
        .map(|&k| &tgt_parts[k].0)
        .collect();
    let w_mod = if w_mods.is_empty() {
        Module::zero(x.algebra.clone())
    } else {
        Module::direct_sum(&w_mods).0
    };
    let v_mod = if v_mods.is_empty() {
        Module::zero(x.algebra.clone())
    } else {
        Module::direct_sum(&v_mods).0
    };
    // assemble the new complex
    let mut objects = Vec::new();
    let mut diffs = Vec::new();
    let sel_w = Matrix::identity(f, w_dim).vstack(&Matrix::zeros(f, a_dim, w_dim));
    let inc_v = Matrix::identity(f, v_dim).hstack(&Matrix::zeros(f, v_dim, b_dim));
    for m in x.lo..=x.hi() {
        if m == n {
            objects.push(w_mod.clone());
        } else if m == n + 1 {
            objects.push(v_mod.clone());
        } else {
            objects.push(x.obj_at(m));
        }
        if m < x.hi() {
            let d = if m == n - 1 {
                x.diff_at(m).mul(&to_wa).mul(&sel_w)
            } else if m == n {
                delta.sub(&beta.mul(&t_inv).mul(&gamma))
            } else if m == n + 1 {
                inc_v.mul(&from_vb).mul(&x.diff_at(m))
            } else {
                x.diff_at(m)
            };
            diffs.push(d);
        }
    }
    let reduced = Complex {
        algebra: x.algebra.clone(),
        lo: x.lo,
        objects,
        diffs,
        below: x.below,
        above: x.above,
    };
    // F : X -> reduced; G : reduced -> X
    let s_corr = t_inv.mul(&gamma).neg(); // B -> V
    let g_corr = beta.mul(&t_inv).neg(); // W -> A
    let fwd = ChainMap::build(x, &reduced, |m| {
        if m == n {
            to_wa.mul(&sel_w)
        } else if m == n + 1 {
            to_vb.mul(&Matrix::identity(f, v_dim).vstack(&s_corr))
        } else {
            Matrix::identity(f, x.dim_at(m))
        }
    })
    .expect("forward elimination map is a chain map");
    let bwd = ChainMap::build(&reduced, x, |m| {
        if m == n {
            Matrix::identity(f, w_dim).hstack(&g_corr).mul(&from_wa)
        } else if m == n + 1 {
            inc_v.mul(&from_vb)
        } else {
            Matrix::identity(f, x.dim_at(m))
        }
    })
    .expect("backward elimination map is a chain map");
    (reduced, fwd, bwd)
}

/// Invariants of a compact-type complex: bounded below (up to the window),
/// finite-dimensional cohomology, and vanishing cohomology above a bound.
pub struct CompactWitness {
    pub bounded_below: bool,
    pub cohomology_dims: Vec<(i64, usize)>,
    pub top_vanishing_from: Option<i64>,
}

pub fn compact_witness(x: &Complex, guard: i64) -> CompactWitness {
    let bounded_below = x.below == Edge::Genuine;
    let lo_check = if x.below == Edge::Truncated {
        x.lo + guard
    } else {
        x.lo
    };
    let hi_check = if x.above == Edge::Truncated {
        x.hi() - guard
    } else {
        x.hi()
    };
    let mut dims = Vec::new();
    for n in lo_check..=hi_check {
        dims.push((n, x.cohomology_dim(n)));
    }
    let mut top_vanishing_from = None;
    for &(n, d) in dims.iter().rev() {
        if d == 0 {
            top_vanishing_from = Some(n);
        } else {
            break;
        }
    }
    CompactWitness {
        bounded_below,
        cohomology_dims: dims,
        top_vanishing_from,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::module::Ctx;
    use crate::presets;

    fn fq() -> FieldSpec {
        FieldSpec::Rationals
    }

    /// ... -> A --x--> A --x--> A -> ... truncated to [lo, hi] over k[x]/(x^2)
    fn periodic_complex(ctx: &Ctx, lo: i64, hi: i64) -> Complex {
        let reg = Module::regular(ctx.alg.clone());
        let xact = reg.action[1].clone();
        let n = (hi - lo + 1) as usize;
        Complex::new(
            ctx.alg.clone(),
            lo,
            vec![reg; n],
            vec![xact; n - 1],
            Edge::Truncated,
            Edge::Truncated,
        )
        .unwrap()
    }

    #[test]
    fn validate_rejects_bad_squares() {
        let ctx = Ctx::new(presets::t1(fq()));
        let reg = Module::regular(ctx.alg.clone());
        let id = Matrix::identity(fq(), 2);
        let bad = Complex::new(
            ctx.alg.clone(),
            0,
            vec![reg.clone(), reg.clone(), reg.clone()],
            vec![id.clone(), id],
            Edge::Genuine,
            Edge::Genuine,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn cycles_and_cohomology_of_module_complex() {
        let ctx = Ctx::new(presets::t2(fq()));
        let s = Module::simple_at(&ctx.alg, 0);
        let c = Complex::from_module(s.clone(), 0);
        assert_eq!(c.cohomology_dim(0), 1);
        assert_eq!(c.cohomology_dim(1), 0);
    }

    #[test]
    fn exact_complex_has_no_cohomology_inside() {
        let ctx = Ctx::new(presets::t1(fq()));
        let c = periodic_complex(&ctx, 0, 6);
        for n in 1..6 {
            assert_eq!(c.cohomology_dim(n), 0, "degree {n}");
        }
        // the ends see truncation junk
        assert_eq!(c.cohomology_dim(0), 1);
        assert_eq!(c.cohomology_dim(6), 1);
    }

    #[test]
    fn shift_flips_signs_and_degrees() {
        let ctx = Ctx::new(presets::t1(fq()));
        let c = periodic_complex(&ctx, 0, 4);
        let s = c.shift(1);
        s.validate().unwrap();
        assert_eq!(s.lo, -1);
        assert_eq!(s.diff_at(-1), c.diff_at(0).neg());
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let ctx = Ctx::new(presets::t1(fq()));
        let c = periodic_complex(&ctx, 0, 4);
        let id = ChainMap::identity(&c);
        let cn = cone(&id);
        cn.complex.validate().unwrap();
        cn.incl.validate().unwrap();
        cn.proj.validate().unwrap();
        let h = contracting_homotopy(&cn.complex).unwrap();
        assert!(h.is_some());
        // verify the witness
        let h = h.unwrap();
        let b = h.boundary(&cn.complex, &cn.complex);
        assert_eq!(
            b.comp_at(2),
            Matrix::identity(fq(), cn.complex.dim_at(2))
        );
    }

    #[test]
    fn homotopy_hom_space_of_truncated_injective_resolution() {
        // End of iS over k[x]/(x^2): raw dimension sees an edge class, the
        // guarded dimension is the true stable value 1
        let ctx = Ctx::new(presets::t1(fq()));
        let c = periodic_complex(&ctx, 0, 6);
        let mut is_complex = c.clone();
        is_complex.below = Edge::Genuine; // genuinely bounded below at 0
        let hh = homotopy_hom_space(&is_complex, &is_complex).unwrap();
        assert_eq!(hh.raw_dim(), 2);
        assert_eq!(hh.dim_with_guard(2), 1);
        // stability under enlargement
        let c8 = periodic_complex(&ctx, 0, 8);
        let mut is8 = c8.clone();
        is8.below = Edge::Genuine;
        let hh8 = homotopy_hom_space(&is8, &is8).unwrap();
        assert_eq!(hh8.dim_with_guard(2), 1);
    }

    #[test]
    fn hom_k_against_shift_counts_ext() {
        // Hom_K(iS, iS[1]) = Ext^1(S, S) = 1 over the dual numbers
        let ctx = Ctx::new(presets::t1(fq()));
        let mut c = periodic_complex(&ctx, 0, 6);
        c.below = Edge::Genuine;
        let shifted = c.shift(1);
        let hh = homotopy_hom_space(&c, &shifted).unwrap();
        assert_eq!(hh.dim_with_guard(2), 1);
    }

    #[test]
    fn cone_of_contraction_respects_classes() {
        let ctx = Ctx::new(presets::t1(fq()));
        let mut c = periodic_complex(&ctx, 0, 6);
        c.below = Edge::Genuine;
        let hh = homotopy_hom_space(&c, &c).unwrap();
        let id = ChainMap::identity(&c);
        assert!(hh.is_nonzero_class(&id));
        assert!(hh.null_homotopy_witness(&id).is_none());
    }

    #[test]
    fn minimize_kills_contractible_cone() {
        let ctx = Ctx::new(presets::t1(fq()));
        let c = periodic_complex(&ctx, 0, 3);
        let id = ChainMap::identity(&c);
        let cn = cone(&id);
        let (reduced, equiv) = minimize(&cn.complex).unwrap();
        assert!(reduced.is_zero_complex());
        equiv.fwd.validate().unwrap();
        equiv.bwd.validate().unwrap();
    }

    #[test]
    fn minimize_preserves_homotopy_type() {
        let ctx = Ctx::new(presets::t1(fq()));
        let reg = Module::regular(ctx.alg.clone());
        let s = Module::simple_at(&ctx.alg, 0);
        // 0 -> S -> A -> S -> 0 spread out as a complex with an added
        // contractible summand A = A
        let incl = Matrix::from_ints(fq(), &[&[0, 1]]);
        let proj = Matrix::from_ints(fq(), &[&[1], &[0]]);
        let base = Complex::new(
            ctx.alg.clone(),
            0,
            vec![s.clone(), reg.clone(), s.clone()],
            vec![incl, proj],
            Edge::Genuine,
            Edge::Genuine,
        )
        .unwrap();
        let triv = Complex::new(
            ctx.alg.clone(),
            1,
            vec![reg.clone(), reg.clone()],
            vec![Matrix::identity(fq(), 2)],
            Edge::Genuine,
            Edge::Genuine,
        )
        .unwrap();
        let (sum, _) = Complex::direct_sum(&[&base, &triv]);
        sum.validate().unwrap();
        let (reduced, equiv) = minimize(&sum).unwrap();
        // the contractible pair is gone
        assert_eq!(reduced.dim_at(1), 2);
        assert_eq!(reduced.dim_at(2), 1);
        // equivalence: fwd then bwd homotopic to identity
        equiv.fwd.validate().unwrap();
        equiv.bwd.validate().unwrap();
        let comp = equiv.fwd.then(&equiv.bwd);
        let hh = homotopy_hom_space(&sum, &sum).unwrap();
        let diff = comp.add(&ChainMap::identity(&sum).neg());
        assert!(hh.null_homotopy_witness(&diff).is_some());
        let comp2 = equiv.bwd.then(&equiv.fwd);
        let hh2 = homotopy_hom_space(&reduced, &reduced).unwrap();
        let diff2 = comp2.add(&ChainMap::identity(&reduced).neg());
        assert!(hh2.null_homotopy_witness(&diff2).is_some());
        // cohomology is untouched
        for n in 0..=2 {
            assert_eq!(sum.cohomology_dim(n), reduced.cohomology_dim(n));
        }
    }

    #[test]
    fn compact_witness_of_resolution() {
        let ctx = Ctx::new(presets::t1(fq()));
        let mut c = periodic_complex(&ctx, 0, 6);
        c.below = Edge::Genuine;
        let w = compact_witness(&c, 2);
        assert!(w.bounded_below);
        // H^0 = S, the rest vanishes on the guarded range
        assert_eq!(w.cohomology_dims[0], (0, 1));
        for (n, d) in &w.cohomology_dims[1..] {
            assert_eq!(*d, 0, "degree {n}");
        }
    }
}
