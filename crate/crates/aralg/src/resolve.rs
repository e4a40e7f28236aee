//! Projective covers, minimal resolutions, injective presentations, the
//! transpose, the Auslander-Reiten translate (both routes), Ext^1 and stable
//! hom spaces.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kernel_basis, solve_left, Matrix, Subspace};
use crate::module::{
    hom_coords, hom_space, is_module_hom, same_algebra, tensor_hom, tensor_over_algebra,
    Bimodule, Ctx, Module, TensorModule,
};

/// m * rad(A) as a subspace of m.
pub fn radical_subspace(m: &Module) -> Subspace {
    let f = m.algebra.field;
    let rad = &m.algebra.radical;
    let mut rows = Vec::new();
    for r in 0..rad.basis.rows {
        let act = m.action_of(&rad.basis.row(r));
        for i in 0..m.dim {
            rows.push(act.row(i));
        }
    }
    if rows.is_empty() {
        Subspace::zero(f, m.dim)
    } else {
        Subspace::from_rows(&Matrix::from_rows(f, rows))
    }
}

/// Socle-side analogue: the subspace annihilated by the radical.
pub fn socle_subspace(m: &Module) -> Subspace {
    let f = m.algebra.field;
    let rad = &m.algebra.radical;
    if rad.basis.rows == 0 {
        return Subspace::full(f, m.dim);
    }
    let mut stacked: Option<Matrix> = None;
    for r in 0..rad.basis.rows {
        let act = m.action_of(&rad.basis.row(r));
        stacked = Some(match stacked {
            None => act,
            Some(s) => s.hstack(&act),
        });
    }
    kernel_basis(&stacked.unwrap())
}

pub struct ProjectiveCover {
    pub cover: Module,
    /// cover -> m, surjective with superfluous kernel
    pub epi: Matrix,
    /// vertex index of each indecomposable summand, in order
    pub summands: Vec<usize>,
}

/// Projective cover from the top: P = (+) e_v A^{t_v} with t_v the
/// multiplicity of the simple at v in m / m rad.
pub fn projective_cover(m: &Module) -> ProjectiveCover {
    let a = &m.algebra;
    let f = a.field;
    if m.dim == 0 {
        return ProjectiveCover {
            cover: Module::zero(a.clone()),
            epi: Matrix::zeros(f, 0, 0),
            summands: Vec::new(),
        };
    }
    let mrad = radical_subspace(m);
    let (top, _proj_top, sect_top) = m.quotient_with_section(&mrad);
    let mut gens: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for v in 0..a.num_vertices() {
        let e = a.idempotents[v];
        let img = Subspace::from_rows(&top.action[e]);
        for r in 0..img.basis.rows {
            // lift the top basis vector and project onto the idempotent part
            let w = Matrix::from_rows(f, vec![img.basis.row(r)]);
            let u = w.mul(&sect_top).mul(&m.action[e]);
            gens.push((v, u.row(0)));
        }
    }
    if gens.is_empty() {
        // only possible for the zero module, handled above
        unreachable!("nonzero module with empty top");
    }
    let projectives: Vec<Module> = gens
        .iter()
        .map(|(v, _)| Module::projective_at(a, *v))
        .collect();
    let refs: Vec<&Module> = projectives.iter().collect();
    let (cover, _maps) = Module::direct_sum(&refs);
    // epi block per generator: e_v A -> m, p -> u * rho(p); the basis of
    // e_v A is the row space of left multiplication by e_v, matching the
    // construction in Module::projective_at
    let mut blocks: Vec<Matrix> = Vec::new();
    for (v, u) in &gens {
        let l = a.left_mult_matrix(&a.idempotent_vec(*v));
        let sub = Subspace::from_rows(&l);
        let mut rows = Vec::with_capacity(sub.basis.rows);
        for i in 0..sub.basis.rows {
            let coords = sub.basis.row(i);
            let um = Matrix::from_rows(f, vec![u.clone()]).mul(&m.action_of(&coords));
            rows.push(um.row(0));
        }
        blocks.push(Matrix::from_rows(f, rows));
    }
    let mut epi = blocks[0].clone();
    for b in &blocks[1..] {
        epi = epi.vstack(b);
    }
    debug_assert!(is_module_hom(&cover, &epi, m), "cover map must intertwine");
    assert_eq!(epi.rank(), m.dim, "cover must be surjective");
    let ker = kernel_basis(&epi);
    let crad = radical_subspace(&cover);
    assert!(
        crad.contains(&ker),
        "cover kernel must be superfluous (inside rad)"
    );
    ProjectiveCover {
        cover,
        epi,
        summands: gens.into_iter().map(|(v, _)| v).collect(),
    }
}

/// A minimal projective resolution segment
/// `P_len -> ... -> P_1 -> P_0 -> m -> 0`.
pub struct Resolution {
    pub target: Module,
    pub modules: Vec<Module>,
    /// diffs[i] : P_{i+1} -> P_i
    pub diffs: Vec<Matrix>,
    /// P_0 -> m
    pub aug: Matrix,
    /// vertex indices of the summands of each P_i
    pub summands: Vec<Vec<usize>>,
}

pub fn minimal_projective_resolution(m: &Module, len: usize) -> Resolution {
    let c0 = projective_cover(m);
    let mut modules = vec![c0.cover];
    let mut summands = vec![c0.summands];
    let mut diffs = Vec::new();
    let aug = c0.epi;
    let mut last_epi = aug.clone();
    for _ in 0..len {
        let prev = modules.last().unwrap();
        let ker = kernel_basis(&last_epi);
        let (kmod, incl) = prev.submodule(&ker);
        let c = projective_cover(&kmod);
        let d = c.epi.mul(&incl);
        diffs.push(d);
        last_epi = c.epi.clone();
        modules.push(c.cover);
        summands.push(c.summands);
    }
    Resolution {
        target: m.clone(),
        modules,
        diffs,
        aug,
        summands,
    }
}

/// Minimal projective presentation `P_1 -> P_0 -> m`.
pub fn minimal_projective_presentation(m: &Module) -> Resolution {
    minimal_projective_resolution(m, 1)
}

pub fn is_projective(m: &Module) -> bool {
    if m.dim == 0 {
        return true;
    }
    let c = projective_cover(m);
    c.cover.dim == m.dim
}

pub fn is_injective(ctx: &Ctx, m: &Module) -> bool {
    is_projective(&m.dual(&ctx.op))
}

/// A minimal injective copresentation `0 -> m -> I^0 -> I^1 -> ...`,
/// computed by dualizing a projective resolution over the opposite algebra.
pub struct Copresentation {
    pub target: Module,
    pub modules: Vec<Module>,
    /// diffs[i] : I^i -> I^{i+1}
    pub diffs: Vec<Matrix>,
    /// m -> I^0, injective
    pub coaug: Matrix,
    pub summands: Vec<Vec<usize>>,
}

pub fn injective_copresentation(ctx: &Ctx, m: &Module, len: usize) -> Copresentation {
    let dm = m.dual(&ctx.op);
    let res = minimal_projective_resolution(&dm, len);
    let op_ctx = ctx.opposite_ctx();
    let modules: Vec<Module> = res.modules.iter().map(|p| p.dual(&op_ctx.op)).collect();
    let diffs: Vec<Matrix> = res.diffs.iter().map(|d| d.transpose()).collect();
    let coaug = res.aug.transpose();
    Copresentation {
        target: m.clone(),
        modules,
        diffs,
        coaug,
        summands: res.summands.clone(),
    }
}

pub fn injective_presentation(ctx: &Ctx, m: &Module) -> Copresentation {
    injective_copresentation(ctx, m, 1)
}

/// Hom_A(p, A) as a right module over the opposite algebra, with the basis
/// of intertwiners and, for each basis element of p embedded in the regular
/// module, its image coordinates.
pub struct DualOfProjective {
    pub module: Module,
    pub basis: Vec<Matrix>,
}

pub fn lambda_dual(ctx: &Ctx, p: &Module) -> Result<DualOfProjective> {
    let a = &ctx.alg;
    let f = a.field;
    let reg = Module::regular(a.clone());
    let basis = hom_space(p, &reg)?;
    let r = basis.len();
    let mut action = Vec::with_capacity(a.dim);
    for t in 0..a.dim {
        // (phi *op b_t)(x) = b_t * phi(x): postcompose with left multiplication
        let l = a.left_mult_matrix(&a.basis_vec(t));
        let rows: Vec<Vec<Scalar>> = basis
            .iter()
            .map(|phi| hom_coords(&basis, &phi.mul(&l)).expect("left action closure"))
            .collect();
        action.push(if rows.is_empty() {
            Matrix::zeros(f, 0, 0)
        } else {
            Matrix::from_rows(f, rows)
        });
    }
    Ok(DualOfProjective {
        module: Module {
            algebra: ctx.op.clone(),
            dim: r,
            action,
        },
        basis,
    })
}

/// The transpose: cokernel of `Hom(P_0, A) -> Hom(P_1, A)` for a minimal
/// presentation of m; a module over the opposite algebra.
pub struct Transpose {
    pub module: Module,
    pub presentation: Resolution,
}

pub fn transpose(ctx: &Ctx, m: &Module) -> Result<Transpose> {
    let pres = minimal_projective_presentation(m);
    let p0 = &pres.modules[0];
    let p1 = &pres.modules[1];
    let d1 = &pres.diffs[0];
    let h0 = lambda_dual(ctx, p0)?;
    let h1 = lambda_dual(ctx, p1)?;
    let f = ctx.field();
    // precomposition with d1
    let rows: Vec<Vec<Scalar>> = h0
        .basis
        .iter()
        .map(|phi| hom_coords(&h1.basis, &d1.mul(phi)).expect("precomposition closure"))
        .collect();
    let map = if rows.is_empty() {
        Matrix::zeros(f, 0, h1.module.dim)
    } else {
        Matrix::from_rows(f, rows)
    };
    let image = Subspace::from_rows(&map);
    let (module, _proj, _sect) = h1.module.quotient_with_section_parts(&image);
    Ok(Transpose {
        module,
        presentation: pres,
    })
}

/// The Auslander-Reiten translate DTr m, via the transpose.
pub fn ar_translate(ctx: &Ctx, m: &Module) -> Result<Module> {
    Ok(transpose(ctx, m)?.module.dual(&ctx.alg))
}

/// Second route: cycles in degree -1 of (pm (x) DA), i.e. the kernel of
/// `delta_1 (x) DA`.
pub struct TranslateViaTensor {
    pub module: Module,
    /// inclusion of the kernel into P_1 (x) DA
    pub incl: Matrix,
    pub p1_tensor: TensorModule,
    pub p0_tensor: TensorModule,
    pub tensor_diff: Matrix,
    pub presentation: Resolution,
}

pub fn ar_translate_via_tensor(ctx: &Ctx, m: &Module) -> Result<TranslateViaTensor> {
    let pres = minimal_projective_presentation(m);
    let da = Bimodule::dual_regular(ctx);
    let t1 = tensor_over_algebra(&pres.modules[1], &da)?;
    let t0 = tensor_over_algebra(&pres.modules[0], &da)?;
    let d = tensor_hom(&t1, &t0, &pres.diffs[0]);
    let ker = kernel_basis(&d);
    let (module, incl) = t1.module.submodule(&ker);
    Ok(TranslateViaTensor {
        module,
        incl,
        p1_tensor: t1,
        p0_tensor: t0,
        tensor_diff: d,
        presentation: pres,
    })
}

/// Ext^1(m, n): cohomology of Hom(P_bullet, n) at position 1 for a minimal
/// resolution of m. Basis returned as cocycles P_1 -> n.
pub struct Ext1 {
    pub dim: usize,
    /// representatives of a basis of Ext^1, cocycles P_1 -> n
    pub cocycle_reps: Vec<Matrix>,
    pub cocycle_basis: Vec<Matrix>,
    /// coordinates (against `cocycle_basis`) of the coboundary subspace
    pub coboundaries: Subspace,
    pub resolution: Resolution,
}

pub fn ext1(m: &Module, n: &Module) -> Result<Ext1> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.algebra.field;
    let res = minimal_projective_resolution(m, 2);
    let hom_p1 = hom_space(&res.modules[1], n)?;
    let d2 = &res.diffs[1];
    let d1 = &res.diffs[0];
    // cocycles: phi with d2 * phi = 0
    let mut rows = Vec::new();
    for phi in &hom_p1 {
        rows.push(d2.mul(phi).vectorize());
    }
    let cocycle_coords = if rows.is_empty() {
        Subspace::zero(f, 0)
    } else {
        kernel_basis(&Matrix::from_rows(f, rows))
    };
    let cocycle_basis: Vec<Matrix> = (0..cocycle_coords.basis.rows)
        .map(|i| {
            let coords = cocycle_coords.basis.row(i);
            let mut acc = Matrix::zeros(f, res.modules[1].dim, n.dim);
            for (j, c) in coords.iter().enumerate() {
                if !f.is_zero(c) {
                    acc = acc.add(&hom_p1[j].scale(c));
                }
            }
            acc
        })
        .collect();
    // coboundaries: d1 * psi for psi: P_0 -> n, in cocycle coordinates
    let hom_p0 = hom_space(&res.modules[0], n)?;
    let mut cob_rows = Vec::new();
    for psi in &hom_p0 {
        let b = d1.mul(psi);
        let coords = hom_coords(&cocycle_basis, &b).expect("coboundary is a cocycle");
        cob_rows.push(coords);
    }
    let coboundaries = if cob_rows.is_empty() || cocycle_basis.is_empty() {
        Subspace::zero(f, cocycle_basis.len())
    } else {
        Subspace::from_rows(&Matrix::from_rows(f, cob_rows))
    };
    let dim = cocycle_basis.len() - coboundaries.rank();
    // representatives: cocycles whose coordinates complete the coboundary basis
    let mut reps = Vec::new();
    if dim > 0 {
        let mut span = coboundaries.clone();
        for (i, cc) in cocycle_basis.iter().enumerate() {
            if reps.len() == dim {
                break;
            }
            let mut unit = vec![f.zero(); cocycle_basis.len()];
            unit[i] = f.one();
            if !span.contains_vector(&unit) {
                span = span.sum(&Subspace::from_rows(&Matrix::from_rows(f, vec![unit])));
                reps.push(cc.clone());
            }
        }
    }
    Ok(Ext1 {
        dim,
        cocycle_reps: reps,
        cocycle_basis,
        coboundaries,
        resolution: res,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StableMode {
    ModuloProjectives,
    ModuloInjectives,
}

/// Hom(m, n) modulo maps factoring through projectives (via the cover of n)
/// or injectives (via the envelope of m).
pub struct StableHom {
    pub dim: usize,
    pub hom_basis: Vec<Matrix>,
    /// coordinates of the factoring subspace against `hom_basis`
    pub factoring: Subspace,
}

pub fn stable_hom(ctx: &Ctx, m: &Module, n: &Module, mode: StableMode) -> Result<StableHom> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.algebra.field;
    let basis = hom_space(m, n)?;
    let factor_maps: Vec<Matrix> = match mode {
        StableMode::ModuloProjectives => {
            let c = projective_cover(n);
            let through = hom_space(m, &c.cover)?;
            through.iter().map(|h| h.mul(&c.epi)).collect()
        }
        StableMode::ModuloInjectives => {
            let cop = injective_presentation(ctx, m);
            let i0 = &cop.modules[0];
            let through = hom_space(i0, n)?;
            through.iter().map(|h| cop.coaug.mul(h)).collect()
        }
    };
    let mut rows = Vec::new();
    for fm in &factor_maps {
        rows.push(hom_coords(&basis, fm).expect("factoring map is a hom"));
    }
    let factoring = if rows.is_empty() || basis.is_empty() {
        Subspace::zero(f, basis.len())
    } else {
        Subspace::from_rows(&Matrix::from_rows(f, rows))
    };
    Ok(StableHom {
        dim: basis.len() - factoring.rank(),
        hom_basis: basis,
        factoring,
    })
}

/// A short exact sequence 0 -> sub -> mid -> quo -> 0 with exactness
/// certificates checked on demand.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub sub: Module,
    pub mid: Module,
    pub quo: Module,
    pub incl: Matrix,
    pub proj: Matrix,
}

impl ShortExactSequence {
    pub fn certify(&self) -> Result<()> {
        if self.mid.dim != self.sub.dim + self.quo.dim {
            return Err(Error::Validation("dimensions do not add up".into()));
        }
        if !is_module_hom(&self.sub, &self.incl, &self.mid)
            || !is_module_hom(&self.mid, &self.proj, &self.quo)
        {
            return Err(Error::Validation("sequence maps do not intertwine".into()));
        }
        if self.incl.rank() != self.sub.dim {
            return Err(Error::Validation("inclusion is not injective".into()));
        }
        if self.proj.rank() != self.quo.dim {
            return Err(Error::Validation("projection is not surjective".into()));
        }
        let img = Subspace::from_rows(&self.incl);
        let ker = kernel_basis(&self.proj);
        if !(img.contains(&ker) && ker.contains(&img)) {
            return Err(Error::Validation("image != kernel in the middle".into()));
        }
        Ok(())
    }

    /// A module-hom section s : quo -> mid with s * proj = id, if one exists.
    pub fn section(&self) -> Option<Matrix> {
        let f = self.mid.algebra.field;
        let homs = hom_space(&self.quo, &self.mid).ok()?;
        if homs.is_empty() {
            return if self.quo.dim == 0 {
                Some(Matrix::zeros(f, 0, self.mid.dim))
            } else {
                None
            };
        }
        let rows: Vec<Vec<Scalar>> = homs.iter().map(|h| h.mul(&self.proj).vectorize()).collect();
        let target = Matrix::identity(f, self.quo.dim).vectorize();
        let x = solve_left(&Matrix::from_rows(f, rows), &target)?;
        let mut s = Matrix::zeros(f, self.quo.dim, self.mid.dim);
        for (j, c) in x.iter().enumerate() {
            if !f.is_zero(c) {
                s = s.add(&homs[j].scale(c));
            }
        }
        Some(s)
    }
}

/// The extension of `a` by `b` classified by a cocycle `P_1(a) -> b`:
/// the pushout of the presentation of `a` along the cocycle.
pub fn extension_from_cocycle(
    res_a: &Resolution,
    b: &Module,
    cocycle: &Matrix,
) -> Result<ShortExactSequence> {
    let a_mod = &res_a.target;
    let p0 = &res_a.modules[0];
    let d1 = &res_a.diffs[0];
    let f = a_mod.algebra.field;
    let (p0b, maps) = Module::direct_sum(&[p0, b]);
    let (incl_p0, _) = &maps[0];
    let (incl_b, _) = &maps[1];
    // image of P_1 under (d1, -cocycle)
    let glue = d1.mul(incl_p0).sub(&cocycle.mul(incl_b));
    let img = Subspace::from_rows(&glue);
    let (e, proj_e, sect_e) = p0b.quotient_with_section(&img);
    let incl = incl_b.mul(&proj_e);
    // induced map E -> a via (p, b) -> aug(p)
    let collapse = res_a.aug.vstack(&Matrix::zeros(f, b.dim, a_mod.dim));
    let proj = sect_e.mul(&collapse);
    // well-definedness: the glued subspace must map to zero
    debug_assert!(img.basis.mul(&collapse).is_zero());
    let ses = ShortExactSequence {
        sub: b.clone(),
        mid: e,
        quo: a_mod.clone(),
        incl,
        proj,
    };
    ses.certify()?;
    Ok(ses)
}

impl Module {
    /// Quotient by an invariant subspace with projection and section.
    pub fn quotient_with_section(&self, sub: &Subspace) -> (Module, Matrix, Matrix) {
        self.quotient_with_section_parts(sub)
    }

    pub(crate) fn quotient_with_section_parts(&self, sub: &Subspace) -> (Module, Matrix, Matrix) {
        let quo = crate::linalg::Quotient::by(sub);
        let mut action = Vec::with_capacity(self.algebra.dim);
        for t in 0..self.algebra.dim {
            action.push(quo.sect.mul(&self.action[t]).mul(&quo.proj));
        }
        (
            Module {
                algebra: self.algebra.clone(),
                dim: quo.dim,
                action,
            },
            quo.proj,
            quo.sect,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::presets;

    fn fq() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn t1() -> Ctx {
        Ctx::new(presets::t1(fq()))
    }

    fn t2() -> Ctx {
        Ctx::new(presets::t2(fq()))
    }

    fn t3() -> Ctx {
        Ctx::new(presets::t3(fq()))
    }

    #[test]
    fn cover_of_projective_is_itself() {
        let ctx = t2();
        let p1 = Module::projective_at(&ctx.alg, 0);
        let c = projective_cover(&p1);
        assert_eq!(c.cover.dim, p1.dim);
        assert_eq!(kernel_basis(&c.epi).rank(), 0);
    }

    #[test]
    fn cover_of_simple_over_dual_numbers_is_regular() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let c = projective_cover(&s);
        assert_eq!(c.cover.dim, 2);
        assert_eq!(c.summands, vec![0]);
    }

    #[test]
    fn presentation_of_simple_over_dual_numbers_is_periodic() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let res = minimal_projective_resolution(&s, 3);
        for p in &res.modules {
            assert_eq!(p.dim, 2);
        }
        for d in &res.diffs {
            assert_eq!(d.rank(), 1);
        }
    }

    #[test]
    fn presentation_of_s1_over_a2() {
        let ctx = t2();
        let s1 = Module::simple_at(&ctx.alg, 0);
        let res = minimal_projective_presentation(&s1);
        assert_eq!(res.modules[0].dim, 2); // P_1 at vertex 1
        assert_eq!(res.modules[1].dim, 1); // P_2 at vertex 2
        assert_eq!(res.summands[0], vec![0]);
        assert_eq!(res.summands[1], vec![1]);
        // resolution of projective stops: P_1 of P_2 is zero
        let p2 = Module::projective_at(&ctx.alg, 1);
        let res2 = minimal_projective_presentation(&p2);
        assert_eq!(res2.modules[1].dim, 0);
    }

    #[test]
    fn injective_presentation_over_dual_numbers() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let cop = injective_presentation(&ctx, &s);
        assert_eq!(cop.modules[0].dim, 2); // envelope is the regular module
        assert_eq!(cop.modules[1].dim, 2);
        assert_eq!(cop.coaug.rank(), 1);
        // injective module has trivial copresentation tail
        let reg = Module::regular(ctx.alg.clone());
        let cop2 = injective_presentation(&ctx, &reg);
        assert_eq!(cop2.modules[1].dim, 0);
    }

    #[test]
    fn injectivity_and_projectivity_tests() {
        let ctx = t2();
        let p1 = Module::projective_at(&ctx.alg, 0);
        assert!(is_projective(&p1));
        // P1 over A2 is also injective (it is I2)
        assert!(is_injective(&ctx, &p1));
        let s1 = Module::simple_at(&ctx.alg, 0);
        assert!(!is_projective(&s1));
        assert!(is_injective(&ctx, &s1)); // S1 = I1 over A2
        let s2 = Module::simple_at(&ctx.alg, 1);
        assert!(is_projective(&s2));
        assert!(!is_injective(&ctx, &s2));
    }

    #[test]
    fn transpose_of_projective_vanishes() {
        let ctx = t2();
        let p = Module::projective_at(&ctx.alg, 0);
        let tr = transpose(&ctx, &p).unwrap();
        assert_eq!(tr.module.dim, 0);
    }

    #[test]
    fn transpose_of_simple_over_dual_numbers() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let tr = transpose(&ctx, &s).unwrap();
        assert_eq!(tr.module.dim, 1);
        assert!(same_algebra(&tr.module.algebra, &ctx.op));
    }

    #[test]
    fn translate_of_s1_is_s2_over_a2() {
        let ctx = t2();
        let s1 = Module::simple_at(&ctx.alg, 0);
        let tau = ar_translate(&ctx, &s1).unwrap();
        assert_eq!(tau.dim, 1);
        // supported at vertex 2
        let e2 = ctx.alg.idempotents[1];
        assert_eq!(tau.action[e2].at(0, 0), &fq().one());
        // and the tensor route gives the same dimension
        let via = ar_translate_via_tensor(&ctx, &s1).unwrap();
        assert_eq!(via.module.dim, 1);
        assert_eq!(via.module.action[e2].at(0, 0), &fq().one());
    }

    #[test]
    fn translate_of_projective_is_zero() {
        let ctx = t3();
        let reg = Module::regular(ctx.alg.clone());
        assert_eq!(ar_translate(&ctx, &reg).unwrap().dim, 0);
        assert_eq!(ar_translate_via_tensor(&ctx, &reg).unwrap().module.dim, 0);
    }

    #[test]
    fn translate_of_simple_over_dual_numbers_is_simple() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let tau = ar_translate(&ctx, &s).unwrap();
        assert_eq!(tau.dim, 1);
        let via = ar_translate_via_tensor(&ctx, &s).unwrap();
        assert_eq!(via.module.dim, 1);
    }

    #[test]
    fn ext1_values() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        assert_eq!(ext1(&s, &s).unwrap().dim, 1);
        let reg = Module::regular(ctx.alg.clone());
        assert_eq!(ext1(&reg, &s).unwrap().dim, 0);

        let ctx2 = t2();
        let s1 = Module::simple_at(&ctx2.alg, 0);
        let s2 = Module::simple_at(&ctx2.alg, 1);
        assert_eq!(ext1(&s1, &s2).unwrap().dim, 1);
        assert_eq!(ext1(&s2, &s1).unwrap().dim, 0);
    }

    #[test]
    fn stable_hom_values() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let reg = Module::regular(ctx.alg.clone());
        // maps from a projective vanish modulo projectives
        let sh = stable_hom(&ctx, &reg, &s, StableMode::ModuloProjectives).unwrap();
        assert_eq!(sh.dim, 0);
        // Hombar_inj(S, DTr S) has dimension 1 over the dual numbers
        let tau = ar_translate(&ctx, &s).unwrap();
        let sh2 = stable_hom(&ctx, &s, &tau, StableMode::ModuloInjectives).unwrap();
        assert_eq!(sh2.dim, 1);
    }

    #[test]
    fn hand_built_ses_certifies_and_does_not_split() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let reg = Module::regular(ctx.alg.clone());
        // S -> A by 1 -> x; A -> S by e -> 1, x -> 0
        let incl = Matrix::from_ints(fq(), &[&[0, 1]]);
        let proj = Matrix::from_ints(fq(), &[&[1], &[0]]);
        let ses = ShortExactSequence {
            sub: s.clone(),
            mid: reg,
            quo: s,
            incl,
            proj,
        };
        ses.certify().unwrap();
        assert!(ses.section().is_none());
    }

    #[test]
    fn extension_from_nonzero_cocycle_is_nonsplit() {
        let ctx = t1();
        let s = Module::simple_at(&ctx.alg, 0);
        let e = ext1(&s, &s).unwrap();
        assert_eq!(e.cocycle_reps.len(), 1);
        let ses = extension_from_cocycle(&e.resolution, &s, &e.cocycle_reps[0]).unwrap();
        assert_eq!(ses.mid.dim, 2);
        assert!(ses.section().is_none());
        // zero cocycle splits
        let zero = Matrix::zeros(fq(), e.resolution.modules[1].dim, 1);
        let split = extension_from_cocycle(&e.resolution, &s, &zero).unwrap();
        assert!(split.section().is_some());
    }

    #[test]
    fn socle_of_regular_dual_numbers() {
        let ctx = t1();
        let reg = Module::regular(ctx.alg.clone());
        let soc = socle_subspace(&reg);
        assert_eq!(soc.rank(), 1);
    }
}
