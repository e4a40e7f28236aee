//! Dense univariate polynomials over a [`FieldSpec`], used for minimal
//! polynomials and idempotent splitting.

use crate::field::{FieldSpec, Scalar};

/// Coefficients in ascending degree order; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    pub field: FieldSpec,
    pub coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Poly {
        while let Some(last) = coeffs.last() {
            if field.is_zero(last) {
                coeffs.pop();
            } else {
                break;
            }
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Poly {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Poly {
        Poly {
            field,
            coeffs: vec![field.one()],
        }
    }

    pub fn x(field: FieldSpec) -> Poly {
        Poly {
            field,
            coeffs: vec![field.zero(), field.one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports -1 for convenience.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
            let b = other.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
            out.push(f.add(&a, &b));
        }
        Poly::new(f, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|c| f.neg(c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = self.field.inv(l).unwrap();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn divmod(&self, d: &Poly) -> (Poly, Poly) {
        let f = self.field;
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = vec![f.zero(); (self.degree() - d.degree()).max(0) as usize + 1];
        let dlead_inv = f.inv(d.leading().unwrap()).unwrap();
        while !rem.is_zero() && rem.degree() >= d.degree() {
            let shift = (rem.degree() - d.degree()) as usize;
            let c = f.mul(rem.leading().unwrap(), &dlead_inv);
            quo[shift] = f.add(&quo[shift], &c);
            // rem -= c * x^shift * d
            let mut sub = vec![f.zero(); shift];
            sub.extend(d.coeffs.iter().map(|a| f.mul(a, &c)));
            rem = rem.sub(&Poly::new(f, sub));
        }
        (Poly::new(f, quo), rem)
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divmod(d).1
    }

    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divmod(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        if self.coeffs.len() <= 1 {
            return Poly::zero(f);
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(f.mul(c, &f.from_int(i as i64)));
        }
        Poly::new(f, out)
    }

    /// Evaluates the polynomial on a square matrix (Horner).
    pub fn eval_matrix(&self, m: &crate::linalg::Matrix) -> crate::linalg::Matrix {
        use crate::linalg::Matrix;
        let f = self.field;
        let n = m.rows;
        let mut acc = Matrix::zeros(f, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                let v = f.add(acc.at(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x.rem(&y);
        x = y;
        y = r;
    }
    if x.is_zero() {
        x
    } else {
        x.monic()
    }
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
pub fn egcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let f = a.field;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
    let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1);
        let ns = s0.sub(&q.mul(&s1));
        let nt = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let lead = r0.leading().unwrap().clone();
    let inv = f.inv(&lead).unwrap();
    (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
}

/// Squarefree decomposition `f = prod u_i^{m_i}` with the `u_i` squarefree,
/// monic and pairwise coprime. Yun's algorithm in characteristic zero; in
/// characteristic p the inseparable part is peeled off by p-th roots
/// (valid over prime fields, where Frobenius fixes scalars).
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field;
    let f = f.monic();
    if f.degree() <= 0 {
        return Vec::new();
    }
    match field.characteristic() {
        0 => yun(&f),
        p => squarefree_char_p(&f, p),
    }
}

fn yun(f: &Poly) -> Vec<(Poly, usize)> {
    let df = f.derivative();
    let a = gcd(f, &df);
    let mut b = f.div_exact(&a);
    let c = df.div_exact(&a);
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1usize;
    while b.degree() > 0 {
        let u = gcd(&b, &d);
        if u.degree() > 0 {
            out.push((u.clone(), i));
        }
        b = b.div_exact(&u);
        let cc = d.div_exact(&u);
        d = cc.sub(&b.derivative());
        i += 1;
    }
    out
}

fn squarefree_char_p(f: &Poly, p: u64) -> Vec<(Poly, usize)> {
    let field = f.field;
    let df = f.derivative();
    if df.is_zero() {
        // f = g(x^p) = g(x)^p over the prime field
        let mut g = Vec::new();
        for (i, c) in f.coeffs.iter().enumerate() {
            if i as u64 % p == 0 {
                g.push(c.clone());
            } else {
                assert!(field.is_zero(c));
            }
        }
        let root = Poly::new(field, g);
        return squarefree_char_p(&root.monic(), p)
            .into_iter()
            .map(|(u, m)| (u, m * p as usize))
            .collect();
    }
    let mut c = gcd(f, &df);
    let mut w = f.div_exact(&c);
    let mut out = Vec::new();
    let mut i = 1usize;
    while w.degree() > 0 {
        let y = gcd(&w, &c);
        let z = w.div_exact(&y);
        if z.degree() > 0 {
            out.push((z, i));
        }
        w = y.clone();
        c = c.div_exact(&y);
        i += 1;
    }
    if c.degree() > 0 {
        for (u, m) in squarefree_char_p(&c.monic(), p) {
            out.push((u, m * p as usize));
        }
    }
    out
}

/// Pairwise-coprime monic pieces `u_i^{m_i}` with product `f` (up to the
/// leading coefficient). A single piece means no gcd-accessible split exists.
pub fn coprime_pieces(f: &Poly) -> Vec<Poly> {
    let mut pieces: Vec<Poly> = squarefree_decomposition(f)
        .into_iter()
        .map(|(u, m)| {
            let mut acc = Poly::one(f.field);
            for _ in 0..m {
                acc = acc.mul(&u);
            }
            acc
        })
        .collect();
    // defensive merge: guarantee pairwise coprimality even if the
    // decomposition produced overlapping pieces
    'merge: loop {
        for i in 0..pieces.len() {
            for j in (i + 1)..pieces.len() {
                if gcd(&pieces[i], &pieces[j]).degree() > 0 {
                    let pj = pieces.remove(j);
                    pieces[i] = pieces[i].mul(&pj);
                    continue 'merge;
                }
            }
        }
        break;
    }
    pieces.sort_by(|a, b| a.degree().cmp(&b.degree()));
    pieces
}

/// Roots of a polynomial in the ground field. Over the rationals this is the
/// rational root theorem on the integer-cleared form (with a cap on divisor
/// enumeration); over a prime field a direct scan of residues.
pub fn field_roots(p: &Poly) -> Vec<Scalar> {
    use num::bigint::BigInt;
    use num::{One, Signed, Zero};
    let f = p.field;
    if p.degree() <= 0 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    match f {
        crate::field::FieldSpec::PrimeField(q) => {
            if q > 1 << 20 {
                return Vec::new();
            }
            for r in 0..q {
                let x = Scalar::Fp(r);
                let mut acc = f.zero();
                for c in p.coeffs.iter().rev() {
                    acc = f.add(&f.mul(&acc, &x), c);
                }
                if f.is_zero(&acc) {
                    roots.push(x);
                }
            }
        }
        crate::field::FieldSpec::Rationals => {
            // clear denominators
            let rats: Vec<&num::BigRational> = p
                .coeffs
                .iter()
                .map(|c| match c {
                    Scalar::Rat(r) => r,
                    _ => unreachable!(),
                })
                .collect();
            let mut lcm = BigInt::one();
            for r in &rats {
                let d = r.denom();
                let g = num::Integer::gcd(&lcm, d);
                lcm = &lcm / g * d;
            }
            let ints: Vec<BigInt> = rats
                .iter()
                .map(|r| (r.numer() * &lcm) / r.denom())
                .collect();
            // strip powers of t
            let low = ints.iter().position(|c| !c.is_zero()).unwrap();
            if low > 0 {
                roots.push(f.zero());
            }
            let a0 = ints[low].abs();
            let an = ints.last().unwrap().abs();
            let cap = BigInt::from(1_000_000u64);
            if a0 > cap || an > cap {
                return roots;
            }
            let divisors = |n: &BigInt| -> Vec<BigInt> {
                let nn: u64 = n.to_u64_digits().1.first().copied().unwrap_or(0);
                let mut out = Vec::new();
                let mut d = 1u64;
                while d * d <= nn {
                    if nn % d == 0 {
                        out.push(BigInt::from(d));
                        out.push(BigInt::from(nn / d));
                    }
                    d += 1;
                }
                out
            };
            for num_d in divisors(&a0) {
                for den_d in divisors(&an) {
                    for sign in [1i64, -1] {
                        let cand = Scalar::Rat(num::BigRational::new(
                            &num_d * BigInt::from(sign),
                            den_d.clone(),
                        ));
                        let mut acc = f.zero();
                        for c in p.coeffs.iter().rev() {
                            acc = f.add(&f.mul(&acc, &cand), c);
                        }
                        if f.is_zero(&acc) && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
    }
    roots
}

/// Coprime pieces of `f`, additionally split at roots in the ground field:
/// a factor `(t - r)^k` is peeled off each piece for every root `r`.
pub fn root_refined_pieces(f: &Poly) -> Vec<Poly> {
    let field = f.field;
    let mut out = Vec::new();
    for piece in coprime_pieces(f) {
        let mut rest = piece.clone();
        for r in field_roots(&piece) {
            let lin = Poly::new(field, vec![field.neg(&r), field.one()]);
            let mut power = Poly::one(field);
            loop {
                let (q, rem) = rest.divmod(&lin);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                power = power.mul(&lin);
            }
            if power.degree() > 0 {
                out.push(power);
            }
        }
        if rest.degree() > 0 {
            out.push(rest);
        }
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::new(q(), coeffs.iter().map(|&c| q().from_int(c)).collect())
    }

    #[test]
    fn divmod_roundtrip() {
        let a = poly(&[1, 0, 2, 1]); // 1 + 2x^2 + x^3
        let b = poly(&[1, 1]); // 1 + x
        let (quo, rem) = a.divmod(&b);
        assert_eq!(quo.mul(&b).add(&rem), a);
    }

    #[test]
    fn gcd_of_multiples() {
        let g = poly(&[1, 1]);
        let a = g.mul(&poly(&[2, 0, 1]));
        let b = g.mul(&poly(&[-1, 1]));
        assert_eq!(gcd(&a, &b), g.monic());
    }

    #[test]
    fn egcd_bezout() {
        let a = poly(&[-1, 0, 1]); // x^2 - 1
        let b = poly(&[2, 1]); // x + 2
        let (g, s, t) = egcd(&a, &b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert_eq!(g.degree(), 0);
    }

    #[test]
    fn squarefree_mixed_multiplicities() {
        // x^2 (x-1) (x+2)^3
        let p = poly(&[0, 1])
            .mul(&poly(&[0, 1]))
            .mul(&poly(&[-1, 1]))
            .mul(&poly(&[2, 1]))
            .mul(&poly(&[2, 1]))
            .mul(&poly(&[2, 1]));
        let dec = squarefree_decomposition(&p);
        let mut prod = Poly::one(q());
        for (u, m) in &dec {
            for _ in 0..*m {
                prod = prod.mul(u);
            }
        }
        assert_eq!(prod, p.monic());
        let mults: Vec<usize> = dec.iter().map(|(_, m)| *m).collect();
        assert_eq!(mults, vec![1, 2, 3]);
    }

    #[test]
    fn coprime_pieces_product_and_coprimality() {
        let p = poly(&[0, 0, 1]).mul(&poly(&[-1, 1])); // x^2 (x-1)
        let parts = coprime_pieces(&p);
        let prod = parts.iter().fold(Poly::one(q()), |acc, f| acc.mul(f));
        assert_eq!(prod, p.monic());
        assert_eq!(parts.len(), 2);
        for i in 0..parts.len() {
            for j in (i + 1)..parts.len() {
                assert_eq!(gcd(&parts[i], &parts[j]).degree(), 0);
            }
        }
    }

    #[test]
    fn coprime_pieces_pure_power_is_single() {
        let p = poly(&[0, 0, 0, 1]); // x^3
        let parts = coprime_pieces(&p);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0], p.monic());
    }

    #[test]
    fn squarefree_char_p_inseparable() {
        let f2 = FieldSpec::PrimeField(2);
        let pl = |c: &[i64]| Poly::new(f2, c.iter().map(|&x| f2.from_int(x)).collect());
        // (x+1)^2 = x^2 + 1 over F_2 has zero derivative
        let p = pl(&[1, 0, 1]);
        let dec = squarefree_decomposition(&p);
        assert_eq!(dec.len(), 1);
        assert_eq!(dec[0].1, 2);
        assert_eq!(dec[0].0, pl(&[1, 1]));
    }

    #[test]
    fn rational_roots_found() {
        // (t - 1/2)(t + 3) t
        let p = poly(&[0, 1])
            .mul(&Poly::new(
                q(),
                vec![q().parse_scalar("-1/2").unwrap(), q().one()],
            ))
            .mul(&poly(&[3, 1]));
        let mut roots = field_roots(&p);
        roots.sort_by_key(|r| q().format_scalar(r));
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&q().parse_scalar("1/2").unwrap()));
        assert!(roots.contains(&q().from_int(-3)));
        assert!(roots.contains(&q().zero()));
    }

    #[test]
    fn root_refined_pieces_split_separable() {
        // t(t-1) splits into two linear pieces
        let p = poly(&[0, 1]).mul(&poly(&[-1, 1]));
        let parts = root_refined_pieces(&p);
        assert_eq!(parts.len(), 2);
        // t^2 + 1 stays whole over Q
        let p2 = poly(&[1, 0, 1]);
        assert_eq!(root_refined_pieces(&p2).len(), 1);
        // roots over F5: t^2 + 1 = (t-2)(t-3)
        let f5 = FieldSpec::PrimeField(5);
        let p3 = Poly::new(f5, vec![f5.one(), f5.zero(), f5.one()]);
        assert_eq!(root_refined_pieces(&p3).len(), 2);
    }

    #[test]
    fn eval_matrix_cayley_hamilton_style() {
        use crate::linalg::Matrix;
        let m = Matrix::from_ints(q(), &[&[0, 1], &[0, 0]]);
        let p = poly(&[0, 0, 1]); // x^2
        assert!(p.eval_matrix(&m).is_zero());
    }
}
