//! Internal element payloads and arithmetic for characteristic-2 field towers.
//!
//! A tower is GF(2) at the bottom, a stack of algebraic layers (each a
//! polynomial quotient over the layer below) and optionally one rational
//! function layer on top. The shape of an [`Elem`] matches the top layer of
//! the slice of [`Layer`]s it is interpreted against: `Bit` at GF(2), `Ext`
//! at an algebraic layer, `Frac` at the transcendental layer.
//!
//! Every constructor keeps elements canonical: coefficient vectors carry no
//! trailing zeros, fractions are reduced with a monic denominator. Structural
//! equality of payloads is therefore field equality.

use crate::error::{Error, Result};

/// One layer of a field tower, on top of the layers below it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) enum Layer {
    /// F[g]/(modulus); `modulus` is monic of degree >= 2 with coefficients
    /// one level down, stored little-endian with the leading 1 included.
    Algebraic { name: String, modulus: Vec<Elem> },
    /// F(v), rational functions in `v` over the (finite) tower below.
    Transcendental { name: String },
}

impl Layer {
    pub(crate) fn name(&self) -> &str {
        match self {
            Layer::Algebraic { name, .. } => name,
            Layer::Transcendental { name } => name,
        }
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        match self {
            Layer::Algebraic { modulus, .. } => Some(modulus.len() - 1),
            Layer::Transcendental { .. } => None,
        }
    }
}

/// Canonical element payload; see module docs for the shape invariants.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) enum Elem {
    Bit(bool),
    Ext(Vec<Elem>),
    Frac(Vec<Elem>, Vec<Elem>),
}

pub(crate) fn zero(ctx: &[Layer]) -> Elem {
    match ctx.last() {
        None => Elem::Bit(false),
        Some(Layer::Algebraic { .. }) => Elem::Ext(Vec::new()),
        Some(Layer::Transcendental { .. }) => {
            let sub = &ctx[..ctx.len() - 1];
            Elem::Frac(Vec::new(), vec![one(sub)])
        }
    }
}

pub(crate) fn one(ctx: &[Layer]) -> Elem {
    match ctx.last() {
        None => Elem::Bit(true),
        Some(Layer::Algebraic { .. }) => {
            let sub = &ctx[..ctx.len() - 1];
            Elem::Ext(vec![one(sub)])
        }
        Some(Layer::Transcendental { .. }) => {
            let sub = &ctx[..ctx.len() - 1];
            Elem::Frac(vec![one(sub)], vec![one(sub)])
        }
    }
}

pub(crate) fn from_bit(ctx: &[Layer], b: bool) -> Elem {
    if b {
        one(ctx)
    } else {
        zero(ctx)
    }
}

pub(crate) fn is_zero(e: &Elem) -> bool {
    match e {
        Elem::Bit(b) => !*b,
        Elem::Ext(c) => c.is_empty(),
        Elem::Frac(n, _) => n.is_empty(),
    }
}

pub(crate) fn is_one(ctx: &[Layer], e: &Elem) -> bool {
    *e == one(ctx)
}

/// Lift an element of the sub-field into the top layer.
pub(crate) fn lift(ctx: &[Layer], e: Elem) -> Elem {
    match ctx.last().expect("lift needs a layer") {
        Layer::Algebraic { .. } => {
            if is_zero(&e) {
                Elem::Ext(Vec::new())
            } else {
                Elem::Ext(vec![e])
            }
        }
        Layer::Transcendental { .. } => {
            let sub = &ctx[..ctx.len() - 1];
            if is_zero(&e) {
                zero(ctx)
            } else {
                Elem::Frac(vec![e], vec![one(sub)])
            }
        }
    }
}

pub(crate) fn add(ctx: &[Layer], a: &Elem, b: &Elem) -> Elem {
    match ctx.last() {
        None => match (a, b) {
            (Elem::Bit(x), Elem::Bit(y)) => Elem::Bit(x ^ y),
            _ => unreachable!("payload shape mismatch at GF(2)"),
        },
        Some(Layer::Algebraic { .. }) => {
            let sub = &ctx[..ctx.len() - 1];
            let (Elem::Ext(x), Elem::Ext(y)) = (a, b) else {
                unreachable!("payload shape mismatch at algebraic layer")
            };
            Elem::Ext(padd(sub, x, y))
        }
        Some(Layer::Transcendental { .. }) => {
            let sub = &ctx[..ctx.len() - 1];
            let (Elem::Frac(n1, d1), Elem::Frac(n2, d2)) = (a, b) else {
                unreachable!("payload shape mismatch at transcendental layer")
            };
            let num = padd(sub, &pmul(sub, n1, d2), &pmul(sub, n2, d1));
            let den = pmul(sub, d1, d2);
            frac_normalized(sub, num, den)
        }
    }
}

pub(crate) fn mul(ctx: &[Layer], a: &Elem, b: &Elem) -> Elem {
    match ctx.last() {
        None => match (a, b) {
            (Elem::Bit(x), Elem::Bit(y)) => Elem::Bit(x & y),
            _ => unreachable!("payload shape mismatch at GF(2)"),
        },
        Some(Layer::Algebraic { modulus, .. }) => {
            let sub = &ctx[..ctx.len() - 1];
            let (Elem::Ext(x), Elem::Ext(y)) = (a, b) else {
                unreachable!("payload shape mismatch at algebraic layer")
            };
            let prod = pmul(sub, x, y);
            Elem::Ext(prem(sub, &prod, modulus))
        }
        Some(Layer::Transcendental { .. }) => {
            let sub = &ctx[..ctx.len() - 1];
            let (Elem::Frac(n1, d1), Elem::Frac(n2, d2)) = (a, b) else {
                unreachable!("payload shape mismatch at transcendental layer")
            };
            frac_normalized(sub, pmul(sub, n1, n2), pmul(sub, d1, d2))
        }
    }
}

pub(crate) fn square(ctx: &[Layer], a: &Elem) -> Elem {
    mul(ctx, a, a)
}

pub(crate) fn inv(ctx: &[Layer], a: &Elem) -> Result<Elem> {
    if is_zero(a) {
        return Err(Error::DivisionByZero);
    }
    match ctx.last() {
        None => Ok(Elem::Bit(true)),
        Some(Layer::Algebraic { modulus, .. }) => {
            let sub = &ctx[..ctx.len() - 1];
            let Elem::Ext(x) = a else {
                unreachable!("payload shape mismatch at algebraic layer")
            };
            Ok(Elem::Ext(pinv_mod(sub, x, modulus)?))
        }
        Some(Layer::Transcendental { .. }) => {
            let sub = &ctx[..ctx.len() - 1];
            let Elem::Frac(n, d) = a else {
                unreachable!("payload shape mismatch at transcendental layer")
            };
            Ok(frac_normalized(sub, d.clone(), n.clone()))
        }
    }
}

pub(crate) fn div(ctx: &[Layer], a: &Elem, b: &Elem) -> Result<Elem> {
    Ok(mul(ctx, a, &inv(ctx, b)?))
}

pub(crate) fn pow(ctx: &[Layer], a: &Elem, mut e: u64) -> Elem {
    let mut base = a.clone();
    let mut acc = one(ctx);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(ctx, &acc, &base);
        }
        base = square(ctx, &base);
        e >>= 1;
    }
    acc
}

/// GF(2)-dimension of a finite tower; `None` if a transcendental layer is present.
pub(crate) fn finite_dim(ctx: &[Layer]) -> Option<usize> {
    let mut dim = 1usize;
    for layer in ctx {
        dim *= layer.degree()?;
    }
    Some(dim)
}

/// Square root in a finite tower (Frobenius is bijective there).
pub(crate) fn sqrt_finite(ctx: &[Layer], a: &Elem) -> Elem {
    let dim = finite_dim(ctx).expect("sqrt_finite needs a finite tower");
    let mut r = a.clone();
    for _ in 0..dim.saturating_sub(1) {
        r = square(ctx, &r);
    }
    debug_assert_eq!(square(ctx, &r), *a);
    r
}

/// Flatten a finite-tower element into GF(2) coordinates (dimension = finite_dim).
pub(crate) fn to_bits(ctx: &[Layer], e: &Elem) -> Vec<bool> {
    match ctx.last() {
        None => {
            let Elem::Bit(b) = e else { unreachable!() };
            vec![*b]
        }
        Some(Layer::Algebraic { modulus, .. }) => {
            let sub = &ctx[..ctx.len() - 1];
            let deg = modulus.len() - 1;
            let Elem::Ext(c) = e else { unreachable!() };
            let mut out = Vec::new();
            for i in 0..deg {
                let coeff = c.get(i).cloned().unwrap_or_else(|| zero(sub));
                out.extend(to_bits(sub, &coeff));
            }
            out
        }
        Some(Layer::Transcendental { .. }) => panic!("to_bits needs a finite tower"),
    }
}

pub(crate) fn from_bits(ctx: &[Layer], bits: &[bool]) -> Elem {
    match ctx.last() {
        None => Elem::Bit(bits[0]),
        Some(Layer::Algebraic { modulus, .. }) => {
            let sub = &ctx[..ctx.len() - 1];
            let deg = modulus.len() - 1;
            let sub_dim = finite_dim(sub).expect("from_bits needs a finite tower");
            let coeffs = (0..deg)
                .map(|i| from_bits(sub, &bits[i * sub_dim..(i + 1) * sub_dim]))
                .collect();
            Elem::Ext(ptrim(coeffs))
        }
        Some(Layer::Transcendental { .. }) => panic!("from_bits needs a finite tower"),
    }
}

/// All elements of a finite tower in lexicographic coefficient order
/// (coefficient 0 most significant, zero before one).
pub(crate) fn enumerate(ctx: &[Layer]) -> Vec<Elem> {
    match ctx.last() {
        None => vec![Elem::Bit(false), Elem::Bit(true)],
        Some(Layer::Algebraic { modulus, .. }) => {
            let sub = &ctx[..ctx.len() - 1];
            let deg = modulus.len() - 1;
            let below = enumerate(sub);
            let mut out: Vec<Vec<Elem>> = vec![Vec::new()];
            for _ in 0..deg {
                let mut next = Vec::with_capacity(out.len() * below.len());
                for prefix in &out {
                    for c in &below {
                        let mut v = prefix.clone();
                        v.push(c.clone());
                        next.push(v);
                    }
                }
                out = next;
            }
            out.into_iter().map(|v| Elem::Ext(ptrim(v))).collect()
        }
        Some(Layer::Transcendental { .. }) => panic!("enumerate needs a finite tower"),
    }
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over a tower level: little-endian Vec<Elem>
// with no trailing zeros. `c` is the coefficient field context.
// ---------------------------------------------------------------------------

pub(crate) fn ptrim(mut v: Vec<Elem>) -> Vec<Elem> {
    while v.last().map_or(false, is_zero) {
        v.pop();
    }
    v
}

pub(crate) fn pdeg(p: &[Elem]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub(crate) fn pconst(c: &[Layer], e: Elem) -> Vec<Elem> {
    let _ = c;
    if is_zero(&e) {
        Vec::new()
    } else {
        vec![e]
    }
}

pub(crate) fn padd(c: &[Layer], a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| zero(c));
        let y = b.get(i).cloned().unwrap_or_else(|| zero(c));
        out.push(add(c, &x, &y));
    }
    ptrim(out)
}

pub(crate) fn pmul(c: &[Layer], a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![zero(c); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = mul(c, x, y);
            out[i + j] = add(c, &out[i + j], &t);
        }
    }
    ptrim(out)
}

pub(crate) fn pscale(c: &[Layer], a: &[Elem], s: &Elem) -> Vec<Elem> {
    ptrim(a.iter().map(|x| mul(c, x, s)).collect())
}

/// Quotient and remainder; the divisor may have any nonzero leading coefficient.
pub(crate) fn pdivrem(c: &[Layer], a: &[Elem], b: &[Elem]) -> Result<(Vec<Elem>, Vec<Elem>)> {
    if b.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let db = b.len() - 1;
    let lead_inv = inv(c, b.last().unwrap())?;
    let mut rem: Vec<Elem> = a.to_vec();
    if rem.len() <= db {
        return Ok((Vec::new(), ptrim(rem)));
    }
    let mut quot = vec![zero(c); rem.len() - db];
    while rem.len() > db {
        let da = rem.len() - 1;
        let q = mul(c, rem.last().unwrap(), &lead_inv);
        let shift = da - db;
        for i in 0..=db {
            let t = mul(c, &b[i], &q);
            rem[shift + i] = add(c, &rem[shift + i], &t);
        }
        quot[shift] = q;
        rem = ptrim(rem);
        if rem.len() <= shift {
            break;
        }
    }
    Ok((ptrim(quot), ptrim(rem)))
}

pub(crate) fn prem(c: &[Layer], a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    pdivrem(c, a, b).expect("nonzero modulus").1
}

/// Exact division; panics if the division leaves a remainder.
pub(crate) fn pdiv_exact(c: &[Layer], a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let (q, r) = pdivrem(c, a, b).expect("nonzero divisor");
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

pub(crate) fn pmonic(c: &[Layer], a: &[Elem]) -> Vec<Elem> {
    match a.last() {
        None => Vec::new(),
        Some(l) if is_one(c, l) => a.to_vec(),
        Some(l) => {
            let li = inv(c, l).expect("nonzero leading coefficient");
            pscale(c, a, &li)
        }
    }
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) is an error.
pub(crate) fn pgcd(c: &[Layer], a: &[Elem], b: &[Elem]) -> Result<Vec<Elem>> {
    if a.is_empty() && b.is_empty() {
        return Err(Error::Precondition("gcd of two zero polynomials".into()));
    }
    let mut f = a.to_vec();
    let mut g = b.to_vec();
    while !g.is_empty() {
        let r = prem(c, &f, &g);
        f = g;
        g = r;
    }
    Ok(pmonic(c, &f))
}

/// Inverse of `a` modulo `m` (extended Euclid); error if gcd(a, m) != 1.
pub(crate) fn pinv_mod(c: &[Layer], a: &[Elem], m: &[Elem]) -> Result<Vec<Elem>> {
    let mut r0 = m.to_vec();
    let mut r1 = prem(c, a, m);
    let mut s0: Vec<Elem> = Vec::new();
    let mut s1 = vec![one(c)];
    while !r1.is_empty() {
        let (q, r) = pdivrem(c, &r0, &r1)?;
        let s = padd(c, &s0, &pmul(c, &q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if pdeg(&r0) != Some(0) {
        return Err(Error::DivisionByZero);
    }
    let li = inv(c, &r0[0])?;
    Ok(prem(c, &pscale(c, &s0, &li), m))
}

/// Formal derivative; in characteristic 2 only odd-degree terms survive.
pub(crate) fn pderiv(c: &[Layer], a: &[Elem]) -> Vec<Elem> {
    let mut out = Vec::new();
    for (i, x) in a.iter().enumerate().skip(1) {
        if i % 2 == 1 {
            out.push(x.clone());
        } else {
            out.push(zero(c));
        }
    }
    // shift down by one: derivative of c_i x^i is i*c_i x^(i-1)
    ptrim(out)
}

pub(crate) fn peval(c: &[Layer], a: &[Elem], x: &Elem) -> Elem {
    let mut acc = zero(c);
    for coeff in a.iter().rev() {
        acc = mul(c, &acc, x);
        acc = add(c, &acc, coeff);
    }
    acc
}

/// Square root of a polynomial that is a square (all odd coefficients zero),
/// over a finite coefficient tower.
pub(crate) fn psqrt(c: &[Layer], a: &[Elem]) -> Result<Vec<Elem>> {
    let mut out = Vec::new();
    for (i, x) in a.iter().enumerate() {
        if i % 2 == 1 {
            if !is_zero(x) {
                return Err(Error::Precondition("polynomial is not a square".into()));
            }
        } else {
            out.push(sqrt_finite(c, x));
        }
    }
    Ok(ptrim(out))
}

pub(crate) fn frac_normalized(c: &[Layer], num: Vec<Elem>, den: Vec<Elem>) -> Elem {
    assert!(!den.is_empty(), "zero denominator");
    if num.is_empty() {
        return Elem::Frac(Vec::new(), vec![one(c)]);
    }
    let g = pgcd(c, &num, &den).expect("nonzero inputs");
    let (num, den) = if pdeg(&g) == Some(0) {
        (num, den)
    } else {
        (pdiv_exact(c, &num, &g), pdiv_exact(c, &den, &g))
    };
    let li = inv(c, den.last().unwrap()).expect("nonzero leading coefficient");
    Elem::Frac(pscale(c, &num, &li), pscale(c, &den, &li))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Vec<Layer> {
        // GF(2)[a]/(a^2+a+1)
        vec![Layer::Algebraic {
            name: "a".into(),
            modulus: vec![Elem::Bit(true), Elem::Bit(true), Elem::Bit(true)],
        }]
    }

    fn gen(ctx: &[Layer]) -> Elem {
        // the top-layer generator as an element
        let sub = &ctx[..ctx.len() - 1];
        Elem::Ext(vec![zero(sub), one(sub)])
    }

    #[test]
    fn char_two_addition_cancels() {
        let f4 = gf4();
        let a = gen(&f4);
        assert!(is_zero(&add(&f4, &a, &a)));
    }

    #[test]
    fn gf4_inverse_of_generator() {
        // oracle: scan all four elements for a * x = 1
        let f4 = gf4();
        let a = gen(&f4);
        let mut found = None;
        for x in enumerate(&f4) {
            if is_one(&f4, &mul(&f4, &a, &x)) {
                found = Some(x);
            }
        }
        let expected = found.expect("a is invertible");
        assert_eq!(inv(&f4, &a).unwrap(), expected);
        // a * (a+1) = a^2 + a = 1
        assert_eq!(expected, add(&f4, &a, &one(&f4)));
    }

    #[test]
    fn fraction_common_denominator() {
        // t/(t+1) + 1/(t+1) = 1 over GF(2)(t)
        let ctx = vec![Layer::Transcendental { name: "t".into() }];
        let t = Elem::Frac(
            vec![Elem::Bit(false), Elem::Bit(true)],
            vec![Elem::Bit(true)],
        );
        let one_t = one(&ctx);
        let den = vec![Elem::Bit(true), Elem::Bit(true)];
        let a = Elem::Frac(vec![Elem::Bit(false), Elem::Bit(true)], den.clone());
        let b = Elem::Frac(vec![Elem::Bit(true)], den);
        assert_eq!(add(&ctx, &a, &b), one_t);
        let _ = t;
    }

    #[test]
    fn fraction_arithmetic_reduces() {
        // (t^2+t)/(t+1) should normalize to t
        let ctx = vec![Layer::Transcendental { name: "t".into() }];
        let raw = frac_normalized(
            &[],
            vec![Elem::Bit(false), Elem::Bit(true), Elem::Bit(true)],
            vec![Elem::Bit(true), Elem::Bit(true)],
        );
        let t = Elem::Frac(
            vec![Elem::Bit(false), Elem::Bit(true)],
            vec![Elem::Bit(true)],
        );
        assert_eq!(raw, t);
        let _ = ctx;
    }

    #[test]
    fn poly_division_round_trips() {
        let f4 = gf4();
        let a = gen(&f4);
        // f = (x^2 + a x + 1)(x + a) + (a+1)
        let g = vec![a.clone(), one(&f4)];
        let q = vec![one(&f4), a.clone(), one(&f4)];
        let r = vec![add(&f4, &a, &one(&f4))];
        let f = padd(&f4, &pmul(&f4, &g, &q), &r);
        let (q2, r2) = pdivrem(&f4, &f, &g).unwrap();
        assert_eq!(q2, q);
        assert_eq!(r2, r);
    }

    #[test]
    fn gcd_of_square_in_char_two() {
        // x^2+1 = (x+1)^2, gcd with x+1 is x+1
        let f = vec![Elem::Bit(true), Elem::Bit(false), Elem::Bit(true)];
        let g = vec![Elem::Bit(true), Elem::Bit(true)];
        assert_eq!(pgcd(&[], &f, &g).unwrap(), g);
    }

    #[test]
    fn frobenius_is_additive() {
        let f4 = gf4();
        for x in enumerate(&f4) {
            for y in enumerate(&f4) {
                let lhs = square(&f4, &add(&f4, &x, &y));
                let rhs = add(&f4, &square(&f4, &x), &square(&f4, &y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn sqrt_inverts_square() {
        let f4 = gf4();
        for x in enumerate(&f4) {
            assert_eq!(sqrt_finite(&f4, &square(&f4, &x)), x);
        }
    }

    #[test]
    fn bits_round_trip() {
        let f16 = vec![
            Layer::Algebraic {
                name: "a".into(),
                modulus: vec![Elem::Bit(true), Elem::Bit(true), Elem::Bit(true)],
            },
            Layer::Algebraic {
                name: "b".into(),
                modulus: vec![
                    Elem::Ext(vec![Elem::Bit(false), Elem::Bit(true)]),
                    Elem::Ext(vec![Elem::Bit(true)]),
                    Elem::Ext(vec![Elem::Bit(true)]),
                ],
            },
        ];
        assert_eq!(finite_dim(&f16), Some(4));
        for e in enumerate(&f16) {
            let bits = to_bits(&f16, &e);
            assert_eq!(bits.len(), 4);
            assert_eq!(from_bits(&f16, &bits), e);
        }
    }
}
